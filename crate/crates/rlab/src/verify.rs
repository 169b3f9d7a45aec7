//! The bijection between noncrossing involutions and Richardson tableaux,
//! its prime-case reduction, and exhaustive checkers for the counting and
//! q-series identities the library is organized around.
//!
//! Every checker compares an enumeration-side computation against an
//! independently computed formula side and reports exact equality; there are
//! no tolerances. Families on the enumeration side are produced in canonical
//! order, so a failing checker always reports the same first counterexample.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::count::{binomial, catalan_number, motzkin_number};
use crate::error::{Error, Result};
use crate::matching::{involutions, PartialMatching};
use crate::motzkin::{motzkin_to_matching, noncrossing_matchings, MotzkinPaths};
use crate::permutation::{Permutation, Permutations};
use crate::qpoly::{q_binomial, q_catalan, q_narayana, QPolynomial};
use crate::richardson::{is_richardson, is_richardson_by, RichardsonMethod};
use crate::rs::{evacuation, insertion_tableau, rs_inverse, rs_pair};
use crate::tableau::{StandardTableaux, Tableau};

/// Sends a noncrossing involution to its insertion tableau.
pub fn phi(w: &Permutation) -> Result<Tableau> {
    if !w.is_involution() {
        return Err(Error::Involution(format!(
            "{} differs from its inverse",
            w
        )));
    }
    let m = PartialMatching::from_involution(w).expect("involutions are matchings");
    if !m.is_noncrossing() {
        let (a, b) = m.crossing_pairs()[0];
        return Err(Error::NotNoncrossing(format!(
            "arcs ({},{}) and ({},{}) cross",
            a.0, a.1, b.0, b.1
        )));
    }
    let (p, q) = rs_pair(w);
    debug_assert_eq!(p, q);
    Ok(p)
}

/// Inverts insertion on a prime Richardson tableau, strips the outer arc,
/// relabels, and re-inserts, landing on a Richardson tableau two sizes down.
pub fn psi(t: &Tableau) -> Result<Tableau> {
    if !t.is_standard() || !is_richardson(t) {
        return Err(Error::NotRichardson);
    }
    if !t.is_prime() {
        return Err(Error::NotPrime);
    }
    let n = t.size();
    if n < 2 {
        return Err(Error::Shape(
            "a single box carries no arc to strip".into(),
        ));
    }
    let w = rs_inverse(t, t).expect("a Richardson tableau is its own recording tableau");
    debug_assert_eq!(w.apply(1), n);
    let stripped: Vec<usize> = (2..n).map(|i| w.apply(i) - 1).collect();
    let inner = Permutation::new(stripped).expect("stripping the outer arc leaves a permutation");
    phi(&inner)
}

/// Outcome of one verification cell. `lhs`/`rhs` hold the two compared
/// values when the check is an equality of counts or polynomials.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<ReportValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<ReportValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ReportValue {
    Count(u128),
    Poly(QPolynomial),
}

impl Report {
    fn new(check: &str, n: usize) -> Report {
        Report {
            check: check.to_string(),
            n,
            k: None,
            m: None,
            pass: true,
            count: None,
            lhs: None,
            rhs: None,
            counterexample: None,
            elapsed_ms: 0,
        }
    }

    fn fail(&mut self, why: String) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(why);
        }
    }

    fn finish(mut self, start: Instant) -> Report {
        self.elapsed_ms = start.elapsed().as_millis();
        self
    }
}

fn syt_richardson(n: usize) -> impl Iterator<Item = Tableau> {
    StandardTableaux::new(n).filter(|t| is_richardson(t))
}

fn noncrossing_involutions(n: usize) -> impl Iterator<Item = Permutation> {
    noncrossing_matchings(n).map(|m| m.to_involution())
}

/// Richardson tableaux with all columns of even height, built from perfect
/// noncrossing matchings.
fn even_richardson(n: usize) -> impl Iterator<Item = Tableau> {
    MotzkinPaths::dyck(n).map(|p| {
        let t = phi(&motzkin_to_matching(&p).to_involution())
            .expect("decoded matchings are noncrossing");
        debug_assert_eq!(t.statistics().odd_columns, 0);
        t
    })
}

fn require_even(n: usize) -> Result<()> {
    if n % 2 != 0 || n == 0 {
        return Err(Error::Shape(format!(
            "this check needs a positive even size, got {}",
            n
        )));
    }
    Ok(())
}

/// Insertion maps the noncrossing involutions on [n] bijectively onto the
/// Richardson tableaux of size n, of which there are Motzkin-many.
pub fn verify_theorem1(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("thm1", n);
    let mut image = BTreeSet::new();
    let mut enumerated = 0u128;
    for w in noncrossing_involutions(n) {
        enumerated += 1;
        let t = phi(&w)?;
        if !image.insert(t.clone()) {
            r.fail(format!("{} maps to the already seen tableau {}", w, t));
        }
    }
    let filtered: BTreeSet<Tableau> = syt_richardson(n).collect();
    if image != filtered {
        let witness = image
            .symmetric_difference(&filtered)
            .next()
            .expect("unequal sets differ somewhere");
        r.fail(format!("{} lies in exactly one of the two sets", witness));
    }
    let expected = motzkin_number(n)?;
    if enumerated != expected || image.len() as u128 != expected {
        r.fail(format!(
            "expected {} tableaux, enumerated {} and collected {}",
            expected,
            enumerated,
            image.len()
        ));
    }
    r.count = Some(image.len() as u128);
    Ok(r.finish(start))
}

/// Counts Richardson tableaux by odd columns against the closed formula and
/// the fixed-point counts of noncrossing involutions, then checks shape-wise
/// that prime tableaux are as numerous as all Richardson tableaux two sizes
/// down with the last two rows removed.
pub fn verify_counting(n: usize, limit: usize) -> Result<Vec<Report>> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut by_odd: BTreeMap<usize, u128> = BTreeMap::new();
    let mut prime_by_shape: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
    for t in syt_richardson(n) {
        *by_odd.entry(t.statistics().odd_columns).or_insert(0) += 1;
        if t.is_prime() {
            *prime_by_shape.entry(t.shape().parts().to_vec()).or_insert(0) += 1;
        }
    }
    let mut by_fixed: BTreeMap<usize, u128> = BTreeMap::new();
    for w in noncrossing_involutions(n) {
        *by_fixed.entry(w.statistics().fixed_points.len()).or_insert(0) += 1;
    }

    let mut reports = Vec::new();
    for k in (n % 2..=n).step_by(2) {
        let enumerated = by_odd.get(&k).copied().unwrap_or(0);
        let fixed = by_fixed.get(&k).copied().unwrap_or(0);
        let formula = binomial(n as u128, k as u128)?
            .checked_mul(catalan_number((n - k) / 2)?)
            .ok_or(Error::Overflow("odd-column count"))?;
        let mut r = Report::new("counting", n);
        r.k = Some(k);
        r.count = Some(enumerated);
        r.lhs = Some(ReportValue::Count(enumerated));
        r.rhs = Some(ReportValue::Count(formula));
        if enumerated != formula {
            r.fail(format!(
                "{} tableaux with {} odd columns, formula gives {}",
                enumerated, k, formula
            ));
        }
        if fixed != enumerated {
            r.fail(format!(
                "{} involutions with {} fixed points against {} tableaux",
                fixed, k, enumerated
            ));
        }
        reports.push(r.finish(start));
    }

    if n >= 2 {
        let mut r = Report::new("prime-shapes", n);
        let mut rt_small_by_shape: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
        for t in syt_richardson(n - 2) {
            *rt_small_by_shape
                .entry(t.shape().parts().to_vec())
                .or_insert(0) += 1;
        }
        let mut transformed: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
        let mut total = 0u128;
        for (shape, &count) in &prime_by_shape {
            total += count;
            let l = shape.len();
            if l >= 2 && shape[l - 1] == 1 && shape[l - 2] == 1 {
                *transformed.entry(shape[..l - 2].to_vec()).or_insert(0) += count;
            } else {
                r.fail(format!(
                    "prime shape {:?} does not end in two single-box rows",
                    shape
                ));
            }
        }
        if transformed != rt_small_by_shape {
            let witness = transformed
                .keys()
                .chain(rt_small_by_shape.keys())
                .find(|s| transformed.get(*s) != rt_small_by_shape.get(*s));
            r.fail(format!(
                "per-shape prime counts disagree with the smaller family at {:?}",
                witness
            ));
        }
        let expected_total = motzkin_number(n - 2)?;
        if total != expected_total {
            r.fail(format!(
                "{} prime tableaux in all, expected {}",
                total, expected_total
            ));
        }
        r.count = Some(total);
        reports.push(r.finish(start));
    }
    Ok(reports)
}

/// The comajor generating function over all-even-column Richardson tableaux
/// of size n equals the q-Catalan polynomial of n/2.
pub fn verify_qcatalan(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    require_even(n)?;
    let start = Instant::now();
    let mut r = Report::new("qcatalan", n);
    let mut lhs = QPolynomial::zero();
    let mut count = 0u128;
    for t in even_richardson(n) {
        lhs = lhs.add(&QPolynomial::monomial(1, t.statistics().comaj))?;
        count += 1;
    }
    let rhs = q_catalan(n / 2)?;
    if lhs != rhs {
        r.fail(format!("comaj series {} differs from {}", lhs, rhs));
    }
    r.count = Some(count);
    r.lhs = Some(ReportValue::Poly(lhs));
    r.rhs = Some(ReportValue::Poly(rhs));
    Ok(r.finish(start))
}

/// Refines the q-Catalan identity by ascent count: the comajor series over
/// all-even-column Richardson tableaux with m ascents is the q-Narayana
/// polynomial.
pub fn verify_qnarayana(n: usize, limit: usize) -> Result<Vec<Report>> {
    crate::check_limit(n, limit)?;
    require_even(n)?;
    let start = Instant::now();
    let mut buckets: BTreeMap<usize, QPolynomial> = BTreeMap::new();
    for t in even_richardson(n) {
        let st = t.statistics();
        let e = buckets
            .entry(st.ascent_set.len())
            .or_insert_with(QPolynomial::zero);
        *e = e.add(&QPolynomial::monomial(1, st.comaj))?;
    }
    let half = n / 2;
    let observed_top = buckets.keys().next_back().copied().unwrap_or(0);
    let mut reports = Vec::new();
    for m in 0..=observed_top.max(half - 1) {
        let lhs = buckets.get(&m).cloned().unwrap_or_else(QPolynomial::zero);
        let rhs = q_narayana(half, m)?;
        let mut r = Report::new("qnarayana", n);
        r.m = Some(m);
        if lhs != rhs {
            r.fail(format!(
                "comaj series {} with {} ascents differs from {}",
                lhs, m, rhs
            ));
        }
        r.lhs = Some(ReportValue::Poly(lhs));
        r.rhs = Some(ReportValue::Poly(rhs));
        reports.push(r.finish(start));
    }
    Ok(reports)
}

/// For each admissible k, the comajor series over Richardson tableaux with
/// k odd columns is conjectured to be
/// q^(k choose 2) * qbinomial(n, k) * qcatalan((n - k) / 2);
/// checked against both the tableau enumeration and the equivalent sum over
/// noncrossing involutions with k fixed points.
pub fn verify_conjecture(n: usize, limit: usize) -> Result<Vec<Report>> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut tableau_side: BTreeMap<usize, QPolynomial> = BTreeMap::new();
    for t in syt_richardson(n) {
        let st = t.statistics();
        let e = tableau_side
            .entry(st.odd_columns)
            .or_insert_with(QPolynomial::zero);
        *e = e.add(&QPolynomial::monomial(1, st.comaj))?;
    }
    let mut involution_side: BTreeMap<usize, QPolynomial> = BTreeMap::new();
    for w in noncrossing_involutions(n) {
        let st = w.statistics();
        let e = involution_side
            .entry(st.fixed_points.len())
            .or_insert_with(QPolynomial::zero);
        *e = e.add(&QPolynomial::monomial(1, st.comaj))?;
    }
    let mut reports = Vec::new();
    for k in (n % 2..=n).step_by(2) {
        let lhs = tableau_side
            .get(&k)
            .cloned()
            .unwrap_or_else(QPolynomial::zero);
        let via_involutions = involution_side
            .get(&k)
            .cloned()
            .unwrap_or_else(QPolynomial::zero);
        let rhs = q_binomial(n, k)?
            .mul(&q_catalan((n - k) / 2)?)?
            .shift(k * k.saturating_sub(1) / 2);
        let mut r = Report::new("conjecture", n);
        r.k = Some(k);
        r.count = Some(lhs.eval_at_one()? as u128);
        if lhs != rhs {
            r.fail(format!(
                "tableau comaj series {} differs from the closed form {}",
                lhs, rhs
            ));
        }
        if via_involutions != lhs {
            r.fail(format!(
                "involution comaj series {} differs from the tableau series {}",
                via_involutions, lhs
            ));
        }
        r.lhs = Some(ReportValue::Poly(lhs));
        r.rhs = Some(ReportValue::Poly(rhs));
        reports.push(r.finish(start));
    }
    Ok(reports)
}

/// Closed form for the number of evacuation-fixed Richardson tableaux: a sum
/// over subsets of big-arc positions of products of Motzkin numbers over the
/// gaps. Exponential in n/2, intended for sizes within the enumeration
/// limits.
pub fn evac_fixed_count(n: usize) -> Result<u128> {
    let h = n / 2;
    if h >= 64 {
        return Err(Error::Overflow("evacuation fixed count"));
    }
    let mut total = 0u128;
    for mask in 0u64..(1u64 << h) {
        let mut positions = vec![0usize];
        for i in 1..=h {
            if mask & (1 << (i - 1)) != 0 {
                positions.push(i);
            }
        }
        positions.push(h + 1);
        let mut prod = 1u128;
        for pair in positions.windows(2) {
            let gap = pair[1] - pair[0] - 1;
            prod = prod
                .checked_mul(motzkin_number(gap)?)
                .ok_or(Error::Overflow("evacuation fixed count"))?;
        }
        total = total
            .checked_add(prod)
            .ok_or(Error::Overflow("evacuation fixed count"))?;
    }
    Ok(total)
}

/// Evacuation restricted to Richardson tableaux: closure, involutivity, and
/// the fixed-point count against both the closed form and the number of
/// reflection-symmetric noncrossing matchings.
pub fn verify_evac(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("evac", n);
    let mut fixed = 0u128;
    for t in syt_richardson(n) {
        let e = evacuation(&t)?;
        if !is_richardson(&e) {
            r.fail(format!("evacuation leaves the family at {}", t));
            continue;
        }
        if evacuation(&e)? != t {
            r.fail(format!("evacuation fails to be an involution at {}", t));
        }
        if e == t {
            fixed += 1;
        }
    }
    let formula = evac_fixed_count(n)?;
    let symmetric = noncrossing_involutions(n)
        .filter(|w| &w.conjugate_by_w0() == w)
        .count() as u128;
    if fixed != formula {
        r.fail(format!(
            "{} evacuation-fixed tableaux, closed form gives {}",
            fixed, formula
        ));
    }
    if symmetric != formula {
        r.fail(format!(
            "{} symmetric matchings, closed form gives {}",
            symmetric, formula
        ));
    }
    r.count = Some(fixed);
    Ok(r.finish(start))
}

/// Insertion followed by reverse insertion is the identity on all of S_n.
pub fn verify_rs_roundtrip(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("rs-roundtrip", n);
    let mut count = 0u128;
    for w in Permutations::new(n) {
        count += 1;
        let (p, q) = rs_pair(&w);
        match rs_inverse(&p, &q) {
            Ok(v) if v == w => {}
            _ => r.fail(format!("round trip fails at {}", w)),
        }
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// The two tableaux of a permutation coincide exactly for involutions.
pub fn verify_pq_involution(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("pq-involution", n);
    for w in Permutations::new(n) {
        let (p, q) = rs_pair(&w);
        if (p == q) != w.is_involution() {
            r.fail(format!("tableau equality misreads {}", w));
        }
    }
    Ok(r.finish(start))
}

/// Conjugating by the longest permutation evacuates both tableaux.
pub fn verify_conjugation(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("conjugation", n);
    for w in Permutations::new(n) {
        let (p, q) = rs_pair(&w);
        let (cp, cq) = rs_pair(&w.conjugate_by_w0());
        if cp != evacuation(&p)? || cq != evacuation(&q)? {
            r.fail(format!("conjugation identity fails at {}", w));
        }
    }
    Ok(r.finish(start))
}

/// Evacuation is a shape-preserving involution on all standard tableaux.
pub fn verify_evac_involution(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("evac-involution", n);
    let mut count = 0u128;
    for t in StandardTableaux::new(n) {
        count += 1;
        let e = evacuation(&t)?;
        if e.shape() != t.shape() || evacuation(&e)? != t {
            r.fail(format!("evacuation misbehaves at {}", t));
        }
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// The insertion tableau of a direct sum of involutions is the concatenation
/// of their insertion tableaux; checked for all pairs with sizes summing
/// to n.
pub fn verify_concat(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("concat", n);
    let mut count = 0u128;
    for a in 0..=n {
        let right: Vec<Permutation> = involutions(n - a).collect();
        for u in involutions(a) {
            let tu = insertion_tableau(&u);
            for v in &right {
                count += 1;
                let tv = insertion_tableau(v);
                let lhs = insertion_tableau(&u.direct_sum(v));
                match tu.concat(&tv) {
                    Ok(rhs) if rhs == lhs => {}
                    _ => r.fail(format!("direct sum of {} and {} misinserts", u, v)),
                }
            }
        }
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// Insertion maps prime noncrossing involutions exactly onto prime
/// Richardson tableaux.
pub fn verify_prime_image(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("prime-image", n);
    let mut image = BTreeSet::new();
    for w in noncrossing_involutions(n).filter(|w| w.is_prime()) {
        image.insert(phi(&w)?);
    }
    let primes: BTreeSet<Tableau> = syt_richardson(n).filter(|t| t.is_prime()).collect();
    if image != primes {
        let witness = image
            .symmetric_difference(&primes)
            .next()
            .expect("unequal sets differ somewhere");
        r.fail(format!("{} lies in exactly one of the two sets", witness));
    }
    r.count = Some(primes.len() as u128);
    Ok(r.finish(start))
}

/// After removing the bottom box of a prime Richardson tableau, each
/// first-column entry stays below its upper-right neighbor: U(i,1) <
/// U(i-1,2) whenever that box exists.
pub fn verify_first_column(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("first-column", n);
    let mut count = 0u128;
    for t in syt_richardson(n).filter(|t| t.is_prime()) {
        count += 1;
        let mut rows = t.rows().to_vec();
        if let Some(last) = rows.last_mut() {
            last.pop();
            if last.is_empty() {
                rows.pop();
            }
        }
        for i in 1..rows.len() {
            if rows[i - 1].len() >= 2 && rows[i][0] >= rows[i - 1][1] {
                r.fail(format!("inequality fails at {} in row {}", t, i + 1));
            }
        }
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// The arc-stripping map is a bijection from prime Richardson tableaux of
/// size n onto Richardson tableaux of size n - 2, shrinking shapes by their
/// two final single-box rows.
pub fn verify_psi(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("psi", n);
    if n < 2 {
        r.count = Some(0);
        return Ok(r.finish(start));
    }
    let mut outputs = BTreeSet::new();
    let mut count = 0u128;
    for t in syt_richardson(n).filter(|t| t.is_prime()) {
        count += 1;
        let u = psi(&t)?;
        let tparts = t.shape().parts().to_vec();
        let uparts = u.shape().parts().to_vec();
        let l = tparts.len();
        if l < 2 || tparts[l - 1] != 1 || tparts[l - 2] != 1 || tparts[..l - 2] != uparts[..] {
            r.fail(format!(
                "shape {} does not shrink to {}",
                t.shape(),
                u.shape()
            ));
        }
        if !outputs.insert(u.clone()) {
            r.fail(format!("two prime tableaux share the image {}", u));
        }
    }
    let target: BTreeSet<Tableau> = syt_richardson(n - 2).collect();
    if outputs != target {
        let witness = outputs
            .symmetric_difference(&target)
            .next()
            .expect("unequal sets differ somewhere");
        r.fail(format!("{} lies in exactly one of image and target", witness));
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// An involution has as many fixed points as its insertion tableau has odd
/// columns.
pub fn verify_odd_columns(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("odd-columns", n);
    let mut count = 0u128;
    for w in involutions(n) {
        count += 1;
        let t = insertion_tableau(&w);
        if t.statistics().odd_columns != w.statistics().fixed_points.len() {
            r.fail(format!("odd columns differ from fixed points at {}", w));
        }
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// An involution and its insertion tableau share their descent set.
pub fn verify_descent_transfer(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("descent-transfer", n);
    for w in involutions(n) {
        let t = insertion_tableau(&w);
        if t.statistics().descent_set != w.statistics().descent_set {
            r.fail(format!("descent sets differ at {}", w));
        }
    }
    Ok(r.finish(start))
}

/// The three recognition procedures for Richardson tableaux agree on every
/// standard tableau.
pub fn verify_characterizations(n: usize, limit: usize) -> Result<Report> {
    crate::check_limit(n, limit)?;
    let start = Instant::now();
    let mut r = Report::new("characterizations", n);
    let mut count = 0u128;
    for t in StandardTableaux::new(n) {
        count += 1;
        let a = is_richardson_by(&t, RichardsonMethod::Condition);
        let b = is_richardson_by(&t, RichardsonMethod::Recursive);
        let c = is_richardson_by(&t, RichardsonMethod::SlideRoutes);
        if a != b || a != c {
            r.fail(format!(
                "checkers disagree on {}: condition {}, recursive {}, routes {}",
                t, a, b, c
            ));
        }
    }
    r.count = Some(count);
    Ok(r.finish(start))
}

/// Runs every structural check at one size.
pub fn verify_structure(n: usize, limit: usize) -> Result<Vec<Report>> {
    Ok(vec![
        verify_rs_roundtrip(n, limit)?,
        verify_pq_involution(n, limit)?,
        verify_conjugation(n, limit)?,
        verify_evac_involution(n, limit)?,
        verify_concat(n, limit)?,
        verify_prime_image(n, limit)?,
        verify_first_column(n, limit)?,
        verify_psi(n, limit)?,
        verify_odd_columns(n, limit)?,
        verify_descent_transfer(n, limit)?,
        verify_characterizations(n, limit)?,
    ])
}

/// Major-index identities over Dyck paths: the maj series is the q-Catalan
/// polynomial, refining by valley count gives the q-Narayana polynomials,
/// and valleys map pointwise to tableau ascents through the bijection.
pub fn verify_macmahon(n: usize, limit: usize) -> Result<Vec<Report>> {
    crate::check_limit(n, limit)?;
    require_even(n)?;
    let start = Instant::now();
    let mut total = QPolynomial::zero();
    let mut by_valleys: BTreeMap<usize, QPolynomial> = BTreeMap::new();
    let mut pointwise = Report::new("macmahon-pointwise", n);
    let mut count = 0u128;
    for p in MotzkinPaths::dyck(n) {
        count += 1;
        let valleys = p.valley_points();
        let maj = p.path_maj();
        total = total.add(&QPolynomial::monomial(1, maj))?;
        let e = by_valleys
            .entry(valleys.len())
            .or_insert_with(QPolynomial::zero);
        *e = e.add(&QPolynomial::monomial(1, maj))?;
        let t = phi(&motzkin_to_matching(&p).to_involution())?;
        let st = t.statistics();
        if st.ascent_set != valleys || st.comaj != maj {
            pointwise.fail(format!(
                "path {} has valleys {:?} but its tableau has ascents {:?}",
                p, valleys, st.ascent_set
            ));
        }
    }
    pointwise.count = Some(count);

    let mut reports = Vec::new();
    let mut catalan = Report::new("macmahon-catalan", n);
    let rhs = q_catalan(n / 2)?;
    if total != rhs {
        catalan.fail(format!("maj series {} differs from {}", total, rhs));
    }
    catalan.count = Some(count);
    catalan.lhs = Some(ReportValue::Poly(total));
    catalan.rhs = Some(ReportValue::Poly(rhs));
    reports.push(catalan.finish(start));

    let half = n / 2;
    let observed_top = by_valleys.keys().next_back().copied().unwrap_or(0);
    for m in 0..=observed_top.max(half - 1) {
        let lhs = by_valleys.get(&m).cloned().unwrap_or_else(QPolynomial::zero);
        let rhs = q_narayana(half, m)?;
        let mut r = Report::new("macmahon-narayana", n);
        r.m = Some(m);
        if lhs != rhs {
            r.fail(format!(
                "maj series {} over {} valleys differs from {}",
                lhs, m, rhs
            ));
        }
        r.lhs = Some(ReportValue::Poly(lhs));
        r.rhs = Some(ReportValue::Poly(rhs));
        reports.push(r.finish(start));
    }
    reports.push(pointwise.finish(start));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_int;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::standard(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    fn poly(coeffs: &[i128]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn test_phi_examples() {
        let w = perm(&[8, 5, 3, 4, 2, 7, 6, 1]);
        assert_eq!(
            phi(&w).unwrap(),
            t(&[&[1, 4, 6], &[2, 7], &[3], &[5], &[8]])
        );
        let w = perm(&[5, 2, 4, 3, 1, 6, 8, 7]);
        assert_eq!(phi(&w).unwrap(), t(&[&[1, 3, 6, 7], &[2, 8], &[4], &[5]]));
        assert_eq!(
            phi(&Permutation::identity(5)).unwrap(),
            t(&[&[1, 2, 3, 4, 5]])
        );
        assert_eq!(phi(&Permutation::identity(0)).unwrap(), Tableau::empty());
    }

    #[test]
    fn test_phi_rejects_bad_input() {
        assert!(matches!(
            phi(&perm(&[2, 3, 1])),
            Err(Error::Involution(_))
        ));
        // the crossing involution swapping 1,3 and 2,4
        assert!(matches!(
            phi(&perm(&[3, 4, 1, 2])),
            Err(Error::NotNoncrossing(_))
        ));
    }

    #[test]
    fn test_psi_examples() {
        let big = t(&[&[1, 4, 6], &[2, 7], &[3], &[5], &[8]]);
        assert_eq!(psi(&big).unwrap(), t(&[&[1, 3, 5], &[2, 6], &[4]]));
        assert_eq!(psi(&t(&[&[1], &[2]])).unwrap(), Tableau::empty());
    }

    #[test]
    fn test_psi_shape_transform() {
        let mut seen = false;
        for x in syt_richardson(8).filter(|x| x.is_prime()) {
            if x.shape().parts() == [3, 2, 1, 1, 1] {
                seen = true;
                assert_eq!(psi(&x).unwrap().shape().parts(), [3, 2, 1]);
            }
        }
        assert!(seen, "no prime tableau of the expected shape");
    }

    #[test]
    fn test_psi_rejects_bad_input() {
        assert!(matches!(
            psi(&t(&[&[1, 2], &[3, 4]])),
            Err(Error::NotRichardson)
        ));
        assert!(matches!(psi(&t(&[&[1, 2]])), Err(Error::NotPrime)));
        assert!(matches!(psi(&t(&[&[1]])), Err(Error::Shape(_))));
    }

    #[test]
    fn test_theorem1_small_sizes() {
        let expected = [1u128, 1, 2, 4, 9, 21, 51, 127, 323];
        for (n, &c) in expected.iter().enumerate() {
            let r = verify_theorem1(n, 16).unwrap();
            assert!(r.pass, "n = {}: {:?}", n, r.counterexample);
            assert_eq!(r.count, Some(c));
        }
    }

    #[test]
    fn test_counting_reproduces_closed_form() {
        let reports = verify_counting(4, 16).unwrap();
        let cells: Vec<&Report> = reports.iter().filter(|r| r.check == "counting").collect();
        assert_eq!(cells.len(), 3);
        for r in &cells {
            assert!(r.pass, "{:?}", r.counterexample);
        }
        assert_eq!(cells[0].count, Some(2));
        assert_eq!(cells[1].count, Some(6));
        assert_eq!(cells[2].count, Some(1));
        let prime = reports.iter().find(|r| r.check == "prime-shapes").unwrap();
        assert!(prime.pass, "{:?}", prime.counterexample);
        assert_eq!(prime.count, Some(2));
    }

    #[test]
    fn test_counting_at_eight() {
        let reports = verify_counting(8, 16).unwrap();
        assert!(reports.iter().all(|r| r.pass));
        let k0 = reports
            .iter()
            .find(|r| r.check == "counting" && r.k == Some(0))
            .unwrap();
        assert_eq!(k0.count, Some(14));
    }

    #[test]
    fn test_qcatalan_small_sizes() {
        let r = verify_qcatalan(2, 16).unwrap();
        assert!(r.pass);
        assert_eq!(r.count, Some(1));
        let r = verify_qcatalan(4, 16).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
        match r.lhs {
            Some(ReportValue::Poly(ref p)) => assert_eq!(*p, poly(&[1, 0, 1])),
            _ => panic!("expected a polynomial"),
        }
        assert!(verify_qcatalan(3, 16).is_err());
        assert!(matches!(
            verify_qcatalan(18, 16),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn test_qnarayana_small_sizes() {
        let reports = verify_qnarayana(4, 16).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert!(r.pass, "m = {:?}: {:?}", r.m, r.counterexample);
        }
        match reports[1].lhs {
            Some(ReportValue::Poly(ref p)) => assert_eq!(*p, poly(&[0, 0, 1])),
            _ => panic!("expected a polynomial"),
        }
    }

    #[test]
    fn test_conjecture_small_sizes() {
        for n in 0..=6 {
            for r in verify_conjecture(n, 16).unwrap() {
                assert!(r.pass, "n = {}, k = {:?}: {:?}", n, r.k, r.counterexample);
            }
        }
        let reports = verify_conjecture(3, 16).unwrap();
        let k1 = reports.iter().find(|r| r.k == Some(1)).unwrap();
        match k1.lhs {
            Some(ReportValue::Poly(ref p)) => assert_eq!(*p, q_int(3)),
            _ => panic!("expected a polynomial"),
        }
        let reports = verify_conjecture(2, 16).unwrap();
        let k2 = reports.iter().find(|r| r.k == Some(2)).unwrap();
        match k2.rhs {
            Some(ReportValue::Poly(ref p)) => assert_eq!(*p, poly(&[0, 1])),
            _ => panic!("expected a polynomial"),
        }
    }

    #[test]
    fn test_evac_fixed_count_values() {
        assert_eq!(evac_fixed_count(0).unwrap(), 1);
        assert_eq!(evac_fixed_count(1).unwrap(), 1);
        assert_eq!(evac_fixed_count(2).unwrap(), 2);
        assert_eq!(evac_fixed_count(4).unwrap(), 5);
    }

    #[test]
    fn test_evac_small_sizes() {
        for n in 0..=7 {
            let r = verify_evac(n, 16).unwrap();
            assert!(r.pass, "n = {}: {:?}", n, r.counterexample);
        }
        assert_eq!(verify_evac(4, 16).unwrap().count, Some(5));
    }

    #[test]
    fn test_structure_small_sizes() {
        for n in 0..=5 {
            for r in verify_structure(n, 16).unwrap() {
                assert!(r.pass, "n = {}, {}: {:?}", n, r.check, r.counterexample);
            }
        }
    }

    #[test]
    fn test_macmahon_small_sizes() {
        let reports = verify_macmahon(4, 16).unwrap();
        for r in &reports {
            assert!(r.pass, "{}: {:?}", r.check, r.counterexample);
        }
        let catalan = reports
            .iter()
            .find(|r| r.check == "macmahon-catalan")
            .unwrap();
        match catalan.lhs {
            Some(ReportValue::Poly(ref p)) => assert_eq!(*p, poly(&[1, 0, 1])),
            _ => panic!("expected a polynomial"),
        }
        for r in verify_macmahon(8, 16).unwrap() {
            assert!(r.pass, "{}: {:?}", r.check, r.counterexample);
        }
    }

    #[test]
    fn test_report_json_shape() {
        let r = verify_theorem1(3, 16).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["check"], "thm1");
        assert_eq!(v["n"], 3);
        assert_eq!(v["pass"], true);
        assert_eq!(v["count"], 4);
        assert!(v.get("k").is_none());
        assert!(v.get("counterexample").is_none());
        assert!(v.get("elapsed_ms").is_some());
    }

    #[test]
    fn test_resource_refusal() {
        assert!(matches!(
            verify_theorem1(17, 16),
            Err(Error::Resource { n: 17, limit: 16 })
        ));
        assert!(matches!(
            verify_structure(20, 16),
            Err(Error::Resource { .. })
        ));
    }
}
