#![no_main]

use libfuzzer_sys::fuzz_target;
use rlab::QPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(p) = serde_json::from_slice::<QPolynomial>(data) else {
        return;
    };
    let bytes = serde_json::to_vec(&p).expect("i64 coefficients re-serialize");
    let back: QPolynomial = serde_json::from_slice(&bytes).expect("own output parses");
    assert_eq!(p, back);

    let zero = QPolynomial::zero();
    assert_eq!(p.add(&zero).unwrap(), p);
    assert_eq!(p.sub(&p).unwrap(), zero);
    assert_eq!(p.mul(&QPolynomial::one()).unwrap(), p);

    let small = p.coeffs().len() <= 64 && p.coeffs().iter().all(|c| c.abs() <= 1 << 20);
    if small && !p.is_zero() {
        let square = p.mul(&p).unwrap();
        assert_eq!(square.exact_div(&p).unwrap(), p);
        assert_eq!(square.degree(), p.degree().map(|d| 2 * d));
    }
});
