#![no_main]

use libfuzzer_sys::fuzz_target;
use rlab::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(w) = serde_json::from_slice::<Permutation>(data) else {
        return;
    };
    let bytes = serde_json::to_vec(&w).expect("accepted permutations serialize");
    let back: Permutation = serde_json::from_slice(&bytes).expect("own output parses");
    assert_eq!(w, back);

    if w.n() > 256 {
        return;
    }
    assert_eq!(w.inverse().inverse(), w);
    assert_eq!(w.conjugate_by_w0().conjugate_by_w0(), w);

    let st = w.statistics();
    let positions = w.n().saturating_sub(1);
    assert_eq!(st.descent_set.len() + st.ascent_set.len(), positions);

    let blocks = w.prime_decompose();
    assert_eq!(blocks.iter().map(Permutation::n).sum::<usize>(), w.n());
});
