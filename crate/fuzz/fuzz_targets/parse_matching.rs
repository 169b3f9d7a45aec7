#![no_main]

use libfuzzer_sys::fuzz_target;
use rlab::motzkin::{matching_to_motzkin, motzkin_to_matching};
use rlab::PartialMatching;

fuzz_target!(|data: &[u8]| {
    let Ok(m) = serde_json::from_slice::<PartialMatching>(data) else {
        return;
    };
    let bytes = serde_json::to_vec(&m).expect("accepted matchings serialize");
    let back: PartialMatching = serde_json::from_slice(&bytes).expect("own output parses");
    assert_eq!(m, back);

    if m.n() > 256 {
        return;
    }
    let w = m.to_involution();
    assert!(w.is_involution());
    assert_eq!(PartialMatching::from_involution(&w).unwrap(), m);

    let crossings = m.crossing_pairs().len();
    assert_eq!(m.is_noncrossing(), crossings == 0);
    if let Ok(path) = matching_to_motzkin(&m) {
        assert_eq!(crossings, 0);
        assert_eq!(motzkin_to_matching(&path), m);
    } else {
        assert!(crossings > 0);
    }
});
