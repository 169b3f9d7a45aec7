#![no_main]

use libfuzzer_sys::fuzz_target;
use rlab::motzkin::{matching_to_motzkin, motzkin_to_matching};
use rlab::MotzkinPath;

fuzz_target!(|data: &[u8]| {
    let Some(p) = decode(data) else { return };
    let word = p.to_string();
    assert_eq!(MotzkinPath::parse(&word).expect("own word parses"), p);

    if p.len() > 4096 {
        return;
    }
    for v in p.valley_points() {
        assert!(v >= 1 && v < p.len());
    }
    assert_eq!(p.path_maj(), p.valley_points().iter().sum::<usize>());

    let m = motzkin_to_matching(&p);
    assert!(m.is_noncrossing());
    assert_eq!(matching_to_motzkin(&m).expect("decoded matchings are noncrossing"), p);
});

fn decode(data: &[u8]) -> Option<MotzkinPath> {
    if let Ok(p) = serde_json::from_slice::<MotzkinPath>(data) {
        return Some(p);
    }
    let s = std::str::from_utf8(data).ok()?;
    MotzkinPath::parse(s).ok()
}
