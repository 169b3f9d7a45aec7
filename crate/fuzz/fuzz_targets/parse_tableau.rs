#![no_main]

use libfuzzer_sys::fuzz_target;
use rlab::Tableau;

fuzz_target!(|data: &[u8]| {
    let Ok(t) = serde_json::from_slice::<Tableau>(data) else {
        return;
    };
    let bytes = serde_json::to_vec(&t).expect("accepted tableaux serialize");
    let back: Tableau = serde_json::from_slice(&bytes).expect("own output parses");
    assert_eq!(t, back);

    if t.size() > 64 {
        return;
    }
    let stats = t.statistics();
    if t.is_standard() {
        assert_eq!(stats.descent_set.len() + stats.ascent_set.len() + 1, t.size().max(1));
        let evac = rlab::rs::evacuation(&t).expect("standard tableaux evacuate");
        let again = rlab::rs::evacuation(&evac).expect("evacuation stays standard");
        assert_eq!(t, again);
    }
});
