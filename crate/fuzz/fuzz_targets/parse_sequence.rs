#![no_main]

use libfuzzer_sys::fuzz_target;
use treeirr::parse_sequence;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(seq) = parse_sequence(text) {
        let again = parse_sequence(&seq.degrees().iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .expect("display form reparses");
        assert_eq!(seq, again);
        let counts = seq.realization_counts();
        assert!(counts.leaf_count >= 2);
        assert!(counts.total_vertices > counts.leaf_count);
    }
});
