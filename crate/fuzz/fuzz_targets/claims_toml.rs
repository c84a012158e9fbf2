#![no_main]

use libfuzzer_sys::fuzz_target;
use treeirr_cli::claims::{parse_claims, Target};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(claims) = parse_claims(text) {
        for c in claims {
            assert_eq!(c.target.to_string().parse::<Target>().as_ref(), Ok(&c.target));
        }
    }
});
