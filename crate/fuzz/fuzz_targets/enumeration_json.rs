#![no_main]

use libfuzzer_sys::fuzz_target;
use treeirr_cli::report::{verify_enumeration_json, verify_extremal_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = verify_enumeration_json(text);
    let _ = verify_extremal_json(text);
});
