#![no_main]

use libfuzzer_sys::fuzz_target;
use treeirr::{canonical_code, CanonicalCode};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(code) = CanonicalCode::from_hex(text) {
        assert_eq!(CanonicalCode::from_hex(&code.to_hex()).as_ref(), Ok(&code));
        let tree = code.to_tree();
        assert_eq!(canonical_code(&tree), code);
    }
});
