#![no_main]

use fission::tree::{shape_from_json, shape_to_json, tree_from_json, tree_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = tree_from_json(text) {
        assert_eq!(tree_from_json(&tree_to_json(&t)).unwrap(), t);
    }
    if let Ok(v) = serde_json::from_str::<serde_json::Value>(text) {
        if let Ok(s) = shape_from_json(&v) {
            assert_eq!(shape_from_json(&shape_to_json(&s)).unwrap(), s);
        }
    }
});
