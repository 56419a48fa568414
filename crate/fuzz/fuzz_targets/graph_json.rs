#![no_main]

use fission::graph::{canonical_form, graph_from_json, graph_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(v) = serde_json::from_slice::<serde_json::Value>(data) else { return };
    let Ok(g) = graph_from_json(&v) else { return };
    assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    if g.vertex_count() <= 10 {
        let c = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(c.graph()).unwrap(), c);
    }
});
