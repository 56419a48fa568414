#![no_main]

use fission::tree::{parse_tree, TreeView, View};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(shape) = parse_tree(text) else { return };
    assert!(shape.is_canonical());
    assert_eq!(parse_tree(&shape.to_string()).unwrap(), shape);
    // level maps list every leaf
    if shape.weight() > 10_000 {
        return;
    }
    for view in [View::LeafCount, View::Multiplicity] {
        let t = TreeView::new(shape.clone(), view).unwrap();
        assert_eq!(TreeView::from_level_maps(&t.to_level_maps()).unwrap(), t);
    }
});
