#![no_main]

use fission::bfile::{compare, parse_bfile, OeisRef};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok((offset, terms)) = parse_bfile(text) else { return };
    let Ok(r) = OeisRef::from_bfile("A000041".parse().unwrap(), text) else { return };
    assert_eq!((r.offset, r.terms.len()), (offset, terms.len()));
    let _ = compare(&r, 50);
});
