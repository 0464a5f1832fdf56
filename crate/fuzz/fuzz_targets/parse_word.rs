#![no_main]

use heckoid_core::words::{cyclic_reduce, Word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(w) = text.parse::<Word>() else {
        return;
    };
    let again: Word = w.to_string().parse().expect("display output parses");
    assert_eq!(again, w);
    assert!(w.mul(&w.inverse()).is_empty());
    let (cyc, g) = cyclic_reduce(&w);
    assert_eq!(cyc.representative().conjugate_by(&g), w);
});
