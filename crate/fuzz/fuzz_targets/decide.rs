#![no_main]

use heckoid_core::group::{classify, dehn_reduce, is_trivial, ElementClass};
use heckoid_core::riley::MAX_WORD_DENOMINATOR;
use heckoid_core::{Index, WordOrSlope};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(n) = Index::new(i64::from(n % 12) + 2) else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let Ok(subject) = text.parse::<WordOrSlope>() else {
        return;
    };
    if let WordOrSlope::Slope(s) = &subject {
        if *s.denominator() > MAX_WORD_DENOMINATOR.min(4096).into() {
            return;
        }
    }
    let Ok(w) = subject.to_word() else {
        return;
    };
    let class = classify(&w, n);
    assert_eq!(class == ElementClass::Trivial, is_trivial(&w, n));
    assert_eq!(dehn_reduce(&w, n).is_empty(), is_trivial(&w, n));
    assert_eq!(classify(&w.inverse(), n).name(), class.name());
});
