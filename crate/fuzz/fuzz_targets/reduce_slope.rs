#![no_main]

use heckoid_core::farey::reduce_slope;
use heckoid_core::slopes::in_fundamental_interval;
use heckoid_core::{Index, Slope};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (i64, i64, u8)| {
    let (q, p, n) = input;
    let Ok(s) = Slope::new(q, p) else {
        return;
    };
    let n = Index::new(i64::from(n % 30) + 2).unwrap();
    let t = reduce_slope(&s, n);
    let c = &t.canonical;
    assert!(c.is_infinite() || c.is_zero() || in_fundamental_interval(c, n.get()));
    assert_eq!(t.composite(n).apply(&s), *c);
    assert_eq!(reduce_slope(c, n).canonical, *c);
});
