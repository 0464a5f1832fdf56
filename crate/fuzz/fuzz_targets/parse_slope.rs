#![no_main]

use heckoid_core::slopes::continued_fraction;
use heckoid_core::Slope;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(s) = text.parse::<Slope>() else {
        return;
    };
    let again: Slope = s.to_string().parse().expect("display output parses");
    assert_eq!(again, s);
    if let Ok(cf) = continued_fraction(&s) {
        assert_eq!(heckoid_core::slopes::evaluate_cf(&cf), s);
    }
});
