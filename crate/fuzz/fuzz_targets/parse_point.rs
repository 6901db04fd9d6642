#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(point) = hexfourier::parse::parse_point(text) {
            // Accepted points always carry an exactly balanced
            // coordinate triple.
            assert_eq!(point.t1() + point.t2() + point.t3(), 0.0);
            assert!(!point.hex_norm().is_nan());
        }
    }
});
