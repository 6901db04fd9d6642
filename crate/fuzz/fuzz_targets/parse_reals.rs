#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(values) = hexfourier::parse::parse_reals(text) {
            // One value per comma-separated field, in order.
            assert_eq!(values.len(), text.split(',').count());
        }
    }
});
