#![no_main]

use hexfourier::report::ExperimentReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(report) = ExperimentReport::from_json(text) {
            // Anything accepted must survive a serialization cycle
            // unchanged; JSON numbers always parse to finite floats.
            let cycled = ExperimentReport::from_json(&report.to_json())
                .expect("serialized report parses back");
            assert_eq!(report, cycled);
        }
    }
});
