#![no_main]

use libfuzzer_sys::fuzz_target;
use lscat::finspace::builtin;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for space in [builtin::circle4(), builtin::wedge2circles()] {
        if let Ok(a) = space.parse_subset(text) {
            assert!(a.is_subset(space.points()));
        }
    }
});
