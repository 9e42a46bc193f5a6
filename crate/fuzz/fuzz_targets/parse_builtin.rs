#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(name) = std::str::from_utf8(data) {
        let _ = lscat::finspace::builtin::parse(name);
        let _ = lscat::cohom::builtin::parse(name);
    }
});
