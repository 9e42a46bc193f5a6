#![no_main]

use libfuzzer_sys::fuzz_target;
use lscat::cohom::{complex_to_json, face_poset, parse_complex_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(complex) = parse_complex_json(text) {
            let again = parse_complex_json(&complex_to_json(&complex)).expect("serialized complex parses");
            assert_eq!(again.maximal_faces(), complex.maximal_faces());
            let _ = face_poset(&complex);
        }
    }
});
