#![no_main]

use libfuzzer_sys::fuzz_target;
use lscat::finspace::{parse_space_json, space_to_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(space) = parse_space_json(text) {
            let again = parse_space_json(&space_to_json(&space)).expect("serialized space parses");
            assert_eq!(again, space);
        }
    }
});
