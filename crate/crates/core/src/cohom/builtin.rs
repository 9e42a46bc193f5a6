//! Shipped triangulations.

use crate::error::{LsError, Result};

use super::complex::{parse_complex_json, SimplicialComplex};

const RP2_6: &str = include_str!("../../data/rp2_6.json");
const TORUS7: &str = include_str!("../../data/torus7.json");

pub const NAMES: &[&str] = &["rp2_6", "torus7"];

/// 6-vertex real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    parse_complex_json(RP2_6).expect("bundled rp2_6 is valid")
}

/// 7-vertex torus.
pub fn torus7() -> SimplicialComplex {
    parse_complex_json(TORUS7).expect("bundled torus7 is valid")
}

pub fn parse(name: &str) -> Result<SimplicialComplex> {
    match name.trim() {
        "rp2_6" => Ok(rp2_6()),
        "torus7" => Ok(torus7()),
        other => Err(LsError::UnknownBuiltin(other.to_string())),
    }
}
