//! Simplicial cohomology over F2, cup products and cup length.

pub mod builtin;
mod cohomology;
mod complex;
mod cuplength;
pub mod f2;

pub use cohomology::{CohomClass, Cohomology};
pub use complex::{complex_to_json, face_poset, order_complex, parse_complex_json, ComplexJson, SimplicialComplex};
pub use cuplength::{
    check_prop51, induced_map_and_check_lemma57, pullback, CupStructure, Lemma57Checker, Lemma57Outcome, Prop51Outcome,
    SpaceCohomology,
};
