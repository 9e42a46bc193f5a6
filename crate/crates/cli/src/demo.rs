//! Builtin spaces and complexes with the values the library computes for them.

use serde::Serialize;
use serde_json::{json, Value};

/// How an expected value is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Immediate from the definitions.
    Trivial,
    /// Computed, and cross-checked by an independent method in the test suite.
    Derived,
}

impl Provenance {
    fn tag(self) -> &'static str {
        match self {
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Space,
    Complex,
}

pub struct Expected {
    pub quantity: &'static str,
    pub value: &'static str,
    pub provenance: Provenance,
}

pub struct Entry {
    pub name: &'static str,
    pub kind: Kind,
    pub note: &'static str,
    pub expected: &'static [Expected],
}

const fn e(quantity: &'static str, value: &'static str, provenance: Provenance) -> Expected {
    Expected {
        quantity,
        value,
        provenance,
    }
}

use Provenance::{Derived, Trivial};

const CONTRACTIBLE: &[Expected] = &[
    e("nu_H", "1", Trivial),
    e("nu_LS", "1", Trivial),
    e("nu_c", "1", Trivial),
    e("nu_CL", "1", Trivial),
    e("cuplength", "1", Trivial),
];

pub const CATALOG: &[Entry] = &[
    Entry {
        name: "chain(3)",
        kind: Kind::Space,
        note: "three points in a line; contractible",
        expected: CONTRACTIBLE,
    },
    Entry {
        name: "cone(3)",
        kind: Kind::Space,
        note: "three maximal points over a bottom point; contractible",
        expected: CONTRACTIBLE,
    },
    Entry {
        name: "antichain(3)",
        kind: Kind::Space,
        note: "three-point discrete space",
        expected: &[
            e("nu_H", "3", Trivial),
            e("nu_LS", "3", Trivial),
            e("betti", "[3]", Trivial),
        ],
    },
    Entry {
        name: "circle4",
        kind: Kind::Space,
        note: "minimal finite model of the circle",
        expected: &[
            e("nu_H", "2", Derived),
            e("nu_LS", "2", Derived),
            e("nu_c", "2", Derived),
            e("nu_CL", "2", Derived),
            e("cuplength", "2", Derived),
            e("betti", "[1, 1]", Derived),
        ],
    },
    Entry {
        name: "sphere(2)",
        kind: Kind::Space,
        note: "minimal finite model of the 2-sphere",
        expected: &[
            e("nu_H", "2", Derived),
            e("nu_CL", "2", Derived),
            e("cuplength", "2", Derived),
            e("betti", "[1, 0, 1]", Derived),
        ],
    },
    Entry {
        name: "wedge2circles",
        kind: Kind::Space,
        note: "two circles sharing a point",
        expected: &[
            e("nu_H", "2", Derived),
            e("nu_LS", "3", Derived),
            e("nu_CL", "2", Derived),
            e("cuplength", "2", Derived),
            e("betti", "[1, 2]", Derived),
        ],
    },
    Entry {
        name: "torus16",
        kind: Kind::Space,
        note: "product circle4 x circle4",
        expected: &[e("cuplength", "3", Derived), e("betti", "[1, 2, 1]", Derived)],
    },
    Entry {
        name: "rp2_6",
        kind: Kind::Complex,
        note: "6-vertex real projective plane",
        expected: &[
            e("euler_characteristic", "1", Derived),
            e("betti", "[1, 1, 1]", Derived),
            e("cuplength", "3", Derived),
        ],
    },
    Entry {
        name: "torus7",
        kind: Kind::Complex,
        note: "7-vertex torus",
        expected: &[
            e("euler_characteristic", "0", Derived),
            e("betti", "[1, 2, 1]", Derived),
            e("cuplength", "3", Derived),
        ],
    },
];

pub fn catalog() -> Value {
    let entries: Vec<Value> = CATALOG
        .iter()
        .map(|entry| {
            let expected: Vec<Value> = entry
                .expected
                .iter()
                .map(|x| {
                    json!({
                        "quantity": x.quantity,
                        "value": serde_json::from_str::<Value>(x.value).expect("catalog values are JSON"),
                        "provenance": x.provenance,
                        "display": format!("{} {} ({})", x.quantity, x.value, x.provenance.tag()),
                    })
                })
                .collect();
            json!({ "name": entry.name, "kind": entry.kind, "note": entry.note, "expected": expected })
        })
        .collect();
    json!({ "builtins": entries })
}
