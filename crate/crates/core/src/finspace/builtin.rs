//! Named example spaces.

use crate::cohom::builtin as complexes;
use crate::cohom::face_poset;
use crate::error::{LsError, Result};

use super::FinSpace;

/// Names accepted by [`parse`], with `k`/`n` standing for a number.
pub const NAMES: &[&str] = &[
    "chain(k)",
    "antichain(k)",
    "cone(k)",
    "circle4",
    "sphere(n)",
    "wedge2circles",
    "torus16",
    "face(rp2_6)",
    "face(torus7)",
];

/// Totally ordered `x0 < x1 < .. < x{k-1}`.
pub fn chain(k: usize) -> FinSpace {
    let labels: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
    let pairs: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    FinSpace::new(labels, &pairs).expect("chain is a poset")
}

/// `k` incomparable points `p0 .. p{k-1}`.
pub fn antichain(k: usize) -> FinSpace {
    FinSpace::new((0..k).map(|i| format!("p{i}")).collect(), &[]).expect("antichain is a poset")
}

/// Antichain `p0 .. p{k-1}` with a bottom point `o` added.
pub fn cone(k: usize) -> FinSpace {
    let mut labels = vec!["o".to_string()];
    labels.extend((0..k).map(|i| format!("p{i}")));
    let pairs: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    FinSpace::new(labels, &pairs).expect("cone is a poset")
}

/// Four-point model of the circle: `c, d < a, b`.
pub fn circle4() -> FinSpace {
    FinSpace::from_labelled(&["a", "b", "c", "d"], &[("c", "a"), ("c", "b"), ("d", "a"), ("d", "b")])
        .expect("circle4 is a poset")
}

/// Minimal model of the `n`-sphere: levels `0..=n` of two points `a{i}`,
/// `b{i}`, each below both points of the next level.
pub fn sphere(n: usize) -> FinSpace {
    let mut labels = Vec::with_capacity(2 * n + 2);
    for i in 0..=n {
        labels.push(format!("a{i}"));
        labels.push(format!("b{i}"));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for lo in [2 * i, 2 * i + 1] {
            for hi in [2 * i + 2, 2 * i + 3] {
                pairs.push((lo, hi));
            }
        }
    }
    FinSpace::new(labels, &pairs).expect("sphere model is a poset")
}

/// Five-point model of a wedge of two circles: `c, d < a, b, e`.
pub fn wedge2circles() -> FinSpace {
    let lows = ["c", "d"];
    let highs = ["a", "b", "e"];
    let pairs: Vec<(&str, &str)> = lows.iter().flat_map(|l| highs.iter().map(move |h| (*l, *h))).collect();
    FinSpace::from_labelled(&["a", "b", "c", "d", "e"], &pairs).expect("wedge is a poset")
}

/// `circle4 × circle4` with the product order; point `xy` is the pair `(x, y)`.
pub fn torus16() -> FinSpace {
    let c = circle4();
    c.product(&c).expect("16 points fit")
}

/// Resolves a builtin name such as `chain(3)` or `circle4`.
pub fn parse(name: &str) -> Result<FinSpace> {
    let name = name.trim();
    let unknown = || LsError::UnknownBuiltin(name.to_string());
    match name {
        "circle4" => return Ok(circle4()),
        "wedge2circles" => return Ok(wedge2circles()),
        "torus16" => return Ok(torus16()),
        "face(rp2_6)" => return face_poset(&complexes::rp2_6()),
        "face(torus7)" => return face_poset(&complexes::torus7()),
        _ => {}
    }
    let (head, rest) = name.split_once('(').ok_or_else(unknown)?;
    let arg = rest.strip_suffix(')').ok_or_else(unknown)?;
    let k: usize = arg.trim().parse().map_err(|_| unknown())?;
    let too_big = |points: usize| {
        if points > super::MAX_POINTS {
            Err(LsError::TooManyPoints(points))
        } else {
            Ok(())
        }
    };
    match head.trim() {
        "chain" => too_big(k).map(|_| chain(k)),
        "antichain" => too_big(k).map(|_| antichain(k)),
        "cone" => too_big(k.saturating_add(1)).map(|_| cone(k)),
        "sphere" => too_big(k.saturating_mul(2).saturating_add(2)).map(|_| sphere(k)),
        _ => Err(unknown()),
    }
}
