use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A category value in `{0, 1, 2, ...} ∪ {+∞}`. Arithmetic saturates at `+∞`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CategoryValue {
    Finite(u32),
    Infinite,
}

impl CategoryValue {
    pub const ZERO: CategoryValue = CategoryValue::Finite(0);
    pub const ONE: CategoryValue = CategoryValue::Finite(1);

    pub fn finite(self) -> Option<u32> {
        match self {
            CategoryValue::Finite(v) => Some(v),
            CategoryValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == CategoryValue::Infinite
    }
}

impl From<u32> for CategoryValue {
    fn from(v: u32) -> Self {
        CategoryValue::Finite(v)
    }
}

impl Add for CategoryValue {
    type Output = CategoryValue;
    fn add(self, rhs: CategoryValue) -> CategoryValue {
        match (self, rhs) {
            (CategoryValue::Finite(a), CategoryValue::Finite(b)) => {
                a.checked_add(b).map_or(CategoryValue::Infinite, CategoryValue::Finite)
            }
            _ => CategoryValue::Infinite,
        }
    }
}

/// Scaling by a natural number; `0 · ∞` is taken to be `∞`, which only
/// arises for `n = 0`, a case no check uses.
impl Mul<CategoryValue> for u32 {
    type Output = CategoryValue;
    fn mul(self, rhs: CategoryValue) -> CategoryValue {
        match rhs {
            CategoryValue::Finite(v) => self
                .checked_mul(v)
                .map_or(CategoryValue::Infinite, CategoryValue::Finite),
            CategoryValue::Infinite => CategoryValue::Infinite,
        }
    }
}

impl fmt::Display for CategoryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CategoryValue::Finite(v) => write!(f, "{v}"),
            CategoryValue::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for CategoryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as a JSON number, or the string `"inf"`.
impl Serialize for CategoryValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CategoryValue::Finite(v) => s.serialize_u32(*v),
            CategoryValue::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for CategoryValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(CategoryValue::Finite(v)),
            Raw::Text(t) if t == "inf" => Ok(CategoryValue::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad category value `{t}`"))),
        }
    }
}
