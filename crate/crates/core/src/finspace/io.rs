use serde::{Deserialize, Serialize};

use crate::error::{LsError, Result};

use super::FinSpace;

/// Wire form of a space: `order` pairs read "left < right".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: Vec<String>,
    #[serde(default)]
    pub order: Vec<[String; 2]>,
}

impl SpaceJson {
    pub fn from_space(space: &FinSpace) -> Self {
        SpaceJson {
            points: space.labels().to_vec(),
            order: space
                .cover_pairs()
                .into_iter()
                .map(|(x, y)| [space.label(x).to_string(), space.label(y).to_string()])
                .collect(),
        }
    }

    pub fn into_space(self) -> Result<FinSpace> {
        let index = |label: &str, field: String| {
            self.points
                .iter()
                .position(|p| p == label)
                .ok_or_else(|| LsError::UnknownPoint {
                    field,
                    label: label.to_string(),
                })
        };
        let mut pairs = Vec::with_capacity(self.order.len());
        for (i, [lo, hi]) in self.order.iter().enumerate() {
            pairs.push((
                index(lo, format!("order[{i}][0]"))?,
                index(hi, format!("order[{i}][1]"))?,
            ));
        }
        FinSpace::new(self.points.clone(), &pairs)
    }
}

/// Parses the JSON space format.
pub fn parse_space_json(text: &str) -> Result<FinSpace> {
    let raw: SpaceJson = serde_json::from_str(text)?;
    raw.into_space()
}

pub fn space_to_json(space: &FinSpace) -> String {
    serde_json::to_string(&SpaceJson::from_space(space)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finspace::builtin;

    #[test]
    fn loads_circle4_with_closure() {
        let s =
            parse_space_json(r#"{"points": ["a","b","c","d"], "order": [["c","a"],["c","b"],["d","a"],["d","b"]]}"#)
                .unwrap();
        assert_eq!(s, builtin::circle4());
        let t = parse_space_json(r#"{"points": ["x","y","z"], "order": [["x","y"],["y","z"]]}"#).unwrap();
        assert!(t.leq(0, 2));
    }

    #[test]
    fn structured_errors() {
        let err = parse_space_json("{\n \"points\": [\"a\",\n ]}").unwrap_err();
        assert!(matches!(err, LsError::Json { line: 3, .. }), "{err:?}");
        let err = parse_space_json(r#"{"points": ["a"], "order": [["a","q"]]}"#).unwrap_err();
        assert_eq!(
            err,
            LsError::UnknownPoint {
                field: "order[0][1]".into(),
                label: "q".into()
            }
        );
        let err = parse_space_json(r#"{"points": ["a","b"], "order": [["a","b"],["b","a"]]}"#).unwrap_err();
        assert!(matches!(err, LsError::Cycle(_)));
        assert!(matches!(
            parse_space_json(r#"{"points": [], "extra": 1}"#),
            Err(LsError::Json { .. })
        ));
    }

    #[test]
    fn writes_cover_relation() {
        let s = builtin::chain(3);
        let text = space_to_json(&s);
        assert_eq!(parse_space_json(&text).unwrap(), s);
        assert_eq!(SpaceJson::from_space(&s).order.len(), 2);
    }
}
