//! JSON file format for group presentations.

use serde::{Deserialize, Serialize};

use super::{GroupPresentation, Letter};
use crate::error::{Error, Result};

/// A letter: a generator name, or `{"gen": name, "exp": k}` for a power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LetterSpec {
    Name(String),
    Power { gen: String, exp: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<Vec<LetterSpec>>,
}

impl GroupFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group file serializes")
    }

    pub fn to_presentation(&self) -> Result<GroupPresentation> {
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].contains(g) {
                return Err(Error::Parse(format!("generators[{i}]: duplicate generator {g:?}")));
            }
        }
        let find = |name: &str, field: String| {
            self.generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::Parse(format!("{field}: unknown generator {name:?}")))
        };
        let mut relators = Vec::with_capacity(self.relators.len());
        for (i, r) in self.relators.iter().enumerate() {
            let mut word = Vec::new();
            for (j, l) in r.iter().enumerate() {
                let field = format!("relators[{i}][{j}]");
                let (name, exp) = match l {
                    LetterSpec::Name(n) => (n.as_str(), 1),
                    LetterSpec::Power { gen, exp } => (gen.as_str(), *exp),
                };
                let g = find(name, field)?;
                let letter = if exp < 0 { Letter::neg(g) } else { Letter::pos(g) };
                word.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
            }
            relators.push(word);
        }
        Ok(GroupPresentation::new(self.generators.clone(), relators))
    }

    pub fn from_presentation(p: &GroupPresentation) -> Self {
        GroupFile {
            generators: p.generators.clone(),
            relators: p
                .relators
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|l| {
                            let name = p.generators[l.gen].clone();
                            if l.inverse {
                                LetterSpec::Power { gen: name, exp: -1 }
                            } else {
                                LetterSpec::Name(name)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl GroupPresentation {
    pub fn from_json(text: &str) -> Result<Self> {
        GroupFile::from_json(text)?.to_presentation()
    }

    pub fn to_json(&self) -> String {
        GroupFile::from_presentation(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_inverse_letters() {
        let text =
            r#"{"generators": ["a", "b"], "relators": [["a", "a"], ["b", "b", "b"], ["a", {"gen": "b", "exp": -1}]]}"#;
        let p = GroupPresentation::from_json(text).unwrap();
        assert_eq!(p.relators[2], vec![Letter::pos(0), Letter::neg(1)]);
        let again = GroupPresentation::from_json(&p.to_json()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn names_offending_field() {
        let text = r#"{"generators": ["a"], "relators": [["a", "c"]]}"#;
        let err = GroupPresentation::from_json(text).unwrap_err().to_string();
        assert!(err.contains("relators[0][1]"), "{err}");
    }
}
