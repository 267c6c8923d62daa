//! JSON documents for generalized seeds, LP seeds and group specifications.
//!
//! ```json
//! {"ring":"Q","n":2,"m":0,"names":["x1","x2"],"B":[[0,-2],[1,0]],"d":[1,2],"rho":[["1","1"],["1","2","1"]]}
//! {"ring":"Q","n":3,"names":["x1","x2","x3"],"F":["x2 + 1","x1 + x3","x2 + 1"]}
//! ```
//!
//! `names`, `d` and `rho` are optional on input (defaults `x1..`, all ones,
//! trivial strings); output always carries every field.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactmath::{default_names, parse_poly, LaurentPoly};
use crate::genseed::{GeneralizedSeed, GroundRing};
use crate::lpalgebra::LPSeed;
use crate::realize::AbelianGroupSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedDocument {
    #[serde(default)]
    pub ring: GroundRing,
    pub n: usize,
    #[serde(default)]
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LpSeedDocument {
    #[serde(default)]
    pub ring: GroundRing,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(rename = "F")]
    pub f: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDocument {
    #[serde(default)]
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
}

/// Either kind of seed, told apart by the presence of `F`.
#[derive(Debug, Clone)]
pub enum AnySeed {
    Generalized(GeneralizedSeed),
    Lp(LPSeed),
}

pub(crate) fn document_error(e: serde_json::Error) -> Error {
    let text = e.to_string();
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let msg = text.strip_suffix(&suffix).unwrap_or(&text);
    Error::Document(format!("line {}, column {}: {}", e.line(), e.column(), msg))
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(document_error)
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Document(e.to_string()))
}

fn names_or_default(names: Option<Vec<String>>, arity: usize) -> Result<Vec<String>> {
    match names {
        Some(v) if v.len() != arity => Err(Error::Document(format!(
            "names: expected {arity} entries, found {}",
            v.len()
        ))),
        Some(v) => Ok(v),
        None => Ok(default_names(arity)),
    }
}

fn poly(text: &str, names: &[String], field: &str) -> Result<LaurentPoly> {
    parse_poly(text, names).map_err(|e| Error::Document(format!("{field}: {e}")))
}

impl SeedDocument {
    /// Builds and validates the seed.
    pub fn into_seed(self) -> Result<GeneralizedSeed> {
        let s = self.into_unchecked()?;
        s.validate().map_err(Error::InvalidSeed)?;
        Ok(s)
    }

    /// Builds the seed without checking the seed invariants.
    pub fn into_unchecked(self) -> Result<GeneralizedSeed> {
        let arity = self.n + self.m;
        let names = names_or_default(self.names, arity)?;
        let d = self.d.unwrap_or_else(|| vec![1; self.n]);
        let rho = match self.rho {
            Some(rows) => rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, t)| poly(t, &names, &format!("rho[{i}][{j}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
            None => d
                .iter()
                .map(|&di| vec![LaurentPoly::one(arity); di.max(0) as usize + 1])
                .collect(),
        };
        Ok(GeneralizedSeed {
            ring: self.ring,
            n: self.n,
            m: self.m,
            names,
            b: self.b,
            d,
            rho,
        })
    }

    pub fn from_seed(s: &GeneralizedSeed) -> Self {
        SeedDocument {
            ring: s.ring,
            n: s.n,
            m: s.m,
            names: Some(s.names.clone()),
            b: s.b.clone(),
            d: Some(s.d.clone()),
            rho: Some(
                s.rho
                    .iter()
                    .map(|row| row.iter().map(|r| r.to_string_with(&s.names)).collect())
                    .collect(),
            ),
        }
    }
}

impl LpSeedDocument {
    pub fn into_seed(self) -> Result<LPSeed> {
        let s = self.into_unchecked()?;
        s.validate().map_err(Error::InvalidLpSeed)?;
        Ok(s)
    }

    pub fn into_unchecked(self) -> Result<LPSeed> {
        if self.f.len() != self.n {
            return Err(Error::Document(format!(
                "F: expected {} entries, found {}",
                self.n,
                self.f.len()
            )));
        }
        let names = names_or_default(self.names, self.n)?;
        let f = self
            .f
            .iter()
            .enumerate()
            .map(|(i, t)| poly(t, &names, &format!("F[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(LPSeed {
            ring: self.ring,
            n: self.n,
            names,
            f,
        })
    }

    pub fn from_seed(s: &LPSeed) -> Self {
        LpSeedDocument {
            ring: s.ring,
            n: s.n,
            names: Some(s.names.clone()),
            f: s.f.iter().map(|p| p.to_string_with(&s.names)).collect(),
        }
    }
}

pub fn parse_seed(text: &str) -> Result<GeneralizedSeed> {
    from_value::<SeedDocument>(parse_value(text)?)?.into_seed()
}

pub fn parse_lp_seed(text: &str) -> Result<LPSeed> {
    from_value::<LpSeedDocument>(parse_value(text)?)?.into_seed()
}

pub fn parse_any_seed(text: &str) -> Result<AnySeed> {
    let v = parse_value(text)?;
    if v.get("F").is_some() {
        Ok(AnySeed::Lp(from_value::<LpSeedDocument>(v)?.into_seed()?))
    } else {
        Ok(AnySeed::Generalized(from_value::<SeedDocument>(v)?.into_seed()?))
    }
}

/// Like [`parse_any_seed`] but without checking seed invariants, so that
/// violations can be reported as data.
pub fn parse_any_seed_unchecked(text: &str) -> Result<AnySeed> {
    let v = parse_value(text)?;
    if v.get("F").is_some() {
        Ok(AnySeed::Lp(from_value::<LpSeedDocument>(v)?.into_unchecked()?))
    } else {
        Ok(AnySeed::Generalized(from_value::<SeedDocument>(v)?.into_unchecked()?))
    }
}

pub fn parse_group(text: &str) -> Result<AbelianGroupSpec> {
    let doc: GroupDocument = from_value(parse_value(text)?)?;
    AbelianGroupSpec::new(doc.free_rank, doc.torsion)
}

pub fn seed_to_value(s: &GeneralizedSeed) -> Value {
    serde_json::to_value(SeedDocument::from_seed(s)).expect("seed documents serialize")
}

pub fn lp_seed_to_value(s: &LPSeed) -> Value {
    serde_json::to_value(LpSeedDocument::from_seed(s)).expect("seed documents serialize")
}

pub fn seed_to_json(s: &GeneralizedSeed) -> String {
    seed_to_value(s).to_string()
}

pub fn lp_seed_to_json(s: &LPSeed) -> String {
    lp_seed_to_value(s).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = r#"{"ring":"Q","n":2,"m":0,"B":[[0,-2],[1,0]],"d":[1,2],"rho":[["1","1"],["1","2","1"]]}"#;

    #[test]
    fn round_trip() {
        let s = parse_seed(Z2).unwrap();
        let text = seed_to_json(&s);
        assert_eq!(parse_seed(&text).unwrap(), s);
        assert_eq!(seed_to_json(&parse_seed(&text).unwrap()), text);
    }

    #[test]
    fn error_location() {
        let e = parse_seed("{\"n\": 2,\n \"B\": [[0,1],[-1,0]]").unwrap_err();
        match e {
            Error::Document(msg) => assert!(msg.starts_with("line 2"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lp_documents() {
        let s = parse_lp_seed(r#"{"n":3,"F":["x2 + 1","x1 + x3","x2 + 1"]}"#).unwrap();
        assert_eq!(parse_lp_seed(&lp_seed_to_json(&s)).unwrap(), s);
        assert!(matches!(parse_any_seed(&lp_seed_to_json(&s)), Ok(AnySeed::Lp(_))));
    }
}
