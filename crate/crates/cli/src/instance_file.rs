//! The JSON instance format.
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "constraints": [
//!     { "coefficients": [3996, -4], "relation": "<=", "rhs": 3993 },
//!     { "coefficients": ["1/2", 0], "relation": ">=", "rhs": "1/4" }
//!   ],
//!   "objective": [ { "coefficient": 1, "exponents": [3, 1] } ],
//!   "metadata": { "name": "example1", "nonnegative": true, "sense": "max" }
//! }
//! ```
//!
//! Numbers are JSON integers or strings holding an integer or a fraction
//! `"p/q"`; floating-point literals are rejected so parsing stays exact.

use std::fmt;

use latpoly::exactnum::{format_rational, parse_rational, BigInt, BigRational};
use latpoly::genfun::Polynomial;
use latpoly::geometry::Polytope;
use latpoly::instances::{InstanceBundle, Sense};
use num_traits::{One, ToPrimitive};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// An exact rational read from a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub BigRational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.is_integer().then(|| self.0.numer().to_i64()).flatten() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&format_rational(&self.0)),
        }
    }
}

struct ExactVisitor;

impl<'de> Visitor<'de> for ExactVisitor {
    type Value = Exact;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a string \"p\" or \"p/q\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Exact, E> {
        Ok(Exact(BigRational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Exact, E> {
        Ok(Exact(BigRational::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Exact, E> {
        Err(E::custom(format!("floating-point number {v} is not exact; write it as \"p/q\"")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Exact, E> {
        parse_rational(v).map(Exact).ok_or_else(|| E::custom(format!("malformed number \"{v}\"")))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Exact, D::Error> {
        d.deserialize_any(ExactVisitor)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintRow {
    pub coefficients: Vec<Exact>,
    pub relation: Relation,
    pub rhs: Exact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialEntry {
    pub coefficient: Exact,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SenseName {
    #[default]
    #[serde(rename = "max")]
    Max,
    #[serde(rename = "min")]
    Min,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default)]
    pub nonnegative: bool,
    #[serde(default)]
    pub sense: SenseName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_optimum: Option<Exact>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<Exact>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dimension: usize,
    pub constraints: Vec<ConstraintRow>,
    pub objective: Vec<MonomialEntry>,
    #[serde(default)]
    pub metadata: Metadata,
}

#[derive(Debug)]
pub enum FileError {
    /// Malformed JSON or a malformed number, with its position.
    Syntax { line: usize, column: usize, message: String },
    /// Well-formed JSON that does not describe a valid instance.
    Invalid(String),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            FileError::Syntax { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            FileError::Invalid(m) => f.write_str(m),
        }
    }
}

fn integer(q: &BigRational, what: &str) -> Result<BigInt, FileError> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(FileError::Invalid(format!("{what} must be an integer, found {}", format_rational(q))))
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// SHA-256 of the canonical compact serialization.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("serializable");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub fn from_bundle(b: &InstanceBundle) -> Self {
        let constraints = b
            .polytope
            .rows()
            .iter()
            .zip(b.polytope.rhs())
            .map(|(row, rhs)| ConstraintRow {
                coefficients: row.iter().map(|a| Exact(BigRational::from_integer(a.clone()))).collect(),
                relation: Relation::Le,
                rhs: Exact(BigRational::from_integer(rhs.clone())),
            })
            .collect();
        let objective = b
            .objective
            .monomials()
            .map(|m| MonomialEntry { coefficient: Exact(BigRational::from_integer(m.coefficient)), exponents: m.exponents })
            .collect();
        InstanceFile {
            dimension: b.dim(),
            constraints,
            objective,
            metadata: Metadata {
                name: Some(b.name.clone()),
                note: (!b.note.is_empty()).then(|| b.note.clone()),
                nonnegative: b.nonnegative,
                sense: match b.sense {
                    Sense::Maximize => SenseName::Max,
                    Sense::Minimize => SenseName::Min,
                },
                known_optimum: b.known_optimum.clone().map(|v| Exact(BigRational::from_integer(v))),
                scale: (!b.scale.is_one()).then(|| Exact(BigRational::from_integer(b.scale.clone()))),
                seed: b.seed,
            },
        }
    }

    pub fn to_bundle(&self) -> Result<InstanceBundle, FileError> {
        let d = self.dimension;
        if d == 0 {
            return Err(FileError::Invalid("dimension must be positive".into()));
        }
        let mut rows = Vec::with_capacity(self.constraints.len());
        let mut rhs = Vec::with_capacity(self.constraints.len());
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coefficients.len() != d {
                return Err(FileError::Invalid(format!(
                    "constraint {i} has {} coefficients, expected {d}",
                    c.coefficients.len()
                )));
            }
            let sign = BigRational::from_integer(match c.relation {
                Relation::Le => 1.into(),
                Relation::Ge => (-1).into(),
            });
            rows.push(c.coefficients.iter().map(|a| &a.0 * &sign).collect());
            rhs.push(&c.rhs.0 * &sign);
        }
        let polytope = Polytope::from_rational(d, rows, rhs).map_err(|e| FileError::Invalid(format!("constraints: {e}")))?;
        let mut objective = Polynomial::zero(d);
        for (i, m) in self.objective.iter().enumerate() {
            if m.exponents.len() != d {
                return Err(FileError::Invalid(format!(
                    "objective term {i} has {} exponents, expected {d}",
                    m.exponents.len()
                )));
            }
            objective.add_term(m.exponents.clone(), integer(&m.coefficient.0, &format!("objective coefficient {i}"))?);
        }
        let meta = &self.metadata;
        let known_optimum = meta.known_optimum.as_ref().map(|v| integer(&v.0, "known_optimum")).transpose()?;
        let scale = match &meta.scale {
            Some(s) => integer(&s.0, "scale")?,
            None => BigInt::one(),
        };
        Ok(InstanceBundle {
            name: meta.name.clone().unwrap_or_default(),
            note: meta.note.clone().unwrap_or_default(),
            polytope,
            objective,
            sense: match meta.sense {
                SenseName::Max => Sense::Maximize,
                SenseName::Min => Sense::Minimize,
            },
            known_optimum,
            nonnegative: meta.nonnegative,
            scale,
            seed: meta.seed,
        })
    }
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}
