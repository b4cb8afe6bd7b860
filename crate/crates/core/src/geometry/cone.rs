use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::linalg::dot;
use crate::exactnum::format_rational;

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn from_integers(v: &[BigInt]) -> Self {
        RationalPoint(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A pointed cone `apex + cone(generators)`, also described by the
/// inequalities `a · (x - apex) ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub apex: RationalPoint,
    pub generators: Vec<Vec<BigInt>>,
    pub inequalities: Vec<Vec<BigInt>>,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.apex.dim()
    }

    pub fn is_simplicial(&self) -> bool {
        self.generators.len() == self.dim()
    }

    /// Whether the direction `g` (relative to the apex) lies in the cone.
    pub fn contains_direction(&self, g: &[BigInt]) -> bool {
        self.inequalities.iter().all(|a| !dot(a, g).is_positive())
    }
}

/// An axis-aligned box of integer points, `lower ≤ x ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBox {
    pub lower: Vec<BigInt>,
    pub upper: Vec<BigInt>,
}

impl LatticeBox {
    pub fn new(lower: Vec<BigInt>, upper: Vec<BigInt>) -> Self {
        assert_eq!(lower.len(), upper.len());
        assert!(lower.iter().zip(&upper).all(|(l, u)| l <= u), "box bounds out of order");
        LatticeBox { lower, upper }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Number of integer points in the box.
    pub fn volume(&self) -> BigInt {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| u - l + 1)
            .product()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        x.len() == self.dim()
            && x.iter().zip(&self.lower).zip(&self.upper).all(|((v, l), u)| l <= v && v <= u)
    }

    /// Largest absolute value of any corner coordinate.
    pub fn magnitude(&self) -> BigInt {
        self.lower
            .iter()
            .chain(&self.upper)
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn width(&self, i: usize) -> BigInt {
        &self.upper[i] - &self.lower[i]
    }
}

impl fmt::Display for LatticeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| format!("[{l}, {u}]"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}
