use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `coefficient · x^exponents`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coefficient: BigInt,
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(coefficient: BigInt, exponents: Vec<u32>) -> Self {
        Monomial { coefficient, exponents }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// Sparse polynomial in `dim` variables with integer coefficients.
///
/// Keyed by exponent vector; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: BigInt) -> Self {
        let mut p = Polynomial::zero(dim);
        p.add_term(vec![0; dim], c);
        p
    }

    pub fn one(dim: usize) -> Self {
        Polynomial::constant(dim, BigInt::one())
    }

    /// The coordinate function `x_i`.
    pub fn variable(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        let mut p = Polynomial::zero(dim);
        p.add_term(e, BigInt::one());
        p
    }

    /// Sums the given monomials; repeated exponent vectors are combined.
    pub fn from_monomials(dim: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut p = Polynomial::zero(dim);
        for m in monomials {
            if m.exponents.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.exponents.len() });
            }
            p.add_term(m.exponents, m.coefficient);
        }
        Ok(p)
    }

    /// Convenience constructor from `(coefficient, exponents)` pairs.
    pub fn from_terms(dim: usize, terms: &[(i64, &[u32])]) -> Result<Self> {
        Polynomial::from_monomials(dim, terms.iter().map(|(c, e)| Monomial::new(BigInt::from(*c), e.to_vec())))
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        debug_assert_eq!(exponents.len(), self.dim);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(e, c)| Monomial::new(c.clone(), e.clone()))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest absolute coefficient (zero for the zero polynomial).
    pub fn max_abs_coefficient(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Total degree; zero for constants and for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.degree_in(&(0..self.dim).collect::<Vec<_>>())
    }

    /// Largest total degree in the given subset of variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|e| vars.iter().map(|&i| e[i]).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.dim);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(x).fold(c.clone(), |acc, (&k, xi)| acc * xi.pow(k))
            })
            .sum()
    }

    pub fn eval_rational(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.dim);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(BigRational::from_integer(c.clone()), |acc, (&k, xi)| acc * xi.pow(k as i32))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        let mut p = Polynomial::zero(self.dim);
        for (e, v) in &self.terms {
            p.add_term(e.clone(), v * c);
        }
        p
    }

    /// `self^k` by repeated multiplication (`k = 0` gives `1`).
    pub fn pow(&self, k: u32) -> Polynomial {
        poly_pow(self, k)
    }

    /// `g(n) = self(offset + Σ_j n_j · directions[j])`, a polynomial in
    /// `directions.len()` new variables.
    pub fn compose_affine(&self, offset: &[BigInt], directions: &[Vec<BigInt>]) -> Polynomial {
        let k = directions.len();
        let linear: Vec<Polynomial> = (0..self.dim)
            .map(|i| {
                let mut l = Polynomial::constant(k, offset[i].clone());
                for (j, dir) in directions.iter().enumerate() {
                    let mut e = vec![0; k];
                    e[j] = 1;
                    l.add_term(e, dir[i].clone());
                }
                l
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = linear.iter().map(|l| vec![Polynomial::one(k), l.clone()]).collect();
        let mut out = Polynomial::zero(k);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(k, c.clone());
            for (i, &ei) in e.iter().enumerate() {
                while powers[i].len() <= ei as usize {
                    let next = powers[i].last().unwrap() * &linear[i];
                    powers[i].push(next);
                }
                if ei > 0 {
                    term = &term * &powers[i][ei as usize];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// `n^{D_c} · self(x, y/n)`, where `y` are the variables in `continuous`
    /// and `D_c` is the largest degree in them: the coefficient of `x^β` gets
    /// the factor `n^{D_c - Σ_{j ∈ continuous} β_j}`.
    pub fn semi_scale(&self, n: &BigInt, continuous: &[usize]) -> Polynomial {
        let dc = self.degree_in(continuous);
        let mut p = Polynomial::zero(self.dim);
        for (e, c) in &self.terms {
            let beta: u32 = continuous.iter().map(|&j| e[j]).sum();
            p.add_term(e.clone(), c * n.pow(dc - beta));
        }
        p
    }

    /// Renders with variable names `names[i]` (defaults `x1, x2, …`).
    pub fn render(&self, names: Option<&[String]>) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let default: Vec<String> = (1..=self.dim).map(|i| format!("x{i}")).collect();
        let names = names.unwrap_or(&default);
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{k}", names[i]) })
                .collect();
            let mag = c.abs();
            let body = if factors.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                factors.join("*")
            } else {
                format!("{mag}*{}", factors.join("*"))
            };
            match (idx, c.is_negative()) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, other.dim);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, other.dim);
        let mut p = Polynomial::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }
}

/// `f^k`, expanded exactly.
pub fn poly_pow(f: &Polynomial, k: u32) -> Polynomial {
    let mut acc = Polynomial::one(f.dim);
    for _ in 0..k {
        acc = &acc * f;
    }
    acc
}
