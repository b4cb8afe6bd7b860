use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::polynomial::Polynomial;
use super::term::{apply_monomial, merge_terms, GeneralizedTerm, GeneralizedTermSum};

/// Row `g` holds `e_{g,m}` for `m = 1..=g+1` with
/// `Σ_{n≥0} n^g y^n = Σ_m e_{g,m} (1 - y)^{-m}`.
static EULER_ROWS: Mutex<Vec<Vec<BigInt>>> = Mutex::new(Vec::new());

fn euler_rows(max_g: usize) -> Vec<Vec<BigInt>> {
    let mut rows = EULER_ROWS.lock().unwrap_or_else(|e| e.into_inner());
    if rows.is_empty() {
        rows.push(vec![BigInt::from(1)]);
    }
    while rows.len() <= max_g {
        // y d/dy (1-y)^{-m} = m (1-y)^{-(m+1)} - m (1-y)^{-m}
        let prev = rows.last().unwrap();
        let mut next = vec![BigInt::zero(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            let m = BigInt::from(i + 1);
            let t = c * &m;
            next[i + 1] += &t;
            next[i] -= t;
        }
        rows.push(next);
    }
    rows[..=max_g].to_vec()
}

/// Rewrites `Σ_n F(n) y^n` in the basis `Π_j (1 - y_j)^{-m_j}`; keys are the
/// multiplicity vectors.
fn contract(f: &Polynomial, table: &[Vec<BigInt>]) -> BTreeMap<Vec<u32>, BigInt> {
    let mut cur: BTreeMap<Vec<u32>, BigInt> = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    for j in 0..f.dim() {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (key, c) in cur {
            let g = key[j] as usize;
            for (i, e) in table[g].iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let mut k = key.clone();
                k[j] = i as u32 + 1;
                *next.entry(k).or_insert_with(BigInt::zero) += &c * e;
            }
        }
        next.retain(|_, c| !c.is_zero());
        cur = next;
    }
    cur
}

/// One numerator monomial of a term with all multiplicities 1, in cone
/// coordinates: the term is `c Σ_{n ≥ 0} z^{a + Σ n_j v_j}`.
#[derive(Clone, Debug)]
struct Piece {
    coefficient: BigRational,
    apex: Vec<BigInt>,
    rays: Vec<Vec<BigInt>>,
    base: Polynomial,
    power: Polynomial,
}

impl Piece {
    fn expand(&self, out: &mut Vec<GeneralizedTerm>) {
        let table = euler_rows(self.power.total_degree() as usize);
        for (ms, c) in contract(&self.power, &table) {
            let denominator = self.rays.iter().cloned().zip(ms).collect();
            out.push(GeneralizedTerm {
                numerator: vec![(&self.coefficient * BigRational::from_integer(c), self.apex.clone())],
                denominator,
            });
        }
    }
}

enum Strategy {
    /// Every factor has multiplicity 1: substitute cone coordinates.
    Cone(Vec<Piece>),
    /// Repeated Euler operators on `f^k`.
    Generic { sum: GeneralizedTermSum, power: Polynomial },
}

/// Applies `f, f^2, f^3, …` to a fixed sum, reusing each power for the next.
///
/// For sums whose multiplicities are all 1 (lifted generating functions), the
/// polynomial is pulled back along each term's cone coordinates
/// `x = a + Σ n_j v_j`; then `Σ_n F(n) z^{a + Σ n_j v_j}` follows from the
/// expansion of `Σ_n n^g y^n` in powers of `(1 - y)^{-1}`. Powers are formed
/// in cone coordinates, where `f` has few terms. Other sums fall back to
/// repeated Euler operators.
pub struct PowerApplier {
    dim: usize,
    f: Polynomial,
    k: u32,
    strategy: Strategy,
}

impl PowerApplier {
    pub fn new(s: &GeneralizedTermSum, f: &Polynomial) -> Self {
        assert_eq!(s.dim, f.dim(), "dimension mismatch between sum and polynomial");
        let simple = s.terms.iter().all(|t| t.denominator.iter().all(|(_, m)| *m == 1));
        let strategy = if simple {
            let mut pieces = Vec::new();
            for t in &s.terms {
                let rays: Vec<Vec<BigInt>> = t.denominator.iter().map(|(v, _)| v.clone()).collect();
                for (c, a) in &t.numerator {
                    let base = f.compose_affine(a, &rays);
                    pieces.push(Piece {
                        coefficient: c.clone(),
                        apex: a.clone(),
                        power: Polynomial::one(rays.len()),
                        rays: rays.clone(),
                        base,
                    });
                }
            }
            Strategy::Cone(pieces)
        } else {
            Strategy::Generic { sum: s.clone(), power: Polynomial::one(s.dim) }
        };
        PowerApplier { dim: s.dim, f: f.clone(), k: 0, strategy }
    }

    /// The exponent of the most recent result.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Advances to the next power and returns `f^k` applied to the sum.
    pub fn next_power(&mut self) -> GeneralizedTermSum {
        self.k += 1;
        match &mut self.strategy {
            Strategy::Cone(pieces) => {
                let mut out = Vec::new();
                for p in pieces.iter_mut() {
                    p.power = &p.power * &p.base;
                    p.expand(&mut out);
                }
                merge_terms(self.dim, out)
            }
            Strategy::Generic { sum, power } => {
                *power = &*power * &self.f;
                apply_polynomial_generic(sum, power)
            }
        }
    }

    /// Advances to power `k` (which must not be below the current one).
    pub fn power(&mut self, k: u32) -> GeneralizedTermSum {
        assert!(k > self.k, "powers are produced in increasing order");
        if let Strategy::Cone(pieces) = &mut self.strategy {
            // Skip the intermediate expansions.
            for p in pieces.iter_mut() {
                for _ in self.k + 1..k {
                    p.power = &p.power * &p.base;
                }
            }
            self.k = k - 1;
        } else {
            while self.k + 1 < k {
                self.k += 1;
                if let Strategy::Generic { power, .. } = &mut self.strategy {
                    *power = &*power * &self.f;
                }
            }
        }
        self.next_power()
    }
}

/// `Σ_α f(α) g(α) z^α` for `s = Σ_α g(α) z^α`.
pub fn apply_polynomial(s: &GeneralizedTermSum, f: &Polynomial) -> GeneralizedTermSum {
    PowerApplier::new(s, f).next_power()
}

/// `apply_polynomial` computed monomial by monomial through Euler operators.
pub fn apply_polynomial_generic(s: &GeneralizedTermSum, f: &Polynomial) -> GeneralizedTermSum {
    let parts: Vec<GeneralizedTerm> = f.monomials().flat_map(|m| apply_monomial(s, &m).terms).collect();
    merge_terms(s.dim, parts)
}
