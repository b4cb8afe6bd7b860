//! Instance builders: the two worked examples, the quartic family from the
//! hardness reduction, and seeded random instances.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::genfun::Polynomial;
use crate::geometry::{LatticeBox, Polytope};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sense {
    #[default]
    Maximize,
    Minimize,
}

impl Sense {
    pub fn as_str(self) -> &'static str {
        match self {
            Sense::Maximize => "max",
            Sense::Minimize => "min",
        }
    }
}

/// A polytope, an objective, and what is known about them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceBundle {
    pub name: String,
    pub note: String,
    pub polytope: Polytope,
    pub objective: Polynomial,
    pub sense: Sense,
    /// Optimum of `objective` in the given sense, when known.
    pub known_optimum: Option<BigInt>,
    /// Whether `objective ≥ 0` on every lattice point of the polytope.
    pub nonnegative: bool,
    /// `objective` equals this factor times the problem as originally stated.
    pub scale: BigInt,
    pub seed: Option<u64>,
}

impl InstanceBundle {
    fn new(name: &str, note: &str, polytope: Polytope, objective: Polynomial, sense: Sense) -> Result<Self> {
        if polytope.dim() != objective.dim() {
            return Err(Error::DimensionMismatch { expected: polytope.dim(), found: objective.dim() });
        }
        Ok(InstanceBundle {
            name: name.to_string(),
            note: note.to_string(),
            polytope,
            objective,
            sense,
            known_optimum: None,
            nonnegative: false,
            scale: BigInt::one(),
            seed: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn polytope(dim: usize, rows: &[&[i64]], rhs: &[i64]) -> Result<Polytope> {
    Polytope::new(dim, rows.iter().map(|r| ints(r)).collect(), ints(rhs))
}

/// `max x³y` over `{3991 ≤ 3996x − 4y ≤ 3993, 1/2 ≤ x ≤ 5/2}`, which holds
/// the two lattice points (1, 1) and (2, 1000).
pub fn example1() -> InstanceBundle {
    let p = polytope(2, &[&[3996, -4], &[-3996, 4], &[2, 0], &[-2, 0]], &[3993, -3991, 5, -1])
        .expect("valid polytope");
    let f = Polynomial::from_terms(2, &[(1, &[3, 1])]).expect("valid objective");
    let mut b = InstanceBundle::new("example1", "monomial x^3*y over a thin quadrilateral", p, f, Sense::Maximize)
        .expect("dimensions agree");
    b.known_optimum = Some(BigInt::from(8000));
    b.nonnegative = true;
    b
}

/// `100 g`, where `g = 100 (1/2 + y − (3/5 + x)²)² + (2/5 − x)²` is the
/// nvs04 objective (minimum 0.72 at (1, 2)).
pub fn nvs04_scaled_objective() -> Polynomial {
    Polynomial::from_terms(
        2,
        &[
            (10000, &[4, 0]),
            (24000, &[3, 0]),
            (-20000, &[2, 1]),
            (11700, &[2, 0]),
            (-24000, &[1, 1]),
            (-3440, &[1, 0]),
            (10000, &[0, 2]),
            (2800, &[0, 1]),
            (212, &[0, 0]),
        ],
    )
    .expect("valid objective")
}

/// Upper bound on `g` over the box used to turn the minimization into a
/// maximization: `h = NVS04_FLIP − g ≥ 0` on every feasible point.
pub const NVS04_FLIP: u64 = 165_000_000_000;

/// nvs04 on `[0, 200]²` as the maximization of `100 (165·10⁹ − g)`, an
/// integer polynomial that is positive on the box. The optimum is
/// 16499999999928, that is 164999999999.28 in the unscaled objective.
pub fn nvs04() -> InstanceBundle {
    let p = Polytope::from_box(&LatticeBox::new(ints(&[0, 0]), ints(&[200, 200]))).expect("valid box");
    let flip = Polynomial::constant(2, BigInt::from(NVS04_FLIP) * 100);
    let f = &flip - &nvs04_scaled_objective();
    let mut b = InstanceBundle::new(
        "nvs04",
        "100*(165e9 - g) for the nvs04 objective g; minimum of g is 0.72 at (1, 2)",
        p,
        f,
        Sense::Maximize,
    )
    .expect("dimensions agree");
    b.known_optimum = Some(BigInt::from(16_499_999_999_928u64));
    b.nonnegative = true;
    b.scale = BigInt::from(100);
    b
}

/// `min (x² − a − b y)²` over `1 ≤ x ≤ c − 1`, `1 − a ≤ b y ≤ (c − 1)² − a`.
/// The minimum is 0 exactly when `x² ≡ a (mod b)` for some `0 < x < c`.
pub fn an1_instance(a: u64, b: u64, c: u64) -> Result<InstanceBundle> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("a and b must be positive".into()));
    }
    if c <= 1 {
        return Err(Error::InvalidParameter("c must be at least 2".into()));
    }
    let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
    let cm1: BigInt = &c - 1;
    let z = BigInt::zero;
    let p = Polytope::new(
        2,
        vec![vec![-BigInt::one(), z()], vec![BigInt::one(), z()], vec![z(), -b.clone()], vec![z(), b.clone()]],
        vec![-BigInt::one(), cm1.clone(), &a - BigInt::one(), &cm1 * &cm1 - &a],
    )?;
    let mut inner = Polynomial::zero(2);
    inner.add_term(vec![2, 0], BigInt::one());
    inner.add_term(vec![0, 0], -a.clone());
    inner.add_term(vec![0, 1], -b.clone());
    let f = inner.pow(2);
    let mut bundle = InstanceBundle::new(
        "an1",
        &format!("quadratic residue test for a={a}, b={b}, c={c}"),
        p,
        f,
        Sense::Minimize,
    )?;
    bundle.nonnegative = true;
    Ok(bundle)
}

fn random_parts(d: usize, degree: u32, radius: u64, rng: &mut ChaCha8Rng) -> Result<(Polytope, Vec<(Vec<u32>, i64)>)> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be positive".into()));
    }
    if radius == 0 || radius > i64::MAX as u64 / 16 {
        return Err(Error::InvalidParameter("radius must be positive and moderate".into()));
    }
    let r = radius as i64;
    let bx = LatticeBox::new(vec![BigInt::from(-r); d], vec![BigInt::from(r); d]);
    let center: Vec<i64> = (0..d).map(|_| rng.gen_range(-r..=r)).collect();
    let extra = rng.gen_range(0..=d + 1);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    while rows.len() < extra {
        let a: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
        if a.iter().all(|&x| x == 0) {
            continue;
        }
        let at_center: i64 = a.iter().zip(&center).map(|(x, c)| x * c).sum();
        rhs.push(BigInt::from(at_center + rng.gen_range(1..=r)));
        rows.push(ints(&a));
    }
    let p = Polytope::from_box(&bx)?.with_constraints(rows, rhs)?;
    let terms = rng.gen_range(1..=4);
    let monomials = (0..terms)
        .map(|_| {
            let total = rng.gen_range(0..=degree);
            let mut e = vec![0u32; d];
            for _ in 0..total {
                e[rng.gen_range(0..d)] += 1;
            }
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-9..=9);
            }
            (e, c)
        })
        .collect();
    Ok((p, monomials))
}

/// A reproducible instance: the box `[−radius, radius]^d` cut by up to `d + 1`
/// random inequalities that keep a random box point strictly feasible (so the
/// polytope is full dimensional), and an objective of degree at most `degree`
/// with coefficients in `[−9, 9]`.
pub fn random_instance(d: usize, degree: u32, radius: u64, seed: u64) -> Result<InstanceBundle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, monomials) = random_parts(d, degree, radius, &mut rng)?;
    let mut f = Polynomial::zero(d);
    for (e, c) in monomials {
        f.add_term(e, BigInt::from(c));
    }
    let mut b = InstanceBundle::new(&format!("random-d{d}-D{degree}-r{radius}-s{seed}"), "seeded random instance", p, f, Sense::Maximize)?;
    b.seed = Some(seed);
    Ok(b)
}

/// Like [`random_instance`], but with coefficients in `[1, 9]` and every
/// variable shifted by `radius`, so the objective is non-negative on the box.
pub fn random_nonnegative_instance(d: usize, degree: u32, radius: u64, seed: u64) -> Result<InstanceBundle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (p, monomials) = random_parts(d, degree, radius, &mut rng)?;
    let mut base = Polynomial::zero(d);
    for (e, c) in monomials {
        base.add_term(e, BigInt::from(c.abs()));
    }
    let offset = vec![BigInt::from(radius); d];
    let identity: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let f = base.compose_affine(&offset, &identity);
    let mut b = InstanceBundle::new(
        &format!("random-nonneg-d{d}-D{degree}-r{radius}-s{seed}"),
        "seeded random instance, non-negative objective",
        p,
        f,
        Sense::Maximize,
    )?;
    b.nonnegative = true;
    b.seed = Some(seed);
    Ok(b)
}
