use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Largest integer `n ≥ 0` with `n^k ≤ q`. Pure integer arithmetic.
pub fn integer_kth_root_floor(q: &BigRational, k: u32) -> BigInt {
    assert!(k >= 1, "root degree must be positive");
    assert!(!q.is_negative(), "radicand must be non-negative");
    // n^k ≤ q  iff  n^k ≤ floor(q) for integer n.
    q.floor().to_integer().nth_root(k)
}

/// Smallest integer `n ≥ 0` with `n^k ≥ q`.
pub fn integer_kth_root_ceil(q: &BigRational, k: u32) -> BigInt {
    let n = integer_kth_root_floor(q, k);
    if &BigRational::from_integer(n.pow(k)) == q {
        n
    } else {
        n + 1
    }
}

/// A certified bracket `lower ≤ radicand^{1/k} ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lower: BigRational,
    pub upper: BigRational,
    pub k: u32,
    pub radicand: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Decimal rendering of the exact root, correctly rounded (half away from
    /// zero) to `digits` fractional digits. The bracket is refined from the
    /// radicand until both ends round to the same string.
    pub fn decimal(&self, digits: u32) -> String {
        if self.is_exact() {
            return round_to_decimal(&self.lower, digits);
        }
        let mut extra = 2;
        loop {
            let scale = BigInt::from(10u32).pow(digits + extra);
            let interval = root_at_scale(&self.radicand, self.k, &scale);
            let lo = round_to_decimal(&interval.lower, digits);
            if interval.is_exact() || lo == round_to_decimal(&interval.upper, digits) {
                return lo;
            }
            extra *= 2;
        }
    }
}

fn root_at_scale(q: &BigRational, k: u32, scale: &BigInt) -> RootInterval {
    // floor(q^{1/k} · scale) = floor((q · scale^k)^{1/k}).
    let scaled = q * BigRational::from_integer(scale.pow(k));
    let n = integer_kth_root_floor(&scaled, k);
    let lower = BigRational::new(n.clone(), scale.clone());
    let exact = BigRational::from_integer(n.pow(k)) == scaled;
    let upper = if exact { lower.clone() } else { BigRational::new(n + 1, scale.clone()) };
    RootInterval { lower, upper, k, radicand: q.clone() }
}

/// Brackets `q^{1/k}` by an interval of width at most `precision`, using the
/// smallest power-of-two grid that is fine enough. Exact roots on that grid
/// collapse to a point.
pub fn rational_kth_root_interval(q: &BigRational, k: u32, precision: &BigRational) -> RootInterval {
    assert!(k >= 1, "root degree must be positive");
    assert!(!q.is_negative(), "radicand must be non-negative");
    assert!(precision.is_positive(), "precision must be positive");
    let mut scale = BigInt::one();
    while BigRational::new(BigInt::one(), scale.clone()) > *precision {
        scale <<= 1;
    }
    root_at_scale(q, k, &scale)
}

/// `x` rounded half away from zero to `digits` fractional digits.
pub fn round_to_decimal(x: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let two = BigInt::from(2);
    let rounded: BigInt = (scaled.numer() * &two + scaled.denom()).div_floor(&(scaled.denom() * &two));
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits as usize)
    }
}
