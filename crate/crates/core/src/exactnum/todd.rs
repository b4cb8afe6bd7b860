use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::factorial;

static CACHE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// Coefficients of `(1 - e^x)^{-m}` for `m = 1, 2, …`, all known up to
/// `x^{top - (m - 1)}`.
struct InversePowers {
    top: i64,
    rows: Vec<Vec<BigRational>>,
}

static INVERSE_POWERS: Mutex<InversePowers> = Mutex::new(InversePowers { top: -1, rows: Vec::new() });

/// First `count` Taylor coefficients of `h(x) = x / (e^x - 1)`, i.e. `B_i / i!`.
///
/// Uses `h(x) · (e^x - 1)/x = 1`, which gives `h_j = -Σ_{i<j} h_i / (j-i+1)!`.
/// Coefficients are cached process-wide and only extended on demand.
pub fn todd_coefficients(count: usize) -> Vec<BigRational> {
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() < count {
        let j = cache.len();
        let next = if j == 0 {
            BigRational::from_integer(BigInt::from(1))
        } else {
            let mut acc = BigRational::zero();
            for (i, h) in cache.iter().enumerate() {
                acc += h / BigRational::from_integer(factorial(j - i + 1));
            }
            -acc
        };
        cache.push(next);
    }
    cache[..count].to_vec()
}

/// Coefficients of `x^{-m}, …, x^{order}` in the Laurent expansion of
/// `(1 - e^x)^{-m}`.
///
/// With `a = 1/(1 - e^x)` one has `a' = a^2 - a`, so
/// `a^{m+1} = a^m + (a^m)'/m`; each power follows from the previous one in
/// linear time.
pub(crate) fn inverse_power_coefficients(m: u32, order: i64) -> Vec<BigRational> {
    assert!(m >= 1);
    let m_idx = m as usize - 1;
    let mut cache = INVERSE_POWERS.lock().unwrap_or_else(|e| e.into_inner());
    let needed_top = order + m as i64 - 1;
    if needed_top > cache.top || m_idx >= cache.rows.len() {
        let top = if needed_top > cache.top { needed_top.max(cache.top * 3 / 2).max(8) } else { cache.top };
        let rows_now = cache.rows.len();
        let count = if m_idx >= rows_now { (m as usize).max(rows_now * 3 / 2).max(4) } else { rows_now };
        let h = todd_coefficients((top + 2) as usize);
        // a = -h(x)/x, from x^{-1} up to x^{top}.
        let mut rows = Vec::with_capacity(count);
        rows.push(h.iter().map(|c| -c).collect::<Vec<_>>());
        for j in 1..count {
            let prev: &Vec<BigRational> = &rows[j - 1];
            let mj = j as i64;
            let inv = BigRational::new(BigInt::from(1), BigInt::from(mj));
            // prev covers x^{-mj} .. ; next covers x^{-mj-1} .. one order lower.
            let mut next = Vec::with_capacity(prev.len());
            for (idx, _) in prev.iter().enumerate() {
                let k = idx as i64 - mj - 1;
                let here = if idx == 0 { BigRational::zero() } else { prev[idx - 1].clone() };
                let deriv = BigRational::from_integer(BigInt::from(k + 1)) * &prev[idx] * &inv;
                next.push(here + deriv);
            }
            rows.push(next);
        }
        cache.top = top;
        cache.rows = rows;
    }
    let row = &cache.rows[m_idx];
    let len = (order + m as i64 + 1).max(0) as usize;
    row[..len].to_vec()
}
