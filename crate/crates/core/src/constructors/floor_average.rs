use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{floor_mul, from_int, Rational};

/// `([k·x] + [(k+1)·x] + … + [n·x]) / (n(n+1)/2)`, exactly.
///
/// Tends to `x` as `n` grows, for fixed `k`.
pub fn floor_weighted_average(x: &Rational, k: u64, n: u64) -> Result<Rational> {
    check(x, k, n)?;
    let mut sum = BigInt::zero();
    for j in k..=n {
        sum += floor_mul(j, x);
    }
    Ok(Rational::new(
        sum * 2,
        BigInt::from(n) * BigInt::from(n + 1),
    ))
}

/// Bounds `(lower, upper)` with `lower < W ≤ upper` for the value `W` of
/// [`floor_weighted_average`]:
///
/// ```text
/// upper = x·(1 − (k−1)k / (n(n+1)))
/// lower = upper − 2(n−k+1) / (n(n+1))
/// ```
///
/// They come from `y − 1 < [y] ≤ y` applied term by term.
pub fn floor_average_bounds(x: &Rational, k: u64, n: u64) -> Result<(Rational, Rational)> {
    check(x, k, n)?;
    let nn = from_int(n) * from_int(n + 1);
    let upper = x * (from_int(1) - from_int(k - 1) * from_int(k) / &nn);
    let lower = &upper - from_int(2 * (n - k + 1)) / nn;
    Ok((lower, upper))
}

fn check(x: &Rational, k: u64, n: u64) -> Result<()> {
    if x.is_negative() {
        return Err(Error::domain("x must be non-negative"));
    }
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}
