//! Exact series for the group functions `G` used by the named entropy families.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{int, TruncatedSeries};

fn factorial(n: usize) -> BigRational {
    (1..=n as i64).fold(BigRational::one(), |acc, k| acc * int(k))
}

/// `G(t) = t`.
pub fn identity_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::identity(order)
}

/// `G(t) = (e^{(1-q)t} - 1)/(1-q)`; the coefficient of `t^n` is `(1-q)^{n-1}/n!`.
pub fn tsallis_series(q: &BigRational, order: usize) -> TruncatedSeries {
    let c = BigRational::one() - q;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut c_pow = BigRational::one();
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        *slot = &c_pow / factorial(n);
        c_pow *= &c;
    }
    TruncatedSeries::new(coeffs)
}

/// `G(t) = sinh(kt)/k`; only odd powers, `t^{2m+1}` carrying `k^{2m}/(2m+1)!`.
pub fn kaniadakis_series(k: &BigRational, order: usize) -> TruncatedSeries {
    let k2 = k * k;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut k_pow = BigRational::one();
    for n in (1..=order).step_by(2) {
        coeffs[n] = &k_pow / factorial(n);
        k_pow *= &k2;
    }
    TruncatedSeries::new(coeffs)
}

/// Abel exponential `G(t) = (e^{at} - e^{bt})/(a - b)`.
///
/// The coefficient of `t^n` is `h_{n-1}(a, b)/n!` with `h_d = Σ_{i+j=d} a^i b^j`,
/// which stays well defined at `a = b`.
pub fn abel_series(a: &BigRational, b: &BigRational, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let d = n - 1;
        let mut h = BigRational::zero();
        for i in 0..=d {
            h += num_traits::pow(a.clone(), i) * num_traits::pow(b.clone(), d - i);
        }
        *slot = h / factorial(n);
    }
    TruncatedSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn normalization_holds_for_every_family() {
        for g in [
            identity_series(6),
            tsallis_series(&q(1, 3), 6),
            kaniadakis_series(&q(1, 2), 6),
            abel_series(&q(3, 2), &q(-1, 4), 6),
        ] {
            assert!(g.coeff(0).is_zero());
            assert!(g.coeff(1).is_one());
        }
    }

    #[test]
    fn abel_with_opposite_parameters_is_kaniadakis() {
        let k = q(2, 5);
        assert_eq!(abel_series(&k, &-k.clone(), 9), kaniadakis_series(&k, 9));
    }

    #[test]
    fn abel_with_b_zero_is_tsallis_shape() {
        // (e^{at} - 1)/a is the multiplicative law's G with 1 - q = a.
        let a = q(3, 4);
        assert_eq!(abel_series(&a, &BigRational::zero(), 7), tsallis_series(&(int(1) - &a), 7));
    }

    #[test]
    fn tsallis_inverse_is_log_series() {
        // G^{-1}(s) = ln(1 + c s)/c = s - c s^2/2 + c^2 s^3/3 - ...
        let c = q(1, 2);
        let g = tsallis_series(&(int(1) - &c), 5);
        let inv = g.reversion().unwrap();
        for n in 1..=5usize {
            let sign = if n % 2 == 1 { int(1) } else { int(-1) };
            let expected = sign * num_traits::pow(c.clone(), n - 1) / int(n as i64);
            assert_eq!(inv.coeff(n), expected);
        }
    }
}
