//! Exact truncated formal power series over the rationals.
//!
//! Everything here works with [`BigRational`] coefficients so that identities
//! between coefficients (reversion round trips, group-law axioms) are checked
//! with zero tolerance. A series carries its own truncation order and binary
//! operations truncate to the smaller of the two orders.

mod abel;
mod families;
mod multivariate;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use abel::{abel_group_coefficients, AbelCoefficients};
pub use families::{abel_series, identity_series, kaniadakis_series, tsallis_series};
pub use multivariate::{group_law_from_g, verify_group_axioms, AxiomCheck, AxiomReport, BivariateTruncatedSeries};

/// Univariate power series `c_0 + c_1 s + ... + c_n s^n + O(s^{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Builds a series from `c_0..c_n`; the order is `coeffs.len() - 1`.
    /// An empty vector is read as the zero series of order 0.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order + 1])
    }

    /// The series `s`, truncated at `order` (which must be at least 1 to be meaningful).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[1] = BigRational::one();
        s
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `s^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigRational::zero());
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `F(s) = sum_{i=0}^{order-1} b_i s^{i+1}/(i+1)` with `b_0 = 1`.
    ///
    /// Missing `b_i` are taken as zero; entries beyond `order - 1` are ignored.
    pub fn from_b_sequence(b: &[BigRational], order: usize) -> Result<Self> {
        match b.first() {
            Some(b0) if b0.is_one() => {}
            Some(b0) => {
                return Err(Error::InvalidNormalization(format!("b_0 must be 1, got {b0}")));
            }
            None => return Err(Error::InvalidNormalization("empty b sequence".into())),
        }
        if order < 1 {
            return Err(Error::InvalidNormalization("order must be at least 1".into()));
        }
        let mut series = Self::zero(order);
        for (i, bi) in b.iter().enumerate().take(order) {
            series.coeffs[i + 1] = bi / int(i as i64 + 1);
        }
        Ok(series)
    }

    /// The normalized sequence `a_k` such that `c_{k+1} = a_k / (k+1)`.
    ///
    /// This is the inverse of [`TruncatedSeries::from_b_sequence`]: applied to
    /// `F` it returns the `b_i`, applied to `G` the `a_k`.
    pub fn normalized_coefficients(&self) -> Vec<BigRational> {
        self.coeffs[1..].iter().enumerate().map(|(k, c)| c * int(k as i64 + 1)).collect()
    }

    fn check_unit_normalized(&self) -> Result<()> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonInvertible(format!("c_0 = {} (expected 0)", self.coeff(0))));
        }
        if !self.coeff(1).is_one() {
            return Err(Error::NonInvertible(format!("c_1 = {} (expected 1)", self.coeff(1))));
        }
        Ok(())
    }

    /// Multiplicative inverse of a series with `c_0 = 1`.
    fn unit_inverse(&self) -> Self {
        debug_assert!(self.coeffs[0].is_one());
        let n = self.order();
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc;
        }
        Self::new(inv)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(BigRational::one(), self.order());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self ∘ inner`, i.e. `self(inner(s))`.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::CompositionDomain);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeff(order), order);
        for k in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += self.coeff(k);
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion.
    ///
    /// Writing `f(s) = s·u(s)` with `u(0) = 1`, the inverse has
    /// `[t^n] g = (1/n) [s^{n-1}] u(s)^{-n}`.
    pub fn reversion(&self) -> Result<Self> {
        self.check_unit_normalized()?;
        let n = self.order();
        // u(s) = f(s)/s, of order n-1
        let u = Self::new(self.coeffs[1..].to_vec());
        let h = u.unit_inverse();
        let mut g = Self::zero(n);
        let mut h_pow = Self::constant(BigRational::one(), n - 1);
        for k in 1..=n {
            h_pow = &h_pow * &h;
            g.coeffs[k] = h_pow.coeff(k - 1) / int(k as i64);
        }
        Ok(g)
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| if k == 1 { c.is_one() } else { c.is_zero() })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new((0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new((0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect())
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries::new(out)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let c = c.abs();
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*s")?,
                _ => write!(f, "{c}*s^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(s^{})", self.order() + 1)
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational from `"p/q"`, an integer, or a plain/scientific decimal (`"0.25"`, `"-1.5e-3"`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parameter(format!("not a rational number: {text:?}"));
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}0").parse().map_err(|_| bad())?;
    let digits = digits / BigInt::from(10);
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Always `"p/q"`, including integers (`"-1/1"`).
pub fn fraction_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn b_sequence_identity_case() {
        let f = TruncatedSeries::from_b_sequence(&[int(1)], 1).unwrap();
        assert!(f.is_identity());
    }

    #[test]
    fn b_sequence_termwise() {
        let f = TruncatedSeries::from_b_sequence(&[int(1), q(3, 5), q(-2, 7)], 3).unwrap();
        assert_eq!(f.coeffs(), &[int(0), int(1), q(3, 10), q(-2, 21)]);
        let f = TruncatedSeries::from_b_sequence(&[int(1), int(2)], 2).unwrap();
        assert_eq!(f, TruncatedSeries::from_integers(&[0, 1, 1]));
        assert_eq!(f.normalized_coefficients(), vec![int(1), int(2)]);
    }

    #[test]
    fn b_sequence_rejects_bad_leading_term() {
        let err = TruncatedSeries::from_b_sequence(&[int(2)], 2).unwrap_err();
        assert!(matches!(err, Error::InvalidNormalization(_)));
    }

    #[test]
    fn reversion_of_s_plus_s2() {
        let f = TruncatedSeries::from_integers(&[0, 1, 1, 0, 0]);
        let g = f.reversion().unwrap();
        // Catalan numbers with alternating sign
        assert_eq!(g, TruncatedSeries::from_integers(&[0, 1, -1, 2, -5]));
        assert!(f.compose(&g).unwrap().is_identity());
    }

    #[test]
    fn reversion_rejects_unnormalized() {
        let f = TruncatedSeries::from_integers(&[0, 2, 1]);
        assert!(matches!(f.reversion(), Err(Error::NonInvertible(_))));
        let f = TruncatedSeries::from_integers(&[1, 1, 1]);
        assert!(matches!(f.reversion(), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn compose_examples() {
        let g = TruncatedSeries::from_integers(&[0, 3, -1, 4]);
        assert_eq!(TruncatedSeries::identity(3).compose(&g).unwrap(), g);
        let f = TruncatedSeries::from_integers(&[0, 0, 1]);
        let g = TruncatedSeries::from_integers(&[0, 2, 0]);
        assert_eq!(f.compose(&g).unwrap(), TruncatedSeries::from_integers(&[0, 0, 4]));
        let g = TruncatedSeries::from_integers(&[1, 1, 0]);
        assert_eq!(f.compose(&g), Err(Error::CompositionDomain));
    }

    #[test]
    fn arithmetic_truncates_to_min_order() {
        let a = TruncatedSeries::from_integers(&[1, 1, 1, 1]);
        let b = TruncatedSeries::from_integers(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(&a - &a, TruncatedSeries::zero(3));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-0.25").unwrap(), q(-1, 4));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational("1.5e-1").unwrap(), q(3, 20));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(fraction_string(&int(-1)), "-1/1");
    }
}
