use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::int;

/// Coefficients `β_1..β_n` of the Abel formal group law
/// `x + y + β_1 xy + Σ_{m≥2} β_m (x y^m + x^m y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelCoefficients {
    #[serde(serialize_with = "ser_rational")]
    pub a: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub b: BigRational,
    #[serde(serialize_with = "ser_rationals")]
    pub betas: Vec<BigRational>,
}

impl AbelCoefficients {
    /// `β_m` for `1 <= m <= n`.
    pub fn beta(&self, m: usize) -> Option<&BigRational> {
        m.checked_sub(1).and_then(|i| self.betas.get(i))
    }
}

/// `β_1 = a + b` and, for `m > 1`,
/// `β_m = (-1)^{m-1} / (m! (m-1)) · Π_{i+j=m-1} (i a + j b)`.
pub fn abel_group_coefficients(a: &BigRational, b: &BigRational, n: usize) -> AbelCoefficients {
    let mut betas = Vec::with_capacity(n);
    for m in 1..=n {
        if m == 1 {
            betas.push(a + b);
            continue;
        }
        let mut product = BigRational::one();
        for i in 0..m {
            let j = m - 1 - i;
            product *= int(i as i64) * a + int(j as i64) * b;
        }
        let factorial = (1..=m as i64).fold(BigRational::one(), |acc, k| acc * int(k));
        let mut beta = product / (factorial * int(m as i64 - 1));
        if m % 2 == 0 {
            beta = -beta;
        }
        betas.push(beta);
    }
    AbelCoefficients { a: a.clone(), b: b.clone(), betas }
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&super::fraction_string(r))
}

fn ser_rationals<S: serde::Serializer>(rs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(super::fraction_string))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn first_coefficient_is_sum() {
        let c = abel_group_coefficients(&int(1), &int(0), 1);
        assert_eq!(c.betas, vec![int(1)]);
        let c = abel_group_coefficients(&q(2, 3), &q(-5, 7), 1);
        assert_eq!(c.beta(1), Some(&(q(2, 3) + q(-5, 7))));
    }

    #[test]
    fn product_formula_small_cases() {
        // m = 2: -(1/2)(0a + 1b)(1a + 0b) = -ab/2
        let c = abel_group_coefficients(&int(1), &int(1), 2);
        assert_eq!(c.beta(2), Some(&q(-1, 2)));
        // m = 3 at (a, b) = (3, -2): (1/12)(0a+2b)(a+b)(2a+0b) = (1/12)(-4)(1)(6) = -2
        let c = abel_group_coefficients(&int(3), &int(-2), 3);
        assert_eq!(c.beta(3), Some(&int(-2)));
    }
}
