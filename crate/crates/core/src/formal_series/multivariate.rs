//! Bivariate group laws and their axiom checks.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::TruncatedSeries;
use crate::error::Result;

/// Polynomial in `N` variables truncated at a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly<const N: usize> {
    terms: BTreeMap<[u32; N], BigRational>,
    order: u32,
}

impl<const N: usize> Poly<N> {
    fn zero(order: u32) -> Self {
        Poly { terms: BTreeMap::new(), order }
    }

    fn constant(c: BigRational, order: u32) -> Self {
        let mut p = Self::zero(order);
        p.insert([0; N], c);
        p
    }

    fn var(i: usize, order: u32) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        let mut p = Self::zero(order);
        if order >= 1 {
            p.insert(e, BigRational::one());
        }
        p
    }

    fn insert(&mut self, e: [u32; N], c: BigRational) {
        if c.is_zero() || e.iter().sum::<u32>() > self.order {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn coeff(&self, e: &[u32; N]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = Poly { terms: self.terms.clone(), order: self.order.min(other.order) };
        out.terms.retain(|e, _| e.iter().sum::<u32>() <= out.order);
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order.min(other.order));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = [0; N];
                for k in 0..N {
                    e[k] = ea[k] + eb[k];
                }
                out.insert(e, ca * cb);
            }
        }
        out
    }

    /// `f(self)` for a univariate series `f`; requires a zero constant term in `self`.
    fn substitute_into(&self, f: &TruncatedSeries) -> Self {
        let order = self.order.min(f.order() as u32);
        let mut acc = Self::constant(f.coeff(order as usize), order);
        for k in (0..order as usize).rev() {
            acc = acc.mul(self);
            acc.insert([0; N], f.coeff(k));
        }
        acc
    }

    /// Keys sorted by total degree, then by decreasing exponents (x-major).
    fn graded_keys(&self, other: &Self) -> Vec<[u32; N]> {
        let mut keys: Vec<_> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(*e)));
        keys.dedup();
        keys
    }

    /// First monomial (graded order) where the two polynomials differ.
    fn first_difference(&self, other: &Self) -> Option<[u32; N]> {
        self.graded_keys(other).into_iter().find(|e| self.coeff(e) != other.coeff(e))
    }
}

/// `Ψ(x, y) = Σ c_{ij} x^i y^j` truncated at total degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateTruncatedSeries {
    poly: Poly<2>,
}

impl BivariateTruncatedSeries {
    pub fn zero(order: u32) -> Self {
        BivariateTruncatedSeries { poly: Poly::zero(order) }
    }

    /// Builds from `(i, j, c)` triples; terms with `i + j > order` are dropped.
    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (u32, u32, BigRational)>) -> Self {
        let mut poly = Poly::zero(order);
        for (i, j, c) in terms {
            poly.insert([i, j], c);
        }
        BivariateTruncatedSeries { poly }
    }

    /// The additive law `x + y`.
    pub fn additive(order: u32) -> Self {
        BivariateTruncatedSeries { poly: Poly::var(0, order).add(&Poly::var(1, order)) }
    }

    pub fn order(&self) -> u32 {
        self.poly.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.poly.coeff(&[i, j])
    }

    /// Nonzero coefficients as `((i, j), c)` in graded order.
    pub fn terms(&self) -> Vec<((u32, u32), BigRational)> {
        let mut out: Vec<_> = self.poly.terms.iter().map(|(e, c)| ((e[0], e[1]), c.clone())).collect();
        out.sort_by_key(|((i, j), _)| (i + j, std::cmp::Reverse(*i)));
        out
    }

    /// Every coefficient with `i + j <= order`, zeros included, in graded order.
    pub fn dense_terms(&self) -> Vec<((u32, u32), BigRational)> {
        let n = self.order();
        let mut out = Vec::new();
        for d in 0..=n {
            for i in (0..=d).rev() {
                out.push(((i, d - i), self.coeff(i, d - i)));
            }
        }
        out
    }

    fn lift(&self, x: &Poly<3>, y: &Poly<3>) -> Poly<3> {
        let order = self.poly.order.min(x.order).min(y.order);
        let mut x_pows = vec![Poly::constant(BigRational::one(), order)];
        let mut y_pows = vec![Poly::constant(BigRational::one(), order)];
        for _ in 0..order {
            x_pows.push(x_pows.last().unwrap().mul(x));
            y_pows.push(y_pows.last().unwrap().mul(y));
        }
        let mut acc = Poly::zero(order);
        for (e, c) in &self.poly.terms {
            let term = x_pows[e[0] as usize].mul(&y_pows[e[1] as usize]);
            acc = acc.add(&Poly::constant(c.clone(), order).mul(&term));
        }
        acc
    }
}

/// Lazard construction `Ψ(x, y) = G(G⁻¹(x) + G⁻¹(y))`, truncated at total degree `order`
/// (and never beyond the order of `g`).
pub fn group_law_from_g(g: &TruncatedSeries, order: u32) -> Result<BivariateTruncatedSeries> {
    let g_inv = g.reversion()?;
    let order = order.min(g.order() as u32);
    let x: Poly<2> = Poly::var(0, order).substitute_into(&g_inv);
    let y: Poly<2> = Poly::var(1, order).substitute_into(&g_inv);
    let psi = x.add(&y).substitute_into(g);
    Ok(BivariateTruncatedSeries { poly: psi })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub holds: bool,
    /// Exponents of the first (graded order) coefficient that breaks the axiom.
    pub first_failure: Option<Vec<u32>>,
}

impl AxiomCheck {
    fn from_failure<const N: usize>(failure: Option<[u32; N]>) -> Self {
        AxiomCheck { holds: failure.is_none(), first_failure: failure.map(|e| e.to_vec()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub identity: AxiomCheck,
    pub commutativity: AxiomCheck,
    pub associativity: AxiomCheck,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.identity.holds && self.commutativity.holds && self.associativity.holds
    }
}

/// Coefficient-wise check of `Ψ(x,0) = Ψ(0,x) = x`, `Ψ(x,y) = Ψ(y,x)` and
/// `Ψ(Ψ(x,y),z) = Ψ(x,Ψ(y,z))` up to the truncation order.
pub fn verify_group_axioms(psi: &BivariateTruncatedSeries) -> AxiomReport {
    let n = psi.order();
    let p = &psi.poly;

    let identity = (0..=n).flat_map(|d| [[d, 0], [0, d]]).find(|e| {
        let expected = if e[0] + e[1] == 1 { BigRational::one() } else { BigRational::zero() };
        p.coeff(e) != expected
    });

    let swapped = Poly { terms: p.terms.iter().map(|(e, c)| ([e[1], e[0]], c.clone())).collect(), order: n };
    let commutativity = p.first_difference(&swapped);

    let x = Poly::<3>::var(0, n);
    let y = Poly::<3>::var(1, n);
    let z = Poly::<3>::var(2, n);
    let left = psi.lift(&psi.lift(&x, &y), &z);
    let right = psi.lift(&x, &psi.lift(&y, &z));
    let associativity = left.first_difference(&right);

    AxiomReport {
        identity: AxiomCheck::from_failure(identity),
        commutativity: AxiomCheck::from_failure(commutativity),
        associativity: AxiomCheck::from_failure(associativity),
    }
}
