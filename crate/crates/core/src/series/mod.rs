//! Truncated power series in `x` over an exact coefficient ring.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of `x^0..=x^N`.
//! Binary operations truncate to the smaller order of their operands, so a
//! result is never claimed to be known further than its inputs are.

mod coeff;
mod solve;

use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

pub use coeff::{Coeff, MarkerPoly};
pub use solve::{solve_algebraic, solve_fixed_point, solve_fixed_point_system, AlgebraicRelation};

use crate::error::{Error, Result};

/// How the coefficients are meant to be read. Purely descriptive: the
/// `n!` factor of an exponential series is applied only on extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Egf,
    Ogf,
}

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
    convention: Convention,
}

pub type RationalSeries = TruncatedSeries<Rational>;
pub type MarkerSeries = TruncatedSeries<MarkerPoly>;

impl<C: Coeff> TruncatedSeries<C> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least the constant term");
        TruncatedSeries { coeffs, convention: Convention::Egf }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![C::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k` (zero if `k > order`).
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x`.
    pub fn var(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; zero beyond the stored order.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn set_coeff(&mut self, k: usize, c: C) {
        self.coeffs[k] = c;
    }

    /// Drops coefficients beyond `order`, or pads with zeros up to it.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs, convention: self.convention }
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect(), convention: self.convention }
    }

    pub fn map_into<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect(), convention: self.convention }
    }

    /// Substitutes 1 for every marker.
    pub fn specialize(&self) -> RationalSeries {
        self.map_into(|c| c.specialize())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|c| c.scaled(r))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from(n))
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn add_constant(&self, c: &C) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = s.coeffs[0].plus(c);
        s
    }

    pub fn add_int(&self, n: i64) -> Self {
        self.add_constant(&C::from_int(n))
    }

    /// Multiplication by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| if i >= k { self.coeffs[i - k].clone() } else { C::zero() })
            .with_convention(self.convention)
    }

    /// Exact division by `x^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::NotDivisible { shift: k, index: self.order() });
        }
        if let Some(i) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::NotDivisible { shift: k, index: i });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[k..].to_vec(), convention: self.convention })
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Derivative in `x`. One order is lost: the result has order `N - 1`.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0).with_convention(self.convention);
        }
        Self::from_fn(n - 1, |k| self.coeffs[k + 1].scaled(&Rational::from(k + 1))).with_convention(self.convention)
    }

    /// Antiderivative with the given constant term; the result has order `N + 1`.
    pub fn primitive(&self, constant: C) -> Self {
        let n = self.order() + 1;
        Self::from_fn(n, |k| if k == 0 { constant.clone() } else { self.coeffs[k - 1].scaled(&Rational::from((1, k))) })
            .with_convention(self.convention)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::DivisionByNonUnit)?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc.add_product(&self.coeffs[j], &out[k - j]);
                }
            }
            out.push(acc.times(&inv0).negated());
        }
        Ok(TruncatedSeries { coeffs: out, convention: self.convention })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm { op: "exp" });
        }
        // E' = S' E, so k e_k = sum_{j=1..k} j s_j e_{k-j}.
        let n = self.order();
        let js: Vec<C> = (0..=n).map(|j| self.coeffs[j].scaled(&Rational::from(j))).collect();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(C::one());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !js[j].is_zero() {
                    acc.add_product(&js[j], &out[k - j]);
                }
            }
            out.push(acc.scaled(&Rational::from((1, k))));
        }
        Ok(TruncatedSeries { coeffs: out, convention: self.convention })
    }

    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm { op: "log" });
        }
        // S L' = S', so k l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}.
        let n = self.order();
        let mut jl: Vec<C> = vec![C::zero(); n + 1];
        for k in 1..=n {
            let mut acc = self.coeffs[k].scaled(&Rational::from(k));
            for j in 1..k {
                if !self.coeffs[k - j].is_zero() && !jl[j].is_zero() {
                    acc = acc.minus(&jl[j].times(&self.coeffs[k - j]));
                }
            }
            jl[k] = acc;
        }
        Ok(Self::from_fn(n, |k| if k == 0 { C::zero() } else { jl[k].scaled(&Rational::from((1, k))) })
            .with_convention(self.convention))
    }

    /// `self(inner(x))`, needs `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentComposition);
        }
        let n = self.order().min(inner.order());
        Ok(horner(&self.coeffs[..=n], &inner.truncate(n)))
    }

    /// Evaluates the exact polynomial `sum poly[k] u^k` at `u = inner`; any
    /// constant term is allowed since nothing is truncated on the outside.
    pub fn compose_polynomial(poly: &[C], inner: &Self) -> Self {
        horner(poly, inner)
    }

    /// Compositional inverse of a series `x * h(x)` with `h(0)` a unit.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm { op: "revert" });
        }
        let n = self.order();
        // g = x / h(g)
        let h = self.shift_down(1)?;
        h.coeffs[0].inverse().ok_or(Error::DivisionByNonUnit)?;
        let x = Self::var(n);
        solve_fixed_point(
            |g| Ok(x.truncate(g.order()) * h.truncate(g.order()).compose(g)?.inverse()?),
            &Self::zero(n),
            n,
        )
    }

    /// Residual check helper: true when both series agree up to the smaller order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// `n! [x^n]` with markers at 1, for every `n` up to the order.
    pub fn extract_counts(&self) -> Result<Vec<Integer>> {
        let mut fact = Integer::from(1);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                fact *= n as u32;
            }
            let v = c.specialize() * Rational::from(fact.clone());
            if *v.denom() != 1 {
                return Err(Error::NonIntegerCount { n });
            }
            if v.cmp0().is_lt() {
                return Err(Error::NegativeCount { n });
            }
            out.push(v.numer().clone());
        }
        Ok(out)
    }
}

impl TruncatedSeries<MarkerPoly> {
    /// Coefficientwise derivative in the edge marker `y`.
    pub fn d_dy(&self) -> Self {
        self.map(|c| c.d_dy())
    }

    /// Coefficientwise derivative in the K5 marker `q`.
    pub fn d_dq(&self) -> Self {
        self.map(|c| c.d_dq())
    }
}

fn horner<C: Coeff>(poly: &[C], inner: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    let n = inner.order();
    let mut acc = TruncatedSeries::zero(n);
    for c in poly.iter().rev() {
        acc = (&acc * inner).add_constant(c);
    }
    acc
}

impl<C: Coeff> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        let n = self.order().min(rhs.order());
        TruncatedSeries::from_fn(n, |k| self.coeffs[k].plus(&rhs.coeffs[k])).with_convention(self.convention)
    }
}

impl<C: Coeff> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        let n = self.order().min(rhs.order());
        TruncatedSeries::from_fn(n, |k| self.coeffs[k].minus(&rhs.coeffs[k])).with_convention(self.convention)
    }
}

impl<C: Coeff> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        let n = self.order().min(rhs.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j].add_product(a, b);
                }
            }
        }
        TruncatedSeries { coeffs: out, convention: self.convention }
    }
}

impl<C: Coeff> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.map(|c| c.negated())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for TruncatedSeries<C> {
            type Output = TruncatedSeries<C>;
            fn $m(self, rhs: Self) -> TruncatedSeries<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&TruncatedSeries<C>> for TruncatedSeries<C> {
            type Output = TruncatedSeries<C>;
            fn $m(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Coeff> $tr<TruncatedSeries<C>> for &TruncatedSeries<C> {
            type Output = TruncatedSeries<C>;
            fn $m(self, rhs: TruncatedSeries<C>) -> TruncatedSeries<C> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        -&self
    }
}
