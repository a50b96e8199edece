//! Maximal K33-minor-free graphs.
//!
//! These are strict 2-sums of planar triangulations and copies of K5. Rooted
//! triangulations enter through Tutte's algebraic series `theta`; the
//! edge-rooted series `F` and `H` solve a small system, and the unrooted
//! series `A` has a closed form in terms of `F`, `H` and `L`.

use std::collections::BTreeMap;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::series::{
    solve_algebraic, solve_fixed_point_system, AlgebraicRelation, Coeff, Convention, MarkerPoly, MarkerSeries,
    RationalSeries, TruncatedSeries,
};

/// `theta` with `theta (1 - theta)^3 = x`.
pub fn theta(order: usize) -> Result<RationalSeries> {
    let r = |n: i64| Rational::from(n);
    let p = AlgebraicRelation::polynomial_equals(&[r(0), r(1), r(-3), r(3), r(-1)], &RationalSeries::var(order));
    solve_algebraic(&p, Rational::new(), order)
}

/// `theta` and the ordinary series `t = x^2 theta (1 - 2 theta)` of rooted
/// triangulations by vertices.
pub fn build_theta_and_t(order: usize) -> Result<(RationalSeries, RationalSeries)> {
    if order < 3 {
        return Err(Error::Config(format!("triangulation series need order >= 3, got {order}")));
    }
    let th = theta(order)?;
    let one_minus_2th = (-&th.scale_int(2)).add_int(1);
    let t = (&th * &one_minus_2th).shift_up(2).with_convention(Convention::Ogf);
    Ok((th, t))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationCount {
    pub n: usize,
    /// Rooted, unlabelled.
    pub rooted: Integer,
    /// Labelled.
    pub labelled: Integer,
}

/// Labelled triangulation counts from the rooted ones: a triangulation on
/// `n >= 4` vertices has `3n - 6` edges and each can be rooted in 4 ways.
pub fn triangulation_counts(order: usize) -> Result<Vec<TriangulationCount>> {
    let (_, t) = build_theta_and_t(order)?;
    let mut out = Vec::new();
    let mut fact = Integer::from(6);
    for n in 3..=order {
        if n > 3 {
            fact *= n as u32;
        }
        let tn = t.coeff(n);
        if *tn.denom() != 1 {
            return Err(Error::NonIntegerCount { n });
        }
        let rooted = tn.numer().clone();
        let labelled = if n == 3 {
            rooted.clone()
        } else {
            let num = Integer::from(&rooted * &fact);
            let den = Integer::from(4 * (3 * n - 6));
            if !num.is_divisible(&den) {
                return Err(Error::NonIntegerCount { n });
            }
            num / den
        };
        out.push(TriangulationCount { n, rooted, labelled });
    }
    Ok(out)
}

fn lift<C: Coeff>(s: &RationalSeries) -> TruncatedSeries<C> {
    s.map_into(C::from_rational)
}

/// `T0(x, u) = u^3 x / 2 + L (1 - 2L) / 2` with `L = theta(x u^3)`.
pub fn t0_of<C: Coeff>(theta: &RationalSeries, u: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    let n = u.order();
    let xu3 = u.pow(3).shift_up(1);
    let l = lift::<C>(&theta.truncate(n)).compose(&xu3)?;
    let half = Rational::from((1, 2));
    Ok(&xu3.scale(&half) + &(&l * &(-&l.scale_int(2)).add_int(1)).scale(&half))
}

/// `H` as a polynomial in `L`: `(-L^4 + 3L^3 - 5L^2 + 2L) / 2`.
pub fn h_from_l<C: Coeff>(l: &TruncatedSeries<C>) -> TruncatedSeries<C> {
    let c = |a: i64, b: i64| C::from_rational(&Rational::from((a, b)));
    TruncatedSeries::compose_polynomial(&[c(0, 1), c(1, 1), c(-5, 2), c(3, 2), c(-1, 2)], l)
}

/// The edge-rooted system together with the unrooted series `A`.
#[derive(Debug, Clone)]
pub struct MaximalPipeline<C: Coeff> {
    pub order: usize,
    pub y: C,
    pub theta: RationalSeries,
    pub t_series: RationalSeries,
    /// `F / y`.
    pub e: TruncatedSeries<C>,
    pub f: TruncatedSeries<C>,
    pub h: TruncatedSeries<C>,
    /// `theta(x F^3)`.
    pub l: TruncatedSeries<C>,
    pub a: TruncatedSeries<C>,
}

impl<C: Coeff> MaximalPipeline<C> {
    pub fn build(y: &C, order: usize) -> Result<Self> {
        let (theta, t_series) = build_theta_and_t(order.max(3))?;
        let (e, l) = solve_fh(y, order)?;
        let f = e.mul_coeff(y);
        let h = h_from_l(&l);
        let a = build_a(&e, &f, &h, &l)?;
        Ok(MaximalPipeline { order, y: y.clone(), theta, t_series, e, f, h, l, a })
    }

    /// `m_n = n! [x^n] A` at `y = 1`.
    pub fn counts(&self) -> Result<Vec<Integer>> {
        self.a.extract_counts()
    }
}

/// Solves for `E = F / y` and `L = theta(x F^3)`.
///
/// `E = exp(x^3 / 6 (H + yE)^9)` with `H = (-L^4 + 3L^3 - 5L^2 + 2L) / 2`, and
/// `L = x F^3 / (1 - L)^3`. Both right-hand sides carry a factor `x`, so every
/// pass fixes one more coefficient of each.
pub fn solve_fh<C: Coeff>(y: &C, order: usize) -> Result<(TruncatedSeries<C>, TruncatedSeries<C>)> {
    let sixth = Rational::from((1, 6));
    let init = [TruncatedSeries::one(order), TruncatedSeries::zero(order)];
    let mut sol = solve_fixed_point_system(
        |v| {
            let (e, l) = (&v[0], &v[1]);
            let f = e.mul_coeff(y);
            let h = h_from_l(l);
            let e_next = (&h + &f).pow(9).shift_up(3).scale(&sixth).exp()?;
            let l_next = (f.pow(3).shift_up(1)).div(&(-l).add_int(1).pow(3))?;
            Ok(vec![e_next, l_next])
        },
        &init,
        order,
    )?;
    let l = sol.pop().expect("two components");
    let e = sol.pop().expect("two components");
    Ok((e, l))
}

/// `A = -x^2/60 (27 (H + F) log(F/y) + 10L + 20L^2 + 15 log(1 - L) - 30F - 5x F^3)`.
pub fn build_a<C: Coeff>(
    e: &TruncatedSeries<C>,
    f: &TruncatedSeries<C>,
    h: &TruncatedSeries<C>,
    l: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>> {
    let log_e = e.log().map_err(|_| Error::BadConstantTerm { op: "log(F/y)" })?;
    let log_1ml = (-l).add_int(1).log()?;
    let inner = &(&(&(h + f) * &log_e).scale_int(27) + &l.scale_int(10))
        + &(&(&l.pow(2).scale_int(20) + &log_1ml.scale_int(15))
            - &(&f.scale_int(30) + &f.pow(3).shift_up(1).scale_int(5)));
    Ok(inner.shift_up(2).scale(&Rational::from((-1, 60))))
}

/// `psi(u) = u exp(-x^3/6 (u + T0(x, u))^9)`, the functional inverse of `F`
/// in the variable `y`.
pub fn psi<C: Coeff>(theta: &RationalSeries, u: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    let t0 = t0_of(theta, u)?;
    let expo = (u + &t0).pow(9).shift_up(3).scale(&Rational::from((-1, 6)));
    Ok(u * &expo.exp()?)
}

/// Residuals of the algebraic identities that hold along the maximal
/// pipeline. All of them are zero series when the pipeline is right.
#[derive(Debug, Clone)]
pub struct MaximalIdentities {
    /// `(2 / x^2) y dA/dy - (H + F)`.
    pub rooting: MarkerSeries,
    /// `H - T0(x, F)`.
    pub h_is_t0: MarkerSeries,
    /// `H - (-L^4 + 3L^3 - 5L^2 + 2L) / 2` with `L` recomputed from `theta`.
    pub h_from_l: MarkerSeries,
    /// `dT0/du - (3u^2 x / 2)(1 + 1/(1-L)^2)` at a symbolic `u`.
    pub t0_derivative: MarkerSeries,
    /// `psi(F) - y`.
    pub psi_inverse: MarkerSeries,
    /// Whether `lambda (1 - lambda)^3 = x xi^3` holds identically.
    pub parametrization: bool,
}

impl MaximalIdentities {
    pub fn all_zero(&self) -> bool {
        self.parametrization
            && [&self.rooting, &self.h_is_t0, &self.h_from_l, &self.t0_derivative, &self.psi_inverse]
                .iter()
                .all(|s| s.is_zero())
    }

    pub fn compute(order: usize) -> Result<Self> {
        let y = MarkerPoly::y();
        let p = MaximalPipeline::build(&y, order)?;
        let yser = MarkerSeries::constant(y.clone(), order);

        let lhs = p.a.d_dy().mul_coeff(&y).scale_int(2).shift_down(2)?;
        let rooting = &lhs - &(&p.h + &p.f);

        let h_is_t0 = &p.h - &t0_of(&p.theta, &p.f)?;

        let l_again = lift::<MarkerPoly>(&p.theta).compose(&p.f.pow(3).shift_up(1))?;
        let h_from_l = &p.h - &h_from_l(&l_again);

        // T0 at u = y, differentiated coefficientwise in y.
        let t0 = t0_of(&p.theta, &yser)?;
        let lu = lift::<MarkerPoly>(&p.theta).compose(&yser.pow(3).shift_up(1))?;
        let one_minus_l_sq_inv = (-&lu).add_int(1).pow(2).inverse()?;
        let rhs = (yser.pow(2).shift_up(1).scale(&Rational::from((3, 2)))) * one_minus_l_sq_inv.add_int(1);
        let t0_derivative = &t0.d_dy() - &rhs;

        let psi_inverse = &psi(&p.theta, &p.f)? - &yser;

        Ok(MaximalIdentities {
            rooting,
            h_is_t0,
            h_from_l,
            t0_derivative,
            psi_inverse,
            parametrization: parametrization_holds(),
        })
    }
}

/// Laurent polynomials in `(t, x)`, just enough to check the parametrization.
type Laurent = BTreeMap<(i32, i32), Rational>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&(i, j), c) in a {
        for (&(k, l), d) in b {
            *out.entry((i + k, j + l)).or_default() += Rational::from(c * d);
        }
    }
    out.retain(|_, c| c.cmp0().is_ne());
    out
}

fn laurent_add(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = a.clone();
    for (&k, c) in b {
        *out.entry(k).or_default() += c;
    }
    out.retain(|_, c| c.cmp0().is_ne());
    out
}

/// `lambda(t) = -t^3/x^2` and `xi(t) = -(t^4 + x^2 t)/x^3` satisfy
/// `lambda (1 - lambda)^3 = x xi^3` identically.
pub fn parametrization_holds() -> bool {
    let mono = |c: i64, t: i32, x: i32| Laurent::from([((t, x), Rational::from(c))]);
    let lambda = mono(-1, 3, -2);
    let xi = laurent_add(&mono(-1, 4, -3), &mono(-1, 1, -1));
    let one_minus = laurent_add(&mono(1, 0, 0), &laurent_mul(&mono(-1, 0, 0), &lambda));
    let lhs = laurent_mul(&lambda, &laurent_mul(&one_minus, &laurent_mul(&one_minus, &one_minus)));
    let rhs = laurent_mul(&mono(1, 0, 1), &laurent_mul(&xi, &laurent_mul(&xi, &xi)));
    lhs == rhs
}
