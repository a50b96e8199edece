//! The connectivity tower for K33-minor-free graphs.
//!
//! 3-connected components are planar 3-connected maps or copies of K5 (and,
//! for the K33+ class, also copies of K33 itself). Substituting networks for
//! their edges gives the network series `D`; integrating in `y` gives the
//! 2-connected series `B`; the block decomposition gives `C` and `G`.

use rug::{Integer, Rational};

use crate::class::{GraphClass, Markers};
use crate::error::{Error, Result};
use crate::series::{solve_fixed_point, solve_fixed_point_system, Coeff, MarkerPoly, TruncatedSeries};

type Series<C> = TruncatedSeries<C>;

fn r(a: i64, b: i64) -> Rational {
    Rational::from((a, b))
}

/// `(U, V)` with `U = x z (1 + V)^2` and `V = z (1 + U)^2`, for `z` a series.
pub fn solve_uv_at<C: Coeff>(z: &Series<C>) -> Result<(Series<C>, Series<C>)> {
    let n = z.order();
    let u = solve_fixed_point(
        |u| {
            let z = z.truncate(u.order());
            let v = &z * &u.add_int(1).pow(2);
            Ok((&z * &v.add_int(1).pow(2)).shift_up(1))
        },
        &Series::zero(n),
        n,
    )?;
    let v = z * &u.add_int(1).pow(2);
    Ok((u, v))
}

/// `1/(1+xz) + 1/(1+z) - 1 - (1+U)^2 (1+V)^2 / (1+U+V)^3`, so that the
/// 3-connected map series is `M = x^2 z^2` times this bracket.
fn map_bracket<C: Coeff>(z: &Series<C>, u: &Series<C>, v: &Series<C>) -> Result<Series<C>> {
    let a = z.shift_up(1).add_int(1).inverse()?;
    let b = z.add_int(1).inverse()?;
    let num = &u.add_int(1).pow(2) * &v.add_int(1).pow(2);
    let den = (u + v).add_int(1).pow(3);
    Ok(&(&a + &b).add_int(-1) - &num.div(&den)?)
}

/// Series of rooted 3-connected planar maps, `x` marking vertices and `z` edges.
pub fn m_of<C: Coeff>(z: &Series<C>) -> Result<Series<C>> {
    let (u, v) = solve_uv_at(z)?;
    Ok((&z.pow(2) * &map_bracket(z, &u, &v)?).shift_up(2))
}

/// Extra terms in the network equation on top of the planar maps: K5 for
/// both classes and K33 itself for the K33+ class. Returns the contribution
/// to `M(x, D) / (2 x^2 D)`.
fn sporadic_network_terms<C: Coeff>(class: GraphClass, q: &C, d: &Series<C>) -> Series<C> {
    // q x^3 D^9 / 6
    let mut t = d.pow(9).shift_up(3).scale(&r(1, 6)).mul_coeff(q);
    if class == GraphClass::K33Plus {
        // x^4 D^8 / 4
        t = &t + &d.pow(8).shift_up(4).scale(&r(1, 4));
    }
    t
}

/// Network series together with `U, V` composed at `z = D`.
#[derive(Debug, Clone)]
pub struct Networks<C: Coeff> {
    pub d: Series<C>,
    pub u: Series<C>,
    pub v: Series<C>,
}

/// Solves
/// `M(x,D)/(2x^2 D) + q x^3 D^9/6 - log((1+D)/(1+y)) + x D^2/(1+xD) = 0`
/// (plus `x^4 D^8 / 4` for K33+) jointly with the map system at `z = D`.
pub fn solve_d<C: Coeff>(class: GraphClass, markers: &Markers<C>, order: usize) -> Result<Networks<C>> {
    if class == GraphClass::Maximal {
        return Err(Error::Config("the maximal class has no network series".into()));
    }
    let s = markers.one_plus_y();
    let init = [Series::constant(markers.y.clone(), order), Series::zero(order)];
    let sol = solve_fixed_point_system(
        |w| {
            let (d, u) = (&w[0], &w[1]);
            // U carries a factor x, so its refreshed value is already exact
            // to the current order and must be used right away.
            let v = d * &u.add_int(1).pow(2);
            let u_next = (d * &v.add_int(1).pow(2)).shift_up(1);
            let v_next = d * &u_next.add_int(1).pow(2);
            let phi = network_phi(class, &markers.q, d, &u_next, &v_next)?;
            let d_next = phi.exp()?.mul_coeff(&s).add_int(-1);
            Ok(vec![d_next, u_next])
        },
        &init,
        order,
    )?;
    let d = sol[0].clone();
    let u = sol[1].clone();
    let v = &d * &u.add_int(1).pow(2);
    Ok(Networks { d, u, v })
}

/// `log((1+D)/(1+y))` as dictated by the network equation.
fn network_phi<C: Coeff>(class: GraphClass, q: &C, d: &Series<C>, u: &Series<C>, v: &Series<C>) -> Result<Series<C>> {
    let maps = (d * &map_bracket(d, u, v)?).scale(&r(1, 2));
    let series_edge = d.pow(2).shift_up(1).div(&d.shift_up(1).add_int(1))?;
    Ok(&(&maps + &sporadic_network_terms(class, q, d)) + &series_edge)
}

/// Residual of the network equation, for checking a computed `D`.
pub fn network_residual<C: Coeff>(class: GraphClass, markers: &Markers<C>, net: &Networks<C>) -> Result<Series<C>> {
    let (u, v) = solve_uv_at(&net.d)?;
    let phi = network_phi(class, &markers.q, &net.d, &u, &v)?;
    let lhs = net.d.add_int(1);
    let rhs = phi.exp()?.mul_coeff(&markers.one_plus_y());
    Ok(&lhs - &rhs)
}

/// Accumulates `sum P_i log(A_i)` where each `A_i(0) = (1+y)^k_i`.
///
/// Every argument is normalized by its constant term before the series log.
/// The discarded `k_i P_i log(1+y)` parts must cancel, which is checked.
struct LogSum<C: Coeff> {
    one_plus_y: C,
    total: Series<C>,
    weight: Series<C>,
}

impl<C: Coeff> LogSum<C> {
    fn new(one_plus_y: C, order: usize) -> Self {
        LogSum { one_plus_y, total: Series::zero(order), weight: Series::zero(order) }
    }

    fn add(&mut self, prefactor: &Series<C>, arg: &Series<C>, k: u32, what: &'static str) -> Result<()> {
        let mut unit = C::one();
        for _ in 0..k {
            unit = unit.times(&self.one_plus_y);
        }
        if *arg.constant_term() != unit {
            return Err(Error::BadConstantTerm { op: what });
        }
        let inv = unit.inverse().ok_or(Error::BadConstantTerm { op: what })?;
        let log = arg.mul_coeff(&inv).log()?;
        self.total = &self.total + &(prefactor * &log);
        self.weight = &self.weight + &prefactor.scale_int(k as i64);
        Ok(())
    }

    fn finish(self) -> Result<Series<C>> {
        if !self.weight.is_zero() {
            return Err(Error::BadConstantTerm { op: "log(1+y) parts do not cancel" });
        }
        Ok(self.total)
    }
}

/// `B = x^2/2 beta_1 - x/4 beta_2 + q x^5 D^10 / 120` at `z = D`,
/// `w = D (1 + U(x, D))`, plus `x^6 D^9 / 72` for K33+.
pub fn build_b<C: Coeff>(class: GraphClass, markers: &Markers<C>, net: &Networks<C>) -> Result<Series<C>> {
    let n = net.d.order();
    let z = &net.d;
    let w = z * &net.u.add_int(1);
    let x = Series::<C>::var(n);
    let one = Series::<C>::one(n);
    let c = |a: i64, b: i64| Series::<C>::constant(C::from_rational(&r(a, b)), n);
    let s = markers.one_plus_y();

    let mut logs = LogSum::new(s.clone(), n);

    // x^2 beta_1, rational part.
    let x2b1 = z.shift_up(1).scale(&r(1, 4)) * (&(&x.scale_int(6) + &z.shift_up(1)) - &c(2, 1));
    // (1+z) log((1+y)/(1+z)) = -(1+z) log((1+z)/(1+y))
    logs.add(
        &(-&z.add_int(1).shift_up(2).scale(&r(1, 2))),
        &z.add_int(1).mul_coeff(&s.inverse().expect("1+y is a unit")),
        0,
        "(1+z)/(1+y)",
    )?;
    // -x^2/2 log(1+z)
    logs.add(&x.pow(2).scale(&r(-1, 4)), &z.add_int(1), 1, "1+z")?;
    // log(1+xz) / 2
    logs.add(&c(1, 4), &z.shift_up(1).add_int(1), 0, "1+xz")?;

    // x beta_2, rational part.
    let w2 = w.pow(2);
    let num = &(&(&x.add_int(1) * &w.add_int(1)) * &(z + &w2)).scale_int(2) + &(&w - z).scale_int(3);
    let xb2 = (&x * &num).div(&w.add_int(1).pow(2).scale_int(2))?;
    // -1/2 log(1 + xz + xw + xw^2)
    logs.add(&c(1, 8), &(z + &(&w + &w2)).shift_up(1).add_int(1), 0, "1+xz+xw+xw^2")?;
    // (1-4x)/2 log(1+w)
    let one_minus_4x = &one - &x.scale_int(4);
    logs.add(&one_minus_4x.scale(&r(-1, 8)), &w.add_int(1), 1, "1+w")?;
    // (1-4x+2x^2)/4 log((1-x+xz-xw+xw^2) / ((1-x)(z+w^2+1+w)))
    let pref = (&one_minus_4x + &x.pow(2).scale_int(2)).scale(&r(-1, 16));
    let numer = (&(z - &w) + &w2).add_int(-1).shift_up(1).add_int(1);
    let denom = &(&one - &x) * &(&(z + &w2) + &w).add_int(1);
    logs.add(&pref, &numer, 0, "1-x+xz-xw+xw^2")?;
    logs.add(&(-&pref), &denom, 2, "(1-x)(z+w^2+1+w)")?;

    let mut b = &(&x2b1.scale(&r(1, 2)) - &xb2.scale(&r(1, 4))) + &logs.finish()?;
    b = &b + &z.pow(10).shift_up(5).scale(&r(1, 120)).mul_coeff(&markers.q);
    if class == GraphClass::K33Plus {
        b = &b + &z.pow(9).shift_up(6).scale(&r(1, 72));
    }
    Ok(b)
}

/// `dB/dy - x^2 (1 + D) / (2 (1 + y))`, which vanishes identically.
pub fn b_derivative_residual(
    markers: &Markers<MarkerPoly>,
    net: &Networks<MarkerPoly>,
    b: &Series<MarkerPoly>,
) -> Result<Series<MarkerPoly>> {
    let inv = markers.one_plus_y().inverse().ok_or(Error::DivisionByNonUnit)?;
    let rhs = net.d.add_int(1).mul_coeff(&inv).shift_up(2).scale(&r(1, 2));
    Ok(&b.d_dy() - &rhs)
}

/// `C^\bullet = x exp(B_x(C^\bullet))`, then `C` and `G = exp(C)`.
pub fn build_cg<C: Coeff>(b: &Series<C>) -> Result<(Series<C>, Series<C>, Series<C>)> {
    let n = b.order();
    let bx = b.derivative();
    let cdot = solve_fixed_point(
        |c| {
            let k = c.order();
            Ok(bx.truncate(k).compose(c)?.exp()?.shift_up(1))
        },
        &Series::zero(n),
        n,
    )?;
    let c = Series::from_fn(n, |k| if k == 0 { C::zero() } else { cdot.coeff(k).scaled(&r(1, k as i64)) });
    let g = c.exp()?;
    Ok((cdot, c, g))
}

/// Every series of the tower for one class and one choice of markers.
#[derive(Debug, Clone)]
pub struct MinorFreeTower<C: Coeff> {
    pub class: GraphClass,
    pub order: usize,
    pub markers: Markers<C>,
    pub networks: Networks<C>,
    pub b: Series<C>,
    pub cdot: Series<C>,
    pub c: Series<C>,
    pub g: Series<C>,
}

impl<C: Coeff> MinorFreeTower<C> {
    pub fn build(class: GraphClass, markers: Markers<C>, order: usize) -> Result<Self> {
        let networks = solve_d(class, &markers, order)?;
        let b = build_b(class, &markers, &networks)?;
        let (cdot, c, g) = build_cg(&b)?;
        Ok(MinorFreeTower { class, order, markers, networks, b, cdot, c, g })
    }

    pub fn d(&self) -> &Series<C> {
        &self.networks.d
    }

    pub fn biconnected_counts(&self) -> Result<Vec<Integer>> {
        self.b.extract_counts()
    }

    pub fn connected_counts(&self) -> Result<Vec<Integer>> {
        self.c.extract_counts()
    }

    pub fn all_counts(&self) -> Result<Vec<Integer>> {
        self.g.extract_counts()
    }
}
