//! Singular expansions of the K33 and K33+ towers.
//!
//! Two routes lead to the coefficients `B_0..B_5` of the 2-connected series
//! at its singularity `R`:
//!
//! * [`Route::Expansion`] solves the network equations in `(x, D, V)` as
//!   local expansions in `U - U_0`, inverts the square-root branch point and
//!   substitutes the result into the formula for `B`. It works for every class
//!   and every value of `q`.
//! * [`Route::ClosedForm`] evaluates the closed forms of [`super::closed_form`],
//!   which exist for K33 only and whose `B_i` assume `q = 1`.
//!
//! Both locate the branch point through the same parametrization by `t`.

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use super::closed_form::{self, ClosedFormValues};
use super::{bracketed_root, expand_solution, int, invert_critical, ratio, transfer_alpha, Jet, JET_LEN};
use crate::class::GraphClass;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    #[default]
    Expansion,
    ClosedForm,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Expansion => "expansion",
            Route::ClosedForm => "closed-form",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "expansion" | "jet" => Ok(Route::Expansion),
            "closed-form" | "closed_form" => Ok(Route::ClosedForm),
            other => Err(Error::Config(format!("unknown route `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TowerSingularData {
    pub class: GraphClass,
    pub route: Route,
    pub precision: u32,
    pub y: Float,
    pub q: Float,
    pub t_star: Float,
    /// Singularity of the 2-connected series, `zeta(t_star)`.
    pub r: Float,
    /// Linear coefficient of `x` along the solution curve; zero at a genuine branch point.
    pub x1: Float,
    pub u: [Float; 3],
    pub d: [Float; 4],
    pub b: [Float; 6],
    pub c: [Float; 6],
    pub g: [Float; 6],
    /// Singularity of the connected and general series.
    pub rho: Float,
    /// The closed forms at `t_star` (K33 only).
    pub closed_form: Option<ClosedFormValues>,
}

impl TowerSingularData {
    pub fn rho_inv(&self) -> Float {
        Float::with_val(self.precision, self.rho.recip_ref())
    }

    pub fn r_inv(&self) -> Float {
        Float::with_val(self.precision, self.r.recip_ref())
    }

    pub fn alpha_b(&self) -> Float {
        transfer_alpha(&self.b[5])
    }

    pub fn alpha_c(&self) -> Float {
        transfer_alpha(&self.c[5])
    }

    pub fn alpha_g(&self) -> Float {
        transfer_alpha(&self.g[5])
    }
}

/// The values of `x`, `D`, `U` and `V` at the branch point, as functions of `t`.
struct Parametrized {
    x: Jet,
    d: Jet,
    u: Jet,
    v: Jet,
}

fn parametrize(t: &Jet) -> Parametrized {
    let u = t.mul_i(3).recip();
    let d = (-&t.powi(2).mul_i(3)).div(&(&t.mul_i(3).add_i(1) * &t.add_i(-1)));
    let v = &d * &u.add_i(1).powi(2);
    Parametrized { x: closed_form::zeta(t), d, u, v }
}

/// `x^2 z^2 / M`, where `M` is the series of 3-connected maps.
fn map_bracket(x: &Jet, z: &Jet, u: &Jet, v: &Jet) -> Jet {
    let a = (x * z).add_i(1).recip();
    let b = z.add_i(1).recip();
    let uv = &u.add_i(1).powi(2) * &v.add_i(1).powi(2);
    let c = uv.div(&(u + v).add_i(1).powi(3));
    (&(&a + &b) - &c).add_i(-1)
}

/// The right-hand side `Phi` of `log((1 + D) / (1 + y)) = Phi`.
fn phi(class: GraphClass, q: &Float, x: &Jet, z: &Jet, u: &Jet, v: &Jet) -> Jet {
    let mut r = (z * &map_bracket(x, z, u, v)).mul_q(1, 2);
    r = &r + &(&x.powi(3) * &z.powi(9)).mul_c(q).mul_q(1, 6);
    if class == GraphClass::K33Plus {
        r = &r + &(&x.powi(4) * &z.powi(8)).mul_q(1, 4);
    }
    &r + &(x * &z.powi(2)).div(&(x * z).add_i(1))
}

fn residual(class: GraphClass, y: &Float, q: &Float, x: &Jet, z: &Jet, u: &Jet, v: &Jet) -> Jet {
    let one_plus_y = Float::with_val(y.prec(), y + 1u32);
    let lg = z.add_i(1).mul_c(&one_plus_y.recip()).ln();
    &phi(class, q, x, z, u, v) - &lg
}

/// `y` as a function of `t` along the branch curve.
fn y_of_t(class: GraphClass, q: &Float, t: &Jet) -> Jet {
    let s = parametrize(t);
    let h = phi(class, q, &s.x, &s.d, &s.u, &s.v);
    (&s.d.add_i(1) * &(-&h).exp()).add_i(-1)
}

/// `B` from `x`, `z = D` and `w = D (1 + U)`.
fn b_formula(class: GraphClass, y: &Float, q: &Float, x: &Jet, z: &Jet, w: &Jet) -> Jet {
    let p = x.prec();
    let one_plus_y = Float::with_val(p, y + 1u32);
    let x2 = x.powi(2);
    let xz = x * z;
    let log_ratio = z.add_i(1).mul_c(&one_plus_y.recip()).ln();

    let mut first = (&(z * &(&x.mul_i(6) + &xz).add_i(-2)) * x).mul_q(1, 4);
    first = &first - &(&(&x2 * &z.add_i(1)) * &log_ratio);
    first = &first - &(&x2 * &z.add_i(1).ln()).mul_q(1, 2);
    first = &first + &xz.add_i(1).ln().mul_q(1, 2);

    let w2 = w.powi(2);
    let num = &(&(&x.add_i(1) * &w.add_i(1)) * &(z + &w2)).mul_i(2) + &(w - z).mul_i(3);
    let mut second = (x * &num).div(&w.add_i(1).powi(2).mul_i(2));
    let xw = x * w;
    let xw2 = x * &w2;
    second = &second - &(&(&xz + &xw) + &xw2).add_i(1).ln().mul_q(1, 2);
    let one_minus_4x = x.mul_i(-4).add_i(1);
    second = &second + &(&one_minus_4x * &w.add_i(1).ln()).mul_q(1, 2);
    let one_minus_x = (-x).add_i(1);
    let arg = (&(&(&one_minus_x + &xz) - &xw) + &xw2).div(&(&one_minus_x * &(&(z + &w2) + w).add_i(1)));
    second = &second + &(&(&one_minus_4x + &x2.mul_i(2)) * &arg.ln()).mul_q(1, 4);

    let mut b = &first.mul_q(1, 2) - &second.mul_q(1, 4);
    b = &b + &(&x.powi(5) * &z.powi(10)).mul_c(q).mul_q(1, 120);
    if class == GraphClass::K33Plus {
        b = &b + &(&x.powi(6) * &z.powi(9)).mul_q(1, 72);
    }
    b
}

/// Lower end of the admissible `t` range, where `zeta(t) = 27/256`.
fn t_lower(p: u32) -> Result<Float> {
    let target = ratio(p, 27, 256);
    bracketed_root(ratio(p, 1, 3), int(p, 1), "zeta(t) = 27/256", |t| {
        let z = closed_form::zeta(t);
        z.add_c(&Float::with_val(p, -&target))
    })
}

const SCAN_POINTS: usize = 64;

/// The unique root of `f` in `(t_lower, 1)`, refusing brackets with no or
/// several sign changes.
fn unique_root(p: u32, what: &str, f: impl Fn(&Jet) -> Jet) -> Result<Float> {
    let lo = t_lower(p)?;
    let width = Float::with_val(p, int(p, 1) - &lo);
    let point = |i: usize| Float::with_val(p, &lo + Float::with_val(p, &width * i as u32) / SCAN_POINTS as u32);
    let sign = |t: &Float| f(&Jet::constant(t.clone(), 1)).coeff(0).is_sign_negative();
    let mut brackets = Vec::new();
    let mut prev = sign(&point(0));
    for i in 1..SCAN_POINTS {
        let s = sign(&point(i));
        if s != prev {
            brackets.push((point(i - 1), point(i)));
        }
        prev = s;
    }
    match brackets.len() {
        0 => Err(Error::NoRootInBracket { what: what.to_string() }),
        1 => {
            let (a, b) = brackets.pop().unwrap();
            bracketed_root(a, b, what, f)
        }
        count => Err(Error::AmbiguousRoot { what: what.to_string(), count }),
    }
}

fn connected_and_general(b: &[Float; 6], r: &Float) -> ([Float; 6], [Float; 6], Float) {
    let p = r.prec();
    let zero = Float::new(p);
    let rho = Float::with_val(p, r * Float::with_val(p, &b[2] / r).exp());
    let c0 = Float::with_val(p, r + &b[0]) + &b[2];
    let c2 = Float::with_val(p, -r);
    let denom = Float::with_val(p, 2 * b[4].clone() - r);
    let c4 = -(Float::with_val(p, r + Float::with_val(p, r.square_ref()) / &denom)) / 2u32;
    let scale = Float::with_val(p, 1 - Float::with_val(p, 2 * b[4].clone()) / r);
    let c5 = Float::with_val(p, &b[5] * scale.pow(ratio(p, -5, 2)));
    let e = Float::with_val(p, c0.exp_ref());
    let g0 = e.clone();
    let g2 = Float::with_val(p, &e * &c2);
    let g4 = Float::with_val(p, &e * (Float::with_val(p, c2.square_ref()) / 2u32 + &c4));
    let g5 = Float::with_val(p, &e * &c5);
    let c = [c0, zero.clone(), c2, zero.clone(), c4, c5];
    let g = [g0, zero.clone(), g2, zero.clone(), g4, g5];
    (c, g, rho)
}

fn expansion_route(class: GraphClass, y: &Float, q: &Float, t_star: &Float) -> Result<ExpansionParts> {
    let p = t_star.prec();
    let s = parametrize(&Jet::constant(t_star.clone(), 1));
    let (x0, z0, u0, v0) = (s.x.coeff(0), s.d.coeff(0), s.u.coeff(0), s.v.coeff(0));

    // Unknowns (x, D, V) expanded in e = U - U0.
    let sol = expand_solution(&[x0.clone(), z0, v0], JET_LEN, "tower expansion", |vars, e| {
        let (x, z, v) = (&vars[0], &vars[1], &vars[2]);
        let u = e.add_c(&u0);
        vec![&(x * z) * &v.add_i(1).powi(2) - &u, &(z * &u.add_i(1).powi(2)) - v, residual(class, y, q, x, z, &u, v)]
    })?;
    let (x1, e_of_x) = invert_critical(&sol[0], &x0, -1, "tower expansion")?;
    let d = sol[1].compose(&e_of_x);
    let u = e_of_x.add_c(&u0);
    let big_x = Jet::var(Float::new(p), d.len());
    let x = (-&(&big_x * &big_x)).add_i(1).mul_c(&x0);
    let w = &d * &u.add_i(1);
    let b = b_formula(class, y, q, &x, &d, &w);
    Ok(ExpansionParts { r: x0, x1, u, d, b })
}

struct ExpansionParts {
    r: Float,
    x1: Float,
    u: Jet,
    d: Jet,
    b: Jet,
}

fn first<const N: usize>(j: &Jet) -> [Float; N] {
    std::array::from_fn(|k| j.coeff(k))
}

/// Locates the singularity of the tower at the marker values `(y, q)` and
/// expands every series there.
pub fn solve_tower_singularity(
    class: GraphClass,
    q: &Float,
    y: &Float,
    p: u32,
    route: Route,
) -> Result<TowerSingularData> {
    if class == GraphClass::Maximal {
        return Err(Error::Config("the maximal class has no connectivity tower".into()));
    }
    let q = Float::with_val(p, q);
    let y = Float::with_val(p, y);
    let (t_star, r, x1, u, d, b) = match route {
        Route::Expansion => {
            let t_star = unique_root(p, "Y(t) = y", |t| y_of_t(class, &q, t).add_c(&Float::with_val(p, -&y)))?;
            let parts = expansion_route(class, &y, &q, &t_star)?;
            (t_star, parts.r, parts.x1, first(&parts.u), first(&parts.d), first(&parts.b))
        }
        Route::ClosedForm => {
            if class != GraphClass::K33 {
                return Err(Error::Config(format!("no closed forms are available for {class}")));
            }
            let t_star = unique_root(p, "Y(t) = y", |t| closed_form::big_y(t, &q).add_c(&Float::with_val(p, -&y)))?;
            let v = closed_form::evaluate(&t_star, &q)?;
            (t_star, v.zeta.clone(), Float::new(p), v.u.clone(), v.d.clone(), v.b.clone())
        }
    };
    let closed_form = if class == GraphClass::K33 { Some(closed_form::evaluate(&t_star, &q)?) } else { None };
    let (c, g, rho) = connected_and_general(&b, &r);
    Ok(TowerSingularData { class, route, precision: p, y, q, t_star, r, x1, u, d, b, c, g, rho, closed_form })
}
