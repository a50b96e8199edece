//! High-precision singularity analysis.
//!
//! Every generating function here has a square-root type dominant
//! singularity at some `rho`, with a local expansion in
//! `X = sqrt(1 - x/rho)` whose first odd term is `X^5`. The coefficient of
//! `X^5` transfers to `[x^n] ~ c5 / Gamma(-5/2) n^{-7/2} rho^{-n}`.

pub mod closed_form;
pub mod jet;
pub mod limit;
pub mod maximal;
pub mod tower;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

pub use jet::Jet;

use crate::error::{Error, Result};

pub const DEFAULT_PRECISION: u32 = 256;

/// Length of the local expansions carried through the singular point.
pub(crate) const JET_LEN: usize = 10;

pub(crate) fn int(p: u32, v: i64) -> Float {
    Float::with_val(p, v)
}

pub(crate) fn ratio(p: u32, a: i64, b: i64) -> Float {
    Float::with_val(p, a) / b
}

/// `Gamma(-5/2) = -8 sqrt(pi) / 15`.
pub fn gamma_minus_five_halves(p: u32) -> Float {
    let pi = Float::with_val(p, Constant::Pi);
    -(pi.sqrt() * 8u32) / 15u32
}

/// Constant in `[x^n] f ~ alpha n^{-7/2} rho^{-n}` from the `X^5` coefficient.
pub fn transfer_alpha(c5: &Float) -> Float {
    Float::with_val(c5.prec(), c5 / gamma_minus_five_halves(c5.prec()))
}

/// `[x^n] f / (alpha n^{-7/2} rho^{-n})` from an exact coefficient; tends to 1.
pub fn coefficient_ratio(coeff: &Rational, n: usize, alpha: &Float, rho: &Float) -> Float {
    let p = alpha.prec();
    let mut v = Float::with_val(p, coeff);
    v *= rho.clone().pow(n as u32);
    v *= Float::with_val(p, n).pow(Float::with_val(p, 7) / 2u32);
    v / alpha
}

/// Newton's method in one variable; `f` is evaluated on a length-2 jet so the
/// derivative comes for free.
pub(crate) fn newton(start: Float, what: &str, f: impl Fn(&Jet) -> Jet) -> Result<Float> {
    let p = start.prec();
    let tol = Float::with_val(p, Float::i_exp(1, -(p as i32) + 8));
    let mut x = start;
    let mut converged = 0;
    for _ in 0..400 {
        let j = f(&Jet::var(x.clone(), 2));
        let step = Float::with_val(p, j.coeff(0) / j.coeff(1));
        if !step.is_finite() {
            break;
        }
        x -= &step;
        let scale = Float::with_val(p, x.abs_ref()).max(&int(p, 1));
        if step.abs() <= Float::with_val(p, &tol * &scale) {
            converged += 1;
            if converged == 2 {
                return check_residual(x, what, &f);
            }
        }
    }
    Err(Error::NoConvergence { what: what.to_string() })
}

fn check_residual(x: Float, what: &str, f: &impl Fn(&Jet) -> Jet) -> Result<Float> {
    let p = x.prec();
    let r = f(&Jet::constant(x.clone(), 1)).coeff(0).abs();
    let limit = Float::with_val(p, Float::i_exp(1, -(p as i32) / 2));
    if r.is_finite() && r < limit {
        Ok(x)
    } else {
        Err(Error::NoConvergence { what: what.to_string() })
    }
}

/// Root of `f` in `[lo, hi]`, given a sign change, by Newton steps that fall
/// back to bisection whenever they leave the bracket.
pub(crate) fn bracketed_root(mut lo: Float, mut hi: Float, what: &str, f: impl Fn(&Jet) -> Jet) -> Result<Float> {
    let p = lo.prec();
    let val = |x: &Float| f(&Jet::constant(x.clone(), 1)).coeff(0);
    let f_lo = val(&lo);
    if f_lo.is_sign_negative() == val(&hi).is_sign_negative() {
        return Err(Error::NoRootInBracket { what: what.to_string() });
    }
    let lo_negative = f_lo.is_sign_negative();
    let tol = Float::with_val(p, Float::i_exp(1, -(p as i32) + 8));
    let mut x = Float::with_val(p, &lo + &hi) / 2u32;
    for _ in 0..4 * p {
        let j = f(&Jet::var(x.clone(), 2));
        let fx = j.coeff(0);
        if fx.is_zero() {
            return Ok(x);
        }
        if fx.is_sign_negative() == lo_negative {
            lo = x.clone();
        } else {
            hi = x.clone();
        }
        let newton = Float::with_val(p, &x - Float::with_val(p, &fx / j.coeff(1)));
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            Float::with_val(p, &lo + &hi) / 2u32
        };
        let step = Float::with_val(p, &next - &x).abs();
        x = next;
        if step <= Float::with_val(p, &tol * Float::with_val(p, x.abs_ref())) {
            return check_residual(x, what, &f);
        }
    }
    Err(Error::NoConvergence { what: what.to_string() })
}

/// Solves `a v = b` by Gaussian elimination with partial pivoting.
pub(crate) fn solve_linear(mut a: Vec<Vec<Float>>, mut b: Vec<Float>) -> Option<Vec<Float>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].clone().abs().partial_cmp(&a[j][col].clone().abs()).unwrap())?;
        if a[piv][col].is_zero() {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let factor = Float::with_val(a[row][col].prec(), &a[row][col] / &a[col][col]);
            for k in col..n {
                let t = Float::with_val(factor.prec(), &factor * &a[col][k]);
                a[row][k] -= t;
            }
            let t = Float::with_val(factor.prec(), &factor * &b[col]);
            b[row] -= t;
        }
    }
    let mut v = b.clone();
    for row in (0..n).rev() {
        let mut s = b[row].clone();
        for k in row + 1..n {
            s -= Float::with_val(s.prec(), &a[row][k] * &v[k]);
        }
        v[row] = s / &a[row][row];
    }
    Some(v)
}

/// Expands the solution of `eqs(vars, e) = 0` in the parameter `e`, starting
/// from an exact solution `point` at `e = 0`.
///
/// The Jacobian in `vars` is taken at the base point (by pushing length-2
/// jets through `eqs`) and kept fixed; each pass then fixes at least one more
/// coefficient of every variable.
pub(crate) fn expand_solution(
    point: &[Float],
    len: usize,
    what: &str,
    eqs: impl Fn(&[Jet], &Jet) -> Vec<Jet>,
) -> Result<Vec<Jet>> {
    let n = point.len();
    let p = point[0].prec();
    let zero = Float::new(p);
    let mut jac = vec![vec![Float::new(p); n]; n];
    for k in 0..n {
        let vars: Vec<Jet> = point
            .iter()
            .enumerate()
            .map(|(i, v)| if i == k { Jet::var(v.clone(), 2) } else { Jet::constant(v.clone(), 2) })
            .collect();
        let r = eqs(&vars, &Jet::constant(zero.clone(), 2));
        for i in 0..n {
            jac[i][k] = r[i].coeff(1);
        }
    }
    let e = Jet::var(zero, len);
    let mut vars: Vec<Jet> = point.iter().map(|v| Jet::constant(v.clone(), len)).collect();
    for _ in 0..len + 2 {
        let r = eqs(&vars, &e);
        let mut delta = vec![Vec::with_capacity(len); n];
        for k in 0..len {
            let rhs: Vec<Float> = r.iter().map(|j| j.coeff(k)).collect();
            let sol = solve_linear(jac.clone(), rhs).ok_or_else(|| Error::NoConvergence { what: what.to_string() })?;
            for (d, s) in delta.iter_mut().zip(sol) {
                d.push(s);
            }
        }
        for (v, d) in vars.iter_mut().zip(delta) {
            *v = &*v - &Jet::from_coeffs(d);
        }
    }
    Ok(vars)
}

/// Given `x(e) = r + x2 e^2 + ...` near a critical point, returns the
/// linear coefficient `x1` (which should vanish) and `e` as a jet in
/// `X = sqrt(1 - x/r)` on the branch `X = sign * e * sqrt(g)`, where
/// `x = r (1 - g e^2)`.
pub(crate) fn invert_critical(x: &Jet, r: &Float, sign: i64, what: &str) -> Result<(Float, Jet)> {
    let p = r.prec();
    let len = x.len();
    let g: Vec<Float> = (2..len).map(|k| -Float::with_val(p, x.coeff(k) / r)).collect();
    let g = Jet::from_coeffs(g);
    if !g.value().is_sign_positive() || g.value().is_zero() {
        return Err(Error::NegativeRadicand { what: format!("{what}: curvature at the critical point") });
    }
    let root = g.sqrt();
    let mut c = vec![Float::new(p)];
    c.extend(root.coeffs().iter().map(|v| Float::with_val(p, v * sign)));
    let x_of_e = Jet::from_coeffs(c);
    Ok((x.coeff(1), x_of_e.revert()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_value() {
        let g = gamma_minus_five_halves(128);
        // Gamma(-5/2) = -0.9453087204829418...
        assert!((g.to_f64() + 0.945_308_720_482_941_8).abs() < 1e-15);
    }

    #[test]
    fn newton_finds_sqrt2() {
        let r = newton(int(128, 1), "sqrt 2", |x| (x * x).add_i(-2)).unwrap();
        let want = Float::with_val(128, 2).sqrt();
        assert!(Float::with_val(128, &r - &want).abs() < 1e-35);
    }

    #[test]
    fn bracketed_root_and_empty_bracket() {
        let f = |x: &Jet| (x * x).add_i(-2);
        let r = bracketed_root(int(128, 0), int(128, 5), "sqrt 2", f).unwrap();
        assert!((r.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        let err = bracketed_root(int(128, 2), int(128, 5), "sqrt 2", f);
        assert!(matches!(err, Err(Error::NoRootInBracket { .. })));
    }

    #[test]
    fn linear_solve() {
        let a = vec![vec![int(64, 0), int(64, 2)], vec![int(64, 3), int(64, 1)]];
        let v = solve_linear(a, vec![int(64, 4), int(64, 5)]).unwrap();
        assert_eq!(v[0].to_f64(), 1.0);
        assert_eq!(v[1].to_f64(), 2.0);
    }

    #[test]
    fn expansion_of_an_implicit_circle() {
        // x^2 + v^2 = 1 near (x, v) = (0, 1), expanded in x = e
        let p = 128;
        let sol =
            expand_solution(&[int(p, 1)], 6, "circle", |v, e| vec![(&(e * e) + &(&v[0] * &v[0])).add_i(-1)]).unwrap();
        // sqrt(1 - e^2) = 1 - e^2/2 - e^4/8
        assert!((sol[0].coeff(2).to_f64() + 0.5).abs() < 1e-30);
        assert!((sol[0].coeff(4).to_f64() + 0.125).abs() < 1e-30);
    }
}
