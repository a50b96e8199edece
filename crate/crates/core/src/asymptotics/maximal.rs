//! Singularity analysis of maximal K33-minor-free graphs.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::{expand_solution, int, invert_critical, newton, ratio, transfer_alpha, Jet, JET_LEN};
use crate::error::{Error, Result};

/// Closed forms printed alongside the expansion of `A`, evaluated verbatim
/// where they are real. `M / Q` is negative at the singularity, so the half
/// integer powers are replaced by powers of `|M / Q|`.
#[derive(Debug, Clone)]
pub struct PrintedForms {
    pub m_val: Float,
    pub q_val: Float,
    pub f2: Float,
    pub f3_abs: Float,
    pub c_const: Float,
    pub a0: Float,
    pub a2: Float,
    pub a4: Float,
    pub a5_abs: Float,
    /// `15 |A5| / (8 pi)`.
    pub a_over_pi: Float,
    /// `15 |A5| / (8 sqrt(pi))`.
    pub a_over_sqrt_pi: Float,
}

#[derive(Debug, Clone)]
pub struct MaximalSingularData {
    pub precision: u32,
    /// `F(rho)`.
    pub t: Float,
    pub rho: Float,
    pub gamma: Float,
    /// `F = sum F_k X^k`.
    pub f: Vec<Float>,
    /// `L = sum L_k X^k`.
    pub l: Vec<Float>,
    /// `A = sum A_k X^k`.
    pub a_coeffs: Vec<Float>,
    /// Linear coefficient of `x` in the parameter; zero at a genuine branch point.
    pub x1: Float,
    /// `A_5 / Gamma(-5/2)`.
    pub a: Float,
    pub printed: PrintedForms,
}

impl MaximalSingularData {
    pub fn a_coeff(&self, k: usize) -> &Float {
        &self.a_coeffs[k]
    }
}

/// `t = exp(27^3 / (6 * 256^3) (1 + 59/(512 t))^9)`, from the start value 1.
pub fn solve_t(p: u32) -> Result<Float> {
    let c = Float::with_val(p, 27u32).pow(3u32) / (Float::with_val(p, 256u32).pow(3u32) * 6u32);
    newton(int(p, 1), "F(rho)", |t| {
        let inner = t.recip().mul_q(59, 512).add_i(1).powi(9).mul_c(&c);
        t - &inner.exp()
    })
}

/// `xF^3 - L(1-L)^3` and `exp(x^3/6 (F + H)^9) - F` with `H = (xF^3 + L(1-2L))/2`.
fn system(x: &Jet, f: &Jet, l: &Jet) -> Vec<Jet> {
    let xf3 = x * &f.powi(3);
    let g1 = &xf3 - &(l * &(-l).add_i(1).powi(3));
    let h = (&xf3 + &(l * &l.mul_i(-2).add_i(1))).mul_q(1, 2);
    let g2 = &(x.powi(3) * (f + &h).powi(9)).mul_q(1, 6).exp() - f;
    vec![g1, g2]
}

/// `A` from `x`, `F` and `L` at `y = 1`.
fn a_formula(x: &Jet, f: &Jet, l: &Jet) -> Jet {
    let xf3 = x * &f.powi(3);
    let h = (&xf3 + &(l * &l.mul_i(-2).add_i(1))).mul_q(1, 2);
    let inner = &(&(&(&h + f) * &f.ln()).mul_i(27) + &l.mul_i(10))
        + &(&(&l.powi(2).mul_i(20) + &(-l).add_i(1).ln().mul_i(15)) - &(&f.mul_i(30) + &xf3.mul_i(5)));
    (&x.powi(2) * &inner).mul_q(-1, 60)
}

/// `dPhi/dF = 3/1024 (-3L^2 + 3L + 2F + 3xF^3) x^3 (2F + xF^3 + L - 2L^2)^8 - 1`.
pub fn d_phi_d_f(x: &Float, f: &Float, l: &Float) -> Float {
    let p = x.prec();
    let xf3 = Float::with_val(p, x * Float::with_val(p, f.clone().pow(3u32)));
    let l2 = Float::with_val(p, l.square_ref());
    let a = Float::with_val(p, -3 * l2.clone() + 3 * l.clone() + 2 * f.clone() + 3 * xf3.clone());
    let b = Float::with_val(p, 2 * f.clone() + &xf3 + l - 2 * l2);
    ratio(p, 3, 1024) * a * x.clone().pow(3u32) * b.pow(8u32) - 1u32
}

fn printed_forms(t: &Float) -> PrintedForms {
    let p = t.prec();
    let lt = Float::with_val(p, t.ln_ref());
    let l34 = Float::with_val(p, ratio(p, 3, 4).ln());
    let m_val = Float::with_val(p, 531 * lt.clone() + 512 * t.clone() + 59u32);
    let q_val = Float::with_val(p, 9 * (512 * t.clone() + 225u32) * &lt - 512 * t.clone() - 59u32);
    let f2 = Float::with_val(p, 12 * t.clone() * (128 * t.clone() + 71u32) * &lt / &q_val);
    let sqrt6 = Float::with_val(p, 6).sqrt();
    let q_abs = Float::with_val(p, q_val.abs_ref());
    let f3_abs = Float::with_val(
        p,
        96 * sqrt6.clone()
            * t
            * Float::with_val(p, lt.abs_ref())
            * Float::with_val(p, m_val.abs_ref()).pow(ratio(p, 3, 2)),
    ) / q_abs.clone().pow(ratio(p, 5, 2));
    let c_const = Float::with_val(p, 243u32) / Float::with_val(p, Float::i_exp(1, 25));
    let t6 = t.clone().pow(6u32);
    let common = Float::with_val(p, 4608 * lt.clone() * t + 531 * lt.clone());
    let a0 = -3 * c_const.clone() / (20 * t6.clone())
        * Float::with_val(p, &common + 2560 * l34.clone() - 5120 * t.clone() + 550u32);
    let a2 = c_const.clone() / (4 * t6.clone())
        * Float::with_val(p, &common + 3072 * l34.clone() - 6144 * t.clone() + 542u32);
    let sq = Float::with_val(p, 128 * t.clone() + 71u32).square();
    let a4 = 3 * c_const.clone() / t6.clone()
        * Float::with_val(
            p,
            16 * lt.clone() * sq / &q_val + 59 * lt.clone() + 512 * (lt.clone() * t - 2 * t.clone() + &l34) + 26u32,
        );
    let mq = Float::with_val(p, &m_val / &q_val).abs();
    let a5_abs: Float = 40 * sqrt6 * c_const.clone() / (3 * t6) * mq.pow(ratio(p, 5, 2));
    let pi = Float::with_val(p, Constant::Pi);
    let a_over_pi = Float::with_val(p, 15 * a5_abs.clone() / (8 * pi.clone()));
    let a_over_sqrt_pi = Float::with_val(p, 15 * a5_abs.clone() / (8 * pi.sqrt()));
    PrintedForms { m_val, q_val, f2, f3_abs, c_const, a0, a2, a4, a5_abs, a_over_pi, a_over_sqrt_pi }
}

/// Locates `rho`, expands `F`, `L` and `A` at it and transfers `A_5`.
pub fn solve_maximal_singularity(p: u32) -> Result<MaximalSingularData> {
    let t = solve_t(p)?;
    let rho = ratio(p, 27, 256) / t.clone().pow(3u32);
    let gamma = Float::with_val(p, rho.recip_ref());

    // Unknowns (x, F) expanded in e = L - 1/4.
    let quarter = ratio(p, 1, 4);
    let sol = expand_solution(&[rho.clone(), t.clone()], JET_LEN, "maximal expansion", |v, e| {
        system(&v[0], &v[1], &e.add_c(&quarter))
    })?;
    let (x1, e_of_x) = invert_critical(&sol[0], &rho, -1, "maximal expansion")?;
    let f = sol[1].compose(&e_of_x);
    let l = e_of_x.add_c(&quarter);
    let big_x = Jet::var(Float::new(p), e_of_x.len());
    let x = (-&(&big_x * &big_x)).add_i(1).mul_c(&rho);
    let a_jet = a_formula(&x, &f, &l);
    let a_coeffs = a_jet.coeffs().to_vec();
    if a_coeffs.len() < 6 {
        return Err(Error::NoConvergence { what: "maximal expansion length".into() });
    }
    let a = transfer_alpha(&a_coeffs[5]);
    Ok(MaximalSingularData {
        precision: p,
        printed: printed_forms(&t),
        t,
        rho,
        gamma,
        f: f.coeffs().to_vec(),
        l: l.coeffs().to_vec(),
        a_coeffs,
        x1,
        a,
    })
}

/// `dPhi/dF (rho, t, 1/4)`; negative, so solving for `F` has no branch point
/// before `L` reaches `1/4`.
pub fn branch_check(data: &MaximalSingularData) -> Float {
    let p = data.precision;
    d_phi_d_f(&data.rho, &data.t, &ratio(p, 1, 4))
}
