//! Closed forms for the K33 tower, parametrized by `t`.
//!
//! The singular point of the network series sits at `x = zeta(t)`,
//! `D = D0(t)`, and the marker value is recovered as `y = Y(t)`. The K5
//! marker `q` only enters through `h`, and the `B_i` below are only valid
//! at `q = 1`.

use rug::Float;

use super::{int, ratio, Jet};
use crate::error::{Error, Result};

fn poly(t: &Jet, coeffs: &[i64]) -> Jet {
    let mut acc = Jet::constant(Float::new(t.prec()), t.len());
    for &c in coeffs {
        acc = (&acc * t).add_i(c);
    }
    acc
}

fn lin(t: &Jet, a: i64, b: i64) -> Jet {
    t.mul_i(a).add_i(b)
}

pub fn h(t: &Jet, q: &Float) -> Jet {
    let q_part = poly(t, &[13122, 45927, 19683]).mul_c(q);
    let mut num = poly(t, &[-1658880, -12496896, -8847360, 6832128, 10399744, 4739072, 958464, 73728]);
    num = &num + &(&q_part * &t.powi(7));
    let den = (&(&lin(t, 3, 1).powi(6) * &lin(t, 2, 1)) * &lin(t, 1, 3)).mul_i(8192);
    (&t.powi(2) * &num).div(&den)
}

pub fn big_y(t: &Jet, q: &Float) -> Jet {
    let d = &lin(t, 3, 1) * &lin(t, 1, -1);
    (&(-&lin(t, 2, 1).div(&d)) * &(-&h(t, q)).exp()).add_i(-1)
}

pub fn zeta(t: &Jet) -> Jet {
    (-&(&lin(t, 1, -1).powi(3) * &lin(t, 3, 1))).div(&t.powi(3).mul_i(16))
}

pub fn q_poly(t: &Jet) -> Jet {
    poly(
        t,
        &[78732, -1328940, -26889705, -153744066, -415828997, -522964992, -342073344, -121237504, -22151168, -1638400],
    )
}

pub fn k_poly(t: &Jet) -> Jet {
    poly(
        t,
        &[
            78732, 472392, -2668221, -816345, 92026557, 562023429, 1040556032, 926367744, 455663616, 127336448,
            19005440, 1179648,
        ],
    )
}

pub fn p1(t: &Jet) -> Jet {
    poly(
        t,
        &[
            1549681956,
            -60580022472,
            -965388262815,
            -2822075181459,
            -63004687280883,
            -1326793976317287,
            -11608693177471470,
            -55082955555464994,
            -157459666865762304,
            -279393068914421760,
            -323288788914892800,
            -254483996115259392,
            -139939270751358976,
            -54299625067175936,
            -14753365577572352,
            -2718756694392832,
            -314310035243008,
            -18285655490560,
            -5905580032,
            40265318400,
        ],
    )
}

pub fn p2(t: &Jet) -> Jet {
    poly(
        t,
        &[
            -472392,
            -2991816,
            15064542,
            10234512,
            -550526652,
            -3556193688,
            -7367383050,
            -7639318528,
            -4586717184,
            -1675345920,
            -368705536,
            -45088768,
            -2359296,
        ],
    )
}

const U2_POLY: [i64; 21] = [
    6198727824,
    180231719760,
    891036025560,
    -12902936763600,
    -197722264231071,
    -1821396525148269,
    -13816272361145022,
    -79424397121737354,
    -324711461744767867,
    -931873748086896665,
    -1881275802907541504,
    -2713502925437276160,
    -2843653010633469952,
    -2190731661037666304,
    -1246514524950953984,
    -521994799964094464,
    -158674913803108352,
    -34025665074298880,
    -4876321721155584,
    -418948289921024,
    -16312285790208,
];

/// Every closed-form quantity at one value of `t`.
#[derive(Debug, Clone)]
pub struct ClosedFormValues {
    pub t: Float,
    pub h: Float,
    pub y: Float,
    pub zeta: Float,
    pub q: Float,
    pub k: Float,
    pub p1: Float,
    pub p2: Float,
    pub u: [Float; 3],
    pub d: [Float; 4],
    pub b: [Float; 6],
}

fn at(t: &Float) -> Jet {
    Jet::constant(t.clone(), 1)
}

fn radicand(v: Float, what: &str) -> Result<Float> {
    if v.is_sign_negative() {
        Err(Error::NegativeRadicand { what: what.to_string() })
    } else {
        Ok(v)
    }
}

/// `(3t+1) K / (t^3 (t+1) Q)`, which must be negative for `U1` and `D3` to be real.
fn uk_ratio(t: &Float) -> Float {
    let j = at(t);
    let num = &lin(&j, 3, 1) * &k_poly(&j);
    let den = &(&j.powi(3) * &lin(&j, 1, 1)) * &q_poly(&j);
    num.div(&den).coeff(0)
}

pub fn b0(t: &Float) -> Float {
    let p = t.prec();
    let j = at(t);
    let ln = |v: Jet| v.ln();
    let t6 = j.powi(6);
    let mut s = ln(lin(&j, 1, 3)).mul_q(1, 4);
    s = &s - &(&(&lin(&j, 3, 1).powi(2) * &lin(&j, 1, -1).powi(6)) * &ln(lin(&j, 2, 1))).div(&t6.mul_i(1024));
    s = &s - &(&poly(&j, &[3, -16, 6, 0, -1]) * &ln(lin(&j, 3, 1))).div(&j.powi(3).mul_i(32));
    s = &s - &j.ln().mul_q(1, 2);
    s = s.add_c(&(-ratio(p, 3, 2) * Float::with_val(p, 2).ln()));
    s = &s + &(&(&lin(&j, 3, -1).powi(2) * &lin(&j, 1, 1).powi(6)) * &ln(lin(&j, 1, 1))).div(&t6.mul_i(512));
    let big = poly(
        &j,
        &[
            19683, -131220, -183708, 360921744, 2005423731, 3887177580, 5603033310, 4821770240, 2013921280, 229048320,
            -97157120, -31436800, -2048000, 122880,
        ],
    );
    let den = (&(&j.powi(4) * &lin(&j, 3, 1).powi(5)) * &lin(&j, 1, 3)).mul_i(41943040);
    s = &s - &(&lin(&j, 1, -1).powi(2) * &big).div(&den);
    s.coeff(0)
}

pub fn b2(t: &Float) -> Float {
    let j = at(t);
    let t6 = j.powi(6);
    let mut s = -&(&(&(&(&lin(&j, 3, -1) * &lin(&j, 3, 1)) * &lin(&j, 1, 1).powi(3)) * &lin(&j, 1, -1).powi(3))
        * &lin(&j, 1, 1).ln())
        .div(&t6.mul_i(256));
    s = &s + &(&(&lin(&j, 3, 1).powi(2) * &lin(&j, 1, -1).powi(6)) * &lin(&j, 2, 1).ln()).div(&t6.mul_i(512));
    s = &s + &(&(&lin(&j, 3, 1) * &lin(&j, 1, -1).powi(3)) * &lin(&j, 3, 1).ln()).div(&j.powi(3).mul_i(32));
    let big = poly(
        &j,
        &[
            19683, -13122, -190269, 122862096, 626914188, 555393024, 28803072, -163438592, -81084416, -14852096,
            -720896, 49152,
        ],
    );
    let den = (&(&j.powi(4) * &lin(&j, 1, 3)) * &lin(&j, 3, 1).powi(5)).mul_i(8388608);
    s = &s + &(&lin(&j, 1, -1).powi(4) * &big).div(&den);
    s.coeff(0)
}

pub fn b4(t: &Float) -> Float {
    let j = at(t);
    let den = (&(&(&j.powi(4) * &lin(&j, 1, 3)) * &lin(&j, 3, 1).powi(5)) * &q_poly(&j)).mul_i(8388608);
    let first = -&(&lin(&j, 1, -1).powi(5) * &p1(&j)).div(&den);
    let logs = &lin(&j, 1, 1).ln().mul_i(-2) + &lin(&j, 2, 1).ln();
    // 9 (t + 1/3)^2 = (3t + 1)^2
    let second = (&(&lin(&j, 3, 1).powi(2) * &lin(&j, 1, -1).powi(6)) * &logs).div(&j.powi(6).mul_i(1024));
    (&first - &second).coeff(0)
}

pub fn b5(t: &Float) -> Result<Float> {
    let j = at(t);
    let q = q_poly(&j);
    let p2v = p2(&j);
    let rad = p2v.mul_i(3).div(&(&(&j.powi(3) * &lin(&j, 1, 1)) * &q)).coeff(0);
    let root = radicand(rad, "3 P2 / (t^3 (t+1) Q)")?.sqrt();
    let num = &(&p2v.powi(2) * &lin(&j, 1, -1).powi(6)).mul_c(&root);
    let den = (&(&(&lin(&j, 3, 1).powi(5) * &lin(&j, 1, 1)) * &j) * &q.powi(2)).mul_i(2880);
    Ok((-&num.div(&den)).coeff(0))
}

pub fn u_coeffs(t: &Float) -> Result<[Float; 3]> {
    let p = t.prec();
    let j = at(t);
    let u0 = Float::with_val(p, t * 3u32).recip();
    let rad = Float::with_val(p, -ratio(p, 2, 27) * uk_ratio(t));
    let u1 = -radicand(rad, "U1 radicand")?.sqrt();
    let pre = lin(&j, 3, 1).powi(2).div(&(&(&j.powi(2) * &lin(&j, 1, 1).powi(2)) * &q_poly(&j).powi(2)).mul_i(54));
    let u2 = (-&(&pre * &poly(&j, &U2_POLY))).coeff(0);
    Ok([u0, u1, u2])
}

pub fn d_coeffs(t: &Float) -> Result<[Float; 4]> {
    let p = t.prec();
    let j = at(t);
    let d0 = (-&j.powi(2).mul_i(3).div(&(&lin(&j, 3, 1) * &lin(&j, 1, -1)))).coeff(0);
    let q = q_poly(&j);
    let d2_poly = poly(&j, &[19683, 118098, -1592325, -10616832, -30670848, 7602176, 24444928, 9830400, 1179648]);
    let d2 = (-&(&(&j * &lin(&j, 2, 1).powi(2)) * &d2_poly).div(&(&(&lin(&j, 3, 1) * &lin(&j, 1, -1)) * &q))).coeff(0);
    let root = radicand(-uk_ratio(t), "D3 radicand")?.sqrt();
    let body = &(&(&(&j.powi(2) * &lin(&j, 3, 1)) * &lin(&j, 1, 3).powi(2)) * &lin(&j, 2, 1).powi(2)) * &k_poly(&j);
    let d3 = Float::with_val(p, 131072u32) / (9 * Float::with_val(p, q.coeff(0).square_ref()))
        * root
        * Float::with_val(p, 6).sqrt()
        * body.coeff(0);
    Ok([d0, int(p, 0), d2, d3])
}

/// Evaluates everything at `t` for the marker value `q`.
pub fn evaluate(t: &Float, q: &Float) -> Result<ClosedFormValues> {
    let p = t.prec();
    let j = at(t);
    Ok(ClosedFormValues {
        t: t.clone(),
        h: h(&j, q).coeff(0),
        y: big_y(&j, q).coeff(0),
        zeta: zeta(&j).coeff(0),
        q: q_poly(&j).coeff(0),
        k: k_poly(&j).coeff(0),
        p1: p1(&j).coeff(0),
        p2: p2(&j).coeff(0),
        u: u_coeffs(t)?,
        d: d_coeffs(t)?,
        b: [b0(t), int(p, 0), b2(t), int(p, 0), b4(t), b5(t)?],
    })
}
