//! Exact coefficient rings for truncated power series.

use std::fmt;

use rug::{Integer, Rational};

/// Exact commutative ring used for series coefficients.
///
/// Every implementation is a Q-algebra, so scaling by a rational is always
/// available. Markers (`y` for edges, `q` for K5 blocks) evaluate to 1 in
/// [`Coeff::specialize`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;

    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, r: &Rational) -> Self;

    /// Multiplicative inverse, if `self` is a unit of the ring.
    fn inverse(&self) -> Option<Self>;

    /// Substitutes 1 for every marker.
    fn specialize(&self) -> Rational;

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.plus(&a.times(b));
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Rational::new()
    }

    fn one() -> Self {
        Rational::from(1)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        self.cmp0().is_eq()
    }

    fn plus(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }

    fn minus(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }

    fn times(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }

    fn negated(&self) -> Self {
        Rational::from(-self)
    }

    fn scaled(&self, r: &Rational) -> Self {
        Rational::from(self * r)
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.clone().recip())
        }
    }

    fn specialize(&self) -> Rational {
        self.clone()
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += Rational::from(a * b);
    }
}

/// Polynomial in the markers `y` (edges) and `q` (K5 blocks).
///
/// Stored as a Laurent polynomial in `s = 1 + y` and an ordinary polynomial in
/// `q`, with integer numerators over one common denominator. Allowing negative
/// powers of `s` makes `1 + y` a unit, which the network equations divide by.
/// Series whose coefficients are genuine polynomials in `y` convert back with
/// [`MarkerPoly::to_y_poly`].
#[derive(Clone)]
pub struct MarkerPoly {
    s_min: i32,
    s_len: usize,
    q_len: usize,
    /// Row-major `[s_index][q_exponent]`.
    num: Vec<Integer>,
    den: Integer,
}

impl MarkerPoly {
    fn raw(s_min: i32, s_len: usize, q_len: usize) -> Self {
        MarkerPoly { s_min, s_len, q_len, num: vec![Integer::new(); s_len * q_len], den: Integer::from(1) }
    }

    /// `c * s^k * q^j`.
    pub fn monomial(c: &Rational, s_exp: i32, q_exp: usize) -> Self {
        if c.cmp0().is_eq() {
            return Self::zero();
        }
        let mut p = Self::raw(s_exp, 1, q_exp + 1);
        p.num[q_exp] = c.numer().clone();
        p.den = c.denom().clone();
        p
    }

    /// The edge marker `y = s - 1`.
    pub fn y() -> Self {
        Self::monomial(&Rational::from(1), 1, 0).minus(&Self::one())
    }

    /// The K5 marker `q`.
    pub fn q() -> Self {
        Self::monomial(&Rational::from(1), 0, 1)
    }

    /// `1 + y`, which is the unit `s`.
    pub fn one_plus_y() -> Self {
        Self::monomial(&Rational::from(1), 1, 0)
    }

    /// Builds `sum c[i][j] y^i q^j`.
    pub fn from_y_poly(coeffs: &[Vec<Rational>]) -> Self {
        let y = Self::y();
        let q = Self::q();
        let mut out = Self::zero();
        let mut y_pow = Self::one();
        for row in coeffs {
            let mut q_pow = Self::one();
            for c in row {
                out = out.plus(&y_pow.times(&q_pow).scaled(c));
                q_pow = q_pow.times(&q);
            }
            y_pow = y_pow.times(&y);
        }
        out
    }

    fn get(&self, si: usize, qi: usize) -> &Integer {
        &self.num[si * self.q_len + qi]
    }

    fn normalize(mut self) -> Self {
        if self.num.iter().all(|c| c.cmp0().is_eq()) {
            return Self::zero();
        }
        // Trim s range.
        let q_len = self.q_len;
        let row_zero = |p: &Self, si: usize| p.num[si * q_len..(si + 1) * q_len].iter().all(|c| c.cmp0().is_eq());
        let mut lo = 0;
        while row_zero(&self, lo) {
            lo += 1;
        }
        let mut hi = self.s_len;
        while row_zero(&self, hi - 1) {
            hi -= 1;
        }
        // Trim q range.
        let mut q_hi = q_len;
        while (lo..hi).all(|si| self.num[si * q_len + q_hi - 1].cmp0().is_eq()) {
            q_hi -= 1;
        }
        if lo != 0 || hi != self.s_len || q_hi != q_len {
            let mut trimmed = Self::raw(self.s_min + lo as i32, hi - lo, q_hi);
            for si in lo..hi {
                for qi in 0..q_hi {
                    trimmed.num[(si - lo) * q_hi + qi] = std::mem::take(&mut self.num[si * q_len + qi]);
                }
            }
            trimmed.den = std::mem::take(&mut self.den);
            self = trimmed;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g == 1 {
                break;
            }
            if c.cmp0().is_ne() {
                g.gcd_mut(c);
            }
        }
        if g != 1 {
            for c in &mut self.num {
                c.div_exact_mut(&g);
            }
            self.den.div_exact_mut(&g);
        }
        self
    }

    /// Lowest power of `s` present (0 for the zero polynomial).
    pub fn min_s_exponent(&self) -> i32 {
        if self.s_len == 0 {
            0
        } else {
            self.s_min
        }
    }

    /// Highest power of `q` present.
    pub fn q_degree(&self) -> usize {
        self.q_len.saturating_sub(1)
    }

    /// Coefficient of `q^j` (still a polynomial in `y`).
    pub fn q_coefficient(&self, j: usize) -> Self {
        if j >= self.q_len {
            return Self::zero();
        }
        let mut out = Self::raw(self.s_min, self.s_len, 1);
        for si in 0..self.s_len {
            out.num[si] = self.get(si, j).clone();
        }
        out.den = self.den.clone();
        out.normalize()
    }

    /// Evaluates at rational marker values. `y = -1` is rejected when negative
    /// powers of `1 + y` are present.
    pub fn evaluate(&self, y: &Rational, q: &Rational) -> Option<Rational> {
        let s = Rational::from(y + 1);
        if s.cmp0().is_eq() && self.min_s_exponent() < 0 {
            return None;
        }
        let mut total = Rational::new();
        for si in 0..self.s_len {
            let k = self.s_min + si as i32;
            let s_pow = rational_pow(&s, k);
            let mut q_pow = Rational::from(1);
            for qi in 0..self.q_len {
                let c = self.get(si, qi);
                if c.cmp0().is_ne() {
                    total += Rational::from(&s_pow * &q_pow) * Rational::from(c.clone());
                }
                q_pow *= q;
            }
        }
        Some(total / Rational::from(self.den.clone()))
    }

    /// Partial derivative with respect to `y` (equivalently `s`).
    pub fn d_dy(&self) -> Self {
        let mut out = Self::raw(self.s_min - 1, self.s_len, self.q_len);
        for si in 0..self.s_len {
            let k = self.s_min + si as i32;
            for qi in 0..self.q_len {
                out.num[si * self.q_len + qi] = Integer::from(self.get(si, qi) * k);
            }
        }
        out.den = self.den.clone();
        out.normalize()
    }

    /// Partial derivative with respect to `q`.
    pub fn d_dq(&self) -> Self {
        if self.q_len <= 1 {
            return Self::zero();
        }
        let mut out = Self::raw(self.s_min, self.s_len, self.q_len - 1);
        for si in 0..self.s_len {
            for qi in 1..self.q_len {
                out.num[si * (self.q_len - 1) + qi - 1] = Integer::from(self.get(si, qi) * qi as u32);
            }
        }
        out.den = self.den.clone();
        out.normalize()
    }

    /// Expands into `c[i][j]` with `self = sum c[i][j] y^i q^j`; `None` if a
    /// negative power of `1 + y` survives.
    pub fn to_y_poly(&self) -> Option<Vec<Vec<Rational>>> {
        if self.s_len == 0 {
            return Some(Vec::new());
        }
        if self.s_min < 0 {
            return None;
        }
        let deg = (self.s_min as usize) + self.s_len - 1;
        let mut out = vec![vec![Rational::new(); self.q_len]; deg + 1];
        for si in 0..self.s_len {
            let k = self.s_min as u32 + si as u32;
            for qi in 0..self.q_len {
                let c = self.get(si, qi);
                if c.cmp0().is_eq() {
                    continue;
                }
                // (1 + y)^k = sum binom(k, i) y^i
                for i in 0..=k {
                    let b = Integer::from(Integer::binomial_u(k, i));
                    out[i as usize][qi] += Rational::from(b * c);
                }
            }
        }
        let den = Rational::from(self.den.clone());
        for row in &mut out {
            for c in row.iter_mut() {
                *c /= &den;
            }
        }
        Some(out)
    }
}

fn rational_pow(base: &Rational, k: i32) -> Rational {
    let mut out = Rational::from(1);
    for _ in 0..k.unsigned_abs() {
        out *= base;
    }
    if k < 0 {
        out.recip_mut();
    }
    out
}

impl PartialEq for MarkerPoly {
    fn eq(&self, other: &Self) -> bool {
        // Both sides are kept normalized, so the representation is canonical.
        self.s_len == other.s_len
            && (self.s_len == 0
                || (self.s_min == other.s_min
                    && self.q_len == other.q_len
                    && self.den == other.den
                    && self.num == other.num))
    }
}

impl fmt::Debug for MarkerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s_len == 0 {
            return write!(f, "0");
        }
        let mut first = true;
        for si in 0..self.s_len {
            for qi in 0..self.q_len {
                let c = self.get(si, qi);
                if c.cmp0().is_eq() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "{}", Rational::from((c.clone(), self.den.clone())))?;
                let k = self.s_min + si as i32;
                if k != 0 {
                    write!(f, "*s^{k}")?;
                }
                if qi != 0 {
                    write!(f, "*q^{qi}")?;
                }
            }
        }
        Ok(())
    }
}

impl Coeff for MarkerPoly {
    fn zero() -> Self {
        MarkerPoly { s_min: 0, s_len: 0, q_len: 0, num: Vec::new(), den: Integer::from(1) }
    }

    fn one() -> Self {
        Self::monomial(&Rational::from(1), 0, 0)
    }

    fn from_rational(r: &Rational) -> Self {
        Self::monomial(r, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.s_len == 0
    }

    fn plus(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s_min = self.s_min.min(rhs.s_min);
        let s_max = (self.s_min + self.s_len as i32).max(rhs.s_min + rhs.s_len as i32);
        let q_len = self.q_len.max(rhs.q_len);
        let mut out = Self::raw(s_min, (s_max - s_min) as usize, q_len);
        let (fa, fb, den) = if self.den == rhs.den {
            (Integer::from(1), Integer::from(1), self.den.clone())
        } else {
            let l = Integer::from(self.den.lcm_ref(&rhs.den));
            let fa = Integer::from(l.div_exact_ref(&self.den));
            let fb = Integer::from(l.div_exact_ref(&rhs.den));
            (fa, fb, l)
        };
        for (p, factor) in [(self, &fa), (rhs, &fb)] {
            let off = (p.s_min - s_min) as usize;
            for si in 0..p.s_len {
                for qi in 0..p.q_len {
                    let c = p.get(si, qi);
                    if c.cmp0().is_ne() {
                        out.num[(si + off) * q_len + qi] += Integer::from(c * factor);
                    }
                }
            }
        }
        out.den = den;
        out.normalize()
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let q_len = self.q_len + rhs.q_len - 1;
        let mut out = Self::raw(self.s_min + rhs.s_min, self.s_len + rhs.s_len - 1, q_len);
        for ai in 0..self.s_len {
            for aj in 0..self.q_len {
                let a = self.get(ai, aj);
                if a.cmp0().is_eq() {
                    continue;
                }
                for bi in 0..rhs.s_len {
                    let base = (ai + bi) * q_len + aj;
                    for bj in 0..rhs.q_len {
                        let b = rhs.get(bi, bj);
                        if b.cmp0().is_ne() {
                            out.num[base + bj] += a * b;
                        }
                    }
                }
            }
        }
        out.den = Integer::from(&self.den * &rhs.den);
        out.normalize()
    }

    fn negated(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.num {
            *c = Integer::from(-&*c);
        }
        out
    }

    fn scaled(&self, r: &Rational) -> Self {
        if r.cmp0().is_eq() || self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for c in &mut out.num {
            *c *= r.numer();
        }
        out.den *= r.denom();
        if r.cmp0().is_lt() {
            // keep the denominator positive
            out.den = Integer::from(-&out.den);
            for c in &mut out.num {
                *c = Integer::from(-&*c);
            }
        }
        out.normalize()
    }

    fn inverse(&self) -> Option<Self> {
        // Units are exactly c * s^k.
        if self.s_len != 1 || self.q_len != 1 {
            return None;
        }
        let c = Rational::from((self.num[0].clone(), self.den.clone()));
        Some(Self::monomial(&c.recip(), -self.s_min, 0))
    }

    fn specialize(&self) -> Rational {
        self.evaluate(&Rational::from(1), &Rational::from(1)).expect("s = 2 is nonzero")
    }
}
