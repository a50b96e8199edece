//! Truncated Taylor expansions with arbitrary-precision float coefficients.
//!
//! Jets carry local expansions such as `D(X) = D0 + D2 X^2 + D3 X^3 + ...`
//! around a singular point, and double as forward-mode derivatives when a
//! jet of length 2 is pushed through a formula.

use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::Float;

#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    c: Vec<Float>,
}

impl Jet {
    pub fn from_coeffs(c: Vec<Float>) -> Self {
        assert!(!c.is_empty());
        Jet { c }
    }

    pub fn constant(v: Float, len: usize) -> Self {
        let p = v.prec();
        let mut c = vec![Float::new(p); len];
        c[0] = v;
        Jet { c }
    }

    /// `v + e` where `e` is the expansion variable.
    pub fn var(v: Float, len: usize) -> Self {
        let p = v.prec();
        let mut j = Jet::constant(v, len);
        if len > 1 {
            j.c[1] = Float::with_val(p, 1);
        }
        j
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn prec(&self) -> u32 {
        self.c[0].prec()
    }

    pub fn coeff(&self, k: usize) -> Float {
        self.c.get(k).cloned().unwrap_or_else(|| Float::new(self.prec()))
    }

    pub fn coeffs(&self) -> &[Float] {
        &self.c
    }

    pub fn value(&self) -> &Float {
        &self.c[0]
    }

    pub fn set_coeff(&mut self, k: usize, v: Float) {
        self.c[k] = v;
    }

    fn zeros(&self, len: usize) -> Vec<Float> {
        vec![Float::new(self.prec()); len]
    }

    pub fn add_c(&self, v: &Float) -> Jet {
        let mut j = self.clone();
        j.c[0] += v;
        j
    }

    pub fn add_i(&self, v: i64) -> Jet {
        let mut j = self.clone();
        j.c[0] += v;
        j
    }

    pub fn mul_c(&self, v: &Float) -> Jet {
        Jet { c: self.c.iter().map(|a| Float::with_val(a.prec(), a * v)).collect() }
    }

    pub fn mul_i(&self, v: i64) -> Jet {
        Jet { c: self.c.iter().map(|a| Float::with_val(a.prec(), a * v)).collect() }
    }

    /// Multiplication by the rational `num / den`.
    pub fn mul_q(&self, num: i64, den: i64) -> Jet {
        Jet { c: self.c.iter().map(|a| Float::with_val(a.prec(), a * num) / den).collect() }
    }

    pub fn recip(&self) -> Jet {
        let n = self.len();
        let mut r = self.zeros(n);
        r[0] = Float::with_val(self.prec(), self.c[0].recip_ref());
        for k in 1..n {
            let mut s = Float::new(self.prec());
            for j in 1..=k {
                s += &self.c[j] * &r[k - j];
            }
            r[k] = -s / &self.c[0];
        }
        Jet { c: r }
    }

    pub fn div(&self, rhs: &Jet) -> Jet {
        self * &rhs.recip()
    }

    pub fn exp(&self) -> Jet {
        let n = self.len();
        let mut r = self.zeros(n);
        r[0] = Float::with_val(self.prec(), self.c[0].exp_ref());
        for k in 1..n {
            let mut s = Float::new(self.prec());
            for j in 1..=k {
                s += Float::with_val(self.prec(), &self.c[j] * &r[k - j]) * j as u32;
            }
            r[k] = s / k as u32;
        }
        Jet { c: r }
    }

    pub fn ln(&self) -> Jet {
        let n = self.len();
        let mut r = self.zeros(n);
        r[0] = Float::with_val(self.prec(), self.c[0].ln_ref());
        // a L' = a'
        for k in 1..n {
            let mut s = Float::with_val(self.prec(), &self.c[k] * k as u32);
            for j in 1..k {
                s -= Float::with_val(self.prec(), &r[j] * &self.c[k - j]) * j as u32;
            }
            r[k] = s / &self.c[0] / k as u32;
        }
        Jet { c: r }
    }

    pub fn sqrt(&self) -> Jet {
        let p = self.prec();
        let root = Float::with_val(p, self.c[0].sqrt_ref());
        // sqrt(a) = sqrt(a0) exp(log(a/a0)/2) keeps everything real for a0 > 0
        let unit = self.mul_c(&Float::with_val(p, self.c[0].recip_ref()));
        let mut l = unit.ln();
        l.c[0] = Float::new(p);
        l.mul_q(1, 2).exp().mul_c(&root)
    }

    /// `self^e` for real `e`, needs a positive constant term.
    pub fn powf(&self, e: &Float) -> Jet {
        let p = self.prec();
        let lead = Float::with_val(p, self.c[0].clone().pow(e));
        let unit = self.mul_c(&Float::with_val(p, self.c[0].recip_ref()));
        let mut l = unit.ln();
        l.c[0] = Float::new(p);
        l.mul_c(e).exp().mul_c(&lead)
    }

    pub fn powi(&self, e: u32) -> Jet {
        let mut r = Jet::constant(Float::with_val(self.prec(), 1), self.len());
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// `self(inner)` where the constant term of `inner` is ignored.
    pub fn compose(&self, inner: &Jet) -> Jet {
        let n = self.len().min(inner.len());
        let mut t = inner.clone();
        t.c.truncate(n);
        t.c[0] = Float::new(self.prec());
        let mut r = Jet::constant(Float::new(self.prec()), n);
        for a in self.c[..n].iter().rev() {
            r = (&r * &t).add_c(a);
        }
        r
    }

    /// Compositional inverse of a jet with zero constant term and nonzero
    /// linear term.
    pub fn revert(&self) -> Jet {
        let n = self.len();
        let p = self.prec();
        let a1 = Float::with_val(p, self.c[1].recip_ref());
        let mut b = Jet::constant(Float::new(p), n);
        b.c[1] = a1.clone();
        let mut id = Jet::constant(Float::new(p), n);
        id.c[1] = Float::with_val(p, 1);
        // each pass corrects one more coefficient
        for _ in 0..n {
            let e = &self.compose(&b) - &id;
            b = &b - &e.mul_c(&a1);
        }
        b
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let n = self.len().min(rhs.len());
        Jet { c: (0..n).map(|k| Float::with_val(self.prec(), &self.c[k] + &rhs.c[k])).collect() }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let n = self.len().min(rhs.len());
        Jet { c: (0..n).map(|k| Float::with_val(self.prec(), &self.c[k] - &rhs.c[k])).collect() }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.len().min(rhs.len());
        let mut r = self.zeros(n);
        for i in 0..n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                r[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        Jet { c: r }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { c: self.c.iter().map(|a| Float::with_val(a.prec(), -a)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Jet> for Jet {
            type Output = Jet;
            fn $m(self, rhs: &Jet) -> Jet {
                (&self).$m(rhs)
            }
        }
        impl $tr<Jet> for &Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}
