//! Series solvers: Newton iteration for polynomial relations and
//! coefficient-by-coefficient iteration for contracting maps.

use super::{Coeff, TruncatedSeries};
use crate::error::{Error, Result};

/// Polynomial relation `P(S, x) = sum_k a_k(x) S^k` with series coefficients.
#[derive(Clone, Debug)]
pub struct AlgebraicRelation<C: Coeff> {
    coeffs: Vec<TruncatedSeries<C>>,
}

impl<C: Coeff> AlgebraicRelation<C> {
    /// `coeffs[k]` is the coefficient of `S^k`.
    pub fn new(coeffs: Vec<TruncatedSeries<C>>) -> Self {
        assert!(!coeffs.is_empty());
        AlgebraicRelation { coeffs }
    }

    /// Relation whose coefficients do not depend on `x`, plus `-rhs`:
    /// `sum_k poly[k] S^k - rhs(x)`.
    pub fn polynomial_equals(poly: &[C], rhs: &TruncatedSeries<C>) -> Self {
        let n = rhs.order();
        let mut coeffs: Vec<TruncatedSeries<C>> =
            poly.iter().map(|c| TruncatedSeries::constant(c.clone(), n)).collect();
        coeffs[0] = &coeffs[0] - rhs;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `P(s, x)` truncated to the order of `s`.
    pub fn eval(&self, s: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let n = s.order();
        let mut acc = TruncatedSeries::zero(n);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * s) + &a.truncate(n);
        }
        acc
    }

    /// `dP/dS (s, x)`.
    pub fn eval_ds(&self, s: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let n = s.order();
        let mut acc = TruncatedSeries::zero(n);
        for (k, a) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = &(&acc * s) + &a.truncate(n).scale_int(k as i64);
        }
        acc
    }

    fn eval_const(&self, s0: &C, ds: bool) -> C {
        let mut acc = C::zero();
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if ds && k == 0 {
                break;
            }
            let c = if ds { a.constant_term().scaled(&rug::Rational::from(k)) } else { a.constant_term().clone() };
            acc = acc.times(s0).plus(&c);
        }
        acc
    }
}

/// The series root `S` of `P(S, x) = 0` with `S(0) = s0`, to order `n`.
///
/// Newton's method doubles the number of correct coefficients per step.
pub fn solve_algebraic<C: Coeff>(p: &AlgebraicRelation<C>, s0: C, n: usize) -> Result<TruncatedSeries<C>> {
    if !p.eval_const(&s0, false).is_zero() {
        return Err(Error::NoRoot);
    }
    if p.eval_const(&s0, true).inverse().is_none() {
        return Err(Error::SingularJacobian);
    }
    let mut s = TruncatedSeries::constant(s0, 0);
    let mut known = 1;
    while known < n + 1 {
        known = (2 * known).min(n + 1);
        let cur = s.truncate(known - 1);
        let step = p.eval(&cur).div(&p.eval_ds(&cur))?;
        s = &cur - &step;
    }
    Ok(s.truncate(n))
}

/// Fixed point of `phi` with the constant term of `init`, to order `n`.
///
/// Pass `k` feeds the current approximation, known to order `k - 1`, through
/// `phi` at order `k`. The map must not alter the coefficients already fixed;
/// if it does, it is not a contraction and [`Error::NoContraction`] results.
/// The final pass re-checks that the result is reproduced exactly.
pub fn solve_fixed_point<C, F>(phi: F, init: &TruncatedSeries<C>, n: usize) -> Result<TruncatedSeries<C>>
where
    C: Coeff,
    F: Fn(&TruncatedSeries<C>) -> Result<TruncatedSeries<C>>,
{
    let mut out = solve_fixed_point_system(|v| Ok(vec![phi(&v[0])?]), std::slice::from_ref(init), n)?;
    Ok(out.pop().expect("one component"))
}

/// Joint fixed point of a map on several series at once.
pub fn solve_fixed_point_system<C, F>(phi: F, init: &[TruncatedSeries<C>], n: usize) -> Result<Vec<TruncatedSeries<C>>>
where
    C: Coeff,
    F: Fn(&[TruncatedSeries<C>]) -> Result<Vec<TruncatedSeries<C>>>,
{
    let mut cur: Vec<TruncatedSeries<C>> = init.iter().map(|s| s.truncate(0)).collect();
    for k in 0..=n + 1 {
        let order = k.min(n);
        let padded: Vec<TruncatedSeries<C>> = cur.iter().map(|s| s.truncate(order)).collect();
        let next = phi(&padded)?;
        if next.len() != padded.len() {
            return Err(Error::NoContraction { order });
        }
        let fixed = k.clamp(1, n + 1);
        for (a, b) in next.iter().zip(&padded) {
            if a.order() < order || a.coeffs()[..fixed] != b.coeffs()[..fixed] {
                return Err(Error::NoContraction { order });
            }
        }
        cur = next.into_iter().map(|s| s.truncate(order)).collect();
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use rug::{Integer, Rational};

    use super::*;
    use crate::series::RationalSeries;

    fn ints(s: &RationalSeries) -> Vec<Rational> {
        s.coeffs().to_vec()
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn theta_from_the_quartic() {
        // S (1 - S)^3 - x = S - 3 S^2 + 3 S^3 - S^4 - x
        let n = 4;
        let p = AlgebraicRelation::polynomial_equals(&[r(0), r(1), r(-3), r(3), r(-1)], &RationalSeries::var(n));
        let theta = solve_algebraic(&p, Rational::new(), n).unwrap();
        assert_eq!(ints(&theta), vec![r(0), r(1), r(3), r(15), r(91)]);
    }

    #[test]
    fn theta_matches_lagrange_inversion_far_out() {
        let n = 25;
        let p = AlgebraicRelation::polynomial_equals(&[r(0), r(1), r(-3), r(3), r(-1)], &RationalSeries::var(n));
        let theta = solve_algebraic(&p, Rational::new(), n).unwrap();
        for k in 1..=n as u32 {
            let lagrange = Integer::from(Integer::binomial_u(4 * k - 2, k - 1)) / k;
            assert_eq!(theta.coeff(k as usize), Rational::from(lagrange));
        }
        assert!(p.eval(&theta).is_zero());
    }

    #[test]
    fn identity_relation() {
        let p = AlgebraicRelation::polynomial_equals(&[r(0), r(1)], &RationalSeries::var(5));
        assert_eq!(solve_algebraic(&p, Rational::new(), 5).unwrap(), RationalSeries::var(5));
    }

    #[test]
    fn branch_point_is_singular() {
        let p = AlgebraicRelation::polynomial_equals(&[r(0), r(0), r(1)], &RationalSeries::var(5));
        assert_eq!(solve_algebraic(&p, Rational::new(), 5), Err(Error::SingularJacobian));
    }

    #[test]
    fn wrong_start_is_not_a_root() {
        let p = AlgebraicRelation::polynomial_equals(&[r(0), r(1)], &RationalSeries::var(5));
        assert_eq!(solve_algebraic(&p, r(1), 5), Err(Error::NoRoot));
    }

    #[test]
    fn geometric_fixed_point() {
        let n = 8;
        let s = solve_fixed_point(|s| Ok((RationalSeries::var(s.order()) * s).add_int(1)), &RationalSeries::one(n), n)
            .unwrap();
        assert_eq!(s, RationalSeries::from_fn(n, |_| r(1)));
    }

    #[test]
    fn rooted_trees() {
        let n = 10;
        let t =
            solve_fixed_point(|s| Ok(RationalSeries::var(s.order()) * s.exp()?), &RationalSeries::zero(n), n).unwrap();
        let counts = t.extract_counts().unwrap();
        for k in 1..=n as u32 {
            assert_eq!(counts[k as usize], Integer::from(Integer::u_pow_u(k, k - 1)), "n = {k}");
        }
    }

    #[test]
    fn translation_has_no_fixed_point() {
        let res = solve_fixed_point(|s| Ok(s + &RationalSeries::var(s.order())), &RationalSeries::zero(6), 6);
        assert!(matches!(res, Err(Error::NoContraction { .. })));
    }
}
