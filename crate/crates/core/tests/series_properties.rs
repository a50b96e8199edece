use minorfree::series::{solve_algebraic, solve_fixed_point, AlgebraicRelation, Coeff, MarkerPoly, RationalSeries};
use proptest::prelude::*;
use rug::Rational;

const ORDER: usize = 20;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::from((n, d)))
}

fn series() -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec(rational(), ORDER + 1).prop_map(RationalSeries::new)
}

/// Series with constant term `c`.
fn series_with_constant(c: i64) -> impl Strategy<Value = RationalSeries> {
    series().prop_map(move |mut s| {
        s.set_coeff(0, Rational::from(c));
        s
    })
}

fn marker_poly() -> impl Strategy<Value = MarkerPoly> {
    prop::collection::vec(prop::collection::vec(rational(), 3), 3).prop_map(|c| MarkerPoly::from_y_poly(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a + &b) - &b).agrees_with(&a));
    }

    #[test]
    fn division_undoes_multiplication(a in series(), b in series_with_constant(3)) {
        prop_assert_eq!((&a * &b).div(&b).unwrap(), a);
    }

    #[test]
    fn exp_log_roundtrip(a in series_with_constant(0), b in series_with_constant(1)) {
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
        prop_assert_eq!(b.log().unwrap().exp().unwrap(), b);
    }

    #[test]
    fn exp_turns_sums_into_products(a in series_with_constant(0), b in series_with_constant(0)) {
        prop_assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
    }

    #[test]
    fn derivative_primitive_roundtrip(a in series(), c in rational()) {
        let p = a.primitive(c.clone());
        prop_assert_eq!(p.coeff(0), c);
        prop_assert!(p.derivative().agrees_with(&a));
    }

    #[test]
    fn reversion_is_an_inverse(a in series_with_constant(0), lead in 1i64..5) {
        let mut f = a;
        f.set_coeff(1, Rational::from(lead));
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), RationalSeries::var(ORDER));
    }

    #[test]
    fn algebraic_solution_resubstitutes(c0 in series(), c2 in series()) {
        // S = x (c0 + S + c2 S^2), rewritten as x c0 + (x - 1) S + x c2 S^2 = 0
        let x = RationalSeries::var(ORDER);
        let rel = AlgebraicRelation::new(vec![&x * &c0, x.add_int(-1), &x * &c2]);
        let s = solve_algebraic(&rel, Rational::new(), ORDER).unwrap();
        prop_assert!(rel.eval(&s).is_zero());
    }

    #[test]
    fn fixed_point_resubstitutes(k in series()) {
        // S = x exp(k S)
        let phi = |s: &RationalSeries| Ok((&k.truncate(s.order()) * s).exp()?.shift_up(1).truncate(s.order()));
        let s = solve_fixed_point(phi, &RationalSeries::zero(ORDER), ORDER).unwrap();
        prop_assert_eq!(phi(&s).unwrap(), s);
    }

    #[test]
    fn marker_ring_specializes(a in marker_poly(), b in marker_poly(), c in marker_poly()) {
        let expr = a.times(&b).minus(&c.times(&c)).plus(&a);
        let direct = a.specialize() * b.specialize() - c.specialize() * c.specialize() + a.specialize();
        prop_assert_eq!(expr.specialize(), direct);
    }

    #[test]
    fn marker_polynomials_roundtrip(a in marker_poly()) {
        let back = MarkerPoly::from_y_poly(&a.to_y_poly().unwrap());
        prop_assert_eq!(back, a);
    }
}
