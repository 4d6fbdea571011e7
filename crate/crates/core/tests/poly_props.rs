mod common;

use common::*;
use orext::poly::{kronecker_factor, rational_linear_factors};
use orext::{Poly, Rational};
use proptest::prelude::*;

proptest! {
    #[test]
    fn divrem_round_trip(a in poly_upto(7), b in poly_upto(4)) {
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn affine_composition_law(p in poly_upto(5), a in nonzero_rational(), b in small_rational(),
                              a2 in nonzero_rational(), b2 in small_rational()) {
        let (a, b, a2, b2) = (q().from_rational(a), q().from_rational(b), q().from_rational(a2), q().from_rational(b2));
        let twice = p.compose_affine(&a, &b).unwrap().compose_affine(&a2, &b2).unwrap();
        let once = p.compose_affine(&(&a * &a2), &(&(&a * &b2) + &b)).unwrap();
        prop_assert_eq!(twice, once);
        prop_assert_eq!(p.compose_affine(&qe(1), &qe(0)).unwrap(), p);
    }

    #[test]
    fn derivative_linear_and_leibniz(a in poly_upto(5), b in poly_upto(5), c in small_rational()) {
        let c = q().from_rational(c);
        prop_assert_eq!((&a + &b.scale(&c)).derivative(1), &a.derivative(1) + &b.derivative(1).scale(&c));
        prop_assert_eq!((&a * &b).derivative(1), &(&a.derivative(1) * &b) + &(&a * &b.derivative(1)));
    }

    #[test]
    fn linear_factor_multiplicities(roots in prop::collection::vec((-4i64..=4, 1u32..=3), 1..=3), rest in poly_upto(2)) {
        let mut p = if rest.is_zero() { Poly::one(&q()) } else { rest };
        for (r, m) in &roots {
            p = &p * &ints(&[-r, 1]).pow(*m);
        }
        let lf = rational_linear_factors(&p).unwrap();
        for (r, m) in &lf.roots {
            let lin = Poly::from_rationals(&q(), [-r.clone(), Rational::from_integer(1.into())]);
            prop_assert!(lin.pow(*m).divides(&p));
            prop_assert!(!lin.pow(*m + 1).divides(&p));
        }
        let rebuilt = lf.roots.iter().fold(lf.cofactor.clone(), |acc, (r, m)| {
            &acc * &Poly::from_rationals(&q(), [-r.clone(), Rational::from_integer(1.into())]).pow(*m)
        });
        prop_assert_eq!(rebuilt, p);
    }
}

/// No small integer root, and for degree ≥ 4 no monic quadratic factor with
/// small integer coefficients.
fn spot_check_irreducible(p: &Poly) {
    let d = p.degree().unwrap();
    if d == 1 {
        return;
    }
    for r in -20i64..=20 {
        assert!(!p.eval(&qe(r)).is_zero(), "{p} has root {r}");
    }
    if d >= 4 {
        for b in -6i64..=6 {
            for c in -6i64..=6 {
                let quad = ints(&[c, b, 1]);
                assert!(quad == *p || !quad.divides(p), "{quad} divides {p}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn kronecker_reconstructs(factors in prop::collection::vec(prop_oneof![
            (-3i64..=3).prop_map(|r| ints(&[-r, 1])),
            (1i64..=3).prop_map(|c| ints(&[c, 0, 1])),
            Just(ints(&[1, 1, 1])),
            Just(ints(&[-2, 0, 0, 1])),
        ], 1..=3), content in nonzero_rational()) {
        let p = factors.iter().fold(Poly::constant(&q().from_rational(content)), |acc, f| &acc * f);
        prop_assume!(p.degree().unwrap() <= 8);
        let fac = kronecker_factor(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        for (f, _) in &fac.factors {
            prop_assert!(f.is_monic());
            spot_check_irreducible(f);
        }
    }
}

#[test]
fn rational_roots_of_random_products() {
    let mut rng = rng(7);
    for _ in 0..50 {
        let r = random_rational(&mut rng, 6);
        let p = &Poly::from_rationals(&q(), [-r.clone(), Rational::from_integer(1.into())]) * &random_poly(&mut rng, 2, 5);
        let lf = rational_linear_factors(&p).unwrap();
        assert!(lf.roots.iter().any(|(s, _)| *s == r));
    }
}
