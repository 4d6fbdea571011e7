mod common;

use common::*;
use orext::eigen::{eigenform, eigengroup, eigengroup_closure, EigenGroupKind};
use orext::Poly;
use proptest::prelude::*;

/// Sparse monic polynomials in (x − ν)^k, so that nontrivial eigenorders
/// actually occur.
fn structured_monic() -> impl Strategy<Value = Poly> {
    (1usize..=3, 0usize..=2, 1usize..=3, prop::collection::vec(small_rational(), 3), small_rational()).prop_map(
        |(k, s, e, low, nu)| {
            let shift = Poly::from_rationals(&q(), [-nu, orext::scalar::rational::int(1)]);
            let inner = shift.pow(k as u32);
            let mut g = low[..e.min(3)].to_vec();
            g.push(orext::scalar::rational::int(1));
            let g = Poly::from_rationals(&q(), g);
            &shift.pow(s as u32) * &g.compose(&inner)
        },
    )
}

proptest! {
    #[test]
    fn eigenform_round_trip(f in prop_oneof![(1usize..=10).prop_flat_map(monic_of_degree), structured_monic()]) {
        prop_assume!(f.degree().unwrap() >= 1);
        let form = eigenform(&f).unwrap();
        prop_assert_eq!(form.reconstruct(), f.monic());
        prop_assert_eq!(form.degree(), f.degree().unwrap());
        prop_assert!(form.g.is_monic());
        if form.n > 0 {
            prop_assert!(!form.g.coeff(0).is_zero());
        }
    }

    #[test]
    fn eigenorder_is_maximal(f in structured_monic()) {
        let d = f.degree().unwrap();
        let form = eigenform(&f).unwrap();
        prop_assume!(form.n > 0);
        let centered = f.monic().compose_affine(&qe(1), &form.nu).unwrap().shift_down(form.s);
        for m in (form.n + 1)..=(d - form.s) {
            if m % form.n == 0 && (d - form.s) % m == 0 {
                let in_x_m = centered.coeffs().iter().enumerate().all(|(i, c)| c.is_zero() || i % m == 0);
                prop_assert!(!in_x_m, "quotient is a polynomial in x^{}", m);
            }
        }
    }

    #[test]
    fn generator_scales_f(f in structured_monic()) {
        let group = eigengroup_closure(&f).unwrap();
        let fe = f.embed(&group.field).unwrap();
        let lambdas: Vec<_> = match group.kind {
            EigenGroupKind::Torus => [qe(2), qe(3), qr(1, 2), qe(-1), qe(7)].to_vec(),
            _ => group.generator_lambda.iter().cloned().collect(),
        };
        for l in lambdas {
            let l = l.embed(&group.field).unwrap();
            let image = fe.compose_affine(&l, &group.translation_for(&l)).unwrap();
            prop_assert_eq!(image, fe.scale(&l.pow(group.s as u64)));
            // λ^s = λ^d on the eigengroup
            if group.kind != EigenGroupKind::Torus {
                prop_assert_eq!(l.pow(group.s as u64), l.pow(fe.degree().unwrap() as u64));
            }
        }
    }

    #[test]
    fn rational_order_divides_closure_order(f in structured_monic()) {
        let over_q = eigengroup(&f, &q()).unwrap();
        let closure = eigengroup_closure(&f).unwrap();
        match (over_q.cardinality(), closure.cardinality()) {
            (Some(a), Some(b)) => prop_assert_eq!(b % a, 0),
            (None, None) => {}
            other => prop_assert!(false, "mismatched kinds {:?}", other),
        }
    }
}

#[test]
fn brute_force_orders_match_divisors_of_n() {
    let mut rng = rng(11);
    let mut polys = corpus();
    for _ in 0..40 {
        let k = 1 + (polys.len() % 3);
        let e = 1 + (polys.len() % 2);
        let g = random_monic(&mut rng, e, 4);
        let shift = ints(&[0, 1]);
        let f = &shift.pow((polys.len() % 2) as u32) * &g.compose(&shift.pow(k as u32));
        if f.degree().unwrap() <= 8 {
            polys.push(f);
        }
    }
    for f in polys {
        let form = eigenform(&f).unwrap();
        if form.is_single_root() {
            continue;
        }
        let expected: Vec<u32> = (2..=f.degree().unwrap() as u32)
            .filter(|m| form.n as u32 % m == 0)
            .collect();
        assert_eq!(brute_force_eigen_orders(&f), expected, "f = {f}");
    }
}
