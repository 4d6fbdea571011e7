mod common;

use common::*;
use orext::weyl::{b1_commutator, embed_lambda};
use orext::{B1Automorphism, B1Operator, MobiusMatrix, OreAlgebra, OreAutomorphism, Poly, RationalFunction};
use rand::Rng;

fn random_op(rng: &mut impl Rng, order: usize) -> B1Operator {
    let n = rng.gen_range(0..=order + 1);
    B1Operator::new((0..n).map(|_| random_ratfun(rng, 2)).collect()).unwrap()
}

fn random_matrix(rng: &mut impl Rng) -> MobiusMatrix {
    loop {
        let [a, b, c, d] = [0; 4].map(|_| random_rational(rng, 4));
        if let Ok(m) = MobiusMatrix::new(a, b, c, d) {
            return m;
        }
    }
}

fn random_aut(rng: &mut impl Rng) -> B1Automorphism {
    B1Automorphism::new(random_matrix(rng), random_ratfun(rng, 2)).unwrap()
}

/// u·h for B₁ acting on ℚ(x) by differentiation.
fn act(u: &B1Operator, h: &RationalFunction) -> RationalFunction {
    let mut acc = RationalFunction::zero(&q());
    let mut cur = h.clone();
    for r in u.terms() {
        acc = &acc + &(r * &cur);
        cur = cur.derivative();
    }
    acc
}

#[test]
fn multiplication_matches_action() {
    let mut rng = rng(21);
    for _ in 0..60 {
        let (a, b, c) = (random_op(&mut rng, 2), random_op(&mut rng, 2), random_op(&mut rng, 2));
        let h = random_ratfun(&mut rng, 3);
        assert_eq!(act(&(&a * &b), &h), act(&a, &act(&b, &h)), "a={a} b={b}");
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
    assert_eq!(b1_commutator(&B1Operator::d(), &B1Operator::x()), B1Operator::one());
}

#[test]
fn automorphisms_preserve_the_relation() {
    let mut rng = rng(22);
    for _ in 0..20 {
        let s = random_aut(&mut rng);
        assert_eq!(b1_commutator(&s.image_d(), &s.image_x()), B1Operator::one(), "{:?}", s);
        let (u, v) = (random_op(&mut rng, 2), random_op(&mut rng, 2));
        assert_eq!(s.apply(&(&u * &v)).unwrap(), &s.apply(&u).unwrap() * &s.apply(&v).unwrap());
    }
}

#[test]
fn composition_is_functorial() {
    let mut rng = rng(23);
    for _ in 0..20 {
        let (s, t) = (random_aut(&mut rng), random_aut(&mut rng));
        let u = random_op(&mut rng, 2);
        let st = s.compose(&t).unwrap();
        assert_eq!(st.apply(&u).unwrap(), s.apply(&t.apply(&u).unwrap()).unwrap());
        assert_eq!(st.matrix(), &t.matrix().product(s.matrix()));
        assert!(s.compose(&s.invert().unwrap()).unwrap().is_identity());
        assert!(s.invert().unwrap().compose(&s).unwrap().is_identity());
        assert_eq!(s.invert().unwrap().apply(&s.apply(&u).unwrap()).unwrap(), u);
    }
}

#[test]
fn matrices_are_projective() {
    let mut rng = rng(24);
    for _ in 0..20 {
        let [a, b, c, d] = [0; 4].map(|_| random_rational(&mut rng, 4));
        let k = random_nonzero_rational(&mut rng, 4);
        let (Ok(m), Ok(n)) = (
            MobiusMatrix::new(a.clone(), b.clone(), c.clone(), d.clone()),
            MobiusMatrix::new(&a * &k, &b * &k, &c * &k, &d * &k),
        ) else {
            continue;
        };
        assert_eq!(m, n);
        assert!(m.product(&m.inverse()).is_identity());
    }
}

#[test]
fn embedding_is_an_injective_homomorphism() {
    let mut rng = rng(25);
    for f in corpus() {
        let alg = OreAlgebra::new(f.clone());
        let fd = embed_lambda(&alg, &alg.y()).unwrap();
        assert_eq!(
            b1_commutator(&fd, &B1Operator::x()),
            B1Operator::from_function(RationalFunction::from_poly(f.clone()))
        );
        for _ in 0..6 {
            let (a, b) = (random_ore(&mut rng, &alg, 2, 2), random_ore(&mut rng, &alg, 2, 2));
            let (ea, eb) = (embed_lambda(&alg, &a).unwrap(), embed_lambda(&alg, &b).unwrap());
            assert_eq!(embed_lambda(&alg, &(&a * &b)).unwrap(), &ea * &eb);
            assert_eq!(ea.is_zero(), a.is_zero());
            assert_eq!(ea.order(), a.y_degree());
        }
    }
}

#[test]
fn ore_automorphisms_extend() {
    let mut rng = rng(26);
    for f in [ints(&[0, 0, 1]), ints(&[0, -1, 0, 1]), ints(&[0, 0, 1, 0, 1])] {
        let alg = OreAlgebra::new(f);
        for lambda in [qe(1), qe(-1)] {
            for _ in 0..5 {
                let d = rng.gen_range(0..=2);
                let p = random_poly(&mut rng, d, 4);
                let Ok(s) = OreAutomorphism::new(&alg, lambda.clone(), qe(0), p) else {
                    continue;
                };
                let b = B1Automorphism::from_ore(&s).unwrap();
                let u = random_ore(&mut rng, &alg, 2, 2);
                assert_eq!(
                    b.apply(&embed_lambda(&alg, &u).unwrap()).unwrap(),
                    embed_lambda(&alg, &s.apply(&u).unwrap()).unwrap()
                );
            }
        }
    }
    let torus = OreAlgebra::new(Poly::from_ints(&[0, 0, 1]));
    let s = OreAutomorphism::affine(&torus, qe(3), qe(0)).unwrap();
    let b = B1Automorphism::from_ore(&s).unwrap();
    assert_eq!(b.apply(&embed_lambda(&torus, &torus.y()).unwrap()).unwrap(), embed_lambda(&torus, &s.image_y()).unwrap());
}
