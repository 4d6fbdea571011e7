#![allow(dead_code)]

use num_bigint::BigInt;
use orext::scalar::rational::rat;
use orext::{FieldDescriptor, FieldElement, OreAlgebra, OreElement, Poly, Rational, RationalFunction};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn q() -> FieldDescriptor {
    FieldDescriptor::rational()
}

pub fn qe(n: i64) -> FieldElement {
    q().from_i64(n)
}

pub fn qr(n: i64, d: i64) -> FieldElement {
    q().from_rational(rat(n, d))
}

pub fn ints(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng, height: i64) -> Rational {
    let n = rng.gen_range(-height..=height);
    let d = rng.gen_range(1..=height);
    rat(n, d)
}

pub fn random_nonzero_rational(rng: &mut impl Rng, height: i64) -> Rational {
    loop {
        let r = random_rational(rng, height);
        if r != Rational::from_integer(BigInt::from(0)) {
            return r;
        }
    }
}

/// Degree exactly `deg` (nonzero leading coefficient).
pub fn random_poly(rng: &mut impl Rng, deg: usize, height: i64) -> Poly {
    let mut c: Vec<Rational> = (0..deg).map(|_| random_rational(rng, height)).collect();
    c.push(random_nonzero_rational(rng, height));
    Poly::from_rationals(&q(), c)
}

pub fn random_monic(rng: &mut impl Rng, deg: usize, height: i64) -> Poly {
    random_poly(rng, deg, height).monic()
}

/// Random element of `field` with small rational coordinates.
pub fn random_element(rng: &mut impl Rng, field: &FieldDescriptor, height: i64) -> FieldElement {
    let coords = (0..field.degree()).map(|_| random_rational(rng, height)).collect();
    FieldElement::from_coords(field, coords)
}

pub fn random_field_poly(rng: &mut impl Rng, field: &FieldDescriptor, max_deg: usize, height: i64) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new(field, (0..=deg).map(|_| random_element(rng, field, height)).collect())
}

/// x-degree ≤ `xd`, y-degree ≤ `yd`, possibly zero.
pub fn random_ore(rng: &mut impl Rng, algebra: &OreAlgebra, xd: usize, yd: usize) -> OreElement {
    let ylen = rng.gen_range(0..=yd + 1);
    let terms = (0..ylen)
        .map(|_| {
            let d = rng.gen_range(0..=xd);
            random_poly(rng, d, 5)
        })
        .collect();
    algebra.element(terms)
}

pub fn random_ratfun(rng: &mut impl Rng, max_deg: usize) -> RationalFunction {
    let (dn, dd) = (rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg));
    let num = random_poly(rng, dn, 5);
    let den = random_poly(rng, dd, 5);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

pub fn corpus() -> Vec<Poly> {
    [
        &[0, 0, 1][..],
        &[0, -1, 0, 1],
        &[0, 1, 1],
        &[0, 0, 1, 0, 1],
        &[-1, 0, 0, 1],
        &[0, 0, 1, 1],
        &[0, 0, 0, 1, 0, 0, 1],
        &[0, -1, 0, 0, 0, 1],
    ]
    .iter()
    .map(|c| ints(c))
    .collect()
}

prop_compose! {
    pub fn small_rational()(n in -9i64..=9, d in 1i64..=5) -> Rational {
        rat(n, d)
    }
}

prop_compose! {
    pub fn nonzero_rational()(n in prop_oneof![-9i64..=-1, 1i64..=9], d in 1i64..=5) -> Rational {
        rat(n, d)
    }
}

prop_compose! {
    pub fn poly_upto(max_deg: usize)(c in prop::collection::vec(small_rational(), 0..=max_deg + 1)) -> Poly {
        Poly::from_rationals(&q(), c)
    }
}

prop_compose! {
    pub fn monic_of_degree(deg: usize)(c in prop::collection::vec(small_rational(), deg)) -> Poly {
        let mut c = c;
        c.push(rat(1, 1));
        Poly::from_rationals(&q(), c)
    }
}

pub fn field_strategy() -> impl Strategy<Value = FieldDescriptor> {
    prop_oneof![Just(1u32), Just(3), Just(4), Just(5), Just(8), Just(12)]
        .prop_map(|k| FieldDescriptor::cyclotomic(k).unwrap())
}

pub fn element_in(field: FieldDescriptor) -> impl Strategy<Value = FieldElement> {
    prop::collection::vec(small_rational(), field.degree())
        .prop_map(move |c| FieldElement::from_coords(&field, c))
}

/// The set of m ∈ 2..=d for which x ↦ λ_m x + (1 − λ_m)ν, λ_m a primitive
/// m-th root of unity in ℚ(ζ_m), scales f. Computed by direct expansion.
pub fn brute_force_eigen_orders(f: &Poly) -> Vec<u32> {
    let d = f.degree().unwrap();
    let lc = f.coeff(d);
    let nu = -(&f.coeff(d - 1) / &(&lc * &qe(d as i64)));
    (2..=d as u32)
        .filter(|&m| {
            let field = FieldDescriptor::cyclotomic(m).unwrap();
            let lambda = if m == 2 { -field.one() } else { field.zeta() };
            let nu = nu.embed(&field).unwrap();
            let mu = &(&field.one() - &lambda) * &nu;
            let fe = f.embed(&field).unwrap();
            let image = fe.compose_affine(&lambda, &mu).unwrap();
            let c = &image.coeff(d) / &fe.coeff(d);
            image == fe.scale(&c)
        })
        .collect()
}
