mod common;

use common::*;
use orext::scalar::{cyclotomic_polynomial, element_of_order};
use orext::{FieldDescriptor, Poly};
use proptest::prelude::*;

proptest! {
    #[test]
    fn field_axioms((a, b, c) in field_strategy().prop_flat_map(|k| (element_in(k.clone()), element_in(k.clone()), element_in(k)))) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            let one = a.field().one();
            prop_assert_eq!(&a * &one.checked_div(&a).unwrap(), one.clone());
            prop_assert_eq!(&a * &a.inv().unwrap(), one);
        }
    }
}

#[test]
fn element_of_order_has_exact_order() {
    for k in [1u32, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 24] {
        let field = FieldDescriptor::cyclotomic(k).unwrap();
        let l = field.roots_of_unity_order();
        for m in (1..=l).filter(|m| l % m == 0) {
            let z = element_of_order(&field, m).unwrap();
            assert!(z.pow(m as u64).is_one(), "k={k} m={m}");
            for j in 1..m {
                assert!(!z.pow(j as u64).is_one(), "k={k} m={m} j={j}");
            }
        }
        assert!(element_of_order(&field, 2 * l).is_err());
    }
}

#[test]
fn cyclotomic_products() {
    let q = FieldDescriptor::rational();
    for k in 1..=30u32 {
        let prod = (1..=k)
            .filter(|d| k % d == 0)
            .fold(Poly::one(&q), |acc, d| &acc * &cyclotomic_polynomial(d));
        let mut c = vec![0i64; k as usize + 1];
        c[0] = -1;
        c[k as usize] = 1;
        assert_eq!(prod, ints(&c), "k={k}");
    }
}
