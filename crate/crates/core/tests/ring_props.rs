use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use fermifock::{LaurentPoly, Monomial, RingElem};

fn elem() -> impl Strategy<Value = RingElem> {
    prop::collection::vec((-4i64..=4, -4i64..=4, -6i64..=6, 1i64..=3), 0..5).prop_map(|terms| {
        let mut x = RingElem::zero();
        for (u, v, n, d) in terms {
            x.add_term(
                Monomial::new(u, v),
                BigRational::new(BigInt::from(n), BigInt::from(d)),
            );
        }
        x
    })
}

fn cfg() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RingElem::one(), a.clone());
        prop_assert_eq!(&a + &RingElem::zero(), a.clone());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in elem(), b in elem()) {
        prop_assert_eq!((&a + &b).specialize(), &a.specialize() + &b.specialize());
        prop_assert_eq!((&a * &b).specialize(), &a.specialize() * &b.specialize());
    }

    #[test]
    fn text_round_trip(a in elem()) {
        let back: RingElem = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn invert_vars_is_an_involution(a in elem(), b in elem()) {
        prop_assert_eq!(a.invert_vars().invert_vars(), a.clone());
        prop_assert_eq!((&a * &b).invert_vars(), &a.invert_vars() * &b.invert_vars());
    }
}

#[test]
fn specialization_sends_rs_to_one() {
    let rs = RingElem::monomial(Monomial::rs(1, 1));
    assert_eq!(rs.specialize(), LaurentPoly::one());
}
