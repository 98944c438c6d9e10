//! Property tests for the exact scalar layer.

use proptest::prelude::*;

use rearrange_core::{Permutation, Rational};

fn big_rational() -> impl Strategy<Value = Rational> {
    (any::<i128>(), any::<i128>().prop_filter("nonzero", |d| *d != 0)).prop_map(|(n, d)| {
        let r: Rational = format!("{n}/{d}").parse().expect("well-formed");
        r
    })
}

proptest! {
    #[test]
    fn add_sub_round_trip(a in big_rational(), b in big_rational()) {
        prop_assert_eq!((&a + &b) - &b, a);
    }

    #[test]
    fn mul_div_round_trip(a in big_rational(), b in big_rational()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b) / &b, a);
    }

    #[test]
    fn serialization_round_trip(a in big_rational()) {
        let text = a.to_string();
        let back: Rational = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        // normalized form: positive denominator, reduced
        prop_assert!(back.denom().sign() != num::bigint::Sign::Minus);
        prop_assert!(num::Integer::gcd(back.numer(), back.denom()) == num::BigInt::from(1)
            || back.is_zero());
    }

    #[test]
    fn permutation_display_parse_round_trip(shuffle in proptest::collection::vec(0u8..8, 1..8)) {
        // build a permutation from a sequence of swaps
        let n = shuffle.len();
        let mut image: Vec<u32> = (1..=n as u32).collect();
        for (i, s) in shuffle.iter().enumerate() {
            image.swap(i, (*s as usize) % n);
        }
        let p = Permutation::from_image(image).unwrap();
        let back: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }
}
