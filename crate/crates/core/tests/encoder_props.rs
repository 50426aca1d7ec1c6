mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use common::{ints, strategy};
use subcf::stream::Periodic;
use subcf::{
    decode_rational, encode_rational, eval_finite_scf, remnant, sequence_remnant, Rational,
    SNumber, TermSource,
};

proptest! {
    #[test]
    fn terminates_within_denominator(x in strategy::rational(1_000)) {
        let t = encode_rational(&x);
        prop_assert!(t.prefix().len() <= x.denom().to_usize().unwrap());
    }

    #[test]
    fn prefix_evaluates_back(x in strategy::rational(1_000_000)) {
        let t = encode_rational(&x);
        prop_assert_eq!(eval_finite_scf(t.prefix(), &Rational::one()).unwrap(), x);
    }

    #[test]
    fn later_quotients_at_least_two(x in strategy::rational(1_000_000)) {
        let t = encode_rational(&x);
        let two = BigInt::from(2);
        prop_assert!(t.prefix()[1..].iter().all(|s| s >= &two));
        // canonical: no trailing 2 on a prefix longer than one
        prop_assert!(t.prefix().len() == 1 || t.prefix().last() != Some(&two));
    }

    #[test]
    fn remnants_intertwine(x in strategy::rational(100_000), n in 0usize..=10) {
        let shifted = sequence_remnant(SNumber::RationalTail(encode_rational(&x)), n).unwrap();
        let want = encode_rational(&remnant(&x, n));
        prop_assert_eq!(shifted.as_rational_tail(), Some(&want));
    }

    #[test]
    fn generator_with_two_tail_matches_encoding(t in strategy::tail(20), extra in 1usize..10) {
        let s = SNumber::generator(Periodic::new(t.prefix().to_vec(), ints(&[2])));
        let mut qs = s.into_quotients();
        let encoded = encode_rational(&decode_rational(&t));
        for i in 0..t.prefix().len() + extra {
            prop_assert_eq!(qs.pull().unwrap(), encoded.quotient(i));
        }
    }
}

#[test]
fn remnant_one_is_fixed() {
    assert_eq!(remnant(&Rational::one(), 5), Rational::one());
}
