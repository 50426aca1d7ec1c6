mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use common::{ints, product, strategy, Sym};
use subcf::stream::{Periodic, Table};
use subcf::{
    decode_rational, encode_rational, eval_simple_cf, simple_cf_of_rational,
    simple_to_subtraction, subtraction_to_simple, FiniteCf, SNumber, SimpleCf, StreamError,
    TermSource,
};

fn finite(cf: SimpleCf) -> FiniteCf {
    match cf {
        SimpleCf::Finite(f) => f,
        SimpleCf::Generator(_) => panic!("expected a finite expansion"),
    }
}

fn drain(mut src: impl TermSource) -> (Vec<i64>, StreamError) {
    let mut out = Vec::new();
    loop {
        match src.pull() {
            Ok(x) => out.push(x.to_i64().unwrap()),
            Err(e) => return (out, e),
        }
    }
}

fn streamed_simple(prefix: &[i64], fuel: usize) -> (Vec<i64>, StreamError) {
    let s = SNumber::generator(Table::new("s", ints(prefix)));
    match subtraction_to_simple(s, fuel).unwrap() {
        SimpleCf::Generator(g) => drain(g),
        SimpleCf::Finite(_) => panic!("generator input gave a finite expansion"),
    }
}

proptest! {
    #[test]
    fn value_preserved(x in strategy::rational(1_000_000)) {
        let s = simple_to_subtraction(SimpleCf::Finite(simple_cf_of_rational(&x)));
        prop_assert_eq!(decode_rational(s.as_rational_tail().unwrap()), x);
    }

    #[test]
    fn agrees_with_encoder(x in strategy::rational(1_000_000)) {
        let s = simple_to_subtraction(SimpleCf::Finite(simple_cf_of_rational(&x)));
        prop_assert_eq!(s.as_rational_tail(), Some(&encode_rational(&x)));
    }

    #[test]
    fn simple_round_trip(terms in strategy::simple_terms(12)) {
        let f = FiniteCf::new(ints(&terms)).unwrap();
        let s = simple_to_subtraction(SimpleCf::Finite(f.clone()));
        let back = finite(subtraction_to_simple(s, 1).unwrap());
        prop_assert_eq!(back, f);
    }

    #[test]
    fn subtraction_round_trip(t in strategy::tail(30)) {
        let f = finite(subtraction_to_simple(SNumber::RationalTail(t.clone()), 1).unwrap());
        prop_assert_eq!(eval_simple_cf(&f), decode_rational(&t));
        let s = simple_to_subtraction(SimpleCf::Finite(f));
        prop_assert_eq!(s.as_rational_tail(), Some(&t));
    }

    #[test]
    fn run_length_rule_matches_word_rewriting(p in strategy::prefix(12)) {
        let (emitted, rest) = common::subtraction_word_to_simple(&p);
        let lhs = product(p.iter().map(|&s| Sym::V(s)));
        let rhs = product(emitted.iter().map(|&e| Sym::Vdot(e)).chain(rest));
        prop_assert_eq!(lhs, rhs);

        let (streamed, _) = streamed_simple(&p, 64);
        prop_assert!(streamed.starts_with(&emitted), "{:?} vs {:?}", streamed, emitted);
        let (extended, _) = common::subtraction_word_to_simple(&[p.as_slice(), &[3, 3]].concat());
        prop_assert!(extended.starts_with(&streamed), "{:?} vs {:?}", extended, streamed);
    }

    #[test]
    fn pair_rule_matches_word_rewriting(terms in strategy::simple_terms(12)) {
        let s = simple_to_subtraction(SimpleCf::generator(Table::new("a", ints(&terms))));
        let (streamed, _) = drain(s.into_quotients());
        let (closed, _) = common::simple_word_to_subtraction(&[terms.as_slice(), &[1]].concat());
        prop_assert_eq!(streamed, closed);
    }

    #[test]
    fn long_runs_run_out_of_fuel(t in strategy::tail(20), fuel in 1usize..30) {
        // an explicit 2-tail on a generator never closes its last run
        let s = SNumber::generator(Periodic::new(t.prefix().to_vec(), ints(&[2])));
        let SimpleCf::Generator(g) = subtraction_to_simple(s, fuel).unwrap() else {
            panic!("generator input gave a finite expansion");
        };
        let (got, err) = drain(g);
        prop_assert_eq!(err, StreamError::FuelExhausted { fuel });
        // everything up to the open run is out; folding a trailing 1 gives
        // the finite expansion
        let want = finite(subtraction_to_simple(SNumber::RationalTail(t), 1).unwrap());
        prop_assert_eq!(FiniteCf::new(ints(&got)).unwrap(), want);
    }
}

#[test]
fn fuel_must_be_positive() {
    let s = SNumber::RationalTail(encode_rational(&"1/2".parse().unwrap()));
    assert!(subtraction_to_simple(s, 0).is_err());
}

#[test]
fn trailing_one_folds() {
    let f = FiniteCf::new(ints(&[2, 3, 1])).unwrap();
    assert_eq!(f.terms(), &[BigInt::from(2), BigInt::from(4)][..]);
}
