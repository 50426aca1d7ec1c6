//! Lexicographic comparison of s-numbers, which realizes the order of the
//! reals they encode.

use std::cmp::Ordering;
use std::fmt;

use crate::encoder::encode_rational;
use crate::rational::Rational;
use crate::snumber::{RationalTail, SNumber};
use crate::stream::TermSource;

/// Outcome of comparing two s-numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    /// The first `n` quotients agree and no more could be inspected.
    Indistinguishable(usize),
}

impl Comparison {
    pub fn ordering(self) -> Option<Ordering> {
        match self {
            Comparison::Less => Some(Ordering::Less),
            Comparison::Equal => Some(Ordering::Equal),
            Comparison::Greater => Some(Ordering::Greater),
            Comparison::Indistinguishable(_) => None,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            other => other,
        }
    }
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

impl fmt::Display for Comparison {
    /// `<`, `=`, `>` or `?n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Less => f.write_str("<"),
            Comparison::Equal => f.write_str("="),
            Comparison::Greater => f.write_str(">"),
            Comparison::Indistinguishable(n) => write!(f, "?{n}"),
        }
    }
}

/// Compares two eventually-2 s-numbers; always decisive.
pub fn compare_tails(s: &RationalTail, t: &RationalTail) -> Ordering {
    let len = s.prefix().len().max(t.prefix().len());
    (0..len)
        .map(|i| s.quotient(i).cmp(&t.quotient(i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Scans quotients in lockstep and decides at the first difference.
///
/// Two eventually-2 s-numbers are compared completely regardless of `fuel`.
/// Otherwise at most `fuel` quotients are inspected; if they all agree, or
/// a generator stops early, the result is `Indistinguishable(n)` with `n`
/// the number of agreeing quotients.
pub fn compare(s: SNumber, t: SNumber, fuel: usize) -> Comparison {
    if let (SNumber::RationalTail(a), SNumber::RationalTail(b)) = (&s, &t) {
        return compare_tails(a, b).into();
    }
    let mut xs = s.into_quotients();
    let mut ys = t.into_quotients();
    for n in 0..fuel {
        let (x, y) = match (xs.pull(), ys.pull()) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Comparison::Indistinguishable(n),
        };
        match x.cmp(&y) {
            Ordering::Equal => continue,
            o => return o.into(),
        }
    }
    Comparison::Indistinguishable(fuel)
}

/// `compare(s, encode_rational(q), fuel)`.
pub fn compare_rational(s: SNumber, q: &Rational, fuel: usize) -> Comparison {
    compare(s, SNumber::RationalTail(encode_rational(q)), fuel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stream::{Repeat, Table};
    use num_bigint::BigInt;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn iota(x: &str) -> SNumber {
        SNumber::RationalTail(encode_rational(&q(x)))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(compare(iota("1/2"), iota("1"), 1), Comparison::Less);
        assert_eq!(compare(iota("7"), iota("7"), 1), Comparison::Equal);
        assert_eq!(compare(iota("-3/2"), iota("-2"), 1), Comparison::Greater);
        assert_eq!(compare_rational(iota("1/2"), &q("1/2"), 1), Comparison::Equal);
    }

    #[test]
    fn generator_examples() {
        let pi = || SNumber::generator(Table::new("pi", ints(&[4, 2, 2, 2, 2, 2, 2, 17, 294])));
        assert_eq!(compare(pi(), iota("355/113"), 20), Comparison::Less);
        assert_eq!(compare(iota("355/113"), pi(), 20), Comparison::Greater);
        assert_eq!(compare_rational(pi(), &q("3"), 10), Comparison::Greater);
        // not enough fuel to reach index 7
        assert_eq!(compare(pi(), iota("355/113"), 5), Comparison::Indistinguishable(5));
        // the table ends before a difference shows up
        let short = SNumber::generator(Table::new("short", ints(&[4, 2, 2])));
        assert_eq!(compare(short, iota("22/7"), 50), Comparison::Indistinguishable(3));
    }

    #[test]
    fn equal_generators_stay_indistinguishable() {
        let a = SNumber::generator(Repeat(BigInt::from(3)));
        let b = SNumber::generator(Repeat(BigInt::from(3)));
        assert_eq!(compare(a, b, 40), Comparison::Indistinguishable(40));
        assert_eq!(Comparison::Indistinguishable(40).to_string(), "?40");
    }
}
