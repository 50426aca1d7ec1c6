//! Test-only oracles and generators shared by the integration suites.
//!
//! Nothing here calls the conversion rules under test; the word oracles
//! rewrite symbolic matrix products using single matrix identities, and
//! the products are checked with a plain `i128` multiply.

#![allow(dead_code)]

use std::collections::VecDeque;

use num_bigint::BigInt;
use rand::Rng;
use subcf::{Rational, RationalTail};

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Uniform `p/q` with `|p| <= bound`, `1 <= q <= bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let p = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    Rational::new(p, d).unwrap()
}

/// `s0` in `[-50, 50]`, later quotients in `[2, 50]`, length in `[1, max_len]`.
pub fn random_prefix<R: Rng>(rng: &mut R, max_len: usize) -> Vec<i64> {
    let len = rng.gen_range(1..=max_len);
    let mut out = vec![rng.gen_range(-50..=50)];
    out.extend((1..len).map(|_| rng.gen_range(2..=50)));
    out
}

pub fn random_tail<R: Rng>(rng: &mut R, max_len: usize) -> RationalTail {
    RationalTail::new(ints(&random_prefix(rng, max_len))).unwrap()
}

/// Plain 2×2 integer matrices for the oracles.
pub type M = [i128; 4];

pub const I: M = [1, 0, 0, 1];

pub fn mul(x: M, y: M) -> M {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

/// Matrix symbols: `V(n)`, `V̇(n)` and `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    V(i64),
    Vdot(i64),
    K,
}

impl Sym {
    pub fn matrix(self) -> M {
        match self {
            Sym::V(n) => [n as i128, -1, 1, 0],
            Sym::Vdot(n) => [n as i128, 1, 1, 0],
            Sym::K => [1, 0, 1, -1],
        }
    }
}

pub fn product(word: impl IntoIterator<Item = Sym>) -> M {
    word.into_iter().fold(I, |acc, s| mul(acc, s.matrix()))
}

/// Single identities, each rewriting a window at the front of a word.
mod rules {
    use super::Sym::{self, *};

    /// `V̇(x) V̇(0) V̇(y) = V̇(x + y)`
    pub fn merge(w: &[Sym]) -> Option<Vec<Sym>> {
        match w {
            [Vdot(x), Vdot(0), Vdot(y), ..] => Some(vec![Vdot(x + y)]),
            _ => None,
        }
    }

    /// `V̇(x) = V(x + 1) K`, i.e. `V̇(x) K = V(x + 1)` with `K² = 1`.
    pub fn vdot_to_vk(s: Sym) -> Option<[Sym; 2]> {
        match s {
            Vdot(x) => Some([V(x + 1), K]),
            _ => None,
        }
    }

    /// `V(x) = V̇(x - 1) K`.
    pub fn v_to_vdotk(s: Sym) -> Option<[Sym; 2]> {
        match s {
            V(x) => Some([Vdot(x - 1), K]),
            _ => None,
        }
    }

    /// `K V̇(x) = V̇(1) V̇(x - 1)` and `K V(x) = V̇(1) V(x - 1)`.
    pub fn absorb_k(k: Sym, s: Sym) -> Option<[Sym; 2]> {
        match (k, s) {
            (K, Vdot(x)) => Some([Vdot(1), Vdot(x - 1)]),
            (K, V(x)) => Some([Vdot(1), V(x - 1)]),
            _ => None,
        }
    }
}

/// Rewrites `V̇(a0) ... V̇(a_n)` into `V(e0) ... V(e_m) W`, moving `V`
/// factors to the front one identity at a time, and returns the emitted
/// `e_i` together with the leftover word `W`.
///
/// A front `V̇(x)` is turned into `V(x+1) K` only when it is followed by
/// `V̇(y)` with `y != 0`; `V̇(x) V̇(0) V̇(y)` is merged first.
pub fn simple_word_to_subtraction(prefix: &[i64]) -> (Vec<i64>, Vec<Sym>) {
    let mut w: VecDeque<Sym> = prefix.iter().map(|&a| Sym::Vdot(a)).collect();
    let mut emitted = Vec::new();
    loop {
        let front: Vec<Sym> = w.iter().take(3).copied().collect();
        if let Some(merged) = rules::merge(&front) {
            w.drain(..3);
            for s in merged.into_iter().rev() {
                w.push_front(s);
            }
            continue;
        }
        match front.as_slice() {
            [Sym::Vdot(_), Sym::Vdot(y), ..] if *y != 0 => {
                let [v, k] = rules::vdot_to_vk(w[0]).unwrap();
                let [u1, u2] = rules::absorb_k(k, w[1]).unwrap();
                w.drain(..2);
                w.push_front(u2);
                w.push_front(u1);
                let Sym::V(e) = v else { unreachable!() };
                emitted.push(e);
            }
            _ => break,
        }
    }
    (emitted, w.into_iter().collect())
}

/// Rewrites `V(s0) ... V(s_n)` into `V̇(e0) ... V̇(e_m) W`.
///
/// The leftmost `V(x)` that is followed by another `V` becomes
/// `V̇(x - 1) K`, and the `K` is absorbed into its right neighbour. Front
/// `V̇`'s are emitted once followed by a `V̇` with nonzero argument.
pub fn subtraction_word_to_simple(prefix: &[i64]) -> (Vec<i64>, Vec<Sym>) {
    let mut w: Vec<Sym> = prefix.iter().map(|&s| Sym::V(s)).collect();
    let mut emitted = Vec::new();
    loop {
        if let Some(merged) = rules::merge(&w) {
            w.splice(..3, merged);
            continue;
        }
        if let [Sym::Vdot(x), Sym::Vdot(y), ..] = w.as_slice() {
            if *y != 0 {
                emitted.push(*x);
                w.remove(0);
                continue;
            }
        }
        // leftmost V followed by a V
        let Some(i) = (0..w.len().saturating_sub(1))
            .find(|&i| matches!((w[i], w[i + 1]), (Sym::V(_), Sym::V(_))))
        else {
            break;
        };
        let [u, k] = rules::v_to_vdotk(w[i]).unwrap();
        let [a, b] = rules::absorb_k(k, w[i + 1]).unwrap();
        w.splice(i..i + 2, [u, a, b]);
        // keep merging anywhere a V̇(x) V̇(0) V̇(y) window appears
        while let Some(j) = (0..w.len().saturating_sub(2)).find(|&j| rules::merge(&w[j..]).is_some()) {
            let merged = rules::merge(&w[j..]).unwrap();
            w.splice(j..j + 3, merged);
        }
    }
    (emitted, w)
}

pub mod strategy {
    use proptest::prelude::*;
    use subcf::{Rational, RationalTail};

    pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
        (-bound..=bound, 1..=bound).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    /// Rationals `>= 1`.
    pub fn at_least_one(bound: i64) -> impl Strategy<Value = Rational> {
        (0..=bound, 1..=bound).prop_map(|(p, q)| Rational::new(p + q, q).unwrap())
    }

    /// s-number prefixes: `s0` in `[-50, 50]`, then quotients in `[2, 50]`.
    pub fn prefix(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
        (-50i64..=50, prop::collection::vec(2i64..=50, 0..max_len)).prop_map(|(s0, rest)| {
            let mut v = vec![s0];
            v.extend(rest);
            v
        })
    }

    pub fn tail(max_len: usize) -> impl Strategy<Value = RationalTail> {
        prefix(max_len).prop_map(|p| RationalTail::new(super::ints(&p)).unwrap())
    }

    /// Simple continued fraction terms: `a0` in `[-50, 50]`, then `[1, 50]`.
    pub fn simple_terms(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
        (-50i64..=50, prop::collection::vec(1i64..=50, 0..max_len)).prop_map(|(a0, rest)| {
            let mut v = vec![a0];
            v.extend(rest);
            v
        })
    }
}
