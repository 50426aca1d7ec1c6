//! The subtraction continued fraction of a rational: first quotients,
//! remnants, encoding, and evaluation of finite subtraction continued
//! fractions.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::matrix::Unimodular;
use crate::rational::{ExtendedRational, Rational};
use crate::snumber::{RationalTail, SGenerator, SNumber};

/// The unique integer `x0` with `0 < x0 - x <= 1`, i.e. `floor(x) + 1`.
pub fn first_quotient(x: &Rational) -> BigInt {
    x.floor() + 1
}

/// One step of the recursion on a reduced pair `p/q`, `q > 0`:
/// `x0 = floor(p/q) + 1` and `1/(x0 - p/q) = q/(x0 q - p)`.
///
/// `0 < x0 q - p <= q` and `gcd(q, x0 q - p) = gcd(q, p) = 1`, so the new
/// pair is reduced again.
fn step(p: &BigInt, q: &BigInt) -> (BigInt, BigInt, BigInt) {
    let x0 = p.div_floor(q) + 1;
    let gap = &x0 * q - p;
    (x0, q.clone(), gap)
}

/// The `n`-th remnant: `r0 = x`, `r_{k+1} = 1 / (x_k - r_k)`.
pub fn remnant(x: &Rational, n: usize) -> Rational {
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    for _ in 0..n {
        if p == q {
            // 1 is a fixed point of the recursion
            break;
        }
        (_, p, q) = step(&p, &q);
    }
    Rational::from_reduced(p, q)
}

/// Encodes a rational as its eventually-2 s-number.
///
/// Stops as soon as the remnant reaches 1; every later quotient is 2.
/// The number of steps is bounded by the denominator of `x`.
pub fn encode_rational(x: &Rational) -> RationalTail {
    let mut prefix = Vec::new();
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    loop {
        let (x0, np, nq) = step(&p, &q);
        prefix.push(x0);
        if np == nq {
            break;
        }
        (p, q) = (np, nq);
    }
    RationalTail::from_canonical(prefix)
}

/// `V(q0) V(q1) ... V(q_{n-1})`.
pub fn v_product(quotients: &[BigInt]) -> Unimodular {
    quotients
        .iter()
        .fold(Unimodular::identity(), |g, q| g.mul_v(q))
}

/// Evaluates `<q0, ..., q_{n-1}, tail> = q0 - 1/(q1 - ... - 1/tail)`.
///
/// With no quotients the result is `tail` itself. Under the usual
/// preconditions (`tail >= 1`, quotients after the first `>= 2`) no
/// denominator vanishes; violating them may reach the pole, which is
/// reported as a domain error.
pub fn eval_finite_scf(quotients: &[BigInt], tail: &Rational) -> Result<Rational> {
    match v_product(quotients).apply_rational(tail) {
        ExtendedRational::Finite(r) => Ok(r),
        ExtendedRational::Infinity => Err(Error::Domain(
            "finite subtraction continued fraction hits a pole".into(),
        )),
    }
}

/// Drops the first `n` quotients of `s`.
///
/// Rational tails are re-canonicalized. Generators are advanced by `n`
/// pulls; a budget or table running out is reported as an error.
pub fn sequence_remnant(s: SNumber, n: usize) -> Result<SNumber> {
    match s {
        SNumber::RationalTail(t) => {
            let prefix = t.prefix();
            let rest = if n < prefix.len() {
                prefix[n..].to_vec()
            } else {
                vec![BigInt::from(2)]
            };
            Ok(SNumber::RationalTail(RationalTail::new(rest)?))
        }
        SNumber::Generator(mut g) => {
            skip(&mut g, n)?;
            Ok(SNumber::Generator(g))
        }
    }
}

fn skip(g: &mut SGenerator, n: usize) -> Result<()> {
    for _ in 0..n {
        g.pull()?;
    }
    Ok(())
}
