//! Right/left convergents, accuracies, decoding and certified approximation.
//!
//! For an s-number `s` the matrix `g_n = V(s0) V(s1) ... V(sn)` determines
//! the right convergent `R_n = a/c`, the left convergent
//! `L_n = (a + b)/(c + d)` and the accuracy `A_n = (c + d) c`, with
//! `R_n - L_n = 1/A_n` and `L_n <= value < R_n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::encoder::eval_finite_scf;
use crate::error::{Error, Result, StreamError};
use crate::matrix::Unimodular;
use crate::rational::{ExtendedRational, Rational};
use crate::snumber::{Quotients, RationalTail, SNumber};
use crate::stream::TermSource;

/// The state of a convergent stream after `n + 1` quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentRecord {
    pub n: usize,
    /// `g_n = V(s0) ... V(sn)`.
    pub g: Unimodular,
    /// `R_n = a/c`.
    pub right: Rational,
    /// `L_n = (a + b)/(c + d)`.
    pub left: Rational,
    /// `A_n = (c + d) c`.
    pub accuracy: BigInt,
}

impl ConvergentRecord {
    fn from_matrix(n: usize, g: Unimodular) -> Self {
        let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
        let cd = c + d;
        debug_assert!(c.is_positive() && cd.is_positive() && !d.is_positive());
        // det = 1, so both fractions are already in lowest terms
        let right = Rational::from_reduced(a.clone(), c.clone());
        let left = Rational::from_reduced(a + b, cd.clone());
        let accuracy = cd * c;
        ConvergentRecord {
            n,
            g,
            right,
            left,
            accuracy,
        }
    }

    /// `1/A_n`, the exact width of `[L_n, R_n)`.
    pub fn width(&self) -> Rational {
        Rational::from_reduced(BigInt::one(), self.accuracy.clone())
    }
}

/// Incremental stream of convergent records.
///
/// Each record is the previous matrix right-multiplied by `V(s_n)`. After
/// the underlying quotients stop (budget or table exhaustion), the stream
/// yields that error once and then ends.
#[derive(Debug)]
pub struct ConvergentStream {
    quotients: Quotients,
    g: Unimodular,
    n: usize,
    status: Option<StreamError>,
    done: bool,
}

impl ConvergentStream {
    pub fn new(s: SNumber) -> Self {
        ConvergentStream {
            quotients: s.into_quotients(),
            g: Unimodular::identity(),
            n: 0,
            status: None,
            done: false,
        }
    }

    /// Why the stream ended, if it has.
    pub fn status(&self) -> Option<&StreamError> {
        self.status.as_ref()
    }

    /// The last matrix produced (`g_{n-1}`), identity before the first pull.
    pub fn current_matrix(&self) -> &Unimodular {
        &self.g
    }

    pub fn next_record(&mut self) -> Result<ConvergentRecord, StreamError> {
        if let Some(e) = &self.status {
            return Err(e.clone());
        }
        match self.quotients.pull() {
            Ok(s) => {
                self.g = self.g.mul_v(&s);
                let rec = ConvergentRecord::from_matrix(self.n, self.g.clone());
                self.n += 1;
                Ok(rec)
            }
            Err(e) => {
                self.status = Some(e.clone());
                Err(e)
            }
        }
    }
}

impl Iterator for ConvergentStream {
    type Item = Result<ConvergentRecord, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let r = self.next_record();
        if r.is_err() {
            self.done = true;
        }
        Some(r)
    }
}

pub fn convergent_stream(s: SNumber) -> ConvergentStream {
    ConvergentStream::new(s)
}

/// The value of an eventually-2 s-number: `<s0, ..., sk, 1>`.
pub fn decode_rational(s: &RationalTail) -> Rational {
    eval_finite_scf(s.prefix(), &Rational::one())
        .expect("valid s-number prefixes never reach the pole")
}

/// `(L_n, R_n)` with `L_n <= value < R_n`.
pub fn bracket(s: SNumber, n: usize) -> Result<(Rational, Rational)> {
    let rec = nth_record(s, n)?;
    Ok((rec.left, rec.right))
}

/// The `n`-th convergent record.
pub fn nth_record(s: SNumber, n: usize) -> Result<ConvergentRecord> {
    let mut stream = ConvergentStream::new(s);
    loop {
        let rec = stream.next_record()?;
        if rec.n == n {
            return Ok(rec);
        }
    }
}

/// The first record with `1/A_n <= eps`.
pub fn approximate_record(s: SNumber, eps: &Rational) -> Result<ConvergentRecord> {
    if !eps.is_positive() {
        return Err(Error::Domain(format!("tolerance must be positive, got {eps}")));
    }
    // 1/A <= p/q  <=>  q <= A p
    let (p, q) = (eps.numer(), eps.denom());
    let mut stream = ConvergentStream::new(s);
    loop {
        let rec = stream.next_record()?;
        if q <= &(&rec.accuracy * p) {
            return Ok(rec);
        }
    }
}

/// `R_n` for the least `n` with `1/A_n <= eps`; its distance to the value
/// is at most `eps`.
pub fn approximate(s: SNumber, eps: &Rational) -> Result<Rational> {
    approximate_record(s, eps).map(|r| r.right)
}

/// `s_n = g_{n-1}^{-1}(R_n)`, with `g_{-1}` the identity.
pub fn recover_quotient(g_prev: &Unimodular, right_n: &Rational) -> Result<BigInt> {
    match g_prev.inverse().apply_rational(right_n) {
        ExtendedRational::Finite(r) if r.is_integer() => Ok(r.numer().clone()),
        other => Err(Error::Domain(format!(
            "inconsistent convergent: g^-1(R) = {other} is not an integer"
        ))),
    }
}

/// Rebuilds `g_n` from `R_n = a/c`: `d` is the inverse of `a` modulo `c`
/// taken in `(-c, 0]`, and `b = (ad - 1)/c`.
pub fn matrix_from_right_convergent(right_n: &Rational) -> Unimodular {
    let a = right_n.numer().clone();
    let c = right_n.denom().clone();
    // a x + c y = 1
    let eg = a.extended_gcd(&c);
    debug_assert!(eg.gcd.is_one());
    let mut d = eg.x.mod_floor(&c); // in [0, c)
    if !d.is_zero() {
        d -= &c;
    }
    let b = (&a * &d - 1) / &c;
    Unimodular::new(a, b, c, d).expect("determinant is 1 by construction")
}

/// Decimal expansion of the value truncated toward zero, with `count`
/// digits after the point.
///
/// Rational tails are expanded exactly. For generators every digit is
/// certified by a bracket `[L_n, R_n)`; the stream is refined until the
/// bracket pins the truncated value or the quotients run out.
pub fn decimal_digits(s: SNumber, count: usize) -> Result<String> {
    if count == 0 {
        return Err(Error::Domain("digit count must be at least 1".into()));
    }
    let scale = BigInt::from(10).pow(count as u32);
    match s {
        SNumber::RationalTail(t) => {
            let x = decode_rational(&t);
            let scaled = x.numer() * &scale;
            let trunc = &scaled / x.denom(); // truncates toward zero
            Ok(render_decimal(&trunc, x.is_negative(), count))
        }
        generator => {
            let mut stream = ConvergentStream::new(generator);
            loop {
                let rec = stream.next_record()?;
                if let Some((trunc, negative)) = certified_truncation(&rec, &scale) {
                    return Ok(render_decimal(&trunc, negative, count));
                }
            }
        }
    }
}

/// `trunc(x * scale)` for every `x` in `[L, R)`, if that is one integer.
fn certified_truncation(rec: &ConvergentRecord, scale: &BigInt) -> Option<(BigInt, bool)> {
    let scale = Rational::from_integer(scale.clone());
    let lo = &rec.left * &scale;
    let hi = &rec.right * &scale;
    if !rec.left.is_negative() {
        // x >= 0: floor is constant on [lo, hi) iff hi <= floor(lo) + 1
        let f = lo.floor();
        (hi <= Rational::from_integer(&f + 1)).then_some((f, false))
    } else if !rec.right.is_positive() {
        // x < 0: the largest ceil on [lo, hi) is ceil(hi), or hi itself
        // when hi is an integer; ceil is constant iff ceil(lo) reaches it
        let c = if hi.is_integer() { hi.floor() } else { hi.ceil() };
        (lo > Rational::from_integer(&c - 1)).then_some((c, true))
    } else {
        None
    }
}

fn render_decimal(trunc: &BigInt, negative: bool, count: usize) -> String {
    let digits = trunc.abs().to_string();
    let padded = if digits.len() <= count {
        format!("{}{}", "0".repeat(count + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - count);
    let sign = if negative { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part}")
}
