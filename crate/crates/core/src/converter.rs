//! Conversion between simple continued fractions `[a0; a1, a2, ...]` and
//! subtraction continued fractions.
//!
//! Infinite inputs are converted term by term:
//!
//! * simple → subtraction: emit `a0 + 1`, then for each pair `(a_{2i-1}, a_{2i})`
//!   emit `a_{2i-1} - 1` twos followed by `a_{2i} + 2`;
//! * subtraction → simple: with head `h`, emit `h - 1`, scan the run of `k - 1`
//!   twos up to the next quotient `q > 2`, emit `k`, and continue with head `q - 1`.
//!
//! Both follow from `V̇(x)V̇(y) = V(x+1)V̇(1)V̇(y-1)`, `V̇(x)V̇(0)V̇(y) = V̇(x+y)`
//! and `V(x)V(y) = V̇(x-1)V̇(1)V(y-1)`. Finite inputs go through exact
//! evaluation instead.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::encoder::encode_rational;
use crate::error::{Error, Result, StreamError};
use crate::matrix::Unimodular;
use crate::notation::format_simple_cf;
use crate::rational::{ExtendedRational, Rational};
use crate::snumber::{Quotients, SNumber};
use crate::stream::TermSource;

/// A finite simple continued fraction in canonical form: terms after the
/// first are `>= 1`, and the last term is `>= 2` when there is more than one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteCf {
    terms: Vec<BigInt>,
}

impl FiniteCf {
    /// Validates the terms and folds a trailing 1 into its predecessor.
    pub fn new(mut terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Domain("simple continued fraction is empty".into()));
        }
        if let Some((i, t)) = terms.iter().enumerate().skip(1).find(|(_, t)| !t.is_positive()) {
            return Err(Error::Domain(format!("partial quotient {t} at index {i} is below 1")));
        }
        if terms.len() > 1 && terms.last().is_some_and(One::is_one) {
            terms.pop();
            *terms.last_mut().expect("len > 1") += 1;
        }
        Ok(FiniteCf { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }
}

impl fmt::Display for FiniteCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_simple_cf(&self.terms, true))
    }
}

impl fmt::Debug for FiniteCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A pull-based simple continued fraction; terms after the first are checked
/// to be `>= 1`.
pub struct CfGenerator {
    source: Box<dyn TermSource>,
    pulled: usize,
}

impl CfGenerator {
    pub fn new(source: impl TermSource + 'static) -> Self {
        CfGenerator {
            source: Box::new(source),
            pulled: 0,
        }
    }

    pub fn pulled(&self) -> usize {
        self.pulled
    }

    pub fn pull(&mut self) -> Result<BigInt, StreamError> {
        let t = self.source.pull()?;
        if self.pulled > 0 && !t.is_positive() {
            return Err(StreamError::InvalidTerm {
                index: self.pulled,
                value: t,
                reason: "simple continued fraction terms after the first must be >= 1",
            });
        }
        self.pulled += 1;
        Ok(t)
    }
}

impl TermSource for CfGenerator {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        CfGenerator::pull(self)
    }
}

impl fmt::Debug for CfGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CfGenerator")
            .field("pulled", &self.pulled)
            .finish_non_exhaustive()
    }
}

#[derive(Debug)]
pub enum SimpleCf {
    Finite(FiniteCf),
    Generator(CfGenerator),
}

impl SimpleCf {
    pub fn finite(terms: Vec<BigInt>) -> Result<Self> {
        FiniteCf::new(terms).map(SimpleCf::Finite)
    }

    pub fn generator(source: impl TermSource + 'static) -> Self {
        SimpleCf::Generator(CfGenerator::new(source))
    }
}

/// Euclid's algorithm; the result is canonical.
pub fn simple_cf_of_rational(x: &Rational) -> FiniteCf {
    let mut terms = Vec::new();
    let mut r = x.clone();
    loop {
        let a = r.floor();
        let frac = &r - &Rational::from_integer(a.clone());
        terms.push(a);
        if frac.is_zero() {
            break;
        }
        r = frac.recip().expect("fractional part is nonzero");
    }
    FiniteCf { terms }
}

/// `V̇(a0) ... V̇(a_{n-1})` applied to `a_n`.
pub fn eval_simple_cf(cf: &FiniteCf) -> Rational {
    let (last, init) = cf.terms.split_last().expect("non-empty");
    let g = init
        .iter()
        .fold(Unimodular::identity(), |g, a| g.mul_vdot(a));
    match g.apply_integer(last) {
        ExtendedRational::Finite(r) => r,
        ExtendedRational::Infinity => unreachable!("canonical terms never reach the pole"),
    }
}

/// Converts a simple continued fraction to an s-number.
///
/// Finite inputs are evaluated and re-encoded exactly; generators are
/// converted lazily by the pair rule.
pub fn simple_to_subtraction(input: SimpleCf) -> SNumber {
    match input {
        SimpleCf::Finite(cf) => SNumber::RationalTail(encode_rational(&eval_simple_cf(&cf))),
        SimpleCf::Generator(g) => SNumber::generator(PairRule::new(g)),
    }
}

/// Lazy simple → subtraction conversion.
#[derive(Debug)]
pub struct PairRule {
    input: CfGenerator,
    state: PairState,
}

#[derive(Debug)]
enum PairState {
    Head,
    Odd,
    Twos(BigInt),
    Even,
}

impl PairRule {
    pub fn new(input: CfGenerator) -> Self {
        PairRule {
            input,
            state: PairState::Head,
        }
    }
}

impl TermSource for PairRule {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        loop {
            match &mut self.state {
                PairState::Head => {
                    let a0 = self.input.pull()?;
                    self.state = PairState::Odd;
                    return Ok(a0 + 1);
                }
                PairState::Odd => {
                    let a = self.input.pull()?;
                    self.state = PairState::Twos(a - 1);
                }
                PairState::Twos(k) => {
                    if k.is_positive() {
                        *k -= 1;
                        return Ok(BigInt::from(2));
                    }
                    self.state = PairState::Even;
                }
                PairState::Even => {
                    let b = self.input.pull()?;
                    self.state = PairState::Odd;
                    return Ok(b + 2);
                }
            }
        }
    }
}

/// Converts an s-number to a simple continued fraction.
///
/// An eventually-2 s-number yields the canonical finite expansion of its
/// value. A generator is converted lazily; `fuel` caps how many consecutive
/// 2's are scanned before giving up, since a long run cannot be told apart
/// from an infinite tail.
pub fn subtraction_to_simple(input: SNumber, fuel: usize) -> Result<SimpleCf> {
    if fuel == 0 {
        return Err(Error::Domain("fuel must be at least 1".into()));
    }
    match input {
        SNumber::RationalTail(t) => {
            let terms = run_length_terms(t.prefix());
            FiniteCf::new(terms).map(SimpleCf::Finite)
        }
        generator => Ok(SimpleCf::generator(RunLength::new(
            generator.into_quotients(),
            fuel,
        ))),
    }
}

/// The run-length rule over an explicit prefix followed by 2's forever.
fn run_length_terms(prefix: &[BigInt]) -> Vec<BigInt> {
    let two = BigInt::from(2);
    let mut out = vec![&prefix[0] - 1];
    let mut i = 1;
    loop {
        let start = i;
        while i < prefix.len() && prefix[i] == two {
            i += 1;
        }
        if i == prefix.len() {
            // the remaining quotients are all 2: the expansion ends
            return out;
        }
        out.push(BigInt::from(i - start + 1));
        out.push(&prefix[i] - 2);
        i += 1;
    }
}

/// Lazy subtraction → simple conversion.
#[derive(Debug)]
pub struct RunLength {
    input: Quotients,
    fuel: usize,
    state: RunState,
}

#[derive(Debug)]
enum RunState {
    Head,
    Scan,
    Emit(BigInt),
}

impl RunLength {
    pub fn new(input: Quotients, fuel: usize) -> Self {
        RunLength {
            input,
            fuel,
            state: RunState::Head,
        }
    }
}

impl TermSource for RunLength {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        match std::mem::replace(&mut self.state, RunState::Scan) {
            RunState::Head => {
                let h = self.input.pull()?;
                Ok(h - 1)
            }
            RunState::Scan => {
                let two = BigInt::from(2);
                let mut run = 0usize;
                let q = loop {
                    let q = self.input.pull()?;
                    if q != two {
                        break q;
                    }
                    run += 1;
                    if run > self.fuel {
                        return Err(StreamError::FuelExhausted { fuel: self.fuel });
                    }
                };
                self.state = RunState::Emit(q - 2);
                Ok(BigInt::from(run + 1))
            }
            RunState::Emit(t) => Ok(t),
        }
    }
}
