//! S-numbers: integer sequences `(s0, s1, ...)` with `s_n >= 2` for `n >= 1`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result, StreamError};
use crate::stream::TermSource;

fn two() -> BigInt {
    BigInt::from(2)
}

/// An eventually-2 s-number `(s0, ..., sk, 2, 2, ...)` stored by its
/// canonical prefix: either `k = 0` or `sk != 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalTail {
    prefix: Vec<BigInt>,
}

impl RationalTail {
    /// Validates `s_i >= 2` for `i >= 1` and strips trailing 2's.
    pub fn new(mut prefix: Vec<BigInt>) -> Result<Self> {
        if prefix.is_empty() {
            return Err(Error::Domain("s-number prefix is empty".into()));
        }
        if let Some((i, s)) = prefix.iter().enumerate().skip(1).find(|(_, s)| **s < two()) {
            return Err(Error::Domain(format!(
                "quotient {s} at index {i} is below 2"
            )));
        }
        while prefix.len() > 1 && prefix.last() == Some(&two()) {
            prefix.pop();
        }
        Ok(RationalTail { prefix })
    }

    pub(crate) fn from_canonical(prefix: Vec<BigInt>) -> Self {
        debug_assert!(!prefix.is_empty());
        debug_assert!(prefix.len() == 1 || prefix.last() != Some(&two()));
        RationalTail { prefix }
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    /// The `n`-th quotient, reading 2 past the stored prefix.
    pub fn quotient(&self, n: usize) -> BigInt {
        self.prefix.get(n).cloned().unwrap_or_else(two)
    }

    /// Index of the last explicit quotient.
    pub fn prefix_end(&self) -> usize {
        self.prefix.len() - 1
    }

    pub fn quotients(&self) -> Quotients {
        Quotients(Inner::Tail {
            prefix: self.prefix.clone(),
            pos: 0,
        })
    }
}

impl fmt::Display for RationalTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::format_snumber(&self.prefix, true))
    }
}

impl fmt::Debug for RationalTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A pull-based s-number with an optional cap on the number of pulls.
///
/// Every quotient after the first is checked to be at least 2.
pub struct SGenerator {
    source: Box<dyn TermSource>,
    pulled: usize,
    budget: Option<usize>,
}

impl SGenerator {
    pub fn new(source: impl TermSource + 'static) -> Self {
        SGenerator {
            source: Box::new(source),
            pulled: 0,
            budget: None,
        }
    }

    /// Caps the total number of further pulls at `budget`.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(self.pulled + budget);
        self
    }

    /// Number of quotients pulled so far.
    pub fn pulled(&self) -> usize {
        self.pulled
    }

    pub fn pull(&mut self) -> Result<BigInt, StreamError> {
        if let Some(b) = self.budget {
            if self.pulled >= b {
                return Err(StreamError::BudgetExhausted { budget: b });
            }
        }
        let s = self.source.pull()?;
        if self.pulled > 0 && s < two() {
            return Err(StreamError::InvalidTerm {
                index: self.pulled,
                value: s,
                reason: "s-number quotients after the first must be >= 2",
            });
        }
        self.pulled += 1;
        Ok(s)
    }
}

impl TermSource for SGenerator {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        SGenerator::pull(self)
    }
}

impl fmt::Debug for SGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SGenerator")
            .field("pulled", &self.pulled)
            .field("budget", &self.budget)
            .finish_non_exhaustive()
    }
}

/// An s-number in one of its two forms.
#[derive(Debug)]
pub enum SNumber {
    RationalTail(RationalTail),
    Generator(SGenerator),
}

impl SNumber {
    pub fn rational_tail(prefix: Vec<BigInt>) -> Result<Self> {
        RationalTail::new(prefix).map(SNumber::RationalTail)
    }

    pub fn generator(source: impl TermSource + 'static) -> Self {
        SNumber::Generator(SGenerator::new(source))
    }

    /// Applies a pull budget to generator inputs; rational tails are unaffected.
    pub fn with_budget(self, budget: usize) -> Self {
        match self {
            SNumber::Generator(g) => SNumber::Generator(g.with_budget(budget)),
            other => other,
        }
    }

    pub fn as_rational_tail(&self) -> Option<&RationalTail> {
        match self {
            SNumber::RationalTail(t) => Some(t),
            SNumber::Generator(_) => None,
        }
    }

    /// Consumes the s-number into a cursor over its quotients.
    pub fn into_quotients(self) -> Quotients {
        match self {
            SNumber::RationalTail(t) => Quotients(Inner::Tail {
                prefix: t.prefix,
                pos: 0,
            }),
            SNumber::Generator(g) => Quotients(Inner::Gen(g)),
        }
    }
}

impl From<RationalTail> for SNumber {
    fn from(t: RationalTail) -> Self {
        SNumber::RationalTail(t)
    }
}

impl From<SGenerator> for SNumber {
    fn from(g: SGenerator) -> Self {
        SNumber::Generator(g)
    }
}

/// Cursor over the quotients of an s-number.
#[derive(Debug)]
pub struct Quotients(Inner);

#[derive(Debug)]
enum Inner {
    Tail { prefix: Vec<BigInt>, pos: usize },
    Gen(SGenerator),
}

impl Quotients {
    /// True once a rational tail has moved past its explicit prefix.
    pub fn in_two_tail(&self) -> bool {
        match &self.0 {
            Inner::Tail { prefix, pos } => *pos >= prefix.len(),
            Inner::Gen(_) => false,
        }
    }

    pub fn is_rational_tail(&self) -> bool {
        matches!(self.0, Inner::Tail { .. })
    }
}

impl TermSource for Quotients {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        match &mut self.0 {
            Inner::Tail { prefix, pos } => {
                let s = prefix.get(*pos).cloned().unwrap_or_else(two);
                *pos += 1;
                Ok(s)
            }
            Inner::Gen(g) => g.pull(),
        }
    }
}
