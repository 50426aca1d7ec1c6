//! Pull-based integer producers.
//!
//! Streams are single-consumer: a value is pulled once and never replayed.
//! They are `Send`, so a stream can move between threads between pulls.

use std::fmt;

use num_bigint::BigInt;

use crate::error::StreamError;

/// A producer of successive integer terms.
///
/// Implementations are conceptually infinite; ending early is reported
/// through `StreamError` rather than a sentinel value.
pub trait TermSource: Send {
    fn pull(&mut self) -> Result<BigInt, StreamError>;
}

impl<S: TermSource + ?Sized> TermSource for Box<S> {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        (**self).pull()
    }
}

/// Emits the same term forever.
#[derive(Debug, Clone)]
pub struct Repeat(pub BigInt);

impl TermSource for Repeat {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        Ok(self.0.clone())
    }
}

/// Emits the entries of a finite table, then reports `TableExhausted`.
#[derive(Debug, Clone)]
pub struct Table {
    name: String,
    terms: Vec<BigInt>,
    pos: usize,
}

impl Table {
    pub fn new(name: impl Into<String>, terms: Vec<BigInt>) -> Self {
        Table {
            name: name.into(),
            terms,
            pos: 0,
        }
    }
}

impl TermSource for Table {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        match self.terms.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(StreamError::TableExhausted {
                name: self.name.clone(),
                len: self.terms.len(),
            }),
        }
    }
}

/// Emits a finite head, then cycles a non-empty period forever.
#[derive(Debug, Clone)]
pub struct Periodic {
    head: Vec<BigInt>,
    period: Vec<BigInt>,
    pos: usize,
}

impl Periodic {
    /// `period` must be non-empty.
    pub fn new(head: Vec<BigInt>, period: Vec<BigInt>) -> Self {
        assert!(!period.is_empty(), "periodic stream needs a non-empty period");
        Periodic {
            head,
            period,
            pos: 0,
        }
    }
}

impl TermSource for Periodic {
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        let t = if self.pos < self.head.len() {
            self.head[self.pos].clone()
        } else {
            let i = (self.pos - self.head.len()) % self.period.len();
            self.period[i].clone()
        };
        self.pos += 1;
        Ok(t)
    }
}

/// Adapts a closure into a `TermSource`.
pub struct FromFn<F>(pub F);

impl<F> TermSource for FromFn<F>
where
    F: FnMut() -> Result<BigInt, StreamError> + Send,
{
    fn pull(&mut self) -> Result<BigInt, StreamError> {
        (self.0)()
    }
}

impl<F> fmt::Debug for FromFn<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("FromFn(..)")
    }
}

/// Draws up to `n` terms, stopping at the first error.
///
/// Returns the terms obtained and the error, if any.
pub fn take<S: TermSource + ?Sized>(
    source: &mut S,
    n: usize,
) -> (Vec<BigInt>, Option<StreamError>) {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        match source.pull() {
            Ok(t) => out.push(t),
            Err(e) => return (out, Some(e)),
        }
    }
    (out, None)
}
