//! Command-line operands: rationals, literals and named constants.

use num_bigint::BigInt;
use subcf::notation::{parse_simple_cf, parse_snumber, Ending};
use subcf::stream::Table;
use subcf::{
    encode_rational, subtraction_to_simple, Error, FiniteCf, Rational, RationalTail, Result,
    SNumber, SimpleCf, SourceRegistry,
};

/// An operand, kept in whichever expansion it was given in.
pub enum Operand {
    SNumber(SNumber),
    Simple(SimpleCf),
}

impl Operand {
    /// Parses one of
    ///
    /// * `p/q` or `p`: a rational,
    /// * `(s0, s1, ..., &)` / `(s0, ..., ...)`: an s-number literal,
    /// * `[a0; a1, ...]`: a simple continued fraction literal,
    /// * `const:NAME[:ARG]`, or a bare registered name such as `pi` or `sqrt:2`.
    pub fn parse(text: &str, registry: &SourceRegistry) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('(') {
            return snumber_literal(text).map(Operand::SNumber);
        }
        if text.starts_with('[') {
            return simple_literal(text).map(Operand::Simple);
        }
        if let Some(spec) = text.strip_prefix("const:") {
            return registry.open(spec).map(Operand::Simple);
        }
        let name = text.split(':').next().unwrap_or(text);
        if registry.get(name).is_some() {
            return registry.open(text).map(Operand::Simple);
        }
        let x = parse_rational(text)?;
        Ok(Operand::SNumber(SNumber::RationalTail(encode_rational(&x))))
    }

    pub fn into_snumber(self) -> SNumber {
        match self {
            Operand::SNumber(s) => s,
            Operand::Simple(cf) => subcf::simple_to_subtraction(cf),
        }
    }

    pub fn into_simple(self, fuel: usize) -> Result<SimpleCf> {
        match self {
            Operand::SNumber(s) => subtraction_to_simple(s, fuel),
            Operand::Simple(cf) => Ok(cf),
        }
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim().parse().map_err(|e| match e {
        Error::ZeroDenominator => Error::Parse(format!("`{text}` has a zero denominator")),
        other => other,
    })
}

fn snumber_literal(text: &str) -> Result<SNumber> {
    let (quotients, ending) = parse_snumber(text)?;
    match ending {
        Ending::Complete => RationalTail::new(quotients).map(SNumber::RationalTail),
        Ending::Truncated => {
            let two = BigInt::from(2);
            if let Some((i, s)) = quotients.iter().enumerate().skip(1).find(|(_, s)| **s < two) {
                return Err(Error::Domain(format!("quotient {s} at index {i} is below 2")));
            }
            Ok(SNumber::generator(Table::new("literal", quotients)))
        }
    }
}

fn simple_literal(text: &str) -> Result<SimpleCf> {
    let (terms, ending) = parse_simple_cf(text)?;
    let finite = FiniteCf::new(terms.clone())?;
    match ending {
        Ending::Complete => Ok(SimpleCf::Finite(finite)),
        // validated above; keep the terms exactly as written
        Ending::Truncated => Ok(SimpleCf::generator(Table::new("literal", terms))),
    }
}
