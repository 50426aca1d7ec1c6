//! Textual forms for s-numbers and simple continued fractions.
//!
//! The grammar is documented in `docs/formats.md`. In short:
//!
//! ```text
//! (s0, s1, ..., sk, &)      eventually-2 s-number, `&` = infinite tail of 2's
//! (s0, s1, ..., sk, ...)    truncated prefix of an s-number
//! 2^k                       run of k >= 1 consecutive 2's, inside (...)
//! [a0; a1, ..., an]         finite simple continued fraction
//! [a0; a1, ..., an, ...]    truncated prefix of a simple continued fraction
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// How a textual sequence ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ending {
    /// `&` for s-numbers; nothing for simple continued fractions.
    Complete,
    /// `...`: more terms follow that are not written out.
    Truncated,
}

/// Formats s-number quotients, abbreviating runs of two or more 2's as `2^k`.
pub fn format_snumber(quotients: &[BigInt], complete: bool) -> String {
    let two = BigInt::from(2);
    let mut items: Vec<String> = Vec::new();
    let mut i = 0;
    while i < quotients.len() {
        if quotients[i] == two {
            let run = quotients[i..].iter().take_while(|q| **q == two).count();
            items.push(if run == 1 {
                "2".to_string()
            } else {
                format!("2^{run}")
            });
            i += run;
        } else {
            items.push(quotients[i].to_string());
            i += 1;
        }
    }
    items.push(if complete { "&" } else { "..." }.to_string());
    format!("({})", items.join(", "))
}

/// Formats simple continued fraction terms as `[a0; a1, ...]`.
pub fn format_simple_cf(terms: &[BigInt], complete: bool) -> String {
    let mut out = String::from("[");
    let mut rest: Vec<String> = terms.iter().skip(1).map(|t| t.to_string()).collect();
    if !complete {
        rest.push("...".into());
    }
    match terms.first() {
        Some(a0) => out.push_str(&a0.to_string()),
        None => out.push_str("..."),
    }
    if !rest.is_empty() && !terms.is_empty() {
        out.push_str("; ");
        out.push_str(&rest.join(", "));
    }
    out.push(']');
    out
}

fn parse_integer(tok: &str) -> Result<BigInt> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected an integer, found `{tok}`")));
    }
    tok.parse()
        .map_err(|e| Error::Parse(format!("integer `{tok}`: {e}")))
}

fn strip_delims(s: &str, open: char, close: char) -> Result<&str> {
    let s = s.trim();
    s.strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| Error::Parse(format!("expected `{open}...{close}`, found `{s}`")))
}

/// Parses `(s0, ..., sk, &)` or `(s0, ..., sk, ...)`.
///
/// Only the syntax is checked here; quotient bounds are enforced by the
/// s-number constructors.
pub fn parse_snumber(s: &str) -> Result<(Vec<BigInt>, Ending)> {
    let body = strip_delims(s, '(', ')')?;
    let items: Vec<&str> = body.split(',').map(str::trim).collect();
    let (last, head) = items.split_last().expect("split yields at least one item");
    let ending = match *last {
        "&" => Ending::Complete,
        "..." => Ending::Truncated,
        other => {
            return Err(Error::Parse(format!(
                "s-number must end with `&` or `...`, found `{other}`"
            )))
        }
    };
    if head.is_empty() {
        return Err(Error::Parse("s-number needs at least one quotient".into()));
    }
    let mut quotients = Vec::new();
    for item in head {
        if let Some(k) = item.strip_prefix("2^") {
            let k: usize = Some(k)
                .filter(|k| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|k| k.parse().ok())
                .filter(|k| *k >= 1)
                .ok_or_else(|| Error::Parse(format!("bad run length in `{item}`")))?;
            quotients.extend(std::iter::repeat_n(BigInt::from(2), k));
        } else {
            quotients.push(parse_integer(item)?);
        }
    }
    Ok((quotients, ending))
}

/// Parses `[a0]`, `[a0; a1, ..., an]`, optionally ending in `, ...` (or `; ...`).
pub fn parse_simple_cf(s: &str) -> Result<(Vec<BigInt>, Ending)> {
    let body = strip_delims(s, '[', ']')?;
    let (head, tail) = match body.split_once(';') {
        Some((h, t)) => (h.trim(), Some(t)),
        None => (body.trim(), None),
    };
    let mut terms = vec![parse_integer(head)?];
    let mut ending = Ending::Complete;
    if let Some(tail) = tail {
        let items: Vec<&str> = tail.split(',').map(str::trim).collect();
        for (i, item) in items.iter().enumerate() {
            if *item == "..." {
                if i + 1 != items.len() {
                    return Err(Error::Parse("`...` must be the last item".into()));
                }
                ending = Ending::Truncated;
            } else {
                terms.push(parse_integer(item)?);
            }
        }
    }
    Ok((terms, ending))
}
