//! Exact real numbers as s-numbers: integer sequences `(s0, s1, ...)` with
//! `s_n >= 2` for `n >= 1`, read as subtraction continued fractions
//! `s0 - 1/(s1 - 1/(s2 - ...))`.
//!
//! Every s-number carries a canonical strictly decreasing sequence of right
//! convergents `R_n` with certified brackets `L_n <= x < R_n` of width
//! `1/A_n`. Rationals are exactly the s-numbers that end in 2's forever,
//! and comparing s-numbers lexicographically compares the reals they encode.
//!
//! Modules:
//!
//! * [`rational`], [`matrix`]: exact scalars, `V`, `V̇`, `K`, Möbius action.
//! * [`snumber`], [`encoder`]: the s-number type, encoding of rationals, remnants.
//! * [`convergents`]: `R_n`, `L_n`, `A_n`, decoding, approximation, recovery.
//! * [`converter`]: simple ↔ subtraction continued fractions.
//! * [`order`]: lexicographic comparison.
//! * [`sources`]: named constants (`phi`, `pi`, `log2_3`, `sqrt:d`).
//! * [`notation`]: textual forms.

pub mod converter;
pub mod convergents;
pub mod encoder;
pub mod error;
pub mod matrix;
pub mod notation;
pub mod order;
pub mod rational;
pub mod snumber;
pub mod sources;
pub mod stream;

pub use converter::{
    eval_simple_cf, simple_cf_of_rational, simple_to_subtraction, subtraction_to_simple,
    CfGenerator, FiniteCf, SimpleCf,
};
pub use convergents::{
    approximate, approximate_record, bracket, convergent_stream, decimal_digits, decode_rational,
    matrix_from_right_convergent, recover_quotient, ConvergentRecord, ConvergentStream,
};
pub use encoder::{encode_rational, eval_finite_scf, first_quotient, remnant, sequence_remnant};
pub use error::{Error, Result, StreamError};
pub use matrix::{kappa, mat_inv, mat_mul, mobius_apply, v, v2_pow, vdot, Unimodular};
pub use order::{compare, compare_rational, Comparison};
pub use rational::{ExtendedRational, Rational};
pub use snumber::{RationalTail, SGenerator, SNumber};
pub use sources::{const_log2_3, const_phi, const_pi, sqrt_stream, ConstantSource, SourceRegistry};
pub use stream::TermSource;
