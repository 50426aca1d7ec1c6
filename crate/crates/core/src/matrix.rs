//! Unimodular 2×2 integer matrices, the generators `V`, `V̇`, `K`, and
//! their Möbius action on `Q ∪ {∞}`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{ExtendedRational, Rational};

/// An integer matrix `((a, b), (c, d))` with `ad - bc = ±1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Unimodular {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Unimodular {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Unimodular {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det_big();
        if det.is_one() || det == -BigInt::one() {
            Ok(m)
        } else {
            Err(Error::Domain(format!("determinant {det} is not ±1")))
        }
    }

    /// Only for entries whose determinant is known to be ±1.
    fn from_entries(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let m = Unimodular { a, b, c, d };
        debug_assert!({
            let det = m.det_big();
            det.is_one() || det == -BigInt::one()
        });
        m
    }

    pub fn identity() -> Self {
        Self::from_entries(1.into(), 0.into(), 0.into(), 1.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn det_big(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `+1` or `-1`.
    pub fn det(&self) -> i8 {
        if self.det_big().is_one() {
            1
        } else {
            -1
        }
    }

    pub fn mul(&self, rhs: &Unimodular) -> Unimodular {
        Self::from_entries(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }

    /// Right multiplication by `V(m)`: `(a, b; c, d) V(m) = (ma + b, -a; mc + d, -c)`.
    pub fn mul_v(&self, m: &BigInt) -> Unimodular {
        Self::from_entries(
            m * &self.a + &self.b,
            -&self.a,
            m * &self.c + &self.d,
            -&self.c,
        )
    }

    /// Right multiplication by `V̇(m)`: `(a, b; c, d) V̇(m) = (ma + b, a; mc + d, c)`.
    pub fn mul_vdot(&self, m: &BigInt) -> Unimodular {
        Self::from_entries(
            m * &self.a + &self.b,
            self.a.clone(),
            m * &self.c + &self.d,
            self.c.clone(),
        )
    }

    pub fn inverse(&self) -> Unimodular {
        if self.det() == 1 {
            Self::from_entries(self.d.clone(), -&self.b, -&self.c, self.a.clone())
        } else {
            Self::from_entries(-&self.d, self.b.clone(), self.c.clone(), -&self.a)
        }
    }

    /// `(ax + b) / (cx + d)` with `g(∞) = a/c` and the pole sent to `∞`.
    pub fn apply(&self, x: &ExtendedRational) -> ExtendedRational {
        match x {
            ExtendedRational::Infinity => {
                ExtendedRational::from_ratio(self.a.clone(), self.c.clone())
            }
            ExtendedRational::Finite(r) => {
                let (p, q) = (r.numer(), r.denom());
                ExtendedRational::from_ratio(&self.a * p + &self.b * q, &self.c * p + &self.d * q)
            }
        }
    }

    /// Möbius action on a finite point.
    pub fn apply_rational(&self, x: &Rational) -> ExtendedRational {
        let (p, q) = (x.numer(), x.denom());
        ExtendedRational::from_ratio(&self.a * p + &self.b * q, &self.c * p + &self.d * q)
    }

    /// Möbius action on an integer point.
    pub fn apply_integer(&self, t: &BigInt) -> ExtendedRational {
        ExtendedRational::from_ratio(&self.a * t + &self.b, &self.c * t + &self.d)
    }
}

impl Mul for &Unimodular {
    type Output = Unimodular;
    fn mul(self, rhs: &Unimodular) -> Unimodular {
        Unimodular::mul(self, rhs)
    }
}

impl Mul for Unimodular {
    type Output = Unimodular;
    fn mul(self, rhs: Unimodular) -> Unimodular {
        Unimodular::mul(&self, &rhs)
    }
}

impl fmt::Display for Unimodular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}, {}), ({}, {}))", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Unimodular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `V(m) = ((m, -1), (1, 0))`, determinant `+1`.
pub fn v(m: impl Into<BigInt>) -> Unimodular {
    Unimodular::from_entries(m.into(), (-1).into(), 1.into(), 0.into())
}

/// `V̇(m) = ((m, 1), (1, 0))`, determinant `-1`.
pub fn vdot(m: impl Into<BigInt>) -> Unimodular {
    Unimodular::from_entries(m.into(), 1.into(), 1.into(), 0.into())
}

/// `K = ((1, 0), (1, -1))`, an involution.
pub fn kappa() -> Unimodular {
    Unimodular::from_entries(1.into(), 0.into(), 1.into(), (-1).into())
}

/// Closed form of `V(2)^k = ((1 + k, -k), (k, 1 - k))`, valid for all integers `k`.
pub fn v2_pow(k: impl Into<BigInt>) -> Unimodular {
    let k = k.into();
    Unimodular::from_entries(
        BigInt::one() + &k,
        -&k,
        k.clone(),
        BigInt::one() - &k,
    )
}

pub fn mat_mul(g: &Unimodular, h: &Unimodular) -> Unimodular {
    g.mul(h)
}

pub fn mat_inv(g: &Unimodular) -> Unimodular {
    g.inverse()
}

pub fn mobius_apply(g: &Unimodular, x: &ExtendedRational) -> ExtendedRational {
    g.apply(x)
}

impl Default for Unimodular {
    fn default() -> Self {
        Self::identity()
    }
}
