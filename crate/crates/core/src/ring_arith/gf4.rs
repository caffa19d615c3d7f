use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Field, FiniteField, Ring};
use crate::error::{Error, Result};

/// An element `b1·μ + b0` of GF(4), where `μ² = μ + 1`.
///
/// Stored as the two-bit integer `b1 b0`, so `0 = 0`, `1 = 1`, `2 = μ` and
/// `3 = μ + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct Gf4(u8);

const fn mul_bits(a: u8, b: u8) -> u8 {
    let (a1, a0) = (a >> 1, a & 1);
    let (b1, b0) = (b >> 1, b & 1);
    let hi = (a1 & b1) ^ (a1 & b0) ^ (a0 & b1);
    let lo = (a1 & b1) ^ (a0 & b0);
    (hi << 1) | lo
}

const fn build_mul_table() -> [[u8; 4]; 4] {
    let mut t = [[0u8; 4]; 4];
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            t[a][b] = mul_bits(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    t
}

static MUL: [[u8; 4]; 4] = build_mul_table();
// 0 has no inverse; slot kept for indexing.
static INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const MU: Gf4 = Gf4(2);
    pub const MU_PLUS_ONE: Gf4 = Gf4(3);

    /// Builds `b1·μ + b0` from its coordinates in the basis (μ, 1).
    pub fn from_bits(b1: bool, b0: bool) -> Self {
        Gf4(((b1 as u8) << 1) | b0 as u8)
    }

    /// Coordinates `(b1, b0)` in the basis (μ, 1).
    pub fn bits(self) -> (bool, bool) {
        (self.0 & 2 != 0, self.0 & 1 != 0)
    }

    pub fn to_u8(self) -> u8 {
        self.0
    }

    pub fn try_inv(self) -> Result<Self> {
        self.inv().ok_or(Error::ZeroInverse)
    }

    /// Frobenius map `x -> x²`.
    pub fn square(self) -> Self {
        self * self
    }
}

impl TryFrom<u8> for Gf4 {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        if v < 4 {
            Ok(Gf4(v))
        } else {
            Err(format!("{v} is not a GF(4) code"))
        }
    }
}

impl From<Gf4> for u8 {
    fn from(v: Gf4) -> u8 {
        v.0
    }
}

// Characteristic 2: addition is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf4 {
    type Output = Gf4;
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf4 {
    type Output = Gf4;
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Neg for Gf4 {
    type Output = Gf4;
    fn neg(self) -> Gf4 {
        self
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl Ring for Gf4 {
    fn zero() -> Self {
        Gf4::ZERO
    }
    fn one() -> Self {
        Gf4::ONE
    }
    fn from_u64(n: u64) -> Self {
        Gf4((n & 1) as u8)
    }
}

impl Field for Gf4 {
    fn inv(self) -> Option<Self> {
        (self.0 != 0).then(|| Gf4(INV[self.0 as usize]))
    }
}

impl FiniteField for Gf4 {
    const ORDER: u64 = 4;
    fn from_index(i: u64) -> Self {
        Gf4((i & 3) as u8)
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "μ",
            _ => "μ+1",
        })
    }
}
