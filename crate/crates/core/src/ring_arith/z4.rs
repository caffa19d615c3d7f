use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Ring;

/// A residue modulo 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    pub fn new(v: u8) -> Self {
        Z4(v & 3)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Units of Z4 are exactly 1 and 3.
    pub fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn unit_inverse(self) -> Option<Self> {
        // 1·1 = 3·3 = 1
        self.is_unit().then_some(self)
    }
}

impl TryFrom<u8> for Z4 {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, String> {
        if v < 4 {
            Ok(Z4(v))
        } else {
            Err(format!("{v} is not a residue modulo 4"))
        }
    }
}

impl From<Z4> for u8 {
    fn from(v: Z4) -> u8 {
        v.0
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl Ring for Z4 {
    fn zero() -> Self {
        Z4::ZERO
    }
    fn one() -> Self {
        Z4::ONE
    }
    fn from_u64(n: u64) -> Self {
        Z4((n & 3) as u8)
    }
}

impl fmt::Debug for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
