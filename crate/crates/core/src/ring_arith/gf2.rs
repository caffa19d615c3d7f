use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, FiniteField, Ring};

/// The prime field of two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2(pub bool);

// Characteristic 2: addition is XOR.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Ring for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn from_u64(n: u64) -> Self {
        Gf2(n & 1 == 1)
    }
}

impl Field for Gf2 {
    fn inv(self) -> Option<Self> {
        self.0.then_some(self)
    }
}

impl FiniteField for Gf2 {
    const ORDER: u64 = 2;
    fn from_index(i: u64) -> Self {
        Gf2(i & 1 == 1)
    }
}

impl fmt::Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 as u8)
    }
}
