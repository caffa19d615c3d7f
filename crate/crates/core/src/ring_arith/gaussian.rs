use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An exact Gaussian integer `re + im·i`.
///
/// Correlation values of period-`N` quaternary sequences are bounded by `N`
/// in each coordinate, so `i64` coordinates never overflow here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    pub fn conj(self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(self) -> i64 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: Self) -> Self {
        GaussianInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussianInt {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: Self) -> Self {
        GaussianInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> Self {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: Self) -> Self {
        GaussianInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl std::iter::Sum for GaussianInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GaussianInt::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
