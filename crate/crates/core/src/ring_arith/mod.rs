//! Exact arithmetic: the residue ring Z4, the fields GF(2) and GF(4),
//! extension fields over either, Gaussian integers, and dense polynomials.

mod ext_field;
mod gaussian;
mod gf2;
mod gf4;
mod poly;
mod z4;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use ext_field::{find_root_of_unity, ExtElem, ExtField};
pub use gaussian::GaussianInt;
pub use gf2::Gf2;
pub use gf4::Gf4;
pub use poly::Poly;
pub use z4::Z4;

/// A commutative ring with identity whose elements are small `Copy` values.
pub trait Ring:
    Copy
    + Debug
    + Eq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;

    /// The image of the integer `n` under the canonical map Z -> R.
    fn from_u64(n: u64) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(self) -> Option<Self>;
}

/// A finite field with an enumeration of its elements.
pub trait FiniteField: Field {
    const ORDER: u64;

    /// Element number `i` for `i < ORDER`; index 0 is zero and 1 is one.
    fn from_index(i: u64) -> Self;
}
