use thiserror::Error;

/// Errors raised by the construction and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {0} is not congruent to 1 modulo 4")]
    NotOneModFour(u64),
    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { g: u64, p: u64 },
    #[error("{name} = {values:?} is not a permutation of (0, 1, 2, 3)")]
    InvalidPermutation { name: &'static str, values: [u8; 4] },
    #[error("{u} is not a unit modulo {p}")]
    NotUnit { u: u64, p: u64 },
    #[error("class index {0} is outside 0..4")]
    ClassIndex(usize),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{p} does not divide the order {order} of the multiplicative group")]
    NoRootOfUnity { p: u64, order: String },
    #[error(
        "spec (p = {spec_p}, g = {spec_g}) does not match the cyclotomic system (p = {p}, g = {g})"
    )]
    SystemMismatch {
        spec_p: u64,
        spec_g: u64,
        p: u64,
        g: u64,
    },
    #[error("the difference-function decomposition needs s(0) = 0 and s(p) = 2")]
    UnsupportedVariant,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
