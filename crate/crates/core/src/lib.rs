//! Quaternary cyclotomic sequences of period `2p` built from the cyclotomic
//! classes of order four modulo a prime `p ≡ 1 (mod 4)`.
//!
//! The crate constructs the sequences, computes their periodic
//! autocorrelation exactly over the Gaussian integers, and determines their
//! linear complexity over GF(4) (after the Gray map) and over Z4.

pub mod error;
pub mod exec;
pub mod ring_arith;

pub use error::{Error, Result};
pub use exec::Execution;
pub mod autocorr;
pub mod cli;
pub mod cyclotomy;
pub mod lincomp;
pub mod seqgen;
pub mod survey;
