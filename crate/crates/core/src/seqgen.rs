//! Quaternary sequences `s(t) = k` for `t mod 2p ∈ C_k`, where
//! `C_k = H_{0, j_k} ∪ H_{1, l_k}`, with `s(0) = 0` and `s(p) = 2`.

use serde::{Deserialize, Serialize};

use crate::cyclotomy::{CyclotomicSystem, ResidueSet};
use crate::error::{Error, Result};
use crate::ring_arith::{Gf4, Poly, Z4};

/// Values taken at the two positions `0` and `p` outside every `C_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `s(0) = 0`, `s(p) = 2`.
    #[default]
    Standard,
    /// `s(0) = s(p) = 0`.
    Zeroed,
}

/// The two named class layouts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// `jvec = (0,1,2,3)`, `lvec = (1,2,3,0)`.
    Eq6,
    /// `jvec = (0,2,1,3)`, `lvec = (2,0,3,1)`.
    Eq7,
}

impl Preset {
    pub fn vectors(self) -> ([u8; 4], [u8; 4]) {
        match self {
            Preset::Eq6 => ([0, 1, 2, 3], [1, 2, 3, 0]),
            Preset::Eq7 => ([0, 2, 1, 3], [2, 0, 3, 1]),
        }
    }
}

/// Everything needed to rebuild a sequence: the prime, the primitive root,
/// the two assignment permutations and the endpoint variant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub p: u64,
    pub g: u64,
    pub jvec: [u8; 4],
    pub lvec: [u8; 4],
    #[serde(default)]
    pub variant: Variant,
}

fn is_permutation(v: &[u8; 4]) -> bool {
    let mut seen = [false; 4];
    v.iter()
        .all(|&x| x < 4 && !std::mem::replace(&mut seen[x as usize], true))
}

impl SequenceSpec {
    pub fn new(p: u64, g: u64, jvec: [u8; 4], lvec: [u8; 4], variant: Variant) -> Result<Self> {
        let spec = SequenceSpec {
            p,
            g,
            jvec,
            lvec,
            variant,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn preset(p: u64, g: u64, which: Preset) -> Self {
        let (jvec, lvec) = which.vectors();
        SequenceSpec {
            p,
            g,
            jvec,
            lvec,
            variant: Variant::Standard,
        }
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        SequenceSpec { variant, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !is_permutation(&self.jvec) {
            return Err(Error::InvalidPermutation {
                name: "jvec",
                values: self.jvec,
            });
        }
        if !is_permutation(&self.lvec) {
            return Err(Error::InvalidPermutation {
                name: "lvec",
                values: self.lvec,
            });
        }
        Ok(())
    }

    /// `C_k = H_{0, j_k} ∪ H_{1, l_k}` for `k = 0..4`, as subsets of `Z_2p`.
    pub fn symbol_classes(&self, sys: &CyclotomicSystem) -> [ResidueSet; 4] {
        std::array::from_fn(|k| {
            sys.lifted(0, self.jvec[k] as usize)
                .union(sys.lifted(1, self.lvec[k] as usize))
        })
    }

    /// Symbol carried by position `p`.
    pub fn value_at_p(&self) -> u8 {
        match self.variant {
            Variant::Standard => 2,
            Variant::Zeroed => 0,
        }
    }
}

/// One period `s(0), …, s(N - 1)` of a sequence over Z4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuaternarySequence {
    values: Vec<Z4>,
}

impl QuaternarySequence {
    pub fn new(values: Vec<Z4>) -> Self {
        QuaternarySequence { values }
    }

    pub fn from_symbols(symbols: &[u8]) -> Self {
        QuaternarySequence::new(symbols.iter().map(|&v| Z4::new(v)).collect())
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Z4] {
        &self.values
    }

    pub fn symbols(&self) -> Vec<u8> {
        self.values.iter().map(|v| v.value()).collect()
    }

    /// Positions carrying symbol `k`.
    pub fn support(&self, k: u8) -> Vec<usize> {
        (0..self.period())
            .filter(|&t| self.values[t].value() == k)
            .collect()
    }

    /// `S(x) = Σ s(t) x^t` over Z4.
    pub fn generating_polynomial(&self) -> Poly<Z4> {
        Poly::new(self.values.clone())
    }
}

/// One period of a sequence over GF(4).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F4Sequence {
    values: Vec<Gf4>,
}

impl F4Sequence {
    pub fn new(values: Vec<Gf4>) -> Self {
        F4Sequence { values }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Gf4] {
        &self.values
    }

    /// `U(x) = Σ u(t) x^t` over GF(4).
    pub fn generating_polynomial(&self) -> Poly<Gf4> {
        Poly::new(self.values.clone())
    }
}

/// Builds one period of the sequence described by `spec` on `sys`.
pub fn build_sequence_in(
    sys: &CyclotomicSystem,
    spec: &SequenceSpec,
) -> Result<QuaternarySequence> {
    spec.validate()?;
    if spec.p != sys.p() || spec.g != sys.g() {
        return Err(Error::SystemMismatch {
            spec_p: spec.p,
            spec_g: spec.g,
            p: sys.p(),
            g: sys.g(),
        });
    }
    let n = sys.period();
    let mut values = vec![Z4::ZERO; n];
    for (k, class) in spec.symbol_classes(sys).iter().enumerate() {
        for &t in class.members() {
            values[t] = Z4::new(k as u8);
        }
    }
    values[sys.p() as usize] = Z4::new(spec.value_at_p());
    Ok(QuaternarySequence { values })
}

/// Builds the cyclotomic system named by `spec` and then the sequence.
pub fn build_sequence(spec: &SequenceSpec) -> Result<QuaternarySequence> {
    let sys = CyclotomicSystem::new(spec.p, spec.g)?;
    build_sequence_in(&sys, spec)
}

/// Gray labels `0 -> 00`, `1 -> 01`, `2 -> 11`, `3 -> 10`, read as
/// `b1·μ + b0`.
pub fn gray(symbol: Z4) -> Gf4 {
    match symbol.value() {
        0 => Gf4::from_bits(false, false),
        1 => Gf4::from_bits(false, true),
        2 => Gf4::from_bits(true, true),
        _ => Gf4::from_bits(true, false),
    }
}

pub fn gray_map(q: &QuaternarySequence) -> F4Sequence {
    F4Sequence::new(q.values.iter().map(|&s| gray(s)).collect())
}
