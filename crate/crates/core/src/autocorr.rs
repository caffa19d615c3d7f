//! Exact periodic autocorrelation `R(w) = Σ_n i^(s(n) - s(n+w))` of
//! quaternary sequences, plus its decomposition into difference functions.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cyclotomy::{difference_function, CyclotomicSystem, QuadraticPartition, ResidueSet};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ring_arith::GaussianInt;
use crate::seqgen::{build_sequence_in, Preset, QuaternarySequence, SequenceSpec, Variant};

/// `R(0), …, R(N - 1)` as exact Gaussian integers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AcfProfile {
    values: Vec<GaussianInt>,
}

impl AcfProfile {
    pub fn new(values: Vec<GaussianInt>) -> Self {
        AcfProfile { values }
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[GaussianInt] {
        &self.values
    }

    pub fn at(&self, w: usize) -> GaussianInt {
        self.values[w % self.values.len()]
    }

    /// `R(w)` for `w = 1..N`.
    pub fn nontrivial(&self) -> &[GaussianInt] {
        &self.values[1..]
    }

    /// `max_{w ≠ 0} |R(w)|²`; zero for period one.
    pub fn max_nontrivial_norm_sq(&self) -> i64 {
        self.nontrivial()
            .iter()
            .map(|r| r.norm_sq())
            .max()
            .unwrap_or(0)
    }

    pub fn nontrivial_value_set(&self) -> BTreeSet<GaussianInt> {
        self.nontrivial().iter().copied().collect()
    }

    /// Multiset of `R(w)`, `w ≠ 0`, as value -> multiplicity.
    pub fn nontrivial_multiset(&self) -> BTreeMap<GaussianInt, usize> {
        let mut m = BTreeMap::new();
        for &r in self.nontrivial() {
            *m.entry(r).or_insert(0) += 1;
        }
        m
    }
}

pub fn acf_direct(q: &QuaternarySequence) -> AcfProfile {
    acf_direct_with(q, Execution::default())
}

/// Direct summation, one shift per task.
pub fn acf_direct_with(q: &QuaternarySequence, exec: Execution) -> AcfProfile {
    let s = q.symbols();
    let n = s.len();
    let values = exec.map_range(n, |w| {
        let mut counts = [0i64; 4];
        for t in 0..n {
            counts[((s[t] + 4 - s[(t + w) % n]) & 3) as usize] += 1;
        }
        GaussianInt::new(counts[0] - counts[2], counts[1] - counts[3])
    });
    AcfProfile { values }
}

/// Assembles `R(w)` from the sixteen difference-function terms of the
/// real/imaginary decomposition, with `D_0 = C_0 ∪ {0}`, `D_1 = C_1`,
/// `D_2 = C_2 ∪ {p}`, `D_3 = C_3`.
pub fn acf_via_differences(sys: &CyclotomicSystem, spec: &SequenceSpec) -> Result<AcfProfile> {
    spec.validate()?;
    if spec.variant != Variant::Standard {
        return Err(Error::UnsupportedVariant);
    }
    let n = sys.period();
    let p = sys.p() as usize;
    let [c0, c1, c2, c3] = spec.symbol_classes(sys);
    let d: [ResidueSet; 4] = [c0.with(0), c1, c2.with(p), c3];
    // Σ_t f(t) e(t + w) = |F ∩ (E - w)| = d_{-w}(F, E)
    let corr = |a: usize, b: usize, w: usize| difference_function(&d[a], &d[b], (n - w) % n) as i64;
    let values = (0..n)
        .map(|w| {
            let re = corr(0, 0, w) + corr(1, 1, w) + corr(2, 2, w) + corr(3, 3, w)
                - corr(0, 2, w)
                - corr(2, 0, w)
                - corr(1, 3, w)
                - corr(3, 1, w);
            let im = corr(1, 0, w) + corr(3, 2, w) + corr(0, 3, w) + corr(2, 1, w)
                - corr(1, 2, w)
                - corr(3, 0, w)
                - corr(0, 1, w)
                - corr(2, 3, w);
            GaussianInt::new(re, im)
        })
        .collect();
    Ok(AcfProfile { values })
}

/// Outcome of checking the three-or-four-valued correlation of the `eq6`
/// layout and the `|R(w)|² = 4` claim for its zeroed-endpoint variant.
#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Report {
    pub p: u64,
    pub g: u64,
    /// `"i"` for `p ≡ 5 (mod 8)`, `"ii"` for `p ≡ 1 (mod 8)`.
    pub case: &'static str,
    pub allowed: Vec<GaussianInt>,
    pub observed: Vec<GaussianInt>,
    /// Shifts whose value lies outside `allowed`.
    pub offending_shifts: Vec<usize>,
    pub zeroed_norms_sq: Vec<i64>,
    /// Shifts of the zeroed variant with `|R(w)|² ≠ 4`.
    pub zeroed_offending_shifts: Vec<usize>,
}

impl Theorem1Report {
    pub fn value_set_holds(&self) -> bool {
        self.offending_shifts.is_empty()
    }

    pub fn zeroed_holds(&self) -> bool {
        self.zeroed_offending_shifts.is_empty()
    }
}

/// Allowed nontrivial correlation values of the `eq6` layout.
pub fn theorem1_allowed(p: u64) -> Vec<GaussianInt> {
    let g = GaussianInt::new;
    if p % 8 == 5 {
        vec![g(-2, 2), g(-2, -2), g(0, 2), g(0, -2), g(-2, 0)]
    } else {
        vec![g(-4, 0), g(2, 0), g(-2, 0), g(0, 0)]
    }
}

pub fn verify_theorem1(sys: &CyclotomicSystem) -> Result<Theorem1Report> {
    let spec = SequenceSpec::preset(sys.p(), sys.g(), Preset::Eq6);
    let acf = acf_direct(&build_sequence_in(sys, &spec)?);
    let allowed = theorem1_allowed(sys.p());
    let offending_shifts = (1..acf.period())
        .filter(|&w| !allowed.contains(&acf.at(w)))
        .collect();
    let zeroed = acf_direct(&build_sequence_in(
        sys,
        &spec.with_variant(Variant::Zeroed),
    )?);
    let zeroed_offending_shifts = (1..zeroed.period())
        .filter(|&w| zeroed.at(w).norm_sq() != 4)
        .collect();
    let zeroed_norms_sq = zeroed
        .nontrivial()
        .iter()
        .map(|r| r.norm_sq())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(Theorem1Report {
        p: sys.p(),
        g: sys.g(),
        case: if sys.p() % 8 == 5 { "i" } else { "ii" },
        allowed,
        observed: acf.nontrivial_value_set().into_iter().collect(),
        offending_shifts,
        zeroed_norms_sq,
        zeroed_offending_shifts,
    })
}

/// Outcome of comparing the `eq7` peak correlation with the closed form in
/// `y`.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma3Report {
    pub p: u64,
    pub x: i64,
    pub y: i64,
    pub attained_max_norm_sq: i64,
    pub predicted_max_norm_sq: i64,
    /// Closed-form candidates for the pinned `y` and whether each occurs
    /// among the nontrivial correlation values.
    pub candidates: Vec<(GaussianInt, bool)>,
}

impl Lemma3Report {
    pub fn holds(&self) -> bool {
        self.attained_max_norm_sq == self.predicted_max_norm_sq
    }
}

/// `{-2 ± 2y ± 2i}` for `p ≡ 5 (mod 8)`, `{-4 ± 2y}` for `p ≡ 1 (mod 8)`.
pub fn lemma3_candidates(p: u64, y: i64) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    for sy in [1, -1] {
        if p % 8 == 5 {
            for si in [1, -1] {
                out.push(GaussianInt::new(-2 + sy * 2 * y, si * 2));
            }
        } else {
            out.push(GaussianInt::new(-4 + sy * 2 * y, 0));
        }
    }
    out
}

pub fn verify_lemma3(sys: &CyclotomicSystem, qp: &QuadraticPartition) -> Result<Lemma3Report> {
    let spec = SequenceSpec::preset(sys.p(), sys.g(), Preset::Eq7);
    let acf = acf_direct(&build_sequence_in(sys, &spec)?);
    let observed = acf.nontrivial_value_set();
    let candidates: Vec<(GaussianInt, bool)> = lemma3_candidates(sys.p(), qp.y)
        .into_iter()
        .map(|c| (c, observed.contains(&c)))
        .collect();
    Ok(Lemma3Report {
        p: sys.p(),
        x: qp.x,
        y: qp.y,
        attained_max_norm_sq: acf.max_nontrivial_norm_sq(),
        predicted_max_norm_sq: candidates
            .iter()
            .map(|(c, _)| c.norm_sq())
            .max()
            .unwrap_or(0),
        candidates,
    })
}
