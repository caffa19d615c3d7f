//! Exhaustive survey over all `4! · 4! = 576` assignment pairs for one
//! prime, with symmetry classification and an empirical optimality check.
//!
//! The symmetry group has eight elements: the four shifts of class numbers
//! `l ↦ l + c (mod 4)` applied to both vectors, each optionally composed
//! with conjugation `s ↦ -s`, which swaps the classes of symbols 1 and 3.
//! Shifting class numbers replaces `s(n)` by `s(g^c n)` and so permutes the
//! shifts `w`; conjugation conjugates every `R(w)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::autocorr::acf_direct;
use crate::cyclotomy::CyclotomicSystem;
use crate::error::Result;
use crate::exec::Execution;
use crate::lincomp::{lc_f4_gcd, lc_z4};
use crate::ring_arith::GaussianInt;
use crate::seqgen::{build_sequence_in, gray_map, Preset, SequenceSpec, Variant};

pub type Assignment = ([u8; 4], [u8; 4]);

#[derive(Clone, Copy, Debug, Default)]
pub struct SurveyOptions {
    pub with_lc_z4: bool,
    pub exec: Execution,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRecord {
    pub jvec: [u8; 4],
    pub lvec: [u8; 4],
    pub max_norm_sq: i64,
    pub lc_f4: usize,
    pub lc_z4: Option<usize>,
    pub class_id: usize,
    /// Canonical text form of [`SurveyRecord::multiset`].
    pub value_multiset: String,
    #[serde(skip)]
    pub multiset: BTreeMap<GaussianInt, usize>,
}

impl SurveyRecord {
    pub fn assignment(&self) -> Assignment {
        (self.jvec, self.lvec)
    }
}

/// The 24 permutations of `0..4` in lexicographic order.
pub fn permutations() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let v = [a, b, c, d];
                    if BTreeSet::from(v).len() == 4 {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// All 576 `(jvec, lvec)` pairs, lexicographic.
pub fn all_assignments() -> Vec<Assignment> {
    let perms = permutations();
    perms
        .iter()
        .flat_map(|&j| perms.iter().map(move |&l| (j, l)))
        .collect()
}

pub fn conjugate(a: Assignment) -> Assignment {
    let swap = |v: [u8; 4]| [v[0], v[3], v[2], v[1]];
    (swap(a.0), swap(a.1))
}

pub fn shift_classes(a: Assignment, c: u8) -> Assignment {
    let add = |v: [u8; 4]| v.map(|x| (x + c) % 4);
    (add(a.0), add(a.1))
}

/// The eight images of `a`: shifts `c = 0..4`, then the same shifts of the
/// conjugate.
pub fn orbit(a: Assignment) -> [Assignment; 8] {
    let conj = conjugate(a);
    std::array::from_fn(|i| {
        let base = if i < 4 { a } else { conj };
        shift_classes(base, (i % 4) as u8)
    })
}

pub fn canonical_key(a: Assignment) -> Assignment {
    orbit(a).into_iter().min().expect("orbit is nonempty")
}

/// `value:count` pairs in increasing value order, `;`-separated.
pub fn multiset_string(m: &BTreeMap<GaussianInt, usize>) -> String {
    m.iter()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn run_survey(sys: &CyclotomicSystem, opts: &SurveyOptions) -> Result<Vec<SurveyRecord>> {
    let assignments = all_assignments();
    let keys: BTreeSet<Assignment> = assignments.iter().map(|&a| canonical_key(a)).collect();
    let class_ids: HashMap<Assignment, usize> =
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    let records = opts.exec.map_slice(&assignments, |&(jvec, lvec)| {
        let spec = SequenceSpec {
            p: sys.p(),
            g: sys.g(),
            jvec,
            lvec,
            variant: Variant::Standard,
        };
        let q = build_sequence_in(sys, &spec)?;
        let acf = acf_direct(&q);
        let multiset = acf.nontrivial_multiset();
        Ok(SurveyRecord {
            jvec,
            lvec,
            max_norm_sq: acf.max_nontrivial_norm_sq(),
            lc_f4: lc_f4_gcd(&gray_map(&q)).linear_complexity,
            lc_z4: opts.with_lc_z4.then(|| lc_z4(&q).result.linear_complexity),
            class_id: class_ids[&canonical_key((jvec, lvec))],
            value_multiset: multiset_string(&multiset),
            multiset,
        })
    });
    records.into_iter().collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct OptimalityReport {
    /// Always `"empirical"`: the claim is checked by enumeration only.
    pub evidence: &'static str,
    pub min_max_norm_sq: i64,
    pub eq6_class_id: Option<usize>,
    /// Smallest peak correlation inside the `eq6` symmetry class.
    pub eq6_class_max_norm_sq: Option<i64>,
    /// Assignments attaining the minimum outside the `eq6` class.
    pub counterexamples: Vec<Assignment>,
    pub holds: bool,
}

/// Is the minimum over `records` of `max_{w≠0} |R(w)|²` attained within the
/// symmetry class of the `eq6` layout?
pub fn check_optimality(records: &[SurveyRecord]) -> OptimalityReport {
    let min = records.iter().map(|r| r.max_norm_sq).min().unwrap_or(0);
    let eq6_key = canonical_key(Preset::Eq6.vectors());
    let eq6_class_id = records
        .iter()
        .find(|r| canonical_key(r.assignment()) == eq6_key)
        .map(|r| r.class_id);
    let eq6_class_max_norm_sq = eq6_class_id.and_then(|id| {
        records
            .iter()
            .filter(|r| r.class_id == id)
            .map(|r| r.max_norm_sq)
            .min()
    });
    let holds = records.len() <= 1 || eq6_class_max_norm_sq == Some(min);
    let counterexamples = if holds {
        Vec::new()
    } else {
        records
            .iter()
            .filter(|r| r.max_norm_sq == min && Some(r.class_id) != eq6_class_id)
            .map(|r| r.assignment())
            .collect()
    };
    OptimalityReport {
        evidence: "empirical",
        min_max_norm_sq: min,
        eq6_class_id,
        eq6_class_max_norm_sq,
        counterexamples,
        holds,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SymmetryReport {
    /// Number of (record, group element) pairs compared.
    pub checked: usize,
    /// Assignments whose conjugate's multiset is not the conjugate multiset.
    pub conjugation_failures: Vec<Assignment>,
    /// `(assignment, c)` whose class-number shift changes the multiset.
    pub shift_failures: Vec<(Assignment, u8)>,
    /// Classes whose members disagree on the peak correlation.
    pub class_norm_failures: Vec<usize>,
    pub holds: bool,
}

fn conjugate_multiset(m: &BTreeMap<GaussianInt, usize>) -> BTreeMap<GaussianInt, usize> {
    m.iter().map(|(v, &c)| (v.conj(), c)).collect()
}

/// Checks the symmetry action at the multiset level for every record whose
/// images are also present.
pub fn check_symmetries(records: &[SurveyRecord]) -> SymmetryReport {
    let index: HashMap<Assignment, &SurveyRecord> =
        records.iter().map(|r| (r.assignment(), r)).collect();
    let mut report = SymmetryReport::default();
    for r in records {
        let a = r.assignment();
        if let Some(img) = index.get(&conjugate(a)) {
            report.checked += 1;
            if img.multiset != conjugate_multiset(&r.multiset) {
                report.conjugation_failures.push(a);
            }
        }
        for c in 0..4u8 {
            if let Some(img) = index.get(&shift_classes(a, c)) {
                report.checked += 1;
                if img.multiset != r.multiset {
                    report.shift_failures.push((a, c));
                }
            }
        }
    }
    let mut peaks: BTreeMap<usize, BTreeSet<i64>> = BTreeMap::new();
    for r in records {
        peaks.entry(r.class_id).or_default().insert(r.max_norm_sq);
    }
    report.class_norm_failures = peaks
        .into_iter()
        .filter(|(_, s)| s.len() > 1)
        .map(|(id, _)| id)
        .collect();
    report.holds = report.conjugation_failures.is_empty()
        && report.shift_failures.is_empty()
        && report.class_norm_failures.is_empty();
    report
}
