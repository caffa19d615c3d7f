//! Cyclotomic classes of order four modulo `p`, their lifts into `Z_2p`,
//! cyclotomic numbers, the quadratic partition `p = x² + 4y²`, and the
//! difference functions used by the correlation decomposition.

use serde::Serialize;

use crate::error::{Error, Result};

/// A subset of `Z_n` kept both as a sorted member list and a membership mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidueSet {
    modulus: usize,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl ResidueSet {
    pub fn empty(modulus: usize) -> Self {
        ResidueSet {
            modulus,
            members: Vec::new(),
            mask: vec![false; modulus],
        }
    }

    /// Collects residues, reducing each modulo `modulus`.
    pub fn from_iter<I: IntoIterator<Item = usize>>(modulus: usize, items: I) -> Self {
        let mut mask = vec![false; modulus];
        for a in items {
            mask[a % modulus] = true;
        }
        let members = (0..modulus).filter(|&a| mask[a]).collect();
        ResidueSet {
            modulus,
            members,
            mask,
        }
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask[a % self.modulus]
    }

    pub fn union(&self, other: &ResidueSet) -> ResidueSet {
        ResidueSet::from_iter(
            self.modulus,
            self.members.iter().chain(&other.members).copied(),
        )
    }

    pub fn with(&self, a: usize) -> ResidueSet {
        ResidueSet::from_iter(self.modulus, self.members.iter().copied().chain([a]))
    }

    /// `self + w = {a + w : a ∈ self}`.
    pub fn translate(&self, w: usize) -> ResidueSet {
        ResidueSet::from_iter(self.modulus, self.members.iter().map(|&a| a + w))
    }

    pub fn intersection_len(&self, other: &ResidueSet) -> usize {
        self.members.iter().filter(|&&a| other.contains(a)).count()
    }
}

/// `d_w(F, E) = |F ∩ (E + w)|`, computed in `Z_n` with `n = F.modulus()`.
pub fn difference_function(f: &ResidueSet, e: &ResidueSet, w: usize) -> usize {
    let n = f.modulus;
    let w = w % n;
    f.members
        .iter()
        .filter(|&&a| e.contains((a + n - w) % n))
        .count()
}

/// Evaluation of `d_w(F, E)` for `F = {0}×F0 ∪ {1}×F1` and
/// `E = {0}×E0 ∪ {1}×E1` under `Z_2p ≅ Z_2 × Z_p`, using only counts in `Z_p`.
pub fn lemma1_difference(
    f0: &ResidueSet,
    f1: &ResidueSet,
    e0: &ResidueSet,
    e1: &ResidueSet,
    w: usize,
) -> usize {
    let p = f0.modulus;
    let w = w % (2 * p);
    let (w0, w1) = (w % 2, w % p);
    match (w0, w1) {
        (0, 0) => f0.intersection_len(e0) + f1.intersection_len(e1),
        (0, _) => f0.intersection_len(&e0.translate(w1)) + f1.intersection_len(&e1.translate(w1)),
        (_, 0) => f0.intersection_len(e1) + f1.intersection_len(e0),
        _ => f0.intersection_len(&e1.translate(w1)) + f1.intersection_len(&e0.translate(w1)),
    }
}

/// Assembles `{a ∈ Z_2p : a even, a mod p ∈ F0} ∪ {a odd, a mod p ∈ F1}`.
pub fn crt_assemble(f0: &ResidueSet, f1: &ResidueSet) -> ResidueSet {
    let p = f0.modulus;
    ResidueSet::from_iter(
        2 * p,
        (0..2 * p).filter(|&a| {
            if a % 2 == 0 {
                f0.contains(a % p)
            } else {
                f1.contains(a % p)
            }
        }),
    )
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut b = base % m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `n`; `a` must be a unit.
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    let a = a % n;
    let mut x = a;
    let mut k = 1;
    while x != 1 % n {
        x = x * a % n;
        k += 1;
        if k > n {
            return 0;
        }
    }
    k
}

/// Smallest positive primitive root modulo the prime `p`.
pub fn find_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Ok(1);
    }
    (1..p)
        .find(|&g| multiplicative_order(g, p) == p - 1)
        .ok_or_else(|| Error::Internal(format!("no primitive root modulo {p}")))
}

/// The four cyclotomic classes `H_0..H_3` of order four modulo `p` and their
/// lifts `H_{k,l} = {a ∈ Z_2p : a mod 2 = k, a mod p ∈ H_l}`.
#[derive(Clone, Debug)]
pub struct CyclotomicSystem {
    p: u64,
    g: u64,
    classes: [ResidueSet; 4],
    class_of: Vec<Option<usize>>,
    lifted: [[ResidueSet; 4]; 2],
}

impl CyclotomicSystem {
    pub fn new(p: u64, g: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p % 4 != 1 {
            return Err(Error::NotOneModFour(p));
        }
        if g == 0 || multiplicative_order(g, p) != p - 1 {
            return Err(Error::NotPrimitiveRoot { g, p });
        }
        let pu = p as usize;
        let quarter = (p - 1) / 4;
        let mut class_of = vec![None; pu];
        let classes: [ResidueSet; 4] = std::array::from_fn(|k| {
            let elems: Vec<usize> = (0..quarter)
                .map(|t| pow_mod(g, k as u64 + 4 * t, p) as usize)
                .collect();
            for &a in &elems {
                class_of[a] = Some(k);
            }
            ResidueSet::from_iter(pu, elems)
        });
        let lifted = std::array::from_fn(|k| {
            std::array::from_fn(|l| {
                ResidueSet::from_iter(
                    2 * pu,
                    (0..2 * pu).filter(|&a| a % 2 == k && classes[l].contains(a % pu)),
                )
            })
        });
        Ok(CyclotomicSystem {
            p,
            g,
            classes,
            class_of,
            lifted,
        })
    }

    /// Builds the system with the smallest primitive root.
    pub fn with_smallest_root(p: u64) -> Result<Self> {
        if p % 4 != 1 {
            return Err(if is_prime(p) {
                Error::NotOneModFour(p)
            } else {
                Error::NotPrime(p)
            });
        }
        CyclotomicSystem::new(p, find_primitive_root(p)?)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    /// Period of the sequences built on this system, `2p`.
    pub fn period(&self) -> usize {
        2 * self.p as usize
    }

    /// `R = (p - 1)/4`, the size of each class.
    pub fn quarter(&self) -> usize {
        (self.p as usize - 1) / 4
    }

    pub fn class(&self, k: usize) -> &ResidueSet {
        &self.classes[k % 4]
    }

    pub fn lifted(&self, k: usize, l: usize) -> &ResidueSet {
        &self.lifted[k % 2][l % 4]
    }

    /// Index `h` with `u mod p ∈ H_h`, or `None` for multiples of `p`.
    pub fn class_of(&self, u: u64) -> Option<usize> {
        self.class_of[(u % self.p) as usize]
    }

    /// True iff `p ≡ 1 (mod 8)`.
    pub fn is_one_mod_eight(&self) -> bool {
        self.p % 8 == 1
    }

    /// Class containing `-1`; `H_0` when `p ≡ 1 (mod 8)`, `H_2` otherwise.
    pub fn class_of_minus_one(&self) -> usize {
        self.class_of(self.p - 1).expect("p - 1 is a unit")
    }
}

/// The 4×4 table of cyclotomic numbers `(i, j) = |(H_i + 1) ∩ H_j|`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CyclotomicNumbers {
    pub table: [[usize; 4]; 4],
}

impl CyclotomicNumbers {
    /// Entry `(i, j)` with both indices read modulo 4.
    pub fn at(&self, i: i64, j: i64) -> usize {
        self.table[i.rem_euclid(4) as usize][j.rem_euclid(4) as usize]
    }

    pub fn total(&self) -> usize {
        self.table.iter().flatten().sum()
    }

    /// `Σ_j (j, 0) - Σ_j (j, 2)`, which equals -1 for every valid `p`.
    pub fn column_difference(&self) -> i64 {
        (0..4)
            .map(|j| self.table[j][0] as i64 - self.table[j][2] as i64)
            .sum()
    }
}

/// Counts `(i, j)` by enumerating every unit `u` with `u + 1 ≢ 0`.
pub fn cyclotomic_numbers(sys: &CyclotomicSystem) -> CyclotomicNumbers {
    let mut table = [[0; 4]; 4];
    for u in 1..sys.p - 1 {
        let (i, j) = (sys.class_of(u), sys.class_of(u + 1));
        if let (Some(i), Some(j)) = (i, j) {
            table[i][j] += 1;
        }
    }
    CyclotomicNumbers { table }
}

/// `p = x² + 4y²` with `x ≡ 1 (mod 4)`; the sign of `y` is tied to the
/// primitive root through the cyclotomic numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct QuadraticPartition {
    pub x: i64,
    pub y: i64,
}

impl QuadraticPartition {
    /// Sixteen times the classical closed forms of the five independent
    /// order-four cyclotomic numbers, keyed by `(i, j)`.
    pub fn sixteen_times_cyclotomic(&self, p: i64) -> [((usize, usize), i64); 5] {
        let (x, y) = (self.x, self.y);
        if p % 8 == 1 {
            [
                ((0, 0), p - 11 - 6 * x),
                ((0, 1), p - 3 + 2 * x + 8 * y),
                ((0, 2), p - 3 + 2 * x),
                ((0, 3), p - 3 + 2 * x - 8 * y),
                ((1, 2), p + 1 - 2 * x),
            ]
        } else {
            [
                ((0, 0), p - 7 + 2 * x),
                ((0, 1), p + 1 + 2 * x - 8 * y),
                ((0, 2), p + 1 - 6 * x),
                ((0, 3), p + 1 + 2 * x + 8 * y),
                ((1, 0), p - 3 - 2 * x),
            ]
        }
    }

    fn matches(&self, p: i64, nums: &CyclotomicNumbers) -> bool {
        self.sixteen_times_cyclotomic(p)
            .iter()
            .all(|&((i, j), v)| 16 * nums.table[i][j] as i64 == v)
    }
}

/// Finds `(x, |y|)` by exhaustive search, then fixes the sign of `y` so the
/// closed-form cyclotomic numbers agree with the enumerated ones.
pub fn quadratic_partition(sys: &CyclotomicSystem) -> Result<QuadraticPartition> {
    let p = sys.p as i64;
    let mut found = None;
    let mut y = 0i64;
    while 4 * y * y <= p {
        let r = p - 4 * y * y;
        let x = (r as f64).sqrt().round() as i64;
        for x in [x - 1, x, x + 1] {
            if x >= 0 && x * x == r {
                let x = if x.rem_euclid(4) == 1 { x } else { -x };
                if x.rem_euclid(4) == 1 {
                    found = Some((x, y));
                }
            }
        }
        if found.is_some() {
            break;
        }
        y += 1;
    }
    let (x, y) = found.ok_or_else(|| Error::Internal(format!("no quadratic partition of {p}")))?;
    let nums = cyclotomic_numbers(sys);
    [y, -y]
        .into_iter()
        .map(|y| QuadraticPartition { x, y })
        .find(|qp| qp.matches(p, &nums))
        .ok_or_else(|| {
            Error::Internal(format!(
                "cyclotomic numbers of p = {p} match neither sign of y = {y}"
            ))
        })
}

/// Direct count `|H_j ∩ (H_l + u)|` next to the cyclotomic number
/// `(h - l, j - l)` predicted for `u ∈ H_h`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lemma2Counts {
    pub direct: usize,
    pub predicted: usize,
}

impl Lemma2Counts {
    pub fn holds(&self) -> bool {
        self.direct == self.predicted
    }
}

pub fn lemma2_counts(
    sys: &CyclotomicSystem,
    nums: &CyclotomicNumbers,
    j: usize,
    l: usize,
    u: u64,
) -> Result<Lemma2Counts> {
    if j > 3 {
        return Err(Error::ClassIndex(j));
    }
    if l > 3 {
        return Err(Error::ClassIndex(l));
    }
    let h = sys.class_of(u).ok_or(Error::NotUnit { u, p: sys.p })?;
    let direct = sys
        .class(j)
        .intersection_len(&sys.class(l).translate(u as usize));
    let predicted = nums.at(h as i64 - l as i64, j as i64 - l as i64);
    Ok(Lemma2Counts { direct, predicted })
}

/// Predicted value of `|{0} ∩ (H_j + u)|` for `u ∈ H_h`: one iff `h = j` and
/// `p ≡ 1 (mod 8)`, or `h ≡ j + 2 (mod 4)` and `p ≡ 5 (mod 8)`.
pub fn lemma2_zero_membership(sys: &CyclotomicSystem, j: usize, u: u64) -> Result<bool> {
    if j > 3 {
        return Err(Error::ClassIndex(j));
    }
    let h = sys.class_of(u).ok_or(Error::NotUnit { u, p: sys.p })?;
    Ok(if sys.is_one_mod_eight() {
        h == j
    } else {
        h == (j + 2) % 4
    })
}
