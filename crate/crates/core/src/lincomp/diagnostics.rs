//! Root-value checks in extension fields: values of `U(x)` and `U'(x)` at
//! the `p`-th roots of unity over GF(4), and of `S(x) mod 2` over GF(2).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclotomy::{multiplicative_order, CyclotomicSystem};
use crate::error::Result;
use crate::ring_arith::{find_root_of_unity, ExtElem, ExtField, Gf2, Gf4, Poly};
use crate::seqgen::{build_sequence_in, gray_map, Preset, SequenceSpec, Variant};

pub const DEFAULT_SEED: u64 = 0x5eed_0004;

#[derive(Clone, Copy, Debug)]
pub struct DiagnosticsOptions {
    /// Largest `ord_p(4)` for which GF(4^m) is built.
    pub max_degree: usize,
    pub seed: u64,
}

impl Default for DiagnosticsOptions {
    fn default() -> Self {
        DiagnosticsOptions {
            max_degree: 24,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DiagnosticCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootDiagnostics {
    pub p: u64,
    /// `ord_p(4)`.
    pub extension_degree: u64,
    /// `ord_p(2)`.
    pub binary_degree: u64,
    pub checks: Vec<DiagnosticCheck>,
    pub skipped: Option<String>,
}

impl RootDiagnostics {
    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.skipped.is_none() && self.checks.iter().all(|c| c.holds)
    }
}

struct Roots<F> {
    field: ExtField<F>,
    /// `α^0, …, α^(p-1)`.
    powers: Vec<ExtElem<F>>,
}

impl<F: crate::ring_arith::FiniteField> Roots<F> {
    fn new(p: u64, degree: usize, rng: &mut ChaCha8Rng) -> Result<Self> {
        let field = ExtField::<F>::new(degree)?;
        let alpha = find_root_of_unity(&field, p, rng)?;
        let mut powers = vec![field.one()];
        for _ in 1..p {
            let next = field.mul(powers.last().unwrap(), &alpha);
            powers.push(next);
        }
        Ok(Roots { field, powers })
    }

    fn at(&self, e: u64) -> &ExtElem<F> {
        &self.powers[(e % self.powers.len() as u64) as usize]
    }

    /// `Σ_{i ∈ set} (α^scale)^i`.
    fn sum_over<'a>(&self, set: impl IntoIterator<Item = &'a usize>, scale: u64) -> ExtElem<F> {
        set.into_iter().fold(self.field.zero(), |acc, &i| {
            self.field.add(&acc, self.at(scale * i as u64))
        })
    }
}

/// The distinct monic irreducible factors of `x^p - 1` over GF(4), one per
/// 4-cyclotomic coset modulo `p`, each formed as `Π_{c ∈ coset} (x - α^c)`.
pub fn irreducible_factors_of_x_p_minus_one(p: u64, seed: u64) -> Result<Vec<Poly<Gf4>>> {
    let m = multiplicative_order(4, p) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let roots = Roots::<Gf4>::new(p, m, &mut rng)?;
    let f = &roots.field;
    let mut seen = vec![false; p as usize];
    let mut factors = vec![Poly::new(vec![Gf4::ONE, Gf4::ONE])];
    for start in 1..p {
        if seen[start as usize] {
            continue;
        }
        // Coefficients in GF(4^m), low degree first.
        let mut prod = vec![f.one()];
        let mut c = start;
        while !seen[c as usize] {
            seen[c as usize] = true;
            let root = roots.at(c);
            let mut next = vec![f.zero(); prod.len() + 1];
            for (i, a) in prod.iter().enumerate() {
                next[i + 1] = f.add(&next[i + 1], a);
                next[i] = f.sub(&next[i], &f.mul(a, root));
            }
            prod = next;
            c = c * 4 % p;
        }
        factors.push(Poly::new(prod.iter().map(|e| e.coeffs()[0]).collect()));
    }
    Ok(factors)
}

fn check(name: &'static str, holds: bool, detail: String) -> DiagnosticCheck {
    DiagnosticCheck {
        name,
        holds,
        detail,
    }
}

fn class_members(sys: &CyclotomicSystem, k: usize) -> Vec<usize> {
    sys.class(k).members().to_vec()
}

/// Runs every root-value check that applies to `spec`.
///
/// Checks named `class-sums`, `u4-pair-sum`, `root-count` and `mod2-image` apply to any
/// sequence. `u2-pattern`, `u-from-u2`, `root-set`, `simple-roots` and `derivative-form`
/// concern the Gray image of the standard [`Preset::Eq6`] sequence and are
/// only run for it. Under `θ = g`, `U(α^v) = U_2(α^(gv)) + μU_2(α^v) + μ + 1`.
pub fn root_diagnostics(
    sys: &CyclotomicSystem,
    spec: &SequenceSpec,
    opts: &DiagnosticsOptions,
) -> Result<RootDiagnostics> {
    let p = sys.p();
    let g = sys.g();
    let m = multiplicative_order(4, p);
    let r = multiplicative_order(2, p);
    let mut report = RootDiagnostics {
        p,
        extension_degree: m,
        binary_degree: r,
        checks: Vec::new(),
        skipped: None,
    };
    if m as usize > opts.max_degree {
        report.skipped = Some(format!(
            "ord_{p}(4) = {m} exceeds the diagnostic limit {}",
            opts.max_degree
        ));
        return Ok(report);
    }

    let q = build_sequence_in(sys, spec)?;
    let u = gray_map(&q);
    let upoly = u.generating_polynomial();
    let uprime = upoly.derivative();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let roots = Roots::<Gf4>::new(p, m as usize, &mut rng)?;
    let f = &roots.field;
    let h: Vec<Vec<usize>> = (0..4).map(|k| class_members(sys, k)).collect();
    let h02: Vec<usize> = h[0].iter().chain(&h[2]).copied().collect();
    let u4 = |scale: u64| roots.sum_over(&h[0], scale);
    let u2 = |scale: u64| roots.sum_over(&h02, scale);
    let g_pow = |k: u32| (0..k).fold(1u64, |acc, _| acc * g % p);

    let class_sums = (0..4).all(|k| {
        let target = u4(g_pow(k as u32));
        (0..2).all(|i| roots.sum_over(sys.lifted(i, k).members(), 1) == target)
    });
    report.checks.push(check(
        "class-sums",
        class_sums,
        "k = 0..3, both parities".into(),
    ));

    let pair_sum = (0..p).all(|v| f.add(&u4(v), &u4(v * g_pow(2) % p)) == u2(v));
    report
        .checks
        .push(check("u4-pair-sum", pair_sum, format!("v = 0..{}", p - 1)));

    let values: Vec<ExtElem<Gf4>> = (0..p).map(|v| f.eval(&upoly, roots.at(v))).collect();
    let derivs: Vec<ExtElem<Gf4>> = (0..p).map(|v| f.eval(&uprime, roots.at(v))).collect();
    let zeros: Vec<u64> = (0..p).filter(|&v| f.is_zero(&values[v as usize])).collect();
    let multiplicity: usize = zeros
        .iter()
        .map(|&v| if f.is_zero(&derivs[v as usize]) { 2 } else { 1 })
        .sum();
    let gcd_degree = super::annihilator_gcd(&u).degree().unwrap_or(0);
    report.checks.push(check(
        "root-count",
        multiplicity == gcd_degree,
        format!(
            "{} roots (with multiplicity {multiplicity}) vs deg gcd = {gcd_degree}",
            zeros.len()
        ),
    ));

    let is_eq6 =
        spec.variant == Variant::Standard && (spec.jvec, spec.lvec) == Preset::Eq6.vectors();
    if is_eq6 {
        eq6_checks(sys, &roots, &upoly, &uprime, &h, &mut report);
    }

    report.checks.push(mod2_image_check(sys, &q, r, &mut rng)?);
    Ok(report)
}

fn eq6_checks(
    sys: &CyclotomicSystem,
    base: &Roots<Gf4>,
    upoly: &Poly<Gf4>,
    uprime: &Poly<Gf4>,
    h: &[Vec<usize>],
    report: &mut RootDiagnostics,
) {
    let p = sys.p();
    let g = sys.g();
    let f = &base.field;
    let mu = f.embed(Gf4::MU);
    let mu1 = f.embed(Gf4::MU_PLUS_ONE);
    let one = f.one();
    let h02: Vec<usize> = h[0].iter().chain(&h[2]).copied().collect();
    let in_h13 = |v: u64| sys.class_of(v).is_some_and(|k| k % 2 == 1);
    let (even_val, odd_val) = if sys.is_one_mod_eight() {
        (one.clone(), f.zero())
    } else {
        (mu.clone(), mu1.clone())
    };

    // Candidates α^(g^k), k = 0..3; the first one with the expected U_2
    // pattern is used for the root-set check.
    let mut chosen = None;
    for k in 0..4u32 {
        let a = (0..k).fold(1u64, |acc, _| acc * g % p);
        let pattern = (1..p).all(|v| {
            let val = base.sum_over(&h02, a * v % p);
            val == if in_h13(v) {
                odd_val.clone()
            } else {
                even_val.clone()
            }
        });
        if pattern {
            chosen = Some(a);
            break;
        }
    }
    report.checks.push(check(
        "u2-pattern",
        chosen.is_some(),
        match chosen {
            Some(a) => format!("α^{a} among the candidates α^(g^k)"),
            None => "no candidate α^(g^k) matches".into(),
        },
    ));
    let a = chosen.unwrap_or(1);
    let u4 = |e: u64| base.sum_over(&h[0], a * (e % p) % p);
    let u2 = |e: u64| base.sum_over(&h02, a * (e % p) % p);
    let at = |e: u64| base.at(a * (e % p) % p);
    let (g2, g3) = (g * g % p, g * g % p * g % p);

    let from_u2 = (1..p).all(|v| {
        let rhs = f.add(&f.add(&u2(g * v), &f.mul(&mu, &u2(v))), &mu1);
        f.eval(upoly, at(v)) == rhs
    });
    report
        .checks
        .push(check("u-from-u2", from_u2, "θ = g, v ∈ Z_p*".into()));

    let derivative = (1..p).all(|v| {
        let inner = [
            mu1.clone(),
            u4(g2 * v),
            f.mul(&mu1, &u4(g3 * v)),
            f.mul(&mu, &u4(v)),
        ]
        .iter()
        .fold(f.zero(), |acc, t| f.add(&acc, t));
        let inv_v = base.at(a * (p - v % p) % p);
        f.eval(uprime, at(v)) == f.mul(inv_v, &inner)
    });
    report
        .checks
        .push(check("derivative-form", derivative, "v ∈ Z_p*".into()));

    let zeros: Vec<u64> = (0..p)
        .filter(|&v| f.is_zero(&f.eval(upoly, at(v))))
        .collect();
    let expected: Vec<u64> = if sys.is_one_mod_eight() {
        Vec::new()
    } else {
        (1..p).filter(|&v| in_h13(v)).collect()
    };
    report.checks.push(check(
        "root-set",
        zeros == expected,
        format!("{} zeros, expected {}", zeros.len(), expected.len()),
    ));
    let simple = zeros.iter().all(|&v| !f.is_zero(&f.eval(uprime, at(v))));
    report.checks.push(check(
        "simple-roots",
        simple,
        format!("{} roots", zeros.len()),
    ));
}

/// `S̄(β^v) = 1` for `v = 1..2p`, `v ≠ p`, with `S̄ = S mod 2` and `β` of
/// order `p` in GF(2^r).
fn mod2_image_check(
    sys: &CyclotomicSystem,
    q: &crate::seqgen::QuaternarySequence,
    r: u64,
    rng: &mut ChaCha8Rng,
) -> Result<DiagnosticCheck> {
    let p = sys.p();
    let roots = Roots::<Gf2>::new(p, r as usize, rng)?;
    let sbar = Poly::new(q.values().iter().map(|s| Gf2(s.value() % 2 == 1)).collect());
    let failing: Vec<u64> = (1..2 * p)
        .filter(|&v| v != p && !roots.field.is_one(&roots.field.eval(&sbar, roots.at(v))))
        .collect();
    Ok(check(
        "mod2-image",
        failing.is_empty(),
        if failing.is_empty() {
            format!("GF(2^{r}), v = 1..{}", 2 * p - 1)
        } else {
            format!("fails at v = {failing:?}")
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::{find_primitive_root, is_prime};

    fn run(p: u64, preset: Preset) -> RootDiagnostics {
        let sys = CyclotomicSystem::with_smallest_root(p).unwrap();
        let spec = SequenceSpec::preset(p, sys.g(), preset);
        root_diagnostics(&sys, &spec, &DiagnosticsOptions::default()).unwrap()
    }

    #[test]
    fn p13_everything_verifies() {
        let d = run(13, Preset::Eq6);
        assert_eq!((d.extension_degree, d.binary_degree), (6, 12));
        for name in [
            "class-sums",
            "u4-pair-sum",
            "root-count",
            "u2-pattern",
            "u-from-u2",
            "derivative-form",
            "root-set",
            "simple-roots",
            "mod2-image",
        ] {
            assert_eq!(d.check(name), Some(true), "{name}: {:?}", d.checks);
        }
        assert!(d.all_hold());
    }

    #[test]
    fn eq7_runs_generic_checks_only() {
        let d = run(13, Preset::Eq7);
        assert_eq!(d.check("u-from-u2"), None);
        assert!(d.all_hold(), "{:?}", d.checks);
    }

    #[test]
    fn holds_across_small_primes() {
        for p in (5..=61).filter(|&p| p % 4 == 1 && is_prime(p)) {
            for preset in [Preset::Eq6, Preset::Eq7] {
                let d = run(p, preset);
                if d.skipped.is_none() {
                    assert!(d.all_hold(), "p = {p}: {:?}", d.checks);
                }
            }
        }
    }

    #[test]
    fn skips_beyond_limit() {
        let sys = CyclotomicSystem::with_smallest_root(13).unwrap();
        let spec = SequenceSpec::preset(13, 2, Preset::Eq6);
        let opts = DiagnosticsOptions {
            max_degree: 5,
            ..Default::default()
        };
        let d = root_diagnostics(&sys, &spec, &opts).unwrap();
        assert!(d.skipped.is_some() && d.checks.is_empty());
        assert!(!d.all_hold());
    }

    #[test]
    fn factors_multiply_to_x_p_minus_one() {
        for p in [5u64, 13, 17, 29] {
            let factors = irreducible_factors_of_x_p_minus_one(p, 3).unwrap();
            let prod = factors.iter().fold(Poly::one(), |acc, f| &acc * f);
            assert_eq!(prod, Poly::x_pow_minus_one(p as usize), "p = {p}");
            let m = multiplicative_order(4, p) as usize;
            assert!(factors[1..].iter().all(|f| f.degree() == Some(m)));
            let _ = find_primitive_root(p);
        }
    }
}
