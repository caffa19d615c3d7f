//! Linear complexity over GF(4) and over Z4.
//!
//! Over GF(4) the gcd route `L = N - deg gcd(x^N - 1, U(x))` is
//! authoritative; Berlekamp–Massey provides an independent second route.
//! Over Z4 the least degree of a connection polynomial `C(x)` with
//! `C(0) = 1` and `S(x)C(x) ≡ 0 (mod x^N - 1)` is found by exact linear
//! algebra.

mod bm;
pub mod diagnostics;
pub mod z4;

use serde::Serialize;

pub use bm::berlekamp_massey;
pub use diagnostics::{
    irreducible_factors_of_x_p_minus_one, root_diagnostics, DiagnosticsOptions, RootDiagnostics,
};

use crate::ring_arith::{Gf4, Poly, Ring, Z4};
use crate::seqgen::{F4Sequence, QuaternarySequence};
use z4::Solvability;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Gcd,
    BerlekampMassey,
    Z4Annihilator,
}

/// Linear complexity with the polynomial that certifies it: the minimal
/// polynomial over a field, or a connection polynomial over Z4.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearComplexityResult<R> {
    pub linear_complexity: usize,
    pub poly: Poly<R>,
    pub method: Method,
}

/// `gcd(x^N - 1, U(x))`, monic.
pub fn annihilator_gcd(u: &F4Sequence) -> Poly<Gf4> {
    let cycle = Poly::x_pow_minus_one(u.period());
    Poly::gcd(&cycle, &u.generating_polynomial()).expect("x^N - 1 is nonzero")
}

pub fn lc_f4_gcd(u: &F4Sequence) -> LinearComplexityResult<Gf4> {
    let n = u.period();
    let g = annihilator_gcd(u);
    let minimal = Poly::x_pow_minus_one(n)
        .exact_div(&g)
        .expect("the gcd divides x^N - 1");
    LinearComplexityResult {
        linear_complexity: n - g.degree().expect("gcd is nonzero"),
        poly: minimal,
        method: Method::Gcd,
    }
}

/// Berlekamp–Massey on two full periods; returns the reciprocal of the
/// connection polynomial, i.e. the monic minimal polynomial.
pub fn lc_f4_bm(u: &F4Sequence) -> LinearComplexityResult<Gf4> {
    let two_periods: Vec<Gf4> = u.values().iter().chain(u.values()).copied().collect();
    let (l, conn) = berlekamp_massey(&two_periods);
    let mut rev: Vec<Gf4> = (0..=l).map(|i| conn.coeff(l - i)).collect();
    if l == 0 {
        rev = vec![Gf4::ONE];
    }
    LinearComplexityResult {
        linear_complexity: l,
        poly: Poly::new(rev).monic(),
        method: Method::BerlekampMassey,
    }
}

/// True iff `Σ_i m_i u(t + i) = 0` for every `t` (indices mod the period).
pub fn annihilates<R: Ring>(m: &Poly<R>, u: &[R]) -> bool {
    let n = u.len();
    (0..2 * n).all(|t| {
        m.coeffs()
            .iter()
            .enumerate()
            .fold(R::zero(), |acc, (i, &c)| acc + c * u[(t + i) % n])
            .is_zero()
    })
}

/// Checks that `m` annihilates `u` and that removing any one irreducible
/// factor (from `factors`, the irreducible factors of `x^p - 1`) breaks that.
pub fn is_minimal_annihilator(m: &Poly<Gf4>, u: &F4Sequence, factors: &[Poly<Gf4>]) -> bool {
    if !annihilates(m, u.values()) {
        return false;
    }
    factors
        .iter()
        .filter(|f| f.divides(m))
        .all(|f| !annihilates(&m.exact_div(f).expect("f divides m"), u.values()))
}

/// Z4 linear complexity together with the infeasibility certificate for
/// degree `L - 1`.
#[derive(Clone, Debug)]
pub struct Z4Complexity {
    pub result: LinearComplexityResult<Z4>,
    /// `y` with `yᵀA = 0`, `yᵀb ≠ 0` for the degree-`(L-1)` system; absent
    /// when `L = 0`.
    pub certificate: Option<Vec<Z4>>,
}

/// The system `Σ_{k=1..m} c_k s(t-k) = -s(t)`, `t = 0..N`, whose solutions
/// are the connection polynomials of degree at most `m`.
pub fn connection_system(s: &QuaternarySequence, degree: usize) -> (Vec<Vec<Z4>>, Vec<Z4>) {
    let v = s.values();
    let n = v.len();
    let a = (0..n)
        .map(|t| (1..=degree).map(|k| v[(t + n * k - k) % n]).collect())
        .collect();
    let b = v.iter().map(|&x| -x).collect();
    (a, b)
}

fn solve_degree(s: &QuaternarySequence, degree: usize) -> Solvability {
    let (a, b) = connection_system(s, degree);
    z4::solve(&a, &b)
}

/// Least `m` admitting a connection polynomial of degree `<= m`.
///
/// Feasibility is monotone in `m` (pad with `c_{m+1} = 0`) and holds at
/// `m = N` via `1 - x^N`, so the least feasible degree is found by bisection.
pub fn lc_z4(s: &QuaternarySequence) -> Z4Complexity {
    let n = s.period();
    let (mut lo, mut hi) = (0usize, n);
    let mut witness = match solve_degree(s, n) {
        Solvability::Solvable(x) => x,
        Solvability::Infeasible(_) => unreachable!("1 - x^N is always a connection polynomial"),
    };
    while lo < hi {
        let mid = (lo + hi) / 2;
        match solve_degree(s, mid) {
            Solvability::Solvable(x) => {
                hi = mid;
                witness = x;
            }
            Solvability::Infeasible(_) => lo = mid + 1,
        }
    }
    let l = lo;
    if witness.len() != l {
        witness = match solve_degree(s, l) {
            Solvability::Solvable(x) => x,
            Solvability::Infeasible(_) => unreachable!("degree {l} was found feasible"),
        };
    }
    let certificate = l.checked_sub(1).map(|d| match solve_degree(s, d) {
        Solvability::Infeasible(y) => y,
        Solvability::Solvable(_) => unreachable!("degree {d} was found infeasible"),
    });
    let mut coeffs = vec![Z4::ONE];
    coeffs.extend(witness);
    Z4Complexity {
        result: LinearComplexityResult {
            linear_complexity: l,
            poly: Poly::new(coeffs),
            method: Method::Z4Annihilator,
        },
        certificate,
    }
}

/// `S(x) C(x) ≡ 0 (mod x^N - 1)` and `C(0) = 1`.
pub fn is_connection_polynomial(s: &QuaternarySequence, c: &Poly<Z4>) -> bool {
    c.coeff(0) == Z4::ONE
        && s.generating_polynomial()
            .mul_mod_cyclic(c, s.period())
            .is_zero()
}

/// Re-checks a degree-`L - 1` certificate against a freshly built system.
pub fn verify_certificate(s: &QuaternarySequence, degree: usize, y: &[Z4]) -> bool {
    let (a, b) = connection_system(s, degree);
    z4::verify_infeasibility(&a, &b, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::is_prime;
    use crate::seqgen::{build_sequence, gray_map, Preset, SequenceSpec};

    fn f4_of(p: u64, g: u64, preset: Preset) -> F4Sequence {
        gray_map(&build_sequence(&SequenceSpec::preset(p, g, preset)).unwrap())
    }

    #[test]
    fn char_two_square_identity() {
        let xp1 = Poly::<Gf4>::x_pow_minus_one(13);
        assert_eq!(&xp1 * &xp1, Poly::x_pow_minus_one(26));
    }

    #[test]
    fn f4_complexity_examples() {
        let u17 = f4_of(17, 3, Preset::Eq6);
        let r = lc_f4_gcd(&u17);
        assert_eq!(r.linear_complexity, 34);
        assert_eq!(r.poly, Poly::x_pow_minus_one(34));
        let u13 = f4_of(13, 2, Preset::Eq6);
        assert_eq!(lc_f4_gcd(&u13).linear_complexity, 20);
        assert_eq!(annihilator_gcd(&u13).degree(), Some(6));
        assert_eq!(lc_f4_bm(&f4_of(13, 2, Preset::Eq7)).linear_complexity, 26);
    }

    #[test]
    fn degenerate_sequences() {
        let zero = F4Sequence::new(vec![Gf4::ZERO; 26]);
        let r = lc_f4_gcd(&zero);
        assert_eq!((r.linear_complexity, r.poly.clone()), (0, Poly::one()));
        assert_eq!(lc_f4_bm(&zero).linear_complexity, 0);
        let mu = F4Sequence::new(vec![Gf4::MU; 26]);
        assert_eq!(lc_f4_bm(&mu).linear_complexity, 1);
        assert_eq!(lc_f4_gcd(&mu).linear_complexity, 1);
    }

    #[test]
    fn gcd_and_bm_agree_with_identical_minimal_polynomials() {
        for p in (5..=100).filter(|&p| p % 4 == 1 && is_prime(p)) {
            let g = crate::cyclotomy::find_primitive_root(p).unwrap();
            for preset in [Preset::Eq6, Preset::Eq7] {
                let u = f4_of(p, g, preset);
                let (a, b) = (lc_f4_gcd(&u), lc_f4_bm(&u));
                assert_eq!(a.linear_complexity, b.linear_complexity, "p = {p}");
                assert_eq!(a.poly, b.poly, "p = {p}");
                assert!(annihilates(&a.poly, u.values()));
            }
        }
    }

    #[test]
    fn z4_constant_two() {
        let s = QuaternarySequence::from_symbols(&[2; 10]);
        let r = lc_z4(&s);
        assert_eq!(r.result.linear_complexity, 1);
        // 1 + x and 1 + 3x both work here since 2 = -2.
        assert!(is_connection_polynomial(&s, &r.result.poly));
        assert!(is_connection_polynomial(
            &s,
            &Poly::new(vec![Z4::ONE, Z4::THREE])
        ));
        assert!(verify_certificate(&s, 0, r.certificate.as_ref().unwrap()));
        let zero = QuaternarySequence::from_symbols(&[0; 6]);
        let r = lc_z4(&zero);
        assert_eq!(r.result.linear_complexity, 0);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn z4_presets_at_13() {
        for preset in [Preset::Eq6, Preset::Eq7] {
            let s = build_sequence(&SequenceSpec::preset(13, 2, preset)).unwrap();
            let r = lc_z4(&s);
            assert_eq!(r.result.linear_complexity, 26);
            assert!(is_connection_polynomial(&s, &r.result.poly));
            assert!(verify_certificate(&s, 25, r.certificate.as_ref().unwrap()));
        }
    }

    #[test]
    fn z4_matches_exhaustive_search_on_short_sequences() {
        // Exhaustive oracle: smallest degree m with some C of degree <= m.
        let oracle = |s: &QuaternarySequence| {
            let n = s.period();
            (0..=n)
                .find(|&m| {
                    (0..4usize.pow(m as u32)).any(|idx| {
                        let mut c = vec![Z4::ONE];
                        c.extend((0..m).map(|k| Z4::new(((idx >> (2 * k)) & 3) as u8)));
                        is_connection_polynomial(s, &Poly::new(c))
                    })
                })
                .unwrap()
        };
        let samples: [&[u8]; 6] = [
            &[1, 2, 3, 0, 2, 1],
            &[2, 0, 2, 0, 2, 0],
            &[1, 1, 3, 3],
            &[0, 2, 2, 0, 2],
            &[3, 1, 0, 2, 2, 1],
            &[2, 2, 0, 0, 0, 0],
        ];
        for sym in samples {
            let s = QuaternarySequence::from_symbols(sym);
            assert_eq!(lc_z4(&s).result.linear_complexity, oracle(&s), "{sym:?}");
        }
    }
}
