use num_bigint::BigUint;
use rand::Rng;

use super::{FiniteField, Poly};
use crate::error::{Error, Result};

/// The extension `F[x]/(f)` of a finite field `F` by a monic irreducible
/// `f` of degree `m`.
#[derive(Clone, Debug)]
pub struct ExtField<F> {
    modulus: Poly<F>,
    degree: usize,
}

/// An element of an [`ExtField`]: exactly `m` coefficients, low degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElem<F> {
    coeffs: Vec<F>,
}

impl<F> ExtElem<F> {
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }
}

impl<F: FiniteField> ExtField<F> {
    /// Builds GF(q^m) over `F = GF(q)` using the first monic irreducible of
    /// degree `m` in a fixed scan order.
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let modulus = first_irreducible::<F>(m)?;
        Ok(ExtField { modulus, degree: m })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    /// Number of field elements, `q^m`.
    pub fn size(&self) -> BigUint {
        BigUint::from(F::ORDER).pow(self.degree as u32)
    }

    pub fn zero(&self) -> ExtElem<F> {
        self.embed(F::zero())
    }

    pub fn one(&self) -> ExtElem<F> {
        self.embed(F::one())
    }

    pub fn embed(&self, c: F) -> ExtElem<F> {
        let mut coeffs = vec![F::zero(); self.degree];
        coeffs[0] = c;
        ExtElem { coeffs }
    }

    fn reduce(&self, p: &Poly<F>) -> ExtElem<F> {
        let r = p.rem(&self.modulus).expect("modulus is nonzero");
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree, F::zero());
        ExtElem { coeffs }
    }

    fn to_poly(&self, a: &ExtElem<F>) -> Poly<F> {
        Poly::new(a.coeffs.clone())
    }

    pub fn is_zero(&self, a: &ExtElem<F>) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self, a: &ExtElem<F>) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &ExtElem<F>, b: &ExtElem<F>) -> ExtElem<F> {
        ExtElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &ExtElem<F>, b: &ExtElem<F>) -> ExtElem<F> {
        ExtElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| x - y)
                .collect(),
        }
    }

    pub fn scale(&self, c: F, a: &ExtElem<F>) -> ExtElem<F> {
        ExtElem {
            coeffs: a.coeffs.iter().map(|&x| c * x).collect(),
        }
    }

    pub fn mul(&self, a: &ExtElem<F>, b: &ExtElem<F>) -> ExtElem<F> {
        self.reduce(&(&self.to_poly(a) * &self.to_poly(b)))
    }

    /// Square-and-multiply over the binary digits of an arbitrary-precision
    /// exponent.
    pub fn pow(&self, a: &ExtElem<F>, e: &BigUint) -> ExtElem<F> {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn pow_u64(&self, a: &ExtElem<F>, e: u64) -> ExtElem<F> {
        self.pow(a, &BigUint::from(e))
    }

    /// Evaluates a polynomial over the base field at a point of the extension.
    pub fn eval(&self, p: &Poly<F>, x: &ExtElem<F>) -> ExtElem<F> {
        p.coeffs().iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, x), &self.embed(c))
        })
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem<F> {
        ExtElem {
            coeffs: (0..self.degree)
                .map(|_| F::from_index(rng.gen_range(0..F::ORDER)))
                .collect(),
        }
    }
}

/// Returns an element of multiplicative order exactly `p` (a prime).
///
/// Draws random `ζ` and sets `α = ζ^((q^m - 1)/p)` until `α ≠ 1`.
pub fn find_root_of_unity<F: FiniteField, R: Rng + ?Sized>(
    field: &ExtField<F>,
    p: u64,
    rng: &mut R,
) -> Result<ExtElem<F>> {
    let group_order = field.size() - 1u32;
    let p_big = BigUint::from(p);
    if p < 2 || &group_order % &p_big != BigUint::from(0u32) {
        return Err(Error::NoRootOfUnity {
            p,
            order: group_order.to_string(),
        });
    }
    let cofactor = &group_order / &p_big;
    // A random nonzero ζ fails with probability 1/p per draw.
    for _ in 0..256 {
        let zeta = field.random(rng);
        if field.is_zero(&zeta) {
            continue;
        }
        let alpha = field.pow(&zeta, &cofactor);
        if !field.is_one(&alpha) {
            return Ok(alpha);
        }
    }
    Err(Error::Internal(format!(
        "no element of order {p} found after 256 draws"
    )))
}

fn first_irreducible<F: FiniteField>(m: usize) -> Result<Poly<F>> {
    let q = F::ORDER as u128;
    let count = q.checked_pow(m as u32).unwrap_or(u128::MAX);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut rest = idx;
        for _ in 0..m {
            coeffs.push(F::from_index((rest % q) as u64));
            rest /= q;
        }
        coeffs.push(F::one());
        let f = Poly::new(coeffs);
        if is_irreducible(&f) {
            return Ok(f);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {m}"
    )))
}

/// Distinct-degree test: a monic `f` of degree `m` is irreducible iff
/// `gcd(x^(q^i) - x, f) = 1` for every `1 <= i <= m/2`.
fn is_irreducible<F: FiniteField>(f: &Poly<F>) -> bool {
    let Some(m) = f.degree() else { return false };
    if m == 0 {
        return false;
    }
    let x = Poly::monomial(F::one(), 1);
    let mut h = x.rem(f).expect("f is nonzero");
    for _ in 1..=m / 2 {
        let mut hq = Poly::one();
        for _ in 0..F::ORDER {
            hq = (&hq * &h).rem(f).expect("f is nonzero");
        }
        h = hq;
        let g = Poly::gcd(&(&h - &x), f).expect("f is nonzero");
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}
