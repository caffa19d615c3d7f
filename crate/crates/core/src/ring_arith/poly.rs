use std::ops::{Add, Mul, Sub};

use super::{Field, Ring};
use crate::error::{Error, Result};

/// A dense univariate polynomial, coefficients in ascending degree order.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and [`Poly::degree`] returns `None` for it.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![R::one()])
    }

    /// `c·x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        Poly::monomial(R::one(), n) - Poly::one()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).copied().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<R> {
        self.coeffs.last().copied()
    }

    pub fn scale(&self, c: R) -> Self {
        Poly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, &c| acc * x + c)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| R::from_u64(i as u64) * c)
                .collect(),
        )
    }

    /// Product reduced modulo `x^n - 1` (cyclic convolution of length `n`).
    pub fn mul_mod_cyclic(&self, other: &Self, n: usize) -> Self {
        let mut out = vec![R::zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = out[k] + a * b;
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> Poly<F> {
    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lead_inv = divisor
            .leading()
            .and_then(Field::inv)
            .ok_or(Error::ZeroDivisor)?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd] * lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j] - c * d;
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; fails unless `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal("inexact polynomial division".into()))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic())
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $m(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_arith::{Gf4, Z4};
    use proptest::prelude::*;

    fn p4(c: &[u8]) -> Poly<Gf4> {
        Poly::new(c.iter().map(|&v| Gf4::try_from(v).unwrap()).collect())
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::<Gf4>::zero().degree(), None);
        assert_eq!(p4(&[0, 0, 0]).degree(), None);
        assert_eq!(p4(&[1]).degree(), Some(0));
    }

    #[test]
    fn gcd_examples() {
        // x² + 1 = (x + 1)² in characteristic 2
        let g = Poly::gcd(&p4(&[1, 0, 1]), &p4(&[1, 1])).unwrap();
        assert_eq!(g, p4(&[1, 1]));
        let f = p4(&[2, 3, 2]);
        assert_eq!(Poly::gcd(&f, &Poly::zero()).unwrap(), f.monic());
        assert_eq!(
            Poly::<Gf4>::gcd(&Poly::zero(), &Poly::zero()),
            Err(Error::ZeroGcd)
        );
    }

    #[test]
    fn derivative_in_char_two_drops_even_powers() {
        let f = p4(&[1, 2, 3, 1]);
        assert_eq!(f.derivative(), p4(&[2, 0, 1]));
    }

    #[test]
    fn cyclic_product_over_z4() {
        // (2 + 2x)(1 + 3x) = 2 + 0x + 2x² -> mod x² - 1: 0
        let a = Poly::new(vec![Z4::TWO, Z4::TWO]);
        let b = Poly::new(vec![Z4::ONE, Z4::THREE]);
        assert!(a.mul_mod_cyclic(&b, 2).is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Poly<Gf4>> {
        prop::collection::vec(0u8..4, 0..12).prop_map(|v| p4(&v))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_lcm_degree_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = Poly::gcd(&a, &b).unwrap();
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert_eq!(g.leading(), Some(Gf4::ONE));
            let lcm = (&a * &b).exact_div(&g).unwrap();
            prop_assert_eq!(
                g.degree().unwrap() + lcm.degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap()
            );
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
