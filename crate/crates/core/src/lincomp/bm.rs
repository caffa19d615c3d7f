//! Berlekamp–Massey over a field.

use crate::ring_arith::{Field, Poly};

/// Shortest connection polynomial `C(x) = 1 + c_1 x + … + c_L x^L` with
/// `s_i + c_1 s_{i-1} + … + c_L s_{i-L} = 0` for all `L <= i < len`.
pub fn berlekamp_massey<F: Field>(s: &[F]) -> (usize, Poly<F>) {
    let mut c = vec![F::one()];
    let mut b = vec![F::one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last_disc = F::one();

    for i in 0..s.len() {
        let mut d = s[i];
        for j in 1..=l.min(c.len() - 1) {
            d = d + c[j] * s[i - j];
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = d * last_disc.inv().expect("stored discrepancy is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, F::zero());
        }
        for (j, &bj) in b.iter().enumerate() {
            c[j + shift] = c[j + shift] - coef * bj;
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            last_disc = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(l + 1, F::zero());
    (l, Poly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_arith::{Gf2, Gf4};

    #[test]
    fn m_sequence_over_gf2() {
        // x^4 + x + 1 recurrence: s_{t+4} = s_{t+1} + s_t
        let mut s = vec![Gf2(true), Gf2(false), Gf2(false), Gf2(false)];
        for t in 0..26 {
            let v = s[t + 1] + s[t];
            s.push(v);
        }
        let (l, c) = berlekamp_massey(&s);
        assert_eq!(l, 4);
        assert_eq!(c.degree(), Some(4));
    }

    #[test]
    fn constant_and_zero() {
        let (l, c) = berlekamp_massey(&[Gf4::MU; 10]);
        assert_eq!(l, 1);
        assert_eq!(c, Poly::new(vec![Gf4::ONE, Gf4::ONE]));
        assert_eq!(berlekamp_massey(&[Gf4::ZERO; 10]).0, 0);
    }

    #[test]
    fn impulse_needs_full_length() {
        let mut s = vec![Gf4::ZERO; 12];
        s[5] = Gf4::MU;
        assert_eq!(berlekamp_massey(&s).0, 6);
    }
}
