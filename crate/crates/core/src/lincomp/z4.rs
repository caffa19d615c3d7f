//! Solvability of linear systems `A x = b` over Z4.
//!
//! Elimination first uses every available unit pivot. What is left has only
//! even entries, so after halving it becomes a system over GF(2). An
//! infeasible system yields a certificate `y` with `yᵀA = 0` and `yᵀb ≠ 0`,
//! which [`verify_infeasibility`] checks by plain matrix products.

use crate::ring_arith::Z4;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Solvability {
    Solvable(Vec<Z4>),
    Infeasible(Vec<Z4>),
}

fn add_row_multiple(dst: &mut [Z4], src: &[Z4], c: Z4) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = *d + c * s;
    }
}

pub fn solve(a: &[Vec<Z4>], b: &[Z4]) -> Solvability {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Z4>> = a.to_vec();
    let mut rhs = b.to_vec();
    let mut track: Vec<Vec<Z4>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { Z4::ONE } else { Z4::ZERO })
                .collect()
        })
        .collect();
    let mut perm: Vec<usize> = (0..cols).collect();

    let mut rank = 0;
    while rank < rows.min(cols) {
        let Some((pi, pj)) = (rank..rows)
            .flat_map(|i| (rank..cols).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j].is_unit())
        else {
            break;
        };
        m.swap(rank, pi);
        rhs.swap(rank, pi);
        track.swap(rank, pi);
        if pj != rank {
            for row in m.iter_mut() {
                row.swap(rank, pj);
            }
            perm.swap(rank, pj);
        }
        let inv = m[rank][rank].unit_inverse().expect("pivot is a unit");
        for v in m[rank].iter_mut() {
            *v = *v * inv;
        }
        for v in track[rank].iter_mut() {
            *v = *v * inv;
        }
        rhs[rank] = rhs[rank] * inv;
        let (pivot_row, pivot_track, pivot_rhs) = (m[rank].clone(), track[rank].clone(), rhs[rank]);
        for i in 0..rows {
            if i == rank || m[i][rank] == Z4::ZERO {
                continue;
            }
            let c = -m[i][rank];
            add_row_multiple(&mut m[i], &pivot_row, c);
            add_row_multiple(&mut track[i], &pivot_track, c);
            rhs[i] = rhs[i] + c * pivot_rhs;
        }
        rank += 1;
    }

    // Rows past `rank` now carry only even entries.
    if let Some(i) = (rank..rows).find(|&i| rhs[i].is_unit()) {
        return Solvability::Infeasible(track[i].iter().map(|&t| Z4::TWO * t).collect());
    }

    let lower: Vec<usize> = (rank..rows).collect();
    let free = cols - rank;
    // GF(2) rows: halved coefficients, halved rhs, and the combination of
    // lower rows that produced them.
    let mut bits: Vec<(Vec<bool>, bool, Vec<bool>)> = lower
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let coeffs = (rank..cols).map(|j| m[i][j].value() == 2).collect();
            let mut comb = vec![false; lower.len()];
            comb[k] = true;
            (coeffs, rhs[i].value() == 2, comb)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r2 = 0;
    for col in 0..free {
        let Some(pi) = (r2..bits.len()).find(|&i| bits[i].0[col]) else {
            continue;
        };
        bits.swap(r2, pi);
        let pivot = bits[r2].clone();
        for (i, row) in bits.iter_mut().enumerate() {
            if i != r2 && row.0[col] {
                for (x, &y) in row.0.iter_mut().zip(&pivot.0) {
                    *x ^= y;
                }
                row.1 ^= pivot.1;
                for (x, &y) in row.2.iter_mut().zip(&pivot.2) {
                    *x ^= y;
                }
            }
        }
        pivots.push(col);
        r2 += 1;
    }
    if let Some(row) = bits[r2..].iter().find(|row| row.1) {
        let mut y = vec![Z4::ZERO; rows];
        for (k, &used) in row.2.iter().enumerate() {
            if used {
                add_row_multiple(&mut y, &track[lower[k]], Z4::ONE);
            }
        }
        return Solvability::Infeasible(y);
    }

    let mut x_free = vec![Z4::ZERO; free];
    for (k, &col) in pivots.iter().enumerate() {
        if bits[k].1 {
            x_free[col] = Z4::ONE;
        }
    }
    let mut x_perm = vec![Z4::ZERO; cols];
    x_perm[rank..].copy_from_slice(&x_free);
    for k in 0..rank {
        let mut v = rhs[k];
        for j in rank..cols {
            v = v - m[k][j] * x_perm[j];
        }
        x_perm[k] = v;
    }
    let mut x = vec![Z4::ZERO; cols];
    for (k, &orig) in perm.iter().enumerate() {
        x[orig] = x_perm[k];
    }
    Solvability::Solvable(x)
}

/// `A x == b`.
pub fn is_solution(a: &[Vec<Z4>], b: &[Z4], x: &[Z4]) -> bool {
    a.iter().zip(b).all(|(row, &bi)| {
        row.iter()
            .zip(x)
            .fold(Z4::ZERO, |acc, (&r, &xi)| acc + r * xi)
            == bi
    })
}

/// `yᵀA = 0` and `yᵀb ≠ 0`, which rules out every solution of `A x = b`.
pub fn verify_infeasibility(a: &[Vec<Z4>], b: &[Z4], y: &[Z4]) -> bool {
    let cols = a.first().map_or(0, Vec::len);
    let annihilates = (0..cols).all(|j| {
        a.iter()
            .zip(y)
            .fold(Z4::ZERO, |acc, (row, &yi)| acc + yi * row[j])
            == Z4::ZERO
    });
    let yb = b
        .iter()
        .zip(y)
        .fold(Z4::ZERO, |acc, (&bi, &yi)| acc + yi * bi);
    annihilates && yb != Z4::ZERO
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(v: &[u8]) -> Vec<Z4> {
        v.iter().map(|&x| Z4::new(x)).collect()
    }

    // Brute-force oracle over all 4^cols assignments.
    fn brute_solvable(a: &[Vec<Z4>], b: &[Z4], cols: usize) -> bool {
        (0..4usize.pow(cols as u32)).any(|idx| {
            let x: Vec<Z4> = (0..cols)
                .map(|k| Z4::new(((idx >> (2 * k)) & 3) as u8))
                .collect();
            is_solution(a, b, &x)
        })
    }

    #[test]
    fn two_torsion_cases() {
        // 2x = 1 has no solution; certificate from the unit-rhs branch
        let a = vec![z(&[2])];
        match solve(&a, &z(&[1])) {
            Solvability::Infeasible(y) => assert!(verify_infeasibility(&a, &z(&[1]), &y)),
            other => panic!("{other:?}"),
        }
        // 2x = 2, 2x = 0 (x = 1 and x = 0 mod 2 conflict) -> GF(2) certificate
        let a = vec![z(&[2]), z(&[2])];
        let b = z(&[2, 0]);
        match solve(&a, &b) {
            Solvability::Infeasible(y) => assert!(verify_infeasibility(&a, &b, &y)),
            other => panic!("{other:?}"),
        }
        let a = vec![z(&[2, 1]), z(&[2, 3])];
        let b = z(&[3, 1]);
        match solve(&a, &b) {
            Solvability::Solvable(x) => assert!(is_solution(&a, &b, &x)),
            other => panic!("{other:?}"),
        }
    }

    fn system() -> impl Strategy<Value = (Vec<Vec<Z4>>, Vec<Z4>, usize)> {
        (1usize..5, 1usize..4).prop_flat_map(|(rows, cols)| {
            (
                prop::collection::vec(
                    prop::collection::vec((0u8..4).prop_map(Z4::new), cols),
                    rows,
                ),
                prop::collection::vec((0u8..4).prop_map(Z4::new), rows),
                Just(cols),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]
        #[test]
        fn agrees_with_brute_force((a, b, cols) in system()) {
            let expected = brute_solvable(&a, &b, cols);
            match solve(&a, &b) {
                Solvability::Solvable(x) => {
                    prop_assert!(expected);
                    prop_assert!(is_solution(&a, &b, &x));
                }
                Solvability::Infeasible(y) => {
                    prop_assert!(!expected);
                    prop_assert!(verify_infeasibility(&a, &b, &y));
                }
            }
        }
    }
}
