use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U · M · V = S` with both transforms unimodular.
///
/// `u_inv` is carried along so that callers can map back to the original
/// generators without inverting `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries `S[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    // Every row operation on `a` is mirrored on `u`, and its inverse on the
    // columns of `u_inv`.
    let swap_rows = |a: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, i: usize, j: usize| {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
        ui.swap_cols(i, j);
    };
    let add_rows = |a: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, dst: usize, src: usize, k: &BigInt| {
        a.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
        ui.add_col_multiple(src, dst, &-k);
    };

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t, rows, t, cols) else {
            break;
        };
        swap_rows(&mut a, &mut u, &mut u_inv, t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                add_rows(&mut a, &mut u, &mut u_inv, i, t, &-q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                // A remainder smaller than the pivot survived; promote it.
                let mut best: Option<(usize, usize)> = None;
                let mut best_abs = a[(t, t)].abs();
                for i in t + 1..rows {
                    let x = a[(i, t)].abs();
                    if !x.is_zero() && x < best_abs {
                        best_abs = x;
                        best = Some((i, t));
                    }
                }
                for j in t + 1..cols {
                    let x = a[(t, j)].abs();
                    if !x.is_zero() && x < best_abs {
                        best_abs = x;
                        best = Some((t, j));
                    }
                }
                match best {
                    Some((i, j)) if j == t => swap_rows(&mut a, &mut u, &mut u_inv, t, i),
                    Some((_, j)) => {
                        a.swap_cols(t, j);
                        v.swap_cols(t, j);
                    }
                    None => {}
                }
                continue;
            }
            // Row and column are clear; enforce divisibility of the remainder.
            let p = a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    add_rows(&mut a, &mut u, &mut u_inv, t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    Snf { s: a, u, u_inv, v }
}

fn smallest_entry(a: &IntMatrix, r0: usize, r1: usize, c0: usize, c1: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in r0..r1 {
        for j in c0..c1 {
            let x = a[(i, j)].abs();
            if x.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| x < *b) {
                best = Some(((i, j), x));
            }
        }
    }
    best.map(|(p, _)| p)
}
