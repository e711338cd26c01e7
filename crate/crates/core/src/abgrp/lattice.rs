use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{smith_normal_form, IntMatrix, Snf};

/// The column lattice of an integer matrix, with its Smith form cached.
#[derive(Clone, Debug)]
pub(crate) struct Lattice {
    pub(crate) basis: IntMatrix,
    pub(crate) snf: Snf,
    rank: usize,
}

impl Lattice {
    pub(crate) fn new(basis: IntMatrix) -> Self {
        let snf = smith_normal_form(&basis);
        let rank = snf.rank();
        Lattice { basis, snf, rank }
    }

    /// Coefficients `x` with `basis · x = v`, if `v` lies in the lattice.
    pub(crate) fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.snf.u.mul_vec(v);
        let mut y = vec![BigInt::zero(); self.basis.cols()];
        for (i, wi) in w.iter().enumerate() {
            if i < self.rank {
                let (q, r) = wi.div_rem(&self.snf.s[(i, i)]);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !wi.is_zero() {
                return None;
            }
        }
        Some(self.snf.v.mul_vec(&y))
    }

    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        let w = self.snf.u.mul_vec(v);
        w.iter().enumerate().all(|(i, wi)| {
            if i < self.rank {
                wi.is_multiple_of(&self.snf.s[(i, i)])
            } else {
                wi.is_zero()
            }
        })
    }
}

/// A basis of the integer kernel `{x | m · x = 0}`, as columns.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let keep: Vec<usize> = (rank..m.cols()).collect();
    snf.v.select_columns(&keep)
}
