//! Smith normal form against independent oracles.

use abcolim_core::abgrp::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k × k` minors.
fn minor_gcd(m: &[Vec<i128>], k: usize) -> i128 {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut g = 0i128;
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let sub: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factorization_and_unimodularity(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m.rows()));
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert!(i == j || snf.s[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn divisibility_chain(rows in matrix()) {
        let d = smith_normal_form(&IntMatrix::from_rows(&rows)).diagonal();
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            prop_assert!(divides);
        }
    }

    #[test]
    fn products_of_factors_are_minor_gcds(rows in matrix()) {
        let d = smith_normal_form(&IntMatrix::from_rows(&rows)).diagonal();
        let wide: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut prefix = 1i128;
        for (k, dk) in d.iter().enumerate().take(3) {
            prefix *= dk.to_i128().unwrap();
            prop_assert_eq!(prefix, minor_gcd(&wide, k + 1), "k = {}", k + 1);
        }
    }
}

#[test]
fn two_by_two_worked_example() {
    let rows = vec![vec![2i128, 4], vec![6, 8]];
    assert_eq!(minor_gcd(&rows, 1), 2);
    assert_eq!(minor_gcd(&rows, 2), 8);
    let d = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]])).diagonal();
    assert_eq!(d, vec![BigInt::from(2), BigInt::from(4)]);
}
