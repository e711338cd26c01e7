#![allow(dead_code)]

use abcolim_core::abgrp::{AbHom, FGAbGroup, IntMatrix};
use abcolim_core::fincat::{group_as_category, FinCategory, FinGroup};
use abcolim_core::random::{random_join_semilattice, rng};
use num_bigint::BigInt;

/// Small named categories shared by the property suites.
pub fn corpus() -> Vec<(String, FinCategory)> {
    let mut out: Vec<(String, FinCategory)> = vec![
        ("terminal".into(), FinCategory::terminal()),
        ("discrete2".into(), FinCategory::discrete(2)),
        ("discrete3".into(), FinCategory::discrete(3)),
        ("parallel".into(), FinCategory::parallel_pair()),
        ("span".into(), FinCategory::span()),
        ("cospan".into(), FinCategory::cospan()),
        ("bz2".into(), group_as_category(&FinGroup::cyclic(2))),
        ("bz3".into(), group_as_category(&FinGroup::cyclic(3))),
        ("diamond".into(), diamond()),
        ("chain2xspan".into(), FinCategory::product(&FinCategory::chain(2), &FinCategory::span())),
        ("chain2xchain3".into(), FinCategory::product(&FinCategory::chain(2), &FinCategory::chain(3))),
    ];
    for n in 1..=4 {
        out.push((format!("chain{n}"), FinCategory::chain(n)));
    }
    let mut r = rng(2024);
    for i in 0..4 {
        out.push((format!("semilattice{i}"), random_join_semilattice(&mut r, 3, 3)));
    }
    out
}

/// `⊥ < l, r < ⊤`.
pub fn diamond() -> FinCategory {
    let labels = ["bot", "l", "r", "top"].iter().map(ToString::to_string).collect();
    FinCategory::poset(labels, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
}

fn odometer(digits: &mut [i64], base: &[i64]) -> bool {
    for (d, b) in digits.iter_mut().zip(base) {
        *d += 1;
        if *d < *b {
            return true;
        }
        *d = 0;
    }
    false
}

/// Every homomorphism `a → ℤ/n`, by brute force over generator images.
pub fn homs_to_cyclic(a: &FGAbGroup, n: i64) -> Vec<AbHom> {
    let target = FGAbGroup::cyclic(n);
    let g = a.generators();
    let mut digits = vec![0i64; g];
    let mut out = Vec::new();
    loop {
        let ok = (0..a.relations().cols()).all(|j| {
            let s: BigInt = (0..g).map(|i| &a.relations()[(i, j)] * digits[i]).sum();
            (s % n) == BigInt::from(0)
        });
        if ok {
            let m = IntMatrix::from_rows(&[digits.clone()]);
            out.push(AbHom::new(a.clone(), target.clone(), m).unwrap());
        }
        if !odometer(&mut digits, &vec![n; g]) {
            return out;
        }
    }
}

/// Every homomorphism `ℤ/n → a`: elements of `a` killed by `n`.
pub fn homs_from_cyclic(n: i64, a: &FGAbGroup) -> Vec<AbHom> {
    let source = FGAbGroup::cyclic(n);
    let from = a.from_canonical();
    let factors: Vec<i64> = a.invariant_factors().iter().map(|d| i64::try_from(d).unwrap()).collect();
    let k = factors.len();
    let width = from.source().generators();
    let mut digits = vec![0i64; k];
    let mut out = Vec::new();
    loop {
        let mut v = vec![BigInt::from(0); width];
        for i in 0..k {
            v[i] = BigInt::from(digits[i]);
        }
        let elem = from.apply(&v);
        let scaled: Vec<BigInt> = elem.iter().map(|x| x * n).collect();
        if a.is_zero_element(&scaled) {
            let m = IntMatrix::from_columns(a.generators(), &[elem]);
            out.push(AbHom::new(source.clone(), a.clone(), m).unwrap());
        }
        if !odometer(&mut digits, &factors) {
            return out;
        }
    }
}

/// Cartesian product of per-object choices.
pub fn choices<T: Clone>(options: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::new();
        for prefix in &out {
            for o in opts {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}
