use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::abgrp::IntMatrix;

/// Sparse integer vector, sorted by index, no zero entries.
pub(crate) type Sparse = Vec<(usize, BigInt)>;

/// `a + k·b`.
pub(crate) fn add_scaled(a: &Sparse, b: &Sparse, k: &BigInt) -> Sparse {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, &b[j].1 * k));
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * k;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn sparse_from_dense(offset: usize, v: &[BigInt]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (offset + i, x.clone()))
        .collect()
}

/// Result of eliminating generators that occur with a unit coefficient.
pub(crate) struct Reduction {
    /// Original indices of the surviving generators, increasing.
    pub(crate) survivors: Vec<usize>,
    /// Remaining relations over the survivors, one per column.
    pub(crate) relations: IntMatrix,
    /// Every original generator written in survivor positions.
    pub(crate) expressions: Vec<Sparse>,
}

/// Tietze elimination on a sparse presentation: repeatedly solve a relation
/// for its largest-index generator with coefficient ±1.
pub(crate) fn reduce(generators: usize, relations: Vec<Sparse>) -> Reduction {
    let mut rels: Vec<Option<Sparse>> = relations.into_iter().map(|r| (!r.is_empty()).then_some(r)).collect();
    let mut occurs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); generators];
    for (r, rel) in rels.iter().enumerate() {
        for (g, _) in rel.iter().flatten() {
            occurs[*g].insert(r);
        }
    }
    let mut solved: Vec<Option<Sparse>> = vec![None; generators];
    let mut order = Vec::new();
    let mut queue: VecDeque<usize> = (0..rels.len()).collect();
    let mut queued = vec![true; rels.len()];

    while let Some(r) = queue.pop_front() {
        queued[r] = false;
        let Some(rel) = rels[r].as_ref() else { continue };
        let Some((x, unit)) = rel.iter().rev().find(|(_, c)| c.abs().is_one()).cloned() else {
            continue;
        };
        let rel = rels[r].take().expect("relation present");
        for (g, _) in &rel {
            occurs[*g].remove(&r);
        }
        // unit·x + rest = 0, so x = −unit·rest.
        let expr: Sparse = rel.iter().filter(|(g, _)| *g != x).map(|(g, c)| (*g, -(&unit * c))).collect();
        let users: Vec<usize> = occurs[x].iter().copied().collect();
        for s in users {
            let old = rels[s].take().expect("occurrence index is live");
            let k = old.iter().find(|(g, _)| *g == x).map(|(_, c)| c.clone()).expect("x occurs");
            let without: Sparse = old.iter().filter(|(g, _)| *g != x).cloned().collect();
            let new = add_scaled(&without, &expr, &k);
            for (g, _) in &old {
                occurs[*g].remove(&s);
            }
            for (g, _) in &new {
                occurs[*g].insert(s);
            }
            if !new.is_empty() {
                rels[s] = Some(new);
                if !queued[s] {
                    queued[s] = true;
                    queue.push_back(s);
                }
            }
        }
        occurs[x].clear();
        solved[x] = Some(expr);
        order.push(x);
    }

    let survivors: Vec<usize> = (0..generators).filter(|&g| solved[g].is_none()).collect();
    let mut position = vec![usize::MAX; generators];
    for (p, &g) in survivors.iter().enumerate() {
        position[g] = p;
    }
    let mut expressions: Vec<Sparse> = (0..generators)
        .map(|g| if solved[g].is_none() { vec![(position[g], BigInt::one())] } else { Vec::new() })
        .collect();
    for &x in order.iter().rev() {
        let mut full = Vec::new();
        for (g, c) in solved[x].as_ref().expect("solved") {
            full = add_scaled(&full, &expressions[*g], c);
        }
        expressions[x] = full;
    }

    let mut remaining: Vec<Sparse> = rels
        .into_iter()
        .flatten()
        .map(|rel| {
            let mut v: Sparse = rel.into_iter().map(|(g, c)| (position[g], c)).collect();
            v.sort_by_key(|(p, _)| *p);
            if v[0].1.is_negative() {
                for (_, c) in v.iter_mut() {
                    *c = -std::mem::take(c);
                }
            }
            v
        })
        .collect();
    remaining.sort();
    remaining.dedup();
    let mut relations = IntMatrix::zeros(survivors.len(), remaining.len());
    for (j, rel) in remaining.iter().enumerate() {
        for (p, c) in rel {
            relations[(*p, j)] = c.clone();
        }
    }
    Reduction { survivors, relations, expressions }
}

pub(crate) fn dense(len: usize, v: &Sparse) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::FGAbGroup;

    fn sp(v: &[(usize, i64)]) -> Sparse {
        v.iter().map(|&(i, c)| (i, BigInt::from(c))).collect()
    }

    /// Dense presentation of the same data, for comparison.
    fn dense_group(generators: usize, rels: &[Sparse]) -> FGAbGroup {
        let cols: Vec<Vec<BigInt>> = rels.iter().map(|r| dense(generators, r)).collect();
        FGAbGroup::from_presentation(IntMatrix::from_columns(generators, &cols))
    }

    #[test]
    fn elimination_preserves_the_group() {
        let cases: Vec<(usize, Vec<Sparse>)> = vec![
            (3, vec![sp(&[(0, 2), (1, -1)]), sp(&[(1, 3), (2, -1)]), sp(&[(2, 4)])]),
            (2, vec![sp(&[(0, 2)]), sp(&[(1, 4)])]),
            (4, vec![sp(&[(0, 1), (3, 1)]), sp(&[(3, -1), (1, 2)]), sp(&[(2, 6), (1, 4)])]),
            (2, vec![sp(&[(0, 1), (1, -1)]), sp(&[(0, -1), (1, 1)])]),
        ];
        for (n, rels) in cases {
            let red = reduce(n, rels.clone());
            let reduced = FGAbGroup::from_presentation(red.relations.clone());
            assert_eq!(reduced.canonical_form(), dense_group(n, &rels).canonical_form());
            // Each original relation vanishes after rewriting.
            for rel in &rels {
                let mut image = Vec::new();
                for (g, c) in rel {
                    image = add_scaled(&image, &red.expressions[*g], c);
                }
                assert!(reduced.is_zero_element(&dense(red.survivors.len(), &image)));
            }
        }
    }

    #[test]
    fn add_scaled_merges() {
        let a = sp(&[(0, 1), (2, 3)]);
        let b = sp(&[(1, 1), (2, 1)]);
        assert_eq!(add_scaled(&a, &b, &BigInt::from(-3)), sp(&[(0, 1), (1, -3)]));
    }
}
