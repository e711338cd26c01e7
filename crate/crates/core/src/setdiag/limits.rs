use std::collections::HashMap;

use super::{Cocone, Cone, FinSet, SetFunctor};
use crate::fincat::Category;
use crate::union_find::UnionFind;

/// The limit of a set diagram with its universal cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetLimit {
    pub cone: Cone,
    /// Limit elements as compatible tuples, in lexicographic order.
    pub tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl SetLimit {
    pub fn carrier(&self) -> &FinSet {
        &self.cone.vertex
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// The unique map from the vertex of `legs` into the limit, or `None`
    /// if `legs` is not a cone.
    pub fn factor(&self, vertex_size: usize, legs: &[Vec<usize>]) -> Option<Vec<usize>> {
        (0..vertex_size)
            .map(|v| {
                let tuple: Vec<usize> = legs.iter().map(|leg| leg[v]).collect();
                self.index_of(&tuple)
            })
            .collect()
    }
}

/// The limit of `D`: all tuples `(x_d)` with `D_δ(x_d) = x_{d'}` for every
/// `δ : d → d'`, enumerated lexicographically (object index, then element
/// index). The cone legs are the coordinate projections.
pub fn set_limit(diagram: &SetFunctor) -> SetLimit {
    let base = &diagram.base;
    let n = base.object_count();
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for f in base.spanning_morphisms() {
        checks[base.dom(f).max(base.cod(f))].push(f);
    }
    let mut tuples = Vec::new();
    let mut current = Vec::with_capacity(n);
    extend_tuples(diagram, &checks, &mut current, &mut tuples);
    let legs = (0..n).map(|c| tuples.iter().map(|t| t[c]).collect()).collect();
    let index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    SetLimit {
        cone: Cone { vertex: FinSet::new(tuples.len()), legs },
        tuples,
        index,
    }
}

fn extend_tuples(diagram: &SetFunctor, checks: &[Vec<usize>], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let base = &diagram.base;
    let j = current.len();
    if j == base.object_count() {
        out.push(current.clone());
        return;
    }
    for x in 0..diagram.size(j) {
        current.push(x);
        let ok = checks[j]
            .iter()
            .all(|&f| diagram.maps[f][current[base.dom(f)]] == current[base.cod(f)]);
        if ok {
            extend_tuples(diagram, checks, current, out);
        }
        current.pop();
    }
}

/// The colimit of a set diagram with its universal cocone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetColimit {
    pub cocone: Cocone,
    /// Least `(object, element)` of each class, in increasing order.
    pub representatives: Vec<(usize, usize)>,
}

impl SetColimit {
    pub fn carrier(&self) -> &FinSet {
        &self.cocone.vertex
    }

    pub fn class_of(&self, object: usize, element: usize) -> usize {
        self.cocone.legs[object][element]
    }

    /// The unique map out of the colimit induced by `legs`, or `None` if
    /// `legs` is not a cocone.
    pub fn factor(&self, legs: &[Vec<usize>]) -> Option<Vec<usize>> {
        let mut out: Vec<Option<usize>> = vec![None; self.representatives.len()];
        for (c, leg) in legs.iter().enumerate() {
            for (x, &y) in leg.iter().enumerate() {
                let k = self.cocone.legs[c][x];
                match out[k] {
                    None => out[k] = Some(y),
                    Some(prev) if prev != y => return None,
                    _ => {}
                }
            }
        }
        out.into_iter().collect()
    }
}

/// The colimit of `D`: the tagged disjoint union modulo the equivalence
/// generated by `(d, x) ~ (d', D_δ(x))`, computed by union-find. Classes are
/// numbered by their least `(object, element)` pair.
pub fn set_colimit(diagram: &SetFunctor) -> SetColimit {
    let base = &diagram.base;
    let n = base.object_count();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for c in 0..n {
        offsets.push(offsets[c] + diagram.size(c));
    }
    let mut uf = UnionFind::new(offsets[n]);
    for f in base.spanning_morphisms() {
        let (d, c) = (base.dom(f), base.cod(f));
        for (x, &y) in diagram.maps[f].iter().enumerate() {
            uf.union(offsets[d] + x, offsets[c] + y);
        }
    }
    let (count, labels) = uf.classes();
    let mut representatives = vec![(usize::MAX, usize::MAX); count];
    let mut legs = Vec::with_capacity(n);
    for c in 0..n {
        let leg: Vec<usize> = (0..diagram.size(c)).map(|x| labels[offsets[c] + x]).collect();
        for (x, &k) in leg.iter().enumerate() {
            if representatives[k].0 == usize::MAX {
                representatives[k] = (c, x);
            }
        }
        legs.push(leg);
    }
    SetColimit {
        cocone: Cocone { vertex: FinSet::new(count), legs },
        representatives,
    }
}
