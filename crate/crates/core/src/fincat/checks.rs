use std::collections::{HashMap, VecDeque};

use super::{Category, FinCategory, FinFunctor};
use crate::union_find::UnionFind;

/// An alternating chain `c → c₁ ← c₂ → ⋯ ← c'`.
///
/// Each step is a pair `(forward, backward)` with
/// `forward : cᵢ → m` and `backward : cᵢ₊₁ → m`. A zig-zag of length zero
/// witnesses `c = c'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigZag {
    pub start: usize,
    pub end: usize,
    pub steps: Vec<(usize, usize)>,
}

impl ZigZag {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Endpoints and directions line up.
    pub fn is_valid_in<C: Category + ?Sized>(&self, cat: &C) -> bool {
        let mut at = self.start;
        for &(fwd, bwd) in &self.steps {
            if cat.dom(fwd) != at || cat.cod(bwd) != cat.cod(fwd) {
                return false;
            }
            at = cat.dom(bwd);
        }
        at == self.end
    }
}

/// A shortest zig-zag from `a` to `b`, or `None` if they lie in different
/// components.
///
/// Breadth-first search over (object, direction) states; identities serve as
/// degenerate legs, and ties go to the smallest morphism index.
pub fn zigzag<C: Category + ?Sized>(cat: &C, a: usize, b: usize) -> Option<ZigZag> {
    if a == b {
        return Some(ZigZag { start: a, end: b, steps: vec![] });
    }
    let k = cat.object_count();
    // state: (object, 0 = about to go forward, 1 = about to go backward)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; 2 * k];
    let mut seen = vec![false; 2 * k];
    let mut queue = VecDeque::new();
    seen[2 * a] = true;
    queue.push_back(2 * a);
    while let Some(state) = queue.pop_front() {
        let (obj, phase) = (state / 2, state % 2);
        let moves = if phase == 0 { cat.out_morphisms(obj) } else { cat.in_morphisms(obj) };
        for f in moves {
            let next = if phase == 0 { 2 * cat.cod(f) + 1 } else { 2 * cat.dom(f) };
            if !seen[next] {
                seen[next] = true;
                parent[next] = Some((state, f));
                queue.push_back(next);
            }
        }
        if seen[2 * b] {
            break;
        }
    }
    if !seen[2 * b] {
        return None;
    }
    let mut legs = Vec::new();
    let mut state = 2 * b;
    while let Some((prev, f)) = parent[state] {
        legs.push(f);
        state = prev;
    }
    legs.reverse();
    let steps = legs.chunks(2).map(|p| (p[0], p[1])).collect();
    Some(ZigZag { start: a, end: b, steps })
}

/// Connectivity of a category with its component labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedReport {
    pub connected: bool,
    pub component_count: usize,
    /// Component index of every object; components ordered by least object.
    pub component_of: Vec<usize>,
}

/// Connected means non-empty with a single component of the undirected
/// morphism graph. Zig-zags witnessing it come from [`zigzag`] on demand.
pub fn is_connected<C: Category + ?Sized>(cat: &C) -> ConnectedReport {
    let mut uf = UnionFind::new(cat.object_count());
    for f in cat.spanning_morphisms() {
        uf.union(cat.dom(f), cat.cod(f));
    }
    let (component_count, component_of) = uf.classes();
    ConnectedReport {
        connected: component_count == 1,
        component_count,
        component_of,
    }
}

/// Per-object finality report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalReport {
    pub is_final: bool,
    /// Objects `c` of the target whose slice `c / F` is not connected.
    pub failing: Vec<usize>,
}

/// `F` is final when every slice `c / F` is connected.
pub fn is_final(functor: &FinFunctor) -> FinalReport {
    let failing: Vec<usize> = (0..functor.target.object_count())
        .filter(|&c| !slice_connected(c, functor))
        .collect();
    FinalReport { is_final: failing.is_empty(), failing }
}

/// Connectivity of `c / F` without materializing its composition table.
fn slice_connected(c: usize, functor: &FinFunctor) -> bool {
    let (src, tgt) = (&functor.source, &functor.target);
    let mut index = HashMap::new();
    let mut objects = Vec::new();
    for cp in 0..src.object_count() {
        for &f in tgt.hom(c, functor.on_obj[cp]) {
            index.insert((cp, f), objects.len());
            objects.push((cp, f));
        }
    }
    if objects.is_empty() {
        return false;
    }
    let spanning = src.spanning_morphisms();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); src.object_count()];
    for &k in &spanning {
        out[src.dom(k)].push(k);
    }
    let mut uf = UnionFind::new(objects.len());
    for (i, &(cp, f)) in objects.iter().enumerate() {
        for &k in &out[cp] {
            let f2 = tgt.compose(functor.on_mor[k], f).expect("functor preserves endpoints");
            uf.union(i, index[&(src.cod(k), f2)]);
        }
    }
    uf.classes().0 == 1
}

/// Upper bound `left → vertex ← right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UpperBound {
    pub left: usize,
    pub right: usize,
    pub vertex: usize,
    pub left_leg: usize,
    pub right_leg: usize,
}

/// `h` with `h ∘ f = h ∘ g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coequalizing {
    pub f: usize,
    pub g: usize,
    pub h: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterFailure {
    Empty,
    NoUpperBound { left: usize, right: usize },
    NotCoequalized { f: usize, g: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredReport {
    pub filtered: bool,
    pub failure: Option<FilterFailure>,
    pub upper_bounds: Vec<UpperBound>,
    pub coequalizers: Vec<Coequalizing>,
}

/// Least upper bound candidate: the smallest vertex with legs from both
/// objects, with the smallest legs.
pub fn upper_bound<C: Category + ?Sized>(cat: &C, left: usize, right: usize) -> Option<UpperBound> {
    (0..cat.object_count()).find_map(|w| {
        let l = cat.hom(left, w).first()?;
        let r = cat.hom(right, w).first()?;
        Some(UpperBound { left, right, vertex: w, left_leg: *l, right_leg: *r })
    })
}

/// Smallest `h` out of `cod(f)` with `h ∘ f = h ∘ g`.
pub fn coequalizing<C: Category + ?Sized>(cat: &C, f: usize, g: usize) -> Option<Coequalizing> {
    cat.out_morphisms(cat.cod(f))
        .into_iter()
        .find(|&h| cat.compose(h, f) == cat.compose(h, g))
        .map(|h| Coequalizing { f, g, h })
}

/// Checks the three filteredness conditions, collecting witnesses and
/// stopping at the first failure.
pub fn is_filtered<C: Category + ?Sized>(cat: &C) -> FilteredReport {
    let mut report = FilteredReport {
        filtered: false,
        failure: None,
        upper_bounds: Vec::new(),
        coequalizers: Vec::new(),
    };
    let k = cat.object_count();
    if k == 0 {
        report.failure = Some(FilterFailure::Empty);
        return report;
    }
    for a in 0..k {
        for b in a..k {
            match upper_bound(cat, a, b) {
                Some(ub) => report.upper_bounds.push(ub),
                None => {
                    report.failure = Some(FilterFailure::NoUpperBound { left: a, right: b });
                    return report;
                }
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            let hom = cat.hom(a, b);
            for (i, &f) in hom.iter().enumerate() {
                for &g in &hom[i + 1..] {
                    match coequalizing(cat, f, g) {
                        Some(c) => report.coequalizers.push(c),
                        None => {
                            report.failure = Some(FilterFailure::NotCoequalized { f, g });
                            return report;
                        }
                    }
                }
            }
        }
    }
    report.filtered = true;
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiftedReport {
    pub sifted: bool,
    pub empty: bool,
    /// Pairs `(a, b)`, `a ≤ b`, whose slice `(a, b) / Δ` is disconnected.
    pub failing: Vec<(usize, usize)>,
}

/// Whether the slice `(a, b) / Δ` is connected.
///
/// Objects are triples `(w, f : a → w, g : b → w)`; they are joined along
/// spanning morphisms `k : w → w'` sending the triple to `(w', k∘f, k∘g)`.
pub fn diagonal_slice_connected<C: Category + ?Sized>(cat: &C, a: usize, b: usize, spanning_out: &[Vec<usize>]) -> bool {
    let mut index = HashMap::new();
    let mut objects = Vec::new();
    for w in 0..cat.object_count() {
        for &f in cat.hom(a, w) {
            for &g in cat.hom(b, w) {
                index.insert((f, g), objects.len());
                objects.push((w, f, g));
            }
        }
    }
    if objects.is_empty() {
        return false;
    }
    let mut uf = UnionFind::new(objects.len());
    for (i, &(w, f, g)) in objects.iter().enumerate() {
        for &k in &spanning_out[w] {
            let kf = cat.compose(k, f).expect("composable");
            let kg = cat.compose(k, g).expect("composable");
            uf.union(i, index[&(kf, kg)]);
        }
    }
    uf.classes().0 == 1
}

/// Spanning morphisms bucketed by domain.
pub(crate) fn spanning_out<C: Category + ?Sized>(cat: &C) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); cat.object_count()];
    for k in cat.spanning_morphisms() {
        out[cat.dom(k)].push(k);
    }
    out
}

/// Sifted: non-empty and the diagonal `C → C × C` is final, decided slice by
/// slice without building `C × C`.
pub fn is_sifted<C: Category + ?Sized>(cat: &C) -> SiftedReport {
    let k = cat.object_count();
    if k == 0 {
        return SiftedReport { sifted: false, empty: true, failing: vec![] };
    }
    let out = spanning_out(cat);
    let mut failing = Vec::new();
    for a in 0..k {
        for b in a..k {
            if !diagonal_slice_connected(cat, a, b, &out) {
                failing.push((a, b));
            }
        }
    }
    SiftedReport { sifted: failing.is_empty(), empty: false, failing }
}

/// Objects `t` such that every object has exactly one morphism into `t`.
pub fn terminal_objects(cat: &FinCategory) -> Vec<usize> {
    (0..cat.object_count())
        .filter(|&t| (0..cat.object_count()).all(|c| cat.hom(c, t).len() == 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{group_as_category, FinGroup};

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&FinCategory::chain(3)).connected);
        assert!(!is_connected(&FinCategory::discrete(2)).connected);
        assert!(!is_connected(&FinCategory::empty()).connected);
        let cospan = FinCategory::cospan();
        assert!(is_connected(&cospan).connected);
        let z = zigzag(&cospan, 0, 1).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.steps, vec![(3, 4)]);
        assert!(z.is_valid_in(&cospan));
    }

    #[test]
    fn zigzag_of_length_zero_and_none() {
        let d = FinCategory::discrete(2);
        assert_eq!(zigzag(&d, 1, 1).unwrap().len(), 0);
        assert!(zigzag(&d, 0, 1).is_none());
    }

    #[test]
    fn zigzag_through_span_goes_backward_first() {
        // l ← c → r: from l we must first go forward along an identity
        let span = FinCategory::span();
        let z = zigzag(&span, 1, 2).unwrap();
        assert!(z.is_valid_in(&span));
        assert_eq!(z.len(), 2);
    }

    #[test]
    fn finality_of_chain_inclusions() {
        let chain = FinCategory::chain(3);
        assert!(is_final(&FinFunctor::identity(&chain)).is_final);
        assert!(is_final(&FinFunctor::full_inclusion(&chain, &[2])).is_final);
        let bottom = is_final(&FinFunctor::full_inclusion(&chain, &[0]));
        assert!(!bottom.is_final);
        assert_eq!(bottom.failing, vec![1, 2]);
    }

    #[test]
    fn filteredness_examples() {
        assert!(is_filtered(&FinCategory::chain(4)).filtered);
        assert_eq!(
            is_filtered(&FinCategory::discrete(2)).failure,
            Some(FilterFailure::NoUpperBound { left: 0, right: 1 })
        );
        let bz2 = group_as_category(&FinGroup::cyclic(2));
        assert_eq!(is_filtered(&bz2).failure, Some(FilterFailure::NotCoequalized { f: 0, g: 1 }));
        assert_eq!(is_filtered(&FinCategory::empty()).failure, Some(FilterFailure::Empty));
    }

    #[test]
    fn siftedness_examples() {
        assert!(is_sifted(&FinCategory::terminal()).sifted);
        let d2 = is_sifted(&FinCategory::discrete(2));
        assert!(!d2.sifted);
        assert_eq!(d2.failing, vec![(0, 1)]);
        // the four-element Boolean lattice has joins
        let square = FinCategory::poset((0..4).map(|i| i.to_string()).collect(), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_sifted(&square).sifted);
        // (*,*)/Δ over B'(ℤ/2) splits into the two diagonal orbits on G×G
        assert!(!is_sifted(&group_as_category(&FinGroup::cyclic(2))).sifted);
    }
}
