use super::HxCategory;
use crate::fincat::{coequalizing, diagonal_slice_connected, upper_bound, Category, FilterFailure};

/// Filteredness of a truncated `HX`, restricted to instances whose
/// witnesses fit under the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedFilteredReport {
    pub upper_bounds_checked: usize,
    pub parallel_pairs_checked: usize,
    pub failure: Option<FilterFailure>,
    /// Whether the coproduct and quotient constructions produced valid
    /// witnesses wherever the search did.
    pub constructions_agree: bool,
}

impl BoundedFilteredReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none() && self.constructions_agree
    }
}

/// Upper bounds for pairs of total arity at most the cap; coequalizing
/// arrows for parallel pairs between objects of arity at most
/// `pair_arity`.
pub fn bounded_filtered_check(h: &HxCategory, pair_arity: usize) -> BoundedFilteredReport {
    let mut report = BoundedFilteredReport {
        upper_bounds_checked: 0,
        parallel_pairs_checked: 0,
        failure: None,
        constructions_agree: true,
    };
    let k = h.object_count();
    let arity = |c: usize| h.object(c).arity();
    for a in 0..k {
        for b in a..k {
            if arity(a) + arity(b) > h.cap() {
                continue;
            }
            report.upper_bounds_checked += 1;
            if upper_bound(h, a, b).is_none() {
                report.failure = Some(FilterFailure::NoUpperBound { left: a, right: b });
                return report;
            }
            match h.coproduct(a, b) {
                Ok((s, l, r)) => report.constructions_agree &= h.dom(l) == a && h.dom(r) == b && h.cod(l) == s && h.cod(r) == s,
                Err(_) => report.constructions_agree = false,
            }
        }
    }
    for a in (0..k).filter(|&a| arity(a) <= pair_arity) {
        for b in (0..k).filter(|&b| arity(b) <= pair_arity) {
            let hom = h.hom(a, b);
            for (i, &f) in hom.iter().enumerate() {
                for &g in &hom[i + 1..] {
                    report.parallel_pairs_checked += 1;
                    if coequalizing(h, f, g).is_none() {
                        report.failure = Some(FilterFailure::NotCoequalized { f, g });
                        return report;
                    }
                    let built = h.coequalize(f, g).ok();
                    report.constructions_agree &= built.is_some_and(|q| h.compose(q, f) == h.compose(q, g));
                }
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedSiftedReport {
    pub pairs_checked: usize,
    /// Pairs of total arity at most the cap with a disconnected slice.
    pub failing: Vec<(usize, usize)>,
}

impl BoundedSiftedReport {
    pub fn holds(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Connectedness of `(a, b)/Δ` for every pair whose coproduct fits.
pub fn bounded_sifted_check(h: &HxCategory) -> BoundedSiftedReport {
    let k = h.object_count();
    let mut out = vec![Vec::new(); k];
    for s in h.spanning_morphisms() {
        out[h.dom(s)].push(s);
    }
    let mut report = BoundedSiftedReport { pairs_checked: 0, failing: Vec::new() };
    for a in 0..k {
        for b in a..k {
            if h.object(a).arity() + h.object(b).arity() > h.cap() {
                continue;
            }
            report.pairs_checked += 1;
            if !diagonal_slice_connected(h, a, b, &out) {
                report.failing.push((a, b));
            }
        }
    }
    report
}
