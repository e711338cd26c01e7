//! Finite categories as explicit data, with decidable structural checks.
//!
//! Objects and morphisms are canonical indices `0..k` and `0..m`. Every
//! check returns its witnesses (zig-zags, upper bounds, coequalizing
//! arrows, cocones) so callers never have to trust a bare boolean.

mod category;
mod checks;
mod comma;
mod cone;
mod functor;
mod group;

pub use category::{validate_category, FinCategory};
pub use checks::{
    coequalizing, diagonal_slice_connected, is_connected, is_filtered, is_final, is_sifted, terminal_objects, upper_bound,
    zigzag, Coequalizing, ConnectedReport, FilterFailure, FilteredReport, FinalReport,
    SiftedReport, UpperBound, ZigZag,
};
pub use comma::{comma_category, CommaCategory};
pub use cone::{cone_search, ConeWitness};
pub use functor::FinFunctor;
pub use group::{group_as_category, FinGroup};

use std::collections::HashSet;

/// Read access to a finite category.
///
/// Implemented by the table-backed [`FinCategory`] and by categories whose
/// composition is computed rather than stored, such as
/// [`HxCategory`](crate::HxCategory).
pub trait Category {
    fn object_count(&self) -> usize;
    fn morphism_count(&self) -> usize;
    fn dom(&self, f: usize) -> usize;
    fn cod(&self, f: usize) -> usize;
    fn identity(&self, c: usize) -> usize;
    /// `g ∘ f`, defined only when `cod(f) = dom(g)`.
    fn compose(&self, g: usize, f: usize) -> Option<usize>;
    /// Morphisms `a → b`, in increasing index order.
    fn hom(&self, a: usize, b: usize) -> &[usize];

    /// A declared generating family, if any.
    fn generators(&self) -> Option<&[usize]> {
        None
    }

    fn is_identity(&self, f: usize) -> bool {
        self.identity(self.dom(f)) == f
    }

    /// Morphisms out of `c`, sorted by index.
    fn out_morphisms(&self, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.object_count())
            .flat_map(|b| self.hom(c, b).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Morphisms into `c`, sorted by index.
    fn in_morphisms(&self, c: usize) -> Vec<usize> {
        let mut inc: Vec<usize> = (0..self.object_count())
            .flat_map(|a| self.hom(a, c).iter().copied())
            .collect();
        inc.sort_unstable();
        inc
    }

    /// Non-identity morphisms that generate every morphism under composition:
    /// the declared generators when present, otherwise all non-identities.
    ///
    /// Naturality, cocone and colimit relations only need checking on this
    /// family.
    fn spanning_morphisms(&self) -> Vec<usize> {
        match self.generators() {
            Some(g) => {
                let mut g: Vec<usize> = g.iter().copied().filter(|&f| !self.is_identity(f)).collect();
                g.sort_unstable();
                g.dedup();
                g
            }
            None => (0..self.morphism_count())
                .filter(|&f| !self.is_identity(f))
                .collect(),
        }
    }
}

/// Marks every morphism that is a composite of `gens` and identities.
pub fn generated_closure<C: Category + ?Sized>(cat: &C, gens: &[usize]) -> Vec<bool> {
    let mut reached = vec![false; cat.morphism_count()];
    let mut queue = Vec::new();
    for c in 0..cat.object_count() {
        let id = cat.identity(c);
        if !reached[id] {
            reached[id] = true;
        }
    }
    let gens: Vec<usize> = gens
        .iter()
        .copied()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    for &g in &gens {
        if !reached[g] {
            reached[g] = true;
            queue.push(g);
        }
    }
    // every new word is reached by extending a shorter one by a single letter
    while let Some(w) = queue.pop() {
        for &s in &gens {
            for candidate in [cat.compose(s, w), cat.compose(w, s)].into_iter().flatten() {
                if !reached[candidate] {
                    reached[candidate] = true;
                    queue.push(candidate);
                }
            }
        }
    }
    reached
}
