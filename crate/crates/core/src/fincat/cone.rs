use super::checks::is_filtered;
use super::{Category, FinFunctor};
use crate::error::{Error, Result};

/// A cocone over a diagram in a category: a vertex and one leg per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeWitness {
    pub vertex: usize,
    /// `legs[j] : D(j) → vertex`.
    pub legs: Vec<usize>,
}

/// Exhaustive search for a cocone over `diagram : J → F` inside `F`.
///
/// Vertices are tried in index order and legs are assigned object by
/// object with backtracking, so the first cocone in lexicographic order is
/// returned. With `require_filtered`, `F` must pass [`is_filtered`].
pub fn cone_search(diagram: &FinFunctor, require_filtered: bool) -> Result<Option<ConeWitness>> {
    let (src, tgt) = (&diagram.source, &diagram.target);
    if require_filtered && !is_filtered(tgt).filtered {
        return Err(Error::Precondition("cone_search: target category is not filtered".into()));
    }
    let n = src.object_count();
    // constraints checked once both endpoints have legs
    let mut constraints: Vec<Vec<usize>> = vec![Vec::new(); n];
    for phi in src.spanning_morphisms() {
        let last = src.dom(phi).max(src.cod(phi));
        constraints[last].push(phi);
    }
    for vertex in 0..tgt.object_count() {
        let mut legs = Vec::with_capacity(n);
        if assign(diagram, vertex, &constraints, &mut legs) {
            return Ok(Some(ConeWitness { vertex, legs }));
        }
    }
    Ok(None)
}

fn assign(diagram: &FinFunctor, vertex: usize, constraints: &[Vec<usize>], legs: &mut Vec<usize>) -> bool {
    let (src, tgt) = (&diagram.source, &diagram.target);
    let j = legs.len();
    if j == src.object_count() {
        return true;
    }
    for &leg in tgt.hom(diagram.on_obj[j], vertex) {
        legs.push(leg);
        let ok = constraints[j].iter().all(|&phi| {
            let via = tgt.compose(legs[src.cod(phi)], diagram.on_mor[phi]);
            via == Some(legs[src.dom(phi)])
        });
        if ok && assign(diagram, vertex, constraints, legs) {
            return true;
        }
        legs.pop();
    }
    false
}
