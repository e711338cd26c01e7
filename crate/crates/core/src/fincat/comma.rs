use std::collections::HashMap;

use super::{Category, FinCategory, FinFunctor};

/// The comma category `c / F` together with where its data came from.
#[derive(Debug, Clone)]
pub struct CommaCategory {
    pub category: FinCategory,
    /// Object `i` is the pair `(c', f : c → F(c'))`.
    pub objects: Vec<(usize, usize)>,
    /// Morphism `i` is the underlying morphism `k` of the source of `F`.
    pub morphisms: Vec<usize>,
}

/// Builds `c / F` for `F : C' → C`.
///
/// Objects are pairs `(c', f : c → F(c'))` ordered by `c'` then `f`; a
/// morphism `(c'₁, f₁) → (c'₂, f₂)` is a `k : c'₁ → c'₂` with
/// `F(k) ∘ f₁ = f₂`. Composition is inherited from `C'`.
pub fn comma_category(c: usize, functor: &FinFunctor) -> CommaCategory {
    let (src, tgt) = (&functor.source, &functor.target);
    let mut objects = Vec::new();
    let mut index = HashMap::new();
    for cp in 0..src.object_count() {
        for &f in tgt.hom(c, functor.on_obj[cp]) {
            index.insert((cp, f), objects.len());
            objects.push((cp, f));
        }
    }
    let mut morphisms = Vec::new();
    let mut mor_data = Vec::new();
    let mut mor_index = HashMap::new();
    for (i, &(cp, f)) in objects.iter().enumerate() {
        for k in src.out_morphisms(cp) {
            let f2 = tgt
                .compose(functor.on_mor[k], f)
                .expect("functor preserves endpoints");
            let j = index[&(src.cod(k), f2)];
            mor_index.insert((i, k), morphisms.len());
            morphisms.push(k);
            mor_data.push((format!("{}:{}", src.morphism_label(k), i), i, j));
        }
    }
    let labels = objects
        .iter()
        .map(|&(cp, f)| format!("({},{})", src.object_label(cp), tgt.morphism_label(f)))
        .collect();
    let identities = objects
        .iter()
        .enumerate()
        .map(|(i, &(cp, _))| mor_index[&(i, src.identity(cp))])
        .collect();
    let generators = src.generators().map(|gens| {
        let gens: std::collections::HashSet<usize> = gens.iter().copied().collect();
        (0..morphisms.len()).filter(|&i| gens.contains(&morphisms[i])).collect()
    });
    let doms: Vec<usize> = mor_data.iter().map(|m| m.1).collect();
    let category = FinCategory::from_fn(labels, mor_data, identities, generators, |g, f| {
        let k = src.compose(morphisms[g], morphisms[f]).expect("composable in source");
        mor_index[&(doms[f], k)]
    });
    CommaCategory { category, objects, morphisms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;

    #[test]
    fn slice_of_identity_on_poset_is_up_set() {
        let poset = FinCategory::poset(
            (0..4).map(|i| i.to_string()).collect(),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let id = FinFunctor::identity(&poset);
        for c in 0..4 {
            let comma = comma_category(c, &id);
            // brute-force up-set of c
            let up = (0..4).filter(|&d| !poset.hom(c, d).is_empty()).count();
            assert_eq!(comma.category.object_count(), up);
            assert!(validate_category(&comma.category).is_valid());
        }
    }

    #[test]
    fn slice_of_one_object_group_has_group_many_objects() {
        let bg = crate::fincat::group_as_category(&crate::fincat::FinGroup::cyclic(3));
        let comma = comma_category(0, &FinFunctor::identity(&bg));
        assert_eq!(comma.category.object_count(), 3);
        assert!(validate_category(&comma.category).is_valid());
    }

    #[test]
    fn functor_from_empty_category_gives_empty_slice() {
        let f = FinFunctor::new(FinCategory::empty(), FinCategory::chain(2), vec![], vec![]).unwrap();
        assert_eq!(comma_category(0, &f).category.object_count(), 0);
    }
}
