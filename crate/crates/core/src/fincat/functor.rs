use super::{Category, FinCategory};
use crate::error::{Error, Result};
use crate::validation::{ValidationReport, Violation};

/// A functor between finite categories, given by its object and morphism
/// tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub source: FinCategory,
    pub target: FinCategory,
    pub on_obj: Vec<usize>,
    pub on_mor: Vec<usize>,
}

impl FinFunctor {
    /// Range-checks the tables; functor laws are checked by [`FinFunctor::validate`].
    pub fn new(source: FinCategory, target: FinCategory, on_obj: Vec<usize>, on_mor: Vec<usize>) -> Result<Self> {
        if on_obj.len() != source.object_count() {
            return Err(Error::input("on_obj", format!("expected {} entries, found {}", source.object_count(), on_obj.len())));
        }
        if on_mor.len() != source.morphism_count() {
            return Err(Error::input("on_mor", format!("expected {} entries, found {}", source.morphism_count(), on_mor.len())));
        }
        if let Some(i) = on_obj.iter().position(|&c| c >= target.object_count()) {
            return Err(Error::input(format!("on_obj[{i}]"), "object index out of range"));
        }
        if let Some(i) = on_mor.iter().position(|&f| f >= target.morphism_count()) {
            return Err(Error::input(format!("on_mor[{i}]"), "morphism index out of range"));
        }
        Ok(FinFunctor { source, target, on_obj, on_mor })
    }

    pub fn identity(cat: &FinCategory) -> Self {
        FinFunctor {
            source: cat.clone(),
            target: cat.clone(),
            on_obj: (0..cat.object_count()).collect(),
            on_mor: (0..cat.morphism_count()).collect(),
        }
    }

    /// The functor `source → target` collapsing everything onto `c`.
    pub fn constant(source: &FinCategory, target: &FinCategory, c: usize) -> Self {
        FinFunctor {
            source: source.clone(),
            target: target.clone(),
            on_obj: vec![c; source.object_count()],
            on_mor: vec![target.identity(c); source.morphism_count()],
        }
    }

    /// Inclusion of the full subcategory on `objects`.
    pub fn full_inclusion(target: &FinCategory, objects: &[usize]) -> Self {
        let (sub, kept) = target.full_subcategory(objects);
        FinFunctor {
            source: sub,
            target: target.clone(),
            on_obj: objects.to_vec(),
            on_mor: kept,
        }
    }

    /// The diagonal `C → C × C`, using the index layout of [`FinCategory::product`].
    pub fn diagonal(cat: &FinCategory) -> Self {
        let k = cat.object_count();
        let m = cat.morphism_count();
        FinFunctor {
            source: cat.clone(),
            target: FinCategory::product(cat, cat),
            on_obj: (0..k).map(|c| c * k + c).collect(),
            on_mor: (0..m).map(|f| f * m + f).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFunctor) -> Result<FinFunctor> {
        if self.target != other.source {
            return Err(Error::input("then", "target of the first functor is not the source of the second"));
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: other.target.clone(),
            on_obj: self.on_obj.iter().map(|&c| other.on_obj[c]).collect(),
            on_mor: self.on_mor.iter().map(|&f| other.on_mor[f]).collect(),
        })
    }

    /// Checks preservation of endpoints, identities and every composite.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let (s, t) = (&self.source, &self.target);
        for f in 0..s.morphism_count() {
            let img = self.on_mor[f];
            if t.dom(img) != self.on_obj[s.dom(f)] || t.cod(img) != self.on_obj[s.cod(f)] {
                report.push(Violation::FunctorEndpoints { morphism: f });
            }
        }
        for c in 0..s.object_count() {
            if self.on_mor[s.identity(c)] != t.identity(self.on_obj[c]) {
                report.push(Violation::FunctorIdentity { object: c });
            }
        }
        for (g, f, gf) in s.composition_triples() {
            if t.compose(self.on_mor[g], self.on_mor[f]) != Some(self.on_mor[gf]) {
                report.push(Violation::FunctorComposite { g, f });
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_functors_are_valid() {
        let chain = FinCategory::chain(3);
        assert!(FinFunctor::identity(&chain).validate().is_valid());
        assert!(FinFunctor::constant(&FinCategory::parallel_pair(), &chain, 1).validate().is_valid());
        assert!(FinFunctor::full_inclusion(&chain, &[2]).validate().is_valid());
        assert!(FinFunctor::diagonal(&FinCategory::span()).validate().is_valid());
    }

    #[test]
    fn swapped_endpoints_are_reported() {
        let chain = FinCategory::chain(2);
        // send 0 ↦ 1, 1 ↦ 0 and keep morphisms: 0≤1 lands on 0≤1 with wrong ends
        let f = FinFunctor::new(chain.clone(), chain.clone(), vec![1, 0], vec![2, 1, 0]).unwrap();
        let report = f.validate();
        assert!(report.violations.contains(&Violation::FunctorEndpoints { morphism: 1 }));
    }
}
