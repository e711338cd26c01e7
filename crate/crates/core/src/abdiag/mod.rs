//! Diagrams of finitely generated abelian groups over finite categories.
//!
//! Colimits are presented as the direct sum of all vertex groups modulo the
//! vertex relations and the identifications `ι_{c'}(D_δ e) = ι_c(e)`; limits
//! as the kernel of the difference map into a product. Only the spanning
//! morphisms of the base contribute relations.

mod axioms;
mod colimit;
mod gmodule;
mod presentation;

pub use axioms::{ab4_check, ab5_check, generator_check, Ab4Report, Ab5Report, GeneratorReport};
pub use colimit::{ab_colimit, ab_limit, induced_map_on_colimits, AbColimit, AbLimit, InducedMap};
pub use gmodule::{coinvariants, invariants, GModule};

use crate::abgrp::{biproduct, AbHom, Biproduct, FGAbGroup};
use crate::error::{Error, Result};
use crate::fincat::{Category, FinCategory, FinFunctor};
use crate::setdiag::FinSet;
use crate::validation::{ValidationReport, Violation};

/// A functor from a finite category into finitely generated abelian groups.
#[derive(Clone, Debug)]
pub struct AbDiagram {
    pub base: FinCategory,
    pub groups: Vec<FGAbGroup>,
    /// `maps[δ] : groups[dom δ] → groups[cod δ]`.
    pub maps: Vec<AbHom>,
}

impl AbDiagram {
    /// Checks arities and endpoints; functor laws are left to
    /// [`validate`](Self::validate).
    pub fn new(base: FinCategory, groups: Vec<FGAbGroup>, maps: Vec<AbHom>) -> Result<Self> {
        if groups.len() != base.object_count() {
            return Err(Error::input(
                "groups",
                format!("expected {} groups, found {}", base.object_count(), groups.len()),
            ));
        }
        if maps.len() != base.morphism_count() {
            return Err(Error::input(
                "maps",
                format!("expected {} maps, found {}", base.morphism_count(), maps.len()),
            ));
        }
        for (f, h) in maps.iter().enumerate() {
            if h.source() != &groups[base.dom(f)] || h.target() != &groups[base.cod(f)] {
                return Err(Error::input(format!("maps[{f}]"), "endpoints do not match the groups of the base morphism"));
            }
        }
        Ok(AbDiagram { base, groups, maps })
    }

    pub fn constant(base: &FinCategory, group: &FGAbGroup) -> Self {
        let maps = (0..base.morphism_count()).map(|_| AbHom::identity(group)).collect();
        AbDiagram { base: base.clone(), groups: vec![group.clone(); base.object_count()], maps }
    }

    /// Well-definedness of every map, identities, and all composites, each
    /// up to equality of homomorphisms.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (f, h) in self.maps.iter().enumerate() {
            for v in h.validate().violations {
                if let Violation::IllDefinedHom { relation } = v {
                    report.push(Violation::IllDefinedMap { morphism: f, relation });
                }
            }
        }
        for c in 0..self.base.object_count() {
            let id = &self.maps[self.base.identity(c)];
            if !id.equals(&AbHom::identity(&self.groups[c])).unwrap_or(false) {
                report.push(Violation::FunctorIdentity { object: c });
            }
        }
        for (g, f, gf) in self.base.composition_triples() {
            let ok = self.maps[g]
                .compose(&self.maps[f])
                .and_then(|h| h.equals(&self.maps[gf]))
                .unwrap_or(false);
            if !ok {
                report.push(Violation::FunctorComposite { g, f });
            }
        }
        report
    }

    /// Precomposition with `F : C' → C`.
    pub fn restrict_along(&self, functor: &FinFunctor) -> Result<AbDiagram> {
        if functor.target != self.base {
            return Err(Error::input("restrict_along", "functor target is not the base of the diagram"));
        }
        Ok(AbDiagram {
            base: functor.source.clone(),
            groups: functor.on_obj.iter().map(|&c| self.groups[c].clone()).collect(),
            maps: functor.on_mor.iter().map(|&f| self.maps[f].clone()).collect(),
        })
    }

    /// Objectwise biproduct `D ⊕ E` over a shared base, with the summand
    /// biproducts used at each object.
    pub fn pointwise_biproduct(&self, other: &AbDiagram) -> Result<(AbDiagram, Vec<Biproduct>)> {
        if self.base != other.base {
            return Err(Error::input("pointwise_biproduct", "diagrams have different bases"));
        }
        let sums: Vec<Biproduct> = (0..self.base.object_count())
            .map(|c| biproduct(&[self.groups[c].clone(), other.groups[c].clone()]))
            .collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for f in 0..self.maps.len() {
            let (a, b) = (&sums[self.base.dom(f)], &sums[self.base.cod(f)]);
            let block = crate::abgrp::IntMatrix::block_diagonal(&[self.maps[f].matrix().clone(), other.maps[f].matrix().clone()]);
            maps.push(AbHom::new(a.group.clone(), b.group.clone(), block)?);
        }
        let groups = sums.iter().map(|s| s.group.clone()).collect();
        Ok((AbDiagram { base: self.base.clone(), groups, maps }, sums))
    }
}

/// `components[c] : D(c) → vertex`.
#[derive(Clone, Debug)]
pub struct AbCocone {
    pub vertex: FGAbGroup,
    pub components: Vec<AbHom>,
}

/// `components[c] : vertex → D(c)`.
#[derive(Clone, Debug)]
pub struct AbCone {
    pub vertex: FGAbGroup,
    pub components: Vec<AbHom>,
}

impl AbCocone {
    /// First base morphism whose triangle fails to commute, if any.
    pub fn failing_morphism(&self, diagram: &AbDiagram) -> Result<Option<usize>> {
        check_legs(diagram, &self.vertex, &self.components, true)
    }
}

impl AbCone {
    pub fn failing_morphism(&self, diagram: &AbDiagram) -> Result<Option<usize>> {
        check_legs(diagram, &self.vertex, &self.components, false)
    }
}

fn check_legs(diagram: &AbDiagram, vertex: &FGAbGroup, legs: &[AbHom], co: bool) -> Result<Option<usize>> {
    if legs.len() != diagram.groups.len() {
        return Err(Error::input("components", "one component per object is required"));
    }
    for (c, leg) in legs.iter().enumerate() {
        let (s, t) = if co { (&diagram.groups[c], vertex) } else { (vertex, &diagram.groups[c]) };
        if leg.source() != s || leg.target() != t {
            return Err(Error::input(format!("components[{c}]"), "endpoint mismatch"));
        }
    }
    for f in 0..diagram.maps.len() {
        let (a, b) = (diagram.base.dom(f), diagram.base.cod(f));
        let ok = if co {
            legs[b].compose(&diagram.maps[f])?.equals(&legs[a])?
        } else {
            diagram.maps[f].compose(&legs[a])?.equals(&legs[b])?
        };
        if !ok {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// A family of groups indexed by a finite set.
#[derive(Clone, Debug)]
pub struct Family {
    pub index: FinSet,
    pub groups: Vec<FGAbGroup>,
}

impl Family {
    pub fn new(index: FinSet, groups: Vec<FGAbGroup>) -> Result<Self> {
        if groups.len() != index.size() {
            return Err(Error::input("groups", format!("expected {} groups, found {}", index.size(), groups.len())));
        }
        Ok(Family { index, groups })
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn direct_sum(&self) -> Biproduct {
        biproduct(&self.groups)
    }

    /// The family as a diagram on the discrete category.
    pub fn to_diagram(&self) -> AbDiagram {
        let base = FinCategory::discrete(self.len());
        let maps = self.groups.iter().map(AbHom::identity).collect();
        AbDiagram { base, groups: self.groups.clone(), maps }
    }
}

pub fn direct_sum_family(family: &Family) -> Biproduct {
    family.direct_sum()
}
