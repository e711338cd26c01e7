use super::colimit::{ab_colimit, check_natural, map_between};
use super::{AbDiagram, Family};
use crate::abgrp::{AbHom, FGAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::fincat::{is_filtered, Category};

#[derive(Clone, Debug)]
pub struct Ab4Report {
    pub holds: bool,
    pub induced: AbHom,
    /// Kernel of the induced map; trivial iff `holds`.
    pub kernel: FGAbGroup,
}

/// Whether `⊕η : ⊕A → ⊕B` is mono for a family of monos `η_x : A_x → B_x`.
pub fn ab4_check(source: &Family, target: &Family, eta: &[AbHom]) -> Result<Ab4Report> {
    if source.len() != target.len() || eta.len() != source.len() {
        return Err(Error::input("eta", "families and components must have the same length"));
    }
    for (x, h) in eta.iter().enumerate() {
        if h.source() != &source.groups[x] || h.target() != &target.groups[x] {
            return Err(Error::input(format!("eta[{x}]"), "endpoint mismatch"));
        }
        if !h.is_mono() {
            return Err(Error::Precondition(format!("component {x} is not a monomorphism")));
        }
    }
    let a = source.direct_sum();
    let b = target.direct_sum();
    let blocks: Vec<IntMatrix> = eta.iter().map(|h| h.matrix().clone()).collect();
    let induced = AbHom::new(a.group, b.group, IntMatrix::block_diagonal(&blocks))?;
    let kernel = induced.kernel().group;
    Ok(Ab4Report { holds: kernel.is_trivial(), induced, kernel })
}

#[derive(Clone, Debug)]
pub struct Ab5Report {
    pub colimit_of_kernels: FGAbGroup,
    pub kernel_of_colimit: FGAbGroup,
    /// Canonical comparison `colim ker η → ker colim η`.
    pub comparison: AbHom,
    pub holds: bool,
}

/// Exactness of a filtered colimit on one kernel: compares `colim(ker η)`
/// with `ker(colim η)` for a natural `η : D ⇒ E`.
pub fn ab5_check(d: &AbDiagram, e: &AbDiagram, eta: &[AbHom]) -> Result<Ab5Report> {
    if !is_filtered(&d.base).filtered {
        return Err(Error::Precondition("base category is not filtered".into()));
    }
    check_natural(d, e, eta)?;
    let base = &d.base;
    let kernels: Vec<_> = eta.iter().map(AbHom::kernel).collect();
    let mut maps = Vec::with_capacity(base.morphism_count());
    for f in 0..base.morphism_count() {
        let (a, b) = (base.dom(f), base.cod(f));
        let pushed = d.maps[f].compose(&kernels[a].inclusion)?;
        maps.push(kernels[b].lift(&pushed)?);
    }
    let k = AbDiagram::new(base.clone(), kernels.iter().map(|k| k.group.clone()).collect(), maps)?;
    let inclusions: Vec<AbHom> = kernels.iter().map(|k| k.inclusion.clone()).collect();
    let col_k = ab_colimit(&k);
    let col_d = ab_colimit(d);
    let col_e = ab_colimit(e);
    let incl = map_between(&col_k, &col_d, &inclusions)?;
    let induced = map_between(&col_d, &col_e, eta)?;
    let ker = induced.kernel();
    let comparison = ker.lift(&incl)?;
    let holds = comparison.is_iso();
    Ok(Ab5Report { colimit_of_kernels: col_k.group, kernel_of_colimit: ker.group, comparison, holds })
}

#[derive(Clone, Debug)]
pub struct GeneratorReport {
    pub equal: bool,
    /// `g : ℤ → A` with `f∘g ≠ f′∘g`, present iff the maps differ.
    pub witness: Option<AbHom>,
}

/// Separates two parallel maps by an element, i.e. a map out of `ℤ`.
pub fn generator_check(f: &AbHom, f_prime: &AbHom) -> Result<GeneratorReport> {
    let Some(j) = f.first_difference(f_prime)? else {
        return Ok(GeneratorReport { equal: true, witness: None });
    };
    let a = f.source();
    let mut col = IntMatrix::zeros(a.generators(), 1);
    col[(j, 0)] = 1.into();
    let g = AbHom::new(FGAbGroup::free(1), a.clone(), col)?;
    debug_assert!(!f.compose(&g)?.equals(&f_prime.compose(&g)?)?);
    Ok(GeneratorReport { equal: false, witness: Some(g) })
}
