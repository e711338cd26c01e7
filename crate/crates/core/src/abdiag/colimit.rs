use num_bigint::BigInt;

use super::presentation::{dense, reduce, sparse_from_dense, Sparse};
use super::{AbCocone, AbCone, AbDiagram};
use crate::abgrp::{biproduct, AbHom, Biproduct, FGAbGroup, IntMatrix, Kernel};
use crate::error::{Error, Result};
use crate::fincat::Category;

/// Colimit of an [`AbDiagram`]: group, universal cocone, and the data needed
/// to factor other cocones through it.
#[derive(Clone, Debug)]
pub struct AbColimit {
    pub group: FGAbGroup,
    pub cocone: AbCocone,
    diagram: AbDiagram,
    /// `(object, generator)` for each surviving presentation generator.
    survivors: Vec<(usize, usize)>,
    from_canonical: IntMatrix,
}

impl AbColimit {
    pub fn diagram(&self) -> &AbDiagram {
        &self.diagram
    }

    /// The unique map to `cocone.vertex` commuting with both cocones.
    pub fn factor(&self, cocone: &AbCocone) -> Result<AbHom> {
        if let Some(f) = cocone.failing_morphism(&self.diagram)? {
            return Err(Error::Precondition(format!("not a cocone: triangle at morphism {f} fails")));
        }
        Ok(self.factor_unchecked(&cocone.vertex, &cocone.components))
    }

    fn factor_unchecked(&self, vertex: &FGAbGroup, legs: &[AbHom]) -> AbHom {
        let cols: Vec<Vec<BigInt>> = self.survivors.iter().map(|&(c, k)| legs[c].matrix().column(k)).collect();
        let on_survivors = IntMatrix::from_columns(vertex.generators(), &cols);
        AbHom::new(self.group.clone(), vertex.clone(), on_survivors.mul(&self.from_canonical))
            .expect("dimensions follow the presentation")
    }
}

pub fn ab_colimit(diagram: &AbDiagram) -> AbColimit {
    let base = &diagram.base;
    let mut offsets = Vec::with_capacity(diagram.groups.len());
    let mut total = 0;
    for g in &diagram.groups {
        offsets.push(total);
        total += g.generators();
    }
    let mut relations: Vec<Sparse> = Vec::new();
    for (c, g) in diagram.groups.iter().enumerate() {
        for col in g.relations().columns() {
            relations.push(sparse_from_dense(offsets[c], &col));
        }
    }
    for f in base.spanning_morphisms() {
        let (a, b) = (base.dom(f), base.cod(f));
        let m = diagram.maps[f].matrix();
        for k in 0..diagram.groups[a].generators() {
            let image = sparse_from_dense(offsets[b], &m.column(k));
            let e = vec![(offsets[a] + k, BigInt::from(-1))];
            relations.push(super::presentation::add_scaled(&image, &e, &BigInt::from(1)));
        }
    }
    let red = reduce(total, relations);
    let presented = FGAbGroup::from_presentation(red.relations);
    let to = presented.to_canonical();
    let from = presented.from_canonical();
    let group = to.target().clone();
    let width = red.survivors.len();
    let components = diagram
        .groups
        .iter()
        .enumerate()
        .map(|(c, g)| {
            let cols: Vec<Vec<BigInt>> = (0..g.generators()).map(|k| to.apply(&dense(width, &red.expressions[offsets[c] + k]))).collect();
            AbHom::new(g.clone(), group.clone(), IntMatrix::from_columns(group.generators(), &cols)).expect("component dimensions")
        })
        .collect();
    let owner = |x: usize| {
        let c = offsets.partition_point(|&o| o <= x) - 1;
        (c, x - offsets[c])
    };
    AbColimit {
        group: group.clone(),
        cocone: AbCocone { vertex: group, components },
        diagram: diagram.clone(),
        survivors: red.survivors.iter().map(|&x| owner(x)).collect(),
        from_canonical: from.matrix().clone(),
    }
}

/// Limit of an [`AbDiagram`], realized inside the product of all vertices.
#[derive(Clone, Debug)]
pub struct AbLimit {
    pub group: FGAbGroup,
    pub cone: AbCone,
    diagram: AbDiagram,
    product: Biproduct,
    kernel: Kernel,
}

impl AbLimit {
    pub fn diagram(&self) -> &AbDiagram {
        &self.diagram
    }

    /// The unique map from `cone.vertex` commuting with both cones.
    pub fn factor(&self, cone: &AbCone) -> Result<AbHom> {
        if let Some(f) = cone.failing_morphism(&self.diagram)? {
            return Err(Error::Precondition(format!("not a cone: triangle at morphism {f} fails")));
        }
        let into_product = self.product.pair(&cone.vertex, &cone.components)?;
        self.kernel.lift(&into_product)
    }
}

pub fn ab_limit(diagram: &AbDiagram) -> AbLimit {
    let base = &diagram.base;
    let product = biproduct(&diagram.groups);
    let spanning = base.spanning_morphisms();
    let targets: Vec<FGAbGroup> = spanning.iter().map(|&f| diagram.groups[base.cod(f)].clone()).collect();
    let codomain = biproduct(&targets);
    let mut m = IntMatrix::zeros(codomain.group.generators(), product.group.generators());
    for (i, &f) in spanning.iter().enumerate() {
        let (a, b) = (base.dom(f), base.cod(f));
        let row = codomain.offset(i);
        let block = diagram.maps[f].matrix();
        for r in 0..block.rows() {
            for k in 0..block.cols() {
                m[(row + r, product.offset(a) + k)] += &block[(r, k)];
            }
            m[(row + r, product.offset(b) + r)] -= 1;
        }
    }
    let difference = AbHom::new(product.group.clone(), codomain.group, m).expect("dimensions");
    let kernel = difference.kernel();
    let components = product
        .projections
        .iter()
        .map(|p| p.compose(&kernel.inclusion).expect("composable"))
        .collect();
    AbLimit {
        group: kernel.group.clone(),
        cone: AbCone { vertex: kernel.group.clone(), components },
        diagram: diagram.clone(),
        product,
        kernel,
    }
}

/// The map `colim D → colim E` induced by a natural transformation.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: AbColimit,
    pub target: AbColimit,
    pub map: AbHom,
}

/// Checks naturality of `eta` on every base morphism, then factors
/// `ι^E ∘ η` through the colimit of `D`.
pub fn induced_map_on_colimits(d: &AbDiagram, e: &AbDiagram, eta: &[AbHom]) -> Result<InducedMap> {
    check_natural(d, e, eta)?;
    let source = ab_colimit(d);
    let target = ab_colimit(e);
    let map = map_between(&source, &target, eta)?;
    Ok(InducedMap { source, target, map })
}

/// Map between already computed colimits; `eta` must be natural.
pub(crate) fn map_between(source: &AbColimit, target: &AbColimit, eta: &[AbHom]) -> Result<AbHom> {
    let legs: Vec<AbHom> = eta
        .iter()
        .enumerate()
        .map(|(c, h)| target.cocone.components[c].compose(h))
        .collect::<Result<_>>()?;
    let map = source.factor_unchecked(&target.group, &legs);
    for (c, leg) in legs.iter().enumerate() {
        if !map.compose(&source.cocone.components[c])?.equals(leg)? {
            return Err(Error::Precondition(format!("induced map does not commute at object {c}")));
        }
    }
    Ok(map)
}

pub(crate) fn check_natural(d: &AbDiagram, e: &AbDiagram, eta: &[AbHom]) -> Result<()> {
    if d.base != e.base {
        return Err(Error::input("eta", "diagrams have different bases"));
    }
    if eta.len() != d.groups.len() {
        return Err(Error::input("eta", format!("expected {} components, found {}", d.groups.len(), eta.len())));
    }
    for (c, h) in eta.iter().enumerate() {
        if h.source() != &d.groups[c] || h.target() != &e.groups[c] {
            return Err(Error::input(format!("eta[{c}]"), "endpoint mismatch"));
        }
    }
    for f in 0..d.maps.len() {
        let (a, b) = (d.base.dom(f), d.base.cod(f));
        let left = eta[b].compose(&d.maps[f])?;
        let right = e.maps[f].compose(&eta[a])?;
        if !left.equals(&right)? {
            return Err(Error::input(
                format!("eta@{}", d.base.morphism_label(f)),
                format!("transformation is not natural at morphism {f}"),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::FinCategory;

    fn z() -> FGAbGroup {
        FGAbGroup::free(1)
    }

    fn parallel(f: i64, g: i64) -> AbDiagram {
        let base = FinCategory::parallel_pair();
        let maps = vec![AbHom::identity(&z()), AbHom::identity(&z()), AbHom::scalar(&z(), f), AbHom::scalar(&z(), g)];
        AbDiagram::new(base, vec![z(), z()], maps).unwrap()
    }

    #[test]
    fn discrete_colimit_is_direct_sum() {
        let groups = vec![FGAbGroup::cyclic(2), z(), FGAbGroup::cyclic(3)];
        let base = FinCategory::discrete(3);
        let maps = groups.iter().map(AbHom::identity).collect();
        let d = AbDiagram::new(base, groups, maps).unwrap();
        let col = ab_colimit(&d);
        assert_eq!(col.group.to_string(), "ℤ/6 ⊕ ℤ");
        assert!(col.cocone.failing_morphism(&d).unwrap().is_none());
        assert_eq!(ab_limit(&d).group.to_string(), "ℤ/6 ⊕ ℤ");
    }

    #[test]
    fn coequalizer_and_equalizer_of_double_and_zero() {
        let d = parallel(2, 0);
        assert_eq!(ab_colimit(&d).group.to_string(), "ℤ/2");
        assert!(ab_limit(&d).group.is_trivial());
    }

    #[test]
    fn pushout_of_two_and_three() {
        let base = FinCategory::span();
        let mut maps = Vec::new();
        for f in 0..base.morphism_count() {
            maps.push(match base.morphism_label(f) {
                "p" => AbHom::scalar(&z(), 2),
                "q" => AbHom::scalar(&z(), 3),
                _ => AbHom::identity(&z()),
            });
        }
        let d = AbDiagram::new(base, vec![z(), z(), z()], maps).unwrap();
        let col = ab_colimit(&d);
        assert_eq!(col.group.to_string(), "ℤ");
        assert!(col.cocone.failing_morphism(&d).unwrap().is_none());
        // The limit of a span is its apex.
        assert_eq!(ab_limit(&d).group.to_string(), "ℤ");
    }

    #[test]
    fn cocone_factorization() {
        let d = parallel(2, 0);
        let col = ab_colimit(&d);
        let z4 = FGAbGroup::cyclic(4);
        let leg_b = AbHom::new(z(), z4.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let leg_a = AbHom::zero(&z(), &z4);
        let probe = AbCocone { vertex: z4.clone(), components: vec![leg_a, leg_b.clone()] };
        let u = col.factor(&probe).unwrap();
        assert!(u.compose(&col.cocone.components[1]).unwrap().equals(&leg_b).unwrap());
        let bad = AbCocone {
            vertex: z4.clone(),
            components: vec![AbHom::zero(&z(), &z4), AbHom::new(z(), z4, IntMatrix::from_rows(&[vec![1]])).unwrap()],
        };
        assert!(col.factor(&bad).is_err());
    }

    #[test]
    fn cone_factorization() {
        let d = parallel(2, 2);
        let lim = ab_limit(&d);
        assert_eq!(lim.group.to_string(), "ℤ");
        let probe = AbCone { vertex: z(), components: vec![AbHom::scalar(&z(), 3), AbHom::scalar(&z(), 6)] };
        let u = lim.factor(&probe).unwrap();
        assert!(lim.cone.components[0].compose(&u).unwrap().equals(&probe.components[0]).unwrap());
    }

    #[test]
    fn initial_object_limit() {
        let d = AbDiagram::constant(&FinCategory::chain(3), &FGAbGroup::cyclic(5));
        assert_eq!(ab_limit(&d).group.to_string(), "ℤ/5");
        assert_eq!(ab_colimit(&d).group.to_string(), "ℤ/5");
    }

    #[test]
    fn induced_map_examples() {
        let d = AbDiagram::constant(&FinCategory::discrete(2), &z());
        let id: Vec<AbHom> = (0..2).map(|_| AbHom::identity(&z())).collect();
        let ind = induced_map_on_colimits(&d, &d, &id).unwrap();
        assert!(ind.map.equals(&AbHom::identity(&ind.source.group)).unwrap());
        let double: Vec<AbHom> = (0..2).map(|_| AbHom::scalar(&z(), 2)).collect();
        let ind = induced_map_on_colimits(&d, &d, &double).unwrap();
        assert!(ind.map.is_mono());
        assert!(!ind.map.is_epi());
        // Non-natural components on a chain.
        let c = AbDiagram::constant(&FinCategory::chain(2), &z());
        let skew = vec![AbHom::scalar(&z(), 1), AbHom::scalar(&z(), 2)];
        assert!(matches!(induced_map_on_colimits(&c, &c, &skew), Err(Error::Input { .. })));
    }
}
