use super::HxCategory;
use crate::abdiag::{ab_colimit, induced_map_on_colimits, AbCocone, AbColimit, AbDiagram, Family};
use crate::abgrp::{biproduct, AbHom, Biproduct, CanonicalForm, IntMatrix};
use crate::error::{Error, Result};
use crate::fincat::Category;

/// `GA(n, x) = ⊕_i A(x_i)`; a morphism `f` routes summand `i` into summand
/// `f(i)`, so fibres of `f` are summed.
pub fn harting_expand(family: &Family, h: &HxCategory) -> Result<AbDiagram> {
    let (diagram, _) = expand_with_sums(family, h)?;
    Ok(diagram)
}

fn expand_with_sums(family: &Family, h: &HxCategory) -> Result<(AbDiagram, Vec<Biproduct>)> {
    if family.len() != h.letters().size() {
        return Err(Error::input("family", format!("expected {} groups, found {}", h.letters().size(), family.len())));
    }
    let sums: Vec<Biproduct> = h
        .objects()
        .iter()
        .map(|o| biproduct(&o.word.iter().map(|&x| family.groups[x].clone()).collect::<Vec<_>>()))
        .collect();
    let base = h.to_fin_category()?;
    let maps = (0..h.morphism_count())
        .map(|f| {
            let (a, b) = (h.dom(f), h.cod(f));
            let mut m = IntMatrix::zeros(sums[b].group.generators(), sums[a].group.generators());
            for (i, &j) in h.map(f).iter().enumerate() {
                let n = sums[a].injections[i].source().generators();
                for k in 0..n {
                    m[(sums[b].offset(j) + k, sums[a].offset(i) + k)] += 1;
                }
            }
            AbHom::new(sums[a].group.clone(), sums[b].group.clone(), m)
        })
        .collect::<Result<Vec<_>>>()?;
    let groups = sums.iter().map(|s| s.group.clone()).collect();
    Ok((AbDiagram::new(base, groups, maps)?, sums))
}

/// Explicit comparison between `colim GA` and `⊕A`.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub colimit: AbColimit,
    pub direct_sum: Biproduct,
    /// `colim GA → ⊕A`, induced by the cocone `Σ_i ι_{x_i} π_i`.
    pub forward: AbHom,
    /// `⊕A → colim GA`, assembled from the colimit legs at `(x)`.
    pub backward: AbHom,
    pub inverse_pair: bool,
    pub cocones_commute: bool,
    /// First failed check, when the comparison is not an isomorphism.
    pub failure: Option<String>,
}

impl IsoReport {
    pub fn is_iso(&self) -> bool {
        self.inverse_pair && self.cocones_commute
    }
}

pub fn harting_compare(family: &Family, h: &HxCategory) -> Result<IsoReport> {
    if h.cap() < 2 {
        return Err(Error::Precondition("comparison needs arity cap at least 2".into()));
    }
    let (diagram, sums) = expand_with_sums(family, h)?;
    let colimit = ab_colimit(&diagram);
    let direct = family.direct_sum();

    let legs = (0..h.object_count())
        .map(|c| {
            let s = &sums[c];
            let mut m = IntMatrix::zeros(direct.group.generators(), s.group.generators());
            for (i, &x) in h.object(c).word.iter().enumerate() {
                let n = family.groups[x].generators();
                for k in 0..n {
                    m[(direct.offset(x) + k, s.offset(i) + k)] = 1.into();
                }
            }
            AbHom::new(s.group.clone(), direct.group.clone(), m)
        })
        .collect::<Result<Vec<_>>>()?;
    let probe = AbCocone { vertex: direct.group.clone(), components: legs };
    let forward = colimit.factor(&probe)?;
    let singles: Vec<AbHom> = (0..family.len())
        .map(|x| {
            // GA(x) has the single summand A(x) on the same generators.
            let c = h.singleton(x);
            let leg = &colimit.cocone.components[c];
            AbHom::new(family.groups[x].clone(), colimit.group.clone(), leg.matrix().clone())
        })
        .collect::<Result<Vec<_>>>()?;
    let backward = if family.is_empty() {
        AbHom::zero(&direct.group, &colimit.group)
    } else {
        direct.copair(&singles)?
    };

    let mut failure = None;
    let there = backward.compose(&forward)?.equals(&AbHom::identity(&colimit.group))?;
    let back = forward.compose(&backward)?.equals(&AbHom::identity(&direct.group))?;
    if !there {
        failure = Some("backward ∘ forward is not the identity".to_string());
    } else if !back {
        failure = Some("forward ∘ backward is not the identity".to_string());
    }
    let mut cocones_commute = true;
    for x in 0..family.len() {
        let c = h.singleton(x);
        let via = forward.compose(&colimit.cocone.components[c])?;
        let expected = AbHom::new(colimit.cocone.components[c].source().clone(), direct.group.clone(), direct.injections[x].matrix().clone())?;
        if !via.equals(&expected)? || !backward.compose(&direct.injections[x])?.equals(&singles[x])? {
            cocones_commute = false;
            failure.get_or_insert_with(|| format!("cocone triangle fails at letter {x}"));
        }
    }
    Ok(IsoReport { colimit, direct_sum: direct, forward, backward, inverse_pair: there && back, cocones_commute, failure })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapStability {
    pub at_cap: CanonicalForm,
    pub at_next: CanonicalForm,
}

impl CapStability {
    pub fn stable(&self) -> bool {
        self.at_cap == self.at_next
    }
}

/// Canonical forms of `colim GA` at `cap` and `cap + 1`.
pub fn cap_stability(family: &Family, cap: usize) -> Result<CapStability> {
    let forms = [cap, cap + 1]
        .iter()
        .map(|&c| {
            let h = HxCategory::with_budget(&family.index, c, super::DEFAULT_BUDGET)?;
            Ok(ab_colimit(&harting_expand(family, &h)?).group.canonical_form().clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CapStability { at_cap: forms[0].clone(), at_next: forms[1].clone() })
}

/// `⊕η` computed two ways: directly on biproducts and through
/// `colim Gη` transported along the comparison isomorphisms.
#[derive(Clone, Debug)]
pub struct HartingInduced {
    pub direct: AbHom,
    pub via_hx: AbHom,
    pub agree: bool,
    pub mono: bool,
}

pub fn harting_induced(source: &Family, target: &Family, eta: &[AbHom], h: &HxCategory) -> Result<HartingInduced> {
    if eta.len() != source.len() || target.len() != source.len() {
        return Err(Error::input("eta", "families and components must have the same length"));
    }
    let (ga, sa) = expand_with_sums(source, h)?;
    let (gb, sb) = expand_with_sums(target, h)?;
    let components = (0..h.object_count())
        .map(|c| {
            let blocks: Vec<IntMatrix> = h.object(c).word.iter().map(|&x| eta[x].matrix().clone()).collect();
            AbHom::new(sa[c].group.clone(), sb[c].group.clone(), IntMatrix::block_diagonal(&blocks))
        })
        .collect::<Result<Vec<_>>>()?;
    let induced = induced_map_on_colimits(&ga, &gb, &components)?;
    let cmp_a = harting_compare(source, h)?;
    let cmp_b = harting_compare(target, h)?;
    let via_hx = cmp_b.forward.compose(&induced.map)?.compose(&cmp_a.backward)?;
    let blocks: Vec<IntMatrix> = eta.iter().map(|e| e.matrix().clone()).collect();
    let direct = AbHom::new(cmp_a.direct_sum.group.clone(), cmp_b.direct_sum.group.clone(), IntMatrix::block_diagonal(&blocks))?;
    let agree = via_hx.equals(&direct)?;
    let mono = induced.map.is_mono();
    Ok(HartingInduced { direct, via_hx, agree, mono })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::{are_isomorphic, FGAbGroup};
    use crate::harting::{h_embedding, hx_category};
    use crate::setdiag::FinSet;

    fn letters(n: usize) -> FinSet {
        FinSet::labelled((0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()).unwrap()
    }

    fn family(groups: Vec<FGAbGroup>) -> Family {
        Family::new(letters(groups.len()), groups).unwrap()
    }

    #[test]
    fn expansion_is_a_functor() {
        let fam = family(vec![FGAbGroup::free(1), FGAbGroup::cyclic(2)]);
        let h = hx_category(&fam.index, 2).unwrap();
        let d = harting_expand(&fam, &h).unwrap();
        assert!(d.validate().is_valid());
        for c in 0..h.object_count() {
            assert!(d.maps[h.identity(c)].equals(&AbHom::identity(&d.groups[c])).unwrap());
        }
    }

    #[test]
    fn fold_sums_and_injection_includes() {
        let fam = family(vec![FGAbGroup::free(1), FGAbGroup::free(1)]);
        let h = hx_category(&fam.index, 2).unwrap();
        let d = harting_expand(&fam, &h).unwrap();
        let a = h.singleton(0);
        let aa = h.coproduct(a, a).unwrap().0;
        let fold = h.find(aa, a, &[0, 0]).unwrap();
        assert_eq!(d.maps[fold].matrix(), &IntMatrix::from_rows(&[vec![1, 1]]));
        let ba = h.object_index(&crate::harting::HxObject::new(vec![1, 0])).unwrap();
        let inj = h.find(a, ba, &[1]).unwrap();
        assert_eq!(d.maps[inj].matrix(), &IntMatrix::from_rows(&[vec![0], vec![1]]));
    }

    #[test]
    fn singletons_recover_the_family() {
        let fam = family(vec![FGAbGroup::cyclic(4), FGAbGroup::free(2)]);
        let h = hx_category(&fam.index, 2).unwrap();
        let d = harting_expand(&fam, &h).unwrap();
        let e = h_embedding(&h).unwrap();
        let restricted = d.restrict_along(&e).unwrap();
        for x in 0..2 {
            assert_eq!(restricted.groups[x].relations(), fam.groups[x].relations());
        }
    }

    #[test]
    fn comparison_examples() {
        for groups in [
            vec![FGAbGroup::cyclic(4)],
            vec![FGAbGroup::free(1), FGAbGroup::cyclic(2)],
            vec![FGAbGroup::zero(), FGAbGroup::zero()],
        ] {
            let fam = family(groups);
            let h = hx_category(&fam.index, 2).unwrap();
            let r = harting_compare(&fam, &h).unwrap();
            assert!(r.is_iso(), "{:?}", r.failure);
            assert_eq!(r.colimit.group.canonical_form(), r.direct_sum.group.canonical_form());
        }
        let fam = family(vec![FGAbGroup::free(1), FGAbGroup::cyclic(2)]);
        let r = harting_compare(&fam, &hx_category(&fam.index, 2).unwrap()).unwrap();
        assert_eq!(r.colimit.group.to_string(), "ℤ/2 ⊕ ℤ");
    }

    #[test]
    fn comparison_needs_cap_two() {
        let fam = family(vec![FGAbGroup::free(1)]);
        let h = hx_category(&fam.index, 1).unwrap();
        assert!(matches!(harting_compare(&fam, &h), Err(Error::Precondition(_))));
    }

    #[test]
    fn cap_two_is_stable() {
        let fam = family(vec![FGAbGroup::cyclic(6), FGAbGroup::free(1)]);
        assert!(cap_stability(&fam, 2).unwrap().stable());
    }

    #[test]
    fn expansion_preserves_binary_products() {
        let a = family(vec![FGAbGroup::free(1), FGAbGroup::cyclic(2)]);
        let b = family(vec![FGAbGroup::cyclic(3), FGAbGroup::zero()]);
        let ab = family(
            (0..2).map(|x| biproduct(&[a.groups[x].clone(), b.groups[x].clone()]).group).collect(),
        );
        let h = hx_category(&a.index, 2).unwrap();
        let (ga, gb, gab) = (harting_expand(&a, &h).unwrap(), harting_expand(&b, &h).unwrap(), harting_expand(&ab, &h).unwrap());
        let (sum, _) = ga.pointwise_biproduct(&gb).unwrap();
        for c in 0..h.object_count() {
            assert!(are_isomorphic(&gab.groups[c], &sum.groups[c]).is_some());
        }
    }

    #[test]
    fn induced_maps_agree() {
        let z = FGAbGroup::free(1);
        let a = family(vec![z.clone(), z.clone()]);
        let r = harting_induced(&a, &a, &[AbHom::scalar(&z, 2), AbHom::scalar(&z, 3)], &hx_category(&a.index, 2).unwrap()).unwrap();
        assert!(r.agree && r.mono);
    }
}
