//! Seeded generators for the randomized verification suites.
//!
//! All generators take an explicit `ChaCha8Rng` so that every suite is
//! reproducible from a single `u64` seed.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abdiag::{AbDiagram, Family};
use crate::abgrp::{biproduct, AbHom, CanonicalForm, FGAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::fincat::{group_as_category, Category, FinCategory, FinGroup};
use crate::setdiag::{set_colimit, FinSet, SetFunctor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Entries uniform in `-bound..=bound`.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    if rows.is_empty() {
        return IntMatrix::zeros(0, cols);
    }
    IntMatrix::from_rows(&rows)
}

/// Product of `steps` random elementary matrices.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = BigInt::from(rng.gen_range(-2i64..=2));
        m.add_row_multiple(i, j, &k);
    }
    m
}

/// A canonical form with free rank at most `max_rank`, at most two
/// invariant factors, each at most `max_factor`.
pub fn random_form(rng: &mut ChaCha8Rng, max_rank: usize, max_factor: u64) -> CanonicalForm {
    let free_rank = rng.gen_range(0..=max_rank);
    let mut factors = Vec::new();
    if max_factor >= 2 {
        let count = rng.gen_range(0..=2);
        let mut prev = 1u64;
        for _ in 0..count {
            let options: Vec<u64> = (2..=max_factor).filter(|d| d % prev == 0 && *d > 1).collect();
            let Some(&d) = options.choose(rng) else { break };
            factors.push(BigInt::from(d));
            prev = d;
        }
    }
    CanonicalForm { free_rank, factors }
}

/// A group with a random canonical form, presented on scrambled
/// generators, sometimes with one redundant generator.
pub fn random_group(rng: &mut ChaCha8Rng, max_rank: usize, max_factor: u64) -> FGAbGroup {
    let form = random_form(rng, max_rank, max_factor);
    let canonical = FGAbGroup::from_canonical_form(&form);
    let g = canonical.generators();
    let p = random_unimodular(rng, g, 2 * g);
    let mut rels = p.mul(canonical.relations());
    let mut gens = g;
    if rng.gen_bool(0.5) {
        // New generator e with relation e = v, v a random old element.
        let v: Vec<BigInt> = (0..g).map(|_| BigInt::from(rng.gen_range(-1i64..=1))).collect();
        let mut ext = IntMatrix::zeros(g + 1, rels.cols() + 1);
        ext.set_block(0, 0, &rels);
        for (i, x) in v.iter().enumerate() {
            ext[(i, rels.cols())] = -x.clone();
        }
        ext[(g, rels.cols())] = BigInt::from(1);
        rels = ext;
        gens += 1;
    }
    let q = random_unimodular(rng, gens, gens);
    FGAbGroup::from_presentation(q.mul(&rels))
}

/// A well-defined homomorphism, built between canonical forms.
pub fn random_hom(rng: &mut ChaCha8Rng, a: &FGAbGroup, b: &FGAbGroup) -> AbHom {
    let (ca, cb) = (a.canonical_group(), b.canonical_group());
    let (fa, fb) = (a.invariant_factors(), b.invariant_factors());
    let mut m = IntMatrix::zeros(cb.generators(), ca.generators());
    for i in 0..ca.generators() {
        for j in 0..cb.generators() {
            let step = match (fa.get(i), fb.get(j)) {
                (Some(d), Some(e)) => e / d.gcd(e),
                (Some(_), None) => continue,
                (None, _) => BigInt::from(1),
            };
            let bound = fb.get(j).and_then(ToPrimitive::to_i64).unwrap_or(3);
            m[(j, i)] = step * BigInt::from(rng.gen_range(-bound..=bound));
        }
    }
    let core = AbHom::new(ca, cb, m).expect("canonical dimensions");
    let h = b.from_canonical().compose(&core).and_then(|x| x.compose(&a.to_canonical())).expect("composable");
    debug_assert!(h.is_well_defined());
    h
}

/// A monomorphism out of `a`: either the graph `x ↦ (x, φx)` into `a ⊕ c`
/// or, on free groups, a nonsingular integer matrix.
pub fn random_mono(rng: &mut ChaCha8Rng, a: &FGAbGroup, max_rank: usize, max_factor: u64) -> AbHom {
    if a.is_trivial() || (a.relations().cols() == 0 && rng.gen_bool(0.3)) {
        let n = a.generators();
        loop {
            let m = random_matrix(rng, n, n, 3);
            if n == 0 || !m.determinant().is_zero() {
                return AbHom::new(a.clone(), a.clone(), m).expect("square");
            }
        }
    }
    let c = random_group(rng, max_rank, max_factor);
    let phi = random_hom(rng, a, &c);
    let sum = biproduct(&[a.clone(), c]);
    sum.pair(a, &[AbHom::identity(a), phi]).expect("graph map")
}

/// A family over `{0, …, n−1}` of random groups.
pub fn random_family(rng: &mut ChaCha8Rng, letters: usize, max_rank: usize, max_factor: u64) -> Family {
    let groups = (0..letters).map(|_| random_group(rng, max_rank, max_factor)).collect();
    Family::new(letter_set(letters), groups).expect("sizes agree")
}

/// `{a, b, c, …}`.
pub fn letter_set(n: usize) -> FinSet {
    FinSet::labelled((0..n).map(|i| ((b'a' + (i % 26) as u8) as char).to_string()).collect()).expect("distinct")
}

fn random_table(rng: &mut ChaCha8Rng, from: usize, to: usize) -> Vec<usize> {
    (0..from).map(|_| rng.gen_range(0..to)).collect()
}

/// A random diagram on a poset category: each new object receives a random
/// map out of the colimit of everything strictly below it.
pub fn random_poset_functor(rng: &mut ChaCha8Rng, poset: &FinCategory, max_size: usize) -> Result<SetFunctor> {
    let k = poset.object_count();
    let below = |q: usize| (0..k).filter(|&p| p != q && !poset.hom(p, q).is_empty()).collect::<Vec<_>>();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&q| (below(q).len(), q));
    let mut sizes = vec![0usize; k];
    let mut tables: HashMap<usize, Vec<usize>> = HashMap::new();
    for &q in &order {
        let down = below(q);
        let size = rng.gen_range(1..=max_size.max(1));
        sizes[q] = size;
        if down.is_empty() {
            continue;
        }
        let (sub, kept) = poset.full_subcategory(&down);
        let sets = down.iter().map(|&p| FinSet::new(sizes[p])).collect();
        let maps = kept
            .iter()
            .map(|&f| if poset.is_identity(f) { (0..sizes[poset.dom(f)]).collect() } else { tables[&f].clone() })
            .collect();
        let restricted = SetFunctor::new(sub, sets, maps)?;
        let colim = set_colimit(&restricted);
        let r = random_table(rng, colim.carrier().size(), size);
        for (i, &p) in down.iter().enumerate() {
            let f = *poset.hom(p, q).first().expect("p below q");
            tables.insert(f, colim.cocone.legs[i].iter().map(|&c| r[c]).collect());
        }
    }
    let maps = (0..poset.morphism_count())
        .map(|f| if poset.is_identity(f) { (0..sizes[poset.dom(f)]).collect() } else { tables[&f].clone() })
        .collect();
    SetFunctor::new(poset.clone(), sizes.into_iter().map(FinSet::new).collect(), maps)
}

/// Depth-one free shapes: every non-identity is a generator from a source
/// object to a distinct sink object.
fn depth_one_generators(shape: &FinCategory) -> Result<Vec<usize>> {
    let gens = shape.spanning_morphisms();
    if shape.morphism_count() != shape.object_count() + gens.len() {
        return Err(Error::Precondition("shape has composite morphisms".into()));
    }
    if gens.iter().any(|&g| shape.dom(g) == shape.cod(g) || gens.iter().any(|&h| shape.cod(h) == shape.dom(g))) {
        return Err(Error::Precondition("shape is not of depth one".into()));
    }
    Ok(gens)
}

fn assemble(shape: &FinCategory, sizes: &[usize], gen_tables: &HashMap<usize, Vec<usize>>) -> Result<SetFunctor> {
    let maps = (0..shape.morphism_count())
        .map(|f| if shape.is_identity(f) { (0..sizes[shape.dom(f)]).collect() } else { gen_tables[&f].clone() })
        .collect();
    SetFunctor::new(shape.clone(), sizes.iter().map(|&s| FinSet::new(s)).collect(), maps)
}

/// A diagram on `chain(levels) × shape` for a depth-one free shape such as
/// a discrete category, a parallel pair or a span. Each transition is
/// filled by constraint solving, falling back to an identity component.
pub fn random_chain_diagram(rng: &mut ChaCha8Rng, levels: usize, shape: &FinCategory, max_size: usize) -> Result<SetFunctor> {
    let gens = depth_one_generators(shape)?;
    let k = shape.object_count();
    let is_source = |c: usize| gens.iter().any(|&g| shape.dom(g) == c);
    let mut sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=max_size)).collect();
    let mut tables: HashMap<usize, Vec<usize>> = gens.iter().map(|&g| (g, random_table(rng, sizes[shape.dom(g)], sizes[shape.cod(g)]))).collect();
    let mut diagrams = vec![assemble(shape, &sizes, &tables)?];
    let mut transitions = Vec::new();
    for _ in 1..levels {
        let mut next_sizes = sizes.clone();
        let mut next_tables = HashMap::new();
        let mut tau: Vec<Vec<usize>> = vec![Vec::new(); k];
        for c in (0..k).filter(|&c| !is_source(c)) {
            next_sizes[c] = rng.gen_range(1..=max_size);
            tau[c] = random_table(rng, sizes[c], next_sizes[c]);
        }
        for a in (0..k).filter(|&a| is_source(a)) {
            let out: Vec<usize> = gens.iter().copied().filter(|&g| shape.dom(g) == a).collect();
            let mut solved = None;
            for _ in 0..20 {
                let size = rng.gen_range(1..=max_size);
                let cand: HashMap<usize, Vec<usize>> =
                    out.iter().map(|&g| (g, random_table(rng, size, next_sizes[shape.cod(g)]))).collect();
                let mut t = Vec::with_capacity(sizes[a]);
                for x in 0..sizes[a] {
                    let fits: Vec<usize> = (0..size)
                        .filter(|&y| out.iter().all(|&g| cand[&g][y] == tau[shape.cod(g)][tables[&g][x]]))
                        .collect();
                    match fits.choose(rng) {
                        Some(&y) => t.push(y),
                        None => break,
                    }
                }
                if t.len() == sizes[a] {
                    solved = Some((size, cand, t));
                    break;
                }
            }
            let (size, cand, t) = solved.unwrap_or_else(|| {
                let id = (0..sizes[a]).collect();
                let forced = out.iter().map(|&g| (g, tables[&g].iter().map(|&x| tau[shape.cod(g)][x]).collect())).collect();
                (sizes[a], forced, id)
            });
            next_sizes[a] = size;
            next_tables.extend(cand);
            tau[a] = t;
        }
        sizes = next_sizes;
        tables = next_tables;
        diagrams.push(assemble(shape, &sizes, &tables)?);
        transitions.push(tau);
    }
    SetFunctor::from_chain(&diagrams, &transitions)
}

/// A chain of `ℤ/2`-sets with equivariant transitions, on
/// `chain(levels) × B(ℤ/2)`.
pub fn random_z2_chain(rng: &mut ChaCha8Rng, levels: usize, max_size: usize) -> Result<SetFunctor> {
    let z2 = FinGroup::cyclic(2);
    let base = group_as_category(&z2);
    let involution = |rng: &mut ChaCha8Rng, n: usize| {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut free: Vec<usize> = (0..n).collect();
        free.shuffle(rng);
        while free.len() >= 2 && rng.gen_bool(0.6) {
            let (a, b) = (free.pop().expect("len ≥ 2"), free.pop().expect("len ≥ 2"));
            perm.swap(a, b);
        }
        perm
    };
    let make = |sigma: &[usize]| -> Result<SetFunctor> {
        SetFunctor::new(base.clone(), vec![FinSet::new(sigma.len())], vec![(0..sigma.len()).collect(), sigma.to_vec()])
    };
    let n = rng.gen_range(1..=max_size);
    let mut sigma = involution(rng, n);
    let mut diagrams = vec![make(&sigma)?];
    let mut transitions = Vec::new();
    for _ in 1..levels {
        let n = rng.gen_range(1..=max_size);
        let next = involution(rng, n);
        let fixed: Vec<usize> = (0..next.len()).filter(|&y| next[y] == y).collect();
        let has_fixed_source = (0..sigma.len()).any(|x| sigma[x] == x);
        let (next, tau) = if has_fixed_source && fixed.is_empty() {
            (sigma.clone(), (0..sigma.len()).collect())
        } else {
            let mut tau = vec![usize::MAX; sigma.len()];
            for x in 0..sigma.len() {
                if tau[x] != usize::MAX {
                    continue;
                }
                if sigma[x] == x {
                    tau[x] = *fixed.choose(rng).expect("checked non-empty");
                } else {
                    let y = rng.gen_range(0..next.len());
                    tau[x] = y;
                    tau[sigma[x]] = next[y];
                }
            }
            (next, tau)
        };
        sigma = next;
        diagrams.push(make(&sigma)?);
        transitions.push(vec![tau]);
    }
    SetFunctor::from_chain(&diagrams, &transitions)
}

/// A random finite join-semilattice: unions of random subsets of a small
/// ground set, ordered by inclusion.
pub fn random_join_semilattice(rng: &mut ChaCha8Rng, ground: u32, seeds: usize) -> FinCategory {
    let mut elems: Vec<u32> = (0..seeds.max(1)).map(|_| rng.gen_range(0..(1u32 << ground))).collect();
    loop {
        let mut grew = false;
        for i in 0..elems.len() {
            for j in 0..elems.len() {
                let u = elems[i] | elems[j];
                if !elems.contains(&u) {
                    elems.push(u);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    elems.sort_by_key(|&e| (e.count_ones(), e));
    elems.dedup();
    let sub = |a: u32, b: u32| a != b && a & b == a;
    let mut covers = Vec::new();
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            if sub(a, b) && !elems.iter().any(|&c| sub(a, c) && sub(c, b)) {
                covers.push((i, j));
            }
        }
    }
    let labels = elems.iter().map(|e| format!("{{{}}}", (0..ground).filter(|i| e >> i & 1 == 1).map(|i| i.to_string()).collect::<Vec<_>>().join(","))).collect();
    FinCategory::poset(labels, &covers).expect("inclusion is acyclic")
}

/// `D_i = A` along a chain with transitions `×s_i`, `E_i = B` with `×t_i`,
/// and `η_i = c_i·h`, where `s_i = u_i c_i` and `t_i = u_i c_{i+1}`.
pub fn random_scaled_chain_pair(
    rng: &mut ChaCha8Rng,
    levels: usize,
    max_rank: usize,
    max_factor: u64,
) -> (AbDiagram, AbDiagram, Vec<AbHom>) {
    let a = random_group(rng, max_rank, max_factor);
    let b = random_group(rng, max_rank, max_factor);
    let h = random_hom(rng, &a, &b);
    let c: Vec<i64> = (0..levels).map(|_| rng.gen_range(1..=3)).collect();
    let u: Vec<i64> = (0..levels).map(|_| rng.gen_range(1..=2)).collect();
    let s: Vec<i64> = (0..levels.saturating_sub(1)).map(|i| u[i] * c[i]).collect();
    let t: Vec<i64> = (0..levels.saturating_sub(1)).map(|i| u[i] * c[i + 1]).collect();
    let d = scalar_chain(levels, &a, &s);
    let e = scalar_chain(levels, &b, &t);
    let eta = c.iter().map(|&ci| h.compose(&AbHom::scalar(&a, ci)).expect("endomorphism")).collect();
    (d, e, eta)
}

/// `D = E` along a chain of random endomorphisms, with `η` a scalar.
pub fn random_endomorphism_chain(
    rng: &mut ChaCha8Rng,
    levels: usize,
    max_rank: usize,
    max_factor: u64,
) -> (AbDiagram, AbDiagram, Vec<AbHom>) {
    let a = random_group(rng, max_rank, max_factor);
    let steps: Vec<AbHom> = (0..levels.saturating_sub(1)).map(|_| random_hom(rng, &a, &a)).collect();
    let base = FinCategory::chain(levels);
    let maps = (0..base.morphism_count())
        .map(|f| {
            steps[base.dom(f)..base.cod(f)]
                .iter()
                .fold(AbHom::identity(&a), |acc, s| s.compose(&acc).expect("endomorphisms"))
        })
        .collect();
    let d = AbDiagram::new(base, vec![a.clone(); levels], maps).expect("endpoints");
    let k = rng.gen_range(0..=4);
    let eta = (0..levels).map(|_| AbHom::scalar(&a, k)).collect();
    (d.clone(), d, eta)
}

fn scalar_chain(levels: usize, g: &FGAbGroup, steps: &[i64]) -> AbDiagram {
    let base = FinCategory::chain(levels);
    let maps = (0..base.morphism_count())
        .map(|f| AbHom::scalar(g, steps[base.dom(f)..base.cod(f)].iter().product::<i64>()))
        .collect();
    AbDiagram::new(base, vec![g.clone(); levels], maps).expect("endpoints")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_groups_match_their_forms() {
        let mut r = rng(7);
        for _ in 0..30 {
            let g = random_group(&mut r, 2, 6);
            assert!(g.free_rank() <= 2);
            assert!(g.invariant_factors().iter().all(|d| *d <= BigInt::from(6)));
            let b = random_group(&mut r, 2, 6);
            let h = random_hom(&mut r, &g, &b);
            assert!(h.is_well_defined());
            assert!(random_mono(&mut r, &g, 1, 6).is_mono());
        }
    }

    #[test]
    fn unimodular_matrices_have_unit_determinant() {
        let mut r = rng(1);
        for n in 0..5 {
            let d = random_unimodular(&mut r, n, 10).determinant();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1));
        }
    }

    #[test]
    fn generated_set_diagrams_are_functors() {
        let mut r = rng(3);
        for shape in [FinCategory::discrete(2), FinCategory::parallel_pair(), FinCategory::span()] {
            for _ in 0..5 {
                let d = random_chain_diagram(&mut r, 3, &shape, 4).unwrap();
                assert!(d.validate().is_valid());
            }
        }
        for _ in 0..5 {
            assert!(random_z2_chain(&mut r, 3, 5).unwrap().validate().is_valid());
            let p = random_join_semilattice(&mut r, 3, 3);
            assert!(random_poset_functor(&mut r, &p, 3).unwrap().validate().is_valid());
        }
        assert!(random_chain_diagram(&mut r, 2, &FinCategory::chain(3), 2).is_err());
    }

    #[test]
    fn chain_pairs_are_natural() {
        let mut r = rng(11);
        for _ in 0..5 {
            for (d, e, eta) in [random_scaled_chain_pair(&mut r, 3, 1, 6), random_endomorphism_chain(&mut r, 3, 1, 6)] {
                assert!(d.validate().is_valid() && e.validate().is_valid());
                assert!(crate::abdiag::induced_map_on_colimits(&d, &e, &eta).is_ok());
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_group(&mut rng(5), 2, 6);
        let b = random_group(&mut rng(5), 2, 6);
        assert_eq!(a, b);
    }
}
