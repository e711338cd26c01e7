//! The category `HX` of finite words over a finite set `X`, truncated at an
//! arity cap, and the expansion of an `X`-indexed family of groups into an
//! `HX`-shaped diagram.
//!
//! An object is a word `x : n → X`; a morphism `(n, x) → (m, y)` is a
//! function `f : n → m` with `x = y ∘ f`. Composition is computed on demand,
//! so enumerating `HX` at moderate caps needs no composition table.

mod bounded;
mod expand;

pub use bounded::{bounded_filtered_check, bounded_sifted_check, BoundedFilteredReport, BoundedSiftedReport};
pub use expand::{
    cap_stability, harting_compare, harting_expand, harting_induced, CapStability, HartingInduced, IsoReport,
};

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fincat::{Category, FinCategory, FinFunctor};
use crate::setdiag::FinSet;

/// Default bound on the number of morphisms enumerated by [`hx_category`].
pub const DEFAULT_BUDGET: usize = 250_000;

/// Bound on composable pairs when materializing a table-backed category.
pub const TABLE_BUDGET: usize = 2_000_000;

const MAX_CAP: usize = 12;

/// A word over `X`; its arity is the length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HxObject {
    pub word: Vec<usize>,
}

impl HxObject {
    pub fn new(word: Vec<usize>) -> Self {
        HxObject { word }
    }

    pub fn arity(&self) -> usize {
        self.word.len()
    }

    pub fn display(&self, x: &FinSet) -> String {
        let parts: Vec<String> = self.word.iter().map(|&i| x.label(i)).collect();
        format!("({})", parts.join(","))
    }
}

/// `HX` truncated at arity `cap`, fully enumerated.
#[derive(Clone, Debug)]
pub struct HxCategory {
    x: FinSet,
    cap: usize,
    words: Vec<HxObject>,
    word_index: HashMap<Vec<usize>, usize>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    maps: Vec<Vec<usize>>,
    lookup: HashMap<(usize, usize, u64), usize>,
    hom: Vec<Vec<usize>>,
    identities: Vec<usize>,
    generators: Vec<usize>,
}

pub fn hx_category(x: &FinSet, cap: usize) -> Result<HxCategory> {
    HxCategory::with_budget(x, cap, DEFAULT_BUDGET)
}

impl HxCategory {
    pub fn with_budget(x: &FinSet, cap: usize, budget: usize) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Precondition("arity cap must be at least 1".into()));
        }
        if cap > MAX_CAP {
            return Err(Error::Resource(format!("arity cap {cap} exceeds the supported maximum {MAX_CAP}")));
        }
        let mut words = Vec::new();
        for n in 0..=cap {
            let mut w = vec![0; n];
            if n > 0 && x.is_empty() {
                continue;
            }
            loop {
                words.push(HxObject::new(w.clone()));
                // Odometer, least significant digit last: lexicographic order.
                let mut i = n;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    w[i] += 1;
                    if w[i] < x.size() {
                        break;
                    }
                    w[i] = 0;
                }
                if w.iter().all(|&d| d == 0) {
                    break;
                }
            }
        }
        let k = words.len();
        let fibre_sizes: Vec<Vec<usize>> = words
            .iter()
            .map(|w| (0..x.size()).map(|s| w.word.iter().filter(|&&t| t == s).count()).collect())
            .collect();
        let mut total: usize = 0;
        for a in &words {
            for sizes in &fibre_sizes {
                let count = a.word.iter().try_fold(1usize, |acc, &s| acc.checked_mul(sizes[s]));
                total = total.saturating_add(count.unwrap_or(usize::MAX));
                if total > budget {
                    return Err(Error::Resource(format!(
                        "HX over {} letters at cap {cap} needs more than {budget} morphisms",
                        x.size()
                    )));
                }
            }
        }

        let word_index = words.iter().enumerate().map(|(i, w)| (w.word.clone(), i)).collect();
        let mut cat = HxCategory {
            x: x.clone(),
            cap,
            words,
            word_index,
            dom: Vec::with_capacity(total),
            cod: Vec::with_capacity(total),
            maps: Vec::with_capacity(total),
            lookup: HashMap::with_capacity(total),
            hom: vec![Vec::new(); k * k],
            identities: vec![0; k],
            generators: Vec::new(),
        };
        for a in 0..k {
            for b in 0..k {
                let source = cat.words[a].word.clone();
                let target = cat.words[b].word.clone();
                let fibres: Vec<Vec<usize>> =
                    source.iter().map(|&s| (0..target.len()).filter(|&j| target[j] == s).collect()).collect();
                if fibres.iter().any(Vec::is_empty) {
                    continue;
                }
                let mut digit = vec![0; source.len()];
                loop {
                    let f: Vec<usize> = digit.iter().enumerate().map(|(i, &d)| fibres[i][d]).collect();
                    cat.push_morphism(a, b, f);
                    let mut i = source.len();
                    loop {
                        if i == 0 {
                            break;
                        }
                        i -= 1;
                        digit[i] += 1;
                        if digit[i] < fibres[i].len() {
                            break;
                        }
                        digit[i] = 0;
                    }
                    if digit.iter().all(|&d| d == 0) {
                        break;
                    }
                }
            }
        }
        for a in 0..k {
            let id: Vec<usize> = (0..cat.words[a].arity()).collect();
            cat.identities[a] = cat.find(a, a, &id).expect("identity enumerated");
        }
        cat.generators = cat.elementary_maps();
        Ok(cat)
    }

    fn push_morphism(&mut self, a: usize, b: usize, f: Vec<usize>) {
        let idx = self.dom.len();
        self.lookup.insert((a, b, self.code(&f)), idx);
        self.hom[a * self.words.len() + b].push(idx);
        self.dom.push(a);
        self.cod.push(b);
        self.maps.push(f);
    }

    fn code(&self, f: &[usize]) -> u64 {
        f.iter().rev().fold(0u64, |acc, &v| acc * (self.cap as u64 + 1) + v as u64)
    }

    /// Faces, degeneracies and adjacent transpositions.
    fn elementary_maps(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        for y in &self.words {
            let m = y.arity();
            for j in 0..m {
                // Face: skip position j of the target.
                let mut x = y.word.clone();
                x.remove(j);
                let f: Vec<usize> = (0..m - 1).map(|i| if i < j { i } else { i + 1 }).collect();
                gens.extend(self.find_words(&x, &y.word, &f));
                // Degeneracy: position j of the target is hit twice.
                if m < self.cap {
                    let mut x = y.word.clone();
                    x.insert(j, y.word[j]);
                    let f: Vec<usize> = (0..=m).map(|i| if i <= j { i } else { i - 1 }).collect();
                    gens.extend(self.find_words(&x, &y.word, &f));
                }
                if j + 1 < m {
                    let mut x = y.word.clone();
                    x.swap(j, j + 1);
                    let mut f: Vec<usize> = (0..m).collect();
                    f.swap(j, j + 1);
                    gens.extend(self.find_words(&x, &y.word, &f));
                }
            }
        }
        gens.sort_unstable();
        gens.dedup();
        gens.retain(|&g| !self.is_identity(g));
        gens
    }

    fn find_words(&self, source: &[usize], target: &[usize], f: &[usize]) -> Option<usize> {
        let a = *self.word_index.get(source)?;
        let b = *self.word_index.get(target)?;
        self.find(a, b, f)
    }

    /// The morphism `a → b` with underlying function `f`, if it exists.
    pub fn find(&self, a: usize, b: usize, f: &[usize]) -> Option<usize> {
        self.lookup.get(&(a, b, self.code(f))).copied()
    }

    pub fn letters(&self) -> &FinSet {
        &self.x
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn object(&self, c: usize) -> &HxObject {
        &self.words[c]
    }

    pub fn objects(&self) -> &[HxObject] {
        &self.words
    }

    pub fn object_index(&self, object: &HxObject) -> Option<usize> {
        self.word_index.get(&object.word).copied()
    }

    /// Underlying function of a morphism.
    pub fn map(&self, f: usize) -> &[usize] {
        &self.maps[f]
    }

    pub fn object_label(&self, c: usize) -> String {
        self.words[c].display(&self.x)
    }

    pub fn morphism_label(&self, f: usize) -> String {
        let m: Vec<String> = self.maps[f].iter().map(ToString::to_string).collect();
        format!("{}→{}[{}]", self.object_label(self.dom[f]), self.object_label(self.cod[f]), m.join(","))
    }

    /// Index of the arity-one object `(x)`.
    pub fn singleton(&self, x: usize) -> usize {
        self.word_index[&vec![x]]
    }

    /// Concatenation `u + v` with its two injections.
    pub fn coproduct(&self, u: usize, v: usize) -> Result<(usize, usize, usize)> {
        let (n, m) = (self.words[u].arity(), self.words[v].arity());
        if n + m > self.cap {
            return Err(Error::Truncation { cap: self.cap, needed: n + m });
        }
        let mut w = self.words[u].word.clone();
        w.extend_from_slice(&self.words[v].word);
        let s = self.word_index[&w];
        let left: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..n + m).collect();
        Ok((s, self.find(u, s, &left).expect("left injection"), self.find(v, s, &right).expect("right injection")))
    }

    /// A morphism `q` with `q ∘ f = q ∘ g`: the quotient of the target by
    /// the equivalence relation generated by `f(i) ~ g(i)`.
    pub fn coequalize(&self, f: usize, g: usize) -> Result<usize> {
        if self.dom[f] != self.dom[g] || self.cod[f] != self.cod[g] {
            return Err(Error::input("coequalize", "morphisms are not parallel"));
        }
        let b = self.cod[f];
        let m = self.words[b].arity();
        let mut uf = crate::union_find::UnionFind::new(m);
        for (&i, &j) in self.maps[f].iter().zip(&self.maps[g]) {
            uf.union(i, j);
        }
        let (count, labels) = uf.classes();
        let mut word = vec![0; count];
        for (j, &c) in labels.iter().enumerate() {
            word[c] = self.words[b].word[j];
        }
        let target = self.word_index[&word];
        Ok(self.find(b, target, &labels).expect("quotient map is a morphism"))
    }

    /// Composable pairs, the size of a composition table.
    pub fn composable_pairs(&self) -> usize {
        let k = self.words.len();
        (0..k)
            .map(|b| {
                let into: usize = (0..k).map(|a| self.hom[a * k + b].len()).sum();
                let out: usize = (0..k).map(|c| self.hom[b * k + c].len()).sum();
                into * out
            })
            .sum()
    }

    /// The same category as an explicit table.
    pub fn to_fin_category(&self) -> Result<FinCategory> {
        let pairs = self.composable_pairs();
        if pairs > TABLE_BUDGET {
            return Err(Error::Resource(format!("composition table would have {pairs} entries (budget {TABLE_BUDGET})")));
        }
        let objects = (0..self.words.len()).map(|c| self.object_label(c)).collect();
        let morphisms = (0..self.dom.len()).map(|f| (self.morphism_label(f), self.dom[f], self.cod[f])).collect();
        Ok(FinCategory::from_fn(
            objects,
            morphisms,
            self.identities.clone(),
            Some(self.generators.clone()),
            |g, f| self.compose(g, f).expect("composable"),
        ))
    }
}

impl Category for HxCategory {
    fn object_count(&self) -> usize {
        self.words.len()
    }

    fn morphism_count(&self) -> usize {
        self.dom.len()
    }

    fn dom(&self, f: usize) -> usize {
        self.dom[f]
    }

    fn cod(&self, f: usize) -> usize {
        self.cod[f]
    }

    fn identity(&self, c: usize) -> usize {
        self.identities[c]
    }

    fn compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.cod[f] != self.dom[g] {
            return None;
        }
        let gf: Vec<usize> = self.maps[f].iter().map(|&i| self.maps[g][i]).collect();
        self.find(self.dom[f], self.cod[g], &gf)
    }

    fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a * self.words.len() + b]
    }

    fn generators(&self) -> Option<&[usize]> {
        Some(&self.generators)
    }
}

impl fmt::Display for HxCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HX(|X|={}, cap={}): {} objects, {} morphisms", self.x.size(), self.cap, self.words.len(), self.dom.len())
    }
}

/// `x ↦ (x)` from the discrete category on `X`; identities only.
pub fn h_embedding(h: &HxCategory) -> Result<FinFunctor> {
    let target = h.to_fin_category()?;
    let n = h.letters().size();
    let on_obj: Vec<usize> = (0..n).map(|x| h.singleton(x)).collect();
    let on_mor = on_obj.iter().map(|&c| h.identity(c)).collect();
    FinFunctor::new(FinCategory::discrete(n), target, on_obj, on_mor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{generated_closure, validate_category};

    fn letters(n: usize) -> FinSet {
        FinSet::labelled((0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()).unwrap()
    }

    /// Brute-force hom count: all functions `n → m` filtered by `x = y∘f`.
    fn hom_oracle(x: &[usize], y: &[usize]) -> usize {
        let (n, m) = (x.len(), y.len());
        if m == 0 {
            return usize::from(n == 0);
        }
        (0..m.pow(n as u32))
            .filter(|&code| {
                let mut c = code;
                (0..n).all(|i| {
                    let j = c % m;
                    c /= m;
                    y[j] == x[i]
                })
            })
            .count()
    }

    #[test]
    fn object_counts() {
        let h = hx_category(&letters(1), 2).unwrap();
        let labels: Vec<String> = (0..3).map(|c| h.object_label(c)).collect();
        assert_eq!(labels, vec!["()", "(a)", "(a,a)"]);
        assert_eq!(hx_category(&letters(2), 2).unwrap().object_count(), 7);
        assert_eq!(hx_category(&letters(3), 3).unwrap().object_count(), 40);
    }

    #[test]
    fn hom_sets_match_oracle() {
        let h = hx_category(&letters(2), 3).unwrap();
        for a in 0..h.object_count() {
            for b in 0..h.object_count() {
                assert_eq!(h.hom(a, b).len(), hom_oracle(&h.object(a).word, &h.object(b).word));
            }
        }
        let a = h.object_index(&HxObject::new(vec![0])).unwrap();
        let ab = h.object_index(&HxObject::new(vec![0, 1])).unwrap();
        assert_eq!(h.hom(a, ab).len(), 1);
        assert_eq!(h.map(h.hom(a, ab)[0]), &[0]);
    }

    #[test]
    fn table_is_a_category_generated_by_elementary_maps() {
        for (n, cap) in [(1, 3), (2, 2), (2, 3)] {
            let h = hx_category(&letters(n), cap).unwrap();
            let t = h.to_fin_category().unwrap();
            assert!(validate_category(&t).is_valid());
            assert!(generated_closure(&t, h.generators().unwrap()).iter().all(|&b| b));
        }
    }

    #[test]
    fn coproducts() {
        let h = hx_category(&letters(2), 2).unwrap();
        let (a, b) = (h.singleton(0), h.singleton(1));
        let (s, l, r) = h.coproduct(a, b).unwrap();
        assert_eq!(h.object_label(s), "(a,b)");
        assert_eq!((h.map(l), h.map(r)), (&[0][..], &[1][..]));
        let unit = h.object_index(&HxObject::new(vec![])).unwrap();
        assert_eq!(h.coproduct(unit, a).unwrap().0, a);
        assert_eq!(h.object_label(h.coproduct(a, a).unwrap().0), "(a,a)");
        let (aa, _, _) = h.coproduct(a, a).unwrap();
        assert!(matches!(h.coproduct(aa, a), Err(Error::Truncation { cap: 2, needed: 3 })));
    }

    #[test]
    fn coproduct_universal_property() {
        let h = hx_category(&letters(2), 3).unwrap();
        let (a, b) = (h.singleton(0), h.singleton(1));
        let (s, l, r) = h.coproduct(a, b).unwrap();
        for w in 0..h.object_count() {
            for &p in h.hom(a, w) {
                for &q in h.hom(b, w) {
                    let factoring: Vec<usize> = h
                        .hom(s, w)
                        .iter()
                        .copied()
                        .filter(|&u| h.compose(u, l) == Some(p) && h.compose(u, r) == Some(q))
                        .collect();
                    assert_eq!(factoring.len(), 1);
                }
            }
        }
    }

    #[test]
    fn coequalizer_construction() {
        let h = hx_category(&letters(1), 3).unwrap();
        let a = h.singleton(0);
        let aa = h.coproduct(a, a).unwrap().0;
        let (f, g) = (h.hom(a, aa)[0], h.hom(a, aa)[1]);
        let q = h.coequalize(f, g).unwrap();
        assert_eq!(h.compose(q, f), h.compose(q, g));
        assert_eq!(h.cod(q), a);
    }

    #[test]
    fn budget_and_cap_errors() {
        assert!(matches!(HxCategory::with_budget(&letters(3), 4, 100), Err(Error::Resource(_))));
        assert!(matches!(hx_category(&letters(1), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn embedding_hits_singletons() {
        let h = hx_category(&letters(2), 2).unwrap();
        let e = h_embedding(&h).unwrap();
        assert!(e.validate().is_valid());
        assert_eq!(e.on_obj.iter().map(|&c| h.object_label(c)).collect::<Vec<_>>(), vec!["(a)", "(b)"]);
        let one = hx_category(&letters(1), 2).unwrap();
        assert_eq!(h_embedding(&one).unwrap().on_obj, vec![1]);
    }
}
