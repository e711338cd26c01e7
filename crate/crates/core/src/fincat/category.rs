use std::collections::HashMap;

use super::{generated_closure, Category};
use crate::error::{Error, Result};
use crate::validation::{ValidationReport, Violation};

/// A fully enumerated finite category.
///
/// Composition is an explicit table keyed by `(g, f)` meaning `g ∘ f`.
/// Construction only checks that indices are in range; the category laws
/// are checked by [`validate_category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    object_labels: Vec<String>,
    morphism_labels: Vec<String>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    identities: Vec<usize>,
    composition: HashMap<(usize, usize), usize>,
    generators: Option<Vec<usize>>,
    hom: Vec<Vec<usize>>,
}

impl FinCategory {
    /// Builds a category from raw tables.
    ///
    /// `morphisms` lists `(label, dom, cod)`; `composition` lists triples
    /// `(g, f, g∘f)`. Fails with an input error naming the offending
    /// coordinate if an index is out of range or a composite is given twice
    /// with different values.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        composition: impl IntoIterator<Item = (usize, usize, usize)>,
        generators: Option<Vec<usize>>,
    ) -> Result<Self> {
        let k = objects.len();
        let m = morphisms.len();
        let mut morphism_labels = Vec::with_capacity(m);
        let mut dom = Vec::with_capacity(m);
        let mut cod = Vec::with_capacity(m);
        for (i, (label, d, c)) in morphisms.into_iter().enumerate() {
            if d >= k {
                return Err(Error::input(format!("morphisms[{i}].dom"), format!("object index {d} out of range 0..{k}")));
            }
            if c >= k {
                return Err(Error::input(format!("morphisms[{i}].cod"), format!("object index {c} out of range 0..{k}")));
            }
            morphism_labels.push(label);
            dom.push(d);
            cod.push(c);
        }
        if identities.len() != k {
            return Err(Error::input("identities", format!("expected {k} entries, found {}", identities.len())));
        }
        for (c, &id) in identities.iter().enumerate() {
            if id >= m {
                return Err(Error::input(format!("identities[{c}]"), format!("morphism index {id} out of range 0..{m}")));
            }
        }
        let mut table = HashMap::new();
        for (g, f, gf) in composition {
            for (name, v) in [("g", g), ("f", f), ("g∘f", gf)] {
                if v >= m {
                    return Err(Error::input(format!("composition[{g},{f}].{name}"), format!("morphism index {v} out of range 0..{m}")));
                }
            }
            if let Some(prev) = table.insert((g, f), gf) {
                if prev != gf {
                    return Err(Error::input(format!("composition[{g},{f}]"), format!("defined twice, as {prev} and {gf}")));
                }
            }
        }
        if let Some(gens) = &generators {
            for (i, &g) in gens.iter().enumerate() {
                if g >= m {
                    return Err(Error::input(format!("generators[{i}]"), format!("morphism index {g} out of range 0..{m}")));
                }
            }
        }
        let mut hom = vec![Vec::new(); k * k];
        for f in 0..m {
            hom[dom[f] * k + cod[f]].push(f);
        }
        Ok(FinCategory {
            object_labels: objects,
            morphism_labels,
            dom,
            cod,
            identities,
            composition: table,
            generators,
            hom,
        })
    }

    /// Builds a category from a composition function evaluated on every
    /// composable pair. Used by the structured constructors below, whose laws
    /// hold by construction.
    pub(crate) fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        generators: Option<Vec<usize>>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let k = objects.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (f, (_, d, _)) in morphisms.iter().enumerate() {
            out[*d].push(f);
        }
        let mut triples = Vec::new();
        for (f, (_, _, c)) in morphisms.iter().enumerate() {
            for &g in &out[*c] {
                triples.push((g, f, compose(g, f)));
            }
        }
        FinCategory::from_parts(objects, morphisms, identities, triples, generators)
            .expect("structured constructor produced out-of-range data")
    }

    pub fn object_label(&self, c: usize) -> &str {
        &self.object_labels[c]
    }

    pub fn morphism_label(&self, f: usize) -> &str {
        &self.morphism_labels[f]
    }

    pub fn object_labels(&self) -> &[String] {
        &self.object_labels
    }

    pub fn morphism_labels(&self) -> &[String] {
        &self.morphism_labels
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.object_labels.iter().position(|l| l == label)
    }

    pub fn morphism_index(&self, label: &str) -> Option<usize> {
        self.morphism_labels.iter().position(|l| l == label)
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    /// Composition triples `(g, f, g∘f)` sorted by `(g, f)`.
    pub fn composition_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut t: Vec<_> = self.composition.iter().map(|(&(g, f), &gf)| (g, f, gf)).collect();
        t.sort_unstable();
        t
    }

    pub fn with_generators(mut self, generators: Option<Vec<usize>>) -> Self {
        self.generators = generators;
        self
    }

    // ---- standard shapes ----

    pub fn empty() -> Self {
        FinCategory::from_fn(vec![], vec![], vec![], None, |_, _| unreachable!())
    }

    /// The category with one object and only its identity.
    pub fn terminal() -> Self {
        FinCategory::discrete(1)
    }

    /// `n` objects and only identities.
    pub fn discrete(n: usize) -> Self {
        let objects = (0..n).map(|i| i.to_string()).collect();
        let morphisms = (0..n).map(|i| (format!("id_{i}"), i, i)).collect();
        FinCategory::from_fn(objects, morphisms, (0..n).collect(), Some(vec![]), |g, _| g)
    }

    /// The poset `0 ≤ 1 ≤ … ≤ n−1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        FinCategory::poset((0..n).map(|i| i.to_string()).collect(), &covers)
            .expect("chain covers are acyclic")
    }

    /// The poset generated by the order relations `covers` (pairs `a ≤ b`).
    ///
    /// Morphisms are the pairs `a ≤ b` of the reflexive-transitive closure,
    /// enumerated lexicographically; the covers are the generating family.
    /// Fails if the closure is not antisymmetric.
    pub fn poset(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (i, &(a, b)) in covers.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::input(format!("covers[{i}]"), format!("object index out of range 0..{n}")));
            }
            leq[a][b] = true;
        }
        for m in 0..n {
            for a in 0..n {
                if leq[a][m] {
                    for b in 0..n {
                        if leq[m][b] {
                            leq[a][b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    return Err(Error::input("covers", format!("order relation has a cycle through {a} and {b}")));
                }
            }
        }
        let mut index = vec![vec![usize::MAX; n]; n];
        let mut morphisms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if leq[a][b] {
                    index[a][b] = morphisms.len();
                    morphisms.push((format!("{}<={}", labels[a], labels[b]), a, b));
                }
            }
        }
        let identities = (0..n).map(|a| index[a][a]).collect();
        let mut generators: Vec<usize> = covers
            .iter()
            .filter(|(a, b)| a != b)
            .map(|&(a, b)| index[a][b])
            .collect();
        generators.sort_unstable();
        generators.dedup();
        let dom: Vec<usize> = morphisms.iter().map(|m| m.1).collect();
        let cod: Vec<usize> = morphisms.iter().map(|m| m.2).collect();
        Ok(FinCategory::from_fn(labels, morphisms, identities, Some(generators), |g, f| {
            index[dom[f]][cod[g]]
        }))
    }

    /// Two parallel arrows `f, g : a → b`.
    pub fn parallel_pair() -> Self {
        FinCategory::free_on_arrows(&["a", "b"], &[("f", 0, 1), ("g", 0, 1)])
    }

    /// `l ← c → r` with objects ordered `c, l, r`.
    pub fn span() -> Self {
        FinCategory::free_on_arrows(&["c", "l", "r"], &[("p", 0, 1), ("q", 0, 2)])
    }

    /// `l → c ← r` with objects ordered `l, r, c`.
    pub fn cospan() -> Self {
        FinCategory::free_on_arrows(&["l", "r", "c"], &[("p", 0, 2), ("q", 1, 2)])
    }

    /// Free category on arrows with no composable non-identity pairs.
    fn free_on_arrows(objects: &[&str], arrows: &[(&str, usize, usize)]) -> Self {
        let k = objects.len();
        let mut morphisms: Vec<(String, usize, usize)> =
            objects.iter().enumerate().map(|(i, o)| (format!("id_{o}"), i, i)).collect();
        for &(name, d, c) in arrows {
            assert!(d != c, "free_on_arrows takes non-loop arrows");
            morphisms.push((name.to_string(), d, c));
        }
        let dom: Vec<usize> = morphisms.iter().map(|m| m.1).collect();
        let gens = (k..morphisms.len()).collect();
        FinCategory::from_fn(
            objects.iter().map(|s| s.to_string()).collect(),
            morphisms,
            (0..k).collect(),
            Some(gens),
            move |g, f| {
                if g < k {
                    f
                } else if f < k {
                    g
                } else {
                    unreachable!("no composable pair of arrows, dom {}", dom[g])
                }
            },
        )
    }

    /// Product category. Object `(i, j)` has index `i·|D| + j`, morphism
    /// `(a, b)` has index `a·m_D + b`; composition is componentwise.
    pub fn product(c: &FinCategory, d: &FinCategory) -> FinCategory {
        let (kc, kd) = (c.object_count(), d.object_count());
        let (mc, md) = (c.morphism_count(), d.morphism_count());
        let mut objects = Vec::with_capacity(kc * kd);
        for i in 0..kc {
            for j in 0..kd {
                objects.push(format!("({},{})", c.object_labels[i], d.object_labels[j]));
            }
        }
        let mut morphisms = Vec::with_capacity(mc * md);
        for a in 0..mc {
            for b in 0..md {
                morphisms.push((
                    format!("({},{})", c.morphism_labels[a], d.morphism_labels[b]),
                    c.dom[a] * kd + d.dom[b],
                    c.cod[a] * kd + d.cod[b],
                ));
            }
        }
        let identities = (0..kc)
            .flat_map(|i| (0..kd).map(move |j| (i, j)))
            .map(|(i, j)| c.identities[i] * md + d.identities[j])
            .collect();
        let mut generators = Vec::new();
        for a in c.spanning_morphisms() {
            for j in 0..kd {
                generators.push(a * md + d.identities[j]);
            }
        }
        for b in d.spanning_morphisms() {
            for i in 0..kc {
                generators.push(c.identities[i] * md + b);
            }
        }
        generators.sort_unstable();
        let mut triples = Vec::new();
        for (&(g1, f1), &h1) in &c.composition {
            for (&(g2, f2), &h2) in &d.composition {
                triples.push((g1 * md + g2, f1 * md + f2, h1 * md + h2));
            }
        }
        FinCategory::from_parts(objects, morphisms, identities, triples, Some(generators))
            .expect("product of in-range tables is in range")
    }

    /// The full subcategory on `objects` (kept in the given order), with the
    /// morphism indices of the original category for each new morphism.
    pub fn full_subcategory(&self, objects: &[usize]) -> (FinCategory, Vec<usize>) {
        let mut position = vec![usize::MAX; self.object_count()];
        for (i, &o) in objects.iter().enumerate() {
            position[o] = i;
        }
        let mut kept = Vec::new();
        for f in 0..self.morphism_count() {
            if position[self.dom[f]] != usize::MAX && position[self.cod[f]] != usize::MAX {
                kept.push(f);
            }
        }
        let mut new_index = HashMap::new();
        for (i, &f) in kept.iter().enumerate() {
            new_index.insert(f, i);
        }
        let morphisms = kept
            .iter()
            .map(|&f| (self.morphism_labels[f].clone(), position[self.dom[f]], position[self.cod[f]]))
            .collect();
        let identities = objects.iter().map(|&o| new_index[&self.identities[o]]).collect();
        let labels = objects.iter().map(|&o| self.object_labels[o].clone()).collect();
        let sub = FinCategory::from_fn(labels, morphisms, identities, None, |g, f| {
            let gf = self.composition[&(kept[g], kept[f])];
            new_index[&gf]
        });
        (sub, kept)
    }
}

impl Category for FinCategory {
    fn object_count(&self) -> usize {
        self.object_labels.len()
    }

    fn morphism_count(&self) -> usize {
        self.morphism_labels.len()
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
        self.composition.get(&(g, f)).copied()
    }

    fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a * self.object_count() + b]
    }

    fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }
}

/// Checks every category law by exhaustive enumeration.
pub fn validate_category(cat: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::default();
    let k = cat.object_count();
    let m = cat.morphism_count();
    for c in 0..k {
        let id = cat.identities[c];
        if cat.dom[id] != c || cat.cod[id] != c {
            report.push(Violation::IdentityEndpoints { object: c });
        }
    }
    for (&(g, f), &gf) in &cat.composition {
        if cat.cod[f] != cat.dom[g] {
            report.push(Violation::SpuriousComposite { g, f });
        } else if cat.dom[gf] != cat.dom[f] || cat.cod[gf] != cat.cod[g] {
            report.push(Violation::CompositeEndpoints { g, f });
        }
    }
    let out: Vec<Vec<usize>> = (0..k).map(|c| cat.out_morphisms(c)).collect();
    for f in 0..m {
        for &g in &out[cat.cod[f]] {
            if cat.compose(g, f).is_none() {
                report.push(Violation::MissingComposite { g, f });
            }
        }
    }
    for f in 0..m {
        if cat.compose(cat.identities[cat.cod[f]], f) != Some(f) {
            report.push(Violation::LeftIdentity { morphism: f });
        }
        if cat.compose(f, cat.identities[cat.dom[f]]) != Some(f) {
            report.push(Violation::RightIdentity { morphism: f });
        }
    }
    for f in 0..m {
        for &g in &out[cat.cod[f]] {
            let Some(gf) = cat.compose(g, f) else { continue };
            for &h in &out[cat.cod[g]] {
                let (Some(hg), Some(h_gf)) = (cat.compose(h, g), cat.compose(h, gf)) else { continue };
                if cat.compose(hg, f) != Some(h_gf) {
                    report.push(Violation::Associativity { h, g, f });
                }
            }
        }
    }
    if let Some(gens) = &cat.generators {
        let reached = generated_closure(cat, gens);
        for (f, ok) in reached.into_iter().enumerate() {
            if !ok {
                report.push(Violation::NotGenerated { morphism: f });
            }
        }
    }
    report.violations.sort();
    report
}
