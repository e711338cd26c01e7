//! Set-valued diagrams on finite categories.
//!
//! Limits are computed as the compatible tuples in the product, colimits as
//! the quotient of the tagged disjoint union by the relation generated by
//! `(d, x) ~ (d', D_δ(x))`.

mod commute;
mod limits;

pub use commute::{
    colimit_of_product_comparison, commute_check, fixed_points, fixpoint_commute, FixpointReport, restricted_colimit_comparison,
    Comparison, CommuteReport,
};
pub use limits::{set_colimit, set_limit, SetColimit, SetLimit};

use crate::error::{Error, Result};
use crate::fincat::{Category, FinCategory, FinFunctor};
use crate::validation::{ValidationReport, Violation};

/// A finite set `{0, …, size−1}` with optional distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl FinSet {
    pub fn new(size: usize) -> Self {
        FinSet { size, labels: None }
    }

    pub fn labelled(labels: Vec<String>) -> Result<Self> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::input(format!("labels[{i}]"), format!("duplicate label {l:?}")));
            }
        }
        Ok(FinSet { size: labels.len(), labels: Some(labels) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }
}

/// Cone over a set diagram: `legs[c]` is the table of `vertex → D(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub vertex: FinSet,
    pub legs: Vec<Vec<usize>>,
}

/// Cocone under a set diagram: `legs[c]` is the table of `D(c) → vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocone {
    pub vertex: FinSet,
    pub legs: Vec<Vec<usize>>,
}

/// A functor from a finite category to finite sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunctor {
    pub base: FinCategory,
    pub sets: Vec<FinSet>,
    /// `maps[δ][x] = D_δ(x)`.
    pub maps: Vec<Vec<usize>>,
}

impl SetFunctor {
    /// Checks table arities; the functor laws are checked by [`SetFunctor::validate`].
    pub fn new(base: FinCategory, sets: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != base.object_count() {
            return Err(Error::input("sets", format!("expected {} sets, found {}", base.object_count(), sets.len())));
        }
        if maps.len() != base.morphism_count() {
            return Err(Error::input("maps", format!("expected {} tables, found {}", base.morphism_count(), maps.len())));
        }
        for (f, table) in maps.iter().enumerate() {
            let (d, c) = (sets[base.dom(f)].size(), sets[base.cod(f)].size());
            if table.len() != d {
                return Err(Error::input(
                    format!("maps[{}]", base.morphism_label(f)),
                    format!("table has {} entries but the domain has {d} elements", table.len()),
                ));
            }
            if let Some(x) = table.iter().position(|&y| y >= c) {
                return Err(Error::input(
                    format!("maps[{}][{x}]", base.morphism_label(f)),
                    format!("value {} outside the codomain of size {c}", table[x]),
                ));
            }
        }
        Ok(SetFunctor { base, sets, maps })
    }

    /// The constant functor at a set of the given size.
    pub fn constant(base: &FinCategory, size: usize) -> Self {
        SetFunctor {
            base: base.clone(),
            sets: vec![FinSet::new(size); base.object_count()],
            maps: vec![(0..size).collect(); base.morphism_count()],
        }
    }

    pub fn size(&self, c: usize) -> usize {
        self.sets[c].size()
    }

    pub fn apply(&self, f: usize, x: usize) -> usize {
        self.maps[f][x]
    }

    /// Identity and composite laws, checked exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for c in 0..self.base.object_count() {
            let id = &self.maps[self.base.identity(c)];
            if id.iter().enumerate().any(|(x, &y)| x != y) {
                report.push(Violation::FunctorIdentity { object: c });
            }
        }
        for (g, f, gf) in self.base.composition_triples() {
            let bad = (0..self.size(self.base.dom(f))).any(|x| self.maps[g][self.maps[f][x]] != self.maps[gf][x]);
            if bad {
                report.push(Violation::FunctorComposite { g, f });
            }
        }
        report
    }

    /// Precomposition with `F : C' → C`, giving a diagram on `C'`.
    pub fn restrict_along(&self, functor: &FinFunctor) -> Result<SetFunctor> {
        if functor.target != self.base {
            return Err(Error::input("restrict_along", "functor target is not the base of the diagram"));
        }
        Ok(SetFunctor {
            base: functor.source.clone(),
            sets: functor.on_obj.iter().map(|&c| self.sets[c].clone()).collect(),
            maps: functor.on_mor.iter().map(|&f| self.maps[f].clone()).collect(),
        })
    }

    /// Pointwise product `G × H`, pairs `(g, h)` encoded as `g·|H_c| + h`.
    pub fn product(&self, other: &SetFunctor) -> Result<SetFunctor> {
        if self.base != other.base {
            return Err(Error::input("product", "diagrams live on different bases"));
        }
        let sets = (0..self.base.object_count())
            .map(|c| FinSet::new(self.size(c) * other.size(c)))
            .collect();
        let maps = (0..self.base.morphism_count())
            .map(|f| {
                let (d, c) = (self.base.dom(f), self.base.cod(f));
                let (hd, hc) = (other.size(d), other.size(c));
                (0..self.size(d) * hd)
                    .map(|p| self.maps[f][p / hd] * hc + other.maps[f][p % hd])
                    .collect()
            })
            .collect();
        Ok(SetFunctor { base: self.base.clone(), sets, maps })
    }

    /// Assembles a diagram on `chain(n) × C` from diagrams `X₀, …, Xₙ₋₁` on
    /// `C` and transitions `transitions[i][c] : Xᵢ(c) → Xᵢ₊₁(c)`, laid out as
    /// in [`FinCategory::product`].
    pub fn from_chain(diagrams: &[SetFunctor], transitions: &[Vec<Vec<usize>>]) -> Result<SetFunctor> {
        let n = diagrams.len();
        if n == 0 {
            return Err(Error::input("from_chain", "need at least one diagram"));
        }
        if transitions.len() + 1 != n {
            return Err(Error::input("from_chain", format!("expected {} transitions, found {}", n - 1, transitions.len())));
        }
        let base = &diagrams[0].base;
        if diagrams.iter().any(|d| &d.base != base) {
            return Err(Error::input("from_chain", "diagrams live on different bases"));
        }
        let chain = FinCategory::chain(n);
        let product = FinCategory::product(&chain, base);
        let (k, m) = (base.object_count(), base.morphism_count());
        let mut sets = Vec::with_capacity(n * k);
        for d in diagrams {
            sets.extend(d.sets.iter().cloned());
        }
        let mut maps = Vec::with_capacity(chain.morphism_count() * m);
        for a in 0..chain.morphism_count() {
            let (i, j) = (chain.dom(a), chain.cod(a));
            for delta in 0..m {
                let c = base.dom(delta);
                let table = (0..diagrams[i].size(c))
                    .map(|x| {
                        let mut y = x;
                        for t in &transitions[i..j] {
                            y = t[c][y];
                        }
                        diagrams[j].maps[delta][y]
                    })
                    .collect();
                maps.push(table);
            }
        }
        SetFunctor::new(product, sets, maps)
    }
}
