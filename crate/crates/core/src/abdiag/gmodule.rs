use std::collections::VecDeque;

use super::AbDiagram;
use crate::abgrp::{AbHom, Cokernel, FGAbGroup, IntMatrix, Kernel};
use crate::error::{Error, Result};
use crate::fincat::{group_as_category, FinGroup};
use crate::validation::{ValidationReport, Violation};

/// A finite group acting on a finitely generated abelian group.
#[derive(Clone, Debug)]
pub struct GModule {
    pub group: FinGroup,
    pub carrier: FGAbGroup,
    /// `action[g]` for every group element `g`.
    pub action: Vec<AbHom>,
}

impl GModule {
    pub fn new(group: FinGroup, carrier: FGAbGroup, action: Vec<AbHom>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::input("action", format!("expected {} homomorphisms, found {}", group.order(), action.len())));
        }
        for (g, h) in action.iter().enumerate() {
            if h.source() != &carrier || h.target() != &carrier {
                return Err(Error::input(format!("action[{g}]"), "not an endomorphism of the carrier"));
            }
        }
        let m = GModule { group, carrier, action };
        let report = m.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::input("action", v.to_string()));
        }
        Ok(m)
    }

    /// Extends an action given on some elements to the whole group along
    /// `g·h`; the extension is then checked against every product.
    pub fn from_generators(group: FinGroup, carrier: FGAbGroup, generators: &[(usize, AbHom)]) -> Result<Self> {
        let n = group.order();
        let mut action: Vec<Option<AbHom>> = vec![None; n];
        action[group.identity()] = Some(AbHom::identity(&carrier));
        for (i, (g, h)) in generators.iter().enumerate() {
            if *g >= n {
                return Err(Error::input(format!("generators[{i}]"), format!("element {g} out of range")));
            }
            if h.source() != &carrier || h.target() != &carrier {
                return Err(Error::input(format!("generators[{i}]"), "not an endomorphism of the carrier"));
            }
        }
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (s, h) in generators {
                let y = group.mul(*s, x);
                if action[y].is_none() {
                    action[y] = Some(h.compose(action[x].as_ref().expect("visited"))?);
                    queue.push_back(y);
                }
            }
        }
        let action = action
            .into_iter()
            .enumerate()
            .map(|(g, a)| a.ok_or_else(|| Error::input("generators", format!("element {g} is not reached by the given generators"))))
            .collect::<Result<Vec<_>>>()?;
        GModule::new(group, carrier, action)
    }

    pub fn trivial(group: FinGroup, carrier: FGAbGroup) -> Self {
        let action = (0..group.order()).map(|_| AbHom::identity(&carrier)).collect();
        GModule { group, carrier, action }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (g, h) in self.action.iter().enumerate() {
            if !h.is_well_defined() || !h.is_iso() {
                report.push(Violation::NotAutomorphism { element: g });
            }
        }
        if !self.action[self.group.identity()].equals(&AbHom::identity(&self.carrier)).unwrap_or(false) {
            report.push(Violation::NotAutomorphism { element: self.group.identity() });
        }
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                let gh = &self.action[self.group.mul(g, h)];
                let ok = self.action[g].compose(&self.action[h]).and_then(|x| x.equals(gh)).unwrap_or(false);
                if !ok {
                    report.push(Violation::GroupRelation { g, h });
                }
            }
        }
        report
    }

    /// The module as a diagram on the one-object category of the group.
    pub fn to_diagram(&self) -> AbDiagram {
        AbDiagram {
            base: group_as_category(&self.group),
            groups: vec![self.carrier.clone()],
            maps: self.action.clone(),
        }
    }

    /// `⊕_s A → A`, `(a_s) ↦ Σ (s·a_s − a_s)` over the group generators.
    fn difference_out(&self) -> AbHom {
        let gens = self.group.generators();
        let copies = crate::abgrp::biproduct(&vec![self.carrier.clone(); gens.len()]);
        let n = self.carrier.generators();
        let mut m = IntMatrix::zeros(n, n * gens.len());
        for (i, &s) in gens.iter().enumerate() {
            let d = self.action[s].matrix().sub(&IntMatrix::identity(n));
            m.set_block(0, i * n, &d);
        }
        AbHom::new(copies.group, self.carrier.clone(), m).expect("dimensions")
    }

    /// `A → ⊕_s A`, `a ↦ (s·a − a)_s`.
    fn difference_in(&self) -> AbHom {
        let gens = self.group.generators();
        let copies = crate::abgrp::biproduct(&vec![self.carrier.clone(); gens.len()]);
        let n = self.carrier.generators();
        let mut m = IntMatrix::zeros(n * gens.len(), n);
        for (i, &s) in gens.iter().enumerate() {
            let d = self.action[s].matrix().sub(&IntMatrix::identity(n));
            m.set_block(i * n, 0, &d);
        }
        AbHom::new(self.carrier.clone(), copies.group, m).expect("dimensions")
    }
}

/// Quotient of the carrier by `⟨s·a − a⟩` over group generators `s`.
pub fn coinvariants(module: &GModule) -> Cokernel {
    module.difference_out().cokernel()
}

/// Subgroup of elements fixed by every group generator.
pub fn invariants(module: &GModule) -> Kernel {
    module.difference_in().kernel()
}
