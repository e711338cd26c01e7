use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::Lattice;
use super::{AbHom, IntMatrix};

/// Isomorphism invariant of a finitely generated abelian group: free rank
/// plus invariant factors `d₁ | d₂ | ⋯`, each at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CanonicalForm {
    pub free_rank: usize,
    pub factors: Vec<BigInt>,
}

impl CanonicalForm {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }

    /// `rank=R factors=[d1,d2]`, for line-oriented output.
    pub fn machine(&self) -> String {
        let f: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        format!("rank={} factors=[{}]", self.free_rank, f.join(","))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|d| format!("ℤ/{d}")).collect();
        parts.extend(std::iter::repeat_n("ℤ".to_string(), self.free_rank));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

struct Inner {
    relations: IntMatrix,
    lattice: Lattice,
    /// Diagonal value per generator slot after the change of basis; 0 = free.
    slot_orders: Vec<BigInt>,
    /// Slots with order ≠ 1, torsion first then free.
    nontrivial: Vec<usize>,
    canonical: CanonicalForm,
}

/// A finitely generated abelian group `ℤ^g / R·ℤ^r`, relations as columns.
///
/// Cheap to clone; the Smith form of the relations is computed once.
#[derive(Clone)]
pub struct FGAbGroup {
    inner: Arc<Inner>,
}

impl FGAbGroup {
    pub fn from_presentation(relations: IntMatrix) -> Self {
        let g = relations.rows();
        let lattice = Lattice::new(relations.clone());
        let diag = lattice.snf.diagonal();
        let slot_orders: Vec<BigInt> = (0..g).map(|i| diag.get(i).cloned().unwrap_or_default()).collect();
        let nontrivial: Vec<usize> = (0..g).filter(|&i| !slot_orders[i].is_one()).collect();
        let factors: Vec<BigInt> = nontrivial.iter().map(|&i| slot_orders[i].clone()).filter(|d| !d.is_zero()).collect();
        let canonical = CanonicalForm { free_rank: nontrivial.len() - factors.len(), factors };
        FGAbGroup { inner: Arc::new(Inner { relations, lattice, slot_orders, nontrivial, canonical }) }
    }

    /// `g` generators, no relations.
    pub fn free(g: usize) -> Self {
        FGAbGroup::from_presentation(IntMatrix::zeros(g, 0))
    }

    pub fn zero() -> Self {
        FGAbGroup::free(0)
    }

    /// `ℤ/n` on one generator; `n = 0` gives `ℤ`.
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return FGAbGroup::free(1);
        }
        FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![n]]))
    }

    /// The standard presentation of a canonical form: torsion generators
    /// first, then free ones.
    pub fn from_canonical_form(form: &CanonicalForm) -> Self {
        let k = form.factors.len();
        let mut r = IntMatrix::zeros(k + form.free_rank, k);
        for (i, d) in form.factors.iter().enumerate() {
            r[(i, i)] = d.clone();
        }
        FGAbGroup::from_presentation(r)
    }

    pub fn generators(&self) -> usize {
        self.inner.relations.rows()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.inner.relations
    }

    pub fn canonical_form(&self) -> &CanonicalForm {
        &self.inner.canonical
    }

    pub fn free_rank(&self) -> usize {
        self.inner.canonical.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.inner.canonical.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.canonical.is_trivial()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Group order, if finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.invariant_factors().iter().product())
    }

    /// Whether `v` (coordinates in the generators) represents zero.
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        self.inner.lattice.contains(v)
    }

    /// Relation coefficients `x` with `R · x = v`, if `v` is zero in the group.
    pub fn relation_coefficients(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        self.inner.lattice.solve(v)
    }

    /// Normal form of an element in canonical coordinates. Two vectors name
    /// the same element iff their normal forms agree.
    pub fn normal_form(&self, v: &[BigInt]) -> Vec<BigInt> {
        let w = self.inner.lattice.snf.u.mul_vec(v);
        self.inner
            .nontrivial
            .iter()
            .map(|&i| {
                let d = &self.inner.slot_orders[i];
                if d.is_zero() {
                    w[i].clone()
                } else {
                    w[i].mod_floor(d)
                }
            })
            .collect()
    }

    pub fn elements_equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_element(&diff)
    }

    /// The standard group with the same canonical form.
    pub fn canonical_group(&self) -> FGAbGroup {
        FGAbGroup::from_canonical_form(&self.inner.canonical)
    }

    /// Isomorphism onto [`canonical_group`](Self::canonical_group).
    pub fn to_canonical(&self) -> AbHom {
        let m = self.inner.lattice.snf.u.select_rows(&self.inner.nontrivial);
        AbHom::raw(self.clone(), self.canonical_group(), m)
    }

    /// Inverse of [`to_canonical`](Self::to_canonical).
    pub fn from_canonical(&self) -> AbHom {
        let m = self.inner.lattice.snf.u_inv.select_columns(&self.inner.nontrivial);
        AbHom::raw(self.canonical_group(), self.clone(), m)
    }

    /// Enumerates all elements in normal-form coordinates. `None` when the
    /// group is infinite or larger than `limit`.
    pub fn enumerate_elements(&self, limit: usize) -> Option<Vec<Vec<BigInt>>> {
        let order = self.order()?;
        if order > BigInt::from(limit) {
            return None;
        }
        let from = self.from_canonical();
        let factors = self.invariant_factors();
        let mut out = Vec::new();
        let mut digits = vec![BigInt::zero(); factors.len()];
        loop {
            out.push(from.apply(&digits));
            let mut k = 0;
            loop {
                if k == factors.len() {
                    return Some(out);
                }
                digits[k] += 1;
                if digits[k] < factors[k] {
                    break;
                }
                digits[k] = BigInt::zero();
                k += 1;
            }
        }
    }

    pub(crate) fn same(&self, other: &FGAbGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.relations == other.inner.relations
    }
}

pub fn group_from_presentation(relations: IntMatrix) -> FGAbGroup {
    FGAbGroup::from_presentation(relations)
}

/// Presentations are compared literally; use canonical forms for isomorphism.
impl PartialEq for FGAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for FGAbGroup {}

impl fmt::Display for FGAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.canonical)
    }
}

impl fmt::Debug for FGAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FGAbGroup({} gens, rels {}, ≅ {})", self.generators(), self.inner.relations, self.inner.canonical)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn presentation_examples() {
        let z2 = FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(z2.to_string(), "ℤ/2");
        assert_eq!(FGAbGroup::free(2).to_string(), "ℤ ⊕ ℤ");
        let z6 = FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(z6.invariant_factors(), &ints(&[6])[..]);
        assert_eq!(z6.free_rank(), 0);
        assert_eq!(FGAbGroup::zero().to_string(), "0");
        assert_eq!(FGAbGroup::cyclic(1).to_string(), "0");
        let mixed = FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![4], vec![0]]));
        assert_eq!(mixed.canonical_form().machine(), "rank=1 factors=[4]");
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![6, 4], vec![4, 0], vec![0, 0]]));
        let c = g.canonical_group();
        assert_eq!(c.canonical_form(), g.canonical_form());
        assert_eq!(c.canonical_group(), c);
    }

    #[test]
    fn canonical_isomorphisms_are_inverse() {
        let g = FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![2, 0, 1], vec![0, 3, 1], vec![0, 0, 0]]));
        let to = g.to_canonical();
        let from = g.from_canonical();
        assert!(to.is_well_defined() && from.is_well_defined());
        assert!(to.compose(&from).unwrap().equals(&AbHom::identity(&g.canonical_group())).unwrap());
        assert!(from.compose(&to).unwrap().equals(&AbHom::identity(&g)).unwrap());
    }

    #[test]
    fn element_normal_forms() {
        let z4 = FGAbGroup::cyclic(4);
        assert!(z4.elements_equal(&ints(&[1]), &ints(&[-3])));
        assert!(!z4.elements_equal(&ints(&[1]), &ints(&[3])));
        assert_eq!(z4.normal_form(&ints(&[-1])), ints(&[3]));
        let elems = FGAbGroup::free(0).enumerate_elements(10).unwrap();
        assert_eq!(elems.len(), 1);
        let klein = FGAbGroup::from_presentation(IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]));
        assert_eq!(klein.enumerate_elements(10).unwrap().len(), 4);
        assert!(FGAbGroup::free(1).enumerate_elements(10).is_none());
    }
}
