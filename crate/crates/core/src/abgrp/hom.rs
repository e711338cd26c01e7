use num_bigint::BigInt;
use num_traits::Zero;

use super::lattice::{kernel_basis, Lattice};
use super::{FGAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::validation::{ValidationReport, Violation};

/// A homomorphism given on generators: column `j` of `matrix` is the image
/// of source generator `j` in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    source: FGAbGroup,
    target: FGAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    /// Checks dimensions only; see [`validate`](Self::validate).
    pub fn new(source: FGAbGroup, target: FGAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(Error::input(
                "matrix",
                format!(
                    "expected {}×{} matrix, found {}×{}",
                    target.generators(),
                    source.generators(),
                    matrix.rows(),
                    matrix.cols()
                ),
            ));
        }
        Ok(AbHom { source, target, matrix })
    }

    /// Checks dimensions and well-definedness.
    pub fn new_checked(source: FGAbGroup, target: FGAbGroup, matrix: IntMatrix) -> Result<Self> {
        let h = AbHom::new(source, target, matrix)?;
        if let Some(v) = h.validate().violations.first() {
            return Err(Error::input("matrix", v.to_string()));
        }
        Ok(h)
    }

    pub(crate) fn raw(source: FGAbGroup, target: FGAbGroup, matrix: IntMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.generators());
        debug_assert_eq!(matrix.cols(), source.generators());
        AbHom { source, target, matrix }
    }

    pub fn identity(g: &FGAbGroup) -> Self {
        AbHom::raw(g.clone(), g.clone(), IntMatrix::identity(g.generators()))
    }

    pub fn zero(source: &FGAbGroup, target: &FGAbGroup) -> Self {
        AbHom::raw(source.clone(), target.clone(), IntMatrix::zeros(target.generators(), source.generators()))
    }

    /// Multiplication by `k` on `g`.
    pub fn scalar(g: &FGAbGroup, k: impl Into<BigInt>) -> Self {
        AbHom::raw(g.clone(), g.clone(), IntMatrix::identity(g.generators()).scale(&k.into()))
    }

    pub fn source(&self) -> &FGAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// Reports every source relation whose image is not a target relation.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let rels = self.source.relations();
        for j in 0..rels.cols() {
            if !self.target.is_zero_element(&self.apply(&rels.column(j))) {
                report.push(Violation::IllDefinedHom { relation: j });
            }
        }
        report
    }

    pub fn is_well_defined(&self) -> bool {
        self.validate().is_valid()
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &AbHom) -> Result<AbHom> {
        if !f.target.same(&self.source) {
            return Err(Error::input("compose", format!("codomain {} does not match domain {}", f.target, self.source)));
        }
        Ok(AbHom::raw(f.source.clone(), self.target.clone(), self.matrix.mul(&f.matrix)))
    }

    fn check_parallel(&self, other: &AbHom, what: &str) -> Result<()> {
        if !self.source.same(&other.source) || !self.target.same(&other.target) {
            return Err(Error::input(what, "homomorphisms have different endpoints"));
        }
        Ok(())
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        self.check_parallel(other, "add")?;
        Ok(AbHom::raw(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix)))
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        self.check_parallel(other, "sub")?;
        Ok(AbHom::raw(self.source.clone(), self.target.clone(), self.matrix.sub(&other.matrix)))
    }

    pub fn neg(&self) -> AbHom {
        AbHom::raw(self.source.clone(), self.target.clone(), self.matrix.scale(&BigInt::from(-1)))
    }

    /// Equality as homomorphisms: the difference lands in the relations.
    pub fn equals(&self, other: &AbHom) -> Result<bool> {
        self.check_parallel(other, "equal")?;
        let d = self.matrix.sub(&other.matrix);
        Ok((0..d.cols()).all(|j| self.target.is_zero_element(&d.column(j))))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.target.is_zero_element(&self.matrix.column(j)))
    }

    /// Index of a source generator whose images under `self` and `other`
    /// differ, or `None` when the homomorphisms agree.
    pub fn first_difference(&self, other: &AbHom) -> Result<Option<usize>> {
        self.check_parallel(other, "compare")?;
        let d = self.matrix.sub(&other.matrix);
        Ok((0..d.cols()).find(|&j| !self.target.is_zero_element(&d.column(j))))
    }

    pub fn kernel(&self) -> Kernel {
        let a = self.source.generators();
        let stacked = self.matrix.hstack(self.target.relations());
        let basis = kernel_basis(&stacked);
        let spanning = basis.submatrix(0, a, 0, basis.cols());
        let t = spanning.cols();
        let syzygies = kernel_basis(&spanning.hstack(self.source.relations()));
        let lambda = syzygies.submatrix(0, t, 0, syzygies.cols());
        let presented = FGAbGroup::from_presentation(lambda);
        let raw_inclusion = AbHom::raw(presented.clone(), self.source.clone(), spanning.clone());
        let from = presented.from_canonical();
        let inclusion = raw_inclusion.compose(&from).expect("kernel inclusion composes");
        Kernel {
            group: presented.canonical_group(),
            inclusion,
            spanning: Lattice::new(spanning),
            to_canonical: presented.to_canonical(),
            map: self.clone(),
        }
    }

    pub fn cokernel(&self) -> Cokernel {
        let presented = FGAbGroup::from_presentation(self.target.relations().hstack(&self.matrix));
        let to = presented.to_canonical();
        let from = presented.from_canonical();
        Cokernel {
            group: presented.canonical_group(),
            projection: AbHom::raw(self.target.clone(), to.target().clone(), to.matrix().clone()),
            section: from.matrix().clone(),
            map: self.clone(),
        }
    }

    pub fn is_mono(&self) -> bool {
        self.kernel().group.is_trivial()
    }

    pub fn is_epi(&self) -> bool {
        self.cokernel().group.is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// Inverse homomorphism, if `self` is an isomorphism.
    pub fn inverse(&self) -> Option<AbHom> {
        if !self.is_iso() {
            return None;
        }
        // Preimage of each target generator modulo target relations.
        let lattice = Lattice::new(self.matrix.hstack(self.target.relations()));
        let a = self.source.generators();
        let mut cols = Vec::with_capacity(self.target.generators());
        for j in 0..self.target.generators() {
            let mut e = vec![BigInt::zero(); self.target.generators()];
            e[j] = BigInt::from(1);
            let x = lattice.solve(&e)?;
            cols.push(x[..a].to_vec());
        }
        let m = IntMatrix::from_columns(a, &cols);
        Some(AbHom::raw(self.target.clone(), self.source.clone(), m))
    }
}

pub fn hom_equal(h1: &AbHom, h2: &AbHom) -> Result<bool> {
    h1.equals(h2)
}

pub fn hom_compose(g: &AbHom, f: &AbHom) -> Result<AbHom> {
    g.compose(f)
}

pub fn hom_validate(h: &AbHom) -> ValidationReport {
    h.validate()
}

/// Kernel of a homomorphism together with its universal property.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub group: FGAbGroup,
    pub inclusion: AbHom,
    spanning: Lattice,
    to_canonical: AbHom,
    map: AbHom,
}

impl Kernel {
    /// The unique `ψ` with `inclusion ∘ ψ = φ`, for `φ` killed by the map.
    pub fn lift(&self, phi: &AbHom) -> Result<AbHom> {
        if !phi.target.same(&self.map.source) {
            return Err(Error::input("lift", "probe does not land in the kernel's ambient group"));
        }
        if !self.map.compose(phi)?.is_zero() {
            return Err(Error::Precondition("probe is not killed by the map".into()));
        }
        let mut cols = Vec::with_capacity(phi.matrix.cols());
        for j in 0..phi.matrix.cols() {
            let x = self
                .spanning
                .solve(&phi.matrix.column(j))
                .ok_or_else(|| Error::Precondition("probe column outside the kernel lattice".into()))?;
            cols.push(self.to_canonical.apply(&x));
        }
        let psi = AbHom::raw(phi.source.clone(), self.group.clone(), IntMatrix::from_columns(self.group.generators(), &cols));
        debug_assert!(self.inclusion.compose(&psi)?.equals(phi)?);
        Ok(psi)
    }
}

/// Cokernel of a homomorphism together with its universal property.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FGAbGroup,
    pub projection: AbHom,
    section: IntMatrix,
    map: AbHom,
}

impl Cokernel {
    /// The unique `ψ` with `ψ ∘ projection = φ`, for `φ` killing the map.
    pub fn descend(&self, phi: &AbHom) -> Result<AbHom> {
        if !phi.source.same(&self.map.target) {
            return Err(Error::input("descend", "probe does not start at the cokernel's ambient group"));
        }
        if !phi.compose(&self.map)?.is_zero() {
            return Err(Error::Precondition("probe does not kill the map".into()));
        }
        let psi = AbHom::raw(self.group.clone(), phi.target.clone(), phi.matrix.mul(&self.section));
        debug_assert!(psi.compose(&self.projection)?.equals(phi)?);
        Ok(psi)
    }
}

/// Finite biproduct with its injections and projections.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub group: FGAbGroup,
    pub injections: Vec<AbHom>,
    pub projections: Vec<AbHom>,
}

impl Biproduct {
    /// Offset of summand `i` within the generators of the biproduct.
    pub fn offset(&self, i: usize) -> usize {
        self.injections[..i].iter().map(|h| h.source.generators()).sum()
    }

    /// `⟨f_i⟩ : ⊕ A_i → B` from maps out of each summand.
    pub fn copair(&self, maps: &[AbHom]) -> Result<AbHom> {
        if maps.len() != self.injections.len() {
            return Err(Error::input("copair", "one map per summand is required"));
        }
        let target = match maps.first() {
            Some(m) => m.target.clone(),
            None => return Err(Error::input("copair", "empty copairing needs an explicit target")),
        };
        let mut m = IntMatrix::zeros(target.generators(), self.group.generators());
        for (i, f) in maps.iter().enumerate() {
            if !f.source.same(&self.injections[i].source) || !f.target.same(&target) {
                return Err(Error::input(format!("maps[{i}]"), "endpoint mismatch"));
            }
            m.set_block(0, self.offset(i), &f.matrix);
        }
        Ok(AbHom::raw(self.group.clone(), target, m))
    }

    /// `(f_i) : A → ⊕ B_i` from maps into each summand.
    pub fn pair(&self, source: &FGAbGroup, maps: &[AbHom]) -> Result<AbHom> {
        if maps.len() != self.projections.len() {
            return Err(Error::input("pair", "one map per summand is required"));
        }
        let mut m = IntMatrix::zeros(self.group.generators(), source.generators());
        for (i, f) in maps.iter().enumerate() {
            if !f.source.same(source) || !f.target.same(&self.projections[i].target) {
                return Err(Error::input(format!("maps[{i}]"), "endpoint mismatch"));
            }
            m.set_block(self.offset(i), 0, &f.matrix);
        }
        Ok(AbHom::raw(source.clone(), self.group.clone(), m))
    }
}

pub fn biproduct(groups: &[FGAbGroup]) -> Biproduct {
    let rels: Vec<IntMatrix> = groups.iter().map(|g| g.relations().clone()).collect();
    let group = FGAbGroup::from_presentation(IntMatrix::block_diagonal(&rels));
    let total = group.generators();
    let mut injections = Vec::with_capacity(groups.len());
    let mut projections = Vec::with_capacity(groups.len());
    let mut offset = 0;
    for g in groups {
        let n = g.generators();
        let mut inj = IntMatrix::zeros(total, n);
        let mut proj = IntMatrix::zeros(n, total);
        for k in 0..n {
            inj[(offset + k, k)] = BigInt::from(1);
            proj[(k, offset + k)] = BigInt::from(1);
        }
        injections.push(AbHom::raw(g.clone(), group.clone(), inj));
        projections.push(AbHom::raw(group.clone(), g.clone(), proj));
        offset += n;
    }
    Biproduct { group, injections, projections }
}

/// Mutually inverse homomorphisms `A → B`, `B → A` when the groups are isomorphic.
pub fn are_isomorphic(a: &FGAbGroup, b: &FGAbGroup) -> Option<(AbHom, AbHom)> {
    if a.canonical_form() != b.canonical_form() {
        return None;
    }
    let there = b.from_canonical().matrix().mul(a.to_canonical().matrix());
    let back = a.from_canonical().matrix().mul(b.to_canonical().matrix());
    Some((AbHom::raw(a.clone(), b.clone(), there), AbHom::raw(b.clone(), a.clone(), back)))
}
