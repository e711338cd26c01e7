use std::fmt;

/// A single violated law found by one of the `validate` functions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    IdentityEndpoints { object: usize },
    MissingComposite { g: usize, f: usize },
    SpuriousComposite { g: usize, f: usize },
    CompositeEndpoints { g: usize, f: usize },
    LeftIdentity { morphism: usize },
    RightIdentity { morphism: usize },
    Associativity { h: usize, g: usize, f: usize },
    NotGenerated { morphism: usize },
    FunctorEndpoints { morphism: usize },
    FunctorIdentity { object: usize },
    FunctorComposite { g: usize, f: usize },
    IllDefinedHom { relation: usize },
    IllDefinedMap { morphism: usize, relation: usize },
    GroupRelation { g: usize, h: usize },
    NotAutomorphism { element: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            IdentityEndpoints { object } => write!(f, "identity of object {object} is not an endomorphism of it"),
            MissingComposite { g, f: h } => write!(f, "composite {g}∘{h} is missing"),
            SpuriousComposite { g, f: h } => write!(f, "composite {g}∘{h} is defined but not composable"),
            CompositeEndpoints { g, f: h } => write!(f, "composite {g}∘{h} has wrong endpoints"),
            LeftIdentity { morphism } => write!(f, "id∘{morphism} ≠ {morphism}"),
            RightIdentity { morphism } => write!(f, "{morphism}∘id ≠ {morphism}"),
            Associativity { h, g, f: k } => write!(f, "({h}∘{g})∘{k} ≠ {h}∘({g}∘{k})"),
            NotGenerated { morphism } => write!(f, "morphism {morphism} is not a composite of generators"),
            FunctorEndpoints { morphism } => write!(f, "image of morphism {morphism} has wrong endpoints"),
            FunctorIdentity { object } => write!(f, "identity of object {object} is not sent to an identity"),
            FunctorComposite { g, f: h } => write!(f, "composite {g}∘{h} is not preserved"),
            IllDefinedHom { relation } => write!(f, "relation column {relation} is not sent into the target relations"),
            IllDefinedMap { morphism, relation } => {
                write!(f, "image of morphism {morphism} sends relation column {relation} outside the target relations")
            }
            GroupRelation { g, h } => write!(f, "action of {g}·{h} differs from the composite of actions"),
            NotAutomorphism { element } => write!(f, "action of element {element} is not invertible"),
        }
    }
}

/// Outcome of a law check: the full list of violated laws, empty when valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
