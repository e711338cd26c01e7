//! Seeded workloads shared by the benchmarks in `benches/engine.rs`.

use abcolim_core::abdiag::Family;
use abcolim_core::fincat::FinCategory;
use abcolim_core::random::{random_chain_diagram, random_family, random_matrix, rng};
use abcolim_core::{IntMatrix, SetFunctor};

/// Square matrices of side `n` with entries bounded by 20.
pub fn matrices(n: usize, count: u64) -> Vec<IntMatrix> {
    (0..count).map(|s| random_matrix(&mut rng(s), n, n, 20)).collect()
}

/// A set diagram on `chain(levels) × span` with carriers of at most 4 elements.
pub fn chain_span_diagram(levels: usize, seed: u64) -> SetFunctor {
    random_chain_diagram(&mut rng(seed), levels, &FinCategory::span(), 4).expect("span has depth one")
}

/// A family of groups of rank at most 2 with invariant factors at most 6.
pub fn family(letters: usize, seed: u64) -> Family {
    random_family(&mut rng(seed), letters, 2, 6)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_deterministic() {
        assert_eq!(matrices(3, 2), matrices(3, 2));
        assert_eq!(chain_span_diagram(3, 5).sets, chain_span_diagram(3, 5).sets);
        assert_eq!(family(2, 1).groups.len(), 2);
    }
}
