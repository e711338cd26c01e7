//! Shape predicates against brute-force definitions over a fixed corpus.

mod common;

use abcolim_core::fincat::{
    is_connected, is_filtered, is_final, is_sifted, validate_category, zigzag, Category, FinCategory, FinFunctor,
};
use common::corpus;

/// Components of the undirected graph on all morphisms, by depth-first search.
fn component_count(cat: &FinCategory) -> usize {
    let k = cat.object_count();
    let mut adj = vec![Vec::new(); k];
    for f in 0..cat.morphism_count() {
        adj[cat.dom(f)].push(cat.cod(f));
        adj[cat.cod(f)].push(cat.dom(f));
    }
    let mut seen = vec![false; k];
    let mut count = 0;
    for s in 0..k {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Filtered straight from the definition, over all morphisms.
fn filtered_by_definition(cat: &FinCategory) -> bool {
    let k = cat.object_count();
    if k == 0 {
        return false;
    }
    let bounds = (0..k).all(|a| (0..k).all(|b| (0..k).any(|w| !cat.hom(a, w).is_empty() && !cat.hom(b, w).is_empty())));
    let coeq = (0..cat.morphism_count()).all(|f| {
        (0..cat.morphism_count())
            .filter(|&g| cat.dom(g) == cat.dom(f) && cat.cod(g) == cat.cod(f))
            .all(|g| (0..cat.morphism_count()).any(|h| cat.dom(h) == cat.cod(f) && cat.compose(h, f) == cat.compose(h, g)))
    });
    bounds && coeq
}

#[test]
fn corpus_is_valid() {
    for (name, cat) in corpus() {
        assert!(validate_category(&cat).is_valid(), "{name}");
    }
}

#[test]
fn connectivity_matches_graph_search() {
    for (name, cat) in corpus() {
        let report = is_connected(&cat);
        let n = component_count(&cat);
        assert_eq!(report.component_count, n, "{name}");
        assert_eq!(report.connected, n == 1, "{name}");
        for a in 0..cat.object_count() {
            for b in 0..cat.object_count() {
                let same = report.component_of[a] == report.component_of[b];
                match zigzag(&cat, a, b) {
                    Some(z) => {
                        assert!(same, "{name}");
                        assert!(z.is_valid_in(&cat), "{name} {a} {b}");
                    }
                    None => assert!(!same, "{name}"),
                }
            }
        }
    }
}

#[test]
fn filtered_matches_definition() {
    for (name, cat) in corpus() {
        assert_eq!(is_filtered(&cat).filtered, filtered_by_definition(&cat), "{name}");
    }
}

#[test]
fn sifted_matches_finality_of_diagonal() {
    for (name, cat) in corpus() {
        let direct = is_sifted(&cat).sifted;
        let via_diagonal = is_final(&FinFunctor::diagonal(&cat)).is_final;
        assert_eq!(direct, via_diagonal, "{name}");
    }
}

#[test]
fn filtered_implies_sifted() {
    for (name, cat) in corpus() {
        if is_filtered(&cat).filtered {
            assert!(is_sifted(&cat).sifted, "{name}");
        }
    }
}

#[test]
fn known_shapes() {
    let table = [
        ("terminal", true, true, true),
        ("discrete2", false, false, false),
        ("parallel", true, false, false),
        ("span", true, false, false),
        ("cospan", true, true, true),
        ("bz2", true, false, false),
        ("diamond", true, true, true),
        ("chain3", true, true, true),
        ("chain2xspan", true, false, false),
    ];
    let all = corpus();
    for (name, connected, filtered, sifted) in table {
        let cat = &all.iter().find(|(n, _)| n == name).unwrap().1;
        assert_eq!(is_connected(cat).connected, connected, "{name}");
        assert_eq!(is_filtered(cat).filtered, filtered, "{name}");
        assert_eq!(is_sifted(cat).sifted, sifted, "{name}");
    }
}

#[test]
fn top_inclusion_of_a_chain_is_final() {
    for n in 1..=5 {
        let chain = FinCategory::chain(n);
        assert!(is_final(&FinFunctor::full_inclusion(&chain, &[n - 1])).is_final);
        if n > 1 {
            assert!(!is_final(&FinFunctor::full_inclusion(&chain, &[0])).is_final);
        }
    }
}
