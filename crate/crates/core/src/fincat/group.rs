use super::FinCategory;
use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FinGroup {
    /// Validates closure, associativity, identity and inverses; the error
    /// names the first failed axiom.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::input("group", "identity axiom fails: a group has at least one element"));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::input("group.table", format!("closure axiom fails: table must be {n}×{n}")));
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &ab) in row.iter().enumerate() {
                if ab >= n {
                    return Err(Error::input(format!("group.table[{a}][{b}]"), "closure axiom fails: product out of range"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::input("group.table", format!("associativity axiom fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::input("group.table", "identity axiom fails: no two-sided identity"))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::input("group.table", format!("inverse axiom fails for element {a}")))?;
            inverses.push(inv);
        }
        Ok(FinGroup { labels, table, identity, inverses })
    }

    pub fn trivial() -> Self {
        FinGroup::cyclic(1)
    }

    /// `ℤ/n` with elements `0..n` and addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FinGroup::new((0..n).map(|i| i.to_string()).collect(), table).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// A generating set chosen greedily in element order: an element is kept
    /// when it is not in the subgroup generated by the earlier choices.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut inside = vec![false; n];
        inside[self.identity] = true;
        for a in 0..n {
            if inside[a] {
                continue;
            }
            gens.push(a);
            // regenerate the subgroup from scratch; groups here are tiny
            let mut frontier = vec![self.identity];
            inside = vec![false; n];
            inside[self.identity] = true;
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.table[x][g];
                    if !inside[y] {
                        inside[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }
}

/// The one-object category whose morphisms are the group elements, with
/// `g ∘ h = g·h`. Its generating family is [`FinGroup::generators`].
pub fn group_as_category(group: &FinGroup) -> FinCategory {
    let morphisms = group.labels.iter().map(|l| (l.clone(), 0, 0)).collect();
    FinCategory::from_fn(
        vec!["*".to_string()],
        morphisms,
        vec![group.identity],
        Some(group.generators()),
        |g, h| group.mul(g, h),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{validate_category, Category};

    #[test]
    fn trivial_group_is_terminal() {
        let c = group_as_category(&FinGroup::trivial());
        assert_eq!(c.object_count(), 1);
        assert_eq!(c.morphism_count(), 1);
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn z2_squares_to_identity() {
        let c = group_as_category(&FinGroup::cyclic(2));
        assert_eq!(c.morphism_count(), 2);
        assert_eq!(c.compose(1, 1), Some(0));
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn z3_composition_is_addition() {
        let c = group_as_category(&FinGroup::cyclic(3));
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(c.compose(a, b), Some((a + b) % 3));
            }
        }
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn non_group_tables_name_the_axiom() {
        // {0,1} under max: associative with identity 0, but 1 has no inverse
        let err = FinGroup::new(vec!["0".into(), "1".into()], vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(err.to_string().contains("inverse"));
        let err = FinGroup::new(vec!["0".into(), "1".into()], vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert!(err.to_string().contains("closure"));
        // a·b = b on two elements: associative, no two-sided identity
        let err = FinGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn generators_generate() {
        let g = FinGroup::cyclic(6);
        assert_eq!(g.generators(), vec![1]);
        let klein = FinGroup::new(
            (0..4).map(|i| i.to_string()).collect(),
            (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        )
        .unwrap();
        assert_eq!(klein.generators(), vec![1, 2]);
    }
}
