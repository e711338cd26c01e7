/// Disjoint sets over `0..n` whose representative is always the least member.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns false if already merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        // the smaller root wins so representatives stay minimal
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    /// Dense class numbering: classes ordered by their least member.
    pub(crate) fn classes(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut class_of_root = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = count;
                count += 1;
            }
            labels.push(class_of_root[r]);
        }
        (count, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representative_is_least_member() {
        let mut uf = UnionFind::new(6);
        uf.union(5, 3);
        uf.union(3, 4);
        uf.union(1, 2);
        assert_eq!(uf.find(5), 3);
        assert_eq!(uf.find(4), 3);
        assert_eq!(uf.find(2), 1);
        let (count, labels) = uf.classes();
        assert_eq!(count, 3);
        assert_eq!(labels, vec![0, 1, 1, 2, 2, 2]);
    }
}
