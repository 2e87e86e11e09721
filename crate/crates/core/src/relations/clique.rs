//! Maximal clique enumeration (Bron–Kerbosch with pivoting) over bitsets.

#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    fn and_not(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    fn or(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
}

/// All maximal cliques of the undirected graph given by a symmetric
/// adjacency matrix (the diagonal is ignored). Each clique is sorted and
/// the list is in lexicographic order.
pub fn maximal_cliques(adjacent: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adjacent.len();
    let neighbours: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = BitSet::empty(n);
            for (u, &a) in adjacent[v].iter().enumerate() {
                if u != v && a {
                    s.insert(u);
                }
            }
            s
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    expand(
        &neighbours,
        &mut current,
        BitSet::full(n),
        BitSet::empty(n),
        &mut out,
    );
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    neighbours: &[BitSet],
    current: &mut Vec<usize>,
    mut candidates: BitSet,
    mut excluded: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() && !current.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    // Pivot: the vertex of P ∪ X with the most neighbours in P; ties go to the lowest index.
    let pool = candidates.or(&excluded);
    let pivot = pool
        .iter()
        .max_by_key(|&u| (neighbours[u].and(&candidates).count(), std::cmp::Reverse(u)))
        .expect("pool is nonempty");
    let branch: Vec<usize> = candidates.and_not(&neighbours[pivot]).iter().collect();
    for v in branch {
        current.push(v);
        expand(
            neighbours,
            current,
            candidates.and(&neighbours[v]),
            excluded.and(&neighbours[v]),
            out,
        );
        current.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; n]; n];
        for &(a, b) in edges {
            m[a][b] = true;
            m[b][a] = true;
        }
        m
    }

    #[test]
    fn complete_graph_has_one_clique() {
        let n = 5;
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        assert_eq!(maximal_cliques(&graph(n, &edges)), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn isolated_vertices_are_singletons() {
        assert_eq!(maximal_cliques(&graph(3, &[])), vec![vec![0], vec![1], vec![2]]);
        assert!(maximal_cliques(&[]).is_empty());
    }

    #[test]
    fn two_triangles_sharing_an_edge() {
        let g = graph(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn more_than_one_word() {
        let n = 70;
        let edges: Vec<_> = (0..n - 1).map(|a| (a, a + 1)).collect();
        let cliques = maximal_cliques(&graph(n, &edges));
        assert_eq!(cliques.len(), n - 1);
        assert_eq!(cliques[68], vec![68, 69]);
    }
}
