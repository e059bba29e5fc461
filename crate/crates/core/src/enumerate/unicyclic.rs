use std::collections::VecDeque;

use super::trees::LabeledTrees;
use crate::graph::pair_index;
use crate::Graph;

/// Labeled connected unicyclic graphs, generated as (tree, absent edge)
/// pairs over trees with Prüfer index in `[start, end)`.
///
/// A unicyclic graph whose cycle has length `l` arises from `l` such pairs;
/// only the pair whose added edge has the largest pair index on the cycle is
/// kept, so each graph is emitted exactly once.
pub struct UnicyclicGraphs {
    n: usize,
    trees: LabeledTrees,
    current: Option<Rooted>,
}

struct Rooted {
    tree: Graph,
    parent: Vec<usize>,
    depth: Vec<usize>,
    next_j: usize,
    next_i: usize,
}

impl Rooted {
    fn new(tree: Graph) -> Self {
        let n = tree.n();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in tree.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        Rooted { tree, parent, depth, next_j: 1, next_i: 0 }
    }

    // Largest pair index among the tree edges on the path from a to b.
    fn max_path_edge(&self, mut a: usize, mut b: usize) -> usize {
        let mut best = 0;
        while a != b {
            if self.depth[a] < self.depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            best = best.max(pair_index(a, self.parent[a]));
            a = self.parent[a];
        }
        best
    }

    fn next_graph(&mut self) -> Option<Graph> {
        let n = self.tree.n();
        while self.next_j < n {
            let (i, j) = (self.next_i, self.next_j);
            self.next_i += 1;
            if self.next_i == self.next_j {
                self.next_i = 0;
                self.next_j += 1;
            }
            if !self.tree.has_edge(i, j) && pair_index(i, j) > self.max_path_edge(i, j) {
                return Some(self.tree.with_edge(i, j).expect("absent edge"));
            }
        }
        None
    }
}

impl UnicyclicGraphs {
    pub(crate) fn new(n: usize, start: u64, end: u64) -> Self {
        UnicyclicGraphs { n, trees: LabeledTrees::new(n, start, end), current: None }
    }
}

impl Iterator for UnicyclicGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n < 3 {
            return None;
        }
        loop {
            if let Some(g) = self.current.as_mut().and_then(Rooted::next_graph) {
                return Some(g);
            }
            self.current = Some(Rooted::new(self.trees.next()?));
        }
    }
}

/// Closed-form count of labeled connected unicyclic graphs on `n` vertices:
/// choose the cycle's vertex set and cyclic order, then a rooted forest on the
/// cycle vertices spanning the rest (`l * n^(n-l-1)` of them).
pub fn unicyclic_count(n: usize) -> u64 {
    if n < 3 {
        return 0;
    }
    let n64 = n as u64;
    (3..=n)
        .map(|l| {
            let l64 = l as u64;
            let choose: u64 = (0..l64).fold(1, |acc, i| acc * (n64 - i) / (i + 1));
            let cycles: u64 = (1..l64).product::<u64>() / 2;
            let forests = if l == n { 1 } else { l64 * n64.pow((n - l - 1) as u32) };
            choose * cycles * forests
        })
        .sum()
}
