use super::canon::is_canonical;
use crate::graph::pair_count;
use crate::Graph;

/// Labeled connected graphs on `n` vertices with edge mask in `[start, end)`,
/// or with `dedup` only the canonical representative of each isomorphism
/// class.
pub struct ConnectedGraphs {
    n: usize,
    dedup: bool,
    next: u64,
    end: u64,
    pairs: Vec<(usize, usize)>,
}

impl ConnectedGraphs {
    pub(crate) fn new(n: usize, dedup: bool, start: u64, end: u64) -> Self {
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let total = 1u64 << pair_count(n);
        ConnectedGraphs { n, dedup, next: start, end: end.min(total), pairs }
    }

    fn adjacency(&self, mut mask: u64) -> [u16; 16] {
        let mut adj = [0u16; 16];
        while mask != 0 {
            let (i, j) = self.pairs[mask.trailing_zeros() as usize];
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            mask &= mask - 1;
        }
        adj
    }

    fn accept(&self, mask: u64) -> bool {
        let adj = self.adjacency(mask);
        let adj = &adj[..self.n];
        if self.dedup && adj.windows(2).any(|w| w[0].count_ones() < w[1].count_ones()) {
            return false;
        }
        is_connected_bits(adj)
    }
}

fn is_connected_bits(adj: &[u16]) -> bool {
    let all = (1u32 << adj.len()) - 1;
    let mut reached = 1u32;
    loop {
        let mut grown = reached;
        let mut frontier = reached;
        while frontier != 0 {
            grown |= adj[frontier.trailing_zeros() as usize] as u32;
            frontier &= frontier - 1;
        }
        if grown == reached {
            return reached == all;
        }
        reached = grown;
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.accept(mask) {
                let g = Graph::from_edge_mask(self.n, mask as u128).expect("mask fits n");
                if !self.dedup || is_canonical(&g) {
                    return Some(g);
                }
            }
        }
        None
    }
}

/// Number of labeled connected graphs on `n` vertices via
/// `c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1,k-1) c(k) 2^C(n-k,2)`.
pub fn labeled_connected_count(n: usize) -> u128 {
    let binom = |a: usize, b: usize| -> u128 { (0..b as u128).fold(1, |acc, i| acc * (a as u128 - i) / (i + 1)) };
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let total = 1u128 << pair_count(m);
        let disconnected: u128 = (1..m).map(|k| binom(m - 1, k - 1) * c[k] * (1u128 << pair_count(m - k))).sum();
        c[m] = total - disconnected;
    }
    c[n]
}
