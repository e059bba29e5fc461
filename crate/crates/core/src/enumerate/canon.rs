//! Canonical form by minimal edge bitmask over degree-respecting relabelings.
//!
//! Vertices are first ordered by non-increasing degree; only permutations
//! inside each degree class are tried. The canonical mask is the smallest
//! [`pair_index`](crate::graph::pair_index) bitmask reachable that way, so two
//! graphs are isomorphic iff their canonical masks agree.

use crate::graph::{pair_index, MAX_MASK_VERTICES};
use crate::Graph;

/// Canonical edge bitmask of `g` (`n <= 16`).
pub fn canonical_mask(g: &Graph) -> u128 {
    let mut best = u128::MAX;
    search(g, &mut |mask| {
        best = best.min(mask);
        true
    });
    best
}

/// True when `g` is itself the canonical representative of its class: its
/// degrees are non-increasing in vertex order and no class-respecting
/// relabeling yields a smaller mask.
pub fn is_canonical(g: &Graph) -> bool {
    if g.degrees().windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    let own = g.edge_mask().expect("n <= 16");
    let mut canonical = true;
    search(g, &mut |mask| {
        if mask < own {
            canonical = false;
        }
        canonical
    });
    canonical
}

// Visits the mask of every degree-class-respecting relabeling; stops early
// when `visit` returns false.
fn search(g: &Graph, visit: &mut dyn FnMut(u128) -> bool) {
    let n = g.n();
    assert!(n <= MAX_MASK_VERTICES, "canonical form supports n <= {MAX_MASK_VERTICES}");
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));
    // label block [start, end) for each vertex's degree
    let mut block = vec![(0, 0); n];
    let mut start = 0;
    while start < n {
        let d = degrees[order[start]];
        let end = start + order[start..].iter().take_while(|&&v| degrees[v] == d).count();
        for &v in &order[start..end] {
            block[v] = (start, end);
        }
        start = end;
    }
    let mut label = vec![usize::MAX; n];
    assign(g, 0, 0u32, &block, &mut label, visit);
}

fn assign(g: &Graph, v: usize, used: u32, block: &[(usize, usize)], label: &mut [usize], visit: &mut dyn FnMut(u128) -> bool) -> bool {
    if v == g.n() {
        let mask = g.edges().fold(0u128, |m, (a, b)| m | 1 << pair_index(label[a], label[b]));
        return visit(mask);
    }
    let (lo, hi) = block[v];
    for l in lo..hi {
        if used >> l & 1 == 0 {
            label[v] = l;
            if !assign(g, v + 1, used | 1 << l, block, label, visit) {
                return false;
            }
        }
    }
    true
}
