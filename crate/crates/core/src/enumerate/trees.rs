use crate::Graph;

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into its labeled
/// tree on `n` vertices.
pub fn prufer_decode(sequence: &[usize], n: usize) -> Graph {
    assert!(n >= 3 && sequence.len() == n - 2, "Prüfer sequence for n = {n} must have length n - 2");
    let mut degree = vec![1usize; n];
    for &a in sequence {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &a in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, a));
        degree[leaf] -= 1;
        degree[a] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

/// Number of labeled trees on `n` vertices, `n^(n-2)` (1 for `n <= 2`).
pub fn cayley_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// Labeled trees with Prüfer index in `[start, end)`; index digits are the
/// sequence read base `n`, most significant first.
pub struct LabeledTrees {
    n: usize,
    next: u64,
    end: u64,
    digits: Vec<usize>,
}

impl LabeledTrees {
    pub(crate) fn new(n: usize, start: u64, end: u64) -> Self {
        let len = n.saturating_sub(2);
        let mut digits = vec![0; len];
        let mut rest = start;
        for d in digits.iter_mut().rev() {
            *d = (rest % n as u64) as usize;
            rest /= n as u64;
        }
        LabeledTrees { n, next: start, end: end.min(cayley_count(n)), digits }
    }

    fn advance_digits(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.n {
                return;
            }
            *d = 0;
        }
    }
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        self.next += 1;
        let tree = match self.n {
            1 => Graph::path(1),
            2 => Graph::path(2),
            n => {
                let t = prufer_decode(&self.digits, n);
                self.advance_digits();
                t
            }
        };
        Some(tree)
    }
}
