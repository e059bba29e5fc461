use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest vertex count whose edge set fits in a `u128` bitmask.
pub const MAX_MASK_VERTICES: usize = 16;

/// Simple undirected graph on vertices `0..n` with sorted neighbor lists.
///
/// Values are immutable once built; every "modification" returns a new graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeListRepr", into = "EdgeListRepr")]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;
    fn try_from(value: EdgeListRepr) -> Result<Self> {
        Graph::new(value.n, value.edges)
    }
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { n: g.n(), edges: g.edges().collect() }
    }
}

/// Index of the unordered pair `{i, j}` in graph6 column order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// Number of unordered vertex pairs, `n choose 2`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate edges
    /// (in either orientation) and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a graph needs at least one vertex"));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, edge_count })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, [])
    }

    /// Decodes an edge bitmask laid out by [`pair_index`].
    pub fn from_edge_mask(n: usize, mask: u128) -> Result<Self> {
        if n == 0 || n > MAX_MASK_VERTICES {
            return Err(Error::domain(format!("edge masks support 1..={MAX_MASK_VERTICES} vertices, got {n}")));
        }
        if pair_count(n) < 128 && mask >> pair_count(n) != 0 {
            return Err(Error::domain(format!("mask {mask:#x} has bits beyond the {} pairs of n = {n}", pair_count(n))));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                    edge_count += 1;
                }
                bit += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, edge_count })
    }

    /// Edge bitmask in [`pair_index`] layout; `None` above [`MAX_MASK_VERTICES`].
    pub fn edge_mask(&self) -> Option<u128> {
        if self.n() > MAX_MASK_VERTICES {
            return None;
        }
        Some(self.edges().fold(0u128, |mask, (u, v)| mask | 1 << pair_index(u, v)))
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path needs n >= 1")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs n >= 3");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph needs n >= 1")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        self.adjacency.iter().all(|l| l.len() == d)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut g.adjacency[a];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        g.edge_count += 1;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut g.adjacency[a];
            let pos = list.binary_search(&b).unwrap();
            list.remove(pos);
        }
        g.edge_count -= 1;
        Ok(g)
    }

    /// Appends a new vertex `n` adjacent to `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: &[usize]) -> Result<Graph> {
        for &v in neighbors {
            self.check_vertex(v)?;
        }
        let new = self.n();
        let mut g = self.clone();
        let mut list = neighbors.to_vec();
        list.sort_unstable();
        list.dedup();
        for &v in &list {
            g.adjacency[v].push(new);
        }
        g.edge_count += list.len();
        g.adjacency.push(list);
        Ok(g)
    }

    /// Image of the graph under `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n()];
        if perm.len() != self.n() || perm.iter().any(|&p| p >= self.n() || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::domain("relabel needs a permutation of 0..n"));
        }
        Graph::new(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// All-sources BFS: eccentricities, radius and diameter.
    pub fn distance_profile(&self) -> Result<DistanceProfile> {
        let n = self.n();
        let mut eccentricities = Vec::with_capacity(n);
        let mut dist = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for source in 0..n {
            dist.fill(usize::MAX);
            dist[source] = 0;
            queue.clear();
            queue.push(source);
            let mut head = 0;
            while let Some(&u) = queue.get(head) {
                head += 1;
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push(w);
                    }
                }
            }
            if queue.len() < n {
                return Err(Error::Disconnected);
            }
            eccentricities.push(dist[queue[n - 1]]);
        }
        let radius = *eccentricities.iter().min().unwrap();
        let diameter = *eccentricities.iter().max().unwrap();
        Ok(DistanceProfile { eccentricities, radius, diameter })
    }

    pub fn radius(&self) -> Result<usize> {
        self.distance_profile().map(|p| p.radius)
    }

    /// Circuit rank `m - n + 1` of a connected graph.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self.m() + 1 - self.n())
    }

    pub fn classify(&self) -> Result<GraphClass> {
        let k = self.cyclomatic_number()?;
        Ok(classify_connected(self.n(), k, self.max_degree(), self.is_regular()))
    }
}

/// Classification of a connected graph from its summary numbers.
pub(crate) fn classify_connected(n: usize, cyclomatic: usize, max_degree: usize, regular: bool) -> GraphClass {
    match cyclomatic {
        0 if max_degree <= 2 => {
            if n.is_multiple_of(2) {
                GraphClass::EvenPath
            } else {
                GraphClass::OddPath
            }
        }
        0 => GraphClass::Tree,
        1 if regular => {
            if n.is_multiple_of(2) {
                GraphClass::EvenCycle
            } else {
                GraphClass::OddCycle
            }
        }
        1 => GraphClass::Unicyclic,
        k => GraphClass::General { cyclomatic: k },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceProfile {
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
}

/// Most specific structural class of a connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GraphClass {
    Tree,
    EvenPath,
    OddPath,
    EvenCycle,
    OddCycle,
    Unicyclic,
    General { cyclomatic: usize },
}

impl GraphClass {
    pub fn cyclomatic(&self) -> usize {
        match self {
            GraphClass::Tree | GraphClass::EvenPath | GraphClass::OddPath => 0,
            GraphClass::EvenCycle | GraphClass::OddCycle | GraphClass::Unicyclic => 1,
            GraphClass::General { cyclomatic } => *cyclomatic,
        }
    }

    pub fn is_tree(&self) -> bool {
        self.cyclomatic() == 0
    }

    pub fn is_unicyclic(&self) -> bool {
        self.cyclomatic() == 1
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Tree => "Tree",
            GraphClass::EvenPath => "EvenPath",
            GraphClass::OddPath => "OddPath",
            GraphClass::EvenCycle => "EvenCycle",
            GraphClass::OddCycle => "OddCycle",
            GraphClass::Unicyclic => "Unicyclic",
            GraphClass::General { .. } => "General",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn build_examples() {
        let c3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.m(), 3);
        assert_eq!(c3, Graph::cycle(3));
        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(p2.m(), 1);
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::cycle(3).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn distance_profile_examples() {
        let p4 = Graph::path(4).distance_profile().unwrap();
        assert_eq!((p4.radius, p4.diameter), (2, 3));
        assert_eq!(p4.eccentricities, vec![3, 2, 2, 3]);
        let c6 = Graph::cycle(6).distance_profile().unwrap();
        assert_eq!((c6.radius, c6.diameter), (3, 3));
        let k1 = Graph::empty(1).unwrap().distance_profile().unwrap();
        assert_eq!((k1.radius, k1.diameter), (0, 0));
        assert_eq!(Graph::empty(2).unwrap().distance_profile(), Err(Error::Disconnected));
    }

    #[test]
    fn cyclomatic_examples() {
        assert_eq!(Graph::star(5).cyclomatic_number(), Ok(0));
        assert_eq!(Graph::cycle(5).cyclomatic_number(), Ok(1));
        assert_eq!(Graph::complete(4).cyclomatic_number(), Ok(3));
        assert_eq!(Graph::empty(3).unwrap().cyclomatic_number(), Err(Error::Disconnected));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(Graph::path(4).classify(), Ok(GraphClass::EvenPath));
        assert_eq!(Graph::path(5).classify(), Ok(GraphClass::OddPath));
        assert_eq!(Graph::path(2).classify(), Ok(GraphClass::EvenPath));
        assert_eq!(Graph::path(1).classify(), Ok(GraphClass::OddPath));
        assert_eq!(Graph::cycle(4).classify(), Ok(GraphClass::EvenCycle));
        assert_eq!(Graph::cycle(5).classify(), Ok(GraphClass::OddCycle));
        assert_eq!(paw().classify(), Ok(GraphClass::Unicyclic));
        assert_eq!(Graph::star(3).classify(), Ok(GraphClass::Tree));
        assert_eq!(Graph::complete(4).classify(), Ok(GraphClass::General { cyclomatic: 3 }));
        assert_eq!(Graph::new(4, [(0, 1), (2, 3)]).unwrap().classify(), Err(Error::Disconnected));
    }

    #[test]
    fn path_radius_is_half_n() {
        for n in 1..=40 {
            assert_eq!(Graph::path(n).radius().unwrap(), n / 2, "n = {n}");
        }
    }

    #[test]
    fn edge_mask_layout_follows_graph6_order() {
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(2, 1), 2);
        assert_eq!(pair_index(0, 3), 3);
        let g = paw();
        let mask = g.edge_mask().unwrap();
        assert_eq!(mask, 0b1111);
        assert_eq!(Graph::from_edge_mask(4, mask).unwrap(), g);
        assert!(Graph::from_edge_mask(3, 1 << 3).is_err());
    }

    #[test]
    fn edge_insertion_and_removal() {
        let p3 = Graph::path(3);
        let c3 = p3.with_edge(0, 2).unwrap();
        assert_eq!(c3, Graph::cycle(3));
        assert_eq!(c3.without_edge(2, 0).unwrap(), p3);
        assert_eq!(p3.without_edge(0, 2), Err(Error::MissingEdge(0, 2)));
        assert_eq!(p3.with_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn serde_round_trip() {
        let g = Graph::petersen();
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }

    fn connected_graph() -> impl Strategy<Value = Graph> {
        (1usize..=9)
            .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), pair_count(n))))
            .prop_filter_map("disconnected", |(n, bits)| {
                let mask = bits.iter().enumerate().fold(0u128, |m, (i, &b)| m | (b as u128) << i);
                let g = Graph::from_edge_mask(n, mask).unwrap();
                g.is_connected().then_some(g)
            })
    }

    fn graph_and_permutation() -> impl Strategy<Value = (Graph, Vec<usize>)> {
        connected_graph().prop_flat_map(|g| {
            let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
            (Just(g), perm)
        })
    }

    proptest! {
        #[test]
        fn radius_diameter_sandwich(g in connected_graph()) {
            let p = g.distance_profile().unwrap();
            prop_assert!(p.radius <= p.diameter);
            prop_assert!(p.diameter <= 2 * p.radius);
        }

        #[test]
        fn tree_iff_zero_cyclomatic(g in connected_graph()) {
            prop_assert_eq!(g.cyclomatic_number().unwrap() == 0, g.classify().unwrap().is_tree());
        }

        #[test]
        fn distance_profile_is_permutation_invariant((g, perm) in graph_and_permutation()) {
            let h = g.relabel(&perm).unwrap();
            let (p, q) = (g.distance_profile().unwrap(), h.distance_profile().unwrap());
            prop_assert_eq!(p.radius, q.radius);
            prop_assert_eq!(p.diameter, q.diameter);
            for (v, &image) in perm.iter().enumerate() {
                prop_assert_eq!(p.eccentricities[v], q.eccentricities[image]);
            }
        }
    }
}
