//! Simple undirected graphs and their combinatorial invariants.

mod expansion;
mod graph6;

use std::collections::VecDeque;

use serde::Serialize;

pub use expansion::{edge_expansion, ExpansionResult, EXPANSION_CAP};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_CAP};

use crate::error::{Error, Result};

/// Longest walk length accepted by [`Graph::irreducible_path_count`].
pub const PATH_LENGTH_GUARD: usize = 12;

/// A finite simple graph on vertices `0..v`, stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `v` vertices.
    pub fn empty(v: usize) -> Self {
        Self {
            adj: vec![Vec::new(); v],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(v: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(v);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Inserts `{a, b}`; a no-op when the edge is already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let v = self.adj.len();
        for x in [a, b] {
            if x >= v {
                return Err(Error::VertexOutOfRange { vertex: x, v });
            }
        }
        if a == b {
            return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
        }
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
            let pos = self.adj[b].binary_search(&a).unwrap_err();
            self.adj[b].insert(pos, a);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// The common degree, if every vertex has the same one.
    pub fn regularity(&self) -> Option<u32> {
        let first = self.adj.first().map_or(0, Vec::len);
        self.adj
            .iter()
            .all(|ns| ns.len() == first)
            .then_some(first as u32)
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// All-pairs shortest path distances; errors on disconnected input.
    pub fn distances(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.adj.len())
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let v = self.adj.len();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; v];
        let mut parent = vec![usize::MAX; v];
        let mut queue = VecDeque::new();
        for s in 0..v {
            dist.fill(usize::MAX);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push_back(s);
            'bfs: while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    // cycles closed from depth dist[x] have length >= 2 dist[x]
                    if 2 * dist[x] >= b {
                        break 'bfs;
                    }
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The `i`-th distance matrix as a boolean pattern.
    pub fn distance_matrix(&self, i: usize) -> Result<Vec<Vec<bool>>> {
        Ok(self
            .distances()?
            .into_iter()
            .map(|row| row.into_iter().map(|d| d == i).collect())
            .collect())
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self
            .distances()?
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0))
    }

    /// Proper 2-coloring check.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        for s in 0..self.adj.len() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Number of non-backtracking walks of length `len` from `source` to each
    /// vertex, by explicit enumeration.
    pub fn irreducible_path_counts_from(&self, source: usize, len: usize) -> Result<Vec<u64>> {
        if len > PATH_LENGTH_GUARD {
            return Err(Error::PathLengthTooLarge(len));
        }
        let v = self.adj.len();
        if source >= v {
            return Err(Error::VertexOutOfRange { vertex: source, v });
        }
        let mut counts = vec![0u64; v];
        self.extend_walks(source, usize::MAX, len, &mut counts);
        Ok(counts)
    }

    fn extend_walks(&self, at: usize, prev: usize, remaining: usize, counts: &mut [u64]) {
        if remaining == 0 {
            counts[at] += 1;
            return;
        }
        for &next in &self.adj[at] {
            if next != prev {
                self.extend_walks(next, at, remaining - 1, counts);
            }
        }
    }

    /// Walks `u = u_0 ~ u_1 ~ ... ~ u_len = w` with no step `u_{j+1} = u_{j-1}`.
    pub fn irreducible_path_count(&self, u: usize, w: usize, len: usize) -> Result<u64> {
        let v = self.adj.len();
        if w >= v {
            return Err(Error::VertexOutOfRange { vertex: w, v });
        }
        Ok(self.irreducible_path_counts_from(u, len)?[w])
    }

    /// Checks distance-regularity by counting, for every ordered pair `(x, y)`
    /// at distance `i`, the neighbours of `y` at distance `i - 1`, `i`, `i + 1`
    /// from `x`. Returns the intersection array when all counts agree.
    pub fn is_distance_regular(&self) -> Result<Option<IntersectionArray>> {
        let k = self.regularity().ok_or(Error::NotRegular)?;
        let dist = self.distances()?;
        let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
        let mut b: Vec<Option<u32>> = vec![None; diameter + 1];
        let mut c: Vec<Option<u32>> = vec![None; diameter + 1];
        for row in &dist {
            for (y, &i) in row.iter().enumerate() {
                let (mut below, mut above) = (0u32, 0u32);
                for &z in &self.adj[y] {
                    let dz = row[z];
                    if dz + 1 == i {
                        below += 1;
                    } else if dz == i + 1 {
                        above += 1;
                    }
                }
                for (slot, value) in [(&mut c[i], below), (&mut b[i], above)] {
                    match slot {
                        None => *slot = Some(value),
                        Some(seen) if *seen != value => return Ok(None),
                        _ => {}
                    }
                }
            }
        }
        let b = b[..diameter].iter().map(|x| x.unwrap()).collect();
        let c = c[1..].iter().map(|x| x.unwrap()).collect();
        Ok(Some(IntersectionArray::new(k, b, c)?))
    }
}

/// Parameters `{b_0, ..., b_{D-1}; c_1, ..., c_D}` of a distance-regular graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    /// `a_i = k - b_i - c_i`, with `b_D = c_0 = 0`.
    pub a: Vec<u32>,
}

impl IntersectionArray {
    pub fn new(k: u32, b: Vec<u32>, c: Vec<u32>) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidArgument(format!(
                "intersection array needs |b| = |c|, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        if b.first().is_some_and(|&b0| b0 != k) || c.first().is_some_and(|&c1| c1 != 1) {
            return Err(Error::InvalidArgument(
                "intersection array needs b_0 = k and c_1 = 1".into(),
            ));
        }
        let d = b.len();
        let a = (0..=d)
            .map(|i| {
                let bi = if i < d { b[i] } else { 0 };
                let ci = if i > 0 { c[i - 1] } else { 0 };
                k.checked_sub(bi + ci).ok_or_else(|| {
                    Error::InvalidArgument(format!("b_{i} + c_{i} exceeds k = {k}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { b, c, a })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    pub(crate) fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn construction_rejects_loops_and_bad_vertices() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, v: 3 })
        );
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(petersen().regularity(), Some(3));
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.regularity(), None);
        assert_eq!(complete(6).regularity(), Some(5));
    }

    #[test]
    fn connectivity_examples() {
        assert!(cycle(5).is_connected());
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two.is_connected());
        assert!(petersen().is_connected());
        assert_eq!(two.diameter(), Err(Error::Disconnected));
        assert_eq!(two.distance_matrix(1), Err(Error::Disconnected));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(complete(4).girth(), Some(3));
        let tree = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(tree.girth(), None);
        assert_eq!(cycle(9).girth(), Some(9));
        assert_eq!(cycle(8).girth(), Some(8));
    }

    #[test]
    fn distance_matrices() {
        let p = petersen();
        let a0 = p.distance_matrix(0).unwrap();
        let a1 = p.distance_matrix(1).unwrap();
        let a2 = p.distance_matrix(2).unwrap();
        for x in 0..10 {
            for y in 0..10 {
                assert_eq!(a0[x][y], x == y);
                assert_eq!(a1[x][y], p.has_edge(x, y));
            }
            assert_eq!(a2[x].iter().filter(|&&b| b).count(), 6);
        }
        assert_eq!(p.diameter().unwrap(), 2);
        assert_eq!(complete(7).diameter().unwrap(), 1);
        assert_eq!(cycle(6).diameter().unwrap(), 3);
    }

    #[test]
    fn irreducible_paths() {
        let g = petersen();
        for u in 0..10 {
            for w in 0..10 {
                assert_eq!(g.irreducible_path_count(u, w, 0).unwrap(), (u == w) as u64);
                assert_eq!(g.irreducible_path_count(u, w, 1).unwrap(), g.has_edge(u, w) as u64);
            }
        }
        assert_eq!(cycle(5).irreducible_path_count(2, 2, 5).unwrap(), 2);
        assert_eq!(g.irreducible_path_count(0, 0, 13), Err(Error::PathLengthTooLarge(13)));
    }

    #[test]
    fn distance_regularity() {
        let p = petersen().is_distance_regular().unwrap().unwrap();
        assert_eq!((p.b.as_slice(), p.c.as_slice()), (&[3, 2][..], &[1, 1][..]));
        assert_eq!(p.a, vec![0, 0, 2]);
        let h = cycle(6).is_distance_regular().unwrap().unwrap();
        assert_eq!((h.b.as_slice(), h.c.as_slice()), (&[2, 1, 1][..], &[1, 1, 2][..]));
        let mut k4_minus = complete(4);
        k4_minus = Graph::from_edges(4, k4_minus.edges().filter(|&e| e != (0, 1))).unwrap();
        assert_eq!(k4_minus.is_distance_regular(), Err(Error::NotRegular));
        // 3-prism: regular, connected, not distance-regular
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(prism.is_distance_regular().unwrap(), None);
    }

    #[test]
    fn bipartite() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
    }
}
