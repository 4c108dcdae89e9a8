//! Simple undirected graphs, loop sets, and the structural queries the
//! energy machinery is built on.
//!
//! A [`Graph`] stores the strict upper triangle of its adjacency relation in
//! a packed bit vector, so symmetry and an empty diagonal hold by
//! construction; self-loops live in a separate [`LoopSet`] and only meet the
//! graph inside a [`SelfLoopGraph`].
//!
//! Vertex labelings of the named families are fixed:
//!
//! * `path(n)`: edges `i — i+1`
//! * `cycle(n)`: edges `i — (i+1) mod n`
//! * `complete_bipartite(p, q)`: sides `{0..p-1}` and `{p..p+q-1}`
//! * `hex_prism`: outer hexagon `0..=5`, inner hexagon `6..=11`, spokes
//!   `i — i+6`
//! * `trunc_tetrahedron`: triangle `t` occupies `3t..3t+2`; vertex `3t + k`
//!   is matched to the corresponding vertex of the `k`-th other triangle

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Index of pair (i, j), i < j, in column-major upper-triangle order:
/// (0,1), (0,2), (1,2), (0,3), ... — the same order graph6 packs its bits.
#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// A simple undirected graph with a packed symmetric adjacency relation.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        Graph {
            n,
            bits: vec![0; pairs.div_ceil(64)],
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Path on `n >= 1` vertices with edges along consecutive labels.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamilyParams {
                kind: "path".into(),
                reason: "needs n >= 1".into(),
            });
        }
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidFamilyParams {
                kind: "cycle".into(),
                reason: "needs n >= 3".into(),
            });
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        Ok(g)
    }

    /// Complete bipartite graph K_{p,q} with sides {0..p-1} and {p..p+q-1}.
    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        let mut g = Graph::empty(p + q);
        for i in 0..p {
            for j in p..p + q {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Hexagonal prism C6 x K2: the cubic bipartite graph on 12 vertices.
    pub fn hex_prism() -> Self {
        let mut g = Graph::empty(12);
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6);
            g.add_edge(6 + i, 6 + (i + 1) % 6);
            g.add_edge(i, 6 + i);
        }
        g
    }

    /// Truncated tetrahedron: the cubic Archimedean graph on 12 vertices,
    /// four triangles pairwise linked by a perfect matching.
    pub fn trunc_tetrahedron() -> Self {
        let mut g = Graph::empty(12);
        // triangle t sits on vertices 3t, 3t+1, 3t+2
        for t in 0..4 {
            g.add_edge(3 * t, 3 * t + 1);
            g.add_edge(3 * t, 3 * t + 2);
            g.add_edge(3 * t + 1, 3 * t + 2);
        }
        // vertex k of triangle t points at the k-th other triangle; matching
        // edges join the two endpoints that point at each other
        let local = |t: usize, u: usize| -> usize {
            // position of u within {0,1,2,3} \ {t}
            let mut idx = 0;
            for v in 0..4 {
                if v == t {
                    continue;
                }
                if v == u {
                    break;
                }
                idx += 1;
            }
            3 * t + idx
        };
        for t in 0..4 {
            for u in t + 1..4 {
                g.add_edge(local(t, u), local(u, t));
            }
        }
        g
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Panics if an endpoint is out of range or an edge is a loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    /// Builds the graph on `n <= 11` vertices whose upper-triangle bits are
    /// the low bits of `mask`, in column-major pair order. This is the
    /// enumeration order used by the exhaustive scans.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        assert!(pairs <= 64, "edge mask only covers graphs with <= 64 pairs");
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Dispatches on a family name; `params` are the integer parameters the
    /// family takes (none for the two fixed 12-vertex graphs).
    pub fn make_named(kind: &str, params: &[usize]) -> Result<Self> {
        let want = |count: usize| -> Result<()> {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::InvalidFamilyParams {
                    kind: kind.into(),
                    reason: format!("expected {count} parameter(s), got {}", params.len()),
                })
            }
        };
        match kind {
            "empty" => {
                want(1)?;
                Ok(Graph::empty(params[0]))
            }
            "complete" => {
                want(1)?;
                Ok(Graph::complete(params[0]))
            }
            "path" => {
                want(1)?;
                Graph::path(params[0])
            }
            "cycle" => {
                want(1)?;
                Graph::cycle(params[0])
            }
            "complete_bipartite" => {
                want(2)?;
                Ok(Graph::complete_bipartite(params[0], params[1]))
            }
            "hex_prism" => {
                want(0)?;
                Ok(Graph::hex_prism())
            }
            "trunc_tetrahedron" => {
                want(0)?;
                Ok(Graph::trunc_tetrahedron())
            }
            other => Err(Error::UnknownFamily(other.into())),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not edges; use a LoopSet");
        assert!(i < self.n && j < self.n, "vertex out of range");
        let k = pair_index(i.min(j), i.max(j));
        self.bits[k / 64] |= 1 << (k % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j || i >= self.n || j >= self.n {
            return false;
        }
        let k = pair_index(i.min(j), i.max(j));
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    /// Edges as pairs (i, j) with i < j, in column-major pair order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Join: both graphs plus every edge between them. `self`'s vertices
    /// keep their labels; `other`'s are shifted up by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for i in 0..self.n {
            for j in 0..other.n {
                g.add_edge(i, self.n + j);
            }
        }
        g
    }

    fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (i, j) in self.edges() {
            g.add_edge(i, j);
        }
        for (i, j) in other.edges() {
            g.add_edge(self.n + i, self.n + j);
        }
        g
    }

    /// `k >= 1` vertex-disjoint copies, block after block.
    pub fn disjoint_copies(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::CopyCountZero);
        }
        let mut g = Graph::empty(self.n * k);
        for c in 0..k {
            for (i, j) in self.edges() {
                g.add_edge(c * self.n + i, c * self.n + j);
            }
        }
        Ok(g)
    }

    /// Connected components; each block ascending, blocks ordered by their
    /// smallest member.
    pub fn connected_components(&self) -> VertexPartition {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                block.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        VertexPartition { blocks }
    }

    /// Two-coloring when one exists. The smallest vertex of every component
    /// lands on side A, so the result is deterministic.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let side = |c: u8| (0..self.n).filter(|&v| color[v] == c).collect();
        Some(Bipartition {
            side_a: side(0),
            side_b: side(1),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Greedy maximal independent set inside one connected component:
    /// scan the component in ascending vertex order, keep a vertex whenever
    /// it has no neighbor among those already kept.
    pub fn maximal_independent_set(&self, component: &[usize]) -> Result<Vec<usize>> {
        if component.len() < 2 {
            return Err(Error::ComponentTooSmall {
                size: component.len(),
            });
        }
        let mut chosen: Vec<usize> = Vec::new();
        for &v in component {
            if chosen.iter().all(|&u| !self.has_edge(u, v)) {
                chosen.push(v);
            }
        }
        Ok(chosen)
    }

    /// Number of triangles, via neighborhood intersections. Used as a cheap
    /// non-isomorphism certificate.
    pub fn triangle_count(&self) -> usize {
        let words = self.n.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; self.n];
        for (i, j) in self.edges() {
            rows[i][j / 64] |= 1 << (j % 64);
            rows[j][i / 64] |= 1 << (i % 64);
        }
        let mut count = 0usize;
        for (i, j) in self.edges() {
            count += rows[i]
                .iter()
                .zip(&rows[j])
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
        }
        // every triangle is counted once per edge
        count / 3
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Disjoint vertex blocks covering {0..n-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The two sides of a 2-coloring; each side ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// The subset S of vertices carrying self-loops.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LoopSet {
    members: BTreeSet<usize>,
}

impl LoopSet {
    pub fn empty() -> Self {
        LoopSet::default()
    }

    /// Loops on every vertex of a graph on `n` vertices.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn from_vertices(vertices: &[usize]) -> Self {
        vertices.iter().copied().collect()
    }

    /// Vertices selected by the low bits of `mask` (vertex i <-> bit i).
    pub fn from_bit_mask(mask: u64) -> Self {
        (0..64).filter(|&i| mask >> i & 1 == 1).collect()
    }

    /// Parses the hex sidecar mask: hex digit k covers vertices 4k..4k+3,
    /// with the low bit of each digit marking the smallest of the four.
    /// An empty string is the empty set.
    pub fn from_hex(mask: &str) -> Result<Self> {
        let mut members = BTreeSet::new();
        for (k, c) in mask.chars().enumerate() {
            let d = c
                .to_digit(16)
                .ok_or_else(|| Error::InvalidLoopMask(format!("bad hex digit `{c}`")))?;
            for b in 0..4 {
                if d >> b & 1 == 1 {
                    members.insert(4 * k + b);
                }
            }
        }
        Ok(LoopSet { members })
    }

    /// Hex mask covering a graph on `n` vertices (ceil(n/4) digits, zeros
    /// included, so the output is deterministic).
    pub fn to_hex(&self, n: usize) -> String {
        let digits = n.div_ceil(4);
        let mut out = String::with_capacity(digits);
        for k in 0..digits {
            let mut d = 0u32;
            for b in 0..4 {
                if self.contains(4 * k + b) {
                    d |= 1 << b;
                }
            }
            out.push(char::from_digit(d, 16).unwrap());
        }
        out
    }

    /// |S|, written alpha throughout.
    pub fn alpha(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.members.iter().next_back().copied()
    }

    /// V \ S for a graph on `n` vertices.
    pub fn complement(&self, n: usize) -> LoopSet {
        (0..n).filter(|v| !self.contains(*v)).collect()
    }
}

impl FromIterator<usize> for LoopSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        LoopSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl fmt::Debug for LoopSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

/// A graph together with the vertices that carry self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfLoopGraph {
    base: Graph,
    loops: LoopSet,
}

impl SelfLoopGraph {
    pub fn new(base: Graph, loops: LoopSet) -> Result<Self> {
        if let Some(v) = loops.max_vertex() {
            if v >= base.order() {
                return Err(Error::LoopVertexOutOfRange {
                    vertex: v,
                    order: base.order(),
                });
            }
        }
        Ok(SelfLoopGraph { base, loops })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn loops(&self) -> &LoopSet {
        &self.loops
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn alpha(&self) -> usize {
        self.loops.alpha()
    }

    /// alpha / n, the diagonal mean subtracted by the energy functional.
    pub fn shift(&self) -> f64 {
        if self.order() == 0 {
            0.0
        } else {
            self.alpha() as f64 / self.order() as f64
        }
    }

    /// Same base graph, loops on V \ S instead. An involution.
    pub fn loop_complement(&self) -> SelfLoopGraph {
        SelfLoopGraph {
            base: self.base.clone(),
            loops: self.loops.complement(self.base.order()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_has_no_edges() {
        let g = Graph::empty(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn named_families_counts() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::path(4).unwrap().edge_count(), 3);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
        assert_eq!(Graph::complete_bipartite(3, 4).edge_count(), 12);
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn make_named_dispatch() {
        assert_eq!(Graph::make_named("empty", &[4]).unwrap().edge_count(), 0);
        assert!(matches!(
            Graph::make_named("mobius", &[5]),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            Graph::make_named("cycle", &[]),
            Err(Error::InvalidFamilyParams { .. })
        ));
    }

    #[test]
    fn cubic_bases_are_cubic() {
        for g in [Graph::hex_prism(), Graph::trunc_tetrahedron()] {
            assert_eq!(g.order(), 12);
            assert_eq!(g.edge_count(), 18);
            assert_eq!(g.regular_degree(), Some(3));
        }
        assert!(Graph::hex_prism().is_bipartite());
        assert_eq!(Graph::hex_prism().triangle_count(), 0);
        assert!(!Graph::trunc_tetrahedron().is_bipartite());
        assert_eq!(Graph::trunc_tetrahedron().triangle_count(), 4);
    }

    #[test]
    fn join_counts() {
        let k34 = Graph::empty(3).join(&Graph::empty(4));
        assert_eq!(k34, Graph::complete_bipartite(3, 4));
        assert_eq!(k34.edge_count(), 12);

        let star = Graph::complete(1).join(&Graph::empty(4));
        assert_eq!(star.order(), 5);
        assert_eq!(star.edge_count(), 4);

        let big = Graph::hex_prism().join(&Graph::empty(12));
        assert_eq!(big.order(), 24);
        assert_eq!(big.edge_count(), 18 + 144);
    }

    #[test]
    fn disjoint_copies_counts() {
        let g = Graph::complete(2).disjoint_copies(3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.connected_components().len(), 3);

        let h = Graph::hex_prism().disjoint_copies(2).unwrap();
        assert_eq!(h.order(), 24);
        assert_eq!(h.edge_count(), 36);

        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.disjoint_copies(1).unwrap(), p3);
        assert!(matches!(p3.disjoint_copies(0), Err(Error::CopyCountZero)));
    }

    #[test]
    fn components() {
        let parts = Graph::empty(3).connected_components();
        assert_eq!(parts.blocks(), &[vec![0], vec![1], vec![2]]);

        let parts = Graph::complete(2)
            .disjoint_copies(2)
            .unwrap()
            .connected_components();
        assert_eq!(parts.blocks(), &[vec![0, 1], vec![2, 3]]);

        let parts = Graph::cycle(5).unwrap().connected_components();
        assert_eq!(parts.blocks(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn bipartition_cases() {
        let b = Graph::cycle(4).unwrap().bipartition().unwrap();
        assert_eq!(b.side_a, vec![0, 2]);
        assert_eq!(b.side_b, vec![1, 3]);

        assert!(Graph::complete(3).bipartition().is_none());

        let b = Graph::hex_prism().bipartition().unwrap();
        let inside = |side: &[usize], g: &Graph| {
            side.iter()
                .flat_map(|&u| side.iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| g.has_edge(u, v))
                .count()
        };
        assert_eq!(inside(&b.side_a, &Graph::hex_prism()), 0);
        assert_eq!(inside(&b.side_b, &Graph::hex_prism()), 0);
    }

    #[test]
    fn greedy_independent_set() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.maximal_independent_set(&[0, 1]).unwrap(), vec![0]);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            c4.maximal_independent_set(&[0, 1, 2, 3]).unwrap(),
            vec![0, 2]
        );

        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.maximal_independent_set(&[0, 1, 2]).unwrap(), vec![0, 2]);

        assert!(matches!(
            p3.maximal_independent_set(&[0]),
            Err(Error::ComponentTooSmall { size: 1 })
        ));
    }

    #[test]
    fn loop_set_hex_round_trip() {
        let s = LoopSet::from_hex("1").unwrap();
        assert_eq!(s.alpha(), 1);
        assert!(s.contains(0));

        let s = LoopSet::from_hex("c").unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![2, 3]);

        // digit k covers vertices 4k..4k+3
        let s = LoopSet::from_hex("21").unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(s.to_hex(8), "21");

        assert_eq!(LoopSet::from_hex("").unwrap(), LoopSet::empty());
        assert!(LoopSet::from_hex("g").is_err());
        assert_eq!(LoopSet::from_vertices(&[0, 5]).to_hex(6), "12");
    }

    #[test]
    fn loop_complement_involution() {
        let g = Graph::cycle(4).unwrap();
        let gs = SelfLoopGraph::new(g, LoopSet::empty()).unwrap();
        let comp = gs.loop_complement();
        assert_eq!(comp.loops(), &LoopSet::from_vertices(&[0, 1, 2, 3]));
        assert_eq!(comp.loop_complement(), gs);

        let p3 = Graph::path(3).unwrap();
        let gs = SelfLoopGraph::new(p3, LoopSet::from_vertices(&[1])).unwrap();
        assert_eq!(
            gs.loop_complement().loops(),
            &LoopSet::from_vertices(&[0, 2])
        );
    }

    #[test]
    fn self_loop_graph_validates_members() {
        let err = SelfLoopGraph::new(Graph::complete(2), LoopSet::from_vertices(&[2]));
        assert!(matches!(
            err,
            Err(Error::LoopVertexOutOfRange {
                vertex: 2,
                order: 2
            })
        ));
    }
}
