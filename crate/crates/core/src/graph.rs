//! Undirected graphs and directed patterns on at most 64 vertices.
//!
//! Vertex sets and adjacency rows are single `u64` words, so every set
//! operation the search layers need is one bitwise instruction. Edge lists
//! are kept sorted with `u < v`; edge indices are positions in that order.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{CapacityError, GraphError};

pub const MAX_VERTICES: usize = 64;

/// Largest vertex count for `canonical_form` (brute-force over all
/// permutations).
pub const CANONICAL_MAX_VERTICES: usize = 10;

/// Largest vertex count for `Digraph::canonical_label` (56 ordered pairs
/// still fit one word).
pub const CANONICAL_MAX_VERTICES_DIRECTED: usize = 8;

/// Largest vertex count for `optimal_partition`.
pub const PARTITION_MAX_VERTICES: usize = 14;

/// An undirected labeled graph. No loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// Normalizing constructor: swaps endpoints so `u < v`, sorts the edge list,
/// rejects loops and duplicates.
pub fn make_graph(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::VertexCount(n));
    }
    let mut edges = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        if a >= n {
            return Err(GraphError::VertexOutOfRange { vertex: a, n });
        }
        if b >= n {
            return Err(GraphError::VertexOutOfRange { vertex: b, n });
        }
        if a == b {
            return Err(GraphError::Loop(a));
        }
        edges.push((a.min(b), a.max(b)));
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
    }
    let mut adj = vec![0u64; n];
    for &(u, v) in &edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Ok(Graph { n, edges, adj })
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor bitset of `v`.
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> v) & 1 == 1
    }

    /// Index of edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The graph with edge index `i` removed (vertex set unchanged).
    pub fn delete_edge(&self, i: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        make_graph(self.n, &edges).expect("subgraph of a valid graph")
    }

    /// Drops vertices of degree zero and relabels the rest in order.
    pub fn drop_isolated(&self) -> Option<Graph> {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        if keep.is_empty() {
            return None;
        }
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
        Some(make_graph(keep.len(), &edges).expect("relabeling of a valid graph"))
    }

    /// Image of the graph under a vertex permutation (`perm[v]` is the new
    /// name of `v`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        make_graph(self.n, &edges).expect("relabeling of a valid graph")
    }

    /// Vertex pairs that are not edges.
    pub fn missing_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        make_graph(self.n, &edges)
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::CapacityOverflow(n));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        make_graph(n, &edges)
    }

    /// Size of a maximum matching (branch on the first remaining edge).
    pub fn max_matching(&self) -> usize {
        fn go(edges: &[(usize, usize)]) -> usize {
            match edges.first() {
                None => 0,
                Some(&(u, v)) => {
                    let take: Vec<_> = edges[1..]
                        .iter()
                        .copied()
                        .filter(|&(a, b)| a != u && a != v && b != u && b != v)
                        .collect();
                    let skip = &edges[1..];
                    (1 + go(&take)).max(go(skip))
                }
            }
        }
        go(&self.edges)
    }
}

/// A directed pattern: ordered arcs, no loops, no bidirected pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs)
    }
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("arcs", &self.arcs)?;
        st.end()
    }
}

pub fn make_digraph(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::VertexCount(n));
    }
    let mut sorted = Vec::with_capacity(arcs.len());
    for &(a, b) in arcs {
        if a >= n {
            return Err(GraphError::VertexOutOfRange { vertex: a, n });
        }
        if b >= n {
            return Err(GraphError::VertexOutOfRange { vertex: b, n });
        }
        if a == b {
            return Err(GraphError::Loop(a));
        }
        sorted.push((a, b));
    }
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
    }
    for &(a, b) in &sorted {
        if a > b && sorted.binary_search(&(b, a)).is_ok() {
            return Err(GraphError::BidirectedPair(b, a));
        }
    }
    Ok(Digraph { n, arcs: sorted })
}

impl Digraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.binary_search(&(a, b)).is_ok()
    }

    pub fn underlying(&self) -> Graph {
        make_graph(self.n, &self.arcs).expect("digraph invariants imply a valid graph")
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let arcs: Vec<_> = self.arcs.iter().map(|&(a, b)| (b, a)).collect();
        make_digraph(self.n, &arcs).expect("reversal of a valid digraph")
    }

    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        let arcs: Vec<_> = self.arcs.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        make_digraph(self.n, &arcs).expect("relabeling of a valid digraph")
    }

    /// Out-neighbor bitset of `v`.
    pub fn out_adj(&self, v: usize) -> u64 {
        let mut m = 0;
        for &(a, b) in &self.arcs {
            if a == v {
                m |= 1 << b;
            }
        }
        m
    }

    /// In-neighbor bitset of `v`.
    pub fn in_adj(&self, v: usize) -> u64 {
        let mut m = 0;
        for &(a, b) in &self.arcs {
            if b == v {
                m |= 1 << a;
            }
        }
        m
    }

    /// True when all but at most `slack` of the arcs between `u_set` and
    /// `v_set` enter the same side. `slack = 0` is the pure case.
    pub fn is_pure_pair(&self, u_set: u64, v_set: u64, slack: usize) -> Result<bool, GraphError> {
        if u_set & v_set != 0 {
            return Err(GraphError::OverlappingSets((u_set & v_set).trailing_zeros() as usize));
        }
        let mut into_u = 0usize;
        let mut into_v = 0usize;
        for &(a, b) in &self.arcs {
            let (am, bm) = (1u64 << a, 1u64 << b);
            if am & u_set != 0 && bm & v_set != 0 {
                into_v += 1;
            } else if am & v_set != 0 && bm & u_set != 0 {
                into_u += 1;
            }
        }
        Ok(into_u <= slack || into_v <= slack)
    }

    /// Minimum label over all vertex permutations; equal labels mean
    /// isomorphic digraphs. Only for graphs small enough to brute-force.
    pub fn canonical_label(&self) -> Result<(usize, u64), CapacityError> {
        if self.n > CANONICAL_MAX_VERTICES_DIRECTED {
            return Err(CapacityError::new(
                format!("digraph canonical label on {} vertices", self.n),
                format!("{CANONICAL_MAX_VERTICES_DIRECTED} vertices"),
                "compare smaller pieces or use an external tool",
            ));
        }
        let n = self.n;
        let pos = |a: usize, b: usize| a * (n - 1) + if b < a { b } else { b - 1 };
        let mut best = u64::MAX;
        for_each_permutation(n, |perm| {
            let mut mask = 0u64;
            for &(a, b) in &self.arcs {
                mask |= 1 << pos(perm[a], perm[b]);
            }
            if mask < best {
                best = mask;
            }
        });
        Ok((n, best))
    }
}

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn pair_pos(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Minimum edge-set encoding over all vertex permutations. Equal labels are
/// equivalent to isomorphism. Brute force, so capped at
/// [`CANONICAL_MAX_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, CapacityError> {
    Ok(encode_label(g.n, canonical_mask(g)?))
}

/// The raw `(n, mask)` form of [`canonical_form`], cheaper to compare.
pub fn canonical_mask(g: &Graph) -> Result<u64, CapacityError> {
    if g.n > CANONICAL_MAX_VERTICES {
        return Err(CapacityError::new(
            format!("canonical form on {} vertices", g.n),
            format!("{CANONICAL_MAX_VERTICES} vertices"),
            "permutation minimization is brute force",
        ));
    }
    let n = g.n;
    let mut best = u64::MAX;
    for_each_permutation(n, |perm| {
        let mut mask = 0u64;
        for &(u, v) in &g.edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            mask |= 1 << pair_pos(n, a, b);
        }
        if mask < best {
            best = mask;
        }
    });
    Ok(best)
}

fn encode_label(n: usize, mask: u64) -> Vec<u8> {
    let mut out = Vec::with_capacity(9);
    out.push(n as u8);
    out.extend_from_slice(&mask.to_be_bytes());
    out
}

/// Rebuilds the canonical representative graph from its `(n, mask)` label.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (mask >> pair_pos(n, u, v)) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    make_graph(n, &edges).expect("mask decodes to a valid graph")
}

/// Edge count of the balanced complete p-partite Turan graph on n vertices.
pub fn turan_count(n: u64, p: u64) -> u64 {
    assert!(p >= 1, "turan_count needs p >= 1");
    let choose2 = |k: u64| k * k.saturating_sub(1) / 2;
    if n == 0 {
        return 0;
    }
    let q = n / p;
    let r = n % p;
    choose2(n) - r * choose2(q + 1) - (p - r) * choose2(q)
}

/// The additive constant in the fan extremal number: k^2 - k for odd k and
/// k^2 - 3k/2 for even k.
pub fn h_of_k(k: u64) -> u64 {
    assert!(k >= 1, "h_of_k needs k >= 1");
    if k % 2 == 1 {
        k * k - k
    } else {
        k * k - 3 * k / 2
    }
}

/// Disjoint copies of `g` and `h` plus all edges between them.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n + h.n;
    if n > MAX_VERTICES {
        return Err(GraphError::CapacityOverflow(n));
    }
    let mut edges = g.edges.clone();
    edges.extend(h.edges.iter().map(|&(u, v)| (u + g.n, v + g.n)));
    for u in 0..g.n {
        for v in 0..h.n {
            edges.push((u, g.n + v));
        }
    }
    make_graph(n, &edges)
}

/// Exact chromatic number by iterative-deepening backtracking. Intended for
/// graphs on at most ~20 vertices; the empty graph on n >= 1 vertices is 1.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.m() == 0 {
        return 1;
    }
    // vertices in descending degree order; first vertex pinned to color 0
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    #[allow(clippy::needless_range_loop)]
    fn colorable(g: &Graph, order: &[usize], k: usize, colors: &mut [usize], i: usize, used: usize) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let mut banned = 0u64;
        for j in 0..i {
            let w = order[j];
            if g.has_edge(v, w) {
                banned |= 1 << colors[w];
            }
        }
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if (banned >> c) & 1 == 0 {
                colors[v] = c;
                if colorable(g, order, k, colors, i + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    for k in 2..=g.n {
        let mut colors = vec![0usize; g.n];
        if colorable(g, &order, k, &mut colors, 0, 0) {
            return k;
        }
    }
    g.n
}

/// A partition of `[n]` into disjoint nonempty parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Number of edges of `g` with both ends in one part.
    pub fn within_edges(&self, g: &Graph) -> usize {
        let masks: Vec<u64> = self
            .parts
            .iter()
            .map(|p| p.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        g.edges()
            .iter()
            .filter(|&&(u, v)| masks.iter().any(|&m| (m >> u) & 1 == 1 && (m >> v) & 1 == 1))
            .count()
    }
}

/// A partition into at most `p` parts minimizing the number of edges inside
/// parts. Ties go to the lexicographically smallest part-assignment vector
/// (parts numbered by first occurrence), so output is reproducible.
pub fn optimal_partition(g: &Graph, p: usize) -> Result<(Partition, usize), CapacityError> {
    assert!(p >= 1, "optimal_partition needs p >= 1");
    if g.n > PARTITION_MAX_VERTICES {
        return Err(CapacityError::new(
            format!("optimal partition on {} vertices", g.n),
            format!("{PARTITION_MAX_VERTICES} vertices"),
            "the assignment search is exhaustive",
        ));
    }
    let n = g.n;
    struct Search<'a> {
        g: &'a Graph,
        p: usize,
        assign: Vec<usize>,
        best: Option<(usize, Vec<usize>)>,
    }
    fn go(s: &mut Search, v: usize, used: usize, cost: usize) {
        if let Some((best_cost, _)) = &s.best {
            if cost >= *best_cost {
                return; // can only tie or worsen; lex-first optimum already kept
            }
        }
        if v == s.assign.len() {
            s.best = Some((cost, s.assign.clone()));
            return;
        }
        let limit = (used + 1).min(s.p);
        for c in 0..limit {
            s.assign[v] = c;
            let mut add = 0;
            for w in 0..v {
                if s.assign[w] == c && s.g.has_edge(v, w) {
                    add += 1;
                }
            }
            go(s, v + 1, used.max(c + 1), cost + add);
        }
    }
    let mut s = Search { g, p, assign: vec![0; n], best: None };
    go(&mut s, 0, 0, 0);
    let (cost, assign) = s.best.expect("search always reaches a full assignment");
    let parts_used = assign.iter().copied().max().unwrap_or(0) + 1;
    let mut parts = vec![Vec::new(); parts_used];
    for (v, &c) in assign.iter().enumerate() {
        parts[c].push(v);
    }
    Ok((Partition { parts }, cost))
}

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    make_graph(n, &edges).expect("complete graph")
}

pub fn empty(n: usize) -> Graph {
    make_graph(n, &[]).expect("empty graph")
}

/// Complete multipartite graph with the given part sizes; parts occupy
/// consecutive vertex ranges in order.
pub fn multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = sizes.iter().sum();
    let mut start = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        start.push(acc);
        acc += s;
    }
    let part_of = |v: usize| start.iter().rposition(|&s| s <= v).unwrap();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of(u) != part_of(v) {
                edges.push((u, v));
            }
        }
    }
    make_graph(n.max(1), &edges)
}

/// The Turan graph T(n, p): balanced complete p-partite. The first `n mod p`
/// parts get the extra vertex.
pub fn turan(n: usize, p: usize) -> Result<Graph, GraphError> {
    assert!(p >= 1);
    let q = n / p;
    let r = n % p;
    let sizes: Vec<usize> = (0..p).map(|i| q + usize::from(i < r)).filter(|&s| s > 0).collect();
    multipartite(&sizes)
}

/// Star with `t` leaves (the (t+1)-star); vertex 0 is the center.
pub fn star(t: usize) -> Graph {
    let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
    make_graph(t + 1, &edges).expect("star")
}

/// k disjoint edges (2i, 2i+1).
pub fn matching(k: usize) -> Graph {
    let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    make_graph((2 * k).max(1), &edges).expect("matching")
}

/// Path on k vertices.
pub fn path(k: usize) -> Graph {
    let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    make_graph(k, &edges).expect("path")
}

/// Cycle on k vertices (k >= 3).
pub fn cycle(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::VertexCount(k));
    }
    let mut edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, k - 1));
    make_graph(k, &edges)
}

/// (k, r)-fan: k copies of K_r sharing exactly the center vertex 0. Blade i
/// occupies vertices 1 + i(r-1) ..= (i+1)(r-1).
pub fn fan(k: usize, r: usize) -> Result<Graph, GraphError> {
    if k < 1 || r < 2 {
        return Err(GraphError::VertexCount(0));
    }
    let n = 1 + k * (r - 1);
    let mut edges = Vec::new();
    for i in 0..k {
        let blade: Vec<usize> = std::iter::once(0)
            .chain((0..r - 1).map(|j| 1 + i * (r - 1) + j))
            .collect();
        for a in 0..blade.len() {
            for b in a + 1..blade.len() {
                edges.push((blade[a], blade[b]));
            }
        }
    }
    make_graph(n, &edges)
}

/// The bowtie: two triangles sharing the center vertex 0.
pub fn bowtie() -> Graph {
    fan(2, 3).expect("bowtie")
}

/// Wheel on m vertices (odd m >= 5): hub 0 joined to the rim cycle 1..m-1.
pub fn wheel(m: usize) -> Result<Graph, GraphError> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(GraphError::VertexCount(m));
    }
    let rim = m - 1;
    let mut edges: Vec<_> = (1..m).map(|v| (0, v)).collect();
    for i in 1..m {
        let next = if i == rim { 1 } else { i + 1 };
        edges.push((i, next));
    }
    make_graph(m, &edges)
}

/// Number of vertices in each blade of `fan(k, r)` excluding the center.
pub fn fan_blade(k_index: usize, r: usize) -> std::ops::RangeInclusive<usize> {
    (1 + k_index * (r - 1))..=((k_index + 1) * (r - 1))
}

/// A graph with a direction pinned on some edges and the rest left free.
/// Hosts the orientation-witness searches and conditioned counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation {
    base: Graph,
    /// Per edge index: `None` free, `Some(bit)` fixed (`bit = false` means
    /// the edge `(u, v)` with `u < v` is directed `u -> v`).
    fixed: Vec<Option<bool>>,
}

impl PartialOrientation {
    pub fn all_free(base: Graph) -> PartialOrientation {
        let fixed = vec![None; base.m()];
        PartialOrientation { base, fixed }
    }

    pub fn from_fixed(base: Graph, fixed: &[(usize, bool)]) -> Result<PartialOrientation, GraphError> {
        let mut v = vec![None; base.m()];
        for &(i, bit) in fixed {
            if i >= base.m() {
                return Err(GraphError::EdgeIndexOutOfRange { index: i, m: base.m() });
            }
            if v[i].is_some() {
                let (a, b) = base.edges()[i];
                return Err(GraphError::DuplicateEdge(a, b));
            }
            v[i] = Some(bit);
        }
        Ok(PartialOrientation { base, fixed: v })
    }

    /// Fixes each arc `(a, b)` as the direction of the base edge `{a, b}`.
    pub fn fix_arcs(base: Graph, arcs: &[(usize, usize)]) -> Result<PartialOrientation, GraphError> {
        let mut fixed = Vec::with_capacity(arcs.len());
        for &(a, b) in arcs {
            let i = base
                .edge_index(a, b)
                .ok_or(GraphError::EdgeIndexOutOfRange { index: usize::MAX, m: base.m() })?;
            fixed.push((i, a > b));
        }
        PartialOrientation::from_fixed(base, &fixed)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn fixed_direction(&self, edge: usize) -> Option<bool> {
        self.fixed[edge]
    }

    pub fn free_edges(&self) -> Vec<usize> {
        (0..self.base.m()).filter(|&i| self.fixed[i].is_none()).collect()
    }

    pub fn fixed_edges(&self) -> Vec<(usize, bool)> {
        self.fixed
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.map(|bit| (i, bit)))
            .collect()
    }

    /// Bitset of `w` with a fixed arc `v -> w`.
    pub fn fixed_out_mask(&self, v: usize) -> u64 {
        let mut m = 0;
        for (i, bit) in self.fixed.iter().enumerate() {
            if let Some(bit) = bit {
                let (a, b) = self.base.edges()[i];
                let (from, to) = if *bit { (b, a) } else { (a, b) };
                if from == v {
                    m |= 1 << to;
                }
            }
        }
        m
    }

    /// Bitset of `w` with a fixed arc `w -> v`.
    pub fn fixed_in_mask(&self, v: usize) -> u64 {
        let mut m = 0;
        for (i, bit) in self.fixed.iter().enumerate() {
            if let Some(bit) = bit {
                let (a, b) = self.base.edges()[i];
                let (from, to) = if *bit { (b, a) } else { (a, b) };
                if to == v {
                    m |= 1 << from;
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_normalizes() {
        let g = make_graph(2, &[(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        let k3 = make_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
    }

    #[test]
    fn make_graph_rejects() {
        assert_eq!(make_graph(3, &[(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(make_graph(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(make_graph(0, &[]), Err(GraphError::VertexCount(0))));
        assert!(matches!(make_graph(65, &[]), Err(GraphError::VertexCount(65))));
        assert!(matches!(make_graph(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn digraph_rejects_bidirected() {
        assert_eq!(make_digraph(2, &[(0, 1), (1, 0)]), Err(GraphError::BidirectedPair(0, 1)));
        let d = make_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(d.underlying().m(), 3);
        assert_eq!(d.reverse().arcs(), &[(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn named_families() {
        assert_eq!(turan(5, 2).unwrap().m(), 6);
        let b = bowtie();
        assert_eq!((b.n(), b.m(), b.degree(0)), (5, 6, 4));
        let w = wheel(7).unwrap();
        assert_eq!((w.n(), w.m()), (7, 12));
        assert_eq!(star(3).degree(0), 3);
        assert_eq!(path(3).m(), 2);
        assert_eq!(matching(2).m(), 2);
        assert!(wheel(6).is_err());
        let f = fan(2, 4).unwrap();
        assert_eq!((f.n(), f.m(), f.degree(0)), (7, 12, 6));
    }

    #[test]
    fn join_counts() {
        let k2 = join(&complete(1), &complete(1)).unwrap();
        assert_eq!(k2.m(), 1);
        let k33 = join(&empty(3), &empty(3)).unwrap();
        assert_eq!(k33.m(), 9);
        let j = join(&complete(2), &empty(2)).unwrap();
        assert_eq!(j.m(), 1 + 4);
    }

    #[test]
    fn turan_count_small() {
        assert_eq!(turan_count(5, 2), 6);
        assert_eq!(turan_count(4, 2), 4);
        assert_eq!(turan_count(7, 2), 12);
        assert_eq!(turan_count(0, 3), 0);
        for n in 1..=10u64 {
            for p in 1..=4u64 {
                let g = turan(n as usize, p as usize).unwrap();
                assert_eq!(g.m() as u64, turan_count(n, p), "t({n},{p})");
            }
        }
    }

    #[test]
    fn h_values() {
        assert_eq!(h_of_k(1), 0);
        assert_eq!(h_of_k(2), 1);
        assert_eq!(h_of_k(3), 6);
        assert_eq!(h_of_k(4), 10);
    }

    #[test]
    fn chromatic_small() {
        assert_eq!(chromatic_number(&bowtie()), 3);
        assert_eq!(chromatic_number(&wheel(7).unwrap()), 3);
        assert_eq!(chromatic_number(&turan(6, 3).unwrap()), 3);
        assert_eq!(chromatic_number(&empty(4)), 1);
        assert_eq!(chromatic_number(&complete(5)), 5);
        for n in 2..=8 {
            for p in 1..=n.min(4) {
                assert_eq!(chromatic_number(&turan(n, p).unwrap()), p, "chi(T({n},{p}))");
            }
        }
    }

    #[test]
    fn optimal_partition_examples() {
        let (_, c) = optimal_partition(&complete(4), 2).unwrap();
        assert_eq!(c, 2);
        let (_, c) = optimal_partition(&turan(6, 2).unwrap(), 2).unwrap();
        assert_eq!(c, 0);
        let (part, c) = optimal_partition(&bowtie(), 2).unwrap();
        assert_eq!(c, 2);
        assert_eq!(part.within_edges(&bowtie()), 2);
    }

    #[test]
    fn optimal_partition_matches_exhaustive() {
        // every partition into <= p parts, counted directly
        fn brute(g: &Graph, p: usize) -> usize {
            fn go(g: &Graph, p: usize, assign: &mut Vec<usize>, v: usize, best: &mut usize) {
                if v == g.n() {
                    let cost = g
                        .edges()
                        .iter()
                        .filter(|&&(a, b)| assign[a] == assign[b])
                        .count();
                    *best = (*best).min(cost);
                    return;
                }
                for c in 0..p {
                    assign[v] = c;
                    go(g, p, assign, v + 1, best);
                }
            }
            let mut best = usize::MAX;
            go(g, p, &mut vec![0; g.n()], 0, &mut best);
            best
        }
        let cases = [
            complete(5),
            bowtie(),
            wheel(7).unwrap(),
            path(6),
            cycle(7).unwrap(),
            turan(8, 3).unwrap(),
            complete(8),
        ];
        for g in &cases {
            for p in 1..=3 {
                let (part, c) = optimal_partition(g, p).unwrap();
                assert_eq!(c, brute(g, p));
                assert_eq!(part.within_edges(g), c);
            }
        }
    }

    #[test]
    fn canonical_form_separates_and_unifies() {
        let p3 = path(3);
        let relabeled = p3.relabel(&[2, 0, 1]);
        assert_eq!(canonical_form(&p3).unwrap(), canonical_form(&relabeled).unwrap());
        assert_ne!(canonical_form(&complete(3)).unwrap(), canonical_form(&p3).unwrap());
        assert_ne!(canonical_form(&star(3)).unwrap(), canonical_form(&path(4)).unwrap());
    }

    #[test]
    fn canonical_form_survives_100_random_relabelings() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for g in [bowtie(), wheel(7).unwrap(), path(6), turan(6, 3).unwrap(), star(5)] {
            let label = canonical_form(&g).unwrap();
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), label);
            }
        }
    }

    #[test]
    fn canonical_form_separates_4_vertex_classes() {
        use std::collections::HashSet;
        let mut labels = HashSet::new();
        for bits in 0u32..64 {
            let all = complete(4).edges().to_vec();
            let edges: Vec<_> =
                (0..6).filter(|i| (bits >> i) & 1 == 1).map(|i| all[i]).collect();
            let g = make_graph(4, &edges).unwrap();
            labels.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(labels.len(), 11); // the 11 graphs on 4 vertices
    }

    #[test]
    fn pure_pair_examples() {
        // K2,2 between {0,1} and {2,3}, all four arcs into the first side
        let d = make_digraph(4, &[(2, 0), (2, 1), (3, 0), (3, 1)]).unwrap();
        assert!(d.is_pure_pair(0b0011, 0b1100, 0).unwrap());
        // one each way
        let d = make_digraph(4, &[(2, 0), (1, 3)]).unwrap();
        assert!(!d.is_pure_pair(0b0011, 0b1100, 0).unwrap());
        assert!(d.is_pure_pair(0b0011, 0b1100, 1).unwrap());
        assert!(d.is_pure_pair(0b0011, 0b0100, 0).is_ok());
        assert!(d.is_pure_pair(0b0011, 0b0010, 0).is_err());
    }

    #[test]
    fn max_matching_small() {
        assert_eq!(path(5).max_matching(), 2);
        assert_eq!(path(6).max_matching(), 3);
        assert_eq!(cycle(5).unwrap().max_matching(), 2);
        assert_eq!(matching(3).max_matching(), 3);
        assert_eq!(bowtie().max_matching(), 2);
    }
}
