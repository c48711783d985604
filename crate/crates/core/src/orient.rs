//! Exact and sampled counting of forbidden-pattern-free orientations.
//!
//! Containment of a directed pattern H in an orientation of G reduces to a
//! set of [`ForbiddenPattern`]s, one per embedding of H's arc set into G: an
//! orientation contains H iff it extends some pattern. Counting then avoids
//! every pattern at once by backtracking over edge assignments. A pattern is
//! dead once any of its literals is violated; a node is pruned as soon as
//! some pattern has every literal satisfied; once every pattern is dead the
//! remaining edges are free and contribute a full power of two.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embed::{contains_directed, embeddings_undirected};
use crate::error::{CapacityError, GraphError};
use crate::graph::{make_digraph, Digraph, Graph, PartialOrientation};

/// Exact-engine envelope: edge counts above this get a capacity error
/// suggesting Monte Carlo.
pub const EXACT_MAX_EDGES: usize = 40;

/// Envelope of the independent all-orientations oracle.
pub const NAIVE_MAX_EDGES: usize = 24;

/// An assignment of a direction to every edge of a base graph. Bit `i = 0`
/// means edge `i = (u, v)` with `u < v` is directed `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    m: usize,
    bits: Vec<u64>,
}

impl Orientation {
    pub fn zero(m: usize) -> Orientation {
        Orientation { m, bits: vec![0; m.div_ceil(64)] }
    }

    /// Orientation of up to 64 edges from a packed word.
    pub fn from_u64(m: usize, word: u64) -> Orientation {
        assert!(m <= 64);
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        Orientation { m, bits: vec![word & mask] }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        (self.bits[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set_bit(&mut self, i: usize, v: bool) {
        if v {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    /// The directed graph this orientation induces on `base`.
    pub fn to_digraph(&self, base: &Graph) -> Digraph {
        assert_eq!(self.m, base.m(), "orientation length must match edge count");
        let arcs: Vec<(usize, usize)> = base
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if self.bit(i) { (v, u) } else { (u, v) })
            .collect();
        make_digraph(base.n(), &arcs).expect("orienting a valid graph")
    }
}

/// True iff all but at most `slack` of the oriented edges between `u_set`
/// and `v_set` point into one side.
pub fn is_pure_pair(
    base: &Graph,
    o: &Orientation,
    u_set: u64,
    v_set: u64,
    slack: usize,
) -> Result<bool, GraphError> {
    o.to_digraph(base).is_pure_pair(u_set, v_set, slack)
}

/// A set of (edge index, direction bit) literals, at most one per edge. An
/// orientation contains the source pattern iff it satisfies every literal of
/// some pattern.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForbiddenPattern {
    literals: Vec<(usize, bool)>,
}

impl ForbiddenPattern {
    pub fn new(mut literals: Vec<(usize, bool)>) -> ForbiddenPattern {
        literals.sort_unstable();
        literals.dedup();
        debug_assert!(
            literals.windows(2).all(|w| w[0].0 != w[1].0),
            "contradictory duplicate literals"
        );
        ForbiddenPattern { literals }
    }

    pub fn literals(&self) -> &[(usize, bool)] {
        &self.literals
    }

    pub fn matches(&self, o: &Orientation) -> bool {
        self.literals.iter().all(|&(e, b)| o.bit(e) == b)
    }
}

/// One pattern per injective map of V(H) into V(G) whose underlying edges
/// all exist in G; exact duplicates (automorphic images of H) are collapsed.
/// Sorted, so the order is deterministic. An empty result means G is H-free
/// as an undirected graph.
pub fn forbidden_patterns(g: &Graph, h: &Digraph) -> Vec<ForbiddenPattern> {
    let underlying = h.underlying();
    let mut set = std::collections::BTreeSet::new();
    for emb in embeddings_undirected(&underlying, g, None) {
        let lits: Vec<(usize, bool)> = h
            .arcs()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (emb.map[a], emb.map[b]);
                let e = g.edge_index(x, y).expect("embedding lands on edges");
                (e, x > y)
            })
            .collect();
        set.insert(ForbiddenPattern::new(lits));
    }
    set.into_iter().collect()
}

/// Worker count and tree-split depth for the exact engine. Results are
/// identical at every worker count.
#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    pub workers: usize,
    pub split_depth: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { workers: 1, split_depth: 8 }
    }
}

impl EngineConfig {
    pub fn with_workers(workers: usize) -> EngineConfig {
        EngineConfig { workers: workers.max(1), ..EngineConfig::default() }
    }
}

struct Engine {
    m: usize,
    // per processing position, per direction bit: ids of patterns holding
    // that literal
    occ: Vec<[Vec<u32>; 2]>,
    lens: Vec<u32>,
}

#[derive(Clone)]
struct EngineState {
    sat: Vec<u32>,
    dead: Vec<bool>,
    dead_count: usize,
}

impl Engine {
    /// Reindexes pattern literals onto a processing order that puts the
    /// most-constrained edges first (deterministic: occurrence count, then
    /// edge index).
    fn build(m: usize, patterns: &[ForbiddenPattern]) -> (Engine, EngineState) {
        let mut occurrences = vec![0usize; m];
        for p in patterns {
            for &(e, _) in p.literals() {
                occurrences[e] += 1;
            }
        }
        let mut edge_order: Vec<usize> = (0..m).collect();
        edge_order.sort_by_key(|&e| (std::cmp::Reverse(occurrences[e]), e));
        let mut pos_of = vec![0usize; m];
        for (pos, &e) in edge_order.iter().enumerate() {
            pos_of[e] = pos;
        }
        let mut occ: Vec<[Vec<u32>; 2]> = (0..m).map(|_| [Vec::new(), Vec::new()]).collect();
        let mut lens = Vec::with_capacity(patterns.len());
        for (pid, p) in patterns.iter().enumerate() {
            lens.push(p.literals().len() as u32);
            for &(e, b) in p.literals() {
                occ[pos_of[e]][usize::from(b)].push(pid as u32);
            }
        }
        let state = EngineState {
            sat: vec![0; patterns.len()],
            dead: vec![false; patterns.len()],
            dead_count: 0,
        };
        (Engine { m, occ, lens }, state)
    }

    /// Assigns position `pos` to `bit`. Returns (conflict, killed ids).
    fn apply(&self, st: &mut EngineState, pos: usize, bit: bool) -> (bool, Vec<u32>) {
        let mut conflict = false;
        for &pid in &self.occ[pos][usize::from(bit)] {
            let pid = pid as usize;
            if !st.dead[pid] {
                st.sat[pid] += 1;
                if st.sat[pid] == self.lens[pid] {
                    conflict = true;
                }
            }
        }
        let mut killed = Vec::new();
        for &pid in &self.occ[pos][usize::from(!bit)] {
            let pid_u = pid as usize;
            if !st.dead[pid_u] {
                st.dead[pid_u] = true;
                st.dead_count += 1;
                killed.push(pid);
            }
        }
        (conflict, killed)
    }

    fn undo(&self, st: &mut EngineState, pos: usize, bit: bool, killed: &[u32]) {
        for &pid in killed {
            st.dead[pid as usize] = false;
            st.dead_count -= 1;
        }
        for &pid in &self.occ[pos][usize::from(bit)] {
            let pid = pid as usize;
            if !st.dead[pid] {
                st.sat[pid] -= 1;
            }
        }
    }

    fn descend(&self, st: &mut EngineState, pos: usize) -> u128 {
        if st.dead_count == st.dead.len() {
            return 1u128 << (self.m - pos);
        }
        debug_assert!(pos < self.m, "a live pattern at full depth would have conflicted");
        let mut total = 0u128;
        for bit in [false, true] {
            let (conflict, killed) = self.apply(st, pos, bit);
            if !conflict {
                total += self.descend(st, pos + 1);
            }
            self.undo(st, pos, bit, &killed);
        }
        total
    }

    /// Walks the tree to `split`, banking finished subtrees and collecting
    /// the live frontier as independent tasks.
    fn collect_tasks(
        &self,
        st: &mut EngineState,
        pos: usize,
        split: usize,
        banked: &mut u128,
        tasks: &mut Vec<EngineState>,
    ) {
        if st.dead_count == st.dead.len() {
            *banked += 1u128 << (self.m - pos);
            return;
        }
        if pos == split {
            tasks.push(st.clone());
            return;
        }
        for bit in [false, true] {
            let (conflict, killed) = self.apply(st, pos, bit);
            if !conflict {
                self.collect_tasks(st, pos + 1, split, banked, tasks);
            }
            self.undo(st, pos, bit, &killed);
        }
    }
}

/// Number of orientations of `m` edges extending none of the patterns.
/// Exact, and identical at any worker count.
pub fn count_avoiding(m: usize, patterns: &[ForbiddenPattern], cfg: &EngineConfig) -> u128 {
    assert!(m <= 64, "engine works on word-indexed edges");
    if patterns.iter().any(|p| p.literals().is_empty()) {
        return 0; // an empty pattern is extended by every orientation
    }
    let (engine, mut state) = Engine::build(m, patterns);
    if patterns.is_empty() {
        return 1u128 << m;
    }
    if cfg.workers <= 1 {
        return engine.descend(&mut state, 0);
    }
    let split = cfg.split_depth.min(m);
    let mut banked = 0u128;
    let mut tasks = Vec::new();
    engine.collect_tasks(&mut state, 0, split, &mut banked, &mut tasks);
    let next = std::sync::atomic::AtomicUsize::new(0);
    let sums: Vec<u128> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = 0u128;
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= tasks.len() {
                            break;
                        }
                        let mut st = tasks[i].clone();
                        local += engine.descend(&mut st, split);
                    }
                    local
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("engine worker panicked")).collect()
    });
    banked + sums.iter().sum::<u128>()
}

/// Exact counts plus the containment probability as an exact rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub hfree: BigUint,
    pub total: BigUint,
    pub p_contains: Ratio<BigInt>,
}

impl CountResult {
    fn from_counts(hfree: BigUint, m: usize) -> CountResult {
        let total = BigUint::one() << m;
        let contains = BigInt::from(total.clone() - hfree.clone());
        let p_contains = Ratio::new(contains, BigInt::from(total.clone()));
        CountResult { hfree, total, p_contains }
    }
}

impl Serialize for CountResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CountResult", 3)?;
        st.serialize_field("hfree", &self.hfree.to_string())?;
        st.serialize_field("total", &self.total.to_string())?;
        st.serialize_field(
            "p_contains",
            &format!("{}/{}", self.p_contains.numer(), self.p_contains.denom()),
        )?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CountResult {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            hfree: String,
            total: String,
            p_contains: String,
        }
        use serde::de::Error;
        let raw = Raw::deserialize(d)?;
        let hfree: BigUint = raw.hfree.parse().map_err(D::Error::custom)?;
        let total: BigUint = raw.total.parse().map_err(D::Error::custom)?;
        let (num, den) = raw
            .p_contains
            .split_once('/')
            .ok_or_else(|| D::Error::custom("p_contains must be num/den"))?;
        let p_contains = Ratio::new(
            num.parse::<BigInt>().map_err(D::Error::custom)?,
            den.parse::<BigInt>().map_err(D::Error::custom)?,
        );
        Ok(CountResult { hfree, total, p_contains })
    }
}

fn check_edges(m: usize, limit: usize, what: &str, hint: &str) -> Result<(), CapacityError> {
    if m > limit {
        return Err(CapacityError::new(
            format!("{what} over {m} edges"),
            format!("{limit} edges"),
            hint,
        ));
    }
    Ok(())
}

/// Number of H-free orientations of G, via pattern-avoiding backtracking.
pub fn count_hfree(g: &Graph, h: &Digraph) -> Result<CountResult, CapacityError> {
    count_hfree_with(g, h, &EngineConfig::default())
}

pub fn count_hfree_with(
    g: &Graph,
    h: &Digraph,
    cfg: &EngineConfig,
) -> Result<CountResult, CapacityError> {
    check_edges(g.m(), EXACT_MAX_EDGES, "exact counting", "use Monte Carlo estimation (--mc)")?;
    Ok(count_hfree_unchecked(g, h, cfg))
}

/// Envelope-free variant backing `--force`.
pub fn count_hfree_unchecked(g: &Graph, h: &Digraph, cfg: &EngineConfig) -> CountResult {
    assert!(g.m() <= 64, "the exact engine is word-indexed");
    let patterns = forbidden_patterns(g, h);
    let hfree = count_avoiding(g.m(), &patterns, cfg);
    CountResult::from_counts(BigUint::from(hfree), g.m())
}

/// Independent oracle: iterates every orientation and tests containment by
/// directed subgraph search. Must agree with `count_hfree` everywhere.
pub fn count_hfree_naive(g: &Graph, h: &Digraph) -> Result<CountResult, CapacityError> {
    check_edges(g.m(), NAIVE_MAX_EDGES, "naive counting", "use count_hfree")?;
    let m = g.m();
    let mut hfree = BigUint::zero();
    for word in 0u64..(1u64 << m) {
        let o = Orientation::from_u64(m, word);
        if !contains_directed(&o.to_digraph(g), h) {
            hfree += 1u32;
        }
    }
    Ok(CountResult::from_counts(hfree, m))
}

/// Exact count over assignments of the free edges only, with the fixed arcs
/// frozen. The total is `2^(free edges)`.
pub fn count_hfree_conditioned(
    g: &Graph,
    h: &Digraph,
    fixed: &PartialOrientation,
) -> Result<CountResult, CapacityError> {
    assert_eq!(fixed.base(), g, "fixed set must live on the counted graph");
    check_edges(g.m(), EXACT_MAX_EDGES, "conditioned counting", "use Monte Carlo estimation")?;
    let free = fixed.free_edges();
    let mut index_of_free = vec![usize::MAX; g.m()];
    for (i, &e) in free.iter().enumerate() {
        index_of_free[e] = i;
    }
    let mut reduced: Vec<ForbiddenPattern> = Vec::new();
    'pat: for p in forbidden_patterns(g, h) {
        let mut lits = Vec::new();
        for &(e, b) in p.literals() {
            match fixed.fixed_direction(e) {
                Some(fb) if fb == b => {} // satisfied by the fixed arc
                Some(_) => continue 'pat, // violated: pattern can never fire
                None => lits.push((index_of_free[e], b)),
            }
        }
        if lits.is_empty() {
            // the fixed arcs alone complete a copy of H
            return Ok(CountResult::from_counts(BigUint::zero(), free.len()));
        }
        reduced.push(ForbiddenPattern::new(lits));
    }
    reduced.sort();
    reduced.dedup();
    let hfree = count_avoiding(free.len(), &reduced, &EngineConfig::default());
    Ok(CountResult::from_counts(BigUint::from(hfree), free.len()))
}

/// Monte Carlo estimate of the probability that a uniform orientation
/// contains H, with a rational upper bound on the binomial standard error.
/// Fixed seeds reproduce bit-identical estimates.
pub fn mc_estimate(
    g: &Graph,
    h: &Digraph,
    samples: u64,
    seed: u64,
) -> (Ratio<BigInt>, Ratio<BigInt>) {
    assert!(samples >= 1);
    let m = g.m();
    let words = m.div_ceil(64).max(1);
    let last_mask = if m.is_multiple_of(64) && m > 0 { u64::MAX } else { (1u64 << (m % 64)) - 1 };
    let patterns = forbidden_patterns(g, h);
    // (care, value) word masks per pattern
    let masks: Vec<(Vec<u64>, Vec<u64>)> = patterns
        .iter()
        .map(|p| {
            let mut care = vec![0u64; words];
            let mut val = vec![0u64; words];
            for &(e, b) in p.literals() {
                care[e / 64] |= 1 << (e % 64);
                if b {
                    val[e / 64] |= 1 << (e % 64);
                }
            }
            (care, val)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    let mut buf = vec![0u64; words];
    for _ in 0..samples {
        for w in buf.iter_mut() {
            *w = rng.next_u64();
        }
        if m > 0 {
            buf[words - 1] &= last_mask;
        }
        let contained = masks
            .iter()
            .any(|(care, val)| buf.iter().zip(care).zip(val).all(|((b, c), v)| b & c == *v));
        if contained {
            hits += 1;
        }
    }
    let estimate = Ratio::new(BigInt::from(hits), BigInt::from(samples));
    let variance_num = BigUint::from(hits) * BigUint::from(samples - hits);
    let stderr = if variance_num.is_zero() {
        Ratio::zero()
    } else {
        // smallest k/N^2 with (k/N^2)^2 >= p(1-p)/N, i.e. k = floor(sqrt(c(N-c)N)) + 1
        let k = (variance_num * BigUint::from(samples)).sqrt() + BigUint::one();
        Ratio::new(BigInt::from(k), BigInt::from(BigUint::from(samples).pow(2)))
    };
    (estimate, stderr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, make_graph};

    fn cyc3() -> Digraph {
        make_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn trans3() -> Digraph {
        make_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn pattern_counts() {
        assert_eq!(forbidden_patterns(&graph::complete(3), &cyc3()).len(), 2);
        assert_eq!(forbidden_patterns(&graph::complete(3), &trans3()).len(), 6);
        assert_eq!(forbidden_patterns(&graph::turan(4, 2).unwrap(), &cyc3()).len(), 0);
    }

    #[test]
    fn triangle_counts() {
        let r = count_hfree(&graph::complete(3), &cyc3()).unwrap();
        assert_eq!((r.hfree.to_string().as_str(), r.total.to_string().as_str()), ("6", "8"));
        let r = count_hfree(&graph::complete(3), &trans3()).unwrap();
        assert_eq!(r.hfree, BigUint::from(2u32));
        let r = count_hfree(&graph::complete(4), &cyc3()).unwrap();
        assert_eq!(r.hfree, BigUint::from(24u32));
        assert_eq!(
            r.p_contains,
            Ratio::new(BigInt::from(5), BigInt::from(8)),
        );
    }

    #[test]
    fn single_arc_pattern_kills_every_edge() {
        // a single arc embeds into either orientation of an edge, so no
        // orientation of any graph with an edge avoids it
        let arc = make_digraph(2, &[(0, 1)]).unwrap();
        let r = count_hfree(&graph::complete(2), &arc).unwrap();
        assert!(r.hfree.is_zero());
        assert_eq!(r.hfree, count_hfree_naive(&graph::complete(2), &arc).unwrap().hfree);
        // only the edgeless graph is free
        let r = count_hfree(&graph::empty(3), &arc).unwrap();
        assert_eq!(r.hfree, BigUint::one());
    }

    #[test]
    fn in_star_host_star() {
        // derived by the 8-orientation loop: 4 of 8 survive
        let in_star = make_digraph(3, &[(1, 0), (2, 0)]).unwrap();
        let exact = count_hfree(&graph::star(3), &in_star).unwrap();
        let naive = count_hfree_naive(&graph::star(3), &in_star).unwrap();
        assert_eq!(exact, naive);
        assert_eq!(exact.hfree, BigUint::from(4u32));
    }

    #[test]
    fn naive_agrees_on_bowtie() {
        let b = graph::bowtie();
        let anti = crate::text::named_digraph("bowtie:antidirected").unwrap();
        assert_eq!(
            count_hfree(&b, &anti).unwrap(),
            count_hfree_naive(&b, &anti).unwrap()
        );
    }

    #[test]
    fn empty_pattern_list_gives_full_count() {
        let host = graph::turan(8, 2).unwrap();
        let r = count_hfree(&host, &cyc3()).unwrap();
        assert_eq!(r.hfree, r.total);
        assert!(r.p_contains.is_zero());
    }

    #[test]
    fn conditioned_counts() {
        let g = graph::complete(3);
        // all edges fixed transitively: cyclic triangle absent -> 1
        let po = PartialOrientation::fix_arcs(g.clone(), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = count_hfree_conditioned(&g, &cyc3(), &po).unwrap();
        assert_eq!((r.hfree, r.total), (BigUint::one(), BigUint::one()));
        // all edges fixed cyclically: present -> 0
        let po = PartialOrientation::fix_arcs(g.clone(), &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = count_hfree_conditioned(&g, &cyc3(), &po).unwrap();
        assert_eq!(r.hfree, BigUint::zero());
    }

    #[test]
    fn conditioned_total_law() {
        // summing over all fixations of an edge subset recovers the count
        let g = graph::bowtie();
        let h = crate::text::named_digraph("bowtie:all-in").unwrap();
        let full = count_hfree(&g, &h).unwrap().hfree;
        for subset in [vec![0usize], vec![0, 3], vec![1, 2, 4]] {
            let mut sum = BigUint::zero();
            for bits in 0u64..(1 << subset.len()) {
                let fixed: Vec<(usize, bool)> = subset
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| (e, (bits >> i) & 1 == 1))
                    .collect();
                let po = PartialOrientation::from_fixed(g.clone(), &fixed).unwrap();
                sum += count_hfree_conditioned(&g, &h, &po).unwrap().hfree;
            }
            assert_eq!(sum, full, "subset {subset:?}");
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let g = graph::complete(5);
        let h = cyc3();
        let serial = count_hfree_with(&g, &h, &EngineConfig::with_workers(1)).unwrap();
        for workers in [2, 3, 8] {
            let par = count_hfree_with(&g, &h, &EngineConfig::with_workers(workers)).unwrap();
            assert_eq!(serial, par, "{workers} workers");
        }
    }

    #[test]
    fn capacity_errors() {
        let big = graph::complete(10); // 45 edges
        assert!(count_hfree(&big, &cyc3()).is_err());
        let mid = graph::complete(8); // 28 edges
        assert!(count_hfree_naive(&mid, &cyc3()).is_err());
    }

    #[test]
    fn mc_deterministic_and_exact_on_bipartite() {
        let host = graph::turan(8, 2).unwrap();
        let (est, err) = mc_estimate(&host, &cyc3(), 1000, 7);
        assert!(est.is_zero());
        assert!(err.is_zero());
        let again = mc_estimate(&host, &cyc3(), 1000, 7);
        assert_eq!((est, err), again);
    }

    #[test]
    fn mc_close_to_exact_on_k3() {
        let g = graph::complete(3);
        let (est, err) = mc_estimate(&g, &cyc3(), 100_000, 42);
        let exact = Ratio::new(BigInt::from(1), BigInt::from(4));
        let diff = if est > exact { est.clone() - &exact } else { exact.clone() - &est };
        assert!(diff <= Ratio::from_integer(BigInt::from(5)) * err);
    }

    #[test]
    fn count_result_json_round_trip() {
        let r = count_hfree(&graph::complete(4), &cyc3()).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"{"hfree":"24","total":"64","p_contains":"5/8"}"#);
        let back: CountResult = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), js);
    }

    #[test]
    fn orientation_round_trip() {
        let g = make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let o = Orientation::from_u64(3, 0b101);
        let d = o.to_digraph(&g);
        assert!(d.has_arc(1, 0) && d.has_arc(1, 2) && d.has_arc(3, 2));
    }
}
