//! Brute-force extremal numbers and brute-force maximization of the
//! forbidden-orientation count over all graphs on n vertices.
//!
//! `extremal_number` sweeps labeled graphs by descending edge count and
//! stops at the first level holding a family-free graph; everything above
//! that level has been checked, which is the certificate. `max_d` walks the
//! isomorphism classes by descending edge count and prunes with the trivial
//! bound D(G) <= 2^{e(G)}; the prune can be switched off to cross-check.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::embed::contains_undirected;
use crate::error::CapacityError;
use crate::graph::{canonical_mask, graph_from_mask, Graph};
use crate::orient::{count_hfree_unchecked, forbidden_patterns, CountResult, EngineConfig};

pub const EXTREMAL_MAX_N: usize = 7;
pub const MAXD_MAX_N: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub max_edges: usize,
    /// Family-free graphs with `max_edges` edges, up to isomorphism, in
    /// canonical-label order.
    pub witnesses: Vec<Graph>,
    pub family: Vec<Graph>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxDResult {
    pub n: usize,
    #[serde(serialize_with = "crate::extremal::ser_biguint")]
    pub max_count: BigUint,
    pub witnesses: Vec<Graph>,
}

pub(crate) fn ser_biguint<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// The Turan-style extremal number of a forbidden family: maximum edge count
/// of an n-vertex graph containing no member, plus every witness attaining
/// it. Exhaustive over all labeled graphs with at least `max_edges` edges.
pub fn extremal_number(n: usize, family: &[Graph]) -> Result<ExtremalResult, CapacityError> {
    if n > EXTREMAL_MAX_N {
        return Err(CapacityError::new(
            format!("extremal search on {n} vertices"),
            format!("{EXTREMAL_MAX_N} vertices"),
            "the labeled sweep is 2^(n choose 2); pass --force to run anyway",
        ));
    }
    Ok(extremal_number_unchecked(n, family, &mut |_, _| {}))
}

/// Envelope-free variant; `progress(edge_count, graphs_scanned)` fires once
/// per finished level.
pub fn extremal_number_unchecked(
    n: usize,
    family: &[Graph],
    progress: &mut dyn FnMut(usize, u64),
) -> ExtremalResult {
    let all_pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let max_m = all_pairs.len();
    let relevant: Vec<&Graph> = family.iter().filter(|f| f.n() <= n).collect();
    for m in (0..=max_m).rev() {
        let mut witness_masks = std::collections::BTreeSet::new();
        let mut scanned = 0u64;
        let mut chosen = vec![0usize; m];
        edge_subsets(&all_pairs, m, &mut chosen, 0, 0, &mut |edges| {
            scanned += 1;
            let g = crate::graph::make_graph(n, edges).expect("valid subset");
            if relevant.iter().all(|f| !contains_undirected(&g, f)) {
                witness_masks.insert(canonical_mask(&g).expect("n <= 10"));
            }
        });
        progress(m, scanned);
        if !witness_masks.is_empty() {
            let witnesses: Vec<Graph> =
                witness_masks.iter().map(|&mask| graph_from_mask(n, mask)).collect();
            return ExtremalResult { n, max_edges: m, witnesses, family: family.to_vec() };
        }
    }
    unreachable!("the empty graph is always family-free")
}

type SubsetVisitor<'a> = &'a mut dyn FnMut(&[(usize, usize)]);

fn edge_subsets(
    pairs: &[(usize, usize)],
    m: usize,
    chosen: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: SubsetVisitor<'_>,
) {
    if depth == m {
        let edges: Vec<(usize, usize)> = chosen.iter().map(|&i| pairs[i]).collect();
        f(&edges);
        return;
    }
    for i in start..=pairs.len() - (m - depth) {
        chosen[depth] = i;
        edge_subsets(pairs, m, chosen, depth + 1, i + 1, f);
    }
}

/// The maximum of D(G, H) over all graphs on n vertices, with every witness
/// class attaining it. Witnesses are reported without isolated vertices
/// (isolated vertices never change the count).
pub fn max_d(n: usize, h: &crate::graph::Digraph, cfg: &EngineConfig) -> Result<MaxDResult, CapacityError> {
    if n > MAXD_MAX_N {
        return Err(CapacityError::new(
            format!("orientation-count maximization on {n} vertices"),
            format!("{MAXD_MAX_N} vertices"),
            "each isomorphism class costs an exact count; pass --force to run anyway",
        ));
    }
    Ok(max_d_unchecked(n, h, cfg, true, &mut |_, _| {}))
}

/// Envelope-free variant. `prune` switches the 2^m upper-bound skip; results
/// must not depend on it. `progress(edge_count, classes_at_level)` fires per
/// level.
pub fn max_d_unchecked(
    n: usize,
    h: &crate::graph::Digraph,
    cfg: &EngineConfig,
    prune: bool,
    progress: &mut dyn FnMut(usize, usize),
) -> MaxDResult {
    let mut classes = crate::enumerate::nonisolated_classes(n, None);
    classes.retain(|g| g.n() <= n);
    // group by edge count, descending; the empty graph contributes 2^0
    let max_m = n * (n - 1) / 2;
    let mut by_edges: Vec<Vec<Graph>> = vec![Vec::new(); max_m + 1];
    for g in classes {
        by_edges[g.m()].push(g);
    }
    let mut best = BigUint::one(); // the empty graph
    let mut witnesses: Vec<Graph> = vec![crate::graph::empty(1)];
    for m in (1..=max_m).rev() {
        let level = &by_edges[m];
        if level.is_empty() {
            continue;
        }
        progress(m, level.len());
        let bound = BigUint::one() << m;
        if prune && bound < best {
            continue; // no graph at this level can reach the running maximum
        }
        let results: Vec<(usize, BigUint)> = count_level(level, h, cfg, prune, &bound, &best);
        for (idx, d) in results {
            match d.cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = d;
                    witnesses = vec![level[idx].clone()];
                }
                std::cmp::Ordering::Equal => witnesses.push(level[idx].clone()),
                std::cmp::Ordering::Less => {}
            }
        }
    }
    witnesses.sort_by_key(|g| (g.n(), canonical_mask(g).expect("n <= 10")));
    witnesses.dedup();
    MaxDResult { n, max_count: best, witnesses }
}

/// Exact counts for one edge-count level, split across workers. The merge
/// is by class index, so the outcome is independent of scheduling.
fn count_level(
    level: &[Graph],
    h: &crate::graph::Digraph,
    cfg: &EngineConfig,
    prune: bool,
    bound: &BigUint,
    best: &BigUint,
) -> Vec<(usize, BigUint)> {
    let one_class = |idx: usize, g: &Graph| -> Option<(usize, BigUint)> {
        if prune && bound == best {
            // only an H-free graph can tie the bound here
            if !forbidden_patterns(g, h).is_empty() {
                return None;
            }
            return Some((idx, bound.clone()));
        }
        let r: CountResult = count_hfree_unchecked(g, h, &EngineConfig::default());
        Some((idx, r.hfree))
    };
    if cfg.workers <= 1 {
        return level.iter().enumerate().filter_map(|(i, g)| one_class(i, g)).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut chunks: Vec<Vec<(usize, BigUint)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= level.len() {
                            break;
                        }
                        if let Some(r) = one_class(i, &level[i]) {
                            local.push(r);
                        }
                    }
                    local
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("max_d worker panicked")).collect()
    });
    let mut all: Vec<(usize, BigUint)> = chunks.drain(..).flatten().collect();
    all.sort_by_key(|&(i, _)| i);
    all
}

/// The universal lower bound: an extremal H-free witness realizes exactly
/// 2^(ex) orientation-free orientations. Returns the exponent and witness.
pub fn lower_bound_check(
    n: usize,
    h: &crate::graph::Digraph,
) -> Result<(usize, Graph), CapacityError> {
    let ex = extremal_number(n, &[h.underlying()])?;
    let witness = ex.witnesses.first().expect("extremal search always yields a witness").clone();
    let count = count_hfree_unchecked(&witness, h, &EngineConfig::default());
    assert_eq!(
        count.hfree,
        BigUint::one() << ex.max_edges,
        "an H-free witness must have every orientation H-free"
    );
    Ok((ex.max_edges, witness))
}
