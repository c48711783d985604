//! Subgraph containment and embedding enumeration.
//!
//! All three hosts (undirected, directed, partially oriented) share one
//! backtracking scheme: place pattern vertices one at a time, keeping the
//! candidate set for the next vertex as a bitset intersection over the
//! already-placed neighbors. Patterns here never exceed a handful of
//! vertices, so this is plenty.

use crate::graph::{Digraph, Graph, PartialOrientation};

/// An injective vertex assignment from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

/// All injective maps sending pattern edges onto host edges, in
/// lexicographic order of the assignment vector. Each automorphic image is
/// counted separately. `limit` truncates the enumeration.
pub fn embeddings_undirected(pattern: &Graph, host: &Graph, limit: Option<usize>) -> Vec<Embedding> {
    let mut out = Vec::new();
    if pattern.n() > host.n() {
        return out;
    }
    let cap = limit.unwrap_or(usize::MAX);
    if cap == 0 {
        return out;
    }
    let pn = pattern.n();
    let mut map = vec![0usize; pn];
    let mut used: u64 = 0;
    // backtrack in natural pattern-vertex order so output is lex sorted
    fn go(
        pattern: &Graph,
        host: &Graph,
        map: &mut Vec<usize>,
        used: &mut u64,
        i: usize,
        cap: usize,
        out: &mut Vec<Embedding>,
    ) -> bool {
        if i == pattern.n() {
            out.push(Embedding { map: map.clone() });
            return out.len() >= cap;
        }
        let mut cands = !*used & (u64::MAX >> (64 - host.n() as u32));
        for (j, &image) in map.iter().enumerate().take(i) {
            if pattern.has_edge(i, j) {
                cands &= host.adj(image);
            }
        }
        let pdeg = pattern.degree(i);
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if host.degree(v) < pdeg {
                continue;
            }
            map[i] = v;
            *used |= 1 << v;
            let full = go(pattern, host, map, used, i + 1, cap, out);
            *used &= !(1 << v);
            if full {
                return true;
            }
        }
        false
    }
    go(pattern, host, &mut map, &mut used, 0, cap, &mut out);
    out
}

/// Containment shortcut for undirected patterns.
pub fn contains_undirected(host: &Graph, pattern: &Graph) -> bool {
    !embeddings_undirected(pattern, host, Some(1)).is_empty()
}

fn degree_order(n: usize, deg: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));
    order
}

/// True iff an injective map sends every pattern arc onto a host arc with
/// matching direction.
#[allow(clippy::needless_range_loop)]
pub fn contains_directed(host: &Digraph, pattern: &Digraph) -> bool {
    if pattern.n() > host.n() {
        return false;
    }
    let hn = host.n();
    let out_mask: Vec<u64> = (0..hn).map(|v| host.out_adj(v)).collect();
    let in_mask: Vec<u64> = (0..hn).map(|v| host.in_adj(v)).collect();
    let p_out: Vec<u64> = (0..pattern.n()).map(|v| pattern.out_adj(v)).collect();
    let p_in: Vec<u64> = (0..pattern.n()).map(|v| pattern.in_adj(v)).collect();
    let order = degree_order(pattern.n(), |v| {
        (p_out[v].count_ones() + p_in[v].count_ones()) as usize
    });
    let full = if hn == 64 { u64::MAX } else { (1u64 << hn) - 1 };
    let mut map = vec![usize::MAX; pattern.n()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        order: &[usize],
        i: usize,
        map: &mut Vec<usize>,
        used: u64,
        full: u64,
        p_out: &[u64],
        p_in: &[u64],
        out_mask: &[u64],
        in_mask: &[u64],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let mut cands = !used & full;
        for j in 0..i {
            let y = order[j];
            if (p_out[x] >> y) & 1 == 1 {
                // pattern arc x -> y: image must be an in-neighbor of map[y]
                cands &= in_mask[map[y]];
            }
            if (p_in[x] >> y) & 1 == 1 {
                cands &= out_mask[map[y]];
            }
        }
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if out_mask[v].count_ones() < p_out[x].count_ones()
                || in_mask[v].count_ones() < p_in[x].count_ones()
            {
                continue;
            }
            map[x] = v;
            if go(order, i + 1, map, used | (1 << v), full, p_out, p_in, out_mask, in_mask) {
                return true;
            }
        }
        false
    }
    go(&order, 0, &mut map, 0, full, &p_out, &p_in, &out_mask, &in_mask)
}

/// Flexible containment: pattern arcs on fixed host edges must match the
/// fixed direction, arcs on free host edges are unconstrained. Injectivity
/// means each host edge carries at most one pattern arc, so free edges can
/// never conflict.
#[allow(clippy::needless_range_loop)]
pub fn contains_directed_flexible(host: &PartialOrientation, pattern: &Digraph) -> bool {
    let base = host.base();
    if pattern.n() > base.n() {
        return false;
    }
    let hn = base.n();
    let adj: Vec<u64> = (0..hn).map(|v| base.adj(v)).collect();
    let fixed_out: Vec<u64> = (0..hn).map(|v| host.fixed_out_mask(v)).collect();
    let fixed_in: Vec<u64> = (0..hn).map(|v| host.fixed_in_mask(v)).collect();
    let p_out: Vec<u64> = (0..pattern.n()).map(|v| pattern.out_adj(v)).collect();
    let p_in: Vec<u64> = (0..pattern.n()).map(|v| pattern.in_adj(v)).collect();
    let order = degree_order(pattern.n(), |v| {
        (p_out[v].count_ones() + p_in[v].count_ones()) as usize
    });
    let full = if hn == 64 { u64::MAX } else { (1u64 << hn) - 1 };
    let mut map = vec![usize::MAX; pattern.n()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        order: &[usize],
        i: usize,
        map: &mut Vec<usize>,
        used: u64,
        full: u64,
        p_out: &[u64],
        p_in: &[u64],
        adj: &[u64],
        fixed_out: &[u64],
        fixed_in: &[u64],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let x = order[i];
        let mut cands = !used & full;
        for j in 0..i {
            let y = order[j];
            let w = map[y];
            if (p_out[x] >> y) & 1 == 1 {
                // need host arc image(x) -> w: edge present, not fixed w -> image(x)
                cands &= adj[w] & !fixed_out[w];
            }
            if (p_in[x] >> y) & 1 == 1 {
                cands &= adj[w] & !fixed_in[w];
            }
        }
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            map[x] = v;
            if go(order, i + 1, map, used | (1 << v), full, p_out, p_in, adj, fixed_out, fixed_in) {
                return true;
            }
        }
        false
    }
    go(&order, 0, &mut map, 0, full, &p_out, &p_in, &adj, &fixed_out, &fixed_in)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, make_digraph, make_graph};
    use itertools::Itertools;

    fn brute_embeddings(pattern: &Graph, host: &Graph) -> usize {
        (0..host.n())
            .permutations(pattern.n())
            .filter(|map| {
                pattern
                    .edges()
                    .iter()
                    .all(|&(a, b)| host.has_edge(map[a], map[b]))
            })
            .count()
    }

    #[test]
    fn embedding_counts() {
        assert_eq!(
            embeddings_undirected(&graph::complete(3), &graph::complete(4), None).len(),
            24
        );
        assert_eq!(
            embeddings_undirected(&graph::matching(2), &graph::star(3), None).len(),
            0
        );
        assert_eq!(
            embeddings_undirected(&graph::path(3), &graph::complete(3), None).len(),
            6
        );
    }

    #[test]
    fn embeddings_lex_order_and_limit() {
        let all = embeddings_undirected(&graph::path(3), &graph::complete(3), None);
        let maps: Vec<_> = all.iter().map(|e| e.map.clone()).collect();
        let mut sorted = maps.clone();
        sorted.sort();
        assert_eq!(maps, sorted);
        let two = embeddings_undirected(&graph::path(3), &graph::complete(3), Some(2));
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].map, maps[0]);
        assert_eq!(two[1].map, maps[1]);
    }

    #[test]
    fn embeddings_match_brute_force() {
        let hosts = [
            graph::complete(5),
            graph::bowtie(),
            graph::wheel(7).unwrap(),
            graph::turan(6, 2).unwrap(),
            graph::path(6),
        ];
        let patterns = [
            graph::complete(3),
            graph::path(4),
            graph::star(3),
            graph::matching(2),
            graph::cycle(4).unwrap(),
        ];
        for h in &hosts {
            for p in &patterns {
                if p.n() <= h.n() && h.n() <= 6 {
                    assert_eq!(
                        embeddings_undirected(p, h, None).len(),
                        brute_embeddings(p, h),
                        "pattern {p:?} host {h:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn embedding_count_is_images_times_automorphisms() {
        // |embeddings| = |pattern-isomorphic subgraph images| * |Aut(pattern)|
        let host = graph::complete(5);
        let pattern = graph::cycle(4).unwrap();
        let embeddings = embeddings_undirected(&pattern, &host, None).len();
        let aut = brute_embeddings(&pattern, &pattern);
        let mut images = std::collections::HashSet::new();
        for e in embeddings_undirected(&pattern, &host, None) {
            let mut edges: Vec<_> = pattern
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (e.map[a], e.map[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            images.insert(edges);
        }
        assert_eq!(embeddings, images.len() * aut);
    }

    #[test]
    fn directed_triangles() {
        let cyc = make_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let trans = make_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(contains_directed(&cyc, &cyc));
        assert!(!contains_directed(&trans, &cyc));
        assert!(contains_directed(&trans, &trans));
        assert!(!contains_directed(&cyc, &trans));
    }

    #[test]
    fn every_4_tournament_has_transitive_triangle() {
        let trans = make_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        for bits in 0u32..64 {
            let arcs: Vec<_> = pairs
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if (bits >> i) & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            let t = make_digraph(4, &arcs).unwrap();
            assert!(contains_directed(&t, &trans), "tournament {bits:06b}");
        }
    }

    #[test]
    fn reversal_preserves_containment() {
        let host = make_digraph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (4, 0), (3, 4)]).unwrap();
        let pats = [
            make_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            make_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            make_digraph(2, &[(0, 1)]).unwrap(),
            make_digraph(4, &[(0, 1), (2, 1), (2, 3)]).unwrap(),
        ];
        for p in &pats {
            assert_eq!(
                contains_directed(&host, p),
                contains_directed(&host.reverse(), &p.reverse())
            );
        }
    }

    #[test]
    fn flexible_host_examples() {
        // K3 all free contains the cyclic triangle
        let cyc = make_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let free = PartialOrientation::all_free(graph::complete(3));
        assert!(contains_directed_flexible(&free, &cyc));
        // K3 fixed transitively does not
        let fixed =
            PartialOrientation::fix_arcs(graph::complete(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!contains_directed_flexible(&fixed, &cyc));
        // zero free edges coincides with contains_directed
        let host_d = make_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let trans = make_digraph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            contains_directed_flexible(&fixed, &trans),
            contains_directed(&host_d, &trans)
        );
    }

    #[test]
    fn flexible_with_all_edges_fixed_matches_directed() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let n = rng.gen_range(3..=6);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    match rng.gen_range(0..3) {
                        0 => arcs.push((u, v)),
                        1 => arcs.push((v, u)),
                        _ => {}
                    }
                }
            }
            if arcs.is_empty() {
                continue;
            }
            let host = make_digraph(n, &arcs).unwrap();
            let fixed =
                PartialOrientation::fix_arcs(host.underlying(), host.arcs()).unwrap();
            let pn = rng.gen_range(2..=3);
            let mut parcs = Vec::new();
            for u in 0..pn {
                for v in u + 1..pn {
                    match rng.gen_range(0..3) {
                        0 => parcs.push((u, v)),
                        1 => parcs.push((v, u)),
                        _ => {}
                    }
                }
            }
            let pattern = make_digraph(pn, &parcs).unwrap();
            assert_eq!(
                contains_directed_flexible(&fixed, &pattern),
                contains_directed(&host, &pattern),
                "host {host:?} pattern {pattern:?}"
            );
        }
    }

    #[test]
    fn flexible_star_example() {
        // S_3 fixed with both arcs into the center plus two free pendant
        // edges on a fourth vertex; out-star pattern needs free edges only.
        let base = make_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 3)]).unwrap();
        let host = PartialOrientation::fix_arcs(base, &[(1, 0), (2, 0)]).unwrap();
        let out_star = make_digraph(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(contains_directed_flexible(&host, &out_star));
        // without the extra free edges there is no all-out center
        let bare = PartialOrientation::fix_arcs(
            make_graph(3, &[(0, 1), (0, 2)]).unwrap(),
            &[(1, 0), (2, 0)],
        )
        .unwrap();
        assert!(!contains_directed_flexible(&bare, &out_star));
    }
}
