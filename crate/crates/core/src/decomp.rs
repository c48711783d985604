//! Decomposition families: the minimal graphs whose placement inside one
//! part of a blown-up complete multipartite host creates the forbidden
//! graph, plus the directed refinements.
//!
//! For a graph H with chromatic number p + 1 >= 3, a candidate M is tested
//! against the host (M plus t isolated vertices) joined to the complete
//! (p-1)-partite graph with t vertices per part. Passing is monotone under
//! adding edges, so the minimal members are exactly the passing candidates
//! none of whose single-edge deletions pass. The default t = |V(H)| is
//! enough: an embedding of H touches at most |V(H)| vertices in any part,
//! so larger t admits no new members (re-verified empirically by the
//! t/t+1 monotonicity test).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::embed::{contains_directed_flexible, contains_undirected, embeddings_undirected, Embedding};
use crate::error::{CapacityError, DecompError, GraphError};
use crate::graph::{
    canonical_form, chromatic_number, fan, fan_blade, Digraph, Graph, PartialOrientation,
};

/// Candidate enumeration is brute force over iso classes, so the forbidden
/// graph is capped here.
pub const DECOMP_MAX_VERTICES: usize = 7;

/// The decomposition family of a graph, with certificates.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyResult {
    /// Canonical representatives, no isolated vertices, pairwise
    /// non-isomorphic, sorted by canonical label.
    pub members: Vec<Graph>,
    /// Chromatic parameter: chi(H) - 1.
    pub p: usize,
    /// Part size used for the hosts.
    pub t_used: usize,
    /// Per member, an embedding of H into that member's host.
    pub witnesses: Vec<Embedding>,
}

/// Directed membership data for one family member.
#[derive(Clone, Debug, Serialize)]
pub struct DirectedFamilyResult {
    pub base: Graph,
    /// Orientation classes of the base (one representative each) admitting
    /// an orientation witness.
    pub member_orientations: Vec<Digraph>,
    /// True iff every orientation class of the base qualifies.
    pub all_orientations_in: bool,
}

/// Host graph: M plus `t` isolated vertices, joined to K_{p-1}(t). M's
/// vertices keep their labels 0..|M|.
pub fn family_host(m: &Graph, p: usize, t: usize) -> Result<Graph, GraphError> {
    let mut sizes = vec![m.n() + t];
    sizes.extend(std::iter::repeat_n(t, p - 1));
    let skeleton = crate::graph::multipartite(&sizes)?;
    let mut edges = skeleton.edges().to_vec();
    edges.extend_from_slice(m.edges());
    crate::graph::make_graph(skeleton.n(), &edges)
}

fn host_contains(h: &Graph, m: &Graph, p: usize, t: usize) -> bool {
    let host = family_host(m, p, t).expect("host within capacity");
    contains_undirected(&host, h)
}

type FamilyCache = Mutex<HashMap<(Vec<u8>, usize), Arc<FamilyResult>>>;

fn cache() -> &'static FamilyCache {
    static CACHE: OnceLock<FamilyCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All minimal graphs M (no isolated vertices, at most |V(H)| of them) such
/// that M's host contains H. Results are cached per (canonical H, t).
pub fn decomposition_family(h: &Graph, t: Option<usize>) -> Result<Arc<FamilyResult>, DecompError> {
    let chi = chromatic_number(h);
    if chi < 3 {
        return Err(DecompError::ChromaticTooSmall(chi));
    }
    if h.n() > DECOMP_MAX_VERTICES {
        return Err(DecompError::Capacity(CapacityError::new(
            format!("decomposition family of a {}-vertex graph", h.n()),
            format!("{DECOMP_MAX_VERTICES} vertices"),
            "candidate enumeration is brute force",
        )));
    }
    let t = t.unwrap_or(h.n());
    let key = (canonical_form(h).expect("within canonical envelope"), t);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    let p = chi - 1;
    // candidates in increasing edge order; a minimal member is an induced
    // piece of H, so |V| <= |V(H)| and |E| <= |E(H)|
    let candidates = crate::enumerate::nonisolated_classes(h.n(), Some(h.m()));
    let mut members: Vec<Graph> = Vec::new();
    for cand in &candidates {
        // containment is up-closed: anything over an already-found member
        // passes and cannot be minimal
        if members.iter().any(|m| contains_undirected(cand, m)) {
            continue;
        }
        if host_contains(h, cand, p, t) {
            members.push(cand.clone());
        }
    }
    // explicit minimality certificate: every one-edge-deleted subgraph fails
    for m in &members {
        for e in 0..m.m() {
            let smaller = m.delete_edge(e);
            let passes = match smaller.drop_isolated() {
                Some(sub) => host_contains(h, &sub, p, t),
                None => false,
            };
            assert!(!passes, "family member {m:?} is not minimal at edge {e}");
        }
    }
    members.sort_by_key(|g| canonical_form(g).expect("small member"));
    let witnesses: Vec<Embedding> = members
        .iter()
        .map(|m| {
            let host = family_host(m, p, t).expect("host within capacity");
            embeddings_undirected(h, &host, Some(1))
                .into_iter()
                .next()
                .expect("member passed the host test")
        })
        .collect();
    let result = Arc::new(FamilyResult { members, p, t_used: t, witnesses });
    cache().lock().unwrap().insert(key, Arc::clone(&result));
    Ok(result)
}

/// Orientation classes of `g` (one canonical representative each).
pub fn orientation_classes(g: &Graph) -> Vec<Digraph> {
    let m = g.m();
    assert!(m <= 20, "orientation-class enumeration is 2^m");
    let mut seen = std::collections::BTreeMap::new();
    for word in 0u64..(1u64 << m) {
        let d = crate::orient::Orientation::from_u64(m, word).to_digraph(g);
        let label = d.canonical_label().expect("small graph");
        seen.entry(label).or_insert(d);
    }
    seen.into_values().collect()
}

/// Definition test for one oriented member: does some orientation of the
/// host extend an M-placement isomorphic to `m_oriented` while containing
/// `h_oriented`? Free host edges may serve either direction.
pub fn directed_membership(
    m_oriented: &Digraph,
    h_oriented: &Digraph,
    t: Option<usize>,
) -> Result<bool, DecompError> {
    let h = h_oriented.underlying();
    let family = decomposition_family(&h, t)?;
    let m_label = canonical_form(&m_oriented.underlying()).expect("small member");
    let member = family
        .members
        .iter()
        .find(|m| canonical_form(m).expect("small member") == m_label)
        .ok_or(DecompError::NotAFamilyMember)?;
    let host = family_host(member, family.p, family.t_used).expect("host within capacity");
    let target = m_oriented.canonical_label().expect("small member");
    // all placements of the oriented member on the designated M vertices
    for word in 0u64..(1u64 << member.m()) {
        let placed = crate::orient::Orientation::from_u64(member.m(), word).to_digraph(member);
        if placed.canonical_label().expect("small member") != target {
            continue;
        }
        let po = PartialOrientation::fix_arcs(host.clone(), placed.arcs())
            .expect("member edges exist in the host");
        if contains_directed_flexible(&po, h_oriented) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Directed membership for every orientation class of one family member.
pub fn directed_family(
    member: &Graph,
    h_oriented: &Digraph,
    t: Option<usize>,
) -> Result<DirectedFamilyResult, DecompError> {
    let classes = orientation_classes(member);
    let mut member_orientations = Vec::new();
    for class in &classes {
        if directed_membership(class, h_oriented, t)? {
            member_orientations.push(class.clone());
        }
    }
    let all = member_orientations.len() == classes.len();
    Ok(DirectedFamilyResult {
        base: member.clone(),
        member_orientations,
        all_orientations_in: all,
    })
}

/// Members of the decomposition family all of whose orientations admit an
/// orientation witness.
pub fn m_prime(h_oriented: &Digraph, t: Option<usize>) -> Result<Vec<Graph>, DecompError> {
    let family = decomposition_family(&h_oriented.underlying(), t)?;
    let mut out = Vec::new();
    for member in &family.members {
        if directed_family(member, h_oriented, t)?.all_orientations_in {
            out.push(member.clone());
        }
    }
    Ok(out)
}

/// True iff the underlying graph equals fan(k, r) with center 0 and every
/// blade has at least one arc into vertex 0 and at least one arc out of it.
pub fn is_anti_directed_fan(f: &Digraph, k: usize, r: usize) -> Result<bool, GraphError> {
    let expected = fan(k, r)?;
    if f.underlying() != expected {
        return Err(GraphError::WrongUnderlyingGraph);
    }
    for blade in 0..k {
        let mut has_in = false;
        let mut has_out = false;
        for v in fan_blade(blade, r) {
            if f.has_arc(v, 0) {
                has_in = true;
            }
            if f.has_arc(0, v) {
                has_out = true;
            }
        }
        if !has_in || !has_out {
            return Ok(false);
        }
    }
    Ok(true)
}
