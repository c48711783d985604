//! Registry of the finite, checkable claims, each paired with an
//! exact-rational oracle built from the counting and decomposition layers.
//!
//! Every probability here is an exact rational obtained by exhaustive
//! enumeration; decimal strings in reports are display-only. Expected
//! values carry their provenance in the claim description. Claims are
//! independent and may run concurrently; reports are sorted by id.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::decomp::{
    decomposition_family, directed_membership, is_anti_directed_fan, m_prime, orientation_classes,
};
use crate::extremal::extremal_number;
use crate::graph::{self, canonical_form, Digraph, Graph};
use crate::orient::{count_avoiding, count_hfree, count_hfree_naive, EngineConfig, ForbiddenPattern};
use crate::text::{antidirected_cyclic_fan, named_digraph};

type Rat = Ratio<BigInt>;

fn rat(n: i64, d: i64) -> Rat {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

fn cube(x: &Rat) -> Rat {
    x * x * x
}

fn approx(x: &Rat) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

fn show(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The two anti-directed triangle shapes around a center vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleVariant {
    /// c -> y, y -> z, z -> c (a directed 3-cycle).
    Cyclic,
    /// c -> y, z -> y, z -> c (transitive, center in the middle).
    Transitive,
}

impl TriangleVariant {
    pub const BOTH: [TriangleVariant; 2] = [TriangleVariant::Cyclic, TriangleVariant::Transitive];
}

fn lit(g: &Graph, from: usize, to: usize) -> (usize, bool) {
    let e = g.edge_index(from, to).expect("arc endpoints are adjacent");
    (e, from > to)
}

/// The two patterns realizing "a copy of the variant triangle centered at
/// `c` over the pair {a, b}" (both role assignments of a and b).
fn anti_triangle_patterns(
    g: &Graph,
    c: usize,
    a: usize,
    b: usize,
    variant: TriangleVariant,
) -> [ForbiddenPattern; 2] {
    let mk = |y: usize, z: usize| match variant {
        TriangleVariant::Cyclic => {
            ForbiddenPattern::new(vec![lit(g, c, y), lit(g, y, z), lit(g, z, c)])
        }
        TriangleVariant::Transitive => {
            ForbiddenPattern::new(vec![lit(g, c, y), lit(g, z, y), lit(g, z, c)])
        }
    };
    [mk(a, b), mk(b, a)]
}

fn fail_probability(g: &Graph, patterns: &[ForbiddenPattern]) -> Rat {
    let avoid = count_avoiding(g.m(), patterns, &EngineConfig::default());
    Ratio::new(BigInt::from(avoid), BigInt::from(1u128 << g.m()))
}

// ---------------------------------------------------------------------------
// Oracles, exposed so the acceptance suite can pin the same values.
// ---------------------------------------------------------------------------

/// Probability over the 64 orientations of K4 on {w1, x1, w2, x2} that some
/// triangle copy of the variant sits with its center u in the opposite pair
/// and the other two vertices on {w_i, x_i}.
pub fn k4_t_probability(variant: TriangleVariant) -> Rat {
    let k4 = graph::complete(4);
    let pairs = [(0usize, 1usize), (2usize, 3usize)];
    let mut patterns = Vec::new();
    for i in 0..2 {
        let (w, x) = pairs[i];
        let (u1, u2) = pairs[1 - i];
        for u in [u1, u2] {
            patterns.extend(anti_triangle_patterns(&k4, u, w, x, variant));
        }
    }
    Rat::one() - fail_probability(&k4, &patterns)
}

/// The components of the B1 claim group, in reference order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B1Component {
    Edge,
    P3,
    P4,
    P5,
    C3,
    C4,
    C5,
}

impl B1Component {
    pub const ALL: [B1Component; 7] = [
        B1Component::Edge,
        B1Component::P3,
        B1Component::P4,
        B1Component::P5,
        B1Component::C3,
        B1Component::C4,
        B1Component::C5,
    ];

    pub fn graph(self) -> Graph {
        match self {
            B1Component::Edge => graph::path(2),
            B1Component::P3 => graph::path(3),
            B1Component::P4 => graph::path(4),
            B1Component::P5 => graph::path(5),
            B1Component::C3 => graph::cycle(3).unwrap(),
            B1Component::C4 => graph::cycle(4).unwrap(),
            B1Component::C5 => graph::cycle(5).unwrap(),
        }
    }
}

/// Host for Claim B.1: q1, q2, q3 (vertices 0..3) each joined to every
/// vertex of the component, plus the component's internal edges.
pub fn b1_host(component: B1Component) -> Graph {
    let y = component.graph();
    let mut edges: Vec<(usize, usize)> =
        y.edges().iter().map(|&(u, v)| (u + 3, v + 3)).collect();
    for q in 0..3 {
        for v in 0..y.n() {
            edges.push((q, v + 3));
        }
    }
    graph::make_graph(3 + y.n(), &edges).expect("B1 host")
}

/// Exact probability that no variant triangle centered at some q_i uses an
/// internal edge of the component, over all orientations of the host.
pub fn b1_probability(component: B1Component, variant: TriangleVariant) -> Rat {
    let y = component.graph();
    let host = b1_host(component);
    let mut patterns = Vec::new();
    for q in 0..3 {
        for &(u, v) in y.edges() {
            patterns.extend(anti_triangle_patterns(&host, q, u + 3, v + 3, variant));
        }
    }
    fail_probability(&host, &patterns)
}

/// The recorded reference closed form for a component (including the
/// case duplication the P5 entry carries; see the B1_P5 claim).
pub fn b1_reference_closed_form(component: B1Component) -> Rat {
    match component {
        B1Component::Edge => cube(&rat(3, 4)),
        B1Component::P3 => rat(1, 2) * cube(&rat(1, 2)) + rat(1, 2) * cube(&rat(5, 8)),
        B1Component::P4 => {
            rat(1, 4) * cube(&rat(5, 16))
                + rat(1, 2) * cube(&rat(7, 16))
                + rat(1, 4) * cube(&rat(1, 2))
        }
        B1Component::P5 => {
            rat(1, 8) * cube(&rat(3, 16))
                + rat(1, 4) * cube(&rat(9, 32))
                + rat(1, 4) * cube(&rat(11, 32))
                + rat(1, 8) * cube(&rat(11, 32))
                + rat(1, 8) * cube(&rat(5, 16))
                + rat(1, 8) * cube(&rat(13, 32))
        }
        B1Component::C3 => rat(1, 4) * cube(&rat(1, 4)) + rat(3, 4) * cube(&rat(1, 2)),
        B1Component::C4 => {
            rat(1, 8) * cube(&rat(1, 8))
                + rat(1, 2) * cube(&rat(5, 16))
                + rat(1, 4) * cube(&rat(3, 8))
                + rat(1, 8) * cube(&rat(7, 16))
        }
        B1Component::C5 => {
            rat(1, 16) * cube(&rat(1, 16))
                + rat(5, 16) * cube(&rat(3, 16))
                + rat(5, 16) * cube(&rat(1, 4))
                + rat(5, 16) * cube(&rat(5, 16))
        }
    }
}

/// The corrected P5 case sum: the orientation classes of the path P5 under
/// path reversal and arc flip have weights 2, 4, 4, 2, 2, 2 (of 16) with
/// per-center failure probabilities 3/16, 9/32, 11/32, 12/32, 10/32, 13/32.
/// The recorded reference sum lists one class twice and drops the 12/32
/// class, which is why B1_P5 stays red.
pub fn b1_p5_corrected_closed_form() -> Rat {
    (rat(2, 16) * cube(&rat(3, 16))
        + rat(4, 16) * cube(&rat(9, 32))
        + rat(4, 16) * cube(&rat(11, 32))
        + rat(2, 16) * cube(&rat(12, 32))
        + rat(2, 16) * cube(&rat(10, 32))
        + rat(2, 16) * cube(&rat(13, 32)))
        .reduced()
}

/// Rounded reference decimal for a component's probability, when one is
/// recorded.
pub fn b1_reference_decimal(component: B1Component) -> Option<Rat> {
    match component {
        B1Component::Edge => None,
        B1Component::P3 => Some(rat(19, 100)),
        B1Component::P4 => Some(rat(81, 1000)),
        B1Component::P5 => Some(rat(34, 1000)),
        B1Component::C3 => Some(rat(98, 1000)),
        B1Component::C4 => Some(rat(39, 1000)),
        B1Component::C5 => Some(rat(16, 1000)),
    }
}

/// Host of Claim B.2: three 3-paths x1 y1 z1 (0 1 2), x1' y1' z1' (3 4 5),
/// x2 y2 z2 (6 7 8) plus the ten cross edges, 16 edges in all.
pub fn b2_host() -> Graph {
    let edges = [
        (0, 1),
        (1, 2),
        (3, 4),
        (4, 5),
        (6, 7),
        (7, 8), // the three paths
        (1, 6),
        (1, 8),
        (0, 7),
        (2, 7),
        (1, 7), // y1 to x2, z2; y2 to x1, z1; y1 y2
        (4, 6),
        (4, 8),
        (3, 7),
        (5, 7),
        (4, 7), // the primed copy
    ];
    graph::make_graph(9, &edges).expect("B2 host")
}

fn b2_family(primed: bool) -> [(usize, usize, usize); 4] {
    // (center, y-partner, third vertex); the shared edge is center-partner
    if primed {
        [(7, 4, 3), (7, 4, 5), (4, 7, 6), (4, 7, 8)]
    } else {
        [(7, 1, 0), (7, 1, 2), (1, 7, 6), (1, 7, 8)]
    }
}

/// (single-family failure, joint failure) over all 2^16 host orientations.
pub fn b2_probabilities(variant: TriangleVariant) -> (Rat, Rat) {
    let host = b2_host();
    let pats = |primed: bool| -> Vec<ForbiddenPattern> {
        b2_family(primed)
            .iter()
            .flat_map(|&(c, a, b)| anti_triangle_patterns(&host, c, a, b, variant))
            .collect()
    };
    let single = fail_probability(&host, &pats(false));
    let mut joint_pats = pats(false);
    joint_pats.extend(pats(true));
    let joint = fail_probability(&host, &joint_pats);
    (single, joint)
}

/// Exact forbidden-orientation count for the apex-over-bipartite host
/// (one vertex joined to all of K_{a,b}) against a named bowtie orientation.
pub fn p51_count(variant_b: &str, a: usize, b: usize) -> num_bigint::BigUint {
    let g = graph::multipartite(&[1, a, b]).expect("apex host");
    let h = named_digraph(variant_b).expect("named bowtie");
    count_hfree(&g, &h).expect("within envelope").hfree
}

// ---------------------------------------------------------------------------
// Claim runners
// ---------------------------------------------------------------------------

fn run_k4_t_prob() -> Outcome {
    let expected = rat(5, 8);
    let cyc = k4_t_probability(TriangleVariant::Cyclic);
    let trans = k4_t_probability(TriangleVariant::Transitive);
    let mut out = Outcome::compare(show(&expected), show(&cyc), cyc == expected);
    out.check("transitive-at-center variant also equals 5/8", trans == expected);
    out.check("both variants agree", cyc == trans);
    // the cyclic event is exactly "some triangle of K4 is a directed
    // 3-cycle", so the general counter must agree
    let via_count = count_hfree(&graph::complete(4), &named_digraph("triangle:cyclic").unwrap())
        .unwrap()
        .p_contains;
    out.check("matches count_hfree(K4, triangle:cyclic)", via_count == cyc);
    out
}

fn b1_component_outcome(component: B1Component) -> Outcome {
    let y = component.graph();
    let expected = b1_reference_closed_form(component);
    let enumerated = b1_probability(component, TriangleVariant::Cyclic);
    let mut out = Outcome::compare(show(&expected), show(&enumerated), enumerated == expected);
    let threshold = Ratio::new(BigInt::one(), BigInt::from(1u64 << y.m()));
    out.check(
        &format!("enumerated value < 2^-{} (the claim's threshold)", y.m()),
        enumerated < threshold,
    );
    out.note(format!("enumerated ~= {:.6}", approx(&enumerated)));
    if component == B1Component::P5 {
        let corrected = b1_p5_corrected_closed_form();
        out.check(
            "corrected case sum (duplicated class fixed) matches enumeration",
            corrected == enumerated,
        );
        out.note(
            "the recorded sum counts the 11/32 class twice and omits the 12/32 class"
                .to_string(),
        );
    }
    out
}

fn run_b1_edge() -> Outcome {
    b1_component_outcome(B1Component::Edge)
}
fn run_b1_p3() -> Outcome {
    b1_component_outcome(B1Component::P3)
}
fn run_b1_p4() -> Outcome {
    b1_component_outcome(B1Component::P4)
}
fn run_b1_p5() -> Outcome {
    b1_component_outcome(B1Component::P5)
}
fn run_b1_c3() -> Outcome {
    b1_component_outcome(B1Component::C3)
}
fn run_b1_c4() -> Outcome {
    b1_component_outcome(B1Component::C4)
}
fn run_b1_c5() -> Outcome {
    b1_component_outcome(B1Component::C5)
}

fn run_b1_decimals() -> Outcome {
    let tolerance = rat(5, 1000);
    let mut failures = Vec::new();
    for component in B1Component::ALL {
        let Some(printed) = b1_reference_decimal(component) else { continue };
        let enumerated = b1_probability(component, TriangleVariant::Cyclic);
        let diff = (enumerated.clone() - printed.clone()).abs();
        if diff > tolerance {
            failures.push(format!(
                "{component:?}: |{} - {}| = {} ~= {:.5} > 1/200",
                show(&enumerated),
                show(&printed),
                show(&diff),
                approx(&diff),
            ));
        }
    }
    let pass = failures.is_empty();
    let mut out = Outcome::compare(
        "every printed decimal within 5e-3 of the enumerated probability",
        if pass { "all within tolerance".to_string() } else { failures.join("; ") },
        pass,
    );
    if !pass {
        out.note(
            "the P3 reference decimal 0.19 misrounds 189/1024 ~= 0.18457 (correct \
             2-dp rendering: 0.18), so this tolerance cannot hold"
                .to_string(),
        );
    }
    out
}

fn run_b1_variant_indep() -> Outcome {
    let mut all_equal = true;
    let mut lines = Vec::new();
    for component in B1Component::ALL {
        let c = b1_probability(component, TriangleVariant::Cyclic);
        let t = b1_probability(component, TriangleVariant::Transitive);
        if c != t {
            all_equal = false;
            lines.push(format!("{component:?}: cyclic {} != transitive {}", show(&c), show(&t)));
        }
    }
    let mut out = Outcome::compare(
        "identical probabilities for both anti-directed triangle variants",
        if all_equal { "identical on all seven components".to_string() } else { lines.join("; ") },
        all_equal,
    );
    out.note("given the component edge there is exactly one completing orientation per variant");
    out
}

fn run_b2_four_triangles() -> Outcome {
    let host = b2_host();
    let single_expected = cube(&rat(3, 4)) * rat(3, 4); // (3/4)^4
    let (single, joint) = b2_probabilities(TriangleVariant::Cyclic);
    let (single_t, joint_t) = b2_probabilities(TriangleVariant::Transitive);
    let mut out =
        Outcome::compare(show(&single_expected), show(&single), single == single_expected);
    // unique completion: for each designated triangle and each direction of
    // its shared edge, exactly one orientation of the other two edges works
    let mut unique = true;
    for variant in TriangleVariant::BOTH {
        for primed in [false, true] {
            for (c, a, b) in b2_family(primed) {
                let pats = anti_triangle_patterns(&host, c, a, b, variant);
                let shared = lit(&host, c, a).0;
                let free: Vec<usize> = [lit(&host, c, b).0, lit(&host, a, b).0].to_vec();
                for dir in [false, true] {
                    let mut completions = 0;
                    for bits in 0..4u8 {
                        let assign = |e: usize| {
                            if e == shared {
                                dir
                            } else if e == free[0] {
                                bits & 1 == 1
                            } else {
                                bits & 2 == 2
                            }
                        };
                        if pats
                            .iter()
                            .any(|p| p.literals().iter().all(|&(e, want)| assign(e) == want))
                        {
                            completions += 1;
                        }
                    }
                    unique &= completions == 1;
                }
            }
        }
    }
    out.check("exactly one completing orientation per triangle given the shared edge", unique);
    out.check("joint failure probability < 1/4", joint < rat(1, 4));
    out.check(
        "both variants give the same probabilities",
        single == single_t && joint == joint_t,
    );
    let product = cube(&rat(3, 4)) * cube(&rat(3, 4)) * rat(3, 4) * rat(3, 4); // (3/4)^8
    out.note(format!(
        "joint failure = {} ~= {:.5}; (3/4)^8 = {} ~= {:.5}; equal: {}",
        show(&joint),
        approx(&joint),
        show(&product),
        approx(&product),
        joint == product,
    ));
    if joint > product {
        out.note(format!(
            "the two families share the edges y2x2 and y2z2, so the independence \
             shortcut 'at most (3/4)^8' is off by {}",
            show(&(joint.clone() - product)),
        ));
    }
    out
}

fn p51_reference_lower_bound_a(n: u64) -> BigInt {
    let fl = (n - 1) / 2;
    let ce = n - 1 - fl;
    let two = BigInt::from(2);
    two.pow((fl * ce) as u32)
        * (BigInt::from(fl) * two.pow(ce as u32) + BigInt::from(ce) * two.pow(fl as u32)
            - BigInt::from(n * n / 4))
}

fn p51_reference_lower_bound_b(n: u64) -> BigInt {
    let fl = (n - 1) / 2;
    let ce = n - 1 - fl;
    let two = BigInt::from(2);
    two.pow((fl * ce + 1) as u32) * (two.pow(ce as u32) + two.pow(fl as u32) - BigInt::from(4))
}

fn run_p51a() -> Outcome {
    let mut pass = true;
    let mut expected_parts = Vec::new();
    let mut computed_parts = Vec::new();
    let mut notes = Vec::new();
    for (a, b) in [(2usize, 2usize), (3, 3)] {
        let closed = BigInt::from(
            ((1 + a as i128) * (1 << b) + (1 + b as i128) * (1 << a)
                - (1 + a as i128) * (1 + b as i128))
                << (a * b),
        );
        let counted = BigInt::from(p51_count("bowtie:all-in", a, b));
        let naive = BigInt::from(
            count_hfree_naive(
                &graph::multipartite(&[1, a, b]).unwrap(),
                &named_digraph("bowtie:all-in").unwrap(),
            )
            .unwrap()
            .hfree,
        );
        expected_parts.push(format!("a=b={a}: {closed}"));
        computed_parts.push(format!("a=b={a}: {counted}"));
        pass &= counted == closed && naive == closed;
        let n = (a + b + 1) as u64;
        let lb = p51_reference_lower_bound_a(n);
        pass &= counted >= lb;
        let shorthand = BigInt::from(
            ((a as i128) * (1 << b) + (b as i128) * (1 << a)) << (a * b),
        );
        notes.push(format!(
            "a=b={a}: naive loop {naive}; displayed lower bound {lb} (holds: {}); \
             in-proof shorthand 2^ab(a2^b+b2^a) = {shorthand} ({})",
            counted >= lb,
            if counted >= shorthand { "count >= shorthand" } else { "count < shorthand" },
        ));
    }
    let mut out = Outcome::compare(expected_parts.join("; "), computed_parts.join("; "), pass);
    for n in notes {
        out.note(n);
    }
    out.note(
        "the shorthand omits the inclusion-exclusion overlap; at a=b=2 the true count \
         240 sits below it, which is why the displayed bound (with the -floor(n^2/4) \
         term) is the one asserted",
    );
    out
}

fn run_p51b() -> Outcome {
    let mut pass = true;
    let mut expected_parts = Vec::new();
    let mut computed_parts = Vec::new();
    let mut notes = Vec::new();
    for (a, b) in [(2usize, 2usize), (3, 3)] {
        let closed =
            BigInt::from(((1i128 << (a + 1)) + (1 << (b + 1)) - 4) << (a * b));
        let counted = BigInt::from(p51_count("bowtie:in-out", a, b));
        let naive = BigInt::from(
            count_hfree_naive(
                &graph::multipartite(&[1, a, b]).unwrap(),
                &named_digraph("bowtie:in-out").unwrap(),
            )
            .unwrap()
            .hfree,
        );
        expected_parts.push(format!("a=b={a}: {closed}"));
        computed_parts.push(format!("a=b={a}: {counted}"));
        pass &= counted == closed && naive == closed;
        let lb = p51_reference_lower_bound_b((a + b + 1) as u64);
        pass &= counted >= lb;
        notes.push(format!("a=b={a}: naive loop {naive}; displayed lower bound {lb}"));
    }
    let mut out = Outcome::compare(expected_parts.join("; "), computed_parts.join("; "), pass);
    for n in notes {
        out.note(n);
    }
    out
}

fn run_p52_star_count() -> Outcome {
    let mut pass = true;
    let mut expected_parts = Vec::new();
    let mut computed_parts = Vec::new();
    let mut notes = Vec::new();
    for k in [4usize, 6] {
        let s = graph::star(k);
        let alternating: Digraph = {
            let arcs: Vec<(usize, usize)> = (1..=k)
                .map(|i| if i <= k / 2 { (i, 0) } else { (0, i) })
                .collect();
            crate::graph::make_digraph(k + 1, &arcs).unwrap()
        };
        let target = alternating.canonical_label().unwrap();
        let count = (0u64..(1 << k))
            .filter(|&w| {
                crate::orient::Orientation::from_u64(k, w)
                    .to_digraph(&s)
                    .canonical_label()
                    .unwrap()
                    == target
            })
            .count() as u64;
        let expected = choose(k as u64, k as u64 / 2);
        expected_parts.push(format!("k={k}: {expected}"));
        computed_parts.push(format!("k={k}: {count}"));
        pass &= count == expected;
        let ratio = Ratio::new(BigInt::from(2 * expected), BigInt::from(1u64 << k));
        notes.push(format!("k={k}: 2 C(k,k/2)/2^k = {} ~= {:.4}", show(&ratio), approx(&ratio)));
    }
    let mut out = Outcome::compare(expected_parts.join("; "), computed_parts.join("; "), pass);
    // the probability bound 2 C(k,k/2)/2^k < 1/2 needs k large; find where
    // it starts holding
    let first = (2..=16u64)
        .step_by(2)
        .find(|&k| Ratio::new(BigInt::from(2 * choose(k, k / 2)), BigInt::from(1u64 << k)) < rat(1, 2));
    out.check("bound 2 C(k,k/2)/2^k < 1/2 first holds at k = 10", first == Some(10));
    for n in notes {
        out.note(n);
    }
    out.note("at k = 6 the ratio is 5/8, so the wheel argument's inequality is genuinely asymptotic");
    out
}

fn family_labels(members: &[Graph]) -> Vec<Vec<u8>> {
    members.iter().map(|g| canonical_form(g).expect("small member")).collect()
}

fn sorted_labels(graphs: &[Graph]) -> Vec<Vec<u8>> {
    let mut v = family_labels(graphs);
    v.sort();
    v
}

fn show_family(members: &[Graph]) -> String {
    members
        .iter()
        .map(|g| format!("{}v/{}e", g.n(), g.m()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn run_wheel_family() -> Outcome {
    let fam = decomposition_family(&graph::wheel(7).unwrap(), None).expect("wheel family");
    let expected = sorted_labels(&[graph::star(3), graph::cycle(6).unwrap()]);
    let pass = family_labels(&fam.members) == expected;
    let mut out = Outcome::compare("{S_4, C_6}", show_family(&fam.members), pass);
    out.note(format!("p = {}, t = {}", fam.p, fam.t_used));
    out
}

fn run_fan_family() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (k, r) in [(2usize, 3usize), (3, 3), (2, 4)] {
        let fam = decomposition_family(&graph::fan(k, r).unwrap(), None).expect("fan family");
        let expected = sorted_labels(&[graph::star(k), graph::matching(k)]);
        let ok = family_labels(&fam.members) == expected;
        pass &= ok;
        parts.push(format!("({k},{r}): {} [{}]", show_family(&fam.members), if ok { "ok" } else { "MISMATCH" }));
    }
    Outcome::compare(
        "{S_(k+1), M_k} for (k,r) in {(2,3), (3,3), (2,4)}",
        parts.join("; "),
        pass,
    )
}

fn run_fan_mprime() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (k, r) in [(2usize, 3usize), (3, 3), (2, 4)] {
        let anti = antidirected_cyclic_fan(k, r).expect("anti-directed fan");
        let mp = m_prime(&anti, None).expect("m_prime");
        let expected = sorted_labels(&[graph::star(k), graph::matching(k)]);
        let ok = sorted_labels(&mp) == expected;
        pass &= ok;
        parts.push(format!("({k},{r}): {} [{}]", show_family(&mp), if ok { "ok" } else { "MISMATCH" }));
    }
    Outcome::compare(
        "m_prime equals the full decomposition family for all three fans",
        parts.join("; "),
        pass,
    )
}

fn run_bowtie_pure_star() -> Outcome {
    let in_star = named_digraph("star:2:in").unwrap();
    let out_star = named_digraph("star:2:out").unwrap();
    let classes = orientation_classes(&graph::bowtie());
    let mut pass = true;
    let mut anti_classes = 0;
    let mut lines = Vec::new();
    for class in &classes {
        let anti = is_anti_directed_fan(class, 2, 3).expect("orientations of the bowtie");
        let in_ok = directed_membership(&in_star, class, None).expect("S_3 is a family member");
        let out_ok = directed_membership(&out_star, class, None).expect("S_3 is a family member");
        let pures = usize::from(in_ok) + usize::from(out_ok);
        if anti {
            anti_classes += 1;
            if pures != 2 {
                pass = false;
                lines.push(format!("anti-directed class missing a pure star ({pures})"));
            }
        } else if pures > 1 {
            pass = false;
            lines.push("non-anti class admits both pure stars".to_string());
        }
    }
    let mut out = Outcome::compare(
        "every non-anti-directed orientation class admits at most one pure S_3 orientation",
        if pass { format!("holds on all {} classes", classes.len()) } else { lines.join("; ") },
        pass,
    );
    out.note(format!(
        "{} orientation classes of the bowtie, {} of them anti-directed (those admit both pures)",
        classes.len(),
        anti_classes
    ));
    out
}

fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut comps = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        comps += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            let mut nb = g.adj(v);
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    comps
}

fn run_table1_components() -> Outcome {
    // candidate pool deliberately wider than the answer: paths and cycles up
    // to 7 vertices, up to three components; the no-3-matching filter must
    // cut it down to the table
    let mut pool: Vec<Graph> = (2..=7).map(graph::path).collect();
    pool.extend((3..=7).map(|k| graph::cycle(k).unwrap()));
    let mut survivors = std::collections::BTreeSet::new();
    let mut max_components = 0;
    let n_pool = pool.len();
    for i in 0..n_pool {
        let single = pool[i].clone();
        if single.max_matching() <= 2 {
            max_components = max_components.max(1);
            survivors.insert(canonical_form(&single).expect("small survivor"));
        }
        for j in i..n_pool {
            let two = pool[i].disjoint_union(&pool[j]).unwrap();
            if two.max_matching() <= 2 {
                max_components = max_components.max(component_count(&two));
                survivors.insert(canonical_form(&two).expect("small survivor"));
            }
            for third in &pool[j..] {
                let three = two.disjoint_union(third).unwrap();
                if three.max_matching() <= 2 {
                    max_components = max_components.max(component_count(&three));
                    survivors.insert(canonical_form(&three).expect("small survivor"));
                }
            }
        }
    }
    let p = graph::path;
    let c = |k: usize| graph::cycle(k).unwrap();
    let table: Vec<Graph> = vec![
        p(2),
        p(3),
        p(4),
        p(5),
        c(3),
        c(4),
        c(5),
        p(2).disjoint_union(&p(3)).unwrap(),
        p(2).disjoint_union(&c(3)).unwrap(),
        p(3).disjoint_union(&c(3)).unwrap(),
        p(2).disjoint_union(&p(2)).unwrap(),
        p(3).disjoint_union(&p(3)).unwrap(),
        c(3).disjoint_union(&c(3)).unwrap(),
    ];
    let expected: std::collections::BTreeSet<Vec<u8>> =
        table.iter().map(|g| canonical_form(g).unwrap()).collect();
    let pass = survivors == expected;
    let mut out = Outcome::compare(
        "exactly the 13 graphs a1..a13",
        format!("{} iso classes", survivors.len()),
        pass,
    );
    out.check("no surviving graph has three components", max_components <= 2);
    out.note("pool: paths and cycles up to 7 vertices, up to 3 components; filter: max matching <= 2");
    out
}

fn run_edge_critical_family() -> Outcome {
    let expected = sorted_labels(&[graph::path(2)]);
    let k4 = decomposition_family(&graph::complete(4), None).expect("K4 family");
    let c5 = decomposition_family(&graph::cycle(5).unwrap(), None).expect("C5 family");
    let pass = family_labels(&k4.members) == expected && family_labels(&c5.members) == expected;
    Outcome::compare(
        "{K_2} for both K_4 and C_5",
        format!("K4: {}; C5: {}", show_family(&k4.members), show_family(&c5.members)),
        pass,
    )
}

fn run_yuan_wheel_ex() -> Outcome {
    // frozen from the exhaustive run (pre-verified by an independent sweep):
    // any graph on < 7 vertices is W7-free, and ex(7, W7) = 17
    let frozen = [6usize, 10, 15, 17];
    let w7 = graph::wheel(7).unwrap();
    let mut pass = true;
    let mut computed = Vec::new();
    let mut notes = Vec::new();
    for (i, n) in (4..=7).enumerate() {
        let r = extremal_number(n, std::slice::from_ref(&w7)).expect("within envelope");
        computed.push(r.max_edges.to_string());
        pass &= r.max_edges == frozen[i];
        // Yuan's asymptotic formula with k = 3
        let formula = (0..=n).map(|n0| n0 * (n - n0) + n0).max().unwrap();
        notes.push(format!(
            "n={n}: ex={} vs formula max(n0 n1 + floor(n0)) = {formula} ({})",
            r.max_edges,
            if r.max_edges == formula { "agree" } else { "small-n gap" },
        ));
    }
    let mut out = Outcome::compare(
        format!("[{}]", frozen.map(|v| v.to_string()).join(", ")),
        format!("[{}]", computed.join(", ")),
        pass,
    );
    for n in notes {
        out.note(n);
    }
    out.note("the formula is asymptotic; small-n gaps are expected and reported, not asserted");
    out
}

// ---------------------------------------------------------------------------
// Registry plumbing
// ---------------------------------------------------------------------------

/// One registered claim: identifier, grouping tags, a description carrying
/// the source location and provenance of the expected value, and the oracle.
pub struct ClaimSpec {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    pub description: &'static str,
    run: fn() -> Outcome,
}

/// What an oracle produced: the expected value, the computed value,
/// auxiliary named checks folded into `pass`, and free-form notes.
pub struct Outcome {
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl Outcome {
    fn compare(expected: impl ToString, computed: impl ToString, pass: bool) -> Outcome {
        Outcome {
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, label: &str, ok: bool) {
        self.notes.push(format!("{}: {label}", if ok { "ok" } else { "FAIL" }));
        self.pass &= ok;
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub runtime_ms: u128,
    pub notes: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
#[error("unknown claim id {0:?}")]
pub struct UnknownClaim(pub String);

static REGISTRY: [ClaimSpec; 21] = [
    ClaimSpec {
        id: "B1_C3",
        tags: &["appendixB"],
        description: "B1 group, triangle component: failure probability \
                      (1/4)(1/4)^3 + (3/4)(1/2)^3 = 25/256, printed ~0.098, < 1/8",
        run: run_b1_c3,
    },
    ClaimSpec {
        id: "B1_C4",
        tags: &["appendixB"],
        description: "B1 group, 4-cycle component: failure probability \
                      (1/8)(1/8)^3 + (1/2)(5/16)^3 + (1/4)(3/8)^3 + (1/8)(7/16)^3, printed ~0.039, < 1/16",
        run: run_b1_c4,
    },
    ClaimSpec {
        id: "B1_C5",
        tags: &["appendixB"],
        description: "B1 group, 5-cycle component: failure probability \
                      (1/16)(1/16)^3 + (5/16)(3/16)^3 + (5/16)(1/4)^3 + (5/16)(5/16)^3, printed ~0.016, < 1/32",
        run: run_b1_c5,
    },
    ClaimSpec {
        id: "B1_DECIMALS",
        tags: &["appendixB"],
        description: "B1 group: every rounded reference decimal (0.19, 0.081, 0.034, 0.098, \
                      0.039, 0.016) lies within 5e-3 of the exact enumerated probability",
        run: run_b1_decimals,
    },
    ClaimSpec {
        id: "B1_EDGE",
        tags: &["appendixB"],
        description: "B1 group, single-edge component: failure probability \
                      (3/4)^3 = 27/64 < 1/2",
        run: run_b1_edge,
    },
    ClaimSpec {
        id: "B1_P3",
        tags: &["appendixB"],
        description: "B1 group, 3-path component: failure probability \
                      (1/2)(1/2)^3 + (1/2)(5/8)^3 = 189/1024 < 1/4",
        run: run_b1_p3,
    },
    ClaimSpec {
        id: "B1_P4",
        tags: &["appendixB"],
        description: "B1 group, 4-path component: failure probability \
                      (1/4)(5/16)^3 + (1/2)(7/16)^3 + (1/4)(1/2)^3, printed ~0.081, < 1/8",
        run: run_b1_p4,
    },
    ClaimSpec {
        id: "B1_P5",
        tags: &["appendixB"],
        description: "B1 group, 5-path component: the recorded six-term reference sum \
                      (which double-counts one orientation class); the enumeration decides",
        run: run_b1_p5,
    },
    ClaimSpec {
        id: "B1_VARIANT_INDEP",
        tags: &["appendixB"],
        description: "B1 group: the probabilities are identical for the cyclic and \
                      transitive-at-center anti-directed triangle (one completion either way)",
        run: run_b1_variant_indep,
    },
    ClaimSpec {
        id: "B2_FOUR_TRIANGLES",
        tags: &["appendixB"],
        description: "B2 group: four designated triangles, one completion each given the \
                      shared edge, single-family failure (3/4)^4, joint failure < 1/4; the \
                      comparison against (3/4)^8 is measured and reported",
        run: run_b2_four_triangles,
    },
    ClaimSpec {
        id: "BOWTIE_PURE_STAR",
        tags: &["families"],
        description: "each non-anti-directed bowtie orientation class admits at most one of \
                      the two pure S_3 orientations",
        run: run_bowtie_pure_star,
    },
    ClaimSpec {
        id: "EDGE_CRITICAL_FAMILY",
        tags: &["families"],
        description: "the decomposition family of an edge-critical graph (K4, C5) is a \
                      single edge",
        run: run_edge_critical_family,
    },
    ClaimSpec {
        id: "FAN_FAMILY",
        tags: &["families"],
        description: "the decomposition family of the (k,r)-fan is a (k+1)-star and a \
                      k-matching, for (k,r) in {(2,3), (3,3), (2,4)}",
        run: run_fan_family,
    },
    ClaimSpec {
        id: "FAN_MPRIME",
        tags: &["families"],
        description: "for anti-directed fans, every orientation of every family member \
                      admits an orientation witness (m_prime equals the family)",
        run: run_fan_mprime,
    },
    ClaimSpec {
        id: "K4_T_PROB",
        tags: &["fans"],
        description: "over the 64 orientations of K4 on the pairs {w1,x1}, {w2,x2}, the \
                      probability of an anti-directed triangle copy centered in the opposite \
                      pair is 5/8, for both triangle shapes",
        run: run_k4_t_prob,
    },
    ClaimSpec {
        id: "P51A_COUNT",
        tags: &["prop51"],
        description: "exact all-in-bowtie-free counts of the apex host at a=b=2 and a=b=3 \
                      equal the inclusion-exclusion closed form \
                      2^{ab}((1+a)2^b + (1+b)2^a - (1+a)(1+b)) and sit above the displayed bound",
        run: run_p51a,
    },
    ClaimSpec {
        id: "P51B_COUNT",
        tags: &["prop51"],
        description: "exact in-out-bowtie-free counts of the apex host equal \
                      2^{ab}(2^{a+1} + 2^{b+1} - 4) and sit above the displayed bound",
        run: run_p51b,
    },
    ClaimSpec {
        id: "P52_STAR_COUNT",
        tags: &["wheel"],
        description: "exactly C(k, k/2) of the 2^k star orientations are isomorphic to a \
                      fixed alternating orientation (k = 4, 6); the probability bound \
                      2C(k,k/2)/2^k < 1/2 first holds at k = 10",
        run: run_p52_star_count,
    },
    ClaimSpec {
        id: "TABLE1_COMPONENTS",
        tags: &["fans"],
        description: "the graphs with max degree 2, no 3-matching and no isolated vertices \
                      are exactly the 13 recorded classes",
        run: run_table1_components,
    },
    ClaimSpec {
        id: "WHEEL_FAMILY",
        tags: &["families", "wheel"],
        description: "the decomposition family of the 7-wheel is {S_4, C_6}",
        run: run_wheel_family,
    },
    ClaimSpec {
        id: "YUAN_WHEEL_EX",
        tags: &["wheel"],
        description: "exhaustive ex(n, W_7) for n = 4..7 (frozen from the run: 6, 10, 15, \
                      17) compared against the asymptotic wheel extremal formula \
                      max(n0 n1 + floor((k-1) n0 / 2))",
        run: run_yuan_wheel_ex,
    },
];

pub fn registry() -> &'static [ClaimSpec] {
    &REGISTRY
}

/// Runs one claim by id.
pub fn run_claim(id: &str) -> Result<ClaimReport, UnknownClaim> {
    let spec = REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| UnknownClaim(id.to_string()))?;
    Ok(execute(spec))
}

fn execute(spec: &ClaimSpec) -> ClaimReport {
    let start = std::time::Instant::now();
    let outcome = (spec.run)();
    ClaimReport {
        id: spec.id.to_string(),
        description: spec.description.to_string(),
        expected: outcome.expected,
        computed: outcome.computed,
        pass: outcome.pass,
        runtime_ms: start.elapsed().as_millis(),
        notes: outcome.notes,
    }
}

/// Runs every registered claim (optionally restricted to a tag) on
/// `threads` workers and returns the reports sorted by id.
pub fn run_all(tag: Option<&str>, threads: usize) -> Vec<ClaimReport> {
    let selected: Vec<&ClaimSpec> = REGISTRY
        .iter()
        .filter(|c| tag.is_none_or(|t| c.tags.contains(&t)))
        .collect();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let workers = threads.max(1).min(selected.len().max(1));
    let mut reports: Vec<ClaimReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                        if i >= selected.len() {
                            break;
                        }
                        local.push(execute(selected[i]));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("claim worker panicked"))
            .collect()
    });
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports
}
