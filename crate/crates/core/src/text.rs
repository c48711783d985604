//! The shared graph text format and the named-descriptor grammar.
//!
//! File format, one item per line, `#` starts a comment:
//! ```text
//! n 5        # vertex count header (required, first)
//! e 0 1      # undirected edge
//! a 2 3      # arc 2 -> 3
//! ```
//! A file with only `e` lines parses as a [`Graph`], only `a` lines as a
//! [`Digraph`], and a mix as a [`PartialOrientation`] (`e` free, `a` fixed).

use crate::error::ParseError;
use crate::graph::{
    self, make_digraph, make_graph, Digraph, Graph, PartialOrientation,
};

/// Whatever a graph text file turned out to hold.
#[derive(Clone, Debug)]
pub enum TextItem {
    Graph(Graph),
    Digraph(Digraph),
    Partial(PartialOrientation),
}

pub fn parse_text(input: &str) -> Result<TextItem, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| ParseError::Line { line: lineno + 1, msg: msg.to_string() };
        let mut it = line.split_whitespace();
        let tag = it.next().unwrap();
        let mut num = || -> Result<usize, ParseError> {
            it.next()
                .ok_or_else(|| err("missing number"))?
                .parse()
                .map_err(|_| err("not a decimal integer"))
        };
        match tag {
            "n" => {
                if n.is_some() {
                    return Err(err("duplicate n header"));
                }
                n = Some(num()?);
            }
            "e" => {
                let u = num()?;
                let v = num()?;
                edges.push((u, v));
            }
            "a" => {
                let u = num()?;
                let v = num()?;
                arcs.push((u, v));
            }
            _ => return Err(err("expected n, e, or a")),
        }
    }
    let n = n.ok_or_else(|| ParseError::Invalid("missing n header".into()))?;
    match (edges.is_empty(), arcs.is_empty()) {
        (false, true) => Ok(TextItem::Graph(make_graph(n, &edges)?)),
        (true, false) => Ok(TextItem::Digraph(make_digraph(n, &arcs)?)),
        (true, true) => Ok(TextItem::Graph(make_graph(n, &[])?)),
        (false, false) => {
            let mut all = edges.clone();
            all.extend(arcs.iter().map(|&(a, b)| (a, b)));
            let base = make_graph(n, &all)?;
            Ok(TextItem::Partial(PartialOrientation::fix_arcs(base, &arcs)?))
        }
    }
}

pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn render_digraph(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.n());
    for &(a, b) in d.arcs() {
        out.push_str(&format!("a {a} {b}\n"));
    }
    out
}

pub fn render_partial(p: &PartialOrientation) -> String {
    let mut out = format!("n {}\n", p.base().n());
    for (i, &(u, v)) in p.base().edges().iter().enumerate() {
        match p.fixed_direction(i) {
            None => out.push_str(&format!("e {u} {v}\n")),
            Some(false) => out.push_str(&format!("a {u} {v}\n")),
            Some(true) => out.push_str(&format!("a {v} {u}\n")),
        }
    }
    out
}

fn desc_err(spec: &str, msg: &str) -> ParseError {
    ParseError::Descriptor(spec.to_string(), msg.to_string())
}

fn parse_usize(spec: &str, s: &str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| desc_err(spec, &format!("{s:?} is not a number")))
}

/// Builds a graph from a named descriptor: `complete:n`, `empty:n`,
/// `turan:n,p`, `multipartite:s1,...,sp`, `star:t`, `matching:k`, `path:k`,
/// `cycle:k`, `fan:k,r`, `wheel:m` (odd m), `bowtie`.
pub fn named_graph(spec: &str) -> Result<Graph, ParseError> {
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h, r),
        None => (spec, ""),
    };
    let args: Vec<&str> = if rest.is_empty() { vec![] } else { rest.split(',').collect() };
    let arity = |k: usize| -> Result<(), ParseError> {
        if args.len() != k {
            return Err(desc_err(spec, &format!("expected {k} parameter(s)")));
        }
        Ok(())
    };
    match head {
        "complete" => {
            arity(1)?;
            let n = parse_usize(spec, args[0])?;
            if n == 0 {
                return Err(desc_err(spec, "complete graph needs at least one vertex"));
            }
            Ok(graph::complete(n))
        }
        "empty" => {
            arity(1)?;
            Ok(make_graph(parse_usize(spec, args[0])?, &[])?)
        }
        "turan" => {
            arity(2)?;
            let n = parse_usize(spec, args[0])?;
            let p = parse_usize(spec, args[1])?;
            if p == 0 {
                return Err(desc_err(spec, "p must be at least 1"));
            }
            Ok(graph::turan(n, p)?)
        }
        "multipartite" => {
            if args.is_empty() {
                return Err(desc_err(spec, "needs part sizes"));
            }
            let sizes: Result<Vec<usize>, _> = args.iter().map(|s| parse_usize(spec, s)).collect();
            Ok(graph::multipartite(&sizes?)?)
        }
        "star" => {
            arity(1)?;
            let t = parse_usize(spec, args[0])?;
            if t == 0 {
                return Err(desc_err(spec, "star needs at least one leaf"));
            }
            Ok(graph::star(t))
        }
        "matching" => {
            arity(1)?;
            let k = parse_usize(spec, args[0])?;
            if k == 0 {
                return Err(desc_err(spec, "matching needs at least one edge"));
            }
            Ok(graph::matching(k))
        }
        "path" => {
            arity(1)?;
            let k = parse_usize(spec, args[0])?;
            if k == 0 {
                return Err(desc_err(spec, "path needs at least one vertex"));
            }
            Ok(graph::path(k))
        }
        "cycle" => {
            arity(1)?;
            let k = parse_usize(spec, args[0])?;
            if k < 3 {
                return Err(desc_err(spec, "cycle needs at least three vertices"));
            }
            Ok(graph::cycle(k)?)
        }
        "fan" => {
            arity(2)?;
            let k = parse_usize(spec, args[0])?;
            let r = parse_usize(spec, args[1])?;
            if k < 1 || r < 2 {
                return Err(desc_err(spec, "fan needs k >= 1 and r >= 2"));
            }
            Ok(graph::fan(k, r)?)
        }
        "wheel" => {
            arity(1)?;
            let m = parse_usize(spec, args[0])?;
            if m < 5 || m % 2 == 0 {
                return Err(desc_err(spec, "wheel needs odd m >= 5"));
            }
            Ok(graph::wheel(m)?)
        }
        "bowtie" => {
            arity(0)?;
            Ok(graph::bowtie())
        }
        _ => Err(desc_err(spec, "unknown graph family")),
    }
}

/// Builds an oriented pattern from the documented sugar: `triangle:cyclic`,
/// `triangle:transitive`, `star:t:in`, `star:t:out`, `bowtie:all-in`,
/// `bowtie:all-out`, `bowtie:in-out`, `bowtie:antidirected`,
/// `fan:k,r:antidirected-cyclic`. Everything else goes through the `a`-line
/// file format.
pub fn named_digraph(spec: &str) -> Result<Digraph, ParseError> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["triangle", "cyclic"] => Ok(make_digraph(3, &[(0, 1), (1, 2), (2, 0)])?),
        ["triangle", "transitive"] => Ok(make_digraph(3, &[(0, 1), (1, 2), (0, 2)])?),
        ["star", t, dir @ ("in" | "out")] => {
            let t = parse_usize(spec, t)?;
            if t == 0 {
                return Err(desc_err(spec, "star needs at least one leaf"));
            }
            let arcs: Vec<(usize, usize)> = (1..=t)
                .map(|v| if *dir == "in" { (v, 0) } else { (0, v) })
                .collect();
            Ok(make_digraph(t + 1, &arcs)?)
        }
        ["bowtie", variant] => bowtie_orientation(spec, variant),
        ["fan", kr, "antidirected-cyclic"] => {
            let (k, r) = kr
                .split_once(',')
                .ok_or_else(|| desc_err(spec, "fan needs k,r"))?;
            antidirected_cyclic_fan(parse_usize(spec, k)?, parse_usize(spec, r)?)
                .ok_or_else(|| desc_err(spec, "fan needs k >= 1 and r >= 3"))
        }
        _ => Err(desc_err(spec, "unknown oriented pattern")),
    }
}

fn bowtie_orientation(spec: &str, variant: &str) -> Result<Digraph, ParseError> {
    // center 0; triangles {0,1,2} and {0,3,4}; outer edges 1-2 and 3-4
    let arcs: Vec<(usize, usize)> = match variant {
        "all-in" => vec![(1, 0), (2, 0), (3, 0), (4, 0), (1, 2), (3, 4)],
        "all-out" => vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)],
        "in-out" => vec![(1, 0), (2, 0), (0, 3), (0, 4), (1, 2), (3, 4)],
        "antidirected" | "antidirected-cyclic" => {
            return Ok(antidirected_cyclic_fan(2, 3).expect("bowtie is fan(2,3)"));
        }
        _ => return Err(desc_err(spec, "unknown bowtie orientation")),
    };
    Ok(make_digraph(5, &arcs)?)
}

/// The canonical anti-directed fan orientation: each blade carries the
/// directed cycle center -> b1 -> ... -> b_{r-1} -> center, chords (incl.
/// center chords) point low-to-high along the cycle.
pub fn antidirected_cyclic_fan(k: usize, r: usize) -> Option<Digraph> {
    if k < 1 || r < 3 {
        return None;
    }
    let mut arcs = Vec::new();
    for i in 0..k {
        let blade: Vec<usize> = std::iter::once(0)
            .chain(graph::fan_blade(i, r))
            .collect();
        let len = blade.len();
        for j in 0..len {
            arcs.push((blade[j], blade[(j + 1) % len]));
        }
        for a in 0..len {
            for b in a + 2..len {
                if a == 0 && b == len - 1 {
                    continue; // already the cycle-closing arc, reversed
                }
                arcs.push((blade[a], blade[b]));
            }
        }
    }
    Some(make_digraph(1 + k * (r - 1), &arcs).expect("fan blades are disjoint"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::is_anti_directed_fan;

    #[test]
    fn parse_graph_only() {
        let item = parse_text("# triangle\nn 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        match item {
            TextItem::Graph(g) => assert_eq!(g.m(), 3),
            _ => panic!("expected graph"),
        }
    }

    #[test]
    fn parse_digraph_only() {
        let item = parse_text("n 3\na 0 1\na 1 2\na 2 0\n").unwrap();
        match item {
            TextItem::Digraph(d) => assert_eq!(d.arc_count(), 3),
            _ => panic!("expected digraph"),
        }
    }

    #[test]
    fn parse_partial() {
        let item = parse_text("n 3\ne 0 1\na 2 1\n").unwrap();
        match item {
            TextItem::Partial(p) => {
                assert_eq!(p.free_edges().len(), 1);
                assert_eq!(p.fixed_edges().len(), 1);
            }
            _ => panic!("expected partial orientation"),
        }
    }

    #[test]
    fn render_round_trip() {
        let g = named_graph("fan:2,3").unwrap();
        let text = render_graph(&g);
        match parse_text(&text).unwrap() {
            TextItem::Graph(g2) => assert_eq!(g, g2),
            _ => panic!(),
        }
        let d = named_digraph("bowtie:all-in").unwrap();
        let text = render_digraph(&d);
        match parse_text(&text).unwrap() {
            TextItem::Digraph(d2) => assert_eq!(d, d2),
            _ => panic!(),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(parse_text("e 0 1\n").is_err()); // no header
        assert!(parse_text("n 3\nx 0 1\n").is_err());
        assert!(parse_text("n 2\ne 0 2\n").is_err());
        assert!(named_graph("wheel:6").is_err());
        assert!(named_graph("unknown:3").is_err());
        assert!(named_digraph("bowtie:sideways").is_err());
    }

    #[test]
    fn named_digraphs_are_well_formed() {
        for spec in [
            "triangle:cyclic",
            "triangle:transitive",
            "star:3:in",
            "star:3:out",
            "bowtie:all-in",
            "bowtie:all-out",
            "bowtie:in-out",
            "bowtie:antidirected",
            "fan:3,3:antidirected-cyclic",
            "fan:2,4:antidirected-cyclic",
        ] {
            let d = named_digraph(spec).unwrap();
            assert!(d.arc_count() > 0, "{spec}");
        }
        // the anti-directed fans really are anti-directed
        for (k, r) in [(2, 3), (3, 3), (2, 4)] {
            let d = antidirected_cyclic_fan(k, r).unwrap();
            assert!(is_anti_directed_fan(&d, k, r).unwrap(), "fan {k},{r}");
        }
    }

    #[test]
    fn turan_descriptor() {
        let g = named_graph("turan:5,2").unwrap();
        assert_eq!(g.m(), 6);
    }
}
