use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Named graphs and families.
///
/// `Paw` is the triangle with one pendant vertex and `Chair` is the
/// five-vertex tree with degree sequence (3,2,1,1,1). These are the two
/// sporadic graphs whose dependence polynomials are real-rooted; they arise
/// as the adjacent two-hub family members with (a,b,c) = (1,2,2) and
/// (1,2,3). C₄ shares the paw's dependence polynomial, so the construction,
/// not the polynomial, pins the paw down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// `K(1, n)`.
    Star(usize),
    Paw,
    Chair,
    Empty(usize),
}

pub fn build_named(name: NamedGraph) -> Result<Graph> {
    use NamedGraph::*;
    let bad = |msg: &str| Err(Error::InvalidParameter(format!("{name}: {msg}")));
    match name {
        Complete(n) => {
            let mut g = Graph::empty(n)?;
            for j in 1..n {
                for i in 0..j {
                    g.add_edge(i, j)?;
                }
            }
            Ok(g)
        }
        Path(n) => {
            if n == 0 {
                return bad("a path needs at least one vertex");
            }
            let mut g = Graph::empty(n)?;
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        Cycle(n) => {
            if n < 3 {
                return bad("a cycle needs at least three vertices");
            }
            let mut g = build_named(Path(n))?;
            g.add_edge(n - 1, 0)?;
            Ok(g)
        }
        CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return bad("both sides must be nonempty");
            }
            let mut g = Graph::empty(a + b)?;
            for i in 0..a {
                for j in a..a + b {
                    g.add_edge(i, j)?;
                }
            }
            Ok(g)
        }
        Star(n) => {
            if n == 0 {
                return bad("a star needs at least one leaf");
            }
            build_named(CompleteBipartite(1, n))
        }
        // u = 0, v = 1, x1 = 2, x2 = 3
        Paw => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3)]),
        // u = 0, v = 1, x1 = 2, x2 = 3, x3 = 4
        Chair => Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]),
        Empty(n) => Graph::empty(n),
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match *self {
            Complete(n) => write!(f, "K{n}"),
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Star(n) => write!(f, "star{n}"),
            Paw => f.write_str("paw"),
            Chair => f.write_str("chair"),
            Empty(n) => write!(f, "empty{n}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `K4`, `P5`, `C6`, `K2,3`, `star3`, `paw`, `chair`, `empty5`
    /// (case-insensitive), plus `G1`/`G2` as aliases for paw/chair.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad graph name {s:?}")))
        };
        match lower.as_str() {
            "paw" | "g1" => return Ok(NamedGraph::Paw),
            "chair" | "fork" | "g2" => return Ok(NamedGraph::Chair),
            "claw" => return Ok(NamedGraph::Star(3)),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("empty") {
            return Ok(NamedGraph::Empty(num(rest)?));
        }
        if let Some(rest) = lower.strip_prefix("star") {
            return Ok(NamedGraph::Star(num(rest)?));
        }
        if let Some(rest) = lower.strip_prefix('k') {
            if let Some((a, b)) = rest.split_once(',') {
                return Ok(NamedGraph::CompleteBipartite(num(a)?, num(b)?));
            }
            return Ok(NamedGraph::Complete(num(rest)?));
        }
        if let Some(rest) = lower.strip_prefix('p') {
            return Ok(NamedGraph::Path(num(rest)?));
        }
        if let Some(rest) = lower.strip_prefix('c') {
            return Ok(NamedGraph::Cycle(num(rest)?));
        }
        Err(Error::InvalidParameter(format!("unknown graph name {s:?}")))
    }
}
