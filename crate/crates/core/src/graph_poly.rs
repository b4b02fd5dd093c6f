//! Generating polynomials of induced-subgraph properties.
//!
//! `P_A(G, x) = Σ_{S ⊆ V, G[S] ∈ A} x^{|S|}`. Independence counts come from an
//! include/exclude recursion over bitsets; dependence counts are the
//! complement `C(n, k) − i_k`, so `D(G, x) + I(G, x) = (x + 1)^n` holds by
//! construction on the fast path and is checked against the generic
//! enumerator in tests.

use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::poly::Polynomial;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Vertex limit for the generic 2ⁿ-subset enumerator.
pub const MAX_GENERIC_ORDER: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    Independent,
    Dependent,
    Codependent,
    Property,
}

/// Subset counts indexed by size `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSequence {
    pub counts: Vec<BigInt>,
    pub kind: CountKind,
}

impl CountSequence {
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.counts.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Heredity {
    /// Closed under taking induced subgraphs.
    Hereditary,
    /// Closed under taking induced supergraphs.
    CoHereditary,
    Neither,
}

impl Heredity {
    pub fn flipped(self) -> Self {
        match self {
            Heredity::Hereditary => Heredity::CoHereditary,
            Heredity::CoHereditary => Heredity::Hereditary,
            Heredity::Neither => Heredity::Neither,
        }
    }
}

type Test = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

/// A graph property evaluated on induced subgraphs, with its declared
/// heredity. For co-hereditary properties `minimal_order` may record the
/// largest order of a minimal member (the `l` of the exchange condition).
#[derive(Clone)]
pub struct PropertyPredicate {
    name: String,
    heredity: Heredity,
    minimal_order: Option<usize>,
    test: Test,
}

impl PropertyPredicate {
    pub fn new(
        name: impl Into<String>,
        heredity: Heredity,
        minimal_order: Option<usize>,
        test: impl Fn(&Graph) -> bool + Send + Sync + 'static,
    ) -> Self {
        PropertyPredicate {
            name: name.into(),
            heredity,
            minimal_order,
            test: Arc::new(test),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn heredity(&self) -> Heredity {
        self.heredity
    }

    pub fn minimal_order(&self) -> Option<usize> {
        self.minimal_order
    }

    #[inline]
    pub fn holds(&self, g: &Graph) -> bool {
        (self.test)(g)
    }

    /// The complementary property.
    pub fn negated(&self) -> Self {
        let inner = self.test.clone();
        PropertyPredicate {
            name: format!("not-{}", self.name),
            heredity: self.heredity.flipped(),
            minimal_order: None,
            test: Arc::new(move |g| !inner(g)),
        }
    }

    /// At least one edge. Minimal members: K₂.
    pub fn has_edge() -> Self {
        Self::new("has-edge", Heredity::CoHereditary, Some(2), |g| g.edge_count() > 0)
    }

    pub fn edgeless() -> Self {
        Self::new("edgeless", Heredity::Hereditary, None, |g| g.edge_count() == 0)
    }

    /// Complete graphs, including the empty graph.
    pub fn complete() -> Self {
        Self::new("complete", Heredity::Hereditary, None, |g| {
            let n = g.order();
            g.edge_count() == n * n.saturating_sub(1) / 2
        })
    }

    pub fn forest() -> Self {
        Self::new("forest", Heredity::Hereditary, None, is_forest)
    }

    /// Contains a triangle. Minimal members: K₃.
    pub fn contains_triangle() -> Self {
        Self::new("contains-triangle", Heredity::CoHereditary, Some(3), has_triangle)
    }

    pub fn always() -> Self {
        Self::new("always", Heredity::Hereditary, None, |_| true)
    }
}

impl fmt::Debug for PropertyPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertyPredicate")
            .field("name", &self.name)
            .field("heredity", &self.heredity)
            .field("minimal_order", &self.minimal_order)
            .finish()
    }
}

fn is_forest(g: &Graph) -> bool {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

fn has_triangle(g: &Graph) -> bool {
    g.edges().into_iter().any(|(u, v)| g.neighbors(u) & g.neighbors(v) != 0)
}

/// Generic enumerator: the coefficient of `x^k` counts the `k`-subsets whose
/// induced subgraph satisfies `pred`.
pub fn property_polynomial(g: &Graph, pred: &PropertyPredicate) -> Result<Polynomial> {
    let n = g.order();
    if n > MAX_GENERIC_ORDER {
        return Err(Error::SizeLimit {
            what: "vertex count for generic property enumeration",
            got: n,
            max: MAX_GENERIC_ORDER,
        });
    }
    let mut counts = vec![0u64; n + 1];
    for mask in 0..(1u64 << n) {
        let mask = mask as u32;
        if pred.holds(&g.induced(mask)) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(Polynomial::from_u64s(&counts))
}

fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64; n + 1];
    for k in 1..n {
        row[k] = row[k - 1] * (n - k + 1) as u64 / k as u64;
    }
    row
}

fn count_independent(g: &Graph, cand: u32) -> Vec<u64> {
    if cand == 0 {
        return vec![1];
    }
    let mut isolated = 0u32;
    let mut pick = 0usize;
    let mut pick_deg = 0u32;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let d = (g.neighbors(v) & cand).count_ones();
        if d == 0 {
            isolated |= 1 << v;
        } else if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
        rest &= rest - 1;
    }
    let size = cand.count_ones() as usize;
    let mut out = vec![0u64; size + 1];
    if isolated != 0 {
        let sub = count_independent(g, cand & !isolated);
        let row = binomial_row(isolated.count_ones() as usize);
        for (i, s) in sub.iter().enumerate() {
            for (j, b) in row.iter().enumerate() {
                out[i + j] += s * b;
            }
        }
        return out;
    }
    let without = count_independent(g, cand & !(1 << pick));
    let with = count_independent(g, cand & !(1 << pick) & !g.neighbors(pick));
    for (k, c) in without.into_iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in with.into_iter().enumerate() {
        out[k + 1] += c;
    }
    out
}

/// `i_k(G)` for `k = 0..=n`.
pub fn independence_counts(g: &Graph) -> Vec<u64> {
    let mut counts = count_independent(g, g.vertex_mask());
    counts.resize(g.order() + 1, 0);
    counts
}

/// `d_k(G) = C(n, k) − i_k(G)` for `k = 0..=n`.
pub fn dependence_counts(g: &Graph) -> Vec<u64> {
    let row = binomial_row(g.order());
    independence_counts(g)
        .into_iter()
        .zip(row)
        .map(|(i, c)| c - i)
        .collect()
}

/// `I(G, x)`.
pub fn independence_polynomial(g: &Graph) -> Polynomial {
    Polynomial::from_u64s(&independence_counts(g))
}

/// `D(G, x)`; identically zero iff `g` has no edges.
pub fn dependence_polynomial(g: &Graph) -> Polynomial {
    Polynomial::from_u64s(&dependence_counts(g))
}

/// `d̄_k = d_{n−k}`: the number of `k`-sets whose complement is dependent.
pub fn codependent_counts(g: &Graph) -> CountSequence {
    let mut counts: Vec<BigInt> = dependence_counts(g).into_iter().map(BigInt::from).collect();
    counts.reverse();
    CountSequence {
        counts,
        kind: CountKind::Codependent,
    }
}

pub fn clique_polynomial(g: &Graph) -> Result<Polynomial> {
    property_polynomial(g, &PropertyPredicate::complete())
}

pub fn acyclic_polynomial(g: &Graph) -> Result<Polynomial> {
    property_polynomial(g, &PropertyPredicate::forest())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyKind {
    Dependence,
    Independence,
    Clique,
    Acyclic,
}

impl PolyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PolyKind::Dependence => "dependence",
            PolyKind::Independence => "independence",
            PolyKind::Clique => "clique",
            PolyKind::Acyclic => "acyclic",
        }
    }
}

impl FromStr for PolyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dependence" | "d" => Ok(PolyKind::Dependence),
            "independence" | "i" => Ok(PolyKind::Independence),
            "clique" => Ok(PolyKind::Clique),
            "acyclic" | "forest" => Ok(PolyKind::Acyclic),
            other => Err(Error::InvalidParameter(format!("unknown polynomial kind {other:?}"))),
        }
    }
}

pub fn graph_polynomial(g: &Graph, kind: PolyKind) -> Result<Polynomial> {
    match kind {
        PolyKind::Dependence => Ok(dependence_polynomial(g)),
        PolyKind::Independence => Ok(independence_polynomial(g)),
        PolyKind::Clique => clique_polynomial(g),
        PolyKind::Acyclic => acyclic_polynomial(g),
    }
}

fn x_times(k: usize, p: &Polynomial) -> Polynomial {
    p.shl(k)
}

/// `(x + 1)^e − 1`.
fn binom_minus_one(e: usize) -> Polynomial {
    &Polynomial::one_plus_x_pow(e) - &Polynomial::one()
}

/// `D₁ + D₂ + D₃` for the two-hub family, split by whether a dependent set
/// contains u only, v only, or both.
pub fn family_closed_form(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    let FamilySpec {
        a,
        b,
        c,
        n,
        uv_adjacent,
    } = *spec;
    let hub_term = |d: usize| x_times(1, &(&Polynomial::one_plus_x_pow(n - d - 2) * &binom_minus_one(d)));
    let d1 = hub_term(a);
    let d2 = hub_term(b);
    let d3 = if uv_adjacent {
        x_times(2, &Polynomial::one_plus_x_pow(n - 2))
    } else {
        x_times(2, &(&Polynomial::one_plus_x_pow(n - c - 2) * &binom_minus_one(c)))
    };
    Ok(&(&d1 + &d2) + &d3)
}

/// The reduced factor of `D(G_spec, x − 1)`:
/// `Q₁ = x^{c+1} + x^c − x^{c−a} − x^{c−b} − x + 1` (hubs non-adjacent) or
/// `Q₂ = x^{b+1} + x^b − x^{b−a} − 1` (hubs adjacent).
pub fn reduced_q_polynomial(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    let FamilySpec {
        a, b, c, uv_adjacent, ..
    } = *spec;
    let mono = |coef: i64, k: usize| Polynomial::monomial(coef, k);
    let terms = if uv_adjacent {
        vec![mono(1, b + 1), mono(1, b), mono(-1, b - a), mono(-1, 0)]
    } else {
        vec![
            mono(1, c + 1),
            mono(1, c),
            mono(-1, c - a),
            mono(-1, c - b),
            mono(-1, 1),
            mono(1, 0),
        ]
    };
    Ok(terms.iter().fold(Polynomial::zero(), |acc, t| &acc + t))
}

/// The cofactor `(x − 1)·x^e` with `D(G_spec, x − 1) = (x − 1)·x^e·Q(x)`.
pub fn reduced_cofactor(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    let e = if spec.uv_adjacent {
        spec.n - spec.b - 2
    } else {
        spec.n - spec.c - 2
    };
    Ok(x_times(e, &Polynomial::from_i64s(&[-1, 1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{add_isolated, build_family, build_named, enumerate_labeled_graphs, NamedGraph};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn named(n: NamedGraph) -> Graph {
        build_named(n).unwrap()
    }

    #[test]
    fn property_polynomial_examples() {
        let k3 = named(NamedGraph::Complete(3));
        assert_eq!(
            property_polynomial(&k3, &PropertyPredicate::has_edge()).unwrap(),
            p(&[0, 0, 3, 1])
        );
        for n in 0..=6 {
            let g = named(NamedGraph::Path(n.max(1)));
            assert_eq!(
                property_polynomial(&g, &PropertyPredicate::always()).unwrap(),
                Polynomial::one_plus_x_pow(g.order())
            );
        }
        // cliques of P4: empty set, 4 vertices, 3 edges
        let p4 = named(NamedGraph::Path(4));
        assert_eq!(clique_polynomial(&p4).unwrap(), p(&[1, 4, 3]));
        // every induced subgraph of a tree is a forest
        assert_eq!(acyclic_polynomial(&p4).unwrap(), Polynomial::one_plus_x_pow(4));
        // K4: all subsets except those of size >= 3
        assert_eq!(
            acyclic_polynomial(&named(NamedGraph::Complete(4))).unwrap(),
            p(&[1, 4, 6])
        );
        let big = Graph::empty(27).unwrap();
        assert!(property_polynomial(&big, &PropertyPredicate::always()).is_err());
    }

    #[test]
    fn dependence_examples() {
        let k2 = named(NamedGraph::Complete(2));
        let two_k2 = crate::graph::disjoint_union(&k2, &k2).unwrap();
        assert_eq!(dependence_polynomial(&two_k2), p(&[0, 0, 2, 4, 1]));
        assert_eq!(dependence_polynomial(&named(NamedGraph::Path(4))), p(&[0, 0, 3, 4, 1]));
        assert!(dependence_polynomial(&Graph::empty(5).unwrap()).is_zero());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_polynomial(&named(NamedGraph::Complete(2))), p(&[1, 2]));
        assert_eq!(
            independence_polynomial(&Graph::empty(3).unwrap()),
            Polynomial::one_plus_x_pow(3)
        );
        // (x+1)^5 - (x^5 + 5x^4 + 8x^3 + 4x^2) = 1 + 5x + 6x^2 + 2x^3
        assert_eq!(independence_polynomial(&named(NamedGraph::Chair)), p(&[1, 5, 6, 2]));
    }

    #[test]
    fn codependent_examples() {
        let g = add_isolated(&named(NamedGraph::Complete(2)), 2).unwrap();
        let c = codependent_counts(&g);
        assert_eq!(
            c.counts,
            vec![1, 2, 1, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(c.kind, CountKind::Codependent);
        let c4 = codependent_counts(&named(NamedGraph::Cycle(4)));
        assert_eq!(c4.to_polynomial(), p(&[1, 4, 4]));
        assert!(codependent_counts(&Graph::empty(4).unwrap()).to_polynomial().is_zero());
    }

    #[test]
    fn fast_counts_match_generic_enumerator() {
        for n in 0..=6 {
            for g in enumerate_labeled_graphs(n)
                .unwrap()
                .step_by(if n == 6 { 11 } else { 1 })
            {
                assert_eq!(
                    independence_polynomial(&g),
                    property_polynomial(&g, &PropertyPredicate::edgeless()).unwrap()
                );
                assert_eq!(
                    dependence_polynomial(&g),
                    property_polynomial(&g, &PropertyPredicate::has_edge()).unwrap()
                );
            }
        }
    }

    #[test]
    fn large_sparse_graph() {
        // perfect matching on 32 vertices: I = (1 + 2x)^16
        let k2 = named(NamedGraph::Complete(2));
        let mut g = Graph::empty(0).unwrap();
        for _ in 0..16 {
            g = crate::graph::disjoint_union(&g, &k2).unwrap();
        }
        assert_eq!(independence_polynomial(&g), p(&[1, 2]).pow(16));
        let i32 = independence_polynomial(&Graph::empty(32).unwrap());
        assert_eq!(i32, Polynomial::one_plus_x_pow(32));
    }

    #[test]
    fn closed_form_examples() {
        let chair = FamilySpec::new(1, 2, 3, true, 5).unwrap();
        assert_eq!(family_closed_form(&chair).unwrap(), p(&[0, 0, 4, 8, 5, 1]));
        let two_k2 = FamilySpec::new(1, 1, 2, false, 4).unwrap();
        assert_eq!(family_closed_form(&two_k2).unwrap(), p(&[0, 0, 2, 4, 1]));
        let p3 = FamilySpec::new(1, 1, 1, false, 3).unwrap();
        assert_eq!(family_closed_form(&p3).unwrap(), p(&[0, 0, 2, 1]));
        assert_eq!(dependence_polynomial(&build_family(&p3).unwrap()), p(&[0, 0, 2, 1]));
        // K2 + K1: x^2 (x + 1)
        let k2k1 = FamilySpec::new(0, 1, 1, false, 3).unwrap();
        assert_eq!(family_closed_form(&k2k1).unwrap(), p(&[0, 0, 1, 1]));
    }

    #[test]
    fn reduced_q_examples() {
        // c=3, a=2, b=2: x^4 + x^3 - 3x + 1 = (x - 1)(x^3 + 2x^2 + 2x - 1)
        let q = reduced_q_polynomial(&FamilySpec::new(2, 2, 3, false, 5).unwrap()).unwrap();
        assert_eq!(q, p(&[1, -3, 0, 1, 1]));
        assert_eq!(q, &p(&[-1, 1]) * &p(&[-1, 2, 2, 1]));
        for b in 0..5 {
            let q = reduced_q_polynomial(&FamilySpec::new(0, b, b, true, b + 2).unwrap()).unwrap();
            assert_eq!(q, &Polynomial::monomial(1, b + 1) - &Polynomial::one());
        }
        let q = reduced_q_polynomial(&FamilySpec::new(1, 1, 1, true, 3).unwrap()).unwrap();
        assert_eq!(q, p(&[-2, 1, 1]));
        assert_eq!(q, &p(&[-1, 1]) * &p(&[2, 1]));
    }

    #[test]
    fn predicates_declare_heredity_correctly() {
        // spot check: closure under induced subgraphs / supergraphs on n <= 4
        for pred in [
            PropertyPredicate::edgeless(),
            PropertyPredicate::complete(),
            PropertyPredicate::forest(),
            PropertyPredicate::has_edge(),
            PropertyPredicate::contains_triangle(),
        ] {
            for g in enumerate_labeled_graphs(4).unwrap() {
                for mask in 0u32..16 {
                    let sub = g.induced(mask);
                    match pred.heredity() {
                        Heredity::Hereditary if pred.holds(&g) => assert!(pred.holds(&sub)),
                        Heredity::CoHereditary if pred.holds(&sub) => assert!(pred.holds(&g)),
                        _ => {}
                    }
                }
            }
        }
        assert_eq!(
            PropertyPredicate::edgeless().negated().heredity(),
            Heredity::CoHereditary
        );
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("dependence".parse::<PolyKind>().unwrap(), PolyKind::Dependence);
        assert_eq!("Clique".parse::<PolyKind>().unwrap(), PolyKind::Clique);
        assert!("matching".parse::<PolyKind>().is_err());
    }
}
