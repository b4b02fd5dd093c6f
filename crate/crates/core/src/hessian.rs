//! Hessian certificates for ultra log-concavity of dependence polynomials.
//!
//! For `1 ≤ k ≤ n−3` the quadratic form `q_k(y, z)` built from co-dependent
//! counts has Hessian
//!
//! ```text
//! [[(n−k+1)!·d̄_{k−1}, (n−k)!·k·d̄_k], [·, (n−k−1)!·k(k+1)·d̄_{k+1}]]
//! ```
//!
//! which also equals `(n−k−1)!·Σ_S Q_S` over co-dependent `(k−1)`-sets `S`.
//! Each `Q_S` is one of eight matrices `H₁..H₈(r)` with `r = n−k+1`, so the
//! determinant is `((n−k−1)!)²·tᵀAt` for the case histogram `t`. All three
//! routes are computed independently and compared.

use crate::error::{Error, Result};
use crate::graph::{add_isolated, build_named, k_subsets, Graph, NamedGraph, PatternMatcher};
use crate::graph_poly::dependence_counts;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Add;
use std::sync::OnceLock;

/// Largest graph accepted by the certificate routines; the subset sums are
/// exponential in `n`.
pub const MAX_HESSIAN_ORDER: usize = 20;

fn factorials() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![BigInt::one()];
        for i in 1..=32u32 {
            let next = &t[i as usize - 1] * i;
            t.push(next);
        }
        t
    })
}

/// `n!` for `n ≤ 32`.
pub fn factorial(n: usize) -> &'static BigInt {
    &factorials()[n]
}

/// The symmetric matrix `[[α, β], [β, γ]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymMatrix2 {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
}

impl SymMatrix2 {
    pub fn new(alpha: impl Into<BigInt>, beta: impl Into<BigInt>, gamma: impl Into<BigInt>) -> Self {
        SymMatrix2 {
            alpha: alpha.into(),
            beta: beta.into(),
            gamma: gamma.into(),
        }
    }

    pub fn zero() -> Self {
        SymMatrix2::new(0, 0, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.alpha * &self.gamma - &self.beta * &self.beta
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        SymMatrix2 {
            alpha: &self.alpha * c,
            beta: &self.beta * c,
            gamma: &self.gamma * c,
        }
    }
}

impl Add<&SymMatrix2> for SymMatrix2 {
    type Output = SymMatrix2;

    fn add(self, rhs: &SymMatrix2) -> SymMatrix2 {
        SymMatrix2 {
            alpha: self.alpha + &rhs.alpha,
            beta: self.beta + &rhs.beta,
            gamma: self.gamma + &rhs.gamma,
        }
    }
}

impl fmt::Display for SymMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.alpha, self.beta, self.beta, self.gamma)
    }
}

fn check_r(r: usize) -> Result<()> {
    if r < 4 {
        return Err(Error::InvalidParameter(format!("r = {r} must be at least 4")));
    }
    Ok(())
}

/// `H_case(r)` for `case ∈ 1..=8` and `r ≥ 4`, with `m = r − 1 = n − k`.
pub fn case_matrix(case: usize, r: usize) -> Result<SymMatrix2> {
    check_r(r)?;
    let r = r as i64;
    let m = r - 1;
    let mr = m * r;
    let h = match case {
        1 => SymMatrix2::new(mr, m * (m - 1), (m - 1) * (m - 2)),
        2 => SymMatrix2::new(mr, m * m, m * (m - 1) - 2),
        3 => SymMatrix2::new(mr, m * m, m * (m - 1)),
        4..=8 => SymMatrix2::new(mr, mr, mr - 2 * (8 - case as i64)),
        _ => {
            return Err(Error::InvalidParameter(format!("case {case} is not in 1..=8")));
        }
    };
    Ok(h)
}

pub fn case_matrices(r: usize) -> Result<[SymMatrix2; 8]> {
    let mut out: [SymMatrix2; 8] = Default::default();
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = case_matrix(i + 1, r)?;
    }
    Ok(out)
}

impl Default for SymMatrix2 {
    fn default() -> Self {
        SymMatrix2::zero()
    }
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    let n = g.order();
    if n > MAX_HESSIAN_ORDER {
        return Err(Error::SizeLimit {
            what: "vertex count for Hessian certificates",
            got: n,
            max: MAX_HESSIAN_ORDER,
        });
    }
    if k < 1 || k + 3 > n {
        return Err(Error::InvalidParameter(format!("k = {k} outside 1..=n-3 for n = {n}")));
    }
    Ok(())
}

/// `Q_S` from first principles: co-dependent singletons and pairs of `G − S`.
pub fn residual_matrix(g: &Graph, s: u32, k: usize) -> Result<SymMatrix2> {
    check_k(g, k)?;
    let n = g.order();
    let full = g.vertex_mask();
    if s & !full != 0 || s.count_ones() as usize != k - 1 {
        return Err(Error::Precondition(format!(
            "subset {s:#b} must have exactly k - 1 = {} vertices of the graph",
            k - 1
        )));
    }
    let rest = full & !s;
    if !g.mask_has_edge(rest) {
        return Err(Error::Precondition(format!("subset {s:#b} is not co-dependent")));
    }
    let singles = ones(rest).filter(|&v| g.mask_has_edge(rest & !(1 << v))).count();
    let mut pairs = 0usize;
    let verts: Vec<usize> = ones(rest).collect();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if g.mask_has_edge(rest & !(1 << u) & !(1 << v)) {
                pairs += 1;
            }
        }
    }
    let m = n - k;
    Ok(SymMatrix2::new(m * (m + 1), m * singles, 2 * pairs))
}

fn ones(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            v
        })
    })
}

/// The unique `i` with `q = H_i(r)`.
pub fn classify_case(q: &SymMatrix2, r: usize) -> Result<usize> {
    let hs = case_matrices(r)?;
    let mut hits = (1..=8).filter(|&i| &hs[i - 1] == q);
    match (hits.next(), hits.next()) {
        (Some(i), None) => Ok(i),
        _ => Err(Error::Classification {
            matrix: q.to_string(),
            r,
        }),
    }
}

/// `t_i` = number of co-dependent `(k−1)`-sets with `Q_S = H_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseHistogram {
    pub t: [u64; 8],
    pub r: usize,
    pub k: usize,
}

impl CaseHistogram {
    pub fn total(&self) -> u64 {
        self.t.iter().sum()
    }

    pub fn as_bigints(&self) -> [BigInt; 8] {
        self.t.map(BigInt::from)
    }
}

/// Classifies every co-dependent `(k−1)`-set and returns the histogram
/// together with `Σ_S Q_S`. A classification failure names the graph, the
/// subset and `k`.
pub fn case_histogram(g: &Graph, k: usize) -> Result<(CaseHistogram, SymMatrix2)> {
    check_k(g, k)?;
    let n = g.order();
    let r = n - k + 1;
    let full = g.vertex_mask();
    let mut t = [0u64; 8];
    let mut sum = SymMatrix2::zero();
    for s in k_subsets(n, k - 1) {
        if !g.mask_has_edge(full & !s) {
            continue;
        }
        let q = residual_matrix(g, s, k)?;
        let case = classify_case(&q, r).map_err(|_| Error::Classification {
            matrix: format!("{q} (graph {}, S = {s:#b}, k = {k})", g.to_graph6()),
            r,
        })?;
        t[case - 1] += 1;
        sum = sum + &q;
    }
    Ok((CaseHistogram { t, r, k }, sum))
}

fn codependent(g: &Graph) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = dependence_counts(g).into_iter().map(BigInt::from).collect();
    d.reverse();
    d
}

/// `∇²q_k` assembled from co-dependent counts alone.
pub fn hessian_from_counts(g: &Graph, k: usize) -> Result<SymMatrix2> {
    check_k(g, k)?;
    let n = g.order();
    let dbar = codependent(g);
    let kk = BigInt::from(k);
    Ok(SymMatrix2 {
        alpha: factorial(n - k + 1) * &dbar[k - 1],
        beta: factorial(n - k) * &kk * &dbar[k],
        gamma: factorial(n - k - 1) * &kk * BigInt::from(k + 1) * &dbar[k + 1],
    })
}

/// `(1 + 1/k)(1 + 1/(n−k))·d̄_{k−1}·d̄_{k+1} − d̄_k²`.
pub fn ulc_gap(g: &Graph, k: usize) -> Result<BigRational> {
    check_k(g, k)?;
    let n = g.order();
    let dbar = codependent(g);
    let frac = |num: usize, den: usize| BigRational::new(num.into(), den.into());
    let coef = frac(k + 1, k) * frac(n - k + 1, n - k);
    let outer = BigRational::from_integer(&dbar[k - 1] * &dbar[k + 1]);
    let sq = BigRational::from_integer(&dbar[k] * &dbar[k]);
    Ok(coef * outer - sq)
}

/// The Hessian of `q_k` with everything needed to audit it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessianReport {
    pub k: usize,
    pub r: usize,
    pub matrix: SymMatrix2,
    pub det: BigInt,
    pub histogram: CaseHistogram,
    #[serde(with = "rational_pair")]
    pub ulc_gap: BigRational,
}

mod rational_pair {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Pair {
        numerator: String,
        denominator: String,
    }

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        Pair {
            numerator: q.numer().to_string(),
            denominator: q.denom().to_string(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let p = Pair::deserialize(d)?;
        let parse = |s: &str| s.parse::<BigInt>().map_err(serde::de::Error::custom);
        let den = parse(&p.denominator)?;
        if den == BigInt::from(0) {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(BigRational::new(parse(&p.numerator)?, den))
    }
}

/// `∇²q_k` computed three ways, which must agree:
/// from co-dependent counts, as `(n−k−1)!·Σ_S Q_S`, and (determinant only) as
/// `((n−k−1)!)²·tᵀAt`. Also checks `det = k²((n−k)!)²·ulc_gap`.
pub fn hessian(g: &Graph, k: usize) -> Result<HessianReport> {
    check_k(g, k)?;
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let n = g.order();
    let r = n - k + 1;
    let direct = hessian_from_counts(g, k)?;
    let (histogram, sum) = case_histogram(g, k)?;
    let summed = sum.scale(factorial(n - k - 1));
    let det = direct.det();
    let a = matrix_a(r)?;
    let via_a = factorial(n - k - 1) * factorial(n - k - 1) * quadratic_form(&a, &histogram.as_bigints());
    let gap = ulc_gap(g, k)?;
    let scale = BigInt::from(k * k) * factorial(n - k) * factorial(n - k);
    let via_gap = gap.clone() * BigRational::from_integer(scale);

    let witness = || {
        format!(
            "graph {} k = {k}: counts {direct}, subset sum {summed}, t = {:?}, det {det}, \
             tAt route {via_a}, gap route {via_gap}",
            g.to_graph6(),
            histogram.t
        )
    };
    if summed != direct
        || via_a != det
        || via_gap != BigRational::from_integer(det.clone())
        || histogram.total() != u64::try_from(&codependent(g)[k - 1]).unwrap_or(u64::MAX)
    {
        return Err(Error::Consistency(witness()));
    }
    Ok(HessianReport {
        k,
        r,
        matrix: direct,
        det,
        histogram,
        ulc_gap: gap,
    })
}

/// Reports for every admissible `k`.
pub fn hessian_all(g: &Graph) -> Result<Vec<HessianReport>> {
    (1..=g.order().saturating_sub(3)).map(|k| hessian(g, k)).collect()
}

pub type Matrix8 = [[BigInt; 8]; 8];

/// Entries of the closed-form matrix divided by `(r − 1)`, each as
/// `(coefficient of r, constant)`.
const A_PATTERN: [[(i64, i64); 8]; 8] = [
    [(-2, 4), (-2, 2), (-1, 2), (-3, 0), (-2, 0), (-1, 0), (0, 0), (1, 0)],
    [(-2, 2), (-3, 1), (-2, 1), (-5, 0), (-4, 0), (-3, 0), (-2, 0), (-1, 0)],
    [(-1, 2), (-2, 1), (-1, 1), (-4, 0), (-3, 0), (-2, 0), (-1, 0), (0, 0)],
    [(-3, 0), (-5, 0), (-4, 0), (-8, 0), (-7, 0), (-6, 0), (-5, 0), (-4, 0)],
    [(-2, 0), (-4, 0), (-3, 0), (-7, 0), (-6, 0), (-5, 0), (-4, 0), (-3, 0)],
    [(-1, 0), (-3, 0), (-2, 0), (-6, 0), (-5, 0), (-4, 0), (-3, 0), (-2, 0)],
    [(0, 0), (-2, 0), (-1, 0), (-5, 0), (-4, 0), (-3, 0), (-2, 0), (-1, 0)],
    [(1, 0), (-1, 0), (0, 0), (-4, 0), (-3, 0), (-2, 0), (-1, 0), (0, 0)],
];

/// The closed-form matrix `A(r)`.
pub fn matrix_a_closed_form(r: usize) -> Result<Matrix8> {
    check_r(r)?;
    let r = r as i64;
    Ok(A_PATTERN.map(|row| row.map(|(c, d)| BigInt::from((r - 1) * (c * r + d)))))
}

/// `A_ij = ½(α_iγ_j + α_jγ_i − 2β_iβ_j)` from the case matrices.
pub fn matrix_a_from_cases(r: usize) -> Result<Matrix8> {
    let hs = case_matrices(r)?;
    let two = BigInt::from(2);
    let mut a: Matrix8 = Default::default();
    for i in 0..8 {
        for j in 0..8 {
            let twice = &hs[i].alpha * &hs[j].gamma + &hs[j].alpha * &hs[i].gamma - &two * &hs[i].beta * &hs[j].beta;
            if (&twice % &two) != BigInt::zero() {
                return Err(Error::Consistency(format!("A[{i}][{j}] is not an integer at r = {r}")));
            }
            a[i][j] = twice / &two;
        }
    }
    Ok(a)
}

/// `A(r)`, after checking that both constructions agree.
pub fn matrix_a(r: usize) -> Result<Matrix8> {
    let closed = matrix_a_closed_form(r)?;
    let rebuilt = matrix_a_from_cases(r)?;
    if closed != rebuilt {
        return Err(Error::Consistency(format!(
            "closed-form A and case reconstruction differ at r = {r}"
        )));
    }
    Ok(closed)
}

/// `tᵀAt`.
pub fn quadratic_form(a: &Matrix8, t: &[BigInt; 8]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..8 {
        if t[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            acc += &a[i][j] * &t[i] * &t[j];
        }
    }
    acc
}

/// Entries of `A(r)` that are positive, as `(row, col)` pairs, 1-based.
pub fn positive_entries(a: &Matrix8) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.is_positive() {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

/// Tests the ULC theorem's hypothesis: `K₂ ∪ 2K₁`-free, or an independent
/// set of size `n − 2`.
#[derive(Debug, Clone)]
pub struct UlcHypothesis {
    k2_2k1: PatternMatcher,
}

impl UlcHypothesis {
    pub fn new() -> Self {
        let k2 = build_named(NamedGraph::Complete(2)).expect("K2");
        let pattern = add_isolated(&k2, 2).expect("K2 + 2K1");
        UlcHypothesis {
            k2_2k1: PatternMatcher::new(&pattern).expect("4-vertex pattern"),
        }
    }

    pub fn k2_2k1_free(&self, g: &Graph) -> bool {
        !self.k2_2k1.occurs_in(g)
    }

    /// `alpha` is the independence number of `g`.
    pub fn holds_with_alpha(&self, g: &Graph, alpha: usize) -> bool {
        alpha + 2 >= g.order() || self.k2_2k1_free(g)
    }

    pub fn holds(&self, g: &Graph) -> bool {
        self.holds_with_alpha(g, crate::graph::independence_number(g))
    }
}

impl Default for UlcHypothesis {
    fn default() -> Self {
        Self::new()
    }
}

/// One CSV/JSON report row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessianRow {
    pub graph6: String,
    pub k: usize,
    pub r: usize,
    pub t: [u64; 8],
    pub det: String,
    pub ulc_gap_numerator: String,
    pub ulc_gap_denominator: String,
}

impl HessianRow {
    pub fn new(g: &Graph, rep: &HessianReport) -> Self {
        HessianRow {
            graph6: g.to_graph6(),
            k: rep.k,
            r: rep.r,
            t: rep.histogram.t,
            det: rep.det.to_string(),
            ulc_gap_numerator: rep.ulc_gap.numer().to_string(),
            ulc_gap_denominator: rep.ulc_gap.denom().to_string(),
        }
    }

    pub const CSV_HEADER: &'static str = "graph6,k,r,t1,t2,t3,t4,t5,t6,t7,t8,det,ulc_gap_numerator,ulc_gap_denominator";

    pub fn to_csv(&self) -> String {
        let t: Vec<String> = self.t.iter().map(u64::to_string).collect();
        format!(
            "{},{},{},{},{},{},{}",
            self.graph6,
            self.k,
            self.r,
            t.join(","),
            self.det,
            self.ulc_gap_numerator,
            self.ulc_gap_denominator
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, enumerate_labeled_graphs};

    fn named(n: NamedGraph) -> Graph {
        build_named(n).unwrap()
    }

    fn k2_2k1() -> Graph {
        add_isolated(&named(NamedGraph::Complete(2)), 2).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual_matrix(&k2_2k1(), 0, 1).unwrap(), SymMatrix2::new(12, 6, 2));
        assert_eq!(
            residual_matrix(&named(NamedGraph::Complete(4)), 0, 1).unwrap(),
            SymMatrix2::new(12, 12, 12)
        );
        let p3k1 = add_isolated(&named(NamedGraph::Path(3)), 1).unwrap();
        assert_eq!(residual_matrix(&p3k1, 0, 1).unwrap(), SymMatrix2::new(12, 9, 4));
        // wrong size, not co-dependent
        assert!(residual_matrix(&k2_2k1(), 0b1, 1).is_err());
        let k2_3k1 = add_isolated(&named(NamedGraph::Complete(2)), 3).unwrap();
        assert!(matches!(residual_matrix(&k2_3k1, 0b01, 2), Err(Error::Precondition(_))));
        assert!(residual_matrix(&k2_3k1, 0b100, 2).is_ok());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_case(&SymMatrix2::new(12, 6, 2), 4).unwrap(), 1);
        assert_eq!(classify_case(&SymMatrix2::new(12, 9, 4), 4).unwrap(), 2);
        assert_eq!(classify_case(&SymMatrix2::new(12, 12, 4), 4).unwrap(), 4);
        assert_eq!(classify_case(&SymMatrix2::new(12, 12, 12), 4).unwrap(), 8);
        assert!(matches!(
            classify_case(&SymMatrix2::new(12, 11, 4), 4),
            Err(Error::Classification { .. })
        ));
        assert!(classify_case(&SymMatrix2::new(6, 2, 0), 3).is_err());
    }

    #[test]
    fn case_matrices_are_distinct() {
        for r in 4..=20 {
            let hs = case_matrices(r).unwrap();
            for i in 0..8 {
                for j in i + 1..8 {
                    assert_ne!(hs[i], hs[j], "r = {r}");
                }
            }
        }
    }

    #[test]
    fn hessian_examples() {
        let rep = hessian(&k2_2k1(), 1).unwrap();
        assert_eq!(rep.matrix, SymMatrix2::new(24, 12, 4));
        assert_eq!(rep.det, BigInt::from(-48));
        assert_eq!(rep.histogram.t, [1, 0, 0, 0, 0, 0, 0, 0]);
        // d-bar(K4) = (1, 4, 6, 0, 0): 4!*1, 3!*1*4, 2!*2*6
        let rep = hessian(&named(NamedGraph::Complete(4)), 1).unwrap();
        assert_eq!(rep.matrix, SymMatrix2::new(24, 24, 24));
        assert_eq!(rep.det, BigInt::zero());
        assert_eq!(rep.histogram.t, [0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(hessian(&named(NamedGraph::Complete(4)), 2).is_err());
        assert!(hessian(&Graph::empty(5).unwrap(), 1).is_err());
    }

    #[test]
    fn gap_examples() {
        assert_eq!(ulc_gap(&k2_2k1(), 1).unwrap(), q(-4, 3));
        assert_eq!(ulc_gap(&named(NamedGraph::Cycle(4)), 1).unwrap(), q(-16, 3));
    }

    #[test]
    fn matrix_a_entries() {
        let a = matrix_a(4).unwrap();
        assert_eq!(a[0][0], BigInt::from(-12));
        assert_eq!(a[0][7], BigInt::from(12));
        assert_eq!(a[7][7], BigInt::zero());
        for r in 4..=12 {
            let a = matrix_a(r).unwrap();
            assert_eq!(positive_entries(&a), vec![(1, 8), (8, 1)]);
            assert_eq!(a[0][7], BigInt::from((r - 1) * r));
        }
        assert!(matrix_a(3).is_err());
    }

    #[test]
    fn three_way_agreement_small() {
        for n in 4..=5 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                if g.edge_count() > 0 {
                    hessian_all(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn hypothesis() {
        let h = UlcHypothesis::new();
        assert!(!h.k2_2k1_free(&k2_2k1()));
        assert!(h.holds(&k2_2k1()));
        let k2 = named(NamedGraph::Complete(2));
        // 2K2 + 2K1 has an independent set of size n - 2; 3K2 does not
        let two_k2 = disjoint_union(&k2, &k2).unwrap();
        assert!(h.holds(&add_isolated(&two_k2, 2).unwrap()));
        assert!(!h.holds(&disjoint_union(&two_k2, &k2).unwrap()));
        assert!(h.holds(&named(NamedGraph::Cycle(5))));
    }

    #[test]
    fn row_csv() {
        let g = k2_2k1();
        let row = HessianRow::new(&g, &hessian(&g, 1).unwrap());
        assert_eq!(row.to_csv(), "C_,1,4,1,0,0,0,0,0,0,0,-48,-4,3");
        assert_eq!(
            HessianRow::CSV_HEADER.split(',').count(),
            row.to_csv().split(',').count()
        );
    }
}
