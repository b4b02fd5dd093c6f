//! Independence systems as explicit downward-closed set families.
//!
//! Members are bitmasks over a ground set of at most 20 elements; membership
//! is a flat bitset over all `2^ground` subsets. The exchange condition
//!
//! > for all S, T with |T| ≥ |S| + l there is x ∈ T∖S with S ∪ {x} a member
//!
//! makes the system an `l`-matroid; 1-matroids are matroids.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph_poly::{Heredity, PropertyPredicate};
use crate::poly::{check_sequence, SequenceReport};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const MAX_GROUND: usize = 20;
/// Largest ground set for default exhaustive enumeration.
pub const MAX_ENUMERATION_GROUND: usize = 5;
/// Ground 6 (7,828,354 downsets) is available on request.
pub const MAX_EXTENDED_GROUND: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SystemJson", into = "SystemJson")]
pub struct IndependenceSystem {
    ground: usize,
    family: Vec<u32>,
    members: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    ground_size: usize,
    family: Vec<u32>,
}

impl TryFrom<SystemJson> for IndependenceSystem {
    type Error = Error;

    fn try_from(j: SystemJson) -> Result<Self> {
        IndependenceSystem::new(j.ground_size, j.family)
    }
}

impl From<IndependenceSystem> for SystemJson {
    fn from(m: IndependenceSystem) -> Self {
        SystemJson {
            ground_size: m.ground,
            family: m.family,
        }
    }
}

impl IndependenceSystem {
    /// Validates downward closure; duplicates are removed and members sorted.
    pub fn new(ground: usize, mut family: Vec<u32>) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::SizeLimit {
                what: "independence system ground size",
                got: ground,
                max: MAX_GROUND,
            });
        }
        let full = if ground == 32 { u32::MAX } else { (1u32 << ground) - 1 };
        if let Some(s) = family.iter().find(|&&s| s & !full != 0) {
            return Err(Error::InvalidParameter(format!(
                "member {s:#b} has elements outside a ground set of size {ground}"
            )));
        }
        family.sort_unstable();
        family.dedup();
        let mut members = vec![0u64; (1usize << ground).div_ceil(64)];
        for &s in &family {
            members[s as usize / 64] |= 1 << (s % 64);
        }
        let m = IndependenceSystem {
            ground,
            family,
            members,
        };
        for &t in &m.family {
            let mut rest = t;
            while rest != 0 {
                let x = rest & rest.wrapping_neg();
                if !m.contains(t & !x) {
                    return Err(Error::NotDownwardClosed(format!(
                        "{} is a member but {} is not",
                        format_set(t),
                        format_set(t & !x)
                    )));
                }
                rest &= rest - 1;
            }
        }
        Ok(m)
    }

    /// From a characteristic vector over the `2^ground ≤ 64` subsets.
    pub fn from_characteristic(ground: usize, bits: u64) -> Result<Self> {
        if ground > MAX_EXTENDED_GROUND {
            return Err(Error::SizeLimit {
                what: "ground size for a 64-bit characteristic vector",
                got: ground,
                max: MAX_EXTENDED_GROUND,
            });
        }
        let family = (0..1u32 << ground).filter(|&s| bits >> s & 1 == 1).collect();
        IndependenceSystem::new(ground, family)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn family(&self) -> &[u32] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    #[inline]
    pub fn contains(&self, s: u32) -> bool {
        let i = s as usize;
        i < 1 << self.ground && self.members[i / 64] >> (i % 64) & 1 == 1
    }

    /// `i_k` for `k = 0..=ground`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.ground + 1];
        for &s in &self.family {
            f[s.count_ones() as usize] += 1;
        }
        f
    }

    /// Size of a largest member; `None` for the empty family.
    pub fn rank(&self) -> Option<usize> {
        self.family.iter().map(|s| s.count_ones() as usize).max()
    }

    /// Elements `x ∉ s` with `s ∪ {x}` a member.
    fn extensions(&self, s: u32) -> u32 {
        let mut ext = 0;
        for x in 0..self.ground {
            let bit = 1u32 << x;
            if s & bit == 0 && self.contains(s | bit) {
                ext |= bit;
            }
        }
        ext
    }

    /// The exchange condition at `l ≥ 1`.
    pub fn is_l_matroid(&self, l: usize) -> Result<bool> {
        if l == 0 {
            return Err(Error::InvalidParameter("l must be at least 1".into()));
        }
        Ok(self.exchange_witness(l).is_none())
    }

    /// A pair `(S, T)` violating the exchange condition at `l`, if any.
    pub fn exchange_witness(&self, l: usize) -> Option<(u32, u32)> {
        for &s in &self.family {
            let need = s.count_ones() as usize + l;
            let ext = self.extensions(s);
            for &t in &self.family {
                if t.count_ones() as usize >= need && t & ext == 0 {
                    return Some((s, t));
                }
            }
        }
        None
    }

    /// The least `l ≥ 1` for which the exchange condition holds.
    pub fn min_l(&self) -> Result<usize> {
        let r = self
            .rank()
            .ok_or_else(|| Error::Precondition("min_l of the empty family".into()))?;
        // at l = r + 1 no pair qualifies, so the loop always returns
        for l in 1..=r + 1 {
            if self.exchange_witness(l).is_none() {
                return Ok(l);
            }
        }
        Err(Error::Consistency(format!("no l <= {} works", r + 1)))
    }

    /// The f-vector checked against the log-concavity hierarchy with window
    /// equal to the ground size.
    pub fn mason_report(&self) -> Result<SequenceReport> {
        let f: Vec<BigInt> = self.f_vector().into_iter().map(BigInt::from).collect();
        check_sequence(&f, self.ground)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("system serializes")
    }
}

/// `{1, 3, 4}`-style rendering with 1-based elements.
pub fn format_set(s: u32) -> String {
    let items: Vec<String> = (0..32)
        .filter(|&x| s >> x & 1 == 1)
        .map(|x| (x + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn check_graph_size(g: &Graph) -> Result<()> {
    if g.order() > MAX_GROUND {
        return Err(Error::SizeLimit {
            what: "graph order for an independence system",
            got: g.order(),
            max: MAX_GROUND,
        });
    }
    Ok(())
}

/// All `S` such that `G − S` still has an edge.
pub fn from_codependent(g: &Graph) -> Result<IndependenceSystem> {
    check_graph_size(g)?;
    let full = g.vertex_mask();
    let family = (0..=full).filter(|&s| g.mask_has_edge(full & !s)).collect();
    IndependenceSystem::new(g.order(), family)
}

/// All `S` with `G − S` in the property; the property must be declared
/// co-hereditary, and a closure failure means the declaration is wrong.
pub fn from_graph_property(g: &Graph, pred: &PropertyPredicate) -> Result<IndependenceSystem> {
    check_graph_size(g)?;
    if pred.heredity() != Heredity::CoHereditary {
        return Err(Error::Precondition(format!(
            "property {} is not declared co-hereditary",
            pred.name()
        )));
    }
    let full = g.vertex_mask();
    let family = (0..=full).filter(|&s| pred.holds(&g.remove(s))).collect();
    IndependenceSystem::new(g.order(), family).map_err(|e| match e {
        Error::NotDownwardClosed(msg) => {
            Error::NotDownwardClosed(format!("property {} is declared co-hereditary but {msg}", pred.name()))
        }
        other => other,
    })
}

/// The independent sets of `g`.
pub fn independent_set_system(g: &Graph) -> Result<IndependenceSystem> {
    check_graph_size(g)?;
    let mut family = Vec::new();
    fn walk(g: &Graph, cand: u32, chosen: u32, out: &mut Vec<u32>) {
        out.push(chosen);
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only extend with higher vertices so each set is produced once
            walk(g, rest & !g.neighbors(v), chosen | 1 << v, out);
        }
    }
    walk(g, g.vertex_mask(), 0, &mut family);
    IndependenceSystem::new(g.order(), family)
}

/// All subsets of size at most `rank`: the uniform matroid.
pub fn uniform(ground: usize, rank: usize) -> Result<IndependenceSystem> {
    if ground > MAX_GROUND {
        return Err(Error::SizeLimit {
            what: "independence system ground size",
            got: ground,
            max: MAX_GROUND,
        });
    }
    let family = (0..1u32 << ground)
        .filter(|s| s.count_ones() as usize <= rank)
        .collect();
    IndependenceSystem::new(ground, family)
}

/// The ten-element system whose f-vector `(1, 10, 3, 1)` is not log-concave:
/// all singletons plus every subset of `{1, 2, 3}`.
pub fn counterexample_45() -> IndependenceSystem {
    let mut family: Vec<u32> = (0..10).map(|x| 1 << x).collect();
    family.extend([0, 0b011, 0b101, 0b110, 0b111]);
    IndependenceSystem::new(10, family).expect("fixed system is downward closed")
}

/// Streams every downward-closed family on `ground` elements once, as a
/// characteristic vector over subsets. Subsets are decided in increasing
/// numeric order, which extends inclusion, so each is offered only after all
/// its subsets.
#[derive(Debug, Clone)]
pub struct Downsets {
    total: usize,
    ground: usize,
    stack: Vec<(usize, u64)>,
}

impl Downsets {
    fn new(ground: usize) -> Self {
        Downsets {
            total: 1 << ground,
            ground,
            stack: vec![(0, 0)],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }
}

impl Iterator for Downsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while let Some((i, chosen)) = self.stack.pop() {
            if i == self.total {
                return Some(chosen);
            }
            let s = i as u32;
            let mut rest = s;
            let mut closed = true;
            while rest != 0 {
                let x = rest & rest.wrapping_neg();
                if chosen >> (s & !x) & 1 == 0 {
                    closed = false;
                    break;
                }
                rest &= rest - 1;
            }
            if closed {
                self.stack.push((i + 1, chosen | 1 << i));
            }
            self.stack.push((i + 1, chosen));
        }
        None
    }
}

/// Every downward-closed family on `ground ≤ 5` elements, the empty family
/// included (7581 on five elements).
pub fn enumerate_systems(ground: usize) -> Result<Downsets> {
    if ground > MAX_ENUMERATION_GROUND {
        return Err(Error::Unsupported(format!(
            "exhaustive enumeration on ground {ground}; use the extended enumerator for 6 or sampling beyond"
        )));
    }
    Ok(Downsets::new(ground))
}

/// Like [`enumerate_systems`] but admits ground 6.
pub fn enumerate_systems_extended(ground: usize) -> Result<Downsets> {
    if ground > MAX_EXTENDED_GROUND {
        return Err(Error::Unsupported(format!("exhaustive enumeration on ground {ground}")));
    }
    Ok(Downsets::new(ground))
}

/// Seeded random systems: downward closures of a few random generating sets.
pub fn sample_systems(ground: usize, count: usize, seed: u64) -> Result<Vec<IndependenceSystem>> {
    if ground == 0 || ground > MAX_GROUND {
        return Err(Error::InvalidParameter(format!(
            "sampling needs a ground size in 1..={MAX_GROUND}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_size = ground.min(10);
    (0..count)
        .map(|_| {
            let gens = rng.random_range(1..=ground);
            let mut family = Vec::new();
            for _ in 0..gens {
                let size = rng.random_range(0..=max_size);
                let mut set = 0u32;
                while (set.count_ones() as usize) < size {
                    set |= 1 << rng.random_range(0..ground);
                }
                let mut sub = set;
                loop {
                    family.push(sub);
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & set;
                }
            }
            IndependenceSystem::new(ground, family)
        })
        .collect()
}

/// Outcome of screening one system against the generalized Mason-type
/// conjecture: `min_l ≤ ⌊r/2⌋ + 1` should force an ultra log-concave
/// f-vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Screening {
    pub f_vector: Vec<u64>,
    pub rank: usize,
    pub min_l: usize,
    pub in_scope: bool,
    pub is_2matroid: bool,
    pub report: SequenceReport,
}

impl Screening {
    pub fn violates(&self) -> bool {
        self.in_scope && !self.report.ultra_lc.holds
    }
}

/// `None` for the empty family, which has no rank.
pub fn screen_generalized(m: &IndependenceSystem) -> Result<Option<Screening>> {
    let Some(rank) = m.rank() else { return Ok(None) };
    let min_l = m.min_l()?;
    Ok(Some(Screening {
        f_vector: m.f_vector(),
        rank,
        min_l,
        in_scope: min_l <= rank / 2 + 1,
        is_2matroid: min_l <= 2,
        report: m.mason_report()?,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    fn named(n: NamedGraph) -> Graph {
        build_named(n).unwrap()
    }

    #[test]
    fn validation() {
        assert!(IndependenceSystem::new(3, vec![0, 1, 2, 3]).is_ok());
        assert!(matches!(
            IndependenceSystem::new(3, vec![0, 1, 3]),
            Err(Error::NotDownwardClosed(_))
        ));
        assert!(IndependenceSystem::new(2, vec![0, 4]).is_err());
        assert!(IndependenceSystem::new(21, vec![]).is_err());
        let m = IndependenceSystem::new(2, vec![3, 0, 1, 2, 1]).unwrap();
        assert_eq!(m.family(), &[0, 1, 2, 3]);
    }

    #[test]
    fn codependent_systems() {
        let k2 = from_codependent(&named(NamedGraph::Complete(2))).unwrap();
        assert_eq!(k2.family(), &[0]);
        let p3 = from_codependent(&named(NamedGraph::Path(3))).unwrap();
        assert_eq!(p3.f_vector(), vec![1, 2, 0, 0]);
        assert!(from_codependent(&Graph::empty(3).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn property_systems() {
        let k4 = named(NamedGraph::Complete(4));
        let tri = from_graph_property(&k4, &PropertyPredicate::contains_triangle()).unwrap();
        assert_eq!(tri.f_vector(), vec![1, 4, 0, 0, 0]);
        let c5 = named(NamedGraph::Cycle(5));
        assert_eq!(
            from_graph_property(&c5, &PropertyPredicate::has_edge()).unwrap(),
            from_codependent(&c5).unwrap()
        );
        assert!(
            from_graph_property(&Graph::empty(2).unwrap(), &PropertyPredicate::has_edge())
                .unwrap()
                .is_empty()
        );
        assert!(matches!(
            from_graph_property(&k4, &PropertyPredicate::forest()),
            Err(Error::Precondition(_))
        ));
        // mis-declared: "at most one edge" is hereditary, not co-hereditary
        let liar = PropertyPredicate::new("few-edges", Heredity::CoHereditary, None, |g| g.edge_count() <= 1);
        assert!(matches!(
            from_graph_property(&k4, &liar),
            Err(Error::NotDownwardClosed(_))
        ));
    }

    #[test]
    fn counterexample() {
        let m = counterexample_45();
        assert_eq!(m.f_vector(), vec![1, 10, 3, 1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(m.rank(), Some(3));
        assert!(!m.is_l_matroid(2).unwrap());
        assert_eq!(m.exchange_witness(2), Some((0b1000, 0b111)));
        assert!(m.is_l_matroid(3).unwrap());
        assert_eq!(m.min_l().unwrap(), 3);
        let rep = m.mason_report().unwrap();
        assert!(!rep.log_concave.holds);
        assert_eq!(rep.log_concave.first_failure, Some(2));
    }

    #[test]
    fn exchange_examples() {
        assert!(uniform(4, 2).unwrap().is_l_matroid(1).unwrap());
        assert_eq!(uniform(5, 2).unwrap().min_l().unwrap(), 1);
        let empty = IndependenceSystem::new(3, vec![]).unwrap();
        assert!(empty.is_l_matroid(1).unwrap());
        assert!(empty.min_l().is_err());
        assert!(uniform(3, 1).unwrap().is_l_matroid(0).is_err());
    }

    #[test]
    fn independent_sets() {
        let k3 = independent_set_system(&named(NamedGraph::Complete(3))).unwrap();
        assert_eq!(k3.family(), &[0, 1, 2, 4]);
        let c6 = independent_set_system(&named(NamedGraph::Cycle(6))).unwrap();
        assert_eq!(c6.rank(), Some(3));
        assert!(c6.is_l_matroid(2).unwrap());
        let claw = independent_set_system(&named(NamedGraph::Star(3))).unwrap();
        assert_eq!(claw.rank(), Some(3));
        let c5 = independent_set_system(&named(NamedGraph::Cycle(5))).unwrap();
        assert_eq!(c5.f_vector(), vec![1, 5, 5, 0, 0, 0]);
        assert!(c5.mason_report().unwrap().log_concave.holds);
        let single = IndependenceSystem::new(1, vec![0, 1]).unwrap();
        let rep = single.mason_report().unwrap();
        assert!(rep.unimodal.holds && rep.log_concave.holds && rep.ultra_lc.holds);
    }

    #[test]
    fn downset_counts() {
        let counts: Vec<usize> = (0..=5).map(|g| enumerate_systems(g).unwrap().count()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168, 7581]);
        assert!(enumerate_systems(6).is_err());
        let mut seen: Vec<u64> = enumerate_systems(4).unwrap().collect();
        let before = seen.len();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), before);
        for bits in enumerate_systems(4).unwrap() {
            IndependenceSystem::from_characteristic(4, bits).unwrap();
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = sample_systems(8, 20, 7).unwrap();
        let b = sample_systems(8, 20, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_systems(8, 20, 8).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let m = counterexample_45();
        let text = m.to_json();
        assert!(text.starts_with("{\"ground_size\":10,\"family\":[0,1,2,3,4,5,6,7,8,16"));
        let back: IndependenceSystem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<IndependenceSystem>("{\"ground_size\":2,\"family\":[3]}").is_err());
    }

    #[test]
    fn screening() {
        let s = screen_generalized(&counterexample_45()).unwrap().unwrap();
        assert_eq!((s.rank, s.min_l, s.in_scope), (3, 3, false));
        assert!(!s.violates());
        assert!(screen_generalized(&IndependenceSystem::new(2, vec![]).unwrap())
            .unwrap()
            .is_none());
    }
}
