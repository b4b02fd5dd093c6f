use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Parameters of the two-hub family: an independent set X of size n−2 and two
/// hubs u, v with |N(u)∩X| = a, |N(v)∩X| = b, |(N(u)∪N(v))∩X| = c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub uv_adjacent: bool,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(a: usize, b: usize, c: usize, uv_adjacent: bool, n: usize) -> Result<Self> {
        let spec = FamilySpec {
            a,
            b,
            c,
            uv_adjacent,
            n,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let FamilySpec { a, b, c, n, .. } = *self;
        if n < 2 {
            return Err(Error::InvalidParameter(format!("{self:?}: need n >= 2")));
        }
        if !(a <= b && b <= c && c <= a + b) {
            return Err(Error::InvalidParameter(format!(
                "{self:?}: need 0 <= a <= b <= c <= a + b"
            )));
        }
        if c > n - 2 {
            return Err(Error::InvalidParameter(format!("{self:?}: need c <= n - 2")));
        }
        if n > super::MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                got: n,
                max: super::MAX_VERTICES,
            });
        }
        Ok(())
    }

    /// Every feasible spec with the given order.
    pub fn all_with_order(n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        for c in 0..=n - 2 {
            for b in 0..=c {
                for a in 0..=b {
                    if c <= a + b {
                        for adj in [false, true] {
                            out.push(FamilySpec {
                                a,
                                b,
                                c,
                                uv_adjacent: adj,
                                n,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

/// Canonical realization: X = {0..n−3}, u = n−2, v = n−1. The a+b−c shared
/// neighbors are the first vertices of X; A = {0..a−1} and B takes the shared
/// block plus the next b−(a+b−c) vertices after A.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let FamilySpec {
        a,
        b,
        c,
        n,
        uv_adjacent,
    } = *spec;
    let overlap = a + b - c;
    let (u, v) = (n - 2, n - 1);
    let mut g = Graph::empty(n)?;
    for x in 0..a {
        g.add_edge(u, x)?;
    }
    for x in 0..overlap {
        g.add_edge(v, x)?;
    }
    for x in a..a + (b - overlap) {
        g.add_edge(v, x)?;
    }
    if uv_adjacent {
        g.add_edge(u, v)?;
    }
    Ok(g)
}
