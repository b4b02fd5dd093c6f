//! Brute-force isomorphism and induced-pattern search for tiny graphs.

use super::{k_subsets, pair_index, Graph};
use crate::error::{Error, Result};

pub const MAX_ISO_ORDER: usize = 8;
pub const MAX_PATTERN_ORDER: usize = 5;

/// Backtracking search for an adjacency-preserving bijection, after a
/// degree-sequence pre-filter.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > MAX_ISO_ORDER {
            return Err(Error::Unsupported(format!(
                "isomorphism test on {} vertices (limit {MAX_ISO_ORDER})",
                x.order()
            )));
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let mut map = [usize::MAX; MAX_ISO_ORDER];
    Ok(extend(g, h, 0, 0, &mut map))
}

fn extend(g: &Graph, h: &Graph, v: usize, used: u32, map: &mut [usize; MAX_ISO_ORDER]) -> bool {
    if v == g.order() {
        return true;
    }
    for w in 0..h.order() {
        if used >> w & 1 == 1 || g.degree(v) != h.degree(w) {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
            map[v] = w;
            if extend(g, h, v + 1, used | 1 << w, map) {
                return true;
            }
        }
    }
    false
}

/// Precomputed table of every labeled copy of a pattern graph, for fast
/// repeated induced-subgraph tests.
#[derive(Debug, Clone)]
pub struct PatternMatcher {
    order: usize,
    codes: Vec<bool>,
}

impl PatternMatcher {
    pub fn new(pattern: &Graph) -> Result<Self> {
        let p = pattern.order();
        if p > MAX_PATTERN_ORDER {
            return Err(Error::Unsupported(format!(
                "pattern on {p} vertices (limit {MAX_PATTERN_ORDER})"
            )));
        }
        let npairs = p * p.saturating_sub(1) / 2;
        let mut codes = vec![false; 1 << npairs];
        let mut perm: Vec<usize> = (0..p).collect();
        permutations(&mut perm, 0, &mut |perm| {
            let mut code = 0usize;
            for j in 1..p {
                for i in 0..j {
                    if pattern.has_edge(perm[i], perm[j]) {
                        code |= 1 << pair_index(i, j);
                    }
                }
            }
            codes[code] = true;
        });
        Ok(PatternMatcher { order: p, codes })
    }

    /// True when some `order`-subset of `g` induces a copy of the pattern.
    pub fn occurs_in(&self, g: &Graph) -> bool {
        let p = self.order;
        if p > g.order() {
            return false;
        }
        let mut verts = [0usize; MAX_PATTERN_ORDER];
        k_subsets(g.order(), p).any(|mask| {
            let mut rest = mask;
            for slot in verts.iter_mut().take(p) {
                *slot = rest.trailing_zeros() as usize;
                rest &= rest - 1;
            }
            let mut code = 0usize;
            for j in 1..p {
                let row = g.neighbors(verts[j]);
                for (i, &u) in verts[..j].iter().enumerate() {
                    if row >> u & 1 == 1 {
                        code |= 1 << pair_index(i, j);
                    }
                }
            }
            self.codes[code]
        })
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// True when no |V(h)|-subset of `g` induces a graph isomorphic to `h`.
pub fn is_h_free(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(!PatternMatcher::new(h)?.occurs_in(g))
}
