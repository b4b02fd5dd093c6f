use super::Graph;
use crate::error::{Error, Result};
use std::ops::Range;

/// Largest order enumerated internally; larger inputs come from graph6 streams.
pub const MAX_ENUMERATION_ORDER: usize = 7;

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph on `n` vertices, in edge-mask order (see
/// [`super::pair_index`]). Sub-ranges of masks can be consumed independently.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    masks: Range<u64>,
}

impl LabeledGraphs {
    pub fn range(n: usize, masks: Range<u64>) -> Result<Self> {
        if n > MAX_ENUMERATION_ORDER {
            return Err(Error::Unsupported(format!(
                "internal enumeration of order {n} (limit {MAX_ENUMERATION_ORDER}); supply a graph6 stream"
            )));
        }
        let total = labeled_graph_count(n);
        let masks = masks.start.min(total)..masks.end.min(total);
        Ok(LabeledGraphs { n, masks })
    }

    /// Splits `0..count` into at most `parts` contiguous chunks.
    pub fn partition(n: usize, parts: usize) -> Result<Vec<LabeledGraphs>> {
        let total = labeled_graph_count(n);
        let parts = parts.max(1) as u64;
        let step = total.div_ceil(parts).max(1);
        (0..parts)
            .map(|i| LabeledGraphs::range(n, i * step..((i + 1) * step).min(total)))
            .filter(|r| r.as_ref().map_or(true, |r| !r.masks.is_empty()))
            .collect()
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mask = self.masks.next()?;
        Some(Graph::from_edge_mask(self.n, mask).expect("mask within range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::range(n, 0..labeled_graph_count(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert!(enumerate_labeled_graphs(8).is_err());
    }

    #[test]
    fn each_graph_once() {
        let seen: HashSet<Graph> = enumerate_labeled_graphs(5).unwrap().collect();
        assert_eq!(seen.len(), 1024);
        assert!(seen.iter().all(|g| g.check_invariants()));
    }

    #[test]
    fn partitions_cover_the_range() {
        for parts in [1, 3, 8, 100] {
            let chunks = LabeledGraphs::partition(4, parts).unwrap();
            let all: Vec<Graph> = chunks.into_iter().flatten().collect();
            let direct: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
            assert_eq!(all, direct);
        }
    }

    #[test]
    fn edge_mask_round_trip() {
        for (mask, g) in enumerate_labeled_graphs(5).unwrap().enumerate() {
            assert_eq!(g.edge_mask(), mask as u64);
        }
    }
}
