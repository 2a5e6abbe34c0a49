//! Candidate k-SRD functions.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::LabelingError;
use crate::graph::{Graph, Vertex};

/// Largest admissible label for `graph` and `k`: `min(Δ, k) + 1`.
pub fn max_label(graph: &Graph, k: usize) -> u32 {
    (graph.max_degree().min(k) + 1) as u32
}

/// A per-vertex labeling `f: V -> {0, .., min(Δ, k) + 1}` for a fixed `k`.
///
/// Weights are computed in `u64`; label values never exceed `k + 1`, so
/// `n * (k + 1)` must fit in 32 bits for the `u32` label store to be
/// meaningful, which holds for every graph this crate can search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    k: usize,
    max_label: u32,
    labels: Vec<u32>,
}

impl Labeling {
    pub fn new(graph: &Graph, k: usize, labels: Vec<u32>) -> Result<Self, LabelingError> {
        if k == 0 {
            return Err(LabelingError::ZeroK);
        }
        if labels.len() != graph.vertex_count() {
            return Err(LabelingError::WrongLength { expected: graph.vertex_count(), got: labels.len() });
        }
        let max = max_label(graph, k);
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l > max) {
            return Err(LabelingError::LabelOutOfRange { vertex, label, max });
        }
        Ok(Labeling { k, max_label: max, labels })
    }

    /// The trivial labeling: every vertex labeled 1.
    pub fn ones(graph: &Graph, k: usize) -> Self {
        Labeling::new(graph, k, vec![1; graph.vertex_count()]).expect("all-ones is always admissible")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest admissible label for this labeling's graph and `k`.
    pub fn max_label(&self) -> u32 {
        self.max_label
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> u32 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.labels.iter().map(|&l| u64::from(l)).sum()
    }

    /// `V_j`: vertices labeled exactly `j`, ascending.
    pub fn level_set(&self, j: u32) -> Vec<Vertex> {
        self.vertices_where(|l| l == j)
    }

    /// `V_{>=j}`: vertices labeled at least `j`, ascending.
    pub fn level_set_at_least(&self, j: u32) -> Vec<Vertex> {
        self.vertices_where(|l| l >= j)
    }

    fn vertices_where(&self, pred: impl Fn(u32) -> bool) -> Vec<Vertex> {
        self.labels.iter().enumerate().filter(|(_, &l)| pred(l)).map(|(v, _)| v).collect()
    }

    /// Re-targets the same labels to another `k` on the same graph.
    pub fn with_k(&self, graph: &Graph, k: usize) -> Result<Self, LabelingError> {
        Labeling::new(graph, k, self.labels.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};

    fn path(n: usize) -> Graph {
        make_family(&FamilySpec::path(n)).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Labeling::ones(&path(5), 2).weight(), 5);
        let k5 = make_family(&FamilySpec::complete(5)).unwrap();
        assert_eq!(Labeling::new(&k5, 2, vec![3, 0, 0, 0, 0]).unwrap().weight(), 3);
    }

    #[test]
    fn level_sets() {
        let f = Labeling::new(&path(3), 2, vec![0, 2, 0]).unwrap();
        assert_eq!(f.level_set(2), vec![1]);
        assert_eq!(f.level_set(0), vec![0, 2]);
        assert_eq!(f.level_set_at_least(1), vec![1]);
        let g = path(6);
        let f = Labeling::new(&g, 3, vec![3, 0, 1, 2, 0, 3]).unwrap();
        let mut seen = [0usize; 6];
        let mut weighted = 0u64;
        for j in 0..=f.max_label() {
            for v in f.level_set(j) {
                seen[v] += 1;
                weighted += u64::from(j);
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
        assert_eq!(weighted, f.weight());
    }

    #[test]
    fn range_and_length_errors() {
        let g = path(3);
        assert!(Labeling::new(&g, 2, vec![0, 2, 0]).is_ok());
        assert!(Labeling::new(&g, 2, vec![0, 3, 0]).is_ok());
        assert_eq!(
            Labeling::new(&g, 2, vec![4, 0, 0]),
            Err(LabelingError::LabelOutOfRange { vertex: 0, label: 4, max: 3 })
        );
        assert_eq!(Labeling::new(&g, 2, vec![0, 2]), Err(LabelingError::WrongLength { expected: 3, got: 2 }));
        // Δ caps the alphabet: on P_3 with k = 5 the maximum is still 3
        assert!(Labeling::new(&g, 5, vec![0, 4, 0]).is_err());
        assert_eq!(Labeling::new(&g, 0, vec![1, 1, 1]), Err(LabelingError::ZeroK));
    }
}
