//! Stable Kronecker products: the large-`n` answer before any modification.
//!
//! A `k`-fold contraction removes the same partition `delta` of `k` boxes
//! from both factors, so paired boxes always carry matching symmetry. A
//! symmetric pair in one factor therefore never contracts against an
//! antisymmetric pair in the other. The residual diagrams are then
//! multiplied with the Littlewood–Richardson rule.

use crate::decomposition::Decomposition;
use crate::lr::{lr_product, skew_expand};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ContractionTerm {
    pub k: usize,
    pub delta: Partition,
    pub alpha: Partition,
    pub beta: Partition,
    /// `c^{lambda1}_{delta alpha} * c^{lambda2}_{delta beta}`
    pub coeff: u64,
}

/// Every way of contracting `k` index pairs between the two factors.
pub fn contraction_terms(lambda1: &Partition, lambda2: &Partition, k: usize) -> Vec<ContractionTerm> {
    let mut terms = Vec::new();
    if k > lambda1.size().min(lambda2.size()) {
        return terms;
    }
    for delta in Partition::all_of(k) {
        let left = skew_expand(lambda1, &delta);
        if left.is_empty() {
            continue;
        }
        let right = skew_expand(lambda2, &delta);
        for (alpha, a) in left.iter() {
            for (beta, b) in right.iter() {
                terms.push(ContractionTerm {
                    k,
                    delta: delta.clone(),
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    coeff: (a * b) as u64,
                });
            }
        }
    }
    terms.sort();
    terms
}

/// Contributions of exactly `k` contractions.
pub fn stable_slice(lambda1: &Partition, lambda2: &Partition, k: usize) -> Decomposition {
    let mut out = Decomposition::new();
    for term in contraction_terms(lambda1, lambda2, k) {
        out.add_all(&lr_product(&term.alpha, &term.beta), term.coeff as i64);
    }
    out
}

/// The full stable product, summed over all contraction depths.
pub fn stable_kronecker(lambda1: &Partition, lambda2: &Partition) -> Decomposition {
    let mut out = Decomposition::new();
    for k in 0..=lambda1.size().min(lambda2.size()) {
        out.add_all(&stable_slice(lambda1, lambda2, k), 1);
    }
    out
}
