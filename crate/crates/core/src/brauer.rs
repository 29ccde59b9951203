//! Brauer-algebra consistency layer.
//!
//! Irreps of the Brauer algebra on `f` strands are labelled by diagrams with
//! `f, f-2, f-4, ...` boxes. Restricting to `f-1` strands removes a box, or
//! adds one when the diagram has fewer than `f` boxes. Dimensions are path
//! counts in the resulting Bratteli diagram (oscillating tableaux).

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lr::sym_dim;
use crate::partition::Partition;
use crate::stable::stable_kronecker;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("label {shape} cannot sit at level {level}: box count must be at most the level and of equal parity")]
    InvalidLabel { shape: Partition, level: usize },
    #[error("level 0 has no lower level to branch to")]
    NoLowerLevel,
    #[error("n = {0} is outside the permissibility conditions (n must not be 0 or -1)")]
    InvalidDimensionParameter(i64),
}

/// A diagram placed at a level of the Bratteli diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerLabel {
    shape: Partition,
    level: usize,
}

impl BrauerLabel {
    pub fn new(shape: Partition, level: usize) -> Result<Self, BrauerError> {
        if shape.size() > level || !(level - shape.size()).is_multiple_of(2) {
            return Err(BrauerError::InvalidLabel { shape, level });
        }
        Ok(Self { shape, level })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of contracted pairs, `(level - |shape|) / 2`.
    pub fn contractions(&self) -> usize {
        (self.level - self.shape.size()) / 2
    }
}

impl fmt::Display for BrauerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.shape, self.level)
    }
}

/// Labels one level down reached by the branching rule.
pub fn branch(label: &BrauerLabel) -> Result<Vec<BrauerLabel>, BrauerError> {
    if label.level == 0 {
        return Err(BrauerError::NoLowerLevel);
    }
    let shape = &label.shape;
    let lower = label.level - 1;
    let mut out: Vec<BrauerLabel> = shape
        .removable_rows()
        .map(|i| BrauerLabel {
            shape: shape.remove_box(i),
            level: lower,
        })
        .collect();
    if shape.size() < label.level {
        out.extend(shape.addable_rows().map(|i| BrauerLabel {
            shape: shape.add_box(i),
            level: lower,
        }));
    }
    out.sort();
    Ok(out)
}

/// Levels `0..=max_level` of the Bratteli diagram with their edges.
#[derive(Debug, Clone)]
pub struct BratteliDiagram {
    levels: Vec<Vec<Partition>>,
    // edges[j] joins level j (first index) to level j + 1 (second index)
    edges: Vec<Vec<(usize, usize)>>,
}

impl BratteliDiagram {
    pub fn build(max_level: usize) -> Self {
        let levels: Vec<Vec<Partition>> = (0..=max_level)
            .map(|f| {
                (0..=f / 2)
                    .flat_map(|k| Partition::all_of(f - 2 * k))
                    .collect()
            })
            .collect();
        let edges = (0..max_level)
            .map(|j| {
                let index: HashMap<&Partition, usize> =
                    levels[j].iter().enumerate().map(|(i, p)| (p, i)).collect();
                let mut e = Vec::new();
                for (upper, shape) in levels[j + 1].iter().enumerate() {
                    let label = BrauerLabel {
                        shape: shape.clone(),
                        level: j + 1,
                    };
                    for down in branch(&label).expect("level is positive") {
                        e.push((index[down.shape()], upper));
                    }
                }
                e.sort_unstable();
                e
            })
            .collect();
        Self { levels, edges }
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, f: usize) -> &[Partition] {
        &self.levels[f]
    }

    /// Edges between level `f` and `f + 1`, as index pairs into the two levels.
    pub fn edges_above(&self, f: usize) -> &[(usize, usize)] {
        &self.edges[f]
    }

    /// Path counts from the empty diagram to every label of level `f`.
    pub fn dimensions(&self, f: usize) -> Vec<BigUint> {
        let mut counts = vec![BigUint::one()];
        for j in 0..f {
            let mut next = vec![BigUint::zero(); self.levels[j + 1].len()];
            for &(lo, hi) in &self.edges[j] {
                next[hi] += &counts[lo];
            }
            counts = next;
        }
        counts
    }
}

/// Number of oscillating tableaux ending at `label`.
pub fn brauer_dim(label: &BrauerLabel) -> BigUint {
    // walk the diagram downward from the label, memoizing on shapes per level
    let mut current: HashMap<Partition, BigUint> = HashMap::from([(label.shape.clone(), BigUint::one())]);
    for level in (1..=label.level).rev() {
        let mut below: HashMap<Partition, BigUint> = HashMap::new();
        for (shape, count) in current {
            let here = BrauerLabel {
                shape,
                level,
            };
            for down in branch(&here).expect("level is positive") {
                *below.entry(down.shape).or_default() += &count;
            }
        }
        current = below;
    }
    current.remove(&Partition::empty()).unwrap_or_default()
}

/// Whether `lambda` is `n`-permissible.
///
/// * `n > 0`: the first two columns hold at most `n` boxes.
/// * `n = -2m`: at most `m` columns. This is the condition as usually stated
///   for the symplectic centralizer; note that standardness for `Sp(2m)`
///   elsewhere restricts rows, not columns.
/// * `n` odd and negative: the first two rows hold at most `2 - n` boxes.
pub fn is_n_permissible(lambda: &Partition, n: i64) -> Result<bool, BrauerError> {
    match n {
        0 | -1 => Err(BrauerError::InvalidDimensionParameter(n)),
        n if n > 0 => Ok((lambda.column(0) + lambda.column(1)) as i64 <= n),
        n if n % 2 == 0 => Ok(lambda.row(0) as i64 <= -n / 2),
        n => Ok((lambda.row(0) + lambda.row(1)) as i64 <= 2 - n),
    }
}

/// Semisimplicity of the Brauer algebra on `f` strands with parameter `n`.
///
/// For integer `n >= 0` this is `n >= f - 1`. For negative `n` the magnitude
/// reading `|n| >= f - 1` is used; the literal alternative, `-n <= f - 1`,
/// has the inequality reversed and is not what the surrounding usage needs.
pub fn is_semisimple(n: i64, f: usize) -> bool {
    n.unsigned_abs() + 1 >= f as u64
}

/// The counting identity between the induced module and its constituents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedDimension {
    pub level: usize,
    /// Sum of multiplicity times Brauer dimension over the stable product.
    pub total: BigUint,
    /// Product of the two symmetric-group dimensions.
    pub factor_dims: BigUint,
    pub h: BigRational,
}

impl InducedDimension {
    pub fn is_integral(&self) -> bool {
        self.h.is_integer()
    }
}

/// Sums multiplicity times Brauer dimension over the stable product of the
/// two diagrams at level `|lambda1| + |lambda2|`, divided by the product of
/// their symmetric-group dimensions.
pub fn verify_induced_dim(lambda1: &Partition, lambda2: &Partition) -> InducedDimension {
    let level = lambda1.size() + lambda2.size();
    let mut total = BigUint::zero();
    for (shape, mult) in stable_kronecker(lambda1, lambda2).iter() {
        let label = BrauerLabel::new(shape.clone(), level).expect("stable terms sit at the full level");
        total += brauer_dim(&label) * BigUint::from(mult as u64);
    }
    let factor_dims = sym_dim(lambda1) * sym_dim(lambda2);
    let h = BigRational::new(BigInt::from(total.clone()), BigInt::from(factor_dims.clone()));
    InducedDimension {
        level,
        total,
        factor_dims,
        h,
    }
}

/// `(2f - 1)!!`, the dimension of the Brauer algebra on `f` strands.
pub fn brauer_algebra_dim(f: usize) -> BigUint {
    (1..=f).map(|i| BigUint::from(2 * i - 1)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn bl(rows: &[usize], level: usize) -> BrauerLabel {
        BrauerLabel::new(p(rows), level).unwrap()
    }

    #[test]
    fn label_validation() {
        assert!(BrauerLabel::new(p(&[2]), 3).is_err());
        assert!(BrauerLabel::new(p(&[2, 1]), 2).is_err());
        assert!(BrauerLabel::new(p(&[]), 4).is_ok());
        assert_eq!(bl(&[1], 5).contractions(), 2);
    }

    #[test]
    fn branching_examples() {
        assert_eq!(branch(&bl(&[2], 2)).unwrap(), vec![bl(&[1], 1)]);
        assert_eq!(
            branch(&bl(&[1], 3)).unwrap(),
            vec![bl(&[2], 2), bl(&[1, 1], 2), bl(&[], 2)]
        );
        assert_eq!(branch(&bl(&[], 2)).unwrap(), vec![bl(&[1], 1)]);
        assert_eq!(branch(&bl(&[], 0)), Err(BrauerError::NoLowerLevel));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(brauer_dim(&bl(&[2, 1], 3)), 2u32.into());
        assert_eq!(brauer_dim(&bl(&[1], 3)), 3u32.into());
        assert_eq!(brauer_dim(&bl(&[], 2)), 1u32.into());
        assert_eq!(brauer_dim(&bl(&[], 0)), 1u32.into());
        assert_eq!(brauer_dim(&bl(&[], 4)), 3u32.into());
    }

    #[test]
    fn diagram_agrees_with_direct_count() {
        let d = BratteliDiagram::build(6);
        for f in 0..=6 {
            let dims = d.dimensions(f);
            for (shape, dim) in d.level(f).iter().zip(&dims) {
                assert_eq!(&brauer_dim(&bl(shape.rows(), f)), dim);
            }
        }
    }

    #[test]
    fn permissibility() {
        assert!(!is_n_permissible(&p(&[2, 2]), 3).unwrap());
        assert!(is_n_permissible(&p(&[2, 1]), 3).unwrap());
        assert!(is_n_permissible(&p(&[1, 1, 1]), -4).unwrap());
        assert!(!is_n_permissible(&p(&[3]), -4).unwrap());
        assert!(is_n_permissible(&p(&[2, 1]), -3).unwrap());
        assert!(!is_n_permissible(&p(&[4, 2]), -3).unwrap());
        assert!(is_n_permissible(&p(&[3, 2]), -3).unwrap());
        assert!(is_n_permissible(&p(&[1]), 0).is_err());
        assert!(is_n_permissible(&p(&[1]), -1).is_err());
    }

    #[test]
    fn semisimplicity() {
        assert!(is_semisimple(5, 3));
        assert!(!is_semisimple(2, 4));
        assert!(is_semisimple(3, 4));
        assert!(is_semisimple(-4, 5));
        assert!(!is_semisimple(-2, 4));
    }

    #[test]
    fn induced_dimension_examples() {
        let six = verify_induced_dim(&p(&[2]), &p(&[1]));
        assert_eq!(six.h, BigRational::from_integer(6.into()));
        assert_eq!(six.total, 6u32.into());
        let three = verify_induced_dim(&p(&[1]), &p(&[1]));
        assert_eq!(three.h, BigRational::from_integer(3.into()));
    }

    #[test]
    fn induced_dimension_of_21_and_11() {
        // level-5 dims: [3,2] 5, [2,2,1] 5, [2,1,1,1] 4, [3,1,1] 6,
        // [3] 10, [2,1] 20 (twice), [1,1,1] 10, [1] 15
        let r = verify_induced_dim(&p(&[2, 1]), &p(&[1, 1]));
        assert_eq!(r.level, 5);
        assert_eq!(r.total, 95u32.into());
        assert_eq!(r.factor_dims, 2u32.into());
        assert_eq!(r.h, BigRational::new(95.into(), 2.into()));
        assert!(!r.is_integral());
    }
}
