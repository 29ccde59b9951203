//! Folding a stable decomposition down to a specific group.
//!
//! A label with more than `l` rows is nonstandard for a group of rank `l`.
//! It is rewritten by removing a rim strip from the foot of its first
//! column, with length `2p - n` for `O(n)` and `2p - n - 2` for `Sp(n)`,
//! where `p` is the row count. Each removal contributes a sign, and the
//! process repeats until the label is standard. A nonpositive length, or a
//! strip that cannot be removed, sends the label to zero.
//!
//! Results for `O(n)` are given up to associates: a label and its tensor
//! with the determinant are identified, which is exactly what `SO(n)`
//! characters see.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::decomposition::Decomposition;
use crate::partition::{Partition, SkewStrip};
use crate::stable::stable_kronecker;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModificationError {
    #[error("{label} has {rows} rows, more than the rank {rank} of {ctx}")]
    NonstandardInput {
        label: Partition,
        rows: usize,
        rank: usize,
        ctx: GroupContext,
    },
    #[error("Sp(n) needs an even n, got {0}")]
    OddSymplectic(usize),
    #[error("group dimension must be positive")]
    ZeroDimension,
    #[error("unknown group family {0:?} (expected O, SO or Sp)")]
    UnknownFamily(String),
    #[error("modified product over {ctx} left a negative multiplicity: {decomposition}")]
    NegativeMultiplicity {
        ctx: GroupContext,
        decomposition: Decomposition,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    O,
    SO,
    Sp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::O => "O",
            Family::SO => "SO",
            Family::Sp => "Sp",
        })
    }
}

impl FromStr for Family {
    type Err = ModificationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "o" => Ok(Family::O),
            "so" => Ok(Family::SO),
            "sp" => Ok(Family::Sp),
            _ => Err(ModificationError::UnknownFamily(s.to_string())),
        }
    }
}

/// A classical group: `O(n)`, `SO(n)` or `Sp(n)` with `n = 2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupContext {
    family: Family,
    dimension: usize,
}

impl GroupContext {
    pub fn new(family: Family, dimension: usize) -> Result<Self, ModificationError> {
        if dimension == 0 {
            return Err(ModificationError::ZeroDimension);
        }
        if family == Family::Sp && !dimension.is_multiple_of(2) {
            return Err(ModificationError::OddSymplectic(dimension));
        }
        Ok(Self { family, dimension })
    }

    pub fn orthogonal(n: usize) -> Self {
        Self::new(Family::O, n).expect("positive dimension")
    }

    pub fn special_orthogonal(n: usize) -> Self {
        Self::new(Family::SO, n).expect("positive dimension")
    }

    pub fn symplectic(n: usize) -> Self {
        Self::new(Family::Sp, n).expect("even positive dimension")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn rank(&self) -> usize {
        self.dimension / 2
    }

    /// `O(2l)` and `SO(2l)`, whose `l`-row labels split over `SO(2l)`.
    pub fn is_even_orthogonal(&self) -> bool {
        self.family != Family::Sp && self.dimension.is_multiple_of(2)
    }

    pub fn is_standard(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.rank()
    }

    /// Strip length used to modify a label with `rows` rows.
    pub fn strip_length(&self, rows: usize) -> i64 {
        let twice = 2 * rows as i64;
        match self.family {
            Family::O | Family::SO => twice - self.dimension as i64,
            Family::Sp => twice - self.dimension as i64 - 2,
        }
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.dimension)
    }
}

/// A label with a sign; sign `0` marks the zero label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedLabel {
    pub shape: Partition,
    pub sign: i8,
}

impl SignedLabel {
    pub fn zero() -> Self {
        Self {
            shape: Partition::empty(),
            sign: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

impl fmt::Display for SignedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => f.write_str("0"),
            s if s < 0 => write!(f, "-{}", self.shape),
            _ => write!(f, "{}", self.shape),
        }
    }
}

/// One strip removal during standardization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModificationStep {
    pub label: Partition,
    pub strip_length: i64,
    /// `None` when the length is nonpositive or the strip cannot be removed.
    pub strip: Option<SkewStrip>,
    /// Sign picked up by this step; `0` when the label vanishes here.
    pub sign: i8,
}

impl fmt::Display for ModificationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: strip length {}", self.label, self.strip_length)?;
        match &self.strip {
            None => f.write_str(", not removable -> 0"),
            Some(s) => {
                let boxes: Vec<String> = s.boxes.iter().map(|(r, c)| format!("({r},{c})")).collect();
                write!(
                    f,
                    ", boxes {}, columns {}, sign {} -> {}",
                    boxes.join(" "),
                    s.columns_spanned,
                    if self.sign < 0 { "-" } else { "+" },
                    s.inner
                )
            }
        }
    }
}

/// Rewrites `lambda` as a signed standard label for `ctx`, or zero.
///
/// `SO(n)` uses the `O(n)` rule.
pub fn standardize(lambda: &Partition, ctx: &GroupContext) -> SignedLabel {
    standardize_traced(lambda, ctx).0
}

/// [`standardize`] plus the strip removals it performed.
pub fn standardize_traced(lambda: &Partition, ctx: &GroupContext) -> (SignedLabel, Vec<ModificationStep>) {
    let mut steps = Vec::new();
    let mut shape = lambda.clone();
    let mut sign = 1i8;
    while !ctx.is_standard(&shape) {
        let h = ctx.strip_length(shape.len());
        let strip = if h > 0 { shape.boundary_strip(h as usize).ok() } else { None };
        let Some(strip) = strip else {
            steps.push(ModificationStep {
                label: shape,
                strip_length: h,
                strip: None,
                sign: 0,
            });
            return (SignedLabel::zero(), steps);
        };
        let exponent = match ctx.family() {
            Family::O | Family::SO => strip.columns_spanned - 1,
            Family::Sp => strip.columns_spanned,
        };
        let factor = if exponent % 2 == 0 { 1 } else { -1 };
        sign *= factor;
        let next = strip.inner.clone();
        steps.push(ModificationStep {
            label: shape,
            strip_length: h,
            strip: Some(strip),
            sign: factor,
        });
        shape = next;
    }
    (SignedLabel { shape, sign }, steps)
}

/// Standardizes every term and collects the signed sum.
pub fn modify_decomposition(stable: &Decomposition, ctx: &GroupContext) -> Decomposition {
    let mut out = Decomposition::new();
    for (shape, mult) in stable.iter() {
        let label = standardize(shape, ctx);
        if !label.is_zero() {
            out.add(label.shape, mult * i64::from(label.sign));
        }
    }
    out
}

/// The Kronecker product of two standard labels over `ctx`.
///
/// For `SO(2l)` the result keeps `O(2l)` labels; see [`kronecker_so`] for
/// the split form.
pub fn kronecker(
    lambda1: &Partition,
    lambda2: &Partition,
    ctx: &GroupContext,
) -> Result<Decomposition, ModificationError> {
    for lambda in [lambda1, lambda2] {
        if !ctx.is_standard(lambda) {
            return Err(ModificationError::NonstandardInput {
                label: lambda.clone(),
                rows: lambda.len(),
                rank: ctx.rank(),
                ctx: *ctx,
            });
        }
    }
    let out = modify_decomposition(&stable_kronecker(lambda1, lambda2), ctx);
    if !out.is_nonnegative() {
        return Err(ModificationError::NegativeMultiplicity {
            ctx: *ctx,
            decomposition: out,
        });
    }
    Ok(out)
}

/// [`kronecker`] with every output label written as an `SO(n)` weight.
///
/// Inputs are `O(n)` labels. Over `SO(2l)` an output label with exactly `l`
/// rows becomes the pair `(..., lambda_l)` and `(..., -lambda_l)`; an input
/// with `l` rows stands for that whole pair.
pub fn kronecker_so(
    lambda1: &Partition,
    lambda2: &Partition,
    ctx: &GroupContext,
) -> Result<Decomposition<SoEvenLabel>, ModificationError> {
    let product = kronecker(lambda1, lambda2, ctx)?;
    Ok(split_labels(&product, ctx))
}

/// Rewrites `O(n)` labels as zero-padded `SO(n)` weights, splitting `l`-row
/// labels when `n = 2l`.
pub fn split_labels(decomposition: &Decomposition, ctx: &GroupContext) -> Decomposition<SoEvenLabel> {
    let mut out = Decomposition::new();
    for (shape, mult) in decomposition.iter() {
        if ctx.is_even_orthogonal() {
            for label in so_even_split(shape, ctx.rank()) {
                out.add(label, mult);
            }
        } else {
            out.add(SoEvenLabel::padded(shape, ctx.rank()), mult);
        }
    }
    out
}

/// An `SO(2l)` highest weight: `l` entries, weakly decreasing in absolute
/// value, with only the last allowed to be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoEvenLabel {
    rows: Vec<i64>,
}

impl SoEvenLabel {
    pub fn new(rows: Vec<i64>) -> Option<Self> {
        let n = rows.len();
        if rows[..n.saturating_sub(1)].iter().any(|&r| r < 0) {
            return None;
        }
        if rows.windows(2).any(|w| w[0] < w[1].abs()) {
            return None;
        }
        Some(Self { rows })
    }

    /// `lambda` with zeros appended up to `l` entries.
    pub fn padded(lambda: &Partition, l: usize) -> Self {
        let mut rows: Vec<i64> = lambda.rows().iter().map(|&r| r as i64).collect();
        rows.resize(l.max(rows.len()), 0);
        Self { rows }
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    /// The same weight with the last entry negated.
    pub fn flipped(&self) -> Self {
        let mut rows = self.rows.clone();
        if let Some(last) = rows.last_mut() {
            *last = -*last;
        }
        Self { rows }
    }

    /// The `O(n)` label this weight belongs to.
    pub fn to_partition(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.unsigned_abs() as usize).collect())
            .expect("dominant weights have decreasing absolute values")
    }

    fn weight(&self) -> i64 {
        self.rows.iter().map(|r| r.abs()).sum()
    }
}

impl Ord for SoEvenLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| other.rows.cmp(&self.rows))
    }
}

impl PartialOrd for SoEvenLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SoEvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Restriction of the `O(2l)` label `lambda` to `SO(2l)`.
pub fn so_even_split(lambda: &Partition, l: usize) -> Vec<SoEvenLabel> {
    let label = SoEvenLabel::padded(lambda, l);
    if l > 0 && lambda.len() == l {
        vec![label.clone(), label.flipped()]
    } else {
        vec![label]
    }
}
