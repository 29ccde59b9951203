//! Independent ground truth from exact Weyl characters.
//!
//! Characters are ratios of Weyl alternants computed with big-integer
//! Laurent polynomials; nothing here uses the Young-diagram machinery, so
//! agreement between the two is a genuine certificate.
//!
//! Partition inputs are read as `O(n)` labels. Over `SO(2l)` (and `O(2l)`)
//! an `l`-row label stands for the sum of the two split weights.

mod laurent;
mod weyl;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub use laurent::{DivisionError, LaurentPolynomial};
pub use weyl::{RootSystem, WeylElement};

use crate::decomposition::Decomposition;
use crate::modification::{Family, GroupContext, SoEvenLabel};
use crate::partition::Partition;

/// Peeling steps allowed before [`OracleError::NonterminationGuard`] trips.
const MAX_PEELS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{ctx} has rank {rank}; the oracle handles ranks 1..={max_rank}")]
    RankOutOfRange { ctx: GroupContext, rank: usize, max_rank: usize },
    #[error("{label} has {boxes} boxes; the oracle cap is {max_boxes}")]
    TooManyBoxes { label: String, boxes: usize, max_boxes: usize },
    #[error("{label} is not a dominant tensor weight for {ctx}")]
    InvalidWeight { label: String, ctx: GroupContext },
    #[error("alternant division failed: {0}")]
    AlternantDivision(#[from] DivisionError),
    #[error("character peeling did not terminate after {0} steps")]
    NonterminationGuard(usize),
    #[error("character peeling met non-dominant leading exponent {0:?}")]
    NonDominantLeader(Vec<i64>),
    #[error("split weights {label} and its flip occur with different multiplicities")]
    UnpairedSplit { label: String },
}

/// Rank and box caps for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_rank: usize,
    /// Per input label.
    pub max_boxes: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_rank: 4,
            max_boxes: 8,
        }
    }
}

/// A dominant tensor weight; only type D allows a negative last entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightLabel {
    entries: Vec<i64>,
}

impl WeightLabel {
    pub fn new(entries: Vec<i64>) -> Self {
        Self { entries }
    }

    pub fn from_partition(lambda: &Partition, rank: usize) -> Self {
        let mut entries: Vec<i64> = lambda.rows().iter().map(|&r| r as i64).collect();
        entries.resize(rank.max(entries.len()), 0);
        Self { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Same weight with the last entry negated.
    pub fn flipped(&self) -> Self {
        let mut entries = self.entries.clone();
        if let Some(last) = entries.last_mut() {
            *last = -*last;
        }
        Self { entries }
    }

    pub fn to_partition(&self) -> Option<Partition> {
        let rows = self.entries.iter().map(|&e| usize::try_from(e.abs()).ok()).collect::<Option<Vec<_>>>()?;
        Partition::new(rows).ok()
    }

    fn boxes(&self) -> usize {
        self.entries.iter().map(|e| e.unsigned_abs() as usize).sum()
    }
}

impl From<&SoEvenLabel> for WeightLabel {
    fn from(label: &SoEvenLabel) -> Self {
        Self::new(label.rows().to_vec())
    }
}

impl Ord for WeightLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .boxes()
            .cmp(&self.boxes())
            .then_with(|| other.entries.cmp(&self.entries))
    }
}

impl PartialOrd for WeightLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Outcome of a character identity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    pub holds: bool,
    /// `chi(lambda1) * chi(lambda2) - sum mult * chi(term)`
    pub difference: LaurentPolynomial,
    pub lhs_dim: BigInt,
    pub rhs_dim: BigInt,
}

#[derive(Debug, Clone, Default)]
pub struct CharacterOracle {
    limits: OracleLimits,
}

impl CharacterOracle {
    pub fn new(limits: OracleLimits) -> Self {
        Self { limits }
    }

    pub fn limits(&self) -> OracleLimits {
        self.limits
    }

    /// Whether `ctx` is within the rank cap.
    pub fn supports(&self, ctx: &GroupContext) -> bool {
        (1..=self.limits.max_rank).contains(&ctx.rank())
    }

    fn root_system(&self, ctx: &GroupContext) -> Result<RootSystem, OracleError> {
        if !self.supports(ctx) {
            return Err(OracleError::RankOutOfRange {
                ctx: *ctx,
                rank: ctx.rank(),
                max_rank: self.limits.max_rank,
            });
        }
        Ok(RootSystem::of(ctx))
    }

    fn check_boxes(&self, label: &dyn fmt::Display, boxes: usize) -> Result<(), OracleError> {
        if boxes > self.limits.max_boxes {
            return Err(OracleError::TooManyBoxes {
                label: label.to_string(),
                boxes,
                max_boxes: self.limits.max_boxes,
            });
        }
        Ok(())
    }

    /// Pads the label to the rank and checks dominance. `O(n)` labels must
    /// be nonnegative.
    fn normalize(&self, label: &WeightLabel, ctx: &GroupContext) -> Result<(RootSystem, WeightLabel), OracleError> {
        let system = self.root_system(ctx)?;
        let invalid = || OracleError::InvalidWeight {
            label: label.to_string(),
            ctx: *ctx,
        };
        if label.entries.len() > system.rank() {
            return Err(invalid());
        }
        let padded = WeightLabel::from_entries_padded(&label.entries, system.rank());
        let negative = padded.entries.iter().any(|&e| e < 0);
        if !system.is_dominant(&padded.entries) || (negative && ctx.family() == Family::O) {
            return Err(invalid());
        }
        Ok((system, padded))
    }

    /// Irreducible Weyl character of a single dominant weight, in doubled
    /// exponents. Never sums a split pair.
    fn weyl_character(&self, system: RootSystem, weight: &[i64]) -> Result<LaurentPolynomial, OracleError> {
        Ok(system.character(weight)?)
    }

    /// Character of `label` over `ctx`.
    ///
    /// For `O(2l)` a label with a nonzero last entry gives the restriction to
    /// `SO(2l)`, the sum over the split pair. For `SO(n)` the label is taken
    /// as a single `SO(n)` weight.
    pub fn character(&self, label: &WeightLabel, ctx: &GroupContext) -> Result<LaurentPolynomial, OracleError> {
        self.check_boxes(label, label.boxes())?;
        let (system, weight) = self.normalize(label, ctx)?;
        let chi = self.weyl_character(system, &weight.entries)?;
        if ctx.family() == Family::O && splits(system, &weight) {
            let other = self.weyl_character(system, &weight.flipped().entries)?;
            return Ok(&chi + &other);
        }
        Ok(chi)
    }

    /// Character of the `O(n)` label `lambda`, restricted to `SO(n)`.
    pub fn partition_character(&self, lambda: &Partition, ctx: &GroupContext) -> Result<LaurentPolynomial, OracleError> {
        let as_o = GroupContext::new(Family::O, ctx.dimension()).unwrap_or(*ctx);
        let ctx = if ctx.family() == Family::Sp { ctx } else { &as_o };
        self.character(&WeightLabel::from_partition(lambda, ctx.rank()), ctx)
    }

    /// Weyl dimension formula; for `O(2l)` labels with `l` rows, the sum over
    /// the split pair.
    pub fn group_dim(&self, label: &WeightLabel, ctx: &GroupContext) -> Result<BigUint, OracleError> {
        let (system, weight) = self.normalize(label, ctx)?;
        let dim = system.dimension(&weight.entries);
        if ctx.family() == Family::O && splits(system, &weight) {
            return Ok(dim * 2u32);
        }
        Ok(dim)
    }

    /// Dimension of the `O(n)` label `lambda` (or `Sp(n)` label).
    pub fn partition_dim(&self, lambda: &Partition, ctx: &GroupContext) -> Result<BigUint, OracleError> {
        let as_o = GroupContext::new(Family::O, ctx.dimension()).unwrap_or(*ctx);
        let ctx = if ctx.family() == Family::Sp { ctx } else { &as_o };
        self.group_dim(&WeightLabel::from_partition(lambda, ctx.rank()), ctx)
    }

    /// `chi(lambda1) * chi(lambda2)` for two partition labels.
    pub fn product_character(
        &self,
        lambda1: &Partition,
        lambda2: &Partition,
        ctx: &GroupContext,
    ) -> Result<LaurentPolynomial, OracleError> {
        for lambda in [lambda1, lambda2] {
            self.check_boxes(lambda, lambda.size())?;
        }
        let a = self.partition_character(lambda1, ctx)?;
        let b = self.partition_character(lambda2, ctx)?;
        Ok(&a * &b)
    }

    /// Tests `chi(lambda1) chi(lambda2) = sum mult * chi(term)` exactly, with
    /// `claimed` written in partition labels.
    pub fn verify_product(
        &self,
        lambda1: &Partition,
        lambda2: &Partition,
        ctx: &GroupContext,
        claimed: &Decomposition,
    ) -> Result<ProductCheck, OracleError> {
        let lhs = self.product_character(lambda1, lambda2, ctx)?;
        let mut rhs = LaurentPolynomial::zero(ctx.rank());
        for (shape, mult) in claimed.iter() {
            let chi = self.partition_character(shape, ctx)?;
            rhs.add_shifted(&chi, &vec![0; ctx.rank()], &BigInt::from(mult));
        }
        Ok(check(lhs, rhs))
    }

    /// As [`verify_product`](Self::verify_product) with `claimed` written as
    /// `SO(n)` weights.
    pub fn verify_weight_product(
        &self,
        lambda1: &Partition,
        lambda2: &Partition,
        ctx: &GroupContext,
        claimed: &Decomposition<WeightLabel>,
    ) -> Result<ProductCheck, OracleError> {
        let lhs = self.product_character(lambda1, lambda2, ctx)?;
        let so = so_view(ctx);
        let mut rhs = LaurentPolynomial::zero(ctx.rank());
        for (weight, mult) in claimed.iter() {
            let chi = self.character(weight, &so)?;
            rhs.add_shifted(&chi, &vec![0; ctx.rank()], &BigInt::from(mult));
        }
        Ok(check(lhs, rhs))
    }

    /// Splits a character into irreducible `SO(n)` / `Sp(n)` characters by
    /// repeatedly subtracting the character of the lexicographically highest
    /// surviving weight.
    pub fn decompose_character(
        &self,
        character: &LaurentPolynomial,
        ctx: &GroupContext,
    ) -> Result<Decomposition<WeightLabel>, OracleError> {
        let system = self.root_system(ctx)?;
        let mut cache: HashMap<Vec<i64>, LaurentPolynomial> = HashMap::new();
        let mut rem = character.clone();
        let mut out = Decomposition::new();
        let mut steps = 0;
        while let Some((exp, coeff)) = rem.leading_term() {
            steps += 1;
            if steps > MAX_PEELS {
                return Err(OracleError::NonterminationGuard(MAX_PEELS));
            }
            if exp.iter().any(|e| e % 2 != 0) {
                return Err(OracleError::NonDominantLeader(exp.to_vec()));
            }
            let weight: Vec<i64> = exp.iter().map(|e| e / 2).collect();
            if !system.is_dominant(&weight) {
                return Err(OracleError::NonDominantLeader(exp.to_vec()));
            }
            let mult = coeff.clone();
            if !cache.contains_key(&weight) {
                let chi = self.weyl_character(system, &weight)?;
                cache.insert(weight.clone(), chi);
            }
            rem.add_shifted(&cache[&weight], &vec![0; system.rank()], &-mult.clone());
            let mult = i64::try_from(mult).expect("multiplicity fits in i64");
            out.add(WeightLabel::new(weight), mult);
        }
        Ok(out)
    }

    /// Ground-truth product decomposition in `SO(n)` / `Sp(n)` weights.
    pub fn decompose_weights(
        &self,
        lambda1: &Partition,
        lambda2: &Partition,
        ctx: &GroupContext,
    ) -> Result<Decomposition<WeightLabel>, OracleError> {
        let product = self.product_character(lambda1, lambda2, ctx)?;
        self.decompose_character(&product, ctx)
    }

    /// Ground-truth product decomposition in partition labels. Split pairs
    /// over `SO(2l)` are folded back into one `O(2l)` label.
    pub fn decompose_via_characters(
        &self,
        lambda1: &Partition,
        lambda2: &Partition,
        ctx: &GroupContext,
    ) -> Result<Decomposition, OracleError> {
        let weights = self.decompose_weights(lambda1, lambda2, ctx)?;
        let system = self.root_system(ctx)?;
        let mut out = Decomposition::new();
        for (weight, mult) in weights.iter() {
            let last = weight.entries.last().copied().unwrap_or(0);
            if splits(system, weight) {
                if weights.get(&weight.flipped()) != mult {
                    return Err(OracleError::UnpairedSplit {
                        label: weight.to_string(),
                    });
                }
                if last < 0 {
                    continue;
                }
            }
            let shape = weight.to_partition().expect("dominant tensor weights are partitions up to sign");
            out.add(shape, mult);
        }
        Ok(out)
    }
}

impl WeightLabel {
    fn from_entries_padded(entries: &[i64], rank: usize) -> Self {
        let mut entries = entries.to_vec();
        entries.resize(rank, 0);
        Self { entries }
    }
}

/// Type D weights with a nonzero last entry come in flipped pairs.
fn splits(system: RootSystem, weight: &WeightLabel) -> bool {
    matches!(system, RootSystem::D(_)) && weight.entries.last().is_some_and(|&e| e != 0)
}

fn so_view(ctx: &GroupContext) -> GroupContext {
    match ctx.family() {
        Family::O => GroupContext::new(Family::SO, ctx.dimension()).expect("same dimension"),
        _ => *ctx,
    }
}

fn check(lhs: LaurentPolynomial, rhs: LaurentPolynomial) -> ProductCheck {
    let lhs_dim = lhs.evaluate_at_one();
    let rhs_dim = rhs.evaluate_at_one();
    let difference = &lhs - &rhs;
    ProductCheck {
        holds: difference.is_zero(),
        difference,
        lhs_dim,
        rhs_dim,
    }
}
