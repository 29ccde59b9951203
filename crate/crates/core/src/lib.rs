//! Kronecker products of tensor irreps of `O(n)`, `SO(n)` and `Sp(2m)`.
//!
//! The pipeline follows the Young-diagram method:
//!
//! 1. [`stable`] contracts index pairs between the two factors and
//!    multiplies what is left with the Littlewood–Richardson rule ([`lr`]),
//!    giving the answer valid for all large `n`.
//! 2. [`modification`] folds each nonstandard label back to a signed
//!    standard one (or zero) for the chosen group and cancels signs.
//!
//! [`brauer`] checks the stable product against Brauer-algebra dimension
//! counts, and [`oracle`] certifies group-level answers independently with
//! exact Weyl characters.
//!
//! ```
//! use kronecker_core::{kronecker, GroupContext, Partition};
//!
//! let a: Partition = "[2,1]".parse().unwrap();
//! let b: Partition = "[1,1]".parse().unwrap();
//! let product = kronecker(&a, &b, &GroupContext::symplectic(4)).unwrap();
//! assert_eq!(product.to_string(), "[3,2] + [3] + [2,1] + [1]");
//! ```

pub mod brauer;
pub mod decomposition;
pub mod lr;
pub mod modification;
pub mod oracle;
pub mod partition;
pub mod stable;

pub use brauer::{
    branch, brauer_dim, is_n_permissible, is_semisimple, verify_induced_dim, BratteliDiagram,
    BrauerError, BrauerLabel, InducedDimension,
};
pub use decomposition::{Decomposition, SignedDecomposition};
pub use lr::{lr_coefficient, lr_product, skew_expand, sym_dim};
pub use modification::{
    kronecker, kronecker_so, so_even_split, standardize, standardize_traced, Family, GroupContext,
    ModificationError, SignedLabel, SoEvenLabel,
};
pub use oracle::{
    CharacterOracle, LaurentPolynomial, OracleError, OracleLimits, ProductCheck, RootSystem, WeightLabel,
};
pub use partition::{NotRemovable, Partition, PartitionError, SkewStrip};
pub use stable::{contraction_terms, stable_kronecker, ContractionTerm};
