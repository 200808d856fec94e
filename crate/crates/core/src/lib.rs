//! Congruences, morphisms and substructures of finite algebras.
//!
//! An [`Algebra`] is a finite carrier `0..n` with any number of binary and
//! unary operations given as tables. The library computes
//!
//! * principal and all congruences, and whether the algebra is monolithic
//!   ([`congruence`]);
//! * automorphisms, endomorphisms, monomorphisms, epimorphisms and
//!   isomorphisms ([`morphism`]);
//! * subuniverses, divisors and direct decompositions ([`structure`]).
//!
//! Partitions use the signed union-find encoding described in [`partition`].
//! Tables and encodings are zero-based in memory; text formats in
//! [`format`] and the command line are one-based.
//!
//! ```
//! use finalg::{all_congruences, Algebra};
//!
//! // Z/4 under addition has the chain 0 < 2Z/4 < 1 of congruences
//! let z4 = Algebra::magma_from_rows(&[
//!     vec![1, 2, 3, 4],
//!     vec![2, 3, 4, 1],
//!     vec![3, 4, 1, 2],
//!     vec![4, 1, 2, 3],
//! ])
//! .unwrap();
//! assert_eq!(all_congruences(&z4).len(), 3);
//! ```

pub mod algebra;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod fingerprint;
pub mod format;
pub mod mapping;
pub mod morphism;
pub mod oracle;
pub mod partition;
pub mod rees;
pub mod structure;

pub use algebra::{
    binary_to_unary, compatible, quotient_algebra, subalgebra_from_universe, validate_algebra,
    Algebra, AlgebraTables, BinaryOp, QuotientResult, UnaryOp,
};
pub use congruence::{
    all_congruences, all_principal_congruences, is_congruence, is_monolithic, principal_congruence,
};
pub use error::{Error, Result};
pub use fingerprint::{all_invariant_vectors, invariant_vector, InvariantVector};
pub use mapping::Mapping;
pub use morphism::{
    algebra_automorphisms, all_epimorphisms, all_monomorphisms, are_isomorphic,
    classic_endomorphisms, congruence_endomorphisms, endomorphisms, endomorphisms_with_threshold,
    exists_epimorphism, exists_monomorphism, is_homomorphism, magma_automorphisms,
    one_epimorphism, one_monomorphism,
};
pub use partition::Partition;
pub use rees::rees_matrix_semigroup;
pub use structure::{
    all_divisor_witnesses, all_subuniverses, closure, directly_reducible, exists_divisor,
    generated, is_directly_reducible, one_directly_reducible, one_divisor_witness,
    DivisorWitness,
};
