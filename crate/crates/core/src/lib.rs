//! Solutions of the free-product group Yang–Baxter equation over `Z`, the
//! Wada-type braid representations they define, and braid-closure invariants.
//!
//! A pair of reduced words `(W, V)` in `F_2 = ⟨x, y⟩` defines `τ_{W,V}: x ↦ W,
//! y ↦ V`, and on `n` strands the local maps `τ_i` acting on `x_i, x_{i+1}`.
//! The crate checks the Yang–Baxter system for a pair, enumerates and
//! classifies all solutions up to a length bound, decides invertibility by
//! Nielsen reduction, and computes presentations and abelian invariants of
//! braid closures.

pub mod braid;
pub mod endo;
pub mod error;
pub mod fgybe;
pub mod invariant;
pub mod nielsen;
pub mod word;

pub use braid::{braid_permutation, braid_to_endo, verify_braid_relations, BraidLetter, BraidWord, Permutation};
pub use endo::{Endomorphism, SolutionPair};
pub use error::{Error, Result};
pub use fgybe::{
    classify, enumerate_solutions, enumerate_solutions_parallel, family_instantiate, is_solution, CheckReport, FamilyId,
    SolutionRecord,
};
pub use invariant::{
    abelian_invariants, abelianized_matrix, closure_presentation, simplify, smith_normal_form, AbelianInvariants,
    IntegerMatrix, Presentation, SmithForm,
};
pub use nielsen::{generated_rank, invert_pair, is_automorphism, nielsen_reduce, NielsenCertificate};
pub use word::{enumerate_reduced_words, reduce, Generator, Letter, Word};
