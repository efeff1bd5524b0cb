//! Algebraic-topological invariants of Lefschetz fibrations over the 2-sphere.
//!
//! A fibration is presented by its monodromy factorization: a [`Word`] of
//! positive Dehn twists whose product is the identity. From the word alone
//! this crate computes
//!
//! * the integral homology of the total space, via the two-step Lefschetz
//!   complex `0 → H₁(F) → Zʳ → H₁(F) → 0` ([`zariski`]);
//! * the signature, by accumulating the Meyer signature cocycle over the
//!   monodromy ([`signature`]);
//! * the derived characteristic numbers: Euler characteristic, degree of
//!   the Hodge bundle along the classifying sphere, Weil–Petersson volume,
//!   and the genus-two and hyperelliptic consistency checks ([`invariants`]).
//!
//! Everything is exact: integers are arbitrary precision and all linear
//! algebra is done over `Z` or `Q`.

pub mod dsl;
pub mod error;
pub mod families;
pub mod invariants;
pub mod matrix;
pub mod monodromy;
pub mod signature;
pub mod snf;
pub mod surface;
pub mod zariski;

pub use error::{Error, Result};
pub use invariants::{full_report, InvariantReport, ReportOptions, Verdict, VerdictStatus, WordStats};
pub use matrix::IntMatrix;
pub use monodromy::{
    check_global_relation, conjugate_word, hurwitz_move, word_monodromy, HurwitzDirection,
    RelationCheck, SymplecticMatrix, Twist, Word,
};
pub use surface::{chain_curve_class, intersection, CycleKind, Genus, HomologyClass};
