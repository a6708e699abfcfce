//! Exact-arithmetic toolkit for the virtual braid group and its
//! connector ("stringy") reformulation: word and permutation machinery,
//! relator tables, presentation-change rewrites, Yang-Baxter matrix
//! representations, Hopf-algebra axiom checkers, and quantum invariants
//! of rotational virtual links through the tangle category.
//!
//! Everything computes over exact rings (big integers, rationals, and
//! integer Laurent polynomials); there is no floating point anywhere.

pub mod builtins;
pub mod error;
pub mod hopf;
pub mod matrix;
pub mod perm;
pub mod presentation;
pub mod rep;
pub mod rewrite;
pub mod ring;
pub mod tangle;
pub mod trace;
pub mod word;

pub use error::{Error, Result};
pub use hopf::{check_hopf_axioms, check_quasitriangular, check_ribbon, check_right_integral, HopfData};
pub use matrix::{
    check_aybe, check_braided_ybe, check_hecke_quadratic, embed_pair, perm_operator, ExactMatrix,
};
pub use perm::Permutation;
pub use presentation::{forbidden_relators, relators, ForbiddenName, Presentation, PresentationName};
pub use rep::{verify_relators, HeckeRep, VerifyReport, VirtualRep};
pub use rewrite::{certify_equal, slide_normalize, to_classical, to_stringy, SlideNormal, Verdict};
pub use ring::{Laurent, Ring, Value};
pub use tangle::{check_move_invariance, RibbonMatrixData, TangleDiagram, Tile};
pub use trace::{concentrate, evaluate_trace, rotation_numbers, TraceToken, TraceWord};
pub use word::{BraidWord, Gen};
