//! Classification of the quantum symmetries of small finite metric spaces.
//!
//! A finite metric space is handled through its color pattern: the
//! edge-coloring of the complete graph in which two point pairs share a color
//! exactly when their distances agree. For spaces with at most 7 points the
//! classifier decides, by a cascade of geometric rules on the color
//! components, whether the universal quantum symmetry
//!
//! * fails to act transitively,
//! * collapses to the ordinary automorphism group (commutative case),
//! * is the Temperley-Lieb symmetry of a simplex, or
//! * is the Fuss-Catalan symmetry of a product of simplices,
//!
//! and reports an explicit `Undetermined` outside the proven range.
//!
//! The result is cross-checked by machinery independent of the rule cascade:
//! exact Gram ranks of noncrossing diagram categories ([`diagram`]), Burnside
//! orbit counts of the classical groups ([`perm`]), and entrywise matrix
//! identities over the rationals ([`verify`]).

pub mod classify;
pub mod corpus;
pub mod diagram;
pub mod perm;
pub mod rules;
pub mod space;
pub mod verify;

pub use classify::{classify, enumerate_vertex_transitive, survey, ClassKind, Classification, SurveyMode};
pub use space::{ColoredSpace, Graph};
