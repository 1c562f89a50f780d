//! Exact computations on Stanley-Reisner rings of simplicial complexes.
//!
//! The crate covers the path from a simplicial complex to Lefschetz-type
//! questions about its monomial artinian reductions:
//!
//! - [`complex`]: simplicial complexes, face enumeration, f/h-vectors, links,
//!   rational homology and the topological predicates built on it.
//! - [`subdivision`]: facet-ridge graphs, incidence complexes and the
//!   half-hollow edgewise subdivision.
//! - [`linalg`]: sparse exact rational matrices with rank and kernel.
//! - [`algebra`]: polynomials, contraction, Stanley-Reisner and facet ideals,
//!   artinian monomial algebras, multiplication and log matrices.
//! - [`lefschetz`]: WLP/SLP reports, inverse systems, ideal membership and
//!   verification of unexpected systems of parameters.
//!
//! All arithmetic is over the rationals. Modular ranks exist only as a
//! screening tool and never replace an exact rank.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod lefschetz;
pub mod linalg;
pub mod subdivision;

pub use algebra::{ArtinianFrame, IdealPresentation, LogMatrix, Monomial, Polynomial};
pub use complex::{
    CollapseCertificate, Coloring, FHProfile, Face, HomologyReport, PseudomanifoldStatus,
    SimplicialComplex,
};
pub use error::{Error, Result};
pub use lefschetz::{InverseSystemPiece, SopCandidate, UnexpectedReport, WlpReport};
pub use linalg::{ExactMatrix, KernelBasis};
pub use subdivision::{FacetRidgeGraph, Graph, Hesd, IncidenceComplex, LatticePoint};
