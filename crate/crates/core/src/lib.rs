//! Exact slope calculus on the boundary tori of knot exteriors.
//!
//! The crate is organised bottom-up:
//!
//! * [`slope`]: primitive classes, slopes, framings and the numerical slope
//!   bijection onto `Q ∪ {∞}`.
//! * [`homology`]: Smith normal form, finitely presented abelian groups, and
//!   the first homology of cable spaces and genus-one closed manifolds.
//! * [`transfer`]: the slope bijection across a cable space and its affine
//!   numerical form `s ↦ ε·q²·s + u`, with replayable certificates.
//! * [`pipeline`]: iterated cabling chains, propagation of strict slope sets
//!   and certified lower bounds for the slope diameter `d_K`.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`).

pub mod encoding;
pub mod error;
pub mod homology;
pub mod pipeline;
pub mod slope;
pub mod transfer;

pub use error::{Error, Result};
pub use homology::{
    cable_space_homology, glued_manifold_h1, group_from_presentation, smith_normal_form,
    CableSpaceModel, FpAbelianGroup, IntMatrix, PlanarOrientation, SnfResult,
};
pub use pipeline::{
    ambient_h1, check_corollary_c, diameter_lower_bound, diameter_lower_bound_with_grid, propagate,
    recognize_gitk, AtomKnot, Cabling, CorollaryReport, DiameterCertificate, KnotDescription,
    LowerBound, Route,
};
pub use slope::{
    canonical_slope, framing_change, geometric_intersection, numerical_slope, slope_from_numerical,
    ExtendedRational, Framing, FramingChange, PrimitiveClass, Sign, Slope,
};
pub use transfer::{
    certify, phi, transfer_map, verify_certificate, AffineMap, AffineSlopeMap, TransferCertificate,
    VerificationReport,
};
