//! Exact-arithmetic laboratory for Hagge circles and indirectly similar
//! triangles in perspective.
//!
//! The crate is organised bottom-up:
//!
//! - [`numeric`]: dual-backend scalars (exact big rationals, IEEE doubles);
//! - [`geom`]: points, lines, circles, conics and the exact predicates built
//!   on them;
//! - [`centers`]: classical triangle centers and isogonal conjugation;
//! - [`hagge`]: the Hagge-circle configuration and its property suite;
//! - [`speckman`]: indirect similarities, perspectives, orthologic/paralogic
//!   centers and the closed-form coordinate-model audit;
//! - [`script`], [`generate`], [`report`], [`svg`]: the verification harness
//!   (construction DSL, seeded instance generation, JSON reports, figures).

pub mod centers;
pub mod generate;
pub mod geom;
pub mod hagge;
pub mod numeric;
pub mod report;
pub mod script;
pub mod speckman;
pub mod suites;
pub mod svg;

pub use numeric::{Backend, Scalar};
