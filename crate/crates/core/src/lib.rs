//! Circular-arc models, their representations as edge intersection graphs of
//! paths on a grid (EPG) or on the boundary of a rectangle (EPR), and the
//! decision procedures relating the two.
//!
//! The crate is organised bottom-up:
//!
//! * [`circle`] holds circular-arc models with open-arc semantics and the
//!   covering predicates (normal, normal Helly), containment and domination.
//! * [`grid`] holds grid paths, bend accounting and edge intersection graphs.
//! * [`transforms`] converts between the two worlds (CA to B3-EPG, CA to
//!   B4-EPR, normal CA to B2-EPR, four-point models to B1-EPR and back).
//! * [`families`] generates cycle powers, thick spiders, random models and the
//!   frozen spider fixtures.
//! * [`recognition`] decides chordality, induced containment and B1-EPR
//!   membership for a supplied model.
//! * [`formats`] and [`render`] read, write and draw the line-based file
//!   formats used by the command-line tool.

pub mod circle;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod grid;
pub mod recognition;
pub mod render;
pub mod transforms;
pub mod verify;

pub use circle::{Arc, Circle, CircleModelViolation, CirclePosition, CircularArcModel};
pub use error::{Error, Result};
pub use graph::Graph;
pub use grid::{C4Shape, GridModel, GridPath, GridPoint, Rect, UnitEdge};
pub use recognition::{B1Decision, NoReason};
pub use transforms::{FourPoints, RectEmbedding, SeparationWitness};
