//! Self-avoiding walks on lazily defined infinite graphs.
//!
//! Graphs are neighbor rules over canonical vertex ids ([`graph`]). Exact walk
//! and bridge counts come from [`walk`], numeric bounds on the connective
//! constant from [`bounds`], and exactly uniform walk samples from [`sampler`].
//!
//! The crate is `no_std` with `alloc`. The default `std` feature enables
//! parallel enumeration through rayon.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
mod error;
pub mod graph;
pub(crate) mod math;
pub mod sampler;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{
    fisher_semicubic, fisher_transform, girth_up_to, make_family, quotient_cylinder,
    validate_height, Coloring, Direction, Edge, GraphSpec, HeightFunction, HeightReport,
    HeightRigor, RootedGraph, TransitiveClass, VertexId,
};
pub use walk::{CountSeries, EnumConfig, SeriesKind, Truncation};

/// Crate version, echoed by the command-line front end.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
