//! Cloud removal toolkit for SAR-optical data fusion.
//!
//! The crate bundles everything needed to run the desk-scale pipeline end to
//! end: a minimal differentiable tensor engine, raster containers and tiling,
//! continuous cloud-mask computation, synthetic cloud generation, the
//! mask-conditioned cycle-consistent generator ensemble with its losses and
//! training loop, and an evaluation suite including improved precision/recall.

pub mod cloudmask;
pub mod config;
pub mod dataset;
pub mod experiments;
pub mod losses;
pub mod metrics;
pub mod model;
pub mod raster;
pub mod simulate;
pub mod tensor;
pub mod train;

pub use cloudmask::{CloudDetector, CloudMask, CoverageStats};
pub use raster::{Modality, Raster};
pub use tensor::{Shape, Tensor};
