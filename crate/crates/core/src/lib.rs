//! Fan-planar graph drawings: validation, exact small-scale decision
//! procedures, extremal constructions and density audits.

pub mod cli;
pub mod construct;
pub mod crossing;
pub mod decide;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod outer;
pub mod topo;
pub mod two_layer;

pub use error::{Error, Result};
pub use graph::{BipartitePartition, Edge, Graph};
pub use outer::{CircularOrder, OuterDrawing};
pub use topo::{TopoDrawing, Violation, ViolationKind};
