//! Minimum independent dominating sets of graphs and their token-slide
//! reconfiguration graphs (i-graphs), with the closed forms for paths and
//! cycles and the tools to check them.

pub mod analysis;
pub mod cli;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod reconfig;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
