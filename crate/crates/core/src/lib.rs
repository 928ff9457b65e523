//! Exact-arithmetic engine for quiver mutation, Y-seeds and the periodicity
//! of Y-systems attached to pairs of Dynkin diagrams.

pub mod algebra;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod matrix;
pub mod quiver;
pub mod seed;
pub mod ysystem;

pub use error::{Error, Result};
