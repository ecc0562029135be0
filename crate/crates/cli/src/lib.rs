//! Library surface of the twinshift CLI: bundled reference fixtures, output
//! rendering, and the table-reproduction harness. The binary in `main.rs` is
//! a thin argument-parsing layer over these functions and the core crate.

pub mod fixtures;
pub mod render;
pub mod reproduce;
