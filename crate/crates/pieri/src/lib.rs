//! Command line front end for `pieri-core`: JSON formats, text rendering and
//! the worked-example checks behind `pieri verify`.

pub mod cli;
pub mod golden;
pub mod json;
pub mod render;
