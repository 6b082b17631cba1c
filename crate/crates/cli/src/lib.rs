//! Command-line front end for `chirality-core`: molecule files, tables,
//! classification and self-checks.

pub mod app;
pub mod checks;
pub mod molfile;

pub use app::run;
