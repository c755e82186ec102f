//! The scene language: parsing, printing, elaboration and running checks.

pub mod ast;
pub mod elab;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod registry;
pub mod report;
pub mod runner;

pub use ast::SceneAst;
pub use elab::{elaborate, CheckCall, Scene, Value};
pub use error::{DslError, ErrorKind};
pub use parser::parse;
pub use printer::print_scene;
pub use report::{Meta, Record, Report};
pub use runner::{run_scene, sample_points, RunOptions, DEFAULT_SAMPLES, DEFAULT_SEED};

/// Parses, elaborates and runs scene text.
pub fn check_text(text: &str, opts: &RunOptions) -> Result<Report, DslError> {
    let scene = elaborate(&parse(text)?)?;
    Ok(run_scene(&scene, opts))
}
