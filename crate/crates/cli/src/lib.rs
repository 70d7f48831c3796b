//! Library half of the `coopsec` command-line tool: CSV records, figure
//! grids and the subcommand implementations.

pub mod commands;
pub mod figures;
pub mod record;

pub use figures::{run_figure, FigureTable};
pub use record::{format_real, RunRecord, HEADER};
