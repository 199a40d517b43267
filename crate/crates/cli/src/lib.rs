//! Library behind the `cuspquot` binary: the result cache, the acceptance
//! suite and the text renderings of each subcommand.

pub mod acceptance;
mod cache;
pub mod render;

pub use cache::{Cache, CACHE_DIR_ENV, CACHE_FILE, CACHE_HEADER};
