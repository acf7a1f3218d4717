//! File formats, SVG rendering, a thread-pool executor and the command-line
//! front end for the `polycycle-core` combinatorics.

pub mod cli;
pub mod io;
pub mod render;

pub use polycycle_core as core;

use polycycle_core::enumerate::Executor;
use rayon::prelude::*;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown format tag {0:?}")]
    UnknownFormatTag(String),
    #[error("validation error: {0}")]
    Validation(#[from] polycycle_core::Error),
    #[error("{0} vertices do not fit planar_code's one-byte labels")]
    TooLarge(usize),
    #[error("outer hole has only {0} sides but some vertices are off it")]
    DegenerateBoundary(usize),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Runs jobs on a rayon pool; results keep input order.
#[derive(Debug)]
pub struct Rayon {
    pool: rayon::ThreadPool,
}

impl Rayon {
    /// `threads = 0` lets rayon choose.
    pub fn new(threads: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool starts");
        Rayon { pool }
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Rayon {
    fn run<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send + Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}
