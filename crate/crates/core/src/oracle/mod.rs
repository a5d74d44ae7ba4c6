//! Brute-force reference solvers and seeded random instance generators.
//! These are correctness instruments for testing the fast solvers, not
//! scalable algorithms; the brute-force searches are practical up to a
//! dozen vertices or so.

use thiserror::Error;

mod brute;
mod cycles;
mod gen;
mod partitions;

pub use brute::{brute_force_chromatic, brute_force_clique_number_d, brute_force_dcn};
pub use cycles::enumerate_simple_cycles;
pub use gen::{gen_random_cactus, gen_random_cw_expr, gen_random_dico_expr, gen_random_digraph};
pub use partitions::enumerate_acyclic_partitions;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("no acyclic coloring with at most {max_r} colors")]
    Exceeded { max_r: usize },
    #[error("more than {cap} simple cycles")]
    CycleCountCapExceeded { cap: usize },
}
