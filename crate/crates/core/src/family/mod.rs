//! Linear-time solvers for digraph classes where the dichromatic number has
//! closed-form recursions or tiny exact values: co-graph expressions,
//! directed cactus forests, and cheap structural classification.

mod cactus;
mod classify;
mod cograph;

pub use cactus::{
    cactus_color, cactus_decompose, CycleDecomposition, DagNode, NotACactus,
};
pub use classify::{classify, ClassifyReport};
pub use cograph::{cograph_clique_number, cograph_dcn};
