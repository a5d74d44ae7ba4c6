//! Cheap structural classification of a digraph, with the dichromatic
//! bounds it implies.

use std::fmt;

use crate::digraph::{is_acyclic, is_symmetric, Digraph};
use crate::family::cactus_decompose;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub n: usize,
    pub m: usize,
    pub is_dag: bool,
    pub is_symmetric: bool,
    pub is_cactus_forest: bool,
    pub chi_lower: usize,
    pub chi_upper: usize,
}

/// Checks acyclicity, symmetry, and the cactus property, deriving bounds on
/// the dichromatic number: 1 for DAGs, exactly 2 for cactus forests with a
/// cycle, and the trivial [2, n] window otherwise.
pub fn classify(g: &Digraph) -> ClassifyReport {
    let is_dag = is_acyclic(g);
    let is_cactus_forest = cactus_decompose(g).is_ok();
    let (chi_lower, chi_upper) = if g.n() == 0 {
        (0, 0)
    } else if is_dag {
        (1, 1)
    } else if is_cactus_forest {
        (2, 2)
    } else {
        (2, g.n())
    };
    ClassifyReport {
        n: g.n(),
        m: g.arcs().len(),
        is_dag,
        is_symmetric: is_symmetric(g),
        is_cactus_forest,
        chi_lower,
        chi_upper,
    }
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "is_dag: {}", self.is_dag)?;
        writeln!(f, "is_symmetric: {}", self.is_symmetric)?;
        writeln!(f, "is_cactus_forest: {}", self.is_cactus_forest)?;
        writeln!(f, "chi_lower: {}", self.chi_lower)?;
        write!(f, "chi_upper: {}", self.chi_upper)
    }
}
