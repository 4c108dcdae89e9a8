//! Graph energy, with and without self-loops.
//!
//! For a plain graph the energy is the sum of absolute adjacency
//! eigenvalues. When a loop set S of size alpha is attached, the adjacency
//! picks up ones on the S-diagonal and the energy becomes
//! `sum_i |lambda_i - alpha/n|`: the spectrum is re-centered at the mean
//! diagonal entry before taking absolute values.
//!
//! Everything here goes through the eigensolver. Closed forms (complete
//! graphs, joins of regular blocks, the empty-graph formula) are reserved
//! for tests, where they act as independent oracles.

use crate::error::{Error, Result};
use crate::graph::{Graph, SelfLoopGraph};
use crate::spectral::{self, DenseSymmetricMatrix, Spectrum};

/// Tolerance for the trace identity enforced on every self-loop
/// evaluation: the eigenvalues must add up to alpha.
const TRACE_TOL: f64 = 1e-9;

/// The full outcome of one self-loop energy evaluation.
#[derive(Clone, Debug)]
pub struct EnergyReport {
    pub energy: f64,
    /// alpha / n.
    pub shift: f64,
    /// Eigenvalues of the loop-adjacency matrix, descending.
    pub spectrum: Spectrum,
    pub alpha: usize,
    pub n: usize,
}

/// Adjacency matrix of a plain graph.
pub fn adjacency(g: &Graph) -> DenseSymmetricMatrix {
    DenseSymmetricMatrix::from_fn(g.order(), |i, j| f64::from(g.has_edge(i, j)))
}

/// Adjacency matrix with ones on the diagonal positions carrying loops.
pub fn adjacency_with_loops(gs: &SelfLoopGraph) -> DenseSymmetricMatrix {
    DenseSymmetricMatrix::from_fn(gs.order(), |i, j| {
        if i == j {
            f64::from(gs.loops().contains(i))
        } else {
            f64::from(gs.base().has_edge(i, j))
        }
    })
}

/// Energy of a plain graph: the trace norm of its adjacency matrix.
pub fn energy(g: &Graph) -> Result<f64> {
    spectral::trace_norm(&adjacency(g))
}

/// Energy of a self-loop graph, with the spectrum that produced it.
pub fn energy_self_loop(gs: &SelfLoopGraph) -> Result<EnergyReport> {
    let n = gs.order();
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let spectrum = spectral::eigenvalues_symmetric(&adjacency_with_loops(gs))?;
    let alpha = gs.alpha();
    let eigen_sum = spectrum.sum();
    if (eigen_sum - alpha as f64).abs() > TRACE_TOL * n as f64 {
        return Err(Error::TraceMismatch {
            eigen_sum,
            expected: alpha as f64,
        });
    }
    let energy = energy_from_spectrum(&spectrum, alpha, n)?;
    Ok(EnergyReport {
        energy,
        shift: gs.shift(),
        spectrum,
        alpha,
        n,
    })
}

/// `sum_i |s_i - alpha/n|` for an already-computed spectrum.
pub fn energy_from_spectrum(s: &Spectrum, alpha: usize, n: usize) -> Result<f64> {
    if s.len() != n {
        return Err(Error::SpectrumLengthMismatch {
            expected: n,
            actual: s.len(),
        });
    }
    if n == 0 {
        return Ok(0.0);
    }
    let shift = alpha as f64 / n as f64;
    Ok(s.values().iter().map(|v| (v - shift).abs()).sum())
}
