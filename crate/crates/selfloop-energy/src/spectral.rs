//! Dense symmetric matrices and their spectra.
//!
//! The eigensolver is a cyclic Jacobi iteration: row-major sweeps over the
//! upper triangle, each rotation annihilating one off-diagonal entry, until
//! the off-diagonal Frobenius mass drops below `1e-12 * ||m||_F`. That is
//! every bit of accuracy this crate needs — adjacency matrices here are
//! small (a few hundred rows at most) and well conditioned.

use crate::error::{Error, Result};

/// Relative off-diagonal mass at which the Jacobi iteration stops.
pub const JACOBI_REL_TOL: f64 = 1e-12;

/// Hard cap on Jacobi sweeps; typical inputs converge in well under ten.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Default tolerance when clustering a spectrum into (value, multiplicity)
/// pairs. Eigenvalues in this crate are integers or well-separated surds,
/// so anything between solver noise and 1e-3 works; 1e-6 is the contract.
pub const CLUSTER_TOL: f64 = 1e-6;

/// A real symmetric matrix stored densely in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseSymmetricMatrix {
            n,
            entries: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = 1.0;
        }
        m
    }

    /// Builds a symmetric matrix by evaluating `f` on the upper triangle
    /// (including the diagonal) and mirroring.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.entries[i * n + j] = v;
                m.entries[j * n + i] = v;
            }
        }
        m
    }

    /// Validates squareness and exact symmetry of explicit row data.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::OrderMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for (j, earlier) in rows.iter().enumerate().take(i) {
                if row[j] != earlier[i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(DenseSymmetricMatrix {
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Sets both (i, j) and (j, i).
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn add(&self, other: &DenseSymmetricMatrix) -> Result<DenseSymmetricMatrix> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(DenseSymmetricMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// self + c * I.
    pub fn shift_diagonal(&self, c: f64) -> DenseSymmetricMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] += c;
        }
        m
    }
}

/// Real eigenvalues sorted in non-increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_unstable_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest absolute positional difference against another spectrum of
    /// the same length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.len(), other.len());
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Eigenvalue clusters as (value, multiplicity) pairs, descending by value.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusteredSpectrum {
    pairs: Vec<(f64, usize)>,
}

impl ClusteredSpectrum {
    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    /// Total number of eigenvalues accounted for.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// Checks this clustering against an expected (value, multiplicity)
    /// table: same clusters in the same order, values within `tol`.
    pub fn matches_table(&self, expected: &[(f64, usize)], tol: f64) -> bool {
        self.pairs.len() == expected.len()
            && self
                .pairs
                .iter()
                .zip(expected)
                .all(|(&(v, m), &(ev, em))| m == em && (v - ev).abs() <= tol)
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            let v = a[p * n + q];
            sum += v * v;
        }
    }
    (2.0 * sum).sqrt()
}

/// All eigenvalues of a symmetric matrix, descending, via cyclic Jacobi
/// rotations. Row-major sweep order over pairs (p, q) with p < q keeps the
/// result deterministic.
pub fn eigenvalues_symmetric(m: &DenseSymmetricMatrix) -> Result<Spectrum> {
    let n = m.order();
    if n == 0 {
        return Ok(Spectrum::from_unsorted(Vec::new()));
    }
    let mut a = m.entries.clone();
    // diagonal tracked separately with a compensation term, so repeated
    // rotations do not erode it
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut base = eig.clone();
    let mut accum = vec![0.0; n];

    let threshold = JACOBI_REL_TOL * m.frobenius_norm();
    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0usize;

    while off > threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NonConvergence {
                residual: off,
                sweeps,
            });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let diff = eig[q] - eig[p];
                let t = if apq.abs() < diff.abs() * 1e-36 {
                    // rotation angle is essentially apq / diff; the exact
                    // formula would overflow theta^2
                    apq / diff
                } else {
                    let theta = diff / (2.0 * apq);
                    let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                accum[p] -= h;
                accum[q] += h;
                eig[p] -= h;
                eig[q] += h;
                a[p * n + q] = 0.0;
                let rotate = |a: &mut [f64], x: usize, y: usize| {
                    let g = a[x];
                    let h = a[y];
                    a[x] = g - s * (h + g * tau);
                    a[y] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(&mut a, j * n + p, j * n + q);
                }
                for j in p + 1..q {
                    rotate(&mut a, p * n + j, j * n + q);
                }
                for j in q + 1..n {
                    rotate(&mut a, p * n + j, q * n + j);
                }
            }
        }
        for i in 0..n {
            base[i] += accum[i];
            eig[i] = base[i];
            accum[i] = 0.0;
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }
    Ok(Spectrum::from_unsorted(eig))
}

/// Singular values of a symmetric matrix: the absolute eigenvalues,
/// descending.
pub fn singular_values_symmetric(m: &DenseSymmetricMatrix) -> Result<Spectrum> {
    let eigen = eigenvalues_symmetric(m)?;
    Ok(Spectrum::from_unsorted(
        eigen.values().iter().map(|v| v.abs()).collect(),
    ))
}

/// Sum of singular values, the trace norm.
pub fn trace_norm(m: &DenseSymmetricMatrix) -> Result<f64> {
    Ok(singular_values_symmetric(m)?.sum())
}

/// Greedy left-to-right clustering of a descending spectrum: a value joins
/// the open cluster while it stays within `tol` of the running mean.
pub fn cluster_spectrum(s: &Spectrum, tol: f64) -> ClusteredSpectrum {
    assert!(tol > 0.0, "clustering tolerance must be positive");
    let mut pairs: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut count = 0usize;
    for &v in s.values() {
        if count > 0 && (sum / count as f64 - v).abs() <= tol {
            sum += v;
            count += 1;
        } else {
            if count > 0 {
                pairs.push((sum / count as f64, count));
            }
            sum = v;
            count = 1;
        }
    }
    if count > 0 {
        pairs.push((sum / count as f64, count));
    }
    ClusteredSpectrum { pairs }
}

/// Descriptor of one block of a join: a normal matrix with constant row
/// sum `row_sum`, its remaining `size - 1` eigenvalues in `residual`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegularBlockSpec {
    row_sum: f64,
    residual: Vec<f64>,
    size: usize,
}

impl RegularBlockSpec {
    pub fn new(row_sum: f64, residual: Vec<f64>, size: usize) -> Result<Self> {
        if size == 0 || residual.len() != size - 1 {
            return Err(Error::InvalidBlockSpec {
                size,
                residual_len: residual.len(),
            });
        }
        Ok(RegularBlockSpec {
            row_sum,
            residual,
            size,
        })
    }

    pub fn row_sum(&self) -> f64 {
        self.row_sum
    }

    pub fn residual(&self) -> &[f64] {
        &self.residual
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

/// Spectrum of the block matrix `[[M1, a*J], [b*J, M2]]` for blocks with
/// constant row sums: both residual lists plus the two roots of
/// `(x - r1)(x - r2) - a*b*n1*n2 = 0`.
pub fn join_spectrum_regular(
    b1: &RegularBlockSpec,
    b2: &RegularBlockSpec,
    a: f64,
    b: f64,
) -> Result<Spectrum> {
    let (r1, r2) = (b1.row_sum, b2.row_sum);
    let product = a * b * (b1.size as f64) * (b2.size as f64);
    let discriminant = (r1 - r2) * (r1 - r2) + 4.0 * product;
    if discriminant < 0.0 {
        return Err(Error::ComplexRoots { discriminant });
    }
    let root = discriminant.sqrt();
    let mut values = Vec::with_capacity(b1.size + b2.size);
    values.extend_from_slice(&b1.residual);
    values.extend_from_slice(&b2.residual);
    values.push((r1 + r2 + root) / 2.0);
    values.push((r1 + r2 - root) / 2.0);
    Ok(Spectrum::from_unsorted(values))
}

/// Trace-norm subadditivity slack: `||A||_* + ||B||_* - ||A + B||_*`,
/// which is nonnegative for any pair of equal-order symmetric matrices.
pub fn subadditivity_gap(
    a: &DenseSymmetricMatrix,
    b: &DenseSymmetricMatrix,
) -> Result<f64> {
    let sum = a.add(b)?;
    Ok(trace_norm(a)? + trace_norm(b)? - trace_norm(&sum)?)
}
