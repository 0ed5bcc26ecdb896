//! Dense symmetric eigendecomposition by cyclic Jacobi rotations.

use serde::Serialize;

use crate::numeric::{ksum, scale, EIGEN_TOL, RESIDUAL_TOL};
use crate::{Error, Result, WeightedGraph};

const MAX_SWEEPS: usize = 100;

/// Row-major dense square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn from_rows(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Dimension { expected: n * n, found: data.len() });
        }
        Ok(Self { n, data })
    }

    pub fn adjacency(g: &WeightedGraph) -> Self {
        Self { n: g.n(), data: g.adjacency().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        ksum(self.data.iter().map(|x| x * x)).sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| ksum((0..self.n).map(|j| self.get(i, j) * x[j])))
            .collect()
    }

    fn check(&self) -> Result<()> {
        let max_abs = self.data.iter().fold(0f64, |m, x| m.max(x.abs()));
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j).is_finite() {
                    return Err(Error::NonFinite { i, j });
                }
            }
        }
        let tol = 1e-12 * scale(max_abs);
        for i in 0..self.n {
            for j in i + 1..self.n {
                let gap = (self.get(i, j) - self.get(j, i)).abs();
                if gap > tol {
                    return Err(Error::NotSymmetric { i, j, gap });
                }
            }
        }
        Ok(())
    }
}

/// Eigenvalues with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigen {
    /// Sorted descending.
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

/// Full eigendecomposition. Sweeps stop once the off-diagonal Frobenius mass
/// is at most `1e-13 · max(1, ‖M‖_F)`.
pub fn jacobi_eigen(m: &SymMatrix) -> Result<Eigen> {
    m.check()?;
    let n = m.n;
    let mut a = m.data.clone();
    // Symmetrize away rounding-level asymmetry.
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = EIGEN_TOL * scale(m.frobenius_norm());
    let off_norm = |a: &[f64]| {
        let s = ksum((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| a[i * n + j].powi(2)));
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]).then(i.cmp(&j)));
    let values = idx.iter().map(|&i| a[i * n + i]).collect();
    let vectors = idx.iter().map(|&i| (0..n).map(|k| v[k * n + i]).collect()).collect();
    Ok(Eigen { values, vectors })
}

/// Spectrum, spectral radius, principal vector and Frobenius norm.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSummary {
    pub eigenvalues: Vec<f64>,
    #[serde(rename = "lambda")]
    pub spectral_radius: f64,
    #[serde(skip)]
    pub principal_vector: Vec<f64>,
    /// Eigenvalue attaining the spectral radius (the positive one on ties).
    #[serde(skip)]
    pub principal_value: f64,
    #[serde(rename = "frobenius")]
    pub frobenius_norm: f64,
}

impl SpectrumSummary {
    /// `|‖A‖_F² − Σ λᵢ²|`, relative to `max(1, ‖A‖_F²)`.
    pub fn trace_identity_error(&self) -> f64 {
        let f2 = self.frobenius_norm.powi(2);
        (f2 - ksum(self.eigenvalues.iter().map(|x| x * x))).abs() / scale(f2)
    }
}

/// Flips `x` so its largest-magnitude entry (first on ties) is positive.
pub fn normalize_sign(x: &mut [f64]) {
    let lead = x.iter().copied().fold(0f64, |m, v| if v.abs() > m.abs() { v } else { m });
    if lead < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
}

pub fn eigen_sym(m: &SymMatrix) -> Result<SpectrumSummary> {
    let eig = jacobi_eigen(m)?;
    let frobenius_norm = m.frobenius_norm();
    let (mut principal_value, mut principal_vector) = (0.0, vec![0.0; m.n]);
    if let (Some(&top), Some(&bottom)) = (eig.values.first(), eig.values.last()) {
        let tie = 1e-12 * scale(frobenius_norm);
        let k = if top >= -bottom - tie { 0 } else { m.n - 1 };
        principal_value = eig.values[k];
        principal_vector = eig.vectors[k].clone();
        normalize_sign(&mut principal_vector);
    }
    let spectral_radius = principal_value.abs();
    let summary = SpectrumSummary {
        eigenvalues: eig.values,
        spectral_radius,
        principal_vector,
        principal_value,
        frobenius_norm,
    };
    debug_assert!(summary.trace_identity_error() <= RESIDUAL_TOL, "trace identity failed");
    Ok(summary)
}

pub fn graph_spectrum(g: &WeightedGraph) -> Result<SpectrumSummary> {
    eigen_sym(&SymMatrix::adjacency(g))
}

/// λ(G), the largest absolute eigenvalue of the weighted adjacency matrix.
pub fn spectral_radius(g: &WeightedGraph) -> Result<f64> {
    Ok(graph_spectrum(g)?.spectral_radius)
}

/// `‖A x − μ x‖₂` for a candidate eigenpair.
pub fn eigen_residual(m: &SymMatrix, mu: f64, x: &[f64]) -> f64 {
    let ax = m.mul_vec(x);
    ksum(ax.iter().zip(x).map(|(a, b)| (a - mu * b).powi(2))).sqrt()
}

/// Nonnegative unit Perron vector of `|A(G)|`.
///
/// Power iteration on `|A| + λI` from the all-ones vector; the shift moves
/// `−λ` away from the dominant eigenvalue so bipartite graphs converge.
pub fn perron_vector(g: &WeightedGraph) -> Result<Vec<f64>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let abs = g.map_weights(|_, _, w| w.abs())?;
    let lambda = spectral_radius(&abs)?;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    if lambda == 0.0 {
        return Ok(x);
    }
    for _ in 0..100_000 {
        let mut y: Vec<f64> = (0..n)
            .map(|i| lambda * x[i] + ksum(abs.neighbors(i).ones().map(|j| abs.weight(i, j) * x[j])))
            .collect();
        let norm = ksum(y.iter().map(|v| v * v)).sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        let change = x.iter().zip(&y).fold(0f64, |m, (a, b)| m.max((a - b).abs()));
        x = y;
        if change <= 1e-15 {
            break;
        }
    }
    Ok(x)
}
