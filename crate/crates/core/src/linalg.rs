//! Dense linear algebra kernels: a symmetric eigensolver and a complex
//! Gaussian-elimination inverse.
//!
//! The eigensolver is the classic two-stage reduction — Householder
//! tridiagonalization followed by implicit-shift QL — in its values-only
//! form (EISPACK tred1/tql1 lineage). It is deliberately dependency-free:
//! the matrices here are Gram matrices of at most ~1100 rows, well inside
//! what the O(p³) reduction handles in well under a second, and a pinned
//! 60-line algorithm keeps spectra bit-reproducible across platforms.
//!
//! The complex routines exist for the resolvent-identity verification
//! utilities, which invert (A − zI) explicitly at small sizes.

use num_complex::Complex64;
use thiserror::Error;

/// Off-diagonal deflation threshold, relative to the local diagonal scale.
const DEFLATION_RELATIVE: f64 = 1e-12;
/// QL iteration cap per eigenvalue.
const MAX_QL_ITERATIONS: usize = 50;

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix not symmetric: |H[{i}][{j}] - H[{j}][{i}]| = {defect:e} exceeds tolerance")]
    NotSymmetric { i: usize, j: usize, defect: f64 },
    #[error("QL iteration failed to converge for eigenvalue index {0} after {MAX_QL_ITERATIONS} sweeps")]
    NonConvergence(usize),
    #[error("matrix is numerically singular at elimination step {0}")]
    Singular(usize),
}

/// Dense real matrix, row-major, used for symmetric spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn from_data(dim: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), dim * dim);
        SymMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Largest absolute off-diagonal asymmetry, with its location.
    pub fn symmetry_defect(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0f64);
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let d = (self.get(i, j) - self.get(j, i)).abs();
                if d > worst.2 {
                    worst = (i, j, d);
                }
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, &v| acc.max(v.abs()))
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }
}

/// All eigenvalues of a symmetric matrix, sorted ascending.
///
/// Rejects input whose symmetry defect exceeds `tol * max|H|`; converges to
/// roughly `DEFLATION_RELATIVE * ||H||` absolute eigenvalue accuracy.
pub fn symmetric_eigenvalues(h: &SymMatrix, tol: f64) -> Result<Vec<f64>, LinalgError> {
    let n = h.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (i, j, defect) = h.symmetry_defect();
    if defect > tol * h.max_abs().max(1.0) {
        return Err(LinalgError::NotSymmetric { i, j, defect });
    }
    let mut a = h.clone();
    let (mut d, mut e) = tridiagonalize(&mut a);
    ql_implicit(&mut d, &mut e)?;
    d.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(d)
}

/// Householder reduction to tridiagonal form, values-only variant.
/// Returns (diagonal, subdiagonal) with the subdiagonal in e[1..].
fn tridiagonalize(a: &mut SymMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = a.dim();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a.get(i, k).abs()).sum();
            if scale == 0.0 {
                e[i] = a.get(i, l);
            } else {
                for k in 0..=l {
                    let v = a.get(i, k) / scale;
                    a.set(i, k, v);
                    h += v * v;
                }
                let f = a.get(i, l);
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a.set(i, l, f - g);
                let mut f_acc = 0.0;
                for j in 0..=l {
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a.get(j, k) * a.get(i, k);
                    }
                    for k in (j + 1)..=l {
                        g_acc += a.get(k, j) * a.get(i, k);
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a.get(i, j);
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a.get(i, j);
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        let v = a.get(j, k) - (f * e[k] + g * a.get(i, k));
                        a.set(j, k, v);
                    }
                }
            }
        } else {
            e[i] = a.get(i, l);
        }
        d[i] = h;
    }
    for i in 0..n {
        d[i] = a.get(i, i);
    }
    e[0] = 0.0;
    (d, e)
}

/// Implicit-shift QL on a symmetric tridiagonal (d, e), e in e[1..].
/// Eigenvalues land in d, unsorted.
fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<(), LinalgError> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            // locate the first negligible subdiagonal at or after l
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= DEFLATION_RELATIVE * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(LinalgError::NonConvergence(l));
            }
            // implicit shift from the 2x2 at l
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            let denom = g + if g >= 0.0 { r } else { -r };
            g = d[m] - d[l] + e[l] / denom;
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // recover without destroying already-deflated part
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Complex dense routines for resolvent checks
// ---------------------------------------------------------------------------

/// Dense complex matrix, row-major.
#[derive(Debug, Clone)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// A − zI for a real matrix A.
    pub fn shifted_from_real(a: &SymMatrix, z: Complex64) -> Self {
        let dim = a.dim();
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let re = a.get(i, j);
                m.set(i, j, Complex64::new(re, 0.0) - if i == j { z } else { Complex64::ZERO });
            }
        }
        m
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Result<CMatrix, LinalgError> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut inv = CMatrix::zeros(n);
        for i in 0..n {
            inv.set(i, i, Complex64::new(1.0, 0.0));
        }
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&r1, &r2| {
                    a[r1 * n + col]
                        .norm_sqr()
                        .partial_cmp(&a[r2 * n + col].norm_sqr())
                        .expect("finite entries")
                })
                .expect("nonempty range");
            if a[pivot * n + col].norm_sqr() == 0.0 {
                return Err(LinalgError::Singular(col));
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    let tmp = inv.get(col, j);
                    inv.set(col, j, inv.get(pivot, j));
                    inv.set(pivot, j, tmp);
                }
            }
            let diag = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= diag;
                let v = inv.get(col, j) / diag;
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = a[r * n + j] - factor * a[col * n + j];
                    let v = inv.get(r, j) - factor * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }
}

/// Resolvent (A − zI)^{-1} of a real matrix, by explicit dense inversion.
pub fn resolvent(a: &SymMatrix, z: Complex64) -> Result<CMatrix, LinalgError> {
    CMatrix::shifted_from_real(a, z).inverse()
}
