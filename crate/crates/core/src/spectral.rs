//! Laplacian eigenvalues and the zero-eigenvalue multiplicity.
//!
//! The symmetric matrix is reduced to tridiagonal form by Householder
//! reflections and the tridiagonal eigenvalues are found with implicitly
//! shifted QL iterations. Only eigenvalues are computed.

use alloc::vec::Vec;

use crate::Laplacian;

pub const DEFAULT_SIZE_CAP: usize = 3000;
const SYMMETRY_TOLERANCE: f64 = 1e-12;
const MAX_QL_ITERATIONS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("matrix dimension {0} exceeds the spectral size cap")]
    SizeCapExceeded(usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NonSymmetricInput(usize, usize),
    #[error("matrix is empty")]
    Empty,
    #[error("QL iteration did not converge")]
    NoConvergence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralConfig {
    pub size_cap: usize,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self {
            size_cap: DEFAULT_SIZE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvalues below `tolerance_used`.
    pub null_multiplicity: usize,
    /// `n * machine_epsilon * max(1, lambda_max)`.
    pub tolerance_used: f64,
}

pub fn laplacian_spectrum(l: &Laplacian) -> Result<SpectralResult, SpectralError> {
    laplacian_spectrum_with(l, &SpectralConfig::default())
}

pub fn laplacian_spectrum_with(l: &Laplacian, config: &SpectralConfig) -> Result<SpectralResult, SpectralError> {
    let n = l.dim();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    if n > config.size_cap {
        return Err(SpectralError::SizeCapExceeded(n));
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (l.get(i, j), l.get(j, i));
            if (a - b).abs() > SYMMETRY_TOLERANCE * a.abs().max(b.abs()).max(1.0) {
                return Err(SpectralError::NonSymmetricInput(i, j));
            }
        }
    }
    let mut eigenvalues = symmetric_eigenvalues(n, l.as_slice().to_vec())?;
    eigenvalues.sort_by(f64::total_cmp);
    let lambda_max = eigenvalues.last().copied().unwrap_or(0.0);
    let tolerance_used = n as f64 * f64::EPSILON * lambda_max.max(1.0);
    let null_multiplicity = eigenvalues.iter().filter(|&&x| x < tolerance_used).count();
    Ok(SpectralResult {
        eigenvalues,
        null_multiplicity,
        tolerance_used,
    })
}

/// Eigenvalues (unsorted) of a symmetric row-major `n x n` matrix.
pub fn symmetric_eigenvalues(n: usize, mut a: Vec<f64>) -> Result<Vec<f64>, SpectralError> {
    assert_eq!(a.len(), n * n, "matrix size");
    let (mut diag, mut off) = tridiagonalize(n, &mut a);
    tridiagonal_ql(&mut diag, &mut off)?;
    Ok(diag)
}

/// Householder reduction, reading and overwriting the lower triangle.
///
/// Returns the diagonal and the subdiagonal, the latter stored as
/// `off[i] = T[i][i-1]` with `off[0] = 0`.
fn tridiagonalize(n: usize, a: &mut [f64]) -> (Vec<f64>, Vec<f64>) {
    let at = |i: usize, j: usize| i * n + j;
    let mut off = alloc::vec![0.0; n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[at(i, k)].abs()).sum();
            if scale == 0.0 {
                off[i] = a[at(i, l)];
            } else {
                for k in 0..=l {
                    a[at(i, k)] /= scale;
                    h += a[at(i, k)] * a[at(i, k)];
                }
                let f = a[at(i, l)];
                let g = if f >= 0.0 { -libm::sqrt(h) } else { libm::sqrt(h) };
                off[i] = scale * g;
                h -= f * g;
                a[at(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[at(j, k)] * a[at(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[at(k, j)] * a[at(i, k)];
                    }
                    off[j] = g / h;
                    f += off[j] * a[at(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[at(i, j)];
                    let g = off[j] - hh * f;
                    off[j] = g;
                    for k in 0..=j {
                        a[at(j, k)] -= f * off[k] + g * a[at(i, k)];
                    }
                }
            }
        } else {
            off[i] = a[at(i, l)];
        }
    }
    off[0] = 0.0;
    let diag = (0..n).map(|i| a[at(i, i)]).collect();
    (diag, off)
}

/// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal
/// matrix. On return `diag` holds the eigenvalues.
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64]) -> Result<(), SpectralError> {
    let n = diag.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        off[i - 1] = off[i];
    }
    off[n - 1] = 0.0;

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(SpectralError::NoConvergence);
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = libm::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * off[i];
                let b = c * off[i];
                r = libm::hypot(f, g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Graph;
    use alloc::vec;

    fn spectrum(g: &Graph) -> SpectralResult {
        laplacian_spectrum(&g.laplacian()).unwrap()
    }

    #[test]
    fn single_edge() {
        let s = spectrum(&Graph::new(2, &[(0, 1)]).unwrap());
        assert!(s.eigenvalues[0].abs() < 1e-14);
        assert!((s.eigenvalues[1] - 2.0).abs() < 1e-14);
        assert_eq!(s.null_multiplicity, 1);
    }

    #[test]
    fn two_disjoint_edges() {
        let s = spectrum(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
        let want = [0.0, 0.0, 2.0, 2.0];
        for (got, want) in s.eigenvalues.iter().zip(want) {
            assert!((got - want).abs() < 1e-13);
        }
        assert_eq!(s.null_multiplicity, 2);
    }

    #[test]
    fn empty_graph() {
        let s = spectrum(&Graph::new(3, &[]).unwrap());
        assert_eq!(s.eigenvalues, [0.0, 0.0, 0.0]);
        assert_eq!(s.null_multiplicity, 3);
    }

    #[test]
    fn complete_graph() {
        // K_n has eigenvalues 0 and n (multiplicity n - 1).
        let n = 7;
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let s = spectrum(&Graph::new(n, &edges).unwrap());
        assert_eq!(s.null_multiplicity, 1);
        for &x in &s.eigenvalues[1..] {
            assert!((x - n as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn path_closed_form() {
        // P_n: 2 - 2 cos(pi k / n), k = 0..n-1.
        let n = 9;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let s = spectrum(&Graph::new(n, &edges).unwrap());
        for (k, &x) in s.eigenvalues.iter().enumerate() {
            let want = 2.0 - 2.0 * libm::cos(core::f64::consts::PI * k as f64 / n as f64);
            assert!((x - want).abs() < 1e-12, "{k}: {x} vs {want}");
        }
    }

    #[test]
    fn errors() {
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        let cap = SpectralConfig { size_cap: 3 };
        assert_eq!(
            laplacian_spectrum_with(&g.laplacian(), &cap),
            Err(SpectralError::SizeCapExceeded(4))
        );
        let skew = Laplacian::from_dense(2, vec![1.0, -1.0, -0.5, 1.0]).unwrap();
        assert_eq!(laplacian_spectrum(&skew), Err(SpectralError::NonSymmetricInput(0, 1)));
        let empty = Laplacian::from_dense(0, vec![]).unwrap();
        assert_eq!(laplacian_spectrum(&empty), Err(SpectralError::Empty));
    }
}
