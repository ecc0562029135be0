//! Floating-point cross-checks: a cyclic Jacobi eigensolver for dense
//! symmetric matrices and a Faddeev–LeVerrier characteristic polynomial.
//! Both are independent of the exact integer kernels they validate.

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending.
pub fn jacobi_eigenvalues(mat: &[Vec<f64>]) -> Vec<f64> {
    let n = mat.len();
    if n == 0 {
        return Vec::new();
    }
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    let scale: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(1.0);
    for _sweep in 0..60 {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum();
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let (app, aqq) = (a[p][p], a[q][q]);
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let (arp, arq) = (a[r][p], a[r][q]);
                    a[r][p] = c * arp - s * arq;
                    a[p][r] = a[r][p];
                    a[r][q] = s * arp + c * arq;
                    a[q][r] = a[r][q];
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}

/// Monic characteristic polynomial `det(λI − M)` of a float matrix by the
/// Faddeev–LeVerrier recurrence; coefficients returned descending.
pub fn float_charpoly(mat: &[Vec<f64>]) -> Vec<f64> {
    let n = mat.len();
    let mut coeffs = vec![1.0];
    if n == 0 {
        return coeffs;
    }
    let matmul = |x: &[Vec<f64>], y: &[Vec<f64>]| -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i][k];
                if xik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += xik * y[k][j];
                }
            }
        }
        out
    };
    let trace = |x: &[Vec<f64>]| -> f64 { (0..n).map(|i| x[i][i]).sum() };
    let mut m = mat.to_vec();
    for k in 1..=n {
        let c = -trace(&m) / k as f64;
        coeffs.push(c);
        if k == n {
            break;
        }
        for i in 0..n {
            m[i][i] += c;
        }
        m = matmul(mat, &m);
    }
    coeffs
}
