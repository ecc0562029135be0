//! Exact characteristic polynomials, adjugate cofactor entries, the
//! twin-deletion identity, and the main polynomial.
//!
//! Characteristic polynomials are computed with the Berkowitz vector
//! recurrence: division-free, so the integer coefficients come out exact.
//! Single adjugate entries are recovered by evaluating a bordered integer
//! matrix at small integer nodes (fraction-free Bareiss determinants) and
//! interpolating exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::map_range;
use crate::graph::{Graph, TwinPair};
use crate::poly::Polynomial;

/// Exact characteristic polynomial `det(λI − A)` of the adjacency matrix.
pub fn charpoly(g: &Graph) -> Polynomial {
    let n = g.n();
    let a: Vec<Vec<BigInt>> = (1..=n)
        .map(|u| {
            (1..=n)
                .map(|v| BigInt::from(g.has_edge(u, v) as i64))
                .collect()
        })
        .collect();
    berkowitz(&a)
}

/// Berkowitz recurrence for `det(λI − M)`.
pub(crate) fn berkowitz(m: &[Vec<BigInt>]) -> Polynomial {
    let n = m.len();
    // descending coefficients of the current leading principal submatrix
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for i in 0..n {
        let mut col = Vec::with_capacity(i + 2);
        col.push(BigInt::one());
        col.push(-m[i][i].clone());
        if i > 0 {
            // s_k = R · M_i^k · S with R the new row, S the new column
            let mut s: Vec<BigInt> = (0..i).map(|j| m[j][i].clone()).collect();
            for k in 0..i {
                let dot: BigInt = (0..i).map(|j| &m[i][j] * &s[j]).sum();
                col.push(-dot);
                if k + 1 < i {
                    let mut next = vec![BigInt::zero(); i];
                    for (row, slot) in next.iter_mut().enumerate() {
                        let mut acc = BigInt::zero();
                        for j in 0..i {
                            acc += &m[row][j] * &s[j];
                        }
                        *slot = acc;
                    }
                    s = next;
                }
            }
        }
        // multiply by the lower-triangular Toeplitz matrix with first
        // column `col`: a convolution truncated to length i+2
        let mut nc = vec![BigInt::zero(); i + 2];
        for (t, ct) in col.iter().enumerate() {
            if ct.is_zero() {
                continue;
            }
            for (j, cj) in c.iter().enumerate() {
                if t + j < i + 2 {
                    nc[t + j] += ct * cj;
                }
            }
        }
        c = nc;
    }
    c.reverse();
    Polynomial::new(c)
}

/// Exact determinant of an integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot_row = std::mem::take(&mut m[k]);
        for row in m.iter_mut().skip(k + 1) {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let t = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        m[k] = pivot_row;
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Bordered matrix whose determinant (up to sign) is the adjugate entry:
/// corner `−a_{ℓ,k}`, border rows `−b_ℓ`/`−b_k`, block `xI − B`.
fn bordered_at(g: &Graph, ell: usize, k: usize, x: &BigInt) -> Vec<Vec<BigInt>> {
    let n = g.n();
    let rest: Vec<usize> = (1..=n).filter(|&v| v != ell && v != k).collect();
    let m = rest.len();
    let mut out = vec![vec![BigInt::zero(); m + 1]; m + 1];
    out[0][0] = BigInt::from(-(g.has_edge(ell, k) as i64));
    for (j, &v) in rest.iter().enumerate() {
        out[0][j + 1] = BigInt::from(-(g.has_edge(ell, v) as i64));
        out[j + 1][0] = BigInt::from(-(g.has_edge(k, v) as i64));
    }
    for (i, &u) in rest.iter().enumerate() {
        for (j, &v) in rest.iter().enumerate() {
            out[i + 1][j + 1] = if i == j {
                x.clone()
            } else {
                BigInt::from(-(g.has_edge(u, v) as i64))
            };
        }
    }
    out
}

/// Exact Lagrange interpolation through `(nodes[t], values[t])`; `None` if
/// the result is not an integer polynomial.
fn interpolate(nodes: &[BigInt], values: &[BigInt]) -> Option<Polynomial> {
    let m = nodes.len();
    let mut full = Polynomial::one();
    for x in nodes {
        full = &full * &Polynomial::new(vec![-x.clone(), BigInt::one()]);
    }
    let mut acc = vec![BigRational::zero(); m];
    for t in 0..m {
        if values[t].is_zero() {
            continue;
        }
        let basis = full
            .exact_div(&Polynomial::new(vec![-nodes[t].clone(), BigInt::one()]))
            .expect("node factor divides the node product");
        let mut denom = BigInt::one();
        for s in 0..m {
            if s != t {
                denom *= &nodes[t] - &nodes[s];
            }
        }
        let weight = BigRational::new(values[t].clone(), denom);
        for (i, c) in basis.coeffs().iter().enumerate() {
            acc[i] += &weight * BigRational::from(c.clone());
        }
    }
    let mut coeffs = Vec::with_capacity(m);
    for v in acc {
        if !v.denom().is_one() {
            return None;
        }
        coeffs.push(v.numer().clone());
    }
    Some(Polynomial::new(coeffs))
}

/// Interpolation nodes `0, 1, −1, 2, −2, …`: consecutive small integers
/// centred at zero to keep determinant entries small.
fn interpolation_nodes(count: usize) -> Vec<BigInt> {
    let mut nodes = Vec::with_capacity(count);
    let mut k = 0i64;
    while nodes.len() < count {
        if k == 0 {
            nodes.push(BigInt::zero());
        } else {
            nodes.push(BigInt::from(k));
            if nodes.len() < count {
                nodes.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    nodes
}

/// Entry `(ℓ, k)` of `adj(λI − A)` as an exact integer polynomial. The pair
/// need not be twins. Evaluation nodes are processed in parallel when the
/// `parallel` feature is enabled.
pub fn cofactor(g: &Graph, ell: usize, k: usize) -> Result<Polynomial> {
    cofactor_impl(g, ell, k, true)
}

/// Single-threaded variant of [`cofactor`]; the result is bitwise identical.
pub fn cofactor_seq(g: &Graph, ell: usize, k: usize) -> Result<Polynomial> {
    cofactor_impl(g, ell, k, false)
}

fn cofactor_impl(g: &Graph, ell: usize, k: usize, parallel: bool) -> Result<Polynomial> {
    let n = g.n();
    for v in [ell, k] {
        if v < 1 || v > n {
            return Err(Error::LabelOutOfRange { label: v, n });
        }
    }
    if ell == k {
        return Err(Error::EqualLabels(ell));
    }
    let nodes = interpolation_nodes(n);
    let values = map_range(n, parallel, |t| bareiss_det(bordered_at(g, ell, k, &nodes[t])));
    let det = interpolate(&nodes, &values)
        .expect("interpolated adjugate entry must have integer coefficients");
    // moving the surviving twin row and column of the minor to the border
    // costs (ℓ−1) + (k−2) transpositions, so the adjugate entry
    // (−1)^(ℓ+k)·minor equals −det(bordered) for every pair
    Ok(-det)
}

/// Characteristic polynomial of `G` with one twin of `pair` removed, computed
/// through the deletion identity `Φ(A(G))/(λ + a) + h_{ℓ,k}` rather than from
/// the deleted graph itself.
pub fn twin_deleted_charpoly(g: &Graph, pair: &TwinPair) -> Result<Polynomial> {
    if !pair.is_valid_for(g) {
        return Err(Error::NotTwins(pair.ell, pair.k));
    }
    let quotient = charpoly(g).exact_div(&Polynomial::lambda_plus(pair.a()))?;
    Ok(&quotient + &cofactor(g, pair.ell, pair.k)?)
}

/// Outcome of checking `Φ(A(G)) = (λ + a)[Φ(A(G_{−ℓ})) − h_{ℓ,k}]` with both
/// sides computed independently.
#[derive(Debug, Clone, Serialize)]
pub struct TwinIdentityReport {
    pub phi_g: Polynomial,
    pub phi_g_minus: Polynomial,
    pub h: Polynomial,
    /// `Φ(A(G)) / (λ + a)`.
    pub quotient: Polynomial,
    pub identity_holds: bool,
    /// `Φ(A(G)) − (λ + a)[Φ(A(G_{−ℓ})) − h]` when the identity fails.
    pub discrepancy: Option<Polynomial>,
}

pub fn verify_twin_identity(g: &Graph, pair: &TwinPair) -> Result<TwinIdentityReport> {
    if !pair.is_valid_for(g) {
        return Err(Error::NotTwins(pair.ell, pair.k));
    }
    let phi_g = charpoly(g);
    let phi_g_minus = charpoly(&g.delete_vertex(pair.ell)?);
    let h = cofactor(g, pair.ell, pair.k)?;
    let rhs = &Polynomial::lambda_plus(pair.a()) * &(&phi_g_minus - &h);
    let identity_holds = rhs == phi_g;
    let discrepancy = (!identity_holds).then(|| &phi_g - &rhs);
    let quotient = phi_g.exact_div(&Polynomial::lambda_plus(pair.a()))?;
    Ok(TwinIdentityReport {
        phi_g,
        phi_g_minus,
        h,
        quotient,
        identity_holds,
        discrepancy,
    })
}

/// Minimal monic polynomial `m` with `m(A)·j = 0` for the all-ones vector
/// `j`; its roots are exactly the main eigenvalues.
pub fn main_polynomial(g: &Graph) -> Polynomial {
    let n = g.n();
    if n == 0 {
        return Polynomial::one();
    }
    let mul = |v: &[BigInt]| -> Vec<BigInt> {
        (1..=n)
            .map(|u| {
                let mut acc = BigInt::zero();
                for w in 1..=n {
                    if g.has_edge(u, w) {
                        acc += &v[w - 1];
                    }
                }
                acc
            })
            .collect()
    };
    let mut krylov: Vec<Vec<BigInt>> = vec![vec![BigInt::one(); n]];
    loop {
        let next = mul(krylov.last().unwrap());
        if let Some(coeffs) = solve_in_span(&krylov, &next) {
            let d = krylov.len();
            let mut out = Vec::with_capacity(d + 1);
            for c in coeffs {
                assert!(
                    c.denom().is_one(),
                    "main polynomial must have integer coefficients"
                );
                out.push(-c.numer().clone());
            }
            out.push(BigInt::one());
            return Polynomial::new(out);
        }
        debug_assert!(krylov.len() < n, "Krylov sequence must close within n steps");
        krylov.push(next);
    }
}

/// Solves `Σ c_t basis[t] = target` exactly over the rationals, or `None`
/// when `target` is outside the span.
fn solve_in_span(basis: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let cols = basis.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = (0..cols)
                .map(|c| BigRational::from(basis[c][r].clone()))
                .collect();
            row.push(BigRational::from(target[r].clone()));
            row
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(cols);
    let mut rank_row = 0;
    for col in 0..cols {
        let pivot = (rank_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(rank_row, pivot);
        let p = m[rank_row][col].clone();
        for j in col..=cols {
            m[rank_row][j] = &m[rank_row][j] / &p;
        }
        for r in 0..rows {
            if r != rank_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=cols {
                    let t = &f * &m[rank_row][j];
                    m[r][j] = &m[r][j] - &t;
                }
            }
        }
        pivot_rows.push(rank_row);
        rank_row += 1;
    }
    // consistency: all rows below the rank must have zero residual
    for r in rank_row..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    Some((0..cols).map(|c| m[pivot_rows[c]][cols].clone()).collect())
}

/// Similarity reduction of the adjacency matrix by a π/4 rotation of the twin
/// pair's axes: the pair decouples into diagonal entries `a`, `−a` and the
/// shared neighbourhood row is scaled by √2. Spectrum is preserved; used as a
/// numerical cross-check.
pub fn givens_reduced(g: &Graph, pair: &TwinPair) -> Result<Vec<Vec<f64>>> {
    let h = g.permute_pair_to_front(pair)?;
    let n = h.n();
    let a = pair.a() as f64;
    let root2 = std::f64::consts::SQRT_2;
    let mut m = vec![vec![0.0; n]; n];
    m[0][0] = a;
    m[1][1] = -a;
    for j in 2..n {
        if h.has_edge(1, j + 1) {
            m[0][j] = root2;
            m[j][0] = root2;
        }
        for i in 2..n {
            if h.has_edge(i + 1, j + 1) {
                m[i][j] = 1.0;
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_nsg, CreationSequence, TwinKind};

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    /// Cofactor-expansion determinant of a polynomial matrix; the exact
    /// oracle for small charpolys.
    fn det_poly(m: &[Vec<Polynomial>]) -> Polynomial {
        let n = m.len();
        if n == 0 {
            return Polynomial::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Polynomial::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Polynomial>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &det_poly(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn brute_charpoly(g: &Graph) -> Polynomial {
        let n = g.n();
        let m: Vec<Vec<Polynomial>> = (1..=n)
            .map(|u| {
                (1..=n)
                    .map(|v| {
                        if u == v {
                            p(&[0, 1])
                        } else {
                            p(&[-(g.has_edge(u, v) as i64)])
                        }
                    })
                    .collect()
            })
            .collect();
        det_poly(&m)
    }

    #[test]
    fn charpoly_small_graphs() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        assert_eq!(charpoly(&k2), p(&[-1, 0, 1]));
        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(charpoly(&p3), p(&[0, -2, 0, 1]));
        assert_eq!(charpoly(&Graph::empty(0)), Polynomial::one());
    }

    #[test]
    fn charpoly_matches_brute_force() {
        let graphs = [
            Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap(),
            Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3)]).unwrap(),
            Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(charpoly(g), brute_charpoly(g));
        }
    }

    #[test]
    fn bareiss_matches_small_determinants() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(7), BigInt::from(4)],
        ];
        assert_eq!(bareiss_det(m), BigInt::from(1));
        let singular = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(bareiss_det(singular), BigInt::zero());
        // needs a row swap
        let swap = vec![
            vec![BigInt::zero(), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::zero()],
        ];
        assert_eq!(bareiss_det(swap), BigInt::from(-1));
    }

    #[test]
    fn cofactor_k2_is_one() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        assert_eq!(cofactor(&k2, 1, 2).unwrap(), Polynomial::one());
        assert_eq!(cofactor_seq(&k2, 1, 2).unwrap(), Polynomial::one());
    }

    #[test]
    fn cofactor_is_symmetric_and_matches_adjugate() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        for ell in 1..=4 {
            for k in 1..=4 {
                if ell == k {
                    continue;
                }
                let h = cofactor(&g, ell, k).unwrap();
                assert_eq!(h, cofactor(&g, k, ell).unwrap());
                // oracle: delete row ℓ, column k of λI − A and sign the minor
                let n = 4;
                let m: Vec<Vec<Polynomial>> = (1..=n)
                    .filter(|&u| u != ell)
                    .map(|u| {
                        (1..=n)
                            .filter(|&v| v != k)
                            .map(|v| {
                                if u == v {
                                    p(&[0, 1])
                                } else {
                                    p(&[-(g.has_edge(u, v) as i64)])
                                }
                            })
                            .collect()
                    })
                    .collect();
                let minor = det_poly(&m);
                let expect = if (ell + k) % 2 == 0 { minor } else { -minor };
                assert_eq!(h, expect, "adjugate entry ({ell},{k})");
            }
        }
    }

    #[test]
    fn cofactor_rejects_bad_labels() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        assert!(matches!(cofactor(&k2, 1, 1), Err(Error::EqualLabels(1))));
        assert!(matches!(
            cofactor(&k2, 1, 3),
            Err(Error::LabelOutOfRange { .. })
        ));
    }

    #[test]
    fn twin_deleted_charpoly_k2() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let pair = TwinPair::classify(&k2, 1, 2).unwrap();
        // (λ²−1)/(λ+1) + 1 = λ = charpoly(K₁)
        assert_eq!(twin_deleted_charpoly(&k2, &pair).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn identity_holds_on_small_graphs() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let pair = TwinPair::classify(&k2, 1, 2).unwrap();
        assert!(verify_twin_identity(&k2, &pair).unwrap().identity_holds);

        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let pair = TwinPair::classify(&p3, 1, 3).unwrap();
        let report = verify_twin_identity(&p3, &pair).unwrap();
        assert!(report.identity_holds);
        assert!(report.discrepancy.is_none());
        assert_eq!(
            &report.quotient + &report.h,
            charpoly(&p3.delete_vertex(1).unwrap())
        );
    }

    #[test]
    fn main_polynomial_small_cases() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        assert_eq!(main_polynomial(&k2), p(&[-1, 1]));
        // P₃ has main eigenvalues ±√2 (0 is non-main): m = λ² − 2
        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(main_polynomial(&p3), p(&[-2, 0, 1]));
    }

    #[test]
    fn main_polynomial_nsg_degree() {
        let g = build_nsg(&CreationSequence::parse("2,2,2,2,2,2,2,2,1,1").unwrap());
        assert_eq!(main_polynomial(&g).degree(), Some(10));
    }

    #[test]
    fn givens_structure_k2_and_p3() {
        let k2 = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let pair = TwinPair::classify(&k2, 1, 2).unwrap();
        assert_eq!(pair.kind, TwinKind::CoDuplicate);
        let m = givens_reduced(&k2, &pair).unwrap();
        assert_eq!(m, vec![vec![1.0, 0.0], vec![0.0, -1.0]]);

        let p3 = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let pair = TwinPair::classify(&p3, 1, 3).unwrap();
        let m = givens_reduced(&p3, &pair).unwrap();
        let s2 = std::f64::consts::SQRT_2;
        assert_eq!(m[0], vec![0.0, 0.0, s2]);
        assert_eq!(m[1], vec![0.0, 0.0, 0.0]);
        assert_eq!(m[2], vec![s2, 0.0, 0.0]);
    }

    #[test]
    fn nsg_charpoly_matches_factored_form() {
        let g = build_nsg(&CreationSequence::parse("2,2,2,2,2,2,2,2,1,1").unwrap());
        let main = p(&[-256, 704, 336, -1368, -441, 860, 371, -128, -75, -4, 1]);
        let expected = &(&Polynomial::monomial(1.into(), 4) * &p(&[1, 1]).pow(4)) * &main;
        assert_eq!(charpoly(&g), expected);
    }

    #[test]
    fn parallel_and_sequential_cofactors_agree() {
        let g = build_nsg(&CreationSequence::parse("2,2,2,2,1,1").unwrap());
        assert_eq!(
            cofactor(&g, 5, 6).unwrap(),
            cofactor_seq(&g, 5, 6).unwrap()
        );
    }
}
