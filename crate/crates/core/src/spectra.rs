//! Real-root isolation and refinement for characteristic polynomials.
//!
//! Multiplicities come from the exact square-free decomposition; distinct
//! roots are isolated by Sturm bisection over exact rational intervals and
//! then refined. Rational roots (0 and −1 in particular) are detected exactly
//! so multiplicity bookkeeping downstream never depends on a tolerance.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::map_range;
use crate::graph::Graph;
use crate::poly::{Polynomial, Rational};
use crate::squarefree::square_free_decomposition;
use crate::sturm::{count_roots_in, SturmChain};

/// One distinct real root: refined float value, exact multiplicity, exact
/// isolating interval, and the exact rational value when the root is
/// rational.
#[derive(Clone, Debug)]
pub struct RootRecord {
    pub value: f64,
    pub multiplicity: u32,
    pub interval: (Rational, Rational),
    pub exact: Option<Rational>,
}

impl RootRecord {
    pub fn is_exact_integer(&self, v: i64) -> bool {
        self.exact
            .as_ref()
            .is_some_and(|e| *e == Rational::from(BigInt::from(v)))
    }
}

impl Serialize for RootRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RootRecord", 4)?;
        s.serialize_field("value", &self.value)?;
        s.serialize_field("multiplicity", &self.multiplicity)?;
        s.serialize_field("exact", &self.exact.as_ref().map(|e| e.to_string()))?;
        s.serialize_field(
            "interval",
            &[self.interval.0.to_string(), self.interval.1.to_string()],
        )?;
        s.end()
    }
}

/// Sorted distinct real roots with multiplicities.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    roots: Vec<RootRecord>,
    degree: usize,
}

impl Spectrum {
    pub fn roots(&self) -> &[RootRecord] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }

    /// True when every root of the source polynomial is real.
    pub fn is_complete(&self) -> bool {
        self.total_multiplicity() == self.degree
    }

    /// Multiplicity of an exact integer root, zero if absent.
    pub fn multiplicity_of_integer(&self, v: i64) -> u32 {
        self.roots
            .iter()
            .find(|r| r.is_exact_integer(v))
            .map_or(0, |r| r.multiplicity)
    }

    /// Ascending multiplicity-expanded values, tagged with the index of the
    /// distinct root each copy came from.
    pub fn expanded(&self) -> Vec<(usize, f64)> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for (i, r) in self.roots.iter().enumerate() {
            for _ in 0..r.multiplicity {
                out.push((i, r.value));
            }
        }
        out
    }

    pub fn values_expanded(&self) -> Vec<f64> {
        self.expanded().into_iter().map(|(_, v)| v).collect()
    }
}

fn rat_int(v: &BigInt) -> Rational {
    Rational::from(v.clone())
}

fn half(x: &Rational, y: &Rational) -> Rational {
    (x + y) / Rational::from(BigInt::from(2))
}

/// Strips exact integer roots from a square-free factor. Candidates are the
/// divisors of the constant term within the Cauchy bound, capped at 1024 in
/// magnitude; graph eigenvalues always satisfy |λ| < n, so the cap never
/// loses a root in graph use.
fn extract_integer_roots(f: &Polynomial) -> (Polynomial, Vec<BigInt>) {
    let mut f = f.clone();
    let mut roots = Vec::new();
    if f.degree().is_none_or(|d| d == 0) {
        return (f, roots);
    }
    if f.coeff(0).is_zero() {
        roots.push(BigInt::zero());
        f = f
            .exact_div(&Polynomial::monomial(BigInt::one(), 1))
            .expect("λ divides a polynomial with zero constant term");
    }
    let bound = match f.root_bound() {
        Ok(b) => b,
        Err(_) => return (f, roots),
    };
    let limit = bound.min(BigInt::from(1024)).to_i64().unwrap_or(1024);
    let mut d = 1i64;
    while d <= limit && f.degree().is_some_and(|deg| deg >= 1) {
        for cand in [d, -d] {
            let c0 = f.coeff(0);
            if c0.is_zero() {
                continue;
            }
            let cb = BigInt::from(cand);
            if !(&c0 % &cb).is_zero() {
                continue;
            }
            if f.eval_bigint(&cb).is_zero() {
                roots.push(cb.clone());
                f = f
                    .exact_div(&Polynomial::new(vec![-cb, BigInt::one()]))
                    .expect("detected root must divide");
            }
        }
        d += 1;
    }
    (f, roots)
}

/// Bisection point of `(a, b)` that is not a root of `q`, stepping toward `a`
/// while the midpoint happens to hit a root.
fn split_point(q: &Polynomial, a: &Rational, b: &Rational) -> Rational {
    let mut m = half(a, b);
    while q.sign_at(&m) == 0 {
        m = half(a, &m);
    }
    m
}

/// Bisect `(a, b]` (which isolates a single simple root of `f`) until its
/// width is below `limit`; endpoints stay exact rationals off the root.
fn shrink_interval(
    f: &Polynomial,
    mut a: Rational,
    mut b: Rational,
    limit: &Rational,
) -> (Rational, Rational) {
    let sa = f.sign_at(&a);
    debug_assert!(sa != 0 && f.sign_at(&b) != 0 && sa != f.sign_at(&b));
    while &b - &a >= *limit {
        let m = split_point(f, &a, &b);
        if f.sign_at(&m) == sa {
            a = m;
        } else {
            b = m;
        }
    }
    (a, b)
}

/// Bisection to width `< tol/4` followed by a short float Newton polish.
fn refine_to_float(f: &Polynomial, a: Rational, b: Rational, tol: f64) -> (f64, Rational, Rational) {
    let limit = Rational::from_float(tol / 4.0)
        .filter(|l| l.is_positive())
        .unwrap_or_else(|| Rational::new(BigInt::one(), BigInt::from(1u64 << 60)));
    let (a, b) = shrink_interval(f, a, b, &limit);
    let mut x = half(&a, &b).to_f64().unwrap_or(f64::NAN);
    let df = f.derivative();
    let mut fx = f.eval_f64(x).abs();
    for _ in 0..3 {
        let d = df.eval_f64(x);
        if !d.is_finite() || d == 0.0 {
            break;
        }
        let nx = x - f.eval_f64(x) / d;
        let nfx = f.eval_f64(nx).abs();
        if !nx.is_finite() || nfx > fx {
            break;
        }
        x = nx;
        fx = nfx;
    }
    (x, a, b)
}

/// Isolates the real roots of `p`, failing with `NonRealRoots` when some
/// roots are complex.
pub fn isolate_real_roots(p: &Polynomial, tol: f64) -> Result<Spectrum> {
    let spectrum = isolate_real_roots_partial(p, tol)?;
    if !spectrum.is_complete() {
        return Err(Error::NonRealRoots {
            real: spectrum.total_multiplicity(),
            degree: spectrum.degree(),
        });
    }
    Ok(spectrum)
}

/// Like [`isolate_real_roots`] but returns the real part of the spectrum even
/// when complex roots exist; callers decide whether that is an error.
pub fn isolate_real_roots_partial(p: &Polynomial, tol: f64) -> Result<Spectrum> {
    assert!(tol > 0.0, "tolerance must be positive");
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(Spectrum {
            roots: Vec::new(),
            degree,
        });
    }
    let factors = square_free_decomposition(p)?;

    // exact integer roots per factor, with the factor reduced accordingly
    let mut exact_roots: Vec<(BigInt, u32)> = Vec::new();
    let mut reduced: Vec<(Polynomial, u32)> = Vec::new();
    for (f, m) in factors {
        let (fr, roots) = extract_integer_roots(&f);
        exact_roots.extend(roots.into_iter().map(|r| (r, m)));
        if fr.degree().is_some_and(|d| d >= 1) {
            reduced.push((fr, m));
        }
    }

    // single product of the reduced factors: one isolation pass gives
    // pairwise disjoint intervals for every remaining distinct root
    let q1 = reduced
        .iter()
        .fold(Polynomial::one(), |acc, (f, _)| &acc * f);

    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    if q1.degree().is_some_and(|d| d >= 1) {
        let chain = SturmChain::new(&q1)?;
        debug_assert!(chain.is_square_free());
        let bound = q1.root_bound()?;
        let lo = rat_int(&(-&bound));
        let hi = rat_int(&bound);
        let total = chain.count_in(&lo, &hi)?;
        let mut stack = vec![(lo, hi, total)];
        while let Some((a, b, count)) = stack.pop() {
            match count {
                0 => {}
                1 => intervals.push((a, b)),
                _ => {
                    let m = split_point(&q1, &a, &b);
                    let left = chain.count_in(&a, &m)?;
                    stack.push((m.clone(), b, count - left));
                    stack.push((a, m, left));
                }
            }
        }
        // keep exact roots out of the isolating intervals so intervals stay
        // pairwise disjoint across the whole spectrum
        for (a, b) in intervals.iter_mut() {
            for (d, _) in &exact_roots {
                let dr = rat_int(d);
                while *a < dr && dr <= *b {
                    let m = split_point(&q1, a, b);
                    if q1.sign_at(&m) == q1.sign_at(a) {
                        *a = m;
                    } else {
                        *b = m;
                    }
                }
            }
        }
    }

    // multiplicity of each interval root: the unique reduced factor with a
    // sign change over the interval
    let owners: Vec<(usize, u32)> = intervals
        .iter()
        .map(|(a, b)| {
            let mut found = None;
            for (idx, (f, m)) in reduced.iter().enumerate() {
                if f.sign_at(a) * f.sign_at(b) < 0 {
                    debug_assert!(found.is_none(), "factors must be coprime");
                    found = Some((idx, *m));
                    if !cfg!(debug_assertions) {
                        break;
                    }
                }
            }
            found.expect("every isolated root belongs to a factor")
        })
        .collect();

    // refine in parallel: each root is independent and the collected order
    // is fixed, so output is deterministic
    let refined = map_range(intervals.len(), true, |i| {
        let (a, b) = intervals[i].clone();
        let (f, _) = &reduced[owners[i].0];
        refine_to_float(f, a, b, tol)
    });

    let mut roots: Vec<RootRecord> = refined
        .into_iter()
        .zip(&owners)
        .map(|((value, a, b), &(_, m))| RootRecord {
            value,
            multiplicity: m,
            interval: (a, b),
            exact: None,
        })
        .collect();
    for (d, m) in exact_roots {
        let dr = rat_int(&d);
        roots.push(RootRecord {
            value: d.to_f64().unwrap_or(f64::NAN),
            multiplicity: m,
            interval: (dr.clone(), dr.clone()),
            exact: Some(dr),
        });
    }
    roots.sort_by(|x, y| {
        (&x.interval.0, &x.interval.1)
            .cmp(&(&y.interval.0, &y.interval.1))
    });
    debug_assert!(roots.windows(2).all(|w| w[0].value < w[1].value));
    Ok(Spectrum { roots, degree })
}

/// Exact eigenvalues of a graph: isolation applied to its characteristic
/// polynomial. Always complete, because the adjacency matrix is symmetric.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum> {
    isolate_real_roots(&crate::charpoly::charpoly(g), tol)
}

/// Refines a single simple root of square-free `p` inside `interval`.
pub fn refine_root(p: &Polynomial, interval: (Rational, Rational), tol: f64) -> Result<f64> {
    let (lo, hi) = interval;
    let count = count_roots_in(p, &lo, &hi)?;
    if count != 1 {
        return Err(Error::NotIsolating(count));
    }
    Ok(refine_to_float(p, lo, hi, tol).0)
}
