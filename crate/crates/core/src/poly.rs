//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored ascending by degree with no trailing zeros, so two
//! polynomials are equal iff their coefficient vectors are equal. All
//! arithmetic is exact; floating point only appears in the dedicated `f64`
//! evaluation path.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number used for evaluation points and interval endpoints.
pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

pub(crate) fn sgn(x: &BigInt) -> i32 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

pub(crate) fn big_pow(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·λ^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// The linear polynomial `λ + a`.
    pub fn lambda_plus(a: i64) -> Self {
        Self::from_ints(&[a, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `λ^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `d`, panicking if any division is inexact.
    pub(crate) fn exact_div_scalar(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero(), "division by zero scalar");
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero(), "inexact scalar division in exact kernel");
                    q
                })
                .collect(),
        )
    }

    /// Exact quotient `self / d`, or `InexactDivision` if `d·q ≠ self` for
    /// every integer-coefficient `q`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let dn = self.degree().unwrap();
        if dn < dd {
            return Err(Error::InexactDivision);
        }
        let lead = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for j in 0..dd {
                let t = &q * &d.coeffs[j];
                rem[k + j] -= t;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Polynomial::new(quot))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// IEEE-double Horner evaluation.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Exact sign of `p(a/b)` without building the rational value: evaluates
    /// the homogenized form `Σ c_i a^i b^(n-i)`, which has the same sign for
    /// `b > 0`.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let a = x.numer();
        let b = x.denom();
        debug_assert!(b.is_positive());
        let n = self.coeffs.len() - 1;
        let mut acc = self.coeffs[n].clone();
        let mut bp = BigInt::one();
        for i in (0..n).rev() {
            bp *= b;
            acc = acc * a + &self.coeffs[i] * &bp;
        }
        sgn(&acc)
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content. The sign of the leading coefficient is kept.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let c = self.content();
        self.exact_div_scalar(&c)
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Polynomial {
        let p = self.primitive_part();
        match p.leading_coeff() {
            Some(lc) if lc.is_negative() => -&p,
            _ => p,
        }
    }

    /// Primitive gcd with positive leading coefficient (zero if both zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Polynomial::one();
            }
            let r = pseudo_rem(&a, &b).0;
            a = b;
            b = r.primitive_part();
        }
        a.normalized()
    }

    pub fn pow(&self, exp: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Cauchy root bound `1 + max|c_i| / |c_n|`, rounded up to an integer.
    /// Every real root lies strictly inside `(-bound, bound)`.
    pub fn root_bound(&self) -> Result<BigInt> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?.abs();
        let max = self
            .coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        let (q, r) = max.div_rem(&lc);
        Ok(if r.is_zero() { q + 1 } else { q + 2 })
    }

    /// Largest exponent `k` with `λ^k` dividing the polynomial.
    pub fn trailing_zero_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

/// Fraction-free pseudo-remainder: returns `(r, k)` with
/// `r = lc(b)^k · a  mod  b` where `k = deg a − deg b + 1` multiplications
/// are always applied, so the scaling factor is exactly `lc(b)^(δ+1)`.
pub(crate) fn pseudo_rem(a: &Polynomial, b: &Polynomial) -> (Polynomial, usize) {
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    let lb = b.leading_coeff().unwrap().clone();
    let da = match a.degree() {
        Some(d) if d >= db => d,
        _ => return (a.clone(), 0),
    };
    let k = da - db + 1;
    let mut rem = a.coeffs.clone();
    let mut applied = 0usize;
    while rem.len() > db {
        let dr = rem.len() - 1;
        let top = rem.pop().unwrap();
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        applied += 1;
        if !top.is_zero() {
            for j in 0..db {
                let t = &top * &b.coeffs[j];
                rem[dr - db + j] -= t;
            }
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if rem.len() <= db {
            break;
        }
    }
    let mut r = Polynomial::new(rem);
    if applied < k {
        r = r.scale(&big_pow(&lb, k - applied));
    }
    (r, k)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Descending-degree monomial form, e.g. `λ^2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if i == 1 {
                        write!(f, "λ")?;
                    } else {
                        write!(f, "λ^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Serialize for Polynomial {
    /// JSON array of decimal strings, ascending by degree. Strings keep big
    /// integers bit-exact across serialization boundaries.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            coeffs.push(
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("invalid coefficient {s:?}: {e}")))?,
            );
        }
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn add_cancels_and_keeps_canonical_form() {
        // (λ² − 1) + 1 = λ²
        assert_eq!(&p(&[-1, 0, 1]) + &p(&[1]), p(&[0, 0, 1]));
        let q = p(&[3, -2, 5]);
        assert_eq!(&q + &Polynomial::zero(), q);
    }

    #[test]
    fn add_matches_expanded_deleted_charpoly() {
        // quotient of an 8-vertex charpoly by (λ+1) plus its adjugate entry
        let quotient = p(&[0, 0, -13, 19, 7, -9, -1, 1]);
        let h = p(&[0, -2, 9, -5, -7, 1, 1]);
        let expected = p(&[0, -2, -4, 14, 0, -8, 0, 1]);
        assert_eq!(&quotient + &h, expected);
        // and the expanded form equals λ(λ⁶ − 8λ⁴ + 14λ² − 4λ − 2)
        let refactored = &p(&[0, 1]) * &p(&[-2, -4, 14, 0, -8, 0, 1]);
        assert_eq!(refactored, expected);
    }

    #[test]
    fn mul_basics() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        let q = p(&[2, 0, -7, 1]);
        assert_eq!(&q * &Polynomial::one(), q);
        assert_eq!(&q * &Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn exact_div_quotient_and_failure() {
        let (num, den) = (p(&[-1, 0, 1]), p(&[1, 1]));
        assert_eq!(num.exact_div(&den).unwrap(), p(&[-1, 1]));
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::InexactDivision)
        ));
        // non-integer rational quotient is rejected too
        assert!(matches!(
            p(&[-1, 0, 1]).exact_div(&p(&[-2, 2])),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn exact_div_eight_vertex_example() {
        // λ⁸ − 10λ⁶ − 2λ⁵ + 26λ⁴ + 6λ³ − 13λ² divided by (λ+1)
        let phi = p(&[0, 0, -13, 6, 26, -2, -10, 0, 1]);
        let quotient = phi.exact_div(&Polynomial::lambda_plus(1)).unwrap();
        assert_eq!(quotient, p(&[0, 0, -13, 19, 7, -9, -1, 1]));
    }

    #[test]
    fn derivative_rules() {
        assert_eq!(p(&[0, -2, 0, 1]).derivative(), p(&[-2, 0, 3]));
        assert_eq!(p(&[5]).derivative(), Polynomial::zero());
        // d/dλ (2λ⁵ − 7λ³ − 4λ² + 3λ + 2) = 10λ⁴ − 21λ² − 8λ + 3
        assert_eq!(
            p(&[2, 3, -4, -7, 0, 2]).derivative(),
            p(&[3, -8, -21, 0, 10])
        );
    }

    #[test]
    fn eval_exact_and_float() {
        let q = p(&[-1, 0, 1]);
        assert!(q.eval_rational(&Rational::from(BigInt::one())).is_zero());
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(
            q.eval_rational(&half),
            Rational::new(BigInt::from(-3), BigInt::from(4))
        );
        assert_eq!(q.eval_f64(1.0), 0.0);
        let phi = p(&[0, 0, -13, 6, 26, -2, -10, 0, 1]);
        assert!(phi.eval_rational(&Rational::zero()).is_zero());
    }

    #[test]
    fn sign_at_matches_rational_eval() {
        let q = p(&[-2, 0, 1]);
        let x = Rational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(q.sign_at(&x), 1);
        let y = Rational::new(BigInt::from(7), BigInt::from(5));
        assert_eq!(q.sign_at(&y), -1);
    }

    #[test]
    fn content_and_primitive() {
        let q = p(&[-4, 0, 8]);
        assert_eq!(q.content(), BigInt::from(4));
        assert_eq!(q.primitive_part(), p(&[-1, 0, 2]));
        assert_eq!(p(&[4, 0, -8]).normalized(), p(&[-1, 0, 2]));
    }

    #[test]
    fn gcd_of_common_factor() {
        let a = &p(&[1, 1]) * &p(&[-2, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2, 2]).gcd(&Polynomial::zero()), p(&[1, 1]));
    }

    #[test]
    fn root_bound_is_valid() {
        let q = p(&[-2, 0, 1]); // roots ±√2
        let bound = q.root_bound().unwrap();
        assert!(bound >= BigInt::from(2));
    }

    #[test]
    fn display_descending_form() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "λ^2 - 1");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "λ^3 - 2λ");
        assert_eq!(p(&[0, 1]).to_string(), "λ");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p(&[3]).to_string(), "3");
    }

    #[test]
    fn serde_round_trip_keeps_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let q = Polynomial::new(vec![BigInt::from(-1), big.clone()]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"["-1","123456789012345678901234567890"]"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }
}
