//! Sturm chains and exact real-root counting.
//!
//! The chain is computed with the subresultant remainder sequence to keep
//! coefficient growth polynomial, with an explicit sign correction so each
//! element stays a positive multiple of the textbook Sturm element
//! `-rem(t_{i-1}, t_i)`. Sign variations at exact rational points then count
//! distinct real roots as usual.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{big_pow, pseudo_rem, sgn, Polynomial, Rational};

pub struct SturmChain {
    chain: Vec<Polynomial>,
}

fn exact_div_big(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact division in subresultant bookkeeping");
    q
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let t0 = p.primitive_part();
        if t0.degree() == Some(0) {
            return Ok(SturmChain { chain: vec![t0] });
        }
        let t1 = t0.derivative().primitive_part();
        let mut chain = vec![t0, t1];
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let db = match b.degree() {
                Some(0) | None => break,
                Some(d) => d,
            };
            let delta = a.degree().unwrap() - db;
            let lb_sign = sgn(b.leading_coeff().unwrap());
            let (r, _) = pseudo_rem(a, b);
            if r.is_zero() {
                break;
            }
            let divisor = &g * big_pow(&h, delta);
            let c = r.exact_div_scalar(&divisor);
            // next element must be a positive multiple of -(a mod b); the
            // stored quotient differs from it by sign(divisor · lb^(δ+1))
            let mut flip = sgn(&divisor);
            if delta % 2 == 0 && lb_sign < 0 {
                flip = -flip;
            }
            let next = if flip > 0 { -&c } else { c };
            g = chain.last().unwrap().leading_coeff().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                exact_div_big(&big_pow(&g, delta), &big_pow(&h, delta - 1))
            };
            chain.push(next);
        }
        Ok(SturmChain { chain })
    }

    /// True iff gcd(p, p') is constant, i.e. the chain terminates at degree 0.
    pub fn is_square_free(&self) -> bool {
        self.chain.len() == 1 || self.chain.last().unwrap().degree() == Some(0)
    }

    pub(crate) fn gcd_degree(&self) -> usize {
        self.chain.last().unwrap().degree().unwrap_or(0)
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for s in signs {
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|t| t.sign_at(x)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|t| match t.degree() {
            None => 0,
            Some(d) => {
                let s = sgn(t.leading_coeff().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(
            self.chain
                .iter()
                .map(|t| t.leading_coeff().map_or(0, sgn)),
        )
    }

    /// Number of distinct real roots in `(lo, hi]`, assuming neither endpoint
    /// is a root.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        assert!(lo < hi, "count_in requires lo < hi");
        let p = &self.chain[0];
        if p.sign_at(lo) == 0 {
            return Err(Error::EndpointIsRoot(lo.to_string()));
        }
        if p.sign_at(hi) == 0 {
            return Err(Error::EndpointIsRoot(hi.to_string()));
        }
        let (vl, vh) = (self.variations_at(lo), self.variations_at(hi));
        debug_assert!(vl >= vh);
        Ok(vl - vh)
    }

    /// Total number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Distinct real roots of a square-free `p` in `(lo, hi]` by Sturm
/// sign-variation difference.
pub fn count_roots_in(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    if !chain.is_square_free() {
        return Err(Error::NotSquareFree(chain.gcd_degree()));
    }
    chain.count_in(lo, hi)
}
