//! Yun square-free decomposition over the integers.

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Square-free decomposition: returns pairs `(factor, multiplicity)` with
/// every factor primitive, square-free, of positive leading coefficient and
/// pairwise coprime, such that the product of `factor^multiplicity` equals
/// the input up to a rational unit.
pub fn square_free_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.normalized();
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.degree() == Some(0) {
        return Ok(vec![(f, 1)]);
    }
    let mut c = f.exact_div(&g)?;
    let y = fp.exact_div(&g)?;
    let mut d = &y - &c.derivative();
    let mut out = Vec::new();
    let mut mult = 1u32;
    while c.degree() != Some(0) {
        let a = c.gcd(&d);
        if a.degree() != Some(0) {
            out.push((a.clone(), mult));
        }
        c = c.exact_div(&a)?;
        let y = d.exact_div(&a)?;
        d = &y - &c.derivative();
        mult += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors (the radical), primitive with
/// positive leading coefficient.
pub fn square_free_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.normalized();
    if f.degree() == Some(0) {
        return Ok(Polynomial::one());
    }
    let g = f.gcd(&f.derivative());
    f.exact_div(&g)
}
