//! Orders of polynomials, primitivity, multiplicative orders and the
//! factorization of `x^n - 1`.

use super::{factorize, factorize_with_seed, Factorization, Poly};
use crate::arith;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Least `e >= 1` with `f | x^e - 1`.
///
/// Each irreducible factor `g` of degree `m` has order dividing `q^m - 1`;
/// it is found by stripping prime factors from `q^m - 1` while
/// `x^(e/r) = 1 mod g` still holds. A factor of multiplicity `k` contributes
/// `ord(g) * p^t` with `p^t` the least power of the characteristic `>= k`,
/// and the result is the lcm over all factors.
pub fn poly_order(f: &Poly) -> Result<u64> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::Degenerate("order of a constant polynomial".into())),
        _ => {}
    }
    if f.coeff(0).is_zero() {
        return Err(Error::Degenerate(format!(
            "{f} vanishes at 0 and has no order"
        )));
    }
    let q = f.field().order() as u64;
    let p = f.field().characteristic() as u64;
    let mut order = 1u64;
    for (g, k) in factorize(f)?.factors {
        let m = g.degree().expect("factor is nonconstant") as u32;
        let mut ord = irreducible_order(&g, q, m)?;
        let mut pt = 1u64;
        while pt < k as u64 {
            pt *= p;
        }
        ord = ord
            .checked_mul(pt)
            .ok_or(Error::Overflow("polynomial order"))?;
        order = arith::lcm(order, ord)?;
    }
    Ok(order)
}

fn irreducible_order(g: &Poly, q: u64, m: u32) -> Result<u64> {
    let group = arith::checked_pow(q, m)? - 1;
    let x = Poly::x(g.field());
    let one = Poly::one(g.field());
    let mut ord = group;
    for (r, _) in arith::factorize(group) {
        while ord % r == 0 && x.pow_mod((ord / r) as u128, g)? == one {
            ord /= r;
        }
    }
    Ok(ord)
}

/// True iff the irreducible `f` of degree `m` has order `q^m - 1`.
pub fn is_primitive(f: &Poly) -> Result<bool> {
    let fac = factorize(f)?;
    if !fac.is_irreducible() {
        return Err(Error::Reducible(f.to_string()));
    }
    let m = f.degree().expect("irreducible is nonconstant") as u32;
    if f.coeff(0).is_zero() {
        // only x itself; it has no order
        return Ok(false);
    }
    let q = f.field().order() as u64;
    Ok(poly_order(f)? == arith::checked_pow(q, m)? - 1)
}

/// Least `h >= 1` with `q^h = 1 (mod n)`.
pub fn mult_order(q: u64, n: u64) -> Result<u64> {
    arith::mult_order(q, n)
}

/// Orbits of `j -> q j mod n` on `{0, ..., n-1}`; each orbit sorted, orbits
/// ordered by their least element.
pub fn cyclotomic_cosets(q: u64, n: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(Error::Degenerate("length must be positive".into()));
    }
    let g = arith::gcd(n, q);
    if g != 1 {
        return Err(Error::NotCoprime { n, q, gcd: g });
    }
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = start;
        while !seen[j as usize] {
            seen[j as usize] = true;
            coset.push(j);
            j = ((j as u128 * q as u128) % n as u128) as u64;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Factorization of `x^n - 1` over `field`; requires `gcd(n, q) = 1`.
pub fn factor_xn_minus_1(field: &FieldSpec, n: u64) -> Result<Factorization> {
    factor_xn_minus_1_with_seed(field, n, 0)
}

pub fn factor_xn_minus_1_with_seed(field: &FieldSpec, n: u64, seed: u64) -> Result<Factorization> {
    let q = field.order() as u64;
    if n == 0 {
        return Err(Error::Degenerate("length must be positive".into()));
    }
    let g = arith::gcd(n, q);
    if g != 1 {
        return Err(Error::NotCoprime { n, q, gcd: g });
    }
    factorize_with_seed(&Poly::x_pow_minus_one(field, n as usize), seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn order_examples() {
        let f = gf(3);
        assert_eq!(poly_order(&Poly::from_ints(&f, &[1, 1])), Ok(2));
        assert_eq!(poly_order(&Poly::from_ints(&f, &[1, 0, 1])), Ok(4));
        assert_eq!(poly_order(&Poly::from_ints(&f, &[2, 1, 1])), Ok(8));
        // squarefree product: lcm of factor orders
        let h = &Poly::from_ints(&f, &[1, 1]) * &Poly::from_ints(&f, &[2, 1, 1]);
        assert_eq!(poly_order(&h), Ok(8));
        // repeated factor: (x+1)^2 has order 2 * 3
        let sq = &Poly::from_ints(&f, &[1, 1]) * &Poly::from_ints(&f, &[1, 1]);
        assert_eq!(poly_order(&sq), Ok(6));
        assert!(poly_order(&Poly::x(&f)).is_err());
        assert!(poly_order(&Poly::one(&f)).is_err());
    }

    #[test]
    fn primitivity_examples() {
        let f = gf(3);
        assert_eq!(is_primitive(&Poly::from_ints(&f, &[2, 1, 1])), Ok(true));
        assert_eq!(is_primitive(&Poly::from_ints(&f, &[1, 0, 1])), Ok(false));
        assert_eq!(is_primitive(&Poly::from_ints(&f, &[1, 1])), Ok(true));
        assert!(matches!(
            is_primitive(&Poly::x_pow_minus_one(&f, 4)),
            Err(Error::Reducible(_))
        ));
    }

    #[test]
    fn coset_examples() {
        assert_eq!(
            cyclotomic_cosets(3, 4).unwrap(),
            vec![vec![0], vec![1, 3], vec![2]]
        );
        assert_eq!(cyclotomic_cosets(7, 1).unwrap(), vec![vec![0]]);
        assert_eq!(
            cyclotomic_cosets(4, 5).unwrap(),
            vec![vec![0], vec![1, 4], vec![2, 3]]
        );
        assert!(cyclotomic_cosets(3, 6).is_err());
    }

    #[test]
    fn xn_minus_1_examples() {
        let f3 = gf(3);
        let fac = factor_xn_minus_1(&f3, 4).unwrap();
        assert_eq!(fac.degrees(), vec![1, 1, 2]);
        let one = factor_xn_minus_1(&f3, 1).unwrap();
        assert_eq!(one.factors, vec![(Poly::from_ints(&f3, &[-1, 1]), 1)]);
        let f4 = gf(4);
        let fac = factor_xn_minus_1(&f4, 5).unwrap();
        assert_eq!(fac.degrees(), vec![1, 2, 2]);
        assert_eq!(fac.factors[0].0, Poly::from_ints(&f4, &[1, 1]));
        for (g, _) in &fac.factors[1..] {
            assert_eq!(poly_order(g), Ok(5));
        }
        assert!(factor_xn_minus_1(&f3, 9).is_err());
    }
}
