//! Factorization over GF(q): squarefree decomposition, distinct-degree
//! splitting, then Cantor-Zassenhaus equal-degree splitting.
//!
//! Equal-degree splitting is randomized. The generator is a ChaCha stream
//! seeded by the caller (default seed 0), and the output is sorted
//! canonically, so results never depend on the random path taken.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Monic irreducible factors with multiplicities plus the leading unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub field: FieldSpec,
    pub unit: FieldElement,
    /// Sorted by degree, then ascending coefficient tuple.
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> Poly {
        let mut acc = Poly::constant(&self.field, self.unit);
        for (p, k) in &self.factors {
            for _ in 0..*k {
                acc = &acc * p;
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|(p, k)| std::iter::repeat_n(p.degree().unwrap_or(0), *k as usize))
            .collect()
    }
}

/// Factorization with the default seed 0.
pub fn factorize(f: &Poly) -> Result<Factorization> {
    factorize_with_seed(f, 0)
}

pub fn factorize_with_seed(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic())? {
        for (ddf_part, degree) in distinct_degree(&part)? {
            for irreducible in equal_degree(&ddf_part, degree, &mut rng)? {
                factors.push((irreducible, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(factors.len());
    for (p, k) in factors {
        match merged.last_mut() {
            Some((last, m)) if *last == p => *m += k,
            _ => merged.push((p, k)),
        }
    }
    Ok(Factorization {
        field: f.field().clone(),
        unit,
        factors: merged,
    })
}

/// Squarefree parts of a monic polynomial with their multiplicities.
fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let field = f.field().clone();
    let p = field.characteristic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let deriv = f.derivative();
    let mut c = f.gcd(&deriv)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let fac = w.exact_div(&y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w)?;
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power
        let root_coeffs = c
            .coeffs()
            .iter()
            .step_by(p as usize)
            .map(|&a| field.pth_root(a))
            .collect();
        let root = Poly::new(&field, root_coeffs);
        for (g, k) in squarefree_decomposition(&root)? {
            out.push((g, k * p));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into products of equal-degree factors.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field().clone();
    let q = field.order() as u128;
    let x = Poly::x(&field);
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().is_some_and(|deg| deg >= 2 * d) {
        h = h.pow_mod(q, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct degree-`d` irreducibles.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field().clone();
    let q = field.order();
    loop {
        let a = Poly::new(
            &field,
            (0..n)
                .map(|_| field.element(rng.gen_range(0..q)).expect("in range"))
                .collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f)?;
        let candidate = if !g.is_one() {
            g
        } else {
            splitting_map(&a, f, d)?.gcd(f)?
        };
        if !candidate.is_one() && candidate.degree() != f.degree() {
            let other = f.exact_div(&candidate)?;
            let mut out = equal_degree(&candidate, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

// Odd q: a^((q^d - 1)/2) - 1, computed as (a * a^q * ... * a^(q^(d-1)))^((q-1)/2) - 1.
// Even q = 2^e: the absolute trace a + a^2 + ... + a^(2^(e d - 1)).
fn splitting_map(a: &Poly, f: &Poly, d: usize) -> Result<Poly> {
    let field = a.field().clone();
    let q = field.order() as u128;
    if field.characteristic() == 2 {
        let steps = field.degree() as usize * d;
        let mut term = a.rem(f)?;
        let mut acc = term.clone();
        for _ in 1..steps {
            term = (&term * &term).rem(f)?;
            acc = &acc + &term;
        }
        Ok(acc)
    } else {
        let mut term = a.rem(f)?;
        let mut norm = term.clone();
        for _ in 1..d {
            term = term.pow_mod(q, f)?;
            norm = (&norm * &term).rem(f)?;
        }
        let half = norm.pow_mod((q - 1) / 2, f)?;
        Ok(&half - &Poly::one(&field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn gf(q: u64) -> FieldSpec {
        FieldSpec::from_order(q).unwrap()
    }

    #[test]
    fn x4_minus_1_over_gf3() {
        let f = gf(3);
        let fac = factorize(&Poly::x_pow_minus_one(&f, 4)).unwrap();
        let expect = vec![
            (Poly::from_ints(&f, &[1, 1]), 1),
            (Poly::from_ints(&f, &[2, 1]), 1),
            (Poly::from_ints(&f, &[1, 0, 1]), 1),
        ];
        assert_eq!(fac.factors, expect);
        assert_eq!(fac.unit, FieldElement::ONE);
    }

    #[test]
    fn irreducible_and_linear_inputs() {
        let f = gf(3);
        let q = Poly::from_ints(&f, &[1, 0, 1]);
        assert!(factorize(&q).unwrap().is_irreducible());
        let x = Poly::x(&f);
        assert_eq!(factorize(&x).unwrap().factors, vec![(x, 1)]);
        assert_eq!(
            factorize(&Poly::zero(&f)).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        let f = gf(3);
        // (x + 1)^3 (x^2 + 1)^2 * 2
        let a = Poly::from_ints(&f, &[1, 1]);
        let b = Poly::from_ints(&f, &[1, 0, 1]);
        let mut prod = Poly::from_ints(&f, &[2]);
        for _ in 0..3 {
            prod = &prod * &a;
        }
        prod = &(&prod * &b) * &b;
        let fac = factorize(&prod).unwrap();
        assert_eq!(fac.factors, vec![(a, 3), (b, 2)]);
        assert_eq!(fac.unit, f.from_int(2));
        assert_eq!(fac.product(), prod);
    }

    #[test]
    fn seeds_agree() {
        let f = gf(4);
        let p = Poly::x_pow_minus_one(&f, 15);
        let a = factorize_with_seed(&p, 0).unwrap();
        for seed in 1..5 {
            assert_eq!(factorize_with_seed(&p, seed).unwrap(), a);
        }
        assert_eq!(a.factors.len(), 9);
    }
}
