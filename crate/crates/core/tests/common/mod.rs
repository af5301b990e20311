//! Independent oracles shared by the integration tests. None of them call
//! the factorization, order or enumeration code under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cyclocode::code::CodeSpec;
use cyclocode::{FieldElement, FieldSpec, Poly};

pub fn gf(q: u64) -> FieldSpec {
    FieldSpec::from_order(q).unwrap()
}

/// Every monic polynomial of degree `d`, lower coefficients counting up in
/// base q from `c_0`.
pub fn monic_of_degree(field: &FieldSpec, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut coeffs: Vec<FieldElement> = (0..d)
            .map(|_| {
                let v = (idx % q) as u32;
                idx /= q;
                field.element(v).unwrap()
            })
            .collect();
        coeffs.push(FieldElement::ONE);
        Poly::new(field, coeffs)
    })
}

/// Trial division by monic polynomials of increasing degree. Returns monic
/// irreducible factors with multiplicity, sorted by degree then coefficients.
pub fn trial_factor(f: &Poly) -> Vec<(Poly, u32)> {
    let field = f.field().clone();
    let mut rest = f.monic();
    let mut out: BTreeMap<(usize, Vec<u32>), (Poly, u32)> = BTreeMap::new();
    let mut d = 1;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        if 2 * d > deg {
            push(&mut out, rest.clone());
            break;
        }
        let mut found = false;
        for cand in monic_of_degree(&field, d) {
            if rest.rem(&cand).unwrap().is_zero() {
                rest = rest.divmod(&cand).unwrap().0;
                push(&mut out, cand);
                found = true;
                break;
            }
        }
        if !found {
            d += 1;
        }
    }
    out.into_values().collect()
}

fn push(out: &mut BTreeMap<(usize, Vec<u32>), (Poly, u32)>, p: Poly) {
    let key = (
        p.degree().unwrap(),
        p.coeffs().iter().map(|c| c.index()).collect(),
    );
    out.entry(key).or_insert((p, 0)).1 += 1;
}

/// Least `e >= 1` with `x^e = 1 mod f`, by stepping `x^e` one power at a time.
pub fn scan_order(f: &Poly) -> u64 {
    let field = f.field();
    let one = Poly::one(field);
    let x = Poly::x(field);
    let mut acc = x.rem(f).unwrap();
    let mut e = 1;
    while acc != one.rem(f).unwrap() {
        acc = (&acc * &x).rem(f).unwrap();
        e += 1;
    }
    e
}

/// Sizes of the q-cyclotomic cosets mod n, sorted.
pub fn coset_sizes(q: u64, n: u64) -> Vec<usize> {
    let mut seen = vec![false; n as usize];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let mut j = s;
        let mut size = 0;
        while !seen[j as usize] {
            seen[j as usize] = true;
            size += 1;
            j = j * q % n;
        }
        sizes.push(size);
    }
    sizes.sort();
    sizes
}

/// Codewords as `a(x) g(x) mod x^n - 1` for every `a` of degree below `m`,
/// built with plain polynomial products.
pub fn all_codewords(code: &CodeSpec) -> Vec<Vec<FieldElement>> {
    let field = code.field();
    let xn = Poly::x_pow_minus_one(field, code.n());
    monic_or_zero_messages(field, code.m())
        .map(|a| {
            let z = (&a * code.g()).rem(&xn).unwrap();
            (0..code.n()).map(|i| z.coeff(i)).collect()
        })
        .collect()
}

fn monic_or_zero_messages(field: &FieldSpec, m: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u64;
    (0..q.pow(m as u32)).map(move |mut idx| {
        let coeffs = (0..m)
            .map(|_| {
                let v = (idx % q) as u32;
                idx /= q;
                field.element(v).unwrap()
            })
            .collect();
        Poly::new(field, coeffs)
    })
}

/// Nonzero weight -> count by brute force.
pub fn brute_weights(code: &CodeSpec) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for w in all_codewords(code) {
        let wt = w.iter().filter(|c| !c.is_zero()).count();
        if wt > 0 {
            *out.entry(wt).or_insert(0) += 1;
        }
    }
    out
}

pub fn brute_min_distance(code: &CodeSpec) -> usize {
    *brute_weights(code).keys().next().unwrap()
}
