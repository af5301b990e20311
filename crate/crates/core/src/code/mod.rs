//! Cyclic codes as ideals of `GF(q)[x]/(x^n - 1)`, their codewords, and the
//! two partitions of the nonzero codewords: shift-cycles and proportionality
//! classes.

mod codeword;
mod orbit;

pub use codeword::{
    codeword_period, minimal_polynomial, orbit_rd, support, weight, Codeword, OrbitConstants,
};
pub use orbit::{partition_classes, partition_cycles, ClassOrbit, CycleOrbit};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{factorize_with_seed, is_primitive, poly_order, Poly};

/// Environment variable overriding [`Budget::DEFAULT`].
pub const BUDGET_ENV: &str = "CYCLOCODE_BUDGET";

/// Upper bound on the number of codewords any enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 20);

    /// `CYCLOCODE_BUDGET` when set and valid, else the default.
    pub fn from_env() -> Budget {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget)
            .unwrap_or(Self::DEFAULT)
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// One irreducible factor `h_i` of the parity-check polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorInfo {
    pub poly: Poly,
    pub degree: usize,
    /// `ord(h_i)`.
    pub order: u64,
    pub primitive: bool,
}

/// A cyclic code given by its parity-check polynomial `h`, of length
/// `n = ord(h)` and dimension `m = deg h`.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    field: FieldSpec,
    n: usize,
    h: Poly,
    g: Poly,
    factors: Vec<FactorInfo>,
    ord_q_mod_n: u64,
}

/// Builds the code with parity-check polynomial `h` (normalized to monic).
pub fn code_from_parity_check(field: &FieldSpec, h: &Poly) -> Result<CodeSpec> {
    CodeSpec::from_parity_check(field, h)
}

impl CodeSpec {
    pub fn from_parity_check(field: &FieldSpec, h: &Poly) -> Result<Self> {
        Self::from_parity_check_with_seed(field, h, 0)
    }

    /// As [`CodeSpec::from_parity_check`], with `seed` driving the
    /// randomized factorization of `h`.
    pub fn from_parity_check_with_seed(field: &FieldSpec, h: &Poly, seed: u64) -> Result<Self> {
        let q = field.order() as u64;
        if q <= 2 {
            return Err(Error::InvalidCode(format!("q = {q}; codes need q > 2")));
        }
        if h.field() != field {
            return Err(Error::FieldMismatch(
                field.to_string(),
                h.field().to_string(),
            ));
        }
        let h = h.monic();
        match h.degree() {
            None | Some(0) => {
                return Err(Error::InvalidCode(
                    "parity-check polynomial must be nonconstant".into(),
                ))
            }
            _ => {}
        }
        if h.coeff(0).is_zero() {
            return Err(Error::InvalidCode(format!(
                "{h} vanishes at 0 and divides no x^n - 1"
            )));
        }
        let fac = factorize_with_seed(&h, seed)?;
        if !fac.is_squarefree() {
            return Err(Error::InvalidCode(format!("{h} has repeated factors")));
        }
        let n = poly_order(&h)?;
        let gcd = arith::gcd(n, q);
        if gcd != 1 {
            return Err(Error::InvalidCode(format!("gcd(n = {n}, q = {q}) = {gcd}")));
        }
        let n_usize = usize::try_from(n).map_err(|_| Error::Overflow("code length"))?;
        if n_usize > 1 << 24 {
            return Err(Error::InvalidCode(format!(
                "length {n} is too large to materialize"
            )));
        }
        let xn = Poly::x_pow_minus_one(field, n_usize);
        let g = xn
            .exact_div(&h)
            .map_err(|_| Error::InvalidCode(format!("{h} does not divide x^{n}-1")))?;
        let factors = fac
            .factors
            .into_iter()
            .map(|(poly, _)| {
                Ok(FactorInfo {
                    degree: poly.degree().expect("nonconstant"),
                    order: poly_order(&poly)?,
                    primitive: is_primitive(&poly)?,
                    poly,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CodeSpec {
            field: field.clone(),
            n: n_usize,
            ord_q_mod_n: arith::mult_order(q, n)?,
            h,
            g,
            factors,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    /// Code length `n = ord(h)`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `m = deg h`.
    pub fn m(&self) -> usize {
        self.h.degree().expect("nonconstant")
    }

    /// Number of irreducible factors of `h`.
    pub fn t(&self) -> usize {
        self.factors.len()
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    /// Generator `g = (x^n - 1) / h`.
    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn factors(&self) -> &[FactorInfo] {
        &self.factors
    }

    /// Multiplicative order of q modulo n.
    pub fn ord_q_mod_n(&self) -> u64 {
        self.ord_q_mod_n
    }

    /// `n = q^m - 1`.
    pub fn is_primitive_length(&self) -> bool {
        (self.q() as u128)
            .checked_pow(self.m() as u32)
            .map(|v| v - 1)
            == Some(self.n as u128)
    }

    /// `q^m`, the number of codewords.
    pub fn size(&self) -> u128 {
        (self.q() as u128)
            .checked_pow(self.m() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Proportionality class count `(q^m - 1) / (q - 1)`.
    pub fn class_count(&self) -> u128 {
        (self.size() - 1) / (self.q() as u128 - 1)
    }

    /// Message polynomial with the given index; digit `i` base q is `a_i`.
    pub fn message(&self, mut index: u64) -> Vec<FieldElement> {
        let q = self.q();
        (0..self.m())
            .map(|_| {
                let d = index % q;
                index /= q;
                FieldElement::from_index_unchecked(d as u32)
            })
            .collect()
    }

    pub fn message_index(&self, message: &[FieldElement]) -> u64 {
        let q = self.q();
        message
            .iter()
            .rev()
            .fold(0, |acc, a| acc * q + a.index() as u64)
    }

    /// The codeword `a(x) g(x)`; `deg a < m` so no reduction is needed.
    pub fn encode(&self, message: &[FieldElement]) -> Codeword {
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.n];
        for (i, &a) in message.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &gc) in self.g.coeffs().iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, gc));
            }
        }
        Codeword::new(out)
    }

    /// Message of `x * a(g)`, i.e. `x a(x) mod h(x)`.
    pub fn shift_message(&self, message: &mut [FieldElement]) {
        let f = &self.field;
        let m = message.len();
        let top = message[m - 1];
        message.copy_within(0..m - 1, 1);
        message[0] = FieldElement::ZERO;
        if !top.is_zero() {
            for (k, slot) in message.iter_mut().enumerate() {
                *slot = f.sub(*slot, f.mul(top, self.h.coeff(k)));
            }
        }
    }

    /// True iff `h z = 0 mod x^n - 1`.
    pub fn contains(&self, z: &Codeword) -> bool {
        if z.len() != self.n {
            return false;
        }
        let prod = &self.h * &z.to_poly(&self.field);
        let xn = Poly::x_pow_minus_one(&self.field, self.n);
        prod.rem(&xn).map(|r| r.is_zero()).unwrap_or(false)
    }
}

/// All `q^m` codewords, messages in index order (zero first).
pub fn enumerate_codewords(
    code: &CodeSpec,
    budget: Budget,
) -> Result<impl Iterator<Item = Codeword> + '_> {
    let total = code.size();
    budget.check(total)?;
    Ok((0..total as u64).map(move |i| code.encode(&code.message(i))))
}
