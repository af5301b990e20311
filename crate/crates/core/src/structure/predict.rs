//! Closed-form predictions. Nothing here enumerates codewords: every
//! function takes integers derived from `(q, n, m)` and the factor table.

use crate::arith::{self, gcd};
use crate::error::{Error, Result};

/// Orbit constants `(r, d)` of a code or stratum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitPrediction {
    pub r: u64,
    pub d: u64,
}

/// Derived counts once `(r, d)` and the class count `R` are known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountPrediction {
    /// `R / r` when it is an integer.
    pub v: Option<u64>,
    /// `(q - 1) / d`.
    pub b: u64,
    /// `v b`.
    pub s: Option<u64>,
    pub gcd_b_r: u64,
}

/// `d = gcd(q - 1, n)`, `r = n / d` for an irreducible nonprimitive `h`.
pub fn theorem2(q: u64, n: u64) -> OrbitPrediction {
    let d = gcd(q - 1, n);
    OrbitPrediction { r: n / d, d }
}

/// `r = R = (q^m - 1)/(q - 1)`, `d = q - 1` for a primitive `h` of degree `m`.
pub fn remark2(q: u64, m: usize) -> Result<OrbitPrediction> {
    Ok(OrbitPrediction {
        r: class_count(q, &[m])?,
        d: q - 1,
    })
}

/// Whether the `t = 1` prediction applies: `h` nonprimitive, or primitive
/// with `gcd(m, q - 1) = 1`.
pub fn theorem2_applicable(q: u64, m: usize, primitive: bool) -> bool {
    !primitive || gcd(m as u64, q - 1) == 1
}

/// `R_c = prod (q^{m_i} - 1) / (q - 1)` for a stratum built from factors of
/// the given degrees.
pub fn class_count(q: u64, degrees: &[usize]) -> Result<u64> {
    let mut size: u128 = 1;
    for &m in degrees {
        let qm = (q as u128)
            .checked_pow(m as u32)
            .ok_or(Error::Overflow("q^m"))?;
        size = size
            .checked_mul(qm - 1)
            .ok_or(Error::Overflow("stratum size"))?;
    }
    u64::try_from(size / (q as u128 - 1)).map_err(|_| Error::Overflow("class count"))
}

/// Hypothesis `gcd(ord_n(q), q - 1) = 1`.
pub fn theorem3_applicable(q: u64, ord_q_mod_n: u64) -> bool {
    gcd(ord_q_mod_n, q - 1) == 1
}

/// `r_c = gcd(R_c, n_c)`, `d_c = gcd(q - 1, n_c)`.
pub fn theorem3(q: u64, n_c: u64, r_cap: u64) -> OrbitPrediction {
    OrbitPrediction {
        r: gcd(r_cap, n_c),
        d: gcd(q - 1, n_c),
    }
}

/// `d_c = gcd(q - 1, n_c)`, `r_c = n_c / d_c` for strata whose factors are
/// all nonprimitive.
pub fn theorem4(q: u64, n_c: u64) -> OrbitPrediction {
    theorem2(q, n_c)
}

pub fn counts(q: u64, r_cap: u64, rd: OrbitPrediction) -> CountPrediction {
    let b = (q - 1) / rd.d;
    let v = r_cap.is_multiple_of(rd.r).then(|| r_cap / rd.r);
    CountPrediction {
        v,
        b,
        s: v.map(|v| v * b),
        gcd_b_r: gcd(b, rd.r),
    }
}

/// The three equidistance flags `(s = b, r = R, gcd(s, R) = 1)`.
pub fn equidistance_flags(s: u64, b: u64, r: u64, r_cap: u64) -> [bool; 3] {
    [s == b, r == r_cap, gcd(s, r_cap) == 1]
}

/// Hypotheses under which `r = gcd(R, n)` is asserted for `t = 1`:
/// `gcd(m, q - 1) = 1`, or `n` or `q - 1` squarefree, or every prime
/// dividing both `n` and `q - 1` appearing with the same exponent in each.
pub fn remark5_applicable(q: u64, n: u64, m: usize) -> bool {
    if gcd(m as u64, q - 1) == 1 || arith::is_squarefree(n) || arith::is_squarefree(q - 1) {
        return true;
    }
    arith::factorize(gcd(n, q - 1))
        .into_iter()
        .all(|(p, _)| arith::valuation(n, p) == arith::valuation(q - 1, p))
}

/// `n_c | q^deg - 1`, evaluated as `q^deg mod n_c == 1 mod n_c`.
pub fn order_divides(q: u64, deg: usize, n_c: u64) -> bool {
    arith::pow_mod(q, deg as u64, n_c) == 1 % n_c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem2_examples() {
        assert_eq!(theorem2(3, 4), OrbitPrediction { r: 2, d: 2 });
        assert_eq!(theorem2(4, 5), OrbitPrediction { r: 5, d: 1 });
        assert_eq!(remark2(3, 2).unwrap(), OrbitPrediction { r: 4, d: 2 });
        assert!(!theorem2_applicable(3, 2, true));
        assert!(theorem2_applicable(3, 3, true));
        assert!(theorem2_applicable(3, 2, false));
    }

    #[test]
    fn theorem3_examples() {
        assert!(!theorem3_applicable(3, 2));
        assert!(theorem3_applicable(4, 2));
        assert_eq!(theorem3(4, 5, 5), OrbitPrediction { r: 5, d: 1 });
        assert_eq!(theorem3(3, 13, 13), OrbitPrediction { r: 13, d: 1 });
    }

    #[test]
    fn counts_examples() {
        assert_eq!(class_count(3, &[2]).unwrap(), 4);
        assert_eq!(class_count(3, &[1, 2]).unwrap(), 8);
        let c = counts(3, 4, theorem2(3, 4));
        assert_eq!(
            c,
            CountPrediction {
                v: Some(2),
                b: 1,
                s: Some(2),
                gcd_b_r: 1
            }
        );
        let c = counts(4, 5, theorem2(4, 5));
        assert_eq!(
            c,
            CountPrediction {
                v: Some(1),
                b: 3,
                s: Some(3),
                gcd_b_r: 1
            }
        );
        let c = counts(5, 6, theorem2(5, 8));
        assert_eq!(
            c,
            CountPrediction {
                v: Some(3),
                b: 1,
                s: Some(3),
                gcd_b_r: 1
            }
        );
        // degenerate branch n_c | q - 1
        assert_eq!(theorem4(5, 4), OrbitPrediction { r: 1, d: 4 });
    }

    #[test]
    fn remark5_hypotheses() {
        assert!(remark5_applicable(4, 5, 2));
        assert!(remark5_applicable(3, 13, 3));
        // n = 16, q - 1 = 8: 2 appears to different powers
        assert!(!remark5_applicable(9, 16, 2));
    }

    #[test]
    fn order_divisibility() {
        assert!(order_divides(3, 2, 8));
        assert!(!order_divides(3, 3, 4));
        assert!(order_divides(3, 1, 1));
    }
}
