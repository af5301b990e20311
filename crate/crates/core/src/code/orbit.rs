use rayon::prelude::*;

use super::{codeword_period, orbit_rd, Budget, CodeSpec, Codeword};
use crate::error::Result;
use crate::field::FieldElement;

/// A shift-cycle of nonzero codewords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleOrbit {
    /// Least monic member, or the least member when none is monic.
    pub representative: Codeword,
    /// `n_z`, the cycle length.
    pub period: usize,
    pub weight: usize,
    pub r: usize,
    pub d: u64,
    /// `x^r z = alpha z` for the representative.
    pub alpha: FieldElement,
    /// Members with leading coefficient 1; summed over a set of cycles this
    /// counts the proportionality classes they cover.
    pub monic_members: usize,
}

/// A proportionality class `{a z : a in GF(q)*}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassOrbit {
    pub monic_rep: Codeword,
    pub weight: usize,
    pub period: usize,
    pub support: Vec<usize>,
}

struct RawCycle {
    best_monic: Option<Codeword>,
    best_any: Codeword,
    period: usize,
    monic_members: usize,
}

/// Partitions the nonzero codewords into shift-cycles, sorted by representative.
///
/// Cycles are discovered in message order with a visited set over message
/// indices; the shift acts on messages as `a -> x a mod h`. Per-cycle
/// constants are computed in parallel and merged in a fixed order.
pub fn partition_cycles(code: &CodeSpec, budget: Budget) -> Result<Vec<CycleOrbit>> {
    let total = code.size();
    budget.check(total)?;
    let total = total as u64;
    let mut visited = vec![false; total as usize];
    let mut raw = Vec::new();
    for start in 1..total {
        if visited[start as usize] {
            continue;
        }
        let mut msg = code.message(start);
        let mut word = code.encode(&msg);
        let mut cycle = RawCycle {
            best_monic: None,
            best_any: word.clone(),
            period: 0,
            monic_members: 0,
        };
        loop {
            let idx = code.message_index(&msg);
            if visited[idx as usize] {
                break;
            }
            visited[idx as usize] = true;
            cycle.period += 1;
            if word.is_monic() {
                cycle.monic_members += 1;
                if cycle.best_monic.as_ref().is_none_or(|b| word < *b) {
                    cycle.best_monic = Some(word.clone());
                }
            }
            if word < cycle.best_any {
                cycle.best_any = word.clone();
            }
            code.shift_message(&mut msg);
            word = word.rotate(1);
        }
        raw.push(cycle);
    }
    let field = code.field();
    let mut cycles = raw
        .into_par_iter()
        .map(|c| {
            let representative = c.best_monic.unwrap_or(c.best_any);
            let oc = orbit_rd(field, &representative)?;
            Ok(CycleOrbit {
                weight: representative.weight(),
                period: c.period,
                r: oc.r,
                d: oc.d,
                alpha: oc.alpha,
                monic_members: c.monic_members,
                representative,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    cycles.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(cycles)
}

/// Partitions the nonzero codewords into proportionality classes, one per
/// monic codeword, sorted by monic representative.
pub fn partition_classes(code: &CodeSpec, budget: Budget) -> Result<Vec<ClassOrbit>> {
    let total = code.size();
    budget.check(total)?;
    let mut classes: Vec<ClassOrbit> = (1..total as u64)
        .into_par_iter()
        .filter_map(|i| {
            let z = code.encode(&code.message(i));
            z.is_monic().then(|| ClassOrbit {
                weight: z.weight(),
                period: codeword_period(&z).expect("nonzero"),
                support: z.support(),
                monic_rep: z,
            })
        })
        .collect();
    classes.sort_by(|a, b| a.monic_rep.cmp(&b.monic_rep));
    Ok(classes)
}
