use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Two column families and a target: find `cols1[i] + cols2[j] = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableInstance {
    pub k: usize,
    pub cols1: Vec<Vec<u8>>,
    pub cols2: Vec<Vec<u8>>,
    pub target: Vec<u8>,
}

impl TableInstance {
    pub fn validate(&self) -> Result<()> {
        let cols_ok = self.cols1.iter().chain(&self.cols2).all(|c| c.len() == self.k && c.iter().all(|&x| x <= 1));
        let target_ok = self.target.len() == self.k && self.target.iter().all(|&x| x <= 2);
        if cols_ok && target_ok {
            Ok(())
        } else {
            Err(Error::Precondition("malformed table instance".into()))
        }
    }
}

/// Result of [`two_table_solve_counted`]: the answer and the number of
/// column comparisons spent on sorting and searching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoTableRun {
    pub pair: Option<(usize, usize)>,
    pub comparisons: u64,
}

pub fn two_table_solve(inst: &TableInstance) -> Result<Option<(usize, usize)>> {
    Ok(two_table_solve_counted(inst)?.pair)
}

/// Sorts `cols1` lexicographically and binary-searches `target - v` for
/// every column `v` of `cols2`. Among all solutions the lexicographically
/// smallest `(i, j)` is returned.
pub fn two_table_solve_counted(inst: &TableInstance) -> Result<TwoTableRun> {
    inst.validate()?;
    let mut comparisons = 0u64;
    let mut order: Vec<usize> = (0..inst.cols1.len()).collect();
    order.sort_by(|&a, &b| {
        comparisons += 1;
        inst.cols1[a].cmp(&inst.cols1[b]).then(a.cmp(&b))
    });
    let mut best: Option<(usize, usize)> = None;
    let mut need = vec![0u8; inst.k];
    for (j, col) in inst.cols2.iter().enumerate() {
        let feasible = inst.target.iter().zip(col).zip(need.iter_mut()).all(|((&t, &c), slot)| {
            *slot = t.wrapping_sub(c);
            t >= c
        });
        if !feasible {
            continue;
        }
        // lower bound: first sorted position whose column is >= need
        let (mut lo, mut hi) = (0, order.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            comparisons += 1;
            if inst.cols1[order[mid]].as_slice().cmp(&need) == Ordering::Less {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo < order.len() && inst.cols1[order[lo]] == need {
            let i = order[lo];
            if best.is_none_or(|b| (i, j) < b) {
                best = Some((i, j));
            }
        }
    }
    Ok(TwoTableRun { pair: best, comparisons })
}
