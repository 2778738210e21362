use std::sync::atomic::{AtomicU64, Ordering::Relaxed};

use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchStats {
    pub step1: u64,
    pub step2: u64,
    pub step3: u64,
    pub step4: u64,
    pub step5: u64,
    #[serde(rename = "caseA")]
    pub case_a: u64,
    pub b11: u64,
    pub b12: u64,
    pub b13: u64,
    pub b2: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub branches: BranchStats,
    pub candidates_enumerated: u64,
    pub two_table_columns: u64,
    pub membership_tests: u64,
    pub elapsed_ms: u64,
}

/// Shared counters; every update is an addition, so the totals do not
/// depend on how branches are scheduled.
#[derive(Debug, Default)]
pub struct Counters {
    pub step1: AtomicU64,
    pub step2: AtomicU64,
    pub step3: AtomicU64,
    pub step4: AtomicU64,
    pub step5: AtomicU64,
    pub case_a: AtomicU64,
    pub b11: AtomicU64,
    pub b12: AtomicU64,
    pub b13: AtomicU64,
    pub b2: AtomicU64,
    pub candidates: AtomicU64,
    pub two_table_columns: AtomicU64,
    pub membership_tests: AtomicU64,
}

pub(crate) fn bump(c: &AtomicU64) {
    c.fetch_add(1, Relaxed);
}

pub(crate) fn add(c: &AtomicU64, k: u64) {
    c.fetch_add(k, Relaxed);
}

impl Counters {
    pub fn snapshot(&self, elapsed_ms: u64) -> Stats {
        let g = |c: &AtomicU64| c.load(Relaxed);
        Stats {
            branches: BranchStats {
                step1: g(&self.step1),
                step2: g(&self.step2),
                step3: g(&self.step3),
                step4: g(&self.step4),
                step5: g(&self.step5),
                case_a: g(&self.case_a),
                b11: g(&self.b11),
                b12: g(&self.b12),
                b13: g(&self.b13),
                b2: g(&self.b2),
            },
            candidates_enumerated: g(&self.candidates),
            two_table_columns: g(&self.two_table_columns),
            membership_tests: g(&self.membership_tests),
            elapsed_ms,
        }
    }
}
