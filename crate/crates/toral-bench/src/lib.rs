//! Shared fixtures for the benchmarks.

use toral_core::{ExceptionalType, KacTuple, RootSystem};

/// Deterministic sample of valid Kac tuples at the given prime.
pub fn sample_tuples(rs: &RootSystem, p: i64, count: usize) -> Vec<KacTuple> {
    let marks = rs.marks();
    let mut state = 0x9e3779b97f4a7c15u64 ^ p as u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let mut coords = vec![0i64; rs.rank() + 1];
            let mut rem = p;
            for i in 1..=rs.rank() {
                let b = marks[i - 1];
                let max = rem / b;
                if max > 0 {
                    coords[i] = (next() % (max as u64 + 1)) as i64;
                    rem -= coords[i] * b;
                }
            }
            coords[0] = rem;
            KacTuple::new(rs, p, coords).expect("sampled tuples are valid")
        })
        .collect()
}

pub fn e8() -> RootSystem {
    RootSystem::build(ExceptionalType::E8)
}
