//! Shared scaffolding for the criterion benchmarks: deterministic query
//! sampling so every run times the same workload.

use narayana_core::{NarayanaQuery, PrimeBase};

/// SplitMix64 step; plenty to scatter k across a huge row.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `count` queries at row n with pseudo-random k, same sequence every run.
pub fn sample_queries(p: u64, n: u64, count: usize) -> Vec<NarayanaQuery> {
    let base = PrimeBase::new(p).expect("benchmark primes are prime");
    let mut state = n ^ p;
    (0..count)
        .map(|_| {
            let k = splitmix64(&mut state) % n;
            NarayanaQuery::new(base, n, k).expect("k < n")
        })
        .collect()
}
