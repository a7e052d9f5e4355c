//! Exact arbitrary-precision reference values, used as ground truth by
//! every fast-path test. Everything here works directly from the defining
//! formulas with big integers and asserted-exact divisions, and nothing
//! touches the digit criterion, so agreement between the two paths is a
//! real check rather than a tautology. Intended range is n up to a few
//! thousand; it is meant to be obviously correct, not fast.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Unbounded nonnegative integer used for all reference arithmetic.
pub type ExactInteger = BigUint;

/// C(n, k) by the multiplicative formula. Every intermediate division is
/// exact because each prefix product is itself a binomial coefficient.
pub fn binomial_exact(n: u64, k: u64) -> ExactInteger {
    if k > n {
        return ExactInteger::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInteger::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// N(n, k) = C(n,k) C(n,k+1) / n, with the division asserted exact.
pub fn narayana_exact(n: u64, k: u64) -> ExactInteger {
    assert!(
        n >= 1 && k < n,
        "narayana_exact needs 1 <= n and 0 <= k <= n-1, got n={n} k={k}"
    );
    exact_div(binomial_exact(n, k) * binomial_exact(n, k + 1), n)
}

/// Catalan number C(2n, n) / (n + 1), with the division asserted exact.
pub fn catalan_exact(n: u64) -> ExactInteger {
    let doubled = n.checked_mul(2).expect("2n must fit u64");
    exact_div(binomial_exact(doubled, n), n + 1)
}

/// Trial-division order: the largest e with p^e dividing x.
/// Requires p >= 2 and x >= 1.
pub fn valuation_exact(x: &ExactInteger, p: u64) -> u32 {
    assert!(p >= 2, "valuation base must be at least 2");
    assert!(!x.is_zero(), "p-adic order of 0 is undefined");
    let mut e = 0;
    let mut rest = x.clone();
    while (&rest % p).is_zero() {
        rest /= p;
        e += 1;
    }
    e
}

/// The whole row C(n, 0), ..., C(n, n), built one entry at a time by the
/// same multiplicative recurrence as `binomial_exact`. Sweep-style tests
/// use this to avoid recomputing shared prefixes for every k.
pub fn binomial_row_exact(n: u64) -> Vec<ExactInteger> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut entry = ExactInteger::one();
    row.push(entry.clone());
    for k in 0..n {
        entry = entry * (n - k) / (k + 1);
        row.push(entry.clone());
    }
    row
}

/// The whole row N(n, 0), ..., N(n, n-1), divisions asserted exact.
pub fn narayana_row_exact(n: u64) -> Vec<ExactInteger> {
    assert!(n >= 1, "rows are indexed from n = 1");
    let binom = binomial_row_exact(n);
    (0..n as usize)
        .map(|k| exact_div(&binom[k] * &binom[k + 1], n))
        .collect()
}

fn exact_div(numerator: ExactInteger, divisor: u64) -> ExactInteger {
    assert!(
        (&numerator % divisor).is_zero(),
        "internal consistency fault: {numerator} is not divisible by {divisor}"
    );
    numerator / divisor
}
