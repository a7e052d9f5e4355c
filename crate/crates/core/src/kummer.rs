//! p-adic order of binomial coefficients, computed two independent ways:
//! by simulating the base-p addition of k and n-k and counting carries, and
//! by scanning the digit strings of n and k for the positions those carries
//! must occupy. The two counts agree on every input, which makes the pair
//! its own strongest self-test.

use crate::digits::{decompose, PrimeBase};
use crate::error::Error;

/// The carries observed while adding the base-p digits of k and n-k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarryTrace {
    positions: Vec<usize>,
}

impl CarryTrace {
    /// Digit indices with a carry out of that position, ascending.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Number of carries, which equals the p-adic order of C(n, k).
    pub fn count(&self) -> u32 {
        self.positions.len() as u32
    }
}

/// Order of C(n, k) at p via carry counting: simulates the addition
/// k + (n - k) digit by digit and records every position a carry leaves.
pub fn binomial_valuation_by_addition(
    n: u64,
    k: u64,
    base: PrimeBase,
) -> Result<CarryTrace, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let p = base.get();
    let lhs = decompose(k, base, 0);
    let rhs = decompose(n - k, base, 0);
    // one position past the longer operand, so a carry out of the top digit
    // still has an index to land on
    let len = lhs.digits().len().max(rhs.digits().len()) + 1;
    let mut positions = Vec::new();
    let mut carry = 0u64;
    for i in 0..len {
        let a = lhs.digits().get(i).copied().unwrap_or(0);
        let b = rhs.digits().get(i).copied().unwrap_or(0);
        if a + b + carry >= p {
            carry = 1;
            positions.push(i);
        } else {
            carry = 0;
        }
    }
    debug_assert_eq!(carry, 0, "k + (n - k) cannot carry past the padded top");
    Ok(CarryTrace { positions })
}

/// Order of C(n, k) at p via the index condition: count indices i where
/// k_i > n_i, or where some j < i has k_j > n_j with k and n agreeing digit
/// for digit on j+1..=i. A position satisfies the condition exactly when a
/// carry leaves it, so the nested lookback collapses into one left-to-right
/// scan that tracks whether a carry chain is still alive.
pub fn binomial_valuation_by_indices(n: u64, k: u64, base: PrimeBase) -> Result<u32, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let nd = decompose(n, base, 0);
    let kd = decompose(k, base, nd.digits().len());
    let mut count = 0u32;
    let mut chain = false;
    for (&ki, &ni) in kd.digits().iter().zip(nd.digits()) {
        let qualifies = ki > ni || (chain && ki == ni);
        if qualifies {
            count += 1;
        }
        chain = qualifies;
    }
    Ok(count)
}
