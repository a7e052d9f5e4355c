//! Fast prime-divisibility decisions for Narayana numbers.
//!
//! The Narayana number N(n, k) = C(n,k) C(n,k+1) / n refines the Catalan
//! numbers (each row of the triangle sums to one). Whether a prime p
//! divides N(n, k) is decided here entirely from the base-p digits of n and
//! k, in O(log_p n) digit operations, so queries at n around 10^18 cost the
//! same few dozen operations as small ones. The same digit machinery gives
//! the p-adic order of N(n, k) through Kummer carry counting.
//!
//! Module map:
//!
//! * [`digits`] - base-p decomposition, increment, p-adic order of plain
//!   integers, and the certified [`PrimeBase`].
//! * [`kummer`] - order of binomial coefficients by carry simulation and by
//!   the equivalent digit-index scan.
//! * [`narayana`] - the divisibility predicate and valuation reports.
//! * [`oracle`] - exact big-integer references for everything above;
//!   independent of the fast path by design so tests mean something.
//! * [`triangle`] - row masks, prime-power row checks, and the ascii, csv
//!   and pbm renderers.

pub mod digits;
pub mod error;
pub mod kummer;
pub mod narayana;
pub mod oracle;
pub mod triangle;

pub use digits::{DigitString, PrimeBase};
pub use error::Error;
pub use kummer::CarryTrace;
pub use narayana::{
    DivisibilityVerdict, MatchedCase, NarayanaQuery, ValuationReport, ViolatedCondition,
};
pub use oracle::ExactInteger;
pub use triangle::{RenderFormat, RenderSpec, RowImage};
