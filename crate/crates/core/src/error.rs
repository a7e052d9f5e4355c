use std::fmt;

/// Errors from construction and query validation on the fast path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The requested base failed the primality check (includes p < 2).
    NotPrime(u64),
    /// A raw digit lies outside [0, p-1] for its base.
    DigitOutOfRange { digit: u64, base: u64 },
    /// Digit strings always hold at least one digit.
    EmptyDigits,
    /// The value does not fit the 64-bit fast-path integer range.
    Overflow,
    /// The p-adic order of 0 is undefined.
    ValuationOfZero,
    /// Binomial valuations require k <= n.
    KExceedsN { n: u64, k: u64 },
    /// Narayana queries require 1 <= n and 0 <= k <= n-1.
    QueryOutOfDomain { n: u64, k: u64 },
    /// Render specs draw at least one row.
    ZeroRows,
    /// Render symbols must be distinct printable characters.
    BadSymbols { survivor: char, nonsurvivor: char },
    /// Prime-power row checks take exponents m >= 1.
    ZeroExponent,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DigitOutOfRange { digit, base } => {
                write!(f, "digit {digit} out of range for base {base}")
            }
            Error::EmptyDigits => write!(f, "digit string must hold at least one digit"),
            Error::Overflow => write!(f, "value exceeds the 64-bit fast-path range"),
            Error::ValuationOfZero => write!(f, "p-adic order of 0 is undefined"),
            Error::KExceedsN { n, k } => write!(f, "k = {k} exceeds n = {n}"),
            Error::QueryOutOfDomain { n, k } => {
                write!(f, "query (n = {n}, k = {k}) violates 1 <= n, 0 <= k <= n-1")
            }
            Error::ZeroRows => write!(f, "render spec needs rows >= 1"),
            Error::BadSymbols { survivor, nonsurvivor } => write!(
                f,
                "render symbols {survivor:?} and {nonsurvivor:?} must be distinct printable characters"
            ),
            Error::ZeroExponent => write!(f, "exponent m must be >= 1"),
        }
    }
}

impl std::error::Error for Error {}
