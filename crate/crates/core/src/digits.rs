//! Base-p digit decomposition of 64-bit integers.
//!
//! Digit strings are little-endian: index `i` holds the coefficient of
//! `p^i`. Trailing zeros are padding and never change the represented
//! value, which is what lets two strings of different lengths be compared
//! position by position after padding the shorter one.

use crate::error::Error;

/// Miller-Rabin witnesses that decide primality correctly for every
/// n < 3.3 * 10^24, which covers the whole u64 range.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const SMALL_PRIMES: [u64; 18] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
];

/// A prime modulus for digit arithmetic, certified at construction.
///
/// Every downstream result rests on p actually being prime, so the
/// constructor runs a deterministic test rather than trusting the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeBase(u64);

impl PrimeBase {
    /// Certifies `p` prime; composite inputs and p < 2 are rejected.
    pub fn new(p: u64) -> Result<Self, Error> {
        if is_prime_u64(p) {
            Ok(PrimeBase(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for PrimeBase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic over all of u64: trial division by the primes up to 61,
/// then strong-probable-prime rounds for the fixed witness set.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &SMALL_PRIMES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    // survivors below 67^2 have no prime factor <= sqrt(n)
    if n < 67 * 67 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Little-endian base-p digits of a nonnegative integer. Never empty;
/// zero is the single digit (0).
#[derive(Clone, Debug)]
pub struct DigitString {
    base: PrimeBase,
    digits: Vec<u64>,
}

impl DigitString {
    /// Builds a digit string from raw little-endian digits.
    pub fn new(base: PrimeBase, digits: Vec<u64>) -> Result<Self, Error> {
        if digits.is_empty() {
            return Err(Error::EmptyDigits);
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= base.get()) {
            return Err(Error::DigitOutOfRange {
                digit: d,
                base: base.get(),
            });
        }
        Ok(DigitString { base, digits })
    }

    pub fn base(&self) -> PrimeBase {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Zero-pads in place so at least `len` digits are present.
    pub fn pad_to(&mut self, len: usize) {
        if self.digits.len() < len {
            self.digits.resize(len, 0);
        }
    }
}

/// Value equality: same base and same represented integer, so padding with
/// trailing zeros never distinguishes two strings.
impl PartialEq for DigitString {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && significant(&self.digits) == significant(&other.digits)
    }
}

impl Eq for DigitString {}

fn significant(digits: &[u64]) -> &[u64] {
    let end = digits.iter().rposition(|&d| d != 0).map_or(0, |i| i + 1);
    &digits[..end]
}

/// Base-p digits of `n`, zero-padded to at least `min_length`.
/// Zero decomposes to the single digit (0), never to an empty string.
pub fn decompose(n: u64, base: PrimeBase, min_length: usize) -> DigitString {
    let p = base.get();
    let needed = digit_count(n, p).max(min_length);
    let mut digits = Vec::with_capacity(needed);
    let mut rest = n;
    loop {
        digits.push(rest % p);
        rest /= p;
        if rest == 0 {
            break;
        }
    }
    digits.resize(needed, 0);
    DigitString { base, digits }
}

fn digit_count(n: u64, p: u64) -> usize {
    if n == 0 {
        1
    } else {
        n.ilog(p) as usize + 1
    }
}

/// Sum of d_i * p^i. Fails with `Error::Overflow` when the value leaves the
/// u64 range; zero padding beyond that range is still fine.
pub fn reconstruct(d: &DigitString) -> Result<u64, Error> {
    let p = d.base().get();
    let mut acc: u64 = 0;
    // p^i, or None once the power itself leaves u64
    let mut scale: Option<u64> = Some(1);
    for (i, &digit) in d.digits().iter().enumerate() {
        if i > 0 {
            scale = scale.and_then(|s| s.checked_mul(p));
        }
        if digit == 0 {
            continue;
        }
        let term = scale
            .and_then(|s| digit.checked_mul(s))
            .ok_or(Error::Overflow)?;
        acc = acc.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Digit-wise successor: zeros below the first non-(p-1) digit, +1 at that
/// digit, everything above untouched. When every digit is p-1 the string
/// rolls over and grows by one digit.
pub fn increment(d: &DigitString) -> DigitString {
    let p = d.base().get();
    let mut digits = d.digits().to_vec();
    match digits.iter().position(|&x| x != p - 1) {
        Some(j) => {
            for x in &mut digits[..j] {
                *x = 0;
            }
            digits[j] += 1;
        }
        None => {
            for x in &mut digits[..] {
                *x = 0;
            }
            digits.push(1);
        }
    }
    DigitString {
        base: d.base(),
        digits,
    }
}

/// Largest e with p^e | n, i.e. the number of low zero digits of n in base
/// p. Rejects n = 0, whose order is undefined.
pub fn valuation(n: u64, base: PrimeBase) -> Result<u32, Error> {
    if n == 0 {
        return Err(Error::ValuationOfZero);
    }
    let p = base.get();
    let mut e = 0;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn base(p: u64) -> PrimeBase {
        PrimeBase::new(p).unwrap()
    }

    #[test]
    fn prime_base_accepts_primes() {
        for p in [2, 3, 5, 7, 13, 97, 2_147_483_647, (1 << 61) - 1] {
            assert!(PrimeBase::new(p).is_ok(), "{p} should be accepted");
        }
    }

    #[test]
    fn prime_base_rejects_composites_and_small() {
        for p in [0, 1, 4, 6, 9, 91, 6703 * 6701, u64::MAX] {
            assert_eq!(PrimeBase::new(p), Err(Error::NotPrime(p)));
        }
        // strong pseudoprime to base 2, caught by the other witnesses
        assert!(PrimeBase::new(2047).is_err());
        // Carmichael number
        assert!(PrimeBase::new(561).is_err());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(0, base(2), 1).digits(), &[0]);
        assert_eq!(decompose(7, base(2), 0).digits(), &[1, 1, 1]);
        assert_eq!(decompose(5, base(3), 3).digits(), &[2, 1, 0]);
        assert_eq!(decompose(0, base(5), 0).digits(), &[0]);
    }

    #[test]
    fn reconstruct_examples() {
        let d = DigitString::new(base(2), vec![1, 1, 1]).unwrap();
        assert_eq!(reconstruct(&d), Ok(7));
        let d = DigitString::new(base(5), vec![0]).unwrap();
        assert_eq!(reconstruct(&d), Ok(0));
        let d = DigitString::new(base(3), vec![2, 1, 0]).unwrap();
        assert_eq!(reconstruct(&d), Ok(5));
    }

    #[test]
    fn reconstruct_overflow_is_reported() {
        // 2^64 needs 65 binary digits
        let mut digits = vec![0u64; 65];
        digits[64] = 1;
        let d = DigitString::new(base(2), digits).unwrap();
        assert_eq!(reconstruct(&d), Err(Error::Overflow));
        // but zero padding past the range is harmless
        let d = decompose(u64::MAX, base(2), 100);
        assert_eq!(reconstruct(&d), Ok(u64::MAX));
    }

    #[test]
    fn increment_examples() {
        let d = DigitString::new(base(2), vec![1, 1]).unwrap();
        assert_eq!(increment(&d).digits(), &[0, 0, 1]);
        let d = DigitString::new(base(2), vec![0, 1]).unwrap();
        assert_eq!(increment(&d).digits(), &[1, 1]);
        let d = DigitString::new(base(3), vec![2, 2, 1]).unwrap();
        assert_eq!(increment(&d).digits(), &[0, 0, 2]);
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(8, base(2)), Ok(3));
        assert_eq!(valuation(7, base(2)), Ok(0));
        assert_eq!(valuation(45, base(3)), Ok(2));
        assert_eq!(valuation(0, base(7)), Err(Error::ValuationOfZero));
    }

    #[test]
    fn digit_string_rejects_bad_digits() {
        assert_eq!(
            DigitString::new(base(3), vec![1, 3]),
            Err(Error::DigitOutOfRange { digit: 3, base: 3 })
        );
        assert_eq!(DigitString::new(base(3), vec![]), Err(Error::EmptyDigits));
    }

    #[test]
    fn padding_does_not_change_value_equality() {
        let a = decompose(42, base(5), 0);
        let b = decompose(42, base(5), 12);
        assert_eq!(a, b);
        assert_ne!(a, decompose(43, base(5), 0));
    }

    fn prime_pool() -> impl Strategy<Value = u64> {
        prop_oneof![
            Just(2u64),
            Just(3),
            Just(5),
            Just(7),
            Just(13),
            Just(97),
            Just(2_147_483_647),
        ]
    }

    proptest! {
        #[test]
        fn round_trip(n in 0u64..(1 << 63), p in prime_pool(), pad in 0usize..80) {
            let b = base(p);
            let d = decompose(n, b, pad);
            prop_assert!(d.digits().len() >= pad.max(1));
            prop_assert_eq!(reconstruct(&d).unwrap(), n);
        }

        #[test]
        fn digits_stay_below_base(n in 0u64..u64::MAX, p in prime_pool()) {
            let b = base(p);
            prop_assert!(decompose(n, b, 0).digits().iter().all(|&d| d < p));
        }

        #[test]
        fn increment_matches_plus_one(n in 0u64..(u64::MAX - 1), p in prime_pool(), pad in 0usize..70) {
            let b = base(p);
            let d = decompose(n, b, pad);
            let succ = increment(&d);
            prop_assert_eq!(reconstruct(&succ).unwrap(), n + 1);
            prop_assert_eq!(&succ, &decompose(n + 1, b, 0));
            let grew = d.digits().iter().all(|&x| x == p - 1);
            prop_assert_eq!(succ.digits().len(), d.digits().len() + grew as usize);
        }

        #[test]
        fn valuation_counts_low_zero_digits(n in 1u64..u64::MAX, p in prime_pool()) {
            let b = base(p);
            let e = valuation(n, b).unwrap() as usize;
            let d = decompose(n, b, 0);
            let low_zeros = d.digits().iter().position(|&x| x != 0).unwrap();
            prop_assert_eq!(e, low_zeros);
        }
    }
}
