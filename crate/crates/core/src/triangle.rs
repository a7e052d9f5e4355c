//! Rows of the mod-p Narayana triangle: divisibility masks, survivor
//! counts, the two prime-power row patterns, and ascii/csv/pbm renderers.
//!
//! A "survivor" is an entry with p not dividing N(n, k); survivors are the
//! inked pixels of the rendered triangle. Output is left-aligned: column k
//! always lands at cell x = k, so the images are bit-exact without any
//! centering arithmetic.

use std::fmt::Write as _;

use crate::digits::PrimeBase;
use crate::error::Error;
use crate::narayana::{narayana_valuation, prime_divides_narayana, NarayanaQuery};

/// One row's divisibility mask; entry k is true iff p does not divide
/// N(n, k). The first and last entries are always true since the row edges
/// equal 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowImage {
    n: u64,
    base: PrimeBase,
    mask: Vec<bool>,
    survivor_count: u64,
}

impl RowImage {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn base(&self) -> PrimeBase {
        self.base
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn survivor_count(&self) -> u64 {
        self.survivor_count
    }
}

/// Evaluates the digit criterion across k = 0..n. The mask is materialized
/// in full, so this is for desk-scale n; huge-n work samples k through
/// `prime_divides_narayana` directly instead.
pub fn build_row(n: u64, base: PrimeBase) -> RowImage {
    assert!(n >= 1, "rows are indexed from n = 1");
    let mask: Vec<bool> = (0..n)
        .map(|k| {
            let q = NarayanaQuery::new(base, n, k).expect("0 <= k < n");
            !prime_divides_narayana(&q).divisible
        })
        .collect();
    let survivor_count = mask.iter().filter(|&&s| s).count() as u64;
    debug_assert!(
        mask[0] && mask[n as usize - 1],
        "edge entries equal 1 and must survive"
    );
    RowImage {
        n,
        base,
        mask,
        survivor_count,
    }
}

fn prime_power(base: PrimeBase, m: u32) -> Result<u64, Error> {
    if m == 0 {
        return Err(Error::ZeroExponent);
    }
    base.get().checked_pow(m).ok_or(Error::Overflow)
}

/// True iff every entry of row p^m - 1 survives. Guaranteed true by the
/// digit criterion (every digit of p^m - 1 is p - 1); evaluating it is a
/// self-check, not a computation with an unknown answer.
pub fn check_corollary_notdiv(base: PrimeBase, m: u32) -> Result<bool, Error> {
    let n = prime_power(base, m)? - 1;
    let row = build_row(n, base);
    Ok(row.survivor_count() == n)
}

/// True iff row p^m keeps exactly its edge entries k = 0 and k = p^m - 1.
/// Also guaranteed true: the low-digit condition forces k to an edge.
pub fn check_corollary_div(base: PrimeBase, m: u32) -> Result<bool, Error> {
    let n = prime_power(base, m)?;
    let row = build_row(n, base);
    Ok(row.survivor_count() == 2 && row.mask()[0] && row.mask()[n as usize - 1])
}

/// Output format for triangle renders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Csv,
    Pbm,
}

/// How many rows to draw and which symbols mark survivors in ascii output.
/// Alignment is always left: column k at cell x = k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    format: RenderFormat,
    rows: u64,
    survivor_symbol: char,
    nonsurvivor_symbol: char,
}

impl RenderSpec {
    /// Requires rows >= 1 and two distinct printable symbols. The symbols
    /// only matter for ascii output but are validated regardless, so a spec
    /// is valid for any format it might be used with.
    pub fn new(
        format: RenderFormat,
        rows: u64,
        survivor_symbol: char,
        nonsurvivor_symbol: char,
    ) -> Result<Self, Error> {
        if rows == 0 {
            return Err(Error::ZeroRows);
        }
        if survivor_symbol == nonsurvivor_symbol
            || !survivor_symbol.is_ascii_graphic()
            || !nonsurvivor_symbol.is_ascii_graphic()
        {
            return Err(Error::BadSymbols {
                survivor: survivor_symbol,
                nonsurvivor: nonsurvivor_symbol,
            });
        }
        Ok(RenderSpec {
            format,
            rows,
            survivor_symbol,
            nonsurvivor_symbol,
        })
    }

    pub fn format(&self) -> RenderFormat {
        self.format
    }

    pub fn rows(&self) -> u64 {
        self.rows
    }

    pub fn survivor_symbol(&self) -> char {
        self.survivor_symbol
    }

    pub fn nonsurvivor_symbol(&self) -> char {
        self.nonsurvivor_symbol
    }
}

/// Renders rows 1..=spec.rows into a byte stream. Deterministic: identical
/// specs produce byte-identical output.
///
/// * ascii: one line per row, each `rows` cells wide, positions past the
///   row's length filled with spaces.
/// * csv: header `n,k,nondivisible,order`, then one record per entry with
///   nondivisible in {0,1} and order = the p-adic order of N(n, k).
/// * pbm: plain P1, `rows` x `rows`, pixel 1 where the entry survives and 0
///   elsewhere (including padding), tokens single-space separated.
pub fn render(spec: &RenderSpec, base: PrimeBase) -> Vec<u8> {
    let mut out = String::new();
    match spec.format() {
        RenderFormat::Ascii => {
            for n in 1..=spec.rows() {
                push_ascii_line(&mut out, &build_row(n, base), spec, spec.rows());
            }
        }
        RenderFormat::Csv => {
            out.push_str("n,k,nondivisible,order\n");
            for n in 1..=spec.rows() {
                push_csv_records(&mut out, n, base);
            }
        }
        RenderFormat::Pbm => {
            let _ = write!(out, "P1\n{} {}\n", spec.rows(), spec.rows());
            for n in 1..=spec.rows() {
                push_pbm_line(&mut out, &build_row(n, base), spec.rows());
            }
        }
    }
    out.into_bytes()
}

/// Renders the single row n = spec.rows with the same cell conventions as
/// `render`: ascii is one unpadded line, csv carries the header plus that
/// row's records, pbm is an n x 1 image.
pub fn render_row(spec: &RenderSpec, base: PrimeBase) -> Vec<u8> {
    let n = spec.rows();
    let mut out = String::new();
    match spec.format() {
        RenderFormat::Ascii => {
            push_ascii_line(&mut out, &build_row(n, base), spec, n);
        }
        RenderFormat::Csv => {
            out.push_str("n,k,nondivisible,order\n");
            push_csv_records(&mut out, n, base);
        }
        RenderFormat::Pbm => {
            let _ = write!(out, "P1\n{n} 1\n");
            push_pbm_line(&mut out, &build_row(n, base), n);
        }
    }
    out.into_bytes()
}

fn push_ascii_line(out: &mut String, row: &RowImage, spec: &RenderSpec, width: u64) {
    for &survives in row.mask() {
        out.push(if survives {
            spec.survivor_symbol()
        } else {
            spec.nonsurvivor_symbol()
        });
    }
    for _ in row.n()..width {
        out.push(' ');
    }
    out.push('\n');
}

fn push_pbm_line(out: &mut String, row: &RowImage, width: u64) {
    for x in 0..width as usize {
        if x > 0 {
            out.push(' ');
        }
        out.push(if row.mask().get(x).copied().unwrap_or(false) {
            '1'
        } else {
            '0'
        });
    }
    out.push('\n');
}

fn push_csv_records(out: &mut String, n: u64, base: PrimeBase) {
    let row = build_row(n, base);
    for (k, &survives) in row.mask().iter().enumerate() {
        let q = NarayanaQuery::new(base, n, k as u64).expect("0 <= k < n");
        let order = narayana_valuation(&q).omega_narayana;
        let _ = writeln!(out, "{n},{k},{},{order}", survives as u8);
    }
}
