//! Binary linear codes and their ±1 signal rows.
//!
//! The central construction takes a power function f(x) = x^e on GF(2^m) and
//! a primitive element α, forms the 2×n matrix over GF(2^m)
//!
//! ```text
//!   H_f = [ 1     α     α^2    …  α^(n−1)  ]      n = 2^m − 1,
//!         [ f(1)  f(α)  f(α^2) …  f(α^(n−1)) ]
//! ```
//!
//! expands each entry into m bits with respect to the polynomial basis
//! {1, x, …, x^(m−1)}, and uses the resulting 2m×n binary matrix as a
//! generator. For an APN exponent (the cube e = 3 works for every m) the
//! resulting code has dual distance exactly 5, which is the property that
//! makes its ψ-image behave spectrally like a truly random sign matrix.
//! First-order Reed-Muller codes, with dual distance 4, are the matched
//! negative control.
//!
//! Generator rows are packed 64 columns per u64 word; dual-distance checks
//! and codeword encoding run on packed words throughout.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{self, FieldSpec};
use crate::rng::SplitMix64;

/// Hard cap on exhaustive codeword enumeration (2^22 codewords).
pub const ENUMERATION_DIM_CAP: u32 = 22;
/// Largest dual-distance search cap; beyond weight 6 the exact transform
/// rows would overflow 128-bit integers at the supported lengths.
pub const DUAL_DISTANCE_MAX_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodesError {
    #[error("generator has rank {achieved}, expected {expected}")]
    RankDeficient { expected: usize, achieved: usize },
    #[error("dimension k={0} invalid: need 1 <= k <= n={1}")]
    BadDimensions(usize, usize),
    #[error("field construction failed: {0}")]
    Field(#[from] gf::FieldError),
    #[error("APN exponent must be >= 2, got {0}")]
    BadExponent(u64),
    #[error("dimension k={0} exceeds the 2^{ENUMERATION_DIM_CAP} enumeration cap")]
    DimensionTooLarge(usize),
    #[error("dual-distance cap {0} unsupported: caps 5..={DUAL_DISTANCE_MAX_CAP} need k <= {ENUMERATION_DIM_CAP}, and caps above {DUAL_DISTANCE_MAX_CAP} are not implemented")]
    DualCapInfeasible(usize),
    #[error("generator columns wider than 64 bits (k={0}) unsupported by dual-distance search")]
    ColumnsTooWide(usize),
    #[error("invalid code descriptor: {0}")]
    BadDescriptor(String),
}

// ---------------------------------------------------------------------------
// LinearCode
// ---------------------------------------------------------------------------

/// A binary linear code given by a full-rank k×n generator matrix.
///
/// Immutable after construction; all queries are read-only and thread-safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    length: usize,
    dimension: usize,
    words_per_row: usize,
    /// Row-major packed bits: row r occupies
    /// `generator[r*words_per_row .. (r+1)*words_per_row]`,
    /// column j is bit (j % 64) of word j / 64.
    generator: Vec<u64>,
    label: String,
}

/// JSON-serializable code descriptor for reproducibility.
///
/// `generator_rows_hex` encodes each row as lowercase hex of its byte
/// expansion: byte b holds columns 8b..8b+7 with column 8b+i at bit i, and
/// trailing pad bits are zero.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CodeDescriptor {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub generator_rows_hex: Vec<String>,
}

impl LinearCode {
    /// Build from packed rows, validating dimensions and rank.
    pub fn from_packed_rows(
        label: impl Into<String>,
        length: usize,
        rows: Vec<Vec<u64>>,
    ) -> Result<Self, CodesError> {
        let dimension = rows.len();
        if dimension == 0 || dimension > length || length == 0 {
            return Err(CodesError::BadDimensions(dimension, length));
        }
        let wpr = length.div_ceil(64);
        let mut generator = Vec::with_capacity(dimension * wpr);
        for row in &rows {
            assert_eq!(row.len(), wpr, "row width mismatch");
            generator.extend_from_slice(row);
        }
        // clear any stray bits above column n-1
        let tail_bits = length % 64;
        if tail_bits != 0 {
            let mask = (1u64 << tail_bits) - 1;
            for r in 0..dimension {
                generator[r * wpr + wpr - 1] &= mask;
            }
        }
        let code = LinearCode {
            length,
            dimension,
            words_per_row: wpr,
            generator,
            label: label.into(),
        };
        let rank = code.rank();
        if rank != dimension {
            return Err(CodesError::RankDeficient {
                expected: dimension,
                achieved: rank,
            });
        }
        Ok(code)
    }

    /// Build from rows of 0/1 bytes (test and descriptor convenience).
    pub fn from_bit_rows(
        label: impl Into<String>,
        rows: &[Vec<u8>],
    ) -> Result<Self, CodesError> {
        let length = rows.first().map_or(0, Vec::len);
        let packed = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), length, "ragged generator rows");
                pack_bits(row)
            })
            .collect();
        Self::from_packed_rows(label, length, packed)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Packed words of generator row `r`.
    pub fn row(&self, r: usize) -> &[u64] {
        let wpr = self.words_per_row;
        &self.generator[r * wpr..(r + 1) * wpr]
    }

    /// Generator bit at row `r`, column `j`.
    pub fn bit(&self, r: usize, j: usize) -> bool {
        (self.row(r)[j / 64] >> (j % 64)) & 1 == 1
    }

    /// Column `j` of the generator as a k-bit value (bit r = row r entry).
    /// Requires k ≤ 64.
    pub fn column(&self, j: usize) -> u64 {
        debug_assert!(self.dimension <= 64);
        let mut col = 0u64;
        for r in 0..self.dimension {
            col |= u64::from(self.bit(r, j)) << r;
        }
        col
    }

    /// Rank of the generator over GF(2), by elimination on a packed copy.
    fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.dimension).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.length {
            let (w, b) = (col / 64, col % 64);
            let Some(pivot) = (rank..rows.len()).find(|&r| (rows[r][w] >> b) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && (row[w] >> b) & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Encode the message `u` (low k bits) into a packed codeword uG.
    pub fn encode(&self, message: u64) -> Codeword {
        debug_assert!(self.dimension <= 64);
        let mut words = vec![0u64; self.words_per_row];
        for r in 0..self.dimension {
            if (message >> r) & 1 == 1 {
                for (w, g) in words.iter_mut().zip(self.row(r)) {
                    *w ^= g;
                }
            }
        }
        Codeword {
            words,
            len: self.length,
        }
    }

    /// All 2^k codewords, message order 0, 1, …, 2^k − 1.
    ///
    /// The plain counting order is the documented cross-implementation
    /// contract; internally each step XORs only the rows whose message bits
    /// flipped, so full enumeration is O(2^k) row operations amortized.
    pub fn codewords(&self) -> Result<CodewordIter<'_>, CodesError> {
        if self.dimension as u32 > ENUMERATION_DIM_CAP {
            return Err(CodesError::DimensionTooLarge(self.dimension));
        }
        Ok(CodewordIter {
            code: self,
            current: vec![0u64; self.words_per_row],
            prev_message: 0,
            next_message: 0,
            total: 1u64 << self.dimension,
        })
    }

    /// Serializable descriptor with hex-packed generator rows.
    pub fn descriptor(&self) -> CodeDescriptor {
        let bytes_per_row = self.length.div_ceil(8);
        let rows_hex = (0..self.dimension)
            .map(|r| {
                let row = self.row(r);
                let mut s = String::with_capacity(bytes_per_row * 2);
                for byte_idx in 0..bytes_per_row {
                    let word = row[byte_idx / 8];
                    let byte = (word >> ((byte_idx % 8) * 8)) & 0xFF;
                    s.push_str(&format!("{byte:02x}"));
                }
                s
            })
            .collect();
        CodeDescriptor {
            label: self.label.clone(),
            n: self.length,
            k: self.dimension,
            generator_rows_hex: rows_hex,
        }
    }

    /// Rebuild a code from its descriptor (validates rank and dimensions).
    pub fn from_descriptor(desc: &CodeDescriptor) -> Result<Self, CodesError> {
        let bytes_per_row = desc.n.div_ceil(8);
        let wpr = desc.n.div_ceil(64);
        let mut rows = Vec::with_capacity(desc.k);
        for hex in &desc.generator_rows_hex {
            if hex.len() != bytes_per_row * 2 {
                return Err(CodesError::BadDescriptor(format!(
                    "row hex length {} != {}",
                    hex.len(),
                    bytes_per_row * 2
                )));
            }
            let mut words = vec![0u64; wpr];
            for byte_idx in 0..bytes_per_row {
                let byte = u8::from_str_radix(&hex[byte_idx * 2..byte_idx * 2 + 2], 16)
                    .map_err(|e| CodesError::BadDescriptor(e.to_string()))?;
                words[byte_idx / 8] |= u64::from(byte) << ((byte_idx % 8) * 8);
            }
            rows.push(words);
        }
        if rows.len() != desc.k {
            return Err(CodesError::BadDescriptor(format!(
                "{} rows, descriptor says k={}",
                rows.len(),
                desc.k
            )));
        }
        Self::from_packed_rows(desc.label.clone(), desc.n, rows)
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] code \"{}\"", self.length, self.dimension, self.label)
    }
}

/// Pack a slice of 0/1 bytes into little-endian u64 words.
pub fn pack_bits(bits: &[u8]) -> Vec<u64> {
    let mut words = vec![0u64; bits.len().div_ceil(64)];
    for (j, &b) in bits.iter().enumerate() {
        debug_assert!(b <= 1);
        words[j / 64] |= u64::from(b) << (j % 64);
    }
    words
}

// ---------------------------------------------------------------------------
// Codewords and the character map ψ
// ---------------------------------------------------------------------------

/// A codeword as packed bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    words: Vec<u64>,
    len: usize,
}

impl Codeword {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn bit(&self, j: usize) -> bool {
        (self.words[j / 64] >> (j % 64)) & 1 == 1
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |j| self.bit(j))
    }

    /// Build from a 0/1 byte slice.
    pub fn from_bits(bits: &[u8]) -> Self {
        Codeword {
            words: pack_bits(bits),
            len: bits.len(),
        }
    }
}

/// Iterator over all codewords in message counting order.
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    current: Vec<u64>,
    prev_message: u64,
    next_message: u64,
    total: u64,
}

impl CodewordIter<'_> {
    /// Advance to message `msg` by XORing the rows of the flipped bits.
    fn advance_to(&mut self, msg: u64) {
        let mut changed = self.prev_message ^ msg;
        while changed != 0 {
            let r = changed.trailing_zeros() as usize;
            for (w, g) in self.current.iter_mut().zip(self.code.row(r)) {
                *w ^= g;
            }
            changed &= changed - 1;
        }
        self.prev_message = msg;
    }
}

impl Iterator for CodewordIter<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next_message >= self.total {
            return None;
        }
        self.advance_to(self.next_message);
        self.next_message += 1;
        Some(Codeword {
            words: self.current.clone(),
            len: self.code.length(),
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next_message) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CodewordIter<'_> {}

/// Visit `(message, packed codeword)` for every codeword without allocating
/// per item. Same counting order as [`LinearCode::codewords`].
pub(crate) fn visit_codewords<F: FnMut(u64, &[u64])>(
    code: &LinearCode,
    mut f: F,
) -> Result<(), CodesError> {
    if code.dimension() as u32 > ENUMERATION_DIM_CAP {
        return Err(CodesError::DimensionTooLarge(code.dimension()));
    }
    let mut current = vec![0u64; code.words_per_row()];
    let total = 1u64 << code.dimension();
    let mut prev = 0u64;
    f(0, &current);
    for msg in 1..total {
        let mut changed = prev ^ msg;
        while changed != 0 {
            let r = changed.trailing_zeros() as usize;
            for (w, g) in current.iter_mut().zip(code.row(r)) {
                *w ^= g;
            }
            changed &= changed - 1;
        }
        prev = msg;
        f(msg, &current);
    }
    Ok(())
}

/// A length-n vector of ±1 entries, semantically ψ(c) for a codeword c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignalRow {
    values: Vec<i8>,
}

impl SignalRow {
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The character map ψ applied entrywise: 0 ↦ +1, 1 ↦ −1.
pub fn psi_map(codeword: &Codeword) -> SignalRow {
    SignalRow {
        values: codeword.iter_bits().map(|b| if b { -1 } else { 1 }).collect(),
    }
}

/// Draw one signal row ψ(uG) with u uniform over GF(2)^k.
///
/// The message is the top k bits of one generator word, so a reset stream
/// reproduces the row exactly. Uniformity over ψ(C) follows from u ↦ uG
/// being a bijection onto C.
pub fn sample_signal_row(code: &LinearCode, rng: &mut SplitMix64) -> SignalRow {
    let message = rng.next_bits(code.dimension() as u32);
    psi_map(&code.encode(message))
}

// ---------------------------------------------------------------------------
// Code constructions
// ---------------------------------------------------------------------------

/// Code with generator H_f for f(x) = x^exponent: n = 2^m − 1, k = 2m.
///
/// Rows 0..m hold the bit expansions of α^j, rows m..2m those of α^(j·e),
/// for columns j = 0..n−1. The construction is full rank for APN exponents;
/// rank deficiency (e.g. m = 2, where 2m > n) is reported with the achieved
/// rank. APN-ness itself is not validated here — dual distance is the ground
/// truth and is checked by the caller.
pub fn build_apn_code(m: u32, exponent: u64) -> Result<LinearCode, CodesError> {
    if exponent < 2 {
        return Err(CodesError::BadExponent(exponent));
    }
    let spec = FieldSpec::new(m)?;
    let n = spec.group_order() as usize;
    let mb = m as usize;
    let alpha = gf::find_primitive(&spec);
    let wpr = n.div_ceil(64);
    let mut rows = vec![vec![0u64; wpr]; 2 * mb];
    let mut x: u64 = 1; // α^j
    for j in 0..n {
        let fx = gf::ff_pow(x, exponent, &spec);
        for i in 0..mb {
            if (x >> i) & 1 == 1 {
                rows[i][j / 64] |= 1u64 << (j % 64);
            }
            if (fx >> i) & 1 == 1 {
                rows[mb + i][j / 64] |= 1u64 << (j % 64);
            }
        }
        x = gf::ff_mul(x, alpha, &spec);
    }
    LinearCode::from_packed_rows(format!("apn-x{exponent}-m{m}"), n, rows)
}

/// First-order Reed-Muller code RM(1, m): n = 2^m, k = m + 1.
///
/// Generator rows are the all-ones row plus the m coordinate-bit rows
/// (column j gets the m bits of j). Dual distance is 4 — the negative
/// control family.
pub fn build_rm1(m: u32) -> Result<LinearCode, CodesError> {
    if !(gf::MIN_DEGREE..=gf::MAX_DEGREE).contains(&m) {
        return Err(CodesError::Field(gf::FieldError::DegreeOutOfRange(m)));
    }
    let n = 1usize << m;
    let wpr = n.div_ceil(64);
    let mut rows = vec![vec![0u64; wpr]; m as usize + 1];
    for j in 0..n {
        rows[0][j / 64] |= 1u64 << (j % 64);
        for i in 0..m as usize {
            if (j >> i) & 1 == 1 {
                rows[1 + i][j / 64] |= 1u64 << (j % 64);
            }
        }
    }
    LinearCode::from_packed_rows(format!("rm1-m{m}"), n, rows)
}

// ---------------------------------------------------------------------------
// Dual distance
// ---------------------------------------------------------------------------

/// Result of a capped dual-distance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualDistance {
    /// The dual code contains a word of exactly this weight and none smaller.
    Exact(usize),
    /// No dual word of weight ≤ cap exists; the distance is at least this.
    AtLeast(usize),
}

impl fmt::Display for DualDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualDistance::Exact(w) => write!(f, "{w}"),
            DualDistance::AtLeast(w) => write!(f, ">={w}"),
        }
    }
}

impl DualDistance {
    /// True if the distance is known to be ≥ `threshold`.
    pub fn is_at_least(&self, threshold: usize) -> bool {
        match *self {
            DualDistance::Exact(w) => w >= threshold,
            DualDistance::AtLeast(w) => w >= threshold,
        }
    }
}

/// Smallest w ≤ cap such that some w generator columns are linearly
/// dependent over GF(2) — equivalently, the minimum weight of a nonzero
/// dual codeword — or `AtLeast(cap+1)` if there is none.
///
/// Weights 1–4 are column-hash searches: a zero column, duplicate columns,
/// a column equal to the XOR of two others, and two index-disjoint pairs
/// with equal XOR. Weights 5 and 6 are read off the dual weight enumerator,
/// computed exactly from the full codeword weight distribution (so they
/// need k ≤ 22). Caps above 6 are rejected.
pub fn dual_distance(code: &LinearCode, cap: usize) -> Result<DualDistance, CodesError> {
    assert!(cap >= 1, "cap must be >= 1");
    if cap > DUAL_DISTANCE_MAX_CAP {
        return Err(CodesError::DualCapInfeasible(cap));
    }
    if code.dimension() > 64 {
        return Err(CodesError::ColumnsTooWide(code.dimension()));
    }
    let n = code.length();
    let cols: Vec<u64> = (0..n).map(|j| code.column(j)).collect();

    // w = 1: a zero column.
    if cols.iter().any(|&c| c == 0) {
        return Ok(DualDistance::Exact(1));
    }
    if cap == 1 {
        return Ok(DualDistance::AtLeast(2));
    }

    // w = 2: duplicate columns.
    let mut seen = HashSet::with_capacity(n);
    if cols.iter().any(|&c| !seen.insert(c)) {
        return Ok(DualDistance::Exact(2));
    }
    if cap == 2 {
        return Ok(DualDistance::AtLeast(3));
    }

    // w = 3: c_i ^ c_j equals some third column. Columns are distinct and
    // nonzero here, so a hit can only be a column other than i and j.
    for i in 0..n {
        for j in (i + 1)..n {
            if seen.contains(&(cols[i] ^ cols[j])) {
                return Ok(DualDistance::Exact(3));
            }
        }
    }
    if cap == 3 {
        return Ok(DualDistance::AtLeast(4));
    }

    // w = 4: two index-disjoint pairs with equal XOR.
    let mut pair_xor: HashMap<u64, (u32, u32)> = HashMap::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = cols[i] ^ cols[j];
            if let Some(&(a, b)) = pair_xor.get(&v) {
                let (i, j) = (i as u32, j as u32);
                if a != i && a != j && b != i && b != j {
                    return Ok(DualDistance::Exact(4));
                }
            } else {
                pair_xor.insert(v, (i as u32, j as u32));
            }
        }
    }
    if cap == 4 {
        return Ok(DualDistance::AtLeast(5));
    }

    // w >= 5 via the dual weight enumerator.
    if code.dimension() as u32 > ENUMERATION_DIM_CAP {
        return Err(CodesError::DualCapInfeasible(cap));
    }
    let dual_counts = dual_weight_counts(code, cap)?;
    for (w, &count) in dual_counts.iter().enumerate().skip(5).take(cap - 4) {
        if count > 0 {
            return Ok(DualDistance::Exact(w));
        }
    }
    Ok(DualDistance::AtLeast(cap + 1))
}

/// Number of dual codewords of each weight 0..=max_weight, via the
/// MacWilliams identity: B_j = (1/|C|) Σ_w A_w K_j(w), with K_j the binary
/// Krawtchouk polynomial and A the weight distribution of C itself.
/// All arithmetic is exact in i128; for max_weight ≤ 6 and n ≤ 65536 the
/// intermediate sums stay well inside range.
fn dual_weight_counts(code: &LinearCode, max_weight: usize) -> Result<Vec<i128>, CodesError> {
    let n = code.length();
    let mut weight_counts = vec![0u64; n + 1];
    visit_codewords(code, |_, words| {
        let w: u32 = words.iter().map(|x| x.count_ones()).sum();
        weight_counts[w as usize] += 1;
    })?;
    let code_size = 1i128 << code.dimension();
    let mut dual = Vec::with_capacity(max_weight + 1);
    for j in 0..=max_weight {
        let mut sum: i128 = 0;
        for (w, &count) in weight_counts.iter().enumerate() {
            if count == 0 {
                continue;
            }
            sum += i128::from(count) * krawtchouk(j, w, n);
        }
        debug_assert!(sum % code_size == 0, "MacWilliams sum must divide by |C|");
        dual.push(sum / code_size);
    }
    Ok(dual)
}

/// Binary Krawtchouk polynomial K_j(w; n) = Σ_i (−1)^i C(w,i) C(n−w, j−i).
fn krawtchouk(j: usize, w: usize, n: usize) -> i128 {
    let mut sum: i128 = 0;
    for i in 0..=j.min(w) {
        if j - i > n - w {
            continue;
        }
        let term = binomial(w, i) * binomial(n - w, j - i);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: i128 = 1;
    for i in 0..k {
        result = result * (n - i) as i128 / (i + 1) as i128;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    #[test]
    fn apn_code_dimensions() {
        let code = build_apn_code(5, 3).unwrap();
        assert_eq!(code.length(), 31);
        assert_eq!(code.dimension(), 10);
        assert_eq!(code.label(), "apn-x3-m5");

        let code = build_apn_code(3, 3).unwrap();
        assert_eq!(code.length(), 7);
        assert_eq!(code.dimension(), 6);

        for m in 3..=10 {
            let code = build_apn_code(m, 3).unwrap();
            assert_eq!(code.length(), (1 << m) - 1);
            assert_eq!(code.dimension(), 2 * m as usize);
        }
    }

    #[test]
    fn apn_m2_fails_construction() {
        // 2m = 4 rows cannot be independent at length 3.
        assert_eq!(build_apn_code(2, 3), Err(CodesError::BadDimensions(4, 3)));
    }

    #[test]
    fn gold_code_dual_distance_is_5() {
        let code = build_apn_code(5, 3).unwrap();
        assert_eq!(dual_distance(&code, 5).unwrap(), DualDistance::Exact(5));
        let code = build_apn_code(4, 3).unwrap();
        assert_eq!(dual_distance(&code, 5).unwrap(), DualDistance::Exact(5));
    }

    #[test]
    fn rm1_dimensions_and_dual_distance() {
        let code = build_rm1(4).unwrap();
        assert_eq!(code.length(), 16);
        assert_eq!(code.dimension(), 5);
        assert_eq!(dual_distance(&code, 5).unwrap(), DualDistance::Exact(4));
    }

    #[test]
    fn rm1_weights_are_0_half_full() {
        // RM(1,3): all 16 codewords have weight 0, 4, or 8.
        let code = build_rm1(3).unwrap();
        for cw in code.codewords().unwrap() {
            assert!(matches!(cw.weight(), 0 | 4 | 8), "weight {}", cw.weight());
        }
    }

    #[test]
    fn repeated_column_gives_dual_distance_2() {
        let rows = vec![vec![1u8, 1, 0, 1], vec![0, 1, 1, 1]];
        let code = LinearCode::from_bit_rows("dup", &rows).unwrap();
        // columns 1 and 3 both equal (1,1)
        assert_eq!(dual_distance(&code, 5).unwrap(), DualDistance::Exact(2));
    }

    #[test]
    fn zero_column_gives_dual_distance_1() {
        let rows = vec![vec![1u8, 0, 0], vec![0, 0, 1]];
        let code = LinearCode::from_bit_rows("zerocol", &rows).unwrap();
        assert_eq!(dual_distance(&code, 3).unwrap(), DualDistance::Exact(1));
    }

    #[test]
    fn dual_distance_respects_cap() {
        let code = build_apn_code(5, 3).unwrap();
        assert_eq!(dual_distance(&code, 4).unwrap(), DualDistance::AtLeast(5));
        assert_eq!(dual_distance(&code, 2).unwrap(), DualDistance::AtLeast(3));
        assert!(matches!(
            dual_distance(&code, 7),
            Err(CodesError::DualCapInfeasible(7))
        ));
    }

    #[test]
    fn apn_m3_has_dual_distance_7() {
        // [7,6] code: the dual is one-dimensional, spanned by a weight-7 word.
        let code = build_apn_code(3, 3).unwrap();
        assert_eq!(dual_distance(&code, 6).unwrap(), DualDistance::AtLeast(7));
    }

    #[test]
    fn enumerate_tiny_code() {
        let code = LinearCode::from_bit_rows("k1", &[vec![1u8, 1, 0]]).unwrap();
        let words: Vec<Vec<bool>> = code
            .codewords()
            .unwrap()
            .map(|c| c.iter_bits().collect())
            .collect();
        assert_eq!(
            words,
            vec![vec![false, false, false], vec![true, true, false]]
        );
    }

    #[test]
    fn enumerate_counts_distinct_codewords() {
        let code = build_apn_code(3, 3).unwrap();
        let set: HashSet<Codeword> = code.codewords().unwrap().collect();
        assert_eq!(set.len(), 64);
        // zero message comes first and encodes to the zero codeword
        let first = code.codewords().unwrap().next().unwrap();
        assert_eq!(first.weight(), 0);
    }

    #[test]
    fn psi_map_examples() {
        let zero = Codeword::from_bits(&[0, 0, 0]);
        assert_eq!(psi_map(&zero).values(), &[1, 1, 1]);
        let c = Codeword::from_bits(&[1, 0, 1]);
        assert_eq!(psi_map(&c).values(), &[-1, 1, -1]);
    }

    #[test]
    fn psi_product_is_weight_parity() {
        let code = build_apn_code(3, 3).unwrap();
        for cw in code.codewords().unwrap() {
            let prod: i64 = psi_map(&cw).values().iter().map(|&v| i64::from(v)).product();
            let parity = if cw.weight() % 2 == 0 { 1 } else { -1 };
            assert_eq!(prod, parity);
        }
    }

    #[test]
    fn sample_row_is_deterministic() {
        let code = build_apn_code(4, 3).unwrap();
        let row1 = sample_signal_row(&code, &mut rng::SplitMix64::new(77));
        let row2 = sample_signal_row(&code, &mut rng::SplitMix64::new(77));
        assert_eq!(row1, row2);
        assert!(row1.values().iter().all(|&v| v == 1 || v == -1));
    }

    #[test]
    fn encoding_is_bijective() {
        let code = build_apn_code(3, 3).unwrap();
        let mut images = HashSet::new();
        for u in 0..64u64 {
            images.insert(code.encode(u));
        }
        assert_eq!(images.len(), 64);
    }

    #[test]
    fn sampled_codeword_frequencies_chi_square() {
        // 2^16 draws from the [7,6] code: each of the 64 codewords should
        // appear 1024 ± 4σ times, σ = sqrt(2^16 · (1/64)(63/64)) ≈ 31.75.
        let code = build_apn_code(3, 3).unwrap();
        let mut stream = rng::SplitMix64::new(0xC0DE);
        let mut counts = [0u32; 64];
        for _ in 0..1u32 << 16 {
            let msg = stream.next_bits(6);
            counts[msg as usize] += 1;
        }
        for (msg, &c) in counts.iter().enumerate() {
            assert!(
                (i64::from(c) - 1024).abs() < 127,
                "message {msg} count {c} outside 4 sigma"
            );
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let code = build_apn_code(4, 3).unwrap();
        let desc = code.descriptor();
        assert_eq!(desc.n, 15);
        assert_eq!(desc.k, 8);
        assert_eq!(desc.generator_rows_hex.len(), 8);
        let rebuilt = LinearCode::from_descriptor(&desc).unwrap();
        assert_eq!(rebuilt, code);
    }

    #[test]
    fn from_rows_validates_rank() {
        let rows = vec![vec![1u8, 0, 1], vec![1, 0, 1]];
        assert!(matches!(
            LinearCode::from_bit_rows("dep", &rows),
            Err(CodesError::RankDeficient { expected: 2, achieved: 1 })
        ));
    }

    #[test]
    fn enumeration_cap_enforced() {
        // A [30, 23] code exceeds the 2^22 enumeration cap.
        let mut rows = Vec::new();
        for r in 0..23 {
            let mut bits = vec![0u8; 30];
            bits[r] = 1;
            if r > 0 {
                bits[23 + (r % 7)] = 1;
            }
            rows.push(bits);
        }
        let code = LinearCode::from_bit_rows("wide", &rows).unwrap();
        assert!(matches!(
            code.codewords(),
            Err(CodesError::DimensionTooLarge(23))
        ));
    }
}
