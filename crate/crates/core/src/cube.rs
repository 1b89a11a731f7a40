//! Boolean functions on `{0,1}^n` stored as dense bitset truth tables.
//!
//! Point encoding is fixed throughout the crate: coordinate `i` (1-based)
//! carries bit weight `2^(i-1)`, so the point `x` has table index
//! `k = sum_i x_i * 2^(i-1)`. A point is identified with the subset
//! `{i : x_i = 1}` of `[n]`.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not};

use thiserror::Error;

/// Largest supported dimension (a table of `2^24` bits).
pub const MAX_DIMENSION: usize = 24;

/// Largest dimension for which every function is indexed by a `u64` table.
pub const MAX_SMALL_DIMENSION: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("dimension {0} out of range 1..={MAX_DIMENSION}")]
    DimensionOutOfRange(usize),
    #[error("truth table has {actual} entries, expected {expected}")]
    TableLengthMismatch { expected: usize, actual: usize },
    #[error("coordinate {coordinate} out of range 1..={n}")]
    CoordinateOutOfRange { coordinate: usize, n: usize },
    #[error("cannot restrict a function of a single variable")]
    RestrictSingleVariable,
    #[error("enumeration of dimension {n} is not supported (limit {limit})")]
    EnumerationTooLarge { n: usize, limit: usize },
    #[error("malformed truth table: {0}")]
    Malformed(String),
}

// Masks selecting the points with x_c = 0 inside one 64-bit word, c = 0..5.
const LOWER_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

fn word_count(n: usize) -> usize {
    if n <= MAX_SMALL_DIMENSION {
        1
    } else {
        1 << (n - MAX_SMALL_DIMENSION)
    }
}

fn tail_mask(n: usize) -> u64 {
    if n >= MAX_SMALL_DIMENSION {
        u64::MAX
    } else {
        (1u64 << (1usize << n)) - 1
    }
}

fn check_dimension(n: usize) -> Result<(), CubeError> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(CubeError::DimensionOutOfRange(n))
    }
}

/// A Boolean function `f : {0,1}^n -> {0,1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    /// The constant function with value `value`.
    pub fn constant(n: usize, value: bool) -> Result<Self, CubeError> {
        check_dimension(n)?;
        let fill = if value { tail_mask(n) } else { 0 };
        Ok(Self {
            n,
            words: vec![fill; word_count(n)],
        })
    }

    /// Builds a function from its full truth table; `table[k]` is the value at index `k`.
    pub fn from_table(n: usize, table: &[bool]) -> Result<Self, CubeError> {
        check_dimension(n)?;
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(CubeError::TableLengthMismatch {
                expected,
                actual: table.len(),
            });
        }
        let mut words = vec![0u64; word_count(n)];
        for (k, &bit) in table.iter().enumerate() {
            if bit {
                words[k >> 6] |= 1 << (k & 63);
            }
        }
        Ok(Self { n, words })
    }

    /// Builds a function from a string of `'0'`/`'1'` characters, index 0 first.
    pub fn from_bit_str(n: usize, bits: &str) -> Result<Self, CubeError> {
        let table = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(CubeError::Malformed(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_table(n, &table)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Result<Self, CubeError> {
        check_dimension(n)?;
        let mut words = vec![0u64; word_count(n)];
        for k in 0..1usize << n {
            if f(k) {
                words[k >> 6] |= 1 << (k & 63);
            }
        }
        Ok(Self { n, words })
    }

    pub fn from_points(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Self, CubeError> {
        let mut f = Self::constant(n, false)?;
        for x in points {
            if x >= f.len() {
                return Err(CubeError::Malformed(format!("point {x} outside the {n}-cube")));
            }
            f.words[x >> 6] |= 1 << (x & 63);
        }
        Ok(f)
    }

    /// Function whose truth table is the low `2^n` bits of `table` (requires `n <= 6`).
    pub fn from_u64(n: usize, table: u64) -> Result<Self, CubeError> {
        check_dimension(n)?;
        if n > MAX_SMALL_DIMENSION {
            return Err(CubeError::DimensionOutOfRange(n));
        }
        let mask = tail_mask(n);
        if table & !mask != 0 {
            return Err(CubeError::TableLengthMismatch {
                expected: 1 << n,
                actual: 64 - table.leading_zeros() as usize,
            });
        }
        Ok(Self { n, words: vec![table] })
    }

    /// The dictatorship `1_{x_i = 1}`.
    pub fn dictator(n: usize, i: usize) -> Result<Self, CubeError> {
        check_dimension(n)?;
        check_coordinate(n, i)?;
        Self::from_fn(n, |x| x >> (i - 1) & 1 == 1)
    }

    /// The antidictatorship `1_{x_i = 0}`.
    pub fn antidictator(n: usize, i: usize) -> Result<Self, CubeError> {
        Ok(!&Self::dictator(n, i)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of points of the cube, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The table as a single word, for `n <= 6`.
    pub fn as_u64(&self) -> Option<u64> {
        (self.n <= MAX_SMALL_DIMENSION).then(|| self.words[0])
    }

    pub fn get(&self, x: usize) -> bool {
        debug_assert!(x < self.len());
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    /// Number of points where `f = 1`.
    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some((wi << 6) | b)
            })
        })
    }

    /// Counts of one-points by Hamming weight; entry `k` counts `x` with `|x| = k`.
    pub fn weight_profile(&self) -> Vec<u64> {
        let mut profile = vec![0u64; self.n + 1];
        for x in self.iter_ones() {
            profile[x.count_ones() as usize] += 1;
        }
        profile
    }

    /// `x -> f(x xor e_i)`.
    pub fn flip_coordinate(&self, i: usize) -> Result<Self, CubeError> {
        check_coordinate(self.n, i)?;
        Ok(self.flip_unchecked(i - 1))
    }

    pub(crate) fn flip_unchecked(&self, c: usize) -> Self {
        let words = if c < 6 {
            let shift = 1u32 << c;
            let m = LOWER_MASKS[c];
            self.words
                .iter()
                .map(|&w| ((w >> shift) & m) | ((w & m) << shift))
                .collect()
        } else {
            let stride = 1usize << (c - 6);
            (0..self.words.len()).map(|j| self.words[j ^ stride]).collect()
        };
        Self { n: self.n, words }
    }

    /// Indicator of the lower half-cube `{x : x_i = 0}`, as raw words.
    pub(crate) fn lower_half_unchecked(n: usize, c: usize) -> Self {
        let words = if c < 6 {
            vec![LOWER_MASKS[c] & tail_mask(n); word_count(n)]
        } else {
            (0..word_count(n))
                .map(|j| if j >> (c - 6) & 1 == 0 { u64::MAX } else { 0 })
                .collect()
        };
        Self { n, words }
    }

    /// Lower endpoints `x` (with `x_i = 0`) of the boundary edges in direction `i`.
    pub(crate) fn boundary_lower_unchecked(&self, c: usize) -> Self {
        let flipped = self.flip_unchecked(c);
        let lower = Self::lower_half_unchecked(self.n, c);
        &(self ^ &flipped) & &lower
    }

    /// The restriction `f_{i -> b}` as a function of the remaining `n - 1`
    /// coordinates, with coordinates above `i` renumbered downward.
    pub fn restrict(&self, i: usize, b: bool) -> Result<Self, CubeError> {
        check_coordinate(self.n, i)?;
        if self.n == 1 {
            return Err(CubeError::RestrictSingleVariable);
        }
        let c = i - 1;
        let low = (1usize << c) - 1;
        let fixed = usize::from(b) << c;
        Self::from_fn(self.n - 1, |y| {
            let x = (y & low) | ((y & !low) << 1) | fixed;
            self.get(x)
        })
    }

    /// `f~(x) = 1 - f(x)`.
    pub fn complement(&self) -> Self {
        !self
    }

    /// `f*(x) = 1 - f(x bar)` where `x bar` flips every coordinate.
    pub fn dual(&self) -> Self {
        let mut g = self.clone();
        for c in 0..self.n {
            g = g.flip_unchecked(c);
        }
        !&g
    }

    /// True iff raising any coordinate of any point never lowers `f`.
    pub fn is_monotone(&self) -> bool {
        (0..self.n).all(|c| {
            let up = self.flip_unchecked(c);
            let lower = Self::lower_half_unchecked(self.n, c);
            self.words
                .iter()
                .zip(&up.words)
                .zip(&lower.words)
                .all(|((&f, &u), &l)| f & l & !u == 0)
        })
    }

    /// True iff `self` is contained in `other` pointwise.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

fn check_coordinate(n: usize, i: usize) -> Result<(), CubeError> {
    if (1..=n).contains(&i) {
        Ok(())
    } else {
        Err(CubeError::CoordinateOutOfRange { coordinate: i, n })
    }
}

impl BitAnd for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitand(self, rhs: Self) -> BooleanFunction {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl BitOr for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitor(self, rhs: Self) -> BooleanFunction {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl BitXor for &BooleanFunction {
    type Output = BooleanFunction;
    fn bitxor(self, rhs: Self) -> BooleanFunction {
        self.zip_with(rhs, |a, b| a ^ b)
    }
}

impl Not for &BooleanFunction {
    type Output = BooleanFunction;
    fn not(self) -> BooleanFunction {
        let mask = tail_mask(self.n);
        BooleanFunction {
            n: self.n,
            words: self.words.iter().map(|&w| !w & mask).collect(),
        }
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, {})", self.n, to_hex(self))
    }
}

/// One coordinate of a subcube pattern. The derived order `Zero < One < Free`
/// is the tie-breaking order used by nearest-subcube searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
    Free,
}

/// A subcube of `{0,1}^n`, given as a pattern over `{0, 1, *}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subcube {
    pattern: Vec<Symbol>,
}

impl Subcube {
    pub fn new(pattern: Vec<Symbol>) -> Result<Self, CubeError> {
        check_dimension(pattern.len())?;
        Ok(Self { pattern })
    }

    /// The whole cube.
    pub fn full(n: usize) -> Result<Self, CubeError> {
        Self::new(vec![Symbol::Free; n])
    }

    pub fn n(&self) -> usize {
        self.pattern.len()
    }

    pub fn pattern(&self) -> &[Symbol] {
        &self.pattern
    }

    /// Number of coordinates fixed to `One`.
    pub fn ones(&self) -> usize {
        self.pattern.iter().filter(|&&s| s == Symbol::One).count()
    }

    /// Number of coordinates fixed to `Zero`.
    pub fn zeros(&self) -> usize {
        self.pattern.iter().filter(|&&s| s == Symbol::Zero).count()
    }

    pub fn fixed_count(&self) -> usize {
        self.ones() + self.zeros()
    }

    pub fn is_monotone_increasing(&self) -> bool {
        self.zeros() == 0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.pattern.iter().enumerate().all(|(c, s)| match s {
            Symbol::Free => true,
            Symbol::One => x >> c & 1 == 1,
            Symbol::Zero => x >> c & 1 == 0,
        })
    }

    pub fn indicator(&self) -> BooleanFunction {
        let (mut care, mut value) = (0usize, 0usize);
        for (c, s) in self.pattern.iter().enumerate() {
            match s {
                Symbol::Free => {}
                Symbol::One => {
                    care |= 1 << c;
                    value |= 1 << c;
                }
                Symbol::Zero => care |= 1 << c,
            }
        }
        BooleanFunction::from_fn(self.n(), |x| x & care == value)
            .expect("subcube dimension validated at construction")
    }
}

impl fmt::Display for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.pattern {
            f.write_str(match s {
                Symbol::Zero => "0",
                Symbol::One => "1",
                Symbol::Free => "*",
            })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Subcube {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pattern = s
            .chars()
            .map(|c| match c {
                '0' => Ok(Symbol::Zero),
                '1' => Ok(Symbol::One),
                '*' => Ok(Symbol::Free),
                other => Err(CubeError::Malformed(format!("bad pattern symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(pattern)
    }
}

/// All `3^n` subcubes, in lexicographic pattern order (coordinate 1 first,
/// `Zero < One < Free`).
pub fn enumerate_subcubes(n: usize) -> impl Iterator<Item = Subcube> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut pattern = vec![Symbol::Free; n];
        for slot in pattern.iter_mut().rev() {
            *slot = match code % 3 {
                0 => Symbol::Zero,
                1 => Symbol::One,
                _ => Symbol::Free,
            };
            code /= 3;
        }
        Subcube { pattern }
    })
}

/// The `2^n` monotone increasing subcubes (patterns over `{1, *}`), in the same order.
pub fn enumerate_monotone_subcubes(n: usize) -> impl Iterator<Item = Subcube> {
    enumerate_subcubes(n).filter(Subcube::is_monotone_increasing)
}

/// The function whose `u64` truth table is `index`; enumerates all functions for `n <= 5`.
pub fn function_from_index(n: usize, index: u64) -> Result<BooleanFunction, CubeError> {
    BooleanFunction::from_u64(n, index)
}

/// Number of Boolean functions on `n <= 5` variables, `2^(2^n)`.
pub fn function_count(n: usize) -> Result<u64, CubeError> {
    if !(1..=5).contains(&n) {
        return Err(CubeError::EnumerationTooLarge { n, limit: 5 });
    }
    Ok(1u64 << (1 << n))
}

/// Every monotone increasing function on `n <= 5` variables, sorted by truth table.
///
/// Built recursively: `f` is monotone iff its halves `f_{n->0} <= f_{n->1}`
/// are both monotone.
pub fn monotone_functions(n: usize) -> Result<Vec<BooleanFunction>, CubeError> {
    if !(1..=5).contains(&n) {
        return Err(CubeError::EnumerationTooLarge { n, limit: 5 });
    }
    let mut tables: Vec<u64> = vec![0b00, 0b10, 0b11];
    for m in 2..=n {
        let half = 1u32 << (m - 1);
        let mut next = Vec::new();
        for &lo in &tables {
            for &hi in &tables {
                if lo & !hi == 0 {
                    next.push(lo | hi << half);
                }
            }
        }
        next.sort_unstable();
        tables = next;
    }
    tables
        .into_iter()
        .map(|t| BooleanFunction::from_u64(n, t))
        .collect()
}

/// Serialises the truth table in the file format's hex encoding: `ceil(2^n / 4)`
/// hex digits, least significant digit first.
pub fn to_hex(f: &BooleanFunction) -> String {
    let digits = f.len().div_ceil(4);
    (0..digits)
        .map(|d| {
            let nibble = (f.words[(d * 4) >> 6] >> ((d * 4) & 63)) & 0xF;
            char::from_digit(nibble as u32, 16).expect("nibble < 16")
        })
        .collect()
}

pub fn from_hex(n: usize, hex: &str) -> Result<BooleanFunction, CubeError> {
    check_dimension(n)?;
    let digits = (1usize << n).div_ceil(4);
    let hex = hex.trim();
    if hex.len() != digits {
        return Err(CubeError::Malformed(format!(
            "expected {digits} hex digits for n={n}, found {}",
            hex.len()
        )));
    }
    let mut f = BooleanFunction::constant(n, false)?;
    for (d, ch) in hex.chars().enumerate() {
        let nibble = ch
            .to_digit(16)
            .ok_or_else(|| CubeError::Malformed(format!("bad hex digit {ch:?}")))? as u64;
        f.words[(d * 4) >> 6] |= nibble << ((d * 4) & 63);
    }
    if f.words[0] & !tail_mask(n) != 0 {
        return Err(CubeError::Malformed("bits set beyond 2^n".into()));
    }
    Ok(f)
}

/// Two-line truth-table file: `n=<int>` then the hex table.
pub fn write_truth_table(f: &BooleanFunction) -> String {
    format!("n={}\n{}\n", f.n, to_hex(f))
}

pub fn read_truth_table(text: &str) -> Result<BooleanFunction, CubeError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CubeError::Malformed("empty input".into()))?;
    let n = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| CubeError::Malformed(format!("bad header {header:?}")))?;
    let body = lines
        .next()
        .ok_or_else(|| CubeError::Malformed("missing table line".into()))?;
    if lines.next().is_some() {
        return Err(CubeError::Malformed("trailing content after table".into()));
    }
    from_hex(n, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn majority3() -> BooleanFunction {
        BooleanFunction::from_fn(3, |x| x.count_ones() >= 2).unwrap()
    }

    #[test]
    fn make_function_examples() {
        let f = BooleanFunction::from_bit_str(1, "01").unwrap();
        assert!(!f.get(0) && f.get(1));
        assert_eq!(f, BooleanFunction::dictator(1, 1).unwrap());
        let one = BooleanFunction::from_bit_str(2, "1111").unwrap();
        assert_eq!(one, BooleanFunction::constant(2, true).unwrap());
        assert_eq!(
            BooleanFunction::from_bit_str(2, "111"),
            Err(CubeError::TableLengthMismatch { expected: 4, actual: 3 })
        );
        assert_eq!(
            BooleanFunction::constant(25, false),
            Err(CubeError::DimensionOutOfRange(25))
        );
        assert!(BooleanFunction::constant(0, false).is_err());
    }

    #[test]
    fn restrict_examples() {
        let d = BooleanFunction::dictator(2, 1).unwrap();
        assert_eq!(d.restrict(1, true).unwrap(), BooleanFunction::constant(1, true).unwrap());
        assert_eq!(d.restrict(2, false).unwrap(), BooleanFunction::dictator(1, 1).unwrap());

        // majority with x3 = 1 is the OR of x1, x2
        let r = majority3().restrict(3, true).unwrap();
        for y in 0..4 {
            assert_eq!(r.get(y), y & 1 == 1 || y & 2 == 2);
        }
        assert!(matches!(
            d.restrict(3, true),
            Err(CubeError::CoordinateOutOfRange { .. })
        ));
        assert_eq!(
            BooleanFunction::dictator(1, 1).unwrap().restrict(1, false),
            Err(CubeError::RestrictSingleVariable)
        );
    }

    #[test]
    fn restrict_renumbers_high_coordinates() {
        // f = x3 on n = 8; removing coordinate 1 makes it x2
        let f = BooleanFunction::dictator(8, 3).unwrap();
        assert_eq!(f.restrict(1, true).unwrap(), BooleanFunction::dictator(7, 2).unwrap());
        // removing coordinate 7 on n = 8 keeps x3
        let g = BooleanFunction::dictator(8, 8).unwrap();
        assert_eq!(g.restrict(7, false).unwrap(), BooleanFunction::dictator(7, 7).unwrap());
    }

    #[test]
    fn complement_and_dual_examples() {
        let d = BooleanFunction::dictator(3, 1).unwrap();
        assert_eq!(d.complement(), BooleanFunction::antidictator(3, 1).unwrap());
        assert_eq!(d.dual(), d);

        let and = BooleanFunction::from_fn(2, |x| x == 3).unwrap();
        let or = BooleanFunction::from_fn(2, |x| x != 0).unwrap();
        assert_eq!(and.dual(), or);
    }

    #[test]
    fn monotonicity_examples() {
        assert!(majority3().is_monotone());
        assert!(!BooleanFunction::antidictator(3, 1).unwrap().is_monotone());
        // {100, 110, 111, 011} as x1x2x3 strings, i.e. indices 1, 3, 7, 6
        let a = BooleanFunction::from_points(3, [1, 3, 7, 6]).unwrap();
        assert!(!a.is_monotone());
        assert!(BooleanFunction::constant(7, true).unwrap().is_monotone());
        assert!(BooleanFunction::dictator(9, 8).unwrap().is_monotone());
        assert!(!BooleanFunction::antidictator(9, 8).unwrap().is_monotone());
    }

    #[test]
    fn flip_matches_pointwise_definition() {
        let f = BooleanFunction::from_fn(8, |x| (x * 37 + 11) % 7 < 3).unwrap();
        for i in 1..=8 {
            let g = f.flip_coordinate(i).unwrap();
            for x in 0..256 {
                assert_eq!(g.get(x), f.get(x ^ (1 << (i - 1))));
            }
        }
    }

    #[test]
    fn subcube_examples() {
        let s: Subcube = "1*".parse().unwrap();
        assert_eq!(s.indicator(), BooleanFunction::dictator(2, 1).unwrap());
        assert_eq!(enumerate_subcubes(2).count(), 9);
        let t = Subcube::new(vec![Symbol::Zero, Symbol::One, Symbol::Free]).unwrap();
        // x1x2x3 in {010, 011}: indices 2 and 6
        let pts: Vec<usize> = t.indicator().iter_ones().collect();
        assert_eq!(pts, vec![2, 6]);
        assert_eq!(enumerate_monotone_subcubes(3).count(), 8);
    }

    #[test]
    fn subcube_enumeration_is_distinct_and_ordered() {
        let all: Vec<Subcube> = enumerate_subcubes(4).collect();
        assert_eq!(all.len(), 81);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let tables: std::collections::HashSet<_> = all.iter().map(Subcube::indicator).collect();
        assert_eq!(tables.len(), 81);
    }

    #[test]
    fn subcube_monotone_iff_no_zero() {
        for s in enumerate_subcubes(3) {
            assert_eq!(s.indicator().is_monotone(), s.is_monotone_increasing(), "{s}");
        }
    }

    #[test]
    fn dedekind_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| monotone_functions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![3, 6, 20, 168, 7581]);
        assert!(monotone_functions(4).unwrap().iter().all(BooleanFunction::is_monotone));
        let brute = (0..1u64 << 16)
            .filter(|&t| BooleanFunction::from_u64(4, t).unwrap().is_monotone())
            .count();
        assert_eq!(brute, 168);
    }

    #[test]
    fn truth_table_file_format() {
        let d = BooleanFunction::dictator(1, 1).unwrap();
        assert_eq!(write_truth_table(&d), "n=1\n2\n");
        // bits 0..3 set on n = 3: least significant digit first
        let f = BooleanFunction::from_points(3, 0..4).unwrap();
        assert_eq!(to_hex(&f), "f0");
        assert_eq!(read_truth_table("n=3\nf0\n").unwrap(), f);
        assert_eq!(read_truth_table("n=3\nF0").unwrap(), f);
        let big = BooleanFunction::from_fn(8, |x| x % 3 == 0).unwrap();
        assert_eq!(read_truth_table(&write_truth_table(&big)).unwrap(), big);
        assert!(read_truth_table("n=3\nf").is_err());
        assert!(read_truth_table("n=1\n4").is_err());
        assert!(read_truth_table("3\nf0").is_err());
    }
}
