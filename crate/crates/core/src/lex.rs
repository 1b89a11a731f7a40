//! Lexicographic families, limit families `L_lambda` and upper shadows.
//!
//! The order on subsets of `[n]` is `S > T` iff `min(S ^ T)` lies in `S`.
//! Reversing the bits of a point index (coordinate 1 most significant) turns
//! this into the usual order on integers, which is all `lex_rank` does.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use thiserror::Error;

use crate::cube::{BooleanFunction, CubeError, MAX_DIMENSION};
use crate::measure::{binomial, Bias, MeasureError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("size {m} is outside [0, {max}]")]
    SizeOutOfRange { m: u64, max: u64 },
    #[error("cannot take {steps} upper shadow step(s) of a {k}-uniform family on {n} points")]
    UniformityOverflow { n: usize, k: usize, steps: usize },
    #[error("member {member:#b} is not a {k}-subset of [{n}]")]
    BadMember { n: usize, k: usize, member: u32 },
    #[error("invalid binary expansion: {0}")]
    InvalidExpansion(String),
    #[error("target measure {0} must lie strictly between 0 and 1")]
    TargetOutOfRange(String),
    #[error("function is not monotone increasing")]
    NotMonotone,
    #[error("expansion is truncated; an exact dyadic expansion is required")]
    Truncated,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
}

/// Position of point `x` in the lex order on `{0,1}^n`; larger is higher.
pub fn lex_rank(n: usize, x: usize) -> usize {
    if n == 0 {
        return 0;
    }
    x.reverse_bits() >> (usize::BITS as usize - n)
}

/// The `m` largest subsets of `[n]` in lex order, as an indicator.
pub fn lex_family(n: usize, m: u64) -> Result<BooleanFunction, LexError> {
    if !(1..=MAX_DIMENSION).contains(&n) {
        return Err(CubeError::DimensionOutOfRange(n).into());
    }
    let size = 1u64 << n;
    if m > size {
        return Err(LexError::SizeOutOfRange { m, max: size });
    }
    let cut = (size - m) as usize;
    Ok(BooleanFunction::from_fn(n, |x| lex_rank(n, x) >= cut)?)
}

/// A family of `k`-subsets of `[n]`, stored as bitmasks (element `i` is bit `i - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KUniformFamily {
    n: usize,
    k: usize,
    members: BTreeSet<u32>,
}

impl KUniformFamily {
    pub fn new(n: usize, k: usize, members: impl IntoIterator<Item = u32>) -> Result<Self, LexError> {
        if !(1..=MAX_DIMENSION).contains(&n) {
            return Err(CubeError::DimensionOutOfRange(n).into());
        }
        if k > n {
            return Err(LexError::UniformityOverflow { n, k, steps: 0 });
        }
        let members: BTreeSet<u32> = members.into_iter().collect();
        if let Some(&member) = members
            .iter()
            .find(|&&s| s.count_ones() as usize != k || (s >> n) != 0)
        {
            return Err(LexError::BadMember { n, k, member });
        }
        Ok(Self { n, k, members })
    }

    pub fn empty(n: usize, k: usize) -> Result<Self, LexError> {
        Self::new(n, k, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &BTreeSet<u32> {
        &self.members
    }

    pub fn contains(&self, set: u32) -> bool {
        self.members.contains(&set)
    }
}

/// `(k+1)`-sets containing some member.
pub fn upper_shadow(a: &KUniformFamily) -> Result<KUniformFamily, LexError> {
    iterated_upper_shadow(a, 1)
}

/// `(k+i)`-sets containing some member.
pub fn iterated_upper_shadow(a: &KUniformFamily, i: usize) -> Result<KUniformFamily, LexError> {
    if a.k + i > a.n || (i > 0 && a.k >= a.n) {
        return Err(LexError::UniformityOverflow { n: a.n, k: a.k, steps: i });
    }
    let full = (1u32 << a.n) - 1;
    let mut current = a.members.clone();
    for _ in 0..i {
        let mut next = BTreeSet::new();
        for &s in &current {
            let mut free = full & !s;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                next.insert(s | bit);
                free ^= bit;
            }
        }
        current = next;
    }
    Ok(KUniformFamily { n: a.n, k: a.k + i, members: current })
}

/// `F^(k)`: the points of `f` of weight `k`.
pub fn layer(f: &BooleanFunction, k: usize) -> KUniformFamily {
    KUniformFamily {
        n: f.n(),
        k,
        members: f
            .iter_ones()
            .filter(|x| x.count_ones() as usize == k)
            .map(|x| x as u32)
            .collect(),
    }
}

/// The `m` largest `k`-subsets of `[n]` in lex order.
pub fn lex_segment(n: usize, k: usize, m: u64) -> Result<KUniformFamily, LexError> {
    if !(1..=MAX_DIMENSION).contains(&n) {
        return Err(CubeError::DimensionOutOfRange(n).into());
    }
    if k > n {
        return Err(LexError::UniformityOverflow { n, k, steps: 0 });
    }
    let max = binomial(n as u64, k as u64);
    if m > max {
        return Err(LexError::SizeOutOfRange { m, max });
    }
    let mut sets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    sets.sort_unstable_by_key(|&s| std::cmp::Reverse(lex_rank(n, s as usize)));
    sets.truncate(m as usize);
    KUniformFamily::new(n, k, sets)
}

/// `|upper_shadow|` of the lex segment of size `m`, the Kruskal-Katona minimum.
pub fn kk_min_upper_shadow(n: usize, k: usize, m: u64) -> Result<u64, LexError> {
    if k >= n {
        return Err(LexError::UniformityOverflow { n, k, steps: 1 });
    }
    Ok(upper_shadow(&lex_segment(n, k, m)?)?.len() as u64)
}

/// Digits `i_1 < i_2 < ...` of `lambda = sum_j 2^(-i_j)`.
///
/// `depth` is the number of leading positions known: every position up to
/// `depth` is either a stored digit or known not to be one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryExpansion {
    digits: Vec<usize>,
    exact: bool,
    depth: usize,
}

impl BinaryExpansion {
    /// An exact expansion needs at least one digit; a truncated one may be
    /// empty (the target was below every cylinder within the depth cap).
    pub fn new(digits: Vec<usize>, exact: bool) -> Result<Self, LexError> {
        if exact && digits.is_empty() {
            return Err(LexError::InvalidExpansion("no digits".into()));
        }
        if digits.first() == Some(&0) {
            return Err(LexError::InvalidExpansion("digits start at 1".into()));
        }
        if digits.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LexError::InvalidExpansion("digits must strictly increase".into()));
        }
        let depth = digits.last().copied().unwrap_or(0);
        Ok(Self { digits, exact, depth })
    }

    /// A truncated expansion whose first `depth` positions are decided.
    pub fn truncated(digits: Vec<usize>, depth: usize) -> Result<Self, LexError> {
        let mut b = Self::new(digits, false)?;
        if depth < b.depth {
            return Err(LexError::InvalidExpansion(format!(
                "depth {depth} is below the last digit {}",
                b.depth
            )));
        }
        b.depth = depth;
        Ok(b)
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn max_digit(&self) -> usize {
        self.digits.last().copied().unwrap_or(0)
    }

    /// `sum_j 2^(-i_j)` over the stored digits.
    pub fn lambda(&self) -> Rational {
        self.digits
            .iter()
            .map(|&i| Rational::new(One::one(), num::BigInt::one() << i))
            .sum()
    }

    /// The expansion of a dyadic `s / 2^d`, `0 < s < 2^d`.
    pub fn from_dyadic(s: u64, d: usize) -> Result<Self, LexError> {
        if d == 0 || d > 63 || s == 0 || s >= 1 << d {
            return Err(LexError::InvalidExpansion(format!("{s}/2^{d} is not in (0, 1)")));
        }
        let digits = (1..=d).filter(|&i| (s >> (d - i)) & 1 == 1).collect();
        Self::new(digits, true)
    }
}

impl fmt::Display for BinaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for BinaryExpansion {
    type Err = LexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .split(',')
            .map(|d| d.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| LexError::InvalidExpansion(format!("{s:?}: {e}")))?;
        Self::new(digits, true)
    }
}

/// `L_lambda` restricted to `n` coordinates (the union of the stored cylinders).
pub fn limit_lex_function(b: &BinaryExpansion, n: usize) -> Result<BooleanFunction, LexError> {
    if n < b.max_digit() {
        return Err(LexError::HypothesisNotMet(format!(
            "need n >= {} to hold every cylinder",
            b.max_digit()
        )));
    }
    let mut digit_mask = 0usize;
    let mut cylinders = Vec::with_capacity(b.digits.len());
    for &i in &b.digits {
        let prefix = (1usize << i) - 1;
        // fixed coordinates [i]; required values: ones except earlier digits
        cylinders.push((prefix, prefix & !digit_mask));
        digit_mask |= 1 << (i - 1);
    }
    Ok(BooleanFunction::from_fn(n, |x| {
        cylinders.iter().any(|&(fixed, value)| x & fixed == value)
    })?)
}

fn cylinder_measures<'a>(b: &'a BinaryExpansion, bias: &Bias) -> impl Iterator<Item = Rational> + 'a {
    let p = bias.p().clone();
    let q = bias.complement();
    b.digits
        .iter()
        .enumerate()
        .map(move |(j, &i)| p.pow((i - j) as i32) * q.pow(j as i32))
}

/// Measure of the region left undecided after the decided positions.
fn undecided_measure(b: &BinaryExpansion, p: &Rational) -> Rational {
    let j = b.digits.len() as i32;
    p.pow(b.depth as i32 - j) * (Rational::one() - p).pow(j)
}

/// `mu_p(L_lambda)` over the stored digits and a bound on the remaining tail.
pub fn limit_lex_measure(b: &BinaryExpansion, p: &Rational) -> Result<(Rational, Rational), LexError> {
    let bias = Bias::new(p)?;
    let value = cylinder_measures(b, &bias).sum();
    let tail = if b.exact { Rational::zero() } else { undecided_measure(b, p) };
    Ok((value, tail))
}

/// Exact total influence of the finite family given by the digits, read as a
/// decision list over positions `1..=max_digit`.
pub fn decision_list_influence(b: &BinaryExpansion, p: &Rational) -> Result<Rational, LexError> {
    let p = Bias::new(p)?.p().clone();
    let q = Rational::one() - &p;
    let top = b.max_digit();
    let is_digit = {
        let mut v = vec![false; top + 1];
        for &i in &b.digits {
            v[i] = true;
        }
        v
    };
    // tail[m] = Pr[accept | reached m]
    let mut tail = vec![Rational::zero(); top + 2];
    for m in (1..=top).rev() {
        tail[m] = if is_digit[m] {
            &p + &q * &tail[m + 1]
        } else {
            &p * &tail[m + 1]
        };
    }
    let mut reach = Rational::one();
    let mut total = Rational::zero();
    for m in 1..=top {
        if is_digit[m] {
            total += &reach * (Rational::one() - &tail[m + 1]);
            reach *= &q;
        } else {
            total += &reach * &tail[m + 1];
            reach *= &p;
        }
    }
    Ok(total)
}

const TRUTH_TABLE_LIMIT: usize = 16;

/// `I^p[L_lambda]` over the stored digits and a bound on the distance to the
/// limit. The tail bound is zero for exact expansions.
///
/// Past the decided positions the limit family can only add points inside
/// the undecided cylinder `U`, of measure `u`. Read as a decision list, this
/// shifts the influence of a decided position `m` by `u / p` (non-digit) or
/// `-u / (1-p)` (digit), all scaled by one common factor in `[0, 1]`, and
/// the undecided positions carry at most `u / (1 - max(p, 1-p))` in total.
pub fn limit_lex_influence(b: &BinaryExpansion, p: &Rational) -> Result<(Rational, Rational), LexError> {
    let bias = Bias::new(p)?;
    let value = if b.digits.is_empty() {
        Rational::zero()
    } else if b.exact && b.max_digit() <= TRUTH_TABLE_LIMIT {
        bias.total_influence(&limit_lex_function(b, b.max_digit())?)
    } else {
        decision_list_influence(b, p)?
    };
    if b.exact {
        return Ok((value, Rational::zero()));
    }
    let q = bias.complement();
    let u = undecided_measure(b, p);
    let digits = b.digits.len() as i64;
    let others = b.depth as i64 - digits;
    let drift = (Rational::from_integer(others.into()) / p
        - Rational::from_integer(digits.into()) / &q)
        .abs();
    let larger = if *p > q { p.clone() } else { q };
    let beyond = (Rational::one() - larger).recip();
    Ok((value, u * (drift + beyond)))
}

/// Greedy expansion of `lambda` with `mu_p(L_lambda) = target`, scanning
/// positions `1..=max_depth`. Returns the expansion and the exact residual.
pub fn lambda_from_measure(
    target: &Rational,
    p: &Rational,
    max_depth: usize,
) -> Result<(BinaryExpansion, Rational), LexError> {
    let bias = Bias::new(p)?;
    if !target.is_positive() || *target >= Rational::one() {
        return Err(LexError::TargetOutOfRange(crate::measure::format_rational(target)));
    }
    let p = bias.p().clone();
    let q = bias.complement();
    let mut remaining = target.clone();
    let mut digits = Vec::new();
    // cylinder measure for the next digit at the current position
    let mut cylinder = p.clone();
    for i in 1..=max_depth {
        if cylinder <= remaining {
            digits.push(i);
            remaining -= &cylinder;
            if remaining.is_zero() {
                break;
            }
            cylinder = &cylinder * &q / &p;
        }
        cylinder *= &p;
    }
    let b = if remaining.is_zero() {
        BinaryExpansion::new(digits, true)?
    } else {
        BinaryExpansion::truncated(digits, max_depth)?
    };
    Ok((b, remaining))
}

/// Layer domination: with the hypotheses met, is `|F^(k)| <= |L^(k)|`?
pub fn layer_domination_check(
    f: &BooleanFunction,
    b: &BinaryExpansion,
    k0: usize,
    k: usize,
) -> Result<bool, LexError> {
    if !f.is_monotone() {
        return Err(LexError::NotMonotone);
    }
    if !b.exact {
        return Err(LexError::Truncated);
    }
    let n = f.n();
    let j = b.max_digit();
    if !(n > k0 && k0 > k && k >= j && j >= 1) {
        return Err(LexError::HypothesisNotMet(format!(
            "need n > k0 > k >= j >= 1, got n = {n}, k0 = {k0}, k = {k}, j = {j}"
        )));
    }
    if n - k0 < j {
        return Err(LexError::HypothesisNotMet(format!(
            "need n - k0 >= j, got n - k0 = {}, j = {j}",
            n - k0
        )));
    }
    let l = limit_lex_function(b, n)?;
    let (f0, l0) = (layer(f, k0).len(), layer(&l, k0).len());
    if f0 > l0 {
        return Err(LexError::HypothesisNotMet(format!(
            "|F^(k0)| = {f0} exceeds |L^(k0)| = {l0}"
        )));
    }
    Ok(layer(f, k).len() <= layer(&l, k).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{mu, total_influence};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn exp(d: &[usize]) -> BinaryExpansion {
        BinaryExpansion::new(d.to_vec(), true).unwrap()
    }

    fn sets(n: usize, s: &[&str]) -> Vec<u32> {
        s.iter()
            .map(|w| {
                w.chars()
                    .map(|c| 1u32 << (c.to_digit(10).unwrap() - 1))
                    .fold(0, |a, b| a | b)
            })
            .inspect(|&m| assert!(m >> n == 0))
            .collect()
    }

    // sort all subsets with the comparator itself
    fn comparator_top(n: usize, m: usize) -> BooleanFunction {
        let mut all: Vec<usize> = (0..1 << n).collect();
        all.sort_by(|&s, &t| {
            let d = s ^ t;
            if d == 0 {
                std::cmp::Ordering::Equal
            } else if s & d & d.wrapping_neg() != 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        BooleanFunction::from_points(n, all.into_iter().take(m)).unwrap()
    }

    #[test]
    fn lex_family_examples() {
        assert_eq!(lex_family(3, 4).unwrap(), BooleanFunction::dictator(3, 1).unwrap());
        let or = BooleanFunction::from_fn(2, |x| x != 0).unwrap();
        assert_eq!(lex_family(2, 3).unwrap(), or);
        assert_eq!(lex_family(3, 0).unwrap(), BooleanFunction::constant(3, false).unwrap());
        assert_eq!(lex_family(3, 8).unwrap(), BooleanFunction::constant(3, true).unwrap());
        assert!(matches!(lex_family(3, 9), Err(LexError::SizeOutOfRange { .. })));
    }

    #[test]
    fn lex_family_matches_comparator_sort() {
        for n in 1..=5 {
            for m in 0..=1 << n {
                assert_eq!(lex_family(n, m as u64).unwrap(), comparator_top(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn lex_family_nests() {
        for m in 0..64u64 {
            assert!(lex_family(6, m).unwrap().is_subset_of(&lex_family(6, m + 1).unwrap()));
        }
    }

    #[test]
    fn layers_of_lex_family_are_lex_segments() {
        let n = 5;
        for m in 0..=32u64 {
            let f = lex_family(n, m).unwrap();
            for k in 0..=n {
                let l = layer(&f, k);
                assert_eq!(l, lex_segment(n, k, l.len() as u64).unwrap(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn upper_shadow_examples() {
        let a = KUniformFamily::new(4, 2, sets(4, &["12", "13"])).unwrap();
        let s = upper_shadow(&a).unwrap();
        assert_eq!(s.members().iter().copied().collect::<Vec<_>>(), {
            let mut v = sets(4, &["123", "124", "134"]);
            v.sort();
            v
        });
        let b = KUniformFamily::new(4, 2, sets(4, &["12", "34"])).unwrap();
        assert_eq!(upper_shadow(&b).unwrap().len(), 4);
        assert!(upper_shadow(&KUniformFamily::empty(4, 2).unwrap()).unwrap().is_empty());
        assert!(matches!(
            upper_shadow(&KUniformFamily::empty(3, 3).unwrap()),
            Err(LexError::UniformityOverflow { .. })
        ));
        assert!(iterated_upper_shadow(&a, 3).is_err());
        assert_eq!(iterated_upper_shadow(&a, 2).unwrap().len(), 1);
        assert_eq!(iterated_upper_shadow(&a, 0).unwrap(), a);
        assert!(KUniformFamily::new(4, 2, [0b111]).is_err());
        assert!(KUniformFamily::new(3, 1, [0b1000]).is_err());
    }

    #[test]
    fn kk_examples() {
        assert_eq!(kk_min_upper_shadow(4, 2, 3).unwrap(), 3);
        assert_eq!(kk_min_upper_shadow(4, 2, 1).unwrap(), 2);
        assert_eq!(kk_min_upper_shadow(4, 2, 0).unwrap(), 0);
        assert!(kk_min_upper_shadow(4, 2, 7).is_err());
        assert!(kk_min_upper_shadow(4, 4, 1).is_err());
    }

    #[test]
    fn kruskal_katona_five_two_exhaustive() {
        let pairs: Vec<u32> = (0u32..32).filter(|s| s.count_ones() == 2).collect();
        for mask in 0u32..1 << pairs.len() {
            let members = (0..pairs.len()).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]);
            let f = KUniformFamily::new(5, 2, members).unwrap();
            let min = kk_min_upper_shadow(5, 2, f.len() as u64).unwrap();
            assert!(upper_shadow(&f).unwrap().len() as u64 >= min, "{mask:#b}");
        }
    }

    #[test]
    fn expansion_parsing_and_lambda() {
        let b: BinaryExpansion = "1,2".parse().unwrap();
        assert_eq!(b.digits(), &[1, 2]);
        assert_eq!(b.to_string(), "1,2");
        assert_eq!(b.lambda(), q(3, 4));
        for bad in ["", "2,1", "0,1", "1,1", "x"] {
            assert!(bad.parse::<BinaryExpansion>().is_err(), "{bad}");
        }
        assert_eq!(BinaryExpansion::from_dyadic(3, 3).unwrap().digits(), &[2, 3]);
        assert!(BinaryExpansion::new(vec![], false).is_ok());
    }

    #[test]
    fn limit_measure_examples() {
        for p in [q(1, 4), q(1, 2), q(2, 3)] {
            let one = Rational::one();
            assert_eq!(limit_lex_measure(&exp(&[1]), &p).unwrap(), (p.clone(), Rational::zero()));
            let v = &p + &p * (&one - &p);
            assert_eq!(limit_lex_measure(&exp(&[1, 2]), &p).unwrap().0, v);
            let v = &p * &p * (q(2, 1) - &p);
            assert_eq!(limit_lex_measure(&exp(&[2, 3]), &p).unwrap().0, v);
            assert_eq!(mu(&lex_family(3, 3).unwrap(), &p).unwrap(), v);
        }
    }

    #[test]
    fn limit_influence_examples() {
        for p in [q(1, 5), q(1, 2), q(3, 4)] {
            assert_eq!(limit_lex_influence(&exp(&[1]), &p).unwrap().0, q(1, 1));
            let v = q(2, 1) * (Rational::one() - &p);
            assert_eq!(limit_lex_influence(&exp(&[1, 2]), &p).unwrap().0, v);
        }
        assert_eq!(limit_lex_influence(&exp(&[2, 3]), &q(1, 2)).unwrap().0, q(5, 4));
    }

    #[test]
    fn limit_function_is_dyadic_lex_family() {
        for d in 1..=6 {
            for s in 1..1u64 << d {
                let b = BinaryExpansion::from_dyadic(s, d).unwrap();
                let f = lex_family(d, s).unwrap();
                assert_eq!(limit_lex_function(&b, d).unwrap(), f);
                for p in [q(1, 3), q(3, 5)] {
                    assert_eq!(limit_lex_measure(&b, &p).unwrap().0, mu(&f, &p).unwrap());
                    let exact = total_influence(&f, &p).unwrap();
                    assert_eq!(limit_lex_influence(&b, &p).unwrap().0, exact);
                    assert_eq!(decision_list_influence(&b, &p).unwrap(), exact);
                }
            }
        }
    }

    #[test]
    fn adding_a_digit_increases_measure() {
        let p = q(2, 5);
        let mut digits = vec![];
        let mut last = Rational::zero();
        for i in [2, 3, 5, 8, 9, 13] {
            digits.push(i);
            let v = limit_lex_measure(&exp(&digits), &p).unwrap().0;
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn lambda_solver_examples() {
        let p = q(1, 3);
        let (b, r) = lambda_from_measure(&q(5, 9), &p, 64).unwrap();
        assert_eq!((b.digits(), b.is_exact(), r), (&[1usize, 2][..], true, Rational::zero()));
        for p in [q(1, 7), q(1, 2), q(5, 6)] {
            let (b, r) = lambda_from_measure(&p, &p, 64).unwrap();
            assert_eq!((b.digits(), r), (&[1usize][..], Rational::zero()));
        }
        let (b, r) = lambda_from_measure(&q(1, 3), &q(1, 2), 64).unwrap();
        assert_eq!(b.digits(), (1..=32).map(|i| 2 * i).collect::<Vec<_>>());
        assert!(!b.is_exact());
        let scale = Rational::new(1.into(), num::BigInt::from(4).pow(32));
        assert_eq!(r, &scale / q(3, 1));
        assert!(lambda_from_measure(&q(0, 1), &p, 8).is_err());
        assert!(lambda_from_measure(&q(1, 1), &p, 8).is_err());
    }

    #[test]
    fn lambda_solver_round_trips() {
        for p in [q(1, 3), q(1, 2), q(2, 3)] {
            for t in [q(1, 10), q(3, 7), q(5, 9), q(99, 100)] {
                let (b, r) = lambda_from_measure(&t, &p, 40).unwrap();
                let (v, tail) = limit_lex_measure(&b, &p).unwrap();
                assert_eq!(&v + &r, t);
                assert!(r <= tail || b.is_exact());
            }
        }
    }

    #[test]
    fn truncated_influence_converges_within_tail() {
        // lambda = 1/3 at p = 1/2: L is the alternating decision list
        for p in [q(1, 3), q(1, 2), q(3, 4)] {
            let deep = lambda_from_measure(&q(1, 3), &p, 60).unwrap().0;
            let (limit, slack) = limit_lex_influence(&deep, &p).unwrap();
            for depth in [4, 8, 16, 32] {
                let (b, _) = lambda_from_measure(&q(1, 3), &p, depth).unwrap();
                let (v, tail) = limit_lex_influence(&b, &p).unwrap();
                assert!((&v - &limit).abs() <= tail + &slack, "p={p} depth={depth}");
            }
        }
    }

    #[test]
    fn layer_domination_examples() {
        let b = exp(&[1]);
        let l = lex_family(6, 32).unwrap();
        for k0 in 2..6 {
            for k in 1..k0 {
                if 6 - k0 >= 1 {
                    assert!(layer_domination_check(&l, &b, k0, k).unwrap());
                }
            }
        }
        let x2 = BooleanFunction::dictator(6, 2).unwrap();
        assert!(layer_domination_check(&x2, &b, 3, 2).unwrap());
        assert!(matches!(
            layer_domination_check(&x2, &b, 6, 2),
            Err(LexError::HypothesisNotMet(_))
        ));
        let anti = BooleanFunction::antidictator(6, 1).unwrap();
        assert_eq!(layer_domination_check(&anti, &b, 3, 2), Err(LexError::NotMonotone));
        let t = BinaryExpansion::new(vec![1], false).unwrap();
        assert_eq!(layer_domination_check(&x2, &t, 3, 2), Err(LexError::Truncated));
        let big = BooleanFunction::constant(6, true).unwrap();
        assert!(matches!(
            layer_domination_check(&big, &b, 3, 2),
            Err(LexError::HypothesisNotMet(_))
        ));
    }
}
