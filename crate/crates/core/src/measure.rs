//! Exact p-biased measures, influences and edge boundaries.
//!
//! For rational `p = a/b` every quantity here is a rational with a power of
//! `b` in the denominator. Measures and influences are computed from integer
//! weight profiles, so a single division happens per result.

use std::fmt;
use std::ops::{Add, Sub};

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use crate::cube::{BooleanFunction, CubeError, MAX_DIMENSION};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("bias p = {0} must lie strictly between 0 and 1")]
    BiasOutOfRange(String),
    #[error("the Margulis-Russo identity is only claimed for monotone increasing functions")]
    NotMonotone,
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

/// A validated bias `p in (0, 1)` with cached integer power tables.
#[derive(Debug, Clone)]
pub struct Bias {
    p: Rational,
    up: Vec<BigInt>,
    down: Vec<BigInt>,
    den: Vec<BigInt>,
}

fn powers(base: &BigInt) -> Vec<BigInt> {
    std::iter::successors(Some(BigInt::one()), |x| Some(x * base))
        .take(MAX_DIMENSION + 1)
        .collect()
}

impl Bias {
    pub fn new(p: &Rational) -> Result<Self, MeasureError> {
        if !p.is_positive() || *p >= Rational::one() {
            return Err(MeasureError::BiasOutOfRange(format_rational(p)));
        }
        let a = p.numer();
        let b = p.denom();
        Ok(Self {
            p: p.clone(),
            up: powers(a),
            down: powers(&(b - a)),
            den: powers(b),
        })
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn complement(&self) -> Rational {
        Rational::one() - &self.p
    }

    /// `sum_k counts[k] * p^k (1-p)^(m-k)`, exactly.
    pub fn weigh_profile(&self, counts: &[u64], m: usize) -> Rational {
        Rational::new(self.weight_numerator(counts, m), self.den[m].clone())
    }

    /// Numerator of [`Bias::weigh_profile`] over the fixed denominator `b^m`.
    pub fn weight_numerator(&self, counts: &[u64], m: usize) -> BigInt {
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| BigInt::from(c) * &self.up[k] * &self.down[m - k])
            .sum()
    }

    pub fn mu(&self, f: &BooleanFunction) -> Rational {
        self.weigh_profile(&f.weight_profile(), f.n())
    }

    pub fn influence(&self, f: &BooleanFunction, i: usize) -> Result<Rational, MeasureError> {
        if !(1..=f.n()).contains(&i) {
            return Err(CubeError::CoordinateOutOfRange { coordinate: i, n: f.n() }.into());
        }
        let profile = direction_profile(f, i - 1);
        Ok(self.weigh_profile(&profile, f.n() - 1))
    }

    pub fn influences(&self, f: &BooleanFunction) -> Vec<Rational> {
        (0..f.n())
            .map(|c| self.weigh_profile(&direction_profile(f, c), f.n() - 1))
            .collect()
    }

    pub fn total_influence(&self, f: &BooleanFunction) -> Rational {
        self.weigh_profile(&boundary_profile(f), f.n() - 1)
    }
}

/// Lower endpoints of boundary edges in direction `c` (0-based), counted by
/// the weight of the other `n - 1` coordinates.
fn direction_profile(f: &BooleanFunction, c: usize) -> Vec<u64> {
    let mut profile = vec![0u64; f.n()];
    for x in f.boundary_lower_unchecked(c).iter_ones() {
        profile[x.count_ones() as usize] += 1;
    }
    profile
}

fn boundary_profile(f: &BooleanFunction) -> Vec<u64> {
    let mut profile = vec![0u64; f.n()];
    for c in 0..f.n() {
        for (acc, v) in profile.iter_mut().zip(direction_profile(f, c)) {
            *acc += v;
        }
    }
    profile
}

/// `mu_p(f)`.
pub fn mu(f: &BooleanFunction, p: &Rational) -> Result<Rational, MeasureError> {
    Ok(Bias::new(p)?.mu(f))
}

/// `I_i^p[f] = Pr_{x ~ mu_p}[f(x) != f(x xor e_i)]`.
pub fn influence(f: &BooleanFunction, i: usize, p: &Rational) -> Result<Rational, MeasureError> {
    Bias::new(p)?.influence(f, i)
}

pub fn total_influence(f: &BooleanFunction, p: &Rational) -> Result<Rational, MeasureError> {
    Ok(Bias::new(p)?.total_influence(f))
}

/// Edges `{x, x xor e_i}` stored by their lower endpoint `x` (so `x_i = 0`)
/// and the 1-based coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSet {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// All edges of the cube joining a one-point of `f` to a zero-point,
/// ordered by coordinate and then by lower endpoint.
pub fn edge_boundary(f: &BooleanFunction) -> EdgeSet {
    let edges = (0..f.n())
        .flat_map(|c| {
            f.boundary_lower_unchecked(c)
                .iter_ones()
                .map(move |x| (x, c + 1))
                .collect::<Vec<_>>()
        })
        .collect();
    EdgeSet { n: f.n(), edges }
}

/// Sum of the edge measure `p^s (1-p)^(n-1-s)`, `s = sum_{j != i} x_j`, over the edges.
pub fn boundary_measure(e: &EdgeSet, p: &Rational) -> Result<Rational, MeasureError> {
    let bias = Bias::new(p)?;
    let q = bias.complement();
    let mut total = Rational::zero();
    for &(x, i) in &e.edges {
        let s = (x & !(1usize << (i - 1))).count_ones() as i32;
        total += p.pow(s) * q.pow(e.n as i32 - 1 - s);
    }
    Ok(total)
}

/// Integer polynomial in `p`, dense by power; trailing zeros are trimmed so
/// the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MeasurePolynomial {
    coefficients: Vec<BigInt>,
}

impl MeasurePolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, p: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * p + Rational::from(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// `sum_k counts[k] p^k (1-p)^(m-k)` expanded in the monomial basis.
    pub fn from_profile(counts: &[u64], m: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); m + 1];
        for (k, &c) in counts.iter().enumerate().filter(|(_, &c)| c != 0) {
            let mut binom = BigInt::one();
            for j in 0..=m - k {
                let term = BigInt::from(c) * &binom;
                if j % 2 == 0 {
                    coefficients[k + j] += term;
                } else {
                    coefficients[k + j] -= term;
                }
                binom = binom * BigInt::from(m - k - j) / BigInt::from(j + 1);
            }
        }
        Self::new(coefficients)
    }
}

impl Add for &MeasurePolynomial {
    type Output = MeasurePolynomial;
    fn add(self, rhs: Self) -> MeasurePolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let zero = BigInt::zero();
        MeasurePolynomial::new(
            (0..len)
                .map(|k| {
                    self.coefficients.get(k).unwrap_or(&zero) + rhs.coefficients.get(k).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub for &MeasurePolynomial {
    type Output = MeasurePolynomial;
    fn sub(self, rhs: Self) -> MeasurePolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let zero = BigInt::zero();
        MeasurePolynomial::new(
            (0..len)
                .map(|k| self.coefficients.get(k).unwrap_or(&zero) - rhs.coefficients.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl fmt::Display for MeasurePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("p")?,
                (1, false) => write!(f, "{magnitude}p")?,
                (_, true) => write!(f, "p^{k}")?,
                (_, false) => write!(f, "{magnitude}p^{k}")?,
            }
        }
        Ok(())
    }
}

/// `mu_p(f)` as a polynomial in `p`.
pub fn measure_polynomial(f: &BooleanFunction) -> MeasurePolynomial {
    MeasurePolynomial::from_profile(&f.weight_profile(), f.n())
}

/// `I^p[f]` as a polynomial in `p`.
pub fn influence_polynomial(f: &BooleanFunction) -> MeasurePolynomial {
    MeasurePolynomial::from_profile(&boundary_profile(f), f.n() - 1)
}

/// `d/dp mu_p(f) - I^p[f]`; the zero polynomial for every monotone `f`.
pub fn margulis_russo_residual(f: &BooleanFunction) -> Result<MeasurePolynomial, MeasureError> {
    if !f.is_monotone() {
        return Err(MeasureError::NotMonotone);
    }
    Ok(&measure_polynomial(f).derivative() - &influence_polynomial(f))
}

/// Always `num/den`, including integers (`1/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den`, an integer, or a finite decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational, MeasureError> {
    let err = || MeasureError::Parse(s.to_string());
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(num, den));
    }
    let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
    let digits_ok = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    let unsigned = int_part.strip_prefix('-').unwrap_or(int_part);
    if (unsigned.is_empty() && frac_part.is_empty()) || !digits_ok(unsigned) || !digits_ok(frac_part) {
        return Err(err());
    }
    let scale = BigInt::from(10).pow(frac_part.len() as u32);
    let joined = format!("{int_part}{frac_part}");
    let joined = if joined == "-" || joined.is_empty() { "0".to_string() } else { joined };
    let num: BigInt = joined.parse().map_err(|_| err())?;
    Ok(Rational::new(num, scale))
}

/// Binomial coefficient as `u64` (small arguments only).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    num::integer::binomial(n, k.min(n - k))
}
