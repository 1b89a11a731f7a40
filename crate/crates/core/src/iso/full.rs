//! The full edge-isoperimetric inequality, its monotone biased analogue
//! against `L_lambda`, measure domination, and monotonization.

use num::{One, Signed, Zero};

use super::IsoError;
use crate::cube::{BooleanFunction, CubeError};
use crate::lex::{
    lambda_from_measure, lex_family, limit_lex_influence, limit_lex_measure, BinaryExpansion, LexError,
};
use crate::measure::{edge_boundary, format_rational, Bias};
use crate::Rational;

/// Largest dimension for [`brute_force_min_boundary`].
pub const BRUTE_FORCE_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullIsoOutcome {
    pub boundary: u64,
    pub lex_boundary: u64,
    pub ok: bool,
}

/// `|boundary(f)| >= |boundary(lex family of the same size)|`.
pub fn full_iso_check(f: &BooleanFunction) -> Result<FullIsoOutcome, IsoError> {
    let boundary = edge_boundary(f).len() as u64;
    let lex_boundary = edge_boundary(&lex_family(f.n(), f.count_ones())?).len() as u64;
    Ok(FullIsoOutcome { boundary, lex_boundary, ok: boundary >= lex_boundary })
}

fn count_boundary(set: u32, n: usize) -> u64 {
    let mut edges = 0;
    for x in (0..1u32 << n).filter(|x| set >> x & 1 == 1) {
        for i in 0..n {
            if set >> (x ^ (1 << i)) & 1 == 0 {
                edges += 1;
            }
        }
    }
    edges
}

/// Minimum edge boundary over every family of `m` points of `{0,1}^n`.
pub fn brute_force_min_boundary(n: usize, m: u64) -> Result<u64, IsoError> {
    if !(1..=BRUTE_FORCE_LIMIT).contains(&n) {
        return Err(IsoError::GuardExceeded { n, limit: BRUTE_FORCE_LIMIT });
    }
    let points = 1u64 << n;
    if m > points {
        return Err(LexError::SizeOutOfRange { m, max: points }.into());
    }
    if m == 0 || m == points {
        return Ok(0);
    }
    let last = ((1u64 << m) - 1) << (points - m);
    let mut set = (1u64 << m) - 1;
    let mut best = u64::MAX;
    loop {
        best = best.min(count_boundary(set as u32, n));
        if set == last {
            break;
        }
        // next integer with the same popcount
        let low = set & set.wrapping_neg();
        let ripple = set + low;
        set = ripple | (((set ^ ripple) >> 2) / low);
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneFullOutcome {
    /// `I^p[f]`.
    pub lhs: Rational,
    /// `I^p[L_lambda]` at the computed expansion.
    pub rhs: Rational,
    /// Bound on `|I^p[L_lambda] - rhs|`.
    pub tail: Rational,
    /// `mu_p(f) - mu_p(L_lambda)` over the stored digits.
    pub residual: Rational,
    /// `None` when `mu_p(f)` is 0 or 1.
    pub expansion: Option<BinaryExpansion>,
    pub exact: bool,
    pub ok: bool,
}

/// `I^p[f] >= I^p[L_lambda] - tail` with `mu_p(L_lambda) = mu_p(f)`.
pub fn monotone_full_check(f: &BooleanFunction, p: &Rational, depth: usize) -> Result<MonotoneFullOutcome, IsoError> {
    if !f.is_monotone() {
        return Err(IsoError::NotMonotone);
    }
    let bias = Bias::new(p)?;
    let mu = bias.mu(f);
    let lhs = bias.total_influence(f);
    if mu.is_zero() || mu.is_one() {
        // the limit family is empty or everything; both have no boundary
        return Ok(MonotoneFullOutcome {
            ok: true,
            lhs,
            rhs: Rational::zero(),
            tail: Rational::zero(),
            residual: Rational::zero(),
            expansion: None,
            exact: true,
        });
    }
    let (b, residual) = lambda_from_measure(&mu, p, depth)?;
    let (rhs, tail) = limit_lex_influence(&b, p)?;
    Ok(MonotoneFullOutcome {
        ok: lhs >= &rhs - &tail,
        exact: b.is_exact(),
        lhs,
        rhs,
        tail,
        residual,
        expansion: Some(b),
    })
}

/// For `0 < q < p < 1` and `mu_p(f) <= mu_p(L)`: is `mu_q(f) <= mu_q(L)`?
pub fn lex_measure_domination_check(
    f: &BooleanFunction,
    b: &BinaryExpansion,
    p: &Rational,
    q: &Rational,
) -> Result<bool, IsoError> {
    if !f.is_monotone() {
        return Err(IsoError::NotMonotone);
    }
    if !q.is_positive() || q >= p || *p >= Rational::one() {
        return Err(IsoError::ParameterOrder { p: format_rational(p), q: format_rational(q) });
    }
    if !b.is_exact() {
        return Err(LexError::Truncated.into());
    }
    let (at_p, at_q) = (Bias::new(p)?, Bias::new(q)?);
    let (lp, _) = limit_lex_measure(b, p)?;
    let fp = at_p.mu(f);
    if fp > lp {
        return Err(IsoError::HypothesisNotMet(format!(
            "mu_p(f) = {} exceeds mu_p(L) = {}",
            format_rational(&fp),
            format_rational(&lp)
        )));
    }
    let (lq, _) = limit_lex_measure(b, q)?;
    Ok(at_q.mu(f) <= lq)
}

/// `M_i`: moves each point `x` of `f` with `x_i = 0` up to `x + e_i`
/// whenever that point is not in `f`.
pub fn monotonize_step(f: &BooleanFunction, i: usize) -> Result<BooleanFunction, IsoError> {
    if !(1..=f.n()).contains(&i) {
        return Err(CubeError::CoordinateOutOfRange { coordinate: i, n: f.n() }.into());
    }
    let bit = 1 << (i - 1);
    Ok(BooleanFunction::from_fn(f.n(), |x| {
        let partner = f.get(x ^ bit);
        if x & bit == 0 {
            f.get(x) && partner
        } else {
            f.get(x) || partner
        }
    })?)
}

/// `M_1 o ... o M_n`, repeated until nothing moves.
pub fn monotonize(f: &BooleanFunction) -> Result<BooleanFunction, IsoError> {
    let mut current = f.clone();
    loop {
        let mut next = current.clone();
        for i in (1..=f.n()).rev() {
            next = monotonize_step(&next, i)?;
        }
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}
