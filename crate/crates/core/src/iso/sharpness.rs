//! The families `A` and `B` showing the stability bounds are sharp, with
//! their closed-form measures, influences, excess and distance.

use num::One;

use super::deficit::DeficitEvaluator;
use super::stability::SubcubeSearch;
use super::IsoError;
use crate::cube::{BooleanFunction, MAX_DIMENSION};
use crate::measure::Bias;
use crate::Rational;

fn check_parameters(n: usize, t: usize, s: usize) -> Result<(), IsoError> {
    if t < 1 || s < 2 || n < t + s || n > MAX_DIMENSION {
        return Err(IsoError::InvalidParameters(format!(
            "need t >= 1, s >= 2, t + s <= n <= {MAX_DIMENSION}; got n = {n}, t = {t}, s = {s}"
        )));
    }
    Ok(())
}

/// Does `x` have ones on all of `[len]` except `skip`, and a zero at `skip`?
fn all_but(x: usize, len: usize, skip: usize) -> bool {
    let mask = (1usize << len) - 1;
    let want = mask & !(1 << (skip - 1));
    x & mask == want
}

/// `B` plus the removal of the points with ones on `[t+s]` except a zero at `t+1`.
pub fn family_a(n: usize, t: usize, s: usize) -> Result<BooleanFunction, IsoError> {
    check_parameters(n, t, s)?;
    let top = (1usize << t) - 1;
    Ok(BooleanFunction::from_fn(n, |x| {
        let base = x & top == top || all_but(x, t + s, t);
        base && !all_but(x, t + s, t + 1)
    })?)
}

/// Ones on `[t]`, or ones on `[t+s]` except a zero at `t`.
pub fn family_b(n: usize, t: usize, s: usize) -> Result<BooleanFunction, IsoError> {
    check_parameters(n, t, s)?;
    let top = (1usize << t) - 1;
    Ok(BooleanFunction::from_fn(n, |x| x & top == top || all_but(x, t + s, t))?)
}

/// Closed-form values for a sharpness family.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub mu: Rational,
    pub influences: Vec<Rational>,
    pub total_influence: Rational,
    /// For `A` the exact excess; for `B` the stated upper bound on it.
    pub epsilon: Rational,
    /// The stated lower bound on `mu(f ^ S) / mu(f)` over subcubes `S`.
    pub delta: Rational,
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v.into())
}

pub fn family_a_closed_form(n: usize, t: usize, s: usize, p: &Rational) -> Result<ClosedForm, IsoError> {
    check_parameters(n, t, s)?;
    let q = Bias::new(p)?.complement();
    let pw = |k: usize| p.pow(k as i32);
    let influences = (1..=n)
        .map(|i| match i {
            i if i < t => pw(t - 1),
            i if i == t => (Rational::one() - pw(s - 1)) * pw(t - 1),
            i if i == t + 1 => pw(t + s - 2),
            i if i <= t + s => int(2) * &q * pw(t + s - 2),
            _ => Rational::from_integer(0.into()),
        })
        .collect();
    let epsilon = int(2 * (s - 1)) * &q * pw(s - 1);
    Ok(ClosedForm {
        mu: pw(t),
        influences,
        total_influence: pw(t - 1) * (int(t) + &epsilon),
        delta: &epsilon / int(s - 1),
        epsilon,
    })
}

pub fn family_b_closed_form(n: usize, t: usize, s: usize, p: &Rational) -> Result<ClosedForm, IsoError> {
    check_parameters(n, t, s)?;
    let q = Bias::new(p)?.complement();
    let pw = |k: usize| p.pow(k as i32);
    let influences = (1..=n)
        .map(|i| match i {
            i if i < t => pw(t - 1) + &q * pw(t + s - 2),
            i if i == t => (Rational::one() - pw(s)) * pw(t - 1),
            i if i <= t + s => &q * pw(t + s - 2),
            _ => Rational::from_integer(0.into()),
        })
        .collect();
    Ok(ClosedForm {
        mu: pw(t) * (Rational::one() + &q * pw(s - 1)),
        influences,
        total_influence: pw(t - 1) * (int(t) + (int(t + s) * &q - Rational::one()) * pw(s - 1)),
        epsilon: int(s - 1) * &q * pw(s - 1),
        delta: &q * pw(s - 1) / int(2),
    })
}

/// `eps' / (2 ln(2/eps'))`.
pub fn delta_lower_bound(epsilon_prime: f64) -> f64 {
    epsilon_prime / (2.0 * (2.0 / epsilon_prime).ln())
}

/// The lower bound rescaled like the stability ratio: `ln(1/eps') / (2 ln(2/eps'))`.
pub fn normalized_lower_bound(epsilon_prime: f64) -> f64 {
    delta_lower_bound(epsilon_prime) * (1.0 / epsilon_prime).ln() / epsilon_prime
}

/// Family `A` on `n = t + s` coordinates, measured exhaustively.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpnessRow {
    pub n: usize,
    pub mu: Rational,
    pub total_influence: Rational,
    pub epsilon: f64,
    pub epsilon_prime: f64,
    pub delta_exact: Rational,
    pub delta: f64,
    pub ratio: f64,
    pub lower_bound: f64,
    pub normalized_lower_bound: f64,
    pub closed_form: ClosedForm,
    /// Measure, influences and `delta` agree exactly with the closed form.
    pub matches_closed_form: bool,
}

pub fn sharpness_row(t: usize, s: usize, p: &Rational) -> Result<SharpnessRow, IsoError> {
    let n = t + s;
    let f = family_a(n, t, s)?;
    let ev = DeficitEvaluator::new(p)?;
    let record = SubcubeSearch::new(n, false)?.ratio(&f, &ev)?;
    let closed = family_a_closed_form(n, t, s, p)?;
    let bias = ev.bias();
    let mu = bias.mu(&f);
    let total_influence = bias.total_influence(&f);
    let matches = mu == closed.mu
        && bias.influences(&f) == closed.influences
        && total_influence == closed.total_influence
        && record.delta_exact == closed.delta;
    Ok(SharpnessRow {
        n,
        mu,
        total_influence,
        epsilon: record.epsilon,
        epsilon_prime: record.epsilon_prime,
        delta: record.delta,
        ratio: record.ratio.unwrap_or(f64::NAN),
        lower_bound: delta_lower_bound(record.epsilon_prime),
        normalized_lower_bound: normalized_lower_bound(record.epsilon_prime),
        delta_exact: record.delta_exact,
        closed_form: closed,
        matches_closed_form: matches,
    })
}
