//! Nearest subcubes and the empirical stability constant.

use num::{BigInt, Zero};

use super::deficit::DeficitEvaluator;
use super::IsoError;
use crate::cube::{enumerate_monotone_subcubes, enumerate_subcubes, BooleanFunction, Subcube};
use crate::real::to_f64;
use crate::Rational;

/// Largest dimension for exhaustive subcube search.
pub const MAX_SEARCH_DIMENSION: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityRecord {
    pub best_subcube: Subcube,
    /// Number of subcubes attaining the minimum distance.
    pub ties: usize,
    /// `mu_p(f ^ 1_S)`.
    pub distance: Rational,
    /// `mu_p(f ^ 1_S) / mu_p(f)`.
    pub delta_exact: Rational,
    pub delta: f64,
    pub epsilon: f64,
    pub epsilon_prime: f64,
    /// `delta ln(1/eps') / eps'`; only filled in by [`stability_ratio`].
    pub ratio: Option<f64>,
}

/// Candidate subcubes of one dimension, in tie-breaking order: fewer fixed
/// coordinates first, then pattern order with `Zero < One < Free`.
#[derive(Debug, Clone)]
pub struct SubcubeSearch {
    n: usize,
    candidates: Vec<(Subcube, BooleanFunction)>,
}

impl SubcubeSearch {
    pub fn new(n: usize, monotone_only: bool) -> Result<Self, IsoError> {
        if n > MAX_SEARCH_DIMENSION {
            return Err(IsoError::GuardExceeded { n, limit: MAX_SEARCH_DIMENSION });
        }
        let cubes: Vec<Subcube> = if monotone_only {
            enumerate_monotone_subcubes(n).collect()
        } else {
            enumerate_subcubes(n).collect()
        };
        let mut candidates: Vec<(Subcube, BooleanFunction)> =
            cubes.into_iter().map(|c| { let f = c.indicator(); (c, f) }).collect();
        candidates.sort_by(|(a, _), (b, _)| {
            (a.fixed_count(), a.pattern()).cmp(&(b.fixed_count(), b.pattern()))
        });
        Ok(Self { n, candidates })
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn nearest(&self, f: &BooleanFunction, ev: &DeficitEvaluator) -> Result<StabilityRecord, IsoError> {
        if f.n() != self.n {
            return Err(IsoError::InvalidParameters(format!(
                "search built for n = {}, function has n = {}",
                self.n,
                f.n()
            )));
        }
        let bias = ev.bias();
        let report = ev.report(f);
        if report.mu.is_zero() {
            return Err(IsoError::ZeroMeasure);
        }
        let mut best: Option<(usize, BigInt)> = None;
        let mut ties = 0;
        for (k, (_, s)) in self.candidates.iter().enumerate() {
            let d = bias.weight_numerator(&(f ^ s).weight_profile(), self.n);
            match &best {
                Some((_, b)) if d > *b => {}
                Some((_, b)) if d == *b => ties += 1,
                _ => {
                    best = Some((k, d));
                    ties = 1;
                }
            }
        }
        let (k, numer) = best.expect("at least one subcube");
        let distance = Rational::new(numer, bias.p().denom().pow(self.n as u32));
        let delta_exact = &distance / &report.mu;
        Ok(StabilityRecord {
            best_subcube: self.candidates[k].0.clone(),
            ties,
            delta: to_f64(&delta_exact),
            distance,
            delta_exact,
            epsilon: report.epsilon,
            epsilon_prime: report.epsilon_prime,
            ratio: None,
        })
    }

    pub fn ratio(&self, f: &BooleanFunction, ev: &DeficitEvaluator) -> Result<StabilityRecord, IsoError> {
        let mut r = self.nearest(f, ev)?;
        if r.epsilon_prime >= 1.0 {
            return Err(IsoError::VacuousBound(r.epsilon_prime));
        }
        r.ratio = Some(if r.delta_exact.is_zero() {
            0.0
        } else if r.epsilon_prime <= 0.0 {
            f64::INFINITY
        } else {
            r.delta * (1.0 / r.epsilon_prime).ln() / r.epsilon_prime
        });
        Ok(r)
    }
}

/// The subcube closest to `f` in `mu_p`-measure of the symmetric difference.
pub fn nearest_subcube(f: &BooleanFunction, p: &Rational, monotone_only: bool) -> Result<StabilityRecord, IsoError> {
    SubcubeSearch::new(f.n(), monotone_only)?.nearest(f, &DeficitEvaluator::new(p)?)
}

/// [`nearest_subcube`] plus the empirical constant `delta ln(1/eps') / eps'`.
pub fn stability_ratio(f: &BooleanFunction, p: &Rational) -> Result<StabilityRecord, IsoError> {
    SubcubeSearch::new(f.n(), false)?.ratio(f, &DeficitEvaluator::new(p)?)
}
