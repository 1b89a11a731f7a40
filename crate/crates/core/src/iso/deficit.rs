//! The weak biased inequality `p I^p[f] >= mu log_p mu`, its excess `eps`,
//! the restriction identities and the per-coordinate dichotomy.

use num::{One, Signed, Zero};

use super::{IsoError, DEFAULT_TOL};
use crate::analysis::{eval_lemma_functions, LemmaPoint};
use crate::cube::BooleanFunction;
use crate::measure::Bias;
use crate::real::{ln_rational, to_f64};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct DeficitReport {
    pub mu: Rational,
    pub total_influence: Rational,
    /// `p I ln(1/p)`.
    pub lhs: f64,
    /// `mu ln(1/mu)`.
    pub rhs: f64,
    /// `p I / mu - log_p mu`, and 0 for the constant-0 function.
    pub epsilon: f64,
    /// `eps ln(1/p)`.
    pub epsilon_prime: f64,
    /// Set when `p > 1/2` and `f` is not monotone: no inequality is claimed.
    pub advisory: bool,
}

impl DeficitReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.epsilon >= -tol
    }
}

/// A bias together with `ln p`, for sweeps over many functions.
#[derive(Debug, Clone)]
pub struct DeficitEvaluator {
    bias: Bias,
    ln_p: f64,
    over_half: bool,
}

impl DeficitEvaluator {
    pub fn new(p: &Rational) -> Result<Self, IsoError> {
        let bias = Bias::new(p)?;
        let ln_p = ln_rational(p);
        let over_half = p * Rational::from_integer(2.into()) > Rational::one();
        Ok(Self { bias, ln_p, over_half })
    }

    pub fn bias(&self) -> &Bias {
        &self.bias
    }

    /// `ln(1/p)`.
    pub fn ln_inv_p(&self) -> f64 {
        -self.ln_p
    }

    /// `eps` from exact `mu` and `I`.
    pub fn epsilon(&self, mu: &Rational, inf: &Rational) -> f64 {
        if mu.is_zero() {
            return 0.0;
        }
        to_f64(&(self.bias.p() * inf / mu)) - ln_rational(mu) / self.ln_p
    }

    pub fn report(&self, f: &BooleanFunction) -> DeficitReport {
        let mu = self.bias.mu(f);
        let inf = self.bias.total_influence(f);
        let epsilon = self.epsilon(&mu, &inf);
        let lhs = to_f64(&(self.bias.p() * &inf)) * self.ln_inv_p();
        let rhs = if mu.is_zero() { 0.0 } else { -to_f64(&mu) * ln_rational(&mu) };
        DeficitReport {
            mu,
            total_influence: inf,
            lhs,
            rhs,
            epsilon,
            epsilon_prime: epsilon * self.ln_inv_p(),
            advisory: self.over_half && !f.is_monotone(),
        }
    }
}

pub fn weak_biased_check(f: &BooleanFunction, p: &Rational) -> Result<DeficitReport, IsoError> {
    Ok(DeficitEvaluator::new(p)?.report(f))
}

/// Which form of the restriction identity applies at a coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `mu^- <= mu^+`: `F - G`.
    FG,
    /// `mu^- > mu^+`: `H - G`.
    HG,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RestrictionStats {
    pub coordinate: usize,
    pub mu: Rational,
    pub mu_minus: Rational,
    pub mu_plus: Rational,
    pub inf_i: Rational,
    pub inf_minus: Rational,
    pub inf_plus: Rational,
    pub epsilon: f64,
    pub eps_minus: f64,
    pub eps_plus: f64,
    /// `mu eps - p mu^+ eps^+ - (1-p) mu^- eps^-`.
    pub eps_i_prime: f64,
    pub branch: Branch,
    /// `F - G` (or `H - G`) at `(mu^+, mu^-)` plus `p (I_i - |mu^+ - mu^-|)`.
    pub identity_rhs: f64,
    pub identity_residual: f64,
    /// `p mu^+ + (1-p) mu^- = mu`, exactly.
    pub eq1_exact: bool,
    /// `I = I_i + p I^+ + (1-p) I^-`, exactly.
    pub eq2_exact: bool,
}

impl DeficitEvaluator {
    pub fn restriction_stats(&self, f: &BooleanFunction, i: usize) -> Result<RestrictionStats, IsoError> {
        let b = &self.bias;
        let (p, q) = (b.p(), b.complement());
        let lo = f.restrict(i, false)?;
        let hi = f.restrict(i, true)?;
        let (mu, mu_minus, mu_plus) = (b.mu(f), b.mu(&lo), b.mu(&hi));
        let inf = b.total_influence(f);
        let (inf_minus, inf_plus) = (b.total_influence(&lo), b.total_influence(&hi));
        let inf_i = b.influence(f, i)?;
        let epsilon = self.epsilon(&mu, &inf);
        let eps_minus = self.epsilon(&mu_minus, &inf_minus);
        let eps_plus = self.epsilon(&mu_plus, &inf_plus);
        let pf = to_f64(p);
        let (m, mm, mp) = (to_f64(&mu), to_f64(&mu_minus), to_f64(&mu_plus));
        let eps_i_prime = m * epsilon - pf * mp * eps_plus - (1.0 - pf) * mm * eps_minus;
        let branch = if mu_minus <= mu_plus { Branch::FG } else { Branch::HG };
        let v = eval_lemma_functions(LemmaPoint { x: mp, y: mm, p: pf });
        let lead = match branch {
            Branch::FG => v.f,
            Branch::HG => v.h,
        };
        let gap = to_f64(&(&inf_i - (&mu_plus - &mu_minus).abs()));
        let identity_rhs = lead - v.g + pf * gap;
        let eq1_exact = p * &mu_plus + &q * &mu_minus == mu;
        let eq2_exact = &inf_i + p * &inf_plus + &q * &inf_minus == inf;
        Ok(RestrictionStats {
            coordinate: i,
            mu,
            mu_minus,
            mu_plus,
            inf_i,
            inf_minus,
            inf_plus,
            epsilon,
            eps_minus,
            eps_plus,
            eps_i_prime,
            branch,
            identity_rhs,
            identity_residual: (eps_i_prime - identity_rhs).abs(),
            eq1_exact,
            eq2_exact,
        })
    }
}

pub fn restriction_stats(f: &BooleanFunction, i: usize, p: &Rational) -> Result<RestrictionStats, IsoError> {
    DeficitEvaluator::new(p)?.restriction_stats(f, i)
}

/// Which claim's form of the dichotomy applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `p <= e^-2`: conditions on `p I_i` and `mu^-`, scaled by `ln(1/p)`.
    SmallBias,
    /// `e^-2 < p <= 1/2`: conditions on `I_i` and `min(mu^-, mu^+)`.
    Constant,
    /// `p > 1/2`, monotone `f`: same form as `SmallBias`.
    Monotone,
    /// `p > 1/2`, non-monotone `f`: nothing is claimed; evaluated in the
    /// `Constant` form as an advisory.
    Unclaimed,
}

impl Regime {
    pub fn select(p: &Rational, monotone: bool) -> Self {
        let pf = to_f64(p);
        if pf <= (-2.0f64).exp() {
            Regime::SmallBias
        } else if p * Rational::from_integer(2.into()) <= Rational::one() {
            Regime::Constant
        } else if monotone {
            Regime::Monotone
        } else {
            Regime::Unclaimed
        }
    }

    fn log_scaled(self) -> bool {
        matches!(self, Regime::SmallBias | Regime::Monotone)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordinateCase {
    Case1,
    Case2,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DichotomyReport {
    pub regime: Regime,
    pub advisory: bool,
    pub epsilon: f64,
    pub cases: Vec<CoordinateCase>,
    /// Per coordinate, the least `c2` putting it in Case (1) and in Case (2).
    pub thresholds: Vec<(f64, f64)>,
}

impl DichotomyReport {
    /// Least `c2` for which every coordinate falls into some case.
    pub fn required_constant(&self) -> f64 {
        self.thresholds
            .iter()
            .map(|&(a, b)| a.min(b))
            .fold(0.0, f64::max)
    }
}

/// Least `c >= 0` with `a <= c b`.
fn least_constant(a: f64, b: f64) -> f64 {
    if a <= DEFAULT_TOL {
        0.0
    } else if b <= DEFAULT_TOL {
        f64::INFINITY
    } else {
        a / b
    }
}

impl DeficitEvaluator {
    fn thresholds(&self, s: &RestrictionStats, regime: Regime) -> (f64, f64) {
        let pf = to_f64(self.bias.p());
        let (mu, mm, mp) = (to_f64(&s.mu), to_f64(&s.mu_minus), to_f64(&s.mu_plus));
        let inf_i = to_f64(&s.inf_i);
        let eps = s.epsilon.max(0.0);
        let eps_i = s.eps_i_prime.max(0.0);
        if regime.log_scaled() {
            let l = self.ln_inv_p();
            let case1 = least_constant(pf * inf_i, eps_i * l).max(least_constant(mu - mm, eps * l * mu));
            let case2 = least_constant(mm, eps_i * l).max(least_constant(mu - pf * inf_i, eps * l * mu));
            (case1, case2)
        } else {
            let low = mm.min(mp);
            let case1 = least_constant(inf_i, eps_i).max(least_constant(mu - low, eps * mu));
            let case2 = least_constant(low, eps_i).max(least_constant(mu - inf_i, eps * mu));
            (case1, case2)
        }
    }

    pub fn coordinate_dichotomy(&self, f: &BooleanFunction, c2: f64) -> Result<DichotomyReport, IsoError> {
        let regime = Regime::select(self.bias.p(), f.is_monotone());
        let mut cases = Vec::with_capacity(f.n());
        let mut thresholds = Vec::with_capacity(f.n());
        let mut epsilon = 0.0;
        for i in 1..=f.n() {
            let s = self.restriction_stats(f, i)?;
            epsilon = s.epsilon;
            let (a, b) = self.thresholds(&s, regime);
            cases.push(match (a <= c2, b <= c2) {
                (true, true) => CoordinateCase::Both,
                (true, false) => CoordinateCase::Case1,
                (false, true) => CoordinateCase::Case2,
                (false, false) => CoordinateCase::Neither,
            });
            thresholds.push((a, b));
        }
        Ok(DichotomyReport {
            regime,
            advisory: regime == Regime::Unclaimed,
            epsilon,
            cases,
            thresholds,
        })
    }
}

/// Classifies each coordinate at constant `c2`. Needs `n >= 2`.
pub fn coordinate_dichotomy(f: &BooleanFunction, p: &Rational, c2: f64) -> Result<DichotomyReport, IsoError> {
    DeficitEvaluator::new(p)?.coordinate_dichotomy(f, c2)
}

/// Least `c2` making the dichotomy hold at every coordinate of `f`.
pub fn required_constant(f: &BooleanFunction, p: &Rational) -> Result<f64, IsoError> {
    Ok(coordinate_dichotomy(f, p, 0.0)?.required_constant())
}
