use std::ops::Range;
use std::path::Path;
use std::time::Instant;

use cube_iso::analysis::{check_partials, scan_basic_functions, scan_k, scan_lemma21};
use cube_iso::cube::{self, function_from_index, function_count, monotone_functions, to_hex};
use cube_iso::iso::deficit::DeficitEvaluator;
use cube_iso::iso::sharpness::{family_a, family_a_closed_form, family_b, family_b_closed_form, sharpness_row};
use cube_iso::iso::{brute_force_min_boundary, full_iso_check, monotone_full_check, SubcubeSearch};
use cube_iso::iso::full::BRUTE_FORCE_LIMIT;
use cube_iso::lex::{kk_min_upper_shadow, upper_shadow};
use cube_iso::measure::{binomial, format_rational, margulis_russo_residual};
use cube_iso::real::to_f64;
use cube_iso::{BooleanFunction, KUniformFamily, Rational};
use rayon::prelude::*;
use serde_json::Value;

use crate::report::Report;
use crate::CliError;

/// Largest `n` for scans over every function.
pub const ALL_LIMIT: usize = 4;
/// Largest `n` for scans over every monotone function.
pub const MONOTONE_LIMIT: usize = 5;
/// Largest number of `k`-sets for exhaustive Kruskal-Katona scans.
pub const KK_SETS_LIMIT: u64 = 20;
/// Sample count for the `K(p)` scan.
pub const K_SAMPLES: usize = 10_000;

const CHUNK: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scope {
    All,
    Monotone,
    File,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Monotone => "monotone",
            Scope::File => "file",
        }
    }
}

fn guard(what: &str, n: usize, limit: usize) -> Result<(), CliError> {
    if n == 0 || n > limit {
        return Err(CliError::ScopeTooLarge { what: what.to_string(), n, limit });
    }
    Ok(())
}

/// Runs `scan` over fixed chunks of `0..total` in parallel and folds the
/// results in index order, so the outcome does not depend on scheduling.
fn chunked<S: Send>(
    total: u64,
    scan: impl Fn(Range<u64>) -> Result<S, CliError> + Sync,
    merge: impl Fn(S, S) -> S,
) -> Result<Option<S>, CliError> {
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<Result<S, CliError>> = (0..chunks)
        .into_par_iter()
        .map(|c| scan(c * CHUNK..((c + 1) * CHUNK).min(total)))
        .collect();
    let mut acc: Option<S> = None;
    for part in parts {
        let part = part?;
        acc = Some(match acc {
            None => part,
            Some(a) => merge(a, part),
        });
    }
    Ok(acc)
}

/// Keeps `a` unless `b` is strictly better, so earlier indices win ties.
fn better<T>(a: Option<(f64, T)>, b: Option<(f64, T)>, larger: bool) -> Option<(f64, T)> {
    match (a, b) {
        (Some(a), Some(b)) => {
            if (larger && b.0 > a.0) || (!larger && b.0 < a.0) {
                Some(b)
            } else {
                Some(a)
            }
        }
        (a, b) => a.or(b),
    }
}

fn timed(mut report: Report, start: Instant) -> Report {
    report.runtime_ms = start.elapsed().as_millis() as u64;
    report
}

/// Is the support of `f` a nonempty subcube fixing only ones?
fn is_monotone_subcube(f: &BooleanFunction) -> bool {
    let mut and = usize::MAX;
    let mut or = 0usize;
    let mut count = 0u64;
    for x in f.iter_ones() {
        and &= x;
        or |= x;
        count += 1;
    }
    count > 0 && or == (1 << f.n()) - 1 && count == 1 << (and ^ or).count_ones()
}

fn functions_in_scope(
    n: usize,
    scope: Scope,
    input: Option<&Path>,
) -> Result<(usize, Option<Vec<BooleanFunction>>), CliError> {
    match scope {
        Scope::All => {
            guard("scope=all", n, ALL_LIMIT)?;
            Ok((n, None))
        }
        Scope::Monotone => {
            guard("scope=monotone", n, MONOTONE_LIMIT)?;
            Ok((n, Some(monotone_functions(n)?)))
        }
        Scope::File => {
            let path = input.ok_or_else(|| CliError::Input("scope=file needs --input".into()))?;
            let text = std::fs::read_to_string(path)?;
            let f = cube::read_truth_table(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Ok((f.n(), Some(vec![f])))
        }
    }
}

#[derive(Debug, Clone, Default)]
struct WeakStats {
    cases: u64,
    violations: u64,
    advisory: u64,
    min_epsilon: Option<(f64, u64)>,
    max_equality_epsilon: Option<(f64, u64)>,
}

impl WeakStats {
    fn merge(self, o: Self) -> Self {
        Self {
            cases: self.cases + o.cases,
            violations: self.violations + o.violations,
            advisory: self.advisory + o.advisory,
            min_epsilon: better(self.min_epsilon, o.min_epsilon, false),
            max_equality_epsilon: better(self.max_equality_epsilon, o.max_equality_epsilon, true),
        }
    }
}

/// The weak biased isoperimetric inequality `p I ln(1/p) >= mu ln(1/mu)`
/// over every function in scope. Non-monotone functions at `p > 1/2` are
/// counted as advisory and skipped.
pub fn cmd_verify_weak(
    n: usize,
    p: &Rational,
    scope: Scope,
    input: Option<&Path>,
    tol: f64,
) -> Result<Report, CliError> {
    let start = Instant::now();
    let (n, listed) = functions_in_scope(n, scope, input)?;
    let ev = DeficitEvaluator::new(p)?;
    let total = match &listed {
        Some(v) => v.len() as u64,
        None => function_count(n)?,
    };
    let stats = chunked(
        total,
        |range| {
            let mut s = WeakStats::default();
            for idx in range {
                let f = match &listed {
                    Some(v) => v[idx as usize].clone(),
                    None => function_from_index(n, idx)?,
                };
                s.cases += 1;
                let r = ev.report(&f);
                if r.advisory {
                    s.advisory += 1;
                    continue;
                }
                if !r.holds(tol) {
                    s.violations += 1;
                }
                s.min_epsilon = better(s.min_epsilon, Some((r.epsilon, idx)), false);
                if is_monotone_subcube(&f) {
                    s.max_equality_epsilon = better(s.max_equality_epsilon, Some((r.epsilon.abs(), idx)), true);
                }
            }
            Ok(s)
        },
        WeakStats::merge,
    )?
    .unwrap_or_default();

    let mut report = Report::new("verify_weak");
    report
        .param("n", n)
        .param("p", format_rational(p))
        .param("scope", scope.name())
        .param("tol", tol)
        .counter("cases", stats.cases)
        .counter("violations", stats.violations)
        .counter("advisory_skipped", stats.advisory);
    let describe = |idx: u64| match &listed {
        Some(v) => to_hex(&v[idx as usize]),
        None => to_hex(&function_from_index(n, idx).expect("index in range")),
    };
    if let Some((e, idx)) = stats.min_epsilon {
        report.float("min_epsilon", e).extremum("min_epsilon_function", describe(idx));
    }
    if let Some((e, _)) = stats.max_equality_epsilon {
        report.float("max_abs_epsilon_monotone_subcubes", e);
    }
    report.passed = stats.violations == 0;
    Ok(timed(report, start))
}

/// `|boundary(F)| >= |boundary(lex family)|` over every family at `n`, plus
/// the brute-force minimum for every size when `n` is small enough.
pub fn cmd_full_iso(n: usize) -> Result<Report, CliError> {
    let start = Instant::now();
    guard("full edge iso", n, ALL_LIMIT)?;
    let total = function_count(n)?;
    let (families, violations, min_slack) = chunked(
        total,
        |range| {
            let mut out = (0u64, 0u64, i64::MAX);
            for idx in range {
                let r = full_iso_check(&function_from_index(n, idx)?)?;
                out.0 += 1;
                out.1 += u64::from(!r.ok);
                out.2 = out.2.min(r.boundary as i64 - r.lex_boundary as i64);
            }
            Ok(out)
        },
        |a, b| (a.0 + b.0, a.1 + b.1, a.2.min(b.2)),
    )?
    .unwrap_or((0, 0, 0));

    let mut report = Report::new("full_iso");
    report
        .param("n", n)
        .counter("families", families)
        .counter("violations", violations)
        .extremum("min_boundary_slack", min_slack);
    let mut mismatches = 0;
    if n <= BRUTE_FORCE_LIMIT {
        let sizes = (0..=1u64 << n).collect::<Vec<_>>();
        let rows: Vec<Result<(u64, u64), CliError>> = sizes
            .par_iter()
            .map(|&m| {
                let brute = brute_force_min_boundary(n, m)?;
                let lex = cube_iso::measure::edge_boundary(&cube_iso::lex::lex_family(n, m)?).len() as u64;
                Ok((brute, lex))
            })
            .collect();
        let mut minima = Vec::new();
        for row in rows {
            let (brute, lex) = row?;
            mismatches += u64::from(brute != lex);
            minima.push(Value::from(brute));
        }
        report
            .counter("brute_force_sizes", sizes.len() as u64)
            .counter("brute_force_mismatches", mismatches)
            .extremum("min_boundary_by_size", minima);
    }
    report.passed = violations == 0 && mismatches == 0;
    Ok(timed(report, start))
}

/// Kruskal-Katona over every family of `k`-subsets of `[n]`.
pub fn cmd_kk(n: usize, k: usize) -> Result<Report, CliError> {
    let start = Instant::now();
    if k == 0 || k >= n || n > 32 {
        return Err(CliError::Input(format!("need 1 <= k < n <= 32, got n = {n}, k = {k}")));
    }
    let sets_count = binomial(n as u64, k as u64);
    if sets_count > KK_SETS_LIMIT {
        return Err(CliError::ScopeTooLarge {
            what: format!("{sets_count} {k}-sets (families of {k}-sets)"),
            n,
            limit: KK_SETS_LIMIT as usize,
        });
    }
    let sets: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    let minima = (0..=sets_count)
        .map(|m| kk_min_upper_shadow(n, k, m))
        .collect::<Result<Vec<_>, _>>()?;
    let (families, violations) = chunked(
        1u64 << sets_count,
        |range| {
            let mut out = (0u64, 0u64);
            for mask in range {
                let members = sets.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &s)| s);
                let fam = KUniformFamily::new(n, k, members)?;
                let shadow = upper_shadow(&fam)?.len() as u64;
                out.0 += 1;
                out.1 += u64::from(shadow < minima[fam.len()]);
            }
            Ok(out)
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    )?
    .unwrap_or((0, 0));

    let mut report = Report::new("kk");
    report
        .param("n", n)
        .param("k", k)
        .counter("families", families)
        .counter("violations", violations)
        .extremum("min_upper_shadow_by_size", minima);
    report.passed = violations == 0;
    Ok(timed(report, start))
}

#[derive(Debug, Clone, Default)]
struct MonotoneFullStats {
    cases: u64,
    violations: u64,
    exact: u64,
    min_slack: Option<(f64, u64)>,
    max_tail: f64,
}

/// `I^p[F] >= I^p[L_lambda] - tail` over every monotone family at `n`, and
/// exact equality for `{x1 = 1} u {x2 = 1}`.
pub fn cmd_monotone_full(n: usize, p: &Rational, depth: usize) -> Result<Report, CliError> {
    let start = Instant::now();
    guard("monotone full iso", n, MONOTONE_LIMIT)?;
    if depth == 0 {
        return Err(CliError::Input("depth must be positive".into()));
    }
    let fs = monotone_functions(n)?;
    let stats = chunked(
        fs.len() as u64,
        |range| {
            let mut s = MonotoneFullStats::default();
            for idx in range {
                let r = monotone_full_check(&fs[idx as usize], p, depth)?;
                s.cases += 1;
                s.violations += u64::from(!r.ok);
                s.exact += u64::from(r.exact);
                let slack = to_f64(&(&r.lhs - &r.rhs + &r.tail));
                s.min_slack = better(s.min_slack, Some((slack, idx)), false);
                s.max_tail = s.max_tail.max(to_f64(&r.tail));
            }
            Ok(s)
        },
        |a, b| MonotoneFullStats {
            cases: a.cases + b.cases,
            violations: a.violations + b.violations,
            exact: a.exact + b.exact,
            min_slack: better(a.min_slack, b.min_slack, false),
            max_tail: a.max_tail.max(b.max_tail),
        },
    )?
    .unwrap_or_default();

    let mut report = Report::new("monotone_full");
    report
        .param("n", n)
        .param("p", format_rational(p))
        .param("depth", depth)
        .counter("cases", stats.cases)
        .counter("violations", stats.violations)
        .counter("exact_expansions", stats.exact)
        .float("max_tail", stats.max_tail);
    if let Some((slack, idx)) = stats.min_slack {
        report.float("min_slack", slack).extremum("min_slack_function", to_hex(&fs[idx as usize]));
    }
    let mut equality_ok = true;
    if n >= 2 {
        let f = BooleanFunction::from_fn(n, |x| x & 0b11 != 0)?;
        let r = monotone_full_check(&f, p, depth)?;
        equality_ok = r.exact && r.lhs == r.rhs && r.tail == Rational::from_integer(0.into());
        report.counter("equality_reproduced", u64::from(equality_ok));
        if let Some(b) = &r.expansion {
            report.extremum("equality_expansion", b.to_string());
        }
    }
    report.passed = stats.violations == 0 && equality_ok;
    Ok(timed(report, start))
}

#[derive(Debug, Clone, Default)]
struct StabilityStats {
    cases: u64,
    in_range: u64,
    advisory: u64,
    infinite: u64,
    max_ratio: Option<(f64, u64)>,
    max_constant: Option<(f64, u64)>,
}

/// Empirical stability constant `delta ln(1/eps') / eps'` over every function
/// at `n` with `0 < eps' <= eps_max`, and the least dichotomy constant that
/// works for all of them. Advisory: always passes.
pub fn cmd_stability_scan(n: usize, p: &Rational, eps_max: f64, monotone_only: bool) -> Result<Report, CliError> {
    let start = Instant::now();
    guard("stability scan", n, ALL_LIMIT)?;
    if !(eps_max > 0.0 && eps_max < 1.0) {
        return Err(CliError::Input(format!("eps-max must lie in (0, 1), got {eps_max}")));
    }
    let ev = DeficitEvaluator::new(p)?;
    let search = SubcubeSearch::new(n, monotone_only)?;
    let stats = chunked(
        function_count(n)?,
        |range| {
            let mut s = StabilityStats::default();
            for idx in range {
                let f = function_from_index(n, idx)?;
                s.cases += 1;
                let r = ev.report(&f);
                if r.advisory {
                    s.advisory += 1;
                    continue;
                }
                if !(r.epsilon_prime > 0.0 && r.epsilon_prime <= eps_max) {
                    continue;
                }
                s.in_range += 1;
                let ratio = search.ratio(&f, &ev)?.ratio.unwrap_or(f64::NAN);
                if !ratio.is_finite() {
                    s.infinite += 1;
                }
                s.max_ratio = better(s.max_ratio, Some((ratio, idx)), true);
                if n >= 2 {
                    let c = ev.coordinate_dichotomy(&f, 0.0)?.required_constant();
                    s.max_constant = better(s.max_constant, Some((c, idx)), true);
                }
            }
            Ok(s)
        },
        |a, b| StabilityStats {
            cases: a.cases + b.cases,
            in_range: a.in_range + b.in_range,
            advisory: a.advisory + b.advisory,
            infinite: a.infinite + b.infinite,
            max_ratio: better(a.max_ratio, b.max_ratio, true),
            max_constant: better(a.max_constant, b.max_constant, true),
        },
    )?
    .unwrap_or_default();

    let mut report = Report::new("stability_scan");
    report
        .param("n", n)
        .param("p", format_rational(p))
        .param("eps_max", eps_max)
        .param("monotone_only", monotone_only)
        .counter("cases", stats.cases)
        .counter("in_range", stats.in_range)
        .counter("advisory_skipped", stats.advisory)
        .counter("infinite_ratios", stats.infinite);
    if let Some((ratio, idx)) = stats.max_ratio {
        let f = function_from_index(n, idx)?;
        let rec = search.ratio(&f, &ev)?;
        report
            .float("max_ratio", ratio)
            .extremum("max_ratio_function", to_hex(&f))
            .extremum("max_ratio_subcube", rec.best_subcube.to_string())
            .extremum("max_ratio_delta", format_rational(&rec.delta_exact))
            .float("max_ratio_epsilon_prime", rec.epsilon_prime);
    }
    if let Some((c, idx)) = stats.max_constant {
        report
            .float("min_dichotomy_constant", c)
            .extremum("min_dichotomy_constant_function", to_hex(&function_from_index(n, idx)?));
    }
    report.passed = true;
    Ok(timed(report, start))
}

fn rationals(v: &[Rational]) -> Value {
    v.iter().map(format_rational).collect::<Vec<_>>().into()
}

/// The sharpness families at `(t, s, p)`: family `A` measured on `t + s`
/// coordinates against its closed form, the stability ratio against the lower
/// bound, and both families' closed forms checked on `n` coordinates.
pub fn cmd_sharpness(n: Option<usize>, t: usize, s: usize, p: &Rational, tol: f64) -> Result<Report, CliError> {
    let start = Instant::now();
    let n = n.unwrap_or(t + s);
    guard("sharpness", n, cube_iso::iso::stability::MAX_SEARCH_DIMENSION)?;
    let row = sharpness_row(t, s, p)?;
    let ev = DeficitEvaluator::new(p)?;
    let bias = ev.bias();

    let a = family_a(n, t, s)?;
    let a_closed = family_a_closed_form(n, t, s, p)?;
    let a_influences = bias.influences(&a);
    let a_ok = bias.mu(&a) == a_closed.mu && a_influences == a_closed.influences;

    let b = family_b(n, t, s)?;
    let b_closed = family_b_closed_form(n, t, s, p)?;
    let b_mu = bias.mu(&b);
    let b_ok = b_mu == b_closed.mu
        && bias.influences(&b) == b_closed.influences
        && bias.total_influence(&b) == b_closed.total_influence;
    let b_epsilon = ev.epsilon(&b_mu, &bias.total_influence(&b));
    let b_within = b_epsilon <= to_f64(&b_closed.epsilon) + tol;
    let bound_ok = row.ratio >= row.normalized_lower_bound - tol;

    let mut report = Report::new("sharpness");
    report
        .param("n", n)
        .param("t", t)
        .param("s", s)
        .param("p", format_rational(p))
        .param("tol", tol)
        .counter("closed_form_mismatches", u64::from(!row.matches_closed_form) + u64::from(!a_ok) + u64::from(!b_ok))
        .counter("lower_bound_violations", u64::from(!bound_ok))
        .counter("b_epsilon_within_stated_bound", u64::from(b_within))
        .extremum("mu_a", format_rational(&row.mu))
        .extremum("total_influence_a", format_rational(&row.total_influence))
        .extremum("epsilon_a", format_rational(&row.closed_form.epsilon))
        .float("epsilon", row.epsilon)
        .float("epsilon_prime", row.epsilon_prime)
        .extremum("delta", format_rational(&row.delta_exact))
        .float("ratio", row.ratio)
        .float("lower_bound", row.lower_bound)
        .float("normalized_lower_bound", row.normalized_lower_bound)
        .extremum("influences_a", rationals(&a_influences))
        .extremum("mu_b", format_rational(&b_mu))
        .extremum("total_influence_b", format_rational(&b_closed.total_influence))
        .float("epsilon_b", b_epsilon)
        .extremum("epsilon_b_stated_bound", format_rational(&b_closed.epsilon));
    report.passed = row.matches_closed_form && a_ok && b_ok && bound_ok;
    Ok(timed(report, start))
}

/// The table printed alongside [`cmd_sharpness`].
pub fn sharpness_table(report: &Report) -> String {
    let get = |k: &str| report.extrema.get(k).map(|v| v.to_string()).unwrap_or_default();
    format!(
        "family A: mu = {}, I = {}, eps = {} ({}), eps' = {}, delta = {}\n\
         ratio delta ln(1/eps')/eps' = {}\n\
         lower bound delta >= eps'/(2 ln(2/eps')) = {} (normalized {})\n\
         family B: mu = {}, eps = {} (stated bound {})",
        get("mu_a"),
        get("total_influence_a"),
        get("epsilon_a"),
        get("epsilon"),
        get("epsilon_prime"),
        get("delta"),
        get("ratio"),
        get("lower_bound"),
        get("normalized_lower_bound"),
        get("mu_b"),
        get("epsilon_b"),
        get("epsilon_b_stated_bound"),
    )
}

/// Grid scans of the two-variable inequalities, finite-difference checks of
/// their partial derivatives, and the `K(p)` scan.
pub fn cmd_lemma_scan(p: &Rational, grid: usize) -> Result<Report, CliError> {
    let start = Instant::now();
    let pf = to_f64(p);
    if !(pf > 0.0 && pf < 1.0) {
        return Err(CliError::Input(format!("need 0 < p < 1, got {}", format_rational(p))));
    }
    if grid < 2 {
        return Err(CliError::Input("grid must be at least 2".into()));
    }
    let mut report = Report::new("lemma_scan");
    report.param("p", format_rational(p)).param("grid", grid);
    let (mut points, mut violations, mut advisory) = (0u64, 0u64, 0u64);
    for b in scan_lemma21(pf, grid).into_iter().chain(scan_basic_functions(pf, grid)) {
        points += b.points;
        violations += b.contract_violations() as u64;
        if !b.admissible {
            advisory += b.violations.len() as u64;
        }
        report.float(&format!("min_slack[{}]", b.name), b.min_slack);
        report.extremum(&format!("admissible[{}]", b.name), b.admissible);
    }
    let partials = check_partials(pf, grid);
    let k = scan_k(K_SAMPLES);
    report
        .counter("points", points)
        .counter("violations", violations)
        .counter("advisory_violations", advisory)
        .counter("derivative_points", partials.points)
        .counter("k_points", k.points)
        .float("fd_max_error", partials.max_error)
        .extremum("alpha_third_positive", partials.alpha_third_positive)
        .extremum("f_dominates_g", partials.f_dominates_g)
        .float("k_min", k.min_k)
        .float("k_min_gap_small_p", k.min_gap_small);
    report.passed = violations == 0 && partials.passed() && k.passed();
    Ok(timed(report, start))
}

/// `d/dp mu_p(F) = I^p[F]` as an identity of integer polynomials, over every
/// monotone family at `n`.
pub fn cmd_russo(n: usize) -> Result<Report, CliError> {
    let start = Instant::now();
    guard("margulis-russo", n, MONOTONE_LIMIT)?;
    let fs = monotone_functions(n)?;
    let nonzero = fs
        .par_iter()
        .map(|f| margulis_russo_residual(f).map(|r| u64::from(!r.is_zero())))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum::<u64>();
    let mut report = Report::new("russo");
    report
        .param("n", n)
        .counter("families", fs.len() as u64)
        .counter("nonzero_residuals", nonzero)
        .counter("violations", nonzero);
    report.passed = nonzero == 0;
    Ok(timed(report, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subcube_detection() {
        assert!(is_monotone_subcube(&BooleanFunction::dictator(3, 2).unwrap()));
        assert!(is_monotone_subcube(&BooleanFunction::from_points(2, [0b11]).unwrap()));
        assert!(is_monotone_subcube(&BooleanFunction::constant(2, true).unwrap()));
        assert!(!is_monotone_subcube(&BooleanFunction::antidictator(3, 2).unwrap()));
        assert!(!is_monotone_subcube(&BooleanFunction::from_points(3, [0b101]).unwrap()));
        assert!(!is_monotone_subcube(&BooleanFunction::from_points(2, [0b01, 0b10]).unwrap()));
        assert!(!is_monotone_subcube(&BooleanFunction::constant(2, false).unwrap()));
    }

    #[test]
    fn chunked_folds_in_order() {
        let v = chunked(5000, |r| Ok(vec![r.start]), |mut a, b| { a.extend(b); a }).unwrap().unwrap();
        assert_eq!(v, [0, 1024, 2048, 3072, 4096]);
    }

    #[test]
    fn ties_keep_the_earlier_index() {
        assert_eq!(better(Some((1.0, 3)), Some((1.0, 7)), true), Some((1.0, 3)));
        assert_eq!(better(Some((1.0, 3)), Some((2.0, 7)), true), Some((2.0, 7)));
        assert_eq!(better(None, Some((2.0, 7)), false), Some((2.0, 7)));
    }
}
