//! The real-valued functions `F`, `G`, `H`, `K` and `alpha` behind the
//! inductive step, with grid scans of their inequalities and a
//! finite-difference check of the stated partial derivatives.
//!
//! Everything here is `f64`; the convention `0 log_p 0 = 0` is applied
//! exactly at the boundary.

/// Tolerance for "inequality holds": slack must be at least `-SLACK_TOL`.
pub const SLACK_TOL: f64 = 1e-9;
/// Step for central differences.
pub const FD_STEP: f64 = 1e-6;
/// Largest acceptable finite-difference error.
pub const FD_TOL: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaPoint {
    pub x: f64,
    pub y: f64,
    pub p: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaValues {
    pub f: f64,
    pub g: f64,
    pub h: f64,
}

/// `log_p z`.
pub fn log_p(z: f64, p: f64) -> f64 {
    z.ln() / p.ln()
}

/// `z log_p z` with `0 log_p 0 = 0`.
pub fn xlog_p(z: f64, p: f64) -> f64 {
    if z == 0.0 {
        0.0
    } else {
        z * log_p(z, p)
    }
}

pub fn eval_lemma_functions(pt: LemmaPoint) -> LemmaValues {
    let LemmaPoint { x, y, p } = pt;
    let base = p * xlog_p(x, p) + (1.0 - p) * xlog_p(y, p);
    LemmaValues {
        f: base + p * x - p * y,
        g: xlog_p(p * x + (1.0 - p) * y, p),
        h: base + p * y - p * x,
    }
}

/// `K(p) = p - (1-p) log_p(1-p)`.
pub fn eval_k(p: f64) -> f64 {
    p - (1.0 - p) * log_p(1.0 - p, p)
}

/// `alpha(p) = K(p) ln(1/p) = -p ln p + (1-p) ln(1-p)`.
pub fn eval_alpha(p: f64) -> f64 {
    -p * p.ln() + (1.0 - p) * (1.0 - p).ln()
}

pub fn alpha_prime(x: f64) -> f64 {
    -x.ln() - (1.0 - x).ln() - 2.0
}

pub fn alpha_second(x: f64) -> f64 {
    -1.0 / x + 1.0 / (1.0 - x)
}

/// `alpha'''(x) = 1/x^2 + 1/(1-x)^2`.
pub fn alpha_third(x: f64) -> f64 {
    1.0 / (x * x) + 1.0 / ((1.0 - x) * (1.0 - x))
}

/// Closed-form partial derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Partials {
    pub df_dx: f64,
    pub dg_dx: f64,
    pub dh_dy: f64,
    pub dg_dy: f64,
}

pub fn partials(pt: LemmaPoint) -> Partials {
    let LemmaPoint { x, y, p } = pt;
    let z = p * x + (1.0 - p) * y;
    let lp = p.ln();
    Partials {
        df_dx: p * log_p(p * x, p) + p / lp,
        dg_dx: p * log_p(z, p) + p / lp,
        dh_dy: (1.0 - p) * log_p(y, p) + p + (1.0 - p) / lp,
        dg_dy: (1.0 - p) * log_p(z, p) + (1.0 - p) / lp,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub x: f64,
    pub y: f64,
    pub slack: f64,
}

/// One branch of a grid scan. Branches outside the claimed parameter range
/// are still scanned but flagged `admissible = false`; their violations are
/// advisory.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchScan {
    pub name: &'static str,
    pub admissible: bool,
    pub points: u64,
    pub min_slack: f64,
    pub violations: Vec<Violation>,
}

impl BranchScan {
    /// Violations that count against the claim.
    pub fn contract_violations(&self) -> usize {
        if self.admissible {
            self.violations.len()
        } else {
            0
        }
    }
}

fn grid(grid_size: usize) -> impl Iterator<Item = f64> + Clone {
    assert!(grid_size >= 2, "grid needs at least two points per axis");
    let last = (grid_size - 1) as f64;
    (0..grid_size).map(move |i| i as f64 / last)
}

fn scan_branch(
    name: &'static str,
    admissible: bool,
    grid_size: usize,
    region: impl Fn(f64, f64) -> bool,
    slack: impl Fn(f64, f64) -> f64,
) -> BranchScan {
    let mut out = BranchScan {
        name,
        admissible,
        points: 0,
        min_slack: f64::INFINITY,
        violations: Vec::new(),
    };
    for x in grid(grid_size) {
        for y in grid(grid_size).filter(|&y| region(x, y)) {
            let s = slack(x, y);
            out.points += 1;
            out.min_slack = out.min_slack.min(s);
            if s.is_nan() || s < -SLACK_TOL {
                out.violations.push(Violation { x, y, slack: s });
            }
        }
    }
    out
}

/// `F >= G` on `x >= y`, and `H >= G` on `y >= x` (claimed for `p <= 1/2`).
pub fn scan_lemma21(p: f64, grid_size: usize) -> Vec<BranchScan> {
    let at = |x, y| eval_lemma_functions(LemmaPoint { x, y, p });
    vec![
        scan_branch("F>=G", true, grid_size, |x, y| x >= y, |x, y| {
            let v = at(x, y);
            v.f - v.g
        }),
        scan_branch("H>=G", p <= 0.5, grid_size, |x, y| y >= x, |x, y| {
            let v = at(x, y);
            v.h - v.g
        }),
    ]
}

/// The three lower bounds on `F - G` and `H - G`.
pub fn scan_basic_functions(p: f64, grid_size: usize) -> Vec<BranchScan> {
    let at = |x, y| eval_lemma_functions(LemmaPoint { x, y, p });
    let small = p <= (-2.0f64).exp();
    vec![
        scan_branch("F-G>=log", true, grid_size, |x, y| x >= y, |x, y| {
            let v = at(x, y);
            let bound = if x == y {
                0.0
            } else {
                p * (x - y) * log_p(p * x / (p * x + (1.0 - p) * y), p)
            };
            v.f - v.g - bound
        }),
        scan_branch("H-G>=log", p <= 0.5, grid_size, |x, y| y >= x, |x, y| {
            let v = at(x, y);
            let bound = if x == y {
                0.0
            } else {
                (1.0 - p) * (y - x) * log_p((1.0 - p) * y / (p * x + (1.0 - p) * y), p)
            };
            v.h - v.g - bound
        }),
        scan_branch("H-G>=p/2", small, grid_size, |x, y| y >= x, |x, y| {
            let v = at(x, y);
            v.h - v.g - 0.5 * p * (y - x)
        }),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartialsCheck {
    pub points: u64,
    /// Largest gap between a closed form and its central difference,
    /// relative once the closed form exceeds 1 in magnitude.
    pub max_error: f64,
    /// `alpha''' > 0` at every interior grid point of `(0, 1/2)`.
    pub alpha_third_positive: bool,
    /// `dF/dx >= dG/dx` at every interior grid point.
    pub f_dominates_g: bool,
}

impl PartialsCheck {
    pub fn passed(&self) -> bool {
        self.max_error <= FD_TOL && self.alpha_third_positive && self.f_dominates_g
    }
}

fn central(f: impl Fn(f64) -> f64, t: f64) -> f64 {
    (f(t + FD_STEP) - f(t - FD_STEP)) / (2.0 * FD_STEP)
}

fn mixed_error(exact: f64, approx: f64) -> f64 {
    (exact - approx).abs() / exact.abs().max(1.0)
}

/// Compares the closed-form partials (and the derivatives of `alpha`)
/// against central differences at interior points `(i+1)/(grid_size+1)`.
pub fn check_partials(p: f64, grid_size: usize) -> PartialsCheck {
    let interior: Vec<f64> = (0..grid_size).map(|i| (i + 1) as f64 / (grid_size + 1) as f64).collect();
    let mut out = PartialsCheck {
        points: 0,
        max_error: 0.0,
        alpha_third_positive: true,
        f_dominates_g: true,
    };
    for &x in &interior {
        for &y in &interior {
            let pt = LemmaPoint { x, y, p };
            let d = partials(pt);
            let at = |x, y| eval_lemma_functions(LemmaPoint { x, y, p });
            let errors = [
                mixed_error(d.df_dx, central(|t| at(t, y).f, x)),
                mixed_error(d.dg_dx, central(|t| at(t, y).g, x)),
                mixed_error(d.dh_dy, central(|t| at(x, t).h, y)),
                mixed_error(d.dg_dy, central(|t| at(x, t).g, y)),
            ];
            out.points += 1;
            out.max_error = errors.iter().fold(out.max_error, |m, &e| m.max(e));
            if d.df_dx < d.dg_dx - SLACK_TOL {
                out.f_dominates_g = false;
            }
        }
        let errors = [
            mixed_error(alpha_prime(x), central(eval_alpha, x)),
            mixed_error(alpha_second(x), central(alpha_prime, x)),
            mixed_error(alpha_third(x), central(alpha_second, x)),
        ];
        out.max_error = errors.iter().fold(out.max_error, |m, &e| m.max(e));
        let a3 = alpha_third(x);
        if x < 0.5 && (a3.is_nan() || a3 <= 0.0) {
            out.alpha_third_positive = false;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KScan {
    pub points: u64,
    /// `min K(p)` over `(0, 1/2]`.
    pub min_k: f64,
    /// `min K(p) - p/2` over `(0, e^-2]`.
    pub min_gap_small: f64,
}

impl KScan {
    pub fn passed(&self) -> bool {
        self.min_k >= -SLACK_TOL && self.min_gap_small >= -SLACK_TOL
    }
}

/// `samples` equally spaced points on each of `(0, 1/2]` and `(0, e^-2]`.
pub fn scan_k(samples: usize) -> KScan {
    let along = |upper: f64| (1..=samples).map(move |i| upper * i as f64 / samples as f64);
    KScan {
        points: 2 * samples as u64,
        min_k: along(0.5).map(eval_k).fold(f64::INFINITY, f64::min),
        min_gap_small: along((-2.0f64).exp())
            .map(|p| eval_k(p) - p / 2.0)
            .fold(f64::INFINITY, f64::min),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn diagonal_values_coincide() {
        let v = eval_lemma_functions(LemmaPoint { x: 0.25, y: 0.25, p: 1.0 / 3.0 });
        assert!(close(v.f, v.g, 1e-15) && close(v.g, v.h, 1e-15));
        let z = eval_lemma_functions(LemmaPoint { x: 0.0, y: 0.0, p: 0.3 });
        assert_eq!((z.f, z.g, z.h), (0.0, 0.0, 0.0));
    }

    #[test]
    fn k_and_alpha_values() {
        assert!(close(eval_k(0.5), 0.0, 1e-15));
        assert!(close(eval_alpha(0.5), 0.0, 1e-15));
        let direct = -0.25 * 0.25f64.ln() + 0.75 * 0.75f64.ln();
        assert!(close(eval_alpha(0.25), direct, 1e-15));
        assert!(close(eval_alpha(0.25), 0.1308, 1e-4));
        for p in [0.1, 0.2, 0.4] {
            assert!(close(eval_alpha(p), eval_k(p) * (1.0 / p).ln(), 1e-14));
        }
    }

    #[test]
    fn alpha_third_is_positive() {
        assert!(close(alpha_third(0.3), 1.0 / 0.09 + 1.0 / 0.49, 1e-12));
        assert!(alpha_third(0.3) > 0.0);
    }

    #[test]
    fn lemma21_scans() {
        for p in [0.1, 1.0 / 3.0, 0.49] {
            for b in scan_lemma21(p, 200) {
                assert!(b.admissible);
                assert!(b.violations.is_empty(), "p={p} {}: {:?}", b.name, b.violations.first());
            }
        }
        let advisory = scan_lemma21(0.7, 50);
        assert!(!advisory[1].admissible);
        assert_eq!(advisory[1].contract_violations(), 0);
        assert!(!advisory[1].violations.is_empty());
    }

    #[test]
    fn basic_function_scans() {
        for p in [0.1, 1.0 / 3.0, 0.49] {
            let scans = scan_basic_functions(p, 200);
            assert_eq!(scans[2].admissible, p == 0.1);
            for b in scans.iter().filter(|b| b.admissible) {
                assert!(b.violations.is_empty(), "p={p} {}: {:?}", b.name, b.violations.first());
            }
        }
    }

    #[test]
    fn partial_derivatives_match_differences() {
        for p in [0.1, 1.0 / 3.0, 0.49] {
            let c = check_partials(p, 50);
            assert!(c.passed(), "p={p}: {c:?}");
            assert_eq!(c.points, 2500);
        }
        // the gap is p log_p(px / (px + (1-p)y)), which is p on the diagonal
        let (x, y, p) = (0.4, 0.25, 0.3);
        let d = partials(LemmaPoint { x, y, p });
        let gap = p * log_p(p * x / (p * x + (1.0 - p) * y), p);
        assert!(close(d.df_dx - d.dg_dx, gap, 1e-12));
        let d = partials(LemmaPoint { x: 0.4, y: 0.4, p });
        assert!(close(d.df_dx - d.dg_dx, p, 1e-12));
    }

    #[test]
    fn k_scan() {
        let s = scan_k(10_000);
        assert!(s.passed(), "{s:?}");
        assert!(s.min_k >= 0.0);
    }
}
