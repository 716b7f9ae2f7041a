//! Numerical verification of the two sufficiency systems certifying a pair
//! (1+δ, t) as triangular, minimizers for δ (fixed t) and for t (n colors),
//! and the auxiliary quadratic bounds on the edge count k.
//!
//! Arithmetic is IEEE double with an explicit strictness margin: a strict
//! inequality counts as satisfied only when its slack exceeds the margin,
//! while the single non-strict condition (D1) tolerates slack down to
//! minus the margin.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default strictness margin for the strict inequalities.
pub const DEFAULT_MARGIN: f64 = 1e-9;
/// Default minimum-out-degree fraction known to force a directed triangle;
/// an input of condition D1, configurable so improvements propagate.
pub const DEFAULT_CH_CONSTANT: f64 = 0.3465;
/// Default bisection tolerance for the minimizers.
pub const DEFAULT_BISECT_TOL: f64 = 1e-6;
/// Default ε-grid resolution for [`minimize_delta`].
pub const DEFAULT_EPS_GRID: usize = 4000;
/// Default ε-grid resolution for [`minimize_t`].
pub const DEFAULT_EPS_GRID_2D: usize = 800;
/// Default δ-grid resolution for [`minimize_t`]. The feasible δ-interval
/// collapses as t approaches its minimum, so the grid must stay fine enough
/// for some point to land inside it; 2000 points resolve t to ~2e-5.
pub const DEFAULT_DELTA_GRID_2D: usize = 2000;

/// A parameter point (t, δ, ε) with the derived λ = √(1−2ε) and
/// α = (t/2)(λ+1).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParameterPoint {
    pub t: f64,
    pub delta: f64,
    pub eps: f64,
    #[serde(skip)]
    pub lambda: f64,
    #[serde(skip)]
    pub alpha: f64,
}

impl ParameterPoint {
    /// Validates `t > 0` and `0 < ε < 1/2`, then derives λ and α.
    pub fn new(t: f64, delta: f64, eps: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("t must be positive, got {t}")));
        }
        if !(eps > 0.0 && eps < 0.5) {
            return Err(Error::Domain(format!("eps must lie in (0, 1/2), got {eps}")));
        }
        if !delta.is_finite() {
            return Err(Error::Domain(format!("delta must be finite, got {delta}")));
        }
        let lambda = (1.0 - 2.0 * eps).sqrt();
        let alpha = t / 2.0 * (lambda + 1.0);
        Ok(Self {
            t,
            delta,
            eps,
            lambda,
            alpha,
        })
    }
}

/// One evaluated inequality. `residual` is the satisfied-direction slack:
/// `rhs - lhs` for a `<` condition, `lhs - rhs` for `>` and `>=`.
#[derive(Debug, Clone, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    #[serde(skip)]
    pub strict: bool,
}

impl Condition {
    fn strict_lt(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            name,
            lhs,
            rhs,
            residual: rhs - lhs,
            strict: true,
        }
    }

    fn strict_gt(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            name,
            lhs,
            rhs,
            residual: lhs - rhs,
            strict: true,
        }
    }

    fn ge(name: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            name,
            lhs,
            rhs,
            residual: lhs - rhs,
            strict: false,
        }
    }

    pub fn satisfied(&self, margin: f64) -> bool {
        if self.strict {
            self.residual > margin
        } else {
            self.residual >= -margin
        }
    }
}

/// Identifier of the condition system a report was evaluated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    /// The three-condition system for at least (1+δ)n color classes.
    #[serde(rename = "3.1")]
    SurplusColors,
    /// The four-condition system for n color classes.
    #[serde(rename = "4.1")]
    UniformColors,
}

/// Residuals and verdict for one parameter point against one condition
/// system.
#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityReport {
    pub theorem: TheoremId,
    pub point: ParameterPoint,
    pub conditions: Vec<Condition>,
    pub feasible: bool,
    pub margin: f64,
    /// Only set for the n-colors system.
    pub ch_constant: Option<f64>,
}

fn validate_margin(margin: f64) -> Result<()> {
    if !(margin >= 0.0 && margin.is_finite()) {
        return Err(Error::Domain(format!(
            "margin must be a non-negative finite number, got {margin}"
        )));
    }
    Ok(())
}

fn surplus_conditions(p: &ParameterPoint) -> [Condition; 3] {
    let (t, d, e, lam) = (p.t, p.delta, p.eps, p.lambda);
    let gap = t * (1.0 + d) - 0.25;
    [
        Condition::strict_lt(
            "C1",
            (1.0 + d - e * d) * t / 2.0,
            4.0 / 3.0 * (1.0 + d) * gap,
        ),
        Condition::strict_gt(
            "C2",
            8.0 / (3.0 * t) * gap * (1.0 + d)
                + t / 12.0 * (lam + 1.0) * (4.0 * (1.0 - e) - (1.0 - lam) * (1.0 - lam)),
            1.0 + d,
        ),
        Condition::strict_gt("C3", 16.0 / 3.0 * (1.0 + d), 2.0 / (3.0 * t) + 1.0),
    ]
}

/// Allocation-free feasibility of the surplus-color system; arguments must
/// already be in range. Used on the minimizer hot path.
fn surplus_feasible(t: f64, delta: f64, eps: f64, margin: f64) -> bool {
    let Ok(p) = ParameterPoint::new(t, delta, eps) else {
        return false;
    };
    delta > 0.0 && surplus_conditions(&p).iter().all(|c| c.satisfied(margin))
}

/// Evaluates the three conditions under which an edge-colored graph with at
/// least (1+δ)n color classes of size at least tn each must contain a
/// rainbow triangle, with λ = √(1−2ε):
///
/// * C1: `(1+δ-εδ)t/2 < (4/3)(1+δ)(t(1+δ) - 1/4)`
/// * C2: `(8/3t)(t(1+δ) - 1/4)(1+δ) + (t/12)(λ+1)(4(1-ε) - (1-λ)²) > 1+δ`
/// * C3: `(16/3)(1+δ) > 2/(3t) + 1`
///
/// All three are strict; the point is feasible when every slack exceeds
/// `margin`.
pub fn check_thm31(t: f64, delta: f64, eps: f64, margin: f64) -> Result<FeasibilityReport> {
    validate_margin(margin)?;
    let p = ParameterPoint::new(t, delta, eps)?;
    if !(delta > 0.0) {
        return Err(Error::Domain(format!(
            "delta must be positive, got {delta}"
        )));
    }
    let conditions = surplus_conditions(&p).to_vec();
    let feasible = conditions.iter().all(|c| c.satisfied(margin));
    Ok(FeasibilityReport {
        theorem: TheoremId::SurplusColors,
        point: p,
        conditions,
        feasible,
        margin,
        ch_constant: None,
    })
}

fn uniform_conditions(p: &ParameterPoint, ch_constant: f64) -> [Condition; 4] {
    let (t, d, e) = (p.t, p.delta, p.eps);
    [
        Condition::ge("D1", ((1.0 - e) * t - d) / (1.0 - d), ch_constant),
        Condition::strict_gt("D2", t, 0.5 - (1.0 - e) * (1.0 - e) * t * t),
        Condition::strict_gt(
            "D3",
            8.0 / 3.0 * (t - 0.25),
            (1.0 - d * (2.0 * e - 2.0 * e * e)) * t,
        ),
        Condition::strict_gt("D4", 1.0 + 2.0 * d * e * e, 4.0 * e * d),
    ]
}

/// Allocation-free feasibility of the n-colors system; arguments must
/// already be in range. Used on the minimizer hot path.
fn uniform_feasible(t: f64, delta: f64, eps: f64, ch_constant: f64, margin: f64) -> bool {
    let Ok(p) = ParameterPoint::new(t, delta, eps) else {
        return false;
    };
    delta > 0.0
        && delta < 1.0
        && uniform_conditions(&p, ch_constant)
            .iter()
            .all(|c| c.satisfied(margin))
}

/// Evaluates the four conditions under which an edge-colored graph with n
/// color classes of size at least tn each must contain a rainbow triangle.
/// `ch_constant` is the minimum-out-degree fraction known to force a
/// directed triangle:
///
/// * D1 (non-strict): `((1-ε)t - δ)/(1-δ) >= ch_constant`
/// * D2: `t > 1/2 - (1-ε)²t²`
/// * D3: `(8/3)(t - 1/4) > (1 - δ(2ε - 2ε²))t`
/// * D4: `1 + 2δε² > 4εδ`
pub fn check_thm41(
    t: f64,
    delta: f64,
    eps: f64,
    ch_constant: f64,
    margin: f64,
) -> Result<FeasibilityReport> {
    validate_margin(margin)?;
    let p = ParameterPoint::new(t, delta, eps)?;
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::Domain(format!(
            "delta must lie in (0, 1], got {delta}"
        )));
    }
    if delta == 1.0 {
        return Err(Error::Domain(
            "delta = 1 makes condition D1 divide by zero".into(),
        ));
    }
    if !ch_constant.is_finite() {
        return Err(Error::Domain("ch_constant must be finite".into()));
    }
    let conditions = uniform_conditions(&p, ch_constant).to_vec();
    let feasible = conditions.iter().all(|c| c.satisfied(margin));
    Ok(FeasibilityReport {
        theorem: TheoremId::UniformColors,
        point: p,
        conditions,
        feasible,
        margin,
        ch_constant: Some(ch_constant),
    })
}

/// Outcome of a grid-plus-bisection search. The certified point re-passed
/// its checker, evaluated from scratch, before being returned.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    /// The minimized quantity: δ for [`minimize_delta`], t for [`minimize_t`].
    pub objective: f64,
    pub point: ParameterPoint,
    pub report: FeasibilityReport,
    /// Total feasibility checks performed across the whole search.
    pub iterations: u64,
    pub tolerance: f64,
}

/// Smallest certified δ for fixed t: sweeps ε over an interior grid on
/// (0, 1/2) and bisects δ over (0, 4] at each ε, keeping the smallest δ whose
/// check passes (ties broken toward smaller ε). Returns `None` when no grid
/// point is feasible.
///
/// Bisection leans on feasibility being monotone in δ, but the winning point
/// is still re-verified from scratch before it is returned.
pub fn minimize_delta(
    t: f64,
    eps_grid: usize,
    bisect_tol: f64,
    margin: f64,
) -> Result<Option<SearchResult>> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    if eps_grid < 100 {
        return Err(Error::Domain(
            "eps grid needs at least 100 points".into(),
        ));
    }
    if !(bisect_tol > 0.0) {
        return Err(Error::Domain("bisection tolerance must be positive".into()));
    }
    validate_margin(margin)?;

    let mut checks = 0u64;
    let mut best: Option<(f64, f64)> = None; // (delta, eps)
    for i in 1..=eps_grid {
        let eps = 0.5 * i as f64 / (eps_grid + 1) as f64;
        let mut feasible = |delta: f64| {
            checks += 1;
            surplus_feasible(t, delta, eps, margin)
        };
        let (mut lo, mut hi) = (0.0, 4.0);
        if !feasible(hi) {
            continue;
        }
        while hi - lo > bisect_tol {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if best.is_none_or(|(d, _)| hi < d) {
            best = Some((hi, eps));
        }
    }

    let Some((delta, eps)) = best else {
        return Ok(None);
    };
    let report = check_thm31(t, delta, eps, margin)?;
    assert!(report.feasible, "bisection returned an uncertified point");
    Ok(Some(SearchResult {
        objective: delta,
        point: report.point,
        report,
        iterations: checks + 1,
        tolerance: bisect_tol,
    }))
}

/// Smallest certified t for a given `ch_constant`: sweeps an interior
/// (ε, δ) grid on (0, 1/2) × (0, 1) and bisects t over (0.25, 0.5) at each
/// pair. Ties break toward smaller ε, then smaller δ. Returns `None` when
/// no grid pair admits a feasible t.
pub fn minimize_t(
    ch_constant: f64,
    eps_grid: usize,
    delta_grid: usize,
    bisect_tol: f64,
    margin: f64,
) -> Result<Option<SearchResult>> {
    if !(ch_constant > 0.0 && ch_constant < 0.5) {
        return Err(Error::Domain(format!(
            "ch_constant must lie in (0, 1/2), got {ch_constant}"
        )));
    }
    if eps_grid < 10 || delta_grid < 10 {
        return Err(Error::Domain("grids need at least 10 points".into()));
    }
    if !(bisect_tol > 0.0) {
        return Err(Error::Domain("bisection tolerance must be positive".into()));
    }
    validate_margin(margin)?;

    let mut checks = 0u64;
    let mut best: Option<(f64, f64, f64)> = None; // (t, eps, delta)
    for i in 1..=eps_grid {
        let eps = 0.5 * i as f64 / (eps_grid + 1) as f64;
        for j in 1..=delta_grid {
            let delta = j as f64 / (delta_grid + 1) as f64;
            let mut feasible = |t: f64| {
                checks += 1;
                uniform_feasible(t, delta, eps, ch_constant, margin)
            };
            let (mut lo, mut hi) = (0.25, 0.5);
            if !feasible(hi) {
                continue;
            }
            while hi - lo > bisect_tol {
                let mid = 0.5 * (lo + hi);
                if feasible(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            if best.is_none_or(|(t, _, _)| hi < t) {
                best = Some((hi, eps, delta));
            }
        }
    }

    let Some((t, eps, delta)) = best else {
        return Ok(None);
    };
    let report = check_thm41(t, delta, eps, ch_constant, margin)?;
    assert!(report.feasible, "bisection returned an uncertified point");
    Ok(Some(SearchResult {
        objective: t,
        point: report.point,
        report,
        iterations: checks + 1,
        tolerance: bisect_tol,
    }))
}

/// Coefficients `[a, b, c]` of the auxiliary quadratic `a k² + b k + c > 0`
/// (with `a < 0`) bounding the edge count when the high-degree cover has
/// `r ∈ {3, 4}` vertices:
/// `(r/2)(k/r + (3r-7)/2)(k/r + (3r-9)/2) + k(r-1)/2 > k²/4 - 1/4`.
pub fn appendix_a_quadratic(r: u32) -> Result<[f64; 3]> {
    if !(r == 3 || r == 4) {
        return Err(Error::Domain(format!("r must be 3 or 4, got {r}")));
    }
    let rf = r as f64;
    Ok([
        (2.0 - rf) / (4.0 * rf),
        (4.0 * rf - 9.0) / 2.0,
        rf * (3.0 * rf - 7.0) * (3.0 * rf - 9.0) / 8.0 + 0.25,
    ])
}

/// Positive root of the quadratic from [`appendix_a_quadratic`], the
/// threshold below which k must fall: `9 + √84` for r = 3 and `14 + √258`
/// for r = 4.
pub fn appendix_a_bound(r: u32) -> Result<f64> {
    let [a, b, c] = appendix_a_quadratic(r)?;
    Ok((-b - (b * b - 4.0 * a * c).sqrt()) / (2.0 * a))
}

/// Per-r values of `4r(3r/2 - 7/2)/(r - 4)` for `r ∈ {5..15}` and the floor
/// of their maximum: the edge-count ceiling when the high-degree cover has
/// at least 5 vertices.
#[derive(Debug, Clone, Serialize)]
pub struct KBoundSweep {
    pub values: Vec<(u32, f64)>,
    pub k_limit: u64,
}

pub fn r_ge5_k_bound() -> KBoundSweep {
    let values: Vec<(u32, f64)> = (5..=15)
        .map(|r| {
            let rf = f64::from(r);
            (r, 4.0 * rf * (1.5 * rf - 3.5) / (rf - 4.0))
        })
        .collect();
    let max = values.iter().fold(f64::NEG_INFINITY, |m, &(_, v)| m.max(v));
    KBoundSweep {
        values,
        k_limit: max.floor() as u64,
    }
}
