//! Scalar reduction of the majorization radius problem.
//!
//! With `β = |ψ(z)|` and `|z| = r`, majorization gives
//! `|f'| ≤ h(r, β)·|g'|` where `h(r, β) = β + (1 - β²)/(1 - r²) · r/cos r`.
//! `h ≤ 1` for every `β ∈ [0, 1]` is equivalent to
//! `k(r, β) = (1 - r²) cos r - (1 + β) r ≥ 0`, which is decreasing in `β`,
//! so the binding case is `k(r) = k(r, 1) = (1 - r²) cos r - 2r`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default bisection tolerance.
pub const DEFAULT_TOL_ROOT: f64 = 1e-12;

/// Smallest tolerance `solve_radius` accepts.
pub const MIN_TOL_ROOT: f64 = 1e-14;

/// Step of the left-to-right bracket scan.
pub const SCAN_STEP: f64 = 1e-3;

/// Default size of the β grid in [`verify_semi_infinite`].
pub const DEFAULT_BETA_GRID: usize = 101;

/// Slack allowed on `h ≤ 1` and on the modulus sandwich.
const BOUND_SLACK: f64 = 1e-12;

fn domain<T: Real>(what: &str, value: T) -> Error {
    Error::Domain(format!("{what} = {value} outside its admissible range"))
}

fn check_closed_unit<T: Real>(what: &str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(domain(what, x))
    }
}

fn check_open_unit<T: Real>(what: &str, x: T) -> Result<()> {
    if x > T::zero() && x < T::one() {
        Ok(())
    } else {
        Err(domain(what, x))
    }
}

/// `h(r, β) = β + (1 - β²)/(1 - r²) · r/cos r` for `0 < r < 1`, `0 ≤ β ≤ 1`.
pub fn h<T: Real>(r: T, beta: T) -> Result<T> {
    check_open_unit("r", r)?;
    check_closed_unit("beta", beta)?;
    Ok(beta + (T::one() - beta * beta) / (T::one() - r * r) * (r / r.cos()))
}

/// `k(r, β) = (1 - r²) cos r - (1 + β) r` for `0 ≤ r, β ≤ 1`.
pub fn k_of<T: Real>(r: T, beta: T) -> Result<T> {
    check_closed_unit("r", r)?;
    check_closed_unit("beta", beta)?;
    Ok(k_raw(r, beta))
}

/// `k(r) = (1 - r²) cos r - 2r` for `0 ≤ r ≤ 1`.
pub fn k<T: Real>(r: T) -> Result<T> {
    k_of(r, T::one())
}

fn k_raw<T: Real>(r: T, beta: T) -> T {
    (T::one() - r * r) * r.cos() - (T::one() + beta) * r
}

/// `q(r) = (1 - r²)(1 - cosh r) - 2r`, the radius function of the flawed theorem.
pub fn theorem_a_function<T: Real>(r: T) -> T {
    (T::one() - r * r) * (T::one() - r.cosh()) - (r + r)
}

/// Solved radius with its final bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusResult<T> {
    pub r1: T,
    pub bracket: (T, T),
    pub iterations: usize,
    pub residual: T,
}

/// First bracket `[a, a + step]` with `f(a) > 0 ≥ f(a + step)` or the reverse,
/// scanning grid points `lo + i·step` left to right.
pub fn first_sign_change<T, F>(f: F, lo: T, hi: T, step: T) -> Option<(T, T)>
where
    T: Real,
    F: Fn(T) -> T,
{
    let steps = ((hi - lo) / step).round().to_usize()?;
    let grid = |i: usize| if i == steps { hi } else { lo + step * T::of_usize(i) };
    let mut prev = f(grid(0));
    for i in 1..=steps {
        let x = grid(i);
        let cur = f(x);
        if prev.signum() != cur.signum() || cur == T::zero() {
            return Some((grid(i - 1), x));
        }
        prev = cur;
    }
    None
}

/// Number of strict sign changes of `f` on the scan grid.
pub fn count_sign_changes<T, F>(f: F, lo: T, hi: T, step: T) -> usize
where
    T: Real,
    F: Fn(T) -> T,
{
    let steps = ((hi - lo) / step).round().to_usize().unwrap_or(0);
    let values: Vec<T> = (0..=steps).map(|i| if i == steps { hi } else { lo + step * T::of_usize(i) }).map(f).collect();
    values.windows(2).filter(|w| (w[0] > T::zero()) != (w[1] > T::zero())).count()
}

/// Bisection on a sign-changing bracket until its width is at most `2·tol`.
pub fn bisect<T, F>(f: F, bracket: (T, T), tol: T) -> RadiusResult<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    let (mut lo, mut hi) = bracket;
    let lo_positive = f(lo) > T::zero();
    let two = T::lit(2.0);
    let mut iterations = 0;
    while hi - lo > two * tol {
        let mid = (lo + hi) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > T::zero()) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let r1 = (lo + hi) / two;
    RadiusResult { r1, bracket: (lo, hi), iterations, residual: f(r1).abs() }
}

/// Smallest positive root of `k(r) = (1 - r²) cos r - 2r`.
///
/// A scan with step 10⁻³ from `r = 0` isolates the first sign change, which
/// is then bisected to a bracket of width `≤ 2·tol_root`.
pub fn solve_radius<T: Real>(tol_root: T) -> Result<RadiusResult<T>> {
    if !(tol_root >= T::lit(MIN_TOL_ROOT)) {
        return Err(domain("tol_root", tol_root));
    }
    let f = |r: T| k_raw(r, T::one());
    let bracket =
        first_sign_change(f, T::zero(), T::one(), T::lit(SCAN_STEP)).ok_or(Error::NoSignChange { lo: 0.0, hi: 1.0 })?;
    Ok(bisect(f, bracket, tol_root))
}

/// Outcome of the semi-infinite check `h(r, β) ≤ 1 ∀β ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemiInfiniteReport<T> {
    pub r: T,
    pub beta_points: usize,
    /// `h(r, β) ≤ 1 + 10⁻¹²` at every grid β.
    pub grid_passes: bool,
    pub max_h: T,
    pub argmax_beta: T,
    /// Grid minimizer of `k(r, ·)`; the reduction predicts β = 1.
    pub argmin_k_beta: T,
    pub min_k: T,
    pub k_at_one: T,
    /// `k(r) ≥ 0`.
    pub reduction_passes: bool,
    pub reduction_minimum_at_one: bool,
    pub agree: bool,
}

pub fn verify_semi_infinite<T: Real>(r: T, beta_points: usize) -> Result<SemiInfiniteReport<T>> {
    check_open_unit("r", r)?;
    if beta_points < 2 {
        return Err(Error::Domain(format!("beta grid needs at least 2 points, got {beta_points}")));
    }
    let last = T::of_usize(beta_points - 1);
    let betas = (0..beta_points).map(|i| if i + 1 == beta_points { T::one() } else { T::of_usize(i) / last });

    let mut max_h = (T::neg_infinity(), T::zero());
    let mut min_k = (T::infinity(), T::zero());
    for beta in betas {
        let hv = h(r, beta)?;
        if hv > max_h.0 {
            max_h = (hv, beta);
        }
        let kv = k_raw(r, beta);
        if kv < min_k.0 {
            min_k = (kv, beta);
        }
    }
    let k_at_one = k_raw(r, T::one());
    let grid_passes = max_h.0 <= T::one() + T::lit(BOUND_SLACK);
    let reduction_passes = k_at_one >= T::zero();
    Ok(SemiInfiniteReport {
        r,
        beta_points,
        grid_passes,
        max_h: max_h.0,
        argmax_beta: max_h.1,
        argmin_k_beta: min_k.1,
        min_k: min_k.0,
        k_at_one,
        reduction_passes,
        reduction_minimum_at_one: min_k.1 == T::one() && min_k.0 == k_at_one,
        agree: grid_passes == reduction_passes,
    })
}

/// Range of `|cos(R e^{it})|` over a uniform periodic grid in `t`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport<T> {
    pub big_r: T,
    pub t_samples: usize,
    pub min: T,
    pub argmin_t: T,
    pub max: T,
    pub argmax_t: T,
    pub lower_bound: T,
    pub upper_bound: T,
    /// `min ≥ cos R - 10⁻¹²`.
    pub lower_ok: bool,
    /// `max ≤ cosh R + 10⁻¹²`.
    pub upper_ok: bool,
}

/// `|cos(R e^{it})| = sqrt(cos²(R cos t) + sinh²(R sin t))`.
pub fn cos_modulus<T: Real>(big_r: T, t: T) -> T {
    let (c, s) = ((big_r * t.cos()).cos(), (big_r * t.sin()).sinh());
    (c * c + s * s).sqrt()
}

/// Samples `t_j = π(2j/n - 1)`, `j = 0..n`, so `t = 0` is hit exactly for
/// even `n` and `t = ±π/2` for `n` divisible by four.
pub fn cos_modulus_sandwich<T: Real>(big_r: T, t_samples: usize) -> Result<SandwichReport<T>> {
    check_open_unit("R", big_r)?;
    if t_samples < 4 {
        return Err(Error::Domain(format!("need at least 4 angular samples, got {t_samples}")));
    }
    let n = T::of_usize(t_samples);
    let two = T::lit(2.0);
    let mut min = (T::infinity(), T::zero());
    let mut max = (T::neg_infinity(), T::zero());
    for j in 0..t_samples {
        let t = T::PI() * (two * T::of_usize(j) / n - T::one());
        let m = cos_modulus(big_r, t);
        if m < min.0 {
            min = (m, t);
        }
        if m > max.0 {
            max = (m, t);
        }
    }
    let (lower_bound, upper_bound) = (big_r.cos(), big_r.cosh());
    let slack = T::lit(BOUND_SLACK);
    Ok(SandwichReport {
        big_r,
        t_samples,
        min: min.0,
        argmin_t: min.1,
        max: max.0,
        argmax_t: max.1,
        lower_bound,
        upper_bound,
        lower_ok: min.0 >= lower_bound - slack,
        upper_ok: max.0 <= upper_bound + slack,
    })
}

/// Grid evidence that `(1 - r²)(1 - cosh r) - 2r` has no root on (0, 1].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremAReport<T> {
    pub scan_points: usize,
    pub supremum: T,
    pub argsup: T,
    /// `1 - cosh r < 0` at every grid point, so both terms are negative.
    pub sign_argument: bool,
    pub no_positive_root: bool,
    pub bracket_found: bool,
    pub message: String,
}

/// Scans `r_i = i/n`, `i = 1..=n`.
pub fn theorem_a_probe<T: Real>(scan_points: usize) -> Result<TheoremAReport<T>> {
    if scan_points < 100 {
        return Err(Error::Domain(format!("need at least 100 scan points, got {scan_points}")));
    }
    let n = T::of_usize(scan_points);
    let mut sup = (T::neg_infinity(), T::zero());
    let mut sign_argument = true;
    for i in 1..=scan_points {
        let r = T::of_usize(i) / n;
        sign_argument &= T::one() - r.cosh() < T::zero();
        let q = theorem_a_function(r);
        if q > sup.0 {
            sup = (q, r);
        }
    }
    let bracket_found = first_sign_change(theorem_a_function, T::one() / n, T::one(), T::one() / n).is_some();
    let no_positive_root = sup.0 < T::zero() && !bracket_found;
    let message = if no_positive_root {
        "no positive root on (0, 1]".to_owned()
    } else {
        "a nonnegative value was found on the grid".to_owned()
    };
    Ok(TheoremAReport {
        scan_points,
        supremum: sup.0,
        argsup: sup.1,
        sign_argument,
        no_positive_root,
        bracket_found,
        message,
    })
}
