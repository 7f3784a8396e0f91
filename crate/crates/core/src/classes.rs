//! The starlike class `{f ∈ 𝒜 : z f'(z)/f(z) ≺ cos z}`.
//!
//! Members are built constructively: given a Schwarz function `φ`,
//! `g(z) = z·exp(∫₀ᶻ (cos φ(t) - 1)/t dt)` satisfies `z g'/g = cos φ`.
//! Majorization `f = ψ·g` with `|ψ| ≤ 1` is then checked pointwise for
//! `|f'| ≤ |g'|` on polar grids.

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::{derive_seed, sample_bounded, sample_schwarz, BoundedAnalytic, DiskFunction, SchwarzFunction};
use crate::geometry::{self, boundary_of_cos, subordination_check, BoundaryPolyline, SubordinationReport};
use crate::grid::PolarGrid;
use crate::scalar::Real;
use crate::series::{Elementary, TruncatedSeries, EPS_SERIES};

/// Slack on `|f'| - |g'| ≤ 0`.
pub const TOL_MAJ: f64 = 1e-9;

/// Majorization grid: radii × angles.
pub const MAJORIZATION_GRID: (usize, usize) = (40, 80);

/// Largest sample radius for membership checks.
pub const MAX_MEMBERSHIP_RADIUS: f64 = 0.95;

/// Largest radius for majorization checks.
pub const MAX_MAJORIZATION_RADIUS: f64 = 0.999;

/// Degree cap used when sampling `φ` and `ψ` for trials.
pub const TRIAL_MAX_DEGREE: usize = 3;

/// Grid over which a member's `|φ|` is certified at build time.
const BUILD_GRID: (f64, usize, usize) = (0.95, 16, 32);

/// Seeds of the fixture Schwarz functions.
pub const FIXTURE_SEEDS: [u64; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

/// `f(z) = z + a₂z² + …`: `a₀ = 0` and `a₁ = 1` exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct NormalizedFunction<T> {
    series: TruncatedSeries<T>,
}

impl<T: Real> NormalizedFunction<T> {
    pub fn new(series: TruncatedSeries<T>) -> Result<Self> {
        if series.order() < 1 {
            return Err(Error::NotNormalized("order must be at least 1"));
        }
        if series.coeff(0) != Complex::new(T::zero(), T::zero()) {
            return Err(Error::NotNormalized("a0 must be 0"));
        }
        if series.coeff(1) != Complex::new(T::one(), T::zero()) {
            return Err(Error::NotNormalized("a1 must be 1"));
        }
        Ok(Self { series })
    }

    /// `z + Σ aₙ zⁿ` from real coefficients `a₂, a₃, …`, at the given order.
    pub fn from_tail(tail: &[T], order: usize) -> Result<Self> {
        let mut coeffs = vec![T::zero(), T::one()];
        coeffs.extend_from_slice(tail);
        Self::new(TruncatedSeries::from_real(&coeffs)?.truncate(order))
    }

    pub fn identity(order: usize) -> Result<Self> {
        Self::new(TruncatedSeries::elementary(Elementary::Identity, order))
    }

    pub fn series(&self) -> &TruncatedSeries<T> {
        &self.series
    }

    /// Series of `z f'(z)/f(z)`, computed as `f' / (f/z)`; order drops by one.
    pub fn starlike_ratio(&self) -> Result<TruncatedSeries<T>> {
        self.series.differentiate().divide(&self.series.shift_divide_by_z()?)
    }
}

/// What was verified when a member was built.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MemberCertificate<T> {
    /// Max coefficient gap between `z g'/g` and `cos ∘ φ`.
    pub relation_residual: T,
    /// Max `|φ|` on the build grid; values below 1 put `cos φ` inside `cos(Δ)`.
    pub max_phi_modulus: T,
    pub build_grid: PolarGrid<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarlikeMember<T> {
    pub g: NormalizedFunction<T>,
    pub phi: SchwarzFunction<T>,
    pub certificate: MemberCertificate<T>,
}

impl<T: Real> StarlikeMember<T> {
    pub fn series(&self) -> &TruncatedSeries<T> {
        self.g.series()
    }

    pub fn order(&self) -> usize {
        self.g.series().order()
    }
}

/// `cos ∘ φ` as a series of the given order.
pub fn cos_of_schwarz<T: Real>(phi: &SchwarzFunction<T>, order: usize) -> Result<TruncatedSeries<T>> {
    TruncatedSeries::elementary(Elementary::Cos, order).compose(&phi.to_series(order))
}

/// Builds `g(z) = z·exp(∫₀ᶻ (cos φ(t) - 1)/t dt)` to the given order.
pub fn generate_member<T: Real>(phi: &SchwarzFunction<T>, order: usize) -> Result<StarlikeMember<T>> {
    if order < 1 {
        return Err(Error::Domain("member order must be at least 1".into()));
    }
    let cos_phi = cos_of_schwarz(phi, order)?;
    let one = TruncatedSeries::elementary(Elementary::One, order);
    let integrand = (&cos_phi - &one).shift_divide_by_z()?;
    let g = integrand.integrate().exp_series()?.shift_multiply_by_z();
    let g = NormalizedFunction::new(g)?;

    let ratio = g.starlike_ratio()?;
    let relation_residual = ratio.max_abs_diff(&cos_phi);
    let (radius, radii, angles) = BUILD_GRID;
    let build_grid = PolarGrid::new(T::lit(radius), radii, angles);
    let max_phi_modulus = build_grid.points().map(|z| phi.value_at(z).norm()).fold(T::zero(), T::max);
    let certificate = MemberCertificate { relation_residual, max_phi_modulus, build_grid };
    Ok(StarlikeMember { g, phi: phi.clone(), certificate })
}

/// The ten fixture Schwarz functions used by probes and acceptance checks.
pub fn fixture_schwarz_functions<T: Real>() -> Vec<SchwarzFunction<T>> {
    FIXTURE_SEEDS.iter().map(|&s| sample_schwarz(s, TRIAL_MAX_DEGREE)).collect()
}

/// Tests `z f'/f ≺ cos` by sampling `z f'/f` and checking containment in `cos(Δ)`.
pub fn membership_check_with<T: Real>(
    f: &NormalizedFunction<T>,
    curve: &BoundaryPolyline<T>,
    grid: &PolarGrid<T>,
) -> Result<SubordinationReport<T>> {
    if !(grid.radius <= T::lit(MAX_MEMBERSHIP_RADIUS)) {
        return Err(Error::Domain(format!("membership radius {} exceeds {MAX_MEMBERSHIP_RADIUS}", grid.radius)));
    }
    let ratio = f.starlike_ratio()?;
    let one = Complex::new(T::one(), T::zero());
    subordination_check(|z| ratio.evaluate(z), curve, one, grid)
}

/// [`membership_check_with`] on the default curve and the default 48 × 96 grid.
pub fn membership_check<T: Real>(f: &NormalizedFunction<T>, sample_radius: T) -> Result<SubordinationReport<T>> {
    let curve = boundary_of_cos(geometry::DEFAULT_RESOLUTION)?;
    let (radii, angles) = geometry::DEFAULT_GRID;
    membership_check_with(f, &curve, &PolarGrid::new(sample_radius, radii, angles))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlawEntry<T> {
    pub label: String,
    /// Constant term of the `z f'/f` series.
    pub ratio_at_zero: Complex<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlawProbeReport<T> {
    /// `(lim z f'/f at 0, (1 + cos z) at 0)`.
    pub pair: (T, T),
    pub entries: Vec<FlawEntry<T>>,
    /// Every fixture has ratio constant term 1 within ε_series.
    pub all_ratios_one: bool,
    /// `cos 0 = 1`, the value the corrected target requires.
    pub corrected_target_at_zero: T,
    pub verdict: String,
}

pub const FLAW_VERDICT: &str = "subordination impossible for all f in A";

/// Shows that `z f'/f ≺ 1 + cos z` cannot hold for any normalized `f`:
/// the left side is 1 at the origin, the right side 2.
pub fn flawed_definition_probe<T: Real>(fixtures: &[(String, NormalizedFunction<T>)]) -> Result<FlawProbeReport<T>> {
    let required = T::one() + T::zero().cos();
    let mut entries = Vec::with_capacity(fixtures.len());
    for (label, f) in fixtures {
        entries.push(FlawEntry { label: label.clone(), ratio_at_zero: f.starlike_ratio()?.coeff(0) });
    }
    let one = Complex::new(T::one(), T::zero());
    let all_ratios_one = entries.iter().all(|e| (e.ratio_at_zero - one).norm() <= T::lit(EPS_SERIES));
    let verdict = if all_ratios_one && required != T::one() {
        FLAW_VERDICT.to_owned()
    } else {
        "inconclusive: a fixture has ratio constant term different from 1".to_owned()
    };
    Ok(FlawProbeReport {
        pair: (T::one(), required),
        entries,
        all_ratios_one,
        corrected_target_at_zero: T::zero().cos(),
        verdict,
    })
}

/// Default fixtures for the flaw probe: `z`, `z + z²/2`, and members built
/// from the fixture Schwarz functions.
pub fn flaw_fixtures<T: Real>(order: usize) -> Result<Vec<(String, NormalizedFunction<T>)>> {
    let mut out = vec![
        ("z".to_owned(), NormalizedFunction::identity(order)?),
        ("z + z^2/2".to_owned(), NormalizedFunction::from_tail(&[T::lit(0.5)], order)?),
    ];
    for (seed, phi) in FIXTURE_SEEDS.iter().zip(fixture_schwarz_functions::<T>()) {
        out.push((format!("member(seed {seed})"), generate_member(&phi, order)?.g));
    }
    Ok(out)
}

/// `f = ψ·g` with `g` in the class and `|ψ| ≤ 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorizationPair<T> {
    pub f: TruncatedSeries<T>,
    pub g: StarlikeMember<T>,
    pub psi: BoundedAnalytic<T>,
}

impl<T: Real> MajorizationPair<T> {
    pub fn new(psi: BoundedAnalytic<T>, g: StarlikeMember<T>) -> Self {
        let f = psi.to_series(g.order()).multiply(g.series());
        Self { f, g, psi }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorizationReport<T> {
    pub radius: T,
    /// Max over the grid of `|f'(z)| - |g'(z)|`.
    pub max_excess: T,
    pub argmax: Complex<T>,
    pub passed: bool,
}

pub fn majorization_check<T: Real>(pair: &MajorizationPair<T>, grid: &PolarGrid<T>) -> Result<MajorizationReport<T>> {
    if !(grid.radius <= T::lit(MAX_MAJORIZATION_RADIUS)) {
        return Err(Error::Domain(format!("majorization radius {} exceeds {MAX_MAJORIZATION_RADIUS}", grid.radius)));
    }
    let (df, dg) = (pair.f.differentiate(), pair.g.series().differentiate());
    let mut worst = (T::neg_infinity(), Complex::new(T::zero(), T::zero()));
    for z in grid.points() {
        let excess = df.evaluate(z)?.norm() - dg.evaluate(z)?.norm();
        if excess > worst.0 {
            worst = (excess, z);
        }
    }
    Ok(MajorizationReport {
        radius: grid.radius,
        max_excess: worst.0,
        argmax: worst.1,
        passed: worst.0 <= T::lit(TOL_MAJ),
    })
}

/// Folded outcome of seeded majorization trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialSummary<T> {
    pub trials: usize,
    pub radius: T,
    pub violations: usize,
    /// Largest `|f'| - |g'|` seen over all trials; `None` when no trial ran.
    pub worst_margin: Option<T>,
    /// Trial seeds (from `derive_seed(seed, index)`) of violating trials, by index.
    pub violator_seeds: Vec<u64>,
}

/// Trial `i` uses seed `derive_seed(seed, i)`; results are folded in index
/// order so the summary does not depend on scheduling.
fn run_trials<T, B>(trials: usize, seed: u64, radius: T, build: B) -> Result<TrialSummary<T>>
where
    T: Real,
    B: Fn(u64) -> Result<MajorizationPair<T>> + Sync,
{
    let (radii, angles) = MAJORIZATION_GRID;
    let grid = PolarGrid::new(radius, radii, angles);
    let outcomes: Vec<(u64, MajorizationReport<T>)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = derive_seed(seed, i as u64);
            let pair = build(s)?;
            Ok((s, majorization_check(&pair, &grid)?))
        })
        .collect::<Result<_>>()?;

    let mut summary = TrialSummary { trials, radius, violations: 0, worst_margin: None, violator_seeds: Vec::new() };
    for (s, report) in outcomes {
        summary.worst_margin = Some(summary.worst_margin.map_or(report.max_excess, |m: T| m.max(report.max_excess)));
        if !report.passed {
            summary.violations += 1;
            summary.violator_seeds.push(s);
        }
    }
    Ok(summary)
}

/// Seeded trials of `|f'| ≤ |g'|` with `g` generated from a random `φ` and
/// `f = ψ·g` for a random bounded `ψ`.
pub fn monte_carlo_majorization<T: Real>(trials: usize, seed: u64, radius: T, order: usize) -> Result<TrialSummary<T>> {
    run_trials(trials, seed, radius, |s| {
        let g = generate_member(&sample_schwarz::<T>(s, TRIAL_MAX_DEGREE), order)?;
        Ok(MajorizationPair::new(sample_bounded(s, TRIAL_MAX_DEGREE), g))
    })
}

/// Radius `√2 - 1` of the classical bound `|f'| ≤ 1` for `f(0) = 0`, `|f| ≤ 1`.
pub fn macgregor_radius<T: Real>() -> T {
    T::SQRT_2() - T::one()
}

/// Seeded trials of `|f'| ≤ 1` for `f = z·ψ` on `|z| ≤ √2 - 1`.
pub fn macgregor_probe<T: Real>(trials: usize, seed: u64, order: usize) -> Result<TrialSummary<T>> {
    let g = generate_member(&SchwarzFunction::zero(), order)?;
    run_trials(trials, seed, macgregor_radius(), |s| {
        Ok(MajorizationPair::new(sample_bounded(s, TRIAL_MAX_DEGREE), g.clone()))
    })
}
