//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use majorant::classes::{self, MAJORIZATION_GRID};
use majorant::functions::{nehari_suite, SchwarzFunction};
use majorant::grid::PolarGrid;
use majorant::radius;
use majorant_cli::{run, Command, FigureData, RunConfig, Verdict};

const R1_EXPECTED: f64 = 0.391389;
const R1_TOL: f64 = 1e-6;
const SOLVE_BUDGET: Duration = Duration::from_secs(1);
const MC_BUDGET: Duration = Duration::from_secs(60);
const TRIALS: usize = 1000;
const SEED: u64 = 1;
const THEOREM_RADIUS: f64 = 0.39;
const RELATION_TOL: f64 = 1e-10;
const GOLDEN_TOL: f64 = 1e-12;
const SANDWICH_SLACK: f64 = 1e-12;
const NEHARI_TOL: f64 = 1e-9;
const FIGURE_TOL: f64 = 1e-6;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c1_solve() -> Check {
    let t = Instant::now();
    let report = run(&RunConfig::new(Command::Solve)).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let r1 = report.payload["r1"].as_f64().ok_or("payload has no r1")?;
    ensure(
        (r1 - R1_EXPECTED).abs() <= R1_TOL && elapsed < SOLVE_BUDGET && report.verdict == Verdict::Pass,
        format!("r1 = {r1:.9}, {elapsed:.2?}"),
    )
}

fn c2_k_endpoints() -> Check {
    let (k0, k1) = (radius::k(0.0_f64).map_err(|e| e.to_string())?, radius::k(1.0_f64).map_err(|e| e.to_string())?);
    ensure(k0 == 1.0 && k1 == -2.0, format!("k(0) = {k0}, k(1) = {k1}"))
}

fn c3_theorem_trials() -> Check {
    let t = Instant::now();
    let s = classes::monte_carlo_majorization::<f64>(TRIALS, SEED, THEOREM_RADIUS, 64).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    ensure(
        MAJORIZATION_GRID == (40, 80) && s.trials == TRIALS && s.violations == 0 && elapsed < MC_BUDGET,
        format!(
            "{} trials at r = {}: {} violations, worst |f'|-|g'| = {:.3e}, {elapsed:.2?}",
            s.trials,
            s.radius,
            s.violations,
            s.worst_margin.unwrap_or(f64::NAN)
        ),
    )
}

fn c4_macgregor() -> Check {
    let s = classes::macgregor_probe::<f64>(TRIALS, SEED, 64).map_err(|e| e.to_string())?;
    ensure(
        s.radius == std::f64::consts::SQRT_2 - 1.0 && s.violations == 0,
        format!(
            "{} trials at r = {:.6}: {} violations, worst |f'|-1 = {:.3e}",
            s.trials,
            s.radius,
            s.violations,
            s.worst_margin.unwrap_or(f64::NAN)
        ),
    )
}

fn c5_constructor() -> Check {
    let mut worst: f64 = 0.0;
    let mut failed = Vec::new();
    let fixtures = classes::fixture_schwarz_functions::<f64>();
    for (seed, phi) in classes::FIXTURE_SEEDS.iter().zip(&fixtures) {
        // one extra order so z g'/g (which loses one) is compared at 64
        let m = classes::generate_member(phi, 65).map_err(|e| e.to_string())?;
        let ratio = m.g.starlike_ratio().map_err(|e| e.to_string())?;
        let target = classes::cos_of_schwarz(phi, 64).map_err(|e| e.to_string())?;
        let gap = if ratio.order() == 64 { ratio.max_abs_diff(&target) } else { f64::INFINITY };
        worst = worst.max(gap);
        let inside = classes::membership_check(&m.g, classes::MAX_MEMBERSHIP_RADIUS).map_err(|e| e.to_string())?;
        if gap > RELATION_TOL || !inside.passed {
            failed.push(*seed);
        }
    }
    ensure(
        fixtures.len() == 10 && failed.is_empty(),
        format!("10 fixtures, max coefficient gap {worst:.2e}, failing seeds {failed:?}"),
    )
}

fn c6_golden_member() -> Check {
    let m = classes::generate_member(&SchwarzFunction::<f64>::identity(), 64).map_err(|e| e.to_string())?;
    let want = [(1, 1.0), (3, -0.25), (5, 1.0 / 24.0)];
    let err = want.iter().map(|&(n, a)| (m.series().coeff(n) - a).norm()).fold(0.0, f64::max);
    ensure(err <= GOLDEN_TOL, format!("(a1, a3, a5) max error {err:.2e}"))
}

fn c7_flaw() -> Check {
    let report = run(&RunConfig::new(Command::ProbeFlaw)).map_err(|e| e.to_string())?;
    let p = &report.payload;
    let entries = p["entries"].as_array().ok_or("no entries")?;
    let verdict = p["verdict"].as_str().unwrap_or_default();
    ensure(
        p["pair"] == serde_json::json!([1.0, 2.0])
            && verdict.contains("subordination impossible")
            && p["all_ratios_one"] == true
            && entries.len() >= 12,
        format!("pair {}, {} fixtures, verdict \"{verdict}\"", p["pair"], entries.len()),
    )
}

fn c8_theorem_a() -> Check {
    let r = radius::theorem_a_probe::<f64>(10_000).map_err(|e| e.to_string())?;
    ensure(
        r.supremum < 0.0 && r.no_positive_root,
        format!("sup over 1e4 points = {:.6e} at r = {}", r.supremum, r.argsup),
    )
}

fn c9_sandwich() -> Check {
    let mut details = Vec::new();
    let mut ok = true;
    for big_r in [0.1, 0.5, 0.9] {
        let s = radius::cos_modulus_sandwich::<f64>(big_r, 10_000).map_err(|e| e.to_string())?;
        ok &= s.min >= big_r.cos() - SANDWICH_SLACK && s.max <= big_r.cosh() + SANDWICH_SLACK;
        details.push(format!("R={big_r}: [{:.12}, {:.12}]", s.min, s.max));
    }
    ensure(ok, details.join(", "))
}

fn c10_nehari() -> Check {
    let grid = PolarGrid::new(0.95, 16, 32);
    let s = nehari_suite::<f64>(500, SEED, classes::TRIAL_MAX_DEGREE, &grid).map_err(|e| e.to_string())?;
    ensure(
        s.functions == 500 && s.points_per_function == 512 && s.min_margin >= -NEHARI_TOL && s.violations == 0,
        format!("500 x 512 points, min margin {:.3e}", s.min_margin),
    )
}

fn c11_figures() -> Check {
    let boundary = FigureData::boundary().map_err(|e| e.to_string())?;
    let re = boundary.rows.iter().map(|r| r[1]);
    let (lo, hi) = re.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| (a.min(x), b.max(x)));
    let extrema_ok = (lo - 1f64.cos()).abs() <= FIGURE_TOL && (hi - 1f64.cosh()).abs() <= FIGURE_TOL;

    // read back the emitted CSV rather than the in-memory table
    let csv = FigureData::k_table().map_err(|e| e.to_string())?.to_csv().map_err(|e| e.to_string())?;
    let rows: Vec<(f64, f64)> = csv
        .lines()
        .skip(1)
        .map(|l| {
            let (r, k) = l.split_once(',').expect("two columns");
            (r.parse().unwrap(), k.parse().unwrap())
        })
        .collect();
    let changes: Vec<(f64, f64)> =
        rows.windows(2).filter(|w| (w[0].1 > 0.0) != (w[1].1 > 0.0)).map(|w| (w[0].0, w[1].0)).collect();
    let bracket_ok = changes.len() == 1 && changes[0].0 <= R1_EXPECTED && R1_EXPECTED <= changes[0].1;
    ensure(extrema_ok && bracket_ok, format!("re in [{lo:.9}, {hi:.9}]; k sign changes {changes:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("radius solve", c1_solve),
        ("k endpoints", c2_k_endpoints),
        ("majorization trials", c3_theorem_trials),
        ("classical radius trials", c4_macgregor),
        ("member constructor", c5_constructor),
        ("identity member coefficients", c6_golden_member),
        ("flawed definition probe", c7_flaw),
        ("rootless radius function", c8_theorem_a),
        ("cos modulus sandwich", c9_sandwich),
        ("Nehari bound", c10_nehari),
        ("figure data", c11_figures),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
