use majorant::functions::{
    nehari_check, sample_bounded, sample_schwarz, BlaschkeProduct, BoundedAnalytic, DiskFunction,
};
use majorant::grid::PolarGrid;
use majorant::{Complex64, Schwarz64};

const SEEDS: u64 = 60;

fn grid() -> PolarGrid<f64> {
    PolarGrid::new(0.95, 16, 32)
}

#[test]
fn bounded_functions_stay_in_the_unit_disk() {
    for seed in 0..SEEDS {
        let psi = sample_bounded::<f64>(seed, 4);
        for z in grid().points() {
            assert!(psi.eval_value(z).unwrap().norm() <= 1.0 + 1e-10, "seed {seed} at {z}");
        }
    }
}

#[test]
fn nehari_margin_is_nonnegative() {
    for seed in 0..SEEDS {
        let psi = sample_bounded::<f64>(seed, 4);
        for z in grid().points() {
            let margin = nehari_check(&psi, z).unwrap();
            assert!(margin >= -1e-9, "seed {seed} at {z}: margin {margin:e}");
        }
    }
}

#[test]
fn derivative_matches_central_differences() {
    let h = 1e-6;
    let inner = PolarGrid::new(0.9, 9, 16);
    for seed in 0..SEEDS {
        let psi = sample_bounded::<f64>(seed, 4);
        let phi = sample_schwarz::<f64>(seed, 4);
        for z in inner.points() {
            for f in [&psi as &dyn DiskFunction<f64>, &phi] {
                let fd = (f.value_at(z + h) - f.value_at(z - h)) / (2.0 * h);
                let d = f.eval_derivative(z).unwrap();
                let scale = d.norm().max(1.0);
                assert!((fd - d).norm() <= 1e-6 * scale, "seed {seed} at {z}: {fd} vs {d}");
            }
        }
    }
}

#[test]
fn schwarz_functions_obey_the_schwarz_lemma() {
    for seed in 0..SEEDS {
        let phi = sample_schwarz::<f64>(seed, 4);
        assert_eq!(phi.eval_value(Complex64::new(0.0, 0.0)).unwrap(), Complex64::new(0.0, 0.0));
        for z in grid().points() {
            let w = phi.eval_value(z).unwrap();
            assert!(w.norm() <= z.norm() * (1.0 + 1e-10));
            assert!(w.norm() < 1.0);
        }
    }
}

#[test]
fn golden_schwarz_seed_42() {
    let fixture: BlaschkeProduct<f64> =
        serde_json::from_str(include_str!("fixtures/schwarz_seed42_deg3.json")).unwrap();
    let sampled = sample_schwarz::<f64>(42, 3);
    assert_eq!(sampled, Schwarz64::new(BoundedAnalytic::Blaschke(fixture.clone())));
    // bitwise equality of every parameter
    if let BoundedAnalytic::Blaschke(b) = sampled.factor() {
        for (x, y) in b.zeros().iter().zip(fixture.zeros()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
        assert_eq!(b.rotation().re.to_bits(), fixture.rotation().re.to_bits());
    }
}

#[test]
fn single_precision_sampling_matches_double() {
    for seed in 0..10 {
        let a = sample_schwarz::<f32>(seed, 3);
        let b = sample_schwarz::<f64>(seed, 3);
        let z = 0.4f32;
        let diff = (a.value_at(Complex64::new(0.4, 0.0).into_f32())
            - b.value_at(Complex64::new(z as f64, 0.0)).into_f32())
        .norm();
        assert!(diff < 1e-5);
    }
}

trait IntoF32 {
    fn into_f32(self) -> num_complex::Complex<f32>;
}

impl IntoF32 for Complex64 {
    fn into_f32(self) -> num_complex::Complex<f32> {
        num_complex::Complex::new(self.re as f32, self.im as f32)
    }
}
