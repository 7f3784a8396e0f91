//! Certified bounded analytic functions on the unit disk.
//!
//! Bounded functions (`|ψ| ≤ 1`) are finite Blaschke products, constants of
//! modulus at most one, or convex combinations of the two. Schwarz functions
//! are `φ(z) = z·B(z)` with `B` bounded, so `φ(0) = 0` holds structurally.

use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::grid::PolarGrid;
use crate::scalar::{cis, is_finite_complex, Real};
use crate::series::{check_eval_point, Elementary, TruncatedSeries};

/// Largest admissible modulus of a Blaschke zero.
pub const MAX_ZERO_MODULUS: f64 = 0.9;

/// Largest `|z|` at which the closed-form functions are evaluated.
pub const EVAL_LIMIT: f64 = 0.999;

/// Allowed deviation of `|rotation|` from one.
pub const ROTATION_TOL: f64 = 1e-12;

/// Nehari margins above this are accepted.
pub const NEHARI_TOL: f64 = 1e-9;

/// Below this distance to a zero the derivative uses the product rule.
const NEAR_ZERO: f64 = 1e-8;

const STREAM_SCHWARZ: u64 = 1;
const STREAM_BOUNDED: u64 = 2;

fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Evaluation interface shared by every function family in this module.
pub trait DiskFunction<T: Real> {
    /// Value at `z` without the disk check.
    fn value_at(&self, z: Complex<T>) -> Complex<T>;

    /// Derivative at `z` without the disk check.
    fn derivative_at(&self, z: Complex<T>) -> Complex<T>;

    /// Taylor coefficients at the origin up to `order`.
    fn to_series(&self, order: usize) -> TruncatedSeries<T>;

    fn eval_value(&self, z: Complex<T>) -> Result<Complex<T>> {
        check_eval_point(z, T::lit(EVAL_LIMIT))?;
        Ok(self.value_at(z))
    }

    fn eval_derivative(&self, z: Complex<T>) -> Result<Complex<T>> {
        check_eval_point(z, T::lit(EVAL_LIMIT))?;
        Ok(self.derivative_at(z))
    }
}

/// `rotation · Π (z - aₖ)/(1 - conj(aₖ) z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlaschkeProduct<T> {
    zeros: Vec<Complex<T>>,
    rotation: Complex<T>,
}

impl<T: Real> BlaschkeProduct<T> {
    pub fn new(zeros: Vec<Complex<T>>, rotation: Complex<T>) -> Result<Self> {
        for a in &zeros {
            if !is_finite_complex(*a) {
                return Err(Error::NonFinite("Blaschke zero"));
            }
            if a.norm() > T::lit(MAX_ZERO_MODULUS) {
                return Err(Error::ZeroOutsideCap { modulus: to_f64(a.norm()), cap: MAX_ZERO_MODULUS });
            }
        }
        let modulus = rotation.norm();
        if !is_finite_complex(rotation) || (modulus - T::one()).abs() > T::lit(ROTATION_TOL) {
            return Err(Error::RotationNotUnimodular { modulus: to_f64(modulus) });
        }
        Ok(Self { zeros, rotation })
    }

    /// The identity map, a single factor with its zero at the origin.
    pub fn identity() -> Self {
        Self { zeros: vec![Complex::zero()], rotation: Complex::<T>::one() }
    }

    pub fn zeros(&self) -> &[Complex<T>] {
        &self.zeros
    }

    pub fn rotation(&self) -> Complex<T> {
        self.rotation
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    /// `B(e^{iθ} z)`: zeros rotate by `e^{-iθ}`, the constant picks up `e^{iθ·n}`.
    pub fn rotate_argument(&self, theta: T) -> Self {
        let u = cis(theta);
        let zeros = self.zeros.iter().map(|a| a * u.conj()).collect();
        let rotation = self.rotation * cis(theta * T::of_usize(self.degree()));
        Self { zeros, rotation }
    }

    fn scale_unimodular(&self, u: Complex<T>) -> Self {
        Self { zeros: self.zeros.clone(), rotation: self.rotation * u }
    }

    fn factor(a: Complex<T>, z: Complex<T>) -> Complex<T> {
        (z - a) / (Complex::<T>::one() - a.conj() * z)
    }

    fn factor_derivative(a: Complex<T>, z: Complex<T>) -> Complex<T> {
        let d = Complex::<T>::one() - a.conj() * z;
        Complex::new(T::one() - a.norm_sqr(), T::zero()) / (d * d)
    }
}

impl<T: Real> DiskFunction<T> for BlaschkeProduct<T> {
    fn value_at(&self, z: Complex<T>) -> Complex<T> {
        self.zeros.iter().fold(self.rotation, |acc, &a| acc * Self::factor(a, z))
    }

    fn derivative_at(&self, z: Complex<T>) -> Complex<T> {
        let near = self.zeros.iter().any(|&a| (z - a).norm() < T::lit(NEAR_ZERO));
        if near {
            // product rule, no division by (z - a)
            let n = self.zeros.len();
            let mut sum = Complex::zero();
            for k in 0..n {
                let mut term = Self::factor_derivative(self.zeros[k], z);
                for (j, &a) in self.zeros.iter().enumerate() {
                    if j != k {
                        term = term * Self::factor(a, z);
                    }
                }
                sum = sum + term;
            }
            self.rotation * sum
        } else {
            let log_derivative = self.zeros.iter().fold(Complex::zero(), |acc, &a| {
                acc + Complex::new(T::one() - a.norm_sqr(), T::zero())
                    / ((z - a) * (Complex::<T>::one() - a.conj() * z))
            });
            self.value_at(z) * log_derivative
        }
    }

    fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        let one = TruncatedSeries::elementary(Elementary::One, order);
        let z = TruncatedSeries::elementary(Elementary::Identity, order);
        self.zeros.iter().fold(TruncatedSeries::constant(self.rotation, order), |acc, &a| {
            let num = &z - &one.scale(a);
            let den = &one - &z.scale(a.conj());
            // den(0) = 1, so the quotient always exists
            acc.multiply(&num.divide(&den).expect("unit constant term"))
        })
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for BlaschkeProduct<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr<T> {
            zeros: Vec<Complex<T>>,
            rotation: Complex<T>,
        }
        let repr = Repr::<T>::deserialize(deserializer)?;
        Self::new(repr.zeros, repr.rotation).map_err(D::Error::custom)
    }
}

/// Concrete analytic `ψ` with `|ψ| ≤ 1` on the disk.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundedAnalytic<T> {
    Blaschke(BlaschkeProduct<T>),
    Constant {
        value: Complex<T>,
    },
    /// `weight·B(z) + (1 - weight)·constant`.
    Convex {
        blaschke: BlaschkeProduct<T>,
        constant: Complex<T>,
        weight: T,
    },
}

impl<T: Real> BoundedAnalytic<T> {
    pub fn constant(value: Complex<T>) -> Result<Self> {
        if !is_finite_complex(value) {
            return Err(Error::NonFinite("bounded constant"));
        }
        if value.norm() > T::one() {
            return Err(Error::ConstantNotBounded { modulus: to_f64(value.norm()) });
        }
        Ok(Self::Constant { value })
    }

    pub fn convex(blaschke: BlaschkeProduct<T>, constant: Complex<T>, weight: T) -> Result<Self> {
        if !(weight >= T::zero() && weight <= T::one()) {
            return Err(Error::WeightOutOfRange(to_f64(weight)));
        }
        Self::constant(constant)?;
        Ok(Self::Convex { blaschke, constant, weight })
    }

    pub fn one() -> Self {
        Self::Constant { value: Complex::<T>::one() }
    }

    /// `ψ(e^{iθ} z)`.
    pub fn rotate_argument(&self, theta: T) -> Self {
        match self {
            Self::Blaschke(b) => Self::Blaschke(b.rotate_argument(theta)),
            Self::Constant { value } => Self::Constant { value: *value },
            Self::Convex { blaschke, constant, weight } => {
                Self::Convex { blaschke: blaschke.rotate_argument(theta), constant: *constant, weight: *weight }
            }
        }
    }

    /// `u·ψ` for `|u| = 1`.
    pub fn scale_unimodular(&self, u: Complex<T>) -> Self {
        match self {
            Self::Blaschke(b) => Self::Blaschke(b.scale_unimodular(u)),
            Self::Constant { value } => Self::Constant { value: value * u },
            Self::Convex { blaschke, constant, weight } => {
                Self::Convex { blaschke: blaschke.scale_unimodular(u), constant: constant * u, weight: *weight }
            }
        }
    }
}

impl<T: Real> From<BlaschkeProduct<T>> for BoundedAnalytic<T> {
    fn from(b: BlaschkeProduct<T>) -> Self {
        Self::Blaschke(b)
    }
}

impl<T: Real> DiskFunction<T> for BoundedAnalytic<T> {
    fn value_at(&self, z: Complex<T>) -> Complex<T> {
        match self {
            Self::Blaschke(b) => b.value_at(z),
            Self::Constant { value } => *value,
            Self::Convex { blaschke, constant, weight } => {
                blaschke.value_at(z) * *weight + constant * (T::one() - *weight)
            }
        }
    }

    fn derivative_at(&self, z: Complex<T>) -> Complex<T> {
        match self {
            Self::Blaschke(b) => b.derivative_at(z),
            Self::Constant { .. } => Complex::zero(),
            Self::Convex { blaschke, weight, .. } => blaschke.derivative_at(z) * *weight,
        }
    }

    fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        match self {
            Self::Blaschke(b) => b.to_series(order),
            Self::Constant { value } => TruncatedSeries::constant(*value, order),
            Self::Convex { blaschke, constant, weight } => {
                let w = Complex::new(*weight, T::zero());
                let c = TruncatedSeries::constant(constant * (T::one() - *weight), order);
                &blaschke.to_series(order).scale(w) + &c
            }
        }
    }
}

/// `φ(z) = z·factor(z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchwarzFunction<T> {
    factor: BoundedAnalytic<T>,
}

impl<T: Real> SchwarzFunction<T> {
    pub fn new(factor: BoundedAnalytic<T>) -> Self {
        Self { factor }
    }

    /// `φ(z) = z`.
    pub fn identity() -> Self {
        Self::new(BoundedAnalytic::one())
    }

    /// `φ ≡ 0`.
    pub fn zero() -> Self {
        Self::new(BoundedAnalytic::Constant { value: Complex::zero() })
    }

    pub fn factor(&self) -> &BoundedAnalytic<T> {
        &self.factor
    }

    /// `-φ`.
    pub fn negate(&self) -> Self {
        Self::new(self.factor.scale_unimodular(-Complex::<T>::one()))
    }

    /// `φ(e^{iθ} z) = z · e^{iθ} B(e^{iθ} z)`.
    pub fn rotate_argument(&self, theta: T) -> Self {
        Self::new(self.factor.rotate_argument(theta).scale_unimodular(cis(theta)))
    }
}

impl<T: Real> DiskFunction<T> for SchwarzFunction<T> {
    fn value_at(&self, z: Complex<T>) -> Complex<T> {
        z * self.factor.value_at(z)
    }

    fn derivative_at(&self, z: Complex<T>) -> Complex<T> {
        self.factor.value_at(z) + z * self.factor.derivative_at(z)
    }

    fn to_series(&self, order: usize) -> TruncatedSeries<T> {
        self.factor.to_series(order).shift_multiply_by_z()
    }
}

/// Schwarz–Pick slack `(1 - |ψ(z)|²)/(1 - |z|²) - |ψ'(z)|`.
pub fn nehari_check<T: Real, F: DiskFunction<T> + ?Sized>(psi: &F, z: Complex<T>) -> Result<T> {
    let value = psi.eval_value(z)?;
    let derivative = psi.eval_derivative(z)?;
    Ok((T::one() - value.norm_sqr()) / (T::one() - z.norm_sqr()) - derivative.norm())
}

/// SplitMix64 finalizer; maps `(base, index)` to an independent trial seed.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut x = base ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

fn sample_unimodular<T: Real>(rng: &mut ChaCha8Rng) -> Complex<T> {
    cis(T::lit(rng.random::<f64>() * std::f64::consts::TAU))
}

fn sample_blaschke<T: Real>(rng: &mut ChaCha8Rng, max_degree: usize) -> BlaschkeProduct<T> {
    let degree = rng.random_range(0..=max_degree);
    let zeros = (0..degree)
        .map(|_| {
            // uniform in area on the disk of radius MAX_ZERO_MODULUS
            let rho = MAX_ZERO_MODULUS * rng.random::<f64>().sqrt();
            let theta = rng.random::<f64>() * std::f64::consts::TAU;
            Complex::from_polar(T::lit(rho), T::lit(theta))
        })
        .map(|a: Complex<T>| {
            // polar rounding may push |a| a hair past the cap
            let cap = T::lit(MAX_ZERO_MODULUS);
            if a.norm() > cap {
                a * (cap / a.norm())
            } else {
                a
            }
        })
        .collect();
    let rotation = sample_unimodular(rng);
    BlaschkeProduct { zeros, rotation }
}

/// Deterministic Schwarz function `z·B(z)` with `B` of degree `≤ max_degree`.
pub fn sample_schwarz<T: Real>(seed: u64, max_degree: usize) -> SchwarzFunction<T> {
    let mut rng = stream(seed, STREAM_SCHWARZ);
    SchwarzFunction::new(BoundedAnalytic::Blaschke(sample_blaschke(&mut rng, max_degree)))
}

/// Deterministic bounded function: half Blaschke products, a quarter
/// constants, a quarter convex combinations.
pub fn sample_bounded<T: Real>(seed: u64, max_degree: usize) -> BoundedAnalytic<T> {
    let mut rng = stream(seed, STREAM_BOUNDED);
    let kind = rng.random::<f64>();
    if kind < 0.5 {
        BoundedAnalytic::Blaschke(sample_blaschke(&mut rng, max_degree))
    } else if kind < 0.75 {
        let modulus = T::lit(rng.random::<f64>());
        BoundedAnalytic::Constant { value: sample_unimodular::<T>(&mut rng) * modulus }
    } else {
        let blaschke = sample_blaschke(&mut rng, max_degree);
        let modulus = T::lit(rng.random::<f64>());
        let constant = sample_unimodular::<T>(&mut rng) * modulus;
        let weight = T::lit(rng.random::<f64>());
        BoundedAnalytic::Convex { blaschke, constant, weight }
    }
}

/// Aggregate of [`nehari_check`] over sampled bounded functions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NehariSummary<T> {
    pub functions: usize,
    pub points_per_function: usize,
    pub min_margin: T,
    /// Seed of the function attaining `min_margin`, and the point.
    pub worst: Option<(u64, Complex<T>)>,
    pub max_modulus: T,
    pub violations: usize,
    pub violator_seeds: Vec<u64>,
}

/// Runs the Nehari bound and the `|ψ| ≤ 1` bound for `count` functions drawn
/// with seeds `derive_seed(seed, i)`.
pub fn nehari_suite<T: Real>(
    count: usize,
    seed: u64,
    max_degree: usize,
    grid: &PolarGrid<T>,
) -> Result<NehariSummary<T>> {
    let per_function: Vec<(u64, T, Complex<T>, T)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = derive_seed(seed, i as u64);
            let psi = sample_bounded::<T>(s, max_degree);
            let mut worst = (T::infinity(), Complex::zero());
            let mut max_modulus = T::zero();
            for z in grid.points() {
                let margin = nehari_check(&psi, z)?;
                if margin < worst.0 {
                    worst = (margin, z);
                }
                max_modulus = max_modulus.max(psi.eval_value(z)?.norm());
            }
            Ok((s, worst.0, worst.1, max_modulus))
        })
        .collect::<Result<_>>()?;

    let tol = -T::lit(NEHARI_TOL);
    let mut summary = NehariSummary {
        functions: count,
        points_per_function: grid.len(),
        min_margin: T::infinity(),
        worst: None,
        max_modulus: T::zero(),
        violations: 0,
        violator_seeds: Vec::new(),
    };
    for (s, margin, z, modulus) in per_function {
        if margin < summary.min_margin {
            summary.min_margin = margin;
            summary.worst = Some((s, z));
        }
        summary.max_modulus = summary.max_modulus.max(modulus);
        if margin < tol || modulus > T::one() + T::lit(1e-10) {
            summary.violations += 1;
            summary.violator_seeds.push(s);
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64) -> C {
        C::new(re, 0.0)
    }

    fn blaschke(zeros: &[f64]) -> BlaschkeProduct<f64> {
        BlaschkeProduct::new(zeros.iter().map(|&a| c(a)).collect(), c(1.0)).unwrap()
    }

    #[test]
    fn make_blaschke_examples() {
        let id = blaschke(&[0.0]);
        assert_eq!(id, BlaschkeProduct::identity());
        assert_eq!(id.eval_value(C::new(0.3, -0.2)).unwrap(), C::new(0.3, -0.2));
        assert_eq!(blaschke(&[0.5]).eval_value(c(0.0)).unwrap(), c(-0.5));
        assert!((blaschke(&[0.5, -0.5]).eval_value(c(0.0)).unwrap() - c(-0.25)).norm() < 1e-16);
    }

    #[test]
    fn make_blaschke_errors() {
        let err = BlaschkeProduct::new(vec![c(0.95)], c(1.0));
        assert!(matches!(err, Err(Error::ZeroOutsideCap { .. })));
        let err = BlaschkeProduct::new(vec![c(0.5)], c(1.1));
        assert!(matches!(err, Err(Error::RotationNotUnimodular { .. })));
        assert!(BlaschkeProduct::new(vec![], C::new(0.6, 0.8)).is_ok());
    }

    #[test]
    fn eval_examples() {
        let id = SchwarzFunction::<f64>::identity();
        assert_eq!(id.eval_value(c(0.3)).unwrap(), c(0.3));
        let one = BoundedAnalytic::<f64>::one();
        assert_eq!(one.eval_value(C::new(0.1, 0.7)).unwrap(), c(1.0));
        assert_eq!(blaschke(&[0.5]).eval_value(c(0.5)).unwrap(), c(0.0));
        let err = one.eval_value(c(0.9995));
        assert!(matches!(err, Err(Error::EvaluationOutsideDisk { .. })));
    }

    #[test]
    fn derivative_examples() {
        let id = SchwarzFunction::<f64>::identity();
        assert_eq!(id.eval_derivative(C::new(0.2, 0.4)).unwrap(), c(1.0));
        let k = BoundedAnalytic::constant(C::new(0.3, 0.1)).unwrap();
        assert_eq!(k.eval_derivative(c(0.5)).unwrap(), c(0.0));
        assert!((blaschke(&[0.5]).eval_derivative(c(0.0)).unwrap() - c(0.75)).norm() < 1e-15);
    }

    #[test]
    fn derivative_near_a_zero_uses_product_rule() {
        let b = BlaschkeProduct::new(vec![C::new(0.3, 0.2), C::new(-0.4, 0.1)], C::new(0.0, 1.0)).unwrap();
        let at_zero = b.eval_derivative(C::new(0.3, 0.2)).unwrap();
        let beside = b.eval_derivative(C::new(0.3 + 1e-7, 0.2)).unwrap();
        assert!(at_zero.norm().is_finite());
        assert!((at_zero - beside).norm() < 1e-5);
    }

    #[test]
    fn nehari_examples() {
        let id = BoundedAnalytic::<f64>::Blaschke(BlaschkeProduct::identity());
        assert!(nehari_check(&id, c(0.3)).unwrap().abs() < 1e-15);
        let half = BoundedAnalytic::constant(c(0.5)).unwrap();
        assert_eq!(nehari_check(&half, c(0.0)).unwrap(), 0.75);
        let b = BoundedAnalytic::from(blaschke(&[0.5]));
        assert!(nehari_check(&b, c(0.0)).unwrap().abs() < 1e-15);
        assert!(nehari_check(&b, c(1.0)).is_err());
    }

    #[test]
    fn to_series_examples() {
        let id = SchwarzFunction::<f64>::identity().to_series(4);
        assert_eq!(id, TruncatedSeries::from_real(&[0.0, 1.0, 0.0, 0.0, 0.0]).unwrap());
        let s = blaschke(&[0.5]).to_series(5);
        let expected = TruncatedSeries::from_real(&[-0.5, 0.75, 0.375, 0.1875, 0.09375, 0.046875]).unwrap();
        assert!(s.max_abs_diff(&expected) < 1e-16);
        let k = BoundedAnalytic::constant(C::new(0.2, -0.1)).unwrap().to_series(3);
        assert_eq!(k, TruncatedSeries::constant(C::new(0.2, -0.1), 3));
    }

    #[test]
    fn to_series_matches_closed_form() {
        for seed in 0..20 {
            let psi = sample_bounded::<f64>(seed, 4);
            let phi = sample_schwarz::<f64>(seed, 4);
            let (ps, fs) = (psi.to_series(64), phi.to_series(64));
            for z in PolarGrid::new(0.4, 4, 16).points() {
                assert!((ps.evaluate(z).unwrap() - psi.eval_value(z).unwrap()).norm() < 1e-8);
                assert!((fs.evaluate(z).unwrap() - phi.eval_value(z).unwrap()).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_schwarz::<f64>(17, 3), sample_schwarz::<f64>(17, 3));
        assert_eq!(sample_bounded::<f64>(17, 3), sample_bounded::<f64>(17, 3));
        assert_ne!(sample_schwarz::<f64>(17, 3), sample_schwarz::<f64>(18, 3));
    }

    #[test]
    fn degree_zero_schwarz_is_a_rotation() {
        for seed in 0..10 {
            let phi = sample_schwarz::<f64>(seed, 0);
            match phi.factor() {
                BoundedAnalytic::Blaschke(b) => {
                    assert_eq!(b.degree(), 0);
                    assert!((b.rotation().norm() - 1.0).abs() < 1e-15);
                }
                other => panic!("unexpected factor {other:?}"),
            }
        }
    }

    #[test]
    fn sampled_parameters_respect_caps() {
        for seed in 0..200 {
            if let BoundedAnalytic::Blaschke(b) = sample_schwarz::<f64>(seed, 3).factor() {
                assert!(b.degree() <= 3);
                assert!(BlaschkeProduct::new(b.zeros().to_vec(), b.rotation()).is_ok());
            }
        }
    }

    #[test]
    fn blaschke_json_shape() {
        let b = BlaschkeProduct::new(vec![C::new(0.5, -0.25)], C::new(0.0, 1.0)).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"zeros":[[0.5,-0.25]],"rotation":[0.0,1.0]}"#);
        assert_eq!(serde_json::from_str::<BlaschkeProduct<f64>>(&json).unwrap(), b);
        assert!(serde_json::from_str::<BlaschkeProduct<f64>>(r#"{"zeros":[[0.95,0.0]],"rotation":[1.0,0.0]}"#).is_err());
    }

    #[test]
    fn rotation_of_argument() {
        let theta = 0.7;
        let u = cis(theta);
        for seed in 0..10 {
            let phi = sample_schwarz::<f64>(seed, 3);
            let rotated = phi.rotate_argument(theta);
            for z in PolarGrid::new(0.9, 3, 8).points() {
                assert!((rotated.value_at(z) - phi.value_at(u * z)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn negation() {
        let phi = sample_schwarz::<f64>(3, 3);
        let z = C::new(0.2, 0.5);
        assert!((phi.negate().value_at(z) + phi.value_at(z)).norm() < 1e-15);
    }

    #[test]
    fn constructors_validate() {
        assert!(matches!(BoundedAnalytic::constant(c(1.5)), Err(Error::ConstantNotBounded { .. })));
        let b = BlaschkeProduct::identity();
        assert!(matches!(BoundedAnalytic::convex(b.clone(), c(0.1), 1.2), Err(Error::WeightOutOfRange(_))));
        assert!(BoundedAnalytic::convex(b, c(0.1), 0.4).is_ok());
    }

    #[test]
    fn derive_seed_spreads_indices() {
        let seeds: std::collections::HashSet<u64> = (0..1000).map(|i| derive_seed(1, i)).collect();
        assert_eq!(seeds.len(), 1000);
    }
}
