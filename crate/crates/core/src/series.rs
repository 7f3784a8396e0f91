//! Truncated complex Taylor series `c₀ + c₁z + … + c_N z^N`.
//!
//! Binary operations on series of orders `N₁` and `N₂` produce order
//! `min(N₁, N₂)`. Coefficients are stored densely.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_complex, Real};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 64;

/// Coefficientwise agreement tolerance for series identities.
pub const EPS_SERIES: f64 = 1e-12;

/// Below this modulus a constant term counts as zero.
pub const TAU_DIV: f64 = 1e-10;

/// Largest `|z|` accepted by [`TruncatedSeries::evaluate`].
pub const R_EVAL_MAX: f64 = 0.999;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> TruncatedSeries<T> {
    /// Builds a series from `c₀..c_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Complex<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if !coeffs.iter().all(|c| is_finite_complex(*c)) {
            return Err(Error::NonFinite("series coefficients"));
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients, convenient for tests and fixtures.
    pub fn from_real(coeffs: &[T]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| Complex::new(c, T::zero())).collect())
    }

    fn checked(coeffs: Vec<Complex<T>>, what: &'static str) -> Result<Self> {
        if coeffs.iter().all(|c| is_finite_complex(*c)) {
            Ok(Self { coeffs })
        } else {
            Err(Error::NonFinite(what))
        }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex::zero(); order + 1] }
    }

    pub fn constant(c: Complex<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs.get(k).copied().unwrap_or_else(Complex::zero)
    }

    /// Keeps `c₀..c_order` (padding with zeros when raising the order).
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex::zero());
        Self { coeffs }
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&c| c * factor).collect() }
    }

    /// Largest coefficientwise modulus difference over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(T::zero(), T::max)
    }

    /// Cauchy product truncated to the common order.
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let (a, b) = (&self.coeffs, &other.coeffs);
        let coeffs = (0..=n).map(|k| (0..=k).fold(Complex::zero(), |acc, i| acc + a[i] * b[k - i])).collect();
        Self { coeffs }
    }

    /// Power-series quotient `self / divisor`; needs `|divisor[0]| ≥ τ_div`.
    pub fn divide(&self, divisor: &Self) -> Result<Self> {
        let b0 = divisor.coeffs[0];
        if b0.norm() < T::lit(TAU_DIV) {
            return Err(Error::DivisionBySingularSeries { modulus: b0.norm().to_f64().unwrap_or(f64::NAN) });
        }
        let n = self.order().min(divisor.order());
        let b = &divisor.coeffs;
        let mut q: Vec<Complex<T>> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let acc = (1..=k).fold(self.coeffs[k], |acc, i| acc - b[i] * q[k - i]);
            q.push(acc / b0);
        }
        Self::checked(q, "series quotient")
    }

    /// Removes a vanishing constant term and divides by `z`; order drops by one.
    pub fn shift_divide_by_z(&self) -> Result<Self> {
        let c0 = self.coeffs[0].norm();
        if c0 > T::lit(TAU_DIV) {
            return Err(Error::NonvanishingConstantTerm { modulus: c0.to_f64().unwrap_or(f64::NAN) });
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Multiplies by `z`, keeping the order (the top coefficient falls off).
    pub fn shift_multiply_by_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Complex::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs }
    }

    /// `self ∘ inner` by Horner's rule on series; needs `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let c0 = inner.coeffs[0].norm();
        if c0 > T::lit(TAU_DIV) {
            return Err(Error::InnerConstantTermNonzero { modulus: c0.to_f64().unwrap_or(f64::NAN) });
        }
        let n = self.order().min(inner.order());
        let mut inner = inner.truncate(n);
        // the tolerated residue would otherwise leak into every coefficient
        inner.coeffs[0] = Complex::zero();
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.multiply(&inner);
            acc.coeffs[0] = acc.coeffs[0] + self.coeffs[k];
        }
        Ok(acc)
    }

    /// `exp(self)`, via `n·w[n] = Σ k·v[k]·w[n-k]` for the zero-constant part.
    pub fn exp_series(&self) -> Result<Self> {
        let n = self.order();
        let v = &self.coeffs;
        let mut w: Vec<Complex<T>> = Vec::with_capacity(n + 1);
        w.push(Complex::one());
        for m in 1..=n {
            let acc = (1..=m).fold(Complex::zero(), |acc, k| acc + v[k] * w[m - k] * T::of_usize(k));
            w.push(acc / T::of_usize(m));
        }
        let scale = v[0].exp();
        Self::checked(w.into_iter().map(|c| c * scale).collect(), "exponential series")
    }

    /// Termwise derivative; order drops by one.
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order()).map(|k| self.coeffs[k] * T::of_usize(k)).collect();
        Self { coeffs }
    }

    /// Antiderivative vanishing at 0; order rises by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, &c)| c / T::of_usize(k + 1)));
        Self { coeffs }
    }

    /// Horner evaluation of the truncated polynomial for `|z| ≤ r_eval_max`.
    pub fn evaluate(&self, z: Complex<T>) -> Result<Complex<T>> {
        check_eval_point(z, T::lit(R_EVAL_MAX))?;
        Ok(self.horner(z))
    }

    pub(crate) fn horner(&self, z: Complex<T>) -> Complex<T> {
        self.coeffs.iter().rev().fold(Complex::zero(), |acc, &c| acc * z + c)
    }

    /// Taylor coefficients of a named entire function.
    pub fn elementary(kind: Elementary, order: usize) -> Self {
        let mut coeffs = vec![Complex::zero(); order + 1];
        match kind {
            Elementary::One => coeffs[0] = Complex::one(),
            Elementary::Identity => {
                if order >= 1 {
                    coeffs[1] = Complex::one();
                }
            }
            Elementary::Cos | Elementary::Sin | Elementary::Exp => {
                // n! stays exact in f64 through 22!, so 1/n! is correctly rounded there
                let mut factorial = T::one();
                for (n, c) in coeffs.iter_mut().enumerate() {
                    if n > 0 {
                        factorial = factorial * T::of_usize(n);
                    }
                    let inv = T::one() / factorial;
                    let value = match (kind, n % 4) {
                        (Elementary::Exp, _) => inv,
                        (Elementary::Cos, 0) | (Elementary::Sin, 1) => inv,
                        (Elementary::Cos, 2) | (Elementary::Sin, 3) => -inv,
                        _ => T::zero(),
                    };
                    *c = Complex::new(value, T::zero());
                }
            }
        }
        Self { coeffs }
    }
}

pub(crate) fn check_eval_point<T: Real>(z: Complex<T>, limit: T) -> Result<()> {
    if !is_finite_complex(z) {
        return Err(Error::NonFinite("evaluation point"));
    }
    let modulus = z.norm();
    if modulus > limit {
        return Err(Error::EvaluationOutsideDisk {
            modulus: modulus.to_f64().unwrap_or(f64::NAN),
            limit: limit.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

impl<T: Real> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Real> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Real> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.multiply(rhs)
    }
}

impl<T: Real> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Entire functions with built-in coefficient tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Cos,
    Sin,
    Exp,
    Identity,
    One,
}

impl FromStr for Elementary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cos" => Ok(Self::Cos),
            "sin" => Ok(Self::Sin),
            "exp" => Ok(Self::Exp),
            "identity" => Ok(Self::Identity),
            "one" => Ok(Self::One),
            other => Err(Error::UnknownElementary(other.to_owned())),
        }
    }
}

impl fmt::Display for Elementary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cos => "cos",
            Self::Sin => "sin",
            Self::Exp => "exp",
            Self::Identity => "identity",
            Self::One => "one",
        })
    }
}

// JSON shape: {"order": N, "coeffs": [[re, im], ...]}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<T> {
    order: usize,
    coeffs: Vec<Complex<T>>,
}

impl<T: Serialize> Serialize for TruncatedSeries<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Borrowed<'a, T> {
            order: usize,
            coeffs: &'a [Complex<T>],
        }
        Borrowed { order: self.coeffs.len() - 1, coeffs: &self.coeffs }.serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for TruncatedSeries<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::<T>::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        Self::from_coeffs(repr.coeffs).map_err(D::Error::custom)
    }
}
