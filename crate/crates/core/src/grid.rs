//! Polar sample grids on closed disks centered at the origin.

use num_complex::Complex;
use serde::Serialize;

use crate::scalar::{cis, Real};

/// `radii × angles` grid on the closed disk of the given radius.
///
/// Radii are `radius·i/radii` for `i = 1..=radii` (the outer circle is always
/// sampled) and angles are `2πj/angles` for `j = 0..angles`. The origin is not
/// part of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarGrid<T> {
    pub radius: T,
    pub radii: usize,
    pub angles: usize,
}

impl<T: Real> PolarGrid<T> {
    pub fn new(radius: T, radii: usize, angles: usize) -> Self {
        Self { radius, radii, angles }
    }

    pub fn len(&self) -> usize {
        self.radii * self.angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The `index`-th point in radius-major order.
    pub fn point(&self, index: usize) -> Complex<T> {
        let (i, j) = (index / self.angles + 1, index % self.angles);
        let rho = self.radius * T::of_usize(i) / T::of_usize(self.radii);
        let theta = T::TAU() * T::of_usize(j) / T::of_usize(self.angles);
        cis(theta) * rho
    }

    pub fn points(&self) -> impl Iterator<Item = Complex<T>> + '_ {
        (0..self.len()).map(move |k| self.point(k))
    }
}
