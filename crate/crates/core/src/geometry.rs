//! Image regions of univalent-looking targets and point containment.
//!
//! `cos` is even, so `cos(e^{i(θ+π)}) = cos(e^{iθ})` and the image of the
//! unit circle is traced twice as `θ` runs over `[0, 2π)`. The boundary of
//! `cos(Δ)` is the closed curve `θ ↦ cos(e^{iθ})`, `θ ∈ [0, π]`, whose
//! endpoints meet at `cos(1)`. Polylines here sample that half circle once.
//!
//! Because `cos` is two-to-one on `Δ`, `p(0) = 1` together with
//! `p(Δ) ⊂ cos(Δ)` is necessary for `p ≺ cos` but not sufficient; the
//! containment test is a necessary-condition check.

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::PolarGrid;
use crate::scalar::{cis, is_finite_complex, Real};

/// Default number of polyline vertices.
pub const DEFAULT_RESOLUTION: usize = 4096;

/// Smallest accepted number of vertices.
pub const MIN_RESOLUTION: usize = 64;

/// Indeterminate band, relative to the curve diameter.
pub const BOUNDARY_BAND: f64 = 1e-6;

/// Tolerance on `|candidate(0) - target(0)|`.
pub const VALUE_AT_ZERO_TOL: f64 = 1e-9;

/// Default subordination sample grid: radii × angles.
pub const DEFAULT_GRID: (usize, usize) = (48, 96);

/// Largest admissible sample radius.
pub const MAX_SAMPLE_RADIUS: f64 = 0.999;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSource<T> {
    pub map: String,
    pub resolution: usize,
    /// Parameter `θ_k = span·k/resolution`.
    pub parameter_span: T,
}

/// Closed polyline; the last vertex connects back to the first.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryPolyline<T> {
    points: Vec<Complex<T>>,
    source: CurveSource<T>,
    diameter: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Inside,
    Outside,
    Indeterminate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionQueryResult<T> {
    pub verdict: Verdict,
    pub winding: i32,
    pub distance_to_curve: T,
}

/// `cos(x + iy) = cos x cosh y - i sin x sinh y`.
pub fn complex_cos<T: Real>(z: Complex<T>) -> Complex<T> {
    Complex::new(z.re.cos() * z.im.cosh(), -(z.re.sin() * z.im.sinh()))
}

/// Boundary of `cos(Δ)` sampled at `θ_k = πk/M`, `k = 0..M`.
pub fn boundary_of_cos<T: Real>(resolution: usize) -> Result<BoundaryPolyline<T>> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::ResolutionTooLow { got: resolution, min: MIN_RESOLUTION });
    }
    let m = T::of_usize(resolution);
    let points = (0..resolution).map(|k| complex_cos(cis(T::PI() * T::of_usize(k) / m))).collect();
    // |d/dθ cos(e^{iθ})| = |sin(e^{iθ})| ≤ sinh 1 on the unit circle
    let max_speed = T::one().sinh();
    let source = CurveSource { map: "cos".to_owned(), resolution, parameter_span: T::PI() };
    let curve = BoundaryPolyline::from_points(points, source)?;
    curve.check_spacing(max_speed)?;
    curve.check_simple()?;
    Ok(curve)
}

impl<T: Real> BoundaryPolyline<T> {
    /// Wraps arbitrary vertices; only finiteness and vertex count are checked.
    pub fn from_points(points: Vec<Complex<T>>, source: CurveSource<T>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidPolyline(format!("{} vertices cannot enclose a region", points.len())));
        }
        if !points.iter().all(|p| is_finite_complex(*p)) {
            return Err(Error::NonFinite("polyline vertex"));
        }
        let mut diameter = T::zero();
        for (i, a) in points.iter().enumerate() {
            for b in &points[i + 1..] {
                diameter = diameter.max((a - b).norm_sqr());
            }
        }
        Ok(Self { points, source, diameter: diameter.sqrt() })
    }

    pub fn points(&self) -> &[Complex<T>] {
        &self.points
    }

    pub fn source(&self) -> &CurveSource<T> {
        &self.source
    }

    pub fn diameter(&self) -> T {
        self.diameter
    }

    /// Parameter value of vertex `k`.
    pub fn parameter(&self, k: usize) -> T {
        self.source.parameter_span * T::of_usize(k) / T::of_usize(self.source.resolution)
    }

    /// Width of the band around the curve where queries are indeterminate.
    pub fn boundary_band(&self) -> T {
        T::lit(BOUNDARY_BAND) * self.diameter
    }

    /// Same closed curve with the vertex list started at `shift`.
    pub fn rotated(&self, shift: usize) -> Self {
        let mut points = self.points.clone();
        let n = points.len();
        points.rotate_left(shift % n);
        Self { points, source: self.source.clone(), diameter: self.diameter }
    }

    fn edges(&self) -> impl Iterator<Item = (Complex<T>, Complex<T>)> + '_ {
        let n = self.points.len();
        (0..n).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    fn check_spacing(&self, max_speed: T) -> Result<()> {
        let step = self.source.parameter_span / T::of_usize(self.source.resolution);
        let limit = step * max_speed * (T::one() + T::lit(1e-9));
        match self.edges().map(|(a, b)| (b - a).norm()).find(|&d| d > limit) {
            Some(d) => Err(Error::InvalidPolyline(format!("vertex spacing {d} exceeds {limit}"))),
            None => Ok(()),
        }
    }

    /// Sweep over x-sorted edges; nonadjacent edges must not touch.
    pub fn check_simple(&self) -> Result<()> {
        let n = self.points.len();
        let edges: Vec<(Complex<T>, Complex<T>)> = self.edges().collect();
        let mut order: Vec<usize> = (0..n).collect();
        let min_x = |i: usize| edges[i].0.re.min(edges[i].1.re);
        let max_x = |i: usize| edges[i].0.re.max(edges[i].1.re);
        order.sort_by(|&a, &b| min_x(a).partial_cmp(&min_x(b)).expect("finite vertices"));
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[pos + 1..] {
                if min_x(j) > max_x(i) {
                    break;
                }
                let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                if !adjacent && segments_intersect(edges[i], edges[j]) {
                    return Err(Error::InvalidPolyline(format!("edges {i} and {j} intersect")));
                }
            }
        }
        Ok(())
    }

    /// Winding number by summing signed angle increments, with the
    /// indeterminate band applied.
    pub fn winding_number(&self, w: Complex<T>) -> RegionQueryResult<T> {
        let mut angle = T::zero();
        let mut distance = T::infinity();
        for (a, b) in self.edges() {
            let (u, v) = (a - w, b - w);
            angle = angle + (u.re * v.im - u.im * v.re).atan2(u.re * v.re + u.im * v.im);
            distance = distance.min(point_segment_distance(w, a, b));
        }
        let winding = (angle / T::TAU()).round().to_i32().unwrap_or(i32::MAX);
        let verdict = if distance < self.boundary_band() {
            Verdict::Indeterminate
        } else {
            match winding.abs() {
                0 => Verdict::Outside,
                1 => Verdict::Inside,
                // only reachable for self-intersecting input
                _ => Verdict::Indeterminate,
            }
        };
        RegionQueryResult { verdict, winding, distance_to_curve: distance }
    }
}

fn cross<T: Real>(o: Complex<T>, a: Complex<T>, b: Complex<T>) -> T {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

fn on_segment<T: Real>(p: Complex<T>, a: Complex<T>, b: Complex<T>) -> bool {
    p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
}

fn segments_intersect<T: Real>((p1, p2): (Complex<T>, Complex<T>), (q1, q2): (Complex<T>, Complex<T>)) -> bool {
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    let zero = T::zero();
    if ((d1 > zero && d2 < zero) || (d1 < zero && d2 > zero)) && ((d3 > zero && d4 < zero) || (d3 < zero && d4 > zero))
    {
        return true;
    }
    (d1 == zero && on_segment(p1, q1, q2))
        || (d2 == zero && on_segment(p2, q1, q2))
        || (d3 == zero && on_segment(q1, p1, p2))
        || (d4 == zero && on_segment(q2, p1, p2))
}

fn point_segment_distance<T: Real>(p: Complex<T>, a: Complex<T>, b: Complex<T>) -> T {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == T::zero() {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.max(T::zero()).min(T::one());
    (p - (a + ab * t)).norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Offender<T> {
    pub z: Complex<T>,
    pub value: Complex<T>,
    pub distance_to_curve: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubordinationReport<T> {
    pub value_at_zero: Complex<T>,
    pub target_value_at_zero: Complex<T>,
    pub value_match: bool,
    pub points: usize,
    pub inside: usize,
    pub outside: usize,
    pub indeterminate: usize,
    /// The Outside sample farthest from the curve.
    pub worst_offender: Option<Offender<T>>,
    /// Smallest distance to the curve among Inside samples.
    pub min_clearance: T,
    pub passed: bool,
}

/// Samples `candidate` on `grid` (plus the origin) and classifies every value
/// against the target region bounded by `curve`.
///
/// Passes when the value at 0 matches and no sample falls Outside.
pub fn subordination_check<T, F>(
    candidate: F,
    curve: &BoundaryPolyline<T>,
    target_value_at_zero: Complex<T>,
    grid: &PolarGrid<T>,
) -> Result<SubordinationReport<T>>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>> + Sync,
{
    if !(grid.radius <= T::lit(MAX_SAMPLE_RADIUS)) {
        return Err(Error::Domain(format!("sample radius {} exceeds {MAX_SAMPLE_RADIUS}", grid.radius)));
    }
    let value_at_zero = candidate(Complex::new(T::zero(), T::zero()))?;
    let value_match = (value_at_zero - target_value_at_zero).norm() <= T::lit(VALUE_AT_ZERO_TOL);

    let samples: Vec<(Complex<T>, Complex<T>, RegionQueryResult<T>)> =
        std::iter::once(Complex::new(T::zero(), T::zero()))
            .chain(grid.points())
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|z| {
                let w = candidate(z)?;
                Ok((z, w, curve.winding_number(w)))
            })
            .collect::<Result<_>>()?;

    let mut report = SubordinationReport {
        value_at_zero,
        target_value_at_zero,
        value_match,
        points: samples.len(),
        inside: 0,
        outside: 0,
        indeterminate: 0,
        worst_offender: None,
        min_clearance: T::infinity(),
        passed: false,
    };
    for (z, value, q) in samples {
        match q.verdict {
            Verdict::Inside => {
                report.inside += 1;
                report.min_clearance = report.min_clearance.min(q.distance_to_curve);
            }
            Verdict::Indeterminate => report.indeterminate += 1,
            Verdict::Outside => {
                report.outside += 1;
                let worse = report.worst_offender.is_none_or(|o| q.distance_to_curve > o.distance_to_curve);
                if worse {
                    report.worst_offender = Some(Offender { z, value, distance_to_curve: q.distance_to_curve });
                }
            }
        }
    }
    report.passed = report.value_match && report.outside == 0;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn curve() -> BoundaryPolyline<f64> {
        boundary_of_cos(DEFAULT_RESOLUTION).unwrap()
    }

    #[test]
    fn vertex_examples() {
        let c = curve();
        let cos1 = 0.540_302_305_868_139_7;
        let cosh1 = 1.543_080_634_815_243_7;
        assert!((c.points()[0] - C::new(cos1, 0.0)).norm() < 1e-15);
        let quarter = c.points()[DEFAULT_RESOLUTION / 2];
        assert!((quarter - C::new(cosh1, 0.0)).norm() < 1e-15);
        assert!((c.parameter(DEFAULT_RESOLUTION / 2) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        // θ = π closes the curve at cos(-1) = cos(1)
        assert!((complex_cos(cis(std::f64::consts::PI)) - C::new(cos1, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn resolution_floor() {
        assert!(matches!(boundary_of_cos::<f64>(63), Err(Error::ResolutionTooLow { got: 63, min: 64 })));
        assert!(boundary_of_cos::<f64>(64).is_ok());
    }

    #[test]
    fn full_circle_parametrization_is_not_simple() {
        let m = 256;
        let points = (0..m).map(|k| complex_cos(cis(std::f64::consts::TAU * k as f64 / m as f64))).collect();
        let source = CurveSource { map: "cos".into(), resolution: m, parameter_span: std::f64::consts::TAU };
        let doubled = BoundaryPolyline::from_points(points, source).unwrap();
        assert!(doubled.check_simple().is_err());
        assert_eq!(doubled.winding_number(C::new(1.0, 0.0)).winding.abs(), 2);
    }

    #[test]
    fn winding_examples() {
        let c = curve();
        let one = c.winding_number(C::new(1.0, 0.0));
        assert_eq!(one.verdict, Verdict::Inside);
        assert_eq!(one.winding.abs(), 1);
        let three = c.winding_number(C::new(3.0, 0.0));
        assert_eq!(three.verdict, Verdict::Outside);
        assert_eq!(three.winding, 0);

        let k = 700;
        let (a, b) = (c.points()[k - 1], c.points()[k + 1]);
        let tangent = (b - a) / (b - a).norm();
        let normal = tangent * C::new(0.0, 1.0);
        let probe = c.points()[k] + normal * (c.boundary_band() / 2.0);
        assert_eq!(c.winding_number(probe).verdict, Verdict::Indeterminate);
    }

    #[test]
    fn winding_is_invariant_under_vertex_rotation() {
        let c = curve();
        let queries = [C::new(1.0, 0.0), C::new(1.2, 0.3), C::new(0.3, 0.0), C::new(1.0, -0.45)];
        for shift in [1, 17, 2048, 4095] {
            let r = c.rotated(shift);
            for &w in &queries {
                assert_eq!(r.winding_number(w).winding, c.winding_number(w).winding);
            }
        }
    }

    #[test]
    fn refinement_keeps_verdicts() {
        let coarse = boundary_of_cos::<f64>(1024).unwrap();
        let fine = boundary_of_cos::<f64>(2048).unwrap();
        let band = coarse.boundary_band();
        for w in PolarGrid::new(1.0, 12, 24).points().map(|z| z + C::new(1.0, 0.0)) {
            let q = coarse.winding_number(w);
            if q.distance_to_curve >= 2.0 * band {
                assert_eq!(fine.winding_number(w).verdict, q.verdict, "w = {w}");
            }
        }
    }

    #[test]
    fn images_of_interior_points_are_inside() {
        let c = curve();
        for z in PolarGrid::new(0.95, 10, 36).points() {
            assert_eq!(c.winding_number(complex_cos(z)).verdict, Verdict::Inside, "z = {z}");
        }
    }

    #[test]
    fn verdicts_are_conjugation_symmetric() {
        let c = curve();
        for w in PolarGrid::new(1.2, 8, 24).points().map(|z| z + C::new(1.0, 0.0)) {
            assert_eq!(c.winding_number(w.conj()).verdict, c.winding_number(w).verdict);
        }
    }

    #[test]
    fn subordination_examples() {
        let c = curve();
        let grid = PolarGrid::new(0.95, 12, 24);
        let one = subordination_check(|_| Ok(C::new(1.0, 0.0)), &c, C::new(1.0, 0.0), &grid).unwrap();
        assert!(one.passed && one.value_match && one.outside == 0);
        assert_eq!(one.inside, one.points);

        let two = subordination_check(|_| Ok(C::new(2.0, 0.0)), &c, C::new(1.0, 0.0), &grid).unwrap();
        assert!(!two.passed && !two.value_match);
        assert_eq!(two.outside, two.points);
        assert!(two.worst_offender.is_some());

        let err = subordination_check(|_| Ok(C::new(1.0, 0.0)), &c, C::new(1.0, 0.0), &PolarGrid::new(1.0, 2, 4));
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn cos_of_schwarz_functions_is_subordinate() {
        use crate::functions::{sample_schwarz, DiskFunction};
        let c = curve();
        let grid = PolarGrid::new(0.95, 12, 24);
        for seed in 0..10 {
            let phi = sample_schwarz::<f64>(seed, 3);
            let rep =
                subordination_check(|z| Ok(complex_cos(phi.eval_value(z)?)), &c, C::new(1.0, 0.0), &grid).unwrap();
            assert!(rep.passed, "seed {seed}: {rep:?}");
        }
    }
}
