//! Figure data for `plot` and its CSV / SVG renderings.

use std::fmt::Write as _;

use majorant::geometry::{boundary_of_cos, DEFAULT_RESOLUTION};
use majorant::radius;
use serde::Serialize;

use crate::config::Figure;

/// Step of the `k(r)` table.
pub const K_STEP_DENOM: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureData {
    pub figure: Figure,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    /// The curve closes back on its first row.
    #[serde(skip)]
    pub closed: bool,
}

impl FigureData {
    /// `(θ, Re cos e^{iθ}, Im cos e^{iθ})` along the boundary polyline.
    pub fn boundary() -> majorant::Result<Self> {
        let curve = boundary_of_cos::<f64>(DEFAULT_RESOLUTION)?;
        let rows = curve.points().iter().enumerate().map(|(k, w)| vec![curve.parameter(k), w.re, w.im]).collect();
        Ok(Self { figure: Figure::Boundary, columns: vec!["theta", "re", "im"], rows, closed: true })
    }

    /// `(r, k(r))` for `r = i/1000`, `i = 0..=1000`.
    pub fn k_table() -> majorant::Result<Self> {
        let rows = (0..=K_STEP_DENOM)
            .map(|i| {
                let r = i as f64 / K_STEP_DENOM as f64;
                radius::k(r).map(|k| vec![r, k])
            })
            .collect::<majorant::Result<_>>()?;
        Ok(Self { figure: Figure::K, columns: vec!["r", "k(r)"], rows, closed: false })
    }

    pub fn build(figure: Figure) -> majorant::Result<Self> {
        match figure {
            Figure::Boundary => Self::boundary(),
            Figure::K => Self::k_table(),
        }
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
    }

    /// A single `<path>` through the last two columns, y pointing up.
    pub fn to_svg(&self) -> String {
        let pts: Vec<(f64, f64)> = self.rows.iter().map(|r| (r[r.len() - 2], -r[r.len() - 1])).collect();
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in &pts {
            (x0, y0, x1, y1) = (x0.min(x), y0.min(y), x1.max(x), y1.max(y));
        }
        let pad = 0.05 * (x1 - x0).max(y1 - y0);
        let (vx, vy, vw, vh) = (x0 - pad, y0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);

        let mut d = String::new();
        for (i, (x, y)) in pts.iter().enumerate() {
            let _ = write!(d, "{}{x:.6} {y:.6}", if i == 0 { "M" } else { " L" });
        }
        if self.closed {
            d.push_str(" Z");
        }
        let mut svg = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx:.6} {vy:.6} {vw:.6} {vh:.6}\" width=\"640\" height=\"{:.0}\">\n",
            640.0 * vh / vw
        );
        if self.figure == Figure::K {
            // the r axis, where the sign change shows
            let _ = writeln!(
                svg,
                "  <line x1=\"{x0:.6}\" y1=\"0\" x2=\"{x1:.6}\" y2=\"0\" stroke=\"gray\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>"
            );
        }
        let _ = writeln!(svg, "  <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>");
        svg.push_str("</svg>\n");
        svg
    }
}
