//! Minimal SVG 1.1 renderer for point-set plots.
//!
//! Exact values are converted to decimals here and only here, at the
//! presentation boundary. The same input always renders to the same bytes.

use std::fmt::Write;

use hyperdist::{Conic, Rational};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 60.0;
const SAMPLES: usize = 800;

/// Render the conic, its points, and labeled chords. Chord entries are
/// `(i, j, label)` with 1-based point indices; labels carry the exact
/// distance strings.
pub fn render(
    conic: &Conic,
    points: &[(Rational, Rational)],
    chords: &[(usize, usize, String)],
) -> String {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .map(|(x, y)| (x.to_f64(), y.to_f64()))
        .collect();
    let a = conic.a().to_f64();
    let b = conic.b().to_f64();
    let c = conic.c().to_f64();
    let d = conic.d().to_f64();
    let asymptote_x = -c / a;
    let asymptote_y = -b / a;

    let (mut x_min, mut x_max, mut y_min, mut y_max) = if pts.is_empty() {
        (
            asymptote_x - 8.0,
            asymptote_x + 8.0,
            asymptote_y - 8.0,
            asymptote_y + 8.0,
        )
    } else {
        pts.iter().fold(
            (f64::MAX, f64::MIN, f64::MAX, f64::MIN),
            |(xl, xh, yl, yh), &(x, y)| (xl.min(x), xh.max(x), yl.min(y), yh.max(y)),
        )
    };
    let pad_x = 0.2 * (x_max - x_min).max(1.0);
    let pad_y = 0.2 * (y_max - y_min).max(1.0);
    x_min -= pad_x;
    x_max += pad_x;
    y_min -= pad_y;
    y_max += pad_y;

    let sx = |x: f64| MARGIN + (x - x_min) / (x_max - x_min) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y_min) / (y_max - y_min) * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">
<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    // coordinate axes, when visible
    if x_min < 0.0 && x_max > 0.0 {
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="silver" stroke-width="1"/>"#,
            sx(0.0),
            sy(y_min),
            sx(0.0),
            sy(y_max)
        );
    }
    if y_min < 0.0 && y_max > 0.0 {
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="silver" stroke-width="1"/>"#,
            sx(x_min),
            sy(0.0),
            sx(x_max),
            sy(0.0)
        );
    }
    // asymptotes, dashed
    for (x1, y1, x2, y2) in [
        (asymptote_x, y_min, asymptote_x, y_max),
        (x_min, asymptote_y, x_max, asymptote_y),
    ] {
        if x1 >= x_min && x1 <= x_max && y1 >= y_min.min(y_max) {
            let _ = writeln!(
                svg,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gainsboro" stroke-width="1" stroke-dasharray="6 4"/>"#,
                sx(x1),
                sy(y1),
                sx(x2),
                sy(y2)
            );
        }
    }

    // hyperbola branches, sampled column by column and split at the
    // asymptote and window exits
    let mut segment: Vec<(f64, f64)> = Vec::new();
    let mut segments: Vec<Vec<(f64, f64)>> = Vec::new();
    for i in 0..=SAMPLES {
        let x = x_min + (x_max - x_min) * (i as f64) / (SAMPLES as f64);
        let den = a * x + c;
        let y = -(b * x + d) / den;
        if den.abs() < 1e-9 || !y.is_finite() || y < y_min || y > y_max {
            if segment.len() > 1 {
                segments.push(std::mem::take(&mut segment));
            } else {
                segment.clear();
            }
            continue;
        }
        segment.push((x, y));
    }
    if segment.len() > 1 {
        segments.push(segment);
    }
    for seg in &segments {
        let mut path = String::new();
        for &(x, y) in seg {
            let _ = write!(path, "{:.2},{:.2} ", sx(x), sy(y));
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
            path.trim_end()
        );
    }

    // chords with their exact distance labels
    for (i, j, label) in chords {
        let (x1, y1) = pts[i - 1];
        let (x2, y2) = pts[j - 1];
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="firebrick" stroke-width="1"/>"#,
            sx(x1),
            sy(y1),
            sx(x2),
            sy(y2)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" fill="maroon" class="chord-label">{}</text>"#,
            sx((x1 + x2) / 2.0) + 4.0,
            sy((y1 + y2) / 2.0) - 4.0,
            label
        );
    }

    // point markers
    for (idx, &(x, y)) in pts.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="black" class="point-marker"/>"#,
            sx(x),
            sy(y)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-size="13" fill="black">P{}</text>"#,
            sx(x) + 6.0,
            sy(y) - 6.0,
            idx + 1
        );
    }

    svg.push_str("</svg>\n");
    svg
}
