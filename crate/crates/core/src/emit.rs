//! CSV and SVG writers for tables and boundary curves.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::families::Table1Row;
use crate::numfmt::{angle, shortest};

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::from("n,theta,A_theta\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.n, shortest(angle(r.theta)), shortest(r.a_theta));
    }
    out
}

pub fn boundary_csv(points: &[(f64, Complex64)]) -> String {
    let mut out = String::from("theta,re,im\n");
    for (theta, w) in points {
        let _ = writeln!(out, "{},{},{}", shortest(angle(*theta)), shortest(w.re), shortest(w.im));
    }
    out
}

/// One closed `<path>` through the points, `y` pointing up, with a
/// `viewBox` fitted to the data plus a 5% margin on each side.
pub fn boundary_svg(points: &[(f64, Complex64)]) -> String {
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for (_, w) in points {
        xmin = xmin.min(w.re);
        xmax = xmax.max(w.re);
        ymin = ymin.min(-w.im);
        ymax = ymax.max(-w.im);
    }
    if points.is_empty() {
        (xmin, xmax, ymin, ymax) = (-1.0, 1.0, -1.0, 1.0);
    }
    let width = (xmax - xmin).max(f64::MIN_POSITIVE);
    let height = (ymax - ymin).max(f64::MIN_POSITIVE);
    let (mx, my) = (0.05 * width, 0.05 * height);
    let stroke = 0.005 * width.max(height);

    let mut d = String::new();
    for (j, (_, w)) in points.iter().enumerate() {
        let cmd = if j == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{} {} ", shortest(w.re), shortest(-w.im));
    }
    d.push('Z');

    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n\
         <path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n\
         </svg>\n",
        shortest(xmin - mx),
        shortest(ymin - my),
        shortest(width + 2.0 * mx),
        shortest(height + 2.0 * my),
        d,
        shortest(stroke),
    )
}
