//! Point lists for re-plotting the `V_3` surface and its ellipse slices.

use crate::manifest::{Figure, FigureKind};
use crate::report::Check;
use crate::table::Table;
use anyhow::Result;
use charvar::trace::{ellipse_tangency_points, v3_form, y_interval, EllipseRegion};
use std::f64::consts::{FRAC_PI_2, PI, TAU};

pub const FAMILY_LEVELS: usize = 10;
pub const DEFAULT_FAMILY: [f64; 2] = [0.0, 1.8];

fn angles(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| TAU * k as f64 / n as f64)
}

/// Boundary `x1² + x2² + x3² − x1x2x3 = 4` through
/// `(2cos u, 2cos v, 2cos(u + v))`, the traces of commuting pairs.
pub fn tetrahedron(res: usize) -> (Table, f64) {
    let mut t = Table::new("tetrahedron", &["u", "v", "x1", "x2", "x3"]);
    let mut worst = 0.0f64;
    for u in angles(res) {
        for v in angles(res) {
            let (x1, x2, x3) = (2.0 * u.cos(), 2.0 * v.cos(), 2.0 * (u + v).cos());
            worst = worst.max((v3_form(x1, x2, x3) - 4.0).abs());
            t.push(vec![u.into(), v.into(), x1.into(), x2.into(), x3.into()]);
        }
    }
    (t, worst)
}

/// Slices of the boundary by `x_axis = level`, for each of the three axes.
pub fn foliation(res: usize) -> Result<(Table, f64)> {
    let mut t = Table::new("foliation", &["axis", "level", "s", "x1", "x2", "x3"]);
    let mut worst = 0.0f64;
    let levels = 16;
    for axis in 1..=3usize {
        for k in 0..=levels {
            let level = -2.0 + 4.0 * k as f64 / levels as f64;
            let e = EllipseRegion::new(level)?;
            for s in angles(res) {
                let (b, c) = e.boundary_point(s);
                let p = match axis {
                    1 => [level, b, c],
                    2 => [b, level, c],
                    _ => [b, c, level],
                };
                worst = worst.max((v3_form(p[0], p[1], p[2]) - 4.0).abs());
                t.push(vec![axis.into(), level.into(), s.into(), p[0].into(), p[1].into(), p[2].into()]);
            }
        }
    }
    Ok((t, worst))
}

/// Parameters of the four tangency points on the boundary parametrization.
fn tangency_angles(y: f64) -> [f64; 4] {
    let phi = y.atan2((4.0 - y * y).max(0.0).sqrt());
    [phi, FRAC_PI_2, phi + PI, 3.0 * FRAC_PI_2]
}

/// Boundary of `Ē_y` followed by its four tangency points with the square.
pub fn ellipse(y: f64, res: usize) -> Result<(Table, f64, usize)> {
    let mut t = Table::new("ellipse", &["y", "s", "b", "c", "tangency"]);
    let e = EllipseRegion::new(y)?;
    let mut worst = 0.0f64;
    for s in angles(res) {
        let (b, c) = e.boundary_point(s);
        worst = worst.max((v3_form(b, c, y) - 4.0).abs());
        t.push(vec![y.into(), s.into(), b.into(), c.into(), false.into()]);
    }
    let tangent = ellipse_tangency_points(y)?;
    let mut on_square = 0;
    for ((b, c), s) in tangent.into_iter().zip(tangency_angles(y)) {
        worst = worst.max((v3_form(b, c, y) - 4.0).abs());
        if b.abs() == 2.0 || c.abs() == 2.0 {
            on_square += 1;
        }
        t.push(vec![y.into(), s.into(), b.into(), c.into(), true.into()]);
    }
    Ok((t, worst, on_square))
}

/// Boundaries of `Ē_y` for evenly spaced `y` across `interval`. Returns
/// the largest `b² + c² + y² − bcy − 4` over emitted points.
pub fn ellipse_family(interval: [f64; 2], res: usize) -> Result<(Table, f64)> {
    let mut t = Table::new("ellipse_family", &["y", "s", "b", "c"]);
    let mut worst = f64::NEG_INFINITY;
    for k in 0..FAMILY_LEVELS {
        let frac = k as f64 / (FAMILY_LEVELS - 1) as f64;
        let y = interval[0] * (1.0 - frac) + interval[1] * frac;
        let e = EllipseRegion::new(y)?;
        for s in angles(res) {
            let (b, c) = e.boundary_point(s);
            worst = worst.max(v3_form(b, c, y) - 4.0);
            t.push(vec![y.into(), s.into(), b.into(), c.into()]);
        }
    }
    Ok((t, worst))
}

pub fn emit(f: &Figure) -> Result<(Vec<Table>, Vec<Check>)> {
    let res = f.resolution;
    Ok(match f.figure {
        FigureKind::Tetrahedron => {
            let (t, worst) = tetrahedron(res);
            (vec![t], vec![Check::at_most("on-surface", worst, 1e-9)])
        }
        FigureKind::Foliation => {
            let (t, worst) = foliation(res)?;
            (vec![t], vec![Check::at_most("on-surface", worst, 1e-9)])
        }
        FigureKind::Ellipse => {
            let y = f.y.unwrap_or(0.0);
            let (t, worst, on_square) = ellipse(y, res)?;
            (
                vec![t],
                vec![
                    Check::at_most("on-boundary", worst, 1e-9),
                    Check::equal("tangency-points-on-square", on_square as f64, 4.0),
                ],
            )
        }
        FigureKind::EllipseFamily => {
            let interval = f.interval.unwrap_or(DEFAULT_FAMILY);
            let (t, worst) = ellipse_family(interval, res)?;
            // a = 1.69, d = 1.062 gives Y(a, d) ≈ [0, 1.8]
            let iv = y_interval(1.69f64, 1.062)?;
            let example = iv.lo.abs().max((iv.hi - 1.8).abs());
            (
                vec![t],
                vec![
                    Check::at_most("membership", worst, 1e-9),
                    Check::at_most("example-interval", example, 0.01),
                ],
            )
        }
    })
}
