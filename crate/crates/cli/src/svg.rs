//! Minimal SVG renderings attached to reports: fiber value disks of the
//! Chebyshev solution and the window-function profiles.

use num_complex::Complex64;

use zpd_core::algebra::FiniteBanachAlgebra;
use zpd_core::meb;
use zpd_core::seminorms::BilinearForm;
use zpd_core::torus;

/// Per-fiber value clouds and their minimal enclosing disks; `None` for
/// non-group algebras where the fiber picture does not apply.
pub fn fiber_disks_svg(phi: &BilinearForm, alg: &FiniteBanachAlgebra) -> Option<String> {
    let view = alg.as_group_table()?;
    let n = alg.dim;
    let mut fibers = Vec::new();
    let mut radius_max = 0.1f64;
    let mut extent = 0.1f64;
    for u in 0..n {
        let pts: Vec<Complex64> = (0..n)
            .map(|s| {
                let t = (0..n).find(|&t| view.table[s][t] == u).expect("group row");
                phi.values[(s, t)]
            })
            .collect();
        let disk = meb::min_enclosing_disk(&pts);
        for p in &pts {
            extent = extent.max((p - disk.center).norm() + disk.center.norm());
        }
        radius_max = radius_max.max(disk.radius);
        fibers.push((pts, disk));
    }
    let cell = 220.0;
    let width = cell * n as f64;
    let scale = 90.0 / extent.max(radius_max).max(1e-9);
    let mut body = String::new();
    for (u, (pts, disk)) in fibers.iter().enumerate() {
        let cx = cell * u as f64 + cell / 2.0;
        let cy = cell / 2.0;
        let px = |z: Complex64| (cx + scale * (z.re - disk.center.re), cy - scale * (z.im - disk.center.im));
        body.push_str(&format!(
            "<circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{:.2}\" fill=\"none\" stroke=\"#4477aa\" stroke-width=\"1.5\"/>\n",
            (disk.radius * scale).max(1.0)
        ));
        for &p in pts {
            let (x, y) = px(p);
            body.push_str(&format!(
                "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"#cc3311\"/>\n"
            ));
        }
        body.push_str(&format!(
            "<text x=\"{cx:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-size=\"12\">fiber {u}: r = {:.6}</text>\n",
            cell - 8.0,
            disk.radius
        ));
    }
    Some(format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{cell}\" viewBox=\"0 0 {width} {cell}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n"
    ))
}

/// Profiles of the two windows on the circle (truncated series, 720 samples).
pub fn windows_svg(degree: i64) -> String {
    let w = torus::omega(degree);
    let v = torus::upsilon(degree);
    let samples = 720usize;
    let width = 720.0;
    let height = 240.0;
    let mut paths = String::new();
    for (series, color) in [(&w, "#4477aa"), (&v, "#cc3311")] {
        let mut d = String::new();
        for i in 0..samples {
            let theta = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
            let z = Complex64::from_polar(1.0, theta);
            let val = series.evaluate(z).re;
            let x = width * i as f64 / samples as f64;
            let y = height - 20.0 - val.clamp(-0.2, 1.2) * 160.0;
            d.push_str(if i == 0 { "M" } else { "L" });
            d.push_str(&format!("{x:.2},{y:.2} "));
        }
        paths.push_str(&format!(
            "<path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n"
        ));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{paths}</svg>\n"
    )
}
