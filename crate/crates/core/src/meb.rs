//! Minimal enclosing disk of a finite set of complex values.
//!
//! Two routes are provided on purpose. [`min_enclosing_disk`] is the
//! incremental algorithm (Welzl-style recursion with at most three boundary
//! points) and is the production path for per-fiber Chebyshev centers.
//! [`chebyshev_center_reference`] solves the same min-max problem by
//! enumerating candidate support sets of the dual program; it is kept as an
//! independent cross-check and never shares state with the incremental path.

use num_complex::Complex64;

/// Containment slack: a point counts as enclosed when
/// `|p - c| <= r + CONTAIN_EPS * max(1, r)`.
const CONTAIN_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
    /// Indices of the (at most three) input points determining the disk.
    pub support: Vec<usize>,
}

impl Disk {
    fn empty() -> Self {
        Disk { center: Complex64::ZERO, radius: -1.0, support: Vec::new() }
    }

    pub fn contains(&self, p: Complex64) -> bool {
        self.radius >= 0.0 && (p - self.center).norm() <= self.radius + CONTAIN_EPS * self.radius.max(1.0)
    }
}

fn disk_from_two(p: Complex64, q: Complex64) -> (Complex64, f64) {
    let c = (p + q) / 2.0;
    let r = (p - c).norm().max((q - c).norm());
    (c, r)
}

/// Circumcenter of three points, `None` when (numerically) collinear.
fn circumcenter(p: Complex64, q: Complex64, r: Complex64) -> Option<Complex64> {
    let d = 2.0
        * (p.re * (q.im - r.im) + q.re * (r.im - p.im) + r.re * (p.im - q.im));
    let scale = (p.norm() + q.norm() + r.norm()).max(1.0);
    if d.abs() < 1e-14 * scale * scale {
        return None;
    }
    let ux = (p.norm_sqr() * (q.im - r.im)
        + q.norm_sqr() * (r.im - p.im)
        + r.norm_sqr() * (p.im - q.im))
        / d;
    let uy = (p.norm_sqr() * (r.re - q.re)
        + q.norm_sqr() * (p.re - r.re)
        + r.norm_sqr() * (q.re - p.re))
        / d;
    Some(Complex64::new(ux, uy))
}

fn disk_from_boundary(points: &[Complex64], boundary: &[usize]) -> Disk {
    match boundary.len() {
        0 => Disk::empty(),
        1 => Disk { center: points[boundary[0]], radius: 0.0, support: boundary.to_vec() },
        2 => {
            let (c, r) = disk_from_two(points[boundary[0]], points[boundary[1]]);
            Disk { center: c, radius: r, support: boundary.to_vec() }
        }
        _ => {
            let (p, q, r) = (points[boundary[0]], points[boundary[1]], points[boundary[2]]);
            if let Some(c) = circumcenter(p, q, r) {
                let rad = (p - c).norm().max((q - c).norm()).max((r - c).norm());
                Disk { center: c, radius: rad, support: boundary.to_vec() }
            } else {
                // collinear boundary: the widest two-point disk covers the third
                let mut best = Disk::empty();
                for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                    let (c, rad) = disk_from_two(points[boundary[a]], points[boundary[b]]);
                    let d = Disk { center: c, radius: rad, support: vec![boundary[a], boundary[b]] };
                    if d.contains(points[boundary[3 - a - b]]) && (best.radius < 0.0 || d.radius < best.radius) {
                        best = d;
                    }
                }
                best
            }
        }
    }
}

fn welzl(points: &[Complex64], n: usize, boundary: &mut Vec<usize>) -> Disk {
    if n == 0 || boundary.len() == 3 {
        return disk_from_boundary(points, boundary);
    }
    let d = welzl(points, n - 1, boundary);
    let p = points[n - 1];
    if d.contains(p) {
        return d;
    }
    boundary.push(n - 1);
    let d = welzl(points, n - 1, boundary);
    boundary.pop();
    d
}

/// Smallest disk enclosing all points (deterministic insertion order).
/// Returns a zero-radius disk at the single point for singletons; panics on
/// an empty input, which no caller produces.
pub fn min_enclosing_disk(points: &[Complex64]) -> Disk {
    assert!(!points.is_empty(), "minimal enclosing disk of an empty set");
    let mut boundary = Vec::new();
    let mut d = welzl(points, points.len(), &mut boundary);
    // tighten the support set to points actually on the boundary
    let tol = CONTAIN_EPS * d.radius.max(1.0);
    d.support = (0..points.len())
        .filter(|&i| ((points[i] - d.center).norm() - d.radius).abs() <= 10.0 * tol)
        .take(3)
        .collect();
    d
}

/// Re-derives the disk from its support set and checks every point is
/// enclosed; the certificate behind the exactness claim.
pub fn verify_disk(points: &[Complex64], disk: &Disk) -> bool {
    if !points.iter().all(|&p| disk.contains(p)) {
        return false;
    }
    let rederived = disk_from_boundary(points, &disk.support);
    if rederived.radius < 0.0 {
        return false;
    }
    let scale = disk.radius.max(1.0);
    (rederived.center - disk.center).norm() <= 1e-9 * scale
        && (rederived.radius - disk.radius).abs() <= 1e-9 * scale
}

/// Independent reference: solves `min_c max_i |p_i - c|` by enumerating the
/// support sets allowed by the optimality conditions (a single point, a
/// diametral pair, or a triple whose circumcenter lies in the triangle) and
/// taking the smallest feasible candidate.
pub fn chebyshev_center_reference(points: &[Complex64]) -> (Complex64, f64) {
    assert!(!points.is_empty());
    let n = points.len();
    let feasible = |c: Complex64, r: f64| {
        points.iter().all(|&p| (p - c).norm() <= r + CONTAIN_EPS * r.max(1.0))
    };
    let mut best: Option<(Complex64, f64)> = None;
    let mut consider = |c: Complex64, r: f64| {
        if feasible(c, r) && best.map_or(true, |(_, br)| r < br) {
            best = Some((c, r));
        }
    };
    if n == 1 {
        return (points[0], 0.0);
    }
    for i in 0..n {
        consider(points[i], 0.0);
        for j in (i + 1)..n {
            let (c, r) = disk_from_two(points[i], points[j]);
            consider(c, r);
            for k in (j + 1)..n {
                if let Some(c) = circumcenter(points[i], points[j], points[k]) {
                    // dual feasibility: the center must be a convex
                    // combination of the three support points
                    if barycentric_nonneg(points[i], points[j], points[k], c) {
                        let r = (points[i] - c)
                            .norm()
                            .max((points[j] - c).norm())
                            .max((points[k] - c).norm());
                        consider(c, r);
                    }
                }
            }
        }
    }
    best.expect("at least the full-pair candidates are feasible")
}

fn barycentric_nonneg(a: Complex64, b: Complex64, c: Complex64, p: Complex64) -> bool {
    let det = (b.re - a.re) * (c.im - a.im) - (c.re - a.re) * (b.im - a.im);
    if det.abs() < 1e-18 {
        return false;
    }
    let l1 = ((b.re - p.re) * (c.im - p.im) - (c.re - p.re) * (b.im - p.im)) / det;
    let l2 = ((c.re - p.re) * (a.im - p.im) - (a.re - p.re) * (c.im - p.im)) / det;
    let l3 = 1.0 - l1 - l2;
    let eps = -1e-9;
    l1 >= eps && l2 >= eps && l3 >= eps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::c;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_point_fiber() {
        let pts = [c(0.0, 0.0), c(1.0, 0.0)];
        let d = min_enclosing_disk(&pts);
        assert!((d.center - c(0.5, 0.0)).norm() < 1e-15);
        assert!((d.radius - 0.5).abs() < 1e-15);
        assert!(verify_disk(&pts, &d));
    }

    #[test]
    fn equilateral_triangle_uses_circumcenter() {
        let pts: Vec<_> = (0..3)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 3.0))
            .collect();
        let d = min_enclosing_disk(&pts);
        assert!(d.center.norm() < 1e-12);
        assert!((d.radius - 1.0).abs() < 1e-12);
        assert_eq!(d.support.len(), 3);
    }

    #[test]
    fn obtuse_triangle_uses_diameter() {
        let pts = [c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.1)];
        let d = min_enclosing_disk(&pts);
        assert!((d.radius - 1.0).abs() < 1e-12);
        assert!(d.center.norm() < 1e-12);
    }

    #[test]
    fn duplicate_and_single_points() {
        let d = min_enclosing_disk(&[c(2.0, -1.0)]);
        assert_eq!(d.radius, 0.0);
        let d = min_enclosing_disk(&[c(1.0, 1.0), c(1.0, 1.0), c(1.0, 1.0)]);
        assert!(d.radius.abs() < 1e-15);
    }

    #[test]
    fn agrees_with_reference_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..200 {
            let n = rng.random_range(1..=8);
            let pts: Vec<Complex64> = (0..n)
                .map(|_| c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
                .collect();
            let d = min_enclosing_disk(&pts);
            let (_, r_ref) = chebyshev_center_reference(&pts);
            assert!(
                (d.radius - r_ref).abs() <= 1e-9 * d.radius.max(1.0),
                "trial {trial}: welzl {} vs reference {r_ref}",
                d.radius
            );
            assert!(verify_disk(&pts, &d), "trial {trial}: support certificate failed");
        }
    }

    #[test]
    fn collinear_points() {
        let pts = [c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        let d = min_enclosing_disk(&pts);
        assert!((d.radius - 1.5).abs() < 1e-12);
        let (_, r_ref) = chebyshev_center_reference(&pts);
        assert!((r_ref - 1.5).abs() < 1e-12);
    }
}
