//! Absolutely convergent Fourier series on the circle and the 2-torus.
//!
//! A series holds finitely many coefficients within a declared degree plus a
//! rigorous bound on the Wiener-algebra norm of everything omitted. Arc
//! indicators have closed-form coefficients; windows built as scaled
//! convolutions of two arc indicators carry sharp quadratic-decay tail
//! bounds computed from Bernoulli-polynomial cosine sums, which is what
//! keeps the norm checks on the window functions honest.

mod verify;

pub use verify::{
    disjoint_support_check, ideal_distance_upper, kappa, kappa_parts, sin_pi_10,
    transfer_identity_residual, verify_partitions, DisjointReport, IdealDistanceReport,
    PartitionReport, TorusVerifyReport,
};

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

use crate::cplx;

#[derive(Debug, Error)]
pub enum TorusError {
    #[error("rotation parameter must be unimodular, |alpha| = {0}")]
    NotUnimodular(f64),
    #[error("dilation index must be nonzero")]
    ZeroDilation,
    #[error("invalid arc: {0}")]
    InvalidArc(String),
}

/// An arc `(theta_start, theta_end]` on the circle; endpoints are a
/// measure-zero choice that never affects a coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub theta_start: f64,
    pub theta_end: f64,
}

impl Arc {
    pub fn new(theta_start: f64, theta_end: f64) -> Result<Self, TorusError> {
        if !(theta_start < theta_end && theta_end <= theta_start + 2.0 * PI) {
            return Err(TorusError::InvalidArc(format!(
                "need start < end <= start + 2pi, got [{theta_start}, {theta_end}]"
            )));
        }
        Ok(Self { theta_start, theta_end })
    }

    pub fn length(&self) -> f64 {
        self.theta_end - self.theta_start
    }

    /// Normalized Haar measure, in (0, 1].
    pub fn haar_length(&self) -> f64 {
        self.length() / (2.0 * PI)
    }
}

/// The arcs of the window construction.
pub fn arc_e() -> Arc {
    Arc::new(-PI / 5.0, PI / 5.0).unwrap()
}
pub fn arc_a() -> Arc {
    Arc::new(0.0, PI / 15.0).unwrap()
}
pub fn arc_b() -> Arc {
    Arc::new(2.0 * PI / 15.0, 29.0 * PI / 15.0).unwrap()
}
pub fn arc_u() -> Arc {
    Arc::new(-PI / 30.0, PI / 30.0).unwrap()
}

/// The rotation unit `e^{i pi / 15}` stepping the window partition.
pub fn point_a() -> Complex64 {
    Complex64::from_polar(1.0, PI / 15.0)
}

/// Finitely supported Fourier coefficients with a tail bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSeries {
    pub coeffs: BTreeMap<i64, Complex64>,
    /// Rigorous bound on the Wiener norm of omitted frequencies;
    /// `f64::INFINITY` when no finite bound is known (bare indicators).
    pub tail_bound: f64,
    pub degree: i64,
}

impl TorusSeries {
    pub fn zero(degree: i64) -> Self {
        Self { coeffs: BTreeMap::new(), tail_bound: 0.0, degree }
    }

    /// The constant function 1.
    pub fn one(degree: i64) -> Self {
        Self::monomial(0, Complex64::ONE, degree)
    }

    /// The coordinate function `z`.
    pub fn zeta(degree: i64) -> Self {
        Self::monomial(1, Complex64::ONE, degree)
    }

    pub fn monomial(k: i64, c: Complex64, degree: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != Complex64::ZERO {
            coeffs.insert(k, c);
        }
        Self { coeffs, tail_bound: 0.0, degree }
    }

    pub fn coeff(&self, k: i64) -> Complex64 {
        self.coeffs.get(&k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn set_coeff(&mut self, k: i64, c: Complex64) {
        if c == Complex64::ZERO {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    /// Truncated Wiener norm (coefficients only).
    pub fn a_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    /// Wiener norm quoted as an upper bound: truncated part plus tail.
    pub fn a_norm_with_tail(&self) -> f64 {
        self.a_norm() + self.tail_bound
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.degree = self.degree.max(other.degree);
        for (&k, &c) in &other.coeffs {
            let v = out.coeff(k) + c;
            out.set_coeff(k, v);
        }
        out.tail_bound = self.tail_bound + other.tail_bound;
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, c * s)).collect(),
            tail_bound: self.tail_bound * s.norm(),
            degree: self.degree,
        }
    }

    /// Pointwise product (coefficient convolution). Finite supports convolve
    /// exactly; tails combine by bilinearity.
    pub fn product(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<i64, Complex64> = BTreeMap::new();
        for (&j, &cj) in &self.coeffs {
            for (&k, &ck) in &other.coeffs {
                let e = coeffs.entry(j + k).or_insert(Complex64::ZERO);
                *e += cj * ck;
            }
        }
        coeffs.retain(|_, c| c.norm() > 0.0);
        let tail = self.a_norm() * other.tail_bound
            + self.tail_bound * other.a_norm()
            + self.tail_bound * other.tail_bound;
        Self { coeffs, tail_bound: tail, degree: self.degree + other.degree }
    }

    /// Translation by a point mass: `(delta_alpha * f)(z) = f(alpha^{-1} z)`,
    /// multiplying coefficient `k` by `alpha^{-k}`. Unimodular `alpha` only;
    /// an exact isometry of the truncated norm.
    pub fn rotate(&self, alpha: Complex64) -> Result<Self, TorusError> {
        if (alpha.norm() - 1.0).abs() > 1e-12 {
            return Err(TorusError::NotUnimodular(alpha.norm()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&k, &c)| (k, c * unimodular_pow(alpha, -k)))
            .collect();
        Ok(Self { coeffs, tail_bound: self.tail_bound, degree: self.degree })
    }

    /// Frequency dilation `d_j f (z) = f(z^j)`: coefficient `k` moves to `j k`.
    pub fn dilate(&self, j: i64) -> Result<Self, TorusError> {
        if j == 0 {
            return Err(TorusError::ZeroDilation);
        }
        let coeffs = self.coeffs.iter().map(|(&k, &c)| (j * k, c)).collect();
        Ok(Self { coeffs, tail_bound: self.tail_bound, degree: self.degree * j.abs() })
    }

    /// Evaluate the truncated series at `z` on the circle.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        let mut last_k: Option<i64> = None;
        let mut power = Complex64::ONE;
        for (&k, &c) in &self.coeffs {
            power = match last_k {
                None => unimodular_pow(z, k),
                Some(prev) => power * unimodular_pow(z, k - prev),
            };
            last_k = Some(k);
            acc += c * power;
        }
        acc
    }

    /// Max frequency magnitude actually present.
    pub fn support_radius(&self) -> i64 {
        self.coeffs.keys().map(|k| k.abs()).max().unwrap_or(0)
    }
}

/// `base^k` by binary exponentiation; keeps unimodular powers accurate at
/// large `|k|` where naive angle arithmetic loses digits.
pub fn unimodular_pow(base: Complex64, k: i64) -> Complex64 {
    if k == 0 {
        return Complex64::ONE;
    }
    let mut b = if k < 0 { base.conj() / base.norm_sqr() } else { base };
    let mut e = k.unsigned_abs();
    let mut acc = Complex64::ONE;
    while e > 0 {
        if e & 1 == 1 {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    acc
}

/// Closed-form indicator coefficients of an arc up to degree `N`:
/// `c(0) = |arc|`, `c(k) = (e^{-ik a} - e^{-ik b}) / (2 pi i k)`.
///
/// A bare indicator is not in the Wiener algebra, so its tail bound is
/// infinite; finite tails arise for products of two indicators, built by
/// [`window_from_arcs`].
pub fn arc_indicator_coeffs(arc: &Arc, degree: i64) -> TorusSeries {
    let mut coeffs = BTreeMap::new();
    coeffs.insert(0, Complex64::new(arc.haar_length(), 0.0));
    for k in 1..=degree {
        for sk in [k, -k] {
            let kf = sk as f64;
            let num = cplx::unit(-kf * arc.theta_start) - cplx::unit(-kf * arc.theta_end);
            let den = Complex64::new(0.0, 2.0 * PI * kf);
            coeffs.insert(sk, num / den);
        }
    }
    TorusSeries { coeffs, tail_bound: f64::INFINITY, degree }
}

/// `scale * (chi_arc1 * chi_arc2)` with the sharp tail bound
/// `scale / pi^2 * sum_{|k| > N} |sin(k L1 / 2) sin(k L2 / 2)| / k^2`,
/// evaluated through the arithmetic-mean bound on the sine product (exact
/// when the two arcs have equal length).
pub fn window_from_arcs(arc1: &Arc, arc2: &Arc, scale: f64, degree: i64) -> TorusSeries {
    let c1 = arc_indicator_coeffs(arc1, degree);
    let c2 = arc_indicator_coeffs(arc2, degree);
    let mut coeffs = BTreeMap::new();
    for k in -degree..=degree {
        let v = c1.coeff(k) * c2.coeff(k) * scale;
        if v.norm() > 0.0 {
            coeffs.insert(k, v);
        }
    }
    let u1 = arc1.length() / 2.0;
    let u2 = arc2.length() / 2.0;
    let tail = scale.abs() / (PI * PI) * (tail_sum_sin_sq(u1, degree) + tail_sum_sin_sq(u2, degree));
    TorusSeries { coeffs, tail_bound: tail, degree }
}

/// `sum_{k > N} sin^2(k u) / k^2`, exactly, via
/// `sum_{k >= 1} cos(k x) / k^2 = pi^2/6 - pi x / 2 + x^2 / 4` on `[0, 2pi]`.
fn tail_sum_sin_sq(u: f64, degree: i64) -> f64 {
    let n = degree.max(0) as usize;
    // sum_{k>N} 1/k^2 and sum_{k<=N} cos(kx)/k^2, summed smallest-first
    let mut inv_sq_partial = 0.0;
    let x = (2.0 * u).rem_euclid(2.0 * PI);
    let mut cos_partial = 0.0;
    for k in (1..=n).rev() {
        let kf = k as f64;
        inv_sq_partial += 1.0 / (kf * kf);
        cos_partial += (kf * x).cos() / (kf * kf);
    }
    let inv_sq_tail = PI * PI / 6.0 - inv_sq_partial;
    let cos_full = PI * PI / 6.0 - PI * x / 2.0 + x * x / 4.0;
    let cos_tail = cos_full - cos_partial;
    (0.5 * (inv_sq_tail - cos_tail)).max(0.0)
}

/// `omega = 30 chi_A * chi_U`: the unit-norm bump supported on `A U`.
pub fn omega(degree: i64) -> TorusSeries {
    window_from_arcs(&arc_a(), &arc_u(), 30.0, degree)
}

/// `upsilon = 30 chi_B * chi_U`, supported on `B U`, norm at most sqrt(27).
pub fn upsilon(degree: i64) -> TorusSeries {
    window_from_arcs(&arc_b(), &arc_u(), 30.0, degree)
}

/// Finitely supported coefficients on the 2-torus.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSeries2D {
    pub coeffs: BTreeMap<(i64, i64), Complex64>,
    pub tail_bound: f64,
    pub degree: i64,
}

impl TorusSeries2D {
    pub fn zero(degree: i64) -> Self {
        Self { coeffs: BTreeMap::new(), tail_bound: 0.0, degree }
    }

    pub fn coeff(&self, j: i64, k: i64) -> Complex64 {
        self.coeffs.get(&(j, k)).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn set_coeff(&mut self, j: i64, k: i64, c: Complex64) {
        if c == Complex64::ZERO {
            self.coeffs.remove(&(j, k));
        } else {
            self.coeffs.insert((j, k), c);
        }
    }

    pub fn a_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).sum()
    }

    pub fn a_norm_with_tail(&self) -> f64 {
        self.a_norm() + self.tail_bound
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.degree = self.degree.max(other.degree);
        for (&(j, k), &c) in &other.coeffs {
            let v = out.coeff(j, k) + c;
            out.set_coeff(j, k, v);
        }
        out.tail_bound = self.tail_bound + other.tail_bound;
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&jk, &c)| (jk, c * s)).collect(),
            tail_bound: self.tail_bound * s.norm(),
            degree: self.degree,
        }
    }

    /// Diagonal restriction `Delta F (z) = F(z, z)`: coefficients regroup
    /// along antidiagonals, a norm-one map, so the tail bound carries over.
    pub fn delta_map(&self) -> TorusSeries {
        let mut out = TorusSeries::zero(2 * self.degree);
        for (&(j, k), &c) in &self.coeffs {
            let v = out.coeff(j + k) + c;
            out.set_coeff(j + k, v);
        }
        out.tail_bound = self.tail_bound;
        out
    }

    /// `D_j F (z, w) = F(z^j, w^j)`.
    pub fn dilate(&self, j: i64) -> Result<Self, TorusError> {
        if j == 0 {
            return Err(TorusError::ZeroDilation);
        }
        let coeffs = self.coeffs.iter().map(|(&(p, q), &c)| ((j * p, j * q), c)).collect();
        Ok(Self { coeffs, tail_bound: self.tail_bound, degree: self.degree * j.abs() })
    }

    /// `L_k F (z, w) = F(z, w) w^k`: shift of the second frequency.
    pub fn second_shift(&self, k: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(&(p, q), &c)| ((p, q + k), c)).collect();
        Self { coeffs, tail_bound: self.tail_bound, degree: self.degree + k.abs() }
    }
}

/// `(f (x) g)(z, w) = f(z) g(w)` with `||f (x) g|| = ||f|| ||g||` exactly on
/// the truncated parts.
pub fn tensor(f: &TorusSeries, g: &TorusSeries) -> TorusSeries2D {
    let mut coeffs = BTreeMap::new();
    for (&j, &cj) in &f.coeffs {
        for (&k, &ck) in &g.coeffs {
            let v = cj * ck;
            if v != Complex64::ZERO {
                coeffs.insert((j, k), v);
            }
        }
    }
    let tail = f.a_norm() * g.tail_bound + f.tail_bound * g.a_norm() + f.tail_bound * g.tail_bound;
    TorusSeries2D { coeffs, tail_bound: tail, degree: f.degree.max(g.degree) }
}

/// `zeta (x) 1 - 1 (x) zeta`, the commutator target of the transfer identity.
pub fn zeta_tensor_gap(degree: i64) -> TorusSeries2D {
    let mut out = TorusSeries2D::zero(degree);
    out.set_coeff(1, 0, Complex64::ONE);
    out.set_coeff(0, 1, -Complex64::ONE);
    out
}

/// Transfer of a 1-d series to the 2-torus: `F(z, w) = f(z w^{-1}) w`, i.e.
/// `F^(k, 1-k) = f^(k)`. Norms are preserved coefficientwise.
pub fn transfer_from_circle(f: &TorusSeries) -> TorusSeries2D {
    let mut coeffs = BTreeMap::new();
    for (&k, &c) in &f.coeffs {
        coeffs.insert((k, 1 - k), c);
    }
    TorusSeries2D { coeffs, tail_bound: f.tail_bound, degree: f.degree + 1 }
}
