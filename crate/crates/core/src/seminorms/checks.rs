//! Verification suites tying the seminorms together: the inequality chain
//! between the multiplicativity defect, the distance to product-factoring
//! functionals, and the zero-product seminorm; the translation-commutator
//! bound on group algebras; the ratio search for the optimal defect/zp
//! constant; and the linear zero-product-determined check.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, AlgebraError, FiniteBanachAlgebra, NormKind};
use crate::cplx;
use crate::linalg;
use crate::torus;

use super::characters::character_table;
use super::dist::{defect_norm, distance_to_pi};
use super::search::{self, ShrinkOptions};
use super::zp::{zp_seminorm, zero_product_residual, ZERO_PRODUCT_TOL};
use super::{
    b_seminorm, bilinear_norm, matrix_norm_upper_bound, BilinearForm, LinearFunctional,
    SearchOptions, SeminormCertificate, Witness,
};

/// `xi(a) = phi(1, a)`; the finite unital specialization of slicing along a
/// bounded approximate identity. Guarantees `||phi - xi o pi|| <= M |phi|_b`.
pub fn xi_from_identity(
    phi: &BilinearForm,
    alg: &FiniteBanachAlgebra,
) -> Result<LinearFunctional, AlgebraError> {
    phi.check_dim(alg)?;
    let one = alg.identity_element()?;
    let coeffs = (0..alg.dim)
        .map(|u| {
            (0..alg.dim)
                .map(|j| one.coeffs[j] * phi.values[(j, u)])
                .sum()
        })
        .collect();
    Ok(LinearFunctional::new(coeffs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IneqMode {
    /// Both sides computed by exact paths; asserted to the stated tolerance.
    Exact,
    /// One-sided bounds combined so that a failure genuinely falsifies the
    /// underlying inequality.
    OneSidedValid,
    /// Reported for information; not falsifiable from the available bounds.
    Informative,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IneqCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub tolerance: f64,
    pub mode: IneqMode,
    pub pass: bool,
    pub witness_note: String,
}

impl IneqCheck {
    fn le(name: &str, lhs: f64, rhs: f64, tol: f64, mode: IneqMode, note: String) -> Self {
        IneqCheck {
            name: name.into(),
            lhs,
            rhs,
            tolerance: tol,
            mode,
            pass: lhs <= rhs + tol,
            witness_note: note,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Prop913Report {
    pub norm: SeminormCertificate,
    pub b: SeminormCertificate,
    pub zp: SeminormCertificate,
    pub dist: SeminormCertificate,
    pub minimizer: LinearFunctional,
    pub identity_slice_defect: Option<f64>,
    pub checks: Vec<IneqCheck>,
    /// Set on matrix-norm runs: `zp_lower > dist_estimate / 8 + 1e-6`, the
    /// coupling against the reference constant 8 for operator algebras.
    pub cstar_flag: Option<bool>,
    pub all_pass: bool,
}

/// Runs the full seminorm suite on one functional and evaluates the
/// inequality chain `|phi|_b / 2 <= dist <= M |phi|_b` and `|phi|_zp <= dist`.
///
/// On exact paths every inequality is asserted to 1e-9. On heuristic paths
/// only the combinations that remain falsifiable for one-sided bounds are
/// asserted; the rest are reported as informative.
pub fn verify_913(
    phi: &BilinearForm,
    alg: &FiniteBanachAlgebra,
    opts: &SearchOptions,
) -> Result<Prop913Report, AlgebraError> {
    phi.check_dim(alg)?;
    let norm = bilinear_norm(phi, alg, opts)?;
    let b = b_seminorm(phi, alg, opts)?;
    let zp = zp_seminorm(phi, alg, opts)?;
    let (mut dist, xi) = distance_to_pi(phi, alg, opts)?;
    let m_bound = alg.approx_id_bound;

    // On heuristic paths, re-evaluate the defect norm at the minimizer with
    // the zp witness as an ascent seed, so the estimate dominates the
    // certified witness value structurally.
    if !dist.is_exact {
        let seed_pair = match &zp.witness {
            Witness::Pair { a, b } => Some((a.as_slice(), b.as_slice())),
            _ => None,
        };
        let reeval = defect_norm(phi, alg, &xi, opts, seed_pair);
        if reeval > dist.value {
            dist.value = reeval;
            dist.method.push_str("+witness-seeded-reeval");
        }
    }

    let exact_chain = b.is_exact && dist.is_exact && zp.is_exact;
    let mut checks = Vec::new();
    let tol = 1e-9;
    if exact_chain {
        checks.push(IneqCheck::le(
            "half-b-le-dist",
            0.5 * b.value,
            dist.value,
            tol,
            IneqMode::Exact,
            "exact extreme-triple defect vs fiber Chebyshev distance".into(),
        ));
        checks.push(IneqCheck::le(
            "dist-le-M-b",
            dist.value,
            m_bound * b.value,
            tol,
            IneqMode::Exact,
            "fiber Chebyshev distance vs identity-slice bound".into(),
        ));
        checks.push(IneqCheck::le(
            "zp-le-dist",
            zp.value,
            dist.value,
            tol,
            IneqMode::Exact,
            "zero-product witness vs fiber Chebyshev distance".into(),
        ));
    } else {
        // a certified lower bound must not exceed a certified upper bound
        let defect = phi.sub(&xi.compose_with_product(alg));
        let dist_upper_cert = match alg.norm_kind {
            NormKind::MatrixOperator(_) => matrix_norm_upper_bound(&defect),
            NormKind::L1Weighted(_) => bilinear_norm(&defect, alg, opts)?.value,
        };
        checks.push(IneqCheck::le(
            "half-b-lower-le-dist-upper",
            0.5 * b.value,
            dist_upper_cert,
            tol,
            IneqMode::OneSidedValid,
            "ascent lower bound of the defect vs certified upper bound at the minimizer".into(),
        ));
        checks.push(IneqCheck::le(
            "zp-lower-le-dist-estimate",
            zp.value,
            dist.value,
            1e-6,
            IneqMode::OneSidedValid,
            "certified zero-product witness vs witness-seeded distance estimate".into(),
        ));
        checks.push(IneqCheck::le(
            "dist-le-M-b-informative",
            dist.value,
            m_bound * b.value,
            1e-6,
            IneqMode::Informative,
            "both sides heuristic; reported only".into(),
        ));
    }

    // identity-slice defect check when both sides are exactly computable
    let identity_slice_defect = if alg.identity.is_some() {
        let xi_id = xi_from_identity(phi, alg)?;
        let defect = phi.sub(&xi_id.compose_with_product(alg));
        let defect_value = bilinear_norm(&defect, alg, opts)?.value;
        if b.is_exact && matches!(alg.norm_kind, NormKind::L1Weighted(_)) {
            checks.push(IneqCheck::le(
                "identity-slice-le-M-b",
                defect_value,
                m_bound * b.value,
                tol,
                IneqMode::Exact,
                "defect of the identity slice vs M |phi|_b".into(),
            ));
        }
        Some(defect_value)
    } else {
        None
    };

    let cstar_flag = match alg.norm_kind {
        NormKind::MatrixOperator(_) => Some(zp.value > dist.value / 8.0 + 1e-6),
        _ => None,
    };

    let all_pass = checks.iter().filter(|c| c.mode != IneqMode::Informative).all(|c| c.pass);
    Ok(Prop913Report {
        norm,
        b,
        zp,
        dist,
        minimizer: xi,
        identity_slice_defect,
        checks,
        cstar_flag,
        all_pass,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranslationReport {
    pub defect: f64,
    pub kappa: f64,
    /// `kappa * |phi|_zp` when an exact zero-product value is available.
    pub kappa_zp_bound: Option<f64>,
    pub pass: Option<bool>,
}

/// `|phi(f * delta_t, h) - phi(f, delta_t * h)|` for unit `f`, `h` on a group
/// algebra, compared against `kappa |phi|_zp` when the oracle applies.
pub fn translation_commutator_check(
    phi: &BilinearForm,
    alg: &FiniteBanachAlgebra,
    t: usize,
    f: &AlgebraElement,
    h: &AlgebraElement,
    opts: &SearchOptions,
) -> Result<TranslationReport, AlgebraError> {
    phi.check_dim(alg)?;
    alg.check_dim(f)?;
    alg.check_dim(h)?;
    if alg.as_group_table().is_none() {
        return Err(AlgebraError::InvalidDimension(
            "translation commutator requires a group algebra".into(),
        ));
    }
    if t >= alg.dim {
        return Err(AlgebraError::UnknownLabel(format!("group element index {t}")));
    }
    if (alg.norm(f) - 1.0).abs() > 1e-6 || (alg.norm(h) - 1.0).abs() > 1e-6 {
        return Err(AlgebraError::InvalidDimension("f and h must be unit vectors".into()));
    }
    let delta_t = AlgebraElement::basis(alg.dim, t);
    let f_dt = alg.multiply(f, &delta_t)?;
    let dt_h = alg.multiply(&delta_t, h)?;
    let defect = (phi.evaluate(&f_dt, h) - phi.evaluate(f, &dt_h)).norm();
    let kappa = torus::kappa();
    let zp = zp_seminorm(phi, alg, opts)?;
    let (kappa_zp_bound, pass) = if zp.is_exact {
        let bound = kappa * zp.value;
        (Some(bound), Some(defect <= bound + 1e-9))
    } else {
        (None, None)
    };
    Ok(TranslationReport { defect, kappa, kappa_zp_bound, pass })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BetaAlphaReport {
    /// Witness normalized so that the exact zero-product seminorm is 1.
    pub beta_witness_rows: Vec<Vec<Complex64>>,
    pub b_certificate: SeminormCertificate,
    pub zp_certificate: SeminormCertificate,
    pub dist_certificate: SeminormCertificate,
    /// `|phi|_b / |phi|_zp` of the best witness found.
    pub ratio: f64,
    /// `dist / |phi|_zp` of the same witness.
    pub alpha_ratio: f64,
    pub certified: bool,
    pub seed: u64,
    /// `ratio <= kappa` as required by the group-algebra bound.
    pub within_kappa: bool,
}

/// Searches for functionals with a large defect-to-zero-product ratio,
/// estimating the optimal constant from below. The returned ratios are
/// recomputed from full-budget certificates of the final witness.
pub fn beta_search(
    alg: &FiniteBanachAlgebra,
    opts: &SearchOptions,
) -> Result<BetaAlphaReport, AlgebraError> {
    let view = alg
        .as_group_table()
        .ok_or_else(|| AlgebraError::InvalidDimension("beta search requires a group algebra".into()))?;
    if alg.dim > super::zp::ORACLE_SEARCH_MAX {
        return Err(AlgebraError::InvalidDimension(
            "beta search supports group order at most 6".into(),
        ));
    }
    let n = alg.dim;
    let mut rng = opts.rng();
    // cheap inner budget during the search; the final witness is re-certified
    let inner = SearchOptions { restarts: 16, seed: opts.seed.wrapping_add(1) };
    let ratio_of = |phi: &BilinearForm| -> f64 {
        let zp = zp_seminorm(phi, alg, &inner).expect("dims").value;
        if zp < 1e-9 {
            return -1.0;
        }
        let b = b_seminorm(phi, alg, &inner).expect("dims").value;
        b / zp
    };
    let objective = |x: &[f64]| -> f64 {
        let phi = unpack_form(x, n);
        ratio_of(&phi)
    };

    let mut best = (f64::NEG_INFINITY, Vec::new());
    let restarts = opts.restarts.max(8);
    let sopts = ShrinkOptions { init_step: 0.6, min_step: 1e-8, probes: 10 };
    for r in 0..restarts {
        let x0: Vec<f64> = if r == 0 {
            // elementary seed: single off-diagonal entry
            pack_form(&BilinearForm::elementary(n, 0, (1).min(n - 1)))
        } else {
            (0..2 * n * n).map(|_| cplx::gaussian(&mut rng).re).collect()
        };
        let (v, x) = search::maximize(objective, &x0, &sopts, &mut rng);
        if v > best.0 {
            best = (v, x);
        }
    }
    // fine polish
    let fine = ShrinkOptions { init_step: 1e-5, min_step: 1e-12, probes: 12 };
    let (v, x) = search::maximize(objective, &best.1, &fine, &mut rng);
    if v > best.0 {
        best = (v, x);
    }

    let witness = unpack_form(&best.1, n);
    // full-budget certification of the witness
    let full = SearchOptions { restarts: opts.restarts.max(200), seed: opts.seed.wrapping_add(2) };
    let zp_cert = zp_seminorm(&witness, alg, &full)?;
    if zp_cert.value < 1e-12 {
        return Err(AlgebraError::InvalidDimension(
            "beta search failed to find a witness with nonzero zp seminorm".into(),
        ));
    }
    // normalize the witness so zp = 1
    let witness = witness.scale(Complex64::new(1.0 / zp_cert.value, 0.0));
    let zp_cert = zp_seminorm(&witness, alg, &full)?;
    let b_cert = b_seminorm(&witness, alg, &full)?;
    let (dist_cert, _) = distance_to_pi(&witness, alg, &full)?;
    let ratio = b_cert.value / zp_cert.value;
    let alpha_ratio = dist_cert.value / zp_cert.value;
    let certified = b_cert.is_exact && zp_cert.is_exact;
    let kappa = torus::kappa();
    let _ = view;
    Ok(BetaAlphaReport {
        beta_witness_rows: form_rows(&witness),
        ratio,
        alpha_ratio,
        certified,
        seed: opts.seed,
        within_kappa: ratio <= kappa + 1e-6,
        b_certificate: b_cert,
        zp_certificate: zp_cert,
        dist_certificate: dist_cert,
    })
}

pub fn form_rows(phi: &BilinearForm) -> Vec<Vec<Complex64>> {
    (0..phi.dim()).map(|j| (0..phi.dim()).map(|k| phi.values[(j, k)]).collect()).collect()
}

fn pack_form(phi: &BilinearForm) -> Vec<f64> {
    let n = phi.dim();
    let mut x = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for k in 0..n {
            x.push(phi.values[(j, k)].re);
            x.push(phi.values[(j, k)].im);
        }
    }
    x
}

fn unpack_form(x: &[f64], n: usize) -> BilinearForm {
    let values = nalgebra::DMatrix::from_fn(n, n, |j, k| {
        let i = 2 * (j * n + k);
        Complex64::new(x[i], x[i + 1])
    });
    BilinearForm::new(values)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZpdLinearReport {
    /// Dimension of the span of sampled zero-product tensors `a (x) b`.
    pub span_dim: usize,
    /// Its codimension in the bilinear-form space.
    pub codim: usize,
    pub annihilator_dim: usize,
    pub pi_space_dim: usize,
    pub is_zpd: bool,
    /// No zero-product pairs exist (one-dimensional algebras).
    pub degenerate: bool,
    pub pairs_used: usize,
}

/// Linear characterization of zero-product determinedness at finite
/// dimension: the annihilator of the span of zero-product tensors must be
/// exactly the space of product-factoring functionals.
pub fn zpd_linear_check(
    alg: &FiniteBanachAlgebra,
    opts: &SearchOptions,
) -> Result<ZpdLinearReport, AlgebraError> {
    let n = alg.dim;
    let pairs = zero_product_pair_sample(alg, opts);
    let dim2 = n * n;
    if pairs.is_empty() {
        return Ok(ZpdLinearReport {
            span_dim: 0,
            codim: dim2,
            annihilator_dim: dim2,
            pi_space_dim: pi_tensor_rank(alg),
            is_zpd: false,
            degenerate: true,
            pairs_used: 0,
        });
    }
    let rows: Vec<Vec<Complex64>> = pairs
        .iter()
        .map(|(a, b)| {
            let mut row = Vec::with_capacity(dim2);
            for s in 0..n {
                for t in 0..n {
                    row.push(a.coeffs[s] * b.coeffs[t]);
                }
            }
            row
        })
        .collect();
    let row_matrix = linalg::from_rows(&rows);
    let span_dim = linalg::rank(&row_matrix);
    let annihilator = linalg::kernel_basis(&row_matrix);
    let annihilator_dim = annihilator.len();

    // the pi space: spanned over u by the tensors (s,t) -> c_{s,t,u}
    let pi_rows: Vec<Vec<Complex64>> = (0..n)
        .map(|u| {
            let mut row = Vec::with_capacity(dim2);
            for s in 0..n {
                for t in 0..n {
                    row.push(alg.structure[s][t][u]);
                }
            }
            row
        })
        .collect();
    let pi_matrix = linalg::from_rows(&pi_rows);
    let pi_space_dim = linalg::rank(&pi_matrix);

    // equality of the two subspaces via the rank of the stacked family
    let mut stacked = pi_rows;
    stacked.extend(annihilator.iter().cloned());
    let joint = linalg::rank(&linalg::from_rows(&stacked));
    let is_zpd = annihilator_dim == pi_space_dim && joint == pi_space_dim;

    Ok(ZpdLinearReport {
        span_dim,
        codim: dim2 - span_dim,
        annihilator_dim,
        pi_space_dim,
        is_zpd,
        degenerate: false,
        pairs_used: pairs.len(),
    })
}

fn pi_tensor_rank(alg: &FiniteBanachAlgebra) -> usize {
    let n = alg.dim;
    let rows: Vec<Vec<Complex64>> = (0..n)
        .map(|u| {
            let mut row = Vec::with_capacity(n * n);
            for s in 0..n {
                for t in 0..n {
                    row.push(alg.structure[s][t][u]);
                }
            }
            row
        })
        .collect();
    linalg::rank(&linalg::from_rows(&rows))
}

/// Structured zero-product pairs per algebra kind; every returned pair is
/// re-checked against the product tolerance.
fn zero_product_pair_sample(
    alg: &FiniteBanachAlgebra,
    opts: &SearchOptions,
) -> Vec<(AlgebraElement, AlgebraElement)> {
    let n = alg.dim;
    let mut rng = opts.rng();
    let mut pairs: Vec<(AlgebraElement, AlgebraElement)> = Vec::new();
    if n == 1 {
        return pairs;
    }
    match &alg.norm_kind {
        NormKind::MatrixOperator(side) => {
            let side = *side;
            let budget = (4 * n * n).max(opts.restarts);
            for _ in 0..budget {
                let x = cplx::gaussian_vec(&mut rng, side);
                let psi = cplx::gaussian_vec(&mut rng, side);
                let y = cplx::gaussian_vec(&mut rng, side);
                // functional with f(y) = 0 in the bilinear pairing
                let r = cplx::gaussian_vec(&mut rng, side);
                let ybar: Vec<Complex64> = y.iter().map(|z| z.conj()).collect();
                let proj = cplx::dot(&r, &y) / cplx::dot(&ybar, &y);
                let f: Vec<Complex64> =
                    r.iter().zip(&ybar).map(|(ri, yb)| ri - proj * yb).collect();
                let mut a = vec![Complex64::ZERO; n];
                let mut b = vec![Complex64::ZERO; n];
                for j in 0..side {
                    for k in 0..side {
                        a[j * side + k] = x[j] * f[k];
                        b[j * side + k] = y[j] * psi[k];
                    }
                }
                pairs.push((AlgebraElement::new(a), AlgebraElement::new(b)));
            }
        }
        NormKind::L1Weighted(_) => {
            if let Some(view) = alg.as_group_table() {
                if let Some(table) = view.abelian.then(|| character_table(&view)).flatten() {
                    for i in 0..n {
                        for j in 0..n {
                            if i != j {
                                let a = AlgebraElement::new(table.frequency_basis_vector(i));
                                let b = AlgebraElement::new(table.frequency_basis_vector(j));
                                pairs.push((a, b));
                            }
                        }
                    }
                } else {
                    // coset pairs: a = r * (delta_e - delta_g), b invariant
                    // under left translation by g
                    for g in 0..n {
                        if g == view.identity {
                            continue;
                        }
                        let mut diff = AlgebraElement::zero(n);
                        diff.coeffs[view.identity] = Complex64::ONE;
                        diff.coeffs[g] -= Complex64::ONE;
                        let orbits = translation_orbits(&view.table, g);
                        for _ in 0..3 {
                            let r = alg.random_element(&mut rng);
                            let a = alg.multiply(&r, &diff).expect("dims");
                            for orbit in &orbits {
                                let mut b = AlgebraElement::zero(n);
                                for &x in orbit {
                                    b.coeffs[x] = Complex64::ONE;
                                }
                                pairs.push((a.clone(), b.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    pairs.retain(|(a, b)| zero_product_residual(alg, &a.coeffs, &b.coeffs) <= ZERO_PRODUCT_TOL);
    pairs
}

/// Orbits of `x -> g x` on the group index set.
fn translation_orbits(table: &[Vec<usize>], g: usize) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut x = table[g][start];
        while x != start {
            seen[x] = true;
            orbit.push(x);
            x = table[g][x];
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_group_algebra, group_algebra, matrix_algebra, s3_table};
    use crate::cplx::cr;

    fn opts() -> SearchOptions {
        SearchOptions { restarts: 48, seed: 11 }
    }

    #[test]
    fn xi_from_identity_recovers_composed() {
        let alg = cyclic_group_algebra(3).unwrap();
        let xi0 = LinearFunctional::new(vec![cr(2.0), cr(-1.0), cr(0.5)]);
        let phi = xi0.compose_with_product(&alg);
        let xi = xi_from_identity(&phi, &alg).unwrap();
        for (a, b) in xi.coeffs.iter().zip(&xi0.coeffs) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn xi_from_identity_on_elementary_z2() {
        let alg = cyclic_group_algebra(2).unwrap();
        let phi = BilinearForm::elementary(2, 0, 1);
        let xi = xi_from_identity(&phi, &alg).unwrap();
        assert!((xi.coeffs[0]).norm() < 1e-15);
        assert!((xi.coeffs[1] - cr(1.0)).norm() < 1e-15);
        // defect norm 1 <= M |phi|_b = 1
        let defect = phi.sub(&xi.compose_with_product(&alg));
        let dn = bilinear_norm(&defect, &alg, &opts()).unwrap().value;
        let b = b_seminorm(&phi, &alg, &opts()).unwrap().value;
        assert!((dn - 1.0).abs() < 1e-12);
        assert!(dn <= alg.approx_id_bound * b + 1e-9);
    }

    #[test]
    fn xi_from_identity_is_linear() {
        let alg = cyclic_group_algebra(3).unwrap();
        let phi = BilinearForm::random(3, 1.0, 21);
        let c = Complex64::new(-1.5, 0.5);
        let xi1 = xi_from_identity(&phi, &alg).unwrap();
        let xi2 = xi_from_identity(&phi.scale(c), &alg).unwrap();
        for (a, b) in xi2.coeffs.iter().zip(&xi1.coeffs) {
            assert!((a - b * c).norm() < 1e-12);
        }
    }

    #[test]
    fn verify_913_on_composed_functional() {
        let alg = cyclic_group_algebra(4).unwrap();
        let xi = LinearFunctional::new(vec![cr(1.0), cr(2.0), cr(-0.5), cr(0.0)]);
        let phi = xi.compose_with_product(&alg);
        let report = verify_913(&phi, &alg, &opts()).unwrap();
        assert!(report.all_pass);
        assert!(report.b.value < 1e-12);
        assert!(report.zp.value < 1e-10);
        assert!(report.dist.value < 1e-12);
    }

    #[test]
    fn verify_913_elementary_z2_values() {
        let alg = cyclic_group_algebra(2).unwrap();
        let phi = BilinearForm::elementary(2, 0, 1);
        let report = verify_913(&phi, &alg, &opts()).unwrap();
        assert!(report.all_pass);
        assert!((report.norm.value - 1.0).abs() < 1e-12);
        assert!((report.b.value - 1.0).abs() < 1e-12);
        assert!((report.zp.value - 0.25).abs() < 1e-12);
        assert!((report.dist.value - 0.5).abs() < 1e-12);
    }

    #[test]
    fn verify_913_random_sweep_z6_exact_directions() {
        let alg = cyclic_group_algebra(6).unwrap();
        for seed in 0..10 {
            let phi = BilinearForm::random(6, 1.0, 400 + seed);
            let report =
                verify_913(&phi, &alg, &SearchOptions { restarts: 32, seed: 5 }).unwrap();
            assert!(report.all_pass, "seed {seed}: {:?}", report.checks);
        }
    }

    #[test]
    fn verify_913_matrix_path_is_consistent() {
        let alg = matrix_algebra(2).unwrap();
        let phi = BilinearForm::random(4, 1.0, 31);
        let report = verify_913(&phi, &alg, &SearchOptions { restarts: 24, seed: 3 }).unwrap();
        assert!(report.all_pass, "{:?}", report.checks);
        assert!(report.cstar_flag.is_some());
    }

    #[test]
    fn translation_commutator_vanishes_for_composed() {
        let alg = cyclic_group_algebra(3).unwrap();
        let xi = LinearFunctional::new(vec![cr(1.0), cr(-2.0), cr(0.25)]);
        let phi = xi.compose_with_product(&alg);
        let f = AlgebraElement::basis(3, 1);
        let h = AlgebraElement::basis(3, 2);
        for t in 0..3 {
            let rep = translation_commutator_check(&phi, &alg, t, &f, &h, &opts()).unwrap();
            assert!(rep.defect < 1e-12);
        }
    }

    #[test]
    fn translation_commutator_elementary_z2() {
        let alg = cyclic_group_algebra(2).unwrap();
        let phi = BilinearForm::elementary(2, 0, 1);
        let f = AlgebraElement::basis(2, 0);
        let h = AlgebraElement::basis(2, 0);
        let rep = translation_commutator_check(&phi, &alg, 1, &f, &h, &opts()).unwrap();
        assert!((rep.defect - 1.0).abs() < 1e-12);
        let bound = rep.kappa_zp_bound.unwrap();
        assert!((bound - torus::kappa() * 0.25).abs() < 1e-9);
        assert_eq!(rep.pass, Some(true));
    }

    #[test]
    fn translation_commutator_invariant_under_composed_shift() {
        let alg = cyclic_group_algebra(3).unwrap();
        let phi = BilinearForm::random(3, 1.0, 77);
        let xi = LinearFunctional::new(vec![cr(0.5), cr(1.5), cr(-1.0)]);
        let shifted = phi.add(&xi.compose_with_product(&alg));
        let f = AlgebraElement::basis(3, 0);
        let h = AlgebraElement::basis(3, 1);
        let r1 = translation_commutator_check(&phi, &alg, 2, &f, &h, &opts()).unwrap();
        let r2 = translation_commutator_check(&shifted, &alg, 2, &f, &h, &opts()).unwrap();
        assert!((r1.defect - r2.defect).abs() < 1e-12);
    }

    #[test]
    fn translation_commutator_rejects_bad_element() {
        let alg = cyclic_group_algebra(2).unwrap();
        let phi = BilinearForm::elementary(2, 0, 1);
        let f = AlgebraElement::basis(2, 0);
        assert!(matches!(
            translation_commutator_check(&phi, &alg, 5, &f, &f, &opts()),
            Err(AlgebraError::UnknownLabel(_))
        ));
    }

    #[test]
    fn zpd_check_matrix_2() {
        let alg = matrix_algebra(2).unwrap();
        let report = zpd_linear_check(&alg, &SearchOptions { restarts: 80, seed: 13 }).unwrap();
        assert_eq!(report.annihilator_dim, 4);
        assert_eq!(report.pi_space_dim, 4);
        assert!(report.is_zpd);
        assert!(!report.degenerate);
    }

    #[test]
    fn zpd_check_cyclic_3() {
        let alg = cyclic_group_algebra(3).unwrap();
        let report = zpd_linear_check(&alg, &opts()).unwrap();
        assert_eq!(report.annihilator_dim, 3);
        assert_eq!(report.span_dim, 6);
        assert!(report.is_zpd);
    }

    #[test]
    fn zpd_check_dimension_one_degenerate() {
        let alg = cyclic_group_algebra(1).unwrap();
        let report = zpd_linear_check(&alg, &opts()).unwrap();
        assert!(report.degenerate);
        assert_eq!(report.annihilator_dim, 1);
        assert!(!report.is_zpd);
    }

    #[test]
    fn zpd_check_s3_nonabelian_path_runs() {
        let alg = group_algebra(&s3_table()).unwrap();
        let report = zpd_linear_check(&alg, &SearchOptions { restarts: 60, seed: 2 }).unwrap();
        assert!(!report.degenerate);
        // group algebras are zero product determined; the sampled span should
        // reach the full complement when the coset pairs are rich enough
        assert_eq!(report.pi_space_dim, 6);
        assert!(report.annihilator_dim >= 6);
    }
}
