//! Finite-dimensional Banach algebras presented by structure constants.
//!
//! Two norm families are supported: weighted `l^1` (group algebras use unit
//! weights) and the operator norm on a full matrix algebra. Algebras are
//! immutable after construction; every operation is a pure function.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

use crate::cplx;
use crate::linalg;

/// Tolerance for the structure-tensor associativity check.
pub const ASSOC_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("not a group table: {axiom}")]
    NotAGroup { axiom: String },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("algebra has no identity element")]
    NonUnital,
    #[error("unknown basis label: {0}")]
    UnknownLabel(String),
    #[error("structure tensor is not associative (max residual {residual:.3e})")]
    NotAssociative { residual: f64 },
}

/// Which norm the algebra carries.
#[derive(Debug, Clone, PartialEq)]
pub enum NormKind {
    /// `||a|| = sum_i w_i |a_i|`; group algebras use unit weights.
    L1Weighted(Vec<f64>),
    /// Largest singular value of the `n x n` matrix with `dim = n^2`.
    MatrixOperator(usize),
}

/// An element, as coefficients over the ambient basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    pub coeffs: Vec<Complex64>,
}

impl AlgebraElement {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Self { coeffs: vec![Complex64::ZERO; dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; dim];
        coeffs[i] = Complex64::ONE;
        Self { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }
}

/// Multiplication side for annihilator computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Solutions `b` of `a b = 0`.
    Left,
    /// Solutions `b` of `b a = 0`.
    Right,
}

/// Group structure recovered from a structure tensor whose basis products
/// are single basis vectors.
#[derive(Debug, Clone)]
pub struct GroupView {
    /// `table[s][t]` = index of `e_s e_t`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    pub abelian: bool,
}

/// A finite-dimensional Banach algebra with explicit structure constants.
#[derive(Debug, Clone)]
pub struct FiniteBanachAlgebra {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// `structure[i][j]` is the coefficient vector of `e_i e_j`.
    pub structure: Vec<Vec<Vec<Complex64>>>,
    pub norm_kind: NormKind,
    pub identity: Option<Vec<Complex64>>,
    /// Bound of a (left) approximate identity; 1 for the built-in algebras.
    pub approx_id_bound: f64,
}

fn validate_group_table(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>), AlgebraError> {
    let n = table.len();
    if n == 0 {
        return Err(AlgebraError::InvalidDimension("empty table".into()));
    }
    for row in table {
        if row.len() != n {
            return Err(AlgebraError::NotAGroup { axiom: "table is not square".into() });
        }
        if row.iter().any(|&x| x >= n) {
            return Err(AlgebraError::NotAGroup { axiom: "entry out of range".into() });
        }
    }
    // identity
    let mut identity = None;
    for e in 0..n {
        if (0..n).all(|i| table[e][i] == i && table[i][e] == i) {
            identity = Some(e);
            break;
        }
    }
    let e = identity.ok_or_else(|| AlgebraError::NotAGroup { axiom: "no identity element".into() })?;
    // associativity
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(AlgebraError::NotAGroup {
                        axiom: format!("associativity fails at ({a},{b},{c})"),
                    });
                }
            }
        }
    }
    // inverses
    let mut inverse = vec![0usize; n];
    for a in 0..n {
        match (0..n).find(|&b| table[a][b] == e && table[b][a] == e) {
            Some(b) => inverse[a] = b,
            None => {
                return Err(AlgebraError::NotAGroup { axiom: format!("no inverse for element {a}") })
            }
        }
    }
    Ok((e, inverse))
}

/// Group algebra `l^1(G)` from a multiplication table: `e_s e_t = e_{table[s][t]}`,
/// unit-weight `l^1` norm, identity at the table's identity, bound `M = 1`.
pub fn group_algebra(table: &[Vec<usize>]) -> Result<FiniteBanachAlgebra, AlgebraError> {
    let labels = (0..table.len()).map(|i| format!("g{i}")).collect();
    group_algebra_labeled(table, labels)
}

/// Same as [`group_algebra`] with caller-provided basis labels.
pub fn group_algebra_labeled(
    table: &[Vec<usize>],
    labels: Vec<String>,
) -> Result<FiniteBanachAlgebra, AlgebraError> {
    let (e, _inv) = validate_group_table(table)?;
    let n = table.len();
    if labels.len() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, got: labels.len() });
    }
    let mut structure = vec![vec![vec![Complex64::ZERO; n]; n]; n];
    for s in 0..n {
        for t in 0..n {
            structure[s][t][table[s][t]] = Complex64::ONE;
        }
    }
    let mut identity = vec![Complex64::ZERO; n];
    identity[e] = Complex64::ONE;
    Ok(FiniteBanachAlgebra {
        dim: n,
        basis_labels: labels,
        structure,
        norm_kind: NormKind::L1Weighted(vec![1.0; n]),
        identity: Some(identity),
        approx_id_bound: 1.0,
    })
}

/// Cyclic group table of order `m`.
pub fn cyclic_table(m: usize) -> Vec<Vec<usize>> {
    (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect()
}

/// `l^1(Z_m)` with convolution product.
pub fn cyclic_group_algebra(m: usize) -> Result<FiniteBanachAlgebra, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::InvalidDimension("cyclic order must be >= 1".into()));
    }
    let labels = (0..m).map(|i| i.to_string()).collect();
    group_algebra_labeled(&cyclic_table(m), labels)
}

/// Full matrix algebra `M_n` with matrix-unit basis `E_{jk}` (index `j*n + k`),
/// operator norm, identity `I_n`, bound `M = 1`.
pub fn matrix_algebra(n: usize) -> Result<FiniteBanachAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidDimension("matrix side must be >= 1".into()));
    }
    let dim = n * n;
    let idx = |j: usize, k: usize| j * n + k;
    let mut structure = vec![vec![vec![Complex64::ZERO; dim]; dim]; dim];
    for j in 0..n {
        for k in 0..n {
            for m in 0..n {
                // E_{jk} E_{km} = E_{jm}
                structure[idx(j, k)][idx(k, m)][idx(j, m)] = Complex64::ONE;
            }
        }
    }
    let mut identity = vec![Complex64::ZERO; dim];
    for j in 0..n {
        identity[idx(j, j)] = Complex64::ONE;
    }
    let basis_labels = (0..n)
        .flat_map(|j| (0..n).map(move |k| format!("E{}{}", j + 1, k + 1)))
        .collect();
    Ok(FiniteBanachAlgebra {
        dim,
        basis_labels,
        structure,
        norm_kind: NormKind::MatrixOperator(n),
        identity: Some(identity),
        approx_id_bound: 1.0,
    })
}

impl FiniteBanachAlgebra {
    pub fn check_dim(&self, a: &AlgebraElement) -> Result<(), AlgebraError> {
        if a.dim() != self.dim {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim, got: a.dim() });
        }
        Ok(())
    }

    /// Product via the structure tensor.
    pub fn multiply(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let mut out = vec![Complex64::ZERO; self.dim];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.norm_sqr() == 0.0 {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.norm_sqr() == 0.0 {
                    continue;
                }
                let s = ai * bj;
                cplx::axpy(&mut out, s, &self.structure[i][j]);
            }
        }
        Ok(AlgebraElement::new(out))
    }

    pub fn norm(&self, a: &AlgebraElement) -> f64 {
        match &self.norm_kind {
            NormKind::L1Weighted(w) => a.coeffs.iter().zip(w).map(|(z, wi)| wi * z.norm()).sum(),
            NormKind::MatrixOperator(_) => linalg::op_norm(&self.as_matrix(a)),
        }
    }

    /// Reshape the coefficient vector of a matrix-algebra element into the
    /// underlying `n x n` matrix.
    pub fn as_matrix(&self, a: &AlgebraElement) -> DMatrix<Complex64> {
        let n = match self.norm_kind {
            NormKind::MatrixOperator(n) => n,
            _ => panic!("as_matrix on a non-matrix algebra"),
        };
        DMatrix::from_fn(n, n, |j, k| a.coeffs[j * n + k])
    }

    /// Inverse of [`Self::as_matrix`].
    pub fn from_matrix(&self, m: &DMatrix<Complex64>) -> AlgebraElement {
        let n = match self.norm_kind {
            NormKind::MatrixOperator(n) => n,
            _ => panic!("from_matrix on a non-matrix algebra"),
        };
        let mut coeffs = vec![Complex64::ZERO; self.dim];
        for j in 0..n {
            for k in 0..n {
                coeffs[j * n + k] = m[(j, k)];
            }
        }
        AlgebraElement::new(coeffs)
    }

    pub fn identity_element(&self) -> Result<AlgebraElement, AlgebraError> {
        self.identity
            .as_ref()
            .map(|c| AlgebraElement::new(c.clone()))
            .ok_or(AlgebraError::NonUnital)
    }

    /// Matrix of left multiplication by `a` (entry `(k, j)` = coefficient of
    /// `e_k` in `a e_j`), or of right multiplication for [`Side::Right`].
    pub fn multiplication_matrix(&self, a: &AlgebraElement, side: Side) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim, self.dim, |k, j| {
            let mut s = Complex64::ZERO;
            for (i, ai) in a.coeffs.iter().enumerate() {
                s += ai
                    * match side {
                        Side::Left => self.structure[i][j][k],
                        Side::Right => self.structure[j][i][k],
                    };
            }
            s
        })
    }

    /// Orthonormal-style basis of `{b : a b = 0}` (left) or `{b : b a = 0}`
    /// (right), from an SVD of the multiplication matrix with relative
    /// singular-value cutoff 1e-10.
    pub fn annihilator_basis(&self, a: &AlgebraElement, side: Side) -> Vec<AlgebraElement> {
        let m = self.multiplication_matrix(a, side);
        linalg::kernel_basis(&m).into_iter().map(AlgebraElement::new).collect()
    }

    /// Max associativity residual over all basis triples.
    pub fn associativity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            let ei = AlgebraElement::basis(self.dim, i);
            for j in 0..self.dim {
                let ej = AlgebraElement::basis(self.dim, j);
                let ij = self.multiply(&ei, &ej).unwrap();
                for k in 0..self.dim {
                    let ek = AlgebraElement::basis(self.dim, k);
                    let jk = self.multiply(&ej, &ek).unwrap();
                    let left = self.multiply(&ij, &ek).unwrap();
                    let right = self.multiply(&ei, &jk).unwrap();
                    let r = cplx::sup_norm(&cplx::sub(&left.coeffs, &right.coeffs));
                    worst = worst.max(r);
                }
            }
        }
        worst
    }

    /// Detect group-algebra structure: every basis product is a single basis
    /// vector with coefficient 1 and the table satisfies the group axioms.
    pub fn as_group_table(&self) -> Option<GroupView> {
        if !matches!(&self.norm_kind, NormKind::L1Weighted(w) if w.iter().all(|&x| x == 1.0)) {
            return None;
        }
        let mut table = vec![vec![0usize; self.dim]; self.dim];
        for s in 0..self.dim {
            for t in 0..self.dim {
                let row = &self.structure[s][t];
                let mut hit = None;
                for (k, c) in row.iter().enumerate() {
                    if c.norm() > 0.5 {
                        if (c - Complex64::ONE).norm() > ASSOC_TOL || hit.is_some() {
                            return None;
                        }
                        hit = Some(k);
                    } else if c.norm() > ASSOC_TOL {
                        return None;
                    }
                }
                table[s][t] = hit?;
            }
        }
        let (identity, inverse) = validate_group_table(&table).ok()?;
        let abelian = (0..self.dim).all(|s| (0..self.dim).all(|t| table[s][t] == table[t][s]));
        Some(GroupView { table, identity, inverse, abelian })
    }

    /// Random element with standard complex gaussian coefficients.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        AlgebraElement::new(cplx::gaussian_vec(rng, self.dim))
    }

    /// Random element scaled to unit norm (resampled if degenerate).
    pub fn random_unit_element<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement {
        loop {
            let a = self.random_element(rng);
            let n = self.norm(&a);
            if n > 1e-8 {
                return AlgebraElement::new(cplx::scale(&a.coeffs, Complex64::new(1.0 / n, 0.0)));
            }
        }
    }
}

/// Standard multiplication table of the symmetric group S3; handy for
/// non-commutative fixtures.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let find = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
    (0..6).map(|i| (0..6).map(|j| find(compose(perms[i], perms[j]))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::{c, cr};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cyclic_order_one_is_scalars() {
        let a = cyclic_group_algebra(1).unwrap();
        assert_eq!(a.dim, 1);
        let e0 = AlgebraElement::basis(1, 0);
        let p = a.multiply(&e0, &e0).unwrap();
        assert_eq!(p, e0);
    }

    #[test]
    fn z2_relation() {
        let a = cyclic_group_algebra(2).unwrap();
        let d1 = AlgebraElement::basis(2, 1);
        let p = a.multiply(&d1, &d1).unwrap();
        assert_eq!(p, AlgebraElement::basis(2, 0));
    }

    #[test]
    fn s3_is_noncommutative() {
        let a = group_algebra(&s3_table()).unwrap();
        let mut found = false;
        for s in 0..6 {
            for t in 0..6 {
                let es = AlgebraElement::basis(6, s);
                let et = AlgebraElement::basis(6, t);
                if a.multiply(&es, &et).unwrap() != a.multiply(&et, &es).unwrap() {
                    found = true;
                }
            }
        }
        assert!(found);
        let view = a.as_group_table().unwrap();
        assert!(!view.abelian);
    }

    #[test]
    fn non_group_table_names_axiom() {
        // row with a repeated entry: not a latin square, no inverse exists
        let bad = vec![vec![0, 1], vec![1, 1]];
        match group_algebra(&bad) {
            Err(AlgebraError::NotAGroup { axiom }) => assert!(!axiom.is_empty()),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn matrix_algebra_dim_zero_rejected() {
        assert!(matches!(matrix_algebra(0), Err(AlgebraError::InvalidDimension(_))));
    }

    #[test]
    fn matrix_unit_products() {
        let a = matrix_algebra(2).unwrap();
        let e12 = AlgebraElement::basis(4, 1);
        let e21 = AlgebraElement::basis(4, 2);
        let e11 = AlgebraElement::basis(4, 0);
        assert_eq!(a.multiply(&e12, &e21).unwrap(), e11);
        assert_eq!(a.multiply(&e12, &e12).unwrap(), AlgebraElement::zero(4));
    }

    #[test]
    fn matrix_norms() {
        let a = matrix_algebra(2).unwrap();
        let id = a.identity_element().unwrap();
        assert!((a.norm(&id) - 1.0).abs() < 1e-12);
        // E11 + E12 = [[1,1],[0,0]] has norm sqrt(2)
        let x = AlgebraElement::new(vec![cr(1.0), cr(1.0), cr(0.0), cr(0.0)]);
        assert!((a.norm(&x) - 2f64.sqrt()).abs() < 1e-12);
        // [[0,2],[0,0]] has norm 2
        let y = AlgebraElement::new(vec![cr(0.0), cr(2.0), cr(0.0), cr(0.0)]);
        assert!((a.norm(&y) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn l1_norm_and_convolution() {
        let a = cyclic_group_algebra(2).unwrap();
        let half = AlgebraElement::new(vec![cr(0.5), cr(-0.5)]);
        assert!((a.norm(&half) - 1.0).abs() < 1e-15);
        // (d0 + d1) * (d0 - d1) = 0
        let u = AlgebraElement::new(vec![cr(1.0), cr(1.0)]);
        let v = AlgebraElement::new(vec![cr(1.0), cr(-1.0)]);
        let p = a.multiply(&u, &v).unwrap();
        assert!(cplx::sup_norm(&p.coeffs) < 1e-15);
    }

    #[test]
    fn identity_multiplies_trivially() {
        let a = group_algebra(&s3_table()).unwrap();
        let id = a.identity_element().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let x = a.random_element(&mut rng);
        let lx = a.multiply(&id, &x).unwrap();
        let rx = a.multiply(&x, &id).unwrap();
        assert!(cplx::sup_norm(&cplx::sub(&lx.coeffs, &x.coeffs)) < 1e-15);
        assert!(cplx::sup_norm(&cplx::sub(&rx.coeffs, &x.coeffs)) < 1e-15);
        assert!(a.norm(&id) <= a.approx_id_bound + 1e-15);
    }

    #[test]
    fn associativity_of_constructors() {
        assert!(group_algebra(&s3_table()).unwrap().associativity_residual() <= ASSOC_TOL);
        assert!(matrix_algebra(3).unwrap().associativity_residual() <= ASSOC_TOL);
    }

    #[test]
    fn submultiplicative_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for alg in [cyclic_group_algebra(4).unwrap(), matrix_algebra(2).unwrap()] {
            for _ in 0..50 {
                let x = alg.random_element(&mut rng);
                let y = alg.random_element(&mut rng);
                let p = alg.multiply(&x, &y).unwrap();
                assert!(alg.norm(&p) <= alg.norm(&x) * alg.norm(&y) + 1e-9);
            }
        }
    }

    #[test]
    fn annihilator_of_identity_is_empty() {
        let a = cyclic_group_algebra(3).unwrap();
        let id = a.identity_element().unwrap();
        assert!(a.annihilator_basis(&id, Side::Left).is_empty());
    }

    #[test]
    fn annihilator_z2() {
        let a = cyclic_group_algebra(2).unwrap();
        let u = AlgebraElement::new(vec![cr(1.0), cr(1.0)]);
        let k = a.annihilator_basis(&u, Side::Left);
        assert_eq!(k.len(), 1);
        // kernel vector proportional to d0 - d1
        let v = &k[0].coeffs;
        assert!((v[0] + v[1]).norm() < 1e-12);
        let prod = a.multiply(&u, &k[0]).unwrap();
        assert!(cplx::sup_norm(&prod.coeffs) < 1e-10);
    }

    #[test]
    fn annihilator_matrix_unit() {
        let a = matrix_algebra(2).unwrap();
        let e11 = AlgebraElement::basis(4, 0);
        let k = a.annihilator_basis(&e11, Side::Left);
        // ker L_{E11} spanned by E21, E22
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v.coeffs[0].norm() < 1e-12 && v.coeffs[1].norm() < 1e-12);
            let p = a.multiply(&e11, v).unwrap();
            assert!(cplx::sup_norm(&p.coeffs) < 1e-10);
        }
    }

    #[test]
    fn annihilator_dimension_matches_rank_deficiency() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = cyclic_group_algebra(4).unwrap();
        for _ in 0..10 {
            let x = a.random_element(&mut rng);
            let m = a.multiplication_matrix(&x, Side::Left);
            let k = a.annihilator_basis(&x, Side::Left);
            assert_eq!(k.len(), a.dim - linalg::rank(&m));
        }
    }

    #[test]
    fn group_view_roundtrip() {
        let a = cyclic_group_algebra(4).unwrap();
        let g = a.as_group_table().unwrap();
        assert_eq!(g.identity, 0);
        assert!(g.abelian);
        assert_eq!(g.inverse[1], 3);
        let m = matrix_algebra(2).unwrap();
        assert!(m.as_group_table().is_none());
    }

    #[test]
    fn dimension_mismatch_reported() {
        let a = cyclic_group_algebra(2).unwrap();
        let bad = AlgebraElement::zero(3);
        let ok = AlgebraElement::zero(2);
        assert!(matches!(
            a.multiply(&bad, &ok),
            Err(AlgebraError::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn complex_scalars_flow_through() {
        let a = cyclic_group_algebra(3).unwrap();
        let x = AlgebraElement::new(vec![c(0.0, 1.0), cr(0.0), cr(0.0)]);
        let y = AlgebraElement::new(vec![cr(0.0), c(0.0, 1.0), cr(0.0)]);
        let p = a.multiply(&x, &y).unwrap();
        assert!((p.coeffs[1] + cr(1.0)).norm() < 1e-15);
    }
}
