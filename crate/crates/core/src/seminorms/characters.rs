//! Character tables of finite abelian groups, built directly from the
//! multiplication table.
//!
//! A character is determined by its (root-of-unity) values on a generating
//! set; all consistent assignments are enumerated and extended over the
//! whole group, and the resulting table is verified against
//! multiplicativity and orthogonality before it is returned. Turning
//! convolution into pointwise multiplication is what makes the zero-product
//! oracle possible: `a * b = 0` iff the transformed supports are disjoint.

use num_complex::Complex64;

use crate::algebra::GroupView;
use crate::cplx;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    /// `chars[j][s]` = value of the j-th character at group element `s`.
    pub chars: Vec<Vec<Complex64>>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.chars.len()
    }

    /// Transform of a coefficient vector: `a_hat(j) = sum_s a_s chi_j(s)`.
    pub fn transform(&self, a: &[Complex64]) -> Vec<Complex64> {
        self.chars.iter().map(|chi| cplx::dot(chi, a)).collect()
    }

    /// Element-space basis vector spanning frequencies `{j}`:
    /// the inverse-transform image `s -> conj(chi_j(s)) / n`.
    pub fn frequency_basis_vector(&self, j: usize) -> Vec<Complex64> {
        let n = self.order() as f64;
        self.chars[j].iter().map(|z| z.conj() / n).collect()
    }
}

fn element_order(view: &GroupView, g: usize) -> usize {
    let mut x = g;
    let mut ord = 1;
    while x != view.identity {
        x = view.table[x][g];
        ord += 1;
    }
    ord
}

/// Subgroup generated by `gens`, as a sorted element list.
fn generated_subgroup(view: &GroupView, gens: &[usize]) -> Vec<usize> {
    let n = view.table.len();
    let mut seen = vec![false; n];
    seen[view.identity] = true;
    let mut frontier = vec![view.identity];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = view.table[x][g];
            if !seen[y] {
                seen[y] = true;
                frontier.push(y);
            }
        }
    }
    (0..n).filter(|&i| seen[i]).collect()
}

/// All characters of an abelian group given by its table, or `None` when the
/// group is not abelian or verification fails.
pub fn character_table(view: &GroupView) -> Option<CharacterTable> {
    if !view.abelian {
        return None;
    }
    let n = view.table.len();
    // greedy generating set
    let mut gens: Vec<usize> = Vec::new();
    let mut span = generated_subgroup(view, &gens);
    while span.len() < n {
        let next = (0..n).find(|i| !span.contains(i))?;
        gens.push(next);
        span = generated_subgroup(view, &gens);
    }
    let orders: Vec<usize> = gens.iter().map(|&g| element_order(view, g)).collect();

    // enumerate all root-of-unity assignments on the generators and keep the
    // ones that extend consistently to the whole group
    let mut chars: Vec<Vec<Complex64>> = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        if let Some(chi) = extend_character(view, &gens, &orders, &assignment) {
            if !chars.iter().any(|c| close(c, &chi)) {
                chars.push(chi);
            }
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == gens.len() {
                // all assignments done
                if chars.len() != n {
                    return None;
                }
                let table = CharacterTable { chars };
                return verify(view, &table).then_some(table);
            }
            assignment[i] += 1;
            if assignment[i] < orders[i] {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn extend_character(
    view: &GroupView,
    gens: &[usize],
    orders: &[usize],
    assignment: &[usize],
) -> Option<Vec<Complex64>> {
    let n = view.table.len();
    let tau = 2.0 * std::f64::consts::PI;
    let gen_values: Vec<Complex64> = assignment
        .iter()
        .zip(orders)
        .map(|(&t, &d)| cplx::unit(tau * t as f64 / d as f64))
        .collect();
    let mut value: Vec<Option<Complex64>> = vec![None; n];
    value[view.identity] = Some(Complex64::ONE);
    let mut frontier = vec![view.identity];
    while let Some(x) = frontier.pop() {
        let vx = value[x].unwrap();
        for (gi, &g) in gens.iter().enumerate() {
            let y = view.table[x][g];
            let vy = vx * gen_values[gi];
            match value[y] {
                None => {
                    value[y] = Some(vy);
                    frontier.push(y);
                }
                Some(prev) => {
                    // conflicting relation: this assignment is not a character
                    if (prev - vy).norm() > 1e-9 {
                        return None;
                    }
                }
            }
        }
    }
    value.into_iter().collect()
}

fn close(a: &[Complex64], b: &[Complex64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-8)
}

fn verify(view: &GroupView, table: &CharacterTable) -> bool {
    let n = view.table.len();
    for chi in &table.chars {
        for s in 0..n {
            for t in 0..n {
                if (chi[view.table[s][t]] - chi[s] * chi[t]).norm() > 1e-10 {
                    return false;
                }
            }
        }
    }
    // orthogonality: sum_s chi_i(s) conj(chi_j(s)) = n delta_ij
    for i in 0..n {
        for j in 0..n {
            let s: Complex64 =
                (0..n).map(|k| table.chars[i][k] * table.chars[j][k].conj()).sum();
            let target = if i == j { n as f64 } else { 0.0 };
            if (s - Complex64::new(target, 0.0)).norm() > 1e-8 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_group_algebra, group_algebra, s3_table};
    use crate::cplx::cr;

    #[test]
    fn cyclic_characters_are_the_dft() {
        for m in 1..=6 {
            let alg = cyclic_group_algebra(m).unwrap();
            let view = alg.as_group_table().unwrap();
            let table = character_table(&view).unwrap();
            assert_eq!(table.order(), m);
        }
    }

    #[test]
    fn klein_four_group() {
        // Z2 x Z2 table
        let t = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let alg = group_algebra(&t).unwrap();
        let view = alg.as_group_table().unwrap();
        let table = character_table(&view).unwrap();
        assert_eq!(table.order(), 4);
        // all character values are +-1
        for chi in &table.chars {
            for v in chi {
                assert!((v.im).abs() < 1e-12 && (v.re.abs() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn nonabelian_rejected() {
        let alg = group_algebra(&s3_table()).unwrap();
        let view = alg.as_group_table().unwrap();
        assert!(character_table(&view).is_none());
    }

    #[test]
    fn transform_turns_convolution_into_products() {
        let alg = cyclic_group_algebra(5).unwrap();
        let view = alg.as_group_table().unwrap();
        let table = character_table(&view).unwrap();
        let a = crate::algebra::AlgebraElement::new(vec![
            cr(1.0),
            cr(-0.5),
            cr(0.25),
            cr(0.0),
            cr(2.0),
        ]);
        let b = crate::algebra::AlgebraElement::new(vec![
            cr(0.5),
            cr(0.5),
            cr(-1.0),
            cr(0.75),
            cr(0.0),
        ]);
        let ab = alg.multiply(&a, &b).unwrap();
        let fa = table.transform(&a.coeffs);
        let fb = table.transform(&b.coeffs);
        let fab = table.transform(&ab.coeffs);
        for j in 0..5 {
            assert!((fab[j] - fa[j] * fb[j]).norm() < 1e-10);
        }
    }

    #[test]
    fn frequency_basis_inverts() {
        let alg = cyclic_group_algebra(4).unwrap();
        let view = alg.as_group_table().unwrap();
        let table = character_table(&view).unwrap();
        // a vector supported on frequency {2} transforms to support {2}
        let v = table.frequency_basis_vector(2);
        let f = table.transform(&v);
        for (j, z) in f.iter().enumerate() {
            let expect = if j == 2 { 1.0 } else { 0.0 };
            assert!((z - cr(expect)).norm() < 1e-12);
        }
    }
}
