//! Tensor products of bimodules over the middle algebra, as explicit
//! quotients of the field tensor product with canonical coordinates.
//!
//! The field tensor `M ⊗ N` uses index `m * dim N + n`. The balanced tensor
//! `M ⊗_A N` is the quotient by `span{(m·a)⊗n − m⊗(a·n)}`, coordinatized by
//! the free columns of that relation subspace.

use crate::algebra::same_algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vector, Matrix};
use crate::module::Bimodule;
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct TensorOverA {
    left: Bimodule,
    right: Bimodule,
    relations: Subspace,
    projection: Matrix,
    section: Matrix,
    total: Bimodule,
}

impl TensorOverA {
    /// `m ⊗_A n` where `A` is the right algebra of `m` and the left algebra of `n`.
    pub fn new(m: &Bimodule, n: &Bimodule) -> Result<Self> {
        if !same_algebra(m.right_algebra(), n.left_algebra()) {
            return Err(Error::AlgebraMismatch(
                "the right algebra of the first factor must be the left algebra of the second".into(),
            ));
        }
        let f = m.field();
        let (dm, dn) = (m.dim(), n.dim());
        let total_dim = dm * dn;
        let mut rels = Vec::new();
        for (ra, la) in m.right_actions().iter().zip(n.left_actions()) {
            for i in 0..dm {
                let ma = ra.column(i);
                let ei = f.unit_vector(dm, i);
                for j in 0..dn {
                    let ej = f.unit_vector(dn, j);
                    let an = la.column(j);
                    let rel = vector::sub(&vector::kron(&ma, &ej), &vector::kron(&ei, &an));
                    if !vector::is_zero(&rel) {
                        rels.push(rel);
                    }
                }
            }
        }
        let relations = Subspace::span(f, total_dim, rels);
        let projection = relations.quotient_projection();
        let section = relations.quotient_section();
        let id_m = Matrix::identity(f, dm);
        let id_n = Matrix::identity(f, dn);
        let left_actions = m
            .left_actions()
            .iter()
            .map(|l| projection.mul(&l.kron(&id_n)).mul(&section))
            .collect();
        let right_actions = n
            .right_actions()
            .iter()
            .map(|r| projection.mul(&id_m.kron(r)).mul(&section))
            .collect();
        let total = Bimodule::new(
            m.left_algebra().clone(),
            n.right_algebra().clone(),
            projection.rows(),
            left_actions,
            right_actions,
        )?;
        Ok(TensorOverA {
            left: m.clone(),
            right: n.clone(),
            relations,
            projection,
            section,
            total,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.total.field()
    }

    pub fn factors(&self) -> (&Bimodule, &Bimodule) {
        (&self.left, &self.right)
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn total(&self) -> &Bimodule {
        &self.total
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Field tensor → balanced tensor.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Balanced tensor → field tensor, a right inverse of the projection.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, t: &[Scalar]) -> Vec<Scalar> {
        self.section.mul_vec(t)
    }

    /// Coordinates of `m ⊗_A n`.
    pub fn pure(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        self.project(&vector::kron(m, n))
    }

    /// Pure tensor of basis elements.
    pub fn pure_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.projection.column(i * self.right.dim() + j)
    }

    /// Whether a map defined on the field tensor is balanced.
    pub fn is_balanced(&self, map: &Matrix) -> bool {
        assert_eq!(map.cols(), self.relations.ambient_dim());
        self.relations.basis_vectors().iter().all(|r| vector::is_zero(&map.mul_vec(r)))
    }

    /// The map induced on the balanced tensor by a balanced map on the field tensor.
    pub fn descend(&self, map: &Matrix) -> Result<Matrix> {
        if map.cols() != self.relations.ambient_dim() {
            return Err(Error::dim(format!(
                "map has {} columns, field tensor has dimension {}",
                map.cols(),
                self.relations.ambient_dim()
            )));
        }
        for (k, r) in self.relations.basis_vectors().iter().enumerate() {
            if !vector::is_zero(&map.mul_vec(r)) {
                return Err(Error::NotBalanced { relation: k });
            }
        }
        Ok(map.mul(&self.section))
    }

    /// Descends a map given by its values on basis pure tensors `b_i ⊗ b_j`.
    pub fn descend_fn(&self, target_dim: usize, f: impl Fn(usize, usize) -> Vec<Scalar>) -> Result<Matrix> {
        let cols: Vec<Vec<Scalar>> = (0..self.left.dim())
            .flat_map(|i| (0..self.right.dim()).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        self.descend(&Matrix::from_columns(self.field(), target_dim, &cols))
    }
}

/// Matrix of the swap `M ⊗_A N → N^op ⊗_{A^op} M^op`, `m⊗n ↦ n⊗m`.
pub fn flip(source: &TensorOverA, target: &TensorOverA) -> Result<Matrix> {
    let (dm, dn) = (source.left.dim(), source.right.dim());
    if target.left.dim() != dn || target.right.dim() != dm {
        return Err(Error::dim("flip target factors do not match the source factors swapped"));
    }
    source.descend_fn(target.dim(), |i, j| target.pure_basis(j, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, AlgebraMap};
    use crate::corpus;
    use std::sync::Arc;

    #[test]
    fn a_tensor_a_is_a() {
        let f = FieldSpec::Rational;
        let a = Arc::new(corpus::cyclic_group_algebra(f, 2));
        let reg = Bimodule::regular(a.clone());
        let t = TensorOverA::new(&reg, &reg).unwrap();
        assert_eq!(t.dim(), a.dim());
        assert!(t.total().check().is_ok());
        // Multiplication descends and is a bijection onto A.
        let mult = t.descend_fn(a.dim(), |i, j| a.product(i, j).to_vec()).unwrap();
        assert!(mult.inverse().is_some());
    }

    #[test]
    fn a_tensor_m_is_m() {
        let f2 = FieldSpec::Prime(2);
        let m2 = Arc::new(corpus::matrix_algebra(f2, 2));
        let reg = Bimodule::regular(m2.clone());
        let t = TensorOverA::new(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 4);
        // 1 ⊗ M → A ⊗_A M is bijective.
        let cols: Vec<_> = (0..4).map(|k| t.pure(m2.unit(), &m2.basis_element(k))).collect();
        assert!(Matrix::from_columns(f2, 4, &cols).inverse().is_some());
    }

    #[test]
    fn tensor_over_a_subfield() {
        let f2 = FieldSpec::Prime(2);
        let a = Arc::new(corpus::split_algebra(f2, 2));
        let k = Arc::new(Algebra::base(f2));
        let j = AlgebraMap::unit_map(k, a.clone()).unwrap();
        let m = Bimodule::ring(a.clone(), None, Some(&j));
        let n = Bimodule::ring(a.clone(), Some(&j), None);
        let t = TensorOverA::new(&m, &n).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.total().check().is_ok());
    }

    #[test]
    fn unbalanced_map_is_rejected() {
        let f2 = FieldSpec::Prime(2);
        let d = Arc::new(corpus::dual_numbers(f2));
        let reg = Bimodule::regular(d.clone());
        let t = TensorOverA::new(&reg, &reg).unwrap();
        // (i, j) ↦ b_i is not balanced: x⊗1 and 1⊗x must agree.
        let bad = t.descend_fn(2, |i, _| d.basis_element(i));
        assert!(matches!(bad, Err(Error::NotBalanced { .. })));
    }

    #[test]
    fn flip_round_trip() {
        let f2 = FieldSpec::Prime(2);
        let up = Arc::new(corpus::upper_triangular(f2));
        let reg = Bimodule::regular(up);
        let t = TensorOverA::new(&reg, &reg).unwrap();
        let op = reg.op();
        let t_op = TensorOverA::new(&op, &op).unwrap();
        let there = flip(&t, &t_op).unwrap();
        let back = flip(&t_op, &t).unwrap();
        assert_eq!(back.mul(&there), Matrix::identity(f2, t.dim()));
    }
}
