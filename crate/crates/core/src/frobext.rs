//! Frobenius algebras `S` over the base field and the `A`-ring
//! `R = S^op ⊗ A` attached to an algebra map `j: S → A`, with
//! `i(a) = 1 ⊗ a`, `χ(s ⊗ a) = j(s)a`, the lifted Frobenius system
//! `E = (e² ⊗ 1) ⊗_A (e¹ ⊗ 1)`, `N(s ⊗ a) = ν̄(s)a`, and the trace
//! `tr(a) = j(e¹) a j(e²)`.
//!
//! `R` has basis `s ⊗ a` at index `s * dim A + a`.

use std::sync::Arc;

use crate::algebra::{same_algebra, Algebra, AlgebraMap};
use crate::character::{fmt_vec, solve_in_subspace, ARing, ARingWithCharacter, Handedness};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vector, Matrix};
use crate::module::{Bimodule, RightModule};
use crate::morita::FrobeniusSystem;
use crate::report::{differing_coordinate, Report};
use crate::subspace::Subspace;

/// A Frobenius algebra: `e = Σ c_xy b_x ⊗ b_y` (index `x * dim S + y`) and `ν̄: S → k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusAlgebraData {
    pub s: Arc<Algebra>,
    pub e: Vec<Scalar>,
    pub nu: Vec<Scalar>,
}

impl FrobeniusAlgebraData {
    pub fn new(s: Arc<Algebra>, e: Vec<Scalar>, nu: Vec<Scalar>) -> Result<Self> {
        let n = s.dim();
        if e.len() != n * n {
            return Err(Error::schema("e", format!("expected {} coordinates, found {}", n * n, e.len())));
        }
        if nu.len() != n {
            return Err(Error::schema("nu", format!("expected {n} coordinates, found {}", nu.len())));
        }
        Ok(FrobeniusAlgebraData { s, e, nu })
    }

    pub fn field(&self) -> FieldSpec {
        self.s.field()
    }

    /// Nonzero terms `(c, x, y)` of `e`.
    pub fn e_terms(&self) -> Vec<(Scalar, usize, usize)> {
        let n = self.s.dim();
        self.e
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), k / n, k % n))
            .collect()
    }

    pub fn nu_of(&self, x: &[Scalar]) -> Scalar {
        vector::dot(&self.nu, x)
    }

    /// `S` over the base field as a classical Frobenius system.
    pub fn as_system(&self) -> Result<FrobeniusSystem> {
        let f = self.field();
        let k = Arc::new(Algebra::base(f));
        let ring = ARing::new(AlgebraMap::unit_map(k, self.s.clone())?)?;
        let terms: Vec<_> = self
            .e_terms()
            .into_iter()
            .map(|(c, x, y)| (vector::scale(&self.s.basis_element(x), &c), self.s.basis_element(y)))
            .collect();
        let nu = Matrix::from_rows(f, self.s.dim(), vec![self.nu.clone()]);
        FrobeniusSystem::classical(ring, &terms, &nu)
    }

    /// `se = es`, `ν̄(e¹)e² = 1`, `e¹ν̄(e²) = 1`, then the full system check over `k`.
    pub fn verify(&self) -> Report {
        let s = &self.s;
        let n = s.dim();
        let f = self.field();
        let mut report = Report::new();
        let id = Matrix::identity(f, n);
        let c = report.check("e_central", "Σ s e¹ ⊗ e² = Σ e¹ ⊗ e² s");
        for k in 0..n {
            let ek = s.basis_element(k);
            let lhs = s.left_mul_matrix(&ek).kron(&id).mul_vec(&self.e);
            let rhs = id.kron(&s.right_mul_matrix(&ek)).mul_vec(&self.e);
            c.expect(lhs == rhs, vec![k], || format!("basis element {k} does not commute with e"));
        }
        let mut left = f.zeros(n);
        let mut right = f.zeros(n);
        for (c, x, y) in self.e_terms() {
            let nx = &c * &self.nu[x];
            vector::axpy(&mut left, &nx, &s.basis_element(y));
            let ny = &c * &self.nu[y];
            vector::axpy(&mut right, &ny, &s.basis_element(x));
        }
        let c = report.check("nu_e1_e2", "Σ ν̄(e¹)e² = 1");
        c.expect(left == s.unit(), differing_coordinate(&left, s.unit()), || format!("Σ ν̄(e¹)e² = {}", fmt_vec(&left)));
        let c = report.check("e1_nu_e2", "Σ e¹ν̄(e²) = 1");
        c.expect(right == s.unit(), differing_coordinate(&right, s.unit()), || format!("Σ e¹ν̄(e²) = {}", fmt_vec(&right)));
        match self.as_system() {
            Ok(sys) => report.merge("system", sys.verify()),
            Err(err) => report.check("system", "system over k is well formed").fail(err.indices(), err.to_string()),
        }
        report
    }
}

fn check_j(fd: &FrobeniusAlgebraData, j: &AlgebraMap) -> Result<()> {
    if !same_algebra(j.source(), &fd.s) {
        return Err(Error::AlgebraMismatch("j must start at the Frobenius algebra".into()));
    }
    if !j.is_unital() {
        return Err(Error::NotUnital);
    }
    Ok(())
}

/// `(S^op ⊗ A, i, χ)`.
pub fn build_sop_tensor_a(fd: &FrobeniusAlgebraData, j: &AlgebraMap) -> Result<ARingWithCharacter> {
    check_j(fd, j)?;
    let s = &fd.s;
    let a = j.target().clone();
    let f = a.field();
    let r = Arc::new(s.opposite().tensor(&a)?);
    let i_cols: Vec<_> = (0..a.dim()).map(|x| vector::kron(s.unit(), &a.basis_element(x))).collect();
    let i = AlgebraMap::new(a.clone(), r.clone(), Matrix::from_columns(f, r.dim(), &i_cols), true)?;
    let chi_cols: Vec<_> = (0..s.dim())
        .flat_map(|x| (0..a.dim()).map(move |y| (x, y)))
        .map(|(x, y)| a.mul(&j.apply(&s.basis_element(x)), &a.basis_element(y)))
        .collect();
    let chi = Matrix::from_columns(f, a.dim(), &chi_cols);
    ARingWithCharacter::new(ARing::new(i)?, chi, Handedness::Right)
}

/// The lifted system `(E, N)` on `S^op ⊗ A` with the trivial context `I = J = A`,
/// together with the character.
pub fn lift_frobenius(fd: &FrobeniusAlgebraData, j: &AlgebraMap) -> Result<(FrobeniusSystem, ARingWithCharacter)> {
    let rc = build_sop_tensor_a(fd, j)?;
    let a = rc.a().clone();
    let s = &fd.s;
    let f = a.field();
    let terms: Vec<_> = fd
        .e_terms()
        .into_iter()
        .map(|(c, x, y)| {
            (
                vector::scale(&vector::kron(&s.basis_element(y), a.unit()), &c),
                vector::kron(&s.basis_element(x), a.unit()),
            )
        })
        .collect();
    let n_cols: Vec<_> = (0..s.dim())
        .flat_map(|x| (0..a.dim()).map(move |y| (x, y)))
        .map(|(x, y)| vector::scale(&a.basis_element(y), &fd.nu[x]))
        .collect();
    let nu = Matrix::from_columns(f, a.dim(), &n_cols);
    let sys = FrobeniusSystem::classical(rc.ring.clone(), &terms, &nu)?;
    Ok((sys, rc))
}

/// Matrix of `a ↦ Σ j(e¹) a j(e²)`.
pub fn trace_s_matrix(fd: &FrobeniusAlgebraData, j: &AlgebraMap) -> Result<Matrix> {
    check_j(fd, j)?;
    let a = j.target();
    let s = &fd.s;
    let cols: Vec<_> = (0..a.dim())
        .map(|y| {
            let mut out = a.zero();
            for (c, e1, e2) in fd.e_terms() {
                let term = a.mul(&a.mul(&j.apply(&s.basis_element(e1)), &a.basis_element(y)), &j.apply(&s.basis_element(e2)));
                vector::axpy(&mut out, &c, &term);
            }
            out
        })
        .collect();
    Ok(Matrix::from_columns(a.field(), a.dim(), &cols))
}

pub fn trace_s(fd: &FrobeniusAlgebraData, j: &AlgebraMap, x: &[Scalar]) -> Result<Vec<Scalar>> {
    Ok(trace_s_matrix(fd, j)?.mul_vec(x))
}

/// Canonical `a ∈ A` with `tr(a) = 1`, if any.
pub fn trace_one_witness(fd: &FrobeniusAlgebraData, j: &AlgebraMap) -> Result<Option<Vec<Scalar>>> {
    let m = trace_s_matrix(fd, j)?;
    let a = j.target();
    Ok(solve_in_subspace(&m, &Subspace::full(a.field(), a.dim()), a.unit()))
}

/// An `(S, A)`-bimodule as a right `S^op ⊗ A`-module: `m·(s ⊗ a) = s·m·a`.
pub fn bimodule_to_right_module(m: &Bimodule, r: Arc<Algebra>) -> Result<RightModule> {
    let (s, a) = (m.left_algebra(), m.right_algebra());
    if r.dim() != s.dim() * a.dim() {
        return Err(Error::dim("ring is not S^op ⊗ A for the bimodule's algebras"));
    }
    let actions = (0..s.dim())
        .flat_map(|x| (0..a.dim()).map(move |y| (x, y)))
        .map(|(x, y)| m.left_actions()[x].mul(&m.right_actions()[y]))
        .collect();
    RightModule::new(r, m.dim(), actions)
}

/// Inverse of [`bimodule_to_right_module`]: `s·m = m·(s ⊗ 1)`, `m·a = m·(1 ⊗ a)`.
pub fn right_module_to_bimodule(m: &RightModule, s: Arc<Algebra>, a: Arc<Algebra>) -> Result<Bimodule> {
    if m.algebra().dim() != s.dim() * a.dim() {
        return Err(Error::dim("module ring is not S^op ⊗ A"));
    }
    let left = (0..s.dim()).map(|x| m.action_of(&vector::kron(&s.basis_element(x), a.unit()))).collect();
    let right = (0..a.dim()).map(|y| m.action_of(&vector::kron(s.unit(), &a.basis_element(y)))).collect();
    Bimodule::new(s, a, m.dim(), left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::centralizer;
    use crate::corpus;
    use crate::morita::TraceData;

    fn id_map(a: &Arc<Algebra>) -> AlgebraMap {
        AlgebraMap::identity(a.clone())
    }

    #[test]
    fn frobenius_algebra_data_verifies() {
        for fd in [
            corpus::group_frobenius_algebra(FieldSpec::Rational),
            corpus::matrix_frobenius_algebra(FieldSpec::Prime(3)),
            corpus::base_frobenius_algebra(FieldSpec::Prime(2)),
        ] {
            let r = fd.verify();
            assert!(r.is_ok(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn base_field_lift_is_trivial() {
        let f = FieldSpec::Prime(2);
        let fd = corpus::base_frobenius_algebra(f);
        let a = Arc::new(corpus::dual_numbers(f));
        let j = AlgebraMap::unit_map(fd.s.clone(), a.clone()).unwrap();
        let rc = build_sop_tensor_a(&fd, &j).unwrap();
        assert!(rc.verify().is_ok());
        assert!(rc.b().is_full());
        let (sys, _) = lift_frobenius(&fd, &j).unwrap();
        assert!(sys.verify().is_ok());
        assert_eq!(trace_s_matrix(&fd, &j).unwrap(), Matrix::identity(f, 2));
    }

    #[test]
    fn group_algebra_lift() {
        let fd = corpus::group_frobenius_algebra(FieldSpec::Rational);
        let j = id_map(&fd.s);
        let (sys, rc) = lift_frobenius(&fd, &j).unwrap();
        assert!(rc.verify().is_ok());
        assert!(rc.b().is_full());
        assert_eq!(rc.b(), centralizer(&j));
        assert!(sys.verify().is_ok(), "{:?}", sys.verify().first_failure());
        let td = TraceData::compute(&sys, &rc).unwrap();
        assert!(td.report.is_ok(), "{:?}", td.report.first_failure());
        let tr = trace_s_matrix(&fd, &j).unwrap();
        assert_eq!(tr, Matrix::identity(FieldSpec::Rational, 2).scale(&FieldSpec::Rational.from_i64(2)));
        assert_eq!(td.trace, tr);
    }

    #[test]
    fn matrix_algebra_lift() {
        for f in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rational] {
            let fd = corpus::matrix_frobenius_algebra(f);
            let j = id_map(&fd.s);
            let (sys, rc) = lift_frobenius(&fd, &j).unwrap();
            assert!(rc.verify().is_ok());
            assert_eq!(rc.b().dim(), 1);
            assert_eq!(rc.b(), centralizer(&j));
            assert!(sys.verify().is_ok(), "{f}: {:?}", sys.verify().first_failure());
            let td = TraceData::compute(&sys, &rc).unwrap();
            assert!(td.report.is_ok(), "{f}: {:?}", td.report.first_failure());
            let tr = trace_s_matrix(&fd, &j).unwrap();
            assert_eq!(td.trace, tr);
            // tr(a) = trace(a)·1
            let a = fd.s.clone();
            for k in 0..4 {
                let expected = if k == 0 || k == 3 { a.unit().to_vec() } else { a.zero() };
                assert_eq!(tr.column(k), expected);
            }
            let w = trace_one_witness(&fd, &j).unwrap().unwrap();
            assert_eq!(w, a.basis_element(0));
        }
    }

    #[test]
    fn bimodule_round_trip() {
        let f = FieldSpec::Prime(3);
        let fd = corpus::matrix_frobenius_algebra(f);
        let j = id_map(&fd.s);
        let rc = build_sop_tensor_a(&fd, &j).unwrap();
        let bm = Bimodule::regular(fd.s.clone());
        let rm = bimodule_to_right_module(&bm, rc.r().clone()).unwrap();
        assert!(rm.check().is_ok());
        let back = right_module_to_bimodule(&rm, fd.s.clone(), fd.s.clone()).unwrap();
        assert_eq!(back, bm);
        // M^R = C_S(M) for M = A.
        assert_eq!(rc.module_invariants(&rm).unwrap(), centralizer(&j));
    }
}
