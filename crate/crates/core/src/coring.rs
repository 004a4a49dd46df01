//! Corings over a finite-dimensional algebra `A`, grouplike elements, the
//! left dual ring `*C = {left A-linear maps C → A}` with its grouplike
//! character, coinvariants and Frobenius corings.
//!
//! Elements of `*C` are `dim A × dim C` matrices; the dual ring uses the
//! echelon basis of that space of matrices (row-major entries).
//! Grouplike elements satisfy `Δ(x) = x ⊗_A x` and `ε(x) = 1_A`.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMap};
use crate::character::{fmt_vec, ARing, ARingWithCharacter, Handedness};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::frobext::FrobeniusAlgebraData;
use crate::matrix::{vector, Matrix};
use crate::module::{intertwiners, Bimodule};
use crate::morita::pure_terms;
use crate::report::{subspace_difference, Report};
use crate::subspace::Subspace;
use crate::tensor::TensorOverA;

#[derive(Clone, Debug)]
pub struct CoringPresentation {
    a: Arc<Algebra>,
    c: Bimodule,
    cc: TensorOverA,
    comul: Matrix,
    counit: Matrix,
}

impl CoringPresentation {
    /// `comul` is `dim(C ⊗_A C) × dim C` in canonical tensor coordinates,
    /// `counit` is `dim A × dim C`.
    pub fn new(c: Bimodule, comul: Matrix, counit: Matrix) -> Result<Self> {
        if !crate::algebra::same_algebra(c.left_algebra(), c.right_algebra()) {
            return Err(Error::AlgebraMismatch("a coring is a bimodule over a single algebra".into()));
        }
        let a = c.left_algebra().clone();
        let cc = TensorOverA::new(&c, &c)?;
        if comul.rows() != cc.dim() || comul.cols() != c.dim() {
            return Err(Error::schema(
                "comul",
                format!("expected {}x{}, found {}x{}", cc.dim(), c.dim(), comul.rows(), comul.cols()),
            ));
        }
        if counit.rows() != a.dim() || counit.cols() != c.dim() {
            return Err(Error::schema("counit", format!("expected {}x{}", a.dim(), c.dim())));
        }
        Ok(CoringPresentation { a, c, cc, comul, counit })
    }

    /// `C = A`, `Δ(a) = a ⊗ 1`, `ε = id`.
    pub fn trivial(a: Arc<Algebra>) -> Self {
        let c = Bimodule::regular(a.clone());
        let cc = TensorOverA::new(&c, &c).expect("regular bimodule");
        let cols: Vec<_> = (0..a.dim()).map(|k| cc.pure(&a.basis_element(k), a.unit())).collect();
        let comul = Matrix::from_columns(a.field(), cc.dim(), &cols);
        let counit = Matrix::identity(a.field(), a.dim());
        CoringPresentation::new(c, comul, counit).expect("trivial coring")
    }

    /// The Sweedler coring `A ⊗_B A` of `j: B → A`, with
    /// `Δ(a ⊗ a') = (a ⊗ 1) ⊗_A (1 ⊗ a')` and `ε(a ⊗ a') = aa'`.
    pub fn sweedler(j: &AlgebraMap) -> Result<Self> {
        let a = j.target().clone();
        let left = Bimodule::ring(a.clone(), None, Some(j));
        let right = Bimodule::ring(a.clone(), Some(j), None);
        let ab = TensorOverA::new(&left, &right)?;
        let c = ab.total().clone();
        let cc = TensorOverA::new(&c, &c)?;
        let comul = ab.descend_fn(cc.dim(), |x, y| {
            cc.pure(&ab.pure(&a.basis_element(x), a.unit()), &ab.pure(a.unit(), &a.basis_element(y)))
        })?;
        let counit = ab.descend_fn(a.dim(), |x, y| a.product(x, y).to_vec())?;
        CoringPresentation::new(c, comul, counit)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.a
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.c
    }

    pub fn tensor(&self) -> &TensorOverA {
        &self.cc
    }

    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn with_counit(&self, counit: Matrix) -> Result<Self> {
        CoringPresentation::new(self.c.clone(), self.comul.clone(), counit)
    }

    /// Coassociativity, both counit laws, and bimodule linearity of `Δ` and `ε`.
    pub fn verify(&self) -> Report {
        let a = &self.a;
        let c = &self.c;
        let cc = &self.cc;
        let f = self.field();
        let n = c.dim();
        let mut report = Report::new();
        report.merge("bimodule", c.check());

        let ch = report.check("comul_bimodule_map", "Δ(a c b) = a Δ(c) b");
        for k in 0..a.dim() {
            let ok_l = self.comul.mul(&c.left_actions()[k]) == cc.total().left_actions()[k].mul(&self.comul);
            let ok_r = self.comul.mul(&c.right_actions()[k]) == cc.total().right_actions()[k].mul(&self.comul);
            ch.expect(ok_l && ok_r, vec![k], || format!("Δ does not commute with the action of a{k}"));
        }
        let ch = report.check("counit_bimodule_map", "ε(a c b) = a ε(c) b");
        for k in 0..a.dim() {
            let ek = a.basis_element(k);
            let ok_l = self.counit.mul(&c.left_actions()[k]) == a.left_mul_matrix(&ek).mul(&self.counit);
            let ok_r = self.counit.mul(&c.right_actions()[k]) == a.right_mul_matrix(&ek).mul(&self.counit);
            ch.expect(ok_l && ok_r, vec![k], || format!("ε does not commute with the action of a{k}"));
        }

        let ch = report.check("counit_laws", "ε(c₁)c₂ = c = c₁ε(c₂)");
        let left = cc.descend_fn(n, |x, y| c.left_action_of(&self.counit.column(x)).mul_vec(&f.unit_vector(n, y)));
        let right = cc.descend_fn(n, |x, y| c.right_action_of(&self.counit.column(y)).mul_vec(&f.unit_vector(n, x)));
        match (left, right) {
            (Ok(l), Ok(r)) => {
                let (l, r) = (l.mul(&self.comul), r.mul(&self.comul));
                for k in 0..n {
                    let ek = f.unit_vector(n, k);
                    ch.expect(l.column(k) == ek, vec![k, 0], || format!("ε(c₁)c₂ = {} for c{k}", fmt_vec(&l.column(k))));
                    ch.expect(r.column(k) == ek, vec![k, 1], || format!("c₁ε(c₂) = {} for c{k}", fmt_vec(&r.column(k))));
                }
            }
            (Err(e), _) | (_, Err(e)) => ch.fail(e.indices(), format!("counit is not left or right A-linear: {e}")),
        }

        let ch = report.check("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ");
        match self.coassociativity_maps() {
            Ok((l, r)) => {
                for k in 0..n {
                    ch.expect(l.column(k) == r.column(k), vec![k], || format!("Δ is not coassociative on c{k}"));
                }
            }
            Err(e) => ch.fail(e.indices(), format!("Δ ⊗ id is not defined: {e}")),
        }
        report
    }

    /// Both sides of coassociativity as maps into `C ⊗_A (C ⊗_A C)`.
    fn coassociativity_maps(&self) -> Result<(Matrix, Matrix)> {
        let c = &self.c;
        let cc = &self.cc;
        let n = c.dim();
        let f = self.field();
        let c_cc = TensorOverA::new(c, cc.total())?;
        let delta_left = cc.descend_fn(c_cc.dim(), |x, y| {
            // Δ(c_x) ⊗ c_y regrouped as c' ⊗ (c'' ⊗ c_y)
            let mut out = f.zeros(c_cc.dim());
            for (s, p, q) in pure_terms(cc, &self.comul.column(x)) {
                let inner = cc.pure_basis(q, y);
                vector::axpy(&mut out, &s, &c_cc.pure(&f.unit_vector(n, p), &inner));
            }
            out
        })?;
        let delta_right = cc.descend_fn(c_cc.dim(), |x, y| c_cc.pure(&f.unit_vector(n, x), &self.comul.column(y)))?;
        Ok((delta_left.mul(&self.comul), delta_right.mul(&self.comul)))
    }

    pub fn is_grouplike(&self, x: &[Scalar]) -> bool {
        self.comul.mul_vec(x) == self.cc.pure(x, x) && self.counit.mul_vec(x) == self.a.unit()
    }

    /// `{a : a x = x a}`.
    pub fn coinvariants(&self, x: &[Scalar]) -> Subspace {
        let cols: Vec<_> = (0..self.a.dim())
            .map(|k| vector::sub(&self.c.left_actions()[k].mul_vec(x), &self.c.right_actions()[k].mul_vec(x)))
            .collect();
        Matrix::from_columns(self.field(), self.c.dim(), &cols).kernel()
    }

    /// The left dual ring with `χ(f) = f(x)`.
    pub fn dual_ring(&self, x: &[Scalar]) -> Result<DualRing> {
        if !self.is_grouplike(x) {
            return Err(Error::NotGrouplike(fmt_vec(x)));
        }
        let a = &self.a;
        let c = &self.c;
        let f = self.field();
        let (da, dc) = (a.dim(), c.dim());
        let pairs: Vec<(Matrix, Matrix)> = (0..da)
            .map(|k| (c.left_actions()[k].clone(), a.left_mul_matrix(&a.basis_element(k))))
            .collect();
        let refs: Vec<_> = pairs.iter().map(|(s, t)| (s, t)).collect();
        let basis = intertwiners(f, dc, da, &refs);
        let space = Subspace::span(f, da * dc, basis.iter().map(|m| m.entries().to_vec()));
        let basis: Vec<Matrix> = space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::new(f, da, dc, v).expect("shape"))
            .collect();
        let coords = |m: &Matrix| space.coordinates(m.entries()).expect("left A-linear map");
        let d = basis.len();
        let mut table = Vec::with_capacity(d);
        for p in 0..d {
            let mut row = Vec::with_capacity(d);
            for q in 0..d {
                row.push(coords(&self.convolve(&basis[p], &basis[q])?));
            }
            table.push(row);
        }
        let names = (0..d).map(|k| format!("f{k}")).collect();
        let r = Arc::new(Algebra::new(f, names, table, coords(&self.counit))?);
        let i_cols: Vec<_> = (0..da)
            .map(|k| coords(&a.right_mul_matrix(&a.basis_element(k)).mul(&self.counit)))
            .collect();
        let i = AlgebraMap::new(a.clone(), r.clone(), Matrix::from_columns(f, d, &i_cols), true)?;
        let chi_cols: Vec<_> = basis.iter().map(|m| m.mul_vec(x)).collect();
        let chi = Matrix::from_columns(f, da, &chi_cols);
        let character = ARingWithCharacter::new(ARing::new(i)?, chi, Handedness::Right)?;
        Ok(DualRing {
            x: x.to_vec(),
            basis,
            space,
            character,
        })
    }

    /// `(f # g)(c) = g(c₁ f(c₂))`.
    pub fn convolve(&self, f_map: &Matrix, g_map: &Matrix) -> Result<Matrix> {
        let c = &self.c;
        let n = c.dim();
        let f = self.field();
        let m = self.cc.descend_fn(self.a.dim(), |x, y| {
            let moved = c.right_action_of(&f_map.column(y)).mul_vec(&f.unit_vector(n, x));
            g_map.mul_vec(&moved)
        })?;
        Ok(m.mul(&self.comul))
    }
}

/// `*C` with its grouplike character `χ(f) = f(x)`.
#[derive(Clone, Debug)]
pub struct DualRing {
    pub x: Vec<Scalar>,
    /// Basis of `*C` as `dim A × dim C` matrices.
    pub basis: Vec<Matrix>,
    space: Subspace,
    pub character: ARingWithCharacter,
}

impl DualRing {
    /// The map `C → A` of a ring element.
    pub fn as_map(&self, r: &[Scalar]) -> Matrix {
        let f = self.character.field();
        let (rows, cols) = (self.basis[0].rows(), self.basis[0].cols());
        let mut out = Matrix::zeros(f, rows, cols);
        for (c, m) in r.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Ring coordinates of a left `A`-linear map.
    pub fn coordinates(&self, m: &Matrix) -> Result<Vec<Scalar>> {
        self.space
            .coordinates(m.entries())
            .ok_or_else(|| Error::NotInSubspace("the map is not left A-linear".into()))
    }
}

/// A Frobenius system `(θ, z)` on a coring: `θ` is `dim A × dim(C ⊗_A C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusCoringSystem {
    pub theta: Matrix,
    pub z: Vec<Scalar>,
}

impl FrobeniusCoringSystem {
    /// `θ(a ⊗ b) = ab`, `z = 1` on the trivial coring.
    pub fn trivial(c: &CoringPresentation) -> Result<Self> {
        let a = c.algebra();
        let theta = c.tensor().descend_fn(a.dim(), |x, y| a.product(x, y).to_vec())?;
        Ok(FrobeniusCoringSystem {
            theta,
            z: a.unit().to_vec(),
        })
    }

    /// For the Sweedler coring of `k → S` with `S` Frobenius over `k`:
    /// `θ((a ⊗ a') ⊗ (a'' ⊗ a''')) = a ν̄(a'a'') a'''` and `z = e`.
    pub fn sweedler(c: &CoringPresentation, fd: &FrobeniusAlgebraData) -> Result<Self> {
        let s = &fd.s;
        if s.dim() * s.dim() != c.bimodule().dim() {
            return Err(Error::dim("the coring is not the Sweedler coring of the Frobenius algebra"));
        }
        let f = c.field();
        let n = s.dim();
        let unit = AlgebraMap::unit_map(Arc::new(Algebra::base(f)), s.clone())?;
        let left = Bimodule::ring(s.clone(), None, Some(&unit));
        let right = Bimodule::ring(s.clone(), Some(&unit), None);
        let ab = TensorOverA::new(&left, &right)?;
        let theta = c.tensor().descend_fn(n, |p, q| {
            let mut out = f.zeros(n);
            for (c1, x, y) in pure_terms(&ab, &f.unit_vector(ab.dim(), p)) {
                for (c2, u, v) in pure_terms(&ab, &f.unit_vector(ab.dim(), q)) {
                    let w = &(&c1 * &c2) * &fd.nu_of(s.product(y, u));
                    vector::axpy(&mut out, &w, s.product(x, v));
                }
            }
            out
        })?;
        let mut z = f.zeros(ab.dim());
        for (coef, x, y) in fd.e_terms() {
            vector::axpy(&mut z, &coef, &ab.pure_basis(x, y));
        }
        Ok(FrobeniusCoringSystem { theta, z })
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        FrobeniusCoringSystem {
            theta: self.theta.scale(s),
            z: self.z.clone(),
        }
    }

    pub fn theta_of(&self, c: &CoringPresentation, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.theta.mul_vec(&c.tensor().pure(x, y))
    }

    pub fn verify(&self, c: &CoringPresentation) -> Report {
        let a = c.algebra();
        let cm = c.bimodule();
        let cc = c.tensor();
        let f = c.field();
        let n = cm.dim();
        let mut report = Report::new();
        let ch = report.check("theta_bimodule_map", "θ(a t b) = a θ(t) b");
        for k in 0..a.dim() {
            let ek = a.basis_element(k);
            let ok_l = self.theta.mul(&cc.total().left_actions()[k]) == a.left_mul_matrix(&ek).mul(&self.theta);
            let ok_r = self.theta.mul(&cc.total().right_actions()[k]) == a.right_mul_matrix(&ek).mul(&self.theta);
            ch.expect(ok_l && ok_r, vec![k], || format!("θ does not commute with the action of a{k}"));
        }
        let ch = report.check("z_central", "a z = z a");
        for k in 0..a.dim() {
            let ok = cm.left_actions()[k].mul_vec(&self.z) == cm.right_actions()[k].mul_vec(&self.z);
            ch.expect(ok, vec![k], || format!("a{k} does not commute with z"));
        }
        let ch = report.check("theta_colinear", "c₁θ(c₂ ⊗ d) = θ(c ⊗ d₁)d₂");
        for x in 0..n {
            let dx = pure_terms(cc, &c.comul().column(x));
            for y in 0..n {
                let dy = pure_terms(cc, &c.comul().column(y));
                let mut lhs = f.zeros(n);
                for (s, p, q) in &dx {
                    let t = self.theta.mul_vec(&cc.pure_basis(*q, y));
                    vector::axpy(&mut lhs, s, &cm.right_action_of(&t).mul_vec(&f.unit_vector(n, *p)));
                }
                let mut rhs = f.zeros(n);
                for (s, p, q) in &dy {
                    let t = self.theta.mul_vec(&cc.pure_basis(x, *p));
                    vector::axpy(&mut rhs, s, &cm.left_action_of(&t).mul_vec(&f.unit_vector(n, *q)));
                }
                ch.expect(lhs == rhs, vec![x, y], || {
                    format!("c{x}, c{y}: left side {}, right side {}", fmt_vec(&lhs), fmt_vec(&rhs))
                });
            }
        }
        let ch = report.check("theta_normalized", "θ(z ⊗ c) = ε(c) = θ(c ⊗ z)");
        for k in 0..n {
            let ek = f.unit_vector(n, k);
            let eps = c.counit().column(k);
            let l = self.theta_of(c, &self.z, &ek);
            let r = self.theta_of(c, &ek, &self.z);
            ch.expect(l == eps, vec![k, 0], || format!("θ(z ⊗ c{k}) = {}, ε(c{k}) = {}", fmt_vec(&l), fmt_vec(&eps)));
            ch.expect(r == eps, vec![k, 1], || format!("θ(c{k} ⊗ z) = {}, ε(c{k}) = {}", fmt_vec(&r), fmt_vec(&eps)));
        }
        report
    }
}

/// `α(a)(c) = θ(ca ⊗ x)`, `α⁻¹(q) = q(z)`, `tr(a) = θ(xa ⊗ x)`.
#[derive(Clone, Debug)]
pub struct CoringTrace {
    /// `dim *C × dim A`.
    pub alpha: Matrix,
    /// `dim A × dim *C`, evaluation at `z`.
    pub alpha_inv: Matrix,
    pub trace: Matrix,
    pub q: Subspace,
    pub report: Report,
}

pub fn coring_alpha_trace(c: &CoringPresentation, sys: &FrobeniusCoringSystem, dual: &DualRing) -> Result<CoringTrace> {
    let a = c.algebra();
    let cm = c.bimodule();
    let f = c.field();
    let (da, n) = (a.dim(), cm.dim());
    let x = &dual.x;
    let rc = &dual.character;
    let mut alpha_cols = Vec::with_capacity(da);
    for k in 0..da {
        let ak = a.basis_element(k);
        let cols: Vec<_> = (0..n)
            .map(|m| sys.theta_of(c, &cm.right_action_of(&ak).mul_vec(&f.unit_vector(n, m)), x))
            .collect();
        alpha_cols.push(dual.coordinates(&Matrix::from_columns(f, da, &cols))?);
    }
    let alpha = Matrix::from_columns(f, dual.basis.len(), &alpha_cols);
    let inv_cols: Vec<_> = dual.basis.iter().map(|m| m.mul_vec(&sys.z)).collect();
    let alpha_inv = Matrix::from_columns(f, da, &inv_cols);
    let trace = rc.chi.mul(&alpha);
    let q = rc.q();

    let mut report = Report::new();
    let image = alpha.image();
    let ch = report.check("alpha_image_is_q", "image(α) = Q");
    ch.expect(image == q, subspace_difference(&image, &q), || format!("image(α) has dimension {}, Q has dimension {}", image.dim(), q.dim()));
    let ch = report.check("alpha_inverse_left", "α⁻¹(α(a)) = a");
    let round = alpha_inv.mul(&alpha);
    for k in 0..da {
        ch.expect(round.column(k) == a.basis_element(k), vec![k], || format!("α⁻¹(α(a{k})) = {}", fmt_vec(&round.column(k))));
    }
    let ch = report.check("alpha_inverse_right", "α(α⁻¹(q)) = q on Q");
    for (k, qv) in q.basis_vectors().iter().enumerate() {
        let back = alpha.mul_vec(&alpha_inv.mul_vec(qv));
        ch.expect(&back == qv, vec![k], || format!("α(α⁻¹(q{k})) = {}", fmt_vec(&back)));
    }
    let ch = report.check("q_characterization", "Q = {q : c₁q(c₂) = q(c)x}");
    let q_direct = q_by_comultiplication(c, dual);
    ch.expect(q_direct == q, subspace_difference(&q_direct, &q), || format!("characterized space has dimension {}, Q has {}", q_direct.dim(), q.dim()));
    let ch = report.check("trace_formula", "χ(α(a)) = θ(xa ⊗ x)");
    for k in 0..da {
        let direct = sys.theta_of(c, &cm.right_action_of(&a.basis_element(k)).mul_vec(x), x);
        ch.expect(direct == trace.column(k), vec![k], || {
            format!("θ(x a{k} ⊗ x) = {}, χ(α(a{k})) = {}", fmt_vec(&direct), fmt_vec(&trace.column(k)))
        });
    }
    let b = rc.b();
    let ch = report.check("trace_in_b", "tr(A) ⊆ B");
    for k in 0..da {
        ch.expect(b.contains(&trace.column(k)), vec![k], || format!("tr(a{k}) is not in B"));
    }
    Ok(CoringTrace {
        alpha,
        alpha_inv,
        trace,
        q,
        report,
    })
}

/// `{q ∈ *C : c₁ q(c₂) = q(c) x for every c}`.
pub fn q_by_comultiplication(c: &CoringPresentation, dual: &DualRing) -> Subspace {
    let cm = c.bimodule();
    let cc = c.tensor();
    let f = c.field();
    let n = cm.dim();
    let deltas: Vec<_> = (0..n).map(|k| pure_terms(cc, &c.comul().column(k))).collect();
    let cols: Vec<Vec<Scalar>> = dual
        .basis
        .iter()
        .map(|q| {
            let mut out = Vec::with_capacity(n * n);
            for (k, terms) in deltas.iter().enumerate() {
                let mut v = vector::scale(&cm.left_action_of(&q.column(k)).mul_vec(&dual.x), &f.from_i64(-1));
                for (s, p, r) in terms {
                    vector::axpy(&mut v, s, &cm.right_action_of(&q.column(*r)).mul_vec(&f.unit_vector(n, *p)));
                }
                out.extend(v);
            }
            out
        })
        .collect();
    Matrix::from_columns(f, n * n, &cols).kernel()
}

/// Checks that the dual ring's invariant ring contains the coinvariants
/// (with equality for the finitely generated projective case).
pub fn coinvariants_report(c: &CoringPresentation, dual: &DualRing) -> Report {
    let co = c.coinvariants(&dual.x);
    let b = dual.character.b();
    let mut report = Report::new();
    let ch = report.check("coinvariants_in_b", "A^coC ⊆ B");
    ch.expect(co.is_subspace_of(&b), subspace_difference(&co, &b), || "a coinvariant is not invariant".into());
    let ch = report.check("coinvariants_equal_b", "A^coC = B");
    ch.expect(co == b, subspace_difference(&co, &b), || format!("A^coC has dimension {}, B has dimension {}", co.dim(), b.dim()));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn split_sweedler(f: FieldSpec) -> CoringPresentation {
        let a = Arc::new(corpus::split_algebra(f, 2));
        let j = AlgebraMap::unit_map(Arc::new(Algebra::base(f)), a).unwrap();
        CoringPresentation::sweedler(&j).unwrap()
    }

    #[test]
    fn trivial_coring() {
        let f = FieldSpec::Prime(3);
        let a = Arc::new(corpus::upper_triangular(f));
        let c = CoringPresentation::trivial(a.clone());
        assert!(c.verify().is_ok(), "{:?}", c.verify().first_failure());
        assert!(c.is_grouplike(a.unit()));
        assert!(!c.is_grouplike(&a.zero()));
        assert!(c.coinvariants(a.unit()).is_full());
        let dual = c.dual_ring(a.unit()).unwrap();
        assert_eq!(dual.basis.len(), 3);
        assert!(dual.character.verify().is_ok());
        let sys = FrobeniusCoringSystem::trivial(&c).unwrap();
        assert!(sys.verify(&c).is_ok(), "{:?}", sys.verify(&c).first_failure());
        let tr = coring_alpha_trace(&c, &sys, &dual).unwrap();
        assert!(tr.report.is_ok(), "{:?}", tr.report.first_failure());
        assert_eq!(tr.trace, Matrix::identity(f, 3));
    }

    #[test]
    fn one_dimensional_dual() {
        let f = FieldSpec::Prime(3);
        let c = CoringPresentation::trivial(Arc::new(Algebra::base(f)));
        let dual = c.dual_ring(&[f.one()]).unwrap();
        assert_eq!(dual.character.r().table(), Algebra::base(f).table());
    }

    #[test]
    fn sweedler_coring_of_split_algebra() {
        for f in [FieldSpec::Prime(2), FieldSpec::Prime(3)] {
            let c = split_sweedler(f);
            assert_eq!(c.bimodule().dim(), 4);
            assert!(c.verify().is_ok(), "{:?}", c.verify().first_failure());
            let a = c.algebra().clone();
            let ab_one = pure_one(&c);
            assert!(c.is_grouplike(&ab_one));
            let dual = c.dual_ring(&ab_one).unwrap();
            assert_eq!(dual.basis.len(), 4);
            assert!(dual.character.r().check().is_ok());
            assert!(dual.character.verify().is_ok(), "{:?}", dual.character.verify().first_failure());
            let diag = Subspace::span(f, 2, [a.unit().to_vec()]);
            assert_eq!(c.coinvariants(&ab_one), diag);
            assert!(coinvariants_report(&c, &dual).is_ok());

            let fd = corpus::split_frobenius_algebra(f, 2);
            let sys = FrobeniusCoringSystem::sweedler(&c, &fd).unwrap();
            assert!(sys.verify(&c).is_ok(), "{:?}", sys.verify(&c).first_failure());
            let tr = coring_alpha_trace(&c, &sys, &dual).unwrap();
            assert!(tr.report.is_ok(), "{:?}", tr.report.first_failure());
            assert_eq!(tr.trace.mul_vec(&[f.one(), f.zero()]), a.unit());
            assert_eq!(tr.trace.mul_vec(&a.zero()), a.zero());

            let bad = sys.scaled(&f.zero()).verify(&c);
            assert_eq!(bad.first_failure().unwrap().0, "theta_normalized");
        }
    }

    #[test]
    fn tampered_counit_is_rejected() {
        let f = FieldSpec::Prime(2);
        let c = split_sweedler(f);
        let bad = c.with_counit(Matrix::zeros(f, 2, 4)).unwrap();
        let r = bad.verify();
        let (name, fail) = r.first_failure().unwrap();
        assert_eq!(name, "counit_laws");
        assert_eq!(fail.indices, vec![0, 0]);
    }

    fn pure_one(c: &CoringPresentation) -> Vec<Scalar> {
        let a = c.algebra();
        let f = c.field();
        let unit = AlgebraMap::unit_map(Arc::new(Algebra::base(f)), a.clone()).unwrap();
        let left = Bimodule::ring(a.clone(), None, Some(&unit));
        let right = Bimodule::ring(a.clone(), Some(&unit), None);
        TensorOverA::new(&left, &right).unwrap().pure(a.unit(), a.unit())
    }
}
