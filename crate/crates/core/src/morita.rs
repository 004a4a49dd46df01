//! Strict Morita contexts `(A, A, I, J, f, g)`, `I`-Frobenius systems
//! `(e, ν̄)` on an `A`-ring, and the isomorphism `α: J → Q` with inverse `β`
//! and trace map `tr = χ∘α`.
//!
//! `e` lives in `(R ⊗_A I) ⊗_A R` in canonical quotient coordinates and
//! `ν̄` is a matrix on `R ⊗_A I`.

use std::sync::Arc;

use crate::algebra::{same_algebra, Algebra};
use crate::character::{fmt_vec, solve_in_subspace, ARing, ARingWithCharacter, Handedness};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vector, Matrix};
use crate::module::Bimodule;
use crate::report::{differing_coordinate, first_nonzero, singular_witness, subspace_difference, Report};
use crate::subspace::Subspace;
use crate::tensor::TensorOverA;

/// Splits a balanced-tensor vector into weighted pure tensors of basis
/// elements `(c, i, j)` meaning `Σ c·b_i ⊗ b_j`, through the canonical lift.
pub fn pure_terms(t: &TensorOverA, x: &[Scalar]) -> Vec<(Scalar, usize, usize)> {
    let dn = t.factors().1.dim();
    t.lift(x)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (c, k / dn, k % dn))
        .collect()
}

#[derive(Clone, Debug)]
pub struct MoritaContext {
    a: Arc<Algebra>,
    i_mod: Bimodule,
    j_mod: Bimodule,
    ij: TensorOverA,
    ji: TensorOverA,
    f: Matrix,
    g: Matrix,
    f_inv_one: Vec<Scalar>,
}

impl MoritaContext {
    /// `f: I ⊗_A J → A` and `g: J ⊗_A I → A` as matrices on the balanced
    /// tensors, and `f⁻¹(1)` in `I ⊗_A J` coordinates.
    pub fn new(i_mod: Bimodule, j_mod: Bimodule, f: Matrix, g: Matrix, f_inv_one: Vec<Scalar>) -> Result<Self> {
        let a = i_mod.left_algebra().clone();
        for (name, m) in [("I", &i_mod), ("J", &j_mod)] {
            if !same_algebra(m.left_algebra(), &a) || !same_algebra(m.right_algebra(), &a) {
                return Err(Error::AlgebraMismatch(format!("{name} must be an A-bimodule")));
            }
        }
        let ij = TensorOverA::new(&i_mod, &j_mod)?;
        let ji = TensorOverA::new(&j_mod, &i_mod)?;
        let shape = |name: &str, m: &Matrix, cols: usize| -> Result<()> {
            if m.rows() != a.dim() || m.cols() != cols {
                return Err(Error::schema(
                    name,
                    format!("expected {}x{}, found {}x{}", a.dim(), cols, m.rows(), m.cols()),
                ));
            }
            Ok(())
        };
        shape("f", &f, ij.dim())?;
        shape("g", &g, ji.dim())?;
        if f_inv_one.len() != ij.dim() {
            return Err(Error::schema(
                "f_inv_one",
                format!("expected {} coordinates, found {}", ij.dim(), f_inv_one.len()),
            ));
        }
        Ok(MoritaContext {
            a,
            i_mod,
            j_mod,
            ij,
            ji,
            f,
            g,
            f_inv_one,
        })
    }

    /// `I = J = A` with `f` and `g` induced by multiplication.
    pub fn trivial(a: Arc<Algebra>) -> Self {
        let reg = Bimodule::regular(a.clone());
        let t = TensorOverA::new(&reg, &reg).expect("regular bimodules");
        let mult = t.descend_fn(a.dim(), |x, y| a.product(x, y).to_vec()).expect("multiplication is balanced");
        let one = t.pure(a.unit(), a.unit());
        MoritaContext::new(reg.clone(), reg, mult.clone(), mult, one).expect("consistent shapes")
    }

    /// Builds `f` and `g` from their values on basis pure tensors and
    /// computes `f⁻¹(1)`.
    pub fn from_pairings(
        i_mod: Bimodule,
        j_mod: Bimodule,
        f: impl Fn(usize, usize) -> Vec<Scalar>,
        g: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let ij = TensorOverA::new(&i_mod, &j_mod)?;
        let ji = TensorOverA::new(&j_mod, &i_mod)?;
        let a = i_mod.left_algebra().clone();
        let fm = ij.descend_fn(a.dim(), f)?;
        let gm = ji.descend_fn(a.dim(), g)?;
        let one = fm
            .solve(a.unit())?
            .ok_or_else(|| Error::Invalid("1_A is not in the image of f".into()))?;
        MoritaContext::new(i_mod, j_mod, fm, gm, one)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.a
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    pub fn i_mod(&self) -> &Bimodule {
        &self.i_mod
    }

    pub fn j_mod(&self) -> &Bimodule {
        &self.j_mod
    }

    pub fn ij(&self) -> &TensorOverA {
        &self.ij
    }

    pub fn ji(&self) -> &TensorOverA {
        &self.ji
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn g(&self) -> &Matrix {
        &self.g
    }

    pub fn f_inv_one(&self) -> &[Scalar] {
        &self.f_inv_one
    }

    /// `f(u ⊗ v)`.
    pub fn f_of(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.f.mul_vec(&self.ij.pure(u, v))
    }

    /// `g(v ⊗ u)`.
    pub fn g_of(&self, v: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        self.g.mul_vec(&self.ji.pure(v, u))
    }

    /// `f⁻¹(1) = Σ u_i ⊗ v_i` as weighted basis pairs.
    pub fn f_inv_terms(&self) -> Vec<(Scalar, usize, usize)> {
        pure_terms(&self.ij, &self.f_inv_one)
    }

    pub fn verify(&self) -> Report {
        let mut report = Report::new();
        report.merge("I", self.i_mod.check());
        report.merge("J", self.j_mod.check());
        let a = &self.a;
        let (di, dj) = (self.i_mod.dim(), self.j_mod.dim());
        let f = self.field();

        for (name, map, t) in [("f", &self.f, &self.ij), ("g", &self.g, &self.ji)] {
            let c = report.check(&format!("{name}_bimodule_map"), "a·x·b maps to a·(value)·b");
            for k in 0..a.dim() {
                let ek = a.basis_element(k);
                let left = map.mul(&t.total().left_action_of(&ek)) == a.left_mul_matrix(&ek).mul(map);
                let right = map.mul(&t.total().right_action_of(&ek)) == a.right_mul_matrix(&ek).mul(map);
                c.expect(left && right, vec![k], || format!("{name} does not commute with basis element {k} of A"));
            }
            let c = report.check(&format!("{name}_bijective"), "strict context: the pairing is bijective");
            c.expect(map.is_square() && map.inverse().is_some(), singular_witness(map), || {
                format!("{name} is a {}x{} matrix of rank {}", map.rows(), map.cols(), map.rank())
            });
        }

        let c = report.check("associativity_i", "f(u⊗v)u' = u g(v⊗u')");
        for u in 0..di {
            let eu = f.unit_vector(di, u);
            for v in 0..dj {
                let ev = f.unit_vector(dj, v);
                let fuv = self.f_of(&eu, &ev);
                for u2 in 0..di {
                    let eu2 = f.unit_vector(di, u2);
                    let lhs = self.i_mod.left_action_of(&fuv).mul_vec(&eu2);
                    let rhs = self.i_mod.right_action_of(&self.g_of(&ev, &eu2)).mul_vec(&eu);
                    c.expect(lhs == rhs, vec![u, v, u2], || {
                        format!("f(u{u}⊗v{v})u{u2} = {} but u{u}g(v{v}⊗u{u2}) = {}", fmt_vec(&lhs), fmt_vec(&rhs))
                    });
                }
            }
        }
        let c = report.check("associativity_j", "g(v⊗u)v' = v f(u⊗v')");
        for v in 0..dj {
            let ev = f.unit_vector(dj, v);
            for u in 0..di {
                let eu = f.unit_vector(di, u);
                let gvu = self.g_of(&ev, &eu);
                for v2 in 0..dj {
                    let ev2 = f.unit_vector(dj, v2);
                    let lhs = self.j_mod.left_action_of(&gvu).mul_vec(&ev2);
                    let rhs = self.j_mod.right_action_of(&self.f_of(&eu, &ev2)).mul_vec(&ev);
                    c.expect(lhs == rhs, vec![v, u, v2], || {
                        format!("g(v{v}⊗u{u})v{v2} = {} but v{v}f(u{u}⊗v{v2}) = {}", fmt_vec(&lhs), fmt_vec(&rhs))
                    });
                }
            }
        }

        let c = report.check("f_inv_one", "f(Σ u_i⊗v_i) = 1_A");
        let got = self.f.mul_vec(&self.f_inv_one);
        c.expect(got == a.unit(), differing_coordinate(&got, a.unit()), || format!("f(f_inv_one) = {}", fmt_vec(&got)));

        let c = report.check("f_inv_one_central", "Σ a u_i⊗v_i = Σ u_i⊗v_i a");
        for k in 0..a.dim() {
            let ek = a.basis_element(k);
            let lhs = self.ij.total().left_action_of(&ek).mul_vec(&self.f_inv_one);
            let rhs = self.ij.total().right_action_of(&ek).mul_vec(&self.f_inv_one);
            c.expect(lhs == rhs, vec![k], || format!("basis element {k} of A does not commute with f⁻¹(1)"));
        }
        report
    }
}

/// An `I`-Frobenius system `(e, ν̄)` on an `A`-ring `R`.
#[derive(Clone, Debug)]
pub struct FrobeniusSystem {
    context: MoritaContext,
    ring: ARing,
    t1: TensorOverA,
    t: TensorOverA,
    e: Vec<Scalar>,
    nu: Matrix,
}

impl FrobeniusSystem {
    pub fn new(context: MoritaContext, ring: ARing, e: Vec<Scalar>, nu: Matrix) -> Result<Self> {
        if !same_algebra(context.algebra(), &ring.a) {
            return Err(Error::AlgebraMismatch("context and ring are over different algebras".into()));
        }
        let r_left = Bimodule::ring(ring.r.clone(), None, Some(&ring.i));
        let r_right = Bimodule::ring(ring.r.clone(), Some(&ring.i), None);
        let t1 = TensorOverA::new(&r_left, context.i_mod())?;
        let t = TensorOverA::new(t1.total(), &r_right)?;
        if e.len() != t.dim() {
            return Err(Error::schema("e", format!("expected {} coordinates, found {}", t.dim(), e.len())));
        }
        if nu.rows() != ring.a.dim() || nu.cols() != t1.dim() {
            return Err(Error::schema(
                "nu",
                format!("expected {}x{}, found {}x{}", ring.a.dim(), t1.dim(), nu.rows(), nu.cols()),
            ));
        }
        Ok(FrobeniusSystem {
            context,
            ring,
            t1,
            t,
            e,
            nu,
        })
    }

    /// Classical system (`I = A`) from `e = Σ c·r ⊗ s` and a functional
    /// `ν̄: R → A` (matrix `dim A × dim R`), via `R ⊗_A A ≅ R`.
    pub fn classical(ring: ARing, e_terms: &[(Vec<Scalar>, Vec<Scalar>)], nu_on_r: &Matrix) -> Result<Self> {
        let context = MoritaContext::trivial(ring.a.clone());
        let probe = FrobeniusSystem::shell(context.clone(), ring.clone())?;
        let a = ring.a.clone();
        let mut e = ring.a.field().zeros(probe.t.dim());
        for (r, s) in e_terms {
            e = vector::add(&e, &probe.pure3(r, a.unit(), s));
        }
        let nu = probe.t1.descend_fn(a.dim(), |x, y| {
            let r = ring.r.mul(&ring.r.basis_element(x), &ring.i.apply(&a.basis_element(y)));
            nu_on_r.mul_vec(&r)
        })?;
        FrobeniusSystem::new(context, ring, e, nu)
    }

    /// A system with zero `e` and `ν̄`, used to access the tensor coordinates.
    pub fn shell(context: MoritaContext, ring: ARing) -> Result<Self> {
        let r_left = Bimodule::ring(ring.r.clone(), None, Some(&ring.i));
        let r_right = Bimodule::ring(ring.r.clone(), Some(&ring.i), None);
        let t1 = TensorOverA::new(&r_left, context.i_mod())?;
        let t = TensorOverA::new(t1.total(), &r_right)?;
        let f = ring.a.field();
        let e = f.zeros(t.dim());
        let nu = Matrix::zeros(f, ring.a.dim(), t1.dim());
        FrobeniusSystem::new(context, ring, e, nu)
    }

    /// `R = A`, `I = A`, `e = 1⊗1⊗1`, `ν̄` = multiplication.
    pub fn trivial(a: Arc<Algebra>) -> Self {
        let ring = ARing::trivial(a.clone());
        let id = Matrix::identity(a.field(), a.dim());
        FrobeniusSystem::classical(ring, &[(a.unit().to_vec(), a.unit().to_vec())], &id)
            .expect("trivial system is well formed")
    }

    pub fn with_e(&self, e: Vec<Scalar>) -> Result<Self> {
        FrobeniusSystem::new(self.context.clone(), self.ring.clone(), e, self.nu.clone())
    }

    pub fn with_nu(&self, nu: Matrix) -> Result<Self> {
        FrobeniusSystem::new(self.context.clone(), self.ring.clone(), self.e.clone(), nu)
    }

    pub fn context(&self) -> &MoritaContext {
        &self.context
    }

    pub fn ring(&self) -> &ARing {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    /// `R ⊗_A I`.
    pub fn t1(&self) -> &TensorOverA {
        &self.t1
    }

    /// `(R ⊗_A I) ⊗_A R`.
    pub fn t(&self) -> &TensorOverA {
        &self.t
    }

    pub fn e(&self) -> &[Scalar] {
        &self.e
    }

    pub fn nu(&self) -> &Matrix {
        &self.nu
    }

    pub fn pure_t1(&self, r: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        self.t1.pure(r, u)
    }

    /// `r ⊗ u ⊗ s`.
    pub fn pure3(&self, r: &[Scalar], u: &[Scalar], s: &[Scalar]) -> Vec<Scalar> {
        self.t.pure(&self.t1.pure(r, u), s)
    }

    /// `ν̄(r ⊗ u)`.
    pub fn nu_of(&self, r: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        self.nu.mul_vec(&self.pure_t1(r, u))
    }

    /// `e` as weighted basis triples `(c, r, u, s)` through the canonical lifts.
    pub fn e_terms(&self) -> Vec<(Scalar, usize, usize, usize)> {
        let di = self.context.i_mod().dim();
        let mut out = Vec::new();
        for (c, j, s) in pure_terms(&self.t, &self.e) {
            for (idx, d) in self.t1.lift(&self.field().unit_vector(self.t1.dim(), j)).into_iter().enumerate() {
                if !d.is_zero() {
                    out.push((&c * &d, idx / di, idx % di, s));
                }
            }
        }
        out
    }

    pub fn verify(&self) -> Report {
        let mut report = Report::new();
        report.merge("context", self.context.verify());
        let (a, r, i) = (&self.ring.a, &self.ring.r, &self.ring.i);
        let f = self.field();
        let di = self.context.i_mod().dim();

        let c = report.check("nu_bimodule_map", "ν̄(a·x·b) = a·ν̄(x)·b");
        for k in 0..a.dim() {
            let ek = a.basis_element(k);
            let left = self.nu.mul(&self.t1.total().left_action_of(&i.apply(&ek))) == a.left_mul_matrix(&ek).mul(&self.nu);
            let right = self.nu.mul(&self.t1.total().right_action_of(&ek)) == a.right_mul_matrix(&ek).mul(&self.nu);
            c.expect(left && right, vec![k], || format!("ν̄ does not commute with basis element {k} of A"));
        }

        let c = report.check("e_central", "r·e = e·r");
        for k in 0..r.dim() {
            let ek = r.basis_element(k);
            let lhs = self.t.total().left_action_of(&ek).mul_vec(&self.e);
            let rhs = self.t.total().right_action_of(&ek).mul_vec(&self.e);
            c.expect(lhs == rhs, vec![k], || format!("basis element {k} of R does not commute with e"));
        }

        let c = report.check("nu_e_unit", "ν̄(e¹⊗u¹)e² = 1_R");
        match self.t.descend_fn(r.dim(), |j, s| {
            let nu_j = self.nu.column(j);
            r.mul(&i.apply(&nu_j), &r.basis_element(s))
        }) {
            Ok(phi) => {
                let got = phi.mul_vec(&self.e);
                c.expect(got == r.unit(), differing_coordinate(&got, r.unit()), || format!("ν̄(e¹⊗u¹)e² = {}", fmt_vec(&got)));
            }
            Err(err) => c.fail(err.indices(), err.to_string()),
        }

        let c = report.check("e_nu_unit", "e¹⊗u¹ν̄(e²⊗u) = 1_R⊗u");
        for u in 0..di {
            let eu = f.unit_vector(di, u);
            let psi = self.t.descend_fn(self.t1.dim(), |j, s| {
                let nu_su = self.nu_of(&r.basis_element(s), &eu);
                self.t1.total().right_action_of(&nu_su).column(j)
            });
            match psi {
                Ok(psi) => {
                    let lhs = psi.mul_vec(&self.e);
                    let rhs = self.pure_t1(r.unit(), &eu);
                    c.expect(lhs == rhs, vec![u], || {
                        format!("e¹⊗u¹ν̄(e²⊗u{u}) = {} but 1⊗u{u} = {}", fmt_vec(&lhs), fmt_vec(&rhs))
                    });
                }
                Err(err) => c.fail(vec![u], err.to_string()),
            }
        }
        report
    }
}

/// `α: J → Q`, `β: R → J` (inverse to `α` on `Q`), and `tr = χ∘α: J → A`.
#[derive(Clone, Debug)]
pub struct TraceData {
    /// `dim R × dim J`.
    pub alpha: Matrix,
    /// `dim J × dim R`; only its restriction to `Q` is meaningful.
    pub beta: Matrix,
    /// `dim A × dim J`.
    pub trace: Matrix,
    pub q: Subspace,
    pub b: Subspace,
    pub report: Report,
}

impl TraceData {
    /// Requires a right-handed character on the system's ring.
    pub fn compute(sys: &FrobeniusSystem, rc: &ARingWithCharacter) -> Result<Self> {
        if rc.handedness != Handedness::Right {
            return Err(Error::Invalid("trace data needs a right-handed character; use the transported system".into()));
        }
        if !same_algebra(&rc.ring.r, &sys.ring.r)
            || !same_algebra(&rc.ring.a, &sys.ring.a)
            || rc.ring.i.matrix() != sys.ring.i.matrix()
        {
            return Err(Error::AlgebraMismatch("character is on a different A-ring".into()));
        }
        let ctx = &sys.context;
        let (a, r) = (&sys.ring.a, &sys.ring.r);
        let f = sys.field();
        let (di, dj) = (ctx.i_mod().dim(), ctx.j_mod().dim());

        let mut alpha_cols = Vec::with_capacity(dj);
        for v in 0..dj {
            let ev = f.unit_vector(dj, v);
            let g_hat = sys.t1.descend_fn(a.dim(), |x, u| {
                let chi_r = rc.chi_of(&r.basis_element(x));
                let moved = ctx.i_mod().left_action_of(&chi_r).mul_vec(&f.unit_vector(di, u));
                ctx.g_of(&ev, &moved)
            })?;
            let m_v = sys
                .t
                .descend_fn(r.dim(), |j, s| r.mul(&sys.ring.i.apply(&g_hat.column(j)), &r.basis_element(s)))?;
            alpha_cols.push(m_v.mul_vec(&sys.e));
        }
        let alpha = Matrix::from_columns(f, r.dim(), &alpha_cols);

        let terms = ctx.f_inv_terms();
        let beta_cols: Vec<Vec<Scalar>> = (0..r.dim())
            .map(|x| {
                let mut out = f.zeros(dj);
                for (c, u, v) in &terms {
                    let nu = sys.nu_of(&r.basis_element(x), &f.unit_vector(di, *u));
                    let w = ctx.j_mod().left_action_of(&nu).mul_vec(&f.unit_vector(dj, *v));
                    vector::axpy(&mut out, c, &w);
                }
                out
            })
            .collect();
        let beta = Matrix::from_columns(f, dj, &beta_cols);
        let trace = rc.chi.mul(&alpha);
        let q = rc.q();
        let b = rc.b();

        let mut td = TraceData {
            alpha,
            beta,
            trace,
            q,
            b,
            report: Report::new(),
        };
        td.report = td.verify(sys, rc);
        Ok(td)
    }

    fn verify(&self, sys: &FrobeniusSystem, rc: &ARingWithCharacter) -> Report {
        let mut report = Report::new();
        let ctx = &sys.context;
        let (a, r) = (&sys.ring.a, &sys.ring.r);
        let f = sys.field();
        let dj = ctx.j_mod().dim();

        let c = report.check("alpha_image_is_q", "image(α) = Q");
        let image = self.alpha.image();
        c.expect(image == self.q, subspace_difference(&image, &self.q), || {
            format!("image(α) has dimension {}, Q has dimension {}", image.dim(), self.q.dim())
        });

        let c = report.check("beta_after_alpha", "β(α(v)) = v");
        let ba = self.beta.mul(&self.alpha);
        for v in 0..dj {
            c.expect(ba.column(v) == f.unit_vector(dj, v), vec![v], || format!("β(α(v{v})) = {}", fmt_vec(&ba.column(v))));
        }

        let c = report.check("alpha_after_beta", "α(β(q)) = q on Q");
        for (k, qv) in self.q.basis_vectors().iter().enumerate() {
            let back = self.alpha.mul_vec(&self.beta.mul_vec(qv));
            c.expect(back == *qv, vec![k], || format!("α(β(q{k})) = {}", fmt_vec(&back)));
        }

        let c = report.check("trace_in_b", "tr(J) ⊆ B");
        for v in 0..dj {
            let t = self.trace.column(v);
            c.expect(self.b.contains(&t), vec![v], || format!("tr(v{v}) = {} is not in B", fmt_vec(&t)));
        }

        let bv = self.b.basis_vectors();
        let c = report.check("alpha_right_b_linear", "α(v·b) = α(v)·b");
        for v in 0..dj {
            let ev = f.unit_vector(dj, v);
            for (k, b) in bv.iter().enumerate() {
                let lhs = self.alpha.mul_vec(&ctx.j_mod().right_action_of(b).mul_vec(&ev));
                let rhs = r.mul(&self.alpha.column(v), &sys.ring.i.apply(b));
                c.expect(lhs == rhs, vec![v, k], || format!("α(v{v}·b{k}) ≠ α(v{v})·b{k}"));
            }
        }
        let c = report.check("trace_b_bimodule", "tr(v·b) = tr(v)·b and tr(b·v) = b·tr(v)");
        for v in 0..dj {
            let ev = f.unit_vector(dj, v);
            for (k, b) in bv.iter().enumerate() {
                let right = self.trace.mul_vec(&ctx.j_mod().right_action_of(b).mul_vec(&ev)) == a.mul(&self.trace.column(v), b);
                let left = self.trace.mul_vec(&ctx.j_mod().left_action_of(b).mul_vec(&ev)) == a.mul(b, &self.trace.column(v));
                c.expect(right && left, vec![v, k], || format!("tr is not B-linear at v{v}, b{k}"));
            }
        }

        let c = report.check("left_action_formula", "β(r·α(v)) = Σ ν̄(r g(v⊗χ(e¹)u¹)e² ⊗ u_i)v_i");
        for x in 0..r.dim() {
            let er = r.basis_element(x);
            for v in 0..dj {
                let ev = f.unit_vector(dj, v);
                let transported = self.left_action(sys, &er, &ev);
                let printed = left_action_printed(sys, rc, &er, &ev);
                c.expect(transported == printed, vec![x, v], || {
                    format!("r{x}·v{v}: transport gives {}, formula gives {}", fmt_vec(&transported), fmt_vec(&printed))
                });
            }
        }
        let c = report.check("left_action_module", "(rs)·v = r·(s·v) and 1·v = v");
        for v in 0..dj {
            let ev = f.unit_vector(dj, v);
            c.expect(self.left_action(sys, r.unit(), &ev) == ev, vec![v], || format!("1·v{v} ≠ v{v}"));
            for x in 0..r.dim() {
                for y in 0..r.dim() {
                    let (ex, ey) = (r.basis_element(x), r.basis_element(y));
                    let lhs = self.left_action(sys, &r.mul(&ex, &ey), &ev);
                    let rhs = self.left_action(sys, &ex, &self.left_action(sys, &ey, &ev));
                    c.expect(lhs == rhs, vec![x, y, v], || format!("(r{x}r{y})·v{v} ≠ r{x}·(r{y}·v{v})"));
                }
            }
        }

        let c = report.check("trace_one_iff_projective", "∃v: tr(v) = 1 ⟺ ∃q ∈ Q: χ(q) = 1");
        let w = self.trace_one_witness(a.unit());
        let p = rc.projectivity_witness();
        let found = w.as_ref().or(p.as_ref()).map(|v| first_nonzero(v)).unwrap_or_default();
        c.expect(w.is_some() == p.is_some(), found, || {
            format!("trace-1 witness {:?} but projectivity witness {:?}", w.is_some(), p.is_some())
        });
        if let Some(w) = w {
            let q = self.alpha.mul_vec(&w);
            let chi_q = rc.chi_of(&q);
            c.expect(self.q.contains(&q) && chi_q == a.unit(), differing_coordinate(&chi_q, a.unit()).into_iter().chain(first_nonzero(&self.q.reduce(&q))).take(1).collect::<Vec<_>>(), || {
                "α of the trace-1 witness is not a projectivity witness".into()
            });
        }
        report
    }

    /// `r·v = β(r·α(v))`.
    pub fn left_action(&self, sys: &FrobeniusSystem, r: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let ring = &sys.ring.r;
        self.beta.mul_vec(&ring.mul(r, &self.alpha.mul_vec(v)))
    }

    pub fn alpha_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.alpha.mul_vec(v)
    }

    pub fn beta_of(&self, q: &Subspace, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if !q.contains(x) {
            return Err(Error::NotInSubspace("β is defined on Q".into()));
        }
        Ok(self.beta.mul_vec(x))
    }

    pub fn trace_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.trace.mul_vec(v)
    }

    /// Canonical `v` with `tr(v) = 1_A`.
    pub fn trace_one_witness(&self, one: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.trace.field();
        let all = Subspace::full(f, self.trace.cols());
        solve_in_subspace(&self.trace, &all, one)
    }
}

/// `r·v = Σ_i ν̄(r g(v⊗χ(e¹)u¹)e² ⊗ u_i) v_i`, evaluated term by term on
/// the canonical lifts of `e` and `f⁻¹(1)`.
pub fn left_action_printed(sys: &FrobeniusSystem, rc: &ARingWithCharacter, r: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let ctx = &sys.context;
    let ring = &sys.ring.r;
    let f = sys.field();
    let (di, dj) = (ctx.i_mod().dim(), ctx.j_mod().dim());
    // x = r g(v⊗χ(e¹)u¹)e² ∈ R
    let mut x = f.zeros(ring.dim());
    for (c, e1, u1, e2) in sys.e_terms() {
        let chi = rc.chi_of(&ring.basis_element(e1));
        let moved = ctx.i_mod().left_action_of(&chi).mul_vec(&f.unit_vector(di, u1));
        let g = ctx.g_of(v, &moved);
        let term = ring.mul(&ring.mul(r, &sys.ring.i.apply(&g)), &ring.basis_element(e2));
        vector::axpy(&mut x, &c, &term);
    }
    let mut out = f.zeros(dj);
    for (c, u, w) in ctx.f_inv_terms() {
        let nu = sys.nu_of(&x, &f.unit_vector(di, u));
        let term = ctx.j_mod().left_action_of(&nu).mul_vec(&f.unit_vector(dj, w));
        vector::axpy(&mut out, &c, &term);
    }
    out
}
