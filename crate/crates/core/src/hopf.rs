//! Finite-dimensional Hopf algebras over a field, their integrals, module
//! algebras and smash products.
//!
//! `Δ` is stored as an `n² × n` matrix whose column `k` holds the
//! coordinates of `Δ(b_k)` in `H ⊗ H` (index `x * n + y`). The smash
//! product `A # H` has basis `a # h` at index `a * dim H + h`.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMap};
use crate::character::{fmt_vec, solve_in_subspace, ARing, ARingWithCharacter, Handedness};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{vector, Matrix};
use crate::morita::{FrobeniusSystem, TraceData};
use crate::report::{differing_coordinate, differing_entry, singular_witness, subspace_difference, Report};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    algebra: Arc<Algebra>,
    comul: Matrix,
    counit: Vec<Scalar>,
    antipode: Matrix,
}

impl HopfPresentation {
    pub fn new(algebra: Arc<Algebra>, comul: Matrix, counit: Vec<Scalar>, antipode: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if comul.rows() != n * n || comul.cols() != n {
            return Err(Error::schema("comul", format!("expected {}x{n}, found {}x{}", n * n, comul.rows(), comul.cols())));
        }
        if counit.len() != n {
            return Err(Error::schema("counit", format!("expected {n} entries, found {}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::schema("antipode", format!("expected {n}x{n}")));
        }
        Ok(HopfPresentation {
            algebra,
            comul,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn comul(&self) -> &Matrix {
        &self.comul
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn delta(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.comul.mul_vec(h)
    }

    pub fn epsilon(&self, h: &[Scalar]) -> Scalar {
        vector::dot(&self.counit, h)
    }

    /// Nonzero terms `(c, x, y)` of `Δ(h) = Σ c b_x ⊗ b_y`.
    pub fn delta_terms(&self, h: &[Scalar]) -> Vec<(Scalar, usize, usize)> {
        let n = self.dim();
        self.delta(h)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c, k / n, k % n))
            .collect()
    }

    fn mult_matrix(&self) -> Matrix {
        let h = &self.algebra;
        let n = h.dim();
        let cols: Vec<_> = (0..n * n).map(|k| h.product(k / n, k % n).to_vec()).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// Bialgebra and antipode axioms on basis elements.
    pub fn verify(&self) -> Report {
        let h = &self.algebra;
        let f = self.field();
        let n = h.dim();
        let id = Matrix::identity(f, n);
        let eps = Matrix::from_rows(f, n, vec![self.counit.clone()]);
        let mut report = Report::new();
        report.merge("algebra", h.check());

        let lhs = self.comul.kron(&id).mul(&self.comul);
        let rhs = id.kron(&self.comul).mul(&self.comul);
        let c = report.check("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ");
        for k in 0..n {
            c.expect(lhs.column(k) == rhs.column(k), vec![k], || format!("Δ is not coassociative on b{k}"));
        }
        let left = eps.kron(&id).mul(&self.comul);
        let right = id.kron(&eps).mul(&self.comul);
        let c = report.check("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ");
        for k in 0..n {
            let ek = f.unit_vector(n, k);
            c.expect(left.column(k) == ek && right.column(k) == ek, vec![k], || format!("counit law fails on b{k}"));
        }

        let hh = h.tensor(h).expect("same field");
        let c = report.check("comul_multiplicative", "Δ(xy) = Δ(x)Δ(y) and Δ(1) = 1⊗1");
        let one = vector::kron(h.unit(), h.unit());
        let d1 = self.delta(h.unit());
        c.expect(d1 == one, differing_coordinate(&d1, &one), || "Δ(1) ≠ 1⊗1".into());
        for x in 0..n {
            for y in 0..n {
                let l = self.delta(h.product(x, y));
                let r = hh.mul(&self.comul.column(x), &self.comul.column(y));
                c.expect(l == r, vec![x, y], || format!("Δ(b{x}b{y}) ≠ Δ(b{x})Δ(b{y})"));
            }
        }
        let c = report.check("counit_multiplicative", "ε(xy) = ε(x)ε(y) and ε(1) = 1");
        c.expect(self.epsilon(h.unit()).is_one(), differing_coordinate(&[self.epsilon(h.unit())], &[f.one()]), || "ε(1) ≠ 1".into());
        for x in 0..n {
            for y in 0..n {
                let l = self.epsilon(h.product(x, y));
                let r = &self.counit[x] * &self.counit[y];
                c.expect(l == r, vec![x, y], || format!("ε(b{x}b{y}) = {l}, ε(b{x})ε(b{y}) = {r}"));
            }
        }

        let m = self.mult_matrix();
        let s_left = m.mul(&self.antipode.kron(&id)).mul(&self.comul);
        let s_right = m.mul(&id.kron(&self.antipode)).mul(&self.comul);
        let c = report.check("antipode", "S(h₁)h₂ = ε(h)1 = h₁S(h₂)");
        for k in 0..n {
            let expected = vector::scale(h.unit(), &self.counit[k]);
            c.expect(s_left.column(k) == expected, vec![k, 0], || {
                format!("S(h₁)h₂ = {} for h = b{k}", fmt_vec(&s_left.column(k)))
            });
            c.expect(s_right.column(k) == expected, vec![k, 1], || {
                format!("h₁S(h₂) = {} for h = b{k}", fmt_vec(&s_right.column(k)))
            });
        }
        let c = report.check("antipode_invertible", "S is bijective");
        match self.antipode.inverse() {
            Some(inv) => {
                let round = inv.mul(&self.antipode);
                c.expect(round == id, differing_entry(&round, &id), || "S̄∘S ≠ id".into());
            }
            None => c.fail(singular_witness(&self.antipode), "S is singular"),
        }
        report
    }

    /// `S̄ = S⁻¹`.
    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode
            .inverse()
            .ok_or_else(|| Error::Invalid("the antipode is not invertible".into()))
    }

    /// The convolution algebra `H*` in the dual basis `δ_x`, with unit `ε`.
    pub fn dual_algebra(&self) -> Algebra {
        let n = self.dim();
        let names = self.algebra.basis_names().iter().map(|s| format!("δ[{s}]")).collect();
        Algebra::from_fn(self.field(), names, self.counit.clone(), |i, j| self.comul.row(i * n + j).to_vec())
    }

    /// `J = {t : ht = ε(h)t}` in `H`.
    pub fn left_integrals(&self) -> Subspace {
        left_integrals_in(&self.algebra, &self.counit)
    }

    /// Left integrals in `H*`; the counit of `H*` is evaluation at `1_H`.
    pub fn left_integrals_on(&self) -> Subspace {
        left_integrals_in(&self.dual_algebra(), self.algebra.unit())
    }

    /// Canonical `(φ, t)` with `⟨φ, t⟩ = 1`: `t` is the echelon generator of `J`
    /// and `φ` the echelon generator of `I` rescaled.
    pub fn integrals(&self) -> Result<IntegralData> {
        let j = self.left_integrals();
        let i = self.left_integrals_on();
        if j.dim() != 1 || i.dim() != 1 {
            return Err(Error::Invalid(format!(
                "integral spaces have dimensions {} (in H) and {} (on H), expected 1",
                j.dim(),
                i.dim()
            )));
        }
        let t = j.basis_vectors().remove(0);
        let phi0 = i.basis_vectors().remove(0);
        let p = vector::dot(&phi0, &t);
        let inv = p.inv().ok_or(Error::DegeneratePairing)?;
        let phi = vector::scale(&phi0, &inv);
        Ok(IntegralData { j, i, phi, t })
    }

    /// `(H, unit map, ε)` as a right-handed `k`-ring.
    pub fn counit_character(&self) -> ARingWithCharacter {
        let f = self.field();
        let k = Arc::new(Algebra::base(f));
        let unit = AlgebraMap::unit_map(k, self.algebra.clone()).expect("unit map");
        let chi = Matrix::from_rows(f, self.dim(), vec![self.counit.clone()]);
        ARingWithCharacter::new(ARing::new(unit).expect("unital"), chi, Handedness::Right).expect("shapes")
    }
}

fn left_integrals_in(alg: &Algebra, counit: &[Scalar]) -> Subspace {
    let f = alg.field();
    let n = alg.dim();
    let blocks: Vec<Matrix> = (0..n)
        .map(|x| {
            let lx = alg.left_mul_matrix(&alg.basis_element(x));
            lx.sub(&Matrix::identity(f, n).scale(&counit[x]))
        })
        .collect();
    Matrix::vstack(f, n, &blocks).kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    /// Left integrals in `H`.
    pub j: Subspace,
    /// Left integrals on `H`, as a subspace of `H*`.
    pub i: Subspace,
    pub phi: Vec<Scalar>,
    pub t: Vec<Scalar>,
}

impl IntegralData {
    pub fn pairing(&self, phi: &[Scalar], h: &[Scalar]) -> Scalar {
        vector::dot(phi, h)
    }
}

/// The Frobenius system of `H` over `k` built from a normalized integral pair:
/// `e = Σ t₂ ⊗ φ ⊗ S̄(t₁)` and `ν̄(h ⊗ φ') = ⟨φ, h⟩⟨φ', t⟩`.
///
/// `I` and `J` are one-dimensional and coordinatized by `φ` and `t`, so the
/// Morita context is the trivial one over `k`.
#[derive(Clone, Debug)]
pub struct HopfFrobenius {
    pub integrals: IntegralData,
    pub s_bar: Matrix,
    pub system: FrobeniusSystem,
    pub report: Report,
}

pub fn hopf_frobenius_system(h: &HopfPresentation) -> Result<HopfFrobenius> {
    let integrals = h.integrals()?;
    let s_bar = h.antipode_inverse()?;
    let alg = h.algebra();
    let f = h.field();
    let (phi, t) = (&integrals.phi, &integrals.t);
    let delta_t = h.delta_terms(t);
    let terms: Vec<_> = delta_t
        .iter()
        .map(|(c, x, y)| (vector::scale(&alg.basis_element(*y), c), s_bar.column(*x)))
        .collect();
    let ring = h.counit_character().ring;
    let nu = Matrix::from_rows(f, h.dim(), vec![phi.clone()]);
    let system = FrobeniusSystem::classical(ring, &terms, &nu)?;

    let mut report = Report::new();
    let s_bar_t = s_bar.mul_vec(t);
    let c = report.check("pairing_normalized", "⟨φ, t⟩ = 1");
    let p = integrals.pairing(phi, t);
    c.expect(p.is_one(), differing_coordinate(std::slice::from_ref(&p), &[f.one()]), || format!("⟨φ, t⟩ = {p}"));
    let c = report.check("pairing_antipode", "⟨φ, S̄(t)⟩ = 1");
    let ps = integrals.pairing(phi, &s_bar_t);
    c.expect(ps.is_one(), differing_coordinate(std::slice::from_ref(&ps), &[f.one()]), || format!("⟨φ, S̄(t)⟩ = {ps}"));
    let c = report.check("pairing_antipode_invariant", "⟨φ', t'⟩ = ⟨φ', S̄(t')⟩ on I × J");
    for (a, phi_b) in integrals.i.basis_vectors().iter().enumerate() {
        for (b, t_b) in integrals.j.basis_vectors().iter().enumerate() {
            let l = integrals.pairing(phi_b, t_b);
            let r = integrals.pairing(phi_b, &s_bar.mul_vec(t_b));
            c.expect(l == r, vec![a, b], || format!("{l} ≠ {r}"));
        }
    }
    let mut nu_e = f.zeros(h.dim());
    let mut e_nu = f.zeros(h.dim());
    for (c, x, y) in &delta_t {
        let w = c * &phi[*y];
        vector::axpy(&mut nu_e, &w, &s_bar.column(*x));
        let w = c * &integrals.pairing(phi, &s_bar.column(*x));
        vector::axpy(&mut e_nu, &w, &alg.basis_element(*y));
    }
    let c = report.check("nu_e_identity", "Σ ⟨φ, t₂⟩ S̄(t₁) = 1_H");
    c.expect(nu_e == alg.unit(), differing_coordinate(&nu_e, alg.unit()), || format!("Σ ⟨φ, t₂⟩ S̄(t₁) = {}", fmt_vec(&nu_e)));
    let c = report.check("e_nu_identity", "Σ t₂ ⟨φ, S̄(t₁)⟩ = 1_H");
    c.expect(e_nu == alg.unit(), differing_coordinate(&e_nu, alg.unit()), || format!("Σ t₂ ⟨φ, S̄(t₁)⟩ = {}", fmt_vec(&e_nu)));
    report.merge("system", system.verify());

    Ok(HopfFrobenius {
        integrals,
        s_bar,
        system,
        report,
    })
}

/// A left `H`-module algebra: `actions[x]` is the matrix of `a ↦ b_x · a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraAction {
    hopf: Arc<HopfPresentation>,
    a: Arc<Algebra>,
    actions: Vec<Matrix>,
}

impl ModuleAlgebraAction {
    pub fn new(hopf: Arc<HopfPresentation>, a: Arc<Algebra>, actions: Vec<Matrix>) -> Result<Self> {
        if actions.len() != hopf.dim() {
            return Err(Error::schema("actions", format!("expected {} matrices, found {}", hopf.dim(), actions.len())));
        }
        if let Some(k) = actions.iter().position(|m| m.rows() != a.dim() || m.cols() != a.dim()) {
            return Err(Error::schema("actions", format!("matrix {k} is not {0}x{0}", a.dim())));
        }
        if hopf.field() != a.field() {
            return Err(Error::FieldMismatch(hopf.field().to_string(), a.field().to_string()));
        }
        Ok(ModuleAlgebraAction { hopf, a, actions })
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(hopf: Arc<HopfPresentation>, a: Arc<Algebra>) -> Self {
        let id = Matrix::identity(a.field(), a.dim());
        let actions = hopf.counit().iter().map(|c| id.scale(c)).collect();
        ModuleAlgebraAction { hopf, a, actions }
    }

    pub fn hopf(&self) -> &Arc<HopfPresentation> {
        &self.hopf
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.a
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action_of(&self, h: &[Scalar]) -> Matrix {
        let f = self.a.field();
        let mut out = Matrix::zeros(f, self.a.dim(), self.a.dim());
        for (c, m) in h.iter().zip(&self.actions) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action_of(h).mul_vec(a)
    }

    /// Module law and both measure laws on basis elements.
    pub fn check(&self) -> Report {
        let h = self.hopf.algebra();
        let a = &self.a;
        let f = a.field();
        let (n, m) = (h.dim(), a.dim());
        let mut report = Report::new();
        let c = report.check("module_unit", "1_H · a = a");
        let unit_action = self.action_of(h.unit());
        let id = Matrix::identity(f, m);
        c.expect(unit_action == id, differing_entry(&unit_action, &id), || "1_H does not act as the identity".into());
        let c = report.check("module_law", "(xy) · a = x · (y · a)");
        for x in 0..n {
            for y in 0..n {
                let l = self.action_of(h.product(x, y));
                let r = self.actions[x].mul(&self.actions[y]);
                c.expect(l == r, vec![x, y], || format!("(b{x}b{y})· ≠ b{x}·(b{y}·)"));
            }
        }
        let c = report.check("measure_product", "h · (ab) = (h₁ · a)(h₂ · b)");
        for x in 0..n {
            let terms = self.hopf.delta_terms(&h.basis_element(x));
            for i in 0..m {
                for j in 0..m {
                    let l = self.actions[x].mul_vec(a.product(i, j));
                    let mut r = f.zeros(m);
                    for (cf, p, q) in &terms {
                        let prod = a.mul(&self.actions[*p].column(i), &self.actions[*q].column(j));
                        vector::axpy(&mut r, cf, &prod);
                    }
                    c.expect(l == r, vec![x, i, j], || {
                        format!("b{x}·(a{i}a{j}) = {}, (h₁·a{i})(h₂·a{j}) = {}", fmt_vec(&l), fmt_vec(&r))
                    });
                }
            }
        }
        let c = report.check("measure_unit", "h · 1_A = ε(h) 1_A");
        for x in 0..n {
            let l = self.actions[x].mul_vec(a.unit());
            let r = vector::scale(a.unit(), &self.hopf.counit()[x]);
            c.expect(l == r, vec![x], || format!("b{x}·1 = {}, expected {}", fmt_vec(&l), fmt_vec(&r)));
        }
        report
    }

    /// `A^H = {a : h · a = ε(h) a}`.
    pub fn invariants(&self) -> Subspace {
        let f = self.a.field();
        let m = self.a.dim();
        let blocks: Vec<Matrix> = self
            .actions
            .iter()
            .zip(self.hopf.counit())
            .map(|(act, e)| act.sub(&Matrix::identity(f, m).scale(e)))
            .collect();
        Matrix::vstack(f, m, &blocks).kernel()
    }
}

/// `A # H` with `i(a) = a # 1` and the left-handed character `χ(a # h) = a ε(h)`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub action: ModuleAlgebraAction,
    pub algebra: Arc<Algebra>,
    pub character: ARingWithCharacter,
}

pub fn smash(act: &ModuleAlgebraAction) -> Result<SmashProduct> {
    let h = act.hopf.algebra();
    let a = act.algebra();
    let f = a.field();
    let (n, m) = (h.dim(), a.dim());
    let names = a
        .basis_names()
        .iter()
        .flat_map(|x| h.basis_names().iter().map(move |y| format!("{x}#{y}")))
        .collect();
    let delta: Vec<_> = (0..n).map(|x| act.hopf.delta_terms(&h.basis_element(x))).collect();
    // (a#h)(b#k) = Σ a(h₁·b) # h₂k
    let alg = Algebra::from_fn(f, names, vector::kron(a.unit(), h.unit()), |p, q| {
        let (ai, hi) = (p / n, p % n);
        let (bi, ki) = (q / n, q % n);
        let mut out = f.zeros(m * n);
        for (c, x, y) in &delta[hi] {
            let left = a.mul(&a.basis_element(ai), &act.actions[*x].column(bi));
            let right = h.product(*y, ki);
            vector::axpy(&mut out, c, &vector::kron(&left, right));
        }
        out
    });
    let r = Arc::new(alg);
    let i_cols: Vec<_> = (0..m).map(|x| vector::kron(&a.basis_element(x), h.unit())).collect();
    let i = AlgebraMap::new(a.clone(), r.clone(), Matrix::from_columns(f, m * n, &i_cols), true)?;
    let chi_cols: Vec<_> = (0..m * n)
        .map(|p| vector::scale(&a.basis_element(p / n), &act.hopf.counit()[p % n]))
        .collect();
    let chi = Matrix::from_columns(f, m, &chi_cols);
    let character = ARingWithCharacter::new(ARing::new(i)?, chi, Handedness::Left)?;
    Ok(SmashProduct {
        action: act.clone(),
        algebra: r,
        character,
    })
}

impl SmashProduct {
    /// `a # h`.
    pub fn element(&self, a: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        vector::kron(a, h)
    }

    /// Associativity of `A # H`, the character axioms, and `A^R = A^H`.
    pub fn report(&self) -> Report {
        let mut report = Report::new();
        report.merge("algebra", self.algebra.check());
        report.merge("character", self.character.verify());
        let b = self.character.b();
        let ah = self.action.invariants();
        let c = report.check("invariants_match", "A^R = A^H");
        c.expect(b == ah, subspace_difference(&b, &ah), || format!("A^R has dimension {}, A^H has dimension {}", b.dim(), ah.dim()));
        report
    }
}

/// The smash-product Frobenius system over the trivial context `I = J = A`
/// (the integral factors are one-dimensional and fixed by `φ`, `t`):
/// `E = Σ (1#t₂) ⊗ 1 ⊗ (1#S̄(t₁))` and `N(r ⊗ b) = N₀(r·i(b))` where
/// `N₀(a#h) = a⟨φ, h⟩`.
///
/// `transported` is the corresponding right-handed system on `R^op` over
/// `A^op` for the character's opposite view, with the tensor factors of `E`
/// swapped and `ν̄'(r ⊗ a) = N(i(a) r)`.
#[derive(Clone, Debug)]
pub struct SmashFrobenius {
    pub smash: SmashProduct,
    pub integrals: IntegralData,
    pub system: FrobeniusSystem,
    pub view: ARingWithCharacter,
    pub transported: FrobeniusSystem,
}

pub fn smash_frobenius(sp: &SmashProduct) -> Result<SmashFrobenius> {
    let hopf = sp.action.hopf();
    let integrals = hopf.integrals()?;
    let s_bar = hopf.antipode_inverse()?;
    let a = sp.action.algebra();
    let h = hopf.algebra();
    let f = a.field();
    let n = h.dim();
    let mut terms = Vec::new();
    let mut flipped = Vec::new();
    for (c, x, y) in hopf.delta_terms(&integrals.t) {
        let left = vector::scale(&vector::kron(a.unit(), &h.basis_element(y)), &c);
        let right = vector::kron(a.unit(), &s_bar.column(x));
        flipped.push((right.clone(), left.clone()));
        terms.push((left, right));
    }
    let nu_cols: Vec<_> = (0..a.dim() * n)
        .map(|p| vector::scale(&a.basis_element(p / n), &integrals.phi[p % n]))
        .collect();
    let nu = Matrix::from_columns(f, a.dim(), &nu_cols);
    let system = FrobeniusSystem::classical(sp.character.ring.clone(), &terms, &nu)?;
    let view = sp.character.left_handed_view();
    let transported = FrobeniusSystem::classical(view.ring.clone(), &flipped, &nu)?;
    Ok(SmashFrobenius {
        smash: sp.clone(),
        integrals,
        system,
        view,
        transported,
    })
}

impl SmashFrobenius {
    pub fn verify(&self) -> Report {
        let mut report = Report::new();
        report.merge("printed", self.system.verify());
        report.merge("transported", self.transported.verify());
        report
    }

    /// Trace data of the transported system; `J ≅ A` through `a ↦ a ⊗ t`.
    pub fn trace_data(&self) -> Result<TraceData> {
        TraceData::compute(&self.transported, &self.view)
    }

    /// Matrix of `a ↦ t · a`.
    pub fn closed_form_trace(&self) -> Matrix {
        self.smash.action.action_of(&self.integrals.t)
    }
}

/// `tr(a ⊗ t) = t · a`.
pub fn hopf_trace(act: &ModuleAlgebraAction, integrals: &IntegralData, a: &[Scalar], t: &[Scalar]) -> Result<Vec<Scalar>> {
    if !integrals.j.contains(t) {
        return Err(Error::NotInSubspace(format!("{} is not a left integral", fmt_vec(t))));
    }
    Ok(act.act(t, a))
}

/// Canonical `(a, t)` with `t · a = 1_A`, `t` the normalized integral.
pub fn trace_one_witness(act: &ModuleAlgebraAction, integrals: &IntegralData) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    let a = act.algebra();
    let m = act.action_of(&integrals.t);
    solve_in_subspace(&m, &Subspace::full(a.field(), a.dim()), a.unit()).map(|x| (x, integrals.t.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn fields() -> [FieldSpec; 3] {
        [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rational]
    }

    #[test]
    fn corpus_hopf_algebras_verify() {
        for f in fields() {
            let h = corpus::group_hopf(f, 2);
            assert!(h.verify().is_ok(), "{f}: {:?}", h.verify().first_failure());
        }
        let sw = corpus::sweedler_hopf(FieldSpec::Rational);
        assert!(sw.verify().is_ok(), "{:?}", sw.verify().first_failure());
        let s_bar = sw.antipode_inverse().unwrap();
        assert_ne!(&s_bar, sw.antipode());
    }

    #[test]
    fn tampered_antipode_is_rejected() {
        let h = corpus::tampered_group_hopf(FieldSpec::Prime(3));
        let r = h.verify();
        let fail = r.first_failure().unwrap();
        assert_eq!(fail.0, "antipode");
        assert_eq!(fail.1.indices, vec![1, 0]);
    }

    #[test]
    fn group_algebra_integrals() {
        for f in fields() {
            let h = corpus::group_hopf(f, 2);
            let d = h.integrals().unwrap();
            assert_eq!(d.t, vec![f.one(), f.one()]);
            assert_eq!(d.phi, vec![f.one(), f.zero()]);
        }
    }

    #[test]
    fn sweedler_integrals() {
        let f = FieldSpec::Rational;
        let h = corpus::sweedler_hopf(f);
        let d = h.integrals().unwrap();
        assert_eq!(d.j.dim(), 1);
        assert_eq!(d.i.dim(), 1);
        // t = x + gx up to scale
        assert_eq!(d.t, vec![f.zero(), f.zero(), f.one(), f.one()]);
        assert!(d.pairing(&d.phi, &d.t).is_one());
    }

    #[test]
    fn hopf_systems_verify() {
        let mut hs: Vec<_> = fields().into_iter().map(|f| corpus::group_hopf(f, 2)).collect();
        hs.push(corpus::sweedler_hopf(FieldSpec::Rational));
        hs.push(corpus::group_hopf(FieldSpec::Prime(5), 3));
        for h in hs {
            let hf = hopf_frobenius_system(&h).unwrap();
            assert!(hf.report.is_ok(), "{:?}", hf.report.first_failure());
            let rc = h.counit_character();
            let sys = &hf.system;
            let rc = ARingWithCharacter::new(sys.ring().clone(), rc.chi.clone(), Handedness::Right).unwrap();
            let td = TraceData::compute(sys, &rc).unwrap();
            assert!(td.report.is_ok(), "{:?}", td.report.first_failure());
        }
    }

    #[test]
    fn group_algebra_e_shape() {
        let f = FieldSpec::Prime(3);
        let h = corpus::group_hopf(f, 2);
        let hf = hopf_frobenius_system(&h).unwrap();
        let terms = hf.system.e_terms();
        let flat: Vec<_> = terms.iter().map(|(c, r, u, s)| (c.clone(), *r, *u, *s)).collect();
        assert_eq!(flat, vec![(f.one(), 0, 0, 0), (f.one(), 1, 0, 1)]);
    }

    #[test]
    fn module_algebra_checks() {
        let f2 = FieldSpec::Prime(2);
        assert!(corpus::swap_action(f2).check().is_ok());
        let bad = corpus::tampered_swap_action(f2).check();
        let fail = bad.first_failure().unwrap();
        assert!(fail.0.starts_with("measure"), "{fail:?}");
        let h = Arc::new(corpus::sweedler_hopf(FieldSpec::Rational));
        let triv = ModuleAlgebraAction::trivial(h, Arc::new(corpus::dual_numbers(FieldSpec::Rational)));
        assert!(triv.check().is_ok());
    }

    #[test]
    fn smash_products() {
        let f2 = FieldSpec::Prime(2);
        let sp = smash(&corpus::swap_action(f2)).unwrap();
        assert_eq!(sp.algebra.dim(), 4);
        assert!(sp.report().is_ok(), "{:?}", sp.report().first_failure());
        let b = sp.character.b();
        assert_eq!(b, Subspace::span(f2, 2, [vec![f2.one(), f2.one()]]));

        let f3 = FieldSpec::Prime(3);
        let h = Arc::new(corpus::group_hopf(f3, 2));
        let sp = smash(&ModuleAlgebraAction::trivial(h.clone(), Arc::new(Algebra::base(f3)))).unwrap();
        assert_eq!(sp.algebra.table(), h.algebra().table());
        assert!(sp.report().is_ok());
        assert!(sp.character.b().is_full());
    }

    #[test]
    fn smash_frobenius_and_trace() {
        let q = FieldSpec::Rational;
        let mut actions = vec![
            corpus::swap_action(FieldSpec::Prime(2)),
            ModuleAlgebraAction::trivial(Arc::new(corpus::group_hopf(q, 2)), Arc::new(Algebra::base(q))),
            ModuleAlgebraAction::trivial(Arc::new(corpus::group_hopf(q, 2)), Arc::new(corpus::dual_numbers(q))),
            ModuleAlgebraAction::trivial(Arc::new(corpus::sweedler_hopf(q)), Arc::new(Algebra::base(q))),
        ];
        let f3 = FieldSpec::Prime(3);
        actions.push(ModuleAlgebraAction::trivial(Arc::new(corpus::group_hopf(f3, 2)), Arc::new(Algebra::base(f3))));
        for act in actions {
            let sp = smash(&act).unwrap();
            let sf = smash_frobenius(&sp).unwrap();
            let r = sf.verify();
            assert!(r.is_ok(), "{:?}", r.first_failure());
            let td = sf.trace_data().unwrap();
            assert!(td.report.is_ok(), "{:?}", td.report.first_failure());
            assert_eq!(td.trace, sf.closed_form_trace());
        }
    }

    #[test]
    fn swap_trace_and_witness() {
        let f2 = FieldSpec::Prime(2);
        let act = corpus::swap_action(f2);
        let d = act.hopf().integrals().unwrap();
        let tr = hopf_trace(&act, &d, &[f2.one(), f2.zero()], &d.t).unwrap();
        assert_eq!(tr, act.algebra().unit());
        let (a, t) = trace_one_witness(&act, &d).unwrap();
        assert_eq!(a, vec![f2.one(), f2.zero()]);
        assert_eq!(t, vec![f2.one(), f2.one()]);
        assert!(hopf_trace(&act, &d, &a, &[f2.one(), f2.zero()]).is_err());

        let h2 = Arc::new(corpus::group_hopf(f2, 2));
        let triv = ModuleAlgebraAction::trivial(h2.clone(), Arc::new(Algebra::base(f2)));
        assert!(trace_one_witness(&triv, &h2.integrals().unwrap()).is_none());

        let f3 = FieldSpec::Prime(3);
        let h3 = Arc::new(corpus::group_hopf(f3, 2));
        let triv = ModuleAlgebraAction::trivial(h3.clone(), Arc::new(Algebra::base(f3)));
        let d3 = h3.integrals().unwrap();
        assert_eq!(hopf_trace(&triv, &d3, &[f3.one()], &d3.t).unwrap(), vec![f3.from_i64(2)]);
        let (a, _) = trace_one_witness(&triv, &d3).unwrap();
        assert_eq!(a, vec![f3.from_i64(2)]);
    }
}
