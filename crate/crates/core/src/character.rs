//! A-rings with a grouplike character: the induced action on `A`, the
//! invariants `B`, `Q` and `M^R`, the hom isomorphism `Hom_R(A, M) ≅ M^R`,
//! and the projectivity and quasi-projectivity criteria.
//!
//! Right-handed axioms for `χ: R → A`:
//! `χ(r·i(a)) = χ(r)a`, `χ(i(χ(r))s) = χ(rs)`, `χ(1_R) = 1_A`.
//! Left-handed structures are handled by passing to opposite algebras,
//! where they become right-handed with the same matrices.

use std::borrow::Cow;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_unital_subalgebra, same_algebra, subalgebra_witness, Algebra, AlgebraMap};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::module::{hom_space, RightModule};
use crate::report::{differing_coordinate, differing_entry, singular_witness, subspace_difference, Report};
use crate::subspace::{EnumCaps, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn flipped(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

/// A ring `R` with a unital ring map `i: A → R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARing {
    pub a: Arc<Algebra>,
    pub r: Arc<Algebra>,
    pub i: AlgebraMap,
}

impl ARing {
    pub fn new(i: AlgebraMap) -> Result<Self> {
        if !i.is_unital() {
            return Err(Error::NotUnital);
        }
        Ok(ARing {
            a: i.source().clone(),
            r: i.target().clone(),
            i,
        })
    }

    /// `A` as an `A`-ring over itself.
    pub fn trivial(a: Arc<Algebra>) -> Self {
        ARing {
            a: a.clone(),
            r: a.clone(),
            i: AlgebraMap::identity(a),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    /// `(A^op, R^op)` with the same matrix for `i`.
    pub fn opposite(&self) -> ARing {
        let a = Arc::new(self.a.opposite());
        let r = Arc::new(self.r.opposite());
        let i = AlgebraMap::new(a.clone(), r.clone(), self.i.matrix().clone(), true)
            .expect("the opposite of a ring map is a ring map");
        ARing { a, r, i }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARingWithCharacter {
    pub ring: ARing,
    /// `dim A × dim R`.
    pub chi: Matrix,
    pub handedness: Handedness,
}

impl ARingWithCharacter {
    pub fn new(ring: ARing, chi: Matrix, handedness: Handedness) -> Result<Self> {
        if chi.rows() != ring.a.dim() || chi.cols() != ring.r.dim() {
            return Err(Error::dim(format!(
                "character matrix is {}x{}, expected {}x{}",
                chi.rows(),
                chi.cols(),
                ring.a.dim(),
                ring.r.dim()
            )));
        }
        Ok(ARingWithCharacter { ring, chi, handedness })
    }

    /// `R = A`, `i = χ = id`.
    pub fn trivial(a: Arc<Algebra>) -> Self {
        let chi = Matrix::identity(a.field(), a.dim());
        ARingWithCharacter {
            ring: ARing::trivial(a),
            chi,
            handedness: Handedness::Right,
        }
    }

    pub fn a(&self) -> &Arc<Algebra> {
        &self.ring.a
    }

    pub fn r(&self) -> &Arc<Algebra> {
        &self.ring.r
    }

    pub fn i(&self) -> &AlgebraMap {
        &self.ring.i
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn chi_of(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.chi.mul_vec(r)
    }

    pub fn i_of(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.ring.i.apply(a)
    }

    /// The same data on opposite algebras with the handedness flipped.
    pub fn left_handed_view(&self) -> ARingWithCharacter {
        ARingWithCharacter {
            ring: self.ring.opposite(),
            chi: self.chi.clone(),
            handedness: self.handedness.flipped(),
        }
    }

    /// A right-handed structure with the same invariant subspaces.
    pub fn right_view(&self) -> Cow<'_, ARingWithCharacter> {
        match self.handedness {
            Handedness::Right => Cow::Borrowed(self),
            Handedness::Left => Cow::Owned(self.left_handed_view()),
        }
    }

    /// `a ⇀ r = χ(i(a) r)` for right-handed data, `r ⇀ a = χ(r i(a))` for left-handed.
    pub fn action_on_a(&self, a: &[Scalar], r: &[Scalar]) -> Vec<Scalar> {
        let rv = self.right_view();
        rv.chi_of(&rv.r().mul(&rv.i_of(a), r))
    }

    /// `A` as a right module over (the right view of) `R` via `⇀`.
    pub fn induced_module(&self) -> RightModule {
        let rv = self.right_view();
        let (a, r) = (rv.a(), rv.r());
        let actions = (0..r.dim())
            .map(|k| {
                let br = r.basis_element(k);
                let cols: Vec<_> = (0..a.dim())
                    .map(|j| rv.chi_of(&r.mul(&rv.i_of(&a.basis_element(j)), &br)))
                    .collect();
                Matrix::from_columns(a.field(), a.dim(), &cols)
            })
            .collect();
        RightModule::new(r.clone(), a.dim(), actions).expect("induced action has the right shape")
    }

    /// `R` as a right module over (the right view of) itself.
    pub fn regular_module(&self) -> RightModule {
        RightModule::regular(self.right_view().r().clone())
    }

    /// `M^R = {m : m·r = m·i(χ(r)) for all r}`.
    pub fn module_invariants(&self, m: &RightModule) -> Result<Subspace> {
        let rv = self.right_view();
        let r = rv.r();
        if !same_algebra(m.algebra(), r) {
            return Err(Error::AlgebraMismatch("module is not over the ring of the character".into()));
        }
        let f = rv.field();
        if m.dim() == 0 {
            return Ok(Subspace::zero(f, 0));
        }
        let blocks: Vec<Matrix> = (0..r.dim())
            .map(|k| {
                let br = r.basis_element(k);
                m.actions()[k].sub(&m.action_of(&rv.i_of(&rv.chi_of(&br))))
            })
            .collect();
        Ok(Matrix::vstack(f, m.dim(), &blocks).kernel())
    }

    /// `B = A^R`, the invariant subring of `A`.
    pub fn b(&self) -> Subspace {
        self.module_invariants(&self.induced_module()).expect("induced module is over R")
    }

    /// `Q = R^R`.
    pub fn q(&self) -> Subspace {
        self.module_invariants(&self.regular_module()).expect("regular module is over R")
    }

    /// `B` presented as an algebra in the echelon basis of [`ARingWithCharacter::b`],
    /// multiplied as in `A`.
    pub fn b_algebra(&self) -> Result<Algebra> {
        self.a().subalgebra(&self.b())
    }

    /// Axiom report. Left-handed data is checked on its right-handed view.
    pub fn verify(&self) -> Report {
        let rv = self.right_view();
        let prefix = match self.handedness {
            Handedness::Right => "",
            Handedness::Left => "left_view.",
        };
        let mut report = Report::new();
        let (a, r, i) = (rv.a(), rv.r(), rv.i());
        let n_a = a.dim();
        let n_r = r.dim();
        let name = |s: &str| format!("{prefix}{s}");

        let c = report.check(&name("ring_map"), "i is a unital ring map");
        for x in 0..n_a {
            for y in 0..n_a {
                let lhs = i.apply(a.product(x, y));
                let rhs = r.mul(&i.apply(&a.basis_element(x)), &i.apply(&a.basis_element(y)));
                c.expect(lhs == rhs, vec![x, y], || format!("i(b{x}·b{y}) ≠ i(b{x})·i(b{y})"));
            }
        }
        let i1 = i.apply(a.unit());
        c.expect(i1 == r.unit(), differing_coordinate(&i1, r.unit()), || "i(1_A) ≠ 1_R".into());

        let chi_i: Vec<Vec<Scalar>> = (0..n_a).map(|x| rv.i_of(&a.basis_element(x))).collect();
        let c = report.check(&name("right_a_linear"), "χ(r·i(a)) = χ(r)·a");
        for s in 0..n_r {
            let br = r.basis_element(s);
            let chi_r = rv.chi_of(&br);
            for (x, ix) in chi_i.iter().enumerate() {
                let lhs = rv.chi_of(&r.mul(&br, ix));
                let rhs = a.mul(&chi_r, &a.basis_element(x));
                c.expect(lhs == rhs, vec![s, x], || format!("χ(r{s}·i(a{x})) ≠ χ(r{s})·a{x}"));
            }
        }

        let c = report.check(&name("grouplike"), "χ(i(χ(r))·s) = χ(r·s)");
        for x in 0..n_r {
            let bx = r.basis_element(x);
            let ichi = rv.i_of(&rv.chi_of(&bx));
            for y in 0..n_r {
                let by = r.basis_element(y);
                let lhs = rv.chi_of(&r.mul(&ichi, &by));
                let rhs = rv.chi_of(r.product(x, y));
                c.expect(lhs == rhs, vec![x, y], || {
                    format!(
                        "χ(i(χ(r{x}))·r{y}) = {} but χ(r{x}·r{y}) = {}",
                        fmt_vec(&lhs),
                        fmt_vec(&rhs)
                    )
                });
            }
        }

        let c = report.check(&name("unit"), "χ(1_R) = 1_A");
        let chi1 = rv.chi_of(r.unit());
        c.expect(chi1 == a.unit(), differing_coordinate(&chi1, a.unit()), || format!("χ(1_R) = {}", fmt_vec(&chi1)));

        let c = report.check(&name("chi_after_i"), "χ∘i = id_A");
        for (x, ix) in chi_i.iter().enumerate() {
            let back = rv.chi_of(ix);
            c.expect(back == a.basis_element(x), vec![x], || format!("χ(i(a{x})) = {}", fmt_vec(&back)));
        }

        let c = report.check(&name("i_injective"), "rank i = dim A");
        let rank = i.matrix().rank();
        c.expect(rank == n_a, singular_witness(i.matrix()), || format!("rank of i is {rank}, dim A is {n_a}"));
        report
    }

    /// The invariant spaces together with the closure properties they must satisfy.
    pub fn invariants(&self, m: Option<&RightModule>) -> Result<InvariantsBundle> {
        let rv = self.right_view();
        let (a, r) = (rv.a(), rv.r());
        let b = rv.b();
        let q = rv.q();
        let m_r = m.map(|m| rv.module_invariants(m)).transpose()?;
        let mut report = Report::new();

        let c = report.check("b_subalgebra", "B is a unital subalgebra of A");
        c.expect(is_unital_subalgebra(a, &b), subalgebra_witness(a, &b), || "B is not a unital subalgebra".into());

        let qv = q.basis_vectors();
        let bv = b.basis_vectors();
        let c = report.check("q_right_b", "Q·B ⊆ Q");
        for (x, qx) in qv.iter().enumerate() {
            for (y, by) in bv.iter().enumerate() {
                c.expect(q.contains(&r.mul(qx, &rv.i_of(by))), vec![x, y], || {
                    format!("Q basis {x} times B basis {y} leaves Q")
                });
            }
        }
        let c = report.check("q_left_r", "R·Q ⊆ Q");
        for (x, qx) in qv.iter().enumerate() {
            for y in 0..r.dim() {
                c.expect(q.contains(&r.mul(&r.basis_element(y), qx)), vec![y, x], || {
                    format!("R basis {y} times Q basis {x} leaves Q")
                });
            }
        }
        let c = report.check("chi_q_in_b", "χ(Q) ⊆ B");
        for (x, qx) in qv.iter().enumerate() {
            c.expect(b.contains(&rv.chi_of(qx)), vec![x], || format!("χ of Q basis {x} is not in B"));
        }
        if q.contains(r.unit()) {
            let c = report.check("unit_in_q", "1_R ∈ Q implies i bijective with inverse χ");
            let ok = r.dim() == a.dim()
                && rv.chi.mul(rv.i().matrix()) == Matrix::identity(a.field(), a.dim())
                && rv.i().matrix().mul(&rv.chi) == Matrix::identity(a.field(), r.dim());
            let round = rv.chi.mul(rv.i().matrix());
            c.expect(ok, differing_entry(&round, &Matrix::identity(a.field(), a.dim())), || {
                "1_R ∈ Q but i and χ are not inverse bijections".into()
            });
        }
        let c = report.check("a_cyclic", "1_A generates A under ⇀");
        let orbit = rv.induced_module().generated(&[a.unit().to_vec()]);
        c.expect(orbit.is_full(), orbit.free_columns().into_iter().take(1).collect::<Vec<_>>(), || format!("orbit of 1_A spans dimension {}", orbit.dim()));

        Ok(InvariantsBundle { b, q, m_r, report })
    }

    /// `φ: Hom_R(A, M) → M^R`, `f ↦ f(1_A)`, with its verification report.
    pub fn hom_iso_phi(&self, m: &RightModule) -> Result<HomIso> {
        let rv = self.right_view();
        let (a, r) = (rv.a(), rv.r());
        let f = rv.field();
        let induced = rv.induced_module();
        let homs = hom_space(&induced, m)?;
        let m_r = rv.module_invariants(m)?;
        let images: Vec<Vec<Scalar>> = homs.iter().map(|h| h.mul_vec(a.unit())).collect();
        let phi = Matrix::from_columns(f, m.dim(), &images);
        let mut report = Report::new();

        let c = report.check("phi_bijective", "φ(f) = f(1_A) is a bijection onto M^R");
        let image = Subspace::span(f, m.dim(), images.clone());
        c.expect(image == m_r, subspace_difference(&image, &m_r), || {
            format!("image of φ has dimension {}, M^R has dimension {}", image.dim(), m_r.dim())
        });
        c.expect(phi.rank() == homs.len(), singular_witness(&phi), || "φ is not injective".into());

        let c = report.check("phi_inverse", "φ⁻¹(m)(a) = m·i(a)");
        for (k, v) in m_r.basis_vectors().iter().enumerate() {
            let cols: Vec<_> = (0..a.dim()).map(|x| m.act(v, &rv.i_of(&a.basis_element(x)))).collect();
            let g = Matrix::from_columns(f, m.dim(), &cols);
            let commutes = induced.actions().iter().zip(m.actions()).all(|(s, t)| g.mul(s) == t.mul(&g));
            c.expect(commutes, vec![k], || format!("a ↦ m·i(a) is not R-linear for M^R basis {k}"));
            c.expect(g.mul_vec(a.unit()) == *v, vec![k], || format!("φ(φ⁻¹(m)) ≠ m for M^R basis {k}"));
        }

        let b = rv.b();
        let c = report.check("phi_right_b_linear", "φ(f·b) = φ(f)·b with (f·b)(a) = f(ba)");
        for (x, h) in homs.iter().enumerate() {
            for (y, bv) in b.basis_vectors().iter().enumerate() {
                let lhs = h.mul_vec(bv);
                let rhs = m.act(&images[x], &rv.i_of(bv));
                c.expect(lhs == rhs, vec![x, y], || format!("φ(f{x}·b{y}) ≠ φ(f{x})·b{y}"));
            }
        }

        if same_algebra(m.algebra(), r) && *m == induced {
            let c = report.check("end_ring_iso", "End_R(A) ≅ B as rings: φ(f∘g) = φ(f)φ(g), φ(id) = 1");
            for (x, hx) in homs.iter().enumerate() {
                for (y, hy) in homs.iter().enumerate() {
                    let lhs = hx.mul(hy).mul_vec(a.unit());
                    let rhs = a.mul(&images[x], &images[y]);
                    c.expect(lhs == rhs, vec![x, y], || format!("φ(f{x}∘f{y}) ≠ φ(f{x})φ(f{y})"));
                }
            }
            let id_img = Subspace::span(f, a.dim(), images.clone());
            c.expect(id_img.contains(a.unit()), differing_coordinate(&id_img.reduce(a.unit()), &a.zero()), || "1_A is not in the image of φ".into());
            c.expect(image == b, subspace_difference(&image, &b), || "image of End_R(A) is not B".into());
        }
        Ok(HomIso { homs, phi, report })
    }

    /// Canonical `q ∈ Q` with `χ(q) = 1_A`, if one exists.
    pub fn projectivity_witness(&self) -> Option<Vec<Scalar>> {
        let rv = self.right_view();
        let q = rv.q();
        solve_in_subspace(&rv.chi, &q, rv.a().unit())
    }

    /// Decides whether `A` is quasi-projective over `R` by comparing
    /// `dim (A/I)^R` with `dim (B+I)/I` for every submodule `I`.
    pub fn quasi_projectivity(&self, caps: EnumCaps) -> Result<QuasiProjectivity> {
        let rv = self.right_view();
        let induced = rv.induced_module();
        let b = rv.b();
        let subs = induced.submodules(caps)?;
        let verdicts: Vec<Result<Option<(usize, usize)>>> = subs
            .par_iter()
            .map(|ideal| {
                let (quot, _) = induced.quotient(ideal)?;
                let lhs = rv.module_invariants(&quot)?.dim();
                let rhs = b.join(ideal)?.dim() - ideal.dim();
                Ok(if lhs == rhs { None } else { Some((lhs, rhs)) })
            })
            .collect();
        for (k, v) in verdicts.into_iter().enumerate() {
            if let Some((lhs, rhs)) = v? {
                return Ok(QuasiProjectivity {
                    answer: false,
                    submodules_checked: k + 1,
                    counterexample: Some(subs[k].clone()),
                    invariant_dim: Some(lhs),
                    expected_dim: Some(rhs),
                });
            }
        }
        Ok(QuasiProjectivity {
            answer: true,
            submodules_checked: subs.len(),
            counterexample: None,
            invariant_dim: None,
            expected_dim: None,
        })
    }
}

/// Canonical solution of `map(x) = target` with `x` in `space`.
pub fn solve_in_subspace(map: &Matrix, space: &Subspace, target: &[Scalar]) -> Option<Vec<Scalar>> {
    let f = space.field();
    if space.is_zero() {
        return if target.iter().all(Scalar::is_zero) {
            Some(f.zeros(space.ambient_dim()))
        } else {
            None
        };
    }
    let basis = space.basis_vectors();
    let cols: Vec<_> = basis.iter().map(|v| map.mul_vec(v)).collect();
    let system = Matrix::from_columns(f, map.rows(), &cols);
    let coeffs = system.solve(target).expect("shapes agree")?;
    Some(space.combine(&coeffs))
}

pub(crate) fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug)]
pub struct InvariantsBundle {
    pub b: Subspace,
    pub q: Subspace,
    pub m_r: Option<Subspace>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub struct HomIso {
    /// Basis of `Hom_R(A, M)`.
    pub homs: Vec<Matrix>,
    /// Columns are `f(1_A)` for the basis maps `f`.
    pub phi: Matrix,
    pub report: Report,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiProjectivity {
    pub answer: bool,
    pub submodules_checked: usize,
    pub counterexample: Option<Subspace>,
    pub invariant_dim: Option<usize>,
    pub expected_dim: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn trivial_character() {
        let a = Arc::new(corpus::matrix_algebra(FieldSpec::Prime(2), 2));
        let rc = ARingWithCharacter::trivial(a.clone());
        assert!(rc.verify().is_ok());
        assert!(rc.b().is_full());
        assert!(rc.q().is_full());
        assert_eq!(rc.projectivity_witness().unwrap(), a.unit());
        assert_eq!(rc.left_handed_view().left_handed_view(), rc);
        let inv = rc.invariants(None).unwrap();
        assert!(inv.report.is_ok(), "{:?}", inv.report.first_failure());
    }

    #[test]
    fn group_algebra_counit() {
        let f3 = FieldSpec::Prime(3);
        let rc = corpus::group_algebra_counit(f3);
        assert!(rc.verify().is_ok());
        let one = f3.one();
        assert_eq!(rc.action_on_a(std::slice::from_ref(&one), &[f3.zero(), one.clone()]), vec![one.clone()]);
        assert_eq!(rc.q(), Subspace::span(f3, 2, vec![vec![one.clone(), one.clone()]]));
        assert!(rc.b().is_full());
        assert_eq!(rc.projectivity_witness().unwrap(), vec![f3.from_i64(2), f3.from_i64(2)]);
        assert!(rc.quasi_projectivity(EnumCaps::MODULES).unwrap().answer);

        let f2 = FieldSpec::Prime(2);
        let rc2 = corpus::group_algebra_counit(f2);
        assert_eq!(rc2.q(), Subspace::span(f2, 2, vec![vec![f2.one(), f2.one()]]));
        assert!(rc2.projectivity_witness().is_none());
        let qp = rc2.quasi_projectivity(EnumCaps::MODULES).unwrap();
        assert!(qp.answer);
        assert_eq!(qp.submodules_checked, 2);
    }

    #[test]
    fn sign_character_is_valid() {
        // χ(g) = 2 = −1 over F_3 is multiplicative, hence grouplike.
        let f3 = FieldSpec::Prime(3);
        let rc = corpus::group_algebra_counit(f3);
        let mut chi = rc.chi.clone();
        chi.set(0, 1, f3.from_i64(2));
        let sign = ARingWithCharacter::new(rc.ring.clone(), chi, Handedness::Right).unwrap();
        assert!(sign.verify().is_ok());
        assert_eq!(sign.q(), Subspace::span(f3, 2, vec![vec![f3.one(), f3.from_i64(2)]]));
    }

    #[test]
    fn tampered_counit_is_rejected() {
        let rc = corpus::tampered_group_algebra_counit(FieldSpec::Prime(3));
        let report = rc.verify();
        let c = report.get("grouplike").unwrap();
        assert!(!c.passed());
        // χ(i(χ(g))·g) = χ(0) = 0 but χ(g·g) = χ(1) = 1.
        assert_eq!(c.failures[0].indices, vec![1, 1]);
    }

    #[test]
    fn hom_iso_examples() {
        let rc = corpus::group_algebra_counit(FieldSpec::Prime(3));
        let iso = rc.hom_iso_phi(&rc.induced_module()).unwrap();
        assert!(iso.report.is_ok(), "{:?}", iso.report.first_failure());
        assert_eq!(iso.homs.len(), 1);
        let reg = rc.regular_module();
        let iso_r = rc.hom_iso_phi(&reg).unwrap();
        assert!(iso_r.report.is_ok());
        assert_eq!(Subspace::span(FieldSpec::Prime(3), 2, iso_r.phi.columns()), rc.q());
    }
}
