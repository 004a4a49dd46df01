//! Constructors for the example corpus: small algebras, A-rings, Frobenius
//! systems, Hopf algebras, actions and corings, together with tampered
//! copies that the checkers must reject.

use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMap};
use crate::character::{ARing, ARingWithCharacter, Handedness};
use crate::matrix::{vector, Matrix};
use crate::frobext::FrobeniusAlgebraData;
use crate::hopf::{HopfPresentation, ModuleAlgebraAction};
use crate::morita::FrobeniusSystem;
use crate::coring::{CoringPresentation, FrobeniusCoringSystem};
use crate::io::{Bundle, CoringBundle, FrobeniusBundle};
use crate::module::{Bimodule, RightModule};
use crate::tensor::TensorOverA;
use crate::field::{FieldSpec, Scalar};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn ints(f: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| f.from_i64(n)).collect()
}

/// `F[x]/(x²)` with basis `1, x`.
pub fn dual_numbers(f: FieldSpec) -> Algebra {
    Algebra::from_fn(f, names(&["1", "x"]), ints(f, &[1, 0]), |i, j| {
        if i + j >= 2 {
            f.zeros(2)
        } else {
            f.unit_vector(2, i + j)
        }
    })
}

/// Group algebra of the cyclic group of order `n`, basis `g^0, …, g^{n-1}`.
pub fn cyclic_group_algebra(f: FieldSpec, n: usize) -> Algebra {
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    Algebra::from_fn(f, labels, f.unit_vector(n, 0), |i, j| f.unit_vector(n, (i + j) % n))
}

/// `M_n(F)` with basis `e_ij` at index `i * n + j`.
pub fn matrix_algebra(f: FieldSpec, n: usize) -> Algebra {
    let labels = (0..n * n).map(|k| format!("e{}{}", k / n + 1, k % n + 1)).collect();
    let mut unit = f.zeros(n * n);
    for i in 0..n {
        unit[i * n + i] = f.one();
    }
    Algebra::from_fn(f, labels, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            f.unit_vector(n * n, i * n + l)
        } else {
            f.zeros(n * n)
        }
    })
}

/// `F × … × F` (`n` copies) with orthogonal idempotents `e1, …, en`.
pub fn split_algebra(f: FieldSpec, n: usize) -> Algebra {
    let labels = (1..=n).map(|k| format!("e{k}")).collect();
    Algebra::from_fn(f, labels, vec![f.one(); n], |i, j| {
        if i == j {
            f.unit_vector(n, i)
        } else {
            f.zeros(n)
        }
    })
}

/// Upper-triangular 2×2 matrices, basis `e11, e12, e22`.
pub fn upper_triangular(f: FieldSpec) -> Algebra {
    // (row, col) of each basis element
    const POS: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];
    Algebra::from_fn(f, names(&["e11", "e12", "e22"]), ints(f, &[1, 0, 1]), |a, b| {
        let (i, j) = POS[a];
        let (k, l) = POS[b];
        if j != k {
            return f.zeros(3);
        }
        let idx = POS.iter().position(|&p| p == (i, l)).expect("upper-triangular product");
        f.unit_vector(3, idx)
    })
}

/// Sweedler's four-dimensional algebra: basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`.
pub fn sweedler_algebra(f: FieldSpec) -> Algebra {
    // Normal form g^a x^b at index a + 2b.
    Algebra::from_fn(f, names(&["1", "g", "x", "gx"]), ints(f, &[1, 0, 0, 0]), |p, q| {
        let (a1, b1) = (p % 2, p / 2);
        let (a2, b2) = (q % 2, q / 2);
        if b1 + b2 >= 2 {
            return f.zeros(4);
        }
        // x^b1 g^a2 = (−1)^{b1 a2} g^a2 x^b1
        let sign = if b1 * a2 == 1 { -1 } else { 1 };
        let a = (a1 + a2) % 2;
        let b = b1 + b2;
        let mut v = f.zeros(4);
        v[a + 2 * b] = f.from_i64(sign);
        v
    })
}

/// `F_pC₂` over `F_p` with `i` the unit map and `χ = ε`.
pub fn group_algebra_counit(f: FieldSpec) -> ARingWithCharacter {
    let a = Arc::new(Algebra::base(f));
    let r = Arc::new(cyclic_group_algebra(f, 2));
    let i = AlgebraMap::unit_map(a, r).expect("unit map");
    let chi = Matrix::from_rows(f, 2, vec![ints(f, &[1, 1])]);
    ARingWithCharacter::new(ARing::new(i).expect("unital"), chi, Handedness::Right).expect("shapes")
}

/// [`group_algebra_counit`] with `χ(g) = 0`, which breaks `χ(i(χ(g))g) = χ(g²)`.
pub fn tampered_group_algebra_counit(f: FieldSpec) -> ARingWithCharacter {
    let mut rc = group_algebra_counit(f);
    rc.chi.set(0, 1, f.zero());
    rc
}

/// `kC₂` over `k` with `e = 1⊗1 + g⊗g`, `ν̄` = coefficient of 1, and `χ = ε`.
pub fn group_algebra_frobenius(f: FieldSpec) -> (FrobeniusSystem, ARingWithCharacter) {
    let rc = group_algebra_counit(f);
    let r = rc.r().clone();
    let terms = vec![(r.basis_element(0), r.basis_element(0)), (r.basis_element(1), r.basis_element(1))];
    let nu = Matrix::from_rows(f, 2, vec![ints(f, &[1, 0])]);
    let sys = FrobeniusSystem::classical(rc.ring.clone(), &terms, &nu).expect("group algebra system");
    (sys, rc)
}

/// `M₂(k)` over `k` with `e = Σ e_ij ⊗ e_ji` and `ν̄` the matrix trace.
/// This A-ring has no grouplike character.
pub fn matrix_frobenius(f: FieldSpec) -> FrobeniusSystem {
    let k = Arc::new(Algebra::base(f));
    let m2 = Arc::new(matrix_algebra(f, 2));
    let ring = ARing::new(AlgebraMap::unit_map(k, m2.clone()).expect("unit map")).expect("unital");
    let terms: Vec<_> = (0..4)
        .map(|x| {
            let (i, j) = (x / 2, x % 2);
            (m2.basis_element(x), m2.basis_element(j * 2 + i))
        })
        .collect();
    let nu = Matrix::from_rows(f, 4, vec![ints(f, &[1, 0, 0, 1])]);
    FrobeniusSystem::classical(ring, &terms, &nu).expect("matrix system")
}

/// The same system with the first summand of the canonical lift of `e` removed.
pub fn drop_first_e_summand(sys: &FrobeniusSystem) -> FrobeniusSystem {
    let (c, r, u, s) = sys.e_terms().into_iter().next().expect("e is nonzero");
    let f = sys.field();
    let rd = sys.ring().r.dim();
    let id = sys.context().i_mod().dim();
    let term = vector::scale(&sys.pure3(&f.unit_vector(rd, r), &f.unit_vector(id, u), &f.unit_vector(rd, s)), &c);
    sys.with_e(vector::sub(sys.e(), &term)).expect("same shape")
}

/// `k` as a Frobenius algebra over itself: `e = 1 ⊗ 1`, `ν̄ = id`.
pub fn base_frobenius_algebra(f: FieldSpec) -> FrobeniusAlgebraData {
    FrobeniusAlgebraData::new(Arc::new(Algebra::base(f)), ints(f, &[1]), ints(f, &[1])).expect("shapes")
}

/// `kC₂` with `e = 1⊗1 + g⊗g` and `ν̄` the coefficient of `1`.
pub fn group_frobenius_algebra(f: FieldSpec) -> FrobeniusAlgebraData {
    let s = Arc::new(cyclic_group_algebra(f, 2));
    FrobeniusAlgebraData::new(s, ints(f, &[1, 0, 0, 1]), ints(f, &[1, 0])).expect("shapes")
}

/// `M₂(k)` with `e = Σ e_ij ⊗ e_ji` and `ν̄` the matrix trace.
pub fn matrix_frobenius_algebra(f: FieldSpec) -> FrobeniusAlgebraData {
    let s = Arc::new(matrix_algebra(f, 2));
    let mut e = f.zeros(16);
    for x in 0..4 {
        let (i, j) = (x / 2, x % 2);
        e[x * 4 + j * 2 + i] = f.one();
    }
    FrobeniusAlgebraData::new(s, e, ints(f, &[1, 0, 0, 1])).expect("shapes")
}

/// `kC_n` with `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_hopf(f: FieldSpec, n: usize) -> HopfPresentation {
    let h = Arc::new(cyclic_group_algebra(f, n));
    let comul_cols: Vec<_> = (0..n).map(|k| f.unit_vector(n * n, k * n + k)).collect();
    let antipode_cols: Vec<_> = (0..n).map(|k| f.unit_vector(n, (n - k) % n)).collect();
    HopfPresentation::new(
        h,
        Matrix::from_columns(f, n * n, &comul_cols),
        vec![f.one(); n],
        Matrix::from_columns(f, n, &antipode_cols),
    )
    .expect("shapes")
}

/// [`group_hopf`] for `C₂` with `S(g) = 1`.
pub fn tampered_group_hopf(f: FieldSpec) -> HopfPresentation {
    let h = group_hopf(f, 2);
    let mut s = h.antipode().clone();
    s.set(0, 1, f.one());
    s.set(1, 1, f.zero());
    HopfPresentation::new(h.algebra().clone(), h.comul().clone(), h.counit().to_vec(), s).expect("shapes")
}

/// Sweedler's Hopf algebra: `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler_hopf(f: FieldSpec) -> HopfPresentation {
    let h = Arc::new(sweedler_algebra(f));
    let pure = |x: usize, y: usize| f.unit_vector(16, x * 4 + y);
    // basis 1, g, x, gx
    let comul_cols = vec![
        pure(0, 0),
        pure(1, 1),
        vector::add(&pure(2, 0), &pure(1, 2)),
        vector::add(&pure(3, 1), &pure(0, 3)),
    ];
    let antipode_cols = vec![ints(f, &[1, 0, 0, 0]), ints(f, &[0, 1, 0, 0]), ints(f, &[0, 0, 0, -1]), ints(f, &[0, 0, 1, 0])];
    HopfPresentation::new(
        h,
        Matrix::from_columns(f, 16, &comul_cols),
        ints(f, &[1, 1, 0, 0]),
        Matrix::from_columns(f, 4, &antipode_cols),
    )
    .expect("shapes")
}

/// `C₂` acting on `F × F` by swapping the factors.
pub fn swap_action(f: FieldSpec) -> ModuleAlgebraAction {
    let h = Arc::new(group_hopf(f, 2));
    let a = Arc::new(split_algebra(f, 2));
    let swap = Matrix::from_rows(f, 2, vec![ints(f, &[0, 1]), ints(f, &[1, 0])]);
    ModuleAlgebraAction::new(h, a, vec![Matrix::identity(f, 2), swap]).expect("shapes")
}

/// [`swap_action`] with `g` acting by an involution that moves `1_A`.
pub fn tampered_swap_action(f: FieldSpec) -> ModuleAlgebraAction {
    let act = swap_action(f);
    let bad = Matrix::from_rows(f, 2, vec![ints(f, &[1, 1]), ints(f, &[0, -1])]);
    ModuleAlgebraAction::new(act.hopf().clone(), act.algebra().clone(), vec![Matrix::identity(f, 2), bad]).expect("shapes")
}

/// `F × … × F` with `e = Σ e_i ⊗ e_i` and `ν̄` the sum of coordinates.
pub fn split_frobenius_algebra(f: FieldSpec, n: usize) -> FrobeniusAlgebraData {
    let s = Arc::new(split_algebra(f, n));
    let mut e = f.zeros(n * n);
    for i in 0..n {
        e[i * n + i] = f.one();
    }
    FrobeniusAlgebraData::new(s, e, vec![f.one(); n]).expect("shapes")
}

/// `ℚC₂` with `g·1 = 1` instead of `g`: associativity and the right unit law fail.
pub fn tampered_group_algebra() -> Algebra {
    let a = cyclic_group_algebra(FieldSpec::Rational, 2);
    let f = a.field();
    let mut table = a.table();
    table[1][0] = vec![f.one(), f.zero()];
    Algebra::new(f, a.basis_names().to_vec(), table, a.unit().to_vec()).expect("shapes")
}

/// Column vectors `k²` as a right `M₂(k)`-module via `v ↦ vᵀ·e_ij`.
pub fn row_vector_module(f: FieldSpec) -> RightModule {
    let m2 = Arc::new(matrix_algebra(f, 2));
    let actions = (0..4)
        .map(|x| {
            let (i, j) = (x / 2, x % 2);
            let mut m = Matrix::zeros(f, 2, 2);
            m.set(j, i, f.one());
            m
        })
        .collect();
    RightModule::new(m2, 2, actions).expect("shapes")
}

/// [`row_vector_module`] with `e₀₀` acting as the identity.
pub fn tampered_row_vector_module(f: FieldSpec) -> RightModule {
    let m = row_vector_module(f);
    let mut actions = m.actions().to_vec();
    actions[0] = Matrix::identity(f, 2);
    RightModule::new(m.algebra().clone(), 2, actions).expect("shapes")
}

/// `kC₂ → M₂(k)` sending `g` to the swap matrix.
pub fn group_into_matrices(f: FieldSpec) -> AlgebraMap {
    let s = Arc::new(cyclic_group_algebra(f, 2));
    let m2 = Arc::new(matrix_algebra(f, 2));
    let j = Matrix::from_columns(f, 4, &[ints(f, &[1, 0, 0, 1]), ints(f, &[0, 1, 1, 0])]);
    AlgebraMap::new(s, m2, j, true).expect("homomorphism")
}

/// The Sweedler coring `A ⊗_k A` of `A = k × k`, its grouplike `1 ⊗ 1` and
/// the Frobenius system coming from `e = e₁⊗e₁ + e₂⊗e₂`.
pub fn split_sweedler_coring(f: FieldSpec) -> CoringBundle {
    let a = Arc::new(split_algebra(f, 2));
    let j = AlgebraMap::unit_map(Arc::new(Algebra::base(f)), a.clone()).expect("unit map");
    let coring = CoringPresentation::sweedler(&j).expect("sweedler coring");
    let left = Bimodule::ring(a.clone(), None, Some(&j));
    let right = Bimodule::ring(a.clone(), Some(&j), None);
    let one = TensorOverA::new(&left, &right).expect("shapes").pure(a.unit(), a.unit());
    let fd = split_frobenius_algebra(f, 2);
    let frobenius = FrobeniusCoringSystem::sweedler(&coring, &fd).expect("frobenius coring");
    CoringBundle {
        coring,
        grouplike: Some(one),
        frobenius: Some(frobenius),
    }
}

/// Every corpus file with its path relative to the corpus root. Files under
/// `negative/` are tampered and must fail `verify`.
pub fn corpus_files() -> Vec<(&'static str, Bundle)> {
    let (q, f2, f3) = (FieldSpec::Rational, FieldSpec::Prime(2), FieldSpec::Prime(3));
    let alg = |a: Algebra| Bundle::Algebra(Arc::new(a));
    let system = |(system, ch): (FrobeniusSystem, ARingWithCharacter)| {
        Bundle::Frobenius(FrobeniusBundle::System {
            system,
            character: Some(ch),
        })
    };
    let bare_system = |system: FrobeniusSystem| Bundle::Frobenius(FrobeniusBundle::System { system, character: None });

    let split = split_sweedler_coring(f2);
    let upper = Arc::new(upper_triangular(f2));
    let trivial_coring = CoringPresentation::trivial(upper.clone());
    let trivial_theta = FrobeniusCoringSystem::trivial(&trivial_coring).expect("trivial system");

    vec![
        ("qc2.algebra.json", alg(cyclic_group_algebra(q, 2))),
        ("f2c2.algebra.json", alg(cyclic_group_algebra(f2, 2))),
        ("f3c2.algebra.json", alg(cyclic_group_algebra(f3, 2))),
        ("f2_dual_numbers.algebra.json", alg(dual_numbers(f2))),
        ("f2_split.algebra.json", alg(split_algebra(f2, 2))),
        ("f2_upper.algebra.json", alg(upper_triangular(f2))),
        ("m2_f2.algebra.json", alg(matrix_algebra(f2, 2))),
        ("m2_f3.algebra.json", alg(matrix_algebra(f3, 2))),
        ("qc2.aring.json", Bundle::ARing(group_algebra_counit(q))),
        ("f2c2.aring.json", Bundle::ARing(group_algebra_counit(f2))),
        ("f3c2.aring.json", Bundle::ARing(group_algebra_counit(f3))),
        (
            "f2_dual_numbers_trivial.aring.json",
            Bundle::ARing(ARingWithCharacter::trivial(Arc::new(dual_numbers(f2)))),
        ),
        ("m2_f2_rows.module.json", Bundle::Module(row_vector_module(f2))),
        (
            "f2c2_regular.module.json",
            Bundle::Module(RightModule::regular(Arc::new(cyclic_group_algebra(f2, 2)))),
        ),
        ("qc2.frobenius.json", system(group_algebra_frobenius(q))),
        ("f2c2.frobenius.json", system(group_algebra_frobenius(f2))),
        ("f3c2.frobenius.json", system(group_algebra_frobenius(f3))),
        ("m2_f2.frobenius.json", bare_system(matrix_frobenius(f2))),
        ("m2_f3.frobenius.json", bare_system(matrix_frobenius(f3))),
        (
            "m2_f3_algebra.frobenius.json",
            Bundle::Frobenius(FrobeniusBundle::Algebra {
                data: matrix_frobenius_algebra(f3),
                extension: None,
            }),
        ),
        (
            "f3c2_in_m2.frobenius.json",
            Bundle::Frobenius(FrobeniusBundle::Algebra {
                data: group_frobenius_algebra(f3),
                extension: Some(group_into_matrices(f3)),
            }),
        ),
        ("qc2.hopf.json", Bundle::Hopf(group_hopf(q, 2))),
        ("f2c2.hopf.json", Bundle::Hopf(group_hopf(f2, 2))),
        ("f3c2.hopf.json", Bundle::Hopf(group_hopf(f3, 2))),
        ("sweedler_q.hopf.json", Bundle::Hopf(sweedler_hopf(q))),
        ("swap_f2.action.json", Bundle::Action(swap_action(f2))),
        (
            "f3c2_trivial.action.json",
            Bundle::Action(ModuleAlgebraAction::trivial(
                Arc::new(group_hopf(f3, 2)),
                Arc::new(Algebra::base(f3)),
            )),
        ),
        ("f2_split_sweedler.coring.json", Bundle::Coring(split.clone())),
        (
            "f2_upper_trivial.coring.json",
            Bundle::Coring(CoringBundle {
                grouplike: Some(upper.unit().to_vec()),
                frobenius: Some(trivial_theta),
                coring: trivial_coring,
            }),
        ),
        ("negative/tampered_qc2.algebra.json", alg(tampered_group_algebra())),
        ("negative/tampered_f3c2.aring.json", Bundle::ARing(tampered_group_algebra_counit(f3))),
        ("negative/tampered_m2_f2_rows.module.json", Bundle::Module(tampered_row_vector_module(f2))),
        (
            "negative/tampered_f2c2.frobenius.json",
            system({
                let (s, ch) = group_algebra_frobenius(f2);
                (drop_first_e_summand(&s), ch)
            }),
        ),
        ("negative/tampered_f3c2.hopf.json", Bundle::Hopf(tampered_group_hopf(f3))),
        ("negative/tampered_swap_f2.action.json", Bundle::Action(tampered_swap_action(f2))),
        (
            "negative/tampered_counit_f2_split.coring.json",
            Bundle::Coring(CoringBundle {
                coring: split.coring.with_counit(Matrix::zeros(f2, 2, 4)).expect("shapes"),
                grouplike: None,
                frobenius: None,
            }),
        ),
        (
            "negative/tampered_theta_f2_split.coring.json",
            Bundle::Coring(CoringBundle {
                frobenius: split.frobenius.as_ref().map(|s| s.scaled(&f2.zero())),
                ..split
            }),
        ),
    ]
}
