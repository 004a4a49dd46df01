//! End-to-end acceptance run over the shipped corpus. Each criterion prints
//! one PASS/FAIL line with its wall time and budget; the test fails if any
//! criterion fails or overruns its budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use froblab::algebra::{Algebra, AlgebraMap};
use froblab::character::ARingWithCharacter;
use froblab::coring::coring_alpha_trace;
use froblab::corpus;
use froblab::fbn::{is_right_fbn, prime_ideals, annihilator_witness};
use froblab::field::{FieldSpec, Scalar};
use froblab::frobext::lift_frobenius;
use froblab::hopf::{hopf_frobenius_system, hopf_trace, smash, smash_frobenius, trace_one_witness, HopfPresentation, ModuleAlgebraAction};
use froblab::io::{self, Bundle, CoringBundle, FrobeniusBundle};
use froblab::matrix::{vector, Matrix};
use froblab::module::{hom_space, RightModule};
use froblab::morita::{FrobeniusSystem, TraceData};
use froblab::report::Report;
use froblab::subspace::{EnumCaps, Subspace};

type Outcome = Result<(), String>;

fn corpus_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(rel)
}

fn load(rel: &str) -> Bundle {
    io::load(&corpus_path(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

fn aring(rel: &str) -> ARingWithCharacter {
    match load(rel) {
        Bundle::ARing(rc) => rc,
        other => panic!("{rel} is a {} file", other.kind()),
    }
}

fn hopf(rel: &str) -> HopfPresentation {
    match load(rel) {
        Bundle::Hopf(h) => h,
        other => panic!("{rel} is a {} file", other.kind()),
    }
}

fn action(rel: &str) -> ModuleAlgebraAction {
    match load(rel) {
        Bundle::Action(a) => a,
        other => panic!("{rel} is a {} file", other.kind()),
    }
}

fn coring(rel: &str) -> CoringBundle {
    match load(rel) {
        Bundle::Coring(c) => c,
        other => panic!("{rel} is a {} file", other.kind()),
    }
}

fn algebra(rel: &str) -> Arc<Algebra> {
    match load(rel) {
        Bundle::Algebra(a) => a,
        other => panic!("{rel} is a {} file", other.kind()),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_report(what: &str, r: &Report) -> Outcome {
    match r.first_failure() {
        None => Ok(()),
        Some((name, f)) => Err(format!("{what}: {name} fails at {:?}: {}", f.indices, f.detail)),
    }
}

fn ints(f: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| f.from_i64(n)).collect()
}

// ---------------------------------------------------------------------------
// Independent oracles, written directly against structure constants.

/// Kernel of the stacked maps `x ↦ m_k(x)`, with each `m_k` given by columns.
fn common_kernel(f: FieldSpec, n: usize, maps: Vec<Vec<Vec<Scalar>>>) -> Subspace {
    if maps.is_empty() {
        return Subspace::full(f, n);
    }
    let blocks: Vec<Matrix> = maps
        .iter()
        .map(|cols| Matrix::from_columns(f, cols[0].len(), cols))
        .collect();
    Matrix::vstack(f, n, &blocks).kernel()
}

/// `Q = {q ∈ R : q r = q i(χ(r))}` for a right-handed character.
fn q_oracle(rc: &ARingWithCharacter) -> Subspace {
    let (r, f) = (rc.r(), rc.field());
    let n = r.dim();
    let maps = (0..n)
        .map(|k| {
            let rk = r.basis_element(k);
            let shifted = rc.i_of(&rc.chi_of(&rk));
            (0..n)
                .map(|x| {
                    let q = r.basis_element(x);
                    vector::sub(&r.mul(&q, &rk), &r.mul(&q, &shifted))
                })
                .collect()
        })
        .collect();
    common_kernel(f, n, maps)
}

/// `B = {a ∈ A : χ(i(a) r) = a χ(r)}` for a right-handed character.
fn b_oracle(rc: &ARingWithCharacter) -> Subspace {
    let (a, r, f) = (rc.a(), rc.r(), rc.field());
    let maps = (0..r.dim())
        .map(|k| {
            let rk = r.basis_element(k);
            (0..a.dim())
                .map(|x| {
                    let ax = a.basis_element(x);
                    vector::sub(&rc.chi_of(&r.mul(&rc.i_of(&ax), &rk)), &a.mul(&ax, &rc.chi_of(&rk)))
                })
                .collect()
        })
        .collect();
    common_kernel(f, a.dim(), maps)
}

/// `M^R = {m : m r = m i(χ(r))}`.
fn module_invariants_oracle(rc: &ARingWithCharacter, m: &RightModule) -> Subspace {
    let r = rc.r();
    let maps = (0..r.dim())
        .map(|k| {
            let rk = r.basis_element(k);
            let shifted = rc.i_of(&rc.chi_of(&rk));
            (0..m.dim())
                .map(|x| {
                    let v = rc.field().unit_vector(m.dim(), x);
                    vector::sub(&m.act(&v, &rk), &m.act(&v, &shifted))
                })
                .collect()
        })
        .collect();
    common_kernel(rc.field(), m.dim(), maps)
}

/// Right-handed character axioms checked on basis elements.
fn character_oracle(rc: &ARingWithCharacter) -> Outcome {
    let (a, r) = (rc.a(), rc.r());
    for x in 0..r.dim() {
        let rx = r.basis_element(x);
        let cx = rc.chi_of(&rx);
        for y in 0..r.dim() {
            let ry = r.basis_element(y);
            let lhs = rc.chi_of(&r.mul(&rc.i_of(&cx), &ry));
            ensure(lhs == rc.chi_of(&r.mul(&rx, &ry)), || format!("χ(χ(r{x})r{y}) ≠ χ(r{x}r{y})"))?;
        }
        for y in 0..a.dim() {
            let ay = a.basis_element(y);
            ensure(rc.chi_of(&r.mul(&rx, &rc.i_of(&ay))) == a.mul(&cx, &ay), || format!("χ(r{x}a{y}) ≠ χ(r{x})a{y}"))?;
        }
    }
    ensure(rc.chi_of(r.unit()) == a.unit(), || "χ(1_R) ≠ 1_A".into())?;
    for y in 0..a.dim() {
        let ay = a.basis_element(y);
        ensure(rc.chi_of(&rc.i_of(&ay)) == ay, || format!("χ(i(a{y})) ≠ a{y}"))?;
    }
    Ok(())
}

/// Every right `R`-linear map `A → A/N` lifts through `A → A/N`.
fn lifting_oracle(rc: &ARingWithCharacter, caps: EnumCaps) -> bool {
    let induced = rc.induced_module();
    let endos = hom_space(&induced, &induced).expect("hom space");
    let f = rc.field();
    for n in induced.submodules(caps).expect("within caps") {
        let (quot, proj) = induced.quotient(&n).expect("submodule");
        let all = hom_space(&induced, &quot).expect("hom space");
        let lifted: Vec<Vec<Scalar>> = endos
            .iter()
            .map(|h| proj.mul(h).entries().to_vec())
            .collect();
        let flat = quot.dim() * induced.dim();
        let span = Subspace::span(f, flat, lifted);
        if span.dim() != all.len() {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Shared instance lists.

fn corpus_arings() -> Vec<(String, ARingWithCharacter)> {
    let mut out: Vec<(String, ARingWithCharacter)> = [
        "qc2.aring.json",
        "f2c2.aring.json",
        "f3c2.aring.json",
        "f2_dual_numbers_trivial.aring.json",
    ]
    .iter()
    .map(|rel| (rel.to_string(), aring(rel)))
    .collect();
    let f2 = FieldSpec::Prime(2);
    out.push(("trivial M2(F_2)".into(), ARingWithCharacter::trivial(algebra("m2_f2.algebra.json"))));
    for rel in ["f3c2_in_m2.frobenius.json", "m2_f3_algebra.frobenius.json"] {
        if let Bundle::Frobenius(FrobeniusBundle::Algebra { data, extension }) = load(rel) {
            let j = extension.unwrap_or_else(|| AlgebraMap::identity(data.s.clone()));
            out.push((format!("lift of {rel}"), lift_frobenius(&data, &j).expect("lift").1));
        }
    }
    for rel in ["swap_f2.action.json", "f3c2_trivial.action.json"] {
        out.push((format!("smash of {rel}"), smash(&action(rel)).expect("smash").character));
    }
    for rel in ["f2_split_sweedler.coring.json", "f2_upper_trivial.coring.json"] {
        let c = coring(rel);
        let x = c.grouplike.clone().expect("grouplike");
        out.push((format!("dual of {rel}"), c.coring.dual_ring(&x).expect("dual").character));
    }
    assert!(out.iter().any(|(_, rc)| rc.field() == f2));
    out
}

/// Frobenius systems with a right-handed character, ready for trace data.
fn trace_systems() -> Vec<(String, FrobeniusSystem, ARingWithCharacter)> {
    let mut out = Vec::new();
    let f3 = FieldSpec::Prime(3);
    let k = Arc::new(Algebra::base(f3));
    out.push(("trivial F_3".into(), FrobeniusSystem::trivial(k.clone()), ARingWithCharacter::trivial(k)));
    for rel in ["qc2.frobenius.json", "f2c2.frobenius.json", "f3c2.frobenius.json"] {
        if let Bundle::Frobenius(FrobeniusBundle::System { system, character }) = load(rel) {
            out.push((rel.into(), system, character.expect("character")));
        }
    }
    for rel in ["m2_f2.algebra.json", "m2_f3.algebra.json"] {
        let f = algebra(rel).field();
        let fd = corpus::matrix_frobenius_algebra(f);
        let (sys, rc) = lift_frobenius(&fd, &AlgebraMap::identity(fd.s.clone())).expect("lift");
        out.push((format!("S^op⊗A lift of {rel}"), sys, rc));
    }
    if let Bundle::Frobenius(FrobeniusBundle::Algebra { data, extension: Some(j) }) = load("f3c2_in_m2.frobenius.json") {
        let (sys, rc) = lift_frobenius(&data, &j).expect("lift");
        out.push(("f3c2_in_m2.frobenius.json".into(), sys, rc));
    }
    for rel in ["qc2.hopf.json", "f2c2.hopf.json", "f3c2.hopf.json", "sweedler_q.hopf.json"] {
        let h = hopf(rel);
        let hf = hopf_frobenius_system(&h).expect("hopf system");
        let chi = h.counit_character().chi.clone();
        let rc = ARingWithCharacter::new(hf.system.ring().clone(), chi, froblab::character::Handedness::Right).expect("shapes");
        out.push((format!("integral system of {rel}"), hf.system, rc));
    }
    for rel in ["swap_f2.action.json", "f3c2_trivial.action.json"] {
        let sf = smash_frobenius(&smash(&action(rel)).expect("smash")).expect("smash system");
        out.push((format!("smash system of {rel}"), sf.transported.clone(), sf.view.clone()));
    }
    out
}

// ---------------------------------------------------------------------------
// Criteria.

fn character_axioms() -> Outcome {
    let arings = corpus_arings();
    for (name, rc) in &arings {
        ensure_report(name, &rc.verify())?;
        character_oracle(&rc.right_view()).map_err(|e| format!("{name}: {e}"))?;
    }
    ensure(arings.len() >= 11, || format!("only {} A-rings", arings.len()))
}

fn invariant_suite() -> Outcome {
    for (name, rc) in corpus_arings() {
        let rv = rc.right_view();
        let regular = RightModule::regular(rv.r().clone());
        let inv = rv.invariants(Some(&regular)).map_err(|e| e.to_string())?;
        ensure_report(&name, &inv.report)?;
        ensure(inv.q == q_oracle(&rv), || format!("{name}: Q differs from the kernel oracle"))?;
        ensure(inv.b == b_oracle(&rv), || format!("{name}: B differs from the kernel oracle"))?;
        ensure(inv.m_r.as_ref() == Some(&inv.q), || format!("{name}: R^R ≠ Q"))?;
        for m in [regular, rv.induced_module()] {
            let iso = rv.hom_iso_phi(&m).map_err(|e| e.to_string())?;
            ensure_report(&name, &iso.report)?;
            let mr = module_invariants_oracle(&rv, &m);
            ensure(iso.homs.len() == mr.dim(), || {
                format!("{name}: dim Hom_R(A, M) = {}, dim M^R = {}", iso.homs.len(), mr.dim())
            })?;
        }
        let end = rv.hom_iso_phi(&rv.induced_module()).map_err(|e| e.to_string())?;
        ensure(end.report.get("end_ring_iso").is_some(), || format!("{name}: End_R(A) ≅ B not checked"))?;
    }
    Ok(())
}

fn alpha_beta() -> Outcome {
    let systems = trace_systems();
    for (name, sys, rc) in &systems {
        ensure_report(name, &sys.verify())?;
        let td = TraceData::compute(sys, rc).map_err(|e| format!("{name}: {e}"))?;
        ensure_report(name, &td.report)?;
        let f = rc.field();
        let jdim = td.alpha.cols();
        ensure(td.beta.mul(&td.alpha) == Matrix::identity(f, jdim), || format!("{name}: βα ≠ id"))?;
        let q = q_oracle(rc);
        ensure(td.alpha.image() == q, || format!("{name}: image(α) ≠ Q"))?;
        for v in q.basis_vectors() {
            ensure(td.alpha.mul_vec(&td.beta.mul_vec(&v)) == v, || format!("{name}: αβ ≠ id on Q"))?;
        }
    }
    ensure(systems.len() >= 5, || format!("only {} systems", systems.len()))
}

fn trace_one_equivalence() -> Outcome {
    for (name, sys, rc) in trace_systems() {
        let td = TraceData::compute(&sys, &rc).map_err(|e| e.to_string())?;
        let by_trace = td.trace_one_witness(rc.a().unit());
        if let Some(v) = &by_trace {
            ensure(td.trace.mul_vec(v) == rc.a().unit(), || format!("{name}: witness has trace ≠ 1"))?;
        }
        let by_q = rc.projectivity_witness();
        if let Some(q) = &by_q {
            ensure(q_oracle(&rc).contains(q) && rc.chi_of(q) == rc.a().unit(), || format!("{name}: bad Q witness"))?;
        }
        ensure(by_trace.is_some() == by_q.is_some(), || format!("{name}: trace-1 and χ|_Q disagree"))?;
    }

    let f3 = FieldSpec::Prime(3);
    let w = aring("f3c2.aring.json").projectivity_witness();
    ensure(w == Some(ints(f3, &[2, 2])), || format!("F_3C₂ witness {w:?}"))?;
    let f2 = FieldSpec::Prime(2);
    ensure(aring("f2c2.aring.json").projectivity_witness().is_none(), || "F_2C₂ has a witness".into())?;

    let swap = action("swap_f2.action.json");
    let integrals = swap.hopf().integrals().map_err(|e| e.to_string())?;
    let w = trace_one_witness(&swap, &integrals);
    ensure(w == Some((ints(f2, &[1, 0]), ints(f2, &[1, 1]))), || format!("swap witness {w:?}"))?;
    let triv = ModuleAlgebraAction::trivial(Arc::new(hopf("f2c2.hopf.json")), Arc::new(Algebra::base(f2)));
    let integrals = triv.hopf().integrals().map_err(|e| e.to_string())?;
    ensure(trace_one_witness(&triv, &integrals).is_none(), || "trivial F_2C₂ action has a witness".into())
}

fn quasi_projectivity() -> Outcome {
    let caps = EnumCaps::MODULES;
    let mut checked = 0;
    for (name, rc) in corpus_arings() {
        let rv = rc.right_view();
        if rv.field() != FieldSpec::Prime(2) || rv.a().dim() > 4 {
            continue;
        }
        let decided = rv.quasi_projectivity(caps).map_err(|e| format!("{name}: {e}"))?.answer;
        let oracle = lifting_oracle(&rv, caps);
        ensure(decided == oracle, || format!("{name}: decision {decided}, lifting oracle {oracle}"))?;
        checked += 1;
    }
    ensure(checked >= 5, || format!("only {checked} A-rings over F_2"))
}

fn hopf_suite() -> Outcome {
    for rel in ["f2c2.hopf.json", "f3c2.hopf.json", "qc2.hopf.json", "sweedler_q.hopf.json"] {
        let h = hopf(rel);
        ensure_report(rel, &h.verify())?;
        let f = h.field();
        let n = h.dim();
        let d = h.integrals().map_err(|e| format!("{rel}: {e}"))?;
        ensure(d.j.dim() == 1 && d.i.dim() == 1, || format!("{rel}: dim J = {}, dim I = {}", d.j.dim(), d.i.dim()))?;

        let alg = h.algebra();
        for x in 0..n {
            let hx = alg.basis_element(x);
            let lhs = alg.mul(&hx, &d.t);
            let rhs = vector::scale(&d.t, &h.epsilon(&hx));
            ensure(lhs == rhs, || format!("{rel}: h{x}·t ≠ ε(h{x})t"))?;
        }
        for i in 0..n {
            for x in 0..n {
                let mut lhs = f.zero();
                for y in 0..n {
                    lhs.add_mul(h.comul().get(i * n + y, x), &d.phi[y]);
                }
                let mut rhs = f.zero();
                rhs.add_mul(&alg.unit()[i], &d.phi[x]);
                ensure(lhs == rhs, || format!("{rel}: φ is not a left integral at ({i}, {x})"))?;
            }
        }
        ensure(vector::dot(&d.phi, &d.t).is_one(), || format!("{rel}: ⟨φ, t⟩ ≠ 1"))?;

        let hf = hopf_frobenius_system(&h).map_err(|e| format!("{rel}: {e}"))?;
        ensure_report(rel, &hf.report)?;

        let act = ModuleAlgebraAction::trivial(Arc::new(h.clone()), Arc::new(Algebra::base(f)));
        let sf = smash_frobenius(&smash(&act).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure_report(rel, &sf.verify())?;
        let td = sf.trace_data().map_err(|e| e.to_string())?;
        ensure_report(rel, &td.report)?;
        let direct = Matrix::from_columns(f, 1, &[act.act(&d.t, &[f.one()])]);
        ensure(td.trace == direct, || format!("{rel}: generic trace ≠ t·a"))?;
    }
    let swap = action("swap_f2.action.json");
    let sf = smash_frobenius(&smash(&swap).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let td = sf.trace_data().map_err(|e| e.to_string())?;
    let a = swap.algebra();
    let cols: Vec<_> = (0..a.dim()).map(|k| swap.act(&sf.integrals.t, &a.basis_element(k))).collect();
    ensure(td.trace == Matrix::from_columns(a.field(), a.dim(), &cols), || "swap: generic trace ≠ t·a".into())
}

fn smash_example() -> Outcome {
    let f2 = FieldSpec::Prime(2);
    let act = action("swap_f2.action.json");
    let sp = smash(&act).map_err(|e| e.to_string())?;
    ensure(sp.algebra.dim() == 4, || format!("dim A#H = {}", sp.algebra.dim()))?;
    ensure_report("A#H", &sp.algebra.check())?;
    // (a#g^u)(b#g^v) = a (g^u·b) # g^{u+v}
    let a = act.algebra();
    let h = act.hopf().algebra();
    for (x, y, u, v) in (0..16).map(|k| (k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1)) {
        let lhs = sp.algebra.mul(&sp.element(&a.basis_element(x), &h.basis_element(u)), &sp.element(&a.basis_element(y), &h.basis_element(v)));
        let moved = act.act(&h.basis_element(u), &a.basis_element(y));
        let rhs = sp.element(&a.mul(&a.basis_element(x), &moved), &h.basis_element((u + v) % 2));
        ensure(lhs == rhs, || format!("smash product formula fails at ({x}, {u}, {y}, {v})"))?;
    }
    ensure(act.invariants() == Subspace::span(f2, 2, [ints(f2, &[1, 1])]), || "A^H is not the diagonal".into())?;
    let d = act.hopf().integrals().map_err(|e| e.to_string())?;
    let tr = hopf_trace(&act, &d, &ints(f2, &[1, 0]), &ints(f2, &[1, 1])).map_err(|e| e.to_string())?;
    ensure(tr == a.unit(), || format!("tr((1,0)⊗(1+g)) = {tr:?}"))
}

fn coring_suite() -> Outcome {
    let cb = coring("f2_split_sweedler.coring.json");
    let c = &cb.coring;
    ensure_report("coring", &c.verify())?;
    let x = cb.grouplike.clone().ok_or("no grouplike")?;
    let f2 = FieldSpec::Prime(2);
    let a = c.algebra();
    ensure(x == vector::kron(a.unit(), a.unit()), || format!("grouplike {x:?} is not 1⊗1"))?;
    ensure(c.is_grouplike(&x), || "1⊗1 is not grouplike".into())?;
    let dual = c.dual_ring(&x).map_err(|e| e.to_string())?;
    ensure_report("dual character", &dual.character.verify())?;
    let diag = Subspace::span(f2, 2, [ints(f2, &[1, 1])]);
    ensure(c.coinvariants(&x) == diag, || "coinvariants are not the diagonal".into())?;
    ensure(dual.character.b() == diag, || "B is not the diagonal".into())?;
    ensure(b_oracle(&dual.character) == diag, || "oracle B is not the diagonal".into())?;
    let sys = cb.frobenius.as_ref().ok_or("no Frobenius data")?;
    ensure_report("frobenius coring", &sys.verify(c))?;
    let tr = coring_alpha_trace(c, sys, &dual).map_err(|e| e.to_string())?;
    ensure_report("α", &tr.report)?;
    ensure(tr.alpha_inv.mul(&tr.alpha) == Matrix::identity(f2, 2), || "α⁻¹α ≠ id".into())?;
    for q in tr.q.basis_vectors() {
        ensure(tr.alpha.mul_vec(&tr.alpha_inv.mul_vec(&q)) == q, || "αα⁻¹ ≠ id on Q".into())?;
    }
    Ok(())
}

fn fbn_oracle() -> Outcome {
    let f2 = FieldSpec::Prime(2);
    let caps = EnumCaps::LATTICE;
    let rings = [
        ("F_2", Arc::new(Algebra::base(f2))),
        ("F_2[x]/(x²)", algebra("f2_dual_numbers.algebra.json")),
        ("F_2×F_2", algebra("f2_split.algebra.json")),
        ("M₂(F_2)", algebra("m2_f2.algebra.json")),
        ("upper triangular", algebra("f2_upper.algebra.json")),
    ];
    for (name, r) in &rings {
        let rep = is_right_fbn(r, caps).map_err(|e| e.to_string())?;
        ensure(rep.fbn, || format!("{name} is not reported FBN"))?;
    }
    let span = |n: usize, vs: &[&[i64]]| Subspace::span(f2, n, vs.iter().map(|v| ints(f2, v)));
    let primes = |a: &Arc<Algebra>| prime_ideals(a, caps).map_err(|e| e.to_string());
    ensure(primes(&rings[3].1)? == vec![Subspace::zero(f2, 4)], || "primes of M₂(F_2)".into())?;
    ensure(primes(&rings[1].1)? == vec![span(2, &[&[0, 1]])], || "primes of F_2[x]/(x²)".into())?;
    let split = primes(&rings[2].1)?;
    ensure(
        split.len() == 2 && split.contains(&span(2, &[&[1, 0]])) && split.contains(&span(2, &[&[0, 1]])),
        || format!("primes of F_2×F_2: {split:?}"),
    )?;

    let rows = match load("m2_f2_rows.module.json") {
        Bundle::Module(m) => m,
        other => return Err(format!("rows module is a {} file", other.kind())),
    };
    let reg_d = RightModule::regular(rings[1].1.clone());
    let x = span(2, &[&[0, 1]]);
    let (quot, _) = reg_d.quotient(&x).map_err(|e| e.to_string())?;
    let cases = [
        ("row vectors", rows, Some(vec![ints(f2, &[1, 0]), ints(f2, &[0, 1])])),
        ("regular M₂", RightModule::regular(rings[3].1.clone()), None),
        ("R/(x)", quot, Some(vec![ints(f2, &[1])])),
    ];
    for (name, m, expected) in cases {
        let w = annihilator_witness(&m);
        ensure(w.len() <= 2, || format!("{name}: |F| = {}", w.len()))?;
        ensure(m.annihilator(&w) == m.annihilator_of_module(), || format!("{name}: r(F) ≠ r(M)"))?;
        if let Some(e) = expected {
            ensure(w == e, || format!("{name}: witness {w:?}"))?;
        }
    }
    ensure(
        reg_d.quotient(&x).map_err(|e| e.to_string())?.0.annihilator_of_module() == x,
        || "r(R/(x)) ≠ (x)".into(),
    )
}

fn negatives() -> Outcome {
    let dir = corpus_path("negative");
    let mut names: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.expect("dir entry").file_name().into_string().expect("utf-8"))
        .collect();
    names.sort();
    for name in &names {
        let bundle = load(&format!("negative/{name}"));
        let report = match &bundle {
            Bundle::Algebra(a) => a.check(),
            Bundle::ARing(rc) => rc.verify(),
            Bundle::Module(m) => m.check(),
            Bundle::Frobenius(FrobeniusBundle::System { system, .. }) => system.verify(),
            Bundle::Frobenius(FrobeniusBundle::Algebra { data, .. }) => data.verify(),
            Bundle::Hopf(h) => h.verify(),
            Bundle::Action(act) => act.check(),
            Bundle::Coring(cb) => {
                let mut r = cb.coring.verify();
                if let Some(sys) = &cb.frobenius {
                    r.merge("frobenius", sys.verify(&cb.coring));
                }
                r
            }
        };
        let (check, failure) = report
            .first_failure()
            .ok_or_else(|| format!("{name} passes every check"))?;
        ensure(!failure.indices.is_empty(), || format!("{name}: {check} failed without an index"))?;
        for c in report.failed() {
            for f in &c.failures {
                ensure(!f.indices.is_empty(), || {
                    format!("{name}: {} failed without an index", c.name)
                })?;
            }
        }
    }
    ensure(names.len() >= 8, || format!("only {} negative files", names.len()))
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("1 character axioms on every corpus A-ring", 1, character_axioms),
        ("2 invariants, Q, Hom_R(A,M) ≅ M^R, End_R(A) ≅ B", 1, invariant_suite),
        ("3 α and β mutually inverse with image(α) = Q", 5, alpha_beta),
        ("4 trace-1 witness iff χ|_Q hits 1", 1, trace_one_equivalence),
        ("5 quasi-projectivity equals the lifting test", 30, quasi_projectivity),
        ("6 Hopf integrals, integral systems, smash traces", 10, hopf_suite),
        ("7 swap-action smash product", 1, smash_example),
        ("8 Sweedler coring of F_2×F_2", 2, coring_suite),
        ("9 FBN oracle, primes and annihilator witnesses", 30, fbn_oracle),
        ("10 tampered files rejected with indices", 2, negatives),
    ];
    let mut failed = Vec::new();
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(budget), || format!("over budget: {elapsed:.2?} > {budget}s"))
        });
        match &result {
            Ok(()) => println!("PASS  {name}  ({elapsed:.3?}, budget {budget}s)"),
            Err(e) => println!("FAIL  {name}  ({elapsed:.3?}, budget {budget}s): {e}"),
        }
        if result.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
