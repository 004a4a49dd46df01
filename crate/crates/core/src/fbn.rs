//! Exhaustive boundedness checks for finite rings: right and two-sided
//! ideals, prime ideals, essential right ideals, the fully bounded
//! noetherian test, annihilator witnesses, and the module predicates
//! used alongside them.
//!
//! Every finite ring is artinian, hence noetherian; the reports say so
//! rather than testing it.

use serde::Serialize;

use crate::algebra::{is_ideal, product_space, Algebra, Side};
use crate::character::ARingWithCharacter;
use crate::error::Result;
use crate::field::{FieldSpec, Scalar};
use crate::module::{hom_space, RightModule};
use crate::morita::{FrobeniusSystem, TraceData};
use crate::subspace::{EnumCaps, Subspace};

use std::sync::Arc;

/// Every right ideal, in the canonical enumeration order.
pub fn right_ideals(alg: &Arc<Algebra>, caps: EnumCaps) -> Result<Vec<Subspace>> {
    RightModule::regular(alg.clone()).submodules(caps)
}

/// Every two-sided ideal, in the canonical enumeration order.
pub fn two_sided_ideals(alg: &Arc<Algebra>, caps: EnumCaps) -> Result<Vec<Subspace>> {
    Ok(right_ideals(alg, caps)?
        .into_iter()
        .filter(|s| is_ideal(alg, s, Side::TwoSided))
        .collect())
}

/// Proper two-sided ideals `P` such that `IJ ⊆ P` forces `I ⊆ P` or `J ⊆ P`.
pub fn prime_ideals(alg: &Arc<Algebra>, caps: EnumCaps) -> Result<Vec<Subspace>> {
    let ideals = two_sided_ideals(alg, caps)?;
    Ok(prime_among(alg, &ideals))
}

fn prime_among(alg: &Algebra, ideals: &[Subspace]) -> Vec<Subspace> {
    let products: Vec<Vec<Subspace>> = ideals
        .iter()
        .map(|i| ideals.iter().map(|j| product_space(alg, i, j)).collect())
        .collect();
    ideals
        .iter()
        .filter(|p| !p.is_full())
        .filter(|p| {
            (0..ideals.len()).all(|x| {
                (0..ideals.len()).all(|y| {
                    !products[x][y].is_subspace_of(p) || ideals[x].is_subspace_of(p) || ideals[y].is_subspace_of(p)
                })
            })
        })
        .cloned()
        .collect()
}

/// Whether `i` meets every nonzero member of `right_ideals` nontrivially.
pub fn is_essential(right_ideals: &[Subspace], i: &Subspace) -> bool {
    right_ideals
        .iter()
        .filter(|k| !k.is_zero())
        .all(|k| !i.meet(k).expect("same ambient space").is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeVerdict {
    /// Canonical basis of the prime ideal.
    pub prime: Vec<Vec<String>>,
    pub quotient_dim: usize,
    pub essential_right_ideals: usize,
    /// Whether every essential right ideal of `R/P` contains a nonzero two-sided ideal.
    pub bounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FbnReport {
    pub right_ideals: usize,
    pub two_sided_ideals: usize,
    pub primes: Vec<PrimeVerdict>,
    pub noetherian: &'static str,
    pub fbn: bool,
}

/// Right fully bounded noetherian test: each `R/P` for `P` prime must be right bounded.
pub fn is_right_fbn(alg: &Arc<Algebra>, caps: EnumCaps) -> Result<FbnReport> {
    let rights = right_ideals(alg, caps)?;
    let twos: Vec<_> = rights.iter().filter(|s| is_ideal(alg, s, Side::TwoSided)).cloned().collect();
    let primes = prime_among(alg, &twos);
    let mut verdicts = Vec::with_capacity(primes.len());
    for p in &primes {
        let (quot, _) = alg.quotient(p)?;
        let quot = Arc::new(quot);
        let q_rights = right_ideals(&quot, caps)?;
        let q_twos: Vec<_> = q_rights
            .iter()
            .filter(|s| !s.is_zero() && is_ideal(&quot, s, Side::TwoSided))
            .collect();
        let essential: Vec<_> = q_rights.iter().filter(|i| is_essential(&q_rights, i)).collect();
        let bounded = essential.iter().all(|e| q_twos.iter().any(|t| t.is_subspace_of(e)));
        verdicts.push(PrimeVerdict {
            prime: fmt_basis(p),
            quotient_dim: quot.dim(),
            essential_right_ideals: essential.len(),
            bounded,
        });
    }
    let fbn = verdicts.iter().all(|v| v.bounded);
    Ok(FbnReport {
        right_ideals: rights.len(),
        two_sided_ideals: twos.len(),
        primes: verdicts,
        noetherian: "automatic (finite ring)",
        fbn,
    })
}

pub(crate) fn fmt_basis(s: &Subspace) -> Vec<Vec<String>> {
    s.basis_vectors()
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect()
}

/// Candidate elements for annihilator witnesses: every nonzero vector when
/// the module has at most 4096 elements, ordered by support size, then
/// support, then entries; otherwise the basis vectors.
fn witness_candidates(field: FieldSpec, dim: usize) -> Vec<Vec<Scalar>> {
    let small = field
        .elements()
        .and_then(|els| els.len().checked_pow(dim as u32))
        .is_some_and(|size| size <= 4096);
    if !small {
        return (0..dim).map(|k| field.unit_vector(dim, k)).collect();
    }
    let els = field.elements().expect("finite field");
    let nonzero: Vec<Scalar> = els.into_iter().filter(|e| !e.is_zero()).collect();
    let mut out = Vec::new();
    for w in 1..=dim {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            let mut digits = vec![0usize; w];
            loop {
                let mut v = field.zeros(dim);
                for (pos, d) in support.iter().zip(&digits) {
                    v[*pos] = nonzero[*d].clone();
                }
                out.push(v);
                let mut k = w;
                let mut carried = true;
                while carried && k > 0 {
                    k -= 1;
                    digits[k] += 1;
                    if digits[k] == nonzero.len() {
                        digits[k] = 0;
                    } else {
                        carried = false;
                    }
                }
                if carried {
                    break;
                }
            }
            if !next_combination(&mut support, dim) {
                break;
            }
        }
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A finite `F ⊆ M` with `r_R(F) = r_R(M)`, built greedily: each step adds
/// the first candidate whose addition shrinks the annihilator the most.
pub fn annihilator_witness(m: &RightModule) -> Vec<Vec<Scalar>> {
    let target = m.annihilator_of_module();
    let candidates = witness_candidates(m.field(), m.dim());
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let mut current = m.annihilator(&chosen);
    while current != target {
        let mut best: Option<(usize, Subspace)> = None;
        for (k, v) in candidates.iter().enumerate() {
            let mut trial = chosen.clone();
            trial.push(v.clone());
            let ann = m.annihilator(&trial);
            if ann.dim() < best.as_ref().map_or(current.dim(), |(_, s)| s.dim()) {
                best = Some((k, ann));
            }
        }
        let (k, ann) = best.expect("the module's own basis shrinks the annihilator to r_R(M)");
        chosen.push(candidates[k].clone());
        current = ann;
    }
    chosen
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaithfulnessReport {
    /// `Hom_R(P, M') ≠ 0` for every nonzero submodule `M'`.
    pub p_faithful: bool,
    /// A nonzero submodule receiving no nonzero map from `P`.
    pub counterexample: Option<Subspace>,
    /// `Σ_f f(P) = M`.
    pub finitely_p_generated: bool,
    pub image_dim: usize,
}

pub fn faithfulness_predicates(p: &RightModule, m: &RightModule, caps: EnumCaps) -> Result<FaithfulnessReport> {
    let mut counterexample = None;
    for s in m.submodules(caps)? {
        if s.is_zero() {
            continue;
        }
        let sub = m.submodule(&s)?;
        if hom_space(p, &sub)?.is_empty() {
            counterexample = Some(s);
            break;
        }
    }
    let images = hom_space(p, m)?.into_iter().flat_map(|f| f.columns());
    let image = Subspace::span(m.field(), m.dim(), images);
    Ok(FaithfulnessReport {
        p_faithful: counterexample.is_none(),
        counterexample,
        finitely_p_generated: image.is_full(),
        image_dim: image.dim(),
    })
}

/// The three equivalent conditions and the hypotheses that link them,
/// evaluated on a finite instance. Left-handed characters are evaluated on
/// their right-handed opposite view.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FbnTransferReport {
    pub r_finitely_generated_over_a: bool,
    pub a_fbn: bool,
    pub r_fbn: bool,
    pub b_fbn: bool,
    pub noetherian: &'static str,
    pub quasi_projective: bool,
    pub projectivity_witness: Option<Vec<String>>,
    pub trace_one_witness: Option<Vec<String>>,
    pub conditions_agree: bool,
}

pub fn fbn_transfer_report(
    rc: &ARingWithCharacter,
    sys: Option<(&FrobeniusSystem, &ARingWithCharacter)>,
    caps: EnumCaps,
) -> Result<FbnTransferReport> {
    let view = rc.right_view();
    let a_fbn = is_right_fbn(view.a(), caps)?.fbn;
    let r_fbn = is_right_fbn(view.r(), caps)?.fbn;
    let b = Arc::new(view.b_algebra()?);
    let b_fbn = is_right_fbn(&b, caps)?.fbn;
    let quasi_projective = view.quasi_projectivity(caps)?.answer;
    let fmt = |v: Vec<Scalar>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let projectivity_witness = view.projectivity_witness().map(fmt);
    let trace_one_witness = match sys {
        Some((s, src)) => TraceData::compute(s, src)?.trace_one_witness(src.a().unit()).map(fmt),
        None => None,
    };
    Ok(FbnTransferReport {
        r_finitely_generated_over_a: true,
        a_fbn,
        r_fbn,
        b_fbn,
        noetherian: "automatic (finite rings)",
        quasi_projective,
        projectivity_witness,
        trace_one_witness,
        conditions_agree: a_fbn == r_fbn && r_fbn == b_fbn,
    })
}
