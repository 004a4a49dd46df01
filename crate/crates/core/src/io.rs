//! JSON bundle files: loading with schema and dimension checks, and
//! canonical storing.
//!
//! Scalars are strings in canonical form (`"3"`, `"-1/2"`). Matrices are
//! lists of rows. Maps out of a tensor product over `A` are written on the
//! field tensor product (index `x * dim N + y`) and must be balanced; elements
//! of such tensor products are written as lists of pure basis terms.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraMap};
use crate::character::{ARing, ARingWithCharacter, Handedness};
use crate::coring::{CoringPresentation, FrobeniusCoringSystem};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::frobext::FrobeniusAlgebraData;
use crate::hopf::{HopfPresentation, ModuleAlgebraAction};
use crate::matrix::{vector, Matrix};
use crate::module::{Bimodule, RightModule};
use crate::morita::{pure_terms, FrobeniusSystem, MoritaContext};
use crate::tensor::TensorOverA;

type Rows = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub table: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSection {
    pub dim: usize,
    pub left: Vec<Rows>,
    pub right: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterSection {
    pub chi: Rows,
    pub handedness: Handedness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSection {
    pub algebra: AlgebraSection,
    pub comul: Rows,
    pub counit: Vec<String>,
    pub antipode: Rows,
}

/// `c · (u_u ⊗ v_v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairTerm {
    pub c: String,
    pub u: usize,
    pub v: usize,
}

/// `c · (r_r ⊗ u_u ⊗ r_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleTerm {
    pub c: String,
    pub r: usize,
    pub u: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSection {
    pub i_mod: BimoduleSection,
    pub j_mod: BimoduleSection,
    /// `I ⊗ J → A` on the field tensor.
    pub f: Rows,
    /// `J ⊗ I → A` on the field tensor.
    pub g: Rows,
    pub f_inv_one: Vec<PairTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSection {
    pub a: AlgebraSection,
    pub r: AlgebraSection,
    pub i: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterSection>,
    pub context: ContextSection,
    pub e: Vec<TripleTerm>,
    /// `R ⊗ I → A` on the field tensor.
    pub nu: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSection {
    pub a: AlgebraSection,
    pub j: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusAlgebraSection {
    pub s: AlgebraSection,
    /// Coordinates of `e` in `S ⊗ S`.
    pub e: Vec<String>,
    pub nu: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoringFrobeniusSection {
    /// `C ⊗ C → A` on the field tensor.
    pub theta: Rows,
    pub z: Vec<String>,
}

/// A file as it appears on disk.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum BundleFile {
    Algebra {
        field: String,
        algebra: AlgebraSection,
    },
    Aring {
        field: String,
        a: AlgebraSection,
        r: AlgebraSection,
        i: Rows,
        character: CharacterSection,
    },
    Module {
        field: String,
        algebra: AlgebraSection,
        dim: usize,
        actions: Vec<Rows>,
    },
    Frobenius {
        field: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        system: Option<SystemSection>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frobenius_algebra: Option<FrobeniusAlgebraSection>,
    },
    Hopf {
        field: String,
        hopf: HopfSection,
    },
    Action {
        field: String,
        hopf: HopfSection,
        algebra: AlgebraSection,
        actions: Vec<Rows>,
    },
    Coring {
        field: String,
        algebra: AlgebraSection,
        bimodule: BimoduleSection,
        /// Columns are `Δ(c_k)` on the field tensor `C ⊗ C`.
        comul: Rows,
        counit: Rows,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grouplike: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        frobenius: Option<CoringFrobeniusSection>,
    },
}

/// Frobenius data as loaded.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum FrobeniusBundle {
    System {
        system: FrobeniusSystem,
        character: Option<ARingWithCharacter>,
    },
    Algebra {
        data: FrobeniusAlgebraData,
        extension: Option<AlgebraMap>,
    },
}

#[derive(Clone, Debug)]
pub struct CoringBundle {
    pub coring: CoringPresentation,
    pub grouplike: Option<Vec<Scalar>>,
    pub frobenius: Option<FrobeniusCoringSystem>,
}

/// A validated file.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Bundle {
    Algebra(Arc<Algebra>),
    ARing(ARingWithCharacter),
    Module(RightModule),
    Frobenius(FrobeniusBundle),
    Hopf(HopfPresentation),
    Action(ModuleAlgebraAction),
    Coring(CoringBundle),
}

impl Bundle {
    pub fn kind(&self) -> &'static str {
        match self {
            Bundle::Algebra(_) => "algebra",
            Bundle::ARing(_) => "aring",
            Bundle::Module(_) => "module",
            Bundle::Frobenius(_) => "frobenius",
            Bundle::Hopf(_) => "hopf",
            Bundle::Action(_) => "action",
            Bundle::Coring(_) => "coring",
        }
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    if s == "Q" {
        return Ok(FieldSpec::Rational);
    }
    let p = s
        .strip_prefix("F_")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Error::schema("field", format!("{s:?} is neither \"Q\" nor \"F_p\"")))?;
    FieldSpec::prime(p)
}

pub fn load(path: &Path) -> Result<Bundle> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text, &path.display().to_string())
}

pub fn parse_str(text: &str, origin: &str) -> Result<Bundle> {
    let file: BundleFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    from_file(&file)
}

/// Canonical JSON text, newline-terminated.
pub fn store(bundle: &Bundle) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(bundle)).expect("bundle files serialize");
    s.push('\n');
    s
}

pub fn save(bundle: &Bundle, path: &Path) -> Result<()> {
    fs::write(path, store(bundle)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

// ---------------------------------------------------------------------------
// Reading

fn scalar(f: FieldSpec, s: &str, loc: &str) -> Result<Scalar> {
    f.parse(s).map_err(|e| Error::Scalar(format!("{loc}: {e}")))
}

fn vec_of(f: FieldSpec, v: &[String], len: usize, loc: &str) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(Error::schema(loc, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(k, s)| scalar(f, s, &format!("{loc}[{k}]")))
        .collect()
}

fn matrix_of(f: FieldSpec, rows: &Rows, shape: (usize, usize), loc: &str) -> Result<Matrix> {
    if rows.len() != shape.0 {
        return Err(Error::schema(loc, format!("expected {} rows, found {}", shape.0, rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(k, r)| vec_of(f, r, shape.1, &format!("{loc}[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(f, shape.1, rows))
}

fn matrices_of(f: FieldSpec, ms: &[Rows], count: usize, shape: (usize, usize), loc: &str) -> Result<Vec<Matrix>> {
    if ms.len() != count {
        return Err(Error::schema(loc, format!("expected {count} matrices, found {}", ms.len())));
    }
    ms.iter()
        .enumerate()
        .map(|(k, m)| matrix_of(f, m, shape, &format!("{loc}[{k}]")))
        .collect()
}

fn algebra_of(f: FieldSpec, s: &AlgebraSection, loc: &str) -> Result<Arc<Algebra>> {
    let n = s.basis.len();
    if s.table.len() != n {
        return Err(Error::schema(format!("{loc}.table"), format!("expected {n} rows, found {}", s.table.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in s.table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::schema(format!("{loc}.table[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
        table.push(
            row.iter()
                .enumerate()
                .map(|(j, v)| vec_of(f, v, n, &format!("{loc}.table[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let unit = vec_of(f, &s.unit, n, &format!("{loc}.unit"))?;
    Ok(Arc::new(Algebra::new(f, s.basis.clone(), table, unit)?))
}

fn bimodule_of(f: FieldSpec, s: &BimoduleSection, left: &Arc<Algebra>, right: &Arc<Algebra>, loc: &str) -> Result<Bimodule> {
    let shape = (s.dim, s.dim);
    let l = matrices_of(f, &s.left, left.dim(), shape, &format!("{loc}.left"))?;
    let r = matrices_of(f, &s.right, right.dim(), shape, &format!("{loc}.right"))?;
    Bimodule::new(left.clone(), right.clone(), s.dim, l, r)
}

fn hopf_of(f: FieldSpec, s: &HopfSection, loc: &str) -> Result<HopfPresentation> {
    let h = algebra_of(f, &s.algebra, &format!("{loc}.algebra"))?;
    let n = h.dim();
    let comul = matrix_of(f, &s.comul, (n * n, n), &format!("{loc}.comul"))?;
    let counit = vec_of(f, &s.counit, n, &format!("{loc}.counit"))?;
    let antipode = matrix_of(f, &s.antipode, (n, n), &format!("{loc}.antipode"))?;
    HopfPresentation::new(h, comul, counit, antipode)
}

fn character_of(f: FieldSpec, ring: ARing, s: &CharacterSection, loc: &str) -> Result<ARingWithCharacter> {
    let chi = matrix_of(f, &s.chi, (ring.a.dim(), ring.r.dim()), &format!("{loc}.chi"))?;
    ARingWithCharacter::new(ring, chi, s.handedness)
}

fn aring_of(f: FieldSpec, a: &AlgebraSection, r: &AlgebraSection, i: &Rows) -> Result<ARing> {
    let a = algebra_of(f, a, "a")?;
    let r = algebra_of(f, r, "r")?;
    let i = matrix_of(f, i, (r.dim(), a.dim()), "i")?;
    ARing::new(AlgebraMap::new(a, r, i, true)?)
}

fn system_of(f: FieldSpec, s: &SystemSection) -> Result<FrobeniusBundle> {
    let ring = aring_of(f, &s.a, &s.r, &s.i)?;
    let a = ring.a.clone();
    let c = &s.context;
    let i_mod = bimodule_of(f, &c.i_mod, &a, &a, "system.context.i_mod")?;
    let j_mod = bimodule_of(f, &c.j_mod, &a, &a, "system.context.j_mod")?;
    let ij = TensorOverA::new(&i_mod, &j_mod)?;
    let ji = TensorOverA::new(&j_mod, &i_mod)?;
    let (di, dj) = (i_mod.dim(), j_mod.dim());
    let fm = ij.descend(&matrix_of(f, &c.f, (a.dim(), di * dj), "system.context.f")?)?;
    let gm = ji.descend(&matrix_of(f, &c.g, (a.dim(), dj * di), "system.context.g")?)?;
    let mut one = f.zeros(di * dj);
    for (k, t) in c.f_inv_one.iter().enumerate() {
        if t.u >= di || t.v >= dj {
            return Err(Error::schema(format!("system.context.f_inv_one[{k}]"), "index out of range"));
        }
        let coef = scalar(f, &t.c, &format!("system.context.f_inv_one[{k}].c"))?;
        one[t.u * dj + t.v] = &one[t.u * dj + t.v] + &coef;
    }
    let context = MoritaContext::new(i_mod, j_mod, fm, gm, ij.project(&one))?;
    let shell = FrobeniusSystem::shell(context.clone(), ring.clone())?;
    let dr = ring.r.dim();
    let mut e = f.zeros(shell.t().dim());
    for (k, t) in s.e.iter().enumerate() {
        if t.r >= dr || t.u >= di || t.s >= dr {
            return Err(Error::schema(format!("system.e[{k}]"), "index out of range"));
        }
        let coef = scalar(f, &t.c, &format!("system.e[{k}].c"))?;
        let term = shell.pure3(&f.unit_vector(dr, t.r), &f.unit_vector(di, t.u), &f.unit_vector(dr, t.s));
        vector::axpy(&mut e, &coef, &term);
    }
    let nu = shell.t1().descend(&matrix_of(f, &s.nu, (a.dim(), dr * di), "system.nu")?)?;
    let system = FrobeniusSystem::new(context, ring.clone(), e, nu)?;
    let character = match &s.character {
        Some(cs) => Some(character_of(f, ring, cs, "system.character")?),
        None => None,
    };
    Ok(FrobeniusBundle::System { system, character })
}

fn frobenius_algebra_of(f: FieldSpec, s: &FrobeniusAlgebraSection) -> Result<FrobeniusBundle> {
    let alg = algebra_of(f, &s.s, "frobenius_algebra.s")?;
    let n = alg.dim();
    let e = vec_of(f, &s.e, n * n, "frobenius_algebra.e")?;
    let nu = vec_of(f, &s.nu, n, "frobenius_algebra.nu")?;
    let data = FrobeniusAlgebraData::new(alg.clone(), e, nu)?;
    let extension = match &s.extension {
        Some(x) => {
            let a = algebra_of(f, &x.a, "frobenius_algebra.extension.a")?;
            let j = matrix_of(f, &x.j, (a.dim(), n), "frobenius_algebra.extension.j")?;
            Some(AlgebraMap::new(alg, a, j, true)?)
        }
        None => None,
    };
    Ok(FrobeniusBundle::Algebra { data, extension })
}

pub fn from_file(file: &BundleFile) -> Result<Bundle> {
    Ok(match file {
        BundleFile::Algebra { field, algebra } => Bundle::Algebra(algebra_of(parse_field(field)?, algebra, "algebra")?),
        BundleFile::Aring { field, a, r, i, character } => {
            let f = parse_field(field)?;
            let ring = aring_of(f, a, r, i)?;
            Bundle::ARing(character_of(f, ring, character, "character")?)
        }
        BundleFile::Module {
            field,
            algebra,
            dim,
            actions,
        } => {
            let f = parse_field(field)?;
            let alg = algebra_of(f, algebra, "algebra")?;
            let acts = matrices_of(f, actions, alg.dim(), (*dim, *dim), "actions")?;
            Bundle::Module(RightModule::new(alg, *dim, acts)?)
        }
        BundleFile::Frobenius {
            field,
            system,
            frobenius_algebra,
        } => {
            let f = parse_field(field)?;
            match (system, frobenius_algebra) {
                (Some(s), None) => Bundle::Frobenius(system_of(f, s)?),
                (None, Some(s)) => Bundle::Frobenius(frobenius_algebra_of(f, s)?),
                _ => {
                    return Err(Error::schema(
                        "system",
                        "exactly one of \"system\" and \"frobenius_algebra\" must be present",
                    ))
                }
            }
        }
        BundleFile::Hopf { field, hopf } => Bundle::Hopf(hopf_of(parse_field(field)?, hopf, "hopf")?),
        BundleFile::Action {
            field,
            hopf,
            algebra,
            actions,
        } => {
            let f = parse_field(field)?;
            let h = Arc::new(hopf_of(f, hopf, "hopf")?);
            let a = algebra_of(f, algebra, "algebra")?;
            let acts = matrices_of(f, actions, h.dim(), (a.dim(), a.dim()), "actions")?;
            Bundle::Action(ModuleAlgebraAction::new(h, a, acts)?)
        }
        BundleFile::Coring {
            field,
            algebra,
            bimodule,
            comul,
            counit,
            grouplike,
            frobenius,
        } => {
            let f = parse_field(field)?;
            let a = algebra_of(f, algebra, "algebra")?;
            let c = bimodule_of(f, bimodule, &a, &a, "bimodule")?;
            let n = c.dim();
            let cc = TensorOverA::new(&c, &c)?;
            let comul = cc.projection().mul(&matrix_of(f, comul, (n * n, n), "comul")?);
            let counit = matrix_of(f, counit, (a.dim(), n), "counit")?;
            let coring = CoringPresentation::new(c, comul, counit)?;
            let grouplike = grouplike.as_ref().map(|x| vec_of(f, x, n, "grouplike")).transpose()?;
            let frobenius = match frobenius {
                Some(s) => {
                    let theta = coring
                        .tensor()
                        .descend(&matrix_of(f, &s.theta, (a.dim(), n * n), "frobenius.theta")?)?;
                    let z = vec_of(f, &s.z, n, "frobenius.z")?;
                    Some(FrobeniusCoringSystem { theta, z })
                }
                None => None,
            };
            Bundle::Coring(CoringBundle {
                coring,
                grouplike,
                frobenius,
            })
        }
    })
}

// ---------------------------------------------------------------------------
// Writing

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn rows(m: &Matrix) -> Rows {
    m.row_vectors().iter().map(|r| strs(r)).collect()
}

fn field_name(f: FieldSpec) -> String {
    f.to_string()
}

pub fn algebra_section(a: &Algebra) -> AlgebraSection {
    AlgebraSection {
        basis: a.basis_names().to_vec(),
        unit: strs(a.unit()),
        table: a.table().iter().map(|row| row.iter().map(|v| strs(v)).collect()).collect(),
    }
}

fn bimodule_section(b: &Bimodule) -> BimoduleSection {
    BimoduleSection {
        dim: b.dim(),
        left: b.left_actions().iter().map(rows).collect(),
        right: b.right_actions().iter().map(rows).collect(),
    }
}

fn hopf_section(h: &HopfPresentation) -> HopfSection {
    HopfSection {
        algebra: algebra_section(h.algebra()),
        comul: rows(h.comul()),
        counit: strs(h.counit()),
        antipode: rows(h.antipode()),
    }
}

fn character_section(rc: &ARingWithCharacter) -> CharacterSection {
    CharacterSection {
        chi: rows(&rc.chi),
        handedness: rc.handedness,
    }
}

fn system_section(sys: &FrobeniusSystem, character: Option<&ARingWithCharacter>) -> SystemSection {
    let ctx = sys.context();
    let ring = sys.ring();
    SystemSection {
        a: algebra_section(&ring.a),
        r: algebra_section(&ring.r),
        i: rows(ring.i.matrix()),
        character: character.map(character_section),
        context: ContextSection {
            i_mod: bimodule_section(ctx.i_mod()),
            j_mod: bimodule_section(ctx.j_mod()),
            f: rows(&ctx.f().mul(ctx.ij().projection())),
            g: rows(&ctx.g().mul(ctx.ji().projection())),
            f_inv_one: pure_terms(ctx.ij(), ctx.f_inv_one())
                .into_iter()
                .map(|(c, u, v)| PairTerm { c: c.to_string(), u, v })
                .collect(),
        },
        e: sys
            .e_terms()
            .into_iter()
            .map(|(c, r, u, s)| TripleTerm {
                c: c.to_string(),
                r,
                u,
                s,
            })
            .collect(),
        nu: rows(&sys.nu().mul(sys.t1().projection())),
    }
}

pub fn to_file(bundle: &Bundle) -> BundleFile {
    match bundle {
        Bundle::Algebra(a) => BundleFile::Algebra {
            field: field_name(a.field()),
            algebra: algebra_section(a),
        },
        Bundle::ARing(rc) => BundleFile::Aring {
            field: field_name(rc.field()),
            a: algebra_section(rc.a()),
            r: algebra_section(rc.r()),
            i: rows(rc.i().matrix()),
            character: character_section(rc),
        },
        Bundle::Module(m) => BundleFile::Module {
            field: field_name(m.field()),
            algebra: algebra_section(m.algebra()),
            dim: m.dim(),
            actions: m.actions().iter().map(rows).collect(),
        },
        Bundle::Frobenius(FrobeniusBundle::System { system, character }) => BundleFile::Frobenius {
            field: field_name(system.field()),
            system: Some(system_section(system, character.as_ref())),
            frobenius_algebra: None,
        },
        Bundle::Frobenius(FrobeniusBundle::Algebra { data, extension }) => BundleFile::Frobenius {
            field: field_name(data.field()),
            system: None,
            frobenius_algebra: Some(FrobeniusAlgebraSection {
                s: algebra_section(&data.s),
                e: strs(&data.e),
                nu: strs(&data.nu),
                extension: extension.as_ref().map(|j| ExtensionSection {
                    a: algebra_section(j.target()),
                    j: rows(j.matrix()),
                }),
            }),
        },
        Bundle::Hopf(h) => BundleFile::Hopf {
            field: field_name(h.field()),
            hopf: hopf_section(h),
        },
        Bundle::Action(act) => BundleFile::Action {
            field: field_name(act.algebra().field()),
            hopf: hopf_section(act.hopf()),
            algebra: algebra_section(act.algebra()),
            actions: act.actions().iter().map(rows).collect(),
        },
        Bundle::Coring(cb) => {
            let c = &cb.coring;
            BundleFile::Coring {
                field: field_name(c.field()),
                algebra: algebra_section(c.algebra()),
                bimodule: bimodule_section(c.bimodule()),
                comul: rows(&c.tensor().section().mul(c.comul())),
                counit: rows(c.counit()),
                grouplike: cb.grouplike.as_deref().map(strs),
                frobenius: cb.frobenius.as_ref().map(|s| CoringFrobeniusSection {
                    theta: rows(&s.theta.mul(c.tensor().projection())),
                    z: strs(&s.z),
                }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn algebra_round_trip() {
        let a = Arc::new(corpus::cyclic_group_algebra(FieldSpec::Rational, 2));
        let text = store(&Bundle::Algebra(a.clone()));
        match parse_str(&text, "mem").unwrap() {
            Bundle::Algebra(b) => assert_eq!(*b, *a),
            other => panic!("wrong kind {}", other.kind()),
        }
    }

    #[test]
    fn bad_unit_length_names_the_field() {
        let a = corpus::cyclic_group_algebra(FieldSpec::Rational, 2);
        let mut file = to_file(&Bundle::Algebra(Arc::new(a)));
        if let BundleFile::Algebra { algebra, .. } = &mut file {
            algebra.unit.push("0".into());
        }
        let text = serde_json::to_string(&file).unwrap();
        match parse_str(&text, "mem") {
            Err(Error::Schema { field, .. }) => assert_eq!(field, "algebra.unit"),
            other => panic!("expected a schema error, got {other:?}"),
        }
    }

    #[test]
    fn unreduced_fraction_is_a_scalar_error() {
        let a = corpus::cyclic_group_algebra(FieldSpec::Rational, 2);
        let mut file = to_file(&Bundle::Algebra(Arc::new(a)));
        if let BundleFile::Algebra { algebra, .. } = &mut file {
            algebra.table[1][1][0] = "2/4".into();
        }
        let text = serde_json::to_string(&file).unwrap();
        match parse_str(&text, "mem") {
            Err(Error::Scalar(msg)) => assert!(msg.contains("algebra.table[1][1][0]"), "{msg}"),
            other => panic!("expected a scalar error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        match parse_str("{\n  \"kind\": \"algebra\",\n  oops\n}", "mem") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn system_round_trip() {
        let (sys, rc) = corpus::group_algebra_frobenius(FieldSpec::Prime(3));
        let b = Bundle::Frobenius(FrobeniusBundle::System {
            system: sys.clone(),
            character: Some(rc),
        });
        let text = store(&b);
        let back = parse_str(&text, "mem").unwrap();
        assert_eq!(store(&back), text);
        match back {
            Bundle::Frobenius(FrobeniusBundle::System { system, .. }) => {
                assert_eq!(system.e(), sys.e());
                assert_eq!(system.nu(), sys.nu());
                assert!(system.verify().is_ok());
            }
            _ => panic!("wrong kind"),
        }
    }
}
