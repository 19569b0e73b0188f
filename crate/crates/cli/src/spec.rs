//! JSON specification files: explicit structure constants and catalog calls,
//! resolved in file order and certified as they are built.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;
use twistcheck::catalog::{
    adjoint_yd, bicharacter_structures, certify_hopf, character_graded_yd, coboundary_twist, conjugation_yd,
    group_algebra, sweedler_h4, trivial_hopf, GroupPresentation,
};
use twistcheck::exactlin::{Field, LinMap, Scalar, Space, Vector};
use twistcheck::hopf::{check_bialgebra, AlgebraData, BialgebraData, CoalgebraData, HopfData};
use twistcheck::twist::{check_twist, twist_bialgebra, Twist};
use twistcheck::yd::{
    check_comodule, check_module, check_rmatrix, check_yd, check_yd_algebra, trivial_yd_algebra, twist_yd_algebra,
    ComoduleData, ModuleData, RMatrix, YDAlgebra, YDModule,
};
use twistcheck::{Error, Report};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("object `{name}` failed certification")]
    Certification { name: String, report: Box<Report> },
}

/// A resolved object. Group algebras from the catalog remember their group
/// so that group-dependent catalog calls can use them as hosts.
#[derive(Clone, Debug)]
pub enum Object {
    Bialgebra(BialgebraData),
    Hopf { data: HopfData, group: Option<GroupPresentation> },
    Module(ModuleData),
    Comodule(ComoduleData),
    Yd(YDModule),
    YdAlgebra(YDAlgebra),
    Twist(Twist),
    RMatrix(RMatrix),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Bialgebra(_) => "bialgebra",
            Object::Hopf { .. } => "hopf",
            Object::Module(_) => "module",
            Object::Comodule(_) => "comodule",
            Object::Yd(_) => "yd",
            Object::YdAlgebra(_) => "ydalgebra",
            Object::Twist(_) => "twist",
            Object::RMatrix(_) => "rmatrix",
        }
    }

    pub fn bialgebra(&self) -> Option<&BialgebraData> {
        match self {
            Object::Bialgebra(b) => Some(b),
            Object::Hopf { data, .. } => Some(&data.bialgebra),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub field: Field,
    pub objects: Vec<(String, Object)>,
    /// Command lines to execute under `report`.
    pub runs: Vec<Vec<String>>,
    index: BTreeMap<String, usize>,
}

impl Loaded {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.index.get(name).map(|&i| &self.objects[i].1)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    field: String,
    objects: Vec<RawObject>,
    #[serde(default)]
    runs: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Idx {
    Num(usize),
    Label(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Text(String),
}

type Unary = Vec<(Idx, Coeff)>;
type Binary = Vec<(Idx, Idx, Coeff)>;
type Ternary = Vec<(Idx, Idx, Idx, Coeff)>;

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawObject {
    Bialgebra {
        name: String,
        basis: Vec<String>,
        unit: Unary,
        mult: Ternary,
        comult: Ternary,
        counit: Unary,
    },
    Hopf {
        name: String,
        basis: Vec<String>,
        unit: Unary,
        mult: Ternary,
        comult: Ternary,
        counit: Unary,
        antipode: Binary,
    },
    Module {
        name: String,
        host: String,
        basis: Vec<String>,
        action: Ternary,
    },
    Comodule {
        name: String,
        host: String,
        basis: Vec<String>,
        coaction: Ternary,
    },
    Yd {
        name: String,
        host: String,
        basis: Vec<String>,
        action: Ternary,
        coaction: Ternary,
    },
    Ydalgebra {
        name: String,
        host: String,
        basis: Vec<String>,
        action: Ternary,
        coaction: Ternary,
        mult: Ternary,
        unit: Unary,
    },
    Twist {
        name: String,
        host: String,
        terms: Binary,
    },
    Rmatrix {
        name: String,
        host: String,
        terms: Binary,
    },
    Catalog {
        name: String,
        call: String,
        #[serde(default)]
        group: Option<String>,
        #[serde(default)]
        host: Option<String>,
        #[serde(default)]
        matrix: Option<Vec<Vec<u8>>>,
        #[serde(default)]
        u: Option<Unary>,
        #[serde(default)]
        algebra: Option<String>,
        #[serde(default)]
        twist: Option<String>,
    },
}

impl RawObject {
    fn name(&self) -> &str {
        match self {
            RawObject::Bialgebra { name, .. }
            | RawObject::Hopf { name, .. }
            | RawObject::Module { name, .. }
            | RawObject::Comodule { name, .. }
            | RawObject::Yd { name, .. }
            | RawObject::Ydalgebra { name, .. }
            | RawObject::Twist { name, .. }
            | RawObject::Rmatrix { name, .. }
            | RawObject::Catalog { name, .. } => name,
        }
    }
}

pub fn load_spec(path: &Path) -> Result<Loaded, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    load_spec_str(&text, &path.display().to_string())
}

pub fn load_spec_str(text: &str, path: &str) -> Result<Loaded, LoadError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
    })?;
    let at = |name: Option<&str>, message: String| {
        let (line, column) = name.and_then(|n| locate_name(text, n)).unwrap_or((1, 1));
        LoadError::Parse {
            path: path.to_string(),
            line,
            column,
            message,
        }
    };
    let field = Field::parse_descriptor(&raw.field).map_err(|e| at(None, e.to_string()))?;
    let mut loaded = Loaded {
        field,
        objects: Vec::new(),
        runs: raw.runs,
        index: BTreeMap::new(),
    };
    for obj in &raw.objects {
        let name = obj.name().to_string();
        if loaded.index.contains_key(&name) {
            return Err(at(Some(&name), format!("object `{name}` is defined twice")));
        }
        let built = Builder { loaded: &loaded, field, name: &name }.build(obj).map_err(|e| match e {
            BuildError::Input(m) => at(Some(&name), format!("object `{name}`: {m}")),
            BuildError::Certification(report) => LoadError::Certification {
                name: name.clone(),
                report,
            },
        })?;
        log::debug!("loaded {} `{name}`", built.kind());
        loaded.index.insert(name.clone(), loaded.objects.len());
        loaded.objects.push((name, built));
    }
    Ok(loaded)
}

/// Line and column (1-based) of the `"name": "<name>"` entry.
fn locate_name(text: &str, name: &str) -> Option<(usize, usize)> {
    let needle = format!("\"{name}\"");
    let mut from = 0;
    while let Some(off) = text[from..].find(&needle) {
        let pos = from + off;
        let before = text[..pos].trim_end();
        if let Some(b) = before.strip_suffix(':') {
            if b.trim_end().ends_with("\"name\"") {
                let line = text[..pos].matches('\n').count() + 1;
                let col = pos - text[..pos].rfind('\n').map_or(0, |i| i + 1) + 1;
                return Some((line, col));
            }
        }
        from = pos + needle.len();
    }
    None
}

enum BuildError {
    Input(String),
    Certification(Box<Report>),
}

impl From<Error> for BuildError {
    fn from(e: Error) -> BuildError {
        match e {
            Error::CheckFailed(r) => BuildError::Certification(r),
            other => BuildError::Input(other.to_string()),
        }
    }
}

fn input<T>(msg: impl Into<String>) -> Result<T, BuildError> {
    Err(BuildError::Input(msg.into()))
}

fn certify(report: Report) -> Result<(), BuildError> {
    if report.passed() {
        Ok(())
    } else {
        Err(BuildError::Certification(Box::new(report)))
    }
}

struct Builder<'a> {
    loaded: &'a Loaded,
    field: Field,
    name: &'a str,
}

impl Builder<'_> {
    fn object(&self, name: &str) -> Result<&Object, BuildError> {
        self.loaded
            .get(name)
            .ok_or_else(|| BuildError::Input(format!("unresolved reference `{name}`")))
    }

    fn host(&self, name: &str) -> Result<&BialgebraData, BuildError> {
        let o = self.object(name)?;
        o.bialgebra()
            .ok_or_else(|| BuildError::Input(format!("`{name}` is a {}, not a bialgebra", o.kind())))
    }

    fn group_host(&self, name: &str) -> Result<(&GroupPresentation, &BialgebraData), BuildError> {
        match self.object(name)? {
            Object::Hopf {
                data,
                group: Some(g),
            } => Ok((g, &data.bialgebra)),
            _ => input(format!("`{name}` is not a group algebra from the catalog")),
        }
    }

    fn required<'b, T>(&self, v: &'b Option<T>, param: &str, call: &str) -> Result<&'b T, BuildError> {
        v.as_ref()
            .ok_or_else(|| BuildError::Input(format!("catalog call `{call}` needs parameter `{param}`")))
    }

    fn space(&self, basis: &[String]) -> Result<Space, BuildError> {
        Ok(Space::new(self.field, basis.iter().cloned())?)
    }

    fn scalar(&self, c: &Coeff) -> Result<Scalar, BuildError> {
        match c {
            Coeff::Int(n) => Ok(self.field.from_i64(*n)),
            Coeff::Text(s) => Ok(self.field.parse(s)?),
        }
    }

    fn index(&self, i: &Idx, space: &Space, table: &str) -> Result<usize, BuildError> {
        match i {
            Idx::Num(n) if *n < space.dim() => Ok(*n),
            Idx::Num(n) => input(format!("{table}: index {n} out of range for dimension {}", space.dim())),
            Idx::Label(l) => (0..space.dim())
                .find(|&k| space.label(k) == *l)
                .ok_or_else(|| BuildError::Input(format!("{table}: unknown basis label `{l}`"))),
        }
    }

    fn vector(&self, entries: &Unary, space: &Space, table: &str) -> Result<Vector, BuildError> {
        let mut terms = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            terms.push((self.index(i, space, table)?, self.scalar(c)?));
        }
        Ok(Vector::from_terms(terms))
    }

    /// `[i, j, c]`: the image of basis `i` has coefficient `c` on basis `j`.
    fn map1(&self, entries: &Binary, dom: &Space, cod: &Space, table: &str) -> Result<LinMap, BuildError> {
        let mut cols = vec![Vec::new(); dom.dim()];
        for (i, j, c) in entries {
            let (i, j) = (self.index(i, dom, table)?, self.index(j, cod, table)?);
            cols[i].push((j, self.scalar(c)?));
        }
        Ok(LinMap::new(dom.clone(), cod.clone(), cols.into_iter().map(Vector::from_terms).collect())?)
    }

    /// `[i, j, k, c]` with `(i, j)` indexing the domain `d1⊗d2` and `k` the
    /// codomain.
    fn map_from_pair(&self, entries: &Ternary, d1: &Space, d2: &Space, cod: &Space, table: &str) -> Result<LinMap, BuildError> {
        let dom = d1.tensor(d2);
        let mut cols = vec![Vec::new(); dom.dim()];
        for (i, j, k, c) in entries {
            let col = self.index(i, d1, table)? * d2.dim() + self.index(j, d2, table)?;
            cols[col].push((self.index(k, cod, table)?, self.scalar(c)?));
        }
        Ok(LinMap::new(dom, cod.clone(), cols.into_iter().map(Vector::from_terms).collect())?)
    }

    /// `[i, j, k, c]` with `i` indexing the domain and `(j, k)` the codomain
    /// `c1⊗c2`. Every basis element must have at least one entry.
    fn map_to_pair(&self, entries: &Ternary, dom: &Space, c1: &Space, c2: &Space, table: &str) -> Result<LinMap, BuildError> {
        let cod = c1.tensor(c2);
        let mut cols = vec![Vec::new(); dom.dim()];
        for (i, j, k, c) in entries {
            let row = self.index(j, c1, table)? * c2.dim() + self.index(k, c2, table)?;
            cols[self.index(i, dom, table)?].push((row, self.scalar(c)?));
        }
        if let Some(i) = cols.iter().position(|c| c.is_empty()) {
            return input(format!("{table} has no entry for basis element `{}`", dom.label(i)));
        }
        Ok(LinMap::new(dom.clone(), cod, cols.into_iter().map(Vector::from_terms).collect())?)
    }

    fn bialgebra(&self, basis: &[String], unit: &Unary, mult: &Ternary, comult: &Ternary, counit: &Unary) -> Result<BialgebraData, BuildError> {
        let space = self.space(basis)?;
        let k = Space::scalars(self.field);
        let unit = self.vector(unit, &space, "unit")?;
        if unit.is_zero() {
            return input("unit has no entries");
        }
        let mult = self.map_from_pair(mult, &space, &space, &space, "mult")?;
        let comult = self.map_to_pair(comult, &space, &space, &space, "comult")?;
        let counit_terms: Binary = counit.iter().map(|(i, c)| (i.clone(), Idx::Num(0), c.clone())).collect();
        let counit = self.map1(&counit_terms, &space, &k, "counit")?;
        let algebra = AlgebraData::new(space.clone(), mult, unit)?;
        let coalgebra = CoalgebraData::new(space, comult, counit)?;
        Ok(BialgebraData::new(algebra, coalgebra)?)
    }

    fn yd_module(&self, host: &BialgebraData, space: &Space, action: &Ternary, coaction: &Ternary) -> Result<YDModule, BuildError> {
        let act = self.map_from_pair(action, host.space(), space, space, "action")?;
        let coact = self.map_to_pair(coaction, space, space, host.space(), "coaction")?;
        Ok(YDModule::new(
            ModuleData::new(host, space.clone(), act)?,
            ComoduleData::new(host, space.clone(), coact)?,
        )?)
    }

    fn build(&self, obj: &RawObject) -> Result<Object, BuildError> {
        match obj {
            RawObject::Bialgebra {
                basis,
                unit,
                mult,
                comult,
                counit,
                ..
            } => {
                let b = self.bialgebra(basis, unit, mult, comult, counit)?;
                certify(check_bialgebra(&b))?;
                Ok(Object::Bialgebra(b))
            }
            RawObject::Hopf {
                basis,
                unit,
                mult,
                comult,
                counit,
                antipode,
                ..
            } => {
                let b = self.bialgebra(basis, unit, mult, comult, counit)?;
                let s = self.map1(antipode, b.space(), b.space(), "antipode")?;
                let data = certify_hopf(HopfData::new(b, s), self.name)?;
                Ok(Object::Hopf { data, group: None })
            }
            RawObject::Module { host, basis, action, .. } => {
                let h = self.host(host)?;
                let space = self.space(basis)?;
                let act = self.map_from_pair(action, h.space(), &space, &space, "action")?;
                let m = ModuleData::new(h, space, act)?;
                certify(check_module(&m))?;
                Ok(Object::Module(m))
            }
            RawObject::Comodule {
                host, basis, coaction, ..
            } => {
                let h = self.host(host)?;
                let space = self.space(basis)?;
                let coact = self.map_to_pair(coaction, &space, &space, h.space(), "coaction")?;
                let c = ComoduleData::new(h, space, coact)?;
                certify(check_comodule(&c))?;
                Ok(Object::Comodule(c))
            }
            RawObject::Yd {
                host,
                basis,
                action,
                coaction,
                ..
            } => {
                let h = self.host(host)?;
                let y = self.yd_module(h, &self.space(basis)?, action, coaction)?;
                certify(check_yd(&y))?;
                Ok(Object::Yd(y))
            }
            RawObject::Ydalgebra {
                host,
                basis,
                action,
                coaction,
                mult,
                unit,
                ..
            } => {
                let h = self.host(host)?;
                let space = self.space(basis)?;
                let y = self.yd_module(h, &space, action, coaction)?;
                let m = self.map_from_pair(mult, &space, &space, &space, "mult")?;
                let u = self.vector(unit, &space, "unit")?;
                let a = YDAlgebra::new(y, m, u)?;
                certify(check_yd_algebra(&a))?;
                Ok(Object::YdAlgebra(a))
            }
            RawObject::Twist { host, terms, .. } => {
                let h = self.host(host)?;
                let f = self.tensor_element(h, terms, "terms")?;
                certify(check_twist(h, &f))?;
                Ok(Object::Twist(Twist::new(h, f)?))
            }
            RawObject::Rmatrix { host, terms, .. } => {
                let h = self.host(host)?;
                let r = self.tensor_element(h, terms, "terms")?;
                certify(check_rmatrix(h, &r))?;
                Ok(Object::RMatrix(RMatrix::new(h, r)?))
            }
            RawObject::Catalog {
                call,
                group,
                host,
                matrix,
                u,
                algebra,
                twist,
                ..
            } => {
                let host_of = || self.required(host, "host", call).and_then(|h| self.host(h));
                let twist_of = |name: &str| match self.object(name)? {
                    Object::Twist(t) => Ok(t),
                    o => input(format!("`{name}` is a {}, not a twist", o.kind())),
                };
                match call.as_str() {
                    "group_algebra" => {
                        let g = parse_group(self.required(group, "group", call)?)?;
                        let data = group_algebra(&g, self.field)?;
                        Ok(Object::Hopf { data, group: Some(g) })
                    }
                    "sweedler_h4" => Ok(Object::Hopf {
                        data: sweedler_h4(self.field)?,
                        group: None,
                    }),
                    "trivial_hopf" => Ok(Object::Hopf {
                        data: trivial_hopf(self.field),
                        group: None,
                    }),
                    "trivial_twist" => Ok(Object::Twist(Twist::trivial(host_of()?))),
                    "bicharacter_twist" | "bicharacter_rmatrix" => {
                        let (g, h) = self.group_host(self.required(host, "host", call)?)?;
                        let (t, r) = bicharacter_structures(g, h, self.required(matrix, "matrix", call)?)?;
                        if call == "bicharacter_twist" {
                            Ok(Object::Twist(t))
                        } else {
                            let r = r.ok_or_else(|| {
                                let mut rep = check_rmatrix(h, &t.f);
                                rep.subject = format!("{} (bicharacter R-matrix)", rep.subject);
                                BuildError::Certification(Box::new(rep))
                            })?;
                            Ok(Object::RMatrix(r))
                        }
                    }
                    "coboundary_twist" => {
                        let h = host_of()?;
                        let u = self.vector(self.required(u, "u", call)?, h.space(), "u")?;
                        Ok(Object::Twist(coboundary_twist(h, &u)?))
                    }
                    "conjugation_yd" => {
                        let (g, h) = self.group_host(self.required(host, "host", call)?)?;
                        Ok(Object::YdAlgebra(conjugation_yd(g, h)?))
                    }
                    "character_graded_yd" => {
                        let (g, h) = self.group_host(self.required(host, "host", call)?)?;
                        Ok(Object::YdAlgebra(character_graded_yd(g, h)?))
                    }
                    "adjoint_yd" => {
                        let name = self.required(host, "host", call)?;
                        match self.object(name)? {
                            Object::Hopf { data, .. } => Ok(Object::YdAlgebra(adjoint_yd(data)?)),
                            o => input(format!("`{name}` is a {}, not a Hopf algebra", o.kind())),
                        }
                    }
                    "trivial_yd_algebra" => Ok(Object::YdAlgebra(trivial_yd_algebra(host_of()?))),
                    "twisted_bialgebra" => {
                        let t = twist_of(self.required(twist, "twist", call)?)?;
                        Ok(Object::Bialgebra(twist_bialgebra(&t.host, t)?))
                    }
                    "twisted_yd_algebra" => {
                        let t = twist_of(self.required(twist, "twist", call)?)?;
                        let name = self.required(algebra, "algebra", call)?;
                        match self.object(name)? {
                            Object::YdAlgebra(a) => Ok(Object::YdAlgebra(twist_yd_algebra(a, t)?)),
                            o => input(format!("`{name}` is a {}, not a YD algebra", o.kind())),
                        }
                    }
                    other => input(format!("unknown catalog call `{other}`")),
                }
            }
        }
    }

    fn tensor_element(&self, h: &BialgebraData, terms: &Binary, table: &str) -> Result<Vector, BuildError> {
        let n = h.dim();
        let mut out = Vec::with_capacity(terms.len());
        for (i, j, c) in terms {
            out.push((self.index(i, h.space(), table)? * n + self.index(j, h.space(), table)?, self.scalar(c)?));
        }
        Ok(Vector::from_terms(out))
    }
}

/// `S3`, `Z<n>`, `Z2^<k>` or `Z2xZ2`.
fn parse_group(s: &str) -> Result<GroupPresentation, BuildError> {
    let bad = || BuildError::Input(format!("unknown group `{s}` (expected S3, Z<n>, Z2^<k> or Z2xZ2)"));
    match s {
        "S3" => Ok(GroupPresentation::symmetric3()),
        "Z2xZ2" => Ok(GroupPresentation::elementary_abelian_2(2)),
        _ => {
            if let Some(k) = s.strip_prefix("Z2^") {
                let k: u32 = k.parse().map_err(|_| bad())?;
                if (1..=6).contains(&k) {
                    return Ok(GroupPresentation::elementary_abelian_2(k as usize));
                }
                return Err(bad());
            }
            let n: usize = s.strip_prefix('Z').and_then(|n| n.parse().ok()).ok_or_else(bad)?;
            if (1..=64).contains(&n) {
                Ok(GroupPresentation::cyclic(n))
            } else {
                Err(bad())
            }
        }
    }
}
