//! JSON documents for Hopf superalgebras, pairs, Lie superalgebras and
//! Harish-Chandra pairs. Scalars are always strings (`"3/4"`, `"-1"`),
//! basis elements are referred to by name, and unknown fields are rejected.
//!
//! Every document carries a `"kind"` and an optional `"field"` (`"Q"` or
//! `"Fp:<p>"`).

use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hcp::HcpData;
use crate::hopfcore::{dual, primitives, HopfSuperAlgebra, LieTable, Tensor2};
use crate::report::format_vector;
use crate::rewrite::{CocommutativeHopf, Enveloping, FiniteJ, Presentation};
use crate::superlin::{Echelon, Field, Matrix, SparseVec, SuperSpace, Vector};

/// Basis name to scalar literal.
pub type Combination = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfTables {
    /// `[name, parity]` pairs.
    pub basis: Vec<(String, u8)>,
    pub unit: Combination,
    /// `[a, b, a*b]`; missing products are zero.
    pub mult: Vec<(String, String, Combination)>,
    /// `[a, [[left, right, scalar], ...]]`.
    pub comult: Vec<(String, Vec<(String, String, String)>)>,
    pub counit: Combination,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(String, Combination)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub basis: Vec<(String, u8)>,
    pub unit: Combination,
    pub mult: Vec<(String, String, Combination)>,
    pub comult: Vec<(String, Vec<(String, String, String)>)>,
    pub counit: Combination,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(String, Combination)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieTables {
    pub basis: Vec<(String, u8)>,
    /// `[a, b, [a, b]]`; missing brackets are zero.
    pub bracket: Vec<(String, String, Combination)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub basis: Vec<(String, u8)>,
    pub bracket: Vec<(String, String, Combination)>,
}

/// `J` is either a finite Hopf algebra or the enveloping algebra of an
/// ordinary Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum JSpec {
    Hopf(HopfTables),
    Enveloping(LieTables),
}

/// An element of `J` as a list of `[word, scalar]`, each word a product of
/// generators (basis elements for finite `J`).
pub type JElement = Vec<(Vec<String>, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(rename = "J")]
    pub j: JSpec,
    #[serde(rename = "X")]
    pub x: Vec<String>,
    /// `[x, generator, x <| generator]`.
    pub action: Vec<(String, String, Combination)>,
    /// `[x, y, [x, y]]`.
    pub bracket: Vec<(String, String, JElement)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HcpDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(rename = "C")]
    pub c: HopfTables,
    #[serde(rename = "W")]
    pub w: Vec<String>,
    /// `[w_i, w_j, c, scalar]`: the coaction of `w_i` contains `scalar w_j ⊗ c`.
    pub coaction: Vec<(String, String, String, String)>,
    /// Declared elements of `C*`: `[name, values on the basis of C]`.
    pub primitives: Vec<(String, Combination)>,
    /// `[w_i*, w_j*, combination of declared primitives]`, by names of `W`.
    pub bracket: Vec<(String, String, Combination)>,
}

/// A pair of dense matrices given row by row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub f: Vec<Vec<String>>,
    pub g: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hopf(HopfDoc),
    Pair(PairDoc),
    LieSuperalgebra(LieDoc),
    Hcp(HcpDoc),
    Morphism(MorphismDoc),
}

#[derive(Deserialize)]
struct KindOnly {
    kind: String,
}

fn parse_as<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Schema(format!("at {path}: {}", e.into_inner()))
    })
}

pub fn parse_document(text: &str) -> Result<Document> {
    let k: KindOnly = serde_json::from_str(text).map_err(|e| Error::Schema(format!("missing or invalid \"kind\": {e}")))?;
    Ok(match k.kind.as_str() {
        "hopf" => Document::Hopf(parse_as(text)?),
        "pair" => Document::Pair(parse_as(text)?),
        "lie-superalgebra" => Document::LieSuperalgebra(parse_as(text)?),
        "hcp" => Document::Hcp(parse_as(text)?),
        "morphism" => Document::Morphism(parse_as(text)?),
        other => {
            return Err(Error::Schema(format!(
                "unknown kind {other:?}; expected hopf, pair, lie-superalgebra, hcp or morphism"
            )))
        }
    })
}

impl Document {
    pub fn kind(&self) -> &str {
        match self {
            Document::Hopf(d) => &d.kind,
            Document::Pair(d) => &d.kind,
            Document::LieSuperalgebra(d) => &d.kind,
            Document::Hcp(d) => &d.kind,
            Document::Morphism(d) => &d.kind,
        }
    }

    pub fn declared_field(&self) -> Option<&str> {
        match self {
            Document::Hopf(d) => d.field.as_deref(),
            Document::Pair(d) => d.field.as_deref(),
            Document::LieSuperalgebra(d) => d.field.as_deref(),
            Document::Hcp(d) => d.field.as_deref(),
            Document::Morphism(d) => d.field.as_deref(),
        }
    }

    /// `override_field` wins over the declared field; `Q` is the default.
    pub fn field(&self, override_field: Option<Field>) -> Result<Field> {
        match (override_field, self.declared_field()) {
            (Some(f), _) => Ok(f),
            (None, Some(s)) => Field::parse(s),
            (None, None) => Ok(Field::Rational),
        }
    }

    pub fn to_json(&self) -> String {
        let out = match self {
            Document::Hopf(d) => serde_json::to_string_pretty(d),
            Document::Pair(d) => serde_json::to_string_pretty(d),
            Document::LieSuperalgebra(d) => serde_json::to_string_pretty(d),
            Document::Hcp(d) => serde_json::to_string_pretty(d),
            Document::Morphism(d) => serde_json::to_string_pretty(d),
        };
        out.expect("documents serialize")
    }
}

struct Names<'a> {
    what: &'a str,
    index: BTreeMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(what: &'a str, names: impl IntoIterator<Item = &'a String>) -> Result<Names<'a>> {
        let mut index = BTreeMap::new();
        for (i, n) in names.into_iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(Error::Schema(format!("duplicate {what} name {n:?}")));
            }
        }
        Ok(Names { what, index })
    }

    fn get(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(format!("{name} (not a {} name)", self.what)))
    }

    fn vector(&self, field: Field, c: &Combination) -> Result<Vector> {
        let mut v = Vector::new();
        for (n, s) in c {
            v.add_term(self.get(n)?, field.parse_scalar(s)?);
        }
        Ok(v)
    }
}

fn combination(names: &[String], v: &Vector) -> Combination {
    v.iter().map(|(&k, c)| (names[k].clone(), c.literal())).collect()
}

fn once<T>(seen: &mut BTreeSet<T>, key: T, what: impl FnOnce() -> String) -> Result<()>
where
    T: Ord,
{
    if seen.insert(key) {
        Ok(())
    } else {
        Err(Error::Schema(format!("{} is given twice", what())))
    }
}

impl HopfTables {
    pub fn to_hopf(&self, field: Field) -> Result<HopfSuperAlgebra> {
        let space = SuperSpace::new(self.basis.clone())?;
        let names = Names::new("basis", space.names())?;
        let n = space.dim();
        let mut mult = vec![vec![Vector::new(); n]; n];
        let mut seen = BTreeSet::new();
        for (a, b, v) in &self.mult {
            let (i, j) = (names.get(a)?, names.get(b)?);
            once(&mut seen, (i, j), || format!("product {a}*{b}"))?;
            mult[i][j] = names.vector(field, v)?;
        }
        let mut comult = vec![Tensor2::new(); n];
        let mut seen = BTreeSet::new();
        for (a, terms) in &self.comult {
            let i = names.get(a)?;
            once(&mut seen, i, || format!("coproduct of {a}"))?;
            for (l, r, s) in terms {
                comult[i].add_term((names.get(l)?, names.get(r)?), field.parse_scalar(s)?);
            }
        }
        let counit_v = names.vector(field, &self.counit)?;
        let counit = (0..n).map(|i| counit_v.coeff(&i, &field.zero())).collect();
        let antipode = match &self.antipode {
            None => None,
            Some(entries) => {
                let mut s = vec![Vector::new(); n];
                let mut seen = BTreeSet::new();
                for (a, v) in entries {
                    let i = names.get(a)?;
                    once(&mut seen, i, || format!("antipode of {a}"))?;
                    s[i] = names.vector(field, v)?;
                }
                Some(s)
            }
        };
        HopfSuperAlgebra::new(field, space.clone(), mult, names.vector(field, &self.unit)?, comult, counit, antipode)
    }

    pub fn from_hopf(h: &HopfSuperAlgebra) -> HopfTables {
        let names = h.names();
        let n = h.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = h.mul_basis(i, j);
                if !v.is_zero() {
                    mult.push((names[i].clone(), names[j].clone(), combination(names, v)));
                }
            }
        }
        let comult = (0..n)
            .filter(|&i| !h.comul_basis(i).is_zero())
            .map(|i| {
                let terms = h
                    .comul_basis(i)
                    .iter()
                    .map(|(&(l, r), c)| (names[l].clone(), names[r].clone(), c.literal()))
                    .collect();
                (names[i].clone(), terms)
            })
            .collect();
        let counit = (0..n)
            .filter(|&i| !h.counit_table()[i].is_zero())
            .map(|i| (names[i].clone(), h.counit_table()[i].literal()))
            .collect();
        let antipode = (0..n)
            .filter(|&i| !h.antipode_table()[i].is_zero())
            .map(|i| (names[i].clone(), combination(names, &h.antipode_table()[i])))
            .collect();
        HopfTables {
            basis: (0..n).map(|i| (names[i].clone(), h.parity(i))).collect(),
            unit: combination(names, h.unit()),
            mult,
            comult,
            counit,
            antipode: Some(antipode),
        }
    }
}

impl HopfDoc {
    pub fn tables(&self) -> HopfTables {
        HopfTables {
            basis: self.basis.clone(),
            unit: self.unit.clone(),
            mult: self.mult.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub fn to_hopf(&self, field: Field) -> Result<HopfSuperAlgebra> {
        self.tables().to_hopf(field)
    }

    pub fn from_hopf(h: &HopfSuperAlgebra) -> HopfDoc {
        let t = HopfTables::from_hopf(h);
        HopfDoc {
            kind: "hopf".into(),
            field: Some(h.field().to_string()),
            basis: t.basis,
            unit: t.unit,
            mult: t.mult,
            comult: t.comult,
            counit: t.counit,
            antipode: t.antipode,
        }
    }
}

impl LieTables {
    pub fn to_lie(&self, field: Field) -> Result<LieTable> {
        let names = Names::new("basis", self.basis.iter().map(|(n, _)| n))?;
        let n = self.basis.len();
        if let Some((name, p)) = self.basis.iter().find(|(_, p)| *p > 1) {
            return Err(Error::Schema(format!("parity of {name} must be 0 or 1, got {p}")));
        }
        let mut bracket = vec![vec![Vector::new(); n]; n];
        let mut seen = BTreeSet::new();
        for (a, b, v) in &self.bracket {
            let (i, j) = (names.get(a)?, names.get(b)?);
            once(&mut seen, (i, j), || format!("bracket [{a}, {b}]"))?;
            bracket[i][j] = names.vector(field, v)?;
        }
        Ok(LieTable {
            field,
            names: self.basis.iter().map(|(n, _)| n.clone()).collect(),
            parities: self.basis.iter().map(|(_, p)| *p).collect(),
            bracket,
        })
    }

    pub fn from_lie(l: &LieTable) -> LieTables {
        let mut bracket = Vec::new();
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                if !l.bracket[i][j].is_zero() {
                    bracket.push((l.names[i].clone(), l.names[j].clone(), combination(&l.names, &l.bracket[i][j])));
                }
            }
        }
        LieTables {
            basis: l.names.iter().cloned().zip(l.parities.iter().copied()).collect(),
            bracket,
        }
    }
}

impl LieDoc {
    pub fn to_lie(&self, field: Field) -> Result<LieTable> {
        LieTables {
            basis: self.basis.clone(),
            bracket: self.bracket.clone(),
        }
        .to_lie(field)
    }

    pub fn from_lie(l: &LieTable) -> LieDoc {
        let t = LieTables::from_lie(l);
        LieDoc {
            kind: "lie-superalgebra".into(),
            field: Some(l.field.to_string()),
            basis: t.basis,
            bracket: t.bracket,
        }
    }
}

/// A parsed pair, with `J` finite or enveloping.
#[derive(Clone, Debug)]
pub enum ParsedPair {
    Finite(Presentation<FiniteJ>),
    Enveloping(Presentation<Enveloping>),
}

fn presentation<J: CocommutativeHopf>(j: J, doc: &PairDoc) -> Result<Presentation<J>> {
    let field = j.field();
    let xs = Names::new("generator", &doc.x)?;
    let gen_names = j.generator_names();
    let gens = Names::new("J generator", &gen_names)?;
    let (m, g) = (doc.x.len(), gen_names.len());
    let mut action = vec![vec![Vector::new(); g]; m];
    let mut seen = BTreeSet::new();
    for (x, a, v) in &doc.action {
        let (i, k) = (xs.get(x)?, gens.get(a)?);
        once(&mut seen, (i, k), || format!("action of {a} on {x}"))?;
        action[i][k] = xs.vector(field, v)?;
    }
    let mut bracket = vec![vec![SparseVec::new(); m]; m];
    let mut seen = BTreeSet::new();
    for (x, y, terms) in &doc.bracket {
        let (i, k) = (xs.get(x)?, xs.get(y)?);
        once(&mut seen, (i, k), || format!("bracket [{x}, {y}]"))?;
        for (word, s) in terms {
            let mut e = j.unit();
            for l in word {
                e = j.mul(&e, &j.key(j.generator_key(gens.get(l)?)));
            }
            bracket[i][k].add_scaled(&e, &field.parse_scalar(s)?);
        }
    }
    Presentation::new(j, doc.x.clone(), action, bracket)
}

fn pair_doc<J: CocommutativeHopf>(p: &Presentation<J>, j: JSpec) -> PairDoc {
    let gen_names = p.j().generator_names();
    let xn = p.names();
    let mut action = Vec::new();
    for (x, row) in p.action_table().iter().enumerate() {
        for (g, v) in row.iter().enumerate() {
            if !v.is_zero() {
                action.push((xn[x].clone(), gen_names[g].clone(), combination(xn, v)));
            }
        }
    }
    let mut bracket = Vec::new();
    for x in 0..p.dim_x() {
        for y in 0..p.dim_x() {
            let b = p.bracket(x, y);
            if !b.is_zero() {
                let terms = b
                    .iter()
                    .map(|(k, c)| {
                        let word = p.j().factor(k).iter().map(|&g| gen_names[g].clone()).collect();
                        (word, c.literal())
                    })
                    .collect();
                bracket.push((xn[x].clone(), xn[y].clone(), terms));
            }
        }
    }
    PairDoc {
        kind: "pair".into(),
        field: Some(p.j().field().to_string()),
        j,
        x: xn.to_vec(),
        action,
        bracket,
    }
}

impl PairDoc {
    pub fn to_pair(&self, field: Field) -> Result<ParsedPair> {
        Ok(match &self.j {
            JSpec::Hopf(t) => ParsedPair::Finite(presentation(FiniteJ::new(t.to_hopf(field)?)?, self)?),
            JSpec::Enveloping(t) => ParsedPair::Enveloping(presentation(Enveloping::new(t.to_lie(field)?)?, self)?),
        })
    }

    pub fn from_finite(p: &Presentation<FiniteJ>) -> PairDoc {
        pair_doc(p, JSpec::Hopf(HopfTables::from_hopf(p.j().hopf())))
    }

    pub fn from_enveloping(p: &Presentation<Enveloping>) -> PairDoc {
        pair_doc(p, JSpec::Enveloping(LieTables::from_lie(p.j().lie())))
    }
}

impl HcpDoc {
    pub fn to_hcp(&self, field: Field) -> Result<HcpData> {
        let c = self.c.to_hopf(field)?;
        let cn = Names::new("C basis", c.names())?;
        let wn = Names::new("W basis", &self.w)?;
        let m = self.w.len();
        let mut coaction = vec![SparseVec::new(); m];
        for (wi, wj, g, s) in &self.coaction {
            coaction[wn.get(wi)?].add_term((wn.get(wj)?, cn.get(g)?), field.parse_scalar(s)?);
        }
        let pn = Names::new("primitive", self.primitives.iter().map(|(n, _)| n))?;
        let prims = self
            .primitives
            .iter()
            .map(|(_, values)| cn.vector(field, values))
            .collect::<Result<Vec<_>>>()?;
        let mut bracket = vec![vec![Vector::new(); m]; m];
        let mut seen = BTreeSet::new();
        for (a, b, v) in &self.bracket {
            let (i, j) = (wn.get(a)?, wn.get(b)?);
            once(&mut seen, (i, j), || format!("bracket [{a}*, {b}*]"))?;
            for (&k, s) in &pn.vector(field, v)? {
                bracket[i][j].add_scaled(&prims[k], s);
            }
        }
        HcpData::new(c, self.w.clone(), coaction, bracket)
    }

    /// Declares the primitives of `C*` as the bracket basis; fails when a
    /// bracket value is not primitive.
    pub fn from_hcp(h: &HcpData) -> Result<HcpDoc> {
        let field = h.field();
        let cstar = dual(&h.c);
        let prims = primitives(&cstar)?.basis;
        let mut e = Echelon::new(field);
        for p in &prims {
            e.insert(p.clone());
        }
        let pnames: Vec<String> = prims.iter().map(|p| format_vector(cstar.names(), p)).collect();
        let mut coaction = Vec::new();
        for (i, t) in h.coaction.iter().enumerate() {
            for (&(j, g), s) in t {
                coaction.push((h.w_names[i].clone(), h.w_names[j].clone(), h.c.names()[g].clone(), s.literal()));
            }
        }
        let mut bracket = Vec::new();
        for i in 0..h.dim_w() {
            for j in 0..h.dim_w() {
                let b = &h.bracket[i][j];
                if b.is_zero() {
                    continue;
                }
                let coords = e.coordinates(b).ok_or_else(|| {
                    Error::InvalidPair(format!(
                        "[{}*, {}*] = {} is not primitive",
                        h.w_names[i],
                        h.w_names[j],
                        format_vector(cstar.names(), b)
                    ))
                })?;
                bracket.push((h.w_names[i].clone(), h.w_names[j].clone(), combination(&pnames, &coords)));
            }
        }
        Ok(HcpDoc {
            kind: "hcp".into(),
            field: Some(field.to_string()),
            c: HopfTables::from_hopf(&h.c),
            w: h.w_names.clone(),
            coaction,
            primitives: prims.iter().zip(&pnames).map(|(p, n)| (n.clone(), combination(h.c.names(), p))).collect(),
            bracket,
        })
    }
}

impl MorphismDoc {
    pub fn to_matrices(&self, field: Field) -> Result<(Matrix, Matrix)> {
        let dense = |rows: &Vec<Vec<String>>, what: &str| -> Result<Matrix> {
            let ncols = rows.first().map_or(0, |r| r.len());
            if rows.iter().any(|r| r.len() != ncols) {
                return Err(Error::Schema(format!("rows of {what} have different lengths")));
            }
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .map(|(j, s)| Ok((j, field.parse_scalar(s)?)))
                        .collect::<Result<Vec<_>>>()
                        .map(Vector::from_terms)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_rows(field, ncols, rows))
        };
        Ok((dense(&self.f, "f")?, dense(&self.g, "g")?))
    }
}
