use std::path::Path;

use hcpairs::dhcp::{build_h, from_lie_superalgebra, primitive_spot_check, recover_pair, roundtrip_pair, verify_dhcp, PairHopf};
use hcpairs::error::{Error, Result};
use hcpairs::hcp::{
    associated_dhcp, beta_roundtrip, build_a, pair_h_a, roundtrip_hcp, unipotence_check, verify_graded_pairing,
    verify_hcp, HcpData, HcpMorphism,
};
use hcpairs::hopfcore::{
    is_irreducible, is_purely_even, is_semisimple_algebra, verify_hopf, verify_super_cocommutative,
    verify_super_commutative, HopfSuperAlgebra,
};
use hcpairs::report::{format_combination, witness, Check};
use hcpairs::rewrite::{CocommutativeHopf, Enveloping, FiniteJ, Letter, Presentation};
use hcpairs::schema::{parse_document, Document, HopfDoc, ParsedPair};
use hcpairs::superlin::{Field, Matrix};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::Output;
use crate::{Cli, Command};

struct Loaded {
    doc: Document,
    field: Field,
}

fn load(path: &Path, override_field: Option<Field>) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
    let doc = parse_document(&text)?;
    let field = doc.field(override_field)?;
    Ok(Loaded { doc, field })
}

fn wrong_kind(cmd: &str, expected: &str, doc: &Document) -> Error {
    Error::Schema(format!("{cmd} expects a {expected} document, got {:?}", doc.kind()))
}

enum AnyPair {
    Finite(Presentation<FiniteJ>),
    Enveloping(Presentation<Enveloping>),
}

fn any_pair(cli: &Cli, l: &Loaded, cmd: &str) -> Result<AnyPair> {
    Ok(match &l.doc {
        Document::Pair(d) => match d.to_pair(l.field)? {
            ParsedPair::Finite(p) => AnyPair::Finite(p.with_strict(cli.strict)),
            ParsedPair::Enveloping(p) => AnyPair::Enveloping(p.with_strict(cli.strict)),
        },
        Document::LieSuperalgebra(d) => AnyPair::Enveloping(from_lie_superalgebra(&d.to_lie(l.field)?)?.with_strict(cli.strict)),
        other => return Err(wrong_kind(cmd, "pair or lie-superalgebra", other)),
    })
}

fn finite_pair(cli: &Cli, l: &Loaded, cmd: &str) -> Result<Presentation<FiniteJ>> {
    match any_pair(cli, l, cmd)? {
        AnyPair::Finite(p) => Ok(p),
        AnyPair::Enveloping(_) => Err(Error::Schema(format!("{cmd} needs a finite-dimensional J"))),
    }
}

fn hopf(l: &Loaded, cmd: &str) -> Result<HopfSuperAlgebra> {
    match &l.doc {
        Document::Hopf(d) => d.to_hopf(l.field),
        other => Err(wrong_kind(cmd, "hopf", other)),
    }
}

fn hcp(l: &Loaded, cmd: &str) -> Result<HcpData> {
    match &l.doc {
        Document::Hcp(d) => d.to_hcp(l.field),
        other => Err(wrong_kind(cmd, "hcp", other)),
    }
}

fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect()).collect();
    json!(rows)
}

fn morphism_json(f: &Matrix, g: &Matrix) -> Value {
    json!({ "f": matrix_json(f), "g": matrix_json(g) })
}

fn hopf_artifact(h: &HopfSuperAlgebra) -> Value {
    json!({ "dim": h.dim(), "structure": HopfDoc::from_hopf(h) })
}

pub fn run(cli: &Cli, out: &mut Output) -> Result<()> {
    let override_field = cli.field.as_deref().map(Field::parse).transpose()?;
    if let Command::Classify { dir } = &cli.command {
        if let Some(f) = override_field {
            out.field = Some(f.to_string());
        }
        return classify(cli, dir, override_field, out);
    }
    let cmd = cli.command.name();
    let l = load(cli.command.input(), override_field)?;
    out.field = Some(l.field.to_string());
    match &cli.command {
        Command::VerifyHopf { .. } => {
            let h = hopf(&l, cmd)?;
            out.extend("", verify_hopf(&h));
            out.artifact = json!({
                "dim": h.dim(),
                "super_commutative": verify_super_commutative(&h).passed,
                "super_cocommutative": verify_super_cocommutative(&h).passed,
            });
        }
        Command::BuildH { .. } => {
            let p = finite_pair(cli, &l, cmd)?;
            out.extend("pair-", verify_dhcp(&p));
            if out.passed() {
                let h = build_h(&p)?;
                out.extend("h-", verify_hopf(&h));
                out.artifact = hopf_artifact(&h);
            }
        }
        Command::BuildA { .. } => {
            let h = hcp(&l, cmd)?;
            out.extend("hcp-", verify_hcp(&h));
            if out.passed() {
                let a = build_a(&h)?;
                out.extend("a-", verify_hopf(&a.hopf));
                out.artifact = hopf_artifact(&a.hopf);
                out.artifact["annihilator_dim"] = json!(a.annihilator_dim);
            }
        }
        Command::VerifyDhcp { .. } => match any_pair(cli, &l, cmd)? {
            AnyPair::Finite(p) => {
                out.extend("", verify_dhcp(&p));
                out.artifact = json!({ "dim_j": p.j().finite_dim(), "dim_v": p.dim_x() });
            }
            AnyPair::Enveloping(p) => {
                out.extend("", verify_dhcp(&p));
                if out.passed() && l.field.characteristic() == 0 {
                    let h = PairHopf::new(&p)?;
                    out.push(primitive_spot_check(&h, cli.degree_bound)?);
                }
                out.artifact = json!({ "dim_lie": p.j().lie().dim(), "dim_v": p.dim_x() });
            }
        },
        Command::VerifyHcp { .. } => {
            let h = hcp(&l, cmd)?;
            out.extend("", verify_hcp(&h));
            out.artifact = json!({
                "dim_c": h.c.dim(),
                "dim_w": h.dim_w(),
                "coinvariants": h.coinvariants().iter().map(|v| h.format_w(v)).collect::<Vec<_>>(),
            });
        }
        Command::CheckOverlaps { .. } => {
            let report = match any_pair(cli, &l, cmd)? {
                AnyPair::Finite(p) => p.check_overlaps()?,
                AnyPair::Enveloping(p) => p.check_overlaps()?,
            };
            out.extend("", report.to_report());
            out.table = Some(report.to_table());
            out.artifact = serde_json::to_value(&report).expect("report serializes");
        }
        Command::Pair { .. } => {
            let h = hcp(&l, cmd)?;
            out.extend("hcp-", verify_hcp(&h));
            if out.passed() {
                out.extend("graded-", verify_graded_pairing(&h, cli.degree_bound));
                let a = build_a(&h)?;
                let p = associated_dhcp(&h)?;
                let hp = pair_h_a(&p, &a)?;
                out.extend("h-a-", hp.report);
                out.artifact = json!({ "dim": a.dim(), "gram": matrix_json(&hp.matrix) });
            }
        }
        Command::Roundtrip { .. } => roundtrip(cli, &l, out)?,
        Command::Normalize { word, .. } => match any_pair(cli, &l, cmd)? {
            AnyPair::Finite(p) => normalize(&p, word, out)?,
            AnyPair::Enveloping(p) => normalize(&p, word, out)?,
        },
        Command::Classify { .. } => unreachable!("handled above"),
    }
    Ok(())
}

fn roundtrip(cli: &Cli, l: &Loaded, out: &mut Output) -> Result<()> {
    match &l.doc {
        Document::Pair(_) => {
            let p = finite_pair(cli, l, "roundtrip")?;
            let (m, report) = roundtrip_pair(&p)?;
            out.extend("pair-", report);
            out.artifact = morphism_json(&m.f, &m.g);
        }
        Document::Hcp(_) => {
            let h = hcp(l, "roundtrip")?;
            let (HcpMorphism { f, g }, report) = roundtrip_hcp(&h)?;
            out.extend("hcp-", report);
            let beta = beta_roundtrip(&build_a(&h)?.hopf)?;
            out.extend("beta-", beta.report);
            out.artifact = morphism_json(&f, &g);
        }
        Document::Hopf(_) => {
            let h = hopf(l, "roundtrip")?;
            if verify_super_commutative(&h).passed {
                let beta = beta_roundtrip(&h)?;
                out.extend("beta-", beta.report);
                out.artifact = json!({ "beta": matrix_json(&beta.matrix) });
            } else {
                let rec = recover_pair(&h)?;
                out.extend("recovered-", verify_dhcp(&rec.pair));
                let rebuilt = build_h(&rec.pair)?;
                out.push(Check::from_result(
                    "dimension",
                    (rebuilt.dim() != h.dim())
                        .then(|| witness(vec!["dim"], rebuilt.dim().to_string(), h.dim().to_string())),
                ));
            }
        }
        other => return Err(wrong_kind("roundtrip", "pair, hcp or hopf", other)),
    }
    Ok(())
}

fn normalize<J: CocommutativeHopf>(p: &Presentation<J>, word: &[String], out: &mut Output) -> Result<()> {
    let gens = p.j().generator_names();
    let letters = word
        .iter()
        .map(|w| {
            if let Some(i) = p.names().iter().position(|x| x == w) {
                Ok(Letter::X(i))
            } else if let Some(g) = gens.iter().position(|x| x == w) {
                Ok(Letter::J(p.j().generator_key(g)))
            } else {
                Err(Error::UnknownSymbol(w.clone()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let n = p.normalize_word(&letters)?;
    let label = |(w, a): &(Vec<usize>, J::Key)| {
        let mut parts = Vec::new();
        if w.is_empty() || p.j().unit_key().as_ref() != Some(a) {
            parts.push(p.j().key_name(a));
        }
        parts.extend(w.iter().map(|&i| p.names()[i].clone()));
        parts.join("·")
    };
    let terms: Vec<Value> = n
        .terms
        .iter()
        .map(|((w, a), c)| {
            json!({
                "j": p.j().key_name(a),
                "word": w.iter().map(|&i| p.names()[i].clone()).collect::<Vec<_>>(),
                "coefficient": c.to_string(),
            })
        })
        .collect();
    out.artifact = json!({ "normal_form": format_combination(&n.terms, label), "terms": terms });
    Ok(())
}

#[derive(Debug, Default, Serialize)]
struct Row {
    file: String,
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    semisimple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    purely_even: Option<bool>,
    /// Irreducibility of `Ā` for super-commutative algebras.
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient_irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

/// The finite Hopf superalgebra a document stands for, if any.
fn algebra_of(l: &Loaded) -> Result<Option<HopfSuperAlgebra>> {
    match &l.doc {
        Document::Hopf(d) => Ok(Some(d.to_hopf(l.field)?)),
        Document::Pair(d) => match d.to_pair(l.field)? {
            ParsedPair::Finite(p) => {
                let r = verify_dhcp(&p);
                match r.first_failure() {
                    None => Ok(Some(build_h(&p)?)),
                    Some(c) => Err(Error::InvalidPair(format!("check {} fails", c.name))),
                }
            }
            ParsedPair::Enveloping(_) => Ok(None),
        },
        Document::Hcp(d) => Ok(Some(build_a(&d.to_hcp(l.field)?)?.hopf)),
        Document::LieSuperalgebra(_) | Document::Morphism(_) => Ok(None),
    }
}

fn classify_file(path: &Path, override_field: Option<Field>) -> (Row, Option<Check>) {
    let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
    let mut row = Row { file: file.clone(), ..Row::default() };
    let result = load(path, override_field).and_then(|l| {
        row.kind = l.doc.kind().to_string();
        algebra_of(&l)
    });
    let h = match result {
        Ok(Some(h)) => h,
        Ok(None) => {
            row.note = Some("infinite-dimensional".into());
            return (row, None);
        }
        Err(e) => {
            row.note = Some(e.to_string());
            return (row, None);
        }
    };
    row.dim = Some(h.dim());
    row.irreducible = Some(is_irreducible(&h));
    row.purely_even = Some(is_purely_even(&h));
    match is_semisimple_algebra(&h) {
        Ok(s) => row.semisimple = Some(s),
        Err(e) => row.note = Some(e.to_string()),
    }
    if !verify_super_commutative(&h).passed {
        return (row, None);
    }
    match unipotence_check(&h) {
        Ok(u) => {
            row.quotient_irreducible = Some(u.abar_irreducible);
            let check = Check::from_result(
                &format!("{file}: unipotence"),
                (!u.agree()).then(|| {
                    witness(vec![file.clone()], format!("A irreducible: {}", u.a_irreducible), format!("Ā irreducible: {}", u.abar_irreducible))
                }),
            );
            (row, Some(check))
        }
        Err(e) => {
            row.note = Some(e.to_string());
            (row, None)
        }
    }
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn classify(cli: &Cli, dir: &Path, override_field: Option<Field>, out: &mut Output) -> Result<()> {
    let _ = cli;
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| Error::Schema(format!("cannot read directory {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut rows = Vec::new();
    let mut table = format!(
        "{:<28} {:<17} {:>4}  {:<5} {:<5} {:<5} {:<5}  note\n",
        "file", "kind", "dim", "irr", "Ā irr", "ss", "even"
    );
    for f in &files {
        let (row, check) = classify_file(f, override_field);
        table.push_str(&format!(
            "{:<28} {:<17} {:>4}  {:<5} {:<5} {:<5} {:<5}  {}\n",
            row.file,
            row.kind,
            row.dim.map_or("-".into(), |d| d.to_string()),
            flag(row.irreducible),
            flag(row.quotient_irreducible),
            flag(row.semisimple),
            flag(row.purely_even),
            row.note.as_deref().unwrap_or(""),
        ));
        if let Some(c) = check {
            out.push(c);
        }
        rows.push(row);
    }
    out.table = Some(table);
    out.artifact = json!({ "files": rows });
    Ok(())
}
