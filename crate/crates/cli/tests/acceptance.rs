//! The acceptance battery: twelve criteria, one line each, all in one test.
//! Constructions are built once and shared between criteria.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use hcpairs::dhcp::examples::{broken_pair, divided_power_pair, gl11, osp12, trivial_pair, z2_even_pair, z2_pair};
use hcpairs::dhcp::{
    build_h, from_lie_superalgebra, pair_basis, primitive_spot_check, roundtrip_pair, verify_dhcp, PairHopf,
};
use hcpairs::error::Error;
use hcpairs::freegraded::{verify_t_tc_pairing, wedge_gram};
use hcpairs::hcp::examples::corpus as hcp_corpus;
use hcpairs::hcp::{associated_dhcp, beta_roundtrip, build_a, pair_h_a, roundtrip_hcp, unipotence_check, AResult, HcpData};
use hcpairs::hopfcore::examples::{exterior_algebra, function_algebra, group_algebra, GroupTable};
use hcpairs::hopfcore::{
    corad_smash_check, dual, is_irreducible, is_purely_even, is_semisimple_algebra, odd_primitives, verify_hopf,
    verify_super_cocommutative, verify_super_commutative, HopfSuperAlgebra,
};
use hcpairs::rewrite::{Enveloping, FiniteJ, Letter, Presentation};
use hcpairs::superlin::{Field, Matrix, PairingData, Scalar, SuperSpace, Vector};

const FIELDS: [Field; 3] = [Field::Rational, Field::Prime(3), Field::Prime(5)];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exterior(field: Field, m: usize) -> HopfSuperAlgebra {
    let names = ["x", "y", "z", "w"];
    exterior_algebra(field, &names[..m]).unwrap()
}

struct BuiltH {
    name: String,
    pair: Presentation<FiniteJ>,
    h: HopfSuperAlgebra,
}

struct BuiltA {
    name: String,
    hcp: HcpData,
    a: AResult,
}

struct FieldCorpus {
    field: Field,
    /// Group algebras, function algebras and exterior algebras.
    plain: Vec<(String, HopfSuperAlgebra)>,
    h: Vec<BuiltH>,
    a: Vec<BuiltA>,
}

fn finite_pairs(field: Field, hcps: &[(String, HcpData)]) -> Vec<(String, Presentation<FiniteJ>)> {
    let mut out = vec![
        ("trivial".to_string(), trivial_pair(field).unwrap()),
        ("z2".to_string(), z2_pair(field).unwrap()),
        ("z2-even".to_string(), z2_even_pair(field).unwrap()),
    ];
    if field.characteristic() > 0 {
        out.push(("divided-power".to_string(), divided_power_pair(field).unwrap()));
    }
    for (name, h) in hcps {
        if h.c.dim() <= 8 {
            out.push((format!("assoc({name})"), associated_dhcp(h).unwrap()));
        }
    }
    out
}

fn build_corpus(field: Field) -> FieldCorpus {
    let mut plain = Vec::new();
    for (gname, g) in [("Z2", GroupTable::cyclic(2)), ("Z3", GroupTable::cyclic(3)), ("S3", GroupTable::s3())] {
        plain.push((format!("k{gname}"), group_algebra(field, &g).unwrap()));
        plain.push((format!("k^{gname}"), function_algebra(field, &g).unwrap()));
    }
    for m in 0..=4 {
        plain.push((format!("ext{m}"), exterior(field, m)));
    }
    let hcps: Vec<_> = hcp_corpus(field)
        .unwrap()
        .into_iter()
        .filter(|(_, h)| h.c.dim() <= 8 && h.dim_w() <= 3)
        .collect();
    let h = finite_pairs(field, &hcps)
        .into_iter()
        .map(|(name, pair)| {
            let h = build_h(&pair).unwrap_or_else(|e| panic!("build_h({name}): {e}"));
            BuiltH { name, pair, h }
        })
        .collect();
    let a = hcps
        .into_iter()
        .map(|(name, hcp)| {
            let a = build_a(&hcp).unwrap_or_else(|e| panic!("build_a({name}): {e}"));
            BuiltA { name, hcp, a }
        })
        .collect();
    FieldCorpus { field, plain, h, a }
}

fn all_algebras(c: &FieldCorpus) -> Vec<(String, &HopfSuperAlgebra)> {
    let mut out: Vec<(String, &HopfSuperAlgebra)> = c.plain.iter().map(|(n, h)| (n.clone(), h)).collect();
    out.extend(c.h.iter().map(|b| (format!("H({})", b.name), &b.h)));
    out.extend(c.a.iter().map(|b| (format!("A({})", b.name), &b.a.hopf)));
    out
}

fn hopf_axioms(corpora: &[FieldCorpus]) -> Outcome {
    let mut n = 0;
    for c in corpora {
        for (name, h) in all_algebras(c) {
            let r = verify_hopf(h);
            ensure(r.passed(), || format!("{name} over {}: {}", c.field, r.first_failure().unwrap().name))?;
            n += 1;
        }
        for (name, h) in &c.plain {
            let cocomm = verify_super_cocommutative(h).passed;
            let comm = verify_super_commutative(h).passed;
            let expect = (!name.starts_with("k^") || name.ends_with("Z2") || name.ends_with("Z3"), !name.starts_with("kS3"));
            ensure((cocomm, comm) == expect, || format!("{name}: (cocomm, comm) = {:?}", (cocomm, comm)))?;
        }
        for b in &c.h {
            ensure(verify_super_cocommutative(&b.h).passed, || format!("H({}) not super-cocommutative", b.name))?;
        }
        for b in &c.a {
            ensure(verify_super_commutative(&b.a.hopf).passed, || format!("A({}) not super-commutative", b.name))?;
        }
    }
    Ok(format!("{n} algebras over Q, F3, F5"))
}

/// `[J(a)] + reversed S`: a word whose normal form is `± a x_S` only if the
/// rewriting system is J-free.
fn reversed_word(a: usize, s: &[usize]) -> Vec<Letter<usize>> {
    let mut w = vec![Letter::J(a)];
    w.extend(s.iter().rev().map(|&x| Letter::X(x)));
    w
}

fn pbw(corpora: &[FieldCorpus]) -> Outcome {
    let mut n = 0;
    for c in corpora {
        for b in &c.h {
            let (dj, m) = (b.pair.j().hopf().dim(), b.pair.dim_x());
            ensure(b.h.dim() == dj << m, || format!("{}: dim {} != {dj}·2^{m}", b.name, b.h.dim()))?;
            let keys = pair_basis(&b.pair);
            let index = |w: &Vec<usize>, a: &usize| keys.iter().position(|k| &k.0 == w && &k.1 == a).unwrap();
            let mut cols = Vec::new();
            for (s, a) in &keys {
                let nf = b.pair.normalize_word(&reversed_word(*a, s)).map_err(|e| e.to_string())?;
                cols.push(Vector::from_terms(nf.terms.iter().map(|((w, k), x)| (index(w, k), x.clone()))));
            }
            let rank = Matrix::from_columns(c.field, keys.len(), &cols).rank();
            ensure(rank == keys.len(), || format!("{}: rank {rank} < {}", b.name, keys.len()))?;
            n += 1;
        }
    }
    Ok(format!("{n} pairs, dim J·2^dim V and full rank"))
}

fn confluence() -> Outcome {
    let f = Field::Rational;
    let mut agree = 0;
    let mut check = |name: &str, resolvable: bool, valid: bool| {
        agree += 1;
        ensure(resolvable == valid, || format!("{name}: overlaps {resolvable}, conditions {valid}"))
    };
    for p in [trivial_pair(f), z2_pair(f), z2_even_pair(f), divided_power_pair(Field::Prime(3)), divided_power_pair(Field::Prime(5))] {
        let p = p.unwrap();
        check(&format!("{:?}", p.names()), p.check_overlaps().unwrap().resolvable(), verify_dhcp(&p).passed())?;
    }
    for l in [gl11(f), osp12(f)] {
        let p = from_lie_superalgebra(&l).unwrap();
        check(&format!("{:?}", l.names), p.check_overlaps().unwrap().resolvable(), verify_dhcp(&p).passed())?;
    }
    let broken: Presentation<Enveloping> = broken_pair(f).unwrap();
    let overlaps = broken.check_overlaps().unwrap();
    let report = verify_dhcp(&broken);
    check("broken", overlaps.resolvable(), report.passed())?;
    ensure(!report.passed(), || "broken pair passes".into())?;
    let failing_words: Vec<String> = overlaps.failures().map(|a| a.word.join(" ")).collect();
    let failing_checks: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.witness.as_ref().unwrap().at.join(" "))
        .collect();
    for w in ["v v h", "v v v"] {
        ensure(failing_words.iter().any(|x| x == w) && failing_checks.iter().any(|x| x == w), || {
            format!("witness {w}: overlaps {failing_words:?}, conditions {failing_checks:?}")
        })?;
    }
    Ok(format!("{agree} presentations agree; broken pair fails at v v h, v v v on both sides"))
}

/// Determinant by expansion along the first row.
fn det(field: Field, m: &[Vec<Scalar>]) -> Scalar {
    if m.is_empty() {
        return field.one();
    }
    let mut total = field.zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<Scalar>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
        let t = &m[0][j] * &det(field, &minor);
        if j % 2 == 0 {
            total += &t;
        } else {
            total += &-&t;
        }
    }
    total
}

/// `n`-element subsets of `0..m` in lexicographic order.
fn subsets(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << m)
        .filter(|s| s.count_ones() as usize == n)
        .map(|s| (0..m).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

fn pairing_nondegeneracy(corpora: &[FieldCorpus]) -> Outcome {
    let mut grams = 0;
    for field in FIELDS {
        for m in 1..=5 {
            let names: Vec<(String, u8)> = (0..m).map(|i| (format!("v{i}"), 1)).collect();
            let space = SuperSpace::new(names).unwrap();
            // upper unitriangular plus a rank-one perturbation keeps it invertible
            let rows: Vec<Vector> = (0..m)
                .map(|i| Vector::from_terms((0..m).filter(|&j| j >= i).map(|j| (j, field.from_i64(1 + (i + 2 * j) as i64 % 2)))))
                .collect();
            let dense: Vec<Vec<Scalar>> = (0..m).map(|i| (0..m).map(|j| rows[i].coeff(&j, &field.zero())).collect()).collect();
            let pd = PairingData::new(space.clone(), space.dual(), Matrix::from_rows(field, m, rows)).unwrap();
            for n in 0..=m {
                let g = wedge_gram(&pd, n);
                let sub = subsets(m, n);
                for (i, s) in sub.iter().enumerate() {
                    for (j, t) in sub.iter().enumerate() {
                        let minor: Vec<Vec<Scalar>> = s.iter().map(|&a| t.iter().map(|&b| dense[a][b].clone()).collect()).collect();
                        let d = det(field, &minor);
                        ensure(g.get(i, j) == d, || format!("dim {m} degree {n} entry ({s:?}, {t:?}) over {field}"))?;
                    }
                }
                ensure(g.inverse().is_some(), || format!("degree-{n} Gram matrix singular, dim {m} over {field}"))?;
                grams += 1;
            }
            if m <= 2 {
                let r = verify_t_tc_pairing(&pd, 4);
                ensure(r.passed(), || format!("pairing laws, dim {m} over {field}: {}", r.first_failure().unwrap().name))?;
            }
        }
    }
    let mut hp = 0;
    for c in corpora {
        for b in &c.a {
            let p = associated_dhcp(&b.hcp).map_err(|e| e.to_string())?;
            let r = pair_h_a(&p, &b.a).map_err(|e| e.to_string())?;
            ensure(r.report.passed(), || format!("H-A pairing for {} over {}", b.name, c.field))?;
            hp += 1;
        }
    }
    Ok(format!("{grams} Gram matrices match minors and are invertible; {hp} H-A pairings are perfect Hopf pairings"))
}

fn round_trips(corpora: &[FieldCorpus]) -> Outcome {
    let (mut pairs, mut hcps, mut betas) = (0, 0, 0);
    for c in corpora {
        for b in &c.h {
            let (_, r) = roundtrip_pair(&b.pair).map_err(|e| format!("{}: {e}", b.name))?;
            ensure(r.passed(), || format!("pair round trip {} over {}", b.name, c.field))?;
            pairs += 1;
        }
        for b in &c.a {
            let (_, r) = roundtrip_hcp(&b.hcp).map_err(|e| format!("{}: {e}", b.name))?;
            ensure(r.passed(), || format!("hcp round trip {} over {}", b.name, c.field))?;
            hcps += 1;
            let beta = beta_roundtrip(&b.a.hopf).map_err(|e| format!("{}: {e}", b.name))?;
            ensure(beta.report.passed(), || format!("beta for A({}) over {}", b.name, c.field))?;
            betas += 1;
        }
        for (name, h) in &c.plain {
            if verify_super_commutative(h).passed {
                let beta = beta_roundtrip(h).map_err(|e| format!("{name}: {e}"))?;
                ensure(beta.report.passed(), || format!("beta for {name} over {}", c.field))?;
                betas += 1;
            }
        }
    }
    Ok(format!("{pairs} pair, {hcps} hcp and {betas} beta isomorphisms"))
}

fn dim_a(corpora: &[FieldCorpus]) -> Outcome {
    let mut n = 0;
    for c in corpora {
        for b in &c.a {
            let expect = b.hcp.c.dim() << b.hcp.dim_w();
            ensure(b.a.dim() == expect && b.a.annihilator_dim == expect, || {
                format!("{}: dim {} (annihilator {}) != {expect}", b.name, b.a.dim(), b.a.annihilator_dim)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} constructions, dim C·2^dim W, restriction residual zero"))
}

fn unipotence(corpora: &[FieldCorpus]) -> Outcome {
    let (mut n, mut irr, mut not_irr) = (0, 0, 0);
    for c in corpora {
        let mut algebras: Vec<(String, &HopfSuperAlgebra)> = c.a.iter().map(|b| (b.name.clone(), &b.a.hopf)).collect();
        algebras.extend(c.plain.iter().filter(|(_, h)| verify_super_commutative(h).passed).map(|(n, h)| (n.clone(), h)));
        for (name, h) in algebras {
            let u = unipotence_check(h).map_err(|e| e.to_string())?;
            ensure(u.agree(), || format!("{name} over {}: {u:?}", c.field))?;
            if u.abar_irreducible {
                irr += 1;
            } else {
                not_irr += 1;
            }
            n += 1;
        }
    }
    ensure(irr > 0 && not_irr > 0, || format!("mixed cases missing: {irr} irreducible, {not_irr} not"))?;
    Ok(format!("{n} algebras agree ({irr} with irreducible Ā, {not_irr} without)"))
}

fn coinvariant_primitives(corpora: &[FieldCorpus]) -> Outcome {
    let mut n = 0;
    for c in corpora {
        for b in &c.a {
            if b.hcp.coinvariants().is_empty() {
                continue;
            }
            let prims = odd_primitives(&b.a.hopf).map_err(|e| e.to_string())?;
            ensure(!prims.is_empty(), || format!("{} over {}: no odd primitive", b.name, c.field))?;
            let h = &b.a.hopf;
            for v in &prims {
                let mut d = h.comul(v);
                let one = h.unit();
                for (&k, x) in v {
                    for (&u, y) in one {
                        d.add_term((k, u), -&(x * y));
                        d.add_term((u, k), -&(x * y));
                    }
                }
                ensure(d.is_zero(), || format!("{}: returned element is not primitive", b.name))?;
            }
            n += 1;
        }
    }
    ensure(n > 0, || "no corpus pair has coinvariants".into())?;
    Ok(format!("{n} pairs with coinvariants all give odd primitives"))
}

fn semisimple_duals() -> Outcome {
    let mut n = 0;
    for p in [3u64, 5] {
        let field = Field::Prime(p);
        let algebras = build_corpus_small(field);
        for (name, a) in algebras.iter().filter(|(_, a)| (a.dim() as u64) < p) {
            let d = dual(a);
            if is_irreducible(&d) && is_semisimple_algebra(&d).map_err(|e| e.to_string())? {
                ensure(is_purely_even(a), || format!("{name} over F{p}: dual irreducible and semisimple, A not purely even"))?;
                n += 1;
            }
        }
        let ext = exterior(field, 1);
        let d = dual(&ext);
        ensure(is_irreducible(&d) && !is_semisimple_algebra(&d).unwrap() && !is_purely_even(&ext), || {
            format!("exterior witness over F{p}")
        })?;
    }
    Ok(format!("{n} irreducible semisimple duals, all purely even; ∧(kx) is irreducible, not semisimple"))
}

/// Commutative algebras of dimension below 5 from the corpus, rebuilt per field.
fn build_corpus_small(field: Field) -> Vec<(String, HopfSuperAlgebra)> {
    let mut out = vec![
        ("k^Z2".to_string(), function_algebra(field, &GroupTable::cyclic(2)).unwrap()),
        ("k^Z3".to_string(), function_algebra(field, &GroupTable::cyclic(3)).unwrap()),
        ("kZ2".to_string(), group_algebra(field, &GroupTable::cyclic(2)).unwrap()),
        ("trivial".to_string(), exterior(field, 0)),
        ("ext1".to_string(), exterior(field, 1)),
        ("ext2".to_string(), exterior(field, 2)),
    ];
    for (name, h) in hcp_corpus(field).unwrap() {
        if h.c.dim() << h.dim_w() < 5 {
            out.push((format!("A({name})"), build_a(&h).unwrap().hopf));
        }
    }
    out
}

fn coradical_smash(corpora: &[FieldCorpus]) -> Outcome {
    let (mut n, mut skipped) = (0, 0);
    for c in corpora {
        for (name, h) in all_algebras(c) {
            match corad_smash_check(&h.coalgebra()) {
                Ok(check) => {
                    ensure(check.passed, || format!("{name} over {}: {:?}", c.field, check.witness))?;
                    n += 1;
                }
                Err(Error::UnsupportedCharacteristic { .. }) if c.field.characteristic() > 0 => skipped += 1,
                Err(e) => return Err(format!("{name}: {e}")),
            }
        }
    }
    ensure(skipped == 0 || n > 0, || "nothing checked".into())?;
    Ok(format!("{n} coalgebras; {skipped} skipped over F3/F5 where 2·dim ≥ p"))
}

fn kostant() -> Outcome {
    let f = Field::Rational;
    for l in [gl11(f), osp12(f)] {
        let p = from_lie_superalgebra(&l).map_err(|e| e.to_string())?;
        let h = PairHopf::new(&p).map_err(|e| e.to_string())?;
        let c = primitive_spot_check(&h, 4).map_err(|e| e.to_string())?;
        ensure(c.passed, || format!("{:?}: {:?}", l.names, c.witness))?;
    }
    Ok("P(H) = L up to filtration degree 4 for gl(1|1), osp(1|2)".into())
}

fn corpus_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name).display().to_string()
}

fn guard_rails() -> Outcome {
    let code = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_hcpairs")).args(args).output().unwrap();
    let out = code(&["verify-dhcp", &corpus_path("invalid/char2_pair.json")]);
    ensure(out.status.code() == Some(3), || format!("char-2 file exited {:?}", out.status.code()))?;
    let out = code(&["build-a", &corpus_path("z2_hcp.json"), "--field", "Fp:2"]);
    ensure(out.status.code() == Some(3), || format!("--field Fp:2 exited {:?}", out.status.code()))?;
    ensure(matches!(Field::parse("Fp:2"), Err(Error::CharacteristicTwo)), || "Fp:2 parses".into())?;

    let l = gl11(Field::Prime(3));
    ensure(matches!(from_lie_superalgebra(&l), Err(Error::CharacteristicThreeLie)), || "char-3 Lie input accepted".into())?;
    let out = code(&["verify-dhcp", &corpus_path("invalid/gl11_char3.json")]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    ensure(out.status.code() == Some(3) && text.contains("cyclic identity"), || format!("char-3 Lie file: {text}"))?;
    Ok("char 2 exits 3; char-3 Lie input rejected with the cyclic-identity reason".into())
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let corpora: Vec<FieldCorpus> = FIELDS.iter().map(|&f| build_corpus(f)).collect();
    let build_time = start.elapsed();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Hopf axiom suite", Box::new(|| hopf_axioms(&corpora))),
        ("PBW dimension and J-freeness", Box::new(|| pbw(&corpora))),
        ("confluence iff pair conditions", Box::new(confluence)),
        ("pairing non-degeneracy", Box::new(|| pairing_nondegeneracy(&corpora))),
        ("category round trips", Box::new(|| round_trips(&corpora))),
        ("dim A(C, W) and zero residual", Box::new(|| dim_a(&corpora))),
        ("unipotence flags agree", Box::new(|| unipotence(&corpora))),
        ("coinvariants give odd primitives", Box::new(|| coinvariant_primitives(&corpora))),
        ("irreducible semisimple duals are even", Box::new(semisimple_duals)),
        ("coradical of the Z2 smash coproduct", Box::new(|| coradical_smash(&corpora))),
        ("Kostant spot check", Box::new(kostant)),
        ("characteristic guard rails", Box::new(guard_rails)),
    ];
    println!("corpus built in {:.2}s", build_time.as_secs_f64());
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("total {total:.2}s");
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(total < 10.0, "acceptance took {total:.2}s");
}
