use std::path::{Path, PathBuf};

use hcpairs::dhcp::examples::{broken_pair, gl11, z2_pair};
use hcpairs::dhcp::verify_dhcp;
use hcpairs::error::Error;
use hcpairs::hcp::examples::{corpus, non_colinear, truncated_bracket};
use hcpairs::hcp::verify_hcp;
use hcpairs::hopfcore::verify_hopf;
use hcpairs::schema::*;
use hcpairs::superlin::Field;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn json_files(dir: &Path) -> Vec<PathBuf> {
    let mut out: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    out.sort();
    out
}

fn read(name: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(name)).unwrap()
}

/// Typed value re-serialized to a document, for comparisons.
fn canonical(doc: &Document) -> Document {
    let field = doc.field(None).unwrap();
    match doc {
        Document::Hopf(d) => Document::Hopf(HopfDoc::from_hopf(&d.to_hopf(field).unwrap())),
        Document::Pair(d) => Document::Pair(match d.to_pair(field).unwrap() {
            ParsedPair::Finite(p) => PairDoc::from_finite(&p),
            ParsedPair::Enveloping(p) => PairDoc::from_enveloping(&p),
        }),
        Document::LieSuperalgebra(d) => Document::LieSuperalgebra(LieDoc::from_lie(&d.to_lie(field).unwrap())),
        Document::Hcp(d) => Document::Hcp(HcpDoc::from_hcp(&d.to_hcp(field).unwrap()).unwrap()),
        Document::Morphism(_) => doc.clone(),
    }
}

#[test]
fn corpus_round_trips() {
    let files = json_files(&corpus_dir());
    assert!(files.len() >= 10);
    for f in files {
        let text = std::fs::read_to_string(&f).unwrap();
        let d1 = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}", f.display()));
        let d2 = parse_document(&d1.to_json()).unwrap();
        assert_eq!(d1, d2, "{}", f.display());
        let c1 = canonical(&d1);
        let c2 = canonical(&parse_document(&c1.to_json()).unwrap());
        assert_eq!(c1, c2, "{}", f.display());
    }
}

#[test]
fn typed_round_trips() {
    let f3 = Field::prime(3).unwrap();
    for field in [Field::Rational, f3] {
        for (name, h) in corpus(field).unwrap() {
            let doc = Document::Hcp(HcpDoc::from_hcp(&h).unwrap());
            let Document::Hcp(back) = parse_document(&doc.to_json()).unwrap() else {
                panic!("kind changed")
            };
            assert_eq!(back.to_hcp(field).unwrap(), h, "{name}");
        }
    }
    let h = truncated_bracket(5).unwrap();
    assert_eq!(HcpDoc::from_hcp(&h).unwrap().to_hcp(h.field()).unwrap(), h);

    let l = gl11(Field::Rational);
    assert_eq!(LieDoc::from_lie(&l).to_lie(Field::Rational).unwrap(), l);

    let p = z2_pair(Field::Rational).unwrap();
    let doc = PairDoc::from_finite(&p);
    let ParsedPair::Finite(q) = doc.to_pair(Field::Rational).unwrap() else {
        panic!("finite J expected")
    };
    assert_eq!(PairDoc::from_finite(&q), doc);
}

#[test]
fn corpus_files_verify_as_expected() {
    let z2 = parse_document(&read("z2_pair.json")).unwrap();
    let Document::Pair(d) = &z2 else { panic!() };
    let ParsedPair::Finite(p) = d.to_pair(Field::Rational).unwrap() else { panic!() };
    assert!(verify_dhcp(&p).passed());

    let Document::Pair(d) = parse_document(&read("broken_c.json")).unwrap() else { panic!() };
    let ParsedPair::Enveloping(p) = d.to_pair(Field::Rational).unwrap() else { panic!() };
    let expected = broken_pair(Field::Rational).unwrap();
    assert_eq!(PairDoc::from_enveloping(&p), PairDoc::from_enveloping(&expected));
    assert!(!verify_dhcp(&p).passed());

    let Document::Hcp(d) = parse_document(&read("non_colinear_hcp.json")).unwrap() else { panic!() };
    let h = d.to_hcp(Field::prime(3).unwrap()).unwrap();
    assert_eq!(h, non_colinear(3).unwrap());
    assert!(!verify_hcp(&h).passed());

    let Document::Hopf(d) = parse_document(&read("s3_functions.json")).unwrap() else { panic!() };
    for field in [Field::Rational, Field::prime(5).unwrap()] {
        assert!(verify_hopf(&d.to_hopf(field).unwrap()).passed());
    }
}

#[test]
fn field_override() {
    let doc = parse_document(&read("z2_hcp.json")).unwrap();
    assert_eq!(doc.field(None).unwrap(), Field::prime(3).unwrap());
    assert_eq!(doc.field(Some(Field::Rational)).unwrap(), Field::Rational);
    let plain = parse_document(r#"{"kind": "lie-superalgebra", "basis": [], "bracket": []}"#).unwrap();
    assert_eq!(plain.field(None).unwrap(), Field::Rational);
}

#[test]
fn invalid_inputs() {
    let dir = corpus_dir().join("invalid");
    let load = |name: &str| parse_document(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap();

    assert!(matches!(load("char2_pair.json").field(None), Err(Error::CharacteristicTwo)));

    let Document::Pair(d) = load("bad_scalar.json") else { panic!() };
    assert!(matches!(d.to_pair(Field::Rational), Err(Error::InvalidScalar { .. })));

    let Document::LieSuperalgebra(d) = load("gl11_char3.json") else { panic!() };
    let f = Document::LieSuperalgebra(d.clone()).field(None).unwrap();
    let l = d.to_lie(f).unwrap();
    assert!(matches!(hcpairs::dhcp::from_lie_superalgebra(&l), Err(Error::CharacteristicThreeLie)));

    let text = std::fs::read_to_string(dir.join("unknown_field.json")).unwrap();
    match parse_document(&text) {
        Err(Error::Schema(msg)) => assert!(msg.contains("grading"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn schema_errors_name_the_path() {
    let cases = [
        (r#"{"basis": []}"#, "kind"),
        (r#"{"kind": "torus"}"#, "torus"),
        (r#"{"kind": "hopf", "basis": [["a", "zero"]], "unit": {}, "mult": [], "comult": [], "counit": {}}"#, "basis[0][1]"),
        (r#"{"kind": "lie-superalgebra", "basis": [["a", 0]]}"#, "bracket"),
    ];
    for (text, needle) in cases {
        match parse_document(text) {
            Err(Error::Schema(msg)) => assert!(msg.contains(needle), "{msg} lacks {needle}"),
            other => panic!("{text}: {other:?}"),
        }
    }

    let unknown = r#"{"kind": "lie-superalgebra", "basis": [["a", 0]], "bracket": [["a", "b", {}]]}"#;
    let Document::LieSuperalgebra(d) = parse_document(unknown).unwrap() else { panic!() };
    assert!(matches!(d.to_lie(Field::Rational), Err(Error::UnknownSymbol(_))));

    let twice = r#"{"kind": "lie-superalgebra", "basis": [["a", 0]], "bracket": [["a", "a", {}], ["a", "a", {}]]}"#;
    let Document::LieSuperalgebra(d) = parse_document(twice).unwrap() else { panic!() };
    assert!(matches!(d.to_lie(Field::Rational), Err(Error::Schema(_))));
}

#[test]
fn non_primitive_bracket_cannot_be_declared() {
    let mut h = truncated_bracket(3).unwrap();
    h.bracket[0][0] = hcpairs::superlin::Vector::singleton(2, h.field().one());
    assert!(matches!(HcpDoc::from_hcp(&h), Err(Error::InvalidPair(_))));
}

#[test]
fn morphism_matrices() {
    let text = r#"{"kind": "morphism", "f": [["1", "0"], ["0", "1/2"]], "g": [["3"]]}"#;
    let Document::Morphism(d) = parse_document(text).unwrap() else { panic!() };
    let (f, g) = d.to_matrices(Field::Rational).unwrap();
    assert_eq!((f.nrows(), f.ncols(), g.nrows()), (2, 2, 1));
    let ragged = r#"{"kind": "morphism", "f": [["1", "0"], ["0"]], "g": []}"#;
    let Document::Morphism(d) = parse_document(ragged).unwrap() else { panic!() };
    assert!(matches!(d.to_matrices(Field::Rational), Err(Error::Schema(_))));
}
