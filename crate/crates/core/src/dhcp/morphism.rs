use crate::error::{Error, Result};
use crate::hopfcore::{check_hopf_morphism, HopfSuperAlgebra};
use crate::report::{format_vector, witness, Check, Report, Witness};
use crate::rewrite::{CocommutativeHopf, FiniteJ, Presentation};
use crate::superlin::{Echelon, Field, Matrix, Vector};

/// A morphism of pairs: `f: J_1 -> J_2` and `g: V_1 -> V_2`, both as
/// matrices whose columns are images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhcpMorphism {
    pub f: Matrix,
    pub g: Matrix,
}

fn apply(m: &Matrix, v: &Vector) -> Vector {
    m.mul_vec(v)
}

fn hopf(p: &Presentation<FiniteJ>) -> &HopfSuperAlgebra {
    p.j().hopf()
}

/// `f` is a Hopf algebra map, `g(v <| a) = g(v) <| f(a)` and
/// `f([u, v]) = [g(u), g(v)]`.
pub fn check_dhcp_morphism(src: &Presentation<FiniteJ>, tgt: &Presentation<FiniteJ>, m: &DhcpMorphism) -> Report {
    let mut r = Report::new();
    r.extend_prefixed("hopf-", check_hopf_morphism(hopf(src), hopf(tgt), &m.f));
    if !r.passed() {
        return r;
    }
    if m.g.nrows() != tgt.dim_x() || m.g.ncols() != src.dim_x() {
        r.push(Check::fail(
            "vector-shape",
            witness(
                vec!["g"],
                format!("{}x{}", m.g.nrows(), m.g.ncols()),
                format!("{}x{}", tgt.dim_x(), src.dim_x()),
            ),
        ));
        return r;
    }
    let tn = tgt.names();
    let mut eq: Option<Witness> = None;
    'e: for x in 0..src.dim_x() {
        for a in 0..hopf(src).dim() {
            let l = apply(&m.g, &src.act(&src.x_vector(x), &a));
            let fa = apply(&m.f, &hopf(src).basis(a));
            let rr = tgt.act_by(&apply(&m.g, &src.x_vector(x)), &fa);
            if l != rr {
                eq = Some(witness(
                    vec![src.names()[x].clone(), hopf(src).names()[a].clone()],
                    format_vector(tn, &l),
                    format_vector(tn, &rr),
                ));
                break 'e;
            }
        }
    }
    r.push(Check::from_result("equivariance", eq));
    let jn = hopf(tgt).names();
    let mut br: Option<Witness> = None;
    'b: for u in 0..src.dim_x() {
        for v in 0..src.dim_x() {
            let l = apply(&m.f, src.bracket(u, v));
            let rr = tgt.bracket_of(&apply(&m.g, &src.x_vector(u)), &apply(&m.g, &src.x_vector(v)));
            if l != rr {
                br = Some(witness(
                    vec![src.names()[u].clone(), src.names()[v].clone()],
                    format_vector(jn, &l),
                    format_vector(jn, &rr),
                ));
                break 'b;
            }
        }
    }
    r.push(Check::from_result("bracket", br));
    r
}

/// Morphism checks plus invertibility of both components.
pub fn is_dhcp_isomorphism(src: &Presentation<FiniteJ>, tgt: &Presentation<FiniteJ>, m: &DhcpMorphism) -> Report {
    let mut r = check_dhcp_morphism(src, tgt, m);
    for (name, mat) in [("hopf-bijective", &m.f), ("vector-bijective", &m.g)] {
        let ok = mat.nrows() == mat.ncols() && mat.inverse().is_some();
        r.push(Check::from_result(
            name,
            (!ok).then(|| witness(vec![name], format!("rank {}", mat.rank()), format!("rank {}", mat.ncols()))),
        ));
    }
    r
}

fn span(field: Field, vs: &[Vector]) -> Echelon {
    let mut e = Echelon::new(field);
    for v in vs {
        e.insert(v.clone());
    }
    e
}

/// For an injective morphism, the conditions under which its image is a
/// normal sub-pair: the image of `J_1` is stable under both adjoint actions
/// of `J_2`; `g(V_1)` is `J_2`-stable; `[g(V_1), V_2]` lies in `f(J_1)`; and
/// `f(J_1)` acts trivially on `V_2` modulo `g(V_1)`.
pub fn check_morphism_normal(
    src: &Presentation<FiniteJ>,
    tgt: &Presentation<FiniteJ>,
    m: &DhcpMorphism,
) -> Result<Report> {
    let field = tgt.j().field();
    if m.f.rank() != m.f.ncols() {
        return Err(Error::NotInjective(format!("f has rank {} < {}", m.f.rank(), m.f.ncols())));
    }
    if m.g.rank() != m.g.ncols() {
        return Err(Error::NotInjective(format!("g has rank {} < {}", m.g.rank(), m.g.ncols())));
    }
    let j2 = hopf(tgt);
    let fj: Vec<Vector> = m.f.columns();
    let gv: Vec<Vector> = m.g.columns();
    let fj_span = span(field, &fj);
    let gv_span = span(field, &gv);
    let jn = j2.names();
    let vn = tgt.names();
    let mut r = Report::new();

    let mut normal: Option<Witness> = None;
    'i: for b in 0..j2.dim() {
        for (k, a) in fj.iter().enumerate() {
            let mut right = Vector::new();
            let mut left = Vector::new();
            for (&(b1, b2), c) in j2.comul_basis(b) {
                let s1 = j2.antipode_of(&j2.basis(b1));
                right.add_scaled(&j2.mul(&j2.mul(&s1, a), &j2.basis(b2)), c);
                let s2 = j2.antipode_of(&j2.basis(b2));
                left.add_scaled(&j2.mul(&j2.mul(&j2.basis(b1), a), &s2), c);
            }
            for t in [right, left] {
                if !fj_span.contains(&t) {
                    normal = Some(witness(
                        vec![jn[b].clone(), format!("f({})", hopf(src).names()[k])],
                        format_vector(jn, &t),
                        "element of f(J_1)".into(),
                    ));
                    break 'i;
                }
            }
        }
    }
    r.push(Check::from_result("normal-subalgebra", normal));

    let mut stable: Option<Witness> = None;
    'ii: for (k, v) in gv.iter().enumerate() {
        for b in 0..j2.dim() {
            let t = tgt.act(v, &b);
            if !gv_span.contains(&t) {
                stable = Some(witness(
                    vec![format!("g({})", src.names()[k]), jn[b].clone()],
                    format_vector(vn, &t),
                    "element of g(V_1)".into(),
                ));
                break 'ii;
            }
        }
    }
    r.push(Check::from_result("stable-subspace", stable));

    let mut inside: Option<Witness> = None;
    'iii: for (k, v) in gv.iter().enumerate() {
        for w in 0..tgt.dim_x() {
            let t = tgt.bracket_of(v, &tgt.x_vector(w));
            if !fj_span.contains(&t) {
                inside = Some(witness(
                    vec![format!("g({})", src.names()[k]), vn[w].clone()],
                    format_vector(jn, &t),
                    "element of f(J_1)".into(),
                ));
                break 'iii;
            }
        }
    }
    r.push(Check::from_result("bracket-into-image", inside));

    let mut trivial: Option<Witness> = None;
    'iv: for w in 0..tgt.dim_x() {
        for (k, a) in fj.iter().enumerate() {
            let v = tgt.x_vector(w);
            let t = tgt.act_by(&v, a).minus(&v.scaled(&j2.counit_of(a)));
            if !gv_span.contains(&t) {
                trivial = Some(witness(
                    vec![vn[w].clone(), format!("f({})", hopf(src).names()[k])],
                    format_vector(vn, &t),
                    "element of g(V_1)".into(),
                ));
                break 'iv;
            }
        }
    }
    r.push(Check::from_result("trivial-action-mod-image", trivial));
    Ok(r)
}

fn same_span(field: Field, a: &[Vector], b: &[Vector]) -> bool {
    let ea = span(field, a);
    let eb = span(field, b);
    ea.rank() == eb.rank() && a.iter().all(|v| eb.contains(v))
}

/// Exactness of `J_1 -> J_2 -> J_3` as Hopf algebras (injective, surjective,
/// kernel generated by the augmentation of the image, image equal to the
/// coinvariants) and of `V_1 -> V_2 -> V_3` as vector spaces. Whether the
/// maps are morphisms of pairs is a separate question, see
/// [`check_dhcp_morphism`].
pub fn check_short_exact_dhcp(
    p: [&Presentation<FiniteJ>; 3],
    first: &DhcpMorphism,
    second: &DhcpMorphism,
) -> Report {
    let field = p[1].j().field();
    let (j1, j2) = (hopf(p[0]), hopf(p[1]));
    let mut r = Report::new();
    let fail = |name: &str, got: String, want: &str| Check::fail(name, witness(vec![name], got, want.to_string()));
    let pass_if = |name: &str, ok: bool, got: String, want: &str| {
        if ok {
            Check::pass(name)
        } else {
            fail(name, got, want)
        }
    };

    let (iota, pi) = (&first.f, &second.f);
    let shapes_ok = iota.ncols() == j1.dim()
        && iota.nrows() == j2.dim()
        && pi.ncols() == j2.dim()
        && pi.nrows() == hopf(p[2]).dim()
        && first.g.ncols() == p[0].dim_x()
        && first.g.nrows() == p[1].dim_x()
        && second.g.ncols() == p[1].dim_x()
        && second.g.nrows() == p[2].dim_x();
    if !shapes_ok {
        r.push(fail("shapes", "mismatched matrix shapes".into(), "composable maps"));
        return r;
    }

    r.push(pass_if("hopf-injective", iota.rank() == iota.ncols(), format!("rank {}", iota.rank()), "injective"));
    r.push(pass_if("hopf-surjective", pi.rank() == pi.nrows(), format!("rank {}", pi.rank()), "surjective"));
    let image: Vec<Vector> = iota.columns();
    let mut aug = Vec::new();
    for a in 0..j1.dim() {
        let plus = j1.basis(a).minus(&j1.unit().scaled(&j1.counit_table()[a]));
        let fa = iota.mul_vec(&plus);
        for b in 0..j2.dim() {
            aug.push(j2.mul(&j2.basis(b), &fa));
        }
    }
    let ker = pi.kernel();
    r.push(pass_if(
        "hopf-kernel",
        same_span(field, &ker, &aug),
        format!("dim ker = {}", ker.len()),
        "kernel generated by the augmentation of the image",
    ));
    // coinvariants: h with (id ⊗ pi) Delta(h) = h ⊗ 1
    let d3 = pi.nrows();
    let unit3 = hopf(p[2]).unit().clone();
    let cols: Vec<Vector> = (0..j2.dim())
        .map(|h| {
            let mut v = Vector::new();
            for (&(a, b), c) in j2.comul_basis(h) {
                for (&k, d) in &pi.column(b) {
                    v.add_term(a * d3 + k, c * d);
                }
            }
            for (&k, d) in &unit3 {
                v.add_term(h * d3 + k, -d);
            }
            v
        })
        .collect();
    let coinv = Matrix::from_columns(field, j2.dim() * d3, &cols).kernel();
    r.push(pass_if(
        "hopf-coinvariants",
        same_span(field, &coinv, &image),
        format!("dim coinvariants = {}", coinv.len()),
        "image of J_1",
    ));

    let (g1, g2) = (&first.g, &second.g);
    r.push(pass_if("vector-injective", g1.rank() == g1.ncols(), format!("rank {}", g1.rank()), "injective"));
    r.push(pass_if("vector-surjective", g2.rank() == g2.nrows(), format!("rank {}", g2.rank()), "surjective"));
    let kv = g2.kernel();
    r.push(pass_if(
        "vector-exact-middle",
        same_span(field, &kv, &g1.columns()),
        format!("dim ker = {}", kv.len()),
        "kernel equal to the image",
    ));
    r
}
