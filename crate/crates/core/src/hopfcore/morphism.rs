use super::{HopfSuperAlgebra, Tensor2};
use crate::report::{format_tensor, format_vector, witness, Check, Report, Witness};
use crate::superlin::{koszul, Matrix, SparseVec, Vector};

fn image_tensor(cols: &[Vector], t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&(a, b), c) in t {
        for (&x, s) in &cols[a] {
            for (&y, u) in &cols[b] {
                out.add_term((x, y), &(c * s) * u);
            }
        }
    }
    out
}

/// Checks that `m` (columns = images of source basis vectors) is a
/// morphism of Hopf superalgebras.
pub fn check_hopf_morphism(src: &HopfSuperAlgebra, tgt: &HopfSuperAlgebra, m: &Matrix) -> Report {
    let mut r = Report::new();
    if m.nrows() != tgt.dim() || m.ncols() != src.dim() {
        r.push(Check::fail(
            "shape",
            witness(
                vec!["matrix"],
                format!("{}x{}", m.nrows(), m.ncols()),
                format!("{}x{}", tgt.dim(), src.dim()),
            ),
        ));
        return r;
    }
    let cols = m.columns();
    let sn = src.names();
    let tn = tgt.names();
    let f = |v: &Vector| v.apply(|&i| cols[i].clone());

    let parity = (0..src.dim()).find_map(|i| {
        cols[i]
            .keys()
            .any(|&k| tgt.parity(k) != src.parity(i))
            .then(|| witness(vec![sn[i].clone()], format_vector(tn, &cols[i]), "same parity".into()))
    });
    r.push(Check::from_result("parity", parity));

    let mut mult: Option<Witness> = None;
    'm: for i in 0..src.dim() {
        for j in 0..src.dim() {
            let l = f(src.mul_basis(i, j));
            let rr = tgt.mul(&cols[i], &cols[j]);
            if l != rr {
                mult = Some(witness(vec![sn[i].clone(), sn[j].clone()], format_vector(tn, &l), format_vector(tn, &rr)));
                break 'm;
            }
        }
    }
    r.push(Check::from_result("multiplicative", mult));

    let u = f(src.unit());
    r.push(Check::from_result(
        "unital",
        (u != *tgt.unit()).then(|| witness(vec!["1"], format_vector(tn, &u), format_vector(tn, tgt.unit()))),
    ));

    let comult = (0..src.dim()).find_map(|i| {
        let l = image_tensor(&cols, src.comul_basis(i));
        let rr = tgt.comul(&cols[i]);
        (l != rr).then(|| witness(vec![sn[i].clone()], format_tensor(tn, tn, &l), format_tensor(tn, tn, &rr)))
    });
    r.push(Check::from_result("comultiplicative", comult));

    let counit = (0..src.dim()).find_map(|i| {
        let l = &src.counit_table()[i];
        let rr = tgt.counit_of(&cols[i]);
        (*l != rr).then(|| witness(vec![sn[i].clone()], l.to_string(), rr.to_string()))
    });
    r.push(Check::from_result("counital", counit));

    let antipode = (0..src.dim()).find_map(|i| {
        let l = f(&src.antipode_table()[i]);
        let rr = tgt.antipode_of(&cols[i]);
        (l != rr).then(|| witness(vec![sn[i].clone()], format_vector(tn, &l), format_vector(tn, &rr)))
    });
    r.push(Check::from_result("antipode", antipode));
    r
}

/// Morphism checks plus invertibility of the matrix.
pub fn is_hopf_isomorphism(src: &HopfSuperAlgebra, tgt: &HopfSuperAlgebra, m: &Matrix) -> Report {
    let mut r = check_hopf_morphism(src, tgt, m);
    let bij = m.nrows() == m.ncols() && m.inverse().is_some();
    r.push(Check::from_result(
        "bijective",
        (!bij).then(|| witness(vec!["matrix"], format!("rank {}", m.rank()), format!("rank {}", src.dim()))),
    ));
    r
}

/// A surjection `q: A -> B` of super-commutative Hopf superalgebras is
/// conormal when its kernel is sent into `Ker q (x) A` by the adjoint
/// coaction `a -> sum (-1)^{|a_1||a_2|} a_2 (x) S(a_1) a_3`.
pub fn check_conormal(a: &HopfSuperAlgebra, b: &HopfSuperAlgebra, q: &Matrix) -> Check {
    let kernel = q.kernel();
    let cols = q.columns();
    let names = a.names();
    for k in &kernel {
        let d3 = a.comul_left(&a.comul(k));
        let mut out: SparseVec<(usize, usize)> = SparseVec::new();
        for (&(x, y, z), c) in &d3 {
            let sign = koszul(a.parity(x), a.parity(y));
            let right = a.mul(&a.antipode_table()[x], &a.basis(z));
            for (&i, s) in &cols[y] {
                for (&j, t) in &right {
                    out.add_term((i, j), (&(c * s) * t).signed(sign));
                }
            }
        }
        if !out.is_zero() {
            return Check::fail(
                "conormal",
                witness(vec![format_vector(names, k)], format_tensor(b.names(), names, &out), "0".into()),
            );
        }
    }
    Check::pass("conormal")
}
