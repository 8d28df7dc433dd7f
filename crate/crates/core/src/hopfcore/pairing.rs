use std::collections::BTreeMap;

use super::HopfSuperAlgebra;
use crate::report::{witness, Check, Report};
use crate::superlin::{Matrix, Scalar, SparseVec};

type Triple = SparseVec<(usize, usize, usize)>;

fn first_difference(a: &Triple, b: &Triple) -> Option<((usize, usize, usize), Scalar, Scalar)> {
    let d = a.minus(b);
    let (&k, _) = d.first()?;
    let zero = d.first().unwrap().1.zero_like();
    Some((k, a.coeff(&k, &zero), b.coeff(&k, &zero)))
}

/// Checks that `m`, with rows indexed by the basis of `h` and columns by the
/// basis of `a`, is a Hopf pairing:
/// `<xy, z> = sum <x, z_1><y, z_2>`, `<x, zw> = sum <x_1, z><x_2, w>`,
/// `<1, z> = e(z)`, `<x, 1> = e(x)` and `<S x, z> = <x, S z>`. No signs are
/// inserted on tensor products.
pub fn verify_hopf_pairing(h: &HopfSuperAlgebra, a: &HopfSuperAlgebra, m: &Matrix) -> Report {
    let mut r = Report::new();
    if m.nrows() != h.dim() || m.ncols() != a.dim() {
        r.push(Check::fail(
            "pairing-shape",
            witness(
                vec!["matrix"],
                format!("{}x{}", m.nrows(), m.ncols()),
                format!("{}x{}", h.dim(), a.dim()),
            ),
        ));
        return r;
    }
    let (hn, an) = (h.names(), a.names());
    let field = h.field();
    let zero = field.zero();

    let mut parity = None;
    'p: for i in 0..h.dim() {
        for (&j, c) in m.row(i) {
            if h.parity(i) != a.parity(j) {
                parity = Some(witness(vec![hn[i].clone(), an[j].clone()], c.to_string(), "0".into()));
                break 'p;
            }
        }
    }
    r.push(Check::from_result("pairing-parity", parity));

    let mt = m.transpose();
    // <x, .> as a row vector, for an element x of h
    let row_of = |x: &SparseVec<usize>| {
        let mut out = SparseVec::new();
        for (&k, c) in x {
            out.add_scaled(m.row(k), c);
        }
        out
    };
    // <., z> as a column vector
    let col_of = |z: &SparseVec<usize>| {
        let mut out = SparseVec::new();
        for (&k, c) in z {
            out.add_scaled(mt.row(k), c);
        }
        out
    };

    let mut lhs = Triple::new();
    for x in 0..h.dim() {
        for y in 0..h.dim() {
            for (&z, c) in &row_of(h.mul_basis(x, y)) {
                lhs.add_term((x, y, z), c.clone());
            }
        }
    }
    let mut rhs = Triple::new();
    for z in 0..a.dim() {
        for (&(z1, z2), c) in a.comul_basis(z) {
            for (&x, d) in mt.row(z1) {
                for (&y, e) in mt.row(z2) {
                    rhs.add_term((x, y, z), &(c * d) * e);
                }
            }
        }
    }
    r.push(Check::from_result(
        "pairing-product",
        first_difference(&lhs, &rhs).map(|((x, y, z), l, rr)| {
            witness(vec![hn[x].clone(), hn[y].clone(), an[z].clone()], l.to_string(), rr.to_string())
        }),
    ));

    let mut lhs = Triple::new();
    for z in 0..a.dim() {
        for w in 0..a.dim() {
            for (&x, c) in &col_of(a.mul_basis(z, w)) {
                lhs.add_term((z, w, x), c.clone());
            }
        }
    }
    let mut rhs = Triple::new();
    for x in 0..h.dim() {
        for (&(x1, x2), c) in h.comul_basis(x) {
            for (&z, d) in m.row(x1) {
                for (&w, e) in m.row(x2) {
                    rhs.add_term((z, w, x), &(c * d) * e);
                }
            }
        }
    }
    r.push(Check::from_result(
        "pairing-coproduct",
        first_difference(&lhs, &rhs).map(|((z, w, x), l, rr)| {
            witness(vec![hn[x].clone(), an[z].clone(), an[w].clone()], l.to_string(), rr.to_string())
        }),
    ));

    let unit_row = row_of(h.unit());
    let unit = (0..a.dim()).find(|&z| unit_row.coeff(&z, &zero) != a.counit_table()[z]);
    r.push(Check::from_result(
        "pairing-unit",
        unit.map(|z| {
            witness(
                vec!["1".to_string(), an[z].clone()],
                unit_row.coeff(&z, &zero).to_string(),
                a.counit_table()[z].to_string(),
            )
        }),
    ));
    let unit_col = col_of(a.unit());
    let counit = (0..h.dim()).find(|&x| unit_col.coeff(&x, &zero) != h.counit_table()[x]);
    r.push(Check::from_result(
        "pairing-counit",
        counit.map(|x| {
            witness(
                vec![hn[x].clone(), "1".to_string()],
                unit_col.coeff(&x, &zero).to_string(),
                h.counit_table()[x].to_string(),
            )
        }),
    ));

    let mut anti = None;
    let sa: BTreeMap<usize, SparseVec<usize>> = (0..a.dim()).map(|z| (z, col_of(&a.antipode_table()[z]))).collect();
    'a: for x in 0..h.dim() {
        let l = row_of(&h.antipode_table()[x]);
        for (z, col) in &sa {
            let lv = l.coeff(z, &zero);
            let rv = col.coeff(&x, &zero);
            if lv != rv {
                anti = Some(witness(vec![hn[x].clone(), an[*z].clone()], lv.to_string(), rv.to_string()));
                break 'a;
            }
        }
    }
    r.push(Check::from_result("pairing-antipode", anti));
    r
}

/// Non-degeneracy: the pairing matrix is square and invertible.
pub fn pairing_nondegenerate(m: &Matrix) -> Check {
    let ok = m.nrows() == m.ncols() && m.rank() == m.nrows();
    Check::from_result(
        "pairing-nondegenerate",
        (!ok).then(|| witness(vec!["matrix"], format!("rank {}", m.rank()), format!("rank {}", m.nrows()))),
    )
}
