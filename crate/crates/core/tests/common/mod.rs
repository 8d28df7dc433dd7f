#![allow(dead_code)]

use hcpairs::hopfcore::{HopfSuperAlgebra, Tensor2};
use hcpairs::superlin::{Field, SuperSpace, Vector};

/// Builds a Hopf superalgebra from small integer tables keyed by names.
/// Unlisted products and coproducts are zero.
pub struct Table<'a> {
    pub basis: &'a [(&'a str, u8)],
    pub unit: &'a [(&'a str, i64)],
    pub mult: &'a [(&'a str, &'a str, &'a [(&'a str, i64)])],
    pub comult: &'a [(&'a str, &'a [(&'a str, &'a str, i64)])],
    pub counit: &'a [(&'a str, i64)],
}

pub fn build(field: Field, t: &Table) -> HopfSuperAlgebra {
    let space = SuperSpace::new(t.basis.to_vec()).unwrap();
    let ix = |s: &str| space.index_of(s).unwrap();
    let vec = |terms: &[(&str, i64)]| Vector::from_terms(terms.iter().map(|&(s, c)| (ix(s), field.from_i64(c))));
    let n = space.dim();
    let mut mult = vec![vec![Vector::new(); n]; n];
    for &(a, b, v) in t.mult {
        mult[ix(a)][ix(b)] = vec(v);
    }
    let mut comult = vec![Tensor2::new(); n];
    for &(a, terms) in t.comult {
        comult[ix(a)] = Tensor2::from_terms(terms.iter().map(|&(l, r, c)| ((ix(l), ix(r)), field.from_i64(c))));
    }
    let mut counit = vec![field.zero(); n];
    for &(a, c) in t.counit {
        counit[ix(a)] = field.from_i64(c);
    }
    HopfSuperAlgebra::new(field, space.clone(), mult, vec(t.unit), comult, counit, None).unwrap()
}

/// kZ/2 ⋉ ∧(kx): g grouplike, x odd primitive, xg = -gx.
pub fn z2_smash_exterior(field: Field) -> HopfSuperAlgebra {
    build(
        field,
        &Table {
            basis: &[("1", 0), ("g", 0), ("x", 1), ("gx", 1)],
            unit: &[("1", 1)],
            mult: &[
                ("1", "1", &[("1", 1)]),
                ("1", "g", &[("g", 1)]),
                ("1", "x", &[("x", 1)]),
                ("1", "gx", &[("gx", 1)]),
                ("g", "1", &[("g", 1)]),
                ("g", "g", &[("1", 1)]),
                ("g", "x", &[("gx", 1)]),
                ("g", "gx", &[("x", 1)]),
                ("x", "1", &[("x", 1)]),
                ("x", "g", &[("gx", -1)]),
                ("gx", "1", &[("gx", 1)]),
                ("gx", "g", &[("x", -1)]),
            ],
            comult: &[
                ("1", &[("1", "1", 1)]),
                ("g", &[("g", "g", 1)]),
                ("x", &[("1", "x", 1), ("x", "1", 1)]),
                ("gx", &[("g", "gx", 1), ("gx", "g", 1)]),
            ],
            counit: &[("1", 1), ("g", 1)],
        },
    )
}

pub fn vector(field: Field, terms: &[(usize, i64)]) -> Vector {
    Vector::from_terms(terms.iter().map(|&(i, c)| (i, field.from_i64(c))))
}

pub type Mat = Vec<Vec<i64>>;

pub fn unit_matrix(n: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![0; n]; n];
    m[i][j] = 1;
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn mat_lin(terms: &[(i64, &Mat)]) -> Mat {
    let n = terms[0].1.len();
    let mut out = vec![vec![0; n]; n];
    for (c, m) in terms {
        for i in 0..n {
            for j in 0..n {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

/// `[A, B] = AB - (-1)^{|A||B|} BA`.
pub fn supercommutator(a: &Mat, pa: u8, b: &Mat, pb: u8) -> Mat {
    let sign = if pa * pb == 1 { -1 } else { 1 };
    mat_lin(&[(1, &mat_mul(a, b)), (-sign, &mat_mul(b, a))])
}

/// Structure constants of the span of `basis` under the supercommutator,
/// reading coordinates with `coords` and checking they reconstruct the
/// matrix.
pub fn lie_from_matrices(
    field: Field,
    basis: &[(&str, u8, Mat)],
    coords: impl Fn(&Mat) -> Vec<i64>,
) -> hcpairs::hopfcore::LieTable {
    let n = basis.len();
    let mut bracket = vec![vec![Vector::new(); n]; n];
    for (i, (_, pi, a)) in basis.iter().enumerate() {
        for (j, (_, pj, b)) in basis.iter().enumerate() {
            let c = supercommutator(a, *pi, b, *pj);
            let k = coords(&c);
            let terms: Vec<(i64, &Mat)> = k.iter().zip(basis).map(|(&x, (_, _, m))| (x, m)).collect();
            assert_eq!(mat_lin(&terms), c, "span not closed at ({i}, {j})");
            bracket[i][j] = Vector::from_terms(k.iter().enumerate().map(|(t, &x)| (t, field.from_i64(x))));
        }
    }
    hcpairs::hopfcore::LieTable {
        field,
        names: basis.iter().map(|(s, _, _)| s.to_string()).collect(),
        parities: basis.iter().map(|(_, p, _)| *p).collect(),
        bracket,
    }
}

/// gl(1|1) from 2x2 supermatrices with index 0 even and index 1 odd.
pub fn gl11_oracle(field: Field) -> hcpairs::hopfcore::LieTable {
    let e = |i, j| unit_matrix(2, i, j);
    lie_from_matrices(
        field,
        &[("a", 0, e(0, 0)), ("b", 0, e(1, 1)), ("x", 1, e(0, 1)), ("y", 1, e(1, 0))],
        |m| vec![m[0][0], m[1][1], m[0][1], m[1][0]],
    )
}

/// osp(1|2) inside gl(1|2), index 0 even and indices 1, 2 odd.
pub fn osp12_oracle(field: Field) -> hcpairs::hopfcore::LieTable {
    let e = |i, j| unit_matrix(3, i, j);
    lie_from_matrices(
        field,
        &[
            ("e", 0, e(1, 2)),
            ("h", 0, mat_lin(&[(1, &e(1, 1)), (-1, &e(2, 2))])),
            ("f", 0, e(2, 1)),
            ("x", 1, mat_lin(&[(1, &e(1, 0)), (1, &e(0, 2))])),
            ("y", 1, mat_lin(&[(1, &e(2, 0)), (-1, &e(0, 1))])),
        ],
        |m| vec![m[1][2], m[1][1], m[2][1], m[1][0], m[2][0]],
    )
}
