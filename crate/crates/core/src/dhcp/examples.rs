//! Small pairs and Lie superalgebras used throughout the tests and corpus.

use crate::error::Result;
use crate::hopfcore::examples::{group_algebra, truncated_polynomial, GroupTable};
use crate::hopfcore::{dual, LieTable};
use crate::rewrite::{Enveloping, FiniteJ, Presentation};
use crate::superlin::{Field, SparseVec, Vector};

fn vector(field: Field, terms: &[(usize, i64)]) -> Vector {
    Vector::from_terms(terms.iter().map(|&(k, c)| (k, field.from_i64(c))))
}

fn table(field: Field, names: &[(&str, u8)], entries: &[(usize, usize, &[(usize, i64)])]) -> LieTable {
    let n = names.len();
    let mut bracket = vec![vec![Vector::new(); n]; n];
    for &(a, b, v) in entries {
        bracket[a][b] = vector(field, v);
    }
    LieTable {
        field,
        names: names.iter().map(|(s, _)| s.to_string()).collect(),
        parities: names.iter().map(|&(_, p)| p).collect(),
        bracket,
    }
}

/// `gl(1|1)` on `a = E11, b = E22` (even) and `x = E12, y = E21` (odd).
pub fn gl11(field: Field) -> LieTable {
    let (a, b, x, y) = (0, 1, 2, 3);
    table(
        field,
        &[("a", 0), ("b", 0), ("x", 1), ("y", 1)],
        &[
            (a, x, &[(x, 1)]),
            (x, a, &[(x, -1)]),
            (b, x, &[(x, -1)]),
            (x, b, &[(x, 1)]),
            (a, y, &[(y, -1)]),
            (y, a, &[(y, 1)]),
            (b, y, &[(y, 1)]),
            (y, b, &[(y, -1)]),
            (x, y, &[(a, 1), (b, 1)]),
            (y, x, &[(a, 1), (b, 1)]),
        ],
    )
}

/// `osp(1|2)` on `e, h, f` (even) and `x, y` (odd), realized by
/// `x = E10 + E02`, `y = E20 - E01` in `gl(1|2)`.
pub fn osp12(field: Field) -> LieTable {
    let (e, h, f, x, y) = (0, 1, 2, 3, 4);
    table(
        field,
        &[("e", 0), ("h", 0), ("f", 0), ("x", 1), ("y", 1)],
        &[
            (h, e, &[(e, 2)]),
            (e, h, &[(e, -2)]),
            (h, f, &[(f, -2)]),
            (f, h, &[(f, 2)]),
            (e, f, &[(h, 1)]),
            (f, e, &[(h, -1)]),
            (h, x, &[(x, 1)]),
            (x, h, &[(x, -1)]),
            (h, y, &[(y, -1)]),
            (y, h, &[(y, 1)]),
            (e, y, &[(x, 1)]),
            (y, e, &[(x, -1)]),
            (f, x, &[(y, 1)]),
            (x, f, &[(y, -1)]),
            (x, x, &[(e, 2)]),
            (y, y, &[(f, -2)]),
            (x, y, &[(h, -1)]),
            (y, x, &[(h, -1)]),
        ],
    )
}

/// `(k, k x)` with zero bracket.
pub fn trivial_pair(field: Field) -> Result<Presentation<FiniteJ>> {
    let j = FiniteJ::new(group_algebra(field, &GroupTable::cyclic(1))?)?;
    Presentation::new(j, vec!["x".into()], vec![vec![vector(field, &[(0, 1)])]], vec![vec![SparseVec::new()]])
}

/// `(k Z/2, k x)` with `x <| g = -x` and zero bracket.
pub fn z2_pair(field: Field) -> Result<Presentation<FiniteJ>> {
    let j = FiniteJ::new(group_algebra(field, &GroupTable::cyclic(2))?)?;
    Presentation::new(
        j,
        vec!["x".into()],
        vec![vec![vector(field, &[(0, 1)]), vector(field, &[(0, -1)])]],
        vec![vec![SparseVec::new()]],
    )
}

/// `(k Z/2, 0)`.
pub fn z2_even_pair(field: Field) -> Result<Presentation<FiniteJ>> {
    let j = FiniteJ::new(group_algebra(field, &GroupTable::cyclic(2))?)?;
    Presentation::new(j, Vec::new(), Vec::new(), Vec::new())
}

/// `(U(k h), k v)` with `v <| h = v` and `[v, v] = h`: the self-bracket,
/// equivariance and cyclic conditions fail.
pub fn broken_pair(field: Field) -> Result<Presentation<Enveloping>> {
    let u = Enveloping::abelian(field, &["h"])?;
    Presentation::new(
        u,
        vec!["v".into()],
        vec![vec![vector(field, &[(0, 1)])]],
        vec![vec![SparseVec::singleton(vec![0], field.one())]],
    )
}

/// In characteristic `p`: `J` is the dual of `k[t]/(t^p)`, basis
/// `1, γ1, ..., γ(p-1)`, acting trivially on `k w`, with `[w, w] = γ1`.
pub fn divided_power_pair(field: Field) -> Result<Presentation<FiniteJ>> {
    let c = truncated_polynomial(field)?;
    let p = c.dim();
    let names = (0..p).map(|k| if k == 0 { "1".to_string() } else { format!("γ{k}") }).collect();
    let j = FiniteJ::new(dual(&c).with_basis_names(names)?)?;
    let action = vec![(0..p)
        .map(|k| if k == 0 { vector(field, &[(0, 1)]) } else { Vector::new() })
        .collect()];
    Presentation::new(j, vec!["w".into()], action, vec![vec![SparseVec::singleton(1, field.one())]])
}
