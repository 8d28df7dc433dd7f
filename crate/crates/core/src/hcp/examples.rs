//! Small Harish-Chandra pairs used by tests and the corpus.

use super::data::HcpData;
use crate::error::Result;
use crate::hopfcore::examples::{function_algebra, group_algebra, truncated_polynomial, GroupTable};
use crate::superlin::{Field, SparseVec, Vector};

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("w{i}")).collect()
}

/// `W` as a comodule over `k^G` from a representation: `w_i -> sum_j w_j (x)
/// sum_g rho(g)_ji e_g`, with `rho` a homomorphism.
pub fn group_comodule(field: Field, g: &GroupTable, rho: &dyn Fn(usize) -> Vec<Vec<i64>>) -> Result<HcpData> {
    let c = function_algebra(field, g)?;
    let m = rho(0).len();
    let mut coaction = vec![SparseVec::new(); m];
    for el in 0..g.names.len() {
        let r = rho(el);
        for (j, row) in r.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                coaction[i].add_term((j, el), field.from_i64(x));
            }
        }
    }
    HcpData::new(c, names(m), coaction, vec![vec![Vector::new(); m]; m])
}

/// `(k, W)` with `dim W = m`; `A` is the exterior algebra on `W`.
pub fn trivial_hcp(field: Field, m: usize) -> Result<HcpData> {
    let one = GroupTable::cyclic(1);
    HcpData::trivial(group_algebra(field, &one)?, names(m))
}

/// `k^{Z/2}` with `W` a sum of `m` copies of the sign character.
pub fn z2_sign(field: Field, m: usize) -> Result<HcpData> {
    group_comodule(field, &GroupTable::cyclic(2), &|g| {
        let s = if g == 0 { 1 } else { -1 };
        (0..m).map(|i| (0..m).map(|j| if i == j { s } else { 0 }).collect()).collect()
    })
}

/// `k^{S_3}` with `W` the sign representation.
pub fn s3_sign(field: Field) -> Result<HcpData> {
    let g = GroupTable::s3();
    let sign = [1, -1, -1, -1, 1, 1];
    group_comodule(field, &g, &|k| vec![vec![sign[k]]])
}

/// `k^{S_3}` with `W` the two-dimensional reflection representation, on
/// the basis `x_0 - x_2`, `x_1 - x_2` of the sum-zero permutation module.
pub fn s3_standard(field: Field) -> Result<HcpData> {
    let g = GroupTable::s3();
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    group_comodule(field, &g, &|k| {
        let p = perms[k];
        let mut r = vec![vec![0; 2]; 2];
        // f_i -> x_{p(i)} - x_{p(2)} = f_{p(i)} - f_{p(2)}, with f_2 = 0
        for i in 0..2 {
            if p[i] < 2 {
                r[p[i]][i] += 1;
            }
            if p[2] < 2 {
                r[p[2]][i] -= 1;
            }
        }
        r
    })
}

/// `k^{Z/3}` over `F_7` with `W` the characters `g -> 2` and `g -> 4`.
pub fn z3_characters() -> Result<HcpData> {
    let field = Field::prime(7)?;
    group_comodule(field, &GroupTable::cyclic(3), &|g| {
        let z = [1, 2, 4][g];
        vec![vec![z, 0], vec![0, z * z % 7]]
    })
}

/// `C = k[t]/(t^p)` in characteristic `p` acting trivially on `W`, with
/// `[w1*, w1*] = [w1*, w2*] = t*`, a primitive of `C*`.
pub fn truncated_bracket(p: u64) -> Result<HcpData> {
    let field = Field::prime(p)?;
    let mut h = HcpData::trivial(truncated_polynomial(field)?, names(2))?;
    let t = Vector::singleton(1, field.one());
    h.bracket[0][0] = t.clone();
    h.bracket[0][1] = t.clone();
    h.bracket[1][0] = t;
    Ok(h)
}

/// `C = k[t]/(t^p)` with `w1 -> w1 (x) 1`, `w2 -> w2 (x) 1 + w1 (x) t`, a
/// valid comodule, and `[w2*, w2*] = t*`, which is not colinear: `[w1*, w2*]`
/// vanishes while the coaction of `w1*` involves `w2*`.
pub fn non_colinear(p: u64) -> Result<HcpData> {
    let field = Field::prime(p)?;
    let c = truncated_polynomial(field)?;
    let one = field.one();
    let coaction = vec![
        SparseVec::singleton((0, 0), one.clone()),
        SparseVec::from_terms([((1, 0), one.clone()), ((0, 1), one.clone())]),
    ];
    let mut bracket = vec![vec![Vector::new(); 2]; 2];
    bracket[1][1] = Vector::singleton(1, one);
    HcpData::new(c, names(2), coaction, bracket)
}

/// `C = k[t]/(t^p)` with the coaction of [`non_colinear`] and zero bracket.
pub fn truncated_unipotent(p: u64) -> Result<HcpData> {
    let mut h = non_colinear(p)?;
    h.bracket[1][1] = Vector::new();
    Ok(h)
}

/// `k^{Z/2}` with `w -> w (x) (e0 + 2 e1)`: counital, not coassociative.
pub fn non_coassociative(field: Field) -> Result<HcpData> {
    let c = function_algebra(field, &GroupTable::cyclic(2))?;
    let coaction = vec![SparseVec::from_terms([((0, 0), field.one()), ((0, 1), field.from_i64(2))])];
    HcpData::new(c, names(1), coaction, vec![vec![Vector::new()]])
}

/// `k^{Z/2}` with `w1` the sign character and `w2` coinvariant.
pub fn z2_mixed(field: Field) -> Result<HcpData> {
    group_comodule(field, &GroupTable::cyclic(2), &|g| {
        let s = if g == 0 { 1 } else { -1 };
        vec![vec![s, 0], vec![0, 1]]
    })
}

/// The valid pairs over `field`; the truncated-polynomial pairs only exist
/// in positive characteristic.
pub fn corpus(field: Field) -> Result<Vec<(String, HcpData)>> {
    let mut out = vec![
        ("trivial-1".to_string(), trivial_hcp(field, 1)?),
        ("trivial-3".to_string(), trivial_hcp(field, 3)?),
        ("z2-sign-1".to_string(), z2_sign(field, 1)?),
        ("z2-sign-3".to_string(), z2_sign(field, 3)?),
        ("z2-mixed".to_string(), z2_mixed(field)?),
        ("s3-sign".to_string(), s3_sign(field)?),
        ("s3-standard".to_string(), s3_standard(field)?),
    ];
    let p = field.characteristic();
    if p == 7 {
        out.push(("z3-characters".to_string(), z3_characters()?));
    }
    if p > 2 && p <= 7 {
        out.push((format!("truncated-unipotent-{p}"), truncated_unipotent(p)?));
        out.push((format!("truncated-bracket-{p}"), truncated_bracket(p)?));
    }
    Ok(out)
}
