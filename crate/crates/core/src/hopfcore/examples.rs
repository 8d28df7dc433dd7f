//! Standard small Hopf superalgebras.

use super::{dual, HopfSuperAlgebra, Tensor2};
use crate::error::{Error, Result};
use crate::freegraded::{shuffle_coproduct, wedge_basis, wedge_normalize};
use crate::superlin::{Field, SuperSpace, Vector};

/// A finite group by its multiplication table over named elements.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub names: Vec<String>,
    /// `table[i][j]` is the index of `g_i g_j`.
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and inverses.
    pub fn validate(&self) -> Result<usize> {
        let n = self.names.len();
        let bad = |m: &str| Err(Error::InvalidStructure(format!("group table: {m}")));
        if n == 0 || self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
            return bad("must be a square table of element indices");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return bad("not associative");
                    }
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g)) else {
            return bad("no identity element");
        };
        for g in 0..n {
            if !(0..n).any(|h| self.table[g][h] == e) {
                return bad("missing inverse");
            }
        }
        Ok(e)
    }

    pub fn cyclic(n: usize) -> GroupTable {
        GroupTable {
            names: (0..n)
                .map(|k| match k {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g{k}"),
                })
                .collect(),
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        }
    }

    /// The symmetric group on three letters, permutations composed as functions.
    pub fn s3() -> GroupTable {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        GroupTable {
            names: names.iter().map(|s| s.to_string()).collect(),
            table,
        }
    }
}

/// The group algebra `kG` with grouplike basis.
pub fn group_algebra(field: Field, g: &GroupTable) -> Result<HopfSuperAlgebra> {
    let e = g.validate()?;
    let n = g.names.len();
    let one = field.one();
    let mult = (0..n)
        .map(|a| (0..n).map(|b| Vector::singleton(g.table[a][b], one.clone())).collect())
        .collect();
    let comult = (0..n).map(|a| Tensor2::singleton((a, a), one.clone())).collect();
    let antipode = (0..n)
        .map(|a| {
            let inv = (0..n).find(|&b| g.table[a][b] == e).unwrap();
            Vector::singleton(inv, one.clone())
        })
        .collect();
    HopfSuperAlgebra::new(
        field,
        SuperSpace::even(g.names.clone())?,
        mult,
        Vector::singleton(e, one.clone()),
        comult,
        vec![one; n],
        Some(antipode),
    )
}

/// The function algebra `k^G` on the basis of point indicators `e0, e1, ...`.
pub fn function_algebra(field: Field, g: &GroupTable) -> Result<HopfSuperAlgebra> {
    let h = dual(&group_algebra(field, g)?);
    let names = (0..h.dim()).map(|i| format!("e{i}")).collect();
    h.with_basis_names(names)
}

/// The exterior algebra on odd primitive generators; basis `1`, `x`, `x∧y`, ...
/// by length then lexicographic.
pub fn exterior_algebra(field: Field, generators: &[&str]) -> Result<HopfSuperAlgebra> {
    let gens = SuperSpace::odd(generators.to_vec())?;
    let basis = wedge_basis(gens.dim());
    let index = |w: &Vec<usize>| basis.iter().position(|b| b == w).unwrap();
    let name = |w: &Vec<usize>| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| gens.name(l).to_string()).collect::<Vec<_>>().join("∧")
        }
    };
    let n = basis.len();
    let one = field.one();
    let mut mult = vec![vec![Vector::new(); n]; n];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let mut w = a.clone();
            w.extend(b);
            if let Some((neg, s)) = wedge_normalize(&gens, &w)? {
                mult[i][j] = Vector::singleton(index(&s), one.signed(neg));
            }
        }
    }
    let comult = basis
        .iter()
        .map(|w| shuffle_coproduct(&gens, field, w).map_keys(|(l, r)| (index(l), index(r))))
        .collect();
    let counit = basis.iter().map(|w| if w.is_empty() { one.clone() } else { field.zero() }).collect();
    let antipode = basis
        .iter()
        .enumerate()
        .map(|(i, w)| Vector::singleton(i, one.signed(w.len() % 2 == 1)))
        .collect();
    let space = SuperSpace::new(basis.iter().map(|w| (name(w), (w.len() % 2) as u8)).collect())?;
    HopfSuperAlgebra::new(field, space, mult, Vector::singleton(0, one), comult, counit, Some(antipode))
}

fn binomial(field: Field, n: usize, k: usize) -> crate::superlin::Scalar {
    let mut c = field.one();
    for i in 0..k {
        c = &c * &field.from_i64((n - i) as i64);
        c = &c * &field.from_i64((i + 1) as i64).inv().expect("k < p");
    }
    c
}

/// `k[t]/(t^p)` over `F_p` with `t` primitive; basis `1, t, t^2, ...`.
pub fn truncated_polynomial(field: Field) -> Result<HopfSuperAlgebra> {
    let p = field.characteristic() as usize;
    if p == 0 {
        return Err(Error::UnsupportedCharacteristic {
            p: 0,
            bound: 0,
            what: "k[t]/(t^p), which needs positive characteristic".into(),
        });
    }
    let names: Vec<String> = (0..p)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        })
        .collect();
    let one = field.one();
    let mult = (0..p)
        .map(|a| {
            (0..p)
                .map(|b| if a + b < p { Vector::singleton(a + b, one.clone()) } else { Vector::new() })
                .collect()
        })
        .collect();
    let comult = (0..p)
        .map(|n| Tensor2::from_terms((0..=n).map(|k| ((k, n - k), binomial(field, n, k)))))
        .collect();
    let counit = (0..p).map(|k| if k == 0 { one.clone() } else { field.zero() }).collect();
    let antipode = (0..p).map(|k| Vector::singleton(k, one.signed(k % 2 == 1))).collect();
    HopfSuperAlgebra::new(field, SuperSpace::even(names)?, mult, Vector::singleton(0, one), comult, counit, Some(antipode))
}
