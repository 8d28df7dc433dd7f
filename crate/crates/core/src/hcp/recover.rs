use std::collections::BTreeMap;

use super::build::{build_a, AResult};
use super::data::HcpData;
use super::graded::GradedVec;
use super::morphism::{is_hcp_isomorphism, HcpMorphism};
use crate::error::{Error, Result};
use crate::freegraded::Word;
use crate::hopfcore::{is_hopf_isomorphism, is_irreducible, quotient_hopf, verify_super_commutative, HopfSuperAlgebra, Quotient};
use crate::report::Report;
use crate::superlin::{Echelon, Matrix, SparseVec, Vector};

/// The pair `(Ā, W^A)` of a super-commutative Hopf superalgebra `A`, with
/// `Ā = A / A A_1` and `W^A = A_1 / A_0^+ A_1`.
#[derive(Clone, Debug)]
pub struct RecoveredHcp {
    pub hcp: HcpData,
    pub quotient: Quotient,
    /// Odd basis elements of `A` whose classes form the basis of `W^A`.
    pub w_reps: Vec<usize>,
    parity: Vec<u8>,
    odd: Echelon,
    /// Insertion index in `odd` of each representative.
    rep_slots: Vec<usize>,
}

impl RecoveredHcp {
    /// `varpi: A -> W^A`: the odd component, taken modulo `A_0^+ A_1`.
    pub fn varpi(&self, x: &Vector) -> Vector {
        let mut odd = x.clone();
        odd.retain(|&k, _| self.parity[k] == 1);
        let combo = self.odd.coordinates(&odd).expect("odd part lies in A_1");
        Vector::from_terms(
            self.rep_slots
                .iter()
                .enumerate()
                .filter_map(|(i, s)| combo.get(s).map(|c| (i, c.clone()))),
        )
    }
}

pub fn recover_hcp(a: &HopfSuperAlgebra) -> Result<RecoveredHcp> {
    let comm = verify_super_commutative(a);
    if !comm.passed {
        let w = comm.witness.expect("failed check has a witness");
        return Err(Error::NotCommutative(format!("at ({}): {} ≠ {}", w.at.join(", "), w.lhs, w.rhs)));
    }
    let field = a.field();
    let n = a.dim();
    let parity: Vec<u8> = (0..n).map(|i| a.parity(i)).collect();
    let odd_basis: Vec<usize> = (0..n).filter(|&i| parity[i] == 1).collect();

    let mut ideal = Vec::new();
    for k in 0..n {
        for &i in &odd_basis {
            ideal.push(a.mul_basis(k, i).clone());
        }
    }
    let quotient = quotient_hopf(a, &ideal)?;

    let mut odd = Echelon::new(field);
    let mut slot = 0;
    for k in (0..n).filter(|&k| parity[k] == 0) {
        let mut aug = a.basis(k);
        aug.add_scaled(a.unit(), &-&a.counit_table()[k]);
        for &i in &odd_basis {
            odd.insert(a.mul(&aug, &a.basis(i)));
            slot += 1;
        }
    }
    let (mut w_reps, mut rep_slots) = (Vec::new(), Vec::new());
    for &i in &odd_basis {
        if odd.insert(a.basis(i)) {
            w_reps.push(i);
            rep_slots.push(slot);
        }
        slot += 1;
    }
    let mut rec = RecoveredHcp {
        hcp: HcpData::trivial(quotient.hopf.clone(), Vec::new())?,
        quotient,
        w_reps,
        parity,
        odd,
        rep_slots,
    };
    let q = |v: &Vector| rec.quotient.map.mul_vec(v);
    let m = rec.w_reps.len();
    let cbar = &rec.quotient.hopf;

    // right adjoint coaction r -> sum varpi(r_2) (x) q(S(r_1)) q(r_3)
    let mut coaction = vec![SparseVec::new(); m];
    for (i, &r) in rec.w_reps.iter().enumerate() {
        for (&(x, y, z), c) in &a.comul_left(a.comul_basis(r)) {
            if rec.parity[y] == 0 {
                continue;
            }
            let w = rec.varpi(&a.basis(y));
            let cc = cbar.mul(&q(&a.antipode_table()[x]), &q(&a.basis(z)));
            for (&j, s) in &w {
                for (&g, t) in &cc {
                    coaction[i].add_term((j, g), &(c * s) * t);
                }
            }
        }
    }

    // [w_i*, w_j*] = w_i* w_j* + w_j* w_i* evaluated on class representatives
    let mut bracket = vec![vec![Vector::new(); m]; m];
    for (k, &rep) in rec.quotient.representatives.iter().enumerate() {
        for (&(x, y), c) in a.comul_basis(rep) {
            if rec.parity[x] == 0 || rec.parity[y] == 0 {
                continue;
            }
            let (u, v) = (rec.varpi(&a.basis(x)), rec.varpi(&a.basis(y)));
            for (&i, s) in &u {
                for (&j, t) in &v {
                    let st = &(c * s) * t;
                    bracket[i][j].add_term(k, st.clone());
                    bracket[j][i].add_term(k, st);
                }
            }
        }
    }
    let names = rec.w_reps.iter().map(|&r| a.names()[r].clone()).collect();
    rec.hcp = HcpData::new(cbar.clone(), names, coaction, bracket)?;
    Ok(rec)
}

/// Builds `A(C, W)`, recovers its pair and checks that the canonical maps
/// `Ā -> C` (degree-zero component) and `W^A -> W` (counit on the degree-one
/// component) form an isomorphism of pairs.
pub fn roundtrip_hcp(h: &HcpData) -> Result<(HcpMorphism, Report)> {
    let a = build_a(h)?;
    let rec = recover_hcp(&a.hopf)?;
    let field = h.field();
    let f_cols: Vec<Vector> = rec
        .quotient
        .representatives
        .iter()
        .map(|&r| {
            Vector::from_terms(
                a.embedding[r]
                    .iter()
                    .filter(|((_, w), _)| w.is_empty())
                    .map(|((c, _), x)| (*c, x.clone())),
            )
        })
        .collect();
    let g_cols: Vec<Vector> = rec
        .w_reps
        .iter()
        .map(|&r| {
            let mut v = Vector::new();
            for ((c, w), x) in &a.embedding[r] {
                if w.len() == 1 {
                    v.add_term(w[0], x * &h.c.counit_table()[*c]);
                }
            }
            v
        })
        .collect();
    let m = HcpMorphism {
        f: Matrix::from_columns(field, h.c.dim(), &f_cols),
        g: Matrix::from_columns(field, h.dim_w(), &g_cols),
    };
    let report = is_hcp_isomorphism(&rec.hcp, h, &m)?;
    Ok((m, report))
}

/// `beta_A: A -> A(Ā, W^A)`, `a -> sum_n ā_1 (x) varpi^(n)(a_2)` with
/// `varpi^(n) = varpi^{(x) n} o Delta^(n-1)`, together with the
/// isomorphism checks against `build_a` of the recovered pair.
#[derive(Clone, Debug)]
pub struct Beta {
    pub recovered: RecoveredHcp,
    pub target: AResult,
    pub matrix: Matrix,
    pub report: Report,
}

pub fn beta_roundtrip(a: &HopfSuperAlgebra) -> Result<Beta> {
    let rec = recover_hcp(a)?;
    let target = build_a(&rec.hcp)?;
    let field = a.field();
    let n = a.dim();
    let bound = rec.w_reps.len();

    // powers[k][x] = varpi^(k)(x) as a combination of words of length k
    let mut powers: Vec<Vec<SparseVec<Word>>> =
        vec![(0..n).map(|x| SparseVec::singleton(Vec::new(), a.counit_table()[x].clone())).collect()];
    for k in 1..=bound {
        let prev = &powers[k - 1];
        let next = (0..n)
            .map(|x| {
                if k == 1 {
                    return rec.varpi(&a.basis(x)).map_keys(|&i| vec![i]);
                }
                let mut out = SparseVec::new();
                for (&(y, z), c) in a.comul_basis(x) {
                    let head = rec.varpi(&a.basis(y));
                    for (&i, s) in &head {
                        for (w, t) in &prev[z] {
                            let mut word = vec![i];
                            word.extend(w);
                            out.add_term(word, &(c * s) * t);
                        }
                    }
                }
                out
            })
            .collect();
        powers.push(next);
    }

    let index: BTreeMap<&(usize, Word), usize> = target.labels.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut cols = Vec::with_capacity(n);
    for x in 0..n {
        let mut z = GradedVec::new();
        for (&(y, w), c) in a.comul_basis(x) {
            let bar = rec.quotient.map.mul_vec(&a.basis(y));
            for level in &powers {
                for (word, s) in &level[w] {
                    for (&g, t) in &bar {
                        z.add_term((g, word.clone()), &(c * s) * t);
                    }
                }
            }
        }
        let coords = Vector::from_terms(z.iter().filter_map(|(k, c)| index.get(k).map(|&i| (i, c.clone()))));
        let mut residual = z.clone();
        for (&i, c) in &coords {
            residual.add_scaled(&target.embedding[i], &-c);
        }
        if !residual.is_zero() {
            return Err(Error::RestrictionFailure(format!(
                "beta({}) is not in A(Ā, W^A)",
                a.names()[x]
            )));
        }
        cols.push(coords);
    }
    let matrix = Matrix::from_columns(field, target.dim(), &cols);
    let report = is_hopf_isomorphism(a, &target.hopf, &matrix);
    Ok(Beta {
        recovered: rec,
        target,
        matrix,
        report,
    })
}

/// Irreducibility of `A` and of `Ā`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unipotence {
    pub a_irreducible: bool,
    pub abar_irreducible: bool,
}

impl Unipotence {
    pub fn agree(&self) -> bool {
        self.a_irreducible == self.abar_irreducible
    }
}

pub fn unipotence_check(a: &HopfSuperAlgebra) -> Result<Unipotence> {
    let rec = recover_hcp(a)?;
    Ok(Unipotence {
        a_irreducible: is_irreducible(a),
        abar_irreducible: is_irreducible(&rec.quotient.hopf),
    })
}
