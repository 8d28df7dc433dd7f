use crate::dhcp::verify_dhcp;
use crate::error::{Error, Result};
use crate::freegraded::Word;
use crate::hopfcore::{dual, is_purely_even, verify_hopf, verify_super_commutative, HopfSuperAlgebra, Tensor2};
use crate::report::{format_combination, format_vector, witness, Check, Report, Witness};
use crate::rewrite::{FiniteJ, Presentation};
use crate::superlin::{Field, Matrix, SparseVec, Vector};

/// A Harish-Chandra pair `(C, W)` with `C` finite-dimensional: a commutative
/// Hopf algebra `C`, a purely odd right `C`-comodule `W` and a bracket on
/// `W*` with values in the primitives of `C*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcpData {
    pub c: HopfSuperAlgebra,
    pub w_names: Vec<String>,
    /// `coaction[i]` is the coaction of `w_i`; the key `(j, g)` stands for
    /// `w_j (x) c_g`.
    pub coaction: Vec<SparseVec<(usize, usize)>>,
    /// `bracket[i][j] = [w_i*, w_j*]` in the dual basis of `C`.
    pub bracket: Vec<Vec<Vector>>,
}

impl HcpData {
    /// Checks shapes and index ranges only; see [`verify_hcp`].
    pub fn new(
        c: HopfSuperAlgebra,
        w_names: Vec<String>,
        coaction: Vec<SparseVec<(usize, usize)>>,
        bracket: Vec<Vec<Vector>>,
    ) -> Result<HcpData> {
        let (m, d) = (w_names.len(), c.dim());
        if coaction.len() != m || coaction.iter().any(|t| t.keys().any(|&(j, g)| j >= m || g >= d)) {
            return Err(Error::Dimension(format!("coaction table must have {m} entries in W ⊗ C")));
        }
        if bracket.len() != m || bracket.iter().any(|r| r.len() != m || r.iter().any(|v| v.keys().any(|&k| k >= d))) {
            return Err(Error::Dimension(format!("bracket table must be {m}x{m} with values in C*")));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(n) = w_names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::InvalidStructure(format!("duplicate basis name {n:?}")));
        }
        Ok(HcpData {
            c,
            w_names,
            coaction,
            bracket,
        })
    }

    /// `W` with coaction `w -> w (x) 1` and zero bracket.
    pub fn trivial(c: HopfSuperAlgebra, w_names: Vec<String>) -> Result<HcpData> {
        let m = w_names.len();
        let unit = c.unit().clone();
        let coaction = (0..m).map(|i| unit.map_keys(|&g| (i, g))).collect();
        HcpData::new(c, w_names, coaction, vec![vec![Vector::new(); m]; m])
    }

    pub fn field(&self) -> Field {
        self.c.field()
    }

    pub fn dim_w(&self) -> usize {
        self.w_names.len()
    }

    /// The matrix coefficient `c_ji` in `w_i -> sum_j w_j (x) c_ji`.
    pub fn coefficient(&self, j: usize, i: usize) -> Vector {
        let mut v = Vector::new();
        for (&(k, g), c) in &self.coaction[i] {
            if k == j {
                v.add_term(g, c.clone());
            }
        }
        v
    }

    /// Coaction on `T^n(W)`: `w_I -> sum_J w_J (x) c_{j1 i1} ... c_{jn in}`.
    pub fn word_coaction(&self, word: &[usize]) -> SparseVec<(Word, usize)> {
        let mut out = self.c.unit().map_keys(|&g| (Vec::new(), g));
        for &i in word {
            let mut next = SparseVec::new();
            for ((w, g), a) in &out {
                for (&(j, h), b) in &self.coaction[i] {
                    let mut w2 = w.clone();
                    w2.push(j);
                    for (&k, c) in self.c.mul_basis(*g, h) {
                        next.add_term((w2.clone(), k), &(a * b) * c);
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Vectors `w` with coaction `w (x) 1`.
    pub fn coinvariants(&self) -> Vec<Vector> {
        let m = self.dim_w();
        let d = self.c.dim();
        let unit = self.c.unit();
        let cols: Vec<Vector> = (0..m)
            .map(|i| {
                let mut v: Vector = self.coaction[i].map_keys(|&(j, g)| j * d + g);
                for (&g, c) in unit {
                    v.add_term(i * d + g, -c.clone());
                }
                v
            })
            .collect();
        Matrix::from_columns(self.field(), m * d, &cols).kernel()
    }

    pub fn format_w(&self, v: &Vector) -> String {
        format_vector(&self.w_names, v)
    }
}

fn v_names(h: &HcpData) -> Vec<String> {
    h.w_names.iter().map(|n| format!("{n}*")).collect()
}

/// The associated pair `(C*, W*)`: `J` is the dual Hopf algebra and
/// `<v <| a, w> = sum <v, w_0><a, w_1>`, so `w_k* <| c_g* = sum_i (c_ki)_g w_i*`.
pub fn associated_dhcp(h: &HcpData) -> Result<Presentation<FiniteJ>> {
    let j = FiniteJ::new(dual(&h.c))?;
    let (m, d) = (h.dim_w(), h.c.dim());
    let mut action = vec![vec![Vector::new(); d]; m];
    for i in 0..m {
        for (&(k, g), c) in &h.coaction[i] {
            action[k][g].add_term(i, c.clone());
        }
    }
    Presentation::new(j, v_names(h), action, h.bracket.clone())
}

fn comodule_counit(h: &HcpData) -> Option<Witness> {
    let m = h.dim_w();
    for i in 0..m {
        let mut v = Vector::new();
        for (&(j, g), c) in &h.coaction[i] {
            v.add_term(j, c * &h.c.counit_table()[g]);
        }
        if v != Vector::singleton(i, h.field().one()) {
            return Some(witness(vec![h.w_names[i].clone()], h.format_w(&v), h.w_names[i].clone()));
        }
    }
    None
}

fn comodule_coassociativity(h: &HcpData) -> Option<Witness> {
    let cn = h.c.names();
    let label = |&(j, a, b): &(usize, usize, usize)| format!("{}⊗{}⊗{}", h.w_names[j], cn[a], cn[b]);
    for i in 0..h.dim_w() {
        // (rho (x) id) rho and (id (x) Delta) rho, keyed (w, c, c)
        let mut l = SparseVec::new();
        let mut r = SparseVec::new();
        for (&(j, g), c) in &h.coaction[i] {
            for (&(k, f), d) in &h.coaction[j] {
                l.add_term((k, f, g), c * d);
            }
            for (&(a, b), d) in h.c.comul_basis(g) {
                r.add_term((j, a, b), c * d);
            }
        }
        if l != r {
            return Some(witness(
                vec![h.w_names[i].clone()],
                format_combination(&l, label),
                format_combination(&r, label),
            ));
        }
    }
    None
}

/// The left coaction on `C*` transposed from the right adjoint action
/// `b <| a = sum S(a_1) b a_2`: `b -> sum_g (sum <b, e_2> S(e_1) e_3) (x) e_g*`
/// where `e = e_g`. Keys are `(C index, C* index)`.
fn adjoint_coaction(c: &HopfSuperAlgebra, b: &Vector) -> Tensor2 {
    let zero = c.field().zero();
    let mut out = Tensor2::new();
    for g in 0..c.dim() {
        let d3 = c.comul_left(c.comul_basis(g));
        for (&(x, y, z), k) in &d3 {
            let by = b.coeff(&y, &zero);
            if by.is_zero() {
                continue;
            }
            for (&t, s) in &c.mul(&c.antipode_table()[x], &c.basis(z)) {
                out.add_term((t, g), &(k * &by) * s);
            }
        }
    }
    out
}

/// `[ , ]: W* (x) W* -> C*` commutes with the left `C`-coactions, where
/// `W*` carries `w_k* -> sum_i c_ki (x) w_i*`.
fn bracket_colinear(h: &HcpData) -> Option<Witness> {
    let m = h.dim_w();
    let cn = h.c.names();
    let label = |&(t, g): &(usize, usize)| format!("{}⊗{}*", cn[t], cn[g]);
    let vn = v_names(h);
    for k in 0..m {
        for l in 0..m {
            let lhs = adjoint_coaction(&h.c, &h.bracket[k][l]);
            let mut rhs = Tensor2::new();
            for i in 0..m {
                let cki = h.coefficient(k, i);
                if cki.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let clj = h.coefficient(l, j);
                    if clj.is_zero() {
                        continue;
                    }
                    let prod = h.c.mul(&cki, &clj);
                    for (&t, a) in &prod {
                        for (&g, b) in &h.bracket[i][j] {
                            rhs.add_term((t, g), a * b);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Some(witness(
                    vec![vn[k].clone(), vn[l].clone()],
                    format_combination(&lhs, label),
                    format_combination(&rhs, label),
                ));
            }
        }
    }
    None
}

fn bracket_primitive(h: &HcpData, j: &HopfSuperAlgebra) -> Option<Witness> {
    let vn = v_names(h);
    for k in 0..h.dim_w() {
        for l in 0..h.dim_w() {
            let b = &h.bracket[k][l];
            let mut d = j.comul(b);
            for (&i, c) in b {
                for (&u, e) in j.unit() {
                    d.add_term((i, u), -(c * e));
                    d.add_term((u, i), -(c * e));
                }
            }
            if !d.is_zero() {
                return Some(witness(
                    vec![vn[k].clone(), vn[l].clone()],
                    format_vector(j.names(), b),
                    "primitive element of C*".into(),
                ));
            }
        }
    }
    None
}

/// Hopf axioms for `C`, commutativity and evenness, the comodule laws, the
/// bracket landing in primitives, the pair conditions of the associated
/// pair, and colinearity of the bracket.
pub fn verify_hcp(h: &HcpData) -> Report {
    let mut r = Report::new();
    r.extend_prefixed("c-", verify_hopf(&h.c));
    r.push(Check::from_result(
        "c-purely-even",
        (!is_purely_even(&h.c)).then(|| witness(vec!["C"], "odd basis elements".into(), "purely even".into())),
    ));
    let mut comm = verify_super_commutative(&h.c);
    comm.name = "c-commutative".into();
    r.push(comm);
    r.push(Check::from_result("comodule-counit", comodule_counit(h)));
    r.push(Check::from_result("comodule-coassociativity", comodule_coassociativity(h)));
    if !r.passed() {
        return r;
    }
    let j = dual(&h.c);
    r.push(Check::from_result("bracket-primitive", bracket_primitive(h, &j)));
    if !r.passed() {
        return r;
    }
    match associated_dhcp(h) {
        Ok(p) => r.extend_prefixed("pair-", verify_dhcp(&p)),
        Err(e) => r.push(Check::fail("pair", witness(vec!["(C*, W*)"], e.to_string(), "a pair".into()))),
    }
    r.push(Check::from_result("bracket-colinear", bracket_colinear(h)));
    r
}
