use std::cell::RefCell;
use std::collections::BTreeMap;

use super::data::HcpData;
use crate::freegraded::{deconcatenation, shuffle_coproduct, shuffle_product, word_antipode, words_of_length, Word};
use crate::hopfcore::{dual, HopfSuperAlgebra};
use crate::report::{format_combination, witness, Check, Report};
use crate::superlin::{Scalar, SparseVec, SuperSpace};

/// Basis element `c (x) w_1 ... w_n` of `C (x) T(W)`, or `a (x) v_1 ... v_n`
/// of `J (x) T(V)`.
pub type GradedKey = (usize, Word);
pub type GradedVec = SparseVec<GradedKey>;
pub type GradedPair = SparseVec<(GradedKey, GradedKey)>;

/// The graded Hopf superalgebras `C ⋉ T_c(W)` (tensor product algebra with
/// the shuffle product, smash coproduct) and `J ⋉ T(V)` with `J = C*`,
/// `V = W*`, all in dual bases so that the canonical pairing between them is
/// `<(a, x), (c, z)> = [a = c][x = z]`.
#[derive(Clone, Debug)]
pub struct GradedPairs<'a> {
    h: &'a HcpData,
    j: HopfSuperAlgebra,
    w_space: SuperSpace,
    v_space: SuperSpace,
    /// `(word, a) -> word <| a`, filled one length at a time
    action: RefCell<BTreeMap<usize, BTreeMap<(Word, usize), SparseVec<Word>>>>,
}

impl<'a> GradedPairs<'a> {
    pub fn new(h: &'a HcpData) -> Self {
        let w_space = SuperSpace::odd(h.w_names.clone()).expect("names are distinct");
        let v_space = w_space.dual();
        GradedPairs {
            h,
            j: dual(&h.c),
            w_space,
            v_space,
            action: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn hcp(&self) -> &HcpData {
        self.h
    }

    pub fn j(&self) -> &HopfSuperAlgebra {
        &self.j
    }

    pub fn w_space(&self) -> &SuperSpace {
        &self.w_space
    }

    /// Basis keys of degree exactly `n`: words major, `C` index minor.
    pub fn keys_of_degree(&self, n: usize) -> Vec<GradedKey> {
        let d = self.h.c.dim();
        words_of_length(self.h.dim_w(), n)
            .into_iter()
            .flat_map(|w| (0..d).map(move |g| (g, w.clone())))
            .collect()
    }

    pub fn a_unit(&self) -> GradedVec {
        self.h.c.unit().map_keys(|&g| (g, Vec::new()))
    }

    pub fn a_mul_keys(&self, x: &GradedKey, y: &GradedKey) -> GradedVec {
        let f = self.h.field();
        let mut out = GradedVec::new();
        let sh = shuffle_product(&self.w_space, f, &x.1, &y.1);
        for (&g, a) in self.h.c.mul_basis(x.0, y.0) {
            for (w, b) in &sh {
                out.add_term((g, w.clone()), a * b);
            }
        }
        out
    }

    pub fn a_mul(&self, x: &GradedVec, y: &GradedVec) -> GradedVec {
        let mut out = GradedVec::new();
        for (k, a) in x {
            for (l, b) in y {
                out.add_scaled(&self.a_mul_keys(k, l), &(a * b));
            }
        }
        out
    }

    /// `Delta(c (x) z) = sum (c_1 (x) (z_1)_0) (x) ((z_1)_1 c_2 (x) z_2)`.
    pub fn a_comul_key(&self, x: &GradedKey) -> GradedPair {
        let c = &self.h.c;
        let f = self.h.field();
        let mut out = GradedPair::new();
        for ((z1, z2), s) in &deconcatenation(f, &x.1) {
            let co = self.h.word_coaction(z1);
            for (&(c1, c2), t) in c.comul_basis(x.0) {
                for ((u, g), r) in &co {
                    for (&k, q) in c.mul_basis(*g, c2) {
                        out.add_term(((c1, u.clone()), (k, z2.clone())), &(&(s * t) * r) * q);
                    }
                }
            }
        }
        out
    }

    pub fn a_comul(&self, x: &GradedVec) -> GradedPair {
        x.apply(|k| self.a_comul_key(k))
    }

    pub fn a_counit_key(&self, x: &GradedKey) -> Scalar {
        if x.1.is_empty() {
            self.h.c.counit_table()[x.0].clone()
        } else {
            self.h.field().zero()
        }
    }

    /// `S(c (x) z) = sum S(c z_1) (x) S(z_0)`, with `z -> z_0 (x) z_1` the
    /// coaction on `T(W)`.
    pub fn a_antipode_key(&self, x: &GradedKey) -> GradedVec {
        let c = &self.h.c;
        let f = self.h.field();
        let mut out = GradedVec::new();
        for ((u, g), r) in &self.h.word_coaction(&x.1) {
            let s = c.antipode_of(c.mul_basis(x.0, *g));
            for (w, t) in &word_antipode(&self.w_space, f, u) {
                for (&k, q) in &s {
                    out.add_term((k, w.clone()), &(r * t) * q);
                }
            }
        }
        out
    }

    pub fn a_antipode(&self, x: &GradedVec) -> GradedVec {
        x.apply(|k| self.a_antipode_key(k))
    }

    pub fn h_unit(&self) -> GradedVec {
        self.j.unit().map_keys(|&a| (a, Vec::new()))
    }

    /// `v_K <| a` for a basis element `a` of `J`: the coefficient of `v_I` is
    /// the coefficient of `w_K (x) c_a` in the coaction of `w_I`.
    fn act_word(&self, word: &[usize], a: usize) -> SparseVec<Word> {
        let n = word.len();
        let mut cache = self.action.borrow_mut();
        let table = cache.entry(n).or_insert_with(|| {
            let mut t: BTreeMap<(Word, usize), SparseVec<Word>> = BTreeMap::new();
            for i in words_of_length(self.h.dim_w(), n) {
                for ((k, g), c) in &self.h.word_coaction(&i) {
                    t.entry((k.clone(), *g)).or_default().add_term(i.clone(), c.clone());
                }
            }
            t
        });
        table.get(&(word.to_vec(), a)).cloned().unwrap_or_default()
    }

    /// `(a (x) x)(b (x) y) = sum a b_1 (x) (x <| b_2) y`.
    pub fn h_mul_keys(&self, x: &GradedKey, y: &GradedKey) -> GradedVec {
        let mut out = GradedVec::new();
        for (&(b1, b2), s) in self.j.comul_basis(y.0) {
            let ab = self.j.mul_basis(x.0, b1);
            for (w, t) in &self.act_word(&x.1, b2) {
                let mut word = w.clone();
                word.extend_from_slice(&y.1);
                for (&k, r) in ab {
                    out.add_term((k, word.clone()), &(s * t) * r);
                }
            }
        }
        out
    }

    pub fn h_mul(&self, x: &GradedVec, y: &GradedVec) -> GradedVec {
        let mut out = GradedVec::new();
        for (k, a) in x {
            for (l, b) in y {
                out.add_scaled(&self.h_mul_keys(k, l), &(a * b));
            }
        }
        out
    }

    pub fn h_comul_key(&self, x: &GradedKey) -> GradedPair {
        let f = self.h.field();
        let mut out = GradedPair::new();
        let sh = shuffle_coproduct(&self.v_space, f, &x.1);
        for (&(a1, a2), s) in self.j.comul_basis(x.0) {
            for ((u, w), t) in &sh {
                out.add_term(((a1, u.clone()), (a2, w.clone())), s * t);
            }
        }
        out
    }

    pub fn h_counit_key(&self, x: &GradedKey) -> Scalar {
        if x.1.is_empty() {
            self.j.counit_table()[x.0].clone()
        } else {
            self.h.field().zero()
        }
    }

    /// `S(a x) = S(x) S(a)`.
    pub fn h_antipode_key(&self, x: &GradedKey) -> GradedVec {
        let f = self.h.field();
        let one = self.j.unit().clone();
        let mut sx = GradedVec::new();
        for (w, c) in &word_antipode(&self.v_space, f, &x.1) {
            for (&u, d) in &one {
                sx.add_term((u, w.clone()), c * d);
            }
        }
        let sa = self.j.antipode_table()[x.0].map_keys(|&k| (k, Vec::new()));
        self.h_mul(&sx, &sa)
    }

    pub fn format_a(&self, v: &GradedVec) -> String {
        format_combination(v, |k| self.key_name_a(k))
    }

    pub fn key_name_a(&self, k: &GradedKey) -> String {
        graded_name(self.h.c.names(), &self.h.w_names, k)
    }

    pub fn key_name_h(&self, k: &GradedKey) -> String {
        graded_name(self.j.names(), self.v_space.names(), k)
    }
}

pub(crate) fn graded_name(base: &[String], letters: &[String], k: &GradedKey) -> String {
    if k.1.is_empty() {
        return base[k.0].clone();
    }
    let w = k.1.iter().map(|&l| letters[l].clone()).collect::<Vec<_>>().join("·");
    format!("{}⊗{}", base[k.0], w)
}

type Law = BTreeMap<(GradedKey, GradedKey, GradedKey), Scalar>;

fn add(m: &mut Law, k: (GradedKey, GradedKey, GradedKey), c: Scalar) {
    let e = m.entry(k.clone()).or_insert_with(|| c.zero_like());
    *e += &c;
    if e.is_zero() {
        m.remove(&k);
    }
}

fn compare(name: &str, g: &GradedPairs, l: &Law, r: &Law) -> Check {
    let keys: std::collections::BTreeSet<_> = l.keys().chain(r.keys()).collect();
    for k in keys {
        let lv = l.get(k).cloned();
        let rv = r.get(k).cloned();
        let zero = g.h.field().zero();
        let (lv, rv) = (lv.unwrap_or_else(|| zero.clone()), rv.unwrap_or(zero));
        if lv != rv {
            return Check::fail(
                name,
                witness(
                    vec![g.key_name_h(&k.0), g.key_name_h(&k.1), g.key_name_a(&k.2)],
                    lv.to_string(),
                    rv.to_string(),
                ),
            );
        }
    }
    Check::pass(name)
}

/// Checks that the canonical pairing between `J ⋉ T(V)` and `C ⋉ T_c(W)` is a
/// Hopf pairing on all basis tuples of total degree at most `bound`.
/// Non-degeneracy is by construction: the bases are dual.
pub fn verify_graded_pairing(h: &HcpData, bound: usize) -> Report {
    let g = GradedPairs::new(h);
    let basis: Vec<Vec<GradedKey>> = (0..=bound).map(|n| g.keys_of_degree(n)).collect();
    let mut r = Report::new();

    // <x y, z> = sum <x, z_1><y, z_2>
    let (mut l, mut rr) = (Law::new(), Law::new());
    for n in 0..=bound {
        for m in 0..=bound - n {
            for x in &basis[n] {
                for y in &basis[m] {
                    for (z, c) in &g.h_mul_keys(x, y) {
                        add(&mut l, (x.clone(), y.clone(), z.clone()), c.clone());
                    }
                }
            }
        }
        for z in &basis[n] {
            for ((z1, z2), c) in &g.a_comul_key(z) {
                add(&mut rr, (z1.clone(), z2.clone(), z.clone()), c.clone());
            }
        }
    }
    r.push(compare("graded-product", &g, &l, &rr));

    // <x, z w> = sum <x_1, z><x_2, w>, keyed (x_1, x_2, x) = (z, w, x)
    let (mut l, mut rr) = (Law::new(), Law::new());
    for n in 0..=bound {
        for m in 0..=bound - n {
            for z in &basis[n] {
                for w in &basis[m] {
                    for (x, c) in &g.a_mul_keys(z, w) {
                        add(&mut l, (z.clone(), w.clone(), x.clone()), c.clone());
                    }
                }
            }
        }
        for x in &basis[n] {
            for ((x1, x2), c) in &g.h_comul_key(x) {
                add(&mut rr, (x1.clone(), x2.clone(), x.clone()), c.clone());
            }
        }
    }
    r.push(compare("graded-coproduct", &g, &l, &rr));

    let zero = h.field().zero();
    let one_h = g.h_unit();
    let one_a = g.a_unit();
    let mut unit = None;
    let mut counit = None;
    let mut anti = None;
    let sa: BTreeMap<GradedKey, GradedVec> =
        basis.iter().flatten().map(|z| (z.clone(), g.a_antipode_key(z))).collect();
    for k in basis.iter().flatten() {
        let lv = one_h.coeff(k, &zero);
        let rv = g.a_counit_key(k);
        if unit.is_none() && lv != rv {
            unit = Some(witness(vec!["1".to_string(), g.key_name_a(k)], lv.to_string(), rv.to_string()));
        }
        let lv = g.h_counit_key(k);
        let rv = one_a.coeff(k, &zero);
        if counit.is_none() && lv != rv {
            counit = Some(witness(vec![g.key_name_h(k), "1".to_string()], lv.to_string(), rv.to_string()));
        }
        if anti.is_none() {
            // <S x, z> = <x, S z>, compared on all z of the same degree
            let sx = g.h_antipode_key(k);
            for z in &basis[k.1.len()] {
                let lv = sx.coeff(z, &zero);
                let rv = sa[z].coeff(k, &zero);
                if lv != rv {
                    anti = Some(witness(vec![g.key_name_h(k), g.key_name_a(z)], lv.to_string(), rv.to_string()));
                    break;
                }
            }
        }
    }
    r.push(Check::from_result("graded-unit", unit));
    r.push(Check::from_result("graded-counit", counit));
    r.push(Check::from_result("graded-antipode", anti));
    r
}
