use std::collections::BTreeMap;

use super::data::{associated_dhcp, verify_hcp, HcpData};
use super::graded::{GradedKey, GradedPairs, GradedVec};
use crate::dhcp::{build_h, pair_basis};
use crate::error::{Error, Result};
use crate::freegraded::{shuffle_product, wedge_basis, wedge_normalize, Word};
use crate::hopfcore::{
    dual, is_hopf_isomorphism, pairing_nondegenerate, verify_hopf_pairing, HopfSuperAlgebra,
    Tensor2,
};
use crate::report::{format_vector, witness, Check, Report};
use crate::rewrite::{FiniteJ, Letter, NormalElement, Presentation};
use crate::superlin::{Matrix, Scalar, SparseVec, SuperSpace, Vector};

/// `A(C, W)` as a Hopf superalgebra together with its embedding into the
/// truncation `C (x) T^{<= dim W}(W)`, which is injective on `A(C, W)`.
#[derive(Clone, Debug)]
pub struct AResult {
    pub hopf: HopfSuperAlgebra,
    /// Basis element `k` is the element of `A(C, W)` whose coefficients at
    /// increasing words are those of `labels[k] = (c, S)`.
    pub labels: Vec<GradedKey>,
    /// Degree `<= dim W` part of each basis element.
    pub embedding: Vec<GradedVec>,
    /// Dimension of the annihilator before the change of basis.
    pub annihilator_dim: usize,
}

impl AResult {
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }
}

/// Labels `(c, S)` of `C (x) ∧(W)`: wedge words major, `C` basis minor.
pub fn wedge_labels(dim_c: usize, dim_w: usize) -> Vec<GradedKey> {
    wedge_basis(dim_w)
        .into_iter()
        .flat_map(|s| (0..dim_c).map(move |c| (c, s.clone())))
        .collect()
}

fn label_name(h: &HcpData, k: &GradedKey) -> String {
    if k.1.is_empty() {
        return h.c.names()[k.0].clone();
    }
    let w = k.1.iter().map(|&l| h.w_names[l].clone()).collect::<Vec<_>>().join("∧");
    format!("{}⊗{}", h.c.names()[k.0], w)
}

/// Normal forms of `e^a x_I` in `H(J, V)` for all words `I` of length up to
/// `bound`, keyed `(a, I)`; values keyed `(S, b)`. Zero normal forms are not
/// stored.
struct NormalForms {
    table: BTreeMap<GradedKey, NormalElement<usize>>,
}

impl NormalForms {
    fn new(p: &Presentation<FiniteJ>, bound: usize) -> Result<NormalForms> {
        let field = p.j().hopf().field();
        let d = p.j().hopf().dim();
        // NF(x_i w) = NF(x_i NF(w)), so words extend only nonzero normal
        // forms; the steps x_i * (b x_S) are cached
        let mut steps: BTreeMap<(usize, Word, usize), NormalElement<usize>> = BTreeMap::new();
        let mut level: Vec<(Word, NormalElement<usize>)> = vec![(Vec::new(), p.normalize_word(&[])?)];
        let mut table = BTreeMap::new();
        for len in 0..=bound {
            let mut next = Vec::new();
            for (word, nf) in &level {
                for a in 0..d {
                    let e = p.left_mul(&Vector::singleton(a, field.one()), nf);
                    if !e.is_zero() {
                        table.insert((a, word.clone()), e);
                    }
                }
                if len == bound {
                    continue;
                }
                for i in 0..p.dim_x() {
                    let mut out = NormalElement::zero();
                    for ((s, b), c) in &nf.terms {
                        let key = (i, s.clone(), *b);
                        if !steps.contains_key(&key) {
                            let mut letters = vec![Letter::X(i), Letter::J(*b)];
                            letters.extend(s.iter().map(|&x| Letter::X(x)));
                            steps.insert(key.clone(), p.normalize_word(&letters)?);
                        }
                        out.terms.add_scaled(&steps[&key].terms, c);
                    }
                    if !out.is_zero() {
                        let mut w = vec![i];
                        w.extend(word);
                        next.push((w, out));
                    }
                }
            }
            level = next;
        }
        Ok(NormalForms { table })
    }

    fn terms(&self, key: &GradedKey) -> impl Iterator<Item = (&(Word, usize), &Scalar)> {
        self.table.get(key).into_iter().flat_map(|e| e.terms.iter())
    }
}

/// Groups an element of `C (x) T(W)` by word.
fn by_word(z: &GradedVec) -> BTreeMap<Word, Vector> {
    let mut out: BTreeMap<Word, Vector> = BTreeMap::new();
    for ((c, w), a) in z {
        out.entry(w.clone()).or_default().add_term(*c, a.clone());
    }
    out
}

fn restriction_error(what: &str, g: &GradedPairs, residual: &GradedVec) -> Error {
    Error::RestrictionFailure(format!("{what} leaves A(C, W): residual {}", g.format_a(residual)))
}

/// Computes `A(C, W)` as the annihilator of the relation ideal of `H(J, V)`
/// inside `C (x) T^{<= N}(W)`, `N = dim W`, and equips it with the
/// restrictions of the product, smash coproduct and antipode of
/// `C ⋉ T_c(W)`. The ideal meets degrees `<= N` in the span of
/// `e^a x_I - NF(e^a x_I)`, `|I| <= N`.
pub fn build_a(h: &HcpData) -> Result<AResult> {
    if let Some(c) = verify_hcp(h).first_failure() {
        let w = c.witness.as_ref().expect("failed check has a witness");
        return Err(Error::InvalidPair(format!("{} fails at ({})", c.name, w.at.join(", "))));
    }
    let p = associated_dhcp(h)?;
    let field = h.field();
    let (m, d) = (h.dim_w(), h.c.dim());
    let n = m;
    let g = GradedPairs::new(h);
    let nf = NormalForms::new(&p, 2 * n)?;

    let trunc: Vec<GradedKey> = (0..=n).flat_map(|k| g.keys_of_degree(k)).collect();
    let index: BTreeMap<&GradedKey, usize> = trunc.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut rows = Vec::new();
    for key in &trunc {
        let mut r = Vector::singleton(index[key], field.one());
        for ((w, b), c) in nf.terms(key) {
            r.add_term(index[&(*b, w.clone())], -c.clone());
        }
        if !r.is_zero() {
            rows.push(r);
        }
    }
    let ann = Matrix::from_rows(field, trunc.len(), rows).kernel();
    let expected = d << m;
    if ann.len() != expected {
        return Err(Error::InvalidPair(format!(
            "annihilator has dimension {}, expected {expected}",
            ann.len()
        )));
    }

    // change of basis: coefficients at increasing words are the identity
    let labels = wedge_labels(d, m);
    let psi_cols: Vec<Vector> = ann
        .iter()
        .map(|z| {
            Vector::from_terms(
                labels
                    .iter()
                    .enumerate()
                    .filter_map(|(i, k)| z.get(&index[k]).map(|c| (i, c.clone()))),
            )
        })
        .collect();
    let psi = Matrix::from_columns(field, expected, &psi_cols);
    let inv = psi
        .inverse()
        .ok_or_else(|| Error::InvalidPair("annihilator does not project onto C ⊗ ∧(W)".into()))?;
    let embedding: Vec<GradedVec> = (0..expected)
        .map(|k| {
            let mut z = Vector::new();
            for (&j, c) in &inv.column(k) {
                z.add_scaled(&ann[j], c);
            }
            z.map_keys(|&i| trunc[i].clone())
        })
        .collect();

    let coords = |z: &GradedVec| -> Vector {
        Vector::from_terms(labels.iter().enumerate().filter_map(|(i, k)| z.get(k).map(|c| (i, c.clone()))))
    };
    let expand = |v: &Vector| -> GradedVec {
        let mut out = GradedVec::new();
        for (&k, c) in v {
            out.add_scaled(&embedding[k], c);
        }
        out
    };
    let check = |what: &str, z: &GradedVec| -> Result<Vector> {
        let v = coords(z);
        let residual = z.minus(&expand(&v));
        if residual.is_zero() {
            Ok(v)
        } else {
            Err(restriction_error(what, &g, &residual))
        }
    };

    let grouped: Vec<BTreeMap<Word, Vector>> = embedding.iter().map(by_word).collect();
    let mut mult = vec![vec![Vector::new(); expected]; expected];
    for i in 0..expected {
        for k in 0..expected {
            let mut z = GradedVec::new();
            for (u, a) in &grouped[i] {
                for (w, b) in &grouped[k] {
                    if u.len() + w.len() > n {
                        continue;
                    }
                    let ab = h.c.mul(a, b);
                    for (s, t) in &shuffle_product(g.w_space(), field, u, w) {
                        for (&c, e) in &ab {
                            z.add_term((c, s.clone()), t * e);
                        }
                    }
                }
            }
            mult[i][k] = check("product", &z)?;
        }
    }
    let unit = check("unit", &g.a_unit())?;

    // the coproduct needs components up to degree 2N: <e^a x_I, Z> is read
    // off from NF(e^a x_I), whose terms sit at increasing words
    let label_index: BTreeMap<&GradedKey, usize> = labels.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut readers: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); expected];
    for (k, z) in embedding.iter().enumerate() {
        for (&l, c) in &coords(z) {
            readers[l].push((k, c.clone()));
        }
    }
    let mut extended: Vec<GradedVec> = embedding.clone();
    for (key, e) in &nf.table {
        if key.1.len() <= n {
            continue;
        }
        for ((w, b), c) in &e.terms {
            if let Some(&l) = label_index.get(&(*b, w.clone())) {
                for (j, x) in &readers[l] {
                    extended[*j].add_term(key.clone(), c * x);
                }
            }
        }
    }
    let mut comult = Vec::with_capacity(expected);
    for full in &extended {
        let mut delta: SparseVec<(GradedKey, GradedKey)> = SparseVec::new();
        for (key, c) in full {
            for ((l, r), e) in &g.a_comul_key(key) {
                if l.1.len() <= n && r.1.len() <= n {
                    delta.add_term((l.clone(), r.clone()), c * e);
                }
            }
        }
        // coordinates at (label, label), then the residual must vanish
        let mut t = Tensor2::new();
        for ((l, r), c) in &delta {
            if let (Some(&a), Some(&b)) = (label_index.get(l), label_index.get(r)) {
                t.add_term((a, b), c.clone());
            }
        }
        let mut residual = delta.clone();
        for (&(a, b), c) in &t {
            for (l, x) in &embedding[a] {
                for (r, y) in &embedding[b] {
                    residual.add_term((l.clone(), r.clone()), -(&(c * x) * y));
                }
            }
        }
        if !residual.is_zero() {
            let (k, c) = residual.first().unwrap();
            return Err(Error::RestrictionFailure(format!(
                "coproduct leaves A(C, W) ⊗ A(C, W): residual {c} at {} ⊗ {}",
                g.key_name_a(&k.0),
                g.key_name_a(&k.1)
            )));
        }
        comult.push(t);
    }

    let antipode = embedding
        .iter()
        .map(|z| check("antipode", &g.a_antipode(z)))
        .collect::<Result<Vec<_>>>()?;
    let counit = embedding
        .iter()
        .map(|z| {
            let mut s = field.zero();
            for (k, c) in z {
                s += &(c * &g.a_counit_key(k));
            }
            s
        })
        .collect();
    let space = SuperSpace::new(labels.iter().map(|k| (label_name(h, k), (k.1.len() % 2) as u8)).collect())?;
    let hopf = HopfSuperAlgebra::new(field, space, mult, unit, comult, counit, Some(antipode))?;
    Ok(AResult {
        hopf,
        labels,
        embedding,
        annihilator_dim: ann.len(),
    })
}

/// `psi'_X: A(C, W) -> C (x) ∧(W)` for the total order `order` on the basis of
/// `V = W*` (listed from smallest to largest), with its checks.
#[derive(Clone, Debug)]
pub struct PsiPrime {
    /// Columns are images of the basis of `A(C, W)`, in the basis of
    /// [`wedge_labels`].
    pub matrix: Matrix,
    pub report: Report,
}

/// Product of `C (x) ∧(W)` on the basis of [`wedge_labels`].
fn wedge_tensor_mul(h: &HcpData, labels: &[GradedKey], x: &Vector, y: &Vector) -> Result<Vector> {
    let index: BTreeMap<&GradedKey, usize> = labels.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let ws = SuperSpace::odd(h.w_names.clone())?;
    let mut out = Vector::new();
    for (&i, a) in x {
        for (&k, b) in y {
            let (c1, s1) = &labels[i];
            let (c2, s2) = &labels[k];
            let mut letters = s1.clone();
            letters.extend(s2);
            if let Some((neg, s)) = wedge_normalize(&ws, &letters)? {
                for (&c, e) in h.c.mul_basis(*c1, *c2) {
                    out.add_term(index[&(c, s.clone())], (&(a * b) * e).signed(neg));
                }
            }
        }
    }
    Ok(out)
}

/// `psi'_X` reads the coefficient of `c (x) x_{s_1} ... x_{s_k}` with
/// `s_1 < ... < s_k` in the order `X`; the determinant pairing turns the
/// reordering into a sign.
pub fn psi_prime(h: &HcpData, a: &AResult, order: &[usize]) -> Result<PsiPrime> {
    let field = h.field();
    let m = h.dim_w();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return Err(Error::InvalidStructure(format!("{order:?} is not an ordering of 0..{m}")));
    }
    let rank: Vec<usize> = {
        let mut r = vec![0; m];
        for (pos, &w) in order.iter().enumerate() {
            r[w] = pos;
        }
        r
    };
    let ws = SuperSpace::odd(h.w_names.clone())?;
    let labels = wedge_labels(h.c.dim(), m);
    let cols: Vec<Vector> = a
        .embedding
        .iter()
        .map(|z| {
            let mut v = Vector::new();
            for (i, (c, s)) in labels.iter().enumerate() {
                let mut xs = s.clone();
                xs.sort_by_key(|&l| rank[l]);
                // sign of the permutation from the X-sorted word back to s
                let (neg, _) = wedge_normalize(&ws, &xs).ok().flatten().expect("distinct letters");
                if let Some(k) = z.get(&(*c, xs)) {
                    v.add_term(i, k.signed(neg));
                }
            }
            v
        })
        .collect();
    let matrix = Matrix::from_columns(field, labels.len(), &cols);
    let mut report = Report::new();
    let n = matrix.ncols();
    let ok = matrix.nrows() == n && matrix.rank() == n;
    report.push(Check::from_result(
        "invertible",
        (!ok).then(|| witness(vec!["psi'"], format!("rank {}", matrix.rank()), format!("rank {n}"))),
    ));
    let names: Vec<String> = labels.iter().map(|k| label_name(h, k)).collect();
    let mut mult = None;
    'm: for i in 0..n {
        for k in 0..n {
            let l = matrix.mul_vec(a.hopf.mul_basis(i, k));
            let r = wedge_tensor_mul(h, &labels, &cols[i], &cols[k])?;
            if l != r {
                mult = Some(witness(
                    vec![a.hopf.names()[i].clone(), a.hopf.names()[k].clone()],
                    format_vector(&names, &l),
                    format_vector(&names, &r),
                ));
                break 'm;
            }
        }
    }
    report.push(Check::from_result("superalgebra-map", mult));
    let one = labels
        .iter()
        .enumerate()
        .filter(|(_, k)| k.1.is_empty())
        .map(|(i, k)| (i, h.c.unit().coeff(&k.0, &field.zero())))
        .filter(|(_, c)| !c.is_zero());
    let one = Vector::from_terms(one);
    let image = matrix.mul_vec(a.hopf.unit());
    report.push(Check::from_result(
        "unit",
        (image != one).then(|| witness(vec!["1"], format_vector(&names, &image), format_vector(&names, &one))),
    ));
    let counit = (0..n).find(|&i| {
        let mut e = field.zero();
        for (&k, c) in &cols[i] {
            if labels[k].1.is_empty() {
                e += &(c * &h.c.counit_table()[labels[k].0]);
            }
        }
        e != a.hopf.counit_table()[i]
    });
    report.push(Check::from_result(
        "counit-preserving",
        counit.map(|i| witness(vec![a.hopf.names()[i].clone()], "counit changes".into(), "preserved".into())),
    ));
    Ok(PsiPrime { matrix, report })
}

/// The Hopf pairing `H(J, V) x A(C, W) -> k` induced by the canonical
/// pairing of `J ⋉ T(V)` with `C ⋉ T_c(W)`.
#[derive(Clone, Debug)]
pub struct HaPairing {
    pub h: HopfSuperAlgebra,
    /// Rows indexed by the basis of `H(J, V)`, columns by that of `A(C, W)`.
    pub matrix: Matrix,
    pub report: Report,
}

/// `p` must be the pair associated with the source of `a`.
pub fn pair_h_a(p: &Presentation<FiniteJ>, a: &AResult) -> Result<HaPairing> {
    let h = build_h(p)?;
    let keys = pair_basis(p);
    if keys.len() != a.dim() {
        return Err(Error::Dimension(format!(
            "H(J, V) has dimension {} but A(C, W) has {}",
            keys.len(),
            a.dim()
        )));
    }
    let field = h.field();
    let mut matrix = Matrix::zeros(field, keys.len(), a.dim());
    for (i, (s, j)) in keys.iter().enumerate() {
        for (k, z) in a.embedding.iter().enumerate() {
            if let Some(c) = z.get(&(*j, s.clone())) {
                matrix.set(i, k, c.clone());
            }
        }
    }
    let mut report = verify_hopf_pairing(&h, &a.hopf, &matrix);
    report.push(pairing_nondegenerate(&matrix));
    // h -> <h, -> identifies H(J, V) with the dual of A(C, W)
    let da = dual(&a.hopf);
    let iso = matrix.transpose();
    report.extend_prefixed("dual-", is_hopf_isomorphism(&h, &da, &iso));
    Ok(HaPairing { h, matrix, report })
}

/// The Hopf map `A(f, g): A(C_1, W_1) -> A(C_2, W_2)` induced by
/// `f (x) T(g)` on `C (x) T(W)`. Only the truncation to degrees
/// `<= dim W_1` of the source is stored, so `dim W_2 <= dim W_1` is required.
pub fn build_a_morphism(
    src: &HcpData,
    a1: &AResult,
    tgt: &HcpData,
    a2: &AResult,
    f: &Matrix,
    g: &Matrix,
) -> Result<Matrix> {
    if tgt.dim_w() > src.dim_w() {
        return Err(Error::Dimension(format!(
            "A(f, g) needs dim W_2 = {} <= dim W_1 = {}",
            tgt.dim_w(),
            src.dim_w()
        )));
    }
    let field = src.field();
    let index: BTreeMap<&GradedKey, usize> = a2.labels.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let gs = GradedPairs::new(tgt);
    let mut cols = Vec::with_capacity(a1.dim());
    for z in &a1.embedding {
        let mut image = GradedVec::new();
        for ((c, w), x) in z {
            // g applied letter by letter
            let mut words: SparseVec<Word> = SparseVec::singleton(Vec::new(), x.clone());
            for &l in w {
                let mut next = SparseVec::new();
                for (u, a) in &words {
                    for (&k, b) in &g.column(l) {
                        let mut v = u.clone();
                        v.push(k);
                        next.add_term(v, a * b);
                    }
                }
                words = next;
            }
            for (&c2, a) in &f.column(*c) {
                for (u, b) in &words {
                    image.add_term((c2, u.clone()), a * b);
                }
            }
        }
        // A(C_2, W_2) is determined by degrees <= dim W_2
        image.retain(|k, _| k.1.len() <= tgt.dim_w());
        let v = Vector::from_terms(image.iter().filter_map(|(k, c)| index.get(k).map(|&i| (i, c.clone()))));
        let mut residual = image.clone();
        for (&i, c) in &v {
            residual.add_scaled(&a2.embedding[i], &-c);
        }
        if !residual.is_zero() {
            return Err(restriction_error("A(f, g)", &gs, &residual));
        }
        cols.push(v);
    }
    Ok(Matrix::from_columns(field, a2.dim(), &cols))
}
