use std::collections::HashMap;

use super::verify::verify_dhcp;
use crate::error::{Error, Result};
use crate::freegraded::{shuffle_coproduct, wedge_basis, word_antipode};
use crate::hopfcore::{HopfSuperAlgebra, Tensor2};
use crate::report::{format_vector, witness, Check};
use crate::rewrite::{CocommutativeHopf, FiniteJ, Letter, NormalElement, Presentation};
use crate::superlin::{Matrix, Scalar, SparseVec, SuperSpace, Vector};

/// Basis element `a x_S` of `H(J, V)`: an increasing `X` word and a `J` key.
pub type PairKey<K> = (Vec<usize>, K);

/// `H(J, V)` with structure maps computed on demand from normal forms.
#[derive(Clone, Debug)]
pub struct PairHopf<'a, J: CocommutativeHopf> {
    p: &'a Presentation<J>,
    x_space: SuperSpace,
}

impl<'a, J: CocommutativeHopf> PairHopf<'a, J> {
    /// Requires the pair conditions and resolvable overlaps.
    pub fn new(p: &'a Presentation<J>) -> Result<Self> {
        if let Some(c) = verify_dhcp(p).first_failure() {
            let w = c.witness.as_ref().expect("failed check has a witness");
            return Err(Error::InvalidPair(format!("{} fails at ({})", c.name, w.at.join(", "))));
        }
        let o = p.check_overlaps()?;
        if let Some(a) = o.failures().next() {
            return Err(Error::InvalidPair(format!(
                "overlap {} does not resolve: {}",
                a.word.join(" "),
                a.difference.clone().unwrap_or_default()
            )));
        }
        Ok(Self::unchecked(p))
    }

    /// Skips validation; products may then depend on the rewriting strategy.
    pub fn unchecked(p: &'a Presentation<J>) -> Self {
        let x_space = SuperSpace::odd(p.names().to_vec()).expect("generator names are distinct");
        PairHopf { p, x_space }
    }

    pub fn presentation(&self) -> &Presentation<J> {
        self.p
    }

    /// Basis keys of filtration degree at most `d`, where `a x_S` has degree
    /// `deg a + |S|`.
    pub fn basis_up_to(&self, d: usize) -> Vec<PairKey<J::Key>> {
        let mut out = Vec::new();
        for s in wedge_basis(self.p.dim_x()) {
            if s.len() > d {
                continue;
            }
            for a in self.p.j().filtered_basis(d - s.len()) {
                out.push((s.clone(), a));
            }
        }
        out
    }

    fn letters(k: &PairKey<J::Key>) -> Vec<Letter<J::Key>> {
        let mut l = vec![Letter::J(k.1.clone())];
        l.extend(k.0.iter().map(|&x| Letter::X(x)));
        l
    }

    pub fn element(&self, k: &PairKey<J::Key>) -> NormalElement<J::Key> {
        NormalElement {
            terms: SparseVec::singleton(k.clone(), self.p.j().field().one()),
        }
    }

    pub fn unit(&self) -> NormalElement<J::Key> {
        NormalElement {
            terms: self.p.j().unit().map_keys(|k| (Vec::new(), k.clone())),
        }
    }

    pub fn mul_keys(&self, a: &PairKey<J::Key>, b: &PairKey<J::Key>) -> Result<NormalElement<J::Key>> {
        let w = [Self::letters(a), Self::letters(b)].concat();
        self.p.normalize_word(&w)
    }

    pub fn mul(&self, a: &NormalElement<J::Key>, b: &NormalElement<J::Key>) -> Result<NormalElement<J::Key>> {
        let mut out = NormalElement::zero();
        for (k, c) in &a.terms {
            for (l, d) in &b.terms {
                out = out.plus(&self.mul_keys(k, l)?.scaled(&(c * d)));
            }
        }
        Ok(out)
    }

    /// `Delta(a x_S) = sum a_1 x_S1 ⊗ a_2 x_S2` over shuffles of `S`, which
    /// are again increasing words.
    pub fn comul_key(&self, k: &PairKey<J::Key>) -> SparseVec<(PairKey<J::Key>, PairKey<J::Key>)> {
        let j = self.p.j();
        let mut out = SparseVec::new();
        let shuffles = shuffle_coproduct(&self.x_space, j.field(), &k.0);
        for ((a1, a2), c) in &j.comul_key(&k.1) {
            for ((s1, s2), d) in &shuffles {
                out.add_term(((s1.clone(), a1.clone()), (s2.clone(), a2.clone())), c * d);
            }
        }
        out
    }

    pub fn counit_key(&self, k: &PairKey<J::Key>) -> Scalar {
        let j = self.p.j();
        if k.0.is_empty() {
            j.counit_key(&k.1)
        } else {
            j.field().zero()
        }
    }

    /// `S(a x_S) = S(x_S) S(a)`, normalized.
    pub fn antipode_key(&self, k: &PairKey<J::Key>) -> Result<NormalElement<J::Key>> {
        let j = self.p.j();
        let mut e = crate::rewrite::MixedElement::new();
        for (w, c) in &word_antipode(&self.x_space, j.field(), &k.0) {
            for (a, d) in &j.antipode_key(&k.1) {
                let mut letters: Vec<Letter<J::Key>> = w.iter().map(|&x| Letter::X(x)).collect();
                letters.push(Letter::J(a.clone()));
                e.add_scaled(&self.p.canonical(&letters), &(c * d));
            }
        }
        self.p.normalize(&e)
    }

    pub fn key_name(&self, k: &PairKey<J::Key>) -> String {
        let j = self.p.j();
        let jn = j.key_name(&k.1);
        if k.0.is_empty() {
            return jn;
        }
        let xn = k.0.iter().map(|&x| self.p.names()[x].clone()).collect::<Vec<_>>().join("·");
        if Some(&k.1) == j.unit_key().as_ref() {
            xn
        } else {
            format!("{jn}·{xn}")
        }
    }
}

/// Basis of `H(J, V)` for finite `J`: wedge words by length then
/// lexicographically, each followed by the whole basis of `J`.
pub fn pair_basis(p: &Presentation<FiniteJ>) -> Vec<PairKey<usize>> {
    let d = p.j().hopf().dim();
    wedge_basis(p.dim_x())
        .into_iter()
        .flat_map(|s| (0..d).map(move |a| (s.clone(), a)))
        .collect()
}

pub fn pair_basis_names(p: &Presentation<FiniteJ>) -> Vec<String> {
    let h = PairHopf::unchecked(p);
    pair_basis(p).iter().map(|k| h.key_name(k)).collect()
}

/// Materializes `H(J, V)` for finite-dimensional `J`. Fails when the pair
/// conditions fail or an overlap does not resolve.
pub fn build_h(p: &Presentation<FiniteJ>) -> Result<HopfSuperAlgebra> {
    let h = PairHopf::new(p)?;
    let basis = pair_basis(p);
    let index: HashMap<PairKey<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let vec_of = |n: &NormalElement<usize>| n.terms.map_keys(|k| index[k]);
    let n = basis.len();
    let mut mult = vec![vec![Vector::new(); n]; n];
    for (i, a) in basis.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            mult[i][k] = vec_of(&h.mul_keys(a, b)?);
        }
    }
    let comult: Vec<Tensor2> = basis
        .iter()
        .map(|k| h.comul_key(k).map_keys(|(a, b)| (index[a], index[b])))
        .collect();
    let counit = basis.iter().map(|k| h.counit_key(k)).collect();
    let antipode = basis.iter().map(|k| h.antipode_key(k).map(|s| vec_of(&s))).collect::<Result<Vec<_>>>()?;
    let space = SuperSpace::new(
        basis
            .iter()
            .map(|k| (h.key_name(k), (k.0.len() % 2) as u8))
            .collect(),
    )?;
    HopfSuperAlgebra::new(
        p.j().field(),
        space,
        mult,
        vec_of(&h.unit()),
        comult,
        counit,
        Some(antipode),
    )
}

/// Primitive elements of `H(J, V)` in filtration degree at most `d` must be
/// exactly the span of the `J` generators and `V`. Meaningful in
/// characteristic zero, where the primitives of `U(g)` are `g`.
pub fn primitive_spot_check<J: CocommutativeHopf>(h: &PairHopf<J>, d: usize) -> Result<Check> {
    let p = h.presentation();
    let j = p.j();
    let field = j.field();
    let basis = h.basis_up_to(d);
    let unit_key = j
        .unit_key()
        .ok_or_else(|| Error::InvalidStructure("the unit of J must be a basis element".into()))?;
    let one: PairKey<J::Key> = (Vec::new(), unit_key.clone());
    let mut pair_index: std::collections::BTreeMap<(PairKey<J::Key>, PairKey<J::Key>), usize> = Default::default();
    let mut cols = Vec::with_capacity(basis.len());
    for k in &basis {
        let mut t = h.comul_key(k);
        t.add_term((k.clone(), one.clone()), -field.one());
        t.add_term((one.clone(), k.clone()), -field.one());
        let mut col = Vector::new();
        for (pair, c) in &t {
            let next = pair_index.len();
            let i = *pair_index.entry(pair.clone()).or_insert(next);
            col.add_term(i, c.clone());
        }
        cols.push(col);
    }
    let kernel = Matrix::from_columns(field, pair_index.len(), &cols).kernel();
    let expected = basis
        .iter()
        .filter(|(s, a)| s.len() + j.key_degree(a) == 1)
        .count();
    let names: Vec<String> = basis.iter().map(|k| h.key_name(k)).collect();
    let extra = kernel.iter().find(|v| {
        v.keys()
            .any(|&i| basis[i].0.len() + j.key_degree(&basis[i].1) != 1)
    });
    Ok(Check::from_result(
        "filtered-primitives",
        (kernel.len() != expected || extra.is_some()).then(|| {
            witness(
                vec![format!("degree <= {d}")],
                extra.map_or_else(|| format!("dim {}", kernel.len()), |v| format_vector(&names, v)),
                format!("dim {expected}"),
            )
        }),
    ))
}
