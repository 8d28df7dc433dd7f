use std::cell::RefCell;
use std::collections::HashMap;

use super::hopf::CocommutativeHopf;
use crate::error::{Error, Result};
use crate::hopfcore::{check_lie_super, LieTable};
use crate::superlin::{Field, Scalar, SparseVec, Vector};

/// A PBW monomial: generator indices in non-decreasing order.
pub type Monomial = Vec<usize>;

/// The universal enveloping algebra `U(g)` of an ordinary Lie algebra, on the
/// PBW basis of ordered monomials. Generators are the Lie basis.
#[derive(Clone, Debug)]
pub struct Enveloping {
    lie: LieTable,
    cache: RefCell<HashMap<Vec<usize>, SparseVec<Monomial>>>,
}

impl Enveloping {
    pub fn new(lie: LieTable) -> Result<Enveloping> {
        if lie.parities.iter().any(|&p| p != 0) {
            return Err(Error::InvalidStructure("the Lie algebra of U(g) must be purely even".into()));
        }
        if let Some(c) = check_lie_super(&lie).first_failure() {
            let w = c.witness.as_ref().expect("failed check has a witness");
            return Err(Error::LieAxiom(format!("{} at ({}): {} vs {}", c.name, w.at.join(", "), w.lhs, w.rhs)));
        }
        Ok(Enveloping {
            lie,
            cache: RefCell::new(HashMap::new()),
        })
    }

    /// The enveloping algebra of the abelian Lie algebra on `names`.
    pub fn abelian(field: Field, names: &[&str]) -> Result<Enveloping> {
        let n = names.len();
        Enveloping::new(LieTable {
            field,
            names: names.iter().map(|s| s.to_string()).collect(),
            parities: vec![0; n],
            bracket: vec![vec![Vector::new(); n]; n],
        })
    }

    pub fn lie(&self) -> &LieTable {
        &self.lie
    }

    /// Embeds a Lie algebra element as a degree-one element of `U(g)`.
    pub fn embed(&self, v: &Vector) -> SparseVec<Monomial> {
        v.map_keys(|&i| vec![i])
    }

    /// Rewrites an arbitrary word in the generators into the PBW basis,
    /// using `ba = ab - [a,b]` at the first descent.
    pub fn straighten(&self, word: &[usize]) -> SparseVec<Monomial> {
        let one = self.lie.field.one();
        let Some(i) = word.windows(2).position(|w| w[0] > w[1]) else {
            return SparseVec::singleton(word.to_vec(), one);
        };
        if let Some(hit) = self.cache.borrow().get(word) {
            return hit.clone();
        }
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let mut out = self.straighten(&swapped);
        for (&k, c) in &self.lie.bracket[word[i]][word[i + 1]] {
            let mut w = word[..i].to_vec();
            w.push(k);
            w.extend_from_slice(&word[i + 2..]);
            out.add_scaled(&self.straighten(&w), c);
        }
        self.cache.borrow_mut().insert(word.to_vec(), out.clone());
        out
    }

    /// All PBW monomials of degree at most `d`.
    pub fn monomials_up_to(&self, d: usize) -> Vec<Monomial> {
        let n = self.lie.dim();
        let mut out = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &layer {
                let start = m.last().copied().unwrap_or(0);
                for g in start..n {
                    let mut w: Vec<usize> = m.clone();
                    w.push(g);
                    next.push(w);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl CocommutativeHopf for Enveloping {
    type Key = Monomial;

    fn field(&self) -> Field {
        self.lie.field
    }

    fn unit(&self) -> SparseVec<Monomial> {
        SparseVec::singleton(Vec::new(), self.lie.field.one())
    }

    fn unit_key(&self) -> Option<Monomial> {
        Some(Vec::new())
    }

    fn mul_keys(&self, a: &Monomial, b: &Monomial) -> SparseVec<Monomial> {
        let mut w = a.clone();
        w.extend_from_slice(b);
        self.straighten(&w)
    }

    /// Sum over splittings of the monomial into two sub-monomials; every
    /// generator is primitive.
    fn comul_key(&self, a: &Monomial) -> SparseVec<(Monomial, Monomial)> {
        let mut out = SparseVec::new();
        let one = self.lie.field.one();
        for mask in 0u64..(1u64 << a.len()) {
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (i, &g) in a.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    l.push(g);
                } else {
                    r.push(g);
                }
            }
            out.add_term((l, r), one.clone());
        }
        out
    }

    fn counit_key(&self, a: &Monomial) -> Scalar {
        if a.is_empty() {
            self.lie.field.one()
        } else {
            self.lie.field.zero()
        }
    }

    fn antipode_key(&self, a: &Monomial) -> SparseVec<Monomial> {
        let rev: Vec<usize> = a.iter().rev().copied().collect();
        self.straighten(&rev).scaled(&self.lie.field.one().signed(a.len() % 2 == 1))
    }

    fn key_name(&self, a: &Monomial) -> String {
        if a.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < a.len() {
            let j = i + a[i..].iter().take_while(|&&g| g == a[i]).count();
            let name = &self.lie.names[a[i]];
            parts.push(if j - i == 1 { name.clone() } else { format!("{name}^{}", j - i) });
            i = j;
        }
        parts.join("·")
    }

    fn generator_names(&self) -> Vec<String> {
        self.lie.names.clone()
    }

    fn generator_key(&self, g: usize) -> Monomial {
        vec![g]
    }

    fn factor(&self, a: &Monomial) -> Vec<usize> {
        a.clone()
    }

    fn filtered_basis(&self, d: usize) -> Vec<Monomial> {
        self.monomials_up_to(d)
    }

    fn key_degree(&self, a: &Monomial) -> usize {
        a.len()
    }

    fn finite_dim(&self) -> Option<usize> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> Enveloping {
        // e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
        let f = Field::Rational;
        let v = |t: &[(usize, i64)]| Vector::from_terms(t.iter().map(|&(k, c)| (k, f.from_i64(c))));
        let mut b = vec![vec![Vector::new(); 3]; 3];
        b[1][0] = v(&[(0, 2)]);
        b[0][1] = v(&[(0, -2)]);
        b[1][2] = v(&[(2, -2)]);
        b[2][1] = v(&[(2, 2)]);
        b[0][2] = v(&[(1, 1)]);
        b[2][0] = v(&[(1, -1)]);
        Enveloping::new(LieTable {
            field: f,
            names: vec!["e".into(), "h".into(), "f".into()],
            parities: vec![0; 3],
            bracket: b,
        })
        .unwrap()
    }

    #[test]
    fn straightening_in_sl2() {
        let u = sl2();
        let f = Field::Rational;
        // f e = e f - h
        let r = u.straighten(&[2, 0]);
        let expect = SparseVec::from_terms([(vec![0, 2], f.one()), (vec![1], f.from_i64(-1))]);
        assert_eq!(r, expect);
        assert_eq!(u.key_name(&vec![0, 0, 1]), "e^2·h");
        assert_eq!(u.monomials_up_to(2).len(), 1 + 3 + 6);
    }

    #[test]
    fn antipode_of_degree_two() {
        let u = sl2();
        let f = Field::Rational;
        // S(e f) = f e = e f - h
        let s = u.antipode_key(&vec![0, 2]);
        let expect = SparseVec::from_terms([(vec![0, 2], f.one()), (vec![1], f.from_i64(-1))]);
        assert_eq!(s, expect);
    }
}
