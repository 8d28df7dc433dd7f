use std::fmt;

use crate::error::{Error, Result};
use crate::hopfcore::{is_purely_even, verify_super_cocommutative, HopfSuperAlgebra};
use crate::report::format_combination;
use crate::superlin::{Field, Scalar, SparseVec};

/// An ordinary cocommutative Hopf algebra playing the role of `J`.
///
/// `J` may be infinite-dimensional, so it is described by basis keys. The
/// right action on `V` is only specified on a generating family; every basis
/// key factors as a product of generators through [`factor`](Self::factor).
pub trait CocommutativeHopf {
    type Key: Clone + Ord + fmt::Debug;

    fn field(&self) -> Field;
    fn unit(&self) -> SparseVec<Self::Key>;
    /// The basis key equal to the unit, when there is one.
    fn unit_key(&self) -> Option<Self::Key>;
    fn mul_keys(&self, a: &Self::Key, b: &Self::Key) -> SparseVec<Self::Key>;
    fn comul_key(&self, a: &Self::Key) -> SparseVec<(Self::Key, Self::Key)>;
    fn counit_key(&self, a: &Self::Key) -> Scalar;
    fn antipode_key(&self, a: &Self::Key) -> SparseVec<Self::Key>;
    fn key_name(&self, a: &Self::Key) -> String;
    /// Names of the generators on which actions are specified.
    fn generator_names(&self) -> Vec<String>;
    fn generator_key(&self, g: usize) -> Self::Key;
    /// Generator indices whose product is `a`, left to right.
    fn factor(&self, a: &Self::Key) -> Vec<usize>;
    /// Basis keys of filtration degree at most `d`; the whole basis when
    /// finite-dimensional.
    fn filtered_basis(&self, d: usize) -> Vec<Self::Key>;
    /// Filtration degree of a basis key; zero when finite-dimensional.
    fn key_degree(&self, a: &Self::Key) -> usize;
    /// `Some(dim)` for finite-dimensional `J`.
    fn finite_dim(&self) -> Option<usize>;

    /// Basis keys used when a condition quantifies over all of `J`: the whole
    /// basis when finite, the keys of degree at most two otherwise.
    fn sample_basis(&self) -> Vec<Self::Key> {
        self.filtered_basis(2)
    }

    fn key(&self, a: Self::Key) -> SparseVec<Self::Key> {
        SparseVec::singleton(a, self.field().one())
    }

    fn mul(&self, a: &SparseVec<Self::Key>, b: &SparseVec<Self::Key>) -> SparseVec<Self::Key> {
        let mut out = SparseVec::new();
        for (x, c) in a {
            for (y, d) in b {
                out.add_scaled(&self.mul_keys(x, y), &(c * d));
            }
        }
        out
    }

    fn comul(&self, a: &SparseVec<Self::Key>) -> SparseVec<(Self::Key, Self::Key)> {
        a.apply(|k| self.comul_key(k))
    }

    fn counit(&self, a: &SparseVec<Self::Key>) -> Scalar {
        let mut s = self.field().zero();
        for (k, c) in a {
            s += &(c * &self.counit_key(k));
        }
        s
    }

    fn antipode(&self, a: &SparseVec<Self::Key>) -> SparseVec<Self::Key> {
        a.apply(|k| self.antipode_key(k))
    }

    fn is_primitive(&self, a: &SparseVec<Self::Key>) -> bool {
        let mut t = self.comul(a);
        let one = self.unit();
        for (k, c) in a {
            for (u, d) in &one {
                let cd = c * d;
                t.add_term((k.clone(), u.clone()), -&cd);
                t.add_term((u.clone(), k.clone()), -cd);
            }
        }
        t.is_zero()
    }

    fn format(&self, a: &SparseVec<Self::Key>) -> String {
        format_combination(a, |k| self.key_name(k))
    }
}

/// A finite-dimensional, purely even, cocommutative Hopf algebra. The action
/// is specified on every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteJ {
    hopf: HopfSuperAlgebra,
    unit_key: Option<usize>,
}

impl FiniteJ {
    pub fn new(hopf: HopfSuperAlgebra) -> Result<FiniteJ> {
        if !is_purely_even(&hopf) {
            return Err(Error::InvalidStructure("J must be purely even".into()));
        }
        let c = verify_super_cocommutative(&hopf);
        if !c.passed {
            return Err(crate::hopfcore::not_cocommutative(&c));
        }
        let u = hopf.unit();
        let unit_key = match u.first() {
            Some((&k, c)) if u.len() == 1 && c.is_one() => Some(k),
            _ => None,
        };
        Ok(FiniteJ { hopf, unit_key })
    }

    pub fn hopf(&self) -> &HopfSuperAlgebra {
        &self.hopf
    }
}

impl CocommutativeHopf for FiniteJ {
    type Key = usize;

    fn field(&self) -> Field {
        self.hopf.field()
    }

    fn unit(&self) -> SparseVec<usize> {
        self.hopf.unit().clone()
    }

    fn unit_key(&self) -> Option<usize> {
        self.unit_key
    }

    fn mul_keys(&self, a: &usize, b: &usize) -> SparseVec<usize> {
        self.hopf.mul_basis(*a, *b).clone()
    }

    fn comul_key(&self, a: &usize) -> SparseVec<(usize, usize)> {
        self.hopf.comul_basis(*a).clone()
    }

    fn counit_key(&self, a: &usize) -> Scalar {
        self.hopf.counit_table()[*a].clone()
    }

    fn antipode_key(&self, a: &usize) -> SparseVec<usize> {
        self.hopf.antipode_table()[*a].clone()
    }

    fn key_name(&self, a: &usize) -> String {
        self.hopf.names()[*a].clone()
    }

    fn generator_names(&self) -> Vec<String> {
        self.hopf.names().to_vec()
    }

    fn generator_key(&self, g: usize) -> usize {
        g
    }

    fn factor(&self, a: &usize) -> Vec<usize> {
        vec![*a]
    }

    fn filtered_basis(&self, _d: usize) -> Vec<usize> {
        (0..self.hopf.dim()).collect()
    }

    fn key_degree(&self, _a: &usize) -> usize {
        0
    }

    fn finite_dim(&self) -> Option<usize> {
        Some(self.hopf.dim())
    }
}
