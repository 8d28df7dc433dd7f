//! Finite-dimensional Hopf superalgebras given by structure constants.

mod coradical;
mod dual;
pub mod examples;
mod morphism;
mod pairing;
mod structure;
mod verify;

pub use coradical::{
    coradical, is_irreducible, is_purely_even, is_semisimple_algebra, jacobson_radical,
    corad_smash_check, smash_coproduct_z2, SuperAlgebra, SuperCoalgebra,
};
pub use dual::{dual, quotient_hopf, sub_hopf, Quotient};
pub use morphism::{check_conormal, check_hopf_morphism, is_hopf_isomorphism};
pub use pairing::{pairing_nondegenerate, verify_hopf_pairing};
pub use structure::{
    adjoint_action, check_lie_super, odd_primitives, primitives, underline, LieTable, Primitives,
};
pub(crate) use structure::not_cocommutative;
pub use verify::{check_antipode_antimorphism, verify_hopf, verify_super_cocommutative, verify_super_commutative};

use crate::error::{Error, Result};
use crate::superlin::{koszul, Echelon, Field, Matrix, Scalar, SparseVec, SuperSpace, Vector};

/// Element of `A (x) A`, indexed by pairs of basis positions.
pub type Tensor2 = SparseVec<(usize, usize)>;
/// Element of `A (x) A (x) A`.
pub type Tensor3 = SparseVec<(usize, usize, usize)>;

/// A Hopf superalgebra by structure constants on a finite basis.
///
/// Construction only checks shapes; the axioms themselves are checked by
/// [`verify_hopf`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfSuperAlgebra {
    field: Field,
    space: SuperSpace,
    mult: Vec<Vec<Vector>>,
    unit: Vector,
    comult: Vec<Tensor2>,
    counit: Vec<Scalar>,
    antipode: Vec<Vector>,
}

impl HopfSuperAlgebra {
    /// When `antipode` is `None` it is solved for as the convolution inverse
    /// of the identity.
    pub fn new(
        field: Field,
        space: SuperSpace,
        mult: Vec<Vec<Vector>>,
        unit: Vector,
        comult: Vec<Tensor2>,
        counit: Vec<Scalar>,
        antipode: Option<Vec<Vector>>,
    ) -> Result<HopfSuperAlgebra> {
        let n = space.dim();
        let in_range = |v: &Vector| v.keys().all(|&k| k < n);
        if mult.len() != n || mult.iter().any(|r| r.len() != n || !r.iter().all(in_range)) {
            return Err(Error::Dimension(format!("multiplication table must be {n}x{n}")));
        }
        if !in_range(&unit) {
            return Err(Error::Dimension("unit out of range".into()));
        }
        if comult.len() != n || comult.iter().any(|t| t.keys().any(|&(a, b)| a >= n || b >= n)) {
            return Err(Error::Dimension(format!("coproduct table must have {n} entries")));
        }
        if counit.len() != n {
            return Err(Error::Dimension(format!("counit must have {n} entries")));
        }
        if let Some(s) = &antipode {
            if s.len() != n || !s.iter().all(in_range) {
                return Err(Error::Dimension(format!("antipode must have {n} entries")));
            }
        }
        let mut h = HopfSuperAlgebra {
            field,
            space,
            mult,
            unit,
            comult,
            counit,
            antipode: Vec::new(),
        };
        h.antipode = match antipode {
            Some(s) => s,
            None => h.solve_antipode()?,
        };
        Ok(h)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn names(&self) -> &[String] {
        self.space.names()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.space.parity(i)
    }

    pub fn mult_table(&self) -> &[Vec<Vector>] {
        &self.mult
    }

    pub fn comult_table(&self) -> &[Tensor2] {
        &self.comult
    }

    pub fn counit_table(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_table(&self) -> &[Vector] {
        &self.antipode
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::singleton(i, self.field.one())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, x) in a {
            for (&j, y) in b {
                out.add_scaled(&self.mult[i][j], &(x * y));
            }
        }
        out
    }

    pub fn comul_basis(&self, i: usize) -> &Tensor2 {
        &self.comult[i]
    }

    pub fn comul(&self, a: &Vector) -> Tensor2 {
        a.apply(|&i| self.comult[i].clone())
    }

    pub fn counit_of(&self, a: &Vector) -> Scalar {
        let mut s = self.field.zero();
        for (&i, c) in a {
            s += &(c * &self.counit[i]);
        }
        s
    }

    pub fn antipode_of(&self, a: &Vector) -> Vector {
        a.apply(|&i| self.antipode[i].clone())
    }

    /// Product in `A (x) A`: `(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd`.
    pub fn tensor_mul(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), s) in x {
            for (&(c, d), t) in y {
                let coeff = (s * t).signed(koszul(self.parity(b), self.parity(c)));
                let ac = &self.mult[a][c];
                let bd = &self.mult[b][d];
                for (&p, u) in ac {
                    for (&q, v) in bd {
                        out.add_term((p, q), &coeff * &(u * v));
                    }
                }
            }
        }
        out
    }

    /// `(Delta (x) id)` applied to an element of `A (x) A`.
    pub fn comul_left(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b), c) in t {
            for (&(p, q), d) in &self.comult[a] {
                out.add_term((p, q, b), c * d);
            }
        }
        out
    }

    /// `(id (x) Delta)` applied to an element of `A (x) A`.
    pub fn comul_right(&self, t: &Tensor2) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b), c) in t {
            for (&(p, q), d) in &self.comult[b] {
                out.add_term((a, p, q), c * d);
            }
        }
        out
    }

    /// The Koszul flip on `A (x) A`.
    pub fn flip(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), c) in t {
            out.add_term((b, a), c.signed(koszul(self.parity(a), self.parity(b))));
        }
        out
    }

    /// Parity of a homogeneous element, `None` for mixed ones.
    pub fn parity_of(&self, v: &Vector) -> Option<u8> {
        self.space.homogeneous_parity(v)
    }

    /// Same structure over a renamed basis.
    pub fn with_names<F: Fn(&str) -> String>(&self, f: F) -> Result<HopfSuperAlgebra> {
        let mut h = self.clone();
        h.space = self.space.renamed(f)?;
        Ok(h)
    }

    /// Same structure with the basis names replaced, parities kept.
    pub fn with_basis_names(&self, names: Vec<String>) -> Result<HopfSuperAlgebra> {
        if names.len() != self.dim() {
            return Err(Error::Dimension("one name per basis element".into()));
        }
        let mut h = self.clone();
        h.space = SuperSpace::new(names.into_iter().zip(self.space.parities().iter().copied()).collect())?;
        Ok(h)
    }

    /// Solves `sum S(a_1) a_2 = eps(a) 1` for `S`, then checks the other side.
    fn solve_antipode(&self) -> Result<Vec<Vector>> {
        let n = self.dim();
        // unknown s[j][k] = coefficient of e_k in S(e_j), index j * n + k
        // equation for (i, m): sum over Delta(e_i) = sum c e_j (x) e_l of
        //   c * s[j][k] * (e_k e_l)[m] = eps(e_i) * unit[m]
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for i in 0..n {
            let mut eqs: Vec<Vector> = vec![Vector::new(); n];
            for (&(j, l), c) in &self.comult[i] {
                for k in 0..n {
                    for (&m, d) in &self.mult[k][l] {
                        eqs[m].add_term(j * n + k, c * d);
                    }
                }
            }
            for (m, eq) in eqs.into_iter().enumerate() {
                rows.push(eq);
                rhs.push(&self.counit[i] * &self.unit.coeff(&m, &self.field.zero()));
            }
        }
        let mat = Matrix::from_rows(self.field, n * n, rows);
        let b = Vector::from_terms(rhs.into_iter().enumerate());
        // Solve via columns of the system matrix.
        let mut e = Echelon::new(self.field);
        for c in mat.columns() {
            e.insert(c);
        }
        let sol = e
            .coordinates(&b)
            .ok_or_else(|| Error::NotHopf("no convolution inverse of the identity exists".into()))?;
        let mut s = vec![Vector::new(); n];
        for (&idx, c) in &sol {
            s[idx / n].add_term(idx % n, c.clone());
        }
        Ok(s)
    }
}
