use super::{HopfSuperAlgebra, Tensor2};
use crate::error::{Error, Result};
use crate::report::{format_tensor, format_vector};
use crate::superlin::{Echelon, Matrix, SuperSpace, Vector};

/// The linear dual with the dual basis; every structure map is transposed.
pub fn dual(h: &HopfSuperAlgebra) -> HopfSuperAlgebra {
    let n = h.dim();
    let mut mult = vec![vec![Vector::new(); n]; n];
    let mut comult = vec![Tensor2::new(); n];
    let mut antipode = vec![Vector::new(); n];
    for k in 0..n {
        for (&(i, j), c) in h.comul_basis(k) {
            mult[i][j].add_term(k, c.clone());
        }
        for (&i, c) in &h.antipode_table()[k] {
            antipode[i].add_term(k, c.clone());
        }
    }
    for i in 0..n {
        for j in 0..n {
            for (&k, c) in h.mul_basis(i, j) {
                comult[k].add_term((i, j), c.clone());
            }
        }
    }
    let unit = Vector::from_terms(h.counit_table().iter().cloned().enumerate());
    let zero = h.field().zero();
    let counit = (0..n).map(|i| h.unit().coeff(&i, &zero)).collect();
    HopfSuperAlgebra::new(h.field(), h.space().dual(), mult, unit, comult, counit, Some(antipode))
        .expect("transposed tables have the right shape")
}

fn label(h: &HopfSuperAlgebra, v: &Vector) -> String {
    if v.len() == 1 {
        let (&i, c) = v.first().unwrap();
        if c.is_one() {
            return h.names()[i].clone();
        }
    }
    format_vector(h.names(), v)
}

fn tensor_coords(e: &Echelon, t: &Tensor2) -> Option<Tensor2> {
    let mut rights: std::collections::BTreeMap<usize, Vector> = Default::default();
    for (&(a, b), c) in t {
        rights.entry(a).or_default().add_term(b, c.clone());
    }
    let mut lefts: std::collections::BTreeMap<usize, Vector> = Default::default();
    for (a, r) in rights {
        let co = e.coordinates(&r)?;
        for (&m, c) in &co {
            lefts.entry(m).or_default().add_term(a, c.clone());
        }
    }
    let mut out = Tensor2::new();
    for (m, l) in lefts {
        for (&k, c) in &e.coordinates(&l)? {
            out.add_term((k, m), c.clone());
        }
    }
    Some(out)
}

/// The Hopf sub-superalgebra spanned by `basis`, which must be linearly
/// independent, homogeneous and closed under all structure maps.
pub fn sub_hopf(h: &HopfSuperAlgebra, basis: &[Vector]) -> Result<HopfSuperAlgebra> {
    let mut e = Echelon::new(h.field());
    let mut space = Vec::new();
    for b in basis {
        if !e.insert(b.clone()) {
            return Err(Error::InvalidStructure("subspace basis is linearly dependent".into()));
        }
        let p = h
            .parity_of(b)
            .ok_or_else(|| Error::InvalidStructure(format!("{} is not homogeneous", label(h, b))))?;
        space.push((label(h, b), p));
    }
    let fail = |what: &str, v: String| Error::RestrictionFailure(format!("{what}: {v}"));
    let coords = |v: &Vector, what: &str| {
        e.coordinates(v)
            .ok_or_else(|| fail(what, format_vector(h.names(), v)))
    };
    let m = basis.len();
    let mut mult = vec![vec![Vector::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            mult[i][j] = coords(&h.mul(&basis[i], &basis[j]), "product")?;
        }
    }
    let unit = coords(h.unit(), "unit")?;
    let mut comult = Vec::with_capacity(m);
    let mut antipode = Vec::with_capacity(m);
    let mut counit = Vec::with_capacity(m);
    for b in basis {
        let d = h.comul(b);
        comult.push(
            tensor_coords(&e, &d).ok_or_else(|| fail("coproduct", format_tensor(h.names(), h.names(), &d)))?,
        );
        antipode.push(coords(&h.antipode_of(b), "antipode")?);
        counit.push(h.counit_of(b));
    }
    HopfSuperAlgebra::new(h.field(), SuperSpace::new(space)?, mult, unit, comult, counit, Some(antipode))
}

/// A quotient Hopf superalgebra together with the quotient map.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub hopf: HopfSuperAlgebra,
    /// Matrix of the quotient map `H -> H/I`.
    pub map: Matrix,
    /// For each quotient basis element, the basis element of `H` it is the class of.
    pub representatives: Vec<usize>,
}

/// `H / I` for a Hopf ideal `I` given by a spanning set. The quotient basis
/// consists of the classes of the basis elements of `H` that are not pivots
/// of the echelon form of `I`.
pub fn quotient_hopf(h: &HopfSuperAlgebra, ideal: &[Vector]) -> Result<Quotient> {
    let field = h.field();
    let mut e = Echelon::new(field);
    for v in ideal {
        e.insert(v.clone());
    }
    let pivots: std::collections::BTreeSet<usize> = e.pivot_columns().into_iter().collect();
    let reps: Vec<usize> = (0..h.dim()).filter(|j| !pivots.contains(j)).collect();
    let mut pos = vec![usize::MAX; h.dim()];
    for (k, &j) in reps.iter().enumerate() {
        pos[j] = k;
    }
    let q = |v: &Vector| e.reduce(v).0.map_keys(|&j| pos[j]);
    let ideal_basis: Vec<Vector> = e.reduced_rows().into_values().collect();
    let fail = |what: &str, v: &Vector| {
        Error::RestrictionFailure(format!("not a Hopf ideal ({what}) at {}", format_vector(h.names(), v)))
    };
    for i in &ideal_basis {
        for k in 0..h.dim() {
            let b = h.basis(k);
            if !q(&h.mul(&b, i)).is_zero() || !q(&h.mul(i, &b)).is_zero() {
                return Err(fail("two-sided ideal", i));
            }
        }
        if !h.counit_of(i).is_zero() {
            return Err(fail("counit", i));
        }
        if !q(&h.antipode_of(i)).is_zero() {
            return Err(fail("antipode", i));
        }
        let d = h.comul(i);
        let mut qq = Tensor2::new();
        for (&(a, b), c) in &d {
            let la = q(&h.basis(a));
            let lb = q(&h.basis(b));
            for (&x, s) in &la {
                for (&y, t) in &lb {
                    qq.add_term((x, y), &(c * s) * t);
                }
            }
        }
        if !qq.is_zero() {
            return Err(fail("coideal", i));
        }
    }
    let m = reps.len();
    let mut mult = vec![vec![Vector::new(); m]; m];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            mult[a][b] = q(h.mul_basis(ra, rb));
        }
    }
    let mut comult = Vec::with_capacity(m);
    let mut antipode = Vec::with_capacity(m);
    let mut counit = Vec::with_capacity(m);
    for &r in &reps {
        let mut t = Tensor2::new();
        for (&(a, b), c) in h.comul_basis(r) {
            let la = q(&h.basis(a));
            let lb = q(&h.basis(b));
            for (&x, s) in &la {
                for (&y, u) in &lb {
                    t.add_term((x, y), &(c * s) * u);
                }
            }
        }
        comult.push(t);
        antipode.push(q(&h.antipode_table()[r]));
        counit.push(h.counit_table()[r].clone());
    }
    let space = SuperSpace::new(reps.iter().map(|&r| (h.names()[r].clone(), h.parity(r))).collect())?;
    let hopf = HopfSuperAlgebra::new(field, space, mult, q(h.unit()), comult, counit, Some(antipode))?;
    let cols: Vec<Vector> = (0..h.dim()).map(|j| q(&h.basis(j))).collect();
    Ok(Quotient {
        hopf,
        map: Matrix::from_columns(field, m, &cols),
        representatives: reps,
    })
}
