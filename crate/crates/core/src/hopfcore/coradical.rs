use super::{HopfSuperAlgebra, Tensor2};
use crate::error::{Error, Result};
use crate::report::{witness, Check};
use crate::superlin::{koszul, Echelon, Field, Matrix, Scalar, SuperSpace, Vector};

/// The algebra part of a structure: product table and unit.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    pub field: Field,
    pub space: SuperSpace,
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
}

/// The coalgebra part of a structure: coproduct table and counit.
#[derive(Clone, Debug)]
pub struct SuperCoalgebra {
    pub field: Field,
    pub space: SuperSpace,
    pub comult: Vec<Tensor2>,
    pub counit: Vec<Scalar>,
}

impl HopfSuperAlgebra {
    pub fn algebra(&self) -> SuperAlgebra {
        SuperAlgebra {
            field: self.field(),
            space: self.space().clone(),
            mult: self.mult_table().to_vec(),
            unit: self.unit().clone(),
        }
    }

    pub fn coalgebra(&self) -> SuperCoalgebra {
        SuperCoalgebra {
            field: self.field(),
            space: self.space().clone(),
            comult: self.comult_table().to_vec(),
            counit: self.counit_table().to_vec(),
        }
    }
}

impl SuperAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
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

    pub fn is_super_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = self
                    .field
                    .one()
                    .signed(koszul(self.space.parity(i), self.space.parity(j)));
                self.mult[i][j] == self.mult[j][i].scaled(&s)
            })
        })
    }
}

impl SuperCoalgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The dual algebra `C*` on the dual basis.
    pub fn dual_algebra(&self) -> SuperAlgebra {
        let n = self.dim();
        let mut mult = vec![vec![Vector::new(); n]; n];
        for k in 0..n {
            for (&(i, j), c) in &self.comult[k] {
                mult[i][j].add_term(k, c.clone());
            }
        }
        SuperAlgebra {
            field: self.field,
            space: self.space.dual(),
            mult,
            unit: Vector::from_terms(self.counit.iter().cloned().enumerate()),
        }
    }
}

fn power(alg: &SuperAlgebra, x: &Vector, mut e: u64) -> Vector {
    let mut result = alg.unit.clone();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = alg.mul(&result, &base);
        }
        base = alg.mul(&base, &base);
        e >>= 1;
    }
    result
}

/// Basis of the Jacobson radical.
///
/// Super-commutative algebras in characteristic `p` use the kernel of the
/// (linear) iterated Frobenius `y -> y_0^{p^k}` with `p^k >= dim`; every
/// other case uses the kernel of the trace form `(x, y) -> tr(L_{xy})`,
/// which is exact in characteristic 0 and for `p > dim`.
pub fn jacobson_radical(alg: &SuperAlgebra) -> Result<Vec<Vector>> {
    let n = alg.dim();
    let p = alg.field.characteristic();
    if p > 0 && alg.is_super_commutative() {
        let mut q = p;
        while (q as usize) < n {
            q *= p;
        }
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                if alg.space.parity(j) == 1 {
                    Vector::new()
                } else {
                    power(alg, &Vector::singleton(j, alg.field.one()), q)
                }
            })
            .collect();
        return Ok(Matrix::from_columns(alg.field, n, &cols).kernel());
    }
    if !alg.field.allows_division_up_to(n) {
        return Err(Error::UnsupportedCharacteristic {
            p,
            bound: n,
            what: "the Jacobson radical of a non-super-commutative algebra".into(),
        });
    }
    let traces: Vec<Scalar> = (0..n)
        .map(|k| {
            let mut t = alg.field.zero();
            for m in 0..n {
                t += &alg.mult[k][m].coeff(&m, &alg.field.zero());
            }
            t
        })
        .collect();
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            let mut row = Vector::new();
            for j in 0..n {
                let mut s = alg.field.zero();
                for (&k, c) in &alg.mult[i][j] {
                    s += &(c * &traces[k]);
                }
                row.add_term(j, s);
            }
            row
        })
        .collect();
    Ok(Matrix::from_rows(alg.field, n, rows).kernel())
}

/// Basis of `Corad C`, the annihilator of the radical of `C*`.
pub fn coradical(c: &SuperCoalgebra) -> Result<Vec<Vector>> {
    let rad = jacobson_radical(&c.dual_algebra())?;
    Ok(Matrix::from_rows(c.field, c.dim(), rad).kernel())
}

/// Whether the augmentation ideal of `C*` (functionals vanishing at `1`) is
/// nilpotent, i.e. whether `Corad C = k`. Valid in every characteristic.
fn augmentation_nilpotent(c: &SuperCoalgebra, one: &Vector) -> bool {
    let alg = c.dual_algebra();
    let n = c.dim();
    // f(1) = sum f_i one_i
    let functional = Matrix::from_rows(c.field, n, vec![one.clone()]);
    let ideal = functional.kernel();
    let mut power_basis = ideal.clone();
    for _ in 0..=n {
        if power_basis.is_empty() {
            return true;
        }
        let mut e = Echelon::new(c.field);
        for p in &power_basis {
            for m in &ideal {
                e.insert(alg.mul(p, m));
            }
        }
        let next: Vec<Vector> = e.reduced_rows().into_values().collect();
        if next.len() == power_basis.len() {
            return false;
        }
        power_basis = next;
    }
    power_basis.is_empty()
}

/// `Corad H = k`.
pub fn is_irreducible(h: &HopfSuperAlgebra) -> bool {
    augmentation_nilpotent(&h.coalgebra(), h.unit())
}

/// Jacobson radical of `H` (as an algebra) is zero.
pub fn is_semisimple_algebra(h: &HopfSuperAlgebra) -> Result<bool> {
    Ok(jacobson_radical(&h.algebra())?.is_empty())
}

pub fn is_purely_even(h: &HopfSuperAlgebra) -> bool {
    h.space().is_purely_even()
}

/// `Z_2 ⋉ C`: basis `i⊗c` indexed `i * dim C + c`, with
/// `Delta(i⊗c) = sum (i⊗c_1) ⊗ ((|c_1| + i)⊗c_2)`; an ordinary coalgebra.
pub fn smash_coproduct_z2(c: &SuperCoalgebra) -> SuperCoalgebra {
    let n = c.dim();
    let mut basis = Vec::with_capacity(2 * n);
    for i in 0..2 {
        for k in 0..n {
            basis.push((format!("{i}⊗{}", c.space.name(k)), 0));
        }
    }
    let mut comult = Vec::with_capacity(2 * n);
    let mut counit = Vec::with_capacity(2 * n);
    for i in 0..2usize {
        for k in 0..n {
            let mut t = Tensor2::new();
            for (&(a, b), s) in &c.comult[k] {
                let j = (c.space.parity(a) as usize + i) % 2;
                t.add_term((i * n + a, j * n + b), s.clone());
            }
            comult.push(t);
            counit.push(c.counit[k].clone());
        }
    }
    SuperCoalgebra {
        field: c.field,
        space: SuperSpace::new(basis).expect("distinct names"),
        comult,
        counit,
    }
}

/// `Corad(Z_2 ⋉ C) = Z_2 ⋉ Corad(C)`, compared by dimension and mutual
/// containment.
pub fn corad_smash_check(c: &SuperCoalgebra) -> Result<Check> {
    let n = c.dim();
    let corad = coradical(c)?;
    let mut lifted = Vec::new();
    for i in 0..2 {
        for v in &corad {
            lifted.push(v.map_keys(|&k| i * n + k));
        }
    }
    let smash = smash_coproduct_z2(c);
    let direct = coradical(&smash)?;
    let mut a = Echelon::new(c.field);
    for v in &lifted {
        a.insert(v.clone());
    }
    let mut b = Echelon::new(c.field);
    for v in &direct {
        b.insert(v.clone());
    }
    let ok = a.rank() == b.rank()
        && direct.iter().all(|v| a.contains(v))
        && lifted.iter().all(|v| b.contains(v));
    Ok(if ok {
        Check::pass("coradical-smash")
    } else {
        Check::fail(
            "coradical-smash",
            witness(
                vec!["dimension"],
                format!("Z2 ⋉ Corad C: {}", a.rank()),
                format!("Corad(Z2 ⋉ C): {}", b.rank()),
            ),
        )
    })
}
