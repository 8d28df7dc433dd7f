use super::dual::sub_hopf;
use super::{verify_super_cocommutative, HopfSuperAlgebra};
use crate::error::{Error, Result};
use crate::report::{format_vector, witness, Check, Report};
use crate::superlin::{koszul, Echelon, Field, Matrix, Vector};

/// Structure constants of a Lie superalgebra on a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable {
    pub field: Field,
    pub names: Vec<String>,
    pub parities: Vec<u8>,
    /// `bracket[i][j] = [e_i, e_j]`.
    pub bracket: Vec<Vec<Vector>>,
}

impl LieTable {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn bracket_of(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&i, x) in a {
            for (&j, y) in b {
                out.add_scaled(&self.bracket[i][j], &(x * y));
            }
        }
        out
    }

    fn fmt(&self, v: &Vector) -> String {
        format_vector(&self.names, v)
    }
}

/// Super-antisymmetry and the super-Jacobi identity on basis tuples.
pub fn check_lie_super(t: &LieTable) -> Report {
    let n = t.dim();
    let e = |i: usize| Vector::singleton(i, t.field.one());
    let mut r = Report::new();
    let mut anti = None;
    'a: for i in 0..n {
        for j in 0..n {
            let l = &t.bracket[i][j];
            let rr = t.bracket[j][i].scaled(&t.field.one().signed(!koszul(t.parities[i], t.parities[j])));
            let parity_ok = l.keys().all(|&k| t.parities[k] == (t.parities[i] + t.parities[j]) % 2);
            if *l != rr || !parity_ok {
                anti = Some(witness(vec![t.names[i].clone(), t.names[j].clone()], t.fmt(l), t.fmt(&rr)));
                break 'a;
            }
        }
    }
    r.push(Check::from_result("super-antisymmetry", anti));
    let mut jac = None;
    'j: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = t.bracket_of(&e(x), &t.bracket[y][z]);
                let mut rr = t.bracket_of(&t.bracket[x][y], &e(z));
                let s = t.field.one().signed(koszul(t.parities[x], t.parities[y]));
                rr.add_scaled(&t.bracket_of(&e(y), &t.bracket[x][z]), &s);
                if l != rr {
                    jac = Some(witness(
                        vec![t.names[x].clone(), t.names[y].clone(), t.names[z].clone()],
                        t.fmt(&l),
                        t.fmt(&rr),
                    ));
                    break 'j;
                }
            }
        }
    }
    r.push(Check::from_result("super-Jacobi", jac));
    r
}

/// The primitive elements with the super-commutator bracket.
#[derive(Clone, Debug)]
pub struct Primitives {
    /// Basis of `P(H)` in coordinates of `H`; each vector is homogeneous.
    pub basis: Vec<Vector>,
    pub table: LieTable,
}

impl Primitives {
    pub fn odd(&self) -> Vec<Vector> {
        self.basis
            .iter()
            .zip(&self.table.parities)
            .filter(|(_, &p)| p == 1)
            .map(|(v, _)| v.clone())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn label(h: &HopfSuperAlgebra, v: &Vector) -> String {
    if v.len() == 1 {
        let (&i, c) = v.first().unwrap();
        if c.is_one() {
            return h.names()[i].clone();
        }
    }
    format!("({})", format_vector(h.names(), v))
}

/// Kernel of `u -> Delta(u) - 1 (x) u - u (x) 1`.
pub fn primitive_space(h: &HopfSuperAlgebra) -> Vec<Vector> {
    let n = h.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| {
            let mut t = h.comul_basis(j).clone();
            for (&u, c) in h.unit() {
                t.add_term((u, j), -c);
                t.add_term((j, u), -c);
            }
            t.map_keys(|&(a, b)| a * n + b)
        })
        .collect();
    Matrix::from_columns(h.field(), n * n, &cols).kernel()
}

/// `P(H)` with its bracket table; the bracket is checked to close.
pub fn primitives(h: &HopfSuperAlgebra) -> Result<Primitives> {
    let basis = primitive_space(h);
    let mut e = Echelon::new(h.field());
    for b in &basis {
        e.insert(b.clone());
    }
    let parities: Vec<u8> = basis
        .iter()
        .map(|b| h.parity_of(b).expect("primitive basis vectors are homogeneous"))
        .collect();
    let m = basis.len();
    let mut bracket = vec![vec![Vector::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let mut c = h.mul(&basis[i], &basis[j]);
            let s = h.field().one().signed(!koszul(parities[i], parities[j]));
            c.add_scaled(&h.mul(&basis[j], &basis[i]), &s);
            bracket[i][j] = e.coordinates(&c).ok_or_else(|| {
                Error::NotHopf(format!(
                    "bracket of primitives {} and {} is not primitive",
                    label(h, &basis[i]),
                    label(h, &basis[j])
                ))
            })?;
        }
    }
    let names = basis.iter().map(|b| label(h, b)).collect();
    Ok(Primitives {
        basis,
        table: LieTable {
            field: h.field(),
            names,
            parities,
            bracket,
        },
    })
}

/// Odd primitives, in coordinates of `H`.
pub fn odd_primitives(h: &HopfSuperAlgebra) -> Result<Vec<Vector>> {
    Ok(primitives(h)?.odd())
}

/// `Delta^{-1}(H_0 (x) H_0)`, the largest purely even sub-coalgebra, as a
/// Hopf sub-superalgebra together with its basis in coordinates of `H`.
pub fn underline(h: &HopfSuperAlgebra) -> Result<(HopfSuperAlgebra, Vec<Vector>)> {
    let c = verify_super_cocommutative(h);
    if !c.passed {
        return Err(not_cocommutative(&c));
    }
    let n = h.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| {
            let mut t = h.comul_basis(j).clone();
            t.retain(|&(a, b), _| h.parity(a) == 1 || h.parity(b) == 1);
            t.map_keys(|&(a, b)| a * n + b)
        })
        .collect();
    let basis = Matrix::from_columns(h.field(), n * n, &cols).kernel();
    let sub = sub_hopf(h, &basis)?;
    Ok((sub, basis))
}

pub(crate) fn not_cocommutative(c: &Check) -> Error {
    let w = c.witness.as_ref().expect("failed check has a witness");
    Error::NotCocommutative(format!("at {}: {} vs {}", w.at.join(", "), w.lhs, w.rhs))
}

/// `v <| a = sum S(a_1) v a_2` for `a` in `algebra_basis` and `v` in
/// `module_basis` (both in coordinates of `H`); result `[v][a]` in
/// coordinates of `module_basis`.
pub fn adjoint_action(
    h: &HopfSuperAlgebra,
    algebra_basis: &[Vector],
    module_basis: &[Vector],
) -> Result<Vec<Vec<Vector>>> {
    let mut e = Echelon::new(h.field());
    for v in module_basis {
        e.insert(v.clone());
    }
    let mut out = Vec::with_capacity(module_basis.len());
    for v in module_basis {
        let mut row = Vec::with_capacity(algebra_basis.len());
        for a in algebra_basis {
            let d = h.comul(a);
            let mut r = Vector::new();
            for (&(x, y), c) in &d {
                let s = h.antipode_of(&h.basis(x));
                r.add_scaled(&h.mul(&h.mul(&s, v), &h.basis(y)), c);
            }
            row.push(e.coordinates(&r).ok_or_else(|| {
                Error::RestrictionFailure(format!(
                    "adjoint action leaves the module at {}",
                    format_vector(h.names(), &r)
                ))
            })?);
        }
        out.push(row);
    }
    Ok(out)
}
