use super::build::{build_h, pair_basis};
use super::morphism::{is_dhcp_isomorphism, DhcpMorphism};
use crate::error::{Error, Result};
use crate::hopfcore::{adjoint_action, odd_primitives, underline, HopfSuperAlgebra};
use crate::report::{format_vector, Report};
use crate::rewrite::{CocommutativeHopf, FiniteJ, Presentation};
use crate::superlin::{Echelon, Matrix, Vector};

/// The pair of a super-cocommutative Hopf superalgebra together with the
/// coordinates (in `H`) of the chosen bases of `J` and `V`.
#[derive(Clone, Debug)]
pub struct RecoveredPair {
    pub pair: Presentation<FiniteJ>,
    pub j_basis: Vec<Vector>,
    pub v_basis: Vec<Vector>,
}

/// `H` maps to `(underline H, V_H)`: the largest purely even Hopf subalgebra,
/// the odd primitives, the adjoint action and `[u, v] = uv + vu`.
pub fn recover_pair(h: &HopfSuperAlgebra) -> Result<RecoveredPair> {
    let (j, j_basis) = underline(h)?;
    let v_basis = odd_primitives(h)?;
    let action = adjoint_action(h, &j_basis, &v_basis)?;
    let mut e = Echelon::new(h.field());
    for v in &j_basis {
        e.insert(v.clone());
    }
    let mut bracket = Vec::with_capacity(v_basis.len());
    for u in &v_basis {
        let mut row = Vec::with_capacity(v_basis.len());
        for v in &v_basis {
            let b = h.mul(u, v).plus(&h.mul(v, u));
            row.push(e.coordinates(&b).ok_or_else(|| {
                Error::RestrictionFailure(format!("[u, v] = {} is not even", format_vector(h.names(), &b)))
            })?);
        }
        bracket.push(row);
    }
    let names = v_basis.iter().map(|v| format_vector(h.names(), v)).collect();
    let pair = Presentation::new(FiniteJ::new(j)?, names, action, bracket)?;
    Ok(RecoveredPair { pair, j_basis, v_basis })
}

/// Builds `H(J, V)`, recovers its pair and checks that the canonical maps
/// `a -> a ⊗ 1`, `v -> 1 ⊗ v` form an isomorphism of pairs.
pub fn roundtrip_pair(p: &Presentation<FiniteJ>) -> Result<(DhcpMorphism, Report)> {
    let h = build_h(p)?;
    let rec = recover_pair(&h)?;
    let field = p.j().field();
    let coords = |basis: &[Vector], v: &Vector| {
        let mut e = Echelon::new(field);
        for b in basis {
            e.insert(b.clone());
        }
        e.coordinates(v).ok_or_else(|| Error::RestrictionFailure(format!("{v:?} outside the recovered basis")))
    };
    let keys = pair_basis(p);
    let dj = p.j().hopf().dim();
    let unit = p.j().unit();
    let mut f_cols = Vec::with_capacity(dj);
    for a in 0..dj {
        let i = keys.iter().position(|k| k.0.is_empty() && k.1 == a).expect("J sits in degree zero");
        f_cols.push(coords(&rec.j_basis, &Vector::singleton(i, field.one()))?);
    }
    let mut g_cols = Vec::with_capacity(p.dim_x());
    for x in 0..p.dim_x() {
        let mut v = Vector::new();
        for (u, c) in &unit {
            let i = keys.iter().position(|k| k.0 == [x] && k.1 == *u).expect("generator in degree one");
            v.add_term(i, c.clone());
        }
        g_cols.push(coords(&rec.v_basis, &v)?);
    }
    let m = DhcpMorphism {
        f: Matrix::from_columns(field, rec.j_basis.len(), &f_cols),
        g: Matrix::from_columns(field, rec.v_basis.len(), &g_cols),
    };
    let report = is_dhcp_isomorphism(p, &rec.pair, &m);
    Ok((m, report))
}
