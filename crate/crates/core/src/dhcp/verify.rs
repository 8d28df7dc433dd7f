use crate::error::{Error, Result};
use crate::hopfcore::{check_lie_super, LieTable};
use crate::report::{format_vector, witness, Check, Report, Witness};
use crate::rewrite::{CocommutativeHopf, Enveloping, Presentation};
use crate::superlin::{SparseVec, Vector};

/// Evaluates the module laws and the four pair conditions on basis tuples.
///
/// The self-bracket condition is quadratic in `v`. Away from characteristic 3
/// it follows from the basis checks of the symmetry and cyclic conditions; in
/// characteristic 3 it is additionally checked on every `x_i + x_j`.
pub fn verify_dhcp<J: CocommutativeHopf>(p: &Presentation<J>) -> Report {
    let j = p.j();
    let field = j.field();
    let n = p.dim_x();
    let xs: Vec<Vector> = (0..n).map(|x| p.x_vector(x)).collect();
    let vname = |v: &Vector| format_vector(p.names(), v);
    let sample = j.sample_basis();
    let mut r = Report::new();

    let mut module = None;
    'm: for (x, v) in xs.iter().enumerate() {
        let u = p.act_by(v, &j.unit());
        if u != *v {
            module = Some(witness(vec![p.names()[x].clone(), "1".to_string()], vname(&u), vname(v)));
            break;
        }
        for a in &sample {
            for b in &sample {
                let l = p.act(&p.act(v, a), b);
                let rr = p.act_by(v, &j.mul_keys(a, b));
                if l != rr {
                    module = Some(witness(
                        vec![p.names()[x].clone(), j.key_name(a), j.key_name(b)],
                        vname(&l),
                        vname(&rr),
                    ));
                    break 'm;
                }
            }
        }
    }
    r.push(Check::from_result("module-laws", module));

    let mut equi = None;
    'a: for u in 0..n {
        for v in 0..n {
            for a in &sample {
                let mut l = SparseVec::new();
                let mut rr = SparseVec::new();
                for ((a1, a2), c) in &j.comul_key(a) {
                    l.add_scaled(&p.bracket_of(&p.act(&xs[u], a1), &p.act(&xs[v], a2)), c);
                    let s = j.mul(&j.mul(&j.antipode_key(a1), p.bracket(u, v)), &j.key(a2.clone()));
                    rr.add_scaled(&s, c);
                }
                if l != rr {
                    equi = Some(witness(
                        vec![p.names()[u].clone(), p.names()[v].clone(), j.key_name(a)],
                        j.format(&l),
                        j.format(&rr),
                    ));
                    break 'a;
                }
            }
        }
    }
    r.push(Check::from_result("bracket-equivariance", equi));

    let mut sym = None;
    'b: for u in 0..n {
        for v in 0..n {
            if p.bracket(u, v) != p.bracket(v, u) {
                sym = Some(witness(
                    vec![p.names()[u].clone(), p.names()[v].clone()],
                    j.format(p.bracket(u, v)),
                    j.format(p.bracket(v, u)),
                ));
                break 'b;
            }
        }
    }
    r.push(Check::from_result("bracket-symmetry", sym));

    let mut family: Vec<Vector> = xs.clone();
    if field.characteristic() == 3 {
        for a in 0..n {
            for b in a + 1..n {
                family.push(xs[a].plus(&xs[b]));
            }
        }
    }
    let selfb = family.iter().find_map(|v| {
        let l = p.act_by(v, &p.bracket_of(v, v));
        (!l.is_zero()).then(|| witness(vec![vname(v)], vname(&l), "0".into()))
    });
    r.push(Check::from_result("self-bracket-kills", selfb));

    let mut cyc: Option<Witness> = None;
    'd: for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let mut s = p.act_by(&xs[u], p.bracket(v, w));
                s.add_assign(&p.act_by(&xs[v], p.bracket(w, u)));
                s.add_assign(&p.act_by(&xs[w], p.bracket(u, v)));
                if !s.is_zero() {
                    cyc = Some(witness(
                        vec![p.names()[u].clone(), p.names()[v].clone(), p.names()[w].clone()],
                        vname(&s),
                        "0".into(),
                    ));
                    break 'd;
                }
            }
        }
    }
    r.push(Check::from_result("cyclic-identity", cyc));
    r
}

/// The pair `(U(L_0), L_1)` of a Lie superalgebra, with `x <| a = [x, a]`
/// and the restricted bracket.
pub fn from_lie_superalgebra(l: &LieTable) -> Result<Presentation<Enveloping>> {
    if l.field.characteristic() == 3 {
        return Err(Error::CharacteristicThreeLie);
    }
    if let Some(c) = check_lie_super(l).first_failure() {
        let w = c.witness.as_ref().expect("failed check has a witness");
        return Err(Error::LieAxiom(format!("{} at ({}): {} vs {}", c.name, w.at.join(", "), w.lhs, w.rhs)));
    }
    let even: Vec<usize> = (0..l.dim()).filter(|&i| l.parities[i] == 0).collect();
    let odd: Vec<usize> = (0..l.dim()).filter(|&i| l.parities[i] == 1).collect();
    let pos = |set: &[usize], k: usize| set.iter().position(|&i| i == k).expect("bracket respects parity");
    let restrict = |v: &Vector, set: &[usize]| v.map_keys(|&k| pos(set, k));
    let lie0 = LieTable {
        field: l.field,
        names: even.iter().map(|&i| l.names[i].clone()).collect(),
        parities: vec![0; even.len()],
        bracket: even
            .iter()
            .map(|&a| even.iter().map(|&b| restrict(&l.bracket[a][b], &even)).collect())
            .collect(),
    };
    let u = Enveloping::new(lie0)?;
    let action = odd
        .iter()
        .map(|&x| even.iter().map(|&g| restrict(&l.bracket[x][g], &odd)).collect())
        .collect();
    let bracket = odd
        .iter()
        .map(|&x| odd.iter().map(|&y| u.embed(&restrict(&l.bracket[x][y], &even))).collect())
        .collect();
    Presentation::new(u, odd.iter().map(|&i| l.names[i].clone()).collect(), action, bracket)
}
