use super::{HopfSuperAlgebra, Tensor2};
use crate::report::{format_combination, format_tensor, format_vector, witness, Check, Report, Witness};
use crate::superlin::{koszul, Vector};

/// Exhaustive check of the Hopf superalgebra axioms on basis tuples.
pub fn verify_hopf(h: &HopfSuperAlgebra) -> Report {
    let mut r = Report::new();
    r.push(Check::from_result("parity", check_parity(h)));
    r.push(Check::from_result("associativity", check_associativity(h)));
    r.push(Check::from_result("unit", check_unit(h)));
    r.push(Check::from_result("coassociativity", check_coassociativity(h)));
    r.push(Check::from_result("counit", check_counit(h)));
    r.push(Check::from_result("bialgebra-compatibility", check_bialgebra(h)));
    r.push(Check::from_result("antipode", check_antipode(h)));
    r
}

fn names(h: &HopfSuperAlgebra) -> &[String] {
    h.names()
}

fn check_parity(h: &HopfSuperAlgebra) -> Option<Witness> {
    let n = h.dim();
    let nm = names(h);
    if let Some(p) = h.parity_of(h.unit()) {
        if p != 0 {
            return Some(witness(vec!["1"], format_vector(nm, h.unit()), "even".into()));
        }
    } else {
        return Some(witness(vec!["1"], format_vector(nm, h.unit()), "even".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let v = h.mul_basis(i, j);
            if v.keys().any(|&k| h.parity(k) != (h.parity(i) + h.parity(j)) % 2) {
                return Some(witness(
                    vec![nm[i].clone(), nm[j].clone()],
                    format_vector(nm, v),
                    "product of homogeneous parity".into(),
                ));
            }
        }
        if h.comul_basis(i)
            .keys()
            .any(|&(a, b)| (h.parity(a) + h.parity(b)) % 2 != h.parity(i))
        {
            return Some(witness(
                vec![nm[i].clone()],
                format_tensor(nm, nm, h.comul_basis(i)),
                "coproduct of homogeneous parity".into(),
            ));
        }
        if h.parity(i) == 1 && !h.counit_table()[i].is_zero() {
            return Some(witness(
                vec![nm[i].clone()],
                h.counit_table()[i].to_string(),
                "0".into(),
            ));
        }
        if h.antipode_table()[i].keys().any(|&k| h.parity(k) != h.parity(i)) {
            return Some(witness(
                vec![nm[i].clone()],
                format_vector(nm, &h.antipode_table()[i]),
                "antipode of homogeneous parity".into(),
            ));
        }
    }
    None
}

fn check_associativity(h: &HopfSuperAlgebra) -> Option<Witness> {
    let n = h.dim();
    let nm = names(h);
    for i in 0..n {
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            for k in 0..n {
                let mut left = Vector::new();
                for (&t, c) in ij {
                    left.add_scaled(h.mul_basis(t, k), c);
                }
                let mut right = Vector::new();
                for (&t, c) in h.mul_basis(j, k) {
                    right.add_scaled(h.mul_basis(i, t), c);
                }
                if left != right {
                    return Some(witness(
                        vec![nm[i].clone(), nm[j].clone(), nm[k].clone()],
                        format_vector(nm, &left),
                        format_vector(nm, &right),
                    ));
                }
            }
        }
    }
    None
}

fn check_unit(h: &HopfSuperAlgebra) -> Option<Witness> {
    let nm = names(h);
    for i in 0..h.dim() {
        let e = h.basis(i);
        let l = h.mul(h.unit(), &e);
        let r = h.mul(&e, h.unit());
        if l != e || r != e {
            let bad = if l != e { l } else { r };
            return Some(witness(vec![nm[i].clone()], format_vector(nm, &bad), nm[i].clone()));
        }
    }
    None
}

fn check_coassociativity(h: &HopfSuperAlgebra) -> Option<Witness> {
    let nm = names(h);
    let label = |&(a, b, c): &(usize, usize, usize)| format!("{}⊗{}⊗{}", nm[a], nm[b], nm[c]);
    for i in 0..h.dim() {
        let d = h.comul_basis(i);
        let l = h.comul_left(d);
        let r = h.comul_right(d);
        if l != r {
            return Some(witness(
                vec![nm[i].clone()],
                format_combination(&l, label),
                format_combination(&r, label),
            ));
        }
    }
    None
}

fn check_counit(h: &HopfSuperAlgebra) -> Option<Witness> {
    let nm = names(h);
    for i in 0..h.dim() {
        let d = h.comul_basis(i);
        let mut l = Vector::new();
        let mut r = Vector::new();
        for (&(a, b), c) in d {
            l.add_term(b, c * &h.counit_table()[a]);
            r.add_term(a, c * &h.counit_table()[b]);
        }
        let e = h.basis(i);
        if l != e || r != e {
            let bad = if l != e { l } else { r };
            return Some(witness(vec![nm[i].clone()], format_vector(nm, &bad), nm[i].clone()));
        }
    }
    None
}

fn check_bialgebra(h: &HopfSuperAlgebra) -> Option<Witness> {
    let nm = names(h);
    let n = h.dim();
    let one = h.field().one();
    let unit_sq: Tensor2 = {
        let mut t = Tensor2::new();
        for (&a, c) in h.unit() {
            for (&b, d) in h.unit() {
                t.add_term((a, b), c * d);
            }
        }
        t
    };
    let d1 = h.comul(h.unit());
    if d1 != unit_sq {
        return Some(witness(
            vec!["1"],
            format_tensor(nm, nm, &d1),
            format_tensor(nm, nm, &unit_sq),
        ));
    }
    let e1 = h.counit_of(h.unit());
    if e1 != one {
        return Some(witness(vec!["1"], e1.to_string(), "1".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let l = h.comul(h.mul_basis(i, j));
            let r = h.tensor_mul(h.comul_basis(i), h.comul_basis(j));
            if l != r {
                return Some(witness(
                    vec![nm[i].clone(), nm[j].clone()],
                    format_tensor(nm, nm, &l),
                    format_tensor(nm, nm, &r),
                ));
            }
            let el = h.counit_of(h.mul_basis(i, j));
            let er = &h.counit_table()[i] * &h.counit_table()[j];
            if el != er {
                return Some(witness(
                    vec![nm[i].clone(), nm[j].clone(), "counit".into()],
                    el.to_string(),
                    er.to_string(),
                ));
            }
        }
    }
    None
}

fn check_antipode(h: &HopfSuperAlgebra) -> Option<Witness> {
    let nm = names(h);
    for i in 0..h.dim() {
        let expect = h.unit().scaled(&h.counit_table()[i]);
        let mut l = Vector::new();
        let mut r = Vector::new();
        for (&(a, b), c) in h.comul_basis(i) {
            l.add_scaled(&h.mul(&h.antipode_table()[a], &h.basis(b)), c);
            r.add_scaled(&h.mul(&h.basis(a), &h.antipode_table()[b]), c);
        }
        if l != expect || r != expect {
            let bad = if l != expect { l } else { r };
            return Some(witness(vec![nm[i].clone()], format_vector(nm, &bad), format_vector(nm, &expect)));
        }
    }
    None
}

/// `ab = (-1)^{|a||b|} ba` on all basis pairs.
pub fn verify_super_commutative(h: &HopfSuperAlgebra) -> Check {
    let nm = names(h);
    for i in 0..h.dim() {
        for j in (i + 1)..h.dim() {
            let ab = h.mul_basis(i, j);
            let ba = h.mul_basis(j, i).scaled(&h.field().one().signed(koszul(h.parity(i), h.parity(j))));
            if *ab != ba {
                return Check::fail(
                    "super-commutative",
                    witness(vec![nm[i].clone(), nm[j].clone()], format_vector(nm, ab), format_vector(nm, &ba)),
                );
            }
        }
        let aa = h.mul_basis(i, i);
        if h.parity(i) == 1 && !aa.is_zero() {
            return Check::fail(
                "super-commutative",
                witness(vec![nm[i].clone(), nm[i].clone()], format_vector(nm, aa), "0".into()),
            );
        }
    }
    Check::pass("super-commutative")
}

/// `Delta = c o Delta` with the Koszul flip `c`.
pub fn verify_super_cocommutative(h: &HopfSuperAlgebra) -> Check {
    let nm = names(h);
    for i in 0..h.dim() {
        let d = h.comul_basis(i);
        let f = h.flip(d);
        if *d != f {
            return Check::fail(
                "super-cocommutative",
                witness(vec![nm[i].clone()], format_tensor(nm, nm, d), format_tensor(nm, nm, &f)),
            );
        }
    }
    Check::pass("super-cocommutative")
}

/// `S(ab) = (-1)^{|a||b|} S(b) S(a)` on basis pairs.
pub fn check_antipode_antimorphism(h: &HopfSuperAlgebra) -> Check {
    let nm = names(h);
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let l = h.antipode_of(h.mul_basis(i, j));
            let r = h
                .mul(&h.antipode_table()[j], &h.antipode_table()[i])
                .scaled(&h.field().one().signed(koszul(h.parity(i), h.parity(j))));
            if l != r {
                return Check::fail(
                    "antipode-antimorphism",
                    witness(vec![nm[i].clone(), nm[j].clone()], format_vector(nm, &l), format_vector(nm, &r)),
                );
            }
        }
    }
    Check::pass("antipode-antimorphism")
}
