//! Tensor algebras with the shuffle coproduct, tensor coalgebras with the
//! shuffle product, exterior algebras and the determinant pairing.
//!
//! Words are lists of letter indices into a [`SuperSpace`]; signs follow the
//! Koszul rule, so for purely odd letters the sign of a shuffle is the sign
//! of the permutation (a permutation and its inverse have the same sign).

use crate::error::{Error, Result};
use crate::report::{witness, Check, Report};
use crate::superlin::{Field, Matrix, PairingData, Scalar, SparseVec, SuperSpace};

pub type Word = Vec<usize>;
/// Linear combination of words.
pub type GradedElement = SparseVec<Word>;
/// Element of the tensor square of a tensor (co)algebra.
pub type WordPair = SparseVec<(Word, Word)>;

pub fn word_parity(space: &SuperSpace, w: &[usize]) -> u8 {
    w.iter().map(|&l| space.parity(l)).sum::<u8>() % 2
}

/// All words of length exactly `n` over `m` letters, lexicographic.
pub fn words_of_length(m: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * m);
        for w in &out {
            for l in 0..m {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `n`, by length then lexicographic.
pub fn words_up_to(m: usize, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|k| words_of_length(m, k)).collect()
}

/// Strictly increasing words over `m` letters, by length then lexicographic.
pub fn wedge_basis(m: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for k in 0..=m {
        let mut cur: Vec<Word> = vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &cur {
                let start = w.last().map_or(0, |&l| l + 1);
                for l in start..m {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            cur = next;
        }
        out.extend(cur);
    }
    out
}

/// Sign of the shuffle taking positions `mask` to the front: the product of
/// `(-1)^{|a||b|}` over pairs `a` before `b` with `b` selected and `a` not.
fn koszul_of_selection(space: &SuperSpace, w: &[usize], mask: u64) -> bool {
    let mut neg = false;
    let mut odd_unselected = 0u32;
    for (i, &l) in w.iter().enumerate() {
        let odd = space.parity(l) == 1;
        if mask >> i & 1 == 1 {
            if odd && odd_unselected % 2 == 1 {
                neg = !neg;
            }
        } else if odd {
            odd_unselected += 1;
        }
    }
    neg
}

/// `Delta(v_1 ... v_n) = sum over i-shuffles of (sign) (selected) ⊗ (rest)`.
pub fn shuffle_coproduct(space: &SuperSpace, field: Field, w: &[usize]) -> WordPair {
    let n = w.len();
    assert!(n < 64, "word too long for shuffle enumeration");
    let mut out = WordPair::new();
    for mask in 0..(1u64 << n) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &l) in w.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(l);
            } else {
                right.push(l);
            }
        }
        let sign = koszul_of_selection(space, w, mask);
        out.add_term((left, right), field.one().signed(sign));
    }
    out
}

/// Shuffle product of two words: all interleavings, with the Koszul sign
/// of every letter of `b` that jumps over a letter of `a`.
pub fn shuffle_product(space: &SuperSpace, field: Field, a: &[usize], b: &[usize]) -> GradedElement {
    let n = a.len() + b.len();
    let mut out = GradedElement::new();
    // choose the positions of the letters of `a`
    let mut positions: Vec<usize> = (0..a.len()).collect();
    loop {
        let mut word = Vec::with_capacity(n);
        let mut neg = false;
        let (mut ia, mut ib) = (0, 0);
        let mut odd_a_remaining: u32 = a.iter().filter(|&&l| space.parity(l) == 1).count() as u32;
        for pos in 0..n {
            if ia < a.len() && positions[ia] == pos {
                if space.parity(a[ia]) == 1 {
                    odd_a_remaining -= 1;
                }
                word.push(a[ia]);
                ia += 1;
            } else {
                // b[ib] passes over the letters of `a` that come later
                if space.parity(b[ib]) == 1 && odd_a_remaining % 2 == 1 {
                    neg = !neg;
                }
                word.push(b[ib]);
                ib += 1;
            }
        }
        out.add_term(word, field.one().signed(neg));
        if !next_combination(&mut positions, n) {
            break;
        }
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `Delta(w) = sum_i w[..i] ⊗ w[i..]`.
pub fn deconcatenation(field: Field, w: &[usize]) -> WordPair {
    let mut out = WordPair::new();
    for i in 0..=w.len() {
        out.add_term((w[..i].to_vec(), w[i..].to_vec()), field.one());
    }
    out
}

pub fn concatenate(a: &[usize], b: &[usize]) -> Word {
    let mut w = a.to_vec();
    w.extend_from_slice(b);
    w
}

pub fn word_counit(field: Field, w: &[usize]) -> Scalar {
    if w.is_empty() {
        field.one()
    } else {
        field.zero()
    }
}

/// Koszul sign of reversing a word.
fn reversal_sign(space: &SuperSpace, w: &[usize]) -> bool {
    let odd = w.iter().filter(|&&l| space.parity(l) == 1).count();
    (odd * odd.saturating_sub(1) / 2) % 2 == 1
}

/// Antipode of both `T(V)` (shuffle coproduct) and `T_c(W)` (shuffle
/// product): `S(v_1 ... v_n) = (-1)^n (sign) v_n ... v_1`, the sign being the
/// Koszul sign of the reversal.
pub fn word_antipode(space: &SuperSpace, field: Field, w: &[usize]) -> GradedElement {
    let mut r = w.to_vec();
    r.reverse();
    let neg = (w.len() % 2 == 1) ^ reversal_sign(space, w);
    GradedElement::singleton(r, field.one().signed(neg))
}

/// Sorts odd letters into a strictly increasing word; `None` when a letter
/// repeats. The flag is true when the sign is negative.
pub fn wedge_normalize(space: &SuperSpace, letters: &[usize]) -> Result<Option<(bool, Word)>> {
    if let Some(&l) = letters.iter().find(|&&l| space.parity(l) != 1) {
        return Err(Error::InvalidStructure(format!(
            "exterior words take odd letters only; {} is even",
            space.name(l)
        )));
    }
    let mut w = letters.to_vec();
    let mut neg = false;
    // insertion sort, counting transpositions
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return Ok(None);
    }
    Ok(Some((neg, w)))
}

fn determinant(field: Field, mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return field.zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let inv = m[col][col].inv().unwrap();
        det = &det * &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] -= &t;
            }
        }
    }
    det
}

/// `<v_{s_1} ∧ ... ∧ v_{s_n}, w_{t_1} ∧ ... ∧ w_{t_n}> = det(<v_{s_i}, w_{t_j}>)`
/// extended bilinearly; words of different length pair to zero.
pub fn canonical_pairing(p: &PairingData, u: &GradedElement, z: &GradedElement) -> Scalar {
    let field = p.matrix.field();
    let mut total = field.zero();
    for (s, a) in u {
        for (t, b) in z {
            if s.len() != t.len() {
                continue;
            }
            let m: Vec<Vec<Scalar>> = s
                .iter()
                .map(|&i| t.iter().map(|&j| p.matrix.get(i, j)).collect())
                .collect();
            total += &(&(a * b) * &determinant(field, m));
        }
    }
    total
}

/// `<v_1 ... v_n, w_1 ... w_n> = prod <v_i, w_i>`; different lengths pair to zero.
pub fn pairing_t_tc(p: &PairingData, x: &GradedElement, z: &GradedElement) -> Scalar {
    let field = p.matrix.field();
    let mut total = field.zero();
    for (u, a) in x {
        for (w, b) in z {
            if u.len() != w.len() {
                continue;
            }
            let mut t = a * b;
            for (&i, &j) in u.iter().zip(w) {
                t = &t * &p.matrix.get(i, j);
                if t.is_zero() {
                    break;
                }
            }
            total += &t;
        }
    }
    total
}

/// Degree-`n` Gram matrix of the determinant pairing on wedge bases.
pub fn wedge_gram(p: &PairingData, n: usize) -> Matrix {
    let field = p.matrix.field();
    let left: Vec<Word> = wedge_basis(p.left.dim()).into_iter().filter(|w| w.len() == n).collect();
    let right: Vec<Word> = wedge_basis(p.right.dim()).into_iter().filter(|w| w.len() == n).collect();
    let mut m = Matrix::zeros(field, left.len(), right.len());
    for (i, s) in left.iter().enumerate() {
        for (j, t) in right.iter().enumerate() {
            let v = canonical_pairing(
                p,
                &GradedElement::singleton(s.clone(), field.one()),
                &GradedElement::singleton(t.clone(), field.one()),
            );
            m.set(i, j, v);
        }
    }
    m
}

fn pair_sum(p: &PairingData, x: &WordPair, a: &GradedElement, b: &GradedElement) -> Scalar {
    let field = p.matrix.field();
    let mut s = field.zero();
    for ((l, r), c) in x {
        let one = |w: &Word| GradedElement::singleton(w.clone(), field.one());
        let t = &pairing_t_tc(p, &one(l), a) * &pairing_t_tc(p, &one(r), b);
        s += &(c * &t);
    }
    s
}

/// Checks the Hopf pairing laws between `T(V)` (concatenation, shuffle
/// coproduct) and `T_c(W)` (shuffle product, deconcatenation) on all basis
/// words up to total degree `bound`.
pub fn verify_t_tc_pairing(p: &PairingData, bound: usize) -> Report {
    let field = p.matrix.field();
    let (sv, sw) = (&p.left, &p.right);
    let one = |w: &Word| GradedElement::singleton(w.clone(), field.one());
    let fmt_w = |s: &SuperSpace, w: &Word| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|&l| s.name(l).to_string()).collect::<Vec<_>>().join("")
        }
    };
    let mut r = Report::new();
    let mut prod = None;
    let mut coprod = None;
    let mut anti = None;
    'outer: for total in 0..=bound {
        for i in 0..=total {
            for x in words_of_length(sv.dim(), i) {
                for y in words_of_length(sv.dim(), total - i) {
                    for a in words_of_length(sw.dim(), total) {
                        // <xy, a> = sum <x, a_1><y, a_2>
                        let l = pairing_t_tc(p, &one(&concatenate(&x, &y)), &one(&a));
                        let d = deconcatenation(field, &a);
                        let mut rr = field.zero();
                        for ((a1, a2), c) in &d {
                            rr += &(c * &(&pairing_t_tc(p, &one(&x), &one(a1)) * &pairing_t_tc(p, &one(&y), &one(a2))));
                        }
                        if l != rr && prod.is_none() {
                            prod = Some(witness(
                                vec![fmt_w(sv, &x), fmt_w(sv, &y), fmt_w(sw, &a)],
                                l.to_string(),
                                rr.to_string(),
                            ));
                        }
                    }
                }
            }
            for a in words_of_length(sw.dim(), i) {
                for b in words_of_length(sw.dim(), total - i) {
                    let ab = shuffle_product(sw, field, &a, &b);
                    for x in words_of_length(sv.dim(), total) {
                        // <x, ab> = sum <x_1, a><x_2, b>
                        let l = pairing_t_tc(p, &one(&x), &ab);
                        let rr = pair_sum(p, &shuffle_coproduct(sv, field, &x), &one(&a), &one(&b));
                        if l != rr && coprod.is_none() {
                            coprod = Some(witness(
                                vec![fmt_w(sv, &x), fmt_w(sw, &a), fmt_w(sw, &b)],
                                l.to_string(),
                                rr.to_string(),
                            ));
                        }
                    }
                }
            }
        }
        for x in words_of_length(sv.dim(), total) {
            for a in words_of_length(sw.dim(), total) {
                let l = pairing_t_tc(p, &word_antipode(sv, field, &x), &one(&a));
                let rr = pairing_t_tc(p, &one(&x), &word_antipode(sw, field, &a));
                if l != rr {
                    anti = Some(witness(vec![fmt_w(sv, &x), fmt_w(sw, &a)], l.to_string(), rr.to_string()));
                    break 'outer;
                }
            }
        }
    }
    r.push(Check::from_result("product-coproduct", prod));
    r.push(Check::from_result("coproduct-product", coprod));
    // <1, a> = eps(a) and <x, 1> = eps(x): only the empty word pairs with the empty word.
    let unit_ok = pairing_t_tc(p, &one(&vec![]), &one(&vec![])).is_one();
    r.push(Check::from_result(
        "units",
        (!unit_ok).then(|| witness(vec!["1", "1"], "0".into(), "1".into())),
    ));
    r.push(Check::from_result("antipode", anti));
    r
}

/// Coassociativity and super-cocommutativity of the shuffle coproduct, and
/// associativity and super-commutativity of the shuffle product, on all
/// words up to length `bound`.
pub fn verify_shuffle_structures(space: &SuperSpace, field: Field, bound: usize) -> Report {
    let mut r = Report::new();
    let m = space.dim();
    let flip = |t: &WordPair| {
        let mut out = WordPair::new();
        for ((a, b), c) in t {
            let neg = word_parity(space, a) * word_parity(space, b) == 1;
            out.add_term((b.clone(), a.clone()), c.signed(neg));
        }
        out
    };
    let mut coassoc = None;
    let mut cocomm = None;
    for w in words_up_to(m, bound) {
        let d = shuffle_coproduct(space, field, &w);
        let mut left: SparseVec<(Word, Word, Word)> = SparseVec::new();
        let mut right: SparseVec<(Word, Word, Word)> = SparseVec::new();
        for ((a, b), c) in &d {
            for ((p, q), e) in &shuffle_coproduct(space, field, a) {
                left.add_term((p.clone(), q.clone(), b.clone()), c * e);
            }
            for ((p, q), e) in &shuffle_coproduct(space, field, b) {
                right.add_term((a.clone(), p.clone(), q.clone()), c * e);
            }
        }
        if left != right && coassoc.is_none() {
            coassoc = Some(witness(vec![format!("{w:?}")], format!("{left:?}"), format!("{right:?}")));
        }
        if flip(&d) != d && cocomm.is_none() {
            cocomm = Some(witness(vec![format!("{w:?}")], format!("{d:?}"), format!("{:?}", flip(&d))));
        }
    }
    r.push(Check::from_result("shuffle-coproduct-coassociative", coassoc));
    r.push(Check::from_result("shuffle-coproduct-cocommutative", cocomm));

    let mut assoc = None;
    let mut comm = None;
    let mul = |x: &GradedElement, y: &GradedElement| {
        let mut out = GradedElement::new();
        for (a, c) in x {
            for (b, d) in y {
                out.add_scaled(&shuffle_product(space, field, a, b), &(c * d));
            }
        }
        out
    };
    let one = |w: &Word| GradedElement::singleton(w.clone(), field.one());
    for total in 0..=bound {
        for i in 0..=total {
            for a in words_of_length(m, i) {
                for b in words_of_length(m, total - i) {
                    let ab = shuffle_product(space, field, &a, &b);
                    let neg = word_parity(space, &a) * word_parity(space, &b) == 1;
                    let ba = shuffle_product(space, field, &b, &a).scaled(&field.one().signed(neg));
                    if ab != ba && comm.is_none() {
                        comm = Some(witness(vec![format!("{a:?}"), format!("{b:?}")], format!("{ab:?}"), format!("{ba:?}")));
                    }
                    for k in 0..=(bound - total).min(2) {
                        for c in words_of_length(m, k) {
                            let l = mul(&ab, &one(&c));
                            let rr = mul(&one(&a), &shuffle_product(space, field, &b, &c));
                            if l != rr && assoc.is_none() {
                                assoc = Some(witness(
                                    vec![format!("{a:?}"), format!("{b:?}"), format!("{c:?}")],
                                    format!("{l:?}"),
                                    format!("{rr:?}"),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    r.push(Check::from_result("shuffle-product-associative", assoc));
    r.push(Check::from_result("shuffle-product-commutative", comm));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd(n: usize) -> SuperSpace {
        SuperSpace::odd((1..=n).map(|i| format!("v{i}")).collect()).unwrap()
    }

    #[test]
    fn two_letter_coproduct() {
        let f = Field::Rational;
        let d = shuffle_coproduct(&odd(2), f, &[0, 1]);
        let mut expect = WordPair::new();
        expect.add_term((vec![], vec![0, 1]), f.one());
        expect.add_term((vec![0], vec![1]), f.one());
        expect.add_term((vec![1], vec![0]), f.from_i64(-1));
        expect.add_term((vec![0, 1], vec![]), f.one());
        assert_eq!(d, expect);
    }

    #[test]
    fn single_letter_products() {
        let f = Field::Rational;
        let s = odd(2);
        let p = shuffle_product(&s, f, &[0], &[1]);
        let mut expect = GradedElement::new();
        expect.add_term(vec![0, 1], f.one());
        expect.add_term(vec![1, 0], f.from_i64(-1));
        assert_eq!(p, expect);
        assert!(shuffle_product(&s, f, &[0], &[0]).is_zero());
        assert_eq!(shuffle_product(&s, f, &[], &[0, 1]), GradedElement::singleton(vec![0, 1], f.one()));
    }

    #[test]
    fn wedge_signs() {
        let s = odd(3);
        assert_eq!(wedge_normalize(&s, &[1, 0]).unwrap(), Some((true, vec![0, 1])));
        assert_eq!(wedge_normalize(&s, &[0, 0]).unwrap(), None);
        assert_eq!(wedge_normalize(&s, &[2, 0, 1]).unwrap(), Some((false, vec![0, 1, 2])));
        let mixed = SuperSpace::new(vec![("a", 0), ("x", 1)]).unwrap();
        assert!(wedge_normalize(&mixed, &[0, 1]).is_err());
    }

    #[test]
    fn determinant_pairing() {
        let f = Field::Rational;
        let p = PairingData::evaluation(f, &odd(2));
        let e = |w: Vec<usize>| GradedElement::singleton(w, f.one());
        assert_eq!(canonical_pairing(&p, &e(vec![0, 1]), &e(vec![0, 1])), f.one());
        assert_eq!(canonical_pairing(&p, &e(vec![0, 1]), &e(vec![1, 0])), f.from_i64(-1));
        assert_eq!(canonical_pairing(&p, &e(vec![0]), &e(vec![0, 1])), f.zero());
    }
}
