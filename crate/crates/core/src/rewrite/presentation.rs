use super::hopf::CocommutativeHopf;
use super::word::{word_order, Letter, MixedWord, WordOrder};
use crate::error::{Error, Result};
use crate::report::format_combination;
use crate::superlin::{Scalar, SparseVec, Vector};

/// Linear combination of mixed words.
pub type MixedElement<K> = SparseVec<MixedWord<K>>;

/// A `J`-ring generated over `J` by odd letters `X`, with relations
/// `x a = sum a_1 (x <| a_2)`, `x y = -y x + [x,y]` and `x x = [x,x]/2`.
#[derive(Clone, Debug)]
pub struct Presentation<J: CocommutativeHopf> {
    j: J,
    names: Vec<String>,
    /// `action[x][g] = x <| g` for generators `g` of `J`.
    action: Vec<Vec<Vector>>,
    bracket: Vec<Vec<SparseVec<J::Key>>>,
    strict: bool,
}

/// An element in normal form: a sum of `a * x_1 ... x_n` with `a` a basis key
/// of `J` and `x_1 < ... < x_n`. Terms are keyed by `(X word, J key)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalElement<K: Ord> {
    pub terms: SparseVec<(Vec<usize>, K)>,
}

impl<K: Ord + Clone> NormalElement<K> {
    pub fn zero() -> Self {
        NormalElement { terms: SparseVec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The distinct `X` words that occur.
    pub fn words(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (w, _) in self.terms.keys() {
            if out.last() != Some(w) {
                out.push(w.clone());
            }
        }
        out
    }

    /// The `J` coefficient of an `X` word.
    pub fn coefficient(&self, word: &[usize]) -> SparseVec<K> {
        let mut out = SparseVec::new();
        for ((w, k), c) in &self.terms {
            if w == word {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        NormalElement {
            terms: self.terms.minus(&other.terms),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        NormalElement {
            terms: self.terms.plus(&other.terms),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        NormalElement {
            terms: self.terms.scaled(c),
        }
    }
}

impl<J: CocommutativeHopf> Presentation<J> {
    /// Checks shapes and that every bracket value is primitive in `J`.
    /// Symmetry of the bracket is a reported condition, not a precondition.
    pub fn new(
        j: J,
        names: Vec<String>,
        action: Vec<Vec<Vector>>,
        bracket: Vec<Vec<SparseVec<J::Key>>>,
    ) -> Result<Self> {
        let n = names.len();
        let g = j.generator_names().len();
        if action.len() != n || action.iter().any(|r| r.len() != g || r.iter().any(|v| v.keys().any(|&k| k >= n))) {
            return Err(Error::Dimension(format!("action table must be {n}x{g} with values in V")));
        }
        if bracket.len() != n || bracket.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("bracket table must be {n}x{n}")));
        }
        for x in 0..n {
            for y in 0..n {
                if !j.is_primitive(&bracket[x][y]) {
                    return Err(Error::InvalidStructure(format!(
                        "[{}, {}] = {} is not primitive in J",
                        names[x],
                        names[y],
                        j.format(&bracket[x][y])
                    )));
                }
            }
        }
        Ok(Presentation {
            j,
            names,
            action,
            bracket,
            strict: false,
        })
    }

    /// In strict mode every rewrite is checked against the termination
    /// order; debug builds always check.
    pub fn with_strict(mut self, strict: bool) -> Self {
        self.strict = strict;
        self
    }

    pub fn j(&self) -> &J {
        &self.j
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim_x(&self) -> usize {
        self.names.len()
    }

    pub fn action_table(&self) -> &[Vec<Vector>] {
        &self.action
    }

    pub fn bracket(&self, x: usize, y: usize) -> &SparseVec<J::Key> {
        &self.bracket[x][y]
    }

    pub fn bracket_of(&self, u: &Vector, v: &Vector) -> SparseVec<J::Key> {
        let mut out = SparseVec::new();
        for (&x, c) in u {
            for (&y, d) in v {
                out.add_scaled(&self.bracket[x][y], &(c * d));
            }
        }
        out
    }

    /// `v <| a` for a basis key `a`, through the generator factorization.
    pub fn act(&self, v: &Vector, a: &J::Key) -> Vector {
        let mut cur = v.clone();
        for g in self.j.factor(a) {
            cur = cur.apply(|&x| self.action[x][g].clone());
        }
        cur
    }

    pub fn act_by(&self, v: &Vector, a: &SparseVec<J::Key>) -> Vector {
        let mut out = Vector::new();
        for (k, c) in a {
            out.add_scaled(&self.act(v, k), c);
        }
        out
    }

    pub fn x_vector(&self, x: usize) -> Vector {
        Vector::singleton(x, self.j.field().one())
    }

    /// Multiplies adjacent `J` letters and drops unit letters.
    pub fn canonical(&self, letters: &[Letter<J::Key>]) -> MixedElement<J::Key> {
        let one = self.j.field().one();
        let unit = self.j.unit_key();
        let mut partial: SparseVec<Vec<Letter<J::Key>>> = SparseVec::singleton(Vec::new(), one);
        for l in letters {
            match l {
                Letter::X(_) => partial = partial.map_keys(|w| [w.as_slice(), std::slice::from_ref(l)].concat()),
                Letter::J(k) => {
                    if Some(k) == unit.as_ref() {
                        continue;
                    }
                    partial = partial.apply(|w| match w.last() {
                        Some(Letter::J(prev)) => self.j.mul_keys(prev, k).map_keys(|p| {
                            let mut v = w[..w.len() - 1].to_vec();
                            if Some(p) != unit.as_ref() {
                                v.push(Letter::J(p.clone()));
                            }
                            v
                        }),
                        _ => {
                            let mut v = w.clone();
                            v.push(l.clone());
                            SparseVec::singleton(v, self.j.field().one())
                        }
                    });
                }
            }
        }
        partial.map_keys(|w| MixedWord(w.clone()))
    }

    pub fn word(&self, letters: &[Letter<J::Key>]) -> MixedElement<J::Key> {
        self.canonical(letters)
    }

    pub fn j_element(&self, a: &SparseVec<J::Key>) -> MixedElement<J::Key> {
        let mut out = MixedElement::new();
        for (k, c) in a {
            out.add_scaled(&self.canonical(&[Letter::J(k.clone())]), c);
        }
        out
    }

    /// Concatenation product on mixed elements.
    pub fn mul(&self, a: &MixedElement<J::Key>, b: &MixedElement<J::Key>) -> MixedElement<J::Key> {
        let mut out = MixedElement::new();
        for (u, c) in a {
            for (v, d) in b {
                let w = [u.0.as_slice(), v.0.as_slice()].concat();
                out.add_scaled(&self.canonical(&w), &(c * d));
            }
        }
        out
    }

    /// Leftmost position where a rule applies.
    pub fn find_redex(&self, w: &MixedWord<J::Key>) -> Option<usize> {
        w.0.windows(2).position(|p| match (&p[0], &p[1]) {
            (Letter::X(_), Letter::J(_)) => true,
            (Letter::X(x), Letter::X(y)) => x >= y,
            _ => false,
        })
    }

    /// Applies the rule at position `i` of `w`, returning the rewritten
    /// element that replaces `w`.
    pub fn rewrite_at(&self, w: &MixedWord<J::Key>, i: usize) -> Result<MixedElement<J::Key>> {
        let field = self.j.field();
        let mut pieces: Vec<(Vec<Letter<J::Key>>, Scalar)> = Vec::new();
        match (&w.0[i], &w.0[i + 1]) {
            (Letter::X(x), Letter::J(a)) => {
                for ((a1, a2), c) in &self.j.comul_key(a) {
                    for (&y, d) in &self.act(&self.x_vector(*x), a2) {
                        pieces.push((vec![Letter::J(a1.clone()), Letter::X(y)], c * d));
                    }
                }
            }
            (Letter::X(x), Letter::X(y)) if x > y => {
                pieces.push((vec![Letter::X(*y), Letter::X(*x)], -field.one()));
                for (k, c) in &self.bracket[*x][*y] {
                    pieces.push((vec![Letter::J(k.clone())], c.clone()));
                }
            }
            (Letter::X(x), Letter::X(y)) if x == y => {
                let half = field.fraction(1, 2).expect("characteristic is not 2");
                for (k, c) in &self.bracket[*x][*x] {
                    pieces.push((vec![Letter::J(k.clone())], c * &half));
                }
            }
            _ => return Err(Error::InvalidStructure(format!("no rule applies at position {i}"))),
        }
        let mut out = MixedElement::new();
        for (mid, c) in pieces {
            let letters = [&w.0[..i], mid.as_slice(), &w.0[i + 2..]].concat();
            out.add_scaled(&self.canonical(&letters), &c);
        }
        if self.strict || cfg!(debug_assertions) {
            if let Some(bad) = out.keys().find(|v| word_order(v, w) != WordOrder::Less) {
                return Err(Error::OrderViolation(format!(
                    "{} -> {}",
                    self.format_word(w),
                    self.format_word(bad)
                )));
            }
        }
        Ok(out)
    }

    /// One rewriting step on the order-largest reducible term. The flag is
    /// false when `e` is already irreducible.
    pub fn reduce_once(&self, e: &MixedElement<J::Key>) -> Result<(MixedElement<J::Key>, bool)> {
        for (w, c) in e.iter().rev() {
            if let Some(i) = self.find_redex(w) {
                let mut out = e.clone();
                out.remove(w);
                out.add_scaled(&self.rewrite_at(w, i)?, c);
                return Ok((out, true));
            }
        }
        Ok((e.clone(), false))
    }

    /// Rewrites to the fixed point. Equivalent to iterating
    /// [`reduce_once`](Self::reduce_once), but retires irreducible terms as
    /// soon as they are the largest remaining.
    pub fn normalize(&self, e: &MixedElement<J::Key>) -> Result<NormalElement<J::Key>> {
        let mut pending = e.clone();
        let mut done = MixedElement::new();
        while let Some((w, c)) = pending.pop_last() {
            match self.find_redex(&w) {
                None => done.add_term(w, c),
                Some(i) => pending.add_scaled(&self.rewrite_at(&w, i)?, &c),
            }
        }
        Ok(self.to_normal(&done))
    }

    pub fn normalize_word(&self, letters: &[Letter<J::Key>]) -> Result<NormalElement<J::Key>> {
        self.normalize(&self.canonical(letters))
    }

    /// Reads off an irreducible element; panics on reducible words.
    pub fn to_normal(&self, e: &MixedElement<J::Key>) -> NormalElement<J::Key> {
        let mut terms = SparseVec::new();
        for (w, c) in e {
            assert!(self.find_redex(w).is_none(), "to_normal needs irreducible words");
            let xs = w.x_letters();
            match w.0.first() {
                Some(Letter::J(k)) => terms.add_term((xs, k.clone()), c.clone()),
                _ => {
                    for (k, d) in &self.j.unit() {
                        terms.add_term((xs.clone(), k.clone()), c * d);
                    }
                }
            }
        }
        NormalElement { terms }
    }

    pub fn from_normal(&self, n: &NormalElement<J::Key>) -> MixedElement<J::Key> {
        let mut out = MixedElement::new();
        for ((xs, k), c) in &n.terms {
            let mut letters = vec![Letter::J(k.clone())];
            letters.extend(xs.iter().map(|&x| Letter::X(x)));
            out.add_scaled(&self.canonical(&letters), c);
        }
        out
    }

    /// Left multiplication of a normal form by an element of `J`.
    pub fn left_mul(&self, a: &SparseVec<J::Key>, n: &NormalElement<J::Key>) -> NormalElement<J::Key> {
        let mut terms = SparseVec::new();
        for ((xs, k), c) in &n.terms {
            for (p, d) in a {
                for (q, e) in &self.j.mul_keys(p, k) {
                    terms.add_term((xs.clone(), q.clone()), &(c * d) * e);
                }
            }
        }
        NormalElement { terms }
    }

    pub fn letter_name(&self, l: &Letter<J::Key>) -> String {
        match l {
            Letter::J(k) => self.j.key_name(k),
            Letter::X(x) => self.names[*x].clone(),
        }
    }

    pub fn format_word(&self, w: &MixedWord<J::Key>) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.0.iter().map(|l| self.letter_name(l)).collect::<Vec<_>>().join("·")
    }

    pub fn format_mixed(&self, e: &MixedElement<J::Key>) -> String {
        format_combination(e, |w| self.format_word(w))
    }

    pub fn format_normal(&self, n: &NormalElement<J::Key>) -> String {
        format_combination(&n.terms, |(xs, k)| {
            let j = self.j.key_name(k);
            if xs.is_empty() {
                return j;
            }
            let x = xs.iter().map(|&i| self.names[i].clone()).collect::<Vec<_>>().join("·");
            if Some(k) == self.j.unit_key().as_ref() {
                x
            } else {
                format!("{j}·{x}")
            }
        })
    }
}
