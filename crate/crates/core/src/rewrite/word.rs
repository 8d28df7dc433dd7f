use std::cmp::Ordering;

/// A letter of a mixed word: a basis key of `J` or an odd generator of `V`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter<K> {
    J(K),
    X(usize),
}

/// A word in `J` letters and `X` letters.
///
/// The `Ord` instance is a total refinement of the termination order: length,
/// then the `J`/`X` shape with `J` before `X`, then the number of mis-ordered
/// pairs among the `X` letters, then the letters themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedWord<K>(pub Vec<Letter<K>>);

/// Result of comparing two words in the termination order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl<K> MixedWord<K> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `0` for a `J` letter, `1` for an `X` letter.
    pub fn shape(&self) -> Vec<u8> {
        self.0.iter().map(|l| matches!(l, Letter::X(_)) as u8).collect()
    }

    /// The `X` letters with `J` letters removed.
    pub fn x_letters(&self) -> Vec<usize> {
        self.0
            .iter()
            .filter_map(|l| match l {
                Letter::X(x) => Some(*x),
                Letter::J(_) => None,
            })
            .collect()
    }

    pub fn misordered(&self) -> usize {
        misordered_pairs(&self.x_letters())
    }
}

/// Number of pairs `i < j` with `w[i] > w[j]`.
pub fn misordered_pairs(w: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

impl<K: Ord> Ord for MixedWord<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.shape().cmp(&other.shape()))
            .then_with(|| self.misordered().cmp(&other.misordered()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<K: Ord> PartialOrd for MixedWord<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The termination order itself. Words of equal length and shape whose `X`
/// letters are not permutations of each other are incomparable; words that
/// are permutations with equally many mis-ordered pairs compare equal.
pub fn word_order<K>(a: &MixedWord<K>, b: &MixedWord<K>) -> WordOrder {
    let from = |o: Ordering| match o {
        Ordering::Less => WordOrder::Less,
        Ordering::Equal => WordOrder::Equal,
        Ordering::Greater => WordOrder::Greater,
    };
    if a.len() != b.len() {
        return from(a.len().cmp(&b.len()));
    }
    let (sa, sb) = (a.shape(), b.shape());
    if sa != sb {
        return from(sa.cmp(&sb));
    }
    let (mut xa, mut xb) = (a.x_letters(), b.x_letters());
    let (ma, mb) = (misordered_pairs(&xa), misordered_pairs(&xb));
    xa.sort_unstable();
    xb.sort_unstable();
    if xa != xb {
        return WordOrder::Incomparable;
    }
    from(ma.cmp(&mb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{J, X};

    fn w(l: &[Letter<u8>]) -> MixedWord<u8> {
        MixedWord(l.to_vec())
    }

    #[test]
    fn order_examples() {
        assert_eq!(word_order(&w(&[X(0), X(1)]), &w(&[X(0), X(1), X(2)])), WordOrder::Less);
        assert_eq!(word_order(&w(&[J(0), X(0)]), &w(&[X(0), J(0)])), WordOrder::Less);
        assert_eq!(word_order(&w(&[X(0), X(1)]), &w(&[X(1), X(0)])), WordOrder::Less);
        assert_eq!(word_order(&w(&[X(0), X(1)]), &w(&[X(0), X(2)])), WordOrder::Incomparable);
        assert_eq!(word_order(&w(&[X(0), J(1)]), &w(&[X(0), J(2)])), WordOrder::Equal);
    }
}
