use super::field::Field;
use super::matrix::Matrix;
use super::space::SuperSpace;
use super::sparse::Vector;
use crate::error::{Error, Result};

/// A bilinear form `V x W -> k`, stored as the matrix `(<v_i, w_j>)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingData {
    pub left: SuperSpace,
    pub right: SuperSpace,
    pub matrix: Matrix,
}

impl PairingData {
    /// Checks shapes and that mixed-parity entries vanish.
    pub fn new(left: SuperSpace, right: SuperSpace, matrix: Matrix) -> Result<PairingData> {
        if matrix.nrows() != left.dim() || matrix.ncols() != right.dim() {
            return Err(Error::Dimension(format!(
                "pairing matrix is {}x{}, spaces have dimensions {} and {}",
                matrix.nrows(),
                matrix.ncols(),
                left.dim(),
                right.dim()
            )));
        }
        for i in 0..left.dim() {
            for (&j, _) in matrix.row(i) {
                if left.parity(i) != right.parity(j) {
                    return Err(Error::InvalidStructure(format!(
                        "pairing of {} with {} mixes parities",
                        left.name(i),
                        right.name(j)
                    )));
                }
            }
        }
        Ok(PairingData {
            left,
            right,
            matrix,
        })
    }

    /// The evaluation pairing between `V` and its dual basis.
    pub fn evaluation(field: Field, space: &SuperSpace) -> PairingData {
        PairingData {
            left: space.clone(),
            right: space.dual(),
            matrix: Matrix::identity(field, space.dim()),
        }
    }

    pub fn eval(&self, v: &Vector, w: &Vector) -> super::field::Scalar {
        let zero = self.matrix.field().zero();
        let mut s = zero.clone();
        for (&i, a) in v {
            for (&j, b) in w {
                let m = self.matrix.get(i, j);
                if !m.is_zero() {
                    s += &(&(a * b) * &m);
                }
            }
        }
        s
    }
}

/// The super-symmetry `V (x) W -> W (x) V`, `v (x) w -> (-1)^{|v||w|} w (x) v`.
///
/// Basis of `V (x) W` is indexed `i * dim W + j`, that of `W (x) V` as `j * dim V + i`.
pub fn koszul_swap(field: Field, v: &SuperSpace, w: &SuperSpace) -> Matrix {
    let (m, n) = (v.dim(), w.dim());
    let mut out = Matrix::zeros(field, n * m, m * n);
    for i in 0..m {
        for j in 0..n {
            let sign = v.parity(i) * w.parity(j) == 1;
            out.set(j * m + i, i * n + j, field.one().signed(sign));
        }
    }
    out
}

/// `<v (x) z, w (x) u> = <v, w><z, u>`, with no sign.
pub fn tensor_pairing(p: &PairingData, q: &PairingData) -> PairingData {
    let field = p.matrix.field();
    let (dv, dz) = (p.left.dim(), q.left.dim());
    let (dw, du) = (p.right.dim(), q.right.dim());
    let mut m = Matrix::zeros(field, dv * dz, dw * du);
    for i in 0..dv {
        for (&j, a) in p.matrix.row(i) {
            for k in 0..dz {
                for (&l, b) in q.matrix.row(k) {
                    m.set(i * dz + k, j * du + l, a * b);
                }
            }
        }
    }
    PairingData {
        left: p.left.tensor(&q.left),
        right: p.right.tensor(&q.right),
        matrix: m,
    }
}

/// Basis of the right annihilator `{w : <v_i, w> = 0 for all i}`.
pub fn annihilator(vectors: &[Vector], p: &PairingData) -> Vec<Vector> {
    let field = p.matrix.field();
    let rows: Vec<Vector> = vectors
        .iter()
        .map(|v| {
            let mut r = Vector::new();
            for (&i, c) in v {
                r.add_scaled(p.matrix.row(i), c);
            }
            r
        })
        .collect();
    Matrix::from_rows(field, p.right.dim(), rows).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlin::matrix::sparse_from_dense;

    #[test]
    fn swap_signs() {
        let f = Field::Rational;
        let v = SuperSpace::new(vec![("a", 0), ("x", 1)]).unwrap();
        let s = koszul_swap(f, &v, &v);
        // x (x) x -> -x (x) x
        assert_eq!(s.get(3, 3), f.from_i64(-1));
        // a (x) x -> x (x) a
        assert_eq!(s.get(2, 1), f.one());
        assert!(s.mul(&s).is_identity());
    }

    #[test]
    fn annihilator_examples() {
        let f = Field::Rational;
        let v = SuperSpace::even(vec!["e1", "e2"]).unwrap();
        let p = PairingData::evaluation(f, &v);
        assert_eq!(annihilator(&[], &p).len(), 2);
        let e1 = sparse_from_dense(f, &[1, 0]);
        assert_eq!(annihilator(std::slice::from_ref(&e1), &p), vec![sparse_from_dense(f, &[0, 1])]);
        let e2 = sparse_from_dense(f, &[0, 1]);
        assert!(annihilator(&[e1, e2], &p).is_empty());
    }

    #[test]
    fn mixed_parity_entries_rejected() {
        let f = Field::Rational;
        let l = SuperSpace::new(vec![("a", 0)]).unwrap();
        let r = SuperSpace::new(vec![("x", 1)]).unwrap();
        let mut m = Matrix::zeros(f, 1, 1);
        m.set(0, 0, f.one());
        assert!(PairingData::new(l, r, m).is_err());
    }
}
