use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::sparse::{SparseVec, Vector};

/// Sparse matrix over a field, stored by rows. Maps act on column vectors,
/// so entry `(i, j)` is the coefficient of basis vector `i` in the image of
/// basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Vector::new(); rows],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i].add_term(i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Matrix {
        debug_assert!(rows.iter().all(|r| r.keys().all(|&j| j < cols)));
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col {
                assert!(i < rows, "column entry out of range");
                m.data[i].add_term(j, c.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.data[i]
    }

    pub fn rows(&self) -> &[Vector] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].coeff(&j, &self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        self.data[i].remove(&j);
        self.data[i].add_term(j, c);
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: Scalar) {
        self.data[i].add_term(j, c);
    }

    pub fn columns(&self) -> Vec<Vector> {
        let mut cols = vec![Vector::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (&j, c) in row {
                cols[j].add_term(i, c.clone());
            }
        }
        cols
    }

    pub fn column(&self, j: usize) -> Vector {
        let mut col = Vector::new();
        for (i, row) in self.data.iter().enumerate() {
            if let Some(c) = row.get(&j) {
                col.add_term(i, c.clone());
            }
        }
        col
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_rows(self.field, self.rows, self.columns())
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        let zero = self.field.zero();
        let mut out = Vector::new();
        for (i, row) in self.data.iter().enumerate() {
            out.add_term(i, super::sparse::dot(row, v, &zero));
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut out = Vector::new();
                for (&k, c) in row {
                    out.add_scaled(&other.data[k], c);
                }
                out
            })
            .collect();
        Matrix::from_rows(self.field, other.cols, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field);
        for r in &self.data {
            e.insert(r.clone());
        }
        e.rank()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut e = Echelon::new(self.field);
        for r in &self.data {
            e.insert(r.clone());
        }
        let reduced = e.reduced_rows();
        let pivots: Vec<usize> = reduced.keys().copied().collect();
        let mut rows: Vec<Vector> = reduced.into_values().collect();
        rows.resize(self.rows, Vector::new());
        (Matrix::from_rows(self.field, self.cols, rows), pivots)
    }

    /// Basis of `{x : M x = 0}`, one vector per free column in increasing
    /// order, each with a 1 in its free column and zeros in the other free
    /// columns (reduced column-echelon form).
    pub fn kernel(&self) -> Vec<Vector> {
        let mut e = Echelon::new(self.field);
        for r in &self.data {
            e.insert(r.clone());
        }
        let reduced = e.reduced_rows();
        let mut free_entries: BTreeMap<usize, Vector> = BTreeMap::new();
        for (&p, row) in &reduced {
            for (&j, c) in row {
                if j != p {
                    free_entries.entry(j).or_default().add_term(p, -c);
                }
            }
        }
        (0..self.cols)
            .filter(|j| !reduced.contains_key(j))
            .map(|j| {
                let mut v = free_entries.remove(&j).unwrap_or_default();
                v.add_term(j, self.field.one());
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let mut e = Echelon::new(self.field);
        for c in self.columns() {
            if !e.insert(c) {
                return None;
            }
        }
        let cols: Vec<Vector> = (0..self.rows)
            .map(|i| {
                e.coordinates(&Vector::singleton(i, self.field.one()))
                    .expect("full rank")
            })
            .collect();
        Some(Matrix::from_columns(self.field, self.rows, &cols))
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        let mut e = Echelon::new(self.field);
        for c in self.columns() {
            e.insert(c);
        }
        e.coordinates(b)
    }
}

/// Incrementally built echelon basis of a subspace, remembering how each
/// basis row is expressed through the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    /// pivot column -> (row with leading 1 at the pivot, combination of inserted vectors)
    pivots: BTreeMap<usize, (Vector, Vector)>,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: Field) -> Echelon {
        Echelon {
            field,
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Reduces `v` against the basis: returns the remainder and the
    /// combination `c` of inserted vectors with `v = remainder + sum c_i v_i`.
    pub fn reduce(&self, v: &Vector) -> (Vector, Vector) {
        let mut rem = v.clone();
        let mut combo = Vector::new();
        let mut cursor = 0usize;
        loop {
            let next = rem
                .range_from(&cursor)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((col, coeff)) = next else { break };
            let (row, rc) = &self.pivots[&col];
            rem.add_scaled(row, &-&coeff);
            combo.add_scaled(rc, &coeff);
            cursor = col + 1;
        }
        (rem, combo)
    }

    /// Adds `v`; returns whether it was independent of the previous vectors.
    pub fn insert(&mut self, v: Vector) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, combo) = self.reduce(&v);
        let Some((&lead, lc)) = rem.first() else {
            return false;
        };
        let inv = lc.inv().expect("nonzero leading coefficient");
        let mut own = combo.neg();
        own.add_term(idx, self.field.one());
        self.pivots.insert(lead, (rem.scaled(&inv), own.scaled(&inv)));
        true
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` lies in
    /// their span. Dependent inserted vectors get coefficient zero.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let (rem, combo) = self.reduce(v);
        rem.is_zero().then_some(combo)
    }

    /// Fully reduced rows keyed by pivot column.
    pub fn reduced_rows(&self) -> BTreeMap<usize, Vector> {
        let mut out: BTreeMap<usize, Vector> = BTreeMap::new();
        for (&p, (row, _)) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let hits: Vec<(usize, Scalar)> = r
                .iter()
                .filter(|(&j, _)| j != p && out.contains_key(&j))
                .map(|(&j, c)| (j, c.clone()))
                .collect();
            for (j, c) in hits {
                r.add_scaled(&out[&j], &-&c);
            }
            out.insert(p, r);
        }
        out
    }
}

/// Basis of the span of `vectors`, in echelon order.
pub fn span_basis(field: Field, vectors: &[Vector]) -> Vec<Vector> {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v.clone());
    }
    e.reduced_rows().into_values().collect()
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect(field: Field, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    // x = sum s_i a_i = sum t_j b_j  <=>  (s, t) in ker [A | -B]
    let n = a.len();
    let dim = a
        .iter()
        .chain(b)
        .flat_map(|v| v.keys().copied())
        .max()
        .map_or(0, |m| m + 1);
    let mut cols: Vec<Vector> = a.to_vec();
    cols.extend(b.iter().map(|v| v.neg()));
    let m = Matrix::from_columns(field, dim, &cols);
    let mut out = Vec::new();
    for k in m.kernel() {
        let mut x = Vector::new();
        for (&i, c) in &k {
            if i < n {
                x.add_scaled(&a[i], c);
            }
        }
        out.push(x);
    }
    span_basis(field, &out)
}

pub fn sparse_from_dense(field: Field, values: &[i64]) -> Vector {
    SparseVec::from_terms(values.iter().enumerate().map(|(i, &x)| (i, field.from_i64(x))))
}
