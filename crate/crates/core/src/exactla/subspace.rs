//! Coordinates in a subspace and projections onto a quotient space.

use super::field::Field;
use super::mat::{canonical_span, Mat};

/// Coordinates with respect to a set of linearly independent columns.
#[derive(Clone, Debug)]
pub struct SpanCoords<F: Field> {
    basis: Mat<F>,
    rows: Vec<usize>,
    inverse: Mat<F>,
}

impl<F: Field> SpanCoords<F> {
    /// `basis` must have linearly independent columns.
    pub fn new(basis: Mat<F>) -> Self {
        let (_, rows) = basis.transpose().echelon();
        assert_eq!(rows.len(), basis.cols(), "basis columns must be independent");
        let inverse = basis.select_rows(&rows).inverse().expect("pivot rows are independent");
        SpanCoords { basis, rows, inverse }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    /// Coordinates of `v`, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let sel: Vec<F::Elem> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.mul_vec(&sel);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }
}

/// A complement to a subspace `U` of `F^n`, spanned by standard basis
/// vectors, with the projection `F^n -> F^n / U` in those coordinates.
#[derive(Clone, Debug)]
pub struct QuotientSpace<F: Field> {
    /// Canonical (reduced echelon) basis of `U`, as rows.
    pub sub_basis: Vec<Vec<F::Elem>>,
    /// Standard coordinates spanning the complement.
    pub complement: Vec<usize>,
    /// `complement.len() x n` projection matrix.
    pub projection: Mat<F>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(field: &F, n: usize, spanning: &[Vec<F::Elem>]) -> Self {
        let sub_basis = canonical_span(field, n, spanning);
        let pivots: Vec<usize> = sub_basis
            .iter()
            .map(|r| r.iter().position(|x| !field.is_zero(x)).expect("nonzero row"))
            .collect();
        let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // x = sum_i x_{p_i} row_i + (rest on complement): subtract pivot rows.
        let mut projection = Mat::zeros(field, complement.len(), n);
        for (k, &c) in complement.iter().enumerate() {
            projection.set(k, c, field.one());
        }
        for (row, &p) in sub_basis.iter().zip(&pivots) {
            for (k, &c) in complement.iter().enumerate() {
                if !field.is_zero(&row[c]) {
                    projection.set(k, p, field.neg(&row[c]));
                }
            }
        }
        QuotientSpace { sub_basis, complement, projection }
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_basis.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.len()
    }

    /// The complement inclusion `F^c -> F^n`.
    pub fn section(&self, field: &F, n: usize) -> Mat<F> {
        let mut s = Mat::zeros(field, n, self.complement.len());
        for (k, &c) in self.complement.iter().enumerate() {
            s.set(c, k, field.one());
        }
        s
    }
}
