//! Dense matrices over an exact field.

use std::fmt;

use super::field::Field;

/// Row-major dense matrix. Every entry lies in `field`.
#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub echelon: Mat<F>,
    pub rank: usize,
    /// Invertible matrix with `transform * m == echelon`.
    pub transform: Mat<F>,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// Output of [`Mat::solve`]. `particular` is `None` for an inconsistent
/// system; `kernel` always holds a basis of `{v : a v = 0}` as columns.
#[derive(Clone, Debug)]
pub struct Solution<F: Field> {
    pub particular: Option<Mat<F>>,
    pub kernel: Mat<F>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Mat { field: field.clone(), rows, cols, data }
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { field: field.clone(), rows, cols, data }
    }

    /// Integer entries, reduced into the field.
    pub fn from_ints(field: &F, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(field, r, c, |i, j| field.from_int(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &F::Elem, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if self.field.is_zero(s) {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !self.field.is_zero(b) {
                *a = self.field.add(a, &self.field.mul(s, b));
            }
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |r, c| self.at(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), self.cols, |r, c| self.at(rows[r], c).clone())
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_fn(&self.field, self.rows + other.rows, self.cols + other.cols, |r, c| {
            if r < self.rows && c < self.cols {
                self.at(r, c).clone()
            } else if r >= self.rows && c >= self.cols {
                other.at(r - self.rows, c - self.cols).clone()
            } else {
                self.field.zero()
            }
        })
    }

    /// In-place Gauss-Jordan elimination. Pivots are chosen leftmost column
    /// first, and within a column the first nonzero row at or below the
    /// current one. Returns the pivot columns.
    fn eliminate(&mut self, companion: Option<&mut Mat<F>>, limit_cols: usize) -> Vec<usize> {
        let f = self.field.clone();
        let mut companion = companion;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit_cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            if pr != row {
                self.swap_rows(pr, row);
                if let Some(c) = companion.as_deref_mut() {
                    c.swap_rows(pr, row);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot is nonzero");
            self.scale_row(row, &inv);
            if let Some(c) = companion.as_deref_mut() {
                c.scale_row(row, &inv);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.at(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let neg = f.neg(&factor);
                self.add_row_multiple(r, row, &neg);
                if let Some(c) = companion.as_deref_mut() {
                    c.add_row_multiple(r, row, &neg);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &F::Elem) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = self.field.mul(&self.data[idx], s);
        }
    }

    /// row[target] += s * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, s: &F::Elem) {
        for c in 0..self.cols {
            let b = &self.data[source * self.cols + c];
            if self.field.is_zero(b) {
                continue;
            }
            let v = self.field.mul(s, b);
            let idx = target * self.cols + c;
            self.data[idx] = self.field.add(&self.data[idx], &v);
        }
    }

    pub fn rref(&self) -> Rref<F> {
        let mut echelon = self.clone();
        let mut transform = Mat::identity(&self.field, self.rows);
        let pivots = echelon.eliminate(Some(&mut transform), self.cols);
        Rref { rank: pivots.len(), echelon, transform, pivots }
    }

    /// Reduced echelon form and pivot columns without tracking the transform.
    pub fn echelon(&self) -> (Mat<F>, Vec<usize>) {
        let mut echelon = self.clone();
        let pivots = echelon.eliminate(None, self.cols);
        (echelon, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Columns spanning the null space, one per free column of the RREF.
    pub fn kernel_basis(&self) -> Mat<F> {
        let (ech, pivots) = self.echelon();
        kernel_from_echelon(&ech, &pivots, self.cols)
    }

    /// Solves `self * x = b` for a matrix right-hand side.
    pub fn solve(&self, b: &Mat<F>) -> Solution<F> {
        assert_eq!(self.rows, b.rows, "solve needs matching row counts");
        let aug = self.hstack(b);
        let mut ech = aug.clone();
        let pivots_all = ech.eliminate(None, self.cols + b.cols);
        let consistent = pivots_all.iter().all(|&p| p < self.cols);
        let pivots: Vec<usize> = pivots_all.iter().copied().filter(|&p| p < self.cols).collect();
        let a_part = ech.select_columns(&(0..self.cols).collect::<Vec<_>>());
        let kernel = kernel_from_echelon(&a_part, &pivots, self.cols);
        let particular = consistent.then(|| {
            let mut x = Mat::zeros(&self.field, self.cols, b.cols);
            for (r, &p) in pivots.iter().enumerate() {
                for j in 0..b.cols {
                    x.set(p, j, ech.at(r, self.cols + j).clone());
                }
            }
            x
        });
        Solution { particular, kernel }
    }

    /// Solves `self * x = v` for a single vector.
    pub fn solve_vec(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let b = Mat::from_columns(&self.field, self.rows, &[v.to_vec()]);
        self.solve(&b).particular.map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        if !self.is_square() {
            return None;
        }
        let r = self.rref();
        (r.rank == self.rows).then_some(r.transform)
    }

    /// `self^k` for square matrices.
    pub fn pow(&self, k: usize) -> Mat<F> {
        let mut acc = Mat::identity(&self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Columns forming a basis of the column space, taken as the pivot
    /// columns of `self`.
    pub fn column_space(&self) -> Mat<F> {
        let (_, pivots) = self.echelon();
        self.select_columns(&pivots)
    }
}

fn kernel_from_echelon<F: Field>(ech: &Mat<F>, pivots: &[usize], cols: usize) -> Mat<F> {
    let f = ech.field();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Mat::zeros(f, cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.set(fc, j, f.one());
        for (r, &p) in pivots.iter().enumerate() {
            k.set(p, j, f.neg(ech.at(r, fc)));
        }
    }
    k
}

/// Canonical basis of a subspace of `F^n` spanned by the given vectors:
/// the nonzero rows of the reduced echelon form.
pub fn canonical_span<F: Field>(field: &F, n: usize, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_fn(field, vectors.len(), n, |r, c| vectors[r][c].clone());
    let (ech, pivots) = m.echelon();
    (0..pivots.len()).map(|r| ech.row(r).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rref_identity() {
        let f = f5();
        let id = Mat::identity(&f, 2);
        let r = id.rref();
        assert_eq!(r.echelon, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.transform, id);
    }

    #[test]
    fn rref_zero() {
        let f = f5();
        let z = Mat::zeros(&f, 3, 4);
        let r = z.rref();
        assert_eq!(r.echelon, z);
        assert_eq!(r.rank, 0);
        assert_eq!(r.transform, Mat::identity(&f, 3));
    }

    #[test]
    fn rref_rank_one() {
        let f = f5();
        let m = Mat::from_ints(&f, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.transform.mul(&m), r.echelon);
        assert_eq!(r.echelon, Mat::from_ints(&f, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn solve_identity() {
        let f = f5();
        let b = Mat::from_ints(&f, &[&[3, 1], &[4, 0]]);
        let s = Mat::identity(&f, 2).solve(&b);
        assert_eq!(s.particular, Some(b));
        assert_eq!(s.kernel.cols(), 0);
    }

    #[test]
    fn solve_zero_system() {
        let f = f5();
        let s = Mat::zeros(&f, 2, 2).solve(&Mat::zeros(&f, 2, 1));
        assert_eq!(s.particular, Some(Mat::zeros(&f, 2, 1)));
        assert_eq!(s.kernel.cols(), 2);
    }

    #[test]
    fn solve_inconsistent() {
        let f = PrimeField::new(3).unwrap();
        let a = Mat::from_ints(&f, &[&[1, 1], &[0, 0]]);
        let b = Mat::from_ints(&f, &[&[2], &[1]]);
        assert!(a.solve(&b).particular.is_none());
    }

    #[test]
    fn kernel_examples() {
        let f = f5();
        assert_eq!(Mat::identity(&f, 3).kernel_basis().cols(), 0);
        assert_eq!(Mat::zeros(&f, 4, 4).kernel_basis().cols(), 4);
        let k = Mat::from_ints(&f, &[&[1, 2]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        // proportional to (3, 1)
        assert_eq!(k.column(0), vec![3, 1]);
    }

    #[test]
    fn rational_inverse() {
        let q = Rationals;
        let m = Mat::from_ints(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(&q, 2));
        let half = q.from_ratio(1, 2).unwrap();
        let m2 = Mat::from_ints(&q, &[&[2]]);
        assert_eq!(m2.inverse().unwrap().at(0, 0), &half);
    }
}
