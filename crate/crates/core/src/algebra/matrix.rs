//! Dense matrices over the exact fraction field, with Gaussian elimination
//! that picks pivots of least polynomial complexity to curb coefficient
//! growth in symbolic computations.

use super::element::Element;
use crate::exact::Frac;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Frac>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Frac::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Frac::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Frac>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: &[Element]) -> Matrix {
        let c = cols.len();
        let r = cols.first().map(|x| x.dim()).unwrap_or(0);
        let mut m = Matrix::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..r {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Frac {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Frac) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Element {
        Element::from_coeffs((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut m = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Frac::zero();
                for k in 0..self.cols {
                    let t = self.get(i, k).mul(other.get(k, j));
                    if !t.is_zero() {
                        acc = acc.add(&t);
                    }
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    /// Column-vector action `M * v`.
    pub fn mul_vec(&self, v: &Element) -> Element {
        assert_eq!(self.cols, v.dim());
        let mut out = Element::zero(self.rows);
        for i in 0..self.rows {
            let mut acc = Frac::zero();
            for k in 0..self.cols {
                let t = self.get(i, k).mul(&v[k]);
                if !t.is_zero() {
                    acc = acc.add(&t);
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn add_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).add(other.get(i, j)));
            }
        }
        m
    }

    pub fn sub_mat(&self, other: &Matrix) -> Matrix {
        self.add_mat(&other.scale(&Frac::from_int(-1)))
    }

    pub fn scale(&self, c: &Frac) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..e {
            out = out.mul_mat(self);
        }
        out
    }

    /// Multiplicative order, up to `max`. `None` when it exceeds the bound.
    pub fn order(&self, max: u32) -> Option<u32> {
        assert!(self.is_square());
        let id = Matrix::identity(self.rows);
        let mut acc = self.clone();
        for k in 1..=max {
            if acc == id {
                return Some(k);
            }
            acc = acc.mul_mat(self);
        }
        None
    }

    fn complexity(f: &Frac) -> u64 {
        (f.num().total_degree() as u64 + f.den().total_degree() as u64) * 256
            + f.num().num_terms() as u64
            + f.den().num_terms() as u64
    }

    /// Reduced row echelon form. Returns `(rref, pivot columns)`.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            // pivot of least complexity among nonzero entries in this column
            let mut best: Option<(usize, u64)> = None;
            for i in row..m.rows {
                let e = m.get(i, col);
                if !e.is_zero() {
                    let c = Self::complexity(e);
                    if best.map(|(_, bc)| c < bc).unwrap_or(true) {
                        best = Some((i, c));
                    }
                }
            }
            let Some((pi, _)) = best else { continue };
            if pi != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pi, j).clone();
                    m.set(row, j, b);
                    m.set(pi, j, a);
                }
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in col..m.cols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(i, j).sub(&factor.mul(m.get(row, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the nullspace `{v : Mv = 0}`.
    pub fn kernel(&self) -> Vec<Element> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        let piv_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = Some(prow);
            }
            v
        };
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut vec = Element::zero(self.cols);
            vec[free] = Frac::one();
            for (col, p) in piv_of_col.iter().enumerate() {
                if let Some(prow) = p {
                    vec[col] = r.get(*prow, free).neg();
                }
            }
            out.push(vec);
        }
        out
    }

    /// Solves `M x = b` exactly; `None` certifies no solution.
    pub fn solve(&self, b: &Element) -> Option<Element> {
        assert_eq!(self.rows, b.dim());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = Element::zero(self.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.get(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Coordinates of `v` in the span of `basis`, if it lies there.
    pub fn coordinates_in_span(basis: &[Element], v: &Element) -> Option<Element> {
        if basis.is_empty() {
            return if v.is_zero() {
                Some(Element::zero(0))
            } else {
                None
            };
        }
        Matrix::from_cols(basis).solve(v)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Frac::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-field elimination with complexity-aware
    /// pivoting.
    pub fn det(&self) -> Frac {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Frac::one();
        for col in 0..n {
            let mut best: Option<(usize, u64)> = None;
            for i in col..n {
                let e = m.get(i, col);
                if !e.is_zero() {
                    let c = Self::complexity(e);
                    if best.map(|(_, bc)| c < bc).unwrap_or(true) {
                        best = Some((i, c));
                    }
                }
            }
            let Some((pi, _)) = best else {
                return Frac::zero();
            };
            if pi != col {
                det = det.neg();
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pi, j).clone();
                    m.set(col, j, b);
                    m.set(pi, j, a);
                }
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for i in (col + 1)..n {
                let factor = m.get(i, col).mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(i, j).sub(&factor.mul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Determinant by cofactor expansion; the independent cross-check used
    /// on small Gram matrices.
    pub fn det_cofactor(&self) -> Frac {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Frac::one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = Frac::zero();
        for j in 0..n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let mut minor = Matrix::zero(n - 1, n - 1);
            for i in 1..n {
                let mut cj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    minor.set(i - 1, cj, self.get(i, k).clone());
                    cj += 1;
                }
            }
            let term = a.mul(&minor.det_cofactor());
            if j % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }

    /// Leading principal minors, in order of size 1..=n.
    pub fn leading_principal_minors(&self) -> Vec<Frac> {
        assert!(self.is_square());
        (1..=self.rows)
            .map(|k| {
                let mut sub = Matrix::zero(k, k);
                for i in 0..k {
                    for j in 0..k {
                        sub.set(i, j, self.get(i, j).clone());
                    }
                }
                sub.det()
            })
            .collect()
    }

    pub fn substitute(
        &self,
        assign: &std::collections::BTreeMap<crate::exact::Var, Frac>,
    ) -> Result<Matrix, crate::exact::ExactError> {
        let mut data = Vec::with_capacity(self.data.len());
        for f in &self.data {
            data.push(f.substitute(assign)?);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Frac {
        Frac::rat(n, d)
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(4).kernel().is_empty());
    }

    #[test]
    fn solve_identity() {
        let b = Element::from_coeffs(vec![q(1, 2), q(-3, 1), q(0, 1)]);
        assert_eq!(Matrix::identity(3).solve(&b), Some(b));
    }

    #[test]
    fn inconsistent_system_certified() {
        // x = 1 and x = 2 has no solution.
        let m = Matrix::from_rows(vec![vec![q(1, 1)], vec![q(1, 1)]]);
        let b = Element::from_coeffs(vec![q(1, 1), q(2, 1)]);
        assert_eq!(m.solve(&b), None);
    }

    #[test]
    fn det_matches_cofactor() {
        let m = Matrix::from_rows(vec![
            vec![q(2, 1), q(1, 3), q(0, 1)],
            vec![q(1, 1), q(1, 1), q(4, 1)],
            vec![q(0, 1), q(5, 2), q(1, 1)],
        ]);
        assert_eq!(m.det(), m.det_cofactor());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), Matrix::identity(3));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = Matrix::from_rows(vec![
            vec![q(1, 1), q(2, 1), q(3, 1)],
            vec![q(2, 1), q(4, 1), q(6, 1)],
        ]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).is_zero());
        }
        assert_eq!(m.rank(), 1);
    }
}
