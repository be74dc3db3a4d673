//! Dense row-major matrices over a finite field: reduced row echelon form,
//! nullspace bases, and the handful of products the code constructions need.

use std::sync::Arc;

use crate::gf::{Fe, Field};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Output of Gaussian elimination: the echelon matrix plus its pivot map.
pub struct Echelon {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(field: Arc<Field>, rows: Vec<Vec<Fe>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<Fe> = rows.into_iter().flatten().collect();
        for &x in &data {
            if x.0 >= field.q() {
                return Err(Error::ElementOutOfRange {
                    index: x.0 as u64,
                    q: field.q(),
                });
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Rows selected by index, in the order given.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// First `cols` columns of every row.
    pub fn truncate_cols(&self, cols: usize) -> Matrix {
        assert!(cols <= self.cols);
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.row(i)[..cols]);
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if !self.field.same_as(&other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.get(l, j));
                    out.set(i, j, f.add(out.get(i, j), t));
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with deterministic pivoting: for each
    /// column, the first usable row from the top becomes the pivot.
    pub fn rref(&self) -> Echelon {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(pr, j));
                m.set(r, j, b);
                m.set(pr, j, a);
            }
            let scale = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                m.set(r, j, f.mul(scale, m.get(r, j)));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let t = f.mul(factor, m.get(r, j));
                    m.set(i, j, f.sub(m.get(i, j), t));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the right kernel {v : M v^T = 0}, one row per free
    /// column, in ascending free-column order. (cols - rank) rows.
    pub fn nullspace(&self) -> Matrix {
        let f = self.field.clone();
        let ech = self.rref();
        let pivot_of: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (row, &col) in ech.pivots.iter().enumerate() {
                map[col] = Some(row);
            }
            map
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| pivot_of[c].is_none()).collect();
        let mut out = Matrix::zeros(f.clone(), free.len(), self.cols);
        for (vi, &fc) in free.iter().enumerate() {
            out.set(vi, fc, Fe::ONE);
            for (row, &pc) in ech.pivots.iter().enumerate() {
                out.set(vi, pc, f.neg(ech.matrix.get(row, fc)));
            }
        }
        out
    }

    /// The row basis (nonzero rows of the reduced echelon form).
    pub fn row_basis(&self) -> Matrix {
        let ech = self.rref();
        let idx: Vec<usize> = (0..ech.rank).collect();
        ech.matrix.select_rows(&idx)
    }

    /// Do two matrices span the same row space?
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if !self.field.same_as(&other.field) || self.cols != other.cols {
            return false;
        }
        let a = self.row_basis();
        let b = other.row_basis();
        a.rows == b.rows && a.data == b.data
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.0.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
