//! Dense matrices over a [`Field`] with Gaussian elimination.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Field, FieldElement, GfError};

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("entry count {len} does not match {rows}x{cols}")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("malformed matrix export: {0}")]
    Format(String),
}

/// Row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<FieldElement>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::Shape {
                rows,
                cols,
                len: data.len(),
            });
        }
        field.ensure(&data)?;
        Ok(Self {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let data: Vec<_> = rows.into_iter().flatten().collect();
        Self::new(field, n, cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Entrywise `a -> a^q`.
    pub fn conjugate(&self, q: u64) -> Self {
        let f = &self.field;
        Self {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.conj(a, q)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = f.zero();
                for t in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, t), other.get(t, j)));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// In-place reduced row echelon form. Pivots are chosen as the first
    /// nonzero entry in each column. Returns the pivot columns.
    pub fn reduce(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn row_basis(&self) -> Matrix {
        let mut m = self.clone();
        let rank = m.reduce().len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    /// Basis of `{ v : M v^T = 0 }`, one vector per row.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let rref = self.row_basis();
        let pivots: Vec<usize> = (0..rref.rows)
            .map(|r| (0..rref.cols).find(|&c| !rref.get(r, c).is_zero()).unwrap())
            .collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(rref.get(r, fc)));
            }
        }
        out
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Matrix) -> bool {
        let base = self.rank();
        self.stack(other).rank() == base
    }

    pub fn same_row_space(&self, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_space_contains(other) && other.row_space_contains(self)
    }

    pub fn to_export(&self) -> MatrixExport {
        MatrixExport {
            field: FieldMeta::of(&self.field),
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|r| self.row(r).iter().map(|&a| self.field.coeffs(a)).collect())
                .collect(),
        }
    }

    pub fn from_export(export: &MatrixExport) -> Result<Matrix, MatrixError> {
        let meta = &export.field;
        let field = Field::with_modulus(meta.p, meta.k, &meta.modulus)?;
        if export.entries.len() != export.rows || export.entries.iter().any(|r| r.len() != export.cols) {
            return Err(MatrixError::Format("entry grid does not match rows/cols".into()));
        }
        let data = export
            .entries
            .iter()
            .flatten()
            .map(|c| field.from_coeffs(c))
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::new(&field, export.rows, export.cols, data)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_export()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Matrix, MatrixError> {
        let export: MatrixExport = serde_json::from_str(s).map_err(|e| MatrixError::Format(e.to_string()))?;
        Self::from_export(&export)
    }

    /// One line per row; each entry is its coefficient tuple joined by `:`
    /// (low degree first), e.g. `2:1` for 2 + X.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        for r in 0..self.rows {
            let cells: Vec<String> = self
                .row(r)
                .iter()
                .map(|&a| {
                    self.field
                        .coeffs(a)
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(":")
                })
                .collect();
            w.write_record(&cells).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }

    pub fn from_csv(field: &Field, s: &str) -> Result<Matrix, MatrixError> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(s.as_bytes());
        let mut rows = Vec::new();
        let mut cols = None;
        for rec in rdr.records() {
            let rec = rec.map_err(|e| MatrixError::Format(e.to_string()))?;
            let row = rec
                .iter()
                .map(|cell| {
                    let coeffs = cell
                        .split(':')
                        .map(|t| t.trim().parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| MatrixError::Format(e.to_string()))?;
                    Ok(field.from_coeffs(&coeffs)?)
                })
                .collect::<Result<Vec<_>, MatrixError>>()?;
            if *cols.get_or_insert(row.len()) != row.len() {
                return Err(MatrixError::Format("ragged rows".into()));
            }
            rows.push(row);
        }
        Matrix::from_rows(field, cols.unwrap_or(0), rows)
    }
}

/// Field description carried alongside exported matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldMeta {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

impl FieldMeta {
    pub fn of(field: &Field) -> Self {
        Self {
            p: field.characteristic(),
            k: field.degree(),
            modulus: field.modulus().to_vec(),
        }
    }
}

/// JSON form of a [`Matrix`]: entries are coefficient vectors, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub field: FieldMeta,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<u32>>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> Field {
        Field::new(3, 2).unwrap()
    }

    fn m(f: &Field, rows: usize, cols: usize, idx: &[u32]) -> Matrix {
        let data = idx.iter().map(|&i| f.from_index(i).unwrap()).collect();
        Matrix::new(f, rows, cols, data).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let f = gf9();
        let a = m(&f, 3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 5, 7]);
        let r = a.rank();
        let ns = a.nullspace();
        assert_eq!(r + ns.rows(), 4);
        assert!(a.mul(&ns.transpose()).is_zero());
    }

    #[test]
    fn shape_errors() {
        let f = gf9();
        assert!(matches!(Matrix::new(&f, 2, 2, vec![f.one()]), Err(MatrixError::Shape { .. })));
        let g = Field::new(5, 1).unwrap();
        assert!(matches!(Matrix::new(&f, 1, 1, vec![g.one()]), Err(MatrixError::Field(_))));
    }

    #[test]
    fn zero_matrix_has_full_nullspace() {
        let f = gf9();
        let z = Matrix::zeros(&f, 2, 5);
        assert_eq!(z.rank(), 0);
        assert!(z.nullspace().same_row_space(&Matrix::identity(&f, 5)));
    }

    #[test]
    fn export_roundtrip() {
        let f = gf9();
        let a = m(&f, 2, 3, &[0, 5, 8, 3, 1, 7]);
        assert_eq!(Matrix::from_json(&a.to_json()).unwrap(), a);
        let csv = a.to_csv();
        assert_eq!(csv.lines().next().unwrap(), "0:0,2:1,2:2");
        assert_eq!(Matrix::from_csv(&f, &csv).unwrap(), a);
    }
}
