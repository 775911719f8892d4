use std::fmt;

use serde::Serialize;

use super::DivisorClass;

/// Small dense integer matrix. Column `j` holds the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows }
    }

    /// Build from the images of the basis vectors.
    pub fn from_columns(cols: &[DivisorClass]) -> Self {
        let n = cols.first().map_or(0, DivisorClass::rank);
        let rows = (0..n).map(|r| cols.iter().map(|c| c.coeffs()[r]).collect()).collect();
        Self::from_rows(rows)
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, 1)
    }

    pub fn scalar(n: usize, k: i64) -> Self {
        Self::from_rows((0..n).map(|i| (0..n).map(|j| if i == j { k } else { 0 }).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.rows[r][c]
    }

    pub fn column(&self, j: usize) -> DivisorClass {
        DivisorClass::new(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn transpose(&self) -> Self {
        let (n, m) = (self.nrows(), self.ncols());
        Self::from_rows((0..m).map(|j| (0..n).map(|i| self.rows[i][j]).collect()).collect())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch");
        let rows = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| (0..self.ncols()).map(|k| self.rows[i][k] * other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        IntMatrix { rows }
    }

    pub fn apply(&self, v: &DivisorClass) -> DivisorClass {
        assert_eq!(self.ncols(), v.rank(), "dimension mismatch");
        DivisorClass::new(
            self.rows
                .iter()
                .map(|row| row.iter().zip(v.coeffs()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
