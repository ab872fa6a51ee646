use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{to_fraction_string, Rational};

/// Dense square matrix of rationals, stored row-major, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        ExactMatrix { dim, entries }
    }

    /// Hankel matrix `entry(i, j) = seq[i + j]`; `seq` needs `2 dim - 1` terms.
    pub fn hankel(seq: &[Rational], dim: usize) -> Self {
        assert!(dim == 0 || seq.len() >= 2 * dim - 1, "Hankel sequence too short");
        Self::from_fn(dim, |i, j| seq[i + j].clone())
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {dim}",
                rows[bad].len()
            )));
        }
        Ok(ExactMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// Number of rows (= columns). A moment matrix of order `n` has `dim = n + 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.rows().map(<[Rational]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    /// First `(i, j)` with `entry(i, j) != entry(j, i)`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} x {}", self.dim, other.dim)));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix times scalar.
    pub fn scale(&self, s: &Rational) -> Self {
        ExactMatrix { dim: self.dim, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        let n = self.dim;
        self.entries.iter().enumerate().map(move |(k, v)| ((k / n, k % n), v))
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, other: &ExactMatrix) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        self.iter().zip(other.iter()).find(|(a, b)| a.1 != b.1).map(|(a, _)| a.0)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.dim && j < self.dim, "index ({i}, {j}) out of range");
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.dim && j < self.dim, "index ({i}, {j}) out of range");
        &mut self.entries[i * self.dim + j]
    }
}

impl fmt::Display for ExactMatrix {
    /// Right-aligned columns of `p/q` entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(to_fraction_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format!("{:>width$}", cells[i * self.dim + j]))
                .collect();
            writeln!(f, "{}", row.join("  "))?;
        }
        Ok(())
    }
}
