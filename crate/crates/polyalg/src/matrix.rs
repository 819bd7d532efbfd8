use std::collections::HashMap;

use crate::poly::{Poly, Q};

/// Dense matrix of polynomials over a fixed number of variables.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix { rows, cols, nvars, entries: vec![Poly::zero(nvars); rows * cols] }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, Poly::one(nvars));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, nvars: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.nvars(), nvars);
                entries.push(e);
            }
        }
        PolyMatrix { rows, cols, nvars, entries }
    }

    /// Matrix with rational constant entries.
    pub fn from_rational(rows: usize, cols: usize, nvars: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        Self::from_fn(rows, cols, nvars, |i, j| Poly::constant(nvars, f(i, j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Poly) {
        assert_eq!(value.nvars(), self.nvars);
        self.entries[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.as_constant().is_some_and(|c| c == Q::from_integer(1.into()))
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Poly::zero(self.nvars);
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        PolyMatrix { rows: self.rows, cols: self.cols, nvars: self.nvars, entries }
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        PolyMatrix { rows: self.rows, cols: self.cols, nvars: self.nvars, entries }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(rows.len(), cols.len(), self.nvars, |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        let entries: Vec<Poly> = self.entries.iter().map(f).collect();
        let nvars = entries.first().map_or(self.nvars, Poly::nvars);
        PolyMatrix { rows: self.rows, cols: self.cols, nvars, entries }
    }

    /// Sum of the `k`-th powers of a nilpotent matrix scaled by 1/k!, i.e.
    /// exp(self). Panics if the series does not terminate within `rows + 1`
    /// terms.
    pub fn exp_nilpotent(&self) -> PolyMatrix {
        assert_eq!(self.rows, self.cols);
        let mut result = PolyMatrix::identity(self.rows, self.nvars);
        let mut power = PolyMatrix::identity(self.rows, self.nvars);
        for k in 1..=self.rows + 1 {
            power = power.mul(self).scale(&Poly::constant(self.nvars, Q::new(1.into(), (k as i64).into())));
            if power.entries.iter().all(Poly::is_zero) {
                return result;
            }
            result = result.add(&power);
        }
        panic!("matrix is not nilpotent");
    }
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// remaining columns. Suitable for the small sparse minors used here.
pub fn determinant(m: &PolyMatrix) -> Poly {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    assert!(n < 64, "matrix too large for memoized expansion");
    if n == 0 {
        return Poly::one(m.nvars);
    }
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    det_rec(m, 0, (1u64 << n) - 1, &mut memo)
}

fn det_rec(m: &PolyMatrix, row: usize, cols: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
    if row == m.rows {
        return Poly::one(m.nvars);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Poly::zero(m.nvars);
    let mut sign_neg = false;
    for j in 0..m.cols {
        if cols & (1 << j) == 0 {
            continue;
        }
        let a = m.get(row, j);
        if !a.is_zero() {
            let minor = det_rec(m, row + 1, cols & !(1 << j), memo);
            if !minor.is_zero() {
                let term = a * &minor;
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}
