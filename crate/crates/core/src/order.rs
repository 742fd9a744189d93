//! Admissible monomial orders: lex, grlex, grevlex and integer matrix orders.

use crate::monomial::Monomial;
use std::cmp::Ordering;
use thiserror::Error;

/// A total admissible order on monomials (1 is minimal, multiplication-compatible).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    /// Rows applied top-down; compares weighted dot products lexicographically.
    Matrix(MatrixOrder),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOrder {
    rows: Vec<Vec<i64>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("matrix order must have rank {expected}, got {actual}")]
    RankDeficient { expected: usize, actual: usize },
    #[error("matrix order rows must all have length {0}")]
    RaggedRows(usize),
    #[error("matrix order does not make 1 minimal: variable {0} compares below 1")]
    NotAdmissible(usize),
}

impl MatrixOrder {
    /// Validates shape, full rank, and admissibility (every variable above 1).
    pub fn new(rows: Vec<Vec<i64>>, nvars: usize) -> Result<Self, OrderError> {
        if rows.iter().any(|r| r.len() != nvars) {
            return Err(OrderError::RaggedRows(nvars));
        }
        let rank = rank_of(&rows);
        if rank < nvars {
            return Err(OrderError::RankDeficient {
                expected: nvars,
                actual: rank,
            });
        }
        // 1 must be minimal: for each variable the first row with a nonzero
        // entry in that column must be positive there.
        for j in 0..nvars {
            let lead = rows.iter().map(|r| r[j]).find(|&w| w != 0);
            match lead {
                Some(w) if w > 0 => {}
                _ => return Err(OrderError::NotAdmissible(j)),
            }
        }
        Ok(MatrixOrder { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for row in &self.rows {
            let wa: i64 = row
                .iter()
                .zip(a.exponents())
                .map(|(w, &e)| w * e as i64)
                .sum();
            let wb: i64 = row
                .iter()
                .zip(b.exponents())
                .map(|(w, &e)| w * e as i64)
                .sum();
            match wa.cmp(&wb) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl MonomialOrder {
    /// Compares two monomials; `Greater` means `a` is the larger monomial.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars(), "dimension mismatch");
        match self {
            MonomialOrder::Lex => lex_cmp(a.exponents(), b.exponents()),
            MonomialOrder::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex_cmp(a.exponents(), b.exponents())),
            MonomialOrder::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail_cmp(a.exponents(), b.exponents())),
            MonomialOrder::Matrix(m) => m.compare(a, b),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// A degree-graded order compares by total degree first.
    pub fn is_graded(&self) -> bool {
        match self {
            MonomialOrder::Lex => false,
            MonomialOrder::GrLex | MonomialOrder::GrevLex => true,
            MonomialOrder::Matrix(m) => {
                let first = &m.rows[0];
                !first.is_empty() && first[0] > 0 && first.iter().all(|&w| w == first[0])
            }
        }
    }

    /// The canonical weight-matrix encoding of a built-in order.
    pub fn canonical_matrix(&self, nvars: usize) -> Vec<Vec<i64>> {
        match self {
            MonomialOrder::Lex => (0..nvars)
                .map(|i| (0..nvars).map(|j| i64::from(i == j)).collect())
                .collect(),
            MonomialOrder::GrLex => {
                let mut rows = vec![vec![1; nvars]];
                for i in 0..nvars.saturating_sub(1) {
                    rows.push((0..nvars).map(|j| i64::from(i == j)).collect());
                }
                rows
            }
            MonomialOrder::GrevLex => {
                let mut rows = vec![vec![1; nvars]];
                for i in (1..nvars).rev() {
                    rows.push((0..nvars).map(|j| if j == i { -1 } else { 0 }).collect());
                }
                rows
            }
            MonomialOrder::Matrix(m) => m.rows.clone(),
        }
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

// Grevlex tie-break: the monomial whose last differing exponent is smaller wins.
fn revlex_tail_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

fn rank_of(rows: &[Vec<i64>]) -> usize {
    // Fraction-free Gaussian elimination over i128.
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let pivot = (row..nrows).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pivot_row = m[row].clone();
        for other in m.iter_mut().skip(row + 1) {
            if other[col] != 0 {
                let (a, b) = (pivot_row[col], other[col]);
                for (x, pv) in other.iter_mut().zip(&pivot_row) {
                    *x = *x * a - pv * b;
                }
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}
