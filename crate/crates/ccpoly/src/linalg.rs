//! Exact rational linear algebra: rank, affine rank and affine-hull
//! membership.
//!
//! Rank decisions are made over the integers after clearing denominators,
//! using fraction-free (Bareiss) elimination so intermediate entries stay
//! polynomially bounded. Nothing here touches floating point.

use crate::error::{invalid, Error, Result};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(invalid("rows of unequal length"));
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Exact rank via fraction-free Gaussian elimination on the
    /// denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| clear_denominators((0..self.cols).map(|c| self.get(r, c))))
            .collect();
        bareiss_rank(rows)
    }
}

/// Scales a rational row by the lcm of its denominators.
fn clear_denominators<'a>(row: impl Iterator<Item = &'a Rational>) -> Vec<BigInt> {
    let entries: Vec<&Rational> = row.collect();
    let mut lcm = BigInt::one();
    for e in &entries {
        lcm = lcm.lcm(e.denom());
    }
    entries
        .iter()
        .map(|e| e.numer() * (&lcm / e.denom()))
        .collect()
}

/// Fraction-free (Bareiss) elimination; consumes the rows and returns the
/// rank. Pivots are searched over the whole remaining submatrix, so zero
/// pivots are handled by row and column swaps.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut col_order: Vec<usize> = (0..cols).collect();
    let mut prev_pivot = BigInt::one();
    let mut r = 0;
    while r < rows.min(cols) {
        // Find a nonzero pivot in the remaining submatrix.
        let mut pivot = None;
        'search: for i in r..rows {
            for jj in r..cols {
                if !m[i][col_order[jj]].is_zero() {
                    pivot = Some((i, jj));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(r, pi);
        col_order.swap(r, pj);

        let pc = col_order[r];
        for i in (r + 1)..rows {
            for jj in (r + 1)..cols {
                let c = col_order[jj];
                let num = &m[r][pc] * &m[i][c] - &m[i][pc] * &m[r][c];
                m[i][c] = num / &prev_pivot;
            }
            m[i][pc] = BigInt::zero();
        }
        prev_pivot = m[r][pc].clone();
        r += 1;
    }
    r
}

/// Incremental exact rank over the integers: rows are reduced against a
/// growing echelon basis, with gcd normalization to keep entries small.
/// Suited to streaming many candidate rows whose rank is capped by the
/// column count.
#[derive(Debug, Default)]
pub struct RankAccumulator {
    /// Echelon rows, each normalized; `pivots[i]` is the leading column of
    /// `basis[i]`, strictly increasing is not required (insertion order).
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl RankAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` against the basis; if a nonzero remainder survives it
    /// joins the basis and the rank grows. Returns whether the rank grew.
    pub fn add_row(&mut self, mut row: Vec<BigInt>) -> bool {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            // row := b[p]*row - row[p]*b, eliminating column p.
            let factor_row = b[p].clone();
            let factor_b = row[p].clone();
            for (x, y) in row.iter_mut().zip(b.iter()) {
                *x = &*x * &factor_row - y * &factor_b;
            }
        }
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize_row(&mut row);
        self.basis.push(row);
        self.pivots.push(pivot);
        true
    }

    pub fn add_rational_row(&mut self, row: &[Rational]) -> bool {
        self.add_row(clear_denominators(row.iter()))
    }
}

fn normalize_row(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = if g.is_zero() { x.abs() } else { g.gcd(x) };
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// Dimension of the affine hull of the given points: the rank of the
/// differences against the first point. A single point has affine rank 0.
pub fn affine_rank(points: &[Vec<Rational>]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(invalid("affine rank of an empty point set"));
    };
    let dim = first.len();
    let mut acc = RankAccumulator::new();
    for p in &points[1..] {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
        let diff: Vec<Rational> = p.iter().zip(first.iter()).map(|(a, b)| a - b).collect();
        acc.add_rational_row(&diff);
        if acc.rank() == dim {
            break;
        }
    }
    Ok(acc.rank())
}

/// True iff `y` is an affine combination of `points`, decided by an exact
/// rank comparison.
pub fn in_affine_hull(y: &[Rational], points: &[Vec<Rational>]) -> Result<bool> {
    let Some(first) = points.first() else {
        return Err(invalid("affine hull of an empty point set"));
    };
    if y.len() != first.len() {
        return Err(Error::DimensionMismatch {
            expected: first.len(),
            got: y.len(),
        });
    }
    let base = affine_rank(points)?;
    let mut extended: Vec<Vec<Rational>> = points.to_vec();
    extended.push(y.to_vec());
    Ok(affine_rank(&extended)? == base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zero(4, 5).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(m(&[&[0, 1], &[1, 0], &[1, 1]]).rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let mut a = RationalMatrix::zero(2, 2);
        a.set(0, 0, ratio(1, 2));
        a.set(0, 1, ratio(1, 3));
        a.set(1, 0, ratio(3, 2));
        a.set(1, 1, rat(1));
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn affine_rank_basics() {
        let e = |i: usize| -> Vec<Rational> {
            (0..3).map(|j| if i == j { rat(1) } else { rat(0) }).collect()
        };
        assert_eq!(affine_rank(&[e(0), e(1), e(2)]).unwrap(), 2);
        assert_eq!(affine_rank(&[e(1)]).unwrap(), 0);
        assert!(affine_rank(&[]).is_err());
    }

    #[test]
    fn affine_rank_grows_off_hyperplane() {
        // Points with coordinate sum 2, then one with sum 1.
        let pts = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(1)],
        ];
        let base = affine_rank(&pts).unwrap();
        let mut ext = pts.clone();
        ext.push(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(affine_rank(&ext).unwrap(), base + 1);
    }

    #[test]
    fn affine_hull_membership() {
        let p1 = vec![rat(0), rat(0)];
        let p2 = vec![rat(2), rat(2)];
        let mid = vec![rat(1), rat(1)];
        assert!(in_affine_hull(&mid, &[p1.clone(), p2.clone()]).unwrap());
        assert!(in_affine_hull(&p1, &[p1.clone(), p2.clone()]).unwrap());
        let off = vec![rat(1), rat(2)];
        assert!(!in_affine_hull(&off, &[p1.clone(), p2]).unwrap());
        assert!(in_affine_hull(&[rat(1)], &[p1]).is_err());
    }

    #[test]
    fn accumulator_matches_bareiss() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
            vec![rat(1), rat(3), rat(4)],
        ];
        let mut acc = RankAccumulator::new();
        for r in &rows {
            acc.add_rational_row(r);
        }
        assert_eq!(acc.rank(), RationalMatrix::from_rows(rows).unwrap().rank());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_equals_transpose_rank(entries in proptest::collection::vec(-3i64..=3, 20)) {
            let rows: Vec<Vec<Rational>> = entries
                .chunks(5)
                .map(|ch| ch.iter().map(|&x| rat(x)).collect())
                .collect();
            let mat = RationalMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(mat.rank(), mat.transpose().rank());
        }

        #[test]
        fn affine_rank_translation_invariant(
            entries in proptest::collection::vec(-3i64..=3, 16),
            shift in proptest::collection::vec(-5i64..=5, 4),
        ) {
            let pts: Vec<Vec<Rational>> = entries
                .chunks(4)
                .map(|ch| ch.iter().map(|&x| rat(x)).collect())
                .collect();
            let shifted: Vec<Vec<Rational>> = pts
                .iter()
                .map(|p| p.iter().zip(&shift).map(|(a, &s)| a + rat(s)).collect())
                .collect();
            prop_assert_eq!(affine_rank(&pts).unwrap(), affine_rank(&shifted).unwrap());
        }

        #[test]
        fn accumulator_agrees_with_bareiss_random(entries in proptest::collection::vec(-2i64..=2, 24)) {
            let rows: Vec<Vec<Rational>> = entries
                .chunks(4)
                .map(|ch| ch.iter().map(|&x| rat(x)).collect())
                .collect();
            let mut acc = RankAccumulator::new();
            for r in &rows {
                acc.add_rational_row(r);
            }
            let mat = RationalMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(acc.rank(), mat.rank());
        }
    }

    #[test]
    fn linear_vs_affine_on_nonzero_sum_hyperplane() {
        // On the hyperplane 1'x = k with k != 0, affine independence of a
        // subset coincides with its linear independence, hence
        // affine_rank + 1 = rank for any nonempty point set there.
        let pts = vec![
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), rat(2), rat(0)],
            vec![rat(0), rat(0), rat(2)],
        ];
        let mat = RationalMatrix::from_rows(pts.clone()).unwrap();
        assert_eq!(affine_rank(&pts).unwrap() + 1, mat.rank());

        // Holds for dependent sets on the hyperplane too (collinear triple).
        let dep = vec![
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), rat(2), rat(0)],
            vec![rat(1), rat(1), rat(0)],
        ];
        let dep_mat = RationalMatrix::from_rows(dep.clone()).unwrap();
        assert_eq!(dep_mat.rank(), 2);
        assert_eq!(affine_rank(&dep).unwrap(), 1);
        assert_eq!(affine_rank(&dep).unwrap() + 1, dep_mat.rank());

        // On the zero-sum hyperplane the correspondence breaks.
        let zero_sum = vec![
            vec![rat(1), rat(-1), rat(0)],
            vec![rat(2), rat(-2), rat(0)],
        ];
        let zmat = RationalMatrix::from_rows(zero_sum.clone()).unwrap();
        assert_eq!(zmat.rank(), 1);
        assert_eq!(affine_rank(&zero_sum).unwrap() + 1, 2);
    }
}
