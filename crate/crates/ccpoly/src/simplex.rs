//! Exact rational LP: dense two-phase primal simplex with Bland's rule.
//!
//! Bland's pivoting rule guarantees termination without any numerical
//! tolerance, which is the point: every basis decision here is exact, so
//! the optimum returned is the true rational optimum. Dense tableaus are
//! fine at the problem sizes this crate targets.

use crate::error::{invalid, Error, Result};
use crate::inequality::{LinearInequality, Sense};
use crate::rational::{rat, Rational};
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    /// Cannot occur once the box rows are present; reported for raw
    /// systems.
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<Vec<Rational>>,
}

/// A constraint row in raw form.
#[derive(Debug, Clone)]
pub struct LpRow {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

impl LpRow {
    pub fn from_inequality(ineq: &LinearInequality) -> LpRow {
        LpRow {
            coeffs: ineq.coeffs.clone(),
            sense: ineq.sense,
            rhs: ineq.rhs.clone(),
        }
    }
}

/// Minimizes `objective . x` subject to the constraints, 0 <= x <= 1.
/// The box bounds are part of the contract, so the system is never
/// unbounded; infeasibility is detected and reported exactly.
pub fn lp_solve(constraints: &[LinearInequality], objective: &[Rational]) -> Result<LpOutcome> {
    let Some(first) = constraints.first() else {
        return Err(invalid("no constraints; the box alone needs an explicit space"));
    };
    let nvars = first.coeffs.len();
    if objective.len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            got: objective.len(),
        });
    }
    let mut rows: Vec<LpRow> = Vec::with_capacity(constraints.len() + nvars);
    for ineq in constraints {
        if ineq.coeffs.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: ineq.coeffs.len(),
            });
        }
        rows.push(LpRow::from_inequality(ineq));
    }
    for j in 0..nvars {
        let mut coeffs = vec![rat(0); nvars];
        coeffs[j] = rat(1);
        rows.push(LpRow {
            coeffs,
            sense: Sense::Le,
            rhs: rat(1),
        });
    }
    let outcome = lp_solve_rows(&rows, objective, nvars)?;
    debug_assert!(outcome.status != LpStatus::Unbounded);
    Ok(outcome)
}

/// Minimizes over explicit rows with x >= 0 (no implicit upper bounds).
/// Callers must ensure boundedness or handle the Unbounded status.
pub fn lp_solve_rows(rows: &[LpRow], objective: &[Rational], nvars: usize) -> Result<LpOutcome> {
    let mut tableau = Tableau::build(rows, nvars)?;
    if !tableau.phase_one()? {
        return Ok(LpOutcome {
            status: LpStatus::Infeasible,
            value: None,
            point: None,
        });
    }
    match tableau.phase_two(objective)? {
        true => {
            let point = tableau.extract(nvars);
            let value = objective
                .iter()
                .zip(&point)
                .map(|(c, x)| c * x)
                .fold(Rational::zero(), |a, b| a + b);
            Ok(LpOutcome {
                status: LpStatus::Optimal,
                value: Some(value),
                point: Some(point),
            })
        }
        false => Ok(LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            point: None,
        }),
    }
}

struct Tableau {
    /// m x ncols coefficient matrix with identity on the basis columns.
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
    artificial_start: usize,
}

impl Tableau {
    fn build(input: &[LpRow], nvars: usize) -> Result<Tableau> {
        let m = input.len();
        // Column layout: structural | slack/surplus | artificial.
        let mut slack_count = 0usize;
        let mut artificial_count = 0usize;
        let mut normalized: Vec<(Vec<Rational>, Sense, Rational)> = Vec::with_capacity(m);
        for row in input {
            if row.coeffs.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: row.coeffs.len(),
                });
            }
            // Make the right-hand side nonnegative.
            let (coeffs, sense, rhs) = if row.rhs < Rational::zero() {
                let flipped = match row.sense {
                    Sense::Le => Sense::Ge,
                    Sense::Ge => Sense::Le,
                    Sense::Eq => Sense::Eq,
                };
                (
                    row.coeffs.iter().map(|c| -c).collect(),
                    flipped,
                    -row.rhs.clone(),
                )
            } else {
                (row.coeffs.clone(), row.sense, row.rhs.clone())
            };
            match sense {
                Sense::Le | Sense::Ge => slack_count += 1,
                Sense::Eq => {}
            }
            if sense != Sense::Le {
                artificial_count += 1;
            }
            normalized.push((coeffs, sense, rhs));
        }
        let artificial_start = nvars + slack_count;
        let ncols = artificial_start + artificial_count;

        let mut rows = vec![vec![Rational::zero(); ncols]; m];
        let mut rhs = vec![Rational::zero(); m];
        let mut basis = vec![usize::MAX; m];
        let mut next_slack = nvars;
        let mut next_artificial = artificial_start;
        for (i, (coeffs, sense, b)) in normalized.into_iter().enumerate() {
            rows[i][..nvars].clone_from_slice(&coeffs);
            rhs[i] = b;
            match sense {
                Sense::Le => {
                    rows[i][next_slack] = rat(1);
                    basis[i] = next_slack;
                    next_slack += 1;
                }
                Sense::Ge => {
                    rows[i][next_slack] = rat(-1);
                    next_slack += 1;
                    rows[i][next_artificial] = rat(1);
                    basis[i] = next_artificial;
                    next_artificial += 1;
                }
                Sense::Eq => {
                    rows[i][next_artificial] = rat(1);
                    basis[i] = next_artificial;
                    next_artificial += 1;
                }
            }
        }
        Ok(Tableau {
            rows,
            rhs,
            basis,
            ncols,
            artificial_start,
        })
    }

    fn pivot(&mut self, row: usize, col: usize, reduced: &mut [Rational], obj: &mut Rational) {
        let pivot_value = self.rows[row][col].clone();
        debug_assert!(!pivot_value.is_zero());
        for v in self.rows[row].iter_mut() {
            *v /= &pivot_value;
        }
        self.rhs[row] /= &pivot_value;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        if !reduced[col].is_zero() {
            let factor = reduced[col].clone();
            for (r, p) in reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *r -= &factor * p;
                }
            }
            // Entering at level pivot_rhs changes the objective at the
            // reduced-cost rate.
            *obj += &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Runs the simplex loop on the current reduced-cost row with Bland's
    /// rule: smallest improving column enters, smallest basic index
    /// leaves. Returns false on unboundedness.
    fn iterate(&mut self, reduced: &mut [Rational], obj: &mut Rational, allow: usize) -> bool {
        loop {
            let entering = (0..allow).find(|&j| reduced[j] < Rational::zero());
            let Some(col) = entering else {
                return true;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rational> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col] > Rational::zero() {
                    let ratio = &self.rhs[i] / &self.rows[i][col];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(row) = leave else {
                return false;
            };
            self.pivot(row, col, reduced, obj);
        }
    }

    /// Phase one: minimize the artificial sum. Returns false when the
    /// system is infeasible.
    fn phase_one(&mut self) -> Result<bool> {
        if self.artificial_start == self.ncols {
            return Ok(true);
        }
        // Reduced costs of minimize sum(artificials): c_j minus the sum of
        // rows with an artificial basis variable.
        let mut reduced = vec![Rational::zero(); self.ncols];
        for j in self.artificial_start..self.ncols {
            reduced[j] = rat(1);
        }
        let mut obj = Rational::zero();
        for i in 0..self.rows.len() {
            if self.basis[i] >= self.artificial_start {
                for j in 0..self.ncols {
                    let v = self.rows[i][j].clone();
                    reduced[j] -= v;
                }
                obj += &self.rhs[i];
            }
        }
        if !self.iterate(&mut reduced, &mut obj, self.ncols) {
            return Err(Error::Internal("phase one cannot be unbounded".into()));
        }
        // Recompute the artificial sum directly; the incremental value is
        // only advisory.
        let artificial_sum: Rational = (0..self.rows.len())
            .filter(|&i| self.basis[i] >= self.artificial_start)
            .map(|i| self.rhs[i].clone())
            .fold(Rational::zero(), |a, b| a + b);
        if !artificial_sum.is_zero() {
            return Ok(false);
        }
        // Drive residual artificials out of the basis: pivot on any real
        // column of their row, or drop the row when it is identically zero.
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.artificial_start {
                let col = (0..self.artificial_start).find(|&j| !self.rows[i][j].is_zero());
                match col {
                    Some(c) => {
                        let mut dummy = vec![Rational::zero(); self.ncols];
                        let mut dobj = Rational::zero();
                        self.pivot(i, c, &mut dummy, &mut dobj);
                        i += 1;
                    }
                    None => {
                        // Redundant row.
                        self.rows.remove(i);
                        self.rhs.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        Ok(true)
    }

    /// Phase two with the real objective; artificial columns stay banned.
    /// Returns false on unboundedness.
    fn phase_two(&mut self, objective: &[Rational]) -> Result<bool> {
        let mut cost = vec![Rational::zero(); self.ncols];
        cost[..objective.len()].clone_from_slice(objective);
        let mut reduced = cost.clone();
        let mut obj = Rational::zero();
        for i in 0..self.rows.len() {
            let cb = cost[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.ncols {
                let v = self.rows[i][j].clone();
                reduced[j] -= &cb * v;
            }
            obj += &cb * &self.rhs[i];
        }
        Ok(self.iterate(&mut reduced, &mut obj, self.artificial_start))
    }

    fn extract(&self, nvars: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); nvars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < nvars {
                x[b] = self.rhs[i].clone();
            }
        }
        x
    }
}
