//! Dense two-phase simplex over exact rationals.
//!
//! All variables are nonnegative. Pivoting follows Bland's rule, so the
//! method terminates on the heavily degenerate systems produced by
//! short/long constraints.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

/// Maximize `objective · x` subject to the constraints and `x >= 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn maximize(objective: Vec<Rational>) -> Self {
        LinearProgram {
            num_vars: objective.len(),
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars, "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).solve(&self.objective)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    num_vars: usize,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
    width: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut normalized: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
        for c in &lp.constraints {
            let flip = c.rhs.is_negative() || (c.rhs.is_zero() && c.relation == Relation::Ge);
            if flip {
                let rel = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                normalized.push((c.coeffs.iter().map(|a| -a).collect(), rel, -&c.rhs));
            } else {
                normalized.push((c.coeffs.clone(), c.relation, c.rhs.clone()));
            }
        }
        let slack_count = normalized.iter().filter(|r| r.1 != Relation::Eq).count();
        let art_count = normalized.iter().filter(|r| r.1 != Relation::Le).count();
        let first_slack = lp.num_vars;
        let first_artificial = first_slack + slack_count;
        let width = first_artificial + art_count;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut rhs = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_art) = (first_slack, first_artificial);
        for (coeffs, rel, b) in normalized {
            let mut row = coeffs;
            row.resize(width, Rational::zero());
            match rel {
                Relation::Le => {
                    row[next_slack] = Rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Rational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        Tableau {
            rows,
            rhs,
            basis,
            num_vars: lp.num_vars,
            first_artificial,
            width,
        }
    }

    fn solve(mut self, objective: &[Rational]) -> LpOutcome {
        if self.first_artificial < self.width {
            let mut phase1 = vec![Rational::zero(); self.width];
            for c in phase1.iter_mut().skip(self.first_artificial) {
                *c = -Rational::one();
            }
            match self.optimize(&phase1, self.width) {
                Some(v) if v.is_zero() => {}
                Some(_) => return LpOutcome::Infeasible,
                None => unreachable!("phase one is bounded"),
            }
            self.drive_out_artificials();
        }
        let mut cost = vec![Rational::zero(); self.width];
        cost[..self.num_vars].clone_from_slice(objective);
        match self.optimize(&cost, self.first_artificial) {
            Some(value) => {
                let mut point = vec![Rational::zero(); self.num_vars];
                for (r, &b) in self.basis.iter().enumerate() {
                    if b < self.num_vars {
                        point[b] = self.rhs[r].clone();
                    }
                }
                LpOutcome::Optimal { value, point }
            }
            None => LpOutcome::Unbounded,
        }
    }

    /// Maximizes `cost · x` over the current basis using columns
    /// `< allowed`. Returns `None` when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Option<Rational> {
        // reduced[j] = cost_j - sum_r cost_{basis r} a_{r j}
        let mut reduced: Vec<Rational> = cost.to_vec();
        let mut value = Rational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, a) in self.rows[r].iter().enumerate() {
                if !a.is_zero() {
                    reduced[j] -= cb * a;
                }
            }
            value += cb * &self.rhs[r];
        }
        loop {
            let Some(enter) = (0..allowed).find(|&j| reduced[j].is_positive()) else {
                return Some(value);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let (pr, _) = leave?;
            self.pivot(pr, enter);
            let factor = reduced[enter].clone();
            if !factor.is_zero() {
                for (j, a) in self.rows[pr].iter().enumerate() {
                    if !a.is_zero() {
                        reduced[j] -= &factor * a;
                    }
                }
                value += &factor * &self.rhs[pr];
            }
        }
    }

    fn pivot(&mut self, pr: usize, col: usize) {
        let inv = Rational::one() / &self.rows[pr][col];
        for a in self.rows[pr].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        self.rhs[pr] *= &inv;
        let support: Vec<usize> = (0..self.width)
            .filter(|&j| !self.rows[pr][j].is_zero())
            .collect();
        let pivot_row = self.rows[pr].clone();
        let pivot_rhs = self.rhs[pr].clone();
        for r in 0..self.rows.len() {
            if r == pr {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                self.rows[r][j] -= delta;
            }
            self.rhs[r] -= &factor * &pivot_rhs;
        }
        self.basis[pr] = col;
    }

    fn drive_out_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.first_artificial {
                r += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                Some(j) => {
                    self.pivot(r, j);
                    r += 1;
                }
                None => {
                    // Redundant equality.
                    self.rows.remove(r);
                    self.rhs.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_textbook_problem() {
        // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3  ->  (3, 1), value 11
        let mut lp = LinearProgram::maximize(v(&[3, 2]));
        lp.add(v(&[1, 1]), Relation::Le, int(4));
        lp.add(v(&[1, 3]), Relation::Le, int(6));
        lp.add(v(&[1, 0]), Relation::Le, int(3));
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, int(11));
                assert_eq!(point, v(&[3, 1]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_rows() {
        // max x - y, x + y = 1, x - 2y >= 0 -> x = 1, y = 0
        let mut lp = LinearProgram::maximize(v(&[1, -1]));
        lp.add(v(&[1, 1]), Relation::Eq, int(1));
        lp.add(v(&[1, -2]), Relation::Ge, int(0));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: int(1),
                point: v(&[1, 0])
            }
        );
        // min x (as max -x) with x + y = 1, x - 2y >= 0 -> x = 2/3
        let mut lp = LinearProgram::maximize(v(&[-1, 0]));
        lp.add(v(&[1, 1]), Relation::Eq, int(1));
        lp.add(v(&[1, -2]), Relation::Ge, int(0));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                value: frac(-2, 3),
                point: vec![frac(2, 3), frac(1, 3)]
            }
        );
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::maximize(v(&[1]));
        lp.add(v(&[1]), Relation::Ge, int(2));
        lp.add(v(&[1]), Relation::Le, int(1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = LinearProgram::maximize(v(&[1, 0]));
        lp.add(v(&[1, -1]), Relation::Le, int(1));
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::maximize(v(&[1, 1]));
        lp.add(v(&[1, 1]), Relation::Eq, int(2));
        lp.add(v(&[2, 2]), Relation::Eq, int(4));
        lp.add(v(&[1, 0]), Relation::Le, int(1));
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_rows_terminate() {
        // Many zero-rhs rows through the origin plus a normalizing equality.
        let n = 6;
        let mut obj = vec![int(0); n + 1];
        obj[n] = int(1);
        let mut lp = LinearProgram::maximize(obj);
        let mut total = vec![int(1); n + 1];
        total[n] = int(0);
        lp.add(total, Relation::Eq, int(1));
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut row = vec![int(0); n + 1];
                    row[i] = int(2);
                    row[j] = int(-1);
                    row[n] = int(-1);
                    lp.add(row, Relation::Ge, int(0));
                }
            }
        }
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, frac(1, 6));
                assert!(point[..n].iter().all(|x| *x == frac(1, 6)));
            }
            other => panic!("{other:?}"),
        }
    }
}
