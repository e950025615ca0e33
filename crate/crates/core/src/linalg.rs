//! Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Rank of a dense matrix given as rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in &mut m[r][c..width] {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..width].iter_mut().zip(&pivot[c..width]) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solves `x · basis = target`, i.e. writes `target` as a combination of
/// the rows of `basis`. Returns `None` if `target` is not in their span.
pub fn express_in_rows(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let width = target.len();
    // Columns of the augmented system are the basis rows; unknowns are the
    // coefficients.
    let mut sys: Vec<Vec<Rational>> = (0..width)
        .map(|j| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..sys.len()).find(|&i| !sys[i][c].is_zero()) else {
            continue;
        };
        sys.swap(r, p);
        let inv = Rational::one() / &sys[r][c];
        for x in &mut sys[r][c..=k] {
            *x *= &inv;
        }
        let pivot = sys[r].clone();
        for (i, row) in sys.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..=k].iter_mut().zip(&pivot[c..=k]) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if sys[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = sys[row][k].clone();
    }
    Some(x)
}
