//! Fraction-free exact kernel extraction for matrices over ℚ.
//!
//! Rows are cleared to integers, forward elimination uses integer
//! cross-multiplication with per-row content stripping, and pivots are the
//! first nonzero row in column order, so the resulting echelon kernel basis
//! is deterministic.

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{Signed, Zero};

use crate::scalar::Rational;

/// Kernel basis of the matrix (rows of rational entries), one vector per
/// free column. Each basis vector is a primitive integer vector, scaled so
/// its entry at the defining free column is positive; entries at all other
/// free columns are zero.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            clear_denominators(row)
        })
        .filter(|row| !row.iter().all(|x| x.is_zero()))
        .collect();

    // forward elimination; pivots[(c)] = row index
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (next_row..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(next_row, pivot_row);
        let (top, rest) = mat.split_at_mut(next_row + 1);
        let pivot = &top[next_row];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = pivot[col].clone();
            let b = row[col].clone();
            for c2 in col..ncols {
                row[c2] = &row[c2] * &a - &pivot[c2] * &b;
            }
            strip_content(row);
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == mat.len() {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();

    let mut basis = Vec::with_capacity(free_cols.len());
    for &f in &free_cols {
        let mut x = vec![Rational::zero(); ncols];
        x[f] = Rational::one();
        // back-substitute through the echelon rows
        for &(r, c) in pivots.iter().rev() {
            let mut acc = Rational::zero();
            for c2 in c + 1..ncols {
                if !mat[r][c2].is_zero() && !x[c2].is_zero() {
                    acc = acc + &(Rational::from_bigint(mat[r][c2].clone()) * &x[c2]);
                }
            }
            x[c] = -(acc / Rational::from_bigint(mat[r][c].clone()));
        }
        basis.push(to_primitive(&x, f));
    }
    basis
}

/// Solves for coordinates of `target` in the span of an echelon kernel
/// basis produced by [`kernel_basis`]: membership holds iff the vector equals
/// the combination read off at the free columns.
pub fn in_span(basis: &[Vec<Rational>], free_cols: &[usize], target: &[Rational]) -> bool {
    assert_eq!(basis.len(), free_cols.len());
    let mut combo = vec![Rational::zero(); target.len()];
    for (vec, &f) in basis.iter().zip(free_cols) {
        let coeff = &target[f] / &vec[f];
        if coeff.is_zero() {
            continue;
        }
        for (c, v) in combo.iter_mut().zip(vec) {
            *c = c.clone() + &(coeff.clone() * v);
        }
    }
    combo == target
}

/// The free column of each basis vector (its first column with the scaled
/// unit entry pattern): the column where that vector is the only one with a
/// nonzero entry.
pub fn free_columns(basis: &[Vec<Rational>]) -> Vec<usize> {
    let ncols = basis.first().map_or(0, |v| v.len());
    let mut out = Vec::with_capacity(basis.len());
    for (i, vec) in basis.iter().enumerate() {
        let f = (0..ncols)
            .find(|&c| {
                !vec[c].is_zero()
                    && basis
                        .iter()
                        .enumerate()
                        .all(|(j, other)| j == i || other[c].is_zero())
            })
            .expect("echelon basis has a defining column per vector");
        out.push(f);
    }
    out
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    strip_content(&mut out);
    out
}

fn strip_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            return;
        }
    }
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}

fn to_primitive(x: &[Rational], unit_col: usize) -> Vec<Rational> {
    let mut lcm = BigInt::from(1);
    for v in x {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if !g.is_zero() && g != BigInt::from(1) {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    if ints[unit_col].is_negative() {
        for v in ints.iter_mut() {
            *v = -&*v;
        }
    }
    ints.into_iter().map(Rational::from_bigint).collect()
}
