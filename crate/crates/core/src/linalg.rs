//! Exact linear algebra over Q on small dense matrices.

use num_traits::Zero;

use crate::poly::{Polynomial, Q};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let t = &f * &rows[r][k];
                    rows[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{ v : A v = 0 }`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = num_traits::One::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub fn det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let nvars = m
        .iter()
        .flatten()
        .map(|p| p.nvars())
        .next()
        .unwrap_or(0);
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    det_sub(m, &rows, &cols, nvars)
}

fn det_sub(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize], nvars: usize) -> Polynomial {
    match rows.len() {
        0 => Polynomial::one(nvars),
        1 => m[rows[0]][cols[0]].clone(),
        2 => {
            &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]
        }
        _ => {
            // Expand along the row with the most zeros.
            let (ri, _) = rows
                .iter()
                .enumerate()
                .max_by_key(|(_, &r)| cols.iter().filter(|&&c| m[r][c].is_zero()).count())
                .unwrap();
            let r = rows[ri];
            let rest_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let mut acc = Polynomial::zero(nvars);
            for (ci, &c) in cols.iter().enumerate() {
                if m[r][c].is_zero() {
                    continue;
                }
                let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = det_sub(m, &rest_rows, &rest_cols, nvars);
                let term = &m[r][c] * &minor;
                if (ri + ci) % 2 == 0 {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            acc
        }
    }
}

/// Cofactor matrix `C` with `C[i][j] = (-1)^{i+j} det(M without row i, column j)`,
/// so that `C · Mᵀ = det(M) · Id`.
pub fn cofactor_matrix(m: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let n = m.len();
    let nvars = m.iter().flatten().map(|p| p.nvars()).next().unwrap_or(0);
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let values = crate::par::map(&cells, |&(i, j)| {
        let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let d = det_sub(m, &rows, &cols, nvars);
        if (i + j) % 2 == 0 {
            d
        } else {
            -d
        }
    });
    values.chunks(n).map(|c| c.to_vec()).collect()
}

/// All `k×k` minors of a (rows × cols) polynomial matrix.
pub fn minors(m: &[Vec<Polynomial>], k: usize) -> Vec<Polynomial> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let nvars = m.iter().flatten().map(|p| p.nvars()).next().unwrap_or(0);
    let row_sets = combinations(nrows, k);
    let col_sets = combinations(ncols, k);
    let pairs: Vec<(&Vec<usize>, &Vec<usize>)> = row_sets
        .iter()
        .flat_map(|r| col_sets.iter().map(move |c| (r, c)))
        .collect();
    crate::par::map(&pairs, |(r, c)| det_sub(m, r, c, nvars))
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
