//! Exact linear algebra over the rationals.
//!
//! Solves and determinants go through fraction-free (Bareiss) elimination on
//! denominator-cleared integer matrices with a deterministic first-nonzero
//! pivot rule, so results are exact and reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Clears denominators row by row: returns the integer matrix whose row `i`
/// is `scale_i * a_i` together with the scales (each positive).
fn clear_rows(a: &[Vec<Rat>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut out = Vec::with_capacity(a.len());
    let mut scales = Vec::with_capacity(a.len());
    for row in a {
        let mut l = BigInt::one();
        for x in row {
            l = l.lcm(x.denom());
        }
        let ints: Vec<BigInt> = row
            .iter()
            .map(|x| x.numer() * (&l / x.denom()))
            .collect();
        out.push(ints);
        scales.push(l);
    }
    (out, scales)
}

/// Fraction-free forward elimination in place. Returns the pivot column of
/// each pivot row and the number of row swaps performed. After the call,
/// `m[k][pivots[k]]` are the Bareiss pivots `d_k` and entry `m[i][j]` for
/// `i > k`, `j > pivots[k]` holds the order-(k+1) minors.
fn bareiss(m: &mut [Vec<BigInt>]) -> (Vec<usize>, usize) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        // First nonzero entry in column c at or below row r.
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                // Exact division by the previous pivot (Bareiss identity).
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (pivots, swaps)
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Rat>]) -> usize {
    if a.is_empty() {
        return 0;
    }
    let (mut m, _) = clear_rows(a);
    let (pivots, _) = bareiss(&mut m);
    pivots.len()
}

/// Determinant of a square rational matrix.
pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    if n == 0 {
        return Rat::one();
    }
    assert!(a.iter().all(|r| r.len() == n), "det of non-square matrix");
    let (mut m, scales) = clear_rows(a);
    let (pivots, swaps) = bareiss(&mut m);
    if pivots.len() < n {
        return Rat::zero();
    }
    // The last Bareiss pivot is the determinant of the integer matrix.
    let d = m[n - 1][pivots[n - 1]].clone();
    let mut scale = BigInt::one();
    for s in scales {
        scale *= s;
    }
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    Rat::frac(d * sign, scale)
}

/// Solves the square system `a x = b`. Returns `None` when `a` is singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    if n == 0 {
        return Some(Vec::new());
    }
    // Augment, clear denominators, eliminate fraction-free.
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (mut m, _) = clear_rows(&aug);
    let (pivots, _) = bareiss(&mut m);
    if pivots.len() < n || pivots.iter().take(n).any(|&c| c >= n) {
        return None;
    }
    // Back substitution over the rationals.
    let mut x = vec![Rat::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Rat::from_int(m[k][n].clone());
        for j in k + 1..n {
            acc -= &(Rat::from_int(m[k][j].clone()) * &x[j]);
        }
        x[k] = acc / Rat::from_int(m[k][k].clone());
    }
    Some(x)
}

/// Reduced row echelon form with unit pivots; returns the nonzero rows.
/// Deterministic: first-nonzero pivot per column, in column order.
pub fn rref(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    let t = &f * p;
                    *x -= &t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    m.truncate(r);
    m
}

/// A basis of the nullspace `{x : a x = 0}`, canonicalized via RREF.
pub fn nullspace(a: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let red = rref(a);
    let mut pivot_col = vec![None; red.len()];
    let mut is_pivot = vec![false; cols];
    for (i, row) in red.iter().enumerate() {
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            pivot_col[i] = Some(c);
            is_pivot[c] = true;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (i, row) in red.iter().enumerate() {
            if let Some(c) = pivot_col[i] {
                v[c] = -&row[free];
            }
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to a primitive integer vector (gcd of entries 1)
/// keeping its orientation. Returns `None` for the zero vector.
pub fn primitive_signed(v: &[Rat]) -> Option<Vec<Rat>> {
    if v.iter().all(Rat::is_zero) {
        return None;
    }
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    for x in ints.iter_mut() {
        *x = &*x / &g;
    }
    Some(ints.into_iter().map(Rat::from_int).collect())
}

/// Scales a rational vector to a primitive integer vector (gcd of entries 1)
/// with the first nonzero entry positive. Returns `None` for the zero vector.
pub fn primitive_ray(v: &[Rat]) -> Option<Vec<Rat>> {
    let mut ints = primitive_signed(v)?;
    if ints
        .iter()
        .find(|x| !x.is_zero())
        .unwrap()
        .numer()
        .is_negative()
    {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    Some(ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::vec_from_ints;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| vec_from_ints(r)).collect()
    }

    #[test]
    fn det_and_solve() {
        let a = mat(&[&[1, 2], &[2, 2]]);
        assert_eq!(det(&a), Rat::from_int(-2));
        let x = solve(&a, &vec_from_ints(&[2, 0])).unwrap();
        assert_eq!(x, vec![Rat::from_int(-2), Rat::from_int(2)]);

        let sing = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(det(&sing), Rat::zero());
        assert!(solve(&sing, &vec_from_ints(&[1, 0])).is_none());
    }

    #[test]
    fn det_with_fractions() {
        let a = vec![
            vec![Rat::frac(1, 2), Rat::frac(1, 3)],
            vec![Rat::frac(1, 4), Rat::frac(1, 5)],
        ];
        // 1/10 - 1/12 = 1/60
        assert_eq!(det(&a), Rat::frac(1, 60));
    }

    #[test]
    fn rank_and_nullspace() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            assert!(crate::rational::dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn primitive_rays() {
        let v = vec![Rat::frac(-2, 3), Rat::frac(4, 3)];
        assert_eq!(primitive_ray(&v).unwrap(), vec_from_ints(&[1, -2]));
        assert!(primitive_ray(&[Rat::zero(), Rat::zero()]).is_none());
    }
}
