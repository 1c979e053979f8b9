//! Exact phase-1 simplex for feasibility of `A x = b, x >= 0`.
//!
//! Used as the membership oracle behind convex-hull vertex tests and cone
//! membership. Dantzig pricing with a deterministic lowest-index tiebreak,
//! falling back to Bland's rule after an iteration budget so termination is
//! guaranteed; everything decidable is decided in exact rational arithmetic.
//!
//! A floating-point presolve proposes a feasible basis first; the basis is
//! then recertified by an exact rational solve. Only a successful exact
//! certificate short-circuits the answer — on any doubt the full exact
//! simplex runs, so outcomes never depend on floating point.

use num_traits::ToPrimitive;

use crate::linalg;
use crate::rational::Rat;

/// Is there an `x >= 0` with `A x = b`?
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    if let Some(true) = float_guided_certificate(a, b) {
        return true;
    }
    feasible_exact(a, b)
}

/// Runs a floating-point phase-1 simplex and, when it claims feasibility,
/// recertifies the proposed basis exactly. Returns `Some(true)` only with
/// an exact certificate in hand; anything else means "run the exact path".
fn float_guided_certificate(a: &[Vec<Rat>], b: &[Rat]) -> Option<bool> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 || n == 0 {
        return None;
    }
    let to_f = |r: &Rat| -> Option<f64> {
        let num = r.numer().to_f64()?;
        let den = r.denom().to_f64()?;
        let v = num / den;
        v.is_finite().then_some(v)
    };
    let mut af = Vec::with_capacity(m);
    let mut bf = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(n);
        for x in &a[i] {
            row.push(to_f(x)?);
        }
        af.push(row);
        bf.push(to_f(&b[i])?);
    }
    let basis = float_phase1(&af, &bf)?;
    // Exact recheck: the proposed structural basis columns must solve
    // A_B lambda = b with lambda >= 0.
    let cols: Vec<Vec<Rat>> = (0..m)
        .map(|i| basis.iter().map(|&j| a[i][j].clone()).collect())
        .collect();
    let lambda = linalg::solve(&cols, b)?;
    if lambda.iter().all(|x| !x.is_negative()) {
        Some(true)
    } else {
        None
    }
}

/// f64 phase-1; returns the final basis when it reaches (near-)zero
/// artificial objective with an all-structural basis of full size.
fn float_phase1(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<usize>> {
    const EPS: f64 = 1e-9;
    let m = a.len();
    let n = a[0].len();
    let mut t: Vec<Vec<f64>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i] < 0.0;
        let mut row: Vec<f64> = a[i].iter().map(|&x| if flip { -x } else { x }).collect();
        row.extend((0..m).map(|k| if k == i { 1.0 } else { 0.0 }));
        row.push(if flip { -b[i] } else { b[i] });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut z: Vec<f64> = (0..n + m + 1)
        .map(|j| t.iter().map(|r| r[j]).sum())
        .collect();
    for zj in z.iter_mut().take(n + m).skip(n) {
        *zj = 0.0;
    }
    for _ in 0..(20 * (n + m) + 200) {
        let mut enter: Option<usize> = None;
        for j in 0..n {
            if z[j] > EPS && enter.is_none_or(|e| z[j] > z[e]) {
                enter = Some(j);
            }
        }
        let Some(e) = enter else {
            if z[n + m].abs() > 1e-7 {
                return None; // looks infeasible: decide exactly
            }
            // All basis columns must be structural and pairwise distinct.
            let mut sorted = basis.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != m || basis.iter().any(|&j| j >= n) {
                return None;
            }
            return Some(basis);
        };
        let mut leave: Option<(usize, f64)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[e] > EPS {
                let ratio = row[n + m] / row[e];
                if leave.is_none_or(|(_, lr)| ratio < lr) {
                    leave = Some((i, ratio));
                }
            }
        }
        let (li, _) = leave?;
        let inv = 1.0 / t[li][e];
        for x in t[li].iter_mut() {
            *x *= inv;
        }
        let pivot_row = t[li].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != li && row[e].abs() > 0.0 {
                let f = row[e];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
        let f = z[e];
        if f != 0.0 {
            for (x, p) in z.iter_mut().zip(&pivot_row) {
                *x -= f * p;
            }
        }
        basis[li] = e;
    }
    None
}

/// The exact phase-1 simplex.
fn feasible_exact(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return true;
    }

    // Tableau rows: [A | I | b] with b >= 0; artificial basis.
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(n + m + 1);
        let flip = b[i].is_negative();
        for x in &a[i] {
            row.push(if flip { -x } else { x.clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective: minimize the sum of artificials. Reduced cost of column j
    // is c_j - sum over rows of t[i][j] for artificial basic rows; we keep
    // the explicit objective row z[j] = sum_i t[i][j] (so entering columns
    // are those with z[j] > 0 among the structural columns).
    let mut z: Vec<Rat> = (0..n + m + 1)
        .map(|j| {
            let mut s = Rat::zero();
            for row in &t {
                s += &row[j];
            }
            s
        })
        .collect();
    // Artificial columns start basic with cost 1, so their reduced costs are 0.
    for zj in z.iter_mut().take(n + m).skip(n) {
        *zj = Rat::zero();
    }

    let budget = 50 * (n + m + 4);
    let mut iters = 0usize;
    loop {
        iters += 1;
        let bland = iters > budget;
        // Entering column: among structural columns with positive z-entry.
        let mut enter: Option<usize> = None;
        for j in 0..n {
            if z[j].is_positive() {
                match enter {
                    None => enter = Some(j),
                    Some(e) => {
                        if !bland && z[j] > z[e] {
                            enter = Some(j);
                        }
                    }
                }
                if bland {
                    break;
                }
            }
        }
        let Some(e) = enter else {
            // Optimal: feasible iff all artificials are at zero.
            return z[n + m].is_zero();
        };
        // Ratio test: lowest ratio, lowest basis index tiebreak.
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[e].is_positive() {
                let ratio = &row[n + m] / &row[e];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((li, _)) = leave else {
            // Unbounded phase-1 objective cannot happen (bounded below by 0);
            // treat defensively as infeasible.
            return false;
        };
        pivot(&mut t, &mut z, li, e);
        basis[li] = e;
    }
}

fn pivot(t: &mut [Vec<Rat>], z: &mut [Rat], li: usize, e: usize) {
    let inv = t[li][e].recip();
    for x in t[li].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = t[li].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != li && !row[e].is_zero() {
            let f = row[e].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                let d = &f * p;
                *x -= &d;
            }
        }
    }
    if !z[e].is_zero() {
        let f = z[e].clone();
        for (x, p) in z.iter_mut().zip(&pivot_row) {
            let d = &f * p;
            *x -= &d;
        }
    }
}

/// Is `target` a nonnegative combination of `rays`?
pub fn in_cone(target: &[Rat], rays: &[Vec<Rat>]) -> bool {
    let dim = target.len();
    if target.iter().all(Rat::is_zero) {
        return true;
    }
    if rays.is_empty() {
        return false;
    }
    // Columns are the rays.
    let a: Vec<Vec<Rat>> = (0..dim)
        .map(|i| rays.iter().map(|r| r[i].clone()).collect())
        .collect();
    feasible(&a, target)
}

/// Is `target` a convex combination of `points`?
pub fn in_convex_hull(target: &[Rat], points: &[Vec<Rat>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = target.len();
    let mut a: Vec<Vec<Rat>> = (0..dim)
        .map(|i| points.iter().map(|p| p[i].clone()).collect())
        .collect();
    a.push(vec![Rat::one(); points.len()]);
    let mut b: Vec<Rat> = target.to_vec();
    b.push(Rat::one());
    feasible(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::vec_from_ints;

    #[test]
    fn cone_membership() {
        let rays = vec![vec_from_ints(&[1, 0]), vec_from_ints(&[1, 1])];
        assert!(in_cone(&vec_from_ints(&[3, 1]), &rays));
        assert!(in_cone(&vec_from_ints(&[0, 0]), &rays));
        assert!(!in_cone(&vec_from_ints(&[0, 1]), &rays));
        assert!(!in_cone(&vec_from_ints(&[-1, 0]), &rays));
    }

    #[test]
    fn hull_membership() {
        let pts = vec![
            vec_from_ints(&[0, 0]),
            vec_from_ints(&[1, 0]),
            vec_from_ints(&[0, 1]),
        ];
        assert!(in_convex_hull(&[Rat::frac(1, 4), Rat::frac(1, 4)], &pts));
        assert!(in_convex_hull(&vec_from_ints(&[1, 0]), &pts));
        assert!(!in_convex_hull(&vec_from_ints(&[1, 1]), &pts));
        // Affinely dependent target off the hull's affine span.
        assert!(!in_convex_hull(&[Rat::frac(2, 1), Rat::frac(2, 1)], &pts));
    }

    #[test]
    fn degenerate_systems() {
        // 0 = 0 row is feasible; 0 = 1 is not.
        assert!(feasible(
            &[vec![Rat::zero(), Rat::zero()]],
            &[Rat::zero()]
        ));
        assert!(!feasible(
            &[vec![Rat::zero(), Rat::zero()]],
            &[Rat::one()]
        ));
    }
}
