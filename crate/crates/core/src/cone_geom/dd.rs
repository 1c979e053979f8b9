//! Double description: from an H-representation `{x : a_i . x >= 0}` to a
//! V-representation (lineality basis + extremal rays of the pointed part).
//!
//! Constraints are canonicalized, deduplicated and inserted in lexicographic
//! order; adjacency of rays is decided by the rank test. Everything is exact.

use crate::linalg;
use crate::rational::{dot, Rat};

/// Lineality basis and extremal rays describing the cone
/// `{x : a . x >= 0 for all constraint rows a}`.
#[derive(Clone, Debug)]
pub struct VDescription {
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

struct Ray {
    v: Vec<Rat>,
    /// Indices (into the processed constraint list) tight at this ray.
    tight: Vec<usize>,
}

/// Runs double description over the constraint rows.
pub fn from_constraints(dim: usize, constraints: &[Vec<Rat>]) -> VDescription {
    // Scale to primitive integer rows (keeping orientation: a constraint's
    // sign matters), drop zero rows, dedup, sort lexicographically.
    let mut rows: Vec<Vec<Rat>> = constraints
        .iter()
        .filter_map(|c| linalg::primitive_signed(c))
        .collect();
    rows.sort();
    rows.dedup();

    // Start from the full space.
    let mut lineality: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, a) in rows.iter().enumerate() {
        let vals: Vec<Rat> = lineality.iter().map(|v| dot(a, v)).collect();
        if let Some(k) = vals.iter().position(|x| !x.is_zero()) {
            // The constraint cuts the lineality space: split off one
            // direction v0 with a.v0 > 0, project everything else into
            // {a = 0}, and keep v0 as a ray.
            let mut v0 = lineality.remove(k);
            let mut s0 = vals[k].clone();
            if s0.is_negative() {
                v0 = crate::rational::vec_neg(&v0);
                s0 = -s0;
            }
            for w in lineality.iter_mut() {
                let f = dot(a, w) / &s0;
                if !f.is_zero() {
                    for (wi, vi) in w.iter_mut().zip(&v0) {
                        let t = &f * vi;
                        *wi -= &t;
                    }
                }
            }
            for r in rays.iter_mut() {
                let f = dot(a, &r.v) / &s0;
                if !f.is_zero() {
                    for (ri, vi) in r.v.iter_mut().zip(&v0) {
                        let t = &f * vi;
                        *ri -= &t;
                    }
                    r.v = linalg::primitive_signed(&r.v).unwrap_or_else(|| vec![Rat::zero(); dim]);
                }
                // Projected rays land on {a = 0}.
                r.tight.push(idx);
            }
            rays.retain(|r| !crate::rational::vec_is_zero(&r.v));
            let tight: Vec<usize> = rows[..idx]
                .iter()
                .enumerate()
                .filter(|(_, row)| dot(row, &v0).is_zero())
                .map(|(i, _)| i)
                .collect();
            rays.push(Ray {
                v: linalg::primitive_signed(&v0).expect("v0 nonzero"),
                tight,
            });
            continue;
        }

        // Constraint vanishes on the lineality space: split rays by sign.
        let mut plus: Vec<Ray> = Vec::new();
        let mut zero: Vec<Ray> = Vec::new();
        let mut minus: Vec<Ray> = Vec::new();
        for mut r in rays.drain(..) {
            let s = dot(a, &r.v);
            if s.is_zero() {
                r.tight.push(idx);
                zero.push(r);
            } else if s.is_positive() {
                plus.push(r);
            } else {
                minus.push(r);
            }
        }
        if minus.is_empty() {
            rays = plus;
            rays.extend(zero);
            continue;
        }
        let lin_dim = lineality.len();
        let mut new_rays: Vec<Ray> = Vec::new();
        for rp in &plus {
            for rm in &minus {
                if !adjacent(rp, rm, &rows, dim, lin_dim) {
                    continue;
                }
                let sp = dot(a, &rp.v);
                let sm = dot(a, &rm.v);
                // sp > 0, sm < 0: sp * rm - sm * rp is a nonnegative
                // combination landing on {a = 0}.
                let combo: Vec<Rat> = rp
                    .v
                    .iter()
                    .zip(&rm.v)
                    .map(|(p, m)| &sp * m - &sm * p)
                    .collect();
                let v = linalg::primitive_signed(&combo).expect("adjacent combo nonzero");
                let mut tight: Vec<usize> = rp
                    .tight
                    .iter()
                    .copied()
                    .filter(|i| rm.tight.contains(i))
                    .collect();
                tight.push(idx);
                new_rays.push(Ray { v, tight });
            }
        }
        rays = plus;
        rays.extend(zero);
        rays.extend(new_rays);
    }

    VDescription {
        lineality: canonical_basis(&lineality),
        rays: {
            let mut vs: Vec<Vec<Rat>> = rays.into_iter().map(|r| r.v).collect();
            vs.sort();
            vs.dedup();
            vs
        },
    }
}

/// Rank-based adjacency test: two extremal rays of the current cone are
/// adjacent iff the constraints tight at both have rank dim - lin_dim - 2.
fn adjacent(r1: &Ray, r2: &Ray, rows: &[Vec<Rat>], dim: usize, lin_dim: usize) -> bool {
    let want = match (dim - lin_dim).checked_sub(2) {
        Some(w) => w,
        None => return false,
    };
    let common: Vec<Vec<Rat>> = r1
        .tight
        .iter()
        .filter(|i| r2.tight.contains(i))
        .map(|&i| rows[i].clone())
        .collect();
    if common.len() < want {
        return false;
    }
    linalg::rank(&common) == want
}

/// RREF-canonicalized primitive integer basis of the span of `vectors`.
pub fn canonical_basis(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    linalg::rref(vectors)
        .iter()
        .filter_map(|row| linalg::primitive_ray(row))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::vec_from_ints;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|r| vec_from_ints(r)).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let d = from_constraints(2, &rows(&[&[1, 0], &[0, 1]]));
        assert!(d.lineality.is_empty());
        assert_eq!(d.rays, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn halfspace_has_lineality() {
        let d = from_constraints(2, &rows(&[&[1, 0]]));
        assert_eq!(d.lineality, rows(&[&[0, 1]]));
        assert_eq!(d.rays, rows(&[&[1, 0]]));
    }

    #[test]
    fn no_constraints_full_space() {
        let d = from_constraints(3, &[]);
        assert_eq!(d.lineality.len(), 3);
        assert!(d.rays.is_empty());
    }

    #[test]
    fn infeasible_strictly_pointed() {
        // {x >= 0, x <= 0, y >= 0, y <= 0} = origin only
        let d = from_constraints(2, &rows(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        assert!(d.lineality.is_empty());
        assert!(d.rays.is_empty());
    }

    #[test]
    fn simplicial_cone_three_dims() {
        let d = from_constraints(3, &rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(d.rays.len(), 3);
        assert!(d.lineality.is_empty());
    }

    #[test]
    fn square_cone_dual() {
        // Dual of the cone over a square: constraints are the 4 generators
        // (+-1, +-1, 1); the dual cone has 4 extremal rays.
        let d = from_constraints(
            3,
            &rows(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]),
        );
        assert!(d.lineality.is_empty());
        assert_eq!(d.rays.len(), 4);
    }
}
