//! Brute-force convex hull vertex enumeration over exact rationals.
//!
//! A point is a vertex iff it is not a convex combination of the remaining
//! points, decided by exact LP feasibility. The test runs in two phases:
//! points certified inside the hull of the current candidate set are
//! discarded (each such certificate is an exact convex combination), and the
//! final vertex tests run within the surviving candidate set. Splicing the
//! interior certificates into any convex combination shows the two-phase
//! answer equals the full test against all points; the processing order
//! only affects speed, never the result.

use serde::Serialize;

use crate::rational::Rat;
use crate::simplex;
use crate::{Error, Guards, Result};

/// A finite rational point set with its computed hull vertices.
/// `vertex_indices` point at the first occurrence of each vertex.
#[derive(Clone, Debug, Serialize)]
pub struct PolytopePoints {
    pub ambient_dim: usize,
    pub points: Vec<Vec<Rat>>,
    pub vertex_indices: Vec<usize>,
}

impl PolytopePoints {
    pub fn vertex_points(&self) -> Vec<Vec<Rat>> {
        self.vertex_indices
            .iter()
            .map(|&i| self.points[i].clone())
            .collect()
    }
}

/// Marks each point as a vertex iff it is outside the convex hull of the
/// other points. Duplicate points are collapsed to their first occurrence.
pub fn hull_vertices(points: &[Vec<Rat>], guards: &Guards) -> Result<PolytopePoints> {
    hull_vertices_with_priority(points, &[], guards)
}

/// Like [`hull_vertices`], with a caller-supplied list of point indices to
/// enroll as candidates up front. Callers pass points they expect to be
/// extreme (e.g. a known spanning family); the hint only shrinks the
/// intermediate LPs — phase 2 removes wrongly enrolled candidates, so the
/// vertex set is independent of the hint.
pub fn hull_vertices_with_priority(
    points: &[Vec<Rat>],
    priority: &[usize],
    guards: &Guards,
) -> Result<PolytopePoints> {
    let ambient_dim = points.first().map_or(0, Vec::len);
    if ambient_dim > guards.max_ambient {
        return Err(Error::Resource(format!(
            "hull ambient dimension {ambient_dim} exceeds guard {}",
            guards.max_ambient
        )));
    }
    for p in points {
        if p.len() != ambient_dim {
            return Err(Error::Domain("points of mixed dimension".into()));
        }
    }

    // Distinct points, keeping the first occurrence index of each.
    let mut distinct: Vec<(usize, &Vec<Rat>)> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !distinct.iter().any(|(_, q)| *q == p) {
            distinct.push((i, p));
        }
    }

    // Enroll the priority points (mapped to their distinct representative).
    let mut candidates: Vec<usize> = Vec::new(); // indices into `distinct`
    for &pi in priority {
        if pi >= points.len() {
            return Err(Error::Domain(format!("priority index {pi} out of range")));
        }
        let k = distinct
            .iter()
            .position(|(_, q)| **q == points[pi])
            .expect("distinct covers all points");
        if !candidates.contains(&k) {
            candidates.push(k);
        }
    }

    // Seed candidates with the coordinate extremes (first attaining point).
    for c in 0..ambient_dim {
        for pick_max in [false, true] {
            let mut best: Option<usize> = None;
            for (k, (_, p)) in distinct.iter().enumerate() {
                let better = match best {
                    None => true,
                    Some(b) => {
                        let cur = &distinct[b].1[c];
                        if pick_max {
                            p[c] > *cur
                        } else {
                            p[c] < *cur
                        }
                    }
                };
                if better {
                    best = Some(k);
                }
            }
            if let Some(b) = best {
                if !candidates.contains(&b) {
                    candidates.push(b);
                }
            }
        }
    }

    // Phase 1: a point inside the hull of the other candidates is interior
    // for good; otherwise it joins the candidate set. Processed in reverse
    // input order (hull-extreme inputs tend to sit late in enumerations).
    for k in (0..distinct.len()).rev() {
        if candidates.contains(&k) {
            continue;
        }
        let cand_pts: Vec<Vec<Rat>> = candidates.iter().map(|&j| distinct[j].1.clone()).collect();
        if !simplex::in_convex_hull(distinct[k].1, &cand_pts) {
            candidates.push(k);
        }
    }

    // Phase 2: exact vertex test within the candidate set. Every discarded
    // point carries a convex-combination certificate over the candidates,
    // so membership in conv(candidates minus p) equals membership in
    // conv(all points minus p).
    let mut vertex_indices = Vec::new();
    for &k in &candidates {
        let others: Vec<Vec<Rat>> = candidates
            .iter()
            .filter(|&&j| j != k)
            .map(|&j| distinct[j].1.clone())
            .collect();
        if !simplex::in_convex_hull(distinct[k].1, &others) {
            vertex_indices.push(distinct[k].0);
        }
    }
    vertex_indices.sort_unstable();
    Ok(PolytopePoints {
        ambient_dim,
        points: points.to_vec(),
        vertex_indices,
    })
}

/// Affine dimension of a point set (rank of differences from the first).
pub fn affine_dim(points: &[Vec<Rat>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| crate::rational::vec_sub(p, base))
        .collect();
    crate::linalg::rank(&diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::vec_from_ints;

    fn g() -> Guards {
        Guards::default()
    }

    #[test]
    fn triangle_with_interior_point() {
        let pts = vec![
            vec_from_ints(&[0, 0]),
            vec_from_ints(&[1, 0]),
            vec_from_ints(&[0, 1]),
            vec![Rat::frac(1, 4), Rat::frac(1, 4)],
        ];
        let h = hull_vertices(&pts, &g()).unwrap();
        assert_eq!(h.vertex_indices, vec![0, 1, 2]);
    }

    #[test]
    fn one_dimensional_images() {
        // sigma-images of partitions of 3 with r=2: values 0, 2, 3.
        let pts = vec![
            vec_from_ints(&[0]),
            vec_from_ints(&[2]),
            vec_from_ints(&[3]),
        ];
        let h = hull_vertices(&pts, &g()).unwrap();
        assert_eq!(h.vertex_points(), vec![vec_from_ints(&[0]), vec_from_ints(&[3])]);
    }

    #[test]
    fn planar_sigma_images_t5() {
        let pts: Vec<Vec<Rat>> = [
            [0, 0],
            [4, 0],
            [6, 0],
            [7, 3],
            [8, 4],
            [9, 7],
            [10, 10],
        ]
        .iter()
        .map(|p| vec_from_ints(&[p[0], p[1]]))
        .collect();
        let h = hull_vertices(&pts, &g()).unwrap();
        assert_eq!(
            h.vertex_points(),
            vec![
                vec_from_ints(&[0, 0]),
                vec_from_ints(&[6, 0]),
                vec_from_ints(&[8, 4]),
                vec_from_ints(&[10, 10]),
            ]
        );
    }

    #[test]
    fn duplicates_collapse() {
        let pts = vec![
            vec_from_ints(&[0, 0]),
            vec_from_ints(&[1, 0]),
            vec_from_ints(&[0, 0]),
            vec_from_ints(&[0, 1]),
        ];
        let h = hull_vertices(&pts, &g()).unwrap();
        assert_eq!(h.vertex_indices, vec![0, 1, 3]);
    }

    #[test]
    fn invariance_under_permutation_and_convex_padding() {
        let pts = vec![
            vec_from_ints(&[0, 0]),
            vec_from_ints(&[2, 0]),
            vec_from_ints(&[0, 2]),
            vec_from_ints(&[2, 2]),
        ];
        let base = hull_vertices(&pts, &g()).unwrap();
        let mut base_set = base.vertex_points();
        base_set.sort();

        let mut perm = pts.clone();
        perm.reverse();
        let mut perm_set = hull_vertices(&perm, &g()).unwrap().vertex_points();
        perm_set.sort();
        assert_eq!(base_set, perm_set);

        let mut padded = pts.clone();
        padded.push(vec![Rat::one(), Rat::frac(1, 2)]);
        padded.push(vec![Rat::frac(3, 2), Rat::frac(3, 2)]);
        let mut padded_set = hull_vertices(&padded, &g()).unwrap().vertex_points();
        padded_set.sort();
        assert_eq!(base_set, padded_set);
    }

    #[test]
    fn affine_dims() {
        let pts = vec![
            vec_from_ints(&[0, 0]),
            vec_from_ints(&[1, 1]),
            vec_from_ints(&[2, 2]),
        ];
        assert_eq!(affine_dim(&pts), 1);
        assert_eq!(affine_dim(&[]), 0);
        assert_eq!(affine_dim(&[vec_from_ints(&[5, 5])]), 0);
    }
}
