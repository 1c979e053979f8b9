//! Exact rational polyhedral cones: representation conversion, dual cones,
//! lineality, face lattices, extremal rays, exposed and perfect faces, face
//! duality, convex hulls of finite point sets, and the locally-finitely-
//! generated verifier.

mod dd;
mod edges1;
mod hull;

pub use edges1::{edges1_verify, ClauseStatus, Edges1Input, Edges1Report};
pub use hull::{affine_dim, hull_vertices, hull_vertices_with_priority, PolytopePoints};

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::rational::{dot, vec_neg, Rat};
use crate::simplex;
use crate::{Error, Guards, Result};

/// A rational polyhedral cone in Q^N, held by its generators
/// (V-representation). The H-representation is derived on demand by double
/// description and cached; lineality directions appear in the generator list
/// as opposite pairs.
#[derive(Debug)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<Vec<Rat>>,
    dual_cache: OnceLock<DualDescription>,
}

/// Cached dual data: generators of the dual cone split into its lineality
/// basis (equalities of the primal H-representation) and extremal rays
/// (facet inequalities of the primal).
#[derive(Clone, Debug)]
pub struct DualDescription {
    pub equalities: Vec<Vec<Rat>>,
    pub inequalities: Vec<Vec<Rat>>,
}

impl Clone for RationalCone {
    fn clone(&self) -> Self {
        RationalCone {
            ambient_dim: self.ambient_dim,
            generators: self.generators.clone(),
            dual_cache: match self.dual_cache.get() {
                Some(d) => {
                    let cell = OnceLock::new();
                    let _ = cell.set(d.clone());
                    cell
                }
                None => OnceLock::new(),
            },
        }
    }
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl RationalCone {
    /// Builds a cone from generators, canonicalizing each to a primitive
    /// integer vector and dropping zeros and duplicates.
    pub fn from_generators(ambient_dim: usize, generators: &[Vec<Rat>]) -> Result<Self> {
        for g in generators {
            if g.len() != ambient_dim {
                return Err(Error::Domain(format!(
                    "generator has {} entries, ambient dimension is {ambient_dim}",
                    g.len()
                )));
            }
        }
        let mut gens: Vec<Vec<Rat>> = generators
            .iter()
            .filter_map(|g| linalg::primitive_signed(g))
            .collect();
        gens.sort();
        gens.dedup();
        Ok(RationalCone {
            ambient_dim,
            generators: gens,
            dual_cache: OnceLock::new(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    /// Linear dimension of the cone (rank of its generators).
    pub fn dim(&self) -> usize {
        linalg::rank(&self.generators)
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    fn check_ambient(&self, guards: &Guards) -> Result<()> {
        if self.ambient_dim > guards.max_ambient {
            return Err(Error::Resource(format!(
                "ambient dimension {} exceeds guard {}",
                self.ambient_dim, guards.max_ambient
            )));
        }
        Ok(())
    }

    /// Exact membership test via LP feasibility.
    pub fn contains(&self, x: &[Rat]) -> bool {
        simplex::in_cone(x, &self.generators)
    }

    /// Do these cones contain exactly the same points? Decided by mutual
    /// generator membership.
    pub fn same_cone(&self, other: &RationalCone) -> bool {
        self.ambient_dim == other.ambient_dim
            && other.generators.iter().all(|g| self.contains(g))
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// The dual description (H-representation data), computed once by
    /// double description on the generator rows.
    pub fn dual_description(&self, guards: &Guards) -> Result<&DualDescription> {
        self.check_ambient(guards)?;
        Ok(self.dual_cache.get_or_init(|| {
            let v = dd::from_constraints(self.ambient_dim, &self.generators);
            DualDescription {
                equalities: v.lineality,
                inequalities: v.rays,
            }
        }))
    }

    /// The dual cone `{l : l(x) >= 0 for all x in K}` as a generated cone;
    /// lineality directions of the dual appear as opposite generator pairs.
    pub fn dual(&self, guards: &Guards) -> Result<RationalCone> {
        let d = self.dual_description(guards)?;
        let mut gens = d.inequalities.clone();
        for v in &d.equalities {
            gens.push(v.clone());
            gens.push(vec_neg(v));
        }
        RationalCone::from_generators(self.ambient_dim, &gens)
    }

    /// Facet functionals of the H-representation: equalities are returned as
    /// opposite inequality pairs, so `K = {x : f(x) >= 0 for all f}`.
    pub fn facets(&self, guards: &Guards) -> Result<Vec<Vec<Rat>>> {
        let d = self.dual_description(guards)?;
        let mut out = d.inequalities.clone();
        for v in &d.equalities {
            out.push(v.clone());
            out.push(vec_neg(v));
        }
        Ok(out)
    }

    /// The lineality space `(K u {0}) n -(K u {0})`, computed from the
    /// V-representation: it is spanned by the generators whose negation
    /// stays in the cone. Returns (dimension, canonical basis).
    pub fn lineality(&self) -> (usize, Vec<Vec<Rat>>) {
        let in_lin: Vec<Vec<Rat>> = self
            .generators
            .iter()
            .filter(|g| self.contains(&vec_neg(g)))
            .cloned()
            .collect();
        let basis = dd::canonical_basis(&in_lin);
        (basis.len(), basis)
    }

    pub fn is_salient(&self) -> bool {
        self.lineality().0 == 0
    }

    /// The canonical minimal generating set of a salient cone: generators
    /// that are not conic combinations of the others.
    pub fn extremal_rays(&self) -> Result<Vec<Vec<Rat>>> {
        let (ldim, basis) = self.lineality();
        if ldim > 0 {
            return Err(Error::NonSalient {
                witness: basis[0].clone(),
            });
        }
        let mut rays = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            let others: Vec<Vec<Rat>> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v.clone())
                .collect();
            if !simplex::in_cone(g, &others) {
                rays.push(g.clone());
            }
        }
        Ok(rays)
    }

    /// Indices of the inequality facets tight at `x`.
    fn tight_set(&self, facets: &[Vec<Rat>], x: &[Rat]) -> Vec<usize> {
        facets
            .iter()
            .enumerate()
            .filter(|(_, f)| dot(f, x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Enumerates the full face lattice by closing the facet faces of `K`
    /// under intersection. Faces are identified by the subset of generators
    /// they contain; the list includes `K` itself and, when `K` is salient,
    /// the zero face.
    pub fn faces(&self, guards: &Guards) -> Result<Vec<FaceDescriptor>> {
        let d = self.dual_description(guards)?.clone();
        let facets = &d.inequalities;
        let all: Vec<usize> = (0..self.generators.len()).collect();
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![all];
        let mut subsets = Vec::new();
        while let Some(s) = queue.pop() {
            if !seen.insert(s.clone()) {
                continue;
            }
            for f in facets {
                let cut: Vec<usize> = s
                    .iter()
                    .copied()
                    .filter(|&i| dot(f, &self.generators[i]).is_zero())
                    .collect();
                if cut != s && !seen.contains(&cut) {
                    queue.push(cut);
                }
            }
            subsets.push(s);
        }
        // The empty subset is the zero face; keep it only for salient cones.
        let salient = self.is_salient();
        let mut out = Vec::new();
        for s in subsets {
            if s.is_empty() && !salient {
                continue;
            }
            out.push(self.face_from_generators(&d, facets, s));
        }
        out.sort_by(|a, b| {
            (a.dim, &a.generator_indices).cmp(&(b.dim, &b.generator_indices))
        });
        Ok(out)
    }

    fn face_from_generators(
        &self,
        dual: &DualDescription,
        facets: &[Vec<Rat>],
        indices: Vec<usize>,
    ) -> FaceDescriptor {
        let gens: Vec<Vec<Rat>> = indices.iter().map(|&i| self.generators[i].clone()).collect();
        let dim = linalg::rank(&gens);
        // Supporting functional: the sum of the facets tight on the whole
        // face (for the improper face this sum is empty, i.e. None).
        let tight: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| gens.iter().all(|g| dot(f, g).is_zero()))
            .map(|(i, _)| i)
            .collect();
        let supporting = if indices.len() == self.generators.len() {
            None
        } else {
            let mut s = vec![Rat::zero(); self.ambient_dim];
            for &i in &tight {
                for (sj, fj) in s.iter_mut().zip(&facets[i]) {
                    *sj += fj;
                }
            }
            Some(s)
        };
        // dim F^ = rank of the dual generators vanishing on F; equalities
        // vanish on everything.
        let mut dual_gens: Vec<Vec<Rat>> = dual
            .inequalities
            .iter()
            .filter(|l| gens.iter().all(|g| dot(l, g).is_zero()))
            .cloned()
            .collect();
        dual_gens.extend(dual.equalities.iter().cloned());
        let dual_dim = linalg::rank(&dual_gens);
        FaceDescriptor {
            generator_indices: indices,
            dim,
            supporting_functional: supporting,
            is_exposed: true,
            is_perfect: dim + dual_dim == self.ambient_dim,
        }
    }

    /// The dual face `F^ = {l in K-dual : l vanishes on F}` as a face of the
    /// dual cone. Returns the dual cone together with the face descriptor.
    pub fn dual_face(
        &self,
        face: &FaceDescriptor,
        guards: &Guards,
    ) -> Result<(RationalCone, FaceDescriptor)> {
        let dual_cone = self.dual(guards)?;
        let gens: Vec<Vec<Rat>> = face
            .generator_indices
            .iter()
            .map(|&i| self.generators[i].clone())
            .collect();
        let indices: Vec<usize> = dual_cone
            .generators
            .iter()
            .enumerate()
            .filter(|(_, l)| gens.iter().all(|g| dot(l, g).is_zero()))
            .map(|(i, _)| i)
            .collect();
        let dual_dd = dual_cone.dual_description(guards)?.clone();
        let facets = dual_cone.facets(guards)?;
        let fd = dual_cone.face_from_generators(&dual_dd, &facets, indices);
        Ok((dual_cone, fd))
    }

    /// Canonical generator point set of a face (sorted primitive vectors).
    pub fn face_points(&self, face: &FaceDescriptor) -> Vec<Vec<Rat>> {
        let mut v: Vec<Vec<Rat>> = face
            .generator_indices
            .iter()
            .map(|&i| self.generators[i].clone())
            .collect();
        v.sort();
        v
    }
}

/// A face of a cone: the subset of generators it contains, its dimension,
/// a supporting functional when proper, and the exposed/perfect flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDescriptor {
    pub generator_indices: Vec<usize>,
    pub dim: usize,
    pub supporting_functional: Option<Vec<Rat>>,
    pub is_exposed: bool,
    pub is_perfect: bool,
}

/// Is `face` (given as a face of `cone`) perfect? Computes
/// `dim F + dim F^` and compares with the ambient dimension.
pub fn is_perfect(cone: &RationalCone, face: &FaceDescriptor, guards: &Guards) -> Result<bool> {
    let gens: Vec<Vec<Rat>> = face
        .generator_indices
        .iter()
        .map(|&i| cone.generators()[i].clone())
        .collect();
    let d = cone.dual_description(guards)?;
    let mut dual_gens: Vec<Vec<Rat>> = d
        .inequalities
        .iter()
        .filter(|l| gens.iter().all(|g| dot(l, g).is_zero()))
        .cloned()
        .collect();
    dual_gens.extend(d.equalities.iter().cloned());
    Ok(linalg::rank(&gens) + linalg::rank(&dual_gens) == cone.ambient_dim())
}

/// JSON wire form of a cone.
#[derive(Serialize, Deserialize)]
pub struct ConeJson {
    pub dim: usize,
    pub generators: Vec<Vec<Rat>>,
}

impl From<&RationalCone> for ConeJson {
    fn from(c: &RationalCone) -> Self {
        ConeJson {
            dim: c.ambient_dim,
            generators: c.generators.clone(),
        }
    }
}

impl TryFrom<ConeJson> for RationalCone {
    type Error = Error;
    fn try_from(j: ConeJson) -> Result<RationalCone> {
        RationalCone::from_generators(j.dim, &j.generators)
    }
}

/// True when `x` lies in the relative interior of the face: it must belong
/// to the face's cone and have exactly the face's tight facet set.
pub fn in_relative_interior(
    cone: &RationalCone,
    face: &FaceDescriptor,
    x: &[Rat],
    guards: &Guards,
) -> Result<bool> {
    let d = cone.dual_description(guards)?;
    let facets = &d.inequalities;
    let gens: Vec<Vec<Rat>> = face
        .generator_indices
        .iter()
        .map(|&i| cone.generators()[i].clone())
        .collect();
    if !simplex::in_cone(x, &gens) {
        return Ok(false);
    }
    // Tight-set comparison also covers the origin: it is tight on every
    // facet, matching exactly the minimal face (zero face when salient).
    let face_tight: Vec<usize> = facets
        .iter()
        .enumerate()
        .filter(|(_, f)| gens.iter().all(|g| dot(f, g).is_zero()))
        .map(|(i, _)| i)
        .collect();
    Ok(cone.tight_set(facets, x) == face_tight)
}
