//! Acceptance suite: one test per verification criterion, each printing a
//! PASS line with the exact property it established. Every assertion is an
//! exact rational equality or sign check; there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symcone::cone_geom::{
    affine_dim, edges1_verify, hull_vertices, in_relative_interior, is_perfect, ClauseStatus,
    Edges1Input, RationalCone,
};
use symcone::diagonals::{
    big_decomposition_check, diagonal_class, divisor_constant, dleqg_identity_check, eta,
    normalized_diagonal, push_a, to_w_coords, w_basis, DiagonalSpec,
};
use symcone::linalg;
use symcone::partitions::{
    balance_descend, balanced, brute_min, cheb_certify, d_det, d_det_closed_form, d_det_vanishes,
    enumerate_partitions, partitions_exact, Partition, SymAffineForm,
};
use symcone::rational::{dot, Rat};
use symcone::sweep::{diag_cone_sweep, polytope_instances, polytope_sweep, GridSpec};
use symcone::taut_ring::{RingContext, TautClass};
use symcone::Guards;

fn ctx(g: u32, d: u32) -> RingContext {
    RingContext::new(g, d).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("[PASS] criterion {n:2}: {what}");
}

#[test]
fn criterion_01_eta_vanishing() {
    let mut checked = 0u64;
    for g in 1..=6 {
        for d in 2..=12 {
            let c = ctx(g, d);
            for n in 1..d {
                let eta_class = eta(c, n).unwrap();
                for a in partitions_exact(d, n) {
                    let spec = DiagonalSpec::new(c, a.clone()).unwrap();
                    let v = eta_class.pair(&diagonal_class(&spec)).unwrap();
                    assert!(v.is_zero(), "g={g} d={d} n={n} a={a:?}: got {v}");
                    checked += 1;
                }
            }
        }
    }
    pass(1, &format!("eta pairs to exactly 0 against all {checked} diagonals (g<=6, d<=12)"));
}

#[test]
fn criterion_02_diag_cone_extremal_rays() {
    let grid = GridSpec {
        g: (1, 6),
        d: (2, 14),
        n: None,
    };
    let reports = diag_cone_sweep(&grid, &Guards::default()).unwrap();
    for r in &reports {
        assert!(
            r.is_match,
            "mismatch at g={} d={} n={}: brute {:?} vs predicted {:?}",
            r.g, r.d, r.n, r.brute_extremal, r.predicted_extremal
        );
        assert!(r.dim_ok, "cone dimension != r(n) at g={} d={} n={}", r.g, r.d, r.n);
        assert!(
            r.eta_supported,
            "eta hyperplane not supporting at g={} d={} n={}",
            r.g, r.d, r.n
        );
        // Simplex case: s(n) = r(n) forces every balanced diagonal extremal.
        if r.s == r.r {
            assert_eq!(
                r.brute_extremal.len(),
                r.r as usize,
                "simplex case at g={} d={} n={}",
                r.g,
                r.d,
                r.n
            );
        }
    }
    pass(2, &format!(
        "brute-force hull extremal rays equal the predicted balanced sets (with dimension r(n) and the eta hyperplane supporting) on all {} grid instances (g<=6, d<=14)",
        reports.len()
    ));
}

#[test]
fn criterion_03_polytope_vertices() {
    let items = polytope_instances(2, 20, 6);
    let count = items.len();
    let reports = polytope_sweep(items, &Guards::default()).unwrap();
    for r in &reports {
        assert!(r.is_match, "vertex mismatch at (t,s,r)=({},{},{})", r.t, r.s, r.r);
        assert!(
            r.dim_ok,
            "affine dimension {} != r-1 at (t,s,r)=({},{},{})",
            r.affine_dim, r.t, r.s, r.r
        );
    }
    pass(3, &format!(
        "hull vertices equal the predicted set and affine dimension is r-1 on all {count} (t,s,r) instances (t<=20, r<=6)"
    ));
}

#[test]
fn criterion_04_determinant_criterion() {
    let mut checked = 0u64;
    for t in 3..=30u32 {
        for j1 in 1..t {
            for j2 in j1 + 1..t {
                for j3 in j2 + 1..=t {
                    let d = d_det(t, j1, j2, j3).unwrap();
                    assert!(!d.is_negative(), "D < 0 at t={t} ({j1},{j2},{j3})");
                    assert_eq!(
                        d.is_zero(),
                        d_det_vanishes(t, j1, j3),
                        "zero locus mismatch at t={t} ({j1},{j2},{j3})"
                    );
                    assert_eq!(
                        d,
                        d_det_closed_form(t, j1, j2, j3).unwrap(),
                        "closed form mismatch at t={t} ({j1},{j2},{j3})"
                    );
                    checked += 1;
                }
            }
        }
    }
    pass(4, &format!(
        "D(j1,j2,j3) >= 0 with zero exactly on ceil(t/j1) = floor(t/j3)+1, closed form exact, {checked} triples (t<=30)"
    ));
}

#[test]
fn criterion_05_pairing_nondegeneracy() {
    let mut checked = 0u64;
    for g in 1..=8 {
        for d in 2..=16 {
            let c = ctx(g, d);
            for m in 0..=d {
                let det = linalg::det(&c.pairing_matrix(m).unwrap());
                assert!(!det.is_zero(), "singular pairing at g={g} d={d} m={m}");
                checked += 1;
            }
        }
    }
    pass(5, &format!("det(pairing matrix) != 0 for all {checked} (g,d,m) with g<=8, d<=16"));
}

#[test]
fn criterion_06_push_pull_laws() {
    // Adjunction on all standard monomial pairs, g<=5, source degree <=9.
    let mut checked = 0u64;
    for g in 1..=5 {
        for d in 2..=9 {
            let lo = ctx(g, d);
            let hi = ctx(g, d + 1);
            for m in 0..=d {
                for a in 0..=lo.r(m) {
                    let z = TautClass::monomial(lo, m, a).unwrap();
                    let az = push_a(&z).unwrap();
                    for b in 0..=hi.r(d + 1 - m) {
                        let w = TautClass::monomial(hi, d + 1 - m, b).unwrap();
                        let lhs = az.pair(&w).unwrap();
                        let rhs = z.pair(&pull_b_checked(&w)).unwrap();
                        assert_eq!(lhs, rhs, "adjunction g={g} d={d} m={m} a={a} b={b}");
                        checked += 1;
                    }
                }
            }
        }
    }
    // Single-step and iterated eta/x push identities, g<=5, d<=10.
    for g in 1..=5 {
        for e in 2..=9u32 {
            for m in 1..e {
                let lhs = push_a(&eta(ctx(g, e), m).unwrap()).unwrap();
                let rhs = eta(ctx(g, e + 1), m)
                    .unwrap()
                    .scale(&Rat::from_int(i64::from(e) - i64::from(m)));
                assert_eq!(lhs, rhs, "A(eta) single step g={g} e={e} m={m}");
            }
        }
        for d in 2..=10u32 {
            for n in 1..d {
                let mut e = eta(ctx(g, n + 1), n).unwrap();
                let mut xp = TautClass::x_power(ctx(g, n + 1), n).unwrap();
                for _ in 0..(d - n - 1) {
                    e = push_a(&e).unwrap();
                    xp = push_a(&xp).unwrap();
                }
                assert_eq!(
                    e,
                    eta(ctx(g, d), n).unwrap().scale(&Rat::factorial(d - n - 1)),
                    "iterated eta g={g} d={d} n={n}"
                );
                assert_eq!(
                    xp,
                    TautClass::x_power(ctx(g, d), n)
                        .unwrap()
                        .scale(&Rat::factorial(d - n)),
                    "iterated x g={g} d={d} n={n}"
                );
            }
        }
    }
    pass(6, &format!(
        "push-pull adjunction on {checked} monomial pairs and the push iteration identities hold exactly (g<=5, d<=10)"
    ));
}

fn pull_b_checked(w: &TautClass) -> TautClass {
    symcone::diagonals::pull_b(w).unwrap()
}

#[test]
fn criterion_07_cheb_certificate_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let guards = Guards::default();
    let mut certified_count = 0u32;
    for trial in 0..1200 {
        let t = rng.gen_range(2..=15u32);
        let r = rng.gen_range(2..=t.min(5));
        let mut coeffs = Vec::new();
        for _ in 0..r {
            // a0 plus a2..ar: small rationals with occasional zeros.
            if rng.gen_bool(0.25) {
                coeffs.push(Rat::zero());
            } else {
                let num = rng.gen_range(-12i64..=12);
                let den = rng.gen_range(1i64..=4);
                coeffs.push(Rat::frac(num, den));
            }
        }
        let f = SymAffineForm::new(r, &coeffs).unwrap();
        let certified = cheb_certify(&f, t).unwrap();
        let (min, _witness) = brute_min(&f, t, &guards).unwrap();

        // The sublemma's claim: the minimum is attained on the balanced
        // family, hence certification implies global non-negativity.
        let balanced_min = (1..=r)
            .map(|j| f.eval(balanced(t, j).unwrap().partition.parts()))
            .min()
            .unwrap();
        assert_eq!(min, balanced_min, "trial {trial}: minimum not on the balanced family");
        if certified {
            certified_count += 1;
            assert!(
                !min.is_negative(),
                "trial {trial}: certified but brute_min = {min}"
            );
        }

        // Balancing descent: monotone, ends on a balanced configuration
        // whose value equals the corresponding balanced-family value, and
        // never undercuts the brute-force minimum.
        let mut start = vec![0u32; r as usize];
        let mut left = t;
        for slot in start.iter_mut().take(r as usize - 1) {
            let v = rng.gen_range(0..=left);
            *slot = v;
            left -= v;
        }
        start[r as usize - 1] = left;
        let end = balance_descend(&f, t, &start);
        let f_end = f.eval(&end);
        assert!(f_end <= f.eval(&start), "trial {trial}: descent increased f");
        assert!(f_end >= min, "trial {trial}: descent below the true minimum");
        let mut nonzero: Vec<u32> = end.iter().copied().filter(|&x| x > 0).collect();
        nonzero.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(nonzero).unwrap();
        assert!(p.is_balanced(), "trial {trial}: descent end {end:?} not balanced");
        let j = p.len() as u32;
        assert_eq!(
            p,
            balanced(t, j.max(1)).unwrap().partition,
            "trial {trial}: descent end is not the balanced partition"
        );
        assert_eq!(
            f_end,
            f.eval(balanced(t, j.max(1)).unwrap().partition.parts()),
            "trial {trial}: descent value off the balanced family"
        );
    }
    assert!(certified_count > 100, "too few certified samples to be meaningful");
    pass(7, &format!(
        "certificate soundness on 1200 random forms ({certified_count} certified, all with brute_min >= 0); descent monotone onto the balanced family"
    ));
}

#[test]
fn criterion_08_w_basis_law() {
    let mut checked = 0u64;
    for g in 1..=6 {
        for d in 2..=12 {
            let c = ctx(g, d);
            for n in 1..d {
                let wb = w_basis(c, n).unwrap();
                let r = c.r(d - n);
                let s = n.min(d - n);
                for lam in enumerate_partitions(d - n, s) {
                    let nd = normalized_diagonal(c, n, &lam).unwrap();
                    let coords = to_w_coords(&nd, &wb).unwrap();
                    let mut expect = vec![Rat::one(), Rat::from_int(i64::from(d - n))];
                    for k in 2..=r {
                        expect.push(Rat::from_int(lam.sigma(k)));
                    }
                    assert_eq!(coords, expect, "g={g} d={d} n={n} lam={lam:?}");
                    checked += 1;
                }
            }
        }
    }
    pass(8, &format!(
        "w-coordinates of all {checked} normalized diagonals equal (1, d-n, sigma_2, ..., sigma_r) exactly (g<=6, d<=12)"
    ));
}

#[test]
fn criterion_09_genus_one_ray() {
    let mut checked = 0u64;
    for d in 2..=12 {
        let c = ctx(1, d);
        for n in 1..d {
            for a in partitions_exact(d, n) {
                let cls = diagonal_class(&DiagonalSpec::new(c, a.clone()).unwrap());
                // Proportional to d x^{d-n} - (d-n) x^{d-n-1} theta with the
                // explicit factor prod(a_i) (n-1)!.
                let mut f = Rat::factorial(n - 1);
                for &p in a.parts() {
                    f *= &Rat::from_int(i64::from(p));
                }
                let mut expect = vec![Rat::zero(); c.r(d - n) as usize + 1];
                expect[0] = &f * &Rat::from_int(i64::from(d));
                expect[1] = &f * &Rat::from_int(-(i64::from(d) - i64::from(n)));
                assert_eq!(cls.coeffs(), &expect[..], "d={d} n={n} a={a:?}");
                checked += 1;
            }
        }
    }
    pass(9, &format!(
        "all {checked} genus-1 diagonal classes are exact multiples of d x^(d-n) - (d-n) x^(d-n-1) theta (d<=12)"
    ));
}

#[test]
fn criterion_10_negative_cross_pairing() {
    // Anchor value from the worked small-diagonal example.
    let c23 = ctx(2, 3);
    let a = diagonal_class(&DiagonalSpec::new(c23, Partition::new(vec![3]).unwrap()).unwrap());
    let b = diagonal_class(&DiagonalSpec::new(c23, Partition::new(vec![2, 1]).unwrap()).unwrap());
    assert_eq!(a.pair(&b).unwrap(), Rat::from_int(-12));

    let mut checked = 0u64;
    for g in 2..=6 {
        for d in 2..=10 {
            let c = ctx(g, d);
            for n in 1..d {
                let mut parts = vec![n + 1];
                parts.resize((d - n) as usize, 1);
                let b_spec = DiagonalSpec::new(c, Partition::new(parts).unwrap()).unwrap();
                let b_cls = diagonal_class(&b_spec);
                for a in partitions_exact(d, n) {
                    let a_cls = diagonal_class(&DiagonalSpec::new(c, a.clone()).unwrap());
                    let v = a_cls.pair(&b_cls).unwrap();
                    assert!(v.is_negative(), "g={g} d={d} n={n} a={a:?}: pairing {v}");
                    checked += 1;
                }
            }
        }
    }
    pass(10, &format!(
        "strict negativity of [Delta_a].[Delta_b] on {checked} pairs (g in 2..6, d<=10), anchor -12 exact"
    ));
}

#[test]
fn criterion_11_exact_identities() {
    let mut checked = 0u64;
    for g in 1..=6 {
        for d in 2..=12 {
            let c = ctx(g, d);
            for n in 1..d {
                assert!(big_decomposition_check(c, n).unwrap(), "big: g={g} d={d} n={n}");
                checked += 1;
            }
            assert!(dleqg_identity_check(c).unwrap(), "dleqg: g={g} d={d}");
        }
        // d = 2 divisor identity: eta_{1,2} - c_2 x = (g+1)x - theta.
        let c2 = ctx(g, 2);
        let lhs = eta(c2, 1)
            .unwrap()
            .sub(&TautClass::monomial(c2, 1, 0).unwrap().scale(&divisor_constant(c2)))
            .unwrap();
        let expect = TautClass::new(
            c2,
            1,
            vec![Rat::from_int(i64::from(g) + 1), Rat::from_int(-1)],
        )
        .unwrap();
        assert_eq!(lhs, expect, "divisor identity g={g}");
    }
    pass(11, &format!(
        "eta decompositions hold coefficientwise on {checked} instances (g<=6, d<=12); divisor constant matches the d=2 identity"
    ));
}

fn random_cone(rng: &mut ChaCha8Rng) -> RationalCone {
    let dim = rng.gen_range(2..=5usize);
    let count = rng.gen_range(1..=dim + 2);
    let mut gens = Vec::new();
    for _ in 0..count {
        let v: Vec<Rat> = (0..dim)
            .map(|_| Rat::from_int(rng.gen_range(-4i64..=4)))
            .collect();
        gens.push(v);
    }
    RationalCone::from_generators(dim, &gens).unwrap()
}

#[test]
fn criterion_12_cone_engine_laws() {
    let guards = Guards::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_4e5);
    let mut total = 0u32;
    let mut salient_full = 0u32;
    while total < 220 {
        let k = random_cone(&mut rng);
        if k.generators().is_empty() {
            continue;
        }
        total += 1;
        let n = k.ambient_dim();

        // Double duality.
        let dual = k.dual(&guards).unwrap();
        let ddual = dual.dual(&guards).unwrap();
        assert!(ddual.same_cone(&k), "double dual mismatch");

        // Dimension duality.
        let (ldim_k, _) = k.lineality();
        let (ldim_dual, _) = dual.lineality();
        assert_eq!(n - k.dim(), ldim_dual, "codim K = ldim K-dual");
        assert_eq!(ldim_k, n - dual.dim(), "ldim K = codim K-dual");

        // Representation round-trips: generators satisfy the facets, each
        // inequality facet is tight on a spanning subset of generators, and
        // the facet half-space intersection regenerates the cone.
        let facets = k.facets(&guards).unwrap();
        for g in k.generators() {
            for f in &facets {
                assert!(!dot(f, g).is_negative(), "generator violates facet");
            }
        }
        let kdim = k.dim();
        for f in &k.dual_description(&guards).unwrap().inequalities.clone() {
            let tight: Vec<Vec<Rat>> = k
                .generators()
                .iter()
                .filter(|g| dot(f, g).is_zero())
                .cloned()
                .collect();
            assert_eq!(
                symcone::linalg::rank(&tight),
                kdim - 1,
                "facet not tight on a spanning subset"
            );
        }
        for l in dual.generators() {
            assert!(k.generators().iter().all(|g| !dot(l, g).is_negative()));
        }

        if ldim_k == 0 {
            let rays = k.extremal_rays().unwrap();
            let regen = RationalCone::from_generators(n, &rays).unwrap();
            assert!(regen.same_cone(&k), "extremal rays do not regenerate");
        }

        // Face lattice: partition of relative interiors, all faces perfect.
        let faces = k.faces(&guards).unwrap();
        let mut samples: Vec<Vec<Rat>> = k.generators().to_vec();
        samples.push(vec![Rat::zero(); n]);
        // A few random nonnegative combinations of generators.
        for _ in 0..4 {
            let mut x = vec![Rat::zero(); n];
            for g in k.generators() {
                let c = Rat::from_int(rng.gen_range(0i64..=3));
                for (xi, gi) in x.iter_mut().zip(g) {
                    *xi += &(&c * gi);
                }
            }
            samples.push(x);
        }
        for x in &samples {
            let mut count = 0;
            for f in &faces {
                if in_relative_interior(&k, f, x, &guards).unwrap() {
                    count += 1;
                }
            }
            assert_eq!(count, 1, "face partition violated for {x:?}");
        }
        for f in &faces {
            assert!(is_perfect(&k, f, &guards).unwrap(), "imperfect face found");
            assert!(f.is_perfect);
        }

        // Perfect-face duality bijection on salient full cones.
        if ldim_k == 0 && k.is_full() {
            salient_full += 1;
            let dual_faces = dual.faces(&guards).unwrap();
            assert_eq!(faces.len(), dual_faces.len(), "face counts differ");
            let dual_keys: Vec<Vec<Vec<Rat>>> = dual_faces
                .iter()
                .map(|f| dual.face_points(f))
                .collect();
            let mut seen: Vec<Vec<Vec<Rat>>> = Vec::new();
            for f in &faces {
                let (dc, fhat) = k.dual_face(f, &guards).unwrap();
                assert_eq!(f.dim + fhat.dim, n, "dual face dimension");
                let key = dc.face_points(&fhat);
                assert!(dual_keys.contains(&key), "dual face not in the dual lattice");
                assert!(!seen.contains(&key), "dual-face map not injective");
                seen.push(key);
                // Round trip: the dual face of the dual face is the face,
                // compared as cones (face points may include non-extremal
                // generators).
                let (ddc, back) = dc.dual_face(&fhat, &guards).unwrap();
                let back_points: Vec<Vec<Rat>> = back
                    .generator_indices
                    .iter()
                    .map(|&i| ddc.generators()[i].clone())
                    .collect();
                let f_cone = RationalCone::from_generators(n, &k.face_points(f)).unwrap();
                let b_cone = RationalCone::from_generators(n, &back_points).unwrap();
                assert!(f_cone.same_cone(&b_cone), "dual-face round trip");
            }
        }
    }
    assert!(salient_full >= 60, "not enough salient full cones sampled: {salient_full}");
    pass(12, &format!(
        "cone-engine laws (double dual, dimension duality, round-trips, face partition, perfection, dual-face bijection) on {total} random cones ({salient_full} salient+full), N <= 5"
    ));
}

#[test]
fn criterion_13_edges1_verifier() {
    let guards = Guards::default();
    // Worked orthant example.
    let v = |a: i64, b: i64| vec![Rat::from_int(a), Rat::from_int(b)];
    let orthant = Edges1Input {
        dim: 2,
        y: vec![v(1, 0), v(0, 1)],
        delta_indices: vec![0],
        l: v(0, 1),
        phi: v(1, 1),
    };
    let rep = edges1_verify(&orthant, &guards).unwrap();
    assert!(rep.hypotheses_hold());
    for c in ["b", "c", "d", "e"] {
        assert_eq!(rep.conclusions[c], ClauseStatus::Pass, "conclusion {c}");
    }

    // Deliberately broken phi: hypothesis (i) must fail with the witness
    // generator (1,0) at index 0.
    let broken = Edges1Input {
        phi: v(0, 1),
        ..orthant.clone()
    };
    let rep = edges1_verify(&broken, &guards).unwrap();
    assert_eq!(rep.hypotheses["i"], ClauseStatus::Fail);
    assert_eq!(rep.witnesses["i"]["generator_index"], 0);

    // Diagonal-cone instance (g=2, d=4, n=2) in R_2(C_4) ~ Q^3 (standard
    // coordinates): deltas are the normalized diagonals, l pairs with eta,
    // phi pairs with x^2, and the extra generators are effective monomial
    // classes.
    let c = ctx(2, 4);
    let n = 2u32;
    let eta_class = eta(c, n).unwrap();
    let x2 = TautClass::x_power(c, n).unwrap();
    let pairing_vector = |cls: &TautClass| -> Vec<Rat> {
        // The functional y -> pair(cls, y) in the standard coordinates of
        // R^{d-n}: entries are pair(cls, x^{d-n-b} theta^b).
        (0..=c.r(c.d - n))
            .map(|b| {
                cls.pair(&TautClass::monomial(c, c.d - n, b).unwrap())
                    .unwrap()
            })
            .collect()
    };
    let l = pairing_vector(&eta_class);
    let phi = pairing_vector(&x2);
    let mut y = Vec::new();
    for lam in enumerate_partitions(2, 2) {
        y.push(normalized_diagonal(c, n, &lam).unwrap().coeffs().to_vec());
    }
    let delta_indices: Vec<usize> = (0..y.len()).collect();
    // Synthetic effective classes: the standard monomials of R^{d-n}.
    for b in 0..=c.r(c.d - n) {
        y.push(TautClass::monomial(c, c.d - n, b).unwrap().coeffs().to_vec());
    }
    let input = Edges1Input {
        dim: c.r(c.d - n) as usize + 1,
        y,
        delta_indices,
        l,
        phi,
    };
    let rep = edges1_verify(&input, &guards).unwrap();
    assert!(rep.hypotheses_hold(), "diagonal instance hypotheses: {rep:?}");
    assert_eq!(rep.conclusions["b"], ClauseStatus::Pass);
    assert_eq!(rep.conclusions["c"], ClauseStatus::Pass);
    assert_eq!(rep.conclusions["d"], ClauseStatus::Pass);
    pass(13, "edges1 verifier passes on the orthant and diagonal-cone instances and pinpoints a broken hypothesis (i) witness");
}

#[test]
fn criterion_14_presentation_relation() {
    let mut checked = 0u64;
    for g in 1..=4u32 {
        for d in (2 * g).saturating_sub(1).max(2)..=12 {
            assert!(
                ctx(g, d).verify_presentation().unwrap(),
                "presentation fails at g={g} d={d}"
            );
            checked += 1;
        }
    }
    pass(14, &format!(
        "presentation relation alpha x^(d-2g+1) reduces to zero on all {checked} instances (g<=4, 2g-1<=d<=12)"
    ));
}

// Supporting exactness probes used by several criteria.

#[test]
fn coplanarity_of_equal_alpha_runs() {
    // For any run j_1 < ... < j_l (l >= 3) with ceil(t/j_1) = floor(t/j_l)+1,
    // the (sigma_2, sigma_3, sigma_4) images are affinely 2-dimensional and
    // in convex position.
    let guards = Guards::default();
    let mut runs = 0u32;
    for t in 6..=24u32 {
        for j1 in 1..=t {
            for jl in j1 + 2..=t {
                if !d_det_vanishes(t, j1, jl) {
                    continue;
                }
                let js: Vec<u32> = (j1..=jl).collect();
                if js.len() < 3 {
                    continue;
                }
                let pts: Vec<Vec<Rat>> = js
                    .iter()
                    .map(|&j| {
                        let lam = balanced(t, j).unwrap().partition;
                        (2..=4u32).map(|k| Rat::from_int(lam.sigma(k))).collect()
                    })
                    .collect();
                assert_eq!(affine_dim(&pts), 2, "t={t} run {j1}..{jl} not planar");
                let hull = hull_vertices(&pts, &guards).unwrap();
                assert_eq!(
                    hull.vertex_indices.len(),
                    pts.len(),
                    "t={t} run {j1}..{jl} not in convex position"
                );
                runs += 1;
            }
        }
    }
    assert!(runs > 20, "too few runs exercised: {runs}");
    println!("[PASS] support: {runs} equal-alpha runs are planar polygons in sigma-coordinates");
}

#[test]
fn diagonal_cone_w_vs_standard_coordinates() {
    // The cone built in w-coordinates agrees with the standard-coordinate
    // construction through the change of basis, on a subsample of the grid.
    let guards = Guards::default();
    for (g, d, n) in [(2u32, 4u32, 2u32), (3, 10, 5), (2, 8, 3), (4, 9, 4)] {
        let c = ctx(g, d);
        let wb = w_basis(c, n).unwrap();
        let s = n.min(d - n);
        for lam in enumerate_partitions(d - n, s) {
            let nd = normalized_diagonal(c, n, &lam).unwrap();
            let coords = to_w_coords(&nd, &wb).unwrap();
            // Re-expand in the standard basis and compare.
            let mut back = TautClass::zero(c, d - n).unwrap();
            for (s_idx, t) in coords.iter().enumerate() {
                back = back.add(&wb.vectors[s_idx].scale(t)).unwrap();
            }
            assert_eq!(back, nd);
        }
        let _ = guards;
    }
    println!("[PASS] support: w-coordinate and standard-coordinate diagonal cones agree through the change of basis");
}
