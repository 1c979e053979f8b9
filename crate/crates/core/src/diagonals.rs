//! Diagonal cycle classes, the w-basis adapted to them, the eta class, the
//! push-pull operators between symmetric products of adjacent degrees, and
//! the explicit divisor-case positivity constant.

use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::partitions::Partition;
use crate::rational::Rat;
use crate::taut_ring::{generalized_binomial, MonomialSum, RingContext, TautClass};
use crate::{Error, Result};

/// An n-dimensional diagonal in C_d: the cycle traced by `sum a_i p_i` over
/// n points, for a partition `a` of d with exactly n parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSpec {
    pub ctx: RingContext,
    pub n: u32,
    pub a: Partition,
}

impl DiagonalSpec {
    pub fn new(ctx: RingContext, a: Partition) -> Result<Self> {
        let n = a.len() as u32;
        if n == 0 || n > ctx.d - 1 {
            return Err(Error::Domain(format!(
                "diagonal needs 1 <= n <= d-1 parts, got {n} with d={}",
                ctx.d
            )));
        }
        if a.sum() != ctx.d {
            return Err(Error::Domain(format!(
                "partition sums to {}, expected d = {}",
                a.sum(),
                ctx.d
            )));
        }
        Ok(DiagonalSpec { ctx, n, a })
    }
}

/// JSON form of a diagonal spec.
#[derive(Serialize, Deserialize)]
pub struct DiagonalSpecJson {
    pub g: u32,
    pub d: u32,
    pub parts: Vec<u32>,
}

impl TryFrom<DiagonalSpecJson> for DiagonalSpec {
    type Error = Error;
    fn try_from(j: DiagonalSpecJson) -> Result<DiagonalSpec> {
        DiagonalSpec::new(RingContext::new(j.g, j.d)?, Partition::new(j.parts)?)
    }
}

/// The class of the diagonal in R^{d-n}(C_d):
///
/// `[Delta_a] = prod a_i * sum_{alpha=0}^{r(n)} x^{d-n-alpha} theta^alpha
///  (-1)^alpha / alpha! sum_{beta=0}^{alpha} (-1)^beta C(alpha,beta)
///  sum_{s=0}^{r(n)} (n-s)! s! C(g-beta, s) sigma_s(a-1)`.
///
/// The output is already in the standard basis.
pub fn diagonal_class(spec: &DiagonalSpec) -> TautClass {
    let ctx = spec.ctx;
    let n = spec.n;
    let codim = ctx.d - n;
    let r = ctx.r(codim);

    let a_minus_1: Vec<u32> = spec.a.parts().iter().map(|&p| p - 1).collect();
    let mut prod_a = Rat::one();
    for &p in spec.a.parts() {
        prod_a *= &Rat::from_int(i64::from(p));
    }
    // q_sum[beta] = sum_s (n-s)! s! C(g-beta, s) sigma_s(a-1)
    let q_sum = |beta: u32| -> Rat {
        let mut acc = Rat::zero();
        for s in 0..=r {
            let sig = crate::partitions::sigma(&a_minus_1, s);
            if num_traits::Zero::is_zero(&sig) {
                continue;
            }
            let g_minus_beta = Rat::from_int(i64::from(ctx.g) - i64::from(beta));
            acc += &(Rat::factorial(n - s)
                * Rat::factorial(s)
                * generalized_binomial(&g_minus_beta, s)
                * Rat::from_int(sig));
        }
        acc
    };

    let mut coeffs = Vec::with_capacity(r as usize + 1);
    for alpha in 0..=r {
        let mut inner = Rat::zero();
        for beta in 0..=alpha {
            let binom = generalized_binomial(&Rat::from_int(i64::from(alpha)), beta);
            let term = binom * q_sum(beta);
            if beta % 2 == 0 {
                inner += &term;
            } else {
                inner -= &term;
            }
        }
        let mut c = inner / Rat::factorial(alpha);
        if alpha % 2 == 1 {
            c = -c;
        }
        coeffs.push(&prod_a * &c);
    }
    TautClass::new(ctx, codim, coeffs).expect("formula output lies in the standard basis")
}

/// The normalized diagonal `[Delta_{lambda+1}] / prod (lambda_i + 1)` for a
/// partition `lambda` of d-n with at most n parts.
pub fn normalized_diagonal(ctx: RingContext, n: u32, lambda: &Partition) -> Result<TautClass> {
    if n == 0 || n > ctx.d - 1 {
        return Err(Error::Domain(format!(
            "need 1 <= n <= d-1, got n={n}, d={}",
            ctx.d
        )));
    }
    if lambda.sum() != ctx.d - n {
        return Err(Error::Domain(format!(
            "lambda sums to {}, expected d-n = {}",
            lambda.sum(),
            ctx.d - n
        )));
    }
    let a = lambda.plus_one_padded(n as usize)?;
    let spec = DiagonalSpec::new(ctx, a)?;
    let mut norm = Rat::one();
    for &p in lambda.parts() {
        norm *= &Rat::from_int(i64::from(p) + 1);
    }
    Ok(diagonal_class(&spec).scale(&norm.recip()))
}

/// The basis w_0..w_{r(n)} of R^{d-n}(C_d) in which normalized diagonals
/// have coordinates (1, d-n, sigma_2(lambda), ..., sigma_{r(n)}(lambda)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WBasis {
    pub ctx: RingContext,
    pub n: u32,
    pub vectors: Vec<TautClass>,
}

/// `w_s = s!(n-s)! sum_{alpha=0}^{s} x^{d-n-alpha} theta^alpha
/// (-1)^alpha/alpha! sum_beta (-1)^beta C(alpha,beta) C(g-beta,s)`.
pub fn w_basis(ctx: RingContext, n: u32) -> Result<WBasis> {
    if n > ctx.d {
        return Err(Error::Domain(format!("need n <= d, got n={n}, d={}", ctx.d)));
    }
    let codim = ctx.d - n;
    let r = ctx.r(codim);
    let mut vectors = Vec::with_capacity(r as usize + 1);
    for s in 0..=r {
        let mut coeffs = vec![Rat::zero(); r as usize + 1];
        for (alpha, slot) in coeffs.iter_mut().enumerate().take(s as usize + 1) {
            let alpha = alpha as u32;
            let mut inner = Rat::zero();
            for beta in 0..=alpha {
                let g_minus_beta = Rat::from_int(i64::from(ctx.g) - i64::from(beta));
                let term = generalized_binomial(&Rat::from_int(i64::from(alpha)), beta)
                    * generalized_binomial(&g_minus_beta, s);
                if beta % 2 == 0 {
                    inner += &term;
                } else {
                    inner -= &term;
                }
            }
            let mut c = inner / Rat::factorial(alpha);
            if alpha % 2 == 1 {
                c = -c;
            }
            *slot = Rat::factorial(s) * Rat::factorial(n - s) * c;
        }
        vectors.push(TautClass::new(ctx, codim, coeffs)?);
    }
    Ok(WBasis { ctx, n, vectors })
}

/// Coordinates of a class of degree d-n in the w-basis (triangular solve).
pub fn to_w_coords(c: &TautClass, basis: &WBasis) -> Result<Vec<Rat>> {
    if c.ctx() != basis.ctx || c.codim() != basis.ctx.d - basis.n {
        return Err(Error::Domain(
            "class degree does not match the w-basis".into(),
        ));
    }
    // Columns are the w_s in the standard basis.
    let dim = basis.vectors.len();
    let mat: Vec<Vec<Rat>> = (0..dim)
        .map(|row| {
            (0..dim)
                .map(|col| basis.vectors[col].coeffs()[row].clone())
                .collect()
        })
        .collect();
    Ok(linalg::solve(&mat, c.coeffs()).expect("w-basis change of basis is triangular invertible"))
}

/// The nef class `eta_{n,d} = (dg/n) x^n - theta x^{n-1}` in R^n(C_d).
pub fn eta(ctx: RingContext, n: u32) -> Result<TautClass> {
    if n == 0 || n > ctx.d - 1 {
        return Err(Error::Domain(format!(
            "eta needs 1 <= n <= d-1, got n={n}, d={}",
            ctx.d
        )));
    }
    let r = ctx.r(n);
    let mut coeffs = vec![Rat::zero(); r as usize + 1];
    coeffs[0] = Rat::frac(i64::from(ctx.d) * i64::from(ctx.g), i64::from(n));
    coeffs[1] = Rat::from_int(-1);
    TautClass::new(ctx, n, coeffs)
}

/// `pair(eta_{n,d}, [Delta_a])`; exactly zero for every diagonal.
pub fn eta_pair_diagonal(spec: &DiagonalSpec) -> Result<Rat> {
    eta(spec.ctx, spec.n)?.pair(&diagonal_class(spec))
}

/// Push operator A: R^m(C_d) -> R^m(C_{d+1}), acting monomial-wise by
/// `A(x^a theta^b) = (d+1-a-2b) x^a theta^b + b(g-b+1) x^{a+1} theta^{b-1}`,
/// then reducing in the target ring.
pub fn push_a(c: &TautClass) -> Result<TautClass> {
    let src = c.ctx();
    let dst = RingContext::new(src.g, src.d + 1)?;
    let m = c.codim();
    let mut out = MonomialSum::zero(dst, m)?;
    for (b, coeff) in c.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let b = b as u32;
        let a = m - b;
        let lead = i64::from(src.d) + 1 - i64::from(a) - 2 * i64::from(b);
        out.add_term(b, coeff * &Rat::from_int(lead))?;
        if b > 0 {
            let f = i64::from(b) * (i64::from(src.g) - i64::from(b) + 1);
            out.add_term(b - 1, coeff * &Rat::from_int(f))?;
        }
    }
    out.reduce()
}

/// Pull operator B: R^m(C_{d+1}) -> R^{m-1}(C_d), acting monomial-wise by
/// `B(x^a theta^b) = a x^{a-1} theta^b + b(g-b+1) x^a theta^{b-1}`, then
/// reducing in the target ring. With a = b = 0 a monomial maps to zero, so
/// the operator needs m >= 1.
pub fn pull_b(c: &TautClass) -> Result<TautClass> {
    let src = c.ctx();
    if src.d < 3 {
        return Err(Error::Domain(
            "pull needs target degree >= 2, so source degree >= 3".into(),
        ));
    }
    let m = c.codim();
    if m == 0 {
        return Err(Error::Domain("pull needs codimension >= 1".into()));
    }
    let dst = RingContext::new(src.g, src.d - 1)?;
    let mut out = MonomialSum::zero(dst, m - 1)?;
    for (b, coeff) in c.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let b = b as u32;
        let a = m - b;
        if a > 0 {
            out.add_term(b, coeff * &Rat::from_int(i64::from(a)))?;
        }
        if b > 0 {
            let f = i64::from(b) * (i64::from(src.g) - i64::from(b) + 1);
            out.add_term(b - 1, coeff * &Rat::from_int(f))?;
        }
    }
    out.reduce()
}

/// The explicit divisor-case constant
/// `c_d = (g/(d-1)) * 2(g-1) / (d(d-1) + 2(g-1))`; zero exactly when g = 1.
pub fn divisor_constant(ctx: RingContext) -> Rat {
    let g = i64::from(ctx.g);
    let d = i64::from(ctx.d);
    Rat::frac(g, d - 1) * Rat::frac(2 * (g - 1), d * (d - 1) + 2 * (g - 1))
}

/// Checks the decomposition
/// `eta_{n,d} = ((d-n)(g-1)/n) x^n + [Delta_b] / (n(n+1)(d-n-1)!)` with
/// `b = (n+1, 1, ..., 1)` (a partition of d into d-n parts), coefficientwise.
/// The constant follows from the closed form
/// `[Delta_b] = (n+1)(d-n-1)!((d-n+gn)x^n - n x^{n-1} theta)`.
pub fn big_decomposition_check(ctx: RingContext, n: u32) -> Result<bool> {
    let eta_c = eta(ctx, n)?;
    let mut parts = vec![n + 1];
    parts.resize((ctx.d - n) as usize, 1);
    let spec = DiagonalSpec::new(ctx, Partition::new(parts)?)?;
    let delta = diagonal_class(&spec);
    let xn = TautClass::x_power(ctx, n)?;
    let lead = Rat::frac(
        i64::from(ctx.d - n) * (i64::from(ctx.g) - 1),
        i64::from(n),
    );
    let scale = (Rat::from_int(i64::from(n) * (i64::from(n) + 1))
        * Rat::factorial(ctx.d - n - 1))
    .recip();
    let rhs = xn.scale(&lead).add(&delta.scale(&scale))?;
    Ok(eta_c == rhs)
}

/// Checks `eta_{d-1,d} = ((g-d+1)/(d-1)) x^{d-1} + ((g+1)x - theta) x^{d-2}`
/// as an exact ring identity.
pub fn dleqg_identity_check(ctx: RingContext) -> Result<bool> {
    let eta_c = eta(ctx, ctx.d - 1)?;
    let xd1 = TautClass::x_power(ctx, ctx.d - 1)?;
    let lead = Rat::frac(i64::from(ctx.g) - i64::from(ctx.d) + 1, i64::from(ctx.d) - 1);
    let mut lin = TautClass::zero(ctx, 1)?;
    lin = lin.add(&TautClass::monomial(ctx, 1, 0)?.scale(&Rat::from_int(i64::from(ctx.g) + 1)))?;
    lin = lin.sub(&TautClass::monomial(ctx, 1, 1)?)?;
    let xd2 = TautClass::x_power(ctx, ctx.d - 2)?;
    let rhs = xd1.scale(&lead).add(&lin.multiply(&xd2)?)?;
    Ok(eta_c == rhs)
}
