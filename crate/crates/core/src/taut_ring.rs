//! Exact arithmetic in the tautological ring R*(C_d) of the d-th symmetric
//! product of a genus-g curve.
//!
//! R^m(C_d) has the standard monomial basis {x^m, x^{m-1}theta, ...,
//! x^{m-r(m)} theta^{r(m)}} with r(m) = min(m, d-m, g). Classes are kept in
//! this basis; reduction of arbitrary monomial sums goes through the
//! non-degenerate complementary-degree pairing (a linear solve), never
//! through the presentation ideal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::rational::Rat;
use crate::{Error, Result};

/// The pair (genus, degree) fixing the ring R*(C_d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    pub g: u32,
    pub d: u32,
}

impl RingContext {
    pub fn new(g: u32, d: u32) -> Result<Self> {
        if g < 1 {
            return Err(Error::Domain(format!("genus must be >= 1, got {g}")));
        }
        if d < 2 {
            return Err(Error::Domain(format!("degree must be >= 2, got {d}")));
        }
        Ok(RingContext { g, d })
    }

    /// r(m) = min(m, d-m, g): the top theta-exponent of the standard basis
    /// of R^m(C_d), whose dimension is r(m)+1.
    pub fn r(&self, m: u32) -> u32 {
        m.min(self.d - m).min(self.g)
    }

    fn check_codim(&self, m: u32) -> Result<()> {
        if m > self.d {
            return Err(Error::Domain(format!(
                "codimension {m} out of range [0, {}]",
                self.d
            )));
        }
        Ok(())
    }

    /// The intersection number theta^s . x^{d-s}: equal to
    /// g(g-1)...(g-s+1) for s > 0 and to 1 for s = 0 (hence 0 when s > g).
    pub fn intersection_number(&self, s: u32) -> Result<Rat> {
        if s > self.d {
            return Err(Error::Domain(format!(
                "theta-exponent {s} out of range [0, {}]",
                self.d
            )));
        }
        let mut acc = Rat::one();
        for i in 0..s {
            if i >= self.g {
                return Ok(Rat::zero());
            }
            acc *= &Rat::from_int(i64::from(self.g - i));
        }
        Ok(acc)
    }

    /// The (r(m)+1) x (r(m)+1) matrix of pairings of the standard basis of
    /// R^m(C_d) against the standard basis of R^{d-m}(C_d):
    /// entry (a, b) is the intersection number at s = a + b.
    pub fn pairing_matrix(&self, m: u32) -> Result<Vec<Vec<Rat>>> {
        self.check_codim(m)?;
        let r = self.r(m) as usize;
        let mut mat = Vec::with_capacity(r + 1);
        for a in 0..=r {
            let mut row = Vec::with_capacity(r + 1);
            for b in 0..=r {
                row.push(self.intersection_number((a + b) as u32)?);
            }
            mat.push(row);
        }
        Ok(mat)
    }

    /// Checks the presentation relation: the reduction of
    /// `alpha * x^{d-2g+1}` vanishes, where
    /// `alpha = sum_{i=0}^{g} (-1)^i theta^i / i! x^{g-i}`.
    /// Only available for d >= 2g-1 (the colon-ideal range is not covered).
    pub fn verify_presentation(&self) -> Result<bool> {
        if self.d + 1 < 2 * self.g {
            return Err(Error::Domain(format!(
                "presentation relation needs d >= 2g-1, got g={}, d={}",
                self.g, self.d
            )));
        }
        // alpha has codimension g; multiplying by x^{d-2g+1} lands in
        // codimension d-g+1.
        let m = self.d - self.g + 1;
        let mut mono = MonomialSum::zero(*self, m)?;
        let mut sign = Rat::one();
        let mut inv_fact = Rat::one();
        for i in 0..=self.g {
            if i > 0 {
                inv_fact /= Rat::from_int(i64::from(i));
            }
            mono.add_term(i, &sign * &inv_fact)?;
            sign = -sign;
        }
        Ok(mono.reduce()?.is_zero())
    }
}

/// Generalized binomial coefficient `C(r, n) = r(r-1)...(r-n+1)/n!`, equal
/// to 1 when n = 0; `r` may be any rational (negative values give signed
/// results, small integer values give zero).
pub fn generalized_binomial(r: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= &(r - &Rat::from_int(i64::from(i)));
        acc /= Rat::from_int(i64::from(i + 1));
    }
    acc
}

/// An element of R^m(C_d) in the standard basis: coefficient `alpha`
/// multiplies `x^{m-alpha} theta^alpha`, 0 <= alpha <= r(m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautClass {
    ctx: RingContext,
    codim: u32,
    coeffs: Vec<Rat>,
}

impl TautClass {
    pub fn new(ctx: RingContext, codim: u32, coeffs: Vec<Rat>) -> Result<Self> {
        ctx.check_codim(codim)?;
        let want = ctx.r(codim) as usize + 1;
        if coeffs.len() != want {
            return Err(Error::Domain(format!(
                "class in R^{codim} needs exactly {want} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(TautClass { ctx, codim, coeffs })
    }

    pub fn zero(ctx: RingContext, codim: u32) -> Result<Self> {
        ctx.check_codim(codim)?;
        let n = ctx.r(codim) as usize + 1;
        Ok(TautClass {
            ctx,
            codim,
            coeffs: vec![Rat::zero(); n],
        })
    }

    /// The monomial x^{m-alpha} theta^alpha as a class.
    pub fn monomial(ctx: RingContext, codim: u32, alpha: u32) -> Result<Self> {
        let mut c = TautClass::zero(ctx, codim)?;
        if alpha > ctx.r(codim) {
            return Err(Error::Domain(format!(
                "theta-exponent {alpha} exceeds r({codim}) = {}",
                ctx.r(codim)
            )));
        }
        c.coeffs[alpha as usize] = Rat::one();
        Ok(c)
    }

    /// x^m as a class.
    pub fn x_power(ctx: RingContext, m: u32) -> Result<Self> {
        TautClass::monomial(ctx, m, 0)
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, s: &Rat) -> TautClass {
        TautClass {
            ctx: self.ctx,
            codim: self.codim,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &TautClass) -> Result<TautClass> {
        if self.ctx != other.ctx || self.codim != other.codim {
            return Err(Error::Domain(
                "cannot add classes of different ring or degree".into(),
            ));
        }
        Ok(TautClass {
            ctx: self.ctx,
            codim: self.codim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TautClass) -> Result<TautClass> {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    /// Ring product: distributes over monomials (theta-exponents add, terms
    /// with theta-exponent above g drop) and reduces to the standard basis
    /// of degree `self.codim + other.codim`.
    pub fn multiply(&self, other: &TautClass) -> Result<TautClass> {
        if self.ctx != other.ctx {
            return Err(Error::Domain(
                "cannot multiply classes of different rings".into(),
            ));
        }
        let m = self.codim + other.codim;
        if m > self.ctx.d {
            return Err(Error::Domain(format!(
                "product degree {m} exceeds d = {}",
                self.ctx.d
            )));
        }
        let mut mono = MonomialSum::zero(self.ctx, m)?;
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                mono.add_term((a + b) as u32, ca * cb)?;
            }
        }
        mono.reduce()
    }

    /// Complementary-degree pairing: bilinear, equal to
    /// `sum_{a,b} u_a v_b * intersection_number(a + b)`.
    pub fn pair(&self, other: &TautClass) -> Result<Rat> {
        if self.ctx != other.ctx {
            return Err(Error::Domain("cannot pair classes of different rings".into()));
        }
        if self.codim + other.codim != self.ctx.d {
            return Err(Error::Domain(format!(
                "pairing needs complementary degrees, got {} + {} != {}",
                self.codim, other.codim, self.ctx.d
            )));
        }
        let mut acc = Rat::zero();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                acc += &(ca * cb * self.ctx.intersection_number((a + b) as u32)?);
            }
        }
        Ok(acc)
    }
}

/// JSON form of a tautological class: rationals as canonical "p/q" strings.
#[derive(Serialize, Deserialize)]
pub struct TautClassJson {
    pub g: u32,
    pub d: u32,
    pub codim: u32,
    pub coeffs: Vec<Rat>,
}

impl From<&TautClass> for TautClassJson {
    fn from(c: &TautClass) -> Self {
        TautClassJson {
            g: c.ctx.g,
            d: c.ctx.d,
            codim: c.codim,
            coeffs: c.coeffs.clone(),
        }
    }
}

impl TryFrom<TautClassJson> for TautClass {
    type Error = Error;
    fn try_from(j: TautClassJson) -> Result<TautClass> {
        TautClass::new(RingContext::new(j.g, j.d)?, j.codim, j.coeffs)
    }
}

/// An unreduced sum of monomials `x^{m-alpha} theta^alpha` of fixed total
/// degree `m`. Terms with theta-exponent above g are annihilated at
/// insertion (theta^{g+1} = 0 is a ring law, not a user error).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSum {
    ctx: RingContext,
    codim: u32,
    terms: BTreeMap<u32, Rat>,
}

impl MonomialSum {
    pub fn zero(ctx: RingContext, codim: u32) -> Result<Self> {
        ctx.check_codim(codim)?;
        Ok(MonomialSum {
            ctx,
            codim,
            terms: BTreeMap::new(),
        })
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn terms(&self) -> &BTreeMap<u32, Rat> {
        &self.terms
    }

    /// Adds `coeff * x^{m-alpha} theta^alpha`. Terms with `alpha > g` are
    /// silently dropped; `alpha > m` (negative x-exponent) is rejected.
    pub fn add_term(&mut self, alpha: u32, coeff: Rat) -> Result<()> {
        if alpha > self.codim {
            return Err(Error::Domain(format!(
                "theta-exponent {alpha} exceeds total degree {}",
                self.codim
            )));
        }
        if alpha > self.ctx.g || coeff.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(alpha).or_insert_with(Rat::zero);
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
        Ok(())
    }

    /// Pairing of this sum against the standard monomial
    /// `x^{d-m-beta} theta^beta` of complementary degree.
    fn pair_with_dual_monomial(&self, beta: u32) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (&alpha, coeff) in &self.terms {
            acc += &(coeff * &self.ctx.intersection_number(alpha + beta)?);
        }
        Ok(acc)
    }

    /// The unique standard-basis class with the same pairings against every
    /// standard monomial of complementary degree, obtained by solving
    /// `M c = b` with `M` the pairing matrix. Idempotent on classes already
    /// in standard form.
    pub fn reduce(&self) -> Result<TautClass> {
        let m = self.codim;
        let r = self.ctx.r(m) as usize;
        let mat = self.ctx.pairing_matrix(m)?;
        let mut b = Vec::with_capacity(r + 1);
        for beta in 0..=r as u32 {
            b.push(self.pair_with_dual_monomial(beta)?);
        }
        let coeffs =
            linalg::solve(&mat, &b).expect("pairing matrix is invertible (nondegeneracy)");
        TautClass::new(self.ctx, m, coeffs)
    }
}

impl From<&TautClass> for MonomialSum {
    fn from(c: &TautClass) -> Self {
        let mut m = MonomialSum::zero(c.ctx, c.codim).expect("valid class");
        for (alpha, coeff) in c.coeffs.iter().enumerate() {
            m.add_term(alpha as u32, coeff.clone()).expect("valid class");
        }
        m
    }
}
