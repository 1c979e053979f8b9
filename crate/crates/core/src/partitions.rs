//! Integer partitions, elementary symmetric and power-sum functions, balanced
//! partitions and breaks, the determinant criterion D(j1,j2,j3), and the
//! Chebyshev-type positivity certificate with its balancing descent.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rat;
use crate::{Error, Guards, Result};

/// A partition: a non-increasing list of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, validating that parts are positive and
    /// non-increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(
                "partition parts must be non-increasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Elementary symmetric function of degree `k` of the parts.
    pub fn sigma(&self, k: u32) -> BigInt {
        sigma(&self.parts, k)
    }

    /// Power sum of degree `k` of the parts.
    pub fn power_sum(&self, k: u32) -> BigInt {
        power_sum(&self.parts, k)
    }

    /// Each part incremented by one, padded with 1s to exactly `n` parts.
    /// This is the partition of `sum + n` attached to a partition with at
    /// most `n` parts.
    pub fn plus_one_padded(&self, n: usize) -> Result<Partition> {
        if self.parts.len() > n {
            return Err(Error::Domain(format!(
                "partition has {} parts, more than {}",
                self.parts.len(),
                n
            )));
        }
        let mut parts: Vec<u32> = self.parts.iter().map(|&p| p + 1).collect();
        parts.resize(n, 1);
        Partition::new(parts)
    }

    /// Majorization: `self` is dominated by `other` (prefix sums of `self`
    /// never exceed those of `other`; equal totals required).
    pub fn majorized_by(&self, other: &Partition) -> bool {
        if self.sum() != other.sum() {
            return false;
        }
        let n = self.parts.len().max(other.parts.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..n {
            a += u64::from(*self.parts.get(i).unwrap_or(&0));
            b += u64::from(*other.parts.get(i).unwrap_or(&0));
            if a > b {
                return false;
            }
        }
        true
    }

    /// True when every pair of parts differs by at most one, i.e. the
    /// partition is `balanced(sum, len)`.
    pub fn is_balanced(&self) -> bool {
        match (self.parts.first(), self.parts.last()) {
            (Some(max), Some(min)) => max - min <= 1,
            _ => true,
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(de::Error::custom)
    }
}

/// All partitions of `t` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn enumerate_partitions(t: u32, max_parts: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec_enumerate(t, t, max_parts, &mut stack, &mut out);
    out
}

fn rec_enumerate(
    remaining: u32,
    max_part: u32,
    slots: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    // Smallest admissible first part: must be able to finish in `slots` slots.
    let lo = remaining.div_ceil(slots);
    let mut p = hi;
    while p >= lo {
        stack.push(p);
        rec_enumerate(remaining - p, p, slots - 1, stack, out);
        stack.pop();
        if p == 0 {
            break;
        }
        p -= 1;
    }
}

/// Partitions of `d` into exactly `n` positive parts, in decreasing
/// lexicographic order.
pub fn partitions_exact(d: u32, n: u32) -> Vec<Partition> {
    if d < n {
        return Vec::new();
    }
    enumerate_partitions(d - n, n)
        .into_iter()
        .map(|lam| lam.plus_one_padded(n as usize).expect("padded fits"))
        .collect()
}

/// Elementary symmetric polynomial sigma_k of the entries (sigma_0 = 1,
/// zero when `k` exceeds the number of entries).
pub fn sigma(entries: &[u32], k: u32) -> BigInt {
    let k = k as usize;
    if k > entries.len() {
        return BigInt::zero();
    }
    // e[j] accumulates sigma_j while sweeping the entries.
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for &a in entries {
        let a = BigInt::from(a);
        for j in (1..=k).rev() {
            let t = &e[j - 1] * &a;
            e[j] += t;
        }
    }
    e.pop().unwrap()
}

/// Power sum p_k of the entries.
pub fn power_sum(entries: &[u32], k: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for &a in entries {
        acc += BigInt::from(a).pow(k);
    }
    acc
}

/// Recovers sigma_k from the power sums p_1..p_k via Newton's identity
/// `k sigma_k = sum_{i=1}^{k} (-1)^{i-1} sigma_{k-i} p_i`.
pub fn newton_sigma_from_power(p: &[Rat]) -> Rat {
    let k = p.len();
    let mut sig: Vec<Rat> = vec![Rat::one()];
    for m in 1..=k {
        let mut acc = Rat::zero();
        let mut sign = Rat::one();
        for i in 1..=m {
            acc += &(&sign * &sig[m - i] * &p[i - 1]);
            sign = -sign;
        }
        sig.push(acc / Rat::from_int(m as i64));
    }
    sig.pop().unwrap()
}

/// The balanced partition of `t` in exactly `j` parts, with its division
/// data `t = alpha * j + rho`, `0 <= rho < j`, and `tau = rho * (alpha + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedInfo {
    pub t: u32,
    pub j: u32,
    pub alpha: u32,
    pub rho: u32,
    pub tau: u32,
    pub partition: Partition,
}

/// Most balanced partition of `t` into exactly `j` parts.
pub fn balanced(t: u32, j: u32) -> Result<BalancedInfo> {
    if j == 0 || j > t {
        return Err(Error::Domain(format!(
            "balanced partition needs 1 <= j <= t, got j={j}, t={t}"
        )));
    }
    let alpha = t / j;
    let rho = t % j;
    let mut parts = vec![alpha + 1; rho as usize];
    parts.resize(j as usize, alpha);
    Ok(BalancedInfo {
        t,
        j,
        alpha,
        rho,
        tau: rho * (alpha + 1),
        partition: Partition::new(parts)?,
    })
}

/// Is `j` a `t`-break? True iff `ceil(t/(j-1)) > floor(t/(j+1)) + 1`.
pub fn is_break(t: u32, j: u32, s: u32) -> Result<bool> {
    if !(2 <= j && j < s) {
        return Err(Error::Domain(format!(
            "break index needs 2 <= j <= s-1, got j={j}, s={s}"
        )));
    }
    if s > t {
        return Err(Error::Domain(format!("need s <= t, got s={s}, t={t}")));
    }
    Ok(t.div_ceil(j - 1) > t / (j + 1) + 1)
}

/// The 2x2 determinant of consecutive sigma_2/sigma_3 differences at the
/// balanced partitions `lambda^{j1}, lambda^{j2}, lambda^{j3}`.
pub fn d_det(t: u32, j1: u32, j2: u32, j3: u32) -> Result<Rat> {
    if !(1 <= j1 && j1 < j2 && j2 < j3 && j3 <= t) {
        return Err(Error::Domain(format!(
            "need 1 <= j1 < j2 < j3 <= t, got ({j1},{j2},{j3}) with t={t}"
        )));
    }
    let l1 = balanced(t, j1)?.partition;
    let l2 = balanced(t, j2)?.partition;
    let l3 = balanced(t, j3)?.partition;
    let a = l2.sigma(2) - l1.sigma(2);
    let b = l3.sigma(2) - l2.sigma(2);
    let c = l2.sigma(3) - l1.sigma(3);
    let d = l3.sigma(3) - l2.sigma(3);
    Ok(Rat::from_int(a * d - b * c))
}

/// Closed form for `6 D(j1,j2,j3)` in terms of the division data of the
/// three balanced partitions.
pub fn d_det_closed_form(t: u32, j1: u32, j2: u32, j3: u32) -> Result<Rat> {
    if !(1 <= j1 && j1 < j2 && j2 < j3 && j3 <= t) {
        return Err(Error::Domain(format!(
            "need 1 <= j1 < j2 < j3 <= t, got ({j1},{j2},{j3}) with t={t}"
        )));
    }
    let [b1, b2, b3] = [balanced(t, j1)?, balanced(t, j2)?, balanced(t, j3)?];
    let big = |x: u32| BigInt::from(x);
    let (a1, a2, a3) = (big(b1.alpha), big(b2.alpha), big(b3.alpha));
    let (t1, t2, t3) = (big(b1.tau), big(b2.tau), big(b3.tau));
    let t = big(t);
    let one = BigInt::one();
    let six_d = &t * &t * (&a1 - &a2) * (&a2 - &a3) * (&a1 - &a3)
        + &t * &t1 * (&a2 - &a3) * (&a1 + &a1 - &a2 - &a3 + &one)
        - &t * &t2 * (&a1 - &a3) * (&a2 + &a2 - &a1 - &a3 + &one)
        + &t * &t3 * (&a1 - &a2) * (&a3 + &a3 - &a1 - &a2 + &one)
        + BigInt::from(2) * &t1 * &t2 * (&a1 - &a2)
        - BigInt::from(2) * &t1 * &t3 * (&a1 - &a3)
        + BigInt::from(2) * &t2 * &t3 * (&a2 - &a3);
    Ok(Rat::frac(six_d, 6))
}

/// Should `D(j1,_,j3)` vanish? Exactly when `ceil(t/j1) = floor(t/j3) + 1`.
pub fn d_det_vanishes(t: u32, j1: u32, j3: u32) -> bool {
    t.div_ceil(j1) == t / j3 + 1
}

/// An affine combination of elementary symmetric functions,
/// `f(x) = a_0 + a_2 sigma_2(x) + ... + a_r sigma_r(x)` (no sigma_1 term),
/// evaluated on integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymAffineForm {
    r: u32,
    /// coeffs[k] multiplies sigma_k; coeffs[1] is identically zero.
    coeffs: Vec<Rat>,
}

impl SymAffineForm {
    /// Builds a form from `[a_0, a_2, ..., a_r]` (the sigma_1 slot is absent
    /// by convention). Trailing coefficients may be omitted and default to
    /// zero.
    pub fn new(r: u32, without_sigma1: &[Rat]) -> Result<Self> {
        if r < 2 {
            return Err(Error::Domain(format!("form needs r >= 2, got {r}")));
        }
        if without_sigma1.len() > r as usize {
            return Err(Error::Domain(format!(
                "too many coefficients: {} for r={r}",
                without_sigma1.len()
            )));
        }
        let mut coeffs = vec![Rat::zero(); r as usize + 1];
        for (i, a) in without_sigma1.iter().enumerate() {
            let k = if i == 0 { 0 } else { i + 1 };
            coeffs[k] = a.clone();
        }
        Ok(SymAffineForm { r, coeffs })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Coefficient of sigma_k (k = 0 means the constant term).
    pub fn coeff(&self, k: u32) -> &Rat {
        &self.coeffs[k as usize]
    }

    /// The serialized layout `[a_0, a_2, ..., a_r]`.
    pub fn coeffs_without_sigma1(&self) -> Vec<Rat> {
        let mut v = vec![self.coeffs[0].clone()];
        v.extend(self.coeffs[2..].iter().cloned());
        v
    }

    pub fn eval(&self, entries: &[u32]) -> Rat {
        let mut acc = self.coeffs[0].clone();
        for k in 2..=self.r {
            if !self.coeffs[k as usize].is_zero() {
                acc += &(&self.coeffs[k as usize] * &Rat::from_int(sigma(entries, k)));
            }
        }
        acc
    }
}

impl Serialize for SymAffineForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("SymAffineForm", 2)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("a", &self.coeffs_without_sigma1())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SymAffineForm {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            r: u32,
            a: Vec<Rat>,
        }
        let raw = Raw::deserialize(deserializer)?;
        SymAffineForm::new(raw.r, &raw.a).map_err(de::Error::custom)
    }
}

/// Chebyshev-type certificate: evaluates `f` at the balanced partitions
/// `lambda^1..lambda^r` of `t` and returns true iff all values are >= 0.
/// When true, `f` is non-negative on every vector in `N^r` with entry sum
/// `t`.
pub fn cheb_certify(f: &SymAffineForm, t: u32) -> Result<bool> {
    if t < f.r {
        return Err(Error::Domain(format!("need t >= r, got t={t}, r={}", f.r)));
    }
    for j in 1..=f.r {
        if f.eval(balanced(t, j)?.partition.parts()).is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive minimization of `f` over partitions of `t` with at most `r`
/// parts (sufficient by symmetry of `f`). The witness is the
/// lexicographically largest minimizer.
pub fn brute_min(f: &SymAffineForm, t: u32, guards: &Guards) -> Result<(Rat, Partition)> {
    if t < f.r {
        return Err(Error::Domain(format!("need t >= r, got t={t}, r={}", f.r)));
    }
    if t > guards.max_brute_t || f.r > guards.max_brute_parts {
        return Err(Error::Resource(format!(
            "brute_min guard: t <= {}, r <= {} (got t={t}, r={})",
            guards.max_brute_t, guards.max_brute_parts, f.r
        )));
    }
    let mut best: Option<(Rat, Partition)> = None;
    for p in enumerate_partitions(t, f.r) {
        let v = f.eval(p.parts());
        // Decreasing-lex enumeration: the first minimizer seen is the
        // lexicographically largest one.
        match &best {
            Some((bv, _)) if v >= *bv => {}
            _ => best = Some((v, p)),
        }
    }
    Ok(best.expect("at least one partition"))
}

/// The balancing descent from the positivity proof: repeatedly restricts `f`
/// to the line through two entries with difference at least two and moves to
/// a minimizer of the univariate quadratic `F(z) = alpha z (c - z) + beta`,
/// until every pair of nonzero entries differs by at most one.
///
/// Deterministic rules: pairs are scanned in index order and the scan
/// restarts after each move; for `alpha <= 0` the candidates `floor(c/2)` and
/// `floor(c/2)+1` are both evaluated, keeping the smaller value with ties
/// resolved toward `floor(c/2)` in the first entry; for `alpha > 0` the move
/// is to `(0, c)` unless one entry is already zero (then the pair is already
/// at a minimizer and is skipped).
pub fn balance_descend(f: &SymAffineForm, t: u32, start: &[u32]) -> Vec<u32> {
    assert_eq!(
        start.iter().sum::<u32>(),
        t,
        "start vector must sum to t"
    );
    let mut w: Vec<u32> = start.to_vec();
    'outer: loop {
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i].abs_diff(w[j]) < 2 {
                    continue;
                }
                let (cur_i, cur_j) = (w[i], w[j]);
                let c = cur_i + cur_j;
                // Probe F(z) = alpha z (c - z) + beta on this line; only the
                // sign of alpha matters and alpha ~ F(1) - F(0) since c >= 2.
                let probe = |wi: u32, w: &mut Vec<u32>| {
                    w[i] = wi;
                    w[j] = c - wi;
                    let v = f.eval(w);
                    w[i] = cur_i;
                    w[j] = cur_j;
                    v
                };
                let f0 = probe(0, &mut w);
                let f1 = probe(1, &mut w);
                let diff = &f1 - &f0;
                if diff.is_positive() {
                    // alpha > 0: minimum at the endpoints {0, c}; skip when
                    // the pair already sits at one.
                    if cur_i == 0 || cur_j == 0 {
                        continue;
                    }
                    w[i] = 0;
                    w[j] = c;
                } else {
                    // alpha <= 0: minimum among the two middle candidates.
                    let lo = c / 2;
                    let flo = probe(lo, &mut w);
                    let fhi = probe(lo + 1, &mut w);
                    let z = if fhi < flo { lo + 1 } else { lo };
                    w[i] = z;
                    w[j] = c - z;
                }
                continue 'outer;
            }
        }
        return w;
    }
}

/// Alternating binomial sum `sum_{j=0}^{n} (-1)^j C(n,j) Q(j)` for a
/// polynomial `Q` given by its coefficients `b_0..`; equals
/// `(-1)^n n! b_n` when `deg Q <= n`.
pub fn alt_binom_sum(q_coeffs: &[Rat], n: u32) -> Rat {
    let mut acc = Rat::zero();
    let mut binom = BigInt::one();
    for j in 0..=n {
        // Q(j)
        let mut q = Rat::zero();
        let ji = Rat::from_int(j);
        let mut pow = Rat::one();
        for b in q_coeffs {
            q += &(b * &pow);
            pow = &pow * &ji;
        }
        let term = Rat::from_int(binom.clone()) * q;
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        // C(n, j+1) from C(n, j)
        if j < n {
            binom = binom * BigInt::from(n - j) / BigInt::from(j + 1);
        }
    }
    acc
}
