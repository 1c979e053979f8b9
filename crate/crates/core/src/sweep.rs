//! Grid sweeps over independent instances. With the default `parallel`
//! feature the instances run on the rayon pool; the `_seq` variants always
//! run sequentially (used by the benchmark suite to compare both paths).
//! Output order is the deterministic grid order in every case.

use serde::Serialize;

use crate::diag_cone::{analyze, polytope_pi, DiagConeReport, PolytopeReport};
use crate::diagonals::{diagonal_class, eta, DiagonalSpec};
use crate::par;
use crate::partitions::partitions_exact;
use crate::rational::Rat;
use crate::taut_ring::RingContext;
use crate::{Guards, Result};

/// Inclusive ranges for a diagonal-cone sweep.
#[derive(Clone, Debug)]
pub struct GridSpec {
    pub g: (u32, u32),
    pub d: (u32, u32),
    /// `None` sweeps every n in 1..=d-1; `Some(n)` restricts to one value.
    pub n: Option<u32>,
}

impl GridSpec {
    fn instances(&self) -> Vec<(u32, u32, u32)> {
        let mut v = Vec::new();
        for g in self.g.0..=self.g.1 {
            for d in self.d.0..=self.d.1 {
                match self.n {
                    Some(n) => {
                        if n >= 1 && n < d {
                            v.push((g, d, n));
                        }
                    }
                    None => {
                        for n in 1..d {
                            v.push((g, d, n));
                        }
                    }
                }
            }
        }
        v
    }
}

/// Analyzes every (g, d, n) instance of the grid.
pub fn diag_cone_sweep(grid: &GridSpec, guards: &Guards) -> Result<Vec<DiagConeReport>> {
    let items = grid.instances();
    collect_results(par::map_collect(items, |(g, d, n)| {
        analyze(RingContext::new(g, d)?, n, guards)
    }))
}

/// Sequential variant of [`diag_cone_sweep`].
pub fn diag_cone_sweep_seq(grid: &GridSpec, guards: &Guards) -> Result<Vec<DiagConeReport>> {
    let items = grid.instances();
    collect_results(par::map_collect_seq(items, |(g, d, n)| {
        analyze(RingContext::new(g, d)?, n, guards)
    }))
}

/// All (t, s, r) instances with `t_lo <= t <= t_hi`, `s <= t`,
/// `2 <= r <= min(s, r_max)`.
pub fn polytope_instances(t_lo: u32, t_hi: u32, r_max: u32) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for t in t_lo.max(2)..=t_hi {
        for s in 2..=t {
            for r in 2..=s.min(r_max) {
                v.push((t, s, r));
            }
        }
    }
    v
}

/// Runs `polytope_pi` over explicit instances.
pub fn polytope_sweep(
    items: Vec<(u32, u32, u32)>,
    guards: &Guards,
) -> Result<Vec<PolytopeReport>> {
    collect_results(par::map_collect(items, |(t, s, r)| {
        polytope_pi(t, s, r, guards)
    }))
}

/// Sequential variant of [`polytope_sweep`].
pub fn polytope_sweep_seq(
    items: Vec<(u32, u32, u32)>,
    guards: &Guards,
) -> Result<Vec<PolytopeReport>> {
    collect_results(par::map_collect_seq(items, |(t, s, r)| {
        polytope_pi(t, s, r, guards)
    }))
}

/// One eta-vanishing check: the pairing of eta against a diagonal class.
#[derive(Clone, Debug, Serialize)]
pub struct EtaCheckRow {
    pub g: u32,
    pub d: u32,
    pub n: u32,
    pub parts: Vec<u32>,
    pub pairing: Rat,
}

/// Pairs eta_{n,d} against every diagonal of dimension n in C_d.
pub fn eta_check(ctx: RingContext, n: u32) -> Result<Vec<EtaCheckRow>> {
    let eta_class = eta(ctx, n)?;
    let mut rows = Vec::new();
    for a in partitions_exact(ctx.d, n) {
        let spec = DiagonalSpec::new(ctx, a.clone())?;
        let pairing = eta_class.pair(&diagonal_class(&spec))?;
        rows.push(EtaCheckRow {
            g: ctx.g,
            d: ctx.d,
            n,
            parts: a.parts().to_vec(),
            pairing,
        });
    }
    Ok(rows)
}

/// Eta-vanishing over a whole grid; returns one row per diagonal.
pub fn eta_sweep(grid: &GridSpec) -> Result<Vec<EtaCheckRow>> {
    let items = grid.instances();
    let nested = collect_results(par::map_collect(items, |(g, d, n)| {
        eta_check(RingContext::new(g, d)?, n)
    }))?;
    Ok(nested.into_iter().flatten().collect())
}

/// Sequential variant of [`eta_sweep`].
pub fn eta_sweep_seq(grid: &GridSpec) -> Result<Vec<EtaCheckRow>> {
    let items = grid.instances();
    let nested = collect_results(par::map_collect_seq(items, |(g, d, n)| {
        eta_check(RingContext::new(g, d)?, n)
    }))?;
    Ok(nested.into_iter().flatten().collect())
}

fn collect_results<T>(items: Vec<Result<T>>) -> Result<Vec<T>> {
    items.into_iter().collect()
}
