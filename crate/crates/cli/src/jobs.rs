//! Sweep planning and execution.

use jsum_core::field::{make_field_q, FieldCtx};
use jsum_core::nt_base::{is_prime, is_prime_power};
use jsum_core::theorems::{self, lemmas, sort_reports, Report};
use jsum_core::FieldElement;
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::{cache_key, Cache};
use crate::config::{DPolicy, Identity, RunConfig};
use crate::error::CliError;

/// Seed for the randomized almost-circulant vectors.
pub const CIRCULANT_SEED: u64 = 20_250_101;
pub const CIRCULANT_SAMPLES: usize = 200;

/// One independent unit of work; yields one or more reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "job", rename_all = "kebab-case")]
pub enum Job {
    Thm1 { q: u64 },
    Thm2 { q: u64, all_d: bool },
    Corollary { p: u64 },
    Carlitz { p: u64 },
    Wuwang { q: u64, r: i64 },
    Sp { p: u64 },
    Fermat { q: u64, m: u64 },
    Eigen { q: u64, all_d: bool },
    IntegerLemmas { v: u64 },
    FieldLemmas { q: u64 },
    AlmostCirculant { m: u64 },
    SunScan { p: u64 },
}

fn odd_prime_powers(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(3)..=hi).filter(|&q| q % 2 == 1 && is_prime_power(q).is_some())
}

fn odd_primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(3)..=hi).filter(|&p| p % 2 == 1 && is_prime(p))
}

/// Every job the configuration asks for, in a fixed order.
pub fn plan(cfg: &RunConfig) -> Vec<Job> {
    let (lo, hi) = (cfg.q_min, cfg.q_max);
    let all_d = cfg.d_policy == DPolicy::AllNonsquares;
    let mut jobs = Vec::new();
    for &id in &cfg.identities {
        match id {
            Identity::Thm1 => jobs.extend(
                odd_prime_powers(lo, hi)
                    .filter(|q| q % 4 == 3)
                    .map(|q| Job::Thm1 { q }),
            ),
            Identity::Thm2 => jobs.extend(
                odd_prime_powers(lo, hi)
                    .filter(|q| q % 4 == 1)
                    .map(|q| Job::Thm2 { q, all_d }),
            ),
            Identity::Corollary => jobs.extend(
                odd_primes(lo, hi)
                    .filter(|p| p % 4 == 1)
                    .map(|p| Job::Corollary { p }),
            ),
            Identity::SunScan => jobs.extend(
                odd_primes(lo, hi)
                    .filter(|p| p % 4 == 1)
                    .map(|p| Job::SunScan { p }),
            ),
            Identity::Carlitz => jobs.extend(odd_primes(lo, hi).map(|p| Job::Carlitz { p })),
            Identity::Sp => jobs.extend(odd_primes(lo, hi).map(|p| Job::Sp { p })),
            Identity::Wuwang => {
                for q in odd_prime_powers(lo, hi.min(cfg.wuwang_max_q)).filter(|q| q % 4 == 3) {
                    jobs.extend((1..=q as i64 - 2).map(|r| Job::Wuwang { q, r }));
                }
            }
            Identity::Fermat => {
                for q in odd_prime_powers(lo, hi) {
                    let ms = (2..q - 1).filter(|m| (q - 1) % m == 0 && *m <= cfg.fermat_max_m);
                    jobs.extend(ms.map(|m| Job::Fermat { q, m }));
                }
            }
            Identity::Eigen => {
                jobs.extend(odd_prime_powers(lo, hi).map(|q| Job::Eigen { q, all_d }))
            }
            Identity::Lemmas => {
                jobs.extend((lo.max(1)..=hi).map(|v| Job::IntegerLemmas { v }));
                jobs.extend(odd_prime_powers(lo, hi).map(|q| Job::FieldLemmas { q }));
                jobs.extend((lo.max(2)..=hi.min(10)).map(|m| Job::AlmostCirculant { m }));
            }
        }
    }
    jobs
}

fn nonsquares_for(ctx: &FieldCtx, all_d: bool) -> Vec<FieldElement> {
    if all_d {
        ctx.nonsquares().collect()
    } else {
        vec![ctx.generator()]
    }
}

/// Runs one job without the cache.
pub fn execute(job: &Job, cfg: &RunConfig) -> Result<Vec<Report>, CliError> {
    let field = |q: u64| make_field_q(q, cfg.generator);
    let reports = match *job {
        Job::Thm1 { q } => vec![theorems::verify_thm1(&field(q)?)?],
        Job::Thm2 { q, all_d } => {
            let ctx = field(q)?;
            theorems::verify_thm2_for(&ctx, &nonsquares_for(&ctx, all_d))?
        }
        Job::Corollary { p } => vec![theorems::verify_corollary(&field(p)?)?],
        Job::SunScan { p } => vec![theorems::scan_sun_conjecture(&field(p)?)?],
        Job::Carlitz { p } => vec![theorems::verify_carlitz(&field(p)?)?],
        Job::Sp { p } => vec![theorems::verify_sp_squares(p)?],
        Job::Wuwang { q, r } => vec![theorems::verify_wuwang(&field(q)?, r)?],
        Job::Fermat { q, m } => vec![theorems::fermat_zeta(&field(q)?, m)?],
        Job::Eigen { q, all_d } => {
            let ctx = field(q)?;
            let mut ds = vec![FieldElement::ONE];
            ds.extend(nonsquares_for(&ctx, all_d));
            ds.iter()
                .map(|&d| theorems::verify_eigen_lemmas(&ctx, d))
                .collect::<Result<_, _>>()?
        }
        Job::IntegerLemmas { v } => lemmas::integer_lemma_reports(v as i64, lemmas::DEFAULT_A_MAX)?,
        Job::FieldLemmas { q } => lemmas::field_lemma_reports(&field(q)?)?,
        Job::AlmostCirculant { m } => {
            let vectors: Vec<Vec<i64>> =
                lemmas::sample_circulant_vectors(CIRCULANT_SEED, CIRCULANT_SAMPLES)
                    .into_iter()
                    .filter(|v| v.len() as u64 == m)
                    .collect();
            if vectors.is_empty() {
                Vec::new()
            } else {
                vec![lemmas::verify_almost_circulant(&vectors)?]
            }
        }
    };
    Ok(reports)
}

fn execute_cached(
    job: &Job,
    cfg: &RunConfig,
    cache: Option<&Cache>,
) -> Result<Vec<Report>, CliError> {
    let Some(cache) = cache else {
        return execute(job, cfg);
    };
    let key = cache_key(job, cfg.generator);
    if !cfg.force {
        if let Some(hit) = cache.load(&key) {
            return Ok(hit);
        }
    }
    let reports = execute(job, cfg)?;
    if !reports.iter().any(Report::failed) {
        cache.store(&key, &reports)?;
    }
    Ok(reports)
}

/// Runs every planned job on a pool of `cfg.parallelism` workers and returns
/// the reports in canonical order.
pub fn run_sweep(cfg: &RunConfig) -> Result<Vec<Report>, CliError> {
    let jobs = plan(cfg);
    let cache = cfg.cache_dir.as_deref().map(Cache::open).transpose()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<Vec<Report>, CliError>> = pool.install(|| {
        jobs.par_iter()
            .map(|job| execute_cached(job, cfg, cache.as_ref()))
            .collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    if !cfg.timing {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    sort_reports(&mut reports);
    Ok(reports)
}
