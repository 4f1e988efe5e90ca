//! Exhaustive weight enumeration and the rank sweep.
//!
//! Codewords of D and E split as (form part) + (linear part) + b. The form
//! part is stored per form as an n-byte vector of F_q indices and walked with
//! an F_p odometer, so moving to the next form costs one vector addition. The
//! linear part for β = π^k is a cyclic shift of Tr(π^i), so every (β, b) pair
//! reduces to counting byte matches against a window of one doubled array.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{CodeSpec, Family, Params};
use crate::error::{consistency, Error, Result};
use crate::field::{Elem, FieldCtx};
use crate::linalg::{gf2_rank, prime_rank};
use crate::quadform::{r_distribution, s_distribution, FormSpace};
use crate::spectra::{predict, WeightDistribution};

pub const QUICK_BUDGET: u128 = 1 << 24;
pub const STANDARD_BUDGET: u128 = 1 << 32;
pub const EXTENDED_BUDGET: u128 = 1 << 38;

/// Forms whose T_Q is recomputed by brute force during a rank sweep.
const EPSILON_SAMPLE: u128 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Quick,
    Standard,
    Extended,
}

impl Tier {
    pub fn default_budget(self) -> u128 {
        match self {
            Tier::Quick => QUICK_BUDGET,
            Tier::Standard => STANDARD_BUDGET,
            Tier::Extended => EXTENDED_BUDGET,
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Quick => "quick",
            Tier::Standard => "standard",
            Tier::Extended => "extended",
        })
    }
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tier> {
        match s.to_ascii_lowercase().as_str() {
            "quick" => Ok(Tier::Quick),
            "standard" => Ok(Tier::Standard),
            "extended" => Ok(Tier::Extended),
            _ => Err(Error::InvalidParameter(format!("unknown tier {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleKind {
    Brute,
    RankSweep,
}

/// Called with each completed percentile of the form space.
pub type Progress = Arc<dyn Fn(u32) + Send + Sync>;

#[derive(Clone)]
pub struct EngineConfig {
    pub workers: usize,
    pub budget: u128,
    pub progress: Option<Progress>,
}

impl fmt::Debug for EngineConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EngineConfig")
            .field("workers", &self.workers)
            .field("budget", &self.budget)
            .finish_non_exhaustive()
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: 1 << 36,
            progress: None,
        }
    }
}

impl EngineConfig {
    pub fn with_workers(workers: usize) -> EngineConfig {
        EngineConfig { workers: workers.max(1), ..Default::default() }
    }

    pub fn budget(mut self, budget: u128) -> EngineConfig {
        self.budget = budget;
        self
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .map_err(|e| consistency(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

/// Oracle output plus the number of elementary operations actually spent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRun {
    pub distribution: WeightDistribution,
    pub kind: OracleKind,
    pub work: u64,
    /// Rank-sweep only: forms with rank 2j, indexed by j.
    pub rank_counts: Option<Vec<u64>>,
}

fn saturating_pow(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// q^k · n.
pub fn brute_estimate(q: u64, m: u32, family: Family) -> u128 {
    saturating_pow(q, family.dimension(m)).saturating_mul((saturating_pow(q, 2 * m as u64) - 1).max(1))
}

/// q^{m²} · (e·s)².
pub fn rank_sweep_estimate(q: u64, m: u32) -> u128 {
    let (_, e) = crate::arith::prime_power(q).unwrap_or((q, 1));
    let dim = (e * 2 * m) as u128;
    saturating_pow(q, (m * m) as u64).saturating_mul(dim * dim)
}

/// F_q index arithmetic on byte vectors.
struct IndexOps {
    p: u64,
    q: usize,
    add: Vec<u8>,
    neg: Vec<u8>,
}

impl IndexOps {
    fn new(ctx: &FieldCtx) -> Result<IndexOps> {
        let q = ctx.q() as usize;
        if q > 256 {
            return Err(Error::InvalidParameter(format!("enumeration supports q ≤ 256, got {q}")));
        }
        let fq = ctx.fq_elements();
        let idx = |x: Elem| ctx.fq_index(x).expect("element of F_q") as u8;
        let mut add = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = idx(ctx.add(fq[a], fq[b]));
            }
        }
        let neg = fq.iter().map(|&x| idx(ctx.neg(x))).collect();
        Ok(IndexOps { p: ctx.p(), q, add, neg })
    }

    fn add_assign(&self, dst: &mut [u8], src: &[u8]) {
        if self.p == 2 {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                *d = self.add[*d as usize * self.q + s as usize];
            }
        }
    }

    fn sub(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + self.neg[b as usize] as usize]
    }
}

/// Number of positions where `a` and `b` agree.
#[inline]
fn count_eq(a: &[u8], b: &[u8]) -> u64 {
    let mut total = 0u64;
    for (ca, cb) in a.chunks(255).zip(b.chunks(255)) {
        let mut acc = 0u8;
        for (x, y) in ca.iter().zip(cb) {
            acc = acc.wrapping_add((x == y) as u8);
        }
        total += acc as u64;
    }
    total
}

#[inline]
fn count_value(a: &[u8], v: u8) -> u64 {
    let mut total = 0u64;
    for ca in a.chunks(255) {
        let mut acc = 0u8;
        for &x in ca {
            acc = acc.wrapping_add((x == v) as u8);
        }
        total += acc as u64;
    }
    total
}

/// Mixed-radix counter over F_p digits; each step reports which basis vectors to add.
struct Odometer {
    p: u32,
    digits: Vec<u32>,
}

impl Odometer {
    fn new(p: u64, len: usize, mut index: u128) -> Odometer {
        let digits = (0..len)
            .map(|_| {
                let d = (index % p as u128) as u32;
                index /= p as u128;
                d
            })
            .collect();
        Odometer { p: p as u32, digits }
    }

    fn step(&mut self, mut add: impl FnMut(usize)) {
        for (i, d) in self.digits.iter_mut().enumerate() {
            add(i);
            *d += 1;
            if *d < self.p {
                return;
            }
            *d = 0;
        }
    }
}

/// Splits 0..len into contiguous ranges.
fn chunks(len: u128, workers: usize) -> Vec<(u128, u128)> {
    let target = (workers as u128 * 64).max(256);
    let size = len.div_ceil(target).max(1);
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < len {
        let hi = (lo + size).min(len);
        out.push((lo, hi));
        lo = hi;
    }
    out
}

struct Tracker<'a> {
    done: AtomicU64,
    total: u64,
    progress: Option<&'a Progress>,
}

impl Tracker<'_> {
    fn advance(&self, by: u64) {
        let Some(progress) = self.progress else { return };
        let before = self.done.fetch_add(by, Ordering::Relaxed);
        let after = before + by;
        let pct = |x: u64| (x as u128 * 100 / self.total.max(1) as u128) as u32;
        for p in pct(before) + 1..=pct(after) {
            progress(p);
        }
    }
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Codeword of the form part alone, as F_q indices.
fn form_vector(spec: &CodeSpec, coeffs: &crate::quadform::FormCoeffs) -> Result<Vec<u8>> {
    let ctx = spec.ctx();
    let mut params = Params::zero(spec.layout());
    params.delta0 = params.delta0.and(coeffs.delta0);
    params.deltas = coeffs.deltas.clone();
    let word = spec.codeword(&params)?;
    word.values()
        .iter()
        .map(|&x| ctx.fq_index(x).map(|i| i as u8).ok_or_else(|| consistency("codeword symbol outside F_q")))
        .collect()
}

/// Every codeword's weight, grouped by form.
pub fn brute_distribution(spec: &CodeSpec, cfg: &EngineConfig) -> Result<OracleRun> {
    let (q, m, family) = (spec.q(), spec.m(), spec.family());
    let estimate = brute_estimate(q, m, family);
    if estimate > cfg.budget {
        return Err(Error::BudgetExceeded { estimate, budget: cfg.budget });
    }
    let ctx = spec.ctx().clone();
    let ops = IndexOps::new(&ctx)?;
    let n = ctx.n() as usize;
    let space = FormSpace::new(ctx.clone());
    let basis: Vec<Vec<u8>> = space
        .prime_basis()
        .iter()
        .map(|c| form_vector(spec, c))
        .collect::<Result<_>>()?;

    // windows[ζ][k + i] = ζ − Tr(π^{k+i}); a match with the form vector at i is a zero coordinate
    let trace: Vec<u8> = (0..n as i64)
        .map(|j| ctx.fq_index(ctx.trace_q(ctx.pi_pow(j))).unwrap() as u8)
        .collect();
    let zetas: Vec<u8> = match family {
        Family::E => (0..q as u8).collect(),
        _ => vec![0],
    };
    let windows: Vec<Vec<u8>> = zetas
        .iter()
        .map(|&z| (0..2 * n).map(|j| ops.sub(z, trace[j % n])).collect())
        .collect();

    let total = space.len();
    let tracker = Tracker { done: AtomicU64::new(0), total: total as u64, progress: cfg.progress.as_ref() };
    let work_per_form = match family {
        Family::C => n as u64,
        _ => (n as u64 + 1) * n as u64 * zetas.len() as u64,
    };

    let run_chunk = |(lo, hi): (u128, u128)| -> Vec<u64> {
        let mut hist = vec![0u64; n + 1];
        let mut odo = Odometer::new(ctx.p(), basis.len(), lo);
        let mut qv = vec![0u8; n];
        for (i, &d) in odo.digits.iter().enumerate() {
            for _ in 0..d {
                ops.add_assign(&mut qv, &basis[i]);
            }
        }
        for _ in lo..hi {
            match family {
                Family::C => hist[n - count_value(&qv, 0) as usize] += 1,
                _ => {
                    for (&z, w) in zetas.iter().zip(&windows) {
                        hist[n - count_value(&qv, z) as usize] += 1;
                        for k in 0..n {
                            hist[n - count_eq(&qv, &w[k..k + n]) as usize] += 1;
                        }
                    }
                }
            }
            odo.step(|i| ops.add_assign(&mut qv, &basis[i]));
        }
        tracker.advance((hi - lo) as u64);
        hist
    };

    let parts = chunks(total, cfg.workers);
    let hist = cfg.run(|| {
        parts.into_par_iter().map(run_chunk).reduce(|| vec![0u64; n + 1], merge)
    })?;

    let dist = WeightDistribution::from_counts(
        q,
        m,
        family,
        hist.into_iter().enumerate().map(|(w, c)| (w as u64, BigUint::from(c))),
    );
    Ok(OracleRun {
        distribution: dist,
        kind: OracleKind::Brute,
        work: work_per_form * total as u64,
        rank_counts: None,
    })
}

/// Gram matrices of Tr_{q/p}∘B in the F_p basis π^0..π^{es−1}.
enum Gram {
    Binary(Vec<u64>),
    Prime(Vec<u8>),
}

fn basis_gram(ctx: &FieldCtx, form: &crate::quadform::QuadForm, dim: usize) -> Gram {
    let xs: Vec<Elem> = (0..dim as i64).map(|i| ctx.pi_pow(i)).collect();
    let digit = |a: usize, b: usize| ctx.trace_q_to_p_digit(form.bilinear(xs[a], xs[b]));
    if ctx.p() == 2 {
        Gram::Binary(
            (0..dim)
                .map(|a| (0..dim).fold(0u64, |row, b| row | ((digit(a, b) as u64) << b)))
                .collect(),
        )
    } else {
        Gram::Prime((0..dim * dim).map(|ab| digit(ab / dim, ab % dim) as u8).collect())
    }
}

/// Weight distribution from measured (rank, sign) classes of the forms.
pub fn rank_sweep(spec: &CodeSpec, cfg: &EngineConfig) -> Result<OracleRun> {
    let (q, m, family) = (spec.q(), spec.m(), spec.family());
    let estimate = rank_sweep_estimate(q, m);
    if estimate > cfg.budget {
        return Err(Error::BudgetExceeded { estimate, budget: cfg.budget });
    }
    let ctx = spec.ctx().clone();
    let p = ctx.p();
    let e = ctx.e() as usize;
    let dim = ctx.degree() as usize;
    if dim > 64 {
        return Err(Error::InvalidParameter("rank sweep needs e·s ≤ 64".into()));
    }
    let space = FormSpace::new(ctx.clone());
    let grams: Vec<Gram> = space
        .prime_basis()
        .iter()
        .map(|c| {
            let f = crate::quadform::QuadForm::new(ctx.clone(), c.clone())?;
            Ok(basis_gram(&ctx, &f, dim))
        })
        .collect::<Result<_>>()?;

    let total = space.len();
    let tracker = Tracker { done: AtomicU64::new(0), total: total as u64, progress: cfg.progress.as_ref() };
    let run_chunk = |(lo, hi): (u128, u128)| -> Vec<u64> {
        let mut ranks = vec![0u64; dim + 1];
        let mut odo = Odometer::new(p, grams.len(), lo);
        match p {
            2 => {
                let mut acc = vec![0u64; dim];
                let add = |acc: &mut Vec<u64>, i: usize| {
                    if let Gram::Binary(g) = &grams[i] {
                        for (a, &b) in acc.iter_mut().zip(g) {
                            *a ^= b;
                        }
                    }
                };
                for (i, &d) in odo.digits.iter().enumerate() {
                    for _ in 0..d {
                        add(&mut acc, i);
                    }
                }
                let mut scratch = vec![0u64; dim];
                for _ in lo..hi {
                    scratch.copy_from_slice(&acc);
                    ranks[gf2_rank(&mut scratch)] += 1;
                    odo.step(|i| add(&mut acc, i));
                }
            }
            _ => {
                let pp = p as u8;
                let mut acc = vec![0u8; dim * dim];
                let add = |acc: &mut Vec<u8>, i: usize| {
                    if let Gram::Prime(g) = &grams[i] {
                        for (a, &b) in acc.iter_mut().zip(g) {
                            *a = (*a + b) % pp;
                        }
                    }
                };
                for (i, &d) in odo.digits.iter().enumerate() {
                    for _ in 0..d {
                        add(&mut acc, i);
                    }
                }
                let mut scratch = vec![0u32; dim * dim];
                for _ in lo..hi {
                    for (s, &a) in scratch.iter_mut().zip(&acc) {
                        *s = a as u32;
                    }
                    ranks[prime_rank(p as u32, dim, &mut scratch)] += 1;
                    odo.step(|i| add(&mut acc, i));
                }
            }
        }
        tracker.advance((hi - lo) as u64);
        ranks
    };

    let parts = chunks(total, cfg.workers);
    let prime_ranks =
        cfg.run(|| parts.into_par_iter().map(run_chunk).reduce(|| vec![0u64; dim + 1], merge))?;

    // rank over F_p is e times the rank over F_q, and the F_q rank is even
    let mut rank_counts = vec![0u64; m as usize + 1];
    for (r, &c) in prime_ranks.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if r % (2 * e) != 0 {
            return Err(consistency(format!("{c} forms have F_p-rank {r}, not a multiple of 2e")));
        }
        rank_counts[r / (2 * e)] += c;
    }

    check_sample_signs(&space, total)?;

    let s = 2 * m;
    let qs = q.pow(s) as i128;
    let qs1 = q.pow(s - 1) as i128;
    let qi = q as i128;
    let mut dist = WeightDistribution::new(q, m, family);
    let to_weight = |w: i128| -> Result<u64> {
        u64::try_from(w).map_err(|_| consistency(format!("weight {w} out of range")))
    };
    for (j, &count) in rank_counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let j = j as u32;
        let eps: i8 = if j % 2 == 0 { 1 } else { -1 };
        let count = BigUint::from(count);
        match family {
            Family::C => {
                let t = eps as i128 * q.pow(s - j) as i128;
                let num = (qi - 1) * t;
                if num % qi != 0 {
                    return Err(consistency("non-integral weight from T_Q"));
                }
                dist.add(to_weight(qs - qs1 - num / qi)?, count);
            }
            Family::D | Family::E => {
                for (v, c) in s_distribution(q, s, 2 * j, eps)?.iter() {
                    dist.add(to_weight(qs - qs1 - v as i128 / qi)?, c * &count);
                }
                if family == Family::E {
                    let shifted = &count * (q - 1);
                    for (v, c) in r_distribution(q, s, 2 * j, eps)?.iter() {
                        dist.add(to_weight(qs - qs1 - 1 - v as i128 / qi)?, c * &shifted);
                    }
                }
            }
        }
    }
    Ok(OracleRun {
        distribution: dist,
        kind: OracleKind::RankSweep,
        work: (total as u64).saturating_mul((dim * dim) as u64),
        rank_counts: Some(rank_counts),
    })
}

/// T_Q by brute force on evenly spaced forms: |T_Q| = q^{s−r/2} and sign (−1)^{r/2}.
fn check_sample_signs(space: &FormSpace, total: u128) -> Result<()> {
    let ctx = space.ctx();
    let affordable = ((1u128 << 26) / ctx.order() as u128).max(1);
    let samples = EPSILON_SAMPLE.min(total).min(affordable);
    for i in 0..samples {
        let form = space.form_at(i * total / samples);
        form.check_rank_against_t()?;
    }
    Ok(())
}

/// Outcome of comparing the prediction with an oracle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub q: u64,
    pub m: u32,
    pub family: Family,
    pub tier: Tier,
    pub predicted: WeightDistribution,
    pub oracle: WeightDistribution,
    pub oracle_kind: OracleKind,
    pub equal: bool,
    pub first_difference: Option<u64>,
    pub runtime_seconds: f64,
    pub work_count: u64,
    pub work_estimate: u64,
}

/// Prefers exhaustive enumeration, then the rank sweep; refuses when neither fits the budget.
pub fn verify(spec: &CodeSpec, tier: Tier, cfg: &EngineConfig) -> Result<VerifyReport> {
    let (q, m, family) = (spec.q(), spec.m(), spec.family());
    let start = Instant::now();
    let predicted = predict(q, m, family)?;
    let brute = brute_estimate(q, m, family);
    let sweep = rank_sweep_estimate(q, m);
    let (run, estimate) = if brute <= cfg.budget {
        (brute_distribution(spec, cfg)?, brute)
    } else if sweep <= cfg.budget {
        (rank_sweep(spec, cfg)?, sweep)
    } else {
        return Err(Error::BudgetExceeded { estimate: brute.min(sweep), budget: cfg.budget });
    };
    let first_difference = predicted.first_difference(&run.distribution);
    Ok(VerifyReport {
        q,
        m,
        family,
        tier,
        equal: first_difference.is_none(),
        first_difference,
        predicted,
        oracle: run.distribution,
        oracle_kind: run.kind,
        runtime_seconds: start.elapsed().as_secs_f64(),
        work_count: run.work,
        work_estimate: u64::try_from(estimate).unwrap_or(u64::MAX),
    })
}

/// Direct enumeration through [`CodeSpec::codeword`], for cross-checking small codes.
pub fn naive_distribution(spec: &CodeSpec) -> Result<WeightDistribution> {
    let mut dist = WeightDistribution::new(spec.q(), spec.m(), spec.family());
    for i in 0..spec.size() {
        let word = spec.codeword(&spec.params_at(i))?;
        dist.add(word.weight() as u64, 1u32);
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: u64, e: u32, m: u32, family: Family) -> CodeSpec {
        CodeSpec::build(Arc::new(FieldCtx::new(p, e, 2 * m).unwrap()), family).unwrap()
    }

    fn cfg() -> EngineConfig {
        EngineConfig::with_workers(2)
    }

    #[test]
    fn counting_kernels() {
        let a: Vec<u8> = (0..600).map(|i| (i % 3) as u8).collect();
        let b: Vec<u8> = (0..600).map(|i| (i % 2) as u8).collect();
        let slow = a.iter().zip(&b).filter(|(x, y)| x == y).count() as u64;
        assert_eq!(count_eq(&a, &b), slow);
        assert_eq!(count_value(&a, 0), 200);
        assert_eq!(count_eq(&a, &a), 600);
    }

    #[test]
    fn odometer_visits_every_index() {
        let mut odo = Odometer::new(3, 3, 0);
        let mut state = [0u32; 3];
        for idx in 0..27u32 {
            assert_eq!(state, [idx % 3, idx / 3 % 3, idx / 9]);
            odo.step(|i| state[i] = (state[i] + 1) % 3);
        }
        assert_eq!(Odometer::new(2, 4, 13).digits, vec![1, 0, 1, 1]);
    }

    #[test]
    fn brute_matches_naive_enumeration() {
        for (p, e, m) in [(2, 1, 2), (3, 1, 1), (2, 1, 3)] {
            for fam in Family::ALL {
                let Ok(s) = CodeSpec::build(Arc::new(FieldCtx::new(p, e, 2 * m).unwrap()), fam) else {
                    continue;
                };
                if s.size() > 1 << 12 {
                    continue;
                }
                let fast = brute_distribution(&s, &cfg()).unwrap();
                assert_eq!(fast.distribution, naive_distribution(&s).unwrap(), "{s:?}");
            }
        }
    }

    #[test]
    fn small_known_distributions() {
        let c22 = brute_distribution(&spec(2, 1, 2, Family::C), &cfg()).unwrap();
        assert_eq!(c22.distribution.enumerator(), "1+10x^6+5x^12");
        let d22 = spec(2, 1, 2, Family::D);
        let brute = brute_distribution(&d22, &cfg()).unwrap().distribution;
        assert_eq!(brute.enumerator(), "1+15x^4+100x^6+75x^8+60x^10+5x^12");
        assert_eq!(rank_sweep(&d22, &cfg()).unwrap().distribution, brute);
    }

    #[test]
    fn rank_sweep_matches_brute_at_q3_m2() {
        for fam in Family::ALL {
            let s = spec(3, 1, 2, fam);
            let a = brute_distribution(&s, &cfg()).unwrap();
            let b = rank_sweep(&s, &cfg()).unwrap();
            assert_eq!(a.distribution, b.distribution, "{s:?}");
            assert_eq!(b.rank_counts, Some(vec![1, 20, 60]));
        }
    }

    #[test]
    fn rank_sweep_counts_at_q2_m3() {
        let run = rank_sweep(&spec(2, 1, 3, Family::D), &cfg()).unwrap();
        assert_eq!(run.rank_counts, Some(vec![1, 21, 210, 280]));
    }

    #[test]
    fn budgets_and_verify() {
        let s = spec(3, 1, 2, Family::E);
        let err = brute_distribution(&s, &cfg().budget(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        let r = verify(&s, Tier::Quick, &cfg().budget(QUICK_BUDGET)).unwrap();
        assert!(r.equal);
        assert_eq!(r.oracle_kind, OracleKind::Brute);
        assert!(r.work_count as u128 <= 2 * brute_estimate(3, 2, Family::E));
        let r = verify(&s, Tier::Quick, &cfg().budget(rank_sweep_estimate(3, 2))).unwrap();
        assert_eq!(r.oracle_kind, OracleKind::RankSweep);
        assert!(r.equal);
    }

    #[test]
    fn progress_reports_each_percentile_once() {
        let seen = Arc::new(std::sync::Mutex::new(Vec::new()));
        let sink = seen.clone();
        let mut c = cfg();
        c.progress = Some(Arc::new(move |p| sink.lock().unwrap().push(p)));
        brute_distribution(&spec(3, 1, 2, Family::D), &c).unwrap();
        let mut got = seen.lock().unwrap().clone();
        got.sort();
        assert_eq!(got, (1..=100).collect::<Vec<_>>());
    }
}
