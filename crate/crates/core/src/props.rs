//! Seeded randomized property suites over generated graphs and cycles.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_hamiltonian, hourglass_condition, hourglass_swap};
use crate::error::{Error, Result};
use crate::gen::{gen_random, switch};
use crate::graph::{CycleSeq, MultisignedCompleteGraph};
use crate::multisign::{width_mask, Multisign};
use crate::oracle::{enumerate_hamiltonian, fan_decomposition_check};

/// Largest `n` for which the switching suite also compares full
/// Hamiltonian surveys.
const SURVEY_N_MAX: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropsConfig {
    pub trials: usize,
    pub seed: u64,
    pub n_max: usize,
    pub m_max: usize,
}

impl Default for PropsConfig {
    fn default() -> Self {
        Self {
            trials: 10_000,
            seed: 1,
            n_max: 9,
            m_max: 8,
        }
    }
}

impl PropsConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if !(4..=64).contains(&self.n_max) {
            return Err(Error::InvalidConfig(format!(
                "nmax must be in 4..=64, got {}",
                self.n_max
            )));
        }
        crate::multisign::check_width(self.m_max)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{}: {verdict} ({} instances, {} failures)",
            self.name, self.instances, self.failures
        )
    }
}

fn suite_rng(seed: u64, suite: &str) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    for (slot, b) in key[8..].iter_mut().zip(suite.bytes()) {
        *slot = b;
    }
    ChaCha8Rng::from_seed(key)
}

fn random_graph(
    rng: &mut ChaCha8Rng,
    cfg: &PropsConfig,
    n_min: usize,
) -> Result<MultisignedCompleteGraph> {
    let n = rng.gen_range(n_min..=cfg.n_max);
    let m = rng.gen_range(1..=cfg.m_max);
    let p = rng.gen_range(0.0..=1.0);
    gen_random(n, m, rng.gen(), p)
}

fn random_cycle(rng: &mut ChaCha8Rng, n: usize, len: usize) -> CycleSeq {
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    vs.truncate(len);
    CycleSeq::new(vs).expect("distinct vertices, len >= 3")
}

/// Random legal hourglass positions for a cycle of length `k >= 4`.
fn random_positions(rng: &mut ChaCha8Rng, k: usize) -> (usize, usize) {
    loop {
        let i = rng.gen_range(0..k - 2);
        let j = rng.gen_range(i + 2..k);
        if (j + 1) % k != i {
            return (i, j);
        }
    }
}

/// The hourglass condition holds exactly when the swap preserves the
/// cycle multisign. `evaluate` computes cycle multisigns and is a
/// parameter so the suite's sensitivity can be tested.
pub fn hourglass_suite_with<F>(cfg: &PropsConfig, mut evaluate: F) -> Result<SuiteReport>
where
    F: FnMut(&MultisignedCompleteGraph, &CycleSeq) -> Result<Multisign>,
{
    let mut rng = suite_rng(cfg.seed, "hourglass");
    let mut report = SuiteReport::new("hourglass");
    for _ in 0..cfg.trials {
        let g = random_graph(&mut rng, cfg, 4)?;
        let cycle = random_cycle(&mut rng, g.n(), g.n());
        let (i, j) = random_positions(&mut rng, g.n());
        let swapped = hourglass_swap(&cycle, i, j)?;
        let condition = hourglass_condition(&g, &cycle, i, j)?;
        let same = evaluate(&g, &cycle)? == evaluate(&g, &swapped)?;
        report.record(condition == same, || {
            format!(
                "cycle {:?} i={i} j={j}: condition={condition} same={same}",
                cycle.vertices()
            )
        });
    }
    Ok(report)
}

pub fn hourglass_suite(cfg: &PropsConfig) -> Result<SuiteReport> {
    hourglass_suite_with(cfg, |g, c| g.cycle_multisign(c))
}

/// Fan triangles multiply to the cycle multisign, for cycles of every length.
pub fn fan_suite(cfg: &PropsConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(cfg.seed, "fan");
    let mut report = SuiteReport::new("fan-decomposition");
    for _ in 0..cfg.trials {
        let g = random_graph(&mut rng, cfg, 3)?;
        let len = rng.gen_range(3..=g.n());
        let cycle = random_cycle(&mut rng, g.n(), len);
        let ok = fan_decomposition_check(&g, &cycle)?;
        report.record(ok, || format!("n={} cycle {:?}", g.n(), cycle.vertices()));
    }
    Ok(report)
}

/// Switching preserves every triangle, the Hamiltonian verdict, and (for
/// small `n`) the full Hamiltonian survey.
pub fn switching_suite(cfg: &PropsConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(cfg.seed, "switching");
    let mut report = SuiteReport::new("switching");
    for _ in 0..cfg.trials {
        let g = random_graph(&mut rng, cfg, 3)?;
        let mask = width_mask(g.width());
        let theta: Vec<Multisign> = (0..g.n())
            .map(|_| Multisign::from_bits(g.width(), rng.gen::<u64>() & mask))
            .collect::<Result<_>>()?;
        let s = switch(&g, &theta)?;
        let n = g.n();
        let mut ok = (0..n).all(|a| {
            (a + 1..n)
                .all(|b| (b + 1..n).all(|c| g.triangle_bits(a, b, c) == s.triangle_bits(a, b, c)))
        });
        ok &= classify_hamiltonian(&g)?.verdict == classify_hamiltonian(&s)?.verdict;
        if n <= SURVEY_N_MAX {
            ok &= enumerate_hamiltonian(&g)?.counts == enumerate_hamiltonian(&s)?.counts;
        }
        report.record(ok, || format!("n={n} m={} theta={theta:?}", g.width()));
    }
    Ok(report)
}

/// All `2k` rotations and reflections of a cycle share its multisign and
/// its canonical form.
pub fn rotation_suite(cfg: &PropsConfig) -> Result<SuiteReport> {
    let mut rng = suite_rng(cfg.seed, "rotation");
    let mut report = SuiteReport::new("rotation-reflection");
    for _ in 0..cfg.trials {
        let g = random_graph(&mut rng, cfg, 3)?;
        let len = rng.gen_range(3..=g.n());
        let cycle = random_cycle(&mut rng, g.n(), len);
        let sign = g.cycle_multisign(&cycle)?;
        let canon = cycle.canonical();
        let mut ok = true;
        for s in cycle.symmetries() {
            ok &= g.cycle_multisign(&s)? == sign && s.canonical() == canon;
        }
        report.record(ok, || format!("cycle {:?}", cycle.vertices()));
    }
    Ok(report)
}

/// Runs every suite in a fixed order.
pub fn run_all(cfg: &PropsConfig) -> Result<Vec<SuiteReport>> {
    cfg.validate()?;
    Ok(vec![
        hourglass_suite(cfg)?,
        fan_suite(cfg)?,
        switching_suite(cfg)?,
        rotation_suite(cfg)?,
    ])
}
