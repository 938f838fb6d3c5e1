//! Brute-force ground truth for the classifier.
//!
//! Everything here enumerates explicitly and stays naive on purpose; it is
//! the yardstick the theorem path in [`crate::classify`] is measured against.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_hamiltonian, HamiltonianClass, HamiltonianVerdict};
use crate::error::{Error, Result};
use crate::gen::{self, GraphSpace};
use crate::graph::{CycleSeq, MultisignedCompleteGraph};
use crate::io::serialize_graph;
use crate::multisign::Multisign;

/// Largest `n` accepted by [`enumerate_hamiltonian`].
pub const HAMILTONIAN_CAP: usize = 13;
/// Largest `n` accepted by [`enumerate_all_cycles`].
pub const ALL_CYCLES_CAP: usize = 8;
/// Largest graph space (as a power of two) accepted by exhaustive sweeps.
pub const SPACE_CAP_BITS: usize = 24;

/// Tally of multisigns over every Hamiltonian cycle of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianSurvey {
    pub n: usize,
    pub m: usize,
    pub counts: BTreeMap<Multisign, u64>,
    pub total: u64,
}

impl HamiltonianSurvey {
    pub fn distinct(&self) -> impl Iterator<Item = Multisign> + '_ {
        self.counts.keys().copied()
    }

    pub fn distinct_count(&self) -> usize {
        self.counts.len()
    }

    /// The verdict implied by the survey.
    pub fn verdict(&self) -> HamiltonianVerdict {
        let mut keys = self.counts.keys();
        match (keys.next(), keys.next()) {
            (Some(&g), None) => HamiltonianVerdict::AllSame(g),
            _ => HamiltonianVerdict::Mixed,
        }
    }
}

/// Small linear-probe tally; graphs rarely produce more than a handful of
/// distinct multisigns, so this beats hashing in the inner loop.
#[derive(Default)]
struct Tally(Vec<(u64, u64)>);

impl Tally {
    #[inline]
    fn add(&mut self, bits: u64) {
        match self.0.iter_mut().find(|(b, _)| *b == bits) {
            Some(slot) => slot.1 += 1,
            None => self.0.push((bits, 1)),
        }
    }

    fn into_map(self, width: usize) -> BTreeMap<Multisign, u64> {
        self.0
            .into_iter()
            .map(|(b, c)| (Multisign::from_bits(width, b).expect("masked bits"), c))
            .collect()
    }
}

struct HamiltonianWalk<'a> {
    graph: &'a MultisignedCompleteGraph,
    n: usize,
    second: usize,
    tally: Tally,
    total: u64,
}

impl HamiltonianWalk<'_> {
    fn extend(&mut self, last: usize, used: u32, depth: usize, acc: u64) {
        if depth == self.n {
            // second < last picks one of the two directions
            if last > self.second {
                self.tally.add(acc ^ self.graph.bits(last, 0));
                self.total += 1;
            }
            return;
        }
        for next in 1..self.n {
            if used & (1 << next) == 0 {
                let acc = acc ^ self.graph.bits(last, next);
                self.extend(next, used | (1 << next), depth + 1, acc);
            }
        }
    }
}

/// Visits each of the `(n-1)!/2` Hamiltonian cycles once (vertex 0 first,
/// second vertex smaller than the last) and tallies their multisigns.
pub fn enumerate_hamiltonian(graph: &MultisignedCompleteGraph) -> Result<HamiltonianSurvey> {
    let n = graph.n();
    if n > HAMILTONIAN_CAP {
        return Err(Error::EnumerationCap {
            what: "Hamiltonian enumeration",
            n,
            cap: HAMILTONIAN_CAP,
        });
    }
    let mut tally = Tally::default();
    let mut total = 0;
    for second in 1..n {
        let mut walk = HamiltonianWalk {
            graph,
            n,
            second,
            tally,
            total,
        };
        walk.extend(second, 1 | (1 << second), 2, graph.bits(0, second));
        tally = walk.tally;
        total = walk.total;
    }
    Ok(HamiltonianSurvey {
        n,
        m: graph.width(),
        counts: tally.into_map(graph.width()),
        total,
    })
}

/// Multisign tallies per cycle length over every cycle of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSurvey {
    pub by_length: BTreeMap<usize, BTreeMap<Multisign, u64>>,
}

impl CycleSurvey {
    /// Whether every cycle has the identity multisign.
    pub fn all_identity(&self) -> bool {
        self.by_length
            .values()
            .all(|counts| counts.keys().all(|g| g.is_identity()))
    }

    pub fn total(&self) -> u64 {
        self.by_length.values().flat_map(|c| c.values()).sum()
    }
}

/// Enumerates every cycle of length `3..=n` once, in canonical form
/// (smallest vertex first, second vertex smaller than the last).
pub fn enumerate_all_cycles(graph: &MultisignedCompleteGraph) -> Result<CycleSurvey> {
    let n = graph.n();
    if n > ALL_CYCLES_CAP {
        return Err(Error::EnumerationCap {
            what: "all-cycles enumeration",
            n,
            cap: ALL_CYCLES_CAP,
        });
    }
    let mut tallies: Vec<Tally> = (0..=n).map(|_| Tally::default()).collect();
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.clear();
        path.push(start);
        all_cycles_from(graph, start, &mut path, 1 << start, 0, &mut tallies);
    }
    let by_length = tallies
        .into_iter()
        .enumerate()
        .filter(|(_, t)| !t.0.is_empty())
        .map(|(len, t)| (len, t.into_map(graph.width())))
        .collect();
    Ok(CycleSurvey { by_length })
}

fn all_cycles_from(
    graph: &MultisignedCompleteGraph,
    start: usize,
    path: &mut Vec<usize>,
    used: u32,
    acc: u64,
    tallies: &mut [Tally],
) {
    let last = *path.last().expect("non-empty path");
    if path.len() >= 3 && path[1] < last {
        tallies[path.len()].add(acc ^ graph.bits(last, start));
    }
    for next in start + 1..graph.n() {
        if used & (1 << next) == 0 {
            path.push(next);
            all_cycles_from(
                graph,
                start,
                path,
                used | (1 << next),
                acc ^ graph.bits(last, next),
                tallies,
            );
            path.pop();
        }
    }
}

/// Fan triangles `(v1 v2 v3), (v1 v3 v4), ..., (v1 v_k-1 v_k)` of a cycle.
pub fn fan_triangles(cycle: &CycleSeq) -> Vec<[usize; 3]> {
    let vs = cycle.vertices();
    (1..vs.len() - 1)
        .map(|t| [vs[0], vs[t], vs[t + 1]])
        .collect()
}

/// Multiplies the fan triangles of `cycle` and compares with its multisign.
///
/// This is a theorem and always returns `true` on valid input; `false`
/// means the arithmetic is broken somewhere.
pub fn fan_decomposition_check(graph: &MultisignedCompleteGraph, cycle: &CycleSeq) -> Result<bool> {
    let direct = graph.cycle_multisign(cycle)?;
    let mut product = graph.identity();
    for [a, b, c] in fan_triangles(cycle) {
        product = product.try_mul(graph.triangle_multisign(a, b, c)?)?;
    }
    Ok(product == direct)
}

/// How the graphs of an agreement run are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceMode {
    /// Every sign function on `K_n` with width `m`.
    Exhaustive,
    /// `trials` seeded graphs drawn from a mix of generator models.
    Random { seed: u64, trials: usize },
}

impl fmt::Display for SpaceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceMode::Exhaustive => f.write_str("exhaustive"),
            SpaceMode::Random { seed, trials } => write!(f, "random(seed={seed}, trials={trials})"),
        }
    }
}

/// A graph where classifier and oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Space index (exhaustive) or trial number (random).
    pub index: u64,
    pub document: String,
    pub classified: HamiltonianVerdict,
    pub observed: HamiltonianVerdict,
}

#[derive(Debug, Clone)]
pub struct AgreementReport {
    pub n: usize,
    pub m: usize,
    pub mode: SpaceMode,
    pub instances: u64,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl AgreementReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Outcome of comparing the theorem path with the oracle on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub classified: HamiltonianClass,
    pub survey: HamiltonianSurvey,
}

impl Verification {
    /// MIXED iff at least two distinct multisigns were observed, and
    /// ALL_SAME(g) iff exactly `{g}` was observed.
    pub fn agrees(&self) -> bool {
        self.classified.verdict == self.survey.verdict()
    }
}

/// Runs `classifier` and the Hamiltonian enumeration on the same graph.
pub fn verify_with<F>(graph: &MultisignedCompleteGraph, classifier: F) -> Result<Verification>
where
    F: Fn(&MultisignedCompleteGraph) -> Result<HamiltonianClass>,
{
    let survey = enumerate_hamiltonian(graph)?;
    let classified = classifier(graph)?;
    Ok(Verification { classified, survey })
}

/// [`verify_with`] using [`classify_hamiltonian`].
pub fn verify(graph: &MultisignedCompleteGraph) -> Result<Verification> {
    verify_with(graph, classify_hamiltonian)
}

/// Number of bits needed to index the whole `(n, m)` graph space.
pub fn space_bits(n: usize, m: usize) -> usize {
    m * crate::graph::pair_count(n)
}

/// Draws the `trial`-th graph of a random agreement run.
///
/// Models rotate so the run covers both verdicts: independent signs at a
/// random density, planted-mixed graphs, and switched constant graphs
/// (whose Hamiltonian cycles all agree).
pub fn random_instance(
    n: usize,
    m: usize,
    rng: &mut ChaCha8Rng,
    trial: usize,
) -> Result<MultisignedCompleteGraph> {
    let seed: u64 = rng.gen();
    match trial % 4 {
        0 => gen::gen_random(n, m, seed, 0.5),
        1 => gen::gen_random(n, m, seed, rng.gen_range(0.0..=0.2)),
        2 if n >= 4 => gen::gen_planted_mixed(n, m, seed),
        _ => {
            let g = Multisign::from_bits(m, rng.gen::<u64>() & crate::multisign::width_mask(m))?;
            let base = gen::gen_constant(n, m, g)?;
            gen::switch_random(&base, seed)
        }
    }
}

/// Compares the theorem path against full enumeration over a graph space.
pub fn exhaustive_agreement(n: usize, m: usize, mode: SpaceMode) -> Result<AgreementReport> {
    agreement_with(n, m, mode, classify_hamiltonian)
}

/// [`exhaustive_agreement`] with a caller-supplied classifier.
pub fn agreement_with<F>(
    n: usize,
    m: usize,
    mode: SpaceMode,
    classifier: F,
) -> Result<AgreementReport>
where
    F: Fn(&MultisignedCompleteGraph) -> Result<HamiltonianClass>,
{
    let started = Instant::now();
    crate::multisign::check_width(m)?;
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    let mut mismatches = Vec::new();
    let mut instances = 0u64;
    let mut check = |index: u64, graph: &MultisignedCompleteGraph| -> Result<()> {
        let v = verify_with(graph, &classifier)?;
        instances += 1;
        if !v.agrees() {
            mismatches.push(Mismatch {
                index,
                document: serialize_graph(graph),
                classified: v.classified.verdict,
                observed: v.survey.verdict(),
            });
        }
        Ok(())
    };
    match mode {
        SpaceMode::Exhaustive => {
            let space = GraphSpace::full(n, m)?;
            for (index, graph) in space.enumerate() {
                check(index as u64, &graph)?;
            }
        }
        SpaceMode::Random { seed, trials } => {
            if n > HAMILTONIAN_CAP {
                return Err(Error::EnumerationCap {
                    what: "random agreement",
                    n,
                    cap: HAMILTONIAN_CAP,
                });
            }
            let mut rng = gen::rng_for(seed, n, m);
            for trial in 0..trials {
                let graph = random_instance(n, m, &mut rng, trial)?;
                check(trial as u64, &graph)?;
            }
        }
    }
    Ok(AgreementReport {
        n,
        m,
        mode,
        instances,
        mismatches,
        elapsed: started.elapsed(),
    })
}
