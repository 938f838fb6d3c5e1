//! Deterministic graph generators.
//!
//! Randomness comes from ChaCha8 keyed by `(seed, n, m)`, so a generator
//! spec reproduces bit-identically on every platform.

use std::ops::Range;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{pair_count, MultisignedCompleteGraph};
use crate::multisign::{check_width, width_mask, Multisign};
use crate::oracle::SPACE_CAP_BITS;

/// Generator models exposed on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Constant(Multisign),
    Random {
        seed: u64,
        neg_prob: f64,
    },
    PlantedMixed {
        seed: u64,
    },
    /// Graphs `start..end` of the exhaustive space.
    All(Range<u64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub model: Model,
}

impl GenSpec {
    /// Generates every graph the spec describes.
    pub fn generate(&self) -> Result<Vec<MultisignedCompleteGraph>> {
        let (n, m) = (self.n, self.m);
        match &self.model {
            Model::Constant(g) => Ok(vec![gen_constant(n, m, *g)?]),
            Model::Random { seed, neg_prob } => Ok(vec![gen_random(n, m, *seed, *neg_prob)?]),
            Model::PlantedMixed { seed } => Ok(vec![gen_planted_mixed(n, m, *seed)?]),
            Model::All(range) => Ok(GraphSpace::range(n, m, range.clone())?.collect()),
        }
    }
}

/// ChaCha8 keyed by the seed and the graph dimensions.
pub fn rng_for(seed: u64, n: usize, m: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(n as u64).to_le_bytes());
    key[16..24].copy_from_slice(&(m as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn check_dims(n: usize, m: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    check_width(m)
}

/// Every edge carries `g`.
pub fn gen_constant(n: usize, m: usize, g: Multisign) -> Result<MultisignedCompleteGraph> {
    check_dims(n, m)?;
    if g.width() != m {
        return Err(Error::WidthMismatch {
            left: m,
            right: g.width(),
        });
    }
    MultisignedCompleteGraph::constant(n, g)
}

/// Each edge component is independently `-1` with probability `neg_prob`.
///
/// A component is negative when the top 53 bits of a fresh ChaCha8 word,
/// read as a fraction of `2^53`, fall below `neg_prob`.
pub fn gen_random(
    n: usize,
    m: usize,
    seed: u64,
    neg_prob: f64,
) -> Result<MultisignedCompleteGraph> {
    check_dims(n, m)?;
    if !(0.0..=1.0).contains(&neg_prob) {
        return Err(Error::InvalidProbability(neg_prob));
    }
    let mut rng = rng_for(seed, n, m);
    let edges = (0..pair_count(n))
        .map(|_| {
            (0..m).fold(0u64, |bits, c| {
                let u = (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
                if u < neg_prob {
                    bits | 1 << c
                } else {
                    bits
                }
            })
        })
        .collect();
    MultisignedCompleteGraph::from_edge_bits(n, m, edges)
}

fn random_selector(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<Multisign> {
    let mask = width_mask(m);
    (0..n)
        .map(|_| Multisign::from_bits(m, rng.next_u64() & mask).expect("masked"))
        .collect()
}

/// A graph whose triangles are guaranteed to be mixed.
///
/// Starts from a randomly switched all-positive graph and flips component 0
/// of one random edge. Returns the graph and the flipped edge.
pub fn gen_planted_mixed_with_edge(
    n: usize,
    m: usize,
    seed: u64,
) -> Result<(MultisignedCompleteGraph, (usize, usize))> {
    if n < 4 {
        return Err(Error::TooFewVertices { n, min: 4 });
    }
    check_width(m)?;
    let mut rng = rng_for(seed, n, m);
    let base = MultisignedCompleteGraph::constant(n, Multisign::identity(m)?)?;
    let theta = random_selector(&mut rng, n, m);
    let mut graph = switch(&base, &theta)?;
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    let (u, v) = (u.min(v), u.max(v));
    let flipped = graph.edge_sign(u, v)?.flip(0);
    graph.set_edge_sign(u, v, flipped)?;
    Ok((graph, (u, v)))
}

pub fn gen_planted_mixed(n: usize, m: usize, seed: u64) -> Result<MultisignedCompleteGraph> {
    gen_planted_mixed_with_edge(n, m, seed).map(|(g, _)| g)
}

/// Switching: `sigma'(uv) = theta(u) sigma(uv) theta(v)`.
///
/// Each `theta(v)` appears twice in any cycle product, so every cycle keeps
/// its multisign.
pub fn switch(
    graph: &MultisignedCompleteGraph,
    theta: &[Multisign],
) -> Result<MultisignedCompleteGraph> {
    let n = graph.n();
    if theta.len() != n {
        return Err(Error::SelectorLength {
            got: theta.len(),
            n,
        });
    }
    if let Some(bad) = theta.iter().find(|t| t.width() != graph.width()) {
        return Err(Error::WidthMismatch {
            left: graph.width(),
            right: bad.width(),
        });
    }
    let edges = graph
        .edges()
        .map(|(u, v, s)| s.bits() ^ theta[u].bits() ^ theta[v].bits())
        .collect();
    MultisignedCompleteGraph::from_edge_bits(n, graph.width(), edges)
}

/// Switches by a seeded random selector.
pub fn switch_random(
    graph: &MultisignedCompleteGraph,
    seed: u64,
) -> Result<MultisignedCompleteGraph> {
    let mut rng = rng_for(seed, graph.n(), graph.width());
    let theta = random_selector(&mut rng, graph.n(), graph.width());
    switch(graph, &theta)
}

/// Bijection between `0..2^(m*C(n,2))` and graphs.
///
/// Bit `e*m + c` of the index is component `c` of the edge with pairing
/// index `e`. Streams graphs in increasing index order.
#[derive(Debug, Clone)]
pub struct GraphSpace {
    n: usize,
    m: usize,
    next: u64,
    end: u64,
}

impl GraphSpace {
    pub fn bits(n: usize, m: usize) -> usize {
        m * pair_count(n)
    }

    /// The whole space; at most `2^24` graphs.
    pub fn full(n: usize, m: usize) -> Result<Self> {
        check_dims(n, m)?;
        let bits = Self::bits(n, m);
        if bits > SPACE_CAP_BITS {
            return Err(Error::SpaceTooLarge {
                bits,
                cap_bits: SPACE_CAP_BITS,
            });
        }
        Ok(Self {
            n,
            m,
            next: 0,
            end: 1 << bits,
        })
    }

    /// A sub-interval of the space. The space itself may exceed the
    /// exhaustive cap as long as it is indexable by `u64`.
    pub fn range(n: usize, m: usize, range: Range<u64>) -> Result<Self> {
        check_dims(n, m)?;
        let bits = Self::bits(n, m);
        let size = if bits >= 64 { None } else { Some(1u64 << bits) };
        let fits = match size {
            Some(size) => range.start <= range.end && range.end <= size,
            None => false,
        };
        if !fits {
            return Err(Error::IndexRange {
                start: range.start,
                end: range.end,
                bits,
            });
        }
        Ok(Self {
            n,
            m,
            next: range.start,
            end: range.end,
        })
    }

    /// The graph at `index`.
    pub fn graph_at(n: usize, m: usize, index: u64) -> Result<MultisignedCompleteGraph> {
        let bits = Self::bits(n, m);
        if bits < 64 && index >> bits != 0 {
            return Err(Error::IndexRange {
                start: index,
                end: index + 1,
                bits,
            });
        }
        let mask = width_mask(m);
        let edges = (0..pair_count(n))
            .map(|e| {
                let shift = e * m;
                if shift >= 64 {
                    0
                } else {
                    (index >> shift) & mask
                }
            })
            .collect();
        MultisignedCompleteGraph::from_edge_bits(n, m, edges)
    }

    pub fn len(&self) -> u64 {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Splits the remaining interval into `parts` contiguous pieces.
    pub fn split(&self, parts: u64) -> Vec<GraphSpace> {
        let parts = parts.max(1);
        let len = self.len();
        (0..parts)
            .map(|p| GraphSpace {
                n: self.n,
                m: self.m,
                next: self.next + len * p / parts,
                end: self.next + len * (p + 1) / parts,
            })
            .collect()
    }
}

impl Iterator for GraphSpace {
    type Item = MultisignedCompleteGraph;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let g = Self::graph_at(self.n, self.m, self.next).expect("index in range");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.len() as usize;
        (len, Some(len))
    }
}
