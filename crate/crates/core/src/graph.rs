//! Multisigned complete graphs and cycles over them.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::multisign::{check_width, width_mask, Multisign};

/// Number of unordered pairs in `K_n`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Flat upper-triangular index of the pair `{u, v}` with `u < v`.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// `K_n` with a width-`m` multisign on each of its `n(n-1)/2` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultisignedCompleteGraph {
    n: usize,
    width: usize,
    edges: Vec<u64>,
}

impl MultisignedCompleteGraph {
    /// A graph with every edge set to `g`.
    pub fn constant(n: usize, g: Multisign) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { n, min: 3 });
        }
        Ok(Self {
            n,
            width: g.width(),
            edges: vec![g.bits(); pair_count(n)],
        })
    }

    /// Builds a graph from edge bit words listed in pairing-index order.
    pub fn from_edge_bits(n: usize, width: usize, edges: Vec<u64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { n, min: 3 });
        }
        check_width(width)?;
        assert_eq!(edges.len(), pair_count(n), "edge count must be n(n-1)/2");
        let mask = width_mask(width);
        if edges.iter().any(|&b| b & !mask != 0) {
            return Err(Error::InvalidWidth(width));
        }
        Ok(Self { n, width, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Multisign width `m`.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn identity(&self) -> Multisign {
        Multisign::from_bits_unchecked(self.width, 0)
    }

    /// Edge bit words in pairing-index order.
    pub fn edge_bits_slice(&self) -> &[u64] {
        &self.edges
    }

    /// Iterates `(u, v, sign)` with `u < v` in pairing-index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Multisign)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.edges.iter())
            .map(|((u, v), &b)| (u, v, Multisign::from_bits_unchecked(self.width, b)))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        Ok(())
    }

    /// Bit word of edge `{u, v}`; both must be distinct and in range.
    #[inline]
    pub(crate) fn bits(&self, u: usize, v: usize) -> u64 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges[pair_index(self.n, a, b)]
    }

    /// The multisign of edge `{u, v}`; symmetric in its arguments.
    pub fn edge_sign(&self, u: usize, v: usize) -> Result<Multisign> {
        self.check_pair(u, v)?;
        Ok(Multisign::from_bits_unchecked(self.width, self.bits(u, v)))
    }

    pub fn set_edge_sign(&mut self, u: usize, v: usize, g: Multisign) -> Result<()> {
        self.check_pair(u, v)?;
        if g.width() != self.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: g.width(),
            });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges[pair_index(self.n, a, b)] = g.bits();
        Ok(())
    }

    #[inline]
    pub(crate) fn triangle_bits(&self, a: usize, b: usize, c: usize) -> u64 {
        self.bits(a, b) ^ self.bits(b, c) ^ self.bits(a, c)
    }

    /// Product of edge multisigns around the cycle, closing edge included.
    pub fn cycle_multisign(&self, cycle: &CycleSeq) -> Result<Multisign> {
        cycle.check_against(self.n)?;
        let vs = cycle.vertices();
        let closing = self.bits(vs[vs.len() - 1], vs[0]);
        let bits = vs
            .windows(2)
            .fold(closing, |acc, w| acc ^ self.bits(w[0], w[1]));
        Ok(Multisign::from_bits_unchecked(self.width, bits))
    }

    /// Multisign of the triangle `abc`.
    pub fn triangle_multisign(&self, a: usize, b: usize, c: usize) -> Result<Multisign> {
        for w in [a, b, c] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if a == b || b == c || a == c {
            return Err(Error::InvalidCycle(format!(
                "triangle vertices ({a}, {b}, {c}) are not distinct"
            )));
        }
        Ok(Multisign::from_bits_unchecked(
            self.width,
            self.triangle_bits(a, b, c),
        ))
    }
}

/// A cycle given as an ordered list of distinct vertices, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleSeq(Vec<usize>);

impl CycleSeq {
    /// Checks length ≥ 3 and distinctness. Range is checked against a graph later.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "length {} is below 3",
                vertices.len()
            )));
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        if let Some(dup) = vertices.iter().find(|&&v| !seen.insert(v)) {
            return Err(Error::InvalidCycle(format!("vertex {dup} repeated")));
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub(crate) fn check_against(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    /// Normal form: smallest vertex first, then the direction whose second
    /// vertex is smaller than the last.
    pub fn canonical(&self) -> CycleSeq {
        let k = self.0.len();
        let start = (0..k).min_by_key(|&i| self.0[i]).unwrap_or(0);
        let mut out: Vec<usize> = (0..k).map(|t| self.0[(start + t) % k]).collect();
        if out[1] > out[k - 1] {
            out[1..].reverse();
        }
        CycleSeq(out)
    }

    /// All `2k` rotations and reflections of the sequence.
    pub fn symmetries(&self) -> Vec<CycleSeq> {
        let k = self.0.len();
        let mut out = Vec::with_capacity(2 * k);
        for r in 0..k {
            let rot: Vec<usize> = (0..k).map(|t| self.0[(r + t) % k]).collect();
            let mut rev = rot.clone();
            rev.reverse();
            out.push(CycleSeq(rot));
            out.push(CycleSeq(rev));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for CycleSeq {
    type Error = Error;

    fn try_from(vertices: Vec<usize>) -> Result<Self> {
        Self::new(vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisign {
        s.parse().unwrap()
    }

    fn cyc(v: &[usize]) -> CycleSeq {
        CycleSeq::new(v.to_vec()).unwrap()
    }

    fn k4_one_negative() -> MultisignedCompleteGraph {
        let mut g = MultisignedCompleteGraph::constant(4, ms("+")).unwrap();
        g.set_edge_sign(0, 1, ms("-")).unwrap();
        g
    }

    #[test]
    fn pairing_index_is_dense_and_ordered() {
        for n in 3..10 {
            let mut expected = 0;
            for u in 0..n {
                for v in u + 1..n {
                    assert_eq!(pair_index(n, u, v), expected);
                    expected += 1;
                }
            }
            assert_eq!(expected, pair_count(n));
        }
    }

    #[test]
    fn edge_lookup() {
        let neg = MultisignedCompleteGraph::constant(4, ms("-")).unwrap();
        assert_eq!(neg.edge_sign(0, 3).unwrap(), ms("-"));
        assert_eq!(neg.edge_sign(2, 2), Err(Error::LoopEdge(2)));
        assert_eq!(
            neg.edge_sign(0, 4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
        let g = k4_one_negative();
        assert_eq!(g.edge_sign(1, 0).unwrap(), ms("-"));
        assert_eq!(g.edge_sign(0, 1).unwrap(), ms("-"));
        assert_eq!(g.edge_sign(2, 3).unwrap(), ms("+"));
        assert_eq!(g.edges().count(), 6);
    }

    #[test]
    fn too_few_vertices() {
        assert!(MultisignedCompleteGraph::constant(2, ms("+")).is_err());
    }

    #[test]
    fn cycle_products() {
        let k5 = MultisignedCompleteGraph::constant(5, ms("-")).unwrap();
        assert_eq!(k5.cycle_multisign(&cyc(&[0, 1, 2, 3, 4])).unwrap(), ms("-"));
        let k6 = MultisignedCompleteGraph::constant(6, ms("-")).unwrap();
        assert_eq!(
            k6.cycle_multisign(&cyc(&[0, 1, 2, 3, 4, 5])).unwrap(),
            ms("+")
        );
        // edges 02, 21, 13, 30 all avoid {0,1}
        assert_eq!(
            k4_one_negative()
                .cycle_multisign(&cyc(&[0, 2, 1, 3]))
                .unwrap(),
            ms("+")
        );
    }

    #[test]
    fn invalid_cycles() {
        assert!(matches!(
            CycleSeq::new(vec![0, 1, 0]),
            Err(Error::InvalidCycle(_))
        ));
        assert!(matches!(
            CycleSeq::new(vec![0, 1]),
            Err(Error::InvalidCycle(_))
        ));
        let g = k4_one_negative();
        assert_eq!(
            g.cycle_multisign(&cyc(&[0, 1, 7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn triangles() {
        let neg = MultisignedCompleteGraph::constant(6, ms("-")).unwrap();
        assert_eq!(neg.triangle_multisign(1, 3, 5).unwrap(), ms("-"));
        let g = k4_one_negative();
        assert_eq!(g.triangle_multisign(0, 1, 2).unwrap(), ms("-"));
        assert_eq!(g.triangle_multisign(0, 2, 3).unwrap(), ms("+"));
        assert!(g.triangle_multisign(0, 0, 2).is_err());
        let orders = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for [a, b, c] in orders {
            assert_eq!(
                g.triangle_multisign(a, b, c).unwrap(),
                g.cycle_multisign(&cyc(&[a, b, c])).unwrap()
            );
        }
    }

    #[test]
    fn canonical_form() {
        assert_eq!(cyc(&[3, 1, 0, 2]).canonical().vertices(), &[0, 1, 3, 2]);
        assert_eq!(cyc(&[2, 0, 1, 3]).canonical().vertices(), &[0, 1, 3, 2]);
        let c = cyc(&[4, 2, 0, 3, 1]);
        let canon = c.canonical();
        for s in c.symmetries() {
            assert_eq!(s.canonical(), canon);
        }
        assert_eq!(c.symmetries().len(), 10);
    }
}
