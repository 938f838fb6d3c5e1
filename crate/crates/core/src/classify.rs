//! Polynomial-time classification of triangle and Hamiltonian-cycle multisigns.
//!
//! In a multisigned `K_n` with `n >= 4`, the Hamiltonian cycles all share a
//! multisign exactly when the triangles all share one. If every triangle
//! carries `h`, every Hamiltonian cycle carries `h^(n-2)`: `h` for odd `n`
//! and the identity for even `n`. None of the routines here enumerate cycles.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{CycleSeq, MultisignedCompleteGraph};
use crate::multisign::Multisign;

/// A triangle as an increasing vertex triple.
pub type Triangle = [usize; 3];

/// Verdict over all `C(n,3)` triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleClass {
    /// Every triangle has this multisign (possibly the identity).
    AllEqual(Multisign),
    /// Two triangles with distinct multisigns, the lexicographically first
    /// such pair: `(0,1,2)` and the first triple that differs from it.
    Mixed {
        first: (Triangle, Multisign),
        second: (Triangle, Multisign),
    },
}

impl TriangleClass {
    pub fn is_mixed(&self) -> bool {
        matches!(self, TriangleClass::Mixed { .. })
    }
}

impl fmt::Display for TriangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleClass::AllEqual(g) => write!(f, "ALL_EQUAL {g}"),
            TriangleClass::Mixed { first, second } => write!(
                f,
                "MIXED ({} {} {})={} ({} {} {})={}",
                first.0[0],
                first.0[1],
                first.0[2],
                first.1,
                second.0[0],
                second.0[1],
                second.0[2],
                second.1
            ),
        }
    }
}

/// Which path produced a Hamiltonian verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Theorem,
    BruteForce,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Theorem => "theorem",
            Basis::BruteForce => "brute-force",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianVerdict {
    /// Every Hamiltonian cycle has this multisign.
    AllSame(Multisign),
    /// At least two Hamiltonian cycles have distinct multisigns.
    Mixed,
}

impl fmt::Display for HamiltonianVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HamiltonianVerdict::AllSame(g) => write!(f, "ALL_SAME {g}"),
            HamiltonianVerdict::Mixed => f.write_str("MIXED"),
        }
    }
}

/// Verdict over all Hamiltonian cycles plus the path that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HamiltonianClass {
    pub verdict: HamiltonianVerdict,
    pub basis: Basis,
}

/// Sweeps every triangle in lexicographic order.
pub fn classify_triangles(graph: &MultisignedCompleteGraph) -> TriangleClass {
    let n = graph.n();
    let width = graph.width();
    let base = graph.triangle_bits(0, 1, 2);
    for a in 0..n {
        for b in a + 1..n {
            let ab = graph.bits(a, b);
            for c in b + 1..n {
                let t = ab ^ graph.bits(a, c) ^ graph.bits(b, c);
                if t != base {
                    return TriangleClass::Mixed {
                        first: ([0, 1, 2], Multisign::from_bits_unchecked(width, base)),
                        second: ([a, b, c], Multisign::from_bits_unchecked(width, t)),
                    };
                }
            }
        }
    }
    TriangleClass::AllEqual(Multisign::from_bits_unchecked(width, base))
}

/// Classifies the multisigns of all Hamiltonian cycles.
///
/// For `n >= 4` this reads the answer off the triangle class. `K_3` has a
/// single Hamiltonian cycle, which is evaluated directly.
pub fn classify_hamiltonian(graph: &MultisignedCompleteGraph) -> Result<HamiltonianClass> {
    let n = graph.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    if n == 3 {
        let g = graph.triangle_multisign(0, 1, 2)?;
        return Ok(HamiltonianClass {
            verdict: HamiltonianVerdict::AllSame(g),
            basis: Basis::BruteForce,
        });
    }
    let verdict = match classify_triangles(graph) {
        TriangleClass::Mixed { .. } => HamiltonianVerdict::Mixed,
        TriangleClass::AllEqual(h) => HamiltonianVerdict::AllSame(h.pow(n as u64 - 2)),
    };
    Ok(HamiltonianClass {
        verdict,
        basis: Basis::Theorem,
    })
}

/// Result of a balance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Balance {
    Balanced,
    /// The lexicographically first triangle with a non-identity multisign.
    Unbalanced {
        certificate: (Triangle, Multisign),
    },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced)
    }
}

/// Balance check by vertex potentials in `O(n^2)`.
///
/// With `theta(0) = e` and `theta(v) = sigma(0v)`, the graph is balanced iff
/// `sigma(uv) = theta(u) theta(v)` on every edge. A violation on `{u, v}`
/// is exactly a non-identity triangle `(0, u, v)`; every triangle is a
/// product of triangles through vertex 0, so the first violation in pair
/// order is also the first non-identity triangle in lexicographic order.
pub fn is_balanced(graph: &MultisignedCompleteGraph) -> Balance {
    let n = graph.n();
    let potential: Vec<u64> = (0..n)
        .map(|v| if v == 0 { 0 } else { graph.bits(0, v) })
        .collect();
    for u in 1..n {
        for v in u + 1..n {
            let defect = graph.bits(u, v) ^ potential[u] ^ potential[v];
            if defect != 0 {
                return Balance::Unbalanced {
                    certificate: (
                        [0, u, v],
                        Multisign::from_bits_unchecked(graph.width(), defect),
                    ),
                };
            }
        }
    }
    Balance::Balanced
}

fn hourglass_vertices(cycle: &CycleSeq, i: usize, j: usize) -> Result<[usize; 4]> {
    let k = cycle.len();
    if i >= j {
        return Err(Error::InvalidHourglass {
            i,
            j,
            reason: "requires i < j",
        });
    }
    if j >= k {
        return Err(Error::InvalidHourglass {
            i,
            j,
            reason: "position outside the cycle",
        });
    }
    let vs = cycle.vertices();
    let quad = [vs[i], vs[i + 1], vs[j], vs[(j + 1) % k]];
    let distinct = (0..4).all(|a| (a + 1..4).all(|b| quad[a] != quad[b]));
    if !distinct {
        return Err(Error::InvalidHourglass {
            i,
            j,
            reason: "boundary vertices v_i, v_i+1, v_j, v_j+1 are not distinct",
        });
    }
    Ok(quad)
}

/// Reverses the segment between positions `i + 1` and `j` (inclusive).
///
/// Positions are 0-based and the successor of the last position wraps to
/// the first.
pub fn hourglass_swap(cycle: &CycleSeq, i: usize, j: usize) -> Result<CycleSeq> {
    hourglass_vertices(cycle, i, j)?;
    let mut vs = cycle.vertices().to_vec();
    vs[i + 1..=j].reverse();
    CycleSeq::new(vs)
}

/// Whether `sigma(v_i v_i+1) sigma(v_j v_j+1) = sigma(v_i v_j) sigma(v_i+1 v_j+1)`,
/// i.e. whether [`hourglass_swap`] preserves the cycle's multisign.
pub fn hourglass_condition(
    graph: &MultisignedCompleteGraph,
    cycle: &CycleSeq,
    i: usize,
    j: usize,
) -> Result<bool> {
    let [vi, vi1, vj, vj1] = hourglass_vertices(cycle, i, j)?;
    cycle.check_against(graph.n())?;
    Ok(graph.bits(vi, vi1) ^ graph.bits(vj, vj1) == graph.bits(vi, vj) ^ graph.bits(vi1, vj1))
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

    fn constant(n: usize, s: &str) -> MultisignedCompleteGraph {
        MultisignedCompleteGraph::constant(n, ms(s)).unwrap()
    }

    fn with_negative(n: usize, edges: &[(usize, usize)]) -> MultisignedCompleteGraph {
        let mut g = constant(n, "+");
        for &(u, v) in edges {
            g.set_edge_sign(u, v, ms("-")).unwrap();
        }
        g
    }

    fn same(g: &str) -> HamiltonianVerdict {
        HamiltonianVerdict::AllSame(ms(g))
    }

    #[test]
    fn triangle_classes() {
        assert_eq!(
            classify_triangles(&constant(5, "+")),
            TriangleClass::AllEqual(ms("+"))
        );
        assert_eq!(
            classify_triangles(&constant(5, "-")),
            TriangleClass::AllEqual(ms("-"))
        );
        // (0,1,2)=- (0,1,3)=- (0,2,3)=+ (1,2,3)=+
        assert_eq!(
            classify_triangles(&with_negative(4, &[(0, 1)])),
            TriangleClass::Mixed {
                first: ([0, 1, 2], ms("-")),
                second: ([0, 2, 3], ms("+")),
            }
        );
    }

    #[test]
    fn hamiltonian_classes() {
        let c = classify_hamiltonian(&constant(5, "-")).unwrap();
        assert_eq!(c.verdict, same("-"));
        assert_eq!(c.basis, Basis::Theorem);
        assert_eq!(
            classify_hamiltonian(&constant(6, "-")).unwrap().verdict,
            same("+")
        );
        assert_eq!(
            classify_hamiltonian(&with_negative(4, &[(0, 1)]))
                .unwrap()
                .verdict,
            HamiltonianVerdict::Mixed
        );
        assert_eq!(
            classify_hamiltonian(&constant(5, "-+")).unwrap().verdict,
            same("-+")
        );
    }

    #[test]
    fn k3_is_brute_force() {
        let g = with_negative(3, &[(0, 2)]);
        let c = classify_hamiltonian(&g).unwrap();
        assert_eq!(c.basis, Basis::BruteForce);
        assert_eq!(c.verdict, same("-"));
    }

    #[test]
    fn balance() {
        assert_eq!(is_balanced(&constant(6, "+")), Balance::Balanced);
        assert_eq!(
            is_balanced(&constant(4, "-")),
            Balance::Unbalanced {
                certificate: ([0, 1, 2], ms("-"))
            }
        );
        // (0,1,2) = - - + = +, (0,1,3) = - + + = -
        assert_eq!(
            is_balanced(&with_negative(5, &[(0, 1), (0, 2)])),
            Balance::Unbalanced {
                certificate: ([0, 1, 3], ms("-"))
            }
        );
        // a switched all-positive graph is balanced
        assert!(is_balanced(&with_negative(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])).is_balanced());
    }

    #[test]
    fn hourglass_swaps() {
        assert_eq!(
            hourglass_swap(&cyc(&[0, 1, 2, 3, 4]), 1, 3).unwrap(),
            cyc(&[0, 1, 3, 2, 4])
        );
        assert_eq!(
            hourglass_swap(&cyc(&[0, 1, 2, 3]), 0, 2).unwrap(),
            cyc(&[0, 2, 1, 3])
        );
        assert!(matches!(
            hourglass_swap(&cyc(&[0, 1, 2, 3]), 0, 3),
            Err(Error::InvalidHourglass { .. })
        ));
        assert!(hourglass_swap(&cyc(&[0, 1, 2, 3]), 2, 1).is_err());
        assert!(hourglass_swap(&cyc(&[0, 1, 2, 3, 4]), 1, 2).is_err());
        assert!(hourglass_swap(&cyc(&[0, 1, 2, 3, 4]), 1, 5).is_err());
    }

    #[test]
    fn hourglass_conditions() {
        let pos = constant(6, "+");
        assert!(hourglass_condition(&pos, &cyc(&[0, 1, 2, 3, 4, 5]), 1, 4).unwrap());
        // sigma(01) sigma(23) = -, sigma(02) sigma(13) = +
        let g = with_negative(4, &[(0, 1)]);
        assert!(!hourglass_condition(&g, &cyc(&[0, 1, 2, 3]), 0, 2).unwrap());
        // sigma(v_i v_i+1) = sigma(v_i v_j) = -, the other two +
        let g = with_negative(5, &[(0, 1), (0, 2)]);
        assert!(hourglass_condition(&g, &cyc(&[0, 1, 3, 2, 4]), 0, 2).is_ok());
        let c = cyc(&[0, 1, 4, 2, 3]);
        // v_i=0, v_i+1=1, v_j=2, v_j+1=3
        assert!(hourglass_condition(&g, &c, 0, 3).unwrap());
        assert!(hourglass_condition(&g, &cyc(&[0, 1, 2, 3]), 0, 3).is_err());
    }

    #[test]
    fn large_graph_classifies() {
        let g = constant(64, "-");
        assert_eq!(classify_hamiltonian(&g).unwrap().verdict, same("+"));
        let g = constant(65, "-");
        assert_eq!(classify_hamiltonian(&g).unwrap().verdict, same("-"));
    }
}
