//! Cayley graphs of Boolean functions over the additive group Z_2^n.
//!
//! The connection set is the support of the function; every element is its
//! own inverse, so any subset works. The all-zero point in the support puts
//! a loop on every vertex (the definition keeps loops rather than excluding
//! the identity). The counting paths here always treat loops separately:
//! `neighbors`/`edges` enumerate the simple graph on the nonzero part of the
//! connection set, while `adjacent` answers the raw u (+) w membership test,
//! loop included.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::boolfn::{BooleanFunction, PointSet};
use crate::error::{Error, Guards, Result};
use crate::transform;

/// Cay(Z_2^n, S) for a connection set S of n-bit points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    n: usize,
    connection_set: PointSet,
    has_loops: bool,
}

impl CayleyGraph {
    /// The graph of a Boolean function: vertices Z_2^n, u ~ w iff f(u (+) w) = 1.
    pub fn from_function(f: &BooleanFunction) -> Self {
        Self::from_connection_set(f.support())
    }

    pub fn from_connection_set(connection_set: PointSet) -> Self {
        let has_loops = connection_set.contains(0);
        CayleyGraph {
            n: connection_set.arity(),
            connection_set,
            has_loops,
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    pub fn connection_set(&self) -> &PointSet {
        &self.connection_set
    }

    /// True iff the all-zero point is in the connection set, which places a
    /// loop at every vertex.
    pub fn has_loops(&self) -> bool {
        self.has_loops
    }

    /// The connection set with the loop-producing zero removed.
    pub fn simple_connection_set(&self) -> PointSet {
        self.connection_set.without_zero()
    }

    /// Degree of every vertex in the simple graph (loops not counted).
    pub fn simple_degree(&self) -> u64 {
        (self.connection_set.len() - self.has_loops as usize) as u64
    }

    /// Raw adjacency: u (+) w in the connection set. `adjacent(u, u)` answers
    /// whether the vertex carries a loop.
    #[inline]
    pub fn adjacent(&self, u: usize, w: usize) -> bool {
        self.connection_set.contains(u ^ w)
    }

    /// Simple-graph neighbors of `u`, loops excluded.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.connection_set
            .iter()
            .filter(|&c| c != 0)
            .map(move |c| u ^ c)
    }

    /// Every edge of the simple graph as an ordered pair u < w, sorted.
    /// Loops are reported through [`Self::has_loops`], not here.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for w in self.neighbors(u) {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The indicator function of the connection set; its Fourier numerators
    /// are exactly this graph's adjacency eigenvalues.
    pub fn indicator_function(&self) -> BooleanFunction {
        self.connection_set.indicator()
    }

    /// Adjacency eigenvalues indexed by character label, loops included.
    pub fn eigenvalues(&self) -> Vec<i64> {
        transform::cayley_eigenvalues(&self.indicator_function())
    }
}

/// Dimension of the GF(2) linear span of the members of `s`; 0 for the
/// empty set. Gaussian elimination on the point bit-vectors.
pub fn gf2_span_dim(s: &PointSet) -> usize {
    let mut basis: Vec<usize> = Vec::new();
    for mut p in s.iter() {
        for &b in &basis {
            p = p.min(p ^ b);
        }
        if p != 0 {
            basis.push(p);
        }
    }
    basis.len()
}

/// Number of connected components: 2^(n - dim<S>), each component a coset
/// of the span of the connection set.
pub fn component_count(g: &CayleyGraph) -> u64 {
    1u64 << (g.arity() - gf2_span_dim(g.connection_set()))
}

/// Rank of the adjacency matrix, obtained as the number of nonzero
/// eigenvalues. [`adjacency_rank_by_elimination`] is the independent
/// dense-matrix route.
pub fn adjacency_rank(g: &CayleyGraph) -> u64 {
    g.eigenvalues().iter().filter(|&&l| l != 0).count() as u64
}

/// Rank of the integer adjacency matrix (loop diagonal included) by exact
/// fraction-free elimination. Guarded: the dense matrix has 4^n entries.
pub fn adjacency_rank_by_elimination(g: &CayleyGraph, guards: &Guards) -> Result<u64> {
    if g.arity() > guards.max_elimination_arity {
        return Err(Error::ResourceGuard {
            operation: "adjacency_rank_by_elimination",
            limit: guards.max_elimination_arity,
            requested: g.arity(),
        });
    }
    let v = g.vertex_count();
    let mut m: Vec<Vec<BigInt>> = (0..v)
        .map(|u| {
            (0..v)
                .map(|w| BigInt::from(g.adjacent(u, w) as i64))
                .collect()
        })
        .collect();
    Ok(bareiss_rank(&mut m) as u64)
}

/// Bareiss fraction-free elimination; every division is exact.
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    let mut rank = 0;
    let mut row = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
    }
    rank
}

/// Spectral symmetry facts for a Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumSymmetry {
    /// Single connected component.
    pub connected: bool,
    /// -lambda_0 occurs among the eigenvalues.
    pub has_minus_lambda0: bool,
    /// The eigenvalue multiset is invariant under negation.
    pub spectrum_symmetric: bool,
}

/// Reports connectivity together with the negation symmetry of the spectrum.
/// For connected graphs the two boolean facts coincide (a connected graph
/// with -lambda_0 in the spectrum is bipartite, and bipartite spectra are
/// symmetric); disconnected graphs carry no such constraint.
pub fn spectrum_symmetry_report(g: &CayleyGraph) -> SpectrumSymmetry {
    let eig = g.eigenvalues();
    let lambda0 = eig[0];
    debug_assert_eq!(lambda0, g.connection_set().len() as i64);
    debug_assert!(eig.iter().all(|&l| l <= lambda0));
    let connected = component_count(g) == 1;
    let has_minus_lambda0 = eig.contains(&-lambda0);
    let mut sorted = eig.clone();
    sorted.sort_unstable();
    let mut negated: Vec<i64> = eig.iter().map(|&l| -l).collect();
    negated.sort_unstable();
    let spectrum_symmetric = sorted == negated;
    if connected {
        debug_assert_eq!(has_minus_lambda0, spectrum_symmetric);
    }
    SpectrumSymmetry {
        connected,
        has_minus_lambda0,
        spectrum_symmetric,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlab::random_function;
    use crate::reference;

    fn f(n: usize, bits: &str) -> BooleanFunction {
        let v: Vec<u8> = bits.bytes().map(|b| b - b'0').collect();
        BooleanFunction::from_truth_table(n, &v).unwrap()
    }

    #[test]
    fn and_graph_is_perfect_matching() {
        let g = CayleyGraph::from_function(&f(2, "0001"));
        assert_eq!(g.edges(), vec![(0b00, 0b11), (0b01, 0b10)]);
        assert!(!g.has_loops());
        assert_eq!(g.simple_degree(), 1);
    }

    #[test]
    fn weight_three_graph_is_complete() {
        let g = CayleyGraph::from_function(&f(2, "0111"));
        assert_eq!(g.edges().len(), 6);
        for u in 0..4 {
            for w in 0..4 {
                assert_eq!(g.adjacent(u, w), u != w);
            }
        }
    }

    #[test]
    fn zero_in_support_loops_every_vertex() {
        let g = CayleyGraph::from_function(&f(2, "1001"));
        assert!(g.has_loops());
        for u in 0..4 {
            assert!(g.adjacent(u, u));
        }
        assert_eq!(g.simple_degree(), 1);
        assert_eq!(g.edges(), vec![(0b00, 0b11), (0b01, 0b10)]);
    }

    #[test]
    fn span_dim_examples() {
        assert_eq!(gf2_span_dim(&PointSet::from_points(2, &[0b11]).unwrap()), 1);
        assert_eq!(
            gf2_span_dim(&PointSet::from_points(2, &[0b01, 0b10, 0b11]).unwrap()),
            2
        );
        assert_eq!(gf2_span_dim(&PointSet::empty(2).unwrap()), 0);
        assert_eq!(
            gf2_span_dim(&PointSet::from_points(4, &[0b1100, 0b0110, 0b1010]).unwrap()),
            2
        );
    }

    #[test]
    fn component_count_examples() {
        let matching = CayleyGraph::from_function(&f(2, "0001"));
        assert_eq!(component_count(&matching), 2);
        assert_eq!(reference::flood_fill_component_count(&matching), 2);

        let complete = CayleyGraph::from_function(&f(2, "0111"));
        assert_eq!(component_count(&complete), 1);

        let empty = CayleyGraph::from_function(&BooleanFunction::constant(3, false).unwrap());
        assert_eq!(component_count(&empty), 8);
        assert_eq!(reference::flood_fill_component_count(&empty), 8);
    }

    #[test]
    fn component_count_matches_flood_fill_on_random_functions() {
        for n in 2..=5 {
            for seed in 0..60 {
                let g = CayleyGraph::from_function(&random_function(n, seed).unwrap());
                assert_eq!(
                    component_count(&g),
                    reference::flood_fill_component_count(&g)
                );
            }
        }
    }

    #[test]
    fn adjacency_rank_examples() {
        let and = CayleyGraph::from_function(&f(2, "0001"));
        assert_eq!(adjacency_rank(&and), 4);
        let zero = CayleyGraph::from_function(&BooleanFunction::constant(2, false).unwrap());
        assert_eq!(adjacency_rank(&zero), 0);
        let complete = CayleyGraph::from_function(&f(2, "0111"));
        assert_eq!(complete.eigenvalues(), vec![3, -1, -1, -1]);
        assert_eq!(adjacency_rank(&complete), 4);
    }

    #[test]
    fn elimination_rank_matches_eigenvalue_count() {
        let guards = Guards::default();
        for t in 0..16u32 {
            let g = CayleyGraph::from_function(
                &BooleanFunction::from_fn(2, |x| t >> x & 1 == 1).unwrap(),
            );
            assert_eq!(
                adjacency_rank(&g),
                adjacency_rank_by_elimination(&g, &guards).unwrap()
            );
        }
        for n in [3, 4] {
            for seed in 0..100 {
                let g = CayleyGraph::from_function(&random_function(n, seed).unwrap());
                assert_eq!(
                    adjacency_rank(&g),
                    adjacency_rank_by_elimination(&g, &guards).unwrap()
                );
            }
        }
    }

    #[test]
    fn elimination_guard() {
        let g = CayleyGraph::from_function(&BooleanFunction::constant(7, true).unwrap());
        let err = adjacency_rank_by_elimination(&g, &Guards::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::ResourceGuard {
                limit: 6,
                requested: 7,
                ..
            }
        ));
    }

    #[test]
    fn symmetry_report_for_four_cycle() {
        // f = x1, support {10, 11}: the 4-cycle with spectrum {2, 0, 0, -2}.
        let g = CayleyGraph::from_function(&f(2, "0011"));
        let mut eig = g.eigenvalues();
        eig.sort_unstable();
        assert_eq!(eig, vec![-2, 0, 0, 2]);
        let report = spectrum_symmetry_report(&g);
        assert!(report.connected && report.has_minus_lambda0 && report.spectrum_symmetric);
    }

    #[test]
    fn symmetry_report_for_complete_graph() {
        let report = spectrum_symmetry_report(&CayleyGraph::from_function(&f(2, "0111")));
        assert!(report.connected);
        assert!(!report.has_minus_lambda0);
        assert!(!report.spectrum_symmetric);
    }

    #[test]
    fn symmetry_report_for_empty_graph() {
        let report = spectrum_symmetry_report(&CayleyGraph::from_function(
            &BooleanFunction::constant(2, false).unwrap(),
        ));
        assert!(!report.connected);
        // lambda_0 = 0: the facts hold degenerately, no iff claim applies.
        assert!(report.has_minus_lambda0 && report.spectrum_symmetric);
    }

    #[test]
    fn eigenvector_identity_on_random_functions() {
        // A Q_w = lambda_w Q_w entrywise, loop diagonal included.
        for n in 2..=4 {
            for seed in 0..25 {
                let func = random_function(n, seed).unwrap();
                let g = CayleyGraph::from_function(&func);
                let a = reference::adjacency_matrix(&g);
                let eig = g.eigenvalues();
                let v = g.vertex_count();
                for w in 0..v {
                    for u in 0..v {
                        let lhs: i64 = (0..v)
                            .map(|x| a[u][x] * if crate::boolfn::dot(w, x) { -1 } else { 1 })
                            .sum();
                        let rhs = eig[w] * if crate::boolfn::dot(w, u) { -1 } else { 1 };
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn lambda0_multiplicity_equals_component_count() {
        for t in 1..16u32 {
            let g = CayleyGraph::from_function(
                &BooleanFunction::from_fn(2, |x| t >> x & 1 == 1).unwrap(),
            );
            let eig = g.eigenvalues();
            let mult = eig.iter().filter(|&&l| l == eig[0]).count() as u64;
            assert_eq!(mult, component_count(&g));
        }
        for n in [3, 4] {
            for seed in 0..100 {
                let func = random_function(n, seed).unwrap();
                if func.weight() == 0 {
                    continue;
                }
                let g = CayleyGraph::from_function(&func);
                let eig = g.eigenvalues();
                let mult = eig.iter().filter(|&&l| l == eig[0]).count() as u64;
                assert_eq!(mult, component_count(&g));
            }
        }
    }
}
