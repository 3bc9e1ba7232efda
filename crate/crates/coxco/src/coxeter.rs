//! Coxeter systems, generator subsets, and the graphs attached to a system.
//!
//! A Coxeter system of rank `n` is a symmetric `n x n` matrix of bond orders
//! `m(i, j)` with `m(i, i) = 1` and `m(i, j) >= 2` off the diagonal (infinity
//! allowed).  Generators are indexed `0..n`.  Restricting the matrix to a
//! subset of generators gives the Coxeter system of the corresponding standard
//! subgroup; subsets are the currency in which witnesses are reported.

use crate::graph::SimpleGraph;
use crate::rational::Rational;
use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

/// A bond order `m(i, j)`: `1` on the diagonal, an integer `>= 2` or infinity
/// elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BondOrder {
    One,
    Finite(u32),
    Infinity,
}

impl BondOrder {
    /// `1/m`, with `1/inf = 0`.  This is the quantity Euler characteristics
    /// and two-dimensionality sums are built from.
    pub fn reciprocal(&self) -> Rational {
        match self {
            BondOrder::One => Rational::from_integer(BigInt::from(1)),
            BondOrder::Finite(m) => Rational::new(BigInt::from(1), BigInt::from(*m)),
            BondOrder::Infinity => Rational::from_integer(BigInt::from(0)),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, BondOrder::Infinity)
    }

    /// The numeric value for finite orders, `None` for infinity.
    pub fn finite_value(&self) -> Option<u32> {
        match self {
            BondOrder::One => Some(1),
            BondOrder::Finite(m) => Some(*m),
            BondOrder::Infinity => None,
        }
    }
}

impl fmt::Display for BondOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BondOrder::One => write!(f, "1"),
            BondOrder::Finite(m) => write!(f, "{m}"),
            BondOrder::Infinity => write!(f, "inf"),
        }
    }
}

/// Errors raised while building or restricting a Coxeter system.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("bond matrix is not square")]
    NotSquare,
    #[error("diagonal entry at generator {0} is not 1")]
    DiagonalNotOne(usize),
    #[error("off-diagonal order m({0}, {1}) is 1")]
    OffDiagonalOne(usize, usize),
    #[error("bond matrix is asymmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("order m({0}, {1}) is below 2")]
    OrderBelowTwo(usize, usize),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// Which pairs of generators count as edges of the graph attached to a system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GraphConvention {
    /// Edge wherever `m(i, j)` is finite.  This is the convention the graph
    /// coherence criterion is stated in.
    #[default]
    FiniteOrders,
    /// Edge wherever `m(i, j) >= 3`, infinity included: the Coxeter diagram.
    DiagramOrders,
}

/// A Coxeter system: rank plus symmetric bond matrix, with optional generator
/// labels used only for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    rank: usize,
    orders: Vec<BondOrder>,
    labels: Option<Vec<String>>,
}

impl CoxeterSystem {
    /// Validates a full bond matrix: square, `1` exactly on the diagonal,
    /// symmetric, and every off-diagonal order at least 2.
    #[allow(clippy::needless_range_loop)]
    pub fn validate(matrix: &[Vec<BondOrder>]) -> Result<Self, SystemError> {
        let rank = matrix.len();
        for row in matrix {
            if row.len() != rank {
                return Err(SystemError::NotSquare);
            }
        }
        for i in 0..rank {
            if matrix[i][i] != BondOrder::One {
                return Err(SystemError::DiagonalNotOne(i));
            }
            for j in (i + 1)..rank {
                match matrix[i][j] {
                    BondOrder::One => return Err(SystemError::OffDiagonalOne(i, j)),
                    BondOrder::Finite(m) if m < 2 => {
                        return Err(SystemError::OrderBelowTwo(i, j));
                    }
                    _ => {}
                }
                if matrix[i][j] != matrix[j][i] {
                    return Err(SystemError::Asymmetric(i, j));
                }
            }
        }
        let mut orders = vec![BondOrder::Infinity; rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                orders[i * rank + j] = matrix[i][j];
            }
        }
        Ok(CoxeterSystem {
            rank,
            orders,
            labels: None,
        })
    }

    /// Builds a system from the orders of selected pairs; every pair not
    /// listed gets order infinity.  Listing a pair twice keeps the last value.
    pub fn from_pairs(
        rank: usize,
        pairs: &[(usize, usize, BondOrder)],
    ) -> Result<Self, SystemError> {
        let mut system = CoxeterSystem {
            rank,
            orders: vec![BondOrder::Infinity; rank * rank],
            labels: None,
        };
        for i in 0..rank {
            system.orders[i * rank + i] = BondOrder::One;
        }
        for &(i, j, m) in pairs {
            for index in [i, j] {
                if index >= rank {
                    return Err(SystemError::IndexOutOfRange { index, rank });
                }
            }
            if i == j {
                return Err(SystemError::DiagonalNotOne(i));
            }
            match m {
                BondOrder::One => return Err(SystemError::OffDiagonalOne(i, j)),
                BondOrder::Finite(v) if v < 2 => return Err(SystemError::OrderBelowTwo(i, j)),
                _ => {}
            }
            system.orders[i * rank + j] = m;
            system.orders[j * rank + i] = m;
        }
        Ok(system)
    }

    /// All off-diagonal orders equal to `m`.
    pub fn uniform(rank: usize, m: BondOrder) -> Self {
        let pairs: Vec<(usize, usize, BondOrder)> = (0..rank)
            .flat_map(|i| ((i + 1)..rank).map(move |j| (i, j, m)))
            .collect();
        CoxeterSystem::from_pairs(rank, &pairs).expect("uniform orders are valid")
    }

    /// The right-angled system of a graph: `m = 2` on edges, infinity off
    /// edges.
    pub fn right_angled(graph: &SimpleGraph) -> Self {
        let pairs: Vec<(usize, usize, BondOrder)> = graph
            .edges()
            .map(|(u, v)| (u, v, BondOrder::Finite(2)))
            .collect();
        CoxeterSystem::from_pairs(graph.vertex_count(), &pairs)
            .expect("graph edges are valid pairs")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank, "one label per generator");
        self.labels = Some(labels);
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self, i: usize, j: usize) -> BondOrder {
        assert!(
            i < self.rank && j < self.rank,
            "generator index out of range"
        );
        self.orders[i * self.rank + j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The system of the standard subgroup generated by `subset`.  Generator
    /// `k` of the result is generator `subset.members()[k]` of the parent.
    pub fn restrict(&self, subset: &GeneratorSubset) -> Result<CoxeterSystem, SystemError> {
        let members = subset.members();
        if let Some(&index) = members.iter().find(|&&index| index >= self.rank) {
            return Err(SystemError::IndexOutOfRange {
                index,
                rank: self.rank,
            });
        }
        let sub_rank = members.len();
        let mut orders = vec![BondOrder::Infinity; sub_rank * sub_rank];
        for (a, &i) in members.iter().enumerate() {
            for (b, &j) in members.iter().enumerate() {
                orders[a * sub_rank + b] = self.orders[i * self.rank + j];
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|all| members.iter().map(|&i| all[i].clone()).collect());
        Ok(CoxeterSystem {
            rank: sub_rank,
            orders,
            labels,
        })
    }

    /// The graph on the generators under the chosen edge convention.
    pub fn associated_graph(&self, convention: GraphConvention) -> SimpleGraph {
        let mut graph = SimpleGraph::new(self.rank);
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                let keep = match (convention, self.order(i, j)) {
                    (GraphConvention::FiniteOrders, m) => m.is_finite(),
                    (GraphConvention::DiagramOrders, BondOrder::Finite(m)) => m >= 3,
                    (GraphConvention::DiagramOrders, BondOrder::Infinity) => true,
                    (GraphConvention::DiagramOrders, BondOrder::One) => false,
                };
                if keep {
                    graph.add_edge(i, j);
                }
            }
        }
        graph
    }

    /// Edges at the finite bond orders.
    pub fn presentation_graph(&self) -> SimpleGraph {
        self.associated_graph(GraphConvention::FiniteOrders)
    }

    /// Edges at orders `>= 3` (infinity included): the Coxeter diagram without
    /// its labels.  Labels stay available through [`CoxeterSystem::order`].
    pub fn diagram_graph(&self) -> SimpleGraph {
        self.associated_graph(GraphConvention::DiagramOrders)
    }
}

/// A set of generator indices, kept sorted and duplicate-free.
///
/// Subsets order by size first and lexicographically second; enumeration and
/// witness selection both follow that order, so the first witness found is the
/// smallest one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSubset {
    members: Vec<usize>,
}

impl GeneratorSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        GeneratorSubset { members }
    }

    pub fn empty() -> Self {
        GeneratorSubset {
            members: Vec::new(),
        }
    }

    pub fn full(rank: usize) -> Self {
        GeneratorSubset {
            members: (0..rank).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_subset_of(&self, other: &GeneratorSubset) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }
}

impl PartialOrd for GeneratorSubset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GeneratorSubset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl fmt::Display for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, index) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{index}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn triangle(p: BondOrder, q: BondOrder, r: BondOrder) -> CoxeterSystem {
        CoxeterSystem::from_pairs(3, &[(0, 1, p), (0, 2, q), (1, 2, r)]).unwrap()
    }

    fn fin(m: u32) -> BondOrder {
        BondOrder::Finite(m)
    }

    #[test]
    fn validate_accepts_dihedral() {
        let matrix = vec![vec![BondOrder::One, fin(5)], vec![fin(5), BondOrder::One]];
        let sys = CoxeterSystem::validate(&matrix).unwrap();
        assert_eq!(sys.rank(), 2);
        assert_eq!(sys.order(0, 1), fin(5));
        assert_eq!(sys.order(1, 0), fin(5));
    }

    #[test]
    fn validate_rejects_bad_matrices() {
        let off_diag_one = vec![
            vec![BondOrder::One, BondOrder::One],
            vec![BondOrder::One, BondOrder::One],
        ];
        assert_eq!(
            CoxeterSystem::validate(&off_diag_one),
            Err(SystemError::OffDiagonalOne(0, 1))
        );

        let asymmetric = vec![vec![BondOrder::One, fin(3)], vec![fin(4), BondOrder::One]];
        assert_eq!(
            CoxeterSystem::validate(&asymmetric),
            Err(SystemError::Asymmetric(0, 1))
        );

        let not_square = vec![vec![BondOrder::One, fin(3)]];
        assert_eq!(
            CoxeterSystem::validate(&not_square),
            Err(SystemError::NotSquare)
        );

        let bad_diagonal = vec![vec![fin(2), fin(3)], vec![fin(3), BondOrder::One]];
        assert_eq!(
            CoxeterSystem::validate(&bad_diagonal),
            Err(SystemError::DiagonalNotOne(0))
        );

        let below_two = vec![vec![BondOrder::One, fin(0)], vec![fin(0), BondOrder::One]];
        assert_eq!(
            CoxeterSystem::validate(&below_two),
            Err(SystemError::OrderBelowTwo(0, 1))
        );
    }

    #[test]
    fn from_pairs_defaults_to_infinity() {
        let sys = CoxeterSystem::from_pairs(3, &[(0, 1, fin(3))]).unwrap();
        assert_eq!(sys.order(0, 1), fin(3));
        assert_eq!(sys.order(0, 2), BondOrder::Infinity);
        assert_eq!(sys.order(2, 2), BondOrder::One);
    }

    #[test]
    fn reciprocal_values() {
        assert_eq!(BondOrder::Infinity.reciprocal(), rat(0, 1));
        assert_eq!(fin(4).reciprocal(), rat(1, 4));
        assert_eq!(BondOrder::One.reciprocal(), rat(1, 1));
    }

    #[test]
    fn restrict_projects_the_matrix() {
        let sys = CoxeterSystem::uniform(5, fin(3));
        let sub = sys.restrict(&GeneratorSubset::new([0, 2, 4])).unwrap();
        assert_eq!(sub.rank(), 3);
        assert_eq!(sub.order(0, 1), fin(3));
        assert_eq!(sub.order(1, 2), fin(3));

        let empty = sys.restrict(&GeneratorSubset::empty()).unwrap();
        assert_eq!(empty.rank(), 0);

        let single = sys.restrict(&GeneratorSubset::new([1])).unwrap();
        assert_eq!(single.rank(), 1);

        assert_eq!(
            sys.restrict(&GeneratorSubset::new([0, 7])),
            Err(SystemError::IndexOutOfRange { index: 7, rank: 5 })
        );
    }

    #[test]
    fn restriction_to_full_set_is_identity() {
        let sys = triangle(fin(2), fin(4), fin(5));
        let full = sys.restrict(&GeneratorSubset::full(3)).unwrap();
        assert_eq!(full, sys);
    }

    #[test]
    fn presentation_graph_keeps_finite_orders() {
        let sys = triangle(fin(3), BondOrder::Infinity, fin(3));
        let graph = sys.presentation_graph();
        assert_eq!(graph.edge_count(), 2);
        assert!(graph.has_edge(0, 1) && graph.has_edge(1, 2) && !graph.has_edge(0, 2));
        assert!(graph.is_tree());
    }

    #[test]
    fn presentation_graph_of_all_infinite_is_empty() {
        let sys = CoxeterSystem::uniform(3, BondOrder::Infinity);
        let graph = sys.presentation_graph();
        assert_eq!(graph.edge_count(), 0);
        assert_eq!(graph.shape().components.len(), 3);
    }

    #[test]
    fn diagram_graph_drops_commuting_pairs() {
        // Chain 0-1-2 with m(0,1)=3, m(1,2)=3, m(0,2)=2: diagram is the path.
        let sys = triangle(fin(3), fin(2), fin(3));
        let graph = sys.diagram_graph();
        assert_eq!(graph.edge_count(), 2);
        assert!(!graph.has_edge(0, 2));

        let racg = CoxeterSystem::uniform(2, fin(2));
        assert_eq!(racg.diagram_graph().edge_count(), 0);

        let with_infinity = CoxeterSystem::from_pairs(3, &[(0, 1, fin(4))]).unwrap();
        let diagram = with_infinity.diagram_graph();
        assert_eq!(diagram.edge_count(), 3);
    }

    #[test]
    fn right_angled_from_graph() {
        let mut pentagon = SimpleGraph::new(5);
        for i in 0..5 {
            pentagon.add_edge(i, (i + 1) % 5);
        }
        let sys = CoxeterSystem::right_angled(&pentagon);
        assert_eq!(sys.order(0, 1), fin(2));
        assert_eq!(sys.order(0, 2), BondOrder::Infinity);
    }

    #[test]
    fn subset_ordering_is_size_then_lex() {
        let mut subsets = [
            GeneratorSubset::new([0, 1, 2]),
            GeneratorSubset::new([2]),
            GeneratorSubset::new([0, 2]),
            GeneratorSubset::new([0, 1]),
        ];
        subsets.sort();
        let rendered: Vec<String> = subsets.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, vec!["{2}", "{0, 1}", "{0, 2}", "{0, 1, 2}"]);
    }

    #[test]
    fn subset_normalizes_input() {
        let s = GeneratorSubset::new([3, 1, 3, 0]);
        assert_eq!(s.members(), &[0, 1, 3]);
        assert!(s.contains(3) && !s.contains(2));
        assert!(s.is_subset_of(&GeneratorSubset::full(4)));
    }
}
