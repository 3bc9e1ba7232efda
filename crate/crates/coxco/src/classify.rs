//! Finite-type recognition for Coxeter systems.
//!
//! A Coxeter group is finite exactly when every irreducible component of its
//! diagram matches one of the finite types `A_k`, `B_k`, `D_k`, `E6`, `E7`,
//! `E8`, `F4`, `H3`, `H4`, `I2(m)`.  The verdict is decided purely by diagram
//! matching: components of the diagram graph are extracted, each component
//! must be a labeled tree of one of the catalog shapes.
//!
//! [`gram_matrix`] and [`is_positive_definite`] provide the numerical
//! cross-check (a Coxeter group is finite iff its cosine matrix is positive
//! definite).  The check exists for tests and diagnostics and never feeds a
//! verdict.

use crate::coxeter::{BondOrder, CoxeterSystem, GeneratorSubset};
use std::fmt;
use thiserror::Error;

/// One entry of the finite-type catalog.
///
/// Construction normalizes the rank-2 coincidences: `I2(3)` is `A2` and
/// `I2(4)` is `B2`, so the `I2` variant only carries `m >= 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl IrreducibleType {
    /// The dihedral type for a finite order `m >= 3`, normalized.
    pub fn dihedral(m: u32) -> Self {
        match m {
            3 => IrreducibleType::A(2),
            4 => IrreducibleType::B(2),
            _ => {
                assert!(m >= 5, "dihedral type needs m >= 3");
                IrreducibleType::I2(m)
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            IrreducibleType::A(k) | IrreducibleType::B(k) | IrreducibleType::D(k) => *k,
            IrreducibleType::E6 => 6,
            IrreducibleType::E7 => 7,
            IrreducibleType::E8 => 8,
            IrreducibleType::F4 => 4,
            IrreducibleType::H3 => 3,
            IrreducibleType::H4 => 4,
            IrreducibleType::I2(_) => 2,
        }
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(k) => write!(f, "A{k}"),
            IrreducibleType::B(k) => write!(f, "B{k}"),
            IrreducibleType::D(k) => write!(f, "D{k}"),
            IrreducibleType::E6 => write!(f, "E6"),
            IrreducibleType::E7 => write!(f, "E7"),
            IrreducibleType::E8 => write!(f, "E8"),
            IrreducibleType::F4 => write!(f, "F4"),
            IrreducibleType::H3 => write!(f, "H3"),
            IrreducibleType::H4 => write!(f, "H4"),
            IrreducibleType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Whether a system generates a finite group, with evidence either way.
///
/// `Finite` carries the catalog type of each irreducible component, listed in
/// component order (components sorted by least generator index).  `Infinite`
/// carries the generators of a component that matches no finite type; the
/// indices refer to the system the verdict was asked about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinitenessVerdict {
    Finite(Vec<IrreducibleType>),
    Infinite { witness: GeneratorSubset },
}

impl FinitenessVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FinitenessVerdict::Finite(_))
    }
}

/// Raised when an operation that needs an irreducible system gets a reducible
/// one.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("system is not irreducible: diagram has {components} components")]
pub struct NotIrreducible {
    pub components: usize,
}

/// Connected components of the diagram graph, sorted by least member, each a
/// subset of the generators of `sys`.
pub fn irreducible_components(sys: &CoxeterSystem) -> Vec<GeneratorSubset> {
    sys.diagram_graph()
        .shape()
        .components
        .into_iter()
        .map(GeneratorSubset::new)
        .collect()
}

/// Matches an irreducible system against the finite-type catalog.
///
/// Returns `Ok(None)` when the (irreducible) diagram is not of finite type,
/// and `Err(NotIrreducible)` when the diagram graph is disconnected.
pub fn match_finite_type(sys: &CoxeterSystem) -> Result<Option<IrreducibleType>, NotIrreducible> {
    let rank = sys.rank();
    if rank == 0 {
        return Err(NotIrreducible { components: 0 });
    }
    let diagram = sys.diagram_graph();
    let shape = diagram.shape();
    if !shape.connected {
        return Err(NotIrreducible {
            components: shape.components.len(),
        });
    }
    if rank == 1 {
        return Ok(Some(IrreducibleType::A(1)));
    }
    if rank == 2 {
        return Ok(match sys.order(0, 1) {
            BondOrder::Finite(m) if m >= 3 => Some(IrreducibleType::dihedral(m)),
            _ => None,
        });
    }

    // Every finite diagram of rank >= 3 is a tree with at most one branch
    // vertex, of degree exactly 3.
    if !shape.tree {
        return Ok(None);
    }
    let degrees: Vec<usize> = (0..rank).map(|v| diagram.degree(v)).collect();
    if degrees.iter().any(|&d| d > 3) {
        return Ok(None);
    }
    let branch_vertices: Vec<usize> = (0..rank).filter(|&v| degrees[v] == 3).collect();
    match branch_vertices.len() {
        0 => {
            // The diagram is a path; read its labels from one end.
            let labels = match path_labels(sys, &diagram) {
                Some(labels) => labels,
                None => return Ok(None),
            };
            Ok(match_path_type(&labels))
        }
        1 => {
            // Branching finite types carry no labels above 3.
            for (i, j) in diagram.edges() {
                if sys.order(i, j) != BondOrder::Finite(3) {
                    return Ok(None);
                }
            }
            let mut legs = leg_lengths(&diagram, branch_vertices[0]);
            legs.sort_unstable();
            Ok(match legs.as_slice() {
                [1, 1, k] => Some(IrreducibleType::D(k + 3)),
                [1, 2, 2] => Some(IrreducibleType::E6),
                [1, 2, 3] => Some(IrreducibleType::E7),
                [1, 2, 4] => Some(IrreducibleType::E8),
                _ => None,
            })
        }
        _ => Ok(None),
    }
}

/// Edge labels of a path-shaped diagram read end to end, `None` if any label
/// is infinite.
fn path_labels(sys: &CoxeterSystem, diagram: &crate::graph::SimpleGraph) -> Option<Vec<u32>> {
    let rank = sys.rank();
    let start = (0..rank)
        .find(|&v| diagram.degree(v) == 1)
        .expect("a tree on >= 2 vertices has a leaf");
    let mut labels = Vec::with_capacity(rank - 1);
    let mut previous = usize::MAX;
    let mut current = start;
    for _ in 0..rank - 1 {
        let next = *diagram
            .neighbors(current)
            .iter()
            .find(|&&w| w != previous)
            .expect("interior path vertices have a forward neighbor");
        match sys.order(current, next) {
            BondOrder::Finite(m) => labels.push(m),
            _ => return None,
        }
        previous = current;
        current = next;
    }
    Some(labels)
}

/// Matches a label sequence of a path diagram (rank >= 3, so at least two
/// labels) against the path-shaped finite types.
fn match_path_type(labels: &[u32]) -> Option<IrreducibleType> {
    let rank = labels.len() + 1;
    let heavy: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] != 3).collect();
    match heavy.as_slice() {
        [] => Some(IrreducibleType::A(rank)),
        [position] => {
            let at_end = *position == 0 || *position == labels.len() - 1;
            match labels[*position] {
                4 if at_end => Some(IrreducibleType::B(rank)),
                4 if rank == 4 => Some(IrreducibleType::F4),
                5 if at_end && rank == 3 => Some(IrreducibleType::H3),
                5 if at_end && rank == 4 => Some(IrreducibleType::H4),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Lengths of the three paths hanging off the unique degree-3 vertex of a
/// tree whose other degrees are at most 2.
fn leg_lengths(diagram: &crate::graph::SimpleGraph, branch: usize) -> Vec<usize> {
    diagram
        .neighbors(branch)
        .into_iter()
        .map(|first| {
            let mut length = 1;
            let mut previous = branch;
            let mut current = first;
            while let Some(&next) = diagram.neighbors(current).iter().find(|&&w| w != previous) {
                previous = current;
                current = next;
                length += 1;
            }
            length
        })
        .collect()
}

/// Decides finiteness by classifying every irreducible component.
///
/// Finiteness is monotone: any standard subgroup of a finite Coxeter group is
/// finite, so the witness returned for an infinite group stays valid in every
/// larger system containing it.
pub fn is_finite(sys: &CoxeterSystem) -> FinitenessVerdict {
    let mut types = Vec::new();
    for component in irreducible_components(sys) {
        let restricted = sys
            .restrict(&component)
            .expect("components index into the system");
        match match_finite_type(&restricted) {
            Ok(Some(t)) => types.push(t),
            Ok(None) | Err(_) => {
                return FinitenessVerdict::Infinite { witness: component };
            }
        }
    }
    FinitenessVerdict::Finite(types)
}

/// The cosine matrix `b(i, j) = -cos(pi / m(i, j))`, with `1` on the diagonal
/// and `-1` for infinite orders.
#[allow(clippy::needless_range_loop)]
pub fn gram_matrix(sys: &CoxeterSystem) -> Vec<Vec<f64>> {
    let rank = sys.rank();
    let mut matrix = vec![vec![0.0; rank]; rank];
    for i in 0..rank {
        matrix[i][i] = 1.0;
        for j in (i + 1)..rank {
            let entry = match sys.order(i, j) {
                BondOrder::One => -1.0,
                BondOrder::Finite(2) => 0.0,
                BondOrder::Finite(m) => -(std::f64::consts::PI / f64::from(m)).cos(),
                BondOrder::Infinity => -1.0,
            };
            matrix[i][j] = entry;
            matrix[j][i] = entry;
        }
    }
    matrix
}

/// Raised when the positive-definiteness check receives an asymmetric matrix.
#[derive(Debug, Error, PartialEq)]
#[error("matrix is not symmetric at ({0}, {1})")]
pub struct NotSymmetric(pub usize, pub usize);

/// Tests positive definiteness by Gaussian elimination: every leading pivot
/// must exceed `tolerance`.
///
/// This is the floating-point oracle for finiteness.  `1e-9` comfortably
/// separates the positive-definite finite types from the affine diagrams,
/// whose determinant is exactly zero.
#[allow(clippy::needless_range_loop)]
pub fn is_positive_definite(matrix: &[Vec<f64>], tolerance: f64) -> Result<bool, NotSymmetric> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for j in (i + 1)..n {
            if matrix[i][j] != matrix[j][i] {
                return Err(NotSymmetric(i, j));
            }
        }
    }
    let mut work: Vec<Vec<f64>> = matrix.to_vec();
    for k in 0..n {
        let pivot = work[k][k];
        if pivot <= tolerance {
            return Ok(false);
        }
        for i in (k + 1)..n {
            let factor = work[i][k] / pivot;
            for j in k..n {
                work[i][j] -= factor * work[k][j];
            }
        }
    }
    Ok(true)
}

/// Tolerance used wherever this crate runs the Gram cross-check on its own.
pub const GRAM_TOLERANCE: f64 = 1e-9;
