//! Angled 2-complexes and combinatorial Gauss-Bonnet curvature.
//!
//! A complex is a set of vertices, a set of edges (loops allowed), and a set
//! of faces, each face a closed edge path; boundary paths may revisit edges
//! and vertices, so one-vertex surfaces like the standard genus-2 octagon are
//! legal.  Every corner of every face carries an exact angle, recorded as a
//! rational multiple of pi.
//!
//! Curvature is bookkeeping:
//!
//! ```text
//! kappa(face f)   = 2 pi - sum over corners of f of (pi - angle)
//! kappa(vertex y) = 2 pi - pi * chi(link(y)) - sum of angles at y
//! ```
//!
//! where the link of `y` has one vertex per edge end at `y` and one edge per
//! corner turning at `y`.  With that convention the totals obey the exact
//! identity `sum kappa(f) + sum kappa(y) = 2 pi chi(complex)` for every angle
//! assignment, which [`AngledTwoComplex::gauss_bonnet_report`] recomputes and
//! enforces on every call.

use crate::coxeter::BondOrder;
use crate::rational::{int, rat, Rational};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use thiserror::Error;

/// An exact angle, stored as its coefficient in front of pi.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Angle {
    coefficient: Rational,
}

impl Angle {
    pub fn of_pi(coefficient: Rational) -> Self {
        Angle { coefficient }
    }

    /// The angle `(n/d) pi`.
    pub fn pi_fraction(n: i64, d: i64) -> Self {
        Angle {
            coefficient: rat(n, d),
        }
    }

    pub fn zero() -> Self {
        Angle {
            coefficient: int(0),
        }
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn is_positive(&self) -> bool {
        self.coefficient > int(0)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::of_pi(self.coefficient + rhs.coefficient)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::of_pi(self.coefficient - rhs.coefficient)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::of_pi(-self.coefficient)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} pi", self.coefficient)
    }
}

/// The angle `(1 - 1/m) pi` a Coxeter 2-cell of finite bond order `m` carries
/// at each corner.
pub fn coxeter_angle(m: BondOrder) -> Result<Angle, ComplexError> {
    match m {
        BondOrder::Finite(m) if m >= 2 => Ok(Angle::of_pi(int(1) - rat(1, i64::from(m)))),
        BondOrder::Infinity => Err(ComplexError::InfiniteOrder),
        _ => Err(ComplexError::OrderBelowTwo),
    }
}

/// One step of a face boundary: an edge traversed forward or backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectedEdge {
    pub edge: usize,
    pub forward: bool,
}

impl DirectedEdge {
    pub fn forward(edge: usize) -> Self {
        DirectedEdge {
            edge,
            forward: true,
        }
    }

    pub fn backward(edge: usize) -> Self {
        DirectedEdge {
            edge,
            forward: false,
        }
    }
}

/// Errors raised while building or interrogating a complex.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("edge {0} out of range")]
    InvalidEdge(usize),
    #[error("face {0} out of range")]
    InvalidFace(usize),
    #[error("face {0} has an empty boundary")]
    EmptyBoundary(usize),
    #[error("face {face} boundary breaks at step {position}: edge path is not closed")]
    BoundaryNotClosed { face: usize, position: usize },
    #[error("face {face} has no corner {corner}")]
    CornerOutOfRange { face: usize, corner: usize },
    #[error("corner {corner} of face {face} already has an angle")]
    DuplicateAngle { face: usize, corner: usize },
    #[error("corner {corner} of face {face} has no angle")]
    MissingAngle { face: usize, corner: usize },
    #[error("infinite bond order has no corner angle")]
    InfiniteOrder,
    #[error("corner angles need a bond order of at least 2")]
    OrderBelowTwo,
    // The two angles are boxed to keep the error type a few words wide.
    #[error(
        "curvature total {} does not equal 2 pi chi = {}: complex data is inconsistent",
        .0.0, .0.1
    )]
    GaussBonnetViolation(Box<(Angle, Angle)>),
}

#[derive(Clone, Debug)]
struct Face {
    boundary: Vec<DirectedEdge>,
    angles: Vec<Option<Angle>>,
}

/// Incrementally assembles an [`AngledTwoComplex`], validating each piece as
/// it arrives.  Faces may only use edges that already exist, and every corner
/// must receive exactly one angle before [`ComplexBuilder::build`].
#[derive(Clone, Debug, Default)]
pub struct ComplexBuilder {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<Face>,
}

impl ComplexBuilder {
    pub fn new(vertex_count: usize) -> Self {
        ComplexBuilder {
            vertex_count,
            edges: Vec::new(),
            faces: Vec::new(),
        }
    }

    /// Adds an edge from `u` to `v` (a loop when `u == v`) and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, ComplexError> {
        for vertex in [u, v] {
            if vertex >= self.vertex_count {
                return Err(ComplexError::InvalidVertex(vertex));
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// Adds a face with the given boundary path and returns its id.  The path
    /// must be nonempty and closed: each step must start at the vertex the
    /// previous step ended on, cyclically.
    pub fn add_face(&mut self, boundary: &[DirectedEdge]) -> Result<usize, ComplexError> {
        let face = self.faces.len();
        if boundary.is_empty() {
            return Err(ComplexError::EmptyBoundary(face));
        }
        for step in boundary {
            if step.edge >= self.edges.len() {
                return Err(ComplexError::InvalidEdge(step.edge));
            }
        }
        for position in 0..boundary.len() {
            let previous = boundary[(position + boundary.len() - 1) % boundary.len()];
            if self.head(previous) != self.tail(boundary[position]) {
                return Err(ComplexError::BoundaryNotClosed { face, position });
            }
        }
        self.faces.push(Face {
            boundary: boundary.to_vec(),
            angles: vec![None; boundary.len()],
        });
        Ok(face)
    }

    fn tail(&self, step: DirectedEdge) -> usize {
        let (from, to) = self.edges[step.edge];
        if step.forward {
            from
        } else {
            to
        }
    }

    fn head(&self, step: DirectedEdge) -> usize {
        let (from, to) = self.edges[step.edge];
        if step.forward {
            to
        } else {
            from
        }
    }

    /// Assigns the angle of one corner.  Corner `t` of a face sits at the
    /// start of boundary step `t`.
    pub fn set_corner_angle(
        &mut self,
        face: usize,
        corner: usize,
        angle: Angle,
    ) -> Result<(), ComplexError> {
        let slot = self
            .faces
            .get_mut(face)
            .ok_or(ComplexError::InvalidFace(face))?;
        if corner >= slot.angles.len() {
            return Err(ComplexError::CornerOutOfRange { face, corner });
        }
        if slot.angles[corner].is_some() {
            return Err(ComplexError::DuplicateAngle { face, corner });
        }
        slot.angles[corner] = Some(angle);
        Ok(())
    }

    /// Assigns the same angle to every corner of a face.
    pub fn set_face_angles(&mut self, face: usize, angle: Angle) -> Result<(), ComplexError> {
        let corners = self
            .faces
            .get(face)
            .ok_or(ComplexError::InvalidFace(face))?
            .angles
            .len();
        for corner in 0..corners {
            self.set_corner_angle(face, corner, angle.clone())?;
        }
        Ok(())
    }

    /// Assigns the Coxeter angle `(1 - 1/m) pi` to every corner of a face.
    pub fn set_face_angles_coxeter(
        &mut self,
        face: usize,
        m: BondOrder,
    ) -> Result<(), ComplexError> {
        self.set_face_angles(face, coxeter_angle(m)?)
    }

    /// Finishes the complex.  Fails if any corner is missing its angle.
    pub fn build(self) -> Result<AngledTwoComplex, ComplexError> {
        let mut faces = Vec::with_capacity(self.faces.len());
        for (face_index, face) in self.faces.into_iter().enumerate() {
            let mut angles = Vec::with_capacity(face.angles.len());
            for (corner, slot) in face.angles.into_iter().enumerate() {
                angles.push(slot.ok_or(ComplexError::MissingAngle {
                    face: face_index,
                    corner,
                })?);
            }
            faces.push((face.boundary, angles));
        }
        Ok(AngledTwoComplex {
            vertex_count: self.vertex_count,
            edges: self.edges,
            faces,
        })
    }
}

/// A finished complex: every face boundary closed, every corner angled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngledTwoComplex {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<(Vec<DirectedEdge>, Vec<Angle>)>,
}

/// The link of a vertex: a graph that may have loops and parallel edges, so
/// only counts and incidences are exposed.  Vertices are the edge ends at the
/// vertex, edges are the corners turning there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub vertex_count: usize,
    /// One entry per corner: the pair of edge-end vertices it connects
    /// (equal entries form a loop).
    pub edges: Vec<(usize, usize)>,
}

impl LinkGraph {
    /// `chi = V - E` of the link.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
        visited == self.vertex_count
    }
}

/// All curvatures of a complex plus the exact Gauss-Bonnet total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureReport {
    pub face_curvature: Vec<Angle>,
    pub vertex_curvature: Vec<Angle>,
    pub total: Angle,
    pub complex_chi: i64,
}

/// Result of the face-curvature sign check; `witness` names the first face
/// with positive curvature when the check fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCurvatureCheck {
    pub holds: bool,
    pub witness: Option<usize>,
}

impl AngledTwoComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn boundary(&self, face: usize) -> &[DirectedEdge] {
        &self.faces[face].0
    }

    pub fn corner_angles(&self, face: usize) -> &[Angle] {
        &self.faces[face].1
    }

    /// `chi = V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    fn tail(&self, step: DirectedEdge) -> usize {
        let (from, to) = self.edges[step.edge];
        if step.forward {
            from
        } else {
            to
        }
    }

    /// The link of vertex `y`.
    ///
    /// Edge ends at `y` become link vertices (a loop at `y` contributes both
    /// of its ends).  Every corner whose turning vertex is `y` becomes a link
    /// edge joining the end it arrives on to the end it leaves on; repeated
    /// traversals of an edge produce parallel link edges, which is why the
    /// result is not a [`crate::graph::SimpleGraph`].
    pub fn link(&self, y: usize) -> Result<LinkGraph, ComplexError> {
        if y >= self.vertex_count {
            return Err(ComplexError::InvalidVertex(y));
        }
        // End (e, false) is the tail of edge e, (e, true) its head.
        let mut end_index = std::collections::BTreeMap::new();
        for (e, &(from, to)) in self.edges.iter().enumerate() {
            if from == y {
                let next = end_index.len();
                end_index.insert((e, false), next);
            }
            if to == y {
                let next = end_index.len();
                end_index.insert((e, true), next);
            }
        }
        let mut edges = Vec::new();
        for (boundary, _) in &self.faces {
            let k = boundary.len();
            for t in 0..k {
                let outgoing = boundary[t];
                if self.tail(outgoing) != y {
                    continue;
                }
                let incoming = boundary[(t + k - 1) % k];
                // The incoming step arrives on its head-as-traversed end; the
                // outgoing step leaves on its tail-as-traversed end.
                let arrive = end_index[&(incoming.edge, incoming.forward)];
                let leave = end_index[&(outgoing.edge, !outgoing.forward)];
                edges.push((arrive.min(leave), arrive.max(leave)));
            }
        }
        edges.sort_unstable();
        Ok(LinkGraph {
            vertex_count: end_index.len(),
            edges,
        })
    }

    /// `kappa(f) = 2 pi - sum over corners of (pi - angle)`.
    pub fn face_curvature(&self, face: usize) -> Result<Angle, ComplexError> {
        let (boundary, angles) = self
            .faces
            .get(face)
            .ok_or(ComplexError::InvalidFace(face))?;
        let mut coefficient = int(2) - int(boundary.len() as i64);
        for angle in angles {
            coefficient += angle.coefficient().clone();
        }
        Ok(Angle::of_pi(coefficient))
    }

    /// `kappa(y) = 2 pi - pi chi(link(y)) - sum of corner angles at y`.
    pub fn vertex_curvature(&self, y: usize) -> Result<Angle, ComplexError> {
        let link = self.link(y)?;
        let mut coefficient = int(2) - int(link.euler_characteristic());
        for (boundary, angles) in &self.faces {
            for (t, step) in boundary.iter().enumerate() {
                if self.tail(*step) == y {
                    coefficient -= angles[t].coefficient().clone();
                }
            }
        }
        Ok(Angle::of_pi(coefficient))
    }

    /// Computes every curvature and checks the exact identity
    /// `sum kappa(f) + sum kappa(y) = 2 pi chi`.
    ///
    /// The identity holds for any complex this module can build, so a
    /// violation indicates internally inconsistent data and comes back as
    /// [`ComplexError::GaussBonnetViolation`].
    pub fn gauss_bonnet_report(&self) -> Result<CurvatureReport, ComplexError> {
        let face_curvature: Vec<Angle> = (0..self.faces.len())
            .map(|f| self.face_curvature(f))
            .collect::<Result<_, _>>()?;
        let vertex_curvature: Vec<Angle> = (0..self.vertex_count)
            .map(|y| self.vertex_curvature(y))
            .collect::<Result<_, _>>()?;
        let mut total = Angle::zero();
        for kappa in face_curvature.iter().chain(vertex_curvature.iter()) {
            total = total + kappa.clone();
        }
        let complex_chi = self.euler_characteristic();
        let expected = Angle::of_pi(int(2 * complex_chi));
        if total != expected {
            return Err(ComplexError::GaussBonnetViolation(Box::new((
                total, expected,
            ))));
        }
        Ok(CurvatureReport {
            face_curvature,
            vertex_curvature,
            total,
            complex_chi,
        })
    }

    /// Checks `kappa(f) <= 0` for every face.
    pub fn check_nonpositive_face_curvature(&self) -> FaceCurvatureCheck {
        for face in 0..self.faces.len() {
            let kappa = self
                .face_curvature(face)
                .expect("face indices enumerate existing faces");
            if kappa.is_positive() {
                return FaceCurvatureCheck {
                    holds: false,
                    witness: Some(face),
                };
            }
        }
        FaceCurvatureCheck {
            holds: true,
            witness: None,
        }
    }
}
