//! Builds three closed surfaces as angled 2-complexes and verifies the
//! combinatorial Gauss-Bonnet identity on each: the face and vertex
//! curvatures always sum to exactly 2 pi chi, whatever the angles.
//!
//!     cargo run --example curvature

use coxco::complex::{coxeter_angle, Angle, AngledTwoComplex, ComplexBuilder, DirectedEdge};
use coxco::coxeter::BondOrder;
use coxco::rational::rat;

fn forward(edge: usize) -> DirectedEdge {
    DirectedEdge {
        edge,
        forward: true,
    }
}

fn backward(edge: usize) -> DirectedEdge {
    DirectedEdge {
        edge,
        forward: false,
    }
}

/// Torus: one vertex, two loops, one square glued along a b a^-1 b^-1.
fn square_torus() -> AngledTwoComplex {
    let mut builder = ComplexBuilder::new(1);
    builder.add_edge(0, 0).unwrap();
    builder.add_edge(0, 0).unwrap();
    builder
        .add_face(&[forward(0), forward(1), backward(0), backward(1)])
        .unwrap();
    builder
        .set_face_angles(0, Angle::pi_fraction(1, 2))
        .unwrap();
    builder.build().unwrap()
}

/// Sphere: the boundary of a tetrahedron, all angles pi/3.
fn tetrahedron() -> AngledTwoComplex {
    let mut builder = ComplexBuilder::new(4);
    for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        builder.add_edge(u, v).unwrap();
    }
    builder
        .add_face(&[forward(0), forward(3), backward(1)])
        .unwrap();
    builder
        .add_face(&[forward(0), forward(4), backward(2)])
        .unwrap();
    builder
        .add_face(&[forward(1), forward(5), backward(2)])
        .unwrap();
    builder
        .add_face(&[forward(3), forward(5), backward(4)])
        .unwrap();
    for face in 0..4 {
        builder
            .set_face_angles(face, Angle::pi_fraction(1, 3))
            .unwrap();
    }
    builder.build().unwrap()
}

/// Genus-2 surface: one octagon glued along a b a^-1 b^-1 c d c^-1 d^-1,
/// with the regular hyperbolic angle pi/4.
fn genus2_octagon() -> AngledTwoComplex {
    let mut builder = ComplexBuilder::new(1);
    for _ in 0..4 {
        builder.add_edge(0, 0).unwrap();
    }
    builder
        .add_face(&[
            forward(0),
            forward(1),
            backward(0),
            backward(1),
            forward(2),
            forward(3),
            backward(2),
            backward(3),
        ])
        .unwrap();
    builder
        .set_face_angles(0, Angle::pi_fraction(1, 4))
        .unwrap();
    builder.build().unwrap()
}

fn describe(name: &str, complex: &AngledTwoComplex) {
    let report = complex.gauss_bonnet_report().expect("bookkeeping is exact");
    println!("{name}: chi = {}", report.complex_chi);
    for (face, kappa) in report.face_curvature.iter().enumerate() {
        println!("  face {face}: kappa = {kappa}");
    }
    for (vertex, kappa) in report.vertex_curvature.iter().enumerate() {
        println!("  vertex {vertex}: kappa = {kappa}");
    }
    println!("  total {} = 2 pi chi", report.total);
    println!();
}

fn main() {
    describe("square torus", &square_torus());
    describe("tetrahedron sphere", &tetrahedron());
    describe("genus-2 octagon", &genus2_octagon());

    // A 2m-gon whose corners all carry the angle (1 - 1/m) pi is exactly
    // flat; this is the angle a Coxeter 2-cell of bond order m receives.
    println!("flatness of Coxeter 2m-gons:");
    for m in [2u32, 3, 7, 30] {
        let angle = coxeter_angle(BondOrder::Finite(m)).unwrap();
        let k = 2 * m as i64;
        // kappa(f) = 2 pi - k (pi - angle)
        let kappa = Angle::of_pi(rat(2, 1)) - Angle::of_pi(rat(k, 1))
            + Angle::of_pi(rat(k, 1) * angle.coefficient().clone());
        println!("  m = {m}: corner angle {angle}, face curvature {kappa}");
        assert_eq!(kappa, Angle::zero());
    }
}
