//! Decides coherence for a handful of named Coxeter systems.
//!
//! The decision is exact: a two-dimensional Coxeter group is coherent when no
//! infinite standard subgroup has positive Euler characteristic, and every
//! characteristic here is computed in rational arithmetic.
//!
//!     cargo run --example coherence

use coxco::analyze::{decide_coherence, CoherenceOptions, CoherenceVerdict};
use coxco::coxeter::{BondOrder, CoxeterSystem};
use coxco::graph::SimpleGraph;

fn triangle(p: u32, q: u32, r: u32) -> CoxeterSystem {
    CoxeterSystem::from_pairs(
        3,
        &[
            (0, 1, BondOrder::Finite(p)),
            (0, 2, BondOrder::Finite(q)),
            (1, 2, BondOrder::Finite(r)),
        ],
    )
    .expect("triangle orders are valid")
}

fn cycle(n: usize) -> SimpleGraph {
    let mut graph = SimpleGraph::new(n);
    for i in 0..n {
        graph.add_edge(i, (i + 1) % n);
    }
    graph
}

fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let mut graph = SimpleGraph::new(a + b);
    for i in 0..a {
        for j in 0..b {
            graph.add_edge(i, a + j);
        }
    }
    graph
}

fn main() {
    let systems: Vec<(&str, CoxeterSystem)> = vec![
        ("(3,3,3) triangle", triangle(3, 3, 3)),
        ("(2,4,5) triangle", triangle(2, 4, 5)),
        ("(2,3,5) triangle", triangle(2, 3, 5)),
        (
            "rank 5, all orders 3",
            CoxeterSystem::uniform(5, BondOrder::Finite(3)),
        ),
        (
            "right-angled pentagon",
            CoxeterSystem::right_angled(&cycle(5)),
        ),
        (
            "right-angled K(3,3)",
            CoxeterSystem::right_angled(&complete_bipartite(3, 3)),
        ),
    ];

    let options = CoherenceOptions::default();
    for (name, sys) in &systems {
        let report = decide_coherence(sys, &options).expect("small ranks pass the guard");
        println!("{name}");
        println!("  chi = {}", report.chi);
        match &report.verdict {
            CoherenceVerdict::Coherent => {
                println!("  coherent");
                if let Some((b0, b1, b2)) = &report.l2_profile {
                    println!("  L2-Betti profile ({b0}, {b1}, {b2})");
                }
            }
            CoherenceVerdict::Incoherent {
                witness,
                witness_chi,
            } => {
                println!("  incoherent: subgroup {witness} is infinite with chi = {witness_chi}");
            }
            CoherenceVerdict::NotApplicable { reason } => {
                println!("  criterion not applicable: {reason}");
            }
        }
        println!();
    }
}
