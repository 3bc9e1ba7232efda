//! Recognizes the finite Coxeter groups among a batch of diagrams, and
//! cross-checks the catalog answer against positive definiteness of the
//! cosine matrix.
//!
//!     cargo run --example finite_types

use coxco::classify::{
    gram_matrix, is_finite, is_positive_definite, FinitenessVerdict, GRAM_TOLERANCE,
};
use coxco::coxeter::{BondOrder, CoxeterSystem};

/// A path 0-1-...-k with the given consecutive orders; all other pairs
/// commute (order 2).
fn path(labels: &[u32]) -> CoxeterSystem {
    let rank = labels.len() + 1;
    let mut pairs = Vec::new();
    for (i, &m) in labels.iter().enumerate() {
        pairs.push((i, i + 1, BondOrder::Finite(m)));
        for j in (i + 2)..rank {
            pairs.push((i, j, BondOrder::Finite(2)));
        }
    }
    CoxeterSystem::from_pairs(rank, &pairs).expect("path orders are valid")
}

/// A star: vertex 0 joined to three legs of the given lengths, all edge
/// orders 3, everything else commuting.
fn star(legs: &[usize]) -> CoxeterSystem {
    let rank = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &leg in legs {
        let mut previous = 0;
        for _ in 0..leg {
            edges.push((previous.min(next), previous.max(next)));
            previous = next;
            next += 1;
        }
    }
    let mut pairs = Vec::new();
    for i in 0..rank {
        for j in (i + 1)..rank {
            let m = if edges.contains(&(i, j)) { 3 } else { 2 };
            pairs.push((i, j, BondOrder::Finite(m)));
        }
    }
    CoxeterSystem::from_pairs(rank, &pairs).expect("star orders are valid")
}

fn main() {
    let batch: Vec<(&str, CoxeterSystem)> = vec![
        ("path 3-3-3 (A4)", path(&[3, 3, 3])),
        ("path 4-3 (B3)", path(&[4, 3])),
        ("path 5-3-3 (H4)", path(&[5, 3, 3])),
        ("path 3-4-3 (F4)", path(&[3, 4, 3])),
        ("star legs 1,1,3 (D6)", star(&[1, 1, 3])),
        ("star legs 1,2,3 (E7)", star(&[1, 2, 3])),
        ("path 6 (dihedral I2(6))", path(&[6])),
        (
            "all pairs 3 on 4 generators (infinite)",
            CoxeterSystem::uniform(4, BondOrder::Finite(3)),
        ),
        ("path 4-3-4 (affine, infinite)", path(&[4, 3, 4])),
        ("star legs 2,2,2 (affine E6, infinite)", star(&[2, 2, 2])),
    ];

    for (name, sys) in &batch {
        let verdict = is_finite(sys);
        let gram_finite = is_positive_definite(&gram_matrix(sys), GRAM_TOLERANCE)
            .expect("gram matrices are symmetric");
        match &verdict {
            FinitenessVerdict::Finite(components) => {
                let names: Vec<String> = components.iter().map(|c| c.to_string()).collect();
                println!("{name}: finite, type {}", names.join(" x "));
            }
            FinitenessVerdict::Infinite { witness } => {
                println!("{name}: infinite (component {witness} matches no finite type)");
            }
        }
        assert_eq!(
            verdict.is_finite(),
            gram_finite,
            "catalog and cosine matrix must agree on {name}"
        );
    }
    println!();
    println!("catalog matches the positive-definiteness oracle on every input");
}
