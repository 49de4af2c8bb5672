//! Named example semigroups and the biordered sets derived from them.
//!
//! These are the fixtures the test suites and `selftest` run against:
//! small enough to cross-check exhaustively, varied enough to exercise
//! every basic-product case.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::biorder::BiorderedSet;
use crate::semigroup::{
    build_semigroup, FiniteSemigroup, SemigroupSource, SemigroupSpec,
};

/// Right-zero semigroup: xy = y.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    let rows: Vec<Vec<usize>> = (0..n).map(|_| (0..n).collect()).collect();
    FiniteSemigroup::from_table(&rows, None, SemigroupSource::CayleyFile).unwrap()
}

/// Rectangular band on rows×cols pairs: (i,j)(k,l) = (i,l).
/// Element index of (i, j) is i*cols + j.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    let n = rows * cols;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a / cols) * cols + (b % cols)).collect())
        .collect();
    let labels: Vec<String> = (0..n)
        .map(|a| format!("({},{})", a / cols, a % cols))
        .collect();
    FiniteSemigroup::from_table(&table, Some(labels), SemigroupSource::CayleyFile).unwrap()
}

/// Cyclic group of order n under addition.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteSemigroup::from_table(&rows, None, SemigroupSource::CayleyFile).unwrap()
}

/// The full transformation monoid T_n, generated by a transposition, an
/// n-cycle and a rank-dropping map (plus the identity).
pub fn full_transformations(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let mut gens: Vec<Vec<usize>> = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(swap);
        let cycle: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        gens.push(cycle);
        let mut collapse: Vec<usize> = (0..n).collect();
        collapse[1] = 0;
        gens.push(collapse);
    }
    build_semigroup(&SemigroupSpec::Transformations {
        points: n,
        gens,
        adjoin_identity: true,
    })
    .unwrap()
}

/// The monoid of all dim×dim matrices over GF(q).
pub fn matrix_monoid(dim: usize, q: usize) -> FiniteSemigroup {
    build_semigroup(&SemigroupSpec::Matrix { dim, field: q }).unwrap()
}

/// Closures of small random generator sets inside T_4, seeded for
/// reproducibility. Identity is not adjoined, so genuine subsemigroups
/// show up.
pub fn random_t4_subsemigroups(seed: u64, count: usize) -> Vec<FiniteSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<Vec<usize>> = (0..ngens)
            .map(|_| (0..4).map(|_| rng.gen_range(0..4)).collect())
            .collect();
        let s = build_semigroup(&SemigroupSpec::Transformations {
            points: 4,
            gens,
            adjoin_identity: false,
        })
        .expect("T_4 closures are always in range");
        out.push(s);
    }
    out
}

/// The biordered sets every end-to-end suite runs over.
pub fn acceptance_biorders() -> Vec<(&'static str, BiorderedSet)> {
    vec![
        ("right-zero-2", BiorderedSet::extract(right_zero(2))),
        ("t2", BiorderedSet::extract(full_transformations(2))),
        ("band-2x2", BiorderedSet::extract(rectangular_band(2, 2))),
        ("m2-gf2", BiorderedSet::extract(matrix_monoid(2, 2))),
    ]
}
