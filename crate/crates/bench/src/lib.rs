//! Inputs shared by the benchmarks.

use cable_slopes::{AtomKnot, Cabling, ExtendedRational, IntMatrix, KnotDescription};

/// A dense `n × n` matrix with small entries and a nontrivial Smith form.
pub fn dense_matrix(n: usize) -> IntMatrix {
    let entries = (0..n * n)
        .map(|k| {
            let (i, j) = ((k / n) as i64, (k % n) as i64);
            ((i * 7 + j * 13 + i * j * 3) % 19 - 9).into()
        })
        .collect();
    IntMatrix::new(n, n, entries).expect("n*n entries")
}

/// A chain of `depth` cablings over an atom meeting the Theorem B hypotheses.
pub fn cabling_chain(depth: usize) -> KnotDescription {
    let slopes = vec![
        ExtendedRational::integer(-3),
        ExtendedRational::finite(5, 2),
    ];
    let cablings = (0..depth)
        .map(|i| {
            let q = [2, 3, 5][i % 3];
            Cabling::new(2 * i as i64 + 1, q)
        })
        .collect();
    KnotDescription::new(AtomKnot::theorem_b(slopes), cablings)
}
