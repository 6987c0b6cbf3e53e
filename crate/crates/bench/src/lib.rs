//! Benchmark fixtures for the exact kernels in `kostant-core`.

use kostant_core::{FundWeight, Partition};

/// Partitions used as LR and Schur inputs, from small to desk-scale.
pub fn partition_inputs() -> Vec<(Partition, Partition)> {
    [(&[2, 1][..], &[2, 1][..]), (&[3, 2, 1], &[2, 1]), (&[3, 2, 1], &[3, 2, 1])]
        .iter()
        .map(|(a, b)| (Partition::new(a.to_vec()).unwrap(), Partition::new(b.to_vec()).unwrap()))
        .collect()
}

/// `(n, k, ν)` triples with totally subordinate `ν`.
pub fn separation_inputs() -> Vec<(usize, usize, FundWeight)> {
    vec![
        (4, 2, FundWeight::rho(4)),
        (6, 3, FundWeight::rho(6)),
        (6, 3, FundWeight::new(vec![1, 1, 3, 1, 1]).unwrap()),
    ]
}
