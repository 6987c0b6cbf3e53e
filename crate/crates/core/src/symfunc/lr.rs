use std::collections::BTreeMap;

use itertools::Itertools;

use super::schur::permutation_sign;
use super::Partition;

/// Pieri rule: the partitions `λ ⊃ μ` with `λ/μ` a horizontal strip of size `r`.
pub fn pieri_h(mu: &Partition, r: u32) -> Vec<Partition> {
    let l = mu.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; l + 1];
    // Row i may grow up to μ_{i-1} (unbounded for the first row).
    fn rec(i: usize, rem: u32, mu: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let rows = cur.len();
        if i == rows {
            if rem == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let base = mu.part(i);
        let cap = if i == 0 {
            rem
        } else {
            (mu.part(i - 1) - base).min(rem)
        };
        for add in (0..=cap).rev() {
            cur[i] = base + add;
            rec(i + 1, rem - add, mu, cur, out);
        }
    }
    rec(0, r, mu, &mut cur, &mut out);
    out.sort();
    out
}

/// Littlewood-Richardson coefficients `c^λ_{μν}` of `s_μ · s_ν`.
///
/// The factor with fewer rows is expanded by Jacobi-Trudi into products of
/// complete homogeneous functions, and each of those is applied by Pieri.
pub fn lr_expand(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let (base, expand) = if mu.len() >= nu.len() {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let l = expand.len();
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    for perm in (0..l).permutations(l) {
        let rows: Option<Vec<u32>> = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let r = expand.part(i) as i64 - i as i64 + j as i64;
                (r >= 0).then_some(r as u32)
            })
            .collect();
        let Some(rows) = rows else { continue };
        let sign = permutation_sign(&perm);
        let mut layer: BTreeMap<Partition, i64> = BTreeMap::from([(base.clone(), 1)]);
        for r in rows {
            let mut next = BTreeMap::new();
            for (p, c) in layer {
                for q in pieri_h(&p, r) {
                    *next.entry(q).or_insert(0) += c;
                }
            }
            layer = next;
        }
        for (p, c) in layer {
            *acc.entry(p).or_insert(0) += sign * c;
        }
    }
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(p, c)| {
            assert!(c > 0, "negative Littlewood-Richardson coefficient for {p}");
            (p, c as u64)
        })
        .collect()
}
