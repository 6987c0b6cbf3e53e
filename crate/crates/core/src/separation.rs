//! Constituents of `V_{ω_k} ⊗ V_ν`, their power-sum eigen-functionals, and
//! the separation index `t₀(ν)`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::{FundWeight, IndexSet, YoungPattern};
use crate::{binomial, Int, Rational};

/// Irreducible constituent `V_{ν+λ_I}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    #[serde(rename = "I")]
    pub set: IndexSet,
    #[serde(serialize_with = "ser_display")]
    pub pattern: YoungPattern,
    #[serde(serialize_with = "ser_display")]
    pub dim: Int,
}

/// `(S₂, …, S_p)` evaluated on `ν + λ_I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctionalVector {
    #[serde(rename = "I")]
    pub set: IndexSet,
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<Rational>,
}

/// Pair of constituents whose functionals agree through `S_depth`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub n: usize,
    pub k: usize,
    pub nu: FundWeight,
    pub depth: u32,
    #[serde(rename = "I")]
    pub i: IndexSet,
    #[serde(rename = "J")]
    pub j: IndexSet,
    #[serde(serialize_with = "ser_rationals")]
    pub shared_vector: Vec<Rational>,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_rationals<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn check_params(n: usize, k: usize, nu: &FundWeight) -> Result<()> {
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n-k, got k={k}, n={n}"
        )));
    }
    if nu.n() != n {
        return Err(Error::RankMismatch {
            left: n,
            right: nu.n(),
        });
    }
    Ok(())
}

/// One constituent per `k`-subset `I` with `ν + λ_I` dominant, `I` in lex order.
pub fn tensor_decompose(n: usize, k: usize, nu: &FundWeight) -> Result<Vec<Constituent>> {
    check_params(n, k, nu)?;
    let base = nu.to_pattern();
    let mut out = Vec::new();
    for set in IndexSet::all(n, k) {
        let (pattern, dominant) = base.add_lambda(&set)?;
        if dominant {
            let dim = pattern.weyl_dim()?;
            out.push(Constituent { set, pattern, dim });
        }
    }
    Ok(out)
}

/// Whether `V_{ω_k} ⊗ V_ν` has `binom(n,k)` constituents.
pub fn totally_subordinate(n: usize, k: usize, nu: &FundWeight) -> Result<bool> {
    Ok(Int::from(tensor_decompose(n, k, nu)?.len()) == binomial(n as u64, k as u64))
}

fn vector_of(pattern: &YoungPattern, p: u32) -> Vec<Rational> {
    (2..=p).map(|t| pattern.s_functional(t)).collect()
}

/// `(S₂, …, S_p)` of `ν + λ_I`.
pub fn functionals(n: usize, k: usize, nu: &FundWeight, set: &IndexSet, p: u32) -> Result<FunctionalVector> {
    check_params(n, k, nu)?;
    if p < 2 {
        return Err(Error::InvalidArgument(format!("need p >= 2, got {p}")));
    }
    if set.k() != k {
        return Err(Error::InvalidArgument(format!("{set} is not a {k}-subset")));
    }
    let (pattern, dominant) = nu.to_pattern().add_lambda(set)?;
    if !dominant {
        return Err(Error::NotDominant(pattern.to_string()));
    }
    Ok(FunctionalVector {
        set: set.clone(),
        values: vector_of(&pattern, p),
    })
}

fn subordinate_constituents(n: usize, k: usize, nu: &FundWeight) -> Result<Vec<Constituent>> {
    let cs = tensor_decompose(n, k, nu)?;
    let expected = binomial(n as u64, k as u64);
    if Int::from(cs.len()) != expected {
        return Err(Error::NotTotallySubordinate {
            found: cs.len(),
            expected: expected.try_into().unwrap_or(usize::MAX),
        });
    }
    Ok(cs)
}

fn group_by_vector(cs: &[Constituent], depth: u32) -> Vec<(Vec<Rational>, Vec<IndexSet>)> {
    let vectors: Vec<Vec<Rational>> = cs.par_iter().map(|c| vector_of(&c.pattern, depth)).collect();
    let mut groups: HashMap<Vec<Rational>, Vec<IndexSet>> = HashMap::new();
    for (c, v) in cs.iter().zip(vectors) {
        groups.entry(v).or_default().push(c.set.clone());
    }
    let mut out: Vec<_> = groups.into_iter().filter(|(_, g)| g.len() > 1).collect();
    out.sort_by(|a, b| a.1[0].cmp(&b.1[0]));
    out
}

/// Unordered pairs of distinct constituents agreeing on `S₂, …, S_depth`,
/// grouped by shared vector; pairs are lex ordered.
pub fn find_collisions(n: usize, k: usize, nu: &FundWeight, depth: u32) -> Result<Vec<Collision>> {
    check_params(n, k, nu)?;
    if depth < 2 {
        return Err(Error::InvalidArgument(format!("need depth >= 2, got {depth}")));
    }
    let cs = subordinate_constituents(n, k, nu)?;
    let mut out = Vec::new();
    for (vector, sets) in group_by_vector(&cs, depth) {
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                out.push(Collision {
                    n,
                    k,
                    nu: nu.clone(),
                    depth,
                    i: sets[a].clone(),
                    j: sets[b].clone(),
                    shared_vector: vector.clone(),
                });
            }
        }
    }
    out.sort_by(|x, y| (&x.i, &x.j).cmp(&(&y.i, &y.j)));
    Ok(out)
}

/// Smallest `t ≥ 2` such that `S₂, …, S_t` separate every pair of constituents.
pub fn t0(n: usize, k: usize, nu: &FundWeight) -> Result<u32> {
    check_params(n, k, nu)?;
    let cs = subordinate_constituents(n, k, nu)?;
    let mut t = 2;
    loop {
        if group_by_vector(&cs, t).is_empty() {
            return Ok(t);
        }
        if t as usize > n + 1 {
            return Err(Error::Invariant(format!(
                "constituents of nu={nu} not separated through S_{t}"
            )));
        }
        t += 1;
    }
}

/// Fails on any collision at depth `k ≥ 2` whose index sets overlap.
pub fn check_disjoint_collisions(collisions: &[Collision]) -> Result<()> {
    for c in collisions {
        let r = c.i.intersection_size(&c.j);
        if c.k >= 2 && c.depth as usize == c.k && r != 0 {
            return Err(Error::OverlappingCollision {
                nu: c.nu.to_string(),
                i: c.i.to_string(),
                j: c.j.to_string(),
                r,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn set(n: usize, v: &[usize]) -> IndexSet {
        IndexSet::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let w = FundWeight::omega(1, 2).unwrap();
        let cs = tensor_decompose(2, 1, &w).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].pattern.entries(), &[2, 0]);
        assert_eq!(cs[0].dim, Int::from(3));
        assert_eq!(cs[1].pattern.entries(), &[1, 1]);
        assert_eq!(cs[1].dim, Int::from(1));

        assert_eq!(tensor_decompose(4, 2, &FundWeight::rho(4)).unwrap().len(), 6);
        let cs = tensor_decompose(3, 1, &FundWeight::zero(3)).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].set, set(3, &[1]));
    }

    #[test]
    fn subordination_examples() {
        assert!(totally_subordinate(4, 2, &FundWeight::rho(4)).unwrap());
        assert!(!totally_subordinate(3, 1, &FundWeight::zero(3)).unwrap());
        let a = FundWeight::new(vec![1, 0, 1]).unwrap();
        assert!(!totally_subordinate(4, 2, &a).unwrap());
        assert!(matches!(
            t0(3, 1, &FundWeight::zero(3)),
            Err(Error::NotTotallySubordinate { found: 1, expected: 3 })
        ));
    }

    #[test]
    fn functional_examples() {
        let rho = FundWeight::rho(4);
        let f = functionals(4, 2, &rho, &set(4, &[1, 4]), 2).unwrap();
        assert_eq!(f.values, vec![rat(16)]);
        let g = functionals(4, 2, &rho, &set(4, &[2, 3]), 2).unwrap();
        assert_eq!(g.values, vec![rat(16)]);
        let w = FundWeight::omega(1, 2).unwrap();
        assert_eq!(functionals(2, 1, &w, &set(2, &[1]), 2).unwrap().values, vec![rat(4)]);
        let a = FundWeight::new(vec![1, 0, 1]).unwrap();
        assert!(matches!(
            functionals(4, 2, &a, &set(4, &[3, 4]), 2),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn t0_examples() {
        assert_eq!(t0(4, 2, &FundWeight::rho(4)).unwrap(), 3);
        assert_eq!(t0(2, 1, &FundWeight::omega(1, 2).unwrap()).unwrap(), 2);
        // Exhaustive value; differs from k+1.
        assert_eq!(t0(6, 3, &FundWeight::rho(6)).unwrap(), 3);
    }

    #[test]
    fn collision_examples() {
        let rho = FundWeight::rho(4);
        let c = find_collisions(4, 2, &rho, 2).unwrap();
        assert!(c.iter().any(|c| c.i == set(4, &[1, 4]) && c.j == set(4, &[2, 3])));
        assert!(find_collisions(4, 2, &rho, 3).unwrap().is_empty());
        let w = FundWeight::omega(1, 2).unwrap();
        assert!(find_collisions(2, 1, &w, 2).unwrap().is_empty());
        let json = serde_json::to_string(&c[0]).unwrap();
        assert!(json.contains(r#""I":[1,4]"#) && json.contains(r#""shared_vector":["16"]"#));
    }

    fn weights_12(n: usize) -> Vec<FundWeight> {
        itertools::Itertools::multi_cartesian_product((0..n - 1).map(|_| 1u32..=2))
            .map(|a| FundWeight::new(a).unwrap())
            .collect()
    }

    #[test]
    fn dimension_bookkeeping_and_s1() {
        for n in 2..=5 {
            for k in 1..=n / 2 {
                for nu in weights_12(n) {
                    let cs = tensor_decompose(n, k, &nu).unwrap();
                    let total: Int = cs.iter().map(|c| c.dim.clone()).sum();
                    let expected = binomial(n as u64, k as u64) * nu.to_pattern().weyl_dim().unwrap();
                    assert_eq!(total, expected);
                    assert!(cs.iter().all(|c| c.pattern.s_functional(1) == rat(0)));
                }
            }
        }
    }

    #[test]
    fn full_depth_collisions_are_disjoint() {
        for n in 4..=6 {
            for k in 2..=n / 2 {
                for nu in weights_12(n) {
                    let c = find_collisions(n, k, &nu, k as u32).unwrap();
                    check_disjoint_collisions(&c).unwrap();
                    assert!(find_collisions(n, k, &nu, k as u32 + 1).unwrap().is_empty());
                }
            }
        }
    }
}
