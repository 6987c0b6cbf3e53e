//! Prouhet-Tarry-Escott solutions: verification, exhaustive search,
//! extraction from eigenvalue collisions, and ideal-solution search.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::time::Instant;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::separation::{check_disjoint_collisions, find_collisions};
use crate::weights::{FundWeight, IndexSet};
use crate::Int;

/// Largest degree through which two lists agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxDegree {
    Upto(u32),
    /// Equal multisets agree in every degree.
    Trivial,
}

impl MaxDegree {
    pub fn at_least(self, m: u32) -> bool {
        match self {
            MaxDegree::Upto(j) => j >= m,
            MaxDegree::Trivial => true,
        }
    }
}

impl fmt::Display for MaxDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxDegree::Upto(j) => write!(f, "{j}"),
            MaxDegree::Trivial => write!(f, "trivial"),
        }
    }
}

fn power_sum(xs: &[i64], j: u32) -> Int {
    xs.iter().map(|&x| num_traits::pow(Int::from(x), j as usize)).sum()
}

/// Multiset equality.
pub fn is_trivial(x: &[i64], y: &[i64]) -> bool {
    let mut a = x.to_vec();
    let mut b = y.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Whether power sums agree for `j = 1..=m`, and the largest such `j`.
pub fn verify(x: &[i64], y: &[i64], m: u32) -> Result<(bool, MaxDegree)> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch(x.len(), y.len()));
    }
    if is_trivial(x, y) {
        return Ok((true, MaxDegree::Trivial));
    }
    let mut j = 0;
    while power_sum(x, j + 1) == power_sum(y, j + 1) {
        j += 1;
    }
    Ok((j >= m, MaxDegree::Upto(j)))
}

/// Where a solution came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Brute,
    Collision {
        nu: Vec<u32>,
        i: Vec<usize>,
        j: Vec<usize>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ProvenanceRepr {
    Tag(String),
    Collision {
        nu: Vec<u32>,
        #[serde(rename = "I")]
        i: Vec<usize>,
        #[serde(rename = "J")]
        j: Vec<usize>,
    },
}

impl Serialize for Provenance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Provenance::Brute => ProvenanceRepr::Tag("brute".into()),
            Provenance::Collision { nu, i, j } => ProvenanceRepr::Collision {
                nu: nu.clone(),
                i: i.clone(),
                j: j.clone(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Provenance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ProvenanceRepr::deserialize(d)? {
            ProvenanceRepr::Tag(t) if t == "brute" => Ok(Provenance::Brute),
            ProvenanceRepr::Tag(t) => Err(serde::de::Error::custom(format!("unknown provenance {t}"))),
            ProvenanceRepr::Collision { nu, i, j } => Ok(Provenance::Collision { nu, i, j }),
        }
    }
}

/// A verified non-trivial solution in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PteSolution {
    #[serde(rename = "X")]
    pub x: Vec<i64>,
    #[serde(rename = "Y")]
    pub y: Vec<i64>,
    pub size: usize,
    pub degree: u32,
    pub ideal: bool,
    pub provenance: Provenance,
}

impl PteSolution {
    /// Canonicalizes and verifies `(x, y)`; `None` if trivial.
    pub fn new(x: &[i64], y: &[i64], provenance: Provenance) -> Result<Option<PteSolution>> {
        let (x, y) = canonical_pair(x, y)?;
        match verify(&x, &y, 0)?.1 {
            MaxDegree::Trivial => Ok(None),
            MaxDegree::Upto(d) => Ok(Some(PteSolution {
                size: x.len(),
                degree: d,
                ideal: d as usize + 1 == x.len(),
                x,
                y,
                provenance,
            })),
        }
    }
}

impl fmt::Display for PteSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X=({}) Y=({}) size={} degree={}{}",
            self.x.iter().join(","),
            self.y.iter().join(","),
            self.size,
            self.degree,
            if self.ideal { " ideal" } else { "" }
        )?;
        if let Provenance::Collision { nu, i, j } = &self.provenance {
            write!(
                f,
                " from nu=[{}] I={{{}}} J={{{}}}",
                nu.iter().join(","),
                i.iter().join(","),
                j.iter().join(",")
            )?;
        }
        Ok(())
    }
}

/// Sorts each list descending, translates so the joint minimum is 0, and
/// puts the lexicographically larger list first.
pub fn canonical_pair(x: &[i64], y: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch(x.len(), y.len()));
    }
    let min = x.iter().chain(y).copied().min().unwrap_or(0);
    let norm = |v: &[i64]| -> Vec<i64> {
        let mut v: Vec<i64> = v.iter().map(|a| a - min).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let (a, b) = (norm(x), norm(y));
    Ok(if a >= b { (a, b) } else { (b, a) })
}

/// Limits on search effort.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_candidates: u64,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: 50_000_000,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn check_candidates(&self, count: u64, what: &str) -> Result<()> {
        if count > self.max_candidates {
            return Err(Error::BudgetExceeded(format!(
                "{what}: {count} candidates exceed limit {}",
                self.max_candidates
            )));
        }
        Ok(())
    }

    pub fn check_time(&self, what: &str) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(format!("{what}: time limit reached"))),
            _ => Ok(()),
        }
    }
}

fn multiset_count(values: u64, size: u64) -> Int {
    crate::binomial(values + size - 1, size)
}

/// All non-trivial solutions of the given size agreeing through `degree`,
/// with entries in `[−bound, bound]`, up to translation and swap.
/// Enumerates multisets in `[0, 2·bound]` with joint minimum 0.
pub fn brute_search(size: usize, degree: u32, bound: u32, budget: &Budget) -> Result<Vec<PteSolution>> {
    if size == 0 {
        return Err(Error::InvalidArgument("size must be positive".into()));
    }
    let top = 2 * bound as i64;
    let count = multiset_count(top as u64 + 1, size as u64);
    budget.check_candidates(u64::try_from(count).unwrap_or(u64::MAX), "brute_search")?;
    let lists: Vec<Vec<i64>> = (0..=top)
        .rev()
        .combinations_with_replacement(size)
        .collect();
    budget.check_time("brute_search")?;
    let keyed: Vec<(Vec<Int>, usize)> = lists
        .par_iter()
        .enumerate()
        .map(|(idx, l)| ((1..=degree).map(|j| power_sum(l, j)).collect(), idx))
        .collect();
    let mut groups: HashMap<Vec<Int>, Vec<usize>> = HashMap::new();
    for (key, idx) in keyed {
        groups.entry(key).or_default().push(idx);
    }
    budget.check_time("brute_search")?;
    let mut out = BTreeMap::new();
    for members in groups.values().filter(|g| g.len() > 1) {
        for (a, b) in members.iter().tuple_combinations() {
            let (x, y) = (&lists[*a], &lists[*b]);
            let min = x.iter().chain(y.iter()).min().copied().unwrap_or(0);
            if min != 0 {
                continue;
            }
            if let Some(s) = PteSolution::new(x, y, Provenance::Brute)? {
                out.insert((s.x.clone(), s.y.clone()), s);
            }
        }
    }
    Ok(out.into_values().collect())
}

/// No non-trivial pair of the given size agrees through degree `size`
/// within `[−bound, bound]`.
pub fn validate_size_bound(size: usize, bound: u32, budget: &Budget) -> Result<bool> {
    Ok(brute_search(size, size as u32, bound, budget)?.is_empty())
}

/// Lists obtained from two constituents `ν + λ_I`, `ν + λ_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction {
    #[serde(rename = "X")]
    pub x: Vec<i64>,
    #[serde(rename = "Y")]
    pub y: Vec<i64>,
    pub r: usize,
    pub guaranteed_degree: u32,
}

/// `x_t = f_i(ν) − i` over `I \ J` and `y_t = f_j(ν) − j` over `J \ I`.
///
/// The degree is the largest `s` with `S₂, …, S_{s+1}` agreeing on the two
/// constituents, and the lists are checked to agree through it.
pub fn extract_from_collision(n: usize, k: usize, nu: &FundWeight, i: &IndexSet, j: &IndexSet) -> Result<Extraction> {
    if nu.n() != n || i.n() != n || j.n() != n {
        return Err(Error::RankMismatch { left: n, right: nu.n() });
    }
    if i.k() != k || j.k() != k {
        return Err(Error::InvalidArgument(format!("index sets must have {k} elements")));
    }
    if i == j {
        return Err(Error::SameIndexSet);
    }
    let base = nu.to_pattern();
    let (pi, di) = base.add_lambda(i)?;
    let (pj, dj) = base.add_lambda(j)?;
    if !di {
        return Err(Error::NotDominant(pi.to_string()));
    }
    if !dj {
        return Err(Error::NotDominant(pj.to_string()));
    }
    let f = base.entries();
    let x: Vec<i64> = i.difference(j).into_iter().map(|t| f[t - 1] - t as i64).collect();
    let y: Vec<i64> = j.difference(i).into_iter().map(|t| f[t - 1] - t as i64).collect();
    let mut s = 0;
    while pi.s_functional(s + 2) == pj.s_functional(s + 2) {
        s += 1;
        if s as usize > 2 * n + 2 {
            return Err(Error::Invariant(format!("{i} and {j} agree in every S_q")));
        }
    }
    let (holds, max) = verify(&x, &y, s)?;
    if !holds || max == MaxDegree::Trivial {
        return Err(Error::Invariant(format!(
            "extracted lists {x:?}, {y:?} do not agree through degree {s}"
        )));
    }
    Ok(Extraction {
        x,
        y,
        r: i.intersection_size(j),
        guaranteed_degree: s,
    })
}

/// Options for [`ideal_search`].
#[derive(Clone, Debug, Default)]
pub struct IdealSearchOptions {
    pub budget: Budget,
    /// JSON file recording finished leading coefficients and their solutions.
    pub checkpoint: Option<std::path::PathBuf>,
}

#[derive(Serialize, Deserialize, Default)]
struct Checkpoint {
    k: usize,
    bound: u32,
    done: Vec<u32>,
    solutions: Vec<PteSolution>,
}

fn load_checkpoint(path: &Path, k: usize, bound: u32) -> Result<Checkpoint> {
    let fresh = Checkpoint {
        k,
        bound,
        ..Default::default()
    };
    if !path.exists() {
        return Ok(fresh);
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let cp: Checkpoint = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    if cp.k != k || cp.bound != bound {
        return Ok(fresh);
    }
    Ok(cp)
}

fn save_checkpoint(path: &Path, cp: &Checkpoint) -> Result<()> {
    let text = serde_json::to_string_pretty(cp).map_err(|e| Error::Invariant(e.to_string()))?;
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)
        .and_then(|_| std::fs::rename(&tmp, path))
        .map_err(|e| Error::Invariant(format!("{}: {e}", path.display())))
}

fn solutions_for_nu(k: usize, nu: &FundWeight) -> Result<Vec<PteSolution>> {
    let n = 2 * k;
    let collisions = find_collisions(n, k, nu, k as u32)?;
    check_disjoint_collisions(&collisions)?;
    let mut out = Vec::new();
    for c in collisions {
        let e = extract_from_collision(n, k, nu, &c.i, &c.j)?;
        let prov = Provenance::Collision {
            nu: nu.coeffs().to_vec(),
            i: c.i.elems().to_vec(),
            j: c.j.elems().to_vec(),
        };
        if let Some(s) = PteSolution::new(&e.x, &e.y, prov)? {
            if s.ideal && s.size == k {
                out.push(s);
            } else if s.degree as usize >= s.size {
                return Err(Error::Invariant(format!("solution beyond the size bound: {s}")));
            }
        }
    }
    Ok(out)
}

/// Ideal solutions of size `k` extracted from depth-`k` collisions over
/// strictly dominant `ν` of `sl_{2k}` with coefficients in `[1, bound]`,
/// deduplicated under translation and swap.
pub fn ideal_search(k: usize, bound: u32, opts: &IdealSearchOptions) -> Result<Vec<PteSolution>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("need k >= 2, got {k}")));
    }
    if bound == 0 {
        return Err(Error::InvalidArgument("coefficient range [1, 0] is empty".into()));
    }
    let n = 2 * k;
    let count = num_traits::pow(Int::from(bound), n - 1);
    opts.budget
        .check_candidates(u64::try_from(count).unwrap_or(u64::MAX), "ideal_search")?;
    let mut cp = match &opts.checkpoint {
        Some(p) => load_checkpoint(p, k, bound)?,
        None => Checkpoint {
            k,
            bound,
            ..Default::default()
        },
    };
    for lead in 1..=bound {
        if cp.done.contains(&lead) {
            continue;
        }
        opts.budget.check_time("ideal_search")?;
        let weights: Vec<FundWeight> = (0..n - 2)
            .map(|_| 1..=bound)
            .multi_cartesian_product()
            .map(|rest| {
                let mut a = vec![lead];
                a.extend(rest);
                FundWeight::new(a)
            })
            .collect::<Result<_>>()?;
        let found: Vec<Vec<PteSolution>> = weights
            .par_iter()
            .map(|nu| solutions_for_nu(k, nu))
            .collect::<Result<_>>()?;
        cp.solutions.extend(found.into_iter().flatten());
        cp.done.push(lead);
        if let Some(p) = &opts.checkpoint {
            save_checkpoint(p, &cp)?;
        }
    }
    let mut dedup: BTreeMap<(Vec<i64>, Vec<i64>), PteSolution> = BTreeMap::new();
    for s in cp.solutions {
        dedup.entry((s.x.clone(), s.y.clone())).or_insert(s);
    }
    Ok(dedup.into_values().collect())
}

/// Power sums `Σ x^j` for `j = 1..=m`.
pub fn power_sums(xs: &[i64], m: u32) -> Vec<Int> {
    (1..=m).map(|j| power_sum(xs, j)).collect()
}

/// Whether power sums through `m` still agree after a common translation by
/// `c` and after a common negation.
pub fn symmetric_under_affine(x: &[i64], y: &[i64], m: u32, c: i64) -> bool {
    let tr = |v: &[i64]| v.iter().map(|a| a + c).collect::<Vec<_>>();
    let ng = |v: &[i64]| v.iter().map(|a| -a).collect::<Vec<_>>();
    let d = |a: &[i64], b: &[i64]| {
        power_sums(a, m)
            .into_iter()
            .zip(power_sums(b, m))
            .all(|(p, q)| (p - q).is_zero())
    };
    d(&tr(x), &tr(y)) && d(&ng(x), &ng(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> IndexSet {
        IndexSet::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn verify_examples() {
        assert_eq!(verify(&[1, 2, 3], &[3, 1, 2], 10).unwrap(), (true, MaxDegree::Trivial));
        assert_eq!(verify(&[0, 3], &[1, 2], 1).unwrap(), (true, MaxDegree::Upto(1)));
        assert_eq!(verify(&[1, 2, 6], &[0, 4, 5], 2).unwrap(), (true, MaxDegree::Upto(2)));
        assert_eq!(verify(&[1, 2, 6], &[0, 4, 5], 3).unwrap(), (false, MaxDegree::Upto(2)));
        assert_eq!(verify(&[1], &[1, 2], 1), Err(Error::SizeMismatch(1, 2)));
    }

    #[test]
    fn trivial_examples() {
        assert!(is_trivial(&[1, 2], &[2, 1]));
        assert!(!is_trivial(&[0, 3], &[1, 2]));
        assert!(!is_trivial(&[1, 1, 2], &[1, 2, 2]));
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let x = [1000, 2000, 6000];
        let y = [0, 4000, 5000];
        assert_eq!(verify(&x, &y, 2).unwrap(), (true, MaxDegree::Upto(2)));
        assert_eq!(power_sums(&[1000], 12)[11], num_traits::pow(Int::from(10), 36));
    }

    #[test]
    fn brute_examples() {
        let b = Budget::default();
        let s = brute_search(2, 1, 3, &b).unwrap();
        assert!(s.iter().any(|s| s.x == vec![3, 0] && s.y == vec![2, 1]));
        assert!(brute_search(2, 2, 6, &b).unwrap().is_empty());
        let s = brute_search(3, 2, 6, &b).unwrap();
        assert!(s.iter().any(|s| s.x == vec![6, 2, 1] && s.y == vec![5, 4, 0]));
        for sol in &s {
            assert!(verify(&sol.x, &sol.y, 2).unwrap().0);
            assert!(symmetric_under_affine(&sol.x, &sol.y, 2, 7));
        }
        let tight = Budget {
            max_candidates: 10,
            deadline: None,
        };
        assert!(matches!(brute_search(3, 2, 6, &tight), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn size_bound_examples() {
        let b = Budget::default();
        assert!(validate_size_bound(1, 10, &b).unwrap());
        assert!(validate_size_bound(2, 8, &b).unwrap());
        assert!(validate_size_bound(3, 5, &b).unwrap());
    }

    #[test]
    fn extraction_examples() {
        let rho = FundWeight::rho(4);
        let e = extract_from_collision(4, 2, &rho, &set(4, &[1, 4]), &set(4, &[2, 3])).unwrap();
        assert_eq!((e.x.clone(), e.y.clone(), e.r, e.guaranteed_degree), (vec![2, -4], vec![0, -2], 0, 1));
        let e = extract_from_collision(4, 2, &rho, &set(4, &[1, 2]), &set(4, &[1, 3])).unwrap();
        assert_eq!((e.x, e.y, e.r, e.guaranteed_degree), (vec![0], vec![-2], 1, 0));
        assert_eq!(
            extract_from_collision(4, 2, &rho, &set(4, &[1, 2]), &set(4, &[1, 2])),
            Err(Error::SameIndexSet)
        );
    }

    #[test]
    fn ideal_examples() {
        let opts = IdealSearchOptions::default();
        let s = ideal_search(2, 2, &opts).unwrap();
        assert!(!s.is_empty());
        assert!(s.iter().all(|s| s.size == 2 && s.degree == 1 && s.ideal));
        let s = ideal_search(3, 3, &opts).unwrap();
        assert!(!s.is_empty());
        for sol in &s {
            assert!(verify(&sol.x, &sol.y, 2).unwrap().0);
            assert!(!verify(&sol.x, &sol.y, 3).unwrap().0);
        }
        assert!(ideal_search(2, 0, &opts).is_err());
        assert!(ideal_search(1, 2, &opts).is_err());
    }

    #[test]
    fn checkpoint_resumes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.json");
        let opts = IdealSearchOptions {
            checkpoint: Some(path.clone()),
            ..Default::default()
        };
        let first = ideal_search(2, 2, &opts).unwrap();
        assert!(path.exists());
        let second = ideal_search(2, 2, &opts).unwrap();
        assert_eq!(first, second);
        let cold = ideal_search(2, 2, &IdealSearchOptions::default()).unwrap();
        assert_eq!(first, cold);
    }

    #[test]
    fn records_round_trip() {
        let s = ideal_search(2, 2, &IdealSearchOptions::default()).unwrap();
        let json = serde_json::to_string(&s[0]).unwrap();
        assert!(json.contains(r#""provenance":{"nu":"#));
        let back: PteSolution = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s[0]);
        let b = brute_search(2, 1, 1, &Budget::default()).unwrap();
        let json = serde_json::to_string(&b[0]).unwrap();
        assert!(json.contains(r#""provenance":"brute""#));
        assert_eq!(serde_json::from_str::<PteSolution>(&json).unwrap(), b[0]);
    }
}
