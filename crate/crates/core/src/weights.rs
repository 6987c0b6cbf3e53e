//! sl_n weight arithmetic in Young-pattern coordinates.
//!
//! A [`YoungPattern`] `f = (f_1, …, f_n)` and its translate `f + c·(1,…,1)`
//! name the same sl_n weight. Everything computed here (centered eigenvalues,
//! the power-sum functionals `S_k`, character equality) is translation
//! invariant, so patterns are never renormalised.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::{rat, Int, Rational};

fn parse_int_list<T: FromStr>(s: &str, prefix: &str) -> Result<Vec<T>>
where
    T::Err: fmt::Display,
{
    let t = s.trim();
    let t = t.strip_prefix(prefix).unwrap_or(t).trim();
    let t = t
        .strip_prefix('[')
        .and_then(|u| u.strip_suffix(']'))
        .or_else(|| t.strip_prefix('{').and_then(|u| u.strip_suffix('}')))
        .unwrap_or(t)
        .trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|e| Error::Parse(format!("bad entry {x:?}: {e}")))
        })
        .collect()
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[{}]", items.iter().join(","))
}

/// Integer sequence encoding an sl_n weight, `n = f.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungPattern {
    f: Vec<i64>,
}

impl YoungPattern {
    pub fn new(f: Vec<i64>) -> Self {
        YoungPattern { f }
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.f
    }

    pub fn is_dominant(&self) -> bool {
        self.f.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn translate(&self, c: i64) -> YoungPattern {
        YoungPattern::new(self.f.iter().map(|x| x + c).collect())
    }

    pub fn total(&self) -> i64 {
        self.f.iter().sum()
    }

    /// Mean entry `a₀ = Σ f_j / n`.
    pub fn a0(&self) -> Rational {
        Rational::new(Int::from(self.total()), Int::from(self.n() as i64))
    }

    /// `c_t = a₀ − n + t`.
    pub fn c(&self, t: usize) -> Rational {
        self.a0() - rat(self.n() as i64) + rat(t as i64)
    }

    /// Eigenvalues `m_i = f_i − mean` of `X_{ii}` on the highest weight vector.
    pub fn centered_m(&self) -> Vec<Rational> {
        let mean = self.a0();
        self.f.iter().map(|&x| rat(x) - &mean).collect()
    }

    /// The shifted coordinates `m_i + n − i` (1-based `i`).
    pub fn shifted(&self) -> Vec<Rational> {
        let n = self.n();
        self.centered_m()
            .into_iter()
            .enumerate()
            .map(|(i, m)| m + rat((n - 1 - i) as i64))
            .collect()
    }

    /// `S_k = Σ_i [(m_i + n − i)^k − (n − i)^k]`.
    pub fn s_functional(&self, k: u32) -> Rational {
        let n = self.n();
        self.shifted()
            .into_iter()
            .enumerate()
            .map(|(i, l)| {
                num_traits::pow(l, k as usize) - num_traits::pow(rat((n - 1 - i) as i64), k as usize)
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Adds the indicator of `set` without renormalising; also reports dominance.
    pub fn add_lambda(&self, set: &IndexSet) -> Result<(YoungPattern, bool)> {
        if set.n() != self.n() {
            return Err(Error::RankMismatch {
                left: self.n(),
                right: set.n(),
            });
        }
        let mut g = self.f.clone();
        for &t in set.elems() {
            g[t - 1] += 1;
        }
        let g = YoungPattern::new(g);
        let dominant = g.is_dominant();
        Ok((g, dominant))
    }

    /// Weyl dimension `Π_{i<j} (f_i − f_j + j − i)/(j − i)`.
    pub fn weyl_dim(&self) -> Result<Int> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.to_string()));
        }
        let n = self.n();
        let mut num = Int::one();
        let mut den = Int::one();
        for i in 0..n {
            for j in i + 1..n {
                num *= Int::from(self.f[i] - self.f[j] + (j - i) as i64);
                den *= Int::from((j - i) as i64);
            }
        }
        Ok(num / den)
    }

    /// Coefficients on fundamental weights, `a_i = f_i − f_{i+1}`.
    pub fn to_weight(&self) -> Result<FundWeight> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.to_string()));
        }
        Ok(FundWeight {
            a: self.f.windows(2).map(|w| (w[0] - w[1]) as u32).collect(),
        })
    }
}

impl fmt::Display for YoungPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f=")?;
        write_list(f, &self.f)
    }
}

impl FromStr for YoungPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let f: Vec<i64> = parse_int_list(s, "f=")?;
        if f.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        Ok(YoungPattern::new(f))
    }
}

/// Dominant weight `Σ a_i ω_i` of sl_n, `n = a.len() + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundWeight {
    a: Vec<u32>,
}

impl FundWeight {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidArgument(
                "a weight needs at least one coefficient (n >= 2)".into(),
            ));
        }
        Ok(FundWeight { a })
    }

    pub fn zero(n: usize) -> Self {
        FundWeight { a: vec![0; n - 1] }
    }

    /// `ρ`, all coefficients one.
    pub fn rho(n: usize) -> Self {
        FundWeight { a: vec![1; n - 1] }
    }

    /// Fundamental weight `ω_i`, `1 ≤ i ≤ n − 1`.
    pub fn omega(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidArgument(format!(
                "fundamental weight index {i} out of range for n={n}"
            )));
        }
        let mut a = vec![0; n - 1];
        a[i - 1] = 1;
        Ok(FundWeight { a })
    }

    pub fn n(&self) -> usize {
        self.a.len() + 1
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.a
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.a.iter().all(|&x| x > 0)
    }

    /// Young pattern with `f_i = Σ_{j ≥ i} a_j` and `f_n = 0`.
    pub fn to_pattern(&self) -> YoungPattern {
        let n = self.n();
        let mut f = vec![0i64; n];
        for i in (0..n - 1).rev() {
            f[i] = f[i + 1] + self.a[i] as i64;
        }
        YoungPattern::new(f)
    }
}

impl fmt::Display for FundWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a=")?;
        write_list(f, &self.a)
    }
}

impl FromStr for FundWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FundWeight::new(parse_int_list(s, "a=")?)
    }
}

impl Serialize for FundWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.a.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FundWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let a = Vec::<u32>::deserialize(d)?;
        FundWeight::new(a).map_err(serde::de::Error::custom)
    }
}

/// Strictly increasing subset `{i_1 < … < i_k}` of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: usize,
    elems: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        let increasing = elems.windows(2).all(|w| w[0] < w[1]);
        let in_range = elems.iter().all(|&e| (1..=n).contains(&e));
        if !increasing || !in_range {
            return Err(Error::InvalidArgument(format!(
                "index set must be strictly increasing within 1..={n}: {elems:?}"
            )));
        }
        Ok(IndexSet { n, elems })
    }

    /// All `k`-subsets of `{1..n}` in lexicographic order.
    pub fn all(n: usize, k: usize) -> Vec<IndexSet> {
        (1..=n)
            .combinations(k)
            .map(|elems| IndexSet { n, elems })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn intersection_size(&self, other: &IndexSet) -> usize {
        self.elems.iter().filter(|&&e| other.contains(e)).count()
    }

    /// Elements of `self` not in `other`, increasing.
    pub fn difference(&self, other: &IndexSet) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|&e| !other.contains(e))
            .collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elems.iter().join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

/// Parses `1,4` or `{1,4}` as a subset of `{1..n}`.
pub fn parse_index_set(s: &str, n: usize) -> Result<IndexSet> {
    IndexSet::new(n, parse_int_list(s, "")?)
}

pub fn weight_to_pattern(w: &FundWeight) -> YoungPattern {
    w.to_pattern()
}

pub fn centered_m(p: &YoungPattern) -> Vec<Rational> {
    p.centered_m()
}

pub fn s_functional(p: &YoungPattern, k: u32) -> Rational {
    p.s_functional(k)
}

/// Equality of infinitesimal characters: the shifted coordinate multisets agree.
pub fn char_equal(p: &YoungPattern, q: &YoungPattern) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::RankMismatch {
            left: p.n(),
            right: q.n(),
        });
    }
    let mut a = p.shifted();
    let mut b = q.shifted();
    a.sort();
    b.sort();
    Ok(a == b)
}

pub fn add_lambda_i(p: &YoungPattern, set: &IndexSet) -> Result<(YoungPattern, bool)> {
    p.add_lambda(set)
}

/// Raw pattern `xs − δ` for a weakly decreasing integer list.
pub fn lists_to_pattern(xs: &[i64]) -> Result<YoungPattern> {
    if xs.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!(
            "list must be weakly decreasing: {xs:?}"
        )));
    }
    let n = xs.len();
    Ok(YoungPattern::new(
        xs.iter()
            .enumerate()
            .map(|(i, &x)| x - (n - 1 - i) as i64)
            .collect(),
    ))
}

pub fn weyl_dim(p: &YoungPattern) -> Result<Int> {
    p.weyl_dim()
}
