//! Exterior-power representations of sl_n over exact rationals, Casimir
//! matrices, the coproduct, and Kostant's matrices `M_{λ,ν}(𝔠_p)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, IntSpan};
use crate::report::Report;
use crate::weights::{FundWeight, IndexSet, YoungPattern};
use crate::{rat, rat_frac, Int, Rational};

/// Default cap on the Casimir degree.
pub const DEFAULT_MAX_P: u32 = 6;
/// Default cap on the dimension of representations built for spectra.
pub const DEFAULT_MAX_DIM: usize = 400;

/// Matrices `π(X_ij)` on an ordered, labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    n: usize,
    basis: Vec<String>,
    gens: Vec<ExactMatrix>,
}

impl Rep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// `π(X_ij)`, 1-based.
    pub fn gen(&self, i: usize, j: usize) -> &ExactMatrix {
        &self.gens[(i - 1) * self.n + (j - 1)]
    }

    /// First violated commutation relation or trace condition, if any.
    pub fn relation_violation(&self) -> Option<String> {
        let n = self.n;
        let mut trace = ExactMatrix::zeros(self.dim(), self.dim());
        for i in 1..=n {
            trace = &trace + self.gen(i, i);
        }
        if !trace.is_zero() {
            return Some("sum of X_ii is nonzero".into());
        }
        let zero = ExactMatrix::zeros(self.dim(), self.dim());
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for m in 1..=n {
                        let a = self.gen(i, j);
                        let b = self.gen(k, m);
                        let lhs = &(a * b) - &(b * a);
                        let t1 = if j == k { self.gen(i, m) } else { &zero };
                        let t2 = if i == m { self.gen(k, j) } else { &zero };
                        if lhs != t1 - t2 {
                            return Some(format!("[X_{i}{j}, X_{k}{m}]"));
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether `m` commutes with every `π(X_ij)`.
    pub fn is_invariant(&self, m: &ExactMatrix) -> bool {
        self.gens.iter().all(|g| g.commutes_with(m))
    }
}

/// `Λ^k` of the standard representation, on the wedge basis of `k`-subsets.
pub fn fundamental_rep(n: usize, k: usize) -> Result<Rep> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n-1, got k={k}, n={n}")));
    }
    let subsets = IndexSet::all(n, k);
    let index: BTreeMap<&[usize], usize> = subsets
        .iter()
        .enumerate()
        .map(|(a, s)| (s.elems(), a))
        .collect();
    let d = subsets.len();
    let shift = rat_frac(k as i64, n as i64);
    let mut gens = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let mut m = ExactMatrix::zeros(d, d);
            for (col, s) in subsets.iter().enumerate() {
                if i == j {
                    let v = if s.contains(i) { Rational::one() } else { Rational::zero() };
                    m.set(col, col, v - &shift);
                    continue;
                }
                if !s.contains(j) || s.contains(i) {
                    continue;
                }
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                let between = s.elems().iter().filter(|&&e| lo < e && e < hi).count();
                let mut t: Vec<usize> = s.elems().iter().map(|&e| if e == j { i } else { e }).collect();
                t.sort_unstable();
                let row = index[t.as_slice()];
                m.set(row, col, if between % 2 == 0 { rat(1) } else { rat(-1) });
            }
            gens.push(m);
        }
    }
    Ok(Rep {
        n,
        basis: subsets.iter().map(|s| s.to_string()).collect(),
        gens,
    })
}

/// The coproduct `X ↦ X⊗1 + 1⊗X` applied to two representations.
pub fn tensor_delta(a: &Rep, b: &Rep) -> Result<Rep> {
    if a.n != b.n {
        return Err(Error::RankMismatch { left: a.n, right: b.n });
    }
    let ia = ExactMatrix::identity(a.dim());
    let ib = ExactMatrix::identity(b.dim());
    let gens = a
        .gens
        .par_iter()
        .zip(b.gens.par_iter())
        .map(|(x, y)| &x.kron(&ib) + &ia.kron(y))
        .collect();
    let mut basis = Vec::with_capacity(a.dim() * b.dim());
    for s in &a.basis {
        for t in &b.basis {
            basis.push(format!("{s}⊗{t}"));
        }
    }
    Ok(Rep { n: a.n, basis, gens })
}

/// `π(𝔠_p) = Σ π(X_{i1 i2}) ⋯ π(X_{ip i1})`, with `p ≤ DEFAULT_MAX_P`.
pub fn casimir(r: &Rep, p: u32) -> Result<ExactMatrix> {
    casimir_bounded(r, p, DEFAULT_MAX_P)
}

/// Casimir matrix with an explicit degree cap.
///
/// Accumulates path sums `P_ab = Σ X_{a i2} ⋯ X_{i_r b}` one factor at a time.
pub fn casimir_bounded(r: &Rep, p: u32, max_p: u32) -> Result<ExactMatrix> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("need p >= 2, got {p}")));
    }
    if p > max_p {
        return Err(Error::BudgetExceeded(format!("casimir degree {p} exceeds bound {max_p}")));
    }
    let n = r.n;
    let d = r.dim();
    let mut paths: Vec<ExactMatrix> = r.gens.clone();
    for step in 2..=p {
        let last = step == p;
        paths = (0..n * n)
            .into_par_iter()
            .map(|ab| {
                let (a, b) = (ab / n, ab % n);
                if last && a != b {
                    return ExactMatrix::zeros(d, d);
                }
                (0..n).fold(ExactMatrix::zeros(d, d), |acc, l| {
                    &acc + &(&paths[a * n + l] * &r.gens[l * n + b])
                })
            })
            .collect();
    }
    Ok((0..n).fold(ExactMatrix::zeros(d, d), |acc, a| &acc + &paths[a * n + a]))
}

/// The scalar `χ` of a scalar matrix `χ·I`.
pub fn scalar_of(m: &ExactMatrix) -> Result<Rational> {
    m.as_scalar().ok_or(Error::NotScalar)
}

/// `π_{a⊗b}(𝔠_p) − π_a(𝔠_p)⊗I − I⊗π_b(𝔠_p)`.
pub fn kostant_matrix(a: &Rep, b: &Rep, p: u32) -> Result<ExactMatrix> {
    let t = tensor_delta(a, b)?;
    let ct = casimir(&t, p)?;
    let ca = casimir(a, p)?;
    let cb = casimir(b, p)?;
    let left = ca.kron(&ExactMatrix::identity(b.dim()));
    let right = ExactMatrix::identity(a.dim()).kron(&cb);
    Ok(&(&ct - &left) - &right)
}

/// One eigenvalue record of a spectrum check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenRecord {
    #[serde(serialize_with = "ser_display")]
    pub eigenvalue: Rational,
    #[serde(serialize_with = "ser_display")]
    pub predicted_multiplicity: Int,
    pub verified_multiplicity: usize,
    pub constituents: Vec<String>,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Predicted eigenvalues of `M_{ω_k,ω_j}(𝔠_p)` grouped by value:
/// `S_p(ω_j + λ_I) − S_p(ω_k) − S_p(ω_j)` with summed Weyl dimensions.
pub fn predicted_spectrum(n: usize, k: usize, j: usize, p: u32) -> Result<Vec<(Rational, Int, Vec<String>)>> {
    let wk = FundWeight::omega(k, n)?.to_pattern();
    let wj = FundWeight::omega(j, n)?.to_pattern();
    let base = wk.s_functional(p) + wj.s_functional(p);
    let mut groups: BTreeMap<Rational, (Int, Vec<String>)> = BTreeMap::new();
    for set in IndexSet::all(n, k) {
        let (pattern, dominant) = wj.add_lambda(&set)?;
        if !dominant {
            continue;
        }
        let c = pattern.s_functional(p) - &base;
        let entry = groups.entry(c).or_insert_with(|| (Int::zero(), Vec::new()));
        entry.0 += pattern.weyl_dim()?;
        entry.1.push(pattern.to_string());
    }
    Ok(groups.into_iter().map(|(c, (m, names))| (c, m, names)).collect())
}

/// Certifies the spectrum of `M_{ω_k,ω_j}(𝔠_p)` by an annihilating product
/// and exact ranks of the products omitting one factor.
pub fn spectrum_verify(n: usize, k: usize, j: usize, p: u32) -> Result<(Report, Vec<EigenRecord>)> {
    spectrum_verify_bounded(n, k, j, p, DEFAULT_MAX_DIM)
}

pub fn spectrum_verify_bounded(
    n: usize,
    k: usize,
    j: usize,
    p: u32,
    max_dim: usize,
) -> Result<(Report, Vec<EigenRecord>)> {
    let a = fundamental_rep(n, k)?;
    let b = fundamental_rep(n, j)?;
    if a.dim() * b.dim() > max_dim {
        return Err(Error::BudgetExceeded(format!(
            "tensor dimension {} exceeds bound {max_dim}",
            a.dim() * b.dim()
        )));
    }
    let m = kostant_matrix(&a, &b, p)?;
    let predicted = predicted_spectrum(n, k, j, p)?;
    let d = m.rows();
    let params = format!("n={n}, k={k}, j={j}, p={p}");
    let mut report = Report::new(format!("spectrum of M(omega_{k}, omega_{j}) at p={p}"));
    if p >= 3 {
        report.note("assumption-based: predicted values use S_p in place of the central character of c_p");
    }
    let shifted: Vec<ExactMatrix> = predicted
        .iter()
        .map(|(c, _, _)| &m - &ExactMatrix::scalar(d, c.clone()))
        .collect();
    let product = |skip: Option<usize>| {
        shifted
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .fold(ExactMatrix::identity(d), |acc, (_, s)| &acc * s)
    };
    let annihilator = product(None);
    report.push(
        "annihilating product vanishes",
        params.clone(),
        annihilator.is_zero(),
        (!annihilator.is_zero()).then(|| format!("rank {}", annihilator.rank())),
    );
    let ranks: Vec<usize> = (0..predicted.len())
        .into_par_iter()
        .map(|i| product(Some(i)).rank())
        .collect();
    let mut records = Vec::new();
    for ((c, mult, names), rank) in predicted.into_iter().zip(ranks) {
        report.push(
            "eigenvalue multiplicity",
            format!("{params}, eigenvalue={c}"),
            Int::from(rank) == mult,
            Some(format!("predicted {mult}, verified {rank}")),
        );
        records.push(EigenRecord {
            eigenvalue: c,
            predicted_multiplicity: mult,
            verified_multiplicity: rank,
            constituents: names,
        });
    }
    Ok((report, records))
}

/// Dimension of the unital algebra generated by the given square matrices.
pub fn generated_algebra_dim(gens: &[ExactMatrix]) -> usize {
    let d = gens.first().map(|g| g.rows()).unwrap_or(0);
    let mut span = IntSpan::new(d * d);
    let mut basis = vec![ExactMatrix::identity(d)];
    span.insert_rational(basis[0].entries());
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x * g;
                if span.insert_rational(y.entries()) {
                    next.push(y);
                }
            }
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    span.rank()
}

/// `S₂` of a pattern, the predicted scalar of `𝔠₂`.
pub fn predicted_casimir2(pattern: &YoungPattern) -> Rational {
    pattern.s_functional(2)
}
