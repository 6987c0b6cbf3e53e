//! The cohomology ring of the Grassmannian of `k`-planes in `C^n`, in the
//! Schubert basis `{s_λ : λ ⊆ k × (n−k)}`, and its presentation by the
//! column classes `w_1, …, w_k`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::IntSpan;
use crate::report::Report;
use crate::symfunc::{box_partitions, lr_expand, Partition};
use crate::{binomial, rat, Int, Rational};

/// Element of `L(k, n−k)`: rational combination of box partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassElement {
    k: usize,
    n: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl GrassElement {
    pub fn zero(k: usize, n: usize) -> Self {
        GrassElement {
            k,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, n: usize) -> Self {
        GrassElement::schubert(Partition::empty(), k, n).expect("empty partition fits any box")
    }

    /// The Schubert class `s_λ`; `λ` must fit in the box.
    pub fn schubert(lambda: Partition, k: usize, n: usize) -> Result<Self> {
        if !lambda.in_box(k, n - k) {
            return Err(Error::InvalidArgument(format!(
                "{lambda} does not fit in the {k}x{} box",
                n - k
            )));
        }
        let mut e = GrassElement::zero(k, n);
        e.coeffs.insert(lambda, Rational::one());
        Ok(e)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || !lambda.in_box(self.k, self.n - self.k) {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    fn check_same_box(&self, other: &GrassElement) -> Result<()> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::BoxMismatch(self.k, self.n, other.k, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &GrassElement) -> Result<GrassElement> {
        self.check_same_box(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> GrassElement {
        let mut out = GrassElement::zero(self.k, self.n);
        for (p, v) in &self.coeffs {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    /// Product with box truncation.
    pub fn mul(&self, other: &GrassElement) -> Result<GrassElement> {
        self.check_same_box(other)?;
        let mut out = GrassElement::zero(self.k, self.n);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let prod = ca * cb;
                for (lam, c) in lr_expand(a, b) {
                    out.add_term(lam, &prod * rat(c as i64));
                }
            }
        }
        Ok(out)
    }

    /// Coordinates in the box basis, in graded order.
    pub fn coordinates(&self) -> Vec<Rational> {
        box_partitions(self.k, self.n - self.k)
            .iter()
            .map(|p| self.coeff(p))
            .collect()
    }
}

impl fmt::Display for GrassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl Serialize for GrassElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (p, c) in &self.coeffs {
            seq.serialize_element(&(p.to_string(), c.to_string()))?;
        }
        seq.end()
    }
}

/// Polynomial in `w_1, …, w_k` with `deg w_i = i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoly {
    k: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl WPoly {
    pub fn zero(k: usize) -> Self {
        WPoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The generator `w_i`, `1 ≤ i ≤ k`.
    pub fn generator(i: usize, k: usize) -> Self {
        let mut e = vec![0; k];
        e[i - 1] = 1;
        WPoly::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = WPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.k);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degree `Σ i·t_i` of an exponent vector.
    pub fn weighted_degree(exps: &[u32]) -> u32 {
        exps.iter().enumerate().map(|(i, &t)| (i as u32 + 1) * t).sum()
    }

    /// Common weighted degree, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| Self::weighted_degree(e));
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn mul(&self, other: &WPoly) -> WPoly {
        assert_eq!(self.k, other.k);
        let mut out = WPoly::zero(self.k);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            WPoly::weighted_degree(b)
                .cmp(&WPoly::weighted_degree(a))
                .then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let a = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &t)| t > 0)
                .map(|(j, &t)| {
                    if t == 1 {
                        format!("w{}", j + 1)
                    } else {
                        format!("w{}^{}", j + 1, t)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

fn factorial(n: u32) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// Exponent vectors `t ∈ N^k` with `Σ i·t_i = d`.
pub fn weighted_compositions(d: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = i as u32 + 1;
        for t in 0..=rem / w {
            cur[i] = t;
            rec(i + 1, rem - t * w, cur, out);
        }
        cur[i] = 0;
    }
    if k > 0 {
        rec(0, d, &mut cur, &mut out);
    } else if d == 0 {
        out.push(Vec::new());
    }
    out
}

fn check_params(k: usize, n: usize) -> Result<()> {
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n-k, got k={k}, n={n}"
        )));
    }
    Ok(())
}

/// Relation generator `f_{s,n−k}` of weighted degree `n − k + s`.
///
/// Each monomial `w^t` carries `(t_s + … + t_k)/(t_1 + … + t_k)` times the
/// multinomial `binom(t_1 + … + t_k; t_1, …, t_k)`; with `signed` it also
/// carries `(−1)^{t_1 + … + t_k}`.
pub fn relation_f(s: usize, k: usize, n: usize, signed: bool) -> Result<WPoly> {
    check_params(k, n)?;
    if s == 0 || s > k {
        return Err(Error::InvalidArgument(format!("need 1 <= s <= k, got s={s}, k={k}")));
    }
    let mut out = WPoly::zero(k);
    for t in weighted_compositions((n - k + s) as u32, k) {
        let total: u32 = t.iter().sum();
        let tail: u32 = t[s - 1..].iter().sum();
        let multinomial = t
            .iter()
            .fold(factorial(total), |acc, &ti| acc / factorial(ti));
        let mut c = Rational::new(Int::from(tail) * multinomial, Int::from(total));
        if signed && total % 2 == 1 {
            c = -c;
        }
        out.add_term(t, c);
    }
    Ok(out)
}

/// Image of a `w`-polynomial in `L(k, n−k)` under `w_i ↦ s_{(1^i)}`.
pub fn reduce_w_poly(p: &WPoly, k: usize, n: usize) -> Result<GrassElement> {
    check_params(k, n)?;
    if p.k() != k {
        return Err(Error::RankMismatch {
            left: p.k(),
            right: k,
        });
    }
    let columns: Vec<GrassElement> = (1..=k)
        .map(|i| GrassElement::schubert(Partition::column(i), k, n))
        .collect::<Result<_>>()?;
    let mut powers: Vec<Vec<GrassElement>> = columns
        .iter()
        .map(|c| vec![GrassElement::one(k, n), c.clone()])
        .collect();
    let mut out = GrassElement::zero(k, n);
    for (e, c) in p.terms() {
        let mut term = GrassElement::one(k, n).scale(c);
        for (i, &t) in e.iter().enumerate() {
            while powers[i].len() <= t as usize {
                let next = powers[i].last().unwrap().mul(&columns[i])?;
                powers[i].push(next);
            }
            if t > 0 {
                term = term.mul(&powers[i][t as usize])?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Graded dimensions of `L(k, n−k)` counted from box partitions by size.
pub fn box_graded_dims(k: usize, n: usize) -> Vec<usize> {
    let top = k * (n - k);
    let mut dims = vec![0; top + 1];
    for p in box_partitions(k, n - k) {
        dims[p.size() as usize] += 1;
    }
    dims
}

/// Coefficients of the Gaussian binomial `[n choose k]_q` via
/// `[n,k] = [n−1,k−1] + q^k [n−1,k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> Vec<Int> {
    if k > n {
        return Vec::new();
    }
    if k == 0 || k == n {
        return vec![Int::one()];
    }
    let a = gaussian_binomial(n - 1, k - 1);
    let b = gaussian_binomial(n - 1, k);
    let len = k * (n - k) + 1;
    let mut out = vec![Int::zero(); len];
    for (i, c) in a.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + k] += c;
    }
    out
}

/// Graded dimensions of `Q[w_1..w_k] / (f_{1,n−k}, …, f_{k,n−k})`, computed
/// from the presentation by exact linear algebra, for degrees `0..=max_degree`.
pub fn presentation_graded_dims(k: usize, n: usize, signed: bool, max_degree: u32) -> Result<Vec<usize>> {
    let relations: Vec<WPoly> = (1..=k)
        .map(|s| relation_f(s, k, n, signed))
        .collect::<Result<_>>()?;
    let mut dims = Vec::new();
    for d in 0..=max_degree {
        let monos = weighted_compositions(d, k);
        let index: BTreeMap<&Vec<u32>, usize> =
            monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut span = IntSpan::new(monos.len());
        for (s, f) in relations.iter().enumerate() {
            let fd = (n - k + s + 1) as u32;
            if fd > d {
                continue;
            }
            for m in weighted_compositions(d - fd, k) {
                let g = f.mul(&WPoly::monomial(m, Rational::one()));
                let mut v = vec![Rational::zero(); monos.len()];
                for (e, c) in g.terms() {
                    v[index[e]] = c.clone();
                }
                span.insert_rational(&v);
            }
        }
        dims.push(monos.len() - span.rank());
    }
    Ok(dims)
}

/// Checks the `w`-presentation of `L(k, n−k)` against the Schubert basis.
pub fn verify_presentation(k: usize, n: usize) -> Result<Report> {
    check_params(k, n)?;
    let params = format!("k={k}, n={n}");
    let mut report = Report::new(format!("presentation of L({k},{})", n - k));

    let mut signed_zero = Vec::new();
    let mut unsigned_zero = Vec::new();
    for s in 1..=k {
        let signed = reduce_w_poly(&relation_f(s, k, n, true)?, k, n)?;
        let unsigned = reduce_w_poly(&relation_f(s, k, n, false)?, k, n)?;
        report.push(
            "signed relation vanishes in quotient",
            format!("{params}, s={s}"),
            signed.is_zero(),
            (!signed.is_zero()).then(|| signed.to_string()),
        );
        if signed.is_zero() {
            signed_zero.push(s);
        }
        if unsigned.is_zero() {
            unsigned_zero.push(s);
        }
    }
    report.note(format!(
        "sign convention: signed relations vanish for s={:?}; unsigned (as printed) vanish for s={:?}",
        signed_zero, unsigned_zero
    ));

    let top = (k * (n - k)) as u32;
    let pres = presentation_graded_dims(k, n, true, top + k as u32)?;
    let total: usize = pres.iter().sum();
    let expected = binomial(n as u64, k as u64);
    report.push(
        "total dimension equals binom(n,k)",
        params.clone(),
        Int::from(total) == expected,
        Some(format!("{total} vs {expected}")),
    );

    let boxes = box_graded_dims(k, n);
    let gauss = gaussian_binomial(n, k);
    let pres_trimmed: Vec<usize> = pres[..=top as usize].to_vec();
    let tail_zero = pres[top as usize + 1..].iter().all(|&d| d == 0);
    let gauss_match = gauss.len() == boxes.len()
        && gauss.iter().zip(&boxes).all(|(g, &b)| *g == Int::from(b));
    report.push(
        "graded dimensions equal Gaussian binomial",
        params.clone(),
        tail_zero && pres_trimmed == boxes && gauss_match,
        Some(format!(
            "presentation {:?}, box count {:?}, q-binomial [{}]",
            pres_trimmed,
            boxes,
            gauss.iter().join(",")
        )),
    );

    let low: Vec<Vec<u32>> = (0..=(n - k) as u32)
        .flat_map(|d| weighted_compositions(d, k))
        .collect();
    let mut span = IntSpan::new(boxes.iter().sum());
    let mut dependent = Vec::new();
    for e in &low {
        let img = reduce_w_poly(&WPoly::monomial(e.clone(), Rational::one()), k, n)?;
        if !span.insert_rational(&img.coordinates()) {
            dependent.push(format!("{:?}", e));
        }
    }
    report.push(
        "low-degree w-monomials independent",
        format!("{params}, weighted degree <= {}", n - k),
        dependent.is_empty(),
        Some(if dependent.is_empty() {
            format!("{} monomials", low.len())
        } else {
            format!("dependent: {}", dependent.join(" "))
        }),
    );

    let mut span = IntSpan::new(boxes.iter().sum());
    for d in 0..=top {
        for e in weighted_compositions(d, k) {
            let img = reduce_w_poly(&WPoly::monomial(e, Rational::one()), k, n)?;
            span.insert_rational(&img.coordinates());
        }
    }
    report.push(
        "column classes generate",
        params,
        Int::from(span.rank()) == expected,
        Some(format!("rank {}", span.rank())),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[u32], k: usize, n: usize) -> GrassElement {
        GrassElement::schubert(p(v), k, n).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert!(s(&[1], 1, 2).mul(&s(&[1], 1, 2)).unwrap().is_zero());
        let sq = s(&[1], 2, 4).mul(&s(&[1], 2, 4)).unwrap();
        assert_eq!(sq, s(&[2], 2, 4).add(&s(&[1, 1], 2, 4)).unwrap());
        let x = s(&[2, 1], 2, 5);
        assert_eq!(GrassElement::one(2, 5).mul(&x).unwrap(), x);
        assert!(matches!(
            s(&[1], 2, 4).mul(&s(&[1], 2, 5)),
            Err(Error::BoxMismatch(..))
        ));
    }

    #[test]
    fn relation_examples() {
        for n in 2..6 {
            let f = relation_f(1, 1, n, false).unwrap();
            assert_eq!(f, WPoly::monomial(vec![n as u32], Rational::one()));
        }
        let f = relation_f(1, 2, 4, false).unwrap();
        assert_eq!(f.to_string(), "w1^3 + 2*w1*w2");
        let f = relation_f(1, 2, 4, true).unwrap();
        assert_eq!(f.to_string(), "-w1^3 + 2*w1*w2");
        assert!(relation_f(3, 2, 4, true).is_err());
        assert!(relation_f(1, 3, 5, true).is_err());
    }

    #[test]
    fn reduce_examples() {
        let w1 = WPoly::generator(1, 2);
        assert_eq!(reduce_w_poly(&w1, 2, 4).unwrap(), s(&[1], 2, 4));
        let sq = reduce_w_poly(&w1.mul(&w1), 2, 4).unwrap();
        assert_eq!(sq, s(&[2], 2, 4).add(&s(&[1, 1], 2, 4)).unwrap());
        assert!(reduce_w_poly(&relation_f(1, 2, 4, true).unwrap(), 2, 4)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn unsigned_relation_survives_for_k_at_least_two() {
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let img = reduce_w_poly(&relation_f(1, k, n, false).unwrap(), k, n).unwrap();
            assert!(!img.is_zero(), "k={k} n={n}");
        }
    }

    #[test]
    fn presentation_examples() {
        let r = verify_presentation(1, 3).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(box_graded_dims(1, 3), vec![1, 1, 1]);
        let r = verify_presentation(2, 4).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(box_graded_dims(2, 4), vec![1, 1, 2, 1, 1]);
        let r = verify_presentation(3, 6).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(box_graded_dims(3, 6).iter().sum::<usize>(), 20);
    }

    #[test]
    fn gaussian_binomial_values() {
        let g: Vec<i64> = gaussian_binomial(4, 2)
            .into_iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(g, vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn poincare_duality() {
        for (k, n) in [(2, 4), (2, 5)] {
            let m = n - k;
            let full = p(&vec![m as u32; k]);
            for lam in box_partitions(k, m) {
                let dual = lam.complement_in_box(k, m).unwrap();
                let prod = s(lam.parts(), k, n).mul(&s(dual.parts(), k, n)).unwrap();
                assert_eq!(prod.coeff(&full), Rational::one(), "λ={lam}");
                for mu in box_partitions(k, m) {
                    if mu.size() + lam.size() == (k * m) as u32 && mu != dual {
                        let other = s(lam.parts(), k, n).mul(&s(mu.parts(), k, n)).unwrap();
                        assert!(other.is_zero(), "λ={lam} μ={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_nonnegative_integers() {
        let (k, n) = (2, 5);
        let basis = box_partitions(k, n - k);
        for a in &basis {
            for b in &basis {
                let prod = s(a.parts(), k, n).mul(&s(b.parts(), k, n)).unwrap();
                for (_, c) in prod.terms() {
                    assert!(c.is_integer() && c.is_positive());
                }
            }
        }
    }

    #[test]
    fn serializes_as_pairs() {
        let x = s(&[1], 2, 4).add(&s(&[2], 2, 4).scale(&rat(3))).unwrap();
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"[["[1]","1"],["[2]","3"]]"#
        );
        assert_eq!(x.to_string(), "s[1] + 3*s[2]");
    }
}
