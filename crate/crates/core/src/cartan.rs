//! The Cartan-restricted picture of the commuting ring for `V_{ω_k}`:
//! diagonal matrices of symmetric polynomials indexed by `k`-subsets.
//!
//! Two variable charts are supported. [`ZeroSlot::Zero`] works in
//! `x_1, …, x_{n−1}` and substitutes `0` for slot `n`; [`ZeroSlot::Free`]
//! keeps all `n` variables.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::IntSpan;
use crate::report::Report;
use crate::symfunc::{
    box_partitions, monomials_of_degree, partitions_of, partitions_up_to, power_sum,
    power_sum_product, schur_jacobi_trudi, schur_or_zero, Partition, SparsePoly,
};
use crate::weights::IndexSet;
use crate::{binomial, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroSlot {
    /// Variables `x_1..x_{n−1}`, with `x_n ≡ 0`.
    Zero,
    /// Variables `x_1..x_n`.
    Free,
}

impl ZeroSlot {
    pub fn nvars(self, n: usize) -> usize {
        match self {
            ZeroSlot::Zero => n - 1,
            ZeroSlot::Free => n,
        }
    }

    fn image(self, i: usize, n: usize) -> SparsePoly {
        let nv = self.nvars(n);
        if self == ZeroSlot::Zero && i == n {
            SparsePoly::zero(nv)
        } else {
            SparsePoly::var(i - 1, nv)
        }
    }
}

/// Diagonal matrix with one polynomial entry per `k`-subset of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagPolyMatrix {
    k: usize,
    n: usize,
    slot: ZeroSlot,
    subsets: Vec<IndexSet>,
    entries: Vec<SparsePoly>,
}

impl DiagPolyMatrix {
    fn from_fn(
        k: usize,
        n: usize,
        slot: ZeroSlot,
        mut entry: impl FnMut(&IndexSet) -> SparsePoly,
    ) -> Self {
        let subsets = IndexSet::all(n, k);
        let entries = subsets.iter().map(&mut entry).collect();
        DiagPolyMatrix {
            k,
            n,
            slot,
            subsets,
            entries,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slot(&self) -> ZeroSlot {
        self.slot
    }

    pub fn subsets(&self) -> &[IndexSet] {
        &self.subsets
    }

    pub fn entries(&self) -> &[SparsePoly] {
        &self.entries
    }

    pub fn entry(&self, s: &IndexSet) -> Option<&SparsePoly> {
        self.subsets
            .iter()
            .position(|t| t == s)
            .map(|i| &self.entries[i])
    }

    pub fn trace(&self) -> SparsePoly {
        self.entries
            .iter()
            .fold(SparsePoly::zero(self.slot.nvars(self.n)), |a, b| &a + b)
    }

    /// Multiplies every entry by the same polynomial.
    pub fn scale_by(&self, p: &SparsePoly) -> DiagPolyMatrix {
        DiagPolyMatrix {
            entries: self.entries.iter().map(|e| e * p).collect(),
            ..self.clone()
        }
    }
}

fn slot_images(set: &IndexSet, slot: ZeroSlot) -> Vec<SparsePoly> {
    set.elems().iter().map(|&i| slot.image(i, set.n())).collect()
}

fn all_images(n: usize, slot: ZeroSlot) -> Vec<SparsePoly> {
    (1..=n).map(|i| slot.image(i, n)).collect()
}

fn check_box_params(k: usize, n: usize) -> Result<()> {
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= n-k, got k={k}, n={n}"
        )));
    }
    Ok(())
}

/// `diag{ s_λ(x_{s_1}, …, x_{s_k}) : S ∈ binom([n], k) }`.
pub fn diag_schur_matrix(
    k: usize,
    n: usize,
    lambda: &Partition,
    slot: ZeroSlot,
) -> Result<DiagPolyMatrix> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let s = schur_jacobi_trudi(lambda, k)?;
    let nv = slot.nvars(n);
    Ok(DiagPolyMatrix::from_fn(k, n, slot, |set| {
        s.substitute(&slot_images(set, slot), nv)
    }))
}

/// Leading part of the Cartan image of `M_{ω_k}(𝔠_s)`:
/// `s·diag{p_{s−1}(slot vars)} − s·(k/n)·p_{s−1}(all vars)·I`.
pub fn restricted_mtype(k: usize, n: usize, s: u32, slot: ZeroSlot) -> Result<DiagPolyMatrix> {
    if s < 2 {
        return Err(Error::InvalidArgument(format!("need s >= 2, got {s}")));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let nv = slot.nvars(n);
    let p_slot = power_sum(s - 1, k);
    let p_all = power_sum(s - 1, n).substitute(&all_images(n, slot), nv);
    let correction = p_all.scale(&(rat(s as i64) * Rational::new(k.into(), n.into())));
    let s_rat = rat(s as i64);
    Ok(DiagPolyMatrix::from_fn(k, n, slot, |set| {
        &p_slot.substitute(&slot_images(set, slot), nv).scale(&s_rat) - &correction
    }))
}

/// Degree-`d` part of the ideal `(p_1, …, p_n)` in `n` variables.
#[derive(Clone, Debug)]
pub struct IdealPiece {
    n: usize,
    d: u32,
    index: HashMap<Vec<u32>, usize>,
    span: IntSpan,
}

impl IdealPiece {
    pub fn new(n: usize, d: u32) -> Self {
        let monos = monomials_of_degree(d, n);
        let index: HashMap<Vec<u32>, usize> =
            monos.into_iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut span = IntSpan::new(index.len());
        for i in 1..=(n as u32).min(d) {
            let p = power_sum(i, n);
            for m in monomials_of_degree(d - i, n) {
                let g = &p * &SparsePoly::monomial(m, rat(1));
                span.insert_rational(&Self::coords(&index, &g));
            }
        }
        IdealPiece { n, d, index, span }
    }

    fn coords(index: &HashMap<Vec<u32>, usize>, g: &SparsePoly) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); index.len()];
        for (e, c) in g.terms() {
            v[index[e]] = c.clone();
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    /// `g` must be homogeneous of degree `d` in `n` variables (or zero).
    pub fn contains(&self, g: &SparsePoly) -> bool {
        debug_assert_eq!(g.nvars(), self.n);
        if g.is_zero() {
            return true;
        }
        debug_assert_eq!(g.homogeneous_degree(), Some(self.d));
        self.span.contains_rational(&Self::coords(&self.index, g))
    }
}

/// Whether the homogeneous `g` lies in `(p_1, …, p_n)·Q[x_1, …, x_n]`.
///
/// `g` may use fewer than `n` variables; it is embedded into the first slots.
pub fn ideal_membership(g: &SparsePoly, n: usize) -> Result<bool> {
    if g.nvars() > n {
        return Err(Error::InvalidArgument(format!(
            "polynomial has {} variables, ambient ring only {n}",
            g.nvars()
        )));
    }
    if g.is_zero() {
        return Ok(true);
    }
    let d = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    Ok(IdealPiece::new(n, d).contains(&g.embed(n)))
}

/// Coordinates of diagonal polynomial matrices in a shared monomial basis.
struct DiagCoords {
    index: BTreeMap<(usize, Vec<u32>), usize>,
}

impl DiagCoords {
    fn new<'a>(mats: impl IntoIterator<Item = &'a DiagPolyMatrix>) -> Self {
        let mut index = BTreeMap::new();
        for m in mats {
            for (i, e) in m.entries.iter().enumerate() {
                for (exp, _) in e.terms() {
                    let len = index.len();
                    index.entry((i, exp.clone())).or_insert(len);
                }
            }
        }
        DiagCoords { index }
    }

    fn vector(&self, m: &DiagPolyMatrix) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.index.len()];
        for (i, e) in m.entries.iter().enumerate() {
            for (exp, c) in e.terms() {
                v[self.index[&(i, exp.clone())]] = c.clone();
            }
        }
        v
    }
}

/// Computable consequences of the free-basis statement for `R_{ω_k}(𝔥)`.
///
/// (a) the box-indexed diagonal Schur matrices are linearly independent;
/// (b) `s_λ(x_1..x_k)` lies in `(p_1..p_n)` exactly when `λ` leaves the box,
/// for `|λ| ≤ degree_bound`; (c) each `restricted_mtype(k, n, s)`, `2 ≤ s ≤ k+1`,
/// is a combination of the diagonal Schur matrices with symmetric coefficients.
pub fn verify_free_basis(k: usize, n: usize, degree_bound: u32) -> Result<Report> {
    check_box_params(k, n)?;
    let m = n - k;
    let params = format!("k={k}, n={n}");
    let mut report = Report::new(format!("free basis checks for k={k}, n={n}, bound={degree_bound}"));

    let boxed = box_partitions(k, m);
    let mats: Vec<DiagPolyMatrix> = boxed
        .iter()
        .map(|lam| diag_schur_matrix(k, n, lam, ZeroSlot::Zero))
        .collect::<Result<_>>()?;
    let coords = DiagCoords::new(&mats);
    let mut span = IntSpan::new(coords.index.len());
    let rank = mats
        .iter()
        .filter(|mat| span.insert_rational(&coords.vector(mat)))
        .count();
    let expected = binomial(n as u64, k as u64);
    report.push(
        "diagonal Schur matrices independent",
        params.clone(),
        rank == boxed.len() && expected == rank.into(),
        Some(format!("rank {rank}, box size {}, binom {expected}", boxed.len())),
    );

    let mut pieces: BTreeMap<u32, IdealPiece> = BTreeMap::new();
    let mut bad = Vec::new();
    let mut tested = 0;
    for lam in partitions_up_to(degree_bound) {
        let g = schur_or_zero(&lam, k).embed(n);
        let piece = pieces
            .entry(lam.size())
            .or_insert_with(|| IdealPiece::new(n, lam.size()));
        let member = piece.contains(&g);
        tested += 1;
        if member == lam.in_box(k, m) {
            bad.push(format!("{lam}: member={member}"));
        }
    }
    report.push(
        "ideal membership iff outside box",
        format!("{params}, |λ| <= {degree_bound}"),
        bad.is_empty(),
        Some(if bad.is_empty() {
            format!("{tested} partitions")
        } else {
            bad.join("; ")
        }),
    );

    let nv = ZeroSlot::Zero.nvars(n);
    let zero_chart = all_images(n, ZeroSlot::Zero);
    for s in 2..=(k as u32 + 1) {
        let target = restricted_mtype(k, n, s, ZeroSlot::Zero)?;
        let deg = s - 1;
        let mut candidates = Vec::new();
        for (lam, mat) in boxed.iter().zip(&mats) {
            if lam.size() > deg {
                continue;
            }
            for mu in partitions_of(deg - lam.size()) {
                let coeff = power_sum_product(&mu, n).substitute(&zero_chart, nv);
                candidates.push(mat.scale_by(&coeff));
            }
        }
        let coords = DiagCoords::new(candidates.iter().chain(std::iter::once(&target)));
        let mut span = IntSpan::new(coords.index.len());
        for c in &candidates {
            span.insert_rational(&coords.vector(c));
        }
        let inside = span.contains_rational(&coords.vector(&target));
        report.push(
            "restricted M-type in symmetric span",
            format!("{params}, s={s}"),
            inside,
            Some(format!("{} candidate products", candidates.len())),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::power_sum;

    fn x(i: usize, n: usize) -> SparsePoly {
        SparsePoly::var(i, n)
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ideal_membership_examples() {
        assert!(!ideal_membership(&x(0, 1), 2).unwrap());
        assert!(ideal_membership(&x(0, 1).pow(2), 2).unwrap());
        assert!(ideal_membership(&power_sum(3, 3), 3).unwrap());
        assert!(!ideal_membership(&SparsePoly::one(2), 2).unwrap());
        let mixed = &x(0, 2) + &SparsePoly::one(2);
        assert_eq!(ideal_membership(&mixed, 2), Err(Error::NotHomogeneous));
    }

    #[test]
    fn diag_schur_examples() {
        let m = diag_schur_matrix(1, 2, &part(&[1]), ZeroSlot::Zero).unwrap();
        assert_eq!(m.entries(), &[x(0, 1), SparsePoly::zero(1)]);

        let m = diag_schur_matrix(1, 3, &Partition::empty(), ZeroSlot::Zero).unwrap();
        assert!(m.entries().iter().all(|e| *e == SparsePoly::one(2)));

        let m = diag_schur_matrix(2, 3, &part(&[1]), ZeroSlot::Zero).unwrap();
        assert_eq!(m.entries(), &[&x(0, 2) + &x(1, 2), x(0, 2), x(1, 2)]);
    }

    #[test]
    fn restricted_mtype_examples() {
        let m = restricted_mtype(1, 2, 2, ZeroSlot::Zero).unwrap();
        assert_eq!(m.entries(), &[x(0, 1), -&x(0, 1)]);

        let m = restricted_mtype(1, 3, 3, ZeroSlot::Zero).unwrap();
        let p2 = power_sum(2, 2);
        let three = rat(3);
        assert_eq!(
            m.entries(),
            &[
                &x(0, 2).pow(2).scale(&three) - &p2,
                &x(1, 2).pow(2).scale(&three) - &p2,
                -&p2
            ]
        );
    }

    #[test]
    fn restricted_mtype_s2_is_traceless() {
        for (k, n) in [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6)] {
            for slot in [ZeroSlot::Zero, ZeroSlot::Free] {
                let m = restricted_mtype(k, n, 2, slot).unwrap();
                assert!(m.trace().is_zero(), "k={k} n={n} {slot:?}");
            }
        }
    }

    #[test]
    fn entries_are_homogeneous_of_degree_size() {
        for lam in partitions_up_to(4).into_iter().filter(|l| l.len() <= 2) {
            let m = diag_schur_matrix(2, 5, &lam, ZeroSlot::Zero).unwrap();
            for e in m.entries() {
                assert!(e.is_zero() || e.homogeneous_degree() == Some(lam.size()));
            }
        }
    }

    #[test]
    fn equivariant_under_transpositions_fixing_the_zero_slot() {
        let (k, n) = (2, 5);
        for lam in box_partitions(k, n - k) {
            for slot in [ZeroSlot::Zero, ZeroSlot::Free] {
                let m = diag_schur_matrix(k, n, &lam, slot).unwrap();
                let nv = slot.nvars(n);
                let last = if slot == ZeroSlot::Zero { n - 1 } else { n };
                for i in 1..last {
                    let mut perm: Vec<usize> = (0..nv).collect();
                    perm.swap(i - 1, i);
                    let sigma = |t: usize| if t == i { i + 1 } else if t == i + 1 { i } else { t };
                    for (set, e) in m.subsets().iter().zip(m.entries()) {
                        let mut moved: Vec<usize> = set.elems().iter().map(|&t| sigma(t)).collect();
                        moved.sort_unstable();
                        let image = IndexSet::new(n, moved).unwrap();
                        assert_eq!(&e.permute_vars(&perm), m.entry(&image).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn free_basis_small_cases() {
        for (k, n, bound) in [(1, 2, 4), (1, 3, 4), (2, 4, 5)] {
            let r = verify_free_basis(k, n, bound).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn free_basis_rejects_bad_parameters() {
        assert!(verify_free_basis(3, 4, 2).is_err());
        assert!(verify_free_basis(0, 4, 2).is_err());
    }
}
