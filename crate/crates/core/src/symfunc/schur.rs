use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::One;

use super::{Partition, SparsePoly};
use crate::error::{Error, Result};
use crate::{rat, Rational};

/// Every exponent vector of total degree `d` in `n` variables, lexicographically descending.
pub fn monomials_of_degree(d: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let n = cur.len();
        if n == 0 {
            if rem == 0 {
                out.push(Vec::new());
            }
            return;
        }
        if i == n - 1 {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for x in (0..=rem).rev() {
            cur[i] = x;
            rec(i + 1, rem - x, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// `p_t = Σ x_i^t`; `p_0` is the constant `n`.
pub fn power_sum(t: u32, n: usize) -> SparsePoly {
    if t == 0 {
        return SparsePoly::constant(n, rat(n as i64));
    }
    let mut p = SparsePoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = t;
        p.add_term(e, Rational::one());
    }
    p
}

/// `p_μ = Π p_{μ_i}`.
pub fn power_sum_product(mu: &Partition, n: usize) -> SparsePoly {
    mu.parts()
        .iter()
        .fold(SparsePoly::one(n), |acc, &t| &acc * &power_sum(t, n))
}

/// Complete homogeneous symmetric polynomial; `h_0 = 1`, `h_r = 0` for `r < 0`.
pub fn complete_h(r: i64, n: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero(n);
    }
    let mut p = SparsePoly::zero(n);
    for e in monomials_of_degree(r as u32, n) {
        p.add_term(e, Rational::one());
    }
    p
}

/// Elementary symmetric polynomial `e_r`; zero outside `0..=n`.
pub fn elementary_e(r: i64, n: usize) -> SparsePoly {
    if r < 0 || r as usize > n {
        return SparsePoly::zero(n);
    }
    let mut p = SparsePoly::zero(n);
    for subset in (0..n).combinations(r as usize) {
        let mut e = vec![0; n];
        for i in subset {
            e[i] = 1;
        }
        p.add_term(e, Rational::one());
    }
    p
}

pub(crate) fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_length(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            partition: lambda.to_string(),
            len: lambda.len(),
            vars: n,
        });
    }
    Ok(())
}

/// Schur polynomial as the Jacobi-Trudi determinant `det(h_{λ_i - i + j})`,
/// or `det(e_{λ'_i - i + j})` when the conjugate has fewer rows.
pub fn schur_jacobi_trudi(lambda: &Partition, n: usize) -> Result<SparsePoly> {
    check_length(lambda, n)?;
    let conj = lambda.conjugate();
    let (shape, entry): (&Partition, fn(i64, usize) -> SparsePoly) = if conj.len() < lambda.len() {
        (&conj, elementary_e)
    } else {
        (lambda, complete_h)
    };
    let l = shape.len();
    if l == 0 {
        return Ok(SparsePoly::one(n));
    }
    let max_r = shape.part(0) as i64 + l as i64;
    let table: Vec<SparsePoly> = (0..=max_r).map(|r| entry(r, n)).collect();
    let cell = |i: usize, j: usize| -> Option<&SparsePoly> {
        let r = shape.part(i) as i64 - i as i64 + j as i64;
        (r >= 0).then(|| &table[r as usize]).filter(|p| !p.is_zero())
    };
    Ok(determinant(l, n, cell))
}

/// Determinant by row-by-row expansion over sets of used columns.
fn determinant<'a>(l: usize, n: usize, cell: impl Fn(usize, usize) -> Option<&'a SparsePoly>) -> SparsePoly {
    let mut layer: BTreeMap<u32, SparsePoly> = BTreeMap::new();
    layer.insert(0, SparsePoly::one(n));
    for row in 0..l {
        let mut next: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (mask, acc) in &layer {
            for col in 0..l {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let Some(p) = cell(row, col) else { continue };
                let above = (mask >> (col + 1)).count_ones();
                let mut term = acc * p;
                if above % 2 == 1 {
                    term = term.scale(&rat(-1));
                }
                let slot = next.entry(mask | (1 << col)).or_insert_with(|| SparsePoly::zero(n));
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << l) - 1)).unwrap_or_else(|| SparsePoly::zero(n))
}

/// Antisymmetrisation `Σ_σ sgn(σ) x^{σ(α)}` of the exponent vector `alpha`.
pub fn alternant(alpha: &[u32]) -> SparsePoly {
    let n = alpha.len();
    let mut out = SparsePoly::zero(n);
    for perm in (0..n).permutations(n) {
        let mut e = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            e[p] = alpha[i];
        }
        out.add_term(e, rat(permutation_sign(&perm)));
    }
    out
}

/// Schur polynomial as the bialternant quotient `A_{λ+δ} / A_δ`.
pub fn schur_alternant(lambda: &Partition, n: usize) -> Result<SparsePoly> {
    check_length(lambda, n)?;
    let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let shifted: Vec<u32> = lambda
        .padded(n)
        .iter()
        .zip(&delta)
        .map(|(a, b)| a + b)
        .collect();
    let num = alternant(&shifted);
    let den = alternant(&delta);
    num.div_exact(&den)
}

/// Schur polynomial in `n` variables, or zero when `λ` has more than `n` parts.
pub fn schur_or_zero(lambda: &Partition, n: usize) -> SparsePoly {
    schur_jacobi_trudi(lambda, n).unwrap_or_else(|_| SparsePoly::zero(n))
}
