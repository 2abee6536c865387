//! Compositions, partitions, dominance orders, the rank/spectral functions,
//! insertion and cyclic-shift maps, standard Young tableaux, and the
//! closed-form index constructions attached to each singular parameter pair.
//!
//! Conventions: compositions carry an explicit ambient length N (trailing
//! zeros are kept and significant), indices into compositions are 1-based to
//! match the operator layer, and `length()` is the largest index with a
//! nonzero entry.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::integer::Integer;
use thiserror::Error;

use crate::scalar::{Rational, RationalFunctionK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombError {
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("compositions have different weights")]
    WeightMismatch,
    #[error("the zero composition has no cyclic companion")]
    ZeroComposition,
    #[error("prescribed index entry {0} is not a nonnegative integer")]
    NonIntegralIndex(Rational),
    #[error("invalid parameter pair: {0}")]
    InvalidPair(String),
}

/// Exponent vector in ℕ₀^N. The vector length is the ambient variable count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn zero(nvars: usize) -> Self {
        Composition {
            parts: vec![0; nvars],
        }
    }

    /// Standard basis vector ε(i), 1-based.
    pub fn unit(i: usize, nvars: usize) -> Self {
        assert!(1 <= i && i <= nvars, "index out of range");
        let mut parts = vec![0; nvars];
        parts[i - 1] = 1;
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Ambient length N.
    pub fn ambient(&self) -> usize {
        self.parts.len()
    }

    /// ℓ(α): the largest index with a nonzero entry (0 for the zero vector).
    pub fn length(&self) -> usize {
        self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1)
    }

    /// |α|.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// 1-based entry access; entries beyond the ambient length read as 0.
    pub fn get(&self, i: usize) -> u32 {
        assert!(i >= 1, "index out of range");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Same entries with ambient length n (n ≥ ℓ(α)).
    pub fn padded(&self, n: usize) -> Self {
        assert!(n >= self.length(), "cannot truncate nonzero entries");
        let mut parts = self.parts.clone();
        parts.truncate(n);
        parts.resize(n, 0);
        Composition { parts }
    }

    /// Ambient length reduced to ℓ(α).
    pub fn trimmed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.truncate(self.length());
        Composition { parts }
    }

    /// α + ε(i), 1-based.
    pub fn bump(&self, i: usize) -> Self {
        assert!(1 <= i && i <= self.ambient(), "index out of range");
        let mut parts = self.parts.clone();
        parts[i - 1] += 1;
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", items.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses "2,0,3,3,3" with exponent shorthand: "4^2,3^2,0^2" expands
/// positionally to "4,4,3,3,0,0".
impl FromStr for Composition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err("empty entry".into());
            }
            let (base, reps) = match tok.split_once('^') {
                Some((b, e)) => {
                    let reps: usize = e
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad exponent in {tok:?}"))?;
                    (b.trim(), reps)
                }
                None => (tok, 1),
            };
            let v: u32 = base.parse().map_err(|_| format!("bad entry {base:?}"))?;
            parts.extend(std::iter::repeat(v).take(reps));
        }
        Ok(Composition { parts })
    }
}

/// Total order: weight first, then descending-lex on the sorted
/// rearrangement, then descending-lex on the composition itself. Restricted
/// to a fixed weight this is the linear extension of ⊳ used everywhere
/// (`linext_cmp`); `Greater` means earlier in the triangular recursion.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_weight = self.weight().cmp(&other.weight());
        if by_weight != Ordering::Equal {
            return by_weight;
        }
        let a = to_partition(self);
        let b = to_partition(other);
        let n = a.parts().len().max(b.parts().len());
        for i in 1..=n {
            let c = a.get(i).cmp(&b.get(i));
            if c != Ordering::Equal {
                return c;
            }
        }
        let n = self.ambient().max(other.ambient());
        for i in 1..=n {
            let c = self.get(i).cmp(&other.get(i));
            if c != Ordering::Equal {
                return c;
            }
        }
        // Equal up to trailing zeros; shorter ambient compares less.
        self.ambient().cmp(&other.ambient())
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weakly decreasing composition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-based part access; parts beyond the stored length read as 0.
    pub fn get(&self, i: usize) -> u32 {
        assert!(i >= 1, "index out of range");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// ℓ(τ): number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn as_composition(&self, nvars: usize) -> Composition {
        Composition::new(self.parts.clone()).padded(nvars)
    }

    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.length()].to_vec(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", items.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: Composition = s.parse()?;
        if !c.parts().windows(2).all(|w| w[0] >= w[1]) {
            return Err("parts must be weakly decreasing".into());
        }
        Ok(Partition {
            parts: c.parts().to_vec(),
        })
    }
}

/// α⁺: the weakly decreasing rearrangement.
pub fn to_partition(alpha: &Composition) -> Partition {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

/// r(α, i) = #{j : α_j > α_i} + #{j ≤ i : α_j = α_i}; 1-based, and a
/// partition is recognized by r(α, i) = i for all i.
pub fn rank(alpha: &Composition, i: usize) -> usize {
    assert!(1 <= i && i <= alpha.ambient(), "index out of range");
    let ai = alpha.parts()[i - 1];
    let higher = alpha.parts().iter().filter(|&&a| a > ai).count();
    let ties = alpha.parts()[..i].iter().filter(|&&a| a == ai).count();
    higher + ties
}

/// All ranks at once; the result is a permutation of 1..=N.
pub fn ranks(alpha: &Composition) -> Vec<usize> {
    (1..=alpha.ambient()).map(|i| rank(alpha, i)).collect()
}

/// ξ_i(α; κ) = (N − r(α, i))κ + α_i + 1 as an element of ℚ(κ).
pub fn xi(alpha: &Composition, i: usize, nvars: usize) -> RationalFunctionK {
    assert!(nvars >= alpha.length(), "ambient count below ℓ(α)");
    let a = alpha.padded(nvars);
    assert!(1 <= i && i <= nvars, "index out of range");
    let r = rank(&a, i);
    RationalFunctionK::affine(nvars as i64 - r as i64, a.get(i) as i64 + 1)
}

/// ξ_i(α; κ₀) evaluated at a concrete parameter value.
pub fn xi_at(alpha: &Composition, i: usize, nvars: usize, k0: &Rational) -> Rational {
    assert!(nvars >= alpha.length(), "ambient count below ℓ(α)");
    let a = alpha.padded(nvars);
    assert!(1 <= i && i <= nvars, "index out of range");
    let r = rank(&a, i);
    Rational::from_int(nvars as i64 - r as i64) * k0 + Rational::from_int(a.get(i) as i64 + 1)
}

/// The spectral vector (ξ_1(α;κ), …, ξ_N(α;κ)).
pub type SpectralVector = Vec<RationalFunctionK>;

pub fn spectral_vector(alpha: &Composition, nvars: usize) -> SpectralVector {
    (1..=nvars).map(|i| xi(alpha, i, nvars)).collect()
}

/// Strict partial-sum dominance α ≻ β on equal-weight vectors.
fn partial_sum_dominates(alpha: &Composition, beta: &Composition) -> bool {
    if alpha.parts() == beta.parts() {
        return false;
    }
    let n = alpha.ambient().max(beta.ambient());
    let mut sa = 0u64;
    let mut sb = 0u64;
    for i in 1..=n {
        sa += alpha.get(i) as u64;
        sb += beta.get(i) as u64;
        if sa < sb {
            return false;
        }
    }
    true
}

/// The strict order α ⊳ β: equal weights and either α⁺ ≻ β⁺, or α⁺ = β⁺
/// with α ≻ β.
pub fn dominates(alpha: &Composition, beta: &Composition) -> bool {
    if alpha.weight() != beta.weight() {
        return false;
    }
    let ap = to_partition(alpha);
    let bp = to_partition(beta);
    let apc = Composition::new(ap.trimmed().parts().to_vec());
    let bpc = Composition::new(bp.trimmed().parts().to_vec());
    if apc == bpc {
        partial_sum_dominates(alpha, beta)
    } else {
        partial_sum_dominates(&apc, &bpc)
    }
}

/// Reflexive closure α ⊵ β.
pub fn dominates_eq(alpha: &Composition, beta: &Composition) -> bool {
    (alpha.weight() == beta.weight()
        && alpha.padded(alpha.ambient().max(beta.ambient()))
            == beta.padded(alpha.ambient().max(beta.ambient())))
        || dominates(alpha, beta)
}

/// Total order refining ⊳ on equal-weight compositions: descending lex on
/// α⁺, then descending lex on α.
pub fn linext_cmp(alpha: &Composition, beta: &Composition) -> Result<Ordering, CombError> {
    if alpha.weight() != beta.weight() {
        return Err(CombError::WeightMismatch);
    }
    Ok(alpha.cmp(beta))
}

/// ι(s;λ)α: the first s entries of α, then the parts of λ, then the rest.
pub fn insert(s: usize, lambda: &Partition, alpha: &Composition) -> Composition {
    assert!(1 <= s && s <= alpha.ambient(), "index out of range");
    let k = lambda.length();
    let mut parts = Vec::with_capacity(alpha.ambient() + k);
    parts.extend_from_slice(&alpha.parts()[..s]);
    parts.extend_from_slice(lambda.trimmed().parts());
    parts.extend_from_slice(&alpha.parts()[s..]);
    Composition::new(parts)
}

/// α̃ = θ_k(α − ε(k)) with k = ℓ(α): drop one from the last nonzero entry
/// and rotate it to the front. Returns (α̃, k).
pub fn drop_tilde(alpha: &Composition) -> Result<(Composition, usize), CombError> {
    let k = alpha.length();
    if k == 0 {
        return Err(CombError::ZeroComposition);
    }
    let mut parts = Vec::with_capacity(alpha.ambient());
    parts.push(alpha.get(k) - 1);
    parts.extend_from_slice(&alpha.parts()[..k - 1]);
    parts.extend_from_slice(&alpha.parts()[k..]);
    Ok((Composition::new(parts), k))
}

/// θ_k = (1,2)(2,3)…(k−1,k), acting by θ_kα = (α_k, α_1, …, α_{k−1}, α_{k+1}, …);
/// `inverse` applies θ_k⁻¹. k = 1 is the identity.
pub fn apply_cycle(k: usize, alpha: &Composition, inverse: bool) -> Composition {
    assert!(1 <= k && k <= alpha.ambient(), "index out of range");
    let mut parts = alpha.parts().to_vec();
    if inverse {
        parts[..k].rotate_left(1);
    } else {
        parts[..k].rotate_right(1);
    }
    Composition::new(parts)
}

/// Standard Young tableau of a given shape: entries 1..=N increase along
/// rows and columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// (row, column) of the cell holding `value`, both 1-based.
    pub fn position_of(&self, value: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == value) {
                return (r + 1, c + 1);
            }
        }
        panic!("value {value} not present in tableau");
    }

    /// Content vector (η_1(T), …, η_N(T)) with η_i = cm(i,T) − rw(i,T).
    pub fn contents(&self) -> Vec<i64> {
        let n: usize = self.shape.weight() as usize;
        (1..=n)
            .map(|v| {
                let (r, c) = self.position_of(v);
                c as i64 - r as i64
            })
            .collect()
    }
}

/// T₀: the row-by-row filling (first row 1..τ₁, second row τ₁+1.., …).
pub fn top_tableau(tau: &Partition) -> StandardTableau {
    let tau = tau.trimmed();
    let mut rows = Vec::with_capacity(tau.parts().len());
    let mut next = 1usize;
    for &len in tau.parts() {
        rows.push((next..next + len as usize).collect());
        next += len as usize;
    }
    StandardTableau { shape: tau, rows }
}

/// All standard Young tableaux of shape τ, by backtracking fill in
/// row-major candidate order.
pub fn syt_enumerate(tau: &Partition) -> Vec<StandardTableau> {
    let tau = tau.trimmed();
    let n = tau.weight() as usize;
    let nrows = tau.parts().len();
    let mut fill = vec![0usize; nrows];
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); nrows];
    let mut out = Vec::new();

    fn go(
        v: usize,
        n: usize,
        tau: &Partition,
        fill: &mut [usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if v > n {
            out.push(StandardTableau {
                shape: tau.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..fill.len() {
            let can_place = fill[r] < tau.get(r + 1) as usize && (r == 0 || fill[r - 1] > fill[r]);
            if can_place {
                fill[r] += 1;
                rows[r].push(v);
                go(v + 1, n, tau, fill, rows, out);
                rows[r].pop();
                fill[r] -= 1;
            }
        }
    }

    go(1, n, &tau, &mut fill, &mut rows, &mut out);
    out
}

/// Eq. for λ from an isotype: λ_{N+1−i} = −κ₀ Σ_{j<s}(τ_j + 1) where i sits
/// in row s of T₀. Fails with `NonIntegralIndex` when a prescribed entry is
/// not a nonnegative integer (the divisibility obstruction on τ).
pub fn lambda_from_isotype(tau: &Partition, k0: &Rational) -> Result<Composition, CombError> {
    assert!(k0.is_negative(), "parameter value must be negative");
    let tau = tau.trimmed();
    let n = tau.weight() as usize;
    let mut rev = Vec::with_capacity(n);
    let mut row_sum = Rational::zero(); // Σ_{j<s}(τ_j+1)
    for s in 1..=tau.parts().len() {
        let value = -(k0 * &row_sum);
        let entry = match value.to_integer() {
            Some(v) if !value.is_negative() => v,
            _ => return Err(CombError::NonIntegralIndex(value)),
        };
        let entry = u32::try_from(entry).map_err(|_| CombError::NonIntegralIndex(value.clone()))?;
        rev.extend(std::iter::repeat(entry).take(tau.get(s) as usize));
        row_sum = row_sum + Rational::from_int(tau.get(s) as i64 + 1);
    }
    rev.reverse();
    Ok(Composition::new(rev))
}

fn validate_pair(nvars: usize, m0: u32, n0: u32) -> Result<(u32, u32, u32), CombError> {
    if n0 < 2 || (n0 as usize) > nvars {
        return Err(CombError::InvalidPair(format!(
            "need 2 ≤ n0 ≤ N, got n0 = {n0}, N = {nvars}"
        )));
    }
    if m0 == 0 {
        return Err(CombError::InvalidPair("need m0 ≥ 1".into()));
    }
    if m0 % n0 == 0 {
        return Err(CombError::InvalidPair(format!(
            "m0/n0 = {}/{} is an integer",
            m0, n0
        )));
    }
    let d = m0.gcd(&n0);
    Ok((d, m0 / d, n0 / d))
}

/// Isotype shape for the pair (m0, n0) in N variables:
/// τ = (n0−1, (n−1)^{l−2}, τ_l) with l = ⌈(N−n0+1)/(n−1)⌉ + 1.
/// Returns (τ, l); l = 2 degenerates to τ = (n0−1, N−n0+1).
pub fn shape_from_pair(nvars: usize, m0: u32, n0: u32) -> Result<(Partition, usize), CombError> {
    let (_, _, n) = validate_pair(nvars, m0, n0)?;
    let rest = nvars as u32 - n0 + 1; // N − n0 + 1 ≥ 1
    let l = (rest.div_ceil(n - 1) + 1) as usize;
    let tau_l = rest - (l as u32 - 2) * (n - 1);
    debug_assert!(1 <= tau_l && tau_l <= n - 1);
    let mut parts = Vec::with_capacity(l);
    parts.push(n0 - 1);
    parts.extend(std::iter::repeat(n - 1).take(l - 2));
    parts.push(tau_l);
    let tau = Partition::new(parts);
    debug_assert_eq!(tau.weight(), nvars as u64);
    Ok((tau, l))
}

/// Index of the singular polynomial for the pair (m0, n0):
/// (m0^{τ₂}, 0^{n0−1}) for l = 2, and
/// ((m0+(l−2)m)^{τ_l}, (m0+(l−3)m)^{n−1}, …, m0^{n−1}, 0^{n0−1}) for l ≥ 3.
pub fn index_from_pair(nvars: usize, m0: u32, n0: u32) -> Result<Composition, CombError> {
    let (_, m, n) = validate_pair(nvars, m0, n0)?;
    let (tau, l) = shape_from_pair(nvars, m0, n0)?;
    let mut parts = Vec::with_capacity(nvars);
    if l == 2 {
        parts.extend(std::iter::repeat(m0).take(tau.get(2) as usize));
    } else {
        parts.extend(std::iter::repeat(m0 + (l as u32 - 2) * m).take(tau.get(l) as usize));
        for j in (0..l as u32 - 2).rev() {
            parts.extend(std::iter::repeat(m0 + j * m).take(n as usize - 1));
        }
    }
    parts.extend(std::iter::repeat(0).take(n0 as usize - 1));
    debug_assert_eq!(parts.len(), nvars);
    Ok(Composition::new(parts))
}

// ---- Enumeration helpers ----

/// All compositions of `weight` into exactly `nvars` nonnegative parts.
pub fn compositions_of(weight: u32, nvars: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn go(pos: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(Composition::new(cur.clone()));
            return;
        }
        for v in (0..=rem).rev() {
            cur[pos] = v;
            go(pos + 1, rem - v, cur, out);
        }
        cur[pos] = 0;
    }
    if nvars == 0 {
        if weight == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    go(0, weight, &mut cur, &mut out);
    out
}

/// Partitions of `weight` with at most `max_len` parts, each at most
/// `max_part`, in descending lex order.
pub fn partitions_of(weight: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn go(rem: u32, max_next: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        if slots == 0 || max_next == 0 {
            return;
        }
        let hi = max_next.min(rem);
        for v in (1..=hi).rev() {
            cur.push(v);
            go(rem - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    go(weight, max_part, max_len, &mut cur, &mut out);
    out
}

/// Distinct rearrangements of the multiset of entries of `mu`, padded with
/// zeros to ambient length `nvars`.
pub fn multiset_permutations(mu: &Partition, nvars: usize) -> Vec<Composition> {
    assert!(mu.length() <= nvars, "ambient count below ℓ(μ)");
    let mut entries = mu.as_composition(nvars).parts().to_vec();
    entries.sort_unstable();
    let mut out = Vec::new();
    // lexicographic next-permutation over the multiset
    loop {
        out.push(Composition::new(entries.clone()));
        let Some(i) = (0..entries.len() - 1)
            .rev()
            .find(|&i| entries[i] < entries[i + 1])
        else {
            break;
        };
        let j = (i + 1..entries.len())
            .rev()
            .find(|&j| entries[j] > entries[i])
            .unwrap();
        entries.swap(i, j);
        entries[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn to_partition_examples() {
        assert_eq!(to_partition(&c(&[2, 0, 3])).parts(), &[3, 2, 0]);
        assert_eq!(to_partition(&c(&[1, 1, 1])).parts(), &[1, 1, 1]);
        assert_eq!(to_partition(&c(&[0, 0])).parts(), &[0, 0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&c(&[2, 1, 2]), 1), 1);
        assert_eq!(rank(&c(&[2, 1, 2]), 3), 2);
        // any partition has r(λ, i) = i
        for lam in [c(&[3, 2, 2, 0]), c(&[5, 5, 1, 1]), c(&[0, 0, 0])] {
            for i in 1..=lam.ambient() {
                assert_eq!(rank(&lam, i), i);
            }
        }
    }

    #[test]
    fn ranks_form_permutation_and_ignore_trailing_zeros() {
        for alpha in compositions_of(4, 4) {
            let r = ranks(&alpha);
            let set: BTreeSet<usize> = r.iter().copied().collect();
            assert_eq!(set, (1..=4).collect());
            let padded = alpha.padded(6);
            for i in 1..=4 {
                assert_eq!(rank(&alpha, i), rank(&padded, i));
            }
        }
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&c(&[1, 0, 0]), 1, 3), RationalFunctionK::affine(2, 2));
        for i in 1..=4 {
            assert_eq!(
                xi(&Composition::zero(4), i, 4),
                RationalFunctionK::affine(4 - i as i64, 1)
            );
        }
        assert_eq!(xi(&c(&[2, 1, 2]), 3, 3), RationalFunctionK::affine(1, 3));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&c(&[2, 0]), &c(&[1, 1])));
        assert!(!dominates(&c(&[1, 1, 0]), &c(&[1, 1, 0])));
        assert!(dominates(&c(&[1, 1, 0]), &c(&[1, 0, 1])));
        assert!(!dominates(&c(&[1, 0, 1]), &c(&[1, 1, 0])));
        // unequal weight is incomparable
        assert!(!dominates(&c(&[2, 0]), &c(&[1, 0])));
    }

    #[test]
    fn dominance_is_strict_partial_order() {
        let all = compositions_of(4, 3);
        for a in &all {
            assert!(!dominates(a, a));
            for b in &all {
                if dominates(a, b) {
                    assert!(!dominates(b, a));
                    for d in &all {
                        if dominates(b, d) {
                            assert!(dominates(a, d), "transitivity {a:?} {b:?} {d:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linext_refines_dominance() {
        assert_eq!(
            linext_cmp(&c(&[2, 0]), &c(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            linext_cmp(&c(&[1, 0, 1]), &c(&[1, 1, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            linext_cmp(&c(&[1, 1]), &c(&[1, 1])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            linext_cmp(&c(&[2, 0]), &c(&[1, 0])),
            Err(CombError::WeightMismatch)
        );
        let all = compositions_of(5, 3);
        for a in &all {
            for b in &all {
                if dominates(a, b) {
                    assert_eq!(linext_cmp(a, b).unwrap(), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn insert_examples() {
        assert_eq!(insert(1, &p(&[2]), &c(&[1, 0])), c(&[1, 2, 0]));
        assert_eq!(insert(2, &p(&[]), &c(&[1, 0])), c(&[1, 0]));
        assert_eq!(insert(1, &p(&[3, 3]), &c(&[1, 0])), c(&[1, 3, 3, 0]));
    }

    #[test]
    fn insert_rank_equations() {
        // r(β,i) = r(α,i)+k for i ≤ s; r(β,i) = i−s for s < i ≤ s+k;
        // r(β,i) = r(α,i−k)+k for s+k < i.
        let lam = p(&[3, 2, 2]);
        let k = lam.length();
        let n_min = lam.get(k);
        for alpha in compositions_of(3, 3) {
            for s in 1..=3usize {
                let ok = (1..=3).all(|i| {
                    if i <= s {
                        alpha.get(i) < n_min
                    } else {
                        alpha.get(i) <= n_min
                    }
                });
                if !ok {
                    continue;
                }
                let beta = insert(s, &lam, &alpha);
                for i in 1..=beta.ambient() {
                    let expect = if i <= s {
                        rank(&alpha, i) + k
                    } else if i <= s + k {
                        i - s
                    } else {
                        rank(&alpha, i - k) + k
                    };
                    assert_eq!(rank(&beta, i), expect, "α={alpha:?} s={s} i={i}");
                }
            }
        }
    }

    #[test]
    fn drop_tilde_examples() {
        assert_eq!(drop_tilde(&c(&[6, 6])).unwrap(), (c(&[5, 6]), 2));
        assert_eq!(drop_tilde(&c(&[5, 6])).unwrap(), (c(&[5, 5]), 2));
        assert_eq!(drop_tilde(&c(&[0, 0, 4])).unwrap(), (c(&[3, 0, 0]), 3));
        assert_eq!(
            drop_tilde(&Composition::zero(3)),
            Err(CombError::ZeroComposition)
        );
    }

    #[test]
    fn apply_cycle_examples() {
        assert_eq!(apply_cycle(2, &c(&[5, 6, 0]), false), c(&[6, 5, 0]));
        assert_eq!(apply_cycle(3, &c(&[1, 2, 3]), false), c(&[3, 1, 2]));
        let alpha = c(&[3, 1, 2]);
        assert_eq!(apply_cycle(3, &apply_cycle(3, &alpha, false), true), alpha);
    }

    #[test]
    fn syt_enumeration_examples() {
        assert_eq!(syt_enumerate(&p(&[2, 1])).len(), 2);
        assert_eq!(syt_enumerate(&p(&[4])).len(), 1);
        assert_eq!(syt_enumerate(&p(&[1, 1, 1])).len(), 1);
    }

    /// Independent oracle: the hook-length count N!/∏hooks for SYTs.
    fn syt_count_by_hooks(tau: &Partition) -> u64 {
        let tau = tau.trimmed();
        let n = tau.weight();
        let mut numer = 1u64;
        for v in 1..=n {
            numer *= v;
        }
        let mut hooks = 1u64;
        for r in 1..=tau.parts().len() {
            for ccol in 1..=tau.get(r) {
                let arm = tau.get(r) - ccol;
                let leg = (r + 1..=tau.parts().len())
                    .filter(|&rr| tau.get(rr) >= ccol)
                    .count() as u32;
                hooks *= (arm + leg + 1) as u64;
            }
        }
        numer / hooks
    }

    #[test]
    fn syt_count_matches_hook_formula() {
        for w in 1..=7u32 {
            for tau in partitions_of(w, w as usize, w) {
                let found = syt_enumerate(&tau).len() as u64;
                assert_eq!(found, syt_count_by_hooks(&tau), "shape {tau:?}");
            }
        }
    }

    #[test]
    fn syt_rows_and_columns_increase() {
        for tau in partitions_of(6, 6, 6) {
            for t in syt_enumerate(&tau) {
                for row in t.rows() {
                    assert!(row.windows(2).all(|w| w[0] < w[1]));
                }
                for r in 1..t.rows().len() {
                    for col in 0..t.rows()[r].len() {
                        assert!(t.rows()[r - 1][col] < t.rows()[r][col]);
                    }
                }
            }
        }
    }

    #[test]
    fn contents_examples() {
        assert_eq!(top_tableau(&p(&[2, 1])).contents(), vec![0, 1, -1]);
        assert_eq!(top_tableau(&p(&[3, 2])).contents(), vec![0, 1, 2, -1, 0]);
        assert_eq!(top_tableau(&p(&[4])).contents(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn top_tableau_examples() {
        let t = top_tableau(&p(&[2, 1]));
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(top_tableau(&p(&[1, 1])).rows(), &[vec![1], vec![2]]);
        assert_eq!(top_tableau(&p(&[3])).rows(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn contents_determine_tableau() {
        for w in 1..=6u32 {
            for tau in partitions_of(w, w as usize, w) {
                let tabs = syt_enumerate(&tau);
                let contents: BTreeSet<Vec<i64>> = tabs.iter().map(|t| t.contents()).collect();
                assert_eq!(contents.len(), tabs.len(), "shape {tau:?}");
            }
        }
    }

    /// Only T₀ satisfies η_{s+1}(T) ≤ η_s(T) + 1 for all s (shapes up to 7).
    #[test]
    fn only_top_tableau_has_slowly_increasing_contents() {
        for w in 1..=7u32 {
            for tau in partitions_of(w, w as usize, w) {
                let t0 = top_tableau(&tau);
                for t in syt_enumerate(&tau) {
                    let eta = t.contents();
                    let slow = eta.windows(2).all(|e| e[1] <= e[0] + 1);
                    assert_eq!(slow, t == t0, "shape {tau:?} tableau {t:?}");
                }
            }
        }
    }

    #[test]
    fn lambda_from_isotype_examples() {
        assert_eq!(
            lambda_from_isotype(&p(&[3, 2]), &Rational::new(-3, 2)).unwrap(),
            c(&[6, 6, 0, 0, 0])
        );
        assert_eq!(
            lambda_from_isotype(&p(&[2, 1]), &Rational::new(-1, 3)).unwrap(),
            c(&[1, 0, 0])
        );
        assert_eq!(
            lambda_from_isotype(&p(&[4]), &Rational::new(-2, 3)).unwrap(),
            Composition::zero(4)
        );
        // obstruction: n ∤ (τ₁+1)
        assert!(matches!(
            lambda_from_isotype(&p(&[3, 1]), &Rational::new(-1, 3)),
            Err(CombError::NonIntegralIndex(_))
        ));
    }

    #[test]
    fn lambda_from_isotype_succeeds_iff_divisible() {
        // success ⟺ n | (τ_j + 1) for 1 ≤ j < ℓ(τ)
        for w in 2..=6u32 {
            for tau in partitions_of(w, w as usize, w) {
                for n in 2..=4i64 {
                    let k0 = Rational::new(-1, n);
                    let ok = lambda_from_isotype(&tau, &k0).is_ok();
                    let divisible = (1..tau.length()).all(|j| (tau.get(j) as i64 + 1) % n == 0);
                    assert_eq!(ok, divisible, "τ={tau:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn shape_from_pair_examples() {
        let (tau, l) = shape_from_pair(10, 1, 3).unwrap();
        assert_eq!((tau.parts(), l), (&[2, 2, 2, 2, 2][..], 5));
        let (tau, l) = shape_from_pair(10, 2, 6).unwrap();
        assert_eq!((tau.parts(), l), (&[5, 2, 2, 1][..], 4));
        let (tau, l) = shape_from_pair(10, 3, 9).unwrap();
        assert_eq!((tau.parts(), l), (&[8, 2][..], 2));
        assert!(shape_from_pair(4, 2, 2).is_err());
        assert!(shape_from_pair(4, 1, 5).is_err());
    }

    #[test]
    fn index_from_pair_examples() {
        assert_eq!(
            index_from_pair(10, 1, 3).unwrap(),
            c(&[4, 4, 3, 3, 2, 2, 1, 1, 0, 0])
        );
        assert_eq!(
            index_from_pair(10, 2, 6).unwrap(),
            c(&[4, 3, 3, 2, 2, 0, 0, 0, 0, 0])
        );
        assert_eq!(
            index_from_pair(10, 3, 9).unwrap(),
            c(&[3, 3, 0, 0, 0, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn composition_parsing() {
        assert_eq!(
            "2,0,3,3,3".parse::<Composition>().unwrap(),
            c(&[2, 0, 3, 3, 3])
        );
        assert_eq!(
            "4^2,3^2,0^2".parse::<Composition>().unwrap(),
            c(&[4, 4, 3, 3, 0, 0])
        );
        assert!("2,,1".parse::<Composition>().is_err());
    }

    #[test]
    #[should_panic(expected = "index out of range")]
    fn rank_rejects_zero_index() {
        rank(&c(&[2, 1]), 0);
    }

    #[test]
    #[should_panic(expected = "index out of range")]
    fn insert_rejects_out_of_range_slot() {
        insert(3, &p(&[1]), &c(&[1, 0]));
    }

    #[test]
    #[should_panic(expected = "index out of range")]
    fn apply_cycle_rejects_large_k() {
        apply_cycle(4, &c(&[1, 0, 0]), false);
    }

    #[test]
    fn multiset_permutations_are_distinct_and_complete() {
        let perms = multiset_permutations(&p(&[1, 0, 0]), 3);
        assert_eq!(perms.len(), 3);
        let perms = multiset_permutations(&p(&[2, 1]), 3);
        assert_eq!(perms.len(), 6);
        let perms = multiset_permutations(&p(&[3, 2, 0, 0, 0]), 5);
        assert_eq!(perms.len(), 20);
        let set: BTreeSet<_> = perms.iter().map(|x| x.parts().to_vec()).collect();
        assert_eq!(set.len(), perms.len());
    }
}
