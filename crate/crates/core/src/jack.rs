//! Nonsymmetric Jack polynomials ζ_α^x over ℚ(κ) by triangular recursion,
//! hook-length data h(α, t), the 𝓔± inversion factors, and exhaustive
//! enumeration of κ₀-critical pairs.

use std::collections::BTreeMap;

use num::integer::Integer;
use thiserror::Error;

use crate::comb::{
    self, dominates, partitions_of, rank, spectral_vector, to_partition, Composition,
    SpectralVector,
};
use crate::poly::{PolyK, SparsePoly};
use crate::scalar::RationalFunctionK;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JackError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A computed nonsymmetric Jack polynomial: the x-monic simultaneous
/// eigenvector of the Cherednik operators with spectrum ξ_i(α; κ).
#[derive(Clone, Debug)]
pub struct NsjpRecord {
    pub alpha: Composition,
    pub nvars: usize,
    pub poly: PolyK,
    pub spectral: SpectralVector,
}

/// One evaluated hook-length product.
#[derive(Clone, Debug)]
pub struct HookDatum {
    pub alpha: Composition,
    pub shift: RationalFunctionK,
    pub value: RationalFunctionK,
}

/// A pair (α, β) with α ⊳ β whose rank data force equal spectra at −m/n:
/// (r(β,i) − r(α,i))·m = (α_i − β_i)·n for every i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub alpha: Composition,
    pub beta: Composition,
    pub m: u32,
    pub n: u32,
}

/// Leg-length L(α; i, j) of the node (i, j), 1 ≤ j ≤ α_i:
/// #{l > i : j ≤ α_l ≤ α_i} + #{l < i : j ≤ α_l + 1 ≤ α_i}.
pub fn leg_length(alpha: &Composition, i: usize, j: u32) -> usize {
    assert!(1 <= i && i <= alpha.length(), "index out of range");
    assert!(1 <= j && j <= alpha.get(i), "index out of range");
    let ai = alpha.get(i);
    let below = (i + 1..=alpha.ambient())
        .filter(|&l| j <= alpha.get(l) && alpha.get(l) <= ai)
        .count();
    let above = (1..i)
        .filter(|&l| j <= alpha.get(l) + 1 && alpha.get(l) + 1 <= ai)
        .count();
    below + above
}

/// Hook-length product h(α, t) = ∏_{i ≤ ℓ(α), α_i > 0} ∏_{j=1}^{α_i}
/// (α_i − j + t + κ·L(α; i, j)); the empty product is 1.
pub fn hook_product(alpha: &Composition, t: &RationalFunctionK) -> RationalFunctionK {
    let mut acc = RationalFunctionK::one();
    for i in 1..=alpha.length() {
        let ai = alpha.get(i);
        for j in 1..=ai {
            let legs = leg_length(alpha, i, j) as i64;
            let factor = RationalFunctionK::affine(legs, (ai - j) as i64) + t;
            acc = &acc * &factor;
        }
    }
    acc
}

pub fn hook_datum(alpha: &Composition, t: &RationalFunctionK) -> HookDatum {
    HookDatum {
        alpha: alpha.clone(),
        shift: t.clone(),
        value: hook_product(alpha, t),
    }
}

/// 𝓔_ε(α) = ∏ {1 + εκ/(κ(r(α,i) − r(α,j)) + α_j − α_i) : i < j, α_i < α_j};
/// the denominator is ξ_j(α;κ) − ξ_i(α;κ).
pub fn e_factor(alpha: &Composition, positive: bool) -> RationalFunctionK {
    let n = alpha.ambient();
    let mut acc = RationalFunctionK::one();
    for i in 1..=n {
        for j in i + 1..=n {
            if alpha.get(i) >= alpha.get(j) {
                continue;
            }
            let dr = rank(alpha, i) as i64 - rank(alpha, j) as i64;
            let dv = alpha.get(j) as i64 - alpha.get(i) as i64;
            let den = RationalFunctionK::affine(dr, dv);
            let eps = if positive {
                RationalFunctionK::kappa()
            } else {
                -&RationalFunctionK::kappa()
            };
            acc = &acc * &(RationalFunctionK::one() + &(&eps / &den));
        }
    }
    acc
}

/// All compositions β ⊴ α of the same weight with ambient length N,
/// including α itself, in descending linear-extension order (α first).
pub fn dominated_candidates(alpha: &Composition, nvars: usize) -> Vec<Composition> {
    let alpha = alpha.padded(nvars);
    let ap = to_partition(&alpha).trimmed();
    let w = alpha.weight() as u32;
    let mut out = Vec::new();
    let max_part = ap.get(1);
    for mu in partitions_of(w, nvars, max_part.max(1)) {
        let mu_comp = Composition::new(mu.trimmed().parts().to_vec());
        let ap_comp = Composition::new(ap.parts().to_vec());
        if mu_comp == ap_comp {
            for beta in comb::multiset_permutations(&mu, nvars) {
                if beta == alpha || dominates(&alpha, &beta) {
                    out.push(beta);
                }
            }
        } else if dominates(&ap_comp, &mu_comp) {
            out.extend(comb::multiset_permutations(&mu, nvars));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Inverse of the monomial action of 𝒰_i: all (γ, sign) with γ ≠ β such that
/// coef(𝒰_i x^γ, β) = sign·κ, read off the ℬ_{ij} closed forms. Each γ
/// differs from β in the pair of slots (i, j) only, preserving their sum.
fn u_offdiag_sources(beta: &Composition, i: usize) -> Vec<(Composition, i64)> {
    let n = beta.ambient();
    let bi = beta.get(i);
    let mut out = Vec::new();
    for j in 1..=n {
        if j == i {
            continue;
        }
        let s = bi + beta.get(j);
        for v in 0..=s {
            if v == bi {
                continue; // γ = β is the diagonal
            }
            let gi = v;
            let gj = s - v;
            let sign = if gi >= gj {
                // bij1/bij2: β_i = γ_i − l with 0 ≤ l ≤ γ_i − γ_j − [i>j]
                let top = gi as i64 - gj as i64 - i64::from(i > j);
                let l = gi as i64 - bi as i64;
                if l < 0 || l > top {
                    continue;
                }
                1
            } else {
                // bij3/bij4: β_i = γ_i + l with 1 ≤ l ≤ γ_j − γ_i − [i<j]
                let top = gj as i64 - gi as i64 - i64::from(i < j);
                let l = bi as i64 - gi as i64;
                if l < 1 || l > top {
                    continue;
                }
                -1
            };
            let mut parts = beta.parts().to_vec();
            parts[i - 1] = gi;
            parts[j - 1] = gj;
            out.push((Composition::new(parts), sign));
        }
    }
    out
}

/// ζ_α^x(κ) in `nvars` variables. Coefficients are solved one candidate
/// exponent at a time in descending linear-extension order: for each β ⊲ α
/// pick the smallest i with ξ_i(α) ≠ ξ_i(β) in ℚ(κ) and divide the
/// accumulated right-hand side by the spectral gap. The map α ↦ (ξ_i) is
/// one-to-one over ℚ(κ), so such an i always exists. Debug builds check the
/// solved coefficient against every other index with a nonzero gap.
pub fn nsjp(alpha: &Composition, nvars: usize) -> NsjpRecord {
    assert!(alpha.length() <= nvars, "ambient variable count below ℓ(α)");
    let alpha = alpha.padded(nvars);
    let candidates = dominated_candidates(&alpha, nvars);
    debug_assert_eq!(candidates.first(), Some(&alpha));

    let ranks_alpha: Vec<usize> = (1..=nvars).map(|i| rank(&alpha, i)).collect();
    let mut coeffs: BTreeMap<Composition, RationalFunctionK> = BTreeMap::new();
    coeffs.insert(alpha.clone(), RationalFunctionK::one());

    for beta in candidates.iter().skip(1) {
        let ranks_beta: Vec<usize> = (1..=nvars).map(|i| rank(beta, i)).collect();
        // indices with a nonzero spectral gap: the (rank, entry) data differ
        let usable: Vec<usize> = (1..=nvars)
            .filter(|&i| ranks_alpha[i - 1] != ranks_beta[i - 1] || alpha.get(i) != beta.get(i))
            .collect();
        let &i = usable.first().expect("spectral map is injective over ℚ(κ)");
        let a_beta = solve_coefficient(&alpha, beta, i, &ranks_alpha, &ranks_beta, &coeffs);
        #[cfg(debug_assertions)]
        for &i2 in usable.iter().skip(1) {
            let alt = solve_coefficient(&alpha, beta, i2, &ranks_alpha, &ranks_beta, &coeffs);
            debug_assert!(
                alt == a_beta,
                "cross-index inconsistency at β = {beta:?}: i = {i} vs {i2}"
            );
        }
        if !a_beta.is_zero() {
            coeffs.insert(beta.clone(), a_beta);
        }
    }

    let mut poly = SparsePoly::zero(nvars);
    for (e, c) in coeffs {
        poly.add_term(e, c);
    }
    NsjpRecord {
        spectral: spectral_vector(&alpha, nvars),
        alpha,
        nvars,
        poly,
    }
}

/// (ξ_i(α) − ξ_i(β))·A_β = κ · Σ_γ sign_γ A_γ over the off-diagonal sources
/// γ of β under 𝒰_i.
fn solve_coefficient(
    alpha: &Composition,
    beta: &Composition,
    i: usize,
    ranks_alpha: &[usize],
    ranks_beta: &[usize],
    coeffs: &BTreeMap<Composition, RationalFunctionK>,
) -> RationalFunctionK {
    let mut rhs = RationalFunctionK::zero();
    for (gamma, sign) in u_offdiag_sources(beta, i) {
        if let Some(a) = coeffs.get(&gamma) {
            rhs = if sign > 0 { rhs + a } else { rhs - a };
        }
    }
    if rhs.is_zero() {
        return RationalFunctionK::zero();
    }
    rhs = rhs * &RationalFunctionK::kappa();
    // ξ_i(α) − ξ_i(β) = (r(β,i) − r(α,i))κ + α_i − β_i
    let gap = RationalFunctionK::affine(
        ranks_beta[i - 1] as i64 - ranks_alpha[i - 1] as i64,
        alpha.get(i) as i64 - beta.get(i) as i64,
    );
    rhs / gap
}

/// All β with ℓ(β) ≤ maxlen forming a (−m/n)-critical pair with α,
/// exhaustively, by branch-and-prune over rank assignments. Every survivor
/// is re-verified against the defining rank equations with no pruning
/// assumptions. Results are sorted by descending linear extension; each β is
/// reported with ambient length max(ℓ(β), ℓ(α)).
pub fn critical_pairs(
    alpha: &Composition,
    m: u32,
    n: u32,
    maxlen: usize,
) -> Result<Vec<CriticalPair>, JackError> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(JackError::InvalidParameters(format!(
            "need coprime m, n ≥ 1; got m = {m}, n = {n}"
        )));
    }
    if maxlen < alpha.length() || maxlen > 63 {
        return Err(JackError::InvalidParameters(format!(
            "maxlen {maxlen} outside [ℓ(α), 63]"
        )));
    }
    let big = alpha.padded(maxlen);
    let ranks_a: Vec<usize> = (1..=maxlen).map(|i| rank(&big, i)).collect();
    let weight = big.weight() as i64;
    // prefix sums of α⁺ for the dominance prune
    let ap = to_partition(&big);
    let mut ap_prefix = Vec::with_capacity(maxlen + 1);
    let mut acc = 0i64;
    ap_prefix.push(0);
    for i in 1..=maxlen {
        acc += ap.get(i) as i64;
        ap_prefix.push(acc);
    }

    // Assign ranks 1..maxlen to positions. The entry forced at position p
    // with rank r is α_p − (r − r(α,p))·m/n; entries must be weakly
    // decreasing along ranks with ties broken by increasing position.
    let mut search = Search {
        m: m as i64,
        n: n as i64,
        maxlen,
        weight,
        big: &big,
        ranks_a: &ranks_a,
        ap_prefix: &ap_prefix,
        values: vec![-1; maxlen],
        used: 0,
        found: Vec::new(),
    };
    search.go(1, i64::MAX, 0, 0);

    let mut out = Vec::new();
    for values in search.found {
        let beta = Composition::new(values.iter().map(|&v| v as u32).collect());
        if beta == big || !dominates(&big, &beta) {
            continue;
        }
        // final full check of every rank equation, independent of pruning
        let ok = (1..=maxlen).all(|i| {
            (rank(&beta, i) as i64 - ranks_a[i - 1] as i64) * m as i64
                == (big.get(i) as i64 - beta.get(i) as i64) * n as i64
        });
        if !ok {
            continue;
        }
        let ambient = beta.length().max(alpha.length());
        out.push(CriticalPair {
            alpha: alpha.trimmed().padded(ambient),
            beta: beta.trimmed().padded(ambient),
            m,
            n,
        });
    }
    out.sort_unstable_by(|a, b| b.beta.cmp(&a.beta));
    Ok(out)
}

struct Search<'a> {
    m: i64,
    n: i64,
    maxlen: usize,
    weight: i64,
    big: &'a Composition,
    ranks_a: &'a [usize],
    ap_prefix: &'a [i64],
    values: Vec<i64>,
    used: u64,
    found: Vec<Vec<i64>>,
}

impl Search<'_> {
    fn go(&mut self, r: usize, prev_val: i64, prev_pos: usize, sum: i64) {
        if r > self.maxlen {
            if sum == self.weight {
                self.found.push(self.values.clone());
            }
            return;
        }
        let remaining_ranks = (self.maxlen - r) as i64;
        for p in 1..=self.maxlen {
            if self.used & (1 << p) != 0 {
                continue;
            }
            let shift = r as i64 - self.ranks_a[p - 1] as i64;
            if shift.rem_euclid(self.n) != 0 {
                continue;
            }
            let v = self.big.get(p) as i64 - shift / self.n * self.m;
            if v < 0 || v > prev_val {
                continue;
            }
            if v == prev_val && p < prev_pos {
                continue;
            }
            let new_sum = sum + v;
            // dominance on sorted prefixes and weight feasibility
            if new_sum > self.ap_prefix[r] || new_sum + remaining_ranks * v < self.weight {
                continue;
            }
            self.used |= 1 << p;
            self.values[p - 1] = v;
            self.go(r + 1, v, p, new_sum);
            self.used &= !(1 << p);
            self.values[p - 1] = -1;
        }
    }
}

/// Default search bound for critical pairs: ℓ(α) + |α|, the ambient length
/// at which every critical companion of α is visible.
pub fn default_maxlen(alpha: &Composition) -> usize {
    alpha.length() + alpha.weight() as usize
}

/// Checks the defining conditions of a (−m/n)-critical pair directly. The
/// two vectors are compared over a common ambient length.
pub fn is_critical_pair(alpha: &Composition, beta: &Composition, m: u32, n: u32) -> bool {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return false;
    }
    let len = alpha.ambient().max(beta.ambient());
    let a = alpha.padded(len);
    let b = beta.padded(len);
    if !dominates(&a, &b) {
        return false;
    }
    (1..=len).all(|i| {
        (rank(&b, i) as i64 - rank(&a, i) as i64) * m as i64
            == (a.get(i) as i64 - b.get(i) as i64) * n as i64
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::compositions_of;
    use crate::ops::cherednik_u;
    use crate::scalar::{Rational, UniPolyK};

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunctionK {
        RationalFunctionK::normalize(UniPolyK::from_ints(num), UniPolyK::from_ints(den)).unwrap()
    }

    #[test]
    fn leg_length_examples() {
        assert_eq!(leg_length(&c(&[2, 2]), 1, 1), 1);
        assert_eq!(leg_length(&c(&[4]), 1, 2), 0);
        assert_eq!(leg_length(&c(&[1, 2]), 2, 1), 1);
    }

    #[test]
    fn hook_product_examples() {
        // h((2,2), κ+1) = (κ+1)(κ+2)(2κ+1)(2κ+2)
        let t = RationalFunctionK::affine(1, 1);
        let expect =
            &(&rf(&[1, 1], &[1]) * &rf(&[2, 1], &[1])) * &(&rf(&[1, 2], &[1]) * &rf(&[2, 2], &[1]));
        assert_eq!(hook_product(&c(&[2, 2]), &t), expect);
        // h((1), t) = t
        let t2 = rf(&[3, 5], &[2]);
        assert_eq!(hook_product(&c(&[1]), &t2), t2);
        // empty diagram
        assert!(hook_product(&Composition::zero(3), &t).is_one());
    }

    #[test]
    fn rectangle_hook_product_formula() {
        // h((md)^n, κ+1) = ∏_{i=1}^{n} ∏_{j=1}^{md} (iκ + j)
        let t = RationalFunctionK::affine(1, 1);
        for (m, n, d) in [(1u32, 2usize, 2u32), (3, 2, 2), (1, 3, 2)] {
            let lam = Composition::new(vec![m * d; n]);
            let mut expect = RationalFunctionK::one();
            for i in 1..=n {
                for j in 1..=(m * d) {
                    expect = &expect * &RationalFunctionK::affine(i as i64, j as i64);
                }
            }
            assert_eq!(hook_product(&lam, &t), expect);
        }
    }

    #[test]
    fn e_factor_examples() {
        // partitions have no inversions
        assert!(e_factor(&c(&[3, 2, 2, 0]), true).is_one());
        // α = (0,1): single factor 1 + κ/(κ+1)
        let expect = RationalFunctionK::one() + &(&RationalFunctionK::kappa() / &rf(&[1, 1], &[1]));
        assert_eq!(e_factor(&c(&[0, 1]), true), expect);
    }

    #[test]
    fn hook_e_lemma_small_sweep() {
        // h(α, κ+1) = h(α⁺, κ+1)·𝓔₊(α) and h(α, 1) = h(α⁺, 1)/𝓔₋(α)
        let t1 = RationalFunctionK::affine(1, 1);
        let t0 = RationalFunctionK::one();
        for w in 1..=5u32 {
            for alpha in compositions_of(w, 3) {
                let plus = to_partition(&alpha).as_composition(3);
                assert_eq!(
                    hook_product(&alpha, &t1),
                    &hook_product(&plus, &t1) * &e_factor(&alpha, true),
                    "α = {alpha:?}"
                );
                assert_eq!(
                    hook_product(&alpha, &t0),
                    &hook_product(&plus, &t0) / &e_factor(&alpha, false),
                    "α = {alpha:?}"
                );
            }
        }
    }

    #[test]
    fn hook_drop_ratio() {
        // h(α,t)/h(α̃,t) = (k − r(α,k))κ + t + α_k − 1, k = ℓ(α)
        let shifts = [RationalFunctionK::one(), RationalFunctionK::affine(1, 1)];
        for w in 1..=5u32 {
            for alpha in compositions_of(w, 3) {
                if alpha.is_zero() {
                    continue;
                }
                let (tilde, k) = comb::drop_tilde(&alpha).unwrap();
                for t in &shifts {
                    let expect = RationalFunctionK::affine(
                        k as i64 - rank(&alpha, k) as i64,
                        alpha.get(k) as i64 - 1,
                    ) + t;
                    assert_eq!(
                        hook_product(&alpha, t),
                        &hook_product(&tilde, t) * &expect,
                        "α = {alpha:?}, t = {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn nsjp_degree_zero_and_partitions() {
        let z = nsjp(&Composition::zero(3), 3);
        assert_eq!(z.poly, PolyK::one(3));
        // minimal partitions are bare monomials
        let z = nsjp(&c(&[1, 1]), 2);
        assert_eq!(
            z.poly,
            PolyK::monomial(c(&[1, 1]), RationalFunctionK::one())
        );
    }

    #[test]
    fn nsjp_two_variable_examples() {
        // ζ_{(1,0)} = x₁ + (κ/(κ+1)) x₂, hand-solved 2×2 eigenproblem
        let z = nsjp(&c(&[1, 0]), 2);
        assert_eq!(z.poly.coef(&c(&[0, 1])), rf(&[0, 1], &[1, 1]));
        // ζ_{(0,1)} = x₂
        let z = nsjp(&c(&[0, 1]), 2);
        assert_eq!(
            z.poly,
            PolyK::monomial(c(&[0, 1]), RationalFunctionK::one())
        );
        // ζ_{(2,0)} = x₁² + (κ/(κ+2)) x₂² + (2κ/(κ+2)) x₁x₂
        let z = nsjp(&c(&[2, 0]), 2);
        assert_eq!(z.poly.coef(&c(&[0, 2])), rf(&[0, 1], &[2, 1]));
        assert_eq!(z.poly.coef(&c(&[1, 1])), rf(&[0, 2], &[2, 1]));
    }

    #[test]
    fn nsjp_is_simultaneous_eigenvector() {
        let kap = RationalFunctionK::kappa();
        for w in 1..=4u32 {
            for alpha in compositions_of(w, 3) {
                let rec = nsjp(&alpha, 3);
                for i in 1..=3 {
                    let lhs = cherednik_u(&rec.poly, i, &kap);
                    let rhs = rec.poly.scale(&rec.spectral[i - 1]);
                    assert_eq!(lhs, rhs, "𝒰_{i} on ζ_{alpha:?}");
                }
            }
        }
    }

    #[test]
    fn nsjp_support_is_dominated() {
        for alpha in compositions_of(5, 3) {
            let rec = nsjp(&alpha, 3);
            assert!(rec.poly.coef(&rec.alpha).is_one(), "x-monic");
            for (beta, _) in rec.poly.terms() {
                assert!(
                    *beta == rec.alpha || dominates(&rec.alpha, beta),
                    "support escape: {beta:?} in ζ_{alpha:?}"
                );
            }
        }
    }

    #[test]
    fn nsjp_stability_in_variable_count() {
        // coefficients do not depend on N ≥ max(ℓ(α), ℓ(β))
        for alpha in [c(&[2, 1]), c(&[0, 3]), c(&[1, 0, 2])] {
            let small_n = alpha.length().max(2);
            let z_small = nsjp(&alpha, small_n);
            let z_big = nsjp(&alpha, small_n + 2);
            for (beta, a) in z_small.poly.terms() {
                assert_eq!(
                    *a,
                    z_big.poly.coef(&beta.padded(small_n + 2)),
                    "β = {beta:?}"
                );
            }
        }
    }

    #[test]
    fn knop_sahi_positivity_small() {
        let t = RationalFunctionK::affine(1, 1);
        for w in 1..=4u32 {
            for alpha in compositions_of(w, 3) {
                let h = hook_product(&alpha, &t);
                let rec = nsjp(&alpha, 3);
                for (beta, a) in rec.poly.terms() {
                    let scaled = &h * a;
                    assert!(scaled.is_polynomial(), "denominator at {alpha:?}/{beta:?}");
                    assert!(
                        scaled
                            .num()
                            .coeffs()
                            .iter()
                            .all(|x| !num::traits::Signed::is_negative(x)),
                        "negative coefficient at {alpha:?}/{beta:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn critical_pairs_examples() {
        // unique pair for the rectangle (2,2) at −1/2
        let pairs = critical_pairs(&c(&[2, 2]), 1, 2, 6).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].beta.parts(), &[0, 0, 1, 1, 1, 1]);
        // no pairs below (1,0)
        assert!(critical_pairs(&c(&[1, 0]), 1, 2, 3).unwrap().is_empty());
        // bad parameters
        assert!(critical_pairs(&c(&[2, 2]), 2, 4, 6).is_err());
        assert!(critical_pairs(&c(&[2, 2]), 1, 2, 1).is_err());
    }

    /// Independent oracle: enumerate every composition of the right weight
    /// and length and test the defining equations directly.
    fn critical_pairs_brute(
        alpha: &Composition,
        m: u32,
        n: u32,
        maxlen: usize,
    ) -> Vec<Composition> {
        let mut out = Vec::new();
        for beta in compositions_of(alpha.weight() as u32, maxlen) {
            if is_critical_pair(alpha, &beta, m, n) {
                out.push(beta);
            }
        }
        out
    }

    #[test]
    fn critical_pairs_match_brute_force() {
        for (alpha, m, n, maxlen) in [
            (c(&[2, 2]), 1, 2, 6),
            (c(&[3, 0]), 1, 3, 4),
            (c(&[2, 1]), 1, 2, 5),
            (c(&[4]), 3, 2, 4),
            (c(&[1, 2]), 2, 3, 5),
        ] {
            let fast: Vec<_> = critical_pairs(&alpha, m, n, maxlen)
                .unwrap()
                .into_iter()
                .map(|p| p.beta.padded(maxlen))
                .collect();
            let mut brute = critical_pairs_brute(&alpha, m, n, maxlen);
            brute.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(fast, brute, "α = {alpha:?}, m/n = {m}/{n}");
        }
    }

    #[test]
    fn critical_pair_forces_equal_spectra() {
        let pairs = critical_pairs(&c(&[2, 2]), 1, 2, 6).unwrap();
        let k0 = Rational::new(-1, 2);
        for p in &pairs {
            let len = p.beta.ambient();
            let a = p.alpha.padded(len);
            for i in 1..=len {
                assert_eq!(
                    comb::xi_at(&a, i, len, &k0),
                    comb::xi_at(&p.beta, i, len, &k0)
                );
            }
        }
    }

    #[test]
    fn simple_pole_at_unique_critical_pair() {
        // λ = (2,2), N = 6: coef(ζ_λ, (0,0,1,1,1,1)) has a simple pole at −1/2
        let rec = nsjp(&c(&[2, 2]), 6);
        let coeff = rec.poly.coef(&c(&[0, 0, 1, 1, 1, 1]));
        assert!(!coeff.is_zero());
        assert_eq!(coeff.vanishing_order(&Rational::new(-1, 2)).unwrap(), -1);
    }
}
