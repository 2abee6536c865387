//! The operator layer: Dunkl operators 𝒟ᵢ(κ), Cherednik operators 𝒰ᵢ(κ),
//! the per-monomial ℬᵢⱼ maps, Murphy elements ωᵢ, and the bilinear pairing
//! ⟨p, q⟩_κ = p(𝒟₁,…,𝒟_N)q |_{x=0}.
//!
//! Operators are generic over the coefficient field: instantiate with
//! [`RationalFunctionK`] and κ = the formal parameter, or with [`Rational`]
//! and κ = a concrete parameter value. Concrete arithmetic short-circuits
//! the rational-function machinery entirely.

use crate::comb::Composition;
use crate::poly::{Permutation, SparsePoly};
use crate::scalar::{Rational, RationalFunctionK, Scalar};

/// Which coefficient field an operator computation runs in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParameterValue {
    /// Keep κ formal; coefficients live in ℚ(κ).
    Formal,
    /// Specialize κ to a rational number; coefficients live in ℚ.
    Concrete(Rational),
}

impl ParameterValue {
    /// κ as an element of ℚ(κ).
    pub fn formal_kappa() -> RationalFunctionK {
        RationalFunctionK::kappa()
    }
}

/// 𝒟ᵢ(κ)p = ∂p/∂xᵢ + κ Σ_{j≠i} (p − (i j)p)/(xᵢ − xⱼ).
/// Lowers homogeneous degree by exactly one.
pub fn dunkl<F: Scalar>(p: &SparsePoly<F>, i: usize, kappa: &F) -> SparsePoly<F> {
    assert!(1 <= i && i <= p.nvars(), "index out of range");
    let mut out = p.partial_derivative(i);
    for j in 1..=p.nvars() {
        if j != i {
            out = out + &p.divided_transposition(i, j).scale(kappa);
        }
    }
    out
}

/// 𝒰ᵢ(κ)p = 𝒟ᵢ(κ)(xᵢ p) − κ Σ_{j<i} (j, i)p. Preserves degree.
pub fn cherednik_u<F: Scalar>(p: &SparsePoly<F>, i: usize, kappa: &F) -> SparsePoly<F> {
    assert!(1 <= i && i <= p.nvars(), "index out of range");
    let mut out = dunkl(&p.mul_var(i), i, kappa);
    for j in 1..i {
        let w = Permutation::transposition(j, i, p.nvars());
        out = out - &p.act(&w).scale(kappa);
    }
    out
}

/// ℬᵢⱼ on a monomial, by the closed forms: with a = αᵢ, b = αⱼ,
///   a ≥ b, i < j:  Σ_{l=0}^{a−b}   (xⱼ/xᵢ)^l x^α
///   a ≥ b, i > j:  Σ_{l=0}^{a−b−1} (xⱼ/xᵢ)^l x^α
///   a < b, i < j: −Σ_{l=1}^{b−a−1} (xᵢ/xⱼ)^l x^α
///   a < b, i > j: −Σ_{l=1}^{b−a}   (xᵢ/xⱼ)^l x^α
/// extended linearly. ℬᵢⱼ + ℬⱼᵢ = 1, and 𝒰ᵢ(κ) = ∂ᵢ∘xᵢ + κ Σ_{j≠i} ℬᵢⱼ.
pub fn b_op<F: Scalar>(p: &SparsePoly<F>, i: usize, j: usize) -> SparsePoly<F> {
    assert!(i != j, "need distinct indices");
    assert!(1 <= i && i <= p.nvars() && 1 <= j && j <= p.nvars());
    let mut out = SparsePoly::zero(p.nvars());
    for (e, c) in p.terms() {
        let a = e.get(i);
        let b = e.get(j);
        let mut parts = e.parts().to_vec();
        if a >= b {
            let top = if i < j {
                a - b
            } else {
                (a - b).saturating_sub(1)
            };
            if i > j && a == b {
                continue;
            }
            for l in 0..=top {
                parts[i - 1] = a - l;
                parts[j - 1] = b + l;
                out.add_term(Composition::new(parts.clone()), c.clone());
            }
        } else {
            let top = if i < j { b - a - 1 } else { b - a };
            for l in 1..=top {
                parts[i - 1] = a + l;
                parts[j - 1] = b - l;
                out.add_term(Composition::new(parts.clone()), c.clone().neg());
            }
        }
    }
    out
}

/// Murphy element ωᵢ = Σ_{j=N−i+2}^{N} (N+1−i, j) for 2 ≤ i ≤ N; ω₁ is the
/// zero map.
pub fn murphy_omega<F: Scalar>(p: &SparsePoly<F>, i: usize) -> SparsePoly<F> {
    let n = p.nvars();
    assert!(1 <= i && i <= n, "index out of range");
    let mut out = SparsePoly::zero(n);
    for j in (n - i + 2)..=n {
        let w = Permutation::transposition(n + 1 - i, j, n);
        out = out + &p.act(&w);
    }
    out
}

/// ⟨p, q⟩_κ = p(𝒟₁,…,𝒟_N) q(x) evaluated at x = 0. Symmetric and bilinear;
/// zero on homogeneous inputs of different degrees.
pub fn pairing<F: Scalar>(p: &SparsePoly<F>, q: &SparsePoly<F>, kappa: &F) -> F {
    assert_eq!(p.nvars(), q.nvars(), "arity mismatch");
    let n = p.nvars();
    let zero_exp = Composition::zero(n);
    let mut acc = F::zero();
    for (alpha, c) in p.terms() {
        let mut cur = q.clone();
        'apply: for i in 1..=n {
            for _ in 0..alpha.get(i) {
                if cur.is_zero() {
                    break 'apply;
                }
                cur = dunkl(&cur, i, kappa);
            }
        }
        let constant = cur.coef(&zero_exp);
        if !constant.is_zero() {
            acc = acc + &(c.clone() * &constant);
        }
    }
    acc
}
