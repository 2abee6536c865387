//! Sparse multivariate polynomials over an exact coefficient field, with the
//! symmetric-group action, exact divided differences, specialization of the
//! formal parameter, and the JSON exchange format.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::comb::Composition;
use crate::scalar::{Rational, RationalFunctionK, Scalar, UniPolyK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different variable counts")]
    ArityMismatch,
    #[error("coefficient of x^({exp}) has a pole at κ = {at}")]
    PoleAt { at: Rational, exp: Composition },
    #[error("coefficient of x^({exp}) has a pole too deep for the scaling power")]
    PoleTooDeep { exp: Composition },
    #[error("malformed polynomial data: {0}")]
    Malformed(String),
}

/// Permutation of {1..N}, acting on exponent vectors by (wα)_i = α_{w⁻¹(i)}
/// and on polynomials by monomial relabeling w(x^α) = x^{wα}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    // images[i] = w(i+1) − 1, 0-based storage
    images: Vec<usize>,
}

impl Permutation {
    /// From 1-based images: `images[i-1] = w(i)`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            assert!(1 <= im && im <= n && !seen[im - 1], "not a bijection");
            seen[im - 1] = true;
        }
        Permutation {
            images: images.into_iter().map(|i| i - 1).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition (i, j), 1-based.
    pub fn transposition(i: usize, j: usize, n: usize) -> Self {
        assert!(1 <= i && i <= n && 1 <= j && j <= n && i != j);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// θ_k = (1,2)(2,3)…(k−1,k): sends i ↦ i+1 for i < k and k ↦ 1.
    pub fn theta(k: usize, n: usize) -> Self {
        assert!(1 <= k && k <= n);
        let mut images: Vec<usize> = (0..n).collect();
        images[..k].rotate_left(1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(i), 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    /// Composition acting as `self` after `other`: (self∘other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// (wα)_i = α_{w⁻¹(i)}.
    pub fn apply(&self, alpha: &Composition) -> Composition {
        assert_eq!(self.n(), alpha.ambient(), "arity mismatch");
        let mut parts = vec![0u32; self.n()];
        for (i, &im) in self.images.iter().enumerate() {
            parts[im] = alpha.parts()[i];
        }
        Composition::new(parts)
    }
}

/// Finite map from exponent vectors to nonzero coefficients. All keys share
/// the ambient variable count; iteration order is the linear extension of ⊳
/// (ascending in the stored map, so `.rev()` walks leading terms first).
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly<F: Scalar> {
    nvars: usize,
    terms: BTreeMap<Composition, F>,
}

/// Polynomial over ℚ(κ) (formal parameter).
pub type PolyK = SparsePoly<RationalFunctionK>;
/// Polynomial over ℚ (specialized parameter).
pub type PolyQ = SparsePoly<Rational>;

impl<F: Scalar> SparsePoly<F> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::monomial(Composition::zero(nvars), F::one())
    }

    pub fn monomial(exp: Composition, coeff: F) -> Self {
        let mut terms = BTreeMap::new();
        let nvars = exp.ambient();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        SparsePoly { nvars, terms }
    }

    /// The variable x_i, 1-based.
    pub fn var(i: usize, nvars: usize) -> Self {
        SparsePoly::monomial(Composition::unit(i, nvars), F::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Stored coefficient of x^α, or zero.
    pub fn coef(&self, alpha: &Composition) -> F {
        assert_eq!(self.nvars, alpha.ambient(), "arity mismatch");
        self.terms.get(alpha).cloned().unwrap_or_else(F::zero)
    }

    /// Terms in ascending linear-extension order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &F)> {
        self.terms.iter()
    }

    /// Terms from the ⊳-leading end.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Composition, &F)> {
        self.terms.iter().rev()
    }

    /// The ⊳-greatest exponent in the support.
    pub fn leading_exponent(&self) -> Option<&Composition> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, exp: Composition, coeff: F) {
        assert_eq!(self.nvars, exp.ambient(), "arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn map_coeffs<G: Scalar>(&self, mut f: impl FnMut(&F) -> G) -> SparsePoly<G> {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), f(a));
        }
        out
    }

    /// Weight of a homogeneous polynomial; `None` when weights are mixed or
    /// the polynomial is zero.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(|e| e.weight());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// ∂p/∂x_i, 1-based.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(1 <= i && i <= self.nvars, "index out of range");
        let mut out = SparsePoly::zero(self.nvars);
        for (e, a) in &self.terms {
            let ei = e.get(i);
            if ei == 0 {
                continue;
            }
            let mut parts = e.parts().to_vec();
            parts[i - 1] -= 1;
            out.add_term(Composition::new(parts), a.clone() * &F::from_int(ei as i64));
        }
        out
    }

    /// x_i · p.
    pub fn mul_var(&self, i: usize) -> Self {
        assert!(1 <= i && i <= self.nvars, "index out of range");
        let mut out = SparsePoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.bump(i), a.clone());
        }
        out
    }

    /// w · p by monomial relabeling; coefficients unchanged.
    pub fn act(&self, w: &Permutation) -> Self {
        assert_eq!(self.nvars, w.n(), "arity mismatch");
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (w.apply(e), a.clone()))
                .collect(),
        }
    }

    /// Exact quotient (p − (i,j)p)/(x_i − x_j); division is exact by
    /// antisymmetry of the numerator. Term-pairwise:
    /// (x_i^a x_j^b − x_i^b x_j^a)/(x_i − x_j) = ±Σ_t x_i^· x_j^·.
    pub fn divided_transposition(&self, i: usize, j: usize) -> Self {
        assert!(i != j, "need distinct indices");
        assert!(1 <= i && i <= self.nvars && 1 <= j && j <= self.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let a = e.get(i);
            let b = e.get(j);
            if a == b {
                continue;
            }
            let mut parts = e.parts().to_vec();
            if a > b {
                for t in 0..(a - b) {
                    parts[i - 1] = a - 1 - t;
                    parts[j - 1] = b + t;
                    out.add_term(Composition::new(parts.clone()), c.clone());
                }
            } else {
                for t in 0..(b - a) {
                    parts[i - 1] = a + t;
                    parts[j - 1] = b - 1 - t;
                    out.add_term(Composition::new(parts.clone()), c.clone().neg());
                }
            }
        }
        out
    }
}

impl<F: Scalar> std::ops::Add<&SparsePoly<F>> for SparsePoly<F> {
    type Output = SparsePoly<F>;
    fn add(mut self, rhs: &SparsePoly<F>) -> SparsePoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        for (e, a) in &rhs.terms {
            self.add_term(e.clone(), a.clone());
        }
        self
    }
}

impl<F: Scalar> std::ops::Sub<&SparsePoly<F>> for SparsePoly<F> {
    type Output = SparsePoly<F>;
    fn sub(mut self, rhs: &SparsePoly<F>) -> SparsePoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        for (e, a) in &rhs.terms {
            self.add_term(e.clone(), a.clone().neg());
        }
        self
    }
}

impl<F: Scalar> std::ops::Mul<&SparsePoly<F>> for &SparsePoly<F> {
    type Output = SparsePoly<F>;
    fn mul(self, rhs: &SparsePoly<F>) -> SparsePoly<F> {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = SparsePoly::zero(self.nvars);
        for (e1, a1) in &self.terms {
            for (e2, a2) in &rhs.terms {
                let parts = e1
                    .parts()
                    .iter()
                    .zip(e2.parts())
                    .map(|(x, y)| x + y)
                    .collect();
                out.add_term(Composition::new(parts), a1.clone() * a2);
            }
        }
        out
    }
}

impl<F: Scalar> Neg for &SparsePoly<F> {
    type Output = SparsePoly<F>;
    fn neg(self) -> SparsePoly<F> {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone().neg()))
                .collect(),
        }
    }
}

impl<F: Scalar> fmt::Display for SparsePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, a) in self.terms_desc() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({a})*x^({e})")?;
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for SparsePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Evaluates every coefficient at κ = k0; a pole in any coefficient is an
/// error naming the offending monomial.
pub fn specialize(p: &PolyK, k0: &Rational) -> Result<PolyQ, PolyError> {
    let mut out = SparsePoly::zero(p.nvars());
    for (e, a) in p.terms() {
        let v = a.eval_at(k0).map_err(|_| PolyError::PoleAt {
            at: k0.clone(),
            exp: e.clone(),
        })?;
        out.add_term(e.clone(), v);
    }
    Ok(out)
}

/// Coefficient-wise lim_{κ→k0} (κ−k0)^k · coeff; terms whose limit is zero
/// drop out.
pub fn scaled_limit_poly(p: &PolyK, k0: &Rational, k: u32) -> Result<PolyQ, PolyError> {
    let mut out = SparsePoly::zero(p.nvars());
    for (e, a) in p.terms() {
        let v = a
            .scaled_limit(k0, k)
            .map_err(|_| PolyError::PoleTooDeep { exp: e.clone() })?;
        out.add_term(e.clone(), v);
    }
    Ok(out)
}

// ---- JSON exchange format ----
//
// {"nvars": N, "terms": [{"exp": [..], "num": [..], "den": [..]}]}
// num/den are ascending integer κ-coefficient lists; a plain rational p/q is
// the pair of constant lists [p], [q]. Writers emit terms in descending
// linear-extension order; readers accept any order.

#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

fn unipoly_to_i64(p: &UniPolyK) -> Result<Vec<i64>, PolyError> {
    if p.is_zero() {
        return Ok(vec![0]);
    }
    p.coeffs()
        .iter()
        .map(|c| {
            i64::try_from(c).map_err(|_| {
                PolyError::Malformed("coefficient too large for JSON transport".into())
            })
        })
        .collect()
}

impl PolyJson {
    pub fn from_poly_k(p: &PolyK) -> Result<Self, PolyError> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (e, a) in p.terms_desc() {
            terms.push(TermJson {
                exp: e.parts().to_vec(),
                num: unipoly_to_i64(a.num())?,
                den: unipoly_to_i64(a.den())?,
            });
        }
        Ok(PolyJson {
            nvars: p.nvars(),
            terms,
        })
    }

    pub fn from_poly_q(p: &PolyQ) -> Result<Self, PolyError> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (e, a) in p.terms_desc() {
            let num = i64::try_from(a.numer()).map_err(|_| {
                PolyError::Malformed("coefficient too large for JSON transport".into())
            })?;
            let den = i64::try_from(a.denom()).map_err(|_| {
                PolyError::Malformed("coefficient too large for JSON transport".into())
            })?;
            terms.push(TermJson {
                exp: e.parts().to_vec(),
                num: vec![num],
                den: vec![den],
            });
        }
        Ok(PolyJson {
            nvars: p.nvars(),
            terms,
        })
    }

    pub fn to_poly_k(&self) -> Result<PolyK, PolyError> {
        let mut out = SparsePoly::zero(self.nvars);
        for t in &self.terms {
            if t.exp.len() != self.nvars {
                return Err(PolyError::ArityMismatch);
            }
            let coeff = RationalFunctionK::normalize(
                UniPolyK::from_ints(&t.num),
                UniPolyK::from_ints(&t.den),
            )
            .map_err(|e| PolyError::Malformed(e.to_string()))?;
            out.add_term(Composition::new(t.exp.clone()), coeff);
        }
        Ok(out)
    }

    pub fn to_poly_q(&self) -> Result<PolyQ, PolyError> {
        let mut out = SparsePoly::zero(self.nvars);
        for t in &self.terms {
            if t.exp.len() != self.nvars {
                return Err(PolyError::ArityMismatch);
            }
            if t.num.len() > 1 || t.den.len() > 1 {
                return Err(PolyError::Malformed(
                    "κ-dependent coefficient in a specialized polynomial".into(),
                ));
            }
            let num = t.num.first().copied().unwrap_or(0);
            let den = t.den.first().copied().unwrap_or(1);
            if den == 0 {
                return Err(PolyError::Malformed("zero denominator".into()));
            }
            out.add_term(Composition::new(t.exp.clone()), Rational::new(num, den));
        }
        Ok(out)
    }
}
