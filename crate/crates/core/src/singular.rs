//! The classification pipeline for singular polynomials: per-pair data
//! (isotype shape, index, degree), Murphy-label identification by spectral
//! matching, construction and verification of singular bases, the exhaustive
//! kernel oracle at a concrete parameter value, and the nonexistence
//! witness.

use std::collections::BTreeMap;

use num::integer::Integer;
use thiserror::Error;

use crate::comb::{
    self, compositions_of, multiset_permutations, syt_enumerate, to_partition, top_tableau,
    Composition, Partition,
};
use crate::jack::nsjp;
use crate::linalg;
use crate::ops::{cherednik_u, dunkl};
use crate::poly::{specialize, PolyQ, SparsePoly};
use crate::scalar::{Rational, RationalFunctionK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularError {
    #[error("invalid parameter pair: {0}")]
    InvalidPair(String),
    #[error("coefficient of x^({exp}) has a pole at κ = {at}")]
    PoleAt { at: Rational, exp: Composition },
    #[error("classification mismatch: {0}")]
    ClassificationMismatch(String),
    #[error("space is not closed under the symmetric-group action")]
    NotInvariant,
    #[error("inconsistent spectrum: {0}")]
    InconsistentSpectrum(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("witness limit vanished unexpectedly")]
    UnexpectedZero,
}

/// Everything derived from a parameter pair (m0, n0) in N variables:
/// the singular value κ₀ = −m/n, the isotype shape τ, the index λ, and the
/// module degree.
#[derive(Clone, Debug)]
pub struct SingularDatum {
    pub nvars: usize,
    pub m0: u32,
    pub n0: u32,
    pub d: u32,
    pub m: u32,
    pub n: u32,
    pub kappa0: Rational,
    pub tau: Partition,
    pub l: usize,
    pub lambda: Composition,
    pub degree: u64,
}

/// Data of the nonexistence computation for an isotype with τ₂ ≥ n: the
/// index λ, the target exponent γ of the Dunkl image, and its
/// degree-raising companion α.
#[derive(Clone, Debug)]
pub struct WitnessPlan {
    pub nvars: usize,
    pub m: u32,
    pub n: u32,
    pub tau: Partition,
    /// t_i = Σ_{j≤l−i} (τ_j+1)/n for 1 ≤ i ≤ l−1.
    pub t: Vec<u32>,
    pub lambda: Composition,
    pub gamma: Composition,
    pub alpha: Composition,
}

/// Populates the full record for a valid pair; the closed degree formula is
/// cross-checked against |λ| and the equivalent form.
pub fn datum(nvars: usize, m0: u32, n0: u32) -> Result<SingularDatum, SingularError> {
    let invalid = |e: comb::CombError| match e {
        comb::CombError::InvalidPair(msg) => SingularError::InvalidPair(msg),
        other => SingularError::InvalidPair(other.to_string()),
    };
    let (tau, l) = comb::shape_from_pair(nvars, m0, n0).map_err(invalid)?;
    let lambda = comb::index_from_pair(nvars, m0, n0).map_err(invalid)?;
    let d = m0.gcd(&n0);
    let m = m0 / d;
    let n = n0 / d;
    let kappa0 = Rational::new(-(m as i64), n as i64);
    // degree = m(½(l−2)(n−1)(2d+l−3) + τ_l(d+l−2))
    let (li, ni, di) = (l as i64, n as i64, d as i64);
    let tau_l = tau.get(l) as i64;
    let degree = m as i64 * ((li - 2) * (ni - 1) * (2 * di + li - 3) / 2 + tau_l * (di + li - 2));
    assert_eq!(degree as u64, lambda.weight(), "degree formula vs |λ|");
    // equivalent form: |λ|/m = (N−nd+1)(d+l−2) − ½(n−1)(l−1)(l−2)
    let alt = m as i64
        * ((nvars as i64 - ni * di + 1) * (di + li - 2) - (ni - 1) * (li - 1) * (li - 2) / 2);
    assert_eq!(degree, alt, "equivalent degree formula");
    // divisibility condition on the shape
    for i in 1..l {
        assert_eq!((tau.get(i) + 1) % n, 0, "isotype divisibility");
    }
    Ok(SingularDatum {
        nvars,
        m0,
        n0,
        d,
        m,
        n,
        kappa0,
        tau,
        l,
        lambda,
        degree: degree as u64,
    })
}

/// Degree of the module attached to (m0, n0); equals |λ|.
pub fn module_degree(nvars: usize, m0: u32, n0: u32) -> Result<u64, SingularError> {
    Ok(datum(nvars, m0, n0)?.degree)
}

/// The labels of the Murphy basis: distinct permutations α of λ whose
/// spectrum at κ₀, via ξᵢ(α;κ₀) = 1 + κ₀·η_{N+1−i}(T), matches the content
/// vector of exactly one standard tableau of shape τ. The result is in
/// bijection with SYT(τ) and sorted descending, so λ itself comes first.
pub fn murphy_labels(dat: &SingularDatum) -> Result<Vec<Composition>, SingularError> {
    murphy_labels_for(dat.nvars, &dat.kappa0, &dat.tau, &dat.lambda)
}

pub fn murphy_labels_for(
    nvars: usize,
    kappa0: &Rational,
    tau: &Partition,
    lambda: &Composition,
) -> Result<Vec<Composition>, SingularError> {
    let tableaux = syt_enumerate(tau);
    let mut targets: BTreeMap<Vec<Rational>, usize> = BTreeMap::new();
    for (idx, t) in tableaux.iter().enumerate() {
        let eta = t.contents();
        let key: Vec<Rational> = (1..=nvars)
            .map(|i| Rational::one() + &(kappa0 * &Rational::from_int(eta[nvars - i])))
            .collect();
        if targets.insert(key, idx).is_some() {
            return Err(SingularError::ClassificationMismatch(
                "two tableaux share a content spectrum".into(),
            ));
        }
    }
    let mut matched: BTreeMap<usize, Composition> = BTreeMap::new();
    for alpha in multiset_permutations(&to_partition(lambda), nvars) {
        let key: Vec<Rational> = (1..=nvars)
            .map(|i| comb::xi_at(&alpha, i, nvars, kappa0))
            .collect();
        if let Some(&idx) = targets.get(&key) {
            if matched.insert(idx, alpha).is_some() {
                return Err(SingularError::ClassificationMismatch(format!(
                    "two permutations of λ match tableau #{idx}"
                )));
            }
        }
    }
    if matched.len() != tableaux.len() {
        return Err(SingularError::ClassificationMismatch(format!(
            "{} of {} tableaux matched",
            matched.len(),
            tableaux.len()
        )));
    }
    let mut labels: Vec<Composition> = matched.into_values().collect();
    labels.sort_unstable_by(|a, b| b.cmp(a));
    Ok(labels)
}

/// The singular basis {ζ_α^x(κ₀) : α a Murphy label}: each formal ζ is
/// specialized at κ₀, which is pole-free for classified labels; a pole
/// signals a classification (or implementation) error.
pub fn singular_basis(dat: &SingularDatum) -> Result<Vec<PolyQ>, SingularError> {
    let labels = murphy_labels(dat)?;
    let mut out = Vec::with_capacity(labels.len());
    for alpha in labels {
        let rec = nsjp(&alpha, dat.nvars);
        let specialized = specialize(&rec.poly, &dat.kappa0).map_err(|e| match e {
            crate::poly::PolyError::PoleAt { at, exp } => SingularError::PoleAt { at, exp },
            other => SingularError::ClassificationMismatch(other.to_string()),
        })?;
        out.push(specialized);
    }
    Ok(out)
}

/// True iff every Dunkl operator at κ₀ annihilates p.
pub fn verify_singular(p: &PolyQ, k0: &Rational) -> bool {
    assert!(!p.is_zero(), "verify_singular on the zero polynomial");
    (1..=p.nvars()).all(|i| dunkl(p, i, k0).is_zero())
}

/// Monomial basis of the homogeneous component, in descending linear
/// extension order. This is the column order of the kernel oracle.
pub fn monomial_basis(nvars: usize, degree: u32) -> Vec<Composition> {
    let mut all = compositions_of(degree, nvars);
    all.sort_unstable_by(|a, b| b.cmp(a));
    all
}

/// Exact kernel of the stacked Dunkl operators on the monomial basis of the
/// given degree: a deterministic echelon basis of
/// {p homogeneous of that degree : 𝒟ᵢ(κ₀)p = 0 for all i}.
pub fn singular_space(nvars: usize, k0: &Rational, degree: u32) -> Vec<PolyQ> {
    assert!(degree >= 1, "degree must be positive");
    let cols = monomial_basis(nvars, degree);
    let targets = monomial_basis(nvars, degree - 1);
    let target_index: BTreeMap<&Composition, usize> =
        targets.iter().enumerate().map(|(r, e)| (e, r)).collect();
    let nrows = nvars * targets.len();
    let mut rows = vec![vec![Rational::zero(); cols.len()]; nrows];

    let fill = |col_range: std::ops::Range<usize>,
                rows_chunk: &mut Vec<(usize, usize, Rational)>| {
        for c in col_range {
            let mono = SparsePoly::monomial(cols[c].clone(), Rational::one());
            for i in 1..=nvars {
                let image = dunkl(&mono, i, k0);
                for (e, v) in image.terms() {
                    let r = (i - 1) * targets.len() + target_index[e];
                    rows_chunk.push((r, c, v.clone()));
                }
            }
        }
    };

    let nthreads = crate::threads().min(cols.len().max(1));
    if nthreads <= 1 {
        let mut entries = Vec::new();
        fill(0..cols.len(), &mut entries);
        for (r, c, v) in entries {
            rows[r][c] = v;
        }
    } else {
        let chunk = cols.len().div_ceil(nthreads);
        let mut results: Vec<Vec<(usize, usize, Rational)>> = Vec::new();
        std::thread::scope(|s| {
            let mut handles = Vec::new();
            for t in 0..nthreads {
                let lo = t * chunk;
                let hi = ((t + 1) * chunk).min(cols.len());
                if lo >= hi {
                    continue;
                }
                let fill_ref = &fill;
                handles.push(s.spawn(move || {
                    let mut chunk_entries = Vec::new();
                    fill_ref(lo..hi, &mut chunk_entries);
                    chunk_entries
                }));
            }
            for h in handles {
                results.push(h.join().expect("assembly worker panicked"));
            }
        });
        for entries in results {
            for (r, c, v) in entries {
                rows[r][c] = v;
            }
        }
    }

    let basis = linalg::kernel_basis(&rows, cols.len());
    basis
        .into_iter()
        .map(|vec| {
            let mut p = SparsePoly::zero(nvars);
            for (c, v) in vec.into_iter().enumerate() {
                p.add_term(cols[c].clone(), v);
            }
            p
        })
        .collect()
}

fn coords(p: &PolyQ, cols: &[Composition]) -> Vec<Rational> {
    cols.iter().map(|e| p.coef(e)).collect()
}

/// Row-echelon membership test for a list of coordinate vectors.
struct SpanTester {
    ref_rows: Vec<Vec<Rational>>,
}

impl SpanTester {
    fn new(vectors: &[Vec<Rational>]) -> Self {
        let mut ref_rows: Vec<Vec<Rational>> = Vec::new();
        for v in vectors {
            let mut v = v.clone();
            Self::reduce(&ref_rows, &mut v);
            if v.iter().any(|x| !x.is_zero()) {
                ref_rows.push(v);
                ref_rows.sort_by_key(|r| r.iter().position(|x| !x.is_zero()));
            }
        }
        SpanTester { ref_rows }
    }

    fn reduce(ref_rows: &[Vec<Rational>], v: &mut [Rational]) {
        for row in ref_rows {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if v[lead].is_zero() {
                continue;
            }
            let factor = &v[lead] / &row[lead];
            for (x, y) in v.iter_mut().zip(row) {
                *x = x.clone() - &(&factor * y);
            }
        }
    }

    fn contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        Self::reduce(&self.ref_rows, &mut v);
        v.iter().all(|x| x.is_zero())
    }

    fn dim(&self) -> usize {
        self.ref_rows.len()
    }
}

/// Identifies the isotype of a nonzero S_N-invariant space of singular
/// polynomials: locates the ⊳-maximal exponent λ across the basis (a
/// partition), inverts the content construction to a shape τ, and checks
/// that the joint (𝒰ᵢ(κ₀))-eigenspace inside the space for the spectrum of
/// λ is one-dimensional.
pub fn isotype_of(space: &[PolyQ], k0: &Rational) -> Result<Partition, SingularError> {
    let first = space
        .first()
        .ok_or_else(|| SingularError::PreconditionViolated("empty space".into()))?;
    let nvars = first.nvars();
    let degree = first
        .homogeneous_degree()
        .ok_or_else(|| SingularError::PreconditionViolated("inhomogeneous basis".into()))?
        as u32;
    let cols = monomial_basis(nvars, degree);
    let vectors: Vec<Vec<Rational>> = space.iter().map(|p| coords(p, &cols)).collect();
    let tester = SpanTester::new(&vectors);
    if tester.dim() != space.len() {
        return Err(SingularError::PreconditionViolated(
            "basis is linearly dependent".into(),
        ));
    }

    // closure under S_N: adjacent transposition and the full cycle generate
    let mut gens = vec![crate::poly::Permutation::transposition(1, 2, nvars)];
    if nvars > 2 {
        gens.push(crate::poly::Permutation::theta(nvars, nvars));
    }
    for w in &gens {
        for p in space {
            if !tester.contains(&coords(&p.act(w), &cols)) {
                return Err(SingularError::NotInvariant);
            }
        }
    }

    // the ⊳-maximal exponent across the whole support
    let lambda = space
        .iter()
        .filter_map(|p| p.leading_exponent())
        .max()
        .expect("nonempty basis")
        .clone();
    for p in space {
        for (beta, _) in p.terms() {
            if !comb::dominates_eq(&lambda, beta) {
                return Err(SingularError::InconsistentSpectrum(format!(
                    "support exponent {beta:?} is not dominated by {lambda:?}"
                )));
            }
        }
    }
    let lambda_parts = to_partition(&lambda);
    if lambda.parts() != lambda_parts.parts() {
        return Err(SingularError::InconsistentSpectrum(format!(
            "⊳-maximal exponent {lambda:?} is not a partition"
        )));
    }

    // invert λ_{N+1−i} = −κ₀ Σ_{j<s}(τ_j+1): run-lengths of reversed λ are
    // the parts of τ, with prescribed block values
    let mut rev: Vec<u32> = lambda.parts().to_vec();
    rev.reverse();
    let mut tau_parts: Vec<u32> = Vec::new();
    let mut pos = 0usize;
    let mut row_sum = Rational::zero();
    while pos < nvars {
        let run_val = rev[pos];
        let run_len = rev[pos..].iter().take_while(|&&v| v == run_val).count();
        let expect = -(k0 * &row_sum);
        if expect != Rational::from_int(run_val as i64) {
            return Err(SingularError::InconsistentSpectrum(format!(
                "block value {run_val} differs from prescribed {expect}"
            )));
        }
        tau_parts.push(run_len as u32);
        row_sum = row_sum + Rational::from_int(run_len as i64 + 1);
        pos += run_len;
    }
    if !tau_parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(SingularError::InconsistentSpectrum(format!(
            "run lengths {tau_parts:?} do not form a partition"
        )));
    }
    let tau = Partition::new(tau_parts);

    // spectral consistency: ξᵢ(λ;κ₀) = 1 + κ₀ η_{N+1−i}(T₀), and the joint
    // 𝒰ᵢ(κ₀)-eigenspace for that spectrum inside the space is a line
    let eta = top_tableau(&tau).contents();
    let spectrum: Vec<Rational> = (1..=nvars)
        .map(|i| comb::xi_at(&lambda, i, nvars, k0))
        .collect();
    for i in 1..=nvars {
        let murphy = Rational::one() + &(k0 * &Rational::from_int(eta[nvars - i]));
        if spectrum[i - 1] != murphy {
            return Err(SingularError::InconsistentSpectrum(format!(
                "ξ_{i}(λ;κ₀) = {} but 1+κ₀η = {}",
                spectrum[i - 1],
                murphy
            )));
        }
    }
    let mut eigen_rows: Vec<Vec<Rational>> = Vec::new();
    let images: Vec<Vec<PolyQ>> = space
        .iter()
        .map(|p| (1..=nvars).map(|i| cherednik_u(p, i, k0)).collect())
        .collect();
    for i in 1..=nvars {
        for (r, e) in cols.iter().enumerate() {
            let _ = r;
            let mut row = Vec::with_capacity(space.len());
            for (j, p) in space.iter().enumerate() {
                let v = images[j][i - 1].coef(e) - &(&spectrum[i - 1] * &p.coef(e));
                row.push(v);
            }
            eigen_rows.push(row);
        }
    }
    let joint = linalg::kernel_basis(&eigen_rows, space.len());
    if joint.len() != 1 {
        return Err(SingularError::InconsistentSpectrum(format!(
            "joint eigenspace for the spectrum of λ has dimension {}",
            joint.len()
        )));
    }
    Ok(tau)
}

/// Witness data for the nonexistence argument at isotype τ with τ₂ ≥ n.
pub fn witness_plan(
    nvars: usize,
    m: u32,
    n: u32,
    tau: &Partition,
) -> Result<WitnessPlan, SingularError> {
    if m == 0 || n < 2 || m.gcd(&n) != 1 {
        return Err(SingularError::PreconditionViolated(format!(
            "need coprime m ≥ 1, n ≥ 2; got {m}, {n}"
        )));
    }
    let tau = tau.trimmed();
    let l = tau.parts().len();
    if tau.weight() != nvars as u64 || l < 2 {
        return Err(SingularError::PreconditionViolated(format!(
            "τ = {tau} is not a partition of N = {nvars} with two or more parts"
        )));
    }
    for i in 1..l {
        if (tau.get(i) + 1) % n != 0 {
            return Err(SingularError::PreconditionViolated(format!(
                "n = {n} does not divide τ_{i}+1 = {}",
                tau.get(i) + 1
            )));
        }
    }
    if tau.get(2) < n {
        return Err(SingularError::PreconditionViolated(format!(
            "τ₂ = {} < n = {n}",
            tau.get(2)
        )));
    }
    let d: Vec<u32> = (1..l).map(|i| (tau.get(i) + 1) / n).collect();
    let t: Vec<u32> = (1..l).map(|i| d[..l - i].iter().sum()).collect();

    let mut lambda_parts = Vec::with_capacity(nvars);
    for j in 1..l {
        lambda_parts.extend(std::iter::repeat(m * t[j - 1]).take(tau.get(l + 1 - j) as usize));
    }
    lambda_parts.extend(std::iter::repeat(0).take(tau.get(1) as usize));
    let lambda = Composition::new(lambda_parts);

    let mut head = Vec::with_capacity(nvars);
    for j in 1..l - 1 {
        head.extend(std::iter::repeat(m * t[j - 1]).take(tau.get(l + 1 - j) as usize));
    }
    head.extend(std::iter::repeat(m * t[l - 2]).take((tau.get(2) - n) as usize));
    head.extend(std::iter::repeat(0).take(n as usize - 1));
    let mut gamma_parts = head.clone();
    gamma_parts.push(m - 1);
    gamma_parts.extend(std::iter::repeat(m).take(tau.get(1) as usize));
    let mut alpha_parts = head;
    alpha_parts.push(m);
    alpha_parts.extend(std::iter::repeat(m).take(tau.get(1) as usize));
    let gamma = Composition::new(gamma_parts);
    let alpha = Composition::new(alpha_parts);

    assert_eq!(gamma.weight() + 1, alpha.weight());
    assert_eq!(alpha.weight(), lambda.weight());
    assert_eq!(gamma.ambient(), nvars);
    assert_eq!(lambda.length(), nvars - tau.get(1) as usize);

    Ok(WitnessPlan {
        nvars,
        m,
        n,
        tau,
        t,
        lambda,
        gamma,
        alpha,
    })
}

/// lim_{κ→κ₀} coef(𝒟_{ℓ(λ)}(κ) ζ_λ^x(κ), γ), computed through the cyclic
/// shift and insertion reductions: the limit equals
/// m·d₁²·f(κ₀)/(κ₀ + m·d₁) with f(κ) = (nκ+m)·coef(ζ_ν^x(κ), σ) for
/// ν = (md₁−1, (md₁)^{n−1}, 0^{τ₁}) and σ = (m−1, 0^{n−1}, m^{τ₁}) in
/// n+τ₁ variables. A nonzero result certifies that no singular polynomial
/// of this isotype exists.
pub fn nonexistence_witness(plan: &WitnessPlan) -> Result<Rational, SingularError> {
    let m = plan.m;
    let n = plan.n as usize;
    let tau1 = plan.tau.get(1) as usize;
    let d1 = *plan.t.last().expect("plan has l ≥ 2");
    let kappa0 = Rational::new(-(m as i64), plan.n as i64);

    let mvars = n + tau1;
    let mut nu_parts = Vec::with_capacity(mvars);
    nu_parts.push(m * d1 - 1);
    nu_parts.extend(std::iter::repeat(m * d1).take(n - 1));
    nu_parts.extend(std::iter::repeat(0).take(tau1));
    let nu = Composition::new(nu_parts);
    let mut sigma_parts = Vec::with_capacity(mvars);
    sigma_parts.push(m - 1);
    sigma_parts.extend(std::iter::repeat(0).take(n - 1));
    sigma_parts.extend(std::iter::repeat(m).take(tau1));
    let sigma = Composition::new(sigma_parts);

    let rec = nsjp(&nu, mvars);
    let c = rec.poly.coef(&sigma);
    if c.is_zero() {
        return Err(SingularError::UnexpectedZero);
    }
    // cancel the forced simple pole: f = (nκ + m)·c must be regular at κ₀
    let f = RationalFunctionK::affine(plan.n as i64, m as i64) * &c;
    let f_at = f.eval_at(&kappa0).map_err(|_| SingularError::PoleAt {
        at: kappa0.clone(),
        exp: sigma.clone(),
    })?;
    let md1 = Rational::from_int((m * d1) as i64);
    let value = Rational::from_int(m as i64) * &Rational::from_int(d1 as i64).pow(2) * &f_at
        / &(kappa0 + &md1);
    if value.is_zero() {
        return Err(SingularError::UnexpectedZero);
    }
    Ok(value)
}
