//! Seeded, deterministic property suites over the whole operator and
//! Jack-polynomial stack. These back the `verify` CLI subcommand; the same
//! property functions are reused by the acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::comb::{
    self, compositions_of, dominates, partitions_of, rank, syt_enumerate, to_partition,
    top_tableau, Composition, Partition,
};
use crate::jack::{critical_pairs, e_factor, hook_product, is_critical_pair, nsjp};
use crate::ops::{b_op, cherednik_u, dunkl, murphy_omega, pairing};
use crate::poly::{Permutation, PolyK, PolyQ, SparsePoly};
use crate::scalar::{Rational, RationalFunctionK};
use crate::singular::{
    datum, module_degree, monomial_basis, murphy_labels, nonexistence_witness, singular_basis,
    singular_space, verify_singular, witness_plan,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Operators,
    Jack,
    Hooks,
    Critical,
    Singular,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::Jack => "jack",
            Suite::Hooks => "hooks",
            Suite::Critical => "critical",
            Suite::Singular => "singular",
        }
    }

    pub fn all() -> [Suite; 5] {
        [
            Suite::Operators,
            Suite::Jack,
            Suite::Hooks,
            Suite::Critical,
            Suite::Singular,
        ]
    }
}

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub name: &'static str,
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.error.is_none()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.results.len()
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {}/{} properties passed",
            self.suite,
            self.passed(),
            self.results.len()
        )
    }
}

type Property = (&'static str, fn(&mut ChaCha8Rng) -> Result<(), String>);

fn properties(suite: Suite) -> Vec<Property> {
    match suite {
        Suite::Operators => vec![
            ("dunkl_commutativity", prop_dunkl_commutativity),
            ("cherednik_commutativity", prop_cherednik_commutativity),
            ("operator_sum_identity", prop_operator_sum_identity),
            ("dunkl_equivariance", prop_dunkl_equivariance),
            ("b_op_complement", prop_b_op_complement),
            ("invariant_subspaces", prop_invariant_subspaces),
            ("dunkl_support", prop_dunkl_support),
            ("pairing_symmetry", prop_pairing_symmetry),
            ("singular_murphy_criterion", prop_singular_murphy_criterion),
            ("divided_difference_product_rule", prop_product_rule),
        ],
        Suite::Jack => vec![
            ("eigen_relation", prop_eigen_relation),
            ("knop_sahi_positivity", prop_knop_sahi_positivity),
            ("variable_count_stability", prop_stability),
            ("insertion_identity", prop_insertion_identity),
            ("zdiff_identity", prop_zdiff_identity),
            ("kpole_simple_pole", prop_kpole_simple_pole),
        ],
        Suite::Hooks => vec![
            ("hook_e_plus", prop_hook_e_plus),
            ("hook_e_minus", prop_hook_e_minus),
            ("hook_drop_ratio", prop_hook_drop_ratio),
            ("rectangle_product", prop_rectangle_product),
            ("hook_edge_cases", prop_hook_edge_cases),
        ],
        Suite::Critical => vec![
            ("rectangular_uniqueness", prop_rectangular_uniqueness),
            ("shifted_rectangular_uniqueness", prop_uniqb_uniqueness),
            ("general_pairs_half", prop_general_pairs_half),
            ("general_pairs_third", prop_general_pairs_third),
            ("brute_force_agreement", prop_critical_brute_agreement),
        ],
        Suite::Singular => vec![
            ("index_divisibility", prop_index_divisibility),
            ("murphy_label_bijection", prop_murphy_label_bijection),
            ("decreasing_degrees", prop_decreasing_degrees),
            ("existence_small", prop_existence_small),
            (
                "kernel_matches_classification",
                prop_kernel_matches_classification,
            ),
            ("radical_pairs_to_zero", prop_radical_pairs_to_zero),
            ("witness_nonzero", prop_witness_nonzero),
            ("top_tableau_uniqueness", prop_top_tableau_uniqueness),
        ],
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    run_filtered(suite, seed, |_| true)
}

/// Runs only the named properties of a suite; unknown names are ignored.
pub fn run_properties(suite: Suite, seed: u64, names: &[&str]) -> SuiteReport {
    run_filtered(suite, seed, |name| names.contains(&name))
}

fn run_filtered(suite: Suite, seed: u64, keep: impl Fn(&str) -> bool) -> SuiteReport {
    let mut results = Vec::new();
    for (idx, (name, f)) in properties(suite).into_iter().enumerate() {
        if !keep(name) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64) ^ 0x5eed);
        results.push(PropertyResult {
            name,
            error: f(&mut rng).err(),
        });
    }
    SuiteReport {
        suite: suite.name(),
        seed,
        results,
    }
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    Suite::all().iter().map(|&s| run_suite(s, seed)).collect()
}

// ---- random generators ----

fn rand_homogeneous_k(rng: &mut ChaCha8Rng, nvars: usize, degree: u32, nterms: usize) -> PolyK {
    let monos = compositions_of(degree, nvars);
    let mut p = PolyK::zero(nvars);
    for _ in 0..nterms {
        let e = monos[rng.gen_range(0..monos.len())].clone();
        let c = loop {
            let c = rng.gen_range(-9i64..=9);
            if c != 0 {
                break c;
            }
        };
        p.add_term(e, RationalFunctionK::from_int(c));
    }
    if p.is_zero() {
        p.add_term(monos[0].clone(), RationalFunctionK::one());
    }
    p
}

fn rand_composition(rng: &mut ChaCha8Rng, nvars: usize, max_entry: u32) -> Composition {
    Composition::new((0..nvars).map(|_| rng.gen_range(0..=max_entry)).collect())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---- operators ----

fn prop_dunkl_commutativity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let kap = RationalFunctionK::kappa();
    for _ in 0..3 {
        let n = rng.gen_range(2..=4);
        let deg = rng.gen_range(1..=5);
        let p = rand_homogeneous_k(rng, n, deg, 4);
        for i in 1..=n {
            for j in i + 1..=n {
                let a = dunkl(&dunkl(&p, j, &kap), i, &kap);
                let b = dunkl(&dunkl(&p, i, &kap), j, &kap);
                check(a == b, || format!("[𝒟_{i}, 𝒟_{j}] ≠ 0 on {p:?}"))?;
            }
        }
    }
    Ok(())
}

fn prop_cherednik_commutativity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let kap = RationalFunctionK::kappa();
    for _ in 0..3 {
        let n = rng.gen_range(2..=4);
        let deg = rng.gen_range(1..=5);
        let p = rand_homogeneous_k(rng, n, deg, 4);
        for i in 1..=n {
            for j in i + 1..=n {
                let a = cherednik_u(&cherednik_u(&p, j, &kap), i, &kap);
                let b = cherednik_u(&cherednik_u(&p, i, &kap), j, &kap);
                check(a == b, || format!("[𝒰_{i}, 𝒰_{j}] ≠ 0 on {p:?}"))?;
            }
        }
    }
    Ok(())
}

fn prop_operator_sum_identity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    // Σᵢ 𝒰ᵢ(κ) = N + Σᵢ xᵢ∂ᵢ + κ N(N−1)/2
    let kap = RationalFunctionK::kappa();
    for _ in 0..4 {
        let n = rng.gen_range(2..=4);
        let deg = rng.gen_range(0..=5);
        let p = rand_homogeneous_k(rng, n, deg, 4);
        let mut lhs = SparsePoly::zero(n);
        let mut euler = SparsePoly::zero(n);
        for i in 1..=n {
            lhs = lhs + &cherednik_u(&p, i, &kap);
            euler = euler + &p.partial_derivative(i).mul_var(i);
        }
        let constant = RationalFunctionK::from_int(n as i64)
            + &(&kap * &RationalFunctionK::from_int((n * (n - 1) / 2) as i64));
        let rhs = p.scale(&constant) + &euler;
        check(lhs == rhs, || {
            format!("operator sum identity fails on {p:?}")
        })?;
    }
    Ok(())
}

fn prop_dunkl_equivariance(rng: &mut ChaCha8Rng) -> Result<(), String> {
    // 𝒟ᵢ(κ)(i,j) = (i,j)𝒟ⱼ(κ)
    let kap = RationalFunctionK::kappa();
    for _ in 0..4 {
        let n = rng.gen_range(2..=4);
        let deg = rng.gen_range(1..=4);
        let p = rand_homogeneous_k(rng, n, deg, 4);
        let i = rng.gen_range(1..=n);
        let j = loop {
            let j = rng.gen_range(1..=n);
            if j != i {
                break j;
            }
        };
        let w = Permutation::transposition(i, j, n);
        let lhs = dunkl(&p.act(&w), i, &kap);
        let rhs = dunkl(&p, j, &kap).act(&w);
        check(lhs == rhs, || format!("equivariance fails for ({i},{j})"))?;
    }
    Ok(())
}

fn prop_b_op_complement(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..4 {
        let n = rng.gen_range(2..=4);
        let deg = rng.gen_range(0..=5);
        let p = rand_homogeneous_k(rng, n, deg, 4);
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let sum = b_op(&p, i, j) + &b_op(&p, j, i);
                check(sum == p, || format!("ℬ_{i}{j} + ℬ_{j}{i} ≠ 1"))?;
            }
        }
    }
    Ok(())
}

fn prop_invariant_subspaces(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // 𝒰ᵢ maps span{x^α : α ∈ I_{s,n}} into itself, on full monomial bases.
    let kap = RationalFunctionK::kappa();
    for nvars in 2..=4usize {
        for bound in 1..=2u32 {
            for s in 1..=nvars {
                let in_set = |e: &Composition| {
                    (1..=nvars).all(|i| {
                        if i <= s {
                            e.get(i) < bound
                        } else {
                            e.get(i) <= bound
                        }
                    })
                };
                let mut members = vec![Composition::zero(nvars)];
                loop {
                    let mut next = Vec::new();
                    for e in &members {
                        for i in 1..=nvars {
                            let b = e.bump(i);
                            if in_set(&b) && !members.contains(&b) && !next.contains(&b) {
                                next.push(b);
                            }
                        }
                    }
                    if next.is_empty() {
                        break;
                    }
                    members.extend(next);
                }
                for alpha in &members {
                    for i in 1..=nvars {
                        let image = cherednik_u(
                            &PolyK::monomial(alpha.clone(), RationalFunctionK::one()),
                            i,
                            &kap,
                        );
                        for (beta, _) in image.terms() {
                            check(in_set(beta), || {
                                format!("𝒰_{i} x^({alpha}) escapes I_({s},{bound}) at {beta}")
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn prop_dunkl_support(rng: &mut ChaCha8Rng) -> Result<(), String> {
    // Support of xᵢ𝒟ᵢ x^β within {α : β = α, β⁺ ≻ α⁺, or β = (i,j)α, αᵢ > αⱼ}
    let kap = RationalFunctionK::kappa();
    for _ in 0..12 {
        let n = rng.gen_range(2..=4);
        let beta = rand_composition(rng, n, 4);
        let i = rng.gen_range(1..=n);
        let image = dunkl(
            &PolyK::monomial(beta.clone(), RationalFunctionK::one()),
            i,
            &kap,
        )
        .mul_var(i);
        let bplus = to_partition(&beta).as_composition(n);
        for (alpha, _) in image.terms() {
            let aplus = to_partition(alpha).as_composition(n);
            let swap_case = (1..=n).any(|j| {
                j != i
                    && alpha.get(i) > alpha.get(j)
                    && Permutation::transposition(i, j, n).apply(alpha) == beta
            });
            check(
                *alpha == beta || dominates(&bplus, &aplus) || swap_case,
                || format!("support escape α = {alpha} for β = {beta}, i = {i}"),
            )?;
        }
    }
    Ok(())
}

fn prop_pairing_symmetry(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let kap = RationalFunctionK::kappa();
    for _ in 0..4 {
        let n = rng.gen_range(2..=3);
        let deg = rng.gen_range(1..=4);
        let p = rand_homogeneous_k(rng, n, deg, 3);
        let q = rand_homogeneous_k(rng, n, deg, 3);
        check(pairing(&p, &q, &kap) == pairing(&q, &p, &kap), || {
            format!("⟨p,q⟩ ≠ ⟨q,p⟩ for {p:?}, {q:?}")
        })?;
    }
    Ok(())
}

fn prop_singular_murphy_criterion(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // singular f at κ₀ satisfies 𝒰ᵢ(κ₀)f = f + κ₀ ω_{N+1−i} f
    for (nvars, k0, degree) in [
        (3, Rational::new(-1, 2), 3u32),
        (3, Rational::new(-1, 3), 1),
        (4, Rational::new(-1, 3), 2),
    ] {
        for f in singular_space(nvars, &k0, degree) {
            for i in 1..=nvars {
                let lhs = cherednik_u(&f, i, &k0);
                let rhs = f.clone() + &murphy_omega(&f, nvars + 1 - i).scale(&k0);
                check(lhs == rhs, || {
                    format!("Murphy relation fails at N={nvars}, κ₀={k0}, i={i}")
                })?;
            }
        }
    }
    Ok(())
}

fn prop_product_rule(rng: &mut ChaCha8Rng) -> Result<(), String> {
    // 𝒟ᵢ(pg) = p𝒟ᵢg + g∂ᵢp + κ Σ_{j≠i} ((i,j)g)·((p − (i,j)p)/(xᵢ−xⱼ))
    let kap = RationalFunctionK::kappa();
    for _ in 0..3 {
        let n = rng.gen_range(2..=3);
        let dp = rng.gen_range(1..=3);
        let dg = rng.gen_range(1..=3);
        let p = rand_homogeneous_k(rng, n, dp, 3);
        let g = rand_homogeneous_k(rng, n, dg, 3);
        for i in 1..=n {
            let lhs = dunkl(&(&p * &g), i, &kap);
            let mut rhs = (&p * &dunkl(&g, i, &kap)) + &(&g * &p.partial_derivative(i));
            for j in 1..=n {
                if j == i {
                    continue;
                }
                let w = Permutation::transposition(i, j, n);
                rhs = rhs + &(&g.act(&w) * &p.divided_transposition(i, j)).scale(&kap);
            }
            check(lhs == rhs, || format!("product rule fails at i = {i}"))?;
        }
    }
    Ok(())
}

// ---- jack ----

fn prop_eigen_relation(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // 𝒰ᵢ(κ) ζ_α = ξᵢ(α;κ) ζ_α for all |α| ≤ 5, N ≤ 4 (cross-index
    // consistency of the recursion is asserted inside nsjp in debug builds)
    let kap = RationalFunctionK::kappa();
    for nvars in 2..=4usize {
        let max_w = if nvars == 4 { 5 } else { 4 };
        for w in 0..=max_w {
            for alpha in compositions_of(w, nvars) {
                let rec = nsjp(&alpha, nvars);
                for i in 1..=nvars {
                    let lhs = cherednik_u(&rec.poly, i, &kap);
                    let rhs = rec.poly.scale(&rec.spectral[i - 1]);
                    check(lhs == rhs, || {
                        format!("eigen relation fails: α={alpha}, i={i}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn prop_knop_sahi_positivity(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // h(α, κ+1)·ζ_α has coefficients in ℕ₀[κ] for |α| ≤ 5, N ≤ 4
    let t = RationalFunctionK::affine(1, 1);
    for nvars in 2..=4usize {
        let max_w = if nvars == 4 { 5 } else { 4 };
        for w in 1..=max_w {
            for alpha in compositions_of(w, nvars) {
                let h = hook_product(&alpha, &t);
                let rec = nsjp(&alpha, nvars);
                for (beta, a) in rec.poly.terms() {
                    let scaled = &h * a;
                    let ok = scaled.is_polynomial()
                        && scaled
                            .num()
                            .coeffs()
                            .iter()
                            .all(|x| !num::traits::Signed::is_negative(x));
                    check(ok, || format!("positivity fails at ζ_{alpha}, β = {beta}"))?;
                }
            }
        }
    }
    Ok(())
}

fn prop_stability(rng: &mut ChaCha8Rng) -> Result<(), String> {
    // coef(ζ_α, β) does not depend on N ≥ max(ℓ(α), ℓ(β))
    for _ in 0..3 {
        let alpha = loop {
            let a = rand_composition(rng, 3, 3);
            if a.weight() > 0 && a.weight() <= 6 {
                break a;
            }
        };
        let n0 = alpha.length().max(2);
        let small = nsjp(&alpha, n0);
        let big = nsjp(&alpha, n0 + 2);
        for (beta, a) in small.poly.terms() {
            check(*a == big.poly.coef(&beta.padded(n0 + 2)), || {
                format!("stability fails for α = {alpha}, β = {beta}")
            })?;
        }
    }
    Ok(())
}

fn prop_insertion_identity(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // coef(ζ_{ι(s,λ)α}, ι(s,λ)γ) = coef(ζ_α, γ) for α, γ ∈ I_{s,n}, n = min λ
    let cases: [(usize, Partition, usize); 3] = [
        (2, Partition::new(vec![2]), 1),
        (2, Partition::new(vec![3, 2]), 1),
        (3, Partition::new(vec![1]), 2),
    ];
    for (nvars, lam, s) in cases {
        let bound = lam.get(lam.length());
        let members: Vec<Composition> = compositions_upto(nvars, bound, s);
        for alpha in &members {
            let big = nsjp(&comb::insert(s, &lam, alpha), nvars + lam.length());
            let small = nsjp(alpha, nvars);
            for gamma in &members {
                if !(gamma == alpha || dominates(alpha, gamma)) && lam.length() > 1 {
                    continue;
                }
                if gamma.weight() != alpha.weight() {
                    continue;
                }
                let lhs = big.poly.coef(&comb::insert(s, &lam, gamma));
                let rhs = small.poly.coef(gamma);
                check(lhs == rhs, || {
                    format!("insertion identity fails: λ={lam}, s={s}, α={alpha}, γ={gamma}")
                })?;
            }
        }
    }
    Ok(())
}

/// Members of I_{s,bound} with entries capped by `bound` (strict below
/// position s, weak above).
fn compositions_upto(nvars: usize, bound: u32, s: usize) -> Vec<Composition> {
    let mut out = vec![Composition::zero(nvars)];
    for i in 1..=nvars {
        let cap = if i <= s {
            bound.saturating_sub(1)
        } else {
            bound
        };
        let mut next = Vec::new();
        for e in &out {
            for v in 1..=cap {
                let mut parts = e.parts().to_vec();
                parts[i - 1] = v;
                next.push(Composition::new(parts));
            }
        }
        out.extend(next);
    }
    out
}

fn prop_zdiff_identity(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // 𝒟_k ζ_α = [((k−r)κ+α_k)/((k+1−r)κ+α_k)]·((N+1−r)κ+α_k)·θ_k⁻¹ ζ_α̃,
    // k = ℓ(α), r = r(α, k)
    let kap = RationalFunctionK::kappa();
    for nvars in 2..=4usize {
        for w in 1..=4u32 {
            for alpha in compositions_of(w, nvars) {
                if alpha.is_zero() {
                    continue;
                }
                let (tilde, k) = comb::drop_tilde(&alpha).unwrap();
                let r = rank(&alpha, k) as i64;
                let ak = alpha.get(k) as i64;
                let lhs = dunkl(&nsjp(&alpha, nvars).poly, k, &kap);
                let ratio = RationalFunctionK::affine(k as i64 - r, ak)
                    / RationalFunctionK::affine(k as i64 + 1 - r, ak);
                let factor = &ratio * &RationalFunctionK::affine(nvars as i64 + 1 - r, ak);
                let theta_inv = Permutation::theta(k, nvars).inverse();
                let rhs = nsjp(&tilde, nvars).poly.act(&theta_inv).scale(&factor);
                check(lhs == rhs, || {
                    format!("Dunkl-shift identity fails at α = {alpha}")
                })?;
            }
        }
    }
    Ok(())
}

fn prop_kpole_simple_pole(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    let rec = nsjp(&Composition::new(vec![2, 2]), 6);
    let coeff = rec.poly.coef(&Composition::new(vec![0, 0, 1, 1, 1, 1]));
    let ord = coeff
        .vanishing_order(&Rational::new(-1, 2))
        .map_err(|e| e.to_string())?;
    check(ord == -1, || {
        format!("expected simple pole, got order {ord}")
    })
}

// ---- hooks ----

fn rand_small_alpha(rng: &mut ChaCha8Rng) -> Composition {
    loop {
        let n = rng.gen_range(2..=4);
        let a = rand_composition(rng, n, 3);
        if a.weight() >= 1 && a.weight() <= 6 {
            return a;
        }
    }
}

fn prop_hook_e_plus(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let t = RationalFunctionK::affine(1, 1);
    for _ in 0..10 {
        let alpha = rand_small_alpha(rng);
        let plus = to_partition(&alpha).as_composition(alpha.ambient());
        let lhs = hook_product(&alpha, &t);
        let rhs = &hook_product(&plus, &t) * &e_factor(&alpha, true);
        check(lhs == rhs, || {
            format!("h(α,κ+1) ≠ h(α⁺,κ+1)𝓔₊ at α = {alpha}")
        })?;
    }
    Ok(())
}

fn prop_hook_e_minus(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let t = RationalFunctionK::one();
    for _ in 0..10 {
        let alpha = rand_small_alpha(rng);
        let plus = to_partition(&alpha).as_composition(alpha.ambient());
        let lhs = hook_product(&alpha, &t);
        let rhs = &hook_product(&plus, &t) / &e_factor(&alpha, false);
        check(lhs == rhs, || format!("h(α,1) ≠ h(α⁺,1)/𝓔₋ at α = {alpha}"))?;
    }
    Ok(())
}

fn prop_hook_drop_ratio(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..10 {
        let alpha = rand_small_alpha(rng);
        let (tilde, k) = comb::drop_tilde(&alpha).unwrap();
        for t in [RationalFunctionK::one(), RationalFunctionK::affine(1, 1)] {
            let expect = RationalFunctionK::affine(
                k as i64 - rank(&alpha, k) as i64,
                alpha.get(k) as i64 - 1,
            ) + &t;
            check(
                hook_product(&alpha, &t) == &hook_product(&tilde, &t) * &expect,
                || format!("hook drop ratio fails at α = {alpha}"),
            )?;
        }
    }
    Ok(())
}

fn prop_rectangle_product(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    let t = RationalFunctionK::affine(1, 1);
    for (m, n, d) in [(1u32, 2usize, 2u32), (1, 2, 3), (1, 3, 2), (3, 2, 2)] {
        let lam = Composition::new(vec![m * d; n]);
        let mut expect = RationalFunctionK::one();
        for i in 1..=n {
            for j in 1..=(m * d) {
                expect = &expect * &RationalFunctionK::affine(i as i64, j as i64);
            }
        }
        check(hook_product(&lam, &t) == expect, || {
            format!("rectangle hook product fails at (md)^n = ({},{n})", m * d)
        })?;
    }
    Ok(())
}

fn prop_hook_edge_cases(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    let t = RationalFunctionK::affine(3, 2);
    check(hook_product(&Composition::zero(4), &t).is_one(), || {
        "empty diagram product ≠ 1".into()
    })?;
    // one-row diagrams have no legs: h((k), t) = ∏_j (t + k − j)
    for k in 1..=5i64 {
        let alpha = Composition::new(vec![k as u32]);
        let mut expect = RationalFunctionK::one();
        for j in 1..=k {
            expect = &expect * &(&t + &RationalFunctionK::from_int(k - j));
        }
        check(hook_product(&alpha, &t) == expect, || {
            format!("one-row hook product fails at k = {k}")
        })?;
    }
    for lam in [&[3, 2, 2][..], &[5, 1], &[2, 2, 1]] {
        let lam = Composition::new(lam.to_vec());
        check(
            e_factor(&lam, true).is_one() && e_factor(&lam, false).is_one(),
            || format!("𝓔±({lam}) ≠ 1 on a partition"),
        )?;
    }
    Ok(())
}

// ---- critical ----

fn prop_rectangular_uniqueness(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // unique pair for λ = ((md)^n): β = (0^n, m^{nd})
    for (m, n, d) in [(1u32, 2usize, 2usize), (1, 2, 3), (1, 3, 2), (3, 2, 2)] {
        let lam = Composition::new(vec![m * d as u32; n]);
        let maxlen = n * (d + 1);
        let pairs = critical_pairs(&lam, m, n as u32, maxlen).map_err(|e| e.to_string())?;
        let mut expect = vec![0u32; n];
        expect.extend(std::iter::repeat(m).take(n * d));
        check(pairs.len() == 1 && pairs[0].beta.parts() == expect, || {
            format!("rectangular uniqueness fails at (m,n,d) = ({m},{n},{d}): {pairs:?}")
        })?;
    }
    Ok(())
}

fn prop_uniqb_uniqueness(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // unique pair for λ̃ = (md−1, (md)^{n−1}): β = (m−1, 0^{n−1}, m^{nd−1})
    for (m, n, d) in [(1u32, 2usize, 2usize), (1, 2, 3), (1, 3, 2), (3, 2, 2)] {
        let mut lam = vec![(m * d as u32) - 1];
        lam.extend(std::iter::repeat(m * d as u32).take(n - 1));
        let lam = Composition::new(lam);
        let maxlen = n * (d + 1);
        let pairs = critical_pairs(&lam, m, n as u32, maxlen).map_err(|e| e.to_string())?;
        let mut expect = vec![m - 1];
        expect.extend(std::iter::repeat(0).take(n - 1));
        expect.extend(std::iter::repeat(m).take(n * d - 1));
        check(pairs.len() == 1 && pairs[0].beta.parts() == expect, || {
            format!("shifted uniqueness fails at (m,n,d) = ({m},{n},{d}): {pairs:?}")
        })?;
    }
    Ok(())
}

fn prop_general_pairs_half(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // λ = (6,4³,2³), κ₀ = −1/2: both quoted companions appear
    let lam = Composition::new(vec![6, 4, 4, 4, 2, 2, 2]);
    let pairs = critical_pairs(&lam, 1, 2, 12).map_err(|e| e.to_string())?;
    let betas: Vec<&[u32]> = pairs.iter().map(|p| p.beta.parts()).collect();
    let b1: &[u32] = &[6, 1, 1, 1, 2, 2, 2, 3, 3, 3];
    let b2: &[u32] = &[6, 0, 0, 0, 2, 4, 4, 1, 1, 1, 1, 4];
    check(betas.contains(&b1) && betas.contains(&b2), || {
        format!("expected companions missing among {} pairs", pairs.len())
    })
}

fn prop_general_pairs_third(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // λ = (3⁶), κ₀ = −1/3: both quoted companions appear
    let lam = Composition::new(vec![3; 6]);
    let pairs = critical_pairs(&lam, 1, 3, 15).map_err(|e| e.to_string())?;
    let betas: Vec<&[u32]> = pairs.iter().map(|p| p.beta.parts()).collect();
    let b1: &[u32] = &[1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2];
    let b2: &[u32] = &[1, 1, 1, 0, 0, 0, 2, 2, 2, 2, 2, 2, 1, 1, 1];
    check(betas.contains(&b1) && betas.contains(&b2), || {
        format!("expected companions missing among {} pairs", pairs.len())
    })
}

fn prop_critical_brute_agreement(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..3 {
        let nvars = rng.gen_range(1..=2);
        let alpha = loop {
            let a = rand_composition(rng, nvars, 3);
            if a.weight() >= 1 {
                break a;
            }
        };
        let (m, n) = [(1u32, 2u32), (1, 3), (2, 3), (3, 2)][rng.gen_range(0..4)];
        let maxlen = (alpha.length() + alpha.weight() as usize).min(6);
        let fast: Vec<Composition> = critical_pairs(&alpha, m, n, maxlen)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|p| p.beta.padded(maxlen))
            .collect();
        let mut brute: Vec<Composition> = compositions_of(alpha.weight() as u32, maxlen)
            .into_iter()
            .filter(|beta| is_critical_pair(&alpha, beta, m, n))
            .collect();
        brute.sort_unstable_by(|a, b| b.cmp(a));
        check(fast == brute, || {
            format!("search/brute mismatch at α = {alpha}, −{m}/{n}")
        })?;
    }
    Ok(())
}

// ---- singular ----

fn valid_pairs(nvars: usize, max_m0: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n0 in 2..=(nvars as u32) {
        for m0 in 1..=max_m0 {
            if m0 % n0 != 0 {
                out.push((m0, n0));
            }
        }
    }
    out
}

fn prop_index_divisibility(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // classified shapes satisfy n | (τᵢ+1) for i < ℓ(τ), and the index from
    // the closed form matches the tableau-content construction
    for nvars in 2..=8usize {
        for (m0, n0) in valid_pairs(nvars, 9) {
            let dat = datum(nvars, m0, n0).map_err(|e| e.to_string())?;
            for i in 1..dat.l {
                check((dat.tau.get(i) + 1) % dat.n == 0, || {
                    format!("divisibility fails at N={nvars}, ({m0},{n0}), i={i}")
                })?;
            }
            let from_contents =
                comb::lambda_from_isotype(&dat.tau, &dat.kappa0).map_err(|e| e.to_string())?;
            check(from_contents == dat.lambda, || {
                format!("index mismatch at N={nvars}, ({m0},{n0})")
            })?;
        }
    }
    Ok(())
}

fn prop_murphy_label_bijection(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    for nvars in 2..=6usize {
        for (m0, n0) in valid_pairs(nvars, 8) {
            let dat = datum(nvars, m0, n0).map_err(|e| e.to_string())?;
            if dat.degree > 8 {
                continue;
            }
            let labels = murphy_labels(&dat).map_err(|e| e.to_string())?;
            let count = syt_enumerate(&dat.tau).len();
            check(labels.len() == count, || {
                format!("label count ≠ SYT count at N={nvars}, ({m0},{n0})")
            })?;
            check(labels[0] == dat.lambda, || {
                format!("λ itself missing from labels at N={nvars}, ({m0},{n0})")
            })?;
        }
    }
    Ok(())
}

fn prop_decreasing_degrees(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // degree of the (dm, dn) module strictly decreases in d, with the
    // documented step m(dn + l − 2)
    for nvars in 3..=10usize {
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 3), (3, 2), (1, 4)] {
            let dmax = nvars as u32 / n;
            for dd in 1..dmax {
                if (dd * m) % (dd * n) == 0 {
                    continue;
                }
                let deg1 = module_degree(nvars, dd * m, dd * n).map_err(|e| e.to_string())?;
                let deg2 =
                    module_degree(nvars, (dd + 1) * m, (dd + 1) * n).map_err(|e| e.to_string())?;
                let dat = datum(nvars, dd * m, dd * n).map_err(|e| e.to_string())?;
                let step = (m * (dd * n + dat.l as u32 - 2)) as u64;
                check(deg1 == deg2 + step, || {
                    format!("degree step fails at N={nvars}, m/n={m}/{n}, d={dd}")
                })?;
            }
        }
    }
    Ok(())
}

fn prop_existence_small(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // every classified basis element is annihilated by all Dunkl operators
    for nvars in 2..=5usize {
        for (m0, n0) in valid_pairs(nvars, 8) {
            let dat = datum(nvars, m0, n0).map_err(|e| e.to_string())?;
            if dat.degree > 6 {
                continue;
            }
            let basis = singular_basis(&dat).map_err(|e| e.to_string())?;
            for b in &basis {
                check(verify_singular(b, &dat.kappa0), || {
                    format!("basis element not singular at N={nvars}, ({m0},{n0})")
                })?;
            }
        }
    }
    Ok(())
}

fn prop_kernel_matches_classification(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // kernel dimension equals the SYT count of the classified shape when the
    // degree matches a module degree, and zero otherwise
    for nvars in 2..=4usize {
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 3), (3, 2)] {
            if (n as usize) > nvars {
                continue;
            }
            let k0 = Rational::new(-(m as i64), n as i64);
            let mut expected: std::collections::BTreeMap<u64, usize> =
                std::collections::BTreeMap::new();
            for d in 1..=(nvars as u32 / n) {
                let dat = datum(nvars, d * m, d * n).map_err(|e| e.to_string())?;
                expected.insert(dat.degree, syt_enumerate(&dat.tau).len());
            }
            for degree in 1..=6u32 {
                let dim = singular_space(nvars, &k0, degree).len();
                let want = expected.get(&(degree as u64)).copied().unwrap_or(0);
                check(dim == want, || {
                    format!("kernel dim {dim} ≠ {want} at N={nvars}, κ₀={k0}, degree {degree}")
                })?;
            }
        }
    }
    Ok(())
}

fn prop_radical_pairs_to_zero(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // singular p pair to zero against every q of equal degree
    for (nvars, k0, degree) in [
        (3, Rational::new(-1, 2), 3u32),
        (3, Rational::new(-1, 3), 1),
        (4, Rational::new(-1, 3), 2),
    ] {
        for p in singular_space(nvars, &k0, degree) {
            for q_exp in monomial_basis(nvars, degree) {
                let q = PolyQ::monomial(q_exp, Rational::one());
                check(pairing(&q, &p, &k0).is_zero(), || {
                    format!("nonzero pairing at N={nvars}, κ₀={k0}, degree {degree}")
                })?;
            }
        }
    }
    Ok(())
}

fn prop_witness_nonzero(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // all valid witness plans with N ≤ 6 and m ≤ 3: nonzero limit
    for nvars in 2..=6usize {
        for tau in partitions_of(nvars as u32, nvars, nvars as u32) {
            if tau.length() < 2 {
                continue;
            }
            for n in 2..=6u32 {
                for m in 1..=3u32 {
                    let Ok(plan) = witness_plan(nvars, m, n, &tau) else {
                        continue;
                    };
                    let w = nonexistence_witness(&plan).map_err(|e| e.to_string())?;
                    check(!w.is_zero(), || {
                        format!("vanishing witness at N={nvars}, τ={tau}, −{m}/{n}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn prop_top_tableau_uniqueness(_rng: &mut ChaCha8Rng) -> Result<(), String> {
    // only T₀ has η_{s+1}(T) ≤ η_s(T) + 1 for all s, over all |τ| ≤ 7
    for w in 1..=7u32 {
        for tau in partitions_of(w, w as usize, w) {
            let t0 = top_tableau(&tau);
            for t in syt_enumerate(&tau) {
                let eta = t.contents();
                let slow = eta.windows(2).all(|e| e[1] <= e[0] + 1);
                check(slow == (t == t0), || {
                    format!("content test fails at τ = {tau}")
                })?;
            }
        }
    }
    Ok(())
}
