//! Acceptance suite: one test per criterion, each printing a pass line on
//! completion. Expected values are frozen from independent derivations:
//! hand-checked closed forms and index tables, exhaustive small-scale
//! searches, and direct operator computations.

use singpoly_core::checks;
use singpoly_core::comb::{dominates_eq, partitions_of, syt_enumerate, Composition, Partition};
use singpoly_core::jack::{critical_pairs, hook_product, nsjp};
use singpoly_core::ops::dunkl;
use singpoly_core::poly::{scaled_limit_poly, PolyQ};
use singpoly_core::scalar::{Rational, RationalFunctionK, UniPolyK};
use singpoly_core::singular::{
    datum, isotype_of, module_degree, monomial_basis, nonexistence_witness, singular_basis,
    singular_space, verify_singular, witness_plan,
};

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec())
}

fn affine_product(factors: &[(i64, i64)]) -> UniPolyK {
    factors.iter().fold(UniPolyK::one(), |acc, &(a, b)| {
        &acc * &UniPolyK::from_ints(&[b, a])
    })
}

/// Criterion 1: the coefficient of ζ_{(5,6)} in five variables at the
/// exponent (2,0,3,3,3), matched exactly against its known closed form
/// after canonical normalization.
#[test]
fn c1_golden_coefficient() {
    let rec = nsjp(&comp(&[5, 6]), 5);
    let coeff = rec.poly.coef(&comp(&[2, 0, 3, 3, 3]));
    // 30κ³(1+κ)²(62κ³+135κ²+78κ+40)
    let num = &(&UniPolyK::from_ints(&[0, 0, 0, 30]) * &affine_product(&[(1, 1), (1, 1)]))
        * &UniPolyK::from_ints(&[40, 78, 135, 62]);
    // (2κ+3)(2κ+5)(κ+2)²(κ+3)²(κ+4)(κ+5)
    let den = affine_product(&[
        (2, 3),
        (2, 5),
        (1, 2),
        (1, 2),
        (1, 3),
        (1, 3),
        (1, 4),
        (1, 5),
    ]);
    let expect = RationalFunctionK::normalize(num, den).unwrap();
    assert_eq!(coeff, expect);
    println!("criterion 1 (golden coefficient): PASS");
}

/// Criterion 2: the N = 10, κ₀ = −1/3 index table for d = 1, 2, 3, with the
/// closed degree formula agreeing with |λ|.
#[test]
fn c2_index_table() {
    let cases: [(u32, u32, &[u32], u64); 3] = [
        (1, 3, &[4, 4, 3, 3, 2, 2, 1, 1, 0, 0], 20),
        (2, 6, &[4, 3, 3, 2, 2, 0, 0, 0, 0, 0], 14),
        (3, 9, &[3, 3, 0, 0, 0, 0, 0, 0, 0, 0], 6),
    ];
    for (m0, n0, lambda, degree) in cases {
        let dat = datum(10, m0, n0).unwrap();
        assert_eq!(dat.kappa0, Rational::new(-1, 3));
        assert_eq!(dat.lambda.parts(), lambda, "λ for ({m0},{n0})");
        // the closed formula (checked inside datum against the equivalent
        // form) must agree with the index weight
        assert_eq!(dat.degree, degree);
        assert_eq!(dat.lambda.weight(), degree);
        assert_eq!(module_degree(10, m0, n0).unwrap(), degree);
    }
    println!("criterion 2 (index table): PASS");
}

/// Criterion 3: the known critical-pair companions of (6,4³,2³) at −1/2
/// and of (3⁶) at −1/3, plus the hook-product multiplicities. The second
/// companion of (6,4³,2³) has twelve parts, so the enumeration bound is 12.
#[test]
fn c3_general_critical_pairs_and_hook_multiplicities() {
    let lam1 = comp(&[6, 4, 4, 4, 2, 2, 2]);
    let pairs = critical_pairs(&lam1, 1, 2, 12).unwrap();
    let betas: Vec<&[u32]> = pairs.iter().map(|p| p.beta.parts()).collect();
    assert!(betas.contains(&&[6, 1, 1, 1, 2, 2, 2, 3, 3, 3][..]));
    assert!(betas.contains(&&[6, 0, 0, 0, 2, 4, 4, 1, 1, 1, 1, 4][..]));
    // the first companion is already visible at the quoted bound 11
    let pairs11 = critical_pairs(&lam1, 1, 2, 11).unwrap();
    assert!(pairs11
        .iter()
        .any(|p| p.beta.parts() == [6, 1, 1, 1, 2, 2, 2, 3, 3, 3]));

    let lam2 = comp(&[3, 3, 3, 3, 3, 3]);
    let pairs = critical_pairs(&lam2, 1, 3, 15).unwrap();
    let betas: Vec<&[u32]> = pairs.iter().map(|p| p.beta.parts()).collect();
    assert!(betas.contains(&&[1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2][..]));
    assert!(betas.contains(&&[1, 1, 1, 0, 0, 0, 2, 2, 2, 2, 2, 2, 1, 1, 1][..]));

    let t = RationalFunctionK::affine(1, 1);
    let mult1 = hook_product(&lam1, &t)
        .vanishing_order(&Rational::new(-1, 2))
        .unwrap();
    assert_eq!(mult1, 3, "(2κ+1) multiplicity in h((6,4³,2³), κ+1)");
    let mult2 = hook_product(&lam2, &t)
        .vanishing_order(&Rational::new(-1, 3))
        .unwrap();
    assert_eq!(mult2, 2, "(3κ+1) multiplicity in h((3⁶), κ+1)");
    println!("criterion 3 (quoted critical pairs and hook multiplicities): PASS");
}

/// Criterion 4: exhaustive uniqueness of the rectangular critical pair and
/// its shifted companion for the four pinned (m, n, d) triples.
#[test]
fn c4_rectangular_uniqueness() {
    for (m, n, d) in [(1u32, 2usize, 2usize), (1, 2, 3), (1, 3, 2), (3, 2, 2)] {
        let maxlen = n * (d + 1);
        // λ = ((md)^n): unique companion (0^n, m^{nd})
        let lam = Composition::new(vec![m * d as u32; n]);
        let pairs = critical_pairs(&lam, m, n as u32, maxlen).unwrap();
        let mut expect = vec![0u32; n];
        expect.extend(std::iter::repeat(m).take(n * d));
        assert_eq!(pairs.len(), 1, "(m,n,d) = ({m},{n},{d})");
        assert_eq!(pairs[0].beta.parts(), expect);
        // λ̃ = (md−1, (md)^{n−1}): unique companion (m−1, 0^{n−1}, m^{nd−1})
        let mut tilde = vec![m * d as u32 - 1];
        tilde.extend(std::iter::repeat(m * d as u32).take(n - 1));
        let pairs = critical_pairs(&Composition::new(tilde), m, n as u32, maxlen).unwrap();
        let mut expect = vec![m - 1];
        expect.extend(std::iter::repeat(0).take(n - 1));
        expect.extend(std::iter::repeat(m).take(n * d - 1));
        assert_eq!(pairs.len(), 1, "shifted (m,n,d) = ({m},{n},{d})");
        assert_eq!(pairs[0].beta.parts(), expect);
    }
    println!("criterion 4 (rectangular uniqueness): PASS");
}

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

/// Criterion 5: for every valid pair with N ≤ 6 and module degree ≤ 8,
/// every classified basis element lies in the kernel of all Dunkl operators
/// at κ₀.
#[test]
fn c5_existence_and_singularity() {
    let mut modules = 0usize;
    for nvars in 2..=6usize {
        // module degree ≥ m0, so m0 ≤ 8 exhausts degree ≤ 8
        for (m0, n0) in valid_pairs(nvars, 8) {
            let dat = datum(nvars, m0, n0).unwrap();
            if dat.degree > 8 {
                continue;
            }
            let basis = singular_basis(&dat).unwrap();
            assert_eq!(basis.len(), syt_enumerate(&dat.tau).len());
            for b in &basis {
                assert!(
                    verify_singular(b, &dat.kappa0),
                    "not singular: N={nvars}, (m0,n0)=({m0},{n0})"
                );
            }
            modules += 1;
        }
    }
    assert!(modules >= 30, "expected a substantial sweep, got {modules}");
    println!("criterion 5 (existence & singularity over {modules} modules): PASS");
}

/// Row-reduction span equality over ℚ, independent of the library's
/// elimination code path.
fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    fn reduce(rows: &mut Vec<Vec<Rational>>, mut v: Vec<Rational>) -> bool {
        for row in rows.iter() {
            let lead = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = &v[lead] / &row[lead];
                for (x, y) in v.iter_mut().zip(row) {
                    *x = x.clone() - &(&f * y);
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            false
        } else {
            rows.push(v);
            rows.sort_by_key(|r| r.iter().position(|x| !x.is_zero()));
            true
        }
    }
    let dim = |vs: &[Vec<Rational>]| {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for v in vs {
            reduce(&mut rows, v.clone());
        }
        rows.len()
    };
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for v in a {
        reduce(&mut rows, v.clone());
    }
    let rank_a = rows.len();
    for v in b {
        if reduce(&mut rows, v.clone()) {
            return false;
        }
    }
    rank_a == dim(b)
}

/// Criterion 6: the N = 5, κ₀ = −1/2 kernel oracle agrees with the
/// classification: dimension 0 in degrees 1–4 and 6 in degree 5, isotype
/// (3,1,1) with the tableau count cross-checked by enumeration and by the
/// hook-length formula, and span equality with the classified basis.
#[test]
fn c6_uniqueness_oracle_equivalence() {
    let k0 = Rational::new(-1, 2);
    for degree in 1..=4u32 {
        assert!(
            singular_space(5, &k0, degree).is_empty(),
            "unexpected kernel in degree {degree}"
        );
    }
    let space = singular_space(5, &k0, 5);
    assert_eq!(space.len(), 6);
    for p in &space {
        assert!(verify_singular(p, &k0));
    }
    let tau = isotype_of(&space, &k0).unwrap();
    assert_eq!(tau.parts(), &[3, 1, 1]);
    // tableau count 6 by direct enumeration and by hook lengths
    assert_eq!(syt_enumerate(&tau).len(), 6);
    let hooks: u64 = [5, 2, 1, 2, 1].iter().product(); // shape (3,1,1)
    assert_eq!(120 / hooks, 6);

    let dat = datum(5, 2, 4).unwrap();
    assert_eq!(dat.degree, 5);
    let basis = singular_basis(&dat).unwrap();
    assert_eq!(basis.len(), 6);
    let cols = monomial_basis(5, 5);
    let coords = |p: &PolyQ| -> Vec<Rational> { cols.iter().map(|e| p.coef(e)).collect() };
    let a: Vec<Vec<Rational>> = space.iter().map(&coords).collect();
    let b: Vec<Vec<Rational>> = basis.iter().map(&coords).collect();
    assert!(
        same_span(&a, &b),
        "kernel and classified basis spans differ"
    );
    println!("criterion 6 (uniqueness at desk scale): PASS");
}

/// Criterion 7: the nonexistence witness equals −120 for (5, 3, 2, (3,2)),
/// confirmed by the independent oracle (direct Dunkl application to the full
/// ζ_λ and scaled coefficient extraction), and witnesses for the other two
/// pinned plans are nonzero.
#[test]
fn c7_nonexistence_witness() {
    let plan = witness_plan(5, 3, 2, &Partition::new(vec![3, 2])).unwrap();
    let w = nonexistence_witness(&plan).unwrap();
    assert_eq!(w, Rational::from_int(-120));

    // independent oracle: coef(𝒟_{ℓ(λ)}(κ) ζ_λ^x(κ), γ) at κ → −3/2 without
    // the cyclic-shift/insertion reductions
    let oracle = {
        let rec = nsjp(&plan.lambda, 5);
        let image = dunkl(&rec.poly, plan.lambda.length(), &RationalFunctionK::kappa());
        let limit = scaled_limit_poly(&image, &Rational::new(-3, 2), 0).unwrap();
        limit.coef(&plan.gamma)
    };
    assert_eq!(oracle, Rational::from_int(-120));

    // small plan, same double-checked route
    let plan = witness_plan(5, 1, 2, &Partition::new(vec![3, 2])).unwrap();
    let w = nonexistence_witness(&plan).unwrap();
    assert!(!w.is_zero());
    let oracle = {
        let rec = nsjp(&plan.lambda, 5);
        let image = dunkl(&rec.poly, plan.lambda.length(), &RationalFunctionK::kappa());
        let limit = scaled_limit_poly(&image, &Rational::new(-1, 2), 0).unwrap();
        limit.coef(&plan.gamma)
    };
    assert_eq!(w, oracle);

    let plan = witness_plan(10, 1, 2, &Partition::new(vec![3, 3, 3, 1])).unwrap();
    assert!(!nonexistence_witness(&plan).unwrap().is_zero());
    println!("criterion 7 (nonexistence witness): PASS");
}

/// Criterion 8: the property suites pass at seeds 1–5. The suites cover
/// operator commutativity/equivariance, the operator-sum identity,
/// ℬᵢⱼ + ℬⱼᵢ = 1, the invariant subspaces, the eigen-relation with
/// cross-index consistency, positivity, variable-count stability, the
/// insertion identity, the hook factorizations and drop ratio, the
/// Dunkl-shift identity, the simple pole at the unique critical pair, the
/// top-tableau content characterization, index divisibility, pairing
/// symmetry, and the singular-pairs-to-zero property.
#[test]
fn c8_property_suites_seeds_one_to_five() {
    for seed in 1..=5u64 {
        for suite in [
            checks::Suite::Operators,
            checks::Suite::Jack,
            checks::Suite::Hooks,
            checks::Suite::Critical,
        ] {
            let report = checks::run_suite(suite, seed);
            for r in &report.results {
                assert!(
                    r.error.is_none(),
                    "seed {seed}: {}::{} failed: {:?}",
                    report.suite,
                    r.name,
                    r.error
                );
            }
        }
        // the singular-side properties named by the criterion
        let report = checks::run_properties(
            checks::Suite::Singular,
            seed,
            &[
                "index_divisibility",
                "radical_pairs_to_zero",
                "top_tableau_uniqueness",
            ],
        );
        assert_eq!(report.results.len(), 3);
        for r in &report.results {
            assert!(
                r.error.is_none(),
                "seed {seed}: singular::{} failed: {:?}",
                r.name,
                r.error
            );
        }
    }
    println!("criterion 8 (property suites, seeds 1–5): PASS");
}

/// Supplementary: the classified index dominates the whole support of every
/// classified basis element (the ⊳-maximality that pins the isotype), over
/// the same sweep as criterion 5 restricted to N ≤ 5.
#[test]
fn classified_index_is_support_maximal() {
    for nvars in 2..=5usize {
        for (m0, n0) in valid_pairs(nvars, 6) {
            let dat = datum(nvars, m0, n0).unwrap();
            if dat.degree > 6 {
                continue;
            }
            for b in singular_basis(&dat).unwrap() {
                for (beta, _) in b.terms() {
                    assert!(
                        dominates_eq(&dat.lambda, beta),
                        "λ = {:?} does not dominate {beta:?}",
                        dat.lambda
                    );
                }
            }
        }
    }
}

/// Supplementary: completeness/uniqueness sweep over N ≤ 5, the four pinned
/// parameter values, and all degrees ≤ 6: kernel dimensions match the
/// classification exactly (SYT count at module degrees, zero elsewhere).
#[test]
fn uniqueness_sweep_small_scale() {
    for nvars in 2..=5usize {
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 3), (3, 2)] {
            if (n as usize) > nvars {
                continue;
            }
            let k0 = Rational::new(-(m as i64), n as i64);
            let mut expected = std::collections::BTreeMap::new();
            for d in 1..=(nvars as u32 / n) {
                let dat = datum(nvars, d * m, d * n).unwrap();
                expected.insert(dat.degree, syt_enumerate(&dat.tau).len());
            }
            for degree in 1..=6u32 {
                let dim = singular_space(nvars, &k0, degree).len();
                let want = expected.get(&(degree as u64)).copied().unwrap_or(0);
                assert_eq!(
                    dim, want,
                    "kernel dimension at N={nvars}, κ₀={k0}, degree {degree}"
                );
                if dim > 0 {
                    let space = singular_space(nvars, &k0, degree);
                    let tau = isotype_of(&space, &k0).unwrap();
                    let dat_deg: Vec<u32> = (1..=(nvars as u32 / n))
                        .filter(|&d| datum(nvars, d * m, d * n).unwrap().degree == degree as u64)
                        .collect();
                    assert_eq!(dat_deg.len(), 1);
                    let dat = datum(nvars, dat_deg[0] * m, dat_deg[0] * n).unwrap();
                    assert_eq!(tau.parts(), dat.tau.parts());
                }
            }
        }
    }
}

/// Supplementary: witness nonvanishing for every valid plan with N ≤ 6 and
/// m ≤ 3 (partitions τ of N with τ₂ ≥ n and the divisibility condition).
#[test]
fn witness_nonvanishing_all_small_plans() {
    let mut plans = 0;
    for nvars in 2..=6usize {
        for tau in partitions_of(nvars as u32, nvars, nvars as u32) {
            for n in 2..=6u32 {
                for m in 1..=3u32 {
                    let Ok(plan) = witness_plan(nvars, m, n, &tau) else {
                        continue;
                    };
                    let w = nonexistence_witness(&plan).unwrap();
                    assert!(!w.is_zero(), "N={nvars}, τ={tau}, −{m}/{n}");
                    plans += 1;
                }
            }
        }
    }
    assert_eq!(plans, 4, "expected exactly the four valid small plans");
}
