//! `singpoly`: exact computations with Dunkl operators, nonsymmetric Jack
//! polynomials, and singular-polynomial modules of the symmetric group.
//!
//! Exit codes: 0 on success, 1 on a mathematical verification failure,
//! 2 on argument errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use num::traits::{Signed, Zero};
use singpoly_core::comb::{Composition, Partition};
use singpoly_core::jack::{self, hook_product, nsjp};
use singpoly_core::poly::{PolyJson, PolyQ};
use singpoly_core::scalar::{Rational, RationalFunctionK, UniPolyK};
use singpoly_core::{checks, singular};

#[derive(Parser)]
#[command(
    name = "singpoly",
    about = "Dunkl operators, nonsymmetric Jack polynomials, and singular polynomials for S_N",
    version
)]
struct Cli {
    /// Worker threads for parallelizable kernels (also SINGPOLY_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute ζ_α^x over ℚ(κ), fully or a single coefficient.
    Nsjp(NsjpArgs),
    /// Hook-length products h(α, 1) and h(α, κ+1) with optional root orders.
    Hook(HookArgs),
    /// Enumerate the (−m/n)-critical pairs of a composition.
    CriticalPairs(CriticalPairsArgs),
    /// Classification data for a pair (m0, n0), optionally verified.
    Singular(SingularArgs),
    /// Exhaustive kernel of the Dunkl operators at a concrete κ₀.
    Kernel(KernelArgs),
    /// Nonexistence witness for an isotype with τ₂ ≥ n.
    Witness(WitnessArgs),
    /// Run the seeded property suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct NsjpArgs {
    /// Composition, e.g. "5,6" or "4^2,3^2,0^2".
    #[arg(long)]
    alpha: String,
    /// Ambient variable count N ≥ ℓ(α).
    #[arg(long)]
    nvars: usize,
    /// Print only the coefficient of this exponent.
    #[arg(long)]
    coef: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HookArgs {
    #[arg(long)]
    alpha: String,
    /// Report the multiplicity of (κ − κ₀) in each product at this κ₀.
    #[arg(long, allow_hyphen_values = true)]
    order_at: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CriticalPairsArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Ambient length bound for companions; defaults to ℓ(α) + |α|.
    #[arg(long)]
    maxlen: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SingularArgs {
    #[arg(long)]
    nvars: usize,
    #[arg(long)]
    m0: u32,
    #[arg(long)]
    n0: u32,
    /// Construct the basis and check every element against the Dunkl kernel.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long)]
    nvars: usize,
    /// Concrete parameter value, e.g. "-1/2".
    #[arg(long, allow_hyphen_values = true)]
    kappa0: String,
    #[arg(long)]
    degree: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    nvars: usize,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    /// Isotype shape, e.g. "3,2".
    #[arg(long)]
    tau: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// operators | jack | hooks | critical | singular | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("SINGPOLY_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        if t == 0 {
            return usage_error("--threads must be at least 1");
        }
        singpoly_core::set_threads(t);
    }
    match cli.command {
        Command::Nsjp(args) => run_nsjp(args),
        Command::Hook(args) => run_hook(args),
        Command::CriticalPairs(args) => run_critical_pairs(args),
        Command::Singular(args) => run_singular(args),
        Command::Kernel(args) => run_kernel(args),
        Command::Witness(args) => run_witness(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse::<Composition>()
        .map_err(|e| format!("bad composition {s:?}: {e}"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>()
        .map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Human κ-notation for an integer polynomial, descending powers.
fn poly_pretty(p: &UniPolyK) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for k in (0..=p.degree() as usize).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { "-" } else { "+" });
        }
        let mag_is_one = mag == 1u32.into();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag_is_one {
                    out.push_str(&mag.to_string());
                }
                out.push('κ');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    out
}

fn pretty_ratfun(f: &RationalFunctionK) -> String {
    let num = poly_pretty(f.num());
    if f.den().is_one() {
        return num;
    }
    let den = poly_pretty(f.den());
    let num_terms = f.num().coeffs().iter().filter(|c| !c.is_zero()).count();
    let num_wrapped = if num_terms > 1 {
        format!("({num})")
    } else {
        num
    };
    let den_wrapped = if f.den().degree() > 0 {
        format!("({den})")
    } else {
        den
    };
    format!("{num_wrapped} / {den_wrapped}")
}

fn run_nsjp(args: NsjpArgs) -> ExitCode {
    let alpha = match parse_composition(&args.alpha) {
        Ok(a) => a,
        Err(e) => return usage_error(e),
    };
    if alpha.length() > args.nvars {
        return usage_error(format!(
            "nvars {} is below ℓ(α) = {}",
            args.nvars,
            alpha.length()
        ));
    }
    let rec = nsjp(&alpha, args.nvars);
    if let Some(coef_str) = args.coef {
        let beta = match parse_composition(&coef_str) {
            Ok(b) if b.length() <= args.nvars => b.padded(args.nvars),
            Ok(b) => {
                return usage_error(format!("coefficient exponent {b} exceeds nvars"));
            }
            Err(e) => return usage_error(e),
        };
        let c = rec.poly.coef(&beta);
        if args.json {
            let out = json!({
                "alpha": rec.alpha.parts(),
                "nvars": args.nvars,
                "exp": beta.parts(),
                "num": poly_coeff_list(c.num()),
                "den": poly_coeff_list(c.den()),
            });
            println!("{out}");
        } else {
            println!("{}", pretty_ratfun(&c));
        }
    } else if args.json {
        match PolyJson::from_poly_k(&rec.poly) {
            Ok(js) => println!("{}", serde_json::to_string(&js).unwrap()),
            Err(e) => return usage_error(e),
        }
    } else {
        println!("{}", poly_text(&rec.poly));
    }
    ExitCode::SUCCESS
}

/// Readable polynomial form: terms in descending order, coefficients in
/// κ-notation, the zero exponent rendered as a bare coefficient.
fn poly_text(p: &singpoly_core::poly::PolyK) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (e, a) in p.terms_desc() {
        let coeff = pretty_ratfun(a);
        if e.is_zero() {
            parts.push(coeff);
        } else if coeff == "1" {
            parts.push(format!("x^({e})"));
        } else if coeff.contains(' ') || coeff.contains('+') || coeff[1..].contains('-') {
            parts.push(format!("({coeff})*x^({e})"));
        } else {
            parts.push(format!("{coeff}*x^({e})"));
        }
    }
    parts.join(" + ")
}

fn poly_coeff_list(p: &UniPolyK) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn run_hook(args: HookArgs) -> ExitCode {
    let alpha = match parse_composition(&args.alpha) {
        Ok(a) => a,
        Err(e) => return usage_error(e),
    };
    let order_at = match args.order_at.as_deref().map(parse_rational).transpose() {
        Ok(k) => k,
        Err(e) => return usage_error(e),
    };
    let h1 = hook_product(&alpha, &RationalFunctionK::one());
    let hk = hook_product(&alpha, &RationalFunctionK::affine(1, 1));
    let orders = order_at.as_ref().map(|k0| {
        (
            h1.vanishing_order(k0).unwrap_or(0),
            hk.vanishing_order(k0).unwrap_or(0),
        )
    });
    if args.json {
        let mut out = json!({
            "alpha": alpha.parts(),
            "h_at_one": poly_coeff_list(h1.num()),
            "h_at_kappa_plus_one": poly_coeff_list(hk.num()),
        });
        if let (Some(k0), Some((o1, ok))) = (&order_at, orders) {
            out["order_at"] = json!(k0.to_string());
            out["order_h_at_one"] = json!(o1);
            out["order_h_at_kappa_plus_one"] = json!(ok);
        }
        println!("{out}");
    } else {
        println!("h(α, 1)   = {}", pretty_ratfun(&h1));
        println!("h(α, κ+1) = {}", pretty_ratfun(&hk));
        if let (Some(k0), Some((o1, ok))) = (&order_at, orders) {
            println!("multiplicity of (κ − ({k0})) in h(α, 1):   {o1}");
            println!("multiplicity of (κ − ({k0})) in h(α, κ+1): {ok}");
        }
    }
    ExitCode::SUCCESS
}

fn run_critical_pairs(args: CriticalPairsArgs) -> ExitCode {
    let alpha = match parse_composition(&args.alpha) {
        Ok(a) => a,
        Err(e) => return usage_error(e),
    };
    let maxlen = args.maxlen.unwrap_or_else(|| jack::default_maxlen(&alpha));
    let pairs = match jack::critical_pairs(&alpha, args.m, args.n, maxlen) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    if args.json {
        let out = json!({
            "alpha": alpha.parts(),
            "m": args.m,
            "n": args.n,
            "maxlen": maxlen,
            "pairs": pairs.iter().map(|p| json!({"beta": p.beta.parts()})).collect::<Vec<_>>(),
        });
        println!("{out}");
    } else {
        println!(
            "{} critical pair(s) for α = {} at κ₀ = -{}/{} (maxlen {})",
            pairs.len(),
            alpha,
            args.m,
            args.n,
            maxlen
        );
        for p in &pairs {
            println!("{}", p.beta);
        }
    }
    ExitCode::SUCCESS
}

fn run_singular(args: SingularArgs) -> ExitCode {
    let dat = match singular::datum(args.nvars, args.m0, args.n0) {
        Ok(d) => d,
        Err(e) => return usage_error(e),
    };
    let mut verified: Option<(usize, usize, Vec<PolyQ>)> = None;
    if args.verify {
        match singular::singular_basis(&dat) {
            Ok(basis) => {
                let good = basis
                    .iter()
                    .filter(|b| singular::verify_singular(b, &dat.kappa0))
                    .count();
                verified = Some((good, basis.len(), basis));
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    }
    if args.json {
        let mut out = json!({
            "nvars": dat.nvars,
            "m0": dat.m0,
            "n0": dat.n0,
            "d": dat.d,
            "m": dat.m,
            "n": dat.n,
            "kappa0": dat.kappa0.to_string(),
            "tau": dat.tau.parts(),
            "l": dat.l,
            "lambda": dat.lambda.parts(),
            "degree": dat.degree,
        });
        if let Some((good, total, basis)) = &verified {
            out["verified"] = json!(good == total);
            out["basis_size"] = json!(total);
            let polys: Result<Vec<_>, _> = basis.iter().map(PolyJson::from_poly_q).collect();
            match polys {
                Ok(list) => {
                    out["basis"] = serde_json::to_value(
                        list.iter()
                            .map(|p| serde_json::to_value(p).unwrap())
                            .collect::<Vec<_>>(),
                    )
                    .unwrap()
                }
                Err(e) => return usage_error(e),
            }
        }
        println!("{out}");
        if let Some((good, total, _)) = verified {
            if good != total {
                return ExitCode::from(1);
            }
        }
    } else {
        println!(
            "κ₀ = {}  (d = {}, m = {}, n = {})",
            dat.kappa0, dat.d, dat.m, dat.n
        );
        println!("τ = {}", dat.tau);
        println!("λ = {}", dat.lambda);
        println!("degree = {}", dat.degree);
        if let Some((good, total, _)) = verified {
            println!("{good}/{total} basis elements singular");
            if good != total {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_kernel(args: KernelArgs) -> ExitCode {
    let k0 = match parse_rational(&args.kappa0) {
        Ok(k) => k,
        Err(e) => return usage_error(e),
    };
    if args.degree == 0 {
        return usage_error("degree must be at least 1");
    }
    let space = singular::singular_space(args.nvars, &k0, args.degree);
    let isotype = if space.is_empty() {
        None
    } else {
        match singular::isotype_of(&space, &k0) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    };
    if args.json {
        let polys: Result<Vec<_>, _> = space.iter().map(PolyJson::from_poly_q).collect();
        let polys = match polys {
            Ok(list) => list
                .iter()
                .map(|p| serde_json::to_value(p).unwrap())
                .collect::<Vec<_>>(),
            Err(e) => return usage_error(e),
        };
        let out = json!({
            "nvars": args.nvars,
            "kappa0": k0.to_string(),
            "degree": args.degree,
            "dimension": space.len(),
            "isotype": isotype.as_ref().map(|t| t.parts().to_vec()),
            "basis": polys,
        });
        println!("{out}");
    } else {
        println!(
            "kernel dimension {} at κ₀ = {}, degree {}",
            space.len(),
            k0,
            args.degree
        );
        if let Some(t) = isotype {
            println!("isotype τ = {t}");
        }
        for p in &space {
            println!("{p}");
        }
    }
    ExitCode::SUCCESS
}

fn run_witness(args: WitnessArgs) -> ExitCode {
    let tau = match args.tau.parse::<Partition>() {
        Ok(t) => t,
        Err(e) => return usage_error(format!("bad shape {:?}: {e}", args.tau)),
    };
    let plan = match singular::witness_plan(args.nvars, args.m, args.n, &tau) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    match singular::nonexistence_witness(&plan) {
        Ok(value) => {
            if args.json {
                let out = json!({
                    "nvars": plan.nvars,
                    "m": plan.m,
                    "n": plan.n,
                    "tau": plan.tau.parts(),
                    "lambda": plan.lambda.parts(),
                    "gamma": plan.gamma.parts(),
                    "value": value.to_string(),
                });
                println!("{out}");
            } else {
                println!("λ = {}", plan.lambda);
                println!("γ = {}", plan.gamma);
                println!("witness = {value}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let suites: Vec<checks::Suite> = match args.suite.as_str() {
        "operators" => vec![checks::Suite::Operators],
        "jack" => vec![checks::Suite::Jack],
        "hooks" => vec![checks::Suite::Hooks],
        "critical" => vec![checks::Suite::Critical],
        "singular" => vec![checks::Suite::Singular],
        "all" => checks::Suite::all().to_vec(),
        other => return usage_error(format!("unknown suite {other:?}")),
    };
    let mut all_ok = true;
    let mut reports = Vec::new();
    for suite in suites {
        let report = checks::run_suite(suite, args.seed);
        all_ok &= report.all_passed();
        reports.push(report);
    }
    if args.json {
        let out = json!({
            "seed": args.seed,
            "suites": reports.iter().map(|r| json!({
                "suite": r.suite,
                "passed": r.passed(),
                "total": r.results.len(),
                "failures": r.results.iter().filter_map(|p| {
                    p.error.as_ref().map(|e| json!({"property": p.name, "error": e}))
                }).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{out}");
    } else {
        for r in &reports {
            println!("{}", r.summary_line());
            for p in &r.results {
                if let Some(e) = &p.error {
                    println!("  FAIL {}: {e}", p.name);
                }
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
