//! Command-line front end for the `mixedcyclic` library.
//!
//! Every subcommand reads a code-spec file (see the library's `codespec`
//! module for the format) except `factor` and `chains`, which take ring
//! parameters directly, and `verify-paper`, which runs the built-in reference
//! checks. Output is plain text and byte-stable for fixed inputs and flags;
//! `--machine` switches to terse line formats, `--stamp` prepends a wall-clock
//! header. The process exits nonzero on any validation failure or failed
//! check.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

use mixedcyclic::additivecode::TripleCode;
use mixedcyclic::analysis;
use mixedcyclic::codespec::{self, CodeSpec};
use mixedcyclic::cycliccode::CyclicChain;
use mixedcyclic::dualop;
use mixedcyclic::polyring::{divisor_chains, lifted_factorization, parse_poly, Poly};
use mixedcyclic::ringcore::{MixedParams, MixedWord, RingSpec};

#[derive(Parser)]
#[command(name = "mixedcyclic", version, about = "Additive cyclic codes over mixed chain-ring alphabets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Refuse to enumerate more than this many codewords (or chains).
    #[arg(long, global = true, default_value_t = 1u128 << 22)]
    cap: u128,
    /// Seed for the randomized sampling in check-duality.
    #[arg(long, global = true, default_value_t = 0xC0DE)]
    seed: u64,
    /// Terse machine-oriented line output.
    #[arg(long, global = true)]
    machine: bool,
    /// Prepend a wall-clock header (off by default so output is reproducible).
    #[arg(long, global = true)]
    stamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a code-spec file and run full standard-form validation.
    Validate { spec: PathBuf },
    /// Report size, family classification and separability.
    Info { spec: PathBuf },
    /// List the minimal generating set, grouped by layer.
    Genset { spec: PathBuf },
    /// Export the canonical generator matrix (or rebuild from matrix text).
    Matrix {
        input: PathBuf,
        /// Treat the input as matrix text and rebuild the code it spans.
        #[arg(long)]
        import: bool,
    },
    /// Stream every codeword (bounded by --cap).
    Enumerate { spec: PathBuf },
    /// Compute the dual code: its spec text and the size identity.
    Dual { spec: PathBuf },
    /// Check the duality theory on one code: sizes, double dual, pairing.
    CheckDuality { spec: PathBuf },
    /// Report the separability conditions.
    Separable { spec: PathBuf },
    /// Classify the code into one of the fourteen standard-form families.
    Classify { spec: PathBuf },
    /// Project onto the three blocks and print each chain.
    Project { spec: PathBuf },
    /// Minimum Hamming distance by exhaustive enumeration.
    Mindist { spec: PathBuf },
    /// Re-run the built-in reference examples and the optimal-code table.
    VerifyPaper,
    /// Factor x^n - 1 over Z_{p^a} via Hensel lifting.
    Factor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
    },
    /// List every divisor chain of x^n - 1 over Z_{p^a} with its code size.
    Chains {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    if cli.stamp {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let _ = writeln!(out, "# generated at unix time {secs}");
    }
    let status = run(&cli, &mut out);
    print!("{out}");
    match status {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

/// Ok(true) = success, Ok(false) = a requested check failed (report already
/// written), Err = hard error (bad input, invalid data).
fn run(cli: &Cli, out: &mut String) -> Result<bool, String> {
    match &cli.command {
        Command::Validate { spec } => validate(spec, cli.machine, out),
        Command::Info { spec } => info(spec, cli.machine, out),
        Command::Genset { spec } => genset(spec, cli.machine, out),
        Command::Matrix { input, import } => matrix(input, *import, out),
        Command::Enumerate { spec } => enumerate(spec, cli.cap, cli.machine, out),
        Command::Dual { spec } => dual(spec, cli.machine, out),
        Command::CheckDuality { spec } => check_duality(spec, cli.seed, cli.machine, out),
        Command::Separable { spec } => separable(spec, cli.machine, out),
        Command::Classify { spec } => classify(spec, cli.machine, out),
        Command::Project { spec } => project(spec, cli.machine, out),
        Command::Mindist { spec } => mindist(spec, cli.cap, cli.machine, out),
        Command::VerifyPaper => verify_paper(cli.cap, cli.machine, out),
        Command::Factor { n, p, a } => factor(*n, *p, *a, cli.machine, out),
        Command::Chains { n, p, a } => chains(*n, *p, *a, cli.cap, cli.machine, out),
    }
}

fn load(path: &PathBuf) -> Result<TripleCode, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let spec = CodeSpec::parse(&text).map_err(|e| e.to_string())?;
    spec.build().map_err(|e| e.to_string())
}

/// "(u coords | v coords | w coords)" with each block space-joined.
fn fmt_word(w: &MixedWord) -> String {
    let join = |c: &[u64]| c.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    format!("({} | {} | {})", join(w.block_u()), join(w.block_v()), join(w.block_w()))
}

fn fmt_flat(w: &MixedWord) -> String {
    w.to_flat().iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn validate(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    if machine {
        let _ = writeln!(out, "valid {}", code.code_size());
    } else {
        let _ = writeln!(out, "valid standard form");
        let _ = writeln!(out, "size = {}", code.code_size());
    }
    Ok(true)
}

fn info(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let family = code.classify().map_err(|e| e.to_string())?;
    let sep = code.is_separable();
    if machine {
        let _ = writeln!(out, "size {}", code.code_size());
        let _ = writeln!(out, "separable {sep}");
        let _ = writeln!(out, "family {family}");
    } else {
        let word = if sep { "separable" } else { "non-separable" };
        let _ = writeln!(out, "size = {}, {word}, case {family} family", code.code_size());
    }
    Ok(true)
}

fn genset(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let gs = code.min_genset();
    for (label, layers) in [("A", &gs.a_layers), ("B", &gs.b_layers), ("G", &gs.g_layers)] {
        for (i, layer) in layers.iter().enumerate() {
            for w in layer {
                if machine {
                    let _ = writeln!(out, "{}", fmt_flat(w));
                } else {
                    let _ = writeln!(out, "{label}{i}: {}", fmt_word(w));
                }
            }
        }
    }
    if !machine {
        let _ = writeln!(out, "total = {}", gs.total());
    }
    Ok(true)
}

fn matrix(input: &PathBuf, import: bool, out: &mut String) -> Result<bool, String> {
    let matrix = if import {
        let text = fs::read_to_string(input)
            .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
        let m = codespec::parse_matrix(&text).map_err(|e| e.to_string())?;
        let code = TripleCode::standard_form(m.params(), &m.to_words())
            .map_err(|e| e.to_string())?;
        code.echelon().as_matrix()
    } else {
        load(input)?.echelon().as_matrix()
    };
    out.push_str(&codespec::render_matrix(&matrix));
    Ok(true)
}

fn enumerate(path: &PathBuf, cap: u128, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let mut count = 0u128;
    for w in code.enumerate(cap).map_err(|e| e.to_string())? {
        if machine {
            let _ = writeln!(out, "{}", fmt_flat(&w));
        } else {
            let _ = writeln!(out, "{}", fmt_word(&w));
        }
        count += 1;
    }
    if !machine {
        let _ = writeln!(out, "{count} codewords");
    }
    Ok(true)
}

fn dual(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let dual = dualop::dual_code(&code).map_err(|e| e.to_string())?;
    let p = code.params();
    let exponent =
        p.r() as usize * p.alpha() + p.r() as usize * p.beta() + p.s() as usize * p.gamma();
    if machine {
        let _ = writeln!(out, "size {}", code.code_size());
        let _ = writeln!(out, "dualsize {}", dual.code_size());
    } else {
        let _ = writeln!(out, "size = {}", code.code_size());
        let _ = writeln!(out, "dual size = {}", dual.code_size());
        let _ = writeln!(out, "product = {}^{exponent}", p.p());
        out.push('\n');
    }
    out.push_str(&CodeSpec::from_code(&dual).render());
    Ok(true)
}

fn check_line(out: &mut String, machine: bool, key: &str, label: &str, ok: bool, detail: &str) {
    if machine {
        let _ = writeln!(out, "{key} {}", if ok { "pass" } else { "fail" });
    } else {
        let verdict = if ok { "pass" } else { "fail" };
        if detail.is_empty() {
            let _ = writeln!(out, "{label}: {verdict}");
        } else {
            let _ = writeln!(out, "{label}: {verdict} ({detail})");
        }
    }
}

fn check_duality(
    path: &PathBuf,
    seed: u64,
    machine: bool,
    out: &mut String,
) -> Result<bool, String> {
    let code = load(path)?;
    let params = *code.params();
    let dual = dualop::dual_code(&code).map_err(|e| e.to_string())?;
    let mut all = true;

    let exponent = params.r() as usize * (params.alpha() + params.beta())
        + params.s() as usize * params.gamma();
    let expect = (params.p() as u128).pow(exponent as u32);
    let ok = code.code_size() * dual.code_size() == expect;
    all &= ok;
    check_line(
        out,
        machine,
        "sizeidentity",
        "size identity",
        ok,
        &format!("{} * {} = {}^{exponent}", code.code_size(), dual.code_size(), params.p()),
    );

    let ok = dualop::dual_size(&code) == dual.code_size();
    all &= ok;
    check_line(out, machine, "sizeformula", "chain-degree size formula", ok, "");

    let ok = dualop::double_dual_check(&code).map_err(|e| e.to_string())?;
    all &= ok;
    check_line(out, machine, "doubledual", "double dual returns the code", ok, "");

    let mut pairs = 0;
    let mut ok = true;
    for g in code.generators() {
        for h in dual.generators() {
            pairs += 1;
            ok &= dualop::orthogonal_all_shifts(&params, &g, &h).map_err(|e| e.to_string())?;
        }
    }
    all &= ok;
    check_line(
        out,
        machine,
        "orthogonality",
        "generators orthogonal to dual generators",
        ok,
        &format!("{pairs} pairs, all shifts"),
    );

    // orthogonal_all_shifts internally cross-checks the polynomial pairing
    // against the inner product at every shift and errors on any mismatch,
    // so sampling random ambient words exercises the pairing identity.
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let samples = 50;
    for _ in 0..samples {
        let a = random_word(&params, &mut rng);
        let b = random_word(&params, &mut rng);
        dualop::orthogonal_all_shifts(&params, &a, &b).map_err(|e| e.to_string())?;
    }
    check_line(
        out,
        machine,
        "pairing",
        "pairing matches the inner product at every shift",
        true,
        &format!("{samples} random pairs"),
    );

    if !machine {
        let _ = writeln!(out, "{}", if all { "all checks passed" } else { "CHECKS FAILED" });
    }
    Ok(all)
}

fn random_word(params: &MixedParams, rng: &mut ChaCha20Rng) -> MixedWord {
    let mr = params.ring_r().modulus();
    let ms = params.ring_s().modulus();
    let u = (0..params.alpha()).map(|_| rng.gen_range(0..mr)).collect();
    let v = (0..params.beta()).map(|_| rng.gen_range(0..mr)).collect();
    let w = (0..params.gamma()).map(|_| rng.gen_range(0..ms)).collect();
    MixedWord::new(params, u, v, w).expect("sampled coordinates are in range")
}

fn separable(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let report = code.separability_report().map_err(|e| e.to_string())?;
    if !report.consistent() {
        return Err("separability conditions disagree; this is a bug".into());
    }
    let fields = [
        ("sizeproduct", "size equals product of projection sizes", report.size_product_match),
        ("directproduct", "span equals the product of projections", report.direct_product_span),
        ("mixinginchains", "mixing rows lie inside the chain codes", report.mixing_in_chains),
        (
            "projections",
            "projections equal the stored chains",
            report.projections_match_chains,
        ),
        (
            "unmixedspan",
            "unmixed generators span the code",
            report.unmixed_generators_span,
        ),
        ("canonicalzero", "canonical form has zero mixing rows", report.canonical_mixing_zero),
    ];
    for (key, label, value) in fields {
        if machine {
            let _ = writeln!(out, "{key} {value}");
        } else {
            let _ = writeln!(out, "{label}: {value}");
        }
    }
    if machine {
        let _ = writeln!(out, "separable {}", report.is_separable());
    } else {
        let _ =
            writeln!(out, "{}", if report.is_separable() { "separable" } else { "non-separable" });
    }
    Ok(true)
}

fn classify(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let family = code.classify().map_err(|e| e.to_string())?;
    if machine {
        let _ = writeln!(out, "{family}");
    } else {
        let _ = writeln!(out, "case {family} of 14");
    }
    Ok(true)
}

fn project(path: &PathBuf, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let (pa, pb, pg) = code.projections().map_err(|e| e.to_string())?;
    for (label, name, chain) in
        [("A", "first", &pa), ("B", "second", &pb), ("G", "third", &pg)]
    {
        if machine {
            for (i, f) in chain.chain().iter().enumerate() {
                let _ = writeln!(out, "{label}{i} {f}");
            }
        } else {
            let entries: Vec<String> =
                chain.chain().iter().map(codespec::pretty_poly).collect();
            let _ = writeln!(
                out,
                "{name} block over Z_{}[x]/(x^{} - 1): {}",
                chain.spec().modulus(),
                chain.n(),
                entries.join(", ")
            );
        }
    }
    Ok(true)
}

fn mindist(path: &PathBuf, cap: u128, machine: bool, out: &mut String) -> Result<bool, String> {
    let code = load(path)?;
    let d = analysis::min_distance(&code, cap).map_err(|e| e.to_string())?;
    if machine {
        let _ = writeln!(out, "{d}");
    } else {
        let _ = writeln!(out, "d = {d}");
    }
    Ok(true)
}

fn verify_paper(cap: u128, machine: bool, out: &mut String) -> Result<bool, String> {
    let mut checks: Vec<(String, Result<(), String>)> = vec![
        ("worked example (3,3,3) over Z2 Z2 Z4".into(), check_example_333()),
        ("worked example (3,3,5) over Z2 Z2 Z4".into(), check_example_335()),
        ("worked example (5,5,2) over Z3 Z3 Z9".into(), check_example_552()),
    ];
    let table = analysis::verify_table1(cap).map_err(|e| e.to_string())?;
    for row in &table.rows {
        let name = format!(
            "reference table row {}: [n,k,d] = [{},{},{}]",
            row.index, row.expected[0], row.expected[1], row.expected[2]
        );
        let result = if row.pass {
            Ok(())
        } else {
            Err(format!(
                "observed [{},{},{}]",
                row.observed[0], row.observed[1], row.observed[2]
            ))
        };
        checks.push((name, result));
    }

    let total = checks.len();
    let mut passed = 0;
    for (i, (name, result)) in checks.iter().enumerate() {
        let ok = result.is_ok();
        passed += ok as usize;
        if machine {
            let _ = writeln!(out, "check {} {}", i + 1, if ok { "pass" } else { "fail" });
        } else {
            match result {
                Ok(()) => {
                    let _ = writeln!(out, "check {}: {name}: pass", i + 1);
                }
                Err(reason) => {
                    let _ = writeln!(out, "check {}: {name}: fail ({reason})", i + 1);
                }
            }
        }
    }
    if machine {
        let _ = writeln!(out, "passed {passed}/{total}");
    } else {
        let _ = writeln!(out, "{passed}/{total} checks passed");
    }
    Ok(passed == total)
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// The |C| = 32 example: minimal generating set and size.
fn check_example_333() -> Result<(), String> {
    let params = MixedParams::new(2, 1, 2, 3, 3, 3).map_err(|e| e.to_string())?;
    let r2 = params.ring_r();
    let r4 = params.ring_s();
    let gens = [
        word_from(&params, "1 1 1", "0", "0", r2, r4)?,
        word_from(&params, "1", "1 1", "3 1 1", r2, r4)?,
    ];
    let code = TripleCode::standard_form(&params, &gens).map_err(|e| e.to_string())?;
    ensure(code.code_size() == 32, "expected 32 codewords")?;
    ensure(code.enumerate(1 << 10).map_err(|e| e.to_string())?.count() == 32, "span count 32")?;
    let gs = code.min_genset();
    ensure(gs.total() == 4, "expected 4 minimal generators")?;
    let flats: Vec<Vec<u64>> = gs.all().iter().map(MixedWord::to_flat).collect();
    let expected: Vec<Vec<u64>> = vec![
        vec![1, 1, 1, 0, 0, 0, 0, 0, 0],
        vec![1, 0, 0, 1, 1, 0, 3, 1, 1],
        vec![1, 1, 0, 1, 0, 1, 2, 2, 0],
        vec![0, 1, 1, 1, 1, 0, 0, 2, 2],
    ];
    ensure(flats == expected, "minimal generating set differs from the reference listing")
}

/// The (3,3,5) example: standard form recovery and the membership claim.
fn check_example_335() -> Result<(), String> {
    let params = MixedParams::new(2, 1, 2, 3, 3, 5).map_err(|e| e.to_string())?;
    let r2 = params.ring_r();
    let r4 = params.ring_s();
    let gens = [
        word_from(&params, "1 1", "1 1", "0", r2, r4)?,
        word_from(&params, "0", "0", "3 1 1 1 1", r2, r4)?,
    ];
    let code = TripleCode::standard_form(&params, &gens).map_err(|e| e.to_string())?;
    let one_plus_x = parse_poly(r2, "1 1").map_err(|e| e.to_string())?;
    ensure(code.a_chain().is_zero(), "first-block chain should be trivial")?;
    ensure(code.b_chain().chain() == [one_plus_x.clone()], "B = 1 + x")?;
    ensure(code.l() == &one_plus_x, "l = 1 + x")?;
    ensure(code.l1().is_zero() && code.l2().is_zero(), "l1 = l2 = 0")?;
    let theta5 = Poly::theta(r4, 5);
    ensure(
        code.g_chain().chain() == [theta5, Poly::one(r4)],
        "third-block chain should be (theta_5, 1)",
    )?;
    // Every codeword has equal first and second blocks, both multiples of 1+x.
    for w in code.enumerate(1 << 12).map_err(|e| e.to_string())? {
        ensure(w.block_u() == w.block_v(), "first and second blocks must agree")?;
        let u = Poly::from_coeffs(r2, w.block_u().to_vec());
        ensure(code.b_chain().contains(&u), "first block must be a multiple of 1 + x")?;
    }
    Ok(())
}

/// The (5,5,2) example: the span of the printed generators saturates the
/// first block, and the printed data is itself rejected as a standard form.
fn check_example_552() -> Result<(), String> {
    let params = MixedParams::new(3, 1, 2, 5, 5, 2).map_err(|e| e.to_string())?;
    let r3 = params.ring_r();
    let r9 = params.ring_s();
    let gens = [
        word_from(&params, "1 1 1 1 1", "0", "0", r3, r9)?,
        word_from(&params, "1 1", "2 1", "0", r3, r9)?,
        word_from(&params, "1", "0", "4 1", r3, r9)?,
    ];
    let code = TripleCode::standard_form(&params, &gens).map_err(|e| e.to_string())?;
    ensure(code.a_chain().is_full(), "first block saturates")?;
    ensure(
        code.b_chain().chain() == [parse_poly(r3, "2 1").map_err(|e| e.to_string())?],
        "B = 2 + x",
    )?;
    ensure(
        code.g_chain().chain()
            == [parse_poly(r9, "1 1").map_err(|e| e.to_string())?, Poly::one(r9)],
        "third-block chain (1 + x, 1)",
    )?;
    ensure(code.l().is_zero() && code.l1().is_zero() && code.l2().is_zero(), "no mixing")?;
    ensure(code.code_size() == 531_441, "expected 3^12 codewords")?;
    ensure(code.is_separable(), "the code is separable")?;
    // The generator data printed alongside the example does not satisfy the
    // compatibility conditions, so it must not be accepted as already being
    // in standard form.
    let rejected = TripleCode::build(
        &params,
        vec![Poly::theta(r3, 5)],
        vec![parse_poly(r3, "2 1").map_err(|e| e.to_string())?],
        vec![parse_poly(r9, "1 1").map_err(|e| e.to_string())?, Poly::one(r9)],
        parse_poly(r3, "1 1").map_err(|e| e.to_string())?,
        Poly::one(r3),
        Poly::zero(r3),
    );
    ensure(rejected.is_err(), "the printed read-off data must fail validation")
}

fn word_from(
    params: &MixedParams,
    u: &str,
    v: &str,
    w: &str,
    rr: RingSpec,
    rs: RingSpec,
) -> Result<MixedWord, String> {
    let up = parse_poly(rr, u).map_err(|e| e.to_string())?;
    let vp = parse_poly(rr, v).map_err(|e| e.to_string())?;
    let wp = parse_poly(rs, w).map_err(|e| e.to_string())?;
    Ok(mixedcyclic::additivecode::word_from_polys(params, &up, &vp, &wp))
}

fn factor(n: usize, p: u64, a: u32, machine: bool, out: &mut String) -> Result<bool, String> {
    let spec = RingSpec::new(p, a).map_err(|e| e.to_string())?;
    let fac = lifted_factorization(spec, n).map_err(|e| e.to_string())?;
    if machine {
        for f in fac.lifted_factors() {
            let _ = writeln!(out, "{f}");
        }
    } else {
        let parts: Vec<String> = fac.lifted_factors().iter().map(codespec::pretty_poly).collect();
        let _ = writeln!(out, "{}", parts.join(", "));
    }
    Ok(true)
}

fn chains(n: usize, p: u64, a: u32, cap: u128, machine: bool, out: &mut String) -> Result<bool, String> {
    let spec = RingSpec::new(p, a).map_err(|e| e.to_string())?;
    let iter = divisor_chains(spec, n).map_err(|e| e.to_string())?;
    let count = iter.chain_count();
    if count > cap {
        return Err(format!("{count} chains exceed the cap {cap}; raise --cap"));
    }
    for (i, chain) in iter.enumerate() {
        let size = CyclicChain::new(spec, n, chain.clone())
            .map_err(|e| e.to_string())?
            .size();
        if machine {
            let entries: Vec<String> = chain.iter().map(Poly::to_string).collect();
            let _ = writeln!(out, "{size} {}", entries.join(" ; "));
        } else {
            let entries: Vec<String> = chain.iter().map(codespec::pretty_poly).collect();
            let _ = writeln!(out, "chain {i}: {} -> size {size}", entries.join(", "));
        }
    }
    if !machine {
        let _ = writeln!(out, "total {count} chains");
    }
    Ok(true)
}
