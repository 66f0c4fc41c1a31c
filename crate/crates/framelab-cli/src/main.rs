//! `framelab` — certify dihedral-frame properties from the command line.
//!
//! Exit codes: 0 = pass, 2 = mathematical fail, 1 = usage/parse error.

mod literal;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use framelab::cyclotomic::{conductor_for, CycloNum};
use framelab::dihedral::{GroupElement, RepKind, Representation};
use framelab::erasure;
use framelab::minors::{
    self, chebotarev_check, check_haar, even_dependence_certificate, pair_independence_tau,
    HaarCertificate, Mode, Status, Witness,
};
use framelab::sampling;
use framelab::sympoly::prime_case_audit;
use itertools::Itertools;

const EXIT_PASS: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_FAIL: u8 = 2;

#[derive(Parser)]
#[command(
    name = "framelab",
    version,
    about = "Dihedral-group frame certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the Haar property of an orbit (all C(2n,d) minors).
    CheckHaar(CheckHaarArgs),
    /// Verify the even-order dependence identity Σ A^{2k} = Σ A^{2k}B.
    CertifyEven {
        #[arg(long)]
        n: u32,
    },
    /// Enumerate every minor of the unnormalized DFT matrix.
    Chebotarev {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "exact")]
        mode: String,
    },
    /// Erasure simulation over all maximal patterns.
    AuditErasures(AuditErasuresArgs),
    /// Symbolic nonvanishing audit of det δ_Λ(f) over subsets of Σ.
    PrimeAudit {
        #[arg(long)]
        n: u32,
        /// Subsets sampled when exhaustive enumeration is too large (n = 7).
        #[arg(long, default_value_t = 24)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Pairwise independence audit for the two-dimensional representation τ_j.
    TauAudit(TauAuditArgs),
}

#[derive(Args)]
struct CheckHaarArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value = "kappa")]
    rep: String,
    #[arg(long, default_value = "exact")]
    mode: String,
    /// Vector literal, e.g. "i,-i,1,1+i,2-i".
    #[arg(long, conflicts_with = "random")]
    vector: Option<String>,
    /// Draw seeded random Gaussian-rational vectors instead.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random vectors to certify.
    #[arg(long, default_value_t = 1)]
    trials: u32,
    /// Write a JSON report here.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct AuditErasuresArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value = "kappa")]
    rep: String,
    #[arg(long, conflicts_with = "random")]
    vector: Option<String>,
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write per-pattern reports (pattern;condition;error) here.
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Args)]
struct TauAuditArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    j: u32,
    /// Two-entry vector literal, e.g. "1+i,2".
    #[arg(long, conflicts_with = "random")]
    vector: Option<String>,
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap defaults to exit code 2 for usage errors; the contract
            // here is 1 for usage problems, 0 for help/version.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e);
                return ExitCode::from(EXIT_PASS);
            }
            eprint!("{}", e);
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match cli.command {
        Command::CheckHaar(args) => cmd_check_haar(args),
        Command::CertifyEven { n } => cmd_certify_even(n),
        Command::Chebotarev { n, mode } => cmd_chebotarev(n, &mode),
        Command::AuditErasures(args) => cmd_audit_erasures(args),
        Command::PrimeAudit { n, samples, seed } => cmd_prime_audit(n, samples, seed),
        Command::TauAudit(args) => cmd_tau_audit(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse_rep(spec: &str, n: u32) -> Result<Representation, String> {
    let kind = match spec {
        "kappa" => RepKind::Kappa,
        "sigma" => RepKind::Sigma,
        "char:trivial" => RepKind::CharTrivial,
        "char:sign" => RepKind::CharSign,
        "char:rot" => RepKind::CharRot,
        "char:rotsign" => RepKind::CharRotSign,
        other => match other.strip_prefix("tau:") {
            Some(j) => {
                let j: u32 = j
                    .parse()
                    .map_err(|_| format!("bad tau parameter in {:?}", other))?;
                RepKind::Tau(j)
            }
            None => return Err(format!("unknown representation {:?}", other)),
        },
    };
    Representation::new(kind, n).map_err(|e| e.to_string())
}

fn parse_mode(spec: &str) -> Result<Mode, String> {
    match spec {
        "exact" => Ok(Mode::Exact),
        "float" => Ok(Mode::Float),
        other => Err(format!("mode must be exact or float, got {:?}", other)),
    }
}

fn parse_or_sample_vectors(
    vector: &Option<String>,
    random: bool,
    n: u32,
    dim: usize,
    seed: u64,
    trials: u32,
) -> Result<Vec<Vec<CycloNum>>, String> {
    let conductor = conductor_for(n);
    match (vector, random) {
        (Some(text), _) => {
            let v = literal::parse_vector(text, n)?;
            if v.len() != dim {
                return Err(format!(
                    "vector has {} entries, representation dimension is {}",
                    v.len(),
                    dim
                ));
            }
            Ok(vec![v])
        }
        (None, true) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..trials.max(1))
                .map(|_| sampling::random_vector(dim, conductor, &mut rng))
                .collect())
        }
        (None, false) => Err("provide --vector or --random".to_string()),
    }
}

fn witness_strings(witness: &Witness, n: u32) -> Vec<String> {
    match witness {
        Witness::Exact(w) => w.iter().map(|x| x.to_literal(n)).collect(),
        Witness::Float(w) => w
            .iter()
            .map(|z| format!("{:.6}{:+.6}i", z.re, z.im))
            .collect(),
    }
}

fn print_certificate(cert: &HaarCertificate, n: u32) {
    match cert.status {
        Status::Pass => {
            if cert.mode == Mode::Exact {
                println!(
                    "PASS: all {} subsets are bases (exact)",
                    cert.subsets_checked
                );
            } else {
                println!(
                    "numerically nonsingular: all {} subsets (float; not a certificate)",
                    cert.subsets_checked
                );
            }
        }
        Status::Fail => {
            let subset = cert
                .failing_subset
                .as_ref()
                .map(|s| s.iter().map(|g| g.to_string()).join(", "))
                .unwrap_or_default();
            println!(
                "FAIL: dependent subset {{{}}} after {} subsets",
                subset, cert.subsets_checked
            );
            if let Some(w) = &cert.kernel_witness {
                println!("kernel witness: [{}]", witness_strings(w, n).join(", "));
            }
        }
    }
}

fn certificate_json(
    cert: &HaarCertificate,
    n: u32,
    rep: &str,
    seed: Option<u64>,
) -> serde_json::Value {
    serde_json::json!({
        "n": n,
        "rep": rep,
        "mode": cert.mode.to_string(),
        "status": cert.status.to_string(),
        "subsets_checked": cert.subsets_checked,
        "failing_subset": cert
            .failing_subset
            .as_ref()
            .map(|s| s.iter().map(|g| g.to_string()).collect::<Vec<_>>()),
        "kernel_witness": cert.kernel_witness.as_ref().map(|w| witness_strings(w, n)),
        "seed": seed,
    })
}

fn cmd_check_haar(args: CheckHaarArgs) -> Result<u8, String> {
    let rep = parse_rep(&args.rep, args.n)?;
    let mode = parse_mode(&args.mode)?;
    let vectors = parse_or_sample_vectors(
        &args.vector,
        args.random,
        args.n,
        rep.dim(),
        args.seed,
        args.trials,
    )?;
    let seed = args.random.then_some(args.seed);
    let mut reports = Vec::new();
    let mut any_fail = false;
    for (idx, v) in vectors.iter().enumerate() {
        let m = minors::orbit_matrix(&rep, v).map_err(|e| e.to_string())?;
        let cert = check_haar(&m, mode);
        if vectors.len() > 1 {
            let entries: Vec<String> = v.iter().map(|x| x.to_literal(args.n)).collect();
            println!("vector {} = ({})", idx, entries.join(", "));
        }
        print_certificate(&cert, args.n);
        any_fail |= cert.status == Status::Fail;
        reports.push(certificate_json(&cert, args.n, &args.rep, seed));
    }
    if let Some(path) = &args.json {
        let body = if reports.len() == 1 {
            reports.into_iter().next().unwrap()
        } else {
            serde_json::Value::Array(reports)
        };
        let mut f = BufWriter::new(File::create(path).map_err(|e| e.to_string())?);
        serde_json::to_writer_pretty(&mut f, &body).map_err(|e| e.to_string())?;
        f.write_all(b"\n").map_err(|e| e.to_string())?;
    }
    Ok(if any_fail { EXIT_FAIL } else { EXIT_PASS })
}

fn cmd_certify_even(n: u32) -> Result<u8, String> {
    let cert = even_dependence_certificate(n).map_err(|e| e.to_string())?;
    println!("identity: {}", cert.identity);
    println!(
        "plus set: {{{}}}",
        cert.plus_set.iter().map(|g| g.to_string()).join(", ")
    );
    println!(
        "minus set: {{{}}}",
        cert.minus_set.iter().map(|g| g.to_string()).join(", ")
    );
    println!("VERIFIED: identity holds entrywise in exact arithmetic");
    Ok(EXIT_PASS)
}

fn cmd_chebotarev(n: u32, mode: &str) -> Result<u8, String> {
    if n < 2 {
        return Err("chebotarev requires n >= 2".to_string());
    }
    let mode = parse_mode(mode)?;
    let report = chebotarev_check(n, mode);
    if report.all_nonzero {
        match mode {
            Mode::Exact => println!(
                "all {} minors nonzero (exact certificate)",
                report.minors_checked
            ),
            Mode::Float => println!(
                "all {} minors numerically nonsingular (float; not a certificate)",
                report.minors_checked
            ),
        }
        Ok(EXIT_PASS)
    } else {
        let (rows, cols) = report.zero_minor_witness.unwrap();
        println!(
            "zero minor found: rows {{{}}} cols {{{}}} (after {} minors)",
            rows.iter().join(", "),
            cols.iter().join(", "),
            report.minors_checked
        );
        Ok(EXIT_FAIL)
    }
}

fn cmd_audit_erasures(args: AuditErasuresArgs) -> Result<u8, String> {
    let rep = parse_rep(&args.rep, args.n)?;
    let vectors =
        parse_or_sample_vectors(&args.vector, args.random, args.n, rep.dim(), args.seed, 1)?;
    let v = &vectors[0];
    let m = minors::orbit_matrix(&rep, v).map_err(|e| e.to_string())?;
    let bounds = erasure::frame_bounds(&m);
    println!(
        "frame bounds: a = {:.6e}, b = {:.6e}{}",
        bounds.lower,
        bounds.upper,
        if bounds.is_frame() {
            ""
        } else {
            "  (not a frame)"
        }
    );
    // The probe signal is seeded for reproducibility.
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(0x5eed));
    let u: Vec<Complex64> = (0..rep.dim())
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let summary = if let Some(path) = &args.csv {
        let mut f = BufWriter::new(File::create(path).map_err(|e| e.to_string())?);
        erasure::audit_patterns_csv(&m, &u, &mut f).map_err(|e| e.to_string())?
    } else {
        erasure::exhaustive_erasure_audit(&m, &u)
    };
    println!(
        "patterns: {}, singular: {}, worst error: {:.3e}, worst condition: {:.3e} (probe seed {})",
        summary.patterns_checked,
        summary.singular_patterns,
        summary.worst_error,
        summary.worst_condition,
        args.seed
    );
    Ok(if summary.singular_patterns == 0 {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn cmd_prime_audit(n: u32, samples: usize, seed: u64) -> Result<u8, String> {
    if n < 3 || !is_prime(n) {
        return Err(format!("prime-audit requires prime n >= 3, got {}", n));
    }
    if n > 7 {
        return Err("symbolic audits are sized for n <= 7".to_string());
    }
    let elements = GroupElement::enumerate(n);
    let subsets: Vec<Vec<GroupElement>> = if n <= 5 {
        elements.iter().copied().combinations(n as usize).collect()
    } else {
        // n = 7: sample C(14,7) subsets.
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all: Vec<Vec<GroupElement>> =
            elements.iter().copied().combinations(n as usize).collect();
        all.choose_multiple(&mut rng, samples.min(all.len()))
            .cloned()
            .collect()
    };
    let mut failures = 0usize;
    for lambda in &subsets {
        let report = prime_case_audit(n, lambda).map_err(|e| e.to_string())?;
        if !report.nonzero || !report.homogeneous {
            failures += 1;
            println!(
                "CONTRADICTION: subset {{{}}} nonzero={} homogeneous={}",
                lambda.iter().map(|g| g.to_string()).join(", "),
                report.nonzero,
                report.homogeneous
            );
        }
    }
    println!(
        "audited {} subsets of Sigma for n={} (seed {}): {} contradictions",
        subsets.len(),
        n,
        seed,
        failures
    );
    Ok(if failures == 0 { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_tau_audit(args: TauAuditArgs) -> Result<u8, String> {
    let conductor = conductor_for(args.n);
    // Validity check up front so bad j exits 1.
    Representation::new(RepKind::Tau(args.j), args.n).map_err(|e| e.to_string())?;
    let v: [CycloNum; 2] = match (&args.vector, args.random) {
        (Some(text), _) => {
            let parsed = literal::parse_vector(text, args.n)?;
            if parsed.len() != 2 {
                return Err(format!("tau vectors have 2 entries, got {}", parsed.len()));
            }
            [parsed[0].clone(), parsed[1].clone()]
        }
        (None, true) => {
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let v = sampling::random_vector_nonzero_entries(2, conductor, &mut rng);
            [v[0].clone(), v[1].clone()]
        }
        (None, false) => return Err("provide --vector or --random".to_string()),
    };
    let report = pair_independence_tau(args.n, args.j, &v).map_err(|e| e.to_string())?;
    let deps = report.dependent_pairs();
    println!(
        "tau_{} on D_{}: {} element pairs, {} dependent",
        args.j,
        2 * args.n,
        report.pairs.len(),
        deps.len()
    );
    for (g, h) in &deps {
        println!("dependent pair: {{{}, {}}}", g, h);
    }
    Ok(if deps.is_empty() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}
