//! Batch interface: field inspection, code construction and verification,
//! length enumeration, and coverage reports.
//!
//! Exit codes: 0 success, 1 parameter/validation failure, 2 verification
//! failure (a constructed code missing its predicted property), 64 usage.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grs_selfdual::construct::{self, Family, SelfOrthVariant, TheoremParams, Variant};
use grs_selfdual::enumerate::{self, CSV_HEADER};
use grs_selfdual::field::FieldCtx;
use grs_selfdual::grs::{CodeExport, GrsCode};
use grs_selfdual::verify::{self, VerifyOptions};
use grs_selfdual::Error;

const EXIT_INVALID: u8 = 1;
const EXIT_FALSIFIED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "grs-selfdual",
    version,
    about = "MDS self-dual, self-orthogonal, and almost self-dual codes over GF(r^2)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the canonical field realization for (p, m)
    FieldInfo {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
    },
    /// Validate parameters, build the code, verify it, and write its export
    Construct(ConstructArgs),
    /// Re-verify an exported code
    Verify(VerifyArgs),
    /// List achievable even lengths for one construction family
    Enumerate {
        /// Odd prime power r; the field is GF(r^2)
        #[arg(long)]
        r: u64,
        #[arg(long, value_enum)]
        family: SourceArg,
        /// Write CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Coverage statistics for q = r^2 against the literature baselines
    Coverage {
        #[arg(long)]
        r: u64,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run the worked-example membership checks and a small-field sweep
    Examples,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    e1: u64,
    #[arg(long)]
    e2: u64,
    #[arg(long)]
    s: u64,
    #[arg(long)]
    t: u64,
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Coset indices for the M part (comma separated; default 0..s)
    #[arg(long, value_delimiter = ',')]
    i_indices: Option<Vec<u64>>,
    /// Coset indices for the N part (comma separated; default 0..t)
    #[arg(long, value_delimiter = ',')]
    j_indices: Option<Vec<u64>>,
    /// Write the code export here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Force the full Gram-matrix check regardless of length
    #[arg(long, conflicts_with = "sampled")]
    full: bool,
    /// Force sampled verification
    #[arg(long)]
    sampled: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "T31", alias = "t31")]
    T31,
    #[value(name = "T32", alias = "t32")]
    T32,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::T31 => Family::T31,
            FamilyArg::T32 => Family::T32,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    #[value(name = "n")]
    N,
    #[value(name = "n+1")]
    NPlusOne,
    #[value(name = "n+2")]
    NPlusTwo,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::N => Variant::N,
            VariantArg::NPlusOne => Variant::NPlusOne,
            VariantArg::NPlusTwo => Variant::NPlusTwo,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    #[value(name = "T31", alias = "t31")]
    T31,
    #[value(name = "T32", alias = "t32")]
    T32,
    #[value(name = "REF18", alias = "ref18")]
    Ref18,
    #[value(name = "REF20", alias = "ref20")]
    Ref20,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn invalid(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_INVALID, message: message.into() }
}

fn falsified(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_FALSIFIED, message: message.into() }
}

/// Construction-time errors that mean "the predicted property failed",
/// as opposed to bad parameters.
fn classify_construct(e: Error) -> CliError {
    match e {
        Error::MixedCharacter { .. }
        | Error::CharacterViolation { .. }
        | Error::OmegaRoot { .. }
        | Error::NonSquare => falsified(e.to_string()),
        other => invalid(other.to_string()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::FieldInfo { p, m } => field_info(p, m),
        Cmd::Construct(args) => do_construct(args),
        Cmd::Verify(args) => do_verify(args),
        Cmd::Enumerate { r, family, csv } => do_enumerate(r, family, csv),
        Cmd::Coverage { r, json } => do_coverage(r, json),
        Cmd::Examples => do_examples(),
    }
}

fn field_info(p: u64, m: u32) -> Result<(), CliError> {
    let ctx = FieldCtx::new(p, m).map_err(|e| invalid(e.to_string()))?;
    let s = ctx.summary();
    println!("GF({}) = GF({}^{})", ctx.q(), p, 2 * m);
    println!("  r        = {}", ctx.r());
    println!("  modulus  = {:?} (ascending degree, monic)", s.modulus);
    println!("  theta    = {:?} (multiplicative order {})", s.theta, ctx.q() - 1);
    let factors: Vec<String> =
        ctx.q1_factors().iter().map(|(p, e)| format!("{p}^{e}")).collect();
    println!("  q - 1    = {}", factors.join(" * "));
    println!("  tables   = {}", if ctx.has_tables() { "log/antilog" } else { "none" });
    Ok(())
}

fn do_construct(args: ConstructArgs) -> Result<(), CliError> {
    let ctx =
        Arc::new(FieldCtx::new(args.p, args.m).map_err(|e| invalid(e.to_string()))?);
    let family: Family = args.family.into();
    let variant: Variant = args.variant.into();
    let params = match (args.i_indices, args.j_indices) {
        (None, None) => TheoremParams::new(ctx, family, args.e1, args.e2, args.s, args.t),
        (i, j) => TheoremParams::with_indices(
            ctx,
            family,
            args.e1,
            args.e2,
            args.s,
            args.t,
            i.unwrap_or_else(|| (0..args.s).collect()),
            j.unwrap_or_else(|| (0..args.t).collect()),
        ),
    }
    .map_err(|e| invalid(e.to_string()))?;

    let case = construct::validate(&params).map_err(|e| invalid(e.to_string()))?;
    eprintln!(
        "case report: n1 = {}, D1 = {}, D2 = {}, variants: n={} n+1={} n+2={}",
        case.n1,
        case.d1,
        case.d2,
        case.variant_n,
        case.variant_n_plus_one,
        case.variant_n_plus_two
    );
    if !case.allows(variant) {
        let why = if case.notes.is_empty() {
            format!("n1 = {} has the wrong parity for this variant", case.n1)
        } else {
            case.notes.join("; ")
        };
        return Err(invalid(format!("variant {variant} does not apply: {why}")));
    }
    let set = construct::build_eval_set(&params).map_err(|e| invalid(e.to_string()))?;
    let profile = construct::character_profile(&set).map_err(classify_construct)?;
    eprintln!(
        "character profile: M {:?} / N {:?} (predicted {} / {}), constant = {}",
        profile.m_char, profile.n_char, profile.predicted_m, profile.predicted_n, profile.constant
    );
    if !profile.agrees() {
        return Err(falsified("computed characters disagree with the closed forms"));
    }

    let code = construct::construct_code(&params, variant).map_err(classify_construct)?;
    let verdict = verify::is_self_dual(&code);
    if !verdict.pass {
        return Err(falsified(format!(
            "constructed [{},{}] code failed self-duality: {:?}",
            code.length(),
            code.dimension(),
            verdict.witness
        )));
    }
    eprintln!(
        "built [{},{}] self-dual code over GF({}), verification {:?}",
        code.length(),
        code.dimension(),
        code.ctx().q(),
        verdict.mode
    );
    write_export(&code.export(), args.out.as_deref())
}

fn write_export(export: &CodeExport, out: Option<&std::path::Path>) -> Result<(), CliError> {
    let mut json =
        serde_json::to_string_pretty(export).map_err(|e| invalid(e.to_string()))?;
    json.push('\n');
    match out {
        Some(path) => fs::write(path, json)
            .map_err(|e| invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn do_verify(args: VerifyArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| invalid(format!("cannot read {}: {e}", args.input.display())))?;
    let export: CodeExport =
        serde_json::from_str(&text).map_err(|e| invalid(format!("bad export: {e}")))?;
    let code = GrsCode::from_export(&export).map_err(|e| invalid(e.to_string()))?;
    let n = code.length();
    let k = code.dimension();

    let opts = VerifyOptions {
        full_limit: if args.full {
            usize::MAX
        } else if args.sampled {
            0
        } else {
            VerifyOptions::default().full_limit
        },
        samples: VerifyOptions::default().samples,
        seed: args.seed,
    };
    let verdict = if n % 2 == 0 && k == n / 2 {
        verify::is_self_dual_with(&code, &opts)
    } else if n % 2 == 1 && k == (n - 1) / 2 {
        verify::is_almost_self_dual(&code)
    } else {
        verify::is_self_orthogonal(&code)
    };
    println!("{}", serde_json::to_string(&verdict).map_err(|e| invalid(e.to_string()))?);
    if verdict.pass {
        Ok(())
    } else {
        Err(falsified(format!("[{n},{k}] code failed {:?}", verdict.property)))
    }
}

fn do_enumerate(r: u64, family: SourceArg, csv: Option<PathBuf>) -> Result<(), CliError> {
    let q = r.checked_mul(r).ok_or_else(|| invalid("r is too large"))?;
    let records = match family {
        SourceArg::T31 => enumerate::lengths_theorem(q, Family::T31),
        SourceArg::T32 => enumerate::lengths_theorem(q, Family::T32),
        SourceArg::Ref18 => enumerate::lengths_ref18(q),
        SourceArg::Ref20 => enumerate::lengths_ref20(q),
    }
    .map_err(|e| invalid(e.to_string()))?;
    let mut body = String::from(CSV_HEADER);
    body.push('\n');
    for rec in &records {
        body.push_str(&rec.csv_row(q));
        body.push('\n');
    }
    match csv {
        Some(path) => {
            fs::write(&path, body)
                .map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("{} lengths written to {}", records.len(), path.display());
        }
        None => {
            print!("{body}");
            eprintln!("{} lengths", records.len());
        }
    }
    Ok(())
}

fn do_coverage(r: u64, json: bool) -> Result<(), CliError> {
    let q = r.checked_mul(r).ok_or_else(|| invalid("r is too large"))?;
    let cov = enumerate::coverage(q).map_err(|e| invalid(e.to_string()))?;
    if json {
        println!("{}", serde_json::to_string_pretty(&cov).map_err(|e| invalid(e.to_string()))?);
    } else {
        println!("{cov}");
    }
    Ok(())
}

fn do_examples() -> Result<(), CliError> {
    let mut failures = 0usize;
    let mut check = |name: &str, ok: bool| {
        println!("{}: {}", name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    // worked-example memberships
    let t31 = enumerate::lengths_theorem(149 * 149, Family::T31)
        .map_err(|e| invalid(e.to_string()))?;
    let ns: BTreeSet<u64> = t31.iter().map(|x| x.n).collect();
    check(
        "lengths {4944, 6172, 7504, 8180, 9018} over GF(149^2)",
        [4944u64, 6172, 7504, 8180, 9018].iter().all(|n| ns.contains(n)),
    );
    let t32 = enumerate::lengths_theorem(151 * 151, Family::T32)
        .map_err(|e| invalid(e.to_string()))?;
    let ns: BTreeSet<u64> = t32.iter().map(|x| x.n).collect();
    check(
        "lengths {6616, 7148, 8288, 9592, 10040} over GF(151^2)",
        [6616u64, 7148, 8288, 9592, 10040].iter().all(|n| ns.contains(n)),
    );

    // small-field exhaustive sweep
    for q in [9u64, 25, 49] {
        let (_, p, m) = enumerate::odd_prime_power_root(q).map_err(|e| invalid(e.to_string()))?;
        let ctx = Arc::new(FieldCtx::new(p, m).map_err(|e| invalid(e.to_string()))?);
        let mut codes = 0usize;
        let mut all_pass = true;
        for family in [Family::T31, Family::T32] {
            for params in construct::enumerate_valid_params(&ctx, family) {
                let case = match construct::validate(&params) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                for variant in Variant::ALL {
                    if !case.allows(variant) {
                        continue;
                    }
                    match construct::construct_code(&params, variant) {
                        Ok(code) => {
                            codes += 1;
                            all_pass &= verify::is_self_dual(&code).pass;
                        }
                        Err(_) => all_pass = false,
                    }
                }
                if case.almost_self_dual {
                    match construct::construct_almost_self_dual(&params) {
                        Ok(code) => {
                            codes += 1;
                            all_pass &= verify::is_almost_self_dual(&code).pass;
                        }
                        Err(_) => all_pass = false,
                    }
                }
                if case.self_orthogonal_plain {
                    let k = (case.n1 / 2 - 1) as usize;
                    match construct::construct_self_orthogonal(&params, k, SelfOrthVariant::Plain)
                    {
                        Ok(code) => {
                            codes += 1;
                            all_pass &= verify::is_self_orthogonal(&code).pass;
                        }
                        Err(_) => all_pass = false,
                    }
                }
                if case.self_orthogonal_augmented {
                    let k = (case.n1 / 2) as usize;
                    match construct::construct_self_orthogonal(
                        &params,
                        k,
                        SelfOrthVariant::ZeroAugmented,
                    ) {
                        Ok(code) => {
                            codes += 1;
                            all_pass &= verify::is_self_orthogonal(&code).pass;
                        }
                        Err(_) => all_pass = false,
                    }
                }
            }
        }
        check(&format!("exhaustive sweep over GF({q}) ({codes} codes)"), all_pass && codes > 0);
    }

    std::io::stdout().flush().ok();
    if failures > 0 {
        Err(falsified(format!("{failures} example check(s) failed")))
    } else {
        Ok(())
    }
}
