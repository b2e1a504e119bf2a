//! Command-line surface for exact binary-octic invariants.
//!
//! Every command prints a single JSON document on standard output. All
//! scalar values are serialized as exact `"num/den"` strings (denominator
//! omitted when 1); nothing is ever a floating-point number. Errors print a
//! machine-readable `{"error": ...}` object and exit with a per-kind code
//! (see the exit-code table in the README).

mod output;
mod parse;

use clap::{Parser, Subcommand};
use octavics::passage::{rederive_passage_coefficients_with_samples, OcticSampler, PassageTarget};
use octavics::{
    absolute_invariants, classify_reduction, cluster_signature, discriminant, i20_from_roots,
    i20_from_shioda, shioda_from_tsuyumine, shioda_invariants, tsuyumine_from_roots,
    tsuyumine_from_shioda, BinaryForm, Int, Rat, ShiodaVector, SplitOctic, TsuyumineVector,
};
use output::{fail, CliError};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "octavics",
    about = "Exact invariants of binary octics (genus-3 hyperelliptic curves)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct FormInput {
    /// Univariate polynomial in x, degree 7 or 8, e.g. "x^7+1786*x^5+44441*x^3+278179*x"
    #[arg(value_name = "POLY")]
    poly: Option<String>,
    /// Coefficient list c0,c1,...,c8 (ascending powers of x)
    #[arg(long, value_name = "LIST", conflicts_with = "poly")]
    coeffs: Option<String>,
    /// Eight roots r1,...,r8 ("inf" for the point at infinity)
    #[arg(long, value_name = "LIST")]
    roots: Option<String>,
    /// Require degree exactly 8 (no automatic homogenization of degree 7)
    #[arg(long)]
    strict_octic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Shioda and Tsuyumine invariants and the discriminant
    Invariants {
        #[command(flatten)]
        input: FormInput,
        /// Compute Tsuyumine invariants by the S8 root sums (needs --roots)
        #[arg(long)]
        from_roots: bool,
        /// Add best-effort factored renderings
        #[arg(long)]
        factored: bool,
    },
    /// Convert between Shioda and Tsuyumine 9-vectors
    Convert {
        /// Shioda vector J2,...,J10
        #[arg(long, value_name = "LIST", conflicts_with = "tsuyumine")]
        shioda: Option<String>,
        /// Tsuyumine vector I2,...,I10
        #[arg(long, value_name = "LIST")]
        tsuyumine: Option<String>,
        #[arg(long)]
        factored: bool,
    },
    /// The degree-20 invariant, via the weight-20 table (and the S8 root
    /// sum when roots are given)
    I20 {
        #[command(flatten)]
        input: FormInput,
        #[arg(long)]
        factored: bool,
    },
    /// Absolute (weight-0) invariants
    Absolute {
        #[command(flatten)]
        input: FormInput,
    },
    /// Reduction type at a prime (residue characteristic not 2, 3, 5, 7)
    Reduction {
        #[command(flatten)]
        input: FormInput,
        /// The residue characteristic
        #[arg(long, value_name = "P")]
        prime: String,
    },
    /// p-adic valuations of pairwise root differences
    Cluster {
        /// Eight finite rational roots r1,...,r8
        #[arg(long, value_name = "LIST")]
        roots: String,
        #[arg(long, value_name = "P")]
        prime: String,
    },
    /// Rederive a passage table by exact interpolation and diff it against
    /// the shipped data
    VerifyPassage {
        /// Target table: I2..I10 or I20
        #[arg(long, value_name = "TARGET")]
        target: String,
        /// Octics to sample per attempt (default: the number of monomials)
        #[arg(long, value_name = "N")]
        samples: Option<usize>,
        /// Seed for the root sampler
        #[arg(long, value_name = "S", default_value = "1")]
        seed: u64,
    },
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("valid JSON")
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&e.to_json()).expect("valid JSON")
            );
            ExitCode::from(e.code)
        }
    }
}

/// OCTIC_THREADS caps the rayon pool used by the S8 sums and the
/// interpolation harness.
fn configure_threads() {
    if let Ok(v) = std::env::var("OCTIC_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

/// The resolved curve input: always a degree-8 form, plus the roots when
/// they were given.
struct ResolvedInput {
    form: BinaryForm,
    roots: Option<SplitOctic>,
    description: Value,
}

fn resolve_input(input: &FormInput) -> Result<ResolvedInput, CliError> {
    let given = [
        input.poly.is_some(),
        input.coeffs.is_some(),
        input.roots.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if given == 0 {
        return fail::usage("provide a polynomial, --coeffs, or --roots");
    }
    if given > 1 {
        return fail::usage("provide exactly one of: polynomial, --coeffs, --roots");
    }
    if let Some(text) = &input.poly {
        let parsed = parse::parse_polynomial(text).map_err(CliError::parse)?;
        let form = parsed
            .to_octic(input.strict_octic)
            .map_err(CliError::degree)?;
        return Ok(ResolvedInput {
            form,
            roots: None,
            description: describe_polynomial(&parsed),
        });
    }
    if let Some(text) = &input.coeffs {
        let coeffs = parse::parse_rational_list(text).map_err(CliError::parse)?;
        let parsed = parse::CurveInput::from_coeffs(coeffs).map_err(CliError::degree)?;
        let form = parsed
            .to_octic(input.strict_octic)
            .map_err(CliError::degree)?;
        return Ok(ResolvedInput {
            form,
            roots: None,
            description: describe_polynomial(&parsed),
        });
    }
    let text = input.roots.as_ref().expect("one input is set");
    let octic = parse::parse_roots(text).map_err(CliError::parse)?;
    let form = octic.to_form();
    Ok(ResolvedInput {
        form,
        roots: Some(octic),
        description: json!({ "roots": text.trim() }),
    })
}

fn describe_polynomial(parsed: &parse::CurveInput) -> Value {
    let coeffs: Vec<String> = parsed.coeffs().iter().map(|c| c.to_string()).collect();
    json!({ "polynomial": parsed.to_text(), "coefficients": coeffs })
}

fn nine_vector(text: &str) -> Result<[Rat; 9], CliError> {
    let values = parse::parse_rational_list(text).map_err(CliError::parse)?;
    if values.len() != 9 {
        return fail::usage(format!("expected 9 values, got {}", values.len()));
    }
    Ok(values.try_into().expect("nine values"))
}

fn parse_prime(text: &str) -> Result<Int, CliError> {
    text.trim()
        .parse::<Int>()
        .map_err(|e| CliError::usage_error(format!("bad prime {text:?}: {e}")))
}

fn run(command: Command) -> Result<Value, CliError> {
    match command {
        Command::Invariants {
            input,
            from_roots,
            factored,
        } => {
            let resolved = resolve_input(&input)?;
            if from_roots && resolved.roots.is_none() {
                return fail::usage("--from-roots needs --roots");
            }
            let j = shioda_invariants(&resolved.form).map_err(CliError::degree)?;
            let d = discriminant(&resolved.form).map_err(CliError::degree)?;
            let (i, source) = match (&resolved.roots, from_roots) {
                (Some(roots), true) => (tsuyumine_from_roots(roots), "root-sums"),
                _ => (tsuyumine_from_shioda(&j), "passage-tables"),
            };
            let mut out = serde_json::Map::new();
            out.insert("input".into(), resolved.description);
            out.insert("shioda".into(), output::shioda_json(&j, factored));
            out.insert("tsuyumine".into(), output::tsuyumine_json(&i, factored));
            out.insert("tsuyumine_source".into(), json!(source));
            out.insert("discriminant".into(), output::rat_json(&d, factored));
            Ok(Value::Object(out))
        }
        Command::Convert {
            shioda,
            tsuyumine,
            factored,
        } => match (shioda, tsuyumine) {
            (Some(text), None) => {
                let j = ShiodaVector::new(nine_vector(&text)?);
                let i = tsuyumine_from_shioda(&j);
                Ok(json!({
                    "shioda": output::shioda_json(&j, factored),
                    "tsuyumine": output::tsuyumine_json(&i, factored),
                    "direction": "shioda-to-tsuyumine",
                }))
            }
            (None, Some(text)) => {
                let i = TsuyumineVector::new(nine_vector(&text)?);
                let j = shioda_from_tsuyumine(&i);
                Ok(json!({
                    "tsuyumine": output::tsuyumine_json(&i, factored),
                    "shioda": output::shioda_json(&j, factored),
                    "direction": "tsuyumine-to-shioda",
                }))
            }
            _ => fail::usage("provide exactly one of --shioda, --tsuyumine"),
        },
        Command::I20 { input, factored } => {
            let resolved = resolve_input(&input)?;
            let j = shioda_invariants(&resolved.form).map_err(CliError::degree)?;
            let via_table = i20_from_shioda(&j);
            let mut out = serde_json::Map::new();
            out.insert("input".into(), resolved.description);
            out.insert("i20".into(), output::rat_json(&via_table, factored));
            if let Some(roots) = &resolved.roots {
                let via_roots = i20_from_roots(roots);
                out.insert(
                    "i20_from_roots".into(),
                    output::rat_json(&via_roots, factored),
                );
                out.insert("match".into(), json!(via_roots == via_table));
            }
            Ok(Value::Object(out))
        }
        Command::Absolute { input } => {
            let resolved = resolve_input(&input)?;
            let j = shioda_invariants(&resolved.form).map_err(CliError::degree)?;
            let d = discriminant(&resolved.form).map_err(CliError::degree)?;
            let i = tsuyumine_from_shioda(&j);
            let abs = absolute_invariants(&i, &d).map_err(CliError::passage)?;
            Ok(json!({
                "input": resolved.description,
                "absolute": abs.values().iter().map(output::rat_string).collect::<Vec<_>>(),
            }))
        }
        Command::Reduction { input, prime } => {
            let resolved = resolve_input(&input)?;
            let p = parse_prime(&prime)?;
            let verdict = classify_reduction(&resolved.form, &p).map_err(CliError::reduction)?;
            Ok(json!({
                "input": resolved.description,
                "prime": p.to_string(),
                "verdict": output::verdict_code(verdict.verdict),
                "verdict_text": verdict.verdict.to_string(),
                "v_sh_discriminant": verdict.v_sh_discriminant.to_string(),
                "v_sh_i20": verdict.v_sh_i20.to_string(),
                "caveat": verdict.caveat,
            }))
        }
        Command::Cluster { roots, prime } => {
            let octic = parse::parse_roots(&roots).map_err(CliError::parse)?;
            let p = parse_prime(&prime)?;
            let sig = cluster_signature(&octic, &p).map_err(CliError::roots)?;
            let entries: Vec<Value> = sig
                .entries()
                .iter()
                .map(|((i, j), v)| json!({ "pair": [i + 1, j + 1], "valuation": v.to_string() }))
                .collect();
            let multiset: Vec<String> = sig.multiset().iter().map(|v| v.to_string()).collect();
            Ok(json!({
                "prime": p.to_string(),
                "entries": entries,
                "multiset": multiset,
            }))
        }
        Command::VerifyPassage {
            target,
            samples,
            seed,
        } => {
            let target = parse_target(&target)?;
            let mut sampler = OcticSampler::new(seed);
            let table = rederive_passage_coefficients_with_samples(target, &mut sampler, samples)
                .map_err(CliError::passage)?;
            let shipped = target.shipped_table();
            let matches = &table == shipped;
            let coefficients: Vec<Value> = table
                .terms()
                .iter()
                .map(
                    |(exps, c)| json!({ "exponents": exps.to_vec(), "coefficient": c.to_string() }),
                )
                .collect();
            Ok(json!({
                "target": target.to_string(),
                "weight": table.weight(),
                "monomials": table.terms().len(),
                "match": matches,
                "coefficients": coefficients,
            }))
        }
    }
}

fn parse_target(text: &str) -> Result<PassageTarget, CliError> {
    let t = text.trim().to_ascii_uppercase();
    if t == "I20" {
        return Ok(PassageTarget::I20);
    }
    if let Some(k) = t.strip_prefix('I').and_then(|s| s.parse::<u32>().ok()) {
        if (2..=10).contains(&k) {
            return Ok(PassageTarget::I(k));
        }
    }
    fail::usage(format!("bad target {text:?}: expected I2..I10 or I20"))
}
