//! Command-line front end: parse, oracle, generate, verify, codec, bench.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use lzcmp::codec::{decode, encode, TokenStream};
use lzcmp::generators::{gen_random, generate, FamilyId, FamilyParams};
use lzcmp::harness::{
    default_theorem1_inputs, default_theorem2_grid, emit_csv, emit_json, verify_lemma2,
    verify_theorem1, verify_theorem2, verify_theorem3, RandomSweep, Report,
};
use lzcmp::{
    dot_notation_of, min_parsing_size, parse_greedy, Parsing, Text, TransformConfig, Variant,
};

#[derive(Parser)]
#[command(
    name = "lzcmp",
    version,
    about = "Compute, compare, and verify the four greedy LZ77-type parsings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a text and print the phrase count
    Parse {
        /// One of lz, novlz, lz3, novlz3
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        /// Text given directly (printable ASCII)
        #[arg(long, group = "src")]
        text: Option<String>,
        /// Read the text from a file instead
        #[arg(long, group = "src")]
        input: Option<PathBuf>,
        /// Treat the input file as whitespace-separated symbol ids
        /// (required for alphabets larger than 256)
        #[arg(long)]
        ints: bool,
        #[arg(long, value_enum, default_value_t = ParseFormat::Text)]
        format: ParseFormat,
        /// Also print the parsing in dot notation
        #[arg(long)]
        phrases: bool,
    },
    /// Minimum parsing size over all parsings of a type, with a witness
    Oracle {
        #[arg(long = "type", value_parser = parse_variant)]
        ty: Variant,
        #[arg(long)]
        text: String,
    },
    /// Generate a family string
    Generate {
        /// unary-blocks, gray-blocks, powers-a, powers-b, powers-c,
        /// ab-power, recursive, thue-morse, random
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        sigma: Option<u32>,
        #[arg(long)]
        z: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Use the truncated variant (powers-b, powers-c)
        #[arg(long)]
        truncated: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification sweep; exits 1 if any hard check fails
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Family parameter bound for t3 (powers-c capped at 12)
        #[arg(long, default_value_t = 14)]
        kmax: u32,
        /// Random strings in the t3 sweep / random samples for lemma2
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        /// Threshold coefficient for the t1 transform
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
    },
    /// Parse a file and write the token-stream container
    CodecEncode {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode a token-stream container back into a file
    CodecDecode {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// If given, must match the container header
        #[arg(long, value_parser = parse_variant)]
        variant: Option<Variant>,
    },
    /// Time the greedy parser on a random text
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        sigma: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ParseFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Lemma2,
    T1,
    T2,
    T3,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::from_name(s).ok_or_else(|| format!("unknown variant `{s}` (lz|novlz|lz3|novlz3)"))
}

/// Usage errors exit 2, runtime failures (including failed checks) exit 1.
enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }

    fn failure(e: impl std::fmt::Display) -> Self {
        CliError::Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Parse {
            variant,
            text,
            input,
            ints,
            format,
            phrases,
        } => cmd_parse(variant, text, input, ints, format, phrases),
        Command::Oracle { ty, text } => cmd_oracle(ty, &text),
        Command::Generate {
            family,
            k,
            n,
            sigma,
            z,
            seed,
            truncated,
            out,
        } => {
            let id = FamilyId::from_name(&family)
                .ok_or_else(|| CliError::Usage(format!("unknown family `{family}`")))?;
            let params = FamilyParams {
                k,
                n,
                sigma,
                z,
                seed,
                truncated,
            };
            let text = generate(id, &params).map_err(CliError::usage)?;
            write_text(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            out,
            format,
            kmax,
            samples,
            seed,
            alpha,
        } => cmd_verify(target, out, format, kmax, samples, seed, alpha),
        Command::CodecEncode {
            variant,
            input,
            out,
        } => {
            let bytes = fs::read(&input).map_err(CliError::failure)?;
            let text = Text::from_bytes_identity(&bytes);
            let parsing = parse_greedy(&text, variant);
            let stream = encode(&parsing, &text).map_err(CliError::failure)?;
            fs::write(&out, stream.to_bytes()).map_err(CliError::failure)?;
            println!("{} phrases, {} bytes", parsing.size(), stream.to_bytes().len());
            Ok(ExitCode::SUCCESS)
        }
        Command::CodecDecode {
            input,
            out,
            variant,
        } => {
            let bytes = fs::read(&input).map_err(CliError::failure)?;
            let stream = TokenStream::from_bytes(&bytes).map_err(CliError::failure)?;
            if let Some(v) = variant {
                if v != stream.variant {
                    return Err(CliError::Failure(format!(
                        "container holds a {} stream, not {}",
                        stream.variant, v
                    )));
                }
            }
            let text = decode(&stream).map_err(CliError::failure)?;
            match text.to_bytes() {
                Some(raw) => fs::write(&out, raw).map_err(CliError::failure)?,
                None => {
                    let ints = text
                        .symbols()
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(" ");
                    fs::write(&out, ints).map_err(CliError::failure)?;
                }
            }
            println!("{} symbols", text.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { n, sigma, seed } => cmd_bench(n, sigma, seed),
    }
}

fn read_parse_input(
    text: Option<String>,
    input: Option<PathBuf>,
    ints: bool,
) -> Result<(Text, Vec<u8>), CliError> {
    match (text, input) {
        (Some(t), None) => {
            if ints {
                return Err(CliError::Usage("--ints only applies to --input files".into()));
            }
            if !t.bytes().all(|b| (0x20..=0x7e).contains(&b)) {
                return Err(CliError::Usage(
                    "--text must be printable ASCII; use --input for arbitrary bytes".into(),
                ));
            }
            Ok((Text::from_bytes(t.as_bytes()), t.into_bytes()))
        }
        (None, Some(path)) => {
            let bytes = fs::read(&path).map_err(CliError::failure)?;
            if ints {
                let symbols: Vec<u32> = String::from_utf8_lossy(&bytes)
                    .split_whitespace()
                    .map(|w| w.parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::Usage(format!("bad symbol id: {e}")))?;
                let sigma = symbols.iter().copied().max().map_or(0, |m| m + 1);
                let text = Text::new(symbols, sigma).expect("ids below computed sigma");
                Ok((text, bytes))
            } else {
                Ok((Text::from_bytes(&bytes), bytes))
            }
        }
        (None, None) => Err(CliError::Usage("one of --text or --input is required".into())),
        (Some(_), Some(_)) => unreachable!("clap group rejects this"),
    }
}

fn dots_for(parsing: &Parsing, text: &Text, raw: &[u8]) -> String {
    match std::str::from_utf8(raw) {
        Ok(s) if s.len() == parsing.text_len => parsing.dot_notation(s),
        _ => dot_notation_of(parsing, text),
    }
}

fn cmd_parse(
    variant: Variant,
    text: Option<String>,
    input: Option<PathBuf>,
    ints: bool,
    format: ParseFormat,
    phrases: bool,
) -> Result<ExitCode, CliError> {
    let (text, raw) = read_parse_input(text, input, ints)?;
    let parsing = parse_greedy(&text, variant);
    match format {
        ParseFormat::Text => {
            if phrases {
                println!("{}", dots_for(&parsing, &text, &raw));
            }
            println!("{}", parsing.size());
        }
        ParseFormat::Json => {
            let value = serde_json::json!({
                "variant": variant.name(),
                "n": text.len(),
                "sigma": text.sigma(),
                "size": parsing.size(),
                "phrases": parsing.records(),
            });
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(ty: Variant, text: &str) -> Result<ExitCode, CliError> {
    if !text.bytes().all(|b| (0x20..=0x7e).contains(&b)) {
        return Err(CliError::Usage("--text must be printable ASCII".into()));
    }
    let t = Text::from_bytes(text.as_bytes());
    let result = min_parsing_size(&t, ty).map_err(CliError::usage)?;
    println!("{}", result.min_size);
    println!("{}", dots_for(&result.witness, &t, text.as_bytes()));
    Ok(ExitCode::SUCCESS)
}

fn write_text(text: &Text, out: Option<&std::path::Path>) -> Result<(), CliError> {
    // Letters for small alphabets, raw bytes up to 256 symbols, decimal
    // symbol ids beyond that.
    let bytes = if let Some(letters) = text.render_letters() {
        letters.into_bytes()
    } else if let Some(raw) = text.to_bytes() {
        raw
    } else {
        text.symbols()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
            .into_bytes()
    };
    match out {
        Some(path) => fs::write(path, bytes).map_err(CliError::failure)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes).map_err(CliError::failure)?;
            stdout.write_all(b"\n").map_err(CliError::failure)?;
        }
    }
    Ok(())
}

fn cmd_verify(
    target: Target,
    out: Option<PathBuf>,
    format: ReportFormat,
    kmax: u32,
    samples: Option<usize>,
    seed: u64,
    alpha: f64,
) -> Result<ExitCode, CliError> {
    let reports: Vec<Report> = match target {
        Target::Lemma2 => verify_lemma2(12, 8, samples.unwrap_or(200), seed),
        Target::T1 => {
            let cfg = TransformConfig::new(alpha).map_err(CliError::usage)?;
            verify_theorem1(&default_theorem1_inputs(), &cfg)
        }
        Target::T2 => verify_theorem2(&default_theorem2_grid()),
        Target::T3 => {
            let sweep = RandomSweep {
                count: samples.unwrap_or(10_000),
                seed,
                ..RandomSweep::default()
            };
            verify_theorem3(kmax, kmax.min(12), &sweep)
        }
    };

    if let Some(path) = &out {
        let file = fs::File::create(path).map_err(CliError::failure)?;
        match format {
            ReportFormat::Csv => emit_csv(&reports, file).map_err(CliError::failure)?,
            ReportFormat::Json => emit_json(&reports, file).map_err(CliError::failure)?,
        }
    }

    let mut checks = 0usize;
    let mut failed = 0usize;
    for r in &reports {
        checks += r.checks.len();
        for c in r.failed_checks() {
            failed += 1;
            println!("FAIL {} {}", r.string_id, c.name);
        }
    }
    println!(
        "{} reports, {}/{} checks passed",
        reports.len(),
        checks - failed,
        checks
    );
    if failed > 0 {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(n: usize, sigma: u32, seed: u64) -> Result<ExitCode, CliError> {
    let text = gen_random(n, sigma, seed).map_err(CliError::usage)?;
    for v in Variant::ALL {
        let started = Instant::now();
        let parsing = parse_greedy(&text, v);
        let elapsed = started.elapsed();
        let rate = if elapsed.as_secs_f64() > 0.0 {
            n as f64 / elapsed.as_secs_f64() / 1e6
        } else {
            f64::INFINITY
        };
        println!(
            "{:<7} {:>9} phrases  {:>8.1} ms  {:>7.2} Msym/s",
            v.name(),
            parsing.size(),
            elapsed.as_secs_f64() * 1e3,
            rate
        );
    }
    Ok(ExitCode::SUCCESS)
}
