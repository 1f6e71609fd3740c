//! `fgybe` command-line front end.
//!
//! Exit status: 0 when the queried property holds, 1 when it fails or the
//! computation is undefined for the input, 2 on usage or parse errors.

mod records;

use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fgybe::fgybe::{format_families, orbit_representative};
use fgybe::invariant::abelian_invariants_with_form;
use fgybe::{
    braid_to_endo, classify, closure_presentation, enumerate_solutions, enumerate_solutions_parallel, invert_pair,
    is_solution, simplify, verify_braid_relations, BraidLetter, BraidWord, Endomorphism, Error, SolutionPair,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use records::Record;

#[derive(Parser)]
#[command(name = "fgybe", version, about = "Free-product Yang-Baxter solutions and Wada-type braid representations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(clap::Args)]
struct PairArgs {
    /// W, the image of x.
    w: String,
    /// V, the image of y.
    v: String,
}

/// Pair for braid commands; the Artin pair `(y, y^-1 x y)` when omitted.
#[derive(clap::Args)]
struct OptionalPair {
    #[arg(long, requires = "v", allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, requires = "w", allow_hyphen_values = true)]
    v: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the three Yang-Baxter equations for (W, V).
    Check(PairArgs),
    /// List every solution with |W| + |V| <= max-len.
    Enumerate {
        #[arg(long)]
        max_len: usize,
        /// Worker threads; 1 runs sequentially.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Report the families a pair belongs to.
    Classify(PairArgs),
    /// The dual pair (V(y,x), W(y,x)).
    Dual(PairArgs),
    /// The inverse pair, when x -> W, y -> V is an automorphism.
    Inverse(PairArgs),
    /// Check the braid relations for the maps induced by (W, V).
    BraidVerify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// Random positive braids additionally checked for Φ(ab) = Φ(a)∘Φ(b).
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the endomorphism a braid word induces.
    BraidApply {
        braid: String,
        #[arg(long)]
        strands: usize,
        #[command(flatten)]
        pair: OptionalPair,
    },
    /// Closure presentation and abelian invariants of a braid.
    Invariant {
        braid: String,
        #[arg(long)]
        strands: usize,
        #[command(flatten)]
        pair: OptionalPair,
    },
}

/// Where a failure came from: bad input or a failed/undefined computation.
enum Failure {
    Input(Error),
    Math(Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Math(_) => 1,
        }
    }

    fn error(&self) -> &Error {
        match self {
            Failure::Input(e) | Failure::Math(e) => e,
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn input<T>(r: fgybe::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn math<T>(r: fgybe::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Math)
}

struct Out {
    format: Format,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn text(&mut self, line: impl AsRef<str>) {
        if self.format == Format::Text {
            let _ = writeln!(self.stdout, "{}", line.as_ref());
        }
    }

    fn record(&mut self, r: &Record) {
        if self.format == Format::Records {
            let _ = writeln!(self.stdout, "{}", serde_json::to_string(r).expect("records serialize"));
        }
    }
}

fn parse_pair(args: &PairArgs) -> std::result::Result<SolutionPair, Failure> {
    input(SolutionPair::parse(&args.w, &args.v))
}

fn parse_optional(args: &OptionalPair) -> std::result::Result<SolutionPair, Failure> {
    match (&args.w, &args.v) {
        (Some(w), Some(v)) => input(SolutionPair::parse(w, v)),
        _ => Ok(SolutionPair::artin()),
    }
}

fn check(out: &mut Out, args: &PairArgs) -> Outcome {
    let pair = parse_pair(args)?;
    let report = math(is_solution(&pair))?;
    out.text(report.to_string());
    out.record(&Record::check(&pair, &report));
    Ok(report.is_solution())
}

fn enumerate(out: &mut Out, max_len: usize, jobs: usize) -> Outcome {
    eprintln!("enumerating pairs with |W| + |V| <= {max_len} on {} thread(s)", jobs.max(1));
    let records: Vec<_> =
        if jobs <= 1 { enumerate_solutions(max_len).collect() } else { enumerate_solutions_parallel(max_len, jobs) };
    let mut orbits = std::collections::BTreeSet::new();
    for r in &records {
        let rep = orbit_representative(&r.pair);
        out.text(format!("{}  {}  orbit={}", r.pair, format_families(&r.families), rep));
        out.record(&Record::solution(r, &rep));
        orbits.insert(rep);
    }
    out.text(format!("solutions: {}, orbits: {}", records.len(), orbits.len()));
    out.record(&Record::Summary { solutions: records.len(), orbits: orbits.len() });
    eprintln!("done: {} solutions", records.len());
    Ok(true)
}

fn classify_cmd(out: &mut Out, args: &PairArgs) -> Outcome {
    let pair = parse_pair(args)?;
    let families = classify(&pair);
    out.text(format!("{}  {}", pair, format_families(&families)));
    out.record(&Record::classify(&pair, &families));
    Ok(!families.is_empty())
}

fn symmetry(out: &mut Out, args: &PairArgs, inverse: bool) -> Outcome {
    let pair = parse_pair(args)?;
    let image = if inverse { math(invert_pair(&pair))? } else { pair.dual() };
    out.text(image.to_string());
    out.record(&Record::pair(if inverse { "inverse" } else { "dual" }, &image));
    Ok(true)
}

fn random_positive_braid(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| BraidLetter::new(rng.gen_range(1..strands), false)).collect();
    BraidWord::new(strands, letters).expect("indices in range")
}

fn braid_verify(out: &mut Out, args: &PairArgs, strands: usize, samples: usize, seed: u64) -> Outcome {
    let pair = parse_pair(args)?;
    if strands < 3 {
        return Err(Failure::Input(Error::InvalidInput(format!("--strands must be at least 3, got {strands}"))));
    }
    let holds = math(verify_braid_relations(&pair, strands))?;
    let mut sampled_ok = true;
    if holds && samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = random_positive_braid(&mut rng, strands, 4);
            let b = random_positive_braid(&mut rng, strands, 4);
            let ab = math(a.concat(&b))?;
            let lhs = math(braid_to_endo(&ab, &pair))?;
            let rhs = math(Endomorphism::compose(&math(braid_to_endo(&a, &pair))?, &math(braid_to_endo(&b, &pair))?))?;
            if lhs != rhs {
                sampled_ok = false;
                out.text(format!("homomorphism fails on {a} | {b}"));
                break;
            }
        }
    }
    let ok = holds && sampled_ok;
    out.text(if holds { "relations hold" } else { "relations fail" });
    if holds && samples > 0 {
        out.text(format!("homomorphism samples: {samples} (seed {seed}) {}", if sampled_ok { "ok" } else { "FAIL" }));
    }
    out.record(&Record::BraidVerify { strands, holds, samples, seed, samples_ok: sampled_ok });
    Ok(ok)
}

fn braid_apply(out: &mut Out, braid: &str, strands: usize, pair: &OptionalPair) -> Outcome {
    let b = input(BraidWord::parse(braid, strands))?;
    let pair = parse_optional(pair)?;
    let phi = math(braid_to_endo(&b, &pair))?;
    out.text(phi.to_string());
    out.record(&Record::Endomorphism {
        braid: b.to_string(),
        images: phi.images().iter().map(ToString::to_string).collect(),
    });
    Ok(true)
}

fn invariant(out: &mut Out, braid: &str, strands: usize, pair: &OptionalPair) -> Outcome {
    let b = input(BraidWord::parse(braid, strands))?;
    let pair = parse_optional(pair)?;
    let p = math(closure_presentation(&b, &pair))?;
    let simplified = simplify(&p);
    let (inv, m, form) = abelian_invariants_with_form(&p);
    let verified = form.verify(&m);
    out.text(format!("presentation {p}"));
    out.text(format!("simplified {simplified}"));
    out.text(format!("H1 = {inv}"));
    out.record(&Record::invariant(&b, &p, &simplified, &inv, verified));
    Ok(verified)
}

fn run(cli: &Cli) -> Outcome {
    let mut out = Out { format: cli.format, stdout: io::stdout().lock() };
    match &cli.command {
        Command::Check(args) => check(&mut out, args),
        Command::Enumerate { max_len, jobs } => enumerate(&mut out, *max_len, *jobs),
        Command::Classify(args) => classify_cmd(&mut out, args),
        Command::Dual(args) => symmetry(&mut out, args, false),
        Command::Inverse(args) => symmetry(&mut out, args, true),
        Command::BraidVerify { pair, strands, samples, seed } => braid_verify(&mut out, pair, *strands, *samples, *seed),
        Command::BraidApply { braid, strands, pair } => braid_apply(&mut out, braid, *strands, pair),
        Command::Invariant { braid, strands, pair } => invariant(&mut out, braid, *strands, pair),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.error());
            ExitCode::from(f.exit_code())
        }
    }
}
