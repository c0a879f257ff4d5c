//! `quadfermat`: exact computations around A·x^p + B·y^p + C·z^p = 0 over
//! quadratic fields and the associated hyperelliptic curves.
//!
//! Exit codes: 0 on success and consistent verdicts, 1 on validation or usage
//! errors, 2 when a verification command finds a result inconsistent with the
//! expected theory (so CI can gate on it). All numeric output is exact and
//! timing goes to stderr, never stdout.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use quadfermat::curve::{
    classify_point, classify_solution, forward_map, CurvePoint, EquationSpec,
};
use quadfermat::power::{power_parts, rational_power_test, vanish_decide, Part};
use quadfermat::quad::{Disc, QuadElem};
use quadfermat::record;
use quadfermat::ring::{self, RingDesc};
use quadfermat::search::{
    gen_conjugate_family, map_identity_trials, search, verify_mn_theorem, verify_trivial_lemma,
    Scope, SearchBox, Verdict,
};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_INCONSISTENT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "quadfermat",
    about = "Exact arithmetic for Fermat-type equations over quadratic fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for searches (defaults to all cores).
    #[arg(long, global = true, env = "QUADFERMAT_THREADS")]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Seed for randomized verification commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    #[value(alias = "structured-records")]
    Records,
    Csv,
}

#[derive(Args)]
struct EqArgs {
    #[arg(short = 'A', allow_negative_numbers = true)]
    a: i64,
    #[arg(short = 'B', allow_negative_numbers = true)]
    b: i64,
    #[arg(short = 'C', allow_negative_numbers = true)]
    c: i64,
    #[arg(short = 'p')]
    p: u32,
    #[arg(short = 'd', allow_negative_numbers = true)]
    d: i64,
}

impl EqArgs {
    fn build(&self) -> Result<EquationSpec, quadfermat::Error> {
        EquationSpec::from_ints(self.a, self.b, self.c, self.p, self.d)
    }
}

#[derive(Args)]
struct BoxArgs {
    /// Height bound on component coordinates.
    #[arg(long, default_value_t = 2)]
    height: u32,
    /// Component scope: rational, ok, or full-k.
    #[arg(long, default_value = "full-k")]
    scope: String,
    /// Skip triples containing a zero component.
    #[arg(long)]
    skip_trivial: bool,
    /// List every hit instead of one representative per scalar orbit.
    #[arg(long)]
    raw: bool,
}

impl BoxArgs {
    fn build(&self) -> Result<SearchBox, quadfermat::Error> {
        let scope: Scope = self.scope.parse()?;
        Ok(SearchBox::new(self.height, scope)
            .skip_trivial(self.skip_trivial)
            .raw(self.raw))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Re/Im of (a + b*sqrt(d))^p and the vanishing verdicts.
    PowerTest {
        /// Rational a, e.g. `3` or `-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Rational b.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        #[arg(short = 'p')]
        p: u32,
    },
    /// Validate an equation and print its derived constants.
    ClassifyEquation {
        #[command(flatten)]
        eq: EqArgs,
    },
    /// Map a solution (x, y, z) to its curve point and classify it.
    MapSolution {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Classify a point (x, y) on the curve Y^2 = X^p + A^2(BC)^(p-1)/4.
    ClassifyPoint {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Exhaustively search a bounded box for solutions.
    Search {
        #[command(flatten)]
        eq: EqArgs,
        #[command(flatten)]
        sbox: BoxArgs,
    },
    /// Generate verified conjugate-unit solution families (BC = ±1).
    Family {
        #[arg(short = 'B', allow_negative_numbers = true)]
        b: i64,
        #[arg(short = 'C', allow_negative_numbers = true)]
        c: i64,
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value_t = 2)]
        height: u32,
        /// Exponent bound for units of real fields.
        #[arg(long, default_value_t = 2)]
        unit_range: u32,
    },
    /// List units of O_K.
    Units {
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        /// Exponent bound for real fields.
        #[arg(long, default_value_t = 2)]
        n_max: u32,
    },
    /// Run a verification harness; exits 2 on inconsistency.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Random instances of the change-of-variables identity.
    MapIdentity {
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'd', allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = 10)]
        height: u32,
    },
    /// All xyz = 0 solutions in a box have the allowed shapes.
    TrivialLemma {
        #[command(flatten)]
        eq: EqArgs,
        #[arg(long, default_value_t = 2)]
        height: u32,
    },
    /// Re(Y)·Im(Y) = 0 for generated families or replayed solution records.
    MnTheorem {
        /// File of solution records (`-` for stdin). When absent, a family
        /// is generated from -B/-C/-p/-d.
        #[arg(long)]
        input: Option<String>,
        #[arg(short = 'B', allow_negative_numbers = true, default_value_t = 1)]
        b: i64,
        #[arg(short = 'C', allow_negative_numbers = true, default_value_t = 1)]
        c: i64,
        #[arg(short = 'p', default_value_t = 5)]
        p: u32,
        #[arg(short = 'd', allow_negative_numbers = true, default_value_t = 2)]
        d: i64,
        #[arg(long, default_value_t = 2)]
        height: u32,
        #[arg(long, default_value_t = 2)]
        unit_range: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::from(EXIT_OK);
            }
            eprintln!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, quadfermat::Error> {
    #[cfg(feature = "parallel")]
    if let Some(threads) = cli.threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| quadfermat::Error::Parse(e.to_string()))?;
        let Cli { command, output, seed, .. } = cli;
        return pool.install(|| dispatch(command, output, seed));
    }
    #[cfg(not(feature = "parallel"))]
    if cli.threads.is_some() {
        eprintln!("note: built without the `parallel` feature; running sequentially");
    }
    dispatch(cli.command, cli.output, cli.seed)
}

fn dispatch(command: Command, output: Output, seed: u64) -> Result<u8, quadfermat::Error> {
    match command {
        Command::PowerTest { a, b, d, p } => power_test(&a, &b, d, p, output),
        Command::ClassifyEquation { eq } => classify_equation(&eq.build()?, output),
        Command::MapSolution { eq, x, y, z } => map_solution(&eq.build()?, &x, &y, &z, output),
        Command::ClassifyPoint { eq, x, y } => point_command(&eq.build()?, &x, &y, output),
        Command::Search { eq, sbox } => search_command(&eq.build()?, &sbox.build()?, output),
        Command::Family { b, c, p, d, height, unit_range } => {
            family_command(b, c, p, d, height, unit_range, output)
        }
        Command::Units { d, n_max } => units_command(d, n_max, output),
        Command::Verify { target } => verify_command(target, seed),
    }
}

fn power_test(a: &str, b: &str, d: i64, p: u32, output: Output) -> Result<u8, quadfermat::Error> {
    let disc = Disc::new(d)?;
    let a = quadfermat::rational::parse(a)?;
    let b = quadfermat::rational::parse(b)?;
    let parts = power_parts(&a, &b, disc, p);
    let re = vanish_decide(Part::Re, &a, &b, disc, p)?;
    let im = vanish_decide(Part::Im, &a, &b, disc, p)?;
    let class = rational_power_test(&QuadElem::new(a.clone(), b.clone(), disc), p)?;
    let shape = |v: &quadfermat::power::VanishVerdict| {
        v.forced_shape.map(|s| s.to_string()).unwrap_or_else(|| "none".to_string())
    };

    let rat = quadfermat::rational::render;
    match output {
        Output::Text => {
            println!("(a + b*sqrt(d))^p with a = {}, b = {}, d = {d}, p = {p}", rat(&a), rat(&b));
            println!("re = {}", rat(&parts.re_part));
            println!("im = {}", rat(&parts.im_part));
            println!("re vanishes: {} (shape: {})", re.vanishes, shape(&re));
            println!("im vanishes: {} (shape: {})", im.vanishes, shape(&im));
            println!("power class: {class}");
        }
        Output::Records | Output::Csv => {
            println!(
                "power|a={}|b={}|d={d}|p={p}|re={}|im={}|re-vanishes={}|re-shape={}|im-vanishes={}|im-shape={}|power-class={class}",
                rat(&a), rat(&b), rat(&parts.re_part), rat(&parts.im_part),
                re.vanishes, shape(&re), im.vanishes, shape(&im),
            );
        }
    }
    Ok(EXIT_OK)
}

fn classify_equation(eq: &EquationSpec, output: Output) -> Result<u8, quadfermat::Error> {
    let alpha = quadfermat::rational::render(eq.alpha());
    match output {
        Output::Text => {
            println!(
                "equation {}x^{p} + {}y^{p} + {}z^{p} = 0 over Q(sqrt({}))",
                eq.a(), eq.b(), eq.c(), eq.disc(), p = eq.p()
            );
            println!("curve: Y^2 = X^{} + {alpha}", eq.p());
            println!("pairwise coprime: {}", eq.pairwise_coprime());
            println!("AB unit: {}", eq.ab_is_unit());
            println!("BC unit: {}", eq.bc_is_unit());
            println!("ABC unit: {}", eq.abc_is_unit());
        }
        Output::Records | Output::Csv => {
            println!(
                "equation|A={}|B={}|C={}|p={}|d={}|alpha={alpha}|pairwise-coprime={}|ab-unit={}|bc-unit={}|abc-unit={}",
                eq.a(), eq.b(), eq.c(), eq.p(), eq.disc(),
                eq.pairwise_coprime(), eq.ab_is_unit(), eq.bc_is_unit(), eq.abc_is_unit(),
            );
        }
    }
    Ok(EXIT_OK)
}

fn map_solution(
    eq: &EquationSpec,
    x: &str,
    y: &str,
    z: &str,
    output: Output,
) -> Result<u8, quadfermat::Error> {
    let disc = eq.disc();
    let x = QuadElem::parse(x, disc)?;
    let y = QuadElem::parse(y, disc)?;
    let z = QuadElem::parse(z, disc)?;
    let triple = classify_solution(eq, &x, &y, &z)?;
    let pt = forward_map(eq, &x, &y, &z)?;
    let prediction = classify_point(eq, &pt)?;
    match output {
        Output::Text => {
            println!("X = {}", pt.x);
            println!("Y = {}", pt.y);
            println!("point class: {}", pt.y_class);
            println!("solution class: {}", triple.class);
            println!("prediction: {prediction}");
        }
        Output::Records | Output::Csv => {
            println!("{}", record::solution_record(eq, &triple, None));
            println!("{}", record::point_record(eq, &pt, prediction));
        }
    }
    Ok(EXIT_OK)
}

fn point_command(
    eq: &EquationSpec,
    x: &str,
    y: &str,
    output: Output,
) -> Result<u8, quadfermat::Error> {
    let disc = eq.disc();
    let pt = CurvePoint::new(QuadElem::parse(x, disc)?, QuadElem::parse(y, disc)?);
    let prediction = classify_point(eq, &pt)?;
    match output {
        Output::Text => {
            println!("on curve: true");
            println!("point class: {}", pt.y_class);
            println!("prediction: {prediction}");
        }
        Output::Records | Output::Csv => {
            println!("{}", record::point_record(eq, &pt, prediction));
        }
    }
    Ok(EXIT_OK)
}

fn search_command(
    eq: &EquationSpec,
    sbox: &SearchBox,
    output: Output,
) -> Result<u8, quadfermat::Error> {
    let report = search(eq, sbox);
    eprintln!("# elapsed: {:?}", report.elapsed);
    match output {
        Output::Text => {
            for hit in &report.hits {
                let t = &hit.triple;
                println!(
                    "hit: ({}, {}, {})  class={}  orbit={}",
                    t.x, t.y, t.z, t.class, hit.orbit_size
                );
            }
            println!(
                "tested {} triples, {} solutions in {} orbits, verdict: {}",
                report.enumerated,
                report.raw_hits,
                report.hits.len(),
                report.verdict
            );
        }
        Output::Records => print!("{}", record::render_search_report(&report)),
        Output::Csv => print!("{}", record::search_report_csv(&report)?),
    }
    Ok(if report.verdict == Verdict::CounterexampleFound { EXIT_INCONSISTENT } else { EXIT_OK })
}

fn family_command(
    b: i64,
    c: i64,
    p: u32,
    d: i64,
    height: u32,
    unit_range: u32,
    output: Output,
) -> Result<u8, quadfermat::Error> {
    let disc = Disc::new(d)?;
    let family =
        gen_conjugate_family(&BigInt::from(b), &BigInt::from(c), p, disc, height, unit_range)?;
    match output {
        Output::Text => {
            for (eq, t) in &family {
                println!("A = {}: ({}, {}, {})  class={}", eq.a(), t.x, t.y, t.z, t.class);
            }
            println!("{} verified family members", family.len());
        }
        Output::Records => {
            for (eq, t) in &family {
                println!("{}", record::solution_record(eq, t, None));
            }
        }
        Output::Csv => {
            println!("A,B,C,p,d,x,y,z,class");
            for (eq, t) in &family {
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    eq.a(), eq.b(), eq.c(), eq.p(), eq.disc(),
                    t.x.render(), t.y.render(), t.z.render(), t.class,
                );
            }
        }
    }
    Ok(EXIT_OK)
}

fn units_command(d: i64, n_max: u32, output: Output) -> Result<u8, quadfermat::Error> {
    let disc = Disc::new(d)?;
    let ring = RingDesc::new(disc);
    let units = ring::units(disc, n_max)?;
    match output {
        Output::Text => {
            println!("{}", ring.omega_header());
            for u in &units {
                println!("{}", u.render());
            }
        }
        Output::Records | Output::Csv => {
            println!("units|d={d}|{}|count={}", ring.omega_header().replace(" = ", "="), units.len());
            for u in &units {
                println!("unit|d={d}|u={}|v={}|norm={}", u.u(), u.v(), u.norm());
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify_command(target: VerifyTarget, seed: u64) -> Result<u8, quadfermat::Error> {
    match target {
        VerifyTarget::MapIdentity { p, d, trials, height } => {
            let ok = map_identity_trials(p, Disc::new(d)?, trials, height, seed)?;
            println!(
                "verify map-identity: {} ({trials} trials, p={p}, d={d}, seed={seed})",
                if ok { "consistent" } else { "INCONSISTENT" }
            );
            Ok(if ok { EXIT_OK } else { EXIT_INCONSISTENT })
        }
        VerifyTarget::TrivialLemma { eq, height } => {
            let eq = eq.build()?;
            let ok = verify_trivial_lemma(&eq, height);
            println!(
                "verify trivial-lemma: {} (height {height})",
                if ok { "consistent" } else { "INCONSISTENT" }
            );
            Ok(if ok { EXIT_OK } else { EXIT_INCONSISTENT })
        }
        VerifyTarget::MnTheorem { input, b, c, p, d, height, unit_range } => {
            let samples = match input {
                Some(path) => read_solution_records(&path)?,
                None => gen_conjugate_family(
                    &BigInt::from(b),
                    &BigInt::from(c),
                    p,
                    Disc::new(d)?,
                    height,
                    unit_range,
                )?,
            };
            let ok = verify_mn_theorem(&samples)?;
            println!(
                "verify mn-theorem: {} ({} samples)",
                if ok { "consistent" } else { "INCONSISTENT" },
                samples.len()
            );
            Ok(if ok { EXIT_OK } else { EXIT_INCONSISTENT })
        }
    }
}

fn read_solution_records(
    path: &str,
) -> Result<Vec<(EquationSpec, quadfermat::curve::SolutionTriple)>, quadfermat::Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| quadfermat::Error::Parse(e.to_string()))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| quadfermat::Error::Parse(e.to_string()))?
    };
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (eq, triple, _) = record::parse_solution_record(line)?;
        out.push((eq, triple));
    }
    Ok(out)
}
