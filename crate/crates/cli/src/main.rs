use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use peterson_core::combinatorics::{fixed_point_permutation, parse_subset, v_permutation};
use peterson_core::json::{
    fixed_points_doc, presentation_doc, to_json, ExpansionDoc, GiambelliDoc, LocalizedDoc,
    RestrictionDoc,
};
use peterson_core::oracle::localize;
use peterson_core::poly::{fmt_rational, parse_generator_product};
use peterson_core::presentation::{
    ideal_k, quadratic_conjecture_check_with_limits, GroebnerLimits,
};
use peterson_core::schubert::{
    expand_monomial, giambelli_monomial, giambelli_sigma, giambelli_verify, monk_product,
    restrict_class, BasisExpansion,
};
use peterson_core::verify::{run_suite, Limits, Status, Suite};
use peterson_core::{Error, SubsetIndex};

const AFTER_HELP: &str = "\
Subsets are written {1,2,4}, 1,2,4 or {} (members between 1 and N-1).
Generator products for expand and localize are '*'-separated factors pI or
pI^K, or the constant 1; t is not accepted as input.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.";

#[derive(Parser)]
#[command(
    name = "peterson",
    version,
    about = "Equivariant Schubert calculus on Peterson varieties"
)]
#[command(after_help = AFTER_HELP)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest rank for commands that enumerate all fixed points.
    #[arg(long, global = true, env = "PETERSON_MAX_RANK", default_value_t = 20)]
    max_rank: u32,

    /// Largest rank for localization-oracle sweeps.
    #[arg(
        long,
        global = true,
        env = "PETERSON_MAX_ORACLE_RANK",
        default_value_t = 12
    )]
    max_oracle_rank: u32,

    /// Largest rank for presentation and Gröbner computations.
    #[arg(
        long,
        global = true,
        env = "PETERSON_MAX_GROEBNER_RANK",
        default_value_t = 6
    )]
    max_groebner_rank: u32,

    /// Critical pairs Buchberger may process.
    #[arg(
        long,
        global = true,
        env = "PETERSON_MAX_PAIRS",
        default_value_t = 100_000
    )]
    max_pairs: usize,

    /// Largest total degree of a new Gröbner basis element.
    #[arg(long, global = true, env = "PETERSON_MAX_DEGREE", default_value_t = 30)]
    max_degree: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the fixed points w_A with the reduced word of v_A.
    FixedPoints { n: u32 },
    /// Expand p_I * p_A in the Peterson basis.
    Monk { n: u32, i: u32, a: String },
    /// Show sigma(A) * prod p_j and check it against the Monk expansion.
    Giambelli { n: u32, a: String },
    /// Expand a product of generators, e.g. "p1^3" or "p1*p2".
    Expand { n: u32, expr: String },
    /// Restriction of p_A to the fixed point w_B.
    Restrict { n: u32, a: String, b: String },
    /// Restrictions of a product of generators to every fixed point.
    Localize { n: u32, expr: String },
    /// Generators of the ideal K and the quadratic-generation check.
    Presentation {
        n: u32,
        /// List only the degree-2 generators.
        #[arg(long)]
        quadratic_only: bool,
    },
    /// Run a verification suite at rank N.
    Verify {
        n: u32,
        /// fixed-points, restriction, monk-oracle, giambelli, stirling,
        /// vanishing, stability, localization, golden-n4 or quadratic.
        #[arg(long)]
        suite: String,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Verification,
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap(msg) => Failure::Cap(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("resource cap: {msg}");
            ExitCode::from(3)
        }
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits {
            max_rank: self.max_rank,
            max_oracle_rank: self.max_oracle_rank,
            max_groebner_rank: self.max_groebner_rank,
            groebner: GroebnerLimits {
                max_pairs: self.max_pairs,
                max_degree: self.max_degree,
            },
        }
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }
}

fn rank(n: u32) -> Result<u32, Failure> {
    if n == 0 {
        return Err(Failure::Usage("N must be at least 1".into()));
    }
    Ok(n)
}

fn subset(n: u32, s: &str) -> Result<SubsetIndex, Failure> {
    parse_subset(n, s).map_err(|e| Failure::Usage(format!("subset {s:?}: {e}")))
}

fn product(n: u32, expr: &str) -> Result<BasisExpansion, Failure> {
    let factors = parse_generator_product(n, expr)
        .map_err(|e| Failure::Usage(format!("expression {expr:?}: {e}")))?;
    Ok(expand_monomial(n, &factors)?)
}

fn print_expansion(cli: &Cli, e: &BasisExpansion) {
    if cli.json() {
        println!("{}", to_json(&ExpansionDoc::from(e)));
    } else {
        println!("{e}");
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let limits = cli.limits();
    match &cli.command {
        Command::FixedPoints { n } => {
            let n = rank(*n)?;
            limits.check(n, limits.max_rank, "fixed-points")?;
            if cli.json() {
                println!("{}", to_json(&fixed_points_doc(n)?));
            } else {
                for a in peterson_core::combinatorics::all_subsets(n)? {
                    let (word, _) = v_permutation(&a);
                    let word: Vec<String> = word.iter().map(u32::to_string).collect();
                    println!("{a}\t{}\t({})", fixed_point_permutation(&a), word.join(","));
                }
            }
        }
        Command::Monk { n, i, a } => {
            let a = subset(rank(*n)?, a)?;
            print_expansion(cli, &monk_product(*i, &a)?);
        }
        Command::Giambelli { n, a } => {
            let a = subset(rank(*n)?, a)?;
            let monomial = giambelli_monomial(&a);
            let verified = giambelli_verify(&a)?;
            if cli.json() {
                let doc = GiambelliDoc {
                    n: a.rank(),
                    subset: a.to_vec(),
                    sigma: fmt_rational(&giambelli_sigma(&a)),
                    monomial: monomial.to_string(),
                    verified,
                };
                println!("{}", to_json(&doc));
            } else {
                println!("p{a} = {monomial}");
            }
            if !verified {
                return Err(Failure::Verification);
            }
        }
        Command::Expand { n, expr } => print_expansion(cli, &product(rank(*n)?, expr)?),
        Command::Restrict { n, a, b } => {
            let n = rank(*n)?;
            let (a, b) = (subset(n, a)?, subset(n, b)?);
            let value = restrict_class(&BasisExpansion::basis(a), &b)?;
            if cli.json() {
                let doc = RestrictionDoc {
                    n,
                    class: a.to_vec(),
                    fixed_point: b.to_vec(),
                    w: fixed_point_permutation(&b).to_string(),
                    value: value.to_string(),
                };
                println!("{}", to_json(&doc));
            } else {
                println!("{value}");
            }
        }
        Command::Localize { n, expr } => {
            let n = rank(*n)?;
            limits.check(n, limits.max_oracle_rank, "localize")?;
            let f = localize(&product(n, expr)?)?;
            if cli.json() {
                println!("{}", to_json(&LocalizedDoc::from(&f)));
            } else {
                for (b, v) in f.iter() {
                    println!("{b}\t{v}");
                }
            }
        }
        Command::Presentation { n, quadratic_only } => {
            let n = rank(*n)?;
            limits.check(n, limits.max_groebner_rank, "presentation")?;
            let k = ideal_k(n)?;
            let quadratic = match quadratic_conjecture_check_with_limits(n, limits.groebner) {
                Ok(v) => Some(v),
                Err(Error::ResourceCap(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let doc = presentation_doc(&k, quadratic, *quadratic_only);
            if cli.json() {
                println!("{}", to_json(&doc));
            } else {
                println!(
                    "# n={} order={} generators={}",
                    doc.n,
                    doc.order,
                    doc.generators.len()
                );
                for g in &doc.generators {
                    println!("{}", g.poly);
                }
                println!("{}", to_json(&doc.flags));
            }
            if quadratic.is_none() {
                return Err(Failure::Cap(
                    "Gröbner computation hit its resource cap".into(),
                ));
            }
        }
        Command::Verify { n, suite, jobs } => {
            let n = rank(*n)?;
            let suite: Suite = suite.parse().map_err(|_| {
                let names: Vec<&str> = Suite::ALL.iter().map(Suite::id).collect();
                Failure::Usage(format!(
                    "unknown suite {suite:?}; expected one of {}",
                    names.join(", ")
                ))
            })?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(j) = jobs {
                if *j == 0 {
                    return Err(Failure::Usage("--jobs must be at least 1".into()));
                }
                pool = pool.num_threads(*j);
            }
            let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
            let report = pool.install(|| run_suite(suite, n, &limits))?;
            if cli.json() {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                print!("{report}");
            }
            match report.status {
                Status::Pass => {}
                Status::Fail => return Err(Failure::Verification),
                Status::Undetermined => return Err(Failure::Cap(report.notes.join("; "))),
            }
        }
    }
    Ok(())
}
