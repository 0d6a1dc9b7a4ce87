//! Command-line surface over the positroid crate.
//!
//! The decorated permutation comes from stdin or `--input`; `perm` reads a
//! necklace instead. Exit codes: 0 success, 1 verify mismatch, 2 parse or
//! validation error, 3 capacity guard, 4 internal contract violation
//! (always a bug), 5 fixed points passed to a structural verb.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use positroid::{
    verify, CyclicInterval, DecoratedPermutation, Error, ErrorClass, FacetSystem, FlatFamily,
    GrassmannNecklace, OracleMatroid, Positroid, Subset,
};
use rand_chacha::rand_core::SeedableRng;
use serde_json::json;

#[derive(Parser)]
#[command(name = "positroid", version, about = "Positroids from decorated permutations")]
struct Cli {
    /// Read the permutation (or necklace, for `perm`) from this file
    /// instead of stdin.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Grassmann necklace I_1 .. I_n.
    Necklace,
    /// Read a necklace and print its decorated permutation.
    Perm,
    /// Enumerate all bases (lexicographic).
    Bases,
    /// Rank of a subset.
    Rank(RankArgs),
    /// Closure of a subset.
    Closure(SetArg),
    /// All proper cyclic intervals that are flats.
    IntervalFlats,
    /// Nonempty inseparable flats with their ranks.
    Flats,
    /// H-representation of the independent-set polytope.
    Facets(FacetsArgs),
    /// H-representation of the basis polytope.
    BasisPolytope(BasisPolytopeArgs),
    /// Replay the fast engines against the brute-force oracle.
    Verify(VerifyArgs),
    /// Emit a uniformly random fixed-point-free decorated permutation.
    Random(RandomArgs),
}

#[derive(Args)]
struct SetArg {
    /// Comma-separated labels; `a..b` spans a cyclic interval.
    #[arg(long)]
    set: String,
}

#[derive(Args)]
struct RankArgs {
    #[command(flatten)]
    set: SetArg,
    /// Which route computes the rank.
    #[arg(long, value_enum, default_value_t = RankMethod::Push)]
    method: RankMethod,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankMethod {
    /// The push procedure.
    Push,
    /// Minimum over non-crossing partitions of the natural rank bound.
    Ncp,
    /// Scan the explicit basis list.
    Oracle,
}

#[derive(Args)]
struct FacetsArgs {
    /// Which flat family backs the bounds.
    #[arg(long, value_enum, default_value_t = FamilyArg::Minimal)]
    family: FamilyArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Nonempty inseparable flats (the minimal system).
    Minimal,
    /// Interval flats and their intersections.
    Cover,
}

#[derive(Args)]
struct BasisPolytopeArgs {
    /// Drop rows implied by a subset-support row plus the unit bounds.
    #[arg(long)]
    prune_dominated: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for sampled fallbacks.
    #[arg(long, default_value_t = 0x5EED)]
    seed: u64,
    /// Sample size for downgraded checks.
    #[arg(long, default_value_t = 4096)]
    samples: usize,
}

#[derive(Args)]
struct RandomArgs {
    /// Ground set size (at least 2).
    #[arg(long)]
    n: u32,
    /// Seed; mandatory so scripted runs reproduce.
    #[arg(long)]
    seed: u64,
}

fn main() {
    // downstream `head`-style consumers close the pipe early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    std::process::exit(match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code(&e)
        }
    });
}

fn exit_code(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Input => 2,
        ErrorClass::Capacity => 3,
        ErrorClass::Contract => 4,
        ErrorClass::FixedPoints => 5,
    }
}

fn read_input(cli: &Cli) -> Result<String, Error> {
    match &cli.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::Parse {
                detail: format!("cannot read {}: {}", path, e),
            }),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse {
                    detail: format!("cannot read stdin: {}", e),
                })?;
            Ok(buf)
        }
    }
}

fn load_positroid(cli: &Cli) -> Result<Positroid, Error> {
    let text = read_input(cli)?;
    let perm: DecoratedPermutation = text.parse()?;
    Ok(Positroid::from_permutation(perm))
}

/// `1,2,3` plus `a..b` interval tokens, unioned.
fn parse_set(p: &Positroid, spec: &str) -> Result<Subset, Error> {
    let gs = p.ground_set();
    let mut out = Subset::EMPTY;
    for token in spec.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((a, b)) = token.split_once("..") {
            let a: u32 = a.parse().map_err(|_| Error::Parse {
                detail: format!("bad interval start '{}'", token),
            })?;
            let b: u32 = b.parse().map_err(|_| Error::Parse {
                detail: format!("bad interval end '{}'", token),
            })?;
            out = out | gs.interval(a, b)?.members(&gs);
        } else {
            let x: u32 = token.parse().map_err(|_| Error::Parse {
                detail: format!("bad label '{}'", token),
            })?;
            gs.check_label(x)?;
            out = out.with(x);
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Necklace => {
            let p = load_positroid(cli)?;
            let nk = p.necklace();
            if cli.json {
                let sets: Vec<Vec<u32>> = (1..=p.n())
                    .map(|k| p.ground_set().sorted_by_shift(k, nk.set(k)))
                    .collect();
                println!(
                    "{}",
                    json!({ "n": p.n(), "d": p.d(), "necklace": sets })
                );
            } else {
                println!("{}", nk);
            }
            Ok(0)
        }
        Command::Perm => {
            let text = read_input(cli)?;
            let nk: GrassmannNecklace = text.parse()?;
            let perm = nk.to_permutation()?;
            if cli.json {
                let colors: Vec<(u32, String)> = perm
                    .fixed_points()
                    .iter()
                    .map(|i| {
                        (
                            i,
                            match perm.color(i) {
                                Some(positroid::Color::Black) => "b".to_string(),
                                _ => "w".to_string(),
                            },
                        )
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "images": perm.images(), "colors": colors })
                );
            } else {
                println!("{}", perm);
            }
            Ok(0)
        }
        Command::Bases => {
            let p = load_positroid(cli)?;
            let bases = p.enumerate_bases()?;
            if cli.json {
                let rows: Vec<Vec<u32>> = bases.iter().map(|b| b.labels()).collect();
                println!("{}", json!({ "d": p.d(), "bases": rows }));
            } else {
                for b in bases {
                    println!("{}", b);
                }
            }
            Ok(0)
        }
        Command::Rank(args) => {
            let p = load_positroid(cli)?;
            let e = parse_set(&p, &args.set.set)?;
            let (rank, method) = match args.method {
                RankMethod::Push => (p.rank(e)?, "push"),
                RankMethod::Ncp => (p.rank_by_noncrossing_partitions(e)?, "ncp"),
                RankMethod::Oracle => {
                    let oracle = OracleMatroid::from_positroid(&p)?;
                    (oracle.rank(e), "oracle")
                }
            };
            if cli.json {
                println!(
                    "{}",
                    json!({ "set": e.labels(), "method": method, "rank": rank })
                );
            } else {
                println!("{}", rank);
            }
            Ok(0)
        }
        Command::Closure(args) => {
            let p = load_positroid(cli)?;
            let e = parse_set(&p, &args.set)?;
            let closure = p.closure(e)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "set": e.labels(),
                        "closure": closure.labels(),
                        "rank": p.rank(e)?,
                        "method": "rank-closure",
                    })
                );
            } else {
                let labels: Vec<String> =
                    closure.labels().iter().map(|x| x.to_string()).collect();
                println!("{}", labels.join(","));
            }
            Ok(0)
        }
        Command::IntervalFlats => {
            let p = load_positroid(cli)?;
            let gs = p.ground_set();
            let mut flats: Vec<CyclicInterval> = Vec::new();
            for a in gs.elements() {
                for b in gs.elements() {
                    let iv = gs.interval(a, b)?;
                    if !iv.is_full(&gs) && p.is_interval_flat(iv)? {
                        flats.push(iv);
                    }
                }
            }
            if cli.json {
                let rows: Vec<(u32, u32)> = flats.iter().map(|iv| (iv.a(), iv.b())).collect();
                println!("{}", json!({ "interval_flats": rows }));
            } else {
                for iv in flats {
                    println!("{}", iv);
                }
            }
            Ok(0)
        }
        Command::Flats => {
            let p = load_positroid(cli)?;
            let flats = p.enumerate_inseparable_flats()?;
            if cli.json {
                let rows: Vec<serde_json::Value> = flats
                    .iter()
                    .map(|f| {
                        json!({
                            "members": f.members.labels(),
                            "rank": f.rank,
                            "inseparable": f.inseparable,
                        })
                    })
                    .collect();
                println!("{}", json!({ "flats": rows }));
            } else {
                for f in flats {
                    let labels: Vec<String> =
                        f.members.labels().iter().map(|x| x.to_string()).collect();
                    println!("{} {}", f.rank, labels.join(" "));
                }
            }
            Ok(0)
        }
        Command::Facets(args) => {
            let p = load_positroid(cli)?;
            let family = match args.family {
                FamilyArg::Minimal => FlatFamily::Minimal,
                FamilyArg::Cover => FlatFamily::Cover,
            };
            let system = p.independent_set_system(family)?;
            print_system(cli, &system);
            Ok(0)
        }
        Command::BasisPolytope(args) => {
            let p = load_positroid(cli)?;
            let mut system = p.basis_polytope_system()?;
            if args.prune_dominated {
                system = system.prune_dominated();
            }
            print_system(cli, &system);
            Ok(0)
        }
        Command::Verify(args) => {
            let p = load_positroid(cli)?;
            let opts = verify::VerifyOptions {
                seed: args.seed,
                sample_size: args.samples,
            };
            let report = verify::run(&p, &opts)?;
            if cli.json {
                let rows: Vec<serde_json::Value> = report
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "passed": c.passed,
                            "detail": c.detail,
                            "sampled": c.sampled,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "checks": rows, "all_passed": report.all_passed() })
                );
            } else {
                for c in &report.checks {
                    let sampled = if c.sampled { " [sampled]" } else { "" };
                    if c.passed {
                        if c.detail.is_empty() {
                            println!("ok {}{}", c.name, sampled);
                        } else {
                            println!("ok {} ({}){}", c.name, c.detail, sampled);
                        }
                    } else {
                        println!("FAIL {}: {}{}", c.name, c.detail, sampled);
                    }
                }
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Random(args) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
            let perm = DecoratedPermutation::random_derangement(args.n, &mut rng)?;
            if cli.json {
                println!("{}", json!({ "images": perm.images(), "seed": args.seed }));
            } else {
                println!("{}", perm);
            }
            Ok(0)
        }
    }
}

fn print_system(cli: &Cli, system: &FacetSystem) {
    if cli.json {
        let row = |r: &positroid::Inequality| {
            json!({
                "sense": r.sense.to_string(),
                "rhs": r.rhs,
                "support": r.support.labels(),
            })
        };
        println!(
            "{}",
            json!({
                "n": system.n,
                "d": system.d,
                "equalities": system.equalities.iter().map(row).collect::<Vec<_>>(),
                "inequalities": system.inequalities.iter().map(row).collect::<Vec<_>>(),
            })
        );
    } else {
        print!("{}", system);
    }
}
