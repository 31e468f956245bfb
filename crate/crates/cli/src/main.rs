use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use lrkit::bench::{lozenge_agreement, run_benchmark};
use lrkit::companions::{Companion, Hive, HiveJson};
use lrkit::oracle::{configure_threads_from_env, enumerate_lr, lr_coefficient, lr_coefficient_by_words, verify_symmetry_sweep};
use lrkit::puzzles::{enumerate_puzzles, tao_from_tableau, tao_to_tableau, Puzzle, PuzzleBoundary, PuzzleJson};
use lrkit::symmetries::{apply, Generators};
use lrkit::tableaux::TableauJson;
use lrkit::{Boundary, GroupElement, Partition, Rect, SkewTableau, CONVENTION};

/// Littlewood-Richardson tableaux, companions, hives and puzzles.
#[derive(Parser)]
#[command(name = "lrkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
    #[arg(long, allow_hyphen_values = true)]
    lam: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List every LR tableau or puzzle with the given boundary.
    Enumerate {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value_t = Model::Tableau)]
        model: Model,
        /// Print diagrams instead of JSON.
        #[arg(long)]
        render: bool,
    },
    /// Print the LR coefficient.
    Coeff {
        #[command(flatten)]
        triple: TripleArgs,
        /// Also compute the coefficient by Yamanouchi-word filtering and compare.
        #[arg(long)]
        check: bool,
    },
    /// Apply a group element to a tableau, companion, hive or puzzle.
    Apply {
        #[arg(long)]
        op: GroupElement,
        /// JSON file, or `-` for standard input.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Convert an object into another model.
    Convert {
        #[arg(long, value_enum)]
        to: Model,
        #[arg(long = "in")]
        input: PathBuf,
        /// Also write an SVG drawing when the target is a puzzle.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the symmetry sweep over all boundary triples of side n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Time the linear-cost maps and report log-log slopes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![1_000usize, 10_000, 100_000, 1_000_000])]
        sizes: Vec<usize>,
        /// Minimum wall time per measurement batch.
        #[arg(long, default_value_t = 50)]
        budget_ms: u64,
        /// Random instances for the lozenge route comparison.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize, Debug)]
#[serde(rename_all = "lowercase")]
enum Model {
    Tableau,
    Companion,
    Hive,
    Puzzle,
}

const MAX_VERIFY_N: usize = 8;

#[derive(Serialize, Deserialize)]
struct BoundaryJson {
    mu: String,
    nu: String,
    lam: String,
}

impl From<&Boundary> for BoundaryJson {
    fn from(b: &Boundary) -> Self {
        let [mu, nu, lam] = b.to_strings();
        BoundaryJson { mu, nu, lam }
    }
}

/// Canonical interchange form of a single object.
#[derive(Serialize, Deserialize)]
struct Envelope {
    convention: String,
    kind: Model,
    boundary: BoundaryJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tableau: Option<TableauJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    companion: Option<TableauJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hive: Option<HiveJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    puzzle: Option<PuzzleJson>,
}

enum Object {
    Tableau(SkewTableau),
    Companion(Companion),
    Hive(Hive),
    Puzzle(Puzzle),
}

impl Object {
    fn model(&self) -> Model {
        match self {
            Object::Tableau(_) => Model::Tableau,
            Object::Companion(_) => Model::Companion,
            Object::Hive(_) => Model::Hive,
            Object::Puzzle(_) => Model::Puzzle,
        }
    }

    fn to_tableau(&self) -> anyhow::Result<SkewTableau> {
        Ok(match self {
            Object::Tableau(t) => {
                t.lr_boundary()?;
                t.clone()
            }
            Object::Companion(c) => c.to_lr()?,
            Object::Hive(h) => h.to_lr()?,
            Object::Puzzle(p) => tao_to_tableau(p)?,
        })
    }

    fn from_tableau(t: &SkewTableau, model: Model) -> anyhow::Result<Object> {
        Ok(match model {
            Model::Tableau => Object::Tableau(t.clone()),
            Model::Companion => Object::Companion(Companion::of(t)?),
            Model::Hive => Object::Hive(Hive::of(t)?),
            Model::Puzzle => Object::Puzzle(tao_from_tableau(t)?),
        })
    }

    fn envelope(&self) -> anyhow::Result<Envelope> {
        let boundary = self.to_tableau()?.lr_boundary()?;
        let mut e = Envelope {
            convention: CONVENTION.into(),
            kind: self.model(),
            boundary: (&boundary).into(),
            tableau: None,
            companion: None,
            hive: None,
            puzzle: None,
        };
        match self {
            Object::Tableau(t) => e.tableau = Some(t.to_json()),
            Object::Companion(c) => e.companion = Some(c.tableau.to_json()),
            Object::Hive(h) => e.hive = Some(h.to_json()),
            Object::Puzzle(p) => e.puzzle = Some(p.to_json()),
        }
        Ok(e)
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn parse_boundary(b: &BoundaryJson, rect: Rect) -> anyhow::Result<Boundary> {
    Ok(Boundary::parse([&b.mu, &b.nu, &b.lam], rect)?)
}

/// Accepts an envelope or a bare tableau, hive or puzzle object.
fn load_object(text: &str) -> anyhow::Result<Object> {
    let value: Value = serde_json::from_str(text).context("malformed JSON")?;
    if value.get("kind").is_some() {
        let e: Envelope = serde_json::from_value(value).context("malformed envelope")?;
        let missing = |what: &str| anyhow!("envelope of kind {:?} lacks the {what} field", e.kind);
        let obj = match e.kind {
            Model::Tableau => Object::Tableau(SkewTableau::from_json(e.tableau.as_ref().ok_or_else(|| missing("tableau"))?)?),
            Model::Companion => {
                let g = SkewTableau::from_json(e.companion.as_ref().ok_or_else(|| missing("companion"))?)?;
                let boundary = parse_boundary(&e.boundary, g.rect())?;
                let c = Companion { tableau: g, boundary };
                if !c.is_valid()? {
                    bail!("companion tableau is not valid for the stated boundary");
                }
                Object::Companion(c)
            }
            Model::Hive => Object::Hive(Hive::from_json(e.hive.as_ref().ok_or_else(|| missing("hive"))?)?),
            Model::Puzzle => {
                let p = Puzzle::from_json(e.puzzle.as_ref().ok_or_else(|| missing("puzzle"))?)?;
                if !p.is_valid() {
                    bail!("puzzle has a cell that is not a puzzle piece");
                }
                Object::Puzzle(p)
            }
        };
        let actual = obj.to_tableau()?.lr_boundary()?;
        if parse_boundary(&e.boundary, actual.rect())? != actual {
            bail!("inconsistent boundary: envelope says ({}, {}, {})", e.boundary.mu, e.boundary.nu, e.boundary.lam);
        }
        return Ok(obj);
    }
    if value.get("rows").is_some() {
        let j: TableauJson = serde_json::from_value(value).context("malformed tableau")?;
        return Ok(Object::Tableau(SkewTableau::from_json(&j)?));
    }
    if value.get("left").is_some() {
        let j: HiveJson = serde_json::from_value(value).context("malformed hive")?;
        return Ok(Object::Hive(Hive::from_json(&j)?));
    }
    if value.get("h").is_some() {
        let j: PuzzleJson = serde_json::from_value(value).context("malformed puzzle")?;
        return Ok(Object::Puzzle(Puzzle::from_json(&j)?));
    }
    bail!("unrecognised object: expected an envelope, tableau, hive or puzzle")
}

fn print_json<T: Serialize>(v: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn triple(args: &TripleArgs) -> anyhow::Result<Boundary> {
    let rect = Rect::from_n_d(args.n, args.d)?;
    let p = |s: &str, name: &str| Partition::parse(s, rect).with_context(|| format!("--{name}"));
    Ok(Boundary::new(p(&args.mu, "mu")?, p(&args.nu, "nu")?, p(&args.lam, "lam")?)?)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Enumerate { triple: args, model, render } => {
            let b = triple(&args)?;
            #[derive(Serialize)]
            struct Listing<T> {
                convention: &'static str,
                boundary: BoundaryJson,
                model: Model,
                count: usize,
                objects: Vec<T>,
            }
            match model {
                Model::Tableau => {
                    let ts = enumerate_lr(&b);
                    if render {
                        for t in &ts {
                            println!("{}", t.render());
                        }
                    } else {
                        let objects = ts.iter().map(SkewTableau::to_json).collect();
                        print_json(&Listing { convention: CONVENTION, boundary: (&b).into(), model, count: ts.len(), objects })?;
                    }
                }
                Model::Puzzle => {
                    let pb = PuzzleBoundary::new(b.nu.to_word(), b.lam.to_word(), b.mu.to_word())?;
                    let ps = enumerate_puzzles(&pb);
                    if render {
                        for p in &ps {
                            println!("{}", p.to_text());
                        }
                    } else {
                        let objects = ps.iter().map(Puzzle::to_json).collect();
                        print_json(&Listing { convention: CONVENTION, boundary: (&b).into(), model, count: ps.len(), objects })?;
                    }
                }
                other => bail!("enumerate supports the tableau and puzzle models, not {other:?}"),
            }
        }
        Command::Coeff { triple: args, check } => {
            let b = triple(&args)?;
            let c = lr_coefficient(&b);
            if check {
                let w = lr_coefficient_by_words(&b);
                if w != c {
                    bail!("coefficient routes disagree: enumeration {c}, word filtering {w}");
                }
            }
            println!("{c}");
        }
        Command::Apply { op, input } => {
            let obj = load_object(&read_input(&input)?)?;
            let image = match &obj {
                Object::Hive(h) => Object::Hive(lrkit::companions::symmetry_on_hive(op, h)?),
                _ => Object::from_tableau(&apply(op, &obj.to_tableau()?)?, obj.model())?,
            };
            print_json(&image.envelope()?)?;
        }
        Command::Convert { to, input, svg } => {
            let obj = load_object(&read_input(&input)?)?;
            let out = Object::from_tableau(&obj.to_tableau()?, to)?;
            if let (Some(path), Object::Puzzle(p)) = (&svg, &out) {
                std::fs::write(path, p.to_svg()).with_context(|| format!("writing {}", path.display()))?;
            } else if svg.is_some() {
                bail!("--svg needs --to puzzle");
            }
            print_json(&out.envelope()?)?;
        }
        Command::Verify { n, d, json } => {
            if !(2..=MAX_VERIFY_N).contains(&n) {
                bail!("verify supports 2 <= n <= {MAX_VERIFY_N}");
            }
            if d.is_some_and(|d| d == 0 || d >= n) {
                bail!("d must satisfy 0 < d < n");
            }
            let report = verify_symmetry_sweep(n, d, &Generators::standard());
            if json {
                print_json(&report)?;
            } else {
                print!("{}", report.to_table());
            }
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench { sizes, budget_ms, trials, seed, json } => {
            let report = run_benchmark(&sizes, Duration::from_millis(budget_ms))?;
            let mismatches = lozenge_agreement(trials, 8, seed)?;
            if json {
                #[derive(Serialize)]
                struct Out<'a> {
                    bench: &'a lrkit::bench::BenchReport,
                    lozenge_trials: usize,
                    lozenge_mismatches: usize,
                }
                print_json(&Out { bench: &report, lozenge_trials: trials, lozenge_mismatches: mismatches })?;
            } else {
                print!("{}", report.to_table());
                println!("lozenge routes: {}/{trials} agree", trials - mismatches);
            }
            if mismatches > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    configure_threads_from_env();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
