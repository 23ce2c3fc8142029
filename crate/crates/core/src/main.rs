use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use radlie::corpus::{load, registry, AlgebraDoc};
use radlie::genrad::{registry_ids, run_suite, Analysis, RadicalReport};
use radlie::oracle::{compare, Target};
use radlie::{Caps, Error, Result};

#[derive(Parser)]
#[command(name = "radlie", version, about = "Radicals of structure-constant Lie algebras")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CapArgs {
    /// Largest vector count enumerated in one exhaustive search.
    #[arg(long, global = true, env = "RADLIE_ENUM_CAP")]
    enum_cap: Option<u64>,
    /// Random elements tried before a certificate search gives up.
    #[arg(long, global = true)]
    spin_seeds: Option<usize>,
    #[arg(long, global = true, env = "RADLIE_SEED")]
    seed: Option<u64>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            enum_cap: self.enum_cap.unwrap_or(d.enum_cap),
            spin_seeds: self.spin_seeds.unwrap_or(d.spin_seeds),
            seed: self.seed.unwrap_or(d.seed),
            ..d
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that a document parses and satisfies the Jacobi identity.
    Validate { file: PathBuf },
    /// Compute every radical of one algebra.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Report what could be computed instead of failing on capacity.
        #[arg(long)]
        allow_partial: bool,
    },
    /// Run registered statements over algebras.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated ids, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare against brute-force subspace enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value = "nilradical,radical,frattini,socle,minimal-ideals")]
        targets: String,
    },
    /// Shipped fixtures.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Write every shipped fixture into a directory.
    Emit { dir: PathBuf },
}

fn exit_for(e: &Error) -> ExitCode {
    if e.is_capacity() {
        ExitCode::from(3)
    } else {
        ExitCode::from(2)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let caps = cli.caps.caps();
    match cli.cmd {
        Cmd::Validate { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let doc = AlgebraDoc::from_json(&text)?;
            let l = doc.unchecked_algebra()?;
            l.validate()?;
            println!("ok: {} (dim {} over {})", doc.name, l.dim(), l.field());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Analyze { file, json, allow_partial } => {
            let fx = load(&file)?;
            let an = Analysis::of_fixture(&fx, &caps);
            let ids: Vec<&str> = registry_ids().collect();
            let report = RadicalReport::build(&an, &ids)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            if report.is_partial() && !allow_partial {
                eprintln!("error: some radicals exceed the caps (use --allow-partial)");
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { files, suite, json } => {
            let fixtures = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            let ids: Vec<String> = if suite == "all" {
                Vec::new()
            } else {
                suite.split(',').map(|s| s.trim().to_string()).collect()
            };
            let res = run_suite(&fixtures, &ids, &caps)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&res).expect("serialises"));
            } else {
                print!("{}", res.render_text());
            }
            Ok(if res.summary.fail == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Oracle { file, targets } => {
            let fx = load(&file)?;
            let targets = targets.split(',').map(|t| Target::parse(t.trim())).collect::<Result<Vec<_>>>()?;
            let cmp = compare(&fx.algebra, &targets, &caps)?;
            for c in &cmp {
                let verdict = if c.agree { "agree" } else { "DIFFER" };
                println!("{:<15} {verdict}: oracle {} / main {}", c.target.name(), c.oracle, c.main);
            }
            Ok(if cmp.iter().all(|c| c.agree) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Corpus { cmd: CorpusCmd::Emit { dir } } => {
            for p in registry::emit(&dir)? {
                println!("{}", p.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}
