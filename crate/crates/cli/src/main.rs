use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pqder::constructors::{builtin, builtin_catalog, group_algebra, Builtin, NamedGroup};
use pqder::derivation::{rational_eigenpairs, solve_space};
use pqder::structure::{nilradical_with_cap, primitive_ideals, PrimitiveOptions};
use pqder::verify::{run_suite, verify, AlgebraInfo, CheckId, VerificationReport, VerifyOptions};
use pqder::{io, Algebra, DerivationKind, Error};

mod render;

#[derive(Parser, Debug)]
#[command(
    name = "pqder",
    version,
    about = "Exact (p,q)-derivations, radicals and primitive ideals over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a derivation space and print its basis maps.
    Derive {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        kind: KindArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Print the radical and its nilpotency exponent.
    Radical {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        out: Output,
    },
    /// Decompose A/rad into simple blocks and list the primitive ideals.
    Primitive {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        out: Output,
    },
    /// Rational eigenpairs of one solved basis map.
    Eigen {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        kind: KindArgs,
        /// Index of the basis map in the solved space.
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run a single check.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Check id, e.g. singer_wermer or habb_analogue.
        #[arg(long)]
        check: CheckId,
        #[command(flatten)]
        kind: KindArgs,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        out: Output,
    },
    /// Run every check over a set of algebras and kinds.
    Suite {
        /// Use the whole built-in catalog.
        #[arg(long)]
        all_builtins: bool,
        #[command(flatten)]
        source: Source,
        /// Kinds to run, e.g. `0,1 left jordan:1,2`.
        #[arg(long, num_args = 1.., default_values = ["0,1", "1,0", "1,2", "2,1", "1,3"])]
        kinds: Vec<DerivationKind>,
        #[command(flatten)]
        caps: Caps,
        #[command(flatten)]
        out: Output,
    },
    /// Summarise an algebra.
    Show {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
    /// Write an algebra in the JSON file format.
    Export {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct Source {
    /// Built-in family, e.g. paper_example or full_matrix.
    #[arg(long)]
    builtin: Option<String>,
    /// Size parameter for sized built-in families.
    #[arg(long, requires = "builtin")]
    size: Option<usize>,
    /// Bundled group: C2, C3, C4, C2xC2, S3, Q8, D4.
    #[arg(long)]
    group: Option<NamedGroup>,
    /// Algebra file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Cayley table file; the group algebra over Q is used.
    #[arg(long)]
    cayley: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KindArgs {
    #[arg(long, requires = "q", conflicts_with = "kind")]
    p: Option<u64>,
    #[arg(long, requires = "p")]
    q: Option<u64>,
    /// `p,q`, `left`, `right`, `ordinary`, `jordan:p,q`, `jordan-left`, `jordan-right`.
    #[arg(long)]
    kind: Option<DerivationKind>,
}

#[derive(Args, Debug)]
struct Caps {
    #[arg(long, env = "PQDER_SEED", default_value_t = 0)]
    seed: u64,
    /// Largest polynomial degree the factoriser accepts.
    #[arg(long, default_value_t = pqder::linalg::DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
    /// Nilpotency search bound; defaults to dim + 1.
    #[arg(long)]
    nilpotency_cap: Option<usize>,
    #[arg(long, default_value_t = 4)]
    leibniz_max_n: usize,
    /// Attempts at a separating central element.
    #[arg(long, default_value_t = pqder::structure::DEFAULT_RETRIES)]
    retries: usize,
    /// Random samples per check.
    #[arg(long, default_value_t = 3)]
    samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file (atomically) instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Source {
    fn is_given(&self) -> bool {
        self.builtin.is_some()
            || self.group.is_some()
            || self.file.is_some()
            || self.cayley.is_some()
    }

    fn load(&self) -> Result<Algebra, Failure> {
        let given = [
            self.builtin.is_some(),
            self.group.is_some(),
            self.file.is_some(),
            self.cayley.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(Failure::Usage(
                "give exactly one of --builtin, --group, --file, --cayley".into(),
            ));
        }
        let algebra = if let Some(name) = &self.builtin {
            builtin(Builtin::from_name(name, self.size)?)?
        } else if let Some(g) = self.group {
            g.algebra()
        } else if let Some(path) = &self.file {
            io::load_algebra(path)?
        } else {
            let path = self.cayley.as_ref().expect("one source is present");
            group_algebra(&io::load_cayley(path)?)?
        };
        Ok(algebra)
    }
}

impl KindArgs {
    fn get(&self) -> Result<Option<DerivationKind>, Failure> {
        let kind = match (self.p, self.q, self.kind) {
            (Some(p), Some(q), _) => Some(DerivationKind::PQ { p, q }),
            (_, _, k) => k,
        };
        Ok(kind.map(DerivationKind::validate).transpose()?)
    }

    fn required(&self) -> Result<DerivationKind, Failure> {
        self.get()?
            .ok_or_else(|| Failure::Usage("a kind is required: --p/--q or --kind".into()))
    }
}

impl Caps {
    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            seed: self.seed,
            degree_cap: self.degree_cap,
            retries: self.retries,
            nilpotency_cap: self.nilpotency_cap,
            leibniz_max_n: self.leibniz_max_n,
            samples: self.samples,
        }
    }

    fn primitive_options(&self) -> PrimitiveOptions {
        PrimitiveOptions {
            degree_cap: self.degree_cap,
            retries: self.retries,
            seed: self.seed,
        }
    }
}

#[derive(Debug)]
enum Failure {
    /// Output was emitted but some check failed.
    ChecksFailed,
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

/// What a command produced: the text to emit and whether every check passed.
struct Emitted {
    text: String,
    ok: bool,
}

fn emit(out: &Output, text: String) -> Result<(), Failure> {
    match &out.output {
        Some(path) => io::write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report_output(report: &VerificationReport, format: Format) -> Emitted {
    let text = match format {
        Format::Json => io::report_to_json(report),
        Format::Text => render::report_text(report),
    };
    Emitted {
        text,
        ok: report.all_passed(),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let (out, emitted) = match command {
        Command::Derive { source, kind, out } => {
            let a = source.load()?;
            let space = solve_space(&a, kind.required()?)?;
            let text = render::derive(&a, &space, out.format == Format::Json);
            (out, Emitted { text, ok: true })
        }
        Command::Radical { source, caps, out } => {
            let a = source.load()?;
            let rad = nilradical_with_cap(&a, caps.nilpotency_cap)?;
            let text = render::radical(&a, &rad, out.format == Format::Json);
            (out, Emitted { text, ok: true })
        }
        Command::Primitive { source, caps, out } => {
            let a = source.load()?;
            let dec = primitive_ideals(&a, &caps.primitive_options())?;
            let text = render::primitive(&a, &dec, out.format == Format::Json);
            (out, Emitted { text, ok: true })
        }
        Command::Eigen {
            source,
            kind,
            index,
            out,
        } => {
            let a = source.load()?;
            let space = solve_space(&a, kind.required()?)?;
            let d = space.basis.get(index).ok_or_else(|| {
                Failure::Usage(format!(
                    "map index {index} out of range: the space has dimension {}",
                    space.dim()
                ))
            })?;
            let pairs = rational_eigenpairs(d);
            let text = render::eigen(&a, &space, index, &pairs, out.format == Format::Json);
            (out, Emitted { text, ok: true })
        }
        Command::Verify {
            source,
            check,
            kind,
            caps,
            out,
        } => {
            let a = source.load()?;
            let options = caps.verify_options();
            let result = verify(check, &a, kind.get()?, &options)?;
            let report = VerificationReport::new(options, vec![AlgebraInfo::of(&a)], vec![result]);
            let e = report_output(&report, out.format);
            (out, e)
        }
        Command::Suite {
            all_builtins,
            source,
            kinds,
            caps,
            out,
        } => {
            let algebras = match (all_builtins, source.is_given()) {
                (true, false) => builtin_catalog(),
                (false, true) => vec![source.load()?],
                _ => {
                    return Err(Failure::Usage(
                        "give either --all-builtins or exactly one algebra source".into(),
                    ))
                }
            };
            let kinds = kinds
                .into_iter()
                .map(DerivationKind::validate)
                .collect::<Result<Vec<_>, _>>()?;
            let report = run_suite(&algebras, &kinds, &caps.verify_options());
            let e = report_output(&report, out.format);
            (out, e)
        }
        Command::Show { source, out } => {
            let a = source.load()?;
            let text = render::show(&a, out.format == Format::Json)?;
            (out, Emitted { text, ok: true })
        }
        Command::Export { source, out } => {
            let a = source.load()?;
            (
                out,
                Emitted {
                    text: io::algebra_to_json(&a),
                    ok: true,
                },
            )
        }
    };
    emit(&out, emitted.text)?;
    if emitted.ok {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Library(e @ Error::Internal(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn kind_flags() {
        let cli = Cli::try_parse_from(["pqder", "derive", "--group", "C2", "--kind", "jordan:1,2"])
            .unwrap();
        let Command::Derive { kind, .. } = cli.command else {
            panic!()
        };
        assert_eq!(
            kind.required().unwrap(),
            DerivationKind::JordanPQ { p: 1, q: 2 }
        );
        assert!(Cli::try_parse_from(["pqder", "derive", "--group", "C2", "--p", "1"]).is_err());
        assert!(Cli::try_parse_from([
            "pqder", "derive", "--group", "C2", "--p", "1", "--q", "2", "--kind", "left"
        ])
        .is_err());
    }
}
