//! The `semilab` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 bad input data, 3 internal
//! invariant violation.

pub mod report;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use semilab::algebra::{contracted_algebra, numerical_block_sizes, semigroup_algebra, summary};
use semilab::constructions::{
    adjoin_zero, adjoin_zprime, b2, brandt, embed_indecomposable, munn, rees_matrix, times0,
    ReesMatrixSpec, Semilattice,
};
use semilab::enumeration::{classify_b2c, classify_order9, enumerate_where};
use semilab::indecomposability::is_s_indecomposable_graph;
use semilab::lattice::{is_b2_combinatorial, verify_prop8};
use semilab::{find_isomorphism, sg, Error, IsoOutcome, Semigroup};

pub use report::{analyze, AnalysisReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "semilab",
    version,
    about = "Finite semigroups, their algebras and s-indecomposability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a .sg file holds an associative table.
    Validate { file: PathBuf },
    /// Full structural and algebraic report.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Radical and Wedderburn block data of the semigroup algebra.
    Algebra {
        file: PathBuf,
        /// Use the contracted algebra (the zero of S becomes 0).
        #[arg(long)]
        contracted: bool,
        /// Also compute the block sizes numerically.
        #[arg(long)]
        blocks: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a constructed semigroup as a .sg table.
    Construct {
        #[command(subcommand)]
        what: Construction,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Decide isomorphism and print a bijection when one exists.
    Iso { a: PathBuf, b: PathBuf },
    /// All semigroups of a small order, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        #[arg(long)]
        count_only: bool,
    },
    /// B2-combinatorial semigroups of order 1, 5 or 9.
    ClassifyB2c {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check zero, algebra, ideals and images of a B2-combinatorial semigroup.
    VerifyProp8 {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Construction {
    B2,
    Brandt {
        n: usize,
    },
    /// The chain 0 < 1 < … < n−1.
    Chain {
        n: usize,
    },
    /// One of C3, V, U, F, X.
    Semilattice {
        name: String,
    },
    /// Rees matrix semigroup over the trivial group; rows of the 0/1
    /// sandwich pattern separated by ';', e.g. "1 1; 0 1".
    Rees {
        pattern: String,
    },
    Times0 {
        a: PathBuf,
        b: PathBuf,
    },
    AdjoinZero {
        a: PathBuf,
    },
    Zprime {
        a: PathBuf,
    },
    /// `S⁰ ×₀ B₂`, an s-indecomposable semigroup containing S.
    Embed {
        a: PathBuf,
    },
    /// Munn semigroup of a named semilattice or of a .sg semilattice file.
    Munn {
        e: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Filter {
    SIndec,
    B2c,
    Zero,
}

/// A failed command, tagged with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn from_core(context: &str, e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::NumericalAmbiguity { .. } => EXIT_INVARIANT,
            _ => EXIT_INPUT,
        };
        let message = if context.is_empty() {
            e.to_string()
        } else {
            format!("{context}: {e}")
        };
        Failure { code, message }
    }
}

type Outcome = Result<String, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "semilab: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<(Semigroup, Vec<u8>), Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::input(format!("{}: not valid UTF-8", path.display())))?;
    let s = sg::parse(&text).map_err(|e| Failure::from_core(&path.display().to_string(), e))?;
    Ok((s, bytes))
}

fn load(path: &Path) -> Result<Semigroup, Failure> {
    read(path).map(|(s, _)| s)
}

fn core<T>(context: &str, r: semilab::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::from_core(context, e))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => {
            let s = load(&file)?;
            let zero = s.zero().map_or("none".to_string(), |z| z.to_string());
            Ok(format!(
                "{}: ok, {} elements, zero {zero}\n",
                file.display(),
                s.size()
            ))
        }
        Command::Analyze {
            file,
            json: as_json,
            seed,
        } => {
            let (s, bytes) = read(&file)?;
            let r = core(&file.display().to_string(), analyze(&s, &bytes, seed))?;
            Ok(if as_json { json(&r) } else { r.to_text() })
        }
        Command::Algebra {
            file,
            contracted,
            blocks,
            seed,
        } => {
            let s = load(&file)?;
            let ctx = file.display().to_string();
            let a = if contracted {
                core(&ctx, contracted_algebra(&s))?
            } else {
                semigroup_algebra(&s)
            };
            let sm = summary(&a);
            let mut text = format!(
                "dim {}\nradical {}\nsemisimple {}\nblocks {}\none-dimensional blocks {}\n",
                sm.dim,
                sm.radical_dim,
                sm.semisimple_dim(),
                sm.num_blocks,
                sm.one_dim_blocks
            );
            if blocks {
                let sizes = core(&ctx, numerical_block_sizes(&a, seed))?;
                let _ = writeln!(text, "block sizes {sizes:?}");
            }
            Ok(text)
        }
        Command::Construct { what, output } => {
            let (s, comment) = construct(what)?;
            let text = sg::write(&s, Some(&comment));
            match output {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Iso { a, b } => {
            let (sa, sb) = (load(&a)?, load(&b)?);
            Ok(match find_isomorphism(&sa, &sb) {
                IsoOutcome::Isomorphic(m) => {
                    let mut text = String::from("isomorphic\n");
                    for (x, y) in m.as_slice().iter().enumerate() {
                        let _ = writeln!(text, "{x} -> {y}");
                    }
                    text
                }
                IsoOutcome::NotIsomorphic(d) => format!("not isomorphic ({d})\n"),
            })
        }
        Command::Enumerate {
            order,
            filter,
            count_only,
        } => {
            let predicate = |s: &Semigroup| match filter {
                None => true,
                Some(Filter::SIndec) => is_s_indecomposable_graph(s),
                Some(Filter::B2c) => is_b2_combinatorial(s),
                Some(Filter::Zero) => s.zero().is_some(),
            };
            let classes = core("", enumerate_where(order, predicate))?;
            if count_only {
                return Ok(format!("{}\n", classes.len()));
            }
            let mut text = String::new();
            for (k, c) in classes.iter().enumerate() {
                text += &sg::write(
                    &c.to_semigroup(),
                    Some(&format!("class {} of order {order}", k + 1)),
                );
            }
            Ok(text)
        }
        Command::ClassifyB2c {
            order,
            json: as_json,
        } => classify(order, as_json),
        Command::VerifyProp8 {
            file,
            json: as_json,
            seed,
        } => {
            let s = load(&file)?;
            let r = core(&file.display().to_string(), verify_prop8(&s, seed))?;
            if !r.all_hold() {
                return Err(Failure {
                    code: EXIT_INVARIANT,
                    message: format!(
                        "{}: check failed: {}",
                        file.display(),
                        serde_json::to_string(&r).unwrap()
                    ),
                });
            }
            if as_json {
                return Ok(json(&r));
            }
            let tuple = |a: &semilab::AlgebraSummary| {
                format!(
                    "({}, {}, {}, {})",
                    a.dim, a.radical_dim, a.num_blocks, a.one_dim_blocks
                )
            };
            Ok(format!(
                "zero: {}\nalgebra: {} (expected {})\nblocks: {:?}\nideals: {} checked, ok {}\nimages: {} checked, ok {}\n",
                r.has_zero,
                tuple(&r.summary),
                tuple(&r.expected_summary),
                r.blocks,
                r.ideals_checked,
                r.ideals_ok,
                r.quotients_checked,
                r.quotients_ok
            ))
        }
    }
}

fn parse_pattern(text: &str) -> Result<Vec<Vec<u8>>, Failure> {
    text.split(';')
        .map(|row| {
            row.split_whitespace()
                .map(|t| match t {
                    "0" => Ok(0),
                    "1" => Ok(1),
                    _ => Err(Failure::input(format!(
                        "pattern entry {t:?} must be 0 or 1"
                    ))),
                })
                .collect()
        })
        .collect()
}

fn semilattice_arg(e: &str) -> Result<Semilattice, Failure> {
    if let Ok(named) = Semilattice::named(e) {
        return Ok(named);
    }
    core(e, Semilattice::new(load(Path::new(e))?))
}

fn construct(what: Construction) -> Result<(Semigroup, String), Failure> {
    let ctx = |p: &Path| p.display().to_string();
    Ok(match what {
        Construction::B2 => (b2(), "B2".into()),
        Construction::Brandt { n } => (
            core("brandt", brandt(n))?,
            format!("Brandt semigroup B_{n}"),
        ),
        Construction::Chain { n } => (
            core("chain", Semilattice::chain(n))?.into_semigroup(),
            format!("chain of {n} elements"),
        ),
        Construction::Semilattice { name } => (
            core(&name, Semilattice::named(&name))?.into_semigroup(),
            name,
        ),
        Construction::Rees { pattern } => {
            let spec = core(
                "rees",
                ReesMatrixSpec::trivial_group(&parse_pattern(&pattern)?),
            )?;
            (rees_matrix(&spec), format!("M0(1; P) with P = {pattern}"))
        }
        Construction::Times0 { a, b } => {
            let s = core(&ctx(&a), times0(&load(&a)?, &load(&b)?))?;
            (s, format!("{} x0 {}", a.display(), b.display()))
        }
        Construction::AdjoinZero { a } => (
            adjoin_zero(&load(&a)?),
            format!("{} with a zero adjoined", a.display()),
        ),
        Construction::Zprime { a } => (
            core(&ctx(&a), adjoin_zprime(&load(&a)?))?,
            format!("{} with z' adjoined", a.display()),
        ),
        Construction::Embed { a } => (
            embed_indecomposable(&load(&a)?).0,
            format!("{} embedded in S0 x0 B2", a.display()),
        ),
        Construction::Munn { e } => (
            core(&e, munn(&semilattice_arg(&e)?))?,
            format!("Munn semigroup of {e}"),
        ),
    })
}

fn classify(order: usize, as_json: bool) -> Outcome {
    if order != 9 {
        let classes = core("classify-b2c", classify_b2c(order))?;
        if as_json {
            return Ok(json(&classes));
        }
        let mut text = String::new();
        for (k, c) in classes.iter().enumerate() {
            text += &sg::write(
                &c.to_semigroup(),
                Some(&format!(
                    "B2-combinatorial class {} of order {order}",
                    k + 1
                )),
            );
        }
        return Ok(text);
    }
    let c = core("classify-b2c", classify_order9())?;
    if as_json {
        return Ok(json(&c));
    }
    let mut text = String::new();
    for (k, (class, name)) in c.classes.iter().zip(&c.class_names).enumerate() {
        text += &sg::write(
            &class.to_semigroup(),
            Some(&format!(
                "B2-combinatorial class {} of order 9: {name}",
                k + 1
            )),
        );
    }
    let mut evidence = vec![
        format!("classes: {}", c.classes.len()),
        format!("T_U isomorphic to C3 x0 B2: {}", c.munn_u_is_c3_times_b2),
        format!("T_F isomorphic to no Y x0 B2: {}", c.munn_f_is_no_times0),
        format!(
            "E(C3 x0 B2) = U, E(V x0 B2) = X, E(T_F) = F: {:?}",
            c.idempotent_semilattices
        ),
        format!("Munn semigroups searched: {}", c.searches.len()),
    ];
    for s in c.searches.iter().filter(|s| !s.subsemigroups.is_empty()) {
        evidence.push(format!(
            "T_{} ({} elements): {} subsemigroup(s), classes {:?}",
            s.name.as_deref().unwrap_or("?"),
            s.munn_size,
            s.subsemigroups.len(),
            s.class_of.iter().map(|k| k + 1).collect::<Vec<_>>()
        ));
    }
    evidence.push(c.note.clone());
    for line in evidence {
        let _ = writeln!(text, "# {line}");
    }
    Ok(text)
}
