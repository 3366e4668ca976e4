//! Command-line front end.
//!
//! Each subcommand runs one library operation on files in the formats of
//! [`crate::format`]. Exit status is 0 on success, 1 for a domain error
//! (cycle, overlap, comparable forced pair, broken bijection, cap) and 2 for
//! parse, I/O or usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::constructions::{
    bipartition_order, dense_interleave, density_gap, partition_block_order, Bijection, Partition,
};
use crate::error::OrderError;
use crate::extension::{
    count_linear_extensions_capped, enumerate_linear_extensions, linear_extension, szpilrajn, ForcedPair,
    DEFAULT_COUNT_CAP, DEFAULT_ENUM_LIMIT,
};
use crate::format::{self, ParseError};
use crate::order::{
    order_from_enumeration, transitive_closure, validate, ElementId, LinearOrder, Poset, StrictRelation,
};
use crate::policy::TieBreakPolicy;

/// Environment variable overriding the default enumeration limit.
pub const ENUM_LIMIT_VAR: &str = "ORDEXT_ENUM_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "ordext",
    version,
    about = "Partial orders, linear extensions and structured total orders"
)]
pub struct Invocation {
    /// Output mode: `human` prints one element per line, `machine` one
    /// tab-separated line per order.
    #[arg(long, value_enum, global = true, default_value_t = OutputMode::Human)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Machine,
}

#[derive(Debug, Args)]
pub struct TieBreak {
    /// input | lex | seed:<u64>
    #[arg(long = "tie-break", value_name = "POLICY", default_value = "input")]
    pub policy: TieBreakPolicy,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a relation file is a partial order and print it closed.
    Validate {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Reject relations that are not already transitively closed.
        #[arg(long)]
        no_close: bool,
        /// Restrict the order to the elements listed in this subset file.
        #[arg(long, value_name = "SUBSET")]
        restrict: Option<PathBuf>,
    },
    /// Print the transitive closure of the pairs in a relation file.
    Closure {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
    },
    /// Print one linear extension.
    Linearize {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        #[command(flatten)]
        tie_break: TieBreak,
    },
    /// Print a linear extension, optionally with `a` forced before `b`.
    Szpilrajn {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Force `A` before `B`; the two must be incomparable.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        force: Option<Vec<String>>,
        #[command(flatten)]
        tie_break: TieBreak,
    },
    /// Print every linear extension, up to a limit.
    Enumerate {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Defaults to $ORDEXT_ENUM_LIMIT, else 1000000.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print the number of linear extensions.
    Count {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Largest ground set accepted.
        #[arg(long, default_value_t = DEFAULT_COUNT_CAP)]
        cap: usize,
    },
    /// List incomparable pairs, or test one pair with --check.
    Incomparable {
        /// Relation file, or `-` for stdin.
        file: PathBuf,
        /// Test only whether `X` and `Y` are incomparable.
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        check: Option<Vec<String>>,
    },
    /// Total order with subset A first and subset B last.
    Bipartition {
        /// Ground set file, one element per line.
        ground: PathBuf,
        /// Subset placed first.
        a: PathBuf,
        /// Subset placed last, disjoint from A.
        b: PathBuf,
        #[command(flatten)]
        tie_break: TieBreak,
    },
    /// Total order in which each partition block is an interval.
    Blocks {
        /// Ground set file, one element per line.
        ground: PathBuf,
        /// Blocks separated by `---` lines; unlisted elements come last.
        partition: PathBuf,
        #[command(flatten)]
        tie_break: TieBreak,
    },
    /// Interleave Y with its image under a bijection onto X.
    Interleave {
        /// Domain set Y, one element per line.
        y: PathBuf,
        /// Codomain set X, disjoint from Y.
        x: PathBuf,
        /// Bijection Y -> X as `y -> x` lines.
        map: PathBuf,
        #[command(flatten)]
        tie_break: TieBreak,
    },
    /// Test whether T1 is (strictly) dense in T2 under a given order.
    DenseCheck {
        /// The order, one element per line, least first.
        order: PathBuf,
        /// Subset that must fall between neighbours of T2.
        t1: PathBuf,
        /// Subset whose consecutive pairs are tested.
        t2: PathBuf,
        /// Use the non-strict form, where an endpoint of the pair counts.
        #[arg(long)]
        weak: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Domain(#[from] OrderError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

struct Context<'a> {
    mode: OutputMode,
    enum_limit: Option<&'a str>,
    stdin: &'a mut dyn Read,
    out: Vec<u8>,
    notes: Vec<String>,
}

impl Context<'_> {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let name = path.display().to_string();
        let io_err = |source| CliError::Io {
            path: name.clone(),
            source,
        };
        if path == Path::new("-") {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(io_err)
        }
    }

    fn parsed<T>(&mut self, path: &Path, parse: fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
        let text = self.read(path)?;
        parse(&text).map_err(|source| CliError::Parse {
            path: path.display().to_string(),
            source,
        })
    }

    fn poset(&mut self, path: &Path, auto_close: bool) -> Result<Poset, CliError> {
        let f = self.parsed(path, format::parse_relation)?;
        Ok(validate(f.ground, f.pairs, auto_close)?)
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.extend_from_slice(s.as_ref().as_bytes());
        self.out.push(b'\n');
    }

    fn order(&mut self, order: &LinearOrder) {
        match self.mode {
            OutputMode::Human => {
                for e in order.sequence() {
                    self.line(e.as_str());
                }
            }
            OutputMode::Machine => self.line(join_tab(order.sequence())),
        }
    }

    fn relation(&mut self, relation: &StrictRelation) {
        match self.mode {
            OutputMode::Human => self.out.extend_from_slice(format::render_relation(relation).as_bytes()),
            OutputMode::Machine => {
                for (x, y) in relation {
                    self.line(format!("{x}\t{y}"));
                }
            }
        }
    }

    fn flag(&mut self, value: bool, yes: &str, no: impl FnOnce() -> String) {
        match self.mode {
            OutputMode::Human => {
                let text = if value { yes.to_string() } else { no() };
                self.line(text)
            }
            OutputMode::Machine => self.line(if value { "true" } else { "false" }),
        }
    }
}

fn join_tab(seq: &[ElementId]) -> String {
    seq.iter().map(ElementId::as_str).collect::<Vec<_>>().join("\t")
}

fn element(token: &str) -> Result<ElementId, CliError> {
    ElementId::new(token).map_err(|e| CliError::Usage(e.to_string()))
}

fn execute(cmd: &Command, ctx: &mut Context<'_>) -> Result<(), CliError> {
    match cmd {
        Command::Validate {
            file,
            no_close,
            restrict,
        } => {
            let mut poset = ctx.poset(file, !no_close)?;
            if let Some(subset) = restrict {
                let subset = ctx.parsed(subset, format::parse_subset)?;
                poset = poset.restrict(&subset)?;
            }
            match ctx.mode {
                OutputMode::Human => {
                    let text = format::render_poset(&poset);
                    ctx.out.extend_from_slice(text.as_bytes());
                }
                OutputMode::Machine => {
                    ctx.line(join_tab(poset.ground()));
                    let pairs: Vec<String> = poset.pairs().map(|(x, y)| format!("{x}\t{y}")).collect();
                    for p in pairs {
                        ctx.line(p);
                    }
                }
            }
        }
        Command::Closure { file } => {
            let f = ctx.parsed(file, format::parse_relation)?;
            let relation = StrictRelation::from_pairs(f.pairs)?;
            let closed = transitive_closure(&relation)?;
            ctx.relation(&closed);
        }
        Command::Linearize { file, tie_break } => {
            let poset = ctx.poset(file, true)?;
            let order = linear_extension(&poset, tie_break.policy);
            ctx.order(&order);
        }
        Command::Szpilrajn { file, force, tie_break } => {
            let poset = ctx.poset(file, true)?;
            let forced = match force.as_deref() {
                Some([a, b]) => Some(ForcedPair::new(element(a)?, element(b)?)?),
                Some(_) => unreachable!("clap enforces two values"),
                None => None,
            };
            let cert = szpilrajn(&poset, forced.as_ref(), tie_break.policy)?;
            ctx.order(cert.output_order());
        }
        Command::Enumerate { file, limit } => {
            let limit = match (limit, ctx.enum_limit) {
                (Some(n), _) => *n,
                (None, Some(v)) => v
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{ENUM_LIMIT_VAR}={v:?} is not a count")))?,
                (None, None) => DEFAULT_ENUM_LIMIT,
            };
            let poset = ctx.poset(file, true)?;
            let all = enumerate_linear_extensions(&poset, limit);
            for (k, order) in all.orders.iter().enumerate() {
                if k > 0 && ctx.mode == OutputMode::Human {
                    ctx.line("");
                }
                ctx.order(order);
            }
            if all.truncated {
                ctx.notes.push(format!("output truncated after {limit} extensions"));
            }
        }
        Command::Count { file, cap } => {
            let poset = ctx.poset(file, true)?;
            let n = count_linear_extensions_capped(&poset, *cap)?;
            ctx.line(n.to_string());
        }
        Command::Incomparable { file, check } => {
            let poset = ctx.poset(file, true)?;
            match check.as_deref() {
                Some([x, y]) => {
                    let (x, y) = (element(x)?, element(y)?);
                    let comparable = poset.is_comparable(&x, &y)?;
                    ctx.flag(comparable, "comparable", || "incomparable".to_string());
                }
                Some(_) => unreachable!("clap enforces two values"),
                None => {
                    let sep = match ctx.mode {
                        OutputMode::Human => " || ",
                        OutputMode::Machine => "\t",
                    };
                    for (x, y) in poset.incomparable_pairs() {
                        ctx.line(format!("{x}{sep}{y}"));
                    }
                }
            }
        }
        Command::Bipartition {
            ground,
            a,
            b,
            tie_break,
        } => {
            let ground = ctx.parsed(ground, format::parse_subset)?;
            let a = ctx.parsed(a, format::parse_subset)?;
            let b = ctx.parsed(b, format::parse_subset)?;
            let order = bipartition_order(&ground, &a, &b, tie_break.policy)?;
            ctx.order(&order);
        }
        Command::Blocks {
            ground,
            partition,
            tie_break,
        } => {
            let ground = ctx.parsed(ground, format::parse_subset)?;
            let partition = Partition::new(ctx.parsed(partition, format::parse_partition)?)?;
            let order = partition_block_order(&ground, &partition, tie_break.policy)?;
            ctx.order(&order);
        }
        Command::Interleave { y, x, map, tie_break } => {
            let y = ctx.parsed(y, format::parse_subset)?;
            let x = ctx.parsed(x, format::parse_subset)?;
            let phi = Bijection::from_pairs(ctx.parsed(map, format::parse_bijection)?)?;
            let order = dense_interleave(&y, &x, &phi, tie_break.policy)?;
            ctx.order(&order);
        }
        Command::DenseCheck { order, t1, t2, weak } => {
            let order = order_from_enumeration(ctx.parsed(order, format::parse_subset)?)?;
            let t1 = ctx.parsed(t1, format::parse_subset)?;
            let t2 = ctx.parsed(t2, format::parse_subset)?;
            let gap = density_gap(&t1, &t2, &order, !weak)?;
            let between = if *weak { "between or at" } else { "strictly between" };
            ctx.flag(gap.is_none(), "dense", || {
                let (a, b) = gap.clone().unwrap();
                format!("not dense: no element of T1 {between} `{a}` and `{b}`")
            });
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
///
/// `enum_limit` is the value of [`ENUM_LIMIT_VAR`], if set. Output goes to
/// `stdout` only when the command succeeds; diagnostics go to `stderr`.
/// Returns the process exit status.
pub fn run<I, T>(
    args: I,
    enum_limit: Option<&str>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Context {
        mode: inv.output,
        enum_limit,
        stdin,
        out: Vec::new(),
        notes: Vec::new(),
    };
    match execute(&inv.command, &mut ctx) {
        Ok(()) => {
            if stdout.write_all(&ctx.out).and_then(|_| stdout.flush()).is_err() {
                return 2;
            }
            for note in &ctx.notes {
                let _ = writeln!(stderr, "note: {note}");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ordext").chain(args.iter().copied());
        let code = run(argv, None, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn linearize_chain_from_stdin() {
        let (code, out, _) = run_str(&["linearize", "--tie-break", "lex", "-"], "a < b\nb < c\n");
        assert_eq!(code, 0);
        assert_eq!(out, "a\nb\nc\n");
    }

    #[test]
    fn forced_comparable_pair_exits_1() {
        let (code, out, err) = run_str(&["szpilrajn", "--force", "b", "a", "-"], "a < b\n");
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(err.contains("`b` and `a`"), "{err}");
    }

    #[test]
    fn count_antichain() {
        let (code, out, _) = run_str(&["count", "-"], "a\nb\nc\n---\n");
        assert_eq!((code, out.as_str()), (0, "6\n"));
    }

    #[test]
    fn usage_and_parse_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"], "").0, 2);
        assert_eq!(run_str(&["count", "--tie-break", "lex", "-"], "").0, 2);
        assert_eq!(run_str(&["linearize", "--tie-break", "seed:x", "-"], "").0, 2);
        let (code, _, err) = run_str(&["count", "-"], "a < b\nnonsense here\n");
        assert_eq!(code, 2);
        assert!(err.contains("line 2"), "{err}");
        assert_eq!(run_str(&["count", "/nonexistent/file"], "").0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_str(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("szpilrajn"));
    }

    #[test]
    fn machine_mode() {
        let (_, out, _) = run_str(&["--output", "machine", "linearize", "-"], "a < b\nb < c\n");
        assert_eq!(out, "a\tb\tc\n");
        let (_, out, _) = run_str(&["incomparable", "--output", "machine", "-"], "0<x\n0<y\nx<1\ny<1\n");
        assert_eq!(out, "x\ty\n");
    }

    #[test]
    fn enum_limit_from_env() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            ["ordext", "--output", "machine", "enumerate", "-"],
            Some("2"),
            &mut "a\nb\nc\n---\n".as_bytes(),
            &mut out,
            &mut err,
        );
        assert_eq!(code, 0);
        assert_eq!(String::from_utf8(out).unwrap(), "a\tb\tc\na\tc\tb\n");
        assert!(String::from_utf8(err).unwrap().contains("truncated"));

        let code = run(
            ["ordext", "enumerate", "-"],
            Some("many"),
            &mut "a < b".as_bytes(),
            &mut Vec::new(),
            &mut Vec::new(),
        );
        assert_eq!(code, 2);
    }
}
