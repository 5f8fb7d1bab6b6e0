//! Command-line surface: argument parsing and command execution.
//!
//! [`run`] never prints. It returns the stdout lines, the stderr summary and
//! the exit code, so the binary stays a thin shell and commands can be
//! exercised in-process.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rough3_core::approximation::{check_approximation_laws, check_monadic_axioms};
use rough3_core::lukasiewicz::{
    check_axioms, check_center_law, check_determination, check_kleene, check_residuation, derived_operator_checks,
    find_center, import_rough_algebra,
};
use rough3_core::monteiro::{
    membership, membership_all, quotient_algebra, quotient_iso_b_star, verify_congruence,
    verify_distribution_identities, verify_membership_extension, verify_quotient_axioms, verify_set_level_operations,
};
use rough3_core::representation::{
    filter_names, prime_filters_exhaustive, represent, verify_representation_identities, PrimeFilter,
};
use rough3_core::rough::{rough_of, verify_rough_operations, verify_rough_structure};
use rough3_core::{Check, Counterexample, Error, FiniteAlgebra, ObjectSet, Partition, Report, Witness};

use crate::formats::{
    to_line, AlgebraJson, CheckJson, EmbeddingJson, FilterJson, GradeJson, InputDigest, PartitionJson,
    RepresentationJson, RoughSetJson, RunReport,
};
use crate::table::parse_table;

pub const DEFAULT_MAX_UNIVERSE: usize = 6;
pub const DEFAULT_MAX_ELEMENTS: usize = 16;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "rough3", version, about = "Rough sets and three-valued Lukasiewicz algebras")]
pub struct Cli {
    /// Emit JSON on stdout. This is always the case; the flag is accepted for scripts that pass it.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the indiscernibility partition of a table.
    Partition {
        #[arg(long, value_name = "PATH")]
        table: PathBuf,
    },
    /// Print the lower and upper approximations of a set of objects.
    Approx {
        #[arg(long, value_name = "PATH")]
        table: PathBuf,
        /// Comma-separated object ids; an empty string is the empty set.
        #[arg(long, value_name = "IDS", allow_hyphen_values = true)]
        set: String,
    },
    /// Print three-valued membership grades, one JSON line per object.
    Membership {
        #[arg(long, value_name = "PATH")]
        table: PathBuf,
        #[arg(long, value_name = "IDS", allow_hyphen_values = true)]
        set: String,
        /// Report only this object.
        #[arg(long, value_name = "ID")]
        object: Option<String>,
    },
    /// Run a verification suite and print a report; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Represent an algebra as rough sets over its prime filters.
    Represent {
        #[arg(long, value_name = "PATH")]
        algebra: PathBuf,
        /// Largest number of prime filters whose rough-set algebra is tabulated.
        #[arg(long, default_value_t = DEFAULT_MAX_UNIVERSE)]
        max_universe: usize,
        /// Largest algebra whose prime filters are also found by brute force.
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
    },
    /// Print the quotient of the powerset by rough equality as an algebra.
    Quotient {
        #[arg(long, value_name = "PATH")]
        table: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_UNIVERSE)]
        max_universe: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["table", "algebra"])))]
pub struct VerifyArgs {
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub algebra: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Largest universe that is enumerated exhaustively.
    #[arg(long, default_value_t = DEFAULT_MAX_UNIVERSE)]
    pub max_universe: usize,
    /// Largest algebra whose prime filters are also found by brute force.
    #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
    pub max_elements: usize,
    /// Add elapsed wall-clock milliseconds to the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Monadic,
    Lukasiewicz,
    Determination,
    Representation,
    Quotient,
    Membership,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Monadic,
        Suite::Lukasiewicz,
        Suite::Determination,
        Suite::Representation,
        Suite::Quotient,
        Suite::Membership,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Monadic => "monadic",
            Suite::Lukasiewicz => "lukasiewicz",
            Suite::Determination => "determination",
            Suite::Representation => "representation",
            Suite::Quotient => "quotient",
            Suite::Membership => "membership",
            Suite::All => "all",
        }
    }

    fn needs_table(self) -> bool {
        matches!(self, Suite::Monadic | Suite::Quotient | Suite::Membership)
    }
}

/// What a command wants written, and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: Vec<String>,
    pub stderr: Vec<String>,
    pub code: u8,
}

pub fn run(cli: &Cli) -> Output {
    execute(&cli.command).unwrap_or_else(|e| Output {
        stdout: Vec::new(),
        stderr: vec![format!("error: {e:#}")],
        code: EXIT_INPUT,
    })
}

fn execute(command: &Command) -> anyhow::Result<Output> {
    match command {
        Command::Partition { table } => cmd_partition(table),
        Command::Approx { table, set } => cmd_approx(table, set),
        Command::Membership { table, set, object } => cmd_membership(table, set, object.as_deref()),
        Command::Verify(args) => cmd_verify(args),
        Command::Represent {
            algebra,
            max_universe,
            max_elements,
        } => cmd_represent(algebra, *max_universe, *max_elements),
        Command::Quotient { table, max_universe } => cmd_quotient(table, *max_universe),
    }
}

struct Loaded<T> {
    value: T,
    digest: InputDigest,
}

fn read_input(path: &Path) -> anyhow::Result<(String, InputDigest)> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let digest = InputDigest::new(&path.display().to_string(), &bytes);
    let text = String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    Ok((text, digest))
}

fn load_table(path: &Path) -> anyhow::Result<Loaded<Partition>> {
    let (text, digest) = read_input(path)?;
    let table = parse_table(&text).with_context(|| path.display().to_string())?;
    Ok(Loaded {
        value: table.indiscernibility_partition(),
        digest,
    })
}

fn load_algebra(path: &Path) -> anyhow::Result<Loaded<FiniteAlgebra>> {
    let (text, digest) = read_input(path)?;
    let json: AlgebraJson = serde_json::from_str(&text).with_context(|| path.display().to_string())?;
    let value = json.into_algebra().with_context(|| path.display().to_string())?;
    Ok(Loaded { value, digest })
}

/// Parses a comma-separated list of object ids; blank items are ignored.
pub fn parse_set(p: &Partition, spec: &str) -> Result<ObjectSet, Error> {
    p.set_of(spec.split(',').map(str::trim).filter(|s| !s.is_empty()))
}

fn ok(stdout: Vec<String>, summary: String) -> anyhow::Result<Output> {
    Ok(Output {
        stdout,
        stderr: vec![summary],
        code: EXIT_PASS,
    })
}

fn cmd_partition(table: &Path) -> anyhow::Result<Output> {
    let p = load_table(table)?.value;
    let summary = format!("{} objects in {} blocks", p.len(), p.blocks().len());
    ok(vec![to_line(&PartitionJson::new(&p))], summary)
}

fn cmd_approx(table: &Path, set: &str) -> anyhow::Result<Output> {
    let p = load_table(table)?.value;
    let r = rough_of(&p, &parse_set(&p, set)?)?;
    let summary = format!(
        "lower: {} of {n} objects, upper: {} of {n}",
        r.lower().count(),
        r.upper().count(),
        n = p.len()
    );
    ok(vec![to_line(&RoughSetJson::new(&p, &r))], summary)
}

fn cmd_membership(table: &Path, set: &str, object: Option<&str>) -> anyhow::Result<Output> {
    let p = load_table(table)?.value;
    let a = parse_set(&p, set)?;
    let lines: Vec<String> = match object {
        Some(id) => {
            let x = p.index_of(id).ok_or_else(|| Error::UnknownObject(id.into()))?;
            vec![to_line(&GradeJson::new(id, membership(&p, &a, x)?))]
        }
        None => membership_all(&p, &a)?
            .into_iter()
            .zip(p.universe())
            .map(|(g, id)| to_line(&GradeJson::new(id, g)))
            .collect(),
    };
    let summary = format!("graded {} of {} objects", lines.len(), p.len());
    ok(lines, summary)
}

fn cmd_quotient(table: &Path, max_universe: usize) -> anyhow::Result<Output> {
    let p = load_table(table)?.value;
    let q = quotient_algebra(&p, max_universe)?;
    let summary = format!("{} subsets fall into {} classes", 1u64 << p.len(), q.classes.len());
    ok(vec![to_line(&AlgebraJson::from_algebra(&q.algebra))], summary)
}

fn summarize(label: &str, r: &Report) -> Vec<String> {
    let failed: Vec<&Check> = r.checks.iter().filter(|c| !c.passed()).collect();
    let mut lines = vec![format!("{label}: {} checks, {} failed", r.checks.len(), failed.len())];
    lines.extend(failed.iter().map(|c| format!("  FAIL {}", c.name)));
    lines
}

fn exit_code(r: &Report) -> u8 {
    if r.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Output> {
    let start = Instant::now();
    // `all` scopes each member suite itself
    let scope = |r: Report| match args.suite {
        Suite::All => r,
        s => r.scoped(s.name()),
    };
    let (report, digest) = match (&args.table, &args.algebra) {
        (Some(path), _) => {
            let t = load_table(path)?;
            (scope(table_suite(&t.value, args.suite, args)?), t.digest)
        }
        (None, Some(path)) => {
            if args.suite.needs_table() {
                bail!("suite {} needs --table input", args.suite.name());
            }
            let a = load_algebra(path)?;
            (scope(algebra_suite(&a.value, args.suite, args)?), a.digest)
        }
        (None, None) => bail!("one of --table or --algebra is required"),
    };
    let run = RunReport {
        command: "verify".into(),
        suite: args.suite.name().into(),
        inputs: vec![digest],
        passed: report.passed(),
        checks: CheckJson::all(&report),
        elapsed_ms: args.timing.then(|| start.elapsed().as_millis() as u64),
    };
    Ok(Output {
        stdout: vec![to_line(&run)],
        stderr: summarize(&format!("verify {}", args.suite.name()), &report),
        code: exit_code(&report),
    })
}

/// Runs one suite against the approximation space of a table.
pub fn table_suite(p: &Partition, suite: Suite, args: &VerifyArgs) -> Result<Report, Error> {
    let n = args.max_universe;
    p.check_bound(n)?;
    let mut r = Report::new();
    match suite {
        Suite::Monadic => {
            r.extend(check_monadic_axioms(p, n)?);
            r.extend(check_approximation_laws(p, n)?);
        }
        Suite::Lukasiewicz => {
            let a = import_rough_algebra(p, n)?;
            r.extend(check_axioms(&a));
            r.extend(derived_operator_checks(&a));
            r.extend(verify_rough_operations(p, n)?);
        }
        Suite::Determination => r.extend(verify_rough_structure(p, n)?),
        Suite::Representation => r.extend(representation_checks(&import_rough_algebra(p, n)?, args)?),
        Suite::Quotient => {
            r.extend(verify_congruence(p, n)?);
            r.extend(verify_quotient_axioms(p, n)?);
            r.extend(verify_distribution_identities(p, n)?);
            r.extend(quotient_iso_b_star(p, n)?);
            r.extend(verify_set_level_operations(p, n)?);
        }
        Suite::Membership => r.extend(verify_membership_extension(p, n)?),
        Suite::All => {
            for s in Suite::EACH {
                r.extend(table_suite(p, s, args)?.scoped(s.name()));
            }
        }
    }
    Ok(r)
}

/// Runs one suite against an algebra given by tables.
pub fn algebra_suite(a: &FiniteAlgebra, suite: Suite, args: &VerifyArgs) -> Result<Report, Error> {
    let mut r = Report::new();
    match suite {
        Suite::Lukasiewicz => {
            r.extend(check_axioms(a));
            r.extend(derived_operator_checks(a));
        }
        Suite::Determination => {
            r.push(check_determination(a));
            r.push(check_kleene(a));
            r.push(check_residuation(a));
            if let Some(c) = find_center(a) {
                r.push(check_center_law(a, &c));
            }
        }
        Suite::Representation => r.extend(representation_checks(a, args)?),
        Suite::All => {
            for s in Suite::EACH.into_iter().filter(|s| !s.needs_table()) {
                r.extend(algebra_suite(a, s, args)?.scoped(s.name()));
            }
        }
        Suite::Monadic | Suite::Quotient | Suite::Membership => {}
    }
    Ok(r)
}

/// Identities of the prime-filter representation. An input that is not a
/// three-valued algebra yields its failed axioms instead.
fn representation_checks(a: &FiniteAlgebra, args: &VerifyArgs) -> Result<Report, Error> {
    let rep = match represent(a) {
        Ok(rep) => rep,
        Err(Error::AxiomsFailed(_)) => return Ok(check_axioms(a).scoped("axioms")),
        Err(e) => return Err(e),
    };
    let mut r = verify_representation_identities(a, &rep);
    r.extend(rep.verify_embedding(a, args.max_universe)?);
    if a.len() <= args.max_elements {
        r.push(filters_match_exhaustive(a, &rep.filters, args.max_elements)?);
    }
    Ok(r)
}

fn filters_match_exhaustive(a: &FiniteAlgebra, filters: &[PrimeFilter], max: usize) -> Result<Check, Error> {
    let brute = prime_filters_exhaustive(a, max)?;
    let mut check = Check::new("prime_filters_match_exhaustive");
    let witness = |f: &PrimeFilter| {
        let names = f.members().iter().map(|x| a.name(x).to_owned()).collect();
        Counterexample::default().with("filter", Witness::Set(names))
    };
    for (this, other) in [(filters, &brute[..]), (&brute[..], filters)] {
        for f in this {
            check.record(other.contains(f), || witness(f));
        }
    }
    Ok(check)
}

fn cmd_represent(path: &Path, max_universe: usize, max_elements: usize) -> anyhow::Result<Output> {
    let a = load_algebra(path)?.value;
    let args = VerifyArgs {
        table: None,
        algebra: Some(path.to_owned()),
        suite: Suite::Representation,
        max_universe,
        max_elements,
        timing: false,
    };
    let report = representation_checks(&a, &args)?;
    let json = match represent(&a) {
        Ok(rep) => {
            let names = filter_names(&rep.filters);
            let s = &rep.space;
            RepresentationJson {
                filters: rep
                    .filters
                    .iter()
                    .zip(&names)
                    .map(|(f, name)| FilterJson {
                        name: name.clone(),
                        members: f.members().iter().map(|x| a.name(x).to_owned()).collect(),
                    })
                    .collect(),
                chains: s
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|&i| names[i].clone()).collect())
                    .collect(),
                h: rep
                    .embedding
                    .iter()
                    .enumerate()
                    .map(|(x, r)| EmbeddingJson {
                        element: a.name(x).to_owned(),
                        lower: s.names(r.lower()),
                        upper: s.names(r.upper()),
                    })
                    .collect(),
                passed: report.passed(),
                checks: CheckJson::all(&report),
            }
        }
        Err(_) => RepresentationJson {
            filters: Vec::new(),
            chains: Vec::new(),
            h: Vec::new(),
            passed: false,
            checks: CheckJson::all(&report),
        },
    };
    let mut stderr = vec![format!(
        "{} prime filters in {} chains",
        json.filters.len(),
        json.chains.len()
    )];
    stderr.extend(summarize("represent", &report));
    Ok(Output {
        stdout: vec![to_line(&json)],
        stderr,
        code: exit_code(&report),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn set_spec_parsing() {
        let p = Partition::discrete(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(parse_set(&p, "").unwrap().is_empty());
        assert_eq!(p.names(&parse_set(&p, " c , a,").unwrap()), ["a", "c"]);
        assert_eq!(parse_set(&p, "a,z"), Err(Error::UnknownObject("z".into())));
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        let e = Cli::try_parse_from(["rough3", "verify", "--table", "t.csv", "--suite", "nope"]).unwrap_err();
        assert_eq!(e.exit_code(), i32::from(EXIT_INPUT));
    }

    #[test]
    fn verify_needs_exactly_one_input() {
        assert!(Cli::try_parse_from(["rough3", "verify", "--suite", "all"]).is_err());
        assert!(Cli::try_parse_from(["rough3", "verify", "--suite", "all", "--table", "a", "--algebra", "b"]).is_err());
    }

    #[test]
    fn table_only_suites_reject_algebras() {
        let args = VerifyArgs {
            table: None,
            algebra: None,
            suite: Suite::Monadic,
            max_universe: DEFAULT_MAX_UNIVERSE,
            max_elements: DEFAULT_MAX_ELEMENTS,
            timing: false,
        };
        let two = FiniteAlgebra::two_chain();
        let r = algebra_suite(&two, Suite::All, &args).unwrap();
        assert!(r.passed());
        assert!(r.checks.iter().all(|c| !c.name.starts_with("monadic.")));
        assert!(r.get("representation.prime_filters_match_exhaustive").is_some());
    }

    #[test]
    fn non_algebra_representation_reports_axioms() {
        let bad = FiniteAlgebra::three_chain().with_nabla(vec![0, 1, 2]).unwrap();
        let args = VerifyArgs {
            table: None,
            algebra: None,
            suite: Suite::Representation,
            max_universe: DEFAULT_MAX_UNIVERSE,
            max_elements: DEFAULT_MAX_ELEMENTS,
            timing: false,
        };
        let r = representation_checks(&bad, &args).unwrap();
        assert_eq!(r.first_failure().unwrap().name, "axioms.nabla_excluded_middle");
    }
}
