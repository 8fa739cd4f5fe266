use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use vincyc::cache::{export, load_cache, save_cache, write_atomic, ExportFormat, TableSet};
use vincyc::characterize::{
    explain, is_member_arrow, is_member_depth, is_member_direct, is_member_eq1, is_member_theorem,
};
use vincyc::enumerate::sequence::{table1, Provenance, SeqName, SequenceTable};
use vincyc::enumerate::{
    count_a, count_c, count_simples_in_a, enumerate_a, enumerate_c321, enumerated_tables,
};
use vincyc::growth::{
    conditional_upper_identity, ratio_and_root_report, table1_lower_bound, DEFAULT_TOL,
};
use vincyc::verify::Suite;
use vincyc::{PatternTerm, Permutation};

#[derive(Parser)]
#[command(
    name = "vincyc",
    version,
    about = "Vincular patterns and 321-avoiding cyclic permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print theta(p): the standard cycle form with parentheses erased.
    Theta { perm: String },
    /// Print theta_inv(p).
    ThetaInv { perm: String },
    /// Decide membership in C_n(321).
    Check {
        perm: String,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Print the full JSON report with witnesses.
        #[arg(long)]
        explain: bool,
    },
    /// Find a vincular or arrow pattern in a permutation.
    Match {
        pattern: String,
        perm: String,
        /// Print the number of occurrences instead of the first one.
        #[arg(long)]
        count: bool,
    },
    /// List the members of a class of size n.
    Enumerate {
        #[arg(value_enum)]
        class: Class,
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::OneLine)]
        emit: Emit,
    },
    /// Count a class for every size up to --max-n.
    Count {
        #[arg(value_enum)]
        class: CountClass,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Merge the counts into this cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Growth-rate analytics.
    Growth {
        #[arg(value_enum)]
        what: GrowthKind,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Read sequence values from this cache instead of enumerating.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Enumeration range when no cache is given.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write one sequence as a b-file, CSV or JSON.
    Export {
        #[arg(long, value_enum)]
        seq: SeqArg,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
        /// Export from this cache instead of enumerating.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Enumeration range when no cache is given.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Theorem,
    Depth,
    Eq1,
    Arrow,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    C321,
    #[value(name = "A")]
    A,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountClass {
    C321,
    #[value(name = "A")]
    A,
    Simples,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    OneLine,
    Theta,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GrowthKind {
    LowerBound,
    Report,
    UpperIdentity,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    C,
    A,
    S,
}

impl From<SeqArg> for SeqName {
    fn from(s: SeqArg) -> Self {
        match s {
            SeqArg::C => SeqName::C,
            SeqArg::A => SeqName::A,
            SeqArg::S => SeqName::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Bfile,
    Csv,
    Json,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Bfile => ExportFormat::Bfile,
            FormatArg::Csv => ExportFormat::Csv,
            FormatArg::Json => ExportFormat::Json,
        }
    }
}

/// Malformed user input; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn perm(text: &str) -> anyhow::Result<Permutation> {
    text.parse()
        .map_err(|e| Usage(format!("bad permutation {text:?}: {e}")).into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Theta { perm: p } => println!("{}", perm(&p)?.theta()),
        Command::ThetaInv { perm: p } => println!("{}", perm(&p)?.theta_inv()),
        Command::Check {
            perm: p,
            method,
            explain: full,
        } => return check(&perm(&p)?, method, full),
        Command::Match {
            pattern,
            perm: p,
            count,
        } => {
            let pat = PatternTerm::parse(&pattern)
                .map_err(|e| Usage(format!("bad pattern {pattern:?}: {e}")))?;
            let p = perm(&p)?;
            if count {
                println!("{}", pat.count(&p));
            } else {
                match pat.first_occurrence(&p) {
                    Some(pos) => {
                        let values: Vec<String> =
                            pos.iter().map(|&i| p.at(i).to_string()).collect();
                        let pos: Vec<String> = pos.iter().map(usize::to_string).collect();
                        println!("positions {} values {}", pos.join(","), values.join(","));
                    }
                    None => println!("no occurrence"),
                }
            }
        }
        Command::Enumerate { class, n, emit } => {
            let members = match class {
                Class::C321 => enumerate_c321(n)?,
                Class::A => enumerate_a(n)?,
            };
            for p in members {
                match emit {
                    Emit::OneLine => println!("{p}"),
                    Emit::Theta => println!("{}", p.theta()),
                    Emit::Both => println!("{p} {}", p.theta()),
                }
            }
        }
        Command::Count {
            class,
            max_n,
            threads,
            cache,
        } => count(class, max_n, threads, cache.as_deref())?,
        Command::Verify { suite, max_n, json } => return verify(&suite, max_n, json),
        Command::Growth {
            what,
            tol,
            cache,
            max_n,
            json,
        } => return growth(what, tol, cache.as_deref(), max_n, json),
        Command::Export {
            seq,
            format,
            out,
            cache,
            max_n,
        } => {
            let name = SeqName::from(seq);
            let table = match cache {
                Some(path) => existing_cache(&path)?.get(name).clone(),
                None => {
                    let [c, a, s] = enumerated_tables(max_n, 1)?;
                    match name {
                        SeqName::C => c,
                        SeqName::A => a,
                        SeqName::S => {
                            let mut t = table1();
                            t.merge(&s)?;
                            t
                        }
                    }
                }
            };
            write_atomic(&out, export(&table, format.into())?.as_bytes())
                .with_context(|| format!("writing {}", out.display()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(p: &Permutation, method: Method, full: bool) -> anyhow::Result<ExitCode> {
    if full {
        let report = explain(p);
        println!("{}", report.to_json());
        return Ok(if report.agree() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    let single = |f: fn(&Permutation) -> bool| {
        println!("{}", if f(p) { "member" } else { "not a member" });
        Ok(ExitCode::SUCCESS)
    };
    match method {
        Method::Direct => single(is_member_direct),
        Method::Theorem => single(is_member_theorem),
        Method::Depth => single(is_member_depth),
        Method::Eq1 => single(is_member_eq1),
        Method::Arrow => single(is_member_arrow),
        Method::All => {
            let report = explain(p);
            for (name, v) in [
                ("direct", report.direct),
                ("theorem", report.theorem),
                ("depth", report.depth),
                ("eq1", report.eq1),
                ("arrow", report.arrow),
            ] {
                println!("{name}: {v}");
            }
            if report.agree() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("predicates disagree on {p}");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn count(
    class: CountClass,
    max_n: usize,
    threads: usize,
    cache: Option<&Path>,
) -> anyhow::Result<()> {
    let (name, start) = match class {
        CountClass::C321 => (SeqName::C, 1),
        CountClass::A => (SeqName::A, 1),
        CountClass::Simples => (SeqName::S, 2),
    };
    let mut fresh = SequenceTable::new(name);
    for n in start..=max_n {
        let v = match class {
            CountClass::C321 => count_c(n, threads)?,
            CountClass::A => count_a(n, threads)?,
            CountClass::Simples => count_simples_in_a(n, threads)?,
        };
        println!("{n} {v}");
        fresh.insert(n, v, Provenance::Enumerated)?;
    }
    if let Some(path) = cache {
        let mut tables = load_cache(path)?;
        tables
            .get_mut(name)
            .merge(&fresh)
            .with_context(|| format!("merging into {}", path.display()))?;
        save_cache(path, &tables)?;
    }
    Ok(())
}

fn verify(suite: &str, max_n: usize, json: bool) -> anyhow::Result<ExitCode> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite
            .parse()
            .map_err(|e: vincyc::Error| Usage(e.to_string()))?]
    };
    let mut ok = true;
    for s in suites {
        let report = s.run(max_n)?;
        ok &= report.passed;
        if json {
            println!("{}", serde_json::to_string(&report)?);
        } else {
            print!("{report}");
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn existing_cache(path: &Path) -> anyhow::Result<TableSet> {
    if !path.exists() {
        bail!("cache file {} does not exist", path.display());
    }
    Ok(load_cache(path)?)
}

fn growth(
    what: GrowthKind,
    tol: f64,
    cache: Option<&Path>,
    max_n: usize,
    json: bool,
) -> anyhow::Result<ExitCode> {
    let mut s_all = table1();
    let (c, s) = match cache {
        Some(path) => {
            let t = existing_cache(path)?;
            (t.c, t.s)
        }
        None if what == GrowthKind::LowerBound => (
            SequenceTable::new(SeqName::C),
            SequenceTable::new(SeqName::S),
        ),
        None => {
            let [c, _, s] = enumerated_tables(max_n, 1)?;
            (c, s)
        }
    };
    s_all.merge(&s)?;
    match what {
        GrowthKind::LowerBound => {
            let bracket = table1_lower_bound(&s_all, tol)?;
            if json {
                let v = serde_json::json!({"lower": bracket.value(), "upper": bracket.upper_value(), "tol": tol});
                println!("{v}");
            } else {
                println!("{:.9}", bracket.value());
                println!("bracket [{}, {}]", bracket.value(), bracket.upper_value());
            }
        }
        GrowthKind::Report => {
            let mut report = ratio_and_root_report(&c);
            report.lower_bound = Some(table1_lower_bound(&s_all, tol)?.value());
            if let Some(top) = c.max_index() {
                for n in 4..=top {
                    if let Ok(id) = conditional_upper_identity(&c, &s, n) {
                        report.identity_checks.push((n, id.equal));
                    }
                }
            }
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
        }
        GrowthKind::UpperIdentity => {
            let Some(top) = c.max_index() else {
                bail!("no c values available");
            };
            let mut ok = true;
            for n in 3..=top {
                let Ok(id) = conditional_upper_identity(&c, &s, n) else {
                    continue;
                };
                let asserted = n >= 4;
                ok &= id.equal || !asserted;
                let tag = if asserted {
                    ""
                } else {
                    " (boundary, not asserted)"
                };
                if json {
                    println!("{}", serde_json::to_string(&id)?);
                } else {
                    println!(
                        "n={n} lhs={} rhs={} equal={}{tag}",
                        id.lhs, id.rhs, id.equal
                    );
                }
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
