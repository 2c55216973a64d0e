//! Document-in, document-out frontend for `rankin-core`.

pub mod document;
pub mod error;
pub mod output;

use clap::{Parser, Subcommand};
use rankin_core::factors::{check_compat1, gamma_generic, gcd_over_lifts, l_generic, lift_tuples};
use rankin_core::suites::{compare_gl1, run_suite, ORACLE_WINDOW, SUITES};
use rankin_core::tate::Gl1Datum;
use rankin_core::{Error, GenericRep, PrimeContext};
use toml::{Table, Value};

pub use document::{parse_input, render, InputDocument, Model};
pub use error::CliError;
pub use output::{root_strings, Format, Report};

#[derive(Debug, Parser)]
#[command(name = "rankin", version, about = "Exact mod-l and l-adic Rankin-Selberg local factors")]
pub struct Cli {
    /// Input document (TOML).
    #[arg(long, global = true)]
    pub doc: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for the `verify` instance generators.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Shell window M for the Tate oracle.
    #[arg(long, global = true)]
    pub window: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// L(X, π1 × π2).
    Lfactor { rep1: String, rep2: String },
    /// γ(X, π1 × π2) up to units.
    Gamma { rep1: String, rep2: String },
    /// Banal and non-banal parts of a mod-l representation.
    SplitBanal { rep: String },
    /// Standard lift and the lift family of a mod-l representation.
    Lift { rep: String },
    /// GCD of reduced factors over integral lifts.
    GcdLifts { rep1: String, rep2: String },
    /// Compare L and γ mod l with reductions of the standard lifts.
    Reduce { rep1: String, rep2: String },
    /// Independent integral oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run a verification suite, or `all`.
    Verify { suite: String },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Tate integrals for χ1 × χ2 on GL(1), compared with the engine.
    Tate {
        /// `e,s,j`: χ(x) = (q^e ζ^s)^v(x) η_j(ac x).
        #[arg(long)]
        chi1: String,
        #[arg(long, default_value = "0,0,0")]
        chi2: String,
        /// Context, when no document is given.
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Outcome {
            stdout: r.render(cli.format),
            stderr: String::new(),
            code: if r.ok { 0 } else { 1 },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}

fn load(cli: &Cli) -> Result<Model, CliError> {
    let path = cli
        .doc
        .as_deref()
        .ok_or_else(|| CliError::Input("this command needs --doc FILE".into()))?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse_input(&text)
}

fn pair<'m>(m: &'m Model, a: &str, b: &str) -> Result<(&'m GenericRep, &'m GenericRep), CliError> {
    Ok((m.rep(a)?, m.rep(b)?))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let mut r = Report::new();
    match &cli.command {
        Command::Lfactor { rep1, rep2 } => {
            let m = load(cli)?;
            let (p1, p2) = pair(&m, rep1, rep2)?;
            let l = l_generic(&m.catalog, p1, p2)?;
            r.set("world", p1.world().name())
                .set("rep1", p1.describe())
                .set("rep2", p2.describe())
                .set("L", l.render());
            r.strings("roots", root_strings(&l));
        }
        Command::Gamma { rep1, rep2 } => {
            let m = load(cli)?;
            let (p1, p2) = pair(&m, rep1, rep2)?;
            let g = gamma_generic(&m.catalog, p1, p2)?;
            r.set("world", p1.world().name())
                .set("rep1", p1.describe())
                .set("rep2", p2.describe())
                .set("gamma", g.render());
            r.strings("numerator_roots", g.num_list().into_iter().map(|(s, k)| multiplicity(s, k)));
            r.strings("denominator_roots", g.den_list().into_iter().map(|(s, k)| multiplicity(s, k)));
        }
        Command::SplitBanal { rep } => {
            let m = load(cli)?;
            let p = m.rep(rep)?;
            let (b, n) = p.banal_split()?;
            r.set("rep", p.describe()).set("banal", b.describe()).set("non_banal", n.describe());
        }
        Command::Lift { rep } => {
            let m = load(cli)?;
            let p = m.rep(rep)?;
            let mut family: Vec<String> = lift_tuples(p)?.iter().map(GenericRep::describe).collect();
            family.sort();
            r.set("rep", p.describe()).set("standard_lift", p.standard_lift()?.describe());
            r.strings("lift_family", family);
        }
        Command::GcdLifts { rep1, rep2 } => {
            let m = load(cli)?;
            let (p1, p2) = pair(&m, rep1, rep2)?;
            let l = l_generic(&m.catalog, p1, p2)?;
            r.set("rep1", p1.describe()).set("rep2", p2.describe()).set("L", l.render());
            match gcd_over_lifts(&m.catalog, p1, p2) {
                Ok((g, cert)) => {
                    r.set("gcd", g.render()).set("agrees", true);
                    r.set("lifts_left", cert.lifts_left.len() as i64)
                        .set("lifts_right", cert.lifts_right.len() as i64);
                    if let Some((i, j)) = cert.achieving {
                        let mut t = Table::new();
                        t.insert("left".into(), Value::String(cert.lifts_left[i].describe()));
                        t.insert("right".into(), Value::String(cert.lifts_right[j].describe()));
                        r.set("certificate", t);
                    }
                    r.strings(
                        "reduced",
                        cert.reduced
                            .iter()
                            .map(|(i, j, f)| format!("{} ⊗ {}: {}", cert.lifts_left[*i].describe(), cert.lifts_right[*j].describe(), f.render())),
                    );
                }
                Err(Error::Certification(msg)) => {
                    r.ok = false;
                    r.set("agrees", false).set("failure", msg);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Reduce { rep1, rep2 } => {
            let m = load(cli)?;
            let (p1, p2) = pair(&m, rep1, rep2)?;
            let c = check_compat1(&m.catalog, p1, p2)?;
            r.ok = c.holds();
            r.set("rep1", p1.describe()).set("rep2", p2.describe());
            r.set("L_mod_l", c.l_modl.render()).set("L_lift_reduced", c.l_lift_reduced.render());
            r.set("gamma_mod_l", c.gamma_modl.render())
                .set("gamma_lift_reduced", c.gamma_lift_reduced.render());
            r.set("divides", c.divides)
                .set("gamma_equal_up_to_unit", c.gamma_equal_up_to_unit)
                .set("strict", c.strict());
        }
        Command::Oracle(OracleCommand::Tate { chi1, chi2, ell, q }) => {
            let ctx = match (ell, q) {
                (Some(ell), Some(q)) => PrimeContext::new(*ell, *q)?,
                (None, None) => *load(cli)?.ctx(),
                _ => return Err(CliError::Input("give both --ell and --q, or a document".into())),
            };
            let (d1, d2) = (datum(&ctx, chi1)?, datum(&ctx, chi2)?);
            let c = compare_gl1(ctx, &d1, &d2, cli.window.unwrap_or(ORACLE_WINDOW))?;
            let fails = c.failures();
            r.ok = fails.is_empty();
            r.set("ell", ctx.ell() as i64).set("q", ctx.q() as i64);
            r.set("chi1", format!("{},{},{}", d1.e, d1.s, d1.j))
                .set("chi2", format!("{},{},{}", d2.e, d2.s, d2.j));
            for (world, engine, oracle, eps, gamma) in [
                ("l_adic", &c.engine_adic, &c.oracle_adic, &c.epsilon_adic, &c.gamma_adic),
                ("mod_l", &c.engine_mod, &c.oracle_mod, &c.epsilon_mod, &c.gamma_mod),
            ] {
                let mut t = Table::new();
                t.insert("L_engine".into(), Value::String(engine.render()));
                t.insert("L_oracle".into(), Value::String(oracle.render()));
                t.insert("epsilon".into(), Value::String(format!("({}) * X^{}", eps.0, eps.1)));
                t.insert("gamma".into(), Value::String(gamma.clone()));
                r.set(world, t);
            }
            r.set("epsilon_consistent", c.consistent).set("gamma_reduces", c.gamma_reduces);
            if let Some(b) = c.epsilon_reduces {
                r.set("epsilon_reduces", b);
            }
            r.strings("failures", fails);
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            for name in names {
                let s = run_suite(name, cli.seed, cli.window)?;
                r.ok &= s.passed();
                let mut t = Table::new();
                t.insert("passed".into(), Value::Boolean(s.passed()));
                t.insert("cases".into(), Value::Integer(s.cases as i64));
                t.insert("failures".into(), Value::Array(s.failures.into_iter().map(Value::String).collect()));
                t.insert("notes".into(), Value::Array(s.notes.into_iter().map(Value::String).collect()));
                r.set(name, t);
            }
            r.set("seed", cli.seed as i64);
        }
    }
    Ok(r)
}

fn multiplicity(s: String, k: u64) -> String {
    if k == 1 {
        s
    } else {
        format!("{s} ^{k}")
    }
}

fn datum(ctx: &PrimeContext, text: &str) -> Result<Gl1Datum, CliError> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Input(format!("character {text:?}: expected e,s,j")))?;
    match parts[..] {
        [e, s, j] => Ok(Gl1Datum::new(ctx, e, s, j)),
        _ => Err(CliError::Input(format!("character {text:?}: expected e,s,j"))),
    }
}
