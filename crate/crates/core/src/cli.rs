//! Command-line front end.
//!
//! Exit codes: 0 success, 1 law or fixture failure, 2 usage, lexing or
//! parsing error, 3 data error (unreadable or malformed workspace, invalid
//! context, enumeration cap exceeded). Reports go to standard output and
//! diagnostics to standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::expr::{eval_str, ExprError};
use crate::fixtures;
use crate::io::{load_workspace, render_soft_set, render_workspace, Workspace};
use crate::laws::{
    check_exhaustive_with_cap, check_random, exhaustive_case_count, law_catalog, lookup, CheckMode,
    CheckReport, Law, LawError, Outcome, DEFAULT_CAP,
};
use crate::model::{Context, ContextRef};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "softset", version, about = "Soft-set algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression over the soft sets of a workspace file
    Eval {
        workspace: PathBuf,
        expression: String,
    },
    /// Check the algebraic law catalog
    CheckLaws(CheckLawsArgs),
    /// Print a workspace file in canonical form
    Show { workspace: PathBuf },
    /// Recompute the bundled houses example and compare against fixtures
    PaperExample,
}

#[derive(Debug, Args)]
struct CheckLawsArgs {
    /// Try every argument tuple over the generated context
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    /// Try seeded random argument tuples (default)
    #[arg(long)]
    random: bool,
    /// Number of objects in the generated universe
    #[arg(long, default_value_t = 4)]
    universe: usize,
    /// Number of parameters in the generated parameter space
    #[arg(long, default_value_t = 3)]
    params: usize,
    /// Random tuples per law
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of tuples an exhaustive check may visit
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Only check the named law (repeatable)
    #[arg(long = "law")]
    laws: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Eval,
    CheckLaws,
    Show,
    PaperExample,
}

/// A fully parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub workspace: Option<PathBuf>,
    pub expression: Option<String>,
    pub mode: CheckMode,
    pub universe: usize,
    pub params: usize,
    pub trials: u64,
    pub seed: u64,
    pub cap: u64,
    pub laws: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: CommandKind::CheckLaws,
            workspace: None,
            expression: None,
            mode: CheckMode::Random,
            universe: 4,
            params: 3,
            trials: 1000,
            seed: 0,
            cap: DEFAULT_CAP,
            laws: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn from_args<I, T>(args: I) -> Result<RunConfig, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let base = RunConfig::default();
        Ok(match cli.command {
            Command::Eval {
                workspace,
                expression,
            } => RunConfig {
                command: CommandKind::Eval,
                workspace: Some(workspace),
                expression: Some(expression),
                ..base
            },
            Command::Show { workspace } => RunConfig {
                command: CommandKind::Show,
                workspace: Some(workspace),
                ..base
            },
            Command::PaperExample => RunConfig {
                command: CommandKind::PaperExample,
                ..base
            },
            Command::CheckLaws(a) => RunConfig {
                command: CommandKind::CheckLaws,
                mode: if a.exhaustive {
                    CheckMode::Exhaustive
                } else {
                    CheckMode::Random
                },
                universe: a.universe,
                params: a.params,
                trials: a.trials,
                seed: a.seed,
                cap: a.cap,
                laws: a.laws,
                ..base
            },
        })
    }

    /// Checks the per-command field requirements.
    pub fn validate(&self) -> Result<(), String> {
        match self.command {
            CommandKind::Eval if self.workspace.is_none() || self.expression.is_none() => {
                Err("eval needs a workspace and an expression".into())
            }
            CommandKind::Show if self.workspace.is_none() => Err("show needs a workspace".into()),
            CommandKind::CheckLaws => {
                if self.mode == CheckMode::Random && self.trials == 0 {
                    return Err("--trials must be at least 1".into());
                }
                if let Some(unknown) = self.laws.iter().find(|id| lookup(id).is_none()) {
                    return Err(format!("unknown law `{unknown}`"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::from_args(args) {
        Ok(config) => config,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_SUCCESS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    execute(&config, out, err)
}

pub fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Err(message) = config.validate() {
        let _ = writeln!(err, "error: {message}");
        return EXIT_USAGE;
    }
    let result = match config.command {
        CommandKind::Eval => cmd_eval(
            config.workspace.as_deref().expect("validated"),
            config.expression.as_deref().expect("validated"),
            out,
            err,
        ),
        CommandKind::Show => cmd_show(config.workspace.as_deref().expect("validated"), out, err),
        CommandKind::CheckLaws => cmd_check_laws(config, out),
        CommandKind::PaperExample => cmd_paper_example(out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn data_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_DATA,
        message: message.into(),
    }
}

fn io_error(e: std::io::Error) -> Failure {
    data_error(format!("writing output: {e}"))
}

fn read_workspace(path: &Path, err: &mut dyn Write) -> Result<Workspace, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| data_error(format!("{}: {e}", path.display())))?;
    let (ws, warnings) =
        load_workspace(&text).map_err(|e| data_error(format!("{}: {e}", path.display())))?;
    for w in warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(ws)
}

fn cmd_eval(
    path: &Path,
    expression: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let ws = read_workspace(path, err)?;
    let result = eval_str(expression, ws.bindings(), ws.context()).map_err(|e| {
        let code = match e {
            ExprError::Model(_) => EXIT_DATA,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: format!("expression: {e}"),
        }
    })?;
    out.write_all(render_soft_set("result", &result).as_bytes())
        .map_err(io_error)?;
    Ok(EXIT_SUCCESS)
}

fn cmd_show(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let ws = read_workspace(path, err)?;
    out.write_all(render_workspace(&ws).as_bytes())
        .map_err(io_error)?;
    Ok(EXIT_SUCCESS)
}

fn cmd_paper_example(out: &mut dyn Write) -> Result<i32, Failure> {
    let ok = fixtures::write_report(out).map_err(io_error)?;
    Ok(if ok { EXIT_SUCCESS } else { EXIT_FAILURE })
}

fn generated_context(objects: usize, params: usize) -> Result<ContextRef, Failure> {
    Context::new(
        (1..=objects).map(|i| format!("h{i}")),
        (1..=params).map(|i| format!("e{i}")),
    )
    .map(Context::into_ref)
    .map_err(|e| data_error(e.to_string()))
}

fn law_error(e: LawError) -> Failure {
    data_error(e.to_string())
}

fn cmd_check_laws(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let ctx = generated_context(config.universe, config.params)?;
    let laws: Vec<&Law> = if config.laws.is_empty() {
        law_catalog().iter().collect()
    } else {
        config.laws.iter().filter_map(|id| lookup(id)).collect()
    };

    if config.mode == CheckMode::Exhaustive {
        for law in &laws {
            exhaustive_case_count(law, &ctx, config.cap)
                .map_err(|e| data_error(format!("law `{}`: {e}", law.id)))?;
        }
    }

    let mut text = String::new();
    text.push_str(&format!(
        "context: universe={} parameters={} mode={}",
        config.universe, config.params, config.mode
    ));
    if config.mode == CheckMode::Random {
        text.push_str(&format!(" trials={} seed={}", config.trials, config.seed));
    }
    text.push('\n');

    // laws are independent; collect keeps catalog order
    let reports: Vec<CheckReport> = laws
        .par_iter()
        .map(|law| match config.mode {
            CheckMode::Exhaustive => check_exhaustive_with_cap(law, &ctx, config.cap),
            CheckMode::Random => check_random(law, &ctx, config.trials, config.seed),
        })
        .collect::<Result<_, _>>()
        .map_err(law_error)?;

    let mut failed = 0;
    for (law, report) in laws.iter().zip(&reports) {
        if !report.passed() {
            failed += 1;
        }
        text.push_str(&report_lines(law, report));
    }
    text.push_str(&format!(
        "{} laws: {} passed, {} failed\n",
        laws.len(),
        laws.len() - failed,
        failed
    ));
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(if failed == 0 {
        EXIT_SUCCESS
    } else {
        EXIT_FAILURE
    })
}

/// One status line, followed by the counterexample when the law failed.
pub fn report_lines(law: &Law, report: &CheckReport) -> String {
    let mut cases = format!("cases={}", report.cases);
    if report.vacuous > 0 {
        cases.push_str(&format!(" vacuous={}", report.vacuous));
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let mut text = format!(
        "{:<32} {:<10} {:<28} {status}\n",
        law.id, report.mode, cases
    );
    if let Outcome::Counterexample(cx) = &report.outcome {
        text.push_str(&format!("  statement: {}\n", law.statement));
        text.push_str(&format!("  violation: {}\n", cx.detail));
        text.push_str("  counterexample (locally minimal):\n");
        for line in cx.render(law).lines() {
            text.push_str("    ");
            text.push_str(line);
            text.push('\n');
        }
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("softset").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn defaults_follow_the_documented_configuration() {
        let c = RunConfig::from_args(["softset", "check-laws"]).unwrap();
        assert_eq!(c.mode, CheckMode::Random);
        assert_eq!((c.universe, c.params, c.trials, c.seed), (4, 3, 1000, 0));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["check-laws", "--exhaustive", "--random"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["check-laws", "--trials", "0"]).0, EXIT_USAGE);
        let (code, _, err) = run_args(&["check-laws", "--law", "nope"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unknown law `nope`"));
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_SUCCESS);
        assert!(out.contains("check-laws"));
    }

    #[test]
    fn empty_universe_with_parameters_is_a_data_error() {
        let (code, _, err) = run_args(&["check-laws", "--universe", "0", "--params", "1"]);
        assert_eq!(code, EXIT_DATA);
        assert!(err.contains("empty universe"));
    }

    #[test]
    fn single_law_selection() {
        let (code, out, _) = run_args(&[
            "check-laws",
            "--exhaustive",
            "--universe",
            "1",
            "--params",
            "1",
            "--law",
            "involution",
        ]);
        assert_eq!(code, EXIT_SUCCESS);
        assert_eq!(out.lines().filter(|l| l.ends_with("PASS")).count(), 1);
    }
}
