use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superop::graded::{is_epsilon_positive, is_superpositive, is_superunitary};
use superop::norms::{derived_matrix_norm, sigma_strong_norm, strong_norm};
use superop::tensor::{
    dual_symmetrized_haagerup, haagerup_norm, projective_norm, symmetrized_haagerup, TensorConfig,
};
use superop::verify::{self, Suite, SuiteConfig};
use superop::{json as sj, Error};

/// Inner tolerance of the numerical-radius solver.
const RADIUS_TOL: f64 = 1e-10;

#[derive(Parser)]
#[command(name = "superop", version, about = "Super operator systems on Z2-graded Hilbert spaces")]
struct Cli {
    /// Print the JSON input and output formats and exit.
    #[arg(long)]
    schema: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Test a property of a graded operator. Exit 0 if it holds, 1 if not.
    Check {
        kind: CheckKind,
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Amplification level of the input, overriding its "level" field.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Compute a norm of a graded operator or a tensor element.
    Norm {
        kind: NormKind,
        file: PathBuf,
        #[arg(long)]
        level: Option<usize>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Tolerance of the boolean predicates.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 500)]
    iters: usize,
}

impl BudgetArgs {
    fn config(&self) -> TensorConfig {
        TensorConfig { restarts: self.restarts, iterations: self.iters, seed: self.seed, ..TensorConfig::default() }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Hermitian,
    OmegaHermitian,
    EpsPositive,
    Superpositive,
    Superunitary,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormKind {
    Operator,
    Strong,
    Sigma,
    Derived,
    Haagerup,
    SymmetrizedHaagerup,
    DualSymmetrized,
    Projective,
    Injective,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Core,
    Norms,
    Tensor,
    Group,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Core => Suite::Core,
            SuiteArg::Norms => Suite::Norms,
            SuiteArg::Tensor => Suite::Tensor,
            SuiteArg::Group => Suite::Group,
            SuiteArg::All => Suite::All,
        }
    }
}

fn kind_name<K: ValueEnum>(k: K) -> String {
    k.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn load(path: &Path, level: Option<usize>) -> superop::Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut v = sj::parse(&text)?;
    if let Some(l) = level {
        match v.as_object_mut() {
            Some(obj) => {
                obj.insert("level".into(), json!(l));
            }
            None => return Err(Error::Parse("top level must be an object".into())),
        }
    }
    Ok(v)
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values are finite"));
}

fn check(kind: CheckKind, file: &Path, tol: f64, level: Option<usize>) -> superop::Result<bool> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidConfig(format!("tol must be positive, got {tol}")));
    }
    let v = load(file, level)?;
    let x = sj::operator_from_json(&v)?;
    let verdict = match kind {
        CheckKind::Hermitian => x.is_hermitian(tol),
        CheckKind::OmegaHermitian => {
            let w = sj::omega_from_json(&v, x.space())?
                .ok_or_else(|| Error::Parse("omega-hermitian needs an \"omega\" field".into()))?;
            x.is_omega_hermitian(&w, tol)?
        }
        CheckKind::EpsPositive => is_epsilon_positive(&x, tol),
        CheckKind::Superpositive => is_superpositive(&x, tol),
        CheckKind::Superunitary => is_superunitary(&x, tol),
    };
    print(&json!({ "check": kind_name(kind), "result": verdict, "tol": tol }));
    Ok(verdict)
}

fn norm(kind: NormKind, file: &Path, level: Option<usize>, cfg: &TensorConfig) -> superop::Result<()> {
    cfg.validate()?;
    let v = load(file, level)?;
    let name = kind_name(kind);
    let out = match kind {
        NormKind::Operator | NormKind::Strong | NormKind::Sigma | NormKind::Derived => {
            let x = sj::operator_from_json(&v)?;
            match kind {
                NormKind::Operator => json!({ "norm": name, "value": x.op_norm() }),
                NormKind::Derived => json!({ "norm": name, "value": derived_matrix_norm(&x, RADIUS_TOL)? }),
                _ => {
                    let r = if matches!(kind, NormKind::Strong) {
                        strong_norm(&x, RADIUS_TOL)?
                    } else {
                        sigma_strong_norm(&x, RADIUS_TOL)?
                    };
                    json!({ "norm": name, "value": r.value, "certified_error": r.certified_error })
                }
            }
        }
        _ => {
            let t = sj::tensor_from_json(&v)?;
            let bracket = match kind {
                NormKind::Injective => None,
                NormKind::Haagerup => Some(haagerup_norm(&t, cfg)?),
                NormKind::SymmetrizedHaagerup => Some(symmetrized_haagerup(&t, cfg)?),
                NormKind::DualSymmetrized => Some(dual_symmetrized_haagerup(&t, cfg)?),
                _ => Some(projective_norm(&t, cfg)?),
            };
            match bracket {
                None => json!({ "norm": name, "value": t.injective_norm() }),
                Some(b) => {
                    let mut out = sj::bracket_to_json(&b);
                    out["norm"] = json!(name);
                    out
                }
            }
        }
    };
    print(&out);
    Ok(())
}

fn verify_cmd(cfg: &SuiteConfig) -> superop::Result<bool> {
    cfg.validate()?;
    let reports = verify::run(cfg)?;
    print!("{}", verify::render(&reports));
    Ok(reports.iter().all(|r| r.report.passed()))
}

fn verdict(r: superop::Result<bool>) -> ExitCode {
    match r {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.schema {
        print(&sj::schemas());
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand or --schema is required (see --help)");
        return ExitCode::from(2);
    };
    match command {
        Command::Check { kind, file, tol, level } => verdict(check(kind, &file, tol, level)),
        Command::Norm { kind, file, level, budgets } => verdict(norm(kind, &file, level, &budgets.config()).map(|_| true)),
        Command::Verify { suite, samples, tol, budgets } => {
            let cfg = SuiteConfig { suite: suite.into(), seed: budgets.seed, samples, tol, budgets: budgets.config() };
            verdict(verify_cmd(&cfg))
        }
    }
}
