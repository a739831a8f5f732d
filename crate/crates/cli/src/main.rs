//! `jquartic`: batch runner for counts, class groups and verification suites
//! over binary quartic forms with `J = 0`.

mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jquartic::classes::{self, ClassGroup, FormClass};
use jquartic::counting::{self, CountReport, FiberAction, HeightPolicy};
use jquartic::family::{family_member, for_each_ellipse_point, FamilyPoint};
use jquartic::oracle::Oracle;
use jquartic::verify::{self, Suite, VerifyConfig};
use jquartic::{invariants, is_irreducible_q, QuadraticForm, QuarticForm};
use serde_json::{json, Value};

use config::{FileConfig, Format, Overrides, PolicyChoice, RunConfig, THREADS_ENV};
use error::CliError;
use output::{Artifact, Table};

#[derive(Debug, Parser)]
#[command(name = "jquartic", version, about = "Counts and verifies GL2(Z)-orbits of binary quartic forms with J = 0")]
struct Cli {
    /// File of `key = value` lines; flags and the environment take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Seed for sampled suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (also JQUARTIC_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Comma-separated, strictly increasing heights, e.g. `1e6,1e8,1e10`.
    #[arg(long, global = true)]
    ladder: Option<String>,
    /// discriminant-leq, abs-i-leq or both.
    #[arg(long, global = true)]
    policy: Option<String>,
    /// Coefficient box height for the brute-force oracle.
    #[arg(long, global = true)]
    height: Option<i128>,
    /// Matrix entry bound for automorphism and equivalence searches.
    #[arg(long, global = true)]
    bmat: Option<i128>,
    /// Largest height for `verify oracle-equivalence`.
    #[arg(long, global = true, value_parser = parse_int_arg)]
    xmax: Option<i128>,
    /// Largest height attempted under abs-i-leq.
    #[arg(long, global = true, value_parser = parse_int_arg)]
    abs_i_limit: Option<i128>,
    /// Directory receiving `<command>.json` and `<command>.csv`.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// I, J and the discriminant of a quartic, or the discriminant of a quadratic.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Reduced representative of a quadratic, or the orbit label of a `J = 0` quartic.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Classes of discriminant −D and their composition table.
    Classgroup {
        #[arg(allow_hyphen_values = true)]
        d: i128,
    },
    /// Points of the family of a divisor with |I| up to a bound.
    Family {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, value_parser = parse_int_arg)]
        ibound: i128,
    },
    /// Orbits with positive definite Hessian divisor over the ladder.
    CountN,
    /// Orbits with reducible Hessian divisor over the ladder.
    CountM,
    /// Run one verification suite.
    Verify { suite: String },
    /// Per-class comparison of two candidate main terms.
    AuditConstants,
}

fn parse_int_arg(s: &str) -> Result<i128, String> {
    config::parse_int(s).map_err(|e| e.to_string())
}

fn parse_form(s: &str) -> Result<Vec<i128>, CliError> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let cs = t
        .split(',')
        .map(|c| c.trim().parse::<i128>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Config(format!("cannot parse form {s:?}: expected comma-separated integers")))?;
    match cs.len() {
        3 | 5 => Ok(cs),
        n => Err(CliError::Config(format!("form {s:?} has {n} coefficients; expected 3 or 5"))),
    }
}

fn quadratic(cs: &[i128]) -> QuadraticForm {
    QuadraticForm::new(cs[0], cs[1], cs[2])
}

fn quartic(cs: &[i128]) -> QuarticForm {
    QuarticForm::new(cs[0], cs[1], cs[2], cs[3], cs[4])
}

fn join(cs: &[i128]) -> String {
    cs.iter().map(i128::to_string).collect::<Vec<_>>().join(",")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jquartic: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let (name, args, default_policy) = match &cli.command {
        Command::Invariants { form } => ("invariants", vec![join(&parse_form(form)?)], None),
        Command::Reduce { form } => ("reduce", vec![join(&parse_form(form)?)], None),
        Command::Classgroup { d } => ("classgroup", vec![d.abs().to_string()], None),
        Command::Family { form, ibound } => {
            ("family", vec![join(&parse_form(form)?), format!("--ibound={ibound}")], None)
        }
        Command::CountN => ("count-n", vec![], None),
        Command::CountM => ("count-m", vec![], Some(PolicyChoice::Both)),
        Command::Verify { suite } => ("verify", vec![suite.clone()], None),
        Command::AuditConstants => ("audit-constants", vec![], None),
    };
    let flags = Overrides {
        seed: cli.seed,
        ladder: cli.ladder.clone(),
        policy: cli.policy.clone(),
        height: cli.height,
        bmat: cli.bmat,
        threads: cli.threads,
        out: cli.out.clone(),
        format: cli.format.map(|f| match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }),
        xmax: cli.xmax,
        abs_i_limit: cli.abs_i_limit,
    };
    let default_policy = default_policy.unwrap_or(PolicyChoice::One(HeightPolicy::DiscriminantLeq));
    let cfg = RunConfig::build(name, args, default_policy, flags, &file, std::env::var(THREADS_ENV).ok())?;
    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?;
    }

    match &cli.command {
        Command::Invariants { form } => output::emit(&cfg, &cmd_invariants(&parse_form(form)?)?),
        Command::Reduce { form } => output::emit(&cfg, &cmd_reduce(&parse_form(form)?, &cfg)?),
        Command::Classgroup { d } => output::emit(&cfg, &cmd_classgroup(d.abs())?),
        Command::Family { form, ibound } => output::emit(&cfg, &cmd_family(&parse_form(form)?, *ibound)?),
        Command::CountN => output::emit(&cfg, &cmd_count(&cfg, counting::count_n)?),
        Command::CountM => output::emit(&cfg, &cmd_count(&cfg, counting::count_m)?),
        Command::Verify { suite } => cmd_verify(suite, &cfg),
        Command::AuditConstants => output::emit(&cfg, &cmd_audit(&cfg)?),
    }
}

fn cmd_invariants(cs: &[i128]) -> Result<Artifact, CliError> {
    if cs.len() == 3 {
        let d = quadratic(cs).disc();
        let mut table = Table::new(&["disc"]);
        table.push(vec![d.to_string()]);
        return Ok(Artifact { summary: json!({ "form": cs, "disc": d }), table });
    }
    let inv = invariants(&quartic(cs))?;
    let mut table = Table::new(&["I", "J", "disc"]);
    table.push(vec![inv.i.to_string(), inv.j.to_string(), inv.disc.to_string()]);
    Ok(Artifact { summary: json!({ "form": cs, "I": inv.i, "J": inv.j, "disc": inv.disc }), table })
}

fn cmd_reduce(cs: &[i128], cfg: &RunConfig) -> Result<Artifact, CliError> {
    if cs.len() == 3 {
        let f = quadratic(cs);
        if !f.is_positive_definite() {
            return Err(CliError::Config(format!("{f} is not positive definite")));
        }
        let (g, t) = classes::reduce(&f)?;
        let mut table = Table::new(&["a", "b", "c", "t1", "t2", "t3", "t4"]);
        let mut row: Vec<String> = g.coeffs().iter().map(i128::to_string).collect();
        row.extend(t.entries().iter().map(i128::to_string));
        table.push(row);
        let summary = json!({ "form": cs, "reduced": g.coeffs(), "transform": t.entries() });
        return Ok(Artifact { summary, table });
    }
    let f = quartic(cs);
    let inv = invariants(&f)?;
    if inv.j != 0 || inv.disc == 0 {
        return Err(CliError::Config(format!("{f} needs J = 0 and nonzero discriminant")));
    }
    let oracle = Oracle::new(jquartic::oracle::DEFAULT_MAX_HEIGHT, cfg.bmat);
    let key = oracle.orbit_key(&f)?;
    let rep = family_member(&FamilyPoint::new(key.divisor, key.point.0, key.point.1))?;
    let mut table = Table::new(&["kind", "alpha", "beta", "gamma", "A", "B", "a4", "a3", "a2", "a1", "a0"]);
    let mut row = vec![format!("{:?}", key.kind).to_lowercase()];
    row.extend(key.divisor.coeffs().iter().map(i128::to_string));
    row.extend([key.point.0.to_string(), key.point.1.to_string()]);
    row.extend(rep.coeffs().iter().map(i128::to_string));
    table.push(row);
    let summary = json!({
        "form": cs,
        "kind": key.kind,
        "divisor": key.divisor.coeffs(),
        "point": [key.point.0, key.point.1],
        "representative": rep.coeffs(),
        "invariants": key.invariants,
    });
    Ok(Artifact { summary, table })
}

fn cmd_classgroup(d: i128) -> Result<Artifact, CliError> {
    let g = ClassGroup::new(d).map_err(|e| CliError::Config(e.to_string()))?;
    let table_ix = g.composition_table()?;
    let mut table = Table::new(&["index", "a", "b", "c", "order", "ambiguous", "products"]);
    let mut classes_json = Vec::new();
    for (i, c) in g.elements.iter().enumerate() {
        let order = classes::order(c)?;
        let ambiguous = classes::is_ambiguous(c);
        let products = table_ix[i].iter().map(usize::to_string).collect::<Vec<_>>().join(";");
        let mut row = vec![i.to_string()];
        row.extend(c.rep.coeffs().iter().map(i128::to_string));
        row.extend([order.to_string(), ambiguous.to_string(), products]);
        table.push(row);
        classes_json.push(json!({
            "index": i,
            "form": c.rep.coeffs(),
            "order": order,
            "ambiguous": ambiguous,
            "cover_multiplicity": classes::cover_multiplicity(&FormClass::new(&c.rep, classes::Group::Gl2)?),
        }));
    }
    let summary = json!({
        "disc": g.disc,
        "class_number": g.order(),
        "classes": classes_json,
        "composition": table_ix,
    });
    Ok(Artifact { summary, table })
}

fn cmd_family(cs: &[i128], ibound: i128) -> Result<Artifact, CliError> {
    if cs.len() != 3 {
        return Err(CliError::Config("family takes a quadratic divisor a,b,c".into()));
    }
    let f = quadratic(cs);
    let reducible_shape = f.c == 0 && f.a > 0 && f.b > 0;
    if !(f.is_positive_definite() && f.is_primitive()) && !reducible_shape {
        return Err(CliError::Config(format!(
            "{f} must be primitive positive definite or of the shape a·x² + n·xy with a, n > 0"
        )));
    }
    let action = if reducible_shape { FiberAction::reducible(&f)? } else { FiberAction::definite(&f)? };
    let mut pts = Vec::new();
    let collect = |a: i128, b: i128| {
        pts.push((a, b));
        Ok(())
    };
    if reducible_shape {
        counting::for_each_hyperbola_point(&f, ibound, collect)?;
    } else {
        for_each_ellipse_point(&f, ibound, collect)?;
    }
    pts.sort_unstable();
    let mut table = Table::new(&[
        "A", "B", "a4", "a3", "a2", "a1", "a0", "I", "primitive", "irreducible", "orbit_least", "orbit_size",
    ]);
    let (mut irreducible, mut primitive, mut orbits) = (0u64, 0u64, 0u64);
    for &(a, b) in &pts {
        let big_f = family_member(&FamilyPoint::new(f, a, b))?;
        let inv = invariants(&big_f)?;
        let prim = big_f.content() == 1;
        let irr = is_irreducible_q(&big_f)?;
        let (least, size) = action.orbit_min(a, b);
        primitive += prim as u64;
        if irr {
            irreducible += 1;
            orbits += least as u64;
        }
        let mut row = vec![a.to_string(), b.to_string()];
        row.extend(big_f.coeffs().iter().map(i128::to_string));
        row.extend([inv.i.to_string(), prim.to_string(), irr.to_string(), least.to_string(), size.to_string()]);
        table.push(row);
    }
    let summary = json!({
        "divisor": cs,
        "i_bound": ibound,
        "fiber_size": action.size(),
        "points": pts.len(),
        "primitive": primitive,
        "irreducible": irreducible,
        "irreducible_orbits": orbits,
    });
    Ok(Artifact { summary, table })
}

fn count_json(r: &CountReport) -> Value {
    let mut v = serde_json::to_value(r).expect("report serializes");
    if let Value::Object(m) = &mut v {
        for k in ["per_d", "fitted", "predicted_constant"] {
            m.remove(k);
        }
        m.insert("divisor_discriminants".into(), json!(r.per_d.len()));
    }
    v
}

type Plan = Vec<(HeightPolicy, Vec<i128>)>;

/// Policies to run and the ladder for each; `abs-i-leq` is skipped above the
/// limit when both policies were asked for and refused when it was asked for
/// alone.
fn policy_plan(cfg: &RunConfig) -> Result<(Plan, Vec<String>), CliError> {
    let mut plan = Vec::new();
    let mut notes = Vec::new();
    for p in cfg.policy.policies() {
        let mut xs = cfg.ladder.clone();
        if p == HeightPolicy::AbsILeq {
            let over: Vec<i128> = xs.iter().copied().filter(|&x| x > cfg.abs_i_limit).collect();
            if !over.is_empty() {
                if cfg.policy == PolicyChoice::One(p) {
                    return Err(CliError::Resource(format!(
                        "abs-i-leq at X = {over:?} exceeds the limit {} (raise --abs-i-limit)",
                        cfg.abs_i_limit
                    )));
                }
                xs.retain(|&x| x <= cfg.abs_i_limit);
                notes.push(format!("abs-i-leq skipped for X = {over:?} above the limit {}", cfg.abs_i_limit));
            }
        }
        if !xs.is_empty() {
            plan.push((p, xs));
        }
    }
    Ok((plan, notes))
}

fn cmd_count(cfg: &RunConfig, count: fn(i128, HeightPolicy) -> jquartic::Result<CountReport>) -> Result<Artifact, CliError> {
    let (plan, notes) = policy_plan(cfg)?;
    let mut table = Table::new(&["policy", "X", "D", "points", "orbits"]);
    let mut runs = Vec::new();
    for (p, xs) in plan {
        let reports = counting::count_ladder(&xs, p, count)?;
        for r in &reports {
            for [x, d, pts, orbits] in r.csv_rows() {
                table.push(vec![p.to_string(), x.to_string(), d.to_string(), pts.to_string(), orbits.to_string()]);
            }
        }
        let fitted = reports[0].fitted.map(|(a, b)| json!({ "a": a, "b": b }));
        runs.push(json!({
            "policy": p,
            "fitted": fitted,
            "predicted_constant": reports[0].predicted_constant,
            "ratio": reports.last().map(|r| r.ratio),
            "ladder": reports.iter().map(count_json).collect::<Vec<_>>(),
        }));
    }
    Ok(Artifact { summary: json!({ "runs": runs, "notes": notes }), table })
}

fn cmd_audit(cfg: &RunConfig) -> Result<Artifact, CliError> {
    let (plan, notes) = policy_plan(cfg)?;
    let forms = counting::default_audit_forms();
    let mut table = Table::new(&[
        "policy", "a", "b", "c", "X", "i_bound", "points", "predicted_main", "area_main", "predicted_ratio", "area_ratio",
    ]);
    let mut runs = Vec::new();
    for (p, xs) in plan {
        let (rows, verdicts) = counting::per_class_error_audit(&xs, &forms, p)?;
        for r in &rows {
            let mut row = vec![p.to_string()];
            row.extend(r.f.coeffs().iter().map(i128::to_string));
            row.extend([r.x.to_string(), r.i_bound.to_string(), r.points.to_string()]);
            row.extend([r.predicted_main, r.area_main, r.predicted_ratio, r.area_ratio].iter().map(f64::to_string));
            table.push(row);
        }
        let area = verdicts.iter().filter(|v| v.supports_area).count();
        runs.push(json!({
            "policy": p,
            "verdicts": verdicts,
            "forms_supporting_area": area,
            "forms": verdicts.len(),
        }));
    }
    Ok(Artifact { summary: json!({ "runs": runs, "notes": notes }), table })
}

fn cmd_verify(suite: &str, cfg: &RunConfig) -> Result<(), CliError> {
    let suite: Suite = suite
        .parse()
        .map_err(|_| CliError::Config(format!("unknown suite {suite:?}; expected one of {}", suite_names())))?;
    let mut vc = VerifyConfig { seed: cfg.seed, oracle_height: cfg.height, bmat: cfg.bmat, ..VerifyConfig::default() };
    vc.ladder = cfg.ladder.clone();
    if let Some(xmax) = cfg.xmax {
        if xmax < 1 {
            return Err(CliError::Config("xmax must be positive".into()));
        }
        vc.oracle_xs.retain(|&x| x < xmax);
        vc.oracle_xs.push(xmax);
    }
    let report = verify::run_suite(suite, &vc)?;
    let mut table = Table::new(&["suite", "pass", "checks", "failures"]);
    table.push(vec![
        report.suite.clone(),
        report.pass.to_string(),
        report.checks.to_string(),
        report.failures.to_string(),
    ]);
    let summary = serde_json::to_value(&report).expect("report serializes");
    output::emit(cfg, &Artifact { summary, table })?;
    eprintln!("{}: {}", report.suite, if report.pass { "PASS" } else { "FAIL" });
    for n in &report.notes {
        eprintln!("  {n}");
    }
    if report.pass {
        Ok(())
    } else {
        for w in &report.witnesses {
            eprintln!("  witness: {w}");
        }
        Err(CliError::Verification(format!("{} failed {} of {} checks", report.suite, report.failures, report.checks)))
    }
}

fn suite_names() -> String {
    Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}
