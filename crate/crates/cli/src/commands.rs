//! The subcommands.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use quiver_pi::change::{builtin, kernel_ideal, validate_substitution, Substitution};
use quiver_pi::constructions::{
    certify, coproduct, ladder, ladder_cover, loop_family, parallel_arrows_example, product, quiver_from_group,
    quotient_by_action, theorem_a_instance, theorem_b_instance, GroupActionSpec, GroupExpr, TheoremInstance,
};
use quiver_pi::group::GroupPresentation;
use quiver_pi::quiver::{BoundQuiver, Path as QPath, Relation};
use quiver_pi::Error;

use crate::report::{digest, CheckReport, GroupReport, Report};
use crate::{
    AssembleArgs, ChangeArgs, CheckArgs, CliError, ConstructArgs, ConstructKind, ExampleIdeal, OpArgs, OpKind, Output,
    Pi1Args, Theorem, EXIT_CERTIFICATION, EXIT_INVALID, EXIT_OPERATION, EXIT_PARAMS, EXIT_PARSE, EXIT_SUBSTITUTION,
};

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn read_text(path: &Path) -> Result<(String, String), CliError> {
    let bytes = read(path)?;
    let d = digest(&bytes);
    let text =
        String::from_utf8(bytes).map_err(|_| CliError::new(EXIT_PARSE, format!("{}: not UTF-8", path.display())))?;
    Ok((text, d))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::new(EXIT_OPERATION, format!("cannot write {}: {e}", path.display())))
}

fn fail(code: u8) -> impl Fn(Error) -> CliError {
    move |e| match e {
        Error::Parse(_) => CliError::new(EXIT_PARSE, e.to_string()),
        _ => CliError::new(code, e.to_string()),
    }
}

/// Parses and validates a bound quiver file; returns it with its digest.
pub fn load_bound_quiver(path: &Path) -> Result<(BoundQuiver, String), CliError> {
    let (text, d) = read_text(path)?;
    let bq = BoundQuiver::from_json(&text).map_err(|e| match e {
        Error::Parse(m) => CliError::new(EXIT_PARSE, format!("{}: {m}", path.display())),
        other => CliError::new(EXIT_INVALID, format!("{}: {other}", path.display())),
    })?;
    let report = bq.validate();
    if !report.is_valid() {
        return Err(CliError::new(EXIT_INVALID, format!("{}: {report}", path.display())));
    }
    Ok((bq, d))
}

pub fn load_group(path: &Path) -> Result<GroupPresentation, CliError> {
    let (text, _) = read_text(path)?;
    GroupPresentation::from_json(&text).map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Writes the file, or returns its text for stdout when no path is given.
fn emit(bq: &BoundQuiver, output: Option<&Path>) -> Result<String, CliError> {
    let text = bq.to_json() + "\n";
    match output {
        Some(p) => {
            write(p, &text)?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text),
    }
}

pub fn cmd_pi1(args: &Pi1Args) -> Result<Output, CliError> {
    let (mut bq, d) = load_bound_quiver(&args.path)?;
    if let Some(base) = &args.base {
        bq.basepoint = bq.quiver.vertex(base).map_err(|e| CliError::new(EXIT_INVALID, format!("--base: {e}")))?;
    }
    let report = Report::build(&bq, d, args.order_cap).map_err(fail(EXIT_INVALID))?;
    Ok(Output::ok(if args.json { json(&report) } else { report.text(args.simplify) }))
}

#[derive(Serialize)]
struct ChangeReport {
    degree_one: Vec<String>,
    dimensions_equal: bool,
    before: Report,
    after: Report,
}

pub fn cmd_change(args: &ChangeArgs) -> Result<Output, CliError> {
    let (bq, d) = load_bound_quiver(&args.quiver)?;
    let sub = match (&args.substitution, &args.builtin) {
        (Some(path), _) => {
            let (text, _) = read_text(path)?;
            Substitution::from_json(&bq.quiver, &text)
                .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))?
        }
        (None, Some(name)) => {
            builtin(name, &bq, &args.param).map_err(|e| CliError::new(EXIT_SUBSTITUTION, e.to_string()))?
        }
        (None, None) => return Err(CliError::new(EXIT_PARSE, "a substitution file or --builtin is required")),
    };
    let check = validate_substitution(&bq, &sub).map_err(|e| CliError::new(EXIT_SUBSTITUTION, e.to_string()))?;
    let changed = kernel_ideal(&bq, &sub).map_err(|e| CliError::new(EXIT_SUBSTITUTION, e.to_string()))?;
    let written = changed.to_json() + "\n";
    let before = Report::build(&bq, d, args.order_cap).map_err(fail(EXIT_SUBSTITUTION))?;
    let after = Report::build(&changed, digest(written.as_bytes()), args.order_cap).map_err(fail(EXIT_SUBSTITUTION))?;
    let report = ChangeReport {
        degree_one: check.describe(&bq.quiver).lines().map(String::from).collect(),
        dimensions_equal: before.dimension == after.dimension,
        before,
        after,
    };
    let mut out = String::new();
    match &args.output {
        Some(p) => write(p, &written)?,
        None if !args.json => out.push_str(&written),
        None => {}
    }
    if args.json {
        out.push_str(&json(&report));
    } else {
        let _ = writeln!(out, "degree-one blocks:");
        for line in &report.degree_one {
            let _ = writeln!(out, "  {line}");
        }
        let _ = writeln!(out, "before: {} (dimension {})", report.before.group.summary, report.before.dimension);
        let _ = writeln!(out, "after: {} (dimension {})", report.after.group.summary, report.after.dimension);
    }
    Ok(Output::ok(out))
}

pub fn cmd_construct(args: &ConstructArgs) -> Result<Output, CliError> {
    let params = |e: Error| CliError::new(EXIT_PARAMS, e.to_string());
    let bq = match &args.kind {
        ConstructKind::Qg { group } => quiver_from_group(&load_group(group)?),
        ConstructKind::Ladder { n } => ladder(*n).map_err(params)?,
        ConstructKind::LadderCover { n, action_out } => {
            let (bq, action) = ladder_cover(*n).map_err(params)?;
            if let Some(p) = action_out {
                write(p, &(json(&action.to_file())))?;
            }
            bq
        }
        ConstructKind::Loops { orders } => loop_family(orders).map_err(params)?,
        ConstructKind::Parallel { ideal } => {
            let bq = parallel_arrows_example();
            match ideal {
                ExampleIdeal::I1 => bq,
                ExampleIdeal::I2 => {
                    let q = &bq.quiver;
                    let path = |names: &[&str]| QPath::from_names(q, names).expect("example paths");
                    let g = Relation::difference(path(&["beta", "alpha"]), path(&["gamma", "alpha"]));
                    bq.with_generators(vec![g])
                }
            }
        }
    };
    Ok(Output::ok(emit(&bq, args.output.as_deref())?))
}

pub fn cmd_op(args: &OpArgs) -> Result<Output, CliError> {
    let op = |e: Error| CliError::new(EXIT_OPERATION, e.to_string());
    let bq = match &args.kind {
        OpKind::Coproduct { left, right, at } => {
            let (l, _) = load_bound_quiver(left)?;
            let (r, _) = load_bound_quiver(right)?;
            let (lv, rv) = at
                .split_once(',')
                .ok_or_else(|| CliError::new(EXIT_PARSE, format!("--at: expected left,right but got {at:?}")))?;
            let lv = l.quiver.vertex(lv.trim()).map_err(|e| CliError::new(EXIT_OPERATION, format!("--at: {e}")))?;
            let rv = r.quiver.vertex(rv.trim()).map_err(|e| CliError::new(EXIT_OPERATION, format!("--at: {e}")))?;
            coproduct(&l, lv, &r, rv).map_err(op)?.bound
        }
        OpKind::Product { left, right } => {
            let (l, _) = load_bound_quiver(left)?;
            let (r, _) = load_bound_quiver(right)?;
            product(&l, &r).map_err(op)?.bound
        }
        OpKind::Quotient { quiver, action } => {
            let (bq, _) = load_bound_quiver(quiver)?;
            let (text, _) = read_text(action)?;
            let action = GroupActionSpec::from_json(&bq, &text).map_err(|e| match e {
                Error::Parse(_) => CliError::new(EXIT_PARSE, format!("{}: {e}", quiver.display())),
                other => CliError::new(EXIT_OPERATION, other.to_string()),
            })?;
            quotient_by_action(&action).map_err(op)?
        }
    };
    Ok(Output::ok(emit(&bq, args.output.as_deref())?))
}

#[derive(Serialize)]
struct AssembledPresentation {
    index: usize,
    input: String,
    dimension: usize,
    same_algebra: bool,
    expected: GroupReport,
    observed: GroupReport,
    matches: bool,
}

#[derive(Serialize)]
struct AssembleReport {
    theorem: String,
    vertices: usize,
    arrows: usize,
    truncation: usize,
    triangular: bool,
    dimensions_agree: bool,
    presentations: Vec<AssembledPresentation>,
    passed: bool,
}

pub fn cmd_assemble(args: &AssembleArgs) -> Result<Output, CliError> {
    let build = |e: Error| CliError::new(EXIT_CERTIFICATION, e.to_string());
    let instance: TheoremInstance = match args.theorem {
        Theorem::A => {
            let groups = args.inputs.iter().map(|p| load_group(Path::new(p))).collect::<Result<Vec<_>, _>>()?;
            theorem_a_instance(&groups).map_err(build)?
        }
        Theorem::B => {
            let exprs = args
                .inputs
                .iter()
                .map(|e| e.parse::<GroupExpr>().map_err(|err| CliError::new(EXIT_PARSE, err.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            theorem_b_instance(&exprs).map_err(build)?
        }
    };
    let report = certify(&instance, args.order_cap).map_err(build)?;
    let q = &instance.base.quiver;
    let out = AssembleReport {
        theorem: match args.theorem {
            Theorem::A => "A".into(),
            Theorem::B => "B".into(),
        },
        vertices: q.vertex_count(),
        arrows: q.arrow_count(),
        truncation: instance.base.truncation,
        triangular: report.triangular,
        dimensions_agree: report.dimensions_agree(),
        presentations: report
            .checks
            .iter()
            .enumerate()
            .map(|(i, c)| AssembledPresentation {
                index: i + 1,
                input: args.inputs[i].clone(),
                dimension: c.dimension,
                same_algebra: c.same_algebra,
                expected: GroupReport::new(&c.expected),
                observed: GroupReport::new(&c.observed),
                matches: c.group_matches(),
            })
            .collect(),
        passed: report.passed() && (args.theorem == Theorem::A || report.triangular),
    };
    if let Some(dir) = &args.output {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::new(EXIT_OPERATION, format!("cannot create {}: {e}", dir.display())))?;
        write(&dir.join("quiver.json"), &(instance.base.to_json() + "\n"))?;
        for (i, bq) in instance.presentations.iter().enumerate() {
            write(&dir.join(format!("I{}.json", i + 1)), &(bq.to_json() + "\n"))?;
        }
        write(&dir.join("report.json"), &json(&out))?;
    }
    let text = if args.json {
        json(&out)
    } else {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "theorem {}: {} vertices, {} arrows, truncation {}, triangular: {}",
            out.theorem, out.vertices, out.arrows, out.truncation, out.triangular
        );
        for p in &out.presentations {
            let _ = writeln!(
                s,
                "I{} [{}]: dimension {}, same algebra: {}, expected {}, observed {}: {}",
                p.index,
                p.input,
                p.dimension,
                p.same_algebra,
                p.expected.summary,
                p.observed.summary,
                if p.matches { "ok" } else { "MISMATCH" }
            );
        }
        let _ = writeln!(s, "certification: {}", if out.passed { "passed" } else { "FAILED" });
        s
    };
    Ok(Output { stdout: text, code: if out.passed { 0 } else { EXIT_CERTIFICATION } })
}

pub fn cmd_check(args: &CheckArgs) -> Result<Output, CliError> {
    let (text, d) = read_text(&args.path)?;
    let bq = BoundQuiver::from_json(&text).map_err(|e| match e {
        Error::Parse(m) => CliError::new(EXIT_PARSE, format!("{}: {m}", args.path.display())),
        other => CliError::new(EXIT_INVALID, format!("{}: {other}", args.path.display())),
    })?;
    let report = CheckReport::build(&bq, d).map_err(fail(EXIT_INVALID))?;
    let code = if report.valid { 0 } else { EXIT_INVALID };
    Ok(Output { stdout: if args.json { json(&report) } else { report.text() }, code })
}
