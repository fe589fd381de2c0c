//! Argument parsing and command dispatch for the `novikov` binary.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::Value as Json;

use novikov_core::algebra::{parse_rational, rf_expand, Matrix};
use novikov_core::complexes::{rationalize_map, torsion, torsion_of_map, ChainMap, ComplexRing, IntComplex, Torsion};
use novikov_core::morse_novikov::{novikov_tower, MNInstance};
use novikov_core::torsion_theorem::{
    check_delta_p, closed_form_rf, torsion_closed_form, torsion_generic, torsion_generic_rf, verify_theorem_b, DescentSystem, WRoute, ZetaSource,
};
use novikov_core::zeta::{
    cat_map_oracle, eta_from_orbits, trace_lefschetz, zeta_from_descent, zeta_from_homology, zeta_from_orbits, zeta_from_primes, zeta_rf_from_descent,
    zeta_rf_from_homology, zeta_v,
};
use novikov_core::Error as CoreError;

use crate::error::{At, CliError, CliResult};
use crate::format::{read_complex, read_descent, read_homology, read_instance, read_json, read_orbits, read_poly_matrix, read_primes, section, Node, DEFAULT_DATA_ORDER};
use crate::report::{digest, Report, SeriesOut, Value};

pub const DEFAULT_ORDER: i64 = 16;

#[derive(Debug, Parser)]
#[command(name = "novikov", version, about = "Novikov complexes, Lefschetz zeta functions and torsion, computed exactly")]
pub struct Cli {
    /// Also write the machine-readable report to this file.
    #[arg(long, global = true, value_name = "OUT")]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaRoute {
    Orbits,
    Primes,
    Homology,
    Descent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NovikovAction {
    Validate,
    Ranks,
    Tower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TorsionKind {
    Complex,
    Map,
    DescentClosed,
    DescentGeneric,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lefschetz zeta function from orbits, prime orbits, homology or descent matrices.
    Zeta {
        source: ZetaRoute,
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
    /// Novikov complex of an instance: structural checks, homology ranks, truncation tower.
    Novikov {
        action: NovikovAction,
        file: PathBuf,
        /// Tower height (defaults to the order).
        height: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
    /// Normalized torsion of a complex, a chain map, or descent data.
    Torsion {
        kind: TorsionKind,
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
    /// Compare the torsion w with zeta(v) on an instance.
    #[command(name = "verify-theorem-b")]
    VerifyTheoremB {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
    /// Expand a rational function in t.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(i64).range(1..))]
        order: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Oracle {
    /// Lefschetz numbers of a toral automorphism by lattice enumeration.
    CatMap {
        /// Row-major entries a,b,c,d.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        matrix: Vec<i64>,
        #[arg(long, default_value_t = 8)]
        iterates: u32,
    },
}

/// Arguments as echoed in reports: everything after the program name except
/// the `--json` destination, so the report does not depend on where it is written.
pub fn echo(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args.iter().skip(1) {
        if skip {
            skip = false;
        } else if a == "--json" {
            skip = true;
        } else if !a.starts_with("--json=") {
            out.push(a.clone());
        }
    }
    out
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, S>(args: I) -> Result<(Cli, Report), clap::Error>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&args)?;
    let report = run(&cli.command, echo(&args));
    Ok((cli, report))
}

pub fn run(cmd: &Command, echoed: Vec<String>) -> Report {
    let mut report = Report::new(echoed, String::new());
    let outcome = match cmd {
        Command::Zeta { source, file, order } => cmd_zeta(&mut report, *source, file, *order),
        Command::Novikov { action, file, height, order } => cmd_novikov(&mut report, *action, file, *height, *order),
        Command::Torsion { kind, file, order } => cmd_torsion(&mut report, *kind, file, *order),
        Command::VerifyTheoremB { file, order } => cmd_verify(&mut report, file, *order),
        Command::Oracle { which: Oracle::CatMap { matrix, iterates } } => cmd_cat_map(&mut report, matrix, *iterates),
        Command::Expand { expr, order } => cmd_expand(&mut report, expr, *order),
    };
    if let Err(e) = outcome {
        report.fail_with(&e);
    }
    report.finish()
}

fn load(report: &mut Report, file: &Path) -> CliResult<Json> {
    let io = |message: String| CliError::Io { file: file.display().to_string(), message };
    let bytes = fs::read(file).map_err(|e| io(e.to_string()))?;
    report.input_sha256 = digest(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| io("file is not UTF-8".into()))?;
    read_json(&text)
}

fn data_order_of(node: &Node) -> CliResult<i64> {
    match node.opt("N_data")? {
        Some(n) => n.as_in_range(1, i64::MAX),
        None => Ok(DEFAULT_DATA_ORDER),
    }
}

/// Reads descent data either from a bare descent file or from an instance.
fn load_descent(root: &Node) -> CliResult<(DescentSystem, String)> {
    let default = if root.is_object() && root.has("descent") { data_order_of(root)? } else { DEFAULT_DATA_ORDER };
    let node = section(root, "descent");
    Ok((read_descent(&node, default)?, node.path().to_string()))
}

fn check_data_order(n: i64, available: i64, path: &str) -> CliResult<()> {
    if n > available {
        return Err(CliError::core(path, &CoreError::InsufficientDataOrder { requested: n, available }));
    }
    Ok(())
}

fn push_integrality(report: &mut Report, name: &str, s: &SeriesOut) {
    let detail = (!s.integral).then(|| format!("{name} has non-integral coefficients; the orbit data is incomplete or inconsistent"));
    report.verdict(format!("{name} integral"), s.integral, detail);
}

fn cmd_zeta(report: &mut Report, route: ZetaRoute, file: &Path, n: i64) -> CliResult<()> {
    let json = load(report, file)?;
    let root = Node::root(&json);
    let (zeta, exact) = match route {
        ZetaRoute::Orbits => {
            let node = section(&root, "orbits");
            let s = read_orbits(&node)?;
            let at = format!("{}.N_orb", node.path());
            let eta = eta_from_orbits(&s, n).at(&at)?;
            report.series("eta_L", SeriesOut::new(&eta));
            (zeta_from_orbits(&s, n).at(&at)?, None)
        }
        ZetaRoute::Primes => {
            let p = read_primes(&root)?;
            (zeta_from_primes(&p, n), None)
        }
        ZetaRoute::Homology => {
            let node = section(&root, "homology");
            let h = read_homology(&node)?;
            let at = format!("{}.h", node.path());
            (zeta_from_homology(&h, n).at(&at)?, Some(zeta_rf_from_homology(&h).at(&at)?))
        }
        ZetaRoute::Descent => {
            let (s, at) = load_descent(&root)?;
            check_data_order(n, s.n_data(), &format!("{at}.N_data"))?;
            let at = format!("{at}.H");
            (zeta_from_descent(s.h(), n).at(&at)?, Some(zeta_rf_from_descent(s.h()).at(&at)?))
        }
    };
    let mut out = SeriesOut::new(&zeta);
    if let Some(e) = exact {
        out = out.with_exact(e);
    }
    push_integrality(report, "zeta_L", &out);
    report.series("zeta_L", out);
    if let Ok(v) = zeta_v(&zeta) {
        report.series("zeta_v", SeriesOut::new(&v));
    }
    Ok(())
}

/// Path blamed for a core error raised while working on a whole instance.
fn instance_path(e: &CoreError) -> &'static str {
    match e {
        CoreError::InsufficientDataOrder { .. } => "$.N_data",
        CoreError::InsufficientOrbitOrder { .. } => "$.orbits.N_orb",
        CoreError::PositiveValuationRequired(_) => "$.descent.H",
        CoreError::NotAChainMap { .. } | CoreError::TruncationMismatch { .. } => "$.descent",
        CoreError::NotAnEquivalence { .. } => "$.comparison",
        _ => "$",
    }
}

fn on_instance<T>(r: novikov_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| CliError::core(instance_path(&e), &e))
}

fn sigma_has_positive_valuation(s: &DescentSystem) -> bool {
    s.sigma1().iter().all(|m| m.entries().all(|(_, _, e)| e.is_zero() || e.valuation().is_some_and(|v| v >= 1)))
}

fn cmd_novikov(report: &mut Report, action: NovikovAction, file: &Path, height: Option<i64>, n: i64) -> CliResult<()> {
    let json = load(report, file)?;
    let inst = read_instance(&Node::root(&json))?;
    match action {
        NovikovAction::Validate => {
            check_data_order(n, inst.data_order, "$.N_data")?;
            let r = on_instance(inst.structural_checks(n))?;
            report.push("novikov_ranks", Value::Ranks(r.novikov_ranks.clone()));
            report.push("novikov_homology", Value::Ranks(r.novikov_homology.clone()));
            if let Some(h) = &r.simplicial_homology {
                report.push("simplicial_homology", Value::Ranks(h.clone()));
            }
            report.verdict("d^2 = 0", true, None);
            report.verdict(format!("tower round trip to t^{n}"), r.tower_round_trip, None);
            if let Some(ok) = r.homology_agrees {
                report.verdict("homology ranks agree with the simplicial complex", ok, None);
            }
            if let Some(ok) = r.euler_agrees {
                report.verdict("Euler characteristics agree", ok, None);
            }
            if let Some(s) = &inst.descent {
                if sigma_has_positive_valuation(s) {
                    let m = n.min(s.n_data());
                    let res = check_delta_p(s, m);
                    report.verdict(format!("Delta_p truncations for n <= {m}"), res.is_ok(), res.err().map(|e| e.to_string()));
                } else {
                    report.push("delta_p", Value::Text("skipped: sigma1 has a constant term".into()));
                }
            }
        }
        NovikovAction::Ranks => {
            report.push("novikov_ranks", Value::Ranks(on_instance(inst.novikov_polynomial_complex())?.ranks()));
            report.push("novikov_homology", Value::Ranks(on_instance(inst.novikov_homology_ranks())?));
            if let Some(s) = &inst.simplicial {
                report.push("simplicial_homology", Value::Ranks(s.rational_homology_ranks().at("$.simplicial")?));
            }
        }
        NovikovAction::Tower => {
            let h = height.unwrap_or(n);
            if h < 1 {
                return Err(CliError::at("HEIGHT", "OutOfRange", "tower height must be at least 1"));
            }
            check_data_order(h, inst.data_order, "$.N_data")?;
            let c = on_instance(inst.novikov_complex(h))?;
            let tower = on_instance(novikov_tower(&c, h))?;
            let check = tower.check();
            report.push("tower_height", Value::Integers(vec![h.to_string()]));
            report.verdict("tower_check", check.is_ok(), check.err().map(|e| e.to_string()));
            let lim = on_instance(tower.inverse_limit(h))?;
            report.verdict("inverse limit reproduces the complex", lim == c, None);
        }
    }
    Ok(())
}

fn read_map_file(root: &Node) -> CliResult<ChainMap<novikov_core::algebra::RationalFunction>> {
    let src = read_complex(&root.get("source")?)?;
    let tgt = read_complex(&root.get("target")?)?;
    let ring = if src.ring() == tgt.ring() { src.ring() } else { ComplexRing::Laurent };
    let lift = |c: &IntComplex, at: &str| c.map_entries(ring, |e| Ok(e.clone())).at(at);
    let len = src.len().max(tgt.len());
    let rank = |c: &IntComplex, k: usize| if k < c.len() { c.rank(k) } else { 0 };
    let zero = novikov_core::algebra::LaurentPoly::zero();
    let mut maps: Vec<_> = (0..len).map(|k| Matrix::zeros(rank(&tgt, k), rank(&src, k), &zero)).collect();
    for m in root.get("maps")?.items()? {
        let deg = m.get("deg")?;
        let k = deg.as_in_range(0, len as i64 - 1)? as usize;
        maps[k] = read_poly_matrix(&m.get("matrix")?, rank(&tgt, k), rank(&src, k))?;
    }
    let f = ChainMap::assemble(lift(&src, "$.source")?.padded(len), lift(&tgt, "$.target")?.padded(len), maps).at("$.maps")?;
    f.validate().at("$.maps")?;
    rationalize_map(&f).at("$.maps")
}

fn torsion_item(report: &mut Report, name: &str, t: &Torsion, n: i64) {
    let out = SeriesOut::torsion(t, n);
    push_integrality(report, name, &out);
    report.series(name, out);
}

fn cmd_torsion(report: &mut Report, kind: TorsionKind, file: &Path, n: i64) -> CliResult<()> {
    let json = load(report, file)?;
    let root = Node::root(&json);
    match kind {
        TorsionKind::Complex => {
            let c = read_complex(&root)?;
            let t = c.rationalize().and_then(|r| torsion(&r)).map_err(|e| match &e {
                CoreError::NotAcyclic { degree, .. } => CliError::core(format!("$.degrees[{degree}]"), &e),
                _ => CliError::core("$", &e),
            })?;
            torsion_item(report, "torsion", &t, n);
        }
        TorsionKind::Map => {
            let t = if root.has("source") {
                torsion_of_map(&read_map_file(&root)?).at("$.maps")?
            } else {
                let inst = read_instance(&root)?;
                on_instance(inst.comparison_torsion())?.ok_or_else(|| CliError::at("$.comparison", "MissingData", "instance has no comparison map"))?
            };
            torsion_item(report, "torsion", &t, n);
        }
        TorsionKind::DescentClosed | TorsionKind::DescentGeneric => {
            let (s, at) = load_descent(&root)?;
            check_data_order(n, s.n_data(), &format!("{at}.N_data"))?;
            let (w, exact) = if kind == TorsionKind::DescentClosed {
                (torsion_closed_form(&s, n).at(&at)?, closed_form_rf(&s).at(&at)?)
            } else {
                (torsion_generic(&s, n).at(&at)?, torsion_generic_rf(&s).at(&at)?.normalized)
            };
            let out = SeriesOut::new(w.series()).with_exact(exact);
            push_integrality(report, "w", &out);
            report.series("w", out);
        }
    }
    Ok(())
}

fn cmd_verify(report: &mut Report, file: &Path, n: i64) -> CliResult<()> {
    let json = load(report, file)?;
    let inst: MNInstance = read_instance(&Node::root(&json))?;
    let r = on_instance(verify_theorem_b(&inst, n))?;
    let route = match r.route {
        WRoute::EPrime => "torsion of E'",
        WRoute::ComparisonMap => "torsion of the comparison map",
    };
    let source = match r.zeta_source {
        ZetaSource::Orbits => "closed orbits",
        ZetaSource::Descent => "descent matrices",
    };
    report.push("w_route", Value::Text(route.into()));
    report.push("zeta_source", Value::Text(source.into()));
    report.series("w", SeriesOut::new(&r.w));
    if let Some(c) = &r.w_closed_form {
        report.series("w_closed_form", SeriesOut::new(c));
    }
    if let Some(x) = &r.w_via_xi {
        report.series("w_via_xi", SeriesOut::new(x));
    }
    report.series("zeta_L", SeriesOut::new(&r.zeta_l));
    report.series("zeta_v", SeriesOut::new(&r.zeta));
    let equal = r.comparison.equal && !r.comparison.orders_differ;
    let detail = (!equal).then(|| match r.w.try_sub(&r.zeta) {
        Ok(d) => format!("w - zeta(v) = {d}"),
        Err(e) => e.to_string(),
    });
    report.verdict(format!("w = zeta(v) mod t^{n}"), equal, detail);
    if r.w_closed_form.is_some() || r.w_via_xi.is_some() {
        let agree = r.w_closed_form.as_ref().is_none_or(|c| c == &r.w) && r.w_via_xi.as_ref().is_none_or(|x| x == &r.w);
        report.verdict("torsion routes agree", agree, None);
    }
    if let Some(t) = r.telescoping {
        report.verdict("telescoping: torsion(E') * zeta_L = 1", t, None);
    }
    report.verdict("theorem B", r.pass, None);
    Ok(())
}

fn cmd_cat_map(report: &mut Report, entries: &[i64], k: u32) -> CliResult<()> {
    let text: Vec<String> = entries.iter().map(i64::to_string).collect();
    report.input_sha256 = digest(format!("{};{k}", text.join(",")).as_bytes());
    let [a, b, c, d] = entries else {
        return Err(CliError::at("--matrix", "ShapeMismatch", format!("expected 4 entries a,b,c,d, found {}", entries.len())));
    };
    let l = cat_map_oracle([[*a, *b], [*c, *d]], k).at("--matrix")?;
    report.push("L", Value::Integers(l.iter().map(BigInt::to_string).collect()));
    let int = |rows: Vec<Vec<i64>>| {
        let cols = rows[0].len();
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(), cols, BigInt::from(0)).expect("well-formed")
    };
    let h = [int(vec![vec![1]]), int(vec![vec![*a, *b], vec![*c, *d]]), int(vec![vec![a * d - b * c]])];
    let mut agree = true;
    for (i, lk) in l.iter().enumerate() {
        agree &= *lk == trace_lefschetz(&h, i as u32 + 1).at("--matrix")?;
    }
    report.verdict("lattice counts match sum (-1)^i tr(h_i^k)", agree, None);
    Ok(())
}

fn cmd_expand(report: &mut Report, expr: &str, n: i64) -> CliResult<()> {
    report.input_sha256 = digest(expr.as_bytes());
    let r = parse_rational(expr).at("EXPR")?;
    let s = rf_expand(&r, n).at("EXPR")?;
    report.series("expansion", SeriesOut::new(&s).with_exact(&r));
    Ok(())
}
