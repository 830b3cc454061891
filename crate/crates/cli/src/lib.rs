//! Command-line front end. `run` does all the work and writes to a caller-supplied sink so that
//! output can be compared byte for byte.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use supercohom::cache::ResultCache;
use supercohom::cohomology::{
    coefficient_setup, cohomology_checked, extension_scan, h0_fixed_points, h1_via_quotient, h1_via_superderivations,
    CohomologyRepr, CohomologyResult, Coefficients,
};
use supercohom::koszul::{check_representation, trivial_module, CochainComplex, DualSign};
use supercohom::realize::{build, Family, IdealReading, NilpotentAlgebra, OspOptions};
use supercohom::spectral::{collapse_check, h2_recursive, CollapseReport, RecursionStep};
use supercohom::tables::{verify, Status, TableRange, TablesReport};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] supercohom::Error),
    #[error("{0}")]
    Usage(String),
    #[error("output: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use supercohom::Error as E;
        match self {
            CliError::Usage(_) => EXIT_BAD_INPUT,
            CliError::Core(E::InvalidParameters(_) | E::UnknownName(_) | E::TooLarge { .. } | E::NotEven | E::ShapeMismatch(..)) => {
                EXIT_BAD_INPUT
            }
            CliError::Core(_) => EXIT_INVARIANT,
            CliError::Io(_) | CliError::Json(_) => EXIT_INVARIANT,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "supercohom", version, about = "Exact cohomology of nilpotent subalgebras of Lie superalgebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (default: all cores). Output does not depend on this.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Cache directory for computed results.
    #[arg(long, env = "SUPERCOHOM_CACHE_DIR", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Run computations above the cochain-count guardrail.
    #[arg(long, global = true)]
    pub allow_large: bool,
    /// Which root vectors form the distinguished ideal of osp.
    #[arg(long, value_enum, default_value_t = ReadingArg::Leading, global = true)]
    pub ideal_reading: ReadingArg,
    /// Sign convention for the dual module 𝔦*.
    #[arg(long, value_enum, default_value_t = SignArg::Koszul, global = true)]
    pub dual_sign: SignArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Leading,
    EpsilonOrDelta,
    Epsilon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Koszul,
    Twisted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Koszul,
    Quotient,
    Superderivation,
    FixedPoints,
    SpectralSum,
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// gl, sl, q, osp-even, osp-odd, or exc (with --name).
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Exceptional algebra: D21a, G3 or F4.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H^k(𝔫, M) with its weight decomposition.
    Compute {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Degrees, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        degree: Vec<usize>,
        /// trivial, ideal-dual, or lambda-s-J.
        #[arg(long, default_value = "trivial")]
        coefficients: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Koszul)]
        route: RouteArg,
        /// Also verify d∘d = 0 and the module axioms.
        #[arg(long)]
        check: bool,
    },
    /// Compare the published dimension formulas with direct computation.
    VerifyTables {
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Only rows whose id starts with this.
        #[arg(long)]
        row: Option<String>,
        /// List every parameter point, not only disagreements.
        #[arg(long)]
        verbose: bool,
    },
    /// E₂ page and collapse check; optionally the recursive H².
    Spectral {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long = "K", visible_alias = "k-max", default_value_t = 3)]
        k_max: usize,
        /// Also run the H² recursion and compare with the direct value.
        #[arg(long)]
        recursive: bool,
    },
    /// Central extensions by cocycles satisfy Jacobi; by non-cocycles they do not.
    ExtensionCheck {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Basis, weights, brackets and ideal of 𝔫.
    DumpAlgebra {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

fn osp_options(g: &GlobalOpts) -> OspOptions {
    OspOptions {
        ideal: match g.ideal_reading {
            ReadingArg::Leading => IdealReading::Leading,
            ReadingArg::EpsilonOrDelta => IdealReading::EpsilonOrDelta,
            ReadingArg::Epsilon => IdealReading::Epsilon,
        },
        ..OspOptions::default()
    }
}

fn dual_sign(g: &GlobalOpts) -> DualSign {
    match g.dual_sign {
        SignArg::Koszul => DualSign::Koszul,
        SignArg::Twisted => DualSign::Twisted,
    }
}

/// Family and (m, n) after validating which parameters the family takes.
pub fn resolve(a: &AlgebraArgs) -> Result<(Family, usize, usize)> {
    let name = if a.family == "exc" {
        a.name.as_deref().ok_or_else(|| CliError::Usage("--family exc needs --name D21a|G3|F4".into()))?
    } else {
        a.family.as_str()
    };
    let family = Family::parse(name).ok_or_else(|| CliError::Usage(format!("unknown family `{name}`")))?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("{} needs --{flag}", family.name())));
    Ok(match family {
        Family::Q => (family, 0, need(a.n, "n")?),
        f if f.is_exceptional() => (family, 0, 0),
        _ => (family, need(a.m, "m")?, need(a.n, "n")?),
    })
}

fn warn_degree(alg: &NilpotentAlgebra, k: usize, err: &mut dyn Write) -> Result<()> {
    if k > 4 && alg.dim() > 20 {
        writeln!(err, "warning: degree {k} on a {}-dimensional algebra; cochain spaces grow combinatorially", alg.dim())?;
    }
    Ok(())
}

fn cache_key(family: Family, m: usize, n: usize, k: usize, coeffs: Coefficients, g: &GlobalOpts, route: RouteArg) -> String {
    let mut key = format!("{}-{m}-{n}-h{k}-{}", family.name(), coeffs.name());
    if coeffs != Coefficients::Trivial {
        key.push_str(&format!("-{}-{}", osp_options(g).ideal.name(), format!("{:?}", g.dual_sign).to_lowercase()));
    }
    if route != RouteArg::Koszul {
        key.push_str(&format!("-{route:?}").to_lowercase());
    }
    key
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Compute { alg, degree, coefficients, route, check } => {
            cmd_compute(g, alg, degree, coefficients, *route, *check, out, err)
        }
        Command::VerifyTables { max_m, max_n, row, verbose } => {
            cmd_verify_tables(g, TableRange { max_m: *max_m, max_n: *max_n }, row.as_deref(), *verbose, out)
        }
        Command::Spectral { alg, k_max, recursive } => cmd_spectral(g, alg, *k_max, *recursive, out, err),
        Command::ExtensionCheck { alg } => cmd_extension_check(g, alg, out),
        Command::DumpAlgebra { alg } => cmd_dump_algebra(g, alg, out),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_compute(
    g: &GlobalOpts,
    a: &AlgebraArgs,
    degrees: &[usize],
    coefficients: &str,
    route: RouteArg,
    check: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let (family, m, n) = resolve(a)?;
    let coeffs = Coefficients::parse(coefficients)
        .ok_or_else(|| CliError::Usage(format!("unknown coefficients `{coefficients}`")))?;
    let (alg, ideal) = build(family, m, n, &osp_options(g))?;
    let (base, module) = coefficient_setup(&alg, ideal.as_ref(), coeffs, dual_sign(g))?;
    let top = degrees.iter().copied().max().unwrap_or(0);
    warn_degree(&base, top, err)?;
    if check {
        alg.check_structure()?;
        if let Some(i) = &ideal {
            i.check(&alg)?;
        }
        check_representation(&base, &module)?;
        CochainComplex::new(&base, &module, top + 1).check_dd(top)?;
    }
    let cache = g.cache_dir.as_ref().map(ResultCache::new);
    let mut results = Vec::new();
    for &k in degrees {
        let key = cache_key(family, m, n, k, coeffs, g, route);
        if let Some(hit) = cache.as_ref().and_then(|c| c.load(&key, base.symbols())) {
            results.push(hit);
            continue;
        }
        let r = match route {
            RouteArg::Koszul => cohomology_checked(&base, &module, k, g.allow_large)?,
            RouteArg::FixedPoints => {
                if k != 0 {
                    return Err(CliError::Usage("the fixed-points route computes degree 0 only".into()));
                }
                h0_fixed_points(&base, &module)
            }
            RouteArg::Quotient => {
                if k != 1 || coeffs != Coefficients::Trivial {
                    return Err(CliError::Usage("the quotient route computes degree 1 with trivial coefficients only".into()));
                }
                h1_via_quotient(&base)
            }
            RouteArg::Superderivation => {
                if k != 1 {
                    return Err(CliError::Usage("the superderivation route computes degree 1 only".into()));
                }
                h1_via_superderivations(&base, &module)
            }
            RouteArg::SpectralSum => {
                if k != 2 || coeffs != Coefficients::Trivial {
                    return Err(CliError::Usage("the spectral-sum route computes degree 2 with trivial coefficients only".into()));
                }
                h2_recursive(family, m, n, dual_sign(g), cache.as_ref())?.result
            }
        };
        if let Some(c) = &cache {
            c.store(&key, base.symbols(), &r);
        }
        results.push(r);
    }
    match g.format {
        Format::Json => {
            let reprs: Vec<CohomologyRepr> = results.iter().map(CohomologyResult::to_repr).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&reprs)?)?;
        }
        Format::Text => {
            for r in &results {
                write_result_text(out, family, m, n, r)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_result_text(out: &mut dyn Write, family: Family, m: usize, n: usize, r: &CohomologyResult) -> Result<()> {
    writeln!(out, "{}  H^{}  coefficients {}  route {}", family.display(m, n), r.degree, r.coefficients, r.route.name())?;
    let width = r.blocks.iter().map(|b| b.weight.label().chars().count()).max().unwrap_or(6).max(6);
    writeln!(out, "  {:<width$}  {:>5}  {:>5}", "weight", "even", "odd")?;
    for b in &r.blocks {
        let label = b.weight.label();
        let pad = width - label.chars().count();
        writeln!(out, "  {label}{}  {:>5}  {:>5}", " ".repeat(pad), b.even, b.odd)?;
    }
    writeln!(out, "  total {} (even {}, odd {})", r.total, r.even_total(), r.odd_total())?;
    Ok(())
}

fn cmd_verify_tables(g: &GlobalOpts, range: TableRange, row: Option<&str>, verbose: bool, out: &mut dyn Write) -> Result<i32> {
    let report = verify(&range, row, &osp_options(g), dual_sign(g))?;
    if report.rows.is_empty() {
        return Err(CliError::Usage(format!("no table row matches `{}`", row.unwrap_or(""))));
    }
    match g.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text => write_tables_text(out, &report, verbose)?,
    }
    Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
}

fn write_tables_text(out: &mut dyn Write, report: &TablesReport, verbose: bool) -> Result<()> {
    writeln!(out, "table verification, m ≤ {}, n ≤ {}", report.range.max_m, report.range.max_n)?;
    for r in &report.rows {
        writeln!(out, "{:<15} {:<9} H^{:<5} {}", r.id, r.family.name(), r.degree, r.status.name())?;
        if let Some(why) = &r.known_conflict {
            writeln!(out, "    known conflict: {why}")?;
        }
        for p in r.points.iter().filter(|p| verbose || p.status != Status::Match) {
            let c = &p.computed;
            let split = match (c.even, c.odd) {
                (Some(e), Some(o)) => format!("{} ({e}+{o})", c.total),
                _ => c.total.to_string(),
            };
            writeln!(out, "    m={} n={} k={}: computed {split}  [{}]", p.m, p.n, p.k, p.status.name())?;
            for s in &p.paper {
                let vals: Vec<String> =
                    s.values.iter().map(|v| format!("{:?} {} = {}", v.component, v.formula, v.value).to_lowercase()).collect();
                if !vals.is_empty() {
                    writeln!(out, "        {}: {}", s.reference, vals.join("; "))?;
                }
            }
        }
    }
    let count = |s: Status| report.rows.iter().filter(|r| r.status == s).count();
    writeln!(
        out,
        "rows: {} match, {} paper-internal-conflict, {} mismatch",
        count(Status::Match),
        count(Status::PaperInternalConflict),
        count(Status::Mismatch)
    )?;
    Ok(())
}

#[derive(Serialize)]
struct RecursionRepr {
    steps: Vec<RecursionStep>,
    base: (usize, usize, usize),
    total: usize,
    direct_total: usize,
    agrees: bool,
}

#[derive(Serialize)]
struct SpectralRepr {
    collapse: CollapseReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    recursion: Option<RecursionRepr>,
}

fn cmd_spectral(g: &GlobalOpts, a: &AlgebraArgs, k_max: usize, recursive: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (family, m, n) = resolve(a)?;
    let (alg, ideal) = build(family, m, n, &osp_options(g))?;
    let ideal = ideal.ok_or_else(|| CliError::Usage(format!("{} has no distinguished ideal", family.display(m, n))))?;
    warn_degree(&alg, k_max, err)?;
    let collapse = collapse_check(&alg, &ideal, k_max, dual_sign(g), g.allow_large)?;
    let recursion = if recursive {
        let cache = g.cache_dir.as_ref().map(ResultCache::new);
        let rec = h2_recursive(family, m, n, dual_sign(g), cache.as_ref())?;
        let direct = cohomology_checked(&alg, &trivial_module(&alg), 2, g.allow_large)?;
        Some(RecursionRepr {
            agrees: rec.result.same_dims(&direct),
            total: rec.result.total,
            direct_total: direct.total,
            steps: rec.steps,
            base: rec.base,
        })
    } else {
        None
    };
    let ok = collapse.holds() && recursion.as_ref().map(|r| r.agrees).unwrap_or(true);
    let report = SpectralRepr { collapse, recursion };
    match g.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text => {
            let c = &report.collapse;
            writeln!(out, "{}  ideal of dimension {}{}", family.display(m, n), ideal.len(), if c.fallback { "  (non-abelian: H^j(𝔦) computed)" } else { "" })?;
            writeln!(out, "E2 totals, row j, column i:")?;
            for (j, row) in c.e2.grid.iter().enumerate().rev() {
                let cells: Vec<String> = row.iter().map(|d| format!("{d:>6}")).collect();
                writeln!(out, "  j={j}:{}", cells.join(""))?;
            }
            for r in &c.rows {
                let split: Vec<String> = r.split.iter().map(|d| d.to_string()).collect();
                writeln!(
                    out,
                    "k={}: H^k = {}  Σ E2 = {} = {}  {}",
                    r.k,
                    r.lhs,
                    r.rhs,
                    split.join("+"),
                    if r.holds { "collapse holds" } else { "COLLAPSE FAILS" }
                )?;
                for d in &r.weight_diffs {
                    writeln!(out, "    weight {}: H^k {:?} vs E2 {:?}", d.weight, d.lhs, d.rhs)?;
                }
            }
            if let Some(rec) = &report.recursion {
                for s in &rec.steps {
                    writeln!(
                        out,
                        "recursion {}: {} + {} + H²({})",
                        family.display(s.m, s.n),
                        s.h0_h2_ideal,
                        s.h1_h1_ideal,
                        family.display(s.smaller.0, s.smaller.1)
                    )?;
                }
                writeln!(out, "base {}: {}", family.display(rec.base.0, rec.base.1), rec.base.2)?;
                writeln!(
                    out,
                    "recursive H² = {}, direct H² = {}  {}",
                    rec.total,
                    rec.direct_total,
                    if rec.agrees { "agree" } else { "DISAGREE" }
                )?;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_INVARIANT })
}

fn cmd_extension_check(g: &GlobalOpts, a: &AlgebraArgs, out: &mut dyn Write) -> Result<i32> {
    let (family, m, n) = resolve(a)?;
    let (alg, _) = build(family, m, n, &osp_options(g))?;
    let rep = extension_scan(&alg, g.allow_large)?;
    match g.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rep)?)?,
        Format::Text => {
            writeln!(out, "{}  dim {}  even 2-cochains {}", family.display(m, n), rep.dim, rep.even_cochains)?;
            writeln!(out, "cocycles: {} of {} extensions satisfy Jacobi", rep.cocycles_jacobi, rep.cocycles)?;
            writeln!(out, "non-cocycles: {} of {} extensions satisfy Jacobi", rep.non_cocycles_jacobi, rep.non_cocycles)?;
            writeln!(out, "{}", if rep.holds() { "Jacobi ⇔ cocycle: holds" } else { "Jacobi ⇔ cocycle: FAILS" })?;
        }
    }
    Ok(if rep.holds() { EXIT_OK } else { EXIT_INVARIANT })
}

fn cmd_dump_algebra(g: &GlobalOpts, a: &AlgebraArgs, out: &mut dyn Write) -> Result<i32> {
    let (family, m, n) = resolve(a)?;
    let (alg, ideal) = build(family, m, n, &osp_options(g))?;
    alg.check_structure()?;
    if let Some(i) = &ideal {
        i.check(&alg)?;
    }
    let cat = alg.to_catalog(ideal.as_ref());
    match g.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&cat)?)?,
        Format::Text => {
            writeln!(out, "{}  dim {} ({} even, {} odd){}", family.display(m, n), alg.dim(), alg.even_dim(), alg.odd_dim(), if cat.abelian { "  abelian" } else { "" })?;
            for v in &cat.basis {
                let mark = if cat.ideal.as_ref().map(|i| i.contains(&v.id)).unwrap_or(false) { " *" } else { "" };
                writeln!(out, "  {:>3} {:<14} {:?}  {}{mark}", v.id, v.label, v.parity, v.weight_label)?;
            }
            for b in &cat.brackets {
                let terms: Vec<String> = b.terms.iter().map(|(i, c)| format!("{c}·{}", alg.label(*i))).collect();
                writeln!(out, "  [{}, {}] = {}", alg.label(b.i), alg.label(b.j), terms.join(" + "))?;
            }
            if cat.ideal.is_some() {
                writeln!(out, "  (* marks the distinguished ideal)")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("supercohom").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = match run(&cli, &mut out, &mut err) {
            Ok(c) => c,
            Err(e) => e.exit_code(),
        };
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json(args: &[&str]) -> serde_json::Value {
        let mut all = vec!["--format", "json"];
        all.extend(args);
        let (code, out, _) = call(&all);
        assert_eq!(code, EXIT_OK, "{args:?}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn compute_gl22_text() {
        let (code, out, _) = call(&["compute", "--family", "gl", "--m", "2", "--n", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("total 8"), "{out}");
    }

    #[test]
    fn compute_json_has_blocks_per_degree() {
        let v = json(&["compute", "--family", "q", "--n", "3", "--degree", "0,1,2"]);
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr[1]["total"], 4);
        assert_eq!(arr[2]["degree"], 2);
        assert!(arr[2]["blocks"].as_array().is_some_and(|b| !b.is_empty()));
    }

    #[test]
    fn exceptional_needs_name_and_takes_no_params() {
        assert_eq!(call(&["compute", "--family", "exc"]).0, EXIT_BAD_INPUT);
        let v = json(&["compute", "--family", "exc", "--name", "F4"]);
        assert_eq!(v[0]["total"], 62);
    }

    #[test]
    fn bad_input_exits_two() {
        assert_eq!(call(&["compute", "--family", "nope", "--m", "1", "--n", "1"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["compute", "--family", "gl", "--m", "1", "--n", "3"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["compute", "--family", "gl", "--m", "2"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["compute", "--family", "gl", "--m", "5", "--n", "5", "--degree", "6"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["compute", "--family", "gl", "--m", "2", "--n", "2", "--coefficients", "weird"]).0, EXIT_BAD_INPUT);
    }

    #[test]
    fn routes_agree_in_degree_one() {
        let base = ["compute", "--family", "osp-odd", "--m", "2", "--n", "1", "--degree", "1", "--route"];
        let totals: Vec<serde_json::Value> = ["koszul", "quotient", "superderivation"]
            .iter()
            .map(|r| {
                let mut a = base.to_vec();
                a.push(r);
                json(&a)[0]["blocks"].clone()
            })
            .collect();
        assert_eq!(totals[0], totals[1]);
        assert_eq!(totals[0], totals[2]);
    }

    #[test]
    fn check_flag_runs_invariants() {
        let (code, _, _) = call(&["compute", "--family", "gl", "--m", "3", "--n", "2", "--degree", "2", "--check"]);
        assert_eq!(code, EXIT_OK);
        let (code, _, _) =
            call(&["compute", "--family", "gl", "--m", "3", "--n", "2", "--coefficients", "lambda-s-2", "--degree", "1", "--check"]);
        assert_eq!(code, EXIT_OK);
    }

    #[test]
    fn spectral_reports_collapse_and_recursion() {
        let v = json(&["spectral", "--family", "gl", "--m", "3", "--n", "3", "--K", "2", "--recursive"]);
        assert_eq!(v["collapse"]["schema"], "supercohom.collapse/1");
        assert_eq!(v["collapse"]["rows"][2]["split"], serde_json::json!([8, 12, 8]));
        assert!(v["recursion"].is_object());
    }

    #[test]
    fn extension_check_schema() {
        let v = json(&["extension-check", "--family", "q", "--n", "3"]);
        assert_eq!(v["schema"], "supercohom.extension/1");
        assert_eq!(v["cocycles"], v["cocycles_jacobi"]);
        assert_eq!(v["non_cocycles_jacobi"], 0);
    }

    #[test]
    fn dump_algebra_lists_basis() {
        let v = json(&["dump-algebra", "--family", "gl", "--m", "2", "--n", "2"]);
        assert_eq!(v["basis"].as_array().unwrap().len(), 4);
        assert!(v["ideal"].is_array());
    }

    #[test]
    fn verify_tables_single_row() {
        let (code, out, _) = call(&["verify-tables", "--row", "h1-gl-nn"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("h1-gl-nn"));
    }

    #[test]
    fn cache_dir_is_filled_and_reused() {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let a = call(&["--cache-dir", d, "--format", "json", "compute", "--family", "gl", "--m", "3", "--n", "2"]);
        assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
        let b = call(&["--cache-dir", d, "--format", "json", "compute", "--family", "gl", "--m", "3", "--n", "2"]);
        assert_eq!(a, b);
    }
}
