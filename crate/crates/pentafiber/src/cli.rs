//! Command-line front end and scenario files.
//!
//! Subcommands: `bounds` (dichotomy + sharpened bounds), `mvt` (inequality
//! scan for an ad-hoc profile), `case` (build and verify a classification
//! case), `enumerate` (full per-genus certificate tables) and `report`
//! (execute a scenario file). Every command renders to markdown or JSON;
//! rationals always print as `p/q`, never as decimals.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerator::{
    certify_max_genus, del_pezzo_case_constraints, feasible_genus_k2, DelPezzoReport,
    DichotomyTable, GenusRow, K2Family, MaxGenusReport,
};
use crate::invariants::{BoundCertificate, FibrationConfig, MvtScan};
use crate::pencils::{build_case, CaseBundle, CaseId, CaseModel};
use crate::rat::to_pq;
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "pentafiber",
    version,
    about = "Exact certificates for semistable fibrations with five singular fibers"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Md,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the (g, K^2) feasibility table and the per-family genus caps.
    Bounds {
        /// Restrict to one family: `2-3g` or `3-3g`.
        #[arg(long)]
        family: Option<String>,
        /// Print the full certificate chain refuting this genus.
        #[arg(long, allow_negative_numbers = true)]
        show_refutation: Option<i64>,
        /// Run the acceptance suite; exit 0 only if every check passes.
        #[arg(long)]
        self_test: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan the MVT inequality family for one fibration profile.
    Mvt {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        k2: i64,
        /// Base curve genus.
        #[arg(long, default_value_t = 0)]
        gb: i64,
        /// Number of singular fibers.
        #[arg(long, default_value_t = 5)]
        s: i64,
        /// Chain lengths, comma separated (e.g. `6` or `2,1,1`).
        #[arg(long, value_delimiter = ',')]
        chains: Vec<i64>,
        #[arg(long, default_value_t = 1000)]
        e_max: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify one classification case.
    Case {
        /// One of: trigonal, plane-quintic, quadric-cone, plane-sextic,
        /// smooth-quadric.
        #[arg(long)]
        id: String,
        #[arg(long)]
        g: Option<i64>,
        /// Maroni invariant (trigonal case only).
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the full per-genus certificate tables.
    Enumerate {
        /// Restrict to one family: `2-3g` or `3-3g`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Md)]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Execute a scenario file.
    Report {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses the process arguments, executes, and returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let (text, exit, out) = match execute(&cli.command) {
        Ok((text, exit, out)) => (text, exit, out),
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    match out {
        Some(path) => {
            if let Err(err) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    exit
}

fn parse_family(s: &str) -> Result<K2Family> {
    K2Family::from_slug(s)
        .ok_or_else(|| Error::Domain(format!("unknown family `{s}` (expected `2-3g` or `3-3g`)")))
}

fn execute(command: &Command) -> Result<(String, i32, Option<PathBuf>)> {
    match command {
        Command::Bounds {
            family,
            show_refutation,
            self_test,
            format,
            out,
        } => {
            if *self_test {
                let (text, pass) = run_self_test();
                return Ok((text, if pass { 0 } else { 1 }, out.clone()));
            }
            let family = family.as_deref().map(parse_family).transpose()?;
            let report = bounds_report(family, *show_refutation)?;
            let text = match format {
                OutputFormat::Json => to_json(&report)?,
                OutputFormat::Md => render_bounds_md(&report),
            };
            Ok((text, 0, out.clone()))
        }
        Command::Mvt {
            g,
            k2,
            gb,
            s,
            chains,
            e_max,
            format,
            out,
        } => {
            let config = FibrationConfig::new(*g, *gb, *s, *k2, chains.clone())?;
            let scan = config.mvt_scan(*e_max)?;
            let text = match format {
                OutputFormat::Json => to_json(&scan)?,
                OutputFormat::Md => render_mvt_scan_md(&config, &scan),
            };
            Ok((text, if scan.all_hold { 0 } else { 1 }, out.clone()))
        }
        Command::Case {
            id,
            g,
            n,
            format,
            out,
        } => {
            let model = resolve_case(id, *g, *n)?;
            let bundle = model.bundle()?;
            let text = match format {
                OutputFormat::Json => to_json(&bundle)?,
                OutputFormat::Md => render_case_md(&bundle),
            };
            Ok((text, if bundle.pass { 0 } else { 1 }, out.clone()))
        }
        Command::Enumerate {
            family,
            format,
            out,
        } => {
            let family = family.as_deref().map(parse_family).transpose()?;
            let reports: Vec<MaxGenusReport> = match family {
                Some(f) => vec![certify_max_genus(f)],
                None => vec![
                    certify_max_genus(K2Family::TwoMinus3g),
                    certify_max_genus(K2Family::ThreeMinus3g),
                ],
            };
            let text = match format {
                OutputFormat::Json => to_json(&reports)?,
                OutputFormat::Md => reports
                    .iter()
                    .map(render_max_genus_md)
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok((text, 0, out.clone()))
        }
        Command::Report { scenario, out } => {
            let text = std::fs::read_to_string(scenario)?;
            let file = ScenarioFile::parse(&text)?;
            Ok((file.run()?, 0, out.clone()))
        }
    }
}

/// Builds a case from CLI-level parameters, defaulting the genus for the
/// fixed-genus cases.
pub fn resolve_case(id: &str, g: Option<i64>, n: Option<i64>) -> Result<CaseModel> {
    let id = CaseId::from_slug(id)
        .ok_or_else(|| Error::CaseParams(format!("unknown case id `{id}`")))?;
    let g = g
        .or(id.fixed_genus())
        .ok_or_else(|| Error::CaseParams(format!("case `{}` needs --g", id.slug())))?;
    build_case(id, g, n)
}

fn run_self_test() -> (String, bool) {
    let results = crate::selftest::run_all();
    let mut text = String::new();
    let mut pass = true;
    for c in &results {
        pass &= c.pass;
        text.push_str(&format!(
            "[{}] {}: {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    text.push_str(&format!(
        "{} of {} acceptance criteria hold\n",
        results.iter().filter(|c| c.pass).count(),
        results.len()
    ));
    (text, pass)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Combined payload of the `bounds` subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub dichotomy: DichotomyTable,
    pub sharpened: Vec<FamilySummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub refutation: Option<GenusRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilySummary {
    pub family: K2Family,
    pub max_genus: Option<i64>,
    pub feasible_g: Vec<i64>,
}

fn bounds_report(family: Option<K2Family>, show_refutation: Option<i64>) -> Result<BoundsReport> {
    let mut dichotomy = feasible_genus_k2(5)?;
    let families: Vec<K2Family> = match family {
        Some(f) => {
            dichotomy.rows.retain(|r| r.family == f);
            vec![f]
        }
        None => vec![K2Family::TwoMinus3g, K2Family::ThreeMinus3g],
    };
    let mut sharpened = Vec::new();
    let mut refutation = None;
    for f in &families {
        let report = certify_max_genus(*f);
        if let Some(g) = show_refutation {
            if refutation.is_none() {
                refutation = report.row(g).cloned();
                if refutation.is_none() {
                    return Err(Error::Domain(format!(
                        "no genus {g} row in the {} table (range 4..=17)",
                        f.slug()
                    )));
                }
            }
        }
        sharpened.push(FamilySummary {
            family: *f,
            max_genus: report.max_genus,
            feasible_g: report
                .rows
                .iter()
                .filter(|r| r.feasible)
                .map(|r| r.g)
                .collect(),
        });
    }
    Ok(BoundsReport {
        dichotomy,
        sharpened,
        refutation,
    })
}

// ---------------------------------------------------------------------------
// Markdown rendering
// ---------------------------------------------------------------------------

pub fn render_certificate_md(cert: &BoundCertificate) -> String {
    let verdict = if cert.verdict { "holds" } else { "FAILS" };
    let substitution = cert
        .substitution
        .iter()
        .map(|(k, v)| format!("{k} = {}", to_pq(v)))
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        "- `{}`: lhs = {}, rhs = {}, slack = {} ({verdict})\n  with {substitution}\n",
        cert.name,
        to_pq(&cert.lhs),
        to_pq(&cert.rhs),
        to_pq(&cert.slack),
    )
}

pub fn render_dichotomy_md(table: &DichotomyTable) -> String {
    let mut text = String::from("## (g, K^2) dichotomy\n\n");
    text.push_str(&format!("_{}_\n\n", table.scope));
    text.push_str("| g | K^2 | family | verdict | reduced-MVT slack |\n");
    text.push_str("|---|-----|--------|---------|-------------------|\n");
    for row in &table.rows {
        let slack = row
            .certificates
            .iter()
            .find(|c| c.name == "mvt5-reduced")
            .map(|c| to_pq(&c.slack))
            .unwrap_or_default();
        text.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            row.g,
            row.k2,
            row.family.slug(),
            if row.feasible {
                "feasible"
            } else {
                "infeasible"
            },
            slack
        ));
    }
    text
}

pub fn render_bounds_md(report: &BoundsReport) -> String {
    let mut text = render_dichotomy_md(&report.dichotomy);
    text.push_str("\n## Sharpened genus caps\n\n");
    for summary in &report.sharpened {
        text.push_str(&format!(
            "- K^2 = {}: max genus {}, feasible g = {:?}\n",
            summary.family.slug(),
            summary
                .max_genus
                .map(|g| g.to_string())
                .unwrap_or_else(|| "none".into()),
            summary.feasible_g
        ));
    }
    if let Some(row) = &report.refutation {
        text.push_str(&format!("\n## Refutation of g = {}\n\n", row.g));
        text.push_str(&render_row_md(row));
    }
    text
}

fn render_row_md(row: &GenusRow) -> String {
    let mut text = String::new();
    for route in &row.routes {
        text.push_str(&format!(
            "### route: {:?} ({})\n\n",
            route.kind,
            if route.feasible {
                "feasible"
            } else {
                "infeasible"
            }
        ));
        if let Some(w) = &route.witness {
            text.push_str(&format!(
                "witness: chains = {:?}, l2 = {:?}, l3 = {:?}, l4 = {:?}\n\n",
                w.chains, w.l2, w.l3, w.l4
            ));
        }
        for cert in &route.certificates {
            text.push_str(&render_certificate_md(cert));
        }
        if let Some(note) = &route.note {
            text.push_str(&format!("\nnote: {note}\n"));
        }
        text.push('\n');
    }
    text
}

pub fn render_max_genus_md(report: &MaxGenusReport) -> String {
    let mut text = format!(
        "## K^2 = {}: certified max genus {}\n\n_{}_\n\n",
        report.family.slug(),
        report
            .max_genus
            .map(|g| g.to_string())
            .unwrap_or_else(|| "none".into()),
        report.scope
    );
    text.push_str("| g | K^2 | verdict | witness / first failure |\n");
    text.push_str("|---|-----|---------|--------------------------|\n");
    for row in &report.rows {
        let summary = if row.feasible {
            row.routes
                .iter()
                .find_map(|r| r.witness.as_ref())
                .map(|w| format!("chains {:?}, l2 {:?}, l3 {:?}", w.chains, w.l2, w.l3))
                .unwrap_or_default()
        } else {
            row.routes
                .first()
                .and_then(|r| r.certificates.iter().find(|c| !c.verdict))
                .map(|c| format!("{} (slack {})", c.name, to_pq(&c.slack)))
                .unwrap_or_default()
        };
        text.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            row.g,
            row.k2,
            if row.feasible {
                "feasible"
            } else {
                "infeasible"
            },
            summary
        ));
    }
    for row in &report.rows {
        if let Some(note) = &row.note {
            text.push_str(&format!("\nnote (g = {}): {note}\n", row.g));
        }
    }
    text
}

pub fn render_mvt_scan_md(config: &FibrationConfig, scan: &MvtScan) -> String {
    let mut text = format!(
        "## MVT scan: g = {}, K^2 = {}, g_B = {}, s = {}, chains = {:?}\n\n",
        config.g(),
        config.k2(),
        config.base_genus(),
        config.singular_fibers(),
        config.chains()
    );
    text.push_str(&format!(
        "e_f = {}, r_f = {}\n\n",
        config.fiber_nodes(),
        to_pq(&config.weighted_nodes())
    ));
    text.push_str("| e | lhs | 3 r_f | slack | verdict |\n");
    text.push_str("|---|-----|-------|-------|---------|\n");
    for cert in &scan.certificates {
        text.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            to_pq(&cert.substitution["e"]),
            to_pq(&cert.lhs),
            to_pq(&cert.rhs),
            to_pq(&cert.slack),
            if cert.verdict { "holds" } else { "FAILS" }
        ));
    }
    text.push_str(&format!(
        "\nbinding e = {} (smallest slack); {}\n",
        scan.binding_e,
        match scan.first_failure {
            Some(e) => format!("first failure at e = {e}"),
            None => "all weights hold".into(),
        }
    ));
    text
}

pub fn render_case_md(bundle: &CaseBundle) -> String {
    let mut text = format!(
        "## case {} (g = {}{})\n\n",
        bundle.case_id.slug(),
        bundle.g,
        bundle.n.map(|n| format!(", n = {n}")).unwrap_or_default()
    );
    text.push_str(&format!(
        "ambient {}, pencil {}, {} blowups\n\n",
        bundle.ambient.base(),
        bundle.ambient.format_class(
            &bundle
                .ambient
                .class(bundle.pencil_coefficients.clone())
                .expect("bundle coefficients match the ambient")
        ),
        bundle.schedule.len()
    ));
    text.push_str("| check | expected | actual | verdict |\n");
    text.push_str("|-------|----------|--------|---------|\n");
    for check in &bundle.certificates {
        text.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            check.name,
            check.expected,
            check.actual,
            if check.pass { "pass" } else { "FAIL" }
        ));
    }
    for note in &bundle.notes {
        text.push_str(&format!("\nnote: {note}\n"));
    }
    text.push_str(&format!(
        "\noverall: {}\n",
        if bundle.pass { "PASS" } else { "FAIL" }
    ));
    text
}

pub fn render_del_pezzo_md(report: &DelPezzoReport) -> String {
    let mut text = format!(
        "## del Pezzo constraints at g = {} (K^2 = {})\n\n",
        report.g, report.k2
    );
    match report.m {
        None => text.push_str("no constraint derived\n"),
        Some(m) => {
            text.push_str(&format!("crossing pencil with F.G = {m}\n\n"));
            for bound in &report.bounds {
                let degrees = bound
                    .degrees
                    .iter()
                    .map(|d| format!("l{d}"))
                    .collect::<Vec<_>>()
                    .join(" + ");
                text.push_str(&format!("- {degrees} >= {}\n", bound.min_total));
            }
            for d in &report.forced_zero {
                text.push_str(&format!("- l{d} = 0\n"));
            }
            if report.not_general_position {
                text.push_str("- base points are not in general position\n");
            }
        }
    }
    if let Some(note) = &report.note {
        text.push_str(&format!("\nnote: {note}\n"));
    }
    text
}

// ---------------------------------------------------------------------------
// Scenario files
// ---------------------------------------------------------------------------

/// A declarative batch of requests: `[mvt]`, `[case]`, `[bounds]`,
/// `[enumerate]` sections with `key = value` lines, plus an `[output]`
/// section. Unknown sections and keys are rejected; parsing the canonical
/// rendering reproduces the same file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioFile {
    pub requests: Vec<ScenarioRequest>,
    pub format: ScenarioFormat,
}

type RawSection = (usize, String, BTreeMap<String, (usize, String)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScenarioFormat {
    Md,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScenarioRequest {
    Mvt {
        g: i64,
        k2: i64,
        gb: i64,
        s: i64,
        chains: Vec<i64>,
        e_max: i64,
    },
    Case {
        id: CaseId,
        g: Option<i64>,
        n: Option<i64>,
    },
    Bounds {
        family: Option<K2Family>,
    },
    Enumerate {
        family: Option<K2Family>,
    },
    DelPezzo {
        g: i64,
    },
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut requests = Vec::new();
        let mut format = ScenarioFormat::Md;
        let mut section: Option<RawSection> = None;

        let close = |section: Option<RawSection>,
                     requests: &mut Vec<ScenarioRequest>,
                     format: &mut ScenarioFormat|
         -> Result<()> {
            let Some((line, name, entries)) = section else {
                return Ok(());
            };
            match name.as_str() {
                "mvt" => requests.push(finalize_mvt(line, entries)?),
                "case" => requests.push(finalize_case(line, entries)?),
                "bounds" => requests.push(ScenarioRequest::Bounds {
                    family: finalize_family(entries)?,
                }),
                "enumerate" => requests.push(ScenarioRequest::Enumerate {
                    family: finalize_family(entries)?,
                }),
                "delpezzo" => requests.push(finalize_del_pezzo(line, entries)?),
                "output" => *format = finalize_output(entries)?,
                other => {
                    return Err(Error::Scenario {
                        line,
                        msg: format!("unknown section `[{other}]`"),
                    })
                }
            }
            Ok(())
        };

        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                close(section.take(), &mut requests, &mut format)?;
                section = Some((line_no, name.trim().to_string(), BTreeMap::new()));
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Scenario {
                    line: line_no,
                    msg: format!("expected `key = value`, got `{line}`"),
                });
            };
            let Some((_, _, entries)) = section.as_mut() else {
                return Err(Error::Scenario {
                    line: line_no,
                    msg: "entry outside any section".into(),
                });
            };
            let key = key.trim().to_string();
            if entries
                .insert(key.clone(), (line_no, value.trim().to_string()))
                .is_some()
            {
                return Err(Error::Scenario {
                    line: line_no,
                    msg: format!("duplicate key `{key}`"),
                });
            }
        }
        close(section.take(), &mut requests, &mut format)?;
        Ok(ScenarioFile { requests, format })
    }

    /// Canonical text form; `parse(render(x)) == x`.
    pub fn render(&self) -> String {
        let mut text = String::new();
        for request in &self.requests {
            match request {
                ScenarioRequest::Mvt {
                    g,
                    k2,
                    gb,
                    s,
                    chains,
                    e_max,
                } => {
                    text.push_str("[mvt]\n");
                    text.push_str(&format!("g = {g}\nk2 = {k2}\ngb = {gb}\ns = {s}\n"));
                    if !chains.is_empty() {
                        let list = chains
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(",");
                        text.push_str(&format!("chains = {list}\n"));
                    }
                    text.push_str(&format!("e-max = {e_max}\n\n"));
                }
                ScenarioRequest::Case { id, g, n } => {
                    text.push_str("[case]\n");
                    text.push_str(&format!("id = {}\n", id.slug()));
                    if let Some(g) = g {
                        text.push_str(&format!("g = {g}\n"));
                    }
                    if let Some(n) = n {
                        text.push_str(&format!("n = {n}\n"));
                    }
                    text.push('\n');
                }
                ScenarioRequest::Bounds { family } => {
                    text.push_str("[bounds]\n");
                    if let Some(f) = family {
                        text.push_str(&format!("family = {}\n", f.slug()));
                    }
                    text.push('\n');
                }
                ScenarioRequest::Enumerate { family } => {
                    text.push_str("[enumerate]\n");
                    if let Some(f) = family {
                        text.push_str(&format!("family = {}\n", f.slug()));
                    }
                    text.push('\n');
                }
                ScenarioRequest::DelPezzo { g } => {
                    text.push_str(&format!("[delpezzo]\ng = {g}\n\n"));
                }
            }
        }
        text.push_str(&format!(
            "[output]\nformat = {}\n",
            match self.format {
                ScenarioFormat::Md => "md",
                ScenarioFormat::Json => "json",
            }
        ));
        text
    }

    /// Executes every request and concatenates the rendered results.
    pub fn run(&self) -> Result<String> {
        match self.format {
            ScenarioFormat::Md => {
                let mut parts = Vec::new();
                for request in &self.requests {
                    parts.push(request.run_md()?);
                }
                Ok(parts.join("\n"))
            }
            ScenarioFormat::Json => {
                let mut values = Vec::new();
                for request in &self.requests {
                    values.push(request.run_json()?);
                }
                to_json(&values)
            }
        }
    }
}

impl ScenarioRequest {
    fn run_md(&self) -> Result<String> {
        match self {
            ScenarioRequest::Mvt {
                g,
                k2,
                gb,
                s,
                chains,
                e_max,
            } => {
                let config = FibrationConfig::new(*g, *gb, *s, *k2, chains.clone())?;
                let scan = config.mvt_scan(*e_max)?;
                Ok(render_mvt_scan_md(&config, &scan))
            }
            ScenarioRequest::Case { id, g, n } => {
                let model = resolve_case(id.slug(), *g, *n)?;
                Ok(render_case_md(&model.bundle()?))
            }
            ScenarioRequest::Bounds { family } => {
                Ok(render_bounds_md(&bounds_report(*family, None)?))
            }
            ScenarioRequest::Enumerate { family } => {
                let reports = match family {
                    Some(f) => vec![certify_max_genus(*f)],
                    None => vec![
                        certify_max_genus(K2Family::TwoMinus3g),
                        certify_max_genus(K2Family::ThreeMinus3g),
                    ],
                };
                Ok(reports
                    .iter()
                    .map(render_max_genus_md)
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
            ScenarioRequest::DelPezzo { g } => {
                Ok(render_del_pezzo_md(&del_pezzo_case_constraints(*g)?))
            }
        }
    }

    fn run_json(&self) -> Result<serde_json::Value> {
        let value = match self {
            ScenarioRequest::Mvt {
                g,
                k2,
                gb,
                s,
                chains,
                e_max,
            } => {
                let config = FibrationConfig::new(*g, *gb, *s, *k2, chains.clone())?;
                serde_json::to_value(config.mvt_scan(*e_max)?)?
            }
            ScenarioRequest::Case { id, g, n } => {
                serde_json::to_value(resolve_case(id.slug(), *g, *n)?.bundle()?)?
            }
            ScenarioRequest::Bounds { family } => {
                serde_json::to_value(bounds_report(*family, None)?)?
            }
            ScenarioRequest::Enumerate { family } => match family {
                Some(f) => serde_json::to_value(certify_max_genus(*f))?,
                None => serde_json::to_value(vec![
                    certify_max_genus(K2Family::TwoMinus3g),
                    certify_max_genus(K2Family::ThreeMinus3g),
                ])?,
            },
            ScenarioRequest::DelPezzo { g } => {
                serde_json::to_value(del_pezzo_case_constraints(*g)?)?
            }
        };
        Ok(value)
    }
}

type Entries = BTreeMap<String, (usize, String)>;

fn take_i64(entries: &mut Entries, key: &str) -> Result<Option<i64>> {
    match entries.remove(key) {
        None => Ok(None),
        Some((line, value)) => value.parse().map(Some).map_err(|_| Error::Scenario {
            line,
            msg: format!("`{key}` must be an integer, got `{value}`"),
        }),
    }
}

fn reject_unknown(section: &str, entries: Entries) -> Result<()> {
    if let Some((key, (line, _))) = entries.into_iter().next() {
        return Err(Error::Scenario {
            line,
            msg: format!("unknown key `{key}` in [{section}]"),
        });
    }
    Ok(())
}

fn finalize_mvt(line: usize, mut entries: Entries) -> Result<ScenarioRequest> {
    let g = take_i64(&mut entries, "g")?.ok_or(Error::Scenario {
        line,
        msg: "[mvt] needs `g`".into(),
    })?;
    let k2 = take_i64(&mut entries, "k2")?.ok_or(Error::Scenario {
        line,
        msg: "[mvt] needs `k2`".into(),
    })?;
    let gb = take_i64(&mut entries, "gb")?.unwrap_or(0);
    let s = take_i64(&mut entries, "s")?.unwrap_or(5);
    let e_max = take_i64(&mut entries, "e-max")?.unwrap_or(1000);
    let chains = match entries.remove("chains") {
        None => Vec::new(),
        Some((chain_line, value)) => value
            .split(',')
            .map(|part| {
                part.trim().parse().map_err(|_| Error::Scenario {
                    line: chain_line,
                    msg: format!("bad chain length `{part}`"),
                })
            })
            .collect::<Result<Vec<i64>>>()?,
    };
    reject_unknown("mvt", entries)?;
    Ok(ScenarioRequest::Mvt {
        g,
        k2,
        gb,
        s,
        chains,
        e_max,
    })
}

fn finalize_case(line: usize, mut entries: Entries) -> Result<ScenarioRequest> {
    let id = match entries.remove("id") {
        Some((id_line, value)) => CaseId::from_slug(&value).ok_or(Error::Scenario {
            line: id_line,
            msg: format!("unknown case id `{value}`"),
        })?,
        None => {
            return Err(Error::Scenario {
                line,
                msg: "[case] needs `id`".into(),
            })
        }
    };
    let g = take_i64(&mut entries, "g")?;
    let n = take_i64(&mut entries, "n")?;
    reject_unknown("case", entries)?;
    Ok(ScenarioRequest::Case { id, g, n })
}

fn finalize_family(mut entries: Entries) -> Result<Option<K2Family>> {
    let family = match entries.remove("family") {
        None => None,
        Some((line, value)) => Some(K2Family::from_slug(&value).ok_or(Error::Scenario {
            line,
            msg: format!("unknown family `{value}`"),
        })?),
    };
    reject_unknown("bounds/enumerate", entries)?;
    Ok(family)
}

fn finalize_del_pezzo(line: usize, mut entries: Entries) -> Result<ScenarioRequest> {
    let g = take_i64(&mut entries, "g")?.ok_or(Error::Scenario {
        line,
        msg: "[delpezzo] needs `g`".into(),
    })?;
    reject_unknown("delpezzo", entries)?;
    Ok(ScenarioRequest::DelPezzo { g })
}

fn finalize_output(mut entries: Entries) -> Result<ScenarioFormat> {
    let format = match entries.remove("format") {
        None => ScenarioFormat::Md,
        Some((line, value)) => match value.as_str() {
            "md" => ScenarioFormat::Md,
            "json" => ScenarioFormat::Json,
            other => {
                return Err(Error::Scenario {
                    line,
                    msg: format!("unknown format `{other}` (expected md or json)"),
                })
            }
        },
    };
    reject_unknown("output", entries)?;
    Ok(format)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# genus-12 refutation plus a case check
[mvt]
g = 12
k2 = -34
chains = 6
e-max = 10

[case]
id = trigonal
g = 11
n = 3

[output]
format = md
";

    #[test]
    fn scenario_parses_and_round_trips() {
        let parsed = ScenarioFile::parse(SAMPLE).unwrap();
        assert_eq!(parsed.requests.len(), 2);
        assert_eq!(
            parsed.requests[0],
            ScenarioRequest::Mvt {
                g: 12,
                k2: -34,
                gb: 0,
                s: 5,
                chains: vec![6],
                e_max: 10
            }
        );
        let rendered = parsed.render();
        let reparsed = ScenarioFile::parse(&rendered).unwrap();
        assert_eq!(reparsed, parsed);
        assert_eq!(ScenarioFile::parse(&reparsed.render()).unwrap(), reparsed);
    }

    #[test]
    fn scenario_rejects_unknown_keys_and_sections() {
        let err = ScenarioFile::parse("[mvt]\ng = 4\nk2 = -10\nbogus = 1\n").unwrap_err();
        assert!(matches!(err, Error::Scenario { .. }), "{err}");
        let err = ScenarioFile::parse("[wat]\n").unwrap_err();
        assert!(err.to_string().contains("unknown section"));
        let err = ScenarioFile::parse("g = 4\n").unwrap_err();
        assert!(err.to_string().contains("outside any section"));
        let err = ScenarioFile::parse("[mvt]\ng = 4\ng = 5\nk2 = -10\n").unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn scenario_requires_mandatory_keys() {
        assert!(ScenarioFile::parse("[mvt]\ng = 4\n").is_err());
        assert!(ScenarioFile::parse("[case]\ng = 6\n").is_err());
    }

    #[test]
    fn scenario_del_pezzo_section() {
        let parsed = ScenarioFile::parse("[delpezzo]\ng = 9\n").unwrap();
        assert_eq!(parsed.requests, vec![ScenarioRequest::DelPezzo { g: 9 }]);
        let output = parsed.run().unwrap();
        assert!(output.contains("l4 >= 8"), "{output}");
        assert!(ScenarioFile::parse("[delpezzo]\n").is_err());
    }

    #[test]
    fn scenario_runs_the_refutation() {
        let parsed = ScenarioFile::parse(SAMPLE).unwrap();
        let output = parsed.run().unwrap();
        assert!(output.contains("first failure at e = 5"), "{output}");
        assert!(output.contains("582/7"), "{output}");
        assert!(output.contains("overall: PASS"), "{output}");
    }

    #[test]
    fn resolve_case_defaults_fixed_genus() {
        let model = resolve_case("plane-quintic", None, None).unwrap();
        assert_eq!(model.g, 6);
        assert!(resolve_case("trigonal", None, Some(1)).is_err());
        assert!(resolve_case("nope", None, None).is_err());
    }

    #[test]
    fn bounds_report_filters_and_refutes() {
        let report = bounds_report(Some(K2Family::TwoMinus3g), Some(12)).unwrap();
        assert_eq!(report.dichotomy.rows.len(), 14);
        assert_eq!(report.sharpened.len(), 1);
        assert_eq!(report.sharpened[0].max_genus, Some(11));
        let row = report.refutation.unwrap();
        assert!(!row.feasible);
        assert!(bounds_report(None, Some(40)).is_err());
    }

    #[test]
    fn markdown_renderers_do_not_use_decimals() {
        let config = FibrationConfig::rational_five(12, -34, vec![6]).unwrap();
        let scan = config.mvt_scan(6).unwrap();
        let text = render_mvt_scan_md(&config, &scan);
        assert!(text.contains("582/7"));
        assert!(!text.contains("83.1"));
    }
}
