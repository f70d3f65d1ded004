use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use diring::analysis::{analyze, analyze_module, RadicalJson, SCHEMA_VERSION};
use diring::census::{
    enumerate_left_dirings, enumerate_modules, parse_group_spec, CensusOptions, DiringRecord,
};
use diring::format::{load_file, serialize_diring, serialize_module, LoadError, Loaded};
use diring::group::{groups_of_order, FiniteAbelianGroup};
use diring::ideal::IdealKind;
use diring::iso::diring_homs;
use diring::left_module::{hom_group, regular_module, LeftModuleTable};
use diring::props::{diring_suites, module_suites, PropsReport};
use diring::radical::rad3;
use diring::{DiringTable, Error, SubsetMask};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "diring",
    version,
    about = "Finite one-sided dirings and their left modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every structure in a file.
    Verify { file: PathBuf },
    /// Halos, ideals, radical and proposition checks.
    Analyze {
        file: PathBuf,
        /// Also write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The 3-radical by both formulas.
    Radical {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Quotient by a two-sided ideal, written in the structure file format.
    Quotient {
        file: PathBuf,
        /// Labels of the ideal's elements.
        #[arg(long, num_args = 1.., required = true)]
        ideal: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All left dirings on a group, up to isomorphism.
    Census {
        /// `Z4`, `Z2xZ2`, `order:N`, `upto:N`, or a structure file whose additive group is used.
        #[arg(long)]
        group: String,
        #[arg(long, env = "DIRING_JOBS")]
        jobs: Option<usize>,
        /// Lift the order cap.
        #[arg(long)]
        force: bool,
    },
    /// All left modules of order up to K over each diring in a file.
    Modules {
        file: PathBuf,
        #[arg(long)]
        max_order: usize,
        #[arg(long, env = "DIRING_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// Homomorphisms between the first dirings (or modules) of two files.
    Hom {
        file1: PathBuf,
        file2: PathBuf,
        /// Only isomorphisms.
        #[arg(long)]
        iso: bool,
    },
    /// Run all proposition suites on a file or a census spec.
    Props {
        target: String,
        #[arg(long, env = "DIRING_JOBS")]
        jobs: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(EXIT_VIOLATION, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new(EXIT_VIOLATION, e.to_string())
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut Out) -> Result<u8, Failure> {
    match command {
        Command::Verify { file } => verify(&file, out),
        Command::Analyze { file, json } => analyze_cmd(&file, json.as_deref(), out),
        Command::Radical { file, json } => radical_cmd(&file, json, out),
        Command::Quotient {
            file,
            ideal,
            output,
        } => quotient_cmd(&file, &ideal, output.as_deref(), out),
        Command::Census { group, jobs, force } => {
            census_cmd(&group, CensusOptions { jobs, force }, out)
        }
        Command::Modules {
            file,
            max_order,
            jobs,
            force,
        } => modules_cmd(&file, max_order, CensusOptions { jobs, force }, out),
        Command::Hom { file1, file2, iso } => hom_cmd(&file1, &file2, iso, out),
        Command::Props { target, jobs } => {
            props_cmd(&target, CensusOptions { jobs, force: false }, out)
        }
    }
}

/// Load a file; parse problems exit 2, axiom violations exit 1.
fn load(path: &Path, context: &Loaded) -> Result<Loaded, Failure> {
    load_file(path, context).map_err(|e| {
        let code = match e {
            LoadError::Invalid { .. } => EXIT_VIOLATION,
            _ => EXIT_PARSE,
        };
        Failure::new(code, format!("{}: {e}", path.display()))
    })
}

fn first_diring(loaded: &Loaded, path: &Path) -> Result<(String, Arc<DiringTable>), Failure> {
    loaded
        .dirings
        .first()
        .cloned()
        .ok_or_else(|| Failure::new(EXIT_USAGE, format!("{} contains no diring", path.display())))
}

fn verify(path: &Path, out: &mut Out) -> Result<u8, Failure> {
    match load_file(path, &Loaded::default()) {
        Ok(loaded) => {
            for (name, d) in &loaded.dirings {
                let kind = if d.is_diring() {
                    "diring"
                } else {
                    "one-sided diring"
                };
                writeln!(out, "{name}: valid {kind} of order {}", d.order())?;
            }
            for (name, over, m) in &loaded.modules {
                writeln!(
                    out,
                    "{name}: valid module of order {} over {over}",
                    m.order()
                )?;
            }
            Ok(EXIT_OK)
        }
        Err(LoadError::Invalid { name, report }) => {
            writeln!(out, "{name}: invalid")?;
            writeln!(out, "{report}")?;
            Ok(EXIT_VIOLATION)
        }
        Err(e) => Err(Failure::new(EXIT_PARSE, format!("{}: {e}", path.display()))),
    }
}

fn analyze_cmd(path: &Path, json: Option<&Path>, out: &mut Out) -> Result<u8, Failure> {
    let loaded = load(path, &Loaded::default())?;
    let mut dirings = Vec::new();
    for (name, d) in &loaded.dirings {
        dirings.push(analyze(name, d)?);
    }
    let mut modules = Vec::new();
    for (name, over, m) in &loaded.modules {
        modules.push(analyze_module(name, over, m)?);
    }
    let ok = dirings.iter().all(|r| r.propositions_ok);
    match json {
        Some(p) if p == Path::new("-") => {}
        _ => {
            for r in &dirings {
                writeln!(out, "{r}")?;
            }
            for r in &modules {
                writeln!(out, "{r}")?;
            }
        }
    }
    if let Some(p) = json {
        let doc = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "dirings": dirings,
            "modules": modules,
        });
        let text = serde_json::to_string_pretty(&doc)? + "\n";
        if p == Path::new("-") {
            out.write_all(text.as_bytes())?;
        } else {
            std::fs::write(p, text)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
}

fn radical_cmd(path: &Path, json: bool, out: &mut Out) -> Result<u8, Failure> {
    let loaded = load(path, &Loaded::default())?;
    let mut all_agree = true;
    let mut docs = Vec::new();
    for (name, d) in &loaded.dirings {
        let r = rad3(d)?;
        all_agree &= r.agrees;
        let j = RadicalJson::new(d, &r);
        if json {
            docs.push(serde_json::json!({ "name": name, "radical": j }));
        } else {
            writeln!(out, "{name}:")?;
            write!(out, "{j}")?;
        }
    }
    if json {
        let doc = serde_json::json!({ "schema_version": SCHEMA_VERSION, "dirings": docs });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_VIOLATION })
}

fn quotient_cmd(
    path: &Path,
    ideal: &[String],
    output: Option<&Path>,
    out: &mut Out,
) -> Result<u8, Failure> {
    let loaded = load(path, &Loaded::default())?;
    let (name, d) = first_diring(&loaded, path)?;
    let mut mask = SubsetMask::empty(d.order());
    for label in ideal {
        let x = d.group().index_of(label).ok_or_else(|| {
            Failure::new(EXIT_USAGE, format!("`{label}` is not an element of {name}"))
        })?;
        mask.insert(x);
    }
    if !d.is_ideal(&mask, IdealKind::TwoSided) {
        return Err(Failure::new(
            EXIT_VIOLATION,
            format!(
                "{} is not a two-sided ideal of {name}",
                d.group().format_set(&mask)
            ),
        ));
    }
    let q = d.quotient_diring(&mask)?;
    let text = serialize_diring(&format!("{name}_quotient"), &q.diring);
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

/// Groups named by a census spec or taken from a structure file.
fn census_groups(spec: &str) -> Result<Vec<FiniteAbelianGroup>, Failure> {
    let usage = |m: String| Failure::new(EXIT_USAGE, m);
    let number = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| usage(format!("bad order in {spec:?}")))
    };
    if let Some(n) = spec.strip_prefix("order:") {
        return Ok(groups_of_order(number(n)?));
    }
    if let Some(n) = spec.strip_prefix("upto:") {
        return Ok((1..=number(n)?).flat_map(groups_of_order).collect());
    }
    let path = Path::new(spec);
    if path.exists() {
        let loaded = load(path, &Loaded::default())?;
        let (_, d) = first_diring(&loaded, path)?;
        return Ok(vec![d.group().clone()]);
    }
    parse_group_spec(spec)
        .map(|g| vec![g])
        .map_err(|e| usage(e.to_string()))
}

fn census_records(spec: &str, opts: &CensusOptions) -> Result<Vec<DiringRecord>, Failure> {
    let mut all = Vec::new();
    for g in census_groups(spec)? {
        all.extend(enumerate_left_dirings(&g, opts)?);
    }
    Ok(all)
}

fn census_cmd(spec: &str, opts: CensusOptions, out: &mut Out) -> Result<u8, Failure> {
    let mut total = 0;
    for g in census_groups(spec)? {
        let records = enumerate_left_dirings(&g, &opts)?;
        let gname = diring::group::invariant_name(&g.invariant_factors());
        for (k, r) in records.iter().enumerate() {
            writeln!(out, "# {}", serde_json::to_string(&r.summary)?)?;
            out.write_all(
                serialize_diring(&format!("{gname}_{}", k + 1), &r.structure).as_bytes(),
            )?;
            writeln!(out)?;
        }
        writeln!(
            out,
            "# census {gname}: {} left dirings up to isomorphism",
            records.len()
        )?;
        total += records.len();
    }
    writeln!(out, "# total: {total}")?;
    Ok(EXIT_OK)
}

fn modules_cmd(
    path: &Path,
    max_order: usize,
    opts: CensusOptions,
    out: &mut Out,
) -> Result<u8, Failure> {
    let loaded = load(path, &Loaded::default())?;
    for (name, d) in &loaded.dirings {
        let mut count = 0;
        for m in 1..=max_order {
            for (k, r) in enumerate_modules(d, m, &opts)?.iter().enumerate() {
                let flag = if r.summary.irreducible {
                    " 3-irreducible"
                } else {
                    ""
                };
                writeln!(out, "# {}{flag}", serde_json::to_string(&r.summary)?)?;
                out.write_all(
                    serialize_module(&format!("{name}_M{m}_{}", k + 1), name, &r.structure)
                        .as_bytes(),
                )?;
                writeln!(out)?;
                count += 1;
            }
        }
        writeln!(
            out,
            "# {name}: {count} modules of order at most {max_order} up to isomorphism"
        )?;
    }
    Ok(EXIT_OK)
}

fn format_map(source: &[String], target: &[String], map: &[usize]) -> String {
    map.iter()
        .enumerate()
        .map(|(x, &y)| format!("{}->{}", source[x], target[y]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn is_bijection(map: &[usize], target_order: usize) -> bool {
    map.len() == target_order && diring::group::is_permutation(map)
}

fn hom_cmd(file1: &Path, file2: &Path, iso: bool, out: &mut Out) -> Result<u8, Failure> {
    let first = load(file1, &Loaded::default())?;
    let second = load(file2, &first)?;
    let maps: Vec<String> = if let (Some((_, _, m)), Some((_, _, n))) =
        (first.modules.first(), second.modules.first())
    {
        let homs = hom_group(m, n)?;
        let names = |x: &LeftModuleTable| x.carrier().names().to_vec();
        homs.iter()
            .filter(|f| !iso || is_bijection(f, n.order()))
            .map(|f| format_map(&names(m), &names(n), f))
            .collect()
    } else {
        let (_, d1) = first_diring(&first, file1)?;
        let (_, d2) = first_diring(&second, file2)?;
        diring_homs(&d1, &d2)?
            .iter()
            .filter(|f| !iso || is_bijection(f, d2.order()))
            .map(|f| format_map(d1.group().names(), d2.group().names(), f))
            .collect()
    };
    for m in &maps {
        writeln!(out, "{m}")?;
    }
    let what = if iso { "isomorphisms" } else { "homomorphisms" };
    writeln!(out, "# {} {what}", maps.len())?;
    Ok(EXIT_OK)
}

fn print_props(report: &PropsReport, out: &mut Out) -> io::Result<()> {
    for (name, s) in &report.suites {
        writeln!(
            out,
            "{name}: checked {}, vacuous {}, violations {}",
            s.checked,
            s.vacuous,
            s.violations.len()
        )?;
        for v in &s.violations {
            writeln!(out, "  {v}")?;
        }
    }
    for f in &report.findings {
        writeln!(out, "finding: {f}")?;
    }
    writeln!(out, "total violations: {}", report.violation_count())
}

fn props_cmd(target: &str, opts: CensusOptions, out: &mut Out) -> Result<u8, Failure> {
    let mut report = PropsReport::default();
    let path = Path::new(target);
    if path.exists() {
        let loaded = load(path, &Loaded::default())?;
        for (name, d) in &loaded.dirings {
            report.merge(diring_suites(d, name)?);
            let mut modules = vec![regular_module(d)?];
            modules.extend(
                loaded
                    .modules
                    .iter()
                    .filter(|(_, over, _)| over == name)
                    .map(|(_, _, m)| m.clone()),
            );
            report.merge(module_suites(d, &modules, name)?);
        }
    } else {
        for (k, r) in census_records(target, &opts)?.iter().enumerate() {
            let d = Arc::new(r.structure.clone());
            let label = format!("{} #{}", r.summary.group, k + 1);
            report.merge(diring_suites(&d, &label)?);
            let mut modules = Vec::new();
            for m in 1..=diring::census::DEFAULT_MODULE_CAP {
                modules.extend(
                    enumerate_modules(&d, m, &opts)?
                        .into_iter()
                        .map(|r| r.structure),
                );
            }
            report.merge(module_suites(&d, &modules, &label)?);
        }
    }
    print_props(&report, out)?;
    Ok(if report.ok() { EXIT_OK } else { EXIT_VIOLATION })
}
