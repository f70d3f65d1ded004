//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use diring::analysis::analyze;
use diring::census::{
    census_up_to, enumerate_modules, CensusOptions, DiringRecord, DEFAULT_MODULE_CAP,
};
use diring::error::Error;
use diring::format::{load_file, serialize_diring, serialize_module, Loaded};
use diring::ideal::{IdealKind, Simplicity};
use diring::left_module::{regular_module, LeftModuleTable};
use diring::props::{diring_suites, module_suites, PropsReport};
use diring::radical::{
    colon_ideal, is_3_primitive, is_3_semi_primitive, rad3, semi_primitive_conditions,
    three_maximal_left_ideals, three_primitive_ideals,
};
use diring::{DiringTable, SubsetMask};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

fn h_fixture() -> Arc<DiringTable> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/H.diring");
    let loaded = load_file(&path, &Loaded::default()).expect("H fixture loads");
    loaded.dirings[0].1.clone()
}

fn labels(d: &DiringTable, m: &SubsetMask) -> String {
    d.group().labels(m).join(",")
}

fn label_sets(d: &DiringTable, ms: &[SubsetMask]) -> BTreeSet<String> {
    ms.iter().map(|m| labels(d, m)).collect()
}

fn set_of(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn census(jobs: usize) -> Vec<DiringRecord> {
    census_up_to(4, &CensusOptions::with_jobs(jobs)).expect("census of order at most 4")
}

fn modules_over(d: &Arc<DiringTable>, jobs: usize) -> Vec<LeftModuleTable> {
    let opts = CensusOptions::with_jobs(jobs);
    (1..=DEFAULT_MODULE_CAP)
        .flat_map(|m| {
            enumerate_modules(d, m, &opts)
                .expect("module census")
                .into_iter()
                .map(|r| r.structure)
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let d = h_fixture();
    let r = analyze("H", &d).expect("analysis of H");
    let elapsed = start.elapsed();
    let ok = r.valid
        && !r.is_diring
        && r.halos.left == ["a", "b"]
        && r.halos.right.is_empty()
        && elapsed < Duration::from_secs(1);
    Outcome::new(
        ok,
        format!(
            "left halo {:?}, right halo {:?}, diring = {}, {elapsed:?}",
            r.halos.left, r.halos.right, r.is_diring
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let d = h_fixture();
    let plus = labels(&d, d.additive_halo());
    let ideals = label_sets(&d, &d.ideal_masks(IdealKind::TwoSided).unwrap());
    let lefts = label_sets(&d, &d.ideal_masks(IdealKind::Left).unwrap());
    let simplicity = d.simplicity_class().unwrap();
    let maximal = three_maximal_left_ideals(&d).unwrap();
    let r = rad3(&d).unwrap();
    let elapsed = start.elapsed();
    let ok = plus == "0,c"
        && ideals == set_of(&["0", "0,c", "0,a,b,c"])
        && simplicity == Simplicity::ThreeSimple
        && lefts == set_of(&["0", "0,b", "0,c", "0,a,b,c"])
        && maximal.is_empty()
        && r.rad3().is_full()
        && r.family_empty
        && r.agrees
        && elapsed < Duration::from_secs(1);
    Outcome::new(
        ok,
        format!(
            "additive halo {{{plus}}}, {} ideals, {} left ideals, {elapsed:?}",
            ideals.len(),
            lefts.len()
        ),
    )
}

/// Suites that must have at least one checked instance over the census.
const REQUIRED_SUITES: [&str; 10] = [
    "halo_laws",
    "module_halo",
    "module_hom.halo",
    "quotient.halo",
    "schur",
    "primitive_ideals",
    "radical.formulas",
    "semi_primitive.routes",
    "radical.quotient",
    "translations",
];

fn criterion_3(records: &[DiringRecord]) -> (Outcome, PropsReport) {
    let start = Instant::now();
    let mut report = PropsReport::default();
    let mut modules = 0;
    for (k, r) in records.iter().enumerate() {
        let d = Arc::new(r.structure.clone());
        let label = format!("{} #{}", r.summary.group, k + 1);
        report.merge(diring_suites(&d, &label).expect("diring suites"));
        let ms = modules_over(&d, 4);
        modules += ms.len();
        report.merge(module_suites(&d, &ms, &label).expect("module suites"));
    }
    let elapsed = start.elapsed();
    let unchecked: Vec<&str> = REQUIRED_SUITES
        .iter()
        .copied()
        .filter(|s| report.suites.get(*s).map_or(true, |r| r.checked == 0))
        .collect();
    let ok = report.ok() && unchecked.is_empty() && elapsed < Duration::from_secs(600);
    let checked: usize = report.suites.values().map(|s| s.checked).sum();
    let mut detail = format!(
        "{} dirings, {modules} modules, {checked} instances, {} violations, {elapsed:?}",
        records.len(),
        report.violation_count()
    );
    if !unchecked.is_empty() {
        detail.push_str(&format!(", never exercised: {unchecked:?}"));
    }
    for (name, s) in &report.suites {
        for v in s.violations.iter().take(3) {
            detail.push_str(&format!("\n    {name}: {v}"));
        }
    }
    (Outcome::new(ok, detail), report)
}

fn criterion_4(records: &[DiringRecord], props: &PropsReport) -> Outcome {
    let mut semi = 0;
    let mut bad = Vec::new();
    for r in records.iter().filter(|r| r.structure.order() > 1) {
        let d = Arc::new(r.structure.clone());
        let p = semi_primitive_conditions(&d).expect("semi-primitivity conditions");
        if p.semi_primitive {
            semi += 1;
            if !(p.faithful_reducible_module && p.subdirect_embedding) {
                bad.push(format!("{}: a construction failed", r.summary.group));
            }
        }
        if !p.agree() || !p.report.ok {
            bad.push(format!("{}: {}", r.summary.group, p.report));
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{semi} semi-primitive, {} disagreements, {} irreducibility findings logged separately{}",
            bad.len(),
            props.findings.len(),
            bad.iter().map(|b| format!("\n    {b}")).collect::<String>()
        ),
    )
}

/// Ring axioms and two-sided identity for a product table, checked directly.
fn unital_ring(d: &DiringTable, mul: &[Vec<usize>], e: usize) -> bool {
    let n = d.order();
    (0..n).all(|x| mul[e][x] == x && mul[x][e] == x)
        && (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    mul[mul[x][y]][z] == mul[x][mul[y][z]]
                        && mul[x][d.add(y, z)] == d.add(mul[x][y], mul[x][z])
                        && mul[d.add(y, z)][x] == d.add(mul[y][x], mul[z][x])
                })
            })
        })
}

fn criterion_5(records: &[DiringRecord]) -> Outcome {
    let mut units = 0;
    let mut bad = Vec::new();
    for r in records {
        let d = &r.structure;
        for e in d.two_sided_halo().elems() {
            units += 1;
            let prod = d.unital_ring_product(e).expect("two-sided bar-unit");
            let digroup = d.uplus_digroup_check(e).expect("two-sided bar-unit");
            if !prod.report.ok || !unital_ring(d, &prod.table, e) || !digroup.ok {
                bad.push(format!(
                    "{} e = {}: {} / {}",
                    r.summary.group,
                    d.name(e),
                    prod.report,
                    digroup
                ));
            }
        }
    }
    Outcome::new(
        bad.is_empty() && units > 0,
        format!(
            "{units} two-sided bar-units checked, {} failures{}",
            bad.len(),
            bad.iter().map(|b| format!("\n    {b}")).collect::<String>()
        ),
    )
}

/// Everything the census and analysis emit, as one string.
fn transcript(jobs: usize) -> String {
    let mut out = String::new();
    let records = census(jobs);
    for (k, r) in records.iter().enumerate() {
        let d = Arc::new(r.structure.clone());
        let name = format!("D{k}");
        out.push_str(&format!("{:?}\n", r.canonical_form));
        out.push_str(&serde_json::to_string(&r.summary).unwrap());
        out.push_str(&serialize_diring(&name, &d));
        out.push_str(&serde_json::to_string(&analyze(&name, &d).unwrap()).unwrap());
        let opts = CensusOptions::with_jobs(jobs);
        for m in 1..=DEFAULT_MODULE_CAP {
            let ms = enumerate_modules(&d, m, &opts).unwrap();
            out.push_str(&format!("modules of order {m}: {}\n", ms.len()));
            for (j, rec) in ms.iter().enumerate() {
                out.push_str(&format!("{:?}\n", rec.canonical_form));
                out.push_str(&serde_json::to_string(&rec.summary).unwrap());
                out.push_str(&serialize_module(&format!("M{j}"), &name, &rec.structure));
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let a = transcript(1);
    let b = transcript(4);
    let c = transcript(4);
    let d = transcript(1);
    let ok = a == b && b == c && c == d;
    Outcome::new(
        ok,
        format!("{} bytes per run, jobs 1/4/4/1 identical = {ok}", a.len()),
    )
}

fn disagreement<T>(r: diring::error::Result<T>) -> Option<String> {
    match r {
        Err(e @ Error::Disagreement(_)) => Some(e.to_string()),
        Err(e) => panic!("unexpected error: {e}"),
        Ok(_) => None,
    }
}

fn criterion_7(records: &[DiringRecord]) -> Outcome {
    let mut instances = 0;
    let mut bad: Vec<String> = Vec::new();
    for r in records {
        let d = Arc::new(r.structure.clone());
        let n = d.order();
        let regular = regular_module(&d).unwrap();
        // (I:R) by scanning products, and as the annihilator of R/I.
        for i in d.ideal_masks(IdealKind::Left).unwrap() {
            instances += 1;
            bad.extend(disagreement(colon_ideal(&d, &i)));
            let scan = SubsetMask::from_predicate(n, |a| {
                (0..n).all(|x| i.contains(d.lprod(a, x)) && i.contains(d.rprod(a, x)))
            });
            let ann = regular.quotient_module(&i).unwrap().module.annihilator();
            if scan != ann {
                bad.push(format!(
                    "{}: (I:R) scan differs from ann(R/I)",
                    r.summary.group
                ));
            }
        }
        // Primitive ideals: colons of 3-maximal left ideals, and ideals with a
        // 3-primitive quotient.
        instances += 1;
        bad.extend(disagreement(three_primitive_ideals(&d)));
        let via_colon: BTreeSet<SubsetMask> = three_maximal_left_ideals(&d)
            .unwrap()
            .iter()
            .map(|i| colon_ideal(&d, i).unwrap())
            .collect();
        let mut via_quotient = BTreeSet::new();
        for h in d.ideal_masks(IdealKind::TwoSided).unwrap() {
            let q = d.quotient_diring(&h).unwrap();
            if q.diring.order() > 1 && is_3_primitive(&q.diring).unwrap().is_some() {
                via_quotient.insert(h);
            }
        }
        if via_colon != via_quotient {
            bad.push(format!(
                "{}: primitive ideals differ between routes",
                r.summary.group
            ));
        }
        // rad3 by annihilators and by primitive ideals.
        instances += 1;
        let radical = rad3(&d).unwrap();
        if radical.rad3_via_annihilators != radical.rad3_via_primitive_ideals || !radical.agrees {
            bad.push(format!("{}: rad3 routes differ", r.summary.group));
        }
        // Semi-primitivity: rad3 = 0, and the pointwise criterion.
        if n > 1 {
            instances += 1;
            match is_3_semi_primitive(&d) {
                Ok(s) if s != (radical.rad3().count() == 1) => bad.push(format!(
                    "{}: semi-primitivity routes differ",
                    r.summary.group
                )),
                other => bad.extend(disagreement(other)),
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{instances} dual-route instances, {} disagreements",
            bad.len()
        ),
    )
}

fn main() -> ExitCode {
    let records = census(4);
    let (c3, props) = criterion_3(&records);
    let outcomes = [
        ("1", "H halos and side", criterion_1()),
        ("2", "H ideals and radical", criterion_2()),
        ("3", "proposition suites over the census", c3),
        (
            "4",
            "semi-primitivity constructions",
            criterion_4(&records, &props),
        ),
        (
            "5",
            "unital ring product and digroup",
            criterion_5(&records),
        ),
        ("6", "determinism across runs and job counts", criterion_6()),
        ("7", "dual-route quantities agree", criterion_7(&records)),
    ];
    let mut all = true;
    for (id, what, o) in &outcomes {
        all &= o.ok;
        println!(
            "{} criterion {id}: {what}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
