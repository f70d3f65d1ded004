//! Analysis reports, referencing elements by label.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::diring::{DiringTable, Side};
use crate::error::Result;
use crate::group::FiniteAbelianGroup;
use crate::ideal::{IdealKind, Simplicity};
use crate::left_module::{regular_module, LeftModuleTable};
use crate::mask::SubsetMask;
use crate::props::{diring_suites, module_suites};
use crate::radical::{is_3_primitive, is_3_semi_primitive, rad3, RadicalReport};

pub const SCHEMA_VERSION: u32 = 1;

fn labels(g: &FiniteAbelianGroup, m: &SubsetMask) -> Vec<String> {
    g.labels(m)
}

fn label_sets(g: &FiniteAbelianGroup, ms: &[SubsetMask]) -> Vec<Vec<String>> {
    ms.iter().map(|m| labels(g, m)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalosJson {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub two_sided: Vec<String>,
    pub additive: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalJson {
    pub three_maximal_left_ideals: Vec<Vec<String>>,
    pub primitive_ideals: Vec<Vec<String>>,
    pub rad3_via_annihilators: Vec<String>,
    pub rad3_via_primitive_ideals: Vec<String>,
    pub agrees: bool,
    pub family_empty: bool,
}

impl RadicalJson {
    pub fn new(d: &DiringTable, r: &RadicalReport) -> Self {
        let g = d.group();
        RadicalJson {
            three_maximal_left_ideals: label_sets(g, &r.three_maximal_left_ideals),
            primitive_ideals: label_sets(g, &r.primitive_ideals),
            rad3_via_annihilators: labels(g, &r.rad3_via_annihilators),
            rad3_via_primitive_ideals: labels(g, &r.rad3_via_primitive_ideals),
            agrees: r.agrees,
            family_empty: r.family_empty,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteJson {
    pub checked: usize,
    pub vacuous: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub name: String,
    pub valid: bool,
    pub order: usize,
    pub side: Side,
    pub is_diring: bool,
    pub halos: HalosJson,
    pub ideals: Vec<Vec<String>>,
    pub left_ideals: Vec<Vec<String>>,
    pub simplicity: Simplicity,
    pub radical: RadicalJson,
    pub primitive: bool,
    /// Absent for the zero diring.
    pub semi_primitive: Option<bool>,
    pub propositions: BTreeMap<String, SuiteJson>,
    pub propositions_ok: bool,
    pub findings: Vec<String>,
}

/// Full analysis of a validated left diring. Proposition suites run over the
/// diring and its regular module.
pub fn analyze(name: &str, d: &Arc<DiringTable>) -> Result<AnalysisReport> {
    let g = d.group();
    let h = d.halos();
    let radical = rad3(d)?;
    let mut props = diring_suites(d, name)?;
    props.merge(module_suites(d, &[regular_module(d)?], name)?);
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        valid: true,
        order: d.order(),
        side: d.side(),
        is_diring: d.is_diring(),
        halos: HalosJson {
            left: labels(g, &h.left),
            right: labels(g, &h.right),
            two_sided: labels(g, &h.two_sided),
            additive: labels(g, &h.additive),
        },
        ideals: label_sets(g, &d.ideal_masks(IdealKind::TwoSided)?),
        left_ideals: label_sets(g, &d.ideal_masks(IdealKind::Left)?),
        simplicity: d.simplicity_class()?,
        radical: RadicalJson::new(d, &radical),
        primitive: is_3_primitive(d)?.is_some(),
        semi_primitive: if d.order() > 1 {
            Some(is_3_semi_primitive(d)?)
        } else {
            None
        },
        propositions_ok: props.ok(),
        propositions: props
            .suites
            .into_iter()
            .map(|(k, s)| {
                (
                    k,
                    SuiteJson {
                        checked: s.checked,
                        vacuous: s.vacuous,
                        violations: s.violations,
                    },
                )
            })
            .collect(),
        findings: props.findings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub schema_version: u32,
    pub name: String,
    pub over: String,
    pub order: usize,
    pub halo: Vec<String>,
    pub even_part: Vec<String>,
    pub submodules: Vec<Vec<String>>,
    pub irreducible: bool,
    pub annihilator: Vec<String>,
    pub faithful: bool,
    pub completely_reducible: bool,
}

pub fn analyze_module(name: &str, over: &str, m: &LeftModuleTable) -> Result<ModuleReport> {
    let g = m.carrier();
    let (even, odd) = m.decompose();
    Ok(ModuleReport {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        over: over.to_string(),
        order: m.order(),
        halo: labels(g, &odd),
        even_part: labels(g, &even),
        submodules: label_sets(g, &m.enumerate_submodules()?),
        irreducible: m.is_3_irreducible()?,
        annihilator: labels(m.ring().group(), &m.annihilator()),
        faithful: m.is_faithful(),
        completely_reducible: m.is_completely_3_reducible()?.holds(),
    })
}

fn set(xs: &[String]) -> String {
    if xs.is_empty() {
        "∅".into()
    } else {
        format!("{{{}}}", xs.join(","))
    }
}

fn sets(xss: &[Vec<String>]) -> String {
    if xss.is_empty() {
        "none".into()
    } else {
        xss.iter().map(|x| set(x)).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for RadicalJson {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "3-maximal left ideals: {}",
            sets(&self.three_maximal_left_ideals)
        )?;
        writeln!(f, "3-primitive ideals: {}", sets(&self.primitive_ideals))?;
        writeln!(f, "rad3 = {}", set(&self.rad3_via_annihilators))?;
        writeln!(
            f,
            "rad3 via primitive ideals = {}",
            set(&self.rad3_via_primitive_ideals)
        )?;
        writeln!(f, "agrees = {}", self.agrees)?;
        writeln!(f, "family_empty = {}", self.family_empty)
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        writeln!(
            f,
            "{} (order {}): valid {side} diring; diring: {}",
            self.name,
            self.order,
            if self.is_diring { "yes" } else { "no" }
        )?;
        writeln!(f, "left halo: {}", set(&self.halos.left))?;
        writeln!(f, "right halo: {}", set(&self.halos.right))?;
        writeln!(f, "two-sided halo: {}", set(&self.halos.two_sided))?;
        writeln!(f, "additive halo: {}", set(&self.halos.additive))?;
        writeln!(f, "ideals: {}", sets(&self.ideals))?;
        writeln!(f, "left ideals: {}", sets(&self.left_ideals))?;
        let simplicity = match self.simplicity {
            Simplicity::ThreeSimple => "3-simple",
            Simplicity::TwoSimple => "2-simple",
            Simplicity::Neither => "neither",
        };
        writeln!(f, "simplicity: {simplicity}")?;
        write!(f, "{}", self.radical)?;
        writeln!(f, "3-primitive: {}", self.primitive)?;
        match self.semi_primitive {
            Some(b) => writeln!(f, "3-semi-primitive: {b}")?,
            None => writeln!(f, "3-semi-primitive: n/a")?,
        }
        let bad: usize = self.propositions.values().map(|s| s.violations.len()).sum();
        writeln!(
            f,
            "proposition suites: {} run, {bad} violations",
            self.propositions.len()
        )?;
        for (k, s) in &self.propositions {
            for v in &s.violations {
                writeln!(f, "  {k}: {v}")?;
            }
        }
        for x in &self.findings {
            writeln!(f, "finding: {x}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ModuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} over {} (order {})", self.name, self.over, self.order)?;
        writeln!(f, "additive halo: {}", set(&self.halo))?;
        writeln!(f, "even part: {}", set(&self.even_part))?;
        writeln!(f, "submodules: {}", sets(&self.submodules))?;
        writeln!(f, "3-irreducible: {}", self.irreducible)?;
        writeln!(f, "annihilator: {}", set(&self.annihilator))?;
        writeln!(f, "faithful: {}", self.faithful)?;
        writeln!(f, "completely 3-reducible: {}", self.completely_reducible)
    }
}
