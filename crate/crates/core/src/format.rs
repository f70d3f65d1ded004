//! Text format for dirings and modules.
//!
//! ```text
//! # comments run to the end of the line
//! diring H
//! elements 0 a b c
//! add
//! 0 a b c
//! a 0 c b
//! b c 0 a
//! c b a 0
//! end
//! lprod
//! ...
//! end
//! rprod
//! ...
//! end
//!
//! module M over H
//! elements 0 x
//! add
//! 0 x
//! x 0
//! end
//! lact
//! 0 0 0
//! a 0 x
//! ...
//! end
//! ract
//! ...
//! end
//! ```
//!
//! A file holds any number of structures. Rows of `add`, `lprod` and `rprod`
//! follow the `elements` order. Rows of `lact` and `ract` start with the ring
//! element they belong to, in any order. The zero element is detected from
//! the addition table, not from its label.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::diring::DiringTable;
use crate::group::{validate_abelian_group, FiniteAbelianGroup};
use crate::left_module::{verify_module, LeftModuleTable};
use crate::report::ValidationReport;
use crate::Table;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Diring,
    Module { over: String },
}

/// A table block: rows of label indices. `row_labels` is set for `lact`/`ract`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub row_labels: Option<Vec<String>>,
    pub rows: Table,
}

#[derive(Clone, Debug, Eq)]
pub struct Structure {
    pub kind: Kind,
    pub name: String,
    pub elements: Vec<String>,
    pub blocks: BTreeMap<String, Block>,
    /// Line of the header, for error messages.
    pub line: usize,
}

/// Equality ignores the source line.
impl PartialEq for Structure {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.name == other.name
            && self.elements == other.elements
            && self.blocks == other.blocks
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureFile {
    pub structures: Vec<Structure>,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content
        .char_indices()
        .chain(std::iter::once((content.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

const DIRING_BLOCKS: [&str; 3] = ["add", "lprod", "rprod"];
const MODULE_BLOCKS: [&str; 3] = ["add", "lact", "ract"];

pub fn parse(text: &str) -> Result<StructureFile, ParseError> {
    let lines: Vec<(usize, Vec<Token>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let last_line = text.lines().count().max(1);
    let mut out = StructureFile::default();
    let mut i = 0;
    while i < lines.len() {
        let (ln, toks) = &lines[i];
        let (kind, name) = match toks[0].text {
            "diring" => {
                if toks.len() != 2 {
                    return Err(err(*ln, toks[0].column, "expected `diring NAME`"));
                }
                (Kind::Diring, toks[1].text.to_string())
            }
            "module" => {
                if toks.len() != 4 || toks[2].text != "over" {
                    return Err(err(
                        *ln,
                        toks[0].column,
                        "expected `module NAME over DIRING`",
                    ));
                }
                (
                    Kind::Module {
                        over: toks[3].text.to_string(),
                    },
                    toks[1].text.to_string(),
                )
            }
            other => {
                return Err(err(
                    *ln,
                    toks[0].column,
                    format!("expected `diring` or `module`, found `{other}`"),
                ))
            }
        };
        let header_line = *ln;
        i += 1;
        let (ln, toks) = lines
            .get(i)
            .ok_or_else(|| err(last_line, 1, "missing `elements` line"))?;
        if toks[0].text != "elements" || toks.len() < 2 {
            return Err(err(*ln, toks[0].column, "expected `elements LABEL...`"));
        }
        let mut index = HashMap::new();
        let mut elements = Vec::new();
        for t in &toks[1..] {
            if index.insert(t.text, elements.len()).is_some() {
                return Err(err(*ln, t.column, format!("duplicate label `{}`", t.text)));
            }
            elements.push(t.text.to_string());
        }
        i += 1;

        let allowed = match kind {
            Kind::Diring => DIRING_BLOCKS,
            Kind::Module { .. } => MODULE_BLOCKS,
        };
        let mut blocks = BTreeMap::new();
        while let Some((ln, toks)) = lines.get(i) {
            let head = &toks[0];
            if head.text == "diring" || head.text == "module" {
                break;
            }
            if !allowed.contains(&head.text) {
                return Err(err(
                    *ln,
                    head.column,
                    format!("unknown block `{}`", head.text),
                ));
            }
            if toks.len() != 1 {
                return Err(err(
                    *ln,
                    toks[1].column,
                    "block name must stand alone on its line",
                ));
            }
            if blocks.contains_key(head.text) {
                return Err(err(
                    *ln,
                    head.column,
                    format!("duplicate block `{}`", head.text),
                ));
            }
            let labelled = head.text == "lact" || head.text == "ract";
            let block_line = *ln;
            i += 1;
            let mut rows = Vec::new();
            let mut row_labels = Vec::new();
            loop {
                let Some((ln, toks)) = lines.get(i) else {
                    return Err(err(
                        last_line,
                        1,
                        format!(
                            "missing `end` for block `{}` opened on line {block_line}",
                            head.text
                        ),
                    ));
                };
                i += 1;
                if toks[0].text == "end" {
                    if toks.len() != 1 {
                        return Err(err(*ln, toks[1].column, "unexpected token after `end`"));
                    }
                    break;
                }
                if matches!(
                    toks[0].text,
                    "diring" | "module" | "add" | "lprod" | "rprod" | "lact" | "ract" | "elements"
                ) {
                    return Err(err(
                        *ln,
                        toks[0].column,
                        format!("missing `end` for block `{}`", head.text),
                    ));
                }
                let entries = if labelled {
                    row_labels.push(toks[0].text.to_string());
                    &toks[1..]
                } else {
                    &toks[..]
                };
                if entries.len() != elements.len() {
                    let col = entries
                        .get(elements.len())
                        .or(toks.last())
                        .map_or(1, |t| t.column);
                    return Err(err(
                        *ln,
                        col,
                        format!(
                            "row has {} entries, expected {}",
                            entries.len(),
                            elements.len()
                        ),
                    ));
                }
                let row = entries
                    .iter()
                    .map(|t| {
                        index.get(t.text).copied().ok_or_else(|| {
                            err(*ln, t.column, format!("undeclared label `{}`", t.text))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
            }
            if !labelled && rows.len() != elements.len() {
                return Err(err(
                    block_line,
                    1,
                    format!(
                        "block `{}` has {} rows, expected {}",
                        head.text,
                        rows.len(),
                        elements.len()
                    ),
                ));
            }
            blocks.insert(
                head.text.to_string(),
                Block {
                    row_labels: labelled.then_some(row_labels),
                    rows,
                },
            );
        }
        if let Some(missing) = allowed.iter().find(|b| !blocks.contains_key(**b)) {
            return Err(err(
                header_line,
                1,
                format!("`{name}` has no `{missing}` block"),
            ));
        }
        out.structures.push(Structure {
            kind,
            name,
            elements,
            blocks,
            line: header_line,
        });
    }
    check_references(&out)?;
    Ok(out)
}

/// Module row labels must match the referenced diring when it is in the same file.
fn check_references(file: &StructureFile) -> Result<(), ParseError> {
    for s in &file.structures {
        let Kind::Module { over } = &s.kind else {
            continue;
        };
        let Some(ring) = file
            .structures
            .iter()
            .find(|r| r.kind == Kind::Diring && &r.name == over)
        else {
            continue;
        };
        for b in ["lact", "ract"] {
            let labels = s.blocks[b].row_labels.as_ref().expect("labelled block");
            if labels.len() != ring.elements.len() {
                return Err(err(
                    s.line,
                    1,
                    format!(
                        "`{b}` of `{}` has {} rows, `{over}` has {} elements",
                        s.name,
                        labels.len(),
                        ring.elements.len()
                    ),
                ));
            }
            if let Some(l) = labels.iter().find(|l| !ring.elements.contains(l)) {
                return Err(err(
                    s.line,
                    1,
                    format!("`{b}` row `{l}` is not an element of `{over}`"),
                ));
            }
        }
    }
    Ok(())
}

fn label_rows<'a>(s: &'a Structure, block: &str) -> Vec<Vec<&'a str>> {
    s.blocks[block]
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| s.elements[x].as_str()).collect())
        .collect()
}

/// Validate the addition table and re-index both products by the group's
/// element order (zero first).
pub fn build_diring(s: &Structure) -> Result<DiringTable, ValidationReport> {
    let group = validate_abelian_group(s.elements.clone(), &label_rows(s, "add"))?;
    let to_group: Vec<usize> = s
        .elements
        .iter()
        .map(|l| group.index_of(l).expect("declared label"))
        .collect();
    let reindex = |b: &str| -> Table {
        let rows = &s.blocks[b].rows;
        let mut t = vec![vec![0; rows.len()]; rows.len()];
        for (x, row) in rows.iter().enumerate() {
            for (y, &z) in row.iter().enumerate() {
                t[to_group[x]][to_group[y]] = to_group[z];
            }
        }
        t
    };
    crate::diring::verify_left_diring(group, reindex("lprod"), reindex("rprod"))
}

pub fn build_module(
    s: &Structure,
    ring: &Arc<DiringTable>,
) -> Result<LeftModuleTable, ValidationReport> {
    let carrier = validate_abelian_group(s.elements.clone(), &label_rows(s, "add"))?;
    let to_group: Vec<usize> = s
        .elements
        .iter()
        .map(|l| carrier.index_of(l).expect("declared label"))
        .collect();
    let mut report = ValidationReport::new();
    let mut reindex = |b: &str| -> Table {
        let block = &s.blocks[b];
        let labels = block.row_labels.as_ref().expect("labelled block");
        let mut t = vec![vec![0; s.elements.len()]; ring.order()];
        let mut seen = vec![false; ring.order()];
        for (label, row) in labels.iter().zip(&block.rows) {
            let Some(a) = ring.group().index_of(label) else {
                report.fail(
                    format!("{b}.row"),
                    vec![],
                    format!("row `{label}` is not an element of the ring"),
                );
                continue;
            };
            if std::mem::replace(&mut seen[a], true) {
                report.fail(
                    format!("{b}.row"),
                    vec![a],
                    format!("row `{label}` appears twice"),
                );
            }
            for (x, &y) in row.iter().enumerate() {
                t[a][to_group[x]] = to_group[y];
            }
        }
        if let Some(a) = seen.iter().position(|s| !s) {
            report.fail(
                format!("{b}.row"),
                vec![a],
                format!("no row for ring element `{}`", ring.name(a)),
            );
        }
        t
    };
    let (lact, ract) = (reindex("lact"), reindex("ract"));
    if !report.ok {
        return Err(report);
    }
    verify_module(Arc::clone(ring), carrier, lact, ract)
}

fn write_rows(out: &mut String, names: &[String], rows: &Table, row_labels: Option<&[String]>) {
    let width = names
        .iter()
        .chain(row_labels.unwrap_or(&[]))
        .map(|n| n.chars().count())
        .max()
        .unwrap_or(1);
    for (i, row) in rows.iter().enumerate() {
        let mut cells: Vec<String> = Vec::new();
        if let Some(l) = row_labels {
            cells.push(format!("{:<width$}", l[i]));
        }
        cells.extend(row.iter().map(|&x| format!("{:<width$}", names[x])));
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
}

fn write_group(out: &mut String, g: &FiniteAbelianGroup) {
    out.push_str("elements ");
    out.push_str(&g.names().join(" "));
    out.push_str("\nadd\n");
    write_rows(out, g.names(), g.table(), None);
    out.push_str("end\n");
}

pub fn serialize_diring(name: &str, d: &DiringTable) -> String {
    let mut out = format!("diring {name}\n");
    write_group(&mut out, d.group());
    for (b, t) in [("lprod", d.lprod_table()), ("rprod", d.rprod_table())] {
        out.push_str(b);
        out.push('\n');
        write_rows(&mut out, d.group().names(), t, None);
        out.push_str("end\n");
    }
    out
}

pub fn serialize_module(name: &str, ring_name: &str, m: &LeftModuleTable) -> String {
    let mut out = format!("module {name} over {ring_name}\n");
    write_group(&mut out, m.carrier());
    for (b, t) in [("lact", m.lact_table()), ("ract", m.ract_table())] {
        out.push_str(b);
        out.push('\n');
        write_rows(
            &mut out,
            m.carrier().names(),
            t,
            Some(m.ring().group().names()),
        );
        out.push_str("end\n");
    }
    out
}

/// Serialise a parsed file back to text, preserving element order.
pub fn serialize(file: &StructureFile) -> String {
    let mut out = String::new();
    for (k, s) in file.structures.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        match &s.kind {
            Kind::Diring => out.push_str(&format!("diring {}\n", s.name)),
            Kind::Module { over } => out.push_str(&format!("module {} over {over}\n", s.name)),
        }
        out.push_str("elements ");
        out.push_str(&s.elements.join(" "));
        out.push('\n');
        for (b, block) in order_blocks(s) {
            out.push_str(b);
            out.push('\n');
            write_rows(
                &mut out,
                &s.elements,
                &block.rows,
                block.row_labels.as_deref(),
            );
            out.push_str("end\n");
        }
    }
    out
}

fn order_blocks(s: &Structure) -> Vec<(&'static str, &Block)> {
    let names = match s.kind {
        Kind::Diring => DIRING_BLOCKS,
        Kind::Module { .. } => MODULE_BLOCKS,
    };
    names.iter().map(|&b| (b, &s.blocks[b])).collect()
}

/// Why a file could not be turned into structures.
#[derive(Debug)]
pub enum LoadError {
    Io(std::io::Error),
    Parse(ParseError),
    Reference {
        line: usize,
        message: String,
    },
    Invalid {
        name: String,
        report: ValidationReport,
    },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "{e}"),
            LoadError::Parse(e) => write!(f, "parse error at {e}"),
            LoadError::Reference { line, message } => {
                write!(f, "parse error at {line}:1: {message}")
            }
            LoadError::Invalid { name, report } => write!(f, "`{name}` is invalid:\n{report}"),
        }
    }
}

impl std::error::Error for LoadError {}

/// Every structure of a file, validated.
#[derive(Clone, Debug, Default)]
pub struct Loaded {
    pub dirings: Vec<(String, Arc<DiringTable>)>,
    pub modules: Vec<(String, String, LeftModuleTable)>,
}

impl Loaded {
    pub fn diring(&self, name: &str) -> Option<&Arc<DiringTable>> {
        self.dirings.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }
}

/// Parse and validate. Modules may refer to dirings earlier in the same file
/// or in `context`.
pub fn load_str(text: &str, context: &Loaded) -> Result<Loaded, LoadError> {
    let file = parse(text).map_err(LoadError::Parse)?;
    let mut out = Loaded::default();
    for s in &file.structures {
        match &s.kind {
            Kind::Diring => {
                let d = build_diring(s).map_err(|report| LoadError::Invalid {
                    name: s.name.clone(),
                    report,
                })?;
                out.dirings.push((s.name.clone(), Arc::new(d)));
            }
            Kind::Module { over } => {
                let ring = out
                    .diring(over)
                    .or_else(|| context.diring(over))
                    .cloned()
                    .ok_or_else(|| LoadError::Reference {
                        line: s.line,
                        message: format!("module `{}` refers to unknown diring `{over}`", s.name),
                    })?;
                let m = build_module(s, &ring).map_err(|report| LoadError::Invalid {
                    name: s.name.clone(),
                    report,
                })?;
                out.modules.push((s.name.clone(), over.clone(), m));
            }
        }
    }
    Ok(out)
}

pub fn load_file(path: &std::path::Path, context: &Loaded) -> Result<Loaded, LoadError> {
    let text = std::fs::read_to_string(path).map_err(LoadError::Io)?;
    load_str(&text, context)
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: &str = "\
# the four-element example
diring H
elements 0 a b c
add
0 a b c
a 0 c b
b c 0 a
c b a 0
end
lprod
0 0 0 0
0 b b 0
0 b b 0
0 0 0 0
end
rprod
0 0 0 0
0 a b c
0 a b c
0 0 0 0
end
";

    #[test]
    fn parses_and_validates_h() {
        let loaded = load_str(H, &Loaded::default()).unwrap();
        let d = &loaded.dirings[0].1;
        assert_eq!(d.group().format_set(d.left_halo()), "{a,b}");
        assert!(d.right_halo().is_empty());
        assert_eq!(*d.as_ref(), crate::diring::tests::h());
    }

    #[test]
    fn round_trip_is_identity() {
        let f = parse(H).unwrap();
        let text = serialize(&f);
        assert_eq!(parse(&text).unwrap(), f);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
        let d = build_diring(&f.structures[0]).unwrap();
        assert_eq!(parse(&serialize_diring("H", &d)).unwrap(), f);
    }

    #[test]
    fn undeclared_label_has_location() {
        let bad = H.replace("a 0 c b", "a 0 d b");
        let e = parse(&bad).unwrap_err();
        assert_eq!((e.line, e.column), (6, 5));
        assert!(e.message.contains("`d`"));
    }

    #[test]
    fn structural_errors() {
        assert!(parse(&H.replace("lprod", "mul"))
            .unwrap_err()
            .message
            .contains("unknown block"));
        let e = parse(&H.replacen("end\n", "", 1)).unwrap_err();
        assert!(e.message.contains("missing `end`"), "{e}");
        let e = parse(&H.replace("0 b b 0\n0 b b 0", "0 b b\n0 b b 0")).unwrap_err();
        assert!(e.message.contains("entries"), "{e}");
        assert!(parse(&H.replace("elements 0 a b c", "elements 0 a a c"))
            .unwrap_err()
            .message
            .contains("duplicate"));
        let truncated = &H[..H.rfind("end").unwrap()];
        assert!(parse(truncated)
            .unwrap_err()
            .message
            .contains("missing `end`"));
    }

    #[test]
    fn zero_is_detected_not_assumed() {
        // relabel so the zero element is called `z` and listed last
        let text = "\
diring T
elements u z
add
z u
u z
end
lprod
u z
z z
end
rprod
u z
z z
end
";
        let d = load_str(text, &Loaded::default())
            .unwrap()
            .dirings
            .remove(0)
            .1;
        assert_eq!(d.name(0), "z");
        let z2 = DiringTable::integers_mod(2);
        assert_eq!(d.lprod_table(), z2.lprod_table());
        assert_eq!(d.rprod_table(), z2.rprod_table());
        assert!(d.is_diring());
    }

    #[test]
    fn modules_in_the_same_file() {
        let d = Arc::new(crate::diring::tests::h());
        let reg = crate::left_module::regular_module(&d).unwrap();
        let text = format!(
            "{}\n{}",
            serialize_diring("H", &d),
            serialize_module("HH", "H", &reg)
        );
        let loaded = load_str(&text, &Loaded::default()).unwrap();
        assert_eq!(loaded.modules[0].2, reg);
        let f = parse(&text).unwrap();
        assert_eq!(parse(&serialize(&f)).unwrap(), f);
        let orphan = serialize_module("HH", "K", &reg);
        assert!(matches!(
            load_str(&orphan, &Loaded::default()),
            Err(LoadError::Reference { .. })
        ));
        let ctx = load_str(&serialize_diring("K", &d), &Loaded::default()).unwrap();
        assert!(load_str(&orphan, &ctx).is_ok());
    }
}
