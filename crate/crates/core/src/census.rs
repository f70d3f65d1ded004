//! Exhaustive census of small left dirings and of small modules over them.
//!
//! Products and actions are generated as biadditive maps from their values on
//! pairs of basis elements, so distributivity holds by construction. Candidates
//! are filtered by the one-product axioms first, then pairs are checked for the
//! mixed axioms and fully validated. Isomorphic copies are merged through a
//! canonical form: the least byte serialisation over all automorphisms of the
//! carrier group.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::diring::{DiringTable, Side};
use crate::error::{Error, Result};
use crate::group::{groups_of_order, invariant_name, Basis, FiniteAbelianGroup};
use crate::ideal::{IdealKind, Simplicity};
use crate::left_module::{verify_module, LeftModuleTable};
use crate::radical::{is_3_primitive, is_3_semi_primitive, rad3};
use crate::{Elem, Table};

/// Default largest diring order for an exhaustive census.
pub const DEFAULT_DIRING_CAP: usize = 4;
/// Default largest module order, and largest diring order for module census.
pub const DEFAULT_MODULE_CAP: usize = 4;

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Lift the order caps.
    pub force: bool,
}

impl CensusOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        CensusOptions {
            jobs: Some(jobs),
            force: false,
        }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(f()),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map(|pool| pool.install(f))
                .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}"))),
        }
    }

    fn cap(&self, what: &'static str, order: usize, cap: usize) -> Result<()> {
        if self.force || order <= cap {
            Ok(())
        } else {
            Err(Error::CapExceeded { what, order, cap })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiringSummary {
    pub order: usize,
    pub group: String,
    pub side: Side,
    pub left_halo: usize,
    pub right_halo: usize,
    pub two_sided_halo: usize,
    pub additive_halo: usize,
    pub ideals: usize,
    pub left_ideals: usize,
    pub simplicity: Simplicity,
    pub three_maximal_left_ideals: usize,
    pub rad3: usize,
    pub family_empty: bool,
    pub primitive: bool,
    /// Not defined for the zero diring.
    pub semi_primitive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleSummary {
    pub order: usize,
    pub group: String,
    pub halo: usize,
    pub submodules: usize,
    pub irreducible: bool,
    pub faithful: bool,
    pub completely_reducible: bool,
}

#[derive(Clone, Debug)]
pub struct CensusRecord<T, S> {
    pub structure: T,
    pub canonical_form: Vec<u8>,
    pub summary: S,
}

pub type DiringRecord = CensusRecord<DiringTable, DiringSummary>;
pub type ModuleRecord = CensusRecord<LeftModuleTable, ModuleSummary>;

pub fn summarize_diring(d: &Arc<DiringTable>) -> Result<DiringSummary> {
    let radical = rad3(d)?;
    Ok(DiringSummary {
        order: d.order(),
        group: invariant_name(&d.group().invariant_factors()),
        side: d.side(),
        left_halo: d.left_halo().count(),
        right_halo: d.right_halo().count(),
        two_sided_halo: d.two_sided_halo().count(),
        additive_halo: d.additive_halo().count(),
        ideals: d.ideal_masks(IdealKind::TwoSided)?.len(),
        left_ideals: d.ideal_masks(IdealKind::Left)?.len(),
        simplicity: d.simplicity_class()?,
        three_maximal_left_ideals: radical.three_maximal_left_ideals.len(),
        rad3: radical.rad3().count(),
        family_empty: radical.family_empty,
        primitive: is_3_primitive(d)?.is_some(),
        semi_primitive: if d.order() > 1 {
            Some(is_3_semi_primitive(d)?)
        } else {
            None
        },
    })
}

pub fn summarize_module(m: &LeftModuleTable) -> Result<ModuleSummary> {
    Ok(ModuleSummary {
        order: m.order(),
        group: invariant_name(&m.carrier().invariant_factors()),
        halo: m.module_halo().count(),
        submodules: m.enumerate_submodules()?.len(),
        irreducible: m.is_3_irreducible()?,
        faithful: m.is_faithful(),
        completely_reducible: m.is_completely_3_reducible()?.holds(),
    })
}

/// All biadditive maps `A × B → C`, as `|A| × |B|` tables.
fn biadditive_maps(
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    c: &FiniteAbelianGroup,
) -> Vec<Table> {
    let (ba, bb) = (a.basis(), b.basis());
    let pairs: Vec<(usize, usize)> = (0..ba.rank())
        .flat_map(|i| (0..bb.rank()).map(move |j| (i, j)))
        .collect();
    let choices: Vec<Vec<Elem>> = pairs
        .iter()
        .map(|&(i, j)| {
            let g = gcd(ba.orders[i], bb.orders[j]);
            (0..c.order()).filter(|&h| c.multiple(g, h) == 0).collect()
        })
        .collect();
    let radix: Vec<usize> = choices.iter().map(|v| v.len()).collect();
    crate::group::MixedRadix::new(radix)
        .map(|pick| {
            let images: Vec<Elem> = pick
                .iter()
                .enumerate()
                .map(|(k, &p)| choices[k][p])
                .collect();
            extend_bilinear(&ba, &bb, c, &images)
        })
        .collect()
}

fn extend_bilinear(ba: &Basis, bb: &Basis, c: &FiniteAbelianGroup, images: &[Elem]) -> Table {
    let s = bb.rank();
    ba.coords
        .iter()
        .map(|cx| {
            bb.coords
                .iter()
                .map(|cy| {
                    let mut acc = 0;
                    for (i, &u) in cx.iter().enumerate() {
                        for (j, &v) in cy.iter().enumerate() {
                            acc = c.add(acc, c.multiple(u * v, images[i * s + j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn push_table(out: &mut Vec<u8>, t: &Table) {
    for row in t {
        out.extend(row.iter().map(|&x| x as u8));
    }
}

/// Least serialisation of `(lprod, rprod)` over `Aut(G)`, with the relabelled tables.
fn canonical_diring(
    g: &FiniteAbelianGroup,
    autos: &[Vec<Elem>],
    l: &Table,
    r: &Table,
) -> (Vec<u8>, Table, Table) {
    let n = g.order();
    let mut prefix = invariant_name(&g.invariant_factors()).into_bytes();
    prefix.push(0);
    let mut best: Option<(Vec<u8>, Table, Table)> = None;
    for s in autos {
        let mut inv = vec![0; n];
        for (x, &y) in s.iter().enumerate() {
            inv[y] = x;
        }
        let relabel = |t: &Table| -> Table {
            (0..n)
                .map(|x| (0..n).map(|y| s[t[inv[x]][inv[y]]]).collect())
                .collect()
        };
        let (tl, tr) = (relabel(l), relabel(r));
        let mut bytes = prefix.clone();
        push_table(&mut bytes, &tl);
        push_table(&mut bytes, &tr);
        if best.as_ref().map_or(true, |b| bytes < b.0) {
            best = Some((bytes, tl, tr));
        }
    }
    best.expect("the identity is an automorphism")
}

/// An additive isomorphism from `g` onto the standard group with the same
/// invariant factors, which is what the census enumerates over.
fn to_standard(g: &FiniteAbelianGroup) -> (FiniteAbelianGroup, Vec<Elem>) {
    let std = FiniteAbelianGroup::from_invariants(&g.invariant_factors());
    let basis = g.basis();
    let map = g
        .homs_into(&std, &basis, |i, y| std.element_order(y) == basis.orders[i])
        .find(|f| crate::group::is_permutation(f))
        .expect("groups with equal invariants are isomorphic");
    (std, map)
}

fn transport_square(t: &Table, map: &[Elem]) -> Table {
    let mut out = vec![vec![0; map.len()]; map.len()];
    for (x, row) in t.iter().enumerate() {
        for (y, &z) in row.iter().enumerate() {
            out[map[x]][map[y]] = map[z];
        }
    }
    out
}

/// Canonical form of a diring up to isomorphism, comparable with census output.
pub fn diring_canonical_form(d: &DiringTable) -> Vec<u8> {
    let (std, map) = to_standard(d.group());
    let (l, r) = (
        transport_square(d.lprod_table(), &map),
        transport_square(d.rprod_table(), &map),
    );
    canonical_diring(&std, &std.automorphisms(), &l, &r).0
}

/// Every left diring on `g`, up to isomorphism, sorted by canonical form.
pub fn enumerate_left_dirings(
    g: &FiniteAbelianGroup,
    opts: &CensusOptions,
) -> Result<Vec<DiringRecord>> {
    opts.cap("left diring census", g.order(), DEFAULT_DIRING_CAP)?;
    let n = g.order();
    let products = biadditive_maps(g, g, g);
    let assoc =
        |t: &Table| (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])));
    let has_left_unit = |t: &Table| (0..n).any(|e| (0..n).all(|x| t[e][x] == x));
    let lefts: Vec<&Table> = products.iter().filter(|t| assoc(t)).collect();
    let rights: Vec<&Table> = products
        .iter()
        .filter(|t| assoc(t) && has_left_unit(t))
        .collect();
    let autos = g.automorphisms();

    let found: Vec<(Vec<u8>, Table, Table)> = opts.run(|| {
        lefts
            .par_iter()
            .flat_map_iter(|l| {
                rights.iter().filter_map(|r| {
                    let ok = (0..n).all(|x| {
                        (0..n).all(|y| {
                            (0..n).all(|z| {
                                l[x][r[y][z]] == l[x][l[y][z]]
                                    && l[r[x][y]][z] == r[x][l[y][z]]
                                    && r[l[x][y]][z] == r[r[x][y]][z]
                            })
                        })
                    });
                    ok.then(|| canonical_diring(g, &autos, l, r))
                })
            })
            .collect()
    })?;
    let unique: BTreeMap<Vec<u8>, (Table, Table)> =
        found.into_iter().map(|(k, l, r)| (k, (l, r))).collect();
    let built: Vec<(Vec<u8>, DiringTable)> = unique
        .into_iter()
        .map(|(k, (l, r))| {
            crate::diring::verify_left_diring(g.clone(), l, r)
                .map(|d| (k, d))
                .map_err(|rep| {
                    Error::Disagreement(format!("census candidate fails validation:\n{rep}"))
                })
        })
        .collect::<Result<_>>()?;
    opts.run(|| {
        built
            .into_par_iter()
            .map(|(k, d)| {
                let d = Arc::new(d);
                let summary = summarize_diring(&d)?;
                Ok(CensusRecord {
                    structure: Arc::unwrap_or_clone(d),
                    canonical_form: k,
                    summary,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?
}

/// Left dirings on every abelian group of order `1..=max_order`.
pub fn census_up_to(max_order: usize, opts: &CensusOptions) -> Result<Vec<DiringRecord>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        for g in groups_of_order(n) {
            out.extend(enumerate_left_dirings(&g, opts)?);
        }
    }
    Ok(out)
}

/// Parse a group description: `Z1`, `Z4`, `Z2xZ2`, or `Z2xZ4` (any order of factors).
pub fn parse_group_spec(spec: &str) -> Result<FiniteAbelianGroup> {
    let bad = || {
        Error::Precondition(format!(
            "bad group spec {spec:?}; expected e.g. Z4 or Z2xZ2"
        ))
    };
    let mut factors = Vec::new();
    for part in spec.trim().split(['x', 'X', '*']) {
        let digits = part.trim().strip_prefix(['Z', 'C']).ok_or_else(bad)?;
        let k: usize = digits.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        if k > 1 {
            factors.push(k);
        }
    }
    let order: usize = factors.iter().product();
    if order > crate::group::MAX_ORDER {
        return Err(Error::CapExceeded {
            what: "group spec",
            order,
            cap: crate::group::MAX_ORDER,
        });
    }
    let g = FiniteAbelianGroup::from_invariants(&factors);
    Ok(FiniteAbelianGroup::from_invariants(&g.invariant_factors()))
}

fn canonical_module(
    m: &FiniteAbelianGroup,
    autos: &[Vec<Elem>],
    l: &Table,
    r: &Table,
) -> (Vec<u8>, Table, Table) {
    let k = m.order();
    let mut prefix = invariant_name(&m.invariant_factors()).into_bytes();
    prefix.push(0);
    let mut best: Option<(Vec<u8>, Table, Table)> = None;
    for s in autos {
        let mut inv = vec![0; k];
        for (x, &y) in s.iter().enumerate() {
            inv[y] = x;
        }
        let relabel = |t: &Table| -> Table {
            t.iter()
                .map(|row| (0..k).map(|x| s[row[inv[x]]]).collect())
                .collect()
        };
        let (tl, tr) = (relabel(l), relabel(r));
        let mut bytes = prefix.clone();
        push_table(&mut bytes, &tl);
        push_table(&mut bytes, &tr);
        if best.as_ref().map_or(true, |b| bytes < b.0) {
            best = Some((bytes, tl, tr));
        }
    }
    best.expect("the identity is an automorphism")
}

/// Canonical form of a module up to isomorphism over its fixed diring.
pub fn module_canonical_form(m: &LeftModuleTable) -> Vec<u8> {
    let (std, map) = to_standard(m.carrier());
    let transport = |t: &Table| -> Table {
        t.iter()
            .map(|row| {
                let mut out = vec![0; map.len()];
                for (x, &y) in row.iter().enumerate() {
                    out[map[x]] = map[y];
                }
                out
            })
            .collect()
    };
    let (l, r) = (transport(m.lact_table()), transport(m.ract_table()));
    canonical_module(&std, &std.automorphisms(), &l, &r).0
}

/// Every left module of order `m` over `d`, up to isomorphism, sorted by canonical form.
pub fn enumerate_modules(
    d: &Arc<DiringTable>,
    m: usize,
    opts: &CensusOptions,
) -> Result<Vec<ModuleRecord>> {
    d.left_unit()?;
    opts.cap(
        "module census (diring order)",
        d.order(),
        DEFAULT_MODULE_CAP,
    )?;
    opts.cap("module census (module order)", m, DEFAULT_MODULE_CAP)?;
    let mut out = Vec::new();
    for carrier in groups_of_order(m) {
        out.extend(modules_on(d, &carrier, opts)?);
    }
    Ok(out)
}

fn modules_on(
    d: &Arc<DiringTable>,
    carrier: &FiniteAbelianGroup,
    opts: &CensusOptions,
) -> Result<Vec<ModuleRecord>> {
    let r = d.order();
    let k = carrier.order();
    let actions = biadditive_maps(d.group(), carrier, carrier);
    let units = d.left_halo().elems();
    let rights: Vec<&Table> = actions
        .iter()
        .filter(|t| {
            units.iter().all(|&e| (0..k).all(|x| t[e][x] == x))
                && (0..r).all(|a| {
                    (0..r).all(|b| {
                        (0..k).all(|x| {
                            t[d.lprod(a, b)][x] == t[a][t[b][x]]
                                && t[d.rprod(a, b)][x] == t[a][t[b][x]]
                        })
                    })
                })
        })
        .collect();
    let lefts: Vec<&Table> = actions
        .iter()
        .filter(|t| {
            (0..r).all(|a| (0..r).all(|b| (0..k).all(|x| t[d.lprod(a, b)][x] == t[a][t[b][x]])))
        })
        .collect();
    let autos = carrier.automorphisms();
    let found: Vec<(Vec<u8>, Table, Table)> = opts.run(|| {
        lefts
            .par_iter()
            .flat_map_iter(|l| {
                rights.iter().filter_map(|rt| {
                    let ok = (0..r).all(|a| {
                        (0..r).all(|b| {
                            (0..k).all(|x| {
                                l[d.lprod(a, b)][x] == l[a][rt[b][x]]
                                    && l[d.rprod(a, b)][x] == rt[a][l[b][x]]
                            })
                        })
                    });
                    ok.then(|| canonical_module(carrier, &autos, l, rt))
                })
            })
            .collect()
    })?;
    let unique: BTreeMap<Vec<u8>, (Table, Table)> =
        found.into_iter().map(|(c, l, r)| (c, (l, r))).collect();
    let built: Vec<(Vec<u8>, LeftModuleTable)> = unique
        .into_iter()
        .map(|(c, (l, rt))| {
            verify_module(Arc::clone(d), carrier.clone(), l, rt)
                .map(|m| (c, m))
                .map_err(|rep| {
                    Error::Disagreement(format!("census module fails validation:\n{rep}"))
                })
        })
        .collect::<Result<_>>()?;
    opts.run(|| {
        built
            .into_par_iter()
            .map(|(c, m)| {
                let summary = summarize_module(&m)?;
                Ok(CensusRecord {
                    structure: m,
                    canonical_form: c,
                    summary,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?
}
