//! Dirings as validated operation tables, and the halo calculus.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, MAX_CONSTRUCTED_ORDER};
use crate::mask::SubsetMask;
use crate::report::ValidationReport;
use crate::{Elem, Table};

/// Which one-sided bar-unit the structure is defined by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// The two products of a diring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// `x ⇀· y`
    Left,
    /// `x ↼· y`
    Right,
}

impl Product {
    pub const BOTH: [Product; 2] = [Product::Left, Product::Right];

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Left => "⇀·",
            Product::Right => "↼·",
        }
    }
}

/// Operation for [`DiringTable::set_op`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOp {
    Add,
    Mul(Product),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiringTable {
    group: FiniteAbelianGroup,
    lprod: Table,
    rprod: Table,
    side: Side,
    left_halo: SubsetMask,
    right_halo: SubsetMask,
    two_sided_halo: SubsetMask,
    additive_halo: SubsetMask,
}

/// The four halos of a diring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halos {
    /// Left bar-units `α ↼· x = x`.
    pub left: SubsetMask,
    /// Right bar-units `x ⇀· α = x`.
    pub right: SubsetMask,
    pub two_sided: SubsetMask,
    pub additive: SubsetMask,
}

/// Check the five dimonoid identities for the products `l` (⇀) and `r` (↼),
/// reporting the first witness per identity in row-major order.
pub(crate) fn check_dimonoid(
    n: usize,
    l: impl Fn(Elem, Elem) -> Elem,
    r: impl Fn(Elem, Elem) -> Elem,
    scope: &str,
    name: impl Fn(Elem) -> String,
    report: &mut ValidationReport,
) {
    type Identity<'a> = (
        &'static str,
        &'static str,
        Box<dyn Fn(Elem, Elem, Elem) -> bool + 'a>,
    );
    let ids: [Identity; 5] = [
        (
            "1",
            "(x⇀y)⇀z = x⇀(y⇀z)",
            Box::new(|x, y, z| l(l(x, y), z) == l(x, l(y, z))),
        ),
        (
            "2",
            "x⇀(y↼z) = x⇀(y⇀z)",
            Box::new(|x, y, z| l(x, r(y, z)) == l(x, l(y, z))),
        ),
        (
            "3",
            "(x↼y)⇀z = x↼(y⇀z)",
            Box::new(|x, y, z| l(r(x, y), z) == r(x, l(y, z))),
        ),
        (
            "4",
            "(x⇀y)↼z = (x↼y)↼z",
            Box::new(|x, y, z| r(l(x, y), z) == r(r(x, y), z)),
        ),
        (
            "5",
            "x↼(y↼z) = (x↼y)↼z",
            Box::new(|x, y, z| r(x, r(y, z)) == r(r(x, y), z)),
        ),
    ];
    for (id, text, holds) in &ids {
        if let Some((x, y, z)) = first_triple(n, |x, y, z| !holds(x, y, z)) {
            report.fail(
                format!("{scope}.{id}"),
                vec![x, y, z],
                format!(
                    "{text} fails at x={}, y={}, z={}",
                    name(x),
                    name(y),
                    name(z)
                ),
            );
        }
    }
}

pub(crate) fn first_triple(
    n: usize,
    bad: impl Fn(Elem, Elem, Elem) -> bool,
) -> Option<(Elem, Elem, Elem)> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub(crate) fn first_pair(
    n: usize,
    m: usize,
    bad: impl Fn(Elem, Elem) -> bool,
) -> Option<(Elem, Elem)> {
    (0..n)
        .flat_map(|x| (0..m).map(move |y| (x, y)))
        .find(|&(x, y)| bad(x, y))
}

/// Validate a left diring. Fails if the structure has no left bar-unit, even
/// when it is a valid right diring.
pub fn verify_left_diring(
    group: FiniteAbelianGroup,
    lprod: Table,
    rprod: Table,
) -> Result<DiringTable, ValidationReport> {
    let d = DiringTable::verify(group, lprod, rprod)?;
    if d.side != Side::Left {
        let mut r = ValidationReport::new();
        r.fail(
            "bar_unit.left",
            vec![],
            "no left bar-unit (the structure is a right diring)",
        );
        return Err(r);
    }
    Ok(d)
}

impl DiringTable {
    /// Validate a one-sided diring: distributivity, the dimonoid identities and
    /// a one-sided bar-unit. Left is preferred when both halos are nonempty.
    pub fn verify(
        group: FiniteAbelianGroup,
        lprod: Table,
        rprod: Table,
    ) -> Result<Self, ValidationReport> {
        let n = group.order();
        let mut report = ValidationReport::new();
        for (name, t) in [("lprod", &lprod), ("rprod", &rprod)] {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                report.fail(
                    format!("{name}.shape"),
                    vec![],
                    format!("{name} is not {n}x{n}"),
                );
            } else if let Some((x, y)) = first_pair(n, n, |x, y| t[x][y] >= n) {
                report.fail(
                    format!("{name}.closure"),
                    vec![x, y],
                    format!("{name} entry out of range"),
                );
            }
        }
        if !report.ok {
            return Err(report);
        }
        let g = &group;
        let name = |x: Elem| g.name(x).to_string();
        for (pname, t) in [("lprod", &lprod), ("rprod", &rprod)] {
            if let Some((x, y, z)) =
                first_triple(n, |x, y, z| t[x][g.add(y, z)] != g.add(t[x][y], t[x][z]))
            {
                report.fail(
                    format!("distrib.{pname}.left"),
                    vec![x, y, z],
                    format!(
                        "{pname}: x*(y+z) != x*y + x*z at x={}, y={}, z={}",
                        name(x),
                        name(y),
                        name(z)
                    ),
                );
            }
            if let Some((x, y, z)) =
                first_triple(n, |x, y, z| t[g.add(y, z)][x] != g.add(t[y][x], t[z][x]))
            {
                report.fail(
                    format!("distrib.{pname}.right"),
                    vec![x, y, z],
                    format!(
                        "{pname}: (y+z)*x != y*x + z*x at x={}, y={}, z={}",
                        name(x),
                        name(y),
                        name(z)
                    ),
                );
            }
        }
        check_dimonoid(
            n,
            |x, y| lprod[x][y],
            |x, y| rprod[x][y],
            "dimonoid",
            name,
            &mut report,
        );

        let left_halo = SubsetMask::from_predicate(n, |a| (0..n).all(|x| rprod[a][x] == x));
        let right_halo = SubsetMask::from_predicate(n, |a| (0..n).all(|x| lprod[x][a] == x));
        let side = if !left_halo.is_empty() {
            Side::Left
        } else if !right_halo.is_empty() {
            Side::Right
        } else {
            report.fail("bar_unit", vec![], "no one-sided bar-unit");
            Side::Left
        };
        if !report.ok {
            return Err(report);
        }

        // The additive halo, computed from every defining bar-unit and by both descriptions.
        let (units, primary, alternative): (
            _,
            Box<dyn Fn(Elem, Elem) -> bool>,
            Box<dyn Fn(Elem, Elem) -> bool>,
        ) = match side {
            Side::Left => (
                &left_halo,
                Box::new(|e, x| lprod[e][x] == 0),
                Box::new(|e, x| lprod[e][x] == 0 && rprod[x][e] == 0),
            ),
            Side::Right => (
                &right_halo,
                Box::new(|e, x| rprod[x][e] == 0),
                Box::new(|e, x| rprod[x][e] == 0 && lprod[e][x] == 0),
            ),
        };
        let e0 = units.first().expect("nonempty halo");
        let additive_halo = SubsetMask::from_predicate(n, |x| primary(e0, x));
        for e in units.iter() {
            let h = SubsetMask::from_predicate(n, |x| primary(e, x));
            if h != additive_halo {
                report.fail(
                    "additive_halo.independence",
                    vec![e0, e],
                    format!(
                        "additive halo differs between bar-units {} and {}",
                        g.name(e0),
                        g.name(e)
                    ),
                );
            }
            let alt = SubsetMask::from_predicate(n, |x| alternative(e, x));
            if alt != additive_halo {
                report.fail(
                    "additive_halo.alternative",
                    vec![e],
                    format!(
                        "two descriptions of the additive halo differ for {}",
                        g.name(e)
                    ),
                );
            }
        }
        drop((primary, alternative));
        if !report.ok {
            return Err(report);
        }
        let two_sided_halo = left_halo.intersection(&right_halo);
        Ok(DiringTable {
            group,
            lprod,
            rprod,
            side,
            left_halo,
            right_halo,
            two_sided_halo,
            additive_halo,
        })
    }

    /// Build a structure assembled internally (quotients, products). It is
    /// still fully verified; a failure here is a bug in the construction.
    pub(crate) fn constructed(
        group: FiniteAbelianGroup,
        lprod: Table,
        rprod: Table,
    ) -> Result<Self> {
        if group.order() > MAX_CONSTRUCTED_ORDER {
            return Err(Error::CapExceeded {
                what: "constructed diring",
                order: group.order(),
                cap: MAX_CONSTRUCTED_ORDER,
            });
        }
        Self::verify(group, lprod, rprod).map_err(Error::Invalid)
    }

    /// A unital ring regarded as a diring with both products equal to the ring product.
    pub fn from_ring(group: FiniteAbelianGroup, mul: Table) -> Result<Self, ValidationReport> {
        Self::verify(group, mul.clone(), mul)
    }

    /// `Z/nZ` as a diring.
    pub fn integers_mod(n: usize) -> Self {
        let g = FiniteAbelianGroup::cyclic(n);
        let mul = (0..n)
            .map(|x| (0..n).map(|y| (x * y) % n).collect())
            .collect();
        Self::from_ring(g, mul).expect("Z/nZ is a ring")
    }

    pub fn trivial() -> Self {
        Self::integers_mod(1)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    #[inline]
    pub fn lprod(&self, x: Elem, y: Elem) -> Elem {
        self.lprod[x][y]
    }

    #[inline]
    pub fn rprod(&self, x: Elem, y: Elem) -> Elem {
        self.rprod[x][y]
    }

    #[inline]
    pub fn mul(&self, p: Product, x: Elem, y: Elem) -> Elem {
        match p {
            Product::Left => self.lprod[x][y],
            Product::Right => self.rprod[x][y],
        }
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.group.add(x, y)
    }

    pub fn lprod_table(&self) -> &Table {
        &self.lprod
    }

    pub fn rprod_table(&self) -> &Table {
        &self.rprod
    }

    pub fn name(&self, x: Elem) -> &str {
        self.group.name(x)
    }

    pub fn halos(&self) -> Halos {
        Halos {
            left: self.left_halo.clone(),
            right: self.right_halo.clone(),
            two_sided: self.two_sided_halo.clone(),
            additive: self.additive_halo.clone(),
        }
    }

    pub fn left_halo(&self) -> &SubsetMask {
        &self.left_halo
    }

    pub fn right_halo(&self) -> &SubsetMask {
        &self.right_halo
    }

    pub fn two_sided_halo(&self) -> &SubsetMask {
        &self.two_sided_halo
    }

    pub fn additive_halo(&self) -> &SubsetMask {
        &self.additive_halo
    }

    /// Has a two-sided bar-unit.
    pub fn is_diring(&self) -> bool {
        !self.two_sided_halo.is_empty()
    }

    /// The least-index left bar-unit.
    pub fn left_unit(&self) -> Result<Elem> {
        self.left_halo
            .first()
            .ok_or_else(|| Error::Precondition("the diring has no left bar-unit".into()))
    }

    pub(crate) fn require_left(&self) -> Result<()> {
        match self.side {
            Side::Left => Ok(()),
            Side::Right => Err(Error::Precondition("a left diring is required".into())),
        }
    }

    /// `A op B` as a subset.
    pub fn set_op(&self, a: &SubsetMask, b: &SubsetMask, op: SetOp) -> SubsetMask {
        let bs = b.elems();
        let n = self.order();
        SubsetMask::from_elems(
            n,
            a.iter().flat_map(|x| {
                bs.iter().map(move |&y| match op {
                    SetOp::Add => self.add(x, y),
                    SetOp::Mul(p) => self.mul(p, x, y),
                })
            }),
        )
    }

    /// The opposite one-sided diring: `x ∘⇀ y = y ↼· x`, `x ∘↼ y = y ⇀· x`.
    pub fn opposite(&self) -> Self {
        let n = self.order();
        let lprod = (0..n)
            .map(|x| (0..n).map(|y| self.rprod[y][x]).collect())
            .collect();
        let rprod = (0..n)
            .map(|x| (0..n).map(|y| self.lprod[y][x]).collect())
            .collect();
        Self::verify(self.group.clone(), lprod, rprod)
            .expect("opposite of a one-sided diring is one")
    }

    /// Restriction to a subset closed under `+` and both products.
    pub fn restrict(&self, s: &SubsetMask) -> Result<(Self, Vec<Elem>)> {
        let (group, embed) = self.group.subgroup(s)?;
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &x) in embed.iter().enumerate() {
            pos[x] = i;
        }
        let restrict_table = |t: &Table| -> Result<Table> {
            embed
                .iter()
                .map(|&x| {
                    embed
                        .iter()
                        .map(|&y| match pos[t[x][y]] {
                            usize::MAX => Err(Error::Precondition(
                                "subset is not closed under the products".into(),
                            )),
                            p => Ok(p),
                        })
                        .collect()
                })
                .collect()
        };
        let lprod = restrict_table(&self.lprod)?;
        let rprod = restrict_table(&self.rprod)?;
        Ok((Self::constructed(group, lprod, rprod)?, embed))
    }

    /// The ring product `x•y = x↼·y + x⇀·y − (x↼·e)⇀·y` for a two-sided bar-unit
    /// `e`, together with a check that `(R, +, •)` is a ring with identity `e`.
    pub fn unital_ring_product(&self, e: Elem) -> Result<UnitalRingProduct> {
        if !self.two_sided_halo.contains(e) {
            return Err(Error::Precondition(format!(
                "{} is not a two-sided bar-unit",
                self.name(e)
            )));
        }
        let n = self.order();
        let g = &self.group;
        let name = |x: Elem| g.name(x).to_string();
        let mut report = ValidationReport::new();
        if let Some((x, y)) = first_pair(n, n, |x, y| {
            self.lprod(self.rprod(x, e), y) != self.rprod(x, self.lprod(e, y))
        }) {
            report.fail(
                "ring_product.parenthesization",
                vec![x, e, y],
                format!("(x↼e)⇀y != x↼(e⇀y) at x={}, y={}", name(x), name(y)),
            );
        }
        let table: Table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let s = g.add(self.rprod(x, y), self.lprod(x, y));
                        g.sub(s, self.lprod(self.rprod(x, e), y))
                    })
                    .collect()
            })
            .collect();
        report.merge(ring_check(g, &table, Some(e)));
        Ok(UnitalRingProduct { table, report })
    }

    /// Check that `x ⊎⇀ y = x + e⇀·y` and `x ⊎↼ y = x↼·e + y` form a digroup with
    /// bar-unit 0 whose halo is the additive halo. Inverses are one-sided: a left
    /// inverse `z ⊎⇀ x = 0` and a right inverse `x ⊎↼ y = 0` are required to exist
    /// but may differ.
    pub fn uplus_digroup_check(&self, e: Elem) -> Result<ValidationReport> {
        if !self.two_sided_halo.contains(e) {
            return Err(Error::Precondition(format!(
                "{} is not a two-sided bar-unit",
                self.name(e)
            )));
        }
        let n = self.order();
        let g = &self.group;
        let name = |x: Elem| g.name(x).to_string();
        let ul = |x: Elem, y: Elem| g.add(x, self.lprod(e, y));
        let ur = |x: Elem, y: Elem| g.add(self.rprod(x, e), y);
        let mut report = ValidationReport::new();
        check_dimonoid(n, ul, ur, "digroup.dimonoid", name, &mut report);
        if let Some(x) = (0..n).find(|&x| ur(0, x) != x || ul(x, 0) != x) {
            report.fail(
                "digroup.bar_unit",
                vec![x],
                format!("0 is not a bar-unit at {}", g.name(x)),
            );
        }
        for x in 0..n {
            let left: Vec<Elem> = (0..n).filter(|&z| ul(z, x) == 0).collect();
            if left != [g.neg(self.lprod(e, x))] {
                report.fail(
                    "digroup.left_inverse",
                    vec![x],
                    format!(
                        "left inverses of {} are not exactly -(e⇀{})",
                        g.name(x),
                        g.name(x)
                    ),
                );
            }
            let right: Vec<Elem> = (0..n).filter(|&y| ur(x, y) == 0).collect();
            if right != [g.neg(self.rprod(x, e))] {
                report.fail(
                    "digroup.right_inverse",
                    vec![x],
                    format!(
                        "right inverses of {} are not exactly -({}↼e)",
                        g.name(x),
                        g.name(x)
                    ),
                );
            }
        }
        let halo =
            SubsetMask::from_predicate(n, |a| (0..n).all(|x| ur(a, x) == x && ul(x, a) == x));
        if halo != self.additive_halo {
            report.fail(
                "digroup.halo",
                vec![],
                format!(
                    "digroup halo {} differs from the additive halo {}",
                    g.format_set(&halo),
                    g.format_set(&self.additive_halo)
                ),
            );
        }
        Ok(report)
    }

    /// `x∗0 = 0 = 0∗x` and `(−x)∗y = x∗(−y) = −(x∗y)` for both products.
    pub fn zero_and_sign_check(&self) -> ValidationReport {
        let n = self.order();
        let g = &self.group;
        let mut report = ValidationReport::new();
        for p in Product::BOTH {
            if let Some(x) = (0..n).find(|&x| self.mul(p, x, 0) != 0 || self.mul(p, 0, x) != 0) {
                report.fail(
                    "distrib.zero",
                    vec![x],
                    format!("{} does not annihilate 0 at {}", p.symbol(), g.name(x)),
                );
            }
            if let Some((x, y)) = first_pair(n, n, |x, y| {
                let m = g.neg(self.mul(p, x, y));
                self.mul(p, g.neg(x), y) != m || self.mul(p, x, g.neg(y)) != m
            }) {
                report.fail(
                    "distrib.sign",
                    vec![x, y],
                    format!(
                        "sign rule fails for {} at {}, {}",
                        p.symbol(),
                        g.name(x),
                        g.name(y)
                    ),
                );
            }
        }
        report
    }

    /// The five statements about the additive halo of a left diring.
    pub fn halo_laws_check(&self) -> Result<ValidationReport> {
        self.require_left()?;
        let n = self.order();
        let g = &self.group;
        let h = &self.additive_halo;
        let all = g.full();
        let mut report = ValidationReport::new();

        // x⇀y ≡ x↼y modulo the additive halo.
        if let Some((x, y)) = first_pair(n, n, |x, y| {
            !h.contains(g.sub(self.lprod(x, y), self.rprod(x, y)))
        }) {
            report.fail(
                "halo.congruent_products",
                vec![x, y],
                format!("{0}⇀{1} ≢ {0}↼{1}", g.name(x), g.name(y)),
            );
        }
        // ℏ+ ↼· R = 0 and R ⇀· ℏ+ = 0
        let zero = g.zero_mask();
        if self.set_op(h, &all, SetOp::Mul(Product::Right)) != zero {
            report.fail("halo.rprod_zero", vec![], "ℏ+(R) ↼· R != 0");
        }
        if self.set_op(&all, h, SetOp::Mul(Product::Left)) != zero {
            report.fail("halo.lprod_zero", vec![], "R ⇀· ℏ+(R) != 0");
        }
        // ℏ+ absorbs both products
        for p in Product::BOTH {
            if !self.set_op(h, &all, SetOp::Mul(p)).is_subset(h)
                || !self.set_op(&all, h, SetOp::Mul(p)).is_subset(h)
            {
                report.fail(
                    "halo.absorbing",
                    vec![],
                    format!("ℏ+(R) is not absorbing for {}", p.symbol()),
                );
            }
        }
        // e + ℏ+ stays inside the left halo
        for e in self.left_halo.iter() {
            let coset = g.sum_set(&SubsetMask::singleton(n, e), h);
            if !coset.is_subset(&self.left_halo) {
                report.fail(
                    "halo.coset_in_left_halo",
                    vec![e],
                    format!("{} + ℏ+(R) is not inside the left halo", g.name(e)),
                );
            }
        }
        // e + ℏ+ is the whole two-sided halo
        for e in self.two_sided_halo.iter() {
            let coset = g.sum_set(&SubsetMask::singleton(n, e), h);
            if coset != self.two_sided_halo {
                report.fail(
                    "halo.coset_is_halo",
                    vec![e],
                    format!("{} + ℏ+(R) != ℏ×(R)", g.name(e)),
                );
            }
        }
        Ok(report)
    }
}

/// Result of [`DiringTable::unital_ring_product`].
#[derive(Clone, Debug)]
pub struct UnitalRingProduct {
    pub table: Table,
    pub report: ValidationReport,
}

/// Ring axioms for `mul` over the additive group `g`, with optional identity.
pub(crate) fn ring_check(
    g: &FiniteAbelianGroup,
    mul: &Table,
    identity: Option<Elem>,
) -> ValidationReport {
    let n = g.order();
    let mut report = ValidationReport::new();
    if let Some((x, y, z)) = first_triple(n, |x, y, z| mul[mul[x][y]][z] != mul[x][mul[y][z]]) {
        report.fail(
            "ring.associative",
            vec![x, y, z],
            format!(
                "product not associative at {}, {}, {}",
                g.name(x),
                g.name(y),
                g.name(z)
            ),
        );
    }
    if let Some((x, y, z)) = first_triple(n, |x, y, z| {
        mul[x][g.add(y, z)] != g.add(mul[x][y], mul[x][z])
            || mul[g.add(y, z)][x] != g.add(mul[y][x], mul[z][x])
    }) {
        report.fail(
            "ring.distributive",
            vec![x, y, z],
            format!(
                "product not distributive at {}, {}, {}",
                g.name(x),
                g.name(y),
                g.name(z)
            ),
        );
    }
    if let Some(e) = identity {
        if let Some(x) = (0..n).find(|&x| mul[e][x] != x || mul[x][e] != x) {
            report.fail(
                "ring.identity",
                vec![e, x],
                format!("{} is not an identity at {}", g.name(e), g.name(x)),
            );
        }
    }
    report
}
