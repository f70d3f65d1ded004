//! Ideals, quotient dirings, subdirings and diring homomorphisms.

use std::sync::Arc;

use serde::Serialize;

use crate::diring::{first_pair, DiringTable, Product};
use crate::error::{Error, Result};
use crate::group::is_permutation;
use crate::mask::SubsetMask;
use crate::report::{ValidationReport, Violation};
use crate::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    TwoSided,
    Left,
}

impl IdealKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdealKind::TwoSided => "two-sided",
            IdealKind::Left => "left",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealHandle {
    pub mask: SubsetMask,
    pub kind: IdealKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Simplicity {
    ThreeSimple,
    TwoSimple,
    Neither,
}

impl DiringTable {
    /// Subgroup plus absorption: `R∗S ⊆ S`, and for two-sided ideals also `S∗R ⊆ S`.
    pub fn check_ideal(&self, s: &SubsetMask, kind: IdealKind) -> Result<(), Violation> {
        let g = self.group();
        if !g.is_subgroup(s) {
            return Err(Violation::new(
                "ideal.subgroup",
                vec![],
                format!("{} is not a subgroup", g.format_set(s)),
            ));
        }
        let n = self.order();
        for p in Product::BOTH {
            for a in 0..n {
                for x in s.iter() {
                    let y = self.mul(p, a, x);
                    if !s.contains(y) {
                        return Err(Violation::new(
                            "ideal.left_absorption",
                            vec![a, x],
                            format!(
                                "{}{}{} = {} ∉ {}",
                                g.name(a),
                                p.symbol(),
                                g.name(x),
                                g.name(y),
                                g.format_set(s)
                            ),
                        ));
                    }
                }
            }
        }
        if kind == IdealKind::TwoSided {
            for p in Product::BOTH {
                for x in s.iter() {
                    for a in 0..n {
                        let y = self.mul(p, x, a);
                        if !s.contains(y) {
                            return Err(Violation::new(
                                "ideal.right_absorption",
                                vec![x, a],
                                format!(
                                    "{}{}{} = {} ∉ {}",
                                    g.name(x),
                                    p.symbol(),
                                    g.name(a),
                                    g.name(y),
                                    g.format_set(s)
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, s: &SubsetMask, kind: IdealKind) -> bool {
        self.check_ideal(s, kind).is_ok()
    }

    /// Ideals of the given kind, sorted by (size, member list).
    pub fn enumerate_ideals(&self, kind: IdealKind) -> Result<Vec<IdealHandle>> {
        Ok(self
            .group()
            .enumerate_subgroups()?
            .into_iter()
            .filter(|s| self.is_ideal(s, kind))
            .map(|mask| IdealHandle { mask, kind })
            .collect())
    }

    pub fn ideal_masks(&self, kind: IdealKind) -> Result<Vec<SubsetMask>> {
        Ok(self
            .enumerate_ideals(kind)?
            .into_iter()
            .map(|i| i.mask)
            .collect())
    }

    pub fn simplicity_class(&self) -> Result<Simplicity> {
        let ideals = self.ideal_masks(IdealKind::TwoSided)?;
        let h = self.additive_halo();
        let zero = self.group().zero_mask();
        let full = self.group().full();
        if *h != zero
            && ideals.len() == 3
            && ideals.iter().all(|i| *i == zero || i == h || *i == full)
        {
            return Ok(Simplicity::ThreeSimple);
        }
        if ideals.len() == 2 {
            if *h != zero {
                return Err(Error::Disagreement(
                    "a 2-simple diring with nonzero additive halo".into(),
                ));
            }
            return Ok(Simplicity::TwoSimple);
        }
        Ok(Simplicity::Neither)
    }

    /// `R/I` for a two-sided ideal `I`. Well-definedness of the coset products
    /// is re-verified over all representatives.
    pub fn quotient_diring(self: &Arc<Self>, ideal: &SubsetMask) -> Result<QuotientDiring> {
        self.require_left()?;
        if !self.is_ideal(ideal, IdealKind::TwoSided) {
            return Err(Error::NotAnIdeal("two-sided"));
        }
        let q = self.group().quotient(ideal)?;
        let members = ideal.elems();
        let g = self.group();
        for p in Product::BOTH {
            let bad = first_pair(self.order(), self.order(), |x, y| {
                let base = q.projection[self.mul(p, x, y)];
                members.iter().any(|&i| {
                    members
                        .iter()
                        .any(|&j| q.projection[self.mul(p, g.add(x, i), g.add(y, j))] != base)
                })
            });
            if let Some((x, y)) = bad {
                return Err(Error::Disagreement(format!(
                    "coset product {} is not well defined at {}, {}",
                    p.symbol(),
                    g.name(x),
                    g.name(y)
                )));
            }
        }
        let table = |p: Product| {
            q.reps
                .iter()
                .map(|&x| {
                    q.reps
                        .iter()
                        .map(|&y| q.projection[self.mul(p, x, y)])
                        .collect()
                })
                .collect()
        };
        let diring =
            DiringTable::constructed(q.group, table(Product::Left), table(Product::Right))?;
        let e = self.left_unit()?;
        if !diring.left_halo().contains(q.projection[e]) {
            return Err(Error::Disagreement(
                "e + I is not a left bar-unit of R/I".into(),
            ));
        }
        let quotient = QuotientDiring {
            source: Arc::clone(self),
            ideal: ideal.clone(),
            diring: Arc::new(diring),
            projection: q.projection,
            reps: q.reps,
        };
        let report = quotient.projection_hom().verify();
        if !report.ok {
            return Err(Error::Invalid(report));
        }
        Ok(quotient)
    }

    /// Additive subgroup, closed under both products, meeting the left halo of `R`.
    pub fn is_subdiring(&self, s: &SubsetMask) -> bool {
        self.group().is_subgroup(s)
            && Product::BOTH.iter().all(|&p| {
                s.iter()
                    .all(|x| s.iter().all(|y| s.contains(self.mul(p, x, y))))
            })
            && !s.is_disjoint(self.left_halo())
    }
}

/// `R/I` together with its projection.
#[derive(Clone, Debug)]
pub struct QuotientDiring {
    pub source: Arc<DiringTable>,
    pub ideal: SubsetMask,
    pub diring: Arc<DiringTable>,
    /// Element of `R` ↦ coset index.
    pub projection: Vec<Elem>,
    /// Coset index ↦ least representative in `R`.
    pub reps: Vec<Elem>,
}

impl QuotientDiring {
    pub fn projection_hom(&self) -> DiringHom<'_> {
        DiringHom::new(&self.source, &self.diring, self.projection.clone())
    }
}

/// A map between left dirings, to be checked with [`DiringHom::verify`].
#[derive(Clone, Debug)]
pub struct DiringHom<'a> {
    pub source: &'a DiringTable,
    pub target: &'a DiringTable,
    pub map: Vec<Elem>,
}

impl<'a> DiringHom<'a> {
    pub fn new(source: &'a DiringTable, target: &'a DiringTable, map: Vec<Elem>) -> Self {
        DiringHom {
            source,
            target,
            map,
        }
    }

    pub fn identity(d: &'a DiringTable) -> Self {
        Self::new(d, d, (0..d.order()).collect())
    }

    /// Additivity, both products, and `φ(ℏ×ℓ(R)) ∩ ℏ×ℓ(R') ≠ ∅`.
    pub fn verify(&self) -> ValidationReport {
        let (s, t, f) = (self.source, self.target, &self.map);
        let n = s.order();
        let mut report = ValidationReport::new();
        if f.len() != n || f.iter().any(|&y| y >= t.order()) {
            report.fail(
                "hom.total",
                vec![],
                "map is not a total function into the target",
            );
            return report;
        }
        let name = |x: Elem| s.name(x).to_string();
        if let Some((x, y)) = first_pair(n, n, |x, y| f[s.add(x, y)] != t.add(f[x], f[y])) {
            report.fail(
                "hom.additive",
                vec![x, y],
                format!("φ({0}+{1}) != φ({0})+φ({1})", name(x), name(y)),
            );
        }
        for p in Product::BOTH {
            if let Some((x, y)) = first_pair(n, n, |x, y| f[s.mul(p, x, y)] != t.mul(p, f[x], f[y]))
            {
                report.fail(
                    format!("hom.{}", if p == Product::Left { "lprod" } else { "rprod" }),
                    vec![x, y],
                    format!(
                        "φ({0}{2}{1}) != φ({0}){2}φ({1})",
                        name(x),
                        name(y),
                        p.symbol()
                    ),
                );
            }
        }
        let image_units = s.left_halo().map(f, t.order());
        if image_units.is_disjoint(t.left_halo()) {
            let note = if report.ok {
                " (the only failing condition)"
            } else {
                ""
            };
            report.fail(
                "hom.halo",
                vec![],
                format!("the image of the left halo misses the target's left halo{note}"),
            );
        }
        report
    }

    pub fn kernel(&self) -> IdealHandle {
        let mask = SubsetMask::from_predicate(self.source.order(), |x| self.map[x] == 0);
        IdealHandle {
            mask,
            kind: IdealKind::TwoSided,
        }
    }

    pub fn image(&self) -> SubsetMask {
        SubsetMask::from_elems(self.target.order(), self.map.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().mask.count() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    /// `R/Ker φ → Im φ`, `a + Ker φ ↦ φ(a)`, is a left diring isomorphism onto
    /// the image regarded as a subdiring.
    pub fn first_iso_check(&self) -> Result<bool> {
        if !self.verify().ok {
            return Ok(false);
        }
        let source = Arc::new(self.source.clone());
        let kernel = self.kernel().mask;
        if !source.is_ideal(&kernel, IdealKind::TwoSided) {
            return Ok(false);
        }
        let image = self.image();
        if !self.target.is_subdiring(&image) {
            return Ok(false);
        }
        let quotient = source.quotient_diring(&kernel)?;
        let (sub, embed) = self.target.restrict(&image)?;
        let mut pos = vec![usize::MAX; self.target.order()];
        for (i, &y) in embed.iter().enumerate() {
            pos[y] = i;
        }
        // Induced map, checked for independence of the representative.
        let mut induced = vec![usize::MAX; quotient.diring.order()];
        for x in 0..self.source.order() {
            let c = quotient.projection[x];
            let y = pos[self.map[x]];
            if induced[c] != usize::MAX && induced[c] != y {
                return Ok(false);
            }
            induced[c] = y;
        }
        let hom = DiringHom::new(&quotient.diring, &sub, induced);
        Ok(hom.verify().ok && is_permutation(&hom.map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diring::tests::h;

    fn m(xs: &[Elem]) -> SubsetMask {
        SubsetMask::from_elems(4, xs.iter().copied())
    }

    #[test]
    fn ideals_of_h() {
        let d = h();
        assert!(d.is_ideal(&m(&[0, 3]), IdealKind::TwoSided));
        let err = d.check_ideal(&m(&[0, 2]), IdealKind::TwoSided).unwrap_err();
        assert_eq!(err.witness, vec![2, 1]);
        assert!(err.message.starts_with("b↼·a = a"), "{}", err.message);
        assert!(d.is_ideal(&m(&[0, 2]), IdealKind::Left));
        assert!(d.is_ideal(&m(&[0]), IdealKind::Left) && d.is_ideal(&m(&[0]), IdealKind::TwoSided));
        assert_eq!(
            d.ideal_masks(IdealKind::TwoSided).unwrap(),
            vec![m(&[0]), m(&[0, 3]), m(&[0, 1, 2, 3])]
        );
        assert_eq!(
            d.ideal_masks(IdealKind::Left).unwrap(),
            vec![m(&[0]), m(&[0, 2]), m(&[0, 3]), m(&[0, 1, 2, 3])]
        );
        assert_eq!(d.simplicity_class().unwrap(), Simplicity::ThreeSimple);
        assert_eq!(
            DiringTable::trivial()
                .ideal_masks(IdealKind::TwoSided)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn field_of_two_is_two_simple() {
        assert_eq!(
            DiringTable::integers_mod(2).simplicity_class().unwrap(),
            Simplicity::TwoSimple
        );
        assert_eq!(
            DiringTable::integers_mod(4).simplicity_class().unwrap(),
            Simplicity::Neither
        );
    }

    #[test]
    fn quotient_of_h_by_its_halo() {
        let d = Arc::new(h());
        let q = d.quotient_diring(&m(&[0, 3])).unwrap();
        assert_eq!(q.diring.order(), 2);
        assert_eq!(q.diring.lprod_table(), q.diring.rprod_table());
        assert_eq!(
            q.diring.lprod_table(),
            DiringTable::integers_mod(2).lprod_table()
        );
        // Contains the additive halo, so the quotient has zero additive halo.
        assert_eq!(q.diring.additive_halo().count(), 1);
        let hom = q.projection_hom();
        assert!(hom.verify().ok);
        assert_eq!(hom.kernel().mask, m(&[0, 3]));
        assert!(hom.first_iso_check().unwrap());
        let same = d.quotient_diring(&m(&[0])).unwrap();
        assert_eq!(same.diring.lprod_table(), d.lprod_table());
        assert!(matches!(
            d.quotient_diring(&m(&[0, 2])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn homomorphism_checks() {
        let d = h();
        let id = DiringHom::identity(&d);
        assert!(id.verify().ok);
        assert_eq!(id.kernel().mask, m(&[0]));
        assert!(id.first_iso_check().unwrap());
        let zero = DiringHom::new(&d, &d, vec![0; 4]);
        let r = zero.verify();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].axiom, "hom.halo");
        assert!(r.violations[0].message.contains("only failing"));
    }

    #[test]
    fn subdirings_of_h() {
        let d = h();
        assert!(d.is_subdiring(&m(&[0, 1, 2, 3])));
        assert!(d.is_subdiring(&m(&[0, 2])));
        assert!(!d.is_subdiring(&m(&[0, 3])));
    }
}
