//! Homomorphism and isomorphism search for dirings and modules.
//!
//! Additive maps are parametrised by the images of a cyclic-decomposition
//! basis of the source, so only group homomorphisms are ever generated.

use crate::diring::{DiringTable, Product};
use crate::error::{Error, Result};
use crate::group::{is_permutation, FiniteAbelianGroup};
use crate::ideal::DiringHom;
use crate::left_module::{LeftModuleTable, ModHom};
use crate::Elem;

/// Largest source order for diring homomorphism enumeration.
pub const MAX_HOM_SOURCE: usize = 8;

/// Per-element data preserved by any isomorphism of dirings.
fn diring_fingerprint(d: &DiringTable, x: Elem) -> (usize, bool, bool, bool, usize, usize) {
    let n = d.order();
    let left_zero = (0..n).filter(|&y| d.lprod(x, y) == 0).count();
    let right_zero = (0..n).filter(|&y| d.rprod(x, y) == 0).count();
    (
        d.group().element_order(x),
        d.left_halo().contains(x),
        d.right_halo().contains(x),
        d.additive_halo().contains(x),
        left_zero,
        right_zero,
    )
}

fn module_fingerprint(m: &LeftModuleTable, x: Elem) -> (usize, bool, usize, usize) {
    let r = m.ring().order();
    (
        m.carrier().element_order(x),
        m.module_halo().contains(x),
        (0..r).filter(|&a| m.lact(a, x) == 0).count(),
        (0..r).filter(|&a| m.ract(a, x) == 0).count(),
    )
}

/// Additive bijections `G → H` whose basis images pass `allow`.
fn additive_bijections<'a>(
    g: &'a FiniteAbelianGroup,
    h: &'a FiniteAbelianGroup,
    basis: &'a crate::group::Basis,
    allow: impl Fn(Elem, Elem) -> bool + 'a,
) -> impl Iterator<Item = Vec<Elem>> + 'a {
    g.homs_into(h, basis, move |i, y| {
        h.element_order(y) == basis.orders[i] && allow(basis.gens[i], y)
    })
    .filter(|f| is_permutation(f))
}

/// An isomorphism of left (or right) dirings `x → y`, if one exists.
pub fn diring_isomorphism(x: &DiringTable, y: &DiringTable) -> Option<Vec<Elem>> {
    if x.order() != y.order() || x.side() != y.side() {
        return None;
    }
    let fx: Vec<_> = (0..x.order()).map(|e| diring_fingerprint(x, e)).collect();
    let fy: Vec<_> = (0..y.order()).map(|e| diring_fingerprint(y, e)).collect();
    let (mut sx, mut sy) = (fx.clone(), fy.clone());
    sx.sort();
    sy.sort();
    if sx != sy {
        return None;
    }
    let basis = x.group().basis();
    let found =
        additive_bijections(x.group(), y.group(), &basis, |a, b| fx[a] == fy[b]).find(|f| {
            (0..x.order()).all(|a| fx[a] == fy[f[a]])
                && Product::BOTH.iter().all(|&p| {
                    (0..x.order())
                        .all(|a| (0..x.order()).all(|b| f[x.mul(p, a, b)] == y.mul(p, f[a], f[b])))
                })
        });
    found.filter(|f| DiringHom::new(x, y, f.clone()).verify().ok)
}

pub fn are_isomorphic(x: &DiringTable, y: &DiringTable) -> bool {
    diring_isomorphism(x, y).is_some()
}

/// All diring homomorphisms `source → target`, including the halo condition.
pub fn diring_homs(source: &DiringTable, target: &DiringTable) -> Result<Vec<Vec<Elem>>> {
    if source.order() > MAX_HOM_SOURCE {
        return Err(Error::CapExceeded {
            what: "diring hom enumeration",
            order: source.order(),
            cap: MAX_HOM_SOURCE,
        });
    }
    let basis = source.group().basis();
    Ok(source
        .group()
        .homs_into(target.group(), &basis, |_, _| true)
        .filter(|f| DiringHom::new(source, target, f.clone()).verify().ok)
        .collect())
}

/// A module isomorphism `m → n` over the same diring, if one exists.
pub fn module_isomorphism(m: &LeftModuleTable, n: &LeftModuleTable) -> Option<Vec<Elem>> {
    if m.ring() != n.ring() || m.order() != n.order() {
        return None;
    }
    let fm: Vec<_> = (0..m.order()).map(|x| module_fingerprint(m, x)).collect();
    let fn_: Vec<_> = (0..n.order()).map(|x| module_fingerprint(n, x)).collect();
    let (mut sm, mut sn) = (fm.clone(), fn_.clone());
    sm.sort();
    sn.sort();
    if sm != sn {
        return None;
    }
    let basis = m.carrier().basis();
    let found = additive_bijections(m.carrier(), n.carrier(), &basis, |a, b| fm[a] == fn_[b])
        .find(|f| ModHom::new(m, n, f.clone()).verify().ok);
    found
}

pub fn modules_isomorphic(m: &LeftModuleTable, n: &LeftModuleTable) -> bool {
    module_isomorphism(m, n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diring::tests::h;

    #[test]
    fn h_is_isomorphic_to_itself_and_relabeling() {
        let d = h();
        assert_eq!(diring_isomorphism(&d, &d), Some(vec![0, 1, 2, 3]));
        // swapping a and b fixes both product tables
        let swap = [0, 2, 1, 3];
        let relabel = |t: &crate::Table| -> crate::Table {
            (0..4)
                .map(|x| (0..4).map(|y| swap[t[swap[x]][swap[y]]]).collect())
                .collect()
        };
        let r = DiringTable::verify(
            d.group().clone(),
            relabel(d.lprod_table()),
            relabel(d.rprod_table()),
        )
        .unwrap();
        assert!(are_isomorphic(&d, &r));
    }

    #[test]
    fn h_is_not_isomorphic_to_its_opposite() {
        let d = h();
        assert!(!are_isomorphic(&d, &d.opposite()));
    }

    #[test]
    fn diring_homs_between_small_rings() {
        let z2 = DiringTable::integers_mod(2);
        let z4 = DiringTable::integers_mod(4);
        // only the identity: the zero map sends the unit outside the halo
        assert_eq!(diring_homs(&z2, &z2).unwrap(), vec![vec![0, 1]]);
        assert_eq!(diring_homs(&z4, &z2).unwrap(), vec![vec![0, 1, 0, 1]]);
        assert!(diring_homs(&z2, &z4).unwrap().is_empty());
        let big = DiringTable::integers_mod(9);
        assert!(matches!(
            diring_homs(&big, &z2),
            Err(Error::CapExceeded { .. })
        ));
    }
}
