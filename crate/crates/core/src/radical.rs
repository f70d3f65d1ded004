//! Annihilators, `(I:R)`, 3-primitive ideals and the 3-radical.
//!
//! Every quantity with two independent descriptions is computed both ways and
//! compared. A mismatch is returned as [`Error::Disagreement`].
//!
//! The 3-irreducible modules that matter are, up to isomorphism, exactly the
//! quotients `R/I` by 3-maximal left ideals `I`, so everything here scans the
//! left-ideal lattice instead of enumerating abstract modules.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::diring::{DiringTable, Product};
use crate::error::{check_cap, Error, Result};
use crate::group::{FiniteAbelianGroup, MAX_CONSTRUCTED_ORDER};
use crate::ideal::{DiringHom, IdealKind, QuotientDiring};
use crate::iso::module_isomorphism;
use crate::left_module::{direct_sum, regular_module, verify_module, LeftModuleTable};
use crate::mask::SubsetMask;
use crate::report::ValidationReport;
use crate::{Elem, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub three_maximal_left_ideals: Vec<SubsetMask>,
    pub primitive_ideals: Vec<SubsetMask>,
    pub rad3_via_annihilators: SubsetMask,
    pub rad3_via_primitive_ideals: SubsetMask,
    pub agrees: bool,
    /// No 3-maximal left ideal exists; both radicals are then all of `R`.
    pub family_empty: bool,
}

impl RadicalReport {
    pub fn rad3(&self) -> &SubsetMask {
        &self.rad3_via_annihilators
    }
}

/// A faithful 3-irreducible module `R/I`.
#[derive(Clone, Debug)]
pub struct PrimitiveWitness {
    pub left_ideal: SubsetMask,
    pub module: LeftModuleTable,
}

/// Annihilator of a module, checked to be a two-sided ideal.
pub fn annihilator(m: &LeftModuleTable) -> Result<SubsetMask> {
    let ann = m.annihilator();
    if !m.ring().is_ideal(&ann, IdealKind::TwoSided) {
        return Err(Error::Disagreement(format!(
            "annihilator {} is not a two-sided ideal",
            m.ring().group().format_set(&ann)
        )));
    }
    Ok(ann)
}

pub fn is_faithful(m: &LeftModuleTable) -> bool {
    m.is_faithful()
}

/// `(I:R) = {a | a⇀·R ⊆ I, a↼·R ⊆ I}`, cross-checked against `ann(R/I)`.
/// Also checks that every two-sided ideal inside `I` lies inside `(I:R)`, and
/// for dirings that `(I:R) ⊆ I`.
pub fn colon_ideal(d: &Arc<DiringTable>, ideal: &SubsetMask) -> Result<SubsetMask> {
    if !d.is_ideal(ideal, IdealKind::Left) {
        return Err(Error::NotAnIdeal("left"));
    }
    let n = d.order();
    let by_scan = SubsetMask::from_predicate(n, |a| {
        (0..n).all(|x| ideal.contains(d.lprod(a, x)) && ideal.contains(d.rprod(a, x)))
    });
    let quotient = regular_module(d)?.quotient_module(ideal)?;
    let by_annihilator = annihilator(&quotient.module)?;
    let g = d.group();
    if by_scan != by_annihilator {
        return Err(Error::Disagreement(format!(
            "({}:R) is {} by scan but ann(R/I) = {}",
            g.format_set(ideal),
            g.format_set(&by_scan),
            g.format_set(&by_annihilator)
        )));
    }
    for k in d.ideal_masks(IdealKind::TwoSided)? {
        if k.is_subset(ideal) && !k.is_subset(&by_scan) {
            return Err(Error::Disagreement(format!(
                "two-sided ideal {} ⊆ {} is not inside (I:R)",
                g.format_set(&k),
                g.format_set(ideal)
            )));
        }
    }
    if d.is_diring() && !by_scan.is_subset(ideal) {
        return Err(Error::Disagreement(format!(
            "(I:R) ⊄ I for I = {}",
            g.format_set(ideal)
        )));
    }
    Ok(by_scan)
}

/// Left ideals `I` with `R/I` 3-irreducible.
pub fn three_maximal_left_ideals(d: &Arc<DiringTable>) -> Result<Vec<SubsetMask>> {
    let regular = regular_module(d)?;
    let mut out = Vec::new();
    for ideal in d.ideal_masks(IdealKind::Left)? {
        if regular.is_3_maximal(&ideal)? {
            out.push(ideal);
        }
    }
    Ok(out)
}

/// Some 3-maximal `I` with `(I:R) = 0`; the witness is `R/I`, checked faithful
/// and 3-irreducible.
pub fn is_3_primitive(d: &Arc<DiringTable>) -> Result<Option<PrimitiveWitness>> {
    let regular = regular_module(d)?;
    for ideal in three_maximal_left_ideals(d)? {
        if colon_ideal(d, &ideal)?.count() != 1 {
            continue;
        }
        let module = regular.quotient_module(&ideal)?.module;
        if !module.is_faithful() || !module.is_3_irreducible()? {
            return Err(Error::Disagreement(
                "primitivity witness is not faithful and 3-irreducible".into(),
            ));
        }
        return Ok(Some(PrimitiveWitness {
            left_ideal: ideal,
            module,
        }));
    }
    Ok(None)
}

/// `{(I:R) | I 3-maximal}`, cross-checked against the two-sided ideals `H`
/// with `R/H` 3-primitive.
pub fn three_primitive_ideals(d: &Arc<DiringTable>) -> Result<Vec<SubsetMask>> {
    let maximal = three_maximal_left_ideals(d)?;
    primitive_ideals_from(d, &maximal)
}

fn primitive_ideals_from(d: &Arc<DiringTable>, maximal: &[SubsetMask]) -> Result<Vec<SubsetMask>> {
    let mut via_colon = BTreeSet::new();
    for ideal in maximal {
        via_colon.insert(colon_ideal(d, ideal)?);
    }
    let mut via_quotients = BTreeSet::new();
    for h in d.ideal_masks(IdealKind::TwoSided)? {
        let q = d.quotient_diring(&h)?;
        if is_3_primitive(&q.diring)?.is_some() {
            via_quotients.insert(h);
        }
    }
    if via_colon != via_quotients {
        let show = |s: &BTreeSet<SubsetMask>| {
            s.iter()
                .map(|m| d.group().format_set(m))
                .collect::<Vec<_>>()
                .join(" ")
        };
        return Err(Error::Disagreement(format!(
            "primitive ideals via (I:R): [{}], via primitive quotients: [{}]",
            show(&via_colon),
            show(&via_quotients)
        )));
    }
    Ok(via_colon.into_iter().collect())
}

/// The 3-radical computed as `⋂ ann(R/I)` over 3-maximal `I` and as the
/// intersection of the 3-primitive ideals.
pub fn rad3(d: &Arc<DiringTable>) -> Result<RadicalReport> {
    let maximal = three_maximal_left_ideals(d)?;
    let regular = regular_module(d)?;
    let full = d.group().full();
    let mut via_ann = full.clone();
    for ideal in &maximal {
        via_ann = via_ann.intersection(&annihilator(&regular.quotient_module(ideal)?.module)?);
    }
    let primitive = primitive_ideals_from(d, &maximal)?;
    let via_primitive = primitive.iter().fold(full, |acc, p| acc.intersection(p));
    let agrees = via_ann == via_primitive;
    Ok(RadicalReport {
        family_empty: maximal.is_empty(),
        three_maximal_left_ideals: maximal,
        primitive_ideals: primitive,
        rad3_via_annihilators: via_ann,
        rad3_via_primitive_ideals: via_primitive,
        agrees,
    })
}

/// `rad3 = 0`, cross-checked against the pointwise definition: every `a ≠ 0`
/// acts nontrivially on some 3-irreducible `R/I`.
pub fn is_3_semi_primitive(d: &Arc<DiringTable>) -> Result<bool> {
    if d.order() == 1 {
        return Err(Error::Precondition(
            "semi-primitivity needs a nonzero diring".into(),
        ));
    }
    let report = rad3(d)?;
    if !report.agrees {
        return Err(Error::Disagreement(
            "the two 3-radical formulas differ".into(),
        ));
    }
    let by_radical = report.rad3().count() == 1;
    let regular = regular_module(d)?;
    let mut anns = Vec::new();
    for ideal in &report.three_maximal_left_ideals {
        anns.push(regular.quotient_module(ideal)?.module.annihilator());
    }
    let pointwise = (1..d.order()).all(|a| anns.iter().any(|ann| !ann.contains(a)));
    if by_radical != pointwise {
        return Err(Error::Disagreement(
            "3-semi-primitivity differs between rad3 = 0 and the pointwise test".into(),
        ));
    }
    Ok(by_radical)
}

/// Finite direct product with its projections.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub diring: DiringTable,
    /// Element ↦ coordinate tuple.
    pub coords: Vec<Vec<Elem>>,
}

impl DirectProduct {
    pub fn index(&self, coords: &[Elem], factors: &[&DiringTable]) -> Elem {
        coords
            .iter()
            .zip(factors)
            .fold(0, |acc, (&x, f)| acc * f.order() + x)
    }

    pub fn projection(&self, i: usize) -> Vec<Elem> {
        self.coords.iter().map(|c| c[i]).collect()
    }
}

/// Componentwise operations; checks that the additive and left halos of the
/// product are the products of the halos and that each projection is a
/// surjective diring homomorphism.
pub fn direct_product(factors: &[&DiringTable]) -> Result<DirectProduct> {
    if factors.is_empty() {
        return Err(Error::Precondition(
            "direct product of an empty family".into(),
        ));
    }
    let order: usize = factors.iter().map(|f| f.order()).product();
    check_cap("direct product", order, MAX_CONSTRUCTED_ORDER)?;
    let groups: Vec<&FiniteAbelianGroup> = factors.iter().map(|f| f.group()).collect();
    let (group, coords) = FiniteAbelianGroup::product(&groups);
    let index = |c: &[Elem]| {
        c.iter()
            .zip(factors)
            .fold(0, |acc, (&x, f)| acc * f.order() + x)
    };
    let table = |p: Product| -> Table {
        coords
            .iter()
            .map(|cx| {
                coords
                    .iter()
                    .map(|cy| {
                        let c: Vec<Elem> = factors
                            .iter()
                            .enumerate()
                            .map(|(i, f)| f.mul(p, cx[i], cy[i]))
                            .collect();
                        index(&c)
                    })
                    .collect()
            })
            .collect()
    };
    let diring = DiringTable::constructed(group, table(Product::Left), table(Product::Right))?;
    let componentwise = |halo: fn(&DiringTable) -> &SubsetMask| {
        SubsetMask::from_predicate(order, |x| {
            coords[x]
                .iter()
                .zip(factors)
                .all(|(&c, f)| halo(f).contains(c))
        })
    };
    if *diring.additive_halo() != componentwise(DiringTable::additive_halo) {
        return Err(Error::Disagreement(
            "ℏ+ of a product is not the product of the ℏ+".into(),
        ));
    }
    if *diring.left_halo() != componentwise(DiringTable::left_halo) {
        return Err(Error::Disagreement(
            "left halo of a product is not the product of the left halos".into(),
        ));
    }
    let product = DirectProduct { diring, coords };
    for (i, f) in factors.iter().enumerate() {
        let hom = DiringHom::new(&product.diring, f, product.projection(i));
        if !hom.verify().ok || !hom.is_surjective() {
            return Err(Error::Disagreement(format!(
                "projection {i} is not a surjective homomorphism"
            )));
        }
    }
    Ok(product)
}

/// `φ: R → ∏ R_λ` is injective, a diring homomorphism, and every `π_λ φ` is onto.
pub fn subdirect_product_verify(
    d: &DiringTable,
    factors: &[&DiringTable],
    product: &DirectProduct,
    phi: &[Elem],
) -> ValidationReport {
    let hom = DiringHom::new(d, &product.diring, phi.to_vec());
    let mut report = hom.verify().scoped("subdirect");
    if report.ok && !hom.is_injective() {
        let x = hom.kernel().mask.iter().find(|&x| x != 0).unwrap_or(0);
        report.fail(
            "subdirect.injective",
            vec![x],
            format!("φ({}) = 0", d.name(x)),
        );
    }
    if phi.len() == d.order() && phi.iter().all(|&y| y < product.diring.order()) {
        for (i, f) in factors.iter().enumerate() {
            let image =
                SubsetMask::from_elems(f.order(), phi.iter().map(|&y| product.coords[y][i]));
            if !image.is_full() {
                report.fail(
                    "subdirect.surjective",
                    vec![i],
                    format!("component {i} of φ is not onto"),
                );
            }
        }
    }
    report
}

/// The three equivalent conditions for 3-semi-primitivity, each built
/// constructively.
#[derive(Clone, Debug)]
pub struct SemiPrimitiveReport {
    pub semi_primitive: bool,
    /// `⊕ R/I` over 3-maximal `I` is faithful and completely 3-reducible.
    pub faithful_reducible_module: bool,
    /// `a ↦ (a + ann R/I)` is a subdirect embedding into 3-primitive factors.
    pub subdirect_embedding: bool,
    pub report: ValidationReport,
}

impl SemiPrimitiveReport {
    pub fn agree(&self) -> bool {
        self.semi_primitive == self.faithful_reducible_module
            && self.semi_primitive == self.subdirect_embedding
    }
}

pub fn semi_primitive_conditions(d: &Arc<DiringTable>) -> Result<SemiPrimitiveReport> {
    let semi_primitive = is_3_semi_primitive(d)?;
    let mut report = ValidationReport::new();
    let regular = regular_module(d)?;
    let maximal = three_maximal_left_ideals(d)?;

    // Module route: one summand per isomorphism class of R/I.
    let mut summands: Vec<LeftModuleTable> = Vec::new();
    for ideal in &maximal {
        let q = regular.quotient_module(ideal)?.module;
        if !summands.iter().any(|s| module_isomorphism(s, &q).is_some()) {
            summands.push(q);
        }
    }
    let refs: Vec<&LeftModuleTable> = summands.iter().collect();
    let sum = direct_sum(d, &refs)?;
    let expected_ann = summands.iter().fold(d.group().full(), |acc, s| {
        acc.intersection(&s.annihilator())
    });
    if sum.module.annihilator() != expected_ann {
        report.fail("semi_primitive.annihilator", vec![], "ann(⊕M) != ⋂ ann(M)");
    }
    let pieces: Vec<SubsetMask> = sum
        .embeddings
        .iter()
        .map(|e| SubsetMask::from_elems(sum.module.order(), e.iter().copied()))
        .collect();
    let faithful_reducible_module =
        sum.module.is_faithful() && sum.module.is_internal_decomposition(&pieces)?;

    // Subdirect route: one factor per distinct annihilator.
    let mut anns = BTreeSet::new();
    for s in &summands {
        anns.insert(s.annihilator());
    }
    let quotients: Vec<QuotientDiring> = anns
        .iter()
        .map(|p| d.quotient_diring(p))
        .collect::<Result<_>>()?;
    let subdirect_embedding = if quotients.is_empty() {
        false
    } else {
        let factors: Vec<&DiringTable> = quotients.iter().map(|q| q.diring.as_ref()).collect();
        let product = direct_product(&factors)?;
        let phi: Vec<Elem> = (0..d.order())
            .map(|a| {
                let c: Vec<Elem> = quotients.iter().map(|q| q.projection[a]).collect();
                product.index(&c, &factors)
            })
            .collect();
        let sub = subdirect_product_verify(d, &factors, &product, &phi);
        let mut primitive = true;
        for q in &quotients {
            primitive &= is_3_primitive(&q.diring)?.is_some();
        }
        if !primitive {
            report.fail(
                "semi_primitive.factors",
                vec![],
                "a factor R/ann(R/I) is not 3-primitive",
            );
        }
        sub.ok && primitive
    };

    let out = SemiPrimitiveReport {
        semi_primitive,
        faithful_reducible_module,
        subdirect_embedding,
        report,
    };
    let mut out = out;
    if !out.agree() {
        out.report.fail(
            "semi_primitive.agreement",
            vec![],
            format!(
                "semi-primitive = {}, faithful completely 3-reducible module = {}, subdirect embedding = {}",
                out.semi_primitive, out.faithful_reducible_module, out.subdirect_embedding
            ),
        );
    }
    Ok(out)
}

/// Regard a module over `R/H` as a module over `R` via `a∗x = (a+H)∗x`.
/// Checks that 3-irreducibility is unchanged and `ann_R M` is the preimage of
/// `ann_{R/H} M`.
pub fn inflate_module(q: &QuotientDiring, m: &LeftModuleTable) -> Result<LeftModuleTable> {
    if m.ring() != &q.diring {
        return Err(Error::Precondition(
            "module is not over the quotient diring".into(),
        ));
    }
    let pull = |p: Product| -> Table {
        q.projection
            .iter()
            .map(|&c| (0..m.order()).map(|x| m.act(p, c, x)).collect())
            .collect()
    };
    let out = verify_module(
        Arc::clone(&q.source),
        m.carrier().clone(),
        pull(Product::Left),
        pull(Product::Right),
    )
    .map_err(Error::Invalid)?;
    check_transport(q, &out, m)?;
    Ok(out)
}

/// Regard a module over `R` with `H ⊆ ann M` as a module over `R/H`.
pub fn deflate_module(q: &QuotientDiring, m: &LeftModuleTable) -> Result<LeftModuleTable> {
    if m.ring() != &q.source {
        return Err(Error::Precondition(
            "module is not over the source diring".into(),
        ));
    }
    if !q.ideal.is_subset(&m.annihilator()) {
        return Err(Error::Precondition(
            "the ideal is not inside the annihilator".into(),
        ));
    }
    let push = |p: Product| -> Table {
        q.reps
            .iter()
            .map(|&a| (0..m.order()).map(|x| m.act(p, a, x)).collect())
            .collect()
    };
    let out = verify_module(
        Arc::clone(&q.diring),
        m.carrier().clone(),
        push(Product::Left),
        push(Product::Right),
    )
    .map_err(Error::Invalid)?;
    check_transport(q, m, &out)?;
    Ok(out)
}

fn check_transport(
    q: &QuotientDiring,
    over_r: &LeftModuleTable,
    over_q: &LeftModuleTable,
) -> Result<()> {
    if over_r.is_3_irreducible()? != over_q.is_3_irreducible()? {
        return Err(Error::Disagreement(
            "3-irreducibility changes between R and R/H".into(),
        ));
    }
    let preimage = over_q.annihilator().preimage(&q.projection);
    if over_r.annihilator() != preimage {
        return Err(Error::Disagreement(
            "ann over R/H is not ann over R modulo H".into(),
        ));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct RadicalQuotientReport {
    /// `rad3 = R`, so the quotient is zero and there is nothing to check.
    pub vacuous: bool,
    pub report: ValidationReport,
}

/// `rad3(R/rad3 R) = 0`, every 3-primitive ideal contains `rad3`, and ideals of
/// `R/rad3` correspond to ideals of `R` containing `rad3`.
pub fn radical_quotient_check(d: &Arc<DiringTable>) -> Result<RadicalQuotientReport> {
    let radical = rad3(d)?;
    let rad = radical.rad3().clone();
    let mut report = ValidationReport::new();
    for p in &radical.primitive_ideals {
        if !rad.is_subset(p) {
            report.fail(
                "radical.containment",
                p.elems(),
                "a 3-primitive ideal does not contain rad3",
            );
        }
    }
    if rad.is_full() {
        return Ok(RadicalQuotientReport {
            vacuous: true,
            report,
        });
    }
    let q = d.quotient_diring(&rad)?;
    let inner = rad3(&q.diring)?;
    if inner.rad3().count() != 1 {
        report.fail(
            "radical.quotient",
            inner.rad3().elems(),
            "rad3(R/rad3 R) != 0",
        );
    }
    let upstairs: BTreeSet<SubsetMask> = d
        .ideal_masks(IdealKind::TwoSided)?
        .into_iter()
        .filter(|k| rad.is_subset(k))
        .collect();
    let pulled: BTreeSet<SubsetMask> = q
        .diring
        .ideal_masks(IdealKind::TwoSided)?
        .iter()
        .map(|k| k.preimage(&q.projection))
        .collect();
    if upstairs != pulled {
        report.fail(
            "radical.correspondence",
            vec![],
            "ideals of R/rad3 do not match ideals of R containing rad3",
        );
    }
    Ok(RadicalQuotientReport {
        vacuous: false,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diring::tests::h;
    use crate::left_module::zero_module;

    fn m(xs: &[Elem]) -> SubsetMask {
        SubsetMask::from_elems(4, xs.iter().copied())
    }

    #[test]
    fn radical_of_h() {
        let d = Arc::new(h());
        let r = rad3(&d).unwrap();
        assert!(r.three_maximal_left_ideals.is_empty());
        assert!(r.primitive_ideals.is_empty());
        assert!(r.family_empty && r.agrees);
        assert!(r.rad3().is_full());
        assert!(!is_3_semi_primitive(&d).unwrap());
        assert!(is_3_primitive(&d).unwrap().is_none());
        assert!(radical_quotient_check(&d).unwrap().vacuous);
        let p = semi_primitive_conditions(&d).unwrap();
        assert!(!p.semi_primitive && !p.faithful_reducible_module && !p.subdirect_embedding);
        assert!(p.report.ok, "{}", p.report);
    }

    #[test]
    fn annihilators_on_h() {
        let d = Arc::new(h());
        assert_eq!(
            annihilator(&regular_module(&d).unwrap()).unwrap(),
            m(&[0, 3])
        );
        assert!(annihilator(&zero_module(&d).unwrap()).unwrap().is_full());
    }

    #[test]
    fn colon_ideals_on_h() {
        let d = Arc::new(h());
        assert!(colon_ideal(&d, &m(&[0, 1, 2, 3])).unwrap().is_full());
        // H has no two-sided bar-unit, and (I:R) escapes I here
        assert_eq!(colon_ideal(&d, &m(&[0, 2])).unwrap(), m(&[0, 3]));
        assert!(matches!(
            colon_ideal(&d, &m(&[0, 1])),
            Err(Error::NotAnIdeal(_))
        ));
    }

    #[test]
    fn field_of_two_elements_has_no_three_irreducible_modules() {
        let d = Arc::new(DiringTable::integers_mod(2));
        let r = rad3(&d).unwrap();
        assert!(r.family_empty && r.rad3().is_full());
        assert!(!is_3_semi_primitive(&d).unwrap());
        let t = Arc::new(DiringTable::trivial());
        let r = rad3(&t).unwrap();
        assert!(r.family_empty && r.rad3().is_full());
        assert!(matches!(
            is_3_semi_primitive(&t),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn products_of_h() {
        let d = h();
        let p = direct_product(&[&d, &d]).unwrap();
        let left: Vec<Vec<Elem>> = p
            .diring
            .left_halo()
            .iter()
            .map(|x| p.coords[x].clone())
            .collect();
        assert_eq!(left, vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        let plus: Vec<Vec<Elem>> = p
            .diring
            .additive_halo()
            .iter()
            .map(|x| p.coords[x].clone())
            .collect();
        assert_eq!(plus, vec![vec![0, 0], vec![0, 3], vec![3, 0], vec![3, 3]]);
        let diagonal: Vec<Elem> = (0..4).map(|x| p.index(&[x, x], &[&d, &d])).collect();
        assert!(subdirect_product_verify(&d, &[&d, &d], &p, &diagonal).ok);
        let first: Vec<Elem> = (0..4).map(|x| p.index(&[x, 0], &[&d, &d])).collect();
        let r = subdirect_product_verify(&d, &[&d, &d], &p, &first);
        assert!(r.has("subdirect.surjective") && r.has("subdirect.hom.halo"));
        let single = direct_product(&[&d]).unwrap();
        assert!(crate::iso::are_isomorphic(&single.diring, &d));
        assert!(direct_product(&[]).is_err());
    }

    #[test]
    fn inflation_round_trip() {
        let d = Arc::new(h());
        let reg = regular_module(&d).unwrap();
        let q = d.quotient_diring(&m(&[0])).unwrap();
        let down = deflate_module(&q, &reg).unwrap();
        let up = inflate_module(&q, &down).unwrap();
        assert_eq!(up.lact_table(), reg.lact_table());
        assert_eq!(up.ract_table(), reg.ract_table());
        let q = d.quotient_diring(&m(&[0, 3])).unwrap();
        let down = deflate_module(&q, &reg).unwrap();
        assert_eq!(inflate_module(&q, &down).unwrap(), reg);
        let q = d.quotient_diring(&d.group().full()).unwrap();
        assert!(matches!(
            deflate_module(&q, &reg),
            Err(Error::Precondition(_))
        ));
    }
}
