//! Left modules over a left diring.
//!
//! A module is an abelian group `M` with two actions `R × M → M`, written
//! `a ⇀⊙ x` ([`LeftModuleTable::lact`]) and `a ↼⊙ x` ([`LeftModuleTable::ract`]).
//! The axioms checked by [`verify_module`] are, for `∗ ∈ {⇀⊙, ↼⊙}` and
//! `⋄ ∈ {⇀·, ↼·}`:
//!
//! * `a∗(x+y) = a∗x + a∗y` and `(a+b)∗x = a∗x + b∗x`
//! * `(a⇀·b)⇀⊙x = a⇀⊙(b∗x)`
//! * `(a↼·b)⇀⊙x = a↼⊙(b⇀⊙x)`
//! * `(a⋄b)↼⊙x = a↼⊙(b↼⊙x)`
//! * `e↼⊙x = x` for a left bar-unit `e`

use std::sync::Arc;

use crate::diring::{first_pair, first_triple, DiringTable, Product};
use crate::error::{check_cap, Error, Result};
use crate::group::{is_permutation, FiniteAbelianGroup, MAX_CONSTRUCTED_ORDER};
use crate::ideal::IdealKind;
use crate::iso::module_isomorphism;
use crate::mask::SubsetMask;
use crate::report::ValidationReport;
use crate::{Elem, Table};

/// Largest `|N|^rank(M)` explored when enumerating homomorphisms `M → N`.
pub const MAX_HOM_CANDIDATES: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModuleTable {
    ring: Arc<DiringTable>,
    carrier: FiniteAbelianGroup,
    lact: Table,
    ract: Table,
    chosen_e: Elem,
    halo: SubsetMask,
}

/// Validate a left module. The least-index left bar-unit becomes `chosen_e`,
/// and the unit axiom and the additive halo are re-checked against every
/// other left bar-unit.
pub fn verify_module(
    ring: Arc<DiringTable>,
    carrier: FiniteAbelianGroup,
    lact: Table,
    ract: Table,
) -> Result<LeftModuleTable, ValidationReport> {
    let r = ring.order();
    let m = carrier.order();
    let mut report = ValidationReport::new();
    if ring.require_left().is_err() {
        report.fail(
            "module.ring",
            vec![],
            "modules are defined over left dirings",
        );
        return Err(report);
    }
    for (name, t) in [("lact", &lact), ("ract", &ract)] {
        if t.len() != r || t.iter().any(|row| row.len() != m) {
            report.fail(
                format!("{name}.shape"),
                vec![],
                format!("{name} is not {r}x{m}"),
            );
        } else if let Some((a, x)) = first_pair(r, m, |a, x| t[a][x] >= m) {
            report.fail(
                format!("{name}.closure"),
                vec![a, x],
                format!("{name} entry out of range"),
            );
        }
    }
    if !report.ok {
        return Err(report);
    }
    let g = &carrier;
    let rn = |a: Elem| ring.name(a).to_string();
    let mn = |x: Elem| g.name(x).to_string();
    let act = |p: Product, a: Elem, x: Elem| match p {
        Product::Left => lact[a][x],
        Product::Right => ract[a][x],
    };
    let sym = |p: Product| match p {
        Product::Left => "⇀⊙",
        Product::Right => "↼⊙",
    };
    let tag = |p: Product| match p {
        Product::Left => "l",
        Product::Right => "r",
    };

    for p in Product::BOTH {
        // a∗(x+y) = a∗x + a∗y
        let bad = (0..r).find_map(|a| {
            first_pair(m, m, |x, y| {
                act(p, a, g.add(x, y)) != g.add(act(p, a, x), act(p, a, y))
            })
            .map(|(x, y)| (a, x, y))
        });
        if let Some((a, x, y)) = bad {
            report.fail(
                format!("module.additive.element.{}", tag(p)),
                vec![a, x, y],
                format!(
                    "a{0}(x+y) != a{0}x + a{0}y at a={1}, x={2}, y={3}",
                    sym(p),
                    rn(a),
                    mn(x),
                    mn(y)
                ),
            );
        }
        // (a+b)∗x = a∗x + b∗x
        let bad = (0..m).find_map(|x| {
            first_pair(r, r, |a, b| {
                act(p, ring.add(a, b), x) != g.add(act(p, a, x), act(p, b, x))
            })
            .map(|(a, b)| (a, b, x))
        });
        if let Some((a, b, x)) = bad {
            report.fail(
                format!("module.additive.scalar.{}", tag(p)),
                vec![a, b, x],
                format!(
                    "(a+b){0}x != a{0}x + b{0}x at a={1}, b={2}, x={3}",
                    sym(p),
                    rn(a),
                    rn(b),
                    mn(x)
                ),
            );
        }
    }
    let scan = |f: &dyn Fn(Elem, Elem, Elem) -> bool| -> Option<(Elem, Elem, Elem)> {
        for a in 0..r {
            for b in 0..r {
                for x in 0..m {
                    if !f(a, b, x) {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    };
    type Axiom<'a> = (
        &'static str,
        &'static str,
        Box<dyn Fn(Elem, Elem, Elem) -> bool + 'a>,
    );
    let axioms: [Axiom; 5] = [
        (
            "module.lact.lprod_lact",
            "(a⇀·b)⇀⊙x = a⇀⊙(b⇀⊙x)",
            Box::new(|a, b, x| lact[ring.lprod(a, b)][x] == lact[a][lact[b][x]]),
        ),
        (
            "module.lact.lprod_ract",
            "(a⇀·b)⇀⊙x = a⇀⊙(b↼⊙x)",
            Box::new(|a, b, x| lact[ring.lprod(a, b)][x] == lact[a][ract[b][x]]),
        ),
        (
            "module.lact.rprod",
            "(a↼·b)⇀⊙x = a↼⊙(b⇀⊙x)",
            Box::new(|a, b, x| lact[ring.rprod(a, b)][x] == ract[a][lact[b][x]]),
        ),
        (
            "module.ract.lprod",
            "(a⇀·b)↼⊙x = a↼⊙(b↼⊙x)",
            Box::new(|a, b, x| ract[ring.lprod(a, b)][x] == ract[a][ract[b][x]]),
        ),
        (
            "module.ract.rprod",
            "(a↼·b)↼⊙x = a↼⊙(b↼⊙x)",
            Box::new(|a, b, x| ract[ring.rprod(a, b)][x] == ract[a][ract[b][x]]),
        ),
    ];
    for (id, text, holds) in &axioms {
        if let Some((a, b, x)) = scan(holds.as_ref()) {
            report.fail(
                *id,
                vec![a, b, x],
                format!("{text} fails at a={}, b={}, x={}", rn(a), rn(b), mn(x)),
            );
        }
    }
    drop(axioms);

    let units = ring.left_halo();
    let chosen_e = units.first().expect("left diring has a left bar-unit");
    for e in units.iter() {
        if let Some(x) = (0..m).find(|&x| ract[e][x] != x) {
            report.fail(
                "module.bar_unit",
                vec![e, x],
                format!("{}↼⊙{} != {}", rn(e), mn(x), mn(x)),
            );
        }
    }
    let halo = SubsetMask::from_predicate(m, |x| lact[chosen_e][x] == 0);
    for e in units.iter() {
        if SubsetMask::from_predicate(m, |x| lact[e][x] == 0) != halo {
            report.fail(
                "module.halo_independence",
                vec![chosen_e, e],
                format!(
                    "ℏ+(M) differs between bar-units {} and {}",
                    rn(chosen_e),
                    rn(e)
                ),
            );
        }
    }
    if !report.ok {
        return Err(report);
    }
    Ok(LeftModuleTable {
        ring,
        carrier,
        lact,
        ract,
        chosen_e,
        halo,
    })
}

/// The left regular module `_RR`.
pub fn regular_module(ring: &Arc<DiringTable>) -> Result<LeftModuleTable> {
    ring.require_left()?;
    verify_module(
        Arc::clone(ring),
        ring.group().clone(),
        ring.lprod_table().clone(),
        ring.rprod_table().clone(),
    )
    .map_err(|r| Error::Disagreement(format!("the regular module fails the module axioms:\n{r}")))
}

pub fn zero_module(ring: &Arc<DiringTable>) -> Result<LeftModuleTable> {
    ring.require_left()?;
    let t = vec![vec![0]; ring.order()];
    verify_module(
        Arc::clone(ring),
        FiniteAbelianGroup::trivial(),
        t.clone(),
        t,
    )
    .map_err(Error::Invalid)
}

/// Result of [`LeftModuleTable::quotient_module`].
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub module: LeftModuleTable,
    /// Element of `M` ↦ coset index.
    pub projection: Vec<Elem>,
    pub reps: Vec<Elem>,
}

/// Result of [`direct_sum`].
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: LeftModuleTable,
    /// Element ↦ coordinate tuple.
    pub coords: Vec<Vec<Elem>>,
    /// Summand `i` embedded into the sum.
    pub embeddings: Vec<Vec<Elem>>,
}

/// Outcome of the complete 3-reducibility search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reducibility {
    /// Internal decomposition into 3-irreducible submodules, if one exists.
    pub decomposition: Option<Vec<SubsetMask>>,
    /// Set for the zero module, which is the empty direct sum.
    pub empty_decomposition: bool,
}

impl Reducibility {
    pub fn holds(&self) -> bool {
        self.decomposition.is_some()
    }
}

/// The three equivalent conditions characterising 3-irreducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub irreducible: bool,
    /// `M = R⇀⊙x₀` and `ℏ+(M) = R↼⊙x₁` for all nonzero even `x₀` and odd `x₁`.
    pub cyclic: bool,
    /// A 3-maximal left ideal `I` with `M ≅ R/I`.
    pub regular_quotient: Option<SubsetMask>,
}

impl IrreducibilityReport {
    pub fn agree(&self) -> bool {
        self.irreducible == self.cyclic && self.cyclic == self.regular_quotient.is_some()
    }
}

impl LeftModuleTable {
    pub fn ring(&self) -> &Arc<DiringTable> {
        &self.ring
    }

    pub fn carrier(&self) -> &FiniteAbelianGroup {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    #[inline]
    pub fn lact(&self, a: Elem, x: Elem) -> Elem {
        self.lact[a][x]
    }

    #[inline]
    pub fn ract(&self, a: Elem, x: Elem) -> Elem {
        self.ract[a][x]
    }

    #[inline]
    pub fn act(&self, p: Product, a: Elem, x: Elem) -> Elem {
        match p {
            Product::Left => self.lact[a][x],
            Product::Right => self.ract[a][x],
        }
    }

    pub fn lact_table(&self) -> &Table {
        &self.lact
    }

    pub fn ract_table(&self) -> &Table {
        &self.ract
    }

    pub fn chosen_e(&self) -> Elem {
        self.chosen_e
    }

    /// The same module with a different left bar-unit used for the halo and
    /// the even/odd decomposition.
    pub fn with_unit(&self, e: Elem) -> Result<Self> {
        if !self.ring.left_halo().contains(e) {
            return Err(Error::Precondition(format!(
                "{} is not a left bar-unit",
                self.ring.name(e)
            )));
        }
        let mut out = self.clone();
        out.chosen_e = e;
        out.halo = SubsetMask::from_predicate(self.order(), |x| self.lact[e][x] == 0);
        Ok(out)
    }

    /// `ℏ+(M) = {x | e⇀⊙x = 0}`.
    pub fn module_halo(&self) -> &SubsetMask {
        &self.halo
    }

    /// `(M₀, M₁) = (e⇀⊙M, ℏ+(M))`.
    pub fn decompose(&self) -> (SubsetMask, SubsetMask) {
        let even = SubsetMask::from_elems(self.order(), self.lact[self.chosen_e].iter().copied());
        (even, self.halo.clone())
    }

    /// Even and odd components `x = x₀ + x₁`.
    pub fn components(&self, x: Elem) -> (Elem, Elem) {
        let x0 = self.lact[self.chosen_e][x];
        (x0, self.carrier.sub(x, x0))
    }

    pub fn is_submodule(&self, n: &SubsetMask) -> bool {
        self.carrier.is_subgroup(n)
            && (0..self.ring.order()).all(|a| {
                n.iter()
                    .all(|x| n.contains(self.lact[a][x]) && n.contains(self.ract[a][x]))
            })
    }

    /// Submodules sorted by (size, member list).
    pub fn enumerate_submodules(&self) -> Result<Vec<SubsetMask>> {
        Ok(self
            .carrier
            .enumerate_subgroups()?
            .into_iter()
            .filter(|s| self.is_submodule(s))
            .collect())
    }

    /// `ℏ+(M)` is a proper submodule strictly between 0 and M, and the only one.
    pub fn is_3_irreducible(&self) -> Result<bool> {
        let zero = self.carrier.zero_mask();
        let full = self.carrier.full();
        if self.halo == zero || self.halo == full {
            return Ok(false);
        }
        let subs = self.enumerate_submodules()?;
        Ok(subs
            .iter()
            .all(|s| *s == zero || *s == full || *s == self.halo))
    }

    /// A submodule regarded as a module, with its embedding.
    pub fn submodule(&self, n: &SubsetMask) -> Result<(LeftModuleTable, Vec<Elem>)> {
        if !self.is_submodule(n) {
            return Err(Error::NotASubmodule);
        }
        let (carrier, embed) = self.carrier.subgroup(n)?;
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &x) in embed.iter().enumerate() {
            pos[x] = i;
        }
        let restrict = |t: &Table| -> Table {
            t.iter()
                .map(|row| embed.iter().map(|&x| pos[row[x]]).collect())
                .collect()
        };
        let module = self.constructed(carrier, restrict(&self.lact), restrict(&self.ract))?;
        Ok((module, embed))
    }

    fn constructed(
        &self,
        carrier: FiniteAbelianGroup,
        lact: Table,
        ract: Table,
    ) -> Result<LeftModuleTable> {
        check_cap("constructed module", carrier.order(), MAX_CONSTRUCTED_ORDER)?;
        let mut m =
            verify_module(Arc::clone(&self.ring), carrier, lact, ract).map_err(Error::Invalid)?;
        if m.chosen_e != self.chosen_e {
            m = m.with_unit(self.chosen_e)?;
        }
        Ok(m)
    }

    /// `M/N` with `a∗(x+N) = a∗x + N`; asserts `ℏ+(M/N) = (N + ℏ+(M))/N`.
    pub fn quotient_module(&self, n: &SubsetMask) -> Result<QuotientModule> {
        if !self.is_submodule(n) {
            return Err(Error::NotASubmodule);
        }
        let q = self.carrier.quotient(n)?;
        let table = |t: &Table| -> Table {
            t.iter()
                .map(|row| q.reps.iter().map(|&x| q.projection[row[x]]).collect())
                .collect()
        };
        let module = self.constructed(q.group, table(&self.lact), table(&self.ract))?;
        let expected = self
            .carrier
            .sum_set(n, &self.halo)
            .map(&q.projection, module.order());
        if *module.module_halo() != expected {
            return Err(Error::Disagreement("ℏ+(M/N) != (N + ℏ+(M))/N".into()));
        }
        Ok(QuotientModule {
            module,
            projection: q.projection,
            reps: q.reps,
        })
    }

    /// `M/N` is 3-irreducible; cross-checked against the lattice criterion that
    /// `N + ℏ+(M)` is the unique proper submodule between `N` and `M`.
    pub fn is_3_maximal(&self, n: &SubsetMask) -> Result<bool> {
        let by_quotient = self.quotient_module(n)?.module.is_3_irreducible()?;
        let k = self.carrier.sum_set(n, &self.halo);
        let full = self.carrier.full();
        let between: Vec<SubsetMask> = self
            .enumerate_submodules()?
            .into_iter()
            .filter(|s| n.is_subset(s) && s != n && *s != full)
            .collect();
        let by_lattice = k != *n && k != full && between == [k];
        if by_quotient != by_lattice {
            return Err(Error::Disagreement(format!(
                "3-maximality of {} differs between the quotient and the lattice criterion",
                self.carrier.format_set(n)
            )));
        }
        Ok(by_quotient)
    }

    /// Whether `summands` form an internal direct sum of 3-irreducible submodules.
    pub fn is_internal_decomposition(&self, summands: &[SubsetMask]) -> Result<bool> {
        let mut span = self.carrier.zero_mask();
        for s in summands {
            if !self.is_submodule(s) || !self.submodule(s)?.0.is_3_irreducible()? {
                return Ok(false);
            }
            let next = self.carrier.sum_set(&span, s);
            if next.count() != span.count() * s.count() {
                return Ok(false);
            }
            span = next;
        }
        Ok(span.is_full())
    }

    /// Search for an internal direct sum decomposition into 3-irreducible submodules.
    pub fn is_completely_3_reducible(&self) -> Result<Reducibility> {
        if self.order() == 1 {
            return Ok(Reducibility {
                decomposition: Some(Vec::new()),
                empty_decomposition: true,
            });
        }
        let mut candidates = Vec::new();
        for s in self.enumerate_submodules()? {
            if s.count() > 1 && self.submodule(&s)?.0.is_3_irreducible()? {
                candidates.push(s);
            }
        }
        fn search(
            g: &FiniteAbelianGroup,
            candidates: &[SubsetMask],
            start: usize,
            span: &SubsetMask,
            chosen: &mut Vec<SubsetMask>,
        ) -> bool {
            if span.is_full() {
                return true;
            }
            for i in start..candidates.len() {
                let c = &candidates[i];
                if span.intersection(c).count() != 1 {
                    continue;
                }
                let next = g.sum_set(span, c);
                chosen.push(c.clone());
                if search(g, candidates, i + 1, &next, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::new();
        let found = search(
            &self.carrier,
            &candidates,
            0,
            &self.carrier.zero_mask(),
            &mut chosen,
        );
        Ok(Reducibility {
            decomposition: found.then_some(chosen),
            empty_decomposition: false,
        })
    }

    /// Left translations `L⇀_a = a⇀⊙(−)` and `L↼_a = a↼⊙(−)` as maps on `M`.
    pub fn translations(&self) -> (Table, Table) {
        (self.lact.clone(), self.ract.clone())
    }

    /// Translation identities: `a ↦ L_a` is additive into `End(M)`, and
    /// `L⇀_a L⇀_b = L⇀_a L↼_b = L⇀_{a⇀·b}`, `L↼_a L↼_b = L↼_{a∗b}`,
    /// `L↼_a L⇀_b = L⇀_{a↼·b}`, `L↼_a L↼_e = L↼_a`, `L↼_e = 1`.
    pub fn left_translation_check(&self) -> ValidationReport {
        let (lt, rt) = self.translations();
        let ring = &self.ring;
        let g = &self.carrier;
        let r = ring.order();
        let m = self.order();
        let mut report = ValidationReport::new();
        let compose = |f: &[Elem], h: &[Elem]| -> Vec<Elem> { (0..m).map(|x| f[h[x]]).collect() };
        let plus =
            |f: &[Elem], h: &[Elem]| -> Vec<Elem> { (0..m).map(|x| g.add(f[x], h[x])).collect() };
        for (name, t) in [("L⇀", &lt), ("L↼", &rt)] {
            if let Some(a) = (0..r).find(|&a| !g.is_hom(g, &t[a])) {
                report.fail(
                    "translation.endomorphism",
                    vec![a],
                    format!("{name}_{} is not additive on M", ring.name(a)),
                );
            }
            if let Some((a, b)) = first_pair(r, r, |a, b| t[ring.add(a, b)] != plus(&t[a], &t[b])) {
                report.fail(
                    "translation.additive",
                    vec![a, b],
                    format!(
                        "{name} is not additive in a at {}, {}",
                        ring.name(a),
                        ring.name(b)
                    ),
                );
            }
        }
        if let Some((a, b)) = first_pair(r, r, |a, b| {
            let target = &lt[ring.lprod(a, b)];
            compose(&lt[a], &lt[b]) != *target || compose(&lt[a], &rt[b]) != *target
        }) {
            report.fail(
                "translation.lact_composition",
                vec![a, b],
                format!(
                    "L⇀ composition law fails at {}, {}",
                    ring.name(a),
                    ring.name(b)
                ),
            );
        }
        if let Some((a, b)) = first_pair(r, r, |a, b| {
            let c = compose(&rt[a], &rt[b]);
            c != rt[ring.lprod(a, b)]
                || c != rt[ring.rprod(a, b)]
                || compose(&rt[a], &lt[b]) != lt[ring.rprod(a, b)]
        }) {
            report.fail(
                "translation.ract_composition",
                vec![a, b],
                format!(
                    "L↼ composition law fails at {}, {}",
                    ring.name(a),
                    ring.name(b)
                ),
            );
        }
        let e = self.chosen_e;
        let id: Vec<Elem> = (0..m).collect();
        if rt[e] != id || (0..r).any(|a| compose(&rt[a], &rt[e]) != rt[a]) {
            report.fail("translation.bar_unit", vec![e], "L↼_e is not the identity");
        }
        report
    }

    /// Rebuild a module from translation maps satisfying the translation identities.
    pub fn from_translations(
        ring: Arc<DiringTable>,
        carrier: FiniteAbelianGroup,
        left: Table,
        right: Table,
    ) -> Result<Self, ValidationReport> {
        verify_module(ring, carrier, left, right)
    }

    /// `R⇀⊙ℏ+(M) = 0`, `ℏ+(R)↼⊙M = 0`, `ℏ+(R)⇀⊙M ⊆ ℏ+(M)` and
    /// `M = e⇀⊙M ⊕ ℏ+(M)`, for every left bar-unit `e`.
    pub fn halo_laws_check(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let r = self.ring.order();
        let rh = self.ring.additive_halo();
        for e in self.ring.left_halo().iter() {
            let m = self.with_unit(e).expect("left bar-unit");
            let h = m.module_halo();
            if let Some((a, x)) = (0..r)
                .flat_map(|a| h.iter().map(move |x| (a, x)))
                .find(|&(a, x)| m.lact(a, x) != 0)
            {
                report.fail(
                    "module_halo.lact_zero",
                    vec![a, x],
                    format!(
                        "{}⇀⊙{} != 0 for x in ℏ+(M)",
                        self.ring.name(a),
                        self.carrier.name(x)
                    ),
                );
            }
            for a in rh.iter() {
                if let Some(x) = (0..m.order()).find(|&x| m.ract(a, x) != 0) {
                    report.fail("module_halo.ring_halo_ract", vec![a, x], "ℏ+(R)↼⊙M != 0");
                }
                if let Some(x) = (0..m.order()).find(|&x| !h.contains(m.lact(a, x))) {
                    report.fail("module_halo.ring_halo_lact", vec![a, x], "ℏ+(R)⇀⊙M ⊄ ℏ+(M)");
                }
            }
            let (even, odd) = m.decompose();
            if even.intersection(&odd).count() != 1 || !self.carrier.sum_set(&even, &odd).is_full()
            {
                report.fail(
                    "module_halo.decomposition",
                    vec![e],
                    format!("M != e⇀⊙M ⊕ ℏ+(M) for e = {}", self.ring.name(e)),
                );
            }
            if let Some(x) = even.iter().find(|&x| m.lact(e, x) != x) {
                report.fail("module_halo.even_fixed", vec![e, x], "e⇀⊙x₀ != x₀");
            }
            if let Some(x) = (0..m.order()).find(|&x| {
                let (x0, x1) = m.components(x);
                !even.contains(x0) || !odd.contains(x1) || self.carrier.add(x0, x1) != x
            }) {
                report.fail(
                    "module_halo.components",
                    vec![x],
                    "even/odd components do not decompose x",
                );
            }
            if !m.is_submodule(h) {
                report.fail("module_halo.submodule", vec![e], "ℏ+(M) is not a submodule");
            }
        }
        report
    }

    /// Evaluate the three characterisations of 3-irreducibility. Requires
    /// `0 ≠ ℏ+(M) ≠ M`.
    pub fn irreducibility_conditions(&self) -> Result<IrreducibilityReport> {
        let zero = self.carrier.zero_mask();
        if self.halo == zero || self.halo.is_full() {
            return Err(Error::Precondition(
                "the irreducibility conditions need 0 != ℏ+(M) != M".into(),
            ));
        }
        let irreducible = self.is_3_irreducible()?;
        let r = self.ring.order();
        let (even, odd) = self.decompose();
        let generated = |x: Elem, p: Product| {
            SubsetMask::from_elems(self.order(), (0..r).map(|a| self.act(p, a, x)))
        };
        let cyclic = even
            .iter()
            .filter(|&x| x != 0)
            .all(|x| generated(x, Product::Left).is_full())
            && odd
                .iter()
                .filter(|&x| x != 0)
                .all(|x| generated(x, Product::Right) == odd);

        let mut regular_quotient = None;
        if self.order() <= r {
            let regular = regular_module(&self.ring)?;
            for ideal in self.ring.ideal_masks(IdealKind::Left)? {
                if ideal.count() * self.order() != r || !regular.is_3_maximal(&ideal)? {
                    continue;
                }
                let q = regular.quotient_module(&ideal)?;
                if module_isomorphism(&q.module, self).is_some() {
                    regular_quotient = Some(ideal);
                    break;
                }
            }
        }
        Ok(IrreducibilityReport {
            irreducible,
            cyclic,
            regular_quotient,
        })
    }

    /// Annihilator `{a | a⇀⊙M = 0 and a↼⊙M = 0}`.
    pub fn annihilator(&self) -> SubsetMask {
        SubsetMask::from_predicate(self.ring.order(), |a| {
            self.lact[a].iter().all(|&y| y == 0) && self.ract[a].iter().all(|&y| y == 0)
        })
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().count() == 1
    }
}

/// External direct sum with componentwise addition and actions.
pub fn direct_sum(ring: &Arc<DiringTable>, summands: &[&LeftModuleTable]) -> Result<DirectSum> {
    ring.require_left()?;
    if summands.iter().any(|m| m.ring() != ring) {
        return Err(Error::Precondition(
            "direct sum of modules over different dirings".into(),
        ));
    }
    let order: usize = summands.iter().map(|m| m.order()).product();
    check_cap("direct sum", order, MAX_CONSTRUCTED_ORDER)?;
    let groups: Vec<&FiniteAbelianGroup> = summands.iter().map(|m| m.carrier()).collect();
    let (carrier, coords) = FiniteAbelianGroup::product(&groups);
    let index = |c: &[Elem]| {
        c.iter()
            .zip(&groups)
            .fold(0, |acc, (&x, g)| acc * g.order() + x)
    };
    let table = |p: Product| -> Table {
        (0..ring.order())
            .map(|a| {
                coords
                    .iter()
                    .map(|c| {
                        let img: Vec<Elem> = c
                            .iter()
                            .zip(summands)
                            .map(|(&x, m)| m.act(p, a, x))
                            .collect();
                        index(&img)
                    })
                    .collect()
            })
            .collect()
    };
    let module = verify_module(
        Arc::clone(ring),
        carrier,
        table(Product::Left),
        table(Product::Right),
    )
    .map_err(Error::Invalid)?;
    let expected = SubsetMask::from_predicate(module.order(), |x| {
        coords[x]
            .iter()
            .zip(summands)
            .all(|(&c, m)| m.module_halo().contains(c))
    });
    if *module.module_halo() != expected {
        return Err(Error::Disagreement(
            "ℏ+ of a direct sum is not the sum of the halos".into(),
        ));
    }
    let embeddings = (0..summands.len())
        .map(|i| {
            (0..summands[i].order())
                .map(|x| {
                    let mut c = vec![0; summands.len()];
                    c[i] = x;
                    index(&c)
                })
                .collect()
        })
        .collect();
    Ok(DirectSum {
        module,
        coords,
        embeddings,
    })
}

/// An additive map between modules over the same diring.
#[derive(Clone, Debug)]
pub struct ModHom<'a> {
    pub source: &'a LeftModuleTable,
    pub target: &'a LeftModuleTable,
    pub map: Vec<Elem>,
}

impl<'a> ModHom<'a> {
    pub fn new(source: &'a LeftModuleTable, target: &'a LeftModuleTable, map: Vec<Elem>) -> Self {
        ModHom {
            source,
            target,
            map,
        }
    }

    pub fn verify(&self) -> ValidationReport {
        let (s, t, f) = (self.source, self.target, &self.map);
        let mut report = ValidationReport::new();
        if f.len() != s.order() || f.iter().any(|&y| y >= t.order()) {
            report.fail(
                "modhom.total",
                vec![],
                "map is not a total function into the target",
            );
            return report;
        }
        if !s.carrier().is_hom(t.carrier(), f) {
            report.fail("modhom.additive", vec![], "map is not additive");
        }
        for p in Product::BOTH {
            if let Some((a, x)) = first_pair(s.ring().order(), s.order(), |a, x| {
                f[s.act(p, a, x)] != t.act(p, a, f[x])
            }) {
                report.fail(
                    "modhom.action",
                    vec![a, x],
                    format!(
                        "φ(a∗x) != a∗φ(x) at a={}, x={}",
                        s.ring().name(a),
                        s.carrier().name(x)
                    ),
                );
            }
        }
        report
    }

    pub fn kernel(&self) -> SubsetMask {
        SubsetMask::from_predicate(self.source.order(), |x| self.map[x] == 0)
    }

    pub fn image(&self) -> SubsetMask {
        SubsetMask::from_elems(self.target.order(), self.map.iter().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&y| y == 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && is_permutation(&self.map)
    }

    /// Kernel and image are submodules, `φ(ℏ+(M)) ⊆ ℏ+(N) ∩ Im φ` and
    /// `ℏ+(Im φ) = ℏ+(N) ∩ Im φ`.
    pub fn halo_check(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let image = self.image();
        if !self.source.is_submodule(&self.kernel()) {
            report.fail("modhom.kernel", vec![], "kernel is not a submodule");
        }
        if !self.target.is_submodule(&image) {
            report.fail("modhom.image", vec![], "image is not a submodule");
            return report;
        }
        let meet = self.target.module_halo().intersection(&image);
        if !self
            .source
            .module_halo()
            .map(&self.map, self.target.order())
            .is_subset(&meet)
        {
            report.fail(
                "module_hom.halo_inclusion",
                vec![],
                "φ(ℏ+(M)) ⊄ ℏ+(N) ∩ Im φ",
            );
        }
        match self.target.submodule(&image) {
            Ok((sub, embed)) => {
                if sub.module_halo().map(&embed, self.target.order()) != meet {
                    report.fail(
                        "module_hom.halo_equality",
                        vec![],
                        "ℏ+(Im φ) != ℏ+(N) ∩ Im φ",
                    );
                }
            }
            Err(e) => report.fail("module_hom.halo_equality", vec![], e.to_string()),
        }
        report
    }
}

/// `Hom_R(M, N)`: all additive maps commuting with both actions.
pub fn hom_group(m: &LeftModuleTable, n: &LeftModuleTable) -> Result<Vec<Vec<Elem>>> {
    if m.ring() != n.ring() {
        return Err(Error::Precondition("modules over different dirings".into()));
    }
    let basis = m.carrier().basis();
    let candidates = n
        .order()
        .checked_pow(basis.rank() as u32)
        .unwrap_or(usize::MAX);
    check_cap("hom enumeration", candidates, MAX_HOM_CANDIDATES)?;
    Ok(m.carrier()
        .homs_into(n.carrier(), &basis, |_, _| true)
        .filter(|f| ModHom::new(m, n, f.clone()).verify().ok)
        .collect())
}

/// `End_R M` with pointwise addition and composition `(fg)(x) = f(g(x))`.
#[derive(Clone, Debug)]
pub struct EndRing {
    pub elements: Vec<Vec<Elem>>,
    pub add: Table,
    pub mul: Table,
    pub zero: usize,
    pub identity: usize,
}

impl EndRing {
    pub fn ring_check(&self) -> ValidationReport {
        let n = self.elements.len();
        let mut report = ValidationReport::new();
        if let Some((x, y, z)) = first_triple(n, |x, y, z| {
            self.mul[self.mul[x][y]][z] != self.mul[x][self.mul[y][z]]
        }) {
            report.fail(
                "end.associative",
                vec![x, y, z],
                "composition is not associative",
            );
        }
        if let Some(x) =
            (0..n).find(|&x| self.mul[self.identity][x] != x || self.mul[x][self.identity] != x)
        {
            report.fail("end.identity", vec![x], "identity map is not a unit");
        }
        if let Some((x, y, z)) = first_triple(n, |x, y, z| {
            self.mul[x][self.add[y][z]] != self.add[self.mul[x][y]][self.mul[x][z]]
                || self.mul[self.add[y][z]][x] != self.add[self.mul[y][x]][self.mul[z][x]]
        }) {
            report.fail(
                "end.distributive",
                vec![x, y, z],
                "composition does not distribute",
            );
        }
        report
    }

    /// Every nonzero element has a two-sided inverse.
    pub fn is_division_ring(&self) -> bool {
        let n = self.elements.len();
        n > 1
            && (0..n).filter(|&f| f != self.zero).all(|f| {
                (0..n).any(|g| self.mul[f][g] == self.identity && self.mul[g][f] == self.identity)
            })
    }
}

pub fn end_ring(m: &LeftModuleTable) -> Result<EndRing> {
    let mut elements = hom_group(m, m)?;
    elements.sort();
    let pos = |f: &Vec<Elem>| {
        elements
            .binary_search(f)
            .expect("closed under the ring operations")
    };
    let g = m.carrier();
    let k = elements.len();
    let add = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    pos(&(0..m.order())
                        .map(|x| g.add(elements[i][x], elements[j][x]))
                        .collect())
                })
                .collect()
        })
        .collect();
    let mul = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    pos(&(0..m.order())
                        .map(|x| elements[i][elements[j][x]])
                        .collect())
                })
                .collect()
        })
        .collect();
    let zero = pos(&vec![0; m.order()]);
    let identity = pos(&(0..m.order()).collect());
    Ok(EndRing {
        elements,
        add,
        mul,
        zero,
        identity,
    })
}

/// For 3-irreducible `M`, `N`: every nonzero homomorphism is an isomorphism,
/// and `End_R M` is a division ring.
pub fn schur_check(m: &LeftModuleTable, n: &LeftModuleTable) -> Result<ValidationReport> {
    if !m.is_3_irreducible()? || !n.is_3_irreducible()? {
        return Err(Error::Precondition(
            "Schur's lemma needs 3-irreducible modules".into(),
        ));
    }
    let mut report = ValidationReport::new();
    for f in hom_group(m, n)? {
        let hom = ModHom::new(m, n, f);
        if !hom.is_zero() && !hom.is_bijective() {
            report.fail(
                "schur.hom",
                hom.map.clone(),
                "nonzero homomorphism is not an isomorphism",
            );
            break;
        }
    }
    for x in [m, n] {
        let end = end_ring(x)?;
        report.merge(end.ring_check());
        if !end.is_division_ring() {
            report.fail("schur.division", vec![], "End_R M is not a division ring");
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diring::tests::h;

    fn m(xs: &[Elem]) -> SubsetMask {
        SubsetMask::from_elems(4, xs.iter().copied())
    }

    fn hh() -> LeftModuleTable {
        regular_module(&Arc::new(h())).unwrap()
    }

    #[test]
    fn regular_and_zero_modules_validate() {
        let r = Arc::new(h());
        let reg = regular_module(&r).unwrap();
        assert_eq!(reg.chosen_e(), 1);
        let zero = zero_module(&r).unwrap();
        assert_eq!(zero.order(), 1);
        assert!(zero.left_translation_check().ok);
        assert!(!zero.is_3_irreducible().unwrap());
        assert_eq!(zero.enumerate_submodules().unwrap().len(), 1);
        assert_eq!(zero.annihilator(), r.group().full());
    }

    #[test]
    fn perturbed_regular_module_is_rejected() {
        let reg = hh();
        let mut lact = reg.lact_table().clone();
        lact[1][1] = 1;
        let err = verify_module(
            Arc::clone(reg.ring()),
            reg.carrier().clone(),
            lact,
            reg.ract_table().clone(),
        )
        .unwrap_err();
        assert!(
            err.violations
                .iter()
                .any(|v| v.axiom.starts_with("module.")),
            "{err}"
        );
    }

    #[test]
    fn halo_and_decomposition_of_hh() {
        let reg = hh();
        assert_eq!(reg.module_halo(), &m(&[0, 3]));
        let (even, odd) = reg.decompose();
        assert_eq!(even, m(&[0, 2]));
        assert_eq!(odd, m(&[0, 3]));
        assert_eq!(reg.components(1), (2, 3));
        assert!(reg.halo_laws_check().ok);
        assert!(reg.left_translation_check().ok);
        let (l, r) = reg.translations();
        let rebuilt =
            LeftModuleTable::from_translations(Arc::clone(reg.ring()), reg.carrier().clone(), l, r)
                .unwrap();
        assert_eq!(rebuilt, reg);
    }

    #[test]
    fn submodules_and_irreducibility_of_hh() {
        let reg = hh();
        assert_eq!(
            reg.enumerate_submodules().unwrap(),
            vec![m(&[0]), m(&[0, 2]), m(&[0, 3]), m(&[0, 1, 2, 3])]
        );
        assert!(!reg.is_3_irreducible().unwrap());
        assert_eq!(
            reg.ring().ideal_masks(IdealKind::Left).unwrap(),
            reg.enumerate_submodules().unwrap()
        );
    }

    #[test]
    fn quotients_of_hh() {
        let reg = hh();
        let q = reg.quotient_module(&m(&[0, 2])).unwrap().module;
        assert_eq!(q.order(), 2);
        assert!(q.module_halo().is_full());
        assert!(!reg.is_3_maximal(&m(&[0, 2])).unwrap());
        let q = reg.quotient_module(&m(&[0, 3])).unwrap().module;
        assert_eq!(q.module_halo().count(), 1);
        assert!(!reg.is_3_maximal(&m(&[0, 3])).unwrap());
        let same = reg.quotient_module(&m(&[0])).unwrap().module;
        assert_eq!(same.lact_table(), reg.lact_table());
        assert!(matches!(
            reg.quotient_module(&m(&[0, 1])),
            Err(Error::NotASubmodule)
        ));
    }

    #[test]
    fn direct_sums() {
        let reg = hh();
        let r = Arc::clone(reg.ring());
        let s = direct_sum(&r, &[&reg, &reg]).unwrap();
        assert_eq!(s.module.order(), 16);
        let halo: Vec<Vec<Elem>> = s
            .module
            .module_halo()
            .iter()
            .map(|x| s.coords[x].clone())
            .collect();
        assert_eq!(halo, vec![vec![0, 0], vec![0, 3], vec![3, 0], vec![3, 3]]);
        let zero = zero_module(&r).unwrap();
        let t = direct_sum(&r, &[&reg, &zero]).unwrap();
        assert!(module_isomorphism(&t.module, &reg).is_some());
        let empty = direct_sum(&r, &[]).unwrap();
        assert_eq!(empty.module.order(), 1);
        let other = regular_module(&Arc::new(DiringTable::integers_mod(4))).unwrap();
        assert!(direct_sum(&r, &[&reg, &other]).is_err());
    }

    #[test]
    fn complete_reducibility() {
        let reg = hh();
        assert!(!reg.is_completely_3_reducible().unwrap().holds());
        let zero = zero_module(reg.ring()).unwrap();
        let z = zero.is_completely_3_reducible().unwrap();
        assert!(z.holds() && z.empty_decomposition);
    }

    #[test]
    fn homs_and_endomorphisms() {
        let reg = hh();
        let zero = zero_module(reg.ring()).unwrap();
        assert_eq!(hom_group(&reg, &zero).unwrap(), vec![vec![0; 4]]);
        let end = end_ring(&reg).unwrap();
        assert!(end.ring_check().ok);
        assert_eq!(end.elements[end.identity], vec![0, 1, 2, 3]);
        for f in &end.elements {
            assert!(ModHom::new(&reg, &reg, f.clone()).halo_check().ok);
        }
    }

    #[test]
    fn irreducibility_conditions_on_hh() {
        let reg = hh();
        let p = reg.irreducibility_conditions().unwrap();
        assert!(!p.irreducible && !p.cyclic && p.regular_quotient.is_none());
        assert!(p.agree());
        let q = reg.quotient_module(&m(&[0, 3])).unwrap().module;
        assert!(matches!(
            q.irreducibility_conditions(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn annihilator_of_hh() {
        assert_eq!(hh().annihilator(), m(&[0, 3]));
        assert!(!hh().is_faithful());
    }
}
