//! Finite abelian groups given by Cayley tables.
//!
//! Every validated group stores its zero at index 0, so masks and maps built
//! over isomorphic presentations line up on the zero element.

use std::collections::{BTreeSet, HashMap};

use crate::error::{check_cap, Error, Result};
use crate::mask::SubsetMask;
use crate::report::ValidationReport;
use crate::{Elem, Table};

/// Largest order accepted when validating user-supplied tables.
pub const MAX_ORDER: usize = 24;
/// Largest order for subgroup (and hence ideal/submodule) lattice enumeration.
pub const MAX_LATTICE_ORDER: usize = 24;
/// Largest order of a structure assembled internally (products, direct sums).
pub const MAX_CONSTRUCTED_ORDER: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    names: Vec<String>,
    add: Table,
    neg: Vec<Elem>,
}

/// Validate a group given by labels and a table of label entries.
///
/// Entries that are not declared labels are reported as closure failures.
pub fn validate_abelian_group<S: AsRef<str>>(
    names: Vec<String>,
    rows: &[Vec<S>],
) -> Result<FiniteAbelianGroup, ValidationReport> {
    let index: HashMap<&str, Elem> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut report = ValidationReport::new();
    let mut table = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, entry) in row.iter().enumerate() {
            match index.get(entry.as_ref()) {
                Some(&k) => out.push(k),
                None => {
                    report.fail(
                        "group.closure",
                        vec![i, j],
                        format!(
                            "entry '{}' at row {i}, column {j} is not a declared element",
                            entry.as_ref()
                        ),
                    );
                    out.push(0);
                }
            }
        }
        table.push(out);
    }
    if !report.ok {
        return Err(report);
    }
    FiniteAbelianGroup::validate(names, table)
}

impl FiniteAbelianGroup {
    /// Validate an index table. On success the zero element is moved to index 0
    /// and the other elements keep their relative order.
    pub fn validate(names: Vec<String>, add: Table) -> Result<Self, ValidationReport> {
        Self::validate_capped(names, add, MAX_ORDER)
    }

    pub(crate) fn validate_capped(
        names: Vec<String>,
        add: Table,
        cap: usize,
    ) -> Result<Self, ValidationReport> {
        let n = names.len();
        let mut report = ValidationReport::new();
        if n == 0 {
            report.fail(
                "group.nonempty",
                vec![],
                "a group needs at least one element",
            );
            return Err(report);
        }
        if n > cap {
            report.fail(
                "group.order",
                vec![],
                format!("order {n} exceeds the cap of {cap}"),
            );
            return Err(report);
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            report.fail("group.labels", vec![], "element labels are not distinct");
            return Err(report);
        }
        if add.len() != n || add.iter().any(|r| r.len() != n) {
            report.fail(
                "group.shape",
                vec![],
                format!("addition table is not {n}x{n}"),
            );
            return Err(report);
        }
        for (x, row) in add.iter().enumerate() {
            if let Some(y) = row.iter().position(|&z| z >= n) {
                report.fail(
                    "group.closure",
                    vec![x, y],
                    format!("{}+{} is out of range", names[x], names[y]),
                );
                return Err(report);
            }
        }
        let name = |x: Elem| names[x].as_str();

        let zero = (0..n).find(|&e| (0..n).all(|x| add[e][x] == x && add[x][e] == x));
        'comm: for x in 0..n {
            for y in x + 1..n {
                if add[x][y] != add[y][x] {
                    report.fail(
                        "group.commutative",
                        vec![x, y],
                        format!("{}+{} != {}+{}", name(x), name(y), name(y), name(x)),
                    );
                    break 'comm;
                }
            }
        }
        'assoc: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if add[add[x][y]][z] != add[x][add[y][z]] {
                        report.fail(
                            "group.associative",
                            vec![x, y, z],
                            format!(
                                "({}+{})+{} != {}+({}+{})",
                                name(x),
                                name(y),
                                name(z),
                                name(x),
                                name(y),
                                name(z)
                            ),
                        );
                        break 'assoc;
                    }
                }
            }
        }
        let Some(zero) = zero else {
            report.fail("group.identity", vec![], "no identity element");
            return Err(report);
        };
        let mut neg = vec![0; n];
        for x in 0..n {
            match (0..n).find(|&y| add[x][y] == zero && add[y][x] == zero) {
                Some(y) => neg[x] = y,
                None => {
                    report.fail(
                        "group.inverse",
                        vec![x],
                        format!("no inverse for {}", name(x)),
                    );
                    break;
                }
            }
        }
        if !report.ok {
            return Err(report);
        }

        // Reindex so that zero sits at 0.
        let order: Vec<Elem> = std::iter::once(zero)
            .chain((0..n).filter(|&x| x != zero))
            .collect();
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let names = order.iter().map(|&o| names[o].clone()).collect();
        let add = order
            .iter()
            .map(|&x| order.iter().map(|&y| pos[add[x][y]]).collect())
            .collect();
        let neg = order.iter().map(|&x| pos[neg[x]]).collect();
        Ok(FiniteAbelianGroup { names, add, neg })
    }

    /// Build from a table known to be a group with zero at index 0.
    pub(crate) fn from_trusted(names: Vec<String>, add: Table) -> Self {
        let n = names.len();
        debug_assert!((0..n).all(|x| add[0][x] == x));
        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x][y] == 0).expect("inverse exists"))
            .collect();
        FiniteAbelianGroup { names, add, neg }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group of order `n` with labels `0, 1, .., n-1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n)
            .map(|x| (0..n).map(|y| (x + y) % n).collect())
            .collect();
        Self::from_trusted(names, add)
    }

    /// `Z_{m1} x Z_{m2} x ..`; a single factor gives a cyclic group with plain labels.
    pub fn from_invariants(factors: &[usize]) -> Self {
        match factors {
            [] => Self::trivial(),
            [m] => Self::cyclic(*m),
            _ => {
                let parts: Vec<_> = factors.iter().map(|&m| Self::cyclic(m)).collect();
                Self::product(&parts.iter().collect::<Vec<_>>()).0
            }
        }
    }

    /// Direct product, with elements ordered lexicographically by coordinate
    /// tuple (first factor most significant). Also returns each element's coordinates.
    pub fn product(factors: &[&FiniteAbelianGroup]) -> (Self, Vec<Vec<Elem>>) {
        let coords = mixed_radix(&factors.iter().map(|g| g.order()).collect::<Vec<_>>());
        let index: HashMap<&Vec<Elem>, Elem> =
            coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let names = coords
            .iter()
            .map(|c| {
                let inner: Vec<&str> = c.iter().zip(factors).map(|(&x, g)| g.name(x)).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        let add = coords
            .iter()
            .map(|a| {
                coords
                    .iter()
                    .map(|b| {
                        let s: Vec<Elem> = a
                            .iter()
                            .zip(b)
                            .zip(factors)
                            .map(|((&x, &y), g)| g.add(x, y))
                            .collect();
                        index[&s]
                    })
                    .collect()
            })
            .collect();
        (Self::from_trusted(names, add), coords)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add[x][y]
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add[x][self.neg[y]]
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &Table {
        &self.add
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == label)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order());
        self.names = names;
        self
    }

    /// `k·x`.
    pub fn multiple(&self, k: usize, x: Elem) -> Elem {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn format_set(&self, m: &SubsetMask) -> String {
        let inner: Vec<&str> = m.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn labels(&self, m: &SubsetMask) -> Vec<String> {
        m.iter().map(|x| self.names[x].clone()).collect()
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.order())
    }

    pub fn zero_mask(&self) -> SubsetMask {
        SubsetMask::singleton(self.order(), 0)
    }

    pub fn is_subgroup(&self, m: &SubsetMask) -> bool {
        m.universe() == self.order()
            && m.contains(0)
            && m.iter()
                .all(|x| m.contains(self.neg(x)) && m.iter().all(|y| m.contains(self.add(x, y))))
    }

    /// Smallest subgroup containing `m`.
    pub fn closure(&self, m: &SubsetMask) -> SubsetMask {
        let mut s = self.zero_mask();
        for g in m.iter() {
            s = self.extend_subgroup(&s, g);
        }
        s
    }

    /// `S + <g>` for a subgroup `S`.
    fn extend_subgroup(&self, s: &SubsetMask, g: Elem) -> SubsetMask {
        if s.contains(g) {
            return s.clone();
        }
        let members = s.elems();
        let mut out = s.clone();
        let mut k = g;
        while !s.contains(k) {
            for &x in &members {
                out.insert(self.add(x, k));
            }
            k = self.add(k, g);
        }
        out
    }

    /// All subgroups, sorted by (size, member list).
    pub fn enumerate_subgroups(&self) -> Result<Vec<SubsetMask>> {
        check_cap("subgroup enumeration", self.order(), MAX_LATTICE_ORDER)?;
        let mut seen = BTreeSet::new();
        let mut frontier = vec![self.zero_mask()];
        seen.insert(self.zero_mask());
        while let Some(s) = frontier.pop() {
            for g in 0..self.order() {
                if s.contains(g) {
                    continue;
                }
                let t = self.extend_subgroup(&s, g);
                if seen.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// `{a + b | a ∈ A, b ∈ B}`.
    pub fn sum_set(&self, a: &SubsetMask, b: &SubsetMask) -> SubsetMask {
        let bs = b.elems();
        SubsetMask::from_elems(
            self.order(),
            a.iter()
                .flat_map(|x| bs.iter().map(move |&y| self.add(x, y))),
        )
    }

    /// `x ≡ y (mod A)`, i.e. `x - y ∈ A`.
    pub fn congruent_mod(&self, x: Elem, y: Elem, a: &SubsetMask) -> Result<bool> {
        if !self.is_subgroup(a) {
            return Err(Error::NotASubgroup);
        }
        Ok(a.contains(self.sub(x, y)))
    }

    /// Quotient by a subgroup. Cosets are ordered by their least element index,
    /// which is also the representative; labels are `[rep]`.
    pub fn quotient(&self, n: &SubsetMask) -> Result<Quotient> {
        if !self.is_subgroup(n) {
            return Err(Error::NotASubgroup);
        }
        let mut projection = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for y in n.iter() {
                projection[self.add(x, y)] = c;
            }
        }
        let names = reps
            .iter()
            .map(|&r| format!("[{}]", self.name(r)))
            .collect();
        let add = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| projection[self.add(x, y)]).collect())
            .collect();
        Ok(Quotient {
            group: Self::from_trusted(names, add),
            projection,
            reps,
        })
    }

    /// The subgroup `m` as a group in its own right, plus its embedding.
    pub fn subgroup(&self, m: &SubsetMask) -> Result<(FiniteAbelianGroup, Vec<Elem>)> {
        if !self.is_subgroup(m) {
            return Err(Error::NotASubgroup);
        }
        let embed = m.elems();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &x) in embed.iter().enumerate() {
            pos[x] = i;
        }
        let names = embed.iter().map(|&x| self.names[x].clone()).collect();
        let add = embed
            .iter()
            .map(|&x| embed.iter().map(|&y| pos[self.add(x, y)]).collect())
            .collect();
        Ok((Self::from_trusted(names, add), embed))
    }

    pub fn is_hom(&self, target: &FiniteAbelianGroup, map: &[Elem]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&y| y < target.order())
            && (0..self.order()).all(|x| {
                (0..self.order()).all(|y| map[self.add(x, y)] == target.add(map[x], map[y]))
            })
    }

    /// A generating tuple `g_1, .., g_r` with `G ≅ Z_{o_1} x .. x Z_{o_r}` via
    /// `(c_i) ↦ Σ c_i g_i`. Prefers high-order generators, so cyclic groups get rank 1.
    pub fn basis(&self) -> Basis {
        let n = self.order();
        let orders: Vec<usize> = (0..n).map(|x| self.element_order(x)).collect();
        let mut candidates: Vec<Elem> = (1..n).collect();
        candidates.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));

        fn search(
            g: &FiniteAbelianGroup,
            orders: &[usize],
            candidates: &[Elem],
            span: &SubsetMask,
            chosen: &mut Vec<Elem>,
        ) -> bool {
            if span.count() == g.order() {
                return true;
            }
            for &c in candidates {
                if span.contains(c) {
                    continue;
                }
                let next = g.extend_subgroup(span, c);
                if next.count() == span.count() * orders[c] {
                    chosen.push(c);
                    if search(g, orders, candidates, &next, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }

        let mut gens = Vec::new();
        let found = search(self, &orders, &candidates, &self.zero_mask(), &mut gens);
        assert!(
            found,
            "every finite abelian group has a cyclic decomposition"
        );
        let gen_orders: Vec<usize> = gens.iter().map(|&g| orders[g]).collect();
        let mut coords = vec![Vec::new(); n];
        for c in mixed_radix(&gen_orders) {
            let x = c
                .iter()
                .zip(&gens)
                .fold(0, |acc, (&k, &g)| self.add(acc, self.multiple(k, g)));
            coords[x] = c;
        }
        Basis {
            gens,
            orders: gen_orders,
            coords,
        }
    }

    /// All additive homomorphisms into `target` whose basis images pass `allow`.
    pub fn homs_into<'a>(
        &'a self,
        target: &'a FiniteAbelianGroup,
        basis: &'a Basis,
        allow: impl Fn(usize, Elem) -> bool,
    ) -> impl Iterator<Item = Vec<Elem>> + 'a {
        let choices: Vec<Vec<Elem>> = basis
            .orders
            .iter()
            .enumerate()
            .map(|(i, &o)| {
                (0..target.order())
                    .filter(|&h| target.multiple(o, h) == 0 && allow(i, h))
                    .collect()
            })
            .collect();
        let radix: Vec<usize> = choices.iter().map(|c| c.len()).collect();
        MixedRadix::new(radix).map(move |pick| {
            let images: Vec<Elem> = pick
                .iter()
                .enumerate()
                .map(|(i, &p)| choices[i][p])
                .collect();
            basis.extend(target, &images)
        })
    }

    /// All additive automorphisms, identity first.
    pub fn automorphisms(&self) -> Vec<Vec<Elem>> {
        let basis = self.basis();
        let mut out: Vec<Vec<Elem>> = self
            .homs_into(self, &basis, |i, h| {
                self.element_order(h) == basis.orders[i]
            })
            .filter(|m| is_permutation(m))
            .collect();
        out.sort();
        let id: Vec<Elem> = (0..self.order()).collect();
        if let Some(p) = out.iter().position(|m| *m == id) {
            out.swap(0, p);
        }
        out
    }
}

/// Result of [`FiniteAbelianGroup::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteAbelianGroup,
    /// Element of the parent ↦ coset index.
    pub projection: Vec<Elem>,
    /// Coset index ↦ least element of the coset.
    pub reps: Vec<Elem>,
}

/// Cyclic decomposition of a group; see [`FiniteAbelianGroup::basis`].
#[derive(Clone, Debug)]
pub struct Basis {
    pub gens: Vec<Elem>,
    pub orders: Vec<usize>,
    /// Coordinates of every element with respect to `gens`.
    pub coords: Vec<Vec<usize>>,
}

impl Basis {
    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// The additive map sending `gens[i]` to `images[i]`.
    pub fn extend(&self, target: &FiniteAbelianGroup, images: &[Elem]) -> Vec<Elem> {
        self.coords
            .iter()
            .map(|c| {
                c.iter()
                    .zip(images)
                    .fold(0, |acc, (&k, &h)| target.add(acc, target.multiple(k, h)))
            })
            .collect()
    }
}

pub fn is_permutation(map: &[Elem]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter()
        .all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
}

/// All tuples `c` with `c[i] < radix[i]`, last coordinate fastest.
pub(crate) fn mixed_radix(radix: &[usize]) -> Vec<Vec<usize>> {
    MixedRadix::new(radix.to_vec()).collect()
}

pub(crate) struct MixedRadix {
    radix: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl MixedRadix {
    pub(crate) fn new(radix: Vec<usize>) -> Self {
        let next = if radix.iter().any(|&r| r == 0) {
            None
        } else {
            Some(vec![0; radix.len()])
        };
        MixedRadix { radix, next }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.radix[i] {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    }
}

/// Invariant-factor lists `[m1, .., mk]` with `m1 | m2 | .. | mk` and product `n`,
/// one per isomorphism class of abelian groups of order `n`.
pub fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    // Factors are chosen largest first, each dividing the one before.
    fn go(rest: usize, prev: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.iter().rev().copied().collect());
            return;
        }
        for d in 2..=rest {
            if rest % d == 0 && prev % d == 0 {
                acc.push(d);
                go(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// One representative of each abelian group of order `n`.
pub fn groups_of_order(n: usize) -> Vec<FiniteAbelianGroup> {
    invariant_factor_lists(n)
        .iter()
        .map(|f| FiniteAbelianGroup::from_invariants(f))
        .collect()
}

impl FiniteAbelianGroup {
    /// Invariant factors, found by matching element-order counts, which
    /// determine a finite abelian group up to isomorphism.
    pub fn invariant_factors(&self) -> Vec<usize> {
        let profile = |g: &FiniteAbelianGroup| {
            let mut v: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
            v.sort_unstable();
            v
        };
        let mine = profile(self);
        invariant_factor_lists(self.order())
            .into_iter()
            .find(|f| profile(&FiniteAbelianGroup::from_invariants(f)) == mine)
            .expect("every finite abelian group has invariant factors")
    }
}

/// Human-readable name such as `Z2xZ2`; the trivial group is `Z1`.
pub fn invariant_name(factors: &[usize]) -> String {
    if factors.is_empty() {
        return "Z1".into();
    }
    factors
        .iter()
        .map(|m| format!("Z{m}"))
        .collect::<Vec<_>>()
        .join("x")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors_are_recovered() {
        for n in 1..=16 {
            for f in invariant_factor_lists(n) {
                assert_eq!(
                    FiniteAbelianGroup::from_invariants(&f).invariant_factors(),
                    f
                );
            }
        }
        assert_eq!(klein().invariant_factors(), vec![2, 2]);
    }

    fn klein() -> FiniteAbelianGroup {
        let names = ["0", "a", "b", "c"].map(String::from).to_vec();
        let rows = [
            ["0", "a", "b", "c"],
            ["a", "0", "c", "b"],
            ["b", "c", "0", "a"],
            ["c", "b", "a", "0"],
        ]
        .map(|r| r.to_vec())
        .to_vec();
        validate_abelian_group(names, &rows).unwrap()
    }

    #[test]
    fn klein_is_valid_and_elementary() {
        let g = klein();
        assert_eq!(g.name(0), "0");
        assert!((0..4).all(|x| g.neg(x) == x));
    }

    #[test]
    fn trivial_group() {
        let g = validate_abelian_group(vec!["0".into()], &[vec!["0"]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.enumerate_subgroups().unwrap(), vec![g.zero_mask()]);
    }

    #[test]
    fn perturbed_klein_is_rejected() {
        let names = ["0", "a", "b", "c"].map(String::from).to_vec();
        let rows = [
            ["0", "a", "b", "c"],
            ["a", "c", "c", "b"],
            ["b", "c", "0", "a"],
            ["c", "b", "a", "0"],
        ]
        .map(|r| r.to_vec())
        .to_vec();
        let err = validate_abelian_group(names, &rows).unwrap_err();
        assert!(
            err.has("group.inverse") || err.has("group.associative"),
            "{err}"
        );
    }

    #[test]
    fn undeclared_entry_is_a_closure_failure() {
        let names = ["0", "a"].map(String::from).to_vec();
        let rows = vec![vec!["0", "a"], vec!["a", "d"]];
        let err = validate_abelian_group(names, &rows).unwrap_err();
        assert_eq!(err.violations[0].axiom, "group.closure");
        assert_eq!(err.violations[0].witness, vec![1, 1]);
    }

    #[test]
    fn zero_is_reindexed_first() {
        let names = ["x", "e"].map(String::from).to_vec();
        let rows = vec![vec!["e", "x"], vec!["x", "e"]];
        let g = validate_abelian_group(names, &rows).unwrap();
        assert_eq!(g.names(), ["e", "x"]);
    }

    #[test]
    fn subgroup_counts() {
        let g = klein();
        let subs = g.enumerate_subgroups().unwrap();
        let sets: Vec<String> = subs.iter().map(|s| g.format_set(s)).collect();
        assert_eq!(sets, ["{0}", "{0,a}", "{0,b}", "{0,c}", "{0,a,b,c}"]);
        let z3 = FiniteAbelianGroup::cyclic(3);
        assert_eq!(z3.enumerate_subgroups().unwrap().len(), 2);
    }

    #[test]
    fn congruence_and_quotient() {
        let g = klein();
        let c = SubsetMask::from_elems(4, [0, 3]);
        assert!(g.congruent_mod(1, 2, &c).unwrap());
        assert!(!g.congruent_mod(1, 3, &c).unwrap());
        assert!(g.congruent_mod(2, 2, &g.zero_mask()).unwrap());
        assert!(matches!(
            g.congruent_mod(1, 2, &SubsetMask::from_elems(4, [1])),
            Err(Error::NotASubgroup)
        ));
        let q = g.quotient(&c).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.projection, vec![0, 1, 1, 0]);
        assert_eq!(g.quotient(&g.full()).unwrap().group.order(), 1);
        assert_eq!(g.quotient(&g.zero_mask()).unwrap().group.order(), 4);
    }

    #[test]
    fn invariant_factors() {
        assert_eq!(invariant_factor_lists(1), vec![Vec::<usize>::new()]);
        assert_eq!(invariant_factor_lists(4), vec![vec![2, 2], vec![4]]);
        assert_eq!(
            invariant_factor_lists(8),
            vec![vec![2, 2, 2], vec![2, 4], vec![8]]
        );
        assert_eq!(invariant_factor_lists(12), vec![vec![2, 6], vec![12]]);
        assert_eq!(invariant_factor_lists(16).len(), 5);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(klein().automorphisms().len(), 6);
        assert_eq!(FiniteAbelianGroup::cyclic(5).automorphisms().len(), 4);
        assert_eq!(
            FiniteAbelianGroup::from_invariants(&[2, 4])
                .automorphisms()
                .len(),
            8
        );
        assert_eq!(FiniteAbelianGroup::cyclic(6).basis().rank(), 1);
    }
}
