//! Brute-force facts about the four-element diring H, computed from the raw
//! tables with no library code, then compared with the library.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::Arc;

use diring::format::{load_file, Loaded};
use diring::ideal::{IdealKind, Simplicity};
use diring::left_module::regular_module;
use diring::radical::{rad3, three_maximal_left_ideals};
use diring::{DiringTable, SubsetMask};

const LABELS: [&str; 4] = ["0", "a", "b", "c"];
// Klein group: with 0,a,b,c as 0..4, addition is xor.
const LPROD: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 2, 2, 0], [0, 2, 2, 0], [0, 0, 0, 0]];
const RPROD: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 1, 2, 3], [0, 0, 0, 0]];

type Set = BTreeSet<usize>;

fn subgroups() -> Vec<Set> {
    (0u32..16)
        .map(|bits| (0..4).filter(|&x| bits & (1 << x) != 0).collect::<Set>())
        .filter(|s| s.contains(&0) && s.iter().all(|&x| s.iter().all(|&y| s.contains(&(x ^ y)))))
        .collect()
}

fn left_ideal(s: &Set) -> bool {
    (0..4).all(|r| {
        s.iter()
            .all(|&x| s.contains(&LPROD[r][x]) && s.contains(&RPROD[r][x]))
    })
}

fn two_sided(s: &Set) -> bool {
    left_ideal(s)
        && (0..4).all(|r| {
            s.iter()
                .all(|&x| s.contains(&LPROD[x][r]) && s.contains(&RPROD[x][r]))
        })
}

fn additive_halo() -> Set {
    let e = left_halo()[0];
    (0..4).filter(|&x| LPROD[e][x] == 0).collect()
}

fn left_halo() -> Vec<usize> {
    (0..4)
        .filter(|&a| (0..4).all(|x| RPROD[a][x] == x))
        .collect()
}

fn right_halo() -> Vec<usize> {
    (0..4)
        .filter(|&a| (0..4).all(|x| LPROD[x][a] == x))
        .collect()
}

fn sum(a: &Set, b: &Set) -> Set {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| x ^ y))
        .collect()
}

/// Lattice criterion on the regular module: I + ℏ+ is strictly between I and
/// R, and it is the only left ideal strictly between them.
fn three_maximal(i: &Set, lefts: &[Set]) -> bool {
    let full: Set = (0..4).collect();
    let k = sum(i, &additive_halo());
    let between: Vec<&Set> = lefts
        .iter()
        .filter(|s| i.is_subset(s) && *s != i && **s != full)
        .collect();
    k != *i && k != full && between == [&k]
}

fn names(s: &Set) -> Vec<&'static str> {
    s.iter().map(|&x| LABELS[x]).collect()
}

fn lib_names(d: &DiringTable, m: &SubsetMask) -> Vec<String> {
    d.group().labels(m)
}

fn fixture() -> Arc<DiringTable> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/H.diring");
    let loaded = load_file(&path, &Loaded::default()).unwrap();
    loaded.dirings[0].1.clone()
}

#[test]
fn fixture_tables_match_oracle() {
    let d = fixture();
    for x in 0..4 {
        for y in 0..4 {
            let (lx, ly) = (
                d.group().index_of(LABELS[x]).unwrap(),
                d.group().index_of(LABELS[y]).unwrap(),
            );
            assert_eq!(d.name(d.add(lx, ly)), LABELS[x ^ y]);
            assert_eq!(d.name(d.lprod(lx, ly)), LABELS[LPROD[x][y]]);
            assert_eq!(d.name(d.rprod(lx, ly)), LABELS[RPROD[x][y]]);
        }
    }
}

#[test]
fn halos() {
    let d = fixture();
    let left: Set = left_halo().into_iter().collect();
    assert_eq!(names(&left), ["a", "b"]);
    assert!(right_halo().is_empty());
    assert_eq!(names(&additive_halo()), ["0", "c"]);
    assert_eq!(lib_names(&d, d.left_halo()), ["a", "b"]);
    assert!(d.right_halo().is_empty());
    assert_eq!(lib_names(&d, d.additive_halo()), ["0", "c"]);
    assert!(!d.is_diring());
}

#[test]
fn ideals_and_simplicity() {
    let d = fixture();
    let lefts: Vec<Set> = subgroups().into_iter().filter(left_ideal).collect();
    let twos: Vec<Set> = subgroups().into_iter().filter(two_sided).collect();
    let oracle = |v: &[Set]| {
        v.iter()
            .map(|s| names(s).join(","))
            .collect::<BTreeSet<_>>()
    };
    let lib = |k| {
        d.ideal_masks(k)
            .unwrap()
            .iter()
            .map(|m| lib_names(&d, m).join(","))
            .collect::<BTreeSet<_>>()
    };
    assert_eq!(
        oracle(&twos),
        BTreeSet::from(["0".into(), "0,c".into(), "0,a,b,c".into()])
    );
    assert_eq!(
        oracle(&lefts),
        BTreeSet::from(["0".into(), "0,b".into(), "0,c".into(), "0,a,b,c".into()])
    );
    assert_eq!(lib(IdealKind::TwoSided), oracle(&twos));
    assert_eq!(lib(IdealKind::Left), oracle(&lefts));
    // exactly 0, ℏ+ and R
    assert_eq!(twos.len(), 3);
    assert_eq!(d.simplicity_class().unwrap(), Simplicity::ThreeSimple);
}

#[test]
fn radical() {
    let d = fixture();
    let lefts: Vec<Set> = subgroups().into_iter().filter(left_ideal).collect();
    assert!(lefts.iter().all(|i| !three_maximal(i, &lefts)));
    assert!(three_maximal_left_ideals(&d).unwrap().is_empty());
    let r = rad3(&d).unwrap();
    assert!(r.family_empty && r.agrees);
    assert!(r.rad3().is_full());
}

#[test]
fn regular_annihilator() {
    let d = fixture();
    let ann: Set = (0..4)
        .filter(|&x| (0..4).all(|y| LPROD[x][y] == 0 && RPROD[x][y] == 0))
        .collect();
    assert_eq!(names(&ann), ["0", "c"]);
    assert_eq!(
        lib_names(&d, &regular_module(&d).unwrap().annihilator()),
        ["0", "c"]
    );
}
