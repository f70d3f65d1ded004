//! Independent count of left dirings of order at most 4, by raw table search,
//! compared with the library census.

use std::collections::BTreeSet;

use diring::census::{enumerate_left_dirings, CensusOptions};
use diring::group::FiniteAbelianGroup;

type T = Vec<Vec<usize>>;

struct Group {
    name: &'static str,
    add: T,
}

fn cyclic(n: usize) -> Group {
    let name = ["Z1", "Z2", "Z3", "Z4"][n - 1];
    Group {
        name,
        add: (0..n)
            .map(|x| (0..n).map(|y| (x + y) % n).collect())
            .collect(),
    }
}

fn klein() -> Group {
    Group {
        name: "Z2xZ2",
        add: (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect(),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn distributive(g: &Group, m: &T) -> bool {
    let n = g.add.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                m[x][g.add[y][z]] == g.add[m[x][y]][m[x][z]]
                    && m[g.add[y][z]][x] == g.add[m[y][x]][m[z][x]]
            })
        })
    })
}

/// Every biadditive map. Orders up to 3 by exhaustive tables; order 4 by
/// extending values on generators.
fn biadditive(g: &Group) -> Vec<T> {
    let n = g.add.len();
    let candidates: Vec<T> = if n <= 3 {
        let cells = n * n;
        (0..n.pow(cells as u32))
            .map(|mut code| {
                let mut t = vec![vec![0; n]; n];
                for c in 0..cells {
                    t[c / n][c % n] = code % n;
                    code /= n;
                }
                t
            })
            .collect()
    } else if g.name == "Z4" {
        // x*y = xy·(1*1)
        (0..4)
            .map(|v| {
                (0..4)
                    .map(|x| (0..4).map(|y| (x * y * v) % 4).collect())
                    .collect()
            })
            .collect()
    } else {
        // Klein with basis a=1, b=2; xor coordinates.
        let mut out = Vec::new();
        for code in 0..256usize {
            let v = [code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3];
            let t = (0..4)
                .map(|x| {
                    (0..4)
                        .map(|y| {
                            let mut acc = 0;
                            for i in 0..2 {
                                for j in 0..2 {
                                    if x >> i & 1 == 1 && y >> j & 1 == 1 {
                                        acc ^= v[2 * i + j];
                                    }
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            out.push(t);
        }
        out
    };
    candidates
        .into_iter()
        .filter(|t| distributive(g, t))
        .collect()
}

fn dimonoid(l: &T, r: &T) -> bool {
    let n = l.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ok = l[l[x][y]][z] == l[x][l[y][z]]
                    && l[x][r[y][z]] == l[x][l[y][z]]
                    && l[r[x][y]][z] == r[x][l[y][z]]
                    && r[l[x][y]][z] == r[r[x][y]][z]
                    && r[x][r[y][z]] == r[r[x][y]][z];
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn has_left_unit(r: &T) -> bool {
    (0..r.len()).any(|a| (0..r.len()).all(|x| r[a][x] == x))
}

/// Isomorphism classes of left dirings on `g`.
fn classes(g: &Group) -> BTreeSet<Vec<usize>> {
    let n = g.add.len();
    let autos: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|x| (0..n).all(|y| p[g.add[x][y]] == g.add[p[x]][p[y]])))
        .collect();
    let maps = biadditive(g);
    let mut out = BTreeSet::new();
    for l in &maps {
        for r in &maps {
            if !has_left_unit(r) || !dimonoid(l, r) {
                continue;
            }
            let canon = autos
                .iter()
                .map(|p| {
                    let mut inv = vec![0; n];
                    for (i, &v) in p.iter().enumerate() {
                        inv[v] = i;
                    }
                    let mut key = Vec::with_capacity(2 * n * n);
                    for t in [l, r] {
                        for x in 0..n {
                            for y in 0..n {
                                key.push(p[t[inv[x]][inv[y]]]);
                            }
                        }
                    }
                    key
                })
                .min()
                .unwrap();
            out.insert(canon);
        }
    }
    out
}

#[test]
fn counts_agree_with_census() {
    let cases: Vec<(Group, Vec<usize>, usize)> = vec![
        (cyclic(1), vec![], 1),
        (cyclic(2), vec![2], 1),
        (cyclic(3), vec![3], 1),
        (cyclic(4), vec![4], 1),
        (klein(), vec![2, 2], 6),
    ];
    for (g, factors, expected) in cases {
        let oracle = classes(&g).len();
        let census = enumerate_left_dirings(
            &FiniteAbelianGroup::from_invariants(&factors),
            &CensusOptions::default(),
        )
        .unwrap()
        .len();
        assert_eq!(oracle, expected, "{} oracle", g.name);
        assert_eq!(census, expected, "{} census", g.name);
    }
}
