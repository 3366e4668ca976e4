//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the algorithms under test
//! beyond constructing inputs.
#![allow(dead_code)]

pub mod fixtures;

use std::collections::{BTreeSet, HashSet};

use ordext::{validate, ElementId, LinearOrder, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn e(s: &str) -> ElementId {
    ElementId::new(s).unwrap()
}

pub type IndexPairs = BTreeSet<(usize, usize)>;

/// Closure by repeated composition until nothing changes.
pub fn naive_closure(pairs: &IndexPairs) -> IndexPairs {
    let mut cur = pairs.clone();
    loop {
        let mut next = cur.clone();
        for &(a, b) in &cur {
            for &(c, d) in &cur {
                if b == c {
                    next.insert((a, d));
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Linear extensions by filtering every permutation of the ground.
pub fn brute_extensions(poset: &Poset) -> Vec<Vec<ElementId>> {
    let ground = poset.ground();
    let pairs: Vec<(usize, usize)> = poset
        .pairs()
        .map(|(x, y)| (poset.index_of(x).unwrap(), poset.index_of(y).unwrap()))
        .collect();
    permutations(ground.len())
        .into_iter()
        .filter(|perm| {
            let mut pos = vec![0; perm.len()];
            for (k, &v) in perm.iter().enumerate() {
                pos[v] = k;
            }
            pairs.iter().all(|&(a, b)| pos[a] < pos[b])
        })
        .map(|perm| perm.into_iter().map(|i| ground[i].clone()).collect())
        .collect()
}

/// Checks the strict total order axioms on the pairs induced by `order`,
/// cubically, straight from the definitions.
pub fn is_strict_total_order(order: &LinearOrder) -> bool {
    let rel = order.induced_pairs();
    let elems = order.sequence();
    let has = |a: &ElementId, b: &ElementId| rel.contains(a, b);
    let distinct: HashSet<&ElementId> = elems.iter().collect();
    if distinct.len() != elems.len() {
        return false;
    }
    for a in elems {
        if has(a, a) {
            return false;
        }
        for b in elems {
            if a != b && has(a, b) == has(b, a) {
                // both (not antisymmetric) or neither (not total)
                return false;
            }
            for c in elems {
                if has(a, b) && has(b, c) && !has(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Density by looking at every pair of `t2`.
pub fn brute_dense(t1: &[ElementId], t2: &[ElementId], order: &LinearOrder, strict: bool) -> bool {
    let pos = |x: &ElementId| order.position(x).unwrap();
    for a in t2 {
        for b in t2 {
            if pos(a) >= pos(b) {
                continue;
            }
            let ok = t1.iter().any(|c| {
                if strict {
                    pos(a) < pos(c) && pos(c) < pos(b)
                } else {
                    pos(a) <= pos(c) && pos(c) <= pos(b)
                }
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// `n` distinct tokens whose lexicographic order differs from their list
/// order.
pub fn random_tokens<R: Rng>(rng: &mut R, n: usize) -> Vec<ElementId> {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    labels.into_iter().map(|k| e(&format!("t{k:02}"))).collect()
}

/// Random acyclic pairs over `0..n`: a hidden random order with each
/// forward pair kept with probability `density`.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut hidden: Vec<usize> = (0..n).collect();
    hidden.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((hidden[i], hidden[j]));
            }
        }
    }
    pairs
}

/// A random poset with at most `max_n` elements, closed by `validate`.
pub fn random_poset<R: Rng>(rng: &mut R, max_n: usize) -> Poset {
    let n = rng.gen_range(0..=max_n);
    let density = rng.gen_range(0.0..=1.0);
    let ground = random_tokens(rng, n);
    let pairs: Vec<_> = random_dag(rng, n, density)
        .into_iter()
        .map(|(i, j)| (ground[i].clone(), ground[j].clone()))
        .collect();
    validate(ground, pairs, true).unwrap()
}

pub fn diamond() -> Poset {
    validate(
        ordext::ids(&["0", "x", "y", "1"]).unwrap(),
        [(e("0"), e("x")), (e("0"), e("y")), (e("x"), e("1")), (e("y"), e("1"))],
        true,
    )
    .unwrap()
}
