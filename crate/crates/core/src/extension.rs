//! Linear extensions of finite posets.
//!
//! The forced-pair pipeline has two stages, kept separate on purpose:
//! [`extend_with_pair`] adjoins one incomparable pair and recloses, then
//! [`linear_extension`] linearizes by repeatedly removing a minimal element.
//! [`szpilrajn`] runs both and returns a checkable [`ExtensionCertificate`].
//!
//! [`enumerate_linear_extensions`] and [`count_linear_extensions`] are
//! exhaustive and share no code with the linearizer, so they serve as
//! oracles for it.

use std::collections::HashMap;

use crate::error::{OrderError, Result};
use crate::order::{order_from_enumeration, ElementId, LinearOrder, Poset, StrictRelation};
use crate::policy::{Chooser, TieBreakPolicy};

/// Default number of extensions [`enumerate_linear_extensions`] returns.
pub const DEFAULT_ENUM_LIMIT: usize = 1_000_000;

/// Default largest ground set [`count_linear_extensions`] accepts.
pub const DEFAULT_COUNT_CAP: usize = 20;

/// Downsets are bitmasks, so no cap can go above this.
pub const MAX_COUNT_CAP: usize = 64;

/// An ordered pair of distinct elements that must end up `first < second`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForcedPair {
    first: ElementId,
    second: ElementId,
}

impl ForcedPair {
    pub fn new(first: ElementId, second: ElementId) -> Result<Self> {
        if first == second {
            return Err(OrderError::DegeneratePair(first));
        }
        Ok(ForcedPair { first, second })
    }

    pub fn first(&self) -> &ElementId {
        &self.first
    }

    pub fn second(&self) -> &ElementId {
        &self.second
    }

    pub fn reversed(&self) -> ForcedPair {
        ForcedPair {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }
}

/// Result of [`szpilrajn`]: the input relation, the total order built for
/// it and the pair that was forced, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCertificate {
    input_relation: StrictRelation,
    output_order: LinearOrder,
    forced: Option<ForcedPair>,
}

impl ExtensionCertificate {
    pub fn input_relation(&self) -> &StrictRelation {
        &self.input_relation
    }

    pub fn output_order(&self) -> &LinearOrder {
        &self.output_order
    }

    pub fn forced(&self) -> Option<&ForcedPair> {
        self.forced.as_ref()
    }

    pub fn into_order(self) -> LinearOrder {
        self.output_order
    }

    /// Rechecks containment of the input relation and the forced pair.
    pub fn verify(&self) -> bool {
        self.output_order.contains_relation(&self.input_relation)
            && self
                .forced
                .as_ref()
                .is_none_or(|f| self.output_order.precedes(&f.first, &f.second).unwrap_or(false))
    }
}

/// Smallest partial order containing `poset` in which `pair.first` precedes
/// `pair.second`: the transitive closure of the relation plus that pair.
///
/// The endpoints must be incomparable.
pub fn extend_with_pair(poset: &Poset, pair: &ForcedPair) -> Result<Poset> {
    let i = poset.require(&pair.first)?;
    let j = poset.require(&pair.second)?;
    if poset.less_idx(i, j) || poset.less_idx(j, i) {
        return Err(OrderError::NotIncomparable {
            a: pair.first.clone(),
            b: pair.second.clone(),
        });
    }
    Ok(poset.with_pair_closed(i, j))
}

/// Linearizes `poset` by source removal: at every step the policy picks one
/// of the elements whose predecessors have all been placed.
pub fn linear_extension(poset: &Poset, policy: TieBreakPolicy) -> LinearOrder {
    let n = poset.len();
    let ground = poset.ground();
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in poset.successors(i) {
            indegree[j] += 1;
        }
    }
    // kept sorted by ground index
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut chooser = Chooser::new(policy);
    let mut out = Vec::with_capacity(n);
    while !ready.is_empty() {
        let candidates: Vec<(usize, &ElementId)> = ready.iter().map(|&i| (i, &ground[i])).collect();
        let k = chooser.pick(&candidates);
        let v = ready.remove(k);
        out.push(ground[v].clone());
        for w in poset.successors(v) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                let at = ready.partition_point(|&r| r < w);
                ready.insert(at, w);
            }
        }
    }
    debug_assert_eq!(out.len(), n, "a valid poset has no cycle");
    order_from_enumeration(out).expect("ground elements are distinct")
}

/// Linear extension of `poset` that contains it and, when `forced` is
/// given, puts `forced.first` before `forced.second`.
///
/// The forced pair is adjoined with [`extend_with_pair`] first and the result
/// is linearized with [`linear_extension`].
pub fn szpilrajn(poset: &Poset, forced: Option<&ForcedPair>, policy: TieBreakPolicy) -> Result<ExtensionCertificate> {
    let order = match forced {
        Some(pair) => linear_extension(&extend_with_pair(poset, pair)?, policy),
        None => linear_extension(poset, policy),
    };
    Ok(ExtensionCertificate {
        input_relation: poset.relation(),
        output_order: order,
        forced: forced.cloned(),
    })
}

/// Output of [`enumerate_linear_extensions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub orders: Vec<LinearOrder>,
    /// More extensions exist beyond `orders`.
    pub truncated: bool,
}

/// All linear extensions of `poset`, at most `limit` of them.
///
/// Extensions come in lexicographic order of their ground-index sequences.
pub fn enumerate_linear_extensions(poset: &Poset, limit: usize) -> Enumeration {
    let n = poset.len();
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in poset.successors(i) {
            indegree[j] += 1;
        }
    }
    let mut state = Backtrack {
        poset,
        indegree,
        placed: vec![false; n],
        prefix: Vec::with_capacity(n),
        found: Vec::new(),
        // one extra so truncation can be detected
        want: limit.saturating_add(1),
    };
    state.descend();
    let truncated = state.found.len() > limit;
    state.found.truncate(limit);
    let ground = poset.ground();
    let orders = state
        .found
        .into_iter()
        .map(|seq| {
            order_from_enumeration(seq.into_iter().map(|i| ground[i].clone()).collect())
                .expect("ground elements are distinct")
        })
        .collect();
    Enumeration { orders, truncated }
}

struct Backtrack<'a> {
    poset: &'a Poset,
    indegree: Vec<usize>,
    placed: Vec<bool>,
    prefix: Vec<usize>,
    found: Vec<Vec<usize>>,
    want: usize,
}

impl Backtrack<'_> {
    fn descend(&mut self) {
        if self.found.len() >= self.want {
            return;
        }
        let n = self.placed.len();
        if self.prefix.len() == n {
            self.found.push(self.prefix.clone());
            return;
        }
        for v in 0..n {
            if self.placed[v] || self.indegree[v] != 0 {
                continue;
            }
            self.placed[v] = true;
            self.prefix.push(v);
            for w in self.poset.successors(v) {
                self.indegree[w] -= 1;
            }
            self.descend();
            for w in self.poset.successors(v) {
                self.indegree[w] += 1;
            }
            self.prefix.pop();
            self.placed[v] = false;
            if self.found.len() >= self.want {
                return;
            }
        }
    }
}

/// Exact number of linear extensions, with the default cap.
pub fn count_linear_extensions(poset: &Poset) -> Result<u128> {
    count_linear_extensions_capped(poset, DEFAULT_COUNT_CAP)
}

/// Exact number of linear extensions by dynamic programming over downsets.
///
/// Memory grows with the number of downsets, which for an antichain is
/// `2^n`; `cap` bounds the ground size accepted.
pub fn count_linear_extensions_capped(poset: &Poset, cap: usize) -> Result<u128> {
    let n = poset.len();
    let cap = cap.min(MAX_COUNT_CAP);
    if n > cap {
        return Err(OrderError::CapExceeded { size: n, cap });
    }
    let mut preds = vec![0u64; n];
    for i in 0..n {
        for j in poset.successors(i) {
            preds[j] |= 1 << i;
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    completions(0, full, &preds, &mut memo)
}

/// Number of ways to place the elements outside `down`, given that the
/// elements of `down` already occupy the first positions.
fn completions(down: u64, full: u64, preds: &[u64], memo: &mut HashMap<u64, u128>) -> Result<u128> {
    if down == full {
        return Ok(1);
    }
    if let Some(&c) = memo.get(&down) {
        return Ok(c);
    }
    let mut total: u128 = 0;
    let mut rest = full & !down;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if preds[v] & !down == 0 {
            let sub = completions(down | 1 << v, full, preds, memo)?;
            total = total.checked_add(sub).ok_or(OrderError::CountOverflow)?;
        }
    }
    memo.insert(down, total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{ids, validate};

    fn e(s: &str) -> ElementId {
        ElementId::new(s).unwrap()
    }

    fn p(x: &str, y: &str) -> (ElementId, ElementId) {
        (e(x), e(y))
    }

    fn fp(x: &str, y: &str) -> ForcedPair {
        ForcedPair::new(e(x), e(y)).unwrap()
    }

    fn diamond() -> Poset {
        validate(
            ids(&["0", "x", "y", "1"]).unwrap(),
            [p("0", "x"), p("0", "y"), p("x", "1"), p("y", "1")],
            true,
        )
        .unwrap()
    }

    fn seq(o: &LinearOrder) -> Vec<&str> {
        o.sequence().iter().map(ElementId::as_str).collect()
    }

    #[test]
    fn forced_pair_must_be_distinct() {
        assert_eq!(ForcedPair::new(e("a"), e("a")), Err(OrderError::DegeneratePair(e("a"))));
    }

    #[test]
    fn extend_examples() {
        let ps = validate(ids(&["a", "b", "c"]).unwrap(), [p("a", "c")], false).unwrap();

        let ext = extend_with_pair(&ps, &fp("a", "b")).unwrap();
        assert_eq!(
            ext.relation(),
            StrictRelation::from_pairs([p("a", "c"), p("a", "b")]).unwrap()
        );

        let ext = extend_with_pair(&ps, &fp("b", "a")).unwrap();
        assert_eq!(
            ext.relation(),
            StrictRelation::from_pairs([p("a", "c"), p("b", "a"), p("b", "c")]).unwrap()
        );

        assert_eq!(
            extend_with_pair(&ps, &fp("a", "c")).unwrap_err(),
            OrderError::NotIncomparable { a: e("a"), b: e("c") }
        );
        assert_eq!(
            extend_with_pair(&ps, &fp("c", "a")).unwrap_err(),
            OrderError::NotIncomparable { a: e("c"), b: e("a") }
        );
        assert_eq!(
            extend_with_pair(&ps, &fp("a", "z")).unwrap_err(),
            OrderError::UnknownElement(e("z"))
        );
    }

    #[test]
    fn linearize_examples() {
        let chain = Poset::chain(ids(&["a", "b", "c"]).unwrap()).unwrap();
        for policy in [
            TieBreakPolicy::InputOrder,
            TieBreakPolicy::Lexicographic,
            TieBreakPolicy::Seeded(3),
        ] {
            assert_eq!(seq(&linear_extension(&chain, policy)), ["a", "b", "c"]);
        }

        let anti = Poset::antichain(ids(&["c", "a", "b"]).unwrap()).unwrap();
        assert_eq!(
            seq(&linear_extension(&anti, TieBreakPolicy::Lexicographic)),
            ["a", "b", "c"]
        );
        assert_eq!(
            seq(&linear_extension(&anti, TieBreakPolicy::InputOrder)),
            ["c", "a", "b"]
        );

        let d = diamond();
        let all = enumerate_linear_extensions(&d, usize::MAX);
        let lex = linear_extension(&d, TieBreakPolicy::Lexicographic);
        assert!(all.orders.contains(&lex));
    }

    #[test]
    fn empty_poset_has_one_empty_extension() {
        let ps = Poset::antichain(vec![]).unwrap();
        assert!(linear_extension(&ps, TieBreakPolicy::InputOrder).is_empty());
        let all = enumerate_linear_extensions(&ps, 10);
        assert_eq!(all.orders.len(), 1);
        assert!(!all.truncated);
        assert_eq!(count_linear_extensions(&ps).unwrap(), 1);
    }

    #[test]
    fn szpilrajn_examples() {
        let anti = Poset::antichain(ids(&["a", "b"]).unwrap()).unwrap();
        let cert = szpilrajn(&anti, Some(&fp("a", "b")), TieBreakPolicy::InputOrder).unwrap();
        assert_eq!(seq(cert.output_order()), ["a", "b"]);
        let cert = szpilrajn(&anti, Some(&fp("b", "a")), TieBreakPolicy::InputOrder).unwrap();
        assert_eq!(seq(cert.output_order()), ["b", "a"]);
        assert!(cert.verify());

        let chain = Poset::chain(ids(&["a", "b"]).unwrap()).unwrap();
        assert_eq!(
            szpilrajn(&chain, Some(&fp("b", "a")), TieBreakPolicy::InputOrder).unwrap_err(),
            OrderError::NotIncomparable { a: e("b"), b: e("a") }
        );

        let d = diamond();
        let cert = szpilrajn(&d, Some(&fp("y", "x")), TieBreakPolicy::InputOrder).unwrap();
        let o = cert.output_order();
        assert!(o.precedes(&e("y"), &e("x")).unwrap());
        assert!(o.contains_relation(&d.relation()));
        assert_eq!(cert.input_relation().len(), 5);
        assert_eq!(seq(o), ["0", "y", "x", "1"]);
    }

    #[test]
    fn enumeration_examples() {
        let chain = Poset::chain(ids(&["a", "b", "c", "d", "e"]).unwrap()).unwrap();
        assert_eq!(enumerate_linear_extensions(&chain, usize::MAX).orders.len(), 1);

        let anti = Poset::antichain(ids(&["a", "b", "c"]).unwrap()).unwrap();
        let all = enumerate_linear_extensions(&anti, usize::MAX);
        let seqs: Vec<_> = all.orders.iter().map(seq).collect();
        assert_eq!(
            seqs,
            [
                ["a", "b", "c"],
                ["a", "c", "b"],
                ["b", "a", "c"],
                ["b", "c", "a"],
                ["c", "a", "b"],
                ["c", "b", "a"]
            ]
        );

        let d = enumerate_linear_extensions(&diamond(), usize::MAX);
        let seqs: Vec<_> = d.orders.iter().map(seq).collect();
        assert_eq!(seqs, [["0", "x", "y", "1"], ["0", "y", "x", "1"]]);
    }

    #[test]
    fn enumeration_truncates() {
        let anti = Poset::antichain(ids(&["a", "b", "c"]).unwrap()).unwrap();
        let part = enumerate_linear_extensions(&anti, 4);
        assert_eq!(part.orders.len(), 4);
        assert!(part.truncated);
        let exact = enumerate_linear_extensions(&anti, 6);
        assert_eq!(exact.orders.len(), 6);
        assert!(!exact.truncated);
        let none = enumerate_linear_extensions(&anti, 0);
        assert!(none.orders.is_empty() && none.truncated);
    }

    #[test]
    fn count_examples() {
        let anti = Poset::antichain(ids(&["a", "b", "c", "d", "e", "f"]).unwrap()).unwrap();
        assert_eq!(count_linear_extensions(&anti).unwrap(), 720);

        let ps = validate(ids(&["a", "b", "c"]).unwrap(), [p("a", "b")], false).unwrap();
        assert_eq!(count_linear_extensions(&ps).unwrap(), 3);

        assert_eq!(count_linear_extensions(&diamond()).unwrap(), 2);
    }

    #[test]
    fn count_cap() {
        let ground: Vec<_> = (0..21).map(|i| e(&format!("e{i}"))).collect();
        let chain = Poset::chain(ground).unwrap();
        assert_eq!(
            count_linear_extensions(&chain).unwrap_err(),
            OrderError::CapExceeded { size: 21, cap: 20 }
        );
        assert_eq!(count_linear_extensions_capped(&chain, 21).unwrap(), 1);
        assert_eq!(count_linear_extensions_capped(&chain, 500).unwrap(), 1);
    }

    #[test]
    fn overflow_is_an_error() {
        // seeded memo: the two branches sum past u128::MAX
        let mut memo = HashMap::new();
        memo.insert(0b1, u128::MAX);
        memo.insert(0b10, 1);
        let err = completions(0, 0b11, &[0, 0], &mut memo).unwrap_err();
        assert_eq!(err, OrderError::CountOverflow);
    }
}
