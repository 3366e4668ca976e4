//! Total orders with prescribed block structure, and the density test.
//!
//! Every construction lays the ground out in contiguous segments and lets a
//! [`TieBreakPolicy`] order the elements inside each segment. Segments are
//! arranged left to right with one shared chooser, so a seeded policy draws
//! from a single stream per call.

use std::collections::{HashMap, HashSet};

use crate::error::{OrderError, Result};
use crate::order::{order_from_enumeration, ElementId, LinearOrder};
use crate::policy::{Chooser, TieBreakPolicy};

fn index_sequence(seq: &[ElementId]) -> Result<HashMap<&ElementId, usize>> {
    let mut index = HashMap::with_capacity(seq.len());
    for (i, e) in seq.iter().enumerate() {
        if index.insert(e, i).is_some() {
            return Err(OrderError::DuplicateElement(e.clone()));
        }
    }
    Ok(index)
}

/// Ground indices of `subset`, ascending. Rejects duplicates and strangers.
fn locate(index: &HashMap<&ElementId, usize>, subset: &[ElementId]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(subset.len());
    let mut seen = HashSet::with_capacity(subset.len());
    for e in subset {
        let i = *index.get(e).ok_or_else(|| OrderError::UnknownElement(e.clone()))?;
        if !seen.insert(i) {
            return Err(OrderError::DuplicateElement(e.clone()));
        }
        out.push(i);
    }
    out.sort_unstable();
    Ok(out)
}

fn lay_out(ground: &[ElementId], segments: &[Vec<usize>], policy: TieBreakPolicy) -> LinearOrder {
    let mut chooser = Chooser::new(policy);
    let mut out = Vec::with_capacity(ground.len());
    for seg in segments {
        let mut items: Vec<(usize, &ElementId)> = seg.iter().map(|&i| (i, &ground[i])).collect();
        chooser.arrange(&mut items);
        out.extend(items.into_iter().map(|(_, e)| e.clone()));
    }
    order_from_enumeration(out).expect("segments partition a duplicate-free ground")
}

fn complement(n: usize, taken: &[&[usize]]) -> Vec<usize> {
    let mut used = vec![false; n];
    for set in taken {
        for &i in *set {
            used[i] = true;
        }
    }
    (0..n).filter(|&i| !used[i]).collect()
}

/// Total order on `ground` with all of `a` first, then the elements in
/// neither set, then all of `b`.
pub fn bipartition_order(
    ground: &[ElementId],
    a: &[ElementId],
    b: &[ElementId],
    policy: TieBreakPolicy,
) -> Result<LinearOrder> {
    let index = index_sequence(ground)?;
    if a.is_empty() {
        return Err(OrderError::EmptySubset("A"));
    }
    if b.is_empty() {
        return Err(OrderError::EmptySubset("B"));
    }
    let ia = locate(&index, a)?;
    let ib = locate(&index, b)?;
    if let Some(&i) = ia.iter().find(|i| ib.binary_search(i).is_ok()) {
        return Err(OrderError::NotDisjoint(ground[i].clone()));
    }
    let rest = complement(ground.len(), &[&ia, &ib]);
    Ok(lay_out(ground, &[ia, rest, ib], policy))
}

/// An ordered sequence of nonempty, pairwise disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<ElementId>>,
}

impl Partition {
    /// Checks the blocks. [`OrderError::EmptyBlock`] carries a 1-based block
    /// number.
    pub fn new(blocks: Vec<Vec<ElementId>>) -> Result<Self> {
        let mut owner: HashMap<&ElementId, usize> = HashMap::new();
        for (k, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(OrderError::EmptyBlock(k + 1));
            }
            for e in block {
                match owner.insert(e, k) {
                    Some(prev) if prev == k => return Err(OrderError::DuplicateElement(e.clone())),
                    Some(_) => return Err(OrderError::NotDisjoint(e.clone())),
                    None => {}
                }
            }
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<ElementId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Total order on `ground` in which every block is an interval, blocks come
/// in partition order, and the elements covered by no block form the last
/// interval.
pub fn partition_block_order(
    ground: &[ElementId],
    partition: &Partition,
    policy: TieBreakPolicy,
) -> Result<LinearOrder> {
    let index = index_sequence(ground)?;
    let mut segments = Vec::with_capacity(partition.len() + 1);
    for block in partition.blocks() {
        segments.push(locate(&index, block)?);
    }
    let taken: Vec<&[usize]> = segments.iter().map(Vec::as_slice).collect();
    let leftover = complement(ground.len(), &taken);
    segments.push(leftover);
    Ok(lay_out(ground, &segments, policy))
}

/// A finite one-to-one map, stored as `(domain, image)` pairs.
///
/// Construction only rules out a domain element mapped twice and two domain
/// elements sharing an image; [`dense_interleave`] checks totality and the
/// image against concrete sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    mapping: HashMap<ElementId, ElementId>,
}

impl Bijection {
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementId, ElementId)>,
    {
        let mut mapping = HashMap::new();
        let mut preimage: HashMap<ElementId, ElementId> = HashMap::new();
        for (y, x) in pairs {
            if let Some(prev) = preimage.get(&x) {
                if *prev != y {
                    return Err(OrderError::NotBijective(format!(
                        "`{prev}` and `{y}` both map to `{x}`"
                    )));
                }
            }
            match mapping.get(&y) {
                Some(old) if *old != x => {
                    return Err(OrderError::NotBijective(format!(
                        "`{y}` maps to both `{old}` and `{x}`"
                    )));
                }
                _ => {}
            }
            preimage.insert(x.clone(), y.clone());
            mapping.insert(y, x);
        }
        Ok(Bijection { mapping })
    }

    pub fn get(&self, y: &ElementId) -> Option<&ElementId> {
        self.mapping.get(y)
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    /// One-to-one and onto from `domain` to `codomain`.
    pub fn check(&self, domain: &[ElementId], codomain: &[ElementId]) -> Result<()> {
        let dom: HashSet<&ElementId> = domain.iter().collect();
        // sorted so the reported culprit does not depend on hash order
        let mut keys: Vec<&ElementId> = self.mapping.keys().collect();
        keys.sort();
        if let Some(y) = keys.into_iter().find(|y| !dom.contains(y)) {
            return Err(OrderError::UnknownElement(y.clone()));
        }
        if let Some(y) = domain.iter().find(|y| !self.mapping.contains_key(*y)) {
            return Err(OrderError::NotBijective(format!("`{y}` has no image")));
        }
        let cod: HashSet<&ElementId> = codomain.iter().collect();
        for y in domain {
            let x = &self.mapping[y];
            if !cod.contains(x) {
                return Err(OrderError::NotBijective(format!(
                    "image `{x}` of `{y}` is outside the codomain"
                )));
            }
        }
        let image: HashSet<&ElementId> = self.mapping.values().collect();
        if let Some(x) = codomain.iter().find(|x| !image.contains(x)) {
            return Err(OrderError::NotBijective(format!("`{x}` is not in the image")));
        }
        Ok(())
    }
}

/// Total order on `X ∪ Y` alternating `y, phi(y), y', phi(y'), ...`, with
/// the order of `Y` chosen by `policy`. Between any two elements of `Y`
/// there is then an element of `X`.
///
/// `X` and `Y` must be disjoint and `phi` a bijection from `Y` onto `X`.
pub fn dense_interleave(
    y: &[ElementId],
    x: &[ElementId],
    phi: &Bijection,
    policy: TieBreakPolicy,
) -> Result<LinearOrder> {
    index_sequence(y)?;
    let xs = index_sequence(x)?;
    if let Some(e) = y.iter().find(|e| xs.contains_key(e)) {
        return Err(OrderError::NotDisjoint(e.clone()));
    }
    phi.check(y, x)?;

    let mut items: Vec<(usize, &ElementId)> = y.iter().enumerate().collect();
    Chooser::new(policy).arrange(&mut items);
    let mut out = Vec::with_capacity(2 * y.len());
    for (_, e) in items {
        out.push(e.clone());
        out.push(phi.mapping[e].clone());
    }
    order_from_enumeration(out)
}

/// A pair `a < b` of `t2` with no element of `t1` between them, if any.
///
/// Between means strictly (`a < c < b`) when `strict`, otherwise
/// `a <= c <= b`, so an endpoint in `t1` counts. The reported pair is the
/// earliest adjacent pair of `t2` in the order that fails.
pub fn density_gap(
    t1: &[ElementId],
    t2: &[ElementId],
    order: &LinearOrder,
    strict: bool,
) -> Result<Option<(ElementId, ElementId)>> {
    let pos = |e: &ElementId| order.position(e).ok_or_else(|| OrderError::UnknownElement(e.clone()));
    let mut in_t1 = vec![false; order.len()];
    for e in t1 {
        in_t1[pos(e)?] = true;
    }
    let mut p2 = t2.iter().map(pos).collect::<Result<Vec<_>>>()?;
    p2.sort_unstable();
    p2.dedup();

    // prefix[i] = members of t1 among the first i positions
    let mut prefix = vec![0usize; order.len() + 1];
    for i in 0..order.len() {
        prefix[i + 1] = prefix[i] + usize::from(in_t1[i]);
    }
    // adjacent pairs suffice: any wider pair contains an adjacent one
    for w in p2.windows(2) {
        let (a, b) = (w[0], w[1]);
        let between = if strict {
            prefix[b] - prefix[a + 1]
        } else {
            prefix[b + 1] - prefix[a]
        };
        if between == 0 {
            let s = order.sequence();
            return Ok(Some((s[a].clone(), s[b].clone())));
        }
    }
    Ok(None)
}

/// Whether `t1` is dense (or, with `strict`, strictly dense) in `t2` under
/// `order`.
pub fn is_dense(t1: &[ElementId], t2: &[ElementId], order: &LinearOrder, strict: bool) -> Result<bool> {
    density_gap(t1, t2, order, strict).map(|gap| gap.is_none())
}
