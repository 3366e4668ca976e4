//! Finite partial and total orders.
//!
//! Relations are stored in strict form: the reflexive pairs `(x, x)` are
//! implicit and never materialized. A [`Poset`] keeps its ground set as an
//! ordered sequence; that input order is the default tie-break source for
//! every construction downstream.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::bits::BitMatrix;
use crate::error::{OrderError, Result};

/// Identifier of a ground-set member.
///
/// A token is nonempty and contains neither whitespace nor `<`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.contains('<') || token.chars().any(char::is_whitespace) {
            return Err(OrderError::InvalidToken(token));
        }
        Ok(ElementId(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for ElementId {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self> {
        ElementId::new(s)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for ElementId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Parses a list of tokens, failing on the first invalid one.
pub fn ids<S: AsRef<str>>(tokens: &[S]) -> Result<Vec<ElementId>> {
    tokens.iter().map(|t| ElementId::new(t.as_ref())).collect()
}

/// A finite irreflexive set of ordered pairs.
///
/// Iteration order is the token order of `(first, second)`, so two equal
/// relations always print identically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct StrictRelation {
    pairs: BTreeSet<(ElementId, ElementId)>,
}

impl StrictRelation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a relation, rejecting any reflexive pair.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ElementId, ElementId)>,
    {
        let mut rel = StrictRelation::new();
        for (x, y) in pairs {
            rel.insert(x, y)?;
        }
        Ok(rel)
    }

    pub fn insert(&mut self, x: ElementId, y: ElementId) -> Result<bool> {
        if x == y {
            return Err(OrderError::AntisymmetryViolation {
                cycle: vec![x.clone(), x],
            });
        }
        Ok(self.pairs.insert((x, y)))
    }

    pub fn contains(&self, x: &ElementId, y: &ElementId) -> bool {
        // BTreeSet<(A, B)> cannot be probed with borrowed halves
        self.pairs.contains(&(x.clone(), y.clone()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(ElementId, ElementId)> {
        self.pairs.iter()
    }

    pub fn is_subset(&self, other: &StrictRelation) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// Endpoints in first-appearance order of the sorted pair list.
    fn elements(&self) -> Vec<ElementId> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (x, y) in &self.pairs {
            for e in [x, y] {
                if seen.insert(e) {
                    out.push(e.clone());
                }
            }
        }
        out
    }
}

impl<'a> IntoIterator for &'a StrictRelation {
    type Item = &'a (ElementId, ElementId);
    type IntoIter = std::collections::btree_set::Iter<'a, (ElementId, ElementId)>;

    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}

/// Smallest transitively closed superset of `relation`.
///
/// Fails with [`OrderError::ClosureCreatesReflexivePair`] when the input has a
/// cycle; the witness is the smallest token on some cycle.
pub fn transitive_closure(relation: &StrictRelation) -> Result<StrictRelation> {
    let elems = relation.elements();
    let index: HashMap<&ElementId, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = BitMatrix::new(elems.len());
    for (x, y) in relation {
        m.set(index[x], index[y]);
    }
    m.close();
    if let Some(e) = elems
        .iter()
        .enumerate()
        .filter(|&(i, _)| m.get(i, i))
        .map(|(_, e)| e)
        .min()
    {
        return Err(OrderError::ClosureCreatesReflexivePair(e.clone()));
    }
    let mut out = BTreeSet::new();
    for i in 0..elems.len() {
        for j in m.row(i) {
            out.insert((elems[i].clone(), elems[j].clone()));
        }
    }
    Ok(StrictRelation { pairs: out })
}

/// A finite partial order in strict form over an ordered ground sequence.
#[derive(Debug, Clone)]
pub struct Poset {
    ground: Vec<ElementId>,
    index: HashMap<ElementId, usize>,
    less: BitMatrix,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.less == other.less
    }
}

impl Eq for Poset {}

fn index_ground(ground: &[ElementId]) -> Result<HashMap<ElementId, usize>> {
    let mut index = HashMap::with_capacity(ground.len());
    for (i, e) in ground.iter().enumerate() {
        if index.insert(e.clone(), i).is_some() {
            return Err(OrderError::DuplicateElement(e.clone()));
        }
    }
    Ok(index)
}

/// Checks that `pairs` is a partial order on `ground` and builds the [`Poset`].
///
/// With `auto_close` the stored relation is the transitive closure of
/// `pairs`; without it, a relation that is not already closed is rejected
/// with a witness triple. Cycles are reported as one shortest cycle.
pub fn validate<I>(ground: Vec<ElementId>, pairs: I, auto_close: bool) -> Result<Poset>
where
    I: IntoIterator<Item = (ElementId, ElementId)>,
{
    let index = index_ground(&ground)?;
    let n = ground.len();
    let mut raw = BitMatrix::new(n);
    for (x, y) in pairs {
        let i = *index.get(&x).ok_or_else(|| OrderError::UnknownElement(x.clone()))?;
        let j = *index.get(&y).ok_or_else(|| OrderError::UnknownElement(y.clone()))?;
        raw.set(i, j);
    }

    let mut closed = raw.clone();
    closed.close();
    if (0..n).any(|i| closed.get(i, i)) {
        let cycle = shortest_cycle(&raw)
            .expect("closure has a reflexive pair, so the graph has a cycle")
            .into_iter()
            .map(|i| ground[i].clone())
            .collect();
        return Err(OrderError::AntisymmetryViolation { cycle });
    }

    if !auto_close && closed != raw {
        let (x, y, z) = missing_transitive_pair(&raw).expect("raw differs from its closure");
        return Err(OrderError::NotClosed {
            x: ground[x].clone(),
            y: ground[y].clone(),
            z: ground[z].clone(),
        });
    }

    Ok(Poset {
        ground,
        index,
        less: closed,
    })
}

/// Shortest directed cycle as a closed walk `[s, .., s]`; ties go to the
/// smallest start index.
fn shortest_cycle(g: &BitMatrix) -> Option<Vec<usize>> {
    let n = g.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        if g.get(s, s) {
            return Some(vec![s, s]);
        }
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut closing = None;
        'bfs: while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| dist[u] + 2 >= b.len()) {
                break;
            }
            for v in g.row(u) {
                if v == s {
                    closing = Some(u);
                    break 'bfs;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if let Some(last) = closing {
            let mut path = vec![last];
            while *path.last().unwrap() != s {
                path.push(parent[*path.last().unwrap()]);
            }
            path.reverse();
            path.push(s);
            if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                best = Some(path);
            }
        }
    }
    best
}

fn missing_transitive_pair(g: &BitMatrix) -> Option<(usize, usize, usize)> {
    let n = g.len();
    for x in 0..n {
        for y in g.row(x) {
            for z in g.row(y) {
                if z != x && !g.get(x, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

impl Poset {
    /// A poset with no strict pairs.
    pub fn antichain(ground: Vec<ElementId>) -> Result<Self> {
        validate(ground, std::iter::empty(), false)
    }

    /// The chain `ground[0] < ground[1] < ...`.
    pub fn chain(ground: Vec<ElementId>) -> Result<Self> {
        let pairs: Vec<_> = ground.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        validate(ground, pairs, true)
    }

    pub fn ground(&self) -> &[ElementId] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn index_of(&self, x: &ElementId) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub(crate) fn require(&self, x: &ElementId) -> Result<usize> {
        self.index_of(x).ok_or_else(|| OrderError::UnknownElement(x.clone()))
    }

    /// Strict comparison `x < y`.
    pub fn less_than(&self, x: &ElementId, y: &ElementId) -> Result<bool> {
        Ok(self.less.get(self.require(x)?, self.require(y)?))
    }

    pub(crate) fn less_idx(&self, i: usize, j: usize) -> bool {
        self.less.get(i, j)
    }

    pub(crate) fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.less.row(i)
    }

    pub fn pair_count(&self) -> usize {
        self.less.count_ones()
    }

    /// Strict pairs ordered by the ground positions of their endpoints.
    pub fn pairs(&self) -> impl Iterator<Item = (&ElementId, &ElementId)> + '_ {
        (0..self.len()).flat_map(move |i| self.less.row(i).map(move |j| (&self.ground[i], &self.ground[j])))
    }

    pub fn relation(&self) -> StrictRelation {
        StrictRelation {
            pairs: self.pairs().map(|(x, y)| (x.clone(), y.clone())).collect(),
        }
    }

    /// True iff `x == y` or the two are related in either direction.
    pub fn is_comparable(&self, x: &ElementId, y: &ElementId) -> Result<bool> {
        let (i, j) = (self.require(x)?, self.require(y)?);
        Ok(i == j || self.less.get(i, j) || self.less.get(j, i))
    }

    /// Every incomparable pair once, as `(earlier, later)` in ground order.
    pub fn incomparable_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.less.get(i, j) && !self.less.get(j, i) {
                    out.push((self.ground[i].clone(), self.ground[j].clone()));
                }
            }
        }
        out
    }

    pub fn is_total(&self) -> bool {
        let n = self.len();
        self.pair_count() == n * n.saturating_sub(1) / 2
    }

    /// Restriction of the order to `subset`, which becomes the new ground
    /// sequence in the given order.
    pub fn restrict(&self, subset: &[ElementId]) -> Result<Poset> {
        let mut seen = HashSet::with_capacity(subset.len());
        let mut idx = Vec::with_capacity(subset.len());
        for e in subset {
            if !seen.insert(e) {
                return Err(OrderError::DuplicateElement(e.clone()));
            }
            idx.push(self.require(e)?);
        }
        let mut less = BitMatrix::new(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.less.get(i, j) {
                    less.set(a, b);
                }
            }
        }
        let ground = subset.to_vec();
        let index = index_ground(&ground)?;
        Ok(Poset { ground, index, less })
    }

    /// Adds `(i, j)` and recloses. Caller guarantees `j` is not below `i`.
    pub(crate) fn with_pair_closed(&self, i: usize, j: usize) -> Poset {
        let mut less = self.less.clone();
        // Everything at or below i now precedes everything at or above j.
        let below: Vec<usize> = (0..self.len()).filter(|&k| k == i || less.get(k, i)).collect();
        let above: Vec<usize> = std::iter::once(j).chain(less.row(j)).collect();
        for &d in &below {
            for &u in &above {
                less.set(d, u);
            }
        }
        Poset {
            ground: self.ground.clone(),
            index: self.index.clone(),
            less,
        }
    }
}

/// A strict total order given by a permutation of its ground.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    sequence: Vec<ElementId>,
    position: HashMap<ElementId, usize>,
}

/// The total order that lists `sequence` from least to greatest.
///
/// Its strict pairs are exactly `(s_i, s_j)` for `i < j`.
pub fn order_from_enumeration(sequence: Vec<ElementId>) -> Result<LinearOrder> {
    let position = index_ground(&sequence)?;
    Ok(LinearOrder { sequence, position })
}

impl LinearOrder {
    pub fn sequence(&self) -> &[ElementId] {
        &self.sequence
    }

    pub fn into_sequence(self) -> Vec<ElementId> {
        self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn position(&self, x: &ElementId) -> Option<usize> {
        self.position.get(x).copied()
    }

    /// Strict comparison: `x` comes before `y`.
    pub fn precedes(&self, x: &ElementId, y: &ElementId) -> Result<bool> {
        let px = self.position(x).ok_or_else(|| OrderError::UnknownElement(x.clone()))?;
        let py = self.position(y).ok_or_else(|| OrderError::UnknownElement(y.clone()))?;
        Ok(px < py)
    }

    pub fn induced_pairs(&self) -> StrictRelation {
        let mut pairs = BTreeSet::new();
        for (i, x) in self.sequence.iter().enumerate() {
            for y in &self.sequence[i + 1..] {
                pairs.insert((x.clone(), y.clone()));
            }
        }
        StrictRelation { pairs }
    }

    /// Every pair of `relation` runs forward in this order.
    pub fn contains_relation(&self, relation: &StrictRelation) -> bool {
        relation
            .iter()
            .all(|(x, y)| matches!((self.position(x), self.position(y)), (Some(a), Some(b)) if a < b))
    }

    /// Same ground set as `poset` and contains its relation.
    pub fn extends(&self, poset: &Poset) -> bool {
        self.len() == poset.len()
            && poset.ground().iter().all(|e| self.position.contains_key(e))
            && poset.pairs().all(|(x, y)| self.position[x] < self.position[y])
    }
}

/// `a < b < c`
impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.sequence.iter().enumerate() {
            if i > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
