//! Finite posets and lattices: exact order relations, join/meet tables,
//! rank functions, intervals, products, and isomorphism testing.
//!
//! Elements are dense identifiers `0..m-1` with opaque display labels.
//! Up-sets and down-sets are kept as bit sets so that order queries and
//! join/meet computations stay word-parallel.

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Dense element identifier within one poset.
pub type Elem = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(Elem),
    #[error("relation is not antisymmetric on pair ({0}, {1})")]
    NotAntisymmetric(Elem, Elem),
    #[error("relation is not transitive on ({0}, {1}, {2})")]
    NotTransitive(Elem, Elem, Elem),
    #[error("cover list contains a cycle through element {0}")]
    CyclicCovers(Elem),
    #[error("element index {0} out of range")]
    OutOfRange(Elem),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("pair ({0}, {1}) has no {2}")]
    NotALattice(Elem, Elem, BoundKind),
    #[error("poset is empty")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Supremum,
    Infimum,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Supremum => write!(f, "supremum"),
            BoundKind::Infimum => write!(f, "infimum"),
        }
    }
}

/// Witness for a non-graded lattice: two saturated chains from the bottom to
/// the same element with different lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotGraded {
    pub element: Elem,
    pub short_chain: Vec<Elem>,
    pub long_chain: Vec<Elem>,
}

impl std::fmt::Display for NotGraded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "not graded at element {}: chains of lengths {} and {}",
            self.element,
            self.short_chain.len() - 1,
            self.long_chain.len() - 1
        )
    }
}

impl std::error::Error for NotGraded {}

/// A finite poset on elements `0..len()`.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    covers: Vec<(Elem, Elem)>,
    upcov: Vec<Vec<Elem>>,
    downcov: Vec<Vec<Elem>>,
    /// A linear extension: elements sorted by down-set size.
    topo: Vec<Elem>,
}

impl Poset {
    /// Build from a black-box order relation, verifying the partial order axioms.
    pub fn from_leq<F: Fn(Elem, Elem) -> bool>(
        labels: Vec<String>,
        leq: F,
    ) -> Result<Self, PosetError> {
        let m = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        for (a, ua) in up.iter_mut().enumerate() {
            for b in 0..m {
                if leq(a, b) {
                    ua.insert(b);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// Build from a cover list; the order is the reflexive-transitive closure.
    pub fn from_covers(labels: Vec<String>, covers: &[(Elem, Elem)]) -> Result<Self, PosetError> {
        let m = labels.len();
        let mut above = vec![Vec::new(); m];
        for &(a, b) in covers {
            if a >= m {
                return Err(PosetError::OutOfRange(a));
            }
            if b >= m {
                return Err(PosetError::OutOfRange(b));
            }
            above[a].push(b);
        }
        // Reverse-topological closure; cycle detection via DFS colors.
        let mut up = vec![FixedBitSet::with_capacity(m); m];
        let mut state = vec![0u8; m]; // 0 unseen, 1 open, 2 done
        fn close(
            x: Elem,
            above: &[Vec<Elem>],
            up: &mut [FixedBitSet],
            state: &mut [u8],
        ) -> Result<(), PosetError> {
            if state[x] == 1 {
                return Err(PosetError::CyclicCovers(x));
            }
            if state[x] == 2 {
                return Ok(());
            }
            state[x] = 1;
            up[x].insert(x);
            for i in 0..above[x].len() {
                let y = above[x][i];
                close(y, above, up, state)?;
                let uy = up[y].clone();
                up[x].union_with(&uy);
            }
            state[x] = 2;
            Ok(())
        }
        for x in 0..m {
            close(x, &above, &mut up, &mut state)?;
        }
        Self::from_up_sets(labels, up)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Self, PosetError> {
        let m = labels.len();
        for (a, ua) in up.iter().enumerate() {
            if !ua.contains(a) {
                return Err(PosetError::NotReflexive(a));
            }
        }
        for (a, ua) in up.iter().enumerate() {
            for b in ua.ones() {
                if a != b && up[b].contains(a) {
                    return Err(PosetError::NotAntisymmetric(a, b));
                }
                if !up[b].is_subset(ua) {
                    let c = up[b].ones().find(|&c| !ua.contains(c)).unwrap();
                    return Err(PosetError::NotTransitive(a, b, c));
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(m); m];
        for (a, ua) in up.iter().enumerate() {
            for b in ua.ones() {
                down[b].insert(a);
            }
        }
        // Transitive reduction: b covers a iff nothing sits strictly between.
        let mut covers = Vec::new();
        let mut upcov = vec![Vec::new(); m];
        let mut downcov = vec![Vec::new(); m];
        for a in 0..m {
            for b in up[a].ones() {
                if a == b {
                    continue;
                }
                let mut between = up[a].clone();
                between.intersect_with(&down[b]);
                between.remove(a);
                between.remove(b);
                if between.count_ones(..) == 0 {
                    covers.push((a, b));
                    upcov[a].push(b);
                    downcov[b].push(a);
                }
            }
        }
        covers.sort_unstable();
        let mut topo: Vec<Elem> = (0..m).collect();
        topo.sort_by_key(|&x| (down[x].count_ones(..), x));
        Ok(Poset {
            labels,
            up,
            down,
            covers,
            upcov,
            downcov,
            topo,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn up_set(&self, a: Elem) -> &FixedBitSet {
        &self.up[a]
    }

    pub fn down_set(&self, a: Elem) -> &FixedBitSet {
        &self.down[a]
    }

    /// Covering pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    /// Elements covering `x`.
    pub fn covers_of(&self, x: Elem) -> &[Elem] {
        &self.upcov[x]
    }

    /// Elements covered by `x`.
    pub fn covered_by(&self, x: Elem) -> &[Elem] {
        &self.downcov[x]
    }

    /// A fixed linear extension (used to locate minima of up-set intersections).
    pub fn linear_extension(&self) -> &[Elem] {
        &self.topo
    }

    /// Direct product, with pair labels.
    pub fn product(&self, other: &Poset) -> Poset {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for a in 0..self.len() {
            for b in 0..other.len() {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let n = other.len();
        Poset::from_leq(labels, |x, y| {
            self.leq(x / n, y / n) && other.leq(x % n, y % n)
        })
        .expect("product of posets is a poset")
    }

    /// Search for an order isomorphism onto `other`; returns the element map.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<Elem>> {
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let m = self.len();
        let colors_p = refine_colors(self);
        let colors_q = refine_colors(other);
        let mut sorted_p = colors_p.clone();
        let mut sorted_q = colors_q.clone();
        sorted_p.sort_unstable();
        sorted_q.sort_unstable();
        if sorted_p != sorted_q {
            return None;
        }
        // Most-constrained-first assignment order.
        let mut order: Vec<Elem> = (0..m).collect();
        let mut freq = std::collections::HashMap::new();
        for &c in &colors_p {
            *freq.entry(c).or_insert(0usize) += 1;
        }
        order.sort_by_key(|&x| (freq[&colors_p[x]], colors_p[x], x));
        let mut map = vec![usize::MAX; m];
        let mut used = vec![false; m];
        if self.iso_search(other, &colors_p, &colors_q, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_search(
        &self,
        other: &Poset,
        cp: &[u64],
        cq: &[u64],
        order: &[Elem],
        idx: usize,
        map: &mut Vec<Elem>,
        used: &mut Vec<bool>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let x = order[idx];
        for y in 0..other.len() {
            if used[y] || cp[x] != cq[y] {
                continue;
            }
            let ok = order[..idx].iter().all(|&x2| {
                let y2 = map[x2];
                self.leq(x, x2) == other.leq(y, y2) && self.leq(x2, x) == other.leq(y2, y)
            });
            if ok {
                map[x] = y;
                used[y] = true;
                if self.iso_search(other, cp, cq, order, idx + 1, map, used) {
                    return true;
                }
                map[x] = usize::MAX;
                used[y] = false;
            }
        }
        false
    }
}

/// Iterated neighborhood refinement on the cover digraph.
fn refine_colors(p: &Poset) -> Vec<u64> {
    use std::collections::hash_map::DefaultHasher;
    use std::hash::{Hash, Hasher};
    let m = p.len();
    let mut colors: Vec<u64> = (0..m)
        .map(|x| {
            let mut h = DefaultHasher::new();
            (
                p.upcov[x].len(),
                p.downcov[x].len(),
                p.up[x].count_ones(..),
                p.down[x].count_ones(..),
            )
                .hash(&mut h);
            h.finish()
        })
        .collect();
    for _ in 0..3 {
        let mut next = Vec::with_capacity(m);
        for x in 0..m {
            let mut ups: Vec<u64> = p.upcov[x].iter().map(|&y| colors[y]).collect();
            let mut downs: Vec<u64> = p.downcov[x].iter().map(|&y| colors[y]).collect();
            ups.sort_unstable();
            downs.sort_unstable();
            let mut h = DefaultHasher::new();
            (colors[x], ups, downs).hash(&mut h);
            next.push(h.finish());
        }
        colors = next;
    }
    colors
}

/// A finite lattice: poset plus total join/meet tables and the two bounds.
#[derive(Debug, Clone)]
pub struct Lattice {
    poset: Poset,
    bottom: Elem,
    top: Elem,
    join: Vec<u32>,
    meet: Vec<u32>,
}

/// Rank function of a graded lattice; every cover raises rank by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFunction {
    rank: Vec<usize>,
    top_rank: usize,
}

impl RankFunction {
    pub fn rank(&self, e: Elem) -> usize {
        self.rank[e]
    }

    /// Rank of the top element.
    pub fn top_rank(&self) -> usize {
        self.top_rank
    }
}

impl Lattice {
    /// Check lattice axioms and precompute the `m × m` join and meet tables.
    pub fn from_poset(poset: Poset) -> Result<Self, LatticeError> {
        let m = poset.len();
        if m == 0 {
            return Err(LatticeError::Empty);
        }
        let join = bound_table(&poset, true)?;
        let meet = bound_table(&poset, false)?;
        let mut bottom = 0;
        let mut top = 0;
        for x in 0..m {
            bottom = meet[bottom * m + x] as usize;
            top = join[top * m + x] as usize;
        }
        Ok(Lattice {
            poset,
            bottom,
            top,
            join,
            meet,
        })
    }

    /// Convenience: verify `leq` is a partial order, then build the lattice.
    pub fn from_leq<F: Fn(Elem, Elem) -> bool>(
        labels: Vec<String>,
        leq: F,
    ) -> Result<Self, LatticeError> {
        Self::from_poset(Poset::from_leq(labels, leq)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn label(&self, e: Elem) -> &str {
        self.poset.label(e)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        self.poset.lt(a, b)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.len() + b] as usize
    }

    /// Supremum of a set; the empty join is the bottom element.
    pub fn join_set<I: IntoIterator<Item = Elem>>(&self, set: I) -> Elem {
        set.into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Infimum of a set; the empty meet is the top element.
    pub fn meet_set<I: IntoIterator<Item = Elem>>(&self, set: I) -> Elem {
        set.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn atoms(&self) -> Vec<Elem> {
        self.poset.covers_of(self.bottom).to_vec()
    }

    pub fn is_atom(&self, x: Elem) -> bool {
        self.poset.covered_by(x) == [self.bottom]
    }

    pub fn covers_of(&self, x: Elem) -> &[Elem] {
        self.poset.covers_of(x)
    }

    pub fn covered_by(&self, x: Elem) -> &[Elem] {
        self.poset.covered_by(x)
    }

    /// Elements that cover exactly one element: the join-irreducibles.
    pub fn join_irreducibles(&self) -> Vec<Elem> {
        (0..self.len())
            .filter(|&x| self.poset.covered_by(x).len() == 1)
            .collect()
    }

    pub fn is_join_irreducible(&self, x: Elem) -> bool {
        self.poset.covered_by(x).len() == 1
    }

    /// Rank function if the lattice is graded, otherwise a witness pair of
    /// saturated chains of different lengths to the same element.
    pub fn rank_function(&self) -> Result<RankFunction, NotGraded> {
        let m = self.len();
        let mut shortest = vec![usize::MAX; m];
        let mut longest = vec![0usize; m];
        let mut short_par = vec![usize::MAX; m];
        let mut long_par = vec![usize::MAX; m];
        shortest[self.bottom] = 0;
        for &x in self.poset.linear_extension() {
            for &y in self.poset.covers_of(x) {
                if shortest[x] + 1 < shortest[y] {
                    shortest[y] = shortest[x] + 1;
                    short_par[y] = x;
                }
                if longest[x] + 1 > longest[y] {
                    longest[y] = longest[x] + 1;
                    long_par[y] = x;
                }
            }
        }
        for x in 0..m {
            if shortest[x] != longest[x] {
                let walk = |par: &[usize], mut e: Elem| {
                    let mut chain = vec![e];
                    while e != self.bottom {
                        e = par[e];
                        chain.push(e);
                    }
                    chain.reverse();
                    chain
                };
                return Err(NotGraded {
                    element: x,
                    short_chain: walk(&short_par, x),
                    long_chain: walk(&long_par, x),
                });
            }
        }
        let top_rank = longest[self.top];
        Ok(RankFunction {
            rank: longest,
            top_rank,
        })
    }

    /// The interval `[a, b]` as a fresh lattice plus the embedding back into `self`.
    pub fn interval(&self, a: Elem, b: Elem) -> Result<Sublattice, IntervalError> {
        if !self.leq(a, b) {
            return Err(IntervalError::NotComparable(a, b));
        }
        let mut members = self.poset.up_set(a).clone();
        members.intersect_with(self.poset.down_set(b));
        let embed: Vec<Elem> = members.ones().collect();
        self.sublattice(embed)
    }

    /// Induced lattice on a join- and meet-closed subset containing its bounds.
    pub fn sublattice(&self, embed: Vec<Elem>) -> Result<Sublattice, IntervalError> {
        let labels = embed
            .iter()
            .map(|&e| self.poset.label(e).to_string())
            .collect();
        let lattice = Lattice::from_leq(labels, |x, y| self.leq(embed[x], embed[y]))
            .map_err(|e| IntervalError::NotALattice(format!("{e}")))?;
        Ok(Sublattice { lattice, embed })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(Elem, Elem),
    #[error("induced subposet is not a lattice: {0}")]
    NotALattice(String),
}

/// A lattice carved out of a parent, remembering the parent identifiers.
#[derive(Debug, Clone)]
pub struct Sublattice {
    pub lattice: Lattice,
    /// `embed[new] = old`: map from fresh identifiers to parent identifiers.
    pub embed: Vec<Elem>,
}

impl Sublattice {
    /// Parent identifier of a fresh element.
    pub fn to_parent(&self, e: Elem) -> Elem {
        self.embed[e]
    }

    /// Fresh identifier of a parent element, if present.
    pub fn from_parent(&self, parent: Elem) -> Option<Elem> {
        self.embed.iter().position(|&e| e == parent)
    }
}

/// Compute the join (or meet) table; errors on the first unbounded pair.
fn bound_table(poset: &Poset, joins: bool) -> Result<Vec<u32>, LatticeError> {
    let m = poset.len();
    let mut table = vec![0u32; m * m];
    let order: Vec<Elem> = if joins {
        poset.linear_extension().to_vec()
    } else {
        poset.linear_extension().iter().rev().copied().collect()
    };
    let mut common = FixedBitSet::with_capacity(m);
    for a in 0..m {
        for b in a..m {
            let value = if poset.leq(a, b) {
                if joins {
                    b
                } else {
                    a
                }
            } else if poset.leq(b, a) {
                if joins {
                    a
                } else {
                    b
                }
            } else {
                common.clone_from(if joins {
                    poset.up_set(a)
                } else {
                    poset.down_set(a)
                });
                common.intersect_with(if joins {
                    poset.up_set(b)
                } else {
                    poset.down_set(b)
                });
                // The extreme element of the intersection, if the intersection
                // has one, is its first member in the linear extension.
                let first = order.iter().copied().find(|&x| common.contains(x));
                let kind = if joins {
                    BoundKind::Supremum
                } else {
                    BoundKind::Infimum
                };
                let c = first.ok_or(LatticeError::NotALattice(a, b, kind))?;
                let dominates = if joins {
                    common.is_subset(poset.up_set(c))
                } else {
                    common.is_subset(poset.down_set(c))
                };
                if !dominates {
                    return Err(LatticeError::NotALattice(a, b, kind));
                }
                c
            };
            table[a * m + b] = value as u32;
            table[b * m + a] = value as u32;
        }
    }
    Ok(table)
}

/// The Boolean lattice of all subsets of `{1, …, n}`.
pub fn boolean_lattice(n: usize) -> Lattice {
    assert!(n <= 16, "boolean lattice limited to 16 generators");
    let labels: Vec<String> = (0..1usize << n).map(|mask| subset_label(mask, n)).collect();
    Lattice::from_leq(labels, |a, b| a & !b == 0).expect("powerset is a lattice")
}

pub fn subset_label(mask: usize, n: usize) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(if n > 9 { "," } else { "" })
}

/// A chain with `n + 1` elements `0 < 1 < … < n`.
pub fn chain_lattice(n: usize) -> Lattice {
    let labels = (0..=n).map(|i| i.to_string()).collect();
    Lattice::from_leq(labels, |a, b| a <= b).expect("chain is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_structure() {
        let b3 = boolean_lattice(3);
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.top(), 7);
        assert_eq!(b3.bottom(), 0);
        assert_eq!(b3.label(7), "123");
        // meet({1,2},{2,3}) = {2}
        assert_eq!(b3.meet(0b011, 0b110), 0b010);
        assert_eq!(b3.join(0b001, 0b010), 0b011);
        assert_eq!(b3.atoms(), vec![1, 2, 4]);
        assert_eq!(b3.join_irreducibles(), vec![1, 2, 4]);
    }

    #[test]
    fn join_identities() {
        let b3 = boolean_lattice(3);
        for x in 0..b3.len() {
            assert_eq!(b3.join(x, b3.bottom()), x);
            assert_eq!(b3.meet(x, b3.top()), x);
        }
        assert_eq!(b3.join_set([]), b3.bottom());
        assert_eq!(b3.join_set([1, 2, 4]), 7);
    }

    #[test]
    fn non_lattice_detected() {
        // bottom with two incomparable maximal elements: no supremum
        let labels = vec!["0".into(), "a".into(), "b".into()];
        let p = Poset::from_covers(labels, &[(0, 1), (0, 2)]).unwrap();
        match Lattice::from_poset(p) {
            Err(LatticeError::NotALattice(1, 2, BoundKind::Supremum)) => {}
            other => panic!("expected missing supremum, got {other:?}"),
        }
    }

    #[test]
    fn rank_of_boolean_is_cardinality() {
        let b4 = boolean_lattice(4);
        let rk = b4.rank_function().unwrap();
        for x in 0..b4.len() {
            assert_eq!(rk.rank(x), (x as u32).count_ones() as usize);
        }
        assert_eq!(rk.top_rank(), 4);
    }

    #[test]
    fn non_graded_witness() {
        // Pentagon: 0̂ ⋖ a ⋖ c ⋖ 1̂ and 0̂ ⋖ b ⋖ 1̂, chains of lengths 3 and 2.
        let labels = vec!["0".into(), "a".into(), "c".into(), "b".into(), "1".into()];
        let p = Poset::from_covers(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let l = Lattice::from_poset(p).unwrap();
        let err = l.rank_function().unwrap_err();
        assert_ne!(err.short_chain.len(), err.long_chain.len());
        assert_eq!(
            err.short_chain.last(),
            err.long_chain.last(),
            "witness chains end at the same element"
        );
    }

    #[test]
    fn chain_irreducibles() {
        let c = chain_lattice(2); // 0 < a < b
        assert_eq!(c.join_irreducibles(), vec![1, 2]);
    }

    #[test]
    fn irreducibles_contain_atoms() {
        for l in [boolean_lattice(3), boolean_lattice(4), chain_lattice(4)] {
            let irr = l.join_irreducibles();
            for a in l.atoms() {
                assert!(irr.contains(&a));
            }
        }
    }

    #[test]
    fn interval_of_boolean_is_boolean() {
        let b3 = boolean_lattice(3);
        let iv = b3.interval(0b001, 0b111).unwrap();
        assert_eq!(iv.lattice.len(), 4);
        let b2 = boolean_lattice(2);
        assert!(iv.lattice.poset().isomorphism(b2.poset()).is_some());
        assert_eq!(iv.to_parent(iv.lattice.bottom()), 0b001);
    }

    #[test]
    fn iso_b2_vs_product_of_chains() {
        let b2 = boolean_lattice(2);
        let c1 = chain_lattice(1);
        let prod = c1.poset().product(c1.poset());
        assert!(b2.poset().isomorphism(&prod).is_some());
        let c3 = chain_lattice(3);
        assert!(b2.poset().isomorphism(c3.poset()).is_none());
    }

    #[test]
    fn covers_regenerate_order() {
        let b3 = boolean_lattice(3);
        let rebuilt =
            Poset::from_covers(b3.poset().labels().to_vec(), b3.poset().covers()).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(b3.leq(a, b), rebuilt.leq(a, b));
            }
        }
    }
}
