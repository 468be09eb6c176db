//! Admissible maps on join-irreducibles, the induced minimum-generator edge
//! labeling, the R-labeling check, and descent statistics of maximal nested
//! sets (whose generating polynomial is the h-polynomial).

use crate::building::{lattice_heights, BuiltLattice};
use crate::nested::{is_nested, nested_facets};
use crate::partition::PartitionLattice;
use crate::poset::{Elem, Lattice};
use crate::vectors::IntPoly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("element {0} is not join-irreducible")]
    NotJoinIrreducible(Elem),
    #[error("no join-irreducible generates the cover ({0}, {1})")]
    NoGenerator(Elem, Elem),
    #[error("map must be injective on join-irreducibles (value {0} repeats)")]
    NotInjective(u64),
    #[error("the given set is not a maximal nested set")]
    NotMaximal,
}

/// A weighting of the join-irreducible elements. Only the relative order of
/// values ever matters.
#[derive(Debug, Clone)]
pub struct AdmissibleMap {
    values: Vec<Option<u64>>,
}

impl AdmissibleMap {
    pub fn new(l: &Lattice, assignments: &[(Elem, u64)]) -> Result<Self, LabelingError> {
        let mut values = vec![None; l.len()];
        for &(e, v) in assignments {
            if !l.is_join_irreducible(e) {
                return Err(LabelingError::NotJoinIrreducible(e));
            }
            values[e] = Some(v);
        }
        Ok(AdmissibleMap { values })
    }

    pub fn value(&self, e: Elem) -> Option<u64> {
        self.values[e]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<u64> = self.values.iter().flatten().copied().collect();
        let n = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == n
    }

    pub fn max_value(&self) -> u64 {
        self.values.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The join-irreducible with the largest weight.
    pub fn argmax(&self) -> Option<Elem> {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(e, v)| v.map(|v| (v, e)))
            .max()
            .map(|(_, e)| e)
    }
}

/// Weight all join-irreducibles injectively in (height, identifier) order.
/// For a geometric lattice this weights the atoms 1, 2, 3, … and is
/// admissible by Stanley's theorem on semimodular lattices.
pub fn default_admissible_map(l: &Lattice) -> AdmissibleMap {
    let heights = lattice_heights(l);
    let mut irr = l.join_irreducibles();
    irr.sort_by_key(|&e| (heights[e], e));
    let assignments: Vec<(Elem, u64)> = irr
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i as u64 + 1))
        .collect();
    AdmissibleMap::new(l, &assignments).expect("join-irreducibles only")
}

/// The atom order of the partition lattice used by the Stirling bijection:
/// `ω(|i<j|) < ω(|i'<j'|)` iff `(i, j) < (i', j')` lexicographically.
pub fn stirling_atom_order(pl: &PartitionLattice) -> AdmissibleMap {
    let mut pairs: Vec<(i64, i64, Elem)> = pl
        .lattice
        .atoms()
        .into_iter()
        .map(|a| {
            let block = pl.connected_block(a).expect("atoms are connected");
            let vals = pl.block_values(block);
            (vals[0], vals[1], a)
        })
        .collect();
    pairs.sort_unstable();
    let assignments: Vec<(Elem, u64)> = pairs
        .into_iter()
        .enumerate()
        .map(|(i, (_, _, e))| (e, i as u64 + 1))
        .collect();
    AdmissibleMap::new(&pl.lattice, &assignments).expect("atoms are join-irreducible")
}

/// `λ_ω(a ⋖ b) = min { ω(I) : I join-irreducible, a ∨ I = b }`.
pub fn edge_label(
    l: &Lattice,
    omega: &AdmissibleMap,
    a: Elem,
    b: Elem,
) -> Result<u64, LabelingError> {
    edge_label_element(l, omega, a, b).map(|e| omega.value(e).unwrap())
}

/// The ω-minimizing join-irreducible generator of a cover (unique when ω is
/// injective).
pub fn edge_label_element(
    l: &Lattice,
    omega: &AdmissibleMap,
    a: Elem,
    b: Elem,
) -> Result<Elem, LabelingError> {
    let mut best: Option<(u64, Elem)> = None;
    for e in 0..l.len() {
        if let Some(v) = omega.value(e) {
            if l.join(a, e) == b {
                best = Some(match best {
                    None => (v, e),
                    Some(cur) => cur.min((v, e)),
                });
            }
        }
    }
    best.map(|(_, e)| e).ok_or(LabelingError::NoGenerator(a, b))
}

/// Witness of a failed R-labeling check: an interval with `count` weakly
/// increasing saturated chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityWitness {
    pub lower: Elem,
    pub upper: Elem,
    pub count: usize,
}

/// R-labeling check: every interval has exactly one weakly increasing
/// saturated chain.
pub fn is_admissible(l: &Lattice, omega: &AdmissibleMap) -> Result<(), AdmissibilityWitness> {
    let m = l.len();
    // cover labels once
    let mut labels: Vec<Vec<(Elem, u64)>> = vec![Vec::new(); m]; // from x: (y, λ(x,y))
    for &(x, y) in l.poset().covers() {
        let lab = edge_label(l, omega, x, y).expect("covers always have a generator");
        labels[x].push((y, lab));
    }
    for a in 0..m {
        // counts[x]: weakly increasing chains a → x grouped by last label
        let mut counts: Vec<Vec<(u64, u32)>> = vec![Vec::new(); m];
        counts[a].push((0, 1)); // sentinel label below every real label
        for &x in l.poset().linear_extension() {
            if !l.leq(a, x) || counts[x].is_empty() {
                continue;
            }
            for &(y, lab) in &labels[x] {
                let total: u32 = counts[x]
                    .iter()
                    .filter(|&&(last, _)| last <= lab)
                    .map(|&(_, c)| c)
                    .sum();
                if total > 0 {
                    match counts[y].iter_mut().find(|(l2, _)| *l2 == lab) {
                        Some(entry) => entry.1 = entry.1.saturating_add(total),
                        None => counts[y].push((lab, total)),
                    }
                }
            }
        }
        for (b, cb) in counts.iter().enumerate() {
            if !l.leq(a, b) {
                continue;
            }
            let total: u32 = cb.iter().map(|&(_, c)| c).sum();
            if total != 1 {
                return Err(AdmissibilityWitness {
                    lower: a,
                    upper: b,
                    count: total as usize,
                });
            }
        }
    }
    Ok(())
}

/// Labeled tree data of a maximal nested set: nodes are the members plus the
/// maximal elements of G (the roots; for an irreducible built lattice, the
/// single root stands for 1̂).
#[derive(Debug, Clone)]
pub struct DescentData {
    /// Members of S in (height, id) order, followed by the roots.
    pub nodes: Vec<Elem>,
    /// Number of member nodes (the rest are roots).
    pub member_count: usize,
    /// Parent index within `nodes`; `None` on roots.
    pub parent: Vec<Option<usize>>,
    /// `λ(G) = λ_ω(⋁S_{<G}, G)` per node.
    pub label_value: Vec<u64>,
    /// The ω-minimizing generator realizing each label.
    pub label_element: Vec<Elem>,
    /// `⋁S_{<G}` per node.
    pub lower_join: Vec<Elem>,
    /// Members that are descents.
    pub descents: Vec<Elem>,
}

/// Build the tree/label data of a maximal nested set. Errors with
/// `NotMaximal` when some local interval is not a cover.
pub fn descent_data(
    bl: &BuiltLattice,
    omega: &AdmissibleMap,
    s: &[Elem],
) -> Result<DescentData, LabelingError> {
    let l = bl.lattice();
    let heights = lattice_heights(l);
    let mut members: Vec<Elem> = s.to_vec();
    members.sort_unstable();
    members.dedup();
    if !is_nested(bl, &members) || members.iter().any(|m| bl.max_g().contains(m)) {
        return Err(LabelingError::NotMaximal);
    }
    members.sort_by_key(|&g| (heights[g], g));
    let member_count = members.len();
    let mut nodes = members.clone();
    nodes.extend(bl.max_g().iter().copied());
    let mut parent = Vec::with_capacity(nodes.len());
    let mut label_value = Vec::with_capacity(nodes.len());
    let mut label_element = Vec::with_capacity(nodes.len());
    let mut lower_join = Vec::with_capacity(nodes.len());
    for (i, &g) in nodes.iter().enumerate() {
        let j = l.join_set(members.iter().copied().filter(|&x| x != g && l.lt(x, g)));
        // maximality: the local interval [J, G] must be a cover
        if !l.poset().covers_of(j).contains(&g) {
            return Err(LabelingError::NotMaximal);
        }
        let e = edge_label_element(l, omega, j, g)?;
        lower_join.push(j);
        label_element.push(e);
        label_value.push(omega.value(e).unwrap());
        if i < member_count {
            let mut above: Vec<(usize, Elem)> = nodes
                .iter()
                .enumerate()
                .filter(|&(_, &h)| l.lt(g, h))
                .map(|(k, &h)| (k, h))
                .collect();
            above.sort_by_key(|&(_, h)| (heights[h], h));
            match above.first() {
                Some(&(k, h)) => {
                    // tree property: the chosen parent must lie below all others
                    if !above.iter().all(|&(_, h2)| l.leq(h, h2)) {
                        return Err(LabelingError::NotMaximal);
                    }
                    parent.push(Some(k));
                }
                None => return Err(LabelingError::NotMaximal),
            }
        } else {
            parent.push(None);
        }
    }
    let descents: Vec<Elem> = (0..member_count)
        .filter(|&i| {
            let p = parent[i].expect("members have parents");
            label_value[i] > label_value[p]
        })
        .map(|i| nodes[i])
        .collect();
    Ok(DescentData {
        nodes,
        member_count,
        parent,
        label_value,
        label_element,
        lower_join,
        descents,
    })
}

pub fn descent_number(
    bl: &BuiltLattice,
    omega: &AdmissibleMap,
    s: &[Elem],
) -> Result<usize, LabelingError> {
    Ok(descent_data(bl, omega, s)?.descents.len())
}

/// `Σ t^{des(S)}` over the maximal nested sets; equals the h-polynomial of
/// the nested set complex.
pub fn descent_h_polynomial(
    bl: &BuiltLattice,
    omega: &AdmissibleMap,
) -> Result<IntPoly, LabelingError> {
    if !omega.is_injective() {
        return Err(LabelingError::NotInjective(0));
    }
    let mut poly = IntPoly::zero();
    for facet in nested_facets(bl) {
        let des = descent_number(bl, omega, &facet)?;
        poly.add_term(des, 1);
    }
    Ok(poly)
}

/// Label preservation under composition: the label of a rank-one local
/// interval of `S_G` (inside the local interval `locals[idx]` of `S`) equals
/// the label of its image under composition.
pub fn label_compatibility_check(
    bl: &BuiltLattice,
    omega: &AdmissibleMap,
    s: &[Elem],
    locals: &[crate::nested::LocalInterval],
    idx: usize,
    s_g: &[Elem],
) -> Result<bool, crate::nested::NestedError> {
    let l = bl.lattice();
    let li = &locals[idx];
    let composed = crate::nested::compose(bl, s, locals, &[(idx, s_g.to_vec())])?;
    for &gp in s_g {
        // lower join of gp within S_G, over the base J^G
        let j_local = s_g
            .iter()
            .copied()
            .filter(|&x| x != gp && l.lt(x, gp))
            .fold(li.lower, |acc, x| l.join(acc, x));
        if !l.poset().covers_of(j_local).contains(&gp) {
            continue; // only rank-one local intervals carry a label
        }
        let left = edge_label(l, omega, j_local, gp).expect("cover has generator");
        let y = crate::nested::quotient(bl, li.lower, gp)?;
        let j_comp = l.join_set(composed.iter().copied().filter(|&x| x != y && l.lt(x, y)));
        if !l.poset().covers_of(j_comp).contains(&y) {
            return Ok(false);
        }
        let right = edge_label(l, omega, j_comp, y).expect("cover has generator");
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}
