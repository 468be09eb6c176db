//! Convex ear decompositions of nested set complexes of geometric built
//! lattices: nbc-bases of the atom matroid, the Σ_i/Δ_i ear construction,
//! nested words and their reverse-lexicographic shelling orders, and a
//! clause-by-clause verifier.

use crate::building::{lattice_heights, sub_join_lattice, BuiltLattice};
use crate::complex::{is_subset, SimplicialComplex};
use crate::nested::nested_facets;
use crate::poset::{Elem, Lattice};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CedError {
    #[error("lattice is not graded")]
    NotGraded,
    #[error("lattice is not geometric: {0}")]
    NotGeometric(String),
    #[error("atom order must be a permutation of the atoms")]
    BadAtomOrder,
    #[error("facet {0:?} has label set of wrong size")]
    BadLabelSet(Vec<Elem>),
}

/// Per-clause verification failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CedFailure {
    pub clause: String,
    pub ear: usize,
    pub detail: String,
}

impl std::fmt::Display for CedFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "clause {} fails at ear {}: {}",
            self.clause, self.ear, self.detail
        )
    }
}

impl std::error::Error for CedFailure {}

/// One ear: the nbc-basis, the full restriction subcomplex Σ_i, the selected
/// facets Δ_i, their shelling order, and the boundary ridges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    /// Atom elements of the basis, in ◁-increasing order.
    pub basis: Vec<Elem>,
    /// Facets of Σ_i as sorted vertex-id lists of the ambient complex.
    pub sigma_facets: Vec<Vec<u32>>,
    /// Facets of Δ_i, sorted lexicographically.
    pub delta_facets: Vec<Vec<u32>>,
    /// Indices into `delta_facets` giving the shelling order.
    pub shelling: Vec<usize>,
    /// Facets of the ridge-count boundary of Δ_i.
    pub boundary: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    /// Atom elements in ◁-increasing order.
    pub order: Vec<Elem>,
    pub ears: Vec<Ear>,
}

/// Check that a graded lattice is geometric: atomistic plus rank
/// semimodularity.
pub fn check_geometric(l: &Lattice) -> Result<(), CedError> {
    let rk = l.rank_function().map_err(|_| CedError::NotGraded)?;
    let atoms = l.atoms();
    for x in 0..l.len() {
        let join = l.join_set(atoms.iter().copied().filter(|&a| l.leq(a, x)));
        if join != x {
            return Err(CedError::NotGeometric(format!(
                "element {} is not a join of atoms",
                l.label(x)
            )));
        }
    }
    for x in 0..l.len() {
        for y in 0..l.len() {
            if rk.rank(x) + rk.rank(y) < rk.rank(l.join(x, y)) + rk.rank(l.meet(x, y)) {
                return Err(CedError::NotGeometric(format!(
                    "rank submodularity fails at ({}, {})",
                    l.label(x),
                    l.label(y)
                )));
            }
        }
    }
    Ok(())
}

/// Atom subsets of a geometric lattice behave as a simple matroid with
/// rank(S) = rank(⋁S). Circuits are the minimal dependent subsets.
fn atom_circuits(l: &Lattice, atoms: &[Elem]) -> Vec<Vec<usize>> {
    let rk = l.rank_function().expect("graded");
    let n = atoms.len();
    let mut circuits: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if members.len() > rk.top_rank() + 1 {
            continue;
        }
        if circuits
            .iter()
            .any(|c| c.iter().all(|x| members.contains(x)))
        {
            continue; // contains a smaller circuit
        }
        let join = l.join_set(members.iter().map(|&i| atoms[i]));
        if rk.rank(join) < members.len() {
            circuits.push(members);
        }
    }
    circuits
}

/// nbc-bases of the atom matroid in lexicographic order with respect to the
/// given atom order.
pub fn lattice_nbc_bases(l: &Lattice, order: &[Elem]) -> Vec<Vec<Elem>> {
    let rk = l.rank_function().expect("graded");
    let n = order.len();
    let circuits = atom_circuits(l, order);
    let broken: Vec<Vec<usize>> = circuits
        .iter()
        .map(|c| c[1..].to_vec()) // positions are ◁-sorted; drop the minimum
        .collect();
    let mut bases: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn extend(
        l: &Lattice,
        order: &[Elem],
        rank_needed: usize,
        start: usize,
        current: &mut Vec<usize>,
        join: Elem,
        rk: &crate::poset::RankFunction,
        bases: &mut Vec<Vec<usize>>,
        n: usize,
    ) {
        if current.len() == rank_needed {
            bases.push(current.clone());
            return;
        }
        for i in start..n {
            let next = l.join(join, order[i]);
            if rk.rank(next) == current.len() + 1 {
                current.push(i);
                extend(l, order, rank_needed, i + 1, current, next, rk, bases, n);
                current.pop();
            }
        }
    }
    extend(
        l,
        order,
        rk.top_rank(),
        0,
        &mut current,
        l.bottom(),
        &rk,
        &mut bases,
        n,
    );
    bases.retain(|b| !broken.iter().any(|bc| bc.iter().all(|x| b.contains(x))));
    bases.sort();
    bases
        .into_iter()
        .map(|b| b.into_iter().map(|i| order[i]).collect())
        .collect()
}

/// Atom-valued labels of a maximal nested set: tree nodes are the members
/// plus the maximal elements of G; each node G gets the ◁-least atom a with
/// `⋁S_{<G} ∨ a = G`.
struct AtomLabeledTree {
    nodes: Vec<Elem>,
    labels: Vec<usize>, // ◁ positions
}

fn atom_labeled_tree(
    bl: &BuiltLattice,
    pos_of_atom: &HashMap<Elem, usize>,
    order: &[Elem],
    facet: &[Elem],
) -> Result<AtomLabeledTree, CedError> {
    let l = bl.lattice();
    let heights = lattice_heights(l);
    let mut nodes: Vec<Elem> = facet.to_vec();
    nodes.extend(bl.max_g().iter().copied());
    nodes.sort_by_key(|&g| (heights[g], g));
    nodes.dedup();
    let _ = pos_of_atom;
    let mut labels = Vec::with_capacity(nodes.len());
    for &g in &nodes {
        let j = l.join_set(facet.iter().copied().filter(|&x| x != g && l.lt(x, g)));
        // `order` is ◁-increasing, so the first generator is the ◁-least
        match order.iter().position(|&a| l.join(j, a) == g) {
            Some(p) => labels.push(p),
            None => return Err(CedError::BadLabelSet(facet.to_vec())),
        }
    }
    Ok(AtomLabeledTree { nodes, labels })
}

/// The atom set `λ(S) = {λ(G) : G ∈ S ∪ max G}` of a maximal nested set,
/// sorted. For facets of the nested set complex this is an nbc-basis.
pub fn facet_label_set(
    bl: &BuiltLattice,
    order: &[Elem],
    facet: &[Elem],
) -> Result<Vec<Elem>, CedError> {
    let pos_of_atom: HashMap<Elem, usize> =
        order.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let tree = atom_labeled_tree(bl, &pos_of_atom, order, facet)?;
    let mut set: Vec<Elem> = tree.labels.iter().map(|&p| order[p]).collect();
    set.sort_unstable();
    set.dedup();
    if set.len() != tree.nodes.len() {
        return Err(CedError::BadLabelSet(facet.to_vec()));
    }
    Ok(set)
}

/// The word w(S): repeatedly emit the ◁-largest label among the minimal
/// remaining nodes.
pub fn nested_word(
    bl: &BuiltLattice,
    order: &[Elem],
    facet: &[Elem],
) -> Result<Vec<Elem>, CedError> {
    let pos_of_atom: HashMap<Elem, usize> =
        order.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let tree = atom_labeled_tree(bl, &pos_of_atom, order, facet)?;
    let l = bl.lattice();
    let mut remaining: Vec<usize> = (0..tree.nodes.len()).collect();
    let mut word = Vec::with_capacity(tree.nodes.len());
    while !remaining.is_empty() {
        let leaves: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| {
                remaining
                    .iter()
                    .all(|&j| j == i || !l.lt(tree.nodes[j], tree.nodes[i]))
            })
            .collect();
        let &best = leaves
            .iter()
            .max_by_key(|&&i| tree.labels[i])
            .expect("nonempty");
        word.push(order[tree.labels[best]]);
        remaining.retain(|&i| i != best);
    }
    Ok(word)
}

/// Construct the convex ear decomposition of `N(L, G)` for a geometric
/// built lattice and a total atom order.
pub fn convex_ear_decomposition(
    bl: &BuiltLattice,
    order: &[Elem],
) -> Result<EarDecomposition, CedError> {
    let l = bl.lattice();
    check_geometric(l)?;
    let mut atoms = l.atoms();
    atoms.sort_unstable();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != atoms {
        return Err(CedError::BadAtomOrder);
    }
    let pos_of_atom: HashMap<Elem, usize> =
        order.iter().enumerate().map(|(i, &a)| (a, i)).collect();

    let ambient = nested_facets(bl);
    let pool = bl.nested_vertices();
    let vid: HashMap<Elem, u32> = pool
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    let to_ids = |facet: &[Elem]| -> Vec<u32> {
        let mut v: Vec<u32> = facet.iter().map(|e| vid[e]).collect();
        v.sort_unstable();
        v
    };

    // λ(S) for every ambient facet, to assign each facet to its unique ear
    let mut facet_label_set: HashMap<Vec<u32>, Vec<Elem>> = HashMap::new();
    for facet in &ambient {
        let tree = atom_labeled_tree(bl, &pos_of_atom, order, facet)?;
        let mut set: Vec<Elem> = tree.labels.iter().map(|&p| order[p]).collect();
        set.sort_unstable();
        set.dedup();
        if set.len() != tree.nodes.len() {
            return Err(CedError::BadLabelSet(facet.clone()));
        }
        facet_label_set.insert(to_ids(facet), set);
    }
    let label_set_of = |f: &Vec<Elem>| -> Result<Vec<Elem>, CedError> {
        facet_label_set
            .get(&to_ids(f))
            .cloned()
            .ok_or_else(|| CedError::BadLabelSet(f.clone()))
    };

    let bases = lattice_nbc_bases(l, order);
    let mut ears = Vec::with_capacity(bases.len());
    for basis in &bases {
        // Σ_i: nested complex of the sub-join-lattice generated by the basis
        let members = sub_join_lattice(l, basis);
        let sub = l.sublattice(members.clone()).expect("join-closed subset");
        let gset: Vec<Elem> = (0..sub.lattice.len())
            .filter(|&x| bl.contains(sub.embed[x]))
            .collect();
        let sub_bl = BuiltLattice::trusted(sub.lattice.clone(), gset);
        let sigma_facets_elems: Vec<Vec<Elem>> = nested_facets(&sub_bl)
            .into_iter()
            .map(|f| {
                let mut v: Vec<Elem> = f.iter().map(|&x| sub.embed[x]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut sigma_facets: Vec<Vec<u32>> =
            sigma_facets_elems.iter().map(|f| to_ids(f)).collect();
        sigma_facets.sort();

        let mut basis_sorted = basis.clone();
        basis_sorted.sort_unstable();
        let mut delta_elems: Vec<Vec<Elem>> = Vec::new();
        for f in sigma_facets_elems {
            if label_set_of(&f)? == basis_sorted {
                delta_elems.push(f);
            }
        }
        // Shelling order: reverse-lexicographic on the words w(S). Words are
        // compared position by position from the left using ◁ and the order
        // is then reversed, so the strictly decreasing word comes first.
        // Within one ear all words share the letter set B_i, which makes the
        // comparison total.
        let mut keyed: Vec<(Vec<usize>, Vec<Elem>)> = delta_elems
            .drain(..)
            .map(|f| {
                let w = nested_word(bl, order, &f).expect("facet words are defined");
                (w.into_iter().map(|a| pos_of_atom[&a]).collect(), f)
            })
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0));
        let shelled: Vec<Vec<u32>> = keyed.iter().map(|(_, f)| to_ids(f)).collect();
        let mut delta_facets = shelled.clone();
        delta_facets.sort();
        let shelling: Vec<usize> = shelled
            .iter()
            .map(|f| delta_facets.iter().position(|g| g == f).unwrap())
            .collect();
        let boundary = boundary_facets(&delta_facets);
        ears.push(Ear {
            basis: basis.clone(),
            sigma_facets,
            delta_facets,
            shelling,
            boundary,
        });
    }
    Ok(EarDecomposition {
        order: order.to_vec(),
        ears,
    })
}

/// Facets of the ridge-count boundary: ridges contained in exactly one facet.
fn boundary_facets(facets: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
    for f in facets {
        if f.is_empty() {
            continue;
        }
        for i in 0..f.len() {
            let mut r = f.clone();
            r.remove(i);
            *counts.entry(r).or_insert(0) += 1;
        }
    }
    let mut out: Vec<Vec<u32>> = counts
        .into_iter()
        .filter(|(_, c)| *c == 1)
        .map(|(r, _)| r)
        .collect();
    out.sort();
    out
}

/// Shelling check: after the first facet, each `⟨F_1..F_{k−1}⟩ ∩ ⟨F_k⟩` must
/// be pure of codimension one in `F_k`. Returns the first failing index.
pub fn shelling_check(facets_in_order: &[Vec<u32>]) -> Result<(), usize> {
    for k in 1..facets_in_order.len() {
        let fk = &facets_in_order[k];
        let inters: Vec<Vec<u32>> = facets_in_order[..k]
            .iter()
            .map(|fj| fj.iter().copied().filter(|x| fk.contains(x)).collect())
            .collect();
        let ok = inters.iter().all(|i| {
            inters
                .iter()
                .any(|j| j.len() + 1 == fk.len() && is_subset(i, j))
        });
        if !ok {
            return Err(k);
        }
    }
    Ok(())
}

/// h-vector of a pure shellable complex from the restriction sets of a
/// shelling order: `h_i` counts the steps whose restriction has size `i`.
/// The restriction of `F_k` holds the vertices `v` with `F_k ∖ v` already
/// covered by earlier facets.
pub fn shelling_restriction_h(facets_in_order: &[Vec<u32>]) -> Vec<i64> {
    let d = facets_in_order.first().map_or(0, |f| f.len());
    let mut h = vec![0i64; d + 1];
    for (k, fk) in facets_in_order.iter().enumerate() {
        let restriction = fk
            .iter()
            .filter(|&&v| {
                let ridge: Vec<u32> = fk.iter().copied().filter(|&x| x != v).collect();
                facets_in_order[..k].iter().any(|fj| is_subset(&ridge, fj))
            })
            .count();
        h[restriction] += 1;
    }
    h
}

fn all_faces_of(facets: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let mut out = HashSet::new();
    for f in facets {
        for mask in 0u64..1 << f.len() {
            let sub: Vec<u32> = f
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.insert(sub);
        }
    }
    out
}

/// Verify a convex ear decomposition clause by clause:
/// (a) the ears partition the facets of the complex;
/// (b) Δ_1 = Σ_1 and Δ_1 passes the sphere proxy;
/// (c) each later ear is a proper shellable subcomplex of its Σ_i gluing
///     along its whole ridge-count boundary, with the Euler characteristic
///     of a ball;
/// (d) the two boundary characterizations agree.
pub fn verify_ced(complex: &SimplicialComplex, dec: &EarDecomposition) -> Result<(), CedFailure> {
    let fail = |clause: &str, ear: usize, detail: String| {
        Err(CedFailure {
            clause: clause.to_string(),
            ear,
            detail,
        })
    };
    if dec.ears.is_empty() {
        return fail("a", 0, "no ears".to_string());
    }
    let dim = complex.dim();
    // (a) partition of facets
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    for (i, ear) in dec.ears.iter().enumerate() {
        for f in &ear.delta_facets {
            if !complex.facets().contains(f) {
                return fail("a", i, format!("{f:?} is not a facet of the complex"));
            }
            if let Some(j) = seen.insert(f.clone(), i) {
                return fail("a", i, format!("facet {f:?} already used by ear {j}"));
            }
        }
    }
    if seen.len() != complex.facets().len() {
        return fail(
            "a",
            0,
            format!(
                "ears cover {} of {} facets",
                seen.len(),
                complex.facets().len()
            ),
        );
    }
    // (b) first ear: equality with Σ_1 and the sphere proxy
    let first = &dec.ears[0];
    let mut sig = first.sigma_facets.clone();
    sig.sort();
    if sig != first.delta_facets {
        return fail("b", 0, "Δ_1 ≠ Σ_1".to_string());
    }
    if let Some(detail) = sphere_proxy_failure(&first.delta_facets, dim) {
        return fail("b", 0, detail);
    }
    // (c) later ears
    let mut union_faces = all_faces_of(&first.delta_facets);
    for (i, ear) in dec.ears.iter().enumerate().skip(1) {
        for f in &ear.delta_facets {
            if !ear.sigma_facets.contains(f) {
                return fail("c", i, format!("{f:?} not a facet of Σ"));
            }
        }
        if ear.delta_facets.len() >= ear.sigma_facets.len() {
            return fail("c", i, "Δ is not a proper subcomplex of Σ".to_string());
        }
        if ear.delta_facets.iter().any(|f| f.len() as i64 - 1 != dim) {
            return fail(
                "c",
                i,
                "ear is not pure of the ambient dimension".to_string(),
            );
        }
        if ear.shelling.len() != ear.delta_facets.len() {
            return fail("c", i, "shelling order has wrong length".to_string());
        }
        let ordered: Vec<Vec<u32>> = ear
            .shelling
            .iter()
            .map(|&k| ear.delta_facets[k].clone())
            .collect();
        if let Err(k) = shelling_check(&ordered) {
            return fail("c", i, format!("shelling fails at step {k}"));
        }
        // pseudomanifold: ridges in at most two facets
        let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
        for f in &ear.delta_facets {
            for j in 0..f.len() {
                let mut r = f.clone();
                r.remove(j);
                *counts.entry(r).or_insert(0) += 1;
            }
        }
        if let Some((r, c)) = counts.iter().find(|(_, &c)| c > 2) {
            return fail("c", i, format!("ridge {r:?} lies in {c} facets"));
        }
        // Euler characteristic of a ball
        let faces = all_faces_of(&ear.delta_facets);
        let chi: i64 = faces
            .iter()
            .map(|f| if f.len() % 2 == 0 { -1i64 } else { 1 })
            .sum();
        if chi != 0 {
            return fail("c", i, format!("reduced Euler characteristic {chi} ≠ 0"));
        }
        // boundary = intersection with the earlier ears
        let boundary = boundary_facets(&ear.delta_facets);
        let boundary_faces = all_faces_of(&boundary);
        let intersection: HashSet<Vec<u32>> = faces.intersection(&union_faces).cloned().collect();
        if boundary_faces != intersection {
            return fail(
                "c",
                i,
                format!(
                    "∂Δ has {} faces but Δ ∩ ⋃_{{j<i}} Δ_j has {}",
                    boundary_faces.len(),
                    intersection.len()
                ),
            );
        }
        // (d) second boundary characterization: faces of Δ_i lying in a facet
        // of Σ_i outside Δ_i
        let outside: Vec<&Vec<u32>> = ear
            .sigma_facets
            .iter()
            .filter(|f| !ear.delta_facets.contains(*f))
            .collect();
        let alt: HashSet<Vec<u32>> = faces
            .iter()
            .filter(|face| outside.iter().any(|f| is_subset(face, f)))
            .cloned()
            .collect();
        if alt != boundary_faces {
            return fail("d", i, "boundary characterizations disagree".to_string());
        }
        union_faces.extend(faces);
    }
    Ok(())
}

/// Sphere proxy: pure, every ridge in exactly two facets, ridge-connected,
/// and reduced Euler characteristic `(-1)^dim`.
fn sphere_proxy_failure(facets: &[Vec<u32>], dim: i64) -> Option<String> {
    if facets.iter().any(|f| f.len() as i64 - 1 != dim) {
        return Some("not pure of the ambient dimension".to_string());
    }
    let mut by_ridge: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        if f.is_empty() {
            continue;
        }
        for j in 0..f.len() {
            let mut r = f.clone();
            r.remove(j);
            by_ridge.entry(r).or_default().push(i);
        }
    }
    if dim >= 0 {
        for (r, fs) in &by_ridge {
            if fs.len() != 2 {
                return Some(format!("ridge {r:?} lies in {} facets", fs.len()));
            }
        }
    }
    // connectivity through shared ridges (S^0 is the two-facet dim-0 case)
    if dim == 0 && facets.len() != 2 {
        return Some(format!("a 0-sphere has 2 facets, found {}", facets.len()));
    }
    if dim > 0 {
        let mut reach = vec![false; facets.len()];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(i) = stack.pop() {
            for fs in by_ridge.values() {
                if fs.contains(&i) {
                    for &j in fs {
                        if !reach[j] {
                            reach[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
        }
        if !reach.iter().all(|&b| b) {
            return Some("facet-ridge graph is disconnected".to_string());
        }
    }
    let chi: i64 = all_faces_of(facets)
        .iter()
        .map(|f| if f.len() % 2 == 0 { -1i64 } else { 1 })
        .sum();
    let want = if dim % 2 == 0 { 1 } else { -1 };
    if chi != want {
        return Some(format!("reduced Euler characteristic {chi} ≠ {want}"));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{maximal_building_set, minimal_building_set};
    use crate::matroid::{GeometricLattice, Matroid};
    use crate::nested::nested_complex;
    use crate::partition::PartitionLattice;

    fn flats_built_max(m: &Matroid) -> (BuiltLattice, Vec<Elem>) {
        let gl = GeometricLattice::lattice_of_flats(m);
        let bl = maximal_building_set(&gl.lattice);
        let atoms = gl.lattice.atoms();
        (bl, atoms)
    }

    #[test]
    fn u34_has_three_ears() {
        let (bl, atoms) = flats_built_max(&Matroid::uniform(3, 4));
        let dec = convex_ear_decomposition(&bl, &atoms).unwrap();
        assert_eq!(dec.ears.len(), 3);
        // a hexagon, then ears of four and two edges
        let sizes: Vec<usize> = dec.ears.iter().map(|e| e.delta_facets.len()).collect();
        assert_eq!(sizes, vec![6, 4, 2]);
        let n = nested_complex(&bl);
        assert!(verify_ced(&n, &dec).is_ok());
    }

    #[test]
    fn u23_two_ears_zero_dimensional() {
        let (bl, atoms) = flats_built_max(&Matroid::uniform(2, 3));
        let dec = convex_ear_decomposition(&bl, &atoms).unwrap();
        assert_eq!(dec.ears.len(), 2);
        assert_eq!(dec.ears[0].delta_facets.len(), 2);
        assert_eq!(dec.ears[1].delta_facets.len(), 1);
        let n = nested_complex(&bl);
        assert!(verify_ced(&n, &dec).is_ok());
    }

    #[test]
    fn boolean_single_ear() {
        let (bl, atoms) = flats_built_max(&Matroid::boolean(3));
        let dec = convex_ear_decomposition(&bl, &atoms).unwrap();
        assert_eq!(dec.ears.len(), 1);
        let n = nested_complex(&bl);
        assert!(verify_ced(&n, &dec).is_ok());
    }

    #[test]
    fn petersen_ced() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        let atoms = pi4.lattice.atoms();
        let dec = convex_ear_decomposition(&bl, &atoms).unwrap();
        // nbc-bases of Π_4 number |μ| = (4-1)! = 6
        assert_eq!(dec.ears.len(), 6);
        let n = nested_complex(&bl);
        assert!(verify_ced(&n, &dec).is_ok());
        // union of the ears is the Petersen complex
        let total: usize = dec.ears.iter().map(|e| e.delta_facets.len()).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn corrupted_ear_fails() {
        let (bl, atoms) = flats_built_max(&Matroid::uniform(3, 4));
        let mut dec = convex_ear_decomposition(&bl, &atoms).unwrap();
        let n = nested_complex(&bl);
        // drop one facet from the last ear
        let last = dec.ears.len() - 1;
        dec.ears[last].delta_facets.pop();
        dec.ears[last].shelling.pop();
        let err = verify_ced(&n, &dec).unwrap_err();
        assert!(!err.clause.is_empty());
    }

    #[test]
    fn shelling_check_examples() {
        // boundary of a triangle: any order works
        let tri = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert!(shelling_check(&tri).is_ok());
        // two triangles sharing one vertex never shell
        let pinched = vec![vec![0, 1, 2], vec![2, 3, 4]];
        assert_eq!(shelling_check(&pinched), Err(1));
    }

    #[test]
    fn word_of_a_chain_reads_bottom_up() {
        let (bl, atoms) = flats_built_max(&Matroid::uniform(3, 4));
        for facet in nested_facets(&bl) {
            let w = nested_word(&bl, &atoms, &facet).unwrap();
            assert_eq!(w.len(), 3);
        }
        // the composition {b_3} ∘ {b_3 ∨ b_2} over the first basis has word
        // b_3 b_2 b_1
        let l = bl.lattice();
        let (b1, b2, b3) = (atoms[0], atoms[1], atoms[2]);
        let facet = vec![b3, l.join(b3, b2)];
        assert_eq!(nested_word(&bl, &atoms, &facet).unwrap(), vec![b3, b2, b1]);
    }

    #[test]
    fn geometric_check_rejects_non_atomistic() {
        let c = crate::poset::chain_lattice(2);
        assert!(matches!(
            check_geometric(&c),
            Err(CedError::NotGeometric(_))
        ));
    }
}
