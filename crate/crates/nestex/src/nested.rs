//! Nested sets and nested set complexes: enumeration, purity, local
//! intervals, the quotient of factors, and the composition bijection that
//! realizes links as joins of smaller nested set complexes.

use crate::building::{lattice_heights, BuiltLattice};
use crate::complex::SimplicialComplex;
use crate::poset::Elem;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NestedError {
    #[error("element {0} is not in the building set")]
    NotInBuildingSet(Elem),
    #[error("element {0} is not in the contraction building set at {1}")]
    NotInContraction(Elem, Elem),
    #[error("element {0} has {1} new factors over the base; expected exactly one")]
    AmbiguousQuotient(Elem, usize),
    #[error("the given set is not nested")]
    NotNested,
}

/// `true` iff every antichain of size ≥ 2 inside `s` joins to an element
/// outside the building set.
pub fn is_nested(bl: &BuiltLattice, s: &[Elem]) -> bool {
    let l = bl.lattice();
    let s: Vec<Elem> = {
        let mut v = s.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    if s.iter().any(|&x| !bl.contains(x)) {
        return false;
    }
    // DFS over antichains of s
    fn antichains_ok(
        bl: &BuiltLattice,
        s: &[Elem],
        chosen: &mut Vec<Elem>,
        start: usize,
        acc: Elem,
    ) -> bool {
        let l = bl.lattice();
        if chosen.len() >= 2 && bl.contains(acc) {
            return false;
        }
        for i in start..s.len() {
            let x = s[i];
            if chosen.iter().all(|&y| !l.leq(x, y) && !l.leq(y, x)) {
                chosen.push(x);
                let ok = antichains_ok(bl, s, chosen, i + 1, l.join(acc, x));
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    antichains_ok(bl, &s, &mut Vec::new(), 0, l.bottom())
}

/// Can `v` be added to the nested set `s` (assumed nested) keeping it nested?
fn extension_ok(bl: &BuiltLattice, s: &[Elem], v: Elem) -> bool {
    let l = bl.lattice();
    let incomparable: Vec<Elem> = s
        .iter()
        .copied()
        .filter(|&x| x != v && !l.leq(x, v) && !l.leq(v, x))
        .collect();
    if s.contains(&v) {
        return false;
    }
    // every antichain {v} ∪ A' with A' a nonempty antichain of incomparables
    fn rec(
        bl: &BuiltLattice,
        pool: &[Elem],
        chosen: &mut Vec<Elem>,
        start: usize,
        acc: Elem,
    ) -> bool {
        let l = bl.lattice();
        if !chosen.is_empty() && bl.contains(acc) {
            return false;
        }
        for i in start..pool.len() {
            let x = pool[i];
            if chosen.iter().all(|&y| !l.leq(x, y) && !l.leq(y, x)) {
                chosen.push(x);
                let ok = rec(bl, pool, chosen, i + 1, l.join(acc, x));
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    rec(bl, &incomparable, &mut Vec::new(), 0, v)
}

/// All nested subsets of the given vertex pool, in lexicographic order of
/// vertex indices. Each entry is sorted by the pool order.
fn enumerate_nested(bl: &BuiltLattice, pool: &[Elem]) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::new()];
    let mut current: Vec<Elem> = Vec::new();
    fn extend(
        bl: &BuiltLattice,
        pool: &[Elem],
        start: usize,
        current: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        for i in start..pool.len() {
            if extension_ok(bl, current, pool[i]) {
                current.push(pool[i]);
                out.push(current.clone());
                extend(bl, pool, i + 1, current, out);
                current.pop();
            }
        }
    }
    extend(bl, pool, 0, &mut current, &mut out);
    out
}

fn complex_from_nested(bl: &BuiltLattice, pool: Vec<Elem>) -> SimplicialComplex {
    let labels: Vec<String> = pool
        .iter()
        .map(|&g| bl.lattice().label(g).to_string())
        .collect();
    let index_of = |e: Elem| pool.iter().position(|&x| x == e).unwrap() as u32;
    let faces: Vec<Vec<u32>> = enumerate_nested(bl, &pool)
        .into_iter()
        .map(|ns| ns.iter().map(|&e| index_of(e)).collect())
        .collect();
    SimplicialComplex::of_faces(labels, faces)
}

/// The nested set complex `N(L, G)` on the non-maximal elements of G.
pub fn nested_complex(bl: &BuiltLattice) -> SimplicialComplex {
    complex_from_nested(bl, bl.nested_vertices())
}

/// `N(L, G)` together with the ambient element of each vertex id.
pub fn nested_complex_with_pool(bl: &BuiltLattice) -> (SimplicialComplex, Vec<Elem>) {
    let pool = bl.nested_vertices();
    (complex_from_nested(bl, pool.clone()), pool)
}

/// The cone version `cN(L, G)` on all of G.
pub fn cone_nested_complex(bl: &BuiltLattice) -> SimplicialComplex {
    complex_from_nested(bl, bl.cone_vertices())
}

/// Facets of `N(L, G)` as sorted ambient element sets.
pub fn nested_facets(bl: &BuiltLattice) -> Vec<Vec<Elem>> {
    let pool = bl.nested_vertices();
    let complex = complex_from_nested(bl, pool.clone());
    complex
        .facets()
        .iter()
        .map(|f| {
            let mut v: Vec<Elem> = f.iter().map(|&i| pool[i as usize]).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// Purity of `N(L, G)` together with its dimension.
pub fn purity_check(bl: &BuiltLattice) -> (bool, i64) {
    let c = nested_complex(bl);
    (c.is_pure(), c.dim())
}

/// The local interval of a nested set at one of its nodes (or at the top):
/// the built lattice `([⋁S_{<G}, G], (G_J)^G)` with its ambient embedding.
#[derive(Debug, Clone)]
pub struct LocalInterval {
    /// The node, or `None` for the virtual node at the top element.
    pub node: Option<Elem>,
    /// Ambient element the interval ends at (the node or the top).
    pub upper: Elem,
    /// Ambient join of the strictly smaller members, `J^G`.
    pub lower: Elem,
    pub built: BuiltLattice,
    /// Fresh identifier → ambient identifier.
    pub embed: Vec<Elem>,
}

/// One local interval for every `G ∈ S ∪ {1̂}`, ordered with the top last.
pub fn local_intervals(bl: &BuiltLattice, s: &[Elem]) -> Vec<LocalInterval> {
    let l = bl.lattice();
    let heights = lattice_heights(l);
    let mut nodes: Vec<Elem> = s.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    nodes.sort_by_key(|&g| (heights[g], g));
    let mut uppers: Vec<(Option<Elem>, Elem)> = nodes.iter().map(|&g| (Some(g), g)).collect();
    if !nodes.contains(&l.top()) {
        uppers.push((None, l.top()));
    }
    uppers
        .into_iter()
        .map(|(node, upper)| {
            let lower = l.join_set(
                nodes
                    .iter()
                    .copied()
                    .filter(|&x| x != upper && l.lt(x, upper)),
            );
            let sub = l.interval(lower, upper).expect("lower ≤ upper");
            let mut gset = Vec::new();
            for x in 0..sub.lattice.len() {
                let amb = sub.embed[x];
                if amb != lower && bl.gset().iter().any(|&g| l.join(lower, g) == amb) {
                    gset.push(x);
                }
            }
            let embed = sub.embed.clone();
            LocalInterval {
                node,
                upper,
                lower,
                built: BuiltLattice::trusted(sub.lattice, gset),
                embed,
            }
        })
        .collect()
}

/// The unique G-factor of `g` that is not a G-factor of `f` (for `g` in the
/// contraction building set at `f`).
pub fn quotient(bl: &BuiltLattice, f: Elem, g: Elem) -> Result<Elem, NestedError> {
    let l = bl.lattice();
    if g == f || !bl.gset().iter().any(|&h| l.join(f, h) == g) {
        return Err(NestedError::NotInContraction(g, f));
    }
    let base = bl.factors(f);
    let fresh: Vec<Elem> = bl
        .factors(g)
        .iter()
        .copied()
        .filter(|x| !base.contains(x))
        .collect();
    if fresh.len() != 1 {
        return Err(NestedError::AmbiguousQuotient(g, fresh.len()));
    }
    Ok(fresh[0])
}

/// Composition `S ∘ (S_G)`: add the quotient `G'/J^G` of every member of
/// every local nested set. Assignments are (index into `local_intervals`,
/// members given as ambient elements of that interval).
pub fn compose(
    bl: &BuiltLattice,
    s: &[Elem],
    locals: &[LocalInterval],
    assignments: &[(usize, Vec<Elem>)],
) -> Result<Vec<Elem>, NestedError> {
    let mut out: Vec<Elem> = s.to_vec();
    for &(idx, ref members) in assignments {
        let li = &locals[idx];
        for &m in members {
            out.push(quotient(bl, li.lower, m)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    if !is_nested(bl, &out) {
        return Err(NestedError::NotNested);
    }
    Ok(out)
}

/// Inverse of `compose`: split `t ⊇ s` into local nested sets, one per local
/// interval of `s`. Members are returned as ambient elements `J^G ∨ x`.
pub fn decompose(
    bl: &BuiltLattice,
    s: &[Elem],
    locals: &[LocalInterval],
    t: &[Elem],
) -> Result<Vec<(usize, Vec<Elem>)>, NestedError> {
    let l = bl.lattice();
    let mut out: Vec<(usize, Vec<Elem>)> = (0..locals.len()).map(|i| (i, Vec::new())).collect();
    for &x in t {
        if s.contains(&x) {
            continue;
        }
        // the parent of x among s ∪ {1̂} names the local interval
        let mut above: Vec<Elem> = s.iter().copied().filter(|&g| l.lt(x, g)).collect();
        above.sort_by_key(|&g| lattice_heights(l)[g]);
        let parent: Option<Elem> = above.first().copied();
        let idx = locals
            .iter()
            .position(|li| li.node == parent)
            .ok_or(NestedError::NotNested)?;
        out[idx].1.push(l.join(locals[idx].lower, x));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{maximal_building_set, minimal_building_set, validate_building_set};
    use crate::partition::PartitionLattice;
    use crate::poset::boolean_lattice;
    use crate::vectors::h_from_f;

    fn b3_with_g() -> BuiltLattice {
        let b3 = boolean_lattice(3);
        validate_building_set(&b3, &[0b001, 0b010, 0b100, 0b011, 0b110, 0b111]).unwrap()
    }

    #[test]
    fn nestedness_examples() {
        let bl = b3_with_g();
        assert!(is_nested(&bl, &[0b001, 0b011])); // {1, 12}
        assert!(!is_nested(&bl, &[0b001, 0b010])); // 1 ∨ 2 = 12 ∈ G
        assert!(is_nested(&bl, &[0b001, 0b100])); // 1 ∨ 3 = 13 ∉ G
    }

    #[test]
    fn maximal_building_set_nested_means_chain() {
        let b3 = boolean_lattice(3);
        let bl = maximal_building_set(&b3);
        assert!(is_nested(&bl, &[0b001, 0b011]));
        assert!(!is_nested(&bl, &[0b001, 0b010]));
        // order complex of B_3 minus bounds: 6 vertices, 6 facets (max chains)
        let n = nested_complex(&bl);
        assert_eq!(n.vertices().len(), 6);
        assert_eq!(n.facets().len(), 6);
        assert!(n.is_pure());
        assert_eq!(n.dim(), 1);
    }

    #[test]
    fn maximal_building_set_gives_the_order_complex() {
        // N(L, G_max) is the order complex of L ∖ {0̂, 1̂}; cN adds 1̂.
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let l = &pi4.lattice;
        let bl = maximal_building_set(l);
        let n = nested_complex(&bl);
        // independent route: enumerate chains directly
        let mids: Vec<usize> = (0..l.len())
            .filter(|&x| x != l.bottom() && x != l.top())
            .collect();
        let mut chains: Vec<Vec<u32>> = vec![vec![]];
        fn grow(
            l: &crate::poset::Lattice,
            mids: &[usize],
            chain: &mut Vec<usize>,
            start: usize,
            out: &mut Vec<Vec<u32>>,
        ) {
            for i in start..mids.len() {
                if chain.iter().all(|&j| l.lt(mids[j], mids[i])) {
                    chain.push(i);
                    out.push(chain.iter().map(|&j| j as u32).collect());
                    grow(l, mids, chain, i + 1, out);
                    chain.pop();
                }
            }
        }
        // chains must be grown in a linear extension so comparability is
        // monotone along the recursion
        let mut order: Vec<usize> = (0..mids.len()).collect();
        order.sort_by_key(|&i| l.poset().down_set(mids[i]).count_ones(..));
        let sorted_mids: Vec<usize> = order.iter().map(|&i| mids[i]).collect();
        let sorted_labels: Vec<String> = sorted_mids
            .iter()
            .map(|&x| l.label(x).to_string())
            .collect();
        grow(l, &sorted_mids, &mut Vec::new(), 0, &mut chains);
        let order_complex = SimplicialComplex::of_faces(sorted_labels, chains);
        assert!(n.same_complex(&order_complex));
    }

    #[test]
    fn petersen_graph() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        let n = nested_complex(&bl);
        assert_eq!(n.vertices().len(), 10);
        assert_eq!(n.facets().len(), 15);
        assert_eq!(n.dim(), 1);
        assert!(n.is_pure());
        assert_eq!(n.f_vector(), vec![1, 10, 15]);
        assert_eq!(h_from_f(&n.f_vector()), vec![1, 8, 6]);
        // every vertex has degree 3
        for v in n.vertices() {
            let deg = n.facets().iter().filter(|f| f.contains(&v)).count();
            assert_eq!(deg, 3);
        }
        let cone = cone_nested_complex(&bl);
        assert_eq!(cone.f_vector(), vec![1, 11, 25, 15]);
        assert_eq!(h_from_f(&cone.f_vector()), vec![1, 8, 6, 0]);
    }

    #[test]
    fn five_maximal_nested_sets_of_b3_example() {
        let bl = b3_with_g();
        let facets = nested_facets(&bl);
        let expected: Vec<Vec<Elem>> = vec![
            vec![0b001, 0b011], // {1, 12}
            vec![0b001, 0b100], // {1, 3}
            vec![0b010, 0b011], // {2, 12}
            vec![0b010, 0b110], // {2, 23}
            vec![0b100, 0b110], // {3, 23}
        ];
        let mut got = facets.clone();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn purity_matches_rank() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        assert_eq!(purity_check(&bl), (true, 1));
        let b4 = boolean_lattice(4);
        let bl = minimal_building_set(&b4);
        // all vertices maximal: the complex is {∅}
        assert_eq!(purity_check(&bl), (true, -1));
    }

    #[test]
    fn local_intervals_of_b3_example() {
        // (B_3, {1,2,3,123}), S = {1,2}: local intervals [0̂,1], [0̂,2], [12,1̂]
        let b3 = boolean_lattice(3);
        let bl = validate_building_set(&b3, &[0b001, 0b010, 0b100, 0b111]).unwrap();
        let lis = local_intervals(&bl, &[0b001, 0b010]);
        assert_eq!(lis.len(), 3);
        assert_eq!((lis[0].lower, lis[0].upper), (0, 0b001));
        assert_eq!((lis[1].lower, lis[1].upper), (0, 0b010));
        assert_eq!((lis[2].lower, lis[2].upper), (0b011, 0b111));
        assert_eq!(lis[2].built.lattice().len(), 2);
        // S = ∅: single interval, the whole lattice
        let all = local_intervals(&bl, &[]);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].built.lattice().len(), 8);
    }

    #[test]
    fn quotient_examples() {
        let b3 = boolean_lattice(3);
        let bl = validate_building_set(&b3, &[0b001, 0b010, 0b100, 0b111]).unwrap();
        // 12/1 = 2
        assert_eq!(quotient(&bl, 0b001, 0b011).unwrap(), 0b010);
        // g/0̂ = g
        assert_eq!(quotient(&bl, 0, 0b100).unwrap(), 0b100);
        assert!(quotient(&bl, 0b001, 0b001).is_err());
    }

    #[test]
    fn compose_b3_example() {
        // {1} ∘ {12} = {1, 2} in (B_3, {1,2,3,123})
        let b3 = boolean_lattice(3);
        let bl = validate_building_set(&b3, &[0b001, 0b010, 0b100, 0b111]).unwrap();
        let s = vec![0b001];
        let lis = local_intervals(&bl, &s);
        let top_idx = lis.iter().position(|li| li.node.is_none()).unwrap();
        let composed = compose(&bl, &s, &lis, &[(top_idx, vec![0b011])]).unwrap();
        assert_eq!(composed, vec![0b001, 0b010]);
        // compose with nothing returns S
        assert_eq!(compose(&bl, &s, &lis, &[]).unwrap(), s);
    }

    #[test]
    fn compose_decompose_roundtrip() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        let facets = nested_facets(&bl);
        for t in &facets {
            for &v in t {
                let s = vec![v];
                let lis = local_intervals(&bl, &s);
                let parts = decompose(&bl, &s, &lis, t).unwrap();
                let back = compose(&bl, &s, &lis, &parts).unwrap();
                assert_eq!(&back, t);
            }
        }
    }
}
