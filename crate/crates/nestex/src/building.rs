//! Building sets on lattices: validation against the structural isomorphism,
//! the minimal/maximal/augmented families, G-factors, restriction,
//! contraction, and deletion of building ideals.

use crate::matroid::{GeometricLattice, Matroid, MatroidError};
use crate::poset::{Elem, Lattice};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildingError {
    #[error("building set contains the bottom element")]
    ContainsBottom,
    #[error("building set is missing the join-irreducible element {label} (id {elem})")]
    MissingJoinIrreducible { elem: Elem, label: String },
    #[error("structural isomorphism fails at element {label} (id {elem})")]
    NotABuildingSet { elem: Elem, label: String },
    #[error("element {label} (id {elem}) is not join-irreducible")]
    NotJoinIrreducible { elem: Elem, label: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A lattice together with a building set and its cached G-factor tables.
#[derive(Debug, Clone)]
pub struct BuiltLattice {
    lattice: Lattice,
    gset: Vec<Elem>,
    in_g: Vec<bool>,
    factors: Vec<Vec<Elem>>,
    max_g: Vec<Elem>,
}

impl BuiltLattice {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn gset(&self) -> &[Elem] {
        &self.gset
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.in_g[e]
    }

    /// The G-factors of `f`: maximal elements of G below `f`.
    pub fn factors(&self, f: Elem) -> &[Elem] {
        &self.factors[f]
    }

    /// Maximal elements of the building set.
    pub fn max_g(&self) -> &[Elem] {
        &self.max_g
    }

    /// `true` when the top element belongs to the building set.
    pub fn is_irreducible(&self) -> bool {
        self.max_g == [self.lattice.top()]
    }

    /// Assemble factor tables without running the validation; reserved for
    /// results of restriction, contraction, and ideal deletion, whose
    /// building-set property holds by construction.
    pub(crate) fn trusted(lattice: Lattice, mut gset: Vec<Elem>) -> BuiltLattice {
        gset.sort_unstable();
        gset.dedup();
        let m = lattice.len();
        let mut in_g = vec![false; m];
        for &g in &gset {
            in_g[g] = true;
        }
        let mut factors = Vec::with_capacity(m);
        for f in 0..m {
            let below: Vec<Elem> = gset
                .iter()
                .copied()
                .filter(|&g| lattice.leq(g, f))
                .collect();
            let maximal: Vec<Elem> = below
                .iter()
                .copied()
                .filter(|&g| !below.iter().any(|&h| h != g && lattice.lt(g, h)))
                .collect();
            factors.push(maximal);
        }
        let max_g: Vec<Elem> = gset
            .iter()
            .copied()
            .filter(|&g| !gset.iter().any(|&h| h != g && lattice.lt(g, h)))
            .collect();
        BuiltLattice {
            lattice,
            gset,
            in_g,
            factors,
            max_g,
        }
    }

    /// Restriction `(L^F, G^F) = ([0̂, F], G ∩ [0̂, F])`; returns the built
    /// lattice and the embedding of fresh identifiers into `self`.
    pub fn restrict(&self, f: Elem) -> (BuiltLattice, Vec<Elem>) {
        let sub = self
            .lattice
            .interval(self.lattice.bottom(), f)
            .expect("bottom is below everything");
        let gset: Vec<Elem> = (0..sub.lattice.len())
            .filter(|&x| self.in_g[sub.embed[x]])
            .collect();
        let embed = sub.embed.clone();
        (BuiltLattice::trusted(sub.lattice, gset), embed)
    }

    /// Contraction `(L_F, G_F) = ([F, 1̂], {F ∨ G} ∖ {F})`.
    pub fn contract(&self, f: Elem) -> (BuiltLattice, Vec<Elem>) {
        let sub = self
            .lattice
            .interval(f, self.lattice.top())
            .expect("top is above everything");
        let mut gset = Vec::new();
        for x in 0..sub.lattice.len() {
            let amb = sub.embed[x];
            if amb != f && self.gset.iter().any(|&g| self.lattice.join(f, g) == amb) {
                gset.push(x);
            }
        }
        let embed = sub.embed.clone();
        (BuiltLattice::trusted(sub.lattice, gset), embed)
    }

    /// The building ideal `(g)`: all elements with `g` among their G-factors.
    pub fn building_ideal(&self, g: Elem) -> Result<Vec<Elem>, BuildingError> {
        if !self.lattice.is_join_irreducible(g) || !self.in_g[g] {
            return Err(BuildingError::NotJoinIrreducible {
                elem: g,
                label: self.lattice.label(g).to_string(),
            });
        }
        Ok((0..self.lattice.len())
            .filter(|&f| self.factors[f].contains(&g))
            .collect())
    }

    /// Delete the building ideal of a join-irreducible generator:
    /// `(L ∖ (g), G ∖ {g})`.
    pub fn delete_ideal(&self, g: Elem) -> Result<(BuiltLattice, Vec<Elem>), BuildingError> {
        let ideal = self.building_ideal(g)?;
        let keep: Vec<Elem> = (0..self.lattice.len())
            .filter(|e| !ideal.contains(e))
            .collect();
        let sub = self
            .lattice
            .sublattice(keep)
            .expect("deleting a building ideal leaves a lattice");
        let gset: Vec<Elem> = (0..sub.lattice.len())
            .filter(|&x| self.in_g[sub.embed[x]] && sub.embed[x] != g)
            .collect();
        let embed = sub.embed.clone();
        Ok((BuiltLattice::trusted(sub.lattice, gset), embed))
    }

    /// Vertices of the nested set complex: non-maximal elements of G,
    /// ordered by (height, identifier).
    pub fn nested_vertices(&self) -> Vec<Elem> {
        let heights = lattice_heights(&self.lattice);
        let mut vs: Vec<Elem> = self
            .gset
            .iter()
            .copied()
            .filter(|g| !self.max_g.contains(g))
            .collect();
        vs.sort_by_key(|&g| (heights[g], g));
        vs
    }

    /// All of G ordered by (height, identifier); vertex set of the cone complex.
    pub fn cone_vertices(&self) -> Vec<Elem> {
        let heights = lattice_heights(&self.lattice);
        let mut vs = self.gset.clone();
        vs.sort_by_key(|&g| (heights[g], g));
        vs
    }
}

/// Longest-chain heights from the bottom (equals rank on graded lattices).
pub fn lattice_heights(l: &Lattice) -> Vec<usize> {
    let mut h = vec![0usize; l.len()];
    for &x in l.poset().linear_extension() {
        for &y in l.covers_of(x) {
            h[y] = h[y].max(h[x] + 1);
        }
    }
    h
}

/// Check the building-set axioms: G avoids 0̂, contains every
/// join-irreducible, and the join map onto `[0̂, F]` is a poset isomorphism
/// for every F.
pub fn validate_building_set(
    lattice: &Lattice,
    gset: &[Elem],
) -> Result<BuiltLattice, BuildingError> {
    let mut gset = gset.to_vec();
    gset.sort_unstable();
    gset.dedup();
    if gset.contains(&lattice.bottom()) {
        return Err(BuildingError::ContainsBottom);
    }
    for irr in lattice.join_irreducibles() {
        if !gset.contains(&irr) {
            return Err(BuildingError::MissingJoinIrreducible {
                elem: irr,
                label: lattice.label(irr).to_string(),
            });
        }
    }
    let bl = BuiltLattice::trusted(lattice.clone(), gset);
    for f in 0..lattice.len() {
        if f == lattice.bottom() {
            continue;
        }
        let parts = &bl.factors[f];
        if lattice.join_set(parts.iter().copied()) != f
            || (parts.len() >= 2 && !join_map_is_iso(lattice, parts, f))
        {
            return Err(BuildingError::NotABuildingSet {
                elem: f,
                label: lattice.label(f).to_string(),
            });
        }
    }
    Ok(bl)
}

/// Whether the join map `∏ [0̂, parts_i] → [0̂, target]` is a poset isomorphism.
pub(crate) fn join_map_is_iso(l: &Lattice, parts: &[Elem], target: Elem) -> bool {
    let intervals: Vec<Vec<Elem>> = parts
        .iter()
        .map(|&p| l.poset().down_set(p).ones().collect())
        .collect();
    let target_size = l.poset().down_set(target).count_ones(..);
    let product_size: usize = intervals.iter().map(|iv| iv.len()).product();
    if product_size != target_size {
        return false;
    }
    // Enumerate tuples, recording the preimage of each join. A collision
    // kills injectivity; the size count then settles surjectivity.
    let mut tuple_of: Vec<Option<Vec<Elem>>> = vec![None; l.len()];
    let mut stack: Vec<Elem> = Vec::with_capacity(parts.len());
    fn rec(
        l: &Lattice,
        intervals: &[Vec<Elem>],
        depth: usize,
        acc: Elem,
        stack: &mut Vec<Elem>,
        tuple_of: &mut Vec<Option<Vec<Elem>>>,
    ) -> bool {
        if depth == intervals.len() {
            if tuple_of[acc].is_some() {
                return false;
            }
            tuple_of[acc] = Some(stack.clone());
            return true;
        }
        for &x in &intervals[depth] {
            stack.push(x);
            let ok = rec(l, intervals, depth + 1, l.join(acc, x), stack, tuple_of);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if !rec(l, &intervals, 0, l.bottom(), &mut stack, &mut tuple_of) {
        return false;
    }
    // Order reflection on covers inside the interval: the inverse map must be
    // monotone, and cover pairs generate the order.
    for &(a, b) in l.poset().covers() {
        if !l.leq(b, target) {
            continue;
        }
        let (Some(ta), Some(tb)) = (&tuple_of[a], &tuple_of[b]) else {
            return false;
        };
        if !ta.iter().zip(tb.iter()).all(|(&x, &y)| l.leq(x, y)) {
            return false;
        }
    }
    true
}

/// `[0̂, g]` decomposes as a nontrivial direct product of posets.
pub fn is_product_reducible(l: &Lattice, g: Elem) -> bool {
    let below: Vec<Elem> = l.poset().down_set(g).ones().collect();
    let sizes: Vec<usize> = (0..l.len())
        .map(|x| l.poset().down_set(x).count_ones(..))
        .collect();
    let total = sizes[g];
    for (i, &u) in below.iter().enumerate() {
        if u == l.bottom() || u == g {
            continue;
        }
        for &v in &below[i + 1..] {
            if v == l.bottom() || v == g {
                continue;
            }
            if l.join(u, v) == g
                && l.meet(u, v) == l.bottom()
                && sizes[u] * sizes[v] == total
                && join_map_is_iso(l, &[u, v], g)
            {
                return true;
            }
        }
    }
    false
}

/// The minimal building set: elements whose lower interval is not a
/// nontrivial product.
pub fn minimal_building_set(l: &Lattice) -> BuiltLattice {
    let gset: Vec<Elem> = (0..l.len())
        .filter(|&g| g != l.bottom() && !is_product_reducible(l, g))
        .collect();
    BuiltLattice::trusted(l.clone(), gset)
}

/// The maximal building set `L ∖ {0̂}`.
pub fn maximal_building_set(l: &Lattice) -> BuiltLattice {
    let gset: Vec<Elem> = (0..l.len()).filter(|&g| g != l.bottom()).collect();
    BuiltLattice::trusted(l.clone(), gset)
}

/// Elements of the sub-join-lattice generated by `gens` (always includes the
/// bottom), sorted.
pub fn sub_join_lattice(l: &Lattice, gens: &[Elem]) -> Vec<Elem> {
    let mut members = vec![l.bottom()];
    let mut seen = vec![false; l.len()];
    seen[l.bottom()] = true;
    let mut frontier = vec![l.bottom()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let j = l.join(x, g);
            if !seen[j] {
                seen[j] = true;
                members.push(j);
                frontier.push(j);
            }
        }
    }
    members.sort_unstable();
    members
}

/// The augmented built lattice of a matroid: flats of the free coextension
/// with the building set `{F ∪ e} ∪ atoms`.
pub struct AugmentedBuilt {
    pub built: BuiltLattice,
    pub coextension: Matroid,
    pub flats: GeometricLattice,
    /// Ground index of the added element in the coextension.
    pub e: usize,
}

pub fn augmented_built_lattice(m: &Matroid) -> Result<AugmentedBuilt, BuildingError> {
    let (m2, e) = m.free_coextension();
    let gl = GeometricLattice::lattice_of_flats(&m2);
    let gl_m = GeometricLattice::lattice_of_flats(m);
    let e_bit = 1u64 << e;
    let mut gset = Vec::new();
    for &f in &gl_m.flats {
        let elem = gl
            .elem_of_flat(f | e_bit)
            .expect("F ∪ e is a flat of the free coextension");
        gset.push(elem);
    }
    // The quoted family omits the rank-one flats not containing e; every
    // building set must contain all atoms, so they are added before
    // validation.
    gset.extend(gl.lattice.atoms());
    let built = validate_building_set(&gl.lattice, &gset)?;
    Ok(AugmentedBuilt {
        built,
        coextension: m2,
        flats: gl,
        e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::PartitionLattice;
    use crate::poset::boolean_lattice;

    fn b3_elems(masks: &[usize]) -> Vec<Elem> {
        masks.to_vec()
    }

    #[test]
    fn maximal_always_valid() {
        let b3 = boolean_lattice(3);
        let g: Vec<Elem> = (1..8).collect();
        assert!(validate_building_set(&b3, &g).is_ok());
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let g: Vec<Elem> = (1..pi4.lattice.len()).collect();
        assert!(validate_building_set(&pi4.lattice, &g).is_ok());
    }

    #[test]
    fn section_3_2_building_set_is_valid() {
        let b3 = boolean_lattice(3);
        // {1, 2, 3, 12, 23, 123}
        let g = b3_elems(&[0b001, 0b010, 0b100, 0b011, 0b110, 0b111]);
        let bl = validate_building_set(&b3, &g).unwrap();
        assert!(bl.is_irreducible());
        // G-factors of 13 are {1, 3}
        assert_eq!(bl.factors(0b101), &[0b001, 0b100]);
    }

    #[test]
    fn missing_atom_reported() {
        let b3 = boolean_lattice(3);
        let err = validate_building_set(&b3, &b3_elems(&[0b001, 0b010, 0b111])).unwrap_err();
        assert_eq!(
            err,
            BuildingError::MissingJoinIrreducible {
                elem: 0b100,
                label: "3".to_string()
            }
        );
    }

    #[test]
    fn incompatible_pair_rejected() {
        let b3 = boolean_lattice(3);
        // atoms + 12 + 13 but no 123: factors of 123 are {12, 13}, product too big
        let err = validate_building_set(&b3, &b3_elems(&[0b001, 0b010, 0b100, 0b011, 0b101]))
            .unwrap_err();
        assert!(matches!(
            err,
            BuildingError::NotABuildingSet { elem: 0b111, .. }
        ));
    }

    #[test]
    fn factors_examples() {
        let b3 = boolean_lattice(3);
        let bl = validate_building_set(&b3, &b3_elems(&[0b001, 0b010, 0b100, 0b111])).unwrap();
        // factors(12) = {1, 2}
        assert_eq!(bl.factors(0b011), &[0b001, 0b010]);
        // factors(g) = {g} for g in G
        assert_eq!(bl.factors(0b111), &[0b111]);
        assert_eq!(bl.factors(b3.bottom()), &[] as &[Elem]);
    }

    #[test]
    fn gmin_of_partition_lattice_is_connected_partitions() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        let expected: Vec<Elem> = (0..pi4.lattice.len())
            .filter(|&e| pi4.connected_block(e).is_some())
            .collect();
        assert_eq!(bl.gset(), expected.as_slice());
        assert_eq!(bl.gset().len(), 11);
        assert!(validate_building_set(&pi4.lattice, bl.gset()).is_ok());
    }

    #[test]
    fn gmin_of_boolean_is_atoms() {
        let b4 = boolean_lattice(4);
        let bl = minimal_building_set(&b4);
        assert_eq!(bl.gset(), &[0b0001, 0b0010, 0b0100, 0b1000]);
    }

    #[test]
    fn restrict_and_contract() {
        let b3 = boolean_lattice(3);
        let bl = maximal_building_set(&b3);
        // identity cases: restriction at the top, contraction at the bottom
        let (r, _) = bl.restrict(b3.top());
        assert_eq!(r.lattice().len(), bl.lattice().len());
        assert_eq!(r.gset().len(), bl.gset().len());
        let (c, _) = bl.contract(b3.bottom());
        assert_eq!(c.lattice().len(), bl.lattice().len());
        assert_eq!(c.gset().len(), bl.gset().len());
        let (r, emb) = bl.restrict(0b011);
        assert_eq!(r.lattice().len(), 4);
        assert_eq!(r.gset().len(), 3);
        assert_eq!(emb[r.lattice().top()], 0b011);
        assert!(validate_building_set(r.lattice(), r.gset()).is_ok());

        let (c, cemb) = bl.contract(0b001);
        assert_eq!(c.lattice().len(), 4);
        assert_eq!(c.gset().len(), 3);
        assert_eq!(cemb[c.lattice().bottom()], 0b001);
        assert!(validate_building_set(c.lattice(), c.gset()).is_ok());

        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        let a12 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[1, 2]).unwrap()])
            .unwrap();
        let (c, _) = bl.contract(a12);
        let pi3 = PartitionLattice::new(&[1, 2, 3]);
        let bl3 = minimal_building_set(&pi3.lattice);
        assert!(c
            .lattice()
            .poset()
            .isomorphism(pi3.lattice.poset())
            .is_some());
        assert_eq!(c.gset().len(), bl3.gset().len());
        assert!(validate_building_set(c.lattice(), c.gset()).is_ok());

        let b123 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[1, 2, 3]).unwrap()])
            .unwrap();
        let (r, _) = bl.restrict(b123);
        assert!(r
            .lattice()
            .poset()
            .isomorphism(pi3.lattice.poset())
            .is_some());
    }

    #[test]
    fn delete_ideal_of_fig3() {
        // B_3 with G = {1,2,3,12,23,123}: deleting (3) removes {3, 13}
        let b3 = boolean_lattice(3);
        let g = b3_elems(&[0b001, 0b010, 0b100, 0b011, 0b110, 0b111]);
        let bl = validate_building_set(&b3, &g).unwrap();
        let ideal = bl.building_ideal(0b100).unwrap();
        assert_eq!(ideal, vec![0b100, 0b101]);
        let (d, emb) = bl.delete_ideal(0b100).unwrap();
        assert_eq!(d.lattice().len(), 6);
        assert!(!emb.contains(&0b100));
        assert!(!emb.contains(&0b101));
        assert!(validate_building_set(d.lattice(), d.gset()).is_ok());
        // deleting the ideal of a maximal-weight generator preserves the rank
        assert_eq!(d.lattice().rank_function().unwrap().top_rank(), 3);
    }

    #[test]
    fn delete_ideal_maximal_building_set_removes_one_element() {
        let b3 = boolean_lattice(3);
        let bl = maximal_building_set(&b3);
        assert_eq!(bl.building_ideal(0b001).unwrap(), vec![0b001]);
        let (d, _) = bl.delete_ideal(0b001).unwrap();
        assert_eq!(d.lattice().len(), 7);
    }

    #[test]
    fn delete_ideal_requires_join_irreducible() {
        let b3 = boolean_lattice(3);
        let bl = maximal_building_set(&b3);
        assert!(matches!(
            bl.building_ideal(0b011),
            Err(BuildingError::NotJoinIrreducible { elem: 0b011, .. })
        ));
    }

    #[test]
    fn augmented_u12() {
        let aug = augmented_built_lattice(&Matroid::uniform(1, 2)).unwrap();
        assert_eq!(aug.flats.lattice.rank_function().unwrap().top_rank(), 2);
        assert!(aug.built.is_irreducible());
        // vertices: the three atoms {1},{2},{e}
        assert_eq!(aug.built.nested_vertices().len(), 3);
    }

    #[test]
    fn augmented_u23_lattice_is_flats_of_u34() {
        let aug = augmented_built_lattice(&Matroid::uniform(2, 3)).unwrap();
        let gl = GeometricLattice::lattice_of_flats(&Matroid::uniform(3, 4));
        assert!(aug
            .built
            .lattice()
            .poset()
            .isomorphism(gl.lattice.poset())
            .is_some());
    }

    #[test]
    fn augmented_boolean_1() {
        let aug = augmented_built_lattice(&Matroid::boolean(1)).unwrap();
        assert_eq!(aug.flats.lattice.rank_function().unwrap().top_rank(), 2);
    }

    #[test]
    fn factor_union_lemma() {
        // factors(H) = ⊔ factors(H ∧ F_i) over the factors F_i of F
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let bl = minimal_building_set(&pi4.lattice);
        let l = bl.lattice();
        for f in 0..l.len() {
            let parts = bl.factors(f);
            if parts.len() < 2 {
                continue;
            }
            for h in 0..l.len() {
                if !l.leq(h, f) {
                    continue;
                }
                let mut combined: Vec<Elem> = parts
                    .iter()
                    .flat_map(|&fi| bl.factors(l.meet(h, fi)).to_vec())
                    .collect();
                combined.sort_unstable();
                let mut expected = bl.factors(h).to_vec();
                expected.sort_unstable();
                assert_eq!(combined, expected);
            }
        }
    }
}
