//! Set partition lattices Π_I over an arbitrary finite integer set I,
//! ordered by coarsening, with block-level access for the connected
//! (one nonsingleton block) elements.

use crate::poset::{Elem, Lattice};
use std::collections::HashMap;

/// Partition lattice with per-element block data.
///
/// Blocks are bit masks over positions of the sorted ground set.
#[derive(Debug, Clone)]
pub struct PartitionLattice {
    pub lattice: Lattice,
    /// Sorted members of I.
    pub ground: Vec<i64>,
    /// Per element: blocks as masks over ground positions, sorted by lowest bit.
    pub blocks: Vec<Vec<u64>>,
    by_blocks: HashMap<Vec<u64>, Elem>,
}

impl PartitionLattice {
    pub fn new(ground_set: &[i64]) -> Self {
        let mut ground = ground_set.to_vec();
        ground.sort_unstable();
        ground.dedup();
        let n = ground.len();
        assert!(n <= 12, "partition lattice limited to 12 ground elements");
        let mut all = enumerate_partitions(n);
        // Sort by (number of merges, blocks) so identifiers are deterministic
        // and the bottom (all singletons) comes first.
        all.sort_by_key(|p| (n - p.len(), p.clone()));
        let labels: Vec<String> = all.iter().map(|p| partition_label(p, &ground)).collect();
        let coarsens = |fine: &[u64], coarse: &[u64]| {
            fine.iter().all(|&b| coarse.iter().any(|&c| b & !c == 0))
        };
        let lattice = Lattice::from_leq(labels, |a, b| coarsens(&all[a], &all[b]))
            .expect("coarsening order is a lattice");
        let by_blocks = all
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PartitionLattice {
            lattice,
            ground,
            blocks: all,
            by_blocks,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    /// Position of a ground value.
    pub fn position(&self, value: i64) -> Option<usize> {
        self.ground.binary_search(&value).ok()
    }

    /// Element id of a partition given by its nonsingleton blocks.
    pub fn element_of_nonsingleton_blocks(&self, nonsingleton: &[u64]) -> Option<Elem> {
        let mut blocks: Vec<u64> = nonsingleton.to_vec();
        let mut used = 0u64;
        for b in &blocks {
            if used & b != 0 {
                return None;
            }
            used |= b;
        }
        for i in 0..self.ground.len() {
            if used >> i & 1 == 0 {
                blocks.push(1 << i);
            }
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        self.by_blocks.get(&blocks).copied()
    }

    /// The unique nonsingleton block if the element has exactly one, as a mask.
    pub fn connected_block(&self, e: Elem) -> Option<u64> {
        let nonsingleton: Vec<u64> = self.blocks[e]
            .iter()
            .copied()
            .filter(|b| b.count_ones() >= 2)
            .collect();
        if nonsingleton.len() == 1 {
            Some(nonsingleton[0])
        } else {
            None
        }
    }

    /// Nonsingleton blocks of an element, as masks.
    pub fn nonsingleton_blocks(&self, e: Elem) -> Vec<u64> {
        self.blocks[e]
            .iter()
            .copied()
            .filter(|b| b.count_ones() >= 2)
            .collect()
    }

    /// Ground values of a block mask, sorted.
    pub fn block_values(&self, mask: u64) -> Vec<i64> {
        (0..self.ground.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.ground[i])
            .collect()
    }

    /// Mask of a set of ground values.
    pub fn mask_of_values(&self, values: &[i64]) -> Option<u64> {
        let mut mask = 0u64;
        for &v in values {
            mask |= 1 << self.position(v)?;
        }
        Some(mask)
    }
}

/// All partitions of `{0, …, n-1}` via restricted growth strings.
fn enumerate_partitions(n: usize) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks = vec![0u64; k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b] |= 1 << i;
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        out.push(blocks);
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let cap = rgs[..i].iter().copied().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

fn partition_label(blocks: &[u64], ground: &[i64]) -> String {
    let compact = ground.iter().all(|&v| (0..=9).contains(&v));
    let nonsingleton: Vec<String> = blocks
        .iter()
        .filter(|b| b.count_ones() >= 2)
        .map(|&b| {
            let vals: Vec<String> = (0..ground.len())
                .filter(|&i| b >> i & 1 == 1)
                .map(|i| ground[i].to_string())
                .collect();
            vals.join(if compact { "" } else { "," })
        })
        .collect();
    if nonsingleton.is_empty() {
        "∅".to_string()
    } else {
        nonsingleton.join("|")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi4_has_bell_4_elements() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        assert_eq!(pi4.lattice.len(), 15);
        assert_eq!(pi4.lattice.label(pi4.lattice.bottom()), "∅");
        assert_eq!(pi4.lattice.label(pi4.lattice.top()), "1234");
    }

    #[test]
    fn pi4_rank_is_merges() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let rk = pi4.lattice.rank_function().unwrap();
        for e in 0..pi4.lattice.len() {
            assert_eq!(rk.rank(e), 4 - pi4.blocks[e].len());
        }
        assert_eq!(pi4.lattice.atoms().len(), 6);
        // the join-irreducibles of a partition lattice are exactly its atoms
        assert_eq!(pi4.lattice.join_irreducibles(), pi4.lattice.atoms());
    }

    #[test]
    fn join_of_atoms_in_pi3() {
        let pi3 = PartitionLattice::new(&[1, 2, 3]);
        let a12 = pi3
            .element_of_nonsingleton_blocks(&[pi3.mask_of_values(&[1, 2]).unwrap()])
            .unwrap();
        let a13 = pi3
            .element_of_nonsingleton_blocks(&[pi3.mask_of_values(&[1, 3]).unwrap()])
            .unwrap();
        assert_eq!(pi3.lattice.join(a12, a13), pi3.lattice.top());
    }

    #[test]
    fn join_of_disjoint_pairs_in_pi4() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let a12 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[1, 2]).unwrap()])
            .unwrap();
        let a34 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[3, 4]).unwrap()])
            .unwrap();
        let pair = pi4
            .element_of_nonsingleton_blocks(&[
                pi4.mask_of_values(&[1, 2]).unwrap(),
                pi4.mask_of_values(&[3, 4]).unwrap(),
            ])
            .unwrap();
        assert_eq!(pi4.lattice.join(a12, a34), pair);
        assert_eq!(pi4.lattice.label(pair), "12|34");
    }

    #[test]
    fn lower_interval_of_two_pairs_is_a_product() {
        // [0̂, 12|34] ≅ [0̂, |12|] × [0̂, |34|]
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let l = &pi4.lattice;
        let a12 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[1, 2]).unwrap()])
            .unwrap();
        let a34 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[3, 4]).unwrap()])
            .unwrap();
        let both = l.join(a12, a34);
        let interval = l.interval(l.bottom(), both).unwrap();
        let left = l.interval(l.bottom(), a12).unwrap();
        let right = l.interval(l.bottom(), a34).unwrap();
        let product = left.lattice.poset().product(right.lattice.poset());
        assert!(interval.lattice.poset().isomorphism(&product).is_some());
    }

    #[test]
    fn interval_above_atom_is_smaller_partition_lattice() {
        let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
        let a12 = pi4
            .element_of_nonsingleton_blocks(&[pi4.mask_of_values(&[1, 2]).unwrap()])
            .unwrap();
        let iv = pi4.lattice.interval(a12, pi4.lattice.top()).unwrap();
        let pi3 = PartitionLattice::new(&[1, 2, 3]);
        assert!(iv
            .lattice
            .poset()
            .isomorphism(pi3.lattice.poset())
            .is_some());
    }
}
