//! Matroids stored by explicit basis lists: standard constructions
//! (uniform, graphic, dual, truncation, direct sum, free coextension),
//! circuits, broken circuits, nbc-bases, and the lattice of flats.

use crate::poset::{Elem, Lattice};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("basis family is empty")]
    NoBases,
    #[error("bases have different cardinalities")]
    UnequalBases,
    #[error("basis exchange fails for bases {b1:?}, {b2:?} at element {x}")]
    ExchangeFailure {
        b1: Vec<String>,
        b2: Vec<String>,
        x: String,
    },
    #[error("cannot truncate a rank-zero matroid")]
    RankZeroTruncation,
    #[error("unknown ground element {0}")]
    UnknownElement(String),
    #[error("ground set too large ({0} elements; limit 60)")]
    GroundTooLarge(usize),
}

/// A matroid on at most 60 ground elements, given by its bases as bit masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: Vec<String>,
    rank: usize,
    bases: Vec<u64>,
}

impl Matroid {
    /// Validate the basis-exchange axiom exhaustively and build the matroid.
    pub fn from_bases(ground: Vec<String>, bases: Vec<u64>) -> Result<Self, MatroidError> {
        if ground.len() > 60 {
            return Err(MatroidError::GroundTooLarge(ground.len()));
        }
        let mut bases = bases;
        bases.sort_unstable();
        bases.dedup();
        if bases.is_empty() {
            return Err(MatroidError::NoBases);
        }
        let rank = bases[0].count_ones() as usize;
        if bases.iter().any(|b| b.count_ones() as usize != rank) {
            return Err(MatroidError::UnequalBases);
        }
        let names = |mask: u64| -> Vec<String> {
            (0..ground.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ground[i].clone())
                .collect()
        };
        for &b1 in &bases {
            for &b2 in &bases {
                let mut only1 = b1 & !b2;
                while only1 != 0 {
                    let x = only1.trailing_zeros() as u64;
                    only1 &= only1 - 1;
                    let mut only2 = b2 & !b1;
                    let mut ok = false;
                    while only2 != 0 {
                        let y = only2.trailing_zeros() as u64;
                        only2 &= only2 - 1;
                        let cand = b1 & !(1 << x) | (1 << y);
                        if bases.binary_search(&cand).is_ok() {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Err(MatroidError::ExchangeFailure {
                            b1: names(b1),
                            b2: names(b2),
                            x: ground[x as usize].clone(),
                        });
                    }
                }
            }
        }
        Ok(Matroid {
            ground,
            rank,
            bases,
        })
    }

    pub fn from_named_bases(
        ground: Vec<String>,
        bases: &[Vec<String>],
    ) -> Result<Self, MatroidError> {
        let idx: HashMap<&str, usize> = ground
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let mut mask = 0u64;
            for name in b {
                let i = idx
                    .get(name.as_str())
                    .ok_or_else(|| MatroidError::UnknownElement(name.clone()))?;
                mask |= 1 << i;
            }
            masks.push(mask);
        }
        Self::from_bases(ground, masks)
    }

    pub fn uniform(r: usize, n: usize) -> Self {
        assert!(r <= n && n <= 60);
        let ground = (1..=n).map(|i| i.to_string()).collect();
        let mut bases = Vec::new();
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize == r {
                bases.push(mask);
            }
        }
        Matroid {
            ground,
            rank: r,
            bases,
        }
    }

    pub fn boolean(n: usize) -> Self {
        Self::uniform(n, n)
    }

    /// Graphic matroid: ground set of edges, bases are maximal spanning forests.
    pub fn graphic(vertices: &[String], edges: &[(String, String)]) -> Result<Self, MatroidError> {
        let vidx: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut ends = Vec::with_capacity(edges.len());
        let mut ground = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let ui = *vidx
                .get(u.as_str())
                .ok_or_else(|| MatroidError::UnknownElement(u.clone()))?;
            let vi = *vidx
                .get(v.as_str())
                .ok_or_else(|| MatroidError::UnknownElement(v.clone()))?;
            ends.push((ui, vi));
            ground.push(format!("{u}-{v}"));
        }
        if ground.len() > 60 {
            return Err(MatroidError::GroundTooLarge(ground.len()));
        }
        let components = |mask: u64| -> usize {
            let mut parent: Vec<usize> = (0..vertices.len()).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let r = find(parent, parent[x]);
                    parent[x] = r;
                }
                parent[x]
            }
            for (i, &(u, v)) in ends.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    parent[ru] = rv;
                }
            }
            (0..vertices.len())
                .filter(|&x| find(&mut parent, x) == x)
                .count()
        };
        let rank = vertices.len() - components(!0u64 >> (64 - ground.len().max(1)));
        let mut bases = Vec::new();
        for mask in 0u64..1 << ground.len() {
            if mask.count_ones() as usize == rank && vertices.len() - components(mask) == rank {
                bases.push(mask);
            }
        }
        Ok(Matroid {
            ground,
            rank,
            bases,
        })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn full_mask(&self) -> u64 {
        if self.ground.is_empty() {
            0
        } else {
            !0u64 >> (64 - self.ground.len())
        }
    }

    pub fn is_independent(&self, set: u64) -> bool {
        self.bases.iter().any(|&b| set & !b == 0)
    }

    pub fn rank_of(&self, set: u64) -> usize {
        self.bases
            .iter()
            .map(|&b| (b & set).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn closure(&self, set: u64) -> u64 {
        let r = self.rank_of(set);
        let mut out = set;
        for x in 0..self.ground.len() {
            if set >> x & 1 == 0 && self.rank_of(set | 1 << x) == r {
                out |= 1 << x;
            }
        }
        out
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full_mask();
        let mut bases: Vec<u64> = self.bases.iter().map(|&b| full & !b).collect();
        bases.sort_unstable();
        Matroid {
            ground: self.ground.clone(),
            rank: self.ground.len() - self.rank,
            bases,
        }
    }

    /// Bases become the independent sets of size `rank - 1`.
    pub fn truncation(&self) -> Result<Matroid, MatroidError> {
        if self.rank == 0 {
            return Err(MatroidError::RankZeroTruncation);
        }
        let mut bases = Vec::new();
        for &b in &self.bases {
            let mut m = b;
            while m != 0 {
                let x = m.trailing_zeros();
                m &= m - 1;
                bases.push(b & !(1u64 << x));
            }
        }
        bases.sort_unstable();
        bases.dedup();
        Ok(Matroid {
            ground: self.ground.clone(),
            rank: self.rank - 1,
            bases,
        })
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        if self.ground.len() + other.ground.len() > 60 {
            return Err(MatroidError::GroundTooLarge(
                self.ground.len() + other.ground.len(),
            ));
        }
        let mut ground = self.ground.clone();
        ground.extend(other.ground.iter().cloned());
        let shift = self.ground.len();
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | b2 << shift);
            }
        }
        bases.sort_unstable();
        Ok(Matroid {
            ground,
            rank: self.rank + other.rank,
            bases,
        })
    }

    /// Free coextension `Tr(M* ⊕ U_{1,1})*`; returns the new matroid and the
    /// index of the added element.
    pub fn free_coextension(&self) -> (Matroid, usize) {
        let mut e_label = "e".to_string();
        let mut k = 0usize;
        while self.ground.contains(&e_label) {
            k += 1;
            e_label = format!("e{k}");
        }
        let u11 = Matroid {
            ground: vec![e_label],
            rank: 1,
            bases: vec![1],
        };
        let sum = self.dual().direct_sum(&u11).expect("small ground");
        let truncated = sum.truncation().expect("rank ≥ 1 after adding a coloop");
        (truncated.dual(), self.ground.len())
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<u64> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for mask in 1u64..1 << n {
            if mask.count_ones() as usize > self.rank + 1 {
                continue;
            }
            if self.is_independent(mask) {
                continue;
            }
            let mut minimal = true;
            let mut m = mask;
            while m != 0 {
                let x = m.trailing_zeros();
                m &= m - 1;
                if !self.is_independent(mask & !(1u64 << x)) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(mask);
            }
        }
        out.sort_by_key(|c| (c.count_ones(), *c));
        out
    }

    /// Broken circuits `C ∖ min_◁ C` for an order given as ground indices in
    /// ◁-increasing order.
    pub fn broken_circuits(&self, order: &[usize]) -> Vec<u64> {
        let pos = position_of(order, self.ground.len());
        let mut out: Vec<u64> = self
            .circuits()
            .iter()
            .map(|&c| {
                let min = (0..self.ground.len())
                    .filter(|&i| c >> i & 1 == 1)
                    .min_by_key(|&i| pos[i])
                    .expect("circuit nonempty");
                c & !(1u64 << min)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Bases containing no broken circuit, in lexicographic order w.r.t. ◁.
    pub fn nbc_bases(&self, order: &[usize]) -> Vec<u64> {
        let broken = self.broken_circuits(order);
        let pos = position_of(order, self.ground.len());
        let mut nbc: Vec<u64> = self
            .bases
            .iter()
            .copied()
            .filter(|&b| broken.iter().all(|&bc| bc & !b != 0))
            .collect();
        nbc.sort_by_key(|&b| sorted_positions(b, &pos));
        nbc
    }
}

fn position_of(order: &[usize], n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    pos
}

fn sorted_positions(mask: u64, pos: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = (0..pos.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| pos[i])
        .collect();
    v.sort_unstable();
    v
}

/// The lattice of flats of a matroid, with the closure operator.
#[derive(Debug, Clone)]
pub struct GeometricLattice {
    pub lattice: Lattice,
    /// Flat of each lattice element, as a ground-set mask.
    pub flats: Vec<u64>,
    pub ground: Vec<String>,
    elem_by_flat: HashMap<u64, Elem>,
}

impl GeometricLattice {
    pub fn lattice_of_flats(m: &Matroid) -> GeometricLattice {
        let mut flats = vec![m.closure(0)];
        let mut seen: HashMap<u64, ()> = HashMap::new();
        seen.insert(flats[0], ());
        let mut queue = vec![flats[0]];
        while let Some(f) = queue.pop() {
            for x in 0..m.ground_size() {
                if f >> x & 1 == 0 {
                    let c = m.closure(f | 1 << x);
                    if seen.insert(c, ()).is_none() {
                        flats.push(c);
                        queue.push(c);
                    }
                }
            }
        }
        flats.sort_by_key(|&f| (m.rank_of(f), f));
        let labels: Vec<String> = flats.iter().map(|&f| flat_label(f, m.ground())).collect();
        let lattice = Lattice::from_leq(labels, |a, b| flats[a] & !flats[b] == 0)
            .expect("flats form a lattice");
        let elem_by_flat = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        GeometricLattice {
            lattice,
            flats,
            ground: m.ground().to_vec(),
            elem_by_flat,
        }
    }

    pub fn elem_of_flat(&self, flat: u64) -> Option<Elem> {
        self.elem_by_flat.get(&flat).copied()
    }

    /// The closure of an arbitrary ground subset, as a lattice element.
    pub fn closure_elem(&self, set: u64) -> Elem {
        // smallest flat containing the set
        let mut best: Option<Elem> = None;
        for (e, &f) in self.flats.iter().enumerate() {
            if set & !f == 0 {
                best = match best {
                    None => Some(e),
                    Some(b) => {
                        if self.lattice.leq(e, b) {
                            Some(e)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best.expect("top flat contains every set")
    }

    /// The sub-join-lattice generated by a set of atoms, as a geometric
    /// lattice over those atoms, plus the embedding into `self`.
    pub fn restrict_to_atoms(&self, atoms: &[Elem]) -> (GeometricLattice, Vec<Elem>) {
        let embed = crate::building::sub_join_lattice(&self.lattice, atoms);
        let ground: Vec<String> = atoms
            .iter()
            .map(|&a| self.lattice.label(a).to_string())
            .collect();
        let flats: Vec<u64> = embed
            .iter()
            .map(|&e| {
                let mut mask = 0u64;
                for (i, &a) in atoms.iter().enumerate() {
                    if self.lattice.leq(a, e) {
                        mask |= 1 << i;
                    }
                }
                mask
            })
            .collect();
        let labels: Vec<String> = embed
            .iter()
            .map(|&e| self.lattice.label(e).to_string())
            .collect();
        let lattice = Lattice::from_leq(labels, |a, b| self.lattice.leq(embed[a], embed[b]))
            .expect("sub-join-lattice is a lattice");
        let elem_by_flat = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        (
            GeometricLattice {
                lattice,
                flats,
                ground,
                elem_by_flat,
            },
            embed,
        )
    }
}

fn flat_label(mask: u64, ground: &[String]) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    let members: Vec<&str> = (0..ground.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| ground[i].as_str())
        .collect();
    let compact = ground.iter().all(|g| g.chars().count() == 1);
    members.join(if compact { "" } else { "," })
}
