//! Simplicial complexes as facet lists over labeled vertices, with links,
//! deletions, joins, cones, boundaries, and face enumeration.
//!
//! Two degenerate complexes are distinguished: `{∅}` (one empty facet) and
//! the void complex (no faces at all). The first is the nested set complex
//! of a rank-one lattice; the second only appears as a boundary.

use sha2::{Digest, Sha256};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("vertex sets are not disjoint (shared label {0})")]
    NotDisjoint(String),
    #[error("operation requires a pure complex")]
    NotPure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Build from a list of faces; the facets are the maximal ones. An empty
    /// face list yields `{∅}`.
    pub fn of_faces(labels: Vec<String>, faces: Vec<Vec<u32>>) -> Self {
        let mut faces: Vec<Vec<u32>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        faces.sort();
        faces.dedup();
        let mut facets: Vec<Vec<u32>> = Vec::new();
        for f in &faces {
            if !faces.iter().any(|g| g.len() > f.len() && is_subset(f, g)) {
                facets.push(f.clone());
            }
        }
        if facets.is_empty() {
            facets.push(Vec::new());
        }
        facets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        SimplicialComplex { labels, facets }
    }

    /// The complex `{∅}`.
    pub fn empty_complex(labels: Vec<String>) -> Self {
        SimplicialComplex {
            labels,
            facets: vec![Vec::new()],
        }
    }

    /// The void complex, with no faces at all.
    pub fn void(labels: Vec<String>) -> Self {
        SimplicialComplex {
            labels,
            facets: Vec::new(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Vertices actually used by faces, sorted.
    pub fn vertices(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.facets.iter().flatten().copied().collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-2)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn has_face(&self, face: &[u32]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|ff| is_subset(&f, ff))
    }

    /// All faces including the empty one, sorted by (cardinality, lex).
    pub fn all_faces(&self) -> Vec<Vec<u32>> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for f in &self.facets {
            for mask in 0u64..1 << f.len() {
                let sub: Vec<u32> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                seen.insert(sub);
            }
        }
        let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    /// Face counts by cardinality: `f[i]` counts faces with `i` vertices,
    /// starting from `f[0] = 1` for the empty face.
    pub fn f_vector(&self) -> Vec<i64> {
        if self.is_void() {
            return vec![0];
        }
        let d = (self.dim() + 1) as usize;
        let mut f = vec![0i64; d + 1];
        for face in self.all_faces() {
            f[face.len()] += 1;
        }
        f
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        if self.is_void() {
            return 0;
        }
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &fi)| if i % 2 == 0 { -fi } else { fi })
            .sum()
    }

    pub fn link(&self, face: &[u32]) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_face(face) {
            return Err(ComplexError::NotAFace(face.to_vec()));
        }
        let mut f = face.to_vec();
        f.sort_unstable();
        let facets = self
            .facets
            .iter()
            .filter(|ff| is_subset(&f, ff))
            .map(|ff| ff.iter().copied().filter(|v| !f.contains(v)).collect())
            .collect();
        Ok(SimplicialComplex::of_faces(self.labels.clone(), facets))
    }

    /// Deletion of a vertex: faces not containing `v`.
    pub fn delete_vertex(&self, v: u32) -> SimplicialComplex {
        let faces = self
            .facets
            .iter()
            .map(|ff| ff.iter().copied().filter(|&x| x != v).collect())
            .collect();
        SimplicialComplex::of_faces(self.labels.clone(), faces)
    }

    /// Deletion of a face: faces not containing all of `face`.
    pub fn delete_face(&self, face: &[u32]) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_face(face) {
            return Err(ComplexError::NotAFace(face.to_vec()));
        }
        let mut f = face.to_vec();
        f.sort_unstable();
        let mut faces = Vec::new();
        for ff in &self.facets {
            if is_subset(&f, ff) {
                for &x in &f {
                    faces.push(ff.iter().copied().filter(|&y| y != x).collect());
                }
            } else {
                faces.push(ff.clone());
            }
        }
        Ok(SimplicialComplex::of_faces(self.labels.clone(), faces))
    }

    /// Join of two complexes on disjoint vertex sets. Complexes over the same
    /// label table join in place; otherwise the label tables are concatenated.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        if self.is_void() || other.is_void() {
            let labels = self.labels.clone();
            return Ok(SimplicialComplex::void(labels));
        }
        if self.labels == other.labels {
            let mine = self.vertices();
            if let Some(&shared) = other.vertices().iter().find(|v| mine.contains(v)) {
                return Err(ComplexError::NotDisjoint(self.label(shared).to_string()));
            }
            let mut facets = Vec::new();
            for a in &self.facets {
                for b in &other.facets {
                    let mut f = a.clone();
                    f.extend_from_slice(b);
                    facets.push(f);
                }
            }
            return Ok(SimplicialComplex::of_faces(self.labels.clone(), facets));
        }
        for v in other.vertices() {
            if self.labels.contains(&other.labels[v as usize]) {
                return Err(ComplexError::NotDisjoint(other.label(v).to_string()));
            }
        }
        let shift = self.labels.len() as u32;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut facets = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                let mut f = a.clone();
                f.extend(b.iter().map(|&v| v + shift));
                facets.push(f);
            }
        }
        Ok(SimplicialComplex::of_faces(labels, facets))
    }

    /// Cone with a fresh apex label.
    pub fn cone(&self, apex_label: &str) -> SimplicialComplex {
        let mut labels = self.labels.clone();
        let apex = labels.len() as u32;
        labels.push(apex_label.to_string());
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.push(apex);
                g
            })
            .collect();
        SimplicialComplex::of_faces(labels, facets)
    }

    /// Codimension-one faces of facets, with the number of facets containing each.
    pub fn ridge_incidence(&self) -> Vec<(Vec<u32>, usize)> {
        let mut counts: std::collections::HashMap<Vec<u32>, usize> = Default::default();
        for f in &self.facets {
            if f.is_empty() {
                continue;
            }
            for i in 0..f.len() {
                let mut r = f.clone();
                r.remove(i);
                *counts.entry(r).or_insert(0) += 1;
            }
        }
        let mut out: Vec<(Vec<u32>, usize)> = counts.into_iter().collect();
        out.sort();
        out
    }

    /// Boundary of a pure complex: the subcomplex generated by ridges lying
    /// in exactly one facet.
    pub fn boundary(&self) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let ridges: Vec<Vec<u32>> = self
            .ridge_incidence()
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        if ridges.is_empty() {
            return Ok(SimplicialComplex::void(self.labels.clone()));
        }
        Ok(SimplicialComplex::of_faces(self.labels.clone(), ridges))
    }

    /// Canonical form: facets as sorted label lists, sorted.
    pub fn canonical_form(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                let mut names: Vec<String> =
                    f.iter().map(|&v| self.labels[v as usize].clone()).collect();
                names.sort();
                names
            })
            .collect();
        out.sort();
        out
    }

    pub fn same_complex(&self, other: &SimplicialComplex) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    pub fn canonical_hash(&self) -> String {
        let mut hasher = Sha256::new();
        for facet in self.canonical_form() {
            for name in facet {
                hasher.update(name.as_bytes());
                hasher.update([0u8]);
            }
            hasher.update([1u8]);
        }
        hex_string(&hasher.finalize())
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// `a ⊆ b` for sorted vectors.
pub fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut i = 0;
    for &x in b {
        if i == a.len() {
            return true;
        }
        if a[i] == x {
            i += 1;
        }
    }
    i == a.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn face_enumeration() {
        let c = SimplicialComplex::of_faces(labels(4), vec![vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(c.dim(), 2);
        assert!(!c.is_pure());
        assert_eq!(c.f_vector(), vec![1, 4, 4, 1]);
        assert!(c.has_face(&[1, 2]));
        assert!(!c.has_face(&[1, 3]));
    }

    #[test]
    fn link_of_simplex_vertex() {
        let c = SimplicialComplex::of_faces(labels(3), vec![vec![0, 1, 2]]);
        let lk = c.link(&[0]).unwrap();
        assert_eq!(lk.facets(), &[vec![1, 2]]);
        assert!(lk.is_simplex());
        assert!(c.link(&[9]).is_err());
    }

    #[test]
    fn delete_and_boundary() {
        // full triangle: boundary of the 2-simplex is the 3-cycle
        let c = SimplicialComplex::of_faces(labels(3), vec![vec![0, 1, 2]]);
        let b = c.boundary().unwrap();
        assert_eq!(b.facets().len(), 3);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.reduced_euler_characteristic(), -1);
        // deleting a vertex of the triangle leaves an edge
        let d = c.delete_vertex(0);
        assert_eq!(d.facets(), &[vec![1, 2]]);
    }

    #[test]
    fn join_products() {
        let a = SimplicialComplex::of_faces(labels(2), vec![vec![0], vec![1]]);
        let b = SimplicialComplex::of_faces(
            vec!["w0".to_string(), "w1".to_string()],
            vec![vec![0], vec![1]],
        );
        let j = a.join(&b).unwrap();
        // 4-cycle: two points joined with two points
        assert_eq!(j.facets().len(), 4);
        assert_eq!(j.dim(), 1);
        assert_eq!(j.reduced_euler_characteristic(), -1);
    }

    #[test]
    fn empty_complex_conventions() {
        let e = SimplicialComplex::empty_complex(labels(0));
        assert_eq!(e.dim(), -1);
        assert_eq!(e.f_vector(), vec![1]);
        assert!(e.is_simplex());
        let v = e.boundary().unwrap();
        assert!(v.is_void());
        assert_eq!(v.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn cone_appends_apex() {
        let two = SimplicialComplex::of_faces(labels(2), vec![vec![0], vec![1]]);
        let c = two.cone("apex");
        assert_eq!(c.facets().len(), 2);
        assert_eq!(c.dim(), 1);
        // ridge incidence of the path 0-apex-1: apex is in two facets
        let inc = c.ridge_incidence();
        assert!(inc.iter().any(|(r, c)| r == &vec![2] && *c == 2));
    }

    #[test]
    fn hash_is_label_based() {
        let a = SimplicialComplex::of_faces(labels(3), vec![vec![0, 1], vec![1, 2]]);
        let mut relabeled = labels(3);
        relabeled.swap(0, 2);
        let b = SimplicialComplex::of_faces(relabeled, vec![vec![2, 1], vec![1, 0]]);
        assert!(a.same_complex(&b));
        assert_eq!(a.canonical_hash(), b.canonical_hash());
    }
}
