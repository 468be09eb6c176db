//! Vertex-decomposition certificates: the recursive construction that sheds
//! the ω-maximal join-irreducible, an independent certificate verifier, and
//! a brute-force decomposability oracle for small complexes.

use crate::building::{lattice_heights, BuildingError, BuiltLattice};
use crate::complex::SimplicialComplex;
use crate::labeling::{
    default_admissible_map, edge_label, is_admissible, AdmissibleMap, LabelingError,
};
use crate::nested::{is_nested, nested_facets, quotient, NestedError};
use crate::poset::Elem;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("the admissible map must be injective on join-irreducibles")]
    NotInjective,
    #[error("lattice is not graded: {0}")]
    NotGraded(String),
    #[error("derived map failed the R-labeling check during {context}")]
    NotAdmissible { context: String },
    #[error("complex has {0} vertices; brute force is limited to {1}")]
    SizeLimit(usize, usize),
    #[error(transparent)]
    Building(#[from] BuildingError),
    #[error(transparent)]
    Nested(#[from] NestedError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// A vertex-decomposition certificate. Internal nodes name the shedding
/// vertex by label and bind the complex they decompose by canonical hash.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VdCert {
    Simplex,
    Shed {
        hash: String,
        vertex: String,
        delete: Box<VdCert>,
        link: Box<VdCert>,
    },
}

impl VdCert {
    pub fn node_count(&self) -> usize {
        match self {
            VdCert::Simplex => 1,
            VdCert::Shed { delete, link, .. } => 1 + delete.node_count() + link.node_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdFailure {
    pub path: String,
    pub reason: String,
}

impl std::fmt::Display for VdFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at {}: {}", self.path, self.reason)
    }
}

impl std::error::Error for VdFailure {}

/// One join factor of the complex being decomposed: either the nested set
/// complex of a built lattice (with ambient vertex labels) or a bare simplex.
enum Piece {
    Built(Box<BuildItem>),
    Facet(Vec<String>),
}

struct BuildItem {
    bl: BuiltLattice,
    omega: AdmissibleMap,
    /// Ambient label of each lattice element that is a G-vertex.
    vlabel: Vec<Option<String>>,
}

impl BuildItem {
    fn label_of(&self, e: Elem) -> String {
        self.vlabel[e].clone().expect("G element carries a label")
    }

    fn complex(&self) -> SimplicialComplex {
        let pool = self.bl.nested_vertices();
        let labels: Vec<String> = pool.iter().map(|&g| self.label_of(g)).collect();
        let faces: Vec<Vec<u32>> = nested_facets(&self.bl)
            .into_iter()
            .map(|f| {
                f.iter()
                    .map(|e| pool.iter().position(|x| x == e).unwrap() as u32)
                    .collect()
            })
            .collect();
        SimplicialComplex::of_faces(labels, faces)
    }
}

fn complex_of(pieces: &[Piece]) -> SimplicialComplex {
    let mut acc = SimplicialComplex::empty_complex(Vec::new());
    for p in pieces {
        let c = match p {
            Piece::Built(item) => item.complex(),
            Piece::Facet(labels) => {
                let n = labels.len() as u32;
                SimplicialComplex::of_faces(labels.clone(), vec![(0..n).collect()])
            }
        };
        acc = acc.join(&c).expect("pieces have disjoint ambient labels");
    }
    acc
}

/// Split a built lattice into the irreducible restrictions at the maximal
/// elements of G; the nested set complex is the join of the components'.
fn normalize(item: BuildItem, out: &mut Vec<Piece>) -> Result<(), DecompError> {
    if item.bl.lattice().len() == 1 {
        return Ok(());
    }
    if item.bl.is_irreducible() {
        out.push(Piece::Built(Box::new(item)));
        return Ok(());
    }
    for &g in item.bl.max_g().to_vec().iter() {
        let (rbl, emb) = item.bl.restrict(g);
        let omega = restrict_map(&item.bl, &item.omega, rbl.lattice(), &emb);
        let vlabel = emb.iter().map(|&old| item.vlabel[old].clone()).collect();
        normalize(
            BuildItem {
                bl: rbl,
                omega,
                vlabel,
            },
            out,
        )?;
    }
    Ok(())
}

/// Restrict ω to a lower interval: join-irreducibles of `[0̂, f]` are exactly
/// the ambient join-irreducibles lying in it.
fn restrict_map(
    parent: &BuiltLattice,
    omega: &AdmissibleMap,
    sub: &crate::poset::Lattice,
    embed: &[Elem],
) -> AdmissibleMap {
    let _ = parent;
    let assignments: Vec<(Elem, u64)> = sub
        .join_irreducibles()
        .into_iter()
        .map(|x| {
            let v = omega
                .value(embed[x])
                .expect("interval irreducibles are ambient irreducibles");
            (x, v)
        })
        .collect();
    AdmissibleMap::new(sub, &assignments).expect("irreducibles only")
}

/// ω̃ on a deleted lattice: keep old weights; new join-irreducibles get
/// weights above the deleted generator's.
fn deletion_map(
    parent: &BuiltLattice,
    omega: &AdmissibleMap,
    sub: &crate::poset::Lattice,
    embed: &[Elem],
) -> Result<AdmissibleMap, DecompError> {
    let heights = lattice_heights(sub);
    let mut fresh: Vec<Elem> = Vec::new();
    let mut assignments: Vec<(Elem, u64)> = Vec::new();
    for x in sub.join_irreducibles() {
        if parent.lattice().is_join_irreducible(embed[x]) {
            assignments.push((x, omega.value(embed[x]).expect("irreducible weighted")));
        } else {
            fresh.push(x);
        }
    }
    fresh.sort_by_key(|&x| (heights[x], x));
    let base = omega.max_value();
    for (i, x) in fresh.into_iter().enumerate() {
        assignments.push((x, base + 1 + i as u64));
    }
    let map = AdmissibleMap::new(sub, &assignments).expect("irreducibles only");
    if !map.is_injective() {
        return Err(DecompError::NotInjective);
    }
    if is_admissible(sub, &map).is_err() {
        return Err(DecompError::NotAdmissible {
            context: "ideal deletion".to_string(),
        });
    }
    Ok(map)
}

/// A map on a contraction `[g, 1̂]`: atoms inherit the ambient edge label of
/// their cover, higher irreducibles get fresh weights above everything.
fn contraction_map(
    parent: &BuiltLattice,
    omega: &AdmissibleMap,
    sub: &crate::poset::Lattice,
    embed: &[Elem],
    g: Elem,
) -> Result<AdmissibleMap, DecompError> {
    let heights = lattice_heights(sub);
    let mut assignments: Vec<(Elem, u64)> = Vec::new();
    let mut fresh: Vec<Elem> = Vec::new();
    let mut max_atom = 0u64;
    for x in sub.join_irreducibles() {
        if sub.is_atom(x) {
            let v =
                edge_label(parent.lattice(), omega, g, embed[x]).expect("covers have generators");
            max_atom = max_atom.max(v);
            assignments.push((x, v));
        } else {
            fresh.push(x);
        }
    }
    fresh.sort_by_key(|&x| (heights[x], x));
    for (i, x) in fresh.into_iter().enumerate() {
        assignments.push((x, max_atom + 1 + i as u64));
    }
    let map = AdmissibleMap::new(sub, &assignments).expect("irreducibles only");
    if !map.is_injective() {
        return Err(DecompError::NotInjective);
    }
    if is_admissible(sub, &map).is_err() {
        return Err(DecompError::NotAdmissible {
            context: "contraction".to_string(),
        });
    }
    Ok(map)
}

/// Build a vertex-decomposition certificate for `N(L, G)` following the
/// recursion on the ω-maximal join-irreducible. With the default map this
/// works for any built geometric lattice and any lattice reachable from one
/// by ideal deletions.
pub fn vertex_decomposition(
    bl: &BuiltLattice,
    omega: &AdmissibleMap,
) -> Result<VdCert, DecompError> {
    if !omega.is_injective() {
        return Err(DecompError::NotInjective);
    }
    bl.lattice()
        .rank_function()
        .map_err(|e| DecompError::NotGraded(e.to_string()))?;
    if is_admissible(bl.lattice(), omega).is_err() {
        return Err(DecompError::NotAdmissible {
            context: "input map".to_string(),
        });
    }
    let vlabel = (0..bl.lattice().len())
        .map(|e| {
            if bl.contains(e) {
                Some(bl.lattice().label(e).to_string())
            } else {
                None
            }
        })
        .collect();
    let mut pieces = Vec::new();
    normalize(
        BuildItem {
            bl: bl.clone(),
            omega: omega.clone(),
            vlabel,
        },
        &mut pieces,
    )?;
    decompose_pieces(pieces)
}

/// Certificate for `N(L, G)` with the default admissible map.
pub fn vertex_decomposition_default(bl: &BuiltLattice) -> Result<VdCert, DecompError> {
    vertex_decomposition(bl, &default_admissible_map(bl.lattice()))
}

fn decompose_pieces(pieces: Vec<Piece>) -> Result<VdCert, DecompError> {
    // turn built pieces whose complex is a single simplex into facets
    let mut pieces: Vec<Piece> = pieces
        .into_iter()
        .filter_map(|p| match p {
            Piece::Built(item) => {
                let verts = item.bl.nested_vertices();
                if is_nested(&item.bl, &verts) {
                    if verts.is_empty() {
                        None
                    } else {
                        Some(Piece::Facet(
                            verts.iter().map(|&v| item.label_of(v)).collect(),
                        ))
                    }
                } else {
                    Some(Piece::Built(item))
                }
            }
            Piece::Facet(f) if f.is_empty() => None,
            p => Some(p),
        })
        .collect();
    let Some(pos) = pieces.iter().position(|p| matches!(p, Piece::Built(_))) else {
        return Ok(VdCert::Simplex);
    };
    // the complex this node decomposes, for certificate binding
    let here = complex_of(&pieces).canonical_hash();
    let Piece::Built(item) = pieces.remove(pos) else {
        unreachable!()
    };
    let rest = pieces;
    let l = item.bl.lattice();
    let g_star = item
        .omega
        .argmax()
        .expect("rank ≥ 1 lattices have irreducibles");
    if g_star == l.top() {
        // 1̂ is join-irreducible: N(L, G) is the cone complex of the
        // restriction to the unique coatom; rewrite without shedding.
        let f = l.covered_by(l.top())[0];
        let (rbl, emb) = item.bl.restrict(f);
        let omega = restrict_map(&item.bl, &item.omega, rbl.lattice(), &emb);
        let vlabel: Vec<Option<String>> = emb.iter().map(|&old| item.vlabel[old].clone()).collect();
        let sub = BuildItem {
            bl: rbl,
            omega,
            vlabel,
        };
        let apexes: Vec<String> = sub.bl.max_g().iter().map(|&g| sub.label_of(g)).collect();
        let mut new_pieces = rest;
        if !apexes.is_empty() {
            new_pieces.push(Piece::Facet(apexes));
        }
        normalize(sub, &mut new_pieces)?;
        return decompose_pieces(new_pieces);
    }

    let vertex = item.label_of(g_star);

    // deletion branch: N(L ∖ (g*), G ∖ g*)
    let (dbl, demb) = item.bl.delete_ideal(g_star)?;
    let old_rank = l
        .rank_function()
        .map_err(|e| DecompError::NotGraded(e.to_string()))?;
    let new_rank = dbl
        .lattice()
        .rank_function()
        .map_err(|e| DecompError::NotGraded(e.to_string()))?;
    if new_rank.top_rank() != old_rank.top_rank() {
        return Err(DecompError::NotGraded(
            "ideal deletion changed the rank".to_string(),
        ));
    }
    let domega = deletion_map(&item.bl, &item.omega, dbl.lattice(), &demb)?;
    let dvlabel: Vec<Option<String>> = demb.iter().map(|&old| item.vlabel[old].clone()).collect();
    let mut delete_pieces: Vec<Piece> = Vec::new();
    normalize(
        BuildItem {
            bl: dbl,
            omega: domega,
            vlabel: dvlabel,
        },
        &mut delete_pieces,
    )?;

    // link branch: N(L^{g*}, G^{g*}) ⋆ N(L_{g*}, G_{g*})
    let (rbl, remb) = item.bl.restrict(g_star);
    let romega = restrict_map(&item.bl, &item.omega, rbl.lattice(), &remb);
    let rvlabel: Vec<Option<String>> = remb.iter().map(|&old| item.vlabel[old].clone()).collect();
    let (cbl, cemb) = item.bl.contract(g_star);
    let comega = contraction_map(&item.bl, &item.omega, cbl.lattice(), &cemb, g_star)?;
    let mut cvlabel: Vec<Option<String>> = vec![None; cbl.lattice().len()];
    for x in 0..cbl.lattice().len() {
        if cbl.contains(x) {
            let q = quotient(&item.bl, g_star, cemb[x])?;
            cvlabel[x] = item.vlabel[q].clone();
        }
    }
    let mut link_pieces: Vec<Piece> = Vec::new();
    normalize(
        BuildItem {
            bl: rbl,
            omega: romega,
            vlabel: rvlabel,
        },
        &mut link_pieces,
    )?;
    normalize(
        BuildItem {
            bl: cbl,
            omega: comega,
            vlabel: cvlabel,
        },
        &mut link_pieces,
    )?;

    let mut delete_all = delete_pieces;
    let mut link_all = link_pieces;
    for p in rest {
        match &p {
            Piece::Built(b) => {
                delete_all.push(Piece::Built(Box::new(BuildItem {
                    bl: b.bl.clone(),
                    omega: b.omega.clone(),
                    vlabel: b.vlabel.clone(),
                })));
                link_all.push(p);
            }
            Piece::Facet(f) => {
                delete_all.push(Piece::Facet(f.clone()));
                link_all.push(p);
            }
        }
    }

    Ok(VdCert::Shed {
        hash: here,
        vertex,
        delete: Box::new(decompose_pieces(delete_all)?),
        link: Box::new(decompose_pieces(link_all)?),
    })
}

/// Re-check a certificate against a complex: purity, the shedding property,
/// dimension bookkeeping, leaf simplex claims, and hash binding.
pub fn verify_vd(complex: &SimplicialComplex, cert: &VdCert) -> Result<(), VdFailure> {
    fn go(c: &SimplicialComplex, cert: &VdCert, path: &str) -> Result<(), VdFailure> {
        let fail = |reason: &str| {
            Err(VdFailure {
                path: path.to_string(),
                reason: reason.to_string(),
            })
        };
        match cert {
            VdCert::Simplex => {
                if c.is_simplex() {
                    Ok(())
                } else {
                    fail("leaf complex is not a simplex")
                }
            }
            VdCert::Shed {
                hash,
                vertex,
                delete,
                link,
            } => {
                if !hash.is_empty() && *hash != c.canonical_hash() {
                    return fail("complex hash does not match the certificate");
                }
                if !c.is_pure() {
                    return fail("complex is not pure");
                }
                let Some(v) = c.vertices().into_iter().find(|&v| c.label(v) == vertex) else {
                    return fail("shedding vertex is not a vertex of the complex");
                };
                let del = c.delete_vertex(v);
                for f in del.facets() {
                    if !c.facets().contains(f) {
                        return fail("deletion has a facet that is not a facet of the complex");
                    }
                }
                if del.dim() != c.dim() {
                    return fail("deletion changed the dimension");
                }
                let lk = c.link(&[v]).map_err(|_| VdFailure {
                    path: path.to_string(),
                    reason: "vertex not a face".to_string(),
                })?;
                if lk.dim() != c.dim() - 1 {
                    return fail("link has unexpected dimension");
                }
                go(&del, delete, &format!("{path}/delete"))?;
                go(&lk, link, &format!("{path}/link"))
            }
        }
    }
    go(complex, cert, "root")
}

const BRUTE_FORCE_VERTEX_LIMIT: usize = 14;

/// Exhaustive vertex-decomposability oracle with memoization on canonical
/// facet lists.
pub fn brute_force_vd(complex: &SimplicialComplex) -> Result<bool, DecompError> {
    let n = complex.vertices().len();
    if n > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(DecompError::SizeLimit(n, BRUTE_FORCE_VERTEX_LIMIT));
    }
    let mut memo: HashMap<Vec<Vec<String>>, bool> = HashMap::new();
    fn go(c: &SimplicialComplex, memo: &mut HashMap<Vec<Vec<String>>, bool>) -> bool {
        let key = c.canonical_form();
        if let Some(&b) = memo.get(&key) {
            return b;
        }
        let res = if !c.is_pure() {
            false
        } else if c.is_simplex() {
            true
        } else {
            c.vertices().into_iter().any(|v| {
                let del = c.delete_vertex(v);
                del.facets().iter().all(|f| c.facets().contains(f))
                    && go(&del, memo)
                    && go(&c.link(&[v]).expect("vertex is a face"), memo)
            })
        };
        memo.insert(key, res);
        res
    }
    Ok(go(complex, &mut memo))
}
