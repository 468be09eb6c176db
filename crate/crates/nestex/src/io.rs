//! JSON wire formats: lattices as label/cover lists, matroids as named
//! bases, graphs, complexes as vertex/facet tables, admissible maps, and the
//! two certificate kinds.

use crate::building::{
    augmented_built_lattice, maximal_building_set, minimal_building_set, validate_building_set,
    BuiltLattice,
};
use crate::ced::{Ear, EarDecomposition};
use crate::complex::SimplicialComplex;
use crate::decomp::VdCert;
use crate::labeling::AdmissibleMap;
use crate::matroid::{GeometricLattice, Matroid};
use crate::poset::{Elem, Lattice, Poset};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    File(#[from] std::io::Error),
    #[error("bad input: {0}")]
    BadInput(String),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LatticeJson {
    pub labels: Vec<String>,
    pub covers: Vec<(usize, usize)>,
}

impl LatticeJson {
    pub fn of(l: &Lattice) -> LatticeJson {
        LatticeJson {
            labels: l.poset().labels().to_vec(),
            covers: l.poset().covers().to_vec(),
        }
    }

    pub fn build(&self) -> Result<Lattice, IoError> {
        let poset = Poset::from_covers(self.labels.clone(), &self.covers)
            .map_err(|e| IoError::BadInput(e.to_string()))?;
        Lattice::from_poset(poset).map_err(|e| IoError::BadInput(e.to_string()))
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatroidJson {
    pub ground: Vec<String>,
    pub bases: Vec<Vec<String>>,
}

impl MatroidJson {
    pub fn of(m: &Matroid) -> MatroidJson {
        let names = |mask: u64| {
            (0..m.ground_size())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| m.ground()[i].clone())
                .collect()
        };
        MatroidJson {
            ground: m.ground().to_vec(),
            bases: m.bases().iter().map(|&b| names(b)).collect(),
        }
    }

    pub fn build(&self) -> Result<Matroid, IoError> {
        Matroid::from_named_bases(self.ground.clone(), &self.bases)
            .map_err(|e| IoError::BadInput(e.to_string()))
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphJson {
    pub fn build(&self) -> Result<Matroid, IoError> {
        Matroid::graphic(&self.vertices, &self.edges).map_err(|e| IoError::BadInput(e.to_string()))
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexJson {
    pub fn of(c: &SimplicialComplex) -> ComplexJson {
        ComplexJson {
            vertices: c.labels().to_vec(),
            facets: c.facets().to_vec(),
        }
    }

    pub fn build(&self) -> Result<SimplicialComplex, IoError> {
        for f in &self.facets {
            for &v in f {
                if v as usize >= self.vertices.len() {
                    return Err(IoError::BadInput(format!("vertex id {v} out of range")));
                }
            }
        }
        Ok(SimplicialComplex::of_faces(
            self.vertices.clone(),
            self.facets.clone(),
        ))
    }
}

/// ω as a map from element label to weight.
pub type OmegaJson = BTreeMap<String, u64>;

pub fn omega_from_json(l: &Lattice, json: &OmegaJson) -> Result<AdmissibleMap, IoError> {
    let mut assignments: Vec<(Elem, u64)> = Vec::new();
    for (label, &value) in json {
        let e = (0..l.len())
            .find(|&e| l.label(e) == label)
            .ok_or_else(|| IoError::BadInput(format!("unknown element label {label:?}")))?;
        assignments.push((e, value));
    }
    AdmissibleMap::new(l, &assignments).map_err(|e| IoError::BadInput(e.to_string()))
}

/// Nested certificate tree; leaves are the string `"simplex"`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VdCertJson {
    Leaf(String),
    Node {
        vertex: u32,
        hash: String,
        delete: Box<VdCertJson>,
        link: Box<VdCertJson>,
    },
}

pub fn vd_cert_to_json(cert: &VdCert, labels: &[String]) -> Result<VdCertJson, IoError> {
    Ok(match cert {
        VdCert::Simplex => VdCertJson::Leaf("simplex".to_string()),
        VdCert::Shed {
            hash,
            vertex,
            delete,
            link,
        } => {
            let id = labels
                .iter()
                .position(|l| l == vertex)
                .ok_or_else(|| IoError::BadInput(format!("vertex label {vertex:?} not found")))?;
            VdCertJson::Node {
                vertex: id as u32,
                hash: hash.clone(),
                delete: Box::new(vd_cert_to_json(delete, labels)?),
                link: Box::new(vd_cert_to_json(link, labels)?),
            }
        }
    })
}

pub fn vd_cert_from_json(json: &VdCertJson, labels: &[String]) -> Result<VdCert, IoError> {
    Ok(match json {
        VdCertJson::Leaf(s) if s == "simplex" => VdCert::Simplex,
        VdCertJson::Leaf(s) => return Err(IoError::BadInput(format!("unknown leaf {s:?}"))),
        VdCertJson::Node {
            vertex,
            hash,
            delete,
            link,
        } => {
            let label = labels
                .get(*vertex as usize)
                .ok_or_else(|| IoError::BadInput(format!("vertex id {vertex} out of range")))?;
            VdCert::Shed {
                hash: hash.clone(),
                vertex: label.clone(),
                delete: Box::new(vd_cert_from_json(delete, labels)?),
                link: Box::new(vd_cert_from_json(link, labels)?),
            }
        }
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EarJson {
    pub basis: Vec<String>,
    pub sigma_facets: Vec<Vec<u32>>,
    pub delta_facets: Vec<Vec<u32>>,
    pub shelling: Vec<usize>,
    pub boundary: Vec<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EarsJson {
    pub order: Vec<String>,
    pub ears: Vec<EarJson>,
}

pub fn ears_to_json(dec: &EarDecomposition, l: &Lattice) -> EarsJson {
    EarsJson {
        order: dec.order.iter().map(|&a| l.label(a).to_string()).collect(),
        ears: dec
            .ears
            .iter()
            .map(|e| EarJson {
                basis: e.basis.iter().map(|&a| l.label(a).to_string()).collect(),
                sigma_facets: e.sigma_facets.clone(),
                delta_facets: e.delta_facets.clone(),
                shelling: e.shelling.clone(),
                boundary: e.boundary.clone(),
            })
            .collect(),
    }
}

pub fn ears_from_json(json: &EarsJson, l: &Lattice) -> Result<EarDecomposition, IoError> {
    let elem_of = |label: &str| -> Result<Elem, IoError> {
        (0..l.len())
            .find(|&e| l.label(e) == label)
            .ok_or_else(|| IoError::BadInput(format!("unknown atom label {label:?}")))
    };
    let order = json
        .order
        .iter()
        .map(|s| elem_of(s))
        .collect::<Result<Vec<_>, _>>()?;
    let ears = json
        .ears
        .iter()
        .map(|e| {
            Ok(Ear {
                basis: e
                    .basis
                    .iter()
                    .map(|s| elem_of(s))
                    .collect::<Result<Vec<_>, IoError>>()?,
                sigma_facets: e.sigma_facets.clone(),
                delta_facets: e.delta_facets.clone(),
                shelling: e.shelling.clone(),
                boundary: e.boundary.clone(),
            })
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(EarDecomposition { order, ears })
}

/// Building set selector: `min`, `max`, `aug` (matroid inputs only), or an
/// explicit comma-separated list of element labels.
pub fn built_lattice_from_selector(
    lattice: Option<&Lattice>,
    matroid: Option<&Matroid>,
    selector: &str,
) -> Result<BuiltLattice, IoError> {
    match (selector, lattice, matroid) {
        ("aug", _, Some(m)) => {
            let aug = augmented_built_lattice(m).map_err(|e| IoError::BadInput(e.to_string()))?;
            Ok(aug.built)
        }
        ("aug", _, None) => Err(IoError::BadInput(
            "selector 'aug' needs a matroid input".to_string(),
        )),
        (_, Some(l), _) => built_on_lattice(l, selector),
        (_, None, Some(m)) => {
            let gl = GeometricLattice::lattice_of_flats(m);
            built_on_lattice(&gl.lattice, selector)
        }
        (_, None, None) => Err(IoError::BadInput("no lattice or matroid given".to_string())),
    }
}

fn built_on_lattice(l: &Lattice, selector: &str) -> Result<BuiltLattice, IoError> {
    match selector {
        "min" => Ok(minimal_building_set(l)),
        "max" => Ok(maximal_building_set(l)),
        list => {
            let mut gset = Vec::new();
            for label in list.split(',') {
                let label = label.trim();
                let e = (0..l.len())
                    .find(|&e| l.label(e) == label)
                    .ok_or_else(|| IoError::BadInput(format!("unknown element label {label:?}")))?;
                gset.push(e);
            }
            validate_building_set(l, &gset).map_err(|e| IoError::BadInput(e.to_string()))
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &std::path::Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<(), IoError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
