//! The desk-scale verification corpus and the cross-module invariant
//! battery run over it.

use crate::building::{
    augmented_built_lattice, maximal_building_set, minimal_building_set, validate_building_set,
    BuiltLattice,
};
use crate::ced::{convex_ear_decomposition, facet_label_set, lattice_nbc_bases, verify_ced};
use crate::complex::SimplicialComplex;
use crate::decomp::{brute_force_vd, verify_vd, vertex_decomposition};
use crate::labeling::{default_admissible_map, descent_h_polynomial, is_admissible, AdmissibleMap};
use crate::matroid::{GeometricLattice, Matroid};
use crate::nested::{
    compose, cone_nested_complex, decompose, is_nested, local_intervals, nested_complex,
    nested_complex_with_pool, nested_facets,
};
use crate::partition::PartitionLattice;
use crate::poset::{boolean_lattice, Elem, Lattice};
use crate::vectors::{
    complementary_vector, f_from_h, g_vector, h_from_f, is_m_vector, is_strongly_flawless, IntPoly,
};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown corpus {0:?}")]
    UnknownCorpus(String),
}

/// One corpus entry: a validated built lattice with its default admissible
/// map and the natural atom order.
pub struct Instance {
    pub key: String,
    pub bl: BuiltLattice,
    pub omega: AdmissibleMap,
    pub atom_order: Vec<Elem>,
}

impl Instance {
    fn new(key: String, bl: BuiltLattice) -> Instance {
        let omega = default_admissible_map(bl.lattice());
        let atom_order = bl.lattice().atoms();
        Instance {
            key,
            bl,
            omega,
            atom_order,
        }
    }
}

/// All building sets of a lattice: supersets of the join-irreducibles that
/// pass validation.
pub fn all_building_sets(l: &Lattice) -> Vec<Vec<Elem>> {
    let irr = l.join_irreducibles();
    let optional: Vec<Elem> = (0..l.len())
        .filter(|&e| e != l.bottom() && !irr.contains(&e))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << optional.len() {
        let mut g = irr.clone();
        for (i, &e) in optional.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.push(e);
            }
        }
        g.sort_unstable();
        if validate_building_set(l, &g).is_ok() {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn gset_key(l: &Lattice, g: &[Elem]) -> String {
    g.iter()
        .map(|&e| l.label(e).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The named verification corpus. `small` holds every Boolean lattice up to
/// rank 4 with each of its building sets, partition lattices Π_4 and Π_5
/// with the minimal and maximal building sets, small uniform flat lattices,
/// the flats of K_4, and the augmented lattices of U_{1,2} and U_{2,3}.
pub fn corpus(name: &str) -> Result<Vec<Instance>, CorpusError> {
    if name != "small" {
        return Err(CorpusError::UnknownCorpus(name.to_string()));
    }
    let mut out = Vec::new();
    for n in 2..=4usize {
        let l = boolean_lattice(n);
        for g in all_building_sets(&l) {
            let key = format!("B{n}/g={}", gset_key(&l, &g));
            let bl = validate_building_set(&l, &g).expect("filtered valid");
            out.push(Instance::new(key, bl));
        }
    }
    for n in 4..=5usize {
        let pl = PartitionLattice::new(&(1..=n as i64).collect::<Vec<_>>());
        out.push(Instance::new(
            format!("Pi{n}/min"),
            minimal_building_set(&pl.lattice),
        ));
        out.push(Instance::new(
            format!("Pi{n}/max"),
            maximal_building_set(&pl.lattice),
        ));
    }
    for (r, n) in [(2usize, 3usize), (2, 4), (3, 4), (3, 5)] {
        let gl = GeometricLattice::lattice_of_flats(&Matroid::uniform(r, n));
        out.push(Instance::new(
            format!("U{r}{n}/min"),
            minimal_building_set(&gl.lattice),
        ));
        out.push(Instance::new(
            format!("U{r}{n}/max"),
            maximal_building_set(&gl.lattice),
        ));
    }
    {
        let vs: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((vs[i].clone(), vs[j].clone()));
            }
        }
        let k4 = Matroid::graphic(&vs, &edges).expect("K4 is a graph");
        let gl = GeometricLattice::lattice_of_flats(&k4);
        out.push(Instance::new(
            "K4/min".to_string(),
            minimal_building_set(&gl.lattice),
        ));
        out.push(Instance::new(
            "K4/max".to_string(),
            maximal_building_set(&gl.lattice),
        ));
    }
    for (key, m) in [
        ("aug-U12", Matroid::uniform(1, 2)),
        ("aug-U23", Matroid::uniform(2, 3)),
    ] {
        let aug = augmented_built_lattice(&m).expect("augmented set validates");
        out.push(Instance::new(key.to_string(), aug.built));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub instance: String,
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(instance: &str, check: &str) -> CheckResult {
        CheckResult {
            instance: instance.to_string(),
            check: check.to_string(),
            pass: true,
            detail: String::new(),
        }
    }

    fn fail(instance: &str, check: &str, detail: String) -> CheckResult {
        CheckResult {
            instance: instance.to_string(),
            check: check.to_string(),
            pass: false,
            detail,
        }
    }
}

fn push(results: &mut Vec<CheckResult>, instance: &str, check: &str, outcome: Result<(), String>) {
    results.push(match outcome {
        Ok(()) => CheckResult::ok(instance, check),
        Err(detail) => CheckResult::fail(instance, check, detail),
    });
}

/// The h-polynomial of a complex via the binomial transform.
pub fn h_polynomial(c: &SimplicialComplex) -> IntPoly {
    IntPoly::new(h_from_f(&c.f_vector()))
}

/// Run every invariant of the module contracts over one instance.
pub fn verify_instance(inst: &Instance) -> Vec<CheckResult> {
    let mut res = Vec::new();
    let key = inst.key.as_str();
    let bl = &inst.bl;
    let l = bl.lattice();
    let rank = match l.rank_function() {
        Ok(rk) => rk,
        Err(e) => {
            res.push(CheckResult::fail(key, "graded", e.to_string()));
            return res;
        }
    };
    let n = rank.top_rank();
    let k = bl.max_g().len();
    let (complex, pool) = nested_complex_with_pool(bl);

    // purity and dimension (n − 2 for irreducible; n − k − 1 in general)
    push(&mut res, key, "purity", {
        let want = n as i64 - k as i64 - 1;
        if complex.is_pure() && complex.dim() == want {
            Ok(())
        } else {
            Err(format!(
                "pure={} dim={} want={}",
                complex.is_pure(),
                complex.dim(),
                want
            ))
        }
    });

    // default map admissibility (Stanley)
    push(
        &mut res,
        key,
        "admissible",
        is_admissible(l, &inst.omega)
            .map_err(|w| format!("witness interval ({}, {})", w.lower, w.upper)),
    );

    // the descent h-polynomial must equal the face-count one
    let h = h_polynomial(&complex);
    push(&mut res, key, "descent-h", {
        match descent_h_polynomial(bl, &inst.omega) {
            Ok(hd) if hd == h => Ok(()),
            Ok(hd) => Err(format!(
                "descent {:?} vs face {:?}",
                hd.coeffs(),
                h.coeffs()
            )),
            Err(e) => Err(e.to_string()),
        }
    });

    // binomial transform roundtrip
    push(&mut res, key, "f-h-roundtrip", {
        let f = complex.f_vector();
        if f_from_h(&h_from_f(&f)) == f {
            Ok(())
        } else {
            Err("transform is not involutive".to_string())
        }
    });

    // numerical consequences of the convex ear decomposition, on the full
    // (d+1)-entry h-vector
    let hv = h_from_f(&complex.f_vector());
    push(&mut res, key, "h-strongly-flawless", {
        match is_strongly_flawless(&hv) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("h = {hv:?}")),
            Err(e) => Err(e.to_string()),
        }
    });
    push(&mut res, key, "g-m-vector", {
        match is_m_vector(&g_vector(&hv)) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("g = {:?}", g_vector(&hv))),
            Err(e) => Err(e.to_string()),
        }
    });
    push(&mut res, key, "complementary-nonneg", {
        let c = complementary_vector(&hv);
        if c.iter().all(|&x| x >= 0) {
            Ok(())
        } else {
            Err(format!("c = {c:?}"))
        }
    });

    // vertex decomposition: certificate construction and verification
    push(&mut res, key, "vd-certified", {
        match vertex_decomposition(bl, &inst.omega) {
            Ok(cert) => verify_vd(&complex, &cert).map_err(|e| e.to_string()),
            Err(e) => Err(e.to_string()),
        }
    });
    if complex.vertices().len() <= 12 {
        push(&mut res, key, "vd-brute-force", {
            match brute_force_vd(&complex) {
                Ok(true) => Ok(()),
                Ok(false) => Err("oracle says not vertex decomposable".to_string()),
                Err(e) => Err(e.to_string()),
            }
        });
    }

    // convex ears with the natural atom order
    push(&mut res, key, "ced-certified", {
        match convex_ear_decomposition(bl, &inst.atom_order) {
            Ok(dec) => verify_ced(&complex, &dec).map_err(|e| e.to_string()),
            Err(e) => Err(e.to_string()),
        }
    });
    push(&mut res, key, "facet-labels-nbc", {
        let nbc = lattice_nbc_bases(l, &inst.atom_order);
        let mut bad = None;
        for facet in nested_facets(bl) {
            match facet_label_set(bl, &inst.atom_order, &facet) {
                Ok(set) => {
                    if !nbc.contains(&set) {
                        bad = Some(format!("λ({facet:?}) = {set:?} is not an nbc-basis"));
                        break;
                    }
                }
                Err(e) => {
                    bad = Some(e.to_string());
                    break;
                }
            }
        }
        bad.map_or(Ok(()), Err)
    });
    push(&mut res, key, "nbc-moebius", {
        let nbc = lattice_nbc_bases(l, &inst.atom_order);
        let mu = moebius_bottom(l);
        let want = mu[l.top()].unsigned_abs() as usize;
        if nbc.len() == want {
            Ok(())
        } else {
            Err(format!("{} nbc-bases vs |μ| = {}", nbc.len(), want))
        }
    });

    // deleting a building ideal deletes the vertex, at both complex levels
    push(&mut res, key, "deletion-identity", {
        let mut bad = None;
        for g in l.join_irreducibles() {
            if !bl.contains(g) {
                continue;
            }
            let (dbl, _) = match bl.delete_ideal(g) {
                Ok(x) => x,
                Err(e) => {
                    bad = Some(e.to_string());
                    break;
                }
            };
            // cone level for every generator
            let lhs = cone_nested_complex(bl).delete_vertex(
                bl.cone_vertices()
                    .iter()
                    .position(|&x| x == g)
                    .expect("generator is a cone vertex") as u32,
            );
            if lhs.canonical_form() != cone_nested_complex(&dbl).canonical_form() {
                bad = Some(format!("cone deletion differs at {}", l.label(g)));
                break;
            }
            // restricted level for vertices of N
            if let Some(vid) = pool.iter().position(|&x| x == g) {
                let lhs = complex.delete_vertex(vid as u32);
                if lhs.canonical_form() != nested_complex(&dbl).canonical_form() {
                    bad = Some(format!("deletion differs at {}", l.label(g)));
                    break;
                }
            }
        }
        bad.map_or(Ok(()), Err)
    });

    // the cone complex is the join of cones over the restrictions at
    // the maximal elements of G
    push(&mut res, key, "cone-identity", {
        let mut acc: Option<SimplicialComplex> = None;
        for &g in bl.max_g() {
            let (rbl, _) = bl.restrict(g);
            let coned = nested_complex(&rbl).cone(l.label(g));
            acc = Some(match acc {
                None => coned,
                Some(prev) => match prev.join(&coned) {
                    Ok(j) => j,
                    Err(e) => {
                        return {
                            res.push(CheckResult::fail(key, "cone-identity", e.to_string()));
                            res
                        }
                    }
                },
            });
        }
        let joined = acc.expect("at least one maximal element");
        if joined.canonical_form() == cone_nested_complex(bl).canonical_form() {
            Ok(())
        } else {
            Err("join of cones differs from the cone complex".to_string())
        }
    });

    // links decompose as joins of local nested complexes
    if bl.is_irreducible() {
        push(
            &mut res,
            key,
            "link-identity",
            link_identity(bl, &complex, &pool),
        );
    }

    res
}

/// Facet-exact check of the link decomposition for every face.
fn link_identity(
    bl: &BuiltLattice,
    complex: &SimplicialComplex,
    pool: &[Elem],
) -> Result<(), String> {
    for face in complex.all_faces() {
        let s: Vec<Elem> = face.iter().map(|&v| pool[v as usize]).collect();
        let locals = local_intervals(bl, &s);
        // facets of each local nested set complex, in ambient local elements
        let mut local_facets: Vec<Vec<Vec<Elem>>> = Vec::new();
        for li in &locals {
            let facets = nested_facets(&li.built)
                .into_iter()
                .map(|f| f.iter().map(|&x| li.embed[x]).collect::<Vec<Elem>>())
                .collect::<Vec<_>>();
            local_facets.push(facets);
        }
        // all combinations compose to the facets containing the face
        let mut composed: Vec<Vec<Elem>> = Vec::new();
        let mut idx = vec![0usize; locals.len()];
        loop {
            let assignment: Vec<(usize, Vec<Elem>)> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| (i, local_facets[i][j].clone()))
                .collect();
            match compose(bl, &s, &locals, &assignment) {
                Ok(t) => composed.push(t),
                Err(e) => return Err(format!("compose failed on {s:?}: {e}")),
            }
            // roundtrip through decompose
            let t = composed.last().unwrap();
            match decompose(bl, &s, &locals, t) {
                Ok(parts) => {
                    let back = compose(bl, &s, &locals, &parts)
                        .map_err(|e| format!("recompose failed: {e}"))?;
                    if &back != t {
                        return Err(format!("decompose is not inverse on {t:?}"));
                    }
                }
                Err(e) => return Err(format!("decompose failed: {e}")),
            }
            // odometer
            let mut carry = locals.len();
            for i in (0..locals.len()).rev() {
                idx[i] += 1;
                if idx[i] < local_facets[i].len() {
                    carry = i;
                    break;
                }
                idx[i] = 0;
            }
            if carry == locals.len() {
                break;
            }
        }
        composed.sort();
        composed.dedup();
        let mut expected: Vec<Vec<Elem>> = complex
            .facets()
            .iter()
            .filter(|f| face.iter().all(|v| f.contains(v)))
            .map(|f| {
                let mut t: Vec<Elem> = f.iter().map(|&v| pool[v as usize]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        expected.sort();
        if composed != expected {
            return Err(format!(
                "link of {s:?}: {} composed facets vs {} expected",
                composed.len(),
                expected.len()
            ));
        }
        // every composed set must be nested (sanity on the composition route)
        if composed.iter().any(|t| !is_nested(bl, t)) {
            return Err(format!("composition produced a non-nested set over {s:?}"));
        }
    }
    Ok(())
}

/// Möbius function values μ(0̂, x) by the defining recursion.
pub fn moebius_bottom(l: &Lattice) -> Vec<i64> {
    let mut mu = vec![0i64; l.len()];
    for &x in l.poset().linear_extension() {
        if x == l.bottom() {
            mu[x] = 1;
        } else {
            let below: i64 = l
                .poset()
                .down_set(x)
                .ones()
                .filter(|&y| y != x)
                .map(|y| mu[y])
                .sum();
            mu[x] = -below;
        }
    }
    mu
}

/// Run the battery over a corpus; results sorted by (instance, check).
pub fn verify_corpus(name: &str) -> Result<Vec<CheckResult>, CorpusError> {
    let instances = corpus(name)?;
    let mut results: Vec<CheckResult> = instances
        .par_iter()
        .flat_map_iter(verify_instance)
        .collect();
    results.sort_by(|a, b| (&a.instance, &a.check).cmp(&(&b.instance, &b.check)));
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_has_twelve_building_sets() {
        let l = boolean_lattice(3);
        let sets = all_building_sets(&l);
        // atoms always present; the four optional elements are 12, 13, 23, 123.
        // By hand: any single pair works; two or three pairs require the top;
        // with the top, any pair family works. That gives
        // {}, {12}, {13}, {23}, {123}, {12,123}, {13,123}, {23,123},
        // {12,13,123}, {12,23,123}, {13,23,123}, {12,13,23,123}.
        assert_eq!(sets.len(), 12);
        assert!(sets.contains(&vec![0b001, 0b010, 0b011, 0b100, 0b110, 0b111]));
        assert!(sets.contains(&vec![0b001, 0b010, 0b100]));
        assert!(!sets.contains(&vec![0b001, 0b010, 0b011, 0b100, 0b101]));
    }

    #[test]
    fn corpus_contains_expected_instances() {
        let c = corpus("small").unwrap();
        let keys: Vec<&str> = c.iter().map(|i| i.key.as_str()).collect();
        assert!(keys.contains(&"Pi4/min"));
        assert!(keys.contains(&"U34/max"));
        assert!(keys.contains(&"aug-U23"));
        assert!(keys.iter().any(|k| k.starts_with("B3/g=")));
        assert!(corpus("huge").is_err());
    }

    #[test]
    fn verify_single_small_instance() {
        let l = boolean_lattice(3);
        let bl = validate_building_set(&l, &[0b001, 0b010, 0b100, 0b011, 0b110, 0b111]).unwrap();
        let inst = Instance::new("B3/test".into(), bl);
        let results = verify_instance(&inst);
        for r in &results {
            assert!(r.pass, "{}: {} failed: {}", r.instance, r.check, r.detail);
        }
    }
}
