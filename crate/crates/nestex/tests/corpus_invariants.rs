//! Cross-module invariants over the verification corpus, plus property
//! tests for the algebraic identities.

use nestex::building::validate_building_set;
use nestex::complex::SimplicialComplex;
use nestex::corpus::{corpus, moebius_bottom};
use nestex::labeling::{is_admissible, label_compatibility_check, stirling_atom_order};
use nestex::matroid::{GeometricLattice, Matroid};
use nestex::nested::{decompose, local_intervals, nested_facets};
use nestex::partition::PartitionLattice;
use nestex::stirling::{is_stirling, stirling_permutations};
use nestex::vectors::{f_from_h, h_from_f};
use proptest::prelude::*;

#[test]
fn corpus_battery_is_green() {
    let results = nestex::corpus::verify_corpus("small").expect("small corpus");
    let failures: Vec<_> = results.iter().filter(|r| !r.pass).collect();
    assert!(
        failures.is_empty(),
        "{} failures, first: {} {}: {}",
        failures.len(),
        failures[0].instance,
        failures[0].check,
        failures[0].detail
    );
}

#[test]
fn restrictions_and_contractions_validate() {
    for inst in corpus("small").expect("small corpus") {
        let l = inst.bl.lattice();
        for f in 0..l.len() {
            if f != l.bottom() {
                let (r, _) = inst.bl.restrict(f);
                assert!(
                    validate_building_set(r.lattice(), r.gset()).is_ok(),
                    "{}: restriction at {} fails validation",
                    inst.key,
                    l.label(f)
                );
            }
            let (c, _) = inst.bl.contract(f);
            assert!(
                validate_building_set(c.lattice(), c.gset()).is_ok(),
                "{}: contraction at {} fails validation",
                inst.key,
                l.label(f)
            );
        }
    }
}

#[test]
fn deleted_ideals_validate() {
    for inst in corpus("small").expect("small corpus") {
        let l = inst.bl.lattice();
        for g in l.join_irreducibles() {
            if !inst.bl.contains(g) {
                continue;
            }
            let (d, _) = inst.bl.delete_ideal(g).expect("join-irreducible");
            assert!(
                validate_building_set(d.lattice(), d.gset()).is_ok(),
                "{}: deletion of ({}) fails validation",
                inst.key,
                l.label(g)
            );
        }
    }
}

#[test]
fn label_compatibility_across_corpus() {
    // Composition preserves rank-one local-interval labels (the content of
    // the descent bookkeeping), checked exhaustively on facet decompositions.
    for inst in corpus("small").expect("small corpus") {
        if !inst.bl.is_irreducible() {
            continue;
        }
        for facet in nested_facets(&inst.bl) {
            for &v in &facet {
                let s = vec![v];
                let locals = local_intervals(&inst.bl, &s);
                let parts = decompose(&inst.bl, &s, &locals, &facet).expect("facet extends s");
                for (idx, members) in &parts {
                    if members.is_empty() {
                        continue;
                    }
                    let ok = label_compatibility_check(
                        &inst.bl,
                        &inst.omega,
                        &s,
                        &locals,
                        *idx,
                        members,
                    )
                    .expect("composable");
                    assert!(ok, "{}: labels move under composition", inst.key);
                }
            }
        }
    }
}

#[test]
fn shelling_restriction_counts_reproduce_ear_h_vectors() {
    // On any accepted shelling order, counting facets by restriction size
    // gives the same h-vector as the binomial transform of the f-vector.
    use nestex::ced::{convex_ear_decomposition, shelling_check, shelling_restriction_h};
    for inst in corpus("small").expect("small corpus") {
        let dec =
            convex_ear_decomposition(&inst.bl, &inst.atom_order).expect("corpus is geometric");
        for (i, ear) in dec.ears.iter().enumerate() {
            let ordered: Vec<Vec<u32>> = ear
                .shelling
                .iter()
                .map(|&k| ear.delta_facets[k].clone())
                .collect();
            if shelling_check(&ordered).is_err() {
                // the construction guarantees shellability for i ≥ 1 only
                assert_eq!(i, 0, "{}: ear {} order rejected", inst.key, i);
                continue;
            }
            let from_restrictions = shelling_restriction_h(&ordered);
            let labels: Vec<String> = (0..64).map(|v| format!("v{v}")).collect();
            let complex = SimplicialComplex::of_faces(labels, ordered);
            let mut from_faces = h_from_f(&complex.f_vector());
            from_faces.resize(from_restrictions.len(), 0);
            assert_eq!(
                from_restrictions, from_faces,
                "{}: ear {} restriction counts disagree",
                inst.key, i
            );
        }
    }
}

#[test]
fn stirling_order_is_admissible() {
    for n in 3..=5usize {
        let pl = PartitionLattice::new(&(1..=n as i64).collect::<Vec<_>>());
        let omega = stirling_atom_order(&pl);
        assert!(is_admissible(&pl.lattice, &omega).is_ok());
    }
}

#[test]
fn nbc_count_matches_moebius_for_matroids() {
    // |nbc| = |μ(0̂, 1̂)| of the lattice of flats, for any atom order
    for m in [
        Matroid::uniform(2, 4),
        Matroid::uniform(3, 4),
        Matroid::uniform(3, 5),
    ] {
        let gl = GeometricLattice::lattice_of_flats(&m);
        let order: Vec<usize> = (0..m.ground_size()).collect();
        let nbc = m.nbc_bases(&order);
        let mu = moebius_bottom(&gl.lattice);
        assert_eq!(
            nbc.len(),
            mu[gl.lattice.top()].unsigned_abs() as usize,
            "nbc count vs Möbius for {m:?}"
        );
        // the ◁-lexicographically first basis is always an nbc-basis
        let first = m
            .bases()
            .iter()
            .min_by_key(|&&b| {
                let mut v: Vec<usize> = (0..m.ground_size()).filter(|i| b >> i & 1 == 1).collect();
                v.sort_unstable();
                v
            })
            .copied()
            .unwrap();
        assert_eq!(nbc.first(), Some(&first));
    }
}

proptest! {
    #[test]
    fn binomial_transform_roundtrip(f in prop::collection::vec(-50i64..200, 1..9)) {
        let h = h_from_f(&f);
        prop_assert_eq!(f_from_h(&h), f);
    }

    #[test]
    fn join_f_polynomials_multiply(
        fa in prop::collection::vec(prop::collection::vec(0u32..4, 1..3), 1..4),
        fb in prop::collection::vec(prop::collection::vec(4u32..8, 1..3), 1..4),
    ) {
        let labels: Vec<String> = (0..8).map(|i| format!("v{i}")).collect();
        let a = SimplicialComplex::of_faces(labels.clone(), fa);
        let b = SimplicialComplex::of_faces(labels, fb);
        let j = a.join(&b).unwrap();
        // f-polynomial of a join is the product of f-polynomials
        let poly = |c: &SimplicialComplex| nestex::vectors::IntPoly::new(c.f_vector());
        prop_assert_eq!(poly(&j), poly(&a).mul(&poly(&b)));
    }

    #[test]
    fn stirling_insertion_is_closed(values in prop::collection::btree_set(1i64..30, 1..5)) {
        let values: Vec<i64> = values.into_iter().collect();
        let all = stirling_permutations(&values);
        let mut expected = 1usize;
        for k in 1..values.len() {
            expected *= 2 * k + 1;
        }
        prop_assert_eq!(all.len(), expected);
        for w in &all {
            prop_assert!(is_stirling(w));
        }
    }

    #[test]
    fn matroid_closure_is_a_closure_operator(
        r in 1usize..3, n in 3usize..6, seed in 0u64..256
    ) {
        let m = Matroid::uniform(r, n);
        let full = m.full_mask();
        let s = seed & full;
        let c = m.closure(s);
        prop_assert_eq!(c & s, s);
        prop_assert_eq!(m.closure(c), c);
        prop_assert_eq!(m.rank_of(c), m.rank_of(s));
    }
}

#[test]
fn descent_h_polynomial_is_map_independent() {
    // any injective admissible map gives the same descent generating
    // polynomial: it always equals the face-count h-polynomial
    use nestex::labeling::{descent_h_polynomial, AdmissibleMap};
    use nestex::nested::nested_complex;
    for inst in corpus("small").expect("small corpus") {
        if inst.bl.lattice().len() > 20 {
            continue; // a handful of small instances suffice here
        }
        let l = inst.bl.lattice();
        // reverse the default weights; still injective, still admissible on
        // geometric lattices
        let irr = l.join_irreducibles();
        let top = irr.len() as u64 + 1;
        let reversed: Vec<(usize, u64)> = irr
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, top - i as u64))
            .collect();
        let omega = AdmissibleMap::new(l, &reversed).unwrap();
        if nestex::labeling::is_admissible(l, &omega).is_err() {
            continue;
        }
        let h = nestex::corpus::h_polynomial(&nested_complex(&inst.bl));
        let hd = descent_h_polynomial(&inst.bl, &omega).expect("injective admissible");
        assert_eq!(h, hd, "{}: reversed map changes the polynomial", inst.key);
    }
}

#[test]
fn ced_verifies_under_reversed_atom_order() {
    use nestex::ced::{convex_ear_decomposition, verify_ced};
    use nestex::nested::nested_complex;
    for inst in corpus("small").expect("small corpus") {
        let mut order = inst.atom_order.clone();
        order.reverse();
        let dec =
            convex_ear_decomposition(&inst.bl, &order).expect("corpus instances are geometric");
        verify_ced(&nested_complex(&inst.bl), &dec)
            .unwrap_or_else(|e| panic!("{}: reversed order fails: {e}", inst.key));
    }
}
