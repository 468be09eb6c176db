//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All arithmetic is exact; every tolerance here is zero, and the stated
//! runtime budgets are enforced.

use nestex::building::{minimal_building_set, validate_building_set};
use nestex::ced::{convex_ear_decomposition, verify_ced};
use nestex::cli::bijection_check;
use nestex::corpus::{h_polynomial, verify_corpus, CheckResult};
use nestex::labeling::{descent_number, AdmissibleMap};
use nestex::matroid::{GeometricLattice, Matroid};
use nestex::nested::{cone_nested_complex, nested_complex, nested_facets};
use nestex::partition::PartitionLattice;
use nestex::poset::{boolean_lattice, Elem};
use nestex::stirling::{
    check_top_heavy, count_by_descents, second_eulerian, second_eulerian_by_enumeration,
};
use nestex::sturm::is_real_rooted;
use nestex::vectors::{h_from_f, Int};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

fn battery() -> &'static [CheckResult] {
    static RESULTS: OnceLock<Vec<CheckResult>> = OnceLock::new();
    RESULTS.get_or_init(|| verify_corpus("small").expect("small corpus exists"))
}

fn criterion<F: FnOnce() -> Result<(), String>>(id: usize, label: &str, budget: Duration, body: F) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(()) => println!("criterion {id} PASS ({elapsed:.2?}): {label}"),
        Err(e) => println!("criterion {id} FAIL ({elapsed:.2?}): {label}: {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {id} failed: {e}");
    }
    assert!(
        elapsed <= budget,
        "criterion {id} exceeded its runtime budget: {elapsed:.2?} > {budget:.2?}"
    );
}

/// Filter the corpus battery down to a set of checks and demand zero failures.
fn battery_subset(checks: &[&str]) -> Result<(), String> {
    let results = battery();
    let mut seen = 0usize;
    for r in results {
        if checks.contains(&r.check.as_str()) {
            seen += 1;
            if !r.pass {
                return Err(format!("{} {}: {}", r.instance, r.check, r.detail));
            }
        }
    }
    if seen == 0 {
        return Err(format!("no results for checks {checks:?}"));
    }
    Ok(())
}

#[test]
fn criterion_01_petersen_reproduction() {
    criterion(
        1,
        "N(Π_4, G_min) face vectors",
        Duration::from_secs(1),
        || {
            let pi4 = PartitionLattice::new(&[1, 2, 3, 4]);
            let bl = minimal_building_set(&pi4.lattice);
            let n = nested_complex(&bl);
            if n.f_vector() != vec![1, 10, 15] {
                return Err(format!("f = {:?}", n.f_vector()));
            }
            if h_from_f(&n.f_vector()) != vec![1, 8, 6] {
                return Err(format!("h = {:?}", h_from_f(&n.f_vector())));
            }
            let cone = cone_nested_complex(&bl);
            if cone.f_vector() != vec![1, 11, 25, 15] {
                return Err(format!("cone f = {:?}", cone.f_vector()));
            }
            // the h-vector of a cone keeps its trailing zero
            if h_from_f(&cone.f_vector()) != vec![1, 8, 6, 0] {
                return Err(format!("cone h = {:?}", h_from_f(&cone.f_vector())));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_02_worked_example_b3() {
    criterion(
        2,
        "the five maximal nested sets of (B_3, {1,2,3,12,23,123})",
        Duration::from_secs(1),
        || {
            let b3 = boolean_lattice(3);
            let bl = validate_building_set(&b3, &[0b001, 0b010, 0b100, 0b011, 0b110, 0b111])
                .map_err(|e| e.to_string())?;
            let omega = AdmissibleMap::new(&b3, &[(0b001, 1), (0b010, 2), (0b100, 3)])
                .map_err(|e| e.to_string())?;
            let mut facets = nested_facets(&bl);
            facets.sort();
            let expected: Vec<Vec<Elem>> = vec![
                vec![0b001, 0b011], // S_1 = {1, 12}
                vec![0b001, 0b100], // S_5 = {1, 3}
                vec![0b010, 0b011], // S_2 = {2, 12}
                vec![0b010, 0b110], // S_3 = {2, 23}
                vec![0b100, 0b110], // S_4 = {3, 23}
            ];
            if facets != expected {
                return Err(format!("facets = {facets:?}"));
            }
            let descent_of = |s: &[Elem]| descent_number(&bl, &omega, s).map_err(|e| e.to_string());
            let wanted = [
                (vec![0b001usize, 0b011usize], 0usize),
                (vec![0b010, 0b011], 1),
                (vec![0b010, 0b110], 1),
                (vec![0b100, 0b110], 2),
                (vec![0b001, 0b100], 1),
            ];
            for (s, want) in &wanted {
                let got = descent_of(s)?;
                if got != *want {
                    return Err(format!("des({s:?}) = {got}, want {want}"));
                }
            }
            let h = h_polynomial(&nested_complex(&bl));
            if h.coeffs() != [1, 3, 1] {
                return Err(format!("h = {:?}", h.coeffs()));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_03_second_eulerian_h_polynomials() {
    criterion(
        3,
        "h(N(Π_{n+1}, G_min)) = P_n for n = 1..5",
        Duration::from_secs(30),
        || {
            let table: [&[Int]; 5] = [
                &[1],
                &[1, 2],
                &[1, 8, 6],
                &[1, 22, 58, 24],
                &[1, 52, 328, 444, 120],
            ];
            for n in 1..=5usize {
                let p = second_eulerian(n);
                if p.coeffs() != table[n - 1] {
                    return Err(format!("P_{n} = {:?}", p.coeffs()));
                }
                let ground: Vec<i64> = (1..=n as i64 + 1).collect();
                let pl = PartitionLattice::new(&ground);
                let bl = minimal_building_set(&pl.lattice);
                let h = h_polynomial(&nested_complex(&bl));
                if h != p {
                    return Err(format!(
                        "h(N(Π_{}, G_min)) = {:?} but P_{n} = {:?}",
                        n + 1,
                        h.coeffs(),
                        p.coeffs()
                    ));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_04_descent_h_polynomial_suite() {
    // corpus construction is shared setup, not part of the timed work
    let instances = nestex::corpus::corpus("small").expect("small corpus exists");
    criterion(
        4,
        "descent h-polynomial equals face-count h-polynomial on the corpus",
        Duration::from_secs(120),
        || {
            for inst in &instances {
                let h = h_polynomial(&nested_complex(&inst.bl));
                let hd = nestex::labeling::descent_h_polynomial(&inst.bl, &inst.omega)
                    .map_err(|e| format!("{}: {e}", inst.key))?;
                if h != hd {
                    return Err(format!(
                        "{}: descent {:?} vs face {:?}",
                        inst.key,
                        hd.coeffs(),
                        h.coeffs()
                    ));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_05_vertex_decomposition_certificates() {
    battery();
    criterion(
        5,
        "vertex-decomposition certificates verify; brute force agrees",
        Duration::from_secs(600),
        || battery_subset(&["vd-certified", "vd-brute-force"]),
    );
}

#[test]
fn criterion_06_convex_ear_decompositions() {
    battery();
    criterion(
        6,
        "convex ear decompositions verify; U_{3,4} with G_max has 3 ears",
        Duration::from_secs(600),
        || {
            battery_subset(&["ced-certified", "facet-labels-nbc"])?;
            let gl = GeometricLattice::lattice_of_flats(&Matroid::uniform(3, 4));
            let bl = nestex::building::maximal_building_set(&gl.lattice);
            let atoms = gl.lattice.atoms();
            let dec = convex_ear_decomposition(&bl, &atoms).map_err(|e| e.to_string())?;
            if dec.ears.len() != 3 {
                return Err(format!("{} ears, want 3", dec.ears.len()));
            }
            verify_ced(&nested_complex(&bl), &dec).map_err(|e| e.to_string())
        },
    );
}

#[test]
fn criterion_07_h_vector_inequalities() {
    battery();
    criterion(
        7,
        "strongly flawless h, M-vector g, nonnegative complementary vector",
        Duration::from_secs(600),
        || battery_subset(&["h-strongly-flawless", "g-m-vector", "complementary-nonneg"]),
    );
}

#[test]
fn criterion_08_wedge_count_proxy() {
    criterion(
        8,
        "h_{n-2}(N(Π_n, G_min)) = (n-1)! for n = 3..6",
        Duration::from_secs(60),
        || {
            for n in 3..=6usize {
                let factorial: Int = (1..n as Int).product();
                let ground: Vec<i64> = (1..=n as i64).collect();
                let pl = PartitionLattice::new(&ground);
                let bl = minimal_building_set(&pl.lattice);
                let h = h_polynomial(&nested_complex(&bl));
                let top = *h.coeffs().last().unwrap();
                if h.coeffs().len() != n - 1 || top != factorial {
                    return Err(format!(
                        "h(N(Π_{n})) = {:?}, want top entry {factorial}",
                        h.coeffs()
                    ));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_09_bijection_suite() {
    criterion(
        9,
        "ψ/Φ inverse and descent-preserving (|I| ≤ 6); counts for n ≤ 9",
        Duration::from_secs(600),
        || {
            for n in 1..=5usize {
                bijection_check(n)?;
            }
            let mut double_factorial: Int = 1;
            for n in 1..=9usize {
                if n > 1 {
                    double_factorial *= 2 * n as Int - 1;
                }
                let counts = count_by_descents(n);
                let total: Int = counts.iter().sum();
                if total != double_factorial {
                    return Err(format!("|Q_{n}| = {total}, want {double_factorial}"));
                }
                if !check_top_heavy(n) {
                    return Err(format!("descent counts of Q_{n} are not top-heavy"));
                }
                if second_eulerian(n) != second_eulerian_by_enumeration(n) {
                    return Err(format!("recurrence and enumeration disagree at n = {n}"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_10_real_rootedness() {
    criterion(
        10,
        "P_n is real-rooted for n ≤ 8 (exact Sturm sequences)",
        Duration::from_secs(5),
        || {
            for n in 1..=8usize {
                let p = second_eulerian(n);
                match is_real_rooted(&p) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("P_{n} is not real-rooted")),
                    Err(e) => return Err(e.to_string()),
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_11_structural_identities() {
    battery();
    criterion(
        11,
        "deletion identity and link decomposition, facet-exactly",
        Duration::from_secs(600),
        || battery_subset(&["deletion-identity", "link-identity", "cone-identity"]),
    );
}
