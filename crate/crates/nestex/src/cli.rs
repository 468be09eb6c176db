//! Command-line front end: builds lattices and complexes from JSON files,
//! prints face vectors, produces and verifies both certificate kinds, runs
//! the Stirling checks, and drives the corpus verification battery.
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
//! Every command is a pure function of its input files. `--seed` is accepted
//! for harness compatibility and ignored; nothing here is randomized.

use crate::building::BuiltLattice;
use crate::ced::{convex_ear_decomposition, verify_ced};
use crate::complex::SimplicialComplex;
use crate::corpus::{corpus, verify_corpus};
use crate::decomp::{verify_vd, vertex_decomposition};
use crate::io::{
    built_lattice_from_selector, ears_from_json, ears_to_json, omega_from_json, read_json,
    vd_cert_from_json, vd_cert_to_json, write_json, ComplexJson, EarsJson, GraphJson, IoError,
    LatticeJson, MatroidJson, OmegaJson, VdCertJson,
};
use crate::labeling::default_admissible_map;
use crate::matroid::{GeometricLattice, Matroid};
use crate::nested::{cone_nested_complex, nested_complex, nested_facets};
use crate::partition::PartitionLattice;
use crate::poset::{boolean_lattice, Elem, Lattice};
use crate::stirling::{
    check_top_heavy, count_by_descents, descents, phi, psi, second_eulerian, stirling_permutations,
};
use crate::vectors::{complementary_vector, g_vector, IntPoly};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "nestex",
    version,
    about = "Exact toolkit for built lattices and nested set complexes"
)]
struct Cli {
    /// Accepted for harness compatibility; no command uses randomness.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a lattice and write it as JSON.
    Lattice(LatticeArgs),
    /// Build a nested set complex from a lattice or matroid.
    Complex(ComplexArgs),
    /// Print the f/h/g/complementary vectors of a complex.
    Hvec(HvecArgs),
    /// Build or verify a vertex-decomposition certificate.
    Vd(VdArgs),
    /// Build or verify a convex ear decomposition.
    Ced(CedArgs),
    /// Stirling permutations and second Eulerian polynomials.
    Stirling(StirlingArgs),
    /// List the instances of a named corpus.
    Corpus { name: String },
    /// Run the invariant battery over a corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct LatticeArgs {
    #[command(subcommand)]
    family: LatticeFamily,
}

#[derive(Subcommand)]
enum LatticeFamily {
    /// Partition lattice Π_n on {1, …, n}.
    Partition {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Boolean lattice of subsets of {1, …, n}.
    Boolean {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Lattice of flats of the uniform matroid U_{r,n}.
    Uniform {
        r: usize,
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Lattice of flats of a graphic matroid.
    Graphic {
        graph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Lattice of flats of a matroid given by its bases.
    Matroid {
        matroid: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct ComplexArgs {
    /// Lattice JSON input.
    #[arg(short = 'l', long)]
    lattice: Option<PathBuf>,
    /// Matroid JSON input (uses its lattice of flats).
    #[arg(short = 'm', long)]
    matroid: Option<PathBuf>,
    /// Building set: min | max | aug | comma-separated element labels.
    #[arg(short = 'b', long, default_value = "min")]
    building: String,
    /// Emit the cone complex cN instead of N.
    #[arg(long)]
    cone: bool,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct HvecArgs {
    complex: PathBuf,
    /// Emit JSON instead of the one-line summary.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VdArgs {
    /// Build a certificate (requires --lattice or --matroid).
    #[arg(long, conflicts_with = "verify")]
    build: bool,
    /// Verify a certificate against a complex.
    #[arg(long)]
    verify: bool,
    #[arg(short = 'l', long)]
    lattice: Option<PathBuf>,
    #[arg(short = 'm', long)]
    matroid: Option<PathBuf>,
    #[arg(short = 'b', long, default_value = "min")]
    building: String,
    /// Admissible map: "default" or a JSON file mapping labels to weights.
    #[arg(long, default_value = "default")]
    omega: String,
    #[arg(long)]
    complex: Option<PathBuf>,
    #[arg(long)]
    cert: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CedArgs {
    #[arg(long, conflicts_with = "verify")]
    build: bool,
    #[arg(long)]
    verify: bool,
    #[arg(short = 'l', long)]
    lattice: Option<PathBuf>,
    #[arg(short = 'm', long)]
    matroid: Option<PathBuf>,
    #[arg(short = 'b', long, default_value = "min")]
    building: String,
    /// Atom order as comma-separated labels, ◁-increasing (default: label order).
    #[arg(long)]
    atom_order: Option<String>,
    #[arg(long)]
    complex: Option<PathBuf>,
    #[arg(long)]
    ears: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct StirlingArgs {
    #[arg(long)]
    n: usize,
    /// Print the n-th second Eulerian polynomial.
    #[arg(long)]
    poly: bool,
    /// Print the descent distribution and the top-heaviness verdict.
    #[arg(long)]
    counts: bool,
    /// Check the bijection with maximal nested sets of (Π_{n+1}, G_min).
    #[arg(long)]
    bijection_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every invariant (currently the only mode).
    #[arg(long)]
    all: bool,
    #[arg(long, default_value = "small")]
    corpus: String,
}

#[derive(Debug)]
enum CliError {
    Io(IoError),
    Usage(String),
    Failed(String),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(s) | CliError::Failed(s) => write!(f, "{s}"),
        }
    }
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    if let Ok(threads) = std::env::var("NESTEX_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(CliError::Failed(msg)) => {
            eprintln!("verification failed: {msg}");
            1
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Lattice(args) => lattice_cmd(args),
        Command::Complex(args) => complex_cmd(args),
        Command::Hvec(args) => hvec_cmd(args),
        Command::Vd(args) => vd_cmd(args),
        Command::Ced(args) => ced_cmd(args),
        Command::Stirling(args) => stirling_cmd(args),
        Command::Corpus { name } => {
            let instances = corpus(&name).map_err(|e| CliError::Usage(e.to_string()))?;
            for inst in instances {
                println!("{}", inst.key);
            }
            Ok(())
        }
        Command::Verify(args) => verify_cmd(args),
    }
}

fn lattice_cmd(args: LatticeArgs) -> Result<(), CliError> {
    let (lattice, output) = match args.family {
        LatticeFamily::Partition { n, output } => {
            if n == 0 || n > 7 {
                return Err(CliError::Usage(
                    "partition lattices support 1 ≤ n ≤ 7".into(),
                ));
            }
            let pl = PartitionLattice::new(&(1..=n as i64).collect::<Vec<_>>());
            (pl.lattice, output)
        }
        LatticeFamily::Boolean { n, output } => {
            if n > 10 {
                return Err(CliError::Usage("boolean lattices support n ≤ 10".into()));
            }
            (boolean_lattice(n), output)
        }
        LatticeFamily::Uniform { r, n, output } => {
            if r > n || n > 14 {
                return Err(CliError::Usage("need r ≤ n ≤ 14".into()));
            }
            let gl = GeometricLattice::lattice_of_flats(&Matroid::uniform(r, n));
            (gl.lattice, output)
        }
        LatticeFamily::Graphic { graph, output } => {
            let g: GraphJson = read_json(&graph)?;
            let m = g.build()?;
            (GeometricLattice::lattice_of_flats(&m).lattice, output)
        }
        LatticeFamily::Matroid { matroid, output } => {
            let m: MatroidJson = read_json(&matroid)?;
            let m = m.build()?;
            (GeometricLattice::lattice_of_flats(&m).lattice, output)
        }
    };
    write_json(&output, &LatticeJson::of(&lattice))?;
    println!(
        "wrote lattice with {} elements to {}",
        lattice.len(),
        output.display()
    );
    Ok(())
}

fn load_built(
    lattice: &Option<PathBuf>,
    matroid: &Option<PathBuf>,
    selector: &str,
) -> Result<BuiltLattice, CliError> {
    let lat = match lattice {
        Some(p) => Some(read_json::<LatticeJson>(p)?.build()?),
        None => None,
    };
    let mat = match matroid {
        Some(p) => Some(read_json::<MatroidJson>(p)?.build()?),
        None => None,
    };
    if lat.is_none() && mat.is_none() {
        return Err(CliError::Usage(
            "provide --lattice or --matroid".to_string(),
        ));
    }
    Ok(built_lattice_from_selector(
        lat.as_ref(),
        mat.as_ref(),
        selector,
    )?)
}

fn complex_cmd(args: ComplexArgs) -> Result<(), CliError> {
    let bl = load_built(&args.lattice, &args.matroid, &args.building)?;
    let c = if args.cone {
        cone_nested_complex(&bl)
    } else {
        nested_complex(&bl)
    };
    write_json(&args.output, &ComplexJson::of(&c))?;
    println!(
        "wrote complex with {} vertices and {} facets to {}",
        c.vertices().len(),
        c.facets().len(),
        args.output.display()
    );
    Ok(())
}

fn vector_string(v: &[i64]) -> String {
    format!(
        "({})",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

#[derive(Serialize)]
struct HvecReport {
    f: Vec<i64>,
    h: Vec<i64>,
    g: Vec<i64>,
    complementary: Vec<i64>,
    h_polynomial_ascending: String,
    h_polynomial_descending: String,
}

fn hvec_cmd(args: HvecArgs) -> Result<(), CliError> {
    let c: SimplicialComplex = read_json::<ComplexJson>(&args.complex)?.build()?;
    let f = c.f_vector();
    // keep the full d+1 entries (cones carry a trailing zero)
    let hv = crate::vectors::h_from_f(&f);
    let poly = IntPoly::new(hv.clone());
    let report = HvecReport {
        f: f.clone(),
        h: hv.clone(),
        g: g_vector(&hv),
        complementary: complementary_vector(&hv),
        h_polynomial_ascending: poly.ascending_string("t"),
        h_polynomial_descending: poly.descending_string("t"),
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(IoError::from)?
        );
    } else {
        println!(
            "f={} h={}",
            vector_string(&report.f),
            vector_string(&report.h)
        );
        println!(
            "g={} c={} h(t) = {}",
            vector_string(&report.g),
            vector_string(&report.complementary),
            report.h_polynomial_ascending
        );
    }
    Ok(())
}

fn vd_cmd(args: VdArgs) -> Result<(), CliError> {
    if args.build == args.verify {
        return Err(CliError::Usage(
            "pick exactly one of --build / --verify".into(),
        ));
    }
    if args.build {
        let bl = load_built(&args.lattice, &args.matroid, &args.building)?;
        let omega = match args.omega.as_str() {
            "default" => default_admissible_map(bl.lattice()),
            path => {
                let json: OmegaJson = read_json(std::path::Path::new(path))?;
                omega_from_json(bl.lattice(), &json)?
            }
        };
        let cert =
            vertex_decomposition(&bl, &omega).map_err(|e| CliError::Failed(e.to_string()))?;
        let complex = nested_complex(&bl);
        verify_vd(&complex, &cert).map_err(|e| CliError::Failed(e.to_string()))?;
        let json = vd_cert_to_json(&cert, complex.labels())?;
        if let Some(out) = &args.output {
            write_json(out, &json)?;
            println!(
                "wrote verified certificate ({} nodes) to {}",
                cert.node_count(),
                out.display()
            );
        } else {
            println!(
                "{}",
                serde_json::to_string_pretty(&json).map_err(IoError::from)?
            );
        }
        Ok(())
    } else {
        let complex_path = args
            .complex
            .as_ref()
            .ok_or_else(|| CliError::Usage("--verify needs --complex".into()))?;
        let cert_path = args
            .cert
            .as_ref()
            .ok_or_else(|| CliError::Usage("--verify needs --cert".into()))?;
        let complex = read_json::<ComplexJson>(complex_path)?.build()?;
        let json: VdCertJson = read_json(cert_path)?;
        let cert = vd_cert_from_json(&json, complex.labels())?;
        verify_vd(&complex, &cert).map_err(|e| CliError::Failed(e.to_string()))?;
        println!("certificate verifies");
        Ok(())
    }
}

fn ced_cmd(args: CedArgs) -> Result<(), CliError> {
    if args.build == args.verify {
        return Err(CliError::Usage(
            "pick exactly one of --build / --verify".into(),
        ));
    }
    if args.build {
        let bl = load_built(&args.lattice, &args.matroid, &args.building)?;
        let order: Vec<Elem> = match &args.atom_order {
            None => bl.lattice().atoms(),
            Some(spec) => parse_atom_order(bl.lattice(), spec)?,
        };
        let dec =
            convex_ear_decomposition(&bl, &order).map_err(|e| CliError::Failed(e.to_string()))?;
        let complex = nested_complex(&bl);
        verify_ced(&complex, &dec).map_err(|e| CliError::Failed(e.to_string()))?;
        let json = ears_to_json(&dec, bl.lattice());
        if let Some(out) = &args.output {
            write_json(out, &json)?;
            println!(
                "wrote verified decomposition with {} ears to {}",
                dec.ears.len(),
                out.display()
            );
        } else {
            println!(
                "{}",
                serde_json::to_string_pretty(&json).map_err(IoError::from)?
            );
        }
        Ok(())
    } else {
        let complex_path = args
            .complex
            .as_ref()
            .ok_or_else(|| CliError::Usage("--verify needs --complex".into()))?;
        let ears_path = args
            .ears
            .as_ref()
            .ok_or_else(|| CliError::Usage("--verify needs --ears".into()))?;
        let lattice_path = args
            .lattice
            .as_ref()
            .ok_or_else(|| CliError::Usage("--verify needs --lattice for atom labels".into()))?;
        let complex = read_json::<ComplexJson>(complex_path)?.build()?;
        let lattice = read_json::<LatticeJson>(lattice_path)?.build()?;
        let json: EarsJson = read_json(ears_path)?;
        let dec = ears_from_json(&json, &lattice)?;
        verify_ced(&complex, &dec).map_err(|e| CliError::Failed(e.to_string()))?;
        println!("ear decomposition verifies");
        Ok(())
    }
}

fn parse_atom_order(l: &Lattice, spec: &str) -> Result<Vec<Elem>, CliError> {
    let mut order = Vec::new();
    for label in spec.split(',') {
        let label = label.trim();
        let e = (0..l.len())
            .find(|&e| l.label(e) == label)
            .ok_or_else(|| CliError::Usage(format!("unknown atom label {label:?}")))?;
        order.push(e);
    }
    Ok(order)
}

fn stirling_cmd(args: StirlingArgs) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let mut did_something = false;
    if args.poly {
        did_something = true;
        let p = second_eulerian(args.n);
        println!("{}", descending_compact(&p));
    }
    if args.counts {
        did_something = true;
        let counts = count_by_descents(args.n);
        println!("counts={}", vector_string(&counts));
        println!(
            "top-heavy and monotone lower half: {}",
            if check_top_heavy(args.n) { "yes" } else { "no" }
        );
    }
    if args.bijection_check {
        did_something = true;
        if args.n > 5 {
            return Err(CliError::Usage(
                "--bijection-check enumerates Π_{n+1}; use n ≤ 5".into(),
            ));
        }
        bijection_check(args.n).map_err(CliError::Failed)?;
        println!("bijection check passed for n = {}", args.n);
    }
    if !did_something {
        return Err(CliError::Usage(
            "pick at least one of --poly / --counts / --bijection-check".into(),
        ));
    }
    Ok(())
}

/// Compact descending rendering matching printed tables: `6x^2+8x+1`.
fn descending_compact(p: &IntPoly) -> String {
    p.descending_string("x").replace(' ', "")
}

/// ψ/Φ roundtrip, counting, and descent preservation between Q_n and the
/// maximal nested sets of (Π_{n+1}, G_min), exhaustively.
pub fn bijection_check(n: usize) -> Result<(), String> {
    use crate::building::minimal_building_set;
    use crate::labeling::{descent_number, stirling_atom_order};
    let ground: Vec<i64> = (0..=n as i64).collect();
    let pl = PartitionLattice::new(&ground);
    let bl = minimal_building_set(&pl.lattice);
    let omega = stirling_atom_order(&pl);
    let facets = nested_facets(&bl);
    let expected: Vec<Vec<i64>> = stirling_permutations(&(1..=n as i64).collect::<Vec<_>>());
    if facets.len() != expected.len() {
        return Err(format!(
            "{} facets vs {} Stirling permutations",
            facets.len(),
            expected.len()
        ));
    }
    let mut images = Vec::with_capacity(facets.len());
    for facet in &facets {
        let blocks: Vec<Vec<i64>> = facet
            .iter()
            .map(|&e| pl.block_values(pl.connected_block(e).expect("G_min members are connected")))
            .collect();
        let word = psi(&ground, &blocks);
        if !crate::stirling::is_stirling(&word) {
            return Err(format!("ψ produced a non-Stirling word {word:?}"));
        }
        // descent preservation under the Stirling atom order
        let des_word = descents(&word);
        let des_nested =
            descent_number(&bl, &omega, facet).map_err(|e| format!("descents: {e}"))?;
        if des_word != des_nested {
            return Err(format!(
                "descents differ on {facet:?}: word {des_word} vs nested {des_nested}"
            ));
        }
        // Φ inverts ψ
        let back = phi(&ground, &word);
        let mut blocks_sorted = blocks.clone();
        blocks_sorted.sort();
        if back != blocks_sorted {
            return Err(format!("Φ(Ψ(S)) ≠ S on {facet:?}"));
        }
        images.push(word);
    }
    images.sort();
    if images != expected {
        return Err("ψ is not onto the Stirling permutations".to_string());
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReportEntry {
    instance: String,
    check: String,
    pass: bool,
    detail: String,
}

fn verify_cmd(args: VerifyArgs) -> Result<(), CliError> {
    if !args.all {
        return Err(CliError::Usage("only --all is supported".into()));
    }
    let results = verify_corpus(&args.corpus).map_err(|e| CliError::Usage(e.to_string()))?;
    let entries: Vec<VerifyReportEntry> = results
        .iter()
        .map(|r| VerifyReportEntry {
            instance: r.instance.clone(),
            check: r.check.clone(),
            pass: r.pass,
            detail: r.detail.clone(),
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&entries).map_err(IoError::from)?
    );
    let failures: Vec<_> = results.iter().filter(|r| !r.pass).collect();
    eprintln!(
        "{} checks over {} instances, {} failures",
        results.len(),
        results
            .iter()
            .map(|r| r.instance.as_str())
            .collect::<std::collections::BTreeSet<_>>()
            .len(),
        failures.len()
    );
    for f in &failures {
        eprintln!("FAIL {} {}: {}", f.instance, f.check, f.detail);
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{} checks failed",
            failures.len()
        )))
    }
}
