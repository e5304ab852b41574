//! Command-line front end: generators, coloring searches, verifiers,
//! embeddings, and censuses over Steiner triple systems and their
//! surfaces. Exit codes: 0 = success / colorable / verified,
//! 1 = not colorable / verification failed, 2 = usage or input error.

mod io;
mod poly;
mod runlog;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use stschrom_core::coloring::{
    search_coloring, search_from_seed, seed_configurations, chromatic_number, ChromaticResult,
    ColoringProblem, SearchOutcome, SearchStats, Status,
};
use stschrom_core::complex::{Classification, SimplicialComplex, Vertex};
use stschrom_core::embedding::{complete_to_triangulation, embed_max_genus};
use stschrom_core::gf2d::{eval_permutation_polynomial, FieldGF2d};
use stschrom_core::sphere::build_non_4_2_colorable_sphere;
use stschrom_core::steiner::{
    affine_sts, bose, bose_transversal, enumerate_transversal_cosets_d3, is_transversal,
    orientability_of_steiner_surface, projective_sts, singer_normalizer_search, sts7,
    SteinerQuasigroup, SteinerTripleSystem,
};

#[derive(Parser)]
#[command(name = "stschrom", version, about = "Steiner surfaces and their 2-chromatic numbers")]
struct Cli {
    /// Permit commands with multi-hour budgets.
    #[arg(long, global = true)]
    allow_long: bool,

    /// Append-only run log for search commands.
    #[arg(long, global = true, default_value = "stschrom_runs.log")]
    log: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a built-in complex as a facet file.
    Gen {
        #[command(subcommand)]
        target: GenTarget,
        /// Output file (stdout when omitted).
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Search for a (k,s)-coloring of a facet-file complex.
    Color {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        s: u32,
        /// Facet to exclude from the constraints, e.g. "[1,3,4]". Repeatable.
        #[arg(long)]
        remove_facet: Vec<String>,
        /// Worker threads for the seed configurations.
        #[arg(long)]
        threads: Option<usize>,
        /// Write a found coloring here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Input facet file ('-' or omitted = stdin).
        file: Option<PathBuf>,
    },
    /// Compute the s-chromatic number by iterating k.
    Chi {
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long)]
        max_k: u32,
        file: Option<PathBuf>,
    },
    /// Verify structural properties.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Embed an STS facet file as a surface of maximum genus.
    Embed {
        /// Facet file whose triangles form a Steiner triple system.
        #[arg(long)]
        sts: PathBuf,
        #[arg(long, default_value_t = 1)]
        star_vertex: Vertex,
        /// Build the nonorientable embedding instead of the orientable one.
        #[arg(long)]
        nonorientable: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enumerate transversal classes.
    Census {
        #[command(subcommand)]
        which: CensusWhich,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    /// Bose system on 6s+3 points.
    Bose {
        #[arg(long)]
        s: u32,
    },
    /// Projective system PG(2^d) on 2^d - 1 points.
    Pg {
        #[arg(long)]
        d: u32,
    },
    /// Affine system AG(k,3) on 3^k points.
    Ag {
        #[arg(long)]
        k: u32,
    },
    /// Boundary complex of the cyclic polytope CP(m, dim).
    Cp {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// The 7-vertex torus.
    Torus7,
    /// The 6-vertex real projective plane.
    Rp26,
    /// Completed maximum-genus embedding surface of STS(7).
    Sts7Embedding {
        #[arg(long)]
        nonorientable: bool,
    },
    /// The 167-vertex 3-sphere with no (4,2)-coloring.
    Sphere167,
    /// Union surface of an STS and its image under a transversal.
    Surface {
        /// Field degree for a projective system PG(2^d).
        #[arg(long, requires = "poly", conflicts_with = "bose_s")]
        d: Option<u32>,
        /// Permutation polynomial defining the transversal.
        #[arg(long)]
        poly: Option<String>,
        /// Bose parameter s, using the built-in transversal formula.
        #[arg(long)]
        bose_s: Option<u32>,
        /// With --bose-s: use the orientable (even-s) formula.
        #[arg(long)]
        orientable: bool,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Classify a facet file as a closed 2- or 3-manifold.
    Manifold { file: Option<PathBuf> },
    /// Check a coloring file against a complex.
    Coloring {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value_t = 2)]
        s: u32,
        file: Option<PathBuf>,
    },
    /// Check the Steiner triple system axioms on a triangle file.
    Sts { file: Option<PathBuf> },
    /// Check the transversal cycle-structure criterion.
    Transversal {
        /// Field degree for a projective system PG(2^d).
        #[arg(long, requires = "poly", conflicts_with = "bose_s")]
        d: Option<u32>,
        /// Permutation polynomial, e.g. "a*X^11 + X^6 + X".
        #[arg(long)]
        poly: Option<String>,
        /// Bose parameter s, using the built-in transversal formula.
        #[arg(long)]
        bose_s: Option<u32>,
        /// With --bose-s: use the orientable (even-s) formula.
        #[arg(long)]
        orientable: bool,
    },
}

#[derive(Subcommand)]
enum CensusWhich {
    /// Double cosets of 0-fixing permutations of F8 under GL(3,2).
    Pg8Cosets,
    /// Singer-normalizer transversal search for PG(2^d), 2^d - 1 prime.
    Singer {
        #[arg(long)]
        d: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
            Ok(text)
        }
    }
}

fn load_complex(file: &Option<PathBuf>) -> Result<(SimplicialComplex, u64)> {
    let text = read_input(file)?;
    let complex = io::parse_facet_text(&text)?;
    let digest = runlog::digest(io::facet_text(&complex, &[]).as_bytes());
    Ok((complex, digest))
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses "[1,3,4]" or "1,3,4".
fn parse_facet_arg(text: &str) -> Result<Vec<Vertex>> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| anyhow!("bad vertex {:?} in facet {text:?}", t.trim()))
        })
        .collect()
}

fn sts_from_complex(complex: &SimplicialComplex) -> Result<SteinerTripleSystem> {
    if complex.dim() != 2 || complex.facets().iter().any(|f| f.len() != 3) {
        bail!("the input must consist of triangles only");
    }
    let n = complex.vertices().len() as u32;
    let max = *complex.vertices().iter().max().unwrap();
    if max != n {
        bail!("STS inputs must use the contiguous labels 1..{n}");
    }
    let triples: Vec<[u32; 3]> = complex
        .facets()
        .iter()
        .map(|f| [f[0], f[1], f[2]])
        .collect();
    Ok(SteinerTripleSystem::from_labeled(n, &triples)?)
}

/// Combined parallel-or-sequential coloring search. The status is the
/// same either way; only the witness and statistics may differ.
fn run_search(problem: &ColoringProblem, threads: Option<usize>) -> Result<SearchOutcome> {
    let threads = threads.unwrap_or(1);
    if threads <= 1 {
        return Ok(search_coloring(problem));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building the thread pool")?;
    let seeds = seed_configurations(problem);
    let outcomes: Vec<SearchOutcome> = pool.install(|| {
        use rayon::prelude::*;
        seeds.par_iter().map(|s| search_from_seed(problem, s)).collect()
    });
    let mut combined = SearchOutcome {
        status: Status::NotColorable,
        witness: None,
        stats: SearchStats::default(),
    };
    for o in outcomes {
        combined.stats.nodes += o.stats.nodes;
        combined.stats.max_depth = combined.stats.max_depth.max(o.stats.max_depth);
        if o.status == Status::Colorable && combined.witness.is_none() {
            combined.status = Status::Colorable;
            combined.witness = o.witness;
        }
    }
    Ok(combined)
}

/// Refuses multi-hour searches unless --allow-long is given.
fn check_budget(cli: &Cli, complex: &SimplicialComplex, k: u32) -> Result<()> {
    if !cli.allow_long && complex.vertices().len() >= 100 && k >= 4 {
        bail!(
            "a k={k} search on {} vertices can run for hours; pass --allow-long",
            complex.vertices().len()
        );
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Gen { target, out } => cmd_gen(target, out),
        Command::Color {
            k,
            s,
            remove_facet,
            threads,
            cert,
            file,
        } => cmd_color(cli, *k, *s, remove_facet, *threads, cert, file),
        Command::Chi { s, max_k, file } => cmd_chi(cli, *s, *max_k, file),
        Command::Verify { what } => cmd_verify(what),
        Command::Embed {
            sts,
            star_vertex,
            nonorientable,
            out,
        } => cmd_embed(cli, sts, *star_vertex, !*nonorientable, out),
        Command::Census { which } => cmd_census(which),
    }
}

fn cmd_gen(target: &GenTarget, out: &Option<PathBuf>) -> Result<u8> {
    let (complex, comments) = match target {
        GenTarget::Bose { s } => {
            if *s == 0 {
                bail!("bose requires s >= 1");
            }
            (bose(*s).complex().with_name(&format!("bose_{s}")), vec![])
        }
        GenTarget::Pg { d } => {
            let field = FieldGF2d::new(*d, None)?;
            let comments = vec![format!(
                "field GF(2^{d}) modulus bitmask {:#b}",
                field.modulus()
            )];
            (
                projective_sts(&field)
                    .complex()
                    .with_name(&format!("pg_{}", field.size() - 1)),
                comments,
            )
        }
        GenTarget::Ag { k } => {
            if *k == 0 || *k > 5 {
                bail!("ag supports 1 <= k <= 5");
            }
            (affine_sts(*k).complex().with_name(&format!("ag_{k}_3")), vec![])
        }
        GenTarget::Cp { m, dim } => (
            stschrom_core::complex::cyclic_polytope_boundary(*m, *dim)?
                .with_name(&format!("cp_{m}_{dim}")),
            vec![],
        ),
        GenTarget::Torus7 => (stschrom_core::complex::torus7(), vec![]),
        GenTarget::Rp26 => (stschrom_core::complex::rp2_6(), vec![]),
        GenTarget::Sts7Embedding { nonorientable } => {
            let orientable = !*nonorientable;
            let state = embed_max_genus(&sts7(), 1, None, None, orientable)?;
            let word: String = state.cycle().word().iter().map(|v| v.to_string()).collect();
            let comments = vec![
                "source sts7, star vertex 1, lexicographic orders".to_string(),
                format!("orientable={orientable}"),
                format!("boundary cycle {word}"),
            ];
            let name = if orientable {
                "sts7_surface_orientable"
            } else {
                "sts7_surface_nonorientable"
            };
            (complete_to_triangulation(&state)?.with_name(name), comments)
        }
        GenTarget::Sphere167 => (build_non_4_2_colorable_sphere(), vec![]),
        GenTarget::Surface {
            d,
            poly,
            bose_s,
            orientable,
        } => {
            let (mu, t, name) = match (d, bose_s) {
                (Some(d), None) => {
                    let field = FieldGF2d::new(*d, None)?;
                    let p = poly::parse_polynomial(&field, poly.as_ref().unwrap())?;
                    let t = eval_permutation_polynomial(&field, &p)?;
                    let mu = SteinerQuasigroup::from_sts(&projective_sts(&field));
                    (mu, t, format!("pg_{}_surface", field.size() - 1))
                }
                (None, Some(s)) => {
                    let t = bose_transversal(*s, *orientable)?;
                    let mu = SteinerQuasigroup::from_sts(&bose(*s));
                    (mu, t, format!("bose_{s}_surface"))
                }
                _ => bail!("pass either --d with --poly, or --bose-s"),
            };
            (
                stschrom_core::steiner::steiner_surface(&mu, &t)?.with_name(&name),
                vec![],
            )
        }
    };
    write_output(out, &io::facet_text(&complex, &comments))?;
    Ok(0)
}

fn cmd_color(
    cli: &Cli,
    k: u32,
    s: u32,
    remove_facet: &[String],
    threads: Option<usize>,
    cert: &Option<PathBuf>,
    file: &Option<PathBuf>,
) -> Result<u8> {
    let (complex, digest) = load_complex(file)?;
    check_budget(cli, &complex, k)?;
    let mut problem = ColoringProblem::new(&complex, k, s)?;
    for f in remove_facet {
        let facet = parse_facet_arg(f)?;
        problem.remove_facet(&facet)?;
    }
    let start = Instant::now();
    let outcome = run_search(&problem, threads)?;
    let wall = start.elapsed();
    let status = match outcome.status {
        Status::Colorable => "colorable",
        Status::NotColorable => "not_colorable",
    };
    println!(
        "{status} k={k} s={s} nodes={} max_depth={} wall_ms={}",
        outcome.stats.nodes,
        outcome.stats.max_depth,
        wall.as_millis()
    );
    if let (Some(path), Some(w)) = (cert, &outcome.witness) {
        std::fs::write(path, io::coloring_text(w, s, complex.name()))?;
    }
    let mut flags: Vec<String> = remove_facet
        .iter()
        .map(|f| format!("remove_facet={f}"))
        .collect();
    if let Some(t) = threads {
        flags.push(format!("threads={t}"));
    }
    if cli.allow_long {
        flags.push("allow_long".to_string());
    }
    runlog::append(
        &cli.log,
        &runlog::RunRecord {
            command: format!("color --k {k} --s {s}"),
            digest,
            k,
            s,
            flags,
            outcome: status.to_string(),
            nodes: outcome.stats.nodes,
            wall_ms: wall.as_millis(),
        },
    )?;
    Ok(if outcome.status == Status::Colorable { 0 } else { 1 })
}

fn cmd_chi(cli: &Cli, s: u32, max_k: u32, file: &Option<PathBuf>) -> Result<u8> {
    let (complex, digest) = load_complex(file)?;
    check_budget(cli, &complex, max_k)?;
    let start = Instant::now();
    let result = chromatic_number(&complex, s, max_k)?;
    let wall = start.elapsed();
    let (text, code, k_logged) = match result {
        ChromaticResult::Exact(k) => (format!("chi_{s}={k}"), 0u8, k),
        ChromaticResult::ExceedsCap(cap) => (format!("chi_{s}>{cap}"), 1u8, cap),
    };
    println!("{text} wall_ms={}", wall.as_millis());
    runlog::append(
        &cli.log,
        &runlog::RunRecord {
            command: format!("chi --s {s} --max-k {max_k}"),
            digest,
            k: k_logged,
            s,
            flags: vec![],
            outcome: text,
            nodes: 0,
            wall_ms: wall.as_millis(),
        },
    )?;
    Ok(code)
}

fn cmd_verify(what: &VerifyWhat) -> Result<u8> {
    match what {
        VerifyWhat::Manifold { file } => {
            let (complex, _) = load_complex(file)?;
            match complex.classify_closed_manifold() {
                Ok(Classification::Surface(surf)) => {
                    println!(
                        "closed surface orientable={} genus={} euler={}",
                        surf.orientable, surf.genus, surf.euler
                    );
                    Ok(0)
                }
                Ok(Classification::ThreeManifold(m)) => {
                    println!(
                        "closed 3-manifold orientable={} euler={}",
                        m.orientable, m.euler
                    );
                    Ok(0)
                }
                Err(e) => {
                    println!("not a closed manifold: {e}");
                    Ok(1)
                }
            }
        }
        VerifyWhat::Coloring { coloring, s, file } => {
            let (complex, _) = load_complex(file)?;
            let text = std::fs::read_to_string(coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let c = io::parse_coloring_text(&text)?;
            let problem = ColoringProblem::new(&complex, c.k, *s)?;
            match problem.verify(&c) {
                Ok(()) => {
                    println!("valid ({},{s})-coloring", c.k);
                    Ok(0)
                }
                Err(e) => {
                    println!("invalid coloring: {e}");
                    Ok(1)
                }
            }
        }
        VerifyWhat::Sts { file } => {
            let (complex, _) = load_complex(file)?;
            match sts_from_complex(&complex) {
                Ok(sts) => {
                    println!("valid STS({})", sts.n());
                    Ok(0)
                }
                Err(e) => {
                    println!("not a Steiner triple system: {e}");
                    Ok(1)
                }
            }
        }
        VerifyWhat::Transversal {
            d,
            poly,
            bose_s,
            orientable,
        } => {
            let (mu, t, label) = match (d, bose_s) {
                (Some(d), None) => {
                    let field = FieldGF2d::new(*d, None)?;
                    let p = poly::parse_polynomial(&field, poly.as_ref().unwrap())?;
                    let t = eval_permutation_polynomial(&field, &p)?;
                    let mu = SteinerQuasigroup::from_sts(&projective_sts(&field));
                    (mu, t, format!("PG({})", field.size() - 1))
                }
                (None, Some(s)) => {
                    let t = bose_transversal(*s, *orientable)?;
                    let mu = SteinerQuasigroup::from_sts(&bose(*s));
                    (mu, t, format!("Bose s={s}"))
                }
                _ => bail!("pass either --d with --poly, or --bose-s"),
            };
            let report = is_transversal(&mu, &t)?;
            if !report.is_transversal {
                println!("{label}: not a transversal (m={})", report.m);
                return Ok(1);
            }
            let orientation = orientability_of_steiner_surface(&mu, &t)?;
            println!(
                "{label}: transversal m={} surface_orientable={}",
                report.m,
                orientation.is_some()
            );
            Ok(0)
        }
    }
}

fn cmd_embed(
    cli: &Cli,
    sts_file: &Path,
    star_vertex: Vertex,
    orientable: bool,
    out: &Option<PathBuf>,
) -> Result<u8> {
    let text = std::fs::read_to_string(sts_file)
        .with_context(|| format!("reading {}", sts_file.display()))?;
    let complex = io::parse_facet_text(&text)?;
    let sts = sts_from_complex(&complex)?;
    if !cli.allow_long && sts.n() >= 100 {
        bail!(
            "embedding an STS({}) can run for hours; pass --allow-long",
            sts.n()
        );
    }
    let state = embed_max_genus(&sts, star_vertex, None, None, orientable)?;
    let word: String = state.cycle().word().iter().map(|v| v.to_string()).collect();
    let surface = complete_to_triangulation(&state)?;
    let comments = vec![
        format!(
            "source {} (digest {:016x}), star vertex {star_vertex}, lexicographic orders",
            complex.name().unwrap_or("unnamed"),
            runlog::digest(io::facet_text(&complex, &[]).as_bytes())
        ),
        format!("orientable={orientable}"),
        format!("boundary cycle {word}"),
    ];
    write_output(out, &io::facet_text(&surface, &comments))?;
    Ok(0)
}

fn cmd_census(which: &CensusWhich) -> Result<u8> {
    match which {
        CensusWhich::Pg8Cosets => {
            let reports = enumerate_transversal_cosets_d3();
            let mut transversals = 0;
            for (i, r) in reports.iter().enumerate() {
                let images: Vec<String> =
                    r.representative.images().iter().map(|v| v.to_string()).collect();
                println!(
                    "coset {} size={} transversal={} orientable={} rep=[{}]",
                    i + 1,
                    r.size,
                    r.is_transversal,
                    r.orientable.map_or("n/a".to_string(), |o| o.to_string()),
                    images.join(",")
                );
                if r.is_transversal {
                    transversals += 1;
                }
            }
            println!(
                "{} double cosets, {} transversal",
                reports.len(),
                transversals
            );
            Ok(0)
        }
        CensusWhich::Singer { d } => {
            let field = FieldGF2d::new(*d, None)?;
            let reports = singer_normalizer_search(&field)?;
            let mut transversals = 0;
            for (i, r) in reports.iter().enumerate() {
                println!(
                    "class {} rep=(dlog_c={}, u={}) size={} transversal={} orientable={}",
                    i + 1,
                    r.rep.0,
                    r.rep.1,
                    r.class_size,
                    r.is_transversal,
                    r.orientable.map_or("n/a".to_string(), |o| o.to_string()),
                );
                if r.is_transversal {
                    transversals += 1;
                }
            }
            println!("{} classes, {} transversal", reports.len(), transversals);
            Ok(0)
        }
    }
}
