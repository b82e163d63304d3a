use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use triflect::definite::{lemma_search, short_vectors};
use triflect::diagram::{automorphism_count, find_induced};
use triflect::herm::{gram_from_diagram, LatticeDump};
use triflect::polygon::{edge_integrals, equal_weights, regular_points};
use triflect::polytope::{certify, real_form, weyl_points, Family};
use triflect::reflect::{group_closure, rep_from_diagram, verify_relations, Closure};
use triflect::{CoxeterDiagram, EisensteinRing, GaussRing, HermitianLattice, QuadraticRing};
use triflect_cli::{catalog, golden, run_claims, Golden, Report, Settings};

#[derive(Parser)]
#[command(name = "triflect", version, about = "Hermitian lattices, reflection groups and hyperbolic polytopes")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Element budget for group enumeration and element orders.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget_elements: usize,
    /// Quadrature tolerance for polygon integrals.
    #[arg(long, global = true, default_value_t = triflect::polygon::DEFAULT_TOL)]
    tol: f64,
    /// Read the diagram from a text file instead of naming it.
    #[arg(long, global = true)]
    diagram_file: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the claim catalog.
    Verify(VerifyArgs),
    /// Convert a saved report between JSON and text.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Diagram lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Diagram utilities.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Reflection representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Finite-volume certificate of the polytope with this Coxeter diagram.
    Vinberg {
        diagram: Option<String>,
        /// Also compute the Weyl point for this family.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Weyl point and facet distances.
    Weyl {
        diagram: Option<String>,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Short vectors of a definite diagram lattice.
    Roots {
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = Ring::Eisenstein)]
        ring: Ring,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Rank-5 extension sweep.
    Lemma {
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Schwarz–Christoffel polygon from weights and prevertices.
    Polygon(PolygonArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Glob over claim ids, e.g. `kernel.*`.
    #[arg(long)]
    filter: Option<String>,
    /// Glob of claim ids to report as skipped.
    #[arg(long)]
    skip: Option<String>,
    /// Golden values file.
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Recompute the golden values and write them to the golden file.
    #[arg(long)]
    regenerate_golden: bool,
    /// Also write the JSON report here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Gram matrix of a colored diagram, as lattice JSON.
    Build {
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = Ring::Eisenstein)]
        ring: Ring,
        /// Quotient by the radical first.
        #[arg(long)]
        quotient: bool,
    },
    /// Rank, radical, signature, determinant and root count.
    Invariants {
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = Ring::Eisenstein)]
        ring: Ring,
        /// Read a lattice JSON file instead of a diagram.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DiagramCmd {
    /// Print a diagram in the text format.
    Show { diagram: Option<String> },
    /// Induced copies of a pattern.
    Find {
        pattern: String,
        haystack: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Number of automorphisms.
    Aut {
        diagram: Option<String>,
        /// Only count automorphisms preserving the coloring.
        #[arg(long)]
        colors: bool,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Check generator orders, unitarity and braid relations.
    Relations {
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = Ring::Eisenstein)]
        ring: Ring,
    },
    /// Enumerate the generated group (definite quotients only).
    Closure {
        diagram: Option<String>,
        #[arg(long, value_enum, default_value_t = Ring::Eisenstein)]
        ring: Ring,
    },
}

#[derive(Args)]
struct PolygonArgs {
    /// Number of vertices; used for equal weights and regular prevertices.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated weights summing to 2.
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<f64>>,
    /// Comma-separated increasing real prevertices.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    z: Option<Vec<f64>>,
    /// Write the polygon as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    Eisenstein,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "12-cell")]
    TwelveCell,
    #[value(name = "26-cell")]
    TwentySixCell,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::TwelveCell => Family::TwelveCell,
            FamilyArg::TwentySixCell => Family::TwentySixCell,
        }
    }
}

fn diagram(cli: &Cli, name: Option<&str>) -> Result<CoxeterDiagram> {
    match (&cli.diagram_file, name) {
        (Some(p), None) => {
            let s = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(CoxeterDiagram::parse_text(&s)?)
        }
        (None, Some(n)) => Ok(CoxeterDiagram::by_name(n)?),
        (Some(_), Some(_)) => bail!("give a diagram name or --diagram-file, not both"),
        (None, None) => bail!("a diagram name or --diagram-file is required"),
    }
}

fn print(cli: &Cli, value: serde_json::Value, text: impl FnOnce() -> String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        print!("{}", text());
    }
}

fn invariants_of<R: QuadraticRing>(cli: &Cli, l: &HermitianLattice<R>) {
    let inv = l.invariants();
    print(cli, serde_json::to_value(&inv).expect("json"), || {
        format!(
            "ring {}\nrank {}\nradical {}\nsignature ({}, {})\ndeterminant {}\nroots {}\n",
            inv.ring,
            inv.rank,
            inv.radical_dim,
            inv.signature.0,
            inv.signature.1,
            inv.det,
            inv.roots.map_or("-".to_string(), |r| r.to_string())
        )
    });
}

fn build<R: QuadraticRing>(d: &CoxeterDiagram, quotient: bool) -> Result<()> {
    let l: HermitianLattice<R> = gram_from_diagram(d)?;
    let l = if quotient { l.quotient().lattice } else { l };
    println!("{}", serde_json::to_string_pretty(&l.dump())?);
    Ok(())
}

fn relations<R: QuadraticRing>(cli: &Cli, d: &CoxeterDiagram) -> Result<bool> {
    let l: HermitianLattice<R> = gram_from_diagram(d)?;
    let rep = rep_from_diagram(&l.quotient(), d)?;
    let gens = rep.generator_failures();
    let r = verify_relations(&rep, d)?;
    let ok = gens.is_empty() && r.failures.is_empty();
    print(cli, json!({"quotient_rank": rep.lattice.rank(), "generator_failures": gens, "relations": r}), || {
        let mut s = format!(
            "quotient rank {}\n{} generators, {} failures\n{} pairs ({} braid, {} commuting), {} failures\n",
            rep.lattice.rank(),
            rep.generators.len(),
            gens.len(),
            r.pairs_checked,
            r.braid_pairs,
            r.commuting_pairs,
            r.failures.len()
        );
        for f in gens.iter().chain(r.failures.iter().map(|(a, b, k)| format!("{a} {b}: {k}")).collect::<Vec<_>>().iter()) {
            s.push_str(&format!("  {f}\n"));
        }
        s
    });
    Ok(ok)
}

fn closure<R: QuadraticRing>(cli: &Cli, d: &CoxeterDiagram) -> Result<bool> {
    let l: HermitianLattice<R> = gram_from_diagram(d)?;
    let rep = rep_from_diagram(&l.quotient(), d)?;
    let c = group_closure(&rep, cli.budget_elements)?;
    let (order, complete) = match c {
        Closure::Finite(n) => (n, true),
        Closure::BudgetExceeded(n) => (n, false),
    };
    print(cli, json!({"order": order, "complete": complete}), || {
        if complete {
            format!("order {order}\n")
        } else {
            format!("more than {} elements (budget exceeded at {order})\n", cli.budget_elements)
        }
    });
    Ok(complete)
}

fn roots<R: QuadraticRing>(cli: &Cli, d: &CoxeterDiagram, bound: i64) -> Result<()> {
    let l: HermitianLattice<R> = gram_from_diagram(d)?;
    let inv = short_vectors(&l, bound)?;
    let mut by_norm = std::collections::BTreeMap::new();
    for (n, _) in &inv.vectors {
        *by_norm.entry(*n).or_insert(0usize) += 1;
    }
    print(cli, json!({"rank": inv.rank, "bound": inv.bound, "by_norm": by_norm, "mirrors": inv.mirror_count()}), || {
        let mut s = format!("rank {}, norms up to {}\n", inv.rank, inv.bound);
        for (n, c) in &by_norm {
            s.push_str(&format!("  norm {n}: {c}\n"));
        }
        s.push_str(&format!("mirrors {}\n", inv.mirror_count()));
        s
    });
    Ok(())
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<bool> {
    let path = a.golden.clone().unwrap_or_else(|| PathBuf::from(golden::DEFAULT_PATH));
    let mut settings = Settings {
        budget_elements: cli.budget_elements,
        tol: cli.tol,
        golden: Golden::builtin(),
    };
    if a.regenerate_golden {
        let g = triflect_cli::claims::regenerate_golden(&settings).map_err(|e| anyhow!(e))?;
        std::fs::write(&path, g.render()).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("wrote {}", path.display());
        settings.golden = g;
    } else if a.golden.is_some() {
        settings.golden = Golden::load(&path.to_string_lossy()).with_context(|| format!("reading {}", path.display()))?;
    }
    let pattern = |s: &Option<String>| -> Result<Option<glob::Pattern>> {
        s.as_deref().map(glob::Pattern::new).transpose().context("bad glob")
    };
    let filter = pattern(&a.filter)?;
    let skip = pattern(&a.skip)?;
    let cat = catalog(&settings.golden);
    let report = Report::new(run_claims(&cat, filter.as_ref(), skip.as_ref(), &settings));
    if report.claims.is_empty() {
        bail!("no claim matches the filter");
    }
    if let Some(p) = &a.output {
        std::fs::write(p, report.to_json()).with_context(|| format!("writing {}", p.display()))?;
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.passed())
}

fn polygon(cli: &Cli, a: &PolygonArgs) -> Result<()> {
    let n = a
        .n
        .or(a.mu.as_ref().map(Vec::len))
        .or(a.z.as_ref().map(Vec::len))
        .ok_or_else(|| anyhow!("give --n, --mu or --z"))?;
    let mu = a.mu.clone().unwrap_or_else(|| equal_weights(n));
    let z = match &a.z {
        Some(z) => z.clone(),
        None => regular_points(n),
    };
    if mu.len() != n || z.len() != n {
        bail!("need {n} weights and {n} prevertices");
    }
    let d = edge_integrals(&z, &mu, cli.tol)?;
    if let Some(p) = &a.svg {
        std::fs::write(p, d.to_svg()).with_context(|| format!("writing {}", p.display()))?;
    }
    let (r1, r2) = d.closure_residuals();
    print(cli, serde_json::to_value(&d)?, || {
        let mut s = String::new();
        for (j, (l, e)) in d.lengths.iter().zip(&d.errors).enumerate() {
            s.push_str(&format!("edge {:>2}  length {l:.12}  error {e:.1e}\n", j + 1));
        }
        s.push_str(&format!("closure residuals {r1:.1e} {r2:.1e}\narea {:.12}\n", d.area));
        s
    });
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Verify(a) => verify(cli, a),
        Cmd::Report { input, format } => {
            let s = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            let r = match Report::from_json(&s) {
                Ok(r) => r,
                Err(_) => Report::from_text(&s)?,
            };
            match format {
                Format::Json => println!("{}", r.to_json()),
                Format::Text => print!("{}", r.to_text()),
            }
            Ok(r.passed())
        }
        Cmd::Lattice(LatticeCmd::Build { diagram: n, ring, quotient }) => {
            let d = diagram(cli, n.as_deref())?;
            match ring {
                Ring::Eisenstein => build::<EisensteinRing>(&d, *quotient)?,
                Ring::Gauss => build::<GaussRing>(&d, *quotient)?,
            }
            Ok(true)
        }
        Cmd::Lattice(LatticeCmd::Invariants { diagram: n, ring, input }) => {
            if let Some(p) = input {
                lattice_file(cli, p)?;
            } else {
                let d = diagram(cli, n.as_deref())?;
                match ring {
                    Ring::Eisenstein => invariants_of(cli, &gram_from_diagram::<EisensteinRing>(&d)?),
                    Ring::Gauss => invariants_of(cli, &gram_from_diagram::<GaussRing>(&d)?),
                }
            }
            Ok(true)
        }
        Cmd::Diagram(DiagramCmd::Show { diagram: n }) => {
            print!("{}", diagram(cli, n.as_deref())?.to_text());
            Ok(true)
        }
        Cmd::Diagram(DiagramCmd::Find { pattern, haystack, budget }) => {
            let p = CoxeterDiagram::by_name(pattern)?;
            let h = diagram(cli, haystack.as_deref())?;
            let e = find_induced(&h, &p, *budget);
            let sets: Vec<Vec<&str>> = e.maps.iter().map(|m| m.iter().map(|&i| h.label(i)).collect()).collect();
            print(cli, json!({"count": sets.len(), "complete": e.complete, "embeddings": sets}), || {
                let mut s = format!("{} induced copies{}\n", sets.len(), if e.complete { "" } else { " (budget exhausted)" });
                for m in &sets {
                    s.push_str(&format!("  {}\n", m.join(" ")));
                }
                s
            });
            Ok(true)
        }
        Cmd::Diagram(DiagramCmd::Aut { diagram: n, colors }) => {
            let d = diagram(cli, n.as_deref())?;
            let k = automorphism_count(&d, *colors);
            print(cli, json!({"automorphisms": k, "respect_colors": colors}), || format!("{k}\n"));
            Ok(true)
        }
        Cmd::Rep(RepCmd::Relations { diagram: n, ring }) => {
            let d = diagram(cli, n.as_deref())?;
            match ring {
                Ring::Eisenstein => relations::<EisensteinRing>(cli, &d),
                Ring::Gauss => relations::<GaussRing>(cli, &d),
            }
        }
        Cmd::Rep(RepCmd::Closure { diagram: n, ring }) => {
            let d = diagram(cli, n.as_deref())?;
            match ring {
                Ring::Eisenstein => closure::<EisensteinRing>(cli, &d),
                Ring::Gauss => closure::<GaussRing>(cli, &d),
            }
        }
        Cmd::Vinberg { diagram: n, family } => {
            let d = diagram(cli, n.as_deref())?;
            let c = certify(&real_form(&d)?, family.map(Family::from))?;
            if cli.json {
                println!("{}", c.to_json());
            } else {
                println!("dimension {} signature ({}, {})", c.dimension, c.signature.0, c.signature.1);
                println!("{} critical subsets, finite volume: {}", c.critical.len(), c.verdict);
                for o in &c.orbits {
                    println!("  cusp orbit {}: {} of size {}", o.orbit, o.shape, o.size);
                }
                if let Some(w) = &c.weyl {
                    println!("Weyl point equidistant: {}, sinh^2 = {}", w.equidistant, w.invariant);
                }
            }
            Ok(c.verdict)
        }
        Cmd::Weyl { diagram: n, family } => {
            let d = diagram(cli, n.as_deref())?;
            let w = weyl_points(&real_form(&d)?, (*family).into())?;
            print(cli, serde_json::to_value(&w)?, || {
                format!("equidistant {}\nsinh^2 {}\nextension {}\n", w.equidistant, w.invariant, w.extension.as_deref().unwrap_or("none"))
            });
            Ok(w.equidistant)
        }
        Cmd::Roots { diagram: n, ring, bound } => {
            let d = diagram(cli, n.as_deref())?;
            match ring {
                Ring::Eisenstein => roots::<EisensteinRing>(cli, &d, *bound)?,
                Ring::Gauss => roots::<GaussRing>(cli, &d, *bound)?,
            }
            Ok(true)
        }
        Cmd::Lemma { bound } => {
            let r = lemma_search(*bound);
            print(cli, serde_json::to_value(&r)?, || {
                format!(
                    "{} candidates\n{} positive definite\n{} determinant mismatches\n{} norm-form mismatches\n",
                    r.candidates,
                    r.positive_definite.len(),
                    r.det_mismatches.len(),
                    r.norm_form_mismatches.len()
                )
            });
            Ok(r.passed())
        }
        Cmd::Polygon(a) => {
            polygon(cli, a)?;
            Ok(true)
        }
    }
}

fn lattice_file(cli: &Cli, p: &Path) -> Result<()> {
    let s = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    let v: serde_json::Value = serde_json::from_str(&s)?;
    match v.get("ring").and_then(|r| r.as_str()) {
        Some("eisenstein") => {
            let d: LatticeDump<EisensteinRing> = serde_json::from_value(v)?;
            invariants_of(cli, &HermitianLattice::from_dump(d)?);
        }
        Some("gauss") => {
            let d: LatticeDump<GaussRing> = serde_json::from_value(v)?;
            invariants_of(cli, &HermitianLattice::from_dump(d)?);
        }
        other => bail!("unknown ring {other:?}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
