//! `lefkit`: batch front end over the core library. Every command prints one
//! JSON document; failures print an error document on stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lefkit_core::algebra::{
    analytic_spread, facet_ideal, log_matrix, parse_forms, stanley_reisner_generators,
    IdealPresentation,
};
use lefkit_core::io::{read_complex, ComplexFile, NamedComplex};
use lefkit_core::lefschetz::{
    colored_dual_generator, colored_sop, divergence_bound_check, kernel_transpose_basis,
    slp_check, verify_unexpected_with, wlp_check_with, Quotient, SopCandidate,
};
use lefkit_core::subdivision::{facet_ridge_graph, hesd, incidence_complex};
use lefkit_core::{fixtures, ArtinianFrame, Coloring, Error, Polynomial, SimplicialComplex};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lefkit", version, about = "Exact Lefschetz-property computations for Stanley-Reisner rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComplexArg {
    /// Complex JSON file, or the name of a bundled fixture (oct, cross4, ...).
    #[arg(long)]
    complex: String,
}

#[derive(Args)]
struct FrameArgs {
    #[command(flatten)]
    complex: ComplexArg,
    /// One cap for every variable, or a comma-separated list.
    #[arg(long)]
    caps: String,
}

#[derive(Subcommand)]
enum Command {
    /// f/h-vectors, homology and topological predicates.
    Info(ComplexArg),
    /// Hilbert function of A(caps), or of R/(I + forms).
    Hf {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        caps: Option<String>,
        /// Extra generators, separated by `;`.
        #[arg(long)]
        forms: Option<String>,
        /// Comma-separated degrees; defaults to every nonzero degree.
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<u32>>,
    },
    /// Ranks of multiplication by the sum of the variables.
    Wlp {
        #[command(flatten)]
        frame: FrameArgs,
        /// Also report ranks modulo this prime.
        #[arg(long)]
        screen: Option<u64>,
        #[arg(long)]
        embed_matrices: bool,
    },
    /// Ranks of multiplication by powers of the sum of the variables.
    Slp {
        #[command(flatten)]
        frame: FrameArgs,
    },
    /// Kernel of the transpose of ×L landing in the given degree minus one.
    Kernel {
        #[command(flatten)]
        frame: FrameArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Half-hollow edgewise subdivision.
    Hesd {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        r: u32,
    },
    /// Incidence complex on the (i-1)-faces.
    Incidence {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long)]
        i: isize,
    },
    /// Analytic spread of a monomial ideal (rank of its log matrix).
    Spread {
        /// Use the facet or Stanley-Reisner ideal of this complex.
        #[arg(long, conflicts_with = "monomials")]
        complex: Option<String>,
        /// `facet` or `sr`.
        #[arg(long, default_value = "facet")]
        ideal: String,
        /// Explicit generators, separated by `;`.
        #[arg(long)]
        monomials: Option<String>,
        /// Number of variables for explicit generators.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Search for a collapse certificate.
    Collapse {
        #[command(flatten)]
        complex: ComplexArg,
        /// Stop once the dimension is at most this (0 asks for a single vertex).
        #[arg(long, default_value_t = 0)]
        target: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Linear forms of a proper (d+1)-coloring.
    ColoredSop {
        #[command(flatten)]
        complex: ComplexArg,
        /// Comma-separated colors per vertex; found automatically if absent.
        #[arg(long, value_delimiter = ',')]
        coloring: Option<Vec<usize>>,
    },
    /// Dual generator of the colored quotient of a balanced homology sphere.
    DualGen {
        #[command(flatten)]
        complex: ComplexArg,
        #[arg(long, value_delimiter = ',')]
        coloring: Option<Vec<usize>>,
    },
    /// Verdicts on the five unexpectedness conditions.
    SopVerify {
        #[command(flatten)]
        frame: FrameArgs,
        /// The forms θ, separated by `;`.
        #[arg(long)]
        sop: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        embed_matrices: bool,
    },
}

enum Failure {
    Core(Error),
    Falsified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse(_) | Error::Input(_) | Error::InvalidComplex(_)) => 2,
            Failure::Core(Error::Hypothesis(_)) => 4,
            Failure::Core(_) => 3,
            Failure::Falsified(_) => 5,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Core(e) => (e.kind(), e.to_string()),
            Failure::Falsified(m) => ("falsification", m.clone()),
        };
        json!({ "error": { "kind": kind, "message": message }, "exit_code": self.exit_code() })
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn load(spec: &str) -> Result<NamedComplex, Error> {
    let path = Path::new(spec);
    if path.exists() {
        return read_complex(path);
    }
    fixtures::by_name(spec).ok_or_else(|| Error::Input(format!("no file or bundled fixture named `{spec}`")))
}

fn parse_caps(text: &str, n: usize) -> Result<Vec<u32>, Error> {
    let caps: Vec<u32> = text
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("invalid cap `{s}`"))))
        .collect::<Result<_, _>>()?;
    match caps.len() {
        1 => Ok(vec![caps[0]; n]),
        len if len == n => Ok(caps),
        len => Err(Error::Input(format!("{len} caps for {n} variables"))),
    }
}

fn frame(args: &FrameArgs) -> Result<(NamedComplex, ArtinianFrame), Error> {
    let named = load(&args.complex.complex)?;
    let caps = parse_caps(&args.caps, named.complex.num_vertices())?;
    let frame = ArtinianFrame::new(named.complex.clone(), caps)?;
    Ok((named, frame))
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn coloring_for(complex: &SimplicialComplex, given: Option<Vec<usize>>) -> Result<Coloring, Error> {
    let k = (complex.dim() + 1).max(0) as usize;
    match given {
        Some(colors) => Ok(Coloring::new(colors, k)),
        None => complex
            .balanced_coloring()?
            .ok_or_else(|| Error::Hypothesis("complex is not balanced".into())),
    }
}

fn info(named: &NamedComplex) -> Value {
    let c = &named.complex;
    let fh = c.fh_profile();
    let pm = c.pseudomanifold_status();
    let witness = c.cohen_macaulay_witness();
    let balanced = if c.is_pure() { c.balanced_coloring().ok().flatten() } else { None };
    let frg = facet_ridge_graph(c).ok();
    json!({
        "name": named.name,
        "vertices": c.labels(),
        "num_facets": c.facets().len(),
        "dim": c.dim(),
        "pure": c.is_pure(),
        "f_vector": fh.f,
        "h_vector": fh.h,
        "h_degree": fh.h_degree,
        "reduced_homology": c.homology().ranks,
        "cohen_macaulay": witness.is_none(),
        "cohen_macaulay_witness": witness.map(|(face, i)| json!({ "face": c.label_face(&face), "degree": i })),
        "pseudomanifold": {
            "is_pseudomanifold": pm.is_pseudomanifold,
            "strongly_connected": pm.strongly_connected,
            "max_ridge_degree": pm.max_ridge_degree,
            "boundary": pm.boundary.map(|b| b.labeled_facets()),
            "orientable": pm.orientable,
        },
        "homology_sphere": c.is_homology_sphere(),
        "balanced": balanced.is_some(),
        "coloring": balanced.map(|b| b.assignment),
        "facet_ridge_graph_bipartite": frg.map(|g| g.bipartition.is_some()),
        "stanley_reisner_generators": strings(&stanley_reisner_generators(c).generators),
    })
}

fn run(cli: Cli) -> Outcome {
    Ok(match cli.command {
        Command::Info(arg) => info(&load(&arg.complex)?),
        Command::Hf { complex, caps, forms, degrees } => {
            let named = load(&complex.complex)?;
            let c = &named.complex;
            match forms {
                None => {
                    let caps = caps.ok_or_else(|| Error::Input("either --caps or --forms is required".into()))?;
                    let frame = ArtinianFrame::new(c.clone(), parse_caps(&caps, c.num_vertices())?)?;
                    let degrees = degrees.unwrap_or_else(|| (0..=frame.socle_degree()).collect());
                    let values: Vec<usize> = degrees.iter().map(|&k| frame.hilbert_function(k)).collect();
                    json!({ "caps": frame.caps(), "degrees": degrees, "hilbert": values })
                }
                Some(forms) => {
                    let mut extra = parse_forms(&forms)?;
                    if let Some(caps) = caps {
                        let caps = parse_caps(&caps, c.num_vertices())?;
                        extra.extend(caps.iter().enumerate().map(|(i, &a)| {
                            Polynomial::monomial(lefkit_core::Monomial::power(i, a))
                        }));
                    }
                    let q = Quotient::new(c, &extra)?;
                    let degrees = match degrees {
                        Some(d) => d,
                        None => (0..=q.require_artinian()?).collect(),
                    };
                    let values: Vec<usize> = degrees.iter().map(|&k| q.hilbert(k)).collect();
                    json!({ "forms": strings(q.extra()), "degrees": degrees, "hilbert": values })
                }
            }
        }
        Command::Wlp { frame: args, screen, embed_matrices } => {
            let (_, frame) = frame(&args)?;
            let report = wlp_check_with(&frame, embed_matrices);
            let mut value = serde_json::to_value(&report).expect("report serializes");
            if let Some(prime) = screen {
                let l = frame.sum_of_vars();
                let ranks = (0..=frame.socle_degree())
                    .map(|k| frame.multiplication_matrix(&l, k)?.rank_mod_p(prime))
                    .collect::<Result<Vec<_>, _>>()?;
                value["screen"] = json!({ "prime": prime, "ranks": ranks });
            }
            value
        }
        Command::Slp { frame: args } => {
            let (_, frame) = frame(&args)?;
            serde_json::to_value(slp_check(&frame)).expect("report serializes")
        }
        Command::Kernel { frame: args, degree } => {
            let (named, frame) = frame(&args)?;
            let piece = kernel_transpose_basis(&frame, degree)?;
            let max_cap = frame.caps().iter().copied().max().unwrap_or(2);
            if frame.caps().iter().all(|&a| a == max_cap) {
                for g in &piece.basis {
                    if !divergence_bound_check(&g.to_divided_powers(), max_cap, named.complex.num_vertices())? {
                        return Err(Failure::Falsified(format!("degree bound violated by kernel element {g}")));
                    }
                }
            }
            json!({
                "degree": degree,
                "dimension": piece.dim(),
                "source_dim": frame.hilbert_function(degree),
                "target_dim": frame.hilbert_function(degree.saturating_sub(1)),
                "basis": strings(&piece.basis),
            })
        }
        Command::Hesd { complex, r } => {
            let named = load(&complex.complex)?;
            let sub = hesd(&named.complex, r)?;
            let mut file = ComplexFile::from_complex(&format!("hesd({}, {r})", named.name), &sub.complex);
            file.labels = Some(
                sub.points.iter().enumerate().map(|(i, p)| (i as u32 + 1, p.coords().to_vec())).collect(),
            );
            serde_json::to_value(file).expect("complex serializes")
        }
        Command::Incidence { complex, i } => {
            let named = load(&complex.complex)?;
            let inc = incidence_complex(&named.complex, i)?;
            let mut file = ComplexFile::from_complex(&format!("{}({i})", named.name), &inc.complex);
            file.labels = Some(
                inc.faces.iter().enumerate().map(|(j, f)| (j as u32 + 1, named.complex.label_face(f))).collect(),
            );
            serde_json::to_value(file).expect("complex serializes")
        }
        Command::Spread { complex, ideal, monomials, vars } => {
            let presentation = match (complex, monomials) {
                (Some(spec), None) => {
                    let named = load(&spec)?;
                    match ideal.as_str() {
                        "facet" => facet_ideal(&named.complex),
                        "sr" => stanley_reisner_generators(&named.complex),
                        other => return Err(Error::Input(format!("unknown ideal `{other}`")).into()),
                    }
                }
                (None, Some(text)) => {
                    let gens = parse_forms(&text)?;
                    let n = vars.unwrap_or_else(|| gens.iter().map(Polynomial::num_vars).max().unwrap_or(0));
                    IdealPresentation::new(gens, n)?
                }
                _ => return Err(Error::Input("give --complex or --monomials".into()).into()),
            };
            let log = log_matrix(&presentation)?;
            let spread = analytic_spread(&presentation)?;
            json!({
                "generators": strings(&log.row_labels),
                "log_matrix": log.matrix.to_triplet_json(),
                "analytic_spread": spread,
                "maximal": spread == presentation.generators.len(),
            })
        }
        Command::Collapse { complex, target, budget } => {
            let named = load(&complex.complex)?;
            let c = &named.complex;
            match c.collapse_search(target, budget) {
                Some(cert) => {
                    let residual = cert.replay(c)?;
                    json!({
                        "found": true,
                        "target": target,
                        "steps": cert.labeled_steps(c),
                        "residual": residual.labeled_facets(),
                    })
                }
                None => json!({ "found": false, "target": target, "budget": budget }),
            }
        }
        Command::ColoredSop { complex, coloring } => {
            let named = load(&complex.complex)?;
            let rho = coloring_for(&named.complex, coloring)?;
            let sop = colored_sop(&named.complex, &rho)?;
            json!({ "coloring": rho.assignment, "theta": strings(&sop.theta), "t": sop.total_degree_t })
        }
        Command::DualGen { complex, coloring } => {
            let named = load(&complex.complex)?;
            let rho = coloring_for(&named.complex, coloring)?;
            let f = colored_dual_generator(&named.complex, &rho)?;
            json!({ "coloring": rho.assignment, "dual_generator": f.to_string(), "degree": f.homogeneous_degree() })
        }
        Command::SopVerify { frame: args, sop, f, t, embed_matrices } => {
            let named = load(&args.complex.complex)?;
            let caps = parse_caps(&args.caps, named.complex.num_vertices())?;
            let cand = SopCandidate::new(parse_forms(&sop)?)?;
            let f: Polynomial = f.parse()?;
            let report = verify_unexpected_with(&named.complex, &cand, &f, &caps, t, embed_matrices)?;
            serde_json::to_value(report).expect("report serializes")
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(value) => {
            let text = serde_json::to_string_pretty(&value).expect("json") + "\n";
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        let err = Failure::Core(Error::Input(format!("{}: {e}", path.display())));
                        eprintln!("{}", err.to_json());
                        return ExitCode::from(err.exit_code());
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{}", failure.to_json());
            ExitCode::from(failure.exit_code())
        }
    }
}
