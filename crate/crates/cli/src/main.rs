mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use conejac::closed_forms::{
    mobius_cone_tree_count, prism_cone_tree_count, wheel_jacobian, wheel_tree_count,
};
use conejac::fastpath::cone_jacobian_fast;
use conejac::invariants::{
    cone_tree_count_via_charpoly, forest_count, forest_group, jacobian, tree_count,
};
use conejac::oracle::{bijection_check, enumerate_rooted_forests, enumerate_spanning_trees};
use conejac::parse::parse_edge_list;
use conejac::{AbelianGroup, GraphSource, Multigraph};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use report::{render_human, Record};

#[derive(Parser)]
#[command(
    name = "conejac",
    version,
    about = "Spanning trees, rooted forests and Jacobians of graph cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tree and forest counts and groups of a graph, optionally of its cone.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        /// Also report the spanning trees and Jacobian of the cone.
        #[arg(long)]
        cone: bool,
        #[arg(long)]
        json: bool,
    },
    /// Cone Jacobian of a circulant or cobordism via a companion matrix.
    Fastpath {
        /// Circulant `Cn(s1,...)` or cobordism `COBn(s..|t..)` spec.
        spec: String,
        /// Recompute the group from the forest matrix and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form cone counts for standard families.
    ClosedForm {
        family: Family,
        n: usize,
        /// Compare against the determinant of the forest matrix.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force enumeration checked against the algebraic counts.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// Seed for the random relabeling that is checked as well.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Circulant `Cn(s1,...)` or cobordism `COBn(s..|t..)` spec.
    #[arg(required_unless_present = "edges", conflicts_with = "edges")]
    spec: Option<String>,
    /// Read an edge-list file instead.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Wheel W(n), the cone over the cycle C_n.
    Wheel,
    /// Cone over the Moebius ladder C_2n(1, n).
    MobiusCone,
    /// Cone over the prism C_n x K_2.
    PrismCone,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] conejac::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Core(conejac::Error::GuardExceeded { .. }) => 3,
            CliError::Core(_) | CliError::Io { .. } => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Loaded {
    label: String,
    source: GraphSource,
}

fn load(input: &InputArgs) -> CliResult<Loaded> {
    match (&input.spec, &input.edges) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Loaded {
                label: path.display().to_string(),
                source: GraphSource::EdgeList(parse_edge_list(&text)?),
            })
        }
        (Some(spec), None) => {
            let source = GraphSource::parse_spec(spec)?;
            Ok(Loaded {
                label: source.to_string(),
                source,
            })
        }
        (None, None) => unreachable!("clap requires one input"),
    }
}

/// What a command prints, plus whether its checks held.
struct Outcome {
    record: Record,
    human: String,
    mismatch: Option<String>,
}

fn show(g: &AbelianGroup) -> String {
    g.to_string()
}

fn run_invariants(input: &InputArgs, cone: bool) -> CliResult<Outcome> {
    let loaded = load(input)?;
    let g = loaded.source.graph();
    let tau = tree_count(&g);
    let f = forest_count(&g);
    let jac = jacobian(&g);
    let fg = forest_group(&g);

    let mut record = Record::new(&loaded.label);
    record.set_tau(&tau);
    record.set_forest_count(&f);
    record.jacobian = Some((&jac).into());
    record.forest_group = Some((&fg).into());
    let mut lines = vec![
        ("input", loaded.label.clone()),
        ("tau", tau.to_string()),
        ("forest_count", f.to_string()),
        ("jacobian", show(&jac)),
        ("forest_group", show(&fg)),
    ];
    let mut notes = Vec::new();
    let mut mismatch = None;

    if cone {
        // det(I + L) is `f`; the characteristic polynomial gives it independently.
        let via_chi = cone_tree_count_via_charpoly(&g);
        record.set_cone_tau(&f);
        record.cone_jacobian = Some((&fg).into());
        record.path = Some("direct".into());
        lines.push(("cone_tau", f.to_string()));
        lines.push(("cone_jacobian", show(&fg)));
        notes.push(format!(
            "cone_tau via det(I+L) = {f}, via |chi(-1)| = {via_chi}"
        ));
        if via_chi != f {
            mismatch = Some(format!("cone_tau: det(I+L) = {f}, |chi(-1)| = {via_chi}"));
        }
    }
    Ok(Outcome {
        record,
        human: render_human(&lines, &notes),
        mismatch,
    })
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn run_fastpath(spec: &str, verify: bool) -> CliResult<Outcome> {
    let source = GraphSource::parse_spec(spec)?;
    let label = source.to_string();

    let (fast, direct) = std::thread::scope(|scope| {
        let direct = verify.then(|| scope.spawn(|| timed(|| forest_group(&source.graph()))));
        let fast = timed(|| cone_jacobian_fast(&source));
        (
            fast,
            direct.map(|h| h.join().expect("direct computation panicked")),
        )
    });
    let (fast_result, fast_time) = fast;
    let fast = fast_result?;

    let order = fast.group.torsion_order();
    let mut record = Record::new(&label);
    record.set_cone_tau(&order);
    record.cone_jacobian = Some((&fast.group).into());
    record.path = Some(fast.path.name().into());
    let mut lines = vec![
        ("input", label.clone()),
        ("cone_tau", order.to_string()),
        ("cone_jacobian", show(&fast.group)),
        (
            "path",
            format!(
                "{} ({n}x{n} companion matrix)",
                fast.path,
                n = fast.companion_size
            ),
        ),
    ];
    let mut notes = vec![format!("fast path: {}", fmt_duration(fast_time))];
    let mut mismatch = None;

    if let Some((direct, direct_time)) = direct {
        let ok = direct == fast.group;
        record.forest_group = Some((&direct).into());
        record.verified = Some(ok);
        lines.insert(3, ("forest_group", show(&direct)));
        lines.push(("verified", yes_no(ok).into()));
        notes.push(format!("direct:    {}", fmt_duration(direct_time)));
        if !ok {
            mismatch = Some(format!(
                "fast path gives {}, forest matrix gives {}",
                fast.group, direct
            ));
        }
    }
    Ok(Outcome {
        record,
        human: render_human(&lines, &notes),
        mismatch,
    })
}

fn fmt_duration(d: Duration) -> String {
    format!("{:.3} ms", d.as_secs_f64() * 1e3)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_closed_form(family: Family, n: usize, verify: bool) -> CliResult<Outcome> {
    let (name, count, group) = match family {
        Family::Wheel => ("wheel", wheel_tree_count(n)?, Some(wheel_jacobian(n)?)),
        Family::MobiusCone => ("mobius-cone", mobius_cone_tree_count(n)?, None),
        Family::PrismCone => ("prism-cone", prism_cone_tree_count(n)?, None),
    };
    let label = format!("{name} {n}");
    let mut record = Record::new(&label);
    record.set_cone_tau(&count);
    record.cone_jacobian = group.as_ref().map(Into::into);
    record.path = Some("closed-form".into());
    let mut lines = vec![("input", label.clone()), ("cone_tau", count.to_string())];
    if let Some(g) = &group {
        lines.push(("cone_jacobian", show(g)));
    }
    let mut mismatch = None;

    if verify {
        let base = match family {
            Family::Wheel => Multigraph::circulant(&conejac::CirculantSpec::new(n, vec![1])?),
            Family::MobiusCone => Multigraph::mobius_ladder(n)?,
            Family::PrismCone => Multigraph::prism(n)?,
        };
        let det = forest_count(&base);
        let mut problems = Vec::new();
        if det != count {
            problems.push(format!("count: closed form {count}, det(I+L) {det}"));
        }
        record.set_forest_count(&det);
        lines.insert(1, ("forest_count", det.to_string()));
        if let Some(g) = &group {
            let direct = forest_group(&base);
            if &direct != g {
                problems.push(format!("group: closed form {g}, forest matrix {direct}"));
            }
            record.forest_group = Some((&direct).into());
            lines.insert(2, ("forest_group", show(&direct)));
        }
        record.verified = Some(problems.is_empty());
        lines.push(("verified", yes_no(problems.is_empty()).into()));
        if !problems.is_empty() {
            mismatch = Some(problems.join("; "));
        }
    }
    Ok(Outcome {
        record,
        human: render_human(&lines, &[]),
        mismatch,
    })
}

fn random_relabel(g: &Multigraph, seed: u64) -> Multigraph {
    let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm)
}

fn run_oracle(input: &InputArgs, seed: u64) -> CliResult<Outcome> {
    let loaded = load(input)?;
    let g = loaded.source.graph();
    let trees = enumerate_spanning_trees(&g)?;
    let forests = enumerate_rooted_forests(&g)?;
    let bijection = bijection_check(&g)?;
    let relabeled = random_relabel(&g, seed);
    let trees_relabeled = enumerate_spanning_trees(&relabeled)?;
    let forests_relabeled = enumerate_rooted_forests(&relabeled)?;

    let tau = tree_count(&g);
    let f = forest_count(&g);
    let rows: [(&str, u64, &BigInt); 4] = [
        ("spanning trees", trees, &tau),
        ("rooted forests", forests, &f),
        ("cone trees", bijection.cone_trees, &f),
        ("relabeled forests", forests_relabeled, &f),
    ];
    let relabel_trees_ok = BigInt::from(trees_relabeled) == tau;
    let counts_ok = rows.iter().all(|(_, e, a)| BigInt::from(*e) == **a) && relabel_trees_ok;
    let ok = counts_ok && bijection.holds();

    let mut record = Record::new(&loaded.label);
    record.set_tau(&tau);
    record.set_forest_count(&f);
    record.trees = Some(trees);
    record.rooted_forests = Some(forests);
    record.bijection = Some(bijection.holds());
    record.path = Some("enumeration".into());
    record.verified = Some(ok);

    let mut human = render_human(&[("input", loaded.label.clone())], &[]);
    human.push_str(&format!(
        "{:<20}{:>14}{:>14}  agree\n",
        "", "enumerated", "algebraic"
    ));
    for (name, e, a) in rows {
        human.push_str(&format!(
            "{name:<20}{e:>14}{a:>14}  {}\n",
            yes_no(BigInt::from(e) == *a)
        ));
    }
    human.push_str(&format!(
        "{:<20}{trees_relabeled:>14}{tau:>14}  {}\n",
        "relabeled trees",
        yes_no(relabel_trees_ok)
    ));
    human.push_str(&format!("relabeling seed      {seed}\n"));
    human.push_str(&format!(
        "bijection            {}\n",
        if bijection.holds() { "OK" } else { "FAILED" }
    ));

    let mut mismatch = None;
    if !ok {
        let mut why = Vec::new();
        if !counts_ok {
            why.push(format!(
                "enumerated trees {trees}, forests {forests} vs algebraic {tau}, {f}"
            ));
        }
        if let Some(c) = &bijection.counterexample {
            why.push(c.clone());
        } else if !bijection.holds() {
            why.push(format!(
                "{} cone trees vs {} rooted forests",
                bijection.cone_trees, bijection.rooted_forests
            ));
        }
        mismatch = Some(why.join("; "));
    }
    Ok(Outcome {
        record,
        human,
        mismatch,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, json) = match &cli.command {
        Command::Invariants { input, cone, json } => (run_invariants(input, *cone), *json),
        Command::Fastpath { spec, verify, json } => (run_fastpath(spec, *verify), *json),
        Command::ClosedForm {
            family,
            n,
            verify,
            json,
        } => (run_closed_form(*family, *n, *verify), *json),
        Command::Oracle { input, seed, json } => (run_oracle(input, *seed), *json),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if json {
        println!("{}", outcome.record.to_json());
    } else {
        print!("{}", outcome.human);
    }
    match outcome.mismatch {
        Some(why) => {
            let e = CliError::Mismatch(why);
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        None => ExitCode::SUCCESS,
    }
}
