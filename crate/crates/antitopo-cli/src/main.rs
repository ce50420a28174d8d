//! Command-line surface over the antitopo library.
//!
//! Exit codes encode results for scripting: 0 means the checked predicate
//! holds (or the command simply succeeded), 1 means the predicate fails,
//! and 2 means a usage or input error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use antitopo::io;
use antitopo::maps::{anti_continuous, point_anti_continuous, FiniteMap};
use antitopo::modal::{
    anti_tautology_up_to_with, is_valid_in_model, tautology_in_space, truth_set, Formula, Model,
    TautologyReport,
};
use antitopo::operators::{closure, interior};
use antitopo::props::{density, door_space, is_nowhere_dense};
use antitopo::search::{
    count_anti_topologies, enumerate_anti_topologies, find_map, find_space,
    find_space_with_subsets, SearchOutcome, SpaceBounds,
};
use antitopo::space::{check_anti_topology, classify_structure, SetFamily, SubsetMask, Universe};

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "antitopo",
    version,
    about = "Finite anti-topological spaces: verify, compute, enumerate, and model-check"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the anti-topology axioms on a space file.
    Verify { space: PathBuf },
    /// Print the family of anti-closed sets (complements of members).
    Closed { space: PathBuf },
    /// Print the associated topology generated by the family.
    Tau { space: PathBuf },
    /// Report which structure axioms the family satisfies.
    Classify { space: PathBuf },
    /// Anti-interior of an inline subset.
    Int {
        space: PathBuf,
        /// Comma-separated point labels, empty for the empty set.
        #[arg(long)]
        set: String,
    },
    /// Anti-closure of an inline subset.
    Cl {
        space: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Decide whether the space is a door space.
    Door { space: PathBuf },
    /// Decide anti-density of an inline subset.
    Dense {
        space: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Decide anti-nowhere-density of an inline subset.
    NowhereDense {
        space: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Check anti-continuity of a map between two spaces.
    MapCheck {
        /// Map file.
        #[arg(long)]
        map: PathBuf,
        /// Space file over the map's domain.
        #[arg(long)]
        from: PathBuf,
        /// Space file over the map's codomain.
        #[arg(long)]
        to: PathBuf,
        /// Check point-anti-continuity instead.
        #[arg(long)]
        point: bool,
    },
    /// List every anti-topology on an n-point universe, one space document
    /// per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        include_degenerate: bool,
    },
    /// Count the anti-topologies on an n-point universe.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate a formula in the model given by a space and a valuation.
    ModalEval {
        space: PathBuf,
        formula: String,
        /// Valuation entry like `p=1,2` (repeatable; `p=` for the empty set).
        #[arg(long = "val")]
        vals: Vec<String>,
    },
    /// Check a formula against every valuation on one space (--space) or on
    /// every anti-topology up to a universe size (--n).
    ModalTaut {
        formula: String,
        #[arg(long, conflicts_with = "space")]
        n: Option<usize>,
        #[arg(long)]
        space: Option<PathBuf>,
        /// Skip the degenerate empty family in the --n sweep.
        #[arg(long)]
        exclude_degenerate: bool,
    },
    /// Search small spaces for a named witness.
    Witness {
        predicate: PredicateName,
        #[arg(long, default_value_t = 2)]
        min_points: usize,
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        #[arg(long)]
        include_degenerate: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateName {
    /// A door space.
    Door,
    /// A space that is not a door space.
    NonDoor,
    /// A point-anti-continuous map that is not anti-continuous.
    PointContinuousNotContinuous,
    /// Two anti-dense sets whose intersection is not anti-dense.
    DenseIntersectionNotDense,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn load_space(path: &Path) -> Result<SetFamily> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read space file {}", path.display()))?;
    let parsed =
        io::space_from_json(&text).with_context(|| format!("in space file {}", path.display()))?;
    for warning in &parsed.warnings {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(parsed.family)
}

fn load_map(path: &Path) -> Result<FiniteMap> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read map file {}", path.display()))?;
    io::map_from_json(&text).with_context(|| format!("in map file {}", path.display()))
}

/// Inline sets are comma-separated labels; labels containing commas are not
/// supported. The empty string is the empty set.
fn parse_set(universe: &Universe, text: &str) -> Result<SubsetMask> {
    if text.is_empty() {
        return Ok(universe.empty_set());
    }
    Ok(universe.subset(text.split(','))?)
}

fn set_json(universe: &Universe, mask: SubsetMask) -> Value {
    Value::Array(
        universe
            .set_labels(mask)
            .into_iter()
            .map(|l| Value::String(l.to_string()))
            .collect(),
    )
}

fn space_json(family: &SetFamily) -> Value {
    serde_json::from_str(&io::space_to_json(family)).expect("space documents are valid JSON")
}

fn model_json(model: &Model) -> Value {
    let universe = model.worlds();
    let valuation: BTreeMap<String, Value> = model
        .valuation()
        .iter()
        .map(|(name, &mask)| (name.clone(), set_json(universe, mask)))
        .collect();
    json!({
        "universe": universe.labels(),
        "family": model.family().members().iter()
            .map(|&m| set_json(universe, m)).collect::<Vec<_>>(),
        "valuation": valuation,
    })
}

fn describe_model(model: &Model) -> String {
    let universe = model.worlds();
    let mut out = format!(
        "worlds {{{}}}, family {}",
        universe.labels().join(", "),
        model.family()
    );
    for (name, &mask) in model.valuation() {
        out.push_str(&format!(", {name}={}", universe.format_subset(mask)));
    }
    out
}

fn emit(json_mode: bool, value: Value, human: String) {
    if json_mode {
        println!("{value}");
    } else {
        println!("{human}");
    }
}

fn run(cli: Cli) -> Result<u8> {
    let json_mode = cli.json;
    match cli.command {
        Command::Verify { space } => {
            let family = load_space(&space)?;
            let verdict = check_anti_topology(&family);
            let degenerate = verdict.is_ok() && family.is_empty();
            let (human, violation) = match &verdict {
                Ok(()) if degenerate => (
                    "anti-topology (degenerate: the family is empty)".to_string(),
                    None,
                ),
                Ok(()) => ("anti-topology".to_string(), None),
                Err(v) => {
                    let text = v.describe(family.universe());
                    (format!("not an anti-topology: {text}"), Some(text))
                }
            };
            emit(
                json_mode,
                json!({
                    "anti_topology": verdict.is_ok(),
                    "degenerate": degenerate,
                    "violation": violation,
                }),
                human,
            );
            Ok(if verdict.is_ok() {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            })
        }
        Command::Closed { space } => {
            let family = load_space(&space)?.closed_family();
            // Space-document output uses the canonical writer directly.
            if json_mode {
                println!("{}", io::space_to_json(&family));
            } else {
                println!("{family}");
            }
            Ok(EXIT_TRUE)
        }
        Command::Tau { space } => {
            let family = load_space(&space)?.associated_topology()?;
            if json_mode {
                println!("{}", io::space_to_json(&family));
            } else {
                println!("{family}");
            }
            Ok(EXIT_TRUE)
        }
        Command::Classify { space } => {
            let family = load_space(&space)?;
            let class = classify_structure(&family);
            let human = format!(
                "anti-topology: {}\ntopology: {}\nsupra: {}\ninfra: {}\nminimal structure: {}\nweak structure: {}",
                class.is_anti_topology,
                class.is_topology,
                class.is_supra,
                class.is_infra,
                class.is_minimal_structure,
                class.is_weak_structure
            );
            emit(
                json_mode,
                json!({
                    "anti_topology": class.is_anti_topology,
                    "topology": class.is_topology,
                    "supra": class.is_supra,
                    "infra": class.is_infra,
                    "minimal_structure": class.is_minimal_structure,
                    "weak_structure": class.is_weak_structure,
                }),
                human,
            );
            Ok(EXIT_TRUE)
        }
        Command::Int { space, set } => {
            let family = load_space(&space)?;
            let a = parse_set(family.universe(), &set)?;
            let result = interior(&family, a)?;
            emit(
                json_mode,
                json!({ "set": set_json(family.universe(), result) }),
                family.universe().format_subset(result),
            );
            Ok(EXIT_TRUE)
        }
        Command::Cl { space, set } => {
            let family = load_space(&space)?;
            let a = parse_set(family.universe(), &set)?;
            let result = closure(&family, a)?;
            emit(
                json_mode,
                json!({ "set": set_json(family.universe(), result) }),
                family.universe().format_subset(result),
            );
            Ok(EXIT_TRUE)
        }
        Command::Door { space } => {
            let family = load_space(&space)?;
            let report = door_space(&family)?;
            let universe = family.universe();
            let human = match report.counterexample {
                None => "door space".to_string(),
                Some(c) => format!(
                    "not a door space: {} is neither anti-open nor anti-closed",
                    universe.format_subset(c)
                ),
            };
            emit(
                json_mode,
                json!({
                    "door": report.is_door,
                    "counterexample": report.counterexample.map(|c| set_json(universe, c)),
                }),
                human,
            );
            Ok(if report.is_door {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            })
        }
        Command::Dense { space, set } => {
            let family = load_space(&space)?;
            let universe = family.universe().clone();
            let a = parse_set(&universe, &set)?;
            let report = density(&family, a)?;
            let human = match report.blocking_witness {
                None if report.is_dense => "anti-dense".to_string(),
                Some(w) if !report.is_dense => format!(
                    "not anti-dense: disjoint from anti-open {}",
                    universe.format_subset(w)
                ),
                _ => format!("anti-dense: {}", report.is_dense),
            };
            emit(
                json_mode,
                json!({
                    "dense": report.is_dense,
                    "by_closure": report.by_closure,
                    "by_meets_all": report.by_meets_all,
                    "by_empty_exterior": report.by_empty_exterior,
                    "blocking_witness": report.blocking_witness.map(|w| set_json(&universe, w)),
                }),
                human,
            );
            Ok(if report.is_dense {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            })
        }
        Command::NowhereDense { space, set } => {
            let family = load_space(&space)?;
            let a = parse_set(family.universe(), &set)?;
            let result = is_nowhere_dense(&family, a)?;
            emit(
                json_mode,
                json!({ "nowhere_dense": result }),
                if result {
                    "anti-nowhere-dense".to_string()
                } else {
                    "not anti-nowhere-dense".to_string()
                },
            );
            Ok(if result { EXIT_TRUE } else { EXIT_FALSE })
        }
        Command::MapCheck {
            map,
            from,
            to,
            point,
        } => {
            let map = load_map(&map)?;
            let domain_family = load_space(&from)?;
            let codomain_family = load_space(&to)?;
            if point {
                let report = point_anti_continuous(&map, &domain_family, &codomain_family)?;
                let human = match report.failure {
                    None => "point-anti-continuous".to_string(),
                    Some(failure) => format!(
                        "not point-anti-continuous: fails at point {} with neighborhood {}",
                        map.domain().label(failure.point),
                        map.codomain().format_subset(failure.neighborhood)
                    ),
                };
                emit(
                    json_mode,
                    json!({
                        "continuous": report.is_continuous,
                        "mode": "point",
                        "witness": report.failure.map(|failure| json!({
                            "point": map.domain().label(failure.point),
                            "neighborhood": set_json(map.codomain(), failure.neighborhood),
                        })),
                    }),
                    human,
                );
                Ok(if report.is_continuous {
                    EXIT_TRUE
                } else {
                    EXIT_FALSE
                })
            } else {
                let report = anti_continuous(&map, &domain_family, &codomain_family)?;
                let human = match report.failing_member {
                    None => "anti-continuous".to_string(),
                    Some(member) => format!(
                        "not anti-continuous: the preimage of {} is not anti-open",
                        map.codomain().format_subset(member)
                    ),
                };
                emit(
                    json_mode,
                    json!({
                        "continuous": report.is_continuous,
                        "mode": "anti",
                        "witness": report.failing_member.map(|m| set_json(map.codomain(), m)),
                    }),
                    human,
                );
                Ok(if report.is_continuous {
                    EXIT_TRUE
                } else {
                    EXIT_FALSE
                })
            }
        }
        Command::Enumerate {
            n,
            include_degenerate,
        } => {
            for family in enumerate_anti_topologies(n, include_degenerate)? {
                println!("{}", io::space_to_json(&family));
            }
            Ok(EXIT_TRUE)
        }
        Command::Count { n } => {
            let counts = count_anti_topologies(n)?;
            emit(
                json_mode,
                json!({
                    "non_degenerate": counts.non_degenerate,
                    "total": counts.total,
                }),
                format!(
                    "{} anti-topologies ({} including the degenerate empty family)",
                    counts.non_degenerate, counts.total
                ),
            );
            Ok(EXIT_TRUE)
        }
        Command::ModalEval {
            space,
            formula,
            vals,
        } => {
            let family = load_space(&space)?;
            let universe = family.universe().clone();
            let formula: Formula = formula.parse()?;
            let mut valuation = BTreeMap::new();
            for entry in &vals {
                let Some((name, labels)) = entry.split_once('=') else {
                    bail!("valuation entry {entry:?} is not of the form name=labels");
                };
                valuation.insert(name.to_string(), parse_set(&universe, labels)?);
            }
            let model = Model::new(family, valuation)?;
            let truth = truth_set(&model, &formula)?;
            let valid = is_valid_in_model(&model, &formula)?;
            emit(
                json_mode,
                json!({
                    "truth_set": set_json(&universe, truth),
                    "valid": valid,
                }),
                format!(
                    "holds at {}{}",
                    universe.format_subset(truth),
                    if valid { " (valid in the model)" } else { "" }
                ),
            );
            Ok(if valid { EXIT_TRUE } else { EXIT_FALSE })
        }
        Command::ModalTaut {
            formula,
            n,
            space,
            exclude_degenerate,
        } => {
            let formula: Formula = formula.parse()?;
            let report: TautologyReport = match (n, space) {
                (Some(n), None) => anti_tautology_up_to_with(n, &formula, !exclude_degenerate)?,
                (None, Some(path)) => {
                    let family = load_space(&path)?;
                    tautology_in_space(&family, &formula)?
                }
                _ => bail!("pass exactly one of --n or --space"),
            };
            let human = match &report.countermodel {
                None => "tautology".to_string(),
                Some(model) => format!("not a tautology; countermodel: {}", describe_model(model)),
            };
            emit(
                json_mode,
                json!({
                    "tautology": report.is_tautology,
                    "countermodel": report.countermodel.as_ref().map(model_json),
                }),
                human,
            );
            Ok(if report.is_tautology {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            })
        }
        Command::Witness {
            predicate,
            min_points,
            max_points,
            include_degenerate,
        } => {
            let bounds = SpaceBounds {
                min_points,
                max_points,
                include_degenerate,
            };
            run_witness(json_mode, predicate, bounds)
        }
    }
}

fn run_witness(json_mode: bool, predicate: PredicateName, bounds: SpaceBounds) -> Result<u8> {
    match predicate {
        PredicateName::Door => {
            let outcome = find_space(bounds, |f| {
                door_space(f).map(|r| r.is_door).unwrap_or(false)
            })?;
            finish_space_witness(json_mode, outcome, "door space")
        }
        PredicateName::NonDoor => {
            let outcome = find_space(bounds, |f| {
                door_space(f).map(|r| !r.is_door).unwrap_or(false)
            })?;
            finish_space_witness(json_mode, outcome, "non-door space")
        }
        PredicateName::PointContinuousNotContinuous => {
            let outcome = find_map(bounds, bounds, |m, t, s| {
                point_anti_continuous(m, t, s)
                    .map(|r| r.is_continuous)
                    .unwrap_or(false)
                    && anti_continuous(m, t, s)
                        .map(|r| !r.is_continuous)
                        .unwrap_or(false)
            })?;
            match outcome {
                SearchOutcome::Witness(w) => {
                    emit(
                        json_mode,
                        json!({
                            "found": true,
                            "domain_space": space_json(&w.domain_family),
                            "codomain_space": space_json(&w.codomain_family),
                            "map": serde_json::from_str::<Value>(&io::map_to_json(&w.map))
                                .expect("map documents are valid JSON"),
                        }),
                        format!(
                            "found: map {:?} from {} to {}",
                            (0..w.map.domain().size())
                                .map(|p| w.map.codomain().label(w.map.apply(p)))
                                .collect::<Vec<_>>(),
                            w.domain_family,
                            w.codomain_family
                        ),
                    );
                    Ok(EXIT_TRUE)
                }
                SearchOutcome::Exhausted(token) => finish_exhausted(json_mode, token),
            }
        }
        PredicateName::DenseIntersectionNotDense => {
            let outcome = find_space_with_subsets(bounds, 2, |f, sets| {
                let dense = |m| density(f, m).map(|r| r.is_dense).unwrap_or(false);
                dense(sets[0]) && dense(sets[1]) && !dense(sets[0].intersection(sets[1]))
            })?;
            match outcome {
                SearchOutcome::Witness((family, sets)) => {
                    let universe = family.universe().clone();
                    emit(
                        json_mode,
                        json!({
                            "found": true,
                            "space": space_json(&family),
                            "sets": [set_json(&universe, sets[0]), set_json(&universe, sets[1])],
                        }),
                        format!(
                            "found: space {}, dense sets {} and {} with non-dense intersection",
                            family,
                            universe.format_subset(sets[0]),
                            universe.format_subset(sets[1])
                        ),
                    );
                    Ok(EXIT_TRUE)
                }
                SearchOutcome::Exhausted(token) => finish_exhausted(json_mode, token),
            }
        }
    }
}

fn finish_space_witness(
    json_mode: bool,
    outcome: SearchOutcome<SetFamily>,
    what: &str,
) -> Result<u8> {
    match outcome {
        SearchOutcome::Witness(family) => {
            emit(
                json_mode,
                json!({ "found": true, "space": space_json(&family) }),
                format!("found {what}: {family}"),
            );
            Ok(EXIT_TRUE)
        }
        SearchOutcome::Exhausted(token) => finish_exhausted(json_mode, token),
    }
}

fn finish_exhausted(json_mode: bool, token: antitopo::search::Exhaustion) -> Result<u8> {
    emit(
        json_mode,
        json!({
            "found": false,
            "searched": token.searched,
            "candidates_checked": token.candidates_checked,
        }),
        format!(
            "exhausted: no witness among {} ({} candidates checked)",
            token.searched, token.candidates_checked
        ),
    );
    Ok(EXIT_FALSE)
}
