//! Possible-world semantics over anti-topological frames and brute-force
//! validity checking.
//!
//! A model is a finite world set carrying an anti-topology plus a valuation
//! of propositional variables by world sets. The box modality is global:
//! `[]f` holds at every world when the truth set of `f` is anti-open, and
//! at no world otherwise, so box truth sets are always empty or everything.

mod formula;
mod parser;

pub use formula::Formula;
pub use parser::{parse_formula, ParseError};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::search::{enumerate_anti_topologies, SearchError, MIN_ENUMERATION_POINTS};
use crate::space::{
    check_anti_topology, AntiTopologyViolation, SetFamily, SpaceError, SubsetMask, Universe,
};

/// Cap on `points * variables` for valuation sweeps, which walk
/// `(2^points)^variables` assignments.
pub const VALUATION_SWEEP_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModalError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("frame family is not an anti-topology: {0}")]
    FrameNotAntiTopology(AntiTopologyViolation),
    #[error("variable {0:?} has no valuation")]
    UnvaluedVariable(String),
    #[error("valuation sweep over {points} points and {variables} variables exceeds points*variables <= {limit}")]
    SweepTooLarge {
        points: usize,
        variables: usize,
        limit: usize,
    },
}

/// Worlds, an anti-topology on them, and a valuation of variables by world
/// sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    family: SetFamily,
    valuation: BTreeMap<String, SubsetMask>,
}

impl Model {
    /// Validates that the family is an anti-topology over its universe (the
    /// degenerate empty family counts) and that the valuation stays inside
    /// the world set.
    pub fn new(
        family: SetFamily,
        valuation: BTreeMap<String, SubsetMask>,
    ) -> Result<Model, ModalError> {
        check_anti_topology(&family).map_err(ModalError::FrameNotAntiTopology)?;
        for mask in valuation.values() {
            family.check_subset(*mask)?;
        }
        Ok(Model { family, valuation })
    }

    pub fn worlds(&self) -> &Universe {
        self.family.universe()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn valuation(&self) -> &BTreeMap<String, SubsetMask> {
        &self.valuation
    }
}

/// The set of worlds where the formula holds.
pub fn truth_set(model: &Model, formula: &Formula) -> Result<SubsetMask, ModalError> {
    match formula {
        Formula::Var(name) => model
            .valuation
            .get(name)
            .copied()
            .ok_or_else(|| ModalError::UnvaluedVariable(name.clone())),
        Formula::Not(g) => Ok(truth_set(model, g)?.complement()),
        Formula::And(a, b) => Ok(truth_set(model, a)?.intersection(truth_set(model, b)?)),
        Formula::Or(a, b) => Ok(truth_set(model, a)?.union(truth_set(model, b)?)),
        Formula::Implies(a, b) => Ok(truth_set(model, a)?
            .complement()
            .union(truth_set(model, b)?)),
        Formula::Box(g) => {
            let inner = truth_set(model, g)?;
            Ok(if model.family.contains(inner) {
                model.worlds().full_set()
            } else {
                model.worlds().empty_set()
            })
        }
    }
}

/// True at every world of the model.
pub fn is_valid_in_model(model: &Model, formula: &Formula) -> Result<bool, ModalError> {
    Ok(truth_set(model, formula)? == model.worlds().full_set())
}

/// Validity verdict over a sweep of models, with a countermodel on failure.
#[derive(Debug, Clone, PartialEq)]
pub struct TautologyReport {
    pub is_tautology: bool,
    pub countermodel: Option<Model>,
}

/// Checks the formula under every valuation of its variables by arbitrary
/// subsets of the space's universe. Valuations are swept in lexicographic
/// order of the variables' masks (variables sorted by name, the last one
/// cycling fastest), so the reported countermodel is canonical.
pub fn tautology_in_space(
    family: &SetFamily,
    formula: &Formula,
) -> Result<TautologyReport, ModalError> {
    check_anti_topology(family).map_err(ModalError::FrameNotAntiTopology)?;
    let variables: Vec<String> = formula
        .variables()
        .into_iter()
        .map(str::to_string)
        .collect();
    let points = family.universe().size();
    if points * variables.len() > VALUATION_SWEEP_LIMIT {
        return Err(ModalError::SweepTooLarge {
            points,
            variables: variables.len(),
            limit: VALUATION_SWEEP_LIMIT,
        });
    }
    let subsets = 1u64 << points;
    let total = subsets.pow(variables.len() as u32);
    let full = family.universe().full_set();
    for assignment in 0..total {
        let mut valuation = BTreeMap::new();
        let mut rest = assignment;
        for name in variables.iter().rev() {
            valuation.insert(
                name.clone(),
                SubsetMask::from_bits((rest % subsets) as u32, points),
            );
            rest /= subsets;
        }
        let model = Model {
            family: family.clone(),
            valuation,
        };
        if truth_set(&model, formula)? != full {
            return Ok(TautologyReport {
                is_tautology: false,
                countermodel: Some(model),
            });
        }
    }
    Ok(TautologyReport {
        is_tautology: true,
        countermodel: None,
    })
}

/// Sweeps every anti-topology on universes of `2..=n_max` points, the
/// degenerate empty family included, and every valuation.
pub fn anti_tautology_up_to(
    n_max: usize,
    formula: &Formula,
) -> Result<TautologyReport, ModalError> {
    anti_tautology_up_to_with(n_max, formula, true)
}

/// As [`anti_tautology_up_to`], with the degenerate frame made optional.
pub fn anti_tautology_up_to_with(
    n_max: usize,
    formula: &Formula,
    include_degenerate: bool,
) -> Result<TautologyReport, ModalError> {
    if !(MIN_ENUMERATION_POINTS..=crate::search::MAX_ENUMERATION_POINTS).contains(&n_max) {
        return Err(SearchError::UnsupportedSize {
            n: n_max,
            min: MIN_ENUMERATION_POINTS,
            max: crate::search::MAX_ENUMERATION_POINTS,
        }
        .into());
    }
    for n in MIN_ENUMERATION_POINTS..=n_max {
        for family in enumerate_anti_topologies(n, include_degenerate)? {
            let report = tautology_in_space(&family, formula)?;
            if !report.is_tautology {
                return Ok(report);
            }
        }
    }
    Ok(TautologyReport {
        is_tautology: true,
        countermodel: None,
    })
}
