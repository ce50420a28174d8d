//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles deliberately take different computation routes than the
//! library: interiors and closures are recomputed pointwise from their
//! membership characterizations, family enumeration is redone by unpruned
//! power-set filtering through the subfamily oracle, and the boolean layer
//! has a plain truth-table evaluator.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use antitopo::modal::Formula;
use antitopo::space::{is_anti_topology_oracle, SetFamily, SubsetMask, Universe};

pub fn family(universe: &Universe, sets: &[&[&str]]) -> SetFamily {
    SetFamily::from_sets(universe, sets.iter().map(|s| s.iter())).unwrap()
}

/// All subsets of an `n`-point universe, ascending by bit value.
pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    let full = SubsetMask::full(n).bits();
    (0..=full).map(move |bits| SubsetMask::from_bits(bits, n))
}

/// Pointwise interior: `x` is inside exactly when some member contains `x`
/// and sits inside `a`.
pub fn interior_pointwise(f: &SetFamily, a: SubsetMask) -> SubsetMask {
    let n = f.universe().size();
    (0..n)
        .filter(|&x| {
            f.members()
                .iter()
                .any(|u| u.contains(x) && u.is_subset_of(a))
        })
        .fold(SubsetMask::empty(n), |acc, x| acc.with_point(x))
}

/// Pointwise closure: `x` is inside exactly when every member containing
/// `x` meets `a`.
pub fn closure_pointwise(f: &SetFamily, a: SubsetMask) -> SubsetMask {
    let n = f.universe().size();
    (0..n)
        .filter(|&x| {
            f.members()
                .iter()
                .all(|u| !u.contains(x) || !u.is_disjoint(a))
        })
        .fold(SubsetMask::empty(n), |acc, x| acc.with_point(x))
}

/// Unpruned enumeration: every subset of the proper-nonempty candidate pool,
/// filtered through the subfamily oracle, sorted into canonical order.
/// Usable up to `n = 4`; keep to `n <= 3` where the pool has 2^(2^n - 2)
/// subsets unless the runtime budget allows more.
pub fn enumerate_by_oracle(n: usize, include_degenerate: bool) -> Vec<SetFamily> {
    let universe = Universe::numeric(n).unwrap();
    let full = SubsetMask::full(n).bits();
    let pool: Vec<u32> = (1..full).collect();
    let mut found: Vec<Vec<SubsetMask>> = Vec::new();
    for code in 0u64..(1u64 << pool.len()) {
        let members: Vec<SubsetMask> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| code & (1 << i) != 0)
            .map(|(_, &bits)| SubsetMask::from_bits(bits, n))
            .collect();
        if members.is_empty() && !include_degenerate {
            continue;
        }
        let len = members.len();
        let candidate = SetFamily::new(universe.clone(), members).unwrap();
        if is_anti_topology_oracle(&candidate, len.max(2)).unwrap() {
            found.push(candidate.members().to_vec());
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|members| SetFamily::new(universe.clone(), members).unwrap())
        .collect()
}

/// All index combinations of size `0..=max_size` from a pool of `pool_len`
/// items, in lexicographic order.
pub fn combinations_up_to(pool_len: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn extend(
        pool_len: usize,
        max_size: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        if current.len() == max_size {
            return;
        }
        for i in start..pool_len {
            current.push(i);
            extend(pool_len, max_size, i + 1, current, out);
            current.pop();
        }
    }
    extend(pool_len, max_size, 0, &mut current, &mut out);
    out
}

/// Truth-table evaluation of a box-free formula under a boolean assignment.
pub fn truth_table_eval(formula: &Formula, assignment: &BTreeMap<String, bool>) -> bool {
    match formula {
        Formula::Var(name) => assignment[name],
        Formula::Not(g) => !truth_table_eval(g, assignment),
        Formula::And(a, b) => truth_table_eval(a, assignment) && truth_table_eval(b, assignment),
        Formula::Or(a, b) => truth_table_eval(a, assignment) || truth_table_eval(b, assignment),
        Formula::Implies(a, b) => {
            !truth_table_eval(a, assignment) || truth_table_eval(b, assignment)
        }
        Formula::Box(_) => panic!("truth tables evaluate box-free formulas only"),
    }
}

pub fn random_formula(
    rng: &mut ChaCha8Rng,
    vars: &[&str],
    depth: usize,
    with_box: bool,
) -> Formula {
    if depth == 0 || rng.gen_range(0..4) == 0 {
        return Formula::var(vars[rng.gen_range(0..vars.len())]);
    }
    let arms = if with_box { 5 } else { 4 };
    match rng.gen_range(0..arms) {
        0 => Formula::not(random_formula(rng, vars, depth - 1, with_box)),
        1 => Formula::and(
            random_formula(rng, vars, depth - 1, with_box),
            random_formula(rng, vars, depth - 1, with_box),
        ),
        2 => Formula::or(
            random_formula(rng, vars, depth - 1, with_box),
            random_formula(rng, vars, depth - 1, with_box),
        ),
        3 => Formula::implies(
            random_formula(rng, vars, depth - 1, with_box),
            random_formula(rng, vars, depth - 1, with_box),
        ),
        _ => Formula::boxed(random_formula(rng, vars, depth - 1, with_box)),
    }
}

/// Every `Box` node in the formula tree.
pub fn box_subformulas(formula: &Formula) -> Vec<&Formula> {
    let mut out = Vec::new();
    fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::Var(_) => {}
            Formula::Not(g) => walk(g, out),
            Formula::Box(g) => {
                out.push(f);
                walk(g, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                walk(a, out);
                walk(b, out);
            }
        }
    }
    walk(formula, &mut out);
    out
}
