//! The recipients' MDP and the exact policy they follow.
//!
//! All recipients share one state space, action space, transition table and
//! reward table, and act independently of each other. Rewards are earned on
//! true-state transitions `R(s_{t-1}, s_t)`; poisoned observations only
//! change which action a recipient picks.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result, ValidationReport};

pub type StateId = usize;
pub type ActionId = usize;

/// Tolerance for transition-row normalization checks.
pub const ROW_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct StateSpace {
    pub labels: Vec<String>,
}

impl StateSpace {
    pub fn size(&self) -> usize {
        self.labels.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActionSpace {
    pub labels: Vec<String>,
}

impl ActionSpace {
    pub fn size(&self) -> usize {
        self.labels.len()
    }
}

/// `probs[s][a][s']` = probability of landing in `s'` after taking `a` in `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionModel {
    pub probs: Vec<Vec<Vec<f64>>>,
}

impl TransitionModel {
    pub fn row(&self, state: StateId, action: ActionId) -> &[f64] {
        &self.probs[state][action]
    }
}

/// `rewards[s][s']` = reward a recipient earns for the true-state move `s → s'`.
#[derive(Debug, Clone, PartialEq)]
pub struct RewardTable {
    pub rewards: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecipientMdp {
    pub states: StateSpace,
    pub actions: ActionSpace,
    pub transition: TransitionModel,
    pub reward: RewardTable,
    /// Number of time steps; time indices run 0..=horizon.
    pub horizon: usize,
    /// Number of recipient agents sharing this MDP.
    pub recipients: usize,
}

impl RecipientMdp {
    pub fn state_count(&self) -> usize {
        self.states.size()
    }

    pub fn action_count(&self) -> usize {
        self.actions.size()
    }
}

/// `action_of[t][s]` = the action a recipient takes during step t+1 when it
/// believes it is in state `s` at time index t. Covers t in 0..horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeIndexedPolicy {
    pub action_of: Vec<Vec<ActionId>>,
}

impl TimeIndexedPolicy {
    pub fn steps(&self) -> usize {
        self.action_of.len()
    }

    pub fn action(&self, t: usize, state: StateId) -> ActionId {
        self.action_of[t][state]
    }
}

/// `values[t][s]` = optimal remaining reward for one recipient at time index
/// t in state s; `values[horizon]` is identically 0.
#[derive(Debug, Clone, PartialEq)]
pub struct RecipientValueTable {
    pub values: Vec<Vec<f64>>,
}

/// Checks every structural invariant of the MDP and reports all violations,
/// naming the offending row or cell.
pub fn validate_mdp(mdp: &RecipientMdp) -> ValidationReport {
    let mut report = ValidationReport::default();
    let s_count = mdp.state_count();
    let a_count = mdp.action_count();

    if s_count < 2 {
        report.push(format!("states: need at least 2, got {s_count}"));
    }
    for (i, label) in mdp.states.labels.iter().enumerate() {
        if mdp.states.labels[..i].contains(label) {
            report.push(format!("states: duplicate label \"{label}\""));
        }
    }
    if a_count < 1 {
        report.push(format!("actions: need at least 1, got {a_count}"));
    }
    for (i, label) in mdp.actions.labels.iter().enumerate() {
        if mdp.actions.labels[..i].contains(label) {
            report.push(format!("actions: duplicate label \"{label}\""));
        }
    }
    if mdp.recipients < 1 {
        report.push(format!("recipients: need at least 1, got {}", mdp.recipients));
    }

    if mdp.transition.probs.len() != s_count {
        report.push(format!(
            "transition: expected {s_count} state rows, got {}",
            mdp.transition.probs.len()
        ));
    }
    for (s, per_action) in mdp.transition.probs.iter().enumerate() {
        if per_action.len() != a_count {
            report.push(format!(
                "transition[{s}]: expected {a_count} action rows, got {}",
                per_action.len()
            ));
            continue;
        }
        for (a, row) in per_action.iter().enumerate() {
            if row.len() != s_count {
                report.push(format!(
                    "transition[{s}][{a}]: expected {s_count} entries, got {}",
                    row.len()
                ));
                continue;
            }
            let mut sum = 0.0;
            let mut bad_entry = false;
            for (next, &p) in row.iter().enumerate() {
                if !p.is_finite() || p < 0.0 {
                    report.push(format!(
                        "transition[{s}][{a}]: invalid probability {p} at next state {next}"
                    ));
                    bad_entry = true;
                }
                sum += p;
            }
            if !bad_entry && (sum - 1.0).abs() > ROW_SUM_TOLERANCE {
                report.push(format!("transition[{s}][{a}]: row sums to {sum}, expected 1"));
            }
        }
    }

    if mdp.reward.rewards.len() != s_count {
        report.push(format!(
            "reward: expected {s_count} rows, got {}",
            mdp.reward.rewards.len()
        ));
    }
    for (s, row) in mdp.reward.rewards.iter().enumerate() {
        if row.len() != s_count {
            report.push(format!(
                "reward[{s}]: expected {s_count} entries, got {}",
                row.len()
            ));
            continue;
        }
        for (next, &r) in row.iter().enumerate() {
            if !r.is_finite() {
                report.push(format!("reward[{s}][{next}]: not finite ({r})"));
            }
        }
    }

    report
}

/// Solves the recipients' own control problem by backward induction:
///
/// `v[t][s] = max_a Σ_{s'} P(s'|s,a) (R(s,s') + v[t+1][s'])`, `v[T][·] = 0`.
///
/// Ties are broken toward the lowest action index so output is
/// deterministic.
pub fn solve_recipient_policy(
    mdp: &RecipientMdp,
) -> Result<(TimeIndexedPolicy, RecipientValueTable)> {
    let report = validate_mdp(mdp);
    if !report.is_ok() {
        return Err(Error::InvalidModel(report));
    }

    let s_count = mdp.state_count();
    let a_count = mdp.action_count();
    let horizon = mdp.horizon;

    let mut values = vec![vec![0.0; s_count]; horizon + 1];
    let mut action_of = vec![vec![0; s_count]; horizon];

    for t in (0..horizon).rev() {
        for s in 0..s_count {
            let mut best_value = f64::NEG_INFINITY;
            let mut best_action = 0;
            for a in 0..a_count {
                let mut q = 0.0;
                for (next, &p) in mdp.transition.row(s, a).iter().enumerate() {
                    if p > 0.0 {
                        q += p * (mdp.reward.rewards[s][next] + values[t + 1][next]);
                    }
                }
                if q > best_value {
                    best_value = q;
                    best_action = a;
                }
            }
            values[t][s] = best_value;
            action_of[t][s] = best_action;
        }
    }

    Ok((
        TimeIndexedPolicy { action_of },
        RecipientValueTable { values },
    ))
}

/// Expected total group reward when nobody attacks: every recipient observes
/// its true state and follows `policy` from its own start state.
///
/// Recipients are independent, so this is the sum of per-recipient policy
/// values at time index 0.
pub fn unattacked_group_value(
    mdp: &RecipientMdp,
    policy: &TimeIndexedPolicy,
    initial_states: &[StateId],
) -> Result<f64> {
    if policy.steps() != mdp.horizon {
        return Err(Error::HorizonMismatch {
            expected: mdp.horizon,
            actual: policy.steps(),
        });
    }
    if initial_states.len() != mdp.recipients {
        return Err(Error::ShapeMismatch {
            what: "initial state vector",
            expected: mdp.recipients,
            actual: initial_states.len(),
        });
    }
    let s_count = mdp.state_count();
    for &s in initial_states {
        if s >= s_count {
            return Err(Error::IndexOutOfRange {
                what: "state",
                index: s,
                len: s_count,
            });
        }
    }

    // Policy evaluation with truthful observations.
    let mut value = vec![0.0; s_count];
    for t in (0..mdp.horizon).rev() {
        let row = &policy.action_of[t];
        if row.len() != s_count {
            return Err(Error::ShapeMismatch {
                what: "policy row",
                expected: s_count,
                actual: row.len(),
            });
        }
        let mut next = vec![0.0; s_count];
        for s in 0..s_count {
            let a = row[s];
            if a >= mdp.action_count() {
                return Err(Error::IndexOutOfRange {
                    what: "action",
                    index: a,
                    len: mdp.action_count(),
                });
            }
            let mut v = 0.0;
            for (succ, &p) in mdp.transition.row(s, a).iter().enumerate() {
                if p > 0.0 {
                    v += p * (mdp.reward.rewards[s][succ] + value[succ]);
                }
            }
            next[s] = v;
        }
        value = next;
    }

    Ok(initial_states.iter().map(|&s| value[s]).sum())
}
