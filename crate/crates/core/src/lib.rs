//! Planning and simulation of cost-constrained state-poisoning attacks on
//! multi-agent finite-horizon MDPs.
//!
//! A group of `n` recipient agents plays a shared finite-horizon MDP, each
//! following its own exactly-computed optimal policy. A group of `m`
//! attackers poisons the recipients' *observations*: during the first phase
//! of every time step an attacked recipient is fooled into a delusional
//! state, acts on it, and then moves and collects reward from its true
//! state. Attacks cost resources, and each attacker has a budget.
//!
//! Two budget regimes are supported:
//!
//! * **all-time** ([`alltime`]) — one budget per attacker for the whole
//!   game, carried across steps; solved by backward dynamic programming
//!   over `(actual states, delusional states, leftover budgets)` with a
//!   discretized budget grid.
//! * **instant** ([`instant`]) — per-step budgets that refill and cannot be
//!   carried over; solved by interleaving a within-step constrained
//!   allocation optimization with the between-step backup.
//!
//! [`rollout`] provides a seeded Monte-Carlo simulator to validate planner
//! values empirically. The crate is `no_std`-compatible (`alloc` required;
//! enable the `libm` feature when building without `std`).

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("poisonplan-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod alltime;
pub mod attack;
pub mod dps;
pub mod error;
pub mod instant;
mod math;
pub mod mdp;
pub mod rollout;

pub use alltime::{plan_alltime, AlltimeOptions, AlltimePlan, ValueTables};
pub use attack::{
    AllocationVector, CostMatrix, DelusionDistribution, DistanceMetric, EffortCostModel,
    JointAttackAction, RingDistance,
};
pub use dps::{BudgetGrid, DpState, DpsSpace};
pub use error::{Error, Result, ValidationReport};
pub use instant::{plan_instant, InstantOptions, InstantPlan, InstantValueTables, StepAllocation};
pub use mdp::{
    solve_recipient_policy, unattacked_group_value, validate_mdp, ActionId, ActionSpace,
    RecipientMdp, RecipientValueTable, RewardTable, StateId, StateSpace, TimeIndexedPolicy,
    TransitionModel,
};
pub use rollout::{
    monte_carlo_value, random_alltime_baseline, random_instant_baseline, simulate_episode_alltime,
    simulate_episode_instant, AlltimeAttackPolicy, AttackRecord, EpisodeTrace,
    InstantAttackPolicy, MonteCarloEstimate, TraceStep,
};
