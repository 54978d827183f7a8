//! Permutation-group engine: permutations, stabilizer chains
//! (base and strong generating set), and group actions on labeled
//! domains. Everything is deterministic; there is no Monte Carlo
//! error budget anywhere.

pub mod action;
pub mod chain;
pub mod fileio;
pub mod group;
pub mod perm;

pub use action::{coset_action, Action, ActionError, UnionFind, COSET_ACTION_BOUND};
pub use chain::StabChain;
pub use group::{
    biguint_is_p_power, biguint_p_part, biguint_prime_factors, is_prime_u64, GroupError,
    PermGroup, BACKTRACK_NODE_BUDGET, ENUMERATION_BOUND,
};
pub use perm::{Perm, PermError};
