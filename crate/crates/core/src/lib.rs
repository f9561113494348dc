//! Constructive 2-domination with changing vertex weights.
//!
//! The crate covers graph handling ([`graph`]), the colored selection state
//! ([`state`]), coefficient sets and weight tables ([`weights`]), the exact
//! coefficient conditions ([`conditions`]), the selection algorithms with run
//! certification ([`algorithms`]) and the bound LP ([`lp`]).

pub mod algorithms;
pub mod conditions;
pub mod error;
pub mod graph;
pub mod lp;
pub mod par;
pub mod rational;
pub mod state;
pub mod sweep;
pub mod weights;

pub use conditions::{check_conditions, ConditionReport, Label};
pub use error::{Error, Result};
pub use graph::Graph;
pub use par::Execution;
pub use rational::Rational;
pub use state::{Color, ColoredState, StateType};
pub use weights::CoefficientSet;
