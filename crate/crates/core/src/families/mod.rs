//! Closed-form models of three families, each checked against the generic
//! engine: the Jordan quiver (partitions and monomial symmetric functions),
//! equioriented or not type A (intervals), and the cyclic quiver (winding
//! indecomposables and the loop algebra).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;

use crate::quiver::Quiver;

pub mod cyclic;
pub mod jordan;
pub mod partition;
pub mod type_a;

/// Result of an exhaustive verification: how many individual identities
/// were checked and the first one that failed, if any.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }
}

/// The `D4` orientation with every leaf pointing at the center (vertex 1).
pub fn d4_quiver() -> Arc<Quiver> {
    Arc::new(Quiver::new(4, vec![(0, 1), (2, 1), (3, 1)]).expect("valid quiver"))
}
