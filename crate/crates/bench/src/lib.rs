//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use hecke_herm::exactfield::q;
use hecke_herm::{InducedDatum, InducedModule, WeylGroup};

/// Minimal principal series of `label` along `t·dir`.
pub fn principal(label: &str, dir: &[i64]) -> InducedModule {
    let g = Arc::new(WeylGroup::from_label(label).expect("supported type"));
    let dir: Vec<_> = dir.iter().map(|&c| q(c)).collect();
    let zero = vec![q(0); dir.len()];
    InducedModule::new(g, &InducedDatum::principal(zero, dir)).expect("valid datum")
}
