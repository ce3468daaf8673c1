//! The Hajós filter: 4-connected, not 5-connected, no K5-subdivision and
//! not 4-colorable. Minimality is outside the reach of a single instance.

use serde::{Deserialize, Serialize};

use crate::coloring::four_color;
use crate::error::Result;
use crate::graph::{is_k_connected, Graph};
use crate::subdivision::find_k5_subdivision;

/// The four checkable conditions for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HajosReport {
    pub four_connected: bool,
    pub five_connected: bool,
    pub k5_subdivision: bool,
    pub four_colorable: bool,
    /// Always "NOT CHECKED".
    pub minimality: String,
}

impl HajosReport {
    pub fn survives(&self) -> bool {
        self.four_connected && !self.five_connected && !self.k5_subdivision && !self.four_colorable
    }
}

/// Computes all four conditions.
pub fn check_hajos_preconditions(g: &Graph) -> Result<HajosReport> {
    Ok(HajosReport {
        four_connected: is_k_connected(g, 4),
        five_connected: is_k_connected(g, 5),
        k5_subdivision: find_k5_subdivision(g)?.is_some(),
        four_colorable: four_color(g)?.is_some(),
        minimality: "NOT CHECKED".into(),
    })
}

/// The first condition that removes `g` from the filter, checked from the
/// cheapest; `None` when `g` survives.
pub fn hajos_rejection(g: &Graph) -> Result<Option<&'static str>> {
    if !is_k_connected(g, 4) {
        return Ok(Some("not_4_connected"));
    }
    if is_k_connected(g, 5) {
        return Ok(Some("5_connected"));
    }
    if four_color(g)?.is_some() {
        return Ok(Some("4_colorable"));
    }
    if find_k5_subdivision(g)?.is_some() {
        return Ok(Some("k5_subdivision"));
    }
    Ok(None)
}
