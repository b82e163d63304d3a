//! Frozen implementation-derived values.

use serde::{Deserialize, Serialize};

pub const DEFAULT_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/golden.toml");
const BUILTIN: &str = include_str!("../golden.toml");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Golden {
    pub free_12gon_count: usize,
    pub group_orders: Vec<usize>,
    pub twelve_cell_cusps: usize,
    pub twenty_six_cell_cusps: usize,
    pub twenty_six_cell_orbit_sizes: Vec<usize>,
    pub i26_critical_a5: usize,
    pub i26_critical_d4: usize,
    pub lemma_candidates: usize,
    pub regular_12gon_z: Vec<f64>,
}

impl Golden {
    pub fn builtin() -> Golden {
        toml::from_str(BUILTIN).expect("bundled golden file parses")
    }

    pub fn load(path: &str) -> anyhow::Result<Golden> {
        let s = std::fs::read_to_string(path)?;
        Ok(toml::from_str(&s)?)
    }

    /// The file text, with a comment above every entry.
    pub fn render(&self) -> String {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let z = self
            .regular_12gon_z
            .iter()
            .map(|x| format!("    {x:.12},"))
            .collect::<Vec<_>>()
            .join("\n");
        format!(
            "# Values computed by this implementation and then frozen. They are checked on\n\
             # every run and only rewritten by `triflect verify --regenerate-golden`.\n\
             \n\
             # Induced 12-cycles in I26; the search and the naive cycle enumerator agree.\n\
             free_12gon_count = {}\n\
             \n\
             # Orders of the groups generated by the reflection representations on L2, L3, L4.\n\
             group_orders = [{}]\n\
             \n\
             # Cusps of the 12-cell: pairs of opposite A5 chains in the 12-gon.\n\
             twelve_cell_cusps = {}\n\
             \n\
             # Cusps of the 26-cell and the sizes of their automorphism orbits.\n\
             twenty_six_cell_cusps = {}\n\
             twenty_six_cell_orbit_sizes = [{}]\n\
             \n\
             # Critical subsets of the 26-cell by shape.\n\
             i26_critical_a5 = {}\n\
             i26_critical_d4 = {}\n\
             \n\
             # Candidates in the rank-5 extension sweep at norm bound 3.\n\
             lemma_candidates = {}\n\
             \n\
             # Prevertices of the regular 12-gon with equal weights, found by\n\
             # Gauss-Newton with the first three points held fixed.\n\
             regular_12gon_z = [\n{}\n]\n",
            self.free_12gon_count,
            list(&self.group_orders),
            self.twelve_cell_cusps,
            self.twenty_six_cell_cusps,
            list(&self.twenty_six_cell_orbit_sizes),
            self.i26_critical_a5,
            self.i26_critical_d4,
            self.lemma_candidates,
            z,
        )
    }
}
