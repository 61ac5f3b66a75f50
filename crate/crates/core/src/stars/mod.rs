//! Star systems, their derived digraphs and out-sections, forced
//! independence along out-sections, private star systems over blocks, and
//! block layouts from strongly connected components.

mod private;
mod propagate;
mod scc;
mod system;

pub use private::{check_jq, private_star_system, BlockLayout, JqOutcome, JqWitness};
pub use propagate::{propagate_forced_independents, Conflict, Propagation};
pub use scc::{scc_blocks, strongly_connected_components, SccBlocks};
pub use system::{build_digraph, out_section, StarDigraph, StarSystem};
