//! Two-dimensional constructions: folding, tiled folding, shifted rows,
//! random arrays with patching, and exhaustive search at tiny sizes.

pub mod fold;
pub mod patch;
pub mod search;
pub mod shift;

pub use fold::{fold, plan_fold, tile_fold, FoldPlan};
pub use patch::{random_patch, PatchStats};
pub use search::{exhaustive_search, SearchOutcome, EXHAUSTIVE_LIMIT};
pub use shift::shift_construct;
