//! The two rank-2 and rank-3 example posets shipped with the crate.
//!
//! `P` is the rank-2 poset with three atoms, carrying an R-labeling. `Q` is
//! the union of two 4-element chains glued at their ends; it admits no
//! R-labeling and has a negative flag h-vector entry.

pub const P: &str = include_str!("../fixtures/P.poset");
pub const Q: &str = include_str!("../fixtures/Q.poset");
