//! Combinatorial core: abstract simplicial complexes, Steiner triple
//! systems with their quasigroup/transversal machinery, GF(2^d)
//! arithmetic, (k,2)-coloring search, maximum-genus embeddings and the
//! 167-vertex sphere builder.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion
//! CLI crate.

#![no_std]

extern crate alloc;

pub mod complex;
pub mod coloring;
pub mod embedding;
pub mod gf2d;
pub mod perm;
pub mod sphere;
pub mod steiner;

mod util;
