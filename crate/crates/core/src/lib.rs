//! Boolean-subalgebra posets of finite orthomodular lattices and the
//! reconstruction of Jordan maps of exact finite-dimensional *-algebras from
//! order-isomorphisms of their abelian-subalgebra posets.

#![allow(clippy::needless_range_loop)]

pub mod jordan;
pub mod matalg;
pub mod oml;
pub mod pipeline;
pub mod poset;
pub mod reconstruct;
