//! Finite 2-groups: weak monoidal categories with invertible objects and
//! morphisms, the improvement of weak 2-groups to coherent ones, monoidal
//! functors between them, and a string-diagram calculus for adjoint
//! equivalences.

pub mod fincat;
pub mod group;
pub mod monoidal;
pub mod report;
pub mod twogroup;
pub mod homomorphism;
pub mod improve;
pub mod diagram;
pub mod cli;
