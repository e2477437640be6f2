//! Folding systems: the string folding operation, languages generated by
//! folding a core language under a procedure language, and constructive
//! pumping families for regular and context-free components.

pub mod alphabet;
pub mod cfg;
pub mod cli;
pub mod folding;
pub mod fsystem;
pub mod limit;
pub mod pumping;
pub mod regular;
