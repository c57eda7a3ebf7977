//! Exact classification of positive-energy representations of loop groups
//! with discontinuous loops `L_Z G` and of loop groups of quotients `L(G/Z)`.

pub mod alcove;
pub mod classify;
pub mod cli;
pub mod error;
pub mod forms;
pub mod golden;
pub mod group;
pub mod lattices;
pub mod levels;
pub mod linalg;
pub mod report;
pub mod rootsys;

pub use error::{Error, Result};
pub use group::Group;
pub use linalg::{RVec, Q};
pub use rootsys::{Family, RootSystem, SimpleType};
