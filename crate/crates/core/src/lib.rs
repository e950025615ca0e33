pub mod canonical;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod genetics;
pub mod genus2;
pub mod linalg;
pub mod lp;
pub mod poset;
pub mod rational;
pub mod ring;
pub mod tensor;
pub mod zcl;

pub use error::{Error, Result};
