pub mod error;
pub mod exactlin;
pub mod witness;

pub use error::{Error, Result};
pub use witness::{AxiomReport, Witness};
pub mod rootsys;
pub mod table;
pub mod chevalley;
pub mod leibniz;
pub mod dialg;
pub mod matrixleib;
pub mod recognition;
pub mod report;
pub mod acceptance;
