pub mod adjointmod;
pub mod config;
pub mod corpus;
pub mod error;
pub mod exactla;
pub mod genrad;
pub mod liecore;
pub mod oracle;
pub mod radicals;

pub use config::Caps;
pub use error::{Error, Result};
