pub mod error;
pub mod grid;
pub mod rearrangement;
pub mod maximal;
pub mod norms;
pub mod multiplier;
pub mod corpus;
pub mod report;
pub mod verify;
pub mod io;
