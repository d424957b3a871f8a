pub mod cli;
pub mod error;
pub mod fourier;
pub mod noise;
pub mod processes;
pub mod verify;
