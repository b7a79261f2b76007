pub mod britton;
pub mod classify;
pub mod cli;
pub mod gog;
pub mod modular;
pub mod presentations;
pub mod words;
pub mod zlinalg;
