pub mod formats;
pub mod commands;
