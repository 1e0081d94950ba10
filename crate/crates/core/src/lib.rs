pub mod blowup;
pub mod cli;
pub mod comotion;
pub mod contact;
pub mod diagram;
pub mod error;
pub mod fuzz;
pub mod generate;
pub mod golden;
pub mod group;
pub mod io;
pub mod map;
pub mod motion;
pub mod planar;
pub mod presentation;
pub mod rational;
pub mod report;
pub mod rewrite;
pub mod standard;
pub mod word;
