pub mod bott;
pub mod chern;
pub mod checks;
pub mod chow;
pub mod linalg;
pub mod pencil;
pub mod poly;
pub mod rep;
