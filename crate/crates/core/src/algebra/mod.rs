pub mod fp;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod hom;
pub mod tensor;
pub mod free;
pub mod linalg;
pub mod descend;
