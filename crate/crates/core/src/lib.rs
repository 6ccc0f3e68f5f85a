pub mod algebra;
pub mod catalog;
pub mod error;
pub mod hopf;
pub mod report;
pub mod resolution;
pub mod run;
pub mod suites;
pub mod torsor;

pub use algebra::fp::{Fp, PrimeField};
pub use algebra::poly::{Monomial, Poly};
pub use algebra::ring::{Frac, LocalizedRing, RingSpec};
pub use error::{Error, Result};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
