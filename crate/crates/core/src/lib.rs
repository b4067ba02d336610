pub mod catalog;
pub mod cli;
pub mod error;
pub mod field;
pub mod format;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod resolution;
pub mod shell;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Coeff, FieldDescriptor, Fp, Rational};
pub use ideal::Ideal;
pub use poly::Polynomial;
pub use ring::{Monomial, MonomialOrder, Ring, RingDescriptor};
