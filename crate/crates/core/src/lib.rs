pub mod error;
pub mod families;
pub mod moments;
pub mod qkernel;
pub mod qseries;
pub mod verify;

pub use error::Error;
pub use families::{FamilyId, FamilyName, XPoly};
pub use qkernel::{KernelError, MPoly, Monomial, RatFunc, Rational, Var};
pub use qseries::{TruncSeries, ZParam};
