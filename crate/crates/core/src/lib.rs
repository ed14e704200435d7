//! Exact verification and construction toolkit for representable Hopf polyads,
//! i.e. Hopf polyalgebras (and Hopf categories) given by structure constants
//! over the rationals or a prime field.
//!
//! A polyalgebra over a finite category `D` assigns a finite-dimensional space
//! `M_a` to each morphism `a`, products `m_{a,b}: M_a ⊗ M_b -> M_{ab}` to
//! composable pairs and units `u_i: k -> M_{id_i}` to objects. The associated
//! polyad acts by `T_a = M_a ⊗ -`. Everything here is exact linear algebra.

pub mod error;
pub mod field;
pub mod fincat;
pub mod fixtures;
pub mod hopfstruct;
pub mod io;
pub mod lift;
pub mod matrix;
pub mod modrep;
pub mod par;
pub mod polyalg;
pub mod random;
pub mod report;
pub mod rmatrix;
pub mod space;
pub mod wrapup;

pub use error::PolyadError;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use fincat::{FinCategory, FunctorData, Mor, Obj};
pub use matrix::{Matrix, NotInvertible};
pub use polyalg::{Polyalgebra, Polybialgebra, Side};
pub use report::{Check, Report};
pub use space::LabeledSpace;
