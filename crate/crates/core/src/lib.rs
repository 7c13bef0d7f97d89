//! Exact computations with graded affine Hecke algebras: intertwining
//! elements, invariant hermitian forms on induced modules, Jantzen
//! filtrations and hermitian Kazhdan–Lusztig polynomials.

pub mod error;
pub mod exactfield;
pub mod heckealg;
pub mod jantzen;
pub mod langdata;
pub mod modforms;
pub mod rootsys;
pub mod verify;
pub mod wchars;
pub mod weyl;

pub use error::{Error, Result};
pub use exactfield::{Matrix, QMatrix, RatFun, RatMatrix, UniPoly, Q};
pub use heckealg::{HeckeAlgebra, HeckeElement, LineContext, LineScalar};
pub use jantzen::{dvr_diagonalize, JantzenReport, Signature};
pub use langdata::{f_decompose, hkl_regular, HklPoly, LanglandsDatum, RegularTable};
pub use modforms::{BasisKind, GramFamily, InducedDatum, InducedModule, Normalization, SigmaKind};
pub use rootsys::RootSystem;
pub use verify::{Check, Report};
pub use wchars::CharTable;
pub use weyl::{WeylElement, WeylGroup};
