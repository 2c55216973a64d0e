//! Independent GL₁ oracle: literal zeta integrals over `F_q((t))`, ideal
//! generators, Fourier transform and ε extraction.

pub mod field;
pub mod gl1;
pub mod local;
pub mod oracle;
pub mod poly;

pub use field::{adic_zeta, recognize_q_zeta, reduce_zeta, Cyclotomic, CyclotomicField, Field, ModField, Rationals};
pub use gl1::{gl1_catalog, zeta_order, Gl1Datum};
pub use local::{fourier, fourier_inversion_holds, LocalElem, ResidueField, TestFunction};
pub use oracle::{
    epsilon_extract, gamma_rational, rs_series, shell_coefficient, tate_l_via_ideal, Character, EpsilonReport, IdealCertificate, Model, Series,
};
