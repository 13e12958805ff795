//! Special functions: complex Gamma, Gauss ₂F₁, Jacobi and Legendre
//! functions, Harish-Chandra c-function.

pub mod cfunction;
pub mod gamma;
pub mod hyp2f1;
pub mod jacobi;
pub mod legendre;

pub use cfunction::{c_function, c_inverse_square, jacobi_c, jacobi_density};
pub use gamma::{gamma_complex, gamma_real, ln_gamma_complex, pochhammer};
pub use hyp2f1::{hyp2f1, hyp2f1_derivative, hyp2f1_many, hyp2f1_with_derivative, Hyp2f1Value};
pub use jacobi::{
    jacobi_phi, jacobi_phi_many, jacobi_phi_many_with_derivative, jacobi_phi_with_derivative, JacobiParams,
};
pub use legendre::legendre_p;
