//! Exact-arithmetic kernel: rationals, rational matrices, scalar and matrix
//! polynomials in x, and Laurent polynomials in `s = x^(1/2)`.

pub mod laurent;
pub mod mat;
pub mod matpoly;
pub mod poly;
pub mod rat;

pub use laurent::{hl, HalfLaurentMatrix, HalfLaurentPoly};
pub use mat::Mat;
pub use matpoly::MatrixPolynomial;
pub use poly::Poly;
pub use rat::{fmt_rat, parse_rat, r, ri, to_f64, Rat};
