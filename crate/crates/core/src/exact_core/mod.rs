//! Exact rational linear algebra for the matrix `M` of the zero/pole argument
//! and the polynomial matrix `D_n(α, β)` of the row/column-reduction argument.
//!
//! Everything is generic over `Ratio<I>`; [`crate::BigRational`] is the
//! instantiation used in practice, while `Ratio<i64>` is handy for tiny cases.

mod elimination;
mod factorial;
mod formulas;
mod matrices;

pub use elimination::{bareiss_det, bareiss_det_integral, rational_rank};
pub use factorial::{falling_factorial, rising_factorial};
pub use formulas::{d_closed_form, m_det_from_d, m_product_formula};
pub use matrices::{build_d_matrix, build_m_matrix, m_entry};
