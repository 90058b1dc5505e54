//! Matrix Lie algebra gl_n over constants and over Laurent series.

mod birkhoff;
mod constmat;
mod exp;
mod gauge;
mod jordan;
pub mod linalg;
mod matseries;
mod sl2;
mod solve;
mod subalgebra;

pub use birkhoff::{birkhoff_factor, Birkhoff};
pub use constmat::ConstMat;
pub use exp::{exp_to, exp_trunc, log_unipotent};
pub use gauge::{cochar_matrix, gauge, gauge_mode, Factor, GaugeWord};
pub use jordan::{charpoly, diagonalize, is_semisimple, jordan_chevalley, rational_eigenvalues, rational_roots, squarefree_part};
pub use matseries::MatSeries;
pub use sl2::{jacobson_morozov, Sl2Triple};
pub use solve::solve_commutator;
pub use subalgebra::{CenterSplit, Subalgebra};
