//! Reduction engines, the main loop, and the decision procedures built on them.

mod boalch;
mod borel;
mod common;
mod full;
mod nilpotent;
mod regular;
mod semisimple;
mod springer;
mod transport;

pub use semisimple::{reduce_multi_semisimple, reduce_semisimple_commute, reduce_to_cartan};
pub use nilpotent::{reduce_nilpotent_center, shear, shear_parameters, splitting_invariants};
pub use boalch::{boalch_normalize, deligne_twist, logarithmic};
pub use full::{default_ramification_cap, full_reduce, slope, Budget, FormClass, ReductionReport, Snapshot};
pub use regular::{is_regular, relative_regularity_check, witness_holds, RegularityVerdict, RelativeRegularity};
pub use borel::{borel_reduce, is_borel_shaped};
pub use springer::{springer_bound, springer_tangent_dim};
pub use transport::nilpotency_transport_check;
