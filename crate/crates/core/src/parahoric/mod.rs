//! Weights, parahoric filtrations, residues and the Θ-representation.

mod connection;
mod equivariance;
mod filtration;
pub mod graded;
mod theta;
mod weight;

pub use connection::Connection;
pub use equivariance::residue_equivariance_check;
pub use filtration::{depth_at, filtration_member, moy_prasad_member, residue, residue0, Kind};
pub use theta::{theta_order, theta_rep, ThetaRep, ThetaTerm};
pub use weight::{iwahori_weight, Weight};

/// `θ_a − θ_b`.
pub fn grading(w: &Weight, a: usize, b: usize) -> crate::series::Rat {
    w.grading(a, b)
}
