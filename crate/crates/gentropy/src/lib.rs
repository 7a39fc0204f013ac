//! Entropy functions induced by finite groups and subgroups.
//!
//! A tuple `(G, G_1, ..., G_n)` of a finite group and n subgroups induces
//! n random variables (the left-coset indices of a uniform group element)
//! whose joint entropies are `log |G| / |G_1 ∩ ... ∩ G_k|` on every subset
//! of variables.  This crate computes those entropy vectors exactly (as
//! integer coset indices, so every linear inequality with rational
//! coefficients is decided in big-integer arithmetic with no tolerances),
//! cross-checks them against a plain Shannon-entropy oracle on the induced
//! joint distribution, and layers on:
//!
//! - operations on characterizations: sums, conditioning, functional
//!   dependency and independence tests ([`entropy`], [`dist`]);
//! - abelian-specific structure: Gács–Körner common information, join
//!   extensions, the Δ decomposition, pseudo-abelian testing ([`dist`]);
//! - linear characterizations over prime fields and the rank/entropy
//!   duality via orthogonal complements ([`linear`]);
//! - inequality suites (elemental Shannon, Ingleton, Zhang–Yeung) with
//!   exact evaluation on group points ([`ineq`]);
//! - exact rational polyhedral cones with Fourier–Motzkin projection
//!   ([`cone`]);
//! - extension constraint sets (adhesive, join, Slepian–Wolf, Markov) and
//!   the extend–intersect–project bounding pipeline ([`extension`]).

pub mod cone;
pub mod dist;
pub mod entropy;
pub mod extension;
pub mod group;
pub mod ineq;
pub mod linear;
mod simplex;
pub mod varset;

pub use cone::{Cone, ProjectionSpec};
pub use dist::{CommonInformation, JointDistribution};
pub use entropy::{EntropyVector, RationalEntropyVector, RealEntropyVector};
pub use extension::{AdhesiveWitness, ExtensionKind, ExtensionSpec};
pub use group::{FiniteGroup, GroupCharacterization, Subgroup};
pub use ineq::{InequalityReport, LinearFunctional, Sign};
pub use linear::{LinearCharacterization, Subspace};
pub use varset::VarSet;
