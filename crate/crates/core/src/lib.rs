//! Exact computation of equivariant Poincaré duals (Thom polynomials) of
//! coincident root loci in the space of binary forms, and of the cohomology
//! rings of the associated GIT quotients.
//!
//! Every computation is exact over the rationals. The library is organized
//! bottom-up:
//!
//! - [`arith`]: rationals and dense linear algebra over Q;
//! - [`poly`]: homogeneous forms in the Chern roots `u`, `v`, the divided
//!   difference and the symmetric basis `c1`, `c2`;
//! - [`equivariant`]: the truncated rings `R[x_1..x_r]/(Q_{e_i}(x_i))`,
//!   reduction, integration and the pullback of `q`;
//! - [`thom`]: Thom polynomials by three independent algorithms plus the
//!   closed forms;
//! - [`moduli`]: graded ideals in `Q[c1, c2]`, Poincaré series and ring
//!   presentations of the moduli spaces.

pub mod arith;
pub mod equivariant;
pub mod moduli;
pub mod partition;
pub mod poly;
pub mod thom;

pub use arith::{RatMatrix, Rational};
pub use partition::Partition;
pub use poly::{BiForm, SymForm};
pub use thom::ThomPoly;
