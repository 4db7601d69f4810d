//! Robust topology optimization of 2-D structures under load uncertainty.
//!
//! The library minimizes a weighted sum of the mean and standard deviation of
//! structural compliance over polygonal (centroidal Voronoi) finite element
//! meshes. Uncertain loads are described by independent random variables or by
//! a Karhunen–Loève discretization of a Gaussian load field; statistics are
//! propagated non-intrusively, either by polynomial chaos regression on a
//! tensor Gauss collocation grid or by Monte Carlo sampling.
//!
//! Modules follow the pipeline:
//!
//! * [`mesh`] — centroidal Voronoi tessellation of 2-D domains, boundary
//!   tagging, mesh persistence.
//! * [`fem`] — polygonal finite elements (Wachspress / mean-value shape
//!   functions), SIMP-interpolated assembly, sparse Cholesky solves,
//!   compliance and its design sensitivity.
//! * [`topopt`] — density filter, volume constraint, OC and MMA updates.
//! * [`stochastic`] — germ definition, orthonormal polynomial bases, Gauss
//!   collocation grids, chaos regression, statistical estimators, Monte Carlo.
//! * [`randfield`] — correlation models and Karhunen–Loève decomposition of
//!   1-D boundary load fields.
//! * [`rto`] — the robust optimization driver tying everything together.
//!
//! All numerics are generic over the scalar type through [`scalar::Real`];
//! the `*64` aliases below fix `f64`, which is what the command line tool and
//! the test suites use.

pub mod fem;
pub mod mesh;
pub mod randfield;
pub mod rto;
pub mod scalar;
pub mod stochastic;
pub mod topopt;

pub use scalar::Real;

pub type Domain2D64 = mesh::Domain2D<f64>;
pub type PolyMesh64 = mesh::PolyMesh<f64>;
pub type Material64 = fem::Material<f64>;
pub type BoundaryConditions64 = fem::BoundaryConditions<f64>;
pub type SimpParams64 = topopt::SimpParams<f64>;
pub type DensityField64 = topopt::DensityField<f64>;
pub type Germ64 = stochastic::Germ<f64>;
pub type PcExpansion64 = stochastic::PcExpansion<f64>;
pub type CorrelationModel64 = randfield::CorrelationModel<f64>;
pub type KlBasis64 = randfield::KlBasis<f64>;
pub type LoadModel64 = rto::LoadModel<f64>;
pub type RtoProblem64 = rto::RtoProblem<f64>;
pub type RtoResult64 = rto::RtoResult<f64>;
