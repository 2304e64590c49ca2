//! Graph problems: the registry with each problem's classification, exact
//! solvers, and certificate checks.

mod budget;
mod certificate;
mod registry;
mod solve;
mod solvers;

pub use budget::{Budget, DEFAULT_SOLVER_BUDGET};
pub use certificate::{verify_certificate, verify_red_blue_certificate, Certificate};
pub use registry::{lookup, registry, Case, Leaf, ParamRole, ProblemKind, ProblemSpec, Support};
pub use solve::{solve, solve_instance, solve_red_blue, Verdict};
