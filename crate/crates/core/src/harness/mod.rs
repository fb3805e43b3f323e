//! Exhaustive enumeration, brute-force verification runs, and decision
//! tables for the surgery theorems.

mod connectivity;
mod enumerate;
mod report;
mod scenario;
mod verify;

pub use enumerate::{enumerate_gabai_graphs, enumerate_with_codes};
pub use report::{Failure, VerificationReport};
pub use verify::{
    verify_lambda_cycle_existence, verify_lambda_cycles_bounded, verify_lambda_cycles_on, verify_scharlemann_bounded,
    verify_scharlemann_existence, verify_scharlemann_on,
};
pub use scenario::{
    check_surgery_inequality, scenario_report, Conclusion, Flag, Flags, Inequality, Scenario, ScenarioKind,
};
pub use connectivity::{
    check_dichotomy, verify_connectivity_dichotomy, ConnectivityConfig, ConnectivityInstance, Curve, DichotomyCheck,
    PieceGroup,
};
