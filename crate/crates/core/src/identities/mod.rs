//! Executable statements: both sides of each relation as diagrams, a grid of
//! parameters per relation, and a verifier that compares reduced forms and
//! cross-checks them in the polynomial representation.

mod builders;
mod spec;
mod verify;

pub use builders::{
    build_flatten_minus, build_flatten_plus, build_thick_r2, build_thick_r3, digon, exploded, lookup, registry,
    reversed_sign,
};
pub use spec::{BuildFn, Case, GridConfig, GridFn, IdentitySpec, Params, Side, Value};
pub use verify::{
    calibrate_orientation, check_tuple, verify, EngineConfig, SignConfig, Summary, TupleOutcome, VerificationReport,
    VerifyOptions,
};
