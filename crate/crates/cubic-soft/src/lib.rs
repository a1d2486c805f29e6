//! The complete algebra of cubic soft sets over a finite universe —
//! interval-valued-fuzzy plus fuzzy grades indexed by parameters — with
//! internal/external classification and an exhaustive/randomized
//! verification engine for the closure theorems.
//!
//! All arithmetic is exact rational arithmetic; there is no floating-point
//! path anywhere. Values are immutable after construction and every
//! operation is a pure function, so everything here is safe to share
//! across threads.
//!
//! Modules:
//! - [`rational`]: exact unit-interval numbers and their text forms
//! - [`model`]: intervals, grades, parameters, cubic soft sets
//! - [`document`]: the JSON document format
//! - [`algebra`]: orders, unions/intersections, products, complement, star swap
//! - [`classify`]: ICSS/ECSS predicates and the theorem registry
//! - [`verify`]: campaign runner and the order-property suite

pub mod algebra;
pub mod classify;
pub mod document;
pub mod model;
pub mod rational;
pub mod verify;

pub use algebra::{CombineKind, CompatError, OrderKind, ProductKind};
pub use classify::{BracketReading, CellRef, Classification, TheoremId};
pub use document::{load_cubic_soft_set, serialize_cubic_soft_set, CssDocument, DocumentError};
pub use model::{make_grade, ConstantKind, CubicGrade, CubicSoftSet, Interval, ParameterId};
pub use rational::{NumberError, UnitRational};
pub use verify::{
    check_theorem, run_campaign, CampaignMode, CampaignReport, GridSpec, RandomSpec,
    TheoremVerdict,
};
