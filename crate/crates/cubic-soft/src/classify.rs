//! ICSS/ECSS classification, the two structural theorems about boundary
//! grades, and the hypothesis predicates of every closure theorem.
//!
//! A set is internal (ICSS) when `A⁻(x) <= λ(x) <= A⁺(x)` at every cell and
//! external (ECSS) when `λ(x)` avoids the *open* interval `(A⁻(x), A⁺(x))`
//! at every cell. Boundary equality therefore counts as external, and a
//! degenerate `<[a,a],a>` cell is both at once.
//!
//! Four of the conditional closure theorems constrain a fuzzy value to lie
//! between
//!
//! ```text
//! β = max{ min{A⁺,B⁻}, min{A⁻,B⁺} }   and   α = min{ max{A⁺,B⁻}, max{A⁻,B⁺} }
//! ```
//!
//! (for valid intervals `β <= α` always). The theorem statements leave it
//! ambiguous which endpoint of that condition set is included, so endpoint
//! inclusion is selected by a [`BracketReading`]: `AsWritten` follows each
//! theorem's stated brackets, `OpenOpen` and `ClosedClosed` exclude or
//! include both endpoints. The verification engine measures all three
//! rather than guessing.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{self, CompatError};
use crate::model::{CubicGrade, CubicSoftSet, ParameterId};
use crate::rational::UnitRational;

/// A (parameter, element) cell reference used in witnesses and diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRef {
    pub parameter: String,
    pub element: String,
}

impl CellRef {
    fn new(p: &ParameterId, x: &str) -> Self {
        CellRef {
            parameter: p.display_key(),
            element: x.to_string(),
        }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.parameter, self.element)
    }
}

/// Outcome of classifying one cubic soft set, with every violating cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub internal: bool,
    pub external: bool,
    pub internal_violations: Vec<CellRef>,
    pub external_violations: Vec<CellRef>,
}

/// Classifies `f` as internal and/or external, listing every failing cell
/// in (parameter-order, universe-order) sequence.
pub fn classify(f: &CubicSoftSet) -> Classification {
    let mut internal_violations = Vec::new();
    let mut external_violations = Vec::new();
    for (p, x, g) in f.cells() {
        if !g.is_internal() {
            internal_violations.push(CellRef::new(p, x));
        }
        if !g.is_external() {
            external_violations.push(CellRef::new(p, x));
        }
    }
    Classification {
        internal: internal_violations.is_empty(),
        external: external_violations.is_empty(),
        internal_violations,
        external_violations,
    }
}

/// If `f` is not external, produces a cell whose fuzzy degree lies strictly
/// inside its interval; if `f` is external there is none.
pub fn theorem1_witness(f: &CubicSoftSet) -> Option<CellRef> {
    f.cells()
        .find(|(_, _, g)| g.ivf.contains_strictly(g.fuzzy))
        .map(|(p, x, _)| CellRef::new(p, x))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("NotBothInternalExternal: the set must classify as both ICSS and ECSS")]
    NotBothInternalExternal,
}

/// Per-cell detail for the boundary-membership check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCell {
    pub cell: CellRef,
    /// `λ(x)` appears among `{A⁺(y)} ∪ {A⁻(y)}` over the whole universe
    /// for this parameter.
    pub in_endpoint_sets: bool,
    /// The stronger fact: `λ(x)` equals this very cell's `A⁻(x)` or
    /// `A⁺(x)`.
    pub at_own_endpoint: bool,
}

/// Result of checking boundary membership on a set that is both ICSS and
/// ECSS.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    pub holds: bool,
    pub pointwise_holds: bool,
    pub cells: Vec<BoundaryCell>,
}

/// For a set that is both ICSS and ECSS, verifies that every fuzzy value
/// is an interval endpoint: against the parameter-wide endpoint sets as
/// stated, and against the cell's own endpoints as the strictly stronger
/// per-point form. Errors if the set is not both.
pub fn theorem2_boundary_check(f: &CubicSoftSet) -> Result<BoundaryCheck, ClassifyError> {
    let c = classify(f);
    if !(c.internal && c.external) {
        return Err(ClassifyError::NotBothInternalExternal);
    }
    let mut cells = Vec::new();
    for (pi, p) in f.params().iter().enumerate() {
        for (xi, x) in f.universe().iter().enumerate() {
            let g = f.grade_at(pi, xi);
            let in_sets = f.universe().iter().enumerate().any(|(yi, _)| {
                let other = f.grade_at(pi, yi);
                g.fuzzy == other.ivf.lo() || g.fuzzy == other.ivf.hi()
            });
            let at_own = g.fuzzy == g.ivf.lo() || g.fuzzy == g.ivf.hi();
            cells.push(BoundaryCell {
                cell: CellRef::new(p, x),
                in_endpoint_sets: in_sets,
                at_own_endpoint: at_own,
            });
        }
    }
    Ok(BoundaryCheck {
        holds: cells.iter().all(|c| c.in_endpoint_sets),
        pointwise_holds: cells.iter().all(|c| c.at_own_endpoint),
        cells,
    })
}

/// The registry of closure theorems the verification engine checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    PuIcss,
    PiIcss,
    CompIcss,
    CompEcss,
    RuIcss,
    RiIcss,
    StarPuIcss,
    StarPiIcss,
    StarPuEcss,
    PiEcss,
    PiBoth,
    PuEcss,
    RuEcss,
    RiEcss,
    RiBoth,
    IcssRuEcss,
    IcssRiEcss,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::PuIcss,
        TheoremId::PiIcss,
        TheoremId::CompIcss,
        TheoremId::CompEcss,
        TheoremId::RuIcss,
        TheoremId::RiIcss,
        TheoremId::StarPuIcss,
        TheoremId::StarPiIcss,
        TheoremId::StarPuEcss,
        TheoremId::PiEcss,
        TheoremId::PiBoth,
        TheoremId::PuEcss,
        TheoremId::RuEcss,
        TheoremId::RiEcss,
        TheoremId::RiBoth,
        TheoremId::IcssRuEcss,
        TheoremId::IcssRiEcss,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            TheoremId::PuIcss => "T-PU-ICSS",
            TheoremId::PiIcss => "T-PI-ICSS",
            TheoremId::CompIcss => "T-COMP-ICSS",
            TheoremId::CompEcss => "T-COMP-ECSS",
            TheoremId::RuIcss => "T-RU-ICSS",
            TheoremId::RiIcss => "T-RI-ICSS",
            TheoremId::StarPuIcss => "T-STAR-PU-ICSS",
            TheoremId::StarPiIcss => "T-STAR-PI-ICSS",
            TheoremId::StarPuEcss => "T-STAR-PU-ECSS",
            TheoremId::PiEcss => "T-PI-ECSS",
            TheoremId::PiBoth => "T-PI-BOTH",
            TheoremId::PuEcss => "T-PU-ECSS",
            TheoremId::RuEcss => "T-RU-ECSS",
            TheoremId::RiEcss => "T-RI-ECSS",
            TheoremId::RiBoth => "T-RI-BOTH",
            TheoremId::IcssRuEcss => "T-ICSS-RU-ECSS",
            TheoremId::IcssRiEcss => "T-ICSS-RI-ECSS",
        }
    }

    /// Number of operands: complement theorems take one, all others two.
    pub fn arity(&self) -> usize {
        match self {
            TheoremId::CompIcss | TheoremId::CompEcss => 1,
            _ => 2,
        }
    }

    /// Theorems whose hypothesis contains the endpoint-ambiguous interval
    /// condition.
    pub fn bracket_sensitive(&self) -> bool {
        matches!(
            self,
            TheoremId::PiEcss | TheoremId::PuEcss | TheoremId::RuEcss | TheoremId::RiEcss
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.code() == s)
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Endpoint-inclusion policy for the interval-condition hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketReading {
    /// Follow each theorem's printed brackets.
    AsWritten,
    /// Exclude both endpoints.
    OpenOpen,
    /// Include both endpoints.
    ClosedClosed,
}

impl BracketReading {
    pub const ALL: [BracketReading; 3] = [
        BracketReading::AsWritten,
        BracketReading::OpenOpen,
        BracketReading::ClosedClosed,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            BracketReading::AsWritten => "as-written",
            BracketReading::OpenOpen => "open-open",
            BracketReading::ClosedClosed => "closed-closed",
        }
    }
}

impl fmt::Display for BracketReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for BracketReading {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BracketReading::ALL
            .iter()
            .copied()
            .find(|r| r.code() == s)
            .ok_or_else(|| format!("unknown bracket interpretation {s:?}"))
    }
}

impl Serialize for BracketReading {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for BracketReading {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Errors raised while evaluating a theorem over concrete operands.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Compat(#[from] CompatError),
    #[error("{id} takes {expected} operand(s)")]
    Arity { id: TheoremId, expected: usize },
}

/// Hypothesis evaluation result with diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub holds: bool,
    /// Cells whose interval condition set was empty under the chosen
    /// reading; the hypothesis is false there by fiat.
    pub vacuous_cells: Vec<CellRef>,
}

/// Endpoints of the interval condition: `β <= α` for any valid intervals.
fn condition_endpoints(a: &CubicGrade, b: &CubicGrade) -> (UnitRational, UnitRational) {
    let (am, ap) = (a.ivf.lo(), a.ivf.hi());
    let (bm, bp) = (b.ivf.lo(), b.ivf.hi());
    let alpha = ap.max(bm).min(am.max(bp));
    let beta = ap.min(bm).max(am.min(bp));
    (beta, alpha)
}

/// Which endpoints the printed brackets include, per theorem:
/// T-PI-ECSS and T-RI-ECSS print `[α …, β …)`, closing the upper endpoint
/// `α`; T-PU-ECSS and T-RU-ECSS print `(α …, β …]`, closing the lower
/// endpoint `β`.
fn as_written_flags(id: TheoremId) -> (bool, bool) {
    match id {
        TheoremId::PiEcss | TheoremId::RiEcss => (false, true),
        TheoremId::PuEcss | TheoremId::RuEcss => (true, false),
        _ => unreachable!("only bracket-sensitive theorems carry brackets"),
    }
}

/// Membership of `t` in the condition set between `β` and `α`. Returns
/// `(member, empty)`; an empty set means the cell is vacuous and the
/// hypothesis fails there.
fn in_condition_set(
    t: UnitRational,
    beta: UnitRational,
    alpha: UnitRational,
    lo_closed: bool,
    hi_closed: bool,
) -> (bool, bool) {
    if beta > alpha {
        return (false, true);
    }
    let empty = beta == alpha && !(lo_closed && hi_closed);
    let lo_ok = if lo_closed { t >= beta } else { t > beta };
    let hi_ok = if hi_closed { t <= alpha } else { t < alpha };
    (lo_ok && hi_ok, empty)
}

fn check_arity(id: TheoremId, g: Option<&CubicSoftSet>) -> Result<(), TheoremError> {
    let expected = id.arity();
    let got = if g.is_some() { 2 } else { 1 };
    if expected != got {
        return Err(TheoremError::Arity { id, expected });
    }
    Ok(())
}

/// Evaluates a theorem's hypothesis on concrete operands.
///
/// Cell conditions quantify over the shared parameters and the shared
/// universe; classwide requirements (ICSS/ECSS of an operand) quantify over
/// that operand's whole table.
pub fn hypothesis(
    id: TheoremId,
    f: &CubicSoftSet,
    g: Option<&CubicSoftSet>,
    reading: BracketReading,
) -> Result<bool, TheoremError> {
    hypothesis_report(id, f, g, reading).map(|r| r.holds)
}

/// As [`hypothesis`], also reporting cells with empty condition sets.
pub fn hypothesis_report(
    id: TheoremId,
    f: &CubicSoftSet,
    g: Option<&CubicSoftSet>,
    reading: BracketReading,
) -> Result<HypothesisReport, TheoremError> {
    check_arity(id, g)?;
    let ok = |holds| {
        Ok(HypothesisReport {
            holds,
            vacuous_cells: Vec::new(),
        })
    };
    let g = match g {
        None => {
            return match id {
                TheoremId::CompIcss => ok(classify(f).internal),
                TheoremId::CompEcss => ok(classify(f).external),
                _ => unreachable!("arity checked"),
            };
        }
        Some(g) => g,
    };
    if !f.same_universe(g) {
        return Err(CompatError::UniverseMismatch.into());
    }

    // Pointwise conditions over shared parameters.
    let shared: Vec<&ParameterId> = f
        .params()
        .iter()
        .filter(|p| g.param_index(p).is_some())
        .collect();
    let each_shared_cell = |pred: &dyn Fn(&CubicGrade, &CubicGrade) -> bool| -> bool {
        shared.iter().all(|p| {
            f.universe().iter().all(|x| {
                let a = f.grade(p, x).expect("own cell");
                let b = g.grade(p, x).expect("shared universe");
                pred(a, b)
            })
        })
    };

    match id {
        TheoremId::PuIcss | TheoremId::PiIcss => {
            ok(classify(f).internal && classify(g).internal)
        }
        TheoremId::RuIcss => ok(classify(f).internal
            && classify(g).internal
            && each_shared_cell(&|a, b| a.ivf.lo().max(b.ivf.lo()) <= a.fuzzy.min(b.fuzzy))),
        TheoremId::RiIcss => ok(classify(f).internal
            && classify(g).internal
            && each_shared_cell(&|a, b| a.ivf.hi().min(b.ivf.hi()) >= a.fuzzy.max(b.fuzzy))),
        TheoremId::IcssRuEcss => ok(classify(f).internal
            && classify(g).internal
            && each_shared_cell(&|a, b| a.fuzzy.min(b.fuzzy) <= a.ivf.lo().max(b.ivf.lo()))),
        TheoremId::IcssRiEcss => ok(classify(f).internal
            && classify(g).internal
            && each_shared_cell(&|a, b| a.fuzzy.max(b.fuzzy) >= a.ivf.hi().min(b.ivf.hi()))),
        TheoremId::StarPuIcss | TheoremId::StarPiIcss => {
            let (fs, gs) = algebra::star_swap(f, g)?;
            ok(classify(f).external
                && classify(g).external
                && classify(&fs).internal
                && classify(&gs).internal)
        }
        TheoremId::StarPuEcss => {
            let (fs, gs) = algebra::star_swap(f, g)?;
            ok(classify(f).external
                && classify(g).external
                && classify(&fs).external
                && classify(&gs).external)
        }
        TheoremId::PiBoth | TheoremId::RiBoth => {
            let holds = each_shared_cell(&|a, b| {
                let (beta, alpha) = condition_endpoints(a, b);
                let t = if id == TheoremId::PiBoth {
                    a.fuzzy.min(b.fuzzy)
                } else {
                    a.fuzzy.max(b.fuzzy)
                };
                alpha == t && t == beta
            });
            ok(holds)
        }
        TheoremId::PiEcss | TheoremId::PuEcss | TheoremId::RuEcss | TheoremId::RiEcss => {
            if !(classify(f).external && classify(g).external) {
                return ok(false);
            }
            let (lo_closed, hi_closed) = match reading {
                BracketReading::AsWritten => as_written_flags(id),
                BracketReading::OpenOpen => (false, false),
                BracketReading::ClosedClosed => (true, true),
            };
            let mut vacuous_cells = Vec::new();
            let mut holds = true;
            for p in &shared {
                for x in f.universe() {
                    let a = f.grade(p, x).expect("own cell");
                    let b = g.grade(p, x).expect("shared universe");
                    let t = match id {
                        TheoremId::PiEcss | TheoremId::RuEcss => a.fuzzy.min(b.fuzzy),
                        _ => a.fuzzy.max(b.fuzzy),
                    };
                    let (beta, alpha) = condition_endpoints(a, b);
                    let (member, empty) = in_condition_set(t, beta, alpha, lo_closed, hi_closed);
                    if empty {
                        vacuous_cells.push(CellRef::new(p, x));
                    }
                    if !member {
                        holds = false;
                    }
                }
            }
            Ok(HypothesisReport {
                holds,
                vacuous_cells,
            })
        }
        TheoremId::CompIcss | TheoremId::CompEcss => unreachable!("arity checked"),
    }
}
