//! Domain types: intervals, cubic grades, parameters, and cubic soft sets.
//!
//! A cubic soft set pairs an ordered universe of element labels with an
//! ordered list of parameters and assigns every (parameter, element) cell a
//! [`CubicGrade`]: an interval-valued membership degree together with an
//! ordinary fuzzy degree. Totality is structural here: grades live in a
//! dense row-major matrix, so a constructed set cannot have missing cells.
//!
//! Universe and parameter lists are ordered only to make serialization
//! deterministic; the ordering carries no algebraic meaning. Empty
//! universes and empty parameter lists are both legal (every classification
//! predicate then holds vacuously).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{NumberError, UnitRational};

/// Construction errors for grades and cubic soft sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("InvertedInterval: lo {lo} exceeds hi {hi}")]
    InvertedInterval { lo: UnitRational, hi: UnitRational },
    #[error("DuplicateParameter: {0:?}")]
    DuplicateParameter(String),
    #[error("DuplicateElement: {0:?}")]
    DuplicateElement(String),
    #[error("MissingGrade: no grade for ({param},{element})")]
    MissingGrade { param: String, element: String },
    #[error("grade matrix has {got} cells, expected {expected}")]
    GradeCount { expected: usize, got: usize },
    #[error("{0}")]
    Number(#[from] NumberError),
}

/// An interval-valued fuzzy membership degree `[lo, hi]` inside `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: UnitRational,
    hi: UnitRational,
}

impl Interval {
    pub fn new(lo: UnitRational, hi: UnitRational) -> Result<Self, ModelError> {
        if lo > hi {
            return Err(ModelError::InvertedInterval { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// Degenerate interval `[v, v]`.
    pub fn point(v: UnitRational) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn lo(&self) -> UnitRational {
        self.lo
    }

    pub fn hi(&self) -> UnitRational {
        self.hi
    }

    /// Strict interior test: `lo < v < hi`.
    pub fn contains_strictly(&self, v: UnitRational) -> bool {
        self.lo < v && v < self.hi
    }

    /// Closed membership test: `lo <= v <= hi`.
    pub fn contains_closed(&self, v: UnitRational) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// `[1 - hi, 1 - lo]`; order is preserved so the result is valid.
    #[must_use]
    pub fn complement(&self) -> Self {
        Interval {
            lo: self.hi.one_minus(),
            hi: self.lo.one_minus(),
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// One table cell: an interval degree paired with a fuzzy degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubicGrade {
    pub ivf: Interval,
    pub fuzzy: UnitRational,
}

impl CubicGrade {
    pub fn new(ivf: Interval, fuzzy: UnitRational) -> Self {
        CubicGrade { ivf, fuzzy }
    }

    /// The fuzzy degree sits within the closed interval.
    pub fn is_internal(&self) -> bool {
        self.ivf.contains_closed(self.fuzzy)
    }

    /// The fuzzy degree lies outside the open interval; boundary equality
    /// counts as external, so a degenerate `<[a,a],a>` cell is both.
    pub fn is_external(&self) -> bool {
        !self.ivf.contains_strictly(self.fuzzy)
    }
}

impl fmt::Debug for CubicGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?},{}>", self.ivf, self.fuzzy)
    }
}

/// Builds a grade from raw bounds, rejecting inverted intervals.
pub fn make_grade(
    lo: UnitRational,
    hi: UnitRational,
    fuzzy: UnitRational,
) -> Result<CubicGrade, ModelError> {
    Ok(CubicGrade::new(Interval::new(lo, hi)?, fuzzy))
}

/// A parameter, possibly negated.
///
/// Negation is a flag rather than a name prefix, so a parameter literally
/// named `"¬e1"` can never collide with the negation of `"e1"`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParameterId {
    pub name: String,
    #[serde(default)]
    pub negated: bool,
}

impl ParameterId {
    pub fn plain(name: impl Into<String>) -> Self {
        ParameterId {
            name: name.into(),
            negated: false,
        }
    }

    pub fn new(name: impl Into<String>, negated: bool) -> Self {
        ParameterId {
            name: name.into(),
            negated,
        }
    }

    /// Flips the negation flag; an involution.
    #[must_use]
    pub fn negate(&self) -> Self {
        ParameterId {
            name: self.name.clone(),
            negated: !self.negated,
        }
    }

    /// Pair parameter `(a,b)` used by the four product operations. The
    /// components keep their own negation flags inside the rendered name;
    /// the pair itself starts unnegated.
    pub fn pair(a: &ParameterId, b: &ParameterId) -> Self {
        ParameterId {
            name: format!("({},{})", a.display_key(), b.display_key()),
            negated: false,
        }
    }

    /// Rendered form used as the key in serialized grade tables: the name,
    /// prefixed with `¬` when negated.
    pub fn display_key(&self) -> String {
        if self.negated {
            format!("¬{}", self.name)
        } else {
            self.name.clone()
        }
    }
}

impl fmt::Display for ParameterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_key())
    }
}

impl fmt::Debug for ParameterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_key())
    }
}

/// The constant cubic soft sets singled out in the base definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantKind {
    /// Every cell `<[0,0],1>`.
    DdotZero,
    /// Every cell `<[1,1],0>`.
    DdotOne,
    /// Every cell `<[0,0],0>`.
    HatZero,
    /// Every cell `<[1,1],1>`.
    HatOne,
}

impl ConstantKind {
    pub fn grade(&self) -> CubicGrade {
        let (iv, d) = match self {
            ConstantKind::DdotZero => (UnitRational::ZERO, UnitRational::ONE),
            ConstantKind::DdotOne => (UnitRational::ONE, UnitRational::ZERO),
            ConstantKind::HatZero => (UnitRational::ZERO, UnitRational::ZERO),
            ConstantKind::HatOne => (UnitRational::ONE, UnitRational::ONE),
        };
        CubicGrade::new(Interval::point(iv), d)
    }
}

/// A finite mapping `parameter -> (element -> grade)` over a shared
/// universe; the grades matrix is dense, row-major by parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicSoftSet {
    universe: Vec<String>,
    params: Vec<ParameterId>,
    grades: Vec<CubicGrade>,
}

impl CubicSoftSet {
    /// Builds from a dense grade matrix (`params.len() * universe.len()`
    /// cells, parameter-major). Rejects duplicate labels and parameters.
    pub fn new(
        universe: Vec<String>,
        params: Vec<ParameterId>,
        grades: Vec<CubicGrade>,
    ) -> Result<Self, ModelError> {
        check_distinct(&universe, &params)?;
        let expected = params.len() * universe.len();
        if grades.len() != expected {
            return Err(ModelError::GradeCount {
                expected,
                got: grades.len(),
            });
        }
        Ok(CubicSoftSet {
            universe,
            params,
            grades,
        })
    }

    /// Builds cell-by-cell from a closure.
    pub fn build(
        universe: Vec<String>,
        params: Vec<ParameterId>,
        mut cell: impl FnMut(&ParameterId, &str) -> CubicGrade,
    ) -> Result<Self, ModelError> {
        check_distinct(&universe, &params)?;
        let mut grades = Vec::with_capacity(params.len() * universe.len());
        for p in &params {
            for x in &universe {
                grades.push(cell(p, x));
            }
        }
        Ok(CubicSoftSet {
            universe,
            params,
            grades,
        })
    }

    /// One of the constant sets; every cell holds the same grade.
    pub fn constant(
        kind: ConstantKind,
        universe: Vec<String>,
        params: Vec<ParameterId>,
    ) -> Result<Self, ModelError> {
        let g = kind.grade();
        Self::build(universe, params, |_, _| g)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn params(&self) -> &[ParameterId] {
        &self.params
    }

    pub fn param_index(&self, p: &ParameterId) -> Option<usize> {
        self.params.iter().position(|q| q == p)
    }

    pub fn element_index(&self, x: &str) -> Option<usize> {
        self.universe.iter().position(|y| y == x)
    }

    pub fn grade_at(&self, param_idx: usize, elem_idx: usize) -> &CubicGrade {
        &self.grades[param_idx * self.universe.len() + elem_idx]
    }

    pub fn grade(&self, p: &ParameterId, x: &str) -> Option<&CubicGrade> {
        let pi = self.param_index(p)?;
        let xi = self.element_index(x)?;
        Some(self.grade_at(pi, xi))
    }

    /// Cells in deterministic (parameter-order, universe-order) sequence.
    pub fn cells(&self) -> impl Iterator<Item = (&ParameterId, &str, &CubicGrade)> {
        self.params.iter().enumerate().flat_map(move |(pi, p)| {
            self.universe
                .iter()
                .enumerate()
                .map(move |(xi, x)| (p, x.as_str(), self.grade_at(pi, xi)))
        })
    }

    /// True when both sets grade the same element labels, regardless of
    /// the order the labels are listed in.
    pub fn same_universe(&self, other: &CubicSoftSet) -> bool {
        self.universe.len() == other.universe.len()
            && self
                .universe
                .iter()
                .all(|x| other.universe.iter().any(|y| y == x))
    }
}

impl fmt::Debug for CubicSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CubicSoftSet over {:?}", self.universe)?;
        for (pi, p) in self.params.iter().enumerate() {
            write!(f, "  {p}:")?;
            for xi in 0..self.universe.len() {
                write!(f, " {:?}", self.grade_at(pi, xi))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_distinct(universe: &[String], params: &[ParameterId]) -> Result<(), ModelError> {
    for (i, x) in universe.iter().enumerate() {
        if universe[..i].contains(x) {
            return Err(ModelError::DuplicateElement(x.clone()));
        }
    }
    for (i, p) in params.iter().enumerate() {
        if params[..i].contains(p) {
            return Err(ModelError::DuplicateParameter(p.display_key()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> UnitRational {
        UnitRational::parse(text).unwrap()
    }

    #[test]
    fn make_grade_accepts_worked_cell_and_degenerate() {
        let g = make_grade(q("0.3"), q("0.7"), q("0.5")).unwrap();
        assert_eq!(g.ivf.lo(), q("0.3"));
        assert_eq!(g.ivf.hi(), q("0.7"));
        assert_eq!(g.fuzzy, q("0.5"));
        assert!(make_grade(q("0.5"), q("0.5"), q("0.5")).is_ok());
    }

    #[test]
    fn make_grade_rejects_inverted_interval() {
        let err = make_grade(q("0.8"), q("0.2"), q("0.1")).unwrap_err();
        assert!(matches!(err, ModelError::InvertedInterval { .. }));
    }

    #[test]
    fn negation_is_an_involution() {
        let e1 = ParameterId::plain("e1");
        let not_e1 = e1.negate();
        assert!(not_e1.negated);
        assert_eq!(not_e1.name, "e1");
        assert_eq!(not_e1.display_key(), "¬e1");
        assert_eq!(not_e1.negate(), e1);
        let e2 = ParameterId::plain("e2");
        assert_eq!(e2.negate().negate(), e2);
    }

    #[test]
    fn negated_flag_does_not_collide_with_literal_name() {
        let negated = ParameterId::plain("e1").negate();
        let literal = ParameterId::plain("¬e1");
        assert_ne!(negated, literal);
    }

    #[test]
    fn constant_sets_match_their_definitions() {
        let u = vec!["x".to_string()];
        let p = vec![ParameterId::plain("e")];
        let cases = [
            (ConstantKind::DdotZero, "0", "0", "1"),
            (ConstantKind::DdotOne, "1", "1", "0"),
            (ConstantKind::HatZero, "0", "0", "0"),
            (ConstantKind::HatOne, "1", "1", "1"),
        ];
        for (kind, lo, hi, d) in cases {
            let s = CubicSoftSet::constant(kind, u.clone(), p.clone()).unwrap();
            let g = s.grade(&p[0], "x").unwrap();
            assert_eq!(g.ivf.lo(), q(lo));
            assert_eq!(g.ivf.hi(), q(hi));
            assert_eq!(g.fuzzy, q(d));
        }
        let big = CubicSoftSet::constant(
            ConstantKind::HatOne,
            vec!["x".into(), "y".into()],
            vec![ParameterId::plain("e"), ParameterId::plain("f")],
        )
        .unwrap();
        assert_eq!(big.cells().count(), 4);
        assert!(big.cells().all(|(_, _, g)| *g == ConstantKind::HatOne.grade()));
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let dup_u = CubicSoftSet::build(
            vec!["x".into(), "x".into()],
            vec![ParameterId::plain("e")],
            |_, _| ConstantKind::HatZero.grade(),
        );
        assert!(matches!(dup_u, Err(ModelError::DuplicateElement(_))));
        let dup_p = CubicSoftSet::build(
            vec!["x".into()],
            vec![ParameterId::plain("e"), ParameterId::plain("e")],
            |_, _| ConstantKind::HatZero.grade(),
        );
        assert!(matches!(dup_p, Err(ModelError::DuplicateParameter(_))));
    }

    #[test]
    fn empty_universe_and_parameters_are_legal() {
        let s = CubicSoftSet::new(vec![], vec![], vec![]).unwrap();
        assert_eq!(s.cells().count(), 0);
        let t = CubicSoftSet::build(vec!["p1".into()], vec![], |_, _| {
            ConstantKind::HatZero.grade()
        })
        .unwrap();
        assert_eq!(t.params().len(), 0);
        assert_eq!(t.universe().len(), 1);
    }
}
