//! The algebra of cubic soft sets: interval join/meet, the P- and R-orders,
//! the four unions/intersections, the four products, complement, and the
//! star swap.
//!
//! P-operations move the interval part and the fuzzy part in the same
//! direction (join pairs `rmax` with `max`); R-operations move them in
//! opposite directions (R-union pairs `rmax` with `min`). All functions are
//! pure over immutable values.
//!
//! Result ordering is deterministic: the left operand's parameters first,
//! then the right operand's new parameters; products enumerate `I x J`
//! row-major in `I`. The result universe keeps the left operand's order.

use thiserror::Error;

use crate::model::{CubicGrade, CubicSoftSet, Interval, ParameterId};

/// Operand compatibility failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("UniverseMismatch: operands grade different universes")]
    UniverseMismatch,
    #[error("ParameterSetMismatch: operands index different parameter sets")]
    ParameterSetMismatch,
}

/// The four union/intersection operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombineKind {
    PUnion,
    PIntersection,
    RUnion,
    RIntersection,
}

impl CombineKind {
    /// Unions take `I ∪ J` and keep unshared columns; intersections take
    /// `I ∩ J`.
    pub fn is_union(&self) -> bool {
        matches!(self, CombineKind::PUnion | CombineKind::RUnion)
    }
}

/// The four product (OR/AND) operations over `I x J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    POr,
    ROr,
    PAnd,
    RAnd,
}

impl ProductKind {
    /// The grade-level combine each product applies pointwise.
    pub fn combine(&self) -> CombineKind {
        match self {
            ProductKind::POr => CombineKind::PUnion,
            ProductKind::ROr => CombineKind::RUnion,
            ProductKind::PAnd => CombineKind::PIntersection,
            ProductKind::RAnd => CombineKind::RIntersection,
        }
    }
}

/// The two sub-set orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Interval and fuzzy parts both increase: `ivf ⪯` and `fuzzy <=`.
    P,
    /// Interval increases while fuzzy decreases: `ivf ⪯` and `fuzzy >=`.
    R,
}

/// Componentwise interval minimum.
pub fn rmin(a: Interval, b: Interval) -> Interval {
    Interval::new(a.lo().min(b.lo()), a.hi().min(b.hi())).expect("componentwise min keeps order")
}

/// Componentwise interval maximum.
pub fn rmax(a: Interval, b: Interval) -> Interval {
    Interval::new(a.lo().max(b.lo()), a.hi().max(b.hi())).expect("componentwise max keeps order")
}

/// The `⪯` relation: both endpoints weakly increase.
pub fn ivf_leq(a: Interval, b: Interval) -> bool {
    a.lo() <= b.lo() && a.hi() <= b.hi()
}

/// Grade-level union/intersection.
pub fn grade_combine(kind: CombineKind, a: &CubicGrade, b: &CubicGrade) -> CubicGrade {
    match kind {
        CombineKind::PUnion => CubicGrade::new(rmax(a.ivf, b.ivf), a.fuzzy.max(b.fuzzy)),
        CombineKind::PIntersection => CubicGrade::new(rmin(a.ivf, b.ivf), a.fuzzy.min(b.fuzzy)),
        CombineKind::RUnion => CubicGrade::new(rmax(a.ivf, b.ivf), a.fuzzy.min(b.fuzzy)),
        CombineKind::RIntersection => CubicGrade::new(rmin(a.ivf, b.ivf), a.fuzzy.max(b.fuzzy)),
    }
}

/// Grade-level complement: `<[1-hi, 1-lo], 1-fuzzy>`.
pub fn grade_complement(a: &CubicGrade) -> CubicGrade {
    CubicGrade::new(a.ivf.complement(), a.fuzzy.one_minus())
}

/// Equality of cubic soft sets: same universe, same parameter set, and
/// identical grades everywhere. List order is irrelevant.
pub fn soft_equal(f: &CubicSoftSet, g: &CubicSoftSet) -> bool {
    if !f.same_universe(g) || f.params().len() != g.params().len() {
        return false;
    }
    f.cells()
        .all(|(p, x, grade)| g.grade(p, x).is_some_and(|other| other == grade))
}

/// The P- or R-order: `F ⊆ G` iff `I ⊆ J` and the grade relation holds at
/// every cell of `F`.
pub fn soft_suborder(
    kind: OrderKind,
    f: &CubicSoftSet,
    g: &CubicSoftSet,
) -> Result<bool, CompatError> {
    if !f.same_universe(g) {
        return Err(CompatError::UniverseMismatch);
    }
    let holds = f.cells().all(|(p, x, fg)| match g.grade(p, x) {
        None => false,
        Some(gg) => {
            ivf_leq(fg.ivf, gg.ivf)
                && match kind {
                    OrderKind::P => fg.fuzzy <= gg.fuzzy,
                    OrderKind::R => fg.fuzzy >= gg.fuzzy,
                }
        }
    });
    Ok(holds)
}

/// Union or intersection of two cubic soft sets.
///
/// Unions carry `I ∪ J`: unshared parameters copy their operand's column
/// untouched, shared ones combine pointwise. Intersections carry `I ∩ J`
/// and always combine. Disjoint parameter sets therefore yield the two
/// tables side by side for unions and an empty-parameter set for
/// intersections.
pub fn soft_combine(
    kind: CombineKind,
    f: &CubicSoftSet,
    g: &CubicSoftSet,
) -> Result<CubicSoftSet, CompatError> {
    if !f.same_universe(g) {
        return Err(CompatError::UniverseMismatch);
    }
    let mut params: Vec<ParameterId> = Vec::new();
    if kind.is_union() {
        params.extend(f.params().iter().cloned());
        params.extend(
            g.params()
                .iter()
                .filter(|p| f.param_index(p).is_none())
                .cloned(),
        );
    } else {
        params.extend(
            f.params()
                .iter()
                .filter(|p| g.param_index(p).is_some())
                .cloned(),
        );
    }
    let set = CubicSoftSet::build(f.universe().to_vec(), params, |p, x| {
        match (f.grade(p, x), g.grade(p, x)) {
            (Some(a), Some(b)) => grade_combine(kind, a, b),
            (Some(a), None) => *a,
            (None, Some(b)) => *b,
            (None, None) => unreachable!("parameter drawn from I ∪ J"),
        }
    })
    .expect("operands were validated");
    Ok(set)
}

/// One of the four products over the pair-parameter set `I x J`.
pub fn soft_product(
    kind: ProductKind,
    f: &CubicSoftSet,
    g: &CubicSoftSet,
) -> Result<CubicSoftSet, CompatError> {
    if !f.same_universe(g) {
        return Err(CompatError::UniverseMismatch);
    }
    let combine = kind.combine();
    let mut params = Vec::with_capacity(f.params().len() * g.params().len());
    let mut grades = Vec::new();
    for (ai, a) in f.params().iter().enumerate() {
        for b in g.params() {
            params.push(ParameterId::pair(a, b));
            for x in f.universe() {
                let left = f.grade_at(ai, f.element_index(x).expect("own universe"));
                let right = g.grade(b, x).expect("same universe");
                grades.push(grade_combine(combine, left, right));
            }
        }
    }
    CubicSoftSet::new(f.universe().to_vec(), params, grades)
        .map_err(|_| CompatError::ParameterSetMismatch)
}

/// Complement: parameters negated in place, every grade complemented.
pub fn soft_complement(f: &CubicSoftSet) -> CubicSoftSet {
    let params = f.params().iter().map(ParameterId::negate).collect();
    CubicSoftSet::build(f.universe().to_vec(), params, |p, x| {
        let original = f
            .grade(&p.negate(), x)
            .expect("negation is a bijection on parameters");
        grade_complement(original)
    })
    .expect("negation preserves distinctness")
}

/// Exchanges the fuzzy components of two sets over the same parameters:
/// `F*` keeps `F`'s intervals with `G`'s fuzzy parts, and vice versa.
pub fn star_swap(
    f: &CubicSoftSet,
    g: &CubicSoftSet,
) -> Result<(CubicSoftSet, CubicSoftSet), CompatError> {
    if !f.same_universe(g) {
        return Err(CompatError::UniverseMismatch);
    }
    let same_params = f.params().len() == g.params().len()
        && f.params().iter().all(|p| g.param_index(p).is_some());
    if !same_params {
        return Err(CompatError::ParameterSetMismatch);
    }
    let swap = |base: &CubicSoftSet, other: &CubicSoftSet| {
        CubicSoftSet::build(base.universe().to_vec(), base.params().to_vec(), |p, x| {
            let iv = base.grade(p, x).expect("own cell").ivf;
            let fz = other.grade(p, x).expect("same parameters").fuzzy;
            CubicGrade::new(iv, fz)
        })
        .expect("operands were validated")
    };
    Ok((swap(f, g), swap(g, f)))
}

/// Restriction of `F` to the given parameters (kept in `F`'s order).
pub fn restrict(f: &CubicSoftSet, params: &[ParameterId]) -> CubicSoftSet {
    let kept: Vec<ParameterId> = f
        .params()
        .iter()
        .filter(|p| params.contains(p))
        .cloned()
        .collect();
    CubicSoftSet::build(f.universe().to_vec(), kept, |p, x| {
        *f.grade(p, x).expect("restricted to own parameters")
    })
    .expect("restriction preserves distinctness")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::make_grade;
    use crate::rational::UnitRational;

    fn q(text: &str) -> UnitRational {
        UnitRational::parse(text).unwrap()
    }

    fn iv(lo: &str, hi: &str) -> Interval {
        Interval::new(q(lo), q(hi)).unwrap()
    }

    fn grade(lo: &str, hi: &str, d: &str) -> CubicGrade {
        make_grade(q(lo), q(hi), q(d)).unwrap()
    }

    type Row<'a> = (&'a str, &'a [(&'a str, &'a str, &'a str)]);

    fn set(universe: &[&str], rows: &[Row]) -> CubicSoftSet {
        let u: Vec<String> = universe.iter().map(|s| s.to_string()).collect();
        let params: Vec<ParameterId> = rows.iter().map(|(p, _)| ParameterId::plain(*p)).collect();
        let mut grades = Vec::new();
        for (_, cells) in rows {
            assert_eq!(cells.len(), universe.len());
            for (lo, hi, d) in *cells {
                grades.push(grade(lo, hi, d));
            }
        }
        CubicSoftSet::new(u, params, grades).unwrap()
    }

    #[test]
    fn rmin_rmax_match_worked_rows() {
        assert_eq!(rmin(iv("0.3", "0.6"), iv("0.4", "0.5")), iv("0.3", "0.5"));
        assert_eq!(rmax(iv("0.4", "0.7"), iv("0.3", "0.6")), iv("0.4", "0.7"));
        let a = iv("0.2", "0.9");
        assert_eq!(rmin(a, a), a);
        assert_eq!(rmax(a, a), a);
    }

    #[test]
    fn ivf_order_examples() {
        assert!(ivf_leq(iv("0.2", "0.5"), iv("0.3", "0.6")));
        assert!(!ivf_leq(iv("0.3", "0.6"), iv("0.2", "0.7")));
        let a = iv("0.1", "0.8");
        assert!(ivf_leq(a, a));
    }

    #[test]
    fn grade_combine_matches_worked_cells() {
        let pu = grade_combine(
            CombineKind::PUnion,
            &grade("0.4", "0.7", "0.3"),
            &grade("0.3", "0.6", "0.8"),
        );
        assert_eq!(pu, grade("0.4", "0.7", "0.8"));
        let ru = grade_combine(
            CombineKind::RUnion,
            &grade("0.3", "0.5", "0.6"),
            &grade("0.4", "0.5", "0.7"),
        );
        assert_eq!(ru, grade("0.4", "0.5", "0.6"));
        let ri = grade_combine(
            CombineKind::RIntersection,
            &grade("0.3", "0.6", "0.2"),
            &grade("0.4", "0.7", "0.3"),
        );
        assert_eq!(ri, grade("0.3", "0.6", "0.3"));
        let pi = grade_combine(
            CombineKind::PIntersection,
            &grade("0.3", "0.6", "0.6"),
            &grade("0.4", "0.5", "0.7"),
        );
        assert_eq!(pi, grade("0.3", "0.5", "0.6"));
    }

    #[test]
    fn grade_complement_matches_worked_cells() {
        assert_eq!(
            grade_complement(&grade("0.3", "0.5", "0.6")),
            grade("0.5", "0.7", "0.4")
        );
        assert_eq!(
            grade_complement(&grade("0.1", "0.4", "0.5")),
            grade("0.6", "0.9", "0.5")
        );
        let g = grade("0.2", "0.9", "0.35");
        assert_eq!(grade_complement(&grade_complement(&g)), g);
    }

    #[test]
    fn soft_equal_ignores_ordering_but_not_content() {
        let a = set(
            &["p1", "p2"],
            &[
                ("e1", &[("0.1", "0.2", "0.1"), ("0.3", "0.4", "0.3")]),
                ("e2", &[("0.5", "0.6", "0.5"), ("0.7", "0.8", "0.7")]),
            ],
        );
        assert!(soft_equal(&a, &a));
        let reordered = set(
            &["p2", "p1"],
            &[
                ("e2", &[("0.7", "0.8", "0.7"), ("0.5", "0.6", "0.5")]),
                ("e1", &[("0.3", "0.4", "0.3"), ("0.1", "0.2", "0.1")]),
            ],
        );
        assert!(soft_equal(&a, &reordered));
        let renamed = set(
            &["p1", "p2"],
            &[
                ("e1", &[("0.1", "0.2", "0.1"), ("0.3", "0.4", "0.3")]),
                ("e3", &[("0.5", "0.6", "0.5"), ("0.7", "0.8", "0.7")]),
            ],
        );
        assert!(!soft_equal(&a, &renamed));
        let changed = set(
            &["p1", "p2"],
            &[
                ("e1", &[("0.1", "0.2", "0.2"), ("0.3", "0.4", "0.3")]),
                ("e2", &[("0.5", "0.6", "0.5"), ("0.7", "0.8", "0.7")]),
            ],
        );
        assert!(!soft_equal(&a, &changed));
    }

    #[test]
    fn suborder_requires_matching_universe() {
        let a = set(&["p1"], &[("e1", &[("0.1", "0.2", "0.1")])]);
        let b = set(&["p9"], &[("e1", &[("0.1", "0.2", "0.1")])]);
        assert_eq!(
            soft_suborder(OrderKind::P, &a, &b),
            Err(CompatError::UniverseMismatch)
        );
        assert_eq!(soft_suborder(OrderKind::P, &a, &a), Ok(true));
        assert_eq!(soft_suborder(OrderKind::R, &a, &a), Ok(true));
    }

    #[test]
    fn union_keeps_unshared_columns_and_combines_shared_ones() {
        let f = set(
            &["p1"],
            &[("e1", &[("0.4", "0.7", "0.3")]), ("e2", &[("0.3", "0.6", "0.7")])],
        );
        let g = set(
            &["p1"],
            &[("e1", &[("0.3", "0.6", "0.8")]), ("e3", &[("0.6", "0.9", "0.7")])],
        );
        let h = soft_combine(CombineKind::PUnion, &f, &g).unwrap();
        let names: Vec<String> = h.params().iter().map(|p| p.display_key()).collect();
        assert_eq!(names, ["e1", "e2", "e3"]);
        assert_eq!(
            h.grade(&ParameterId::plain("e1"), "p1").unwrap(),
            &grade("0.4", "0.7", "0.8")
        );
        assert_eq!(
            h.grade(&ParameterId::plain("e2"), "p1").unwrap(),
            &grade("0.3", "0.6", "0.7")
        );
        assert_eq!(
            h.grade(&ParameterId::plain("e3"), "p1").unwrap(),
            &grade("0.6", "0.9", "0.7")
        );
    }

    #[test]
    fn intersection_of_disjoint_parameters_is_empty() {
        let f = set(&["p1"], &[("e1", &[("0.4", "0.7", "0.3")])]);
        let g = set(&["p1"], &[("e2", &[("0.3", "0.6", "0.8")])]);
        let h = soft_combine(CombineKind::RIntersection, &f, &g).unwrap();
        assert!(h.params().is_empty());
        assert_eq!(h.universe(), f.universe());
        let u = soft_combine(CombineKind::RUnion, &f, &g).unwrap();
        assert_eq!(u.params().len(), 2);
    }

    #[test]
    fn product_parameters_are_row_major_pairs() {
        let f = set(
            &["p1"],
            &[("e1", &[("0.3", "0.6", "0.2")]), ("e2", &[("0.7", "1", "0.6")])],
        );
        let g = set(
            &["p1"],
            &[("f1", &[("0.4", "0.7", "0.3")]), ("f2", &[("0.6", "0.9", "0.3")])],
        );
        let h = soft_product(ProductKind::POr, &f, &g).unwrap();
        let names: Vec<String> = h.params().iter().map(|p| p.display_key()).collect();
        assert_eq!(names, ["(e1,f1)", "(e1,f2)", "(e2,f1)", "(e2,f2)"]);
        assert_eq!(
            h.grade(&ParameterId::plain("(e1,f1)"), "p1").unwrap(),
            &grade("0.4", "0.7", "0.3")
        );
    }

    #[test]
    fn product_pair_names_keep_component_negations() {
        let f = CubicSoftSet::build(
            vec!["p1".into()],
            vec![ParameterId::plain("e1").negate()],
            |_, _| grade("0.1", "0.2", "0.1"),
        )
        .unwrap();
        let g = set(&["p1"], &[("e2", &[("0.3", "0.4", "0.3")])]);
        let h = soft_product(ProductKind::PAnd, &f, &g).unwrap();
        assert_eq!(h.params()[0].display_key(), "(¬e1,e2)");
        assert!(!h.params()[0].negated);
    }

    #[test]
    fn complement_negates_parameters_and_grades() {
        let f = set(&["p1"], &[("e1", &[("0.3", "0.5", "0.6")])]);
        let c = soft_complement(&f);
        assert_eq!(c.params()[0], ParameterId::plain("e1").negate());
        assert_eq!(
            c.grade(&ParameterId::plain("e1").negate(), "p1").unwrap(),
            &grade("0.5", "0.7", "0.4")
        );
        assert!(soft_equal(&soft_complement(&c), &f));
        assert_eq!(soft_complement(&c), f);
    }

    #[test]
    fn universe_listing_order_does_not_matter() {
        let f = set(
            &["p1", "p2"],
            &[("e1", &[("0.2", "0.4", "0.3"), ("0.5", "0.7", "0.6")])],
        );
        let g = set(
            &["p2", "p1"],
            &[("e1", &[("0.1", "0.8", "0.5"), ("0.3", "0.3", "0.2")])],
        );
        let h = soft_combine(CombineKind::PUnion, &f, &g).unwrap();
        assert_eq!(h.universe(), f.universe());
        // f(p1) joined with g's p1 column, which is listed second in g
        assert_eq!(
            h.grade(&ParameterId::plain("e1"), "p1").unwrap(),
            &grade("0.3", "0.4", "0.3")
        );
        assert_eq!(
            h.grade(&ParameterId::plain("e1"), "p2").unwrap(),
            &grade("0.5", "0.8", "0.6")
        );
        assert!(soft_suborder(OrderKind::P, &g, &g).unwrap());
    }

    #[test]
    fn complement_swaps_the_constant_sets() {
        use crate::model::ConstantKind;
        let u = vec!["x".to_string(), "y".to_string()];
        let params = vec![ParameterId::plain("e"), ParameterId::plain("f")];
        let hat1 = CubicSoftSet::constant(ConstantKind::HatOne, u.clone(), params.clone()).unwrap();
        let negated: Vec<ParameterId> = params.iter().map(ParameterId::negate).collect();
        let hat0_negated = CubicSoftSet::constant(ConstantKind::HatZero, u, negated).unwrap();
        assert_eq!(soft_complement(&hat1), hat0_negated);
    }

    #[test]
    fn star_swap_exchanges_fuzzy_parts() {
        let f = set(&["p1"], &[("e1", &[("0.2", "0.4", "0.5")])]);
        let g = set(&["p1"], &[("e1", &[("0.4", "0.6", "0.3")])]);
        let (fs, gs) = star_swap(&f, &g).unwrap();
        assert_eq!(
            fs.grade(&ParameterId::plain("e1"), "p1").unwrap(),
            &grade("0.2", "0.4", "0.3")
        );
        assert_eq!(
            gs.grade(&ParameterId::plain("e1"), "p1").unwrap(),
            &grade("0.4", "0.6", "0.5")
        );
        let (ff, gg) = star_swap(&fs, &gs).unwrap();
        assert_eq!(ff, f);
        assert_eq!(gg, g);
        let (same_a, same_b) = star_swap(&f, &f).unwrap();
        assert_eq!(same_a, f);
        assert_eq!(same_b, f);
    }

    #[test]
    fn star_swap_demands_equal_parameter_sets() {
        let f = set(&["p1"], &[("e1", &[("0.2", "0.4", "0.5")])]);
        let g = set(&["p1"], &[("e2", &[("0.4", "0.6", "0.3")])]);
        assert_eq!(star_swap(&f, &g), Err(CompatError::ParameterSetMismatch));
    }
}
