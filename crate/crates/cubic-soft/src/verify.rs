//! Exhaustive and randomized verification of the closure theorems.
//!
//! Exhaustive campaigns enumerate every assignment of grid grades to the
//! cells of both operands (all `G^(2·cells)` pairs, `G^cells` for
//! single-operand theorems) and check hypothesis ⇒ conclusion on each.
//! With one cell per operand this is already a complete pointwise check,
//! because every hypothesis and conclusion in the registry quantifies
//! per (parameter, element); larger shapes exercise the unshared-column
//! branches. Random campaigns draw grades uniformly from the `k = 100`
//! grid (two-decimal values).
//!
//! Determinism: the enumeration space is split into index chunks that can
//! be evaluated concurrently; counts merge associatively and the retained
//! counterexamples are always the lowest-index ones, so reports are
//! byte-identical under any schedule. Random mode derives an independent
//! sub-seed per sample index from the campaign seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{self, CombineKind};
use crate::classify::{
    classify, hypothesis_report, BracketReading, CellRef, Classification, TheoremError, TheoremId,
};
use crate::document::CssDocument;
use crate::model::{CubicGrade, CubicSoftSet, Interval, ParameterId};
use crate::rational::UnitRational;

/// Default ceiling on campaign cost (instances × cells per operand pair).
pub const DEFAULT_CAMPAIGN_CAP: u128 = 100_000_000;
/// Counterexamples embedded in a report; totals stay exact beyond the cap.
pub const COUNTEREXAMPLE_CAP: usize = 20;
/// Grid used by random campaigns: two-decimal membership values.
pub const RANDOM_GRID_STEPS: u32 = 100;
/// Draw budget per sample when rejection-sampling for the hypothesis.
pub const CONSTRAINED_RETRY_CAP: u64 = 1000;

const CHUNK: u64 = 8192;

/// Shape of an exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Grid resolution `k`: membership values range over `{0, 1/k, …, 1}`.
    pub steps: u32,
    pub universe_size: u32,
    pub shared_params: u32,
}

impl GridSpec {
    /// Grades per cell: `(k+1)(k+2)/2` intervals times `k+1` degrees.
    pub fn grade_count(&self) -> u64 {
        let k = self.steps as u64;
        (k + 1) * (k + 2) / 2 * (k + 1)
    }

    pub fn cells(&self) -> u64 {
        self.universe_size as u64 * self.shared_params as u64
    }
}

/// Parameters of a randomized campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub samples: u64,
    pub seed: u64,
    /// Rejection-sample each instance until the hypothesis holds.
    pub constrained: bool,
    pub universe_size: u32,
    pub shared_params: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CampaignMode {
    Exhaustive(GridSpec),
    Random(RandomSpec),
}

fn cost_text(cost: &u128) -> String {
    if *cost == u128::MAX {
        "beyond u128".to_string()
    } else {
        cost.to_string()
    }
}

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("CampaignTooLarge: cost {} exceeds cap {cap} (raise CSS_MAX_CAMPAIGN)", cost_text(.cost))]
    TooLarge { cost: u128, cap: u128 },
    #[error("grid needs at least 1 step")]
    EmptyGrid,
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}

/// Per-instance outcome. A witness cell is present exactly when the
/// hypothesis holds and the conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub witness: Option<CellRef>,
}

/// A replayable failing instance: full operand documents plus the cell at
/// which the conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: u64,
    pub left: CssDocument,
    pub right: Option<CssDocument>,
    pub witness: CellRef,
}

/// Campaign shape echoed into the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModeSummary {
    Exhaustive {
        steps: u32,
        universe_size: u32,
        shared_params: u32,
    },
    Random {
        samples: u64,
        steps: u32,
        universe_size: u32,
        shared_params: u32,
        constrained: bool,
    },
}

/// Aggregated result of one campaign. Identical inputs and seed produce a
/// byte-identical report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub theorem: TheoremId,
    pub interpretation: BracketReading,
    pub mode: ModeSummary,
    pub instances_tested: u64,
    pub hypothesis_holds: u64,
    pub conclusion_holds_given_hypothesis: u64,
    /// Instances whose interval condition set was empty at some cell.
    pub vacuous_hypotheses: u64,
    pub counterexamples_total: u64,
    pub counterexamples: Vec<Counterexample>,
    pub seed: Option<u64>,
    pub rejected_draws: Option<u64>,
    pub exhausted_samples: Option<u64>,
}

impl CampaignReport {
    pub fn to_canonical_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

/// All grid grades at resolution `k`, ordered lo-major, then hi, then
/// fuzzy degree. Count: `(k+1)(k+2)/2 · (k+1)`.
pub fn enumerate_grades(steps: u32) -> Vec<CubicGrade> {
    assert!(steps >= 1, "grid needs at least two points");
    let mut out = Vec::new();
    for lo in 0..=steps {
        for hi in lo..=steps {
            for d in 0..=steps {
                out.push(grid_grade(steps, lo, hi, d));
            }
        }
    }
    out
}

/// The grade at a given enumeration index, without materializing the list.
pub fn grade_from_index(steps: u32, index: u64) -> CubicGrade {
    let per_interval = (steps + 1) as u64;
    let mut interval_idx = index / per_interval;
    let d = (index % per_interval) as u32;
    let mut lo = 0u32;
    loop {
        let row = (steps + 1 - lo) as u64;
        if interval_idx < row {
            break;
        }
        interval_idx -= row;
        lo += 1;
    }
    grid_grade(steps, lo, lo + interval_idx as u32, d)
}

fn grid_point(steps: u32, i: u32) -> UnitRational {
    UnitRational::new(i as u64, steps as u64).expect("grid point in range")
}

fn grid_grade(steps: u32, lo: u32, hi: u32, d: u32) -> CubicGrade {
    CubicGrade::new(
        Interval::new(grid_point(steps, lo), grid_point(steps, hi)).expect("lo <= hi"),
        grid_point(steps, d),
    )
}

/// Uniform draw over the full grade set of the grid.
pub fn sample_grade<R: Rng + ?Sized>(rng: &mut R, steps: u32) -> CubicGrade {
    let total = GridSpec {
        steps,
        universe_size: 1,
        shared_params: 1,
    }
    .grade_count();
    grade_from_index(steps, rng.random_range(0..total))
}

/// A soft set with every cell drawn uniformly from the grid.
pub fn sample_soft_set<R: Rng + ?Sized>(
    rng: &mut R,
    universe: &[String],
    params: &[ParameterId],
    steps: u32,
) -> CubicSoftSet {
    CubicSoftSet::build(universe.to_vec(), params.to_vec(), |_, _| {
        sample_grade(rng, steps)
    })
    .expect("caller supplies distinct labels")
}

enum ConclusionClass {
    Internal,
    External,
    Both,
}

fn conclusion_class(id: TheoremId) -> ConclusionClass {
    match id {
        TheoremId::PuIcss
        | TheoremId::PiIcss
        | TheoremId::CompIcss
        | TheoremId::RuIcss
        | TheoremId::RiIcss
        | TheoremId::StarPuIcss
        | TheoremId::StarPiIcss => ConclusionClass::Internal,
        TheoremId::CompEcss
        | TheoremId::StarPuEcss
        | TheoremId::PiEcss
        | TheoremId::PuEcss
        | TheoremId::RuEcss
        | TheoremId::RiEcss
        | TheoremId::IcssRuEcss
        | TheoremId::IcssRiEcss => ConclusionClass::External,
        TheoremId::PiBoth | TheoremId::RiBoth => ConclusionClass::Both,
    }
}

fn operation_kind(id: TheoremId) -> Option<CombineKind> {
    match id {
        TheoremId::CompIcss | TheoremId::CompEcss => None,
        TheoremId::PuIcss | TheoremId::StarPuIcss | TheoremId::StarPuEcss | TheoremId::PuEcss => {
            Some(CombineKind::PUnion)
        }
        TheoremId::PiIcss | TheoremId::StarPiIcss | TheoremId::PiEcss | TheoremId::PiBoth => {
            Some(CombineKind::PIntersection)
        }
        TheoremId::RuIcss | TheoremId::RuEcss | TheoremId::IcssRuEcss => Some(CombineKind::RUnion),
        TheoremId::RiIcss | TheoremId::RiEcss | TheoremId::RiBoth | TheoremId::IcssRiEcss => {
            Some(CombineKind::RIntersection)
        }
    }
}

/// The operation a theorem's conclusion classifies.
pub fn apply_operation(
    id: TheoremId,
    f: &CubicSoftSet,
    g: Option<&CubicSoftSet>,
) -> Result<CubicSoftSet, TheoremError> {
    match operation_kind(id) {
        None => Ok(algebra::soft_complement(f)),
        Some(kind) => {
            let g = g.ok_or(TheoremError::Arity {
                id,
                expected: id.arity(),
            })?;
            Ok(algebra::soft_combine(kind, f, g)?)
        }
    }
}

fn conclusion_of(id: TheoremId, class: &Classification) -> (bool, Option<CellRef>) {
    match conclusion_class(id) {
        ConclusionClass::Internal => (
            class.internal,
            class.internal_violations.first().cloned(),
        ),
        ConclusionClass::External => (
            class.external,
            class.external_violations.first().cloned(),
        ),
        ConclusionClass::Both => (
            class.internal && class.external,
            class
                .internal_violations
                .first()
                .or_else(|| class.external_violations.first())
                .cloned(),
        ),
    }
}

fn evaluate(
    id: TheoremId,
    f: &CubicSoftSet,
    g: Option<&CubicSoftSet>,
    reading: BracketReading,
) -> Result<(TheoremVerdict, bool), TheoremError> {
    let hyp = hypothesis_report(id, f, g, reading)?;
    let result = apply_operation(id, f, g)?;
    let class = classify(&result);
    let (conclusion, violation) = conclusion_of(id, &class);
    let witness = if hyp.holds && !conclusion {
        violation
    } else {
        None
    };
    Ok((
        TheoremVerdict {
            hypothesis: hyp.holds,
            conclusion,
            witness,
        },
        !hyp.vacuous_cells.is_empty(),
    ))
}

/// Evaluates one theorem instance: hypothesis, operation, classification.
pub fn check_theorem(
    id: TheoremId,
    f: &CubicSoftSet,
    g: Option<&CubicSoftSet>,
    reading: BracketReading,
) -> Result<TheoremVerdict, TheoremError> {
    evaluate(id, f, g, reading).map(|(verdict, _)| verdict)
}

#[derive(Default)]
struct Partial {
    tested: u64,
    hyp: u64,
    concl: u64,
    vacuous: u64,
    cex_total: u64,
    cex: Vec<Counterexample>,
    rejected: u64,
    exhausted: u64,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.tested += other.tested;
        self.hyp += other.hyp;
        self.concl += other.concl;
        self.vacuous += other.vacuous;
        self.cex_total += other.cex_total;
        self.rejected += other.rejected;
        self.exhausted += other.exhausted;
        for c in other.cex {
            if self.cex.len() < COUNTEREXAMPLE_CAP {
                self.cex.push(c);
            }
        }
    }

    fn record(
        &mut self,
        id: TheoremId,
        reading: BracketReading,
        index: u64,
        f: &CubicSoftSet,
        g: Option<&CubicSoftSet>,
    ) {
        let (verdict, vacuous) =
            evaluate(id, f, g, reading).expect("campaign operands are compatible by construction");
        self.tested += 1;
        if vacuous {
            self.vacuous += 1;
        }
        if verdict.hypothesis {
            self.hyp += 1;
            if verdict.conclusion {
                self.concl += 1;
            } else {
                self.cex_total += 1;
                if self.cex.len() < COUNTEREXAMPLE_CAP {
                    self.cex.push(Counterexample {
                        index,
                        left: CssDocument::from_model(f),
                        right: g.map(CssDocument::from_model),
                        witness: verdict.witness.expect("failing instance has a witness"),
                    });
                }
            }
        }
    }
}

fn campaign_shape(universe_size: u32, shared_params: u32) -> (Vec<String>, Vec<ParameterId>) {
    let universe = (1..=universe_size).map(|i| format!("x{i}")).collect();
    let params = (1..=shared_params)
        .map(|i| ParameterId::plain(format!("e{i}")))
        .collect();
    (universe, params)
}

fn decode_operand(
    mut index: u128,
    grades: &[CubicGrade],
    cells: u64,
    universe: &[String],
    params: &[ParameterId],
) -> CubicSoftSet {
    let base = grades.len() as u128;
    let mut assignment = Vec::with_capacity(cells as usize);
    for _ in 0..cells {
        assignment.push(grades[(index % base) as usize]);
        index /= base;
    }
    CubicSoftSet::new(universe.to_vec(), params.to_vec(), assignment)
        .expect("generated labels are distinct")
}

fn chunk_ranges(total: u64) -> Vec<(u64, u64)> {
    let mut ranges = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        ranges.push((start, end));
        start = end;
    }
    ranges
}

/// Runs a campaign under the default cost cap.
pub fn run_campaign(
    id: TheoremId,
    mode: &CampaignMode,
    reading: BracketReading,
) -> Result<CampaignReport, CampaignError> {
    run_campaign_with_cap(id, mode, reading, DEFAULT_CAMPAIGN_CAP)
}

/// Runs a campaign with an explicit cost cap for exhaustive mode.
pub fn run_campaign_with_cap(
    id: TheoremId,
    mode: &CampaignMode,
    reading: BracketReading,
    cap: u128,
) -> Result<CampaignReport, CampaignError> {
    match mode {
        CampaignMode::Exhaustive(grid) => exhaustive_campaign(id, *grid, reading, cap),
        CampaignMode::Random(spec) => Ok(random_campaign(id, *spec, reading)),
    }
}

fn exhaustive_campaign(
    id: TheoremId,
    grid: GridSpec,
    reading: BracketReading,
    cap: u128,
) -> Result<CampaignReport, CampaignError> {
    if grid.steps < 1 {
        return Err(CampaignError::EmptyGrid);
    }
    // Cost-check from the closed-form counts before materializing
    // anything; oversized requests must fail without allocating.
    let cells = grid.cells();
    let too_large = |cost| CampaignError::TooLarge { cost, cap };
    let exponent = u32::try_from(cells).map_err(|_| too_large(u128::MAX))?;
    let per_operand = (grid.grade_count() as u128)
        .checked_pow(exponent)
        .ok_or_else(|| too_large(u128::MAX))?;
    let instances = if id.arity() == 2 {
        per_operand
            .checked_mul(per_operand)
            .ok_or_else(|| too_large(u128::MAX))?
    } else {
        per_operand
    };
    let cost = instances
        .checked_mul(cells as u128)
        .ok_or_else(|| too_large(u128::MAX))?;
    if cost > cap {
        return Err(too_large(cost));
    }
    let grades = enumerate_grades(grid.steps);
    let (universe, params) = campaign_shape(grid.universe_size, grid.shared_params);
    let total = instances as u64;

    let partials: Vec<Partial> = chunk_ranges(total)
        .into_par_iter()
        .map(|(start, end)| {
            let mut part = Partial::default();
            for idx in start..end {
                if id.arity() == 2 {
                    let left = decode_operand(
                        idx as u128 / per_operand,
                        &grades,
                        cells,
                        &universe,
                        &params,
                    );
                    let right = decode_operand(
                        idx as u128 % per_operand,
                        &grades,
                        cells,
                        &universe,
                        &params,
                    );
                    part.record(id, reading, idx, &left, Some(&right));
                } else {
                    let single = decode_operand(idx as u128, &grades, cells, &universe, &params);
                    part.record(id, reading, idx, &single, None);
                }
            }
            part
        })
        .collect();

    let mut sum = Partial::default();
    for p in partials {
        sum.absorb(p);
    }
    Ok(report_from(
        id,
        reading,
        ModeSummary::Exhaustive {
            steps: grid.steps,
            universe_size: grid.universe_size,
            shared_params: grid.shared_params,
        },
        sum,
        None,
    ))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent per-sample seed; makes the report schedule-invariant.
fn sample_seed(campaign_seed: u64, sample: u64) -> u64 {
    splitmix64(campaign_seed ^ splitmix64(sample))
}

fn random_campaign(id: TheoremId, spec: RandomSpec, reading: BracketReading) -> CampaignReport {
    let (universe, params) = campaign_shape(spec.universe_size, spec.shared_params);

    let partials: Vec<Partial> = chunk_ranges(spec.samples)
        .into_par_iter()
        .map(|(start, end)| {
            let mut part = Partial::default();
            for sample in start..end {
                let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(spec.seed, sample));
                let mut draw = || {
                    let left = sample_soft_set(&mut rng, &universe, &params, RANDOM_GRID_STEPS);
                    let right = (id.arity() == 2)
                        .then(|| sample_soft_set(&mut rng, &universe, &params, RANDOM_GRID_STEPS));
                    (left, right)
                };
                if spec.constrained {
                    let mut accepted = None;
                    for _ in 0..CONSTRAINED_RETRY_CAP {
                        let (left, right) = draw();
                        let holds = hypothesis_report(id, &left, right.as_ref(), reading)
                            .expect("campaign operands are compatible")
                            .holds;
                        if holds {
                            accepted = Some((left, right));
                            break;
                        }
                        part.rejected += 1;
                    }
                    match accepted {
                        Some((left, right)) => {
                            part.record(id, reading, sample, &left, right.as_ref())
                        }
                        None => part.exhausted += 1,
                    }
                } else {
                    let (left, right) = draw();
                    part.record(id, reading, sample, &left, right.as_ref());
                }
            }
            part
        })
        .collect();

    let mut sum = Partial::default();
    for p in partials {
        sum.absorb(p);
    }
    let constrained = spec.constrained;
    let mut report = report_from(
        id,
        reading,
        ModeSummary::Random {
            samples: spec.samples,
            steps: RANDOM_GRID_STEPS,
            universe_size: spec.universe_size,
            shared_params: spec.shared_params,
            constrained,
        },
        sum,
        Some(spec.seed),
    );
    if !constrained {
        report.rejected_draws = None;
        report.exhausted_samples = None;
    }
    report
}

fn report_from(
    id: TheoremId,
    reading: BracketReading,
    mode: ModeSummary,
    sum: Partial,
    seed: Option<u64>,
) -> CampaignReport {
    CampaignReport {
        theorem: id,
        interpretation: reading,
        mode,
        instances_tested: sum.tested,
        hypothesis_holds: sum.hyp,
        conclusion_holds_given_hypothesis: sum.concl,
        vacuous_hypotheses: sum.vacuous,
        counterexamples_total: sum.cex_total,
        counterexamples: sum.cex,
        seed,
        rejected_draws: seed.map(|_| sum.rejected),
        exhausted_samples: seed.map(|_| sum.exhausted),
    }
}

// ---------------------------------------------------------------------------
// Proposition suite
// ---------------------------------------------------------------------------

/// Pass/fail tally for one order property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub property: &'static str,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub samples: u64,
    pub seed: u64,
    pub properties: Vec<PropertyOutcome>,
}

impl PropositionReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failed == 0)
    }
}

const PROPERTIES: [&str; 10] = [
    "p1-p-order-transitive",
    "p2-p-complement-antitone",
    "p3-p-intersection-upper-bounds",
    "p4-p-union-below-common-bound",
    "p5-p-operations-monotone",
    "p6-r-order-transitive",
    "p7-r-complement-antitone",
    "p8-r-intersection-upper-bounds",
    "p9-r-union-below-common-bound",
    "p10-r-operations-monotone",
];

struct OrderGen<'r> {
    rng: &'r mut ChaCha8Rng,
    steps: u32,
}

impl OrderGen<'_> {
    fn pos(&self, v: UnitRational) -> u32 {
        (v.numerator() as u128 * self.steps as u128 / v.denominator() as u128) as u32
    }

    fn point(&mut self, lo: u32, hi: u32) -> UnitRational {
        grid_point(self.steps, self.rng.random_range(lo..=hi))
    }

    fn universe(&mut self) -> Vec<String> {
        let n = self.rng.random_range(1..=3u32);
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn pool(&mut self) -> Vec<ParameterId> {
        let n = self.rng.random_range(1..=3u32);
        (1..=n)
            .map(|i| ParameterId::new(format!("e{i}"), self.rng.random_ratio(1, 4)))
            .collect()
    }

    fn subset(&mut self, params: &[ParameterId]) -> Vec<ParameterId> {
        params
            .iter()
            .filter(|_| self.rng.random_ratio(4, 5))
            .cloned()
            .collect()
    }

    fn fresh(&mut self, universe: &[String], params: &[ParameterId]) -> CubicSoftSet {
        let k = self.steps;
        let mut grades = Vec::new();
        for _ in 0..params.len() * universe.len() {
            let lo = self.rng.random_range(0..=k);
            let hi = self.rng.random_range(lo..=k);
            let d = self.rng.random_range(0..=k);
            grades.push(grid_grade(k, lo, hi, d));
        }
        CubicSoftSet::new(universe.to_vec(), params.to_vec(), grades).expect("distinct labels")
    }

    /// A set below `upper` in the given order, over a subset of its
    /// parameters (grades shrink; the R order raises the fuzzy part).
    fn shrink(&mut self, kind: algebra::OrderKind, upper: &CubicSoftSet) -> CubicSoftSet {
        let params = self.subset(upper.params());
        CubicSoftSet::build(upper.universe().to_vec(), params, |p, x| {
            let g = upper.grade(p, x).expect("subset of upper's parameters");
            let lo = self.point(0, self.pos(g.ivf.lo()));
            let hi = self.point(self.pos(lo), self.pos(g.ivf.hi()));
            let d = match kind {
                algebra::OrderKind::P => self.point(0, self.pos(g.fuzzy)),
                algebra::OrderKind::R => self.point(self.pos(g.fuzzy), self.steps),
            };
            CubicGrade::new(Interval::new(lo, hi).expect("lo <= hi"), d)
        })
        .expect("subset keeps labels distinct")
    }

    /// A set above `lower`, over a superset of its parameters drawn from
    /// `pool`.
    fn grow(
        &mut self,
        kind: algebra::OrderKind,
        lower: &CubicSoftSet,
        pool: &[ParameterId],
    ) -> CubicSoftSet {
        let mut params = lower.params().to_vec();
        for p in pool {
            if lower.param_index(p).is_none() && self.rng.random_ratio(1, 2) {
                params.push(p.clone());
            }
        }
        let k = self.steps;
        CubicSoftSet::build(lower.universe().to_vec(), params, |p, x| {
            match lower.grade(p, x) {
                None => {
                    let lo = self.rng.random_range(0..=k);
                    let hi = self.rng.random_range(lo..=k);
                    let d = self.rng.random_range(0..=k);
                    grid_grade(k, lo, hi, d)
                }
                Some(g) => {
                    let lo = self.point(self.pos(g.ivf.lo()), k);
                    let hi = self.point(self.pos(lo).max(self.pos(g.ivf.hi())), k);
                    let d = match kind {
                        algebra::OrderKind::P => self.point(self.pos(g.fuzzy), k),
                        algebra::OrderKind::R => self.point(0, self.pos(g.fuzzy)),
                    };
                    CubicGrade::new(Interval::new(lo, hi).expect("lo <= hi"), d)
                }
            }
        })
        .expect("superset keeps labels distinct")
    }
}

/// Checks the ten order/complement/monotonicity properties on seeded
/// random instances whose order relationships hold by construction.
pub fn proposition_suite(samples: u64, seed: u64) -> PropositionReport {
    use algebra::{soft_combine, soft_complement, soft_suborder, OrderKind};
    let meet = |k: OrderKind| match k {
        OrderKind::P => CombineKind::PIntersection,
        OrderKind::R => CombineKind::RIntersection,
    };
    let join = |k: OrderKind| match k {
        OrderKind::P => CombineKind::PUnion,
        OrderKind::R => CombineKind::RUnion,
    };

    let mut outcomes: Vec<PropertyOutcome> = PROPERTIES
        .iter()
        .map(|name| PropertyOutcome {
            property: name,
            passed: 0,
            failed: 0,
        })
        .collect();

    let tallies: Vec<[u64; 10]> = chunk_ranges(samples)
        .into_par_iter()
        .map(|(start, end)| {
            let mut pass = [0u64; 10];
            for sample in start..end {
                for (block, kind) in [(0usize, OrderKind::P), (5, OrderKind::R)] {
                    let mut rng = ChaCha8Rng::seed_from_u64(sample_seed(
                        seed ^ (block as u64 + 1),
                        sample,
                    ));
                    let mut draw = OrderGen {
                        rng: &mut rng,
                        steps: RANDOM_GRID_STEPS,
                    };
                    let universe = draw.universe();
                    let pool = draw.pool();

                    // transitivity: F ⊆ G ⊆ E by double shrink
                    let top = draw.fresh(&universe, &pool);
                    let mid = draw.shrink(kind, &top);
                    let bottom = draw.shrink(kind, &mid);
                    debug_assert!(soft_suborder(kind, &bottom, &mid).unwrap());
                    debug_assert!(soft_suborder(kind, &mid, &top).unwrap());
                    if soft_suborder(kind, &bottom, &top).unwrap() {
                        pass[block] += 1;
                    }

                    // complement antitone; the claim needs I = J, so the
                    // lower set keeps the full parameter list.
                    let upper = draw.fresh(&universe, &pool);
                    let partial = draw.shrink(kind, &upper);
                    let lower = CubicSoftSet::build(
                        universe.clone(),
                        upper.params().to_vec(),
                        |p, x| match partial.grade(p, x) {
                            Some(gr) => *gr,
                            None => *upper.grade(p, x).expect("own cell"),
                        },
                    )
                    .expect("distinct labels");
                    if soft_suborder(kind, &soft_complement(&upper), &soft_complement(&lower))
                        .unwrap()
                    {
                        pass[block + 1] += 1;
                    }

                    // F ⊆ G and F ⊆ E imply F ⊆ G ∩ E
                    let base_params = draw.subset(&pool);
                    let base = draw.fresh(&universe, &base_params);
                    let above_a = draw.grow(kind, &base, &pool);
                    let above_b = draw.grow(kind, &base, &pool);
                    let inter = soft_combine(meet(kind), &above_a, &above_b).unwrap();
                    if soft_suborder(kind, &base, &inter).unwrap() {
                        pass[block + 2] += 1;
                    }

                    // F ⊆ G and E ⊆ G imply F ∪ E ⊆ G
                    let bound = draw.fresh(&universe, &pool);
                    let below_a = draw.shrink(kind, &bound);
                    let below_b = draw.shrink(kind, &bound);
                    let union = soft_combine(join(kind), &below_a, &below_b).unwrap();
                    if soft_suborder(kind, &union, &bound).unwrap() {
                        pass[block + 3] += 1;
                    }

                    // monotonicity of union and intersection in both slots
                    let right_a = draw.fresh(&universe, &pool);
                    let right_b = draw.fresh(&universe, &pool);
                    let left_a = draw.shrink(kind, &right_a);
                    let left_b = draw.shrink(kind, &right_b);
                    let mono_union = soft_suborder(
                        kind,
                        &soft_combine(join(kind), &left_a, &left_b).unwrap(),
                        &soft_combine(join(kind), &right_a, &right_b).unwrap(),
                    )
                    .unwrap();
                    let mono_inter = soft_suborder(
                        kind,
                        &soft_combine(meet(kind), &left_a, &left_b).unwrap(),
                        &soft_combine(meet(kind), &right_a, &right_b).unwrap(),
                    )
                    .unwrap();
                    if mono_union && mono_inter {
                        pass[block + 4] += 1;
                    }
                }
            }
            pass
        })
        .collect();

    let mut pass = [0u64; 10];
    for t in tallies {
        for (acc, v) in pass.iter_mut().zip(t) {
            *acc += v;
        }
    }
    for (i, outcome) in outcomes.iter_mut().enumerate() {
        outcome.passed = pass[i];
        outcome.failed = samples - pass[i];
    }
    PropositionReport {
        samples,
        seed,
        properties: outcomes,
    }
}
