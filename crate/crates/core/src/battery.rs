//! The theorem battery: every check is an explicit instance with an expected
//! and a computed value. Instances are independent and fan out through
//! [`Execution`].

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::catalog::{self, Rng};
use crate::field::Field;
use crate::invariants::{
    abelian_capable, central_sum_epicenter_check, check_quotient_monotonicity, classify_rank_one,
    decomposable_xf_check, epicenter, is_capable_lie, multiplier, CentralSumCase, RankOneClass,
};
use crate::liesuper::LieSuper;
use crate::linalg::{choose2, Dims, GradedSubspace, GradedVector};
use crate::par::Execution;
use crate::sske::{LieFrame, MorphismPair, SkewSuperMap};

#[derive(Debug, Clone)]
pub struct BatteryConfig {
    /// Field for the deterministic families.
    pub field: Field,
    /// Field for the seeded random sweeps.
    pub random_field: Field,
    pub seed: u64,
    pub execution: Execution,
    /// Grid for even-center Heisenbergs: `0 ≤ m ≤ max_m`, `0 ≤ n ≤ max_n`.
    pub max_m: usize,
    pub max_n: usize,
    /// Odd-center Heisenbergs `H_m`, `1 ≤ m ≤ max_odd`.
    pub max_odd: usize,
    /// Abelian padding `A(k|l)`, `k, l ≤ max_pad`.
    pub max_pad: usize,
    /// Generic objects on `(m|n)`, `1 ≤ m, n ≤ max_generic`.
    pub max_generic: usize,
    /// Largest total dimension of the catalog algebras in the round-trip sweep.
    pub max_catalog_dim: usize,
    pub random_round_trips: usize,
    pub random_decomposable: usize,
    pub random_quotients: usize,
    /// Summand parameters for block sums of two Heisenbergs.
    pub max_block_param: usize,
    pub rank_one_instances: usize,
}

impl BatteryConfig {
    /// The full acceptance battery.
    pub fn acceptance() -> Self {
        BatteryConfig {
            field: Field::Rational,
            random_field: Field::Prime(5),
            seed: 2024,
            execution: Execution::default(),
            max_m: 3,
            max_n: 3,
            max_odd: 4,
            max_pad: 2,
            max_generic: 4,
            max_catalog_dim: 10,
            random_round_trips: 100,
            random_decomposable: 25,
            random_quotients: 50,
            max_block_param: 2,
            rank_one_instances: 30,
        }
    }

    /// The battery with the parameter grids cut to `m ≤ max_m`, `n ≤ max_n`.
    /// Random sweeps run over `field` when it is prime and over F_5 otherwise.
    pub fn bounded(max_m: usize, max_n: usize, field: Field) -> Self {
        let base = Self::acceptance();
        let random_field = match field {
            Field::Prime(_) => field,
            Field::Rational => base.random_field,
        };
        BatteryConfig {
            field,
            random_field,
            max_m,
            max_n,
            max_odd: max_m.max(1),
            max_pad: max_m.min(max_n).min(base.max_pad),
            max_generic: max_m.min(max_n).max(1),
            max_block_param: max_m.min(base.max_block_param).max(1),
            ..base
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatteryRow {
    pub criterion: u8,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl BatteryRow {
    fn new(criterion: u8, instance: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        BatteryRow { criterion, instance: instance.into(), passed: expected == computed, expected, computed }
    }

    fn error(criterion: u8, instance: impl Into<String>, expected: impl Into<String>, err: impl std::fmt::Display) -> Self {
        BatteryRow {
            criterion,
            instance: instance.into(),
            expected: expected.into(),
            computed: format!("error: {err}"),
            passed: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub rows: Vec<BatteryRow>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BatteryRow> {
        self.rows.iter().filter(|r| !r.passed)
    }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "capability of even-center Heisenbergs H(m,n)"),
    (2, "capability of odd-center Heisenbergs H_m"),
    (3, "capability of Heisenberg plus abelian sums"),
    (4, "capability of abelian algebras"),
    (5, "dimensions of generic generalized Heisenbergs"),
    (6, "round trips between algebras and maps"),
    (7, "Jacobi span of decomposable maps"),
    (8, "epicenter under quotients of the target"),
    (9, "epicenter of block sums with disjoint targets"),
    (10, "Schur multiplier spot values"),
    (11, "rank-one classification"),
];

pub fn run(config: &BatteryConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(config, id)).collect()
}

pub fn run_criterion(config: &BatteryConfig, id: u8) -> CriterionResult {
    let title = CRITERIA.iter().find(|c| c.0 == id).map(|c| c.1).expect("known criterion");
    let start = Instant::now();
    let rows = match id {
        1 => even_heisenberg_capability(config),
        2 => odd_heisenberg_capability(config),
        3 => padded_capability(config),
        4 => abelian_capability(config),
        5 => generic_dimensions(config),
        6 => round_trips(config),
        7 => decomposable_jacobi(config),
        8 => quotient_monotonicity(config),
        9 => block_sum_epicenters(config),
        10 => multiplier_spots(config),
        11 => rank_one(config),
        _ => unreachable!(),
    };
    CriterionResult { id, title, rows, elapsed: start.elapsed() }
}

fn capable_word(capable: bool) -> &'static str {
    if capable {
        "capable"
    } else {
        "not capable"
    }
}

fn heisenberg_even(field: Field, m: usize, n: usize) -> LieSuper {
    catalog::heisenberg_even(field, m, n).expect("m + n >= 1")
}

fn heisenberg_odd(field: Field, m: usize) -> LieSuper {
    catalog::heisenberg_odd(field, m).expect("m >= 1")
}

fn lie_capability_row(criterion: u8, name: String, lie: &LieSuper, expected: bool) -> BatteryRow {
    match is_capable_lie(lie) {
        Ok(c) => BatteryRow::new(criterion, name, capable_word(expected), capable_word(c)),
        Err(e) => BatteryRow::error(criterion, name, capable_word(expected), e),
    }
}

fn even_heisenberg_capability(config: &BatteryConfig) -> Vec<BatteryRow> {
    let grid: Vec<(usize, usize)> = (0..=config.max_m)
        .flat_map(|m| (0..=config.max_n).map(move |n| (m, n)))
        .filter(|&(m, n)| m + n >= 1)
        .collect();
    let field = config.field;
    config.execution.map(grid, |(m, n)| {
        let f = SkewSuperMap::from_lie(&heisenberg_even(field, m, n)).expect("class two");
        let e = epicenter(&f);
        BatteryRow::new(1, format!("H({m},{n})"), capable_word((m, n) == (1, 0)), capable_word(e.capable))
    })
}

fn odd_heisenberg_capability(config: &BatteryConfig) -> Vec<BatteryRow> {
    let field = config.field;
    config.execution.map((1..=config.max_odd).collect(), |m| {
        let f = SkewSuperMap::from_lie(&heisenberg_odd(field, m)).expect("class two");
        BatteryRow::new(2, format!("H_{m}"), capable_word(m == 1), capable_word(epicenter(&f).capable))
    })
}

#[derive(Debug, Clone, Copy)]
enum Base {
    Even(usize, usize),
    Odd(usize),
}

impl Base {
    fn build(self, field: Field) -> LieSuper {
        match self {
            Base::Even(m, n) => heisenberg_even(field, m, n),
            Base::Odd(m) => heisenberg_odd(field, m),
        }
    }

    fn name(self) -> String {
        match self {
            Base::Even(m, n) => format!("H({m},{n})"),
            Base::Odd(m) => format!("H_{m}"),
        }
    }

    fn class(self, abelian: Dims) -> RankOneClass {
        match self {
            Base::Even(m, n) => RankOneClass::EvenCenter { m, n, abelian },
            Base::Odd(m) => RankOneClass::OddCenter { m, abelian },
        }
    }
}

fn padded_capability(config: &BatteryConfig) -> Vec<BatteryRow> {
    let bases = [
        (Base::Even(1, 0), true),
        (Base::Odd(1), true),
        (Base::Even(2, 0), false),
        (Base::Even(0, 1), false),
        (Base::Odd(2), false),
    ];
    let pads: Vec<(usize, usize)> =
        (0..=config.max_pad).flat_map(|k| (0..=config.max_pad).map(move |l| (k, l))).collect();
    let cases: Vec<_> = bases.iter().flat_map(|&b| pads.iter().map(move |&p| (b, p))).collect();
    let field = config.field;
    config.execution.map(cases, |((base, expected), (k, l))| {
        let lie = base.build(field).direct_sum(&catalog::abelian(field, k, l));
        lie_capability_row(3, format!("{}⊕A({k}|{l})", base.name()), &lie, expected)
    })
}

/// `A(m|n)` is `L_f / Z(L_f)` for `f` free on `(m|n)` exactly when that `f`
/// exists and is non-degenerate.
fn abelian_oracle(field: Field, m: usize, n: usize) -> bool {
    catalog::generic_full(field, m, n).is_ok_and(|f| f.is_nondegenerate())
}

fn abelian_capability(config: &BatteryConfig) -> Vec<BatteryRow> {
    let top = config.max_m.max(config.max_n);
    let grid: Vec<(usize, usize)> = (0..=top).flat_map(|m| (0..=top).map(move |n| (m, n))).collect();
    let field = config.field;
    config.execution.map(grid, |(m, n)| {
        let lie = catalog::abelian(field, m, n);
        let rule = abelian_capable(Dims::new(m, n));
        let via_lie = is_capable_lie(&lie);
        let computed = match via_lie {
            Ok(c) if c == rule => capable_word(c).to_string(),
            Ok(c) => format!("rule {} / dispatch {}", capable_word(rule), capable_word(c)),
            Err(e) => format!("error: {e}"),
        };
        BatteryRow::new(4, format!("A({m}|{n})"), capable_word(abelian_oracle(field, m, n)), computed)
    })
}

fn generic_dimensions(config: &BatteryConfig) -> Vec<BatteryRow> {
    let top = config.max_generic;
    let grid: Vec<(usize, usize)> = (1..=top).flat_map(|m| (1..=top).map(move |n| (m, n))).collect();
    let field = config.field;
    let rows = config.execution.map(grid, |(m, n)| {
        let c_m2 = choose2(m);
        let c_m1 = choose2(m + 1);
        let c_n1 = choose2(n + 1);
        // Z(L_f) = L_f² is only claimed for the full object: the even variant
        // with m = 1 leaves u1 central outside L_f².
        let describe = |f: SkewSuperMap, centre: bool| -> String {
            match f.to_lie() {
                Ok(l) if centre => {
                    format!("rank {}, L_f {}, Z(L_f) = L_f²: {}", f.rank(), l.dims(), l.is_generalized_heisenberg())
                }
                Ok(l) => format!("rank {}, L_f {}", f.rank(), l.dims()),
                Err(e) => format!("error: {e}"),
            }
        };
        let full = catalog::generic_full(field, m, n).map(|f| describe(f, true));
        let even = catalog::generic_even_full(field, m, n).map(|f| describe(f, false));
        let odd = catalog::generic_odd_full(field, m, n).map(|f| describe(f, false));
        let unwrap = |r: Result<String, catalog::CatalogError>| r.unwrap_or_else(|e| format!("error: {e}"));
        vec![
            BatteryRow::new(
                5,
                format!("full ({m}|{n})"),
                format!(
                    "rank {}, L_f {}, Z(L_f) = L_f²: true",
                    Dims::new(c_m2 + c_n1, m * n),
                    Dims::new(c_m1 + c_n1, m * n + n)
                ),
                unwrap(full),
            ),
            BatteryRow::new(
                5,
                format!("even ({m}|{n})"),
                format!("rank {}, L_f {}", Dims::new(c_m2 + c_n1, 0), Dims::new(c_m1 + c_n1, n)),
                unwrap(even),
            ),
            BatteryRow::new(
                5,
                format!("odd ({m}|{n})"),
                format!("rank {}, L_f {}", Dims::new(0, m * n), Dims::new(m, m * n + n)),
                unwrap(odd),
            ),
        ]
    });
    rows.into_iter().flatten().collect()
}

/// A feasible random shape with `dim V ≤ (bound|bound)` and small rank.
fn random_shape(rng: &mut Rng, bound: usize, max_rank: usize) -> (Dims, Dims) {
    loop {
        let dims = Dims::new(rng.below(bound as u64 + 1) as usize, rng.below(bound as u64 + 1) as usize);
        let free = catalog::free_rank(dims);
        if free.is_zero() {
            continue;
        }
        let r = rng.below(free.even.min(max_rank) as u64 + 1) as usize;
        let s = rng.below(free.odd.min(max_rank) as u64 + 1) as usize;
        if r + s > 0 {
            return (dims, Dims::new(r, s));
        }
    }
}

fn lie_round_trip(lie: &LieSuper) -> Result<bool, String> {
    let frame = LieFrame::new(lie).map_err(|e| e.to_string())?;
    let rebuilt = frame.map.to_lie().map_err(|e| e.to_string())?;
    let iso = frame.canonical_iso(lie);
    let pair = MorphismPair::from_lie_hom(&rebuilt, lie, &iso).map_err(|e| e.to_string())?;
    let again = SkewSuperMap::from_lie(&rebuilt).map_err(|e| e.to_string())?;
    Ok(pair.is_isomorphism() && pair.commutes(&again, &frame.map) && again == frame.map)
}

fn map_round_trip(f: &SkewSuperMap) -> Result<bool, String> {
    let l = f.to_lie().map_err(|e| e.to_string())?;
    let back = SkewSuperMap::from_lie(&l).map_err(|e| e.to_string())?;
    Ok(back == *f && lie_round_trip(&l)?)
}

enum RoundTripCase {
    Lie(String, LieSuper),
    Map(String, SkewSuperMap),
    Random(usize, u64),
}

fn round_trips(config: &BatteryConfig) -> Vec<BatteryRow> {
    let field = config.field;
    let limit = config.max_catalog_dim;
    let mut cases = Vec::new();
    for m in 0..=limit {
        for n in 0..=limit {
            if m + n >= 1 && 2 * m + 1 + n <= limit {
                cases.push(RoundTripCase::Lie(format!("H({m},{n})"), heisenberg_even(field, m, n)));
            }
        }
    }
    for m in (1..).take_while(|m| 2 * m < limit) {
        cases.push(RoundTripCase::Lie(format!("H_{m}"), heisenberg_odd(field, m)));
    }
    type Generic = fn(Field, usize, usize) -> Result<SkewSuperMap, catalog::CatalogError>;
    let families: [(&str, Generic); 3] = [
        ("generic_full", catalog::generic_full),
        ("generic_even_full", catalog::generic_even_full),
        ("generic_odd_full", catalog::generic_odd_full),
    ];
    for (name, build) in families {
        for m in 0..=limit {
            for n in 0..=limit {
                if let Ok(f) = build(field, m, n) {
                    if (f.dimension() + f.rank()).total() <= limit {
                        cases.push(RoundTripCase::Map(format!("{name}({m},{n})"), f));
                    }
                }
            }
        }
    }
    let mut rng = Rng::new(config.seed);
    for i in 0..config.random_round_trips {
        cases.push(RoundTripCase::Random(i, rng.next_seed()));
    }
    let random_field = config.random_field;
    config.execution.map(cases, |case| {
        let (name, outcome) = match case {
            RoundTripCase::Lie(name, lie) => (name, lie_round_trip(&lie)),
            RoundTripCase::Map(name, f) => (name, map_round_trip(&f)),
            RoundTripCase::Random(i, seed) => {
                let mut rng = Rng::new(seed);
                let (dims, rank) = random_shape(&mut rng, 3, 9);
                let f = catalog::random_sske(dims.even, dims.odd, rank.even, rank.odd, seed, random_field);
                let name = format!("random #{i} V{dims} W{rank}");
                match f {
                    Ok(f) => (name, map_round_trip(&f)),
                    Err(e) => (name, Err(e.to_string())),
                }
            }
        };
        match outcome {
            Ok(ok) => BatteryRow::new(6, name, "round trip exact", if ok { "round trip exact" } else { "mismatch" }),
            Err(e) => BatteryRow::error(6, name, "round trip exact", e),
        }
    })
}

fn random_block_dims(rng: &mut Rng, bound: usize) -> Dims {
    loop {
        let d = Dims::new(rng.below(bound as u64 + 1) as usize, rng.below(bound as u64 + 1) as usize);
        if !catalog::free_rank(d).is_zero() {
            return d;
        }
    }
}

fn decomposable_jacobi(config: &BatteryConfig) -> Vec<BatteryRow> {
    let mut rng = Rng::new(config.seed ^ 0x07);
    let seeds: Vec<(usize, u64)> = (0..config.random_decomposable).map(|i| (i, rng.next_seed())).collect();
    let field = config.random_field;
    config.execution.map(seeds, |(i, seed)| {
        let mut rng = Rng::new(seed);
        let first = random_block_dims(&mut rng, 3);
        let second = random_block_dims(&mut rng, 3);
        let free = catalog::free_rank(first) + catalog::free_rank(second);
        let rank = loop {
            let r = Dims::new(
                rng.below(free.even.min(3) as u64 + 1) as usize,
                rng.below(free.odd.min(3) as u64 + 1) as usize,
            );
            if !r.is_zero() {
                break r;
            }
        };
        let name = format!("random #{i} V{first}⊕{second} W{rank}");
        let outcome = catalog::random_block_sske(first, second, rank, seed, field)
            .map_err(|e| e.to_string())
            .and_then(|(f, v1, v2)| decomposable_xf_check(&f, &v1, &v2).map_err(|e| e.to_string()));
        match outcome {
            Ok(r) => BatteryRow::new(
                7,
                name,
                "X_f = predicted",
                if r.holds {
                    "X_f = predicted".to_string()
                } else {
                    format!("X_f {} vs predicted {}", r.jacobi_dims, r.predicted_dims)
                },
            ),
            Err(e) => BatteryRow::error(7, name, "X_f = predicted", e),
        }
    })
}

fn quotient_monotonicity(config: &BatteryConfig) -> Vec<BatteryRow> {
    let mut rng = Rng::new(config.seed ^ 0x08);
    let seeds: Vec<(usize, u64)> = (0..config.random_quotients).map(|i| (i, rng.next_seed())).collect();
    let field = config.random_field;
    config.execution.map(seeds, |(i, seed)| {
        let mut rng = Rng::new(seed);
        let (dims, rank) = random_shape(&mut rng, 3, 4);
        let ideal_dims = loop {
            let d = Dims::new(rng.below(rank.even as u64 + 1) as usize, rng.below(rank.odd as u64 + 1) as usize);
            if d != rank {
                break d;
            }
        };
        let name = format!("random #{i} V{dims} W{rank} I{ideal_dims}");
        let outcome = catalog::random_sske(dims.even, dims.odd, rank.even, rank.odd, seed, field)
            .map_err(|e| e.to_string())
            .and_then(|f| {
                let ideal = catalog::random_subspace(field, rank, ideal_dims, &mut rng);
                check_quotient_monotonicity(&f, &ideal).map_err(|e| e.to_string())
            });
        match outcome {
            Ok(ok) => BatteryRow::new(8, name, "contained", if ok { "contained" } else { "not contained" }),
            Err(e) => BatteryRow::error(8, name, "contained", e),
        }
    })
}

/// Indices of the first summand inside a block sum whose first summand has dimension `first`.
fn first_block(dims: Dims, first: Dims, field: Field) -> (GradedSubspace, GradedSubspace) {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for i in 0..dims.total() {
        let in_first = if i < dims.even { i < first.even } else { i - dims.even < first.odd };
        let v = GradedVector::basis(field, dims, i);
        if in_first {
            a.push(v);
        } else {
            b.push(v);
        }
    }
    (
        GradedSubspace::from_generators(field, dims, &a).expect("basis vectors"),
        GradedSubspace::from_generators(field, dims, &b).expect("basis vectors"),
    )
}

fn block_sum_epicenters(config: &BatteryConfig) -> Vec<BatteryRow> {
    let top = config.max_block_param;
    let mut bases = Vec::new();
    for m in 0..=top {
        for n in 0..=top {
            if m + n >= 1 {
                bases.push(Base::Even(m, n));
            }
        }
    }
    bases.extend((1..=top).map(Base::Odd));
    let mut pairs = Vec::new();
    for (i, &a) in bases.iter().enumerate() {
        for &b in &bases[i..] {
            pairs.push((a, b));
        }
    }
    let field = config.field;
    config.execution.map(pairs, |(a, b)| {
        let (la, lb) = (a.build(field), b.build(field));
        let (fa, fb) = (SkewSuperMap::from_lie(&la).expect("class two"), SkewSuperMap::from_lie(&lb).expect("class two"));
        let f = fa.direct_sum(&fb);
        let (v1, v2) = first_block(f.dimension(), fa.dimension(), field);
        let name = format!("{}⊕{}", a.name(), b.name());
        let capable = epicenter(&fa).capable && epicenter(&fb).capable;
        let expected = format!(
            "direct case, Z* split: true, blocks {} / {}, L_f {}, {}",
            a.class(Dims::ZERO),
            b.class(Dims::ZERO),
            la.dims() + lb.dims(),
            capable_word(capable)
        );
        let computed = (|| -> Result<String, String> {
            let report = central_sum_epicenter_check(&f, &v1, &v2).map_err(|e| e.to_string())?;
            let case = match report.case {
                CentralSumCase::Direct => "direct case",
                _ => "other case",
            };
            let classes = [&v1, &v2]
                .iter()
                .map(|v| {
                    f.restrict(v)
                        .map_err(|e| e.to_string())
                        .and_then(|r| classify_rank_one(&r).map_err(|e| e.to_string()))
                        .map(|c| c.to_string())
                })
                .collect::<Result<Vec<_>, _>>()?;
            let lf = f.to_lie().map_err(|e| e.to_string())?;
            let lf_capable = is_capable_lie(&lf).map_err(|e| e.to_string())?;
            Ok(format!(
                "{case}, Z* split: {}, blocks {} / {}, L_f {}, {}",
                report.holds == Some(true),
                classes[0],
                classes[1],
                lf.dims(),
                capable_word(lf_capable)
            ))
        })();
        match computed {
            Ok(c) => BatteryRow::new(9, name, expected, c),
            Err(e) => BatteryRow::error(9, name, expected, e),
        }
    })
}

fn multiplier_spots(config: &BatteryConfig) -> Vec<BatteryRow> {
    let field = config.field;
    let cases = vec![
        ("H(1,0)", heisenberg_even(field, 1, 0), Dims::new(2, 0)),
        ("H(2,0)", heisenberg_even(field, 2, 0), Dims::new(5, 0)),
        ("H_1", heisenberg_odd(field, 1), Dims::new(1, 1)),
    ];
    config.execution.map(cases, |(name, lie, expected)| {
        let f = SkewSuperMap::from_lie(&lie).expect("class two");
        BatteryRow::new(10, name, format!("M = {expected}"), format!("M = {}", multiplier(&f).total_dims))
    })
}

fn rank_one(config: &BatteryConfig) -> Vec<BatteryRow> {
    let mut rng = Rng::new(config.seed ^ 0x0b);
    let seeds: Vec<(usize, u64)> = (0..config.rank_one_instances).map(|i| (i, rng.next_seed())).collect();
    let field = config.random_field;
    config.execution.map(seeds, |(i, seed)| {
        let mut rng = Rng::new(seed);
        let base = if rng.below(2) == 0 {
            let (m, n) = loop {
                let (m, n) = (rng.below(3) as usize, rng.below(3) as usize);
                if m + n >= 1 {
                    break (m, n);
                }
            };
            Base::Even(m, n)
        } else {
            Base::Odd(rng.below(2) as usize + 1)
        };
        let pad = Dims::new(rng.below(3) as usize, rng.below(3) as usize);
        let lie = base.build(field).direct_sum(&catalog::abelian(field, pad.even, pad.odd));
        let iso = catalog::random_invertible(field, lie.dims(), &mut rng);
        let expected = base.class(pad);
        let name = format!("#{i} {expected} in a random basis");
        let computed = lie
            .transport(&iso)
            .map_err(|e| e.to_string())
            .and_then(|l| SkewSuperMap::from_lie(&l).map_err(|e| e.to_string()))
            .and_then(|f| classify_rank_one(&f).map_err(|e| e.to_string()));
        match computed {
            Ok(c) => BatteryRow::new(11, name, expected.to_string(), c.to_string()),
            Err(e) => BatteryRow::error(11, name, expected.to_string(), e),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_bounds_include_the_capable_heisenberg() {
        let config = BatteryConfig::bounded(1, 1, Field::Rational);
        let rows = run_criterion(&config, 1).rows;
        assert!(rows.iter().any(|r| r.instance == "H(1,0)" && r.expected == "capable" && r.passed));
    }

    #[test]
    fn execution_modes_agree() {
        let mut config = BatteryConfig::bounded(2, 2, Field::Rational);
        config.random_round_trips = 10;
        config.execution = Execution::Sequential;
        let seq = run_criterion(&config, 6).rows;
        config.execution = Execution::Parallel;
        assert_eq!(seq, run_criterion(&config, 6).rows);
    }
}
