//! The analysis report. Field order is fixed, so output is byte-for-byte
//! reproducible for a given input.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};
use superlie::invariants::{self, classify_rank_one, epicenter_from, jacobi_span, multiplier_from, MultiplierReport};
use superlie::{Dims, LieSuper, NilpotencyClass, SkewSuperMap};

use crate::document::{emit, InputDocument, Object};

#[derive(Debug, Clone, Serialize)]
pub struct LieSection {
    pub dims: Dims,
    pub derived: Dims,
    pub center: Dims,
    pub class: String,
    pub generalized_heisenberg_rank: Option<Dims>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MapSection {
    pub dimension: Dims,
    pub rank: Dims,
    pub radical: Dims,
    pub nondegenerate: bool,
    /// Dimensions of `L_f`.
    pub lie_dims: Dims,
}

#[derive(Debug, Clone, Serialize)]
pub struct EpicenterSection {
    pub dims: Dims,
    /// Basis of `Z*(f)`, each vector as `(label of W, scalar)` pairs.
    pub basis: Vec<Vec<(String, String)>>,
    pub image_witness: Option<Vec<bool>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub fingerprint: String,
    pub kind: &'static str,
    pub field: String,
    pub lie: Option<LieSection>,
    pub map: Option<MapSection>,
    pub jacobi_span: Option<Dims>,
    pub multiplier: Option<MultiplierReport>,
    pub epicenter: Option<EpicenterSection>,
    pub capable: bool,
    pub classification: Option<String>,
}

pub fn fingerprint(doc: &InputDocument) -> String {
    hex::encode(Sha256::digest(emit(doc).as_bytes()))
}

fn lie_section(l: &LieSuper) -> LieSection {
    LieSection {
        dims: l.dims(),
        derived: l.derived_subalgebra().dims(),
        center: l.center().dims(),
        class: l.nilpotency_class().to_string(),
        generalized_heisenberg_rank: l.generalized_heisenberg_rank(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalyzeError {
    /// Structural validation failed.
    Invalid(Vec<String>),
    /// Nilpotency class above two: the invariants do not apply.
    HigherClass,
}

/// The full invariant suite for a validated object.
pub fn analyze(doc: &InputDocument, object: &Object) -> Result<ReportDocument, AnalyzeError> {
    let problems = crate::document::validate(object);
    if !problems.is_empty() {
        return Err(AnalyzeError::Invalid(problems));
    }
    let (kind, field, lie, f) = match object {
        Object::Lie(l) => {
            let section = lie_section(l);
            match l.nilpotency_class() {
                NilpotencyClass::Abelian => {
                    return Ok(ReportDocument {
                        fingerprint: fingerprint(doc),
                        kind: "lie",
                        field: l.field().to_string(),
                        lie: Some(section),
                        map: None,
                        jacobi_span: None,
                        multiplier: None,
                        epicenter: None,
                        capable: invariants::abelian_capable(l.dims()),
                        classification: Some(format!("A({}|{})", l.dims().even, l.dims().odd)),
                    })
                }
                NilpotencyClass::Higher => return Err(AnalyzeError::HigherClass),
                NilpotencyClass::ClassTwo => {}
            }
            let f = SkewSuperMap::from_lie(l).expect("class two");
            ("lie", l.field(), Some(section), f)
        }
        Object::Map(f) => ("sske", f.field(), None, f.clone()),
    };
    let x = jacobi_span(&f);
    let e = epicenter_from(&f, &x);
    let basis = e
        .subspace
        .basis()
        .iter()
        .map(|v| {
            v.coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (f.target().label(k).to_string(), c.to_string()))
                .collect()
        })
        .collect();
    let lie_dims = f.dimension() + f.rank();
    Ok(ReportDocument {
        fingerprint: fingerprint(doc),
        kind,
        field: field.to_string(),
        lie,
        map: Some(MapSection {
            dimension: f.dimension(),
            rank: f.rank(),
            radical: f.radical().dims(),
            nondegenerate: f.is_nondegenerate(),
            lie_dims,
        }),
        jacobi_span: Some(x.subspace.dims()),
        multiplier: Some(multiplier_from(&f, &x)),
        epicenter: Some(EpicenterSection { dims: e.subspace.dims(), basis, image_witness: e.image_witness.clone() }),
        capable: e.capable,
        classification: classify_rank_one(&f).ok().map(|c| c.to_string()),
    })
}

pub fn to_json(report: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

pub fn to_text(report: &ReportDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "input        {} over {} (sha256 {})", report.kind, report.field, report.fingerprint);
    if let Some(l) = &report.lie {
        let _ = writeln!(s, "algebra      dims {}, L² {}, Z(L) {}, {}", l.dims, l.derived, l.center, l.class);
        if let Some(r) = l.generalized_heisenberg_rank {
            let _ = writeln!(s, "             generalized Heisenberg of rank {r}");
        }
    }
    if let Some(m) = &report.map {
        let _ = writeln!(
            s,
            "map          dim V {}, dim W {}, radical {}, L_f {}",
            m.dimension, m.rank, m.radical, m.lie_dims
        );
    }
    if let Some(x) = report.jacobi_span {
        let _ = writeln!(s, "X_f          {x}");
    }
    if let Some(m) = &report.multiplier {
        let _ = writeln!(
            s,
            "M(f)         {} = {} (quotient) + {} (ker ρ)",
            m.total_dims, m.quotient_dims, m.kernel_rho_dims
        );
    }
    if let Some(e) = &report.epicenter {
        let _ = writeln!(s, "Z*(f)        {}", e.dims);
        for v in &e.basis {
            let terms: Vec<String> = v.iter().map(|(l, c)| format!("{c}·{l}")).collect();
            let _ = writeln!(s, "             {}", terms.join(" + "));
        }
    }
    let _ = writeln!(s, "capable      {}", report.capable);
    if let Some(c) = &report.classification {
        let _ = writeln!(s, "type         {c}");
    }
    s
}
