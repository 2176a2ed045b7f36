//! The input document: one algebra or one map per file, JSON syntax, scalars
//! as strings so that values stay exact.

use std::fmt;

use serde::{Deserialize, Serialize};
use superlie::{Field, FieldError, GradedVector, LieError, LieSuper, SkewSuperMap, SskeError, SuperSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    Rational,
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field, FieldError> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { p } => Field::prime(p),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { p },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Lie,
    Sske,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    #[serde(default)]
    pub even: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
}

impl From<&SuperSpace> for SpaceSpec {
    fn from(s: &SuperSpace) -> Self {
        SpaceSpec { even: s.even_labels().to_vec(), odd: s.odd_labels().to_vec() }
    }
}

/// `[left, right] = Σ scalar · label` (or `f(left, right)` for maps).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub left: String,
    pub right: String,
    pub value: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub kind: Kind,
    pub space: SpaceSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at line {}, column {}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemanticError {
    Field(FieldError),
    DuplicateLabel(String),
    UnknownLabel { label: String, entry: (String, String) },
    Scalar { entry: (String, String), error: FieldError },
    Parity { label: String, entry: (String, String) },
    Kind(String),
    Conflict { left: String, right: String },
}

impl fmt::Display for SemanticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticError::Field(e) => write!(f, "{e}"),
            SemanticError::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            SemanticError::UnknownLabel { label, entry: (l, r) } => {
                write!(f, "unknown label {label:?} in entry ({l}, {r})")
            }
            SemanticError::Scalar { entry: (l, r), error } => write!(f, "entry ({l}, {r}): {error}"),
            SemanticError::Parity { label, entry: (l, r) } => write!(
                f,
                "parity violation: value of ({l}, {r}) uses {label:?}, whose parity is not |{l}| + |{r}|"
            ),
            SemanticError::Kind(msg) => write!(f, "{msg}"),
            SemanticError::Conflict { left, right } => {
                write!(f, "conflicting values for ({left}, {right}) and its skew partner")
            }
        }
    }
}

pub fn parse(text: &str) -> Result<InputDocument, SyntaxError> {
    serde_json::from_str(text).map_err(|e| SyntaxError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Canonical pretty-printed form; `parse(&emit(doc)) == doc`.
pub fn emit(doc: &InputDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone)]
pub enum Object {
    Lie(LieSuper),
    Map(SkewSuperMap),
}

fn space(spec: &SpaceSpec, errors: &mut Vec<SemanticError>) -> Option<SuperSpace> {
    match SuperSpace::new(spec.even.iter().cloned(), spec.odd.iter().cloned()) {
        Ok(s) => Some(s),
        Err(superlie::LinalgError::DuplicateLabel(l)) => {
            errors.push(SemanticError::DuplicateLabel(l));
            None
        }
        Err(e) => unreachable!("space construction only fails on duplicates: {e}"),
    }
}

/// Resolves labels and scalars into a concrete algebra or map. Structural
/// validity (Jacobi identity, spanning image) is checked separately.
pub fn build(doc: &InputDocument) -> Result<Object, Vec<SemanticError>> {
    let field = doc.field.to_field().map_err(|e| vec![SemanticError::Field(e)])?;
    let mut errors = Vec::new();
    let (entries, target_spec) = match doc.kind {
        Kind::Lie => {
            if doc.target.is_some() {
                errors.push(SemanticError::Kind("a lie document has no \"target\"".into()));
            }
            if !doc.values.is_empty() {
                errors.push(SemanticError::Kind("a lie document uses \"brackets\", not \"values\"".into()));
            }
            (&doc.brackets, None)
        }
        Kind::Sske => {
            if doc.target.is_none() {
                errors.push(SemanticError::Kind("an sske document needs a \"target\" space".into()));
            }
            if !doc.brackets.is_empty() {
                errors.push(SemanticError::Kind("an sske document uses \"values\", not \"brackets\"".into()));
            }
            (&doc.values, doc.target.as_ref())
        }
    };
    let source = space(&doc.space, &mut errors);
    let target = match target_spec {
        Some(t) => space(t, &mut errors),
        None => source.clone(),
    };
    let (Some(source), Some(target)) = (source, target) else {
        return Err(errors);
    };
    let dims = target.dims();
    let mut resolved = Vec::new();
    for entry in entries {
        let key = (entry.left.clone(), entry.right.clone());
        let unknown = |label: &str| SemanticError::UnknownLabel { label: label.to_string(), entry: key.clone() };
        let (i, j) = match (source.index_of(&entry.left), source.index_of(&entry.right)) {
            (Some(i), Some(j)) => (i, j),
            (i, j) => {
                if i.is_none() {
                    errors.push(unknown(&entry.left));
                }
                if j.is_none() && entry.right != entry.left {
                    errors.push(unknown(&entry.right));
                }
                continue;
            }
        };
        let parity = source.parity(i) + source.parity(j);
        let mut value = GradedVector::zero(field, dims);
        for (label, scalar) in &entry.value {
            let Some(k) = target.index_of(label) else {
                errors.push(unknown(label));
                continue;
            };
            let c = match field.parse_scalar(scalar) {
                Ok(c) => c,
                Err(error) => {
                    errors.push(SemanticError::Scalar { entry: key.clone(), error });
                    continue;
                }
            };
            if !c.is_zero() && target.parity(k) != parity {
                errors.push(SemanticError::Parity { label: label.clone(), entry: key.clone() });
            }
            value.add_scaled(&c, &GradedVector::basis(field, dims, k));
        }
        resolved.push((i, j, value));
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let conflict = |e: LieError| match e {
        LieError::Conflict { left, right } => vec![SemanticError::Conflict { left, right }],
        other => unreachable!("entries were resolved against the space: {other}"),
    };
    match doc.kind {
        Kind::Lie => LieSuper::from_brackets(field, source, resolved).map(Object::Lie).map_err(conflict),
        Kind::Sske => SkewSuperMap::from_values(field, source, target, resolved).map(Object::Map).map_err(|e| match e {
            SskeError::Lie(e) => conflict(e),
            other => unreachable!("entries were resolved against the spaces: {other}"),
        }),
    }
}

fn entries(space: &SuperSpace, value_space: &SuperSpace, value: impl Fn(usize, usize) -> GradedVector) -> Vec<Entry> {
    let d = space.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            let v = value(i, j);
            if v.is_zero() {
                continue;
            }
            out.push(Entry {
                left: space.label(i).to_string(),
                right: space.label(j).to_string(),
                value: v
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (value_space.label(k).to_string(), c.to_string()))
                    .collect(),
            });
        }
    }
    out
}

pub fn lie_document(lie: &LieSuper) -> InputDocument {
    InputDocument {
        field: lie.field().into(),
        kind: Kind::Lie,
        space: lie.space().into(),
        target: None,
        brackets: entries(lie.space(), lie.space(), |i, j| lie.bracket_basis(i, j).clone()),
        values: Vec::new(),
    }
}

pub fn map_document(f: &SkewSuperMap) -> InputDocument {
    InputDocument {
        field: f.field().into(),
        kind: Kind::Sske,
        space: f.source().into(),
        target: Some(f.target().into()),
        brackets: Vec::new(),
        values: entries(f.source(), f.target(), |i, j| f.value_basis(i, j).clone()),
    }
}

pub fn document(object: &Object) -> InputDocument {
    match object {
        Object::Lie(l) => lie_document(l),
        Object::Map(f) => map_document(f),
    }
}

/// Human-readable descriptions of every structural problem.
pub fn validate(object: &Object) -> Vec<String> {
    match object {
        Object::Lie(l) => l.validate().iter().map(ToString::to_string).collect(),
        Object::Map(f) => f.validate().iter().map(ToString::to_string).collect(),
    }
}
