//! Grading-preserving skew-supersymmetric bilinear maps `f: V × V → W` whose
//! image spans `W`, their morphisms, and the passage to and from class-two
//! Lie superalgebras.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::liesuper::{complete_skew_table, LieError, LieSuper, NilpotencyClass};
use crate::linalg::{kernel, Dims, GradedSubspace, GradedVector, LinalgError, LinearMap, Parity, SuperSpace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SskeError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("not a valid object: {}", join(.0))]
    Invalid(Vec<SskeViolation>),
    #[error("algebra is not nilpotent of class two (found {0})")]
    NotClassTwo(NilpotencyClass),
    #[error("restriction has zero image, so it is not an object")]
    ZeroImage,
    #[error("map is not a Lie superalgebra homomorphism")]
    NotHomomorphism,
    #[error("subspaces do not form a non-trivial decomposition")]
    NotDecomposition,
    #[error("quotient by the whole target leaves nothing")]
    WholeTarget,
    #[error("morphism dimensions do not compose")]
    Incompatible,
}

fn join(v: &[SskeViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SskeViolation {
    EmptyTarget,
    Grading { left: String, right: String },
    SkewSymmetry { left: String, right: String },
    ImageDoesNotSpan { image: Dims, target: Dims },
}

impl fmt::Display for SskeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SskeViolation::EmptyTarget => write!(f, "target space is zero"),
            SskeViolation::Grading { left, right } => {
                write!(f, "grading: f({left}, {right}) is not of parity |{left}|+|{right}|")
            }
            SskeViolation::SkewSymmetry { left, right } => {
                write!(f, "graded skew-symmetry fails for ({left}, {right})")
            }
            SskeViolation::ImageDoesNotSpan { image, target } => {
                write!(f, "image spans {image}, target has dimension {target}")
            }
        }
    }
}

/// `f: V × V → W` stored densely: `table[i * dim V + j] = f(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewSuperMap {
    field: Field,
    source: SuperSpace,
    target: SuperSpace,
    table: Vec<GradedVector>,
}

impl SkewSuperMap {
    pub fn from_table(
        field: Field,
        source: SuperSpace,
        target: SuperSpace,
        table: Vec<GradedVector>,
    ) -> Result<Self, SskeError> {
        let d = source.dim();
        if table.len() != d * d {
            return Err(LieError::TableSize { expected: d * d, found: table.len() }.into());
        }
        if let Some(v) = table.iter().find(|v| v.dims() != target.dims()) {
            return Err(LinalgError::AmbientMismatch { expected: target.dims(), found: v.dims() }.into());
        }
        Ok(SkewSuperMap { field, source, target, table })
    }

    /// Sparse construction; missing values are zero and graded skew partners
    /// are filled in.
    pub fn from_values(
        field: Field,
        source: SuperSpace,
        target: SuperSpace,
        entries: impl IntoIterator<Item = (usize, usize, GradedVector)>,
    ) -> Result<Self, SskeError> {
        let table = complete_skew_table(field, &source, target.dims(), entries)?;
        Ok(SkewSuperMap { field, source, target, table })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    /// Dimension of `V`.
    pub fn dimension(&self) -> Dims {
        self.source.dims()
    }

    /// Dimension of `W`.
    pub fn rank(&self) -> Dims {
        self.target.dims()
    }

    pub fn value_basis(&self, i: usize, j: usize) -> &GradedVector {
        &self.table[i * self.source.dim() + j]
    }

    pub fn value(&self, u: &GradedVector, v: &GradedVector) -> GradedVector {
        let d = self.source.dim();
        let mut out = GradedVector::zero(self.field, self.rank());
        for (i, a) in u.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coords().iter().enumerate() {
                if !b.is_zero() {
                    out.add_scaled(&(a * b), &self.table[i * d + j]);
                }
            }
        }
        out
    }

    pub fn source_vector(&self, i: usize) -> GradedVector {
        GradedVector::basis(self.field, self.dimension(), i)
    }

    /// Span of `f(V, V)` inside `W`.
    pub fn image_span(&self) -> GradedSubspace {
        GradedSubspace::from_generators(self.field, self.rank(), &self.table).expect("values live in W")
    }

    pub fn validate(&self) -> Vec<SskeViolation> {
        let d = self.source.dim();
        let label = |i: usize| self.source.label(i).to_string();
        let parity = |i: usize| self.source.parity(i);
        let mut out = Vec::new();
        if self.rank().is_zero() {
            out.push(SskeViolation::EmptyTarget);
        }
        for i in 0..d {
            for j in 0..d {
                if !self.value_basis(i, j).lies_in(parity(i) + parity(j)) {
                    out.push(SskeViolation::Grading { left: label(i), right: label(j) });
                }
            }
        }
        for i in 0..d {
            for j in i..d {
                let sign = -Parity::sign(parity(i), parity(j));
                if *self.value_basis(i, j) != self.value_basis(j, i).scaled(&self.field.from_i64(sign)) {
                    out.push(SskeViolation::SkewSymmetry { left: label(i), right: label(j) });
                }
            }
        }
        let image = self.image_span().dims();
        if image != self.rank() {
            out.push(SskeViolation::ImageDoesNotSpan { image, target: self.rank() });
        }
        out
    }

    pub fn require_valid(&self) -> Result<(), SskeError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(SskeError::Invalid(v))
        }
    }

    /// `{u : f(v, u) = 0 for all v}`, computed blockwise.
    pub fn radical(&self) -> GradedSubspace {
        let dims = self.dimension();
        let d = dims.total();
        let w = self.rank().total();
        let mut blocks = [Vec::new(), Vec::new()];
        for parity in [Parity::Even, Parity::Odd] {
            let unknowns: Vec<usize> = dims.block(parity).collect();
            let rows = (0..d).flat_map(|i| {
                let unknowns = &unknowns;
                (0..w).map(move |t| {
                    unknowns
                        .iter()
                        .map(|&a| self.table[i * d + a].coords()[t].clone())
                        .collect::<Vec<Scalar>>()
                })
            });
            blocks[parity.bit() as usize] = kernel(self.field, unknowns.len(), rows);
        }
        let [even, odd] = blocks;
        GradedSubspace::from_block_rows(self.field, dims, even, odd)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().is_zero()
    }

    fn block_vanishes(&self, a: Parity, b: Parity) -> bool {
        let dims = self.dimension();
        dims.block(a)
            .all(|i| dims.block(b).all(|j| self.value_basis(i, j).is_zero()))
    }

    /// `f(V₀, V₁) = 0`.
    pub fn is_even_map(&self) -> bool {
        self.block_vanishes(Parity::Even, Parity::Odd)
    }

    /// `f(V₀, V₀) = f(V₁, V₁) = 0`.
    pub fn is_odd_map(&self) -> bool {
        self.block_vanishes(Parity::Even, Parity::Even) && self.block_vanishes(Parity::Odd, Parity::Odd)
    }

    pub fn scaled(&self, k: &Scalar) -> SkewSuperMap {
        SkewSuperMap {
            field: self.field,
            source: self.source.clone(),
            target: self.target.clone(),
            table: self.table.iter().map(|v| v.scaled(k)).collect(),
        }
    }

    /// The restriction to `V₁ × V₁`, corestricted to the span of its values.
    pub fn restrict(&self, sub: &GradedSubspace) -> Result<SkewSuperMap, SskeError> {
        Ok(self.restrict_embedded(sub)?.map)
    }

    pub fn restrict_embedded(&self, sub: &GradedSubspace) -> Result<Restriction, SskeError> {
        if sub.ambient() != self.dimension() {
            return Err(LinalgError::AmbientMismatch { expected: self.dimension(), found: sub.ambient() }.into());
        }
        let field = self.field;
        let source_basis = sub.basis();
        let source = SuperSpace::from_tagged(
            sub.pivot_indices()
                .into_iter()
                .map(|p| (self.source.label(p).to_string(), self.source.parity(p))),
        )?;
        let values: Vec<GradedVector> = source_basis
            .iter()
            .flat_map(|a| source_basis.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.value(a, b))
            .collect();
        let image = GradedSubspace::from_generators(field, self.rank(), &values)?;
        if image.is_zero() {
            return Err(SskeError::ZeroImage);
        }
        let target = SuperSpace::from_tagged(
            image
                .pivot_indices()
                .into_iter()
                .map(|p| (self.target.label(p).to_string(), self.target.parity(p))),
        )?;
        let table = values
            .iter()
            .map(|v| {
                let c = image.coordinates(v)?.expect("value lies in the image span");
                Ok(GradedVector::new(target.dims(), c))
            })
            .collect::<Result<Vec<_>, LinalgError>>()?;
        Ok(Restriction {
            map: SkewSuperMap { field, source, target, table },
            source_basis,
            target_basis: image.basis(),
        })
    }

    /// Whether `V = V₁ ⊕ V₂` non-trivially with `f(V₁, V₂) = 0`.
    pub fn verify_decomposition(&self, first: &GradedSubspace, second: &GradedSubspace) -> bool {
        let dims = self.dimension();
        if first.ambient() != dims || second.ambient() != dims {
            return false;
        }
        if first.is_zero() || second.is_zero() || first.dims() + second.dims() != dims {
            return false;
        }
        if !first.intersect(second).map(|s| s.is_zero()).unwrap_or(false) {
            return false;
        }
        let b2 = second.basis();
        first.basis().iter().all(|a| b2.iter().all(|b| self.value(a, b).is_zero()))
    }

    /// Splits along connected components of the graph `i ~ j ⇔ f(e_i, e_j) ≠ 0`.
    /// `None` only means no split aligned with the current basis exists.
    pub fn find_basis_aligned_decomposition(&self) -> Option<(GradedSubspace, GradedSubspace)> {
        let d = self.source.dim();
        if d < 2 {
            return None;
        }
        let mut parent: Vec<usize> = (0..d).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..d {
            for j in i + 1..d {
                if !self.value_basis(i, j).is_zero() {
                    let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let first_root = root(&mut parent, 0);
        let (mut first, mut second) = (Vec::new(), Vec::new());
        for i in 0..d {
            let v = self.source_vector(i);
            if root(&mut parent, i) == first_root {
                first.push(v);
            } else {
                second.push(v);
            }
        }
        if second.is_empty() {
            return None;
        }
        let dims = self.dimension();
        Some((
            GradedSubspace::from_generators(self.field, dims, &first).expect("same ambient"),
            GradedSubspace::from_generators(self.field, dims, &second).expect("same ambient"),
        ))
    }

    /// Block sum `V₁ ⊕ V₂ → W₁ ⊕ W₂`, with `f(V₁, V₂) = 0`.
    pub fn direct_sum(&self, other: &SkewSuperMap) -> SkewSuperMap {
        assert_eq!(self.field, other.field, "field mismatch");
        let field = self.field;
        let mut reserved: HashSet<String> = self.target.labels().map(str::to_string).collect();
        let src = self.source.direct_sum(&other.source, &mut reserved);
        let tgt = self.target.direct_sum(&other.target, &mut reserved);
        let (vd, wd) = (src.space.dims(), tgt.space.dims());
        let d = vd.total();
        let mut table = vec![GradedVector::zero(field, wd); d * d];
        for (summand, vpos, wpos) in [(self, &src.left, &tgt.left), (other, &src.right, &tgt.right)] {
            for i in 0..summand.source.dim() {
                for j in 0..summand.source.dim() {
                    let mut out = GradedVector::zero(field, wd);
                    for (k, c) in summand.value_basis(i, j).coords().iter().enumerate() {
                        out.add_scaled(c, &GradedVector::basis(field, wd, wpos[k]));
                    }
                    table[vpos[i] * d + vpos[j]] = out;
                }
            }
        }
        SkewSuperMap { field, source: src.space, target: tgt.space, table }
    }

    /// Basis layout of `L_f = V ⊕ W`: the space plus the flat positions of the
    /// `V` and `W` basis vectors.
    fn lie_layout(&self) -> (SuperSpace, Vec<usize>, Vec<usize>) {
        let layout = self.source.direct_sum(&self.target, &mut HashSet::new());
        (layout.space, layout.left, layout.right)
    }

    /// `L_f` on `V ⊕ W` with `[(v, w), (v', w')] = (0, f(v, v'))`.
    pub fn to_lie(&self) -> Result<LieSuper, SskeError> {
        self.require_valid()?;
        let field = self.field;
        let (space, vpos, wpos) = self.lie_layout();
        let dims = space.dims();
        let embed_w = |w: &GradedVector| {
            let mut out = GradedVector::zero(field, dims);
            for (k, c) in w.coords().iter().enumerate() {
                out.add_scaled(c, &GradedVector::basis(field, dims, wpos[k]));
            }
            out
        };
        let d = self.source.dim();
        let entries: Vec<(usize, usize, GradedVector)> = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.value_basis(i, j).is_zero())
            .map(|(i, j)| (vpos[i], vpos[j], embed_w(self.value_basis(i, j))))
            .collect();
        Ok(LieSuper::from_brackets(field, space, entries)?)
    }

    /// `f_L` for a class-two algebra.
    pub fn from_lie(lie: &LieSuper) -> Result<SkewSuperMap, SskeError> {
        Ok(LieFrame::new(lie)?.map)
    }
}

/// A restriction together with the bases of `V₁ ⊆ V` and `W₁ ⊆ W` it is written in.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub map: SkewSuperMap,
    pub source_basis: Vec<GradedVector>,
    pub target_basis: Vec<GradedVector>,
}

/// `f_L` together with the concrete transversal of `L²` used to represent `L/L²`.
#[derive(Debug, Clone)]
pub struct LieFrame {
    pub map: SkewSuperMap,
    /// Basis indices of `L` whose classes form the basis of `V = L/L²`.
    pub transversal: Vec<usize>,
    /// `L²`, whose canonical basis is the basis of `W`.
    pub derived: GradedSubspace,
}

impl LieFrame {
    pub fn new(lie: &LieSuper) -> Result<Self, SskeError> {
        match lie.nilpotency_class() {
            NilpotencyClass::ClassTwo => {}
            other => return Err(SskeError::NotClassTwo(other)),
        }
        let field = lie.field();
        let space = lie.space();
        let derived = lie.derived_subalgebra();
        let transversal = derived.complement_indices();
        let source = SuperSpace::from_tagged(
            transversal.iter().map(|&i| (space.label(i).to_string(), space.parity(i))),
        )?;
        let target = SuperSpace::from_tagged(
            derived.pivot_indices().into_iter().map(|p| (space.label(p).to_string(), space.parity(p))),
        )?;
        let mut table = Vec::with_capacity(transversal.len() * transversal.len());
        for &a in &transversal {
            for &b in &transversal {
                let c = derived
                    .coordinates(lie.bracket_basis(a, b))?
                    .expect("brackets lie in the derived subalgebra");
                table.push(GradedVector::new(target.dims(), c));
            }
        }
        Ok(LieFrame { map: SkewSuperMap { field, source, target, table }, transversal, derived })
    }

    /// The class of `x` in `L/L²`, in the basis of `V`.
    pub fn project(&self, x: &GradedVector) -> GradedVector {
        let r = self.derived.reduce(x).expect("vector of L");
        GradedVector::new(
            self.map.dimension(),
            self.transversal.iter().map(|&i| r.coords()[i].clone()).collect(),
        )
    }

    /// Coordinates in the basis of `W` of an element of `L²`.
    pub fn derived_coords(&self, w: &GradedVector) -> Option<GradedVector> {
        self.derived
            .coordinates(w)
            .expect("vector of L")
            .map(|c| GradedVector::new(self.map.rank(), c))
    }

    /// The isomorphism `L_{f_L} → L` matching `V` with the transversal and `W` with `L²`.
    pub fn canonical_iso(&self, lie: &LieSuper) -> LinearMap {
        let field = lie.field();
        let (space, vpos, wpos) = self.map.lie_layout();
        let mut images = vec![GradedVector::zero(field, lie.dims()); space.dim()];
        for (a, &t) in self.transversal.iter().enumerate() {
            images[vpos[a]] = lie.basis_vector(t);
        }
        for (k, w) in self.derived.basis().into_iter().enumerate() {
            images[wpos[k]] = w;
        }
        LinearMap::new(field, space.dims(), lie.dims(), images).expect("dims agree")
    }
}

/// A morphism `(δ₁: V₁ → V₂, δ₂: W₁ → W₂)` of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismPair {
    pub delta1: LinearMap,
    pub delta2: LinearMap,
}

impl MorphismPair {
    pub fn identity(f: &SkewSuperMap) -> Self {
        MorphismPair {
            delta1: LinearMap::identity(f.field, f.dimension()),
            delta2: LinearMap::identity(f.field, f.rank()),
        }
    }

    /// The pair induced by a homomorphism `δ: L₁ → L₂` of class-two algebras.
    pub fn from_lie_hom(source: &LieSuper, target: &LieSuper, delta: &LinearMap) -> Result<Self, SskeError> {
        if !source.is_homomorphism(target, delta) {
            return Err(SskeError::NotHomomorphism);
        }
        let (f1, f2) = (LieFrame::new(source)?, LieFrame::new(target)?);
        let field = source.field();
        let delta1 = f1
            .transversal
            .iter()
            .map(|&t| f2.project(&delta.apply(&source.basis_vector(t))))
            .collect();
        let delta2 = f1
            .derived
            .basis()
            .iter()
            .map(|w| f2.derived_coords(&delta.apply(w)).ok_or(SskeError::NotHomomorphism))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MorphismPair {
            delta1: LinearMap::new(field, f1.map.dimension(), f2.map.dimension(), delta1)?,
            delta2: LinearMap::new(field, f1.map.rank(), f2.map.rank(), delta2)?,
        })
    }

    /// `δ₂ ∘ f₁ = f₂ ∘ (δ₁ × δ₁)` on basis pairs.
    pub fn commutes(&self, source: &SkewSuperMap, target: &SkewSuperMap) -> bool {
        if self.delta1.source() != source.dimension()
            || self.delta1.target() != target.dimension()
            || self.delta2.source() != source.rank()
            || self.delta2.target() != target.rank()
        {
            return false;
        }
        let d = source.source.dim();
        let img = self.delta1.images();
        (0..d).all(|i| {
            (0..d).all(|j| self.delta2.apply(source.value_basis(i, j)) == target.value(&img[i], &img[j]))
        })
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &MorphismPair) -> Result<MorphismPair, SskeError> {
        Ok(MorphismPair {
            delta1: self.delta1.compose(&first.delta1).map_err(|_| SskeError::Incompatible)?,
            delta2: self.delta2.compose(&first.delta2).map_err(|_| SskeError::Incompatible)?,
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.delta1.is_bijective() && self.delta2.is_bijective()
    }
}
