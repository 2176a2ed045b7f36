//! Lie superalgebras given by structure constants on a homogeneous basis.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::linalg::{
    kernel, Basis, Dims, GradedSubspace, GradedVector, LinalgError, LinearMap, Parity, SuperSpace,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("conflicting values supplied for [{left}, {right}]")]
    Conflict { left: String, right: String },
    #[error("subspace is not a graded ideal")]
    NotIdeal,
    #[error("algebra is not nilpotent of class two (found {0})")]
    NotClassTwo(NilpotencyClass),
    #[error("glue vector {0} is not central")]
    NonCentralGlue(usize),
    #[error("glue pair {0} has mismatched or undefined parity")]
    GlueParity(usize),
    #[error("glue vectors are linearly dependent")]
    DependentGlue,
    #[error("basis does not span a subalgebra")]
    NotSubalgebra,
    #[error("map is not a degree-zero linear isomorphism")]
    NotIsomorphism,
}

/// A failed axiom on specific basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Grading { left: String, right: String },
    SkewSymmetry { left: String, right: String },
    Jacobi { a: String, b: String, c: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { left, right } => {
                write!(f, "grading: [{left}, {right}] is not homogeneous of parity |{left}|+|{right}|")
            }
            Violation::SkewSymmetry { left, right } => {
                write!(f, "graded skew-symmetry fails for ({left}, {right})")
            }
            Violation::Jacobi { a, b, c } => write!(f, "graded Jacobi identity fails for ({a}, {b}, {c})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NilpotencyClass {
    Abelian,
    ClassTwo,
    Higher,
}

impl fmt::Display for NilpotencyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NilpotencyClass::Abelian => "abelian",
            NilpotencyClass::ClassTwo => "class_two",
            NilpotencyClass::Higher => "higher",
        })
    }
}

/// A Lie superalgebra stored densely: `table[i * d + j] = [e_i, e_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuper {
    field: Field,
    space: SuperSpace,
    table: Vec<GradedVector>,
}

impl LieSuper {
    pub fn from_table(field: Field, space: SuperSpace, table: Vec<GradedVector>) -> Result<Self, LieError> {
        let d = space.dim();
        if table.len() != d * d {
            return Err(LieError::TableSize { expected: d * d, found: table.len() });
        }
        if let Some(v) = table.iter().find(|v| v.dims() != space.dims()) {
            return Err(LinalgError::AmbientMismatch { expected: space.dims(), found: v.dims() }.into());
        }
        Ok(LieSuper { field, space, table })
    }

    /// Builds the table from a sparse list of brackets `[e_i, e_j] = v`.
    /// Missing brackets are zero and the graded skew partner `[e_j, e_i]` is
    /// filled in; a supplied value contradicting an earlier one is an error.
    pub fn from_brackets(
        field: Field,
        space: SuperSpace,
        entries: impl IntoIterator<Item = (usize, usize, GradedVector)>,
    ) -> Result<Self, LieError> {
        let table = complete_skew_table(field, &space, space.dims(), entries)?;
        Ok(LieSuper { field, space, table })
    }

    pub fn abelian_on(field: Field, space: SuperSpace) -> Self {
        let d = space.dim();
        let table = vec![GradedVector::zero(field, space.dims()); d * d];
        LieSuper { field, space, table }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dims(&self) -> Dims {
        self.space.dims()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_vector(&self, i: usize) -> GradedVector {
        GradedVector::basis(self.field, self.dims(), i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &GradedVector {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, u: &GradedVector, v: &GradedVector) -> GradedVector {
        let d = self.dim();
        let mut out = GradedVector::zero(self.field, self.dims());
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

    /// `[e_i, v]`.
    fn bracket_with_basis(&self, i: usize, v: &GradedVector) -> GradedVector {
        let d = self.dim();
        let mut out = GradedVector::zero(self.field, self.dims());
        for (j, b) in v.coords().iter().enumerate() {
            if !b.is_zero() {
                out.add_scaled(b, &self.table[i * d + j]);
            }
        }
        out
    }

    /// Every grading, skew-symmetry and Jacobi failure on basis elements.
    pub fn validate(&self) -> Vec<Violation> {
        let d = self.dim();
        let label = |i: usize| self.space.label(i).to_string();
        let parity = |i: usize| self.space.parity(i);
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if !self.bracket_basis(i, j).lies_in(parity(i) + parity(j)) {
                    out.push(Violation::Grading { left: label(i), right: label(j) });
                }
            }
        }
        for i in 0..d {
            for j in i..d {
                let sign = -Parity::sign(parity(i), parity(j));
                let expected = self.bracket_basis(j, i).scaled(&self.field.from_i64(sign));
                if *self.bracket_basis(i, j) != expected {
                    out.push(Violation::SkewSymmetry { left: label(i), right: label(j) });
                }
            }
        }
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    if !self.jacobiator(a, b, c).is_zero() {
                        out.push(Violation::Jacobi { a: label(a), b: label(b), c: label(c) });
                    }
                }
            }
        }
        out
    }

    /// (−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]] on basis elements.
    fn jacobiator(&self, x: usize, y: usize, z: usize) -> GradedVector {
        let p = |i| self.space.parity(i);
        let f = self.field;
        let mut acc = GradedVector::zero(f, self.dims());
        for (outer, inner_l, inner_r, sign) in [
            (x, y, z, Parity::sign(p(x), p(z))),
            (y, z, x, Parity::sign(p(y), p(x))),
            (z, x, y, Parity::sign(p(z), p(y))),
        ] {
            let inner = self.bracket_basis(inner_l, inner_r);
            acc.add_scaled(&f.from_i64(sign), &self.bracket_with_basis(outer, inner));
        }
        acc
    }

    /// `L² = span{[e_i, e_j]}`.
    pub fn derived_subalgebra(&self) -> GradedSubspace {
        GradedSubspace::from_generators(self.field, self.dims(), &self.table)
            .expect("table entries live in the algebra")
    }

    /// `Z(L)`, computed blockwise as the kernel of `v ↦ ([v, e_1], …, [v, e_d])`.
    pub fn center(&self) -> GradedSubspace {
        let dims = self.dims();
        let d = self.dim();
        let mut blocks = [Vec::new(), Vec::new()];
        for parity in [Parity::Even, Parity::Odd] {
            let range = dims.block(parity);
            let unknowns: Vec<usize> = range.clone().collect();
            let rows = (0..d).flat_map(|i| {
                let unknowns = &unknowns;
                (0..d).map(move |t| {
                    unknowns
                        .iter()
                        .map(|&a| self.table[a * d + i].coords()[t].clone())
                        .collect::<Vec<Scalar>>()
                })
            });
            blocks[parity.bit() as usize] = kernel(self.field, unknowns.len(), rows);
        }
        let [even, odd] = blocks;
        GradedSubspace::from_block_rows(self.field, dims, even, odd)
    }

    /// Abelian when `L² = 0`, class two when `0 ≠ L² ⊆ Z(L)`, higher otherwise.
    pub fn nilpotency_class(&self) -> NilpotencyClass {
        let derived = self.derived_subalgebra();
        if derived.is_zero() {
            NilpotencyClass::Abelian
        } else if derived.is_subspace_of(&self.center()).expect("same ambient") {
            NilpotencyClass::ClassTwo
        } else {
            NilpotencyClass::Higher
        }
    }

    pub fn require_class_two(&self) -> Result<(), LieError> {
        match self.nilpotency_class() {
            NilpotencyClass::ClassTwo => Ok(()),
            other => Err(LieError::NotClassTwo(other)),
        }
    }

    pub fn is_ideal(&self, h: &GradedSubspace) -> Result<bool, LieError> {
        if h.ambient() != self.dims() {
            return Err(LinalgError::AmbientMismatch { expected: self.dims(), found: h.ambient() }.into());
        }
        for b in h.basis() {
            for i in 0..self.dim() {
                if !h.contains(&self.bracket(&b, &self.basis_vector(i)))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `L/H` on the basis of non-pivot coordinates of `H`.
    pub fn quotient(&self, h: &GradedSubspace) -> Result<Quotient, LieError> {
        if !self.is_ideal(h)? {
            return Err(LieError::NotIdeal);
        }
        let keep = h.complement_indices();
        let target = Dims::new(
            keep.iter().filter(|&&c| self.space.parity(c) == Parity::Even).count(),
            keep.iter().filter(|&&c| self.space.parity(c) == Parity::Odd).count(),
        );
        let project = |v: &GradedVector| -> GradedVector {
            let r = h.reduce(v).expect("same ambient");
            GradedVector::new(target, keep.iter().map(|&c| r.coords()[c].clone()).collect())
        };
        let images = (0..self.dim()).map(|i| project(&self.basis_vector(i))).collect();
        let projection = LinearMap::new(self.field, self.dims(), target, images)?;
        let space = SuperSpace::from_tagged(
            keep.iter().map(|&c| (self.space.label(c).to_string(), self.space.parity(c))),
        )?;
        let mut table = Vec::with_capacity(keep.len() * keep.len());
        for &a in &keep {
            for &b in &keep {
                table.push(project(self.bracket_basis(a, b)));
            }
        }
        Ok(Quotient { algebra: LieSuper { field: self.field, space, table }, projection })
    }

    /// `L₁ ⊕ L₂` with `[L₁, L₂] = 0`. Colliding labels of the second summand get a `'` suffix.
    pub fn direct_sum(&self, other: &LieSuper) -> LieSuper {
        self.direct_sum_embedded(other).algebra
    }

    pub fn direct_sum_embedded(&self, other: &LieSuper) -> DirectSum {
        let field = self.field;
        let layout = self.space.direct_sum(&other.space, &mut HashSet::new());
        let dims = layout.space.dims();
        let d = dims.total();
        let embed = |v: &GradedVector, pos: &[usize]| {
            let mut out = GradedVector::zero(field, dims);
            for (i, c) in v.coords().iter().enumerate() {
                if !c.is_zero() {
                    out.add_scaled(c, &GradedVector::basis(field, dims, pos[i]));
                }
            }
            out
        };
        let mut table = vec![GradedVector::zero(field, dims); d * d];
        for (summand, pos) in [(self, &layout.left), (other, &layout.right)] {
            for i in 0..summand.dim() {
                for j in 0..summand.dim() {
                    table[pos[i] * d + pos[j]] = embed(summand.bracket_basis(i, j), pos);
                }
            }
        }
        let units = |pos: &[usize]| pos.iter().map(|&p| GradedVector::basis(field, dims, p)).collect();
        DirectSum {
            left: LinearMap::new(field, self.dims(), dims, units(&layout.left)).expect("dims agree"),
            right: LinearMap::new(field, other.dims(), dims, units(&layout.right)).expect("dims agree"),
            algebra: LieSuper { field, space: layout.space, table },
        }
    }

    /// `(H ⊕ K)/⟨h − k⟩` for the supplied pairs of central vectors.
    pub fn central_sum(
        &self,
        other: &LieSuper,
        glue: &[(GradedVector, GradedVector)],
    ) -> Result<CentralSum, LieError> {
        let (zh, zk) = (self.center(), other.center());
        for (idx, (h, k)) in glue.iter().enumerate() {
            if !zh.contains(h)? || !zk.contains(k)? {
                return Err(LieError::NonCentralGlue(idx));
            }
            match (h.parity(), k.parity()) {
                (Some(a), Some(b)) if a == b => {}
                _ => return Err(LieError::GlueParity(idx)),
            }
        }
        let hs: Vec<GradedVector> = glue.iter().map(|(h, _)| h.clone()).collect();
        let ks: Vec<GradedVector> = glue.iter().map(|(_, k)| k.clone()).collect();
        if Basis::new(self.field, self.dims(), hs).is_err() || Basis::new(self.field, other.dims(), ks).is_err() {
            return Err(LieError::DependentGlue);
        }
        let sum = self.direct_sum_embedded(other);
        let relations: Vec<GradedVector> = glue
            .iter()
            .map(|(h, k)| sum.left.apply(h).sub(&sum.right.apply(k)))
            .collect();
        let ideal = GradedSubspace::from_generators(self.field, sum.algebra.dims(), &relations)?;
        let q = sum.algebra.quotient(&ideal)?;
        let left = GradedSubspace::whole(self.field, self.dims())
            .image(&q.projection.compose(&sum.left)?)?;
        let right = GradedSubspace::whole(self.field, other.dims())
            .image(&q.projection.compose(&sum.right)?)?;
        Ok(CentralSum { algebra: q.algebra, left, right })
    }

    /// The rank `dim L²` when `Z(L) = L²`.
    pub fn generalized_heisenberg_rank(&self) -> Option<Dims> {
        let derived = self.derived_subalgebra();
        (derived == self.center()).then(|| derived.dims())
    }

    pub fn is_generalized_heisenberg(&self) -> bool {
        self.generalized_heisenberg_rank().is_some()
    }

    /// Splits a class-two algebra as `H ⊕ A` with `A` abelian and `H`
    /// generalized Heisenberg of rank `dim L²`.
    pub fn split_heisenberg_abelian(&self) -> Result<HeisenbergSplit, LieError> {
        self.require_class_two()?;
        let field = self.field;
        let dims = self.dims();
        let derived = self.derived_subalgebra();
        let transversal = derived.complement_indices();
        let unit = |i: usize| GradedVector::basis(field, dims, i);

        // Central vectors supported on the transversal of L² lift the radical of f_L.
        let trans_space = GradedSubspace::from_generators(
            field,
            dims,
            &transversal.iter().map(|&i| unit(i)).collect::<Vec<_>>(),
        )?;
        let abelian_part = self.center().intersect(&trans_space)?;
        let abelian_pivots: HashSet<usize> = abelian_part.pivot_indices().into_iter().collect();

        let mut tagged: Vec<(String, Parity, GradedVector)> = Vec::new();
        for &i in transversal.iter().filter(|i| !abelian_pivots.contains(i)) {
            tagged.push((self.space.label(i).to_string(), self.space.parity(i), unit(i)));
        }
        for (row, p) in derived.basis().into_iter().zip(derived.pivot_indices()) {
            tagged.push((self.space.label(p).to_string(), self.space.parity(p), row));
        }
        tagged.sort_by_key(|(_, parity, _)| *parity);
        let space = SuperSpace::from_tagged(tagged.iter().map(|(l, p, _)| (l.clone(), *p)))?;
        let heisenberg_basis: Vec<GradedVector> = tagged.into_iter().map(|(_, _, v)| v).collect();
        let heisenberg = self.subalgebra(space, &heisenberg_basis)?;
        Ok(HeisenbergSplit {
            heisenberg,
            abelian_dims: abelian_part.dims(),
            heisenberg_basis,
            abelian_basis: abelian_part.basis(),
        })
    }

    /// The subalgebra spanned by `basis`, with structure constants in that basis.
    /// `space` names the basis vectors and must list them even-first.
    pub fn subalgebra(&self, space: SuperSpace, basis: &[GradedVector]) -> Result<LieSuper, LieError> {
        if space.dim() != basis.len() {
            return Err(LieError::TableSize { expected: space.dim(), found: basis.len() });
        }
        for (i, b) in basis.iter().enumerate() {
            if !b.lies_in(space.parity(i)) {
                return Err(LieError::NotSubalgebra);
            }
        }
        let coords = Basis::new(self.field, self.dims(), basis.to_vec())?;
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                let c = coords.coordinates(&self.bracket(a, b)).ok_or(LieError::NotSubalgebra)?;
                table.push(GradedVector::new(space.dims(), c));
            }
        }
        Ok(LieSuper { field: self.field, space, table })
    }

    /// Whether `map: self → target` is a degree-zero bracket-preserving linear map.
    pub fn is_homomorphism(&self, target: &LieSuper, map: &LinearMap) -> bool {
        if map.source() != self.dims() || map.target() != target.dims() || !map.is_degree_zero() {
            return false;
        }
        let images = map.images();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| map.apply(self.bracket_basis(i, j)) == target.bracket(&images[i], &images[j]))
        })
    }

    /// The algebra expressed in the basis `b_i = iso(e_i)`; `iso` is then an
    /// isomorphism from the result onto `self`.
    pub fn transport(&self, iso: &LinearMap) -> Result<LieSuper, LieError> {
        if iso.source() != self.dims() || iso.target() != self.dims() || !iso.is_degree_zero() {
            return Err(LieError::NotIsomorphism);
        }
        let inv = iso.inverse().map_err(|_| LieError::NotIsomorphism)?;
        let images = iso.images();
        let d = self.dim();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                table.push(inv.apply(&self.bracket(&images[i], &images[j])));
            }
        }
        Ok(LieSuper { field: self.field, space: self.space.clone(), table })
    }
}

/// Dense skew-completed table for a bilinear map on `space` with values in `target`.
pub(crate) fn complete_skew_table(
    field: Field,
    space: &SuperSpace,
    target: Dims,
    entries: impl IntoIterator<Item = (usize, usize, GradedVector)>,
) -> Result<Vec<GradedVector>, LieError> {
    let d = space.dim();
    let mut slots: Vec<Option<GradedVector>> = vec![None; d * d];
    for (i, j, v) in entries {
        if i >= d || j >= d {
            return Err(LieError::IndexOutOfRange(i.max(j)));
        }
        if v.dims() != target {
            return Err(LinalgError::AmbientMismatch { expected: target, found: v.dims() }.into());
        }
        let conflict = || LieError::Conflict {
            left: space.label(i).to_string(),
            right: space.label(j).to_string(),
        };
        let sign = -Parity::sign(space.parity(i), space.parity(j));
        let partner = v.scaled(&field.from_i64(sign));
        if slots[i * d + j].as_ref().is_some_and(|old| *old != v) {
            return Err(conflict());
        }
        if i != j && slots[j * d + i].as_ref().is_some_and(|old| *old != partner) {
            return Err(conflict());
        }
        if i != j {
            slots[j * d + i] = Some(partner);
        }
        slots[i * d + j] = Some(v);
    }
    Ok(slots
        .into_iter()
        .map(|s| s.unwrap_or_else(|| GradedVector::zero(field, target)))
        .collect())
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieSuper,
    /// Degree-zero projection `L → L/H`.
    pub projection: LinearMap,
}

#[derive(Debug, Clone)]
pub struct DirectSum {
    pub algebra: LieSuper,
    pub left: LinearMap,
    pub right: LinearMap,
}

#[derive(Debug, Clone)]
pub struct CentralSum {
    pub algebra: LieSuper,
    /// Image of the first summand.
    pub left: GradedSubspace,
    /// Image of the second summand.
    pub right: GradedSubspace,
}

#[derive(Debug, Clone)]
pub struct HeisenbergSplit {
    pub heisenberg: LieSuper,
    pub abelian_dims: Dims,
    /// Images in `L` of the basis of `heisenberg`.
    pub heisenberg_basis: Vec<GradedVector>,
    pub abelian_basis: Vec<GradedVector>,
}

impl HeisenbergSplit {
    /// `H ⊕ A(l|k)` together with the isomorphism onto the original algebra.
    pub fn reconstruction(&self) -> (LieSuper, LinearMap) {
        let field = self.heisenberg.field();
        let labels_even = (1..=self.abelian_dims.even).map(|i| format!("a{i}"));
        let labels_odd = (1..=self.abelian_dims.odd).map(|i| format!("b{i}"));
        let abelian = LieSuper::abelian_on(field, SuperSpace::new(labels_even, labels_odd).expect("distinct labels"));
        let sum = self.heisenberg.direct_sum_embedded(&abelian);
        let ambient = self
            .heisenberg_basis
            .first()
            .or(self.abelian_basis.first())
            .map(GradedVector::dims)
            .unwrap_or(Dims::ZERO);
        let mut images = vec![GradedVector::zero(field, ambient); sum.algebra.dim()];
        for (i, v) in self.heisenberg_basis.iter().enumerate() {
            let at = position_of_unit(&sum.left.images()[i]);
            images[at] = v.clone();
        }
        for (j, v) in self.abelian_basis.iter().enumerate() {
            let at = position_of_unit(&sum.right.images()[j]);
            images[at] = v.clone();
        }
        let iso = LinearMap::new(field, sum.algebra.dims(), ambient, images).expect("dims agree");
        (sum.algebra, iso)
    }
}

fn position_of_unit(v: &GradedVector) -> usize {
    v.coords().iter().position(|c| !c.is_zero()).expect("unit vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: Field = Field::Rational;

    fn filiform() -> LieSuper {
        // [e1,e2] = e3, [e1,e3] = e4
        let space = SuperSpace::new(["e1", "e2", "e3", "e4"], Vec::<&str>::new()).unwrap();
        let dims = space.dims();
        LieSuper::from_brackets(
            Q,
            space,
            [(0, 1, GradedVector::basis(Q, dims, 2)), (0, 2, GradedVector::basis(Q, dims, 3))],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(catalog::abelian(Q, 2, 1).validate().is_empty());
        assert!(catalog::heisenberg_even(Q, 1, 0).unwrap().validate().is_empty());

        // [x1,x2] = y with y odd breaks the grading.
        let space = SuperSpace::new(["x1", "x2"], ["y"]).unwrap();
        let dims = space.dims();
        let bad = LieSuper::from_brackets(Q, space, [(0, 1, GradedVector::basis(Q, dims, 2))]).unwrap();
        let v = bad.validate();
        assert!(v.contains(&Violation::Grading { left: "x1".into(), right: "x2".into() }));
    }

    #[test]
    fn skew_and_jacobi_violations_reported() {
        let space = SuperSpace::new(["x1", "x2", "x3"], Vec::<&str>::new()).unwrap();
        let dims = space.dims();
        let e = |i| GradedVector::basis(Q, dims, i);
        let mut table = vec![GradedVector::zero(Q, dims); 9];
        table[1] = e(0); // [x1,x2] = x1 without the partner
        let l = LieSuper::from_table(Q, space.clone(), table).unwrap();
        assert!(l.validate().contains(&Violation::SkewSymmetry { left: "x1".into(), right: "x2".into() }));

        // [x1,x2]=x3, [x1,x3]=x1: the Jacobiator on (x1,x2,x3) is x3.
        let l = LieSuper::from_brackets(Q, space, [(0, 1, e(2)), (0, 2, e(0))]).unwrap();
        assert!(l.jacobiator(0, 1, 2) == e(2));
        assert!(l.validate().iter().any(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn conflicting_brackets_rejected() {
        let space = SuperSpace::new(["x1", "x2", "z"], Vec::<&str>::new()).unwrap();
        let z = GradedVector::basis(Q, space.dims(), 2);
        let err = LieSuper::from_brackets(Q, space, [(0, 1, z.clone()), (1, 0, z)]).unwrap_err();
        assert!(matches!(err, LieError::Conflict { .. }));
    }

    #[test]
    fn derived_and_center_examples() {
        assert!(catalog::abelian(Q, 2, 2).derived_subalgebra().is_zero());
        assert!(catalog::abelian(Q, 2, 2).center().is_whole());
        let h20 = catalog::heisenberg_even(Q, 2, 0).unwrap();
        assert_eq!(h20.derived_subalgebra().dims(), Dims::new(1, 0));
        let h1 = catalog::heisenberg_odd(Q, 1).unwrap();
        assert_eq!(h1.derived_subalgebra().dims(), Dims::new(0, 1));
        for (m, n) in [(1, 0), (0, 1), (2, 3)] {
            let h = catalog::heisenberg_even(Q, m, n).unwrap();
            assert_eq!(h.center(), h.derived_subalgebra());
        }
        let l = catalog::heisenberg_even(Q, 1, 0).unwrap().direct_sum(&catalog::abelian(Q, 0, 2));
        assert_eq!(l.center().dims(), Dims::new(1, 2));
    }

    #[test]
    fn class_examples() {
        assert_eq!(catalog::abelian(Q, 1, 1).nilpotency_class(), NilpotencyClass::Abelian);
        assert_eq!(catalog::heisenberg_even(Q, 1, 2).unwrap().nilpotency_class(), NilpotencyClass::ClassTwo);
        assert_eq!(filiform().nilpotency_class(), NilpotencyClass::Higher);
        assert!(filiform().validate().is_empty());
    }

    #[test]
    fn quotient_examples() {
        let h = catalog::heisenberg_even(Q, 1, 0).unwrap();
        let whole = GradedSubspace::whole(Q, h.dims());
        assert_eq!(h.quotient(&whole).unwrap().algebra.dim(), 0);

        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q.algebra.dims(), Dims::new(2, 0));
        assert_eq!(q.algebra.nilpotency_class(), NilpotencyClass::Abelian);
        assert!(h.is_homomorphism(&q.algebra, &q.projection));

        let h1 = catalog::heisenberg_odd(Q, 1).unwrap();
        let q = h1.quotient(&h1.center()).unwrap();
        assert_eq!(q.algebra.dims(), Dims::new(1, 1));
        assert_eq!(q.algebra.nilpotency_class(), NilpotencyClass::Abelian);

        // ⟨x1⟩ is not an ideal of H(1,0).
        let x1 = GradedSubspace::from_generators(Q, h.dims(), [&h.basis_vector(0)]).unwrap();
        assert_eq!(h.quotient(&x1).unwrap_err(), LieError::NotIdeal);
    }

    #[test]
    fn direct_sum_examples() {
        let h = catalog::heisenberg_even(Q, 1, 0).unwrap();
        let zero = catalog::abelian(Q, 0, 0);
        assert_eq!(h.direct_sum(&zero), h);

        let s = h.direct_sum(&catalog::abelian(Q, 1, 0));
        assert_eq!(s.dims(), Dims::new(4, 0));
        assert_eq!(s.derived_subalgebra().dims(), Dims::new(1, 0));

        let s = h.direct_sum(&catalog::heisenberg_odd(Q, 1).unwrap());
        assert_eq!(s.dims(), Dims::new(4, 2));
        assert_eq!(s.derived_subalgebra().dims(), Dims::new(1, 1));
        assert!(s.validate().is_empty());
        // the second z is renamed
        assert!(s.space().index_of("z'").is_some());
    }

    #[test]
    fn direct_sum_center_and_derived_are_sums() {
        let a = catalog::heisenberg_even(Q, 1, 1).unwrap();
        let b = catalog::heisenberg_odd(Q, 2).unwrap().direct_sum(&catalog::abelian(Q, 1, 0));
        let s = a.direct_sum_embedded(&b);
        let center = a.center().image(&s.left).unwrap().sum(&b.center().image(&s.right).unwrap()).unwrap();
        assert_eq!(s.algebra.center(), center);
        let derived = a
            .derived_subalgebra()
            .image(&s.left)
            .unwrap()
            .sum(&b.derived_subalgebra().image(&s.right).unwrap())
            .unwrap();
        assert_eq!(s.algebra.derived_subalgebra(), derived);
    }

    #[test]
    fn central_sum_examples() {
        let h = catalog::heisenberg_even(Q, 1, 0).unwrap();
        assert_eq!(h.central_sum(&h, &[]).unwrap().algebra, h.direct_sum(&h));

        let z = h.basis_vector(2);
        let cs = h.central_sum(&h, &[(z.clone(), z.clone())]).unwrap();
        let l = cs.algebra;
        assert_eq!(l.dims(), Dims::new(5, 0));
        assert!(l.validate().is_empty());
        assert_eq!(l.generalized_heisenberg_rank(), Some(Dims::new(1, 0)));
        let meet = cs.left.intersect(&cs.right).unwrap();
        assert!(meet.is_subspace_of(&l.center()).unwrap());

        let h1 = catalog::heisenberg_odd(Q, 1).unwrap();
        let z_odd = h1.basis_vector(2);
        assert_eq!(h.central_sum(&h1, &[(z, z_odd)]).unwrap_err(), LieError::GlueParity(0));

        let x1 = h.basis_vector(0);
        assert_eq!(h.central_sum(&h, &[(x1.clone(), x1)]).unwrap_err(), LieError::NonCentralGlue(0));
    }

    #[test]
    fn generalized_heisenberg_examples() {
        assert_eq!(catalog::heisenberg_even(Q, 2, 1).unwrap().generalized_heisenberg_rank(), Some(Dims::new(1, 0)));
        let l = catalog::heisenberg_even(Q, 1, 0).unwrap().direct_sum(&catalog::abelian(Q, 1, 0));
        assert_eq!(l.generalized_heisenberg_rank(), None);
    }

    #[test]
    fn split_examples() {
        let h = catalog::heisenberg_even(Q, 2, 1).unwrap();
        let s = h.split_heisenberg_abelian().unwrap();
        assert_eq!(s.abelian_dims, Dims::ZERO);
        assert_eq!(s.heisenberg.dims(), h.dims());

        for (base, a, hd) in [
            (catalog::heisenberg_even(Q, 1, 0).unwrap(), (2, 1), Dims::new(3, 0)),
            (catalog::heisenberg_odd(Q, 1).unwrap(), (0, 1), Dims::new(1, 2)),
        ] {
            let l = base.direct_sum(&catalog::abelian(Q, a.0, a.1));
            let s = l.split_heisenberg_abelian().unwrap();
            assert_eq!(s.heisenberg.dims(), hd);
            assert_eq!(s.abelian_dims, Dims::new(a.0, a.1));
            assert!(s.heisenberg.is_generalized_heisenberg());
            let (rebuilt, iso) = s.reconstruction();
            assert!(iso.is_bijective());
            assert!(rebuilt.is_homomorphism(&l, &iso));
        }

        assert_eq!(
            catalog::abelian(Q, 1, 0).split_heisenberg_abelian().unwrap_err(),
            LieError::NotClassTwo(NilpotencyClass::Abelian)
        );
    }

    #[test]
    fn transport_is_isomorphic() {
        let h = catalog::heisenberg_even(Q, 1, 1).unwrap();
        let dims = h.dims();
        // z ↦ 2z, others fixed
        let mut images: Vec<GradedVector> = (0..dims.total()).map(|i| h.basis_vector(i)).collect();
        images[2] = h.basis_vector(2).scaled(&Q.from_i64(2));
        let iso = LinearMap::new(Q, dims, dims, images).unwrap();
        let t = h.transport(&iso).unwrap();
        assert!(t.validate().is_empty());
        assert!(t.is_homomorphism(&h, &iso));
        assert_ne!(t, h);
    }
}
