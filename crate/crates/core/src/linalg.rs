//! ℤ₂-graded linear algebra over an exact [`Field`].
//!
//! Subspaces are stored per parity block in reduced row-echelon form, so two
//! subspaces are equal exactly when their stored matrices are equal.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("ambient space mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: Dims, found: Dims },
    #[error("subspace is not contained in the given superspace")]
    NotContained,
    #[error("linear map is not invertible")]
    Singular,
    #[error("vectors are linearly dependent")]
    Dependent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The Koszul sign (−1)^{|a||b|}.
    pub fn sign(a: Parity, b: Parity) -> i64 {
        if a == Parity::Odd && b == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    // Addition in Z/2.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

/// A dimension pair `(even|odd)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Dims {
    pub even: usize,
    pub odd: usize,
}

impl Dims {
    pub const ZERO: Dims = Dims { even: 0, odd: 0 };

    pub const fn new(even: usize, odd: usize) -> Self {
        Dims { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn of(self, parity: Parity) -> usize {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    pub fn is_zero(self) -> bool {
        self.total() == 0
    }

    /// Parity of the basis vector at flat index `i` (even block first).
    pub fn parity_of(self, i: usize) -> Parity {
        debug_assert!(i < self.total());
        if i < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Flat index range of one parity block.
    pub fn block(self, parity: Parity) -> std::ops::Range<usize> {
        match parity {
            Parity::Even => 0..self.even,
            Parity::Odd => self.even..self.total(),
        }
    }
}

impl Add for Dims {
    type Output = Dims;
    fn add(self, rhs: Dims) -> Dims {
        Dims::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

impl Sub for Dims {
    type Output = Dims;
    fn sub(self, rhs: Dims) -> Dims {
        Dims::new(self.even - rhs.even, self.odd - rhs.odd)
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// A superspace with named homogeneous basis vectors. Flat indices list the
/// even labels first, then the odd ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    even: Vec<String>,
    odd: Vec<String>,
}

impl SuperSpace {
    pub fn new<S: Into<String>>(
        even: impl IntoIterator<Item = S>,
        odd: impl IntoIterator<Item = S>,
    ) -> Result<Self, LinalgError> {
        let even: Vec<String> = even.into_iter().map(Into::into).collect();
        let odd: Vec<String> = odd.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for label in even.iter().chain(&odd) {
            if !seen.insert(label.as_str()) {
                return Err(LinalgError::DuplicateLabel(label.clone()));
            }
        }
        Ok(SuperSpace { even, odd })
    }

    pub fn zero() -> Self {
        SuperSpace { even: Vec::new(), odd: Vec::new() }
    }

    pub fn dims(&self) -> Dims {
        Dims::new(self.even.len(), self.odd.len())
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn even_labels(&self) -> &[String] {
        &self.even
    }

    pub fn odd_labels(&self) -> &[String] {
        &self.odd
    }

    pub fn label(&self, i: usize) -> &str {
        if i < self.even.len() {
            &self.even[i]
        } else {
            &self.odd[i - self.even.len()]
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.even.iter().chain(&self.odd).map(String::as_str)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.dims().parity_of(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().position(|l| l == label)
    }

    /// Builds a space from `(label, parity)` pairs, sorting them into blocks
    /// while keeping the relative order inside each block.
    pub fn from_tagged(
        items: impl IntoIterator<Item = (String, Parity)>,
    ) -> Result<Self, LinalgError> {
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for (label, parity) in items {
            match parity {
                Parity::Even => even.push(label),
                Parity::Odd => odd.push(label),
            }
        }
        SuperSpace::new(even, odd)
    }
}

/// Layout of `A ⊕ B`: the combined space plus the flat position of every
/// basis vector of each summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumLayout {
    pub space: SuperSpace,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl SuperSpace {
    /// `self ⊕ other`, even blocks first. Labels of `other` that collide with
    /// `self` or with `reserved` get a `'` suffix; all final labels are added
    /// to `reserved`.
    pub fn direct_sum(&self, other: &SuperSpace, reserved: &mut HashSet<String>) -> SumLayout {
        let (m1, n1) = (self.even.len(), self.odd.len());
        let (m2, _) = (other.even.len(), other.odd.len());
        reserved.extend(self.labels().map(str::to_string));
        let renamed: Vec<String> = other
            .labels()
            .map(|l| {
                let mut name = l.to_string();
                while reserved.contains(&name) {
                    name.push('\'');
                }
                reserved.insert(name.clone());
                name
            })
            .collect();
        let even = self.even.iter().cloned().chain(renamed[..m2].iter().cloned()).collect();
        let odd = self.odd.iter().cloned().chain(renamed[m2..].iter().cloned()).collect();
        let left = (0..self.dim()).map(|i| if i < m1 { i } else { m1 + m2 + (i - m1) }).collect();
        let right = (0..other.dim())
            .map(|j| if j < m2 { m1 + j } else { m1 + m2 + n1 + (j - m2) })
            .collect();
        SumLayout { space: SuperSpace { even, odd }, left, right }
    }
}

/// Coordinates of a vector with respect to the basis of a superspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedVector {
    dims: Dims,
    coords: Vec<Scalar>,
}

impl GradedVector {
    pub fn new(dims: Dims, coords: Vec<Scalar>) -> Self {
        assert_eq!(coords.len(), dims.total(), "coordinate count does not match ambient");
        GradedVector { dims, coords }
    }

    pub fn zero(field: Field, dims: Dims) -> Self {
        GradedVector { dims, coords: vec![field.zero(); dims.total()] }
    }

    pub fn basis(field: Field, dims: Dims, i: usize) -> Self {
        let mut v = Self::zero(field, dims);
        v.coords[i] = field.one();
        v
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// True when the support lies inside the given parity block (the zero vector lies in both).
    pub fn lies_in(&self, parity: Parity) -> bool {
        let block = self.dims.block(parity);
        self.coords
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || block.contains(&i))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lies_in(Parity::Even) || self.lies_in(Parity::Odd)
    }

    /// Parity of a nonzero homogeneous vector.
    pub fn parity(&self) -> Option<Parity> {
        if self.is_zero() {
            None
        } else if self.lies_in(Parity::Even) {
            Some(Parity::Even)
        } else if self.lies_in(Parity::Odd) {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    /// The even and odd components.
    pub fn split(&self) -> (GradedVector, GradedVector) {
        let field = self.coords.first().map(Scalar::field);
        let mut even = self.clone();
        let mut odd = self.clone();
        if let Some(field) = field {
            for i in 0..self.coords.len() {
                if i < self.dims.even {
                    odd.coords[i] = field.zero();
                } else {
                    even.coords[i] = field.zero();
                }
            }
        }
        (even, odd)
    }

    pub fn block_coords(&self, parity: Parity) -> &[Scalar] {
        &self.coords[self.dims.block(parity)]
    }

    pub fn scaled(&self, k: &Scalar) -> GradedVector {
        GradedVector { dims: self.dims, coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn add_scaled(&mut self, k: &Scalar, other: &GradedVector) {
        assert_eq!(self.dims, other.dims);
        axpy(&mut self.coords, k, &other.coords);
    }

    pub fn sub(&self, other: &GradedVector) -> GradedVector {
        assert_eq!(self.dims, other.dims);
        GradedVector {
            dims: self.dims,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &GradedVector) -> GradedVector {
        assert_eq!(self.dims, other.dims);
        GradedVector {
            dims: self.dims,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    /// Places the block coordinates into a full vector of the given ambient.
    pub fn from_block(field: Field, dims: Dims, parity: Parity, block: &[Scalar]) -> Self {
        let mut v = Self::zero(field, dims);
        let range = dims.block(parity);
        assert_eq!(range.len(), block.len());
        v.coords[range].clone_from_slice(block);
        v
    }
}

/// `acc += k * v`.
pub(crate) fn axpy(acc: &mut [Scalar], k: &Scalar, v: &[Scalar]) {
    if k.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(k * x);
        }
    }
}

/// A matrix in reduced row-echelon form with zero rows dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn empty(field: Field, cols: usize) -> Self {
        Echelon { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Column indices that are not pivots, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut p = self.pivots.iter().peekable();
        (0..self.cols)
            .filter(|c| {
                if p.peek() == Some(&c) {
                    p.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Normal form of `v` modulo the row space: zero in every pivot column.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let k = -&v[p];
                axpy(&mut v, &k, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Coefficients of `v` with respect to the stored rows, if `v` is in the row space.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Adds a row to the spanning set, keeping the matrix reduced. Returns
    /// whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = r[pivot].inverse().expect("pivot is nonzero");
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let k = -&row[pivot];
                axpy(row, &k, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, r);
        true
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = Vec<Scalar>>) {
        for row in rows {
            self.insert(row);
        }
    }
}

/// Reduced row-echelon form of `rows`; every row must have length `cols`.
pub fn echelonize(field: Field, cols: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Echelon {
    let mut e = Echelon::empty(field, cols);
    e.extend(rows);
    e
}

/// Basis of the right null space `{x : M x = 0}` of a matrix given by rows.
pub fn kernel(field: Field, cols: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let e = echelonize(field, cols, rows);
    e.non_pivots()
        .into_iter()
        .map(|free| {
            let mut x = vec![field.zero(); cols];
            x[free] = field.one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = -&row[free];
            }
            x
        })
        .collect()
}

/// A graded subspace, stored as one reduced echelon matrix per parity block
/// in block-local coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    ambient: Dims,
    even: Echelon,
    odd: Echelon,
}

impl GradedSubspace {
    pub fn zero(field: Field, ambient: Dims) -> Self {
        GradedSubspace {
            ambient,
            even: Echelon::empty(field, ambient.even),
            odd: Echelon::empty(field, ambient.odd),
        }
    }

    pub fn whole(field: Field, ambient: Dims) -> Self {
        let gens = (0..ambient.total()).map(|i| GradedVector::basis(field, ambient, i));
        let mut s = Self::zero(field, ambient);
        for g in gens {
            s.insert(&g);
        }
        s
    }

    /// Span of the generators. Non-homogeneous generators contribute both of
    /// their parity components.
    pub fn from_generators<'a>(
        field: Field,
        ambient: Dims,
        gens: impl IntoIterator<Item = &'a GradedVector>,
    ) -> Result<Self, LinalgError> {
        let mut s = Self::zero(field, ambient);
        for g in gens {
            s.check_ambient(g.dims())?;
            s.insert(g);
        }
        Ok(s)
    }

    /// Span of homogeneous generators given directly in block-local coordinates.
    pub fn from_block_rows(
        field: Field,
        ambient: Dims,
        even_rows: impl IntoIterator<Item = Vec<Scalar>>,
        odd_rows: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Self {
        GradedSubspace {
            ambient,
            even: echelonize(field, ambient.even, even_rows),
            odd: echelonize(field, ambient.odd, odd_rows),
        }
    }

    pub(crate) fn insert(&mut self, g: &GradedVector) -> bool {
        let grew_even = self.even.insert(g.block_coords(Parity::Even).to_vec());
        let grew_odd = self.odd.insert(g.block_coords(Parity::Odd).to_vec());
        grew_even || grew_odd
    }

    fn check_ambient(&self, found: Dims) -> Result<(), LinalgError> {
        if found != self.ambient {
            return Err(LinalgError::AmbientMismatch { expected: self.ambient, found });
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.even.field
    }

    pub fn ambient(&self) -> Dims {
        self.ambient
    }

    pub fn dims(&self) -> Dims {
        Dims::new(self.even.rank(), self.odd.rank())
    }

    pub fn is_zero(&self) -> bool {
        self.dims().is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.dims() == self.ambient
    }

    pub fn block(&self, parity: Parity) -> &Echelon {
        match parity {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    /// Canonical basis: even rows, then odd rows, as full vectors.
    pub fn basis(&self) -> Vec<GradedVector> {
        let field = self.field();
        let mut out = Vec::with_capacity(self.dims().total());
        for parity in [Parity::Even, Parity::Odd] {
            for row in self.block(parity).rows() {
                out.push(GradedVector::from_block(field, self.ambient, parity, row));
            }
        }
        out
    }

    /// Flat ambient indices of the pivot columns, aligned with [`basis`](Self::basis).
    pub fn pivot_indices(&self) -> Vec<usize> {
        let shift = self.ambient.even;
        self.even
            .pivots()
            .iter()
            .copied()
            .chain(self.odd.pivots().iter().map(|p| p + shift))
            .collect()
    }

    /// Flat ambient indices of the non-pivot columns; their unit vectors span a
    /// complement of this subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let shift = self.ambient.even;
        self.even
            .non_pivots()
            .into_iter()
            .chain(self.odd.non_pivots().into_iter().map(|p| p + shift))
            .collect()
    }

    pub fn contains(&self, v: &GradedVector) -> Result<bool, LinalgError> {
        self.check_ambient(v.dims())?;
        Ok(self.even.contains(v.block_coords(Parity::Even))
            && self.odd.contains(v.block_coords(Parity::Odd)))
    }

    /// Normal form of `v` modulo this subspace.
    pub fn reduce(&self, v: &GradedVector) -> Result<GradedVector, LinalgError> {
        self.check_ambient(v.dims())?;
        let mut coords = self.even.reduce(v.block_coords(Parity::Even).to_vec());
        coords.extend(self.odd.reduce(v.block_coords(Parity::Odd).to_vec()));
        Ok(GradedVector::new(self.ambient, coords))
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &GradedVector) -> Result<Option<Vec<Scalar>>, LinalgError> {
        self.check_ambient(v.dims())?;
        let even = self.even.coordinates(v.block_coords(Parity::Even));
        let odd = self.odd.coordinates(v.block_coords(Parity::Odd));
        Ok(match (even, odd) {
            (Some(mut e), Some(o)) => {
                e.extend(o);
                Some(e)
            }
            _ => None,
        })
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> Result<bool, LinalgError> {
        other.check_ambient(self.ambient)?;
        Ok(self.even.rows().iter().all(|r| other.even.contains(r))
            && self.odd.rows().iter().all(|r| other.odd.contains(r)))
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace, LinalgError> {
        self.check_ambient(other.ambient)?;
        let mut s = self.clone();
        s.even.extend(other.even.rows().iter().cloned());
        s.odd.extend(other.odd.rows().iter().cloned());
        Ok(s)
    }

    pub fn intersect(&self, other: &GradedSubspace) -> Result<GradedSubspace, LinalgError> {
        self.check_ambient(other.ambient)?;
        Ok(GradedSubspace {
            ambient: self.ambient,
            even: intersect_rows(&self.even, &other.even),
            odd: intersect_rows(&self.odd, &other.odd),
        })
    }

    /// Dimensions of `self / sub`; `sub` must be contained in `self`.
    pub fn quotient_dims(&self, sub: &GradedSubspace) -> Result<Dims, LinalgError> {
        if !sub.is_subspace_of(self)? {
            return Err(LinalgError::NotContained);
        }
        Ok(self.dims() - sub.dims())
    }

    /// Image of the subspace under a degree-zero linear map.
    pub fn image(&self, map: &LinearMap) -> Result<GradedSubspace, LinalgError> {
        self.check_ambient(map.source())?;
        let images: Vec<GradedVector> = self.basis().iter().map(|b| map.apply(b)).collect();
        GradedSubspace::from_generators(self.field(), map.target(), &images)
    }
}

fn intersect_rows(a: &Echelon, b: &Echelon) -> Echelon {
    let field = a.field;
    let cols = a.cols;
    let gens: Vec<&Vec<Scalar>> = a.rows().iter().chain(b.rows()).collect();
    // Relations Σ x_g g = 0 among the joint generators.
    let relation_rows = (0..cols).map(|t| gens.iter().map(|g| g[t].clone()).collect::<Vec<_>>());
    let relations = kernel(field, gens.len(), relation_rows);
    let mut out = Echelon::empty(field, cols);
    for x in relations {
        let mut v = vec![field.zero(); cols];
        for (coef, row) in x.iter().zip(a.rows()) {
            axpy(&mut v, coef, row);
        }
        out.insert(v);
    }
    out
}

/// An ordered, linearly independent family of vectors that can express
/// members of its span in its own coordinates.
#[derive(Debug, Clone)]
pub struct Basis {
    ambient: Dims,
    vectors: Vec<GradedVector>,
    augmented: Echelon,
}

impl Basis {
    pub fn new(field: Field, ambient: Dims, vectors: Vec<GradedVector>) -> Result<Self, LinalgError> {
        let k = vectors.len();
        let n = ambient.total();
        let mut augmented = Echelon::empty(field, n + k);
        for (i, v) in vectors.iter().enumerate() {
            if v.dims() != ambient {
                return Err(LinalgError::AmbientMismatch { expected: ambient, found: v.dims() });
            }
            let mut row = v.coords().to_vec();
            row.extend((0..k).map(|j| if j == i { field.one() } else { field.zero() }));
            augmented.insert(row);
        }
        if augmented.pivots().iter().any(|&p| p >= n) {
            return Err(LinalgError::Dependent);
        }
        Ok(Basis { ambient, vectors, augmented })
    }

    pub fn vectors(&self) -> &[GradedVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// `x` with `v = Σ x_i b_i`, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &GradedVector) -> Option<Vec<Scalar>> {
        assert_eq!(v.dims(), self.ambient, "vector not in the ambient space");
        let n = self.ambient.total();
        let field = self.augmented.field();
        let mut row = v.coords().to_vec();
        row.extend((0..self.vectors.len()).map(|_| field.zero()));
        let reduced = self.augmented.reduce(row);
        if reduced[..n].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(reduced[n..].iter().map(|c| -c).collect())
    }
}

/// A linear map given by the images of the source basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    source: Dims,
    target: Dims,
    images: Vec<GradedVector>,
}

impl LinearMap {
    pub fn new(field: Field, source: Dims, target: Dims, images: Vec<GradedVector>) -> Result<Self, LinalgError> {
        if images.len() != source.total() {
            return Err(LinalgError::AmbientMismatch {
                expected: source,
                found: Dims::new(images.len(), 0),
            });
        }
        for img in &images {
            if img.dims() != target {
                return Err(LinalgError::AmbientMismatch { expected: target, found: img.dims() });
            }
        }
        Ok(LinearMap { field, source, target, images })
    }

    pub fn identity(field: Field, dims: Dims) -> Self {
        let images = (0..dims.total()).map(|i| GradedVector::basis(field, dims, i)).collect();
        LinearMap { field, source: dims, target: dims, images }
    }

    pub fn zero(field: Field, source: Dims, target: Dims) -> Self {
        let images = (0..source.total()).map(|_| GradedVector::zero(field, target)).collect();
        LinearMap { field, source, target, images }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn source(&self) -> Dims {
        self.source
    }

    pub fn target(&self) -> Dims {
        self.target
    }

    pub fn images(&self) -> &[GradedVector] {
        &self.images
    }

    pub fn apply(&self, v: &GradedVector) -> GradedVector {
        assert_eq!(v.dims(), self.source, "vector not in the source space");
        let mut out = GradedVector::zero(self.field, self.target);
        for (c, img) in v.coords().iter().zip(&self.images) {
            out.add_scaled(c, img);
        }
        out
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinearMap) -> Result<LinearMap, LinalgError> {
        if first.target != self.source {
            return Err(LinalgError::AmbientMismatch { expected: self.source, found: first.target });
        }
        let images = first.images.iter().map(|v| self.apply(v)).collect();
        Ok(LinearMap { field: self.field, source: first.source, target: self.target, images })
    }

    /// Every basis vector maps into the block of its own parity.
    pub fn is_degree_zero(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| img.lies_in(self.source.parity_of(i)))
    }

    pub fn rank(&self) -> usize {
        echelonize(self.field, self.target.total(), self.images.iter().map(|v| v.coords().to_vec())).rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.total() == self.target.total() && self.rank() == self.source.total()
    }

    pub fn inverse(&self) -> Result<LinearMap, LinalgError> {
        if !self.is_bijective() {
            return Err(LinalgError::Singular);
        }
        let n = self.source.total();
        let field = self.field;
        // Row-reduce [A | I] where column s of A is the image of e_s.
        let rows = (0..n).map(|t| {
            let mut row: Vec<Scalar> = self.images.iter().map(|img| img.coords()[t].clone()).collect();
            row.extend((0..n).map(|k| if k == t { field.one() } else { field.zero() }));
            row
        });
        let e = echelonize(field, 2 * n, rows);
        debug_assert_eq!(e.pivots(), (0..n).collect::<Vec<_>>().as_slice());
        let images = (0..n)
            .map(|t| {
                let coords = e.rows().iter().map(|row| row[n + t].clone()).collect();
                GradedVector::new(self.source, coords)
            })
            .collect();
        Ok(LinearMap { field, source: self.target, target: self.source, images })
    }
}

/// `V ⊗ W` with the flat position of each pure tensor `e_i ⊗ w_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSpace {
    space: SuperSpace,
    left: Dims,
    right: Dims,
    position: Vec<usize>,
}

impl TensorSpace {
    pub fn new(left: &SuperSpace, right: &SuperSpace) -> Self {
        let (ld, rd) = (left.dims(), right.dims());
        let mut even = Vec::new();
        let mut odd = Vec::new();
        let mut slots = Vec::with_capacity(ld.total() * rd.total());
        for i in 0..ld.total() {
            for k in 0..rd.total() {
                let label = format!("{}⊗{}", left.label(i), right.label(k));
                match left.parity(i) + right.parity(k) {
                    Parity::Even => {
                        slots.push((Parity::Even, even.len()));
                        even.push(label);
                    }
                    Parity::Odd => {
                        slots.push((Parity::Odd, odd.len()));
                        odd.push(label);
                    }
                }
            }
        }
        let n_even = even.len();
        let position = slots
            .into_iter()
            .map(|(p, j)| if p == Parity::Even { j } else { n_even + j })
            .collect();
        // Labels of distinct pairs can only collide if the factor labels contain '⊗'.
        let space = SuperSpace::new(even.clone(), odd.clone()).unwrap_or(SuperSpace { even, odd });
        TensorSpace { space, left: ld, right: rd, position }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dims(&self) -> Dims {
        self.space.dims()
    }

    pub fn left(&self) -> Dims {
        self.left
    }

    pub fn right(&self) -> Dims {
        self.right
    }

    pub fn index(&self, i: usize, k: usize) -> usize {
        self.position[i * self.right.total() + k]
    }

    /// `a ⊗ b` for arbitrary vectors of the two factors.
    pub fn tensor(&self, a: &GradedVector, b: &GradedVector) -> GradedVector {
        assert_eq!(a.dims(), self.left);
        assert_eq!(b.dims(), self.right);
        let field = a.coords().first().or(b.coords().first()).map(Scalar::field);
        let Some(field) = field else {
            return GradedVector::new(self.dims(), Vec::new());
        };
        let mut out = GradedVector::zero(field, self.dims());
        for (i, x) in a.coords().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.coords().iter().enumerate() {
                if !y.is_zero() {
                    let at = self.index(i, k);
                    out.coords[at] = &out.coords[at] + &(x * y);
                }
            }
        }
        out
    }
}

/// The super-exterior square: pairs `e_i ∧ e_j`, `i < j`, plus the diagonal
/// `v_i ∧ v_i` for odd basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeSpace {
    space: SuperSpace,
    pairs: Vec<(usize, usize)>,
}

impl WedgeSpace {
    pub fn new(base: &SuperSpace) -> Self {
        let n = base.dim();
        let mut even_pairs = Vec::new();
        let mut odd_pairs = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j && base.parity(i) == Parity::Even {
                    continue;
                }
                match base.parity(i) + base.parity(j) {
                    Parity::Even => even_pairs.push((i, j)),
                    Parity::Odd => odd_pairs.push((i, j)),
                }
            }
        }
        let label = |&(i, j): &(usize, usize)| format!("{}∧{}", base.label(i), base.label(j));
        let even: Vec<String> = even_pairs.iter().map(label).collect();
        let odd: Vec<String> = odd_pairs.iter().map(label).collect();
        let space = SuperSpace::new(even.clone(), odd.clone()).unwrap_or(SuperSpace { even, odd });
        even_pairs.extend(odd_pairs);
        WedgeSpace { space, pairs: even_pairs }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dims(&self) -> Dims {
        self.space.dims()
    }

    /// Basis pairs in flat order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.pairs.iter().position(|&p| p == key)
    }
}

/// `C(n, 2)`.
pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
