//! Standard families of algebras and maps, plus seeded random generators.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::liesuper::LieSuper;
use crate::linalg::{Dims, GradedSubspace, GradedVector, LinearMap, Parity, SuperSpace};
use crate::sske::{SkewSuperMap, SskeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no object with dim V = {dimension} and dim W = {rank} exists")]
    Infeasible { dimension: Dims, rank: Dims },
    #[error("random generation did not produce a spanning image after {0} attempts")]
    RetryExhausted(usize),
    #[error(transparent)]
    Sske(#[from] SskeError),
}

const MAX_ATTEMPTS: usize = 64;

fn space(even: Vec<String>, odd: Vec<String>) -> SuperSpace {
    SuperSpace::new(even, odd).expect("catalog labels are distinct")
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `H(m, n)`: even `x1..x2m, z`, odd `y1..yn`, with `[x_i, x_{m+i}] = z` and `[y_j, y_j] = z`.
pub fn heisenberg_even(field: Field, m: usize, n: usize) -> Result<LieSuper, CatalogError> {
    if m + n == 0 {
        return Err(CatalogError::InvalidParameters("H(m, n) needs m + n >= 1".into()));
    }
    let mut even = numbered("x", 2 * m);
    even.push("z".into());
    let s = space(even, numbered("y", n));
    let dims = s.dims();
    let z = GradedVector::basis(field, dims, 2 * m);
    let mut entries: Vec<_> = (0..m).map(|i| (i, m + i, z.clone())).collect();
    entries.extend((0..n).map(|j| (2 * m + 1 + j, 2 * m + 1 + j, z.clone())));
    Ok(LieSuper::from_brackets(field, s, entries).expect("well-formed brackets"))
}

/// `H_m`: even `x1..xm`, odd `y1..ym, z`, with `[x_j, y_j] = z`.
pub fn heisenberg_odd(field: Field, m: usize) -> Result<LieSuper, CatalogError> {
    if m == 0 {
        return Err(CatalogError::InvalidParameters("H_m needs m >= 1".into()));
    }
    let mut odd = numbered("y", m);
    odd.push("z".into());
    let s = space(numbered("x", m), odd);
    let z = GradedVector::basis(field, s.dims(), 2 * m);
    let entries = (0..m).map(|j| (j, m + j, z.clone()));
    Ok(LieSuper::from_brackets(field, s, entries).expect("well-formed brackets"))
}

/// The abelian algebra `A(m|n)` on even `a1..am`, odd `b1..bn`.
pub fn abelian(field: Field, m: usize, n: usize) -> LieSuper {
    LieSuper::abelian_on(field, space(numbered("a", m), numbered("b", n)))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Blocks {
    All,
    Even,
    Odd,
}

/// Free object on `(m|n)`: every independent basis pair gets its own target vector.
pub fn generic_full(field: Field, m: usize, n: usize) -> Result<SkewSuperMap, CatalogError> {
    generic(field, m, n, Blocks::All)
}

/// Like [`generic_full`] but with the odd part of the target (the mixed pairs) removed.
pub fn generic_even_full(field: Field, m: usize, n: usize) -> Result<SkewSuperMap, CatalogError> {
    generic(field, m, n, Blocks::Even)
}

/// Like [`generic_full`] but keeping only the mixed pairs.
pub fn generic_odd_full(field: Field, m: usize, n: usize) -> Result<SkewSuperMap, CatalogError> {
    generic(field, m, n, Blocks::Odd)
}

fn generic(field: Field, m: usize, n: usize, blocks: Blocks) -> Result<SkewSuperMap, CatalogError> {
    let source = space(numbered("u", m), numbered("v", n));
    let mut pairs_even = Vec::new();
    let mut labels_even = Vec::new();
    if blocks != Blocks::Odd {
        for i in 0..m {
            for r in i + 1..m {
                pairs_even.push((i, r));
                labels_even.push(format!("x{}_{}", i + 1, r + 1));
            }
        }
        for j in 0..n {
            for s in j..n {
                pairs_even.push((m + j, m + s));
                labels_even.push(format!("y{}_{}", j + 1, s + 1));
            }
        }
    }
    let mut pairs_odd = Vec::new();
    let mut labels_odd = Vec::new();
    if blocks != Blocks::Even {
        for i in 0..m {
            for j in 0..n {
                pairs_odd.push((i, m + j));
                labels_odd.push(format!("z{}_{}", i + 1, j + 1));
            }
        }
    }
    if pairs_even.is_empty() && pairs_odd.is_empty() {
        return Err(CatalogError::Infeasible { dimension: Dims::new(m, n), rank: Dims::ZERO });
    }
    let target = space(labels_even, labels_odd);
    let dims = target.dims();
    let entries = pairs_even
        .into_iter()
        .chain(pairs_odd)
        .enumerate()
        .map(|(k, (i, j))| (i, j, GradedVector::basis(field, dims, k)));
    Ok(SkewSuperMap::from_values(field, source, target, entries)?)
}

/// Seeded sampler over ChaCha8, whose output stream is fixed for a given
/// seed on every platform.
#[derive(Debug, Clone)]
pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// A fresh seed for an independent sub-stream.
    pub fn next_seed(&mut self) -> u64 {
        self.0.random()
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.0.random_range(0..n)
    }

    /// A uniform residue over F_p, or an integer in `-3..=3` over ℚ.
    pub fn scalar(&mut self, field: Field) -> Scalar {
        match field {
            Field::Prime(p) => field.from_i64(self.below(p) as i64),
            Field::Rational => field.from_i64(self.below(7) as i64 - 3),
        }
    }

    pub fn vector_in(&mut self, field: Field, dims: Dims, parity: Parity) -> GradedVector {
        let block: Vec<Scalar> = (0..dims.block(parity).len()).map(|_| self.scalar(field)).collect();
        GradedVector::from_block(field, dims, parity, &block)
    }
}

/// Number of independent even / odd values a map on `dims` can take.
pub fn free_rank(dims: Dims) -> Dims {
    let (m, n) = (dims.even, dims.odd);
    Dims::new(m * m.saturating_sub(1) / 2 + n * (n + 1) / 2, m * n)
}

/// `(i, j)` with `i <= j` that carry independent values: `i < j`, or `i == j` odd.
fn free_pairs(s: &SuperSpace) -> Vec<(usize, usize)> {
    let d = s.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            if i < j || s.parity(i) == Parity::Odd {
                out.push((i, j));
            }
        }
    }
    out
}

fn random_target(r: usize, s: usize) -> SuperSpace {
    space(numbered("p", r), numbered("q", s))
}

fn random_on_pairs(
    field: Field,
    source: &SuperSpace,
    rank: Dims,
    pairs: &[(usize, usize)],
    rng: &mut Rng,
) -> Result<SkewSuperMap, CatalogError> {
    let target = random_target(rank.even, rank.odd);
    for _ in 0..MAX_ATTEMPTS {
        let entries: Vec<_> = pairs
            .iter()
            .map(|&(i, j)| {
                let parity = source.parity(i) + source.parity(j);
                (i, j, rng.vector_in(field, rank, parity))
            })
            .collect();
        let f = SkewSuperMap::from_values(field, source.clone(), target.clone(), entries)?;
        if f.image_span().dims() == rank {
            return Ok(f);
        }
    }
    Err(CatalogError::RetryExhausted(MAX_ATTEMPTS))
}

/// A random object with `dim V = (m|n)` and `dim W = (r|s)`.
pub fn random_sske(m: usize, n: usize, r: usize, s: usize, seed: u64, field: Field) -> Result<SkewSuperMap, CatalogError> {
    let dimension = Dims::new(m, n);
    let rank = Dims::new(r, s);
    let free = free_rank(dimension);
    if r > free.even || s > free.odd || rank.is_zero() {
        return Err(CatalogError::Infeasible { dimension, rank });
    }
    let source = space(numbered("u", m), numbered("v", n));
    let pairs = free_pairs(&source);
    random_on_pairs(field, &source, rank, &pairs, &mut Rng::new(seed))
}

/// A random object on `V = V1 ⊕ V2` with `f(V1, V2) = 0`, returned with `V1` and `V2`.
pub fn random_block_sske(
    first: Dims,
    second: Dims,
    rank: Dims,
    seed: u64,
    field: Field,
) -> Result<(SkewSuperMap, GradedSubspace, GradedSubspace), CatalogError> {
    let dimension = first + second;
    let free = free_rank(first) + free_rank(second);
    if rank.even > free.even || rank.odd > free.odd || rank.is_zero() {
        return Err(CatalogError::Infeasible { dimension, rank });
    }
    let source = space(numbered("u", dimension.even), numbered("v", dimension.odd));
    // Even block: first.even indices then second.even; likewise for odd.
    let in_first = |i: usize| {
        if i < dimension.even {
            i < first.even
        } else {
            i - dimension.even < first.odd
        }
    };
    let pairs: Vec<_> = free_pairs(&source).into_iter().filter(|&(i, j)| in_first(i) == in_first(j)).collect();
    let f = random_on_pairs(field, &source, rank, &pairs, &mut Rng::new(seed))?;
    let basis = |want: bool| -> Vec<GradedVector> {
        (0..dimension.total())
            .filter(|&i| in_first(i) == want)
            .map(|i| GradedVector::basis(field, dimension, i))
            .collect()
    };
    let v1 = GradedSubspace::from_generators(field, dimension, &basis(true)).expect("basis vectors");
    let v2 = GradedSubspace::from_generators(field, dimension, &basis(false)).expect("basis vectors");
    Ok((f, v1, v2))
}

/// A random degree-zero automorphism of a space of dimension `dims`.
pub fn random_invertible(field: Field, dims: Dims, rng: &mut Rng) -> LinearMap {
    loop {
        let images = (0..dims.total())
            .map(|i| rng.vector_in(field, dims, dims.parity_of(i)))
            .collect();
        let map = LinearMap::new(field, dims, dims, images).expect("square map");
        if map.is_bijective() {
            return map;
        }
    }
}

/// A random graded subspace of the given dimension inside `ambient`.
pub fn random_subspace(field: Field, ambient: Dims, dims: Dims, rng: &mut Rng) -> GradedSubspace {
    assert!(dims.even <= ambient.even && dims.odd <= ambient.odd, "subspace larger than ambient");
    loop {
        let mut gens = Vec::with_capacity(dims.total());
        for i in 0..dims.total() {
            gens.push(rng.vector_in(field, ambient, dims.parity_of(i)));
        }
        let sub = GradedSubspace::from_generators(field, ambient, &gens).expect("same ambient");
        if sub.dims() == dims {
            return sub;
        }
    }
}

/// A named catalog entry, as accepted by the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    HeisenbergEven { m: usize, n: usize },
    HeisenbergOdd { m: usize },
    Abelian { m: usize, n: usize },
    GenericFull { m: usize, n: usize },
    GenericEvenFull { m: usize, n: usize },
    GenericOddFull { m: usize, n: usize },
    Random { m: usize, n: usize, r: usize, s: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub enum CatalogObject {
    Lie(LieSuper),
    Map(SkewSuperMap),
}

impl CatalogSpec {
    pub fn build(&self, field: Field) -> Result<CatalogObject, CatalogError> {
        use CatalogSpec::*;
        Ok(match *self {
            HeisenbergEven { m, n } => CatalogObject::Lie(heisenberg_even(field, m, n)?),
            HeisenbergOdd { m } => CatalogObject::Lie(heisenberg_odd(field, m)?),
            Abelian { m, n } => CatalogObject::Lie(abelian(field, m, n)),
            GenericFull { m, n } => CatalogObject::Map(generic_full(field, m, n)?),
            GenericEvenFull { m, n } => CatalogObject::Map(generic_even_full(field, m, n)?),
            GenericOddFull { m, n } => CatalogObject::Map(generic_odd_full(field, m, n)?),
            Random { m, n, r, s, seed } => CatalogObject::Map(random_sske(m, n, r, s, seed, field)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn heisenberg_shapes() {
        for (m, n) in [(1, 0), (0, 1), (2, 3)] {
            let h = heisenberg_even(Q, m, n).unwrap();
            assert_eq!(h.dims(), Dims::new(2 * m + 1, n));
            assert!(h.validate().is_empty());
            assert_eq!(h.center().dims(), Dims::new(1, 0));
        }
        let h = heisenberg_odd(Q, 2).unwrap();
        assert_eq!(h.dims(), Dims::new(2, 3));
        assert!(h.validate().is_empty());
        assert_eq!(h.derived_subalgebra().dims(), Dims::new(0, 1));
        assert!(heisenberg_even(Q, 0, 0).is_err());
        assert!(heisenberg_odd(Q, 0).is_err());
    }

    #[test]
    fn generic_ranks() {
        let g = generic_full(Q, 3, 2).unwrap();
        assert_eq!(g.rank(), Dims::new(3 + 3, 6));
        assert!(g.validate().is_empty());
        assert!(g.is_nondegenerate());
        assert_eq!(generic_even_full(Q, 2, 1).unwrap().rank(), Dims::new(2, 0));
        assert_eq!(generic_odd_full(Q, 2, 1).unwrap().rank(), Dims::new(0, 2));
        assert!(generic_full(Q, 1, 0).is_err());
        assert!(generic_odd_full(Q, 2, 0).is_err());
    }

    #[test]
    fn random_is_reproducible_and_valid() {
        let f5 = Field::prime(5).unwrap();
        let a = random_sske(2, 2, 2, 2, 7, f5).unwrap();
        let b = random_sske(2, 2, 2, 2, 7, f5).unwrap();
        assert_eq!(a, b);
        assert!(a.validate().is_empty());
        assert!(random_sske(1, 0, 1, 0, 0, f5).is_err());
        assert!(random_sske(2, 1, 1, 3, 0, f5).is_err());
        let q = random_sske(3, 1, 2, 1, 11, Q).unwrap();
        assert!(q.validate().is_empty());
    }

    #[test]
    fn random_blocks_decompose() {
        let f5 = Field::prime(5).unwrap();
        let (f, v1, v2) = random_block_sske(Dims::new(2, 1), Dims::new(1, 1), Dims::new(2, 1), 3, f5).unwrap();
        assert!(f.validate().is_empty());
        assert!(f.verify_decomposition(&v1, &v2));
    }

    #[test]
    fn random_invertible_is_bijective() {
        let mut rng = Rng::new(1);
        let f5 = Field::prime(5).unwrap();
        let map = random_invertible(f5, Dims::new(2, 2), &mut rng);
        assert!(map.is_bijective() && map.is_degree_zero());
        let sub = random_subspace(f5, Dims::new(3, 2), Dims::new(1, 1), &mut rng);
        assert_eq!(sub.dims(), Dims::new(1, 1));
    }
}
