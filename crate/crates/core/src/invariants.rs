//! Computable invariants of an object `f`: the Jacobi span `X_f ⊆ V ⊗ W`, the
//! Schur multiplier `M(f)`, the epicenter `Z*(f)`, capability, and the
//! structural checks built on them.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::liesuper::{LieError, LieSuper, NilpotencyClass};
use crate::linalg::{kernel, Dims, GradedSubspace, GradedVector, LinalgError, Parity, SuperSpace, TensorSpace, WedgeSpace};
use crate::sske::{SkewSuperMap, SskeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Sske(#[from] SskeError),
    #[error("capability is only decided for nilpotency class at most two (found {0})")]
    HigherClass(NilpotencyClass),
    #[error("rank-one classification needs dim W = 1, got {0}")]
    RankNotOne(Dims),
    #[error("subspaces do not form a non-trivial decomposition")]
    NotDecomposition,
    #[error("map is degenerate (radical {0})")]
    Degenerate(Dims),
    #[error("quotient by the whole target leaves nothing")]
    WholeTarget,
    #[error("non-degenerate part {0} fits neither Heisenberg family")]
    Inconsistent(Dims),
}

/// Which ordered basis triples generate `X_f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triples {
    All,
    /// Only `a ≤ b ≤ c`; spans the same subspace.
    Sorted,
}

#[derive(Debug, Clone)]
pub struct JacobiSpan {
    pub tensor: TensorSpace,
    pub subspace: GradedSubspace,
}

pub fn jacobi_span(f: &SkewSuperMap) -> JacobiSpan {
    jacobi_span_with(f, Triples::All)
}

pub fn jacobi_span_with(f: &SkewSuperMap, triples: Triples) -> JacobiSpan {
    let tensor = TensorSpace::new(f.source(), f.target());
    let d = f.source().dim();
    let mut subspace = GradedSubspace::zero(f.field(), tensor.dims());
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if triples == Triples::Sorted && !(a <= b && b <= c) {
                    continue;
                }
                subspace.insert(&jacobi_generator(f, &tensor, a, b, c));
            }
        }
    }
    JacobiSpan { tensor, subspace }
}

/// `(−1)^{|a||c|} a⊗f(b,c) + (−1)^{|b||a|} b⊗f(c,a) + (−1)^{|c||b|} c⊗f(a,b)`.
pub fn jacobi_generator(f: &SkewSuperMap, tensor: &TensorSpace, a: usize, b: usize, c: usize) -> GradedVector {
    let field = f.field();
    let p = |i: usize| f.source().parity(i);
    let mut coords = vec![field.zero(); tensor.dims().total()];
    let terms = [
        (a, b, c, Parity::sign(p(a), p(c))),
        (b, c, a, Parity::sign(p(b), p(a))),
        (c, a, b, Parity::sign(p(c), p(b))),
    ];
    for (x, y, z, sign) in terms {
        for (k, s) in f.value_basis(y, z).coords().iter().enumerate() {
            if !s.is_zero() {
                let at = tensor.index(x, k);
                coords[at] = &coords[at] + &s.scale_i64(sign);
            }
        }
    }
    GradedVector::new(tensor.dims(), coords)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiplierReport {
    /// `(V ⊗ W) / X_f`.
    pub quotient_dims: Dims,
    /// Kernel of `ρ: Λ²V → W`, `ρ(e_i ∧ e_j) = f(e_i, e_j)`.
    pub kernel_rho_dims: Dims,
    pub total_dims: Dims,
}

pub fn multiplier(f: &SkewSuperMap) -> MultiplierReport {
    multiplier_from(f, &jacobi_span(f))
}

pub fn multiplier_from(f: &SkewSuperMap, x: &JacobiSpan) -> MultiplierReport {
    let quotient_dims = x.tensor.dims() - x.subspace.dims();
    let wedge = WedgeSpace::new(f.source());
    let values: Vec<&GradedVector> = wedge.pairs().iter().map(|&(i, j)| f.value_basis(i, j)).collect();
    let image = GradedSubspace::from_generators(f.field(), f.rank(), values).expect("values live in W");
    let kernel_rho_dims = wedge.dims() - image.dims();
    MultiplierReport { quotient_dims, kernel_rho_dims, total_dims: quotient_dims + kernel_rho_dims }
}

#[derive(Debug, Clone)]
pub struct EpicenterReport {
    pub subspace: GradedSubspace,
    pub capable: bool,
    /// Per basis vector of `subspace`: whether it is a multiple of some
    /// `f(u, v)` with small homogeneous `u, v`. Only computed for `dim V ≤ (3|3)`.
    pub image_witness: Option<Vec<bool>>,
}

pub fn epicenter(f: &SkewSuperMap) -> EpicenterReport {
    epicenter_from(f, &jacobi_span(f))
}

/// `{w ∈ W : e_i ⊗ w ∈ X_f for every basis vector e_i of V}`.
pub fn epicenter_from(f: &SkewSuperMap, x: &JacobiSpan) -> EpicenterReport {
    let field = f.field();
    let rank = f.rank();
    let mut blocks = [Vec::new(), Vec::new()];
    for parity in [Parity::Even, Parity::Odd] {
        // Column k holds the normal forms of e_i ⊗ w_k mod X_f, stacked over i.
        let unknowns: Vec<usize> = rank.block(parity).collect();
        let columns: Vec<Vec<Scalar>> = unknowns
            .iter()
            .map(|&k| {
                let w = GradedVector::basis(field, rank, k);
                (0..f.source().dim())
                    .flat_map(|i| {
                        let t = x.tensor.tensor(&f.source_vector(i), &w);
                        x.subspace.reduce(&t).expect("tensor ambient").into_coords()
                    })
                    .collect()
            })
            .collect();
        let height = columns.first().map_or(0, Vec::len);
        let rows = (0..height).map(|t| columns.iter().map(|c| c[t].clone()).collect::<Vec<_>>());
        blocks[parity.bit() as usize] = kernel(field, unknowns.len(), rows);
    }
    let [even, odd] = blocks;
    let subspace = GradedSubspace::from_block_rows(field, rank, even, odd);
    let dims = f.dimension();
    let image_witness =
        (dims.even <= 3 && dims.odd <= 3).then(|| subspace.basis().iter().map(|z| small_image_witness(f, z)).collect());
    EpicenterReport { capable: subspace.is_zero(), subspace, image_witness }
}

/// Homogeneous vectors with coefficients in `{−1, 0, 1}`, excluding zero.
fn small_vectors(field: Field, dims: Dims, parity: Parity) -> Vec<GradedVector> {
    let n = dims.of(parity);
    let mut out = Vec::new();
    for code in 1..3usize.pow(n as u32) {
        let mut c = code;
        let block: Vec<Scalar> = (0..n)
            .map(|_| {
                let digit = (c % 3) as i64 - 1;
                c /= 3;
                field.from_i64(digit)
            })
            .collect();
        if block.iter().any(|s| !s.is_zero()) {
            out.push(GradedVector::from_block(field, dims, parity, &block));
        }
    }
    out
}

fn small_image_witness(f: &SkewSuperMap, z: &GradedVector) -> bool {
    let field = f.field();
    let dims = f.dimension();
    let line = GradedSubspace::from_generators(field, f.rank(), [z]).expect("z lives in W");
    let even = small_vectors(field, dims, Parity::Even);
    let odd = small_vectors(field, dims, Parity::Odd);
    let all: Vec<&GradedVector> = even.iter().chain(&odd).collect();
    all.iter().any(|u| {
        all.iter().any(|v| {
            let value = f.value(u, v);
            !value.is_zero() && line.contains(&value).expect("same ambient")
        })
    })
}

/// Closed-form capability of the abelian algebra `A(m|n)`.
pub fn abelian_capable(dims: Dims) -> bool {
    (dims.even, dims.odd) == (0, 1) || dims.total() >= 2
}

/// Whether `L ≅ H / Z(H)` for some `H`.
pub fn is_capable_lie(lie: &LieSuper) -> Result<bool, InvariantError> {
    match lie.nilpotency_class() {
        NilpotencyClass::Abelian => Ok(abelian_capable(lie.dims())),
        NilpotencyClass::ClassTwo => Ok(epicenter(&SkewSuperMap::from_lie(lie)?).capable),
        higher => Err(InvariantError::HigherClass(higher)),
    }
}

/// Image of `w` in `W / I`, in the coordinates of [`quotient_map`]'s target.
pub fn project_to_quotient(ideal: &GradedSubspace, w: &GradedVector) -> Result<GradedVector, InvariantError> {
    let reduced = ideal.reduce(w)?;
    let keep = ideal.complement_indices();
    let dims = ideal.ambient() - ideal.dims();
    Ok(GradedVector::new(dims, keep.iter().map(|&k| reduced.coords()[k].clone()).collect()))
}

/// `f̄ = f + I : V × V → W / I`, with `W / I` spanned by the non-pivot basis vectors of `I`.
pub fn quotient_map(f: &SkewSuperMap, ideal: &GradedSubspace) -> Result<SkewSuperMap, InvariantError> {
    if ideal.ambient() != f.rank() {
        return Err(LinalgError::AmbientMismatch { expected: f.rank(), found: ideal.ambient() }.into());
    }
    if ideal.is_whole() {
        return Err(InvariantError::WholeTarget);
    }
    let target = SuperSpace::from_tagged(
        ideal
            .complement_indices()
            .into_iter()
            .map(|k| (f.target().label(k).to_string(), f.target().parity(k))),
    )?;
    let d = f.source().dim();
    let mut table = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            table.push(project_to_quotient(ideal, f.value_basis(i, j))?);
        }
    }
    Ok(SkewSuperMap::from_table(f.field(), f.source().clone(), target, table)?)
}

/// Whether `(Z*(f) + I) / I ⊆ Z*(f̄)`.
pub fn check_quotient_monotonicity(f: &SkewSuperMap, ideal: &GradedSubspace) -> Result<bool, InvariantError> {
    let fbar = quotient_map(f, ideal)?;
    let upstairs = epicenter(f).subspace;
    let downstairs = epicenter(&fbar).subspace;
    for z in upstairs.basis() {
        if !downstairs.contains(&project_to_quotient(ideal, &z)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isomorphism type of `L_f` when `dim W = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum RankOneClass {
    /// `H(m, n) ⊕ A(abelian)`.
    EvenCenter { m: usize, n: usize, abelian: Dims },
    /// `H_m ⊕ A(abelian)`.
    OddCenter { m: usize, abelian: Dims },
}

impl fmt::Display for RankOneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankOneClass::EvenCenter { m, n, abelian } => {
                write!(f, "H({m},{n})⊕A({}|{})", abelian.even, abelian.odd)
            }
            RankOneClass::OddCenter { m, abelian } => write!(f, "H_{m}⊕A({}|{})", abelian.even, abelian.odd),
        }
    }
}

pub fn classify_rank_one(f: &SkewSuperMap) -> Result<RankOneClass, InvariantError> {
    let rank = f.rank();
    if rank.total() != 1 {
        return Err(InvariantError::RankNotOne(rank));
    }
    let abelian = f.radical().dims();
    let nd = f.dimension() - abelian;
    if rank.even == 1 {
        if !nd.even.is_multiple_of(2) || nd.is_zero() {
            return Err(InvariantError::Inconsistent(nd));
        }
        Ok(RankOneClass::EvenCenter { m: nd.even / 2, n: nd.odd, abelian })
    } else {
        if nd.even != nd.odd || nd.is_zero() {
            return Err(InvariantError::Inconsistent(nd));
        }
        Ok(RankOneClass::OddCenter { m: nd.even, abelian })
    }
}

/// Pieces of `f` seen through a decomposition `V = V₁ ⊕ V₂`.
struct Blocks {
    /// `W̄ᵢ = f(Vᵢ, Vᵢ)` inside `W`.
    images: [GradedSubspace; 2],
    /// `X_{f̄ᵢ}` embedded in `V ⊗ W`, or zero when `W̄ᵢ = 0`.
    jacobi: [GradedSubspace; 2],
    /// `Z*(f̄ᵢ)` embedded in `W`.
    epicenters: [GradedSubspace; 2],
    parts: [GradedSubspace; 2],
}

fn blocks(f: &SkewSuperMap, v1: &GradedSubspace, v2: &GradedSubspace, tensor: &TensorSpace) -> Result<Blocks, InvariantError> {
    if !f.verify_decomposition(v1, v2) {
        return Err(InvariantError::NotDecomposition);
    }
    let field = f.field();
    let mut images = Vec::new();
    let mut jacobi = Vec::new();
    let mut epicenters = Vec::new();
    for part in [v1, v2] {
        match f.restrict_embedded(part) {
            Ok(r) => {
                let x = jacobi_span(&r.map);
                let embedded: Vec<GradedVector> = x
                    .subspace
                    .basis()
                    .iter()
                    .map(|g| {
                        let mut out = GradedVector::zero(field, tensor.dims());
                        for (a, sa) in r.source_basis.iter().enumerate() {
                            for (k, wk) in r.target_basis.iter().enumerate() {
                                let c = &g.coords()[x.tensor.index(a, k)];
                                if !c.is_zero() {
                                    out.add_scaled(c, &tensor.tensor(sa, wk));
                                }
                            }
                        }
                        out
                    })
                    .collect();
                jacobi.push(GradedSubspace::from_generators(field, tensor.dims(), &embedded)?);
                let z: Vec<GradedVector> = epicenter_from(&r.map, &x)
                    .subspace
                    .basis()
                    .iter()
                    .map(|c| {
                        let mut out = GradedVector::zero(field, f.rank());
                        for (coef, w) in c.coords().iter().zip(&r.target_basis) {
                            out.add_scaled(coef, w);
                        }
                        out
                    })
                    .collect();
                epicenters.push(GradedSubspace::from_generators(field, f.rank(), &z)?);
                images.push(GradedSubspace::from_generators(field, f.rank(), &r.target_basis)?);
            }
            Err(SskeError::ZeroImage) => {
                jacobi.push(GradedSubspace::zero(field, tensor.dims()));
                epicenters.push(GradedSubspace::zero(field, f.rank()));
                images.push(GradedSubspace::zero(field, f.rank()));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let pair = |mut v: Vec<GradedSubspace>| -> [GradedSubspace; 2] {
        let second = v.pop().expect("two parts");
        [v.pop().expect("two parts"), second]
    };
    Ok(Blocks {
        images: pair(images),
        jacobi: pair(jacobi),
        epicenters: pair(epicenters),
        parts: [v1.clone(), v2.clone()],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XfDecomposition {
    pub jacobi_dims: Dims,
    pub predicted_dims: Dims,
    pub holds: bool,
}

/// Compares `X_f` with `X_{f̄₁} + X_{f̄₂} + V₁⊗W̄₂ + V₂⊗W̄₁` inside `V ⊗ W`.
pub fn decomposable_xf_check(
    f: &SkewSuperMap,
    v1: &GradedSubspace,
    v2: &GradedSubspace,
) -> Result<XfDecomposition, InvariantError> {
    let x = jacobi_span(f);
    let b = blocks(f, v1, v2, &x.tensor)?;
    let mut predicted = b.jacobi[0].sum(&b.jacobi[1])?;
    for (part, image) in [(&b.parts[0], &b.images[1]), (&b.parts[1], &b.images[0])] {
        let mixed: Vec<GradedVector> = part
            .basis()
            .iter()
            .flat_map(|v| image.basis().into_iter().map(move |w| (v.clone(), w)))
            .map(|(v, w)| x.tensor.tensor(&v, &w))
            .collect();
        predicted = predicted.sum(&GradedSubspace::from_generators(f.field(), x.tensor.dims(), &mixed)?)?;
    }
    Ok(XfDecomposition {
        jacobi_dims: x.subspace.dims(),
        predicted_dims: predicted.dims(),
        holds: predicted == x.subspace,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralSumCase {
    /// `W̄₁ ∩ W̄₂ = 0`: `Z*(f) = Z*(f̄₁) ⊕ Z*(f̄₂)`.
    Direct,
    /// Rank two, `W̄₁ = W̄₂ = W`: `Z*(f) = W`.
    BothFull,
    /// Rank two, one `W̄ᵢ = W` and the other of dimension one: `Z*(f) ∈ {W, W̄ⱼ}`.
    OneFull,
    NotCovered,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralSumReport {
    pub case: CentralSumCase,
    pub image_dims: [Dims; 2],
    pub intersection_dims: Dims,
    pub epicenter_dims: Dims,
    pub block_epicenter_dims: [Dims; 2],
    /// `None` when no case applies.
    pub holds: Option<bool>,
}

pub fn central_sum_epicenter_check(
    f: &SkewSuperMap,
    v1: &GradedSubspace,
    v2: &GradedSubspace,
) -> Result<CentralSumReport, InvariantError> {
    let radical = f.radical();
    if !radical.is_zero() {
        return Err(InvariantError::Degenerate(radical.dims()));
    }
    let x = jacobi_span(f);
    let b = blocks(f, v1, v2, &x.tensor)?;
    let z = epicenter_from(f, &x).subspace;
    let whole = GradedSubspace::whole(f.field(), f.rank());
    let intersection = b.images[0].intersect(&b.images[1])?;
    let full = [b.images[0].is_whole(), b.images[1].is_whole()];
    let rank_two = f.rank().total() == 2;
    let (case, holds) = if intersection.is_zero() {
        (CentralSumCase::Direct, Some(z == b.epicenters[0].sum(&b.epicenters[1])?))
    } else if rank_two && full[0] && full[1] {
        (CentralSumCase::BothFull, Some(z == whole))
    } else if rank_two && (full[0] || full[1]) {
        let small = if full[0] { &b.images[1] } else { &b.images[0] };
        if small.dims().total() == 1 {
            (CentralSumCase::OneFull, Some(z == whole || z == *small))
        } else {
            (CentralSumCase::NotCovered, None)
        }
    } else {
        (CentralSumCase::NotCovered, None)
    };
    Ok(CentralSumReport {
        case,
        image_dims: [b.images[0].dims(), b.images[1].dims()],
        intersection_dims: intersection.dims(),
        epicenter_dims: z.dims(),
        block_epicenter_dims: [b.epicenters[0].dims(), b.epicenters[1].dims()],
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: Field = Field::Rational;

    fn fh(m: usize, n: usize) -> SkewSuperMap {
        SkewSuperMap::from_lie(&catalog::heisenberg_even(Q, m, n).unwrap()).unwrap()
    }

    fn fh_odd(m: usize) -> SkewSuperMap {
        SkewSuperMap::from_lie(&catalog::heisenberg_odd(Q, m).unwrap()).unwrap()
    }

    fn subspace(dims: Dims, indices: &[usize]) -> GradedSubspace {
        let gens: Vec<_> = indices.iter().map(|&i| GradedVector::basis(Q, dims, i)).collect();
        GradedSubspace::from_generators(Q, dims, &gens).unwrap()
    }

    /// f on x1..x5 (even) with f(x1,x2) = z1, f(x1,x3) = z2, f(x4,x5) = z2.
    fn rank_two_one_full() -> (SkewSuperMap, GradedSubspace, GradedSubspace) {
        let v = SuperSpace::new(["x1", "x2", "x3", "x4", "x5"], Vec::<&str>::new()).unwrap();
        let w = SuperSpace::new(["z1", "z2"], Vec::<&str>::new()).unwrap();
        let z = |k| GradedVector::basis(Q, w.dims(), k);
        let f = SkewSuperMap::from_values(Q, v, w.clone(), [(0, 1, z(0)), (0, 2, z(1)), (3, 4, z(1))]).unwrap();
        let dims = f.dimension();
        (f, subspace(dims, &[0, 1, 2]), subspace(dims, &[3, 4]))
    }

    #[test]
    fn jacobi_span_examples() {
        assert!(jacobi_span(&fh(1, 0)).subspace.is_zero());

        let f = fh_odd(1);
        let x = jacobi_span(&f);
        assert_eq!(x.subspace.dims(), Dims::new(1, 0));
        // V = <x | y>, W = <z>: the span is y⊗z.
        let y_z = x.tensor.tensor(&f.source_vector(1), &GradedVector::basis(Q, f.rank(), 0));
        assert!(x.subspace.contains(&y_z).unwrap());

        let x = jacobi_span(&fh(2, 0));
        assert_eq!(x.subspace.dims(), Dims::new(4, 0));
        assert!(x.subspace.is_whole());

        // H(0,1): the only triple gives 3·y⊗z, non-zero since char ≠ 3.
        assert!(jacobi_span(&fh(0, 1)).subspace.is_whole());
    }

    #[test]
    fn multiplier_examples() {
        let m = multiplier(&fh(1, 0));
        assert_eq!((m.quotient_dims, m.kernel_rho_dims, m.total_dims), (Dims::new(2, 0), Dims::ZERO, Dims::new(2, 0)));
        assert_eq!(multiplier(&fh(2, 0)).total_dims, Dims::new(5, 0));
        let m = multiplier(&fh_odd(1));
        assert_eq!((m.quotient_dims, m.kernel_rho_dims), (Dims::new(0, 1), Dims::new(1, 0)));
        assert_eq!(m.total_dims, Dims::new(1, 1));
    }

    #[test]
    fn epicenter_examples() {
        let e = epicenter(&fh(1, 0));
        assert!(e.capable);
        assert_eq!(e.image_witness, Some(vec![]));
        let e = epicenter(&fh(2, 0));
        assert!(!e.capable && e.subspace.is_whole());
        let e = epicenter(&fh_odd(2));
        assert_eq!(e.subspace.dims(), Dims::new(0, 1));
        assert_eq!(e.image_witness, Some(vec![true]));
        assert!(epicenter(&fh_odd(1)).capable);
        assert!(!epicenter(&fh(0, 1)).capable);
    }

    #[test]
    fn capability_of_lie_algebras() {
        assert!(is_capable_lie(&catalog::abelian(Q, 0, 1)).unwrap());
        assert!(!is_capable_lie(&catalog::abelian(Q, 1, 0)).unwrap());
        assert!(!is_capable_lie(&catalog::abelian(Q, 0, 0)).unwrap());
        let l = catalog::heisenberg_even(Q, 1, 0).unwrap().direct_sum(&catalog::abelian(Q, 5, 3));
        assert!(is_capable_lie(&l).unwrap());
        let filiform = LieSuper::from_brackets(
            Q,
            SuperSpace::new(["e1", "e2", "e3", "e4"], Vec::<&str>::new()).unwrap(),
            [
                (0, 1, GradedVector::basis(Q, Dims::new(4, 0), 2)),
                (0, 2, GradedVector::basis(Q, Dims::new(4, 0), 3)),
            ],
        )
        .unwrap();
        assert!(matches!(is_capable_lie(&filiform), Err(InvariantError::HigherClass(NilpotencyClass::Higher))));
    }

    #[test]
    fn quotients() {
        let f = fh(1, 0);
        let zero = GradedSubspace::zero(Q, f.rank());
        assert_eq!(quotient_map(&f, &zero).unwrap(), f);
        assert!(matches!(
            quotient_map(&f, &GradedSubspace::whole(Q, f.rank())),
            Err(InvariantError::WholeTarget)
        ));

        // Two H(1,0) blocks with W = <z1, z2>; killing z1 − z2 glues the centers.
        let pair = fh(1, 0).direct_sum(&fh(1, 0));
        let w = pair.rank();
        let diff = GradedVector::basis(Q, w, 0).sub(&GradedVector::basis(Q, w, 1));
        let ideal = GradedSubspace::from_generators(Q, w, [&diff]).unwrap();
        let glued = quotient_map(&pair, &ideal).unwrap();
        assert!(glued.validate().is_empty());
        assert_eq!(classify_rank_one(&glued).unwrap(), RankOneClass::EvenCenter { m: 2, n: 0, abelian: Dims::ZERO });
        assert_eq!(epicenter(&glued).subspace.dims(), epicenter(&fh(2, 0)).subspace.dims());
        assert!(check_quotient_monotonicity(&pair, &ideal).unwrap());
        assert!(check_quotient_monotonicity(&pair, &zero_of(&pair)).unwrap());
    }

    fn zero_of(f: &SkewSuperMap) -> GradedSubspace {
        GradedSubspace::zero(Q, f.rank())
    }

    #[test]
    fn rank_one_classification() {
        assert_eq!(classify_rank_one(&fh(1, 2)).unwrap(), RankOneClass::EvenCenter { m: 1, n: 2, abelian: Dims::ZERO });
        let l = catalog::heisenberg_odd(Q, 2).unwrap().direct_sum(&catalog::abelian(Q, 1, 0));
        let c = classify_rank_one(&SkewSuperMap::from_lie(&l).unwrap()).unwrap();
        assert_eq!(c, RankOneClass::OddCenter { m: 2, abelian: Dims::new(1, 0) });
        assert_eq!(c.to_string(), "H_2⊕A(1|0)");
        let l = catalog::heisenberg_even(Q, 1, 0).unwrap().direct_sum(&catalog::abelian(Q, 3, 1));
        let c = classify_rank_one(&SkewSuperMap::from_lie(&l).unwrap()).unwrap();
        assert_eq!(c.to_string(), "H(1,0)⊕A(3|1)");
        assert!(matches!(
            classify_rank_one(&catalog::generic_full(Q, 3, 0).unwrap()),
            Err(InvariantError::RankNotOne(_))
        ));
    }

    #[test]
    fn decomposable_jacobi_span() {
        let pair = fh(1, 0).direct_sum(&fh(1, 0));
        let dims = pair.dimension();
        let r = decomposable_xf_check(&pair, &subspace(dims, &[0, 1]), &subspace(dims, &[2, 3])).unwrap();
        assert!(r.holds);

        // H(2,0) with [x1,x3] = [x2,x4] = z split as {x1,x3} / {x2,x4}.
        let f = fh(2, 0);
        let dims = f.dimension();
        let (v1, v2) = (subspace(dims, &[0, 2]), subspace(dims, &[1, 3]));
        let r = decomposable_xf_check(&f, &v1, &v2).unwrap();
        assert!(r.holds);
        assert_eq!(r.jacobi_dims, Dims::new(4, 0));

        assert!(matches!(
            decomposable_xf_check(&f, &subspace(dims, &[0, 1]), &subspace(dims, &[2, 3])),
            Err(InvariantError::NotDecomposition)
        ));
    }

    #[test]
    fn central_sum_cases() {
        let pair = fh(1, 0).direct_sum(&fh(1, 0));
        let dims = pair.dimension();
        let r = central_sum_epicenter_check(&pair, &subspace(dims, &[0, 1]), &subspace(dims, &[2, 3])).unwrap();
        assert_eq!((r.case, r.holds, r.epicenter_dims), (CentralSumCase::Direct, Some(true), Dims::ZERO));

        let f = fh(2, 0);
        let dims = f.dimension();
        let r = central_sum_epicenter_check(&f, &subspace(dims, &[0, 2]), &subspace(dims, &[1, 3])).unwrap();
        assert_eq!((r.case, r.holds), (CentralSumCase::NotCovered, None));

        let (f, v1, v2) = rank_two_one_full();
        let r = central_sum_epicenter_check(&f, &v1, &v2).unwrap();
        assert_eq!((r.case, r.holds), (CentralSumCase::OneFull, Some(true)));

        let degenerate = catalog::abelian(Q, 1, 0);
        let g = SkewSuperMap::from_lie(&catalog::heisenberg_even(Q, 1, 0).unwrap().direct_sum(&degenerate)).unwrap();
        let d = g.dimension();
        assert!(matches!(
            central_sum_epicenter_check(&g, &subspace(d, &[0, 1]), &subspace(d, &[2])),
            Err(InvariantError::Degenerate(_))
        ));
    }

    #[test]
    fn generic_full_is_generalized_heisenberg() {
        for (m, n) in [(1, 1), (2, 2), (3, 1)] {
            let f = catalog::generic_full(Q, m, n).unwrap();
            let l = f.to_lie().unwrap();
            assert!(l.is_generalized_heisenberg());
            assert_eq!(l.dims(), Dims::new(m * (m + 1) / 2 + n * (n + 1) / 2, m * n + n));
        }
        // Without mixed values a lone even generator has nothing to pair with.
        let l = catalog::generic_even_full(Q, 1, 2).unwrap().to_lie().unwrap();
        assert!(!l.is_generalized_heisenberg());
        assert_eq!(l.center().dims(), Dims::new(4, 0));
        assert!(catalog::generic_even_full(Q, 2, 2).unwrap().to_lie().unwrap().is_generalized_heisenberg());
        assert!(catalog::generic_odd_full(Q, 1, 1).unwrap().to_lie().unwrap().is_generalized_heisenberg());
    }
}
