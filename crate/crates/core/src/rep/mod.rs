//! Finite-dimensional right modules as quiver representations.

mod decompose;
mod hom;
mod loewy;
mod projective;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{cokernel_basis, column_space, kernel_basis, rank, solve, Fp, Matrix};
use crate::presentation::{Algebra, Path};

pub use decompose::{decompose, is_isomorphic, Decomposition, Piece};
pub use hom::{generates, hom_basis, hom_dim, in_fac};
pub use loewy::{loewy_label, loewy_layers, sort_key, summand_labels, LabelRegistry};
pub use projective::{
    cosyzygy, injective, injective_envelope, min_presentation, projective, projective_cover, projective_map, simple,
    Cover, Presentation,
};

static SEED: AtomicU64 = AtomicU64::new(1);

/// Seed for every random draw (decomposition, isomorphism search).
pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

pub(crate) fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed())
}

/// A right module: a vector space per vertex and a matrix per arrow.
///
/// The matrix of `a: i → j` is `dims[j] × dims[i]`.
#[derive(Clone)]
pub struct Representation {
    algebra: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation("wrong number of vertex spaces or arrow maps".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if (m.rows(), m.cols()) != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map of arrow {} has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let rep = Representation::from_parts(algebra, dims, maps);
        for rel in algebra.relations() {
            let s = q.arrows()[rel.terms[0].1[0]].source;
            let t = q.arrows()[*rel.terms[0].1.last().unwrap()].target;
            let mut acc = Matrix::zeros(rep.dims[t], rep.dims[s]);
            for (c, path) in &rel.terms {
                acc.add_scaled(*c, &rep.arrows_action(s, path));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation("a relation does not act as zero".into()));
            }
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn zero(algebra: &Algebra) -> Representation {
        let q = algebra.quiver();
        Representation::from_parts(
            algebra,
            vec![0; q.vertex_count()],
            q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        )
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Vertices where the module is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Action of the arrow sequence starting at `source`: `A_n ⋯ A_1`.
    pub fn arrows_action(&self, source: usize, arrows: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.dims[source]);
        for &a in arrows {
            acc = &self.maps[a] * &acc;
        }
        acc
    }

    pub fn path_action(&self, p: &Path) -> Matrix {
        self.arrows_action(p.source, &p.arrows)
    }

    /// Action `M_v → M_w` of an element of `e_v Λ e_w`.
    pub fn element_action(&self, x: &[Fp], v: usize, w: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.dims[w], self.dims[v]);
        for &b in self.algebra.basis_between(v, w) {
            if !x[b].is_zero() {
                acc.add_scaled(x[b], &self.path_action(&self.algebra.basis()[b]));
            }
        }
        acc
    }

    /// The vector-space dual, a module over the opposite algebra.
    pub fn dual(&self) -> Representation {
        Representation::from_parts(
            &self.algebra.opposite(),
            self.dims.clone(),
            self.maps.iter().map(Matrix::transpose).collect(),
        )
    }

    /// Submodule spanned at each vertex by the columns of `basis[v]`, which
    /// must be independent and closed under the arrows.
    pub fn submodule(&self, basis: Vec<Matrix>) -> (Representation, Morphism) {
        let q = self.algebra.quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let image = &self.maps[k] * &basis[a.source];
                solve(&basis[a.target], &image).expect("subspace is not a submodule")
            })
            .collect();
        let dims = basis.iter().map(Matrix::cols).collect();
        let sub = Representation::from_parts(&self.algebra, dims, maps);
        let incl = Morphism::from_parts(&sub, self, basis);
        (sub, incl)
    }

    /// Restriction of scalars along a quiver map: vertex `v` of `over` reads
    /// vertex `vertices[v]` here and arrow `a` reads arrow `arrows[a]`.
    pub fn pull_back(&self, over: &Algebra, vertices: &[usize], arrows: &[usize]) -> Representation {
        Representation::from_parts(
            over,
            vertices.iter().map(|&v| self.dims[v]).collect(),
            arrows.iter().map(|&a| self.maps[a].clone()).collect(),
        )
    }
}

impl PartialEq for Representation {
    /// Literal equality of matrices, not isomorphism.
    fn eq(&self, other: &Representation) -> bool {
        self.algebra.same(&other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep({}, dims {:?})", self.algebra.name(), self.dims)
    }
}

/// Direct sum with block-diagonal arrow maps.
pub fn direct_sum(algebra: &Algebra, parts: &[&Representation]) -> Representation {
    debug_assert!(parts.iter().all(|p| p.algebra.same(algebra)), "summands over different algebras");
    let q = algebra.quiver();
    let dims = (0..q.vertex_count()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..q.arrows().len())
        .map(|a| Matrix::block_diagonal(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
        .collect();
    Representation::from_parts(algebra, dims, maps)
}

/// A module homomorphism, one matrix `N_v × M_v` per vertex.
#[derive(Clone)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl Morphism {
    /// Checks shapes and the intertwining relation on every arrow.
    pub fn new(source: &Representation, target: &Representation, blocks: Vec<Matrix>) -> Result<Morphism> {
        if !source.algebra.same(&target.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let q = source.algebra.quiver();
        if blocks.len() != q.vertex_count()
            || blocks.iter().enumerate().any(|(v, b)| (b.rows(), b.cols()) != (target.dims[v], source.dims[v]))
        {
            return Err(Error::InvalidRepresentation("morphism blocks have the wrong shape".into()));
        }
        for (k, a) in q.arrows().iter().enumerate() {
            if &target.maps[k] * &blocks[a.source] != &blocks[a.target] * &source.maps[k] {
                return Err(Error::InvalidRepresentation(format!("morphism does not commute with arrow {}", a.name)));
            }
        }
        Ok(Morphism::from_parts(source, target, blocks))
    }

    pub(crate) fn from_parts(source: &Representation, target: &Representation, blocks: Vec<Matrix>) -> Morphism {
        Morphism { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(m: &Representation) -> Morphism {
        Morphism::from_parts(m, m, m.dims.iter().map(|&d| Matrix::identity(d)).collect())
    }

    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        let blocks = (0..source.dims.len()).map(|v| Matrix::zeros(target.dims[v], source.dims[v])).collect();
        Morphism::from_parts(source, target, blocks)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    /// `g ∘ self`
    pub fn then(&self, g: &Morphism) -> Morphism {
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(f, g)| g * f).collect();
        Morphism::from_parts(&self.source, &g.target, blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims == self.target.dims && self.is_injective()
    }

    /// `Σ cₖ fₖ` over parallel morphisms.
    pub fn combination(parts: &[Morphism], coeffs: &[Fp]) -> Morphism {
        let mut blocks = parts[0].blocks.iter().map(|b| Matrix::zeros(b.rows(), b.cols())).collect::<Vec<_>>();
        for (f, &c) in parts.iter().zip(coeffs) {
            for (acc, b) in blocks.iter_mut().zip(&f.blocks) {
                acc.add_scaled(c, b);
            }
        }
        Morphism::from_parts(&parts[0].source, &parts[0].target, blocks)
    }

    /// The dual morphism `D N → D M`.
    pub fn dual(&self) -> Morphism {
        Morphism::from_parts(
            &self.target.dual(),
            &self.source.dual(),
            self.blocks.iter().map(Matrix::transpose).collect(),
        )
    }

    /// All block entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Fp> {
        self.blocks.iter().flat_map(|b| b.entries().iter().copied()).collect()
    }

    /// `M → ⊕ Nᵢ` with components `parts[i]: M → Nᵢ`.
    pub fn into_sum(source: &Representation, parts: &[Morphism]) -> Morphism {
        let alg = source.algebra();
        let target = direct_sum(alg, &parts.iter().map(|f| &f.target).collect::<Vec<_>>());
        let blocks = (0..source.dims.len())
            .map(|v| Matrix::vstack(&parts.iter().map(|f| &f.blocks[v]).collect::<Vec<_>>(), source.dims[v]))
            .collect();
        Morphism::from_parts(source, &target, blocks)
    }

    /// `⊕ Mᵢ → N` with components `parts[i]: Mᵢ → N`.
    pub fn from_sum(parts: &[Morphism], target: &Representation) -> Morphism {
        let alg = target.algebra();
        let source = direct_sum(alg, &parts.iter().map(|f| &f.source).collect::<Vec<_>>());
        let blocks = (0..target.dims.len())
            .map(|v| Matrix::hstack(&parts.iter().map(|f| &f.blocks[v]).collect::<Vec<_>>(), target.dims[v]))
            .collect();
        Morphism::from_parts(&source, target, blocks)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?}, {:?})", self.source, self.target, self.blocks)
    }
}

/// `X` with `X · a = b`.
fn solve_left(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    solve(&a.transpose(), &b.transpose()).map(|x| x.transpose())
}

pub fn kernel(f: &Morphism) -> (Representation, Morphism) {
    f.source.submodule(f.blocks.iter().map(kernel_basis).collect())
}

pub fn image(f: &Morphism) -> (Representation, Morphism) {
    f.target.submodule(f.blocks.iter().map(column_space).collect())
}

/// Vertexwise quotient by the image, with the projection.
pub fn coker(f: &Morphism) -> (Representation, Morphism) {
    let n = &f.target;
    let proj: Vec<Matrix> = f.blocks.iter().map(cokernel_basis).collect();
    let q = n.algebra.quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let rhs = &proj[a.target] * &n.maps[k];
            solve_left(&proj[a.source], &rhs).expect("image is a submodule")
        })
        .collect();
    let dims = proj.iter().map(Matrix::rows).collect();
    let c = Representation::from_parts(&n.algebra, dims, maps);
    let p = Morphism::from_parts(n, &c, proj);
    (c, p)
}

/// Sum of the images of all arrows.
pub fn radical(m: &Representation) -> (Representation, Morphism) {
    let q = m.algebra.quiver();
    let basis = (0..q.vertex_count())
        .map(|v| {
            let into: Vec<&Matrix> =
                q.arrows().iter().enumerate().filter(|(_, a)| a.target == v).map(|(k, _)| &m.maps[k]).collect();
            column_space(&Matrix::hstack(&into, m.dims[v]))
        })
        .collect();
    m.submodule(basis)
}

pub fn top(m: &Representation) -> Representation {
    coker(&radical(m).1).0
}

/// Common kernel of all arrows.
pub fn socle(m: &Representation) -> (Representation, Morphism) {
    let q = m.algebra.quiver();
    let basis = (0..q.vertex_count())
        .map(|v| {
            let out: Vec<&Matrix> =
                q.arrows().iter().enumerate().filter(|(_, a)| a.source == v).map(|(k, _)| &m.maps[k]).collect();
            kernel_basis(&Matrix::vstack(&out, m.dims[v]))
        })
        .collect();
    m.submodule(basis)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::presentation::{Quiver, Relation, DEFAULT_MAX_LEN};

    /// `1 -a-> 2 -b-> 3` with `a*b = 0`.
    pub(crate) fn lambda() -> Algebra {
        let mut q = Quiver::new();
        for v in ["1", "2", "3"] {
            q.add_vertex(v);
        }
        let a = q.add_arrow("a", 0, 1);
        let b = q.add_arrow("b", 1, 2);
        Algebra::build("L", q, vec![Relation::monomial(vec![a, b])], DEFAULT_MAX_LEN).unwrap()
    }

    /// `1 ⇄ 2` with `alpha*beta = 0`.
    pub(crate) fn two_cycle() -> Algebra {
        let mut q = Quiver::new();
        q.add_vertex("1");
        q.add_vertex("2");
        let al = q.add_arrow("alpha", 0, 1);
        let be = q.add_arrow("beta", 1, 0);
        Algebra::build("G", q, vec![Relation::monomial(vec![al, be])], DEFAULT_MAX_LEN).unwrap()
    }

    #[test]
    fn relations_are_checked() {
        let l = lambda();
        let one = Matrix::identity(1);
        let bad = Representation::new(&l, vec![1, 1, 1], vec![one.clone(), one.clone()]);
        assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));
        let good = Representation::new(&l, vec![1, 1, 0], vec![one, Matrix::zeros(0, 1)]);
        assert!(good.is_ok());
    }

    #[test]
    fn direct_sum_dims() {
        let l = lambda();
        assert!(direct_sum(&l, &[]).is_zero());
        let s = direct_sum(&l, &[&projective(&l, 0), &projective(&l, 1)]);
        assert_eq!(s.dims(), [1, 2, 1]);
    }

    #[test]
    fn kernels_and_cokernels() {
        let l = lambda();
        let p2 = projective(&l, 1);
        let id = Morphism::identity(&p2);
        assert!(coker(&id).0.is_zero());
        assert!(kernel(&id).0.is_zero());
        let z = Morphism::zero(&Representation::zero(&l), &p2);
        assert_eq!(coker(&z).0.dims(), p2.dims());

        // P3 is the socle of P2 = 2/3
        let (soc, incl) = socle(&p2);
        assert_eq!(soc.dims(), [0, 0, 1]);
        let (c, proj) = coker(&incl);
        assert_eq!(c.dims(), [0, 1, 0]);
        let (k, _) = kernel(&proj);
        assert_eq!(k.dims(), [0, 0, 1]);
    }

    #[test]
    fn radical_top_socle() {
        let l = lambda();
        let p1 = projective(&l, 0);
        assert_eq!(top(&p1).dims(), [1, 0, 0]);
        assert!(radical(&simple(&l, 2)).0.is_zero());
        assert_eq!(socle(&p1).0.dims(), [0, 1, 0]);
    }

    #[test]
    fn morphism_validation() {
        let l = lambda();
        let p1 = projective(&l, 0);
        let s1 = simple(&l, 0);
        let s2 = simple(&l, 1);
        assert!(Morphism::new(&p1, &s2, vec![Matrix::zeros(0, 1), Matrix::identity(1), Matrix::zeros(0, 0)]).is_err());
        assert!(Morphism::new(&p1, &s1, vec![Matrix::identity(1), Matrix::zeros(0, 1), Matrix::zeros(0, 0)]).is_ok());
    }
}
