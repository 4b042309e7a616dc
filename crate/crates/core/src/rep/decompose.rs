//! Krull–Schmidt decomposition by Fitting splitting of random endomorphisms.

use rand::Rng;

use super::{direct_sum, hom_basis, loewy::sort_key, rng, Morphism, Representation};
use crate::error::{Error, Result};
use crate::linalg::{char_poly_factors, inverse, prime, rank, Fp, Matrix, Poly};
use crate::presentation::Algebra;

const TRIALS: usize = 64;

/// One indecomposable summand with its splitting maps:
/// `inclusion ∘ projection` summed over all pieces is the identity.
#[derive(Clone, Debug)]
pub struct Piece {
    pub module: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// Indecomposable pieces in canonical order, isomorphic pieces adjacent.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pieces: Vec<Piece>,
    // (first piece, multiplicity) per isomorphism class
    classes: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// One representative per isomorphism class, with multiplicity.
    pub fn summands(&self) -> Vec<(&Representation, usize)> {
        self.classes.iter().map(|&(i, m)| (&self.pieces[i].module, m)).collect()
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// `|M|`, the number of isomorphism classes of summands.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_basic(&self) -> bool {
        self.classes.iter().all(|&(_, m)| m == 1)
    }

    /// The direct sum of one representative per class.
    pub fn basic_part(&self, alg: &Algebra) -> Representation {
        let reps: Vec<&Representation> = self.summands().into_iter().map(|(r, _)| r).collect();
        direct_sum(alg, &reps)
    }
}

/// Splits `M` into indecomposables.
///
/// A module is declared indecomposable when `End(M)/rad` is one-dimensional,
/// the radical being that of the trace form `(φ, ψ) ↦ tr(φψ)`. Otherwise a
/// random endomorphism with at least two distinct irreducible factors in its
/// characteristic polynomial splits `M` into generalized eigenspaces.
pub fn decompose(m: &Representation) -> Result<Decomposition> {
    let p = prime() as usize;
    if p <= 2 * m.dim() {
        return Err(Error::FieldTooSmall { prime: prime(), dim: m.dim() });
    }
    let mut rng = rng();
    let mut found = Vec::new();
    split(m, &Morphism::identity(m), &mut rng, &mut found)?;

    let mut pieces: Vec<(Representation, Morphism)> = found;
    pieces.sort_by_cached_key(|(r, _)| sort_key(r));

    // group isomorphic pieces, keeping the canonical order of first occurrence
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..pieces.len() {
        match groups.iter_mut().find(|g| {
            let r = &pieces[g[0]].0;
            r.dims() == pieces[i].0.dims() && isomorphic_indecomposables(r, &pieces[i].0)
        }) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let order: Vec<usize> = groups.iter().flatten().copied().collect();
    let mut classes = Vec::new();
    let mut at = 0;
    for g in &groups {
        classes.push((at, g.len()));
        at += g.len();
    }

    // projections from the inverse of the assembled inclusions
    let n = m.algebra().vertex_count();
    let inverses: Vec<Matrix> = (0..n)
        .map(|v| {
            let cols: Vec<&Matrix> = order.iter().map(|&i| pieces[i].1.block(v)).collect();
            inverse(&Matrix::hstack(&cols, m.dims()[v])).expect("summands span the module")
        })
        .collect();
    let mut offsets = vec![0; n];
    let pieces = order
        .iter()
        .map(|&i| {
            let (module, inclusion) = pieces[i].clone();
            let blocks = (0..n)
                .map(|v| {
                    let b = inverses[v].block(offsets[v], 0, module.dims()[v], m.dims()[v]);
                    offsets[v] += module.dims()[v];
                    b
                })
                .collect();
            let projection = Morphism::from_parts(m, &module, blocks);
            Piece { module, inclusion, projection }
        })
        .collect();
    Ok(Decomposition { pieces, classes })
}

fn random_combination(basis: &[Morphism], rng: &mut impl Rng) -> Morphism {
    let p = prime();
    let coeffs: Vec<Fp> = basis.iter().map(|_| Fp::from(rng.gen_range(0..p))).collect();
    Morphism::combination(basis, &coeffs)
}

fn total_trace(f: &Morphism) -> Fp {
    f.blocks().iter().fold(Fp::ZERO, |acc, b| acc + b.trace())
}

/// Dimension of `End(M)` modulo the radical of the trace form.
fn semisimple_rank(end: &[Morphism]) -> usize {
    let g = Matrix::from_fn(end.len(), end.len(), |i, j| total_trace(&end[i].then(&end[j])));
    rank(&g)
}

fn split(
    m: &Representation,
    incl: &Morphism,
    rng: &mut impl Rng,
    out: &mut Vec<(Representation, Morphism)>,
) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let end = hom_basis(m, m);
    if end.len() == 1 || semisimple_rank(&end) == 1 {
        out.push((m.clone(), incl.clone()));
        return Ok(());
    }
    for _ in 0..TRIALS {
        let phi = random_combination(&end, rng);
        let whole = Matrix::block_diagonal(&phi.blocks().iter().collect::<Vec<_>>());
        let factors = char_poly_factors(&whole);
        if factors.len() < 2 {
            continue;
        }
        for (f, mult) in factors {
            let g = (1..mult).fold(f.clone(), |acc, _| acc.mul(&f));
            let basis = phi.blocks().iter().map(|b| kernel_of_poly(&g, b)).collect();
            let (sub, sub_incl) = m.submodule(basis);
            split(&sub, &sub_incl.then(incl), rng, out)?;
        }
        return Ok(());
    }
    Err(Error::DecompositionFailure { dim: m.dim() })
}

fn kernel_of_poly(g: &Poly, b: &Matrix) -> Matrix {
    crate::linalg::kernel_basis(&g.eval_matrix(b))
}

fn has_iso(homs: &[Morphism], rng: &mut impl Rng) -> bool {
    if homs.is_empty() {
        return false;
    }
    (0..TRIALS).any(|_| random_combination(homs, rng).is_iso())
}

fn isomorphic_indecomposables(a: &Representation, b: &Representation) -> bool {
    has_iso(&hom_basis(a, b), &mut rng())
}

/// Isomorphism test: a random search for an invertible intertwiner, then a
/// comparison of decompositions when the search comes back empty-handed.
pub fn is_isomorphic(a: &Representation, b: &Representation) -> bool {
    if !a.algebra().same(b.algebra()) || a.dims() != b.dims() {
        return false;
    }
    if a.is_zero() {
        return true;
    }
    let homs = hom_basis(a, b);
    if has_iso(&homs, &mut rng()) {
        return true;
    }
    if homs.is_empty() {
        return false;
    }
    let (Ok(da), Ok(db)) = (decompose(a), decompose(b)) else {
        return false;
    };
    if da.len() == 1 && db.len() == 1 {
        return false;
    }
    let mut unmatched: Vec<(&Representation, usize)> = db.summands();
    for (x, mx) in da.summands() {
        let Some(k) =
            unmatched.iter().position(|(y, my)| *my == mx && y.dims() == x.dims() && isomorphic_indecomposables(x, y))
        else {
            return false;
        };
        unmatched.swap_remove(k);
    }
    unmatched.is_empty()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{lambda, two_cycle};
    use super::super::{projective, simple};
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn multiplicities() {
        let l = lambda();
        let p1 = projective(&l, 0);
        let d = decompose(&direct_sum(&l, &[&p1, &p1])).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.class_count(), 1);
        assert!(is_isomorphic(d.summands()[0].0, &p1));
        assert_eq!(d.summands()[0].1, 2);
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let l = lambda();
        let ps: Vec<Representation> = (0..3).map(|v| projective(&l, v)).collect();
        let d = decompose(&direct_sum(&l, &ps.iter().collect::<Vec<_>>())).unwrap();
        assert_eq!(d.class_count(), 3);
        for p in &ps {
            assert!(d.summands().iter().any(|(s, m)| *m == 1 && is_isomorphic(s, p)));
        }
    }

    #[test]
    fn splitting_maps_compose_to_identity() {
        let g = two_cycle();
        let m = direct_sum(&g, &[&simple(&g, 1), &projective(&g, 1), &projective(&g, 0), &simple(&g, 1)]);
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 4);
        for (i, a) in d.pieces().iter().enumerate() {
            for (j, b) in d.pieces().iter().enumerate() {
                let c = a.inclusion.then(&b.projection);
                if i == j {
                    assert!(c.is_iso());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let l = lambda();
        let p1 = projective(&l, 0);
        assert!(is_isomorphic(&p1, &p1));
        assert!(!is_isomorphic(&simple(&l, 0), &simple(&l, 1)));
        let split = direct_sum(&l, &[&simple(&l, 0), &simple(&l, 1)]);
        assert!(!is_isomorphic(&p1, &split));
    }

    #[test]
    fn field_too_small_is_reported() {
        // the field check runs before any arithmetic
        let mut q = crate::presentation::Quiver::new();
        q.add_vertex("1");
        let k = Algebra::build("K", q, vec![], 1).unwrap();
        let big = Representation::from_parts(&k, vec![20000], vec![]);
        assert!(matches!(decompose(&big), Err(Error::FieldTooSmall { .. })));
    }

    fn module_from_choice(l: &Algebra, choice: &[u8]) -> Representation {
        let parts: Vec<Representation> = choice
            .iter()
            .map(|&c| match c % 5 {
                0 => projective(l, 0),
                1 => projective(l, 1),
                k => simple(l, (k - 2) as usize),
            })
            .collect();
        direct_sum(l, &parts.iter().collect::<Vec<_>>())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn krull_schmidt(a in prop::collection::vec(any::<u8>(), 0..4), b in prop::collection::vec(any::<u8>(), 0..4)) {
            let l = lambda();
            let (m, n) = (module_from_choice(&l, &a), module_from_choice(&l, &b));
            let whole = decompose(&direct_sum(&l, &[&m, &n])).unwrap();
            prop_assert_eq!(whole.len(), a.len() + b.len());
            let parts = decompose(&m).unwrap().len() + decompose(&n).unwrap().len();
            prop_assert_eq!(whole.len(), parts);
            for piece in whole.pieces() {
                let again = decompose(&piece.module).unwrap();
                prop_assert_eq!(again.len(), 1);
            }
        }
    }
}
