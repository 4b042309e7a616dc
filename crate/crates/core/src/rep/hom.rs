//! Hom spaces as solution spaces of the intertwining equations.

use super::{Morphism, Representation};
use crate::linalg::{kernel_basis, rank, Matrix};

/// The linear system whose kernel is `Hom(M, N)`, and the offset of each
/// vertex block among the unknowns.
fn hom_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    assert!(m.algebra().same(n.algebra()), "modules over different algebras");
    let q = m.algebra().quiver();
    let (dm, dn) = (m.dims(), n.dims());
    let mut offsets = Vec::with_capacity(dm.len() + 1);
    let mut unknowns = 0;
    for v in 0..dm.len() {
        offsets.push(unknowns);
        unknowns += dm[v] * dn[v];
    }
    offsets.push(unknowns);
    let equations: usize = q.arrows().iter().map(|a| dn[a.target] * dm[a.source]).sum();
    let mut sys = Matrix::zeros(equations, unknowns);
    let mut row = 0;
    // N_a X_i − X_j M_a = 0 for a: i → j
    for (k, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (na, ma) = (n.map(k), m.map(k));
        for r in 0..dn[j] {
            for c in 0..dm[i] {
                for t in 0..dn[i] {
                    let x = na[(r, t)];
                    if !x.is_zero() {
                        sys[(row, offsets[i] + t * dm[i] + c)] += x;
                    }
                }
                for t in 0..dm[j] {
                    let x = ma[(t, c)];
                    if !x.is_zero() {
                        sys[(row, offsets[j] + r * dm[j] + t)] -= x;
                    }
                }
                row += 1;
            }
        }
    }
    (sys, offsets)
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<Morphism> {
    if m.is_zero() || n.is_zero() {
        return Vec::new();
    }
    let (sys, offsets) = hom_system(m, n);
    let k = kernel_basis(&sys);
    let (dm, dn) = (m.dims(), n.dims());
    (0..k.cols())
        .map(|c| {
            let blocks = (0..dm.len())
                .map(|v| Matrix::from_fn(dn[v], dm[v], |r, s| k[(offsets[v] + r * dm[v] + s, c)]))
                .collect();
            Morphism::from_parts(m, n, blocks)
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let (sys, _) = hom_system(m, n);
    sys.cols() - rank(&sys)
}

/// Whether `X` is a quotient of some `U^n`, i.e. the evaluation map
/// `U ⊗ Hom(U, X) → X` is onto.
pub fn in_fac(x: &Representation, u: &Representation) -> bool {
    if x.is_zero() {
        return true;
    }
    let homs = hom_basis(u, x);
    (0..x.dims().len()).all(|v| {
        let images: Vec<&Matrix> = homs.iter().map(|f| f.block(v)).collect();
        rank(&Matrix::hstack(&images, x.dims()[v])) == x.dims()[v]
    })
}

/// Whether `E` is generated by `T`.
pub fn generates(t: &Representation, e: &Representation) -> bool {
    in_fac(e, t)
}
