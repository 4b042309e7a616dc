//! Projectives, injectives, covers, minimal presentations and envelopes.

use super::{coker, direct_sum, kernel, radical, Morphism, Representation};
use crate::linalg::{Echelon, Fp, Matrix};
use crate::presentation::Algebra;

/// `e_v Λ`: basis paths starting at `v`, arrows acting by right concatenation.
pub fn projective(alg: &Algebra, v: usize) -> Representation {
    let q = alg.quiver();
    let n = q.vertex_count();
    let dims = (0..n).map(|w| alg.basis_between(v, w).len()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let (from, to) = (alg.basis_between(v, a.source), alg.basis_between(v, a.target));
            let mut m = Matrix::zeros(to.len(), from.len());
            let ab = alg.arrow_basis(k);
            for (c, &p) in from.iter().enumerate() {
                for &(b, x) in alg.product(p, ab) {
                    let r = to.iter().position(|&t| t == b).expect("product leaves e_v Λ e_w");
                    m[(r, c)] += x;
                }
            }
            m
        })
        .collect();
    Representation::from_parts(alg, dims, maps)
}

/// `D(Λ e_v)`, the injective envelope of the simple at `v`.
pub fn injective(alg: &Algebra, v: usize) -> Representation {
    projective(&alg.opposite(), v).dual()
}

pub fn simple(alg: &Algebra, v: usize) -> Representation {
    let q = alg.quiver();
    let mut dims = vec![0; q.vertex_count()];
    dims[v] = 1;
    let maps = q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    Representation::from_parts(alg, dims, maps)
}

/// The map `⊕ₛ e_{sources[s]}Λ → ⊕ᵣ e_{targets[r]}Λ` sending the generator
/// of summand `s` to `Σᵣ entries[r][s]`, where `entries[r][s] ∈ e_{targets[r]} Λ e_{sources[s]}`.
pub fn projective_map(alg: &Algebra, targets: &[usize], sources: &[usize], entries: &[Vec<Vec<Fp>>]) -> Morphism {
    let src_parts: Vec<Representation> = sources.iter().map(|&v| projective(alg, v)).collect();
    let tgt_parts: Vec<Representation> = targets.iter().map(|&v| projective(alg, v)).collect();
    let source = direct_sum(alg, &src_parts.iter().collect::<Vec<_>>());
    let target = direct_sum(alg, &tgt_parts.iter().collect::<Vec<_>>());
    let n = alg.vertex_count();
    let blocks = (0..n)
        .map(|w| {
            let mut m = Matrix::zeros(target.dims()[w], source.dims()[w]);
            let mut col = 0;
            for (s, &j) in sources.iter().enumerate() {
                for &qb in alg.basis_between(j, w) {
                    let unit = alg.unit_element(qb);
                    let mut row = 0;
                    for (r, &i) in targets.iter().enumerate() {
                        let y = alg.mul(&entries[r][s], &unit);
                        for (k, &b) in alg.basis_between(i, w).iter().enumerate() {
                            m[(row + k, col)] = y[b];
                        }
                        row += alg.basis_between(i, w).len();
                    }
                    col += 1;
                }
            }
            m
        })
        .collect();
    Morphism::from_parts(&source, &target, blocks)
}

/// A projective cover `⊕ e_vΛ ↠ M`, one summand per generator.
#[derive(Clone, Debug)]
pub struct Cover {
    pub vertices: Vec<usize>,
    pub generators: Vec<Vec<Fp>>,
    pub map: Morphism,
}

/// Lifts a basis of the top: at each vertex, the standard basis vectors
/// that complete the radical are taken greedily.
pub fn projective_cover(m: &Representation) -> Cover {
    let alg = m.algebra();
    let (_, incl) = radical(m);
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for v in 0..alg.vertex_count() {
        let d = m.dims()[v];
        let mut span = Echelon::new(d);
        for col in incl.block(v).columns() {
            span.insert(&col);
        }
        for k in 0..d {
            let mut e = vec![Fp::ZERO; d];
            e[k] = Fp::ONE;
            if span.insert(&e) {
                vertices.push(v);
                generators.push(e);
            }
        }
    }
    let parts: Vec<Representation> = vertices.iter().map(|&v| projective(alg, v)).collect();
    let source = direct_sum(alg, &parts.iter().collect::<Vec<_>>());
    let blocks = (0..alg.vertex_count())
        .map(|w| {
            let cols: Vec<Vec<Fp>> = vertices
                .iter()
                .zip(&generators)
                .flat_map(|(&v, g)| {
                    alg.basis_between(v, w).iter().map(move |&p| m.path_action(&alg.basis()[p]).apply(g))
                })
                .collect();
            Matrix::from_columns(m.dims()[w], &cols)
        })
        .collect();
    Cover { vertices, generators, map: Morphism::from_parts(&source, m, blocks) }
}

/// A minimal projective presentation `P₁ → P₀ → M → 0`.
///
/// `entries[r][s]` is the algebra element of `e_{p0[r]} Λ e_{p1[s]}` that the
/// generator of the `s`-th summand of `P₁` is sent to in the `r`-th summand
/// of `P₀`, so `f0 == projective_map(alg, p0, p1, entries)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub entries: Vec<Vec<Vec<Fp>>>,
    pub f0: Morphism,
    pub cover: Morphism,
}

pub fn min_presentation(m: &Representation) -> Presentation {
    let alg = m.algebra();
    let c0 = projective_cover(m);
    let (k, kincl) = kernel(&c0.map);
    let c1 = projective_cover(&k);
    let f0 = c1.map.then(&kincl);

    // offsets of each summand's basis inside the direct sums, per vertex
    let offsets = |vs: &[usize], w: usize| -> Vec<usize> {
        let mut acc = 0;
        vs.iter()
            .map(|&v| {
                let o = acc;
                acc += alg.basis_between(v, w).len();
                o
            })
            .collect()
    };
    let entries = c0
        .vertices
        .iter()
        .enumerate()
        .map(|(r, &i)| {
            c1.vertices
                .iter()
                .enumerate()
                .map(|(s, &j)| {
                    let src_off = offsets(&c1.vertices, j)[s];
                    let e_j = alg.trivial(j);
                    let pos = alg.basis_between(j, j).iter().position(|&b| b == e_j).unwrap();
                    let column = f0.block(j).column(src_off + pos);
                    let tgt_off = offsets(&c0.vertices, j)[r];
                    let mut x = vec![Fp::ZERO; alg.dim()];
                    for (k, &b) in alg.basis_between(i, j).iter().enumerate() {
                        x[b] = column[tgt_off + k];
                    }
                    x
                })
                .collect()
        })
        .collect();
    Presentation { p0: c0.vertices, p1: c1.vertices, entries, f0, cover: c0.map }
}

/// Minimal injective envelope `M ↪ ⊕ I_v`, dual to the cover of `D M`.
pub fn injective_envelope(m: &Representation) -> Morphism {
    let cover = projective_cover(&m.dual());
    let d = cover.map.dual();
    // D D M is M itself, matrix for matrix
    Morphism::from_parts(m, d.target(), d.blocks().to_vec())
}

/// `Ω⁻¹ M`, the cokernel of the injective envelope.
pub fn cosyzygy(m: &Representation) -> Representation {
    coker(&injective_envelope(m)).0
}

#[cfg(test)]
mod tests {
    use super::super::tests::{lambda, two_cycle};
    use super::super::{decompose, is_isomorphic, socle};
    use super::*;

    #[test]
    fn projectives_of_lambda() {
        let l = lambda();
        assert_eq!(projective(&l, 0).dims(), [1, 1, 0]);
        assert_eq!(projective(&l, 1).dims(), [0, 1, 1]);
        assert!(is_isomorphic(&projective(&l, 2), &simple(&l, 2)));
        let total: usize = (0..3).map(|v| projective(&l, v).dim()).sum();
        assert_eq!(total, l.dim());
    }

    #[test]
    fn projective_of_two_cycle_has_three_layers() {
        let g = two_cycle();
        let p2 = projective(&g, 1);
        assert_eq!(p2.dim(), 3);
        assert_eq!(super::super::loewy_layers(&p2), vec![vec![0, 1], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn injectives_of_lambda() {
        let l = lambda();
        assert_eq!(injective(&l, 0).dims(), [1, 0, 0]);
        assert_eq!(injective(&l, 1).dims(), [1, 1, 0]);
        assert_eq!(injective(&l, 2).dims(), [0, 1, 1]);
        assert_eq!(socle(&injective(&l, 1)).0.dims(), [0, 1, 0]);
    }

    #[test]
    fn covers() {
        let l = lambda();
        let c = projective_cover(&simple(&l, 1));
        assert_eq!(c.vertices, [1]);
        assert!(c.map.is_surjective());
        let c = projective_cover(&projective(&l, 0));
        assert!(c.map.is_iso());
        assert!(projective_cover(&Representation::zero(&l)).vertices.is_empty());
    }

    #[test]
    fn presentation_of_s2() {
        let l = lambda();
        let p = min_presentation(&simple(&l, 1));
        assert_eq!((p.p0.clone(), p.p1.clone()), (vec![1], vec![2]));
        let b = l.arrow_basis(1);
        assert!(p.entries[0][0].iter().enumerate().all(|(k, x)| x.is_zero() == (k != b)));
        let rebuilt = projective_map(&l, &p.p0, &p.p1, &p.entries);
        assert_eq!(rebuilt.blocks(), p.f0.blocks());
        assert!(min_presentation(&projective(&l, 0)).p1.is_empty());
    }

    #[test]
    fn presentation_in_the_two_cycle() {
        // U = S2 ⊕ e2Γ has presentation 0 → e1Γ → (e2Γ)² → U → 0
        let g = two_cycle();
        let u = direct_sum(&g, &[&simple(&g, 1), &projective(&g, 1)]);
        let p = min_presentation(&u);
        assert_eq!(p.p0, [1, 1]);
        assert_eq!(p.p1, [0]);
        let (k, _) = kernel(&p.f0);
        assert!(k.is_zero());
    }

    #[test]
    fn envelopes_and_cosyzygies() {
        let l = lambda();
        let env = injective_envelope(&simple(&l, 0));
        assert_eq!(env.target().dims(), [1, 0, 0]);
        assert!(env.is_injective());
        assert!(cosyzygy(&injective(&l, 1)).is_zero());
        assert!(is_isomorphic(&cosyzygy(&simple(&l, 2)), &simple(&l, 1)));
        let d = decompose(&env.target().clone()).unwrap();
        assert_eq!(d.len(), 1);
    }
}
