//! The Auslander–Reiten translate `τ = D Tr` and its inverse `τ⁻¹ = Tr D`.

use crate::error::Result;
use crate::rep::{coker, decompose, direct_sum, hom_dim, min_presentation, projective_map, Representation};

/// A left module over `Λ`, stored as a right module over `Λ^op`.
#[derive(Clone, Debug)]
pub struct LeftModuleView(Representation);

impl LeftModuleView {
    pub fn new(over_opposite: Representation) -> LeftModuleView {
        LeftModuleView(over_opposite)
    }

    pub fn as_opposite(&self) -> &Representation {
        &self.0
    }

    pub fn into_opposite(self) -> Representation {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// `D` of a left module is a right module over the original algebra.
    pub fn dual(&self) -> Representation {
        self.0.dual()
    }
}

pub fn dual(m: &Representation) -> LeftModuleView {
    LeftModuleView(m.dual())
}

/// `Tr M = coker(f₀*)` for a minimal presentation `f₀: P₁ → P₀`.
///
/// `(e_iΛ)* = Λe_i`, which over `Λ^op` is `e_iΛ^op`; the entry `x` of `f₀`
/// becomes `x^op` in the transposed position.
pub fn transpose(m: &Representation) -> LeftModuleView {
    let alg = m.algebra();
    let op = alg.opposite();
    let pres = min_presentation(m);
    let entries: Vec<Vec<_>> = (0..pres.p1.len())
        .map(|s| (0..pres.p0.len()).map(|r| alg.element_to_opposite(&pres.entries[r][s])).collect())
        .collect();
    let star = projective_map(&op, &pres.p1, &pres.p0, &entries);
    LeftModuleView(coker(&star).0)
}

fn summandwise(m: &Representation, f: impl Fn(&Representation) -> Representation) -> Result<Representation> {
    let d = decompose(m)?;
    let parts: Vec<Representation> = d.pieces().iter().map(|p| f(&p.module)).collect();
    Ok(direct_sum(m.algebra(), &parts.iter().collect::<Vec<_>>()))
}

pub fn tau(m: &Representation) -> Result<Representation> {
    summandwise(m, |x| transpose(x).dual())
}

pub fn tau_inverse(m: &Representation) -> Result<Representation> {
    summandwise(m, |x| transpose(&x.dual()).into_opposite())
}

pub fn is_tau_rigid(m: &Representation) -> Result<bool> {
    Ok(hom_dim(m, &tau(m)?) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank, Matrix};
    use crate::presentation::Algebra;
    use crate::rep::tests::lambda;
    use crate::rep::{cosyzygy, injective, is_isomorphic, projective, simple};

    fn indecomposables(l: &Algebra) -> Vec<Representation> {
        vec![projective(l, 0), projective(l, 1), simple(l, 0), simple(l, 1), simple(l, 2)]
    }

    #[test]
    fn duality() {
        let l = lambda();
        let p1 = projective(&l, 0);
        let d = dual(&p1);
        assert_eq!(d.as_opposite().dims(), &[1, 1, 0]);
        assert_eq!(d.dual(), p1);
        assert!(is_isomorphic(&dual(&simple(&l, 1)).into_opposite(), &simple(&l.opposite(), 1)));
    }

    #[test]
    fn transpose_of_projectives_and_s2() {
        let l = lambda();
        for v in 0..3 {
            assert!(transpose(&projective(&l, v)).as_opposite().is_zero());
        }
        let tr = transpose(&simple(&l, 1));
        assert!(is_isomorphic(tr.as_opposite(), &simple(&l.opposite(), 2)));
    }

    #[test]
    fn translates_over_lambda() {
        let l = lambda();
        let s = |v| simple(&l, v);
        assert!(is_isomorphic(&tau(&s(0)).unwrap(), &s(1)));
        assert!(is_isomorphic(&tau(&s(1)).unwrap(), &s(2)));
        assert!(is_isomorphic(&tau_inverse(&s(1)).unwrap(), &s(0)));
        assert!(is_isomorphic(&tau_inverse(&tau(&s(1)).unwrap()).unwrap(), &s(1)));
        // τ⁻¹Ω⁻¹ 3 = τ⁻¹ 2 = 1
        assert!(is_isomorphic(&tau_inverse(&cosyzygy(&s(2))).unwrap(), &s(0)));
        for v in 0..3 {
            assert!(tau_inverse(&injective(&l, v)).unwrap().is_zero());
        }
        let all: Vec<Representation> = (0..3).map(|v| projective(&l, v)).collect();
        assert!(tau(&direct_sum(&l, &all.iter().collect::<Vec<_>>())).unwrap().is_zero());
    }

    #[test]
    fn rigidity() {
        let l = lambda();
        let t1 = direct_sum(&l, &[&projective(&l, 0), &projective(&l, 1), &simple(&l, 2)]);
        assert!(is_tau_rigid(&t1).unwrap());
        assert!(is_tau_rigid(&direct_sum(&l, &[&simple(&l, 1), &projective(&l, 1)])).unwrap());
        assert!(!is_tau_rigid(&direct_sum(&l, &[&simple(&l, 1), &simple(&l, 2), &simple(&l, 0)])).unwrap());
    }

    #[test]
    fn projective_summands_do_not_matter() {
        let l = lambda();
        for x in indecomposables(&l) {
            let with = direct_sum(&l, &[&x, &projective(&l, 0), &projective(&l, 2)]);
            assert!(is_isomorphic(&tau(&with).unwrap(), &tau(&x).unwrap()));
        }
    }

    /// `Hom(f₀, Y): Hom(P₀, Y) → Hom(P₁, Y)` as a matrix, by Yoneda.
    fn hom_f0(x: &Representation, y: &Representation) -> Matrix {
        let pres = min_presentation(x);
        let rows: Vec<usize> = pres.p1.iter().map(|&j| y.dims()[j]).collect();
        let cols: Vec<usize> = pres.p0.iter().map(|&i| y.dims()[i]).collect();
        let mut m = Matrix::zeros(rows.iter().sum(), cols.iter().sum());
        let mut r0 = 0;
        for (s, &j) in pres.p1.iter().enumerate() {
            let mut c0 = 0;
            for (r, &i) in pres.p0.iter().enumerate() {
                m.set_block(r0, c0, &y.element_action(&pres.entries[r][s], i, j));
                c0 += cols[r];
            }
            r0 += rows[s];
        }
        m
    }

    #[test]
    fn vanishing_iff_hom_f0_onto() {
        let l = lambda();
        for x in indecomposables(&l) {
            let tx = tau(&x).unwrap();
            for y in indecomposables(&l) {
                let m = hom_f0(&x, &y);
                let onto = rank(&m) == m.rows();
                assert_eq!(hom_dim(&y, &tx) == 0, onto, "X={x:?} Y={y:?}");
            }
        }
    }

    #[test]
    fn hom_into_tau_does_not_depend_on_seed() {
        let l = lambda();
        let m = direct_sum(&l, &[&simple(&l, 0), &simple(&l, 1), &projective(&l, 1)]);
        crate::rep::set_seed(7);
        let a = hom_dim(&m, &tau(&m).unwrap());
        crate::rep::set_seed(1);
        let b = hom_dim(&m, &tau(&m).unwrap());
        assert_eq!(a, b);
    }
}
