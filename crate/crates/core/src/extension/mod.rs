//! Split-by-nilpotent extensions `Γ → Λ` and the functors between their
//! module categories.
//!
//! `Λ` sits inside `Γ` as a subquiver with the same vertices; the
//! projection kills every arrow outside it, and its kernel `E` is spanned
//! by the basis paths of `Γ` that use such an arrow.

mod checks;
mod one_point;

pub use checks::{
    compare_hasse, lemma_313_314_check, prop315_check, prop34_data, prop37_check, theorem31_check, transfer_homs,
    Clause, HasseComparison, OnePointLemmas, Prop315Report, Prop37Report, Theorem31Report,
};
pub use one_point::{one_point_extension, OnePointExtension};

use crate::error::{Error, Result};
use crate::linalg::{rank, solve, Fp, Matrix};
use crate::presentation::{Algebra, Relation};
use crate::rep::{
    coker, direct_sum, hom_basis, min_presentation, projective, projective_map, Morphism, Representation,
};

#[derive(Clone, Debug)]
pub struct SplitExtension {
    name: String,
    base: Algebra,
    total: Algebra,
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
    // per basis element of the total algebra: does the path leave the base?
    in_e: Vec<bool>,
}

/// Validates `Λ ⊆ Γ` given by `vertex_map` and `arrow_map` (base index to
/// total index) as a split extension.
pub fn make_extension(
    name: &str,
    base: &Algebra,
    total: &Algebra,
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
) -> Result<SplitExtension> {
    let (bq, tq) = (base.quiver(), total.quiver());
    if vertex_map.len() != bq.vertex_count() || bq.vertex_count() != tq.vertex_count() {
        return Err(Error::BadEmbedding("base and total must have the same vertices".into()));
    }
    let mut hit = vec![false; tq.vertex_count()];
    for &v in &vertex_map {
        if v >= hit.len() || std::mem::replace(&mut hit[v], true) {
            return Err(Error::BadEmbedding("vertex map is not a bijection".into()));
        }
    }
    if arrow_map.len() != bq.arrows().len() {
        return Err(Error::BadEmbedding("every base arrow needs an image".into()));
    }
    let mut used = vec![false; tq.arrows().len()];
    for (a, &b) in bq.arrows().iter().zip(&arrow_map) {
        if b >= used.len() || std::mem::replace(&mut used[b], true) {
            return Err(Error::BadEmbedding("arrow map is not injective".into()));
        }
        let t = &tq.arrows()[b];
        if vertex_map[a.source] != t.source || vertex_map[a.target] != t.target {
            return Err(Error::BadEmbedding(format!("arrow {} does not match {}", a.name, t.name)));
        }
    }

    for r in base.relations() {
        let image =
            Relation { terms: r.terms.iter().map(|(c, p)| (*c, p.iter().map(|&a| arrow_map[a]).collect())).collect() };
        if total.relation_element(&image).iter().any(|x| !x.is_zero()) {
            return Err(Error::NotSplit(format!(
                "base relation {} is nonzero in {}",
                format_rel(base, r),
                total.name()
            )));
        }
    }
    let back: Vec<Option<usize>> = (0..tq.arrows().len()).map(|b| arrow_map.iter().position(|&x| x == b)).collect();
    for r in total.relations() {
        let terms: Vec<(Fp, Vec<usize>)> = r
            .terms
            .iter()
            .filter_map(|(c, p)| p.iter().map(|&b| back[b]).collect::<Option<Vec<_>>>().map(|q| (*c, q)))
            .collect();
        if terms.is_empty() {
            continue;
        }
        let x = base.relation_element(&Relation { terms });
        if x.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotSplit(format!(
                "relation {} of {} does not vanish after killing the new arrows",
                format_rel(total, r),
                total.name()
            )));
        }
    }

    let in_e: Vec<bool> = total.basis().iter().map(|p| p.arrows.iter().any(|&b| back[b].is_none())).collect();
    // the base paths of Γ must map isomorphically onto Λ
    let b0: Vec<usize> = (0..in_e.len()).filter(|&i| !in_e[i]).collect();
    if b0.len() != base.dim() {
        return Err(Error::NotSplit(format!(
            "dim {} = {} but dim {} + dim E = {}",
            total.name(),
            total.dim(),
            base.name(),
            base.dim() + in_e.iter().filter(|&&e| e).count()
        )));
    }
    let vinv = invert(&vertex_map);
    let cols: Vec<Vec<Fp>> = b0
        .iter()
        .map(|&i| {
            let p = &total.basis()[i];
            let arrows: Vec<usize> = p.arrows.iter().map(|&b| back[b].unwrap()).collect();
            base.path_element(vinv[p.source], &arrows)
        })
        .collect();
    if rank(&Matrix::from_columns(base.dim(), &cols)) != base.dim() {
        return Err(Error::NotSplit("base paths of the total algebra are dependent in the base".into()));
    }
    Ok(SplitExtension { name: name.to_string(), base: base.clone(), total: total.clone(), vertex_map, arrow_map, in_e })
}

fn format_rel(alg: &Algebra, r: &Relation) -> String {
    alg.format_element(&alg.relation_element(r)).replace(' ', "")
}

fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (i, &j) in map.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

impl SplitExtension {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn total(&self) -> &Algebra {
        &self.total
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    /// Basis elements of `Γ` spanning `E`.
    pub fn e_basis(&self) -> Vec<usize> {
        (0..self.in_e.len()).filter(|&i| self.in_e[i]).collect()
    }

    pub fn e_dim(&self) -> usize {
        self.in_e.iter().filter(|&&e| e).count()
    }

    /// `ι: Λ → Γ` on elements.
    pub fn iota(&self, x: &[Fp]) -> Vec<Fp> {
        let mut out = vec![Fp::ZERO; self.total.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.base.basis()[i];
            let arrows: Vec<usize> = p.arrows.iter().map(|&a| self.arrow_map[a]).collect();
            for (o, y) in out.iter_mut().zip(self.total.path_element(self.vertex_map[p.source], &arrows)) {
                *o += c * y;
            }
        }
        out
    }

    /// `M ⊗_Λ Γ`, the cokernel of the presentation of `M` carried into `Γ`.
    pub fn induce(&self, m: &Representation) -> Representation {
        let pres = min_presentation(m);
        let entries: Vec<Vec<Vec<Fp>>> =
            pres.entries.iter().map(|row| row.iter().map(|x| self.iota(x)).collect()).collect();
        let map = |vs: &[usize]| vs.iter().map(|&v| self.vertex_map[v]).collect::<Vec<_>>();
        let f = projective_map(&self.total, &map(&pres.p0), &map(&pres.p1), &entries);
        coker(&f).0
    }

    /// Restriction of scalars along `ι`.
    pub fn forget(&self, n: &Representation) -> Representation {
        n.pull_back(&self.base, &self.vertex_map, &self.arrow_map)
    }

    fn forget_morphism(&self, f: &Morphism) -> Morphism {
        let blocks = self.vertex_map.iter().map(|&v| f.block(v).clone()).collect();
        Morphism::from_parts(&self.forget(f.source()), &self.forget(f.target()), blocks)
    }

    /// `N ⊗_Γ Λ = N / NE`, as a `Λ`-module.
    pub fn restrict(&self, n: &Representation) -> Representation {
        let tq = self.total.quiver();
        let basis = (0..tq.vertex_count())
            .map(|w| {
                let parts: Vec<Matrix> = self
                    .e_basis()
                    .into_iter()
                    .filter(|&i| self.total.basis()[i].target == w)
                    .map(|i| n.path_action(&self.total.basis()[i]))
                    .collect();
                crate::linalg::column_space(&Matrix::hstack(&parts.iter().collect::<Vec<_>>(), n.dims()[w]))
            })
            .collect();
        let (_, incl) = n.submodule(basis);
        self.forget(&coker(&incl).0)
    }

    /// The right `Λ`-module `e_v X`, where `X ⊆ Γ` is spanned by the basis
    /// paths passing `keep` and is closed under right multiplication by `Λ`.
    fn path_module(&self, v: usize, keep: &dyn Fn(usize) -> bool) -> Representation {
        let tv = self.vertex_map[v];
        let at = |w: usize| -> Vec<usize> {
            self.total.basis_between(tv, self.vertex_map[w]).iter().copied().filter(|&i| keep(i)).collect()
        };
        let bq = self.base.quiver();
        let dims = (0..bq.vertex_count()).map(|w| at(w).len()).collect();
        let maps = bq
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (from, to) = (at(a.source), at(a.target));
                let ab = self.total.arrow_basis(self.arrow_map[k]);
                let mut m = Matrix::zeros(to.len(), from.len());
                for (c, &p) in from.iter().enumerate() {
                    for &(b, x) in self.total.product(p, ab) {
                        let r = to.iter().position(|&t| t == b).expect("subspace closed under Λ");
                        m[(r, c)] += x;
                    }
                }
                m
            })
            .collect();
        Representation::from_parts(&self.base, dims, maps)
    }

    /// `M ⊗_Λ X` from the presentation of `M`: the cokernel of
    /// `⊕ e_{p₁}X → ⊕ e_{p₀}X`, left multiplication by the entries.
    fn transport(&self, m: &Representation, keep: &dyn Fn(usize) -> bool) -> Representation {
        let pres = min_presentation(m);
        let src: Vec<Representation> = pres.p1.iter().map(|&v| self.path_module(v, keep)).collect();
        let tgt: Vec<Representation> = pres.p0.iter().map(|&v| self.path_module(v, keep)).collect();
        let source = direct_sum(&self.base, &src.iter().collect::<Vec<_>>());
        let target = direct_sum(&self.base, &tgt.iter().collect::<Vec<_>>());
        let total = &self.total;
        let blocks = (0..self.base.vertex_count())
            .map(|w| {
                let tw = self.vertex_map[w];
                let mut f = Matrix::zeros(target.dims()[w], source.dims()[w]);
                let mut col = 0;
                for (s, &j) in pres.p1.iter().enumerate() {
                    for &q in total.basis_between(self.vertex_map[j], tw).iter().filter(|&&i| keep(i)) {
                        let unit = total.unit_element(q);
                        let mut row = 0;
                        for (r, &i) in pres.p0.iter().enumerate() {
                            let y = total.mul(&self.iota(&pres.entries[r][s]), &unit);
                            let rows: Vec<usize> = total
                                .basis_between(self.vertex_map[i], tw)
                                .iter()
                                .copied()
                                .filter(|&b| keep(b))
                                .collect();
                            for (k, &b) in rows.iter().enumerate() {
                                f[(row + k, col)] = y[b];
                            }
                            row += rows.len();
                        }
                        col += 1;
                    }
                }
                f
            })
            .collect();
        coker(&Morphism::from_parts(&source, &target, blocks)).0
    }

    /// `E` as a right `Λ`-module.
    pub fn e_module(&self) -> Representation {
        let parts: Vec<Representation> =
            (0..self.base.vertex_count()).map(|v| self.path_module(v, &|i| self.in_e[i])).collect();
        direct_sum(&self.base, &parts.iter().collect::<Vec<_>>())
    }

    /// `M ⊗_Λ E`.
    pub fn tensor_e(&self, m: &Representation) -> Representation {
        self.transport(m, &|i| self.in_e[i])
    }

    /// `Hom_Λ(Γ, M)` with `(f·γ)(x) = f(γx)`; at vertex `w` this is
    /// `Hom_Λ(e_wΓ, M)`.
    pub fn coinduce(&self, m: &Representation) -> Representation {
        let total = &self.total;
        let tq = total.quiver();
        let homs: Vec<Vec<Morphism>> =
            (0..tq.vertex_count()).map(|w| hom_basis(&self.forget(&projective(total, w)), m)).collect();
        let maps = tq
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (w, u) = (a.source, a.target);
                let gamma = total.unit_element(total.arrow_basis(k));
                let left = self.forget_morphism(&projective_map(total, &[w], &[u], &[vec![gamma]]));
                let target: Vec<Vec<Fp>> = homs[u].iter().map(Morphism::flatten).collect();
                let len = target.first().map_or(0, Vec::len);
                let basis = Matrix::from_columns(len, &target);
                let images: Vec<Vec<Fp>> = homs[w].iter().map(|f| left.then(f).flatten()).collect();
                if homs[u].is_empty() {
                    return Matrix::zeros(0, homs[w].len());
                }
                solve(&basis, &Matrix::from_columns(len, &images)).expect("f∘L_γ lies in Hom(e_uΓ, M)")
            })
            .collect();
        let dims = homs.iter().map(Vec::len).collect();
        Representation::from_parts(total, dims, maps)
    }
}
