//! One-point extensions `Λ[M]`, as split extensions of `Λ × k`.

use super::{make_extension, SplitExtension};
use crate::error::{Error, Result};
use crate::presentation::{Algebra, Quiver, Relation};
use crate::rep::{min_presentation, simple, Representation};

/// `Γ = Λ[M]` over `Δ = Λ × k`. The extension point is vertex 0 of both
/// `Δ` and `Γ`; vertex `v` of `Λ` is vertex `v + 1`.
#[derive(Clone, Debug)]
pub struct OnePointExtension {
    pub ext: SplitExtension,
    pub lambda: Algebra,
    pub module: Representation,
    pub point: usize,
}

impl OnePointExtension {
    /// A `Λ`-module viewed over `Δ`, zero at the point.
    pub fn lift(&self, m: &Representation) -> Representation {
        let delta = self.ext.base();
        let mut dims = vec![0];
        dims.extend_from_slice(m.dims());
        Representation::new(delta, dims, m.maps().to_vec()).expect("Λ-module over Λ × k")
    }

    /// A `Δ`-module supported away from the point, viewed over `Λ`.
    pub fn lower(&self, m: &Representation) -> Representation {
        assert_eq!(m.dims()[self.point], 0, "module meets the extension point");
        Representation::new(&self.lambda, m.dims()[1..].to_vec(), m.maps().to_vec())
            .expect("Δ-module away from the point")
    }

    /// The simple `Δ`-module at the extension point.
    pub fn point_simple(&self) -> Representation {
        simple(self.ext.base(), self.point)
    }
}

fn fresh(q: &Quiver, base: &str, k: usize, many: bool) -> String {
    let mut name = if many { format!("{base}{}", k + 1) } else { base.to_string() };
    while q.arrow(&name).is_some() || q.vertex(&name).is_some() {
        name.push('\'');
    }
    name
}

/// Adds a vertex `point` with one arrow to each generator of `M` and one
/// relation per relation of `M`, read off a minimal presentation.
pub fn one_point_extension(
    lambda: &Algebra,
    m: &Representation,
    point: &str,
    max_len: usize,
) -> Result<OnePointExtension> {
    let lq = lambda.quiver();
    if lq.vertex(point).is_some() {
        return Err(Error::BadEmbedding(format!("vertex `{point}` already exists")));
    }
    let mut q = Quiver::new();
    q.add_vertex(point);
    for v in lq.vertices() {
        q.add_vertex(v);
    }
    for a in lq.arrows() {
        q.add_arrow(&a.name, a.source + 1, a.target + 1);
    }
    let relations: Vec<Relation> = lambda.relations().to_vec();
    let delta = Algebra::build(&format!("{}_k", lambda.name()), q.clone(), relations.clone(), max_len)?;

    let pres = min_presentation(m);
    let mut new_arrows = Vec::new();
    for (r, &i) in pres.p0.iter().enumerate() {
        let name = fresh(&q, "alpha", r, pres.p0.len() > 1);
        new_arrows.push(q.add_arrow(&name, 0, i + 1));
    }
    let mut all = relations;
    for s in 0..pres.p1.len() {
        let mut terms = Vec::new();
        for (r, &alpha) in new_arrows.iter().enumerate() {
            for (b, &c) in pres.entries[r][s].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut path = vec![alpha];
                path.extend_from_slice(&lambda.basis()[b].arrows);
                terms.push((c, path));
            }
        }
        if !terms.is_empty() {
            all.push(Relation { terms });
        }
    }
    let gamma = Algebra::build(&format!("{}_{}", lambda.name(), point), q, all, max_len)?;
    let n = delta.vertex_count();
    let arrows = lq.arrows().len();
    let ext = make_extension(
        &format!("{}[{point}]", lambda.name()),
        &delta,
        &gamma,
        (0..n).collect(),
        (0..arrows).collect(),
    )?;
    let module = m.clone();
    Ok(OnePointExtension { ext, lambda: lambda.clone(), module, point: 0 })
}
