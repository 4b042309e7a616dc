//! Bound quiver algebras `kQ/I` with an explicit path basis.
//!
//! Paths compose left to right: `a*b` means "first `a`, then `b`", so a path
//! `a₁…aₙ` needs `target(aₖ) = source(aₖ₊₁)`. Right modules are then
//! representations in which an arrow `a: i → j` acts `Mᵢ → Mⱼ`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{inverse, Echelon, Fp, Matrix};

/// Cap on the number of paths enumerated while closing the ideal.
pub const PATH_LIMIT: usize = 200_000;

pub const DEFAULT_MAX_LEN: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Quiver {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> usize {
        assert!(self.vertex(name).is_none(), "duplicate vertex {name}");
        self.vertices.push(name.to_string());
        self.vertices.len() - 1
    }

    pub fn add_arrow(&mut self, name: &str, source: usize, target: usize) -> usize {
        assert!(self.arrow(name).is_none(), "duplicate arrow {name}");
        assert!(source < self.vertices.len() && target < self.vertices.len());
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        self.arrows.len() - 1
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// Same vertices, every arrow reversed. Arrow indices are kept.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A path, possibly trivial (`arrows` empty, `source == target`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    #[allow(clippy::len_without_is_empty)] // `is_trivial` plays that role
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_trivial() {
            format!("e{}", quiver.vertex_name(self.source))
        } else {
            self.arrows.iter().map(|&a| quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Fp, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(path: Vec<usize>) -> Relation {
        Relation { terms: vec![(Fp::ONE, path)] }
    }

    fn validate(&self, quiver: &Quiver) -> Result<(usize, usize)> {
        let mut ends = None;
        if self.terms.is_empty() {
            return Err(Error::InvalidRelation("empty relation".into()));
        }
        for (_, path) in &self.terms {
            if path.len() < 2 {
                return Err(Error::InvalidRelation("relation paths must have length at least 2".into()));
            }
            if path.iter().any(|&a| a >= quiver.arrows.len()) {
                return Err(Error::InvalidRelation("unknown arrow index".into()));
            }
            for w in path.windows(2) {
                if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                    return Err(Error::InvalidRelation(format!(
                        "arrows {} and {} do not compose",
                        quiver.arrows[w[0]].name, quiver.arrows[w[1]].name
                    )));
                }
            }
            let st = (quiver.arrows[path[0]].source, quiver.arrows[*path.last().unwrap()].target);
            match ends {
                None => ends = Some(st),
                Some(e) if e != st => return Err(Error::InvalidRelation("relation terms are not parallel".into())),
                _ => {}
            }
        }
        Ok(ends.unwrap())
    }

    fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (*c, p.iter().rev().copied().collect())).collect() }
    }
}

/// The quotient `kQ/I` with a chosen path basis and structure constants.
#[derive(Debug)]
pub struct AlgebraPresentation {
    name: String,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    // sparse products of basis elements, indexed `i * dim + j`
    products: Vec<Vec<(usize, Fp)>>,
    trivial: Vec<usize>,
    arrow_basis: Vec<usize>,
    // basis indices of paths from v to w, indexed `v * n + w`
    between: Vec<Vec<usize>>,
    loewy_length: usize,
}

impl AlgebraPresentation {
    /// Closes the ideal degree by degree and picks a basis of the quotient.
    ///
    /// Works in `kQ/R^N` for growing `N` and stops at the first `N` where
    /// every path of length `N − 1` lies in the image of the ideal; for an
    /// admissible ideal the truncated quotient is then the algebra itself.
    /// Basis paths are chosen greedily, shortest first, in enumeration order.
    pub fn build(name: &str, quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<AlgebraPresentation> {
        assert!(max_len >= 1, "max_len must be positive");
        let min_lens: Vec<usize> = relations
            .iter()
            .map(|r| {
                r.validate(&quiver)?;
                Ok(r.terms.iter().map(|(_, p)| p.len()).min().unwrap())
            })
            .collect::<Result<_>>()?;

        let mut layers: Vec<Vec<Path>> = vec![(0..quiver.vertex_count()).map(Path::trivial).collect()];
        let mut total = layers[0].len();
        for n in 2..=max_len + 2 {
            // paths of length < n
            while layers.len() < n {
                let next = extend_paths(&quiver, layers.last().unwrap());
                total += next.len();
                if total > PATH_LIMIT {
                    return Err(Error::PathSpaceTooLarge { algebra: name.to_string(), limit: PATH_LIMIT });
                }
                layers.push(next);
            }
            let all: Vec<&Path> = layers.iter().flatten().collect();
            let index: HashMap<(usize, &[usize]), usize> =
                all.iter().enumerate().map(|(i, p)| ((p.source, p.arrows.as_slice()), i)).collect();
            let width = all.len();

            let mut ideal = Echelon::new(width);
            for (rel, &m) in relations.iter().zip(&min_lens) {
                let (s, t) = rel.validate(&quiver)?;
                for left in layers.iter().take(n.saturating_sub(m)).flatten().filter(|p| p.target == s) {
                    for right in layers.iter().take(n - m - left.len()).flatten().filter(|p| p.source == t) {
                        let mut v = vec![Fp::ZERO; width];
                        for (c, path) in &rel.terms {
                            let len = left.len() + path.len() + right.len();
                            if len >= n {
                                continue;
                            }
                            let mut full = left.arrows.clone();
                            full.extend_from_slice(path);
                            full.extend_from_slice(&right.arrows);
                            v[index[&(left.source, full.as_slice())]] += *c;
                        }
                        ideal.insert(&v);
                    }
                }
            }

            let top = &layers[n - 1];
            let closed = top.iter().all(|p| {
                let mut v = vec![Fp::ZERO; width];
                v[index[&(p.source, p.arrows.as_slice())]] = Fp::ONE;
                ideal.contains(&v)
            });
            if !closed {
                continue;
            }

            let ideal_dim = ideal.dim();
            let mut span = ideal.clone();
            let mut chosen = Vec::new();
            for (i, _) in all.iter().enumerate() {
                let mut v = vec![Fp::ZERO; width];
                v[i] = Fp::ONE;
                if span.insert(&v) {
                    chosen.push(i);
                }
            }
            debug_assert_eq!(span.dim(), width);

            // rows: the ideal's echelon basis, then the chosen unit vectors
            let mut rows: Vec<Vec<Fp>> = ideal_rows(&ideal);
            for &i in &chosen {
                let mut v = vec![Fp::ZERO; width];
                v[i] = Fp::ONE;
                rows.push(v);
            }
            let c = Matrix::from_row_vectors(width, &rows);
            let cinv = inverse(&c).expect("complement rows span the path space");
            let normal_form = |path_index: usize| -> Vec<(usize, Fp)> {
                (0..chosen.len())
                    .filter_map(|k| {
                        let x = cinv[(path_index, ideal_dim + k)];
                        (!x.is_zero()).then_some((k, x))
                    })
                    .collect()
            };

            let basis: Vec<Path> = chosen.iter().map(|&i| all[i].clone()).collect();
            let dim = basis.len();
            let mut products = vec![Vec::new(); dim * dim];
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate() {
                    if a.target != b.source || a.len() + b.len() >= n {
                        continue;
                    }
                    let mut full = a.arrows.clone();
                    full.extend_from_slice(&b.arrows);
                    products[i * dim + j] = normal_form(index[&(a.source, full.as_slice())]);
                }
            }
            let nv = quiver.vertex_count();
            let trivial =
                (0..nv).map(|v| basis.iter().position(|p| p.is_trivial() && p.source == v).unwrap()).collect();
            let arrow_basis =
                (0..quiver.arrows.len()).map(|a| basis.iter().position(|p| p.arrows == [a]).unwrap()).collect();
            let mut between = vec![Vec::new(); nv * nv];
            for (i, p) in basis.iter().enumerate() {
                between[p.source * nv + p.target].push(i);
            }
            let loewy_length = basis.iter().map(|p| p.len() + 1).max().unwrap_or(0);
            return Ok(AlgebraPresentation {
                name: name.to_string(),
                quiver,
                relations,
                basis,
                products,
                trivial,
                arrow_basis,
                between,
                loewy_length,
            });
        }
        Err(Error::NotAdmissible { algebra: name.to_string(), length: max_len })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of vertices, i.e. of indecomposable projectives.
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    /// Basis index of the trivial path `e_v`.
    pub fn trivial(&self, v: usize) -> usize {
        self.trivial[v]
    }

    /// Basis index of the arrow `a`.
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    /// Basis indices of the paths from `v` to `w`, i.e. a basis of `e_v Λ e_w`.
    pub fn basis_between(&self, v: usize, w: usize) -> &[usize] {
        &self.between[v * self.vertex_count() + w]
    }

    /// Structure constants of `bᵢ · bⱼ`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Fp)] {
        &self.products[i * self.dim() + j]
    }

    pub fn unit_element(&self, i: usize) -> Vec<Fp> {
        let mut v = vec![Fp::ZERO; self.dim()];
        v[i] = Fp::ONE;
        v
    }

    pub fn mul(&self, x: &[Fp], y: &[Fp]) -> Vec<Fp> {
        let mut out = vec![Fp::ZERO; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for &(k, c) in self.product(i, j) {
                    out[k] += a * b * c;
                }
            }
        }
        out
    }

    /// The element represented by a path, reduced to the basis.
    pub fn path_element(&self, source: usize, arrows: &[usize]) -> Vec<Fp> {
        let mut x = self.unit_element(self.trivial(source));
        for &a in arrows {
            let y = self.unit_element(self.arrow_basis(a));
            x = self.mul(&x, &y);
        }
        x
    }

    /// Evaluates a relation as an algebra element (zero by construction).
    pub fn relation_element(&self, rel: &Relation) -> Vec<Fp> {
        let mut out = vec![Fp::ZERO; self.dim()];
        for (c, path) in &rel.terms {
            let s = self.quiver.arrows[path[0]].source;
            for (o, x) in out.iter_mut().zip(self.path_element(s, path)) {
                *o += *c * x;
            }
        }
        out
    }

    /// Human-readable form of an element, e.g. `2 a*b + c`.
    pub fn format_element(&self, x: &[Fp]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let path = self.basis[i].display(&self.quiver);
                if *c == Fp::ONE {
                    path
                } else {
                    format!("{} {}", c.signed(), path)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn extend_paths(quiver: &Quiver, layer: &[Path]) -> Vec<Path> {
    let mut out = Vec::new();
    for p in layer {
        for (ai, a) in quiver.arrows.iter().enumerate() {
            if a.source == p.target {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                out.push(Path { source: p.source, target: a.target, arrows });
            }
        }
    }
    out
}

fn ideal_rows(e: &Echelon) -> Vec<Vec<Fp>> {
    // Echelon keeps its rows private; rebuild them through reduction of unit
    // vectors on the pivot positions.
    let w = e.width();
    e.pivots()
        .map(|p| {
            let mut v = vec![Fp::ZERO; w];
            v[p] = Fp::ONE;
            let mut r = v.clone();
            e.reduce(&mut r);
            // v - reduce(v) is the stored row with pivot p
            v.iter().zip(&r).map(|(&a, &b)| a - b).collect()
        })
        .collect()
}

/// Shared handle on an algebra and its opposite.
///
/// Modules keep one of these; `opposite()` swaps the two sides, so taking
/// the opposite twice gives back the same handle.
#[derive(Clone)]
pub struct Algebra {
    this: Arc<AlgebraPresentation>,
    op: Arc<AlgebraPresentation>,
}

impl Algebra {
    pub fn build(name: &str, quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Algebra> {
        let op_rel = relations.iter().map(Relation::reversed).collect();
        let op_quiver = quiver.opposite();
        let this = AlgebraPresentation::build(name, quiver, relations, max_len)?;
        let op = AlgebraPresentation::build(&format!("{name}^op"), op_quiver, op_rel, max_len)?;
        debug_assert_eq!(this.dim(), op.dim());
        Ok(Algebra { this: Arc::new(this), op: Arc::new(op) })
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { this: self.op.clone(), op: self.this.clone() }
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.this
    }

    /// Identity of the underlying presentation, not structural equality.
    pub fn same(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.this, &other.this)
    }

    /// Transports an element `x ∈ Λ` to `x^op ∈ Λ^op` by reversing paths.
    pub fn element_to_opposite(&self, x: &[Fp]) -> Vec<Fp> {
        let op = &self.op;
        let mut out = vec![Fp::ZERO; op.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.this.basis[i];
            let rev: Vec<usize> = p.arrows.iter().rev().copied().collect();
            for (o, y) in out.iter_mut().zip(op.path_element(p.target, &rev)) {
                *o += c * y;
            }
        }
        out
    }
}

impl Deref for Algebra {
    type Target = AlgebraPresentation;

    fn deref(&self) -> &AlgebraPresentation {
        &self.this
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.same(other)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name(), self.dim())
    }
}
