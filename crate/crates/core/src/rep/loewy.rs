//! Radical series and the Loewy notation used for printing modules.
//!
//! An indecomposable prints as its radical layers from the top down, e.g.
//! `1/2` for a module with top `S₁` and radical `S₂`; several factors in one
//! layer are separated by commas. Sums print as `1/2 ⊕ 3`, zero as `0`.

use std::cmp::Reverse;

use super::{decompose, is_isomorphic, radical, Representation};
use crate::error::Result;

/// Dimension vectors of `rad^k M / rad^{k+1} M`, from the top down.
pub fn loewy_layers(m: &Representation) -> Vec<Vec<usize>> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (r, _) = radical(&cur);
        layers.push(cur.dims().iter().zip(r.dims()).map(|(a, b)| a - b).collect());
        cur = r;
    }
    layers
}

/// Canonical order on indecomposables: larger modules first, then by the
/// vertices of the radical layers.
pub fn sort_key(m: &Representation) -> (Reverse<usize>, Vec<Vec<usize>>, Vec<usize>) {
    let layers = loewy_layers(m)
        .into_iter()
        .map(|d| d.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(v, k)).collect())
        .collect();
    (Reverse(m.dim()), layers, m.dims().to_vec())
}

fn indecomposable_label(m: &Representation) -> String {
    let q = m.algebra().quiver();
    loewy_layers(m)
        .iter()
        .map(|d| {
            d.iter()
                .enumerate()
                .flat_map(|(v, &k)| std::iter::repeat_n(q.vertex_name(v), k))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Labels of the indecomposable summands in canonical order, repeated
/// according to multiplicity.
pub fn summand_labels(m: &Representation) -> Result<Vec<String>> {
    let d = decompose(m)?;
    Ok(d.pieces().iter().map(|p| indecomposable_label(&p.module)).collect())
}

pub fn loewy_label(m: &Representation) -> Result<String> {
    let labels = summand_labels(m)?;
    Ok(if labels.is_empty() { "0".to_string() } else { labels.join(" ⊕ ") })
}

/// Hands out labels for indecomposables, suffixing `#k` when two
/// non-isomorphic modules share a radical series.
#[derive(Default)]
pub struct LabelRegistry {
    seen: Vec<(String, Vec<Representation>)>,
}

impl LabelRegistry {
    pub fn new() -> LabelRegistry {
        LabelRegistry::default()
    }

    pub fn label(&mut self, m: &Representation) -> String {
        let base = indecomposable_label(m);
        let entry = match self.seen.iter().position(|(l, _)| *l == base) {
            Some(i) => &mut self.seen[i].1,
            None => {
                self.seen.push((base.clone(), Vec::new()));
                &mut self.seen.last_mut().unwrap().1
            }
        };
        let k = match entry.iter().position(|r| is_isomorphic(r, m)) {
            Some(k) => k,
            None => {
                entry.push(m.clone());
                entry.len() - 1
            }
        };
        if k == 0 {
            base
        } else {
            format!("{base}#{k}")
        }
    }

    /// Label of an arbitrary module, summand by summand.
    pub fn label_module(&mut self, m: &Representation) -> Result<String> {
        let d = decompose(m)?;
        if d.is_empty() {
            return Ok("0".into());
        }
        Ok(d.pieces().iter().map(|p| self.label(&p.module)).collect::<Vec<_>>().join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::lambda;
    use super::super::{direct_sum, injective, projective, simple};
    use super::*;
    use crate::linalg::Matrix;
    use crate::presentation::{Algebra, Quiver};

    #[test]
    fn labels_of_lambda_modules() {
        let l = lambda();
        assert_eq!(loewy_label(&projective(&l, 0)).unwrap(), "1/2");
        assert_eq!(loewy_label(&projective(&l, 2)).unwrap(), "3");
        assert_eq!(loewy_label(&Representation::zero(&l)).unwrap(), "0");
        let t1 = direct_sum(&l, &[&simple(&l, 2), &projective(&l, 1), &projective(&l, 0)]);
        assert_eq!(loewy_label(&t1).unwrap(), "1/2 ⊕ 2/3 ⊕ 3");
        assert_eq!(loewy_label(&injective(&l, 1)).unwrap(), "1/2");
    }

    #[test]
    fn layers_with_several_factors() {
        // Kronecker-like: 1 -> 2 twice, projective at 1 has radical 2,2
        let mut q = Quiver::new();
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_arrow("x", 0, 1);
        q.add_arrow("y", 0, 1);
        let k = Algebra::build("K2", q, vec![], 5).unwrap();
        assert_eq!(loewy_label(&projective(&k, 0)).unwrap(), "1/2,2");
    }

    #[test]
    fn registry_disambiguates() {
        // two non-isomorphic 1/2 modules over the Kronecker quiver
        let mut q = Quiver::new();
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_arrow("x", 0, 1);
        q.add_arrow("y", 0, 1);
        let k = Algebra::build("K2", q, vec![], 5).unwrap();
        let one = Matrix::identity(1);
        let zero = Matrix::zeros(1, 1);
        let a = Representation::new(&k, vec![1, 1], vec![one.clone(), zero.clone()]).unwrap();
        let b = Representation::new(&k, vec![1, 1], vec![zero, one]).unwrap();
        let mut reg = LabelRegistry::new();
        assert_eq!(reg.label(&a), "1/2");
        assert_eq!(reg.label(&b), "1/2#1");
        assert_eq!(reg.label(&a), "1/2");
    }
}
