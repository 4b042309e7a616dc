//! Quivers with relations and the finite-dimensional algebras they present.

mod algebra;
pub mod parser;

pub use algebra::{Algebra, AlgebraPresentation, Arrow, Path, Quiver, Relation, DEFAULT_MAX_LEN, PATH_LIMIT};

use crate::error::Result;
use crate::linalg::Fp;
use parser::AlgebraDecl;

/// Builds an algebra from a parsed declaration. The declaration is assumed
/// to have passed the parser's semantic checks.
pub fn build_algebra(decl: &AlgebraDecl, max_len: usize) -> Result<Algebra> {
    let mut q = Quiver::new();
    for v in &decl.vertices {
        q.add_vertex(&v.text);
    }
    for a in &decl.arrows {
        let s = q.vertex(&a.source.text).unwrap();
        let t = q.vertex(&a.target.text).unwrap();
        q.add_arrow(&a.name.text, s, t);
    }
    let relations = decl
        .relations
        .iter()
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, path)| (Fp::new(*c), path.iter().map(|n| q.arrow(&n.text).unwrap()).collect()))
                .collect(),
        })
        .collect();
    Algebra::build(&decl.name.text, q, relations, max_len)
}

/// Renders a presentation back into the description language.
pub fn to_dsl(alg: &AlgebraPresentation) -> String {
    let q = alg.quiver();
    let arrows: Vec<String> = q
        .arrows()
        .iter()
        .map(|a| format!("{}:{}->{}", a.name, q.vertex_name(a.source), q.vertex_name(a.target)))
        .collect();
    let mut out = format!(
        "algebra {} {{\n  vertices: {};\n  arrows: {};\n",
        alg.name(),
        q.vertices().join(", "),
        arrows.join(", ")
    );
    if !alg.relations().is_empty() {
        let rels: Vec<String> = alg.relations().iter().map(|r| format_relation(q, r)).collect();
        out.push_str(&format!("  relations: {};\n", rels.join(", ")));
    }
    out.push_str("}\n");
    out
}

fn format_relation(q: &Quiver, r: &Relation) -> String {
    let mut s = String::new();
    for (k, (c, path)) in r.terms.iter().enumerate() {
        let v = c.signed();
        let path = path.iter().map(|&a| q.arrows()[a].name.as_str()).collect::<Vec<_>>().join("*");
        match (k, v) {
            (0, 1) => {}
            (0, -1) => s.push_str("- "),
            (0, _) => s.push_str(&format!("{v} ")),
            (_, 1) => s.push_str(" + "),
            (_, -1) => s.push_str(" - "),
            (_, _) if v < 0 => s.push_str(&format!(" - {} ", -v)),
            _ => s.push_str(&format!(" + {v} ")),
        }
        s.push_str(&path);
    }
    s
}
