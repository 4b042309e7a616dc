//! A parsed `.alg` file with its algebras and extensions built.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::extension::{make_extension, SplitExtension};
use crate::presentation::parser::{parse, parse_module_expr, Atom, Decl, ModuleExpr};
use crate::presentation::{build_algebra, Algebra};
use crate::rep::{direct_sum, injective, projective, simple, Representation};

#[derive(Clone, Debug)]
pub struct Document {
    algebras: Vec<Algebra>,
    extensions: Vec<SplitExtension>,
    lets: HashMap<String, ModuleExpr>,
}

impl Document {
    pub fn parse(src: &str, max_len: usize) -> Result<Document> {
        let decls = parse(src)?;
        let mut doc = Document { algebras: Vec::new(), extensions: Vec::new(), lets: HashMap::new() };
        for d in &decls {
            match d {
                Decl::Algebra(a) => doc.algebras.push(build_algebra(a, max_len)?),
                Decl::Extension(e) => {
                    let base = doc.algebra(&e.base.text)?.clone();
                    let total = doc.algebra(&e.total.text)?.clone();
                    let rename = |name: &str| -> String {
                        e.map.iter().find(|(from, _)| from.text == name).map_or(name, |(_, to)| &to.text).to_string()
                    };
                    let (bq, tq) = (base.quiver(), total.quiver());
                    let vertices = bq
                        .vertices()
                        .iter()
                        .map(|v| tq.vertex(&rename(v)).ok_or_else(|| Error::UnknownName(rename(v))))
                        .collect::<Result<Vec<_>>>()?;
                    let arrows = bq
                        .arrows()
                        .iter()
                        .map(|a| tq.arrow(&rename(&a.name)).ok_or_else(|| Error::UnknownName(rename(&a.name))))
                        .collect::<Result<Vec<_>>>()?;
                    let name =
                        e.name.as_ref().map_or_else(|| format!("{}<{}", base.name(), total.name()), |n| n.text.clone());
                    doc.extensions.push(make_extension(&name, &base, &total, vertices, arrows)?);
                }
                Decl::Let(l) => {
                    doc.lets.insert(l.name.text.clone(), l.expr.clone());
                }
            }
        }
        Ok(doc)
    }

    pub fn algebras(&self) -> &[Algebra] {
        &self.algebras
    }

    pub fn extensions(&self) -> &[SplitExtension] {
        &self.extensions
    }

    pub fn algebra(&self, name: &str) -> Result<&Algebra> {
        self.algebras.iter().find(|a| a.name() == name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn extension(&self, name: &str) -> Result<&SplitExtension> {
        self.extensions.iter().find(|e| e.name() == name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// The named algebra, or the only one in the file.
    pub fn algebra_or_only(&self, name: Option<&str>) -> Result<&Algebra> {
        match (name, self.algebras.as_slice()) {
            (Some(n), _) => self.algebra(n),
            (None, [a]) => Ok(a),
            (None, []) => Err(Error::UnknownName("<algebra>".into())),
            (None, _) => Err(Error::UnknownName("<algebra>: several declared, pick one".into())),
        }
    }

    /// Evaluates a module expression such as `P(1) + 2 S(3)` over `alg`;
    /// names bound by `let` are expanded.
    pub fn module(&self, alg: &Algebra, src: &str) -> Result<Representation> {
        let expr = parse_module_expr(src)?;
        self.eval(alg, &expr, 0)
    }

    fn eval(&self, alg: &Algebra, expr: &ModuleExpr, depth: usize) -> Result<Representation> {
        if depth > 64 {
            return Err(Error::UnknownName("module definitions nest too deeply".into()));
        }
        let vertex = |n: &str| alg.quiver().vertex(n).ok_or_else(|| Error::UnknownName(n.to_string()));
        let mut parts = Vec::new();
        for (mult, atom) in &expr.terms {
            let m = match atom {
                Atom::Projective(v) => projective(alg, vertex(&v.text)?),
                Atom::Simple(v) => simple(alg, vertex(&v.text)?),
                Atom::Injective(v) => injective(alg, vertex(&v.text)?),
                Atom::Ref(r) => {
                    let e = self.lets.get(&r.text).ok_or_else(|| Error::UnknownName(r.text.clone()))?;
                    self.eval(alg, e, depth + 1)?
                }
                Atom::Zero => Representation::zero(alg),
            };
            parts.extend(std::iter::repeat_n(m, *mult));
        }
        let refs: Vec<&Representation> = parts.iter().collect();
        Ok(direct_sum(alg, &refs))
    }
}
