//! Support τ-tilting pairs: verification, mutation, torsion classes.

mod hasse;

use std::fmt;

use log::warn;

pub use hasse::{export_dot, hasse, HasseArrow, HasseQuiver};

use crate::ar::tau;
use crate::error::{Error, Result};
use crate::presentation::Algebra;
use crate::rep::{
    coker, decompose, direct_sum, hom_basis, hom_dim, in_fac, is_isomorphic, loewy_label, projective, projective_cover,
    sort_key, Morphism, Representation,
};

/// A pair `(T, P)` with `T` basic, kept as its indecomposable summands in
/// canonical order, and `P = ⊕ e_vΛ` given by its vertices.
#[derive(Clone, Debug)]
pub struct SttPair {
    algebra: Algebra,
    summands: Vec<Representation>,
    t: Representation,
    p: Vec<usize>,
    verified: bool,
}

impl SttPair {
    fn assemble(alg: &Algebra, mut summands: Vec<Representation>, mut p: Vec<usize>) -> SttPair {
        summands.sort_by_cached_key(sort_key);
        p.sort_by_cached_key(|&v| sort_key(&projective(alg, v)));
        p.dedup();
        let t = direct_sum(alg, &summands.iter().collect::<Vec<_>>());
        SttPair { algebra: alg.clone(), summands, t, p, verified: false }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn t(&self) -> &Representation {
        &self.t
    }

    pub fn summands(&self) -> &[Representation] {
        &self.summands
    }

    pub fn p_vertices(&self) -> &[usize] {
        &self.p
    }

    pub fn p_module(&self) -> Representation {
        let parts: Vec<Representation> = self.p.iter().map(|&v| projective(&self.algebra, v)).collect();
        direct_sum(&self.algebra, &parts.iter().collect::<Vec<_>>())
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// `|T| + |P|`.
    pub fn size(&self) -> usize {
        self.summands.len() + self.p.len()
    }

    pub fn summand_labels(&self) -> Vec<String> {
        self.summands.iter().map(|s| loewy_label(s).expect("indecomposable")).collect()
    }

    pub fn p_labels(&self) -> Vec<String> {
        self.p.iter().map(|&v| loewy_label(&projective(&self.algebra, v)).expect("indecomposable")).collect()
    }

    pub fn t_label(&self) -> String {
        join(&self.summand_labels())
    }

    pub fn p_label(&self) -> String {
        join(&self.p_labels())
    }

    /// `T`, followed by `(P)` when `P ≠ 0`.
    pub fn label(&self) -> String {
        if self.p.is_empty() {
            self.t_label()
        } else {
            format!("{} ({})", self.t_label(), self.p_label())
        }
    }

    /// Same support part and isomorphic `T`.
    pub fn same_as(&self, other: &SttPair) -> bool {
        self.p == other.p
            && self.summands.len() == other.summands.len()
            && self.t.dims() == other.t.dims()
            && is_isomorphic(&self.t, &other.t)
    }
}

fn join(labels: &[String]) -> String {
    if labels.is_empty() {
        "0".into()
    } else {
        labels.join(" ⊕ ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    NotTauRigid,
    HomPTNonzero,
    WrongCount,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::NotTauRigid => "T is not τ-rigid",
            Rejection::HomPTNonzero => "Hom(P, T) ≠ 0",
            Rejection::WrongCount => "|T| + |P| ≠ |Λ|",
        })
    }
}

/// Outcome of [`verify_pair`]: the basic pair, and the first condition it fails.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub pair: SttPair,
    pub rejection: Option<Rejection>,
}

impl Verdict {
    pub fn is_stt(&self) -> bool {
        self.rejection.is_none()
    }
}

/// Vertices `v` with `P ≅ ⊕ e_vΛ`, or `NotProjective`.
pub fn projective_vertices(p: &Representation) -> Result<Vec<usize>> {
    let cover = projective_cover(p);
    if !cover.map.is_iso() {
        return Err(Error::NotProjective(loewy_label(p).unwrap_or_else(|_| format!("{:?}", p.dims()))));
    }
    Ok(cover.vertices)
}

/// Checks τ-rigidity of `T`, `Hom(P, T) = 0` and `|T| + |P| = |Λ|`, in that
/// order, after collapsing multiplicities.
pub fn verify_pair(t: &Representation, p: &Representation) -> Result<Verdict> {
    let alg = t.algebra();
    if !alg.same(p.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut pv = projective_vertices(p)?;
    let n = pv.len();
    pv.sort();
    pv.dedup();
    if pv.len() < n {
        warn!("P is not basic; repeated projectives collapsed");
    }
    let d = decompose(t)?;
    if !d.is_basic() {
        warn!("T is not basic; repeated summands collapsed");
    }
    let summands = d.summands().into_iter().map(|(s, _)| s.clone()).collect();
    check_pair(alg, summands, pv)
}

/// The checks of [`verify_pair`] on a pair already split into pieces.
pub fn check_pair(alg: &Algebra, summands: Vec<Representation>, p: Vec<usize>) -> Result<Verdict> {
    let mut pair = SttPair::assemble(alg, summands, p);
    let rejection = if hom_dim(&pair.t, &tau(&pair.t)?) != 0 {
        Some(Rejection::NotTauRigid)
    } else if pair.p.iter().any(|&v| pair.t.dims()[v] > 0) {
        Some(Rejection::HomPTNonzero)
    } else if pair.size() != alg.vertex_count() {
        Some(Rejection::WrongCount)
    } else {
        None
    };
    pair.verified = rejection.is_none();
    Ok(Verdict { pair, rejection })
}

/// `(Λ, 0)`, the top of the poset.
pub fn regular_pair(alg: &Algebra) -> Result<SttPair> {
    let summands = (0..alg.vertex_count()).map(|v| projective(alg, v)).collect();
    let v = check_pair(alg, summands, Vec::new())?;
    expect_stt(v, "the regular module")
}

fn expect_stt(v: Verdict, what: &str) -> Result<SttPair> {
    match v.rejection {
        None => Ok(v.pair),
        Some(r) => Err(Error::TheoremViolation(format!("{what} {} is rejected: {r}", v.pair.label()))),
    }
}

/// `P` normalized to the vertices where `T` vanishes.
fn support_complement(alg: &Algebra, summands: &[Representation]) -> Vec<usize> {
    (0..alg.vertex_count()).filter(|&v| summands.iter().all(|s| s.dims()[v] == 0)).collect()
}

#[derive(Clone, Debug)]
pub enum LeftMutation {
    Mutated(SttPair),
    NotLeft,
}

/// `μ⁻_X` at the summand `pair.summands()[x]`.
///
/// The approximation `X → ⊕ U_i^{dim Hom(X, U_i)}` uses every basis
/// morphism, so it need not be minimal; the extra part of its cokernel lies
/// in `add U` and is shed.
pub fn left_mutation(pair: &SttPair, x: usize) -> Result<LeftMutation> {
    let alg = &pair.algebra;
    let xm = &pair.summands[x];
    let rest: Vec<Representation> =
        pair.summands.iter().enumerate().filter(|&(i, _)| i != x).map(|(_, s)| s.clone()).collect();
    let u = direct_sum(alg, &rest.iter().collect::<Vec<_>>());
    if in_fac(xm, &u) {
        return Ok(LeftMutation::NotLeft);
    }
    let homs: Vec<Morphism> = rest.iter().flat_map(|ui| hom_basis(xm, ui)).collect();
    let approx =
        if homs.is_empty() { Morphism::zero(xm, &Representation::zero(alg)) } else { Morphism::into_sum(xm, &homs) };
    let (y, _) = coker(&approx);
    let new: Vec<Representation> = decompose(&y)?
        .summands()
        .into_iter()
        .map(|(s, _)| s)
        .filter(|s| !rest.iter().any(|r| is_isomorphic(r, s)))
        .cloned()
        .collect();
    if new.len() > 1 {
        return Err(Error::MutationAmbiguous(new.len()));
    }
    let mut summands = rest;
    summands.extend(new);
    let p = support_complement(alg, &summands);
    let v = check_pair(alg, summands, p)?;
    expect_stt(v, "left mutation").map(LeftMutation::Mutated)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Summand(usize),
    Support(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct Exchange {
    pub position: Position,
    pub label: String,
    pub direction: Direction,
    pub result: Option<SttPair>,
}

/// Direction of the mutation at each of the `|Λ|` positions. Removing a
/// projective from `P` always enlarges `Fac T`, so support positions are
/// right mutations.
pub fn mutations(pair: &SttPair) -> Result<Vec<Exchange>> {
    let mut out = Vec::with_capacity(pair.size());
    let labels = pair.summand_labels();
    for (i, label) in labels.into_iter().enumerate() {
        let (direction, result) = match left_mutation(pair, i)? {
            LeftMutation::Mutated(q) => (Direction::Left, Some(q)),
            LeftMutation::NotLeft => (Direction::Right, None),
        };
        out.push(Exchange { position: Position::Summand(i), label, direction, result });
    }
    for (&v, label) in pair.p.iter().zip(pair.p_labels()) {
        out.push(Exchange { position: Position::Support(v), label, direction: Direction::Right, result: None });
    }
    Ok(out)
}

/// `X ∈ Fac T`, tested as `Hom(X, τT) = 0 = Hom(P, X)`.
pub fn in_torsion_class(x: &Representation, pair: &SttPair) -> Result<bool> {
    Ok(pair.p.iter().all(|&v| x.dims()[v] == 0) && hom_dim(x, &tau(&pair.t)?) == 0)
}

/// `X ∈ T^⊥`.
pub fn in_torsion_free(x: &Representation, pair: &SttPair) -> bool {
    hom_dim(&pair.t, x) == 0
}
