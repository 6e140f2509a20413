//! The algebra map θ from the Temperley–Lieb algebra to the diagram algebra,
//! sending each generator b_i to the simple diagram d_i.
//!
//! On the monomial basis θ(b_w) is a single admissible diagram d_w with no
//! scalar, and w ↦ d_w is injective. This module computes d_w, inverts it by
//! factorization, and checks both facts (together with the descent/simple-edge
//! correspondence) exhaustively up to a length bound.

use std::collections::HashMap;
use std::fmt;

use crate::coxeter::{enumerate_fc, CoxeterGraph, FcElement, GraphKind, Side};
use crate::diagram::{
    act_simple, factor_into_simples, from_generator_word, simple_edges, AdmissibleDiagram,
    DiagramElement, DiagramResult, Face,
};
use crate::error::{Error, Result};
use crate::heap::{is_type_ii, n_value};
use crate::tl::{mult_generator, normalize_word, TLElement, TLMonomialResult};

/// d_w = θ(b_w). Fails with an invariant violation if a scalar appears.
pub fn theta_monomial(e: &FcElement) -> Result<AdmissibleDiagram> {
    let r = from_generator_word(&e.graph(), &e.word())?;
    if r.two_exp != 0 || r.delta_exp != 0 {
        return Err(Error::InvariantViolation(format!(
            "θ({e}) picked up the scalar 2^{} δ^{}",
            r.two_exp, r.delta_exp
        )));
    }
    Ok(r.diagram)
}

/// θ applied term by term to a linear combination of monomials.
pub fn theta_element(x: &TLElement) -> Result<DiagramElement> {
    let mut out = DiagramElement::default();
    for (e, c) in x.terms() {
        out.add_term(theta_monomial(e)?, c);
    }
    Ok(out)
}

/// Whether the left (right) descents of `e` are exactly the indices of the
/// simple north (south) edges of d_w.
pub fn descent_edge_check(e: &FcElement) -> Result<bool> {
    let d = theta_monomial(e)?;
    let north: Vec<usize> = e.left_descents().into_iter().collect();
    let south: Vec<usize> = e.right_descents().into_iter().collect();
    Ok(simple_edges(d.raw(), Face::North) == north && simple_edges(d.raw(), Face::South) == south)
}

/// The fully commutative element w with d_w = d.
pub fn inverse_theta(graph: &CoxeterGraph, d: &AdmissibleDiagram) -> Result<FcElement> {
    if d.n() != graph.n() {
        return Err(Error::Precondition(format!(
            "diagram rank {} does not match {graph}",
            d.n()
        )));
    }
    let word = factor_into_simples(d)?;
    let m = normalize_word(graph, &word)?;
    if m.two_exp != 0 || m.delta_exp != 0 {
        return Err(Error::InvariantViolation(format!(
            "factorization {word:?} is not a monomial"
        )));
    }
    if theta_monomial(&m.element)? != *d {
        return Err(Error::InvariantViolation(format!(
            "θ({}) differs from the factored diagram",
            m.element
        )));
    }
    Ok(m.element)
}

/// Outcome of an exhaustive faithfulness sweep.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub graph: CoxeterGraph,
    pub max_len: usize,
    /// Number of elements swept.
    pub checked: usize,
    /// Elements whose image carried a scalar (or failed to compute).
    pub scalar_failures: Vec<(FcElement, String)>,
    /// Pairs of distinct elements with the same image.
    pub collision_failures: Vec<(FcElement, FcElement)>,
    /// Elements violating the descent/simple-edge correspondence.
    pub descent_failures: Vec<FcElement>,
    /// Elements whose image does not factor back to itself.
    pub round_trip_failures: Vec<(FcElement, String)>,
    /// Products b_i b_w (w shorter than the bound) whose image is not the
    /// image of the normalized product.
    pub action_failures: Vec<(usize, FcElement)>,
    /// Informational remarks that are not failures.
    pub notes: Vec<String>,
}

impl ThetaReport {
    pub fn failure_count(&self) -> usize {
        self.scalar_failures.len()
            + self.collision_failures.len()
            + self.descent_failures.len()
            + self.round_trip_failures.len()
            + self.action_failures.len()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }
}

impl fmt::Display for ThetaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph {} max-len {}: {} elements",
            self.graph, self.max_len, self.checked
        )?;
        writeln!(f, "scalar failures: {}", self.scalar_failures.len())?;
        for (e, why) in &self.scalar_failures {
            writeln!(f, "  {e}: {why}")?;
        }
        writeln!(f, "collisions: {}", self.collision_failures.len())?;
        for (a, b) in &self.collision_failures {
            writeln!(f, "  {a} and {b}")?;
        }
        writeln!(f, "descent-edge failures: {}", self.descent_failures.len())?;
        for e in &self.descent_failures {
            writeln!(f, "  {e}")?;
        }
        writeln!(f, "round-trip failures: {}", self.round_trip_failures.len())?;
        for (e, why) in &self.round_trip_failures {
            writeln!(f, "  {e}: {why}")?;
        }
        writeln!(f, "action failures: {}", self.action_failures.len())?;
        for (i, e) in &self.action_failures {
            writeln!(f, "  b{i} * {e}")?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Sweeps every fully commutative element up to `max_len`: images are
/// scalar-free, pairwise distinct, match descents with simple edges, factor
/// back to themselves, and left multiplication by each generator commutes
/// with θ. For B and B′ graphs the generators are a subset of those of C̃n.
pub fn verify_faithfulness(graph: &CoxeterGraph, max_len: usize) -> Result<ThetaReport> {
    if graph.kind() == GraphKind::A {
        return Err(Error::Unsupported("θ for type A graphs".into()));
    }
    let affine = CoxeterGraph::affine(graph.n())?;
    let elements = enumerate_fc(graph, max_len);
    let mut report = ThetaReport {
        graph: *graph,
        max_len,
        checked: elements.len(),
        scalar_failures: Vec::new(),
        collision_failures: Vec::new(),
        descent_failures: Vec::new(),
        round_trip_failures: Vec::new(),
        action_failures: Vec::new(),
        notes: Vec::new(),
    };
    let mut images: HashMap<AdmissibleDiagram, FcElement> = HashMap::new();
    let mut image_of: Vec<Option<AdmissibleDiagram>> = Vec::with_capacity(elements.len());
    for e in &elements {
        let d = match theta_monomial(e) {
            Ok(d) => d,
            Err(err) => {
                report.scalar_failures.push((e.clone(), err.to_string()));
                image_of.push(None);
                continue;
            }
        };
        if let Some(prev) = images.insert(d.clone(), e.clone()) {
            report.collision_failures.push((prev, e.clone()));
        }
        let north: Vec<usize> = e.left_descents().into_iter().collect();
        let south: Vec<usize> = e.right_descents().into_iter().collect();
        if simple_edges(d.raw(), Face::North) != north
            || simple_edges(d.raw(), Face::South) != south
        {
            report.descent_failures.push(e.clone());
        }
        match factor_into_simples(&d).and_then(|w| from_generator_word(&affine, &w)) {
            Ok(back) if back == DiagramResult::unscaled(d.clone()) => {}
            Ok(back) => report.round_trip_failures.push((
                e.clone(),
                format!(
                    "factored to 2^{} δ^{} times\n{}",
                    back.two_exp, back.delta_exp, back.diagram
                ),
            )),
            Err(err) => report
                .round_trip_failures
                .push((e.clone(), err.to_string())),
        }
        image_of.push(Some(d));
    }
    for (e, d) in elements.iter().zip(&image_of) {
        let Some(d) = d else { continue };
        if e.len() >= max_len {
            continue;
        }
        for i in graph.generators() {
            let m = mult_generator(Side::Left, i, &TLMonomialResult::basis(e.clone()))?;
            let r = act_simple(Side::Left, i, &DiagramResult::unscaled(d.clone()))?;
            let expected = images.get(&r.diagram);
            if (m.two_exp, m.delta_exp) != (r.two_exp, r.delta_exp) || expected != Some(&m.element)
            {
                report.action_failures.push((i, e.clone()));
            }
        }
    }
    let mismatched = elements
        .iter()
        .zip(&image_of)
        .filter(|(e, d)| {
            !e.is_identity()
                && is_type_ii(e).is_some()
                && d.as_ref()
                    .is_some_and(|d| n_value(e).ok() != Some(d.a_value()))
        })
        .count();
    if mismatched > 0 {
        report.notes.push(format!(
            "{mismatched} type II elements have heap antichain size different from a(d_w)"
        ));
    }
    Ok(report)
}
