//! Word problem for GBS groups by pinch reduction.
//!
//! Elements are paths in the graph decorated with vertex powers. A pinch is a
//! traversal into a vertex, a power there divisible by the arriving label,
//! and the reverse traversal; it collapses to a power at the departure
//! vertex. Tree edges are pinched by the same rule, so the base point of
//! every closed path is the layout root.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::gog::{GbsGraph, GraphLayout, Step};
use crate::words::{Generator, Word};

const MAX_LETTER_EXPANSION: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrittonError {
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("stable letter exponent too large to expand")]
    ExponentTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Letter {
    Power(BigInt),
    Traverse(Step),
}

/// Path word `x_{v0}^{k0} e1 x_{v1}^{k1} ... en x_{vn}^{kn}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbsWord {
    start: usize,
    powers: Vec<BigInt>,
    steps: Vec<Step>,
}

impl GbsWord {
    pub fn empty(start: usize) -> Self {
        GbsWord {
            start,
            powers: vec![BigInt::zero()],
            steps: Vec::new(),
        }
    }

    /// Checks that each traversal leaves from the current vertex; adjacent
    /// powers are merged.
    pub fn new(
        graph: &GbsGraph,
        start: &Generator,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, BrittonError> {
        let start = graph
            .vertex_index(start)
            .ok_or_else(|| BrittonError::MalformedWord(format!("unknown vertex '{start}'")))?;
        let mut w = GbsWord::empty(start);
        let mut at = start;
        for letter in letters {
            match letter {
                Letter::Power(k) => *w.powers.last_mut().expect("nonempty") += k,
                Letter::Traverse(s) => {
                    let e = graph.edges().get(s.edge).ok_or_else(|| {
                        BrittonError::MalformedWord(format!("unknown edge index {}", s.edge))
                    })?;
                    let (from, to, _, _) = e.oriented(s.forward);
                    if graph.vertex_index(from) != Some(at) {
                        return Err(BrittonError::MalformedWord(format!(
                            "edge '{}' does not leave vertex '{}'",
                            e.id,
                            graph.vertices()[at]
                        )));
                    }
                    at = graph.vertex_index(to).expect("validated graph");
                    w.steps.push(s);
                    w.powers.push(BigInt::zero());
                }
            }
        }
        Ok(w)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn powers(&self) -> &[BigInt] {
        &self.powers
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn traversal_len(&self) -> usize {
        self.steps.len()
    }

    /// No traversals and a zero power.
    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty() && self.powers[0].is_zero()
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = vec![Letter::Power(self.powers[0].clone())];
        for (s, k) in self.steps.iter().zip(&self.powers[1..]) {
            out.push(Letter::Traverse(*s));
            out.push(Letter::Power(k.clone()));
        }
        out
    }

    pub fn display<'a>(&'a self, graph: &'a GbsGraph) -> impl fmt::Display + 'a {
        DisplayWord { word: self, graph }
    }
}

struct DisplayWord<'a> {
    word: &'a GbsWord,
    graph: &'a GbsGraph,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.graph;
        let mut at = self.word.start;
        write!(f, "{}^{}", g.vertices()[at], self.word.powers[0])?;
        for (s, k) in self.word.steps.iter().zip(&self.word.powers[1..]) {
            let e = &g.edges()[s.edge];
            let (_, to, _, _) = e.oriented(s.forward);
            at = g.vertex_index(to).expect("validated");
            let arrow = if s.forward { "+" } else { "-" };
            write!(f, " [{}{}] {}^{}", e.id, arrow, g.vertices()[at], k)?;
        }
        Ok(())
    }
}

/// Removes every pinch, innermost first, in one left-to-right pass.
pub fn britton_reduce(graph: &GbsGraph, w: &GbsWord) -> Result<GbsWord, BrittonError> {
    let checked = GbsWord::new(graph, &graph.vertices()[w.start].clone(), w.letters())?;
    let mut out = GbsWord::empty(checked.start);
    out.powers[0] = checked.powers[0].clone();
    for (s, k) in checked.steps.iter().zip(&checked.powers[1..]) {
        push_step(graph, &mut out, *s);
        *out.powers.last_mut().expect("nonempty") += k;
    }
    Ok(out)
}

fn push_step(graph: &GbsGraph, w: &mut GbsWord, s: Step) {
    if let Some(&last) = w.steps.last() {
        if last == s.reversed() {
            let e = &graph.edges()[last.edge];
            let (_, _, near, far) = e.oriented(last.forward);
            let k = w.powers.last().expect("nonempty");
            let (q, r) = k.div_mod_floor(far);
            if r.is_zero() {
                w.steps.pop();
                w.powers.pop();
                *w.powers.last_mut().expect("nonempty") += q * near;
                return;
            }
        }
    }
    w.steps.push(s);
    w.powers.push(BigInt::zero());
}

/// Translates presentation words into closed path words at the layout root.
pub struct WordTranslator<'a> {
    graph: &'a GbsGraph,
    layout: GraphLayout,
    root_paths: Vec<Vec<Step>>,
}

impl<'a> WordTranslator<'a> {
    pub fn new(graph: &'a GbsGraph) -> Self {
        let layout = graph.layout();
        let root = layout.root();
        let root_paths = (0..graph.vertices().len())
            .map(|v| layout.tree_path(graph, root, v))
            .collect();
        WordTranslator {
            graph,
            layout,
            root_paths,
        }
    }

    pub fn layout(&self) -> &GraphLayout {
        &self.layout
    }

    fn push_path(&self, out: &mut GbsWord, path: &[Step]) {
        for s in path {
            push_step(self.graph, out, *s);
        }
    }

    fn push_back_to_root(&self, out: &mut GbsWord, from: usize) {
        for s in self.root_paths[from].iter().rev() {
            push_step(self.graph, out, s.reversed());
        }
    }

    /// Reduced path word for `w`; the result is trivial iff `w = 1`.
    pub fn translate(&self, w: &Word) -> Result<GbsWord, BrittonError> {
        let g = self.graph;
        let mut out = GbsWord::empty(self.layout.root());
        for syl in w.syllables() {
            let gen = &syl.generator;
            if let Some(v) = g.vertex_index(gen) {
                self.push_path(&mut out, &self.root_paths[v]);
                *out.powers.last_mut().expect("nonempty") += &syl.exponent;
                self.push_back_to_root(&mut out, v);
            } else if let Some(edge) = self.layout.edge_of_letter(gen) {
                let reps = syl
                    .exponent
                    .abs()
                    .to_usize()
                    .filter(|&n| n <= MAX_LETTER_EXPANSION)
                    .ok_or(BrittonError::ExponentTooLarge)?;
                let e = &g.edges()[edge];
                let u = g.vertex_index(&e.u).expect("validated");
                let v = g.vertex_index(&e.v).expect("validated");
                // t = (root -> v) e^-1 (u -> root)
                for _ in 0..reps {
                    if syl.exponent.is_positive() {
                        self.push_path(&mut out, &self.root_paths[v]);
                        push_step(g, &mut out, Step { edge, forward: false });
                        self.push_back_to_root(&mut out, u);
                    } else {
                        self.push_path(&mut out, &self.root_paths[u]);
                        push_step(g, &mut out, Step { edge, forward: true });
                        self.push_back_to_root(&mut out, v);
                    }
                }
            } else {
                return Err(BrittonError::UnknownGenerator(gen.name().to_string()));
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool, BrittonError> {
        Ok(self.translate(w)?.is_trivial())
    }

    /// For each presentation generator `g`, the sign `±1` with
    /// `g x^p g^-1 = x^{±p}` for the root vertex generator `x`, or `None` if
    /// some generator has neither.
    pub fn normal_signs(&self, p: &BigInt) -> Option<Vec<i8>> {
        self.normal_signs_at(&self.graph.vertices()[self.layout.root()].clone(), p)
    }

    /// As [`Self::normal_signs`] for the generator of any vertex.
    pub fn normal_signs_at(&self, x: &Generator, p: &BigInt) -> Option<Vec<i8>> {
        let x = x.clone();
        let presentation = self.graph.presentation_with_layout(&self.layout);
        let xp = Word::power(x.clone(), p.clone());
        presentation
            .generators()
            .iter()
            .map(|g| {
                let gw = Word::power(g.clone(), 1);
                let conj = gw.concat(&xp).concat(&gw.invert());
                for sign in [1i8, -1] {
                    let test = conj.concat(&Word::power(x.clone(), -BigInt::from(sign) * p));
                    if self.is_identity(&test).ok()? {
                        return Some(sign);
                    }
                }
                None
            })
            .collect()
    }
}

pub fn is_identity(graph: &GbsGraph, w: &Word) -> Result<bool, BrittonError> {
    WordTranslator::new(graph).is_identity(w)
}

/// True iff `<x^p>` is normal, `x` the root vertex generator.
pub fn verify_normal(graph: &GbsGraph, p: &BigInt) -> bool {
    p.is_positive() && WordTranslator::new(graph).normal_signs(p).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gog::GbsEdge;
    use crate::words::parse_word;

    fn v(name: &str) -> Generator {
        Generator::new(name).unwrap()
    }

    fn bs(m: i64, n: i64) -> GbsGraph {
        GbsGraph::baumslag_solitar(m, n).unwrap()
    }

    fn torus() -> GbsGraph {
        GbsGraph::new(vec![v("a"), v("b")], vec![GbsEdge::new("e1", v("a"), v("b"), 2, 3)]).unwrap()
    }

    fn f2z() -> GbsGraph {
        GbsGraph::new(
            vec![v("x")],
            vec![
                GbsEdge::new("e1", v("x"), v("x"), 1, 1),
                GbsEdge::new("e2", v("x"), v("x"), 1, 1),
            ],
        )
        .unwrap()
    }

    fn ident(g: &GbsGraph, text: &str) -> bool {
        let p = g.to_presentation();
        is_identity(g, &parse_word(text, &p.alphabet()).unwrap()).unwrap()
    }

    #[test]
    fn single_pinch() {
        let g = bs(2, 3);
        let p = BigInt::from;
        // t x^2 t^-1 is e^-1 x^2 e in path form.
        let w = GbsWord::new(
            &g,
            &v("x"),
            [
                Letter::Traverse(Step { edge: 0, forward: false }),
                Letter::Power(p(2)),
                Letter::Traverse(Step { edge: 0, forward: true }),
            ],
        )
        .unwrap();
        let r = britton_reduce(&g, &w).unwrap();
        assert_eq!(r.powers(), &[p(3)]);
        assert!(r.steps().is_empty());

        let w = GbsWord::new(
            &g,
            &v("x"),
            [
                Letter::Traverse(Step { edge: 0, forward: true }),
                Letter::Power(p(1)),
                Letter::Traverse(Step { edge: 0, forward: false }),
            ],
        )
        .unwrap();
        let r = britton_reduce(&g, &w).unwrap();
        assert_eq!(r.traversal_len(), 2);
        assert_eq!(britton_reduce(&g, &r).unwrap(), r);
        assert!(!ident(&g, "t^-1 x t"));
        assert!(!ident(&g, "t^-1 x^2 t"));
        assert!(ident(&g, "t^-1 x^3 t x^-2"));

        let e = GbsWord::empty(0);
        assert_eq!(britton_reduce(&g, &e).unwrap(), e);
    }

    #[test]
    fn malformed_paths() {
        let g = torus();
        let err = GbsWord::new(&g, &v("a"), [Letter::Traverse(Step { edge: 0, forward: false })]);
        assert!(matches!(err, Err(BrittonError::MalformedWord(_))));
        assert!(matches!(
            GbsWord::new(&g, &v("q"), []),
            Err(BrittonError::MalformedWord(_))
        ));
    }

    #[test]
    fn identity_examples() {
        assert!(ident(&bs(2, 3), "t x^2 t^-1 x^-3"));
        assert!(ident(&torus(), "a^2 b^-3"));
        assert!(!ident(&torus(), "a b^-1"));
        assert!(ident(&torus(), "b a^2 b^-1 a^-2"));
        assert!(ident(&f2z(), "t1 x t1^-1 x^-1"));
        assert!(!ident(&f2z(), "t1 t2 t1^-1 t2^-1"));
        let p = torus().to_presentation();
        let unknown = Word::power(v("zz"), 1);
        assert_eq!(
            is_identity(&torus(), &unknown),
            Err(BrittonError::UnknownGenerator("zz".into()))
        );
        assert!(!p.relators().is_empty());
    }

    #[test]
    fn relators_are_trivial_on_mixed_graphs() {
        let g = GbsGraph::new(
            vec![v("a"), v("b"), v("c")],
            vec![
                GbsEdge::new("e1", v("a"), v("b"), 2, -3),
                GbsEdge::new("e2", v("b"), v("c"), 4, 2),
                GbsEdge::new("e3", v("c"), v("a"), 3, 2),
                GbsEdge::new("e4", v("b"), v("b"), -2, 6),
            ],
        )
        .unwrap();
        let t = WordTranslator::new(&g);
        for r in g.to_presentation().relators() {
            assert!(t.is_identity(r).unwrap(), "relator {r}");
        }
    }

    #[test]
    fn normality() {
        assert!(verify_normal(&torus(), &BigInt::from(2)));
        assert!(!verify_normal(&torus(), &BigInt::from(1)));
        for p in 1..6 {
            assert!(!verify_normal(&bs(2, 3), &BigInt::from(p)));
        }
        let g = bs(3, -3);
        assert!(verify_normal(&g, &BigInt::from(3)));
        assert_eq!(
            WordTranslator::new(&g).normal_signs(&BigInt::from(3)),
            Some(vec![1, -1])
        );
        assert!(verify_normal(&f2z(), &BigInt::from(1)));
        assert!(!verify_normal(&f2z(), &BigInt::from(0)));
    }
}
