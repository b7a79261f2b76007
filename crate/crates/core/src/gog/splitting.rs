//! One-edge splittings with arbitrary finitely presented vertex groups.
//!
//! Properties such as s-normality are not decidable from a presentation, so
//! they arrive as annotations. Construction rejects annotations that are
//! internally inconsistent or refuted by the abelianization.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::modular::QStarElement;
use crate::presentations::FinitePresentation;
use crate::words::{Generator, Word};
use crate::zlinalg::{cokernel_invariants, element_order_in_cokernel, AbelianInvariants, ElementOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingError {
    #[error("edge word {0} is trivial")]
    EmptyEdgeWord(String),
    #[error("edge word {word} uses generator '{generator}' outside its factor")]
    ForeignGenerator { word: String, generator: String },
    #[error("generator '{0}' appears in both factors")]
    SharedGenerator(String),
    #[error("annotation conflict: {0}")]
    AnnotationConflict(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeIndex {
    Two,
    MoreThanTwo,
}

impl fmt::Display for EdgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeIndex::Two => "2",
            EdgeIndex::MoreThanTwo => ">2",
        })
    }
}

/// `a^r = b^s` in the base, or no nontrivial powers of `a` and `b` agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Commensuration {
    Powers { r: BigInt, s: BigInt },
    Disjoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactorAnnotations {
    pub s_normal: Option<bool>,
    pub modular_image: Option<Vec<QStarElement>>,
    pub index: Option<EdgeIndex>,
}

impl FactorAnnotations {
    /// Derived: every supplied modular value lies in `{±1}`.
    pub fn balanced(&self) -> Option<bool> {
        self.modular_image
            .as_ref()
            .map(|gens| gens.iter().all(QStarElement::is_sign_only))
    }

    fn is_empty(&self) -> bool {
        self == &FactorAnnotations::default()
    }
}

/// For an amalgam, `first` and `second` describe `A` and `B`. For an HNN
/// extension only `first` is used and describes `<a>` in the base.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Annotations {
    pub first: FactorAnnotations,
    pub second: FactorAnnotations,
    pub commensuration: Option<Commensuration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplittingKind {
    Amalgam {
        a: FinitePresentation,
        b: FinitePresentation,
        c_a: Word,
        c_b: Word,
    },
    Hnn {
        base: FinitePresentation,
        a: Word,
        b: Word,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedSplitting {
    kind: SplittingKind,
    annotations: Annotations,
}

fn check_edge_word(label: &str, w: &Word, factor: &FinitePresentation) -> Result<Word, SplittingError> {
    let w = w.free_reduce();
    if w.is_empty() {
        return Err(SplittingError::EmptyEdgeWord(label.to_string()));
    }
    let alphabet = factor.alphabet();
    if let Some(g) = w.generators().find(|g| !alphabet.contains(g)) {
        return Err(SplittingError::ForeignGenerator {
            word: label.to_string(),
            generator: g.name().to_string(),
        });
    }
    Ok(w)
}

fn conflict(msg: impl Into<String>) -> SplittingError {
    SplittingError::AnnotationConflict(msg.into())
}

fn check_factor(side: &str, ann: &FactorAnnotations) -> Result<(), SplittingError> {
    match (ann.s_normal, &ann.modular_image) {
        (Some(true), None) => Err(conflict(format!(
            "snormal{side} is yes but modimage{side} is missing"
        ))),
        (Some(false) | None, Some(_)) => Err(conflict(format!(
            "modimage{side} given but snormal{side} is not yes"
        ))),
        _ => Ok(()),
    }
}

/// Invariants of `F^ab / <w>`.
pub fn quotient_by_edge_word(factor: &FinitePresentation, w: &Word) -> AbelianInvariants {
    let m = factor
        .relator_matrix()
        .with_row(&factor.exponent_vector(w))
        .expect("matching width");
    cokernel_invariants(&m)
}

impl AnnotatedSplitting {
    pub fn new(kind: SplittingKind, annotations: Annotations) -> Result<Self, SplittingError> {
        let kind = match kind {
            SplittingKind::Amalgam { a, b, c_a, c_b } => {
                let c_a = check_edge_word("edgeA", &c_a, &a)?;
                let c_b = check_edge_word("edgeB", &c_b, &b)?;
                let b_alphabet = b.alphabet();
                if let Some(g) = a.generators().iter().find(|g| b_alphabet.contains(g)) {
                    return Err(SplittingError::SharedGenerator(g.name().to_string()));
                }
                check_factor("A", &annotations.first)?;
                check_factor("B", &annotations.second)?;
                if annotations.commensuration.is_some() {
                    return Err(conflict("commensurate applies to HNN extensions only"));
                }
                for (side, factor, c, ann) in [
                    ("A", &a, &c_a, &annotations.first),
                    ("B", &b, &c_b, &annotations.second),
                ] {
                    if ann.index == Some(EdgeIndex::Two) {
                        let q = quotient_by_edge_word(factor, c);
                        let too_big = q.order().is_none_or(|n| n > BigInt::from(2));
                        if too_big {
                            return Err(conflict(format!(
                                "index{side} is 2 but the abelianized quotient by the edge word is {q}"
                            )));
                        }
                    }
                }
                SplittingKind::Amalgam { a, b, c_a, c_b }
            }
            SplittingKind::Hnn { base, a, b } => {
                let a = check_edge_word("edgeA", &a, &base)?;
                let b = check_edge_word("edgeB", &b, &base)?;
                check_factor("", &annotations.first)?;
                if !annotations.second.is_empty() || annotations.first.index.is_some() {
                    return Err(conflict("HNN extensions take snormal, modimage and commensurate only"));
                }
                if let Some(Commensuration::Powers { r, s }) = &annotations.commensuration {
                    if r.is_zero() || s.is_zero() {
                        return Err(conflict("commensurate powers must be nonzero"));
                    }
                    let va = base.exponent_vector(&a);
                    let vb = base.exponent_vector(&b);
                    let diff: Vec<BigInt> = va.iter().zip(&vb).map(|(x, y)| r * x - s * y).collect();
                    let order = element_order_in_cokernel(&diff, &base.relator_matrix())
                        .expect("matching width");
                    if order != ElementOrder::Finite(BigInt::one()) {
                        return Err(conflict(format!(
                            "a^{r} = b^{s} fails in the abelianization of the base"
                        )));
                    }
                }
                SplittingKind::Hnn { base, a, b }
            }
        };
        Ok(AnnotatedSplitting { kind, annotations })
    }

    pub fn kind(&self) -> &SplittingKind {
        &self.kind
    }

    pub fn annotations(&self) -> &Annotations {
        &self.annotations
    }

    pub fn is_amalgam(&self) -> bool {
        matches!(self.kind, SplittingKind::Amalgam { .. })
    }

    /// Name of the stable letter in [`Self::combined_presentation`].
    pub fn stable_letter(&self) -> Option<Generator> {
        match &self.kind {
            SplittingKind::Amalgam { .. } => None,
            SplittingKind::Hnn { base, .. } => {
                let alphabet = base.alphabet();
                let mut name = String::from("t");
                while alphabet.get(&name).is_some() {
                    name.push('_');
                }
                Some(Generator::new(name).expect("valid name"))
            }
        }
    }

    /// Presentation of the whole group: `A * B / <c_A = c_B>` or
    /// `H * <t> / <t a t^-1 = b>`.
    pub fn combined_presentation(&self) -> FinitePresentation {
        match &self.kind {
            SplittingKind::Amalgam { a, b, c_a, c_b } => {
                let mut gens = a.generators().to_vec();
                gens.extend(b.generators().iter().cloned());
                let mut rels = a.relators().to_vec();
                rels.extend(b.relators().iter().cloned());
                rels.push(c_a.concat(&c_b.invert()));
                FinitePresentation::new(gens, rels).expect("disjoint factors")
            }
            SplittingKind::Hnn { base, a, b } => {
                let t = self.stable_letter().expect("hnn");
                let mut gens = base.generators().to_vec();
                gens.push(t.clone());
                let mut rels = base.relators().to_vec();
                let tw = Word::power(t, 1);
                rels.push(tw.concat(a).concat(&tw.invert()).concat(&b.invert()));
                FinitePresentation::new(gens, rels).expect("fresh stable letter")
            }
        }
    }

    /// Annotation premises in the order they are used.
    pub fn asserted_facts(&self) -> Vec<String> {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = Vec::new();
        let sides: &[(&str, &FactorAnnotations)] = if self.is_amalgam() {
            &[("A", &self.annotations.first), ("B", &self.annotations.second)]
        } else {
            &[("", &self.annotations.first)]
        };
        for (side, ann) in sides {
            if let Some(s) = ann.s_normal {
                out.push(format!("snormal{side} = {}", yes_no(s)));
            }
            if let Some(gens) = &ann.modular_image {
                let list: Vec<String> = gens.iter().map(|q| q.to_string()).collect();
                out.push(format!("modimage{side} = {}", list.join(" ")));
            }
            if let Some(i) = ann.index {
                out.push(format!("index{side} = {i}"));
            }
        }
        match &self.annotations.commensuration {
            Some(Commensuration::Powers { r, s }) => out.push(format!("commensurate = {r} {s}")),
            Some(Commensuration::Disjoint) => out.push("commensurate = disjoint".to_string()),
            None => {}
        }
        out
    }
}
