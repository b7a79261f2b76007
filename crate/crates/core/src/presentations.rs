//! Finite presentations, abelianization, index-2 subgroups and fingerprints.
//!
//! The fingerprint of a presentation is its abelianization together with the
//! multiset of abelianizations of all index-2 subgroups. Kernel presentations
//! are produced by Reidemeister–Schreier rewriting over the transversal
//! `{1, s}`, where `s` is the first generator the character sends to 1.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::words::{parse_word, Alphabet, Generator, Word, WordError};
use crate::zlinalg::{cokernel_invariants, AbelianInvariants, IntMatrix};

/// Upper bound on letters expanded while rewriting one relator.
const REWRITE_LETTER_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("duplicate generator '{0}'")]
    DuplicateGenerator(String),
    #[error("relator uses unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("invalid index-2 character: {0}")]
    InvalidCharacter(String),
    #[error("exponent too large to rewrite letter by letter")]
    ExponentTooLarge,
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePresentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

impl FinitePresentation {
    /// Relators are freely and cyclically reduced on the way in.
    pub fn new(generators: Vec<Generator>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.clone()) {
                return Err(PresentationError::DuplicateGenerator(g.name().to_string()));
            }
        }
        let relators = relators
            .into_iter()
            .map(|r| {
                if let Some(bad) = r.generators().find(|g| !seen.contains(*g)) {
                    return Err(PresentationError::UnknownGenerator(bad.name().to_string()));
                }
                Ok(r.cyclically_reduce())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FinitePresentation {
            generators,
            relators,
        })
    }

    /// Convenience constructor from generator names and relator text.
    pub fn parse(gens: &[&str], rels: &[&str]) -> Result<Self, PresentationError> {
        let generators = gens
            .iter()
            .map(|n| Generator::new(*n))
            .collect::<Result<Vec<_>, _>>()?;
        let alphabet = Alphabet::new(generators.iter().cloned());
        let relators = rels
            .iter()
            .map(|r| parse_word(r, &alphabet))
            .collect::<Result<Vec<_>, _>>()?;
        FinitePresentation::new(generators, relators)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.generators.iter().cloned())
    }

    pub fn index_of(&self, g: &Generator) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    /// Exponent-sum vector of `w` in generator order.
    pub fn exponent_vector(&self, w: &Word) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.generators.len()];
        for s in w.syllables() {
            if let Some(i) = self.index_of(&s.generator) {
                v[i] += &s.exponent;
            }
        }
        v
    }

    /// One row per relator, one column per generator.
    pub fn relator_matrix(&self) -> IntMatrix {
        let rows = self.relators.iter().map(|r| self.exponent_vector(r)).collect();
        IntMatrix::from_rows(self.generators.len(), rows).expect("rows sized by generator count")
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        cokernel_invariants(&self.relator_matrix())
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.generators.iter().map(|g| g.name()).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

pub fn abelianization(p: &FinitePresentation) -> AbelianInvariants {
    p.abelianization()
}

/// A homomorphism onto the group of order 2, one bit per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    values: Vec<bool>,
}

impl Character {
    pub fn new(values: Vec<bool>) -> Self {
        Character { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn value(&self, i: usize) -> bool {
        self.values[i]
    }

    fn sort_key(&self) -> Vec<bool> {
        self.values.iter().rev().copied().collect()
    }

    pub fn describe(&self, p: &FinitePresentation) -> String {
        p.generators
            .iter()
            .zip(&self.values)
            .map(|(g, &v)| format!("{}={}", g, u8::from(v)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All nonzero characters onto the group of order 2, ordered by the binary
/// number whose bit `i` is the value on generator `i`.
pub fn index2_characters(p: &FinitePresentation) -> Vec<Character> {
    let n = p.generators.len();
    let m = p.relator_matrix();
    let mut rows: Vec<Vec<bool>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.is_odd()).collect())
        .collect();

    // Row echelon form over GF(2).
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, pr);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<bool>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![false; n];
            v[f] = true;
            for (row, &pc) in rows.iter().zip(&pivots) {
                if row[f] {
                    v[pc] = true;
                }
            }
            v
        })
        .collect();

    let k = basis.len();
    let mut chars: Vec<Character> = (1u64..(1u64 << k))
        .map(|mask| {
            let mut v = vec![false; n];
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x ^= *y;
                    }
                }
            }
            Character::new(v)
        })
        .collect();
    chars.sort_by_key(Character::sort_key);
    chars
}

fn check_character(p: &FinitePresentation, chi: &Character) -> Result<usize, PresentationError> {
    if chi.values.len() != p.generators.len() {
        return Err(PresentationError::InvalidCharacter(
            "length differs from generator count".into(),
        ));
    }
    for r in &p.relators {
        let weight: BigInt = r
            .syllables()
            .iter()
            .filter(|s| chi.value(p.index_of(&s.generator).expect("validated")))
            .map(|s| &s.exponent)
            .sum();
        if weight.is_odd() {
            return Err(PresentationError::InvalidCharacter(format!(
                "relator {r} has odd weight"
            )));
        }
    }
    chi.values
        .iter()
        .position(|&v| v)
        .ok_or_else(|| PresentationError::InvalidCharacter("trivial character".into()))
}

/// Presentation of `ker(chi)` on Schreier generators `g_0 = g`, `g_1 = s g s^-1`
/// (when `chi(g) = 0`) or `g_0 = g s^-1`, `g_1 = s g` (when `chi(g) = 1`); the
/// trivial generator `s_0` is omitted. Relators are the rewrites of each
/// relator conjugated by `1` and by `s`.
pub fn reidemeister_schreier_index2(
    p: &FinitePresentation,
    chi: &Character,
) -> Result<FinitePresentation, PresentationError> {
    let s = check_character(p, chi)?;
    let mut names: Vec<[Option<Generator>; 2]> = Vec::with_capacity(p.generators.len());
    let mut generators = Vec::new();
    for (i, g) in p.generators.iter().enumerate() {
        let g0 = (i != s).then(|| schreier_name(g, 0));
        let g1 = Some(schreier_name(g, 1));
        generators.extend(g0.iter().cloned());
        generators.extend(g1.iter().cloned());
        names.push([g0, g1]);
    }

    let mut relators = Vec::with_capacity(2 * p.relators.len());
    for start in [0usize, 1] {
        for r in &p.relators {
            relators.push(rewrite(p, chi, s, &names, r, start)?);
        }
    }
    FinitePresentation::new(generators, relators)
}

fn schreier_name(g: &Generator, coset: u8) -> Generator {
    Generator::new(format!("{}_{}", g.name(), coset)).expect("suffix keeps name valid")
}

fn rewrite(
    p: &FinitePresentation,
    chi: &Character,
    s: usize,
    names: &[[Option<Generator>; 2]],
    relator: &Word,
    start: usize,
) -> Result<Word, PresentationError> {
    let mut out: Vec<(Generator, BigInt)> = Vec::new();
    let mut coset = start;
    let mut budget = REWRITE_LETTER_LIMIT;
    for syl in relator.syllables() {
        let gi = p.index_of(&syl.generator).expect("validated");
        let e = &syl.exponent;
        if !chi.value(gi) {
            let gen = names[gi][coset].clone().expect("only s_0 is omitted");
            out.push((gen, e.clone()));
            continue;
        }
        if gi == s {
            // Only s_1 = s^2 survives; count the letters read at the right coset.
            let len = e.magnitude();
            let odd_len = len.is_odd();
            let half = BigInt::from(len >> 1u32);
            let positive = e > &BigInt::zero();
            // Positive letters emit s_1 when read at coset 1, negative ones
            // emit s_1^-1 when read at coset 0.
            let hits_on_first = if positive { coset == 1 } else { coset == 0 };
            let count = if odd_len && hits_on_first { &half + 1 } else { half };
            if !count.is_zero() {
                let signed = if positive { count } else { -count };
                out.push((names[s][1].clone().expect("s_1 exists"), signed));
            }
            if odd_len {
                coset ^= 1;
            }
            continue;
        }
        let len = e
            .magnitude()
            .to_u64()
            .filter(|&l| l <= budget)
            .ok_or(PresentationError::ExponentTooLarge)?;
        budget -= len;
        let positive = e > &BigInt::zero();
        for _ in 0..len {
            if positive {
                let gen = names[gi][coset].clone().expect("only s_0 is omitted");
                out.push((gen, BigInt::from(1)));
                coset ^= 1;
            } else {
                coset ^= 1;
                let gen = names[gi][coset].clone().expect("only s_0 is omitted");
                out.push((gen, BigInt::from(-1)));
            }
        }
    }
    debug_assert_eq!(coset, start, "relators lie in the kernel");
    Ok(Word::new(out)?.free_reduce())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub whole_group: AbelianInvariants,
    /// Sorted, one entry per index-2 character.
    pub index2_kernels: Vec<AbelianInvariants>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.whole_group)?;
        for (i, k) in self.index2_kernels.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

pub fn fingerprint(p: &FinitePresentation) -> Result<Fingerprint, PresentationError> {
    let whole_group = p.abelianization();
    let mut index2_kernels = index2_characters(p)
        .iter()
        .map(|chi| reidemeister_schreier_index2(p, chi).map(|k| k.abelianization()))
        .collect::<Result<Vec<_>, _>>()?;
    index2_kernels.sort();
    Ok(Fingerprint {
        whole_group,
        index2_kernels,
    })
}

/// The seven virtually abelian groups that split over Z without containing a
/// non-abelian free group, apart from the family BS(1,n) with |n| >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExceptionalGroup {
    Z2,
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
}

impl ExceptionalGroup {
    pub const ALL: [ExceptionalGroup; 7] = [
        ExceptionalGroup::Z2,
        ExceptionalGroup::E1,
        ExceptionalGroup::E2,
        ExceptionalGroup::E3,
        ExceptionalGroup::E4,
        ExceptionalGroup::E5,
        ExceptionalGroup::E6,
    ];

    /// The six groups arising as amalgams over Z.
    pub const AMALGAMS: [ExceptionalGroup; 6] = [
        ExceptionalGroup::E1,
        ExceptionalGroup::E2,
        ExceptionalGroup::E3,
        ExceptionalGroup::E4,
        ExceptionalGroup::E5,
        ExceptionalGroup::E6,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ExceptionalGroup::Z2 => "Z2",
            ExceptionalGroup::E1 => "E1",
            ExceptionalGroup::E2 => "E2",
            ExceptionalGroup::E3 => "E3",
            ExceptionalGroup::E4 => "E4",
            ExceptionalGroup::E5 => "E5",
            ExceptionalGroup::E6 => "E6",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            ExceptionalGroup::Z2 => "Z^2",
            ExceptionalGroup::E1 => "Klein bottle group",
            ExceptionalGroup::E2 => "Z^2 x| C2, C2 swapping a basis",
            ExceptionalGroup::E3 => "K x| C2, C2 swapping the generators of K",
            ExceptionalGroup::E4 => "(C2 * C2) x Z",
            ExceptionalGroup::E5 => "Z x| (C2 * C2), one factor inverting",
            ExceptionalGroup::E6 => "Z^2 x| C2, C2 inverting",
        }
    }

    /// Generators and relators, in the word syntax.
    pub fn relations(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            ExceptionalGroup::Z2 => (&["s", "t"], &["s t s^-1 t^-1"]),
            ExceptionalGroup::E1 => (&["a", "b"], &["a^2 = b^2"]),
            ExceptionalGroup::E2 => (
                &["s", "t", "c"],
                &["s t s^-1 t^-1", "c^2", "c s c^-1 = t", "c t c^-1 = s"],
            ),
            ExceptionalGroup::E3 => (
                &["a", "b", "c"],
                &["a^2 = b^-2", "c^2", "c a c^-1 = b", "c b c^-1 = a"],
            ),
            ExceptionalGroup::E4 => (
                &["c", "d", "z"],
                &["c^2", "d^2", "c z c^-1 z^-1", "d z d^-1 z^-1"],
            ),
            ExceptionalGroup::E5 => (
                &["t", "c", "d"],
                &["c^2", "d^2", "c t c^-1 = t^-1", "d t d^-1 = t"],
            ),
            ExceptionalGroup::E6 => (
                &["s", "t", "c"],
                &["s t s^-1 t^-1", "c^2", "c s c^-1 = s^-1", "c t c^-1 = t^-1"],
            ),
        }
    }

    pub fn presentation(self) -> FinitePresentation {
        let (gens, rels) = self.relations();
        FinitePresentation::parse(gens, rels).expect("built-in presentation is well formed")
    }

    pub fn fingerprint(self) -> &'static Fingerprint {
        static TABLE: OnceLock<Vec<Fingerprint>> = OnceLock::new();
        let table = TABLE.get_or_init(|| {
            ExceptionalGroup::ALL
                .iter()
                .map(|g| fingerprint(&g.presentation()).expect("built-in fingerprint"))
                .collect()
        });
        &table[self as usize]
    }

    /// The stored group whose fingerprint equals `fp`, if any. Since the seven
    /// stored fingerprints are pairwise distinct there is at most one.
    pub fn matching(fp: &Fingerprint) -> Option<ExceptionalGroup> {
        ExceptionalGroup::ALL
            .into_iter()
            .find(|g| g.fingerprint() == fp)
    }

    /// Compares only the whole-group invariants first, computing kernels
    /// only when some stored group could still match.
    pub fn matching_presentation(
        p: &FinitePresentation,
    ) -> Result<Option<ExceptionalGroup>, PresentationError> {
        let ab = p.abelianization();
        if !ExceptionalGroup::ALL
            .iter()
            .any(|g| g.fingerprint().whole_group == ab)
        {
            return Ok(None);
        }
        Ok(ExceptionalGroup::matching(&fingerprint(p)?))
    }
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}
