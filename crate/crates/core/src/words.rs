//! Generators, words with integer exponents, and the textual word syntax.
//!
//! A word is a sequence of syllables `g^e` with `e != 0`. Words are kept in
//! whatever shape they were built in; [`Word::free_reduce`] produces the
//! normalized form in which no two adjacent syllables share a generator.
//!
//! The text syntax is whitespace separated tokens `name` or `name^e`, with an
//! optional single `=` so that `u = v` denotes the relator `u v^-1`. The lone
//! token `1` denotes the identity.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("zero exponent")]
    ZeroExponent,
    #[error("syntax error at column {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("invalid generator name '{0}'")]
    InvalidName(String),
}

/// A named generator. Names start with an ASCII letter and continue with
/// letters, digits or underscores.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(String);

impl Generator {
    pub fn new(name: impl Into<String>) -> Result<Self, WordError> {
        let name = name.into();
        if is_valid_name(&name) {
            Ok(Generator(name))
        } else {
            Err(WordError::InvalidName(name))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A set of generators that words may be parsed against.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet(BTreeSet<Generator>);

impl Alphabet {
    pub fn new(gens: impl IntoIterator<Item = Generator>) -> Self {
        Alphabet(gens.into_iter().collect())
    }

    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Result<Self, WordError> {
        names
            .into_iter()
            .map(Generator::new)
            .collect::<Result<BTreeSet<_>, _>>()
            .map(Alphabet)
    }

    pub fn get(&self, name: &str) -> Option<&Generator> {
        self.0.iter().find(|g| g.name() == name)
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.0.contains(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.0.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word from raw syllables, without merging neighbours.
    pub fn new(pairs: impl IntoIterator<Item = (Generator, BigInt)>) -> Result<Self, WordError> {
        let mut syllables = Vec::new();
        for (generator, exponent) in pairs {
            if exponent.is_zero() {
                return Err(WordError::ZeroExponent);
            }
            syllables.push(Syllable { generator, exponent });
        }
        Ok(Word { syllables })
    }

    pub fn power(generator: Generator, exponent: impl Into<BigInt>) -> Self {
        let exponent = exponent.into();
        if exponent.is_zero() {
            Word::identity()
        } else {
            Word {
                syllables: vec![Syllable { generator, exponent }],
            }
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.syllables
            .windows(2)
            .all(|w| w[0].generator != w[1].generator)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.syllables.iter().map(|s| &s.generator)
    }

    /// Total exponent of `g` in the word.
    pub fn exponent_sum(&self, g: &Generator) -> BigInt {
        self.syllables
            .iter()
            .filter(|s| &s.generator == g)
            .map(|s| &s.exponent)
            .sum()
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.syllables.extend(other.syllables.iter().cloned());
        out.free_reduce()
    }

    /// Plain concatenation, no reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.syllables.extend(other.syllables.iter().cloned());
        out
    }

    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Syllable> = Vec::with_capacity(self.syllables.len());
        for s in &self.syllables {
            push_merging(&mut stack, s.clone());
        }
        Word { syllables: stack }
    }

    pub fn invert(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    generator: s.generator.clone(),
                    exponent: -&s.exponent,
                })
                .collect(),
        }
    }

    /// Free reduction followed by conjugation until the first and last
    /// syllables carry different generators. The result is a cyclic conjugate.
    pub fn cyclically_reduce(&self) -> Word {
        let mut syl = self.free_reduce().syllables;
        while syl.len() >= 2 && syl[0].generator == syl[syl.len() - 1].generator {
            let last = syl.pop().expect("length checked");
            let merged = &syl[0].exponent + last.exponent;
            if merged.is_zero() {
                syl.remove(0);
            } else {
                syl[0].exponent = merged;
            }
        }
        Word { syllables: syl }
    }

    pub fn rename(&self, mut f: impl FnMut(&Generator) -> Generator) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    generator: f(&s.generator),
                    exponent: s.exponent.clone(),
                })
                .collect(),
        }
    }
}

fn push_merging(stack: &mut Vec<Syllable>, s: Syllable) {
    if let Some(top) = stack.last_mut() {
        if top.generator == s.generator {
            top.exponent += s.exponent;
            if top.exponent.is_zero() {
                stack.pop();
            }
            return;
        }
    }
    stack.push(s);
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if s.exponent.is_one() {
                write!(f, "{}", s.generator)?;
            } else {
                write!(f, "{}^{}", s.generator, s.exponent)?;
            }
        }
        Ok(())
    }
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

pub fn invert(w: &Word) -> Word {
    w.invert()
}

pub fn cyclically_reduce(w: &Word) -> Word {
    w.cyclically_reduce()
}

/// Parses the textual word syntax against `alphabet`, returning the
/// normalized word (for `u = v`, the normalized form of `u v^-1`).
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    let mut sides: Vec<Vec<Syllable>> = vec![Vec::new()];
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '=' {
            if sides.len() == 2 {
                return Err(syntax(i, "more than one '='"));
            }
            sides.push(Vec::new());
            i += 1;
            continue;
        }
        let start = i;
        if c == '1' {
            i += 1;
            if i < chars.len() && !chars[i].is_whitespace() && chars[i] != '=' {
                return Err(syntax(start, "expected a generator name"));
            }
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(syntax(start, &format!("unexpected character '{c}'")));
        }
        while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
            i += 1;
        }
        let name: String = chars[start..i].iter().collect();
        let exponent = if i < chars.len() && chars[i] == '^' {
            i += 1;
            let num_start = i;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                i += 1;
            }
            let digits_start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == digits_start {
                return Err(syntax(num_start, "expected an integer exponent"));
            }
            let lit: String = chars[num_start..i].iter().collect();
            let e: BigInt = lit
                .parse()
                .map_err(|_| syntax(num_start, "malformed exponent"))?;
            if e.is_zero() {
                return Err(WordError::ZeroExponent);
            }
            e
        } else {
            BigInt::one()
        };
        if i < chars.len() && !chars[i].is_whitespace() && chars[i] != '=' {
            return Err(syntax(i, &format!("unexpected character '{}'", chars[i])));
        }
        let generator = alphabet
            .get(&name)
            .cloned()
            .ok_or(WordError::UnknownGenerator(name))?;
        sides
            .last_mut()
            .expect("at least one side")
            .push(Syllable { generator, exponent });
    }
    let mut iter = sides.into_iter();
    let lhs = Word {
        syllables: iter.next().unwrap_or_default(),
    };
    let word = match iter.next() {
        Some(rhs) => lhs.concat(&Word { syllables: rhs }.invert()),
        None => lhs,
    };
    Ok(word.free_reduce())
}

fn syntax(index: usize, message: &str) -> WordError {
    WordError::SyntaxError {
        position: index + 1,
        message: message.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(name: &str) -> Generator {
        Generator::new(name).unwrap()
    }

    fn w(pairs: &[(&str, i64)]) -> Word {
        Word::new(pairs.iter().map(|&(n, e)| (g(n), BigInt::from(e)))).unwrap()
    }

    fn ab() -> Alphabet {
        Alphabet::from_names(["a", "b"]).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_word("a b^-1 a^2", &ab()).unwrap(),
            w(&[("a", 1), ("b", -1), ("a", 2)])
        );
        assert_eq!(parse_word("a^2 = b^2", &ab()).unwrap(), w(&[("a", 2), ("b", -2)]));
        assert_eq!(parse_word("a a^-1", &ab()).unwrap(), Word::identity());
        assert_eq!(parse_word("a^2=b^2", &ab()).unwrap(), w(&[("a", 2), ("b", -2)]));
        assert_eq!(parse_word("1", &ab()).unwrap(), Word::identity());
        assert_eq!(parse_word("", &ab()).unwrap(), Word::identity());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_word("a c", &ab()),
            Err(WordError::UnknownGenerator("c".into()))
        );
        assert_eq!(parse_word("a^0", &ab()), Err(WordError::ZeroExponent));
        assert!(matches!(
            parse_word("a ^2", &ab()),
            Err(WordError::SyntaxError { position: 3, .. })
        ));
        assert!(matches!(
            parse_word("a^", &ab()),
            Err(WordError::SyntaxError { position: 3, .. })
        ));
        assert!(matches!(
            parse_word("a = b = a", &ab()),
            Err(WordError::SyntaxError { position: 7, .. })
        ));
        assert!(matches!(
            parse_word("a,b", &ab()),
            Err(WordError::SyntaxError { position: 2, .. })
        ));
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(&[("a", 1), ("a", -1)]).free_reduce(), Word::identity());
        assert_eq!(
            w(&[("a", 2), ("b", 1), ("b", -1), ("a", 3)]).free_reduce(),
            w(&[("a", 5)])
        );
        assert_eq!(w(&[("a", 1)]).free_reduce(), w(&[("a", 1)]));
    }

    #[test]
    fn invert_and_cyclic() {
        assert_eq!(w(&[("a", 2), ("b", -1)]).invert(), w(&[("b", 1), ("a", -2)]));
        assert_eq!(
            w(&[("a", 1), ("b", 2), ("a", -1)]).cyclically_reduce(),
            w(&[("b", 2)])
        );
        assert_eq!(Word::identity().cyclically_reduce(), Word::identity());
        assert_eq!(
            w(&[("a", 2), ("b", 1), ("a", 1)]).cyclically_reduce(),
            w(&[("a", 3), ("b", 1)])
        );
    }

    #[test]
    fn printer() {
        assert_eq!(w(&[("a", 2), ("b", -1), ("a", 1)]).to_string(), "a^2 b^-1 a");
        assert_eq!(Word::identity().to_string(), "1");
    }

    #[test]
    fn generator_names() {
        assert!(Generator::new("x_1").is_ok());
        assert!(Generator::new("1x").is_err());
        assert!(Generator::new("").is_err());
        assert!(Generator::new("a-b").is_err());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, -4i64..=4), 0..12).prop_map(|v| {
            let names = ["a", "b", "c"];
            Word::new(
                v.into_iter()
                    .filter(|&(_, e)| e != 0)
                    .map(|(i, e)| (g(names[i]), BigInt::from(e))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn free_reduce_idempotent(word in arb_word()) {
            let once = word.free_reduce();
            prop_assert!(once.is_normalized());
            prop_assert_eq!(once.free_reduce(), once);
        }

        #[test]
        fn word_times_inverse_is_trivial(word in arb_word()) {
            prop_assert!(word.concat(&word.invert()).free_reduce().is_empty());
        }

        #[test]
        fn parse_inverts_printer(word in arb_word()) {
            let alphabet = Alphabet::from_names(["a", "b", "c"]).unwrap();
            let normal = word.free_reduce();
            prop_assert_eq!(parse_word(&normal.to_string(), &alphabet).unwrap(), normal);
        }
    }
}
