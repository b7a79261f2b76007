//! Exact arithmetic in ℚ*, the modular homomorphism of a GBS graph, and the
//! certificates derived from it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_prime::nt_funcs::{factorize, factorize64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::britton::{BrittonError, WordTranslator};
use crate::gog::{GbsGraph, Step};
use crate::words::{Generator, Word};
use crate::zlinalg::{solve_row_combination, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("graph is not reduced")]
    NotReduced,
    #[error("graph is trivial")]
    Trivial,
    #[error("modular map is not balanced")]
    NotBalanced,
    #[error("modular map is balanced")]
    Balanced,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Britton(#[from] BrittonError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseQStarError {
    #[error("zero is not in Q*")]
    Zero,
    #[error("invalid rational '{0}'")]
    Invalid(String),
}

/// `±∏ p^e` with every stored exponent nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QStarElement {
    negative: bool,
    exponents: BTreeMap<BigInt, BigInt>,
}

fn prime_factors(n: &BigInt) -> BTreeMap<BigInt, BigInt> {
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        if small <= 1 {
            return BTreeMap::new();
        }
        return factorize64(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), BigInt::from(e)))
            .collect();
    }
    factorize(n.clone())
        .into_iter()
        .map(|(p, e): (BigUint, usize)| (BigInt::from_biguint(Sign::Plus, p), BigInt::from(e)))
        .collect()
}

impl QStarElement {
    pub fn one() -> Self {
        QStarElement::default()
    }

    pub fn minus_one() -> Self {
        QStarElement {
            negative: true,
            exponents: BTreeMap::new(),
        }
    }

    pub fn from_integer(n: &BigInt) -> Option<Self> {
        Self::from_ratio(n, &BigInt::one())
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if num.is_zero() || den.is_zero() {
            return None;
        }
        let mut exponents = prime_factors(num);
        for (p, e) in prime_factors(den) {
            *exponents.entry(p).or_insert_with(BigInt::zero) -= e;
        }
        exponents.retain(|_, e| !e.is_zero());
        Some(QStarElement {
            negative: num.is_negative() != den.is_negative(),
            exponents,
        })
    }

    pub fn from_parts(negative: bool, exponents: BTreeMap<BigInt, BigInt>) -> Self {
        let mut exponents = exponents;
        exponents.retain(|_, e| !e.is_zero());
        QStarElement {
            negative,
            exponents,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn exponents(&self) -> &BTreeMap<BigInt, BigInt> {
        &self.exponents
    }

    pub fn prime_exponent(&self, p: &BigInt) -> BigInt {
        self.exponents.get(p).cloned().unwrap_or_default()
    }

    /// Lies in `{±1}`.
    pub fn is_sign_only(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.exponents.is_empty()
    }

    pub fn abs(&self) -> Self {
        QStarElement {
            negative: false,
            exponents: self.exponents.clone(),
        }
    }

    pub fn mul(&self, other: &QStarElement) -> Self {
        let mut exponents = self.exponents.clone();
        for (p, e) in &other.exponents {
            *exponents.entry(p.clone()).or_insert_with(BigInt::zero) += e;
        }
        QStarElement::from_parts(self.negative != other.negative, exponents)
    }

    pub fn inv(&self) -> Self {
        QStarElement {
            negative: self.negative,
            exponents: self.exponents.iter().map(|(p, e)| (p.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &QStarElement) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: &BigInt) -> Self {
        QStarElement::from_parts(
            self.negative && k.is_odd(),
            self.exponents.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
        )
    }

    /// Numerator and positive denominator in lowest terms. Exponents are
    /// expected to be machine sized.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in &self.exponents {
            let k = e.abs().to_u32().expect("exponent fits in u32");
            if e.is_positive() {
                num *= p.pow(k);
            } else {
                den *= p.pow(k);
            }
        }
        if self.negative {
            num = -num;
        }
        (num, den)
    }
}

impl fmt::Display for QStarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.to_ratio();
        if den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

impl FromStr for QStarElement {
    type Err = ParseQStarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseQStarError::Invalid(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let well_formed = |t: &str, signed: bool| {
            let digits = if signed {
                t.strip_prefix(['+', '-']).unwrap_or(t)
            } else {
                t
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !well_formed(num, true) || !well_formed(den, false) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        QStarElement::from_ratio(&num, &den).ok_or(ParseQStarError::Zero)
    }
}

/// Finitely generated subgroup of ℚ*.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QStarSubgroup {
    generators: Vec<QStarElement>,
}

impl QStarSubgroup {
    pub fn new(generators: Vec<QStarElement>) -> Self {
        QStarSubgroup { generators }
    }

    pub fn generators(&self) -> &[QStarElement] {
        &self.generators
    }

    /// Contained in `{±1}`.
    pub fn is_sign_only(&self) -> bool {
        self.generators.iter().all(QStarElement::is_sign_only)
    }

    fn primes(&self, extra: &QStarElement) -> Vec<BigInt> {
        let mut set: BTreeSet<BigInt> = extra.exponents.keys().cloned().collect();
        for g in &self.generators {
            set.extend(g.exponents.keys().cloned());
        }
        set.into_iter().collect()
    }

    /// Integer exponents `c` with `∏ g_i^{c_i} = x`, if `x` is in the subgroup.
    pub fn express(&self, x: &QStarElement) -> Option<Vec<BigInt>> {
        let primes = self.primes(x);
        let coords = |q: &QStarElement| {
            let mut row = vec![BigInt::from(u8::from(q.negative))];
            row.extend(primes.iter().map(|p| q.prime_exponent(p)));
            row
        };
        let mut rows: Vec<Vec<BigInt>> = self.generators.iter().map(coords).collect();
        let mut parity = vec![BigInt::zero(); primes.len() + 1];
        parity[0] = BigInt::from(2);
        rows.push(parity);
        let m = IntMatrix::from_rows(primes.len() + 1, rows).expect("uniform rows");
        let mut c = solve_row_combination(&m, &coords(x)).expect("matching width")?;
        c.pop();
        Some(c)
    }

    pub fn contains(&self, x: &QStarElement) -> bool {
        self.express(x).is_some()
    }
}

/// Values of the modular homomorphism on the generators of the graph's
/// presentation, relative to the base vertex generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularMap {
    base_vertex: Generator,
    values: Vec<(Generator, QStarElement)>,
}

impl ModularMap {
    pub fn base_vertex(&self) -> &Generator {
        &self.base_vertex
    }

    pub fn values(&self) -> &[(Generator, QStarElement)] {
        &self.values
    }

    pub fn value(&self, g: &Generator) -> Option<&QStarElement> {
        self.values.iter().find(|(h, _)| h == g).map(|(_, q)| q)
    }

    pub fn image(&self) -> QStarSubgroup {
        QStarSubgroup::new(self.values.iter().map(|(_, q)| q.clone()).collect())
    }

    pub fn is_balanced(&self) -> bool {
        self.values.iter().all(|(_, q)| q.is_sign_only())
    }

    fn evaluate(&self, w: &Word) -> QStarElement {
        w.syllables().iter().fold(QStarElement::one(), |acc, s| {
            acc.mul(&self.value(&s.generator).expect("word over map").pow(&s.exponent))
        })
    }
}

pub fn is_balanced(delta: &ModularMap) -> bool {
    delta.is_balanced()
}

/// `g x^k g^-1 = x^l` for the base vertex generator `x`, with `k > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommensurationPair {
    pub generator: Generator,
    pub k: BigInt,
    pub l: BigInt,
}

/// Tracks `x_base^k = x_here^e` while walking along edges.
struct Transfer {
    k: BigInt,
    e: BigInt,
}

impl Transfer {
    fn start() -> Self {
        Transfer {
            k: BigInt::one(),
            e: BigInt::one(),
        }
    }

    fn cross(&mut self, from: &BigInt, to: &BigInt) {
        let scale = from.abs() / self.e.gcd(from);
        self.k *= &scale;
        self.e *= &scale;
        self.e = &self.e / from * to;
    }

    fn walk(&mut self, g: &GbsGraph, path: &[Step]) {
        for s in path {
            let (_, _, from, to) = g.edges()[s.edge].oriented(s.forward);
            self.cross(from, to);
        }
    }
}

/// One commensuration pair per presentation generator, each checked by the
/// word problem.
pub fn commensuration_pairs(
    g: &GbsGraph,
    base: &Generator,
) -> Result<Vec<CommensurationPair>, ModularError> {
    let b = g
        .vertex_index(base)
        .ok_or_else(|| ModularError::VerificationFailed(format!("unknown base vertex '{base}'")))?;
    let translator = WordTranslator::new(g);
    let layout = translator.layout();
    let mut pairs = Vec::new();
    for (w, vertex) in g.vertices().iter().enumerate() {
        let mut tr = Transfer::start();
        tr.walk(g, &layout.tree_path(g, b, w));
        pairs.push(CommensurationPair {
            generator: vertex.clone(),
            k: tr.k.clone(),
            l: tr.k,
        });
    }
    for (edge, letter) in layout.stable_letters() {
        let e = &g.edges()[*edge];
        let u = g.vertex_index(&e.u).expect("validated");
        let v = g.vertex_index(&e.v).expect("validated");
        let mut tr = Transfer::start();
        tr.walk(g, &layout.tree_path(g, b, u));
        tr.cross(&e.label_u, &e.label_v);
        tr.walk(g, &layout.tree_path(g, v, b));
        pairs.push(CommensurationPair {
            generator: letter.clone(),
            k: tr.k,
            l: tr.e,
        });
    }
    for pair in &pairs {
        let gw = Word::power(pair.generator.clone(), 1);
        let test = gw
            .concat(&Word::power(base.clone(), pair.k.clone()))
            .concat(&gw.invert())
            .concat(&Word::power(base.clone(), -&pair.l));
        if !translator.is_identity(&test)? {
            return Err(ModularError::VerificationFailed(format!(
                "{} does not conjugate {}^{} to {}^{}",
                pair.generator, base, pair.k, base, pair.l
            )));
        }
    }
    Ok(pairs)
}

/// The modular homomorphism at the smallest vertex of a reduced, nontrivial
/// graph: `Δ(g) = k/l` for `g x^k g^-1 = x^l`.
pub fn modular_map(g: &GbsGraph) -> Result<ModularMap, ModularError> {
    if !g.is_reduced() {
        return Err(ModularError::NotReduced);
    }
    if g.edges().is_empty() {
        return Err(ModularError::Trivial);
    }
    modular_map_at(g, &g.vertices()[0].clone())
}

/// Modular map at any vertex, without the reducedness precondition.
pub fn modular_map_at(g: &GbsGraph, base: &Generator) -> Result<ModularMap, ModularError> {
    let pairs = commensuration_pairs(g, base)?;
    let values = pairs
        .into_iter()
        .map(|p| {
            let q = QStarElement::from_ratio(&p.k, &p.l).expect("nonzero pair");
            (p.generator, q)
        })
        .collect();
    let map = ModularMap {
        base_vertex: base.clone(),
        values,
    };
    for r in g.to_presentation().relators() {
        if !map.evaluate(r).is_one() {
            return Err(ModularError::VerificationFailed(format!(
                "modular map does not respect relator {r}"
            )));
        }
    }
    Ok(map)
}

/// `p` with `<x^p>` normal, `x` the map's base vertex; the lcm of the
/// commensuration exponents, confirmed by the word problem.
pub fn normal_power_exponent(g: &GbsGraph, delta: &ModularMap) -> Result<BigInt, ModularError> {
    if !delta.is_balanced() {
        return Err(ModularError::NotBalanced);
    }
    let base = delta.base_vertex();
    let pairs = commensuration_pairs(g, base)?;
    let mut p = BigInt::one();
    for pair in &pairs {
        if pair.l.abs() != pair.k {
            return Err(ModularError::NotBalanced);
        }
        p = p.lcm(&pair.k);
    }
    if WordTranslator::new(g).normal_signs_at(base, &p).is_none() {
        return Err(ModularError::VerificationFailed(format!(
            "<{base}^{p}> is not normal"
        )));
    }
    Ok(p)
}

/// Homomorphism onto ℤ from the exponent of the smallest prime in `|Δ|`,
/// divided by the gcd of its values.
pub fn z_surjection_witness(
    g: &GbsGraph,
    delta: &ModularMap,
) -> Result<Vec<(Generator, BigInt)>, ModularError> {
    let q = delta
        .values()
        .iter()
        .filter_map(|(_, v)| v.exponents().keys().next())
        .min()
        .cloned()
        .ok_or(ModularError::Balanced)?;
    let mut witness: Vec<(Generator, BigInt)> = delta
        .values()
        .iter()
        .map(|(gen, v)| (gen.clone(), v.prime_exponent(&q)))
        .collect();
    let d = witness.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
    for (_, x) in &mut witness {
        *x = &*x / &d;
    }
    check_homomorphism(g, &witness)?;
    Ok(witness)
}

/// Confirms an integer assignment kills every relator and is nonzero.
pub fn check_homomorphism(g: &GbsGraph, witness: &[(Generator, BigInt)]) -> Result<(), ModularError> {
    let value = |gen: &Generator| {
        witness
            .iter()
            .find(|(h, _)| h == gen)
            .map(|(_, x)| x.clone())
            .unwrap_or_default()
    };
    if witness.iter().all(|(_, x)| x.is_zero()) {
        return Err(ModularError::VerificationFailed("witness is zero".into()));
    }
    for r in g.to_presentation().relators() {
        let total: BigInt = r.syllables().iter().map(|s| value(&s.generator) * &s.exponent).sum();
        if !total.is_zero() {
            return Err(ModularError::VerificationFailed(format!(
                "witness does not kill relator {r}"
            )));
        }
    }
    Ok(())
}
