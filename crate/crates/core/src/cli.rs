//! The `splitz v1` text format and the command pipeline behind the binary.
//!
//! ```text
//! format splitz v1
//! gbs
//! vertex x
//! edge e1 x x 2 3
//! end
//! ```

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::britton::{is_identity, BrittonError};
use crate::classify::{
    classify_gbs, classify_splitting, free_subgroup_check_gbs, free_subgroup_check_splitting,
    ClassifyError, Report, SqStatus, Trichotomy,
};
use crate::gog::{
    AnnotatedSplitting, Annotations, Commensuration, EdgeIndex, FactorAnnotations, GbsEdge,
    GbsGraph, GogError, SplittingError, SplittingKind,
};
use crate::modular::{modular_map, ModularError, QStarElement};
use crate::presentations::{fingerprint, ExceptionalGroup, FinitePresentation, PresentationError};
use crate::words::{parse_word, Alphabet, Generator, Word, WordError};

pub const HEADER: &str = "format splitz v1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_SEMANTIC: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Semantic(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io(_) => EXIT_PARSE,
            CliError::Semantic(_) => EXIT_SEMANTIC,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }
}

impl From<GogError> for CliError {
    fn from(e: GogError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<SplittingError> for CliError {
    fn from(e: SplittingError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::VerificationFailed(m) => CliError::Verification(m),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<ModularError> for CliError {
    fn from(e: ModularError) -> Self {
        match e {
            ModularError::VerificationFailed(m) => CliError::Verification(m),
            other => CliError::Semantic(other.to_string()),
        }
    }
}

impl From<BrittonError> for CliError {
    fn from(e: BrittonError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum InputDocument {
    Gbs(GbsGraph),
    Splitting(AnnotatedSplitting),
    Presentation(FinitePresentation),
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::Gbs(_) => "gbs",
            InputDocument::Splitting(s) if s.is_amalgam() => "amalgam",
            InputDocument::Splitting(_) => "hnn",
            InputDocument::Presentation(_) => "presentation",
        }
    }

    /// Presentation of the whole group.
    pub fn presentation(&self) -> FinitePresentation {
        match self {
            InputDocument::Gbs(g) => g.to_presentation(),
            InputDocument::Splitting(s) => s.combined_presentation(),
            InputDocument::Presentation(p) => p.clone(),
        }
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_factor(
    f: &mut fmt::Formatter<'_>,
    gens_kw: &str,
    rel_kw: &str,
    p: &FinitePresentation,
) -> fmt::Result {
    writeln!(f, "{gens_kw} {}", join(p.generators()))?;
    for r in p.relators() {
        writeln!(f, "{rel_kw} {r}")?;
    }
    Ok(())
}

fn write_annotations(f: &mut fmt::Formatter<'_>, side: &str, a: &FactorAnnotations) -> fmt::Result {
    if let Some(s) = a.s_normal {
        writeln!(f, "annotate snormal{side} {}", if s { "yes" } else { "no" })?;
    }
    if let Some(gens) = &a.modular_image {
        writeln!(f, "annotate modimage{side} {}", join(gens))?;
    }
    if let Some(i) = a.index {
        writeln!(f, "annotate index{side} {i}")?;
    }
    Ok(())
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "{}", self.kind())?;
        match self {
            InputDocument::Gbs(g) => {
                for v in g.vertices() {
                    writeln!(f, "vertex {v}")?;
                }
                for e in g.edges() {
                    writeln!(f, "edge {} {} {} {} {}", e.id, e.u, e.v, e.label_u, e.label_v)?;
                }
            }
            InputDocument::Presentation(p) => write_factor(f, "gens", "rel", p)?,
            InputDocument::Splitting(s) => {
                let ann = s.annotations();
                match s.kind() {
                    SplittingKind::Amalgam { a, b, c_a, c_b } => {
                        write_factor(f, "factorA gens", "relA", a)?;
                        write_factor(f, "factorB gens", "relB", b)?;
                        writeln!(f, "edgeA {c_a}")?;
                        writeln!(f, "edgeB {c_b}")?;
                        write_annotations(f, "A", &ann.first)?;
                        write_annotations(f, "B", &ann.second)?;
                    }
                    SplittingKind::Hnn { base, a, b } => {
                        write_factor(f, "base gens", "rel", base)?;
                        writeln!(f, "edgeA {a}")?;
                        writeln!(f, "edgeB {b}")?;
                        write_annotations(f, "", &ann.first)?;
                        match &ann.commensuration {
                            Some(Commensuration::Powers { r, s }) => {
                                writeln!(f, "annotate commensurate {r} {s}")?
                            }
                            Some(Commensuration::Disjoint) => {
                                writeln!(f, "annotate commensurate disjoint")?
                            }
                            None => {}
                        }
                    }
                }
            }
        }
        writeln!(f, "end")
    }
}

// ---------------------------------------------------------------------------
// Parsing.

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    raw: &'a str,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn token_error(&self, i: usize, message: impl Into<String>) -> CliError {
        let column = self
            .tokens
            .get(i)
            .map(|t| t.column)
            .unwrap_or_else(|| self.raw.chars().count() + 1);
        self.error(column, message)
    }

    /// Text from token `i` to the end of the line, with its column.
    fn rest(&self, i: usize) -> Option<(&'a str, usize)> {
        let t = self.tokens.get(i)?;
        let byte = self.raw.char_indices().nth(t.column - 1).map(|(b, _)| b)?;
        Some((&self.raw[byte..], t.column))
    }

    fn expect_len(&self, n: usize, usage: &str) -> Result<(), CliError> {
        if self.tokens.len() != n {
            let i = self.tokens.len().min(n);
            return Err(self.token_error(i, format!("expected `{usage}`")));
        }
        Ok(())
    }
}

fn lex(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start: Option<(usize, usize)> = None;
            for (col, (byte, c)) in content.char_indices().enumerate() {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some((byte, col + 1)),
                    (true, Some((b, column))) => {
                        tokens.push(Token {
                            text: &content[b..byte],
                            column,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((b, column)) = start {
                tokens.push(Token {
                    text: &content[b..],
                    column,
                });
            }
            Line {
                number: i + 1,
                raw: content,
                tokens,
            }
        })
        .filter(|l| !l.tokens.is_empty())
        .collect()
}

fn parse_name(line: &Line<'_>, i: usize) -> Result<Generator, CliError> {
    let t = &line.tokens[i];
    Generator::new(t.text).map_err(|_| line.token_error(i, format!("invalid name '{}'", t.text)))
}

fn parse_int(line: &Line<'_>, i: usize) -> Result<BigInt, CliError> {
    let t = &line.tokens[i];
    let digits = t.text.strip_prefix(['+', '-']).unwrap_or(t.text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(line.token_error(i, format!("expected an integer, found '{}'", t.text)));
    }
    Ok(t.text.parse().expect("checked digits"))
}

fn parse_word_at(line: &Line<'_>, i: usize, alphabet: &Alphabet) -> Result<Word, CliError> {
    let Some((text, column)) = line.rest(i) else {
        return Err(line.token_error(i, "expected a word"));
    };
    parse_word(text, alphabet).map_err(|e| match e {
        WordError::SyntaxError { position, message } => line.error(column + position - 1, message),
        WordError::UnknownGenerator(name) => {
            let offset = line
                .tokens
                .iter()
                .skip(i)
                .find(|t| t.text.contains(name.as_str()))
                .map(|t| t.column + t.text.find(name.as_str()).unwrap_or(0))
                .unwrap_or(column);
            line.error(offset, format!("unknown generator '{name}'"))
        }
        other => line.error(column, other.to_string()),
    })
}

#[derive(Default)]
struct FactorText<'a> {
    gens: Option<(Vec<Generator>, usize)>,
    rels: Vec<(Line<'a>, usize)>,
    edge: Vec<(Line<'a>, usize)>,
}

impl<'a> FactorText<'a> {
    fn set_gens(&mut self, line: &Line<'a>, first: usize) -> Result<(), CliError> {
        if self.gens.is_some() {
            return Err(line.token_error(0, "generators declared twice"));
        }
        let gens = (first..line.tokens.len())
            .map(|i| parse_name(line, i))
            .collect::<Result<Vec<_>, _>>()?;
        self.gens = Some((gens, line.number));
        Ok(())
    }

    fn build(&self, what: &str, end_line: usize) -> Result<(FinitePresentation, Alphabet), CliError> {
        let Some((gens, _)) = &self.gens else {
            return Err(CliError::Parse {
                line: end_line,
                column: 1,
                message: format!("missing {what} generators"),
            });
        };
        let alphabet = Alphabet::new(gens.iter().cloned());
        let rels = self
            .rels
            .iter()
            .map(|(line, i)| parse_word_at(line, *i, &alphabet))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((FinitePresentation::new(gens.clone(), rels)?, alphabet))
    }
}

fn edge_word(
    slot: &[(Line<'_>, usize)],
    name: &str,
    alphabet: &Alphabet,
    end_line: usize,
) -> Result<Word, CliError> {
    match slot {
        [(line, i)] => parse_word_at(line, *i, alphabet),
        [] => Err(CliError::Parse {
            line: end_line,
            column: 1,
            message: format!("missing {name}"),
        }),
        [_, (line, _), ..] => Err(line.token_error(0, format!("{name} given twice"))),
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: &Line<'_>, what: &str) -> Result<(), CliError> {
    if slot.is_some() {
        return Err(line.token_error(1, format!("{what} given twice")));
    }
    *slot = Some(value);
    Ok(())
}

/// Applies one `annotate` line. `side` is "A", "B" or "" (HNN).
fn annotate(
    line: &Line<'_>,
    sides: &[&str],
    factors: &mut [FactorAnnotations],
    commensuration: Option<&mut Option<Commensuration>>,
) -> Result<(), CliError> {
    if line.tokens.len() < 3 {
        return Err(line.token_error(line.tokens.len(), "incomplete annotation"));
    }
    let key = line.tokens[1].text;
    if key == "commensurate" {
        let Some(slot) = commensuration else {
            return Err(line.token_error(1, "commensurate applies to hnn blocks only"));
        };
        let value = if line.tokens[2].text == "disjoint" {
            line.expect_len(3, "annotate commensurate disjoint")?;
            Commensuration::Disjoint
        } else {
            line.expect_len(4, "annotate commensurate <r> <s>")?;
            Commensuration::Powers {
                r: parse_int(line, 2)?,
                s: parse_int(line, 3)?,
            }
        };
        return set_once(slot, value, line, "commensurate");
    }
    for (side, factor) in sides.iter().zip(factors.iter_mut()) {
        if key == format!("snormal{side}") {
            line.expect_len(3, &format!("annotate snormal{side} yes|no"))?;
            let v = match line.tokens[2].text {
                "yes" => true,
                "no" => false,
                other => return Err(line.token_error(2, format!("expected yes or no, found '{other}'"))),
            };
            return set_once(&mut factor.s_normal, v, line, key);
        }
        if key == format!("modimage{side}") {
            let values = (2..line.tokens.len())
                .map(|i| {
                    QStarElement::from_str(line.tokens[i].text)
                        .map_err(|e| line.token_error(i, e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return set_once(&mut factor.modular_image, values, line, key);
        }
        if !side.is_empty() && key == format!("index{side}") {
            line.expect_len(3, &format!("annotate index{side} 2|>2"))?;
            let v = match line.tokens[2].text {
                "2" => EdgeIndex::Two,
                ">2" => EdgeIndex::MoreThanTwo,
                other => return Err(line.token_error(2, format!("expected 2 or >2, found '{other}'"))),
            };
            return set_once(&mut factor.index, v, line, key);
        }
    }
    Err(line.token_error(1, format!("unknown annotation '{key}'")))
}

fn parse_gbs(body: &[Line<'_>]) -> Result<InputDocument, CliError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for line in body {
        match line.tokens[0].text {
            "vertex" => {
                line.expect_len(2, "vertex <name>")?;
                vertices.push(parse_name(line, 1)?);
            }
            "edge" => {
                line.expect_len(6, "edge <id> <u> <v> <m> <n>")?;
                edges.push(GbsEdge {
                    id: line.tokens[1].text.to_string(),
                    u: parse_name(line, 2)?,
                    v: parse_name(line, 3)?,
                    label_u: parse_int(line, 4)?,
                    label_v: parse_int(line, 5)?,
                });
            }
            other => return Err(line.token_error(0, format!("unexpected '{other}' in gbs block"))),
        }
    }
    Ok(InputDocument::Gbs(GbsGraph::new(vertices, edges)?))
}

fn parse_presentation(body: &[Line<'_>], end_line: usize) -> Result<InputDocument, CliError> {
    let mut factor = FactorText::default();
    for line in body {
        match line.tokens[0].text {
            "gens" => factor.set_gens(line, 1)?,
            "rel" => factor.rels.push((line.clone(), 1)),
            other => {
                return Err(line.token_error(0, format!("unexpected '{other}' in presentation block")))
            }
        }
    }
    Ok(InputDocument::Presentation(factor.build("presentation", end_line)?.0))
}

fn expect_gens_keyword(line: &Line<'_>) -> Result<(), CliError> {
    if line.tokens.get(1).map(|t| t.text) != Some("gens") {
        return Err(line.token_error(1, format!("expected `{} gens ...`", line.tokens[0].text)));
    }
    Ok(())
}

fn parse_amalgam(body: &[Line<'_>], end_line: usize) -> Result<InputDocument, CliError> {
    let mut fa = FactorText::default();
    let mut fb = FactorText::default();
    let mut factors = [FactorAnnotations::default(), FactorAnnotations::default()];
    for line in body {
        match line.tokens[0].text {
            "factorA" => {
                expect_gens_keyword(line)?;
                fa.set_gens(line, 2)?
            }
            "factorB" => {
                expect_gens_keyword(line)?;
                fb.set_gens(line, 2)?
            }
            "relA" => fa.rels.push((line.clone(), 1)),
            "relB" => fb.rels.push((line.clone(), 1)),
            "edgeA" => fa.edge.push((line.clone(), 1)),
            "edgeB" => fb.edge.push((line.clone(), 1)),
            "annotate" => annotate(line, &["A", "B"], &mut factors, None)?,
            other => return Err(line.token_error(0, format!("unexpected '{other}' in amalgam block"))),
        }
    }
    let (a, alpha_a) = fa.build("factorA", end_line)?;
    let (b, alpha_b) = fb.build("factorB", end_line)?;
    let c_a = edge_word(&fa.edge, "edgeA", &alpha_a, end_line)?;
    let c_b = edge_word(&fb.edge, "edgeB", &alpha_b, end_line)?;
    let [first, second] = factors;
    let s = AnnotatedSplitting::new(
        SplittingKind::Amalgam { a, b, c_a, c_b },
        Annotations {
            first,
            second,
            commensuration: None,
        },
    )?;
    Ok(InputDocument::Splitting(s))
}

fn parse_hnn(body: &[Line<'_>], end_line: usize) -> Result<InputDocument, CliError> {
    let mut base = FactorText::default();
    let mut edge_b = Vec::new();
    let mut factors = [FactorAnnotations::default()];
    let mut commensuration = None;
    for line in body {
        match line.tokens[0].text {
            "base" => {
                expect_gens_keyword(line)?;
                base.set_gens(line, 2)?
            }
            "rel" => base.rels.push((line.clone(), 1)),
            "edgeA" => base.edge.push((line.clone(), 1)),
            "edgeB" => edge_b.push((line.clone(), 1)),
            "annotate" => annotate(line, &[""], &mut factors, Some(&mut commensuration))?,
            other => return Err(line.token_error(0, format!("unexpected '{other}' in hnn block"))),
        }
    }
    let (h, alphabet) = base.build("base", end_line)?;
    let a = edge_word(&base.edge, "edgeA", &alphabet, end_line)?;
    let b = edge_word(&edge_b, "edgeB", &alphabet, end_line)?;
    let [first] = factors;
    let s = AnnotatedSplitting::new(
        SplittingKind::Hnn { base: h, a, b },
        Annotations {
            first,
            second: FactorAnnotations::default(),
            commensuration,
        },
    )?;
    Ok(InputDocument::Splitting(s))
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let lines = lex(text);
    let Some(header) = lines.first() else {
        return Err(CliError::Parse {
            line: 1,
            column: 1,
            message: format!("expected `{HEADER}`"),
        });
    };
    let words: Vec<&str> = header.tokens.iter().map(|t| t.text).collect();
    if words != ["format", "splitz", "v1"] {
        return Err(header.token_error(0, format!("expected `{HEADER}`")));
    }
    let Some(kind_line) = lines.get(1) else {
        return Err(header.error(1, "missing block after the header"));
    };
    kind_line.expect_len(1, "gbs | amalgam | hnn | presentation")?;
    let Some(end) = lines.iter().position(|l| l.tokens[0].text == "end") else {
        let last = lines.last().expect("nonempty");
        return Err(last.error(1, "block is not terminated by `end`"));
    };
    if end < 2 && end != 2 {
        return Err(lines[end].error(1, "`end` before any block"));
    }
    lines[end].expect_len(1, "end")?;
    if let Some(extra) = lines.get(end + 1) {
        return Err(extra.token_error(0, "content after `end`"));
    }
    let end_line = lines[end].number;
    let body = &lines[2..end];
    match kind_line.tokens[0].text {
        "gbs" => parse_gbs(body),
        "amalgam" => parse_amalgam(body, end_line),
        "hnn" => parse_hnn(body, end_line),
        "presentation" => parse_presentation(body, end_line),
        other => Err(kind_line.token_error(0, format!("unknown block '{other}'"))),
    }
}

// ---------------------------------------------------------------------------
// Commands.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Reduce,
    Abelianize,
    Fingerprint,
    Word,
    Modular,
    Dot,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Classify,
        Command::Reduce,
        Command::Abelianize,
        Command::Fingerprint,
        Command::Word,
        Command::Modular,
        Command::Dot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Reduce => "reduce",
            Command::Abelianize => "abelianize",
            Command::Fingerprint => "fingerprint",
            Command::Word => "word",
            Command::Modular => "modular",
            Command::Dot => "dot",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flags {
    pub k_max: u64,
    pub word: Option<String>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            k_max: crate::classify::DEFAULT_K_MAX,
            word: None,
        }
    }
}

fn need_gbs(doc: &InputDocument, command: Command) -> Result<&GbsGraph, CliError> {
    match doc {
        InputDocument::Gbs(g) => Ok(g),
        other => Err(CliError::Semantic(format!(
            "{} needs a gbs block, not {}",
            command.name(),
            other.kind()
        ))),
    }
}

/// Key-value rendering of a classification report.
pub fn render_report(report: &Report, free: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trichotomy = {}", report.trichotomy.key());
    match &report.trichotomy {
        Trichotomy::SurjectsZ(w) => {
            for (g, x) in w {
                let _ = writeln!(out, "witness.{g} = {x}");
            }
        }
        Trichotomy::CyclicNormal { base, p } => {
            let _ = writeln!(out, "witness.base = {base}");
            match p {
                Some(p) => {
                    let _ = writeln!(out, "witness.p = {p}");
                }
                None => {
                    let _ = writeln!(out, "witness.p = unknown");
                }
            }
        }
        Trichotomy::Degenerate(reason) => {
            let _ = writeln!(out, "degenerate_reason = {reason}");
        }
        Trichotomy::AcylindricallyHyperbolic => {}
    }
    let _ = writeln!(out, "sq_status = {}", report.sq.key());
    match &report.sq {
        SqStatus::Exceptional(id) => {
            let _ = writeln!(out, "exceptional = {id}");
        }
        SqStatus::SqUniversal(cert) => {
            if let Some(k) = cert.k {
                let _ = writeln!(out, "certificate.k = {k}");
            }
        }
        SqStatus::UndeterminedByPaper(reason) => {
            let _ = writeln!(out, "undetermined_reason = {reason}");
        }
    }
    let _ = writeln!(out, "not_simple = {}", report.not_simple);
    let _ = writeln!(out, "free_subgroup = {free}");
    let _ = writeln!(out, "cites = {}", report.citations.join(","));
    for fact in &report.asserted_facts {
        let _ = writeln!(out, "asserted = {fact}");
    }
    for line in &report.justification {
        let _ = writeln!(out, "because = {line}");
    }
    out
}

pub fn run(command: Command, doc: &InputDocument, flags: &Flags) -> Result<String, CliError> {
    let mut out = String::new();
    match command {
        Command::Classify => match doc {
            InputDocument::Gbs(g) => {
                let report = classify_gbs(g, flags.k_max)?;
                out = render_report(&report, free_subgroup_check_gbs(g).key());
            }
            InputDocument::Splitting(s) => {
                let report = classify_splitting(s, flags.k_max)?;
                out = render_report(&report, free_subgroup_check_splitting(s).key());
            }
            InputDocument::Presentation(_) => {
                return Err(CliError::Semantic(
                    "classify needs a gbs, amalgam or hnn block".into(),
                ))
            }
        },
        Command::Reduce => {
            out = InputDocument::Gbs(need_gbs(doc, command)?.reduce()).to_string();
        }
        Command::Abelianize => {
            let _ = writeln!(out, "ab = {}", doc.presentation().abelianization());
        }
        Command::Fingerprint => {
            let p = doc.presentation();
            let fp = fingerprint(&p)?;
            let _ = writeln!(out, "ab = {}", fp.whole_group);
            let _ = writeln!(out, "index2_subgroups = {}", fp.index2_kernels.len());
            for k in &fp.index2_kernels {
                let _ = writeln!(out, "kernel = {k}");
            }
            match ExceptionalGroup::matching(&fp) {
                Some(g) => {
                    let _ = writeln!(out, "consistent_with = {g}");
                }
                None => {
                    let _ = writeln!(out, "consistent_with = none");
                }
            }
        }
        Command::Word => {
            let g = need_gbs(doc, command)?;
            let text = flags
                .word
                .as_deref()
                .ok_or_else(|| CliError::Semantic("word needs --word".into()))?;
            let alphabet = g.to_presentation().alphabet();
            let w = parse_word(text, &alphabet)
                .map_err(|e| CliError::Semantic(format!("--word: {e}")))?;
            let _ = writeln!(out, "identity = {}", is_identity(g, &w)?);
        }
        Command::Modular => {
            let r = need_gbs(doc, command)?.reduce();
            let delta = modular_map(&r)?;
            let _ = writeln!(out, "base = {}", delta.base_vertex());
            for (g, q) in delta.values() {
                let _ = writeln!(out, "delta.{g} = {q}");
            }
            let _ = writeln!(out, "balanced = {}", delta.is_balanced());
        }
        Command::Dot => out = need_gbs(doc, command)?.to_dot(),
    }
    Ok(out)
}

/// Parses and runs, returning the report text or the error with its exit
/// code.
pub fn run_text(command: Command, text: &str, flags: &Flags) -> Result<String, CliError> {
    run(command, &parse_input(text)?, flags)
}
