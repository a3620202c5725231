//! Domain types shared by the whole pipeline: sentences, spans, constituents
//! and triples, plus basic validation and measurement.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-token dependency information. `head` is `None` for the root token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepToken {
    pub head: Option<usize>,
    pub relation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upos: Option<String>,
}

/// Dependency parse over the words of one sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepParse {
    pub tokens: Vec<DepToken>,
}

impl DepParse {
    /// Index of the root token. Errors unless exactly one token is headless.
    pub fn root(&self) -> Result<usize> {
        let mut roots = self.tokens.iter().enumerate().filter(|(_, t)| t.head.is_none());
        let first = roots.next().map(|(i, _)| i);
        match (first, roots.next()) {
            (Some(i), None) => Ok(i),
            (None, _) => Err(Error::Parse("no root token".into())),
            (Some(_), Some(_)) => Err(Error::Parse("multiple root tokens".into())),
        }
    }

    /// Word indices whose head is `idx`.
    pub fn dependents(&self, idx: usize) -> Vec<usize> {
        (0..self.tokens.len()).filter(|&d| self.tokens[d].head == Some(idx)).collect()
    }
}

/// A tokenized sentence. Word-level indexing is used everywhere in the
/// pipeline; character offsets only tie tokens back to the original text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sentence {
    pub text: String,
    pub tokens: Vec<String>,
    /// Byte range of each token in `text`, strictly increasing.
    pub token_offsets: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parse: Option<DepParse>,
}

impl Sentence {
    /// Builds a sentence from raw text and its tokens, locating each token in
    /// the text left to right.
    pub fn new(text: impl Into<String>, tokens: Vec<String>) -> Result<Self> {
        let text = text.into();
        if tokens.is_empty() {
            return Err(Error::Data("sentence has no tokens".into()));
        }
        let mut offsets = Vec::with_capacity(tokens.len());
        let mut cursor = 0usize;
        for tok in &tokens {
            match text[cursor..].find(tok.as_str()) {
                Some(rel) => {
                    let start = cursor + rel;
                    offsets.push((start, start + tok.len()));
                    cursor = start + tok.len();
                }
                None => {
                    return Err(Error::Data(format!(
                        "token {tok:?} not found in sentence text after byte {cursor}"
                    )))
                }
            }
        }
        Ok(Sentence { text, tokens, token_offsets: offsets, parse: None })
    }

    /// Builds a sentence whose text is the tokens joined by single spaces.
    pub fn from_tokens<S: Into<String>>(tokens: Vec<S>) -> Result<Self> {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        let text = tokens.join(" ");
        Sentence::new(text, tokens)
    }

    pub fn with_parse(mut self, parse: DepParse) -> Result<Self> {
        if parse.tokens.len() != self.tokens.len() {
            return Err(Error::Parse(format!(
                "parse has {} tokens, sentence has {}",
                parse.tokens.len(),
                self.tokens.len()
            )));
        }
        parse.root()?;
        self.parse = Some(parse);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Surface form of a word span, tokens joined by single spaces.
    pub fn span_text(&self, span: Span) -> String {
        self.tokens[span.start..=span.end].join(" ")
    }
}

/// Contiguous word span, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Result<Self> {
        if start > end {
            return Err(Error::Data(format!("span start {start} > end {end}")));
        }
        Ok(Span { start, end })
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false // spans are at least one word by construction
    }

    pub fn contains(&self, word: usize) -> bool {
        self.start <= word && word <= self.end
    }

    pub fn overlaps(&self, other: &Span) -> bool {
        self.start <= other.end && other.start <= self.end
    }

    pub fn words(&self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }

    pub fn within(&self, sentence_len: usize) -> bool {
        self.end < sentence_len
    }
}

/// The two constituent types a span can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConstituentType {
    Argument,
    Predicate,
}

impl ConstituentType {
    pub fn label(self) -> Label {
        match self {
            ConstituentType::Argument => Label::Argument,
            ConstituentType::Predicate => Label::Predicate,
        }
    }
}

/// A typed word span: the subject/object arguments and the predicate of a
/// triple are all constituents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Constituent {
    pub span: Span,
    pub ctype: ConstituentType,
}

impl Constituent {
    pub fn new(start: usize, end: usize, ctype: ConstituentType) -> Result<Self> {
        Ok(Constituent { span: Span::new(start, end)?, ctype })
    }

    pub fn argument(start: usize, end: usize) -> Result<Self> {
        Constituent::new(start, end, ConstituentType::Argument)
    }

    pub fn predicate(start: usize, end: usize) -> Result<Self> {
        Constituent::new(start, end, ConstituentType::Predicate)
    }
}

/// Number of words covered by a constituent.
pub fn constituent_length(c: &Constituent) -> usize {
    c.span.len()
}

/// Cell labels of the pair table: constituent types, relation roles, or none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Argument,
    Predicate,
    Subject,
    Object,
    None,
}

impl Label {
    pub const COUNT: usize = 5;
    pub const ALL: [Label; 5] =
        [Label::Argument, Label::Predicate, Label::Subject, Label::Object, Label::None];
    /// Constituent-type labels.
    pub const CONSTITUENT: [Label; 2] = [Label::Argument, Label::Predicate];
    /// Relation-role labels.
    pub const RELATION: [Label; 2] = [Label::Subject, Label::Object];

    pub fn index(self) -> usize {
        match self {
            Label::Argument => 0,
            Label::Predicate => 1,
            Label::Subject => 2,
            Label::Object => 3,
            Label::None => 4,
        }
    }

    pub fn from_index(i: usize) -> Option<Label> {
        Label::ALL.get(i).copied()
    }

    pub fn letter(self) -> char {
        match self {
            Label::Argument => 'A',
            Label::Predicate => 'P',
            Label::Subject => 'S',
            Label::Object => 'O',
            Label::None => '\u{b7}', // middle dot
        }
    }
}

/// An extraction: subject and predicate are mandatory, the object may be
/// absent ("some may not have an object").
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Triple {
    pub subject: Constituent,
    pub predicate: Constituent,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<Constituent>,
    #[serde(default = "default_confidence")]
    pub confidence: f64,
}

fn default_confidence() -> f64 {
    1.0
}

impl Triple {
    pub fn new(subject: Constituent, predicate: Constituent, object: Option<Constituent>) -> Self {
        Triple { subject, predicate, object, confidence: 1.0 }
    }

    pub fn with_confidence(mut self, confidence: f64) -> Self {
        self.confidence = confidence;
        self
    }

    /// Constituents of this triple in subject, predicate, object order.
    pub fn constituents(&self) -> Vec<Constituent> {
        let mut out = vec![self.subject, self.predicate];
        if let Some(obj) = self.object {
            out.push(obj);
        }
        out
    }

    /// All spans lie inside a sentence of `len` words.
    pub fn within(&self, len: usize) -> bool {
        self.constituents().iter().all(|c| c.span.within(len))
    }
}

/// Checks the triple invariants, reporting the first violated one by name.
pub fn validate_triple(t: &Triple) -> Result<(), String> {
    if t.subject.ctype != ConstituentType::Argument {
        return Err("subject must be Argument".into());
    }
    if t.predicate.ctype != ConstituentType::Predicate {
        return Err("predicate must be Predicate".into());
    }
    if let Some(obj) = &t.object {
        if obj.ctype != ConstituentType::Argument {
            return Err("object must be Argument".into());
        }
    }
    let mut spans = vec![t.subject.span, t.predicate.span];
    if let Some(obj) = &t.object {
        spans.push(obj.span);
    }
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            if spans[i] == spans[j] {
                return Err("duplicate constituent role".into());
            }
        }
    }
    if !(0.0..=1.0).contains(&t.confidence) {
        return Err("confidence out of [0,1]".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beth_sentence() -> Sentence {
        Sentence::from_tokens(vec![
            "Beth", "was", "the", "second", "child", "of", "Henry", ",", "born", "in", "wedlock",
            ".",
        ])
        .unwrap()
    }

    #[test]
    fn constituent_length_single_word() {
        let c = Constituent::argument(0, 0).unwrap();
        assert_eq!(constituent_length(&c), 1);
    }

    #[test]
    fn constituent_length_five_word_argument() {
        // "the second child of Henry"
        let c = Constituent::argument(2, 6).unwrap();
        assert_eq!(constituent_length(&c), 5);
        assert_eq!(beth_sentence().span_text(c.span), "the second child of Henry");
    }

    #[test]
    fn constituent_length_arithmetic() {
        let c = Constituent::predicate(3, 7).unwrap();
        assert_eq!(constituent_length(&c), 5);
    }

    #[test]
    fn validate_accepts_well_formed_triple() {
        let t = Triple::new(
            Constituent::argument(0, 0).unwrap(),
            Constituent::predicate(1, 1).unwrap(),
            Some(Constituent::argument(2, 6).unwrap()),
        );
        assert!(validate_triple(&t).is_ok());
    }

    #[test]
    fn validate_rejects_predicate_typed_subject() {
        let t = Triple::new(
            Constituent::predicate(0, 0).unwrap(),
            Constituent::predicate(1, 1).unwrap(),
            None,
        );
        assert_eq!(validate_triple(&t).unwrap_err(), "subject must be Argument");
    }

    #[test]
    fn validate_rejects_duplicate_spans() {
        let t = Triple::new(
            Constituent::argument(0, 0).unwrap(),
            Constituent::predicate(1, 1).unwrap(),
            Some(Constituent::argument(0, 0).unwrap()),
        );
        assert_eq!(validate_triple(&t).unwrap_err(), "duplicate constituent role");
    }

    #[test]
    fn sentence_offsets_strictly_increasing() {
        let s = beth_sentence();
        for w in s.token_offsets.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
        assert_eq!(&s.text[s.token_offsets[0].0..s.token_offsets[0].1], "Beth");
    }

    #[test]
    fn sentence_rejects_unlocatable_token() {
        assert!(Sentence::new("Beth was", vec!["Beth".into(), "xyz".into()]).is_err());
    }

    #[test]
    fn parse_requires_single_root() {
        let parse = DepParse {
            tokens: vec![
                DepToken { head: None, relation: "root".into(), upos: None },
                DepToken { head: None, relation: "root".into(), upos: None },
            ],
        };
        assert!(parse.root().is_err());
    }
}
