//! Part-of-speech tagging and word-class proportions.
//!
//! Two taggers are available. The builtin one is a deterministic
//! lexicon-plus-rules tagger: a common-word lexicon with context
//! disambiguation, suffix rules for unknown words, a capitalization heuristic
//! for proper names and `CD` for numerals. The pretagged mode takes a
//! space-separated Penn Treebank tag string aligned with the word/numeric
//! tokens, so externally tagged data can be fed through unchanged.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::text::{TokenKind, TokenizedText};

const BUILTIN_LEXICON: &str = include_str!("../data/tagger_lexicon.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    NN,
    NNS,
    NNP,
    NNPS,
    VB,
    VBD,
    VBG,
    VBN,
    VBP,
    VBZ,
    MD,
    JJ,
    JJR,
    JJS,
    CD,
    DT,
    IN,
    PRP,
    RB,
    CC,
    TO,
    OTHER,
}

/// Penn Treebank tags outside the inventory; they collapse to `OTHER`.
const OTHER_PENN_TAGS: &[&str] = &[
    "EX", "FW", "LS", "PDT", "POS", "PRP$", "RBR", "RBS", "RP", "SYM", "UH", "WDT", "WP", "WP$", "WRB", ".", ",", ":",
    "``", "''", "(", ")", "-LRB-", "-RRB-", "#", "$", "HYPH", "NFP", "ADD", "AFX", "GW", "XX",
];

impl PosTag {
    pub const ALL: [PosTag; 22] = [
        PosTag::NN,
        PosTag::NNS,
        PosTag::NNP,
        PosTag::NNPS,
        PosTag::VB,
        PosTag::VBD,
        PosTag::VBG,
        PosTag::VBN,
        PosTag::VBP,
        PosTag::VBZ,
        PosTag::MD,
        PosTag::JJ,
        PosTag::JJR,
        PosTag::JJS,
        PosTag::CD,
        PosTag::DT,
        PosTag::IN,
        PosTag::PRP,
        PosTag::RB,
        PosTag::CC,
        PosTag::TO,
        PosTag::OTHER,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::NN => "NN",
            PosTag::NNS => "NNS",
            PosTag::NNP => "NNP",
            PosTag::NNPS => "NNPS",
            PosTag::VB => "VB",
            PosTag::VBD => "VBD",
            PosTag::VBG => "VBG",
            PosTag::VBN => "VBN",
            PosTag::VBP => "VBP",
            PosTag::VBZ => "VBZ",
            PosTag::MD => "MD",
            PosTag::JJ => "JJ",
            PosTag::JJR => "JJR",
            PosTag::JJS => "JJS",
            PosTag::CD => "CD",
            PosTag::DT => "DT",
            PosTag::IN => "IN",
            PosTag::PRP => "PRP",
            PosTag::RB => "RB",
            PosTag::CC => "CC",
            PosTag::TO => "TO",
            PosTag::OTHER => "OTHER",
        }
    }

    pub fn is_verb(self) -> bool {
        matches!(self, PosTag::VB | PosTag::VBD | PosTag::VBG | PosTag::VBN | PosTag::VBP | PosTag::VBZ)
    }

    pub fn is_adjective(self) -> bool {
        matches!(self, PosTag::JJ | PosTag::JJR | PosTag::JJS)
    }

    pub fn is_name(self) -> bool {
        matches!(self, PosTag::NNP | PosTag::NNPS)
    }

    fn is_noun(self) -> bool {
        matches!(self, PosTag::NN | PosTag::NNS)
    }

    fn is_finite_verb(self) -> bool {
        matches!(self, PosTag::VBZ | PosTag::VBD | PosTag::VBP)
    }

    fn is_closed_class(self) -> bool {
        matches!(self, PosTag::DT | PosTag::IN | PosTag::PRP | PosTag::CC | PosTag::TO | PosTag::MD | PosTag::OTHER)
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PosTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(tag) = PosTag::ALL.iter().find(|t| t.as_str() == s) {
            return Ok(*tag);
        }
        if OTHER_PENN_TAGS.contains(&s) {
            return Ok(PosTag::OTHER);
        }
        Err(Error::UnknownTag(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Tagger {
    #[default]
    Builtin,
    Pretagged,
}

impl FromStr for Tagger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "builtin" => Ok(Tagger::Builtin),
            "pretagged" => Ok(Tagger::Pretagged),
            other => Err(Error::InvalidArgument(format!("unknown tagger {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TaggedText<'a> {
    pub text: &'a TokenizedText,
    /// One tag per word/numeric token.
    pub tags: Vec<PosTag>,
}

/// Tags the word/numeric tokens of `text`. `pretags` is required for
/// [`Tagger::Pretagged`] and ignored by the builtin tagger.
pub fn tag<'a>(text: &'a TokenizedText, tagger: Tagger, pretags: Option<&str>) -> Result<TaggedText<'a>> {
    let tags = match tagger {
        Tagger::Builtin => BuiltinTagger::shared().tag_tokens(text),
        Tagger::Pretagged => parse_pretags(text, pretags.unwrap_or(""))?,
    };
    Ok(TaggedText { text, tags })
}

fn parse_pretags(text: &TokenizedText, pretags: &str) -> Result<Vec<PosTag>> {
    let raw: Vec<&str> = pretags.split_whitespace().collect();
    let lexical: Vec<_> = text.lexical_tokens().collect();
    if raw.len() != lexical.len() {
        return Err(Error::TagCountMismatch { expected: lexical.len(), found: raw.len() });
    }
    raw.iter()
        .zip(lexical)
        .map(|(s, token)| {
            let tag = s.parse::<PosTag>()?;
            // numerals are always CD
            Ok(if token.kind == TokenKind::Numeric { PosTag::CD } else { tag })
        })
        .collect()
}

#[derive(Debug, Clone)]
struct LexiconEntry {
    tags: Vec<PosTag>,
    capitalized: bool,
}

impl LexiconEntry {
    fn first(&self) -> PosTag {
        self.tags[0]
    }

    fn find(&self, pred: impl Fn(PosTag) -> bool) -> Option<PosTag> {
        self.tags.iter().copied().find(|&t| pred(t))
    }
}

/// Deterministic rule-based tagger backed by the bundled common-word lexicon.
#[derive(Debug, Clone)]
pub struct BuiltinTagger {
    lexicon: HashMap<String, LexiconEntry>,
}

const HAVE_FORMS: &[&str] = &["has", "have", "had", "having", "hasn't", "haven't"];
const BE_FORMS: &[&str] = &["is", "are", "was", "were", "be", "been", "being", "isn't", "aren't", "wasn't", "weren't"];

impl BuiltinTagger {
    pub fn shared() -> &'static BuiltinTagger {
        static TAGGER: OnceLock<BuiltinTagger> = OnceLock::new();
        TAGGER.get_or_init(|| BuiltinTagger::from_lexicon(BUILTIN_LEXICON).expect("bundled tagger lexicon is valid"))
    }

    /// Parses `word TAG [TAG ...]` lines; the first occurrence of a word wins.
    pub fn from_lexicon(source: &str) -> Result<Self> {
        let mut lexicon = HashMap::new();
        for (idx, line) in source.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let word = fields.next().expect("non-empty line has a field");
            let tags = fields.map(str::parse).collect::<Result<Vec<PosTag>>>()?;
            if tags.is_empty() {
                return Err(Error::ParseError { line: idx as u64 + 1, message: format!("no tags for {word:?}") });
            }
            let capitalized = word.chars().next().is_some_and(char::is_uppercase);
            lexicon.entry(word.to_lowercase()).or_insert(LexiconEntry { tags, capitalized });
        }
        Ok(BuiltinTagger { lexicon })
    }

    pub fn tag_tokens(&self, text: &TokenizedText) -> Vec<PosTag> {
        let tokens: Vec<_> = text.lexical_tokens().collect();
        let initial = text.sentence_initial_flags();
        let title_case = is_title_case(tokens.iter().map(|t| t.surface.as_str()));

        let mut tags: Vec<PosTag> = Vec::with_capacity(tokens.len());
        // a have/be form seen before, possibly with adverbs in between
        let mut after_auxiliary = false;
        for (i, token) in tokens.iter().enumerate() {
            let prev = tags.last().copied();
            let tag = if token.kind == TokenKind::Numeric {
                PosTag::CD
            } else {
                self.tag_word(&token.surface, prev, after_auxiliary, initial[i], title_case)
            };
            let lower = token.surface.to_lowercase();
            after_auxiliary = HAVE_FORMS.contains(&lower.as_str())
                || BE_FORMS.contains(&lower.as_str())
                || (after_auxiliary && tag == PosTag::RB);
            tags.push(tag);
        }
        tags
    }

    fn tag_word(
        &self,
        surface: &str,
        prev: Option<PosTag>,
        after_auxiliary: bool,
        initial: bool,
        title_case: bool,
    ) -> PosTag {
        let (base, possessive) = match surface.strip_suffix("'s").or_else(|| surface.strip_suffix("\u{2019}s")) {
            Some(base) if !base.is_empty() => (base, true),
            _ => (surface, false),
        };
        let lower = base.to_lowercase();
        let capitalized = base.chars().next().is_some_and(char::is_uppercase);
        let all_caps = base.chars().filter(|c| c.is_alphabetic()).count() > 1
            && base.chars().filter(|c| c.is_alphabetic()).all(char::is_uppercase);
        let entry = self.lexicon.get(&lower);

        if possessive {
            return if capitalized || entry.is_some_and(|e| e.first().is_name()) { PosTag::NNP } else { PosTag::NN };
        }

        if capitalized && lower != "i" {
            match entry {
                None => return PosTag::NNP,
                Some(e) if e.capitalized => return self.disambiguate(e, prev, after_auxiliary),
                Some(e) => {
                    let capitalization_is_cue = !initial && !title_case && !all_caps;
                    if capitalization_is_cue && !e.first().is_closed_class() {
                        return PosTag::NNP;
                    }
                    return self.disambiguate(e, prev, after_auxiliary);
                }
            }
        }

        match entry {
            Some(e) => self.disambiguate(e, prev, after_auxiliary),
            None => self.guess_unknown(&lower, prev, after_auxiliary),
        }
    }

    fn disambiguate(&self, entry: &LexiconEntry, prev: Option<PosTag>, after_auxiliary: bool) -> PosTag {
        if entry.tags.len() == 1 {
            return entry.first();
        }
        let choice = match prev {
            _ if after_auxiliary && entry.find(|t| t == PosTag::VBN).is_some() => Some(PosTag::VBN),
            Some(PosTag::MD | PosTag::TO) => entry.find(|t| t == PosTag::VB),
            Some(PosTag::DT | PosTag::JJ | PosTag::JJR | PosTag::JJS | PosTag::CD | PosTag::IN) => {
                entry.find(PosTag::is_noun).or_else(|| entry.find(PosTag::is_adjective))
            }
            Some(PosTag::NNP) => entry.find(PosTag::is_finite_verb),
            Some(PosTag::NNPS | PosTag::NNS | PosTag::PRP) => entry
                .find(|t| t == PosTag::VBP || t == PosTag::VBD)
                .or_else(|| entry.find(|t| t == PosTag::VB).map(|_| PosTag::VBP)),
            _ => None,
        };
        choice.unwrap_or_else(|| entry.first())
    }

    fn guess_unknown(&self, lower: &str, prev: Option<PosTag>, after_auxiliary: bool) -> PosTag {
        let len = lower.chars().count();
        let subject_before = matches!(prev, Some(PosTag::NNP | PosTag::NNPS | PosTag::PRP));
        if len > 4 && lower.ends_with("ing") {
            return PosTag::VBG;
        }
        if len > 3 && lower.ends_with("ed") {
            return if after_auxiliary { PosTag::VBN } else { PosTag::VBD };
        }
        if len > 3 && lower.ends_with("ly") {
            return PosTag::RB;
        }
        const NOUN_SUFFIXES: &[&str] =
            &["tion", "sion", "ment", "ness", "ity", "ship", "ism", "ance", "ence", "ist", "er", "or", "age", "ure"];
        const ADJ_SUFFIXES: &[&str] = &["ous", "ful", "ive", "able", "ible", "al", "ic", "less", "ish", "ary", "ian"];
        if len > 5 && lower.ends_with("est") {
            return PosTag::JJS;
        }
        if NOUN_SUFFIXES.iter().any(|s| len > s.len() + 2 && lower.ends_with(s)) {
            return PosTag::NN;
        }
        if ADJ_SUFFIXES.iter().any(|s| len > s.len() + 2 && lower.ends_with(s)) {
            return PosTag::JJ;
        }
        if matches!(prev, Some(PosTag::MD | PosTag::TO)) {
            return PosTag::VB;
        }
        if len > 3 && lower.ends_with('s') && !lower.ends_with("ss") && !lower.ends_with("us") && !lower.ends_with("is")
        {
            let stems = [&lower[..lower.len() - 1], lower.strip_suffix("es").unwrap_or("")];
            for stem in stems.iter().filter(|s| !s.is_empty()) {
                if let Some(e) = self.lexicon.get(*stem) {
                    let verb = e.find(|t| t == PosTag::VB || t == PosTag::VBP).is_some();
                    let noun = e.find(PosTag::is_noun).is_some();
                    return match (verb, noun) {
                        (true, true) if subject_before => PosTag::VBZ,
                        (true, false) => PosTag::VBZ,
                        _ => PosTag::NNS,
                    };
                }
            }
            return if subject_before { PosTag::VBZ } else { PosTag::NNS };
        }
        if lower.contains('-') {
            return PosTag::JJ;
        }
        PosTag::NN
    }
}

/// Most longer words capitalized, as in title-cased headlines, where
/// capitalization says nothing about proper names.
fn is_title_case<'a>(words: impl Iterator<Item = &'a str>) -> bool {
    let mut total = 0usize;
    let mut capitalized = 0usize;
    for word in words.skip(1).filter(|w| w.chars().filter(|c| c.is_alphabetic()).count() >= 4) {
        total += 1;
        if word.chars().next().is_some_and(char::is_uppercase) {
            capitalized += 1;
        }
    }
    total >= 2 && capitalized * 4 >= total * 3
}

/// Share of word/numeric tokens in each of the five tabled word classes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WordClassProportions {
    pub verb: f64,
    pub adjective: f64,
    pub modal: f64,
    pub name: f64,
    pub number: f64,
}

/// The five classes; modal is measured but is not a flagging cue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordClass {
    Adjective,
    Modal,
    Name,
    Number,
    Verb,
}

impl WordClass {
    pub const ALL: [WordClass; 5] =
        [WordClass::Adjective, WordClass::Modal, WordClass::Name, WordClass::Number, WordClass::Verb];

    pub fn as_str(self) -> &'static str {
        match self {
            WordClass::Adjective => "adjective",
            WordClass::Modal => "modal",
            WordClass::Name => "name",
            WordClass::Number => "number",
            WordClass::Verb => "verb",
        }
    }

    pub fn contains(self, tag: PosTag) -> bool {
        match self {
            WordClass::Adjective => tag.is_adjective(),
            WordClass::Modal => tag == PosTag::MD,
            WordClass::Name => tag.is_name(),
            WordClass::Number => tag == PosTag::CD,
            WordClass::Verb => tag.is_verb(),
        }
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WordClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WordClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown word class {s:?}")))
    }
}

impl WordClassProportions {
    pub fn from_tags(tags: &[PosTag]) -> Self {
        if tags.is_empty() {
            return Self::default();
        }
        let w = tags.len() as f64;
        let share = |class: WordClass| tags.iter().filter(|&&t| class.contains(t)).count() as f64 / w;
        WordClassProportions {
            verb: share(WordClass::Verb),
            adjective: share(WordClass::Adjective),
            modal: share(WordClass::Modal),
            name: share(WordClass::Name),
            number: share(WordClass::Number),
        }
    }

    pub fn get(&self, class: WordClass) -> f64 {
        match class {
            WordClass::Adjective => self.adjective,
            WordClass::Modal => self.modal,
            WordClass::Name => self.name,
            WordClass::Number => self.number,
            WordClass::Verb => self.verb,
        }
    }
}

pub fn word_class_proportions(tagged: &TaggedText<'_>) -> WordClassProportions {
    WordClassProportions::from_tags(&tagged.tags)
}
