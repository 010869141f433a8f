//! Tokenization, sentence segmentation and letter counting.
//!
//! Rules:
//!
//! * whitespace separates tokens and never appears inside one;
//! * a run of alphanumeric characters forms a token, with internal
//!   apostrophes (`don't`) and hyphens (`e-mail`) kept inside the run;
//! * digit groups may carry `,`/`.` separators between digits, a leading `$`
//!   and a trailing `%` (`$2,300.50`, `15%`);
//! * dotted single-letter acronyms (`U.S.`, `D.C.`) are one word token;
//! * every other non-whitespace character is a one-character punctuation token.
//!
//! A token containing at least one alphabetic character is a word, an
//! all-digit token is numeric. Character spans are byte offsets into the
//! source string.

use std::fmt;

use crate::error::{Error, Result};

/// Headline or passage text that is non-empty after trimming.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawText(String);

impl RawText {
    pub fn new(content: impl Into<String>) -> Result<Self> {
        let content = content.into();
        if content.trim().is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(RawText(content))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RawText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Numeric,
    Punctuation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
    /// Byte range `start..end` in the source text.
    pub span: (usize, usize),
}

impl Token {
    /// Word and numeric tokens; these are what counts as a "word" for every metric.
    pub fn is_lexical(&self) -> bool {
        matches!(self.kind, TokenKind::Word | TokenKind::Numeric)
    }

    pub fn letter_count(&self) -> usize {
        match self.kind {
            TokenKind::Word => self.surface.chars().filter(|c| c.is_alphabetic()).count(),
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizedText {
    source: RawText,
    tokens: Vec<Token>,
    sentence_breaks: Vec<usize>,
}

impl TokenizedText {
    pub fn source(&self) -> &RawText {
        &self.source
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Exclusive token indices at which sentences end: a break `b` means the
    /// sentence ends with `tokens[b - 1]`.
    pub fn sentence_breaks(&self) -> &[usize] {
        &self.sentence_breaks
    }

    /// Word and numeric tokens in order.
    pub fn lexical_tokens(&self) -> impl Iterator<Item = &Token> + '_ {
        self.tokens.iter().filter(|t| t.is_lexical())
    }

    /// Number of tokens of kind [`TokenKind::Word`].
    pub fn word_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.kind == TokenKind::Word).count()
    }

    /// Number of sentences. Trailing words without terminal punctuation form a
    /// final sentence, so any text with a word has at least one.
    pub fn sentence_count(&self) -> usize {
        let last = self.sentence_breaks.last().copied().unwrap_or(0);
        let trailing = self.tokens[last..].iter().any(Token::is_lexical);
        (self.sentence_breaks.len() + usize::from(trailing)).max(1)
    }

    /// Whether the lexical token at `index` (counting only word/numeric
    /// tokens) opens a sentence.
    pub fn sentence_initial_flags(&self) -> Vec<bool> {
        let mut flags = Vec::new();
        let mut breaks = self.sentence_breaks.iter().peekable();
        let mut at_start = true;
        for (i, token) in self.tokens.iter().enumerate() {
            while breaks.peek().is_some_and(|&&b| b <= i) {
                breaks.next();
                at_start = true;
            }
            if token.is_lexical() {
                flags.push(at_start);
                at_start = false;
            }
        }
        flags
    }
}

/// Tokenizes `text`, rejecting whitespace-only input.
pub fn tokenize(text: &str) -> Result<TokenizedText> {
    Ok(tokenize_raw(RawText::new(text)?))
}

pub fn tokenize_raw(source: RawText) -> TokenizedText {
    let tokens = split_tokens(source.as_str());
    let sentence_breaks = find_sentence_breaks(source.as_str(), &tokens);
    TokenizedText { source, tokens, sentence_breaks }
}

/// Alphabetic characters summed over word tokens.
pub fn count_letters(text: &TokenizedText) -> usize {
    text.tokens.iter().map(Token::letter_count).sum()
}

/// Word plus numeric tokens.
pub fn count_words(text: &TokenizedText) -> Result<usize> {
    match text.lexical_tokens().count() {
        0 => Err(Error::NoWords),
        n => Ok(n),
    }
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}')
}

fn is_hyphen(c: char) -> bool {
    matches!(c, '-' | '\u{2010}' | '\u{2011}')
}

fn is_digit(c: char) -> bool {
    c.is_numeric() && !c.is_alphabetic()
}

fn split_tokens(text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let n = chars.len();
    let end_of = |i: usize| if i < n { chars[i].0 } else { text.len() };
    let ch = |i: usize| if i < n { Some(chars[i].1) } else { None };

    let mut tokens = Vec::new();
    let mut i = 0;
    while i < n {
        let c = chars[i].1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }

        let start = i;
        let end = if let Some(len) = acronym_len(&chars[i..]) {
            i + len
        } else if c.is_alphanumeric() || (c == '$' && ch(i + 1).is_some_and(is_digit)) {
            scan_run(&chars, i)
        } else {
            i + 1
        };

        let surface = &text[chars[start].0..end_of(end)];
        let kind = if surface.chars().any(char::is_alphabetic) {
            TokenKind::Word
        } else if surface.chars().any(is_digit) {
            TokenKind::Numeric
        } else {
            TokenKind::Punctuation
        };
        tokens.push(Token { surface: surface.to_owned(), kind, span: (chars[start].0, end_of(end)) });
        i = end;
    }
    tokens
}

/// Length in chars of a dotted acronym such as `U.S.` starting at `chars[0]`.
fn acronym_len(chars: &[(usize, char)]) -> Option<usize> {
    let mut len = 0;
    let mut letters = 0;
    while let (Some(&(_, letter)), Some(&(_, dot))) = (chars.get(len), chars.get(len + 1)) {
        if !(letter.is_alphabetic() && dot == '.') {
            break;
        }
        letters += 1;
        len += 2;
    }
    let followed_by_alnum = chars.get(len).is_some_and(|&(_, c)| c.is_alphanumeric());
    (letters >= 2 && !followed_by_alnum).then_some(len)
}

/// End index (exclusive, in chars) of an alphanumeric run starting at `start`.
fn scan_run(chars: &[(usize, char)], start: usize) -> usize {
    let at = |i: usize| chars.get(i).map(|&(_, c)| c);
    let mut j = start;
    if at(j) == Some('$') {
        j += 1;
    }
    while let Some(c) = at(j) {
        let prev = if j > start { at(j - 1) } else { None };
        let next = at(j + 1);
        let inner_joiner = (is_apostrophe(c) || is_hyphen(c))
            && prev.is_some_and(char::is_alphanumeric)
            && next.is_some_and(char::is_alphanumeric);
        let digit_separator = (c == ',' || c == '.') && prev.is_some_and(is_digit) && next.is_some_and(is_digit);
        if c.is_alphanumeric() || inner_joiner || digit_separator {
            j += 1;
        } else if c == '%' && prev.is_some_and(is_digit) {
            j += 1;
            break;
        } else {
            break;
        }
    }
    j
}

const ABBREVIATIONS: &[&str] = &[
    "mr", "mrs", "ms", "dr", "prof", "sen", "rep", "gov", "gen", "lt", "col", "sgt", "st", "jr", "sr", "vs", "etc",
    "inc", "corp", "co", "ltd", "no", "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov",
    "dec", "pres", "u.s", "d.c",
];

fn is_terminal(token: &Token) -> bool {
    token.kind == TokenKind::Punctuation && matches!(token.surface.as_str(), "." | "!" | "?")
}

fn is_closing(token: &Token) -> bool {
    token.kind == TokenKind::Punctuation
        && matches!(token.surface.as_str(), "\"" | "'" | ")" | "]" | "\u{201d}" | "\u{2019}")
}

fn find_sentence_breaks(text: &str, tokens: &[Token]) -> Vec<usize> {
    let mut breaks = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        if !is_terminal(&tokens[i]) {
            i += 1;
            continue;
        }
        let run_start = i;
        while i + 1 < tokens.len() && is_terminal(&tokens[i + 1]) && tokens[i + 1].span.0 == tokens[i].span.1 {
            i += 1;
        }
        while i + 1 < tokens.len() && is_closing(&tokens[i + 1]) && tokens[i + 1].span.0 == tokens[i].span.1 {
            i += 1;
        }
        let followed_by_space_or_end = match tokens.get(i + 1) {
            None => true,
            Some(next) => text[tokens[i].span.1..next.span.0].chars().any(char::is_whitespace),
        };
        let abbreviation = tokens[run_start].surface == "."
            && run_start > 0
            && tokens[run_start - 1].kind == TokenKind::Word
            && tokens[run_start - 1].span.1 == tokens[run_start].span.0
            && ABBREVIATIONS.contains(&tokens[run_start - 1].surface.to_lowercase().as_str());
        if followed_by_space_or_end && !abbreviation {
            breaks.push(i + 1);
        }
        i += 1;
    }
    breaks
}
