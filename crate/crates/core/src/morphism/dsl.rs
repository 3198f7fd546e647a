//! The morphism-spec text format.
//!
//! ```text
//! # a binary morphism
//! alphabet: a b
//! a -> abab
//! b -> bb
//! ```
//!
//! The `alphabet:` line is optional and fixes the letter order; without it
//! the order is ascending over the rule heads. `#` starts a comment.

use crate::error::{ParseError, ParseErrorKind};
use crate::word::{is_letter, Alphabet, MAX_LETTERS};

use super::Morphism;

struct Rule {
    line: usize,
    head: char,
    image: String,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub(super) fn parse(text: &str) -> Result<Morphism, ParseError> {
    let mut declared: Option<(usize, Vec<char>)> = None;
    let mut rules: Vec<Rule> = Vec::new();
    let mut last_line = 1;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("alphabet:") {
            if declared.is_some() {
                return Err(err(line, ParseErrorKind::DuplicateAlphabet));
            }
            let mut letters = Vec::new();
            for token in rest.split_whitespace() {
                let mut chars = token.chars();
                let c = chars.next().expect("split_whitespace yields non-empty tokens");
                if chars.next().is_some() {
                    return Err(err(line, ParseErrorKind::BadHead(token.to_string())));
                }
                if !is_letter(c) {
                    return Err(err(line, ParseErrorKind::InvalidSymbol(c)));
                }
                if letters.contains(&c) {
                    return Err(err(line, ParseErrorKind::DuplicateLetter(c)));
                }
                letters.push(c);
            }
            if letters.len() > MAX_LETTERS {
                return Err(err(line, ParseErrorKind::AlphabetTooLarge(letters.len())));
            }
            if letters.is_empty() {
                return Err(err(line, ParseErrorKind::Malformed));
            }
            declared = Some((line, letters));
            continue;
        }

        let (head, image) = content.split_once("->").ok_or_else(|| err(line, ParseErrorKind::Malformed))?;
        let head = head.trim();
        let mut head_chars = head.chars();
        let c = match (head_chars.next(), head_chars.next()) {
            (Some(c), None) if is_letter(c) => c,
            _ => return Err(err(line, ParseErrorKind::BadHead(head.to_string()))),
        };
        let image: String = image.chars().filter(|c| !c.is_whitespace()).collect();
        if image.is_empty() {
            return Err(err(line, ParseErrorKind::Erasing(c)));
        }
        if let Some(bad) = image.chars().find(|&ch| !is_letter(ch)) {
            return Err(err(line, ParseErrorKind::InvalidSymbol(bad)));
        }
        if rules.iter().any(|r| r.head == c) {
            return Err(err(line, ParseErrorKind::DuplicateRule(c)));
        }
        rules.push(Rule { line, head: c, image });
    }

    if rules.is_empty() {
        return Err(err(last_line, ParseErrorKind::Empty));
    }

    let letters = match &declared {
        Some((decl_line, letters)) => {
            if let Some(r) = rules.iter().find(|r| !letters.contains(&r.head)) {
                return Err(err(r.line, ParseErrorKind::UnknownLetter(r.head)));
            }
            if let Some(&missing) = letters.iter().find(|c| !rules.iter().any(|r| r.head == **c)) {
                return Err(err(*decl_line, ParseErrorKind::MissingRule(missing)));
            }
            letters.clone()
        }
        None => {
            let mut heads: Vec<char> = rules.iter().map(|r| r.head).collect();
            if heads.len() > MAX_LETTERS {
                let line = rules[MAX_LETTERS].line;
                return Err(err(line, ParseErrorKind::AlphabetTooLarge(heads.len())));
            }
            heads.sort_unstable();
            heads
        }
    };

    let alphabet = Alphabet::new(letters).expect("letters validated above");
    let mut images = vec![Vec::new(); alphabet.len()];
    for rule in &rules {
        let mut ranks = Vec::with_capacity(rule.image.len());
        for ch in rule.image.chars() {
            let r = alphabet.rank(ch).ok_or_else(|| err(rule.line, ParseErrorKind::UnknownLetter(ch)))?;
            ranks.push(r);
        }
        let head = alphabet.rank(rule.head).expect("head checked against alphabet");
        images[head as usize] = ranks;
    }
    Ok(Morphism::new(alphabet, images).expect("images validated above"))
}

pub(super) fn serialize(m: &Morphism) -> String {
    let alphabet = m.alphabet();
    let mut out = String::from("alphabet:");
    for &c in alphabet.letters() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    for (rank, &c) in alphabet.letters().iter().enumerate() {
        out.push(c);
        out.push_str(" -> ");
        out.push_str(&alphabet.render(m.image(rank as u8)));
        out.push('\n');
    }
    out
}
