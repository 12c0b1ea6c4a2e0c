//! Tweet tokenization.
//!
//! Rules: input is lowercased and split on whitespace. Handles (`@...`) and
//! hashtags (`#...`) are kept as single tokens including the sigil, URLs are
//! kept verbatim, and punctuation is stripped from ordinary word tokens.
//! Elongated spellings ("yaaaa") are left untouched.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Word,
    Handle,
    Hashtag,
    Url,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn new(surface: impl Into<String>, kind: TokenKind) -> Self {
        let surface = surface.into();
        debug_assert!(!surface.is_empty());
        Token { surface, kind }
    }

    /// Classify an arbitrary surface string by the tokenizer's rules.
    ///
    /// Used for vocabulary entries that did not pass through [`tokenize`],
    /// e.g. words read back from an embedding file.
    pub fn classify(surface: &str) -> TokenKind {
        if is_url(surface) {
            TokenKind::Url
        } else if surface.starts_with('@') {
            TokenKind::Handle
        } else if surface.starts_with('#') {
            TokenKind::Hashtag
        } else if !surface.is_empty() && surface.chars().all(char::is_alphanumeric) {
            TokenKind::Word
        } else {
            TokenKind::Other
        }
    }
}

/// URL pattern: a scheme prefix `http://` / `https://`, or a leading `www.`.
fn is_url(piece: &str) -> bool {
    (piece.starts_with("http://") && piece.len() > 7)
        || (piece.starts_with("https://") && piece.len() > 8)
        || (piece.starts_with("www.") && piece.len() > 4)
}

fn is_tag_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Longest leading run of handle/hashtag body characters after the sigil.
fn sigil_token(piece: &str, kind: TokenKind) -> Option<Token> {
    let body: String = piece.chars().skip(1).take_while(|&c| is_tag_char(c)).collect();
    if body.is_empty() {
        return None;
    }
    let sigil = piece.chars().next().unwrap();
    Some(Token::new(format!("{sigil}{body}"), kind))
}

/// Split `text` into lowercased tokens. Empty input yields an empty sequence.
pub fn tokenize(text: &str) -> Vec<Token> {
    let lowered = text.to_lowercase();
    let mut tokens = Vec::new();
    for piece in lowered.split_whitespace() {
        if is_url(piece) {
            tokens.push(Token::new(piece, TokenKind::Url));
        } else if piece.starts_with('@') {
            if let Some(t) = sigil_token(piece, TokenKind::Handle) {
                tokens.push(t);
            }
        } else if piece.starts_with('#') {
            if let Some(t) = sigil_token(piece, TokenKind::Hashtag) {
                tokens.push(t);
            }
        } else {
            let word: String = piece.chars().filter(|c| c.is_alphanumeric()).collect();
            if !word.is_empty() {
                tokens.push(Token::new(word, TokenKind::Word));
            }
        }
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(tokens: &[Token]) -> Vec<&str> {
        tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    #[test]
    fn empty_input_yields_empty_sequence() {
        assert!(tokenize("").is_empty());
        assert!(tokenize("   \t\n").is_empty());
    }

    #[test]
    fn retweet_line() {
        let tokens = tokenize("RT @maduro Vota! #6D http://t.co/x");
        assert_eq!(
            surfaces(&tokens),
            ["rt", "@maduro", "vota", "#6d", "http://t.co/x"]
        );
        let kinds: Vec<TokenKind> = tokens.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            [
                TokenKind::Word,
                TokenKind::Handle,
                TokenKind::Word,
                TokenKind::Hashtag,
                TokenKind::Url
            ]
        );
    }

    #[test]
    fn case_folding() {
        assert_eq!(surfaces(&tokenize("VOTAR votar")), ["votar", "votar"]);
    }

    #[test]
    fn punctuation_stripped_from_words() {
        assert_eq!(surfaces(&tokenize("¡hola, mundo!")), ["hola", "mundo"]);
    }

    #[test]
    fn accents_and_elongation_preserved() {
        assert_eq!(surfaces(&tokenize("elección yaaaa")), ["elección", "yaaaa"]);
    }

    #[test]
    fn bare_sigils_dropped() {
        assert!(tokenize("@ #").is_empty());
        assert_eq!(surfaces(&tokenize("@!! x")), ["x"]);
    }

    #[test]
    fn trailing_punctuation_stripped_from_tags() {
        assert_eq!(surfaces(&tokenize("@maduro: #6D!")), ["@maduro", "#6d"]);
    }

    #[test]
    fn kind_invariants() {
        for t in tokenize("a @b #c http://d.e www.f.g x_y") {
            match t.kind {
                TokenKind::Handle => assert!(t.surface.starts_with('@')),
                TokenKind::Hashtag => assert!(t.surface.starts_with('#')),
                TokenKind::Url => assert!(super::is_url(&t.surface)),
                _ => {
                    assert!(!t.surface.starts_with('@') && !t.surface.starts_with('#'));
                }
            }
            assert!(!t.surface.is_empty());
        }
    }

    #[test]
    fn classify_matches_tokenizer_output() {
        for t in tokenize("rt @maduro vota #6d http://t.co/x") {
            assert_eq!(Token::classify(&t.surface), t.kind);
        }
        assert_eq!(Token::classify("a:b"), TokenKind::Other);
    }

    #[test]
    fn retokenizing_word_output_is_stable() {
        let first = tokenize("Algunos VOTARON ayer mismo");
        let joined = first
            .iter()
            .map(|t| t.surface.clone())
            .collect::<Vec<_>>()
            .join(" ");
        assert_eq!(tokenize(&joined), first);
    }
}
