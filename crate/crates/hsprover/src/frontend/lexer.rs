//! Tokenizer for the typed clausal input format.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Colon,
    Arrow, // >
    Star,
    Pipe,
    Tilde,
    Bang,
    Caret,
    Question,
    Equal,
    NotEqual,
    /// Identifiers, including `$`-words; the flag records an uppercase
    /// first letter (a variable name).
    Word(String, bool),
    Int(BigInt),
    SQuoted(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error)]
#[error("{pos}: {msg}")]
pub struct LexError {
    pub pos: Pos,
    pub msg: String,
}

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>, LexError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut line = 1u32;
    let mut col = 1u32;
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }
    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else { break };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '%' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '/' => {
                bump!();
                if chars.peek() == Some(&'*') {
                    bump!();
                    let mut prev = ' ';
                    loop {
                        match bump!() {
                            None => {
                                return Err(LexError {
                                    pos,
                                    msg: "unterminated block comment".into(),
                                })
                            }
                            Some('/') if prev == '*' => break,
                            Some(c) => prev = c,
                        }
                    }
                } else {
                    return Err(LexError {
                        pos,
                        msg: "unexpected `/`".into(),
                    });
                }
            }
            '(' => {
                bump!();
                out.push((Tok::LParen, pos));
            }
            ')' => {
                bump!();
                out.push((Tok::RParen, pos));
            }
            '[' => {
                bump!();
                out.push((Tok::LBracket, pos));
            }
            ']' => {
                bump!();
                out.push((Tok::RBracket, pos));
            }
            ',' => {
                bump!();
                out.push((Tok::Comma, pos));
            }
            '.' => {
                bump!();
                out.push((Tok::Dot, pos));
            }
            ':' => {
                bump!();
                out.push((Tok::Colon, pos));
            }
            '>' => {
                bump!();
                out.push((Tok::Arrow, pos));
            }
            '*' => {
                bump!();
                out.push((Tok::Star, pos));
            }
            '|' => {
                bump!();
                out.push((Tok::Pipe, pos));
            }
            '~' => {
                bump!();
                out.push((Tok::Tilde, pos));
            }
            '^' => {
                bump!();
                out.push((Tok::Caret, pos));
            }
            '?' => {
                bump!();
                out.push((Tok::Question, pos));
            }
            '=' => {
                bump!();
                out.push((Tok::Equal, pos));
            }
            '!' => {
                bump!();
                if chars.peek() == Some(&'=') {
                    bump!();
                    out.push((Tok::NotEqual, pos));
                } else {
                    out.push((Tok::Bang, pos));
                }
            }
            '\'' => {
                bump!();
                let mut s = String::new();
                loop {
                    match bump!() {
                        None => {
                            return Err(LexError {
                                pos,
                                msg: "unterminated quoted name".into(),
                            })
                        }
                        Some('\'') => break,
                        Some(c) => s.push(c),
                    }
                }
                out.push((Tok::SQuoted(s), pos));
            }
            '-' => {
                bump!();
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(LexError {
                        pos,
                        msg: "expected digits after `-`".into(),
                    });
                }
                let v: BigInt = format!("-{digits}").parse().unwrap();
                out.push((Tok::Int(v), pos));
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Int(digits.parse().unwrap()), pos));
            }
            c if c.is_ascii_alphabetic() || c == '_' || c == '$' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '$' {
                        word.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                let first = word.trim_start_matches('$').chars().next().unwrap_or('a');
                let upper = first.is_ascii_uppercase();
                out.push((Tok::Word(word, upper), pos));
            }
            other => {
                return Err(LexError {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}
