//! Words over the family generator alphabets: parsing and printing.
//!
//! A word is a sequence of letters `gen^exp`. Exponents are rational so
//! that normal forms of divisible coordinates (`a^{13/4}`, `b^{-1/3}`)
//! print and re-parse losslessly; plain generator words use integer
//! exponents. Which exponents actually evaluate is decided per family by
//! `eval_word`, not here.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rational;

/// A generator name: `a`, `b`, `c`, or an indexed tower generator `a1..aN`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    B,
    C,
    /// Tower generator `a<i>` with 1-based level index.
    Level(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::A => f.write_str("a"),
            Gen::B => f.write_str("b"),
            Gen::C => f.write_str("c"),
            Gen::Level(i) => write!(f, "a{i}"),
        }
    }
}

/// One `gen^exp` factor of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    pub gen: Gen,
    pub exp: Rational,
}

impl Letter {
    pub fn new(gen: Gen, exp: Rational) -> Self {
        Letter { gen, exp }
    }
}

/// A word: a finite product of generator powers, applied left to right.
/// The empty word denotes the identity.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Written length: the sum of |exp| over the letters, when every
    /// exponent is an integer. `None` if some exponent is fractional.
    pub fn written_length(&self) -> Option<u64> {
        use num_traits::ToPrimitive;
        let mut total: u64 = 0;
        for letter in &self.0 {
            if !letter.exp.is_integer() {
                return None;
            }
            total = total.checked_add(letter.exp.numer().magnitude().to_u64()?)?;
        }
        Some(total)
    }

    /// Merges adjacent letters with the same generator and drops zero
    /// exponents. Used when building words from single-generator steps.
    pub fn normalized(mut self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for letter in self.0.drain(..) {
            if letter.exp.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.gen == letter.gen => {
                    last.exp = &last.exp + &letter.exp;
                    if last.exp.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(letter),
            }
        }
        Word(out)
    }

    /// Parses a whitespace-separated sequence of `gen` / `gen^exp` tokens.
    ///
    /// Accepts any generator name; family-specific validation happens at
    /// evaluation time. The empty string parses to the identity.
    pub fn parse(text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let mut pos = 0;
        let bytes = text.as_bytes();
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let token = &text[start..pos];
            letters.push(parse_token(token, start)?);
        }
        Ok(Word(letters))
    }
}

fn parse_token(token: &str, offset: usize) -> Result<Letter> {
    let (gen_text, exp_text) = match token.split_once('^') {
        Some((g, e)) => (g, Some(e)),
        None => (token, None),
    };
    let gen = parse_gen(gen_text, offset)?;
    let exp = match exp_text {
        None => Rational::one(),
        Some(e) => e.parse::<Rational>().map_err(|_| Error::Syntax {
            pos: offset + gen_text.len() + 1,
            msg: format!("invalid exponent `{e}`"),
        })?,
    };
    Ok(Letter::new(gen, exp))
}

fn parse_gen(text: &str, offset: usize) -> Result<Gen> {
    match text {
        "a" => return Ok(Gen::A),
        "b" => return Ok(Gen::B),
        "c" => return Ok(Gen::C),
        _ => {}
    }
    if let Some(rest) = text.strip_prefix('a') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            let i: usize = rest.parse().map_err(|_| Error::Syntax {
                pos: offset,
                msg: format!("level index out of range in `{text}`"),
            })?;
            if i == 0 {
                return Err(Error::Syntax {
                    pos: offset,
                    msg: "level indices start at 1".into(),
                });
            }
            return Ok(Gen::Level(i));
        }
    }
    Err(Error::Syntax {
        pos: offset,
        msg: format!("unknown generator `{text}`"),
    })
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if letter.exp.is_one() {
                write!(f, "{}", letter.gen)?;
            } else {
                write!(f, "{}^{}", letter.gen, letter.exp)?;
            }
        }
        Ok(())
    }
}
