//! Surface syntax for words.
//!
//! ```text
//! word   := factor+
//! factor := base ('^' uint)?
//! base   := 'x' | 'I' | '(' word ')'
//! ```
//!
//! Whitespace is insignificant. A power on a group repeats the group, so
//! `(x I)^3` and `x I x I x I` denote the same word.

use intorder_core::{Block, Word};
use thiserror::Error;

/// Upper bound on the number of blocks a parsed expression may expand to.
pub const MAX_EXPANDED_BLOCKS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: &'static str },
    #[error("exponent at offset {offset} does not fit in 32 bits")]
    ExponentOverflow { offset: usize },
    #[error("expression at offset {offset} expands to more than {MAX_EXPANDED_BLOCKS} blocks")]
    TooLarge { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match *self {
            ParseError::Syntax { offset, .. }
            | ParseError::ExponentOverflow { offset }
            | ParseError::TooLarge { offset } => offset,
        }
    }
}

/// Parses `text` into a canonical [`Word`].
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    let blocks = parser.word()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        let expected = if parser.peek() == Some(b')') {
            "end of input"
        } else {
            "'x', 'I', '(' or end of input"
        };
        return Err(parser.expected(expected));
    }
    Word::from_blocks(blocks)
        .try_canonical()
        .ok_or(ParseError::ExponentOverflow { offset: 0 })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expected(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax { offset: self.pos, expected }
    }

    fn word(&mut self) -> Result<Vec<Block>, ParseError> {
        let mut blocks = Vec::new();
        let start = self.pos;
        let mut factors = 0usize;
        loop {
            match self.peek() {
                Some(b'x' | b'I' | b'(') => {
                    let factor = self.factor()?;
                    factors += 1;
                    if blocks.len() + factor.len() > MAX_EXPANDED_BLOCKS {
                        return Err(ParseError::TooLarge { offset: start });
                    }
                    blocks.extend(factor);
                }
                _ if factors == 0 => return Err(self.expected("'x', 'I' or '('")),
                _ => return Ok(blocks),
            }
        }
    }

    fn factor(&mut self) -> Result<Vec<Block>, ParseError> {
        let start = self.pos;
        let base = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                vec![Block::x(1)]
            }
            Some(b'I') => {
                self.pos += 1;
                vec![Block::i(1)]
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.expected("')'"));
                }
                self.pos += 1;
                inner
            }
            _ => return Err(self.expected("'x', 'I' or '('")),
        };
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let exp_offset = self.pos;
        let exponent = self.uint()?;
        if let [single] = base.as_slice() {
            let exponent = single
                .exponent
                .checked_mul(exponent)
                .ok_or(ParseError::ExponentOverflow { offset: exp_offset })?;
            return Ok(vec![Block { generator: single.generator, exponent }]);
        }
        let total = base.len().saturating_mul(exponent as usize);
        if total > MAX_EXPANDED_BLOCKS {
            return Err(ParseError::TooLarge { offset: start });
        }
        let mut out = Vec::with_capacity(total);
        for _ in 0..exponent {
            out.extend_from_slice(&base);
        }
        Ok(out)
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected("integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| ParseError::ExponentOverflow { offset: start })
    }
}
