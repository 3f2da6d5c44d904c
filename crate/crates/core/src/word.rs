//! Words in the generators `x` and `I`.
//!
//! A word is stored in written order, left to right, and acts on functions
//! right to left: the rightmost block is applied first.

use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Multiplication by `x`.
    X,
    /// Integration from 0 to `x`.
    I,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub generator: Generator,
    pub exponent: u32,
}

impl Block {
    pub const fn x(exponent: u32) -> Self {
        Block { generator: Generator::X, exponent }
    }

    pub const fn i(exponent: u32) -> Self {
        Block { generator: Generator::I, exponent }
    }
}

/// One `x^r I^s` factor of a word; either exponent may be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Factor {
    pub r: u64,
    pub s: u64,
}

/// A finite product of generator powers.
///
/// The block list is kept as given; [`Word::canonical`] drops zero exponents
/// and merges neighbouring blocks of the same generator. Both forms denote the
/// same operator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    blocks: Vec<Block>,
}

impl Word {
    /// The empty word, i.e. the identity operator.
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_blocks<I: IntoIterator<Item = Block>>(blocks: I) -> Self {
        Word { blocks: blocks.into_iter().collect() }
    }

    /// Builds a word from `x^r I^s` factors listed left to right.
    pub fn from_factors<I: IntoIterator<Item = (u32, u32)>>(factors: I) -> Self {
        let mut blocks = Vec::new();
        for (r, s) in factors {
            blocks.push(Block::x(r));
            blocks.push(Block::i(s));
        }
        Word::from_blocks(blocks).canonical()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.exponent == 0)
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks.iter().all(|b| b.exponent > 0)
            && self.blocks.windows(2).all(|w| w[0].generator != w[1].generator)
    }

    /// Drops zero-exponent blocks and merges adjacent blocks of the same
    /// generator.
    ///
    /// # Panics
    ///
    /// Panics if a merged exponent exceeds `u32::MAX`; see [`Word::try_canonical`].
    pub fn canonical(&self) -> Word {
        self.try_canonical().expect("merged exponent overflows u32")
    }

    /// Like [`Word::canonical`], returning `None` if a merged exponent
    /// overflows.
    pub fn try_canonical(&self) -> Option<Word> {
        let mut out: Vec<Block> = Vec::with_capacity(self.blocks.len());
        for block in self.blocks.iter().filter(|b| b.exponent > 0) {
            match out.last_mut() {
                Some(last) if last.generator == block.generator => {
                    last.exponent = last.exponent.checked_add(block.exponent)?;
                }
                _ => out.push(*block),
            }
        }
        Some(Word { blocks: out })
    }

    /// The product `self · other`; `other` acts first.
    pub fn concat(&self, other: &Word) -> Word {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        Word { blocks }.canonical()
    }

    /// `selfⁿ`, with `self⁰` the identity.
    pub fn pow(&self, n: u32) -> Word {
        let mut blocks = Vec::with_capacity(self.blocks.len() * n as usize);
        for _ in 0..n {
            blocks.extend_from_slice(&self.blocks);
        }
        Word { blocks }.canonical()
    }

    /// Total `x` degree `R` and total `I` degree `S`.
    pub fn total_degrees(&self) -> (u64, u64) {
        self.blocks.iter().fold((0, 0), |(r, s), b| match b.generator {
            Generator::X => (r + u64::from(b.exponent), s),
            Generator::I => (r, s + u64::from(b.exponent)),
        })
    }

    /// Splits the word into `x^{r_n} I^{s_n} ⋯ x^{r_1} I^{s_1}` and returns
    /// the factors innermost first, `[(r_1, s_1), …, (r_n, s_n)]`.
    ///
    /// A word ending in `x` gets `s_1 = 0`; a word starting with `I` gets
    /// `r_n = 0`. The identity has no factors.
    pub fn factors(&self) -> Vec<Factor> {
        let mut out = Vec::new();
        let mut current: Option<Factor> = None;
        for block in self.blocks.iter().rev().filter(|b| b.exponent > 0) {
            let e = u64::from(block.exponent);
            let f = current.get_or_insert_with(Factor::default);
            match block.generator {
                Generator::I if f.r > 0 => {
                    out.push(*f);
                    *f = Factor { r: 0, s: e };
                }
                Generator::I => f.s += e,
                Generator::X => f.r += e,
            }
        }
        out.extend(current);
        out
    }

    /// Cumulative `x` degrees `S_j = r_1 + ⋯ + r_j` for `j = 1..=n`.
    pub fn cumulative_x_degrees(&self) -> Vec<u64> {
        self.factors()
            .iter()
            .scan(0u64, |acc, f| {
                *acc += f.r;
                Some(*acc)
            })
            .collect()
    }
}

/// Canonical text: blocks separated by single spaces, exponent 1 omitted,
/// e.g. `x^2 I x I^3`. The identity prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let canonical = self.canonical();
        if canonical.blocks.is_empty() {
            return f.write_str("1");
        }
        for (idx, block) in canonical.blocks.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            let symbol = match block.generator {
                Generator::X => "x",
                Generator::I => "I",
            };
            f.write_str(symbol)?;
            if block.exponent != 1 {
                write!(f, "^{}", block.exponent)?;
            }
        }
        Ok(())
    }
}
