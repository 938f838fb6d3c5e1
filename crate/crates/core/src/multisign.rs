//! The multisign group `{-1,+1}^m` under componentwise multiplication.
//!
//! An element is stored as an `m`-bit word where bit `i` set means
//! component `i` is `-1`. The group product is then bitwise xor and the
//! identity is the all-zero word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported multisign width (one machine word).
pub const MAX_WIDTH: usize = 64;

/// An element of `{-1,+1}^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multisign {
    width: u8,
    bits: u64,
}

pub(crate) fn width_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

pub(crate) fn check_width(width: usize) -> Result<()> {
    if width == 0 || width > MAX_WIDTH {
        Err(Error::InvalidWidth(width))
    } else {
        Ok(())
    }
}

impl Multisign {
    /// The identity `e` (all components `+1`).
    pub fn identity(width: usize) -> Result<Self> {
        Self::from_bits(width, 0)
    }

    /// Builds an element from its bit encoding. Bits above `width` must be clear.
    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        check_width(width)?;
        if bits & !width_mask(width) != 0 {
            return Err(Error::InvalidWidth(width));
        }
        Ok(Self {
            width: width as u8,
            bits,
        })
    }

    /// Builds an element from components in `{-1, +1}`; any negative value is `-1`.
    pub fn from_components(components: &[i8]) -> Result<Self> {
        check_width(components.len())?;
        let bits = components
            .iter()
            .enumerate()
            .filter(|(_, &c)| c < 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        Self::from_bits(components.len(), bits)
    }

    pub(crate) const fn from_bits_unchecked(width: usize, bits: u64) -> Self {
        Self {
            width: width as u8,
            bits,
        }
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    /// Component `i` as `+1` or `-1`.
    pub fn component(self, i: usize) -> i8 {
        assert!(i < self.width(), "component {i} out of range");
        if self.bits >> i & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn components(self) -> Vec<i8> {
        (0..self.width()).map(|i| self.component(i)).collect()
    }

    /// Componentwise product. Fails when the widths differ.
    pub fn try_mul(self, other: Self) -> Result<Self> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        Ok(Self {
            width: self.width,
            bits: self.bits ^ other.bits,
        })
    }

    /// `self^k`. Every element is an involution, so only the parity of `k` matters.
    pub fn pow(self, k: u64) -> Self {
        if k.is_multiple_of(2) {
            Self {
                width: self.width,
                bits: 0,
            }
        } else {
            self
        }
    }

    /// Flips component `i` (multiplies it by `-1`).
    pub fn flip(self, i: usize) -> Self {
        assert!(i < self.width(), "component {i} out of range");
        Self {
            width: self.width,
            bits: self.bits ^ (1 << i),
        }
    }

    /// Parses the `+`/`-` text encoding; character `i` is component `i`.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::SignText {
                position: 0,
                reason: "empty sign string",
            });
        }
        let mut bits = 0u64;
        let mut width = 0usize;
        for (position, ch) in s.chars().enumerate() {
            if position >= MAX_WIDTH {
                return Err(Error::SignText {
                    position,
                    reason: "longer than 64 components",
                });
            }
            match ch {
                '+' => {}
                '-' => bits |= 1 << position,
                _ => {
                    return Err(Error::SignText {
                        position,
                        reason: "expected '+' or '-'",
                    })
                }
            }
            width = position + 1;
        }
        Ok(Self::from_bits_unchecked(width, bits))
    }
}

impl fmt::Display for Multisign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = (0..self.width())
            .map(|i| if self.bits >> i & 1 == 1 { '-' } else { '+' })
            .collect();
        f.pad(&text)
    }
}

impl FromStr for Multisign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
