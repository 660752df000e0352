//! The fixed two-bit block code between the four-symbol alphabet `_ 1 H E`
//! and the machine alphabet `a b`:
//!
//! ```text
//! _ ↔ aa    1 ↔ ab    H ↔ ba    E ↔ bb
//! ```
//!
//! Viewing an `a`/`b` tape through this code, each aligned cell pair ("quad")
//! carries one four-symbol character; `_` doubles as the four-symbol blank
//! since blank tape reads `aa`.

use super::{Sym, Tape};
use std::fmt;

/// The four-symbol alphabet in code order: value `v` encodes as the two bits
/// of `v` (most significant first) under `a = 0`, `b = 1`.
pub const QUADS: [char; 4] = ['_', '1', 'H', 'E'];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodecError {
    OddLength { len: usize },
    BadSymbol { at: usize, ch: char },
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodecError::OddLength { len } => {
                write!(f, "two-symbol string has odd length {len}")
            }
            CodecError::BadSymbol { at, ch } => {
                write!(f, "invalid symbol {ch:?} at position {at}")
            }
        }
    }
}

impl std::error::Error for CodecError {}

/// Code value (0..4) of a four-symbol character.
pub fn quad_value(ch: char) -> Option<u8> {
    QUADS.iter().position(|&q| q == ch).map(|v| v as u8)
}

/// Four-symbol character for a code value (0..4).
pub fn value_to_quad(v: u8) -> char {
    QUADS[v as usize]
}

/// Four-symbol character for a bit pair (most significant bit first).
pub fn quad_from_bits(hi: Sym, lo: Sym) -> char {
    value_to_quad(hi.bit() * 2 + lo.bit())
}

/// Encodes a four-symbol string as a two-symbol string (length doubles).
pub fn encode_4to2(s: &str) -> Result<String, CodecError> {
    let mut out = String::with_capacity(s.len() * 2);
    for (at, ch) in s.chars().enumerate() {
        let v = quad_value(ch).ok_or(CodecError::BadSymbol { at, ch })?;
        out.push(Sym::from_bit(v >> 1).ch());
        out.push(Sym::from_bit(v & 1).ch());
    }
    Ok(out)
}

/// Decodes a two-symbol string back to four symbols (length halves).
pub fn decode_2to4(s: &str) -> Result<String, CodecError> {
    if s.len() % 2 != 0 {
        return Err(CodecError::OddLength { len: s.len() });
    }
    let mut out = String::with_capacity(s.len() / 2);
    let bytes = s.as_bytes();
    for i in (0..bytes.len()).step_by(2) {
        let bit = |at: usize| match bytes[at] {
            b'a' => Ok(0u8),
            b'b' => Ok(1u8),
            other => Err(CodecError::BadSymbol {
                at,
                ch: other as char,
            }),
        };
        out.push(value_to_quad(bit(i)? * 2 + bit(i + 1)?));
    }
    Ok(out)
}

/// Reads the four-symbol character stored in tape cells `2i` and `2i + 1`.
pub fn tape_quad(tape: &Tape, i: i64) -> char {
    quad_from_bits(tape.read(2 * i), tape.read(2 * i + 1))
}

/// Writes a four-symbol character into tape cells `2i` and `2i + 1`.
pub fn write_tape_quad(tape: &mut Tape, i: i64, ch: char) {
    let v = quad_value(ch).expect("invalid four-symbol character");
    tape.write(2 * i, Sym::from_bit(v >> 1));
    tape.write(2 * i + 1, Sym::from_bit(v & 1));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mapping_table() {
        assert_eq!(encode_4to2("_1HE").unwrap(), "aaabbabb");
        assert_eq!(decode_2to4("aaabbabb").unwrap(), "_1HE");
    }

    #[test]
    fn empty_round_trip() {
        assert_eq!(encode_4to2("").unwrap(), "");
        assert_eq!(decode_2to4("").unwrap(), "");
    }

    #[test]
    fn odd_length_rejected() {
        assert_eq!(
            decode_2to4("aab").unwrap_err(),
            CodecError::OddLength { len: 3 }
        );
    }

    #[test]
    fn bad_symbols_rejected() {
        assert_eq!(
            encode_4to2("_x").unwrap_err(),
            CodecError::BadSymbol { at: 1, ch: 'x' }
        );
        assert_eq!(
            decode_2to4("aaxb").unwrap_err(),
            CodecError::BadSymbol { at: 2, ch: 'x' }
        );
    }

    #[test]
    fn random_round_trip() {
        let mut rng = crate::support::SplitMix64::new(0xC0DEC);
        for _ in 0..200 {
            let len = rng.below(64) as usize;
            let s: String = (0..len)
                .map(|_| QUADS[rng.below(4) as usize])
                .collect();
            assert_eq!(decode_2to4(&encode_4to2(&s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn tape_quads() {
        let mut t = Tape::new();
        write_tape_quad(&mut t, 0, 'H');
        write_tape_quad(&mut t, 1, 'E');
        write_tape_quad(&mut t, 2, '1');
        assert_eq!(tape_quad(&t, 0), 'H');
        assert_eq!(tape_quad(&t, 1), 'E');
        assert_eq!(tape_quad(&t, 2), '1');
        assert_eq!(tape_quad(&t, 3), '_');
        // Cell-level view: H E 1 = ba bb ab.
        let cells: String = (0..6).map(|p| t.read(p).ch()).collect();
        assert_eq!(cells, "babbab");
    }
}
