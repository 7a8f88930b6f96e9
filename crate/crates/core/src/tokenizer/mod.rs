//! Whitespace pre-tokenization followed by byte-pair encoding.
//!
//! Source text is split into chunks on runs of ASCII whitespace. Each chunk
//! starts out as a sequence of single characters (or raw bytes, for
//! characters the vocabulary has never seen) and the vocabulary's merge rules
//! are then applied in training order. Merges never cross chunk boundaries and
//! whitespace itself is never emitted as a token.

mod train;
mod vocab;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::model::{LineIndex, Span};

pub use train::train_bpe;
pub use vocab::{Vocabulary, BYTE_ENTRIES};

#[derive(Debug, thiserror::Error)]
pub enum TokenizerError {
    #[error("corpus contains no tokens")]
    EmptyCorpus,
    #[error("token id {id} is out of range for a vocabulary of {size} entries")]
    UnknownId { id: u32, size: usize },
    #[error("malformed vocabulary file at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A subword token and the region of source it covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub text: String,
    pub span: Span,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenSequence {
    pub pieces: Vec<Piece>,
    pub ids: Vec<u32>,
}

impl TokenSequence {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

pub(crate) fn is_split_char(c: char) -> bool {
    c.is_ascii_whitespace()
}

fn chunks(code: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = code;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.find(|c: char| !is_split_char(c))?;
        offset += skip;
        rest = &rest[skip..];
        let len = rest.find(is_split_char).unwrap_or(rest.len());
        let chunk = &rest[..len];
        let start = offset;
        offset += len;
        rest = &rest[len..];
        Some((start, chunk))
    })
}

/// Splits `code` on runs of tabs, spaces and newlines.
pub fn pre_tokenize(code: &str) -> Vec<Piece> {
    let index = LineIndex::new(code);
    chunks(code)
        .map(|(start, chunk)| Piece { text: chunk.to_string(), span: index.span(start, start + chunk.len()) })
        .collect()
}

/// Just the chunk texts, for training.
pub(crate) fn chunk_texts(code: &str) -> impl Iterator<Item = &str> {
    chunks(code).map(|(_, c)| c)
}

const NONE: usize = usize::MAX;

struct Symbol {
    id: u32,
    start: usize,
    end: usize,
    prev: usize,
    next: usize,
    alive: bool,
}

/// Encodes `code` into vocabulary pieces.
pub fn encode(code: &str, vocab: &Vocabulary) -> TokenSequence {
    let index = LineIndex::new(code);
    let mut out = TokenSequence::default();
    for (base, chunk) in chunks(code) {
        encode_chunk(chunk, vocab, |id, start, end| {
            out.pieces.push(Piece {
                text: vocab.piece_text(id, &chunk.as_bytes()[start..end]),
                span: index.span(base + start, base + end),
            });
            out.ids.push(id);
        });
    }
    out
}

fn encode_chunk(chunk: &str, vocab: &Vocabulary, mut emit: impl FnMut(u32, usize, usize)) {
    let mut symbols: Vec<Symbol> = Vec::with_capacity(chunk.len());
    for (offset, ch) in chunk.char_indices() {
        match vocab.char_id(ch) {
            Some(id) => symbols.push(Symbol { id, start: offset, end: offset + ch.len_utf8(), prev: 0, next: 0, alive: true }),
            None => {
                for i in 0..ch.len_utf8() {
                    let byte = chunk.as_bytes()[offset + i];
                    symbols.push(Symbol { id: byte as u32, start: offset + i, end: offset + i + 1, prev: 0, next: 0, alive: true });
                }
            }
        }
    }
    let n = symbols.len();
    for (i, s) in symbols.iter_mut().enumerate() {
        s.prev = if i == 0 { NONE } else { i - 1 };
        s.next = if i + 1 == n { NONE } else { i + 1 };
    }

    // Lowest rank first, leftmost position among equal ranks. Because a merge
    // result can only take part in later-ranked merges, this is the same as
    // sweeping the merge list in order.
    let mut heap = BinaryHeap::new();
    for i in 1..n {
        if let Some((rank, _)) = vocab.merge_for(symbols[i - 1].id, symbols[i].id) {
            heap.push(Reverse((rank, i - 1)));
        }
    }
    while let Some(Reverse((rank, pos))) = heap.pop() {
        let next = symbols[pos].next;
        if !symbols[pos].alive || next == NONE {
            continue;
        }
        let Some((current, merged)) = vocab.merge_for(symbols[pos].id, symbols[next].id) else { continue };
        if current != rank {
            continue;
        }
        symbols[pos].id = merged;
        symbols[pos].end = symbols[next].end;
        symbols[next].alive = false;
        let after = symbols[next].next;
        symbols[pos].next = after;
        if after != NONE {
            symbols[after].prev = pos;
            if let Some((r, _)) = vocab.merge_for(merged, symbols[after].id) {
                heap.push(Reverse((r, pos)));
            }
        }
        let before = symbols[pos].prev;
        if before != NONE {
            if let Some((r, _)) = vocab.merge_for(symbols[before].id, merged) {
                heap.push(Reverse((r, before)));
            }
        }
    }

    let mut i = if n == 0 { NONE } else { 0 };
    while i != NONE {
        let s = &symbols[i];
        emit(s.id, s.start, s.end);
        i = s.next;
    }
}

/// Maps ids back to their vocabulary texts. Byte-fallback ids decode to their
/// `<0xHH>` entry names; use [`decode_chunks`] to reassemble source text.
pub fn decode(tokens: &TokenSequence, vocab: &Vocabulary) -> Result<Vec<String>, TokenizerError> {
    tokens
        .ids
        .iter()
        .map(|&id| vocab.token_text(id).ok_or(TokenizerError::UnknownId { id, size: vocab.size() }))
        .collect()
}

/// Rebuilds the whitespace-delimited chunks a sequence was encoded from.
/// Consecutive pieces belong to the same chunk when their spans touch.
pub fn decode_chunks(tokens: &TokenSequence, vocab: &Vocabulary) -> Result<Vec<String>, TokenizerError> {
    let mut chunks = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    let mut last_end = None;
    for (piece, &id) in tokens.pieces.iter().zip(&tokens.ids) {
        if last_end.is_some_and(|end| end != piece.span.start_byte) {
            chunks.push(String::from_utf8_lossy(&current).into_owned());
            current.clear();
        }
        current.extend_from_slice(&vocab.token_bytes(id).ok_or(TokenizerError::UnknownId { id, size: vocab.size() })?);
        last_end = Some(piece.span.end_byte);
    }
    if last_end.is_some() {
        chunks.push(String::from_utf8_lossy(&current).into_owned());
    }
    Ok(chunks)
}
