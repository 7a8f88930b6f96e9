use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use super::TokenizerError;

/// Ids `0..256` are reserved for raw bytes.
pub const BYTE_ENTRIES: usize = 256;

const HEADER: &str = "bpe-vocab v1";
const CHARS: &str = "chars:";
const MERGES: &str = "merges:";

static DEFAULT_VOCAB: &str = include_str!("../../data/default.vocab");

/// Character inventory plus ordered merge rules.
///
/// Learned entries (single characters first, then one per distinct merge
/// result) take ids from [`BYTE_ENTRIES`] upward in that order.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    chars: Vec<char>,
    merges: Vec<(String, String)>,
    tokens: Vec<String>,
    lookup: HashMap<String, u32>,
    char_ids: HashMap<char, u32>,
    ranks: HashMap<(u32, u32), (u32, u32)>,
}

impl PartialEq for Vocabulary {
    fn eq(&self, other: &Self) -> bool {
        self.chars == other.chars && self.merges == other.merges
    }
}

impl Eq for Vocabulary {}

impl Vocabulary {
    /// Builds a vocabulary, checking that every merge operand is an entry
    /// that exists at the point the merge is applied.
    pub fn from_parts(chars: Vec<char>, merges: Vec<(String, String)>) -> Result<Self, TokenizerError> {
        Self::build(chars, merges, |_| 0)
    }

    fn build(
        chars: Vec<char>,
        merges: Vec<(String, String)>,
        merge_line: impl Fn(usize) -> usize,
    ) -> Result<Self, TokenizerError> {
        let mut v = Vocabulary {
            chars: Vec::with_capacity(chars.len()),
            merges: Vec::with_capacity(merges.len()),
            tokens: Vec::new(),
            lookup: HashMap::new(),
            char_ids: HashMap::new(),
            ranks: HashMap::new(),
        };
        for c in chars {
            if crate::tokenizer::is_split_char(c) {
                return Err(TokenizerError::Malformed { line: 0, message: format!("whitespace character {c:?} in inventory") });
            }
            if v.char_ids.contains_key(&c) {
                return Err(TokenizerError::Malformed { line: 0, message: format!("duplicate character {c:?}") });
            }
            let id = v.intern(c.to_string());
            v.char_ids.insert(c, id);
            v.chars.push(c);
        }
        for (rank, (left, right)) in merges.into_iter().enumerate() {
            let (Some(&l), Some(&r)) = (v.lookup.get(&left), v.lookup.get(&right)) else {
                return Err(TokenizerError::Malformed {
                    line: merge_line(rank),
                    message: format!("merge `{left}` + `{right}` refers to an unknown entry"),
                });
            };
            let merged = v.intern(format!("{left}{right}"));
            // Two routes to the same text can bring a merged pair back; the
            // first rank wins when encoding.
            v.ranks.entry((l, r)).or_insert((rank as u32, merged));
            v.merges.push((left, right));
        }
        Ok(v)
    }

    fn intern(&mut self, text: String) -> u32 {
        if let Some(&id) = self.lookup.get(&text) {
            return id;
        }
        let id = (BYTE_ENTRIES + self.tokens.len()) as u32;
        self.lookup.insert(text.clone(), id);
        self.tokens.push(text);
        id
    }

    /// The vocabulary shipped with the crate, trained on the bundled corpus.
    pub fn default_code() -> &'static Vocabulary {
        static VOCAB: OnceLock<Vocabulary> = OnceLock::new();
        VOCAB.get_or_init(|| Vocabulary::from_text(DEFAULT_VOCAB).expect("bundled vocabulary is well-formed"))
    }

    /// Total number of ids, byte entries included.
    pub fn size(&self) -> usize {
        BYTE_ENTRIES + self.tokens.len()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn merges(&self) -> &[(String, String)] {
        &self.merges
    }

    /// Learned entries in id order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, u32)> {
        self.tokens.iter().enumerate().map(|(i, t)| (t.as_str(), (BYTE_ENTRIES + i) as u32))
    }

    pub fn id_of(&self, text: &str) -> Option<u32> {
        self.lookup.get(text).copied()
    }

    pub(crate) fn char_id(&self, c: char) -> Option<u32> {
        self.char_ids.get(&c).copied()
    }

    pub(crate) fn merge_for(&self, left: u32, right: u32) -> Option<(u32, u32)> {
        self.ranks.get(&(left, right)).copied()
    }

    /// Display text of an id: the entry text, or `<0xHH>` for byte entries.
    pub fn token_text(&self, id: u32) -> Option<String> {
        let id = id as usize;
        if id < BYTE_ENTRIES {
            Some(format!("<0x{id:02X}>"))
        } else {
            self.tokens.get(id - BYTE_ENTRIES).cloned()
        }
    }

    pub(crate) fn token_bytes(&self, id: u32) -> Option<Vec<u8>> {
        let id = id as usize;
        if id < BYTE_ENTRIES {
            Some(vec![id as u8])
        } else {
            self.tokens.get(id - BYTE_ENTRIES).map(|t| t.as_bytes().to_vec())
        }
    }

    pub(crate) fn piece_text(&self, id: u32, source: &[u8]) -> String {
        if (id as usize) < BYTE_ENTRIES {
            format!("<0x{id:02X}>")
        } else {
            String::from_utf8_lossy(source).into_owned()
        }
    }

    /// Serializes to the line-oriented `bpe-vocab v1` format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(HEADER);
        out.push('\n');
        out.push_str(CHARS);
        out.push('\n');
        for &c in &self.chars {
            escape_into(&mut out, &c.to_string());
            out.push('\n');
        }
        out.push_str(MERGES);
        out.push('\n');
        for (l, r) in &self.merges {
            escape_into(&mut out, l);
            out.push('\t');
            escape_into(&mut out, r);
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, TokenizerError> {
        let malformed = |line: usize, message: &str| TokenizerError::Malformed { line, message: message.to_string() };
        if text.is_empty() {
            return Err(malformed(1, "empty vocabulary file"));
        }
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l))).peekable();
        match lines.next() {
            Some((_, HEADER)) => {}
            Some((n, _)) => return Err(malformed(n, "expected `bpe-vocab v1` header")),
            None => return Err(malformed(1, "empty vocabulary file")),
        }
        match lines.next() {
            Some((_, CHARS)) => {}
            Some((n, _)) => return Err(malformed(n, "expected `chars:` section")),
            None => return Err(malformed(2, "unexpected end of file: missing `chars:` section")),
        }

        let mut chars = Vec::new();
        let mut seen = HashSet::new();
        let mut last_line = 2;
        loop {
            let Some((n, line)) = lines.next() else {
                return Err(malformed(last_line + 1, "unexpected end of file: missing `merges:` section"));
            };
            last_line = n;
            if line == MERGES {
                break;
            }
            let unescaped = unescape(line).map_err(|m| malformed(n, &m))?;
            let mut it = unescaped.chars();
            let (Some(c), None) = (it.next(), it.next()) else {
                return Err(malformed(n, "character line must hold exactly one character"));
            };
            if !seen.insert(c) {
                return Err(malformed(n, "duplicate character"));
            }
            chars.push(c);
        }

        let mut merges = Vec::new();
        let mut merge_lines = Vec::new();
        while let Some((n, line)) = lines.next() {
            if line.is_empty() && lines.peek().is_none() {
                break;
            }
            let Some((l, r)) = line.split_once('\t') else {
                return Err(malformed(n, "merge line must be `left<TAB>right`"));
            };
            let left = unescape(l).map_err(|m| malformed(n, &m))?;
            let right = unescape(r).map_err(|m| malformed(n, &m))?;
            if left.is_empty() || right.is_empty() {
                return Err(malformed(n, "empty merge operand"));
            }
            merges.push((left, right));
            merge_lines.push(n);
        }
        Self::build(chars, merges, |rank| merge_lines[rank])
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), TokenizerError> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, TokenizerError> {
        let bytes = std::fs::read(path)?;
        let text = String::from_utf8(bytes).map_err(|_| TokenizerError::Malformed { line: 0, message: "file is not UTF-8".into() })?;
        Self::from_text(&text)
    }
}

fn escape_into(out: &mut String, s: &str) {
    for c in s.chars() {
        if c == '\\' {
            out.push_str("\\\\");
        } else if c.is_whitespace() || c.is_control() {
            let _ = write!(out, "\\u{{{:x}}}", c as u32);
        } else {
            out.push(c);
        }
    }
}

fn unescape(s: &str) -> Result<String, String> {
    let mut out = String::with_capacity(s.len());
    let mut it = s.chars();
    while let Some(c) = it.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match it.next() {
            Some('\\') => out.push('\\'),
            Some('u') => {
                if it.next() != Some('{') {
                    return Err("expected `{` after `\\u`".into());
                }
                let hex: String = it.by_ref().take_while(|&c| c != '}').collect();
                let c = u32::from_str_radix(&hex, 16).ok().and_then(char::from_u32).ok_or_else(|| format!("bad escape `\\u{{{hex}}}`"))?;
                out.push(c);
            }
            other => return Err(format!("unknown escape `\\{}`", other.map(String::from).unwrap_or_default())),
        }
    }
    Ok(out)
}
