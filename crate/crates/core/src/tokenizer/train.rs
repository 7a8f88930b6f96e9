use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap, HashSet};
use std::rc::Rc;

use super::vocab::Vocabulary;
use super::{chunk_texts, TokenizerError};

struct Word {
    symbols: Vec<u32>,
    count: i64,
}

#[derive(PartialEq, Eq)]
struct Candidate {
    count: i64,
    left: Rc<str>,
    right: Rc<str>,
    pair: (u32, u32),
}

impl Ord for Candidate {
    // Highest count wins; ties go to the lexicographically smallest pair.
    fn cmp(&self, other: &Self) -> Ordering {
        self.count
            .cmp(&other.count)
            .then_with(|| other.left.cmp(&self.left))
            .then_with(|| other.right.cmp(&self.right))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Trainer {
    texts: Vec<Rc<str>>,
    lookup: HashMap<Rc<str>, u32>,
    words: Vec<Word>,
    pair_counts: HashMap<(u32, u32), i64>,
    pair_words: HashMap<(u32, u32), HashSet<usize>>,
    heap: BinaryHeap<Candidate>,
}

impl Trainer {
    fn intern(&mut self, text: &str) -> u32 {
        if let Some(&id) = self.lookup.get(text) {
            return id;
        }
        let id = self.texts.len() as u32;
        let text: Rc<str> = Rc::from(text);
        self.texts.push(text.clone());
        self.lookup.insert(text, id);
        id
    }

    fn push(&mut self, pair: (u32, u32)) {
        let count = self.pair_counts.get(&pair).copied().unwrap_or(0);
        if count > 0 {
            self.heap.push(Candidate {
                count,
                left: self.texts[pair.0 as usize].clone(),
                right: self.texts[pair.1 as usize].clone(),
                pair,
            });
        }
    }

    fn add_word_pairs(&mut self, w: usize, sign: i64, touched: &mut BTreeSet<(u32, u32)>) {
        let count = self.words[w].count * sign;
        for i in 1..self.words[w].symbols.len() {
            let pair = (self.words[w].symbols[i - 1], self.words[w].symbols[i]);
            *self.pair_counts.entry(pair).or_insert(0) += count;
            if sign > 0 {
                self.pair_words.entry(pair).or_default().insert(w);
            }
            touched.insert(pair);
        }
    }

    fn next_pair(&mut self) -> Option<(u32, u32)> {
        while let Some(c) = self.heap.pop() {
            if self.pair_counts.get(&c.pair).copied() == Some(c.count) && c.count > 0 {
                return Some(c.pair);
            }
        }
        None
    }

    fn apply(&mut self, pair: (u32, u32)) {
        let merged_text = format!("{}{}", self.texts[pair.0 as usize], self.texts[pair.1 as usize]);
        let merged = self.intern(&merged_text);
        let mut affected: Vec<usize> = self.pair_words.remove(&pair).unwrap_or_default().into_iter().collect();
        affected.sort_unstable();
        let mut touched = BTreeSet::new();
        for w in affected {
            self.add_word_pairs(w, -1, &mut touched);
            let symbols = &mut self.words[w].symbols;
            let mut out = Vec::with_capacity(symbols.len());
            let mut i = 0;
            while i < symbols.len() {
                if i + 1 < symbols.len() && (symbols[i], symbols[i + 1]) == pair {
                    out.push(merged);
                    i += 2;
                } else {
                    out.push(symbols[i]);
                    i += 1;
                }
            }
            *symbols = out;
            self.add_word_pairs(w, 1, &mut touched);
        }
        for p in touched {
            self.push(p);
        }
    }
}

/// Learns up to `num_merges` merge rules from `corpus`.
///
/// Each round merges the adjacent pair with the highest frequency over all
/// whitespace-delimited chunks, breaking ties by the lexicographic order of
/// `(left, right)`. Training stops early once no adjacent pairs remain.
pub fn train_bpe<S: AsRef<str>>(corpus: &[S], num_merges: usize) -> Result<Vocabulary, TokenizerError> {
    let mut chunk_counts: BTreeMap<&str, i64> = BTreeMap::new();
    for text in corpus {
        for chunk in chunk_texts(text.as_ref()) {
            *chunk_counts.entry(chunk).or_insert(0) += 1;
        }
    }
    if chunk_counts.is_empty() {
        return Err(TokenizerError::EmptyCorpus);
    }

    let chars: BTreeSet<char> = chunk_counts.keys().flat_map(|c| c.chars()).collect();
    let mut trainer = Trainer {
        texts: Vec::new(),
        lookup: HashMap::new(),
        words: Vec::with_capacity(chunk_counts.len()),
        pair_counts: HashMap::new(),
        pair_words: HashMap::new(),
        heap: BinaryHeap::new(),
    };
    for &c in &chars {
        trainer.intern(&c.to_string());
    }
    for (chunk, &count) in &chunk_counts {
        let symbols = chunk.chars().map(|c| trainer.lookup[c.to_string().as_str()]).collect();
        trainer.words.push(Word { symbols, count });
    }
    let mut touched = BTreeSet::new();
    for w in 0..trainer.words.len() {
        trainer.add_word_pairs(w, 1, &mut touched);
    }
    for p in touched {
        trainer.push(p);
    }

    let mut merges = Vec::new();
    while merges.len() < num_merges {
        let Some(pair) = trainer.next_pair() else { break };
        merges.push((trainer.texts[pair.0 as usize].to_string(), trainer.texts[pair.1 as usize].to_string()));
        trainer.apply(pair);
    }

    Vocabulary::from_parts(chars.into_iter().collect(), merges)
}
