const wordCount = (text) => {
  const counts = new Map();
  for (const raw of text.split(/\s+/)) {
    const word = raw.toLowerCase();
    if (!word) {
      continue;
    }
    counts.set(word, (counts.get(word) || 0) + 1);
  }
  return counts;
};

const result = wordCount("the cat saw the other cat");
result.forEach((n, word) => console.log(word, n));
