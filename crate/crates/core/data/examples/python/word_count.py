def word_count(text):
    counts = {}
    for word in text.split():
        word = word.lower().strip(".,!?")
        if not word:
            continue
        counts[word] = counts.get(word, 0) + 1
    return counts


result = word_count("the cat saw the other cat")
for word, n in sorted(result.items()):
    print(word, n)
