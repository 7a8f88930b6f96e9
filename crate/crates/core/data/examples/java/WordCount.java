import java.util.Map;
import java.util.TreeMap;

public class WordCount {
    static Map<String, Integer> count(String text) {
        Map<String, Integer> counts = new TreeMap<>();
        for (String word : text.split("\\s+")) {
            String key = word.toLowerCase();
            if (key.isEmpty()) {
                continue;
            }
            counts.merge(key, 1, Integer::sum);
        }
        return counts;
    }

    public static void main(String[] args) {
        Map<String, Integer> result = count("the cat saw the other cat");
        result.forEach((word, n) -> System.out.println(word + " " + n));
    }
}
