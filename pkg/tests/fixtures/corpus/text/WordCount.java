package fixtures.text;

import java.util.HashMap;
import java.util.Map;

public class WordCount {

    public Map<String, Integer> countWords(String text) {
        Map<String, Integer> counts = new HashMap<>();
        for (String word : text.split("\\s+")) {
            if (word.isEmpty()) {
                continue;
            }
            Integer seen = counts.get(word);
            counts.put(word, seen == null ? 1 : seen + 1);
        }
        return counts;
    }

    static class Tally {

        private int total;

        int bump() {
            total = total + 1;
            return total;
        }
    }
}
