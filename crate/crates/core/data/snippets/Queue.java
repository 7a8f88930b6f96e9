import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Queue<T> {
    private final List<T> items = new ArrayList<>();
    private int head = 0;

    public void enqueue(T item) {
        items.add(item);
    }

    public T dequeue() {
        if (isEmpty()) {
            throw new IllegalStateException("queue is empty");
        }
        T item = items.get(head);
        head++;
        if (head > 16 && head * 2 > items.size()) {
            items.subList(0, head).clear();
            head = 0;
        }
        return item;
    }

    public boolean isEmpty() {
        return head >= items.size();
    }

    public int size() {
        return items.size() - head;
    }

    static boolean isPrime(int n) {
        if (n < 2) {
            return false;
        }
        for (int i = 2; i * i <= n; i++) {
            if (n % i == 0) {
                return false;
            }
        }
        return true;
    }

    static Map<Character, Integer> histogram(String text) {
        Map<Character, Integer> counts = new HashMap<>();
        for (char c : text.toCharArray()) {
            if (Character.isWhitespace(c)) {
                continue;
            }
            counts.put(c, counts.getOrDefault(c, 0) + 1);
        }
        return counts;
    }

    static int[][] multiply(int[][] a, int[][] b) {
        int rows = a.length;
        int cols = b[0].length;
        int[][] result = new int[rows][cols];
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                int total = 0;
                for (int k = 0; k < b.length; k++) {
                    total += a[i][k] * b[k][j];
                }
                result[i][j] = total;
            }
        }
        return result;
    }

    public static void main(String[] args) {
        Queue<String> queue = new Queue<>();
        for (String arg : args) {
            queue.enqueue(arg);
        }
        while (!queue.isEmpty()) {
            String next = queue.dequeue();
            System.out.println(next + " " + histogram(next));
        }
        try {
            queue.dequeue();
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        } finally {
            System.out.println(isPrime(97));
        }
    }
}
