public class BinarySearch {
    static int search(int[] items, int target) {
        int lo = 0;
        int hi = items.length - 1;
        while (lo <= hi) {
            int mid = (lo + hi) / 2;
            if (items[mid] == target) {
                return mid;
            } else if (items[mid] < target) {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        return -1;
    }

    public static void main(String[] args) {
        int[] items = {1, 3, 5, 7, 9};
        System.out.println(search(items, 7));
    }
}
