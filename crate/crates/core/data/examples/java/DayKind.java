public class DayKind {
    static String describe(int day) {
        String kind;
        switch (day) {
            case 0:
            case 6:
                kind = "weekend";
                break;
            case 3:
                kind = "midweek";
                break;
            default:
                kind = "weekday";
        }
        return kind;
    }

    public static void main(String[] args) {
        int day = 0;
        do {
            System.out.println(describe(day));
            day++;
        } while (day < 7);
    }
}
