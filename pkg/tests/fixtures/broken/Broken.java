package fixtures.broken;

public class Broken {

    public int complete() {
        return 1;
    }

    public int truncated(int value) {
        if (value > 0) {
            return value;
        }
        // closing braces lost below this point
