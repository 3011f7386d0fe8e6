package fixtures.io;

import java.io.BufferedReader;
import java.io.FileReader;

public class FileLines {

    public static int readFileLineByLine(String path) throws Exception {
        BufferedReader reader = new BufferedReader(new FileReader(path));
        int count = 0;
        String line = reader.readLine();
        while (line != null) {
            count = count + 1;
            line = reader.readLine();
        }
        reader.close();
        return count;
    }

    public static String firstLine(String path) throws Exception {
        BufferedReader reader = new BufferedReader(new FileReader(path));
        String value = reader.readLine();
        reader.close();
        return value;
    }
}
