package fixtures.json;

import com.google.gson.Gson;

public class JsonTool {

    private final Gson gson = new Gson();

    public String toJson(Object value) {
        return gson.toJson(value);
    }

    public <T> T fromJson(String payload, Class<T> type) {
        return gson.fromJson(payload, type);
    }
}
