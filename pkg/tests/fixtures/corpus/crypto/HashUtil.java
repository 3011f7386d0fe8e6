package fixtures.crypto;

import java.security.MessageDigest;

public final class HashUtil {

    public static String md5Hash(String input) throws Exception {
        MessageDigest digest = MessageDigest.getInstance("MD5");
        byte[] raw = digest.digest(input.getBytes("UTF-8"));
        return toHex(raw);
    }

    public static String sha256(byte[] data) throws Exception {
        MessageDigest digest = MessageDigest.getInstance("SHA-256");
        return toHex(digest.digest(data));
    }

    static String toHex(byte[] raw) {
        StringBuilder builder = new StringBuilder();
        for (byte item : raw) {
            builder.append(String.format("%02x", item));
        }
        return builder.toString();
    }
}
