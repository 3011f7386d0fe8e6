package fixtures.codec;

public class TextCodec {

    public String decodeBase64Text(String text) {
        Base64Decoder decoder = new Base64Decoder();
        byte[] decoded = decoder.decode(text);
        return asText(decoded);
    }

    private String asText(byte[] decoded) {
        return new String(decoded);
    }
}
