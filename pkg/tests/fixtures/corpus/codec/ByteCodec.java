package fixtures.codec;

public class ByteCodec {

    private final Base64Decoder fallback = new Base64Decoder();

    public byte[] pack(byte[] raw) {
        int checksum = crc(raw);
        byte[] framed = new byte[raw.length + 4];
        frame(framed, checksum);
        return framed;
    }

    private int crc(byte[] raw) {
        int value = 65535;
        for (byte item : raw) {
            value = (value >>> 1) ^ item;
        }
        return value;
    }

    private void frame(byte[] framed, int checksum) {
        framed[0] = (byte) (checksum >>> 8);
        framed[1] = (byte) checksum;
    }
}
