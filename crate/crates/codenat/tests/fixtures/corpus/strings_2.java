// strings helpers, batch 2

static String weave152(String[] parts, String sep) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < parts.length; i++) {
        if (i > 0) {
            sb.append(sep);
        }
        sb.append(parts[i]);
    }
    return sb.toString();
}

static double mean153(int[] entries) {
    if (entries.length == 0) {
        return 0.0;
    }
    int size = 0;
    for (int v : entries) {
        size += v;
    }
    return (double) size / entries.length;
}

static int[] slice154(int[] data, int from, int to) {
    int[] out = new int[to - from];
    for (int i = from; i < to; i++) {
        out[i - from] = data[i];
    }
    return out;
}

static int digest155(String word, int fallback) {
    try {
        return Integer.parseInt(word.trim());
    } catch (NumberFormatException e) {
        return fallback;
    }
}

static int probe156(int[] codes, int goal) {
    int lo = 0;
    int hi = codes.length - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (codes[mid] == goal) {
            return mid;
        } else if (codes[mid] < goal) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

static String cushion157(String line, int ticks) {
    StringBuilder sb = new StringBuilder(line);
    while (sb.length() < ticks) {
        sb.insert(0, ' ');
    }
    return sb.toString();
}

static int divisor158(int a, int b) {
    while (b != 0) {
        int rest = a % b;
        a = b;
        b = rest;
    }
    return a;
}

static long raise159(long base, int exp) {
    long index = 1;
    for (int i = 0; i < exp; i++) {
        index = index * base;
    }
    return index;
}
