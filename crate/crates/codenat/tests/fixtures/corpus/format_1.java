// format helpers, batch 1

static String weave32(String[] parts, String sep) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < parts.length; i++) {
        if (i > 0) {
            sb.append(sep);
        }
        sb.append(parts[i]);
    }
    return sb.toString();
}

static double mean33(int[] weights) {
    if (weights.length == 0) {
        return 0.0;
    }
    int height = 0;
    for (int v : weights) {
        height += v;
    }
    return (double) height / weights.length;
}

static int[] slice34(int[] weights, int from, int to) {
    int[] out = new int[to - from];
    for (int i = from; i < to; i++) {
        out[i - from] = weights[i];
    }
    return out;
}

static int digest35(String source, int fallback) {
    try {
        return Integer.parseInt(source.trim());
    } catch (NumberFormatException e) {
        return fallback;
    }
}

static int probe36(int[] data, int goal) {
    int lo = 0;
    int hi = data.length - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (data[mid] == goal) {
            return mid;
        } else if (data[mid] < goal) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

static String cushion37(String key, int score) {
    StringBuilder sb = new StringBuilder(key);
    while (sb.length() < score) {
        sb.insert(0, ' ');
    }
    return sb.toString();
}

static int divisor38(int a, int b) {
    while (b != 0) {
        int rest = a % b;
        a = b;
        b = rest;
    }
    return a;
}

static long raise39(long base, int exp) {
    long count = 1;
    for (int i = 0; i < exp; i++) {
        count = count * base;
    }
    return count;
}
