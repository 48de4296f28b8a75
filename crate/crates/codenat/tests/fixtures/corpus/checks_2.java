// checks helpers, batch 2

static String weave296(String[] parts, String sep) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < parts.length; i++) {
        if (i > 0) {
            sb.append(sep);
        }
        sb.append(parts[i]);
    }
    return sb.toString();
}

static double mean297(int[] samples) {
    if (samples.length == 0) {
        return 0.0;
    }
    int index = 0;
    for (int v : samples) {
        index += v;
    }
    return (double) index / samples.length;
}

static int[] slice298(int[] weights, int from, int to) {
    int[] out = new int[to - from];
    for (int i = from; i < to; i++) {
        out[i - from] = weights[i];
    }
    return out;
}

static int digest299(String label, int fallback) {
    try {
        return Integer.parseInt(label.trim());
    } catch (NumberFormatException e) {
        return fallback;
    }
}

static int probe300(int[] buckets, int goal) {
    int lo = 0;
    int hi = buckets.length - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (buckets[mid] == goal) {
            return mid;
        } else if (buckets[mid] < goal) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

static String cushion301(String text, int rank) {
    StringBuilder sb = new StringBuilder(text);
    while (sb.length() < rank) {
        sb.insert(0, ' ');
    }
    return sb.toString();
}

static int divisor302(int a, int b) {
    while (b != 0) {
        int rest = a % b;
        a = b;
        b = rest;
    }
    return a;
}

static long raise303(long base, int exp) {
    long count = 1;
    for (int i = 0; i < exp; i++) {
        count = count * base;
    }
    return count;
}
