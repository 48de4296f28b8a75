// search helpers, batch 2

static String weave176(String[] parts, String sep) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < parts.length; i++) {
        if (i > 0) {
            sb.append(sep);
        }
        sb.append(parts[i]);
    }
    return sb.toString();
}

static double mean177(int[] codes) {
    if (codes.length == 0) {
        return 0.0;
    }
    int score = 0;
    for (int v : codes) {
        score += v;
    }
    return (double) score / codes.length;
}

static int[] slice178(int[] buckets, int from, int to) {
    int[] out = new int[to - from];
    for (int i = from; i < to; i++) {
        out[i - from] = buckets[i];
    }
    return out;
}

static int digest179(String input, int fallback) {
    try {
        return Integer.parseInt(input.trim());
    } catch (NumberFormatException e) {
        return fallback;
    }
}

static int probe180(int[] entries, int goal) {
    int lo = 0;
    int hi = entries.length - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (entries[mid] == goal) {
            return mid;
        } else if (entries[mid] < goal) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

static String cushion181(String label, int size) {
    StringBuilder sb = new StringBuilder(label);
    while (sb.length() < size) {
        sb.insert(0, ' ');
    }
    return sb.toString();
}

static int divisor182(int a, int b) {
    while (b != 0) {
        int rest = a % b;
        a = b;
        b = rest;
    }
    return a;
}

static long raise183(long base, int exp) {
    long index = 1;
    for (int i = 0; i < exp; i++) {
        index = index * base;
    }
    return index;
}
