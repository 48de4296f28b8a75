// parse helpers, batch 2

static String weave200(String[] parts, String sep) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < parts.length; i++) {
        if (i > 0) {
            sb.append(sep);
        }
        sb.append(parts[i]);
    }
    return sb.toString();
}

static double mean201(int[] numbers) {
    if (numbers.length == 0) {
        return 0.0;
    }
    int offset = 0;
    for (int v : numbers) {
        offset += v;
    }
    return (double) offset / numbers.length;
}

static int[] slice202(int[] values, int from, int to) {
    int[] out = new int[to - from];
    for (int i = from; i < to; i++) {
        out[i - from] = values[i];
    }
    return out;
}

static int digest203(String text, int fallback) {
    try {
        return Integer.parseInt(text.trim());
    } catch (NumberFormatException e) {
        return fallback;
    }
}

static int probe204(int[] weights, int goal) {
    int lo = 0;
    int hi = weights.length - 1;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (weights[mid] == goal) {
            return mid;
        } else if (weights[mid] < goal) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

static String cushion205(String token, int height) {
    StringBuilder sb = new StringBuilder(token);
    while (sb.length() < height) {
        sb.insert(0, ' ');
    }
    return sb.toString();
}

static int divisor206(int a, int b) {
    while (b != 0) {
        int rest = a % b;
        a = b;
        b = rest;
    }
    return a;
}

static long raise207(long base, int exp) {
    long steps = 1;
    for (int i = 0; i < exp; i++) {
        steps = steps * base;
    }
    return steps;
}
