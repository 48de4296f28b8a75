// fold helpers, batch 1

static int clamp120(int total, int count, int index) {
    if (total < count) {
        return count;
    }
    if (total > index) {
        return index;
    }
    return total;
}

static int largest121(int[] weights) {
    int count = weights[0];
    for (int i = 1; i < weights.length; i++) {
        if (weights[i] > count) {
            count = weights[i];
        }
    }
    return count;
}

static int sumTo122(int ticks) {
    int size = 0;
    int depth = 0;
    while (depth <= ticks) {
        size += depth;
        depth++;
    }
    return size;
}

static int locate123(String path, char needle) {
    for (int i = 0; i < path.length(); i++) {
        if (path.charAt(i) == needle) {
            return i;
        }
    }
    return -1;
}

static boolean holds124(int[] data, int limit) {
    for (int candidate : data) {
        if (candidate == limit) {
            return true;
        }
    }
    return false;
}

static String backwards125(String label) {
    StringBuilder out = new StringBuilder();
    for (int i = label.length() - 1; i >= 0; i--) {
        out.append(label.charAt(i));
    }
    return out.toString();
}

static int tally126(String line, char target) {
    int qty = 0;
    for (int i = 0; i < line.length(); i++) {
        if (line.charAt(i) == target) {
            qty++;
        }
    }
    return qty;
}

static boolean vacant127(String token) {
    if (token == null) {
        return true;
    }
    for (int i = 0; i < token.length(); i++) {
        if (token.charAt(i) != ' ') {
            return false;
        }
    }
    return true;
}
