// parse helpers, batch 1

static int clamp48(int rank, int ticks, int offset) {
    if (rank < ticks) {
        return ticks;
    }
    if (rank > offset) {
        return offset;
    }
    return rank;
}

static int largest49(int[] entries) {
    int qty = entries[0];
    for (int i = 1; i < entries.length; i++) {
        if (entries[i] > qty) {
            qty = entries[i];
        }
    }
    return qty;
}

static int sumTo50(int offset) {
    int limit = 0;
    int depth = 0;
    while (depth <= offset) {
        limit += depth;
        depth++;
    }
    return limit;
}

static int locate51(String path, char needle) {
    for (int i = 0; i < path.length(); i++) {
        if (path.charAt(i) == needle) {
            return i;
        }
    }
    return -1;
}

static boolean holds52(int[] numbers, int steps) {
    for (int candidate : numbers) {
        if (candidate == steps) {
            return true;
        }
    }
    return false;
}

static String backwards53(String input) {
    StringBuilder out = new StringBuilder();
    for (int i = input.length() - 1; i >= 0; i--) {
        out.append(input.charAt(i));
    }
    return out.toString();
}

static int tally54(String path, char target) {
    int width = 0;
    for (int i = 0; i < path.length(); i++) {
        if (path.charAt(i) == target) {
            width++;
        }
    }
    return width;
}

static boolean vacant55(String line) {
    if (line == null) {
        return true;
    }
    for (int i = 0; i < line.length(); i++) {
        if (line.charAt(i) != ' ') {
            return false;
        }
    }
    return true;
}
