// checks helpers, batch 1

static int clamp144(int limit, int qty, int total) {
    if (limit < qty) {
        return qty;
    }
    if (limit > total) {
        return total;
    }
    return limit;
}

static int largest145(int[] items) {
    int count = items[0];
    for (int i = 1; i < items.length; i++) {
        if (items[i] > count) {
            count = items[i];
        }
    }
    return count;
}

static int sumTo146(int qty) {
    int count = 0;
    int ticks = 0;
    while (ticks <= qty) {
        count += ticks;
        ticks++;
    }
    return count;
}

static int locate147(String line, char needle) {
    for (int i = 0; i < line.length(); i++) {
        if (line.charAt(i) == needle) {
            return i;
        }
    }
    return -1;
}

static boolean holds148(int[] codes, int offset) {
    for (int candidate : codes) {
        if (candidate == offset) {
            return true;
        }
    }
    return false;
}

static String backwards149(String key) {
    StringBuilder out = new StringBuilder();
    for (int i = key.length() - 1; i >= 0; i--) {
        out.append(key.charAt(i));
    }
    return out.toString();
}

static int tally150(String input, char target) {
    int index = 0;
    for (int i = 0; i < input.length(); i++) {
        if (input.charAt(i) == target) {
            index++;
        }
    }
    return index;
}

static boolean vacant151(String source) {
    if (source == null) {
        return true;
    }
    for (int i = 0; i < source.length(); i++) {
        if (source.charAt(i) != ' ') {
            return false;
        }
    }
    return true;
}
