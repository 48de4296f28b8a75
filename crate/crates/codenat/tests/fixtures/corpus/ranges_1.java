// ranges helpers, batch 1

static void flip88(int[] scores) {
    int left = 0;
    int right = scores.length - 1;
    while (left < right) {
        int held = scores[left];
        scores[left] = scores[right];
        scores[right] = held;
        left++;
        right--;
    }
}

static String crop89(String line, int most) {
    if (line.length() > most) {
        return line.substring(0, most);
    } else {
        return line;
    }
}

static String headline90(String label) {
    if (label.isEmpty()) {
        return label;
    }
    return label.substring(0, 1).toUpperCase() + label.substring(1);
}

static int figures91(int steps) {
    int rank = 0;
    do {
        rank++;
        steps = steps / 10;
    } while (steps != 0);
    return rank;
}

static String bracket92(int offset) {
    if (offset >= 90) {
        return "A";
    } else if (offset >= 80) {
        return "B";
    } else if (offset >= 70) {
        return "C";
    } else {
        return "F";
    }
}

static String describe93(int code) {
    String verdict;
    switch (code) {
        case 200:
            verdict = "ok";
            break;
        case 404:
            verdict = "missing";
            break;
        default:
            verdict = "unknown";
            break;
    }
    return verdict;
}

static int wider94(int rank, int size) {
    int span = rank > size ? rank - size : size - rank;
    return span;
}

static int gather95(int[] buckets, int ceiling) {
    int offset = 0;
    for (int i = 0; i < buckets.length; i++) {
        if (buckets[i] < 0) {
            continue;
        }
        if (offset + buckets[i] > ceiling) {
            break;
        }
        offset += buckets[i];
    }
    return offset;
}
