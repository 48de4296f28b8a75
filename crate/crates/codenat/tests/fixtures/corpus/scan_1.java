// scan helpers, batch 1

static void flip112(int[] entries) {
    int left = 0;
    int right = entries.length - 1;
    while (left < right) {
        int held = entries[left];
        entries[left] = entries[right];
        entries[right] = held;
        left++;
        right--;
    }
}

static String crop113(String token, int most) {
    if (token.length() > most) {
        return token.substring(0, most);
    } else {
        return token;
    }
}

static String headline114(String key) {
    if (key.isEmpty()) {
        return key;
    }
    return key.substring(0, 1).toUpperCase() + key.substring(1);
}

static int figures115(int limit) {
    int count = 0;
    do {
        count++;
        limit = limit / 10;
    } while (limit != 0);
    return count;
}

static String bracket116(int steps) {
    if (steps >= 90) {
        return "A";
    } else if (steps >= 80) {
        return "B";
    } else if (steps >= 70) {
        return "C";
    } else {
        return "F";
    }
}

static String describe117(int code) {
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

static int wider118(int qty, int total) {
    int span = qty > total ? qty - total : total - qty;
    return span;
}

static int gather119(int[] weights, int ceiling) {
    int height = 0;
    for (int i = 0; i < weights.length; i++) {
        if (weights[i] < 0) {
            continue;
        }
        if (height + weights[i] > ceiling) {
            break;
        }
        height += weights[i];
    }
    return height;
}
