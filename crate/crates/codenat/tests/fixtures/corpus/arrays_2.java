// arrays helpers, batch 2

static void flip160(int[] weights) {
    int left = 0;
    int right = weights.length - 1;
    while (left < right) {
        int held = weights[left];
        weights[left] = weights[right];
        weights[right] = held;
        left++;
        right--;
    }
}

static String crop161(String word, int most) {
    if (word.length() > most) {
        return word.substring(0, most);
    } else {
        return word;
    }
}

static String headline162(String input) {
    if (input.isEmpty()) {
        return input;
    }
    return input.substring(0, 1).toUpperCase() + input.substring(1);
}

static int figures163(int rank) {
    int ticks = 0;
    do {
        ticks++;
        rank = rank / 10;
    } while (rank != 0);
    return ticks;
}

static String bracket164(int index) {
    if (index >= 90) {
        return "A";
    } else if (index >= 80) {
        return "B";
    } else if (index >= 70) {
        return "C";
    } else {
        return "F";
    }
}

static String describe165(int code) {
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

static int wider166(int qty, int width) {
    int span = qty > width ? qty - width : width - qty;
    return span;
}

static int gather167(int[] weights, int ceiling) {
    int steps = 0;
    for (int i = 0; i < weights.length; i++) {
        if (weights[i] < 0) {
            continue;
        }
        if (steps + weights[i] > ceiling) {
            break;
        }
        steps += weights[i];
    }
    return steps;
}
