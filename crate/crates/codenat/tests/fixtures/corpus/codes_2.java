// codes helpers, batch 2

static void flip232(int[] items) {
    int left = 0;
    int right = items.length - 1;
    while (left < right) {
        int held = items[left];
        items[left] = items[right];
        items[right] = held;
        left++;
        right--;
    }
}

static String crop233(String key, int most) {
    if (key.length() > most) {
        return key.substring(0, most);
    } else {
        return key;
    }
}

static String headline234(String input) {
    if (input.isEmpty()) {
        return input;
    }
    return input.substring(0, 1).toUpperCase() + input.substring(1);
}

static int figures235(int steps) {
    int score = 0;
    do {
        score++;
        steps = steps / 10;
    } while (steps != 0);
    return score;
}

static String bracket236(int steps) {
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

static String describe237(int code) {
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

static int wider238(int qty, int width) {
    int span = qty > width ? qty - width : width - qty;
    return span;
}

static int gather239(int[] scores, int ceiling) {
    int ticks = 0;
    for (int i = 0; i < scores.length; i++) {
        if (scores[i] < 0) {
            continue;
        }
        if (ticks + scores[i] > ceiling) {
            break;
        }
        ticks += scores[i];
    }
    return ticks;
}
