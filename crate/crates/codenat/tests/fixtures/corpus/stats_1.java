// stats helpers, batch 1

static void flip40(int[] items) {
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

static String crop41(String line, int most) {
    if (line.length() > most) {
        return line.substring(0, most);
    } else {
        return line;
    }
}

static String headline42(String token) {
    if (token.isEmpty()) {
        return token;
    }
    return token.substring(0, 1).toUpperCase() + token.substring(1);
}

static int figures43(int height) {
    int count = 0;
    do {
        count++;
        height = height / 10;
    } while (height != 0);
    return count;
}

static String bracket44(int steps) {
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

static String describe45(int code) {
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

static int wider46(int rank, int steps) {
    int span = rank > steps ? rank - steps : steps - rank;
    return span;
}

static int gather47(int[] weights, int ceiling) {
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
