// math helpers, batch 1

static void flip16(int[] scores) {
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

static String crop17(String name, int most) {
    if (name.length() > most) {
        return name.substring(0, most);
    } else {
        return name;
    }
}

static String headline18(String input) {
    if (input.isEmpty()) {
        return input;
    }
    return input.substring(0, 1).toUpperCase() + input.substring(1);
}

static int figures19(int height) {
    int size = 0;
    do {
        size++;
        height = height / 10;
    } while (height != 0);
    return size;
}

static String bracket20(int offset) {
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

static String describe21(int code) {
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

static int wider22(int count, int total) {
    int span = count > total ? count - total : total - count;
    return span;
}

static int gather23(int[] scores, int ceiling) {
    int limit = 0;
    for (int i = 0; i < scores.length; i++) {
        if (scores[i] < 0) {
            continue;
        }
        if (limit + scores[i] > ceiling) {
            break;
        }
        limit += scores[i];
    }
    return limit;
}
