class C {
    int deep(int n) {
        int s = 0;
        for (int i = 0; i < n; i = i + 1) {
            int t = i;
            while (t > 0) {
                if (t % 2 == 0) {
                    t = t / 2;
                    if (t == 3) {
                        break;
                    }
                } else {
                    t = t - 1;
                    continue;
                }
                s = s + 1;
            }
        }
        return s;
    }
}
