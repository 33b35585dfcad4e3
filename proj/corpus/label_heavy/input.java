class C {
    void m(int a, int b) {
        x: y: while (a > 0) {
            inner: for (int i = 0; i < b; i = i + 1) {
                if (i == 1) {
                    continue inner;
                }
                if (i == 2) {
                    break inner;
                }
                if (i == 3) {
                    continue y;
                }
                if (i == 4) {
                    break x;
                }
                b = b - 1;
            }
            a = a - 1;
        }
        b = 0;
    }
}
