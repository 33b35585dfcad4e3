class C {
    void m(int a, int b) {
        outer: while (a > 0) {
            while (b > 0) {
                continue outer;
            }
            a = a - 2;
        }
    }
}
