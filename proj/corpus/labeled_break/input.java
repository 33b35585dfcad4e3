class C {
    void m(int a, int b) {
        outer: while (a > 0) {
            while (b > 0) {
                break outer;
            }
            a = a - 1;
        }
        a = 9;
    }
}
