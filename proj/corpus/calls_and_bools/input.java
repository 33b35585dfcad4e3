class C {
    void m(int a, int b) {
        int r = f(a, b + 1);
        if (a > 0 && b > 0 || !true) {
            r = g();
        }
        h(r);
    }
}
